//! Small finite fields by lookup tables.

use super::OracleError;

/// `GF(p^k)` with elements encoded as base-`p` digit vectors of a polynomial in the generator.
#[derive(Debug, Clone)]
pub struct FiniteField {
    p: usize,
    size: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
}

fn digits(mut x: usize, p: usize, k: usize) -> Vec<usize> {
    (0..k)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn poly_mul_mod(a: &[usize], b: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let k = modulus.len();
    let mut prod = vec![0; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // x^k = -(modulus lower terms)
    for deg in (k..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (i, &m) in modulus.iter().enumerate() {
            prod[deg - k + i] = (prod[deg - k + i] + (p - m) * c) % p;
        }
    }
    prod.truncate(k);
    prod
}

impl FiniteField {
    pub fn new(q: u64) -> Result<Self, OracleError> {
        let p = crate::glgu::prime_of_power(q).ok_or(OracleError::Unsupported(format!("{q} is not a prime power")))?
            as usize;
        if q > 256 {
            return Err(OracleError::Unsupported(format!("field of order {q} too large")));
        }
        let size = q as usize;
        let k = (size as f64).log(p as f64).round() as usize;
        let add: Vec<u16> = (0..size * size)
            .map(|ab| {
                let (a, b) = (digits(ab / size, p, k), digits(ab % size, p, k));
                let s: Vec<usize> = a.iter().zip(&b).map(|(x, y)| (x + y) % p).collect();
                undigits(&s, p) as u16
            })
            .collect();
        for candidate in 0..size {
            let modulus = digits(candidate, p, k);
            let mul: Vec<u16> = (0..size * size)
                .map(|ab| {
                    let r = poly_mul_mod(&digits(ab / size, p, k), &digits(ab % size, p, k), &modulus, p);
                    undigits(&r, p) as u16
                })
                .collect();
            let domain = (1..size).all(|a| (1..size).all(|b| mul[a * size + b] != 0));
            if domain {
                return Ok(FiniteField { p, size, add, mul });
            }
        }
        unreachable!("an irreducible polynomial of every degree exists")
    }

    pub fn order(&self) -> usize {
        self.size
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.size + b as usize]
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.size + b as usize]
    }

    pub fn pow(&self, a: u16, mut e: u64) -> u16 {
        let (mut base, mut acc) = (a, 1u16);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}
