//! Exact arithmetic in `Q(zeta_n)` with integer coefficients, canonical modulo `Phi_n`.

use std::fmt;

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd] / den[dd];
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quot
}

/// Coefficients of `Phi_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    let mut poly = vec![0i64; n + 1];
    poly[0] = -1;
    poly[n] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        poly = poly_div_exact(&poly, &cyclotomic_polynomial(d));
    }
    poly
}

/// The field `Q(zeta_n)`; elements are coefficient vectors of length `phi(n)`.
#[derive(Debug, Clone)]
pub struct CyclotomicField {
    n: usize,
    phi: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic(pub Vec<i64>);

impl CyclotomicField {
    pub fn new(n: usize) -> Self {
        CyclotomicField { n, phi: cyclotomic_polynomial(n) }
    }

    pub fn conductor(&self) -> usize {
        self.n
    }

    fn dim(&self) -> usize {
        self.phi.len() - 1
    }

    fn reduce(&self, mut a: Vec<i64>) -> Cyclotomic {
        let d = self.dim();
        for deg in (d..a.len()).rev() {
            let c = a[deg];
            if c != 0 {
                for (j, &f) in self.phi.iter().enumerate() {
                    a[deg - d + j] -= c * f;
                }
            }
        }
        a.resize(d, 0);
        Cyclotomic(a)
    }

    /// `sum mult * zeta_n^exponent`.
    pub fn from_powers(&self, terms: impl IntoIterator<Item = (usize, i64)>) -> Cyclotomic {
        let mut a = vec![0; self.n.max(self.dim())];
        for (e, m) in terms {
            a[e % self.n] += m;
        }
        self.reduce(a)
    }

    pub fn integer(&self, k: i64) -> Cyclotomic {
        self.from_powers([(0, k)])
    }

    pub fn add(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        Cyclotomic(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn scale(&self, a: &Cyclotomic, k: i64) -> Cyclotomic {
        Cyclotomic(a.0.iter().map(|x| x * k).collect())
    }

    pub fn mul(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        let mut prod = vec![0; 2 * self.dim()];
        for (i, &x) in a.0.iter().enumerate().filter(|(_, x)| **x != 0) {
            for (j, &y) in b.0.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        self.reduce(prod)
    }

    /// The automorphism `zeta -> zeta^u`, `gcd(u, n) = 1`.
    pub fn galois(&self, a: &Cyclotomic, u: u64) -> Cyclotomic {
        let u = (u % self.n as u64) as usize;
        self.from_powers(a.0.iter().enumerate().map(|(i, &c)| (i * u, c)))
    }

    pub fn conj(&self, a: &Cyclotomic) -> Cyclotomic {
        self.galois(a, self.n as u64 - 1)
    }

    pub fn as_integer(&self, a: &Cyclotomic) -> Option<i64> {
        a.0.iter().skip(1).all(|&c| c == 0).then(|| a.0.first().copied().unwrap_or(0))
    }

    pub fn display<'a>(&'a self, a: &'a Cyclotomic) -> impl fmt::Display + 'a {
        CyclotomicDisplay { field: self, value: a }
    }
}

struct CyclotomicDisplay<'a> {
    field: &'a CyclotomicField,
    value: &'a Cyclotomic,
}

impl fmt::Display for CyclotomicDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(k) = self.field.as_integer(self.value) {
            return write!(f, "{k}");
        }
        let mut first = true;
        for (i, &c) in self.value.0.iter().enumerate().filter(|(_, c)| **c != 0) {
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            let coeff = if mag == 1 && i > 0 { String::new() } else { mag.to_string() };
            let sep = if !coeff.is_empty() && i > 0 { "*" } else { "" };
            let power = match i {
                0 => String::new(),
                1 => format!("E({})", self.field.n),
                _ => format!("E({})^{i}", self.field.n),
            };
            write!(f, "{sign}{coeff}{sep}{power}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(105).len() - 1, 48);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        let k = CyclotomicField::new(5);
        assert_eq!(k.from_powers((0..5).map(|i| (i, 1))), k.integer(0));
        let k = CyclotomicField::new(3);
        let w = k.from_powers([(1, 1)]);
        assert_eq!(k.mul(&w, &k.conj(&w)), k.integer(1));
        assert_eq!(k.add(&w, &k.conj(&w)), k.integer(-1));
        assert_eq!(k.display(&w).to_string(), "E(3)");
        assert_eq!(k.display(&k.scale(&w, -2)).to_string(), "-2*E(3)");
    }
}
