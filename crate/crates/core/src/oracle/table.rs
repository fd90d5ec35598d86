//! Conjugacy classes and character tables by the Dixon-Schneider method.

use std::collections::BTreeSet;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::cyclotomic::{Cyclotomic, CyclotomicField};
use super::{ConcreteGroup, OracleError};

#[derive(Debug, Clone)]
pub struct Classes {
    /// Class index of every element.
    pub of_element: Vec<usize>,
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub orders: Vec<usize>,
}

/// Classes ordered by (element order, size, smallest member); the identity class is first.
pub fn conjugacy_classes(g: &ConcreteGroup) -> Classes {
    let gens = g.generators();
    let mut raw: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; g.order()];
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        seen[x] = true;
        let mut class = vec![x];
        let mut i = 0;
        while i < class.len() {
            for &s in &gens {
                let y = g.mul(g.mul(g.inv(s), class[i]), s);
                if !seen[y] {
                    seen[y] = true;
                    class.push(y);
                }
            }
            i += 1;
        }
        class.sort_unstable();
        raw.push(class);
    }
    let mut keyed: Vec<(usize, usize, usize, Vec<usize>)> =
        raw.into_iter().map(|c| (g.element_order(c[0]), c.len(), c[0], c)).collect();
    keyed.sort();
    let mut of_element = vec![0; g.order()];
    for (k, (_, _, _, members)) in keyed.iter().enumerate() {
        for &x in members {
            of_element[x] = k;
        }
    }
    Classes {
        of_element,
        reps: keyed.iter().map(|c| c.2).collect(),
        sizes: keyed.iter().map(|c| c.1).collect(),
        orders: keyed.iter().map(|c| c.0).collect(),
    }
}

#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub group: String,
    pub order: usize,
    pub exponent: usize,
    pub classes: Classes,
    /// Class of the inverse of each class.
    pub inverse_class: Vec<usize>,
    pub field: CyclotomicField,
    /// Rows sorted by degree; columns follow `classes`.
    pub rows: Vec<Vec<Cyclotomic>>,
}

impl CharacterTable {
    pub fn degrees(&self) -> Vec<u64> {
        self.rows.iter().map(|r| self.field.as_integer(&r[0]).unwrap_or(0) as u64).collect()
    }

    pub fn count_3prime(&self) -> usize {
        self.degrees().iter().filter(|d| *d % 3 != 0).count()
    }

    /// Units `u` modulo `modulus` (coprime to it) with `chi^{sigma_u} = chi`, for each row.
    pub fn fields_of_values(&self, modulus: u64) -> Vec<BTreeSet<u64>> {
        let units: Vec<u64> = (1..=modulus).filter(|u| u.gcd(&modulus) == 1).map(|u| u % modulus).collect();
        self.rows
            .iter()
            .map(|row| {
                units.iter().copied().filter(|&u| row.iter().all(|v| self.field.galois(v, u) == *v)).collect()
            })
            .collect()
    }

    pub fn inner_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Option<i64> {
        let mut acc = self.field.integer(0);
        for (k, &size) in self.classes.sizes.iter().enumerate() {
            let term = self.field.mul(&a[k], &self.field.conj(&b[k]));
            acc = self.field.add(&acc, &self.field.scale(&term, size as i64));
        }
        let total = self.field.as_integer(&acc)?;
        (total % self.order as i64 == 0).then(|| total / self.order as i64)
    }

    /// Exact row orthogonality and `sum deg^2 = |G|`.
    pub fn check_orthogonality(&self) -> bool {
        let squares: u64 = self.degrees().iter().map(|d| d * d).sum();
        squares == self.order as u64
            && self.rows.len() == self.classes.reps.len()
            && (0..self.rows.len()).all(|i| {
                (i..self.rows.len()).all(|j| self.inner_product(&self.rows[i], &self.rows[j]) == Some(i64::from(i == j)))
            })
    }

    pub fn write_csv<W: std::io::Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "# mckay oracle-table v1 group={} order={}", self.group, self.order)?;
        let mut w = csv::Writer::from_writer(out);
        let header: Vec<String> = std::iter::once("class".to_string())
            .chain(self.classes.reps.iter().enumerate().map(|(k, _)| format!("{}{}", self.classes.orders[k], k)))
            .collect();
        w.write_record(&header)?;
        let sizes: Vec<String> =
            std::iter::once("size".to_string()).chain(self.classes.sizes.iter().map(|s| s.to_string())).collect();
        w.write_record(&sizes)?;
        for (i, row) in self.rows.iter().enumerate() {
            let rec: Vec<String> = std::iter::once(format!("X{}", i + 1))
                .chain(row.iter().map(|v| self.field.display(v).to_string()))
                .collect();
            w.write_record(&rec)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, m: u64) -> u64 {
    pow_mod(a, m - 2, m)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

const MIN_MODULUS: u64 = 100_000;

/// Smallest prime `l = 1 mod exponent` with `l > 2 sqrt(order)` and `l > MIN_MODULUS`.
pub fn dixon_prime(exponent: u64, order: u64) -> u64 {
    let bound = (2.0 * (order as f64).sqrt()).ceil() as u64;
    let mut l = exponent + 1;
    while !(l > bound && l > MIN_MODULUS && is_prime(l)) {
        l += exponent;
    }
    l
}

fn primitive_root(l: u64) -> u64 {
    let factors = prime_factors(l - 1);
    (2..l).find(|&g| factors.iter().all(|&f| pow_mod(g, (l - 1) / f, l) != 1)).expect("prime modulus")
}

/// Characteristic polynomial (lowest degree first, monic) via Hessenberg reduction mod `l`.
fn charpoly(mut a: Vec<Vec<u64>>, l: u64) -> Vec<u64> {
    let n = a.len();
    for i in 1..n {
        let Some(piv) = (i..n).find(|&k| a[k][i - 1] != 0) else { continue };
        a.swap(piv, i);
        for row in a.iter_mut() {
            row.swap(piv, i);
        }
        let inv = inv_mod(a[i][i - 1], l);
        for k in i + 1..n {
            let u = a[k][i - 1] * inv % l;
            if u == 0 {
                continue;
            }
            for j in 0..n {
                a[k][j] = (a[k][j] + l - u * a[i][j] % l) % l;
            }
            for row in a.iter_mut() {
                row[i] = (row[i] + u * row[k]) % l;
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        // p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_i
        let pk = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (d, &c) in pk.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % l;
            next[d] = (next[d] + l - a[k][k] * c % l) % l;
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = prod * a[i + 1][i] % l;
            let coeff = a[i][k] * prod % l;
            if coeff == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = (next[d] + l - coeff * c % l) % l;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("nonempty")
}

/// A nonzero vector in the kernel of `a`, if the kernel is one-dimensional.
fn kernel_line(mut a: Vec<Vec<u64>>, l: u64) -> Option<Vec<u64>> {
    let n = a.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| a[r][col] != 0) else { continue };
        a.swap(p, row);
        let inv = inv_mod(a[row][col], l);
        for x in a[row].iter_mut() {
            *x = *x * inv % l;
        }
        for r in 0..n {
            if r != row && a[r][col] != 0 {
                let f = a[r][col];
                for c in 0..n {
                    a[r][c] = (a[r][c] + l - f * a[row][c] % l) % l;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if pivots.len() + 1 != n {
        return None;
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut v = vec![0u64; n];
    v[free] = 1;
    for (r, &c) in pivots.iter().enumerate() {
        v[c] = (l - a[r][free]) % l;
    }
    Some(v)
}

pub fn character_table(g: &ConcreteGroup) -> Result<CharacterTable, OracleError> {
    let classes = conjugacy_classes(g);
    let r = classes.reps.len();
    let order = g.order() as u64;
    let exponent = classes.orders.iter().fold(1usize, |acc, &o| acc.lcm(&o));
    let l = dixon_prime(exponent as u64, order);

    // a[l][j][k] = #{x in C_j : x^{-1} z_l in C_k}
    let structure: Vec<Vec<Vec<u64>>> = classes
        .reps
        .par_iter()
        .map(|&z| {
            let mut counts = vec![vec![0u64; r]; r];
            for x in 0..g.order() {
                let y = g.mul(g.inv(x), z);
                counts[classes.of_element[x]][classes.of_element[y]] += 1;
            }
            counts
        })
        .collect();

    let inverse_class: Vec<usize> = classes.reps.iter().map(|&x| classes.of_element[g.inv(x)]).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x006d_636b_6179);
    let omegas = (0..32)
        .find_map(|_| {
            let coeffs: Vec<u64> = (0..r).map(|_| rng.gen_range(0..l)).collect();
            let m: Vec<Vec<u64>> = (0..r)
                .map(|k| {
                    (0..r)
                        .map(|zl| (0..r).fold(0, |acc, j| (acc + coeffs[j] * structure[zl][j][k]) % l))
                        .collect()
                })
                .collect();
            let poly = charpoly(m.clone(), l);
            let roots: Vec<u64> = (0..l)
                .filter(|&x| poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % l) == 0)
                .take(r + 1)
                .collect();
            if roots.len() != r {
                return None;
            }
            roots
                .into_iter()
                .map(|lambda| {
                    let mut shifted = m.clone();
                    for (i, row) in shifted.iter_mut().enumerate() {
                        row[i] = (row[i] + l - lambda) % l;
                    }
                    let v = kernel_line(shifted, l)?;
                    let inv = inv_mod(*v.first().filter(|x| **x != 0)?, l);
                    Some(v.iter().map(|x| x * inv % l).collect::<Vec<u64>>())
                })
                .collect::<Option<Vec<_>>>()
        })
        .ok_or_else(|| OracleError::TableFailed(format!("{}: eigenvalues never separated", g.name)))?;

    let z = pow_mod(primitive_root(l), (l - 1) / exponent as u64, l);
    let field = CyclotomicField::new(exponent);
    let power_classes: Vec<Vec<usize>> = classes
        .reps
        .iter()
        .zip(&classes.orders)
        .map(|(&x, &o)| {
            let mut out = vec![0];
            let mut y = 0;
            for _ in 1..o {
                y = g.mul(y, x);
                out.push(classes.of_element[y]);
            }
            out
        })
        .collect();
    let max_degree = (order as f64).sqrt() as u64 + 1;
    let mut rows = Vec::with_capacity(r);
    for omega in omegas {
        let s = (0..r).fold(0, |acc, k| {
            (acc + omega[k] * omega[inverse_class[k]] % l * inv_mod(classes.sizes[k] as u64, l)) % l
        });
        let target = order % l * inv_mod(s, l) % l;
        let degree = (1..=max_degree)
            .find(|d| d * d % l == target)
            .ok_or_else(|| OracleError::TableFailed(format!("{}: no degree for eigenvector", g.name)))?;
        let modular: Vec<u64> =
            (0..r).map(|k| omega[k] * degree % l * inv_mod(classes.sizes[k] as u64, l) % l).collect();
        let mut row = Vec::with_capacity(r);
        for k in 0..r {
            let o = classes.orders[k];
            let zeta = pow_mod(z, (exponent / o) as u64, l);
            let inv_o = inv_mod(o as u64, l);
            let mut terms = Vec::new();
            for a in 0..o {
                let mut acc = 0;
                for (t, &c) in power_classes[k].iter().enumerate() {
                    let root = pow_mod(zeta, ((o - a) * t % o) as u64, l);
                    acc = (acc + modular[c] * root) % l;
                }
                let mult = acc * inv_o % l;
                if mult > degree {
                    return Err(OracleError::TableFailed(format!("{}: eigenvalue multiplicity out of range", g.name)));
                }
                terms.push((a * (exponent / o), mult as i64));
            }
            row.push(field.from_powers(terms));
        }
        rows.push((degree, row));
    }
    rows.sort();
    let table = CharacterTable {
        group: g.name.clone(),
        order: g.order(),
        exponent,
        classes,
        inverse_class,
        field,
        rows: rows.into_iter().map(|(_, row)| row).collect(),
    };
    if !table.check_orthogonality() {
        return Err(OracleError::TableFailed(format!("{}: orthogonality fails", g.name)));
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{build_group, GroupSpec, DEFAULT_CAP};
    use crate::partition::{char_degree, partitions};

    fn table(s: &str) -> CharacterTable {
        character_table(&build_group(s.parse().unwrap(), DEFAULT_CAP).unwrap()).unwrap()
    }

    #[test]
    fn s3_classes() {
        let g = build_group(GroupSpec::Sym(3), DEFAULT_CAP).unwrap();
        assert_eq!(conjugacy_classes(&g).sizes, vec![1, 3, 2]);
        let gl = build_group(GroupSpec::Gl(2, 2), DEFAULT_CAP).unwrap();
        assert_eq!(conjugacy_classes(&gl).sizes, vec![1, 3, 2]);
    }

    #[test]
    fn cyclic_three() {
        let g = ConcreteGroup::generate("C_3", 3, &[vec![1u16, 2, 0].into()], DEFAULT_CAP).unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 1]);
        assert_eq!(t.classes.sizes, vec![1, 1, 1]);
        let nontrivial = t.rows.iter().filter(|r| t.field.as_integer(&r[1]).is_none()).count();
        assert_eq!(nontrivial, 2);
        assert_eq!(t.fields_of_values(3).iter().filter(|s| s.len() == 2).count(), 1);
    }

    #[test]
    fn symmetric_degrees_match_hook_lengths() {
        assert_eq!(table("sym:4").degrees(), vec![1, 1, 2, 3, 3]);
        for n in 1..=7 {
            let mut expected: Vec<u64> =
                partitions(n).iter().map(|l| char_degree(l).try_into().unwrap()).collect();
            expected.sort_unstable();
            assert_eq!(table(&format!("sym:{n}")).degrees(), expected, "S_{n}");
        }
    }

    #[test]
    fn matrix_group_tables() {
        assert_eq!(table("gl:2:2").degrees(), vec![1, 1, 2]);
        let gu = table("gu:2:2");
        assert_eq!(gu.order, 18);
        assert_eq!(gu.rows.len(), 9);
        assert_eq!(table("gl:2:3").degrees(), vec![1, 1, 2, 2, 2, 3, 3, 4]);
    }
}
