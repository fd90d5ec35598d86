//! Characters of the symmetric groups.

use std::collections::HashMap;
use std::sync::LazyLock;

use dashmap::DashMap;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partition::{partitions, partitions_inside, removable_rim_hooks, remove_rim_hook, Partition};

/// Largest `n` for which character values are guaranteed to fit the `i128` range.
pub const MAX_MN_SIZE: usize = 50;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("character values of S_{0} exceed the supported range")]
    TooLarge(usize),
    #[error("class function tables are indexed differently")]
    IndexMismatch,
    #[error("multiplicity of {mu} is {computed}, expected {expected}")]
    LemmaMismatch { mu: Partition, expected: BigUint, computed: BigUint },
}

/// A cycle type, i.e. a conjugacy class of `S_n`.
pub type CycleType = Partition;

static MN_CACHE: LazyLock<DashMap<(Partition, Vec<usize>), i128>> = LazyLock::new(DashMap::new);
static LR_CACHE: LazyLock<DashMap<(Partition, Partition, Partition), u64>> = LazyLock::new(DashMap::new);

/// `chi^lambda(sigma)` by the Murnaghan–Nakayama rule.
pub fn mn_value(lambda: &Partition, sigma: &CycleType) -> Result<i128, SymError> {
    if lambda.size() != sigma.size() {
        return Err(SymError::SizeMismatch { left: lambda.size(), right: sigma.size() });
    }
    if lambda.size() > MAX_MN_SIZE {
        return Err(SymError::TooLarge(lambda.size()));
    }
    Ok(mn_rec(lambda, sigma.parts()))
}

fn mn_rec(lambda: &Partition, cycles: &[usize]) -> i128 {
    let Some(&e) = cycles.first() else {
        return 1;
    };
    if lambda.len() == 1 {
        return 1;
    }
    let key = (lambda.clone(), cycles.to_vec());
    if let Some(v) = MN_CACHE.get(&key) {
        return *v;
    }
    let mut total = 0i128;
    for h in removable_rim_hooks(lambda, e) {
        let v = mn_rec(&remove_rim_hook(lambda, &h), &cycles[1..]);
        total += if h.leg % 2 == 0 { v } else { -v };
    }
    MN_CACHE.insert(key, total);
    total
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Order of the centralizer, `prod i^{m_i} m_i!`.
pub fn centralizer_order(sigma: &CycleType) -> BigUint {
    let mut mult: HashMap<usize, usize> = HashMap::new();
    for &c in sigma.parts() {
        *mult.entry(c).or_default() += 1;
    }
    mult.into_iter().fold(BigUint::one(), |acc, (i, m)| acc * BigUint::from(i).pow(m as u32) * factorial(m))
}

pub fn class_size(sigma: &CycleType) -> BigUint {
    factorial(sigma.size()) / centralizer_order(sigma)
}

/// The sign of a permutation of the given cycle type.
pub fn sign(sigma: &CycleType) -> i128 {
    if (sigma.size() - sigma.len()) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Full character table: rows and columns both indexed by [`partitions`]`(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymCharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub values: Vec<Vec<i128>>,
}

pub fn character_table(n: usize) -> Result<SymCharacterTable, SymError> {
    let parts = partitions(n);
    let values = parts
        .iter()
        .map(|l| parts.iter().map(|s| mn_value(l, s)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SymCharacterTable { n, partitions: parts, values })
}

impl SymCharacterTable {
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
        w.write_record([format!("# mckay sym-table v1 n={}", self.n)])?;
        let mut header = vec!["lambda".to_string()];
        header.extend(self.partitions.iter().map(|s| s.to_string()));
        w.write_record(&header)?;
        for (l, row) in self.partitions.iter().zip(&self.values) {
            let mut rec = vec![l.to_string()];
            rec.extend(row.iter().map(|v| v.to_string()));
            w.write_record(&rec)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// A class function on `S_n`, valued on [`partitions`]`(n)` in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    pub n: usize,
    pub values: Vec<BigInt>,
}

impl ClassFunction {
    pub fn character(lambda: &Partition) -> Result<Self, SymError> {
        let n = lambda.size();
        let values = partitions(n)
            .iter()
            .map(|s| mn_value(lambda, s).map(BigInt::from))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ClassFunction { n, values })
    }

    pub fn pointwise_product(&self, other: &Self) -> Result<Self, SymError> {
        if self.n != other.n || self.values.len() != other.values.len() {
            return Err(SymError::IndexMismatch);
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Ok(ClassFunction { n: self.n, values })
    }
}

/// `<f, g>` over `S_n`. Both functions are real valued here.
pub fn sn_inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<BigRational, SymError> {
    let classes = partitions(f.n);
    if f.n != g.n || f.values.len() != classes.len() || g.values.len() != classes.len() {
        return Err(SymError::IndexMismatch);
    }
    let mut total = BigInt::zero();
    for ((s, a), b) in classes.iter().zip(&f.values).zip(&g.values) {
        total += BigInt::from(class_size(s)) * a * b;
    }
    Ok(BigRational::new(total, BigInt::from(factorial(f.n))))
}

/// Littlewood–Richardson coefficient `C^gamma_{alpha, beta}`.
pub fn lr_coefficient(alpha: &Partition, beta: &Partition, gamma: &Partition) -> BigUint {
    BigUint::from(lr_count(alpha, beta, gamma))
}

fn lr_count(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    if !gamma.contains(alpha) || alpha.size() + beta.size() != gamma.size() {
        return 0;
    }
    if beta.is_empty() {
        return 1;
    }
    let key = (alpha.clone(), beta.clone(), gamma.clone());
    if let Some(v) = LR_CACHE.get(&key) {
        return *v;
    }
    let cells: Vec<(usize, usize)> = (0..gamma.len())
        .flat_map(|r| (alpha.part(r)..gamma.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let width = gamma.part(0);
    let mut grid = vec![0u8; gamma.len() * width];
    let mut counts = vec![0usize; beta.len() + 1];
    let count = lr_dfs(0, &cells, alpha, beta, gamma, width, &mut grid, &mut counts);
    LR_CACHE.insert(key, count);
    count
}

#[allow(clippy::too_many_arguments)]
fn lr_dfs(
    idx: usize,
    cells: &[(usize, usize)],
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    width: usize,
    grid: &mut [u8],
    counts: &mut [usize],
) -> u64 {
    let Some(&(r, c)) = cells.get(idx) else {
        return 1;
    };
    let mut total = 0;
    for v in 1..=beta.len() {
        if counts[v] >= beta.part(v - 1) {
            continue;
        }
        if v >= 2 && counts[v] + 1 > counts[v - 1] {
            continue;
        }
        if c + 1 < gamma.part(r) && (v as u8) > grid[r * width + c + 1] {
            continue;
        }
        if r >= 1 && c >= alpha.part(r - 1) && (v as u8) <= grid[(r - 1) * width + c] {
            continue;
        }
        grid[r * width + c] = v as u8;
        counts[v] += 1;
        total += lr_dfs(idx + 1, cells, alpha, beta, gamma, width, grid, counts);
        counts[v] -= 1;
        grid[r * width + c] = 0;
    }
    total
}

/// `<(chi^{mu_1} x ... x chi^{mu_k}) induced to S_n, chi^rho>` via chains of LR coefficients.
pub fn iterated_restriction_multiplicity(rho: &Partition, mus: &[Partition]) -> Result<BigUint, SymError> {
    let total: usize = mus.iter().map(Partition::size).sum();
    if total != rho.size() {
        return Err(SymError::SizeMismatch { left: rho.size(), right: total });
    }
    let Some((first, rest)) = mus.split_first() else {
        return Ok(BigUint::one());
    };
    let mut layer: HashMap<Partition, BigUint> = HashMap::new();
    if rho.contains(first) {
        layer.insert(first.clone(), BigUint::one());
    }
    let mut size = first.size();
    for mu in rest {
        size += mu.size();
        let mut next: HashMap<Partition, BigUint> = HashMap::new();
        for target in partitions_inside(rho, size) {
            let mut acc = BigUint::zero();
            for (lambda, mult) in &layer {
                let c = lr_count(lambda, mu, &target);
                if c > 0 {
                    acc += mult * c;
                }
            }
            if !acc.is_zero() {
                next.insert(target, acc);
            }
        }
        layer = next;
    }
    Ok(layer.remove(rho).unwrap_or_default())
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// For `h_j = (p^k - j, 1^j)` with `j = pm + x`: the unique `lambda` with
/// `<h_j restricted to (S_{p^{k-1}})^p, lambda^{x p}>` nonzero, and that multiplicity.
pub fn diagonal_power_multiplicity(k: u32, p: usize, j: usize) -> (Partition, BigUint) {
    let (m, x) = (j / p, j % p);
    (Partition::hook(p.pow(k - 1), m), binomial(p - 1, x))
}

/// [`diagonal_power_multiplicity`], recomputed for every `mu` of `p^{k-1}` by iterated restriction.
pub fn diagonal_power_multiplicity_checked(k: u32, p: usize, j: usize) -> Result<(Partition, BigUint), SymError> {
    let (lambda, value) = diagonal_power_multiplicity(k, p, j);
    let h = Partition::hook(p.pow(k), j);
    for mu in partitions(p.pow(k - 1)) {
        let computed = iterated_restriction_multiplicity(&h, &vec![mu.clone(); p])?;
        let expected = if mu == lambda { value.clone() } else { BigUint::zero() };
        if computed != expected {
            return Err(SymError::LemmaMismatch { mu, expected, computed });
        }
    }
    Ok((lambda, value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::char_degree;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trivial_and_sign() {
        for n in 1..=8 {
            for s in partitions(n) {
                assert_eq!(mn_value(&Partition::row(n), &s).unwrap(), 1);
                assert_eq!(mn_value(&Partition::column(n), &s).unwrap(), sign(&s));
            }
        }
        assert_eq!(mn_value(&p(&[2, 1]), &p(&[1, 1])), Err(SymError::SizeMismatch { left: 3, right: 2 }));
    }

    #[test]
    fn s4_table() {
        let t = character_table(4).unwrap();
        // classes (4),(3,1),(2,2),(2,1,1),(1^4)
        assert_eq!(t.values[1], vec![-1, 0, -1, 1, 3]);
        assert_eq!(t.values[2], vec![0, -1, 2, 0, 2]);
    }

    #[test]
    fn orthogonality() {
        for n in 1..=9 {
            let t = character_table(n).unwrap();
            let sizes: Vec<BigInt> = t.partitions.iter().map(|s| BigInt::from(class_size(s))).collect();
            let order = BigInt::from(factorial(n));
            for a in 0..t.partitions.len() {
                assert_eq!(BigInt::from(t.values[a][t.partitions.len() - 1]), BigInt::from(char_degree(&t.partitions[a])));
                for b in 0..t.partitions.len() {
                    let row: BigInt = (0..sizes.len())
                        .map(|c| &sizes[c] * t.values[a][c] * t.values[b][c])
                        .sum();
                    assert_eq!(row, if a == b { order.clone() } else { BigInt::zero() });
                    let col: BigInt = (0..sizes.len()).map(|r| BigInt::from(t.values[r][a] * t.values[r][b])).sum();
                    let expected = if a == b { BigInt::from(centralizer_order(&t.partitions[a])) } else { BigInt::zero() };
                    assert_eq!(col, expected);
                }
            }
        }
    }

    #[test]
    fn inner_products() {
        let chi = ClassFunction::character(&p(&[2, 1])).unwrap();
        assert_eq!(sn_inner_product(&chi, &chi).unwrap(), BigRational::one());
        let triv = ClassFunction::character(&p(&[3])).unwrap();
        assert_eq!(sn_inner_product(&chi, &triv).unwrap(), BigRational::zero());
        // (2,1) x (2,1) = (3) + (2,1) + (1^3)
        let square = chi.pointwise_product(&chi).unwrap();
        for l in partitions(3) {
            let c = ClassFunction::character(&l).unwrap();
            assert_eq!(sn_inner_product(&square, &c).unwrap(), BigRational::one());
        }
        let other = ClassFunction::character(&p(&[2, 2])).unwrap();
        assert_eq!(sn_inner_product(&chi, &other), Err(SymError::IndexMismatch));
    }

    #[test]
    fn lr_small_cases() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), BigUint::from(2u32));
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), BigUint::one());
        assert_eq!(lr_coefficient(&p(&[3]), &p(&[1]), &p(&[2, 2])), BigUint::zero());
        for n in 0..=6 {
            for b in partitions(n) {
                for g in partitions(n) {
                    assert_eq!(lr_coefficient(&Partition::empty(), &b, &g), BigUint::from((b == g) as u32));
                }
            }
        }
    }

    /// Horizontal strip test for the Pieri rule.
    fn horizontal_strip(alpha: &Partition, gamma: &Partition) -> bool {
        gamma.contains(alpha) && (0..gamma.len()).all(|r| alpha.part(r) >= gamma.part(r + 1))
    }

    #[test]
    fn lr_pieri_and_symmetry() {
        for n in 0..=8 {
            for a in 0..=n {
                for alpha in partitions(a) {
                    for gamma in partitions(n) {
                        let pieri = lr_coefficient(&alpha, &Partition::row(n - a), &gamma);
                        assert_eq!(pieri, BigUint::from(horizontal_strip(&alpha, &gamma) as u32));
                        for beta in partitions(n - a) {
                            assert_eq!(lr_coefficient(&alpha, &beta, &gamma), lr_coefficient(&beta, &alpha, &gamma));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lr_degree_identity() {
        for n in 0..=9 {
            for a in 0..=n {
                for alpha in partitions(a) {
                    for beta in partitions(n - a) {
                        let lhs: BigUint = partitions(n)
                            .iter()
                            .map(|g| lr_coefficient(&alpha, &beta, g) * char_degree(g))
                            .sum();
                        let rhs = binomial(n, a) * char_degree(&alpha) * char_degree(&beta);
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    /// Frobenius reciprocity: sum over tuples of classes of the Young subgroup.
    fn young_inner_product(rho: &Partition, mus: &[Partition]) -> BigRational {
        fn rec(rho: &Partition, mus: &[Partition], cycles: &mut Vec<usize>, weight: BigRational) -> BigRational {
            let Some((mu, rest)) = mus.split_first() else {
                let v = mn_value(rho, &Partition::from_unsorted(cycles.clone())).unwrap();
                return weight * BigRational::from_integer(BigInt::from(v));
            };
            let mut total = BigRational::zero();
            for s in partitions(mu.size()) {
                let chi = mn_value(mu, &s).unwrap();
                if chi == 0 {
                    continue;
                }
                let w = weight.clone() * BigRational::new(BigInt::from(chi), BigInt::from(centralizer_order(&s)));
                let before = cycles.len();
                cycles.extend_from_slice(s.parts());
                total += rec(rho, rest, cycles, w);
                cycles.truncate(before);
            }
            total
        }
        rec(rho, mus, &mut Vec::new(), BigRational::one())
    }

    #[test]
    fn iterated_restriction_matches_reciprocity() {
        let cases: Vec<Vec<usize>> = vec![vec![2, 2], vec![3, 2, 1], vec![2, 2, 2], vec![1, 1, 1, 1], vec![4, 3], vec![3, 3, 3]];
        for sizes in cases {
            let n: usize = sizes.iter().sum();
            let mut tuples: Vec<Vec<Partition>> = vec![vec![]];
            for &s in &sizes {
                tuples = tuples
                    .into_iter()
                    .flat_map(|t| partitions(s).into_iter().map(move |m| [t.clone(), vec![m]].concat()))
                    .collect();
            }
            for mus in &tuples {
                for rho in partitions(n) {
                    let fast = iterated_restriction_multiplicity(&rho, mus).unwrap();
                    assert_eq!(BigRational::from_integer(BigInt::from(fast.clone())), young_inner_product(&rho, mus));
                    let mut rev = mus.clone();
                    rev.reverse();
                    assert_eq!(iterated_restriction_multiplicity(&rho, &rev).unwrap(), fast);
                }
            }
        }
        assert_eq!(
            iterated_restriction_multiplicity(&p(&[3]), &[p(&[1])]),
            Err(SymError::SizeMismatch { left: 3, right: 1 })
        );
    }

    #[test]
    fn diagonal_power_examples() {
        assert_eq!(diagonal_power_multiplicity(1, 3, 1), (p(&[1]), BigUint::from(2u32)));
        assert_eq!(char_degree(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(diagonal_power_multiplicity(2, 3, 0), (p(&[3]), BigUint::one()));
        for j in 0..5 {
            let (lambda, v) = diagonal_power_multiplicity_checked(1, 5, j).unwrap();
            assert_eq!(lambda, p(&[1]));
            assert_eq!(v, binomial(4, j));
        }
        for j in 0..9 {
            diagonal_power_multiplicity_checked(2, 3, j).unwrap();
        }
    }
}
