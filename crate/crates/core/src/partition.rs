//! Partitions and their hook, core, quotient and core-tower combinatorics.
//!
//! All abacus computations use a first-gap-justified abacus whose bead count is
//! the least multiple of `p` that is at least the length of the partition.
//! Quotient component `i` is read from runner `i`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("no addable {e}-hook of leg length {leg} on {partition}")]
    NoSuchAddableHook { partition: Partition, e: usize, leg: usize },
    #[error("{count} addable {e}-hooks of leg length {leg} on {partition}")]
    AmbiguousAddableHook { partition: Partition, e: usize, leg: usize, count: usize },
    #[error("{0} is not a {1}-core")]
    InvalidCore(Partition, usize),
    #[error("expected a quotient with {expected} components, got {got}")]
    QuotientLength { expected: usize, got: usize },
    #[error("malformed core tower")]
    MalformedTower,
    #[error("hooks must be distinct")]
    EqualHooks,
    #[error("expected hook partitions of the same power of 3, got {0} and {1}")]
    NotHooks(Partition, Partition),
}

/// A partition stored as its nonzero parts in weakly decreasing order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Partition {
    /// Validates and trims trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(PartitionError::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from any parts in any order, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    fn from_decreasing(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The hook `(n - x, 1^x)`.
    pub fn hook(n: usize, x: usize) -> Self {
        assert!(x < n, "hook leg {x} out of range for {n}");
        let mut parts = vec![n - x];
        parts.extend(std::iter::repeat_n(1, x));
        Partition(parts)
    }

    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|c| self.0.iter().filter(|&&x| x > c).count()).collect())
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn is_hook(&self) -> bool {
        self.0.iter().skip(1).all(|&x| x == 1)
    }

    /// Leg length `x` of a hook `(n - x, 1^x)`.
    pub fn hook_leg(&self) -> Option<usize> {
        (self.is_hook() && !self.is_empty()).then(|| self.len() - 1)
    }

    /// Hook length of the 0-based cell `(r, c)`.
    pub fn hook_length(&self, r: usize, c: usize) -> usize {
        let conj_c = self.0.iter().filter(|&&x| x > c).count();
        self.0[r] - c + conj_c - r - 1
    }

    /// Beta-set with `beads` beads, in decreasing order. Requires `beads >= len`.
    pub fn beta_set(&self, beads: usize) -> Vec<usize> {
        debug_assert!(beads >= self.len());
        (0..beads).map(|i| self.part(i) + beads - 1 - i).collect()
    }

    /// Inverse of [`Partition::beta_set`]; positions in any order, distinct.
    pub fn from_beta_set(beta: &[usize]) -> Partition {
        let mut b = beta.to_vec();
        b.sort_unstable_by(|x, y| y.cmp(x));
        let k = b.len();
        for (i, x) in b.iter_mut().enumerate() {
            *x -= k - 1 - i;
        }
        Partition::from_decreasing(b)
    }
}

/// All partitions of `n`, in reverse lexicographic order starting with `(n)`.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for x in (1..=rest.min(max)).rev() {
            cur.push(x);
            rec(rest - x, x, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// All partitions of `size` whose diagram lies inside `outer`.
pub fn partitions_inside(outer: &Partition, size: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(outer: &Partition, row: usize, rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if row >= outer.len() {
            return;
        }
        let cap = max.min(outer.part(row)).min(rest);
        for x in (1..=cap).rev() {
            cur.push(x);
            rec(outer, row + 1, rest - x, x, cur, out);
            cur.pop();
        }
    }
    rec(outer, 0, size, usize::MAX, &mut cur, &mut out);
    out
}

/// Number of standard Young tableaux, `n! / prod(hook lengths)`.
pub fn char_degree(lambda: &Partition) -> BigUint {
    let mut num = BigUint::one();
    for k in 2..=lambda.size() {
        num *= k;
    }
    let mut den = BigUint::one();
    for r in 0..lambda.len() {
        for c in 0..lambda.part(r) {
            den *= lambda.hook_length(r, c);
        }
    }
    num / den
}

/// A rim hook `h(r, c)` with 1-based anchor cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RimHook {
    pub row: usize,
    pub col: usize,
    pub size: usize,
    pub leg: usize,
    pub arm: usize,
}

impl RimHook {
    /// The hook partition `(e - leg, 1^leg)` of the same shape class.
    pub fn hook_type(&self) -> Partition {
        Partition::hook(self.size, self.leg)
    }
}

/// All removable rim hooks of size `e`, ordered by anchor row.
pub fn removable_rim_hooks(lambda: &Partition, e: usize) -> Vec<RimHook> {
    assert!(e >= 1);
    // a bead at b with b - e empty is a removable e-hook in that bead's row
    let beta = lambda.beta_set(lambda.len());
    let mut out = Vec::new();
    for (r, &b) in beta.iter().enumerate() {
        if b < e || beta.contains(&(b - e)) {
            continue;
        }
        let leg = beta[r + 1..].iter().take_while(|&&x| x > b - e).count();
        let arm = e - 1 - leg;
        out.push(RimHook { row: r + 1, col: lambda.part(r) - arm, size: e, leg, arm });
    }
    out
}

/// Removes a rim hook previously returned by [`removable_rim_hooks`].
pub fn remove_rim_hook(lambda: &Partition, hook: &RimHook) -> Partition {
    let r = hook.row - 1;
    let mut parts = lambda.0.clone();
    for i in r..r + hook.leg {
        parts[i] = lambda.part(i + 1) - 1;
    }
    parts[r + hook.leg] = hook.col - 1;
    Partition::from_unsorted(parts)
}

/// Adds the unique `e`-rim hook of leg length `leg`.
pub fn add_rim_hook(lambda: &Partition, e: usize, leg: usize) -> Result<Partition, PartitionError> {
    let beads = lambda.len() + e;
    let beta = lambda.beta_set(beads);
    let candidates: Vec<usize> = beta
        .iter()
        .copied()
        .filter(|&b| !beta.contains(&(b + e)))
        .filter(|&b| beta.iter().filter(|&&x| x > b && x < b + e).count() == leg)
        .collect();
    match candidates.as_slice() {
        [b] => {
            let moved: Vec<usize> = beta.iter().map(|&x| if x == *b { x + e } else { x }).collect();
            Ok(Partition::from_beta_set(&moved))
        }
        [] => Err(PartitionError::NoSuchAddableHook { partition: lambda.clone(), e, leg }),
        many => Err(PartitionError::AmbiguousAddableHook {
            partition: lambda.clone(),
            e,
            leg,
            count: many.len(),
        }),
    }
}

fn abacus_beads(len: usize, p: usize) -> usize {
    len.div_ceil(p) * p
}

/// The `p`-core and `p`-quotient.
pub fn p_core_and_quotient(lambda: &Partition, p: usize) -> (Partition, Vec<Partition>) {
    assert!(p >= 2);
    let beads = abacus_beads(lambda.len(), p);
    let beta = lambda.beta_set(beads);
    let mut counts = vec![0usize; p];
    for &b in &beta {
        counts[b % p] += 1;
    }
    // beta is decreasing, so each runner's positions are read in decreasing order
    let quotient = (0..p)
        .map(|i| {
            let count = counts[i];
            let parts = beta.iter().filter(|&&b| b % p == i).enumerate().map(|(j, &b)| b / p - (count - 1 - j));
            Partition::from_decreasing(parts.collect())
        })
        .collect();
    let core_beta: Vec<usize> = (0..p).flat_map(|i| (0..counts[i]).map(move |k| i + p * k)).collect();
    (Partition::from_beta_set(&core_beta), quotient)
}

pub fn p_core(lambda: &Partition, p: usize) -> Partition {
    p_core_and_quotient(lambda, p).0
}

pub fn is_p_core(lambda: &Partition, p: usize) -> bool {
    p_core(lambda, p) == *lambda
}

/// Inverse of [`p_core_and_quotient`].
pub fn combine_core_quotient(core: &Partition, quotient: &[Partition], p: usize) -> Result<Partition, PartitionError> {
    if quotient.len() != p {
        return Err(PartitionError::QuotientLength { expected: p, got: quotient.len() });
    }
    if !is_p_core(core, p) {
        return Err(PartitionError::InvalidCore(core.clone(), p));
    }
    let base = abacus_beads(core.len(), p);
    let counts = |beads: usize| -> Vec<usize> {
        let mut c = vec![0; p];
        for b in core.beta_set(beads) {
            c[b % p] += 1;
        }
        c
    };
    let c0 = counts(base);
    let shortfall = (0..p).map(|i| quotient[i].len().saturating_sub(c0[i])).max().unwrap_or(0);
    let beads = base + p * shortfall;
    let c = counts(beads);
    let mut beta = Vec::with_capacity(beads);
    for i in 0..p {
        for j in 0..c[i] {
            let k = quotient[i].part(j) + c[i] - 1 - j;
            beta.push(i + p * k);
        }
    }
    Ok(Partition::from_beta_set(&beta))
}

/// Layered `p`-cores; layer `j` holds `p^j` partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoreTower {
    pub p: usize,
    pub layers: Vec<Vec<Partition>>,
}

impl CoreTower {
    pub fn layer_weights(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.iter().map(Partition::size).sum()).collect()
    }

    /// The tower of `p`-cores with the given nonempty entries `(layer, position, core)`.
    pub fn from_entries(p: usize, entries: &[(usize, usize, Partition)]) -> CoreTower {
        let depth = entries.iter().map(|e| e.0 + 1).max().unwrap_or(1);
        let mut layers: Vec<Vec<Partition>> = (0..depth).map(|j| vec![Partition::empty(); p.pow(j as u32)]).collect();
        for (j, x, core) in entries {
            layers[*j][*x] = core.clone();
        }
        CoreTower { p, layers }
    }

    /// Nonempty entries `(layer, position, core)`.
    pub fn entries(&self) -> Vec<(usize, usize, Partition)> {
        let mut out = Vec::new();
        for (j, layer) in self.layers.iter().enumerate() {
            for (x, c) in layer.iter().enumerate() {
                if !c.is_empty() {
                    out.push((j, x, c.clone()));
                }
            }
        }
        out
    }

    /// Rebuilds the partition with this tower.
    pub fn to_partition(&self) -> Result<Partition, PartitionError> {
        self.rebuild(0, 0)
    }

    fn rebuild(&self, depth: usize, offset: usize) -> Result<Partition, PartitionError> {
        let p = self.p;
        let Some(layer) = self.layers.get(depth) else {
            return Ok(Partition::empty());
        };
        let core = layer.get(offset).ok_or(PartitionError::MalformedTower)?;
        if self.layers.len() <= depth + 1 {
            return Ok(core.clone());
        }
        let width = p.pow(depth as u32);
        let quotient = (0..p)
            .map(|r| self.rebuild(depth + 1, r * width + offset))
            .collect::<Result<Vec<_>, _>>()?;
        if core.is_empty() && quotient.iter().all(Partition::is_empty) {
            return Ok(Partition::empty());
        }
        combine_core_quotient(core, &quotient, p)
    }
}

pub fn core_tower(lambda: &Partition, p: usize) -> CoreTower {
    let mut layers = Vec::new();
    let mut current = vec![lambda.clone()];
    loop {
        let mut layer = Vec::with_capacity(current.len());
        let mut next: Vec<Vec<Partition>> = vec![Vec::with_capacity(current.len()); p];
        for mu in &current {
            if mu.is_empty() {
                layer.push(Partition::empty());
                next.iter_mut().for_each(|n| n.push(Partition::empty()));
                continue;
            }
            let (core, quotient) = p_core_and_quotient(mu, p);
            layer.push(core);
            for (r, q) in quotient.into_iter().enumerate() {
                next[r].push(q);
            }
        }
        layers.push(layer);
        let next: Vec<Partition> = next.into_iter().flatten().collect();
        if next.iter().all(Partition::is_empty) {
            break;
        }
        current = next;
    }
    CoreTower { p, layers }
}

/// Base-`p` digits of `n`, least significant first.
pub fn base_digits(mut n: usize, p: usize) -> Vec<usize> {
    let mut out = Vec::new();
    while n > 0 {
        out.push(n % p);
        n /= p;
    }
    out
}

/// Macdonald's criterion for `p` not dividing the degree.
pub fn is_pprime_degree(lambda: &Partition, p: usize) -> bool {
    let mut weights = core_tower(lambda, p).layer_weights();
    let mut digits = base_digits(lambda.size(), p);
    let len = weights.len().max(digits.len());
    weights.resize(len, 0);
    digits.resize(len, 0);
    weights == digits
}

/// All partitions of `n` of degree prime to `p`, built from their core towers.
pub fn pprime_partitions(n: usize, p: usize) -> Vec<Partition> {
    let digits = base_digits(n, p);
    // per layer: all placements of cores with total size equal to the digit
    let per_layer: Vec<Vec<Vec<(usize, Partition)>>> = digits
        .iter()
        .enumerate()
        .map(|(j, &a)| layer_placements(p.pow(j as u32), a))
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<(usize, usize, Partition)> = Vec::new();
    fn rec(
        j: usize,
        p: usize,
        per_layer: &[Vec<Vec<(usize, Partition)>>],
        chosen: &mut Vec<(usize, usize, Partition)>,
        out: &mut Vec<Partition>,
    ) {
        if j == per_layer.len() {
            let tower = CoreTower::from_entries(p, chosen);
            out.push(tower.to_partition().expect("valid tower"));
            return;
        }
        for placement in &per_layer[j] {
            let before = chosen.len();
            chosen.extend(placement.iter().map(|(x, c)| (j, *x, c.clone())));
            rec(j + 1, p, per_layer, chosen, out);
            chosen.truncate(before);
        }
    }
    rec(0, p, &per_layer, &mut chosen, &mut out);
    out.sort();
    out.reverse();
    out
}

/// Placements of partitions of total size `a < p` at distinct positions `0..width`.
/// Every partition of size below `p` is a `p`-core.
fn layer_placements(width: usize, a: usize) -> Vec<Vec<(usize, Partition)>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, width: usize, rest: usize, cur: &mut Vec<(usize, Partition)>, out: &mut Vec<Vec<(usize, Partition)>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for x in start..width {
            for s in 1..=rest {
                for mu in partitions(s) {
                    cur.push((x, mu));
                    rec(x + 1, width, rest - s, cur, out);
                    cur.pop();
                }
            }
        }
    }
    rec(0, width, a, &mut cur, &mut out);
    out
}

/// Digits `(a_k, n_k)` of the 3-adic expansion, exponents decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeAdicExpansion {
    pub digits: Vec<(usize, u32)>,
}

impl ThreeAdicExpansion {
    pub fn value(&self) -> usize {
        self.digits.iter().map(|&(a, k)| a * 3usize.pow(k)).sum()
    }
}

pub fn three_adic(n: usize) -> ThreeAdicExpansion {
    let digits = base_digits(n, 3)
        .into_iter()
        .enumerate()
        .filter(|&(_, a)| a > 0)
        .map(|(k, a)| (a, k as u32))
        .rev()
        .collect();
    ThreeAdicExpansion { digits }
}

/// Exponent `k` when `n = 3^k`.
pub fn log3_exact(n: usize) -> Option<u32> {
    let mut k = 0;
    let mut x = 1;
    while x < n {
        x *= 3;
        k += 1;
    }
    (x == n).then_some(k)
}

/// Position of the single `(1)` in layer `k` of the 3-core tower of a hook of `3^k`.
fn hook_position(h: &Partition, k: u32) -> Option<usize> {
    let tower = core_tower(h, 3);
    match tower.entries().as_slice() {
        [(j, x, c)] if *j == k as usize && c.size() == 1 => Some(*x),
        _ => None,
    }
}

/// The partition of `2 * 3^k` hook-generated by two distinct hooks of `3^k`.
pub fn hook_generated(h1: &Partition, h2: &Partition) -> Result<Partition, PartitionError> {
    let not_hooks = || PartitionError::NotHooks(h1.clone(), h2.clone());
    if !h1.is_hook() || !h2.is_hook() || h1.size() != h2.size() {
        return Err(not_hooks());
    }
    let k = log3_exact(h1.size()).ok_or_else(not_hooks)?;
    if h1 == h2 {
        return Err(PartitionError::EqualHooks);
    }
    let x1 = hook_position(h1, k).ok_or_else(not_hooks)?;
    let x2 = hook_position(h2, k).ok_or_else(not_hooks)?;
    let k = k as usize;
    CoreTower::from_entries(3, &[(k, x1, Partition::row(1)), (k, x2, Partition::row(1))]).to_partition()
}

/// The generating pair of a hook-generated partition, sorted, if any.
pub fn generating_pair(lambda: &Partition) -> Option<(Partition, Partition)> {
    if lambda.size() % 2 != 0 {
        return None;
    }
    let k = log3_exact(lambda.size() / 2)?;
    let tower = core_tower(lambda, 3);
    let entries = tower.entries();
    let [(j1, x1, c1), (j2, x2, c2)] = entries.as_slice() else {
        return None;
    };
    if *j1 != k as usize || *j2 != k as usize || c1.size() != 1 || c2.size() != 1 {
        return None;
    }
    let single = |x: usize| CoreTower::from_entries(3, &[(k as usize, x, Partition::row(1))]).to_partition().ok();
    let (a, b) = (single(*x1)?, single(*x2)?);
    Some(if a <= b { (a, b) } else { (b, a) })
}

/// The hooks of `n`, ordered by leg length.
pub fn hooks(n: usize) -> Vec<Partition> {
    (0..n).map(|x| Partition::hook(n, x)).collect()
}
