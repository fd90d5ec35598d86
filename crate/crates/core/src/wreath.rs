//! Characters of wreath products `K wr S_m`, mostly with `K = S_r`.
//!
//! A conjugacy class of `K wr S_m` is a multiset of top cycles, each carrying the
//! class of its cycle product in `K`. Character values of the canonical
//! extension of `theta^{x m}` are products of `theta` over cycle products,
//! twisted by the sign of the top permutation when `theta(1) = 3 mod 4`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{
    char_degree, generating_pair, hook_generated, hooks, is_pprime_degree, log3_exact, partitions, Partition,
    PartitionError,
};
use crate::sym::{centralizer_order, factorial, mn_value, CycleType, SymError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WreathError {
    #[error("size mismatch: {0} is not a partition of {1}")]
    SizeMismatch(Partition, usize),
    #[error("{0} is not a hook of a power of p")]
    NotAHook(Partition),
    #[error("{0} does not label a 3'-character of S_(2*3^k)")]
    NotThreePrime(Partition),
    #[error("induced-pair label needs distinct components of equal size")]
    BadPair,
    #[error("label {0} is not in the image")]
    NotInImage(String),
    #[error("expected exactly one constituent among the candidates for {0}")]
    NoUniqueConstituent(Partition),
    #[error("inner product is not an integer")]
    NonIntegral,
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// An irreducible character of the base group `K`.
pub trait BaseCharacter {
    type Class: Clone + Ord;
    fn degree(&self) -> i128;
    fn value(&self, class: &Self::Class) -> i128;
}

/// `chi^lambda` of `S_r` on cycle types.
#[derive(Debug, Clone, Copy)]
pub struct SymCharacter<'a>(pub &'a Partition);

impl BaseCharacter for SymCharacter<'_> {
    type Class = CycleType;

    fn degree(&self) -> i128 {
        mn_value(self.0, &Partition::column(self.0.size())).expect("sizes agree")
    }

    fn value(&self, class: &CycleType) -> i128 {
        mn_value(self.0, class).expect("sizes agree")
    }
}

/// Conjugacy class of `K wr S_m`: top cycle lengths with the class of each cycle product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathClass<C> {
    cycles: Vec<(usize, C)>,
}

impl<C: Clone + Ord> WreathClass<C> {
    pub fn new(mut cycles: Vec<(usize, C)>) -> Self {
        cycles.sort_by(|a, b| b.cmp(a));
        WreathClass { cycles }
    }

    pub fn cycles(&self) -> &[(usize, C)] {
        &self.cycles
    }

    pub fn top_type(&self) -> CycleType {
        Partition::from_unsorted(self.cycles.iter().map(|c| c.0).collect())
    }

    pub fn m(&self) -> usize {
        self.cycles.iter().map(|c| c.0).sum()
    }
}

impl WreathClass<CycleType> {
    /// Cycle type in `S_{rm}`: a top `L`-cycle with product of type `tau` gives cycles `L * tau_i`.
    pub fn underlying_cycle_type(&self) -> CycleType {
        Partition::from_unsorted(
            self.cycles.iter().flat_map(|(l, tau)| tau.parts().iter().map(move |t| l * t)).collect(),
        )
    }
}

fn top_sign<C: Clone + Ord>(cls: &WreathClass<C>) -> i128 {
    if (cls.m() - cls.cycles.len()) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Value of the canonical extension of `theta^{x m}` at `cls`.
pub fn canonical_extension_value<K: BaseCharacter>(theta: &K, cls: &WreathClass<K::Class>) -> i128 {
    let product: i128 = cls.cycles.iter().map(|(_, c)| theta.value(c)).product();
    if theta.degree() % 4 == 3 {
        product * top_sign(cls)
    } else {
        product
    }
}

/// All classes of `S_r wr S_m`.
pub fn wreath_classes(r: usize, m: usize) -> Vec<WreathClass<CycleType>> {
    let items: Vec<(usize, CycleType)> =
        (1..=m).flat_map(|l| partitions(r).into_iter().map(move |t| (l, t))).collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        items: &[(usize, CycleType)],
        start: usize,
        rest: usize,
        cur: &mut Vec<(usize, CycleType)>,
        out: &mut Vec<WreathClass<CycleType>>,
    ) {
        if rest == 0 {
            out.push(WreathClass::new(cur.clone()));
            return;
        }
        for i in start..items.len() {
            if items[i].0 <= rest {
                cur.push(items[i].clone());
                rec(items, i, rest - items[i].0, cur, out);
                cur.pop();
            }
        }
    }
    rec(&items, 0, m, &mut cur, &mut out);
    out
}

pub fn wreath_order(r: usize, m: usize) -> BigUint {
    factorial(r).pow(m as u32) * factorial(m)
}

/// `|S_r wr S_m| / prod (l * z_tau)^{mult} mult!` over distinct cycles `(l, tau)`.
pub fn wreath_class_size(r: usize, cls: &WreathClass<CycleType>) -> BigUint {
    let mut mult: BTreeMap<&(usize, CycleType), u32> = BTreeMap::new();
    for c in &cls.cycles {
        *mult.entry(c).or_default() += 1;
    }
    let centralizer = mult.into_iter().fold(BigUint::one(), |acc, ((l, tau), k)| {
        acc * (BigUint::from(*l) * centralizer_order(tau)).pow(k) * factorial(k as usize)
    });
    wreath_order(r, cls.m()) / centralizer
}

/// Irreducible character labels of `S_r wr S_m` used here.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WreathLabel {
    /// Canonical extension of `chi^base` to the `m`-th tensor power, times `chi^top`.
    Diagonal { base: Partition, top: Partition },
    /// `(chi^first x chi^second)` induced from the base group of `S_r wr S_2`.
    InducedPair { first: Partition, second: Partition },
}

impl WreathLabel {
    pub fn diagonal(base: Partition, top: Partition) -> Self {
        WreathLabel::Diagonal { base, top }
    }

    pub fn induced_pair(a: Partition, b: Partition) -> Result<Self, WreathError> {
        if a == b || a.size() != b.size() {
            return Err(WreathError::BadPair);
        }
        let (first, second) = if a < b { (a, b) } else { (b, a) };
        Ok(WreathLabel::InducedPair { first, second })
    }

    /// `(r, m)` for `S_r wr S_m`.
    pub fn shape(&self) -> (usize, usize) {
        match self {
            WreathLabel::Diagonal { base, top } => (base.size(), top.size()),
            WreathLabel::InducedPair { first, .. } => (first.size(), 2),
        }
    }

    pub fn degree(&self) -> BigUint {
        match self {
            WreathLabel::Diagonal { base, top } => char_degree(base).pow(top.size() as u32) * char_degree(top),
            WreathLabel::InducedPair { first, second } => char_degree(first) * char_degree(second) * 2u32,
        }
    }
}

impl std::fmt::Display for WreathLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WreathLabel::Diagonal { base, top } => write!(f, "chi({base},{top})"),
            WreathLabel::InducedPair { first, second } => write!(f, "ind({first}x{second})"),
        }
    }
}

pub fn wreath_char_value(label: &WreathLabel, cls: &WreathClass<CycleType>) -> i128 {
    match label {
        WreathLabel::Diagonal { base, top } => {
            canonical_extension_value(&SymCharacter(base), cls) * mn_value(top, &cls.top_type()).expect("sizes agree")
        }
        WreathLabel::InducedPair { first, second } => match cls.cycles.as_slice() {
            [(1, a), (1, b)] => {
                let (f, s) = (SymCharacter(first), SymCharacter(second));
                f.value(a) * s.value(b) + f.value(b) * s.value(a)
            }
            _ => 0,
        },
    }
}

/// `<f, g>` over `S_r wr S_m` for real-valued class functions.
pub fn wreath_inner_product<F, G>(r: usize, m: usize, f: F, g: G) -> Result<BigUint, WreathError>
where
    F: Fn(&WreathClass<CycleType>) -> i128 + Sync,
    G: Fn(&WreathClass<CycleType>) -> i128 + Sync,
{
    let total: BigInt = wreath_classes(r, m)
        .par_iter()
        .map(|cls| BigInt::from(wreath_class_size(r, cls)) * f(cls) * g(cls))
        .sum();
    let order = BigInt::from(wreath_order(r, m));
    let (q, rem) = total.div_rem(&order);
    if !rem.is_zero() || q.is_negative() {
        return Err(WreathError::NonIntegral);
    }
    Ok(q.to_biguint().expect("nonnegative"))
}

/// Multiplicity of `label` in the restriction of `chi^rho` to `S_r wr S_m`.
pub fn restriction_mult(rho: &Partition, label: &WreathLabel) -> Result<BigUint, WreathError> {
    let (r, m) = label.shape();
    if rho.size() != r * m {
        return Err(WreathError::SizeMismatch(rho.clone(), r * m));
    }
    mn_value(rho, &Partition::column(rho.size()))?;
    wreath_inner_product(
        r,
        m,
        |cls| mn_value(rho, &cls.underlying_cycle_type()).expect("size checked"),
        |cls| wreath_char_value(label, cls),
    )
}

/// `(k, leg)` for a hook of `p^k`.
fn hook_data(h: &Partition, p: usize) -> Result<(u32, usize), WreathError> {
    let not_hook = || WreathError::NotAHook(h.clone());
    let leg = h.hook_leg().ok_or_else(not_hook)?;
    let mut k = 0;
    let mut size = 1;
    while size < h.size() {
        size *= p;
        k += 1;
    }
    if size != h.size() || k == 0 {
        return Err(not_hook());
    }
    Ok((k, leg))
}

/// The candidate base and the two candidate tops `(p - x, 1^x)`, `(x + 1, 1^{p-1-x})`.
fn star_candidates(h: &Partition, p: usize) -> Result<(Partition, Partition, Partition), WreathError> {
    let (k, leg) = hook_data(h, p)?;
    let (m, x) = (leg / p, leg % p);
    let base = Partition::hook(p.pow(k - 1), m);
    Ok((base, Partition::hook(p, x), Partition::hook(p, p - 1 - x)))
}

/// The closed form at `p = 3`.
pub fn star_map_closed_form(h: &Partition) -> Result<WreathLabel, WreathError> {
    let (k, leg) = hook_data(h, 3)?;
    let (m, x) = (leg / 3, leg % 3);
    let base = Partition::hook(3usize.pow(k - 1), m);
    let sign_power = |e: usize| if e % 2 == 0 { Partition::row(3) } else { Partition::column(3) };
    let top = match x {
        0 => sign_power(m),
        1 => Partition::new(vec![2, 1])?,
        _ => sign_power(m + 1),
    };
    Ok(WreathLabel::diagonal(base, top))
}

/// The unique `p'`-constituent of `chi^h` restricted to `S_{p^{k-1}} wr S_p`, found by computing both candidates.
pub fn star_map_computed(h: &Partition, p: usize) -> Result<WreathLabel, WreathError> {
    let (base, nu1, nu2) = star_candidates(h, p)?;
    let l1 = WreathLabel::diagonal(base.clone(), nu1);
    let l2 = WreathLabel::diagonal(base, nu2);
    let m1 = restriction_mult(h, &l1)?;
    if l1 == l2 {
        return if m1.is_zero() { Err(WreathError::NoUniqueConstituent(h.clone())) } else { Ok(l1) };
    }
    let m2 = restriction_mult(h, &l2)?;
    match (m1.is_zero(), m2.is_zero()) {
        (false, true) => Ok(l1),
        (true, false) => Ok(l2),
        _ => Err(WreathError::NoUniqueConstituent(h.clone())),
    }
}

/// `chi^h -> chi^*` for a hook `h` of `p^k`.
pub fn star_map(h: &Partition, p: usize) -> Result<WreathLabel, WreathError> {
    if p == 3 {
        star_map_closed_form(h)
    } else {
        star_map_computed(h, p)
    }
}

/// `chi(lambda, mu)` with `lambda` a hook of `p^{k-1}` and `mu` a hook of `p`.
pub fn pprime_wreath_labels(p: usize, k: u32) -> Vec<WreathLabel> {
    let mut out = Vec::new();
    for base in hooks(p.pow(k - 1)) {
        for top in hooks(p) {
            out.push(WreathLabel::diagonal(base.clone(), top));
        }
    }
    out
}

fn two_power_three(n: usize) -> Option<u32> {
    (n % 2 == 0).then(|| log3_exact(n / 2)).flatten()
}

/// `Psi` on a 3'-character of `S_{2*3^k}`.
pub fn psi_map(lambda: &Partition) -> Result<WreathLabel, WreathError> {
    let bad = || WreathError::NotThreePrime(lambda.clone());
    let k = two_power_three(lambda.size()).ok_or_else(bad)?;
    let r = 3usize.pow(k);
    if let Some(y) = lambda.hook_leg() {
        let (h, column) = if y < r { (Partition::hook(r, y), false) } else { (Partition::hook(r, y - r), true) };
        let eps = (h == h.conjugate()) as usize + column as usize;
        let top = if eps % 2 == 0 { Partition::row(2) } else { Partition::column(2) };
        return Ok(WreathLabel::diagonal(h, top));
    }
    let (a, b) = generating_pair(lambda).ok_or_else(bad)?;
    WreathLabel::induced_pair(a, b)
}

pub fn psi_inverse(label: &WreathLabel) -> Result<Partition, WreathError> {
    let not_in_image = || WreathError::NotInImage(label.to_string());
    match label {
        WreathLabel::Diagonal { base, top } => {
            let x = base.hook_leg().ok_or_else(not_in_image)?;
            if top.size() != 2 || log3_exact(base.size()).is_none() {
                return Err(not_in_image());
            }
            let r = base.size();
            let odd = *top == Partition::column(2);
            let self_conj = *base == base.conjugate();
            // exactly one of the two shapes has the required parity
            let column = odd != self_conj;
            Ok(if column { Partition::hook(r, x).with_extra_column(r) } else { Partition::hook(2 * r, x) })
        }
        WreathLabel::InducedPair { first, second } => hook_generated(first, second).map_err(|_| not_in_image()),
    }
}

impl Partition {
    /// `(m - x, 1^{x + n})` from the hook `(m - x, 1^x)`.
    fn with_extra_column(&self, n: usize) -> Partition {
        let mut parts = self.parts().to_vec();
        parts.extend(std::iter::repeat(1).take(n));
        Partition::new(parts).expect("hook")
    }
}

/// The labels `C` and `D` of `Irr_{3'}(S_{3^k} wr S_2)`.
pub fn c_d_labels(k: u32) -> Vec<WreathLabel> {
    let hs = hooks(3usize.pow(k));
    let mut out = Vec::new();
    for h in &hs {
        out.push(WreathLabel::diagonal(h.clone(), Partition::row(2)));
        out.push(WreathLabel::diagonal(h.clone(), Partition::column(2)));
    }
    for i in 0..hs.len() {
        for j in i + 1..hs.len() {
            out.push(WreathLabel::induced_pair(hs[i].clone(), hs[j].clone()).expect("distinct"));
        }
    }
    out
}

/// The constituent in `C` of `chi^h` restricted to `S_{3^k} wr S_2`, for a hook `h` of `2*3^k`.
pub fn hook_constituent_23k(h: &Partition) -> Result<WreathLabel, WreathError> {
    let not_hook = || WreathError::NotAHook(h.clone());
    let leg = h.hook_leg().ok_or_else(not_hook)?;
    let k = two_power_three(h.size()).ok_or_else(not_hook)?;
    let (m, x) = (leg / 2, leg % 2);
    let top = if (m + x) % 2 == 0 { Partition::row(2) } else { Partition::column(2) };
    Ok(WreathLabel::diagonal(Partition::hook(3usize.pow(k), m), top))
}

/// True iff `lambda` labels a 3'-character of `S_{2*3^k}`.
pub fn is_psi_domain(lambda: &Partition) -> bool {
    two_power_three(lambda.size()).is_some() && is_pprime_degree(lambda, 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    type Perm = Vec<usize>;

    fn compose(a: &Perm, b: &Perm) -> Perm {
        b.iter().map(|&i| a[i]).collect()
    }

    fn cycle_type(g: &Perm) -> Partition {
        let mut seen = vec![false; g.len()];
        let mut out = Vec::new();
        for s in 0..g.len() {
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = g[i];
                len += 1;
            }
            out.push(len);
        }
        Partition::from_unsorted(out)
    }

    /// The 2-dimensional representation of `S_3` on `{x : sum x_i = 0}` in the basis `e1-e2, e2-e3`.
    fn s3_rep() -> Vec<(Perm, [[i64; 2]; 2])> {
        let elements: Vec<Perm> = vec![
            vec![0, 1, 2],
            vec![1, 0, 2],
            vec![0, 2, 1],
            vec![2, 1, 0],
            vec![1, 2, 0],
            vec![2, 0, 1],
        ];
        elements
            .into_iter()
            .map(|g| {
                let act = |v: [i64; 3]| {
                    let mut w = [0; 3];
                    for i in 0..3 {
                        w[g[i]] = v[i];
                    }
                    w
                };
                let coords = |w: [i64; 3]| [w[0], w[0] + w[1]];
                let c0 = coords(act([1, -1, 0]));
                let c1 = coords(act([0, 1, -1]));
                (g, [[c0[0], c1[0]], [c0[1], c1[1]]])
            })
            .collect()
    }

    #[test]
    fn tensor_model_traces() {
        let rep = s3_rep();
        let chi = p(&[2, 1]);
        let mut counts: HashMap<WreathClass<CycleType>, usize> = HashMap::new();
        for (g1, a) in &rep {
            for (g2, b) in &rep {
                for swap in [false, true] {
                    // 4x4 matrix on U x U, basis index 2i + j
                    let mut trace = 0i64;
                    for i in 0..2 {
                        for j in 0..2 {
                            let (ti, tj) = if swap { (j, i) } else { (i, j) };
                            trace += a[ti][i] * b[tj][j];
                        }
                    }
                    let cls = if swap {
                        WreathClass::new(vec![(2, cycle_type(&compose(g2, g1)))])
                    } else {
                        WreathClass::new(vec![(1, cycle_type(g1)), (1, cycle_type(g2))])
                    };
                    assert_eq!(canonical_extension_value(&SymCharacter(&chi), &cls) as i64, trace);
                    let mut embedded = vec![0; 6];
                    for i in 0..3 {
                        let (src1, src2) = (i, i + 3);
                        let (dst1, dst2) = if swap { (g1[i] + 3, g2[i]) } else { (g1[i], g2[i] + 3) };
                        embedded[src1] = dst1;
                        embedded[src2] = dst2;
                    }
                    assert_eq!(cycle_type(&embedded), cls.underlying_cycle_type());
                    *counts.entry(cls).or_default() += 1;
                }
            }
        }
        let classes = wreath_classes(3, 2);
        assert_eq!(classes.len(), counts.len());
        for cls in &classes {
            assert_eq!(BigUint::from(counts[cls]), wreath_class_size(3, cls));
        }
    }

    #[test]
    fn class_sizes_sum_to_order() {
        for (r, m) in [(1, 4), (2, 3), (3, 3), (4, 2), (3, 2), (9, 2)] {
            let total: BigUint = wreath_classes(r, m).iter().map(|c| wreath_class_size(r, c)).sum();
            assert_eq!(total, wreath_order(r, m));
        }
    }

    #[test]
    fn extension_normalization() {
        for r in 1..=5 {
            for lambda in partitions(r) {
                let theta = SymCharacter(&lambda);
                let d = theta.degree();
                for m in 2..=3 {
                    let id = WreathClass::new(vec![(1, Partition::column(r)); m]);
                    assert_eq!(canonical_extension_value(&theta, &id), d.pow(m as u32));
                    let mut cycles = vec![(2, Partition::column(r))];
                    cycles.extend(vec![(1, Partition::column(r)); m - 2]);
                    let t = WreathClass::new(cycles);
                    let value = canonical_extension_value(&theta, &t);
                    let det_trivial = ((d.pow(m as u32) - value) / 2) % 2 == 0;
                    if d % 2 == 1 || m >= 3 {
                        assert!(det_trivial, "{lambda} m={m}");
                    }
                    if d % 2 == 0 {
                        assert_eq!(value, d.pow(m as u32 - 1));
                    }
                }
            }
        }
    }

    #[test]
    fn labels_are_irreducible() {
        for (r, m) in [(3, 2), (3, 3), (2, 3)] {
            let mut labels = Vec::new();
            for base in partitions(r) {
                for top in partitions(m) {
                    labels.push(WreathLabel::diagonal(base.clone(), top));
                }
            }
            if m == 2 {
                let ps = partitions(r);
                for i in 0..ps.len() {
                    for j in i + 1..ps.len() {
                        labels.push(WreathLabel::induced_pair(ps[i].clone(), ps[j].clone()).unwrap());
                    }
                }
            }
            for a in &labels {
                for b in &labels {
                    let ip = wreath_inner_product(r, m, |c| wreath_char_value(a, c), |c| wreath_char_value(b, c)).unwrap();
                    assert_eq!(ip, BigUint::from((a == b) as u32), "{a} {b}");
                }
                let id = WreathClass::new(vec![(1, Partition::column(r)); m]);
                assert_eq!(BigUint::from(wreath_char_value(a, &id) as u64), a.degree());
            }
        }
        let pair = WreathLabel::induced_pair(p(&[3]), p(&[2, 1])).unwrap();
        assert_eq!(pair.degree(), BigUint::from(4u32));
    }

    #[test]
    fn restriction_examples() {
        assert_eq!(restriction_mult(&p(&[6]), &WreathLabel::diagonal(p(&[3]), p(&[2]))).unwrap(), BigUint::one());
        let pair = WreathLabel::induced_pair(p(&[3]), p(&[2, 1])).unwrap();
        assert_eq!(restriction_mult(&p(&[4, 2]), &pair).unwrap(), BigUint::one());
        assert!(matches!(restriction_mult(&p(&[5]), &pair), Err(WreathError::SizeMismatch(..))));
    }

    #[test]
    fn star_map_small() {
        assert_eq!(star_map(&p(&[2, 1]), 3).unwrap(), WreathLabel::diagonal(p(&[1]), p(&[2, 1])));
        assert_eq!(star_map(&p(&[3]), 3).unwrap(), WreathLabel::diagonal(p(&[1]), p(&[3])));
        assert!(matches!(star_map(&p(&[2, 2]), 3), Err(WreathError::NotAHook(_))));
        for h in hooks(9) {
            assert_eq!(star_map_closed_form(&h).unwrap(), star_map_computed(&h, 3).unwrap());
        }
        let images: std::collections::HashSet<WreathLabel> =
            hooks(5).iter().map(|h| star_map(h, 5).unwrap()).collect();
        assert_eq!(images.len(), 5);
    }

    #[test]
    fn psi_on_s6() {
        let table = [
            (p(&[6]), WreathLabel::diagonal(p(&[3]), p(&[2]))),
            (p(&[5, 1]), WreathLabel::diagonal(p(&[2, 1]), p(&[1, 1]))),
            (p(&[4, 1, 1]), WreathLabel::diagonal(p(&[1, 1, 1]), p(&[2]))),
            (p(&[3, 1, 1, 1]), WreathLabel::diagonal(p(&[3]), p(&[1, 1]))),
            (p(&[2, 1, 1, 1, 1]), WreathLabel::diagonal(p(&[2, 1]), p(&[2]))),
            (p(&[1, 1, 1, 1, 1, 1]), WreathLabel::diagonal(p(&[1, 1, 1]), p(&[1, 1]))),
            (p(&[3, 3]), WreathLabel::induced_pair(p(&[3]), p(&[2, 1])).unwrap()),
            (p(&[3, 2, 1]), WreathLabel::induced_pair(p(&[3]), p(&[1, 1, 1])).unwrap()),
            (p(&[2, 2, 2]), WreathLabel::induced_pair(p(&[1, 1, 1]), p(&[2, 1])).unwrap()),
        ];
        for (lambda, label) in &table {
            assert_eq!(&psi_map(lambda).unwrap(), label);
            assert_eq!(&psi_inverse(label).unwrap(), lambda);
        }
        assert!(matches!(psi_map(&p(&[4, 2])), Err(WreathError::NotThreePrime(_))));
    }

    #[test]
    fn psi_bijective_k2() {
        let domain: Vec<Partition> = partitions(18).into_iter().filter(is_psi_domain).collect();
        let image: std::collections::BTreeSet<WreathLabel> = domain.iter().map(|l| psi_map(l).unwrap()).collect();
        let expected: std::collections::BTreeSet<WreathLabel> = c_d_labels(2).into_iter().collect();
        assert_eq!(image, expected);
        for l in &domain {
            assert_eq!(&psi_inverse(&psi_map(l).unwrap()).unwrap(), l);
        }
    }

    #[test]
    fn hook_constituents() {
        assert_eq!(hook_constituent_23k(&p(&[6])).unwrap(), WreathLabel::diagonal(p(&[3]), p(&[2])));
        assert_eq!(hook_constituent_23k(&p(&[4, 1, 1])).unwrap(), WreathLabel::diagonal(p(&[2, 1]), p(&[1, 1])));
        for h in hooks(6) {
            let label = hook_constituent_23k(&h).unwrap();
            assert_eq!(restriction_mult(&h, &label).unwrap(), BigUint::one(), "{h} {label}");
        }
    }
}
