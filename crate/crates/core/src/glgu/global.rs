//! The bijection `Irr_3'(G) -> Irr_3'(H)` onto a wreath product `H = K wr S_m`,
//! and the reduction from odd to even rank when `3 | q + eps`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{is_3prime_label, multinomial_is_3prime, GlguError, GlguLabel, GlguPair, GroupParams, SemisimpleOrbit};
use crate::partition::{combine_core_quotient, is_pprime_degree, p_core_and_quotient, Partition};

/// An irreducible character of the base group `K` of `H`.
///
/// For `3 | q - eps`, `K = G_1` and labels are `Linear`. Otherwise `K = GL_1(q^2) : C_2`
/// and labels are `Extended` (a fixed point `s` of `x -> x^(eps q)` with a character of `C_2`)
/// or `Induced` (an orbit of size 2).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KLabel {
    Linear { s: u64 },
    Extended { s: u64, nu: Partition },
    Induced { rep: u64 },
}

impl KLabel {
    /// `(orbit degree, exponent, tag)` with `(2)` before `(1,1)`.
    fn key(&self) -> (u32, u64, u8) {
        match self {
            KLabel::Linear { s } => (1, *s, 0),
            KLabel::Extended { s, nu } => (1, *s, (nu.len() == 2) as u8),
            KLabel::Induced { rep } => (2, *rep, 0),
        }
    }

    pub fn degree(&self) -> u32 {
        match self {
            KLabel::Induced { .. } => 2,
            _ => 1,
        }
    }

    /// Image under `s -> s^u`.
    pub fn act(&self, params: &GroupParams, u: i64) -> KLabel {
        let lin = |s: u64| {
            let n = params.linear_count() as i64;
            ((s as i64 * u.rem_euclid(n)) % n) as u64
        };
        match self {
            KLabel::Linear { s } => KLabel::Linear { s: lin(*s) },
            KLabel::Extended { s, nu } => KLabel::Extended { s: lin(*s), nu: nu.clone() },
            KLabel::Induced { rep } => {
                KLabel::Induced { rep: SemisimpleOrbit { d: 2, rep: *rep }.act(params, u).rep }
            }
        }
    }
}

impl PartialOrd for KLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for KLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl std::fmt::Display for KLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KLabel::Linear { s } => write!(f, "lin({s})"),
            KLabel::Extended { s, nu } => write!(f, "ext({s},{nu})"),
            KLabel::Induced { rep } => write!(f, "ind({rep})"),
        }
    }
}

/// `Irr(K)` in increasing order.
pub fn k_labels(params: &GroupParams) -> Vec<KLabel> {
    let n1 = params.linear_count();
    if params.is_split() {
        return (0..n1).map(|s| KLabel::Linear { s }).collect();
    }
    let mut out = Vec::new();
    for s in 0..n1 {
        out.push(KLabel::Extended { s, nu: Partition::row(2) });
        out.push(KLabel::Extended { s, nu: Partition::column(2) });
    }
    let induced = super::orbits_of_degree(params, 2).expect("small modulus");
    out.extend(induced.into_iter().map(|o| KLabel::Induced { rep: o.rep }));
    out
}

/// A 3'-character of `H = K wr S_m`: distinct `tau_i` with 3'-partitions `lambda_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HLabel {
    pub epsilon: super::Epsilon,
    pub q: u64,
    pub m: usize,
    pub entries: Vec<(KLabel, Partition)>,
}

/// Size descending, then `tau` descending.
pub(crate) fn sort_entries(entries: &mut [(KLabel, Partition)]) {
    entries.sort_by(|a, b| b.1.size().cmp(&a.1.size()).then_with(|| b.0.cmp(&a.0)));
}

impl HLabel {
    pub fn new(params: GroupParams, mut entries: Vec<(KLabel, Partition)>) -> Self {
        sort_entries(&mut entries);
        HLabel {
            epsilon: params.epsilon,
            q: params.q,
            m: entries.iter().map(|e| e.1.size()).sum(),
            entries,
        }
    }

    pub fn params(&self) -> GroupParams {
        GroupParams { epsilon: self.epsilon, q: self.q }
    }

    pub fn validate(&self) -> Result<(), GlguError> {
        let malformed = |m: String| Err(GlguError::MalformedLabel(m));
        let params = self.params();
        let allowed = k_labels(&params);
        let mut seen = std::collections::BTreeSet::new();
        for (tau, lambda) in &self.entries {
            if !allowed.contains(tau) {
                return malformed(format!("{tau} is not a character of the base group"));
            }
            if !seen.insert(tau.clone()) {
                return malformed(format!("{tau} repeated"));
            }
            if lambda.is_empty() || !is_pprime_degree(lambda, 3) {
                return malformed(format!("{lambda} is not a 3'-partition"));
            }
        }
        let sizes: Vec<usize> = self.entries.iter().map(|e| e.1.size()).collect();
        if sizes.iter().sum::<usize>() != self.m || !multinomial_is_3prime(&sizes) {
            return malformed(format!("multiplicities {sizes:?}"));
        }
        let mut sorted = self.entries.clone();
        sort_entries(&mut sorted);
        if sorted != self.entries {
            return malformed("entries not in canonical order".into());
        }
        Ok(())
    }
}

/// `chi -> chi^*` from `Irr_3'(G_n)` to `Irr_3'(H)`; `n` must be even when `3 | q + eps`.
pub fn global_star(label: &GlguLabel) -> Result<HLabel, GlguError> {
    let params = label.params();
    if !is_3prime_label(label) {
        return Err(GlguError::NotThreePrime(label.to_string()));
    }
    let mut entries = Vec::new();
    if params.is_split() {
        for pair in &label.pairs {
            entries.push((KLabel::Linear { s: pair.orbit.rep }, pair.lambda.clone()));
        }
        return Ok(HLabel::new(params, entries));
    }
    if label.n % 2 == 1 {
        return Err(GlguError::OddN);
    }
    for pair in &label.pairs {
        if pair.orbit.d == 2 {
            entries.push((KLabel::Induced { rep: pair.orbit.rep }, pair.lambda.clone()));
            continue;
        }
        let (core, quotient) = p_core_and_quotient(&pair.lambda, 2);
        if !core.is_empty() {
            return Err(GlguError::NotThreePrime(label.to_string()));
        }
        for (component, nu) in quotient.into_iter().zip([Partition::row(2), Partition::column(2)]) {
            if !component.is_empty() {
                entries.push((KLabel::Extended { s: pair.orbit.rep, nu }, component));
            }
        }
    }
    Ok(HLabel::new(params, entries))
}

pub fn global_star_inverse(h: &HLabel) -> Result<GlguLabel, GlguError> {
    h.validate()?;
    let params = h.params();
    let mut pairs = Vec::new();
    let mut split: BTreeMap<u64, [Partition; 2]> = BTreeMap::new();
    for (tau, lambda) in &h.entries {
        match tau {
            KLabel::Linear { s } => {
                pairs.push(GlguPair { orbit: SemisimpleOrbit::new(&params, 1, *s)?, lambda: lambda.clone() })
            }
            KLabel::Induced { rep } => {
                pairs.push(GlguPair { orbit: SemisimpleOrbit::new(&params, 2, *rep)?, lambda: lambda.clone() })
            }
            KLabel::Extended { s, nu } => {
                let slot = split.entry(*s).or_default();
                slot[(nu.len() == 2) as usize] = lambda.clone();
            }
        }
    }
    for (s, quotient) in split {
        let lambda = combine_core_quotient(&Partition::empty(), &quotient, 2)?;
        pairs.push(GlguPair { orbit: SemisimpleOrbit::new(&params, 1, s)?, lambda });
    }
    let label = GlguLabel::new(params, pairs)?;
    if !is_3prime_label(&label) {
        return Err(GlguError::NotThreePrime(label.to_string()));
    }
    Ok(label)
}

/// `chi -> (S(t, (1)), chi^*)` from `Irr_3'(G_{2m+1})` to `Irr(G_1) x Irr_3'(G_{2m})`, for `3 | q + eps`.
pub fn odd_reduction(label: &GlguLabel) -> Result<(u64, GlguLabel), GlguError> {
    let params = label.params();
    if label.n % 2 == 0 {
        return Err(GlguError::EvenN);
    }
    if params.is_split() || !is_3prime_label(label) {
        return Err(GlguError::NotThreePrime(label.to_string()));
    }
    let odd: Vec<usize> =
        (0..label.pairs.len()).filter(|&i| (label.pairs[i].orbit.d as usize * label.pairs[i].lambda.size()) % 2 == 1).collect();
    let [i] = odd.as_slice() else {
        return Err(GlguError::NotThreePrime(label.to_string()));
    };
    let pair = &label.pairs[*i];
    let (core, quotient) = p_core_and_quotient(&pair.lambda, 2);
    if pair.orbit.d != 1 || core != Partition::row(1) {
        return Err(GlguError::NotThreePrime(label.to_string()));
    }
    let nu = combine_core_quotient(&Partition::empty(), &quotient, 2)?;
    let mut pairs = label.pairs.clone();
    if nu.is_empty() {
        pairs.remove(*i);
    } else {
        pairs[*i].lambda = nu;
    }
    Ok((pair.orbit.rep, GlguLabel::new(params, pairs)?))
}

pub fn odd_reduction_inverse(t: u64, even: &GlguLabel) -> Result<GlguLabel, GlguError> {
    let params = even.params();
    if even.n % 2 == 1 {
        return Err(GlguError::OddN);
    }
    let orbit = SemisimpleOrbit::new(&params, 1, t)?;
    let mut pairs = even.pairs.clone();
    match pairs.iter_mut().find(|p| p.orbit == orbit) {
        Some(pair) => {
            let (core, quotient) = p_core_and_quotient(&pair.lambda, 2);
            if !core.is_empty() {
                return Err(GlguError::NotThreePrime(even.to_string()));
            }
            pair.lambda = combine_core_quotient(&Partition::row(1), &quotient, 2)?;
        }
        None => pairs.push(GlguPair { orbit, lambda: Partition::row(1) }),
    }
    let label = GlguLabel::new(params, pairs)?;
    if !is_3prime_label(&label) {
        return Err(GlguError::NotThreePrime(label.to_string()));
    }
    Ok(label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glgu::{enumerate_3prime_labels, Epsilon};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn k_label_order() {
        let params = GroupParams::new(Epsilon::Plus, 2).unwrap();
        let ks = k_labels(&params);
        assert_eq!(ks.len(), 3);
        assert!(ks.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(ks[2], KLabel::Induced { rep: 1 });
    }

    #[test]
    fn zeta_convention() {
        let params = GroupParams::new(Epsilon::Plus, 2).unwrap();
        let label = GlguLabel::new(params, vec![GlguPair { orbit: SemisimpleOrbit::new(&params, 1, 0).unwrap(), lambda: p(&[1, 1]) }]).unwrap();
        let h = global_star(&label).unwrap();
        assert_eq!(h.entries, vec![(KLabel::Extended { s: 0, nu: p(&[2]) }, p(&[1]))]);
        assert_eq!(global_star_inverse(&h).unwrap(), label);
    }

    #[test]
    fn odd_reduction_examples() {
        let params = GroupParams::new(Epsilon::Minus, 4).unwrap();
        let o = SemisimpleOrbit::new(&params, 1, 0).unwrap();
        let label = GlguLabel::new(params, vec![GlguPair { orbit: o, lambda: p(&[3]) }]).unwrap();
        let (t, even) = odd_reduction(&label).unwrap();
        assert_eq!(t, 0);
        assert_eq!(even.pairs[0].lambda.size(), 2);
        assert_eq!(p_core_and_quotient(&even.pairs[0].lambda, 2).1, p_core_and_quotient(&p(&[3]), 2).1);
        assert_eq!(odd_reduction_inverse(t, &even).unwrap(), label);
        let single = GlguLabel::new(params, vec![GlguPair { orbit: o, lambda: p(&[1]) }]).unwrap();
        let (t, even) = odd_reduction(&single).unwrap();
        assert!(even.pairs.is_empty());
        assert_eq!(odd_reduction_inverse(t, &even).unwrap(), single);
    }

    #[test]
    fn roundtrips() {
        for (eps, q) in [(Epsilon::Plus, 2), (Epsilon::Plus, 4), (Epsilon::Minus, 2), (Epsilon::Minus, 4), (Epsilon::Plus, 5)] {
            let params = GroupParams::new(eps, q).unwrap();
            for n in 1..=5 {
                for label in enumerate_3prime_labels(params, n) {
                    if params.is_split() || n % 2 == 0 {
                        let h = global_star(&label).unwrap();
                        h.validate().unwrap();
                        assert_eq!(global_star_inverse(&h).unwrap(), label);
                    } else {
                        let (t, even) = odd_reduction(&label).unwrap();
                        assert_eq!(odd_reduction_inverse(t, &even).unwrap(), label);
                    }
                }
            }
        }
    }
}
