//! Galois and automorphism actions on labels, all of the form `s -> s^u`.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde::Serialize;

use super::{
    enumerate_3prime_labels, enumerate_normalizer_labels, full_bijection, Epsilon, GlguError, GlguLabel, GlguPair,
    GroupParams, NormalizerLabel,
};

pub fn galois_act(label: &GlguLabel, u: i64) -> GlguLabel {
    let params = label.params();
    let mut pairs: Vec<GlguPair> =
        label.pairs.iter().map(|p| GlguPair { orbit: p.orbit.act(&params, u), lambda: p.lambda.clone() }).collect();
    pairs.sort();
    GlguLabel { pairs, ..label.clone() }
}

/// The field automorphism `F_p` of `G`.
pub fn frobenius_act(label: &GlguLabel) -> GlguLabel {
    galois_act(label, label.params().characteristic() as i64)
}

/// The transpose-inverse automorphism of `GL_n(q)`.
pub fn transpose_inverse_act(label: &GlguLabel) -> Result<GlguLabel, GlguError> {
    if label.epsilon != Epsilon::Plus {
        return Err(GlguError::MalformedLabel("transpose-inverse acts on GL only".into()));
    }
    Ok(galois_act(label, -1))
}

/// Units modulo `m`.
pub fn units(m: u64) -> Vec<u64> {
    (1..=m.max(1)).filter(|u| u.gcd(&m) == 1).map(|u| u % m.max(1)).collect()
}

/// `u` modulo `q^2 - 1` fixing the label.
pub fn label_stabilizer(label: &GlguLabel) -> BTreeSet<u64> {
    units(label.params().ambient_order()).into_iter().filter(|&u| galois_act(label, u as i64) == *label).collect()
}

pub fn normalizer_stabilizer(label: &NormalizerLabel) -> BTreeSet<u64> {
    units(label.local.params().ambient_order()).into_iter().filter(|&u| label.act(u as i64) == *label).collect()
}

fn orbit_sizes<T: Ord + Clone>(items: &[T], act: impl Fn(&T, u64) -> T, group: &[u64]) -> Vec<usize> {
    let mut seen = BTreeSet::new();
    let mut sizes = Vec::new();
    for x in items {
        if seen.contains(x) {
            continue;
        }
        let orbit: BTreeSet<T> = group.iter().map(|&u| act(x, u)).collect();
        sizes.push(orbit.len());
        seen.extend(orbit);
    }
    sizes.sort_unstable();
    sizes
}

/// Galois orbits and stabilizers on both sides of the bijection.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitReport {
    pub epsilon: Epsilon,
    pub q: u64,
    pub n: usize,
    pub labels: usize,
    pub group_orbit_sizes: Vec<usize>,
    pub normalizer_orbit_sizes: Vec<usize>,
    /// Stabilizer (as a set of units mod `q^2 - 1`) with its multiplicity among 3'-labels.
    pub stabilizers: BTreeMap<String, usize>,
    pub equivariant: bool,
    pub stabilizers_match: bool,
}

impl OrbitReport {
    pub fn pass(&self) -> bool {
        self.equivariant && self.stabilizers_match && self.group_orbit_sizes == self.normalizer_orbit_sizes
    }
}

pub fn fields_orbits(params: GroupParams, n: usize) -> Result<OrbitReport, GlguError> {
    let group = units(params.ambient_order());
    let labels = enumerate_3prime_labels(params, n);
    let normalizer = enumerate_normalizer_labels(params, n);
    let mut equivariant = true;
    let mut stabilizers_match = true;
    let mut stabilizers = BTreeMap::new();
    for label in &labels {
        let image = full_bijection(label)?;
        for &u in &group {
            equivariant &= full_bijection(&galois_act(label, u as i64))? == image.act(u as i64);
        }
        let stab = label_stabilizer(label);
        stabilizers_match &= stab == normalizer_stabilizer(&image);
        *stabilizers.entry(format!("{stab:?}")).or_insert(0) += 1;
    }
    Ok(OrbitReport {
        epsilon: params.epsilon,
        q: params.q,
        n,
        labels: labels.len(),
        group_orbit_sizes: orbit_sizes(&labels, |l, u| galois_act(l, u as i64), &group),
        normalizer_orbit_sizes: orbit_sizes(&normalizer, |l, u| l.act(u as i64), &group),
        stabilizers,
        equivariant,
        stabilizers_match,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glgu::SemisimpleOrbit;
    use crate::partition::Partition;

    #[test]
    fn identity_and_frobenius_order() {
        let params = GroupParams::new(Epsilon::Minus, 4).unwrap();
        for label in enumerate_3prime_labels(params, 3) {
            assert_eq!(galois_act(&label, 1), label);
            // F_p generates the Galois group of F_{q^2}
            let mut x = label.clone();
            for _ in 0..4 {
                x = frobenius_act(&x);
            }
            assert_eq!(x, label);
        }
        let orbit = SemisimpleOrbit::new(&params, 2, 1).unwrap();
        assert_eq!(orbit.act(&params, params.multiplier(2).unwrap() as i64), orbit);
    }

    #[test]
    fn transpose_inverse_on_gl() {
        let params = GroupParams::new(Epsilon::Plus, 4).unwrap();
        let label = GlguLabel::new(
            params,
            vec![GlguPair { orbit: SemisimpleOrbit::new(&params, 1, 1).unwrap(), lambda: Partition::row(1) }],
        )
        .unwrap();
        assert_eq!(transpose_inverse_act(&label).unwrap().pairs[0].orbit.rep, 2);
        let gu = GlguLabel { epsilon: Epsilon::Minus, ..label };
        assert!(transpose_inverse_act(&gu).is_err());
    }

    #[test]
    fn orbit_reports() {
        for eps in [Epsilon::Plus, Epsilon::Minus] {
            for q in [2, 4, 5, 7, 8] {
                for n in 1..=4 {
                    let r = fields_orbits(GroupParams::new(eps, q).unwrap(), n).unwrap();
                    assert!(r.pass(), "{eps} {q} {n}");
                }
            }
        }
        let s3 = fields_orbits(GroupParams::new(Epsilon::Plus, 2).unwrap(), 2).unwrap();
        assert_eq!(s3.group_orbit_sizes, vec![1, 1, 1]);
    }
}
