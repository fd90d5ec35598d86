//! The canonical bijection between `Irr_3'(S_n)` and `Irr_3'(N_{S_n}(P))` on labels.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{
    add_rim_hook, core_tower, generating_pair, hook_generated, hooks, is_pprime_degree, pprime_partitions,
    remove_rim_hook, removable_rim_hooks, three_adic, CoreTower, Partition, PartitionError,
};
use crate::wreath::{c_d_labels, psi_inverse, psi_map, WreathError, WreathLabel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MckaySymError {
    #[error("{0} does not label a 3'-character")]
    NotThreePrime(Partition),
    #[error("malformed normalizer label: {0}")]
    MalformedLabel(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Wreath(#[from] WreathError),
}

/// One block of a normalizer label, for a single 3-adic digit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum NormalizerBlock {
    #[serde(rename = "hook")]
    Hook { hook: Partition },
    #[serde(rename = "C")]
    C { hook: Partition, top: Partition },
    #[serde(rename = "D")]
    D { pair: [Partition; 2] },
}

impl NormalizerBlock {
    pub fn size(&self) -> usize {
        match self {
            NormalizerBlock::Hook { hook } => hook.size(),
            NormalizerBlock::C { hook, .. } => 2 * hook.size(),
            NormalizerBlock::D { pair } => 2 * pair[0].size(),
        }
    }

    fn from_wreath(label: WreathLabel) -> Self {
        match label {
            WreathLabel::Diagonal { base, top } => NormalizerBlock::C { hook: base, top },
            WreathLabel::InducedPair { first, second } => NormalizerBlock::D { pair: [first, second] },
        }
    }

    fn to_wreath(&self) -> Option<WreathLabel> {
        match self {
            NormalizerBlock::Hook { .. } => None,
            NormalizerBlock::C { hook, top } => Some(WreathLabel::diagonal(hook.clone(), top.clone())),
            NormalizerBlock::D { pair } => WreathLabel::induced_pair(pair[0].clone(), pair[1].clone()).ok(),
        }
    }
}

/// A label of `Irr_3'(N_{S_n}(P))`: one block per 3-adic digit, exponents decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymNormalizerLabel {
    pub blocks: Vec<NormalizerBlock>,
}

impl SymNormalizerLabel {
    pub fn n(&self) -> usize {
        self.blocks.iter().map(NormalizerBlock::size).sum()
    }

    /// Checks alignment with the 3-adic expansion and the shape of each block.
    pub fn validate(&self) -> Result<(), MckaySymError> {
        let malformed = |msg: String| Err(MckaySymError::MalformedLabel(msg));
        let digits = three_adic(self.n()).digits;
        if digits.len() != self.blocks.len() {
            return malformed(format!("{} blocks for n = {}", self.blocks.len(), self.n()));
        }
        for (block, &(a, k)) in self.blocks.iter().zip(&digits) {
            let r = 3usize.pow(k);
            let is_hook = |h: &Partition| h.is_hook() && h.size() == r;
            let ok = match (a, block) {
                (1, NormalizerBlock::Hook { hook }) => is_hook(hook),
                (2, NormalizerBlock::C { hook, top }) => is_hook(hook) && top.size() == 2,
                (2, NormalizerBlock::D { pair }) => is_hook(&pair[0]) && is_hook(&pair[1]) && pair[0] < pair[1],
                _ => false,
            };
            if !ok {
                return malformed(format!("block {block:?} does not fit digit {a}*3^{k}"));
            }
        }
        Ok(())
    }
}

fn single_removable(lambda: &Partition, e: usize) -> Option<crate::partition::RimHook> {
    match removable_rim_hooks(lambda, e).as_slice() {
        [h] => Some(*h),
        _ => None,
    }
}

/// `lambda -> (mu_1, ..., mu_t)` with `mu_k` a 3'-partition of the `k`-th 3-adic summand.
pub fn star_sequence(lambda: &Partition) -> Result<Vec<Partition>, MckaySymError> {
    let bad = || MckaySymError::NotThreePrime(lambda.clone());
    if !is_pprime_degree(lambda, 3) {
        return Err(bad());
    }
    let mut cur = lambda.clone();
    let mut out = Vec::new();
    for (a, k) in three_adic(lambda.size()).digits {
        let r = 3usize.pow(k);
        if let Some(h) = single_removable(&cur, a * r) {
            out.push(h.hook_type());
            cur = remove_rim_hook(&cur, &h);
            continue;
        }
        let hs = removable_rim_hooks(&cur, r);
        if a != 2 || hs.len() != 2 {
            return Err(bad());
        }
        let mut types = Vec::new();
        let mut rest = None;
        for h in &hs {
            let gamma = remove_rim_hook(&cur, h);
            let kj = single_removable(&gamma, r).ok_or_else(bad)?;
            types.push(kj.hook_type());
            rest = Some(remove_rim_hook(&gamma, &kj));
        }
        out.push(hook_generated(&types[0], &types[1])?);
        cur = rest.expect("two hooks");
    }
    Ok(out)
}

/// Position of the single `(1)` in layer `k` of the 3-core tower of `nu`.
fn layer_position(nu: &Partition, k: usize) -> Option<usize> {
    let entries = core_tower(nu, 3).entries();
    let found: Vec<usize> = entries.iter().filter(|e| e.0 == k).map(|e| e.1).collect();
    match found.as_slice() {
        [x] => Some(*x),
        _ => None,
    }
}

pub fn star_sequence_inverse(mus: &[Partition]) -> Result<Partition, MckaySymError> {
    let n: usize = mus.iter().map(Partition::size).sum();
    let digits = three_adic(n).digits;
    if digits.len() != mus.len() {
        return Err(MckaySymError::MalformedLabel(format!("{} components for n = {n}", mus.len())));
    }
    let mut gamma = Partition::empty();
    for (mu, &(a, k)) in mus.iter().zip(&digits).rev() {
        let r = 3usize.pow(k);
        if mu.size() != a * r || !is_pprime_degree(mu, 3) {
            return Err(MckaySymError::MalformedLabel(format!("{mu} does not fit digit {a}*3^{k}")));
        }
        if let Some(leg) = mu.hook_leg() {
            gamma = add_rim_hook(&gamma, a * r, leg)?;
            continue;
        }
        let (k1, k2) = generating_pair(mu).ok_or_else(|| MckaySymError::MalformedLabel(format!("{mu}")))?;
        let mut entries = core_tower(&gamma, 3).entries();
        for kj in [k1, k2] {
            let nu = add_rim_hook(&gamma, r, kj.hook_leg().expect("hook"))?;
            let x = layer_position(&nu, k as usize).ok_or_else(|| MckaySymError::MalformedLabel(format!("{nu}")))?;
            entries.push((k as usize, x, Partition::row(1)));
        }
        gamma = CoreTower::from_entries(3, &entries).to_partition()?;
    }
    Ok(gamma)
}

/// The canonical McKay bijection on labels.
pub fn phi(lambda: &Partition) -> Result<SymNormalizerLabel, MckaySymError> {
    let mus = star_sequence(lambda)?;
    let blocks = mus
        .into_iter()
        .zip(three_adic(lambda.size()).digits)
        .map(|(mu, (a, _))| {
            if a == 1 {
                Ok(NormalizerBlock::Hook { hook: mu })
            } else {
                Ok(NormalizerBlock::from_wreath(psi_map(&mu)?))
            }
        })
        .collect::<Result<Vec<_>, MckaySymError>>()?;
    Ok(SymNormalizerLabel { blocks })
}

pub fn phi_inverse(label: &SymNormalizerLabel) -> Result<Partition, MckaySymError> {
    label.validate()?;
    let mus = label
        .blocks
        .iter()
        .map(|b| match b {
            NormalizerBlock::Hook { hook } => Ok(hook.clone()),
            other => {
                let w = other.to_wreath().ok_or_else(|| MckaySymError::MalformedLabel(format!("{other:?}")))?;
                Ok(psi_inverse(&w)?)
            }
        })
        .collect::<Result<Vec<_>, MckaySymError>>()?;
    star_sequence_inverse(&mus)
}

pub fn enumerate_3prime_sn(n: usize) -> Vec<Partition> {
    pprime_partitions(n, 3)
}

fn digit_blocks(a: usize, k: u32) -> Vec<NormalizerBlock> {
    if a == 1 {
        hooks(3usize.pow(k)).into_iter().map(|hook| NormalizerBlock::Hook { hook }).collect()
    } else {
        c_d_labels(k).into_iter().map(NormalizerBlock::from_wreath).collect()
    }
}

pub fn enumerate_normalizer_labels(n: usize) -> Vec<SymNormalizerLabel> {
    let mut out = vec![SymNormalizerLabel { blocks: Vec::new() }];
    for (a, k) in three_adic(n).digits {
        let choices = digit_blocks(a, k);
        out = out
            .into_iter()
            .flat_map(|l| {
                choices.iter().map(move |b| {
                    let mut blocks = l.blocks.clone();
                    blocks.push(b.clone());
                    SymNormalizerLabel { blocks }
                })
            })
            .collect();
    }
    out
}

/// Number of normalizer labels, without listing them.
pub fn normalizer_label_count(n: usize) -> usize {
    three_adic(n)
        .digits
        .iter()
        .map(|&(a, k)| {
            let r = 3usize.pow(k);
            if a == 1 {
                r
            } else {
                2 * r + r * (r - 1) / 2
            }
        })
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn sequences() {
        assert_eq!(star_sequence(&p(&[2, 1])).unwrap(), vec![p(&[2, 1])]);
        assert_eq!(star_sequence(&p(&[3, 3])).unwrap(), vec![p(&[3, 3])]);
        assert_eq!(star_sequence(&p(&[2, 2])).unwrap(), vec![p(&[2, 1]), p(&[1])]);
        assert!(matches!(star_sequence(&p(&[2, 1, 1])), Err(MckaySymError::NotThreePrime(_))));
    }

    #[test]
    fn two_hook_case_with_remainder() {
        let lambda = p(&[4, 3]);
        assert!(is_pprime_degree(&lambda, 3));
        let mus = star_sequence(&lambda).unwrap();
        assert_eq!(mus.len(), 2);
        assert!(!mus[0].is_hook());
        assert_eq!(star_sequence_inverse(&mus).unwrap(), lambda);
    }

    #[test]
    fn phi_examples() {
        let hook = |h: &[usize]| NormalizerBlock::Hook { hook: p(h) };
        assert_eq!(phi(&p(&[6, 1, 1, 1])).unwrap().blocks, vec![hook(&[6, 1, 1, 1])]);
        assert_eq!(phi(&p(&[6])).unwrap().blocks, vec![NormalizerBlock::C { hook: p(&[3]), top: p(&[2]) }]);
        assert_eq!(phi(&p(&[3, 2, 1])).unwrap().blocks, vec![NormalizerBlock::D { pair: [p(&[1, 1, 1]), p(&[3])] }]);
        let c = SymNormalizerLabel { blocks: vec![NormalizerBlock::C { hook: p(&[3]), top: p(&[1, 1]) }] };
        assert_eq!(phi_inverse(&c).unwrap(), p(&[3, 1, 1, 1]));
        let d = SymNormalizerLabel { blocks: vec![NormalizerBlock::D { pair: [p(&[1, 1, 1]), p(&[2, 1])] }] };
        assert_eq!(phi_inverse(&d).unwrap(), p(&[2, 2, 2]));
    }

    #[test]
    fn bad_labels() {
        let unsorted = SymNormalizerLabel { blocks: vec![NormalizerBlock::D { pair: [p(&[2, 1]), p(&[1, 1, 1])] }] };
        assert!(matches!(phi_inverse(&unsorted), Err(MckaySymError::MalformedLabel(_))));
        let misaligned = SymNormalizerLabel { blocks: vec![NormalizerBlock::Hook { hook: p(&[1]) }, NormalizerBlock::Hook { hook: p(&[3]) }] };
        assert!(matches!(phi_inverse(&misaligned), Err(MckaySymError::MalformedLabel(_))));
    }

    #[test]
    fn json_shape() {
        let label = phi(&p(&[3, 2, 1])).unwrap();
        let json = serde_json::to_value(&label).unwrap();
        assert_eq!(json["blocks"][0]["kind"], "D");
        let back: SymNormalizerLabel = serde_json::from_value(json).unwrap();
        assert_eq!(back, label);
    }

    #[test]
    fn bijective_small() {
        for n in 1..=30 {
            let parts = enumerate_3prime_sn(n);
            let labels: BTreeSet<SymNormalizerLabel> = enumerate_normalizer_labels(n).into_iter().collect();
            assert_eq!(labels.len(), normalizer_label_count(n));
            let image: BTreeSet<SymNormalizerLabel> = parts.iter().map(|l| phi(l).unwrap()).collect();
            assert_eq!(image.len(), parts.len(), "n={n}");
            assert_eq!(image, labels, "n={n}");
            for l in &labels {
                assert_eq!(&phi(&phi_inverse(l).unwrap()).unwrap(), l);
            }
        }
        assert_eq!(enumerate_3prime_sn(6).len(), 9);
    }
}
