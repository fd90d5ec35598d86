//! The bijection `Irr_3'(K wr S_m) -> Irr_3'(N)` with `N` the normalizer of a Sylow 3-subgroup,
//! and its composition with the global maps.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{
    global_star, global_star_inverse, k_labels, odd_reduction, odd_reduction_inverse, sort_entries, GlguError,
    GlguLabel, GroupParams, HLabel, KLabel,
};
use crate::mckay_sym::{star_sequence, star_sequence_inverse};
use crate::partition::{base_digits, hooks, is_pprime_degree, pprime_partitions, three_adic, Partition};

/// The factor of a normalizer label for one nonzero 3-adic digit `a_j 3^j` of `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LocalBlock {
    /// `a_j = 1`: a base character and a hook of `3^j`.
    Single { tau: KLabel, mu: Partition },
    /// `a_j = 2`, one base character: a 3'-partition of `2 * 3^j`.
    Double { tau: KLabel, nu: Partition },
    /// `a_j = 2`, two base characters `first.0 > second.0`, each with a hook of `3^j`.
    Pair { first: (KLabel, Partition), second: (KLabel, Partition) },
}

impl LocalBlock {
    fn pair(a: (KLabel, Partition), b: (KLabel, Partition)) -> LocalBlock {
        if a.0 > b.0 {
            LocalBlock::Pair { first: a, second: b }
        } else {
            LocalBlock::Pair { first: b, second: a }
        }
    }

    fn pieces(&self) -> Vec<(KLabel, Partition)> {
        match self {
            LocalBlock::Single { tau, mu } => vec![(tau.clone(), mu.clone())],
            LocalBlock::Double { tau, nu } => vec![(tau.clone(), nu.clone())],
            LocalBlock::Pair { first, second } => vec![first.clone(), second.clone()],
        }
    }

    pub fn act(&self, params: &GroupParams, u: i64) -> LocalBlock {
        match self {
            LocalBlock::Single { tau, mu } => LocalBlock::Single { tau: tau.act(params, u), mu: mu.clone() },
            LocalBlock::Double { tau, nu } => LocalBlock::Double { tau: tau.act(params, u), nu: nu.clone() },
            LocalBlock::Pair { first, second } => LocalBlock::pair(
                (first.0.act(params, u), first.1.clone()),
                (second.0.act(params, u), second.1.clone()),
            ),
        }
    }
}

/// A 3'-character of the normalizer in `K wr S_m`, one block per 3-adic digit of `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LocalLabel {
    pub epsilon: super::Epsilon,
    pub q: u64,
    pub m: usize,
    pub blocks: Vec<LocalBlock>,
}

impl LocalLabel {
    pub fn params(&self) -> GroupParams {
        GroupParams { epsilon: self.epsilon, q: self.q }
    }

    pub fn validate(&self) -> Result<(), GlguError> {
        let malformed = |m: String| Err(GlguError::MalformedLabel(m));
        let allowed = k_labels(&self.params());
        let digits = three_adic(self.m).digits;
        if digits.len() != self.blocks.len() {
            return malformed(format!("{} blocks for m = {}", self.blocks.len(), self.m));
        }
        for (block, &(a, j)) in self.blocks.iter().zip(&digits) {
            let r = 3usize.pow(j);
            let hook = |h: &Partition| h.is_hook() && h.size() == r;
            let ok = match (a, block) {
                (1, LocalBlock::Single { mu, .. }) => hook(mu),
                (2, LocalBlock::Double { nu, .. }) => nu.size() == 2 * r && is_pprime_degree(nu, 3),
                (2, LocalBlock::Pair { first, second }) => first.0 > second.0 && hook(&first.1) && hook(&second.1),
                _ => false,
            };
            if !ok || block.pieces().iter().any(|(tau, _)| !allowed.contains(tau)) {
                return malformed(format!("block {block:?} does not fit digit {a}*3^{j}"));
            }
        }
        Ok(())
    }
}

/// The `3^j`-pieces of `lambda` keyed by `j`.
fn split_pieces(lambda: &Partition) -> Result<BTreeMap<u32, Partition>, GlguError> {
    let mus = star_sequence(lambda)?;
    Ok(three_adic(lambda.size()).digits.iter().map(|d| d.1).zip(mus).collect())
}

/// `Theta`: each `lambda_i` splits along the 3-adic digits of `|lambda_i|`, and digit `j`
/// of `m` collects the pieces of every entry with a nonzero digit `j`.
pub fn local_theta(h: &HLabel) -> Result<LocalLabel, GlguError> {
    h.validate()?;
    let sizes: Vec<usize> = h.entries.iter().map(|e| e.1.size()).collect();
    let pieces: Vec<BTreeMap<u32, Partition>> =
        h.entries.iter().map(|e| split_pieces(&e.1)).collect::<Result<_, _>>()?;
    let mut blocks = Vec::new();
    let digits = three_adic(h.m).digits;
    let used: usize = pieces.iter().map(BTreeMap::len).sum();
    let mut placed = 0;
    for &(a, j) in &digits {
        let holders: Vec<usize> = (0..h.entries.len()).filter(|&i| pieces[i].contains_key(&j)).collect();
        let piece = |i: usize| (h.entries[i].0.clone(), pieces[i][&j].clone());
        let b = |i: usize| base_digits(sizes[i], 3)[j as usize];
        let block = match (a, holders.as_slice()) {
            (1, &[i]) if b(i) == 1 => {
                let (tau, mu) = piece(i);
                LocalBlock::Single { tau, mu }
            }
            (2, &[i]) if b(i) == 2 => {
                let (tau, nu) = piece(i);
                LocalBlock::Double { tau, nu }
            }
            (2, &[i, k]) if b(i) == 1 && b(k) == 1 => LocalBlock::pair(piece(i), piece(k)),
            _ => return Err(GlguError::UnsatisfiableDigits(sizes)),
        };
        placed += holders.len();
        blocks.push(block);
    }
    if placed != used {
        return Err(GlguError::UnsatisfiableDigits(sizes));
    }
    Ok(LocalLabel { epsilon: h.epsilon, q: h.q, m: h.m, blocks })
}

pub fn local_theta_inverse(label: &LocalLabel) -> Result<HLabel, GlguError> {
    label.validate()?;
    let mut by_tau: BTreeMap<KLabel, Vec<(u32, Partition)>> = BTreeMap::new();
    for (block, &(_, j)) in label.blocks.iter().zip(&three_adic(label.m).digits) {
        for (tau, piece) in block.pieces() {
            by_tau.entry(tau).or_default().push((j, piece));
        }
    }
    let mut entries = Vec::new();
    for (tau, mut pieces) in by_tau {
        pieces.sort_by(|a, b| b.0.cmp(&a.0));
        let mus: Vec<Partition> = pieces.into_iter().map(|p| p.1).collect();
        entries.push((tau, star_sequence_inverse(&mus)?));
    }
    sort_entries(&mut entries);
    let h = HLabel::new(label.params(), entries);
    h.validate()?;
    Ok(h)
}

/// All labels of `Irr_3'(N)` for `K wr S_m`.
pub fn enumerate_local_labels(params: GroupParams, m: usize) -> Vec<LocalLabel> {
    let ks = k_labels(&params);
    let mut out = vec![Vec::new()];
    for (a, j) in three_adic(m).digits {
        let r = 3usize.pow(j);
        let mut choices = Vec::new();
        if a == 1 {
            for tau in &ks {
                for mu in hooks(r) {
                    choices.push(LocalBlock::Single { tau: tau.clone(), mu });
                }
            }
        } else {
            for tau in &ks {
                for nu in pprime_partitions(2 * r, 3) {
                    choices.push(LocalBlock::Double { tau: tau.clone(), nu });
                }
            }
            for (x, t1) in ks.iter().enumerate() {
                for t2 in &ks[..x] {
                    for h1 in hooks(r) {
                        for h2 in hooks(r) {
                            choices.push(LocalBlock::Pair { first: (t1.clone(), h1.clone()), second: (t2.clone(), h2) });
                        }
                    }
                }
            }
        }
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<LocalBlock>| {
                choices.iter().map(move |c| {
                    let mut v = prefix.clone();
                    v.push(c.clone());
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(|blocks| LocalLabel { epsilon: params.epsilon, q: params.q, m, blocks }).collect()
}

/// A 3'-character of the Sylow 3-normalizer of `G_n`: an optional linear factor
/// (odd `n` with `3 | q + eps`) and a local label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NormalizerLabel {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub linear: Option<u64>,
    pub local: LocalLabel,
}

impl NormalizerLabel {
    pub fn act(&self, u: i64) -> NormalizerLabel {
        let params = self.local.params();
        let n1 = params.linear_count() as i64;
        NormalizerLabel {
            n: self.n,
            linear: self.linear.map(|t| ((t as i64 * u.rem_euclid(n1)) % n1) as u64),
            local: LocalLabel { blocks: self.local.blocks.iter().map(|b| b.act(&params, u)).collect(), ..self.local.clone() },
        }
    }
}

fn needs_reduction(params: &GroupParams, n: usize) -> bool {
    !params.is_split() && n % 2 == 1
}

/// Wreath rank `m` of `H` for `G_n`.
pub fn wreath_rank(params: &GroupParams, n: usize) -> usize {
    if params.is_split() {
        n
    } else {
        n / 2
    }
}

/// The composed canonical bijection `Irr_3'(G_n) -> Irr_3'(N_G(P))`.
pub fn full_bijection(label: &GlguLabel) -> Result<NormalizerLabel, GlguError> {
    let params = label.params();
    let (linear, even) = if needs_reduction(&params, label.n) {
        let (t, even) = odd_reduction(label)?;
        (Some(t), even)
    } else {
        (None, label.clone())
    };
    let local = local_theta(&global_star(&even)?)?;
    Ok(NormalizerLabel { n: label.n, linear, local })
}

pub fn full_bijection_inverse(label: &NormalizerLabel) -> Result<GlguLabel, GlguError> {
    let params = label.local.params();
    let mut even = global_star_inverse(&local_theta_inverse(&label.local)?)?;
    if needs_reduction(&params, label.n) != label.linear.is_some() {
        return Err(GlguError::MalformedLabel("linear factor does not match n".into()));
    }
    if let Some(t) = label.linear {
        return odd_reduction_inverse(t, &even);
    }
    even.n = label.n;
    if even.pairs.iter().map(|p| p.orbit.d as usize * p.lambda.size()).sum::<usize>() != label.n {
        return Err(GlguError::MalformedLabel("rank does not match n".into()));
    }
    Ok(even)
}

pub fn enumerate_normalizer_labels(params: GroupParams, n: usize) -> Vec<NormalizerLabel> {
    let locals = enumerate_local_labels(params, wreath_rank(&params, n));
    if needs_reduction(&params, n) {
        (0..params.linear_count())
            .flat_map(|t| locals.iter().map(move |l| NormalizerLabel { n, linear: Some(t), local: l.clone() }))
            .collect()
    } else {
        locals.into_iter().map(|local| NormalizerLabel { n, linear: None, local }).collect()
    }
}

/// `|Irr_3'(N_G(P))|` without listing.
pub fn normalizer_label_count(params: GroupParams, n: usize) -> u128 {
    let k = k_labels(&params).len() as u128;
    let mut count: u128 = if needs_reduction(&params, n) { params.linear_count() as u128 } else { 1 };
    for (a, j) in three_adic(wreath_rank(&params, n)).digits {
        let r = 3u128.pow(j);
        count *= if a == 1 { k * r } else { k * (2 * r + r * (r - 1) / 2) + k * (k - 1) / 2 * r * r };
    }
    count
}
