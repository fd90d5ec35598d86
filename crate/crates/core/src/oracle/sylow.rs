//! Sylow 3-subgroups, their normalizers, and the oracle-side McKay comparison.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{character_table, CharacterTable, ConcreteGroup, OracleError};

fn normalizer(g: &ConcreteGroup, members: &[usize], gens: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; g.order()];
    for &x in members {
        inside[x] = true;
    }
    (0..g.order()).filter(|&x| gens.iter().all(|&h| inside[g.mul(g.mul(g.inv(x), h), x)])).collect()
}

/// A Sylow 3-subgroup `P` (grown one factor of 3 at a time inside successive normalizers,
/// always taking the smallest admissible element) and `N_G(P)`.
pub fn sylow3_and_normalizer(g: &ConcreteGroup) -> (ConcreteGroup, ConcreteGroup) {
    let mut target = 1;
    while g.order() % (target * 3) == 0 {
        target *= 3;
    }
    let mut gens: Vec<usize> = Vec::new();
    let mut members = vec![0];
    let mut norm = (0..g.order()).collect::<Vec<_>>();
    while members.len() < target {
        let mut inside = vec![false; g.order()];
        for &x in &members {
            inside[x] = true;
        }
        let x = *norm
            .iter()
            .find(|&&x| !inside[x] && inside[g.pow(x, 3)])
            .expect("a 3-group of non-maximal order has a larger 3-overgroup in its normalizer");
        gens.push(x);
        members = g.closure(&gens);
        norm = normalizer(g, &members, &gens);
    }
    (g.subgroup(format!("P({})", g.name), &members), g.subgroup(format!("N({})", g.name), &norm))
}

/// Multiset of field-of-values stabilizers of the 3'-rows, keyed by a printable set.
fn field_multiset(table: &CharacterTable, modulus: u64) -> BTreeMap<String, usize> {
    let degrees = table.degrees();
    let mut out = BTreeMap::new();
    for (stab, d) in table.fields_of_values(modulus).iter().zip(degrees) {
        if d % 3 != 0 {
            *out.entry(format_set(stab)).or_insert(0) += 1;
        }
    }
    out
}

pub fn format_set(s: &BTreeSet<u64>) -> String {
    let items: Vec<String> = s.iter().map(u64::to_string).collect();
    format!("{{{}}}", items.join(","))
}

#[derive(Debug, Clone, Serialize)]
pub struct McKayReport {
    pub group: String,
    pub order: usize,
    pub sylow_order: usize,
    pub normalizer_order: usize,
    pub group_3prime: usize,
    pub normalizer_3prime: usize,
    /// Units modulo `field_modulus` fixing each 3'-character, with multiplicities.
    pub field_modulus: u64,
    pub group_fields: BTreeMap<String, usize>,
    pub normalizer_fields: BTreeMap<String, usize>,
}

impl McKayReport {
    pub fn counts_match(&self) -> bool {
        self.group_3prime == self.normalizer_3prime
    }

    pub fn fields_match(&self) -> bool {
        self.group_fields == self.normalizer_fields
    }
}

/// Character tables of `G` and `N_G(P)` and the comparison of their 3'-rows.
pub fn mckay_check(g: &ConcreteGroup) -> Result<(McKayReport, CharacterTable, CharacterTable), OracleError> {
    let (p, n) = sylow3_and_normalizer(g);
    let gt = character_table(g)?;
    let nt = character_table(&n)?;
    let modulus = gt.exponent as u64;
    let report = McKayReport {
        group: g.name.clone(),
        order: g.order(),
        sylow_order: p.order(),
        normalizer_order: n.order(),
        group_3prime: gt.count_3prime(),
        normalizer_3prime: nt.count_3prime(),
        field_modulus: modulus,
        group_fields: field_multiset(&gt, modulus),
        normalizer_fields: field_multiset(&nt, modulus),
    };
    Ok((report, gt, nt))
}
