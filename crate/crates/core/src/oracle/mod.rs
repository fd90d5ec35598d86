//! Brute-force verification on concrete finite groups: element enumeration, conjugacy
//! classes, Dixon-Schneider character tables, Sylow 3-subgroups and their normalizers.

pub mod cyclotomic;
pub mod field;
pub mod sylow;
pub mod table;

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use field::FiniteField;
pub use sylow::{mckay_check, sylow3_and_normalizer, McKayReport};
pub use table::{character_table, conjugacy_classes, CharacterTable, Classes};

pub const DEFAULT_CAP: usize = 20000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("group order exceeds the cap of {0}")]
    CapExceeded(usize),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("character table construction failed: {0}")]
    TableFailed(String),
}

/// The cap from `MCKAY_ORACLE_CAP`, or [`DEFAULT_CAP`].
pub fn cap_from_env() -> usize {
    std::env::var("MCKAY_ORACLE_CAP").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_CAP)
}

pub type Perm = Box<[u16]>;

/// A permutation group with every element listed; element 0 is the identity.
#[derive(Debug, Clone)]
pub struct ConcreteGroup {
    pub name: String,
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    inverses: Vec<usize>,
}

fn compose(a: &[u16], b: &[u16]) -> Perm {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn invert(a: &[u16]) -> Perm {
    let mut inv = vec![0u16; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x as usize] = i as u16;
    }
    inv.into()
}

impl ConcreteGroup {
    /// Closure of `gens` acting on `degree` points.
    pub fn generate(name: impl Into<String>, degree: usize, gens: &[Perm], cap: usize) -> Result<Self, OracleError> {
        let identity: Perm = (0..degree as u16).collect();
        let mut elements = vec![identity.clone()];
        let mut seen: HashSet<Perm> = HashSet::from([identity]);
        let mut i = 0;
        while i < elements.len() {
            for g in gens {
                let x = compose(&elements[i], g);
                if seen.insert(x.clone()) {
                    if elements.len() >= cap {
                        return Err(OracleError::CapExceeded(cap));
                    }
                    elements.push(x);
                }
            }
            i += 1;
        }
        Ok(Self::from_elements(name, degree, elements))
    }

    /// Wraps a list already closed under products; the identity is moved to the front.
    pub fn from_elements(name: impl Into<String>, degree: usize, mut elements: Vec<Perm>) -> Self {
        let identity: Perm = (0..degree as u16).collect();
        if let Some(pos) = elements.iter().position(|e| *e == identity) {
            elements.swap(0, pos);
        }
        let index: HashMap<Perm, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let inverses = elements.iter().map(|e| index[&invert(e)]).collect();
        ConcreteGroup { name: name.into(), degree, elements, index, inverses }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn element(&self, i: usize) -> &[u16] {
        &self.elements[i]
    }

    pub fn index_of(&self, perm: &[u16]) -> Option<usize> {
        self.index.get(perm).copied()
    }

    /// Index of `a * b` (apply `a` first).
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&compose(&self.elements[a], &self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let (mut x, mut k) = (a, 1);
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Subgroup generated by element indices, as sorted indices.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            for &g in gens {
                let x = self.mul(out[i], g);
                if !seen[x] {
                    seen[x] = true;
                    out.push(x);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// A generating set chosen greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        for x in 0..self.order() {
            if !inside[x] {
                gens.push(x);
                for y in self.closure(&gens) {
                    inside[y] = true;
                }
            }
        }
        gens
    }

    pub fn subgroup(&self, name: impl Into<String>, members: &[usize]) -> ConcreteGroup {
        Self::from_elements(name, self.degree, members.iter().map(|&i| self.elements[i].clone()).collect())
    }
}

/// Group descriptions accepted by [`build_group`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupSpec {
    Sym(usize),
    Gl(usize, u64),
    Gu(usize, u64),
    /// `S_r wr S_m` on `r * m` points.
    Wreath(usize, usize),
}

impl FromStr for GroupSpec {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || OracleError::Unsupported(format!("cannot parse group `{s}`"));
        let parts: Vec<&str> = s.split(':').collect();
        let num = |i: usize| parts.get(i).and_then(|x| x.parse::<u64>().ok()).ok_or_else(bad);
        match (parts[0], parts.len()) {
            ("sym", 2) => Ok(GroupSpec::Sym(num(1)? as usize)),
            ("gl", 3) => Ok(GroupSpec::Gl(num(1)? as usize, num(2)?)),
            ("gu", 3) => Ok(GroupSpec::Gu(num(1)? as usize, num(2)?)),
            ("wreath", 3) => Ok(GroupSpec::Wreath(num(1)? as usize, num(2)? as usize)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Sym(n) => write!(f, "sym:{n}"),
            GroupSpec::Gl(n, q) => write!(f, "gl:{n}:{q}"),
            GroupSpec::Gu(n, q) => write!(f, "gu:{n}:{q}"),
            GroupSpec::Wreath(r, m) => write!(f, "wreath:{r}:{m}"),
        }
    }
}

fn transposition(degree: usize, a: usize, b: usize) -> Perm {
    let mut p: Vec<u16> = (0..degree as u16).collect();
    p.swap(a, b);
    p.into()
}

fn cycle(degree: usize, points: &[usize]) -> Perm {
    let mut p: Vec<u16> = (0..degree as u16).collect();
    for (i, &x) in points.iter().enumerate() {
        p[x] = points[(i + 1) % points.len()] as u16;
    }
    p.into()
}

fn symmetric_generators(degree: usize, offset: usize, n: usize) -> Vec<Perm> {
    if n < 2 {
        return Vec::new();
    }
    let all: Vec<usize> = (offset..offset + n).collect();
    vec![transposition(degree, offset, offset + 1), cycle(degree, &all)]
}

/// Invertible matrices over `GF(q)` (or unitary ones over `GF(q^2)`), acting on column vectors.
fn matrix_group(n: usize, q: u64, unitary: bool, cap: usize) -> Result<ConcreteGroup, OracleError> {
    let field_order = if unitary { q * q } else { q };
    let field = FiniteField::new(field_order)?;
    let fq = field_order as usize;
    let points = fq.checked_pow(n as u32).filter(|&x| x <= u16::MAX as usize);
    let candidates = fq.checked_pow((n * n) as u32).filter(|&x| x <= 1 << 24);
    let (Some(points), Some(candidates)) = (points, candidates) else {
        return Err(OracleError::Unsupported(format!("matrices of size {n} over GF({field_order})")));
    };
    let to_vec = |mut v: usize| -> Vec<u16> {
        (0..n)
            .map(|_| {
                let d = v % fq;
                v /= fq;
                d as u16
            })
            .collect()
    };
    let from_vec = |v: &[u16]| v.iter().rev().fold(0usize, |acc, &c| acc * fq + c as usize);
    let vectors: Vec<Vec<u16>> = (0..points).map(to_vec).collect();
    let dot = |a: &[u16], b: &[u16]| a.iter().zip(b).fold(0u16, |acc, (&x, &y)| field.add(acc, field.mul(x, y)));
    let conj = |x: u16| field.pow(x, q);
    let mut elements = Vec::new();
    for code in 0..candidates {
        // column-major: column j is the image of the j-th basis vector
        let entries: Vec<u16> = (0..n * n).map(|i| ((code / fq.pow(i as u32)) % fq) as u16).collect();
        let col = |j: usize| &entries[j * n..(j + 1) * n];
        let ok = if unitary {
            (0..n).all(|i| {
                (0..n).all(|j| {
                    let ci: Vec<u16> = col(i).iter().map(|&x| conj(x)).collect();
                    dot(&ci, col(j)) == u16::from(i == j)
                })
            })
        } else {
            let images: HashSet<Vec<u16>> = vectors
                .iter()
                .map(|v| (0..n).map(|r| (0..n).fold(0, |acc, j| field.add(acc, field.mul(col(j)[r], v[j])))).collect())
                .collect();
            images.len() == points
        };
        if !ok {
            continue;
        }
        if elements.len() >= cap {
            return Err(OracleError::CapExceeded(cap));
        }
        let perm: Perm = vectors
            .iter()
            .map(|v| {
                let image: Vec<u16> =
                    (0..n).map(|r| (0..n).fold(0, |acc, j| field.add(acc, field.mul(col(j)[r], v[j])))).collect();
                from_vec(&image) as u16
            })
            .collect();
        elements.push(perm);
    }
    let name = format!("{}_{n}({q})", if unitary { "GU" } else { "GL" });
    Ok(ConcreteGroup::from_elements(name, points, elements))
}

pub fn build_group(spec: GroupSpec, cap: usize) -> Result<ConcreteGroup, OracleError> {
    match spec {
        GroupSpec::Sym(n) if n >= 1 => {
            ConcreteGroup::generate(format!("S_{n}"), n, &symmetric_generators(n, 0, n), cap)
        }
        GroupSpec::Gl(n, q) | GroupSpec::Gu(n, q) if n >= 1 => matrix_group(n, q, matches!(spec, GroupSpec::Gu(..)), cap),
        GroupSpec::Wreath(r, m) if r >= 1 && m >= 1 => {
            let degree = r * m;
            let mut gens = symmetric_generators(degree, 0, r);
            let block = |perm: &[usize]| -> Perm {
                let mut p = vec![0u16; degree];
                for (b, &target) in perm.iter().enumerate() {
                    for i in 0..r {
                        p[b * r + i] = (target * r + i) as u16;
                    }
                }
                p.into()
            };
            if m >= 2 {
                let mut swap: Vec<usize> = (0..m).collect();
                swap.swap(0, 1);
                gens.push(block(&swap));
                gens.push(block(&(0..m).map(|b| (b + 1) % m).collect::<Vec<_>>()));
            }
            ConcreteGroup::generate(format!("S_{r} wr S_{m}"), degree, &gens, cap)
        }
        _ => Err(OracleError::Unsupported(spec.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> ConcreteGroup {
        build_group(s.parse().unwrap(), DEFAULT_CAP).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(build("sym:4").order(), 24);
        assert_eq!(build("sym:1").order(), 1);
        assert_eq!(build("gl:2:2").order(), 6);
        assert_eq!(build("gl:2:3").order(), 48);
        assert_eq!(build("gl:3:2").order(), 168);
        assert_eq!(build("gu:2:2").order(), 18);
        assert_eq!(build("gu:1:2").order(), 3);
        assert_eq!(build("wreath:3:2").order(), 72);
    }

    #[test]
    fn group_laws() {
        let g = build("gl:2:3");
        for a in 0..g.order() {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            assert_eq!(g.pow(a, g.element_order(a)), 0);
        }
        assert_eq!(g.closure(&g.generators()).len(), g.order());
    }

    #[test]
    fn cap_and_parsing() {
        assert_eq!(build_group(GroupSpec::Sym(8), 1000).unwrap_err(), OracleError::CapExceeded(1000));
        assert!("sym".parse::<GroupSpec>().is_err());
        assert!("foo:1:2".parse::<GroupSpec>().is_err());
        assert_eq!("gu:2:4".parse::<GroupSpec>().unwrap(), GroupSpec::Gu(2, 4));
        assert!(build_group(GroupSpec::Gl(2, 6), DEFAULT_CAP).is_err());
    }
}
