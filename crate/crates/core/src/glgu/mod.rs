//! Labels of irreducible characters of `GL_n(q)` and `GU_n(q)` with `3` not dividing `q`,
//! their 3'-degree criterion, and canonical bijections onto Sylow 3-normalizer labels.
//!
//! A character is a multiset of pairs `(s, lambda)` where `s` runs over Frobenius orbits
//! of roots of unity. An orbit of degree `d` is stored as an exponent modulo
//! `N_d = q^d - eps^d`, closed under multiplication by `eps * q`.

mod actions;
mod global;
mod local;

pub use actions::*;
pub use global::*;
pub use local::*;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::mckay_sym::MckaySymError;
use crate::partition::{base_digits, is_pprime_degree, p_core_and_quotient, partitions, Partition, PartitionError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GlguError {
    #[error("q = {0} is divisible by 3")]
    DefiningCharacteristic(u64),
    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("label is not of 3'-degree: {0}")]
    NotThreePrime(String),
    #[error("n must be even here; apply the odd reduction first")]
    OddN,
    #[error("n must be odd for the odd reduction")]
    EvenN,
    #[error("malformed label: {0}")]
    MalformedLabel(String),
    #[error("no digit witness for multiplicities {0:?}")]
    UnsatisfiableDigits(Vec<usize>),
    #[error("exponent {rep} does not have exact degree {d}")]
    BadOrbit { d: u32, rep: u64 },
    #[error("arithmetic overflow for q = {q}, d = {d}")]
    Overflow { q: u64, d: u32 },
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Sym(#[from] MckaySymError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Epsilon {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Epsilon {
    pub fn sign(self) -> i64 {
        match self {
            Epsilon::Plus => 1,
            Epsilon::Minus => -1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Epsilon::Plus => "+",
            Epsilon::Minus => "-",
        }
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl std::str::FromStr for Epsilon {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "+" | "plus" | "gl" => Ok(Epsilon::Plus),
            "-" | "minus" | "gu" => Ok(Epsilon::Minus),
            other => Err(format!("epsilon must be + or -, got {other}")),
        }
    }
}

/// `G = GL_n(q)` for `eps = +`, `GU_n(q)` for `eps = -`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupParams {
    pub epsilon: Epsilon,
    pub q: u64,
}

impl GroupParams {
    pub fn new(epsilon: Epsilon, q: u64) -> Result<Self, GlguError> {
        if q % 3 == 0 {
            return Err(GlguError::DefiningCharacteristic(q));
        }
        prime_of_power(q).ok_or(GlguError::NotPrimePower(q))?;
        Ok(GroupParams { epsilon, q })
    }

    pub fn characteristic(&self) -> u64 {
        prime_of_power(self.q).expect("validated")
    }

    /// Multiplicative order of `eps * q` modulo 3.
    pub fn e(&self) -> usize {
        let r = (self.epsilon.sign() * (self.q % 3) as i64).rem_euclid(3);
        if r == 1 {
            1
        } else {
            2
        }
    }

    /// `3 | q - eps`.
    pub fn is_split(&self) -> bool {
        self.e() == 1
    }

    /// `N_d = q^d - eps^d`, the order of the cyclic group holding degree-`d` orbits.
    pub fn modulus(&self, d: u32) -> Result<u64, GlguError> {
        let qd = self.q.checked_pow(d).ok_or(GlguError::Overflow { q: self.q, d })?;
        Ok(match (self.epsilon, d % 2) {
            (Epsilon::Minus, 1) => qd + 1,
            _ => qd - 1,
        })
    }

    /// `eps * q` reduced modulo `N_d`.
    pub fn multiplier(&self, d: u32) -> Result<u64, GlguError> {
        let n = self.modulus(d)?;
        Ok(match self.epsilon {
            Epsilon::Plus => self.q % n,
            Epsilon::Minus => (n - self.q % n) % n,
        })
    }

    /// `q^2 - 1`; every orbit of degree dividing 2 lives in this cyclic group.
    pub fn ambient_order(&self) -> u64 {
        self.q * self.q - 1
    }

    /// `|G_1| = q - eps`.
    pub fn linear_count(&self) -> u64 {
        match self.epsilon {
            Epsilon::Plus => self.q - 1,
            Epsilon::Minus => self.q + 1,
        }
    }
}

pub(crate) fn prime_of_power(q: u64) -> Option<u64> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut x = q;
    while x % p == 0 {
        x /= p;
    }
    (x == 1).then_some(p)
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// A Frobenius orbit of roots of unity, by degree and minimal exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SemisimpleOrbit {
    pub d: u32,
    pub rep: u64,
}

impl SemisimpleOrbit {
    /// The orbit of exponent `x` modulo `N_d`, which must have exactly `d` elements.
    pub fn new(params: &GroupParams, d: u32, x: u64) -> Result<Self, GlguError> {
        let elements = orbit_elements(params, d, x)?;
        if elements.len() != d as usize {
            return Err(GlguError::BadOrbit { d, rep: x });
        }
        Ok(SemisimpleOrbit { d, rep: elements[0] })
    }

    pub fn elements(&self, params: &GroupParams) -> Vec<u64> {
        orbit_elements(params, self.d, self.rep).expect("valid orbit")
    }

    /// Image under `s -> s^u`.
    pub fn act(&self, params: &GroupParams, u: i64) -> Self {
        let n = params.modulus(self.d).expect("valid orbit");
        let u = u.rem_euclid(n as i64) as u64;
        SemisimpleOrbit::new(params, self.d, mul_mod(self.rep, u, n)).expect("units preserve degree")
    }
}

/// Sorted orbit of `x` under multiplication by `eps * q` modulo `N_d`.
fn orbit_elements(params: &GroupParams, d: u32, x: u64) -> Result<Vec<u64>, GlguError> {
    let n = params.modulus(d)?;
    let m = params.multiplier(d)?;
    let x = x % n;
    let mut out = vec![x];
    let mut y = mul_mod(x, m, n);
    while y != x {
        out.push(y);
        y = mul_mod(y, m, n);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// All orbits of exact degree `d`.
pub fn orbits_of_degree(params: &GroupParams, d: u32) -> Result<Vec<SemisimpleOrbit>, GlguError> {
    let n = params.modulus(d)?;
    let mut out = Vec::new();
    for x in 0..n {
        let el = orbit_elements(params, d, x)?;
        if el.len() == d as usize && el[0] == x {
            out.push(SemisimpleOrbit { d, rep: x });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GlguPair {
    #[serde(flatten)]
    pub orbit: SemisimpleOrbit,
    pub lambda: Partition,
}

/// A character `S(s_1, lambda_1) o ... o S(s_r, lambda_r)` of `GL_n(q)` or `GU_n(q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GlguLabel {
    pub epsilon: Epsilon,
    pub q: u64,
    pub n: usize,
    pub pairs: Vec<GlguPair>,
}

impl GlguLabel {
    /// Sorts pairs and checks distinct orbits, nonempty partitions and `n`.
    pub fn new(params: GroupParams, mut pairs: Vec<GlguPair>) -> Result<Self, GlguError> {
        pairs.sort();
        let label = GlguLabel {
            epsilon: params.epsilon,
            q: params.q,
            n: pairs.iter().map(|p| p.orbit.d as usize * p.lambda.size()).sum(),
            pairs,
        };
        label.validate()?;
        Ok(label)
    }

    pub fn params(&self) -> GroupParams {
        GroupParams { epsilon: self.epsilon, q: self.q }
    }

    pub fn validate(&self) -> Result<(), GlguError> {
        let malformed = |m: String| Err(GlguError::MalformedLabel(m));
        let params = GroupParams::new(self.epsilon, self.q)?;
        let mut total = 0;
        for (i, pair) in self.pairs.iter().enumerate() {
            if pair.lambda.is_empty() {
                return malformed("empty partition".into());
            }
            let canonical = SemisimpleOrbit::new(&params, pair.orbit.d, pair.orbit.rep)?;
            if canonical != pair.orbit {
                return malformed(format!("orbit {:?} is not canonical", pair.orbit));
            }
            if i > 0 && self.pairs[i - 1] >= *pair {
                return malformed("pairs not sorted or orbits repeated".into());
            }
            if i > 0 && self.pairs[i - 1].orbit == pair.orbit {
                return malformed("repeated orbit".into());
            }
            total += pair.orbit.d as usize * pair.lambda.size();
        }
        if total != self.n {
            return malformed(format!("sizes sum to {total}, not n = {}", self.n));
        }
        Ok(())
    }
}

impl fmt::Display for GlguLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> =
            self.pairs.iter().map(|p| format!("S({}:{},{})", p.orbit.d, p.orbit.rep, p.lambda)).collect();
        write!(f, "{}", body.join("o"))
    }
}

/// `m! / prod m_j!` is prime to 3 iff adding the `m_j` in base 3 never carries.
pub fn multinomial_is_3prime(parts: &[usize]) -> bool {
    let mut acc = 0usize;
    for &x in parts {
        if !adds_without_carry(acc, x) {
            return false;
        }
        acc += x;
    }
    true
}

fn adds_without_carry(a: usize, b: usize) -> bool {
    let (da, db, ds) = (base_digits(a, 3), base_digits(b, 3), base_digits(a + b, 3));
    let digit = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
    (0..ds.len()).all(|i| digit(&da, i) + digit(&db, i) == digit(&ds, i))
}

/// `(c_j, m_j)` for a pair if it satisfies the per-pair conditions, else `None`.
fn pair_data(e: usize, d: u32, lambda: &Partition) -> Option<(usize, usize)> {
    let d = d as usize;
    if e % d != 0 {
        return None;
    }
    let nj = d * lambda.size();
    let (cj, mj) = (nj % e, nj / e);
    let e_prime = e / d;
    let (core, quotient) = if e_prime == 1 {
        (Partition::empty(), vec![lambda.clone()])
    } else {
        p_core_and_quotient(lambda, e_prime)
    };
    if d * core.size() != cj {
        return None;
    }
    let sizes: Vec<usize> = quotient.iter().map(Partition::size).collect();
    if sizes.iter().sum::<usize>() != mj {
        return None;
    }
    if !quotient.iter().all(|mu| is_pprime_degree(mu, 3)) || !multinomial_is_3prime(&sizes) {
        return None;
    }
    Some((cj, mj))
}

/// The 3'-degree criterion.
pub fn is_3prime_label(label: &GlguLabel) -> bool {
    let params = label.params();
    let e = params.e();
    let c = label.n % e;
    let mut cs = 0;
    let mut ms = Vec::new();
    for pair in &label.pairs {
        match pair_data(e, pair.orbit.d, &pair.lambda) {
            Some((cj, mj)) => {
                cs += cj;
                ms.push(mj);
            }
            None => return false,
        }
    }
    cs == c && multinomial_is_3prime(&ms)
}

/// Orbits of degree dividing `e`, in label order.
pub fn small_orbits(params: &GroupParams) -> Vec<SemisimpleOrbit> {
    let mut out = orbits_of_degree(params, 1).expect("small modulus");
    if params.e() == 2 {
        out.extend(orbits_of_degree(params, 2).expect("small modulus"));
    }
    out
}

/// Canonical sort of pairs given in arbitrary order.
fn sorted_label(params: GroupParams, n: usize, mut pairs: Vec<GlguPair>) -> GlguLabel {
    pairs.sort();
    GlguLabel { epsilon: params.epsilon, q: params.q, n, pairs }
}

/// Every label of 3'-degree, in canonical form.
pub fn enumerate_3prime_labels(params: GroupParams, n: usize) -> Vec<GlguLabel> {
    let e = params.e();
    let c = n % e;
    // per orbit: the partitions passing the per-pair test, with their (c_j, m_j)
    let options: Vec<(SemisimpleOrbit, Vec<(Partition, usize, usize)>)> = small_orbits(&params)
        .into_iter()
        .map(|o| {
            let mut opts = Vec::new();
            for k in 1..=n / o.d as usize {
                for lambda in partitions(k) {
                    if let Some((cj, mj)) = pair_data(e, o.d, &lambda) {
                        opts.push((lambda, cj, mj));
                    }
                }
            }
            (o, opts)
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        options: &[(SemisimpleOrbit, Vec<(Partition, usize, usize)>)],
        idx: usize,
        rest: usize,
        c_left: usize,
        m_acc: usize,
        cur: &mut Vec<GlguPair>,
        params: GroupParams,
        n: usize,
        out: &mut Vec<GlguLabel>,
    ) {
        if rest == 0 {
            if c_left == 0 {
                out.push(sorted_label(params, n, cur.clone()));
            }
            return;
        }
        if idx == options.len() {
            return;
        }
        rec(options, idx + 1, rest, c_left, m_acc, cur, params, n, out);
        let (orbit, opts) = &options[idx];
        for (lambda, cj, mj) in opts {
            let size = orbit.d as usize * lambda.size();
            if size > rest || *cj > c_left || !adds_without_carry(m_acc, *mj) {
                continue;
            }
            cur.push(GlguPair { orbit: *orbit, lambda: lambda.clone() });
            rec(options, idx + 1, rest - size, c_left - cj, m_acc + mj, cur, params, n, out);
            cur.pop();
        }
    }
    rec(&options, 0, n, c, 0, &mut cur, params, n, &mut out);
    out.sort();
    out
}

/// Every irreducible character label of `G_n`; one per conjugacy class.
pub fn enumerate_all_labels(params: GroupParams, n: usize) -> Result<Vec<GlguLabel>, GlguError> {
    let mut orbits = Vec::new();
    for d in 1..=n as u32 {
        orbits.extend(orbits_of_degree(&params, d)?);
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        orbits: &[SemisimpleOrbit],
        idx: usize,
        rest: usize,
        cur: &mut Vec<GlguPair>,
        params: GroupParams,
        n: usize,
        out: &mut Vec<GlguLabel>,
    ) {
        if rest == 0 {
            out.push(sorted_label(params, n, cur.clone()));
            return;
        }
        if idx == orbits.len() {
            return;
        }
        rec(orbits, idx + 1, rest, cur, params, n, out);
        let o = orbits[idx];
        for k in 1..=rest / o.d as usize {
            for lambda in partitions(k) {
                cur.push(GlguPair { orbit: o, lambda });
                rec(orbits, idx + 1, rest - k * o.d as usize, cur, params, n, out);
                cur.pop();
            }
        }
    }
    rec(&orbits, 0, n, &mut cur, params, n, &mut out);
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(eps: Epsilon, q: u64) -> GroupParams {
        GroupParams::new(eps, q).unwrap()
    }

    #[test]
    fn basic_arithmetic() {
        assert_eq!(params(Epsilon::Plus, 4).e(), 1);
        assert_eq!(params(Epsilon::Minus, 2).e(), 1);
        assert_eq!(params(Epsilon::Plus, 2).e(), 2);
        assert_eq!(GroupParams::new(Epsilon::Plus, 9), Err(GlguError::DefiningCharacteristic(9)));
        assert_eq!(GroupParams::new(Epsilon::Plus, 10), Err(GlguError::NotPrimePower(10)));
        assert!(multinomial_is_3prime(&[3, 1]));
        assert!(!multinomial_is_3prime(&[2, 2]));
        assert!(multinomial_is_3prime(&[1, 1]));
        assert!(!multinomial_is_3prime(&[1, 1, 1]));
    }

    #[test]
    fn orbit_counts() {
        // irreducible monic polynomials over F_q with nonzero constant term
        let p = params(Epsilon::Plus, 2);
        assert_eq!(orbits_of_degree(&p, 1).unwrap().len(), 1);
        assert_eq!(orbits_of_degree(&p, 2).unwrap().len(), 1);
        assert_eq!(orbits_of_degree(&p, 3).unwrap().len(), 2);
        assert_eq!(orbits_of_degree(&p, 4).unwrap().len(), 3);
        let m = params(Epsilon::Minus, 2);
        assert_eq!(orbits_of_degree(&m, 1).unwrap().len(), 3);
        assert_eq!(orbits_of_degree(&m, 2).unwrap().len(), 0);
        assert!(SemisimpleOrbit::new(&m, 2, 1).is_err());
    }

    #[test]
    fn class_numbers() {
        // q^2 - 1 classes in GL_2(q), (q + 1)^2 in GU_2(q)
        for (eps, q, n, classes) in [
            (Epsilon::Plus, 2, 2, 3),
            (Epsilon::Plus, 2, 3, 6),
            (Epsilon::Plus, 2, 4, 14),
            (Epsilon::Plus, 4, 2, 15),
            (Epsilon::Plus, 5, 2, 24),
            (Epsilon::Minus, 2, 2, 9),
            (Epsilon::Minus, 4, 2, 25),
        ] {
            assert_eq!(enumerate_all_labels(params(eps, q), n).unwrap().len(), classes, "{eps} {q} {n}");
        }
    }

    #[test]
    fn three_prime_counts() {
        for (eps, q, n, count) in [
            (Epsilon::Plus, 2, 2, 3),
            (Epsilon::Plus, 4, 2, 9),
            (Epsilon::Plus, 5, 2, 18),
            (Epsilon::Plus, 2, 3, 3),
            (Epsilon::Minus, 2, 2, 9),
            (Epsilon::Minus, 4, 2, 15),
            (Epsilon::Plus, 7, 2, 27),
        ] {
            let p = params(eps, q);
            let labels = enumerate_3prime_labels(p, n);
            assert_eq!(labels.len(), count, "{eps} {q} {n}");
            let filtered = enumerate_all_labels(p, n).unwrap().into_iter().filter(is_3prime_label).count();
            assert_eq!(filtered, count);
        }
    }

    #[test]
    fn linear_groups() {
        for q in [2, 4, 5, 7, 8] {
            assert_eq!(enumerate_3prime_labels(params(Epsilon::Plus, q), 1).len() as u64, q - 1);
            assert_eq!(enumerate_3prime_labels(params(Epsilon::Minus, q), 1).len() as u64, q + 1);
        }
    }

    #[test]
    fn label_json() {
        let p = params(Epsilon::Plus, 4);
        let label = GlguLabel::new(
            p,
            vec![GlguPair { orbit: SemisimpleOrbit::new(&p, 1, 2).unwrap(), lambda: Partition::new(vec![2, 1]).unwrap() }],
        )
        .unwrap();
        let json = serde_json::to_string(&label).unwrap();
        assert_eq!(json, r#"{"epsilon":"+","q":4,"n":3,"pairs":[{"d":1,"rep":2,"lambda":[2,1]}]}"#);
        let back: GlguLabel = serde_json::from_str(&json).unwrap();
        assert_eq!(back, label);
    }
}
