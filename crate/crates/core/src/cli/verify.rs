//! Verification suites. Each returns one [`Case`] per checked item.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::glgu::{
    enumerate_3prime_labels, enumerate_normalizer_labels as glgu_normalizer_labels, fields_orbits, frobenius_act,
    full_bijection, full_bijection_inverse, galois_act, label_stabilizer, normalizer_label_count as glgu_normalizer_count,
    normalizer_stabilizer, transpose_inverse_act, units, Epsilon, GroupParams,
};
use crate::mckay_sym::{
    enumerate_3prime_sn, enumerate_normalizer_labels, normalizer_label_count, phi, phi_inverse, star_sequence,
};
use crate::oracle::{self, build_group, mckay_check, GroupSpec};
use crate::partition::{
    char_degree, combine_core_quotient, core_tower, hooks, is_pprime_degree, p_core_and_quotient, partitions,
    partitions_inside, pprime_partitions, Partition,
};
use crate::sym::{
    character_table, class_size, diagonal_power_multiplicity_checked, factorial, iterated_restriction_multiplicity,
    lr_coefficient, mn_value,
};
use crate::wreath::{
    hook_constituent_23k, pprime_wreath_labels, psi_inverse, psi_map, restriction_mult, star_map,
    star_map_closed_form, star_map_computed, WreathLabel,
};

#[derive(Debug, Clone, Serialize)]
pub struct Case {
    pub key: String,
    pub pass: bool,
    pub detail: String,
}

impl Case {
    fn new(key: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Case { key: key.into(), pass, detail: detail.into() }
    }

    fn from_result(key: impl Into<String>, r: Result<String, String>) -> Self {
        match r {
            Ok(d) => Case::new(key, true, d),
            Err(d) => Case::new(key, false, d),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<Case>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, mut cases: Vec<Case>) -> Self {
        cases.sort_by(|a, b| a.key.cmp(&b.key));
        SuiteReport { suite: suite.into(), cases }
    }

    pub fn pass(&self) -> bool {
        !self.cases.is_empty() && self.cases.iter().all(|c| c.pass)
    }

    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.pass).count()
    }

    pub fn summary(&self) -> String {
        let failed: Vec<&str> = self.cases.iter().filter(|c| !c.pass).map(|c| c.key.as_str()).take(5).collect();
        let mut s = format!("{}: {}/{} cases pass", self.suite, self.passed(), self.cases.len());
        if !failed.is_empty() {
            s.push_str(&format!("; failing: {}", failed.join(", ")));
        }
        s
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "# mckay verify v1 suite={}", self.suite)?;
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["case", "pass", "detail"])?;
        for c in &self.cases {
            w.write_record([c.key.as_str(), if c.pass { "true" } else { "false" }, c.detail.as_str()])?;
        }
        w.flush()
    }
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal partition")
}

/// The nine 3'-characters of `S_6` and their images in `S_3 wr S_2`.
pub fn s6_reference_table() -> Vec<(Partition, WreathLabel)> {
    let d = |b: &[usize], t: &[usize]| WreathLabel::diagonal(p(b), p(t));
    let i = |a: &[usize], b: &[usize]| WreathLabel::induced_pair(p(a), p(b)).expect("distinct");
    vec![
        (p(&[6]), d(&[3], &[2])),
        (p(&[5, 1]), d(&[2, 1], &[1, 1])),
        (p(&[4, 1, 1]), d(&[1, 1, 1], &[2])),
        (p(&[3, 1, 1, 1]), d(&[3], &[1, 1])),
        (p(&[2, 1, 1, 1, 1]), d(&[2, 1], &[2])),
        (p(&[1, 1, 1, 1, 1, 1]), d(&[1, 1, 1], &[1, 1])),
        (p(&[3, 3]), i(&[3], &[2, 1])),
        (p(&[3, 2, 1]), i(&[3], &[1, 1, 1])),
        (p(&[2, 2, 2]), i(&[1, 1, 1], &[2, 1])),
    ]
}

/// `psi` on all 3'-characters of `S_{2*3^k}`; for `k = 1` against the reference table.
pub fn psi(k: u32) -> SuiteReport {
    let n = 2 * 3usize.pow(k);
    let mut cases = Vec::new();
    if k == 1 {
        for (lambda, label) in s6_reference_table() {
            let fwd = psi_map(&lambda).map_err(|e| e.to_string());
            let back = psi_inverse(&label).map_err(|e| e.to_string());
            let pass = fwd.as_ref() == Ok(&label) && back.as_ref() == Ok(&lambda);
            cases.push(Case::new(lambda.to_string(), pass, format!("{fwd:?} / {back:?}")));
        }
    } else {
        let domain = pprime_partitions(n, 3);
        let mut image = BTreeSet::new();
        for lambda in &domain {
            let r = psi_map(lambda).map_err(|e| e.to_string()).and_then(|label| {
                let back = psi_inverse(&label).map_err(|e| e.to_string())?;
                image.insert(label.clone());
                if back == *lambda {
                    Ok(label.to_string())
                } else {
                    Err(format!("{label} -> {back}"))
                }
            });
            cases.push(Case::from_result(lambda.to_string(), r));
        }
        cases.push(Case::new("injective", image.len() == domain.len(), format!("{} images", image.len())));
    }
    SuiteReport::new(format!("psi k={k}"), cases)
}

/// Multiplicity of `(chi^mu)^{x p}` in the restriction of every hook of `p^k`.
pub fn tensor_power_multiplicities(p: usize, k: u32) -> SuiteReport {
    let cases = (0..p.pow(k))
        .into_par_iter()
        .map(|j| {
            let r = diagonal_power_multiplicity_checked(k, p, j)
                .map(|(lambda, m)| format!("lambda={lambda} multiplicity={m}"))
                .map_err(|e| e.to_string());
            Case::from_result(format!("j={j:03}"), r)
        })
        .collect();
    SuiteReport::new(format!("tensor-powers p={p} k={k}"), cases)
}

/// `star_map` is a bijection onto the p'-labels of `S_{p^{k-1}} wr S_p`, its image occurs
/// once, and no other p'-label occurs.
pub fn star_map_bijection(p: usize, k: u32) -> SuiteReport {
    let n = p.pow(k);
    let domain = hooks(n);
    let labels = pprime_wreath_labels(p, k);
    let mut cases = Vec::new();
    let domain_set: BTreeSet<Partition> = domain.iter().cloned().collect();
    let pprime: BTreeSet<Partition> = pprime_partitions(n, p).into_iter().collect();
    cases.push(Case::new("domain", domain_set == pprime, format!("{} hooks", domain.len())));
    let degrees_ok = labels.iter().all(|l| (l.degree() % BigUint::from(p)) != BigUint::zero());
    cases.push(Case::new("label-degrees", degrees_ok, format!("{} labels", labels.len())));
    let per_hook: Vec<(Case, Option<WreathLabel>)> = domain
        .par_iter()
        .map(|h| {
            let star = match star_map(h, p) {
                Ok(s) => s,
                Err(e) => return (Case::new(h.to_string(), false, e.to_string()), None),
            };
            let mut ok = true;
            let mut detail = format!("star={star}");
            for label in &labels {
                let m = restriction_mult(h, label).unwrap_or_else(|_| BigUint::from(u32::MAX));
                let expected = if *label == star { BigUint::one() } else { BigUint::zero() };
                if m != expected {
                    ok = false;
                    detail.push_str(&format!("; <{label}> = {m}"));
                }
            }
            (Case::new(h.to_string(), ok, detail), Some(star))
        })
        .collect();
    let image: BTreeSet<WreathLabel> = per_hook.iter().filter_map(|(_, s)| s.clone()).collect();
    let target: BTreeSet<WreathLabel> = labels.iter().cloned().collect();
    cases.extend(per_hook.into_iter().map(|(c, _)| c));
    cases.push(Case::new("bijection", image == target && image.len() == domain.len(), format!("{} images", image.len())));
    SuiteReport::new(format!("star-map p={p} k={k}"), cases)
}

/// Closed-form `star_map` at `p = 3` against the computation-resolved version.
pub fn closed_form_star_map(k: u32) -> SuiteReport {
    let cases = hooks(3usize.pow(k))
        .par_iter()
        .map(|h| {
            let closed = star_map_closed_form(h).map_err(|e| e.to_string());
            let computed = star_map_computed(h, 3).map_err(|e| e.to_string());
            Case::new(h.to_string(), closed.is_ok() && closed == computed, format!("{closed:?} vs {computed:?}"))
        })
        .collect();
    SuiteReport::new(format!("closed-form k={k}"), cases)
}

fn binomial(n: usize, k: usize) -> i128 {
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// Hooks of `2*3^k`: predicted constituent of the restriction to `S_{3^k} wr S_2` and the
/// character value at cycle type `(2^{3^k})`.
pub fn hooks23k(k: u32) -> SuiteReport {
    let r = 3usize.pow(k);
    let gamma = Partition::new(vec![2; r]).expect("partition");
    let cases = hooks(2 * r)
        .par_iter()
        .map(|h| {
            let leg = h.hook_leg().expect("hook");
            let (m, x) = (leg / 2, leg % 2);
            let top = if (m + x) % 2 == 0 { p(&[2]) } else { p(&[1, 1]) };
            let predicted = WreathLabel::diagonal(Partition::hook(r, m), top);
            let computed = hook_constituent_23k(h).map_err(|e| e.to_string());
            let mult = restriction_mult(h, &predicted).map_err(|e| e.to_string());
            let value = mn_value(h, &gamma).map_err(|e| e.to_string());
            let sign = if (m + x) % 2 == 0 { 1 } else { -1 };
            let expected_value = binomial(r - 1, m) * sign;
            let pass = computed.as_ref() == Ok(&predicted)
                && mult.as_ref().is_ok_and(|m| !m.is_zero())
                && value == Ok(expected_value);
            Case::new(
                h.to_string(),
                pass,
                format!("predicted={predicted} multiplicity={mult:?} value={value:?} expected={expected_value}"),
            )
        })
        .collect();
    SuiteReport::new(format!("hooks23k k={k}"), cases)
}

/// `phi` is a bijection onto the normalizer labels for every `n <= n_max`.
pub fn phi_bijection(n_max: usize) -> SuiteReport {
    let cases = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let domain = enumerate_3prime_sn(n);
            let mut image = BTreeSet::new();
            for lambda in &domain {
                let label = match phi(lambda) {
                    Ok(l) => l,
                    Err(e) => return Case::new(format!("n={n:03}"), false, format!("{lambda}: {e}")),
                };
                if phi_inverse(&label).as_ref() != Ok(lambda) {
                    return Case::new(format!("n={n:03}"), false, format!("{lambda}: inverse fails"));
                }
                image.insert(label);
            }
            let count = normalizer_label_count(n);
            let target_ok = if count <= 20000 {
                image == enumerate_normalizer_labels(n).into_iter().collect()
            } else {
                image.iter().all(|l| l.validate().is_ok())
            };
            let pass = image.len() == domain.len() && domain.len() == count && target_ok;
            Case::new(format!("n={n:03}"), pass, format!("{} labels", domain.len()))
        })
        .collect();
    SuiteReport::new(format!("phi-bijection n<={n_max}"), cases)
}

/// For `n` whose 3-adic digits are all 1: positive multiplicity at every Young and wreath step.
pub fn constituent_compatibility(n_max: usize) -> SuiteReport {
    let ns: Vec<usize> = (1..=n_max).filter(|&n| crate::partition::base_digits(n, 3).iter().all(|&d| d <= 1)).collect();
    let cases = ns
        .par_iter()
        .flat_map(|&n| enumerate_3prime_sn(n).into_par_iter().map(move |lambda| (n, lambda)))
        .map(|(n, lambda)| {
            let key = format!("n={n:02} {lambda}");
            let r = (|| -> Result<String, String> {
                let mus = star_sequence(&lambda).map_err(|e| e.to_string())?;
                let young = iterated_restriction_multiplicity(&lambda, &mus).map_err(|e| e.to_string())?;
                if young.is_zero() {
                    return Err(format!("Young step {mus:?} has multiplicity 0"));
                }
                let mut steps = vec![young.to_string()];
                for mu in &mus {
                    let mut cur = mu.clone();
                    while cur.size() > 1 {
                        let star = star_map(&cur, 3).map_err(|e| e.to_string())?;
                        let m = restriction_mult(&cur, &star).map_err(|e| e.to_string())?;
                        if m.is_zero() {
                            return Err(format!("wreath step {cur} -> {star} has multiplicity 0"));
                        }
                        steps.push(m.to_string());
                        match star {
                            WreathLabel::Diagonal { base, .. } => cur = base,
                            other => return Err(format!("unexpected label {other}")),
                        }
                    }
                }
                Ok(format!("multiplicities {}", steps.join(",")))
            })();
            Case::from_result(key, r)
        })
        .collect();
    SuiteReport::new(format!("compatibility n<={n_max}"), cases)
}

/// Groups of the oracle count comparison.
pub fn mckay_count_groups() -> Vec<GroupSpec> {
    let mut out: Vec<GroupSpec> = (3..=7).map(GroupSpec::Sym).collect();
    out.extend([
        GroupSpec::Gl(2, 2),
        GroupSpec::Gl(2, 4),
        GroupSpec::Gl(2, 5),
        GroupSpec::Gl(3, 2),
        GroupSpec::Gu(2, 2),
        GroupSpec::Gu(2, 4),
    ]);
    out
}

/// `(label count, normalizer label count)` predicted by the combinatorial side.
pub fn label_counts(spec: GroupSpec) -> Option<(u128, u128)> {
    match spec {
        GroupSpec::Sym(n) => Some((enumerate_3prime_sn(n).len() as u128, normalizer_label_count(n) as u128)),
        GroupSpec::Gl(n, q) | GroupSpec::Gu(n, q) => {
            let eps = if matches!(spec, GroupSpec::Gl(..)) { Epsilon::Plus } else { Epsilon::Minus };
            let params = GroupParams::new(eps, q).ok()?;
            Some((enumerate_3prime_labels(params, n).len() as u128, glgu_normalizer_count(params, n)))
        }
        GroupSpec::Wreath(..) => None,
    }
}

/// Oracle `|Irr_3'(G)|` and `|Irr_3'(N_G(P))|` against the label counts.
pub fn mckay_counts(groups: &[GroupSpec], cap: usize) -> SuiteReport {
    let cases = groups
        .par_iter()
        .map(|&spec| {
            let r = (|| -> Result<String, String> {
                let g = build_group(spec, cap).map_err(|e| e.to_string())?;
                let (report, _, _) = mckay_check(&g).map_err(|e| e.to_string())?;
                let detail = format!(
                    "|G|={} |N|={} oracle G={} oracle N={}",
                    report.order, report.normalizer_order, report.group_3prime, report.normalizer_3prime
                );
                let ok = report.counts_match();
                match label_counts(spec) {
                    Some((labels, normalizer)) => {
                        let detail = format!("{detail} labels={labels} normalizer labels={normalizer}");
                        let all = ok && labels == report.group_3prime as u128 && normalizer == labels;
                        if all {
                            Ok(detail)
                        } else {
                            Err(detail)
                        }
                    }
                    None if ok => Ok(detail),
                    None => Err(detail),
                }
            })();
            Case::from_result(spec.to_string(), r)
        })
        .collect();
    SuiteReport::new("mckay-counts", cases)
}

/// Parameter grid `(eps, q, n)` with `q` prime to 3.
pub fn glgu_grid(qs: &[u64], n_max: usize) -> Vec<(GroupParams, usize)> {
    let mut out = Vec::new();
    for eps in [Epsilon::Plus, Epsilon::Minus] {
        for &q in qs {
            if let Ok(params) = GroupParams::new(eps, q) {
                out.extend((1..=n_max).map(|n| (params, n)));
            }
        }
    }
    out
}

fn grid_key(params: &GroupParams, n: usize) -> String {
    format!("eps={} q={} n={n}", params.epsilon, params.q)
}

/// Bijectivity of `full_bijection` and commutation with every Galois, Frobenius and
/// (for GL) transpose-inverse action.
pub fn glgu_equivariance(grid: &[(GroupParams, usize)]) -> SuiteReport {
    let cases = grid
        .par_iter()
        .map(|&(params, n)| {
            let r = (|| -> Result<String, String> {
                let labels = enumerate_3prime_labels(params, n);
                let targets: BTreeSet<_> = glgu_normalizer_labels(params, n).into_iter().collect();
                let mut image = BTreeSet::new();
                let group = units(params.ambient_order());
                let frob = params.characteristic() as i64;
                for label in &labels {
                    let img = full_bijection(label).map_err(|e| e.to_string())?;
                    if full_bijection_inverse(&img).as_ref() != Ok(label) {
                        return Err(format!("{label}: inverse fails"));
                    }
                    for &u in &group {
                        let lhs = full_bijection(&galois_act(label, u as i64)).map_err(|e| e.to_string())?;
                        if lhs != img.act(u as i64) {
                            return Err(format!("{label}: Galois u={u}"));
                        }
                    }
                    if full_bijection(&frobenius_act(label)).map_err(|e| e.to_string())? != img.act(frob) {
                        return Err(format!("{label}: Frobenius"));
                    }
                    if params.epsilon == Epsilon::Plus {
                        let t = transpose_inverse_act(label).map_err(|e| e.to_string())?;
                        if full_bijection(&t).map_err(|e| e.to_string())? != img.act(-1) {
                            return Err(format!("{label}: transpose-inverse"));
                        }
                    }
                    image.insert(img);
                }
                if image != targets || image.len() != labels.len() {
                    return Err(format!("{} labels, {} images, {} targets", labels.len(), image.len(), targets.len()));
                }
                Ok(format!("{} labels, {} units", labels.len(), group.len()))
            })();
            Case::from_result(grid_key(&params, n), r)
        })
        .collect();
    SuiteReport::new("glgu-equivariance", cases)
}

/// Galois orbit sizes and stabilizers agree on both sides of the bijection.
pub fn glgu_orbits(grid: &[(GroupParams, usize)]) -> SuiteReport {
    let cases = grid
        .par_iter()
        .map(|&(params, n)| {
            let r = fields_orbits(params, n).map_err(|e| e.to_string()).and_then(|report| {
                let detail = format!("orbits {:?} / {:?}", report.group_orbit_sizes, report.normalizer_orbit_sizes);
                if report.pass() {
                    Ok(detail)
                } else {
                    Err(detail)
                }
            });
            Case::from_result(grid_key(&params, n), r)
        })
        .collect();
    SuiteReport::new("glgu-orbits", cases)
}

fn lift_stabilizer(stab: &BTreeSet<u64>, small: u64, modulus: u64) -> String {
    let lifted: BTreeSet<u64> = units(modulus).into_iter().filter(|u| stab.contains(&(u % small))).collect();
    oracle::sylow::format_set(&lifted)
}

/// Oracle fields of values of the 3'-characters of `G` and `N_G(P)` against the label-side
/// stabilizers, for `GL_n(q)` / `GU_n(q)`; for other groups, oracle `G` against oracle `N`.
pub fn oracle_crosscheck(groups: &[GroupSpec], cap: usize) -> SuiteReport {
    let cases = groups
        .iter()
        .map(|&spec| {
            let r = (|| -> Result<String, String> {
                let g = build_group(spec, cap).map_err(|e| e.to_string())?;
                let (report, gt, nt) = mckay_check(&g).map_err(|e| e.to_string())?;
                if !gt.check_orthogonality() || !nt.check_orthogonality() {
                    return Err("orthogonality".into());
                }
                let mut detail = format!(
                    "3' counts {} / {}; fields G {:?}",
                    report.group_3prime, report.normalizer_3prime, report.group_fields
                );
                let mut ok = report.counts_match() && report.fields_match();
                if let GroupSpec::Sym(n) = spec {
                    let mut degrees: Vec<u64> =
                        partitions(n).iter().map(|l| char_degree(l).to_u64().unwrap_or(0)).collect();
                    degrees.sort_unstable();
                    ok &= degrees == gt.degrees();
                }
                if let GroupSpec::Gl(n, q) | GroupSpec::Gu(n, q) = spec {
                    let eps = if matches!(spec, GroupSpec::Gl(..)) { Epsilon::Plus } else { Epsilon::Minus };
                    let params = GroupParams::new(eps, q).map_err(|e| e.to_string())?;
                    let small = params.ambient_order();
                    let modulus = report.field_modulus;
                    if modulus % small != 0 {
                        return Err(format!("q^2-1 = {small} does not divide the exponent {modulus}"));
                    }
                    let mut group_side = BTreeMap::new();
                    let mut normalizer_side = BTreeMap::new();
                    for label in enumerate_3prime_labels(params, n) {
                        *group_side.entry(lift_stabilizer(&label_stabilizer(&label), small, modulus)).or_insert(0) +=
                            1;
                        let image = full_bijection(&label).map_err(|e| e.to_string())?;
                        *normalizer_side
                            .entry(lift_stabilizer(&normalizer_stabilizer(&image), small, modulus))
                            .or_insert(0) += 1;
                    }
                    ok &= group_side == report.group_fields && normalizer_side == report.normalizer_fields;
                    detail.push_str(&format!("; labels {group_side:?}"));
                }
                if ok {
                    Ok(detail)
                } else {
                    Err(detail)
                }
            })();
            Case::from_result(spec.to_string(), r)
        })
        .collect();
    SuiteReport::new("oracle-crosscheck", cases)
}

/// `GL_2(3)`: the fields of values of the 3'-characters of `G` and `N_G(P)` differ.
pub fn negative_control(cap: usize) -> SuiteReport {
    let r = build_group(GroupSpec::Gl(2, 3), cap)
        .map_err(|e| e.to_string())
        .and_then(|g| mckay_check(&g).map_err(|e| e.to_string()))
        .and_then(|(report, _, _)| {
            let detail = format!("G {:?} / N {:?}", report.group_fields, report.normalizer_fields);
            if report.counts_match() && !report.fields_match() {
                Ok(detail)
            } else {
                Err(detail)
            }
        });
    SuiteReport::new("negative-control", vec![Case::from_result("gl:2:3", r)])
}

fn random_partition(rng: &mut ChaCha8Rng, max: usize) -> Partition {
    let mut remaining = rng.gen_range(0..=max);
    let mut parts = Vec::new();
    while remaining > 0 {
        let part = rng.gen_range(1..=remaining);
        parts.push(part);
        remaining -= part;
    }
    Partition::from_unsorted(parts)
}

/// Randomized core/quotient round trips, tower injectivity, MN orthogonality, the LR
/// degree-sum identity, and Macdonald's criterion against hook lengths.
pub fn properties(seed: u64) -> SuiteReport {
    let mut cases = Vec::new();

    for prime in [2usize, 3, 5, 7] {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ prime as u64);
        let mut bad = None;
        for _ in 0..400 {
            let lambda = random_partition(&mut rng, 60);
            let (core, quotient) = p_core_and_quotient(&lambda, prime);
            let weight: usize = quotient.iter().map(Partition::size).sum();
            let back = combine_core_quotient(&core, &quotient, prime);
            if back.as_ref() != Ok(&lambda) || core.size() + prime * weight != lambda.size() {
                bad = Some(lambda);
                break;
            }
        }
        cases.push(Case::new(format!("core-quotient p={prime}"), bad.is_none(), format!("{bad:?}")));
    }

    for prime in [2usize, 3] {
        let ok = (1..=20).all(|n| {
            let all = partitions(n);
            let towers: BTreeSet<_> = all.iter().map(|l| core_tower(l, prime).entries()).collect();
            towers.len() == all.len()
                && all.iter().all(|l| core_tower(l, prime).to_partition().as_ref() == Ok(l))
        });
        cases.push(Case::new(format!("tower-injective p={prime}"), ok, "n<=20"));
    }

    let mn: Vec<Case> = (1..=10usize)
        .into_par_iter()
        .map(|n| {
            let table = match character_table(n) {
                Ok(t) => t,
                Err(e) => return Case::new(format!("mn-orthogonality n={n:02}"), false, e.to_string()),
            };
            let order = factorial(n);
            let sizes: Vec<BigUint> = table.partitions.iter().map(class_size).collect();
            let r = table.partitions.len();
            let rows = (0..r).all(|i| {
                (0..r).all(|j| {
                    let s: num_bigint::BigInt = (0..r)
                        .map(|k| {
                            num_bigint::BigInt::from(sizes[k].clone())
                                * table.values[i][k]
                                * table.values[j][k]
                        })
                        .sum();
                    s == if i == j { num_bigint::BigInt::from(order.clone()) } else { 0.into() }
                })
            });
            let cols = (0..r).all(|a| {
                (0..r).all(|b| {
                    let s: i128 = (0..r).map(|i| table.values[i][a] * table.values[i][b]).sum();
                    let expected = if a == b {
                        (order.clone() / &sizes[a]).to_i128().unwrap_or(-1)
                    } else {
                        0
                    };
                    s == expected
                })
            });
            Case::new(format!("mn-orthogonality n={n:02}"), rows && cols, format!("{r} classes"))
        })
        .collect();
    cases.extend(mn);

    let lr: Vec<Case> = (1..=12usize)
        .into_par_iter()
        .map(|size| {
            let ok = partitions(size).iter().all(|gamma| {
                (0..=size).all(|a| {
                    let mut total = BigUint::zero();
                    for alpha in partitions_inside(gamma, a) {
                        for beta in partitions_inside(gamma, size - a) {
                            let c = lr_coefficient(&alpha, &beta, gamma);
                            if !c.is_zero() {
                                total += c * char_degree(&alpha) * char_degree(&beta);
                            }
                        }
                    }
                    total == char_degree(gamma)
                })
            });
            Case::new(format!("lr-degree-sum |gamma|={size:02}"), ok, "all splits")
        })
        .collect();
    cases.extend(lr);

    for prime in [2usize, 3, 5] {
        let ok = (1..=25).all(|n| {
            partitions(n).iter().all(|l| {
                is_pprime_degree(l, prime) == !(char_degree(l) % BigUint::from(prime)).is_zero()
            })
        });
        cases.push(Case::new(format!("macdonald p={prime}"), ok, "n<=25"));
    }

    SuiteReport::new("properties", cases)
}
