//! One PASS/FAIL line per acceptance criterion; exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use mckay::cli::verify::{self, SuiteReport};
use mckay::oracle::{cap_from_env, GroupSpec};
use mckay::partition::Partition;
use mckay::wreath::{psi_inverse, psi_map, WreathLabel};

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_reports(reports: &[SuiteReport]) -> Outcome {
    Outcome {
        pass: reports.iter().all(SuiteReport::pass),
        detail: reports.iter().map(SuiteReport::summary).collect::<Vec<_>>().join(" | "),
    }
}

fn within(outcome: Outcome, elapsed: Duration, limit: Duration) -> Outcome {
    let ok = elapsed < limit;
    Outcome {
        pass: outcome.pass && ok,
        detail: format!("{} [{:.2?}, limit {:?}]", outcome.detail, elapsed, limit),
    }
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn s6_table() -> Outcome {
    let d = |b: &[usize], t: &[usize]| WreathLabel::diagonal(part(b), part(t));
    let i = |a: &[usize], b: &[usize]| WreathLabel::induced_pair(part(a), part(b)).unwrap();
    let expected = [
        (part(&[6]), d(&[3], &[2])),
        (part(&[5, 1]), d(&[2, 1], &[1, 1])),
        (part(&[4, 1, 1]), d(&[1, 1, 1], &[2])),
        (part(&[3, 1, 1, 1]), d(&[3], &[1, 1])),
        (part(&[2, 1, 1, 1, 1]), d(&[2, 1], &[2])),
        (part(&[1, 1, 1, 1, 1, 1]), d(&[1, 1, 1], &[1, 1])),
        (part(&[3, 3]), i(&[3], &[2, 1])),
        (part(&[3, 2, 1]), i(&[3], &[1, 1, 1])),
        (part(&[2, 2, 2]), i(&[1, 1, 1], &[2, 1])),
    ];
    let start = Instant::now();
    let matched = expected
        .iter()
        .filter(|(l, w)| psi_map(l).as_ref() == Ok(w) && psi_inverse(w).as_ref() == Ok(l))
        .count();
    let outcome = Outcome { pass: matched == 9, detail: format!("{matched}/9 mappings match both ways") };
    within(outcome, start.elapsed(), Duration::from_secs(1))
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let outcome = f();
    within(outcome, start.elapsed(), limit)
}

fn main() {
    let cap = cap_from_env();
    let pk = [(3, 1), (3, 2), (5, 1)];
    let grid = verify::glgu_grid(&[2, 4, 5, 7, 8], 4);
    let criteria: Vec<(&str, Box<dyn FnOnce() -> Outcome>)> = vec![
        ("S_6 psi table", Box::new(s6_table)),
        (
            "diagonal tensor-power multiplicities",
            Box::new(move || {
                timed(Duration::from_secs(300), || {
                    from_reports(&pk.iter().map(|&(p, k)| verify::tensor_power_multiplicities(p, k)).collect::<Vec<_>>())
                })
            }),
        ),
        (
            "star map bijection and unique p'-constituent",
            Box::new(move || from_reports(&pk.iter().map(|&(p, k)| verify::star_map_bijection(p, k)).collect::<Vec<_>>())),
        ),
        ("closed-form star map at p = 3", Box::new(|| from_reports(&[verify::closed_form_star_map(1), verify::closed_form_star_map(2)]))),
        ("hooks of 2*3^k", Box::new(|| from_reports(&[verify::hooks23k(1), verify::hooks23k(2)]))),
        (
            "phi bijection n <= 100 and constituent compatibility n <= 13",
            Box::new(|| {
                timed(Duration::from_secs(600), || {
                    from_reports(&[verify::phi_bijection(100), verify::constituent_compatibility(13)])
                })
            }),
        ),
        (
            "oracle McKay counts",
            Box::new(move || {
                timed(Duration::from_secs(900), || {
                    let report = verify::mckay_counts(&verify::mckay_count_groups(), cap);
                    let s6 = report.cases.iter().find(|c| c.key == "sym:6");
                    let s6_ok = s6.is_some_and(|c| c.pass && c.detail.contains("oracle G=9") && c.detail.contains("labels=9"));
                    let mut outcome = from_reports(&[report]);
                    outcome.pass &= s6_ok;
                    outcome.detail.push_str(&format!("; S_6 count 9: {s6_ok}"));
                    outcome
                })
            }),
        ),
        ("GL/GU bijection equivariance", Box::new({
            let grid = grid.clone();
            move || from_reports(&[verify::glgu_equivariance(&grid)])
        })),
        (
            "Galois orbits and stabilizers, oracle fields",
            Box::new(move || {
                from_reports(&[
                    verify::glgu_orbits(&grid),
                    verify::oracle_crosscheck(&[GroupSpec::Gl(2, 2), GroupSpec::Gu(2, 2)], cap),
                ])
            }),
        ),
        ("GL_2(3) negative control", Box::new(move || from_reports(&[verify::negative_control(cap)]))),
        ("property suites", Box::new(|| from_reports(&[verify::properties(2024)]))),
    ];

    let mut failures = 0;
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let outcome = check();
        if !outcome.pass {
            failures += 1;
        }
        println!("{} {:>2} {name}: {}", if outcome.pass { "PASS" } else { "FAIL" }, i + 1, outcome.detail);
    }
    println!("{} of 11 criteria pass", 11 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
