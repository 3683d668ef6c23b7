//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines show up in plain `cargo test` output; exits non-zero if any fails.

use std::time::{Duration, Instant};

use moufang::constructions::{partition_classify, partition_sizes, recompose, PartitionTag};
use moufang::suite::{check_info, run_check, run_suite, Status};
use moufang::*;

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(limit: Duration, what: &str, f: impl FnOnce() -> Result<(), String>) -> Result<Duration, String> {
    let start = Instant::now();
    f()?;
    let took = start.elapsed();
    ensure(took < limit, format!("{what} took {took:?}, limit {limit:?}"))?;
    Ok(took)
}

fn passes(id: &str, m: &MoufangSet) -> Result<u64, String> {
    let r = run_check(id, m).map_err(|e| e.to_string())?;
    match r.status {
        Status::Pass => Ok(r.cases_checked),
        other => Err(format!("{id} on q={} is {other}: {:?}", m.group().spec().order(), r.counterexample.map(|w| w.description))),
    }
}

fn suz(q: u64) -> Result<MoufangSet, String> {
    build_suzuki(q).map_err(|e| e.to_string())
}

fn pl(q: u64) -> Result<MoufangSet, String> {
    build_projective_line(q).map_err(|e| e.to_string())
}

fn moufang_axiom() -> Verdict {
    let mut times = Vec::new();
    for (name, m) in [("M(F4)", pl(4)?), ("M(F8)", pl(8)?), ("MSuz(8)", suz(8)?), ("MSuz(32)", suz(32)?)] {
        let t = within(Duration::from_secs(10), name, || {
            let r = m.verify_moufang();
            ensure(r.passed(), format!("{name}: {:?}", r.counterexample))
        })?;
        times.push(format!("{name} {}ms", t.as_millis()));
    }
    Ok(times.join(", "))
}

fn orders() -> Verdict {
    let suz_formula = |q: u128| (q * q + 1) * q * q * (q - 1);
    let mut out = Vec::new();
    let cases = [
        ("M(F4)", pl(4)?, Strategy::NaiveClosure, 60u128, 5u64),
        ("M(F8)", pl(8)?, Strategy::NaiveClosure, 504, 5),
        ("MSuz(8)", suz(8)?, Strategy::NaiveClosure, suz_formula(8), 60),
        ("MSuz(32)", suz(32)?, Strategy::SchreierSims, suz_formula(32), 120),
    ];
    ensure(suz_formula(8) == 29120 && suz_formula(32) == 32_537_600, "formula values")?;
    for (name, m, strategy, expected, secs) in cases {
        let t = within(Duration::from_secs(secs), name, || {
            let got = group_order(&m, strategy).map_err(|e| e.to_string())?;
            ensure(got == expected, format!("{name}: order {got}, expected {expected}"))
        })?;
        out.push(format!("{name}={expected} ({}ms)", t.as_millis()));
    }
    Ok(out.join(", "))
}

fn suzuki_fundamentals() -> Verdict {
    let mut cases = 0;
    for q in [8, 32] {
        let m = suz(q)?;
        cases += passes("SUZ5.5-TAU2", &m)?;
        ensure(m.tau().then(m.tau()).is_identity(), "tau^2 != 1")?;
        cases += passes("SUZ5.5-NORM", &m)?;
        let f = m.group().spec();
        let zeros = f.elements().flat_map(|a| f.elements().map(move |b| (a, b))).filter(|&(a, b)| constructions::norm(f, a, b).is_zero()).count();
        ensure(zeros == 1, format!("N has {zeros} zeros at q={q}"))?;
    }
    let m8 = suz(8)?;
    let fiber = passes("SUZ5.5-MUFIBER", &m8)?;
    ensure(fiber == 63 * 63, format!("mu fiber check covered {fiber} pairs"))?;
    cases += fiber + passes("SUZ5.18", &m8)?;
    Ok(format!("{cases} cases"))
}

fn identity_catalog() -> Verdict {
    let start = Instant::now();
    let mut counts = Vec::new();
    for m in [pl(8)?, suz(8)?] {
        let report = run_suite(&m, None).map_err(|e| e.to_string())?;
        ensure(report.passed(), format!("{:?} q=8: {:?}", m.kind(), report.problems().iter().map(|r| &r.check_id).collect::<Vec<_>>()))?;
        let mut n = 0;
        for r in report.results.iter().filter(|r| r.check_id.starts_with("L3.") || r.check_id.starts_with("E3")) {
            let info = check_info(&r.check_id).unwrap();
            let ok = match r.status {
                Status::Pass => true,
                Status::Vacuous => info.vacuity_expected(m.kind()),
                Status::Inapplicable => !info.applicability.admits(m.kind()),
                Status::Fail => false,
            };
            ensure(ok, format!("{} on {:?} is {}", r.check_id, m.kind(), r.status))?;
            n += 1;
        }
        counts.push(format!("{:?}: {n} checks", m.kind()));
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), format!("suite took {took:?}"))?;
    Ok(format!("{} in {}ms", counts.join(", "), took.as_millis()))
}

fn structure_facts() -> Verdict {
    let m = suz(8)?;
    let g = m.group();
    let h = m.hua_subgroup().map_err(|e| e.to_string())?;
    ensure(h.order() == 7 && h.is_cyclic(), "H is not cyclic of order 7")?;
    let inv: Vec<usize> = (1..m.size()).filter(|&a| m.is_involution(a)).collect();
    ensure(inv.len() == 7, "expected 7 involutions")?;
    for &a in &inv {
        let orbit: std::collections::BTreeSet<usize> = h.elements().iter().map(|p| p.apply(a)).collect();
        ensure(orbit.len() == 7 && orbit.iter().all(|x| inv.contains(x)), "H not regular on involutions")?;
        ensure((0..m.size()).all(|x| m.add(a, x) == m.add(x, a)), "involution not central")?;
    }
    ensure(g.center().len() == 8, "|Z(U)| != 8")?;
    ensure((1..m.size()).map(|x| m.element_order(x)).max() == Some(4), "exponent != 4")?;
    ensure((1..m.size()).all(|a| !m.is_special_at(a).unwrap()), "MSuz(8) has a special element")?;
    let p8 = pl(8)?;
    ensure((1..8).all(|a| p8.is_special_at(a).unwrap()), "M(F8) has a non-special element")?;
    for &a in &inv {
        let order = m.mu_at(a).then(&m.alpha_at(a)).order();
        ensure(order == 5, format!("order(mu_a alpha_a) = {order}"))?;
    }
    passes("SUZ5.10b", &m)?;
    passes("SUZ5.9", &m)?;
    passes("SUZ5.9", &suz(32)?)?;
    Ok("|H|=7 cyclic, 7 central involutions, exponent 4".into())
}

fn partition() -> Verdict {
    let mut out = Vec::new();
    for (q, expected) in [(8u64, [1, 7, 7, 7, 42]), (32, [1, 31, 31, 31, 930])] {
        let m = suz(q)?;
        let p = partition_sizes(&m).map_err(|e| e.to_string())?;
        let got = [p.zero, p.center, p.sim_z, p.neg_sim_z, p.mixed];
        ensure(got == expected, format!("q={q}: sizes {got:?}"))?;
        for x in m.group().elements() {
            let c = partition_classify(&m, &x).map_err(|e| e.to_string())?;
            if c.tag == PartitionTag::Mixed {
                let (s, t) = c.decomposition.ok_or("mixed without (s,t)")?;
                ensure(recompose(&m, s, t).map_err(|e| e.to_string())? == x, format!("{x} does not recompose"))?;
            }
        }
        out.push(format!("q={q}: {got:?}"));
    }
    Ok(out.join(", "))
}

fn t61_finite_case() -> Verdict {
    let mut cases = 0;
    for q in [8, 32] {
        let m = suz(q)?;
        for id in ["T6.1c", "T6.1d", "T6.1e", "T6.1cde"] {
            cases += passes(id, &m)?;
        }
    }
    Ok(format!("{cases} cases"))
}

fn mutation_sensitivity() -> Verdict {
    let good = suz(8)?;
    let base = good.tau().images().to_vec();
    let nonzero: Vec<usize> = (1..good.size()).collect();
    let (mut total, mut by_verify) = (0, 0);
    for (i, &x) in nonzero.iter().enumerate() {
        for &y in &nonzero[i + 1..] {
            let mut images = base.clone();
            images.swap(x, y);
            let tau = Permutation::from_images(images).map_err(|e| e.to_string())?;
            let m = MoufangSet::new(*good.group(), tau).map_err(|e| e.to_string())?;
            let tau_ok = run_check("SUZ5.5-TAU2", &m).map_err(|e| e.to_string())?.status == Status::Pass;
            // Mutants that stay involutions need the full Moufang check; the rest
            // get it on a spread so both detectors are exercised.
            let verify_ok = if tau_ok || total % 97 == 0 {
                let passed = m.verify_moufang().passed();
                by_verify += usize::from(!passed);
                passed
            } else {
                true
            };
            ensure(!(tau_ok && verify_ok), format!("swap {x} <-> {y} undetected"))?;
            total += 1;
        }
    }
    Ok(format!("{total} transpositions detected, {by_verify} of them by verify_moufang"))
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 8] = [
        ("moufang axiom for M(F4), M(F8), MSuz(8), MSuz(32)", moufang_axiom),
        ("group orders", orders),
        ("Suzuki fundamentals at q = 8, 32", suzuki_fundamentals),
        ("identity catalog on M(F8) and MSuz(8)", identity_catalog),
        ("structure facts at q = 8", structure_facts),
        ("Suzuki partition at q = 8, 32", partition),
        ("T6.1c/d/e at q = 8, 32", t61_finite_case),
        ("mutation sensitivity of MSuz(8)", mutation_sensitivity),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = f();
        let ms = start.elapsed().as_millis();
        match verdict {
            Ok(detail) => println!("criterion {}: PASS  {name} [{ms} ms] {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} [{ms} ms] {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
