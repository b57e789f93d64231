//! Acceptance criteria 1 to 13, each checked against values computed here
//! from first principles where possible. Every criterion prints one
//! `PASS`/`FAIL` line; run with `--nocapture` to see them.

use bohr_cesaro::cesaro::{
    cesaro_eval_integral_seq, cesaro_eval_series, rhs_majorant, theorem1_lhs, theorem2_lhs,
};
use bohr_cesaro::radii::{
    default_bracket, phi_expanded_form, phi_m, phi_statement_form, residual, solve_default,
    RadiusEquation,
};
use bohr_cesaro::sturm::{count_roots, f_poly, quintic};
use bohr_cesaro::verify::random::sample_functions;
use bohr_cesaro::verify::{
    check_all, eval_aux, random_schwarz_suite, registry, run_all, sharpness_scan,
    sturm_cross_check, violation_search,
};
use bohr_cesaro::{Error, MoebiusWitness, Radius};
use num_complex::Complex64;
use num_rational::BigRational;

const PICK_REFERENCE: f64 = 0.493411;

struct Outcome {
    id: u32,
    pass: bool,
    detail: String,
}

fn report(id: u32, name: &str, pass: bool, detail: String) -> Outcome {
    println!(
        "criterion {id:>2} {name}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    Outcome { id, pass, detail }
}

// ---------------------------------------------------------------------------
// Oracles written independently of the library.

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    assert!(flo * f(hi) < 0.0, "bracket [{lo}, {hi}] has no sign change");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) == (flo < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-15 {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// `φ(r)` written out literally with std logarithms.
fn phi_literal(r: f64) -> f64 {
    let lp = (1.0 + r).ln();
    let lm = (1.0 - r).ln();
    -lp / r
        + (-r - lm) / (2.0 * r) * (-lm / r + lp / r + 2.0 / (1.0 + r))
        + 2.0 * (r * r / (1.0 - r) + r + 2.0 + 2.0 / r * lm)
}

/// `Σ_{i≥k} r^i/(i+1)` by direct summation.
fn weight(k: usize, r: f64) -> f64 {
    let mut sum: f64 = 0.0;
    let mut term = r.powi(k as i32);
    let mut i = k;
    while term > 1e-20 * sum.max(1e-300) || i < k + 5 {
        sum += term / (i + 1) as f64;
        term *= r;
        i += 1;
    }
    sum
}

/// Taylor coefficients of `(a+z)/(1+az)`.
fn moebius_coeffs(a: f64, n: usize) -> Vec<f64> {
    let mut c = vec![a];
    let mut p = 1.0 - a * a;
    for _ in 1..n {
        c.push(p);
        p *= -a;
    }
    c
}

/// `Σ_n s^n (1/(n+1)) Σ_{k≤n} c_k` for real coefficients.
fn cesaro_at(c: &[f64], s: f64) -> f64 {
    let mut prefix = 0.0;
    let mut pow = 1.0;
    let mut sum = 0.0;
    for (n, ck) in c.iter().enumerate() {
        prefix += ck;
        sum += pow * prefix / (n + 1) as f64;
        pow *= s;
    }
    sum
}

/// Left side for `f_a` with `ω(z) = z^m`, summed term by term.
fn lhs_oracle(a: f64, m: u32, r: f64) -> f64 {
    let c = moebius_coeffs(a, 6000);
    let dc: Vec<f64> = (0..c.len() - 1)
        .map(|n| (n + 1) as f64 * c[n + 1])
        .collect();
    let s = r.powi(m as i32);
    let tail: f64 = (2..400).map(|k| c[k].abs() * weight(k, r)).sum();
    cesaro_at(&c, s).abs() + cesaro_at(&dc, s).abs() * weight(1, s) + tail
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

// ---------------------------------------------------------------------------

fn criterion_1() -> Outcome {
    let oracle = bisect(|r| 2.0 * r + 3.0 * (1.0 - r) * (1.0 - r).ln(), 0.1, 0.9);
    let root = solve_default(RadiusEquation::TheoremA).unwrap().root;
    let pass = (root - 0.5335).abs() <= 5e-4 && (root - oracle).abs() <= 1e-10;
    report(
        1,
        "Cesaro-Bohr sum radius",
        pass,
        format!("root {root:.12}, oracle {oracle:.12}"),
    )
}

fn criterion_2() -> Outcome {
    let oracle = bisect(
        |r| 2.0 * (-r - (1.0 - r).ln()) - r * (1.0 - r * r),
        0.1,
        0.9,
    );
    let root = solve_default(RadiusEquation::PickBoundR).unwrap().root;
    let pass = (root - PICK_REFERENCE).abs() <= 1e-5 && (root - oracle).abs() <= 1e-10;
    report(
        2,
        "Pick bound R",
        pass,
        format!("root {root:.12}, oracle {oracle:.12}"),
    )
}

fn criterion_3() -> Outcome {
    let oracle = bisect(phi_literal, 0.3, 0.49);
    let cert = solve_default(RadiusEquation::Theorem1Phi).unwrap();
    let pass = cert.residual.abs() <= 1e-10
        && cert.root <= PICK_REFERENCE
        && cert.root > 0.40
        && cert.root < 0.45
        && (cert.root - oracle).abs() <= 1e-9
        && cert.f_lo * cert.f_hi <= 0.0;
    report(
        3,
        "sharp radius r1",
        pass,
        format!(
            "r1 {:.12}, residual {:.3e}, oracle {oracle:.12}",
            cert.root, cert.residual
        ),
    )
}

fn criterion_4() -> Outcome {
    let r = 1e-6;
    let mut values = vec![phi_literal(r), phi_statement_form(r).unwrap()];
    values.extend((1..=3).map(|m| phi_m(r, m).unwrap()));
    let worst = values.iter().map(|v| (v + 1.0).abs()).fold(0.0, f64::max);
    report(
        4,
        "limits at r -> 0",
        worst <= 1e-4,
        format!("max |value + 1| {worst:.3e}"),
    )
}

fn criterion_5() -> Outcome {
    let f = f_poly();
    let c01 = count_roots(&f, &rat(0), &rat(1)).unwrap();
    let c12 = count_roots(&f, &rat(1), &rat(2)).unwrap();
    let exact = f.eval_exact(&rat(1)) == rat(32) && f.eval_exact(&rat(2)) == rat(-71);
    let q = count_roots(&quintic(), &rat(0), &rat(1_000_000)).unwrap();
    // sampled signs agree with the exact counts
    let sampled_f = (1..=10_000).all(|i| f.eval_f64(i as f64 / 10_000.0) > 0.0);
    let sampled_q = (1..=100_000).all(|i| quintic().eval_f64(i as f64 / 1000.0) > 0.0);
    let pass = c01 == 0 && c12 == 1 && exact && q == 0 && sampled_f && sampled_q;
    report(
        5,
        "Sturm certificates",
        pass,
        format!("F roots (0,1]: {c01}, (1,2]: {c12}; quintic roots (0,1e6]: {q}"),
    )
}

fn criterion_6() -> Outcome {
    let v = eval_aux("b2_prime", &[0.5]).unwrap();
    let h = 1e-5;
    let fd =
        (eval_aux("b2", &[0.5 + h]).unwrap() - eval_aux("b2", &[0.5 - h]).unwrap()) / (2.0 * h);
    let ln2 = std::f64::consts::LN_2;
    let closed = 0.25 * (26.0 - 41.0 * ln2 + 6.0 * ln2 * ln2);
    let pass = (v - 0.11592).abs() <= 1e-4 && (v - fd).abs() <= 1e-7 && (v - closed).abs() <= 1e-12;
    report(
        6,
        "B2' spot value",
        pass,
        format!("B2'(1/2) {v:.12}, difference quotient {fd:.12}"),
    )
}

fn criterion_7() -> Outcome {
    let pick = solve_default(RadiusEquation::PickBoundR).unwrap().root;
    let mut pass = true;
    let mut parts = vec![];
    for m in [2u32, 3] {
        let root = solve_default(RadiusEquation::Theorem2Rm { m })
            .unwrap()
            .root;
        pass &= (root - PICK_REFERENCE.powf(1.0 / m as f64)).abs() <= 1e-6;
        pass &= (root - pick.powf(1.0 / m as f64)).abs() <= 1e-10;
        parts.push(format!("R_{m} {root:.12}"));
    }
    report(7, "R_m scaling law", pass, parts.join(", "))
}

fn criterion_8() -> Outcome {
    let mut worst: f64 = 0.0;
    for i in 1..=1000 {
        let r = i as f64 / 1001.0;
        let phi1 = residual(RadiusEquation::Theorem2PhiM { m: 1 }, r).unwrap();
        worst = worst
            .max((phi1 - phi_statement_form(r).unwrap()).abs())
            .max((phi1 - phi_expanded_form(r).unwrap()).abs());
    }
    let mut identical = true;
    for i in 0..20 {
        for j in 0..20 {
            let a = MoebiusWitness::new(i as f64 / 19.0).unwrap();
            let r = (j + 1) as f64 / 21.0;
            identical &= theorem2_lhs(a, 1, r).unwrap() == theorem1_lhs(a, r).unwrap();
        }
    }
    report(
        8,
        "m = 1 reduction",
        worst <= 1e-11 && identical,
        format!("max |Phi_1 - phi| {worst:.3e}, left sides identical: {identical}"),
    )
}

fn criterion_9() -> Outcome {
    let r1 = solve_default(RadiusEquation::Theorem1Phi).unwrap().root;
    let mut slack = f64::INFINITY;
    let mut oracle_gap: f64 = 0.0;
    for j in 1..=50 {
        let r = r1 * j as f64 / 50.0;
        let rhs = rhs_majorant(r, 1).unwrap();
        for i in 0..50 {
            let a = i as f64 / 49.0;
            let lhs = theorem1_lhs(MoebiusWitness::new(a).unwrap(), r).unwrap();
            slack = slack.min(rhs + 1e-12 - lhs);
            if i % 7 == 0 && j % 7 == 0 {
                oracle_gap = oracle_gap.max((lhs - lhs_oracle(a, 1, r)).abs());
            }
        }
    }
    let low = random_schwarz_suite(1, 100, 0.3).unwrap();
    let high = random_schwarz_suite(1, 100, 0.43).unwrap();
    let pass = slack >= 0.0
        && oracle_gap <= 1e-10
        && low.pass
        && high.pass
        && low.worst_value > 0.0
        && high.worst_value > 0.0;
    report(
        9,
        "inequality inside the radius",
        pass,
        format!(
            "grid slack {slack:.3e}, oracle gap {oracle_gap:.3e}, random margins {:.6e} (r=0.3), {:.6e} (r=0.43)",
            low.worst_value, high.worst_value
        ),
    )
}

fn criterion_10() -> Outcome {
    let mut pass = true;
    let mut parts = vec![];
    for m in [1u32, 2] {
        let radius = solve_default(RadiusEquation::Theorem2PhiM { m })
            .unwrap()
            .root;
        let found = sharpness_scan(m, radius + 0.005, 0.9).unwrap();
        // independent re-evaluation of the witness
        let oracle = lhs_oracle(found.a, m, found.r) - rhs_majorant(found.r, m).unwrap();
        let clean = matches!(
            violation_search(m, radius - 0.005, 0.0, 1.0 - 1e-10),
            Err(Error::NoViolationFound { .. })
        );
        pass &= found.excess > 0.0 && oracle > 0.0 && clean;
        parts.push(format!(
            "m={m}: radius {radius:.10}, a {:.10}, excess {:.3e}",
            found.a, found.excess
        ));
        if m == 2 {
            pass &= radius <= 0.702432;
        }
    }
    report(10, "sharpness", pass, parts.join("; "))
}

fn criterion_11() -> Outcome {
    let mut pass = true;
    let mut worst: f64 = 0.0;
    for (i, f) in sample_functions(11, 100).iter().enumerate() {
        let rho = 0.9 * (1 + i % 9) as f64 / 9.0;
        let z = Complex64::from_polar(rho, 0.37 * i as f64);
        let series = cesaro_eval_series(f, z, Radius::new(rho).unwrap()).unwrap();
        let quad = cesaro_eval_integral_seq(f, z).unwrap();
        let d = (series.value - quad).norm();
        pass &= d <= series.truncation_error + 1e-10;
        worst = worst.max(d);
    }
    report(
        11,
        "series vs quadrature",
        pass,
        format!("max discrepancy {worst:.3e}"),
    )
}

fn criterion_12() -> Outcome {
    let reg = registry();
    let reports = check_all(&reg).unwrap();
    let failed: Vec<_> = reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| r.id.clone())
        .collect();
    let sturm = sturm_cross_check(&reg).unwrap();
    let mut identity: f64 = 0.0;
    for i in 0..2000 {
        let r = i as f64 / 2000.0;
        let d = eval_aux("b2", &[r]).unwrap()
            - (eval_aux("b3", &[r]).unwrap() - eval_aux("b4", &[r]).unwrap());
        identity = identity.max(d.abs());
    }
    let pass = failed.is_empty() && sturm.iter().all(|c| c.pass) && identity <= 1e-10;
    report(
        12,
        "auxiliary-curve registry",
        pass,
        format!(
            "{} claims, failed {:?}, {} Sturm cross-checks, max |B2 - (B3 - B4)| {identity:.3e}",
            reports.len(),
            failed,
            sturm.len()
        ),
    )
}

fn criterion_13() -> Outcome {
    let positive = (1..10_000).all(|i| {
        let r = i as f64 / 10_000.0;
        2.0 * r + (1.0 - r) * (1.0 - r).ln() > 0.0
    });
    let no_root = matches!(
        default_bracket(RadiusEquation::TheoremB { n: 1 }),
        Err(Error::NoRootInDomain { .. })
    );
    report(
        13,
        "Bohr-Rogosinski residual at N = 1",
        positive && no_root,
        format!("residual positive on the grid: {positive}, reported as having no root: {no_root}"),
    )
}

#[test]
fn acceptance_criteria() {
    let outcomes = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
        criterion_11(),
        criterion_12(),
        criterion_13(),
    ];
    let failed: Vec<String> = outcomes
        .iter()
        .filter(|o| !o.pass)
        .map(|o| format!("{}: {}", o.id, o.detail))
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:#?}");
}

#[test]
fn library_suite_agrees() {
    let report = run_all().unwrap();
    for c in &report.criteria {
        println!(
            "suite {:>2} {}: {} ({})",
            c.id,
            c.name,
            if c.pass { "PASS" } else { "FAIL" },
            c.detail
        );
    }
    assert_eq!(report.criteria.len(), 13);
    assert!(report.pass);
    let ids: Vec<&str> = report.anomalies.iter().map(|a| a.id).collect();
    assert!(ids.contains(&"bohr_rogosinski_n1"));
    assert!(ids.contains(&"g4_log_argument"));
}
