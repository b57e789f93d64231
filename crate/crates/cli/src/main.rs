//! `bohr-cesaro`: radii, inequality checks, Sturm certificates, sharpness
//! witnesses and figure tables from the command line.
//!
//! Exit status: 0 when everything checked passes, 1 when a check fails or a
//! computation cannot be certified, 2 on usage errors (bad flags, values
//! outside their domain, unreadable input).

mod args;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use bohr_cesaro::cesaro::{
    cesaro_eval_integral_seq, cesaro_eval_series, rhs_majorant, theorem1_lhs,
};
use bohr_cesaro::radii::{solve_default, RadiusEquation};
use bohr_cesaro::series::CoeffSeq;
use bohr_cesaro::specfun::PhiValue;
use bohr_cesaro::sturm::{parse_poly, parse_rational, sturm_report};
use bohr_cesaro::verify::{
    check_all, emit_figure, inequality_grid, random_schwarz_suite, registry, run_all,
    sharpness_scan, sturm_cross_check,
};
use bohr_cesaro::{Error, MoebiusWitness, Radius};
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};
use num_complex::Complex64;
use serde_json::json;

use args::{Cli, Command, EvalCmd, VerifyCmd};
use output::{print_json, sig};

/// Outcome of a command that ran to completion.
type Outcome = Result<bool, Error>;

fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Domain { .. }
            | Error::InvalidParameter { .. }
            | Error::Parse(_)
            | Error::UnknownCurve(_)
            | Error::Io(_)
            | Error::EmptySequence
            | Error::ZeroPolynomial
            | Error::NotBeyondRadius { .. }
            | Error::NotWithinRadius { .. }
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match (cli.all, cli.command) {
        (true, Some(_)) => Cli::command()
            .error(
                ErrorKind::ArgumentConflict,
                "--all cannot be combined with a subcommand",
            )
            .exit(),
        (true, None) => suite(cli.json),
        (false, Some(cmd)) => dispatch(cmd, cli.json),
        (false, None) => {
            eprintln!("error: a subcommand or --all is required (see --help)");
            return ExitCode::from(2);
        }
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_usage_error(&e) { 2 } else { 1 })
        }
    }
}

fn dispatch(cmd: Command, json: bool) -> Outcome {
    match cmd {
        Command::Radius { equation } => radius(equation.into(), json),
        Command::Verify { what } => verify(what, json),
        Command::Sharpness { m, r, a_start } => {
            let found = sharpness_scan(m, r, a_start)?;
            if json {
                print_json(&found);
            } else {
                println!("violation at m = {m}, r = {}", sig(r));
                if let Some(radius) = found.radius {
                    println!("  sharp radius {}", sig(radius));
                }
                println!("  a       {}", sig(found.a));
                println!("  lhs     {}", sig(found.lhs));
                println!("  rhs     {}", sig(found.rhs));
                println!("  excess  {}", sig(found.excess));
            }
            Ok(true)
        }
        Command::Figure {
            which,
            steps,
            out,
            lo,
            hi,
        } => {
            let table = emit_figure(which, (lo, hi), steps)?;
            match &out {
                Some(path) => {
                    let file = File::create(path).map_err(Error::from)?;
                    table.write_csv(BufWriter::new(file))?;
                    if json {
                        print_json(&json!({
                            "figure": which,
                            "path": path,
                            "header": table.header,
                            "rows": table.rows.len(),
                        }));
                    } else {
                        println!("wrote {} rows to {}", table.rows.len(), path.display());
                    }
                }
                None if json => print_json(&table),
                None => table.write_csv(io::stdout().lock())?,
            }
            Ok(true)
        }
        Command::Eval { what } => eval(what, json),
        Command::Sturm { poly, interval } => {
            let p = parse_poly(&poly)?;
            let a = parse_rational(&interval[0])?;
            let b = parse_rational(&interval[1])?;
            let rep = sturm_report(&p, &a, &b)?;
            if json {
                print_json(&rep);
            } else {
                println!("polynomial     {}", rep.poly);
                println!("interval       ({}, {}]", rep.interval.0, rep.interval.1);
                println!("chain length   {}", rep.chain_length);
                println!("distinct roots {}", rep.count);
            }
            Ok(true)
        }
    }
}

fn radius(eq: RadiusEquation, json: bool) -> Outcome {
    let cert = solve_default(eq)?;
    if json {
        print_json(&json!({ "equation": eq.to_string(), "certificate": cert }));
    } else {
        println!("{eq}: root {}", sig(cert.root));
        println!("  bracket  [{}, {}]", sig(cert.lo), sig(cert.hi));
        println!("  f(lo)    {}", sig(cert.f_lo));
        println!("  f(hi)    {}", sig(cert.f_hi));
        println!("  residual {}", sig(cert.residual));
    }
    Ok(true)
}

fn print_grid_line(rep: &bohr_cesaro::verify::GridReport) {
    let point: Vec<String> = rep.worst_point.iter().map(|&x| sig(x)).collect();
    println!(
        "{} {} worst {} at [{}] ({} samples)",
        if rep.pass { "PASS" } else { "FAIL" },
        rep.id,
        sig(rep.worst_value),
        point.join(", "),
        rep.samples
    );
    if let Some(w) = &rep.warning {
        println!("     warning: {w}");
    }
}

fn verify(what: VerifyCmd, json: bool) -> Outcome {
    match what {
        VerifyCmd::Claims => {
            let reg = registry();
            let reports = check_all(&reg)?;
            let sturm = sturm_cross_check(&reg)?;
            let pass = reports.iter().all(|r| r.pass) && sturm.iter().all(|c| c.pass);
            if json {
                print_json(&json!({ "pass": pass, "claims": reports, "sturm": sturm }));
            } else {
                for rep in &reports {
                    print_grid_line(rep);
                }
                for c in &sturm {
                    println!(
                        "{} {} Sturm count on (0, 1]: {}",
                        if c.pass { "PASS" } else { "FAIL" },
                        c.id,
                        c.roots_in_unit_interval
                    );
                }
                let passed = reports.iter().filter(|r| r.pass).count();
                println!("{passed} of {} claims pass", reports.len());
            }
            Ok(pass)
        }
        VerifyCmd::Theorem1 { r, grid } => grid_outcome(inequality_grid(1, r, grid.into())?, json),
        VerifyCmd::Theorem2 { m, r, grid } => {
            grid_outcome(inequality_grid(m, r, grid.into())?, json)
        }
        VerifyCmd::Random { seed, count, r } => {
            grid_outcome(random_schwarz_suite(seed, count, r)?, json)
        }
    }
}

fn grid_outcome(rep: bohr_cesaro::verify::GridReport, json: bool) -> Outcome {
    if json {
        print_json(&rep);
    } else {
        print_grid_line(&rep);
    }
    Ok(rep.pass)
}

fn eval(what: EvalCmd, json: bool) -> Outcome {
    match what {
        EvalCmd::Phi { k, r } => {
            let v = PhiValue::compute(k, Radius::new(r)?);
            if json {
                print_json(&v);
            } else {
                println!("{}", sig(v.value));
            }
        }
        EvalCmd::Cesaro { coeffs, z } => {
            let f = CoeffSeq::from_csv_path(&coeffs)?;
            let z: Complex64 = z.into();
            let series = cesaro_eval_series(&f, z, Radius::new(z.norm())?)?;
            let quad = cesaro_eval_integral_seq(&f, z)?;
            if json {
                print_json(&json!({
                    "z": [z.re, z.im],
                    "value": [series.value.re, series.value.im],
                    "truncation_error": series.truncation_error,
                    "terms": series.terms,
                    "quadrature": [quad.re, quad.im],
                    "certified": f.is_certified(),
                }));
            } else {
                println!(
                    "value       {} {} i",
                    sig(series.value.re),
                    sig(series.value.im)
                );
                println!("truncation  {}", sig(series.truncation_error));
                println!("terms       {}", series.terms);
                println!("quadrature  {} {} i", sig(quad.re), sig(quad.im));
                if !f.is_certified() {
                    println!("note: coefficients exceed the claimed bound; not certified");
                }
            }
        }
        EvalCmd::Lhs1 { a, r } => {
            let lhs = theorem1_lhs(MoebiusWitness::new(a)?, r)?;
            let rhs = rhs_majorant(r, 1)?;
            if json {
                print_json(&json!({ "a": a, "r": r, "lhs": lhs, "rhs": rhs, "holds": lhs <= rhs }));
            } else {
                println!("lhs {}", sig(lhs));
                println!("rhs {}", sig(rhs));
                println!(
                    "{}",
                    if lhs <= rhs {
                        "lhs <= rhs"
                    } else {
                        "lhs > rhs"
                    }
                );
            }
        }
    }
    Ok(true)
}

fn suite(json: bool) -> Outcome {
    let report = run_all()?;
    if json {
        print_json(&report);
    } else {
        let mut out = io::stdout().lock();
        for c in &report.criteria {
            let _ = writeln!(
                out,
                "{:>2} {} {}: {}",
                c.id,
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            );
        }
        let _ = writeln!(out, "anomalies:");
        for a in &report.anomalies {
            let _ = writeln!(out, "  {}: {}", a.id, a.description);
        }
        let passed = report.criteria.iter().filter(|c| c.pass).count();
        let _ = writeln!(out, "{passed} of {} criteria pass", report.criteria.len());
    }
    Ok(report.pass)
}
