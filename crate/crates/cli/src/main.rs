//! `hhgabber`: involutivity checks for characteristic varieties.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hhgabber_core::hochschild::{hkr_compare, koszul_tor, KoszulComplex};
use hhgabber_core::ideal::{is_groebner_basis, is_reduced_basis, RadicalStrategy};
use hhgabber_core::pipeline::{parse_input, report_render, run_problem, Problem, ReportFormat};
use hhgabber_core::poly::{MonomialOrder, Polynomial};
use hhgabber_core::weyl::{characteristic_ideal_in, filtration_order, is_weyl_groebner, weyl_groebner};
use hhgabber_core::Error;

#[derive(Parser)]
#[command(name = "hhgabber", version, about = "Involutivity checks for characteristic varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check involutivity of the characteristic ideal and its radical.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Defaults to `user` when the file declares `radical user`, else `auto`.
        #[arg(long, value_enum)]
        radical_strategy: Option<Strategy>,
    },
    /// Reduced Groebner basis of the file's ideal (or D-module).
    Groebner {
        file: PathBuf,
        #[arg(long, value_parser = parse_order)]
        order: MonomialOrder,
        #[arg(long)]
        json: bool,
    },
    /// Characteristic ideal of the file's D-module.
    Charideal {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Koszul Tor rank of the diagonal against the rank of forms.
    Hkr {
        #[arg(long = "vars")]
        vars: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the file's bracket on two polynomials.
    Bracket {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["F", "G"], required = true)]
        eval: Vec<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Auto,
    Monomial,
    Principal,
    Zerodim,
    User,
}

fn parse_order(s: &str) -> Result<MonomialOrder, String> {
    s.parse()
}

/// Exit 2 for bad input, 3 for well-formed input outside what is supported.
fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        Error::Unsupported(_) | Error::StrategyInapplicable { .. } | Error::InfiniteDimension => {
            ExitCode::from(3)
        }
        _ => ExitCode::from(2),
    }
}

fn load(path: &Path) -> Result<Problem, ExitCode> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        ExitCode::from(2)
    })?;
    parse_input(&text).map_err(|e| match e {
        Error::Parse(p) => {
            eprintln!("{}:{p}", path.display());
            ExitCode::from(2)
        }
        other => fail(&other),
    })
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(ToString::to_string).collect()
}

fn emit(json: bool, value: serde_json::Value, text: String) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).expect("plain data serializes"));
    } else {
        print!("{text}");
    }
}

fn check(file: &Path, json: bool, strategy: Option<Strategy>) -> Result<ExitCode, ExitCode> {
    let problem = load(file)?;
    let strategy = match strategy {
        None => None,
        Some(Strategy::Auto) => Some(RadicalStrategy::Auto),
        Some(Strategy::Monomial) => Some(RadicalStrategy::Monomial),
        Some(Strategy::Principal) => Some(RadicalStrategy::Principal),
        Some(Strategy::Zerodim) => Some(RadicalStrategy::ZeroDimensional),
        Some(Strategy::User) => match &problem.radical_user {
            Some(gens) => Some(RadicalStrategy::UserSupplied(gens.clone())),
            None => {
                eprintln!("error: --radical-strategy user needs a `radical user = ...;` statement");
                return Err(ExitCode::from(2));
            }
        },
    };
    let report = run_problem(&problem, strategy).map_err(|e| fail(&e))?;
    let format = if json { ReportFormat::Json } else { ReportFormat::Text };
    print!("{}", report_render(&report, format));
    Ok(ExitCode::from(report.status.exit_code() as u8))
}

fn groebner(file: &Path, order: &MonomialOrder, json: bool) -> Result<ExitCode, ExitCode> {
    let problem = load(file)?;
    if let Some(ideal) = problem.ideal() {
        let ideal = ideal.map_err(|e| fail(&e))?;
        if !order.fits(problem.ring.arity()) {
            eprintln!("error: order `{order}` does not fit {} variables", problem.ring.arity());
            return Err(ExitCode::from(2));
        }
        let basis = ideal.groebner_basis(order);
        let rendered: Vec<String> = basis.iter().map(|g| g.render(order)).collect();
        let value = json!({
            "order": order.to_string(),
            "basis": rendered,
            "is_groebner": is_groebner_basis(&basis, order),
            "is_reduced": is_reduced_basis(&basis, order),
        });
        let text: String = rendered.iter().map(|g| format!("{g}\n")).collect();
        emit(json, value, text);
        return Ok(ExitCode::SUCCESS);
    }
    let Some((_, pres)) = &problem.dmodule else {
        return Err(fail(&Error::Unsupported("no `ideal` or `dmodule` to work on".into())));
    };
    if *order != filtration_order(pres.n()) {
        return Err(fail(&Error::Unsupported(format!(
            "left ideals use the order filtration `{}`",
            filtration_order(pres.n())
        ))));
    }
    let names = problem.weyl_names().map_err(|e| fail(&e))?;
    let basis = weyl_groebner(pres);
    let rendered: Vec<String> = basis.iter().map(|g| g.render(&names)).collect();
    let value = json!({
        "order": order.to_string(),
        "basis": rendered,
        "is_groebner": is_weyl_groebner(&basis),
        "is_reduced": is_weyl_groebner(&basis),
    });
    let text: String = rendered.iter().map(|g| format!("{g}\n")).collect();
    emit(json, value, text);
    Ok(ExitCode::SUCCESS)
}

fn charideal(file: &Path, json: bool) -> Result<ExitCode, ExitCode> {
    let problem = load(file)?;
    let Some((_, pres)) = &problem.dmodule else {
        return Err(fail(&Error::Unsupported("no `dmodule` statement".into())));
    };
    let names = problem.weyl_names().map_err(|e| fail(&e))?;
    let weyl: Vec<String> = weyl_groebner(pres).iter().map(|g| g.render(&names)).collect();
    let j = characteristic_ideal_in(pres, &problem.ring).map_err(|e| fail(&e))?;
    let gb = j.groebner_basis(&MonomialOrder::GrevLex);
    let value = json!({
        "weyl_basis": weyl,
        "char_ideal": strings(j.generators()),
        "char_ideal_grevlex": strings(&gb),
    });
    let text = format!(
        "left Groebner basis: {}\ncharacteristic ideal: ({})\ngrevlex basis: {}\n",
        weyl.join(", "),
        strings(j.generators()).join(", "),
        strings(&gb).join(", "),
    );
    emit(json, value, text);
    Ok(ExitCode::SUCCESS)
}

fn hkr(n: usize, i: usize, json: bool) -> Result<ExitCode, ExitCode> {
    if n == 0 {
        eprintln!("error: --vars must be positive");
        return Err(ExitCode::from(2));
    }
    let cmp = hkr_compare(n, i);
    let tor = koszul_tor(n, i);
    let d2 = KoszulComplex::diagonal(n).d_squared_vanishes();
    let value = json!({
        "vars": n,
        "degree": i,
        "tor_rank": cmp.tor_rank,
        "form_rank": cmp.form_rank,
        "matches": cmp.matches(),
        "free": tor.free,
        "d_squared_zero": d2,
        "correspondence": cmp.correspondence,
    });
    let mut text = format!(
        "Tor_{i} rank {} vs forms of degree {i}: {} ({})\n",
        cmp.tor_rank,
        cmp.form_rank,
        if cmp.matches() { "match" } else { "MISMATCH" },
    );
    for (e, d) in &cmp.correspondence {
        text.push_str(&format!("  {e} -> {d}\n"));
    }
    emit(json, value, text);
    Ok(if cmp.matches() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn bracket(file: &Path, eval: &[String], json: bool) -> Result<ExitCode, ExitCode> {
    let problem = load(file)?;
    let theta = problem.bivector().map_err(|e| fail(&e))?;
    let parse = |s: &str| {
        Polynomial::parse(&problem.ring, s).map_err(|e| {
            eprintln!("error: argument `{s}`: {e}");
            ExitCode::from(2)
        })
    };
    let f = parse(&eval[0])?;
    let g = parse(&eval[1])?;
    let b = theta.bracket(&f, &g).map_err(|e| fail(&e))?;
    let value = json!({"f": f.to_string(), "g": g.to_string(), "bracket": b.to_string()});
    emit(json, value, format!("{{{f}, {g}}} = {b}\n"));
    Ok(ExitCode::SUCCESS)
}

fn configure_threads() -> Result<(), ExitCode> {
    let Ok(v) = std::env::var("HHGABBER_THREADS") else {
        return Ok(());
    };
    let n: usize = match v.trim().parse() {
        Ok(n) if n > 0 => n,
        _ => {
            eprintln!("error: HHGABBER_THREADS must be a positive integer, got `{v}`");
            return Err(ExitCode::from(2));
        }
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| {
            eprintln!("error: thread pool: {e}");
            ExitCode::from(2)
        })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(code) = configure_threads() {
        return code;
    }
    let result = match &cli.command {
        Command::Check { file, json, radical_strategy } => check(file, *json, *radical_strategy),
        Command::Groebner { file, order, json } => groebner(file, order, *json),
        Command::Charideal { file, json } => charideal(file, *json),
        Command::Hkr { vars, degree, json } => hkr(*vars, *degree, *json),
        Command::Bracket { file, eval, json } => bracket(file, eval, *json),
    };
    result.unwrap_or_else(|code| code)
}
