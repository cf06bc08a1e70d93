//! From a D-module presentation, or an ideal with a bracket, to an
//! involutivity verdict for the characteristic ideal and its radical.

mod input;
mod report;

use std::sync::Arc;

use num_traits::Zero;

pub use input::{parse_input, BracketDecl, Problem};
pub use report::{report_render, ReportFormat};

use crate::error::{Error, Result};
use crate::hochschild::{theta_annihilates_chern, ChernCharacter};
use crate::ideal::{Ideal, Radical, RadicalStrategy};
use crate::poisson::{
    canonical_symplectic, conormal_determinant, conormal_projection, contract_form, is_involutive,
    sequence_basis, Bivector, Involutivity, Witness,
};
use crate::poly::{MonomialOrder, PolyRing, Polynomial, Rational};
use crate::weyl::{characteristic_ideal_in, DModulePresentation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Involutive,
    Violation,
    Error,
    Unsupported,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Involutive => "involutive",
            Self::Violation => "violation",
            Self::Error => "error",
            Self::Unsupported => "unsupported",
        }
    }

    /// Process exit code: 0, 1, 2, 3 in declaration order.
    pub fn exit_code(self) -> i32 {
        match self {
            Self::Involutive => 0,
            Self::Violation => 1,
            Self::Error => 2,
            Self::Unsupported => 3,
        }
    }
}

/// The three equivalent vanishing tests run on a regular generating set of
/// the radical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossCheck {
    Skipped(String),
    Ran {
        regular_sequence: Vec<Polynomial>,
        projection_vanishes: bool,
        contraction_vanishes: bool,
        chern_annihilated: bool,
    },
}

impl CrossCheck {
    /// `None` when skipped.
    pub fn agrees(&self) -> Option<bool> {
        match self {
            Self::Skipped(_) => None,
            Self::Ran {
                projection_vanishes: a,
                contraction_vanishes: b,
                chern_annihilated: c,
                ..
            } => Some(a == b && b == c),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GabberReport {
    pub input_digest: String,
    pub status: Status,
    pub char_ideal: Vec<Polynomial>,
    pub char_ideal_involutive: Involutivity,
    pub radical: Option<Radical>,
    pub radical_involutive: Option<Involutivity>,
    pub cross_check: CrossCheck,
    /// Outcomes that contradict a theorem or an internal consistency check.
    pub alerts: Vec<String>,
    pub notes: Vec<String>,
}

pub enum GabberInput<'a> {
    DModule(&'a DModulePresentation),
    Raw { ideal: &'a Ideal, bracket: &'a Bivector },
}

/// Run the check described by a parsed file: the D-module if present,
/// otherwise the ideal with its bracket. `strategy = None` uses the file's
/// `radical user` when given, else `auto`.
pub fn run_problem(problem: &Problem, strategy: Option<RadicalStrategy>) -> Result<GabberReport> {
    let strategy = match strategy {
        Some(s) => s,
        None => match &problem.radical_user {
            Some(gens) => RadicalStrategy::UserSupplied(gens.clone()),
            None => RadicalStrategy::Auto,
        },
    };
    let mut notes = Vec::new();
    let mut report = if let Some((_, pres)) = &problem.dmodule {
        if matches!(problem.bracket, Some(BracketDecl::Table(_))) {
            notes.push("declared bracket ignored: D-module input uses the canonical bracket".into());
        }
        run_inner(problem, GabberInput::DModule(pres), &strategy)?
    } else if let Some(ideal) = problem.ideal() {
        let ideal = ideal?;
        let theta = problem.bivector()?;
        run_inner(problem, GabberInput::Raw { ideal: &ideal, bracket: &theta }, &strategy)?
    } else {
        return Err(Error::Unsupported("nothing to check: no `ideal` or `dmodule`".into()));
    };
    notes.append(&mut report.notes);
    report.notes = notes;
    Ok(report)
}

fn run_inner(problem: &Problem, input: GabberInput, strategy: &RadicalStrategy) -> Result<GabberReport> {
    let mut report = run_gabber_check(input, strategy, &problem.ring)?;
    report.input_digest = problem.echo();
    Ok(report)
}

/// The end-to-end check. `ring` is the cotangent ring in which a D-module's
/// characteristic ideal is written (ignored for raw input).
pub fn run_gabber_check(
    input: GabberInput,
    strategy: &RadicalStrategy,
    ring: &Arc<PolyRing>,
) -> Result<GabberReport> {
    let (char_ideal, theta, is_dmodule) = match input {
        GabberInput::DModule(pres) => {
            let j = characteristic_ideal_in(pres, ring)?;
            (j, canonical_symplectic(ring)?, true)
        }
        GabberInput::Raw { ideal, bracket } => (ideal.clone(), bracket.clone(), false),
    };
    let mut alerts = Vec::new();
    let mut notes = Vec::new();

    let char_inv = is_involutive(&char_ideal, &theta)?;
    if is_dmodule && !char_inv.is_involutive() {
        alerts.push(
            "characteristic ideal is not involutive: the symbol calculus has been violated".into(),
        );
    }

    let mut report = GabberReport {
        input_digest: String::new(),
        status: Status::Involutive,
        char_ideal: char_ideal.generators().to_vec(),
        char_ideal_involutive: char_inv,
        radical: None,
        radical_involutive: None,
        cross_check: CrossCheck::Skipped("no radical".into()),
        alerts: Vec::new(),
        notes: Vec::new(),
    };

    let radical = match char_ideal.radical(strategy) {
        Ok(r) => r,
        Err(e) => {
            report.status = match e {
                Error::StrategyInapplicable { .. } | Error::Unsupported(_) | Error::InfiniteDimension => {
                    Status::Unsupported
                }
                _ => Status::Error,
            };
            notes.push(format!("radical: {e}"));
            report.alerts = alerts;
            report.notes = notes;
            return Ok(report);
        }
    };
    let rad_inv = is_involutive(&radical.ideal, &theta)?;
    if is_dmodule && !rad_inv.is_involutive() {
        alerts.push(
            "radical of the characteristic ideal is not involutive on a D-module input: \
             kernel bug or counterexample"
                .into(),
        );
    }

    let cross = cross_check(&theta, radical.ideal.generators());
    if cross.agrees() == Some(false) {
        alerts.push("vanishing criteria disagree".into());
    }

    report.status = if report.char_ideal_involutive.is_involutive() && rad_inv.is_involutive() {
        Status::Involutive
    } else {
        Status::Violation
    };
    report.radical = Some(radical);
    report.radical_involutive = Some(rad_inv);
    report.cross_check = cross;
    report.alerts = alerts;
    report.notes = notes;
    Ok(report)
}

/// Projection, contraction and Chern-character tests on `fs`, if `fs`
/// passes the regularity check.
pub fn cross_check(theta: &Bivector, fs: &[Polynomial]) -> CrossCheck {
    let omega = match conormal_determinant(fs) {
        Ok(w) => w,
        Err(e) => return CrossCheck::Skipped(e.to_string()),
    };
    let run = || -> Result<CrossCheck> {
        let projection_vanishes = conormal_projection(theta, fs)?.is_zero();
        let contraction_vanishes = match contract_form(theta, &omega) {
            Ok(c) => c.reduce(&sequence_basis(fs)?, &MonomialOrder::GrevLex).is_zero(),
            Err(Error::DegreeTooSmall(_)) => true,
            Err(e) => return Err(e),
        };
        let chern_annihilated = theta_annihilates_chern(theta, &ChernCharacter::of_center(fs)?)?;
        Ok(CrossCheck::Ran {
            regular_sequence: fs.to_vec(),
            projection_vanishes,
            contraction_vanishes,
            chern_annihilated,
        })
    };
    run().unwrap_or_else(|e| CrossCheck::Skipped(e.to_string()))
}

/// Orient each witness so that its normal form has a positive leading
/// coefficient, swapping `f` and `g` when needed.
pub(crate) fn oriented(w: &Witness) -> Witness {
    let negative = w
        .normal_form
        .leading_term(&MonomialOrder::GrevLex)
        .map(|(_, c)| c < Rational::zero())
        .unwrap_or(false);
    if negative {
        Witness {
            f: w.g.clone(),
            g: w.f.clone(),
            bracket: -&w.bracket,
            normal_form: -&w.normal_form,
        }
    } else {
        w.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(text: &str) -> GabberReport {
        run_problem(&parse_input(text).unwrap(), None).unwrap()
    }

    #[test]
    fn dmodule_d_squared() {
        let r = run("ring x xi cotangent; dmodule M = d1^2; check gabber;");
        assert_eq!(r.status, Status::Involutive);
        assert_eq!(r.char_ideal[0].to_string(), "xi^2");
        let rad = r.radical.as_ref().unwrap();
        assert_eq!(rad.ideal.generators()[0].to_string(), "xi");
        assert!(r.alerts.is_empty());
        assert_eq!(r.cross_check.agrees(), Some(true));
    }

    #[test]
    fn raw_point_is_a_violation() {
        let r = run("ring x xi cotangent; ideal I = x, xi; bracket canonical;");
        assert_eq!(r.status, Status::Violation);
        let w = oriented(&r.radical_involutive.as_ref().unwrap().witnesses[0]);
        assert_eq!((w.f.to_string(), w.g.to_string()), ("xi".into(), "x".into()));
        assert_eq!(w.normal_form.to_string(), "1");
        assert_eq!(r.cross_check.agrees(), Some(true));
        assert!(matches!(r.cross_check, CrossCheck::Ran { projection_vanishes: false, .. }));
    }

    #[test]
    fn strategy_outcomes() {
        let p = parse_input("ring x xi cotangent; ideal I = x^2 + xi^2 - 1, x*xi;").unwrap();
        let r = run_problem(&p, Some(RadicalStrategy::Monomial)).unwrap();
        assert_eq!(r.status, Status::Unsupported);
        let p = parse_input("ring x xi cotangent; ideal I = x^2; radical user = xi;").unwrap();
        let r = run_problem(&p, None).unwrap();
        assert_eq!(r.status, Status::Error);
        let p = parse_input("ring x xi cotangent; ideal I = x^2; radical user = x;").unwrap();
        let r = run_problem(&p, None).unwrap();
        assert_eq!(r.status, Status::Involutive);
        assert!(!r.radical.unwrap().trusted);
    }

    #[test]
    fn missing_subject() {
        let p = parse_input("ring x xi cotangent;").unwrap();
        assert!(matches!(run_problem(&p, None), Err(Error::Unsupported(_))));
    }
}
