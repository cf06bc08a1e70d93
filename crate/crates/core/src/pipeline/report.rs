//! Text and JSON rendering of a [`GabberReport`].

use std::fmt::Write as _;

use serde::Serialize;

use super::{oriented, CrossCheck, GabberReport};
use crate::poisson::Involutivity;
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Serialize)]
struct JsonReport {
    status: &'static str,
    char_ideal: Vec<String>,
    char_ideal_involutive: JsonVerdict,
    radical: Option<JsonRadical>,
    radical_involutive: Option<JsonVerdict>,
    cross_check: JsonCrossCheck,
    alerts: Vec<String>,
    notes: Vec<String>,
    input: String,
}

#[derive(Serialize)]
struct JsonRadical {
    generators: Vec<String>,
    strategy: &'static str,
    trusted: bool,
}

#[derive(Serialize)]
struct JsonVerdict {
    verdict: &'static str,
    witnesses: Vec<JsonWitness>,
}

#[derive(Serialize)]
struct JsonWitness {
    f: String,
    g: String,
    bracket: String,
    normal_form: String,
}

#[derive(Serialize)]
struct JsonCrossCheck {
    ran: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    regular_sequence: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    projection_vanishes: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    contraction_vanishes: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chern_annihilated: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(ToString::to_string).collect()
}

fn verdict(v: &Involutivity) -> JsonVerdict {
    JsonVerdict {
        verdict: if v.is_involutive() { "involutive" } else { "not_involutive" },
        witnesses: v
            .witnesses
            .iter()
            .map(oriented)
            .map(|w| JsonWitness {
                f: w.f.to_string(),
                g: w.g.to_string(),
                bracket: w.bracket.to_string(),
                normal_form: w.normal_form.to_string(),
            })
            .collect(),
    }
}

fn cross(c: &CrossCheck) -> JsonCrossCheck {
    match c {
        CrossCheck::Skipped(reason) => JsonCrossCheck {
            ran: false,
            regular_sequence: None,
            projection_vanishes: None,
            contraction_vanishes: None,
            chern_annihilated: None,
            agree: None,
            reason: Some(reason.clone()),
        },
        CrossCheck::Ran {
            regular_sequence,
            projection_vanishes,
            contraction_vanishes,
            chern_annihilated,
        } => JsonCrossCheck {
            ran: true,
            regular_sequence: Some(strings(regular_sequence)),
            projection_vanishes: Some(*projection_vanishes),
            contraction_vanishes: Some(*contraction_vanishes),
            chern_annihilated: Some(*chern_annihilated),
            agree: c.agrees(),
            reason: None,
        },
    }
}

fn to_json(r: &GabberReport) -> JsonReport {
    JsonReport {
        status: r.status.as_str(),
        char_ideal: strings(&r.char_ideal),
        char_ideal_involutive: verdict(&r.char_ideal_involutive),
        radical: r.radical.as_ref().map(|rad| JsonRadical {
            generators: strings(rad.ideal.generators()),
            strategy: rad.strategy.as_str(),
            trusted: rad.trusted,
        }),
        radical_involutive: r.radical_involutive.as_ref().map(verdict),
        cross_check: cross(&r.cross_check),
        alerts: r.alerts.clone(),
        notes: r.notes.clone(),
        input: r.input_digest.clone(),
    }
}

fn write_verdict(out: &mut String, label: &str, v: &Involutivity) {
    let _ = writeln!(
        out,
        "{label}: {}",
        if v.is_involutive() { "involutive" } else { "not involutive" }
    );
    for w in v.witnesses.iter().map(oriented) {
        let _ = writeln!(
            out,
            "  {{{}, {}}} = {}  (normal form {})",
            w.f, w.g, w.bracket, w.normal_form
        );
    }
}

fn to_text(r: &GabberReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "status: {}", r.status.as_str());
    let _ = writeln!(out, "characteristic ideal: ({})", strings(&r.char_ideal).join(", "));
    write_verdict(&mut out, "characteristic ideal", &r.char_ideal_involutive);
    if let Some(rad) = &r.radical {
        let _ = writeln!(
            out,
            "radical: {}  [{}{}]",
            rad.ideal,
            rad.strategy.as_str(),
            if rad.trusted { "" } else { ", user-supplied" }
        );
    }
    if let Some(v) = &r.radical_involutive {
        write_verdict(&mut out, "radical", v);
    }
    match &r.cross_check {
        CrossCheck::Skipped(reason) => {
            let _ = writeln!(out, "cross-check: skipped ({reason})");
        }
        CrossCheck::Ran {
            regular_sequence,
            projection_vanishes,
            contraction_vanishes,
            chern_annihilated,
        } => {
            let _ = writeln!(
                out,
                "cross-check on ({}): projection {}, contraction {}, chern {}{}",
                strings(regular_sequence).join(", "),
                if *projection_vanishes { "0" } else { "nonzero" },
                if *contraction_vanishes { "0" } else { "nonzero" },
                if *chern_annihilated { "0" } else { "nonzero" },
                if r.cross_check.agrees() == Some(true) { ", agree" } else { ", DISAGREE" },
            );
        }
    }
    for a in &r.alerts {
        let _ = writeln!(out, "ALERT: {a}");
    }
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    out
}

/// Byte-stable rendering; JSON keys appear in a fixed order.
pub fn report_render(r: &GabberReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => to_text(r),
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&to_json(r)).expect("plain data serializes");
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::{parse_input, run_problem};

    fn render(text: &str, format: ReportFormat) -> String {
        report_render(&run_problem(&parse_input(text).unwrap(), None).unwrap(), format)
    }

    #[test]
    fn json_shape() {
        let s = render("ring x xi cotangent; ideal I = x, xi;", ReportFormat::Json);
        let at = |k: &str| s.find(&format!("\n  \"{k}\":")).unwrap();
        let keys = ["status", "char_ideal", "char_ideal_involutive", "radical", "radical_involutive", "cross_check"];
        assert!(keys.windows(2).all(|w| at(w[0]) < at(w[1])));
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["status"], "violation");
        let w = &v["radical_involutive"]["witnesses"][0];
        assert_eq!((w["f"].as_str(), w["g"].as_str()), (Some("xi"), Some("x")));
        assert_eq!(w["normal_form"], "1");
        assert_eq!(v["radical"]["strategy"], "monomial");
    }

    #[test]
    fn deterministic() {
        let text = "ring x xi cotangent; dmodule M = x*d1 - 1/2;";
        for f in [ReportFormat::Json, ReportFormat::Text] {
            assert_eq!(render(text, f), render(text, f));
        }
        let t = render(text, ReportFormat::Text);
        assert!(t.starts_with("status: involutive\n"), "{t}");
    }
}
