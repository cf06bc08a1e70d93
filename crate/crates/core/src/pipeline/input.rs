//! The stanza input format.
//!
//! ```text
//! # comment
//! ring x xi cotangent;
//! ideal I = x, xi;
//! dmodule M = d1^2 - x;
//! bracket canonical;          # or: bracket {x,xi} = -1;  (repeatable)
//! radical user = x;
//! check gabber;
//! ```
//!
//! The ring must come first. Generators are comma-separated and use the
//! shared polynomial grammar; D-module generators are read in the Weyl
//! algebra with derivations `d1..dn`.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, ParseError, Result};
use crate::ideal::Ideal;
use crate::poisson::{canonical_symplectic, Bivector};
use crate::poly::{PolyRing, Polynomial};
use crate::weyl::{DModulePresentation, WeylNames, WeylOperator};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BracketDecl {
    Canonical,
    /// `{a, b} = value` on coordinate pairs.
    Table(Vec<(usize, usize, Polynomial)>),
}

#[derive(Debug, Clone)]
pub struct Problem {
    pub ring: Arc<PolyRing>,
    pub ideal: Option<(String, Vec<Polynomial>)>,
    pub dmodule: Option<(String, DModulePresentation)>,
    pub bracket: Option<BracketDecl>,
    pub radical_user: Option<Vec<Polynomial>>,
    pub check_gabber: bool,
}

impl Problem {
    pub fn ideal(&self) -> Option<Result<Ideal>> {
        self.ideal
            .as_ref()
            .map(|(_, gens)| Ideal::new(&self.ring, gens.clone()))
    }

    pub fn weyl_names(&self) -> Result<WeylNames> {
        WeylNames::from_ring(&self.ring)
    }

    /// The declared bracket; canonical by default on a cotangent ring.
    pub fn bivector(&self) -> Result<Bivector> {
        match &self.bracket {
            Some(BracketDecl::Table(entries)) => Bivector::new(&self.ring, entries.iter().cloned()),
            Some(BracketDecl::Canonical) => canonical_symplectic(&self.ring),
            None if self.ring.is_cotangent() => canonical_symplectic(&self.ring),
            None => Err(Error::Unsupported(
                "no bracket declared and the ring has no cotangent structure".into(),
            )),
        }
    }

    /// Canonical text form; parsing it gives back the same problem.
    pub fn echo(&self) -> String {
        let mut out = String::new();
        let names = self.ring.names();
        let suffix = if self.ring.is_cotangent() { " cotangent" } else { "" };
        let _ = writeln!(out, "ring {}{suffix};", names.join(" "));
        let list = |ps: &[Polynomial]| ps.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        if let Some((name, gens)) = &self.ideal {
            let _ = writeln!(out, "ideal {name} = {};", list(gens));
        }
        if let Some((name, pres)) = &self.dmodule {
            let wn = self.weyl_names().expect("validated on parse");
            let gens: Vec<String> = pres.generators().iter().map(|g| g.render(&wn)).collect();
            let _ = writeln!(out, "dmodule {name} = {};", gens.join(", "));
        }
        match &self.bracket {
            Some(BracketDecl::Canonical) => out.push_str("bracket canonical;\n"),
            Some(BracketDecl::Table(entries)) => {
                for (i, j, v) in entries {
                    let _ = writeln!(out, "bracket {{{},{}}} = {v};", names[*i], names[*j]);
                }
            }
            None => {}
        }
        if let Some(gens) = &self.radical_user {
            let _ = writeln!(out, "radical user = {};", list(gens));
        }
        if self.check_gabber {
            out.push_str("check gabber;\n");
        }
        out
    }
}

/// 1-based line and column of byte offset `at`.
fn position(src: &str, at: usize) -> (usize, usize) {
    let before = &src[..at];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

fn err_at(src: &str, at: usize, msg: impl Into<String>) -> Error {
    let (l, c) = position(src, at);
    ParseError::new(l, c, msg).into()
}

/// A slice of the source and its byte offset.
#[derive(Clone, Copy)]
struct Span<'a> {
    text: &'a str,
    at: usize,
}

impl<'a> Span<'a> {
    fn trim(self) -> Self {
        let lead = self.text.len() - self.text.trim_start().len();
        Span {
            text: self.text.trim(),
            at: self.at + lead,
        }
    }

    fn split_once(self, c: char) -> Option<(Self, Self)> {
        let k = self.text.find(c)?;
        Some((
            Span { text: &self.text[..k], at: self.at },
            Span { text: &self.text[k + 1..], at: self.at + k + 1 },
        ))
    }

    fn split(self, c: char) -> Vec<Self> {
        let mut out = Vec::new();
        let mut start = 0;
        for (k, ch) in self.text.char_indices() {
            if ch == c {
                out.push(Span { text: &self.text[start..k], at: self.at + start });
                start = k + 1;
            }
        }
        out.push(Span { text: &self.text[start..], at: self.at + start });
        out
    }

    fn first_word(self) -> (Self, Self) {
        let k = self
            .text
            .find(|c: char| c.is_whitespace() || c == '{' || c == '=')
            .unwrap_or(self.text.len());
        (
            Span { text: &self.text[..k], at: self.at },
            Span { text: &self.text[k..], at: self.at + k }.trim(),
        )
    }
}

fn parse_poly(src: &str, ring: &Arc<PolyRing>, s: Span) -> Result<Polynomial> {
    let s = s.trim();
    if s.text.is_empty() {
        return Err(err_at(src, s.at, "expected a polynomial"));
    }
    let (l, c) = position(src, s.at);
    Polynomial::parse(ring, s.text).map_err(|e| e.offset(l, c).into())
}

fn parse_list(src: &str, ring: &Arc<PolyRing>, s: Span) -> Result<Vec<Polynomial>> {
    let gens = s
        .split(',')
        .into_iter()
        .map(|g| parse_poly(src, ring, g))
        .collect::<Result<Vec<_>>>()?;
    if gens.iter().all(Polynomial::is_zero) {
        return Err(err_at(src, s.at, "need at least one nonzero generator"));
    }
    Ok(gens)
}

/// `NAME = rhs`.
fn named<'a>(src: &str, rest: Span<'a>) -> Result<(String, Span<'a>)> {
    let (lhs, rhs) = rest
        .split_once('=')
        .ok_or_else(|| err_at(src, rest.at, "expected `NAME = ...`"))?;
    let lhs = lhs.trim();
    if lhs.text.is_empty() || !lhs.text.chars().all(|c| c.is_alphanumeric() || c == '_') {
        return Err(err_at(src, lhs.at, "expected a name"));
    }
    Ok((lhs.text.to_string(), rhs))
}

pub fn parse_input(text: &str) -> Result<Problem> {
    // blank out comments, keeping offsets
    let src: String = text
        .split_inclusive('\n')
        .map(|line| match line.find('#') {
            Some(k) => {
                let tail: String = line[k..].chars().map(|c| if c == '\n' { c } else { ' ' }).collect();
                format!("{}{}", &line[..k], tail)
            }
            None => line.to_string(),
        })
        .collect();
    let src = src.as_str();
    let whole = Span { text: src, at: 0 };
    let mut stmts = whole.split(';');
    let tail = stmts.pop().expect("split yields at least one piece").trim();
    if !tail.text.is_empty() {
        return Err(err_at(src, tail.at, "missing `;`"));
    }

    let mut ring: Option<Arc<PolyRing>> = None;
    let mut problem: Option<Problem> = None;
    for stmt in stmts.into_iter().map(Span::trim) {
        if stmt.text.is_empty() {
            continue;
        }
        let (kw, rest) = stmt.first_word();
        if kw.text == "ring" {
            if ring.is_some() {
                return Err(err_at(src, kw.at, "duplicate `ring`"));
            }
            let mut names: Vec<&str> = rest.text.split_whitespace().collect();
            let cotangent = names.last() == Some(&"cotangent");
            if cotangent {
                names.pop();
            }
            let r = if cotangent {
                PolyRing::with_cotangent(names.iter().copied())
            } else {
                PolyRing::new(names.iter().copied())
            }
            .map_err(|e| err_at(src, rest.at, e.to_string()))?;
            problem = Some(Problem {
                ring: r.clone(),
                ideal: None,
                dmodule: None,
                bracket: None,
                radical_user: None,
                check_gabber: false,
            });
            ring = Some(r);
            continue;
        }
        let (Some(ring), Some(p)) = (ring.as_ref(), problem.as_mut()) else {
            return Err(err_at(src, kw.at, "`ring` must come first"));
        };
        match kw.text {
            "ideal" => {
                if p.ideal.is_some() {
                    return Err(err_at(src, kw.at, "duplicate `ideal`"));
                }
                let (name, rhs) = named(src, rest)?;
                p.ideal = Some((name, parse_list(src, ring, rhs)?));
            }
            "dmodule" => {
                if p.dmodule.is_some() {
                    return Err(err_at(src, kw.at, "duplicate `dmodule`"));
                }
                let names = WeylNames::from_ring(ring)
                    .map_err(|_| err_at(src, kw.at, "`dmodule` needs a cotangent ring"))?;
                let (name, rhs) = named(src, rest)?;
                let mut gens = Vec::new();
                for g in rhs.split(',') {
                    let g = g.trim();
                    let (l, c) = position(src, g.at);
                    if g.text.is_empty() {
                        return Err(err_at(src, g.at, "expected an operator"));
                    }
                    let op = WeylOperator::parse(g.text, &names).map_err(|e| e.offset(l, c))?;
                    if op.is_zero() {
                        return Err(err_at(src, g.at, "zero operator"));
                    }
                    gens.push(op);
                }
                p.dmodule = Some((name, DModulePresentation::new(names.n(), gens)?));
            }
            "bracket" => {
                if rest.text == "canonical" {
                    if p.bracket.is_some() {
                        return Err(err_at(src, kw.at, "bracket already declared"));
                    }
                    if !ring.is_cotangent() {
                        return Err(err_at(src, rest.at, "canonical bracket needs a cotangent ring"));
                    }
                    p.bracket = Some(BracketDecl::Canonical);
                    continue;
                }
                let entries = match &mut p.bracket {
                    None => {
                        p.bracket = Some(BracketDecl::Table(Vec::new()));
                        match &mut p.bracket {
                            Some(BracketDecl::Table(e)) => e,
                            _ => unreachable!(),
                        }
                    }
                    Some(BracketDecl::Table(e)) => e,
                    Some(BracketDecl::Canonical) => {
                        return Err(err_at(src, kw.at, "bracket already declared canonical"))
                    }
                };
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| err_at(src, rest.at, "expected `{a,b} = ...` or `canonical`"))?;
                let lhs = lhs.trim();
                let inner = lhs
                    .text
                    .strip_prefix('{')
                    .and_then(|s| s.strip_suffix('}'))
                    .ok_or_else(|| err_at(src, lhs.at, "expected `{a,b}`"))?;
                let pair = Span { text: inner, at: lhs.at + 1 }.split(',');
                if pair.len() != 2 {
                    return Err(err_at(src, lhs.at, "expected exactly two variables"));
                }
                let mut idx = [0usize; 2];
                for (k, v) in pair.into_iter().map(Span::trim).enumerate() {
                    idx[k] = ring
                        .index_of(v.text)
                        .ok_or_else(|| err_at(src, v.at, format!("unknown variable `{}`", v.text)))?;
                }
                if idx[0] == idx[1] {
                    return Err(err_at(src, lhs.at, "a variable has zero bracket with itself"));
                }
                entries.push((idx[0], idx[1], parse_poly(src, ring, rhs)?));
            }
            "radical" => {
                let (name, rhs) = named(src, rest)?;
                if name != "user" {
                    return Err(err_at(src, rest.at, "expected `radical user = ...`"));
                }
                if p.radical_user.is_some() {
                    return Err(err_at(src, kw.at, "duplicate `radical`"));
                }
                p.radical_user = Some(parse_list(src, ring, rhs)?);
            }
            "check" => {
                if rest.text != "gabber" {
                    return Err(err_at(src, rest.at, "only `check gabber` is known"));
                }
                p.check_gabber = true;
            }
            other => return Err(err_at(src, kw.at, format!("unknown statement `{other}`"))),
        }
    }
    problem.ok_or_else(|| ParseError::new(1, 1, "no `ring` statement").into())
}
