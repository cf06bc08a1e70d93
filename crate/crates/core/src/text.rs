//! Tokenizer and term-level parser for the shared polynomial grammar.
//!
//! A polynomial is a signed sum of terms; a term is `coef`, `coef*mono`
//! or `mono`, where `coef` is `int` or `int/posint` and `mono` is a `*`-joined
//! list of `name` or `name^exp` factors. Name resolution and the meaning of
//! the factor product (commutative or normal-ordered) are left to callers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::ParseError;
use crate::poly::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

#[derive(Debug, Clone)]
pub(crate) struct Factor {
    pub name: String,
    pub exp: u32,
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone)]
pub(crate) struct Term {
    pub coef: Rational,
    pub factors: Vec<Factor>,
}

fn tokenize(text: &str) -> Result<(Vec<Spanned>, (usize, usize)), ParseError> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut column = 1;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                digits.push(d);
                chars.next();
                column += 1;
            }
            Tok::Int(digits.parse().expect("ascii digits"))
        } else if c.is_alphabetic() || c == '_' {
            let mut name = String::new();
            while let Some(&d) = chars.peek() {
                if !(d.is_alphanumeric() || d == '_') {
                    break;
                }
                name.push(d);
                chars.next();
                column += 1;
            }
            Tok::Ident(name)
        } else {
            chars.next();
            column += 1;
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                other => {
                    return Err(ParseError::new(l, col, format!("unexpected character `{other}`")))
                }
            }
        };
        out.push(Spanned {
            tok,
            line: l,
            column: col,
        });
    }
    Ok((out, (line, column)))
}

struct Cursor {
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

impl Cursor {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|s| (s.line, s.column))
            .unwrap_or(self.end)
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        let (l, c) = self.here();
        ParseError::new(l, c, msg)
    }

    fn bump(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }
}

fn parse_factor(cur: &mut Cursor) -> Result<Factor, ParseError> {
    let (line, column) = cur.here();
    let name = match cur.bump() {
        Some(Spanned {
            tok: Tok::Ident(n), ..
        }) => n,
        _ => {
            cur.pos -= 1;
            return Err(cur.err("expected a variable name"));
        }
    };
    let mut exp = 1;
    if cur.peek() == Some(&Tok::Caret) {
        let caret = cur.bump().expect("peeked");
        match cur.peek() {
            Some(Tok::Int(v)) => {
                exp = u32::try_from(v.clone())
                    .map_err(|_| cur.err("exponent does not fit in 32 bits"))?;
                cur.bump();
            }
            _ => {
                return Err(ParseError::new(
                    caret.line,
                    caret.column,
                    "dangling `^`: expected a non-negative integer exponent",
                ))
            }
        }
    }
    Ok(Factor {
        name,
        exp,
        line,
        column,
    })
}

fn parse_term(cur: &mut Cursor, negative: bool) -> Result<Term, ParseError> {
    let mut coef = Rational::one();
    let mut factors = Vec::new();
    match cur.peek() {
        Some(Tok::Int(_)) => {
            let Some(Spanned {
                tok: Tok::Int(num), ..
            }) = cur.bump()
            else {
                unreachable!()
            };
            let mut den = BigInt::one();
            if cur.peek() == Some(&Tok::Slash) {
                cur.bump();
                match cur.peek() {
                    Some(Tok::Int(d)) if !d.is_zero() => {
                        den = d.clone();
                        cur.bump();
                    }
                    Some(Tok::Int(_)) => return Err(cur.err("zero denominator")),
                    _ => return Err(cur.err("expected a positive integer denominator")),
                }
            }
            coef = Rational::new(num, den);
            if cur.peek() == Some(&Tok::Star) {
                cur.bump();
                factors.push(parse_factor(cur)?);
                while cur.peek() == Some(&Tok::Star) {
                    cur.bump();
                    factors.push(parse_factor(cur)?);
                }
            }
        }
        Some(Tok::Ident(_)) => {
            factors.push(parse_factor(cur)?);
            while cur.peek() == Some(&Tok::Star) {
                cur.bump();
                factors.push(parse_factor(cur)?);
            }
        }
        Some(_) => return Err(cur.err("expected a coefficient or a variable")),
        None => return Err(cur.err("unexpected end of expression")),
    }
    if negative {
        coef = -coef;
    }
    Ok(Term { coef, factors })
}

/// Parse `text` into signed terms. Positions in errors are relative to `text`.
pub(crate) fn parse_terms(text: &str) -> Result<Vec<Term>, ParseError> {
    let (toks, end) = tokenize(text)?;
    let mut cur = Cursor { toks, pos: 0, end };
    if cur.peek().is_none() {
        return Err(cur.err("empty expression"));
    }
    let mut terms = Vec::new();
    let mut negative = false;
    match cur.peek() {
        Some(Tok::Minus) => {
            cur.bump();
            negative = true;
        }
        Some(Tok::Plus) => {
            cur.bump();
        }
        _ => {}
    }
    terms.push(parse_term(&mut cur, negative)?);
    while let Some(t) = cur.peek() {
        let negative = match t {
            Tok::Plus => false,
            Tok::Minus => true,
            _ => return Err(cur.err("expected `+` or `-` between terms")),
        };
        cur.bump();
        terms.push(parse_term(&mut cur, negative)?);
    }
    Ok(terms)
}

/// Render a rational the way the grammar reads it back (`-3/2`, `7`).
pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Join `(coefficient, monomial text)` pairs into `a*m + b*n - c` form.
/// An empty monomial text denotes the constant monomial.
pub(crate) fn join_terms<'a>(terms: impl IntoIterator<Item = (&'a Rational, String)>) -> String {
    let mut out = String::new();
    for (i, (c, mono)) in terms.into_iter().enumerate() {
        let negative = c < &Rational::zero();
        let abs = if negative { -c.clone() } else { c.clone() };
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&fmt_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&fmt_rational(&abs));
            out.push('*');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
