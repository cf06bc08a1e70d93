use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::Monomial;

/// A term order on monomials. Variables are ranked by index: `x_0 > x_1 > ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Compare by weight first, ties broken by grevlex.
    Weighted(Vec<u32>),
}

impl MonomialOrder {
    /// Weight 0 on the `n` base variables and 1 on the `n` fiber variables:
    /// the order filtration of the Weyl algebra, refined by grevlex.
    pub fn order_filtration(n: usize) -> Self {
        Self::Weighted([vec![0; n], vec![1; n]].concat())
    }

    /// An elimination order for the flagged variables: any monomial touching
    /// them beats every monomial free of them.
    pub fn eliminating(arity: usize, drop: impl IntoIterator<Item = usize>) -> Self {
        let mut w = vec![0; arity];
        for i in drop {
            w[i] = 1;
        }
        Self::Weighted(w)
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            Self::Lex => a.0.cmp(&b.0),
            Self::GrevLex => grevlex(a, b),
            Self::Weighted(w) => weight(w, a).cmp(&weight(w, b)).then_with(|| grevlex(a, b)),
        }
    }

    /// Whether the order is usable with monomials of this arity.
    pub fn fits(&self, arity: usize) -> bool {
        match self {
            Self::Weighted(w) => w.len() == arity,
            _ => true,
        }
    }
}

fn weight(w: &[u32], m: &Monomial) -> u64 {
    w.iter()
        .zip(&m.0)
        .map(|(&wi, &e)| u64::from(wi) * u64::from(e))
        .sum()
}

fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.0.iter().zip(&b.0).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Lex => f.write_str("lex"),
            Self::GrevLex => f.write_str("grevlex"),
            Self::Weighted(w) => {
                let parts: Vec<String> = w.iter().map(u32::to_string).collect();
                write!(f, "weight:{}", parts.join(","))
            }
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    /// `lex`, `grevlex`, or `weight:w1,w2,...`.
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lex" => Ok(Self::Lex),
            "grevlex" => Ok(Self::GrevLex),
            _ => {
                let Some(ws) = s.strip_prefix("weight:") else {
                    return Err(format!("unknown monomial order `{s}`"));
                };
                ws.split(',')
                    .map(|w| w.trim().parse::<u32>().map_err(|e| format!("bad weight `{w}`: {e}")))
                    .collect::<Result<Vec<_>, _>>()
                    .map(Self::Weighted)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_breaks_ties_on_last_variable() {
        let o = MonomialOrder::GrevLex;
        assert_eq!(o.compare(&m(&[2, 1]), &m(&[1, 2])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[0, 0, 2]), &m(&[1, 1, 0])), Ordering::Less);
        assert_eq!(o.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn weight_dominates_degree() {
        let o = MonomialOrder::Weighted(vec![0, 1]);
        assert_eq!(o.compare(&m(&[0, 1]), &m(&[5, 0])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[3, 1]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn parse_and_display() {
        for s in ["lex", "grevlex", "weight:0,0,1,1"] {
            assert_eq!(s.parse::<MonomialOrder>().unwrap().to_string(), s);
        }
        assert!("weight:a".parse::<MonomialOrder>().is_err());
        assert!("deglex".parse::<MonomialOrder>().is_err());
    }
}
