use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::poly::Monomial;

/// A global monomial order on exponent vectors of a fixed length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    GrevLex,
    /// Lexicographic, earlier variables strongest.
    Lex,
    /// Elimination (product) order: the first `k` variables are compared by
    /// grevlex, ties broken by grevlex on the remaining variables. Any
    /// monomial involving a variable of the first block sorts above every
    /// monomial that avoids the block.
    Block(usize),
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            // a > b iff the rightmost nonzero entry of a - b is negative
            for i in (0..a.len()).rev() {
                if a[i] != b[i] {
                    return b[i].cmp(&a[i]);
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for i in 0..a.len() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Compares two monomials of the same length; `Greater` means `a` is the
    /// larger monomial in this order.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        debug_assert_eq!(ea.len(), eb.len(), "monomials over different rings");
        match *self {
            MonomialOrder::GrevLex => grevlex(ea, eb),
            MonomialOrder::Lex => lex(ea, eb),
            MonomialOrder::Block(k) => {
                let k = k.min(ea.len());
                match grevlex(&ea[..k], &eb[..k]) {
                    Ordering::Equal => grevlex(&ea[k..], &eb[k..]),
                    other => other,
                }
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Block(k) => write!(f, "block:{k}"),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "grevlex" => Ok(MonomialOrder::GrevLex),
            "lex" => Ok(MonomialOrder::Lex),
            _ => {
                if let Some(k) = s.strip_prefix("block:") {
                    let k: usize = k
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad block size in order `{s}`")))?;
                    Ok(MonomialOrder::Block(k))
                } else {
                    Err(Error::Parse(format!(
                        "unknown monomial order `{s}` (expected grevlex, lex, or block:<k>)"
                    )))
                }
            }
        }
    }
}

impl Serialize for MonomialOrder {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for MonomialOrder {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
