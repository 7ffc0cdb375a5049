use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered set of variable names, shared by every element of one ring.
///
/// The order of names is fixed for the lifetime of the set; exponent vectors
/// and monomial orders refer to positions in this order. Operations that mix
/// elements over different variable sets panic rather than coerce.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::InvalidArgument("empty variable name".into()));
            }
            if names[..i].iter().any(|m| m == n) {
                return Err(Error::InvalidArgument(format!("duplicate variable `{n}`")));
            }
        }
        Ok(VarSet(Arc::new(names)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// A new set with `extra` appended after the existing names.
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> Result<VarSet> {
        let mut names: Vec<String> = self.0.as_ref().clone();
        names.extend(extra.iter().map(|s| s.as_ref().to_string()));
        VarSet::new(&names)
    }

    /// First of `base`, `base0`, `base1`, ... that is not already a name.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        for k in 0.. {
            let candidate = format!("{base}{k}");
            if self.index_of(&candidate).is_none() {
                return candidate;
            }
        }
        unreachable!()
    }

    pub(crate) fn same(&self, other: &VarSet) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.join(","))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(","))
    }
}
