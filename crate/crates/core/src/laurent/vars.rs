use std::collections::HashSet;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered, shared list of variable names of a Laurent ring.
#[derive(Clone, Eq)]
pub struct Vars(Arc<[String]>);

impl Vars {
    /// Names must match `[A-Za-z][A-Za-z0-9_]*` and be distinct.
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for name in &names {
            if !is_identifier(name) {
                return Err(Error::InvalidVariableName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(Vars(names.into()))
    }

    /// Parses a comma separated list such as `x,y`.
    pub fn parse_list(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Vars::new(Vec::<String>::new());
        }
        Vars::new(s.split(',').map(|n| n.trim().to_string()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn to_vec(&self) -> Vec<String> {
        self.0.to_vec()
    }

    pub(crate) fn ensure_same(&self, other: &Vars) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.to_vec(),
                right: other.to_vec(),
            })
        }
    }
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Deref for Vars {
    type Target = [String];
    fn deref(&self) -> &[String] {
        &self.0
    }
}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_names() {
        assert!(Vars::new(["x", "y_2", "Z9"]).is_ok());
        assert_eq!(
            Vars::new(["x", "x"]),
            Err(Error::DuplicateVariable("x".into()))
        );
        assert!(matches!(Vars::new(["2x"]), Err(Error::InvalidVariableName(_))));
        assert!(matches!(Vars::new([""]), Err(Error::InvalidVariableName(_))));
        assert!(matches!(Vars::new(["_a"]), Err(Error::InvalidVariableName(_))));
    }

    #[test]
    fn parse_list() {
        let v = Vars::parse_list("u, v").unwrap();
        assert_eq!(v.to_vec(), vec!["u", "v"]);
        assert_eq!(v.index_of("v"), Some(1));
    }
}
