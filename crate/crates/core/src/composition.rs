use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// An ordered list of positive parts. The empty composition (of 0) is allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u64>);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompositionError {
    #[error("composition parts must be positive")]
    ZeroPart,
    #[error("cannot parse composition part {0:?}")]
    BadPart(String),
}

impl Composition {
    pub fn new(parts: Vec<u64>) -> Result<Self, CompositionError> {
        if parts.contains(&0) {
            return Err(CompositionError::ZeroPart);
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// No two consecutive parts share a parity.
    pub fn is_alternating(&self) -> bool {
        self.0.windows(2).all(|w| (w[0] + w[1]) % 2 == 1)
    }

    /// Alternating, with an odd first part and an even last part.
    pub fn is_alternating_odd_even(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (Some(f), Some(l)) => f % 2 == 1 && l % 2 == 0 && self.is_alternating(),
            _ => false,
        }
    }
}

impl From<Composition> for Vec<u64> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = CompositionError;

    /// Comma-separated parts; `""` and `"()"` are the empty composition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Composition::default());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| CompositionError::BadPart(p.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Composition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_predicates() {
        let c: Composition = "1,2,3,6,1".parse().unwrap();
        assert!(c.is_alternating());
        assert!(!c.is_alternating_odd_even());
        let c: Composition = "3,6,3,2,1,2".parse().unwrap();
        assert!(c.is_alternating_odd_even());
        assert!(!"2,2".parse::<Composition>().unwrap().is_alternating());
        assert!(Composition::default().is_alternating());
        assert!(!Composition::default().is_alternating_odd_even());
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("()".parse::<Composition>().unwrap(), Composition::default());
        assert_eq!(Composition::default().to_string(), "()");
        assert_eq!("1, 2".parse::<Composition>().unwrap().to_string(), "1,2");
        assert_eq!(
            "1,0".parse::<Composition>(),
            Err(CompositionError::ZeroPart)
        );
        assert!("1,x".parse::<Composition>().is_err());
    }
}
