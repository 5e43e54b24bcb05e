//! Lattice paths made of up-steps `U = (1, 1)` and down-steps `D_k = (1, -k)`
//! in which no two down-steps are adjacent ("air pockets").
//!
//! A [`LatticePath`] caches its ordinate profile on construction, so every
//! classification query is a single linear scan.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A single step of a path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    /// `D_k`, always with `k >= 1`.
    Down(u32),
}

impl Step {
    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down(k) => -i64::from(k),
        }
    }

    pub fn is_down(self) -> bool {
        matches!(self, Step::Down(_))
    }

    /// Sort key realising the order `U < D_1 < D_2 < ...`.
    fn rank(self) -> u32 {
        match self {
            Step::Up => 0,
            Step::Down(k) => k,
        }
    }
}

impl PartialOrd for Step {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Step {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Up => f.write_str("U"),
            Step::Down(1) => f.write_str("D"),
            Step::Down(k) => write!(f, "D{k}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("malformed step token at byte {pos}: {msg}")]
    MalformedToken { pos: usize, msg: String },
    #[error("two consecutive down-steps at step {index}")]
    ConsecutiveDowns { index: usize },
    #[error("down-step D0 is not allowed")]
    ZeroDown,
    #[error("path is not prime")]
    NotPrime,
    #[error("path is not a Dyck path with air pockets")]
    NotDap,
    #[error("merge needs the first path to end with a down-step and the second to start with one")]
    BadEnds,
}

/// Which kind of step a path starts or ends with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Boundary {
    Up,
    Down,
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathClassification {
    pub length: usize,
    pub final_ordinate: i64,
    pub max_height: i64,
    pub min_height: i64,
    pub is_dap: bool,
    pub is_gdap: bool,
    pub is_prime: bool,
    pub starts_with: Boundary,
    pub ends_with: Boundary,
}

/// A path with the air-pocket constraint enforced at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
    profile: Vec<i64>,
}

impl PartialOrd for LatticePath {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LatticePath {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.steps.cmp(&other.steps)
    }
}

impl Default for LatticePath {
    fn default() -> Self {
        Self::empty()
    }
}

impl LatticePath {
    pub fn empty() -> Self {
        LatticePath {
            steps: Vec::new(),
            profile: vec![0],
        }
    }

    pub fn new(steps: Vec<Step>) -> Result<Self, PathError> {
        let mut profile = Vec::with_capacity(steps.len() + 1);
        profile.push(0i64);
        let mut y = 0i64;
        for (i, s) in steps.iter().enumerate() {
            if *s == Step::Down(0) {
                return Err(PathError::ZeroDown);
            }
            if i > 0 && s.is_down() && steps[i - 1].is_down() {
                return Err(PathError::ConsecutiveDowns { index: i });
            }
            y += s.delta();
            profile.push(y);
        }
        Ok(LatticePath { steps, profile })
    }

    /// Builds a path from steps that are known to satisfy the air-pocket
    /// constraint. Only checked in debug builds.
    pub(crate) fn from_valid(steps: Vec<Step>) -> Self {
        debug_assert!(steps
            .windows(2)
            .all(|w| !(w[0].is_down() && w[1].is_down())));
        let mut profile = Vec::with_capacity(steps.len() + 1);
        let mut y = 0i64;
        profile.push(y);
        for s in &steps {
            y += s.delta();
            profile.push(y);
        }
        LatticePath { steps, profile }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn profile(&self) -> &[i64] {
        &self.profile
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn final_ordinate(&self) -> i64 {
        *self.profile.last().unwrap()
    }

    pub fn max_height(&self) -> i64 {
        *self.profile.iter().max().unwrap()
    }

    pub fn min_height(&self) -> i64 {
        *self.profile.iter().min().unwrap()
    }

    pub fn first(&self) -> Option<Step> {
        self.steps.first().copied()
    }

    pub fn last(&self) -> Option<Step> {
        self.steps.last().copied()
    }

    pub fn is_gdap(&self) -> bool {
        self.final_ordinate() == 0
    }

    pub fn is_dap(&self) -> bool {
        self.len() >= 2 && self.final_ordinate() == 0 && self.min_height() >= 0
    }

    pub fn is_prime(&self) -> bool {
        self.is_dap()
            && matches!(self.last(), Some(Step::Down(k)) if k >= 2)
            && self.profile[1..self.len()].iter().all(|&y| y != 0)
    }

    /// True when every point of the profile lies in `[lo, hi]`.
    pub fn within(&self, lo: i64, hi: i64) -> bool {
        self.profile.iter().all(|&y| lo <= y && y <= hi)
    }

    pub fn classify(&self) -> PathClassification {
        let boundary = |s: Option<Step>| match s {
            None => Boundary::Empty,
            Some(Step::Up) => Boundary::Up,
            Some(Step::Down(_)) => Boundary::Down,
        };
        PathClassification {
            length: self.len(),
            final_ordinate: self.final_ordinate(),
            max_height: self.max_height(),
            min_height: self.min_height(),
            is_dap: self.is_dap(),
            is_gdap: self.is_gdap(),
            is_prime: self.is_prime(),
            starts_with: boundary(self.first()),
            ends_with: boundary(self.last()),
        }
    }

    /// Reverses the step order. Involutive.
    pub fn mirror(&self) -> LatticePath {
        let mut steps = self.steps.clone();
        steps.reverse();
        LatticePath::from_valid(steps)
    }

    /// Lowering of a prime path: `U beta U D_k` becomes `beta U D_{k-1}`.
    pub fn flat(&self) -> Result<LatticePath, PathError> {
        if !self.is_prime() {
            return Err(PathError::NotPrime);
        }
        let n = self.len();
        let mut steps = self.steps[1..n].to_vec();
        if let Some(Step::Down(k)) = steps.last_mut() {
            *k -= 1;
        }
        Ok(LatticePath::from_valid(steps))
    }

    /// Elevation of a DAP: the unique prime path whose lowering is `self`.
    pub fn sharp(&self) -> Result<LatticePath, PathError> {
        if !self.is_dap() {
            return Err(PathError::NotDap);
        }
        let mut steps = Vec::with_capacity(self.len() + 1);
        steps.push(Step::Up);
        steps.extend_from_slice(&self.steps);
        match steps.last_mut() {
            Some(Step::Down(k)) => *k += 1,
            _ => unreachable!("a DAP ends with a down-step"),
        }
        Ok(LatticePath::from_valid(steps))
    }

    /// Fuses the final `D_i` of `self` with the leading `D_j` of `other` into
    /// a single `D_{i+j}`.
    pub fn merge(&self, other: &LatticePath) -> Result<LatticePath, PathError> {
        let (Some(Step::Down(i)), Some(Step::Down(j))) = (self.last(), other.first()) else {
            return Err(PathError::BadEnds);
        };
        let mut steps = Vec::with_capacity(self.len() + other.len() - 1);
        steps.extend_from_slice(&self.steps[..self.len() - 1]);
        steps.push(Step::Down(i + j));
        steps.extend_from_slice(&other.steps[1..]);
        Ok(LatticePath::from_valid(steps))
    }

    pub fn concat(&self, other: &LatticePath) -> Result<LatticePath, PathError> {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        LatticePath::new(steps)
    }

    pub fn slice(&self, from: usize, to: usize) -> LatticePath {
        LatticePath::from_valid(self.steps[from..to].to_vec())
    }

    /// Splits a DAP at its second-to-last return to the x-axis.
    pub fn first_return_decompose(&self) -> Result<Decomposition, PathError> {
        if !self.is_dap() {
            return Err(PathError::NotDap);
        }
        let n = self.len();
        let split = (1..n).rev().find(|&i| self.profile[i] == 0).unwrap_or(0);
        let tail = self.slice(split, n);
        let is_atom = tail.steps == [Step::Up, Step::Down(1)];
        Ok(match (split, is_atom) {
            (0, true) => Decomposition::Atom,
            (0, false) => Decomposition::Prime(tail),
            (_, true) => Decomposition::ThenAtom(self.slice(0, split)),
            (_, false) => Decomposition::ThenPrime(self.slice(0, split), tail),
        })
    }
}

/// The four shapes of a DAP split at its second-to-last return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    /// The path is `UD`.
    Atom,
    /// `beta UD` with `beta` a DAP.
    ThenAtom(LatticePath),
    /// The path itself is prime.
    Prime(LatticePath),
    /// `beta gamma` with `beta` a DAP and `gamma` prime.
    ThenPrime(LatticePath, LatticePath),
}

impl Decomposition {
    pub fn reassemble(&self) -> LatticePath {
        let atom = LatticePath::from_valid(vec![Step::Up, Step::Down(1)]);
        match self {
            Decomposition::Atom => atom,
            Decomposition::ThenAtom(b) => {
                b.concat(&atom).expect("DAP ends with down, atom starts up")
            }
            Decomposition::Prime(p) => p.clone(),
            Decomposition::ThenPrime(b, g) => b.concat(g).expect("prime starts with up"),
        }
    }

    pub fn part_lengths(&self) -> Vec<usize> {
        match self {
            Decomposition::Atom => vec![2],
            Decomposition::ThenAtom(b) => vec![b.len(), 2],
            Decomposition::Prime(p) => vec![p.len()],
            Decomposition::ThenPrime(b, g) => vec![b.len(), g.len()],
        }
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return f.write_str("ε");
        }
        for s in &self.steps {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = PathError;

    /// Parses concatenated `U` / `Dk` tokens; a bare `D` is `D1`. The empty
    /// string and `ε` both denote the empty path.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        if text == "ε" {
            return Ok(LatticePath::empty());
        }
        let bytes = text.as_bytes();
        let mut steps = Vec::new();
        let mut pos = 0;
        while pos < bytes.len() {
            match bytes[pos] {
                b'U' => {
                    steps.push(Step::Up);
                    pos += 1;
                }
                b'D' => {
                    let start = pos + 1;
                    let mut end = start;
                    while end < bytes.len() && bytes[end].is_ascii_digit() {
                        end += 1;
                    }
                    let k = if end == start {
                        1
                    } else {
                        text[start..end]
                            .parse::<u32>()
                            .map_err(|e| PathError::MalformedToken {
                                pos,
                                msg: e.to_string(),
                            })?
                    };
                    if k == 0 {
                        return Err(PathError::ZeroDown);
                    }
                    steps.push(Step::Down(k));
                    pos = end;
                }
                other => {
                    return Err(PathError::MalformedToken {
                        pos,
                        msg: format!("unexpected character {:?}", other as char),
                    })
                }
            }
        }
        LatticePath::new(steps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    #[test]
    fn parses_tokens() {
        assert_eq!(p("UUD2").steps(), &[Step::Up, Step::Up, Step::Down(2)]);
        assert_eq!(
            p("UDUD").steps(),
            &[Step::Up, Step::Down(1), Step::Up, Step::Down(1)]
        );
        assert_eq!(p("UD1").steps(), p("UD").steps());
        assert!(p("").is_empty());
        assert!(p("ε").is_empty());
        assert_eq!(p("UUD12").final_ordinate(), -10);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            "UD2D3".parse::<LatticePath>(),
            Err(PathError::ConsecutiveDowns { index: 2 })
        );
        assert!(matches!(
            "UXD".parse::<LatticePath>(),
            Err(PathError::MalformedToken { pos: 1, .. })
        ));
        assert_eq!("UD0".parse::<LatticePath>(), Err(PathError::ZeroDown));
    }

    #[test]
    fn display_round_trips() {
        for s in ["UUD2UUDUD2UDUDUUD2", "D3UUU", "ε", "UD"] {
            assert_eq!(p(s).to_string(), s);
        }
    }

    #[test]
    fn classify_sample_path() {
        let c = p("UUDUD2UUUD2UD2UUD2").classify();
        assert!(c.is_dap);
        assert!(c.is_gdap);
        assert!(!c.is_prime);
        assert_eq!(c.length, 14);
        assert_eq!(c.max_height, 3);
        assert_eq!(c.min_height, 0);
    }

    #[test]
    fn classify_small_cases() {
        let ud = p("UD").classify();
        assert!(ud.is_dap && !ud.is_prime);

        let c = p("UUD2UUDUD4").classify();
        assert_eq!(c.final_ordinate, -2);
        assert!(!c.is_gdap);
        assert!(!c.is_dap);

        let e = LatticePath::empty().classify();
        assert!(e.is_gdap && !e.is_dap && !e.is_prime);
        assert_eq!(e.starts_with, Boundary::Empty);
        assert_eq!(e.ends_with, Boundary::Empty);

        assert!(p("UUD2").is_prime());
        assert!(!p("UUD2UD").is_prime());
        assert!(p("UUDUUD3").is_prime());
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(p("UUUD2UD2").mirror(), p("D2UD2UUU"));
        assert_eq!(p("UUUD3").mirror(), p("D3UUU"));
        assert_eq!(LatticePath::empty().mirror(), LatticePath::empty());
    }

    #[test]
    fn flat_and_sharp() {
        assert_eq!(p("UUDUUD3").flat().unwrap(), p("UDUUD2"));
        assert_eq!(p("UUD2").flat().unwrap(), p("UD"));
        assert_eq!(p("UDUD").flat(), Err(PathError::NotPrime));
        assert_eq!(p("UDUUD2").sharp().unwrap(), p("UUDUUD3"));
        assert_eq!(p("UD").sharp().unwrap(), p("UUD2"));
        assert_eq!(LatticePath::empty().sharp(), Err(PathError::NotDap));
    }

    #[test]
    fn merge_examples() {
        assert_eq!(p("UD").merge(&p("DU")).unwrap(), p("UD2U"));
        let m = p("UUD2").merge(&p("D2UUUD3")).unwrap();
        assert_eq!(m, p("UUD4UUUD3"));
        assert_eq!(m.final_ordinate(), -2);
        assert_eq!(p("UDU").merge(&p("DU")), Err(PathError::BadEnds));
        assert_eq!(p("UD").merge(&p("UD")), Err(PathError::BadEnds));
    }

    #[test]
    fn decompositions() {
        assert_eq!(
            p("UD").first_return_decompose().unwrap(),
            Decomposition::Atom
        );
        assert_eq!(
            p("UDUD").first_return_decompose().unwrap(),
            Decomposition::ThenAtom(p("UD"))
        );
        assert_eq!(
            p("UUD2UUDUD2").first_return_decompose().unwrap(),
            Decomposition::ThenPrime(p("UUD2"), p("UUDUD2"))
        );
        assert_eq!(
            p("UUD2UUDUD3").first_return_decompose(),
            Err(PathError::NotDap)
        );
        assert_eq!(
            p("UUDUD2").first_return_decompose().unwrap(),
            Decomposition::Prime(p("UUDUD2"))
        );
        assert_eq!(p("DU").first_return_decompose(), Err(PathError::NotDap));
    }
}
