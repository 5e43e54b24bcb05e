//! Brute-force generators and counters for every path and composition family.
//!
//! These are the ground truth the generating functions and bijections are
//! checked against, so they work directly from the combinatorial definitions
//! and never touch the series machinery.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::composition::Composition;
use crate::path::{LatticePath, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Gdap,
    Dap,
    Prime,
    PrefixGdap,
    SpecialH,
    MotzkinAvoiding,
    CompositionAlt,
    CompositionAltOddEven,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    Up,
    Down,
}

impl StepKind {
    fn admits(self, step: Step) -> bool {
        matches!(
            (self, step),
            (StepKind::Up, Step::Up) | (StepKind::Down, Step::Down(_))
        )
    }
}

/// A family of objects plus optional window, endpoint and boundary-step
/// constraints. For the path families, `min_y`/`max_y` bound every point of
/// the profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: Family,
    pub min_y: Option<i64>,
    pub max_y: Option<i64>,
    pub end_ordinate: Option<i64>,
    pub end_step: Option<StepKind>,
    pub start_step: Option<StepKind>,
}

impl FamilySpec {
    pub fn new(kind: Family) -> Self {
        FamilySpec {
            kind,
            min_y: None,
            max_y: None,
            end_ordinate: None,
            end_step: None,
            start_step: None,
        }
    }

    pub fn gdap() -> Self {
        Self::new(Family::Gdap)
    }

    pub fn prefix() -> Self {
        Self::new(Family::PrefixGdap)
    }

    pub fn min_y(mut self, m: i64) -> Self {
        self.min_y = Some(m);
        self
    }

    pub fn max_y(mut self, m: i64) -> Self {
        self.max_y = Some(m);
        self
    }

    pub fn bounded(self, lo: i64, hi: i64) -> Self {
        self.min_y(lo).max_y(hi)
    }

    pub fn end_ordinate(mut self, k: i64) -> Self {
        self.end_ordinate = Some(k);
        self
    }

    pub fn end_step(mut self, s: StepKind) -> Self {
        self.end_step = Some(s);
        self
    }

    pub fn start_step(mut self, s: StepKind) -> Self {
        self.start_step = Some(s);
        self
    }

    fn is_path_family(&self) -> bool {
        matches!(
            self.kind,
            Family::Gdap | Family::Dap | Family::Prime | Family::PrefixGdap | Family::SpecialH
        )
    }

    /// Whether `path` (of any length) belongs to the family.
    pub fn contains(&self, path: &LatticePath) -> bool {
        let c = path.classify();
        let kind_ok = match self.kind {
            Family::Gdap => c.is_gdap,
            Family::Dap => c.is_dap,
            Family::Prime => c.is_prime,
            Family::PrefixGdap => true,
            Family::SpecialH => is_in_h(path),
            _ => return false,
        };
        kind_ok
            && self.min_y.is_none_or(|m| c.min_height >= m)
            && self.max_y.is_none_or(|m| c.max_height <= m)
            && self.end_ordinate.is_none_or(|e| c.final_ordinate == e)
            && self
                .start_step
                .is_none_or(|s| path.first().is_some_and(|f| s.admits(f)))
            && self
                .end_step
                .is_none_or(|s| path.last().is_some_and(|l| s.admits(l)))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("infeasible family specification: {0}")]
    InfeasibleSpec(String),
    #[error("{0:?} is not a family of lattice paths")]
    NotAPathFamily(Family),
}

/// Step-by-step walker for the U/D_k families, with memoised counting keyed
/// on (position, ordinate, last step was down).
struct Walk {
    n: usize,
    lo: Option<i64>,
    hi: Option<i64>,
    target: Option<i64>,
    start: Option<StepKind>,
    end: Option<StepKind>,
    prime: bool,
    nonempty: bool,
    memo: HashMap<(usize, i64, bool), u128>,
}

impl Walk {
    fn new(n: usize, spec: &FamilySpec) -> Result<Self, OracleError> {
        let infeasible = |msg: &str| Err(OracleError::InfeasibleSpec(msg.to_string()));
        if spec.min_y.is_some_and(|m| m > 0) || spec.max_y.is_some_and(|m| m < 0) {
            return infeasible("the window must contain the starting ordinate 0");
        }
        if let Some(e) = spec.end_ordinate {
            if e > n as i64 {
                return infeasible("end ordinate exceeds the length");
            }
            if spec.min_y.is_some_and(|m| e < m) || spec.max_y.is_some_and(|m| e > m) {
                return infeasible("end ordinate outside the window");
            }
        }
        let (mut lo, mut target, prime) = (spec.min_y, spec.end_ordinate, false);
        let prime = match spec.kind {
            Family::Gdap => {
                if target.is_some_and(|e| e != 0) {
                    return infeasible("a GDAP ends on the x-axis");
                }
                target = Some(0);
                prime
            }
            Family::Dap | Family::Prime => {
                if target.is_some_and(|e| e != 0) {
                    return infeasible("a DAP ends on the x-axis");
                }
                target = Some(0);
                lo = Some(lo.map_or(0, |m| m.max(0)));
                spec.kind == Family::Prime
            }
            Family::PrefixGdap => {
                if lo.is_none() && target.is_none() && n > 0 {
                    return infeasible(
                        "prefixes with neither a lower bound nor an end ordinate form an infinite set",
                    );
                }
                prime
            }
            _ => return Err(OracleError::NotAPathFamily(spec.kind)),
        };
        Ok(Walk {
            n,
            lo,
            hi: spec.max_y,
            target,
            start: spec.start_step,
            end: spec.end_step,
            prime,
            nonempty: matches!(spec.kind, Family::Dap | Family::Prime),
            memo: HashMap::new(),
        })
    }

    /// Lowest ordinate allowed at profile index `index`.
    fn lower_at(&self, index: usize) -> Option<i64> {
        if self.prime && index >= 1 && index < self.n {
            Some(1)
        } else {
            self.lo
        }
    }

    fn step_allowed(&self, pos: usize, step: Step) -> bool {
        if pos == 0 && self.start.is_some_and(|s| !s.admits(step)) {
            return false;
        }
        if pos + 1 == self.n && self.end.is_some_and(|s| !s.admits(step)) {
            return false;
        }
        true
    }

    /// Candidate steps out of (pos, y), in lexicographic order.
    fn moves(&self, pos: usize, y: i64, last_down: bool) -> Vec<Step> {
        let mut out = Vec::new();
        let next_lower = self.lower_at(pos + 1);
        if self.hi.is_none_or(|h| y < h) && next_lower.is_none_or(|l| y + 1 >= l) {
            out.push(Step::Up);
        }
        if !last_down {
            let remaining_after = (self.n - pos - 1) as i64;
            let by_floor = next_lower.map(|l| y - l);
            let by_target = self.target.map(|e| y + remaining_after - e);
            let kmax = match (by_floor, by_target) {
                (Some(a), Some(b)) => a.min(b),
                (Some(a), None) | (None, Some(a)) => a,
                (None, None) => unreachable!("walker constructed without any lower bound"),
            };
            let kmin = if self.prime && pos + 1 == self.n {
                2
            } else {
                1
            };
            for k in kmin..=kmax.max(0) {
                out.push(Step::Down(k as u32));
            }
        }
        out.retain(|s| self.step_allowed(pos, *s));
        out
    }

    fn count_from(&mut self, pos: usize, y: i64, last_down: bool) -> u128 {
        if pos == self.n {
            return u128::from(self.target.is_none_or(|e| e == y));
        }
        if let Some(&c) = self.memo.get(&(pos, y, last_down)) {
            return c;
        }
        let total = self
            .moves(pos, y, last_down)
            .into_iter()
            .map(|s| self.count_from(pos + 1, y + s.delta(), s.is_down()))
            .sum();
        self.memo.insert((pos, y, last_down), total);
        total
    }

    fn count(&mut self) -> u128 {
        if self.n == 0 && (self.nonempty || self.start.is_some() || self.end.is_some()) {
            return 0;
        }
        self.count_from(0, 0, false)
    }

    fn enumerate(&mut self) -> Vec<LatticePath> {
        let mut out = Vec::new();
        if self.count() == 0 {
            return out;
        }
        let mut prefix = Vec::with_capacity(self.n);
        self.descend(0, 0, false, &mut prefix, &mut out);
        out
    }

    fn descend(
        &mut self,
        pos: usize,
        y: i64,
        last_down: bool,
        prefix: &mut Vec<Step>,
        out: &mut Vec<LatticePath>,
    ) {
        if pos == self.n {
            out.push(LatticePath::from_valid(prefix.clone()));
            return;
        }
        for s in self.moves(pos, y, last_down) {
            let ny = y + s.delta();
            if self.count_from(pos + 1, ny, s.is_down()) == 0 {
                continue;
            }
            prefix.push(s);
            self.descend(pos + 1, ny, s.is_down(), prefix, out);
            prefix.pop();
        }
    }
}

/// All length-`n` members of a path family, in lexicographic step order
/// (`U < D_1 < D_2 < ...`).
pub fn enum_paths(n: usize, spec: &FamilySpec) -> Result<Vec<LatticePath>, OracleError> {
    if spec.kind == Family::SpecialH {
        return Ok(enum_h(n).into_iter().filter(|p| spec.contains(p)).collect());
    }
    if !spec.is_path_family() {
        return Err(OracleError::NotAPathFamily(spec.kind));
    }
    Ok(Walk::new(n, spec)?.enumerate())
}

/// Size of the length-`n` slice of any family, without materialising paths
/// for the U/D_k families. For composition families `n` is the total.
pub fn count_paths(n: usize, spec: &FamilySpec) -> Result<u128, OracleError> {
    match spec.kind {
        Family::SpecialH => Ok(enum_paths(n, spec)?.len() as u128),
        Family::MotzkinAvoiding => Ok(enum_motzkin_avoiding(n).len() as u128),
        Family::CompositionAlt => Ok(enum_compositions(n, CompositionKind::Alt).len() as u128),
        Family::CompositionAltOddEven => {
            Ok(enum_compositions(n, CompositionKind::AltOddEven).len() as u128)
        }
        _ => Ok(Walk::new(n, spec)?.count()),
    }
}

/// Whether a DAP (or the empty path) belongs to the first-return class ℋ:
/// splitting at the first return gives `alpha beta` with `alpha` either `UD`
/// or a prime path whose lowering is in ℋ, `beta` in ℋ, and
/// `height(alpha) >= height(beta)`.
pub fn is_in_h(path: &LatticePath) -> bool {
    if path.is_empty() {
        return true;
    }
    if !path.is_dap() {
        return false;
    }
    let first_return = (1..=path.len()).find(|&i| path.profile()[i] == 0).unwrap();
    let alpha = path.slice(0, first_return);
    let beta = path.slice(first_return, path.len());
    let alpha_ok = if alpha.steps() == [Step::Up, Step::Down(1)] {
        true
    } else {
        match alpha.flat() {
            Ok(lowered) => is_in_h(&lowered),
            Err(_) => false,
        }
    };
    alpha_ok && is_in_h(&beta) && alpha.max_height() >= beta.max_height()
}

/// ℋ_0 ..= ℋ_n built from the recursive grammar, each slice sorted.
pub fn h_table(n: usize) -> Vec<Vec<LatticePath>> {
    let atom = LatticePath::from_valid(vec![Step::Up, Step::Down(1)]);
    let mut table: Vec<Vec<LatticePath>> = vec![vec![LatticePath::empty()]];
    for len in 1..=n {
        let mut slice = Vec::new();
        for alpha_len in 2..=len {
            let alphas: Vec<LatticePath> = if alpha_len == 2 {
                vec![atom.clone()]
            } else {
                table[alpha_len - 1]
                    .iter()
                    .map(|d| d.sharp().expect("nonempty members of ℋ are DAP"))
                    .collect()
            };
            for alpha in &alphas {
                let h = alpha.max_height();
                for beta in &table[len - alpha_len] {
                    if beta.max_height() <= h {
                        slice.push(alpha.concat(beta).expect("DAP ends with a down-step"));
                    }
                }
            }
        }
        slice.sort();
        table.push(slice);
    }
    table
}

pub fn enum_h(n: usize) -> Vec<LatticePath> {
    h_table(n).pop().unwrap()
}

/// ℋ_n by filtering every DAP of length `n` through [`is_in_h`].
pub fn enum_h_by_filter(n: usize) -> Vec<LatticePath> {
    if n == 0 {
        return vec![LatticePath::empty()];
    }
    enum_paths(n, &FamilySpec::new(Family::Dap))
        .expect("DAP spec is feasible")
        .into_iter()
        .filter(is_in_h)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MotzkinStep {
    Up,
    Down,
    Flat,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MotzkinPath(pub Vec<MotzkinStep>);

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for s in &self.0 {
            f.write_str(match s {
                MotzkinStep::Up => "U",
                MotzkinStep::Down => "D",
                MotzkinStep::Flat => "H",
            })?;
        }
        Ok(())
    }
}

/// Motzkin paths of length `n` with no factor `UH`, `HU` or `HH`.
pub fn enum_motzkin_avoiding(n: usize) -> Vec<MotzkinPath> {
    fn go(n: usize, h: usize, prefix: &mut Vec<MotzkinStep>, out: &mut Vec<MotzkinPath>) {
        let remaining = n - prefix.len();
        if remaining == 0 {
            if h == 0 {
                out.push(MotzkinPath(prefix.clone()));
            }
            return;
        }
        let last = prefix.last().copied();
        for step in [MotzkinStep::Up, MotzkinStep::Down, MotzkinStep::Flat] {
            let forbidden = matches!(
                (last, step),
                (Some(MotzkinStep::Up), MotzkinStep::Flat)
                    | (Some(MotzkinStep::Flat), MotzkinStep::Up)
                    | (Some(MotzkinStep::Flat), MotzkinStep::Flat)
            );
            if forbidden {
                continue;
            }
            let nh = match step {
                MotzkinStep::Up => h + 1,
                MotzkinStep::Down if h == 0 => continue,
                MotzkinStep::Down => h - 1,
                MotzkinStep::Flat => h,
            };
            if nh > remaining - 1 {
                continue;
            }
            prefix.push(step);
            go(n, nh, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompositionKind {
    /// Consecutive parts differ in parity.
    Alt,
    /// As `Alt`, with an odd first part and an even last part.
    AltOddEven,
}

/// Compositions of `n` of the given kind, in lexicographic order of parts.
pub fn enum_compositions(n: usize, kind: CompositionKind) -> Vec<Composition> {
    fn go(left: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in 1..=left {
            if prefix.last().is_some_and(|&p| (p + part) % 2 == 0) {
                continue;
            }
            prefix.push(part);
            go(left - part, prefix, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    go(n as u64, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|parts| Composition::new(parts).expect("parts are positive"))
        .filter(|c| match kind {
            CompositionKind::Alt => true,
            CompositionKind::AltOddEven => c.is_alternating_odd_even(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(paths: &[LatticePath]) -> Vec<String> {
        paths.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn small_gdap_slices() {
        assert_eq!(enum_paths(4, &FamilySpec::gdap()).unwrap().len(), 7);
        let g3_up = enum_paths(3, &FamilySpec::gdap().start_step(StepKind::Up)).unwrap();
        assert_eq!(strings(&g3_up), vec!["UUD2", "UD2U"]);
        assert_eq!(
            enum_paths(0, &FamilySpec::gdap()).unwrap(),
            vec![LatticePath::empty()]
        );
    }

    #[test]
    fn counts_from_printed_series() {
        assert_eq!(
            count_paths(5, &FamilySpec::gdap().bounded(0, 2)).unwrap(),
            3
        );
        assert_eq!(
            count_paths(7, &FamilySpec::gdap().bounded(-1, 1)).unwrap(),
            10
        );
        assert_eq!(count_paths(6, &FamilySpec::prefix().min_y(-1)).unwrap(), 82);
    }

    #[test]
    fn infeasible_specs() {
        assert!(matches!(
            enum_paths(3, &FamilySpec::prefix().end_ordinate(4)),
            Err(OracleError::InfeasibleSpec(_))
        ));
        assert!(matches!(
            count_paths(3, &FamilySpec::prefix()),
            Err(OracleError::InfeasibleSpec(_))
        ));
        assert!(matches!(
            count_paths(3, &FamilySpec::gdap().min_y(1)),
            Err(OracleError::InfeasibleSpec(_))
        ));
        assert_eq!(
            enum_paths(3, &FamilySpec::new(Family::MotzkinAvoiding)),
            Err(OracleError::NotAPathFamily(Family::MotzkinAvoiding))
        );
    }

    #[test]
    fn dap_and_prime_slices() {
        let dap: Vec<u128> = (0..=10)
            .map(|n| count_paths(n, &FamilySpec::new(Family::Dap)).unwrap())
            .collect();
        assert_eq!(dap, vec![0, 0, 1, 1, 2, 4, 8, 17, 37, 82, 185]);
        let primes: Vec<u128> = (0..=8)
            .map(|n| count_paths(n, &FamilySpec::new(Family::Prime)).unwrap())
            .collect();
        // P(x) = x A(x)
        assert_eq!(primes, vec![0, 0, 0, 1, 1, 2, 4, 8, 17]);
        let p3 = enum_paths(3, &FamilySpec::new(Family::Prime)).unwrap();
        assert_eq!(strings(&p3), vec!["UUD2"]);
    }

    #[test]
    fn h_listings() {
        assert_eq!(strings(&enum_h(4)), vec!["UUUD3", "UDUD"]);
        assert_eq!(strings(&enum_h(5)), vec!["UUUUD4", "UUDUD2", "UUD2UD"]);
        assert!(enum_h(1).is_empty());
        assert_eq!(strings(&enum_h(2)), vec!["UD"]);
        assert_eq!(strings(&enum_h(3)), vec!["UUD2"]);
        for n in 0..=10 {
            assert_eq!(enum_h(n), enum_h_by_filter(n), "n = {n}");
        }
    }

    #[test]
    fn motzkin_counts() {
        assert_eq!(enum_motzkin_avoiding(0), vec![MotzkinPath(vec![])]);
        assert_eq!(enum_motzkin_avoiding(6).len(), 6);
        assert_eq!(enum_motzkin_avoiding(12).len(), 273);
        let m3: Vec<String> = enum_motzkin_avoiding(3)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(m3, vec!["UDH"]);
    }

    #[test]
    fn composition_listings() {
        let show = |v: Vec<Composition>| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        assert_eq!(
            show(enum_compositions(3, CompositionKind::Alt)),
            vec!["1,2", "2,1", "3"]
        );
        assert_eq!(
            show(enum_compositions(5, CompositionKind::AltOddEven)),
            vec!["1,4", "3,2"]
        );
        assert_eq!(
            show(enum_compositions(3, CompositionKind::AltOddEven)),
            vec!["1,2"]
        );
        assert_eq!(
            enum_compositions(0, CompositionKind::Alt),
            vec![Composition::default()]
        );
    }
}
