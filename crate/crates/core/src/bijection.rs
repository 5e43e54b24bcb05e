//! Bijections between height-bounded grand paths and parity-restricted
//! compositions.
//!
//! * [`psi`]: grand paths of length `n` inside `[0, 2]` to compositions of
//!   `n - 2` with no two adjacent parts of equal parity.
//! * [`phi`]: grand paths of length `n` inside `[-1, 1]` to compositions of
//!   `n + 3` of that kind which also start odd and end even.
//!
//! Both rest on [`block_decompose`], which cuts a step sequence after every
//! up-step followed by another up-step or by a `D2`.

use thiserror::Error;

use crate::composition::Composition;
use crate::path::{LatticePath, Step};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BijectionError {
    #[error("path is not in the domain: {0}")]
    NotInFamily(String),
    #[error("composition has two adjacent parts of equal parity")]
    NotAlternating,
    #[error("composition must alternate in parity, start odd and end even")]
    NotInCPrime,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<LatticePath>,
    pub lengths: Vec<u64>,
}

impl BlockDecomposition {
    pub fn reassemble(&self) -> Vec<Step> {
        self.blocks
            .iter()
            .flat_map(|b| b.steps().iter().copied())
            .collect()
    }
}

fn split_steps(steps: &[Step]) -> BlockDecomposition {
    let mut blocks = Vec::new();
    let mut start = 0;
    for i in 0..steps.len() {
        let cut = steps[i] == Step::Up
            && matches!(steps.get(i + 1), Some(Step::Up) | Some(Step::Down(2)));
        if cut || i + 1 == steps.len() {
            blocks.push(LatticePath::from_valid(steps[start..=i].to_vec()));
            start = i + 1;
        }
    }
    let lengths = blocks.iter().map(|b| b.len() as u64).collect();
    BlockDecomposition { blocks, lengths }
}

/// Cuts after every `U` that is followed by `U` or `D2`.
pub fn block_decompose(path: &LatticePath) -> BlockDecomposition {
    split_steps(path.steps())
}

fn ud(k: u64) -> impl Iterator<Item = Step> {
    (0..k).flat_map(|_| [Step::Up, Step::Down(1)])
}

fn du(k: u64) -> impl Iterator<Item = Step> {
    (0..k).flat_map(|_| [Step::Down(1), Step::Up])
}

/// `psi`: strip the first and last step, then read off the block lengths.
pub fn psi(path: &LatticePath) -> Result<Composition, BijectionError> {
    if path.len() < 2 || !path.is_gdap() || !path.within(0, 2) {
        return Err(BijectionError::NotInFamily(format!(
            "{path} is not a grand path of length >= 2 inside [0, 2]"
        )));
    }
    let inner = &path.steps()[1..path.len() - 1];
    let parts = split_steps(inner).lengths;
    Ok(Composition::new(parts).expect("blocks are nonempty"))
}

pub fn psi_inv(c: &Composition) -> Result<LatticePath, BijectionError> {
    if !c.is_alternating() {
        return Err(BijectionError::NotAlternating);
    }
    let mut steps = vec![Step::Up];
    let mut height = 1;
    for (i, &b) in c.parts().iter().enumerate() {
        match (i, b % 2, height) {
            (0, 0, _) => steps.extend(du(b / 2)),
            (_, 1, 1) => {
                steps.extend(ud((b - 1) / 2));
                steps.push(Step::Up);
                height = 2;
            }
            (_, 0, 2) => {
                steps.extend([Step::Down(2), Step::Up]);
                steps.extend(du((b - 2) / 2));
                height = 1;
            }
            _ => unreachable!("parities alternate"),
        }
    }
    steps.push(Step::Down(height));
    Ok(LatticePath::from_valid(steps))
}

/// `phi`: block lengths of the whole path, reversed, then padded so the
/// result starts odd and ends even.
pub fn phi(path: &LatticePath) -> Result<Composition, BijectionError> {
    if !path.is_gdap() || !path.within(-1, 1) {
        return Err(BijectionError::NotInFamily(format!(
            "{path} is not a grand path inside [-1, 1]"
        )));
    }
    let n = path.len() as u64;
    let b = block_decompose(path).lengths;
    let parts = match b.len() {
        0 => vec![1, 2],
        1 => {
            if n % 2 == 1 {
                return Err(BijectionError::NotInFamily(format!(
                    "{path} is a single odd block"
                )));
            }
            match path.first() {
                Some(Step::Up) => vec![n + 1, 2],
                _ => vec![1, n + 2],
            }
        }
        r => {
            let mut l: Vec<u64> = b.iter().rev().copied().collect();
            if b[r - 2].is_multiple_of(2) {
                l[0] += 1;
            } else {
                l.insert(0, 1);
            }
            if b[0].is_multiple_of(2) {
                *l.last_mut().unwrap() += 2;
            } else {
                l.push(2);
            }
            l
        }
    };
    Ok(Composition::new(parts).expect("parts are positive"))
}

pub fn phi_inv(c: &Composition) -> Result<LatticePath, BijectionError> {
    if !c.is_alternating_odd_even() || c.total() < 3 {
        return Err(BijectionError::NotInCPrime);
    }
    let mut l = c.parts().to_vec();
    let lead_one = l[0] == 1;
    if lead_one {
        l.remove(0);
    } else {
        l[0] -= 1;
    }
    match l.last_mut() {
        Some(2) => {
            l.pop();
        }
        Some(last) => *last -= 2,
        None => return Err(BijectionError::NotInCPrime),
    }
    let b: Vec<u64> = l.into_iter().rev().collect();

    let mut steps = Vec::new();
    match b.len() {
        0 => {}
        1 => {
            if b[0] % 2 == 1 {
                return Err(BijectionError::NotInCPrime);
            }
            if lead_one {
                steps.extend(du(b[0] / 2));
            } else {
                steps.extend(ud(b[0] / 2));
            }
        }
        r => {
            let mut height = 0;
            for (i, &len) in b.iter().enumerate() {
                match (len % 2, height) {
                    (1, 0) => {
                        steps.extend(ud((len - 1) / 2));
                        steps.push(Step::Up);
                        height = 1;
                    }
                    (0, 0) if i == 0 => steps.extend(du(len / 2)),
                    (0, 0) if i == r - 1 => steps.extend(ud(len / 2)),
                    (0, 1) => {
                        steps.extend([Step::Down(2), Step::Up]);
                        steps.extend(du((len - 2) / 2));
                        height = 0;
                    }
                    _ => return Err(BijectionError::NotInCPrime),
                }
            }
        }
    }
    let path = LatticePath::new(steps).map_err(|_| BijectionError::NotInCPrime)?;
    if phi(&path).as_ref() != Ok(c) {
        return Err(BijectionError::NotInCPrime);
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn block_decomposition_example() {
        let inner = p("UD2UUDUD2UDUDUU");
        let d = block_decompose(&inner);
        let shown: Vec<String> = d.blocks.iter().map(|b| b.to_string()).collect();
        assert_eq!(shown, vec!["U", "D2U", "UDU", "D2UDUDU", "U"]);
        assert_eq!(d.lengths, vec![1, 2, 3, 6, 1]);
        assert_eq!(d.reassemble(), inner.steps());
        assert_eq!(block_decompose(&p("UDUD")).lengths, vec![4]);
        assert!(block_decompose(&LatticePath::empty()).blocks.is_empty());
    }

    #[test]
    fn psi_examples() {
        let a = p("UUD2UUDUD2UDUDUUD2");
        assert_eq!(psi(&a).unwrap(), c("1,2,3,6,1"));
        assert_eq!(psi_inv(&c("1,2,3,6,1")).unwrap(), a);
        assert_eq!(psi(&p("UD")).unwrap(), Composition::default());
        assert_eq!(psi_inv(&Composition::default()).unwrap(), p("UD"));
        assert_eq!(psi(&p("UDUD")).unwrap(), c("2"));
        assert_eq!(psi_inv(&c("2")).unwrap(), p("UDUD"));
        assert_eq!(psi_inv(&c("3")).unwrap(), p("UUDUD2"));
        assert_eq!(psi_inv(&c("2,2")), Err(BijectionError::NotAlternating));
        assert!(matches!(
            psi(&p("UUUD3")),
            Err(BijectionError::NotInFamily(_))
        ));
        assert!(matches!(
            psi(&LatticePath::empty()),
            Err(BijectionError::NotInFamily(_))
        ));
    }

    #[test]
    fn phi_examples() {
        let a = p("UD2UUDUD2UDUDUUD");
        assert_eq!(phi(&a).unwrap(), c("3,6,3,2,1,2"));
        assert_eq!(phi_inv(&c("3,6,3,2,1,2")).unwrap(), a);
        assert_eq!(phi(&LatticePath::empty()).unwrap(), c("1,2"));
        assert_eq!(phi_inv(&c("1,2")).unwrap(), LatticePath::empty());
        assert_eq!(phi(&p("UDUD")).unwrap(), c("5,2"));
        assert_eq!(phi(&p("DUDU")).unwrap(), c("1,6"));
        assert_eq!(phi_inv(&c("2,3")), Err(BijectionError::NotInCPrime));
        assert!(matches!(
            phi(&p("UUD2")),
            Err(BijectionError::NotInFamily(_))
        ));
    }
}
