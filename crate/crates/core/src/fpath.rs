//! F-paths: lattice paths from the origin with steps `(0,1)` or `(a,b)` with
//! `a >= 1, b <= 1`, never crossing below the diagonal `x = y`.
//!
//! Every other family in this crate is mapped onto [`FPath`], so this module
//! also carries the shared statistic triple and the step classification used
//! by the refined counts.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{GuardExceeded, ParseError};

/// Default limit on `n` for exhaustive F-path generation.
pub const DEFAULT_GUARD: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum FPathError {
    /// Step `index` (1-based) is not in the step set.
    #[error("step {index} = ({dx},{dy}) is not an admissible step")]
    StepNotInF { index: usize, dx: i64, dy: i64 },
    /// The path goes below the diagonal after `index` steps.
    #[error("prefix of length {index} ends below the diagonal")]
    PrefixViolation { index: usize },
}

/// One step `(dx, dy)`.
///
/// Ordering is the canonical enumeration order: `(0,1)` first, then by `dx`
/// ascending and `dy` descending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FStep {
    dx: u32,
    dy: i32,
}

impl FStep {
    pub const NORTH: FStep = FStep { dx: 0, dy: 1 };

    pub fn new(dx: i64, dy: i64) -> Option<FStep> {
        let admissible = (dx == 0 && dy == 1) || (dx >= 1 && dy <= 1);
        if !admissible {
            return None;
        }
        Some(FStep {
            dx: u32::try_from(dx).ok()?,
            dy: i32::try_from(dy).ok()?,
        })
    }

    pub fn dx(self) -> u32 {
        self.dx
    }

    pub fn dy(self) -> i32 {
        self.dy
    }

    /// Change of `y - x` along the step.
    pub fn rise(self) -> i64 {
        self.dy as i64 - self.dx as i64
    }

    pub fn is_north(self) -> bool {
        self == FStep::NORTH
    }

    pub fn class(self) -> StepClass {
        match (self.dx, self.dy) {
            (0, _) => StepClass::North,
            (1, 1) => StepClass::UnitUp,
            (1, _) => StepClass::UnitFlat,
            (_, 1) => StepClass::LongUp,
            _ => StepClass::LongFlat,
        }
    }

    /// The step involution: fixes `(0,1)` and sends `(a,b)` to `(2-b, 2-a)`.
    pub fn involution(self) -> FStep {
        if self.is_north() {
            self
        } else {
            FStep {
                dx: (2 - self.dy) as u32,
                dy: 2 - self.dx as i32,
            }
        }
    }
}

impl Ord for FStep {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dx.cmp(&other.dx).then_with(|| other.dy.cmp(&self.dy))
    }
}

impl PartialOrd for FStep {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.dx, self.dy)
    }
}

/// The five step classes that partition the step set; every family
/// classifies its objects by the class of the last F-path step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StepClass {
    /// `(0,1)`
    North,
    /// `(1,1)`
    UnitUp,
    /// `(1,b)` with `b <= 0`
    UnitFlat,
    /// `(a,1)` with `a >= 2`
    LongUp,
    /// `(a,b)` with `a >= 2`, `b <= 0`
    LongFlat,
}

impl StepClass {
    pub const ALL: [StepClass; 5] = [
        StepClass::North,
        StepClass::UnitUp,
        StepClass::UnitFlat,
        StepClass::LongUp,
        StepClass::LongFlat,
    ];
}

/// The three statistics every family carries, normalized to the F-path
/// side: `height`, `north`, `aone`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
pub struct StatTriple {
    pub height: usize,
    pub north: usize,
    pub aone: usize,
}

impl StatTriple {
    pub fn new(height: usize, north: usize, aone: usize) -> Self {
        StatTriple {
            height,
            north,
            aone,
        }
    }
}

impl fmt::Display for StatTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.height, self.north, self.aone)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FPathStats {
    pub triple: StatTriple,
    /// Number of steps with `dy = 1`, north steps included.
    pub bone: usize,
}

/// A valid F-path. Ordering is lexicographic in the canonical step order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FPath {
    steps: Vec<FStep>,
}

impl FPath {
    pub fn empty() -> FPath {
        FPath::default()
    }

    /// Checks raw `(dx, dy)` pairs and returns the path they describe.
    pub fn validate(pairs: &[(i64, i64)]) -> Result<FPath, FPathError> {
        let mut steps = Vec::with_capacity(pairs.len());
        for (i, &(dx, dy)) in pairs.iter().enumerate() {
            let step = FStep::new(dx, dy).ok_or(FPathError::StepNotInF {
                index: i + 1,
                dx,
                dy,
            })?;
            steps.push(step);
        }
        FPath::from_steps(steps)
    }

    pub fn from_steps(steps: Vec<FStep>) -> Result<FPath, FPathError> {
        let mut h = 0i64;
        for (i, s) in steps.iter().enumerate() {
            h += s.rise();
            if h < 0 {
                return Err(FPathError::PrefixViolation { index: i + 1 });
            }
        }
        Ok(FPath { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<FStep>) -> FPath {
        debug_assert!(FPath::from_steps(steps.clone()).is_ok());
        FPath { steps }
    }

    pub fn steps(&self) -> &[FStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn last_step(&self) -> Option<FStep> {
        self.steps.last().copied()
    }

    pub fn height(&self) -> usize {
        self.steps.iter().map(|s| s.rise()).sum::<i64>() as usize
    }

    /// `y - x` after each prefix, starting with the empty prefix.
    pub fn prefix_heights(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0;
        out.push(h);
        for s in &self.steps {
            h += s.rise();
            out.push(h);
        }
        out
    }

    pub fn stats(&self) -> FPathStats {
        let north = self.steps.iter().filter(|s| s.is_north()).count();
        let aone = self.steps.iter().filter(|s| s.dx == 1).count();
        let bone = self.steps.iter().filter(|s| s.dy == 1).count();
        FPathStats {
            triple: StatTriple::new(self.height(), north, aone),
            bone,
        }
    }

    pub fn involution(&self) -> FPath {
        FPath {
            steps: self.steps.iter().map(|s| s.involution()).collect(),
        }
    }

    /// `self (0,1) other`
    pub fn direct_sum(&self, other: &FPath) -> FPath {
        let mut steps = Vec::with_capacity(self.len() + other.len() + 1);
        steps.extend_from_slice(&self.steps);
        steps.push(FStep::NORTH);
        steps.extend_from_slice(&other.steps);
        FPath { steps }
    }

    /// Splits a path of height `m` into the `m + 1` height-zero components
    /// `Q_1 (0,1) Q_2 ... (0,1) Q_{m+1}`.
    ///
    /// Scanning from the right, the separator for level `k` is the last step
    /// that starts strictly below `k`; it is necessarily a north step from
    /// `k - 1` to `k`.
    pub fn decompose(&self) -> Vec<FPath> {
        let heights = self.prefix_heights();
        let mut level = self.height() as i64;
        let mut end = self.len();
        let mut parts = Vec::with_capacity(level as usize + 1);
        while level > 0 {
            let t = (1..=end)
                .rev()
                .find(|&t| heights[t - 1] < level)
                .expect("a path of positive height crosses every lower level");
            debug_assert!(self.steps[t - 1].is_north() && heights[t - 1] == level - 1);
            parts.push(FPath {
                steps: self.steps[t..end].to_vec(),
            });
            end = t - 1;
            level -= 1;
        }
        parts.push(FPath {
            steps: self.steps[..end].to_vec(),
        });
        parts.reverse();
        parts
    }

    /// Left fold of [`FPath::direct_sum`]; `None` for an empty slice.
    pub fn compose(parts: &[FPath]) -> Option<FPath> {
        let (first, rest) = parts.split_first()?;
        Some(rest.iter().fold(first.clone(), |acc, p| acc.direct_sum(p)))
    }
}

/// All F-paths of length `n` in canonical order.
pub fn enumerate(n: usize) -> Result<Vec<FPath>, GuardExceeded> {
    enumerate_with_limit(n, DEFAULT_GUARD)
}

pub fn enumerate_with_limit(n: usize, limit: usize) -> Result<Vec<FPath>, GuardExceeded> {
    GuardExceeded::check(n, limit)?;
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    extend_paths(n, 0, &mut prefix, &mut out);
    Ok(out)
}

fn extend_paths(n: usize, height: i64, prefix: &mut Vec<FStep>, out: &mut Vec<FPath>) {
    if prefix.len() == n {
        out.push(FPath {
            steps: prefix.clone(),
        });
        return;
    }
    prefix.push(FStep::NORTH);
    extend_paths(n, height + 1, prefix, out);
    prefix.pop();
    // a - b <= height keeps the path on or above the diagonal
    for a in 1..=height + 1 {
        for b in (a - height..=1).rev() {
            prefix.push(FStep {
                dx: a as u32,
                dy: b as i32,
            });
            extend_paths(n, height + b - a, prefix, out);
            prefix.pop();
        }
    }
}

impl fmt::Display for FPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return f.write_str("-");
        }
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for FPath {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<FPath, ParseError> {
        if text == "-" {
            return Ok(FPath::empty());
        }
        if text.is_empty() {
            return Err(ParseError::new(
                0,
                "empty input; the empty path is written \"-\"",
            ));
        }
        let mut pairs = Vec::new();
        let mut offsets = Vec::new();
        let mut offset = 0;
        for token in text.split(' ') {
            if token.is_empty() {
                return Err(ParseError::new(offset, "expected a step \"dx,dy\""));
            }
            let (dx, dy) = token
                .split_once(',')
                .ok_or_else(|| ParseError::new(offset, "missing ',' in step"))?;
            let dx: i64 = parse_int(dx, offset)?;
            let dy: i64 = parse_int(dy, offset + dx_len(token))?;
            pairs.push((dx, dy));
            offsets.push(offset);
            offset += token.len() + 1;
        }
        FPath::validate(&pairs).map_err(|e| {
            let index = match e {
                FPathError::StepNotInF { index, .. } | FPathError::PrefixViolation { index } => {
                    index
                }
            };
            ParseError::new(offsets[index - 1], e.to_string())
        })
    }
}

fn dx_len(token: &str) -> usize {
    token.find(',').map_or(0, |i| i + 1)
}

fn parse_int(s: &str, offset: usize) -> Result<i64, ParseError> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::new(offset, format!("invalid integer {s:?}")));
    }
    s.parse()
        .map_err(|_| ParseError::new(offset, format!("integer out of range {s:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(pairs: &[(i64, i64)]) -> FPath {
        FPath::validate(pairs).unwrap()
    }

    /// The running example: 15 steps with four non-north steps.
    fn example_q() -> FPath {
        let mut pairs = vec![(0, 1); 15];
        pairs[6] = (3, -1);
        pairs[10] = (1, 1);
        pairs[11] = (2, 1);
        pairs[14] = (1, -1);
        path(&pairs)
    }

    #[test]
    fn validation() {
        assert_eq!(path(&[(0, 1), (1, 0)]).len(), 2);
        assert!(path(&[]).is_empty());
        assert_eq!(
            FPath::validate(&[(2, 1), (0, 1)]),
            Err(FPathError::PrefixViolation { index: 1 })
        );
        assert_eq!(
            FPath::validate(&[(0, 1), (0, 0)]),
            Err(FPathError::StepNotInF {
                index: 2,
                dx: 0,
                dy: 0
            })
        );
        assert!(matches!(
            FPath::validate(&[(1, 2)]),
            Err(FPathError::StepNotInF { index: 1, .. })
        ));
        assert!(matches!(
            FPath::validate(&[(-1, 1)]),
            Err(FPathError::StepNotInF { .. })
        ));
    }

    #[test]
    fn stats_examples() {
        let q4 = path(&[(0, 1), (1, 1)]);
        assert_eq!(
            q4.stats(),
            FPathStats {
                triple: StatTriple::new(1, 1, 1),
                bone: 2
            }
        );
        assert_eq!(FPath::empty().stats().triple, StatTriple::default());
        assert_eq!(FPath::empty().stats().bone, 0);
        assert_eq!(example_q().height(), 4);
    }

    #[test]
    fn involution_examples() {
        let q1 = path(&[(0, 1), (1, 0)]);
        assert_eq!(q1.involution(), path(&[(0, 1), (2, 1)]));
        let north3 = path(&[(0, 1); 3]);
        assert_eq!(north3.involution(), north3);
        let q3 = path(&[(1, 1), (1, 1)]);
        assert_eq!(q3.involution(), q3);
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(enumerate(0).unwrap(), vec![FPath::empty()]);
        let two = enumerate(2).unwrap();
        let expected = [
            path(&[(0, 1), (0, 1)]),
            path(&[(0, 1), (1, 1)]),
            path(&[(0, 1), (1, 0)]),
            path(&[(0, 1), (2, 1)]),
            path(&[(1, 1), (0, 1)]),
            path(&[(1, 1), (1, 1)]),
        ];
        assert_eq!(two, expected);
        assert_eq!(enumerate(3).unwrap().len(), 21);
        assert_eq!(
            enumerate(11),
            Err(GuardExceeded {
                n: 11,
                limit: DEFAULT_GUARD
            })
        );
        assert!(enumerate_with_limit(3, 2).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        for n in 0..=6 {
            let all = enumerate(n).unwrap();
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            for q in &all {
                assert_eq!(q.len(), n);
                assert!(FPath::from_steps(q.steps().to_vec()).is_ok());
            }
        }
    }

    #[test]
    fn direct_sum_examples() {
        let e = FPath::empty();
        assert_eq!(e.direct_sum(&e), path(&[(0, 1)]));
        let q3 = path(&[(1, 1), (1, 1)]);
        assert_eq!(q3.direct_sum(&e), path(&[(1, 1), (1, 1), (0, 1)]));
        let q1 = path(&[(0, 1), (1, 0)]);
        assert_eq!(e.direct_sum(&q1), path(&[(0, 1), (0, 1), (1, 0)]));
        assert_eq!(q3.direct_sum(&q1).height(), q3.height() + q1.height() + 1);
    }

    #[test]
    fn decomposition_examples() {
        let q6 = path(&[(0, 1), (0, 1)]);
        assert_eq!(q6.decompose(), vec![FPath::empty(); 3]);
        let q3 = path(&[(1, 1), (1, 1)]);
        assert_eq!(q3.decompose(), vec![q3.clone()]);

        let parts = example_q().decompose();
        assert_eq!(parts.len(), 5);
        assert!(parts[0].is_empty() && parts[1].is_empty() && parts[3].is_empty());
        assert_eq!(parts[2], path(&[(0, 1), (0, 1), (0, 1), (0, 1), (3, -1)]));
        assert_eq!(
            parts[4],
            path(&[(0, 1), (1, 1), (2, 1), (0, 1), (0, 1), (1, -1)])
        );
    }

    #[test]
    fn decompose_recompose_exhaustive() {
        for n in 0..=7 {
            for q in enumerate(n).unwrap() {
                let parts = q.decompose();
                assert_eq!(parts.len(), q.height() + 1);
                assert!(parts.iter().all(|p| p.height() == 0));
                assert_eq!(FPath::compose(&parts).unwrap(), q);
            }
        }
    }

    #[test]
    fn involution_relations_exhaustive() {
        for n in 0..=7 {
            let all = enumerate(n).unwrap();
            let mut images: Vec<FPath> = all.iter().map(|q| q.involution()).collect();
            images.sort();
            assert_eq!(images, all, "involution permutes F_{n}");
            for q in &all {
                let s = q.stats();
                let t = q.involution().stats();
                assert!(s.triple.height <= s.triple.north && s.triple.north <= s.bone);
                assert_eq!(q.involution().involution(), *q);
                assert_eq!(t.triple.height, s.triple.height);
                assert_eq!(t.triple.north, s.triple.north);
                assert_eq!(t.triple.aone, s.bone - s.triple.north);
                assert_eq!(t.bone, s.triple.aone + s.triple.north);
                assert_eq!(q.prefix_heights(), q.involution().prefix_heights());
            }
        }
    }

    #[test]
    fn text_form() {
        assert_eq!("-".parse::<FPath>().unwrap(), FPath::empty());
        assert_eq!(FPath::empty().to_string(), "-");
        let q1: FPath = "0,1 1,0".parse().unwrap();
        assert_eq!(q1, path(&[(0, 1), (1, 0)]));
        assert_eq!(q1.to_string(), "0,1 1,0");
        // well-formed text, but the second step drops below the diagonal
        let err = "0,1 3,-1".parse::<FPath>().unwrap_err();
        assert_eq!(err.offset, 4);
        assert_eq!("0,1 3,-1".parse::<FPath>().map_err(|e| e.offset), Err(4));
        assert_eq!("0,1 0,1 3,1".parse::<FPath>().unwrap().height(), 0);
        let err = "0,1  1,0".parse::<FPath>().unwrap_err();
        assert_eq!(err.offset, 4);
        let err = "0,1 x,0".parse::<FPath>().unwrap_err();
        assert_eq!(err.offset, 4);
        assert_eq!(
            example_q().to_string().parse::<FPath>().unwrap(),
            example_q()
        );
    }
}
