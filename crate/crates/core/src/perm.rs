//! Permutations avoiding 2341, 2431 and 3241.
//!
//! Positions are 1-based in the documentation and in [`ShapeData`]; a value
//! 0 at position 0 is implied wherever a prefix maximum is taken.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::error::{GuardExceeded, ParseError};
use crate::fpath::{FPath, FStep, StatTriple};

/// Largest permutation length produced by [`enumerate`].
pub const DEFAULT_GUARD: usize = 11;

pub const PATTERNS: [[usize; 4]; 3] = [[2, 3, 4, 1], [2, 4, 3, 1], [3, 2, 4, 1]];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("not a rearrangement of 1..{0}")]
    NotPermutation(usize),
    #[error("contains the pattern {0:?}")]
    NotAvoider([usize; 4]),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Permutation, PermError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    /// Like [`Permutation::new`] but also rejects the three patterns.
    pub fn avoider(values: Vec<usize>) -> Result<Permutation, PermError> {
        let p = Permutation::new(values)?;
        for pattern in PATTERNS {
            if p.contains(&pattern) {
                return Err(PermError::NotAvoider(pattern));
            }
        }
        Ok(p)
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at 1-based position `i`, with 0 at position 0.
    fn at(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.values[i - 1]
        }
    }

    fn position_of(&self, v: usize) -> usize {
        if v == 0 {
            return 0;
        }
        self.values.iter().position(|&u| u == v).unwrap() + 1
    }

    /// Whether some subsequence is order-isomorphic to `pattern`.
    pub fn contains(&self, pattern: &[usize]) -> bool {
        fn extend(
            text: &[usize],
            pattern: &[usize],
            start: usize,
            chosen: &mut Vec<usize>,
        ) -> bool {
            let k = chosen.len();
            if k == pattern.len() {
                return true;
            }
            // leave room for the rest of the pattern
            let room = pattern.len() - k;
            for i in start..=text.len().saturating_sub(room) {
                let v = text[i];
                let consistent = chosen
                    .iter()
                    .zip(pattern)
                    .all(|(&u, &p)| (u < v) == (p < pattern[k]));
                if consistent {
                    chosen.push(v);
                    if extend(text, pattern, i + 1, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        pattern.len() <= self.len() && extend(&self.values, pattern, 0, &mut Vec::new())
    }

    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let n = self.len();
        let mut values = self.values.clone();
        values.extend(other.values.iter().map(|v| v + n));
        Permutation { values }
    }

    /// Maximal factorisation into indecomposable blocks, each reduced.
    pub fn blocks(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut start = 0;
        let mut max = 0;
        for (i, &v) in self.values.iter().enumerate() {
            max = max.max(v);
            if max == i + 1 {
                out.push(Permutation {
                    values: self.values[start..=i].iter().map(|u| u - start).collect(),
                });
                start = i + 1;
            }
        }
        out
    }

    pub fn block_count(&self) -> usize {
        let mut max = 0;
        let mut count = 0;
        for (i, &v) in self.values.iter().enumerate() {
            max = max.max(v);
            if max == i + 1 {
                count += 1;
            }
        }
        count
    }

    pub fn asc(&self) -> usize {
        self.values.windows(2).filter(|w| w[0] < w[1]).count()
    }

    /// Positions `i` such that any smaller value before `i` is below any
    /// smaller value after `i`. Checked literally.
    pub fn crit(&self) -> usize {
        let v = &self.values;
        (0..v.len())
            .filter(|&i| {
                (0..i).all(|j| v[j] > v[i] || (i + 1..v.len()).all(|k| v[k] > v[i] || v[j] < v[k]))
            })
            .count()
    }

    pub fn stats(&self) -> StatTriple {
        let asc = self.asc();
        StatTriple::new(self.block_count() - 1, asc, self.crit() - asc - 1)
    }

    pub fn shape(&self) -> ShapeData {
        let n = self.len() - 1;
        let x = self.position_of(n + 1);
        let z = (0..x).map(|i| self.at(i)).max().unwrap();
        let y = self.position_of(z);
        let w = (x..=n + 1).map(|i| self.at(i)).min().unwrap();
        let case = match (z == n, z < w) {
            (true, true) => ShapeCase::ZEqLt,
            (false, true) => ShapeCase::ZLtLt,
            (true, false) => ShapeCase::ZEqGt,
            (false, false) => ShapeCase::ZLtGt,
        };
        ShapeData { x, y, z, w, case }
    }

    /// Removes the last entry, whose reduced suffix step is returned
    /// alongside.
    fn reduce(&self) -> (Permutation, FStep) {
        let n = self.len() - 1;
        let s = self.shape();
        let (x, y, z) = (s.x, s.y, s.z);
        match s.case {
            ShapeCase::ZEqLt => (
                Permutation {
                    values: self.values[..n].to_vec(),
                },
                FStep::NORTH,
            ),
            ShapeCase::ZLtLt => {
                let mut values = self.values.clone();
                values.remove(x - 1);
                let hat = Permutation { values };
                let tau = hat.segment(x, n);
                (hat, step(1, 2 - tau.block_count() as i64))
            }
            ShapeCase::ZEqGt | ShapeCase::ZLtGt => {
                let mut values = Vec::with_capacity(n);
                for i in 1..x {
                    values.push(if i == y { x - 1 } else { self.at(i) });
                }
                for i in x..=n {
                    let v = self.at(i + 1);
                    values.push(if i <= z { v + 1 } else { v });
                }
                let hat = Permutation { values };
                let omega = hat.segment(x, z.min(n)).block_count() as i64;
                let tau = if z < n {
                    hat.segment(z + 1, n).block_count() as i64
                } else {
                    0
                };
                (hat, step(1 + omega, 1 - tau))
            }
        }
    }

    /// Entries at 1-based positions `from..=to`, reduced.
    fn segment(&self, from: usize, to: usize) -> Permutation {
        let part = &self.values[from - 1..to];
        let min = part.iter().copied().min().unwrap_or(1);
        Permutation {
            values: part.iter().map(|v| v + 1 - min).collect(),
        }
    }

    /// The F-path of a nonempty avoider.
    pub fn to_fpath(&self) -> FPath {
        assert!(!self.is_empty(), "the empty permutation has no image");
        let mut steps = Vec::with_capacity(self.len() - 1);
        let mut p = self.clone();
        while p.len() > 1 {
            let (hat, s) = p.reduce();
            steps.push(s);
            p = hat;
        }
        steps.reverse();
        FPath::from_steps_unchecked(steps)
    }

    pub fn from_fpath(q: &FPath) -> Permutation {
        let mut p = Permutation::identity(1);
        for s in q.steps() {
            p = p.extend_by(*s);
        }
        p
    }

    fn extend_by(&self, s: FStep) -> Permutation {
        let n = self.len();
        if s.is_north() {
            return self.direct_sum(&Permutation::identity(1));
        }
        let (a, b) = (s.dx() as usize, s.dy() as i64);
        let ends = self.block_ends();
        let c = ends.len();
        // length of the leading part that keeps the given number of trailing blocks
        let keep = |trailing: usize| {
            if trailing == c {
                0
            } else {
                ends[c - trailing - 1]
            }
        };
        if a == 1 {
            let j = (1 - b) as usize;
            let sigma = keep(j + 1);
            let mut values = self.values.clone();
            values.insert(sigma, n + 1);
            return Permutation { values };
        }
        let k = a - 2;
        let tau_blocks = if b == 1 { 0 } else { (1 - b) as usize };
        let sigma = keep(tau_blocks + k + 1);
        let x = sigma + 1;
        let z = if b == 1 { n } else { keep(tau_blocks) };
        let y = self.position_of(x - 1);
        let mut values = Vec::with_capacity(n + 1);
        for i in 1..x {
            values.push(if i == y { z } else { self.at(i) });
        }
        values.push(n + 1);
        for i in x + 1..=n + 1 {
            let v = self.at(i - 1);
            values.push(if i <= z + 1 { v - 1 } else { v });
        }
        Permutation { values }
    }

    /// Prefix lengths at which blocks end.
    fn block_ends(&self) -> Vec<usize> {
        let mut max = 0;
        let mut out = Vec::new();
        for (i, &v) in self.values.iter().enumerate() {
            max = max.max(v);
            if max == i + 1 {
                out.push(i + 1);
            }
        }
        out
    }
}

fn step(dx: i64, dy: i64) -> FStep {
    FStep::new(dx, dy).expect("constructed step lies in the step set")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeCase {
    /// `z = n`, `z < w`
    ZEqLt,
    /// `z < n`, `z < w`
    ZLtLt,
    /// `z = n`, `z > w`
    ZEqGt,
    /// `z < n`, `z > w`
    ZLtGt,
}

/// For a permutation of length `n+1`: `x` is the position of `n+1`, `z` the
/// largest value before it (0 if none) at position `y`, and `w` the smallest
/// value from position `x` on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShapeData {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub w: usize,
    pub case: ShapeCase,
}

impl ShapeData {
    /// Checks the position bounds and the value-set equalities that every
    /// avoider satisfies in its case.
    pub fn structure_holds(&self, p: &Permutation) -> bool {
        let n = p.len() - 1;
        let ShapeData { x, y, z, w, case } = *self;
        let set = |from: usize, to: usize, skip: usize| {
            let mut v: Vec<usize> = (from..=to)
                .filter(|&i| i != skip)
                .map(|i| p.at(i))
                .collect();
            v.sort_unstable();
            v
        };
        let range = |from: usize, end: usize| (from..end).collect::<Vec<_>>();
        if !(x - 1 <= z && z <= n && x - 1 <= w && w <= x) {
            return false;
        }
        match case {
            ShapeCase::ZEqLt => x == n + 1 && w == n + 1 && set(1, n, y) == range(1, n),
            ShapeCase::ZLtLt => {
                (1..=n).contains(&x)
                    && z == x - 1
                    && w == x
                    && set(1, x - 1, y) == range(1, x - 1)
                    && set(x + 1, n + 1, 0) == range(x, n + 1)
            }
            ShapeCase::ZEqGt => {
                (2..=n).contains(&x)
                    && w == x - 1
                    && set(1, x - 1, y) == range(1, x - 1)
                    && set(x + 1, n + 1, 0) == range(x - 1, n)
            }
            ShapeCase::ZLtGt => {
                x >= 2
                    && x < n
                    && x - 1 < z
                    && z < n
                    && w == x - 1
                    && set(1, x - 1, y) == range(1, x - 1)
                    && set(x + 1, z + 1, 0) == range(x - 1, z)
                    && set(z + 2, n + 1, 0) == range(z + 1, n + 1)
            }
        }
    }
}

/// All avoiders of length `n` in lexicographic order.
pub fn enumerate(n: usize) -> Result<Vec<Permutation>, GuardExceeded> {
    enumerate_with_limit(n, DEFAULT_GUARD)
}

pub fn enumerate_with_limit(n: usize, limit: usize) -> Result<Vec<Permutation>, GuardExceeded> {
    GuardExceeded::check(n, limit)?;
    let mut out = Vec::new();
    let mut used = vec![false; n + 1];
    extend_perm(n, &mut Vec::with_capacity(n), &mut used, &mut out);
    Ok(out)
}

// Each forbidden pattern ends in its smallest entry, so a new last entry `v`
// completes an occurrence exactly when the earlier entries above `v` contain
// 123, 132 or 213.
fn extend_perm(n: usize, prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
    if prefix.len() == n {
        out.push(Permutation {
            values: prefix.clone(),
        });
        return;
    }
    for v in 1..=n {
        if used[v] {
            continue;
        }
        let above: Vec<usize> = prefix.iter().copied().filter(|&u| u > v).collect();
        if has_bad_triple(&above) {
            continue;
        }
        used[v] = true;
        prefix.push(v);
        extend_perm(n, prefix, used, out);
        prefix.pop();
        used[v] = false;
    }
}

/// Whether some triple is not one of 321, 312, 231.
fn has_bad_triple(s: &[usize]) -> bool {
    let len = s.len();
    for i in 0..len {
        for j in i + 1..len {
            for k in j + 1..len {
                let (a, b, c) = (s[i], s[j], s[k]);
                let first_max = a > b && a > c;
                let is_231 = b > a && a > c;
                if !first_max && !is_231 {
                    return true;
                }
            }
        }
    }
    false
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return f.write_str("-");
        }
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = ParseError;

    /// Parses space-separated one-line notation and checks avoidance.
    fn from_str(text: &str) -> Result<Permutation, ParseError> {
        let mut values = Vec::new();
        let mut offset = 0;
        for token in text.split(' ') {
            if token.is_empty() {
                return Err(ParseError::new(offset, "expected a positive integer"));
            }
            let v = token.parse::<usize>().map_err(|_| {
                ParseError::new(offset, format!("{token:?} is not a positive integer"))
            })?;
            values.push(v);
            offset += token.len() + 1;
        }
        Permutation::avoider(values).map_err(|e| ParseError::new(0, e.to_string()))
    }
}
