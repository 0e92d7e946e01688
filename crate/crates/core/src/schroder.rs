//! Schröder paths without triple descents.
//!
//! A word over `u = (1,1)`, `d = (1,-1)`, `h = (2,0)` that stays weakly above
//! the axis, returns to it, and never contains `ddd`. Letter indices in
//! errors are 0-based.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::error::{GuardExceeded, ParseError};
use crate::fpath::{FPath, FStep, StatTriple, StepClass};

pub const DEFAULT_GUARD: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    U,
    D,
    H,
}

impl Letter {
    fn rise(self) -> i64 {
        match self {
            Letter::U => 1,
            Letter::D => -1,
            Letter::H => 0,
        }
    }

    fn width(self) -> usize {
        match self {
            Letter::H => 2,
            _ => 1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::U => 'u',
            Letter::D => 'd',
            Letter::H => 'h',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SchroderError {
    #[error("letter {0} goes below the axis")]
    BelowAxis(usize),
    #[error("path does not end on the axis")]
    NotClosed,
    #[error("triple descent starting at letter {0}")]
    TripleDescent(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SchroderWord {
    letters: Vec<Letter>,
}

impl SchroderWord {
    pub fn validate(letters: Vec<Letter>) -> Result<SchroderWord, SchroderError> {
        let mut height = 0i64;
        let mut descents = 0;
        for (i, &l) in letters.iter().enumerate() {
            height += l.rise();
            if height < 0 {
                return Err(SchroderError::BelowAxis(i));
            }
            descents = if l == Letter::D { descents + 1 } else { 0 };
            if descents == 3 {
                return Err(SchroderError::TripleDescent(i - 2));
            }
        }
        if height != 0 {
            return Err(SchroderError::NotClosed);
        }
        Ok(SchroderWord { letters })
    }

    pub fn empty() -> SchroderWord {
        SchroderWord::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn semilength(&self) -> usize {
        self.letters.iter().map(|l| l.width()).sum::<usize>() / 2
    }

    /// Number of horizontal steps on the axis.
    pub fn comp(&self) -> usize {
        comp(&self.letters)
    }

    /// Horizontal steps plus `dd` factors.
    pub fn hdd(&self) -> usize {
        let h = self.letters.iter().filter(|&&l| l == Letter::H).count();
        h + count_factor(&self.letters, &[Letter::D, Letter::D])
    }

    pub fn peak(&self) -> usize {
        count_factor(&self.letters, &[Letter::U, Letter::D])
    }

    pub fn stats(&self) -> StatTriple {
        StatTriple::new(self.comp(), self.hdd(), self.peak())
    }

    /// Which of the five suffix classes `h, ud, hd, udd, hdd` the word ends
    /// in, named by the F-path step class it corresponds to.
    pub fn suffix_class(&self) -> Option<StepClass> {
        use Letter::*;
        let w = &self.letters;
        let n = w.len();
        match w.last()? {
            H => Some(StepClass::North),
            U => unreachable!("a closed path cannot end with an up step"),
            D => Some(match (w[n - 2], n.checked_sub(3).map(|i| w[i])) {
                (U, _) => StepClass::UnitUp,
                (H, _) => StepClass::LongUp,
                (D, Some(U)) => StepClass::UnitFlat,
                (D, Some(H)) => StepClass::LongFlat,
                _ => unreachable!("triple descents are excluded"),
            }),
        }
    }

    /// `self h other`
    pub fn direct_sum(&self, other: &SchroderWord) -> SchroderWord {
        let mut letters = self.letters.clone();
        letters.push(Letter::H);
        letters.extend_from_slice(&other.letters);
        SchroderWord { letters }
    }

    /// Splits at the horizontal steps on the axis into `comp + 1` small
    /// Schröder paths.
    pub fn decompose(&self) -> Vec<SchroderWord> {
        let mut parts = vec![Vec::new()];
        let mut height = 0;
        for &l in &self.letters {
            if l == Letter::H && height == 0 {
                parts.push(Vec::new());
            } else {
                parts.last_mut().unwrap().push(l);
            }
            height += l.rise();
        }
        parts
            .into_iter()
            .map(|letters| SchroderWord { letters })
            .collect()
    }

    pub fn to_fpath(&self) -> FPath {
        use Letter::*;
        let mut word = self.letters.clone();
        let mut steps = Vec::with_capacity(self.semilength());
        while let Some(&last) = word.last() {
            let n = word.len();
            let step = match last {
                H => {
                    word.pop();
                    FStep::NORTH
                }
                D if word[n - 2] == U => {
                    word.truncate(n - 2);
                    step(1, 1)
                }
                D if word[n - 2] == H => {
                    // X u Y h d  ->  X h Y
                    let outer = last_up_from(&word, 0);
                    let k = comp(&word[outer + 1..n - 2]);
                    let y = word[outer + 1..n - 2].to_vec();
                    word.truncate(outer);
                    word.push(H);
                    word.extend(y);
                    step(k as i64 + 2, 1)
                }
                D if word[n - 3] == U => {
                    // X u Z u d d  ->  X h Z
                    let outer = last_up_from(&word, 0);
                    let j = comp(&word[outer + 1..n - 3]);
                    let z = word[outer + 1..n - 3].to_vec();
                    word.truncate(outer);
                    word.push(H);
                    word.extend(z);
                    step(1, -(j as i64))
                }
                D => {
                    // X u Y u Z h d d  ->  X h Y h Z
                    debug_assert_eq!(word[n - 3], H);
                    let outer = last_up_from(&word, 0);
                    let inner = last_up_from(&word, 1);
                    let k = comp(&word[outer + 1..inner]);
                    let j = comp(&word[inner + 1..n - 3]);
                    let y = word[outer + 1..inner].to_vec();
                    let z = word[inner + 1..n - 3].to_vec();
                    word.truncate(outer);
                    word.push(H);
                    word.extend(y);
                    word.push(H);
                    word.extend(z);
                    step(k as i64 + 2, -(j as i64))
                }
                U => unreachable!("a closed path cannot end with an up step"),
            };
            steps.push(step);
        }
        steps.reverse();
        FPath::from_steps_unchecked(steps)
    }

    pub fn from_fpath(q: &FPath) -> SchroderWord {
        use Letter::*;
        let mut word: Vec<Letter> = Vec::with_capacity(2 * q.len());
        for s in q.steps() {
            let (a, b) = (s.dx() as usize, s.dy() as i64);
            if s.is_north() {
                word.push(H);
                continue;
            }
            if (a, b) == (1, 1) {
                word.extend([U, D]);
                continue;
            }
            // axis h steps of the current word; the split points are counted
            // from the right
            let axis_h = axis_h_positions(&word);
            let c = axis_h.len();
            word = match (a, b) {
                (_, 1) => {
                    let k = a - 2;
                    let at = axis_h[c - (k + 1)];
                    splice(&word, &[at], &[&[U], &[H, D]])
                }
                (1, _) => {
                    let j = (-b) as usize;
                    let at = axis_h[c - (j + 1)];
                    splice(&word, &[at], &[&[U], &[U, D, D]])
                }
                _ => {
                    let (k, j) = (a - 2, (-b) as usize);
                    let first = axis_h[c - (j + k + 2)];
                    let second = axis_h[c - (j + 1)];
                    splice(&word, &[first, second], &[&[U], &[U], &[H, D, D]])
                }
            };
        }
        SchroderWord { letters: word }
    }
}

fn step(dx: i64, dy: i64) -> FStep {
    FStep::new(dx, dy).expect("constructed step lies in the step set")
}

/// Removes the letters at `cuts` (ascending) and rebuilds
/// `seg_0 fill_0 seg_1 fill_1 ... seg_last fill_last`, where `seg_i` are the
/// pieces between cuts.
fn splice(word: &[Letter], cuts: &[usize], fills: &[&[Letter]]) -> Vec<Letter> {
    debug_assert_eq!(fills.len(), cuts.len() + 1);
    let mut out = Vec::with_capacity(word.len() + 4);
    let mut start = 0;
    for (i, &cut) in cuts.iter().enumerate() {
        out.extend_from_slice(&word[start..cut]);
        out.extend_from_slice(fills[i]);
        start = cut + 1;
    }
    out.extend_from_slice(&word[start..]);
    out.extend_from_slice(fills[cuts.len()]);
    out
}

fn comp(letters: &[Letter]) -> usize {
    let mut height = 0;
    let mut count = 0;
    for &l in letters {
        if l == Letter::H && height == 0 {
            count += 1;
        }
        height += l.rise();
    }
    count
}

fn axis_h_positions(letters: &[Letter]) -> Vec<usize> {
    let mut height = 0;
    let mut out = Vec::new();
    for (i, &l) in letters.iter().enumerate() {
        if l == Letter::H && height == 0 {
            out.push(i);
        }
        height += l.rise();
    }
    out
}

/// Index of the last up step that starts at `level`.
fn last_up_from(letters: &[Letter], level: i64) -> usize {
    let mut height = 0;
    let mut found = None;
    for (i, &l) in letters.iter().enumerate() {
        if l == Letter::U && height == level {
            found = Some(i);
        }
        height += l.rise();
    }
    found.expect("suffix class guarantees a matching up step")
}

fn count_factor(letters: &[Letter], factor: &[Letter]) -> usize {
    letters
        .windows(factor.len())
        .filter(|w| *w == factor)
        .count()
}

/// All triple-descent-free Schröder paths of semilength `n`, lexicographic
/// with `u < d < h`.
pub fn enumerate(n: usize) -> Result<Vec<SchroderWord>, GuardExceeded> {
    enumerate_with_limit(n, DEFAULT_GUARD)
}

pub fn enumerate_with_limit(n: usize, limit: usize) -> Result<Vec<SchroderWord>, GuardExceeded> {
    GuardExceeded::check(n, limit)?;
    let mut out = Vec::new();
    let mut word = Vec::new();
    extend_words(2 * n as i64, 0, 0, &mut word, &mut out);
    Ok(out)
}

fn extend_words(
    remaining: i64,
    height: i64,
    descents: usize,
    word: &mut Vec<Letter>,
    out: &mut Vec<SchroderWord>,
) {
    if remaining == 0 {
        if height == 0 {
            out.push(SchroderWord {
                letters: word.clone(),
            });
        }
        return;
    }
    for l in [Letter::U, Letter::D, Letter::H] {
        let h = height + l.rise();
        let r = remaining - l.width() as i64;
        let d = if l == Letter::D { descents + 1 } else { 0 };
        if h < 0 || r < 0 || h > r || d == 3 {
            continue;
        }
        word.push(l);
        extend_words(r, h, d, word, out);
        word.pop();
    }
}

impl fmt::Display for SchroderWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("-");
        }
        self.letters
            .iter()
            .try_for_each(|l| write!(f, "{}", l.as_char()))
    }
}

impl FromStr for SchroderWord {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<SchroderWord, ParseError> {
        if text == "-" {
            return Ok(SchroderWord::empty());
        }
        if text.is_empty() {
            return Err(ParseError::new(
                0,
                "empty input; the empty path is written \"-\"",
            ));
        }
        let letters = text
            .char_indices()
            .map(|(i, c)| match c {
                'u' => Ok(Letter::U),
                'd' => Ok(Letter::D),
                'h' => Ok(Letter::H),
                _ => Err(ParseError::new(
                    i,
                    format!("unexpected {c:?}, expected u, d or h"),
                )),
            })
            .collect::<Result<Vec<_>, _>>()?;
        SchroderWord::validate(letters).map_err(|e| {
            let offset = match e {
                SchroderError::BelowAxis(i) | SchroderError::TripleDescent(i) => i,
                SchroderError::NotClosed => text.len(),
            };
            ParseError::new(offset, e.to_string())
        })
    }
}
