//! Restricted bicolored Dyck paths.
//!
//! Down steps come in two colours. Read as a sequence of segments, each up
//! step is followed by `r^p b^q`: nothing, a black run, a red run then a black
//! run, or (for the final up step only) a red run that closes the path.
//! Text form uses `u`, `b` (black down) and `r` (red down).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::error::{GuardExceeded, ParseError};
use crate::fpath::{FPath, FStep, StatTriple};

pub const DEFAULT_GUARD: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    U,
    Black,
    Red,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::U => 'u',
            Letter::Black => 'b',
            Letter::Red => 'r',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum BicoloredError {
    #[error("letter {0} goes below the axis")]
    BelowAxis(usize),
    #[error("path does not end on the axis")]
    NotClosed,
    #[error("letter {0} breaks the red-then-black run form")]
    RunFormViolation(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BicoloredWord {
    letters: Vec<Letter>,
}

/// Whether `next` may follow `prev` (None = start of word).
fn allowed(prev: Option<Letter>, next: Letter) -> bool {
    use Letter::*;
    matches!(
        (prev, next),
        (None, U) | (Some(U), _) | (Some(Red), Red | Black) | (Some(Black), Black | U)
    )
}

impl BicoloredWord {
    pub fn validate(letters: Vec<Letter>) -> Result<BicoloredWord, BicoloredError> {
        let mut height = 0i64;
        let mut prev = None;
        for (i, &l) in letters.iter().enumerate() {
            height += if l == Letter::U { 1 } else { -1 };
            if height < 0 {
                return Err(BicoloredError::BelowAxis(i));
            }
            if !allowed(prev, l) {
                return Err(BicoloredError::RunFormViolation(i));
            }
            prev = Some(l);
        }
        match prev {
            None => return Err(BicoloredError::RunFormViolation(0)),
            Some(Letter::Red) => {}
            Some(_) if height != 0 => return Err(BicoloredError::NotClosed),
            Some(_) => return Err(BicoloredError::RunFormViolation(letters.len() - 1)),
        }
        if height != 0 {
            return Err(BicoloredError::NotClosed);
        }
        Ok(BicoloredWord { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn semilength(&self) -> usize {
        self.letters.iter().filter(|&&l| l == Letter::U).count()
    }

    /// Length of the closing red run.
    pub fn last(&self) -> usize {
        self.letters
            .iter()
            .rev()
            .take_while(|&&l| l == Letter::Red)
            .count()
    }

    /// Number of `uu` factors.
    pub fn dasc(&self) -> usize {
        self.letters
            .windows(2)
            .filter(|w| w == &[Letter::U, Letter::U])
            .count()
    }

    /// Occurrences of `ubu` and `rbu`.
    pub fn bval(&self) -> usize {
        self.letters
            .windows(3)
            .filter(|w| w[1] == Letter::Black && w[2] == Letter::U && w[0] != Letter::Black)
            .count()
    }

    pub fn stats(&self) -> StatTriple {
        StatTriple::new(self.last() - 1, self.dasc(), self.bval())
    }

    /// `self` without its closing red run, then `other`, then that red run.
    pub fn direct_sum(&self, other: &BicoloredWord) -> BicoloredWord {
        let last = self.last();
        let mut letters = self.letters[..self.letters.len() - last].to_vec();
        letters.extend_from_slice(&other.letters);
        letters.extend(std::iter::repeat_n(Letter::Red, last));
        BicoloredWord { letters }
    }

    /// Splits into segments `u r^p b^q`, one per up step.
    fn segments(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &l in &self.letters {
            match l {
                Letter::U => out.push((0, 0)),
                Letter::Red => out.last_mut().unwrap().0 += 1,
                Letter::Black => out.last_mut().unwrap().1 += 1,
            }
        }
        out
    }

    pub fn to_fpath(&self) -> FPath {
        let segments = self.segments();
        let steps = segments[..segments.len() - 1]
            .iter()
            .map(|&(reds, blacks)| {
                FStep::new(blacks as i64, 1 - reds as i64).expect("run form yields steps in F")
            })
            .collect();
        FPath::from_steps_unchecked(steps)
    }

    pub fn from_fpath(q: &FPath) -> BicoloredWord {
        let mut letters = Vec::new();
        for s in q.steps() {
            letters.push(Letter::U);
            letters.extend(std::iter::repeat_n(Letter::Red, (1 - s.dy()) as usize));
            letters.extend(std::iter::repeat_n(Letter::Black, s.dx() as usize));
        }
        letters.push(Letter::U);
        letters.extend(std::iter::repeat_n(Letter::Red, q.height() + 1));
        BicoloredWord { letters }
    }
}

/// All restricted bicolored Dyck paths with `ups` up steps, lexicographic
/// with `u < b < r`.
pub fn enumerate(ups: usize) -> Result<Vec<BicoloredWord>, GuardExceeded> {
    enumerate_with_limit(ups, DEFAULT_GUARD + 1)
}

pub fn enumerate_with_limit(ups: usize, limit: usize) -> Result<Vec<BicoloredWord>, GuardExceeded> {
    GuardExceeded::check(ups, limit)?;
    let mut out = Vec::new();
    if ups > 0 {
        extend_words(ups, 0, &mut Vec::new(), &mut out);
    }
    Ok(out)
}

fn extend_words(
    ups_left: usize,
    height: usize,
    word: &mut Vec<Letter>,
    out: &mut Vec<BicoloredWord>,
) {
    let prev = word.last().copied();
    if ups_left == 0 && height == 0 {
        if prev == Some(Letter::Red) {
            out.push(BicoloredWord {
                letters: word.clone(),
            });
        }
        return;
    }
    for l in [Letter::U, Letter::Black, Letter::Red] {
        if !allowed(prev, l) {
            continue;
        }
        match l {
            Letter::U if ups_left > 0 => {
                word.push(l);
                extend_words(ups_left - 1, height + 1, word, out);
                word.pop();
            }
            // after the final up only the closing red run may follow
            Letter::Black if height > 0 && ups_left > 0 => {
                word.push(l);
                extend_words(ups_left, height - 1, word, out);
                word.pop();
            }
            Letter::Red if height > 0 => {
                word.push(l);
                extend_words(ups_left, height - 1, word, out);
                word.pop();
            }
            _ => {}
        }
    }
}

impl fmt::Display for BicoloredWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters
            .iter()
            .try_for_each(|l| write!(f, "{}", l.as_char()))
    }
}

impl FromStr for BicoloredWord {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<BicoloredWord, ParseError> {
        let letters = text
            .char_indices()
            .map(|(i, c)| match c {
                'u' => Ok(Letter::U),
                'b' => Ok(Letter::Black),
                'r' => Ok(Letter::Red),
                _ => Err(ParseError::new(
                    i,
                    format!("unexpected {c:?}, expected u, b or r"),
                )),
            })
            .collect::<Result<Vec<_>, _>>()?;
        BicoloredWord::validate(letters).map_err(|e| {
            let offset = match e {
                BicoloredError::BelowAxis(i) | BicoloredError::RunFormViolation(i) => i,
                BicoloredError::NotClosed => text.len(),
            };
            ParseError::new(offset, e.to_string())
        })
    }
}
