//! Inversion sequences avoiding (101, 102) or (101, 021).
//!
//! Entries are stored as written, `e_1 .. e_L` with `0 <= e_i < i`. Indices in
//! the documentation are 1-based.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::error::{GuardExceeded, ParseError};
use crate::fpath::{FPath, FStep, StatTriple};

/// Largest sequence length produced by [`enumerate`].
pub const DEFAULT_GUARD: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvFamily {
    /// Avoids 101 and 102.
    I,
    /// Avoids 101 and 021.
    J,
    Untagged,
}

impl InvFamily {
    pub fn patterns(self) -> &'static [[usize; 3]] {
        match self {
            InvFamily::I => &[[1, 0, 1], [1, 0, 2]],
            InvFamily::J => &[[1, 0, 1], [0, 2, 1]],
            InvFamily::Untagged => &[],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvSeqError {
    #[error("entry {index} is {value}, expected below {index}")]
    NotInversion { index: usize, value: usize },
    #[error("contains the pattern {0:?}")]
    NotAvoider([usize; 3]),
    #[error("the empty sequence is not in the family")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvSeq {
    entries: Vec<usize>,
    family: InvFamily,
}

/// Replaces each entry by the number of distinct smaller entries.
pub fn word_reduction(word: &[usize]) -> Vec<usize> {
    let mut distinct = word.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    word.iter()
        .map(|v| distinct.binary_search(v).unwrap())
        .collect()
}

/// Whether some subsequence of `word` reduces to `pattern`.
pub fn word_contains(word: &[usize], pattern: &[usize]) -> bool {
    fn extend(word: &[usize], pattern: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
        let k = chosen.len();
        if k == pattern.len() {
            return true;
        }
        for i in start..word.len() {
            let v = word[i];
            let consistent = chosen
                .iter()
                .zip(pattern)
                .all(|(&u, &p)| u.cmp(&v) == p.cmp(&pattern[k]));
            if consistent {
                chosen.push(v);
                if extend(word, pattern, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    extend(word, pattern, 0, &mut Vec::new())
}

impl InvSeq {
    pub fn new(entries: Vec<usize>, family: InvFamily) -> Result<InvSeq, InvSeqError> {
        if entries.is_empty() && family != InvFamily::Untagged {
            return Err(InvSeqError::Empty);
        }
        for (i, &value) in entries.iter().enumerate() {
            if value > i {
                return Err(InvSeqError::NotInversion {
                    index: i + 1,
                    value,
                });
            }
        }
        for pattern in family.patterns() {
            if word_contains(&entries, pattern) {
                return Err(InvSeqError::NotAvoider(*pattern));
            }
        }
        Ok(InvSeq { entries, family })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn family(&self) -> InvFamily {
        self.family
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, pattern: &[usize]) -> bool {
        word_contains(&self.entries, pattern)
    }

    /// Largest entry and the 1-based position of its rightmost occurrence.
    pub fn max_and_maxid(&self) -> (usize, usize) {
        max_and_maxid(&self.entries)
    }

    /// Values in `1..L` that do not occur.
    pub fn omi(&self) -> usize {
        let present = self.present();
        (1..self.len()).filter(|&i| !present[i]).count()
    }

    /// Values `i` in `1..L` such that both `i-1` and `i` occur.
    pub fn cons(&self) -> usize {
        let present = self.present();
        (1..self.len())
            .filter(|&i| present[i] && present[i - 1])
            .count()
    }

    /// Number of leading zeros.
    pub fn first(&self) -> usize {
        self.entries.iter().take_while(|&&v| v == 0).count()
    }

    /// Positive values occurring exactly once.
    pub fn single(&self) -> usize {
        let mut count = vec![0usize; self.len() + 1];
        for &v in &self.entries {
            count[v] += 1;
        }
        count[1..].iter().filter(|&&c| c == 1).count()
    }

    fn present(&self) -> Vec<bool> {
        let mut present = vec![false; self.len() + 1];
        for &v in &self.entries {
            present[v] = true;
        }
        present
    }

    /// The family's statistic triple.
    pub fn stats(&self) -> StatTriple {
        match self.family {
            InvFamily::I => {
                let (max, maxid) = self.max_and_maxid();
                StatTriple::new(maxid - max - 1, self.omi(), self.cons())
            }
            InvFamily::J => StatTriple::new(self.first() - 1, self.omi(), self.single()),
            InvFamily::Untagged => panic!("statistics need a family tag"),
        }
    }

    pub fn to_fpath(&self) -> FPath {
        match self.family {
            InvFamily::I => self.phi_i(),
            InvFamily::J => self.phi_j(),
            InvFamily::Untagged => panic!("the bijection needs a family tag"),
        }
    }

    pub fn from_fpath(q: &FPath, family: InvFamily) -> InvSeq {
        let entries = match family {
            InvFamily::I => psi_i(q),
            InvFamily::J => psi_j(q),
            InvFamily::Untagged => panic!("the bijection needs a family tag"),
        };
        InvSeq { entries, family }
    }

    fn phi_i(&self) -> FPath {
        let mut e = self.entries.clone();
        let mut steps = Vec::with_capacity(e.len() - 1);
        while e.len() > 1 {
            let (max, maxid) = max_and_maxid(&e);
            e.remove(maxid - 1);
            let (max_hat, maxid_hat) = max_and_maxid(&e);
            steps.push(step(
                (max - max_hat) as i64,
                maxid as i64 - maxid_hat as i64,
            ));
        }
        steps.reverse();
        FPath::from_steps_unchecked(steps)
    }

    fn phi_j(&self) -> FPath {
        let e = &self.entries;
        let n = e.len() - 1;
        let mut steps = vec![FStep::NORTH; n];
        let mut pos = self.first();
        for value in 1..=n {
            let run = e[pos..].iter().take_while(|&&v| v == value).count();
            pos += run;
            let zeros = e[pos..].iter().take_while(|&&v| v == 0).count();
            pos += zeros;
            steps[n - value] = step(run as i64, 1 - zeros as i64);
        }
        debug_assert_eq!(pos, e.len());
        FPath::from_steps_unchecked(steps)
    }

    pub fn direct_sum(&self, other: &InvSeq) -> InvSeq {
        assert_eq!(self.family, other.family, "direct sum within one family");
        let entries = match self.family {
            InvFamily::I => {
                let (max, maxid) = self.max_and_maxid();
                let mut g = self.entries[..maxid].to_vec();
                g.extend(other.entries.iter().map(|v| v + max));
                g.extend_from_slice(&self.entries[maxid..]);
                g
            }
            InvFamily::J => {
                let first = self.first();
                let m = other.len();
                let mut g = self.entries[..first].to_vec();
                g.extend_from_slice(&other.entries);
                g.extend(
                    self.entries[first..]
                        .iter()
                        .map(|&v| if v > 0 { v + m } else { 0 }),
                );
                g
            }
            InvFamily::Untagged => panic!("direct sum needs a family tag"),
        };
        InvSeq {
            entries,
            family: self.family,
        }
    }

    /// Whether the sequence has no proper direct-sum factorisation.
    pub fn is_connected(&self) -> bool {
        match self.family {
            InvFamily::I => {
                let (max, maxid) = self.max_and_maxid();
                maxid == max + 1
            }
            InvFamily::J => self.first() == 1,
            InvFamily::Untagged => panic!("connectivity needs a family tag"),
        }
    }

    /// Splits off the rightmost connected summand, or returns `None` when
    /// the sequence is connected.
    pub fn split_last(&self) -> Option<(InvSeq, InvSeq)> {
        if self.is_connected() {
            return None;
        }
        let g = &self.entries;
        let (e, f) = match self.family {
            InvFamily::I => {
                let (max, maxid) = self.max_and_maxid();
                let r = maxid - max - 1;
                // 1-based k with k - g_k = r
                let k = (1..=g.len()).rev().find(|&k| k - g[k - 1] == r).unwrap();
                let base = g[k];
                let m = (1..=g.len() - k)
                    .rev()
                    .find(|&m| g[k + m - 1] >= base)
                    .unwrap();
                let f: Vec<usize> = g[k..k + m].iter().map(|v| v - base).collect();
                let mut e = g[..k].to_vec();
                e.extend_from_slice(&g[k + m..]);
                (e, f)
            }
            InvFamily::J => {
                let r = self.first();
                let m = (1..)
                    .find(|&m| r + m > g.len() || g[r + m - 1] > m)
                    .unwrap();
                let f = g[r - 1..r - 1 + m].to_vec();
                let mut e = g[..r - 1].to_vec();
                e.extend(
                    g[r - 1 + m..]
                        .iter()
                        .map(|&v| if v > 0 { v - m } else { 0 }),
                );
                (e, f)
            }
            InvFamily::Untagged => panic!("decomposition needs a family tag"),
        };
        let tag = |entries| InvSeq {
            entries,
            family: self.family,
        };
        Some((tag(e), tag(f)))
    }

    /// Connected summands whose left-folded direct sum is `self`.
    pub fn decompose(&self) -> Vec<InvSeq> {
        let mut parts = Vec::new();
        let mut rest = self.clone();
        while let Some((e, f)) = rest.split_last() {
            parts.push(f);
            rest = e;
        }
        parts.push(rest);
        parts.reverse();
        parts
    }

    /// Parses the comma-separated form and checks membership in `family`.
    pub fn parse(text: &str, family: InvFamily) -> Result<InvSeq, ParseError> {
        let mut entries = Vec::new();
        let mut offset = 0;
        for token in text.split(',') {
            let v = token.trim().parse::<usize>().map_err(|_| {
                ParseError::new(offset, format!("{token:?} is not a nonnegative integer"))
            })?;
            entries.push(v);
            offset += token.len() + 1;
        }
        InvSeq::new(entries, family).map_err(|e| {
            let offset = match e {
                InvSeqError::NotInversion { index, .. } => {
                    text.split(',').take(index - 1).map(|t| t.len() + 1).sum()
                }
                _ => 0,
            };
            ParseError::new(offset, e.to_string())
        })
    }
}

fn max_and_maxid(e: &[usize]) -> (usize, usize) {
    let max = *e.iter().max().expect("nonempty sequence");
    let maxid = e.iter().rposition(|&v| v == max).unwrap() + 1;
    (max, maxid)
}

fn step(dx: i64, dy: i64) -> FStep {
    FStep::new(dx, dy).expect("constructed step lies in the step set")
}

fn psi_i(q: &FPath) -> Vec<usize> {
    let mut e = vec![0];
    let (mut max, mut maxid) = (0usize, 1usize);
    for s in q.steps() {
        max += s.dx() as usize;
        maxid = (maxid as i64 + s.dy() as i64) as usize;
        assert!(max < maxid, "insertion keeps the inversion condition");
        e.insert(maxid - 1, max);
    }
    e
}

fn psi_j(q: &FPath) -> Vec<usize> {
    let n = q.len();
    let mut e = vec![0; q.height() + 1];
    for (i, s) in q.steps().iter().enumerate().rev() {
        let value = n - i;
        e.extend(std::iter::repeat_n(value, s.dx() as usize));
        e.extend(std::iter::repeat_n(0, (1 - s.dy()) as usize));
    }
    e
}

/// All sequences of length `len` in `family`, lexicographic.
pub fn enumerate(len: usize, family: InvFamily) -> Result<Vec<InvSeq>, GuardExceeded> {
    enumerate_with_limit(len, family, DEFAULT_GUARD)
}

pub fn enumerate_with_limit(
    len: usize,
    family: InvFamily,
    limit: usize,
) -> Result<Vec<InvSeq>, GuardExceeded> {
    GuardExceeded::check(len, limit)?;
    let mut out = Vec::new();
    if len > 0 || family == InvFamily::Untagged {
        extend_seq(len, family, &mut Vec::with_capacity(len), &mut out);
    }
    Ok(out)
}

fn extend_seq(len: usize, family: InvFamily, prefix: &mut Vec<usize>, out: &mut Vec<InvSeq>) {
    if prefix.len() == len {
        out.push(InvSeq {
            entries: prefix.clone(),
            family,
        });
        return;
    }
    for v in 0..=prefix.len() {
        if completes_pattern(prefix, v, family) {
            continue;
        }
        prefix.push(v);
        extend_seq(len, family, prefix, out);
        prefix.pop();
    }
}

/// Whether appending `c` creates an occurrence of one of the family's
/// patterns ending at the new entry.
fn completes_pattern(prefix: &[usize], c: usize, family: InvFamily) -> bool {
    let patterns = family.patterns();
    for (b_idx, &b) in prefix.iter().enumerate() {
        for &a in &prefix[..b_idx] {
            for p in patterns {
                let hit = match p {
                    [1, 0, 1] => a == c && b < a,
                    [1, 0, 2] => b < a && a < c,
                    [0, 2, 1] => a < c && c < b,
                    _ => unreachable!(),
                };
                if hit {
                    return true;
                }
            }
        }
    }
    false
}

impl fmt::Display for InvSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for InvSeq {
    type Err = ParseError;

    /// Parses without a family; see [`InvSeq::parse`].
    fn from_str(text: &str) -> Result<InvSeq, ParseError> {
        InvSeq::parse(text, InvFamily::Untagged)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpath;

    fn seq(digits: &str, family: InvFamily) -> InvSeq {
        let entries = digits
            .chars()
            .map(|c| c.to_digit(10).unwrap() as usize)
            .collect();
        InvSeq::new(entries, family).unwrap()
    }

    fn i(digits: &str) -> InvSeq {
        seq(digits, InvFamily::I)
    }

    fn j(digits: &str) -> InvSeq {
        seq(digits, InvFamily::J)
    }

    fn q(pairs: &[(i64, i64)]) -> FPath {
        FPath::validate(pairs).unwrap()
    }

    fn example_q() -> FPath {
        let mut pairs = vec![(0, 1); 15];
        pairs[6] = (3, -1);
        pairs[10] = (1, 1);
        pairs[11] = (2, 1);
        pairs[14] = (1, -1);
        q(&pairs)
    }

    fn digits(e: &InvSeq) -> String {
        e.entries().iter().map(|v| v.to_string()).collect()
    }

    #[test]
    fn reduction_and_containment() {
        assert_eq!(word_reduction(&[5, 2, 5]), [1, 0, 1]);
        assert_eq!(word_reduction(&[0, 1, 2]), [0, 1, 2]);
        assert_eq!(word_reduction(&[3, 3, 3]), [0, 0, 0]);
        assert!(word_contains(&[0, 1, 0, 1], &[1, 0, 1]));
        assert!(!word_contains(&[0, 0, 2], &[1, 0, 1]));
        assert!(!word_contains(&[0, 1, 0], &[0, 2, 1]));
    }

    #[test]
    fn completion_check_matches_brute_force() {
        for family in [InvFamily::I, InvFamily::J] {
            for len in 0..=7 {
                let brute: Vec<InvSeq> = enumerate(len, InvFamily::Untagged)
                    .unwrap()
                    .into_iter()
                    .filter(|e| family.patterns().iter().all(|p| !e.contains(p)))
                    .map(|e| InvSeq {
                        entries: e.entries,
                        family,
                    })
                    .collect();
                let mut expected = brute;
                if len == 0 {
                    expected.clear();
                }
                assert_eq!(enumerate(len, family).unwrap(), expected);
            }
        }
    }

    #[test]
    fn avoiding_021_means_positive_entries_weakly_increase() {
        for len in 0..=7 {
            for e in enumerate(len, InvFamily::Untagged).unwrap() {
                let positive: Vec<usize> = e.entries().iter().copied().filter(|&v| v > 0).collect();
                let increasing = positive.windows(2).all(|w| w[0] <= w[1]);
                assert_eq!(!e.contains(&[0, 2, 1]), increasing, "{e}");
            }
        }
    }

    #[test]
    fn enumeration() {
        let three: Vec<String> = enumerate(3, InvFamily::I)
            .unwrap()
            .iter()
            .map(digits)
            .collect();
        assert_eq!(three, ["000", "001", "002", "010", "011", "012"]);
        assert_eq!(enumerate(1, InvFamily::J).unwrap(), vec![j("0")]);
        assert_eq!(enumerate(4, InvFamily::I).unwrap().len(), 21);
        assert!(enumerate(12, InvFamily::I).is_err());
    }

    #[test]
    fn maxima() {
        assert_eq!(i("010").max_and_maxid(), (1, 2));
        assert_eq!(i("0").max_and_maxid(), (0, 1));
        let example = InvSeq::from_fpath(&example_q(), InvFamily::I);
        assert_eq!(example.max_and_maxid(), (7, 12));
    }

    #[test]
    fn statistics() {
        assert_eq!(i("012").stats(), StatTriple::new(0, 0, 2));
        assert_eq!(i("000").stats(), StatTriple::new(2, 2, 0));
        assert_eq!(i("0").stats(), StatTriple::new(0, 0, 0));
        assert_eq!(j("010").stats(), StatTriple::new(0, 1, 1));
        assert_eq!(j("000").stats(), StatTriple::new(2, 2, 0));
        assert_eq!(j("011100").stats(), StatTriple::new(0, 4, 0));
    }

    #[test]
    fn small_images() {
        let i_cases = [
            ("010", q(&[(0, 1), (1, 0)])),
            ("002", q(&[(0, 1), (2, 1)])),
            ("012", q(&[(1, 1), (1, 1)])),
            ("011", q(&[(1, 1), (0, 1)])),
            ("000", q(&[(0, 1), (0, 1)])),
        ];
        for (e, path) in i_cases {
            assert_eq!(i(e).to_fpath(), path, "{e}");
            assert_eq!(InvSeq::from_fpath(&path, InvFamily::I), i(e));
        }
        let j_cases = [
            ("010", q(&[(0, 1), (1, 0)])),
            ("011", q(&[(0, 1), (2, 1)])),
            ("012", q(&[(1, 1), (1, 1)])),
            ("000", q(&[(0, 1), (0, 1)])),
        ];
        for (e, path) in j_cases {
            assert_eq!(j(e).to_fpath(), path, "{e}");
            assert_eq!(InvSeq::from_fpath(&path, InvFamily::J), j(e));
        }
        assert_eq!(i("0").to_fpath(), FPath::empty());
        assert_eq!(j("0").to_fpath(), FPath::empty());
    }

    #[test]
    fn running_example() {
        let ei = InvSeq::from_fpath(&example_q(), InvFamily::I);
        assert_eq!(ei.to_string(), "0,0,0,0,0,3,3,3,3,4,6,7,6,6,0,0");
        assert_eq!(ei.to_fpath(), example_q());
        let ej = InvSeq::from_fpath(&example_q(), InvFamily::J);
        assert_eq!(digits(&ej), "0000010044599900");
        assert_eq!(ej.to_fpath(), example_q());
    }

    #[test]
    fn decomposition_chains() {
        let g = InvSeq::from_fpath(&example_q(), InvFamily::I);
        let parts: Vec<String> = g.decompose().iter().map(|e| e.to_string()).collect();
        assert_eq!(parts, ["0", "0", "0,0,0,3,0,0", "0", "0,0,1,3,4,3,3"]);
        let g = InvSeq::from_fpath(&example_q(), InvFamily::J);
        let parts: Vec<String> = g.decompose().iter().map(digits).collect();
        assert_eq!(parts, ["0", "0", "011100", "0", "0100445"]);
        assert_eq!(i("0").direct_sum(&i("0")), i("00"));
        assert_eq!(j("0").direct_sum(&j("0")), j("00"));
        assert_eq!(i("010").decompose(), vec![i("010")]);
        assert_eq!(j("010").decompose(), vec![j("010")]);
    }

    #[test]
    fn parsing() {
        assert_eq!(InvSeq::parse("0,1,0", InvFamily::I).unwrap(), i("010"));
        assert_eq!(InvSeq::parse("0,1,2", InvFamily::J).unwrap(), j("012"));
        assert_eq!(InvSeq::parse("0,2", InvFamily::I).unwrap_err().offset, 2);
        assert_eq!(InvSeq::parse("0,x", InvFamily::I).unwrap_err().offset, 2);
        assert!(InvSeq::parse("0,1,0,1", InvFamily::I).is_err());
    }

    #[test]
    fn round_trips_stats_and_sums() {
        for family in [InvFamily::I, InvFamily::J] {
            for n in 0..=7 {
                let seqs = enumerate(n + 1, family).unwrap();
                let paths = fpath::enumerate(n).unwrap();
                assert_eq!(seqs.len(), paths.len());
                for e in &seqs {
                    let image = e.to_fpath();
                    assert_eq!(InvSeq::from_fpath(&image, family), *e);
                    assert_eq!(e.stats(), image.stats().triple, "{e}");
                    let parts = e.decompose();
                    assert_eq!(parts.len(), e.stats().height + 1);
                    assert!(parts.iter().all(InvSeq::is_connected));
                    let back = parts[1..]
                        .iter()
                        .fold(parts[0].clone(), |acc, f| acc.direct_sum(f));
                    assert_eq!(back, *e);
                }
                for p in paths {
                    assert_eq!(InvSeq::from_fpath(&p, family).to_fpath(), p);
                }
            }
            for n in 1..=4 {
                for m in 1..=4 {
                    for e in enumerate(n, family).unwrap() {
                        for f in enumerate(m, family).unwrap() {
                            let g = e.direct_sum(&f);
                            assert_eq!(g.to_fpath(), e.to_fpath().direct_sum(&f.to_fpath()));
                            if f.is_connected() {
                                assert_eq!(g.split_last(), Some((e.clone(), f.clone())));
                            }
                        }
                    }
                }
            }
        }
    }
}
