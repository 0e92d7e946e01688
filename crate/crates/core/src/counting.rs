//! Exact counts of F-paths by step classes and by statistics.
//!
//! Arguments follow the usual letters: `h` counts unit-width steps (aone),
//! `l` counts north steps and `m` is the final height. Binomials whose lower
//! index can fall to -1 are taken in the series form
//! `binom(N, K) = [z^(N-K)] (1-z)^-(K+1)`, which is what the counts extract
//! and which differs from the "zero outside the triangle" convention exactly
//! at the degenerate corners (the empty path, the all-north path).

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("{numerator} is not divisible by {divisor}")]
    InexactDivision { numerator: BigUint, divisor: u64 },
}

/// `binom(a, b)`, zero unless `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b) as u64;
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= (a as u64) - i;
        acc /= i + 1;
    }
    acc
}

/// `[z^t] (1-z)^-s`.
pub fn series_coeff(t: i64, s: i64) -> BigUint {
    assert!(s >= 0, "series_coeff needs s >= 0");
    match (t, s) {
        (t, _) if t < 0 => BigUint::zero(),
        (t, 0) => BigUint::from((t == 0) as u8),
        (t, s) => binomial(t + s - 1, s - 1),
    }
}

/// `binom(n, k)` read as a series coefficient, so `binom(-1, -1) = 1`.
fn series_binomial(n: i64, k: i64) -> BigUint {
    if k < -1 {
        BigUint::zero()
    } else {
        series_coeff(n - k, k + 1)
    }
}

/// `n! / (p_1! p_2! ...)`, or 0 if the parts do not sum to `n`.
pub fn multinomial(n: u64, parts: &[u64]) -> BigUint {
    if parts.iter().sum::<u64>() != n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    let mut used = 0i64;
    for &p in parts {
        used += p as i64;
        acc *= binomial(used, p as i64);
    }
    acc
}

fn divide(numerator: BigUint, divisor: u64) -> Result<BigUint, CountError> {
    let (q, r) = numerator.div_rem(&BigUint::from(divisor));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(CountError::InexactDivision { numerator, divisor })
    }
}

/// F-paths of length `n` with `i` steps `(1,1)`, `j` steps `(1,b<=0)`, `k`
/// steps `(a>=2,1)`, `l` north steps and final height `m`; the remaining
/// `n - i - j - k - l` steps are `(a>=2, b<=0)`.
pub fn f_refined(n: u64, i: u64, j: u64, k: u64, l: u64, m: u64) -> Result<BigUint, CountError> {
    let Some(rest) = n.checked_sub(i + j + k + l) else {
        return Ok(BigUint::zero());
    };
    let s = (2 * rest + j + k) as i64;
    let t = l as i64 - m as i64 - s;
    let numerator = (m + 1) * multinomial(n + 1, &[i, j, k, l + 1, rest]) * series_coeff(t, s);
    divide(numerator, n + 1)
}

/// F-paths of length `n` with `aone = h`, `north = l` and `height = m`.
pub fn a_joint(n: u64, h: u64, l: u64, m: u64) -> Result<BigUint, CountError> {
    let (n, h, l, m) = (n as i64, h as i64, l as i64, m as i64);
    let s = 2 * (n - l) - h;
    if s < 0 {
        return Ok(BigUint::zero());
    }
    let numerator =
        (m + 1) as u64 * binomial(n + 1, l + 1) * binomial(n - l, h) * series_coeff(n - m - s, s);
    divide(numerator, (n + 1) as u64)
}

/// Which of `h`, `l`, `m` are fixed; `None` sums over that coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MarginalSpec {
    pub h: Option<u64>,
    pub l: Option<u64>,
    pub m: Option<u64>,
}

impl fmt::Display for MarginalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Option<u64>| v.map_or("*".to_string(), |x| x.to_string());
        write!(f, "({},{},{})", show(self.h), show(self.l), show(self.m))
    }
}

/// Closed form for the distribution with the starred coordinates summed out.
pub fn a_marginal(n: u64, spec: MarginalSpec) -> Result<BigUint, CountError> {
    let c = binomial;
    let x = series_binomial;
    let nn = n as i64;
    let numerator = match (spec.h, spec.l, spec.m) {
        (Some(h), Some(l), Some(m)) => return a_joint(n, h, l, m),
        (Some(h), Some(l), None) => {
            let (h, l) = (h as i64, l as i64);
            c(nn + 1, l + 1) * c(nn - l, h) * c(nn + 1, 2 * l + h - nn)
        }
        (Some(h), None, Some(m)) => {
            let (h, m) = (h as i64, m as i64);
            let sum: BigUint = (0..=nn + 1)
                .map(|i| c(nn - h + 1, i + 1) * x(nn - m - 1, 2 * nn - h - 2 * i - 1))
                .sum();
            (m + 1) as u64 * c(nn + 1, h) * sum
        }
        (None, Some(l), Some(m)) => {
            let (l, m) = (l as i64, m as i64);
            (m + 1) as u64 * c(nn + 1, l + 1) * x(2 * nn - l - m - 1, 2 * nn - 2 * l - 1)
        }
        (Some(h), None, None) => {
            let h = h as i64;
            let sum: BigUint = (0..=nn + 1)
                .map(|i| c(nn - h + 1, i) * c(nn + 1, 2 * i + h + 1))
                .sum();
            c(nn + 1, h) * sum
        }
        (None, Some(l), None) => {
            let l = l as i64;
            c(nn + 1, l + 1) * c(2 * nn - l + 1, l)
        }
        (None, None, Some(m)) => {
            let m = m as i64;
            let sum: BigUint = (0..=nn + 1)
                .map(|i| c(nn + 1, i) * x(nn - m + i - 1, 2 * i - 1))
                .sum();
            (m + 1) as u64 * sum
        }
        (None, None, None) => (0..=nn + 1)
            .map(|i| c(nn + 1, i + 1) * c(2 * nn - i + 1, i))
            .sum(),
    };
    divide(numerator, n + 1)
}

/// Number of F-paths of length `n`.
pub fn a_total(n: u64) -> Result<BigUint, CountError> {
    a_marginal(n, MarginalSpec::default())
}

/// `a_total(0) ..= a_total(max_n)`.
pub fn sequence(max_n: u64) -> Result<Vec<BigUint>, CountError> {
    (0..=max_n).map(a_total).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableAxis {
    H,
    L,
    M,
}

/// Row `n` of the one-statistic distribution along `axis`, entries `0..=n`.
pub fn table_row(n: u64, axis: TableAxis) -> Result<Vec<BigUint>, CountError> {
    (0..=n)
        .map(|v| {
            let mut spec = MarginalSpec::default();
            match axis {
                TableAxis::H => spec.h = Some(v),
                TableAxis::L => spec.l = Some(v),
                TableAxis::M => spec.m = Some(v),
            }
            a_marginal(n, spec)
        })
        .collect()
}
