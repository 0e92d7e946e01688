//! Uniform access to the seven families, with F-paths as the hub.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bicolored::{self, BicoloredWord};
use crate::error::{GuardExceeded, ParseError};
use crate::fpath::{self, FPath, StatTriple};
use crate::invseq::{self, InvFamily, InvSeq};
use crate::perm::{self, Permutation};
use crate::schroder::{self, SchroderWord};
use crate::tree::{self, WTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Fpath,
    Schroder,
    Bicolored,
    Perm,
    InvI,
    InvJ,
    Tree,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Fpath,
        Family::Schroder,
        Family::Bicolored,
        Family::Perm,
        Family::InvI,
        Family::InvJ,
        Family::Tree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Fpath => "fpath",
            Family::Schroder => "schroder",
            Family::Bicolored => "bicolored",
            Family::Perm => "perm",
            Family::InvI => "inv-i",
            Family::InvJ => "inv-j",
            Family::Tree => "tree",
        }
    }

    /// All objects corresponding to F-paths of length `n`, in the family's
    /// canonical order.
    pub fn enumerate(self, n: usize) -> Result<Vec<Object>, GuardExceeded> {
        GuardExceeded::check(n, fpath::DEFAULT_GUARD)?;
        Ok(match self {
            Family::Fpath => wrap(fpath::enumerate(n)?, Object::FPath),
            Family::Schroder => wrap(schroder::enumerate(n)?, Object::Schroder),
            Family::Bicolored => wrap(bicolored::enumerate(n + 1)?, Object::Bicolored),
            Family::Perm => wrap(perm::enumerate(n + 1)?, Object::Perm),
            Family::InvI => wrap(invseq::enumerate(n + 1, InvFamily::I)?, Object::Inv),
            Family::InvJ => wrap(invseq::enumerate(n + 1, InvFamily::J)?, Object::Inv),
            Family::Tree => wrap(tree::enumerate(n + 1)?, Object::Tree),
        })
    }

    pub fn parse(self, text: &str) -> Result<Object, ParseError> {
        Ok(match self {
            Family::Fpath => Object::FPath(text.parse()?),
            Family::Schroder => Object::Schroder(text.parse()?),
            Family::Bicolored => Object::Bicolored(text.parse()?),
            Family::Perm => Object::Perm(text.parse()?),
            Family::InvI => Object::Inv(InvSeq::parse(text, InvFamily::I)?),
            Family::InvJ => Object::Inv(InvSeq::parse(text, InvFamily::J)?),
            Family::Tree => Object::Tree(text.parse()?),
        })
    }

    pub fn from_fpath(self, q: &FPath) -> Object {
        match self {
            Family::Fpath => Object::FPath(q.clone()),
            Family::Schroder => Object::Schroder(SchroderWord::from_fpath(q)),
            Family::Bicolored => Object::Bicolored(BicoloredWord::from_fpath(q)),
            Family::Perm => Object::Perm(Permutation::from_fpath(q)),
            Family::InvI => Object::Inv(InvSeq::from_fpath(q, InvFamily::I)),
            Family::InvJ => Object::Inv(InvSeq::from_fpath(q, InvFamily::J)),
            Family::Tree => Object::Tree(WTree::from_fpath(q)),
        }
    }
}

fn wrap<T>(items: Vec<T>, f: fn(T) -> Object) -> Vec<Object> {
    items.into_iter().map(f).collect()
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Family, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
                format!("unknown family {s:?}; expected one of {}", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Object {
    FPath(FPath),
    Schroder(SchroderWord),
    Bicolored(BicoloredWord),
    Perm(Permutation),
    Inv(InvSeq),
    Tree(WTree),
}

impl Object {
    pub fn family(&self) -> Family {
        match self {
            Object::FPath(_) => Family::Fpath,
            Object::Schroder(_) => Family::Schroder,
            Object::Bicolored(_) => Family::Bicolored,
            Object::Perm(_) => Family::Perm,
            Object::Inv(e) if e.family() == InvFamily::J => Family::InvJ,
            Object::Inv(_) => Family::InvI,
            Object::Tree(_) => Family::Tree,
        }
    }

    pub fn to_fpath(&self) -> FPath {
        match self {
            Object::FPath(q) => q.clone(),
            Object::Schroder(p) => p.to_fpath(),
            Object::Bicolored(b) => b.to_fpath(),
            Object::Perm(p) => p.to_fpath(),
            Object::Inv(e) => e.to_fpath(),
            Object::Tree(t) => t.to_fpath(),
        }
    }

    /// The family's own statistics, computed without the bijection.
    pub fn stats(&self) -> StatTriple {
        match self {
            Object::FPath(q) => q.stats().triple,
            Object::Schroder(p) => p.stats(),
            Object::Bicolored(b) => b.stats(),
            Object::Perm(p) => p.stats(),
            Object::Inv(e) => e.stats(),
            Object::Tree(t) => t.stats(),
        }
    }

    /// `None` when the two objects belong to different families.
    pub fn direct_sum(&self, other: &Object) -> Option<Object> {
        Some(match (self, other) {
            (Object::FPath(a), Object::FPath(b)) => Object::FPath(a.direct_sum(b)),
            (Object::Schroder(a), Object::Schroder(b)) => Object::Schroder(a.direct_sum(b)),
            (Object::Bicolored(a), Object::Bicolored(b)) => Object::Bicolored(a.direct_sum(b)),
            (Object::Perm(a), Object::Perm(b)) => Object::Perm(a.direct_sum(b)),
            (Object::Inv(a), Object::Inv(b)) if a.family() == b.family() => {
                Object::Inv(a.direct_sum(b))
            }
            (Object::Tree(a), Object::Tree(b)) => Object::Tree(a.direct_sum(b)),
            _ => return None,
        })
    }

    /// Summands whose left fold under [`Object::direct_sum`] is `self`; one
    /// per unit of height plus one.
    pub fn decompose(&self) -> Vec<Object> {
        match self {
            Object::FPath(q) => wrap(q.decompose(), Object::FPath),
            Object::Schroder(p) => wrap(p.decompose(), Object::Schroder),
            Object::Bicolored(b) => b
                .to_fpath()
                .decompose()
                .iter()
                .map(|c| Object::Bicolored(BicoloredWord::from_fpath(c)))
                .collect(),
            Object::Perm(p) => wrap(p.blocks(), Object::Perm),
            Object::Inv(e) => wrap(e.decompose(), Object::Inv),
            Object::Tree(t) => wrap(t.decompose(), Object::Tree),
        }
    }

    /// Left fold of [`Object::direct_sum`]; `None` for an empty or mixed list.
    pub fn compose(parts: &[Object]) -> Option<Object> {
        let (first, rest) = parts.split_first()?;
        rest.iter()
            .try_fold(first.clone(), |acc, p| acc.direct_sum(p))
    }
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::FPath(q) => q.fmt(f),
            Object::Schroder(p) => p.fmt(f),
            Object::Bicolored(b) => b.fmt(f),
            Object::Perm(p) => p.fmt(f),
            Object::Inv(e) => e.fmt(f),
            Object::Tree(t) => t.fmt(f),
        }
    }
}
