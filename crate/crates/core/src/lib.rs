//! F-paths and six equinumerous families: Schröder paths without triple
//! descents, restricted bicolored Dyck paths, (2341,2431,3241)-avoiding
//! permutations, (101,102)- and (101,021)-avoiding inversion sequences, and
//! weighted ordered trees.
//!
//! Each family has a bijection `to_fpath` onto F-paths with an inverse
//! `from_fpath`, a statistic triple that the bijection carries to
//! `(height, north, aone)`, a direct sum under which the bijection is a
//! homomorphism, and an exhaustive generator. [`counting`] evaluates the
//! closed-form joint and marginal distributions exactly and [`verify`]
//! cross-checks everything at small sizes.

pub mod bicolored;
pub mod counting;
pub mod error;
pub mod family;
pub mod fpath;
pub mod invseq;
pub mod perm;
pub mod schroder;
pub mod tree;
pub mod verify;

pub use error::{GuardExceeded, ParseError};
pub use family::{Family, Object};
pub use fpath::{FPath, FStep, StatTriple, StepClass};
