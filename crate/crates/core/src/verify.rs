//! Exhaustive cross-checks at small sizes.
//!
//! Every check reports the first failing object in canonical order, rendered
//! in its family's text form. Reports are ordered the same way regardless of
//! how many threads produced them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::Serialize;

use crate::counting::{self, MarginalSpec};
use crate::family::{Family, Object};
use crate::fpath::{self, FPath, StatTriple, StepClass};
use crate::invseq::{InvFamily, InvSeq};
use crate::perm::{Permutation, ShapeCase};

/// Largest `n` for which the full matrix is run by default.
pub const DEFAULT_MAX_N: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub family: Option<Family>,
    pub n: Option<usize>,
    pub passed: bool,
    /// A summary on success, the first counterexample on failure.
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name
        )?;
        if let Some(family) = self.family {
            write!(f, " {family}")?;
        }
        if let Some(n) = self.n {
            write!(f, " n={n}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl VerifyReport {
    fn record(
        &mut self,
        name: &str,
        family: Option<Family>,
        n: Option<usize>,
        outcome: Result<String, String>,
    ) {
        let passed = outcome.is_ok();
        if passed {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        self.checks.push(Check {
            name: name.to_string(),
            family,
            n,
            passed,
            detail: outcome.unwrap_or_else(|e| e),
        });
    }

    pub fn merge(&mut self, other: VerifyReport) {
        self.passed += other.passed;
        self.failed += other.failed;
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        write!(f, "{} passed, {} failed", self.passed, self.failed)
    }
}

/// The six families with a bijection onto F-paths.
pub const BIJECTIVE: [Family; 6] = [
    Family::Schroder,
    Family::Bicolored,
    Family::Perm,
    Family::InvI,
    Family::InvJ,
    Family::Tree,
];

fn paths(n: usize) -> Vec<FPath> {
    fpath::enumerate_with_limit(n, usize::MAX).expect("no limit")
}

fn objects(family: Family, n: usize) -> Result<Vec<Object>, String> {
    family.enumerate(n).map_err(|e| e.to_string())
}

/// Every family has `a_total(n)` objects.
pub fn verify_equinumerous(n: usize) -> VerifyReport {
    let mut report = VerifyReport::default();
    let expected = counting::a_total(n as u64).map(|v| v.to_string());
    for family in Family::ALL {
        let outcome = match (&expected, objects(family, n)) {
            (Err(e), _) => Err(e.to_string()),
            (_, Err(e)) => Err(e),
            (Ok(want), Ok(items)) if items.len().to_string() == *want => {
                Ok(format!("{} objects", items.len()))
            }
            (Ok(want), Ok(items)) => Err(format!("{} objects, expected {want}", items.len())),
        };
        report.record("equinumerous", Some(family), Some(n), outcome);
    }
    report
}

/// Both compositions of each bijection with its inverse are identities, and
/// every image is a valid F-path.
pub fn verify_round_trips(n: usize) -> VerifyReport {
    let mut report = VerifyReport::default();
    for family in BIJECTIVE {
        report.record("round_trip", Some(family), Some(n), round_trip(family, n));
    }
    report
}

fn round_trip(family: Family, n: usize) -> Result<String, String> {
    let items = objects(family, n)?;
    for o in &items {
        let image = o.to_fpath();
        if FPath::from_steps(image.steps().to_vec()).is_err() || image.len() != n {
            return Err(format!("image of {o} is not in F_{n}: {image}"));
        }
        let back = family.from_fpath(&image);
        if back != *o {
            return Err(format!("{o} -> {image} -> {back}"));
        }
    }
    let all = paths(n);
    for q in &all {
        let o = family.from_fpath(q);
        let back = o.to_fpath();
        if back != *q {
            return Err(format!("{q} -> {o} -> {back}"));
        }
    }
    Ok(format!("{} objects, {} paths", items.len(), all.len()))
}

fn triple_counts(triples: impl Iterator<Item = StatTriple>) -> BTreeMap<StatTriple, usize> {
    let mut counts = BTreeMap::new();
    for t in triples {
        *counts.entry(t).or_insert(0) += 1;
    }
    counts
}

/// Statistic transport per object, equal triple distributions across
/// families, the joint closed form, and the involution relations.
pub fn verify_statistics(n: usize) -> VerifyReport {
    let mut report = VerifyReport::default();
    let all = paths(n);
    let reference = triple_counts(all.iter().map(|q| q.stats().triple));
    report.record(
        "joint_distribution",
        Some(Family::Fpath),
        Some(n),
        joint(n, &reference),
    );
    report.record("involution", Some(Family::Fpath), Some(n), involution(&all));
    for family in BIJECTIVE {
        let outcome = objects(family, n).and_then(|items| {
            if let Some(o) = items
                .iter()
                .find(|o| o.stats() != o.to_fpath().stats().triple)
            {
                return Err(format!(
                    "{o} has {} but its image has {}",
                    o.stats(),
                    o.to_fpath().stats().triple
                ));
            }
            let counts = triple_counts(items.iter().map(Object::stats));
            if counts != reference {
                let t = reference
                    .keys()
                    .chain(counts.keys())
                    .find(|t| counts.get(t) != reference.get(t))
                    .unwrap();
                return Err(format!(
                    "triple {t} occurs {} times, {} among F-paths",
                    counts.get(t).unwrap_or(&0),
                    reference.get(t).unwrap_or(&0)
                ));
            }
            Ok(format!("{} triples", counts.len()))
        });
        report.record("statistics", Some(family), Some(n), outcome);
    }
    if n >= 1 {
        let outcome = objects(Family::Perm, n).and_then(|items| {
            for o in &items {
                let Object::Perm(p) = o else { unreachable!() };
                if !p.shape().structure_holds(p) {
                    return Err(format!("{p} breaks its shape case {:?}", p.shape().case));
                }
            }
            Ok(format!("{} permutations", items.len()))
        });
        report.record("perm_shapes", Some(Family::Perm), Some(n), outcome);
    }
    report
}

fn joint(n: usize, reference: &BTreeMap<StatTriple, usize>) -> Result<String, String> {
    let n64 = n as u64;
    for aone in 0..=n + 1 {
        for north in 0..=n + 1 {
            for height in 0..=n + 1 {
                let t = StatTriple::new(height, north, aone);
                let seen = reference.get(&t).copied().unwrap_or(0);
                let formula = counting::a_joint(n64, aone as u64, north as u64, height as u64)
                    .map_err(|e| e.to_string())?;
                if formula != seen.into() {
                    return Err(format!("triple {t}: {seen} paths, formula gives {formula}"));
                }
            }
        }
    }
    Ok(format!("{} triples", reference.len()))
}

fn involution(all: &[FPath]) -> Result<String, String> {
    for q in all {
        let r = q.involution();
        let (s, t) = (q.stats(), r.stats());
        let ok = r.involution() == *q
            && s.triple.height == t.triple.height
            && s.triple.north == t.triple.north
            && t.triple.aone + s.triple.north == s.bone
            && t.bone == s.triple.aone + s.triple.north
            && s.triple.height <= s.triple.north
            && s.triple.north <= s.bone;
        if !ok {
            return Err(format!("{q} -> {r}"));
        }
    }
    Ok(format!("{} paths", all.len()))
}

/// Counts by step-class signature agree with the refined closed form.
pub fn verify_refined(n: usize) -> VerifyReport {
    let mut report = VerifyReport::default();
    let mut counts: BTreeMap<[usize; 5], usize> = BTreeMap::new();
    for q in paths(n) {
        let mut sig = [0usize; 5];
        for s in q.steps() {
            match s.class() {
                StepClass::UnitUp => sig[0] += 1,
                StepClass::UnitFlat => sig[1] += 1,
                StepClass::LongUp => sig[2] += 1,
                StepClass::North => sig[3] += 1,
                StepClass::LongFlat => {}
            }
        }
        sig[4] = q.height();
        *counts.entry(sig).or_insert(0) += 1;
    }
    let outcome = (|| {
        let mut checked = 0;
        for i in 0..=n {
            for j in 0..=n {
                for k in 0..=n {
                    for l in 0..=n {
                        for m in 0..=n {
                            let sig = [i, j, k, l, m];
                            let seen = counts.get(&sig).copied().unwrap_or(0);
                            let [a, b, c, d, e] = sig.map(|v| v as u64);
                            let formula = counting::f_refined(n as u64, a, b, c, d, e)
                                .map_err(|e| e.to_string())?;
                            if formula != seen.into() {
                                return Err(format!(
                                    "signature {sig:?}: {seen} paths, formula gives {formula}"
                                ));
                            }
                            checked += 1;
                        }
                    }
                }
            }
        }
        Ok(format!("{checked} signatures, {} nonzero", counts.len()))
    })();
    report.record("refined_counts", Some(Family::Fpath), Some(n), outcome);
    report
}

/// All seven marginal closed forms against sums of the joint form.
pub fn verify_marginals(n: usize) -> VerifyReport {
    let mut report = VerifyReport::default();
    let outcome = (|| {
        let n64 = n as u64;
        let range = 0..=n64 + 2;
        let mut joint = BTreeMap::new();
        for h in range.clone() {
            for l in range.clone() {
                for m in range.clone() {
                    let v = counting::a_joint(n64, h, l, m).map_err(|e| e.to_string())?;
                    joint.insert((h, l, m), v);
                }
            }
        }
        let mut checked = 0;
        let fixed = |v: u64, on: bool| on.then_some(v);
        for mask in 0..7u8 {
            let (hs, ls, ms) = (mask & 1 != 0, mask & 2 != 0, mask & 4 != 0);
            for h in range.clone() {
                for l in range.clone() {
                    for m in range.clone() {
                        // one representative per combination of fixed values
                        if (!hs && h > 0) || (!ls && l > 0) || (!ms && m > 0) {
                            continue;
                        }
                        let spec = MarginalSpec {
                            h: fixed(h, hs),
                            l: fixed(l, ls),
                            m: fixed(m, ms),
                        };
                        let sum: num_bigint::BigUint = joint
                            .iter()
                            .filter(|((a, b, c), _)| {
                                spec.h.is_none_or(|v| v == *a)
                                    && spec.l.is_none_or(|v| v == *b)
                                    && spec.m.is_none_or(|v| v == *c)
                            })
                            .map(|(_, v)| v)
                            .sum();
                        let closed = counting::a_marginal(n64, spec).map_err(|e| e.to_string())?;
                        if closed != sum {
                            return Err(format!("a_{n}{spec}: closed form {closed}, sum {sum}"));
                        }
                        checked += 1;
                    }
                }
            }
        }
        let unit = num_bigint::BigUint::from(1u8);
        let no_north = MarginalSpec {
            l: Some(0),
            ..Default::default()
        };
        if counting::a_marginal(n64, no_north).map_err(|e| e.to_string())? != unit {
            return Err(format!("a_{n}(*,0,*) is not 1"));
        }
        if counting::a_joint(n64, 0, n64, n64).map_err(|e| e.to_string())? != unit {
            return Err(format!("a_{n}(0,{n},{n}) is not 1"));
        }
        Ok(format!("{checked} marginals"))
    })();
    report.record("marginals", None, Some(n), outcome);
    report
}

/// Each inverse bijection carries the F-path decomposition to the family's
/// direct sum, and each family's decomposition composes back.
pub fn verify_direct_sums(n: usize) -> VerifyReport {
    let mut report = VerifyReport::default();
    for family in Family::ALL {
        let outcome = (|| {
            let all = paths(n);
            for q in &all {
                let whole = family.from_fpath(q);
                let parts: Vec<Object> =
                    q.decompose().iter().map(|c| family.from_fpath(c)).collect();
                let folded = Object::compose(&parts);
                if folded.as_ref() != Some(&whole) {
                    let shown: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                    return Err(format!("{q}: {whole} vs sum of [{}]", shown.join(" | ")));
                }
            }
            let items = objects(family, n)?;
            for o in &items {
                let parts = o.decompose();
                if parts.len() != o.to_fpath().height() + 1
                    || parts.iter().any(|p| p.to_fpath().height() != 0)
                    || Object::compose(&parts).as_ref() != Some(o)
                {
                    return Err(format!("{o} does not recompose from its summands"));
                }
            }
            Ok(format!("{} paths, {} objects", all.len(), items.len()))
        })();
        report.record("direct_sum", Some(family), Some(n), outcome);
    }
    report
}

/// The length-15 path used throughout the worked examples.
pub fn example_path() -> FPath {
    let mut pairs = vec![(0, 1); 15];
    pairs[6] = (3, -1);
    pairs[10] = (1, 1);
    pairs[11] = (2, 1);
    pairs[14] = (1, -1);
    FPath::validate(&pairs).expect("the example is an F-path")
}

/// Its images, in each family's text form.
pub const EXAMPLE_IMAGES: [(Family, &str); 6] = [
    (Family::Schroder, "hhuhuhhddhhuudhduhudd"),
    (Family::Bicolored, "uuuuuuurrbbbuuuububbuuurrburrrrr"),
    (Family::Perm, "1 2 5 8 3 4 6 7 9 16 12 13 11 10 14 15"),
    (Family::InvI, "0,0,0,0,0,3,3,3,3,4,6,7,6,6,0,0"),
    (Family::InvJ, "0,0,0,0,0,1,0,0,4,4,5,9,9,9,0,0"),
    (Family::Tree, "[(1 L L (2 (1 L) L)) L (3 L L L L L) L L]"),
];

/// The six paths of length 2 with their images in each family.
pub const SMALL_CORRESPONDENCES: [(&str, [&str; 6]); 6] = [
    (
        "0,1 1,0",
        ["uudd", "uurbur", "3 1 2", "0,1,0", "0,1,0", "[(1 L L)]"],
    ),
    (
        "0,1 2,1",
        ["uhd", "uubbur", "2 3 1", "0,0,2", "0,1,1", "[(2 L L)]"],
    ),
    (
        "1,1 1,1",
        ["udud", "ububur", "3 2 1", "0,1,2", "0,1,2", "[(1 (1 L))]"],
    ),
    (
        "0,1 1,1",
        ["hud", "uuburr", "1 3 2", "0,0,1", "0,0,1", "[(1 L) L]"],
    ),
    (
        "1,1 0,1",
        ["udh", "ubuurr", "2 1 3", "0,1,1", "0,0,2", "[L (1 L)]"],
    ),
    (
        "0,1 0,1",
        ["hh", "uuurrr", "1 2 3", "0,0,0", "0,0,0", "[L L L]"],
    ),
];

/// Worked examples: the length-15 path's images and summands, the length-2
/// correspondences, the permutation shape examples and the two
/// inversion-sequence decomposition chains.
pub fn verify_pinned_examples() -> VerifyReport {
    let mut report = VerifyReport::default();
    let q = example_path();
    for (family, want) in EXAMPLE_IMAGES {
        let got = family.from_fpath(&q).to_string();
        let back = family.parse(want).map(|o| o.to_fpath());
        let outcome = if got != want {
            Err(format!("got {got}, expected {want}"))
        } else if back.as_ref() != Ok(&q) {
            Err(format!("{want} does not map back to the example path"))
        } else {
            Ok(want.to_string())
        };
        report.record("example_image", Some(family), None, outcome);
    }

    for (column, family) in BIJECTIVE.into_iter().enumerate() {
        let outcome = (|| {
            for (path, images) in SMALL_CORRESPONDENCES {
                let q: FPath = path.parse().map_err(|e| format!("{path}: {e}"))?;
                let o = family.parse(images[column]).map_err(|e| e.to_string())?;
                if o.to_fpath() != q || family.from_fpath(&q) != o {
                    return Err(format!("{o} does not correspond to {q}"));
                }
            }
            Ok("6 objects".to_string())
        })();
        report.record("small_correspondence", Some(family), Some(2), outcome);
    }

    type Shape = (&'static str, (usize, usize, usize, usize), ShapeCase);
    let shapes: [Shape; 3] = [
        ("3 2 1 5 4 9 7 6 8", (6, 4, 5, 6), ShapeCase::ZLtLt),
        ("3 2 1 7 4 9 6 5 8", (6, 4, 7, 5), ShapeCase::ZLtGt),
        ("3 2 1 5 4 7 6 8 9", (9, 8, 8, 9), ShapeCase::ZEqLt),
    ];
    for (text, xyzw, case) in shapes {
        let outcome = text
            .parse::<Permutation>()
            .map_err(|e| e.to_string())
            .and_then(|p| {
                let s = p.shape();
                if ((s.x, s.y, s.z, s.w), s.case) == (xyzw, case) && s.structure_holds(&p) {
                    Ok(format!("{text}: {xyzw:?}"))
                } else {
                    Err(format!("{text}: got {:?}", s))
                }
            });
        report.record("perm_shape", Some(Family::Perm), None, outcome);
    }

    let chains: [(Family, InvFamily, [&str; 5]); 2] = [
        (
            Family::InvI,
            InvFamily::I,
            ["0", "0", "0,0,0,3,0,0", "0", "0,0,1,3,4,3,3"],
        ),
        (
            Family::InvJ,
            InvFamily::J,
            ["0", "0", "0,1,1,1,0,0", "0", "0,1,0,0,4,4,5"],
        ),
    ];
    for (family, tag, want) in chains {
        let g = InvSeq::from_fpath(&q, tag);
        let got: Vec<String> = g.decompose().iter().map(|e| e.to_string()).collect();
        let outcome = if got == want {
            Ok(got.join(" + "))
        } else {
            Err(format!("got {}", got.join(" + ")))
        };
        report.record("decomposition_chain", Some(family), None, outcome);
    }

    let blocks: Vec<String> = Permutation::from_fpath(&q)
        .blocks()
        .iter()
        .map(|b| b.to_string())
        .collect();
    let want = ["1", "1", "3 6 1 2 4 5", "1", "7 3 4 2 1 5 6"];
    let outcome = if blocks == want {
        Ok(blocks.join(" + "))
    } else {
        Err(format!("got {}", blocks.join(" + ")))
    };
    report.record("decomposition_chain", Some(Family::Perm), None, outcome);
    report
}

type Job = Box<dyn Fn() -> VerifyReport + Send + Sync>;

/// Every check for `n = 0..=max_n`, spread over `threads` workers. The
/// report order does not depend on `threads`.
pub fn run_all(max_n: usize, threads: usize) -> VerifyReport {
    let mut jobs: Vec<Job> = vec![Box::new(verify_pinned_examples)];
    for n in 0..=max_n {
        jobs.push(Box::new(move || verify_equinumerous(n)));
        jobs.push(Box::new(move || verify_round_trips(n)));
        jobs.push(Box::new(move || verify_statistics(n)));
        jobs.push(Box::new(move || verify_direct_sums(n)));
        jobs.push(Box::new(move || verify_refined(n)));
        jobs.push(Box::new(move || verify_marginals(n)));
    }
    let results: Vec<Mutex<Option<VerifyReport>>> = jobs.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..threads.max(1) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(job) = jobs.get(i) else { break };
                *results[i].lock().unwrap() = Some(job());
            });
        }
    });
    let mut report = VerifyReport::default();
    for slot in results {
        report.merge(slot.into_inner().unwrap().expect("every job ran"));
    }
    report
}
