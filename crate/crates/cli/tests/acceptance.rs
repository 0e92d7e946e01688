//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::io::Cursor;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fpaths::verify::{self, VerifyReport};
use fpaths::{FPath, Family, Object};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn from_report(report: VerifyReport) -> Outcome {
    match report.checks.iter().find(|c| !c.passed) {
        Some(c) => Err(c.to_string()),
        None => Ok(format!("{} checks", report.passed)),
    }
}

fn reports(parts: impl IntoIterator<Item = VerifyReport>) -> VerifyReport {
    let mut all = VerifyReport::default();
    for r in parts {
        all.merge(r);
    }
    all
}

fn cli(args: &[&str]) -> Result<String, String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fpaths").chain(args.iter().copied());
    let code = fpaths_cli::run(argv, &mut Cursor::new(Vec::new()), &mut out, &mut err);
    if code != 0 {
        return Err(format!("exit {code}: {}", String::from_utf8_lossy(&err)));
    }
    Ok(String::from_utf8(out).unwrap())
}

fn equinumerosity() -> Outcome {
    const EXPECTED: [usize; 7] = [1, 2, 6, 21, 80, 322, 1347];
    let start = Instant::now();
    for (n, &want) in EXPECTED.iter().enumerate() {
        if fpaths::counting::a_total(n as u64).map_err(|e| e.to_string())? != want.into() {
            return Err(format!("closed form disagrees at n={n}"));
        }
        for family in Family::ALL {
            let got = family.enumerate(n).map_err(|e| e.to_string())?.len();
            if got != want {
                return Err(format!("{family} n={n}: {got} objects, expected {want}"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("n=0..6 in {:.2}s", elapsed.as_secs_f64()))
}

fn table_reproduction() -> Outcome {
    let left =
        "1 0 0 0 0 0\n1 1 0 0 0 0\n2 3 1 0 0 0\n5 9 6 1 0 0\n13 30 26 10 1 0\n36 100 110 60 15 1\n";
    let right =
        "1 0 0 0 0 0\n1 1 0 0 0 0\n1 4 1 0 0 0\n1 9 10 1 0 0\n1 16 42 20 1 0\n1 25 120 140 35 1\n";
    for (which, want) in [("h", left), ("l", right)] {
        let got = cli(&["table", "--which", which])?;
        if got != want {
            return Err(format!("--which {which} printed\n{got}"));
        }
    }
    Ok("both tables, n=0..5".into())
}

fn round_trips() -> Outcome {
    from_report(reports((0..=6).map(verify::verify_round_trips)))
}

fn joint_distribution() -> Outcome {
    let report = reports((0..=6).map(verify::verify_statistics));
    let relevant = report
        .checks
        .into_iter()
        .filter(|c| c.name == "joint_distribution" || c.name == "statistics")
        .collect::<Vec<_>>();
    let passed = relevant.iter().filter(|c| c.passed).count();
    match relevant.iter().find(|c| !c.passed) {
        Some(c) => Err(c.to_string()),
        None => Ok(format!("{passed} checks")),
    }
}

fn refined_counts() -> Outcome {
    from_report(reports((0..=8).map(verify::verify_refined)))
}

fn marginals() -> Outcome {
    from_report(reports((0..=12).map(verify::verify_marginals)))
}

fn example_path() -> FPath {
    let mut pairs = vec!["0,1"; 15];
    pairs[6] = "3,-1";
    pairs[10] = "1,1";
    pairs[11] = "2,1";
    pairs[14] = "1,-1";
    pairs.join(" ").parse().expect("valid path")
}

fn pinned_example() -> Outcome {
    let q = example_path();
    let expected = [
        (Family::Schroder, "hhuhuhhddhhuudhduhudd"),
        (Family::Bicolored, "uuuuuuurrbbbuuuububbuuurrburrrrr"),
        (Family::Perm, "1 2 5 8 3 4 6 7 9 16 12 13 11 10 14 15"),
        (Family::InvI, "0,0,0,0,0,3,3,3,3,4,6,7,6,6,0,0"),
        (Family::InvJ, "0,0,0,0,0,1,0,0,4,4,5,9,9,9,0,0"),
        (Family::Tree, "[(1 L L (2 (1 L) L)) L (3 L L L L L) L L]"),
    ];
    for (family, want) in expected {
        let got = family.from_fpath(&q).to_string();
        if got != want {
            return Err(format!("{family}: {got}"));
        }
    }
    Ok("six images".into())
}

fn direct_sums() -> Outcome {
    from_report(reports((0..=5).map(verify::verify_direct_sums)))?;
    let q = example_path();
    let chains = [
        (
            Family::InvI,
            ["0", "0", "0,0,0,3,0,0", "0", "0,0,1,3,4,3,3"],
        ),
        (
            Family::InvJ,
            ["0", "0", "0,1,1,1,0,0", "0", "0,1,0,0,4,4,5"],
        ),
    ];
    for (family, want) in chains {
        let whole = family.from_fpath(&q);
        let parts = whole.decompose();
        let got: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        if got != want {
            return Err(format!("{family} chain: {}", got.join(" + ")));
        }
        if Object::compose(&parts).as_ref() != Some(&whole) {
            return Err(format!("{family} chain does not sum back to {whole}"));
        }
    }
    Ok("n=0..5, both chains".into())
}

fn involution_suite() -> Outcome {
    let mut total = 0;
    for n in 0..=7 {
        for q in fpaths::fpath::enumerate(n).map_err(|e| e.to_string())? {
            let r = q.involution();
            let (s, t) = (q.stats(), r.stats());
            let ok = r.involution() == q
                && t.triple.height == s.triple.height
                && t.triple.north == s.triple.north
                && t.triple.aone == s.bone - s.triple.north
                && t.bone == s.triple.aone + s.triple.north
                && s.triple.height <= s.triple.north
                && s.triple.north <= s.bone;
            if !ok {
                return Err(format!("{q} -> {r}"));
            }
            total += 1;
        }
    }
    Ok(format!("{total} paths"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("equinumerosity", equinumerosity),
        ("table reproduction", table_reproduction),
        ("round trips", round_trips),
        ("joint distribution", joint_distribution),
        ("refined counts", refined_counts),
        ("marginal consistency", marginals),
        ("pinned example", pinned_example),
        ("direct-sum homomorphism", direct_sums),
        ("involution suite", involution_suite),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
