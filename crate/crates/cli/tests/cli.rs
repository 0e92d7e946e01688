use std::io::Cursor;

fn run(args: &[&str], input: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fpaths").chain(args.iter().copied());
    let code = fpaths_cli::run(argv, &mut Cursor::new(input.as_bytes()), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn enumerate_with_stats() {
    let (code, out, _) = run(
        &["enumerate", "--family", "schroder", "--n", "2", "--stats"],
        "",
    );
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(lines.contains(&"hh\t2,2,0"), "{out}");
}

#[test]
fn map_between_families() {
    let (code, out, _) = run(
        &["map", "--from", "perm", "--to", "inv-j"],
        "2 3 1\n\n3 1 2\n",
    );
    assert_eq!(code, 0);
    assert_eq!(out, "0,1,1\n0,1,0\n");

    let (code, out, _) = run(
        &["map", "--from", "tree", "--to", "schroder"],
        "[(1 L L)]\n",
    );
    assert_eq!((code, out.as_str()), (0, "uudd\n"));
}

#[test]
fn map_reports_bad_line() {
    let (code, out, err) = run(
        &["map", "--from", "perm", "--to", "fpath"],
        "1 2\n2 3 4 1\n",
    );
    assert_eq!(code, 2);
    assert_eq!(out.lines().count(), 1);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn stats_per_line() {
    let (code, out, _) = run(&["stats", "--family", "fpath"], "0,1 1,0\n1,1 1,1\n");
    assert_eq!(code, 0);
    assert_eq!(out, "0,1,1\n0,0,2\n");
}

#[test]
fn counts() {
    assert_eq!(run(&["count", "--n", "6"], "").1, "1347\n");
    assert_eq!(run(&["count", "--n", "5", "--h", "2"], "").1, "110\n");
    assert_eq!(run(&["count", "--n", "5", "--l", "3"], "").1, "140\n");
    assert_eq!(run(&["count", "--n", "4", "--l", "0"], "").1, "1\n");
    let (code, _, _) = run(&["count", "--n", "2", "--refined", "1,1,0,0"], "");
    assert_eq!(code, 2);
    let (code, _, _) = run(
        &["count", "--n", "2", "--h", "1", "--refined", "0,0,0,2,0"],
        "",
    );
    assert_eq!(code, 2);
}

#[test]
fn refined_count_matches_enumeration() {
    // all-north path of length 3 is the only one with signature [0,0,0,3,3]
    assert_eq!(
        run(&["count", "--n", "3", "--refined", "0,0,0,3,3"], "").1,
        "1\n"
    );
}

#[test]
fn sequence_forms() {
    assert_eq!(
        run(&["sequence", "--max-n", "4"], "").1,
        "1, 2, 6, 21, 80\n"
    );
    let (_, out, _) = run(&["sequence", "--max-n", "2", "--bfile"], "");
    assert_eq!(out, "0 1\n1 2\n2 6\n");
}

#[test]
fn verify_text_and_json() {
    let (code, out, _) = run(&["verify", "--max-n", "3", "--threads", "2"], "");
    assert_eq!(code, 0);
    assert!(out.trim_end().ends_with("0 failed"), "{out}");

    let (code, out, _) = run(&["verify", "--max-n", "2", "--json"], "");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["failed"], 0);
    assert!(v["checks"].as_array().unwrap().len() > 10);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["frobnicate"], "").0, 2);
    assert_eq!(run(&["enumerate", "--family", "dyck", "--n", "2"], "").0, 2);
    let (code, _, err) = run(&["enumerate", "--family", "perm", "--n", "11"], "");
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    assert_eq!(run(&["verify", "--max-n", "99"], "").0, 2);
    let (code, out, _) = run(&["--help"], "");
    assert_eq!(code, 0);
    assert!(out.contains("enumerate"));
}
