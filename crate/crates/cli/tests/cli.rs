use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use weylzeta::repdegrees::{zeta_coefficients, DegreeTable, GroupSpec};

fn weylzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylzeta"))
        .args(args)
        .env_remove("WEYLZETA_CACHE")
        .output()
        .expect("spawn weylzeta")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('\t')))
        .unwrap_or_else(|| panic!("no {key} in {out}"))
}

#[test]
fn dims_f4_fundamental() {
    let o = weylzeta(&["dims", "--type", "F4", "--weight", "1,0,0,0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "52");
}

#[test]
fn zeta_su2_is_one_per_dimension() {
    let o = weylzeta(&["zeta", "--group", "A1:sc", "--max-dim", "5"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "# weylzeta v1 group=A1:sc variant=zeta maxdim=5");
    assert_eq!(&lines[1..], ["1\t1", "2\t1", "3\t1", "4\t1", "5\t1"]);
}

#[test]
fn zeta_output_is_deterministic_and_matches_library() {
    let args = ["zeta", "--group", "A2xB2:adjoint", "--max-dim", "2000"];
    let a = stdout(&weylzeta(&args));
    let b = stdout(&weylzeta(&args));
    assert_eq!(a, b);
    let spec: GroupSpec = "A2xB2:adjoint".parse().unwrap();
    assert_eq!(a, zeta_coefficients(&spec, 2000).to_tsv());
}

#[test]
fn zeta_star_su2_support_is_powers_of_two() {
    let o = weylzeta(&["zeta-star", "--group", "A1", "--max-dim", "100"]);
    let t: DegreeTable = stdout(&o).parse().unwrap();
    let support: Vec<String> = t.counts.keys().map(|d| d.to_string()).collect();
    assert_eq!(support, ["1", "2", "4", "8", "16", "32", "64"]);
}

fn cache_files(dir: &Path) -> Vec<String> {
    let mut v: Vec<String> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    v.sort();
    v
}

#[test]
fn cache_is_written_and_reused_with_truncation() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let cache_s = cache.to_str().unwrap();
    let big = weylzeta(&[
        "zeta",
        "--group",
        "B2",
        "--max-dim",
        "500",
        "--cache",
        cache_s,
    ]);
    assert!(big.status.success());
    let files = cache_files(&cache);
    assert_eq!(files.len(), 1);
    let path = cache.join(&files[0]);
    let stored: DegreeTable = fs::read_to_string(&path).unwrap().parse().unwrap();
    assert_eq!(stored.bound, 500);
    assert_eq!(stored.to_tsv(), stdout(&big));

    // A doctored cache entry proves the second run reads it instead of recomputing.
    let mut doctored = stored.clone();
    *doctored.counts.values_mut().next().unwrap() = 7;
    fs::write(&path, doctored.to_tsv()).unwrap();
    let small = weylzeta(&[
        "zeta",
        "--group",
        "B2",
        "--max-dim",
        "100",
        "--cache",
        cache_s,
    ]);
    let t: DegreeTable = stdout(&small).parse().unwrap();
    assert_eq!(t.bound, 100);
    assert_eq!(t, doctored.truncated(100).unwrap());

    // A larger bound than cached forces recomputation and refreshes the entry.
    let bigger = weylzeta(&[
        "zeta",
        "--group",
        "B2",
        "--max-dim",
        "800",
        "--cache",
        cache_s,
    ]);
    let t: DegreeTable = stdout(&bigger).parse().unwrap();
    assert_eq!(t.count(1), 1);
    let stored: DegreeTable = fs::read_to_string(&path).unwrap().parse().unwrap();
    assert_eq!(stored, t);
}

#[test]
fn cache_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_weylzeta"))
        .args(["zeta", "--group", "G2:sc", "--max-dim", "100"])
        .env("WEYLZETA_CACHE", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(cache_files(dir.path()).len(), 1);
}

#[test]
fn out_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c7.tsv");
    let o = weylzeta(&[
        "zeta",
        "--group",
        "C7:adjoint",
        "--max-dim",
        "10000",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = fs::read_to_string(&out).unwrap();
    let t: DegreeTable = text.parse().unwrap();
    assert_eq!(t.group, "C7:adjoint");
    assert_eq!(t.to_tsv(), text);
}

#[test]
fn info_reports_counts_and_cartan() {
    let out = stdout(&weylzeta(&["info", "--type", "E8"]));
    assert_eq!(field(&out, "roots"), "240");
    assert_eq!(field(&out, "positive roots"), "120");
    assert_eq!(field(&out, "eff"), "7/13");
    assert_eq!(field(&out, "lev"), "63");
    let g2 = stdout(&weylzeta(&["info", "--type", "G2"]));
    assert!(g2.contains("\t2 -3\n\t-1 2\n"));
}

#[test]
fn weylpoly_explicit_and_custom() {
    let out = stdout(&weylzeta(&["weylpoly", "--type", "F4", "--eval", "2,3"]));
    assert_eq!(field(&out, "P(2)"), "52");
    assert_eq!(field(&out, "P(3)"), "340119");
    let out = stdout(&weylzeta(&[
        "weylpoly",
        "--type",
        "A2",
        "--mu",
        "1,0",
        "--nu",
        "0,1",
        "--eval=-1,0,1",
    ]));
    assert_eq!(field(&out, "coefficients"), "[3, 4, 1]");
    assert_eq!(field(&out, "deg"), "2");
    assert_eq!(field(&out, "P(1)"), "8");
}

#[test]
fn efficiency_brute_force_witness() {
    let o = weylzeta(&["efficiency", "--type", "G2", "--brute-force"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(field(&out, "eff"), "1/5");
    assert_eq!(field(&out, "brute-force eff"), "1/5");
    assert_eq!(field(&out, "witness R'"), "A1");
    assert_eq!(field(&out, "agree"), "true");
}

#[test]
fn compare_orders_types() {
    assert_eq!(
        stdout(&weylzeta(&["compare", "A3", "G2"])).trim(),
        "A3 > G2"
    );
    assert_eq!(
        stdout(&weylzeta(&["compare", "G2", "A3"])).trim(),
        "G2 < A3"
    );
    assert_eq!(
        stdout(&weylzeta(&["compare", "B4", "C4"])).trim(),
        "B4 ~ C4"
    );
}

#[test]
fn gassmann_default_construction() {
    let o = weylzeta(&["gassmann", "--n128", "--max-degree", "10000"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(field(&out, "n"), "128");
    assert_eq!(field(&out, "zeta equal"), "true");
    assert_eq!(field(&out, "permutation-equivalent"), "false");
    assert_eq!(field(&out, "irreps 1"), field(&out, "irreps 2"));
}

#[test]
fn gassmann_linear_twist_is_rejected() {
    let o = weylzeta(&[
        "gassmann",
        "--twist",
        "0,1,2,3,4,5,6,7",
        "--max-degree",
        "100",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["dims", "--type", "Q4", "--weight", "1"][..],
        &["dims", "--type", "F4", "--weight", "1,0"],
        &["dims", "--type", "A2", "--weight", "-1,0"],
        &["zeta", "--group", "A1:bogus", "--max-dim", "5"],
        &["zeta", "--group", "A1"],
        &["weylpoly", "--type", "A2", "--mu", "1,0"],
        &["efficiency", "--type", "E8", "--brute-force"],
        &["nonsense"],
    ] {
        let o = weylzeta(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    assert!(weylzeta(&["--help"]).status.success());
}

#[test]
fn verify_fast_mode_exits_zero() {
    let o = weylzeta(&["verify-paper", "--fast"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    let ledger: Vec<&str> = out.lines().filter(|l| l.starts_with('[')).collect();
    assert_eq!(ledger.len(), 10);
    assert!(ledger.iter().all(|l| !l.starts_with("[FAIL]")), "{out}");
}
