//! Golden fixtures: each subcommand's standard output and exit code must
//! match the stored files byte for byte. Set `UPDATE_GOLDEN=1` to rewrite.

use std::path::PathBuf;
use std::process::Command;

use splitjac::algebra::from_canonical_text;
use splitjac::l2::derive_l2_locus;

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn run(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_splitjac"))
        .args(args)
        .env_remove("SPLITJAC_ARTIFACT_DIR")
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf-8 output"),
        out.status.code().expect("exit code"),
    )
}

fn check(name: &str, args: &[&str], code: i32) {
    let (stdout, got) = run(args);
    assert_eq!(got, code, "exit code of {args:?}; stdout:\n{stdout}");
    let path = golden_dir().join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(golden_dir()).unwrap();
        std::fs::write(&path, &stdout).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("missing fixture {}: {e}", path.display()));
    assert_eq!(stdout, want, "output of {args:?} differs from {name}");
}

#[test]
fn invariants() {
    check(
        "invariants.json",
        &["invariants", "--curve", "1,0,0,0,0,0,-1"],
        0,
    );
}

#[test]
fn invariants_with_vanishing_j2() {
    // J2 = 6c² − 240d for X⁶ + cX³ + d
    check(
        "invariants_j2_zero.json",
        &["invariants", "--curve", "1,0,0,20,0,0,10"],
        0,
    );
}

#[test]
fn analyze_with_vanishing_j2() {
    check(
        "analyze_j2_zero.json",
        &["analyze", "--curve", "1,0,0,20,0,0,10"],
        3,
    );
}

#[test]
fn analyze_unit_normal_form() {
    check(
        "analyze_s1_s2_one.json",
        &["analyze", "--curve", "1,0,-1,0,1,0,-1"],
        0,
    );
}

#[test]
fn analyze_x5_minus_x() {
    check(
        "analyze_x5_minus_x.json",
        &["analyze", "--curve", "0,1,0,0,0,-1,0"],
        0,
    );
}

#[test]
fn analyze_x6_minus_1() {
    check(
        "analyze_x6_minus_1.json",
        &["analyze", "--curve", "1,0,0,0,0,0,-1"],
        0,
    );
}

#[test]
fn analyze_two_cubic_curve() {
    check(
        "analyze_two_cubic.json",
        &["analyze", "--curve", "4,5,7,8,4,3,1"],
        0,
    );
}

#[test]
fn analyze_generic_curve() {
    check(
        "analyze_generic.json",
        &["analyze", "--curve", "1,0,0,0,0,1,1"],
        0,
    );
}

#[test]
fn analyze_singular_curve() {
    check(
        "analyze_singular.json",
        &["analyze", "--curve", "1,0,-2,0,1,0,0"],
        3,
    );
}

#[test]
fn analyze_bad_input() {
    check(
        "analyze_bad_input.json",
        &["analyze", "--curve", "1,2,x"],
        2,
    );
}

#[test]
fn l2_check() {
    check(
        "l2_check.json",
        &["l2", "check", "--curve", "1,0,-1,0,1,0,-1"],
        0,
    );
}

#[test]
fn l2_params() {
    check(
        "l2_params.json",
        &["l2", "params", "--s1", "2", "--s2", "-1/3"],
        0,
    );
}

#[test]
fn l2_params_degenerate() {
    // 27 − 18u − u² + 4v = 0 at s1 = s2 = 3
    check(
        "l2_params_degenerate.json",
        &["l2", "params", "--s1", "3", "--s2", "3"],
        3,
    );
}

#[test]
fn l2_group() {
    check(
        "l2_group.json",
        &["l2", "group", "--u", "25", "--v", "-250"],
        0,
    );
}

#[test]
fn l2_jpair() {
    check(
        "l2_jpair.json",
        &["l2", "jpair", "--u", "225", "--v", "6750"],
        0,
    );
}

#[test]
fn l2_isogeny() {
    check(
        "l2_isogeny.json",
        &["l2", "isogeny", "--u", "25", "--v", "-250", "--degree", "3"],
        0,
    );
}

#[test]
fn l2_isogeny_bad_degree() {
    check(
        "l2_isogeny_bad_degree.json",
        &["l2", "isogeny", "--u", "1", "--v", "2", "--degree", "5"],
        2,
    );
}

#[test]
fn l2_derive_locus() {
    check("l2_derive_locus.json", &["l2", "derive-locus"], 0);
}

#[test]
fn l2_derive_locus_writes_artifact() {
    let dir = std::env::temp_dir().join(format!("splitjac-artifacts-{}", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_splitjac"))
        .args(["l2", "derive-locus"])
        .env("SPLITJAC_ARTIFACT_DIR", &dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(dir.join("l2_locus.txt")).unwrap();
    let parsed = from_canonical_text(&text).unwrap();
    assert_eq!(parsed.primitive_part(), derive_l2_locus().primitive_part());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn l3_build() {
    check("l3_build.json", &["l3", "build", "--a", "1", "--b", "1"], 0);
}

#[test]
fn l3_build_b_zero() {
    check(
        "l3_build_b_zero.json",
        &["l3", "build", "--a", "2", "--b", "0"],
        0,
    );
}

#[test]
fn l3_check() {
    check(
        "l3_check.json",
        &["l3", "check", "--curve", "4,5,7,8,4,3,1"],
        0,
    );
}

#[test]
fn l3_jpair() {
    check("l3_jpair.json", &["l3", "jpair", "--u", "1", "--v", "1"], 0);
}

#[test]
fn l3_jpair_v_zero() {
    check(
        "l3_jpair_v_zero.json",
        &["l3", "jpair", "--u", "1", "--v", "0"],
        3,
    );
}

#[test]
fn l3_verify() {
    check("l3_verify.json", &["l3", "verify"], 0);
}

#[test]
fn ram_list() {
    check("ram_list_5.json", &["ram", "list", "--degree", "5"], 0);
}

#[test]
fn ram_list_text() {
    check(
        "ram_list_12.txt",
        &["ram", "list", "--degree", "12", "--text"],
        0,
    );
}

#[test]
fn hurwitz_count() {
    check(
        "hurwitz_count_5.json",
        &[
            "hurwitz",
            "count",
            "--degree",
            "5",
            "--types",
            "2.2,2^2,4,2",
        ],
        0,
    );
}

#[test]
fn hurwitz_count_orbits() {
    check(
        "hurwitz_count_3_orbits.json",
        &[
            "hurwitz", "count", "--degree", "3", "--types", "2,2,2,2", "--orbits",
        ],
        0,
    );
}

#[test]
fn hurwitz_audit_table() {
    check(
        "hurwitz_audit_table.json",
        &[
            "hurwitz",
            "count",
            "--degree",
            "5",
            "--types",
            "[2^2],[2^2],[2^2],[3]",
            "--audit-table",
        ],
        0,
    );
}

#[test]
fn verify_all() {
    check("verify_all.json", &["verify-all"], 0);
}

#[test]
fn output_is_stable_across_runs() {
    let args = [
        "hurwitz",
        "count",
        "--degree",
        "4",
        "--types",
        "2,2,2,2^2,2",
        "--orbits",
    ];
    assert_eq!(run(&args), run(&args));
}
