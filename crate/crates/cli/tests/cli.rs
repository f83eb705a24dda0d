use std::process::{Command, Output};

const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/fixtures");

fn kmsph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmsph")).args(args).output().expect("binary runs")
}

fn fixture(name: &str) -> String {
    format!("{FIXTURES}/{name}.json")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn validate_exit_codes() {
    let ok = kmsph(&["validate", &fixture("ex_verysolv")]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("result: PASS"));

    let red = kmsph(&["validate", &fixture("ex_veryred")]);
    assert_eq!(red.status.code(), Some(1));
    assert!(stdout(&red).contains("finite-type: ABSENT"));

    let missing = kmsph(&["validate", &fixture("nope")]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn compat_warning_and_strict_mode() {
    let o = kmsph(&["validate", &fixture("ex_new")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("warning: compatibility unconfirmed for a0+a1+a2"));

    let strict = kmsph(&["validate", "--strict-compat", &fixture("ex_new")]);
    assert_eq!(strict.status.code(), Some(1));

    let reg = format!("{FIXTURES}/registry/g2_affine.json");
    let with = kmsph(&["validate", "--strict-compat", "--registry", &reg, &fixture("ex_new")]);
    assert_eq!(with.status.code(), Some(0));
}

#[test]
fn json_report_is_stable_and_matches_expected() {
    for name in ["ex_verysolv", "ex_second", "ex_second_K", "ex_conj", "ex_new", "ex_veryred"] {
        let a = stdout(&kmsph(&["validate", "--json", &fixture(name)]));
        let b = stdout(&kmsph(&["validate", "--json", &fixture(name)]));
        assert_eq!(a, b);
        let expected = std::fs::read_to_string(format!("{FIXTURES}/expected/{name}.json")).unwrap();
        assert_eq!(a, expected, "{name}");
    }
}

#[test]
fn excluding_doubled_roots_loses_the_witness() {
    let o = kmsph(&["finite-type", "--exclude-doubled-s2", &fixture("ex_second_K")]);
    assert_eq!(o.status.code(), Some(1));
    let with = kmsph(&["finite-type", &fixture("ex_second_K")]);
    assert_eq!(with.status.code(), Some(0));
    assert!(stdout(&with).contains("S2: {a0}"));
}

#[test]
fn subset_cap_is_an_explicit_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_kmsph"))
        .args(["finite-type", &fixture("ex_verysolv")])
        .env("KMSPH_MAX_SUBSETS", "8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("limit of 8"));
}

#[test]
fn classify_subsets() {
    let fin = kmsph(&["classify", "--subset", "a1,a2", &fixture("ex_new")]);
    assert_eq!(fin.status.code(), Some(0));
    assert!(stdout(&fin).contains("finite type: yes"));
    let aff = kmsph(&["classify", &fixture("ex_new")]);
    assert_eq!(aff.status.code(), Some(1));
    let bad = kmsph(&["classify", "--subset", "a7", &fixture("ex_new")]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn localize_writes_a_loadable_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("loc.json");
    let o = kmsph(&["localize", &fixture("ex_second"), "--simple-roots", "a1", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("\"color_map\""));
    let v = kmsph(&["colors", out.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
    assert_eq!(stdout(&v).lines().count(), 2);

    let face = kmsph(&["localize", &fixture("ex_verysolv"), "--spherical-roots", "0"]);
    assert_eq!(face.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&face.stderr).contains("rank drop: 1"));

    let label = kmsph(&["localize", &fixture("ex_second"), "--simple-roots", "zz"]);
    assert_eq!(label.status.code(), Some(2));
}

#[test]
fn diagram_and_reflect() {
    let d = kmsph(&["diagram", &fixture("ex_verysolv")]);
    assert_eq!(d.status.code(), Some(0));
    let golden = std::fs::read_to_string(format!("{FIXTURES}/golden/ex_verysolv.txt")).unwrap();
    assert_eq!(stdout(&d), golden);

    let tex = kmsph(&["diagram", "--format", "tex", &fixture("ex_new")]);
    assert!(stdout(&tex).contains("\\begin{picture}"));

    let r = kmsph(&["reflect", &fixture("ex_new"), "--word", "0,1,0", "--target", "0,0,1"]);
    assert_eq!(r.status.code(), Some(0));
    assert_eq!(stdout(&r).lines().next(), Some("(1,1,1)"));
}
