use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use jspec::formats::{parse_projection, parse_tuple};
use jspec::polyalg::MultiPoly;
use jspec::FieldContext;
use tempfile::TempDir;

const DIAGONAL: &str = r#"{"projections":[
  {"matrix":{"rows":[["1","0","0"],["0","0","0"],["0","0","0"]]}},
  {"matrix":{"rows":[["0","0","0"],["0","1","0"],["0","0","0"]]}},
  {"matrix":{"rows":[["0","0","0"],["0","0","0"],["0","0","1"]]}}]}"#;

const MIXED: &str = r#"{"projections":[
  {"span":{"rows":[["1","0"],["r","0"],["0","1"]]}},
  {"span":{"rows":[["1"],["0"],["0"]]}},
  {"span":{"rows":[["1"],["1"],["0"]]}}]}"#;

const LINE_E1: &str = r#"{"span":{"rows":[["1"],["0"],["0"]]}}"#;
const LINE_11: &str = r#"{"span":{"rows":[["1"],["1"],["0"]]}}"#;
const FLIP: &str = r#"{"kind":"induced","f":"flip","B":{"rows":[["1","0","0"],["0","1","0"],["0","0","1"]]}}"#;

struct Sandbox {
    dir: TempDir,
}

impl Sandbox {
    fn new() -> Self {
        Sandbox { dir: TempDir::new().unwrap() }
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        fs::write(&p, text).unwrap();
        p
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }
}

fn jspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jspec")).args(args).output().unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn poly_of_diagonal_units() {
    let s = Sandbox::new();
    let t = s.file("t.json", DIAGONAL);
    let o = jspec(&["poly", "--tuple", p(&t)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "c1*c2*c3\n");
}

#[test]
fn membership() {
    let s = Sandbox::new();
    let t = s.file("t.json", DIAGONAL);
    let o = jspec(&["member", "--tuple", p(&t), "--point", "1,1,-2"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "not-in-spectrum\n"));
    let o = jspec(&["member", "--tuple", p(&t), "--point", "1,0,-2"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "in-spectrum\n"));
}

#[test]
fn classification_tokens() {
    let s = Sandbox::new();
    let diag = s.file("d.json", DIAGONAL);
    let mixed = s.file("m.json", MIXED);
    assert_eq!(stdout(&jspec(&["classify", "--tuple", p(&diag)])), "coordinate-hyperplanes\n");
    assert_eq!(stdout(&jspec(&["classify", "--tuple", p(&mixed)])), "hypersurface\n");
}

#[test]
fn pairs_suite_passes() {
    let o = jspec(&["verify", "--suite", "pairs", "--n", "3", "--trials", "200", "--seed", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).trim_end().ends_with("passed 200/200"), "{}", stdout(&o));
}

#[test]
fn failing_suite_exits_one_and_writes_report() {
    let s = Sandbox::new();
    let b = r#"{"kind":"induced","f":"id","B":{"rows":[["1","1","0"],["0","1","0"],["0","0","1"]]}}"#;
    let map = s.file("b.json", b);
    let report = s.path("report.json");
    let o = jspec(&[
        "verify", "--suite", "map-preserve", "--n", "3", "--k", "3", "--trials", "20", "--map", p(&map),
        "--report", p(&report),
    ]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("violation at trial"));
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["passed"], false);
    assert!(json["violations"][0]["tuple"].is_object());
}

#[test]
fn witness_exit_codes() {
    let found = jspec(&["witness", "--kind", "flip-triple", "--budget", "1000"]);
    assert_eq!(code(&found), 0);
    assert!(stdout(&found).contains("witness found after 1 candidates"));
    let absent = jspec(&["witness", "--kind", "flip-triple", "--budget", "1000", "--expect-none"]);
    assert_eq!(code(&absent), 1);

    let s = Sandbox::new();
    let swap = r#"{"kind":"unitary","U":{"rows":[["0","1","0"],["1","0","0"],["0","0","1"]]}}"#;
    let u = s.file("u.json", swap);
    let none = jspec(&["witness", "--kind", "flip-rank-one", "--budget", "40", "--map", p(&u), "--expect-none"]);
    assert_eq!(code(&none), 0);
    assert_eq!(stdout(&none), "no witness within 40 candidates\n");
}

#[test]
fn lattice_operations() {
    let s = Sandbox::new();
    let e1 = s.file("e1.json", LINE_E1);
    let l = s.file("l.json", LINE_11);
    let rank = |op: &str| stdout(&jspec(&["lattice", "--op", op, "--p", p(&e1), "--q", p(&l)]));
    assert_eq!(rank("rank"), "1\n");
    assert_eq!(rank("leq"), "false\n");
    assert_eq!(rank("orth"), "false\n");
    let join = rank("join");
    let ctx = FieldContext::default();
    let j = parse_projection(join.trim(), ctx).unwrap();
    assert_eq!(j.rank(), 2);
    assert_eq!(parse_projection(rank("meet").trim(), ctx).unwrap().rank(), 0);
    let o = jspec(&["lattice", "--op", "join", "--p", p(&e1)]);
    assert_eq!(code(&o), 2);
}

#[test]
fn printed_values_reparse() {
    let s = Sandbox::new();
    let t = s.file("t.json", MIXED);
    let ctx = FieldContext::default();
    let poly = stdout(&jspec(&["poly", "--tuple", p(&t)]));
    let parsed = MultiPoly::parse(poly.trim(), ctx, 3).unwrap();
    assert_eq!(parsed.to_string(), poly.trim());

    let map = s.file("flip.json", FLIP);
    let image = stdout(&jspec(&["map-apply", "--map", p(&map), "--tuple", p(&t)]));
    let tuple = parse_tuple(image.trim(), ctx).unwrap();
    let again = s.file("image.json", image.trim());
    let back = stdout(&jspec(&["map-apply", "--map", p(&map), "--tuple", p(&again)]));
    assert_eq!(parse_tuple(back.trim(), ctx).unwrap(), parse_tuple(MIXED, ctx).unwrap());
    assert_eq!(tuple.len(), 3);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["verify", "--suite", "map-preserve", "--n", "3", "--k", "3", "--trials", "12", "--seed", "5"];
    let a = jspec(&args);
    let b = jspec(&args);
    let mut seq = args.to_vec();
    seq.push("--sequential");
    let c = jspec(&seq);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let w1 = jspec(&["witness", "--kind", "flip-rank-one", "--budget", "5", "--seed", "9"]);
    let w2 = jspec(&["witness", "--kind", "flip-rank-one", "--budget", "5", "--seed", "9"]);
    assert_eq!(w1.stdout, w2.stdout);
}

#[test]
fn input_errors_exit_two() {
    let s = Sandbox::new();
    let t = s.file("t.json", DIAGONAL);
    let cases: Vec<(Vec<String>, &str)> = vec![
        (vec!["poly".into(), "--tuple".into(), p(&s.path("missing.json")).into()], "missing.json"),
        (vec!["poly".into(), "--tuple".into(), p(&s.file("bad.json", "{")).into()], "bad.json"),
        (
            vec![
                "poly".into(),
                "--tuple".into(),
                p(&s.file("entry.json", r#"{"projections":[{"matrix":{"rows":[["1+"]]}}]}"#)).into(),
            ],
            "entry (1, 1)",
        ),
        (
            vec![
                "poly".into(),
                "--tuple".into(),
                p(&s.file("d3.json", r#"{"projections":[{"matrix":{"d":3,"rows":[["1"]]}}]}"#)).into(),
            ],
            "d",
        ),
        (
            vec![
                "poly".into(),
                "--tuple".into(),
                p(&s.file(
                    "mixed.json",
                    r#"{"projections":[{"span":{"rows":[["1"],["0"]]}},{"span":{"rows":[["1"],["0"],["0"]]}}]}"#,
                ))
                .into(),
            ],
            "dimension",
        ),
        (vec!["member".into(), "--tuple".into(), p(&t).into(), "--point".into(), "1,x,2".into()], "coordinate 2"),
        (vec!["member".into(), "--tuple".into(), p(&t).into(), "--point".into(), "1,2".into()], ""),
        (vec!["verify".into(), "--suite".into(), "nonsense".into()], "nonsense"),
        (vec!["verify".into(), "--suite".into(), "rank-one-k".into(), "--k".into(), "2".into()], "k = 2"),
        (vec!["poly".into(), "--tuple".into(), p(&t).into(), "--bogus".into()], "--bogus"),
        (vec!["poly".into(), "--tuple".into(), p(&t).into(), "--d".into(), "4".into()], ""),
    ];
    for (args, needle) in cases {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let o = jspec(&refs);
        let err = String::from_utf8_lossy(&o.stderr);
        assert_eq!(code(&o), 2, "{args:?}: {err}");
        assert!(err.contains(needle), "{args:?}: {err}");
    }
}

#[test]
fn other_field_parameter() {
    let s = Sandbox::new();
    let t = s.file(
        "t.json",
        r#"{"projections":[{"span":{"rows":[["1"],["r"]]}},{"span":{"rows":[["1"],["0"]]}}]}"#,
    );
    let o = jspec(&["poly", "--d", "3", "--tuple", p(&t)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "3/4*c1*c2\n");
}
