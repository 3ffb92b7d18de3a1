use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn twofun(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twofun")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

const BUNDLED: [&str; 3] = ["c6", "torus", "octahedron"];

#[test]
fn bundled_documents_match_the_generator() {
    for e in BUNDLED {
        let o = twofun(&["example", e]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), std::fs::read_to_string(data(&format!("{e}.twofun"))).unwrap(), "{e}");
    }
}

#[test]
fn bundled_documents_validate() {
    for e in BUNDLED {
        let o = twofun(&["validate", "--in", path(&data(&format!("{e}.twofun")))]);
        assert_eq!(o.status.code(), Some(0), "{e}: {}", stdout(&o));
        assert!(stdout(&o).lines().all(|l| l.starts_with('#')));
    }
}

#[test]
fn roundtrips_exit_zero_and_write_checkable_documents() {
    let dir = tempfile::tempdir().unwrap();
    for e in BUNDLED {
        let input = data(&format!("{e}.twofun"));
        for (dir_arg, name) in [("ex-rec", "D"), ("rec-ex", "F")] {
            let out = dir.path().join(format!("{e}-{dir_arg}.twofun"));
            let rep = dir.path().join(format!("{e}-{dir_arg}.txt"));
            let o = twofun(&["roundtrip", dir_arg, "--in", path(&input), "--name", name, "--out", path(&out), "--report", path(&rep)]);
            assert_eq!(o.status.code(), Some(0), "{e} {dir_arg}: {}", std::fs::read_to_string(&rep).unwrap());
            let o = twofun(&["validate", "--in", path(&out)]);
            assert_eq!(o.status.code(), Some(0), "{e} {dir_arg}: {}", stdout(&o));
        }
    }
}

#[test]
fn corrupted_associator_reports_cocycle_lines() {
    let o = twofun(&["validate", "--in", path(&data("fixtures/c6-bad-f.twofun")), "--name", "D"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert!(!lines.is_empty());
    for l in &lines {
        assert!(l.starts_with("(3)@Ψ="), "{l}");
        let parts: Vec<&str> = l.split(' ').collect();
        assert_eq!(parts.len(), 3, "{l}");
        assert!(parts[1].starts_with("lhs=") && parts[2].starts_with("rhs="), "{l}");
    }
}

#[test]
fn every_fixture_exits_one_with_violation_lines() {
    for f in std::fs::read_dir(data("fixtures")).unwrap() {
        let p = f.unwrap().path();
        let o = twofun(&["validate", "--in", path(&p)]);
        assert_eq!(o.status.code(), Some(1), "{}", p.display());
        let text = stdout(&o);
        let lines: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
        assert!(!lines.is_empty());
        for l in lines {
            let (kind, rest) = l.split_once('@').unwrap();
            assert!(!kind.is_empty() && rest.contains(" lhs=") && rest.contains(" rhs="), "{l}");
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let input = data("fixtures/c6-bad-f.twofun");
    let args = ["validate", "--in", path(&input)];
    assert_eq!(twofun(&args).stdout, twofun(&args).stdout);
}

#[test]
fn parse_and_reference_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.twofun");
    std::fs::write(&bad, "twofun 1\n\ngroup z2\n  elements = 0 1\n  mul 0 = 0 1\n  mul 1 = 1 x\n").unwrap();
    let o = twofun(&["validate", "--in", path(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 6"));
    let o = twofun(&["validate", "--in", path(&dir.path().join("missing.twofun"))]);
    assert_eq!(o.status.code(), Some(2));
    let o = twofun(&["holonomy", "--in", path(&data("c6.twofun")), "--name", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn refined_global_object_has_the_same_holonomy() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.twofun");
    let o = twofun(&["refine", "--in", path(&data("torus.twofun")), "--name", "G", "--out", path(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = twofun(&["holonomy", "--in", path(&out), "--name", "G-into-whole", "--query", "face0"]);
    assert_eq!(o.status.code(), Some(0));
    let f = twofun(&["holonomy", "--in", path(&data("torus.twofun")), "--name", "F", "--query", "face0"]);
    assert_eq!(stdout(&o).lines().last(), stdout(&f).lines().last());
}

#[test]
fn reconstruction_reports_normalization() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.twofun");
    let o = twofun(&["reconstruct", "--in", path(&data("c6.twofun")), "--name", "G", "--out", path(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("# descent G normalized: true"), "{text}");
    assert!(text.contains("# functor rec-G normalized: true"), "{text}");
    let o = twofun(&["extract", "--in", path(&out), "--name", "rec-G"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("descent ex-rec-G"));
}

#[test]
fn axioms_pass_on_bundled_targets() {
    let o = twofun(&["axioms", "--in", path(&data("c6.twofun"))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "# target T: ok\n# functor i: T -> T (identity): ok\n");
}

#[test]
fn printed_documents_reparse_byte_identically() {
    for e in BUNDLED {
        let text = std::fs::read_to_string(data(&format!("{e}.twofun"))).unwrap();
        let ws = twofun_core::format::Workspace::parse(&text).unwrap();
        assert_eq!(ws.to_string(), text);
    }
}
