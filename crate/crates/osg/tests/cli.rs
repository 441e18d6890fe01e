use std::path::Path;
use std::process::{Command, Output};

use osg::write_corpus;
use osg_core::zoo;

fn osg(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_osg"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn zoo_dir() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let text = write_corpus(&[zoo::ch2(), zoo::g2(), zoo::n2()]);
    std::fs::write(dir.path().join("zoo.osg"), text).unwrap();
    dir
}

#[test]
fn check_and_enum() {
    let dir = zoo_dir();
    let p = dir.path();
    let o = osg(
        &[
            "check",
            "--file",
            "zoo.osg",
            "--structure",
            "CH2",
            "--kind",
            "m_bi_interior",
            "--m",
            "1",
            "--subset",
            "0",
        ],
        p,
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "true");
    let o = osg(
        &[
            "enum",
            "--file",
            "zoo.osg",
            "--structure",
            "G2",
            "--kind",
            "m_left",
            "--m",
            "1",
            "--count",
        ],
        p,
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn validate_reports_line_numbers() {
    let dir = zoo_dir();
    let o = osg(&["validate", "zoo.osg"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    std::fs::write(
        dir.path().join("bad.osg"),
        "%osg 1\nname X\nsize 2\nmul\n0 0\n0 7\nleq\nend\n",
    )
    .unwrap();
    let o = osg(&["validate", "bad.osg"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 6"));
}

#[test]
fn exit_codes() {
    let dir = zoo_dir();
    let p = dir.path();
    assert_eq!(
        osg(
            &["verify", "--corpus", "zoo.osg", "--m", "1..2", "--out", "r.jsonl"],
            p
        )
        .status
        .code(),
        Some(0)
    );
    assert_eq!(
        osg(&["verify", "--corpus", "zoo.osg", "--m", "0"], p)
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        osg(&["verify", "--corpus", "missing.osg"], p).status.code(),
        Some(1)
    );
    assert_eq!(osg(&["frobnicate"], p).status.code(), Some(1));
    let bad = osg(
        &[
            "conjecture",
            "forall A in all: B <= S",
            "--corpus",
            "zoo.osg",
        ],
        p,
    );
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("1:18"));
    let fails = osg(
        &[
            "conjecture",
            "forall A in all: S <= A",
            "--corpus",
            "zoo.osg",
            "--out",
            "c.jsonl",
        ],
        p,
    );
    assert_eq!(fails.status.code(), Some(2));
    let o = osg(&["replay", "--report", "c.jsonl", "--row", "0"], p);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).contains("reproduced"));
}

#[test]
fn replay_refuses_a_changed_corpus() {
    let dir = zoo_dir();
    let p = dir.path();
    osg(
        &[
            "conjecture",
            "forall A in all: S <= A",
            "--corpus",
            "zoo.osg",
            "--out",
            "c.jsonl",
        ],
        p,
    );
    std::fs::write(p.join("zoo.osg"), write_corpus(&[zoo::ch2()])).unwrap();
    assert_eq!(
        osg(&["replay", "--report", "c.jsonl", "--row", "0"], p)
            .status
            .code(),
        Some(1)
    );
}
