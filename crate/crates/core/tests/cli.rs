use std::path::Path;
use std::process::Command;

use coglobe::chain::{ChainDoc, TermDoc};
use coglobe::cli::ReconstructFile;
use coglobe::coalgebra::CoalgebraMapDoc;
use coglobe::globular::{representable, GlobularBuilder};
use serde_json::Value;

fn coglobe(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_coglobe")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8"),
        String::from_utf8(out.stderr).expect("utf8"),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, stdout, stderr) = coglobe(&full);
    (code, serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{e}: {stdout} {stderr}")))
}

fn rp2() -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/rp2.json").display().to_string()
}

#[test]
fn orientals_of_the_triangle_have_eight_elements() {
    let (code, doc) = json(&["orientals", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["elements"], 8);
    assert_eq!(doc["result"]["omega"]["elements"].as_array().unwrap().len(), 8);
}

#[test]
fn compare_atoms_passes_on_the_tetrahedron() {
    let (code, doc) = json(&["compare-atoms", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["pass"], true);
}

#[test]
fn sq1_on_the_projective_plane_is_nonzero() {
    let (code, doc) = json(&["sq", "--complex", &rp2(), "--k", "1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["nonzero"], true);
    assert_eq!(doc["result"]["ranks"], serde_json::json!([1, 1, 1]));
}

#[test]
fn output_is_reproducible() {
    for args in [&["orientals", "--n", "3"][..], &["cup-i", "--n", "3", "--i", "1"], &["xi", "--n", "2", "--ring", "z"]] {
        for format in ["json", "text"] {
            let mut full = args.to_vec();
            full.extend(["--format", format]);
            assert_eq!(coglobe(&full), coglobe(&full));
        }
    }
}

#[test]
fn exit_codes() {
    assert_eq!(coglobe(&["orientals", "--n", "2", "--frobnicate"]).0, 2);
    assert_eq!(coglobe(&["no-such-verb"]).0, 2);
    assert_eq!(coglobe(&["validate-sadc", "--n", "2", "--complex", "x.json"]).0, 2);
    assert_eq!(coglobe(&["sq", "--complex", "/nonexistent.json", "--k", "1"]).0, 2);
    assert_eq!(coglobe(&["orientals", "--n", "3", "--bounds", "10,64"]).0, 3);
    assert_eq!(coglobe(&["validate-coalgebra", "--n", "2", "--ring", "z"]).0, 2);
    assert_eq!(coglobe(&["validate-sadc", "--n", "4"]).0, 0);
}

#[test]
fn a_broken_globular_set_fails_validation() {
    let mut doc = representable(2, 2).unwrap().to_doc();
    // send the target of the 2-cell somewhere non-parallel
    let x = doc.cells[2].iter().find(|c| c.as_str() == "x").unwrap().clone();
    doc.t.insert(x, doc.cells[1][0].clone());
    doc.s.insert("x".into(), doc.cells[1][1].clone());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let path = path.display().to_string();

    let (code, report) = json(&["validate-globular", "--globular", &path]);
    assert_eq!(code, 1);
    assert_eq!(report["pass"], false);
    assert!(!report["violations"].as_array().unwrap().is_empty());
    // coalgebra validation needs a valid set, and says so
    assert_eq!(coglobe(&["validate-coalgebra", "--globular", &path]).0, 1);
}

#[test]
fn globular_coalgebras_validate_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g3.json");
    std::fs::write(&path, serde_json::to_string(&representable(3, 3).unwrap().to_doc()).unwrap()).unwrap();
    let path = path.display().to_string();
    for ring in ["z", "f2"] {
        let (code, doc) = json(&["validate-coalgebra", "--globular", &path, "--ring", ring]);
        assert_eq!(code, 0, "{doc}");
    }
    let (code, doc) = json(&["xi", "--globular", &path]);
    assert_eq!(code, 0, "{doc}");
}

fn term(cell: &str) -> ChainDoc {
    ChainDoc { degree: None, terms: vec![TermDoc { cell: cell.into(), coeff: 1.into() }] }
}

#[test]
fn reconstruct_collapses_an_arrow() {
    let mut b = GlobularBuilder::new(1);
    let p = b.point("p").unwrap();
    let q = b.point("q").unwrap();
    b.cell("e", p, q).unwrap();
    let arrow = b.build().unwrap();
    let mut b = GlobularBuilder::new(1);
    b.point("z").unwrap();
    let point = b.build().unwrap();

    let images = [("p", term("z")), ("q", term("z")), ("e", ChainDoc { degree: Some(1), terms: vec![] })];
    let file = ReconstructFile {
        domain: Some(arrow.to_doc()),
        codomain: Some(point.to_doc()),
        map: CoalgebraMapDoc { images: images.into_iter().map(|(k, v)| (k.to_string(), v)).collect() },
    };
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("map.json");
    std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
    let (code, doc) = json(&["reconstruct", "--map", &path.display().to_string()]);
    assert_eq!(code, 0, "{doc}");
    assert_eq!(doc["result"]["map"][1]["e"], "1(z)");

    // p ↦ 2z is neither zero nor a basis cell
    let mut bad = file;
    bad.map.images.insert("p".into(), ChainDoc { degree: Some(0), terms: vec![TermDoc { cell: "z".into(), coeff: 2.into() }] });
    std::fs::write(&path, serde_json::to_string(&bad).unwrap()).unwrap();
    let (code, doc) = json(&["reconstruct", "--map", &path.display().to_string()]);
    assert_eq!(code, 1);
    assert_eq!(doc["pass"], false);
}

#[test]
fn cup0_of_the_triangle() {
    let (code, stdout, _) = coglobe(&["cup-i", "--n", "2", "--i", "0", "--cell", "[012]"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("[2]⊗[012] + [12]⊗[01] + [012]⊗[0]"), "{stdout}");
}

#[test]
fn text_output_is_aligned_key_value_lines() {
    let (code, stdout, _) = coglobe(&["validate-sadc", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.lines().any(|l| l.starts_with("pass") && l.ends_with("true")));
}
