use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn lgpot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lgpot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn eval() {
    let o = lgpot(&["eval", "--vars", "x,y", "--expr", "x + y + x^-1*y^-1", "--at", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"value\":\"3\"}\n");

    let o = lgpot(&["eval", "--vars", "x,y", "--expr", "x + y + x^-1*y^-1", "--at", "i,-1"]);
    assert_eq!(json(&o)["value"], "-1+2*i");

    let o = lgpot(&["eval", "--vars", "x", "--expr", "x", "--at", "0.5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--approx"));

    let o = lgpot(&["eval", "--vars", "x", "--expr", "x^2", "--at", "0.5", "--approx"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["value"]["re"], 0.25);
}

#[test]
fn pow() {
    let o = lgpot(&["pow", "--vars", "x,y", "--expr", "x + y + x^-1*y^-1", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let constant = v["result"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["exp"] == serde_json::json!([0, 0]))
        .unwrap();
    assert_eq!(constant["coeff"], "6");
}

#[test]
fn change_basis() {
    let o = lgpot(&["change-basis", "--vars", "x,y", "--expr", "x + y + x^-1*y^-1", "--matrix", "1,0;1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["rendered"], "x^-2*y^-1 + x + x*y");
    let o = lgpot(&["change-basis", "--vars", "x,y", "--expr", "x", "--matrix", "2,0;0,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn struct_const() {
    let dir = TempDir::new().unwrap();
    let fam = write(
        &dir,
        "fam.json",
        r#"{"vars":["x","y"],"W":"x+y+x^-1*y^-1",
            "higher":["1","x+y+x^-1*y^-1","(x+y+x^-1*y^-1)^2","(x+y+x^-1*y^-1)^3-6"]}"#,
    );
    let o = lgpot(&["struct-const", "--family", path(&fam), "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"k\":3,\"c\":[\"6\",\"0\",\"0\"]}\n");

    let bad = write(
        &dir,
        "bad.json",
        r#"{"vars":["x","y"],"W":"x+y+x^-1*y^-1",
            "higher":["1","x+y+x^-1*y^-1","(x+y+x^-1*y^-1)^2","(x+y+x^-1*y^-1)^3-6+x^7"]}"#,
    );
    let o = lgpot(&["struct-const", "--family", path(&bad), "--k", "3"]);
    assert_eq!(o.status.code(), Some(1));

    let o = lgpot(&["struct-const", "--family", path(&fam), "--k", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = lgpot(&["struct-const", "--family", "/nonexistent.json", "--k", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn twisted_ranks() {
    let o = lgpot(&["twisted-ranks", "--n", "2", "--lambda", "2,1"]);
    assert_eq!(stdout(&o), "{\"betti\":[0,0,0],\"acyclic\":true}\n");
    let o = lgpot(&["twisted-ranks", "--n", "2", "--lambda", "1,1"]);
    assert_eq!(stdout(&o), "{\"betti\":[1,2,1],\"acyclic\":false}\n");
    assert_eq!(o.status.code(), Some(0));
    let o = lgpot(&["twisted-ranks", "--n", "2", "--lambda", "0,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hom_and_bs_checks() {
    let dir = TempDir::new().unwrap();
    let alg = write(&dir, "alg.json", r#"{"gens":["p","q"],"inverted":"1-p*q"}"#);
    let co_l = write(&dir, "l.json", r#"{"vars":["u","v"],"images":{"p":"(u+1)*v","q":"v^-1"}}"#);
    let co_lp = write(&dir, "lp.json", r#"{"p":"v^-1","q":"(u+1)*v"}"#);
    let bad = write(&dir, "bad.json", r#"{"vars":["u","v"],"images":{"p":"u","q":"u"}}"#);

    let o = lgpot(&["hom-check", "--alg", path(&alg), "--hom", path(&co_l)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"valid\":true,\"image_of_inverted\":\"-u\"}\n");

    let o = lgpot(&["hom-check", "--alg", path(&alg), "--hom", path(&co_lp)]);
    assert_eq!(o.status.code(), Some(2));
    let o = lgpot(&["hom-check", "--alg", path(&alg), "--hom", path(&co_lp), "--target-vars", "u,v"]);
    assert_eq!(o.status.code(), Some(0));

    let o = lgpot(&["hom-check", "--alg", path(&alg), "--hom", path(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["valid"], false);

    let o = lgpot(&[
        "bs-check", "--alg", path(&alg), "--hom", path(&co_l), "--bs", "p", "--d", "1",
        "--potential", "(u+1)*v",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["holds"], true);

    let o = lgpot(&[
        "bs-check", "--alg", path(&alg), "--hom", path(&co_lp), "--target-vars", "u,v", "--bs",
        "p", "--d", "1", "--potential", "v^-1",
    ]);
    assert_eq!(o.status.code(), Some(0));

    let o = lgpot(&[
        "bs-check", "--alg", path(&alg), "--hom", path(&co_l), "--bs", "p", "--d", "1",
        "--potential", "v^-1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["holds"], false);

    let o = lgpot(&[
        "bs-check", "--alg", path(&alg), "--hom", path(&co_l), "--bs", "1", "--bs-denom-power",
        "1", "--d", "1", "--potential", "-u^-1",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn wallcross() {
    let dir = TempDir::new().unwrap();
    let phi = write(
        &dir,
        "phi.json",
        r#"[{"monomial":{"coeff":"1","exp":[1,0]}},
            {"monomial":{"coeff":"1","exp":[0,-1]},"binomial_exp":[1,0],"power":-1}]"#,
    );
    let o = lgpot(&["wallcross", "--w0", "(u+1)*v", "--w1", "v^-1", "--phi", path(&phi), "--vars", "u,v"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["holds"], true);

    let o = lgpot(&["wallcross", "--w0", "v", "--w1", "v^-1", "--phi", path(&phi), "--vars", "u,v"]);
    assert_eq!(o.status.code(), Some(1));

    let o = lgpot(&["wallcross", "--w0", "(u+1)*v", "--w1", "v^-1", "--phi", path(&phi)]);
    assert_eq!(o.status.code(), Some(2));

    let named = write(
        &dir,
        "named.json",
        r#"{"vars":["u","v"],"images":[{"monomial":{"coeff":"1","exp":[1,0]}},
            {"monomial":{"coeff":"1","exp":[0,-1]},"binomial_exp":[1,0],"power":-1}]}"#,
    );
    let o = lgpot(&["wallcross", "--w0", "(u+1)*v", "--w1", "b^-1", "--phi", path(&named), "--source-vars", "a,b"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors() {
    assert_eq!(lgpot(&[]).status.code(), Some(2));
    assert_eq!(lgpot(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(lgpot(&["pow", "--vars", "x", "--expr", "x +", "--k", "2"]).status.code(), Some(2));
    assert_eq!(lgpot(&["pow", "--vars", "x,x", "--expr", "x", "--k", "2"]).status.code(), Some(2));
    assert_eq!(lgpot(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = ["pow", "--vars", "x,y,z", "--expr", "x + 2*y - z^-1 + 1/3*i", "--k", "4"];
    let first = stdout(&lgpot(&args));
    for _ in 0..3 {
        assert_eq!(stdout(&lgpot(&args)), first);
    }
}
