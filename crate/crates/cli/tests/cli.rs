use std::path::{Path, PathBuf};

use bicoh_cli::{run, EXIT_BUDGET, EXIT_FAIL, EXIT_INPUT, EXIT_PASS};

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn bicoh(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = run(std::iter::once("bicoh").chain(args.iter().copied()), &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bicoh-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn valid_fixtures_check_clean() {
    for name in [
        "cocycle-z2.bicat.json",
        "trivial-cocycle-z2.bicat.json",
        "strict-arrow.bicat.json",
        "poset-monoid.bicat.json",
        "trivial.bicat.json",
        "empty.bicat.json",
        "z2.category.json",
        "poset2.category.json",
        "parallel-arrows.category.json",
        "two-loops.computad.json",
        "cocycle-z2-identity.morphism.json",
        "lax-point.morphism.json",
        "strict-point.morphism.json",
        "cocycle-z2-identity.transformation.json",
        "plain.transformation.json",
        "cocycle-z2-identity.modification.json",
        "cocycle-z2-self.hom.json",
    ] {
        let (code, out) = bicoh(&["check", &fixture(name)]);
        assert_eq!(code, EXIT_PASS, "{name}: {out}");
        assert!(out.starts_with("PASS"), "{name}: {out}");
    }
}

#[test]
fn flipped_associator_fails_the_pentagon() {
    let (code, out) = bicoh(&["check", &fixture("cocycle-z2-flipped.bicat.json")]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("bicategory.pentagon at (u,u,u,u)"), "{out}");
}

#[test]
fn flipped_comparison_cell_fails_the_hexagon() {
    let (code, out) = bicoh(&["check", &fixture("cocycle-z2-flipped-phi.morphism.json")]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("morphism.hexagon at (u,e,e)"), "{out}");
}

#[test]
fn tree_format_is_json_with_the_same_verdict() {
    let (code, out) = bicoh(&["--format", "tree", "check", &fixture("cocycle-z2-flipped.bicat.json")]);
    assert_eq!(code, EXIT_FAIL);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "fail");
    assert_eq!(v["exit"], 1);
    assert_eq!(v["report"]["passed"], false);
    let laws: Vec<&str> = v["report"]["violations"].as_array().unwrap().iter().map(|x| x["law"].as_str().unwrap()).collect();
    assert!(laws.iter().all(|l| *l == "bicategory.pentagon"));
}

#[test]
fn normalize_prints_the_right_nested_form() {
    let (code, out) = bicoh(&["normalize", "((h*id[B])*g)*f"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out.lines().next(), Some("(h*(g*f))"));
    assert!(out.contains("witness: "));
}

#[test]
fn coheq_decides_the_pentagon_legs() {
    let left = "(v : (h : 1[k] * a[h;g;f]) . (v : a[k;(h*g);f] . (h : a[k;h;g] * 1[f])))";
    let right = "(v : a[k;h;(g*f)] . a[(k*h);g;f])";
    assert_eq!(bicoh(&["coheq", left, right]).0, EXIT_PASS);
    assert_eq!(bicoh(&["coheq", "a[h;g;f]", "1[((h*g)*f)]"]).0, EXIT_FAIL);
    assert_eq!(bicoh(&["coheq", "l[f]", "r[f]"]).0, EXIT_FAIL);
    assert_eq!(bicoh(&["coheq", "(v : inv(l[f]) . l[f])", "1[(id[B]*f)]"]).0, EXIT_PASS);
}

#[test]
fn coheq_rejects_generator_cells() {
    let cd = fixture("two-loops.computad.json");
    let (code, out) = bicoh(&["coheq", "--computad", &cd, "p", "p"]);
    assert_eq!(code, EXIT_INPUT, "{out}");
    let (code, _) = bicoh(&["coheq", "p", "p"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn eq2_uses_interchange() {
    let cd = fixture("two-loops.computad.json");
    let a = "(v : (h : 1[(y * y)] * p) . (h : p * 1[x]))";
    let b = "(v : (h : p * 1[(y * y)]) . (h : 1[x] * p))";
    assert_eq!(bicoh(&["eq2", "--computad", &cd, a, b]).0, EXIT_PASS);
    assert_eq!(bicoh(&["eq2", "--computad", &cd, "(v : q . p)", "1[x]"]).0, EXIT_FAIL);
}

#[test]
fn eval_reads_cells_by_name() {
    let b = fixture("cocycle-z2.bicat.json");
    let (code, out) = bicoh(&["eval", "a[x;x;x]", "--bicat", &b, "--assign", "x=u"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out.trim(), "-u : u => u");
    let (_, out) = bicoh(&["eval", "a[x;x;y]", "--bicat", &b, "--assign", "x=u", "--assign", "y=e"]);
    assert_eq!(out.trim(), "+e : e => e");
    let (code, _) = bicoh(&["eval", "a[x;x;x]", "--bicat", &b, "--assign", "x=w"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn equiv_hom_strictify_yoneda_and_classify() {
    let (code, out) = bicoh(&["equiv", &fixture("strict-arrow.bicat.json"), "A", "B"]);
    assert_eq!((code, out.lines().next()), (EXIT_FAIL, Some("0 equivalences between A and B")));
    assert_eq!(bicoh(&["equiv", &fixture("cocycle-z2.bicat.json"), "*", "*"]).0, EXIT_PASS);

    let (code, out) = bicoh(&["hom", &fixture("cocycle-z2-self.hom.json")]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("id -> id: 2 transformations, 4 modifications"), "{out}");

    let (code, out) = bicoh(&["strictify", &fixture("cocycle-z2.bicat.json")]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("2-category: yes") && out.contains("biequivalence: yes"), "{out}");

    assert_eq!(bicoh(&["yoneda", &fixture("poset-monoid.bicat.json")]).0, EXIT_PASS);

    let (_, out) = bicoh(&["classify", &fixture("lax-point.morphism.json")]);
    assert!(out.starts_with("strength: lax"), "{out}");
    let (_, out) = bicoh(&["classify", &fixture("strict-point.morphism.json")]);
    assert!(out.starts_with("strength: strict"), "{out}");
    let (_, out) = bicoh(&["classify", &fixture("cocycle-z2-identity.transformation.json")]);
    assert!(out.starts_with("strength: strict"), "{out}");
    assert_eq!(bicoh(&["classify", &fixture("cocycle-z2.bicat.json")]).0, EXIT_INPUT);
}

#[test]
fn budget_exhaustion_exits_three() {
    let (code, out) = bicoh(&["--budget", "2", "strictify", &fixture("cocycle-z2.bicat.json")]);
    assert_eq!(code, EXIT_BUDGET, "{out}");
    assert!(out.contains("budget exceeded"));
    assert_eq!(bicoh(&["--budget", "1", "hom", &fixture("cocycle-z2-self.hom.json")]).0, EXIT_BUDGET);
    let (code, out) = bicoh(&["--format", "tree", "--budget", "1", "yoneda", &fixture("cocycle-z2.bicat.json")]);
    assert_eq!(code, EXIT_BUDGET);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["exit"], 3);
}

#[test]
fn parse_errors_report_line_and_column() {
    let p = scratch("truncated.json", "{\n  \"kind\": \"bicategory\",\n  \"zero_cells\": [\n");
    let (code, out) = bicoh(&["check", p.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(out.contains("truncated.json:4:0:"), "{out}");

    let p = scratch("unknown-kind.json", "{\"kind\": \"sesquicategory\"}");
    let (code, out) = bicoh(&["check", p.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(out.contains("unknown-kind.json:1:"), "{out}");

    let (code, out) = bicoh(&["normalize", "(f * g"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(out.contains("parse error at 1:"), "{out}");
}

#[test]
fn dangling_references_are_named() {
    let text = std::fs::read_to_string(fixture("cocycle-z2-identity.morphism.json")).unwrap();
    let p = scratch("dangling.morphism.json", &text.replace("\"dom\": \"cocycle-z2.bicat.json\"", "\"dom\": \"nowhere.bicat.json\""));
    let (code, out) = bicoh(&["check", p.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(out.contains("`nowhere.bicat.json`"), "{out}");

    let text = std::fs::read_to_string(fixture("cocycle-z2.bicat.json")).unwrap();
    let p = scratch("bad-cell.bicat.json", &text.replacen("\"-u\"\n    ]\n  ],\n  \"horizontal_one_cells\"", "\"-w\"\n    ]\n  ],\n  \"horizontal_one_cells\"", 1));
    assert_ne!(std::fs::read_to_string(&p).unwrap(), text);
    let (code, out) = bicoh(&["check", p.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(out.contains("associator has no entry for (u, u, u)"), "{out}");
}

#[test]
fn fixture_dir_overrides_the_referrer_directory() {
    let text = std::fs::read_to_string(fixture("cocycle-z2-identity.morphism.json")).unwrap();
    let p = scratch("elsewhere.morphism.json", &text);
    let dir = fixture("");
    assert_eq!(bicoh(&["check", p.to_str().unwrap()]).0, EXIT_INPUT);
    assert_eq!(bicoh(&["--fixture-dir", &dir, "check", p.to_str().unwrap()]).0, EXIT_PASS);
}

#[test]
fn usage_errors_exit_two_and_help_exits_zero() {
    assert_eq!(bicoh(&["frobnicate"]).0, EXIT_INPUT);
    assert_eq!(bicoh(&["check"]).0, EXIT_INPUT);
    assert_eq!(bicoh(&["--format", "yaml", "check", "x"]).0, EXIT_INPUT);
    assert_eq!(bicoh(&["--help"]).0, EXIT_PASS);
}
