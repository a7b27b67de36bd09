//! Command-line driver: parses structure files and terms, dispatches to the
//! `bicoh` kernel and renders reports as text or as a JSON tree.

pub mod error;
pub mod load;
pub mod schema;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use bicoh::bicat::{check_bicategory, find_equivalences, is_two_category, Bicategory};
use bicoh::fincat::{check_fincat, DEFAULT_BUDGET};
use bicoh::freebicat::{
    coherence_equal, eval_two, normalize, parse_one, parse_two, two_cell_equal, Assignment, CanonicalWitness,
    OneTerm, TwoComputad, TwoTerm,
};
use bicoh::homs::build_hom_bicategory;
use bicoh::maps::{
    check_modification, check_morphism, check_transformation, classify_strength, local_property, LocalProperty,
};
use bicoh::yoneda::{check_local_equivalence_of_y, strictify, yoneda};
use bicoh::Report;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use error::CliError;
use error::Context;
use load::{Loader, Structure};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tree,
}

#[derive(Debug, Parser)]
#[command(name = "bicoh", version, about = "Check and compute with finite bicategories and free bicategories")]
pub struct Cli {
    /// Largest number of candidates any single enumeration may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Directory against which `dom`/`cod` references are resolved.
    #[arg(long, global = true)]
    pub fixture_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every axiom of the structure in a file.
    Check { file: PathBuf },
    /// Normal form of a 1-cell term, with its canonical witness.
    Normalize {
        term: String,
        #[arg(long)]
        computad: Option<PathBuf>,
    },
    /// Decide equality of two canonical 2-cell terms.
    Coheq {
        left: String,
        right: String,
        #[arg(long)]
        computad: Option<PathBuf>,
    },
    /// Decide equality of two 2-cell terms in the free bicategory.
    Eq2 {
        left: String,
        right: String,
        #[arg(long)]
        computad: Option<PathBuf>,
    },
    /// Evaluate a 2-cell term in a bicategory.
    Eval {
        term: String,
        #[arg(long)]
        bicat: PathBuf,
        #[arg(long)]
        computad: Option<PathBuf>,
        /// `NAME=CELL`, sending a computad cell to a cell of the bicategory.
        #[arg(long = "assign", value_name = "NAME=CELL")]
        assign: Vec<String>,
    },
    /// List the internal equivalences between two 0-cells.
    Equiv { file: PathBuf, a: String, b: String },
    /// Build the bicategory of homomorphisms described by a hom file.
    Hom { file: PathBuf },
    /// Strictify a bicategory through its Yoneda image.
    Strictify { file: PathBuf },
    /// Check that the Yoneda homomorphism is a local equivalence.
    Yoneda { file: PathBuf },
    /// Strength of a morphism or transformation.
    Classify { file: PathBuf },
}

/// What a command produced: a verdict and its two renderings.
struct Outcome {
    passed: bool,
    text: String,
    tree: Value,
}

impl Outcome {
    fn from_report(report: &Report, mut tree: Value) -> Outcome {
        tree["report"] = report_tree(report);
        Outcome { passed: report.passed(), text: report.to_string(), tree }
    }
}

pub fn report_tree(r: &Report) -> Value {
    json!({
        "passed": r.passed(),
        "instances": r.instances,
        "violations": r.violations().iter().map(|v| json!({
            "law": v.law,
            "at": v.at,
            "detail": v.detail,
        })).collect::<Vec<_>>(),
        "suppressed": r.suppressed(),
    })
}

/// Run the CLI on `args` (including the program name), writing the report to
/// `out`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
        }
    };
    let (code, rendered) = match execute(&cli) {
        Ok(o) => {
            let code = if o.passed { EXIT_PASS } else { EXIT_FAIL };
            match cli.format {
                Format::Text => (code, o.text),
                Format::Tree => {
                    let mut tree = o.tree;
                    tree["status"] = json!(if o.passed { "pass" } else { "fail" });
                    tree["exit"] = json!(code);
                    (code, pretty(&tree))
                }
            }
        }
        Err(e) => {
            let code = e.exit_code();
            match cli.format {
                Format::Text => (code, format!("error: {e}")),
                Format::Tree => (code, pretty(&json!({ "status": "error", "exit": code, "message": e.to_string() }))),
            }
        }
    };
    let _ = writeln!(out, "{}", rendered.trim_end());
    code
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

/// Canonical serialization of a structure file, regenerated from the parsed
/// structure.
pub fn canonical(path: &Path, fixture_dir: Option<PathBuf>) -> Result<String, CliError> {
    let loaded = Loader::new(fixture_dir).load(path)?;
    Ok(loaded.reserialize()?.to_canonical_string())
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let mut loader = Loader::new(cli.fixture_dir.clone());
    let budget = cli.budget;
    match &cli.command {
        Command::Check { file } => check(&mut loader, file, budget),
        Command::Normalize { term, computad } => {
            let t = parse_one(term).context(|| "term".into())?;
            let cd = computad_or(&mut loader, computad.as_deref(), || TwoComputad::infer(&[&t]))?;
            let (nf, w) = normalize(&t, &cd).context(|| format!("normalizing {t}"))?;
            Ok(Outcome {
                passed: true,
                text: format!("{nf}\nwitness: {}", w.term),
                tree: json!({ "verb": "normalize", "term": t.to_string(), "normal_form": nf.to_string(), "witness": w.term.to_string() }),
            })
        }
        Command::Coheq { left, right, computad } => {
            let (u, v) = (parse_two(left).context(|| "left term".into())?, parse_two(right).context(|| "right term".into())?);
            let cd = computad_or(&mut loader, computad.as_deref(), || infer_two(&[&u, &v]))?;
            let u = CanonicalWitness::new(u, &cd).context(|| "left term".into())?;
            let v = CanonicalWitness::new(v, &cd).context(|| "right term".into())?;
            let eq = coherence_equal(&u, &v).context(|| "comparing".into())?;
            let text = if eq {
                format!("equal: both {} => {}", u.src, u.dst)
            } else {
                format!("not equal: {} => {} versus {} => {}", u.src, u.dst, v.src, v.dst)
            };
            Ok(Outcome {
                passed: eq,
                text,
                tree: json!({
                    "verb": "coheq",
                    "equal": eq,
                    "left": { "src": u.src.to_string(), "dst": u.dst.to_string() },
                    "right": { "src": v.src.to_string(), "dst": v.dst.to_string() },
                }),
            })
        }
        Command::Eq2 { left, right, computad } => {
            let (u, v) = (parse_two(left).context(|| "left term".into())?, parse_two(right).context(|| "right term".into())?);
            let cd = computad_or(&mut loader, computad.as_deref(), || infer_two(&[&u, &v]))?;
            let eq = two_cell_equal(&u, &v, &cd).context(|| "comparing".into())?;
            Ok(Outcome {
                passed: eq,
                text: if eq { "equal".into() } else { "not equal".into() },
                tree: json!({ "verb": "eq2", "equal": eq }),
            })
        }
        Command::Eval { term, bicat, computad, assign } => {
            let u = parse_two(term).context(|| "term".into())?;
            let cd = computad_or(&mut loader, computad.as_deref(), || infer_two(&[&u]))?;
            let b = bicategory(&mut loader, bicat)?;
            let asg = assignment(&cd, &b, assign)?;
            let x = eval_two(&u, &cd, &b, &asg).context(|| format!("evaluating {u}"))?;
            let (name, src, dst) = (b.two_name(x), b.one_name(b.src2(x)), b.one_name(b.dst2(x)));
            Ok(Outcome {
                passed: true,
                text: format!("{name} : {src} => {dst}"),
                tree: json!({ "verb": "eval", "cell": name, "src": src, "dst": dst }),
            })
        }
        Command::Equiv { file, a, b: a2 } => {
            let b = bicategory(&mut loader, file)?;
            let zero = |n: &str| b.zero(n).ok_or_else(|| bicoh::Error::Unresolved(format!("0-cell `{n}`")));
            let (x, y) = (zero(a).context(|| "equiv".into())?, zero(a2).context(|| "equiv".into())?);
            let ws = find_equivalences(&b, x, y, budget).context(|| "enumerating equivalences".into())?;
            let rows: Vec<Value> = ws
                .iter()
                .map(|w| {
                    json!({
                        "f": b.one_name(w.f), "g": b.one_name(w.g),
                        "eta": b.two_name(w.eta), "eps": b.two_name(w.eps),
                    })
                })
                .collect();
            let mut text = format!("{} equivalences between {a} and {a2}", ws.len());
            for w in &ws {
                let line = format!(
                    "\n  f = {}, g = {}, eta = {}, eps = {}",
                    b.one_name(w.f),
                    b.one_name(w.g),
                    b.two_name(w.eta),
                    b.two_name(w.eps)
                );
                text.push_str(&line);
            }
            Ok(Outcome { passed: !ws.is_empty(), text, tree: json!({ "verb": "equiv", "equivalences": rows }) })
        }
        Command::Hom { file } => {
            let spec = match loader.load(file)?.structure {
                Structure::Hom(s) => s,
                other => return Err(expected(file, "hom", other.kind())),
            };
            let h = build_hom_bicategory(&spec, budget).context(|| format!("building {}", file.display()))?;
            let hb = &h.bicat;
            let report = check_bicategory(hb);
            let mut text = String::new();
            let mut cells = Vec::new();
            for x in hb.zero_cells() {
                for y in hb.zero_cells() {
                    let c = hb.hom(x, y);
                    let (nx, ny) = (hb.zero_name(x), hb.zero_name(y));
                    text.push_str(&format!(
                        "{nx} -> {ny}: {} transformations, {} modifications\n",
                        c.n_objects(),
                        c.n_arrows()
                    ));
                    cells.push(json!({ "src": nx, "dst": ny, "one_cells": c.n_objects(), "two_cells": c.n_arrows() }));
                }
            }
            let strict = is_two_category(hb);
            text.push_str(&format!("2-category: {}\n", if strict { "yes" } else { "no" }));
            text.push_str(&report.to_string());
            let mut o = Outcome::from_report(&report, json!({ "verb": "hom", "homs": cells, "two_category": strict }));
            o.text = text;
            Ok(o)
        }
        Command::Strictify { file } => {
            let b = bicategory(&mut loader, file)?;
            let s = strictify(&b, budget).context(|| format!("strictifying {}", file.display()))?;
            let image = s.bicategory();
            let text = format!(
                "image: {} 0-cells, {} 1-cells, {} 2-cells\n2-category: {}\nbiequivalence: {}",
                image.n_zero(),
                image.all_one_cells().len(),
                image.all_two_cells().len(),
                yes_no(s.is_two_category),
                yes_no(s.biequivalence)
            );
            Ok(Outcome {
                passed: s.is_two_category && s.biequivalence,
                text,
                tree: json!({
                    "verb": "strictify",
                    "zero_cells": image.n_zero(),
                    "one_cells": image.all_one_cells().len(),
                    "two_cells": image.all_two_cells().len(),
                    "two_category": s.is_two_category,
                    "biequivalence": s.biequivalence,
                }),
            })
        }
        Command::Yoneda { file } => {
            let b = bicategory(&mut loader, file)?;
            let pkg = yoneda(&b, budget).context(|| format!("building the Yoneda homomorphism of {}", file.display()))?;
            let r = check_local_equivalence_of_y(&pkg, budget).context(|| "checking local equivalence".into())?;
            Ok(Outcome::from_report(&r, json!({ "verb": "yoneda" })))
        }
        Command::Classify { file } => match loader.load(file)?.structure {
            Structure::Morphism(m) => {
                let strength = classify_strength(&*m);
                let props = [
                    ("faithful", LocalProperty::Faithful),
                    ("full", LocalProperty::Full),
                    ("essentially_surjective", LocalProperty::EssentiallySurjective),
                    ("equivalence", LocalProperty::Equivalence),
                ];
                let mut text = format!("strength: {strength}");
                let mut local = serde_json::Map::new();
                for (name, p) in props {
                    let v = local_property(&m, p);
                    text.push_str(&format!("\nlocally {}: {}", name.replace('_', " "), yes_no(v)));
                    local.insert(name.into(), json!(v));
                }
                Ok(Outcome {
                    passed: true,
                    text,
                    tree: json!({ "verb": "classify", "strength": strength.to_string(), "local": local }),
                })
            }
            Structure::Transformation(s) => {
                let strength = classify_strength(&*s);
                Ok(Outcome {
                    passed: true,
                    text: format!("strength: {strength}"),
                    tree: json!({ "verb": "classify", "strength": strength.to_string() }),
                })
            }
            other => Err(expected(file, "morphism or transformation", other.kind())),
        },
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn expected(file: &Path, want: &str, got: &str) -> CliError {
    CliError::Usage(format!("{}: expected a {want} file, found a {got}", file.display()))
}

fn check(loader: &mut Loader, file: &Path, budget: u64) -> Result<Outcome, CliError> {
    let loaded = loader.load(file)?;
    let kind = loaded.structure.kind();
    let report = match &loaded.structure {
        Structure::Computad(cd) => {
            let mut r = Report::new();
            for g in cd.two_gens() {
                r.expect(true, "computad.typing", || vec![g.name.clone()]);
            }
            r
        }
        Structure::Category(c) => check_fincat(c),
        Structure::Bicategory(b) => check_bicategory(b),
        Structure::Morphism(m) => check_morphism(m),
        Structure::Transformation(s) => check_transformation(s),
        Structure::Modification(m) => check_modification(m),
        Structure::Hom(spec) => {
            let h = build_hom_bicategory(spec, budget).context(|| format!("building {}", file.display()))?;
            check_bicategory(&h.bicat)
        }
    };
    Ok(Outcome::from_report(&report, json!({ "verb": "check", "kind": kind })))
}

fn bicategory(loader: &mut Loader, file: &Path) -> Result<Arc<Bicategory>, CliError> {
    match loader.load(file)?.structure {
        Structure::Bicategory(b) => Ok(b),
        other => Err(expected(file, "bicategory", other.kind())),
    }
}

fn computad_or(
    loader: &mut Loader,
    file: Option<&Path>,
    infer: impl FnOnce() -> bicoh::Result<TwoComputad>,
) -> Result<Arc<TwoComputad>, CliError> {
    match file {
        Some(f) => match loader.load(f)?.structure {
            Structure::Computad(cd) => Ok(cd),
            other => Err(expected(f, "computad", other.kind())),
        },
        None => Ok(Arc::new(infer().context(|| "inferring a computad from the terms".into())?)),
    }
}

/// Computad generated by the 1-cells a 2-cell term mentions. Generator
/// 2-cells need an explicit computad.
fn infer_two(terms: &[&TwoTerm]) -> bicoh::Result<TwoComputad> {
    let mut spines = Vec::new();
    for u in terms {
        let s = spine(u, &mut spines)?;
        spines.push(s);
    }
    TwoComputad::infer(&spines.iter().collect::<Vec<_>>())
}

/// A 1-cell term with the endpoints of `u`'s source; vertical factors other
/// than the first are recorded in `extra`.
fn spine(u: &TwoTerm, extra: &mut Vec<OneTerm>) -> bicoh::Result<OneTerm> {
    Ok(match u {
        TwoTerm::IdTwo(t) | TwoTerm::LUnit(t) | TwoTerm::RUnit(t) | TwoTerm::InvLUnit(t) | TwoTerm::InvRUnit(t) => {
            t.clone()
        }
        TwoTerm::Assoc(h, g, f) | TwoTerm::InvAssoc(h, g, f) => {
            OneTerm::comp(OneTerm::comp(h.clone(), g.clone()), f.clone())
        }
        TwoTerm::VComp(b, a) => {
            let s = spine(b, extra)?;
            extra.push(s);
            spine(a, extra)?
        }
        TwoTerm::HComp(b, a) => OneTerm::comp(spine(b, extra)?, spine(a, extra)?),
        TwoTerm::Gen(g) => {
            return Err(bicoh::Error::Unresolved(format!("generator 2-cell `{g}` (pass --computad)")));
        }
    })
}

/// Assignment from `NAME=CELL` pairs; unassigned 0-cells are read off the
/// assigned 1-cells, or default to the only 0-cell of `b`.
fn assignment(cd: &TwoComputad, b: &Bicategory, pairs: &[String]) -> Result<Assignment, CliError> {
    let names = schema::Names::of(b);
    let mut asg = Assignment::new();
    for p in pairs {
        let (name, cell) = p
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("--assign expects NAME=CELL, got `{p}`")))?;
        let (name, cell) = (name.trim(), cell.trim());
        let ctx = || format!("--assign {p}");
        if cd.has_zero(name) {
            asg = asg.zero(name, names.zero(cell).context(ctx)?);
        } else if cd.one_gen(name).is_some() {
            asg = asg.one(name, names.one(cell).context(ctx)?);
        } else if cd.two_gen(name).is_some() {
            asg = asg.two(name, names.two(cell).context(ctx)?);
        } else {
            return Err(CliError::Usage(format!("--assign: `{name}` is not a cell of the computad")));
        }
    }
    for g in cd.one_gens() {
        if let Some(f) = asg.one.get(&g.name).copied() {
            asg.zero.entry(g.src.clone()).or_insert(f.src);
            asg.zero.entry(g.dst.clone()).or_insert(f.dst);
        }
    }
    for z in cd.zero_cells() {
        if !asg.zero.contains_key(z) {
            match b.n_zero() {
                1 => asg = asg.zero(z, bicoh::bicat::ZeroId(0)),
                _ => return Err(CliError::Usage(format!("--assign: no value for 0-cell `{z}`"))),
            }
        }
    }
    asg.check(cd, b).context(|| "assignment".into())?;
    Ok(asg)
}
