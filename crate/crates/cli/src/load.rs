//! Reading structure files and resolving the files they reference.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use bicoh::bicat::Bicategory;
use bicoh::fincat::FinCat;
use bicoh::freebicat::TwoComputad;
use bicoh::homs::HomBicatSpec;
use bicoh::maps::{Modification, Morphism, Transformation};

use crate::error::{CliError, Context};
use crate::schema::*;

#[derive(Clone)]
pub enum Structure {
    Computad(Arc<TwoComputad>),
    Category(Arc<FinCat>),
    Bicategory(Arc<Bicategory>),
    Morphism(Arc<Morphism>),
    Transformation(Arc<Transformation>),
    Modification(Arc<Modification>),
    Hom(Arc<HomBicatSpec>),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Computad(_) => "computad",
            Structure::Category(_) => "category",
            Structure::Bicategory(_) => "bicategory",
            Structure::Morphism(_) => "morphism",
            Structure::Transformation(_) => "transformation",
            Structure::Modification(_) => "modification",
            Structure::Hom(_) => "hom",
        }
    }
}

/// A parsed file: its document as written and the structure it denotes.
#[derive(Clone)]
pub struct Loaded {
    pub path: PathBuf,
    pub text: String,
    pub doc: Document,
    pub structure: Structure,
}

impl Loaded {
    /// The document regenerated from the structure, with references as written.
    pub fn reserialize(&self) -> Result<Document, CliError> {
        let ctx = || format!("serializing {}", self.path.display());
        Ok(match (&self.doc, &self.structure) {
            (_, Structure::Computad(c)) => Document::Computad(computad_to_doc(c)),
            (_, Structure::Category(c)) => Document::Category(category_to_doc(c)),
            (_, Structure::Bicategory(b)) => Document::Bicategory(bicategory_to_doc(b).context(ctx)?),
            (Document::Morphism(d), Structure::Morphism(m)) => Document::Morphism(morphism_to_doc(m, &d.dom, &d.cod)),
            (Document::Transformation(d), Structure::Transformation(s)) => {
                Document::Transformation(transformation_to_doc(s, &d.dom, &d.cod))
            }
            (Document::Modification(d), Structure::Modification(m)) => {
                Document::Modification(modification_to_doc(m, &d.dom, &d.cod))
            }
            (Document::Hom(d), Structure::Hom(_)) => Document::Hom(d.clone()),
            _ => unreachable!("document and structure kinds agree"),
        })
    }
}

/// Parse JSON text into a document, reporting positions on failure.
pub fn parse_document(path: &Path, text: &str) -> Result<Document, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: e.to_string().rsplit_once(" at line ").map_or_else(|| e.to_string(), |(m, _)| m.to_string()),
    })
}

/// Loads files, resolving `dom`/`cod` references against `fixture_dir` when
/// given and otherwise against the referring file's directory.
pub struct Loader {
    fixture_dir: Option<PathBuf>,
    cache: HashMap<PathBuf, Loaded>,
    active: Vec<PathBuf>,
}

impl Loader {
    pub fn new(fixture_dir: Option<PathBuf>) -> Loader {
        Loader { fixture_dir, cache: HashMap::new(), active: Vec::new() }
    }

    pub fn load(&mut self, path: &Path) -> Result<Loaded, CliError> {
        let key = path.canonicalize().map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        if let Some(l) = self.cache.get(&key) {
            return Ok(l.clone());
        }
        if self.active.contains(&key) {
            return Err(CliError::Usage(format!("{}: reference cycle", path.display())));
        }
        self.active.push(key.clone());
        let out = self.load_uncached(path);
        self.active.pop();
        let loaded = out?;
        self.cache.insert(key, loaded.clone());
        Ok(loaded)
    }

    fn resolve(&self, from: &Path, reference: &str) -> PathBuf {
        match &self.fixture_dir {
            Some(d) => d.join(reference),
            None => from.parent().unwrap_or(Path::new(".")).join(reference),
        }
    }

    fn reference(&mut self, from: &Path, reference: &str) -> Result<Structure, CliError> {
        let p = self.resolve(from, reference);
        if !p.exists() {
            return Err(CliError::Kernel {
                context: format!("{}", from.display()),
                source: bicoh::Error::Unresolved(format!("reference `{reference}` (looked for {})", p.display())),
            });
        }
        Ok(self.load(&p)?.structure)
    }

    fn bicategory(&mut self, from: &Path, reference: &str) -> Result<Arc<Bicategory>, CliError> {
        match self.reference(from, reference)? {
            Structure::Bicategory(b) => Ok(b),
            other => Err(wrong_kind(from, reference, "bicategory", other.kind())),
        }
    }

    fn morphism(&mut self, from: &Path, reference: &str) -> Result<Arc<Morphism>, CliError> {
        match self.reference(from, reference)? {
            Structure::Morphism(m) => Ok(m),
            other => Err(wrong_kind(from, reference, "morphism", other.kind())),
        }
    }

    fn transformation(&mut self, from: &Path, reference: &str) -> Result<Arc<Transformation>, CliError> {
        match self.reference(from, reference)? {
            Structure::Transformation(s) => Ok(s),
            other => Err(wrong_kind(from, reference, "transformation", other.kind())),
        }
    }

    fn load_uncached(&mut self, path: &Path) -> Result<Loaded, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        let doc = parse_document(path, &text)?;
        let ctx = || format!("{}", path.display());
        let structure = match &doc {
            Document::Computad(d) => Structure::Computad(Arc::new(computad_from_doc(d).context(ctx)?)),
            Document::Category(d) => Structure::Category(Arc::new(category_from_doc(d).context(ctx)?)),
            Document::Bicategory(d) => Structure::Bicategory(Arc::new(bicategory_from_doc(d).context(ctx)?)),
            Document::Morphism(d) => {
                let (b, c) = (self.bicategory(path, &d.dom)?, self.bicategory(path, &d.cod)?);
                Structure::Morphism(Arc::new(morphism_from_doc(d, b, c).context(ctx)?))
            }
            Document::Transformation(d) => {
                let (f, g) = (self.morphism(path, &d.dom)?, self.morphism(path, &d.cod)?);
                Structure::Transformation(Arc::new(transformation_from_doc(d, f, g).context(ctx)?))
            }
            Document::Modification(d) => {
                let (s, t) = (self.transformation(path, &d.dom)?, self.transformation(path, &d.cod)?);
                Structure::Modification(Arc::new(modification_from_doc(d, s, t).context(ctx)?))
            }
            Document::Hom(d) => {
                let (b, c) = (self.bicategory(path, &d.dom)?, self.bicategory(path, &d.cod)?);
                let mut zero_cells = Vec::with_capacity(d.zero_cells.len());
                for [name, reference] in &d.zero_cells {
                    zero_cells.push((name.clone(), self.morphism(path, reference)?));
                }
                Structure::Hom(Arc::new(HomBicatSpec { dom: b, cod: c, zero_cells }))
            }
        };
        Ok(Loaded { path: path.to_path_buf(), text, doc, structure })
    }
}

fn wrong_kind(from: &Path, reference: &str, want: &str, got: &str) -> CliError {
    CliError::Kernel {
        context: format!("{}", from.display()),
        source: bicoh::Error::Structure(format!("reference `{reference}` is a {got}, expected a {want}")),
    }
}
