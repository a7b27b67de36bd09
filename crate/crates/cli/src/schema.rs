//! Structure documents: the JSON shapes read and written by the CLI, and
//! their conversion to and from kernel values. See `SCHEMA.md`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use bicoh::bicat::{composable_triples, Bicategory, CompTable, OneCell, TwoCell, ZeroId};
use bicoh::fincat::{ArrId, FinCat, Functor, ObjId};
use bicoh::freebicat::{parse_one, OneGen, TwoComputad, TwoGen};
use bicoh::maps::{Modification, Morphism, Transformation};
use bicoh::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Ends {
    pub src: String,
    pub dst: String,
}

type Table<const N: usize> = Vec<[String; N]>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Document {
    Computad(ComputadDoc),
    Category(CategoryDoc),
    Bicategory(BicategoryDoc),
    Morphism(MorphismDoc),
    Transformation(TransformationDoc),
    Modification(ModificationDoc),
    Hom(HomDoc),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComputadDoc {
    pub zero_cells: Vec<String>,
    pub one_cells: BTreeMap<String, Ends>,
    pub two_cells: BTreeMap<String, Ends>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    pub arrows: BTreeMap<String, Ends>,
    pub identities: BTreeMap<String, String>,
    pub composition: Table<3>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BicategoryDoc {
    pub zero_cells: Vec<String>,
    pub one_cells: BTreeMap<String, Ends>,
    pub two_cells: BTreeMap<String, Ends>,
    pub identity_one_cells: BTreeMap<String, String>,
    pub identity_two_cells: BTreeMap<String, String>,
    pub vertical: Table<3>,
    pub horizontal_one_cells: Table<3>,
    pub horizontal_two_cells: Table<3>,
    pub associator: Table<4>,
    pub left_unitor: BTreeMap<String, String>,
    pub right_unitor: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub dom: String,
    pub cod: String,
    pub objects: BTreeMap<String, String>,
    pub one_cells: BTreeMap<String, String>,
    pub two_cells: BTreeMap<String, String>,
    pub composition: Table<3>,
    pub units: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransformationDoc {
    pub dom: String,
    pub cod: String,
    pub components: BTreeMap<String, String>,
    pub naturality: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModificationDoc {
    pub dom: String,
    pub cod: String,
    pub components: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomDoc {
    pub dom: String,
    pub cod: String,
    pub zero_cells: Table<2>,
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Computad(_) => "computad",
            Document::Category(_) => "category",
            Document::Bicategory(_) => "bicategory",
            Document::Morphism(_) => "morphism",
            Document::Transformation(_) => "transformation",
            Document::Modification(_) => "modification",
            Document::Hom(_) => "hom",
        }
    }

    /// Pretty JSON with every object's keys in lexicographic order.
    pub fn to_canonical_string(&self) -> String {
        let value = serde_json::to_value(self).expect("documents serialize");
        let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
        s.push('\n');
        s
    }
}

fn unresolved(what: &str, name: &str) -> Error {
    Error::Unresolved(format!("{what} `{name}`"))
}

fn structure(msg: String) -> Error {
    Error::Structure(msg)
}

fn sorted<const N: usize>(mut t: Table<N>) -> Table<N> {
    t.sort();
    t
}

/// Global name lookup for the cells of a bicategory. Names used in more than
/// one hom-category are remembered as ambiguous.
pub struct Names<'a> {
    b: &'a Bicategory,
    one: HashMap<&'a str, Option<OneCell>>,
    two: HashMap<&'a str, Option<TwoCell>>,
}

impl<'a> Names<'a> {
    pub fn of(b: &'a Bicategory) -> Names<'a> {
        let mut one = HashMap::new();
        let mut two = HashMap::new();
        for f in b.all_one_cells() {
            one.entry(b.one_name(f)).and_modify(|v| *v = None).or_insert(Some(f));
        }
        for x in b.all_two_cells() {
            two.entry(b.two_name(x)).and_modify(|v| *v = None).or_insert(Some(x));
        }
        Names { b, one, two }
    }

    pub fn zero(&self, name: &str) -> Result<ZeroId> {
        self.b.zero(name).ok_or_else(|| unresolved("0-cell", name))
    }

    pub fn one(&self, name: &str) -> Result<OneCell> {
        match self.one.get(name) {
            Some(Some(f)) => Ok(*f),
            Some(None) => Err(structure(format!("1-cell name `{name}` is ambiguous"))),
            None => Err(unresolved("1-cell", name)),
        }
    }

    pub fn two(&self, name: &str) -> Result<TwoCell> {
        match self.two.get(name) {
            Some(Some(x)) => Ok(*x),
            Some(None) => Err(structure(format!("2-cell name `{name}` is ambiguous"))),
            None => Err(unresolved("2-cell", name)),
        }
    }

    fn unique(&self) -> Result<()> {
        if let Some((n, _)) = self.one.iter().find(|(_, v)| v.is_none()) {
            return Err(structure(format!("1-cell name `{n}` is used in two hom-categories")));
        }
        if let Some((n, _)) = self.two.iter().find(|(_, v)| v.is_none()) {
            return Err(structure(format!("2-cell name `{n}` is used in two hom-categories")));
        }
        Ok(())
    }
}

fn one_in(b: &Bicategory, a: ZeroId, c: ZeroId, name: &str) -> Result<OneCell> {
    b.one_cell(a, c, name).ok_or_else(|| {
        unresolved(&format!("1-cell from {} to {}", b.zero_name(a), b.zero_name(c)), name)
    })
}

fn two_in(b: &Bicategory, a: ZeroId, c: ZeroId, name: &str) -> Result<TwoCell> {
    b.two_cell(a, c, name).ok_or_else(|| {
        unresolved(&format!("2-cell from {} to {}", b.zero_name(a), b.zero_name(c)), name)
    })
}

fn lookup<'m>(map: &'m BTreeMap<String, String>, what: &str, key: &str) -> Result<&'m str> {
    map.get(key).map(String::as_str).ok_or_else(|| structure(format!("{what} has no entry for `{key}`")))
}

/// Every key of `map` must name something in `known`.
fn no_strays<'k>(map: impl IntoIterator<Item = &'k String>, what: &str, known: impl Fn(&str) -> bool) -> Result<()> {
    for k in map {
        if !known(k) {
            return Err(unresolved(what, k));
        }
    }
    Ok(())
}

pub fn computad_to_doc(cd: &TwoComputad) -> ComputadDoc {
    ComputadDoc {
        zero_cells: cd.zero_cells().to_vec(),
        one_cells: cd
            .one_gens()
            .iter()
            .map(|g| (g.name.clone(), Ends { src: g.src.clone(), dst: g.dst.clone() }))
            .collect(),
        two_cells: cd
            .two_gens()
            .iter()
            .map(|g| (g.name.clone(), Ends { src: g.src.to_string(), dst: g.dst.to_string() }))
            .collect(),
    }
}

pub fn computad_from_doc(d: &ComputadDoc) -> Result<TwoComputad> {
    let one = d
        .one_cells
        .iter()
        .map(|(n, e)| OneGen { name: n.clone(), src: e.src.clone(), dst: e.dst.clone() })
        .collect();
    let two = d
        .two_cells
        .iter()
        .map(|(n, e)| Ok(TwoGen { name: n.clone(), src: parse_one(&e.src)?, dst: parse_one(&e.dst)? }))
        .collect::<Result<_>>()?;
    TwoComputad::new(d.zero_cells.clone(), one, two)
}

pub fn category_to_doc(c: &FinCat) -> CategoryDoc {
    let name = |a: ArrId| c.arrow_name(a).to_string();
    let mut composition = Vec::new();
    for g in c.arrows() {
        for f in c.arrows() {
            if let Some(h) = c.compose(g, f) {
                composition.push([name(g), name(f), name(h)]);
            }
        }
    }
    CategoryDoc {
        objects: c.objects().map(|x| c.object_name(x).to_string()).collect(),
        arrows: c
            .arrows()
            .map(|a| {
                let ends = Ends { src: c.object_name(c.src(a)).into(), dst: c.object_name(c.dst(a)).into() };
                (name(a), ends)
            })
            .collect(),
        identities: c.objects().map(|x| (c.object_name(x).to_string(), name(c.identity(x)))).collect(),
        composition: sorted(composition),
    }
}

pub fn category_from_doc(d: &CategoryDoc) -> Result<FinCat> {
    FinCat::from_tables(
        d.objects.clone(),
        d.arrows.iter().map(|(n, e)| (n.clone(), e.src.clone(), e.dst.clone())).collect(),
        d.identities.iter().map(|(o, a)| (o.clone(), a.clone())).collect(),
        d.composition.iter().map(|[g, f, h]| (g.clone(), f.clone(), h.clone())).collect(),
    )
}

pub fn bicategory_to_doc(b: &Bicategory) -> Result<BicategoryDoc> {
    Names::of(b).unique()?;
    let z = |a: ZeroId| b.zero_name(a).to_string();
    let one = |f: OneCell| b.one_name(f).to_string();
    let two = |x: TwoCell| b.two_name(x).to_string();
    let mut d = BicategoryDoc {
        zero_cells: b.zero_cells().map(z).collect(),
        one_cells: BTreeMap::new(),
        two_cells: BTreeMap::new(),
        identity_one_cells: b.zero_cells().map(|a| (z(a), one(b.id1(a)))).collect(),
        identity_two_cells: BTreeMap::new(),
        vertical: vec![],
        horizontal_one_cells: vec![],
        horizontal_two_cells: vec![],
        associator: vec![],
        left_unitor: BTreeMap::new(),
        right_unitor: BTreeMap::new(),
    };
    for f in b.all_one_cells() {
        d.one_cells.insert(one(f), Ends { src: z(f.src), dst: z(f.dst) });
        d.identity_two_cells.insert(one(f), two(b.id2(f)));
        d.left_unitor.insert(one(f), two(b.lunit(f)));
        d.right_unitor.insert(one(f), two(b.runit(f)));
    }
    for x in b.all_two_cells() {
        d.two_cells.insert(two(x), Ends { src: one(b.src2(x)), dst: one(b.dst2(x)) });
        for y in b.two_cells(x.src, x.dst) {
            if b.dst2(x) == b.src2(y) {
                d.vertical.push([two(y), two(x), two(b.vcomp(y, x)?)]);
            }
        }
    }
    for f in b.all_one_cells() {
        for c in b.zero_cells() {
            for g in b.one_cells(f.dst, c) {
                d.horizontal_one_cells.push([one(g), one(f), one(b.compose1(g, f)?)]);
            }
        }
    }
    for x in b.all_two_cells() {
        for c in b.zero_cells() {
            for y in b.two_cells(x.dst, c) {
                d.horizontal_two_cells.push([two(y), two(x), two(b.hcomp(y, x)?)]);
            }
        }
    }
    for (h, g, f) in composable_triples(b) {
        d.associator.push([one(h), one(g), one(f), two(b.assoc(h, g, f)?)]);
    }
    d.vertical = sorted(d.vertical);
    d.horizontal_one_cells = sorted(d.horizontal_one_cells);
    d.horizontal_two_cells = sorted(d.horizontal_two_cells);
    d.associator = sorted(d.associator);
    Ok(d)
}

pub fn bicategory_from_doc(d: &BicategoryDoc) -> Result<Bicategory> {
    let n = d.zero_cells.len();
    let mut zero: HashMap<&str, usize> = HashMap::new();
    for (i, z) in d.zero_cells.iter().enumerate() {
        if zero.insert(z, i).is_some() {
            return Err(structure(format!("duplicate 0-cell `{z}`")));
        }
    }
    let z = |name: &str| zero.get(name).copied().ok_or_else(|| unresolved("0-cell", name));

    let mut objects: Vec<Vec<String>> = vec![vec![]; n * n];
    let mut one_hom: HashMap<&str, (usize, usize)> = HashMap::new();
    for (name, e) in &d.one_cells {
        let (a, b) = (z(&e.src)?, z(&e.dst)?);
        objects[a * n + b].push(name.clone());
        one_hom.insert(name, (a, b));
    }
    let one_at = |name: &str| one_hom.get(name).copied().ok_or_else(|| unresolved("1-cell", name));

    let mut arrows: Vec<Vec<(String, String, String)>> = vec![vec![]; n * n];
    let mut two_hom: HashMap<&str, (usize, usize)> = HashMap::new();
    for (name, e) in &d.two_cells {
        let h = one_at(&e.src)?;
        if one_at(&e.dst)? != h {
            return Err(structure(format!("2-cell `{name}` joins 1-cells with different endpoints")));
        }
        arrows[h.0 * n + h.1].push((name.clone(), e.src.clone(), e.dst.clone()));
        two_hom.insert(name, h);
    }
    let two_at = |name: &str| two_hom.get(name).copied().ok_or_else(|| unresolved("2-cell", name));

    let mut ids: Vec<Vec<(String, String)>> = vec![vec![]; n * n];
    for (f, x) in &d.identity_two_cells {
        let h = one_at(f)?;
        if two_at(x)? != h {
            return Err(structure(format!("identity of `{f}` is `{x}`, which lies in another hom-category")));
        }
        ids[h.0 * n + h.1].push((f.clone(), x.clone()));
    }
    let mut vertical: Vec<Vec<(String, String, String)>> = vec![vec![]; n * n];
    for [y, x, yx] in &d.vertical {
        let h = two_at(y)?;
        vertical[h.0 * n + h.1].push((y.clone(), x.clone(), yx.clone()));
    }
    let mut homs = Vec::with_capacity(n * n);
    for (i, ((o, a), (id, v))) in objects.into_iter().zip(arrows).zip(ids.into_iter().zip(vertical)).enumerate() {
        let cat = FinCat::from_tables(o, a, id, v).map_err(|e| {
            structure(format!("hom-category ({}, {}): {e}", d.zero_cells[i / n], d.zero_cells[i % n]))
        })?;
        homs.push(Arc::new(cat));
    }

    let mut id_one = Vec::with_capacity(n);
    for (a, name) in d.zero_cells.iter().enumerate() {
        let f = lookup(&d.identity_one_cells, "identity_one_cells", name)?;
        id_one.push(homs[a * n + a].obj(f).ok_or_else(|| {
            structure(format!("identity of `{name}` is `{f}`, which is not a loop on `{name}`"))
        })?);
    }
    no_strays(d.identity_one_cells.keys(), "0-cell", |k| zero.contains_key(k))?;

    let pairs = |t: &Table<3>| -> HashMap<(String, String), String> {
        t.iter().map(|[g, f, h]| ((g.clone(), f.clone()), h.clone())).collect()
    };
    let h1 = pairs(&d.horizontal_one_cells);
    let h2 = pairs(&d.horizontal_two_cells);
    let assoc: HashMap<(&str, &str, &str), &str> =
        d.associator.iter().map(|[h, g, f, x]| ((h.as_str(), g.as_str(), f.as_str()), x.as_str())).collect();

    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let fail = |e: Error| {
        failure.borrow_mut().get_or_insert(e);
    };
    let hom = |a: usize, b: usize| homs[a * n + b].clone();
    let parts = Bicategory::assemble(
        d.zero_cells.clone(),
        homs.clone(),
        id_one,
        |a, b, c| {
            let (left, right, out) = (hom(b, c), hom(a, b), hom(a, c));
            CompTable::build(
                &left,
                &right,
                |g, f| {
                    let key = (left.object_name(g).to_string(), right.object_name(f).to_string());
                    match h1.get(&key).and_then(|gf| out.obj(gf)) {
                        Some(x) => x,
                        None => {
                            fail(structure(format!("horizontal_one_cells has no 1-cell entry for ({}, {})", key.0, key.1)));
                            ObjId(0)
                        }
                    }
                },
                |y, x| {
                    let key = (left.arrow_name(y).to_string(), right.arrow_name(x).to_string());
                    match h2.get(&key).and_then(|yx| out.arr(yx)) {
                        Some(v) => v,
                        None => {
                            fail(structure(format!("horizontal_two_cells has no 2-cell entry for ({}, {})", key.0, key.1)));
                            ArrId(0)
                        }
                    }
                },
            )
        },
        |h, g, f| {
            let names = (
                homs[h.src.0 * n + h.dst.0].object_name(h.id),
                homs[g.src.0 * n + g.dst.0].object_name(g.id),
                homs[f.src.0 * n + f.dst.0].object_name(f.id),
            );
            match assoc.get(&names).and_then(|x| hom(f.src.0, h.dst.0).arr(x)) {
                Some(v) => v,
                None => {
                    fail(structure(format!("associator has no entry for ({}, {}, {})", names.0, names.1, names.2)));
                    ArrId(0)
                }
            }
        },
        |f| unitor(&d.left_unitor, "left_unitor", &homs[f.src.0 * n + f.dst.0], f.id, &fail),
        |f| unitor(&d.right_unitor, "right_unitor", &homs[f.src.0 * n + f.dst.0], f.id, &fail),
    );
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    parts
}

fn unitor(map: &BTreeMap<String, String>, what: &str, hom: &FinCat, f: ObjId, fail: &dyn Fn(Error)) -> ArrId {
    let name = hom.object_name(f);
    match map.get(name).and_then(|x| hom.arr(x)) {
        Some(v) => v,
        None => {
            fail(structure(format!("{what} has no 2-cell entry for `{name}`")));
            ArrId(0)
        }
    }
}

pub fn morphism_to_doc(m: &Morphism, dom: &str, cod: &str) -> MorphismDoc {
    let (b, c) = (&**m.dom(), &**m.cod());
    MorphismDoc {
        dom: dom.into(),
        cod: cod.into(),
        objects: b.zero_cells().map(|a| (b.zero_name(a).into(), c.zero_name(m.obj(a)).into())).collect(),
        one_cells: b.all_one_cells().into_iter().map(|f| (b.one_name(f).into(), c.one_name(m.one(f)).into())).collect(),
        two_cells: b.all_two_cells().into_iter().map(|x| (b.two_name(x).into(), c.two_name(m.two(x)).into())).collect(),
        composition: sorted(
            m.comp_cells()
                .into_iter()
                .map(|(g, f, x)| [b.one_name(g).into(), b.one_name(f).into(), c.two_name(x).into()])
                .collect(),
        ),
        units: b.zero_cells().map(|a| (b.zero_name(a).into(), c.two_name(m.phi_unit(a)).into())).collect(),
    }
}

pub fn morphism_from_doc(d: &MorphismDoc, dom: Arc<Bicategory>, cod: Arc<Bicategory>) -> Result<Morphism> {
    let (b, c) = (dom.clone(), cod.clone());
    let names = Names::of(&b);
    no_strays(d.objects.keys(), "0-cell", |k| b.zero(k).is_some())?;
    no_strays(d.one_cells.keys(), "1-cell", |k| names.one(k).is_ok())?;
    no_strays(d.two_cells.keys(), "2-cell", |k| names.two(k).is_ok())?;
    no_strays(d.units.keys(), "0-cell", |k| b.zero(k).is_some())?;
    let obj_map = b
        .zero_cells()
        .map(|a| {
            let t = lookup(&d.objects, "objects", b.zero_name(a))?;
            c.zero(t).ok_or_else(|| unresolved("0-cell", t))
        })
        .collect::<Result<Vec<_>>>()?;
    let fo = |a: ZeroId| obj_map[a.0];
    let comp: HashMap<(&str, &str), &str> =
        d.composition.iter().map(|[g, f, x]| ((g.as_str(), f.as_str()), x.as_str())).collect();
    Morphism::assemble(
        dom.clone(),
        cod.clone(),
        obj_map.clone(),
        |x, y| {
            let (fx, fy) = (fo(x), fo(y));
            let objs = b
                .one_cells(x, y)
                .map(|f| Ok(one_in(&c, fx, fy, lookup(&d.one_cells, "one_cells", b.one_name(f))?)?.id))
                .collect::<Result<_>>()?;
            let arrs = b
                .two_cells(x, y)
                .map(|a| Ok(two_in(&c, fx, fy, lookup(&d.two_cells, "two_cells", b.two_name(a))?)?.id))
                .collect::<Result<_>>()?;
            Functor::new(b.hom(x, y).clone(), c.hom(fx, fy).clone(), objs, arrs)
        },
        |g, f| {
            let key = (b.one_name(g), b.one_name(f));
            let x = comp
                .get(&key)
                .ok_or_else(|| structure(format!("composition has no entry for ({}, {})", key.0, key.1)))?;
            Ok(two_in(&c, fo(f.src), fo(g.dst), x)?.id)
        },
        |a| Ok(two_in(&c, fo(a), fo(a), lookup(&d.units, "units", b.zero_name(a))?)?.id),
    )
}

pub fn transformation_to_doc(s: &Transformation, dom: &str, cod: &str) -> TransformationDoc {
    let (b, c) = (&**s.base(), &**s.target());
    TransformationDoc {
        dom: dom.into(),
        cod: cod.into(),
        components: b.zero_cells().map(|a| (b.zero_name(a).into(), c.one_name(s.component(a)).into())).collect(),
        naturality: b.all_one_cells().into_iter().map(|f| (b.one_name(f).into(), c.two_name(s.at(f)).into())).collect(),
    }
}

pub fn transformation_from_doc(d: &TransformationDoc, f: Arc<Morphism>, g: Arc<Morphism>) -> Result<Transformation> {
    let (b, c) = (f.dom().clone(), f.cod().clone());
    let names = Names::of(&b);
    no_strays(d.components.keys(), "0-cell", |k| b.zero(k).is_some())?;
    no_strays(d.naturality.keys(), "1-cell", |k| names.one(k).is_ok())?;
    let one = b
        .zero_cells()
        .map(|a| Ok(one_in(&c, f.obj(a), g.obj(a), lookup(&d.components, "components", b.zero_name(a))?)?.id))
        .collect::<Result<Vec<_>>>()?;
    Transformation::assemble(f.clone(), g.clone(), one, |p| {
        let x = lookup(&d.naturality, "naturality", b.one_name(p))?;
        Ok(two_in(&c, f.obj(p.src), g.obj(p.dst), x)?.id)
    })
}

pub fn modification_to_doc(m: &Modification, dom: &str, cod: &str) -> ModificationDoc {
    let s = m.dom();
    let (b, c) = (&**s.base(), &**s.target());
    ModificationDoc {
        dom: dom.into(),
        cod: cod.into(),
        components: b.zero_cells().map(|a| (b.zero_name(a).into(), c.two_name(m.at(a)).into())).collect(),
    }
}

pub fn modification_from_doc(
    d: &ModificationDoc,
    s: Arc<Transformation>,
    t: Arc<Transformation>,
) -> Result<Modification> {
    let (b, c) = (s.base().clone(), s.target().clone());
    no_strays(d.components.keys(), "0-cell", |k| b.zero(k).is_some())?;
    let (f, g) = (s.dom().clone(), s.cod().clone());
    let comps = b
        .zero_cells()
        .map(|a| Ok(two_in(&c, f.obj(a), g.obj(a), lookup(&d.components, "components", b.zero_name(a))?)?.id))
        .collect::<Result<Vec<_>>>()?;
    Modification::new(s, t, comps)
}
