//! Morphisms, transformations and modifications between finite bicategories.

use std::fmt;
use std::sync::Arc;

use crate::bicat::{composable_triples, Bicategory, OneCell, TwoCell, ZeroId};
use crate::error::{Error, Result};
use crate::fincat::{
    check_functor, compose_functors, identity_functor, is_equivalence, is_essentially_surjective, is_faithful,
    is_full, same_cat, ArrId, Functor, ObjId,
};
use crate::report::Report;

pub(crate) fn same_bicat(a: &Arc<Bicategory>, b: &Arc<Bicategory>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Collects law instances. Returning `false` stops the scan.
pub(crate) trait Sink {
    fn record(&mut self, ok: bool, law: &str, at: &dyn Fn() -> Vec<String>) -> bool;
}

impl Sink for Report {
    fn record(&mut self, ok: bool, law: &str, at: &dyn Fn() -> Vec<String>) -> bool {
        self.expect(ok, law, at);
        true
    }
}

/// Stops at the first failing instance.
pub(crate) struct AllHold(pub bool);

impl Sink for AllHold {
    fn record(&mut self, ok: bool, _: &str, _: &dyn Fn() -> Vec<String>) -> bool {
        self.0 &= ok;
        ok
    }
}

fn same(l: Result<TwoCell>, r: Result<TwoCell>) -> bool {
    matches!((l, r), (Ok(l), Ok(r)) if l == r)
}

fn structure(msg: impl Into<String>) -> Error {
    Error::Structure(msg.into())
}

/// A morphism (lax functor) of bicategories `F: B -> B'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    dom: Arc<Bicategory>,
    cod: Arc<Bicategory>,
    obj_map: Vec<ZeroId>,
    hom_maps: Vec<Functor>,
    comp_cells: Vec<Vec<ArrId>>,
    unit_cells: Vec<ArrId>,
}

impl Morphism {
    /// Validate shapes and the typing of every comparison cell.
    ///
    /// `hom_maps[a*n+b]`; `comp_cells[(a*n+b)*n+c]` at `g*|hom(a,b)| + f`
    /// holds `Fg . Ff => F(g . f)`; `unit_cells[a]` holds `I => F(I_a)`.
    pub fn new(
        dom: Arc<Bicategory>,
        cod: Arc<Bicategory>,
        obj_map: Vec<ZeroId>,
        hom_maps: Vec<Functor>,
        comp_cells: Vec<Vec<ArrId>>,
        unit_cells: Vec<ArrId>,
    ) -> Result<Morphism> {
        let n = dom.n_zero();
        if obj_map.len() != n || obj_map.iter().any(|z| z.0 >= cod.n_zero()) {
            return Err(structure("object map does not cover the domain"));
        }
        if hom_maps.len() != n * n || comp_cells.len() != n * n * n || unit_cells.len() != n {
            return Err(structure("morphism tables do not match the 0-cell count"));
        }
        let m = Morphism { dom, cod, obj_map, hom_maps, comp_cells, unit_cells };
        let (b, c) = (&*m.dom, &*m.cod);
        for x in b.zero_cells() {
            for y in b.zero_cells() {
                let f = m.hom_map(x, y);
                if !same_cat(&f.dom, b.hom(x, y)) || !same_cat(&f.cod, c.hom(m.obj(x), m.obj(y))) {
                    return Err(structure(format!(
                        "functor on hom({},{}) has the wrong domain or codomain",
                        b.zero_name(x),
                        b.zero_name(y)
                    )));
                }
            }
        }
        for x in b.zero_cells() {
            for y in b.zero_cells() {
                for z in b.zero_cells() {
                    let t = &m.comp_cells[(x.0 * n + y.0) * n + z.0];
                    if t.len() != b.hom(y, z).n_objects() * b.hom(x, y).n_objects() {
                        return Err(structure("composition cell table has the wrong size"));
                    }
                    for g in b.one_cells(y, z) {
                        for f in b.one_cells(x, y) {
                            let cell = m.phi(g, f);
                            let src = c.compose1(m.one(g), m.one(f))?;
                            let dst = m.one(b.compose1(g, f)?);
                            if cell.id.0 >= c.hom(cell.src, cell.dst).n_arrows()
                                || c.src2(cell) != src
                                || c.dst2(cell) != dst
                            {
                                return Err(structure(format!(
                                    "composition cell at ({}, {}) is mistyped",
                                    b.one_name(g),
                                    b.one_name(f)
                                )));
                            }
                        }
                    }
                }
            }
        }
        for x in b.zero_cells() {
            let cell = m.phi_unit(x);
            if cell.id.0 >= c.hom(cell.src, cell.dst).n_arrows()
                || c.src2(cell) != c.id1(m.obj(x))
                || c.dst2(cell) != m.one(b.id1(x))
            {
                return Err(structure(format!("unit cell at {} is mistyped", b.zero_name(x))));
            }
        }
        Ok(m)
    }

    pub fn assemble(
        dom: Arc<Bicategory>,
        cod: Arc<Bicategory>,
        obj_map: Vec<ZeroId>,
        mut hom_map: impl FnMut(ZeroId, ZeroId) -> Result<Functor>,
        mut comp: impl FnMut(OneCell, OneCell) -> Result<ArrId>,
        mut unit: impl FnMut(ZeroId) -> Result<ArrId>,
    ) -> Result<Morphism> {
        let zs: Vec<ZeroId> = dom.zero_cells().collect();
        let mut hom_maps = Vec::with_capacity(zs.len() * zs.len());
        for &x in &zs {
            for &y in &zs {
                hom_maps.push(hom_map(x, y)?);
            }
        }
        let mut comp_cells = Vec::with_capacity(zs.len().pow(3));
        for &x in &zs {
            for &y in &zs {
                for &z in &zs {
                    let mut t = Vec::new();
                    for g in dom.one_cells(y, z) {
                        for f in dom.one_cells(x, y) {
                            t.push(comp(g, f)?);
                        }
                    }
                    comp_cells.push(t);
                }
            }
        }
        let unit_cells = zs.iter().map(|&x| unit(x)).collect::<Result<_>>()?;
        Morphism::new(dom, cod, obj_map, hom_maps, comp_cells, unit_cells)
    }

    pub fn dom(&self) -> &Arc<Bicategory> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<Bicategory> {
        &self.cod
    }

    pub fn obj(&self, a: ZeroId) -> ZeroId {
        self.obj_map[a.0]
    }

    pub fn obj_map(&self) -> &[ZeroId] {
        &self.obj_map
    }

    pub fn hom_map(&self, a: ZeroId, b: ZeroId) -> &Functor {
        &self.hom_maps[a.0 * self.dom.n_zero() + b.0]
    }

    pub fn one(&self, f: OneCell) -> OneCell {
        OneCell { src: self.obj(f.src), dst: self.obj(f.dst), id: self.hom_map(f.src, f.dst).obj(f.id) }
    }

    pub fn two(&self, x: TwoCell) -> TwoCell {
        TwoCell { src: self.obj(x.src), dst: self.obj(x.dst), id: self.hom_map(x.src, x.dst).arr(x.id) }
    }

    fn comp_slot(&self, g: OneCell, f: OneCell) -> (usize, usize) {
        debug_assert_eq!(f.dst, g.src);
        let n = self.dom.n_zero();
        let nf = self.dom.hom(f.src, f.dst).n_objects();
        ((f.src.0 * n + f.dst.0) * n + g.dst.0, g.id.0 * nf + f.id.0)
    }

    /// `phi_{g,f}: Fg . Ff => F(g . f)`.
    pub fn phi(&self, g: OneCell, f: OneCell) -> TwoCell {
        let (t, i) = self.comp_slot(g, f);
        TwoCell { src: self.obj(f.src), dst: self.obj(g.dst), id: self.comp_cells[t][i] }
    }

    /// `phi_a: I_{Fa} => F(I_a)`.
    pub fn phi_unit(&self, a: ZeroId) -> TwoCell {
        let fa = self.obj(a);
        TwoCell { src: fa, dst: fa, id: self.unit_cells[a.0] }
    }

    /// Copy with one composition cell replaced.
    pub fn with_comp_cell(&self, g: OneCell, f: OneCell, cell: ArrId) -> Result<Morphism> {
        if f.dst != g.src {
            return Err(Error::NotComposable("composition cell of non-composable 1-cells".into()));
        }
        let (t, i) = self.comp_slot(g, f);
        let mut comp_cells = self.comp_cells.clone();
        comp_cells[t][i] = cell;
        Morphism::new(
            self.dom.clone(),
            self.cod.clone(),
            self.obj_map.clone(),
            self.hom_maps.clone(),
            comp_cells,
            self.unit_cells.clone(),
        )
    }

    /// Copy with one unit cell replaced.
    pub fn with_unit_cell(&self, a: ZeroId, cell: ArrId) -> Result<Morphism> {
        let mut unit_cells = self.unit_cells.clone();
        unit_cells[a.0] = cell;
        Morphism::new(
            self.dom.clone(),
            self.cod.clone(),
            self.obj_map.clone(),
            self.hom_maps.clone(),
            self.comp_cells.clone(),
            unit_cells,
        )
    }

    /// All composition cells `(g, f, phi_{g,f})`.
    pub fn comp_cells(&self) -> Vec<(OneCell, OneCell, TwoCell)> {
        let b = &*self.dom;
        let mut out = Vec::new();
        for x in b.zero_cells() {
            for y in b.zero_cells() {
                for z in b.zero_cells() {
                    for g in b.one_cells(y, z) {
                        for f in b.one_cells(x, y) {
                            out.push((g, f, self.phi(g, f)));
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (b, c) = (&*self.dom, &*self.cod);
        writeln!(f, "morphism with {} 0-cells into {} 0-cells", b.n_zero(), c.n_zero())?;
        for x in b.zero_cells() {
            writeln!(f, "  {} -> {}", b.zero_name(x), c.zero_name(self.obj(x)))?;
        }
        for x in b.zero_cells() {
            writeln!(f, "  phi[{}] = {}", b.zero_name(x), c.two_name(self.phi_unit(x)))?;
        }
        for (g, h, cell) in self.comp_cells() {
            writeln!(f, "  phi[{},{}] = {}", b.one_name(g), b.one_name(h), c.two_name(cell))?;
        }
        Ok(())
    }
}

fn morphism_laws(m: &Morphism, sink: &mut impl Sink) {
    let (b, c) = (&*m.dom, &*m.cod);
    let zs: Vec<ZeroId> = b.zero_cells().collect();
    for &x in &zs {
        for &y in &zs {
            for &z in &zs {
                for al in b.two_cells(x, y) {
                    for be in b.two_cells(y, z) {
                        let (f, f2, g, g2) = (b.src2(al), b.dst2(al), b.src2(be), b.dst2(be));
                        let lhs = c.hcomp(m.two(be), m.two(al)).and_then(|h| c.vcomp(m.phi(g2, f2), h));
                        let rhs = b.hcomp(be, al).and_then(|h| c.vcomp(m.two(h), m.phi(g, f)));
                        if !sink.record(same(lhs, rhs), "morphism.naturality", &|| {
                            vec![b.two_name(be).into(), b.two_name(al).into()]
                        }) {
                            return;
                        }
                    }
                }
            }
        }
    }
    for (h, g, f) in composable_triples(b) {
        let (fh, fg, ff) = (m.one(h), m.one(g), m.one(f));
        let hg = b.compose1(h, g).expect("composable");
        let gf = b.compose1(g, f).expect("composable");
        let lhs = (|| {
            c.vpath(&[
                c.hcomp(m.phi(h, g), c.id2(ff))?,
                m.phi(hg, f),
                m.two(b.assoc(h, g, f)?),
            ])
        })();
        let rhs = (|| c.vpath(&[c.assoc(fh, fg, ff)?, c.hcomp(c.id2(fh), m.phi(g, f))?, m.phi(h, gf)]))();
        if !sink.record(same(lhs, rhs), "morphism.hexagon", &|| {
            vec![b.one_name(h).into(), b.one_name(g).into(), b.one_name(f).into()]
        }) {
            return;
        }
    }
    for f in b.all_one_cells() {
        let ff = m.one(f);
        let (ia, ib) = (b.id1(f.src), b.id1(f.dst));
        let left = (|| {
            c.vpath(&[c.hcomp(m.phi_unit(f.dst), c.id2(ff))?, m.phi(ib, f), m.two(b.lunit(f))])
        })();
        if !sink.record(same(Ok(c.lunit(ff)), left), "morphism.left-unit", &|| vec![b.one_name(f).into()]) {
            return;
        }
        let right = (|| {
            c.vpath(&[c.hcomp(c.id2(ff), m.phi_unit(f.src))?, m.phi(f, ia), m.two(b.runit(f))])
        })();
        if !sink.record(same(Ok(c.runit(ff)), right), "morphism.right-unit", &|| vec![b.one_name(f).into()]) {
            return;
        }
    }
}

fn hom_functor_report(m: &Morphism) -> Report {
    let b = &*m.dom;
    let mut rep = Report::new();
    for x in b.zero_cells() {
        for y in b.zero_cells() {
            rep.absorb(
                check_functor(m.hom_map(x, y)),
                &format!("F({},{})", b.zero_name(x), b.zero_name(y)),
            );
        }
    }
    rep
}

pub fn check_morphism(m: &Morphism) -> Report {
    let mut rep = hom_functor_report(m);
    if rep.passed() {
        morphism_laws(m, &mut rep);
    }
    rep
}

pub(crate) fn morphism_holds(m: &Morphism) -> bool {
    if !hom_functor_report(m).passed() {
        return false;
    }
    let mut s = AllHold(true);
    morphism_laws(m, &mut s);
    s.0
}

/// A transformation `sigma: F => G` with components `sigma_a: Fa -> Ga` and
/// `sigma_f: Gf . sigma_a => sigma_b . Ff`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transformation {
    dom: Arc<Morphism>,
    cod: Arc<Morphism>,
    one: Vec<ObjId>,
    two: Vec<Vec<ArrId>>,
}

impl Transformation {
    /// Unvalidated; callers guarantee typing.
    pub(crate) fn raw(dom: Arc<Morphism>, cod: Arc<Morphism>, one: Vec<ObjId>, two: Vec<Vec<ArrId>>) -> Transformation {
        Transformation { dom, cod, one, two }
    }

    /// `one[a]` is `sigma_a`; `two[a*n+b][f]` is `sigma_f`.
    pub fn new(dom: Arc<Morphism>, cod: Arc<Morphism>, one: Vec<ObjId>, two: Vec<Vec<ArrId>>) -> Result<Transformation> {
        if !same_bicat(&dom.dom, &cod.dom) || !same_bicat(&dom.cod, &cod.cod) {
            return Err(Error::Mismatch("transformation between non-parallel morphisms".into()));
        }
        let b = dom.dom.clone();
        let n = b.n_zero();
        if one.len() != n || two.len() != n * n {
            return Err(structure("transformation tables do not match the 0-cell count"));
        }
        let s = Transformation { dom, cod, one, two };
        let c = &*s.dom.cod;
        for x in b.zero_cells() {
            if s.one[x.0].0 >= c.hom(s.dom.obj(x), s.cod.obj(x)).n_objects() {
                return Err(structure(format!("component at {} is out of range", b.zero_name(x))));
            }
        }
        for x in b.zero_cells() {
            for y in b.zero_cells() {
                if s.two[x.0 * n + y.0].len() != b.hom(x, y).n_objects() {
                    return Err(structure("transformation 2-cell table has the wrong size"));
                }
                for f in b.one_cells(x, y) {
                    let cell = s.at(f);
                    let src = c.compose1(s.cod.one(f), s.component(x))?;
                    let dst = c.compose1(s.component(y), s.dom.one(f))?;
                    if cell.id.0 >= c.hom(cell.src, cell.dst).n_arrows() || c.src2(cell) != src || c.dst2(cell) != dst {
                        return Err(structure(format!("component at {} is mistyped", b.one_name(f))));
                    }
                }
            }
        }
        Ok(s)
    }

    pub fn assemble(
        dom: Arc<Morphism>,
        cod: Arc<Morphism>,
        one: Vec<ObjId>,
        mut two: impl FnMut(OneCell) -> Result<ArrId>,
    ) -> Result<Transformation> {
        let b = dom.dom.clone();
        let mut cells = Vec::new();
        for x in b.zero_cells() {
            for y in b.zero_cells() {
                cells.push(b.one_cells(x, y).map(&mut two).collect::<Result<Vec<_>>>()?);
            }
        }
        Transformation::new(dom, cod, one, cells)
    }

    pub fn dom(&self) -> &Arc<Morphism> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<Morphism> {
        &self.cod
    }

    pub fn base(&self) -> &Arc<Bicategory> {
        &self.dom.dom
    }

    pub fn target(&self) -> &Arc<Bicategory> {
        &self.dom.cod
    }

    /// `sigma_a`.
    pub fn component(&self, a: ZeroId) -> OneCell {
        OneCell { src: self.dom.obj(a), dst: self.cod.obj(a), id: self.one[a.0] }
    }

    /// `sigma_f`.
    pub fn at(&self, f: OneCell) -> TwoCell {
        let n = self.dom.dom.n_zero();
        TwoCell { src: self.dom.obj(f.src), dst: self.cod.obj(f.dst), id: self.two[f.src.0 * n + f.dst.0][f.id.0] }
    }

    pub fn one_components(&self) -> &[ObjId] {
        &self.one
    }

    pub fn two_components(&self) -> &[Vec<ArrId>] {
        &self.two
    }
}

fn transformation_laws(s: &Transformation, sink: &mut impl Sink) {
    let (b, c) = (&**s.base(), &**s.target());
    let (fm, gm) = (&*s.dom, &*s.cod);
    for al in b.all_two_cells() {
        let (f, f2) = (b.src2(al), b.dst2(al));
        let (sa, sb) = (s.component(al.src), s.component(al.dst));
        let lhs = c.hcomp(gm.two(al), c.id2(sa)).and_then(|h| c.vcomp(s.at(f2), h));
        let rhs = c.hcomp(c.id2(sb), fm.two(al)).and_then(|h| c.vcomp(h, s.at(f)));
        if !sink.record(same(lhs, rhs), "transformation.naturality", &|| vec![b.two_name(al).into()]) {
            return;
        }
    }
    for f in b.all_one_cells() {
        for z in b.zero_cells() {
            for g in b.one_cells(f.dst, z) {
                let ok = (|| -> Result<bool> {
                    let (sa, sb, sc) = (s.component(f.src), s.component(f.dst), s.component(z));
                    let (gf_, gg) = (gm.one(f), gm.one(g));
                    let (ff, fg) = (fm.one(f), fm.one(g));
                    let gf = b.compose1(g, f)?;
                    let five = [
                        c.assoc(gg, gf_, sa)?,
                        c.hcomp(c.id2(gg), s.at(f))?,
                        c.inverse_or_err(c.assoc(gg, sb, ff)?)?,
                        c.hcomp(s.at(g), c.id2(ff))?,
                        c.assoc(sc, fg, ff)?,
                        c.hcomp(c.id2(sc), fm.phi(g, f))?,
                    ];
                    let lhs = c.vpath(&five)?;
                    let rhs = c.vpath(&[c.hcomp(gm.phi(g, f), c.id2(sa))?, s.at(gf)])?;
                    Ok(lhs == rhs)
                })()
                .unwrap_or(false);
                if !sink.record(ok, "transformation.composite", &|| vec![b.one_name(g).into(), b.one_name(f).into()]) {
                    return;
                }
            }
        }
    }
    for x in b.zero_cells() {
        let ok = (|| -> Result<bool> {
            let sa = s.component(x);
            let lhs = c.vpath(&[c.lunit(sa), c.inverse_or_err(c.runit(sa))?, c.hcomp(c.id2(sa), fm.phi_unit(x))?])?;
            let rhs = c.vpath(&[c.hcomp(gm.phi_unit(x), c.id2(sa))?, s.at(b.id1(x))])?;
            Ok(lhs == rhs)
        })()
        .unwrap_or(false);
        if !sink.record(ok, "transformation.unit", &|| vec![b.zero_name(x).into()]) {
            return;
        }
    }
}

pub fn check_transformation(s: &Transformation) -> Report {
    let mut rep = Report::new();
    transformation_laws(s, &mut rep);
    rep
}

pub(crate) fn transformation_holds(s: &Transformation) -> bool {
    let mut k = AllHold(true);
    transformation_laws(s, &mut k);
    k.0
}

/// A modification `Gamma: sigma => sigma~` with components `sigma_a => sigma~_a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modification {
    dom: Arc<Transformation>,
    cod: Arc<Transformation>,
    comps: Vec<ArrId>,
}

impl Modification {
    pub(crate) fn raw(dom: Arc<Transformation>, cod: Arc<Transformation>, comps: Vec<ArrId>) -> Modification {
        Modification { dom, cod, comps }
    }

    pub fn new(dom: Arc<Transformation>, cod: Arc<Transformation>, comps: Vec<ArrId>) -> Result<Modification> {
        if dom.dom != cod.dom || dom.cod != cod.cod {
            return Err(Error::Mismatch("modification between non-parallel transformations".into()));
        }
        let b = dom.base().clone();
        if comps.len() != b.n_zero() {
            return Err(structure("modification table does not match the 0-cell count"));
        }
        let m = Modification { dom, cod, comps };
        let c = &**m.dom.target();
        for x in b.zero_cells() {
            let cell = m.at(x);
            if cell.id.0 >= c.hom(cell.src, cell.dst).n_arrows()
                || c.src2(cell) != m.dom.component(x)
                || c.dst2(cell) != m.cod.component(x)
            {
                return Err(structure(format!("modification component at {} is mistyped", b.zero_name(x))));
            }
        }
        Ok(m)
    }

    pub fn dom(&self) -> &Arc<Transformation> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<Transformation> {
        &self.cod
    }

    pub fn at(&self, a: ZeroId) -> TwoCell {
        let s = self.dom.component(a);
        TwoCell { src: s.src, dst: s.dst, id: self.comps[a.0] }
    }

    pub fn components(&self) -> &[ArrId] {
        &self.comps
    }
}

fn modification_laws(m: &Modification, sink: &mut impl Sink) {
    let (b, c) = (&**m.dom.base(), &**m.dom.target());
    let (s, t) = (&*m.dom, &*m.cod);
    for f in b.all_one_cells() {
        let lhs = c.hcomp(c.id2(s.cod.one(f)), m.at(f.src)).and_then(|h| c.vcomp(t.at(f), h));
        let rhs = c.hcomp(m.at(f.dst), c.id2(s.dom.one(f))).and_then(|h| c.vcomp(h, s.at(f)));
        if !sink.record(same(lhs, rhs), "modification.axiom", &|| vec![b.one_name(f).into()]) {
            return;
        }
    }
}

pub fn check_modification(m: &Modification) -> Report {
    let mut rep = Report::new();
    modification_laws(m, &mut rep);
    rep
}

pub(crate) fn modification_holds(m: &Modification) -> bool {
    let mut k = AllHold(true);
    modification_laws(m, &mut k);
    k.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Strength {
    Lax,
    Iso,
    Strict,
}

impl fmt::Display for Strength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strength::Lax => "lax",
            Strength::Iso => "iso",
            Strength::Strict => "strict",
        })
    }
}

/// Anything whose strength is read off its comparison 2-cells.
pub trait Comparison {
    fn comparison_cells(&self) -> Vec<TwoCell>;
    fn target_bicategory(&self) -> &Bicategory;
}

impl Comparison for Morphism {
    fn comparison_cells(&self) -> Vec<TwoCell> {
        let mut out: Vec<TwoCell> = self.comp_cells().into_iter().map(|(_, _, c)| c).collect();
        out.extend(self.dom.zero_cells().map(|a| self.phi_unit(a)));
        out
    }

    fn target_bicategory(&self) -> &Bicategory {
        &self.cod
    }
}

impl Comparison for Transformation {
    fn comparison_cells(&self) -> Vec<TwoCell> {
        self.base().all_one_cells().into_iter().map(|f| self.at(f)).collect()
    }

    fn target_bicategory(&self) -> &Bicategory {
        self.target()
    }
}

pub fn classify_strength<T: Comparison + ?Sized>(x: &T) -> Strength {
    let c = x.target_bicategory();
    let cells = x.comparison_cells();
    if cells.iter().all(|&k| c.is_identity2(k)) {
        Strength::Strict
    } else if cells.iter().all(|&k| c.is_iso(k)) {
        Strength::Iso
    } else {
        Strength::Lax
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocalProperty {
    Faithful,
    Full,
    EssentiallySurjective,
    Equivalence,
}

pub fn local_property(m: &Morphism, p: LocalProperty) -> bool {
    let b = &*m.dom;
    let test: fn(&Functor) -> bool = match p {
        LocalProperty::Faithful => is_faithful,
        LocalProperty::Full => is_full,
        LocalProperty::EssentiallySurjective => is_essentially_surjective,
        LocalProperty::Equivalence => is_equivalence,
    };
    b.zero_cells().all(|x| b.zero_cells().all(|y| test(m.hom_map(x, y))))
}

pub fn identity_morphism(b: &Arc<Bicategory>) -> Morphism {
    Morphism::assemble(
        b.clone(),
        b.clone(),
        b.zero_cells().collect(),
        |x, y| Ok(identity_functor(b.hom(x, y))),
        |g, f| Ok(b.id2(b.compose1(g, f)?).id),
        |x| Ok(b.id2(b.id1(x)).id),
    )
    .expect("identity data is well typed")
}

/// `G . F`, with `chi_{g,f} = G(phi_{g,f}) . psi_{Fg,Ff}` and
/// `chi_a = G(phi_a) . psi_{Fa}`.
pub fn compose_morphisms(g: &Morphism, f: &Morphism) -> Result<Morphism> {
    if !same_bicat(&f.cod, &g.dom) {
        return Err(Error::Mismatch("codomain of the inner morphism is not the domain of the outer".into()));
    }
    let c = &*g.cod;
    Morphism::assemble(
        f.dom.clone(),
        g.cod.clone(),
        f.obj_map.iter().map(|&x| g.obj(x)).collect(),
        |x, y| compose_functors(g.hom_map(f.obj(x), f.obj(y)), f.hom_map(x, y)),
        |k, h| Ok(c.vcomp(g.two(f.phi(k, h)), g.phi(f.one(k), f.one(h)))?.id),
        |x| Ok(c.vcomp(g.two(f.phi_unit(x)), g.phi_unit(f.obj(x)))?.id),
    )
}

/// `sigma_a = I`, `sigma_f = l^-1 . r` at `Ff`.
pub fn identity_transformation(f: &Arc<Morphism>) -> Transformation {
    let c = f.cod.clone();
    Transformation::assemble(
        f.clone(),
        f.clone(),
        f.dom.zero_cells().map(|x| c.id1(f.obj(x)).id).collect(),
        |h| {
            let fh = f.one(h);
            Ok(c.vcomp(c.inverse_or_err(c.lunit(fh))?, c.runit(fh))?.id)
        },
    )
    .expect("identity transformation is well typed")
}

/// `tau . sigma` for `sigma: F => G`, `tau: G => H`.
pub fn compose_transformations(tau: &Transformation, sigma: &Transformation) -> Result<Transformation> {
    if sigma.cod != tau.dom {
        return Err(Error::Mismatch("transformations are not composable".into()));
    }
    let c = sigma.target().clone();
    let (fm, gm, hm) = (&sigma.dom, &sigma.cod, &tau.cod);
    let one = sigma
        .base()
        .zero_cells()
        .map(|x| c.compose1(tau.component(x), sigma.component(x)).map(|k| k.id))
        .collect::<Result<Vec<_>>>()?;
    Transformation::assemble(sigma.dom.clone(), tau.cod.clone(), one, |f| {
        let (sa, sb) = (sigma.component(f.src), sigma.component(f.dst));
        let (ta, tb) = (tau.component(f.src), tau.component(f.dst));
        let (ff, gf, hf) = (fm.one(f), gm.one(f), hm.one(f));
        let path = [
            c.inverse_or_err(c.assoc(hf, ta, sa)?)?,
            c.hcomp(tau.at(f), c.id2(sa))?,
            c.assoc(tb, gf, sa)?,
            c.hcomp(c.id2(tb), sigma.at(f))?,
            c.inverse_or_err(c.assoc(tb, sb, ff)?)?,
        ];
        Ok(c.vpath(&path)?.id)
    })
}

pub fn identity_modification(s: &Arc<Transformation>) -> Modification {
    let c = s.target().clone();
    let comps = s.base().zero_cells().map(|x| c.id2(s.component(x)).id).collect();
    Modification::new(s.clone(), s.clone(), comps).expect("identity modification is well typed")
}

/// `delta . gamma` componentwise.
pub fn vcomp_modifications(delta: &Modification, gamma: &Modification) -> Result<Modification> {
    if gamma.cod != delta.dom {
        return Err(Error::Mismatch("modifications are not vertically composable".into()));
    }
    let c = gamma.dom.target().clone();
    let comps = gamma
        .dom
        .base()
        .zero_cells()
        .map(|x| c.vcomp(delta.at(x), gamma.at(x)).map(|k| k.id))
        .collect::<Result<Vec<_>>>()?;
    Modification::new(gamma.dom.clone(), delta.cod.clone(), comps)
}

/// `delta * gamma` componentwise, between composite transformations.
pub fn hcomp_modifications(delta: &Modification, gamma: &Modification) -> Result<Modification> {
    let dom = Arc::new(compose_transformations(&delta.dom, &gamma.dom)?);
    let cod = Arc::new(compose_transformations(&delta.cod, &gamma.cod)?);
    let c = gamma.dom.target().clone();
    let comps = gamma
        .dom
        .base()
        .zero_cells()
        .map(|x| c.hcomp(delta.at(x), gamma.at(x)).map(|k| k.id))
        .collect::<Result<Vec<_>>>()?;
    Modification::new(dom, cod, comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{cocycle_z2, poset_monoid, strict_arrow_2cat, trivial_bicategory, trivial_cocycle_z2};

    fn u(b: &Bicategory, name: &str) -> OneCell {
        let a = ZeroId(0);
        b.one_cell(a, a, name).unwrap()
    }

    fn two(b: &Bicategory, name: &str) -> TwoCell {
        let a = ZeroId(0);
        b.two_cell(a, a, name).unwrap()
    }

    #[test]
    fn identity_morphism_passes_and_is_strict() {
        for b in [cocycle_z2(), strict_arrow_2cat(), poset_monoid()] {
            let b = Arc::new(b);
            let id = identity_morphism(&b);
            let rep = check_morphism(&id);
            assert!(rep.passed(), "{rep}");
            assert_eq!(classify_strength(&id), Strength::Strict);
            for p in [
                LocalProperty::Faithful,
                LocalProperty::Full,
                LocalProperty::EssentiallySurjective,
                LocalProperty::Equivalence,
            ] {
                assert!(local_property(&id, p));
            }
            let it = identity_transformation(&Arc::new(id));
            let rep = check_transformation(&it);
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn flipped_composition_cell_breaks_the_hexagon() {
        let b = Arc::new(cocycle_z2());
        let id = identity_morphism(&b);
        let (uu, e) = (u(&b, "u"), u(&b, "e"));
        let bad = id.with_comp_cell(uu, e, two(&b, "-u").id).unwrap();
        let rep = check_morphism(&bad);
        assert!(rep.has_violation_at("morphism.hexagon", &["u", "e", "e"]), "{rep}");
        assert_eq!(classify_strength(&bad), Strength::Iso);
    }

    #[test]
    fn mistyped_cells_are_structural_errors() {
        let b = Arc::new(cocycle_z2());
        let id = identity_morphism(&b);
        let r = id.with_comp_cell(u(&b, "u"), u(&b, "e"), two(&b, "+e").id);
        assert!(matches!(r, Err(Error::Structure(_))));
    }

    /// Terminal bicategory into the poset monoid, sending `I` to `x` with the
    /// non-invertible unit cell `i`.
    fn lax_point() -> Morphism {
        let t = Arc::new(trivial_bicategory());
        let p = Arc::new(poset_monoid());
        let x = p.hom(ZeroId(0), ZeroId(0)).obj("x").unwrap();
        let one_x = p.hom(ZeroId(0), ZeroId(0)).arr("1x").unwrap();
        let i = p.hom(ZeroId(0), ZeroId(0)).arr("i").unwrap();
        Morphism::assemble(
            t.clone(),
            p.clone(),
            vec![ZeroId(0)],
            |a, b| Functor::new(t.hom(a, b).clone(), p.hom(a, b).clone(), vec![x], vec![one_x]),
            |_, _| Ok(one_x),
            |_| Ok(i),
        )
        .unwrap()
    }

    #[test]
    fn non_invertible_unit_cell_is_lax() {
        let m = lax_point();
        let rep = check_morphism(&m);
        assert!(rep.passed(), "{rep}");
        assert_eq!(classify_strength(&m), Strength::Lax);
    }

    #[test]
    fn composition_with_identity_is_on_the_nose() {
        let m = lax_point();
        let idc = identity_morphism(m.cod());
        let idd = identity_morphism(m.dom());
        assert_eq!(compose_morphisms(&idc, &m).unwrap(), m);
        assert_eq!(compose_morphisms(&m, &idd).unwrap(), m);
    }

    #[test]
    fn collapse_is_not_faithful() {
        let b = Arc::new(trivial_cocycle_z2());
        let a = ZeroId(0);
        let hom = b.hom(a, a).clone();
        let plus = |x: ArrId| {
            let src = hom.src(x);
            hom.identity(src)
        };
        let m = Morphism::assemble(
            b.clone(),
            b.clone(),
            vec![a],
            |x, y| {
                let h = b.hom(x, y);
                Functor::new(h.clone(), h.clone(), h.objects().collect(), h.arrows().map(plus).collect())
            },
            |g, f| Ok(b.id2(b.compose1(g, f)?).id),
            |x| Ok(b.id2(b.id1(x)).id),
        )
        .unwrap();
        assert!(check_morphism(&m).passed());
        assert_eq!(classify_strength(&m), Strength::Strict);
        assert!(!local_property(&m, LocalProperty::Faithful));
        assert!(local_property(&m, LocalProperty::EssentiallySurjective));
    }

    #[test]
    fn composite_strength_is_the_weaker() {
        let lax = lax_point();
        let p = lax.cod().clone();
        let id = identity_morphism(&p);
        let c = compose_morphisms(&id, &lax).unwrap();
        assert_eq!(classify_strength(&c), Strength::Lax.min(Strength::Strict));
        assert!(check_morphism(&c).passed());
    }

    #[test]
    fn modification_law_on_identity_transformations() {
        let b = Arc::new(cocycle_z2());
        let id = Arc::new(identity_morphism(&b));
        let it = Arc::new(identity_transformation(&id));
        let m = identity_modification(&it);
        assert!(check_modification(&m).passed());
        let comp = compose_transformations(&it, &it).unwrap();
        assert!(check_transformation(&comp).passed());
        // l^-1 r composed with itself through the associator is again l^-1 r
        assert_eq!(comp, *it);
        let flipped = Modification::new(it.clone(), it.clone(), vec![two(&b, "-e").id]).unwrap();
        let rep = check_modification(&flipped);
        assert!(rep.passed(), "{rep}");
        assert_eq!(vcomp_modifications(&flipped, &flipped).unwrap(), m);
    }
}
