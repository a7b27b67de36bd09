//! Concrete finite bicategories and their axiom engine.
//!
//! A bicategory is stored as hom-categories indexed by pairs of 0-cells, one
//! composition table per 0-cell triple, identity 1-cells, and component
//! tables for the associator and the two unitors.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{
    check_fincat, compose_functors, enumerate_functors, enumerate_nattrans, hcomp_nattrans, identity_nattrans,
    vcomp_nattrans, ArrId, Arrow, FinCat, Functor, NatTrans, ObjId,
};
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZeroId(pub usize);

/// A 1-cell `src -> dst`: an object of `hom(src, dst)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OneCell {
    pub src: ZeroId,
    pub dst: ZeroId,
    pub id: ObjId,
}

/// A 2-cell between 1-cells `src -> dst`: an arrow of `hom(src, dst)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoCell {
    pub src: ZeroId,
    pub dst: ZeroId,
    pub id: ArrId,
}

/// Composition functor `hom(B,C) x hom(A,B) -> hom(A,C)` stored as two
/// dense tables, indexed `[left * right_count + right]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompTable {
    right_objects: usize,
    right_arrows: usize,
    pub obj: Vec<ObjId>,
    pub arr: Vec<ArrId>,
}

impl CompTable {
    pub fn build(
        left: &FinCat,
        right: &FinCat,
        mut obj: impl FnMut(ObjId, ObjId) -> ObjId,
        mut arr: impl FnMut(ArrId, ArrId) -> ArrId,
    ) -> CompTable {
        let mut o = Vec::with_capacity(left.n_objects() * right.n_objects());
        for g in left.objects() {
            for f in right.objects() {
                o.push(obj(g, f));
            }
        }
        let mut a = Vec::with_capacity(left.n_arrows() * right.n_arrows());
        for b in left.arrows() {
            for x in right.arrows() {
                a.push(arr(b, x));
            }
        }
        CompTable {
            right_objects: right.n_objects(),
            right_arrows: right.n_arrows(),
            obj: o,
            arr: a,
        }
    }

    pub fn obj(&self, g: ObjId, f: ObjId) -> ObjId {
        self.obj[g.0 * self.right_objects + f.0]
    }

    pub fn arr(&self, b: ArrId, a: ArrId) -> ArrId {
        self.arr[b.0 * self.right_arrows + a.0]
    }
}

/// Raw tables for [`Bicategory::from_parts`].
///
/// Indexing: `homs[a*n+b]`, `comp[(a*n+b)*n+c]`, `assoc[((a*n+b)*n+c)*n+d]`
/// with entries at `h*|g||f| + g*|f| + f`, and unitors per object of `hom(a,b)`.
#[derive(Debug, Clone)]
pub struct BicategoryParts {
    pub zero_cells: Vec<String>,
    pub homs: Vec<Arc<FinCat>>,
    pub comp: Vec<CompTable>,
    pub id_one: Vec<ObjId>,
    pub assoc: Vec<Vec<ArrId>>,
    pub lunit: Vec<Vec<ArrId>>,
    pub runit: Vec<Vec<ArrId>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bicategory {
    zero_cells: Vec<String>,
    homs: Vec<Arc<FinCat>>,
    comp: Vec<CompTable>,
    id_one: Vec<ObjId>,
    assoc: Vec<Vec<ArrId>>,
    lunit: Vec<Vec<ArrId>>,
    runit: Vec<Vec<ArrId>>,
}

fn structure(msg: String) -> Error {
    Error::Structure(msg)
}

impl Bicategory {
    /// Validate table shapes and id ranges. Axioms are left to [`check_bicategory`].
    pub fn from_parts(p: BicategoryParts) -> Result<Bicategory> {
        let n = p.zero_cells.len();
        {
            let mut seen = std::collections::HashSet::new();
            if let Some(d) = p.zero_cells.iter().find(|z| !seen.insert(*z)) {
                return Err(structure(format!("duplicate 0-cell `{d}`")));
            }
        }
        if p.homs.len() != n * n || p.comp.len() != n * n * n || p.id_one.len() != n {
            return Err(structure("hom/comp/identity tables do not match the 0-cell count".into()));
        }
        if p.assoc.len() != n * n * n * n || p.lunit.len() != n * n || p.runit.len() != n * n {
            return Err(structure("associator/unitor tables do not match the 0-cell count".into()));
        }
        let hom = |a: usize, b: usize| &p.homs[a * n + b];
        for a in 0..n {
            if p.id_one[a].0 >= hom(a, a).n_objects() {
                return Err(structure(format!("identity 1-cell of `{}` is missing", p.zero_cells[a])));
            }
            for b in 0..n {
                for c in 0..n {
                    let t = &p.comp[(a * n + b) * n + c];
                    let (l, r, o) = (hom(b, c), hom(a, b), hom(a, c));
                    if t.obj.len() != l.n_objects() * r.n_objects()
                        || t.arr.len() != l.n_arrows() * r.n_arrows()
                        || t.right_objects != r.n_objects()
                        || t.right_arrows != r.n_arrows()
                    {
                        return Err(structure(format!(
                            "composition table ({},{},{}) has the wrong shape",
                            p.zero_cells[a], p.zero_cells[b], p.zero_cells[c]
                        )));
                    }
                    if t.obj.iter().any(|x| x.0 >= o.n_objects()) || t.arr.iter().any(|x| x.0 >= o.n_arrows()) {
                        return Err(structure(format!(
                            "composition table ({},{},{}) has dangling entries",
                            p.zero_cells[a], p.zero_cells[b], p.zero_cells[c]
                        )));
                    }
                }
                let h = hom(a, b);
                for (what, t) in [("left unitor", &p.lunit[a * n + b]), ("right unitor", &p.runit[a * n + b])] {
                    if t.len() != h.n_objects() || t.iter().any(|x| x.0 >= h.n_arrows()) {
                        return Err(structure(format!(
                            "{what} table on hom({},{}) is malformed",
                            p.zero_cells[a], p.zero_cells[b]
                        )));
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let t = &p.assoc[((a * n + b) * n + c) * n + d];
                        let want = hom(c, d).n_objects() * hom(b, c).n_objects() * hom(a, b).n_objects();
                        if t.len() != want || t.iter().any(|x| x.0 >= hom(a, d).n_arrows()) {
                            return Err(structure(format!(
                                "associator table ({},{},{},{}) is malformed",
                                p.zero_cells[a], p.zero_cells[b], p.zero_cells[c], p.zero_cells[d]
                            )));
                        }
                    }
                }
            }
        }
        Ok(Bicategory {
            zero_cells: p.zero_cells,
            homs: p.homs,
            comp: p.comp,
            id_one: p.id_one,
            assoc: p.assoc,
            lunit: p.lunit,
            runit: p.runit,
        })
    }

    /// Assemble from per-cell closures; used by every in-crate constructor.
    pub fn assemble(
        zero_cells: Vec<String>,
        homs: Vec<Arc<FinCat>>,
        id_one: Vec<ObjId>,
        mut comp: impl FnMut(usize, usize, usize) -> CompTable,
        mut assoc: impl FnMut(OneCell, OneCell, OneCell) -> ArrId,
        mut lunit: impl FnMut(OneCell) -> ArrId,
        mut runit: impl FnMut(OneCell) -> ArrId,
    ) -> Result<Bicategory> {
        let n = zero_cells.len();
        let hom = |a: usize, b: usize| homs[a * n + b].clone();
        let mut comps = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    comps.push(comp(a, b, c));
                }
            }
        }
        let mut assocs = Vec::with_capacity(n.pow(4));
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let (hf, hg, hh) = (hom(a, b), hom(b, c), hom(c, d));
                        let mut t = Vec::with_capacity(hf.n_objects() * hg.n_objects() * hh.n_objects());
                        for h in hh.objects() {
                            for g in hg.objects() {
                                for f in hf.objects() {
                                    t.push(assoc(
                                        OneCell { src: ZeroId(c), dst: ZeroId(d), id: h },
                                        OneCell { src: ZeroId(b), dst: ZeroId(c), id: g },
                                        OneCell { src: ZeroId(a), dst: ZeroId(b), id: f },
                                    ));
                                }
                            }
                        }
                        assocs.push(t);
                    }
                }
            }
        }
        let mut ls = Vec::with_capacity(n * n);
        let mut rs = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let cells: Vec<OneCell> = hom(a, b)
                    .objects()
                    .map(|id| OneCell { src: ZeroId(a), dst: ZeroId(b), id })
                    .collect();
                ls.push(cells.iter().map(|&f| lunit(f)).collect());
                rs.push(cells.iter().map(|&f| runit(f)).collect());
            }
        }
        Bicategory::from_parts(BicategoryParts {
            zero_cells,
            homs,
            comp: comps,
            id_one,
            assoc: assocs,
            lunit: ls,
            runit: rs,
        })
    }

    pub fn into_parts(self) -> BicategoryParts {
        BicategoryParts {
            zero_cells: self.zero_cells,
            homs: self.homs,
            comp: self.comp,
            id_one: self.id_one,
            assoc: self.assoc,
            lunit: self.lunit,
            runit: self.runit,
        }
    }

    pub fn n_zero(&self) -> usize {
        self.zero_cells.len()
    }

    pub fn zero_cells(&self) -> impl Iterator<Item = ZeroId> {
        (0..self.zero_cells.len()).map(ZeroId)
    }

    pub fn zero_name(&self, a: ZeroId) -> &str {
        &self.zero_cells[a.0]
    }

    pub fn zero(&self, name: &str) -> Option<ZeroId> {
        self.zero_cells.iter().position(|z| z == name).map(ZeroId)
    }

    pub fn hom(&self, a: ZeroId, b: ZeroId) -> &Arc<FinCat> {
        &self.homs[a.0 * self.n_zero() + b.0]
    }

    pub fn comp_table(&self, a: ZeroId, b: ZeroId, c: ZeroId) -> &CompTable {
        let n = self.n_zero();
        &self.comp[(a.0 * n + b.0) * n + c.0]
    }

    pub fn one_cells(&self, a: ZeroId, b: ZeroId) -> impl Iterator<Item = OneCell> + '_ {
        self.hom(a, b).objects().map(move |id| OneCell { src: a, dst: b, id })
    }

    pub fn two_cells(&self, a: ZeroId, b: ZeroId) -> impl Iterator<Item = TwoCell> + '_ {
        self.hom(a, b).arrows().map(move |id| TwoCell { src: a, dst: b, id })
    }

    /// Every 1-cell, grouped by (src, dst) in 0-cell order.
    pub fn all_one_cells(&self) -> Vec<OneCell> {
        let mut v = Vec::new();
        for a in self.zero_cells() {
            for b in self.zero_cells() {
                v.extend(self.one_cells(a, b));
            }
        }
        v
    }

    pub fn all_two_cells(&self) -> Vec<TwoCell> {
        let mut v = Vec::new();
        for a in self.zero_cells() {
            for b in self.zero_cells() {
                v.extend(self.two_cells(a, b));
            }
        }
        v
    }

    pub fn one_cell(&self, a: ZeroId, b: ZeroId, name: &str) -> Option<OneCell> {
        self.hom(a, b).obj(name).map(|id| OneCell { src: a, dst: b, id })
    }

    pub fn two_cell(&self, a: ZeroId, b: ZeroId, name: &str) -> Option<TwoCell> {
        self.hom(a, b).arr(name).map(|id| TwoCell { src: a, dst: b, id })
    }

    pub fn one_name(&self, f: OneCell) -> &str {
        self.hom(f.src, f.dst).object_name(f.id)
    }

    pub fn two_name(&self, x: TwoCell) -> &str {
        self.hom(x.src, x.dst).arrow_name(x.id)
    }

    pub fn src2(&self, x: TwoCell) -> OneCell {
        OneCell { src: x.src, dst: x.dst, id: self.hom(x.src, x.dst).src(x.id) }
    }

    pub fn dst2(&self, x: TwoCell) -> OneCell {
        OneCell { src: x.src, dst: x.dst, id: self.hom(x.src, x.dst).dst(x.id) }
    }

    pub fn id1(&self, a: ZeroId) -> OneCell {
        OneCell { src: a, dst: a, id: self.id_one[a.0] }
    }

    pub fn id2(&self, f: OneCell) -> TwoCell {
        TwoCell { src: f.src, dst: f.dst, id: self.hom(f.src, f.dst).identity(f.id) }
    }

    pub fn is_identity2(&self, x: TwoCell) -> bool {
        self.hom(x.src, x.dst).is_identity(x.id)
    }

    /// `g . f` for `f: A -> B`, `g: B -> C`.
    pub fn compose1(&self, g: OneCell, f: OneCell) -> Result<OneCell> {
        if f.dst != g.src {
            return Err(Error::NotComposable(format!(
                "1-cells `{}` and `{}`",
                self.one_name(g),
                self.one_name(f)
            )));
        }
        Ok(OneCell {
            src: f.src,
            dst: g.dst,
            id: self.comp_table(f.src, f.dst, g.dst).obj(g.id, f.id),
        })
    }

    /// Horizontal composite `beta * alpha`.
    pub fn hcomp(&self, beta: TwoCell, alpha: TwoCell) -> Result<TwoCell> {
        if alpha.dst != beta.src {
            return Err(Error::NotComposable(format!(
                "2-cells `{}` and `{}` horizontally",
                self.two_name(beta),
                self.two_name(alpha)
            )));
        }
        Ok(TwoCell {
            src: alpha.src,
            dst: beta.dst,
            id: self.comp_table(alpha.src, alpha.dst, beta.dst).arr(beta.id, alpha.id),
        })
    }

    /// Vertical composite `beta . alpha`.
    pub fn vcomp(&self, beta: TwoCell, alpha: TwoCell) -> Result<TwoCell> {
        let ok = alpha.src == beta.src && alpha.dst == beta.dst;
        let id = if ok { self.hom(alpha.src, alpha.dst).compose(beta.id, alpha.id) } else { None };
        id.map(|id| TwoCell { src: alpha.src, dst: alpha.dst, id }).ok_or_else(|| {
            Error::NotComposable(format!(
                "2-cells `{}` and `{}` vertically",
                self.two_name(beta),
                self.two_name(alpha)
            ))
        })
    }

    /// Vertical composite of a path listed in application order.
    pub fn vpath(&self, cells: &[TwoCell]) -> Result<TwoCell> {
        let (first, rest) = cells
            .split_first()
            .ok_or_else(|| Error::NotComposable("empty path".into()))?;
        rest.iter().try_fold(*first, |acc, &c| self.vcomp(c, acc))
    }

    /// `a_{h,g,f}: (h g) f -> h (g f)`.
    pub fn assoc(&self, h: OneCell, g: OneCell, f: OneCell) -> Result<TwoCell> {
        if f.dst != g.src || g.dst != h.src {
            return Err(Error::NotComposable(format!(
                "associator on `{}`, `{}`, `{}`",
                self.one_name(h),
                self.one_name(g),
                self.one_name(f)
            )));
        }
        let n = self.n_zero();
        let (a, b, c, d) = (f.src.0, f.dst.0, g.dst.0, h.dst.0);
        let nf = self.hom(f.src, f.dst).n_objects();
        let ng = self.hom(g.src, g.dst).n_objects();
        let t = &self.assoc[((a * n + b) * n + c) * n + d];
        Ok(TwoCell {
            src: f.src,
            dst: h.dst,
            id: t[(h.id.0 * ng + g.id.0) * nf + f.id.0],
        })
    }

    /// `l_f: I . f -> f`.
    pub fn lunit(&self, f: OneCell) -> TwoCell {
        let t = &self.lunit[f.src.0 * self.n_zero() + f.dst.0];
        TwoCell { src: f.src, dst: f.dst, id: t[f.id.0] }
    }

    /// `r_f: f . I -> f`.
    pub fn runit(&self, f: OneCell) -> TwoCell {
        let t = &self.runit[f.src.0 * self.n_zero() + f.dst.0];
        TwoCell { src: f.src, dst: f.dst, id: t[f.id.0] }
    }

    pub fn inverse(&self, x: TwoCell) -> Option<TwoCell> {
        self.hom(x.src, x.dst).inverse(x.id).map(|id| TwoCell { id, ..x })
    }

    pub fn is_iso(&self, x: TwoCell) -> bool {
        self.inverse(x).is_some()
    }

    pub fn inverse_or_err(&self, x: TwoCell) -> Result<TwoCell> {
        self.inverse(x)
            .ok_or_else(|| Error::Structure(format!("2-cell `{}` has no inverse", self.two_name(x))))
    }

    /// Copy with one associator component replaced.
    pub fn with_assoc(&self, h: OneCell, g: OneCell, f: OneCell, cell: ArrId) -> Result<Bicategory> {
        let old = self.assoc(h, g, f)?;
        let n = self.n_zero();
        let (a, b, c, d) = (f.src.0, f.dst.0, g.dst.0, h.dst.0);
        let nf = self.hom(f.src, f.dst).n_objects();
        let ng = self.hom(g.src, g.dst).n_objects();
        let mut out = self.clone();
        debug_assert_eq!(old.src, f.src);
        out.assoc[((a * n + b) * n + c) * n + d][(h.id.0 * ng + g.id.0) * nf + f.id.0] = cell;
        Ok(out)
    }
}

impl fmt::Display for Bicategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ones: usize = self.all_one_cells().len();
        let twos: usize = self.all_two_cells().len();
        write!(f, "bicategory with {} 0-cells, {} 1-cells, {} 2-cells", self.n_zero(), ones, twos)
    }
}

fn cell_names(b: &Bicategory, cells: &[OneCell]) -> Vec<String> {
    cells.iter().map(|&c| b.one_name(c).to_string()).collect()
}

fn two_names(b: &Bicategory, cells: &[TwoCell]) -> Vec<String> {
    cells.iter().map(|&c| b.two_name(c).to_string()).collect()
}

/// Check the composition tables are functors `hom(B,C) x hom(A,B) -> hom(A,C)`.
fn check_comp_functors(b: &Bicategory, rep: &mut Report) {
    for x in b.zero_cells() {
        for y in b.zero_cells() {
            for z in b.zero_cells() {
                let (l, r, o) = (b.hom(y, z), b.hom(x, y), b.hom(x, z));
                let t = b.comp_table(x, y, z);
                let ctx = || format!("comp({},{},{})", b.zero_name(x), b.zero_name(y), b.zero_name(z));
                for be in l.arrows() {
                    for al in r.arrows() {
                        let h = t.arr(be, al);
                        rep.expect(
                            o.src(h) == t.obj(l.src(be), r.src(al)) && o.dst(h) == t.obj(l.dst(be), r.dst(al)),
                            "bicategory.comp-functor",
                            || vec![ctx(), l.arrow_name(be).into(), r.arrow_name(al).into(), "typing".into()],
                        );
                    }
                }
                for g in l.objects() {
                    for f in r.objects() {
                        rep.expect(
                            t.arr(l.identity(g), r.identity(f)) == o.identity(t.obj(g, f)),
                            "bicategory.comp-functor",
                            || vec![ctx(), l.object_name(g).into(), r.object_name(f).into(), "identity".into()],
                        );
                    }
                }
                // interchange: (b2 . b1) * (a2 . a1) = (b2 * a2) . (b1 * a1)
                for b1 in l.arrows() {
                    for b2 in l.arrows() {
                        let Some(bb) = l.compose(b2, b1) else { continue };
                        for a1 in r.arrows() {
                            for a2 in r.arrows() {
                                let Some(aa) = r.compose(a2, a1) else { continue };
                                let lhs = t.arr(bb, aa);
                                let rhs = o.compose(t.arr(b2, a2), t.arr(b1, a1));
                                rep.expect(rhs == Some(lhs), "bicategory.comp-functor", || {
                                    vec![
                                        ctx(),
                                        l.arrow_name(b2).into(),
                                        l.arrow_name(b1).into(),
                                        r.arrow_name(a2).into(),
                                        r.arrow_name(a1).into(),
                                        "interchange".into(),
                                    ]
                                });
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Run every bicategory axiom. Structural failures (hom-categories, composition
/// functors, component typing) are reported first and stop the axiom scan.
pub fn check_bicategory(b: &Bicategory) -> Report {
    let mut rep = Report::new();
    for x in b.zero_cells() {
        for y in b.zero_cells() {
            rep.absorb(check_fincat(b.hom(x, y)), &format!("hom({},{})", b.zero_name(x), b.zero_name(y)));
        }
    }
    if !rep.passed() {
        return rep;
    }
    check_comp_functors(b, &mut rep);
    if !rep.passed() {
        return rep;
    }

    let zs: Vec<ZeroId> = b.zero_cells().collect();
    // component typing and invertibility
    for &x in &zs {
        for &y in &zs {
            for f in b.one_cells(x, y) {
                let ix = b.id1(x);
                let iy = b.id1(y);
                let l = b.lunit(f);
                let r = b.runit(f);
                let lsrc = b.compose1(iy, f).unwrap();
                let rsrc = b.compose1(f, ix).unwrap();
                rep.expect(b.src2(l) == lsrc && b.dst2(l) == f, "bicategory.unitor-typing", || {
                    vec!["l".into(), b.one_name(f).into()]
                });
                rep.expect(b.src2(r) == rsrc && b.dst2(r) == f, "bicategory.unitor-typing", || {
                    vec!["r".into(), b.one_name(f).into()]
                });
            }
        }
    }
    let triples = composable_triples(b);
    for &(h, g, f) in &triples {
        let a = b.assoc(h, g, f).unwrap();
        let src = b.compose1(b.compose1(h, g).unwrap(), f).unwrap();
        let dst = b.compose1(h, b.compose1(g, f).unwrap()).unwrap();
        rep.expect(b.src2(a) == src && b.dst2(a) == dst, "bicategory.assoc-typing", || {
            cell_names(b, &[h, g, f])
        });
    }
    if !rep.passed() {
        return rep;
    }
    for &(h, g, f) in &triples {
        let a = b.assoc(h, g, f).unwrap();
        rep.expect(b.is_iso(a), "bicategory.iso", || {
            let mut v = vec!["a".to_string()];
            v.extend(cell_names(b, &[h, g, f]));
            v
        });
    }
    for f in b.all_one_cells() {
        rep.expect(b.is_iso(b.lunit(f)), "bicategory.iso", || vec!["l".into(), b.one_name(f).into()]);
        rep.expect(b.is_iso(b.runit(f)), "bicategory.iso", || vec!["r".into(), b.one_name(f).into()]);
    }

    // naturality of a in all three variables, componentwise
    for &w in &zs {
        for &x in &zs {
            for &y in &zs {
                for &z in &zs {
                    for al in b.two_cells(w, x) {
                        for be in b.two_cells(x, y) {
                            let ba = b.hcomp(be, al).unwrap();
                            for ga in b.two_cells(y, z) {
                                let (f, g, h) = (b.src2(al), b.src2(be), b.src2(ga));
                                let (f2, g2, h2) = (b.dst2(al), b.dst2(be), b.dst2(ga));
                                let lhs = b
                                    .vcomp(b.assoc(h2, g2, f2).unwrap(), b.hcomp(b.hcomp(ga, be).unwrap(), al).unwrap())
                                    .unwrap();
                                let rhs = b.vcomp(b.hcomp(ga, ba).unwrap(), b.assoc(h, g, f).unwrap()).unwrap();
                                rep.expect(lhs == rhs, "bicategory.assoc-naturality", || two_names(b, &[ga, be, al]));
                            }
                        }
                    }
                }
            }
        }
    }
    for &x in &zs {
        for &y in &zs {
            let ix = b.id2(b.id1(x));
            let iy = b.id2(b.id1(y));
            for al in b.two_cells(x, y) {
                let (f, f2) = (b.src2(al), b.dst2(al));
                let lhs = b.vcomp(b.lunit(f2), b.hcomp(iy, al).unwrap()).unwrap();
                let rhs = b.vcomp(al, b.lunit(f)).unwrap();
                rep.expect(lhs == rhs, "bicategory.lunit-naturality", || two_names(b, &[al]));
                let lhs = b.vcomp(b.runit(f2), b.hcomp(al, ix).unwrap()).unwrap();
                let rhs = b.vcomp(al, b.runit(f)).unwrap();
                rep.expect(lhs == rhs, "bicategory.runit-naturality", || two_names(b, &[al]));
            }
        }
    }

    // pentagon over ((kh)g)f
    for &(h, g, f) in &triples {
        for e in b.zero_cells() {
            for k in b.one_cells(h.dst, e) {
                let gf = b.compose1(g, f).unwrap();
                let kh = b.compose1(k, h).unwrap();
                let hg = b.compose1(h, g).unwrap();
                let lhs = b.vcomp(b.assoc(k, h, gf).unwrap(), b.assoc(kh, g, f).unwrap()).unwrap();
                let rhs = b
                    .vpath(&[
                        b.hcomp(b.assoc(k, h, g).unwrap(), b.id2(f)).unwrap(),
                        b.assoc(k, hg, f).unwrap(),
                        b.hcomp(b.id2(k), b.assoc(h, g, f).unwrap()).unwrap(),
                    ])
                    .unwrap();
                rep.expect(lhs == rhs, "bicategory.pentagon", || cell_names(b, &[k, h, g, f]));
            }
        }
    }
    // triangle over (gI)f
    for &x in &zs {
        for &y in &zs {
            for f in b.one_cells(x, y) {
                for z in b.zero_cells() {
                    for g in b.one_cells(y, z) {
                        let i = b.id1(y);
                        let lhs = b
                            .vcomp(b.hcomp(b.id2(g), b.lunit(f)).unwrap(), b.assoc(g, i, f).unwrap())
                            .unwrap();
                        let rhs = b.hcomp(b.runit(g), b.id2(f)).unwrap();
                        rep.expect(lhs == rhs, "bicategory.triangle", || cell_names(b, &[g, f]));
                    }
                }
            }
        }
    }
    rep
}

/// All `(h, g, f)` with `f: A->B`, `g: B->C`, `h: C->D`.
pub fn composable_triples(b: &Bicategory) -> Vec<(OneCell, OneCell, OneCell)> {
    let mut out = Vec::new();
    for f in b.all_one_cells() {
        for c in b.zero_cells() {
            for g in b.one_cells(f.dst, c) {
                for d in b.zero_cells() {
                    for h in b.one_cells(c, d) {
                        out.push((h, g, f));
                    }
                }
            }
        }
    }
    out
}

/// `h_*: hom(C,D) -> hom(C,E)` for `h: D -> E`.
pub fn whisker_left(b: &Bicategory, h: OneCell, c: ZeroId) -> Functor {
    let (dom, cod) = (b.hom(c, h.src).clone(), b.hom(c, h.dst).clone());
    let ih = b.id2(h);
    let obj_map = b.one_cells(c, h.src).map(|f| b.compose1(h, f).unwrap().id).collect();
    let arr_map = b.two_cells(c, h.src).map(|al| b.hcomp(ih, al).unwrap().id).collect();
    Functor::new(dom, cod, obj_map, arr_map).expect("whiskering preserves shape")
}

/// `h^*: hom(E,C) -> hom(D,C)` for `h: D -> E`.
pub fn whisker_right(b: &Bicategory, h: OneCell, c: ZeroId) -> Functor {
    let (dom, cod) = (b.hom(h.dst, c).clone(), b.hom(h.src, c).clone());
    let ih = b.id2(h);
    let obj_map = b.one_cells(h.dst, c).map(|f| b.compose1(f, h).unwrap().id).collect();
    let arr_map = b.two_cells(h.dst, c).map(|al| b.hcomp(al, ih).unwrap().id).collect();
    Functor::new(dom, cod, obj_map, arr_map).expect("whiskering preserves shape")
}

/// Reverse 1-cells, keep 2-cells. `a^op_{h,g,f} = a_{f,g,h}^{-1}`, `l^op = r`, `r^op = l`.
pub fn opposite(b: &Bicategory) -> Result<Bicategory> {
    let n = b.n_zero();
    let zero_cells: Vec<String> = b.zero_cells.clone();
    let mut homs = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            homs.push(b.hom(ZeroId(y), ZeroId(x)).clone());
        }
    }
    let flip = |c: OneCell| OneCell { src: c.dst, dst: c.src, id: c.id };
    let mut err = None;
    let out = Bicategory::assemble(
        zero_cells,
        homs,
        b.id_one.clone(),
        |x, y, z| {
            let (x, y, z) = (ZeroId(x), ZeroId(y), ZeroId(z));
            // op: hom(y,z) x hom(x,y) -> hom(x,z) is B: hom(y,x) x hom(z,y) -> hom(z,x), swapped
            let t = b.comp_table(z, y, x);
            CompTable::build(b.hom(z, y), b.hom(y, x), |g, f| t.obj(f, g), |be, al| t.arr(al, be))
        },
        |h, g, f| {
            let a = b.assoc(flip(f), flip(g), flip(h)).unwrap();
            match b.inverse(a) {
                Some(i) => i.id,
                None => {
                    err.get_or_insert_with(|| Error::Structure("associator component without inverse".into()));
                    a.id
                }
            }
        },
        |f| b.runit(flip(f)).id,
        |f| b.lunit(flip(f)).id,
    )?;
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// True iff every associator and unitor component is an identity 2-cell.
pub fn is_two_category(b: &Bicategory) -> bool {
    composable_triples(b)
        .into_iter()
        .all(|(h, g, f)| b.is_identity2(b.assoc(h, g, f).unwrap()))
        && b
            .all_one_cells()
            .into_iter()
            .all(|f| b.is_identity2(b.lunit(f)) && b.is_identity2(b.runit(f)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub f: OneCell,
    pub g: OneCell,
    /// Invertible `I_A -> g . f`.
    pub eta: TwoCell,
    /// Invertible `f . g -> I_B`.
    pub eps: TwoCell,
}

/// All internal equivalences between `a` and `a2`, ordered by (f, g, eta, eps).
pub fn find_equivalences(b: &Bicategory, a: ZeroId, a2: ZeroId, budget: u64) -> Result<Vec<EquivalenceWitness>> {
    let (ia, ib) = (b.id1(a), b.id1(a2));
    let mut predicted: u128 = 0;
    for f in b.one_cells(a, a2) {
        for g in b.one_cells(a2, a) {
            let gf = b.compose1(g, f)?;
            let fg = b.compose1(f, g)?;
            let n1 = b.hom(a, a).hom(ia.id, gf.id).len() as u128;
            let n2 = b.hom(a2, a2).hom(fg.id, ib.id).len() as u128;
            predicted = predicted.saturating_add(n1 * n2);
        }
    }
    if predicted > budget as u128 {
        return Err(Error::BudgetExceeded {
            what: format!("equivalences {} ~ {}", b.zero_name(a), b.zero_name(a2)),
            predicted,
            budget,
        });
    }
    let mut out = Vec::new();
    for f in b.one_cells(a, a2) {
        for g in b.one_cells(a2, a) {
            let gf = b.compose1(g, f)?;
            let fg = b.compose1(f, g)?;
            let etas: Vec<TwoCell> = b
                .hom(a, a)
                .hom(ia.id, gf.id)
                .iter()
                .map(|&id| TwoCell { src: a, dst: a, id })
                .filter(|&x| b.is_iso(x))
                .collect();
            let epss: Vec<TwoCell> = b
                .hom(a2, a2)
                .hom(fg.id, ib.id)
                .iter()
                .map(|&id| TwoCell { src: a2, dst: a2, id })
                .filter(|&x| b.is_iso(x))
                .collect();
            for &eta in &etas {
                for &eps in &epss {
                    out.push(EquivalenceWitness { f, g, eta, eps });
                }
            }
        }
    }
    Ok(out)
}

type FunctorKey = (Vec<ObjId>, Vec<ArrId>);
type NatTransKey = (ObjId, ObjId, Vec<ArrId>);

/// The strict 2-category of the given finite categories, functors and
/// natural transformations, with lookup tables back to the underlying data.
#[derive(Debug, Clone)]
pub struct CatBicategory {
    pub bicat: Arc<Bicategory>,
    pub cats: Vec<Arc<FinCat>>,
    functors: Vec<Vec<Functor>>,
    nattrans: Vec<Vec<NatTrans>>,
    functor_index: Vec<HashMap<FunctorKey, ObjId>>,
    nattrans_index: Vec<HashMap<NatTransKey, ArrId>>,
}

impl CatBicategory {
    fn idx(&self, a: ZeroId, b: ZeroId) -> usize {
        a.0 * self.cats.len() + b.0
    }

    pub fn functor(&self, f: OneCell) -> &Functor {
        &self.functors[self.idx(f.src, f.dst)][f.id.0]
    }

    pub fn nattrans(&self, x: TwoCell) -> &NatTrans {
        &self.nattrans[self.idx(x.src, x.dst)][x.id.0]
    }

    pub fn one_cell_of(&self, a: ZeroId, b: ZeroId, f: &Functor) -> Option<OneCell> {
        self.functor_index[self.idx(a, b)]
            .get(&(f.obj_map.clone(), f.arr_map.clone()))
            .map(|&id| OneCell { src: a, dst: b, id })
    }

    pub fn two_cell_of(&self, a: ZeroId, b: ZeroId, t: &NatTrans) -> Option<TwoCell> {
        let i = self.idx(a, b);
        let find = |f: &Functor| self.functor_index[i].get(&(f.obj_map.clone(), f.arr_map.clone())).copied();
        let (s, d) = (find(&t.dom)?, find(&t.cod)?);
        self.nattrans_index[i]
            .get(&(s, d, t.components.clone()))
            .map(|&id| TwoCell { src: a, dst: b, id })
    }
}

/// Build the 2-category whose 0-cells are `cats`, with functor categories as homs.
pub fn cat_as_bicategory(cats: &[(String, Arc<FinCat>)], budget: u64) -> Result<CatBicategory> {
    let n = cats.len();
    let mut functors = Vec::with_capacity(n * n);
    let mut nattrans = Vec::with_capacity(n * n);
    let mut functor_index = Vec::with_capacity(n * n);
    let mut nattrans_index = Vec::with_capacity(n * n);
    let mut homs = Vec::with_capacity(n * n);
    for (_, c) in cats {
        for (_, d) in cats {
            let fs = enumerate_functors(c, d, budget)?;
            let fidx: HashMap<_, _> = fs
                .iter()
                .enumerate()
                .map(|(i, f)| ((f.obj_map.clone(), f.arr_map.clone()), ObjId(i)))
                .collect();
            let mut ts = Vec::new();
            let mut arrows = Vec::new();
            for (i, f) in fs.iter().enumerate() {
                for (j, g) in fs.iter().enumerate() {
                    for t in enumerate_nattrans(f, g, budget)? {
                        arrows.push(Arrow {
                            name: format!("t{}", arrows.len()),
                            src: ObjId(i),
                            dst: ObjId(j),
                        });
                        ts.push(t);
                    }
                }
            }
            let tidx: HashMap<_, _> = ts
                .iter()
                .zip(&arrows)
                .enumerate()
                .map(|(k, (t, a))| ((a.src, a.dst, t.components.clone()), ArrId(k)))
                .collect();
            let identity = fs
                .iter()
                .enumerate()
                .map(|(i, f)| tidx[&(ObjId(i), ObjId(i), identity_nattrans(f).components)])
                .collect();
            let objects = (0..fs.len()).map(|i| format!("F{i}")).collect();
            let hom = FinCat::build(objects, arrows.clone(), identity, |g, f| {
                let v = vcomp_nattrans(&ts[g.0], &ts[f.0]).expect("composable in functor category");
                tidx[&(arrows[f.0].src, arrows[g.0].dst, v.components)]
            })?;
            homs.push(Arc::new(hom));
            functors.push(fs);
            nattrans.push(ts);
            functor_index.push(fidx);
            nattrans_index.push(tidx);
        }
    }
    let zero_cells = cats.iter().map(|(n, _)| n.clone()).collect();
    let id_one = (0..n)
        .map(|a| {
            let c = &cats[a].1;
            functor_index[a * n + a][&(c.objects().collect(), c.arrows().collect())]
        })
        .collect();
    let bicat = Bicategory::assemble(
        zero_cells,
        homs.clone(),
        id_one,
        |a, b, c| {
            let (l, r) = (&homs[b * n + c], &homs[a * n + b]);
            let (lf, rf) = (&functors[b * n + c], &functors[a * n + b]);
            let (lt, rt) = (&nattrans[b * n + c], &nattrans[a * n + b]);
            let fi = &functor_index[a * n + c];
            let ti = &nattrans_index[a * n + c];
            CompTable::build(
                l,
                r,
                |g, f| {
                    let h = compose_functors(&lf[g.0], &rf[f.0]).expect("composable functors");
                    fi[&(h.obj_map, h.arr_map)]
                },
                |be, al| {
                    let h = hcomp_nattrans(&lt[be.0], &rt[al.0]).expect("composable transformations");
                    let s = fi[&(h.dom.obj_map.clone(), h.dom.arr_map.clone())];
                    let d = fi[&(h.cod.obj_map.clone(), h.cod.arr_map.clone())];
                    ti[&(s, d, h.components)]
                },
            )
        },
        |h, g, f| {
            // strict: (hg)f and h(gf) are the same functor
            let fun = |c: OneCell| &functors[c.src.0 * n + c.dst.0][c.id.0];
            let hg = compose_functors(fun(h), fun(g)).expect("composable functors");
            let hgf = compose_functors(&hg, fun(f)).expect("composable functors");
            let o = functor_index[f.src.0 * n + h.dst.0][&(hgf.obj_map, hgf.arr_map)];
            homs[f.src.0 * n + h.dst.0].identity(o)
        },
        |f| homs[f.src.0 * n + f.dst.0].identity(f.id),
        |f| homs[f.src.0 * n + f.dst.0].identity(f.id),
    )?;
    Ok(CatBicategory {
        bicat: Arc::new(bicat),
        cats: cats.iter().map(|(_, c)| c.clone()).collect(),
        functors,
        nattrans,
        functor_index,
        nattrans_index,
    })
}

/// Sign in `{+1, -1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, o: Sign) -> Sign {
        if self == o {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Sign {
    pub fn flip(self) -> Sign {
        self * Sign::Minus
    }
}

/// Name of the element `g` of `Z/n` used for 1-cells of the cocycle fixtures.
pub fn cyclic_name(n: usize, g: usize) -> String {
    match (n, g) {
        (_, 0) => "e".into(),
        (2, 1) => "u".into(),
        _ => format!("g{g}"),
    }
}

fn sign_arrow(n: usize, g: usize, s: Sign) -> ArrId {
    debug_assert!(g < n);
    ArrId(2 * g + usize::from(s == Sign::Minus))
}

/// One 0-cell, 1-cells `Z/n`, each 1-cell with automorphisms `{+1,-1}`,
/// associator component at `(h,g,f)` the sign `c(h,g,f)`, unitors identities.
///
/// No validation of `c`; see [`group_cocycle_bicategory`].
pub fn sign_bicategory(n: usize, c: impl Fn(usize, usize, usize) -> Sign) -> Result<Bicategory> {
    if n == 0 {
        return Err(Error::Cocycle("n must be positive".into()));
    }
    let objects: Vec<String> = (0..n).map(|g| cyclic_name(n, g)).collect();
    let mut arrows = Vec::with_capacity(2 * n);
    for (g, name) in objects.iter().enumerate() {
        for s in ["+", "-"] {
            arrows.push(Arrow {
                name: format!("{s}{name}"),
                src: ObjId(g),
                dst: ObjId(g),
            });
        }
    }
    let sign_of = |a: ArrId| if a.0.is_multiple_of(2) { Sign::Plus } else { Sign::Minus };
    let identity = (0..n).map(|g| sign_arrow(n, g, Sign::Plus)).collect();
    let hom = Arc::new(FinCat::build(objects, arrows, identity, |g, f| {
        sign_arrow(n, g.0 / 2, sign_of(g) * sign_of(f))
    })?);
    Bicategory::assemble(
        vec!["*".into()],
        vec![hom.clone()],
        vec![ObjId(0)],
        |_, _, _| {
            CompTable::build(
                &hom,
                &hom,
                |g, f| ObjId((g.0 + f.0) % n),
                |b, a| sign_arrow(n, (b.0 / 2 + a.0 / 2) % n, sign_of(b) * sign_of(a)),
            )
        },
        |h, g, f| sign_arrow(n, (h.id.0 + g.id.0 + f.id.0) % n, c(h.id.0, g.id.0, f.id.0)),
        |f| sign_arrow(n, f.id.0, Sign::Plus),
        |f| sign_arrow(n, f.id.0, Sign::Plus),
    )
}

/// Validated cocycle fixture: `c` must be normalized and satisfy
/// `c(k,h,g+f) c(k+h,g,f) = c(h,g,f) c(k,h+g,f) c(k,h,g)`.
pub fn group_cocycle_bicategory(n: usize, c: impl Fn(usize, usize, usize) -> Sign) -> Result<Bicategory> {
    if n == 0 {
        return Err(Error::Cocycle("n must be positive".into()));
    }
    let name = |g: usize| cyclic_name(n, g);
    for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                if (g == 0 || h == 0 || k == 0) && c(g, h, k) != Sign::Plus {
                    return Err(Error::Cocycle(format!(
                        "not normalized at ({},{},{})",
                        name(g),
                        name(h),
                        name(k)
                    )));
                }
            }
        }
    }
    for k in 0..n {
        for h in 0..n {
            for g in 0..n {
                for f in 0..n {
                    let lhs = c(k, h, (g + f) % n) * c((k + h) % n, g, f);
                    let rhs = c(h, g, f) * c(k, (h + g) % n, f) * c(k, h, g);
                    if lhs != rhs {
                        return Err(Error::Cocycle(format!(
                            "cocycle identity fails at ({},{},{},{})",
                            name(k),
                            name(h),
                            name(g),
                            name(f)
                        )));
                    }
                }
            }
        }
    }
    sign_bicategory(n, c)
}

/// A bicategory whose associator and unitors are identities, given its
/// composition tables. The tables must be strictly associative and unital.
pub fn strict_bicategory(
    zero_cells: Vec<String>,
    homs: Vec<Arc<FinCat>>,
    id_one: Vec<ObjId>,
    comp: impl FnMut(usize, usize, usize) -> CompTable,
) -> Result<Bicategory> {
    let n = zero_cells.len();
    let mut comp = comp;
    let mut tables = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                tables.push(comp(a, b, c));
            }
        }
    }
    let table = |a: ZeroId, b: ZeroId, c: ZeroId| &tables[(a.0 * n + b.0) * n + c.0];
    let homs2 = homs.clone();
    let hom = move |a: ZeroId, b: ZeroId| homs2[a.0 * n + b.0].clone();
    Bicategory::assemble(
        zero_cells,
        homs,
        id_one,
        |a, b, c| tables[(a * n + b) * n + c].clone(),
        |h, g, f| {
            let hg = table(g.src, g.dst, h.dst).obj(h.id, g.id);
            let hgf = table(f.src, f.dst, h.dst).obj(hg, f.id);
            hom(f.src, h.dst).identity(hgf)
        },
        |f| hom(f.src, f.dst).identity(f.id),
        |f| hom(f.src, f.dst).identity(f.id),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::DEFAULT_BUDGET;
    use crate::fixtures::*;

    fn u(b: &Bicategory, name: &str) -> OneCell {
        b.one_cell(ZeroId(0), ZeroId(0), name).unwrap()
    }

    #[test]
    fn nontrivial_cocycle_passes_and_is_not_strict() {
        let b = cocycle_z2();
        let rep = check_bicategory(&b);
        assert!(rep.passed(), "{rep}");
        assert!(!is_two_category(&b));
        let uu = u(&b, "u");
        assert_eq!(b.two_name(b.assoc(uu, uu, uu).unwrap()), "-u");
    }

    #[test]
    fn flipped_components_break_the_pentagon() {
        // a(u,u,e) flipped: the 3-cocycle identity fails at (u,u,u,u)
        let b = sign_bicategory(2, |h, g, f| {
            let base = if (h, g, f) == (1, 1, 1) { Sign::Minus } else { Sign::Plus };
            if (h, g, f) == (1, 1, 0) { base.flip() } else { base }
        })
        .unwrap();
        let rep = check_bicategory(&b);
        assert!(rep.has_violation_at("bicategory.pentagon", &["u", "u", "u", "u"]), "{rep}");
    }

    #[test]
    fn hcomp_signs_multiply() {
        let b = cocycle_z2();
        let z = ZeroId(0);
        let m = b.two_cell(z, z, "-u").unwrap();
        let r = b.hcomp(m, m).unwrap();
        assert_eq!(b.two_name(r), "+e");
        let (g, f) = (u(&b, "u"), u(&b, "e"));
        assert_eq!(b.hcomp(b.id2(g), b.id2(f)).unwrap(), b.id2(b.compose1(g, f).unwrap()));
    }

    #[test]
    fn interchange_holds_on_fixtures() {
        for b in [cocycle_z2(), strict_arrow_2cat(), poset_monoid()] {
            for x in b.zero_cells() {
                for y in b.zero_cells() {
                    for z in b.zero_cells() {
                        for b1 in b.two_cells(y, z) {
                            for b2 in b.two_cells(y, z) {
                                let Ok(bb) = b.vcomp(b2, b1) else { continue };
                                for a1 in b.two_cells(x, y) {
                                    for a2 in b.two_cells(x, y) {
                                        let Ok(aa) = b.vcomp(a2, a1) else { continue };
                                        let lhs = b.hcomp(bb, aa).unwrap();
                                        let rhs = b
                                            .vcomp(b.hcomp(b2, a2).unwrap(), b.hcomp(b1, a1).unwrap())
                                            .unwrap();
                                        assert_eq!(lhs, rhs);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn whiskering() {
        let b = cocycle_z2();
        let z = ZeroId(0);
        let wl = whisker_left(&b, u(&b, "u"), z);
        assert!(crate::fincat::check_functor(&wl).passed());
        // u . e = u, and signs pass through unchanged
        assert_eq!(b.hom(z, z).object_name(wl.obj(ObjId(0))), "u");
        for a in b.hom(z, z).arrows() {
            let name = b.hom(z, z).arrow_name(a);
            let img = b.hom(z, z).arrow_name(wl.arr(a));
            assert_eq!(&name[..1], &img[..1]);
        }
        // I_* is naturally isomorphic to the identity via l
        let wi = whisker_left(&b, b.id1(z), z);
        let l = NatTrans::new(
            wi,
            crate::fincat::identity_functor(b.hom(z, z)),
            b.one_cells(z, z).map(|f| b.lunit(f).id).collect(),
        )
        .unwrap();
        assert!(crate::fincat::check_nattrans(&l).passed());
        let wr = whisker_right(&b, u(&b, "u"), z);
        assert!(crate::fincat::check_functor(&wr).passed());
    }

    #[test]
    fn opposite_is_an_involution_and_valid() {
        for b in [cocycle_z2(), strict_arrow_2cat(), poset_monoid()] {
            let op = opposite(&b).unwrap();
            assert!(check_bicategory(&op).passed());
            assert_eq!(is_two_category(&op), is_two_category(&b));
            assert_eq!(opposite(&op).unwrap(), b);
        }
        let op = opposite(&strict_arrow_2cat()).unwrap();
        let (a, bb) = (op.zero("A").unwrap(), op.zero("B").unwrap());
        assert_eq!(op.hom(bb, a).n_objects(), 2);
        assert_eq!(op.hom(a, bb).n_objects(), 0);
    }

    #[test]
    fn two_category_predicate() {
        assert!(!is_two_category(&cocycle_z2()));
        assert!(is_two_category(&trivial_cocycle_z2()));
        assert!(is_two_category(&trivial_bicategory()));
        assert!(check_bicategory(&trivial_bicategory()).passed());
    }

    #[test]
    fn equivalences() {
        let b = cocycle_z2();
        let z = ZeroId(0);
        let eqs = find_equivalences(&b, z, z, DEFAULT_BUDGET).unwrap();
        // (f,g) in {(e,e),(u,u)}, each with 2 x 2 invertible eta/eps
        assert_eq!(eqs.len(), 8);
        assert!(eqs.iter().any(|w| w.f == u(&b, "u") && w.g == u(&b, "u")));
        let i = b.id1(z);
        assert!(eqs.contains(&EquivalenceWitness {
            f: i,
            g: i,
            eta: b.inverse(b.lunit(i)).unwrap(),
            eps: b.lunit(i),
        }));

        let s = strict_arrow_2cat();
        let (a, bb) = (s.zero("A").unwrap(), s.zero("B").unwrap());
        assert!(find_equivalences(&s, a, bb, DEFAULT_BUDGET).unwrap().is_empty());
        assert_eq!(find_equivalences(&s, a, a, DEFAULT_BUDGET).unwrap().len(), 1);
    }

    #[test]
    fn cat_bicategory_over_small_categories() {
        let t = Arc::new(crate::fixtures::terminal_category());
        let one = cat_as_bicategory(&[("1".into(), t)], DEFAULT_BUDGET).unwrap();
        assert_eq!(one.bicat.all_one_cells().len(), 1);
        assert_eq!(one.bicat.all_two_cells().len(), 1);

        let z2 = Arc::new(z2_monoid());
        let cb = cat_as_bicategory(&[("Z2".into(), z2)], DEFAULT_BUDGET).unwrap();
        let b = &cb.bicat;
        let z = ZeroId(0);
        assert_eq!(b.hom(z, z).n_objects(), 2);
        let id = b.id1(z);
        assert_eq!(b.hom(z, z).hom(id.id, id.id).len(), 2);
        assert!(check_bicategory(b).passed());
        assert!(is_two_category(b));
    }

    #[test]
    fn cocycle_generator_validates() {
        assert!(group_cocycle_bicategory(2, |h, g, f| {
            if (h, g, f) == (1, 1, 1) { Sign::Minus } else { Sign::Plus }
        })
        .is_ok());
        let b = group_cocycle_bicategory(2, |_, _, _| Sign::Plus).unwrap();
        assert!(is_two_category(&b));
        let err = group_cocycle_bicategory(2, |h, g, f| match (h, g, f) {
            (1, 1, 1) | (1, 1, 0) => Sign::Minus,
            _ => Sign::Plus,
        })
        .unwrap_err();
        assert!(matches!(err, Error::Cocycle(ref m) if m.contains("not normalized")), "{err}");
        // n = 3 with a coboundary-free non-cocycle is rejected with a quadruple
        let err = group_cocycle_bicategory(3, |h, g, f| {
            if (h, g, f) == (1, 1, 1) { Sign::Minus } else { Sign::Plus }
        })
        .unwrap_err();
        assert!(matches!(err, Error::Cocycle(ref m) if m.contains("fails at")), "{err}");
    }
}
