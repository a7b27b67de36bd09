//! Representables, the Yoneda homomorphism, strictification through its
//! full image, and transport of canonical 2-cells along a homomorphism.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::bicat::{
    cat_as_bicategory, is_two_category, opposite, whisker_left, whisker_right, Bicategory, CatBicategory, OneCell,
    TwoCell, ZeroId,
};
use crate::error::{Error, Result};
use crate::fincat::{ArrId, Functor, NatTrans};
use crate::freebicat::{eval_one, eval_two, Assignment, CanonicalWitness, OneTerm, TwoComputad};
use crate::homs::{build_hom_bicategory, is_biequivalence, HomBicatSpec, HomBicategory};
use crate::maps::{compose_transformations, identity_transformation, Modification, Morphism, Transformation};
use crate::report::Report;

/// Representables of `base` at all three levels, valued in the bicategory of
/// functors between its hom-categories.
#[derive(Debug, Clone)]
pub struct YonedaPackage {
    pub base: Arc<Bicategory>,
    pub base_op: Arc<Bicategory>,
    pub target: Arc<CatBicategory>,
    pub rep_obj: Vec<Arc<Morphism>>,
    pub rep_one: BTreeMap<OneCell, Arc<Transformation>>,
    pub rep_two: BTreeMap<TwoCell, Arc<Modification>>,
}

/// Target 0-cell holding `hom(x, a)`.
fn slot(b: &Bicategory, x: ZeroId, a: ZeroId) -> ZeroId {
    ZeroId(x.0 * b.n_zero() + a.0)
}

fn lost(what: &str) -> Error {
    Error::Structure(format!("{what} is missing from the functor bicategory"))
}

fn functor_cell(t: &CatBicategory, a: ZeroId, b: ZeroId, f: &Functor) -> Result<OneCell> {
    t.one_cell_of(a, b, f).ok_or_else(|| lost("functor"))
}

fn nat_cell(t: &CatBicategory, a: ZeroId, b: ZeroId, n: &NatTrans) -> Result<TwoCell> {
    t.two_cell_of(a, b, n).ok_or_else(|| lost("natural transformation"))
}

/// The bicategory of functors between the hom-categories of `b`.
pub fn yoneda_target(b: &Bicategory, budget: u64) -> Result<CatBicategory> {
    let mut cats = Vec::new();
    for x in b.zero_cells() {
        for a in b.zero_cells() {
            cats.push((format!("hom({},{})", b.zero_name(x), b.zero_name(a)), b.hom(x, a).clone()));
        }
    }
    cat_as_bicategory(&cats, budget)
}

/// `k |-> k . p` on `hom(x, a)` for `p: y -> x`.
fn precompose(b: &Bicategory, t: &CatBicategory, p: OneCell, a: ZeroId) -> Result<OneCell> {
    functor_cell(t, slot(b, p.dst, a), slot(b, p.src, a), &whisker_right(b, p, a))
}

/// `Y(a) = hom(-, a)` as a homomorphism `b^op -> target`.
pub fn representable_obj(
    b: &Arc<Bicategory>,
    b_op: &Arc<Bicategory>,
    t: &CatBicategory,
    a: ZeroId,
) -> Result<Morphism> {
    let c = t.bicat.clone();
    let flip = |p: OneCell| OneCell { src: p.dst, dst: p.src, id: p.id };
    let flip2 = |x: TwoCell| TwoCell { src: x.dst, dst: x.src, id: x.id };
    Morphism::assemble(
        b_op.clone(),
        c.clone(),
        b.zero_cells().map(|x| slot(b, x, a)).collect(),
        |x, y| {
            let (sx, sy) = (slot(b, x, a), slot(b, y, a));
            let mut obj_map = Vec::new();
            for p in b_op.one_cells(x, y) {
                obj_map.push(precompose(b, t, flip(p), a)?.id);
            }
            let mut arr_map = Vec::new();
            for beta in b_op.two_cells(x, y) {
                let be = flip2(beta);
                let (p, p2) = (b.src2(be), b.dst2(be));
                let dom = whisker_right(b, p, a);
                let cod = whisker_right(b, p2, a);
                let comps = b.one_cells(x, a).map(|k| b.hcomp(b.id2(k), be).map(|z| z.id)).collect::<Result<_>>()?;
                arr_map.push(nat_cell(t, sx, sy, &NatTrans::new(dom, cod, comps)?)?.id);
            }
            Functor::new(b_op.hom(x, y).clone(), c.hom(sx, sy).clone(), obj_map, arr_map)
        },
        |g, f| {
            // f: x -> y and g: y -> z in the opposite; in b, pf: y -> x and pg: z -> y
            let (pf, pg) = (flip(f), flip(g));
            let (sx, sz) = (slot(b, f.src, a), slot(b, g.dst, a));
            let yf = precompose(b, t, pf, a)?;
            let yg = precompose(b, t, pg, a)?;
            let dom = t.functor(c.compose1(yg, yf)?).clone();
            let cod = t.functor(precompose(b, t, b.compose1(pf, pg)?, a)?).clone();
            let comps = b.one_cells(f.src, a).map(|k| b.assoc(k, pf, pg).map(|z| z.id)).collect::<Result<_>>()?;
            Ok(nat_cell(t, sx, sz, &NatTrans::new(dom, cod, comps)?)?.id)
        },
        |x| {
            let sx = slot(b, x, a);
            let dom = t.functor(c.id1(sx)).clone();
            let cod = t.functor(precompose(b, t, b.id1(x), a)?).clone();
            let comps =
                b.one_cells(x, a).map(|k| b.inverse_or_err(b.runit(k)).map(|z| z.id)).collect::<Result<_>>()?;
            Ok(nat_cell(t, sx, sx, &NatTrans::new(dom, cod, comps)?)?.id)
        },
    )
}

/// `f_* = hom(-, f): Y(a) => Y(a')` for `f: a -> a'`.
pub fn representable_one(
    b: &Arc<Bicategory>,
    t: &CatBicategory,
    ya: &Arc<Morphism>,
    ya2: &Arc<Morphism>,
    f: OneCell,
) -> Result<Transformation> {
    let c = t.bicat.clone();
    let one = b
        .zero_cells()
        .map(|x| functor_cell(t, slot(b, x, f.src), slot(b, x, f.dst), &whisker_left(b, f, x)).map(|z| z.id))
        .collect::<Result<Vec<_>>>()?;
    let sigma = |x: ZeroId| OneCell { src: slot(b, x, f.src), dst: slot(b, x, f.dst), id: one[x.0] };
    Transformation::assemble(ya.clone(), ya2.clone(), one.clone(), |p_op| {
        // p_op: x -> y in the opposite, p: y -> x in b
        let p = OneCell { src: p_op.dst, dst: p_op.src, id: p_op.id };
        let (x, y) = (p.dst, p.src);
        let dom = t.functor(c.compose1(ya2.one(p_op), sigma(x))?).clone();
        let cod = t.functor(c.compose1(sigma(y), ya.one(p_op))?).clone();
        let comps = b.one_cells(x, f.src).map(|k| b.assoc(f, k, p).map(|z| z.id)).collect::<Result<_>>()?;
        Ok(nat_cell(t, slot(b, x, f.src), slot(b, y, f.dst), &NatTrans::new(dom, cod, comps)?)?.id)
    })
}

/// `alpha_*: f_* => f'_*` with components `alpha * 1`.
pub fn representable_two(
    b: &Arc<Bicategory>,
    t: &CatBicategory,
    fs: &Arc<Transformation>,
    fs2: &Arc<Transformation>,
    alpha: TwoCell,
) -> Result<Modification> {
    let comps = b
        .zero_cells()
        .map(|x| {
            let (s, d) = (fs.component(x), fs2.component(x));
            let cs = b.one_cells(x, alpha.src).map(|k| b.hcomp(alpha, b.id2(k)).map(|z| z.id)).collect::<Result<_>>()?;
            let n = NatTrans::new(t.functor(s).clone(), t.functor(d).clone(), cs)?;
            Ok(nat_cell(t, s.src, s.dst, &n)?.id)
        })
        .collect::<Result<Vec<ArrId>>>()?;
    Modification::new(fs.clone(), fs2.clone(), comps)
}

pub fn yoneda(b: &Arc<Bicategory>, budget: u64) -> Result<YonedaPackage> {
    let b_op = Arc::new(opposite(b)?);
    let t = yoneda_target(b, budget)?;
    let rep_obj = b
        .zero_cells()
        .map(|a| representable_obj(b, &b_op, &t, a).map(Arc::new))
        .collect::<Result<Vec<_>>>()?;
    let mut rep_one = BTreeMap::new();
    for f in b.all_one_cells() {
        let s = representable_one(b, &t, &rep_obj[f.src.0], &rep_obj[f.dst.0], f)?;
        rep_one.insert(f, Arc::new(s));
    }
    let mut rep_two = BTreeMap::new();
    for al in b.all_two_cells() {
        let m = representable_two(b, &t, &rep_one[&b.src2(al)], &rep_one[&b.dst2(al)], al)?;
        rep_two.insert(al, Arc::new(m));
    }
    Ok(YonedaPackage { base: b.clone(), base_op: b_op, target: Arc::new(t), rep_obj, rep_one, rep_two })
}

/// The full image of `Y`: the functor bicategory over the representables.
pub fn full_image(pkg: &YonedaPackage, budget: u64) -> Result<HomBicategory> {
    let b = &pkg.base;
    let spec = HomBicatSpec {
        dom: pkg.base_op.clone(),
        cod: pkg.target.bicat.clone(),
        zero_cells: b.zero_cells().map(|a| (b.zero_name(a).to_string(), pkg.rep_obj[a.0].clone())).collect(),
    };
    build_hom_bicategory(&spec, budget)
}

fn rep_one_of(pkg: &YonedaPackage, f: OneCell) -> Result<&Arc<Transformation>> {
    pkg.rep_one.get(&f).ok_or_else(|| Error::Unresolved(format!("representable of `{}`", pkg.base.one_name(f))))
}

/// Local equivalence of `f |-> f_*`, `alpha |-> alpha_*`, by table scan over
/// the enumerated hom-categories of the full image.
pub fn check_local_equivalence_of_y(pkg: &YonedaPackage, budget: u64) -> Result<Report> {
    let h = full_image(pkg, budget)?;
    Ok(local_equivalence_report(pkg, &h))
}

fn local_equivalence_report(pkg: &YonedaPackage, h: &HomBicategory) -> Report {
    let b = &*pkg.base;
    let mut rep = Report::new();
    for a in b.zero_cells() {
        for a2 in b.zero_cells() {
            let at = || vec![b.zero_name(a).to_string(), b.zero_name(a2).to_string()];
            let hom = h.bicat.hom(a, a2);
            let mut image = BTreeMap::new();
            for f in b.one_cells(a, a2) {
                let Some(s) = pkg.rep_one.get(&f) else { continue };
                let cell = h.one_cell_of(a, a2, s);
                rep.expect(cell.is_some(), "yoneda.image", || vec![b.one_name(f).into()]);
                if let Some(cell) = cell {
                    image.insert(f, cell.id);
                }
            }
            for (&f, &yf) in &image {
                for (&f2, &yf2) in &image {
                    let mut hit = std::collections::BTreeSet::new();
                    let mut injective = true;
                    for &al in b.hom(a, a2).hom(f.id, f2.id) {
                        let al = TwoCell { src: a, dst: a2, id: al };
                        let Some(m) = pkg.rep_two.get(&al) else { continue };
                        match h.two_cell_of(a, a2, m) {
                            Some(x) => injective &= hit.insert(x.id),
                            None => rep.push("yoneda.image", vec![b.two_name(al).into()], ""),
                        }
                    }
                    rep.expect(injective, "yoneda.faithful", || {
                        vec![b.one_name(f).into(), b.one_name(f2).into()]
                    });
                    let full = hom.hom(yf, yf2).iter().all(|m| hit.contains(m));
                    rep.expect(full, "yoneda.full", || vec![b.one_name(f).into(), b.one_name(f2).into()]);
                }
            }
            for s in hom.objects() {
                let covered = image.values().any(|&y| hom.isomorphic(y, s));
                rep.expect(covered, "yoneda.essentially-surjective", || {
                    let mut v = at();
                    v.push(hom.object_name(s).into());
                    v
                });
            }
        }
    }
    rep
}

/// `Y': B -> B'` into the full image, with `phi_{g,f}` from `a^-1` and
/// `phi_a` from `l^-1`.
pub fn yoneda_into_image(pkg: &YonedaPackage, h: &Arc<HomBicategory>) -> Result<Morphism> {
    let b = pkg.base.clone();
    let t = &*pkg.target;
    let c = h.bicat.clone();
    Morphism::assemble(
        b.clone(),
        c.clone(),
        b.zero_cells().collect(),
        |a, a2| {
            let mut obj_map = Vec::new();
            for f in b.one_cells(a, a2) {
                let cell = h.one_cell_of(a, a2, rep_one_of(pkg, f)?).ok_or_else(|| lost("representable 1-cell"))?;
                obj_map.push(cell.id);
            }
            let mut arr_map = Vec::new();
            for al in b.two_cells(a, a2) {
                let m = pkg.rep_two.get(&al).ok_or_else(|| Error::Unresolved(format!("representable of `{}`", b.two_name(al))))?;
                arr_map.push(h.two_cell_of(a, a2, m).ok_or_else(|| lost("representable 2-cell"))?.id);
            }
            Functor::new(b.hom(a, a2).clone(), c.hom(a, a2).clone(), obj_map, arr_map)
        },
        |g, f| {
            let (gs, fs) = (rep_one_of(pkg, g)?, rep_one_of(pkg, f)?);
            let dom = Arc::new(compose_transformations(gs, fs)?);
            let cod = rep_one_of(pkg, b.compose1(g, f)?)?.clone();
            let comps = b
                .zero_cells()
                .map(|x| {
                    let (s, d) = (dom.component(x), cod.component(x));
                    let cs = b
                        .one_cells(x, f.src)
                        .map(|k| b.inverse_or_err(b.assoc(g, f, k)?).map(|z| z.id))
                        .collect::<Result<_>>()?;
                    let n = NatTrans::new(t.functor(s).clone(), t.functor(d).clone(), cs)?;
                    Ok(nat_cell(t, s.src, s.dst, &n)?.id)
                })
                .collect::<Result<Vec<_>>>()?;
            let m = Modification::new(dom, cod, comps)?;
            Ok(h.two_cell_of(f.src, g.dst, &m).ok_or_else(|| lost("composition modification"))?.id)
        },
        |a| {
            let ya = &pkg.rep_obj[a.0];
            let dom = Arc::new(identity_transformation(ya));
            let cod = rep_one_of(pkg, b.id1(a))?.clone();
            let comps = b
                .zero_cells()
                .map(|x| {
                    let (s, d) = (dom.component(x), cod.component(x));
                    let cs = b
                        .one_cells(x, a)
                        .map(|k| b.inverse_or_err(b.lunit(k)).map(|z| z.id))
                        .collect::<Result<_>>()?;
                    let n = NatTrans::new(t.functor(s).clone(), t.functor(d).clone(), cs)?;
                    Ok(nat_cell(t, s.src, s.dst, &n)?.id)
                })
                .collect::<Result<Vec<_>>>()?;
            let m = Modification::new(dom, cod, comps)?;
            Ok(h.two_cell_of(a, a, &m).ok_or_else(|| lost("unit modification"))?.id)
        },
    )
}

#[derive(Debug, Clone)]
pub struct Strictification {
    pub package: YonedaPackage,
    pub image: Arc<HomBicategory>,
    pub y_prime: Arc<Morphism>,
    pub is_two_category: bool,
    pub biequivalence: bool,
}

impl Strictification {
    pub fn bicategory(&self) -> &Arc<Bicategory> {
        &self.image.bicat
    }
}

/// A biequivalent 2-category: the full image of the Yoneda homomorphism.
pub fn strictify(b: &Arc<Bicategory>, budget: u64) -> Result<Strictification> {
    let package = yoneda(b, budget)?;
    let image = Arc::new(full_image(&package, budget)?);
    let y_prime = Arc::new(yoneda_into_image(&package, &image)?);
    let biequivalence = is_biequivalence(&y_prime, budget)?;
    Ok(Strictification {
        is_two_category: is_two_category(&image.bicat),
        package,
        image,
        y_prime,
        biequivalence,
    })
}

/// `F . asg`, used to evaluate transported terms in the codomain.
pub fn image_assignment(f: &Morphism, asg: &Assignment) -> Assignment {
    Assignment {
        zero: asg.zero.iter().map(|(k, &z)| (k.clone(), f.obj(z))).collect(),
        one: asg.one.iter().map(|(k, &x)| (k.clone(), f.one(x))).collect(),
        two: asg.two.iter().map(|(k, &x)| (k.clone(), f.two(x))).collect(),
    }
}

/// The canonical comparison `phi_t` from the composite of `F`-images,
/// bracketed as `t`, to `F(eval t)`.
pub fn transport_canonical(f: &Morphism, t: &OneTerm, asg: &Assignment) -> Result<TwoCell> {
    Ok(transport(f, t, asg)?.1)
}

fn transport(f: &Morphism, t: &OneTerm, asg: &Assignment) -> Result<(OneCell, TwoCell)> {
    let b = &**f.dom();
    let c = &**f.cod();
    match t {
        OneTerm::Gen(_) => {
            let x = f.one(eval_one(t, b, asg)?);
            Ok((x, c.id2(x)))
        }
        OneTerm::Id(_) => {
            let e = eval_one(t, b, asg)?;
            Ok((c.id1(f.obj(e.src)), f.phi_unit(e.src)))
        }
        OneTerm::Comp(l, r) => {
            let (il, cl) = transport(f, l, asg)?;
            let (ir, cr) = transport(f, r, asg)?;
            let (el, er) = (eval_one(l, b, asg)?, eval_one(r, b, asg)?);
            let cell = c.vcomp(f.phi(el, er), c.hcomp(cl, cr)?)?;
            Ok((c.compose1(il, ir)?, cell))
        }
    }
}

/// Whether `F(eval u) . phi_src = phi_dst . eval'(u)` for the transported
/// copy of `u` in the codomain.
pub fn check_reflection(f: &Morphism, u: &CanonicalWitness, cd: &TwoComputad, asg: &Assignment) -> Result<bool> {
    let (b, c) = (&**f.dom(), &**f.cod());
    let inside = eval_two(&u.term, cd, b, asg)?;
    let outside = eval_two(&u.term, cd, c, &image_assignment(f, asg))?;
    let ps = transport_canonical(f, &u.src, asg)?;
    let pd = transport_canonical(f, &u.dst, asg)?;
    if c.dst2(ps) != f.one(b.src2(inside)) || c.src2(pd) != c.dst2(outside) {
        return Err(Error::Mismatch("transported boundary does not match".into()));
    }
    Ok(c.vcomp(f.two(inside), ps)? == c.vcomp(pd, outside)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicat::check_bicategory;
    use crate::fincat::DEFAULT_BUDGET;
    use crate::fixtures::{cocycle_z2, trivial_bicategory};
    use crate::freebicat::{normalize, parse_one, pentagon_legs};
    use crate::maps::{check_modification, check_morphism, check_transformation, classify_strength, Strength};

    #[test]
    fn representables_on_the_cocycle_fixture() {
        let b = Arc::new(cocycle_z2());
        let pkg = yoneda(&b, DEFAULT_BUDGET).unwrap();
        for m in &pkg.rep_obj {
            let rep = check_morphism(m);
            assert!(rep.passed(), "{rep}");
            assert_eq!(classify_strength(&**m), Strength::Iso);
        }
        for s in pkg.rep_one.values() {
            let rep = check_transformation(s);
            assert!(rep.passed(), "{rep}");
            assert!(classify_strength(&**s) >= Strength::Iso);
        }
        for m in pkg.rep_two.values() {
            assert!(check_modification(m).passed());
        }
    }

    #[test]
    fn trivial_fixture_is_strict_throughout() {
        let b = Arc::new(trivial_bicategory());
        let pkg = yoneda(&b, DEFAULT_BUDGET).unwrap();
        assert_eq!(classify_strength(&*pkg.rep_obj[0]), Strength::Strict);
        let rep = check_local_equivalence_of_y(&pkg, DEFAULT_BUDGET).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn truncated_package_is_not_essentially_surjective() {
        let b = Arc::new(cocycle_z2());
        let mut pkg = yoneda(&b, DEFAULT_BUDGET).unwrap();
        let u = b.one_cell(ZeroId(0), ZeroId(0), "u").unwrap();
        pkg.rep_one.remove(&u);
        let rep = check_local_equivalence_of_y(&pkg, DEFAULT_BUDGET).unwrap();
        assert!(rep.has_violation("yoneda.essentially-surjective"), "{rep}");
    }

    #[test]
    fn strictify_the_cocycle_fixture() {
        let b = Arc::new(cocycle_z2());
        let s = strictify(&b, DEFAULT_BUDGET).unwrap();
        assert!(s.is_two_category);
        assert!(s.biequivalence);
        assert!(check_bicategory(s.bicategory()).passed());
        let rep = check_morphism(&s.y_prime);
        assert!(rep.passed(), "{rep}");
        assert!(classify_strength(&*s.y_prime) >= Strength::Iso);
    }

    #[test]
    fn transport_base_cases() {
        let b = Arc::new(cocycle_z2());
        let s = strictify(&b, DEFAULT_BUDGET).unwrap();
        let y = &*s.y_prime;
        let t = parse_one("((h * id[A]) * g) * f").unwrap();
        let loops = parse_one("h * h").unwrap();
        let cd = TwoComputad::infer(&[&t, &loops]).unwrap();
        let a = ZeroId(0);
        let u = b.one_cell(a, a, "u").unwrap();
        let mut asg = Assignment::new();
        for z in cd.zero_cells() {
            asg = asg.zero(z, a);
        }
        for g in ["h", "g", "f"] {
            asg = asg.one(g, u);
        }
        let single = transport_canonical(y, &OneTerm::gen("f"), &asg).unwrap();
        assert!(y.cod().is_identity2(single));
        let pair = transport_canonical(y, &parse_one("g * f").unwrap(), &asg).unwrap();
        assert_eq!(pair, y.phi(u, u));
        let (_, w) = normalize(&t, &cd).unwrap();
        assert!(check_reflection(y, &w, &cd, &asg).unwrap());
        let k = OneTerm::gen("h");
        let (l, r) = pentagon_legs(&k, &k, &OneTerm::gen("g"), &OneTerm::gen("f"), &cd).unwrap();
        assert!(check_reflection(y, &l, &cd, &asg).unwrap());
        assert!(check_reflection(y, &r, &cd, &asg).unwrap());
    }
}
