//! Finite categories as explicit tables, with functors, natural
//! transformations, products and brute-force enumeration.
//!
//! Composition is written `compose(g, f)` and means "g after f".

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::report::Report;

/// Default cap on candidate maps examined by an enumeration.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: ObjId,
    pub dst: ObjId,
}

/// A finite category. Immutable once built.
///
/// The composition table is total over composable pairs but its entries are
/// not trusted: [`check_fincat`] verifies typing, unit and associativity laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCat {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    identity: Vec<ArrId>,
    compose: Vec<Option<ArrId>>,
    hom_sets: Vec<Vec<ArrId>>,
    obj_index: HashMap<String, ObjId>,
    arr_index: HashMap<String, ArrId>,
}

fn check_unique<'a>(what: &str, names: impl Iterator<Item = &'a String>) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(Error::Structure(format!("duplicate {what} id `{n}`")));
        }
    }
    Ok(())
}

impl FinCat {
    /// Build from indexed data; `compose` is consulted once per composable pair.
    pub fn build(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identity: Vec<ArrId>,
        mut compose: impl FnMut(ArrId, ArrId) -> ArrId,
    ) -> Result<FinCat> {
        check_unique("object", objects.iter())?;
        check_unique("arrow", arrows.iter().map(|a| &a.name))?;
        let n_obj = objects.len();
        let n_arr = arrows.len();
        for a in &arrows {
            if a.src.0 >= n_obj || a.dst.0 >= n_obj {
                return Err(Error::Structure(format!("arrow `{}` has dangling endpoint", a.name)));
            }
        }
        if identity.len() != n_obj {
            return Err(Error::Structure(format!(
                "identity table has {} entries for {} objects",
                identity.len(),
                n_obj
            )));
        }
        if let Some(bad) = identity.iter().find(|i| i.0 >= n_arr) {
            return Err(Error::Structure(format!("identity refers to missing arrow #{}", bad.0)));
        }
        let mut table = vec![None; n_arr * n_arr];
        for g in 0..n_arr {
            for f in 0..n_arr {
                if arrows[f].dst == arrows[g].src {
                    let h = compose(ArrId(g), ArrId(f));
                    if h.0 >= n_arr {
                        return Err(Error::Structure(format!(
                            "composite of `{}` after `{}` is a missing arrow",
                            arrows[g].name, arrows[f].name
                        )));
                    }
                    table[g * n_arr + f] = Some(h);
                }
            }
        }
        let mut hom_sets = vec![Vec::new(); n_obj * n_obj];
        for (i, a) in arrows.iter().enumerate() {
            hom_sets[a.src.0 * n_obj + a.dst.0].push(ArrId(i));
        }
        let obj_index = objects.iter().enumerate().map(|(i, o)| (o.clone(), ObjId(i))).collect();
        let arr_index = arrows.iter().enumerate().map(|(i, a)| (a.name.clone(), ArrId(i))).collect();
        Ok(FinCat {
            objects,
            arrows,
            identity,
            compose: table,
            hom_sets,
            obj_index,
            arr_index,
        })
    }

    /// Build from name-based tables. Every composable pair must have an entry.
    pub fn from_tables(
        objects: Vec<String>,
        arrows: Vec<(String, String, String)>,
        identities: Vec<(String, String)>,
        compose: Vec<(String, String, String)>,
    ) -> Result<FinCat> {
        let obj_index: HashMap<&str, ObjId> =
            objects.iter().enumerate().map(|(i, o)| (o.as_str(), ObjId(i))).collect();
        let resolve_obj = |n: &str| {
            obj_index
                .get(n)
                .copied()
                .ok_or_else(|| Error::Unresolved(format!("object `{n}`")))
        };
        let mut arrs = Vec::with_capacity(arrows.len());
        for (name, s, d) in &arrows {
            arrs.push(Arrow {
                name: name.clone(),
                src: resolve_obj(s)?,
                dst: resolve_obj(d)?,
            });
        }
        let arr_index: HashMap<&str, ArrId> =
            arrows.iter().enumerate().map(|(i, a)| (a.0.as_str(), ArrId(i))).collect();
        let resolve_arr = |n: &str| {
            arr_index
                .get(n)
                .copied()
                .ok_or_else(|| Error::Unresolved(format!("arrow `{n}`")))
        };
        let mut identity = vec![None; objects.len()];
        for (o, a) in &identities {
            let o = resolve_obj(o)?;
            if identity[o.0].replace(resolve_arr(a)?).is_some() {
                return Err(Error::Structure(format!("object `{}` has two identities", objects[o.0])));
            }
        }
        let identity = identity
            .into_iter()
            .enumerate()
            .map(|(i, a)| a.ok_or_else(|| Error::Structure(format!("object `{}` has no identity", objects[i]))))
            .collect::<Result<Vec<_>>>()?;
        let mut table = HashMap::new();
        for (g, f, h) in &compose {
            let key = (resolve_arr(g)?, resolve_arr(f)?);
            let val = resolve_arr(h)?;
            if arrs[key.1 .0].dst != arrs[key.0 .0].src {
                return Err(Error::Structure(format!("compose entry ({g}, {f}) is not a composable pair")));
            }
            if table.insert(key, val).is_some() {
                return Err(Error::Structure(format!("compose entry ({g}, {f}) given twice")));
            }
        }
        let mut missing = None;
        let cat = FinCat::build(objects, arrs, identity, |g, f| match table.get(&(g, f)) {
            Some(h) => *h,
            None => {
                missing.get_or_insert((g, f));
                ArrId(0)
            }
        })?;
        if let Some((g, f)) = missing {
            return Err(Error::Structure(format!(
                "compose table has no entry for ({}, {})",
                cat.arrow(g).name,
                cat.arrow(f).name
            )));
        }
        Ok(cat)
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> + '_ {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn arrows(&self) -> impl Iterator<Item = ArrId> + '_ {
        (0..self.arrows.len()).map(ArrId)
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x.0]
    }

    pub fn arrow(&self, a: ArrId) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn arrow_name(&self, a: ArrId) -> &str {
        &self.arrows[a.0].name
    }

    pub fn src(&self, a: ArrId) -> ObjId {
        self.arrows[a.0].src
    }

    pub fn dst(&self, a: ArrId) -> ObjId {
        self.arrows[a.0].dst
    }

    pub fn obj(&self, name: &str) -> Option<ObjId> {
        self.obj_index.get(name).copied()
    }

    pub fn arr(&self, name: &str) -> Option<ArrId> {
        self.arr_index.get(name).copied()
    }

    pub fn identity(&self, x: ObjId) -> ArrId {
        self.identity[x.0]
    }

    pub fn is_identity(&self, a: ArrId) -> bool {
        let s = self.src(a);
        s == self.dst(a) && self.identity[s.0] == a
    }

    /// `g` after `f`; `None` when `dst f != src g`.
    pub fn compose(&self, g: ArrId, f: ArrId) -> Option<ArrId> {
        self.compose[g.0 * self.arrows.len() + f.0]
    }

    /// Arrows `x -> y`, in id order.
    pub fn hom(&self, x: ObjId, y: ObjId) -> &[ArrId] {
        &self.hom_sets[x.0 * self.objects.len() + y.0]
    }

    pub fn inverse(&self, a: ArrId) -> Option<ArrId> {
        let (s, d) = (self.src(a), self.dst(a));
        self.hom(d, s).iter().copied().find(|&b| {
            self.compose(b, a) == Some(self.identity(s)) && self.compose(a, b) == Some(self.identity(d))
        })
    }

    pub fn is_iso(&self, a: ArrId) -> bool {
        self.inverse(a).is_some()
    }

    /// Whether `x` and `y` are isomorphic objects.
    pub fn isomorphic(&self, x: ObjId, y: ObjId) -> bool {
        self.hom(x, y).iter().any(|&a| self.is_iso(a))
    }
}

/// Validate the category laws. Each violation names the law and the witnessing arrows.
pub fn check_fincat(c: &FinCat) -> Report {
    let mut rep = Report::new();
    for x in c.objects() {
        let i = c.identity(x);
        rep.expect(c.src(i) == x && c.dst(i) == x, "fincat.identity-typing", || {
            vec![c.object_name(x).into(), c.arrow_name(i).into()]
        });
    }
    for g in c.arrows() {
        for f in c.arrows() {
            let Some(h) = c.compose(g, f) else { continue };
            rep.expect(c.src(h) == c.src(f) && c.dst(h) == c.dst(g), "fincat.compose-typing", || {
                vec![c.arrow_name(g).into(), c.arrow_name(f).into()]
            });
        }
    }
    if !rep.passed() {
        return rep;
    }
    for f in c.arrows() {
        let (s, d) = (c.src(f), c.dst(f));
        rep.expect(c.compose(c.identity(d), f) == Some(f), "fincat.left-identity", || {
            vec![c.arrow_name(f).into()]
        });
        rep.expect(c.compose(f, c.identity(s)) == Some(f), "fincat.right-identity", || {
            vec![c.arrow_name(f).into()]
        });
    }
    for f in c.arrows() {
        for y in c.objects() {
            for &g in c.hom(c.dst(f), y) {
                let gf = c.compose(g, f).expect("composable");
                for z in c.objects() {
                    for &h in c.hom(y, z) {
                        let lhs = c.compose(h, gf);
                        let rhs = c.compose(h, g).and_then(|hg| c.compose(hg, f));
                        rep.expect(lhs == rhs, "fincat.associativity", || {
                            vec![c.arrow_name(h).into(), c.arrow_name(g).into(), c.arrow_name(f).into()]
                        });
                    }
                }
            }
        }
    }
    rep
}

pub(crate) fn same_cat(a: &Arc<FinCat>, b: &Arc<FinCat>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Binary product; objects and arrows are named `(c,d)`.
pub fn product(c: &FinCat, d: &FinCat) -> FinCat {
    let pair = |a: &str, b: &str| format!("({a},{b})");
    let nd_o = d.n_objects();
    let nd_a = d.n_arrows();
    let objects = c
        .objects()
        .flat_map(|x| d.objects().map(move |y| (x, y)))
        .map(|(x, y)| pair(c.object_name(x), d.object_name(y)))
        .collect();
    let arrows = c
        .arrows()
        .flat_map(|f| d.arrows().map(move |g| (f, g)))
        .map(|(f, g)| Arrow {
            name: pair(c.arrow_name(f), d.arrow_name(g)),
            src: ObjId(c.src(f).0 * nd_o + d.src(g).0),
            dst: ObjId(c.dst(f).0 * nd_o + d.dst(g).0),
        })
        .collect();
    let identity = c
        .objects()
        .flat_map(|x| d.objects().map(move |y| (x, y)))
        .map(|(x, y)| ArrId(c.identity(x).0 * nd_a + d.identity(y).0))
        .collect();
    FinCat::build(objects, arrows, identity, |g, f| {
        let (g1, g2) = (ArrId(g.0 / nd_a), ArrId(g.0 % nd_a));
        let (f1, f2) = (ArrId(f.0 / nd_a), ArrId(f.0 % nd_a));
        let h1 = c.compose(g1, f1).expect("componentwise composable");
        let h2 = d.compose(g2, f2).expect("componentwise composable");
        ArrId(h1.0 * nd_a + h2.0)
    })
    .expect("product of well-formed categories is well-formed")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor {
    pub dom: Arc<FinCat>,
    pub cod: Arc<FinCat>,
    pub obj_map: Vec<ObjId>,
    pub arr_map: Vec<ArrId>,
}

impl Functor {
    pub fn new(dom: Arc<FinCat>, cod: Arc<FinCat>, obj_map: Vec<ObjId>, arr_map: Vec<ArrId>) -> Result<Functor> {
        if obj_map.len() != dom.n_objects() || arr_map.len() != dom.n_arrows() {
            return Err(Error::Structure("functor tables do not cover the domain".into()));
        }
        if obj_map.iter().any(|o| o.0 >= cod.n_objects()) || arr_map.iter().any(|a| a.0 >= cod.n_arrows()) {
            return Err(Error::Structure("functor tables point outside the codomain".into()));
        }
        Ok(Functor { dom, cod, obj_map, arr_map })
    }

    pub fn obj(&self, x: ObjId) -> ObjId {
        self.obj_map[x.0]
    }

    pub fn arr(&self, a: ArrId) -> ArrId {
        self.arr_map[a.0]
    }
}

impl fmt::Display for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .dom
            .arrows()
            .map(|a| format!("{}->{}", self.dom.arrow_name(a), self.cod.arrow_name(self.arr(a))))
            .collect();
        write!(f, "<{}>", parts.join(","))
    }
}

pub fn check_functor(func: &Functor) -> Report {
    let (c, d) = (&*func.dom, &*func.cod);
    let mut rep = Report::new();
    for a in c.arrows() {
        let fa = func.arr(a);
        rep.expect(
            d.src(fa) == func.obj(c.src(a)) && d.dst(fa) == func.obj(c.dst(a)),
            "functor.typing",
            || vec![c.arrow_name(a).into()],
        );
    }
    if !rep.passed() {
        return rep;
    }
    for x in c.objects() {
        rep.expect(func.arr(c.identity(x)) == d.identity(func.obj(x)), "functor.identity", || {
            vec![c.object_name(x).into()]
        });
    }
    for g in c.arrows() {
        for f in c.arrows() {
            let Some(gf) = c.compose(g, f) else { continue };
            rep.expect(
                d.compose(func.arr(g), func.arr(f)) == Some(func.arr(gf)),
                "functor.composition",
                || vec![c.arrow_name(g).into(), c.arrow_name(f).into()],
            );
        }
    }
    rep
}

pub fn identity_functor(c: &Arc<FinCat>) -> Functor {
    Functor {
        dom: c.clone(),
        cod: c.clone(),
        obj_map: c.objects().collect(),
        arr_map: c.arrows().collect(),
    }
}

/// `g` after `f`.
pub fn compose_functors(g: &Functor, f: &Functor) -> Result<Functor> {
    if !same_cat(&f.cod, &g.dom) {
        return Err(Error::Mismatch("codomain of inner functor is not the domain of outer".into()));
    }
    Ok(Functor {
        dom: f.dom.clone(),
        cod: g.cod.clone(),
        obj_map: f.obj_map.iter().map(|&x| g.obj(x)).collect(),
        arr_map: f.arr_map.iter().map(|&a| g.arr(a)).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTrans {
    pub dom: Functor,
    pub cod: Functor,
    pub components: Vec<ArrId>,
}

impl NatTrans {
    pub fn new(dom: Functor, cod: Functor, components: Vec<ArrId>) -> Result<NatTrans> {
        if !same_cat(&dom.dom, &cod.dom) || !same_cat(&dom.cod, &cod.cod) {
            return Err(Error::Mismatch("natural transformation between non-parallel functors".into()));
        }
        if components.len() != dom.dom.n_objects() || components.iter().any(|a| a.0 >= dom.cod.n_arrows()) {
            return Err(Error::Structure("component table does not match the categories".into()));
        }
        Ok(NatTrans { dom, cod, components })
    }

    pub fn at(&self, x: ObjId) -> ArrId {
        self.components[x.0]
    }
}

pub fn check_nattrans(t: &NatTrans) -> Report {
    let (c, d) = (&*t.dom.dom, &*t.dom.cod);
    let mut rep = Report::new();
    for x in c.objects() {
        let a = t.at(x);
        rep.expect(
            d.src(a) == t.dom.obj(x) && d.dst(a) == t.cod.obj(x),
            "nattrans.typing",
            || vec![c.object_name(x).into()],
        );
    }
    if !rep.passed() {
        return rep;
    }
    for f in c.arrows() {
        let lhs = d.compose(t.at(c.dst(f)), t.dom.arr(f));
        let rhs = d.compose(t.cod.arr(f), t.at(c.src(f)));
        rep.expect(lhs.is_some() && lhs == rhs, "nattrans.naturality", || vec![c.arrow_name(f).into()]);
    }
    rep
}

pub fn identity_nattrans(f: &Functor) -> NatTrans {
    NatTrans {
        dom: f.clone(),
        cod: f.clone(),
        components: f.dom.objects().map(|x| f.cod.identity(f.obj(x))).collect(),
    }
}

/// Vertical composite `tau . sigma`.
pub fn vcomp_nattrans(tau: &NatTrans, sigma: &NatTrans) -> Result<NatTrans> {
    if sigma.cod != tau.dom {
        return Err(Error::NotComposable("natural transformations are not vertically composable".into()));
    }
    let d = &sigma.dom.cod;
    let components = sigma
        .dom
        .dom
        .objects()
        .map(|x| {
            d.compose(tau.at(x), sigma.at(x))
                .ok_or_else(|| Error::NotComposable(format!("components at `{}`", sigma.dom.dom.object_name(x))))
        })
        .collect::<Result<_>>()?;
    Ok(NatTrans {
        dom: sigma.dom.clone(),
        cod: tau.cod.clone(),
        components,
    })
}

/// Horizontal composite `beta * alpha` for `alpha: F => F'` (C -> D) and `beta: G => G'` (D -> E).
pub fn hcomp_nattrans(beta: &NatTrans, alpha: &NatTrans) -> Result<NatTrans> {
    if !same_cat(&alpha.dom.cod, &beta.dom.dom) {
        return Err(Error::NotComposable("natural transformations are not horizontally composable".into()));
    }
    let e = &beta.dom.cod;
    let components = alpha
        .dom
        .dom
        .objects()
        .map(|x| {
            let b = beta.at(alpha.cod.obj(x));
            let ga = beta.dom.arr(alpha.at(x));
            e.compose(b, ga)
                .ok_or_else(|| Error::NotComposable(format!("whiskered components at `{}`", alpha.dom.dom.object_name(x))))
        })
        .collect::<Result<_>>()?;
    Ok(NatTrans {
        dom: compose_functors(&beta.dom, &alpha.dom)?,
        cod: compose_functors(&beta.cod, &alpha.cod)?,
        components,
    })
}

pub(crate) fn budget_check(what: impl FnOnce() -> String, predicted: u128, budget: u64) -> Result<()> {
    if predicted > budget as u128 {
        return Err(Error::BudgetExceeded {
            what: what(),
            predicted,
            budget,
        });
    }
    Ok(())
}

/// Iterate the cartesian product of `choices` in odometer order (last index fastest).
pub(crate) fn for_each_choice(choices: &[Vec<usize>], mut visit: impl FnMut(&[usize])) {
    if choices.iter().any(Vec::is_empty) {
        return;
    }
    let mut idx = vec![0usize; choices.len()];
    let mut current: Vec<usize> = choices.iter().map(|c| c[0]).collect();
    loop {
        visit(&current);
        let mut k = choices.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                current[k] = choices[k][idx[k]];
                break;
            }
            idx[k] = 0;
            current[k] = choices[k][0];
        }
    }
}

/// Number of tuples in the product of `choices`, saturating.
pub(crate) fn product_size(choices: &[Vec<usize>]) -> u128 {
    choices
        .iter()
        .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128))
}

/// All functors `C -> D`, in lexicographic order of (object map, arrow map).
pub fn enumerate_functors(c: &Arc<FinCat>, d: &Arc<FinCat>, budget: u64) -> Result<Vec<Functor>> {
    let what = || format!("functors with {} objects into {} objects", c.n_objects(), d.n_objects());
    let obj_choices: Vec<Vec<usize>> = vec![(0..d.n_objects()).collect(); c.n_objects()];
    budget_check(what, product_size(&obj_choices), budget)?;

    let mut candidate_sets = Vec::new();
    let mut predicted: u128 = 0;
    for_each_choice(&obj_choices, |om| {
        let arr_choices: Vec<Vec<usize>> = c
            .arrows()
            .map(|a| {
                let (fs, fd) = (ObjId(om[c.src(a).0]), ObjId(om[c.dst(a).0]));
                if c.is_identity(a) {
                    vec![d.identity(fs).0]
                } else {
                    d.hom(fs, fd).iter().map(|x| x.0).collect()
                }
            })
            .collect();
        predicted = predicted.saturating_add(product_size(&arr_choices));
        candidate_sets.push((om.to_vec(), arr_choices));
    });
    budget_check(what, predicted, budget)?;

    let mut out = Vec::new();
    for (om, arr_choices) in candidate_sets {
        for_each_choice(&arr_choices, |am| {
            let ok = c.arrows().all(|g| {
                c.arrows().all(|f| match c.compose(g, f) {
                    Some(gf) => d.compose(ArrId(am[g.0]), ArrId(am[f.0])) == Some(ArrId(am[gf.0])),
                    None => true,
                })
            });
            if ok {
                out.push(Functor {
                    dom: c.clone(),
                    cod: d.clone(),
                    obj_map: om.iter().map(|&o| ObjId(o)).collect(),
                    arr_map: am.iter().map(|&a| ArrId(a)).collect(),
                });
            }
        });
    }
    Ok(out)
}

/// All natural transformations `F => G`, in lexicographic order of components.
pub fn enumerate_nattrans(f: &Functor, g: &Functor, budget: u64) -> Result<Vec<NatTrans>> {
    if !same_cat(&f.dom, &g.dom) || !same_cat(&f.cod, &g.cod) {
        return Err(Error::Mismatch("functors are not parallel".into()));
    }
    let (c, d) = (&*f.dom, &*f.cod);
    let choices: Vec<Vec<usize>> = c
        .objects()
        .map(|x| d.hom(f.obj(x), g.obj(x)).iter().map(|a| a.0).collect())
        .collect();
    budget_check(|| "natural transformation components".into(), product_size(&choices), budget)?;
    let mut out = Vec::new();
    for_each_choice(&choices, |comps| {
        let natural = c.arrows().all(|a| {
            d.compose(ArrId(comps[c.dst(a).0]), f.arr(a)) == d.compose(g.arr(a), ArrId(comps[c.src(a).0]))
        });
        if natural {
            out.push(NatTrans {
                dom: f.clone(),
                cod: g.clone(),
                components: comps.iter().map(|&a| ArrId(a)).collect(),
            });
        }
    });
    Ok(out)
}

/// Injective on every hom-set.
pub fn is_faithful(func: &Functor) -> bool {
    let c = &*func.dom;
    c.objects().all(|x| {
        c.objects().all(|y| {
            let mut seen = std::collections::HashSet::new();
            c.hom(x, y).iter().all(|&a| seen.insert(func.arr(a)))
        })
    })
}

/// Surjective on every hom-set between images.
pub fn is_full(func: &Functor) -> bool {
    let (c, d) = (&*func.dom, &*func.cod);
    c.objects().all(|x| {
        c.objects().all(|y| {
            let image: std::collections::HashSet<ArrId> = c.hom(x, y).iter().map(|&a| func.arr(a)).collect();
            d.hom(func.obj(x), func.obj(y)).iter().all(|b| image.contains(b))
        })
    })
}

/// Every object of the codomain is isomorphic to an image object.
pub fn is_essentially_surjective(func: &Functor) -> bool {
    let d = &*func.cod;
    d.objects().all(|y| func.obj_map.iter().any(|&x| d.isomorphic(x, y)))
}

pub fn is_equivalence(func: &Functor) -> bool {
    is_faithful(func) && is_full(func) && is_essentially_surjective(func)
}
