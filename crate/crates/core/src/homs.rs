//! The functor bicategory `Hom(B, B')` over a chosen set of homomorphisms,
//! and biequivalence checks.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use crate::bicat::{find_equivalences, Bicategory, CompTable, EquivalenceWitness, OneCell, TwoCell, ZeroId};
use crate::error::{Error, Result};
use crate::fincat::{budget_check, for_each_choice, product_size, ArrId, Arrow, FinCat, ObjId};
use crate::maps::{
    classify_strength, compose_morphisms, compose_transformations, hcomp_modifications, identity_morphism,
    identity_modification, identity_transformation, local_property, modification_holds, morphism_holds,
    same_bicat, transformation_holds, vcomp_modifications, LocalProperty, Modification, Morphism, Strength,
    Transformation,
};

/// Homomorphisms `dom -> cod` to use as 0-cells.
#[derive(Debug, Clone)]
pub struct HomBicatSpec {
    pub dom: Arc<Bicategory>,
    pub cod: Arc<Bicategory>,
    pub zero_cells: Vec<(String, Arc<Morphism>)>,
}

type TransKey = (Vec<ObjId>, Vec<Vec<ArrId>>);
type ModKey = (ObjId, ObjId, Vec<ArrId>);

#[derive(Debug, Clone)]
pub struct HomBicategory {
    pub bicat: Arc<Bicategory>,
    morphisms: Vec<Arc<Morphism>>,
    transformations: Vec<Vec<Arc<Transformation>>>,
    modifications: Vec<Vec<Modification>>,
    trans_index: Vec<HashMap<TransKey, ObjId>>,
    mod_index: Vec<HashMap<ModKey, ArrId>>,
}

fn trans_key(s: &Transformation) -> TransKey {
    (s.one_components().to_vec(), s.two_components().to_vec())
}

impl HomBicategory {
    fn idx(&self, a: ZeroId, b: ZeroId) -> usize {
        a.0 * self.morphisms.len() + b.0
    }

    pub fn morphism(&self, a: ZeroId) -> &Arc<Morphism> {
        &self.morphisms[a.0]
    }

    pub fn transformation(&self, f: OneCell) -> &Arc<Transformation> {
        &self.transformations[self.idx(f.src, f.dst)][f.id.0]
    }

    pub fn modification(&self, x: TwoCell) -> &Modification {
        &self.modifications[self.idx(x.src, x.dst)][x.id.0]
    }

    pub fn one_cell_of(&self, a: ZeroId, b: ZeroId, s: &Transformation) -> Option<OneCell> {
        self.trans_index[self.idx(a, b)].get(&trans_key(s)).map(|&id| OneCell { src: a, dst: b, id })
    }

    pub fn two_cell_of(&self, a: ZeroId, b: ZeroId, m: &Modification) -> Option<TwoCell> {
        let s = self.one_cell_of(a, b, m.dom())?;
        let d = self.one_cell_of(a, b, m.cod())?;
        self.mod_index[self.idx(a, b)]
            .get(&(s.id, d.id, m.components().to_vec()))
            .map(|&id| TwoCell { src: a, dst: b, id })
    }
}

/// All strong transformations `F => G`, ordered by component tables.
pub fn enumerate_strong_transformations(
    f: &Arc<Morphism>,
    g: &Arc<Morphism>,
    budget: u64,
) -> Result<Vec<Arc<Transformation>>> {
    if !same_bicat(f.dom(), g.dom()) || !same_bicat(f.cod(), g.cod()) {
        return Err(Error::Mismatch("transformations between non-parallel morphisms".into()));
    }
    let (b, c) = (f.dom().clone(), f.cod().clone());
    let zs: Vec<ZeroId> = b.zero_cells().collect();
    let ones: Vec<OneCell> = b.all_one_cells();
    let what = || format!("strong transformations over {} 1-cells", ones.len());
    let comp_choices: Vec<Vec<usize>> =
        zs.iter().map(|&x| (0..c.hom(f.obj(x), g.obj(x)).n_objects()).collect()).collect();
    budget_check(what, product_size(&comp_choices), budget)?;

    let cell_choices = |sigma: &[usize]| -> Vec<Vec<usize>> {
        let comp = |x: ZeroId| OneCell { src: f.obj(x), dst: g.obj(x), id: ObjId(sigma[x.0]) };
        ones.iter()
            .map(|&h| {
                let src = c.compose1(g.one(h), comp(h.src)).expect("composable");
                let dst = c.compose1(comp(h.dst), f.one(h)).expect("composable");
                let hom = c.hom(src.src, src.dst);
                hom.hom(src.id, dst.id).iter().filter(|&&a| hom.is_iso(a)).map(|a| a.0).collect()
            })
            .collect()
    };
    let mut predicted: u128 = 0;
    for_each_choice(&comp_choices, |sigma| {
        predicted = predicted.saturating_add(product_size(&cell_choices(sigma)));
    });
    budget_check(what, predicted, budget)?;

    let n = zs.len();
    let mut out = Vec::new();
    for_each_choice(&comp_choices, |sigma| {
        let choices = cell_choices(sigma);
        for_each_choice(&choices, |cells| {
            let mut two = vec![Vec::new(); n * n];
            for (h, &a) in ones.iter().zip(cells) {
                two[h.src.0 * n + h.dst.0].push(ArrId(a));
            }
            let one = sigma.iter().map(|&o| ObjId(o)).collect();
            let t = Transformation::raw(f.clone(), g.clone(), one, two);
            if transformation_holds(&t) {
                out.push(Arc::new(t));
            }
        });
    });
    Ok(out)
}

/// All modifications `sigma => tau`, ordered by component tables.
pub fn enumerate_modifications(
    sigma: &Arc<Transformation>,
    tau: &Arc<Transformation>,
    budget: u64,
) -> Result<Vec<Modification>> {
    if sigma.dom() != tau.dom() || sigma.cod() != tau.cod() {
        return Err(Error::Mismatch("modifications between non-parallel transformations".into()));
    }
    let c = sigma.target().clone();
    let choices: Vec<Vec<usize>> = sigma
        .base()
        .zero_cells()
        .map(|x| {
            let (s, t) = (sigma.component(x), tau.component(x));
            c.hom(s.src, s.dst).hom(s.id, t.id).iter().map(|a| a.0).collect()
        })
        .collect();
    budget_check(|| "modification components".into(), product_size(&choices), budget)?;
    let mut out = Vec::new();
    for_each_choice(&choices, |comps| {
        let m = Modification::raw(sigma.clone(), tau.clone(), comps.iter().map(|&a| ArrId(a)).collect());
        if modification_holds(&m) {
            out.push(m);
        }
    });
    Ok(out)
}

fn missing(what: &str) -> Error {
    Error::Structure(format!("{what} is not among the enumerated cells"))
}

pub fn build_hom_bicategory(spec: &HomBicatSpec, budget: u64) -> Result<HomBicategory> {
    for (name, m) in &spec.zero_cells {
        if !same_bicat(m.dom(), &spec.dom) || !same_bicat(m.cod(), &spec.cod) {
            return Err(Error::Mismatch(format!("0-cell `{name}` has the wrong domain or codomain")));
        }
        if !morphism_holds(m) {
            return Err(Error::Strength(format!("0-cell `{name}` fails the morphism axioms")));
        }
        if classify_strength(&**m) == Strength::Lax {
            return Err(Error::Strength(format!("0-cell `{name}` is not a homomorphism")));
        }
    }
    let c = spec.cod.clone();
    let morphisms: Vec<Arc<Morphism>> = spec.zero_cells.iter().map(|(_, m)| m.clone()).collect();
    let n = morphisms.len();
    let mut transformations = Vec::with_capacity(n * n);
    let mut modifications = Vec::with_capacity(n * n);
    let mut trans_index = Vec::with_capacity(n * n);
    let mut mod_index = Vec::with_capacity(n * n);
    let mut homs = Vec::with_capacity(n * n);
    for f in &morphisms {
        for g in &morphisms {
            let ts = enumerate_strong_transformations(f, g, budget)?;
            let tidx: HashMap<TransKey, ObjId> =
                ts.iter().enumerate().map(|(i, t)| (trans_key(t), ObjId(i))).collect();
            let mut ms = Vec::new();
            let mut arrows = Vec::new();
            for (i, s) in ts.iter().enumerate() {
                for (j, t) in ts.iter().enumerate() {
                    for m in enumerate_modifications(s, t, budget)? {
                        arrows.push(Arrow { name: format!("m{}", arrows.len()), src: ObjId(i), dst: ObjId(j) });
                        ms.push(m);
                    }
                }
            }
            let midx: HashMap<(ObjId, ObjId, Vec<ArrId>), ArrId> = ms
                .iter()
                .zip(&arrows)
                .enumerate()
                .map(|(k, (m, a))| ((a.src, a.dst, m.components().to_vec()), ArrId(k)))
                .collect();
            let identity = ts
                .iter()
                .enumerate()
                .map(|(i, t)| {
                    let m = identity_modification(t);
                    midx.get(&(ObjId(i), ObjId(i), m.components().to_vec()))
                        .copied()
                        .ok_or_else(|| missing("identity modification"))
                })
                .collect::<Result<Vec<_>>>()?;
            let objects = (0..ts.len()).map(|i| format!("s{i}")).collect();
            let mut bad = false;
            let hom = FinCat::build(objects, arrows.clone(), identity, |q, p| {
                let v = vcomp_modifications(&ms[q.0], &ms[p.0]).expect("composable modifications");
                match midx.get(&(arrows[p.0].src, arrows[q.0].dst, v.components().to_vec())) {
                    Some(&k) => k,
                    None => {
                        bad = true;
                        ArrId(0)
                    }
                }
            })?;
            if bad {
                return Err(missing("vertical composite of modifications"));
            }
            homs.push(Arc::new(hom));
            transformations.push(ts);
            modifications.push(ms);
            trans_index.push(tidx);
            mod_index.push(midx);
        }
    }

    let err: RefCell<Option<Error>> = RefCell::new(None);
    let id_one = (0..n)
        .map(|a| {
            let t = identity_transformation(&morphisms[a]);
            trans_index[a * n + a].get(&trans_key(&t)).copied().ok_or_else(|| missing("identity transformation"))
        })
        .collect::<Result<Vec<_>>>()?;
    let names = spec.zero_cells.iter().map(|(s, _)| s.clone()).collect();
    let tr = |x: OneCell| &transformations[x.src.0 * n + x.dst.0][x.id.0];
    let lookup_mod = |a: usize, b: usize, s: ObjId, d: ObjId, comps: Vec<ArrId>| {
        mod_index[a * n + b].get(&(s, d, comps)).copied()
    };
    let lookup_trans = |a: usize, b: usize, t: &Transformation| trans_index[a * n + b].get(&trans_key(t)).copied();
    let base = spec.dom.clone();
    let structural = |s: ObjId, d: ObjId, a: usize, b: usize, cell: &dyn Fn(ZeroId) -> Result<ArrId>| {
        let comps = base.zero_cells().map(cell).collect::<Result<Vec<_>>>().ok()?;
        lookup_mod(a, b, s, d, comps)
    };
    let fail = |e: Error| {
        err.borrow_mut().get_or_insert(e);
        ArrId(0)
    };
    let bicat = {
        let comp_tables = |a: usize, b: usize, c_: usize| {
            let (l, r) = (&homs[b * n + c_], &homs[a * n + b]);
            CompTable::build(
                l,
                r,
                |g, f| {
                    let t = &transformations[b * n + c_][g.0];
                    let s = &transformations[a * n + b][f.0];
                    match compose_transformations(t, s).ok().and_then(|x| lookup_trans(a, c_, &x)) {
                        Some(o) => o,
                        None => {
                            err.borrow_mut().get_or_insert_with(|| missing("composite transformation"));
                            ObjId(0)
                        }
                    }
                },
                |be, al| {
                    let (d, g) = (&modifications[b * n + c_][be.0], &modifications[a * n + b][al.0]);
                    let found = hcomp_modifications(d, g).ok().and_then(|m| {
                        let s = lookup_trans(a, c_, m.dom())?;
                        let t = lookup_trans(a, c_, m.cod())?;
                        lookup_mod(a, c_, s, t, m.components().to_vec())
                    });
                    match found {
                        Some(x) => x,
                        None => {
                            err.borrow_mut().get_or_insert_with(|| missing("horizontal composite of modifications"));
                            ArrId(0)
                        }
                    }
                },
            )
        };
        let mut tables = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c_ in 0..n {
                    tables.push(comp_tables(a, b, c_));
                }
            }
        }
        if let Some(e) = err.borrow_mut().take() {
            return Err(e);
        }
        let table = |a: usize, b: usize, c_: usize| &tables[(a * n + b) * n + c_];
        let compose = |g: OneCell, f: OneCell| table(f.src.0, f.dst.0, g.dst.0).obj(g.id, f.id);
        Bicategory::assemble(
            names,
            homs.clone(),
            id_one.clone(),
            |a, b, c_| table(a, b, c_).clone(),
            |h, g, f| {
                let hg = OneCell { src: g.src, dst: h.dst, id: compose(h, g) };
                let gf = OneCell { src: f.src, dst: g.dst, id: compose(g, f) };
                let (s, d) = (compose(hg, f), compose(h, gf));
                let (th, tg, tf) = (tr(h), tr(g), tr(f));
                structural(s, d, f.src.0, h.dst.0, &|x| Ok(c.assoc(th.component(x), tg.component(x), tf.component(x))?.id))
                    .unwrap_or_else(|| fail(missing("associator modification")))
            },
            |f| {
                let i = OneCell { src: f.dst, dst: f.dst, id: id_one[f.dst.0] };
                let s = compose(i, f);
                let tf = tr(f);
                structural(s, f.id, f.src.0, f.dst.0, &|x| Ok(c.lunit(tf.component(x)).id))
                    .unwrap_or_else(|| fail(missing("left unitor modification")))
            },
            |f| {
                let i = OneCell { src: f.src, dst: f.src, id: id_one[f.src.0] };
                let s = compose(f, i);
                let tf = tr(f);
                structural(s, f.id, f.src.0, f.dst.0, &|x| Ok(c.runit(tf.component(x)).id))
                    .unwrap_or_else(|| fail(missing("right unitor modification")))
            },
        )?
    };
    if let Some(e) = err.into_inner() {
        return Err(e);
    }
    Ok(HomBicategory {
        bicat: Arc::new(bicat),
        morphisms,
        transformations,
        modifications,
        trans_index,
        mod_index,
    })
}

/// Local equivalence plus essential surjectivity on 0-cells.
pub fn is_biequivalence(f: &Morphism, budget: u64) -> Result<bool> {
    if classify_strength(f) == Strength::Lax {
        return Err(Error::Strength("biequivalence test needs a homomorphism".into()));
    }
    if !local_property(f, LocalProperty::Equivalence) {
        return Ok(false);
    }
    let (b, c) = (f.dom(), f.cod());
    for y in c.zero_cells() {
        let mut hit = false;
        for x in b.zero_cells() {
            if !find_equivalences(c, f.obj(x), y, budget)?.is_empty() {
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `F: B -> B'` and `G: B' -> B` with equivalences `1 ~ G.F` in `Hom(B,B)`
/// and `F.G ~ 1` in `Hom(B',B')`.
#[derive(Debug, Clone)]
pub struct BiequivalenceWitness {
    pub f: Arc<Morphism>,
    pub g: Arc<Morphism>,
    pub unit: EquivalenceWitness,
    pub counit: EquivalenceWitness,
    pub unit_hom: Arc<HomBicategory>,
    pub counit_hom: Arc<HomBicategory>,
}

/// Search for the unit and counit equivalences of a candidate pair.
pub fn find_biequivalence_witness(
    f: &Arc<Morphism>,
    g: &Arc<Morphism>,
    budget: u64,
) -> Result<Option<BiequivalenceWitness>> {
    if !same_bicat(f.cod(), g.dom()) || !same_bicat(g.cod(), f.dom()) {
        return Err(Error::Mismatch("morphisms do not form a pair".into()));
    }
    let inside = |b: &Arc<Bicategory>, composite: Morphism| -> Result<Option<(EquivalenceWitness, HomBicategory)>> {
        let spec = HomBicatSpec {
            dom: b.clone(),
            cod: b.clone(),
            zero_cells: vec![("1".into(), Arc::new(identity_morphism(b))), ("GF".into(), Arc::new(composite))],
        };
        let h = build_hom_bicategory(&spec, budget)?;
        let ws = find_equivalences(&h.bicat, ZeroId(0), ZeroId(1), budget)?;
        Ok(ws.first().map(|w| (*w, h)))
    };
    let Some((unit, uh)) = inside(f.dom(), compose_morphisms(g, f)?)? else { return Ok(None) };
    let Some((counit, ch)) = inside(f.cod(), compose_morphisms(f, g)?)? else { return Ok(None) };
    Ok(Some(BiequivalenceWitness {
        f: f.clone(),
        g: g.clone(),
        unit,
        counit,
        unit_hom: Arc::new(uh),
        counit_hom: Arc::new(ch),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicat::{check_bicategory, is_two_category};
    use crate::fincat::{Functor, DEFAULT_BUDGET};
    use crate::fixtures::{cocycle_z2, strict_arrow_2cat};

    #[test]
    fn identity_on_a_two_category() {
        let b = Arc::new(strict_arrow_2cat());
        let id = Arc::new(identity_morphism(&b));
        let spec = HomBicatSpec { dom: b.clone(), cod: b.clone(), zero_cells: vec![("id".into(), id.clone())] };
        let h = build_hom_bicategory(&spec, DEFAULT_BUDGET).unwrap();
        let a = ZeroId(0);
        assert!(h.bicat.hom(a, a).n_objects() >= 1);
        assert!(h.one_cell_of(a, a, &identity_transformation(&id)).is_some());
        let rep = check_bicategory(&h.bicat);
        assert!(rep.passed(), "{rep}");
        assert!(is_two_category(&h.bicat));
    }

    #[test]
    fn identity_is_a_biequivalence() {
        for b in [cocycle_z2(), strict_arrow_2cat()] {
            let b = Arc::new(b);
            assert!(is_biequivalence(&identity_morphism(&b), DEFAULT_BUDGET).unwrap());
        }
    }

    #[test]
    fn constant_morphism_is_not_a_biequivalence() {
        let b = Arc::new(strict_arrow_2cat());
        let a = ZeroId(0);
        let ia = b.id1(a);
        let m = Morphism::assemble(
            b.clone(),
            b.clone(),
            vec![a, a],
            |x, y| {
                let h = b.hom(x, y);
                Functor::new(
                    h.clone(),
                    b.hom(a, a).clone(),
                    vec![ia.id; h.n_objects()],
                    vec![b.id2(ia).id; h.n_arrows()],
                )
            },
            |_, _| Ok(b.id2(ia).id),
            |_| Ok(b.id2(ia).id),
        )
        .unwrap();
        assert!(check_morphism_passes(&m));
        assert!(!is_biequivalence(&m, DEFAULT_BUDGET).unwrap());
    }

    fn check_morphism_passes(m: &Morphism) -> bool {
        crate::maps::check_morphism(m).passed()
    }

    #[test]
    fn identity_pair_has_a_witness() {
        let b = Arc::new(cocycle_z2());
        let id = Arc::new(identity_morphism(&b));
        let w = find_biequivalence_witness(&id, &id, DEFAULT_BUDGET).unwrap().expect("witness");
        assert!(check_bicategory(&w.unit_hom.bicat).passed());
    }

    #[test]
    fn budget_is_reported_before_enumerating() {
        let b = Arc::new(cocycle_z2());
        let id = Arc::new(identity_morphism(&b));
        match enumerate_strong_transformations(&id, &id, 3) {
            Err(Error::BudgetExceeded { predicted, budget: 3, .. }) => assert!(predicted > 3),
            other => panic!("{other:?}"),
        }
    }
}
