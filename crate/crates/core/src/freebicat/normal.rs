use super::{CanonicalWitness, OneTerm, TwoComputad, TwoTerm};
use crate::error::{Error, Result};

/// Right-nested, identity-free normal form of `t` with a canonical witness
/// `t => nf`.
pub fn normalize(t: &OneTerm, cd: &TwoComputad) -> Result<(OneTerm, CanonicalWitness)> {
    t.endpoints(cd)?;
    let (nf, w) = norm(t);
    let w = CanonicalWitness::new(w, cd)?;
    debug_assert_eq!(w.dst, nf);
    Ok((nf, w))
}

fn norm(t: &OneTerm) -> (OneTerm, TwoTerm) {
    match t {
        OneTerm::Id(_) | OneTerm::Gen(_) => (t.clone(), TwoTerm::IdTwo(t.clone())),
        OneTerm::Comp(l, r) => {
            let (nl, wl) = norm(l);
            let (nr, wr) = norm(r);
            let (n, wm) = merge(&nl, &nr);
            (n, TwoTerm::vcomp(wm, TwoTerm::hcomp(wl, wr)))
        }
    }
}

/// Normal form of `n1 . n2` for normal `n1`, `n2`.
fn merge(n1: &OneTerm, n2: &OneTerm) -> (OneTerm, TwoTerm) {
    let whole = OneTerm::comp(n1.clone(), n2.clone());
    match (n1, n2) {
        (OneTerm::Id(_), _) => (n2.clone(), TwoTerm::LUnit(n2.clone())),
        (_, OneTerm::Id(_)) => (n1.clone(), TwoTerm::RUnit(n1.clone())),
        (OneTerm::Gen(_), _) => (whole.clone(), TwoTerm::IdTwo(whole)),
        (OneTerm::Comp(g, rest), _) => {
            let (n, w) = merge(rest, n2);
            let step = TwoTerm::Assoc((**g).clone(), (**rest).clone(), n2.clone());
            let nf = OneTerm::Comp(g.clone(), Box::new(n));
            (nf, TwoTerm::vcomp(TwoTerm::hcomp(TwoTerm::IdTwo((**g).clone()), w), step))
        }
    }
}

/// Equality of canonical 2-cells: true exactly when they are parallel.
pub fn coherence_equal(u: &CanonicalWitness, v: &CanonicalWitness) -> Result<bool> {
    for w in [u, v] {
        if let Some(g) = w.term.first_generator() {
            return Err(Error::NotCanonical(format!("{g} (use two_cell_equal for terms with generators)")));
        }
    }
    Ok(u.src == v.src && u.dst == v.dst)
}

fn id2(t: &OneTerm) -> TwoTerm {
    TwoTerm::IdTwo(t.clone())
}

fn c(t: &OneTerm, u: &OneTerm) -> OneTerm {
    OneTerm::comp(t.clone(), u.clone())
}

/// Legs of the unit-associativity diagram from `(h.(I.g)).f` to `h.(g.f)`.
pub fn unit_associativity_legs(
    h: &OneTerm,
    g: &OneTerm,
    f: &OneTerm,
    cd: &TwoComputad,
) -> Result<(CanonicalWitness, CanonicalWitness)> {
    let (_, b) = g.endpoints(cd)?;
    let i = OneTerm::Id(b.clone());
    let (hs, _) = h.endpoints(cd)?;
    if hs != b {
        return Err(Error::NotComposable(format!("`{h}` after `{g}`")));
    }
    let left = TwoTerm::path(vec![
        TwoTerm::hcomp(TwoTerm::InvAssoc(h.clone(), i.clone(), g.clone()), id2(f)),
        TwoTerm::hcomp(TwoTerm::hcomp(TwoTerm::RUnit(h.clone()), id2(g)), id2(f)),
        TwoTerm::Assoc(h.clone(), g.clone(), f.clone()),
    ]);
    let right = TwoTerm::path(vec![
        TwoTerm::Assoc(h.clone(), c(&i, g), f.clone()),
        TwoTerm::hcomp(id2(h), TwoTerm::hcomp(TwoTerm::LUnit(g.clone()), id2(f))),
    ]);
    Ok((CanonicalWitness::new(left, cd)?, CanonicalWitness::new(right, cd)?))
}

/// Legs of the pentagon from `((k.h).g).f` to `k.(h.(g.f))`.
pub fn pentagon_legs(
    k: &OneTerm,
    h: &OneTerm,
    g: &OneTerm,
    f: &OneTerm,
    cd: &TwoComputad,
) -> Result<(CanonicalWitness, CanonicalWitness)> {
    let a = |x: &OneTerm, y: &OneTerm, z: &OneTerm| TwoTerm::Assoc(x.clone(), y.clone(), z.clone());
    let left = TwoTerm::path(vec![a(&c(k, h), g, f), a(k, h, &c(g, f))]);
    let right = TwoTerm::path(vec![
        TwoTerm::hcomp(a(k, h, g), id2(f)),
        a(k, &c(h, g), f),
        TwoTerm::hcomp(id2(k), a(h, g, f)),
    ]);
    Ok((CanonicalWitness::new(left, cd)?, CanonicalWitness::new(right, cd)?))
}

/// Legs of the triangle from `(g.I).f` to `g.f`.
pub fn triangle_legs(g: &OneTerm, f: &OneTerm, cd: &TwoComputad) -> Result<(CanonicalWitness, CanonicalWitness)> {
    let (_, b) = f.endpoints(cd)?;
    let i = OneTerm::Id(b);
    let left = TwoTerm::path(vec![
        TwoTerm::Assoc(g.clone(), i, f.clone()),
        TwoTerm::hcomp(id2(g), TwoTerm::LUnit(f.clone())),
    ]);
    let right = TwoTerm::hcomp(TwoTerm::RUnit(g.clone()), id2(f));
    Ok((CanonicalWitness::new(left, cd)?, CanonicalWitness::new(right, cd)?))
}
