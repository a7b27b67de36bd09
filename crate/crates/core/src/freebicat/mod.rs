//! Free bicategories on 2-computads: term syntax, normal forms with coherence
//! witnesses, the 2-cell word problem, and evaluation into finite bicategories.

mod eval;
mod normal;
mod syntax;
mod word;

pub use eval::{eval_one, eval_two, Assignment};
pub use normal::{coherence_equal, unit_associativity_legs, normalize, pentagon_legs, triangle_legs};
pub use syntax::{parse_one, parse_two};
pub use word::{interchange_normal_form, strictify_term, two_cell_equal, Move, StrictCell};

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneGen {
    pub name: String,
    pub src: String,
    pub dst: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoGen {
    pub name: String,
    pub src: OneTerm,
    pub dst: OneTerm,
}

/// Generating data for a free bicategory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoComputad {
    zero_cells: Vec<String>,
    one_gens: Vec<OneGen>,
    two_gens: Vec<TwoGen>,
    one_index: HashMap<String, usize>,
    two_index: HashMap<String, usize>,
}

impl TwoComputad {
    pub fn new(zero_cells: Vec<String>, one_gens: Vec<OneGen>, two_gens: Vec<TwoGen>) -> Result<TwoComputad> {
        let zs: HashSet<&str> = zero_cells.iter().map(String::as_str).collect();
        if zs.len() != zero_cells.len() {
            return Err(Error::Structure("duplicate 0-cell in computad".into()));
        }
        let mut names = HashSet::new();
        for n in one_gens.iter().map(|g| &g.name).chain(two_gens.iter().map(|g| &g.name)) {
            if !names.insert(n.as_str()) {
                return Err(Error::Structure(format!("duplicate generator `{n}`")));
            }
        }
        for g in &one_gens {
            for end in [&g.src, &g.dst] {
                if !zs.contains(end.as_str()) {
                    return Err(Error::Unresolved(format!("0-cell `{end}` of generator `{}`", g.name)));
                }
            }
        }
        let cd = TwoComputad {
            one_index: one_gens.iter().enumerate().map(|(i, g)| (g.name.clone(), i)).collect(),
            two_index: two_gens.iter().enumerate().map(|(i, g)| (g.name.clone(), i)).collect(),
            zero_cells,
            one_gens,
            two_gens,
        };
        for g in &cd.two_gens {
            let s = g.src.endpoints(&cd)?;
            let d = g.dst.endpoints(&cd)?;
            if s != d {
                return Err(Error::Structure(format!("2-generator `{}` has non-parallel endpoints", g.name)));
            }
        }
        Ok(cd)
    }

    pub fn zero_cells(&self) -> &[String] {
        &self.zero_cells
    }

    pub fn one_gens(&self) -> &[OneGen] {
        &self.one_gens
    }

    pub fn two_gens(&self) -> &[TwoGen] {
        &self.two_gens
    }

    pub fn has_zero(&self, a: &str) -> bool {
        self.zero_cells.iter().any(|z| z == a)
    }

    pub fn one_gen(&self, name: &str) -> Option<&OneGen> {
        self.one_index.get(name).map(|&i| &self.one_gens[i])
    }

    pub fn two_gen(&self, name: &str) -> Option<&TwoGen> {
        self.two_index.get(name).map(|&i| &self.two_gens[i])
    }

    /// Computad whose cells are exactly those mentioned by `t`, with 0-cells
    /// inferred from composition constraints. `id[A]` names a 0-cell; other
    /// 0-cells are named `_0`, `_1`, ... in order of first appearance.
    pub fn infer(terms: &[&OneTerm]) -> Result<TwoComputad> {
        let mut slots = UnionFind::default();
        let mut named: Vec<(String, usize)> = Vec::new();
        let mut gens: Vec<(String, usize, usize)> = Vec::new();
        for t in terms {
            infer_walk(t, &mut slots, &mut named, &mut gens);
        }
        let mut names: HashMap<usize, String> = HashMap::new();
        for (n, slot) in &named {
            let r = slots.find(*slot);
            match names.get(&r) {
                Some(prev) if prev != n => {
                    return Err(Error::Structure(format!("0-cells `{prev}` and `{n}` are forced equal")))
                }
                _ => {
                    names.insert(r, n.clone());
                }
            }
        }
        let mut zero_cells: Vec<String> = Vec::new();
        let mut fresh = 0;
        let mut name_of = |slot: usize, slots: &mut UnionFind, zero_cells: &mut Vec<String>| {
            let r = slots.find(slot);
            let n = names
                .entry(r)
                .or_insert_with(|| {
                    fresh += 1;
                    format!("_{}", fresh - 1)
                })
                .clone();
            if !zero_cells.contains(&n) {
                zero_cells.push(n.clone());
            }
            n
        };
        let mut one_gens = Vec::new();
        for (g, s, d) in &gens {
            let src = name_of(*s, &mut slots, &mut zero_cells);
            let dst = name_of(*d, &mut slots, &mut zero_cells);
            one_gens.push(OneGen { name: g.clone(), src, dst });
        }
        for (_, slot) in &named {
            name_of(*slot, &mut slots, &mut zero_cells);
        }
        TwoComputad::new(zero_cells, one_gens, vec![])
    }
}

#[derive(Default)]
struct UnionFind(Vec<usize>);

impl UnionFind {
    fn fresh(&mut self) -> usize {
        self.0.push(self.0.len());
        self.0.len() - 1
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a.max(b)] = a.min(b);
    }
}

fn infer_walk(
    t: &OneTerm,
    slots: &mut UnionFind,
    named: &mut Vec<(String, usize)>,
    gens: &mut Vec<(String, usize, usize)>,
) -> (usize, usize) {
    match t {
        OneTerm::Id(a) => {
            let s = match named.iter().find(|(n, _)| n == a) {
                Some(&(_, s)) => s,
                None => {
                    let s = slots.fresh();
                    named.push((a.clone(), s));
                    s
                }
            };
            (s, s)
        }
        OneTerm::Gen(g) => match gens.iter().find(|(n, _, _)| n == g) {
            Some(&(_, s, d)) => (s, d),
            None => {
                let (s, d) = (slots.fresh(), slots.fresh());
                gens.push((g.clone(), s, d));
                (s, d)
            }
        },
        OneTerm::Comp(l, r) => {
            let (rs, rd) = infer_walk(r, slots, named, gens);
            let (ls, ld) = infer_walk(l, slots, named, gens);
            slots.union(rd, ls);
            (rs, ld)
        }
    }
}

/// A formal 1-cell. `Comp(t, u)` reads `t . u`: first `u`, then `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OneTerm {
    Id(String),
    Gen(String),
    Comp(Box<OneTerm>, Box<OneTerm>),
}

impl OneTerm {
    pub fn id(a: &str) -> OneTerm {
        OneTerm::Id(a.to_string())
    }

    pub fn gen(g: &str) -> OneTerm {
        OneTerm::Gen(g.to_string())
    }

    pub fn comp(t: OneTerm, u: OneTerm) -> OneTerm {
        OneTerm::Comp(Box::new(t), Box::new(u))
    }

    /// Right-nested composite `g1 . (g2 . (... . gn))`; `Id(a)` when empty.
    pub fn right_nested(gens: &[&str], a: &str) -> OneTerm {
        match gens.split_last() {
            None => OneTerm::id(a),
            Some((last, rest)) => rest
                .iter()
                .rev()
                .fold(OneTerm::gen(last), |acc, g| OneTerm::comp(OneTerm::gen(g), acc)),
        }
    }

    /// `(src, dst)` 0-cell names, checking composability at every node.
    pub fn endpoints(&self, cd: &TwoComputad) -> Result<(String, String)> {
        match self {
            OneTerm::Id(a) => {
                if !cd.has_zero(a) {
                    return Err(Error::Unresolved(format!("0-cell `{a}`")));
                }
                Ok((a.clone(), a.clone()))
            }
            OneTerm::Gen(g) => cd
                .one_gen(g)
                .map(|g| (g.src.clone(), g.dst.clone()))
                .ok_or_else(|| Error::Unresolved(format!("1-cell generator `{g}`"))),
            OneTerm::Comp(t, u) => {
                let (us, ud) = u.endpoints(cd)?;
                let (ts, td) = t.endpoints(cd)?;
                if ud != ts {
                    return Err(Error::NotComposable(format!("`{t}` after `{u}`: {ud} != {ts}")));
                }
                Ok((us, td))
            }
        }
    }

    /// Generator names read left to right.
    pub fn generators(&self) -> Vec<&str> {
        let mut out = Vec::new();
        fn go<'a>(t: &'a OneTerm, out: &mut Vec<&'a str>) {
            match t {
                OneTerm::Id(_) => {}
                OneTerm::Gen(g) => out.push(g),
                OneTerm::Comp(l, r) => {
                    go(l, out);
                    go(r, out);
                }
            }
        }
        go(self, &mut out);
        out
    }

    pub fn leaves(&self) -> usize {
        match self {
            OneTerm::Comp(l, r) => l.leaves() + r.leaves(),
            _ => 1,
        }
    }
}

/// A formal 2-cell over a computad.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TwoTerm {
    IdTwo(OneTerm),
    Gen(String),
    Assoc(OneTerm, OneTerm, OneTerm),
    LUnit(OneTerm),
    RUnit(OneTerm),
    InvAssoc(OneTerm, OneTerm, OneTerm),
    InvLUnit(OneTerm),
    InvRUnit(OneTerm),
    /// `VComp(b, a)` is `b . a`: first `a`, then `b`.
    VComp(Box<TwoTerm>, Box<TwoTerm>),
    HComp(Box<TwoTerm>, Box<TwoTerm>),
}

impl TwoTerm {
    pub fn vcomp(b: TwoTerm, a: TwoTerm) -> TwoTerm {
        TwoTerm::VComp(Box::new(b), Box::new(a))
    }

    pub fn hcomp(b: TwoTerm, a: TwoTerm) -> TwoTerm {
        TwoTerm::HComp(Box::new(b), Box::new(a))
    }

    pub fn gen(g: &str) -> TwoTerm {
        TwoTerm::Gen(g.to_string())
    }

    /// Compose a path given in application order.
    pub fn path(steps: Vec<TwoTerm>) -> TwoTerm {
        let mut it = steps.into_iter();
        let first = it.next().expect("non-empty path");
        it.fold(first, |acc, s| TwoTerm::vcomp(s, acc))
    }

    /// `(src, dst)` formal 1-cells, checking endpoint coherence at every node.
    pub fn boundary(&self, cd: &TwoComputad) -> Result<(OneTerm, OneTerm)> {
        use OneTerm::Comp as C;
        let b = |x: &OneTerm| Box::new(x.clone());
        let check = |t: &OneTerm| t.endpoints(cd);
        match self {
            TwoTerm::IdTwo(t) => {
                check(t)?;
                Ok((t.clone(), t.clone()))
            }
            TwoTerm::Gen(g) => cd
                .two_gen(g)
                .map(|g| (g.src.clone(), g.dst.clone()))
                .ok_or_else(|| Error::Unresolved(format!("2-cell generator `{g}`"))),
            TwoTerm::Assoc(h, g, f) | TwoTerm::InvAssoc(h, g, f) => {
                let l = C(Box::new(C(b(h), b(g))), b(f));
                let r = C(b(h), Box::new(C(b(g), b(f))));
                check(&l)?;
                Ok(if matches!(self, TwoTerm::Assoc(..)) { (l, r) } else { (r, l) })
            }
            TwoTerm::LUnit(f) | TwoTerm::InvLUnit(f) => {
                let (_, d) = check(f)?;
                let l = C(Box::new(OneTerm::Id(d)), b(f));
                Ok(if matches!(self, TwoTerm::LUnit(_)) { (l, f.clone()) } else { (f.clone(), l) })
            }
            TwoTerm::RUnit(f) | TwoTerm::InvRUnit(f) => {
                let (s, _) = check(f)?;
                let l = C(b(f), Box::new(OneTerm::Id(s)));
                Ok(if matches!(self, TwoTerm::RUnit(_)) { (l, f.clone()) } else { (f.clone(), l) })
            }
            TwoTerm::VComp(be, al) => {
                let (s, m1) = al.boundary(cd)?;
                let (m2, d) = be.boundary(cd)?;
                if m1 != m2 {
                    return Err(Error::NotComposable(format!("vertical: `{be}` after `{al}` ({m1} != {m2})")));
                }
                Ok((s, d))
            }
            TwoTerm::HComp(be, al) => {
                let (as_, ad) = al.boundary(cd)?;
                let (bs, bd) = be.boundary(cd)?;
                let (_, a_end) = as_.endpoints(cd)?;
                let (b_start, _) = bs.endpoints(cd)?;
                if a_end != b_start {
                    return Err(Error::NotComposable(format!("horizontal: `{be}` * `{al}`")));
                }
                Ok((C(Box::new(bs), Box::new(as_)), C(Box::new(bd), Box::new(ad))))
            }
        }
    }

    /// First generator 2-cell leaf, if any.
    pub fn first_generator(&self) -> Option<&str> {
        match self {
            TwoTerm::Gen(g) => Some(g),
            TwoTerm::VComp(l, r) | TwoTerm::HComp(l, r) => l.first_generator().or_else(|| r.first_generator()),
            _ => None,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.first_generator().is_none()
    }

    pub fn generator_count(&self) -> usize {
        match self {
            TwoTerm::Gen(_) => 1,
            TwoTerm::VComp(l, r) | TwoTerm::HComp(l, r) => l.generator_count() + r.generator_count(),
            _ => 0,
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            TwoTerm::VComp(l, r) | TwoTerm::HComp(l, r) => l.leaves() + r.leaves(),
            _ => 1,
        }
    }

    /// Formal inverse of a canonical term.
    pub fn inverse(&self) -> Result<TwoTerm> {
        Ok(match self {
            TwoTerm::IdTwo(t) => TwoTerm::IdTwo(t.clone()),
            TwoTerm::Gen(g) => return Err(Error::NotCanonical(g.clone())),
            TwoTerm::Assoc(h, g, f) => TwoTerm::InvAssoc(h.clone(), g.clone(), f.clone()),
            TwoTerm::InvAssoc(h, g, f) => TwoTerm::Assoc(h.clone(), g.clone(), f.clone()),
            TwoTerm::LUnit(f) => TwoTerm::InvLUnit(f.clone()),
            TwoTerm::InvLUnit(f) => TwoTerm::LUnit(f.clone()),
            TwoTerm::RUnit(f) => TwoTerm::InvRUnit(f.clone()),
            TwoTerm::InvRUnit(f) => TwoTerm::RUnit(f.clone()),
            TwoTerm::VComp(b, a) => TwoTerm::vcomp(a.inverse()?, b.inverse()?),
            TwoTerm::HComp(b, a) => TwoTerm::hcomp(b.inverse()?, a.inverse()?),
        })
    }
}

/// A 2-cell term with no generator leaves, with its recorded boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalWitness {
    pub term: TwoTerm,
    pub src: OneTerm,
    pub dst: OneTerm,
}

impl CanonicalWitness {
    pub fn new(term: TwoTerm, cd: &TwoComputad) -> Result<CanonicalWitness> {
        if let Some(g) = term.first_generator() {
            return Err(Error::NotCanonical(g.to_string()));
        }
        let (src, dst) = term.boundary(cd)?;
        Ok(CanonicalWitness { term, src, dst })
    }

    pub fn inverse(&self) -> CanonicalWitness {
        CanonicalWitness {
            term: self.term.inverse().expect("canonical"),
            src: self.dst.clone(),
            dst: self.src.clone(),
        }
    }

    /// `self` after `first`.
    pub fn after(&self, first: &CanonicalWitness) -> Result<CanonicalWitness> {
        if first.dst != self.src {
            return Err(Error::NotComposable(format!("witness `{}` after `{}`", self.term, first.term)));
        }
        Ok(CanonicalWitness {
            term: TwoTerm::vcomp(self.term.clone(), first.term.clone()),
            src: first.src.clone(),
            dst: self.dst.clone(),
        })
    }
}
