#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use bicoh::bicat::{Bicategory, ZeroId};
use bicoh::freebicat::{normalize, Assignment, CanonicalWitness, OneGen, OneTerm, TwoComputad, TwoTerm};
use rand::rngs::StdRng;
use rand::Rng;

/// A random composable string of 1-cell leaves over a fresh computad, left
/// to right, plus the computad.
pub fn random_string(rng: &mut StdRng, max_leaves: usize) -> (TwoComputad, Vec<OneTerm>) {
    let n_zero = rng.gen_range(1..=3);
    let zero: Vec<String> = (0..n_zero).map(|i| format!("A{i}")).collect();
    let len = rng.gen_range(1..=max_leaves);
    let mut at = rng.gen_range(0..n_zero);
    let mut gens = Vec::new();
    let mut applied = Vec::new();
    for _ in 0..len {
        if rng.gen_bool(0.3) {
            applied.push(OneTerm::id(&zero[at]));
        } else {
            let to = rng.gen_range(0..n_zero);
            let name = format!("g{}", gens.len());
            gens.push(OneGen { name: name.clone(), src: zero[at].clone(), dst: zero[to].clone() });
            applied.push(OneTerm::gen(&name));
            at = to;
        }
    }
    applied.reverse();
    (TwoComputad::new(zero, gens, vec![]).unwrap(), applied)
}

/// Random binary bracketing of `leaves`.
pub fn bracket(rng: &mut StdRng, leaves: &[OneTerm]) -> OneTerm {
    if leaves.len() == 1 {
        return leaves[0].clone();
    }
    let k = rng.gen_range(1..leaves.len());
    OneTerm::comp(bracket(rng, &leaves[..k]), bracket(rng, &leaves[k..]))
}

/// The same generators with identities scattered in at random.
pub fn with_ids(rng: &mut StdRng, leaves: &[OneTerm], cd: &TwoComputad) -> Vec<OneTerm> {
    let gens: Vec<&OneTerm> = leaves.iter().filter(|t| matches!(t, OneTerm::Gen(_))).collect();
    let mut out = Vec::new();
    let endpoint = |t: &OneTerm| t.endpoints(cd).unwrap();
    let start = endpoint(leaves.last().unwrap()).0;
    for (i, g) in gens.iter().enumerate() {
        if rng.gen_bool(0.25) {
            out.push(OneTerm::Id(endpoint(g).1));
        }
        out.push((*g).clone());
        if i + 1 == gens.len() && rng.gen_bool(0.25) {
            out.push(OneTerm::Id(endpoint(g).0));
        }
    }
    if out.is_empty() {
        out.push(OneTerm::Id(start));
    }
    out
}

fn one_step_rewrites(t: &OneTerm, cd: &TwoComputad, grow: bool) -> Vec<(TwoTerm, OneTerm)> {
    let mut out = Vec::new();
    if let OneTerm::Comp(l, r) = t {
        if let OneTerm::Comp(h, g) = &**l {
            let f = (**r).clone();
            let (h, g) = ((**h).clone(), (**g).clone());
            out.push((TwoTerm::Assoc(h.clone(), g.clone(), f.clone()), OneTerm::comp(h, OneTerm::comp(g, f))));
        }
        if let OneTerm::Comp(g, f) = &**r {
            let h = (**l).clone();
            let (g, f) = ((**g).clone(), (**f).clone());
            out.push((TwoTerm::InvAssoc(h.clone(), g.clone(), f.clone()), OneTerm::comp(OneTerm::comp(h, g), f)));
        }
        if matches!(&**l, OneTerm::Id(_)) {
            out.push((TwoTerm::LUnit((**r).clone()), (**r).clone()));
        }
        if matches!(&**r, OneTerm::Id(_)) {
            out.push((TwoTerm::RUnit((**l).clone()), (**l).clone()));
        }
        for (c, l2) in one_step_rewrites(l, cd, grow) {
            out.push((TwoTerm::hcomp(c, TwoTerm::IdTwo((**r).clone())), OneTerm::comp(l2, (**r).clone())));
        }
        for (c, r2) in one_step_rewrites(r, cd, grow) {
            out.push((TwoTerm::hcomp(TwoTerm::IdTwo((**l).clone()), c), OneTerm::comp((**l).clone(), r2)));
        }
    }
    if grow {
        let (s, d) = t.endpoints(cd).unwrap();
        out.push((TwoTerm::InvLUnit(t.clone()), OneTerm::comp(OneTerm::Id(d), t.clone())));
        out.push((TwoTerm::InvRUnit(t.clone()), OneTerm::comp(t.clone(), OneTerm::Id(s))));
    }
    out
}

/// A canonical witness built from `steps` random local rewrites of `t`.
pub fn random_walk(rng: &mut StdRng, t: &OneTerm, steps: usize, cd: &TwoComputad, cap: usize) -> CanonicalWitness {
    let mut cur = t.clone();
    let mut term = TwoTerm::IdTwo(t.clone());
    for _ in 0..steps {
        let opts = one_step_rewrites(&cur, cd, cur.leaves() < cap);
        if opts.is_empty() {
            break;
        }
        let (c, next) = opts[rng.gen_range(0..opts.len())].clone();
        term = TwoTerm::vcomp(c, term);
        cur = next;
    }
    CanonicalWitness::new(term, cd).unwrap()
}

/// Two differently built canonical witnesses with a common boundary.
pub fn random_parallel_pair(
    rng: &mut StdRng,
    max_leaves: usize,
) -> (TwoComputad, CanonicalWitness, CanonicalWitness) {
    let (cd, leaves) = random_string(rng, max_leaves);
    let t1 = bracket(rng, &leaves);
    let l2 = with_ids(rng, &leaves, &cd);
    let t2 = bracket(rng, &l2);
    let (_, to) = normalize(&t2, &cd).unwrap();
    let back = to.inverse();
    let mut leg = || {
        let steps = rng.gen_range(0..8);
        let w = random_walk(rng, &t1, steps, &cd, max_leaves + 2);
        let (_, n) = normalize(&w.dst, &cd).unwrap();
        back.after(&n.after(&w).unwrap()).unwrap()
    };
    let u = leg();
    let v = leg();
    (cd, u, v)
}

/// Every 0-cell to `*`, every 1-cell generator to a random 1-cell.
pub fn random_loop_assignment(rng: &mut StdRng, cd: &TwoComputad, b: &Bicategory) -> Assignment {
    let mut asg = Assignment::new();
    for z in cd.zero_cells() {
        asg = asg.zero(z, ZeroId(0));
    }
    let cells: Vec<_> = b.one_cells(ZeroId(0), ZeroId(0)).collect();
    for g in cd.one_gens() {
        asg = asg.one(&g.name, cells[rng.gen_range(0..cells.len())]);
    }
    asg
}

/// All assignments of the computad's generators into the loops at `*`.
pub fn all_loop_assignments(cd: &TwoComputad, b: &Bicategory) -> Vec<Assignment> {
    let cells: Vec<_> = b.one_cells(ZeroId(0), ZeroId(0)).collect();
    let mut out = vec![Assignment::new()];
    for z in cd.zero_cells() {
        out = out.into_iter().map(|a| a.zero(z, ZeroId(0))).collect();
    }
    for g in cd.one_gens() {
        out = out
            .into_iter()
            .flat_map(|a| cells.iter().map(move |&c| a.clone().one(&g.name, c)))
            .collect();
    }
    out
}

pub type Moves = Vec<(usize, String)>;

fn flat(t: &OneTerm) -> Vec<String> {
    match t {
        OneTerm::Id(_) => vec![],
        OneTerm::Gen(g) => vec![g.clone()],
        OneTerm::Comp(l, r) => {
            let mut v = flat(l);
            v.extend(flat(r));
            v
        }
    }
}

/// Source and target lengths of each 2-generator.
pub fn arities(cd: &TwoComputad) -> HashMap<String, (usize, usize)> {
    cd.two_gens()
        .iter()
        .map(|g| (g.name.clone(), (flat(&g.src).len(), flat(&g.dst).len())))
        .collect()
}

/// Flattened boundary and move list, emitting the left factor of a
/// horizontal composite first.
pub fn oracle_strict(u: &TwoTerm, cd: &TwoComputad) -> (Vec<String>, Vec<String>, Moves) {
    match u {
        TwoTerm::Gen(g) => {
            let g = cd.two_gen(g).unwrap();
            (flat(&g.src), flat(&g.dst), vec![(0, g.name.clone())])
        }
        TwoTerm::VComp(b, a) => {
            let (s, _, mut m) = oracle_strict(a, cd);
            let (_, d, mb) = oracle_strict(b, cd);
            m.extend(mb);
            (s, d, m)
        }
        TwoTerm::HComp(b, a) => {
            let (bs, bd, mut m) = oracle_strict(b, cd);
            let (as_, ad, ma) = oracle_strict(a, cd);
            let shift = bd.len();
            m.extend(ma.into_iter().map(|(p, g)| (p + shift, g)));
            (bs.into_iter().chain(as_).collect(), bd.into_iter().chain(ad).collect(), m)
        }
        other => {
            let (s, d) = other.boundary(cd).unwrap();
            (flat(&s), flat(&d), vec![])
        }
    }
}

/// Swap the adjacent moves at `i`, `i + 1` when they touch disjoint wires.
fn swap(m: &Moves, i: usize, ar: &HashMap<String, (usize, usize)>) -> Option<Moves> {
    let (p1, g1) = &m[i];
    let (p2, g2) = &m[i + 1];
    let (s1, d1) = ar[g1];
    let (s2, d2) = ar[g2];
    let (first, second) = if p2 + s2 <= *p1 {
        ((*p2, g2.clone()), (p1 - s2 + d2, g1.clone()))
    } else if *p2 >= p1 + d1 {
        ((p2 - d1 + s1, g2.clone()), (*p1, g1.clone()))
    } else {
        return None;
    };
    let mut out = m.clone();
    out[i] = first;
    out[i + 1] = second;
    Some(out)
}

/// Least element of the interchange class of `m`, by breadth-first search
/// over the rewrite graph.
pub fn oracle_class_min(m: &Moves, ar: &HashMap<String, (usize, usize)>) -> Moves {
    let mut seen: BTreeSet<Moves> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(m.clone());
    queue.push_back(m.clone());
    while let Some(cur) = queue.pop_front() {
        for i in 0..cur.len().saturating_sub(1) {
            if let Some(next) = swap(&cur, i, ar) {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen.into_iter().next().unwrap()
}

/// Oracle class key of a 2-cell term.
pub fn oracle_key(u: &TwoTerm, cd: &TwoComputad, ar: &HashMap<String, (usize, usize)>) -> (Vec<String>, Vec<String>, Moves) {
    let (s, d, m) = oracle_strict(u, cd);
    let min = oracle_class_min(&m, ar);
    (s, d, min)
}

/// Every well-typed vertical/horizontal composite of at most `max_leaves`
/// leaves, together with its boundary.
pub fn enumerate_terms(leaves: &[TwoTerm], max_leaves: usize, cd: &TwoComputad) -> Vec<(TwoTerm, (OneTerm, OneTerm))> {
    let mut by_size: Vec<Vec<(TwoTerm, (OneTerm, OneTerm))>> = vec![vec![]];
    by_size.push(leaves.iter().map(|l| (l.clone(), l.boundary(cd).unwrap())).collect());
    for n in 2..=max_leaves {
        let mut level = Vec::new();
        for k in 1..n {
            for (b, (bs, bd)) in &by_size[k] {
                for (a, (as_, ad)) in &by_size[n - k] {
                    if ad == bs {
                        level.push((TwoTerm::vcomp(b.clone(), a.clone()), (as_.clone(), bd.clone())));
                    }
                    let h = TwoTerm::hcomp(b.clone(), a.clone());
                    if let Ok(bd2) = h.boundary(cd) {
                        level.push((h, bd2));
                    }
                }
            }
        }
        by_size.push(level);
    }
    by_size.into_iter().flatten().collect()
}

/// `A`; `x, y: A -> A`; `p: x => y.y`; `q: y.y => x`.
pub fn two_generator_computad() -> TwoComputad {
    use bicoh::freebicat::{parse_one, TwoGen};
    let one = |n: &str| OneGen { name: n.into(), src: "A".into(), dst: "A".into() };
    let yy = parse_one("(y * y)").unwrap();
    TwoComputad::new(
        vec!["A".into()],
        vec![one("x"), one("y")],
        vec![
            TwoGen { name: "p".into(), src: OneTerm::gen("x"), dst: yy.clone() },
            TwoGen { name: "q".into(), src: yy, dst: OneTerm::gen("x") },
        ],
    )
    .unwrap()
}

/// Leaves for exhaustive word-problem sweeps over [`two_generator_computad`].
pub fn word_leaves() -> Vec<TwoTerm> {
    use bicoh::freebicat::parse_two;
    ["p", "q", "1[x]", "1[y]", "1[(y * y)]", "a[y;y;y]", "inv(a[y;y;y])", "l[x]", "inv(r[y])"]
        .iter()
        .map(|s| parse_two(s).unwrap())
        .collect()
}
