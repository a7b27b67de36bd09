use std::collections::HashMap;

use super::{OneTerm, TwoComputad, TwoTerm};
use crate::error::{Error, Result};

/// Generator `gen` applied at offset `pos` of the current generator string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub pos: usize,
    pub gen: String,
}

/// A 2-cell with all structural cells erased: a sequence of moves rewriting
/// `src` into `dst`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrictCell {
    pub src: Vec<String>,
    pub dst: Vec<String>,
    pub moves: Vec<Move>,
}

fn flat(t: &OneTerm) -> Vec<String> {
    t.generators().into_iter().map(str::to_string).collect()
}

struct Shape {
    src: Vec<String>,
    dst: Vec<String>,
}

fn shapes(cd: &TwoComputad) -> Result<HashMap<&str, Shape>> {
    let mut out = HashMap::new();
    for g in cd.two_gens() {
        let s = Shape { src: flat(&g.src), dst: flat(&g.dst) };
        if s.src.is_empty() || s.dst.is_empty() {
            return Err(Error::Unsupported(format!(
                "2-generator `{}` has an identity source or target",
                g.name
            )));
        }
        out.insert(g.name.as_str(), s);
    }
    Ok(out)
}

/// Erase structural cells and flatten all 1-cell contexts.
pub fn strictify_term(u: &TwoTerm, cd: &TwoComputad) -> Result<StrictCell> {
    u.boundary(cd)?;
    let sh = shapes(cd)?;
    strict(u, &sh)
}

fn strict(u: &TwoTerm, sh: &HashMap<&str, Shape>) -> Result<StrictCell> {
    let unmoved = |t: &OneTerm| {
        let f = flat(t);
        StrictCell { src: f.clone(), dst: f, moves: vec![] }
    };
    Ok(match u {
        TwoTerm::IdTwo(t)
        | TwoTerm::LUnit(t)
        | TwoTerm::RUnit(t)
        | TwoTerm::InvLUnit(t)
        | TwoTerm::InvRUnit(t) => unmoved(t),
        TwoTerm::Assoc(h, g, f) | TwoTerm::InvAssoc(h, g, f) => {
            let mut s = flat(h);
            s.extend(flat(g));
            s.extend(flat(f));
            StrictCell { src: s.clone(), dst: s, moves: vec![] }
        }
        TwoTerm::Gen(g) => {
            let s = sh.get(g.as_str()).ok_or_else(|| Error::Unresolved(format!("2-cell generator `{g}`")))?;
            StrictCell { src: s.src.clone(), dst: s.dst.clone(), moves: vec![Move { pos: 0, gen: g.clone() }] }
        }
        TwoTerm::VComp(b, a) => {
            let a = strict(a, sh)?;
            let b = strict(b, sh)?;
            debug_assert_eq!(a.dst, b.src);
            let mut moves = a.moves;
            moves.extend(b.moves);
            StrictCell { src: a.src, dst: b.dst, moves }
        }
        TwoTerm::HComp(b, a) => {
            let a = strict(a, sh)?;
            let b = strict(b, sh)?;
            let shift = b.src.len();
            let mut moves: Vec<Move> = a.moves.into_iter().map(|m| Move { pos: m.pos + shift, gen: m.gen }).collect();
            moves.extend(b.moves);
            let cat = |x: Vec<String>, y: Vec<String>| x.into_iter().chain(y).collect::<Vec<_>>();
            StrictCell { src: cat(b.src, a.src), dst: cat(b.dst, a.dst), moves }
        }
    })
}

/// Canonical representative of `c` modulo interchange: moves grouped into
/// dependency layers, each layer emitted left to right.
pub fn interchange_normal_form(c: &StrictCell, cd: &TwoComputad) -> Result<StrictCell> {
    let sh = shapes(cd)?;
    let mut wires: Vec<usize> = (0..c.src.len()).collect();
    let mut next_wire = wires.len();
    let mut producer: Vec<Option<usize>> = vec![None; wires.len()];
    let mut layer: Vec<usize> = Vec::with_capacity(c.moves.len());
    let mut consumed: Vec<Vec<usize>> = Vec::with_capacity(c.moves.len());
    for (i, m) in c.moves.iter().enumerate() {
        let s = sh.get(m.gen.as_str()).ok_or_else(|| Error::Unresolved(format!("2-cell generator `{}`", m.gen)))?;
        let end = m.pos + s.src.len();
        if end > wires.len() {
            return Err(Error::Mismatch(format!("move {} at {} overruns the string", m.gen, m.pos)));
        }
        let ins: Vec<usize> = wires[m.pos..end].to_vec();
        let l = ins.iter().filter_map(|&w| producer[w]).map(|p| layer[p] + 1).max().unwrap_or(0);
        layer.push(l);
        let outs: Vec<usize> = (next_wire..next_wire + s.dst.len()).collect();
        next_wire += outs.len();
        producer.resize(next_wire, Some(i));
        wires.splice(m.pos..end, outs);
        consumed.push(ins);
    }

    let depth = layer.iter().max().map_or(0, |d| d + 1);
    let mut wires: Vec<usize> = (0..c.src.len()).collect();
    let mut produced: Vec<Vec<usize>> = vec![Vec::new(); c.moves.len()];
    {
        let mut nw = c.src.len();
        for (i, m) in c.moves.iter().enumerate() {
            let k = sh[m.gen.as_str()].dst.len();
            produced[i] = (nw..nw + k).collect();
            nw += k;
        }
    }
    let mut moves = Vec::with_capacity(c.moves.len());
    for d in 0..depth {
        let mut batch: Vec<(usize, usize)> = (0..c.moves.len())
            .filter(|&i| layer[i] == d)
            .map(|i| (wires.iter().position(|&w| w == consumed[i][0]).expect("live wire"), i))
            .collect();
        batch.sort_unstable();
        for (_, i) in batch {
            let pos = wires.iter().position(|&w| w == consumed[i][0]).expect("live wire");
            let n = consumed[i].len();
            wires.splice(pos..pos + n, produced[i].iter().copied());
            moves.push(Move { pos, gen: c.moves[i].gen.clone() });
        }
    }
    Ok(StrictCell { src: c.src.clone(), dst: c.dst.clone(), moves })
}

/// Equality of parallel 2-cells in the free bicategory on `cd`.
pub fn two_cell_equal(u: &TwoTerm, v: &TwoTerm, cd: &TwoComputad) -> Result<bool> {
    let bu = u.boundary(cd)?;
    let bv = v.boundary(cd)?;
    if bu != bv {
        return Err(Error::NotParallel(format!("`{u}` and `{v}`")));
    }
    let nu = interchange_normal_form(&strictify_term(u, cd)?, cd)?;
    let nv = interchange_normal_form(&strictify_term(v, cd)?, cd)?;
    Ok(nu == nv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freebicat::{parse_two, OneGen, TwoGen};

    fn computad() -> TwoComputad {
        let g = |n: &str, s: &str, d: &str| OneGen { name: n.into(), src: s.into(), dst: d.into() };
        TwoComputad::new(
            vec!["A".into()],
            vec![g("x", "A", "A"), g("y", "A", "A")],
            vec![
                TwoGen { name: "p".into(), src: OneTerm::gen("x"), dst: OneTerm::gen("y") },
                TwoGen { name: "q".into(), src: OneTerm::gen("y"), dst: OneTerm::gen("x") },
            ],
        )
        .unwrap()
    }

    fn eq(a: &str, b: &str) -> bool {
        two_cell_equal(&parse_two(a).unwrap(), &parse_two(b).unwrap(), &computad()).unwrap()
    }

    #[test]
    fn identity_law() {
        assert!(eq("(v : 1[y] . p)", "p"));
        assert!(eq("(v : p . 1[x])", "p"));
    }

    #[test]
    fn interchange_both_orders() {
        let h = "(h : p * q)";
        assert!(eq(h, "(v : (h : 1[y] * q) . (h : p * 1[y]))"));
        assert!(eq(h, "(v : (h : p * 1[x]) . (h : 1[x] * q))"));
    }

    #[test]
    fn sequences() {
        assert!(eq("(v : (h : 1[y] * p) . (h : p * 1[x]))", "(v : (h : p * 1[y]) . (h : 1[x] * p))"));
        assert!(!eq("(v : q . p)", "1[x]"));
        assert!(!eq("(v : p . (v : q . p))", "p"));
    }

    #[test]
    fn structural_cells_are_erased() {
        assert!(eq("(v : a[y;x;x] . (h : (h : p * 1[x]) * 1[x]))", "(v : (h : p * 1[(x * x)]) . a[x;x;x])"));
    }

    #[test]
    fn non_parallel_is_an_error() {
        let r = two_cell_equal(&parse_two("p").unwrap(), &parse_two("q").unwrap(), &computad());
        assert!(matches!(r, Err(Error::NotParallel(_))));
    }

    #[test]
    fn identity_boundaries_are_unsupported() {
        let cd = TwoComputad::new(
            vec!["A".into()],
            vec![OneGen { name: "x".into(), src: "A".into(), dst: "A".into() }],
            vec![TwoGen { name: "e".into(), src: OneTerm::id("A"), dst: OneTerm::gen("x") }],
        )
        .unwrap();
        let r = two_cell_equal(&TwoTerm::gen("e"), &TwoTerm::gen("e"), &cd);
        assert!(matches!(r, Err(Error::Unsupported(_))));
    }
}
