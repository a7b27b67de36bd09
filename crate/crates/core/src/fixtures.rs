//! Small named structures used by tests, the acceptance suite and the CLI.

use std::sync::Arc;

use crate::bicat::{group_cocycle_bicategory, strict_bicategory, Bicategory, CompTable, Sign};
use crate::fincat::{ArrId, Arrow, FinCat, ObjId};

fn s(x: &str) -> String {
    x.to_string()
}

pub fn terminal_category() -> FinCat {
    FinCat::build(
        vec![s("*")],
        vec![Arrow { name: s("1"), src: ObjId(0), dst: ObjId(0) }],
        vec![ArrId(0)],
        |_, _| ArrId(0),
    )
    .unwrap()
}

/// `Z/2` as a one-object category with arrows `+1`, `-1`.
pub fn z2_monoid() -> FinCat {
    FinCat::build(
        vec![s("*")],
        vec![
            Arrow { name: s("+1"), src: ObjId(0), dst: ObjId(0) },
            Arrow { name: s("-1"), src: ObjId(0), dst: ObjId(0) },
        ],
        vec![ArrId(0)],
        |g, f| ArrId(g.0 ^ f.0),
    )
    .unwrap()
}

/// The poset `0 < 1`.
pub fn poset2() -> FinCat {
    FinCat::build(
        vec![s("0"), s("1")],
        vec![
            Arrow { name: s("id0"), src: ObjId(0), dst: ObjId(0) },
            Arrow { name: s("id1"), src: ObjId(1), dst: ObjId(1) },
            Arrow { name: s("lt"), src: ObjId(0), dst: ObjId(1) },
        ],
        vec![ArrId(0), ArrId(1)],
        |g, f| if g.0 == 1 { f } else { g },
    )
    .unwrap()
}

/// Two objects `x`, `y` and two parallel arrows `s, t: x -> y`.
pub fn two_parallel_arrows() -> FinCat {
    FinCat::build(
        vec![s("x"), s("y")],
        vec![
            Arrow { name: s("1x"), src: ObjId(0), dst: ObjId(0) },
            Arrow { name: s("1y"), src: ObjId(1), dst: ObjId(1) },
            Arrow { name: s("s"), src: ObjId(0), dst: ObjId(1) },
            Arrow { name: s("t"), src: ObjId(0), dst: ObjId(1) },
        ],
        vec![ArrId(0), ArrId(1)],
        |g, f| if g.0 == 1 { f } else { g },
    )
    .unwrap()
}

/// The `Z/2` sign bicategory with the nontrivial 3-cocycle `c(u,u,u) = -1`.
pub fn cocycle_z2() -> Bicategory {
    group_cocycle_bicategory(2, |h, g, f| {
        if (h, g, f) == (1, 1, 1) {
            Sign::Minus
        } else {
            Sign::Plus
        }
    })
    .unwrap()
}

pub fn trivial_cocycle_z2() -> Bicategory {
    group_cocycle_bicategory(2, |_, _, _| Sign::Plus).unwrap()
}

/// One 0-cell, one 1-cell, one 2-cell.
pub fn trivial_bicategory() -> Bicategory {
    let t = Arc::new(terminal_category());
    strict_bicategory(vec![s("*")], vec![t.clone()], vec![ObjId(0)], |_, _, _| {
        CompTable::build(&t, &t, |_, _| ObjId(0), |_, _| ArrId(0))
    })
    .unwrap()
}

/// Strict 2-category with 0-cells `A`, `B`; the only non-identity 1-cells are
/// `f, g: A -> B`, with a single non-invertible 2-cell `alpha: f -> g`.
pub fn strict_arrow_2cat() -> Bicategory {
    let one = |x: &str| {
        Arc::new(
            FinCat::build(
                vec![s(x)],
                vec![Arrow { name: format!("1{x}"), src: ObjId(0), dst: ObjId(0) }],
                vec![ArrId(0)],
                |_, _| ArrId(0),
            )
            .unwrap(),
        )
    };
    let ab = Arc::new(
        FinCat::build(
            vec![s("f"), s("g")],
            vec![
                Arrow { name: s("1f"), src: ObjId(0), dst: ObjId(0) },
                Arrow { name: s("1g"), src: ObjId(1), dst: ObjId(1) },
                Arrow { name: s("alpha"), src: ObjId(0), dst: ObjId(1) },
            ],
            vec![ArrId(0), ArrId(1)],
            |g, f| if g.0 == 1 { f } else { g },
        )
        .unwrap(),
    );
    let empty = Arc::new(FinCat::build(vec![], vec![], vec![], |_, _| ArrId(0)).unwrap());
    let homs = vec![one("IA"), ab, empty, one("IB")];
    let h2 = homs.clone();
    strict_bicategory(vec![s("A"), s("B")], homs, vec![ObjId(0), ObjId(0)], move |a, b, c| {
        let (l, r) = (&h2[b * 2 + c], &h2[a * 2 + b]);
        if a == b {
            CompTable::build(l, r, |g, _| g, |be, _| be)
        } else {
            CompTable::build(l, r, |_, f| f, |_, al| al)
        }
    })
    .unwrap()
}

/// One 0-cell; 1-cells `I < x` composing by `max`; the only non-identity
/// 2-cell is the non-invertible `i: I -> x`.
pub fn poset_monoid() -> Bicategory {
    let hom = Arc::new(
        FinCat::build(
            vec![s("I"), s("x")],
            vec![
                Arrow { name: s("1I"), src: ObjId(0), dst: ObjId(0) },
                Arrow { name: s("1x"), src: ObjId(1), dst: ObjId(1) },
                Arrow { name: s("i"), src: ObjId(0), dst: ObjId(1) },
            ],
            vec![ArrId(0), ArrId(1)],
            |g, f| if g.0 == 1 { f } else { g },
        )
        .unwrap(),
    );
    let h = hom.clone();
    strict_bicategory(vec![s("*")], vec![hom], vec![ObjId(0)], move |_, _, _| {
        let arrow_between = |x: ObjId, y: ObjId| h.hom(x, y)[0];
        CompTable::build(
            &h,
            &h,
            |g, f| g.max(f),
            |b, a| arrow_between(h.src(b).max(h.src(a)), h.dst(b).max(h.dst(a))),
        )
    })
    .unwrap()
}
