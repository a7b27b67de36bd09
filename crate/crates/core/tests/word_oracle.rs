mod common;

use std::collections::HashMap;

use bicoh::freebicat::{parse_two, two_cell_equal, TwoTerm};
use proptest::prelude::*;

fn agree_on_all_pairs(max_leaves: usize) -> (usize, usize) {
    let cd = common::two_generator_computad();
    let ar = common::arities(&cd);
    let terms = common::enumerate_terms(&common::word_leaves(), max_leaves, &cd);
    let mut groups: HashMap<_, Vec<(TwoTerm, _)>> = HashMap::new();
    for (t, bd) in terms {
        let key = common::oracle_key(&t, &cd, &ar);
        groups.entry(bd).or_default().push((t, key));
    }
    let (mut pairs, mut equal) = (0, 0);
    for g in groups.values() {
        for (i, (u, ku)) in g.iter().enumerate() {
            for (v, kv) in &g[i..] {
                let expect = ku == kv;
                assert_eq!(two_cell_equal(u, v, &cd).unwrap(), expect, "{u} vs {v}");
                pairs += 1;
                equal += usize::from(expect);
            }
        }
    }
    (pairs, equal)
}

#[test]
fn matches_the_rewrite_oracle_up_to_three_leaves() {
    let (pairs, equal) = agree_on_all_pairs(3);
    assert!(pairs > equal && equal > 0);
}

#[test]
fn oracle_sees_interchange_and_separates_orders() {
    let cd = common::two_generator_computad();
    let ar = common::arities(&cd);
    let key = |s: &str| common::oracle_key(&parse_two(s).unwrap(), &cd, &ar);
    let left_first = key("(v : (h : 1[(y * y)] * p) . (h : p * 1[x]))");
    let right_first = key("(v : (h : p * 1[(y * y)]) . (h : 1[x] * p))");
    let both = key("(h : p * p)");
    assert_eq!(left_first, both);
    assert_eq!(right_first, both);
    assert_ne!(key("(v : q . p)"), key("1[x]"));
    assert_ne!(key("(v : p . q)"), key("1[(y * y)]"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn equality_is_a_congruence(i in 0usize..4096, j in 0usize..4096, k in 0usize..4096) {
        let cd = common::two_generator_computad();
        let terms = common::enumerate_terms(&common::word_leaves(), 2, &cd);
        let pick = |n: usize| &terms[n % terms.len()];
        let (u, bu) = pick(i);
        let (w, bw) = pick(k);
        prop_assert!(two_cell_equal(u, u, &cd).unwrap());
        let (v, bv) = pick(j);
        if bu == bv {
            prop_assert_eq!(two_cell_equal(u, v, &cd).unwrap(), two_cell_equal(v, u, &cd).unwrap());
            if two_cell_equal(u, v, &cd).unwrap() {
                if bw.1 == bu.0 {
                    let (x, y) = (TwoTerm::vcomp(u.clone(), w.clone()), TwoTerm::vcomp(v.clone(), w.clone()));
                    prop_assert!(two_cell_equal(&x, &y, &cd).unwrap());
                }
                let (x, y) = (TwoTerm::hcomp(w.clone(), u.clone()), TwoTerm::hcomp(w.clone(), v.clone()));
                if x.boundary(&cd).is_ok() {
                    prop_assert!(two_cell_equal(&x, &y, &cd).unwrap());
                }
            }
        }
    }

    #[test]
    fn interchange_holds_for_generator_cells(pick in prop::sample::select(vec!["p", "q"]), other in prop::sample::select(vec!["p", "q"])) {
        let cd = common::two_generator_computad();
        let g = |n: &str| cd.two_gen(n).unwrap().clone();
        let (b, a) = (g(pick), g(other));
        let lhs = TwoTerm::vcomp(
            TwoTerm::hcomp(TwoTerm::gen(&b.name), TwoTerm::IdTwo(a.dst.clone())),
            TwoTerm::hcomp(TwoTerm::IdTwo(b.src.clone()), TwoTerm::gen(&a.name)),
        );
        let rhs = TwoTerm::vcomp(
            TwoTerm::hcomp(TwoTerm::IdTwo(b.dst.clone()), TwoTerm::gen(&a.name)),
            TwoTerm::hcomp(TwoTerm::gen(&b.name), TwoTerm::IdTwo(a.src.clone())),
        );
        let flat = TwoTerm::hcomp(TwoTerm::gen(&b.name), TwoTerm::gen(&a.name));
        prop_assert!(two_cell_equal(&lhs, &rhs, &cd).unwrap());
        prop_assert!(two_cell_equal(&lhs, &flat, &cd).unwrap());
    }
}
