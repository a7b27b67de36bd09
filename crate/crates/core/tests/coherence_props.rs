mod common;

use std::sync::Arc;

use bicoh::fixtures::{cocycle_z2, trivial_cocycle_z2};
use bicoh::freebicat::{coherence_equal, eval_two, normalize, parse_one, OneTerm, TwoTerm};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn is_normal(t: &OneTerm) -> bool {
    match t {
        OneTerm::Id(_) | OneTerm::Gen(_) => true,
        OneTerm::Comp(l, r) => matches!(**l, OneTerm::Gen(_)) && !matches!(**r, OneTerm::Id(_)) && is_normal(r),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_form_is_normal_and_keeps_generators(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (cd, leaves) = common::random_string(&mut rng, 7);
        let t = common::bracket(&mut rng, &leaves);
        let (nf, w) = normalize(&t, &cd).unwrap();
        prop_assert!(is_normal(&nf));
        prop_assert_eq!(nf.generators(), t.generators());
        prop_assert_eq!(nf.endpoints(&cd).unwrap(), t.endpoints(&cd).unwrap());
        prop_assert_eq!(&w.src, &t);
        prop_assert_eq!(&w.dst, &nf);
        let (again, _) = normalize(&nf, &cd).unwrap();
        prop_assert_eq!(again, nf);
    }

    #[test]
    fn normal_form_ignores_bracketing_and_identities(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (cd, leaves) = common::random_string(&mut rng, 7);
        let t1 = common::bracket(&mut rng, &leaves);
        let l2 = common::with_ids(&mut rng, &leaves, &cd);
        let t2 = common::bracket(&mut rng, &l2);
        prop_assert_eq!(normalize(&t1, &cd).unwrap().0, normalize(&t2, &cd).unwrap().0);
    }

    #[test]
    fn parallel_canonical_cells_agree_in_the_cocycle_fixtures(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (cd, u, v) = common::random_parallel_pair(&mut rng, 6);
        prop_assert!(coherence_equal(&u, &v).unwrap());
        for b in [cocycle_z2(), trivial_cocycle_z2()] {
            let asg = common::random_loop_assignment(&mut rng, &cd, &b);
            let x = eval_two(&u.term, &cd, &b, &asg).unwrap();
            let y = eval_two(&v.term, &cd, &b, &asg).unwrap();
            prop_assert_eq!(x, y, "{} vs {}", u.term, v.term);
        }
    }

    #[test]
    fn witness_round_trip_evaluates_to_an_identity(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (cd, u, _) = common::random_parallel_pair(&mut rng, 6);
        let b = Arc::new(cocycle_z2());
        let asg = common::random_loop_assignment(&mut rng, &cd, &b);
        let loop_ = u.inverse().after(&u).unwrap();
        let x = eval_two(&loop_.term, &cd, &b, &asg).unwrap();
        prop_assert!(b.is_identity2(x));
    }
}

#[test]
fn non_parallel_witnesses_are_not_coherence_equal() {
    let t = parse_one("(h * g) * f").unwrap();
    let cd = bicoh::freebicat::TwoComputad::infer(&[&t]).unwrap();
    let (_, w) = normalize(&t, &cd).unwrap();
    let id = bicoh::freebicat::CanonicalWitness::new(TwoTerm::IdTwo(t.clone()), &cd).unwrap();
    assert!(!coherence_equal(&w, &id).unwrap());
}

#[test]
fn generators_are_rejected_by_coherence_equal() {
    let t = parse_one("f").unwrap();
    let cd = bicoh::freebicat::TwoComputad::infer(&[&t]).unwrap();
    let id = bicoh::freebicat::CanonicalWitness::new(TwoTerm::IdTwo(t), &cd).unwrap();
    let mut bogus = id.clone();
    bogus.term = TwoTerm::gen("p");
    assert!(coherence_equal(&bogus, &id).is_err());
}

#[test]
fn evaluation_separates_legs_over_a_broken_associator() {
    use bicoh::bicat::{sign_bicategory, Sign};
    use bicoh::freebicat::{pentagon_legs, Assignment};
    let b = sign_bicategory(2, |h, g, f| if (h, g, f) == (1, 1, 0) { Sign::Minus } else { Sign::Plus }).unwrap();
    let k = parse_one("x").unwrap();
    let cd = bicoh::freebicat::TwoComputad::infer(&[&parse_one("x * x").unwrap()]).unwrap();
    let (l, r) = pentagon_legs(&k, &k, &k, &k, &cd).unwrap();
    let a = bicoh::bicat::ZeroId(0);
    let mut asg = Assignment::new().one("x", b.one_cell(a, a, "u").unwrap());
    for z in cd.zero_cells() {
        asg = asg.zero(z, a);
    }
    let x = eval_two(&l.term, &cd, &b, &asg).unwrap();
    let y = eval_two(&r.term, &cd, &b, &asg).unwrap();
    assert_ne!(x, y);
}
