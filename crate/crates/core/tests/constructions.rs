mod common;

use altpoly::construct::{
    comix_order, covers, dual_rank_reduce, mix, mix_with_facet, rank_reduce, rank_reduce_with_witness,
    sesqui_extension, ReductionWitness,
};
use altpoly::{family, verify, Permutation, Sggi, Verdict};
use num_bigint::BigUint;
use rand::Rng;

use common::{corpus, involution_with, random_sggi, rng, sesqui_keeps_order, simplex};

const SMALL: u64 = 20_000;

fn small_corpus() -> Vec<(String, Sggi)> {
    corpus()
        .into_iter()
        .filter(|(_, s)| s.group().order() <= BigUint::from(SMALL))
        .collect()
}

#[test]
fn comix_law_on_random_pairs() {
    let list = small_corpus();
    let mut g = rng(21);
    for _ in 0..30 {
        let (a, p) = &list[g.gen_range(0..list.len())];
        let (b, q) = &list[g.gen_range(0..list.len())];
        let m = mix(p, q);
        let (op, oq, om) = (p.group().order(), q.group().order(), m.group().order());
        assert_eq!(comix_order(p, q).unwrap() * &om, &op * &oq, "{a} {b}");
        // both projections are onto
        let left: Vec<usize> = (1..=p.degree()).collect();
        let right: Vec<usize> = (p.degree() + 1..=m.degree()).collect();
        assert_eq!(m.group().action_on(&left).order(), op, "{a} {b}");
        assert_eq!(m.group().action_on(&right).order(), oq, "{a} {b}");
        assert_eq!(m.rank(), p.rank().max(q.rank()));
    }
}

#[test]
fn self_mix_and_cover() {
    for (name, s) in small_corpus() {
        assert_eq!(mix(&s, &s).group().order(), s.group().order(), "{name}");
        assert_eq!(comix_order(&s, &s).unwrap(), s.group().order(), "{name}");
        assert!(covers(&s, &s), "{name}");
    }
}

#[test]
fn mix_of_covering_facets_is_a_c_group() {
    let list: Vec<(String, Sggi)> = small_corpus()
        .into_iter()
        .filter(|(_, s)| s.rank() >= 2 && verify(s).is_certified())
        .collect();
    let mut checked = 0;
    for (a, p) in &list {
        for (b, q) in &list {
            if p.rank() == q.rank() && covers(&p.facet(), &q.facet()) {
                assert!(verify(&mix(p, q)).is_certified(), "{a} {b}");
                checked += 1;
            }
        }
    }
    assert!(checked > 20);
}

#[test]
fn sp_mix_is_a_direct_product() {
    let p = family::build("P", 4, 1).unwrap();
    let q = family::build("FL", 4, 1).unwrap();
    assert_eq!(mix(&p, &q).group().order(), BigUint::from(3_628_800u32));
    assert_eq!(comix_order(&p, &q).unwrap(), BigUint::from(1u32));
    assert!(covers(&p.facet(), &q.facet()));
}

#[test]
fn mix_with_facet_examples() {
    assert!(verify(&mix_with_facet(&simplex(3))).is_certified());
    let m = mix_with_facet(&family::build("L", 6, 0).unwrap());
    assert_eq!(m.degree(), 17);
    assert_eq!(m, family::build("M", 6, 0).unwrap());
    let edge = common::sggi(2, &["(1,2)"]);
    assert_eq!(mix_with_facet(&edge).group().order(), BigUint::from(2u32));
}

#[test]
fn sesqui_order_dichotomy() {
    let mut g = rng(22);
    for i in 0..30 {
        let s = random_sggi(&mut g, 4 + i % 4, 3 + i % 2);
        let order = s.group().order();
        for k in 0..s.rank() {
            let psi = sesqui_extension(&s, k).unwrap();
            let got = psi.group().order();
            let want = if sesqui_keeps_order(&s, k) { order.clone() } else { &order * 2u32 };
            assert_eq!(got, want, "{s:?} k={k}");
        }
    }
}

#[test]
fn sesqui_parity_criterion() {
    let mut g = rng(23);
    for i in 0..30 {
        let n = 6 + i % 4;
        let r = 3 + i % 2;
        let k = g.gen_range(0..r);
        // rho_k odd, every other generator even
        let gens: Vec<Permutation> = (0..r)
            .map(|j| {
                let pairs = if j == k { [1, 3][g.gen_range(0..2)] } else { 2 };
                involution_with(&mut g, n, pairs)
            })
            .collect();
        let s = Sggi::new(n, gens);
        let psi = sesqui_extension(&s, k).unwrap();
        assert_eq!(psi.group().order(), s.group().order(), "{s:?} k={k}");
        assert!(sesqui_keeps_order(&s, k));
    }
}

#[test]
fn sesqui_doubles_s3() {
    let s = common::sggi(3, &["(1,2)", "(2,3)"]);
    assert_eq!(sesqui_extension(&s, 0).unwrap().group().order(), BigUint::from(12u32));
    assert!(!sesqui_keeps_order(&s, 0));
}

/// Runs rank_reduce along a chain, checking order and verdict at each step.
fn reduce_chain(start: Sggi, max_degree: usize) -> usize {
    let mut steps = 0;
    let mut s = start;
    while s.rank() >= 4 && s.degree() <= max_degree {
        let Ok(t) = rank_reduce(&s) else { break };
        assert_eq!(t.group().order(), s.group().order());
        assert_eq!(verify(&t).verdict, verify(&s).verdict);
        s = t;
        steps += 1;
    }
    steps
}

#[test]
fn rank_reduce_on_r_and_l_chains() {
    let mut steps = 0;
    for r in 5..=9 {
        steps += reduce_chain(family::build("R", r, 0).unwrap(), 14);
    }
    for r in 6..=9 {
        steps += reduce_chain(family::build("L", r, 0).unwrap(), 14);
    }
    assert!(steps >= 6, "only {steps} reductions ran");
}

#[test]
fn rank_reduce_named_steps() {
    assert_eq!(rank_reduce(&family::build("R", 6, 1).unwrap()).unwrap(), family::build("R", 5, 2).unwrap());
    assert_eq!(rank_reduce(&family::build("L", 7, 0).unwrap()).unwrap(), family::build("L", 6, 1).unwrap());
    let sh = family::build("Sh", 8, 2).unwrap();
    let bl = dual_rank_reduce(&dual_rank_reduce(&sh).unwrap()).unwrap();
    assert_eq!(bl.to_graph().unwrap(), family::build("Bl", 6, 2).unwrap().to_graph().unwrap());
}

#[test]
fn rank_reduce_witnesses() {
    // simplex: rho_2 rho_3 has order 3
    let (_, w) = rank_reduce_with_witness(&simplex(4)).unwrap();
    assert_eq!(w, ReductionWitness::OddOrder);
    for s in [family::build("L", 7, 0).unwrap(), family::build("R", 6, 0).unwrap()] {
        assert!(rank_reduce_with_witness(&s).is_ok());
    }
}

#[test]
fn dual_rank_reduce_is_conjugate() {
    for s in [simplex(5), family::build("Sh", 6, 2).unwrap(), family::build("FL", 6, 1).unwrap()] {
        match (dual_rank_reduce(&s), rank_reduce(&s.dual())) {
            (Ok(a), Ok(b)) => assert_eq!(a.dual(), b),
            (Err(a), Err(b)) => assert_eq!(a, b),
            other => panic!("{other:?}"),
        }
    }
}

#[test]
fn derived_routes_match_explicit_graphs() {
    for name in ["FL", "R", "Bl", "P", "Sy", "L", "D"] {
        let spec = family::lookup(name).unwrap();
        let mut found = 0;
        for r in spec.min_rank..=spec.min_rank + 2 {
            for k in 0..=6 {
                if (spec.degree)(r, k) > 20 {
                    continue;
                }
                let (Ok(Some(t)), Ok(Some(d))) = (family::transcribed(name, r, k), family::derived(name, r, k)) else {
                    continue;
                };
                assert_eq!(t.to_graph().unwrap(), d.to_graph().unwrap(), "{name}({r},{k})");
                found += 1;
            }
        }
        assert!(found > 0, "{name} has no pair of routes");
    }
}

#[test]
fn verdicts_of_reduced_d() {
    let d = family::build("D", 7, 0).unwrap();
    let t = rank_reduce(&d).unwrap();
    assert_eq!(t, family::build("D", 6, 2).unwrap());
    assert_eq!(verify(&t).verdict, Verdict::Certified);
}
