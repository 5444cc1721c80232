mod common;

use std::collections::HashSet;

use altpoly::family;
use altpoly::group::{closure_elements, StabChain};
use altpoly::{EngineConfig, GroupError, Permutation, PermutationGroup};
use num_bigint::BigUint;
use rand::Rng;

use common::{involution, rng};

const LIMIT: usize = 100_000;

/// Random generating tuples whose closure stays under the limit.
fn small_groups(seed: u64, count: usize) -> Vec<(usize, Vec<Permutation>)> {
    let mut g = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = g.gen_range(3..=9);
        let k = g.gen_range(1..=4);
        let gens: Vec<Permutation> = (0..k).map(|_| involution(&mut g, n)).collect();
        if closure_elements(n, &gens, LIMIT).is_ok() {
            out.push((n, gens));
        }
    }
    out
}

#[test]
fn order_matches_closure() {
    for (n, gens) in small_groups(11, 50) {
        let closure = closure_elements(n, &gens, LIMIT).unwrap();
        let g = PermutationGroup::new(n, &gens);
        assert_eq!(g.order(), BigUint::from(closure.len()), "{gens:?}");
        for x in closure.iter().take(50) {
            assert!(g.contains(x));
        }
    }
}

#[test]
fn contains_rejects_outsiders() {
    let mut g = rng(12);
    for (n, gens) in small_groups(13, 20) {
        let closure = closure_elements(n, &gens, LIMIT).unwrap();
        let group = PermutationGroup::new(n, &gens);
        for _ in 0..30 {
            let x = involution(&mut g, n).compose(&involution(&mut g, n));
            assert_eq!(group.contains(&x), closure.contains(&x));
        }
    }
}

#[test]
fn elements_are_the_closure() {
    for (n, gens) in small_groups(14, 10) {
        let g = PermutationGroup::new(n, &gens);
        let listed: HashSet<Permutation> = g.elements(LIMIT as u64).unwrap().into_iter().collect();
        assert_eq!(listed, closure_elements(n, &gens, LIMIT).unwrap());
    }
}

#[test]
fn lagrange_and_orbit_stabilizer() {
    for (n, gens) in small_groups(15, 30) {
        let g = PermutationGroup::new(n, &gens);
        let sub = g.subgroup(&gens[..1]);
        assert_eq!(g.order() % sub.order(), BigUint::from(0u32));
        let chain = g.chain();
        let product = chain
            .orbit_lengths()
            .iter()
            .fold(BigUint::from(1u32), |acc, &l| acc * BigUint::from(l));
        assert_eq!(product, g.order());
        if let Some(&b) = chain.base().first() {
            assert_eq!(chain.orbit_lengths()[0], g.orbit(b).len());
        }
        let orbits = g.orbits();
        assert_eq!(orbits.iter().map(Vec::len).sum::<usize>(), n);
    }
}

#[test]
fn incremental_chain_matches_batch() {
    for (n, gens) in small_groups(16, 20) {
        let mut chain = StabChain::new(n, &[]);
        for x in &gens {
            chain.add_generator(x);
        }
        assert_eq!(chain.order(), StabChain::new(n, &gens).order());
        for s in chain.strong_generators() {
            assert!(chain.contains(&s));
        }
    }
}

#[test]
fn symmetric_group_orders() {
    for n in 2..=12 {
        let gens: Vec<Permutation> = (1..n)
            .map(|i| Permutation::transposition(n, i, i + 1).unwrap())
            .collect();
        let g = PermutationGroup::new(n, &gens);
        assert_eq!(g.order(), altpoly::classify::factorial(n));
        assert!(g.is_primitive());
    }
}

fn brute_intersection(n: usize, a: &[Permutation], b: &[Permutation]) -> usize {
    let x = closure_elements(n, a, LIMIT).unwrap();
    let y = closure_elements(n, b, LIMIT).unwrap();
    x.intersection(&y).count()
}

#[test]
fn intersection_matches_brute_force() {
    let mut g = rng(17);
    let enumerate = EngineConfig::default();
    let cosets = EngineConfig { enum_threshold: 0, ..EngineConfig::default() };
    let mut done = 0;
    while done < 40 {
        let n = g.gen_range(4..=8);
        let a: Vec<Permutation> = (0..g.gen_range(1..=3)).map(|_| involution(&mut g, n)).collect();
        let b: Vec<Permutation> = (0..g.gen_range(1..=3)).map(|_| involution(&mut g, n)).collect();
        let (ga, gb) = (PermutationGroup::new(n, &a), PermutationGroup::new(n, &b));
        if ga.order() > BigUint::from(LIMIT) || gb.order() > BigUint::from(LIMIT) {
            continue;
        }
        let want = BigUint::from(brute_intersection(n, &a, &b));
        for config in [&enumerate, &cosets] {
            let got = ga.intersect(&gb, config).unwrap();
            assert_eq!(got.order(), want, "{a:?} {b:?}");
            for x in got.generators() {
                assert!(ga.contains(x) && gb.contains(x));
            }
        }
        done += 1;
    }
}

#[test]
fn intersection_budget_gives_up() {
    let n = 10;
    let all: Vec<Permutation> = (1..n).map(|i| Permutation::transposition(n, i, i + 1).unwrap()).collect();
    let a = PermutationGroup::new(n, &all[..n - 2]);
    let b = PermutationGroup::new(n, &all[1..]);
    let config = EngineConfig { enum_threshold: 0, backtrack_budget: 1 };
    assert!(matches!(a.intersect(&b, &config), Err(GroupError::BudgetExhausted { .. })));
}

#[test]
fn block_system_of_sh42() {
    let g = family::build("Sh", 4, 2).unwrap().group();
    assert!(g.is_transitive());
    assert!(!g.is_primitive());
    let systems = g.all_minimal_block_systems();
    assert!(systems.iter().any(|b| b.num_blocks() == 5 && b.block_size() == 2));
    for b in &systems {
        assert!(!b.is_trivial());
        // blocks partition the points and are permuted by every generator
        let mut seen: Vec<usize> = b.blocks.concat();
        seen.sort();
        assert_eq!(seen, (1..=g.degree()).collect::<Vec<_>>());
        for x in g.generators() {
            for block in &b.blocks {
                let mut image: Vec<usize> = block.iter().map(|&p| x.image(p)).collect();
                image.sort();
                assert!(b.blocks.contains(&image));
            }
        }
    }
}

#[test]
fn dihedral_blocks() {
    // D8 acting on the path 1-2-3-4 keeps {1,4} and {2,3} together
    let n = 4;
    let g = PermutationGroup::new(
        n,
        &[
            Permutation::parse_with_degree("(1,2)(3,4)", n).unwrap(),
            Permutation::parse_with_degree("(2,3)", n).unwrap(),
        ],
    );
    let b = g.minimal_blocks((1, 4));
    assert_eq!(b.blocks, vec![vec![1, 4], vec![2, 3]]);
    assert_eq!(g.minimal_blocks((1, 2)).num_blocks(), 1);
}
