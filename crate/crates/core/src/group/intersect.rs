//! Subgroup intersection.
//!
//! Small case: enumerate the smaller group and keep the members of the larger.
//! Large case: let `H` be the smaller group and `G` the larger one. `H` acts on
//! the right cosets of `G`, and `G ∩ H` is the stabilizer of the coset `G`.
//! Cosets are identified by a canonical representative read off `G`'s chain,
//! the orbit of `G` under `H` is explored breadth first, and Schreier
//! generators of the stabilizer are collected until the order reaches
//! `|H| / |orbit|`.

use std::collections::HashMap;

use num_bigint::BigUint;

use super::{EngineConfig, PermutationGroup, StabChain};
use crate::error::GroupError;
use crate::perm::Permutation;

pub(crate) fn intersect(
    a: &PermutationGroup,
    b: &PermutationGroup,
    config: &EngineConfig,
) -> Result<PermutationGroup, GroupError> {
    let degree = a.degree().max(b.degree());
    let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    let small = widen(small, degree);
    let large = widen(large, degree);
    if small.order() <= BigUint::from(config.enum_threshold) {
        return Ok(by_enumeration(&small, &large));
    }
    by_coset_orbit(&small, &large, config.backtrack_budget)
}

fn widen(g: &PermutationGroup, degree: usize) -> PermutationGroup {
    if g.degree() == degree {
        g.clone()
    } else {
        PermutationGroup::new(degree, g.generators())
    }
}

fn by_enumeration(small: &PermutationGroup, large: &PermutationGroup) -> PermutationGroup {
    let degree = small.degree();
    let mut chain = StabChain::new(degree, &[]);
    let mut gens = Vec::new();
    small.chain().for_each_element(|g| {
        if !g.is_identity() && large.contains(g) && chain.add_generator(g) {
            gens.push(g.clone());
        }
    });
    PermutationGroup::from_chain(chain, gens)
}

/// Least element of the coset `G x` under the chain's greedy image order.
pub(crate) fn canonical_coset_rep(chain: &StabChain, x: &Permutation) -> Permutation {
    let mut x = x.clone();
    for level in &chain.levels {
        // G^(i) x: the base point can go to delta^x for any delta in the orbit
        let best = level
            .orbit
            .iter()
            .copied()
            .min_by_key(|&d| x.raw()[d])
            .unwrap();
        x = level.transversal[best].as_ref().unwrap().compose(&x);
    }
    x
}

fn by_coset_orbit(
    small: &PermutationGroup,
    large: &PermutationGroup,
    budget: u64,
) -> Result<PermutationGroup, GroupError> {
    let degree = small.degree();
    let gchain = large.chain();
    let hgens: Vec<Permutation> = small
        .generators()
        .iter()
        .filter(|g| !g.is_identity())
        .cloned()
        .collect();

    // node -> (parent node, generator index); node 0 is the coset G itself
    let id = Permutation::identity(degree);
    let mut index: HashMap<Vec<u16>, usize> = HashMap::new();
    let mut parent: Vec<(usize, usize)> = vec![(0, usize::MAX)];
    let mut reps: Vec<Permutation> = vec![canonical_coset_rep(gchain, &id)];
    index.insert(reps[0].raw().to_vec(), 0);
    let mut i = 0;
    while i < reps.len() {
        for (gi, h) in hgens.iter().enumerate() {
            let next = canonical_coset_rep(gchain, &reps[i].compose(h));
            if !index.contains_key(next.raw()) {
                if reps.len() as u64 >= budget {
                    return Err(GroupError::BudgetExhausted { budget });
                }
                index.insert(next.raw().to_vec(), reps.len());
                parent.push((i, gi));
                reps.push(next);
            }
        }
        i += 1;
    }

    let target = small.order() / BigUint::from(reps.len());
    let word = |mut node: usize| -> Permutation {
        let mut path = Vec::new();
        while node != 0 {
            let (p, gi) = parent[node];
            path.push(gi);
            node = p;
        }
        path.iter()
            .rev()
            .fold(id.clone(), |acc, &gi| acc.compose(&hgens[gi]))
    };

    let mut chain = StabChain::new(degree, &[]);
    let mut gens = Vec::new();
    let mut transversal: HashMap<usize, Permutation> = HashMap::new();
    'outer: for z in 0..reps.len() {
        if chain.order() == target {
            break;
        }
        let tz = transversal.entry(z).or_insert_with(|| word(z)).clone();
        for (gi, h) in hgens.iter().enumerate() {
            let w = index[canonical_coset_rep(gchain, &reps[z].compose(h)).raw()];
            if parent.get(w) == Some(&(z, gi)) {
                continue;
            }
            let tw = transversal.entry(w).or_insert_with(|| word(w)).clone();
            let s = tz.compose(h).compose(&tw.inverse());
            if !s.is_identity() && chain.add_generator(&s) {
                gens.push(s);
                if chain.order() == target {
                    break 'outer;
                }
            }
        }
    }
    debug_assert_eq!(chain.order(), target);
    Ok(PermutationGroup::from_chain(chain, gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(n: usize, gens: &[&str]) -> PermutationGroup {
        let g: Vec<Permutation> = gens
            .iter()
            .map(|s| Permutation::parse_with_degree(s, n).unwrap())
            .collect();
        PermutationGroup::new(n, &g)
    }

    fn forced_coset(a: &PermutationGroup, b: &PermutationGroup) -> PermutationGroup {
        let config = EngineConfig {
            enum_threshold: 0,
            ..EngineConfig::default()
        };
        a.intersect(b, &config).unwrap()
    }

    #[test]
    fn overlapping_symmetric_groups() {
        let a = group(5, &["(1,2)", "(2,3)", "(3,4)"]);
        let b = group(5, &["(3,4)", "(4,5)"]);
        let i = a.intersect(&b, &EngineConfig::default()).unwrap();
        assert_eq!(i.order(), BigUint::from(2u32));
        assert!(i.contains(&Permutation::parse_with_degree("(3,4)", 5).unwrap()));
        assert_eq!(forced_coset(&a, &b).order(), BigUint::from(2u32));
    }

    #[test]
    fn self_intersection() {
        let a = group(6, &["(1,2,3,4,5,6)", "(1,2)"]);
        assert_eq!(forced_coset(&a, &a).order(), a.order());
    }

    #[test]
    fn canonical_rep_is_constant_on_cosets() {
        let g = group(5, &["(1,2,3)", "(3,4,5)"]);
        let x = Permutation::parse_with_degree("(1,2)", 5).unwrap();
        let r = canonical_coset_rep(g.chain(), &x);
        let y = Permutation::parse_with_degree("(2,4,5)", 5).unwrap().compose(&x);
        assert_eq!(canonical_coset_rep(g.chain(), &y).raw(), r.raw());
        assert!(g.contains(&r.compose(&x.inverse())));
    }

    #[test]
    fn budget_is_reported() {
        let a = group(8, &["(1,2,3)", "(2,3,4,5,6,7,8)"]);
        let b = group(8, &["(1,2)"]);
        let config = EngineConfig {
            enum_threshold: 0,
            backtrack_budget: 1,
        };
        assert_eq!(
            b.intersect(&a, &config).unwrap_err(),
            GroupError::BudgetExhausted { budget: 1 }
        );
    }
}
