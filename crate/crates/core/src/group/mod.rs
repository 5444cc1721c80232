//! Permutation groups backed by a lazily built stabilizer chain.

mod blocks;
mod chain;
mod intersect;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::OnceLock;

use num_bigint::BigUint;

pub use blocks::BlockSystem;
pub use chain::StabChain;

use crate::error::GroupError;
use crate::perm::Permutation;

/// Engine limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// Intersections of groups at most this large are done by enumeration.
    pub enum_threshold: u64,
    /// Node budget for the coset search in large intersections.
    pub backtrack_budget: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            enum_threshold: 100_000,
            backtrack_budget: 100_000_000,
        }
    }
}

#[derive(Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl Clone for PermutationGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermutationGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain,
        }
    }
}

impl PermutationGroup {
    /// The group generated by `generators` on `degree` points (at least the largest generator degree).
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let degree = generators
            .iter()
            .map(Permutation::degree)
            .fold(degree, usize::max);
        PermutationGroup {
            degree,
            generators: generators.iter().map(|g| g.embed(degree)).collect(),
            chain: OnceLock::new(),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, &[])
    }

    pub(crate) fn from_chain(chain: StabChain, generators: Vec<Permutation>) -> Self {
        let degree = chain.degree();
        let lock = OnceLock::new();
        let _ = lock.set(chain);
        PermutationGroup {
            degree,
            generators,
            chain: lock,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::new(self.degree, &self.generators))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Order as `u64` when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(self.order()).ok()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    /// Orbits as sorted point lists, ordered by least point; fixed points included.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                let p = orbit[i];
                for g in &self.generators {
                    let q = g.raw()[p] as usize;
                    if !seen[q] {
                        seen[q] = true;
                        orbit.push(q);
                    }
                }
                i += 1;
            }
            let mut orbit: Vec<usize> = orbit.into_iter().map(|p| p + 1).collect();
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Orbit of the 1-based point `p`, sorted.
    pub fn orbit(&self, p: usize) -> Vec<usize> {
        self.orbits()
            .into_iter()
            .find(|o| o.binary_search(&p).is_ok())
            .unwrap_or_else(|| vec![p])
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() <= 1
    }

    pub fn is_even_group(&self) -> bool {
        self.generators.iter().all(|g| g.parity().is_even())
    }

    /// Points moved by some generator.
    pub fn support(&self) -> BTreeSet<usize> {
        self.generators
            .iter()
            .flat_map(|g| g.support())
            .collect()
    }

    /// The action on an invariant point set, relabelled to `1..=points.len()` in the given order.
    pub fn action_on(&self, points: &[usize]) -> PermutationGroup {
        let mut map = vec![0usize; self.degree];
        for (i, &p) in points.iter().enumerate() {
            map[p - 1] = i + 1;
        }
        let gens: Vec<Permutation> = self
            .generators
            .iter()
            .map(|g| {
                let images: Vec<usize> = points.iter().map(|&p| map[g.image(p) - 1]).collect();
                Permutation::from_images(&images).expect("point set is not invariant")
            })
            .collect();
        PermutationGroup::new(points.len(), &gens)
    }

    /// Every element, in chain order. Fails above `limit`.
    pub fn elements(&self, limit: u64) -> Result<Vec<Permutation>, GroupError> {
        let order = self.order();
        if order > BigUint::from(limit) {
            return Err(GroupError::TooLarge {
                order: order.to_string(),
                limit,
            });
        }
        let mut out = Vec::new();
        self.chain().for_each_element(|g| out.push(g.clone()));
        Ok(out)
    }

    /// Exact intersection; see [`intersect::intersect`].
    pub fn intersect(
        &self,
        other: &PermutationGroup,
        config: &EngineConfig,
    ) -> Result<PermutationGroup, GroupError> {
        intersect::intersect(self, other, config)
    }

    pub fn minimal_blocks(&self, seed: (usize, usize)) -> BlockSystem {
        blocks::minimal_blocks(self, seed)
    }

    pub fn all_minimal_block_systems(&self) -> Vec<BlockSystem> {
        blocks::all_minimal_block_systems(self)
    }

    pub fn is_primitive(&self) -> bool {
        self.is_transitive() && self.all_minimal_block_systems().is_empty()
    }

    /// Subgroup generated by a subset of this group's generators.
    pub fn subgroup(&self, gens: &[Permutation]) -> PermutationGroup {
        PermutationGroup::new(self.degree, gens)
    }
}

/// Breadth-first closure of the generators; independent of the chain, used as a cross-check.
pub fn closure_elements(
    degree: usize,
    generators: &[Permutation],
    limit: usize,
) -> Result<HashSet<Permutation>, GroupError> {
    let id = Permutation::identity(degree);
    let gens: Vec<Permutation> = generators.iter().map(|g| g.embed(degree)).collect();
    let mut seen = HashSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return Err(GroupError::TooLarge {
                        order: format!(">{limit}"),
                        limit: limit as u64,
                    });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_with_degree(s, n).unwrap()
    }

    fn group(n: usize, gens: &[&str]) -> PermutationGroup {
        let g: Vec<Permutation> = gens.iter().map(|s| p(s, n)).collect();
        PermutationGroup::new(n, &g)
    }

    #[test]
    fn orders() {
        assert_eq!(group(4, &["(1,2)", "(2,3)", "(3,4)"]).order(), BigUint::from(24u32));
        assert_eq!(group(2, &["(1,2)"]).order(), BigUint::from(2u32));
        assert_eq!(PermutationGroup::trivial(3).order(), BigUint::from(1u32));
    }

    #[test]
    fn membership() {
        assert!(group(3, &["(1,2)", "(2,3)"]).contains(&p("(1,3)", 3)));
        assert!(!group(3, &["(1,2,3)"]).contains(&p("(1,2)", 3)));
        assert!(group(3, &["(1,2,3)"]).contains(&Permutation::identity(3)));
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(group(4, &["(1,2)", "(3,4)"]).orbits(), vec![vec![1, 2], vec![3, 4]]);
        assert!(group(3, &["(1,2)", "(2,3)"]).is_transitive());
        assert_eq!(PermutationGroup::trivial(2).orbits(), vec![vec![1], vec![2]]);
    }

    #[test]
    fn parity_of_groups() {
        assert!(group(3, &["(1,2,3)"]).is_even_group());
        assert!(!group(2, &["(1,2)"]).is_even_group());
    }

    #[test]
    fn closure_agrees_with_chain() {
        let g = group(6, &["(1,2)(3,4)", "(2,3)(5,6)", "(1,5,3)"]);
        let all = closure_elements(6, g.generators(), 1000).unwrap();
        assert_eq!(BigUint::from(all.len()), g.order());
    }

    #[test]
    fn action_on_orbit() {
        let g = group(6, &["(2,4)", "(4,6)"]);
        let r = g.action_on(&[2, 4, 6]);
        assert_eq!(r.degree(), 3);
        assert_eq!(r.order(), BigUint::from(6u32));
    }
}
