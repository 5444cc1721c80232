use std::collections::BTreeSet;

use super::PermutationGroup;

/// A partition of `1..=n` into blocks of equal size permuted by the group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockSystem {
    /// Sorted blocks, ordered by least point.
    pub blocks: Vec<Vec<usize>>,
}

impl BlockSystem {
    pub fn block_size(&self) -> usize {
        self.blocks.first().map_or(0, Vec::len)
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.block_size() <= 1 || self.num_blocks() <= 1
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> Option<(usize, usize)> {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        let (keep, gone) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[gone] = keep;
        Some((keep, gone))
    }
}

/// Finest partition invariant under the group in which `a` and `b` share a class.
///
/// For a transitive group this is the minimal block system containing `{a, b}`.
/// On an intransitive group the classes need not have equal size; orbits not
/// touching `a` stay as singletons.
pub(crate) fn minimal_blocks(g: &PermutationGroup, (a, b): (usize, usize)) -> BlockSystem {
    let n = g.degree();
    let mut uf = UnionFind {
        parent: (0..n).collect(),
    };
    let mut pending = Vec::new();
    if let Some(pair) = uf.union(a - 1, b - 1) {
        pending.push(pair);
    }
    // each merged pair (keep, gone) forces keep^s ~ gone^s for every generator s
    while let Some((x, y)) = pending.pop() {
        for s in g.generators() {
            let (xs, ys) = (s.raw()[x] as usize, s.raw()[y] as usize);
            if let Some(pair) = uf.union(xs, ys) {
                pending.push(pair);
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); n];
    for p in 0..n {
        let r = uf.find(p);
        classes[r].push(p + 1);
    }
    let mut blocks: Vec<Vec<usize>> = classes.into_iter().filter(|c| !c.is_empty()).collect();
    blocks.sort();
    BlockSystem { blocks }
}

/// Nontrivial minimal block systems of a transitive group; empty when primitive or intransitive.
pub(crate) fn all_minimal_block_systems(g: &PermutationGroup) -> Vec<BlockSystem> {
    let n = g.degree();
    if n < 2 || !g.is_transitive() {
        return Vec::new();
    }
    let mut systems: BTreeSet<BlockSystem> = BTreeSet::new();
    for b in 2..=n {
        let sys = minimal_blocks(g, (1, b));
        if !sys.is_trivial() {
            systems.insert(sys);
        }
    }
    // keep only systems whose block through 1 contains no other system's block through 1
    let through_one: Vec<(BlockSystem, BTreeSet<usize>)> = systems
        .into_iter()
        .map(|s| {
            let block: BTreeSet<usize> = s.blocks[0].iter().copied().collect();
            (s, block)
        })
        .collect();
    through_one
        .iter()
        .filter(|(_, blk)| {
            !through_one
                .iter()
                .any(|(_, other)| other.len() < blk.len() && other.is_subset(blk))
        })
        .map(|(s, _)| s.clone())
        .collect()
}
