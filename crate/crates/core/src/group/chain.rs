//! Deterministic Schreier–Sims.
//!
//! Level `i` holds the strong generators fixing `base[0..i]` pointwise, the
//! orbit of `base[i]` under them and a transversal `u` with
//! `base[i]^u[b] = b`. Transversals only ever grow, so a Schreier generator
//! checked once stays checked when lower levels are extended.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::One;

use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    pub gens: Vec<Permutation>,
    pub orbit: Vec<usize>,
    pub transversal: Vec<Option<Permutation>>,
    pub inverse: Vec<Option<Permutation>>,
    checked: HashSet<(usize, usize)>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        let mut inverse = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        inverse[base] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
            inverse,
            checked: HashSet::new(),
        }
    }

    // Extends the orbit with the current generators, keeping existing transversal entries.
    fn extend_orbit(&mut self) {
        let mut i = 0;
        while i < self.orbit.len() {
            let b = self.orbit[i];
            for s in &self.gens {
                let c = s.raw()[b] as usize;
                if self.transversal[c].is_none() {
                    let u = self.transversal[b].as_ref().unwrap().compose(s);
                    self.inverse[c] = Some(u.inverse());
                    self.transversal[c] = Some(u);
                    self.orbit.push(c);
                }
            }
            i += 1;
        }
    }
}

/// Base and strong generating set.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    pub(crate) levels: Vec<Level>,
}

impl StabChain {
    /// Builds the chain for the group generated by `gens` acting on `degree` points.
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<Permutation> = gens
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| g.embed(degree))
            .collect();
        for g in &gens {
            if chain.levels.iter().all(|l| g.raw()[l.base] as usize == l.base) {
                let b = g.first_moved().unwrap() - 1;
                chain.levels.push(Level::new(b, degree));
            }
        }
        for level in 0..chain.levels.len() {
            let fixing: Vec<Permutation> = gens
                .iter()
                .filter(|g| chain.levels[..level].iter().all(|l| g.raw()[l.base] as usize == l.base))
                .cloned()
                .collect();
            chain.levels[level].gens = fixing;
            chain.levels[level].extend_orbit();
        }
        chain.complete();
        chain
    }

    /// Adds a generator; returns false (and changes nothing) if it was already a member.
    pub fn add_generator(&mut self, g: &Permutation) -> bool {
        let g = g.embed(self.degree);
        if self.sift_from(g.clone(), 0).0.is_identity() {
            return false;
        }
        let mut fixes_all = true;
        for l in 0..self.levels.len() {
            if self.levels[..l].iter().all(|lv| g.raw()[lv.base] as usize == lv.base) {
                self.levels[l].gens.push(g.clone());
                self.levels[l].extend_orbit();
            } else {
                fixes_all = false;
                break;
            }
        }
        if fixes_all && self.levels.iter().all(|lv| g.raw()[lv.base] as usize == lv.base) {
            let mut level = Level::new(g.first_moved().unwrap() - 1, self.degree);
            level.gens.push(g);
            level.extend_orbit();
            self.levels.push(level);
        }
        self.complete();
        true
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let level = i as usize;
            match self.find_failing_schreier_generator(level) {
                Some((residue, stop)) => {
                    if stop == self.levels.len() {
                        let b = residue.first_moved().unwrap() - 1;
                        self.levels.push(Level::new(b, self.degree));
                    }
                    for l in level + 1..=stop {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].extend_orbit();
                    }
                    i = stop as isize;
                }
                None => i -= 1,
            }
        }
    }

    fn find_failing_schreier_generator(&mut self, level: usize) -> Option<(Permutation, usize)> {
        let mut oi = 0;
        while oi < self.levels[level].orbit.len() {
            let b = self.levels[level].orbit[oi];
            for si in 0..self.levels[level].gens.len() {
                if self.levels[level].checked.contains(&(b, si)) {
                    continue;
                }
                let lv = &self.levels[level];
                let s = &lv.gens[si];
                let c = s.raw()[b] as usize;
                let h = lv.transversal[b]
                    .as_ref()
                    .unwrap()
                    .compose(s)
                    .compose(lv.inverse[c].as_ref().unwrap());
                if !h.is_identity() {
                    let (residue, stop) = self.sift_from(h, level + 1);
                    if !residue.is_identity() {
                        return Some((residue, stop));
                    }
                }
                self.levels[level].checked.insert((b, si));
            }
            oi += 1;
        }
        None
    }

    /// Strips `g` through levels `from..`; returns the residue and the level where it stopped.
    pub(crate) fn sift_from(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let b = g.raw()[level.base] as usize;
            match &level.inverse[b] {
                Some(inv) => g = g.compose(inv),
                None => return (g, l),
            }
        }
        let n = self.levels.len();
        (g, n)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Base points, 1-based.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base + 1).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() > self.degree && !g.support().iter().all(|&p| p <= self.degree) {
            return false;
        }
        let g = if g.degree() > self.degree {
            g.restrict_degree(self.degree)
        } else {
            g.embed(self.degree)
        };
        self.sift_from(g, 0).0.is_identity()
    }

    /// Strong generators (level 0 generators include every input generator).
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if seen.insert(g.clone()) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Calls `f` on every element; intended for small groups only.
    pub fn for_each_element(&self, mut f: impl FnMut(&Permutation)) {
        fn rec(
            levels: &[Level],
            depth: usize,
            acc: &Permutation,
            f: &mut dyn FnMut(&Permutation),
        ) {
            // g = v_k ... v_1 with v_i from level i; build from the deepest level up
            if depth == 0 {
                f(acc);
                return;
            }
            let level = &levels[depth - 1];
            for &b in &level.orbit {
                let next = acc.compose(level.transversal[b].as_ref().unwrap());
                rec(levels, depth - 1, &next, f);
            }
        }
        let id = Permutation::identity(self.degree);
        rec(&self.levels, self.levels.len(), &id, &mut f);
    }
}
