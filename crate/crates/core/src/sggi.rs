//! Involution tuples and their CPR graphs.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::group::PermutationGroup;
use crate::perm::Permutation;

/// An ordered tuple of generators `rho_0..rho_{r-1}` on `degree` points.
///
/// Generators are normally involutions; identity generators are allowed and
/// flagged (they appear when a smaller rank is padded in a mix).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sggi {
    degree: usize,
    generators: Vec<Permutation>,
}

/// A pair `(i, j)` with `|i - j| >= 2` whose product has order above 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StringViolation {
    pub i: usize,
    pub j: usize,
    pub order: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StringCheck {
    /// Indices of generators that are neither involutions nor the identity.
    pub not_involutions: Vec<usize>,
    /// Indices of identity generators (padding).
    pub trivial: Vec<usize>,
    pub violations: Vec<StringViolation>,
}

impl StringCheck {
    pub fn is_ok(&self) -> bool {
        self.not_involutions.is_empty() && self.violations.is_empty()
    }
}

impl Sggi {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Self {
        let degree = generators.iter().map(Permutation::degree).fold(degree, usize::max);
        let generators = generators.into_iter().map(|g| g.embed(degree)).collect();
        Sggi { degree, generators }
    }

    /// Parses one cycle-notation string per generator.
    pub fn parse(degree: usize, gens: &[&str]) -> Result<Self, crate::error::PermError> {
        let gens = gens
            .iter()
            .map(|s| Permutation::parse_with_degree(s, degree))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Sggi::new(degree, gens))
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn rho(&self, i: usize) -> &Permutation {
        &self.generators[i]
    }

    pub fn is_degenerate(&self) -> bool {
        self.generators.iter().any(Permutation::is_identity)
    }

    pub fn group(&self) -> PermutationGroup {
        PermutationGroup::new(self.degree, &self.generators)
    }

    /// Same generators on a larger point set.
    pub fn embed(&self, degree: usize) -> Sggi {
        Sggi::new(degree, self.generators.clone())
    }

    pub fn check_string_condition(&self) -> StringCheck {
        let mut check = StringCheck::default();
        for (i, g) in self.generators.iter().enumerate() {
            if g.is_identity() {
                check.trivial.push(i);
            } else if !g.is_involution() {
                check.not_involutions.push(i);
            }
        }
        for i in 0..self.rank() {
            for j in i + 2..self.rank() {
                let order = self.generators[i].compose(&self.generators[j]).order();
                if order > 2 {
                    check.violations.push(StringViolation { i, j, order });
                }
            }
        }
        check
    }

    /// Orders of `rho_i rho_{i+1}`.
    pub fn schlafli_type(&self) -> Vec<u64> {
        self.generators
            .windows(2)
            .map(|w| w[0].compose(&w[1]).order())
            .collect()
    }

    pub fn dual(&self) -> Sggi {
        let mut generators = self.generators.clone();
        generators.reverse();
        Sggi {
            degree: self.degree,
            generators,
        }
    }

    /// The generators with the given indices, in increasing index order.
    pub fn section(&self, keep: &[usize]) -> Sggi {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        Sggi {
            degree: self.degree,
            generators: keep.iter().map(|&i| self.generators[i].clone()).collect(),
        }
    }

    /// `Gamma_{r-1} = <rho_0..rho_{r-2}>`.
    pub fn facet(&self) -> Sggi {
        self.section(&(0..self.rank().saturating_sub(1)).collect::<Vec<_>>())
    }

    /// `Gamma_0 = <rho_1..rho_{r-1}>`.
    pub fn vertex_figure(&self) -> Sggi {
        self.section(&(1..self.rank()).collect::<Vec<_>>())
    }

    /// Renumbers points: point `p` becomes `map[p-1]`.
    pub fn relabel(&self, map: &[usize], degree: usize) -> Sggi {
        Sggi {
            degree,
            generators: self.generators.iter().map(|g| g.relabel(map, degree)).collect(),
        }
    }

    /// Renumbers the moved points to `1..` in increasing order, dropping fixed points.
    pub fn restrict_to_support(&self) -> Sggi {
        let support: std::collections::BTreeSet<usize> =
            self.generators.iter().flat_map(|g| g.support()).collect();
        let mut map = vec![0usize; self.degree];
        for (i, &p) in support.iter().enumerate() {
            map[p - 1] = i + 1;
        }
        for (i, m) in map.iter_mut().enumerate() {
            if *m == 0 {
                *m = i + 1;
            }
        }
        let n = support.len();
        Sggi {
            degree: n,
            generators: self
                .generators
                .iter()
                .map(|g| {
                    let images: Vec<usize> = support.iter().map(|&p| map[g.image(p) - 1]).collect();
                    Permutation::from_images(&images).expect("support is invariant")
                })
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<CprGraph, GraphError> {
        let mut edges = Vec::new();
        for (label, g) in self.generators.iter().enumerate() {
            if !g.is_identity() && !g.is_involution() {
                return Err(GraphError::NotInvolution { index: label });
            }
            for c in g.cycles() {
                edges.push((c[0], c[1], label));
            }
        }
        Ok(CprGraph::from_edges_unchecked(self.degree, self.rank(), edges))
    }

    pub fn from_graph(graph: &CprGraph) -> Result<Sggi, GraphError> {
        graph.validate()?;
        let generators = (0..graph.rank)
            .map(|label| {
                let pairs: Vec<(usize, usize)> = graph
                    .edges
                    .iter()
                    .filter(|e| e.2 == label)
                    .map(|e| (e.0, e.1))
                    .collect();
                Permutation::from_pairs(graph.degree, &pairs).expect("validated matching")
            })
            .collect();
        Ok(Sggi {
            degree: graph.degree,
            generators,
        })
    }

    /// Key identifying the generator tuple up to trailing fixed points.
    pub fn key(&self) -> Vec<Permutation> {
        self.generators.clone()
    }
}

impl std::fmt::Display for Sggi {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "rho_{i} = {g}")?;
        }
        Ok(())
    }
}

/// Edge-labelled graph: an `i`-edge `{u, v}` for each 2-cycle of `rho_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CprGraph {
    pub degree: usize,
    pub rank: usize,
    /// `(u, v, label)` with `u < v`, sorted by `(label, u, v)`.
    pub edges: Vec<(usize, usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    degree: usize,
    rank: usize,
    edges: Vec<[usize; 3]>,
}

impl CprGraph {
    /// Builds and validates a graph; edges may be given in any orientation and order.
    pub fn new(
        degree: usize,
        rank: usize,
        edges: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self, GraphError> {
        let g = Self::from_edges_unchecked(degree, rank, edges);
        g.validate()?;
        Ok(g)
    }

    fn from_edges_unchecked(
        degree: usize,
        rank: usize,
        edges: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Self {
        let mut edges: Vec<(usize, usize, usize)> = edges
            .into_iter()
            .map(|(u, v, l)| (u.min(v), u.max(v), l))
            .collect();
        edges.sort_by_key(|&(u, v, l)| (l, u, v));
        CprGraph { degree, rank, edges }
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let mut used = vec![vec![false; self.degree + 1]; self.rank];
        for (i, &(u, v, label)) in self.edges.iter().enumerate() {
            if u == v || u == 0 || v > self.degree {
                return Err(GraphError::BadVertex {
                    u,
                    v,
                    degree: self.degree,
                });
            }
            if label >= self.rank {
                return Err(GraphError::BadLabel {
                    label,
                    rank: self.rank,
                });
            }
            if i > 0 && self.edges[i - 1] == (u, v, label) {
                return Err(GraphError::DuplicateEdge { u, v, label });
            }
            for w in [u, v] {
                if used[label][w] {
                    return Err(GraphError::NotAMatching { label, vertex: w });
                }
                used[label][w] = true;
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let file = GraphFile {
            degree: self.degree,
            rank: self.rank,
            edges: self.edges.iter().map(|&(u, v, l)| [u, v, l]).collect(),
        };
        let mut s = serde_json::to_string(&file).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
        CprGraph::new(
            file.degree,
            file.rank,
            file.edges.into_iter().map(|[u, v, l]| (u, v, l)),
        )
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph cpr {\n");
        for v in 1..=self.degree {
            let _ = writeln!(s, "  {v};");
        }
        for &(u, v, l) in &self.edges {
            let _ = writeln!(s, "  {u} -- {v} [label={l}];");
        }
        s.push_str("}\n");
        s
    }

    pub fn edges_with_label(&self, label: usize) -> usize {
        self.edges.iter().filter(|e| e.2 == label).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex3() -> Sggi {
        Sggi::parse(4, &["(1,2)", "(2,3)", "(3,4)"]).unwrap()
    }

    #[test]
    fn path_graph_gives_simplex() {
        let g = CprGraph::new(4, 3, [(1, 2, 0), (2, 3, 1), (3, 4, 2)]).unwrap();
        let s = Sggi::from_graph(&g).unwrap();
        assert_eq!(s, simplex3());
        assert_eq!(s.to_graph().unwrap(), g);
    }

    #[test]
    fn empty_graph_is_degenerate() {
        let g = CprGraph::new(2, 1, []).unwrap();
        let s = Sggi::from_graph(&g).unwrap();
        assert!(s.is_degenerate());
        assert_eq!(s.check_string_condition().trivial, vec![0]);
    }

    #[test]
    fn matching_violation_is_named() {
        let err = CprGraph::new(3, 1, [(1, 2, 0), (2, 3, 0)]).unwrap_err();
        assert_eq!(err, GraphError::NotAMatching { label: 0, vertex: 2 });
    }

    #[test]
    fn string_condition() {
        assert!(simplex3().check_string_condition().is_ok());
        let bad = Sggi::parse(3, &["(1,2)", "(2,3)", "(1,3)"]).unwrap();
        assert_eq!(
            bad.check_string_condition().violations,
            vec![StringViolation { i: 0, j: 2, order: 3 }]
        );
    }

    #[test]
    fn schlafli_and_dual() {
        assert_eq!(simplex3().schlafli_type(), vec![3, 3]);
        assert_eq!(Sggi::parse(2, &["(1,2)"]).unwrap().schlafli_type(), Vec::<u64>::new());
        let d = simplex3().dual();
        assert_eq!(d, Sggi::parse(4, &["(3,4)", "(2,3)", "(1,2)"]).unwrap());
        assert_eq!(d.dual(), simplex3());
    }

    #[test]
    fn sections() {
        assert_eq!(
            simplex3().section(&[1, 2]),
            Sggi::parse(4, &["(2,3)", "(3,4)"]).unwrap()
        );
        assert_eq!(simplex3().section(&[0, 1, 2]), simplex3());
    }

    #[test]
    fn json_round_trip() {
        let g = simplex3().to_graph().unwrap();
        let text = g.to_json();
        assert_eq!(text, "{\"degree\":4,\"rank\":3,\"edges\":[[1,2,0],[2,3,1],[3,4,2]]}\n");
        assert_eq!(CprGraph::from_json(&text).unwrap(), g);
    }

    #[test]
    fn dot_has_labels() {
        let dot = simplex3().to_graph().unwrap().to_dot();
        assert_eq!(dot.matches("label=").count(), 3);
    }
}
