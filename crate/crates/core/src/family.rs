//! Named families of string groups and the seed groups for tail extension.
//!
//! Every family is a row of [`REGISTRY`]. Graphs are numbered so that the
//! explicit shapes and the operator routes agree vertex for vertex: paths
//! start at the end carrying the alternating 0/1 labels, and ladders list one
//! rail before the other.

use serde::Serialize;

use crate::classify::GroupType;
use crate::construct::{dual_rank_reduce, mix, mix_with_facet, rank_reduce, tail_extend, TailSpec};
use crate::error::FamilyError;
use crate::perm::Permutation;
use crate::sggi::{CprGraph, Sggi};

/// Allowed values of `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KRule {
    Any,
    Even,
    /// `k ≡ 2 (mod 4)`.
    TwoModFour,
    Zero,
}

impl KRule {
    fn admits(self, k: usize) -> bool {
        match self {
            KRule::Any => true,
            KRule::Even => k.is_multiple_of(2),
            KRule::TwoModFour => k % 4 == 2,
            KRule::Zero => k == 0,
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            KRule::Any => "k >= 0",
            KRule::Even => "k even",
            KRule::TwoModFour => "k = 2 mod 4",
            KRule::Zero => "k = 0",
        }
    }
}

/// One registry row.
#[derive(Serialize)]
pub struct FamilySpec {
    pub name: &'static str,
    pub min_rank: usize,
    pub k_rule: KRule,
    pub degree_formula: &'static str,
    pub group_formula: &'static str,
    pub route: &'static str,
    #[serde(skip)]
    pub degree: fn(usize, usize) -> usize,
    #[serde(skip)]
    pub expected_type: fn(usize, usize) -> GroupType,
    #[serde(skip)]
    pub build: fn(usize, usize) -> Result<Sggi, FamilyError>,
}

pub static REGISTRY: &[FamilySpec] = &[
    FamilySpec {
        name: "FL",
        min_rank: 3,
        k_rule: KRule::Any,
        degree_formula: "r+1+k",
        group_formula: "Sym(r+1+k)",
        route: "explicit path",
        degree: |r, k| r + 1 + k,
        expected_type: |r, k| GroupType::Sym(r + 1 + k),
        build: |r, k| Ok(fl(r, k)),
    },
    FamilySpec {
        name: "R",
        min_rank: 5,
        k_rule: KRule::Any,
        degree_formula: "r+3+k",
        group_formula: "Sym(r+3+k)",
        route: "dual of FL(r,2) for k=0, then rank_reduce of R(r+1,k-1)",
        degree: |r, k| r + 3 + k,
        expected_type: |r, k| GroupType::Sym(r + 3 + k),
        build: r_derived,
    },
    FamilySpec {
        name: "Sh",
        min_rank: 4,
        k_rule: KRule::TwoModFour,
        degree_formula: "2r+k",
        group_formula: "EvenWreath(r+k/2)",
        route: "explicit ladder of two FL(r-1,k/2) paths",
        degree: |r, k| 2 * r + k,
        expected_type: |r, k| GroupType::EvenWreath(r + k / 2),
        build: |r, k| Ok(sh(r, k)),
    },
    FamilySpec {
        name: "Bl",
        min_rank: 6,
        k_rule: KRule::TwoModFour,
        degree_formula: "2r+4+k",
        group_formula: "EvenWreath(r+2+k/2)",
        route: "dual_rank_reduce twice from Sh(r+2,k)",
        degree: |r, k| 2 * r + 4 + k,
        expected_type: |r, k| GroupType::EvenWreath(r + 2 + k / 2),
        build: bl_derived,
    },
    FamilySpec {
        name: "P",
        min_rank: 4,
        k_rule: KRule::Any,
        degree_formula: "r+2+k",
        group_formula: "Sym(r+2+k)",
        route: "explicit path",
        degree: |r, k| r + 2 + k,
        expected_type: |r, k| GroupType::Sym(r + 2 + k),
        build: |r, k| Ok(p(r, k)),
    },
    FamilySpec {
        name: "Sp",
        min_rank: 4,
        k_rule: KRule::TwoModFour,
        degree_formula: "2r+3+k",
        group_formula: "DirectProdSym(r+1+k/2,r+2+k/2)",
        route: "mix of P(r,k/2) and FL(r,k/2)",
        degree: |r, k| 2 * r + 3 + k,
        expected_type: |r, k| GroupType::DirectProdSym(r + 1 + k / 2, r + 2 + k / 2),
        build: |r, k| Ok(mix(&p(r, k / 2), &fl(r, k / 2))),
    },
    FamilySpec {
        name: "Sm",
        min_rank: 4,
        k_rule: KRule::Zero,
        degree_formula: "2r+3",
        group_formula: "EvenDirectProdSym(r,r+3)",
        route: "explicit graph",
        degree: |r, _| 2 * r + 3,
        expected_type: |r, _| GroupType::EvenDirectProdSym(r, r + 3),
        build: |r, _| Ok(sy(r, 0)),
    },
    FamilySpec {
        name: "Sy",
        min_rank: 6,
        k_rule: KRule::Even,
        degree_formula: "2r+3+k",
        group_formula: "EvenDirectProdSym(r+k/2,r+3+k/2)",
        route: "Sm(r) for k=0, then rank_reduce of Sy(r+1,k-2)",
        degree: |r, k| 2 * r + 3 + k,
        expected_type: |r, k| GroupType::EvenDirectProdSym(r + k / 2, r + 3 + k / 2),
        build: sy_derived,
    },
    FamilySpec {
        name: "L",
        min_rank: 6,
        k_rule: KRule::Any,
        degree_formula: "r+3+k",
        group_formula: "Sym(r+3+k)",
        route: "explicit graph for k=0, then rank_reduce of L(r+1,k-1)",
        degree: |r, k| r + 3 + k,
        expected_type: |r, k| GroupType::Sym(r + 3 + k),
        build: l_derived,
    },
    FamilySpec {
        name: "M",
        min_rank: 6,
        k_rule: KRule::Even,
        degree_formula: "2r+5+k",
        group_formula: "EvenDirectProdSym(r+2+k/2,r+3+k/2)",
        route: "mix_with_facet of L(r,k/2)",
        degree: |r, k| 2 * r + 5 + k,
        expected_type: |r, k| GroupType::EvenDirectProdSym(r + 2 + k / 2, r + 3 + k / 2),
        build: |r, k| Ok(mix_with_facet(&l_derived(r, k / 2)?)),
    },
    FamilySpec {
        name: "Sl",
        min_rank: 6,
        k_rule: KRule::TwoModFour,
        degree_formula: "2r+1+k",
        group_formula: "Sym(2r+1+k)",
        route: "explicit graph on Sh(r-1,k)",
        degree: |r, k| 2 * r + 1 + k,
        expected_type: |r, k| GroupType::Sym(2 * r + 1 + k),
        build: |r, k| Ok(sl(r, k)),
    },
    FamilySpec {
        name: "S",
        min_rank: 7,
        k_rule: KRule::TwoModFour,
        degree_formula: "2r+1+k",
        group_formula: "Alt(2r+1+k)",
        route: "explicit graph on Sl(r-1,k)",
        degree: |r, k| 2 * r + 1 + k,
        expected_type: |r, k| GroupType::Alt(2 * r + 1 + k),
        build: |r, k| Ok(s(r, k)),
    },
    FamilySpec {
        name: "B",
        min_rank: 7,
        k_rule: KRule::TwoModFour,
        degree_formula: "2r+3+k",
        group_formula: "Alt(2r+3+k)",
        route: "explicit graph on Bl(r-1,k)",
        degree: |r, k| 2 * r + 3 + k,
        expected_type: |r, k| GroupType::Alt(2 * r + 3 + k),
        build: |r, k| Ok(b(r, k)),
    },
    FamilySpec {
        name: "D",
        min_rank: 6,
        k_rule: KRule::Even,
        degree_formula: "2r+2+k",
        group_formula: "Alt(2r+2+k)",
        route: "explicit ladder for k=0, then rank_reduce of D(r+1,k-2)",
        degree: |r, k| 2 * r + 2 + k,
        expected_type: |r, k| GroupType::Alt(2 * r + 2 + k),
        build: d_derived,
    },
];

pub fn lookup(name: &str) -> Result<&'static FamilySpec, FamilyError> {
    REGISTRY
        .iter()
        .find(|f| f.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| FamilyError::Unknown(name.to_string()))
}

/// Knobs the family statements leave open.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Sh also gives string C-groups for r = 3; the registry starts at 4.
    pub sh_min_rank: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { sh_min_rank: 4 }
    }
}

fn check_domain(spec: &FamilySpec, r: usize, k: usize) -> Result<(), FamilyError> {
    check_domain_with(spec, r, k, &BuildOptions::default())
}

fn check_domain_with(spec: &FamilySpec, r: usize, k: usize, options: &BuildOptions) -> Result<(), FamilyError> {
    let fail = |constraint: String| FamilyError::Domain {
        family: spec.name.to_string(),
        r,
        k,
        constraint,
    };
    let min_rank = if spec.name == "Sh" { options.sh_min_rank.max(3) } else { spec.min_rank };
    if r < min_rank {
        return Err(fail(format!("r >= {min_rank}")));
    }
    if !spec.k_rule.admits(k) {
        return Err(fail(spec.k_rule.describe().to_string()));
    }
    Ok(())
}

/// Builds a family member by its preferred route.
pub fn build(name: &str, r: usize, k: usize) -> Result<Sggi, FamilyError> {
    build_with(name, r, k, &BuildOptions::default())
}

pub fn build_with(name: &str, r: usize, k: usize, options: &BuildOptions) -> Result<Sggi, FamilyError> {
    let spec = lookup(name)?;
    check_domain_with(spec, r, k, options)?;
    (spec.build)(r, k)
}

/// Degree, order and type stated for a family member.
pub fn expected(name: &str, r: usize, k: usize) -> Result<(usize, GroupType), FamilyError> {
    let spec = lookup(name)?;
    check_domain(spec, r, k)?;
    Ok(((spec.degree)(r, k), (spec.expected_type)(r, k)))
}

/// The explicit graph, for families that have one at these parameters.
pub fn transcribed(name: &str, r: usize, k: usize) -> Result<Option<Sggi>, FamilyError> {
    let spec = lookup(name)?;
    check_domain(spec, r, k)?;
    Ok(match spec.name {
        "FL" => Some(fl(r, k)),
        "R" => Some(r_shape(r, k)),
        "Sh" => Some(sh(r, k)),
        "Bl" => Some(bl(r, k)),
        "P" => Some(p(r, k)),
        "Sm" => Some(sy(r, 0)),
        "Sy" => Some(sy(r, k)),
        "L" => Some(l(r, k)),
        "Sl" => Some(sl(r, k)),
        "S" => Some(s(r, k)),
        "B" => Some(b(r, k)),
        "D" => Some(d(r, k)),
        _ => None,
    })
}

/// The operator route, for families that have one at these parameters.
pub fn derived(name: &str, r: usize, k: usize) -> Result<Option<Sggi>, FamilyError> {
    let spec = lookup(name)?;
    check_domain(spec, r, k)?;
    Ok(match spec.name {
        "FL" if k > 0 => Some(rank_reduce(&fl(r + 1, k - 1))?),
        "R" => Some(r_derived(r, k)?),
        "Bl" => Some(bl_derived(r, k)?),
        "P" => Some(dual_rank_reduce(&fl(r + 1, k))?),
        "Sy" => Some(sy_derived(r, k)?),
        "L" if k > 0 => Some(l_derived(r, k)?),
        "D" if k > 0 => Some(d_derived(r, k)?),
        _ => None,
    })
}

fn graph(degree: usize, rank: usize, edges: Vec<(usize, usize, usize)>) -> Sggi {
    let g = CprGraph::new(degree, rank, edges).expect("family graphs are valid");
    Sggi::from_graph(&g).expect("family graphs are valid")
}

/// Path `start, start+1, ...` with the given edge labels.
fn path_edges(start: usize, labels: &[usize]) -> Vec<(usize, usize, usize)> {
    labels
        .iter()
        .enumerate()
        .map(|(i, &l)| (start + i, start + i + 1, l))
        .collect()
}

/// `k+2` edges alternating between 0 and 1, the last one labelled 1.
fn prefix(k: usize) -> Vec<usize> {
    (0..k + 2).map(|j| if (k + 1 - j).is_multiple_of(2) { 1 } else { 0 }).collect()
}

fn fl_labels(r: usize, k: usize) -> Vec<usize> {
    let mut labels = prefix(k);
    labels.extend(2..r);
    labels
}

fn p_labels(r: usize, k: usize) -> Vec<usize> {
    let mut labels = fl_labels(r - 1, k);
    labels.extend([r - 1, r - 2]);
    labels
}

fn r_labels(r: usize, k: usize) -> Vec<usize> {
    let mut labels = prefix(k);
    labels.extend(2..r - 2);
    labels.extend([r - 2, r - 1, r - 2, r - 1]);
    labels
}

fn fl(r: usize, k: usize) -> Sggi {
    graph(r + 1 + k, r, path_edges(1, &fl_labels(r, k)))
}

fn p(r: usize, k: usize) -> Sggi {
    graph(r + 2 + k, r, path_edges(1, &p_labels(r, k)))
}

/// R(r,k) numbered from the end with labels r-1, r-2, r-1, r-2.
fn r_shape(r: usize, k: usize) -> Sggi {
    let mut labels = r_labels(r, k);
    labels.reverse();
    graph(r + 3 + k, r, path_edges(1, &labels))
}

fn r_derived(r: usize, k: usize) -> Result<Sggi, FamilyError> {
    if k == 0 {
        return Ok(fl(r, 2).dual());
    }
    Ok(rank_reduce(&r_derived(r + 1, k - 1)?)?)
}

/// Two copies of a path with labels shifted up by one, joined by 0-edges
/// between the first `rungs` vertices.
fn ladder(rank: usize, rail: &[usize], rungs: usize) -> (Vec<(usize, usize, usize)>, usize) {
    let len = rail.len() + 1;
    let shifted: Vec<usize> = rail.iter().map(|l| l + 1).collect();
    let mut edges = path_edges(1, &shifted);
    edges.extend(path_edges(len + 1, &shifted));
    edges.extend((1..=rungs).map(|i| (i, len + i, 0)));
    debug_assert!(shifted.iter().all(|&l| l < rank));
    (edges, len)
}

fn sh(r: usize, k: usize) -> Sggi {
    let (edges, len) = ladder(r, &fl_labels(r - 1, k / 2), k / 2 + 1);
    graph(2 * len, r, edges)
}

fn bl(r: usize, k: usize) -> Sggi {
    let (edges, len) = ladder(r, &r_labels(r - 1, k / 2), k / 2 + 1);
    graph(2 * len, r, edges)
}

fn bl_derived(r: usize, k: usize) -> Result<Sggi, FamilyError> {
    Ok(dual_rank_reduce(&dual_rank_reduce(&sh(r + 2, k))?)?)
}

/// P(r-1,k/2) and FL(r-1,k/2) side by side, plus an (r-3)-edge `{s1, s2}`
/// joined by (r-1)-edges to the last two vertices of the P path.
fn sy(r: usize, k: usize) -> Sggi {
    let k2 = k / 2;
    let pl = p_labels(r - 1, k2);
    let fll = fl_labels(r - 1, k2);
    let np = pl.len() + 1;
    let nf = fll.len() + 1;
    let (s1, s2) = (np + nf + 1, np + nf + 2);
    let mut edges = path_edges(1, &pl);
    edges.extend(path_edges(np + 1, &fll));
    edges.extend([(s1, s2, r - 3), (np - 1, s1, r - 1), (np, s2, r - 1)]);
    graph(np + nf + 2, r, edges)
}

fn sy_derived(r: usize, k: usize) -> Result<Sggi, FamilyError> {
    if k == 0 {
        return Ok(sy(r, 0));
    }
    Ok(rank_reduce(&sy_derived(r + 1, k - 2)?)?)
}

/// R(r-1,k) numbered from its 0/1 end, plus a vertex `x` with
/// `rho_{r-1} = (e f)(g x)` on the last three path vertices.
fn l(r: usize, k: usize) -> Sggi {
    let labels = r_labels(r - 1, k);
    let g = labels.len() + 1;
    let x = g + 1;
    let mut edges = path_edges(1, &labels);
    edges.extend([(g - 2, g - 1, r - 1), (g, x, r - 1)]);
    graph(x, r, edges)
}

fn l_derived(r: usize, k: usize) -> Result<Sggi, FamilyError> {
    if k == 0 {
        return Ok(l(r, 0));
    }
    Ok(rank_reduce(&l_derived(r + 1, k - 1)?)?)
}

/// Sh(r-1,k) plus `z`, `y`, `x`: `a_end -(r-1)- z -(r-2)- y` and `b_end -(r-1)- x`.
fn sl(r: usize, k: usize) -> Sggi {
    let (mut edges, len) = ladder(r, &fl_labels(r - 2, k / 2), k / 2 + 1);
    let (z, y, x) = (2 * len + 1, 2 * len + 2, 2 * len + 3);
    edges.extend([(len, z, r - 1), (2 * len, x, r - 1), (z, y, r - 2)]);
    graph(2 * len + 3, r, edges)
}

/// Sl(r-1,k) plus an (r-3)-edge `{s1, s2}` and `rho_{r-1} = (z s1)(y s2)`.
fn s(r: usize, k: usize) -> Sggi {
    let base = sl(r - 1, k);
    let n = base.degree();
    let (z, y) = (n - 2, n - 1);
    let (s1, s2) = (n + 1, n + 2);
    let mut edges = base.to_graph().expect("valid").edges;
    edges.extend([(s1, s2, r - 3), (z, s1, r - 1), (y, s2, r - 1)]);
    graph(n + 2, r, edges)
}

/// Bl(r-1,k) plus a vertex `x` with `rho_{r-1} = (e f)(g x)` at the end of the first rail.
fn b(r: usize, k: usize) -> Sggi {
    let base = bl(r - 1, k);
    let n = base.degree();
    let g = n / 2;
    let x = n + 1;
    let mut edges = base.to_graph().expect("valid").edges;
    edges.extend([(g - 2, g - 1, r - 1), (g, x, r - 1)]);
    graph(x, r, edges)
}

/// Label of an edge of D(r+j,0) after `j` rank reductions.
fn reduce_label(mut label: usize, j: usize) -> usize {
    for _ in 0..j {
        label = match label {
            0 => 1,
            1 => 0,
            2 => 1,
            l => l - 1,
        };
    }
    label
}

/// Two rails `a_1..a_L`, `b_1..b_L` with labels `R-3, R-2, R-3, R-4, ..., 2`
/// (R = r + k/2), rungs `a_1 b_1`, `a_2 b_2` labelled R-1, and the 0/1 path
/// `a_L -1- m -0- m+1 -1- m+2 -0- m+3`; labels then follow k/2 rank reductions.
fn d(r: usize, k: usize) -> Sggi {
    let j = k / 2;
    let big = r + j;
    let len = big - 1;
    let mut rail = vec![big - 3, big - 2, big - 3];
    rail.extend((2..big - 3).rev());
    let m = 2 * len + 1;
    let mut edges = path_edges(1, &rail);
    edges.extend(path_edges(len + 1, &rail));
    edges.extend([(1, len + 1, big - 1), (2, len + 2, big - 1)]);
    edges.extend([(len, m, 1), (m, m + 1, 0), (m + 1, m + 2, 1), (m + 2, m + 3, 0)]);
    let edges = edges
        .into_iter()
        .map(|(u, v, l)| (u, v, reduce_label(l, j)))
        .collect();
    graph(m + 3, r, edges)
}

fn d_derived(r: usize, k: usize) -> Result<Sggi, FamilyError> {
    if k == 0 {
        return Ok(d(r, 0));
    }
    Ok(rank_reduce(&d_derived(r + 1, k - 2)?)?)
}

/// A seed group with a 2-tail, and the `t0`, `n0` with `Gamma^{t0+4j} = A_{n0+4j}`.
pub struct Seed {
    pub rank: usize,
    pub family: usize,
    pub generators: &'static [&'static str],
    pub t0: usize,
    pub n0: usize,
}

pub static SEEDS: &[Seed] = &[
    Seed { rank: 4, family: 1, t0: 3, n0: 9, generators: &["(6,7)", "(5,6)(7,8)", "(2,3)(4,5)", "(1,2)(3,4)"] },
    Seed {
        rank: 4,
        family: 2,
        t0: 3,
        n0: 18,
        generators: &[
            "(15,16)",
            "(4,5)(6,7)(14,15)(16,17)",
            "(1,2)(3,4)(6,8)(9,10)(11,12)(13,14)",
            "(2,3)(4,6)(5,7)(8,9)(10,11)(12,13)",
        ],
    },
    Seed {
        rank: 4,
        family: 3,
        t0: 4,
        n0: 15,
        generators: &["(11,12)", "(3,4)(5,7)(6,11)(10,9)(12,13)", "(2,3)(4,6)(5,8)(7,10)", "(1,2)(3,5)(4,7)(10,9)"],
    },
    Seed {
        rank: 4,
        family: 4,
        t0: 4,
        n0: 16,
        generators: &["(12,13)", "(3,4)(5,7)(6,9)(10,12)(13,14)", "(2,3)(4,6)(5,8)(7,10)", "(1,2)(3,5)(4,7)(8,11)"],
    },
    Seed {
        rank: 5,
        family: 1,
        t0: 3,
        n0: 13,
        generators: &["(10,11)", "(9,10)(11,12)", "(4,5)(8,9)", "(1,2)(3,4)(5,6)(7,8)", "(2,3)(6,7)"],
    },
    Seed {
        rank: 5,
        family: 2,
        t0: 3,
        n0: 14,
        generators: &["(11,12)", "(10,11)(12,13)", "(5,6)(9,10)", "(2,3)(4,5)(6,7)(8,9)", "(1,2)(3,4)(5,6)(7,8)"],
    },
    Seed {
        rank: 5,
        family: 3,
        t0: 3,
        n0: 15,
        generators: &[
            "(12,13)",
            "(9,12)(13,14)",
            "(3,4)(5,7)(6,9)(10,11)",
            "(2,3)(4,6)(5,8)(7,10)",
            "(1,2)(3,5)(4,7)(10,11)",
        ],
    },
    Seed {
        rank: 5,
        family: 4,
        t0: 3,
        n0: 12,
        generators: &["(9,10)", "(8,9)(10,11)", "(1,2)(3,4)(5,6)(7,8)", "(2,3)(6,7)", "(3,5)(4,6)"],
    },
    Seed {
        rank: 6,
        family: 1,
        t0: 3,
        n0: 17,
        generators: &[
            "(14,15)",
            "(13,14)(15,16)",
            "(6,7)(12,13)",
            "(2,4)(5,6)(7,8)(11,12)",
            "(1,2)(3,5)(8,9)(10,11)",
            "(1,3)(9,10)",
        ],
    },
    Seed {
        rank: 6,
        family: 2,
        t0: 3,
        n0: 18,
        generators: &[
            "(15,16)",
            "(14,15)(16,17)",
            "(9,12)(11,14)",
            "(3,4)(5,7)(6,9)(8,11)",
            "(2,3)(4,6)(5,8)(7,10)",
            "(1,2)(3,5)(4,7)(10,13)",
        ],
    },
    Seed {
        rank: 6,
        family: 3,
        t0: 3,
        n0: 15,
        generators: &[
            "(12,13)",
            "(11,12)(13,14)",
            "(2,4)(5,8)(6,9)(10,11)",
            "(1,2)(3,6)(5,8)(7,10)",
            "(2,5)(3,7)(4,8)(6,9)",
            "(1,3)(2,6)(4,9)(5,8)",
        ],
    },
    Seed {
        rank: 6,
        family: 4,
        t0: 3,
        n0: 16,
        generators: &[
            "(13,14)",
            "(12,13)(14,15)",
            "(8,10)(11,12)",
            "(2,3)(4,6)(5,8)(9,11)",
            "(1,2)(3,5)(4,7)(6,9)",
            "(2,4)(3,6)",
        ],
    },
];

impl Seed {
    /// Degree of the underlying base group, i.e. the attachment vertex.
    pub fn m(&self) -> usize {
        self.base2().degree() - 2
    }

    pub fn base2(&self) -> Sggi {
        let gens: Vec<Permutation> = self
            .generators
            .iter()
            .map(|s| s.parse().expect("seed generators parse"))
            .collect();
        Sggi::new(0, gens)
    }

    /// `Gamma`, recovered from the listed `Gamma^2` by cutting the 2-tail.
    pub fn base(&self) -> Sggi {
        let g2 = self.base2();
        let m = g2.degree() - 2;
        let cut = [
            Permutation::transposition(m + 2, m, m + 1).expect("tail edge"),
            Permutation::transposition(m + 2, m + 1, m + 2).expect("tail edge"),
        ];
        let gens = g2
            .generators()
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let g = if i < 2 { g.compose(&cut[i]) } else { g.clone() };
                g.restrict_degree(m)
            })
            .collect();
        Sggi::new(m, gens)
    }

    pub fn extended(&self, t: usize) -> Result<Sggi, FamilyError> {
        if t < 2 {
            return Err(FamilyError::ShortTail(t));
        }
        Ok(tail_extend(&TailSpec {
            base: self.base(),
            m: self.m(),
            t,
        })?)
    }

    /// Type of `Gamma^t`: alternating on the residue class of `t0`, symmetric otherwise.
    pub fn expected_type(&self, t: usize) -> GroupType {
        if t % 4 == self.t0 % 4 {
            GroupType::Alt(self.m() + t)
        } else {
            GroupType::Sym(self.m() + t)
        }
    }

    /// Smallest `t >= 2` with `Gamma^t = A_n`, if any.
    pub fn tail_for_alt(&self, n: usize) -> Option<usize> {
        let t = n.checked_sub(self.m())?;
        (n >= self.n0 && t >= 2 && t % 4 == self.t0 % 4).then_some(t)
    }
}

pub fn seed(rank: usize, family: usize) -> Result<&'static Seed, FamilyError> {
    SEEDS
        .iter()
        .find(|s| s.rank == rank && s.family == family)
        .ok_or(FamilyError::NoSuchSeed { rank, family })
}

pub fn seed_base(rank: usize, family: usize) -> Result<Sggi, FamilyError> {
    Ok(seed(rank, family)?.base2())
}

pub fn seed_extended(rank: usize, family: usize, t: usize) -> Result<Sggi, FamilyError> {
    seed(rank, family)?.extended(t)
}

/// `(rho_2 rho_1 rho_0 rho_1)^2`.
pub fn three_cycle_witness(s: &Sggi) -> Permutation {
    let g = s.rho(2).compose(s.rho(1)).compose(s.rho(0)).compose(s.rho(1));
    g.compose(&g)
}

#[derive(Serialize)]
struct SeedRow {
    rank: usize,
    family: usize,
    m: usize,
    alt_tail: String,
    generators: &'static [&'static str],
}

/// The whole registry as JSON.
pub fn dump() -> String {
    let seeds: Vec<SeedRow> = SEEDS
        .iter()
        .map(|s| SeedRow {
            rank: s.rank,
            family: s.family,
            m: s.m(),
            alt_tail: format!("Gamma^({}+4j) = Alt({}+4j)", s.t0, s.n0),
            generators: s.generators,
        })
        .collect();
    let value = serde_json::json!({ "families": REGISTRY, "seeds": seeds });
    let mut s = serde_json::to_string_pretty(&value).expect("plain data serializes");
    s.push('\n');
    s
}
