//! Operators that build new string groups from old ones.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::ConstructionError;
use crate::perm::Permutation;
use crate::sggi::Sggi;

/// Generator `i` is `(rho_i^P, rho_i^Q)`, with Q's points shifted past P's.
/// The smaller rank is padded with identities.
pub fn mix(p: &Sggi, q: &Sggi) -> Sggi {
    let degree = p.degree() + q.degree();
    let shift: Vec<usize> = (1..=q.degree()).map(|x| x + p.degree()).collect();
    let rank = p.rank().max(q.rank());
    let gens = (0..rank)
        .map(|i| {
            let a = p
                .generators()
                .get(i)
                .map_or_else(|| Permutation::identity(degree), |g| g.embed(degree));
            match q.generators().get(i) {
                Some(g) => a.compose(&g.relabel(&shift, degree)),
                None => a,
            }
        })
        .collect();
    Sggi::new(degree, gens)
}

/// `|P| |Q| / |P ◇ Q|`.
pub fn comix_order(p: &Sggi, q: &Sggi) -> Result<BigUint, ConstructionError> {
    let numerator = p.group().order() * q.group().order();
    let denominator = mix(p, q).group().order();
    if !(&numerator % &denominator).is_zero() {
        return Err(ConstructionError::InexactComix {
            numerator: numerator.to_string(),
            denominator: denominator.to_string(),
        });
    }
    Ok(numerator / denominator)
}

/// True iff `rho_i^P -> rho_i^Q` extends to a homomorphism.
pub fn covers(p: &Sggi, q: &Sggi) -> bool {
    mix(p, q).group().order() == p.group().order()
}

/// Mix with the facet acting on its moved points only.
pub fn mix_with_facet(p: &Sggi) -> Sggi {
    mix(p, &p.facet().restrict_to_support())
}

/// Multiplies `rho_k` by a transposition on two new points.
pub fn sesqui_extension(s: &Sggi, k: usize) -> Result<Sggi, ConstructionError> {
    if k >= s.rank() {
        return Err(ConstructionError::BadIndex {
            index: k,
            rank: s.rank(),
        });
    }
    let n = s.degree();
    let tau = Permutation::transposition(n + 2, n + 1, n + 2).expect("fresh points");
    let gens = s
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| if i == k { g.compose(&tau) } else { g.embed(n + 2) })
        .collect();
    Ok(Sggi::new(n + 2, gens))
}

/// Which hypothesis let a rank reduction through.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionWitness {
    /// `rho_2 rho_3` has odd order.
    OddOrder,
    /// `rho_0` was found in `<rho_0 rho_2, rho_3>` by sifting.
    Membership,
}

/// `<rho_1, rho_0 rho_2, rho_3, ..., rho_{r-1}>`, which generates the same group.
pub fn rank_reduce(s: &Sggi) -> Result<Sggi, ConstructionError> {
    rank_reduce_with_witness(s).map(|(t, _)| t)
}

pub fn rank_reduce_with_witness(s: &Sggi) -> Result<(Sggi, ReductionWitness), ConstructionError> {
    let r = s.rank();
    if r < 4 {
        return Err(ConstructionError::RankTooSmall { needed: 4, rank: r });
    }
    for (index, &order) in s.schlafli_type().iter().enumerate() {
        if order <= 2 {
            return Err(ConstructionError::SmallConsecutiveOrder { index, order });
        }
    }
    let rho02 = s.rho(0).compose(s.rho(2));
    let witness = if s.rho(2).compose(s.rho(3)).order() % 2 == 1 {
        ReductionWitness::OddOrder
    } else {
        let h = crate::group::PermutationGroup::new(s.degree(), &[rho02.clone(), s.rho(3).clone()]);
        if !h.contains(s.rho(0)) {
            return Err(ConstructionError::MembershipFails);
        }
        ReductionWitness::Membership
    };
    let mut gens = vec![s.rho(1).clone(), rho02];
    gens.extend(s.generators()[3..].iter().cloned());
    let t = Sggi::new(s.degree(), gens);
    let (before, after) = (s.group().order(), t.group().order());
    if before != after {
        return Err(ConstructionError::OrderChanged {
            before: before.to_string(),
            after: after.to_string(),
        });
    }
    Ok((t, witness))
}

/// `dual(rank_reduce(dual(s)))`.
pub fn dual_rank_reduce(s: &Sggi) -> Result<Sggi, ConstructionError> {
    rank_reduce(&s.dual()).map(|t| t.dual())
}

/// A base group on points `1..=m` and the length of the path added at `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailSpec {
    pub base: Sggi,
    pub m: usize,
    pub t: usize,
}

/// Adds the path `m, m+1, ..., m+t` with labels `0, 1, 0, ...`.
pub fn tail_extend(spec: &TailSpec) -> Result<Sggi, ConstructionError> {
    let TailSpec { base, m, t } = spec;
    let (m, t) = (*m, *t);
    if base.rank() < 2 {
        return Err(ConstructionError::RankTooSmall {
            needed: 2,
            rank: base.rank(),
        });
    }
    if t == 0 {
        return Ok(base.clone());
    }
    if base.rho(0).image(m) != m || base.degree() > m {
        return Err(ConstructionError::TailBaseHasRho0);
    }
    let degree = m + t;
    let mut pairs = [Vec::new(), Vec::new()];
    for i in 0..t {
        pairs[i % 2].push((m + i, m + i + 1));
    }
    let gens = base
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let g = g.embed(degree);
            if i < 2 {
                g.compose(&Permutation::from_pairs(degree, &pairs[i]).expect("tail is a matching"))
            } else {
                g
            }
        })
        .collect();
    Ok(Sggi::new(degree, gens))
}

/// A level `k` where `<rho_0..rho_k>` is not the full symmetric group on the orbit of `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailFailure {
    pub k: usize,
    pub orbit_size: usize,
    pub order: String,
}

/// For `2 <= k <= r-2`, checks that `<rho_0..rho_k>` is symmetric on the orbit of `m`.
pub fn check_tail_hypotheses(s: &Sggi, m: usize) -> Vec<TailFailure> {
    let mut failures = Vec::new();
    for k in 2..s.rank().saturating_sub(1) {
        let g = s.section(&(0..=k).collect::<Vec<_>>()).group();
        let orbit = g.orbit(m);
        let order = g.action_on(&orbit).order();
        if order != crate::classify::factorial(orbit.len()) {
            failures.push(TailFailure {
                k,
                orbit_size: orbit.len(),
                order: order.to_string(),
            });
        }
    }
    failures
}
