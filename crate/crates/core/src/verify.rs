//! Certification of the intersection property.
//!
//! A string group is a C-group when both `Gamma_0` and `Gamma_{r-1}` are and
//! `Gamma_0 ∩ Gamma_{r-1} = Gamma_{0,r-1}`. The recursion computes that one
//! intersection per section; the converse direction holds because sections of
//! C-groups are C-groups, so every negative answer is a disproof.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::classify::{classify, GroupType};
use crate::error::GroupError;
use crate::group::EngineConfig;
use crate::perm::Permutation;
use crate::sggi::{Sggi, StringCheck};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// String C-group.
    Certified,
    Refuted,
    /// An intersection ran out of budget somewhere in the recursion.
    Undecided,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Certified => 0,
            Verdict::Refuted => 1,
            Verdict::Undecided => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Recursive,
    BruteForce,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionCheck {
    /// `|Gamma_0 ∩ Gamma_{r-1}|`, absent when the search gave up.
    pub intersection_order: Option<String>,
    /// `|Gamma_{0,r-1}|`.
    pub section_order: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub verdict: Verdict,
    pub rank: usize,
    pub degree: usize,
    pub order: String,
    pub schlafli: Vec<u64>,
    pub string_condition: StringCheck,
    pub facet: Option<Box<VerificationReport>>,
    pub vertex_figure: Option<Box<VerificationReport>>,
    pub intersection: Option<IntersectionCheck>,
    pub classification: GroupType,
    pub method: Method,
}

impl VerificationReport {
    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

/// Recursive verifier with a memo of section reports.
pub struct Verifier {
    config: EngineConfig,
    memo: Mutex<HashMap<Vec<Permutation>, VerificationReport>>,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier::new(EngineConfig::default())
    }
}

impl Verifier {
    pub fn new(config: EngineConfig) -> Self {
        Verifier {
            config,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn verify(&self, s: &Sggi) -> VerificationReport {
        if let Some(r) = self.memo.lock().unwrap().get(&s.key()) {
            return r.clone();
        }
        let report = self.verify_uncached(s);
        self.memo.lock().unwrap().insert(s.key(), report.clone());
        report
    }

    fn verify_uncached(&self, s: &Sggi) -> VerificationReport {
        let group = s.group();
        let string_condition = s.check_string_condition();
        let mut report = VerificationReport {
            verdict: Verdict::Refuted,
            rank: s.rank(),
            degree: s.degree(),
            order: group.order().to_string(),
            schlafli: s.schlafli_type(),
            string_condition,
            facet: None,
            vertex_figure: None,
            intersection: None,
            classification: classify(&group),
            method: Method::Recursive,
        };
        if !report.string_condition.is_ok() || !report.string_condition.trivial.is_empty() {
            return report;
        }
        let r = s.rank();
        if r <= 1 {
            report.verdict = Verdict::Certified;
            return report;
        }
        if r == 2 {
            if s.rho(0) != s.rho(1) {
                report.verdict = Verdict::Certified;
            }
            return report;
        }
        let facet = s.facet();
        let vertex = s.vertex_figure();
        let (fr, vr) = rayon::join(|| self.verify(&facet), || self.verify(&vertex));
        let sub = [fr.verdict, vr.verdict];
        report.facet = Some(Box::new(fr));
        report.vertex_figure = Some(Box::new(vr));
        if sub.contains(&Verdict::Refuted) {
            return report;
        }
        let middle = s.section(&(1..r - 1).collect::<Vec<_>>()).group();
        let section_order = middle.order();
        let check = match facet.group().intersect(&vertex.group(), &self.config) {
            Ok(i) => {
                let ok = i.order() == section_order;
                IntersectionCheck {
                    intersection_order: Some(i.order().to_string()),
                    section_order: section_order.to_string(),
                    ok,
                }
            }
            Err(GroupError::BudgetExhausted { .. }) | Err(GroupError::TooLarge { .. }) => {
                report.intersection = Some(IntersectionCheck {
                    intersection_order: None,
                    section_order: section_order.to_string(),
                    ok: false,
                });
                report.verdict = Verdict::Undecided;
                return report;
            }
        };
        let ok = check.ok;
        report.intersection = Some(check);
        report.verdict = if !ok {
            Verdict::Refuted
        } else if sub.contains(&Verdict::Undecided) {
            Verdict::Undecided
        } else {
            Verdict::Certified
        };
        report
    }
}

/// Verifies with a fresh default verifier.
pub fn verify(s: &Sggi) -> VerificationReport {
    Verifier::default().verify(s)
}

/// Checks `<rho_I> ∩ <rho_J> = <rho_{I∩J}>` for every pair of index sets by enumeration.
pub fn verify_brute(s: &Sggi, limit: u64) -> Result<bool, GroupError> {
    let group = s.group();
    let elements = group.elements(limit)?;
    let index: HashMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let r = s.rank();
    let words = elements.len().div_ceil(64);
    let mut sets: Vec<Vec<u64>> = Vec::with_capacity(1 << r);
    let mut sizes: Vec<usize> = Vec::with_capacity(1 << r);
    for mask in 0usize..(1 << r) {
        let gens: Vec<Permutation> = (0..r)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| s.rho(i).clone())
            .collect();
        let sub = group.subgroup(&gens);
        let mut bits = vec![0u64; words];
        let mut count = 0;
        sub.chain().for_each_element(|g| {
            let g = g.embed(s.degree());
            let i = index[&g];
            bits[i / 64] |= 1 << (i % 64);
            count += 1;
        });
        sets.push(bits);
        sizes.push(count);
    }
    for i in 0..(1usize << r) {
        for j in i + 1..(1usize << r) {
            let common: usize = sets[i]
                .iter()
                .zip(&sets[j])
                .map(|(a, b)| (a & b).count_ones() as usize)
                .sum();
            if common != sizes[i & j] {
                return Ok(false);
            }
        }
    }
    // distinct generators: a repeated involution makes <rho_i> ∩ <rho_j> too big, caught above
    Ok(true)
}

/// Order of `Gamma_0 ∩ Gamma_{r-1}` by enumeration, for cross-checks.
pub fn brute_intersection_order(s: &Sggi, limit: u64) -> Result<BigUint, GroupError> {
    let facet: std::collections::HashSet<Permutation> =
        s.facet().group().elements(limit)?.into_iter().collect();
    let vertex = s.vertex_figure().group().elements(limit)?;
    Ok(BigUint::from(vertex.iter().filter(|g| facet.contains(*g)).count()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex3() -> Sggi {
        Sggi::parse(4, &["(1,2)", "(2,3)", "(3,4)"]).unwrap()
    }

    fn klein() -> Sggi {
        Sggi::parse(4, &["(1,2)", "(3,4)", "(1,2)(3,4)"]).unwrap()
    }

    #[test]
    fn simplex_is_certified() {
        let r = verify(&simplex3());
        assert_eq!(r.verdict, Verdict::Certified);
        assert_eq!(r.classification, GroupType::Sym(4));
        assert!(verify_brute(&simplex3(), 100_000).unwrap());
    }

    #[test]
    fn klein_is_refuted() {
        let r = verify(&klein());
        assert_eq!(r.verdict, Verdict::Refuted);
        let check = r.intersection.unwrap();
        assert_eq!(check.intersection_order.as_deref(), Some("4"));
        assert_eq!(check.section_order, "2");
        assert!(!verify_brute(&klein(), 100_000).unwrap());
    }

    #[test]
    fn rank_two_needs_distinct_generators() {
        let s = Sggi::parse(2, &["(1,2)", "(1,2)"]).unwrap();
        assert_eq!(verify(&s).verdict, Verdict::Refuted);
        assert!(!verify_brute(&s, 100).unwrap());
    }

    #[test]
    fn brute_force_limit() {
        let s = Sggi::parse(9, &["(1,2)", "(2,3)", "(3,4)", "(4,5)", "(5,6)", "(6,7)", "(7,8)", "(8,9)"])
            .unwrap();
        assert!(matches!(verify_brute(&s, 1000), Err(GroupError::TooLarge { .. })));
    }
}
