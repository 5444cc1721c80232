//! Which (n, r) cells for alternating groups the constructions cover, and their certificates.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::GroupType;
use crate::family;
use crate::group::EngineConfig;
use crate::sggi::{CprGraph, Sggi};
use crate::verify::{Verdict, Verifier};

/// Largest degree the census accepts.
pub const DEFAULT_N_CAP: usize = 24;

/// How a cell is meant to be covered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Plan {
    Family { name: &'static str, r: usize, k: usize },
    Seed { rank: usize, family: usize, t: usize },
    External { reason: &'static str },
    Gap,
}

impl Plan {
    pub fn source(&self) -> String {
        match self {
            Plan::Family { name, r, k } => format!("{name}({r},{k})"),
            Plan::Seed { rank, family, t } => format!("seed({rank},{family},t={t})"),
            Plan::External { .. } => "external".into(),
            Plan::Gap => "none".into(),
        }
    }

    pub fn build(&self) -> Option<Result<Sggi, crate::error::FamilyError>> {
        match *self {
            Plan::Family { name, r, k } => Some(family::build(name, r, k)),
            Plan::Seed { rank, family, t } => Some(family::seed_extended(rank, family, t)),
            _ => None,
        }
    }
}

pub const RANK_THREE: &str = "rank 3 representations are cited, not constructed";
pub const TOP_ODD: &str = "top rank n = 2r+1 is cited";
pub const SEED_UNREACHED: &str = "small n not reached by the seed families is cited";

/// The construction responsible for `A_n` in rank `r`.
pub fn plan(n: usize, r: usize) -> Plan {
    if r == 3 {
        return Plan::External { reason: RANK_THREE };
    }
    if n % 2 == 1 && n == 2 * r + 1 {
        return Plan::External { reason: TOP_ODD };
    }
    if r >= 6 && n.is_multiple_of(2) && n >= 2 * r + 2 {
        return Plan::Family { name: "D", r, k: n - 2 * r - 2 };
    }
    if r >= 7 && n % 2 == 1 && n >= 2 * r + 3 {
        let j = n - 2 * r - 1;
        return if j % 4 == 2 {
            Plan::Family { name: "S", r, k: j }
        } else {
            Plan::Family { name: "B", r, k: n - 2 * r - 3 }
        };
    }
    if (4..=6).contains(&r) {
        let hit = family::SEEDS
            .iter()
            .filter(|s| s.rank == r)
            .find_map(|s| s.tail_for_alt(n).map(|t| (s.family, t)));
        return match hit {
            Some((family, t)) => Plan::Seed { rank: r, family, t },
            None if n <= 14 => Plan::External { reason: SEED_UNREACHED },
            None => Plan::Gap,
        };
    }
    Plan::Gap
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    External,
    Gap,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusCell {
    pub n: usize,
    pub r: usize,
    pub status: Status,
    pub source: String,
    /// Why an external cell is external, or what went wrong in a gap.
    pub note: Option<String>,
    pub verdict: Option<Verdict>,
    pub classification: Option<GroupType>,
    pub order: Option<String>,
    #[serde(skip)]
    pub graph: Option<CprGraph>,
}

#[derive(Clone, Debug)]
pub struct CensusConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub n_cap: usize,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    pub engine: EngineConfig,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            n_min: 12,
            n_max: 20,
            n_cap: DEFAULT_N_CAP,
            jobs: 0,
            engine: EngineConfig::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Census {
    pub n_min: usize,
    pub n_max: usize,
    pub cells: Vec<CensusCell>,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error("n_max {n_max} exceeds the cap {cap}")]
    AboveCap { n_max: usize, cap: usize },
    #[error("cannot start a worker pool: {0}")]
    Pool(String),
}

/// Cells `(n, r)` for `n_min <= n <= n_max` and `3 <= r <= ceil(n/2) - 1`.
pub fn cells(n_min: usize, n_max: usize) -> Vec<(usize, usize)> {
    (n_min..=n_max)
        .flat_map(|n| (3..n.div_ceil(2)).map(move |r| (n, r)))
        .collect()
}

pub fn run(config: &CensusConfig) -> Result<Census, CensusError> {
    if config.n_max > config.n_cap {
        return Err(CensusError::AboveCap {
            n_max: config.n_max,
            cap: config.n_cap,
        });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| CensusError::Pool(e.to_string()))?;
    let verifier = Verifier::new(config.engine);
    let todo = cells(config.n_min, config.n_max);
    let cells = pool.install(|| {
        todo.par_iter()
            .map(|&(n, r)| run_cell(n, r, &verifier))
            .collect::<Vec<_>>()
    });
    Ok(Census {
        n_min: config.n_min,
        n_max: config.n_max,
        cells,
    })
}

pub fn run_cell(n: usize, r: usize, verifier: &Verifier) -> CensusCell {
    let plan = plan(n, r);
    let mut cell = CensusCell {
        n,
        r,
        status: Status::Gap,
        source: plan.source(),
        note: None,
        verdict: None,
        classification: None,
        order: None,
        graph: None,
    };
    if let Plan::External { reason } = plan {
        cell.status = Status::External;
        cell.note = Some(reason.to_string());
        return cell;
    }
    let s = match plan.build() {
        None => {
            cell.note = Some("no construction covers this cell".into());
            return cell;
        }
        Some(Err(e)) => {
            cell.note = Some(e.to_string());
            return cell;
        }
        Some(Ok(s)) => s,
    };
    let report = verifier.verify(&s);
    cell.verdict = Some(report.verdict);
    cell.classification = Some(report.classification.clone());
    cell.order = Some(report.order.clone());
    cell.graph = s.to_graph().ok();
    let alt = GroupType::Alt(n);
    if s.rank() != r {
        cell.note = Some(format!("construction has rank {}", s.rank()));
    } else if report.verdict != Verdict::Certified {
        cell.note = Some(format!("verification {:?}", report.verdict).to_lowercase());
    } else if report.classification != alt {
        cell.note = Some(format!("group is {}, not {alt}", report.classification));
    } else {
        cell.status = Status::Verified;
    }
    cell
}

impl Census {
    pub fn gaps(&self) -> impl Iterator<Item = &CensusCell> {
        self.cells.iter().filter(|c| c.status == Status::Gap)
    }

    pub fn count(&self, status: Status) -> usize {
        self.cells.iter().filter(|c| c.status == status).count()
    }

    pub fn cell(&self, n: usize, r: usize) -> Option<&CensusCell> {
        self.cells.iter().find(|c| c.n == n && c.r == r)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:>3} {:>3}  {:<9} {:<16} detail", "n", "r", "status", "source");
        for c in &self.cells {
            let status = match c.status {
                Status::Verified => "verified",
                Status::External => "external",
                Status::Gap => "GAP",
            };
            let detail = match (&c.status, &c.classification, &c.note) {
                (Status::Verified, Some(t), _) => format!("{t} certified"),
                (_, _, Some(note)) => note.clone(),
                _ => String::new(),
            };
            let _ = writeln!(out, "{:>3} {:>3}  {:<9} {:<16} {detail}", c.n, c.r, status, c.source);
        }
        let _ = writeln!(
            out,
            "cells {}  verified {}  external {}  gaps {}",
            self.cells.len(),
            self.count(Status::Verified),
            self.count(Status::External),
            self.count(Status::Gap)
        );
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}
