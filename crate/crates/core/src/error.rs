use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("malformed cycle notation: {0:?}")]
    Syntax(String),
    #[error("point {point} is outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears twice in the image list")]
    NotBijective(usize),
    #[error("point {0} appears in more than one cycle")]
    RepeatedPoint(usize),
    #[error("degree {0} is too large")]
    DegreeTooLarge(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// The search gave up; this is never a wrong answer.
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },
    #[error("group order {order} exceeds the enumeration limit {limit}")]
    TooLarge { order: String, limit: u64 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("label {label} is not a matching: vertex {vertex} has two {label}-edges")]
    NotAMatching { label: usize, vertex: usize },
    #[error("duplicate edge {{{u}, {v}}} with label {label}")]
    DuplicateEdge { u: usize, v: usize, label: usize },
    #[error("edge {{{u}, {v}}} is a loop or leaves 1..={degree}")]
    BadVertex { u: usize, v: usize, degree: usize },
    #[error("label {label} is outside 0..{rank}")]
    BadLabel { label: usize, rank: usize },
    #[error("generator {index} is not an involution")]
    NotInvolution { index: usize },
    #[error("cannot parse graph file: {0}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("operation needs rank at least {needed}, got {rank}")]
    RankTooSmall { needed: usize, rank: usize },
    #[error("index {index} is outside 0..{rank}")]
    BadIndex { index: usize, rank: usize },
    #[error("consecutive product rho_{index} rho_{} has order {order}, need > 2", index + 1)]
    SmallConsecutiveOrder { index: usize, order: u64 },
    #[error("rho_0 is not in <rho_0 rho_2, rho_3>")]
    MembershipFails,
    #[error("rank reduction changed the group order from {before} to {after}")]
    OrderChanged { before: String, after: String },
    #[error("comix division {numerator} / {denominator} is inexact")]
    InexactComix { numerator: String, denominator: String },
    #[error("tail base must have trivial rho_0")]
    TailBaseHasRho0,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    Unknown(String),
    #[error("{family}({r},{k}) is outside the family domain: {constraint}")]
    Domain {
        family: String,
        r: usize,
        k: usize,
        constraint: String,
    },
    #[error("no encoded base graph for {0}")]
    TranscriptionMissing(String),
    #[error("seed rank {rank} family {family} does not exist")]
    NoSuchSeed { rank: usize, family: usize },
    #[error("tail length {0} is below 2")]
    ShortTail(usize),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

/// Any library error.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}
