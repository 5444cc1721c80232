//! Recognition of the group types the constructions produce, by exact order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::group::PermutationGroup;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupType {
    Sym(usize),
    Alt(usize),
    /// `(S_2 wr S_m)^+` on `2m` points.
    EvenWreath(usize),
    /// `S_a x S_b` on two orbits, `a <= b`.
    DirectProdSym(usize, usize),
    /// `(S_a x S_b)^+` on two orbits, `a <= b`.
    EvenDirectProdSym(usize, usize),
    /// `S_2 x S_m` with orbits of sizes 2 and `m`.
    SymTimesC2(usize),
    /// Order and all orbit sizes (fixed points included).
    Unrecognized(BigUint, Vec<usize>),
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

impl GroupType {
    /// The order the type stands for.
    pub fn order(&self) -> BigUint {
        let two = BigUint::from(2u32);
        match self {
            GroupType::Sym(n) => factorial(*n),
            GroupType::Alt(n) => factorial(*n) / two,
            GroupType::EvenWreath(m) => (BigUint::one() << *m) * factorial(*m) / two,
            GroupType::DirectProdSym(a, b) => factorial(*a) * factorial(*b),
            GroupType::EvenDirectProdSym(a, b) => factorial(*a) * factorial(*b) / two,
            GroupType::SymTimesC2(m) => factorial(*m) * two,
            GroupType::Unrecognized(order, _) => order.clone(),
        }
    }

    /// Number of moved points.
    pub fn support_size(&self) -> Option<usize> {
        match self {
            GroupType::Sym(n) | GroupType::Alt(n) => Some(*n),
            GroupType::EvenWreath(m) => Some(2 * m),
            GroupType::DirectProdSym(a, b) | GroupType::EvenDirectProdSym(a, b) => Some(a + b),
            GroupType::SymTimesC2(m) => Some(m + 2),
            GroupType::Unrecognized(..) => None,
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupType::Sym(n) => write!(f, "Sym({n})"),
            GroupType::Alt(n) => write!(f, "Alt({n})"),
            GroupType::EvenWreath(m) => write!(f, "EvenWreath({m})"),
            GroupType::DirectProdSym(a, b) => write!(f, "DirectProdSym({a},{b})"),
            GroupType::EvenDirectProdSym(a, b) => write!(f, "EvenDirectProdSym({a},{b})"),
            GroupType::SymTimesC2(m) => write!(f, "SymTimesC2({m})"),
            GroupType::Unrecognized(order, sizes) => {
                let sizes: Vec<String> = sizes.iter().map(ToString::to_string).collect();
                write!(f, "Unrecognized({order}, [{}])", sizes.join(","))
            }
        }
    }
}

impl FromStr for GroupType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || format!("bad group type {s:?}");
        let open = s.find('(').ok_or_else(bad)?;
        let (tag, rest) = s.split_at(open);
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        if tag == "Unrecognized" {
            let (order, sizes) = body.split_once(',').ok_or_else(bad)?;
            let sizes = sizes
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(bad)?;
            let sizes = if sizes.is_empty() {
                Vec::new()
            } else {
                sizes
                    .split(',')
                    .map(|x| x.parse().map_err(|_| bad()))
                    .collect::<Result<_, _>>()?
            };
            return Ok(GroupType::Unrecognized(order.parse().map_err(|_| bad())?, sizes));
        }
        let nums: Vec<usize> = body
            .split(',')
            .map(|x| x.parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        match (tag, nums.as_slice()) {
            ("Sym", [n]) => Ok(GroupType::Sym(*n)),
            ("Alt", [n]) => Ok(GroupType::Alt(*n)),
            ("EvenWreath", [m]) => Ok(GroupType::EvenWreath(*m)),
            ("DirectProdSym", [a, b]) => Ok(GroupType::DirectProdSym(*a, *b)),
            ("EvenDirectProdSym", [a, b]) => Ok(GroupType::EvenDirectProdSym(*a, *b)),
            ("SymTimesC2", [m]) => Ok(GroupType::SymTimesC2(*m)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for GroupType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Classifies the action on the moved points.
pub fn classify(g: &PermutationGroup) -> GroupType {
    let order = g.order();
    let support: Vec<usize> = g.support().into_iter().collect();
    let unrecognized = || {
        let sizes = g.orbits().iter().map(Vec::len).collect();
        GroupType::Unrecognized(order.clone(), sizes)
    };
    let n = support.len();
    if n <= 2 {
        return unrecognized();
    }
    let h = g.action_on(&support);
    let even = h.is_even_group();
    let orbits = h.orbits();
    let two = BigUint::from(2u32);
    match orbits.as_slice() {
        [_] => {
            if order == factorial(n) {
                return GroupType::Sym(n);
            }
            if even && order == factorial(n) / &two {
                return GroupType::Alt(n);
            }
            if even && n.is_multiple_of(2) {
                let m = n / 2;
                let t = GroupType::EvenWreath(m);
                if order == t.order() && has_pair_blocks(&h) {
                    return t;
                }
            }
            unrecognized()
        }
        [o1, o2] => {
            let (a, b) = (o1.len().min(o2.len()), o1.len().max(o2.len()));
            let prod = factorial(a) * factorial(b);
            if a == 2 && order == prod {
                return GroupType::SymTimesC2(b);
            }
            if order == prod {
                return GroupType::DirectProdSym(a, b);
            }
            if even && order == prod / two {
                return GroupType::EvenDirectProdSym(a, b);
            }
            unrecognized()
        }
        _ => unrecognized(),
    }
}

fn has_pair_blocks(h: &PermutationGroup) -> bool {
    (2..=h.degree()).any(|b| h.minimal_blocks((1, b)).block_size() == 2)
}
