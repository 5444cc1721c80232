#![allow(dead_code)]

use std::collections::HashMap;

use altpoly::family;
use altpoly::group::closure_elements;
use altpoly::{Permutation, Sggi};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn sggi(n: usize, gens: &[&str]) -> Sggi {
    Sggi::parse(n, gens).unwrap()
}

pub fn simplex(r: usize) -> Sggi {
    let gens: Vec<String> = (1..=r).map(|i| format!("({},{})", i, i + 1)).collect();
    let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
    sggi(r + 1, &refs)
}

/// Rank 3, `rho_0 rho_2 = rho_1`, so `<rho_0, rho_1> ∩ <rho_1, rho_2>` is too big.
pub fn klein() -> Sggi {
    sggi(4, &["(1,2)", "(3,4)", "(1,2)(3,4)"])
}

/// A product of `pairs` disjoint transpositions on `1..=n`.
pub fn involution_with(rng: &mut impl Rng, n: usize, pairs: usize) -> Permutation {
    let mut pts: Vec<usize> = (1..=n).collect();
    pts.shuffle(rng);
    let pairs: Vec<(usize, usize)> = pts.chunks(2).take(pairs).filter(|c| c.len() == 2).map(|c| (c[0], c[1])).collect();
    Permutation::from_pairs(n, &pairs).unwrap()
}

pub fn involution(rng: &mut impl Rng, n: usize) -> Permutation {
    let pairs = rng.gen_range(1..=n / 2);
    involution_with(rng, n, pairs)
}

/// Random tuple of nontrivial involutions, no string condition imposed.
pub fn random_tuple(rng: &mut impl Rng, n: usize, r: usize) -> Sggi {
    Sggi::new(n, (0..r).map(|_| involution(rng, n)).collect())
}

/// Random tuple of nontrivial involutions satisfying the string condition.
pub fn random_sggi(rng: &mut impl Rng, n: usize, r: usize) -> Sggi {
    loop {
        let s = random_tuple(rng, n, r);
        if s.check_string_condition().is_ok() {
            return s;
        }
    }
}

/// Named small examples plus seeded random string groups.
pub fn corpus() -> Vec<(String, Sggi)> {
    let mut out = vec![
        ("simplex2".to_string(), simplex(2)),
        ("simplex3".to_string(), simplex(3)),
        ("simplex4".to_string(), simplex(4)),
        ("klein".to_string(), klein()),
        ("repeated".to_string(), sggi(3, &["(1,2)", "(1,2)"])),
        ("square".to_string(), sggi(4, &["(1,2)(3,4)", "(2,3)"])),
    ];
    for (name, r, k) in [("FL", 3, 0), ("FL", 3, 1), ("FL", 4, 0), ("FL", 4, 1), ("P", 4, 0), ("P", 4, 1), ("Sh", 4, 2)] {
        out.push((format!("{name}({r},{k})"), family::build(name, r, k).unwrap()));
    }
    let mut g = rng(7);
    for i in 0..24 {
        let n = 4 + i % 4;
        let r = 3 + i % 2;
        out.push((format!("random{i}"), random_sggi(&mut g, n, r)));
    }
    out
}

/// `|Psi| = |Gamma|` iff `rho_i -> [i == k]` extends to a homomorphism onto C2.
/// Walks the Cayley graph and looks for a relator with an odd number of `rho_k`.
pub fn sesqui_keeps_order(s: &Sggi, k: usize) -> bool {
    let size = closure_elements(s.degree(), s.generators(), 400_000).unwrap().len();
    let mut bit: HashMap<Permutation, bool> = HashMap::with_capacity(size);
    let id = Permutation::identity(s.degree());
    bit.insert(id.clone(), false);
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        let b = bit[&x];
        for (i, g) in s.generators().iter().enumerate() {
            let y = x.compose(g);
            let want = b ^ (i == k);
            match bit.get(&y) {
                Some(&have) if have != want => return false,
                Some(_) => {}
                None => {
                    bit.insert(y.clone(), want);
                    stack.push(y);
                }
            }
        }
    }
    true
}
