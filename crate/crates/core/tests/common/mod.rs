//! Seeded generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use decomp_core::delta::MonotoneMap;
use decomp_core::incidence::{int, Functional, Incidence};
use decomp_core::nerve::Poset;
use decomp_core::sset::{SubSSet, TruncatedSSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A poset on `p0, …` with between 1 and `max_len` elements: every pair
/// `i < j` is a cover candidate with a per-poset density.
pub fn random_poset(rng: &mut ChaCha8Rng, max_len: usize) -> Poset {
    let n = rng.gen_range(1..=max_len);
    let density: f64 = rng.gen_range(0.15..0.6);
    let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let mut covers = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                covers.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    Poset::from_covers(names, &covers).expect("pairs i < j are acyclic")
}

/// `μ(a, b)` by the defining recursion `μ(a, b) = -Σ_{a ≤ c < b} μ(a, c)`.
pub fn oracle_mobius(p: &Poset) -> Vec<Vec<i64>> {
    let n = p.len();
    let order = p.linear_extension();
    let mut mu = vec![vec![0i64; n]; n];
    for a in 0..n {
        for &b in &order {
            if a == b {
                mu[a][b] = 1;
            } else if p.lt(a, b) {
                mu[a][b] = -(0..n).filter(|&c| p.leq(a, c) && p.lt(c, b)).map(|c| mu[a][c]).sum::<i64>();
            }
        }
    }
    mu
}

/// Edge `(a,b)` of a poset nerve.
pub fn edge(x: &TruncatedSSet, p: &Poset, a: usize, b: usize) -> usize {
    x.lookup(1, &format!("({},{})", p.name(a), p.name(b))).expect("comparable pair")
}

/// An intersection-closed family of subsets of `{0, …, ground-1}`
/// containing the ground set, ordered by inclusion: a lattice.
pub fn random_lattice(rng: &mut ChaCha8Rng, ground: u32, max_len: usize) -> (Poset, Vec<u32>) {
    loop {
        let full = (1u32 << ground) - 1;
        let mut family: BTreeSet<u32> = BTreeSet::from([full]);
        for _ in 0..rng.gen_range(1..=4) {
            family.insert(rng.gen_range(0..=full));
        }
        loop {
            let sets: Vec<u32> = family.iter().copied().collect();
            let before = family.len();
            for &a in &sets {
                for &b in &sets {
                    family.insert(a & b);
                }
            }
            if family.len() == before {
                break;
            }
        }
        if family.len() > max_len || family.len() < 2 {
            continue;
        }
        let sets: Vec<u32> = family.into_iter().collect();
        let names: Vec<String> = sets.iter().map(|s| format!("s{s}")).collect();
        let leq = sets
            .iter()
            .map(|&a| sets.iter().map(|&b| a & b == a).collect())
            .collect();
        return (Poset::from_matrix(names, leq).expect("inclusion order"), sets);
    }
}

/// Complements of `sets[x]` in the family, with meet `∩` and join the
/// smallest member containing the union.
pub fn oracle_complements(sets: &[u32], x: usize) -> Vec<usize> {
    let bottom = *sets.iter().min_by_key(|s| s.count_ones()).unwrap();
    let top = *sets.iter().max_by_key(|s| s.count_ones()).unwrap();
    let join = |a: u32, b: u32| {
        *sets
            .iter()
            .filter(|&&s| s & (a | b) == a | b)
            .min_by_key(|s| s.count_ones())
            .unwrap()
    };
    (0..sets.len())
        .filter(|&y| sets[x] & sets[y] == bottom && join(sets[x], sets[y]) == top)
        .collect()
}

pub fn random_functional(alg: &Incidence, rng: &mut ChaCha8Rng) -> Functional {
    let values: Vec<BigRational> = (0..alg.edge_count()).map(|_| int(rng.gen_range(-3..=3))).collect();
    alg.from_values(values).unwrap()
}

/// A nonempty random subset of `0..n`.
pub fn random_subset(rng: &mut ChaCha8Rng, n: usize, max: usize) -> Vec<usize> {
    let k = rng.gen_range(1..=max.min(n).max(1));
    let mut out: Vec<usize> = (0..n).collect();
    for i in 0..n {
        let j = rng.gen_range(i..n);
        out.swap(i, j);
    }
    out.truncate(k);
    out.sort();
    out
}

/// Cells whose vertices lie in `vertices` and whose edges are degenerate or
/// in `edges`: a sub-simplicial set, full exactly when `edges` has every
/// edge between the vertices.
pub fn edge_generated(x: &Arc<TruncatedSSet>, vertices: &[usize], edges: &BTreeSet<usize>) -> SubSSet {
    let degenerate_or_chosen = |e: usize| edges.contains(&e) || x.is_degenerate(1, e).unwrap_or(false);
    let selected = (0..=x.cap())
        .map(|n| {
            (0..x.level_len(n))
                .filter(|&c| {
                    if !x.vertices(n, c).iter().all(|v| vertices.contains(v)) {
                        return false;
                    }
                    (0..=n).all(|i| {
                        (i + 1..=n).all(|j| {
                            let pair = MonotoneMap::new(n, vec![i, j]).unwrap();
                            degenerate_or_chosen(x.act_on(&pair, c).unwrap())
                        })
                    })
                })
                .collect()
        })
        .collect();
    SubSSet::new(x.clone(), selected).expect("edge-generated cells are closed")
}
