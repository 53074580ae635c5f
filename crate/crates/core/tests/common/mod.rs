//! Reference implementations used as oracles by the integration tests. These
//! work from the raw definitions and share no code with the library paths
//! they check.

#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use contadj::harness::{all_spaces, enumerate_functions};
use contadj::{FiniteSpace, MonotoneMap, SetFunction};
use rand::Rng;

pub fn subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

/// Intersection of every closed superset.
pub fn naive_closure(space: &FiniteSpace, s: u64) -> u64 {
    let full = if space.point_count() == 0 {
        0
    } else {
        (1u64 << space.point_count()) - 1
    };
    let mut acc = full;
    for &c in space.closed_sets() {
        if subset(s, c) {
            acc &= c;
        }
    }
    acc
}

pub fn naive_preimage(phi: &SetFunction, v: u64) -> u64 {
    let mut out = 0;
    for (p, &q) in phi.mapping().iter().enumerate() {
        if v >> q & 1 == 1 {
            out |= 1 << p;
        }
    }
    out
}

pub fn naive_image(phi: &SetFunction, u: u64) -> u64 {
    let mut out = 0;
    for (p, &q) in phi.mapping().iter().enumerate() {
        if u >> p & 1 == 1 {
            out |= 1 << q;
        }
    }
    out
}

/// Continuity through open sets: the preimage of every open set is open.
pub fn continuous_by_open_sets(phi: &SetFunction) -> bool {
    let opens_x: HashSet<u64> = phi.domain().open_sets().into_iter().collect();
    phi.codomain()
        .open_sets()
        .into_iter()
        .all(|o| opens_x.contains(&naive_preimage(phi, o)))
}

/// `cl(φ(U)) ⊆ V ⟺ U ⊆ cl(φ⁻¹(V))` for all closed pairs, from scratch.
pub fn induced_pair_adjoint(phi: &SetFunction) -> bool {
    let (x, y) = (phi.domain(), phi.codomain());
    x.closed_sets().iter().all(|&u| {
        y.closed_sets().iter().all(|&v| {
            let left = subset(naive_closure(y, naive_image(phi, u)), v);
            let right = subset(u, naive_closure(x, naive_preimage(phi, v)));
            left == right
        })
    })
}

/// Topologies on `n` labeled points by filtering every family of subsets.
pub fn brute_force_topology_count(n: usize) -> usize {
    let subsets: Vec<u64> = (0..1u64 << n).collect();
    let full = (1u64 << n) - 1;
    let mut count = 0;
    for encoding in 0u64..1 << subsets.len() {
        let family: HashSet<u64> = subsets
            .iter()
            .copied()
            .filter(|&s| encoding >> s & 1 == 1)
            .collect();
        if !family.contains(&0) || !family.contains(&full) {
            continue;
        }
        let ok = family.iter().all(|&a| {
            family
                .iter()
                .all(|&b| family.contains(&(a | b)) && family.contains(&(a & b)))
        });
        count += usize::from(ok);
    }
    count
}

/// Preorders on `n` points, which correspond one-to-one with finite
/// topologies.
pub fn preorder_count(n: usize) -> usize {
    let bits = n * n;
    let rel = |r: u64, i: usize, j: usize| r >> (i * n + j) & 1 == 1;
    (0u64..1 << bits)
        .filter(|&r| {
            (0..n).all(|i| rel(r, i, i))
                && (0..n).all(|i| {
                    (0..n).all(|j| !rel(r, i, j) || (0..n).all(|k| !rel(r, j, k) || rel(r, i, k)))
                })
        })
        .count()
}

/// Every monotone map `Closed(source) -> Closed(target)`, by backtracking.
pub fn all_monotone_maps(source: &Arc<FiniteSpace>, target: &Arc<FiniteSpace>) -> Vec<MonotoneMap> {
    fn go(xs: &[u64], ys: &[u64], table: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = table.len();
        if i == xs.len() {
            out.push(table.clone());
            return;
        }
        for (j, &y) in ys.iter().enumerate() {
            let ok = (0..i).all(|k| {
                (!subset(xs[k], xs[i]) || subset(ys[table[k]], y))
                    && (!subset(xs[i], xs[k]) || subset(y, ys[table[k]]))
            });
            if ok {
                table.push(j);
                go(xs, ys, table, out);
                table.pop();
            }
        }
    }
    let mut tables = Vec::new();
    go(
        source.closed_sets(),
        target.closed_sets(),
        &mut Vec::new(),
        &mut tables,
    );
    tables
        .into_iter()
        .map(|t| MonotoneMap::new(source.clone(), target.clone(), t).unwrap())
        .collect()
}

/// A uniformly chosen image for each closed set, subject to lying above the
/// images of all its closed subsets already assigned. Closed families are
/// ascending, so every subset of a closed set is assigned before it.
pub fn random_monotone_map<R: Rng>(
    rng: &mut R,
    source: &Arc<FiniteSpace>,
    target: &Arc<FiniteSpace>,
) -> MonotoneMap {
    let xs = source.closed_sets();
    let ys = target.closed_sets();
    let mut table: Vec<usize> = Vec::with_capacity(xs.len());
    for (i, &u) in xs.iter().enumerate() {
        let floor = (0..i)
            .filter(|&k| subset(xs[k], u))
            .fold(0, |acc, k| acc | ys[table[k]]);
        let options: Vec<usize> = (0..ys.len()).filter(|&j| subset(floor, ys[j])).collect();
        table.push(options[rng.gen_range(0..options.len())]);
    }
    MonotoneMap::new(source.clone(), target.clone(), table).unwrap()
}

/// Every function between every ordered pair of spaces on at most
/// `max_points` points.
pub fn sweep(max_points: usize) -> Vec<SetFunction> {
    let spaces = all_spaces(max_points).unwrap();
    let mut out = Vec::new();
    for x in &spaces {
        for y in &spaces {
            out.extend(enumerate_functions(x, y));
        }
    }
    out
}

pub fn spaces_of_size(n: usize) -> Vec<Arc<FiniteSpace>> {
    contadj::enumerate_spaces(n)
        .unwrap()
        .map(Arc::new)
        .collect()
}
