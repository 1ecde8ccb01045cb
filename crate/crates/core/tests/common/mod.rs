//! Independent oracles for cross-checking the solvers: everything here is
//! computed from the adjacency relation by the most literal route available
//! (Floyd-Warshall distances, full subset enumeration), never through the
//! code paths under test.

// each test binary uses its own subset of these helpers
#![allow(dead_code)]

use idcodes::{Graph, VertexSet};
use itertools::Itertools;

pub const INF: usize = usize::MAX / 2;

/// All-pairs distances by Floyd-Warshall over the edge list.
pub fn distance_matrix(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut d = vec![vec![INF; n]; n];
    for v in 0..n {
        d[v][v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k].saturating_add(d[k][j]);
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Closed neighborhood from the distance matrix.
pub fn naive_ball(d: &[Vec<usize>], v: usize) -> Vec<usize> {
    (0..d.len()).filter(|&u| d[v][u] <= 1).collect()
}

pub fn naive_r_ball(d: &[Vec<usize>], v: usize, r: usize) -> Vec<usize> {
    (0..d.len()).filter(|&u| d[v][u] <= r).collect()
}

fn ball_cap(d: &[Vec<usize>], v: usize, code: &[usize]) -> Vec<usize> {
    code.iter().copied().filter(|&c| d[v][c] <= 1).collect()
}

pub fn naive_covers_all(d: &[Vec<usize>], code: &[usize]) -> bool {
    (0..d.len()).all(|v| !ball_cap(d, v, code).is_empty())
}

pub fn naive_separates_all(d: &[Vec<usize>], code: &[usize]) -> bool {
    let n = d.len();
    (0..n).tuple_combinations().all(|(x, y)| ball_cap(d, x, code) != ball_cap(d, y, code))
}

pub fn naive_undominated(d: &[Vec<usize>], code: &[usize]) -> bool {
    (0..d.len()).all(|v| code.iter().any(|&c| d[v][c] > 1))
}

pub fn naive_is_identifying(d: &[Vec<usize>], code: &[usize]) -> bool {
    !code.is_empty() && naive_covers_all(d, code) && naive_separates_all(d, code)
}

/// Smallest k and the lexicographically least k-subset passing `accept`,
/// by enumerating every subset of every cardinality in order.
pub fn brute_minimum(n: usize, accept: impl Fn(&[usize]) -> bool) -> Option<(usize, Vec<usize>)> {
    for k in 1..=n {
        for subset in (0..n).combinations(k) {
            if accept(&subset) {
                return Some((k, subset));
            }
        }
    }
    None
}

pub fn brute_min_identifying(g: &Graph) -> Option<(usize, Vec<usize>)> {
    let d = distance_matrix(g);
    brute_minimum(g.order(), |s| naive_is_identifying(&d, s))
}

pub fn brute_min_separating(g: &Graph) -> Option<(usize, Vec<usize>)> {
    let d = distance_matrix(g);
    brute_minimum(g.order(), |s| naive_separates_all(&d, s))
}

pub fn brute_min_separating_undominated(g: &Graph) -> Option<(usize, Vec<usize>)> {
    let d = distance_matrix(g);
    brute_minimum(g.order(), |s| naive_separates_all(&d, s) && naive_undominated(&d, s))
}

pub fn set(width: usize, vs: &[usize]) -> VertexSet {
    VertexSet::from_indices(width, vs.iter().copied())
}

/// Every labeled graph on `n` vertices, as edge masks.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edge_list(n, &edges).unwrap()
    })
}
