// Naive reference implementations used as oracles. Nothing here calls the
// library's algorithms; graphs are read only through `has_edge`.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zforce_core::Graph;

pub type Adj = Vec<Vec<bool>>;

pub fn adjacency(g: &Graph) -> Adj {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

pub fn naive_closure(adj: &Adj, start: u64) -> u64 {
    let n = adj.len();
    let mut blue: Vec<bool> = (0..n).map(|v| start >> v & 1 == 1).collect();
    loop {
        let mut changed = false;
        for u in 0..n {
            if !blue[u] {
                continue;
            }
            let white: Vec<usize> = (0..n).filter(|&w| adj[u][w] && !blue[w]).collect();
            if white.len() == 1 {
                blue[white[0]] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    blue.iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .fold(0, |acc, (v, _)| acc | 1 << v)
}

pub fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn naive_is_zfs(adj: &Adj, s: u64) -> bool {
    naive_closure(adj, s) == full(adj.len())
}

/// Minimal sets checked against every proper subset, not just single deletions.
pub fn naive_minimal_sets(adj: &Adj) -> Vec<u64> {
    let n = adj.len();
    let zfs: Vec<bool> = (0..1u64 << n).map(|s| naive_is_zfs(adj, s)).collect();
    (0..1u64 << n)
        .filter(|&s| {
            if !zfs[s as usize] {
                return false;
            }
            // walk proper submasks
            let mut sub = s.wrapping_sub(1) & s;
            loop {
                if sub != s && zfs[sub as usize] {
                    return false;
                }
                if sub == 0 {
                    return true;
                }
                sub = (sub - 1) & s;
            }
        })
        .collect()
}

pub fn naive_z(adj: &Adj) -> usize {
    let n = adj.len();
    (0..1u64 << n)
        .filter(|&s| naive_is_zfs(adj, s))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn naive_zbar(adj: &Adj) -> usize {
    naive_minimal_sets(adj)
        .iter()
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn naive_is_fort(adj: &Adj, f: u64) -> bool {
    let n = adj.len();
    f != 0
        && (0..n)
            .filter(|&v| f >> v & 1 == 0)
            .all(|v| (0..n).filter(|&u| f >> u & 1 == 1 && adj[v][u]).count() != 1)
}

/// True when the non-isolated vertices form a clique with at least
/// `min_clique` vertices and there are at least `min_isolates` other vertices.
/// An edgeless graph counts as a single-vertex clique plus isolates.
pub fn naive_clique_plus_isolates(adj: &Adj, min_clique: usize, min_isolates: usize) -> bool {
    let n = adj.len();
    let deg = |v: usize| adj[v].iter().filter(|&&b| b).count();
    let mut core: Vec<usize> = (0..n).filter(|&v| deg(v) > 0).collect();
    if core.is_empty() && n > 0 {
        core.push(0);
    }
    let clique = core
        .iter()
        .all(|&u| core.iter().all(|&v| u == v || adj[u][v]));
    clique && core.len() >= min_clique && n - core.len() >= min_isolates
}

pub fn seed() -> u64 {
    std::env::var("ZFORCE_TEST_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x5eed_2f0c)
}

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed() ^ salt)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Every labeled graph on `n` vertices, built without the library's encoder.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::new(n, &edges).unwrap()
    })
}
