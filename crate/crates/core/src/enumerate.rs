//! Exhaustive generation of small labeled graphs and brute-force
//! canonical forms.
//!
//! A labeled graph on `n` vertices is encoded by its upper triangle in
//! graph6 bit order: pair `(i, j)` with `i < j` sits at bit
//! `j*(j-1)/2 + i`. The canonical form of a graph is the relabeling with the
//! smallest code over all `n!` permutations.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::HARD_SWEEP_ORDER;

#[inline]
fn pair_bit(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    j * (j - 1) / 2 + i
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Upper-triangle code of `g`. Only defined for orders up to 11.
pub fn encode(g: &Graph) -> u64 {
    assert!(g.order() <= 11, "codes are limited to 11 vertices");
    g.edges()
        .fold(0u64, |acc, (u, v)| acc | 1 << pair_bit(u, v))
}

pub fn decode(n: usize, code: u64) -> Graph {
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(b, _)| code >> b & 1 == 1)
        .map(|(_, p)| p)
        .collect();
    Graph::new(n, &edges).expect("codes only name valid pairs")
}

/// Calls `f` on every permutation of `0..n` (Heap's algorithm); stops early
/// when `f` returns `false`.
fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    if !f(&perm) {
        return;
    }
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if !f(&perm) {
                return;
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn permuted_code(edge_pairs: &[(usize, usize)], perm: &[usize]) -> u64 {
    edge_pairs
        .iter()
        .fold(0u64, |acc, &(u, v)| acc | 1 << pair_bit(perm[u], perm[v]))
}

fn edge_pairs_of(n: usize, code: u64) -> Vec<(usize, usize)> {
    pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(b, _)| code >> b & 1 == 1)
        .map(|(_, p)| p)
        .collect()
}

/// Smallest code over all relabelings.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    let edge_pairs: Vec<_> = g.edges().collect();
    let mut best = u64::MAX;
    for_each_permutation(n, |p| {
        best = best.min(permuted_code(&edge_pairs, p));
        true
    });
    best
}

pub fn canonical_form(g: &Graph) -> Graph {
    decode(g.order(), canonical_code(g))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && canonical_code(g) == canonical_code(h)
}

/// True if no relabeling of the graph with this code has a smaller code.
fn is_canonical_code(n: usize, code: u64) -> bool {
    let edge_pairs = edge_pairs_of(n, code);
    let mut canonical = true;
    for_each_permutation(n, |p| {
        if permuted_code(&edge_pairs, p) < code {
            canonical = false;
        }
        canonical
    });
    canonical
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > HARD_SWEEP_ORDER {
        Err(Error::InvalidParameter(format!(
            "graph enumeration supports orders 1..={HARD_SWEEP_ORDER}, got {n}"
        )))
    } else {
        Ok(())
    }
}

/// Every labeled graph on `n` vertices in code order.
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_order(n)?;
    Ok((0..1u64 << pair_count(n)).map(move |c| decode(n, c)))
}

/// Codes of the canonical representatives of each isomorphism class, in
/// increasing order.
pub fn canonical_codes(n: usize) -> Result<Vec<u64>> {
    check_order(n)?;
    Ok((0..1u64 << pair_count(n))
        .into_par_iter()
        .filter(|&c| is_canonical_code(n, c))
        .collect())
}

/// All graphs on `n` vertices: every labeled graph, or one canonical
/// representative per isomorphism class.
pub fn enumerate_all_graphs(n: usize, up_to_iso: bool) -> Result<Box<dyn Iterator<Item = Graph>>> {
    if up_to_iso {
        let codes = canonical_codes(n)?;
        Ok(Box::new(codes.into_iter().map(move |c| decode(n, c))))
    } else {
        Ok(Box::new(labeled_graphs(n)?))
    }
}
