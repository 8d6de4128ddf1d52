//! Graph families and witness sets with known minimal zero forcing structure.

use crate::error::{Error, Result};
use crate::forcing::is_zero_forcing_set;
use crate::graph::{complete, path, spider, Family, Graph};
use crate::minimal::{is_minimal_zfs, summarize, zero_forcing_number, ZfsTable};
use crate::vertex_set::VertexSet;

fn param(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

/// The spider with `k` legs of length 5. Leg `i` (1-based) holds the path
/// `a_i b_i c_i d_i e_i` at ids `5(i-1)+1 ..= 5(i-1)+5`, with `a_i` next to
/// the center 0.
pub fn five_leg_spider(k: usize) -> Result<Graph> {
    spider(&vec![5; k])
}

/// Id of vertex `a..e` (offset 0..5) on 1-based leg `i` of [`five_leg_spider`].
pub fn spider_vertex(leg: usize, offset: usize) -> usize {
    5 * (leg - 1) + 1 + offset
}

/// The witness set `S(I, j)` on the five-leg spider: for every leg `i ≠ j`,
/// `{b_i, c_i}` when `i ∈ I` and `{c_i, d_i}` otherwise. Legs are 1-based and
/// leg `j` gets nothing, to be forced from the center.
pub fn spider_witness_set(k: usize, j: usize, legs_in_i: &[usize]) -> Result<VertexSet> {
    if k < 3 {
        return Err(param(format!("spider needs at least 3 legs, got {k}")));
    }
    if j == 0 || j > k {
        return Err(param(format!("excluded leg {j} outside 1..={k}")));
    }
    if let Some(&bad) = legs_in_i.iter().find(|&&i| i == 0 || i > k) {
        return Err(param(format!("leg {bad} outside 1..={k}")));
    }
    if 5 * k + 1 > crate::vertex_set::MAX_ORDER {
        return Err(param(format!("{k} legs exceed the order cap")));
    }
    let mut s = VertexSet::EMPTY;
    for i in (1..=k).filter(|&i| i != j) {
        let (x, y) = if legs_in_i.contains(&i) {
            (1, 2)
        } else {
            (2, 3)
        };
        s.insert(spider_vertex(i, x));
        s.insert(spider_vertex(i, y));
    }
    Ok(s)
}

/// `S_{1,...,1,4k+1}`: `k-1` legs of length one and one leg of length `4k+1`,
/// the same order, leaf count and branchpoint count as the five-leg spider
/// with `k` legs.
pub fn twin_spider(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(param(format!("twin spider needs k >= 3, got {k}")));
    }
    let mut legs = vec![1; k - 1];
    legs.push(4 * k + 1);
    spider(&legs)
}

/// `C_5 □ K_m` with pair `(u, v)` at id `u*m + v`.
pub fn prism(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(param("prism needs m >= 1".into()));
    }
    Family::Cycle(5).build()?.cartesian_product(&complete(m)?)
}

/// `S(I) = V(K²) ∪ {u_i : i ∈ I} ∪ {w_i : i ∉ I}` on [`prism`]`(m)`, where
/// `K¹`, `K²`, `K³` are the cliques over cycle positions 0, 1, 2 and
/// `u_i`, `v_i`, `w_i` their `i`-th vertices (1-based `i`).
pub fn prism_witness_set(m: usize, legs_in_i: &[usize]) -> Result<VertexSet> {
    if m == 0 || 5 * m > crate::vertex_set::MAX_ORDER {
        return Err(param(format!("prism clique size {m} out of range")));
    }
    if let Some(&bad) = legs_in_i.iter().find(|&&i| i == 0 || i > m) {
        return Err(param(format!("index {bad} outside 1..={m}")));
    }
    let id = |pos: usize, i: usize| pos * m + (i - 1);
    let mut s = VertexSet::EMPTY;
    for i in 1..=m {
        s.insert(id(1, i));
        if legs_in_i.contains(&i) {
            s.insert(id(0, i));
        } else {
            s.insert(id(2, i));
        }
    }
    Ok(s)
}

/// The graph `G_n` (`n ≥ 7`) with `Z̄ = Z = 3` whose join with `K_1` has
/// `Z̄ > Z`. In 1-based labels: `N(1) = {2,3,5,n}`, `N(2) = {1,3,4}`,
/// `N(3) = {1,2,4,5}`, `N(4) = {2,3,5}`, `N(5) = {1,3,4,6}`, closed by the
/// path `5-6-...-n-1`. Vertex `p` has id `p-1`.
///
/// The construction is checked on every call and fails with
/// [`Error::ValidationFailed`] if any expected property is missing.
pub fn counterexample_graph(n: usize) -> Result<Graph> {
    let g = counterexample_graph_unchecked(n)?;
    validate_counterexample(&g)?;
    Ok(g)
}

pub fn counterexample_graph_unchecked(n: usize) -> Result<Graph> {
    if n < 7 {
        return Err(param(format!("counterexample graph needs n >= 7, got {n}")));
    }
    let mut edges = vec![
        (1, 2),
        (1, 3),
        (1, 5),
        (2, 3),
        (2, 4),
        (3, 4),
        (3, 5),
        (4, 5),
    ];
    edges.extend((5..n).map(|p| (p, p + 1)));
    edges.push((n, 1));
    let edges: Vec<_> = edges.into_iter().map(|(a, b)| (a - 1, b - 1)).collect();
    Graph::new(n, &edges)
}

/// `{1, 2, 3}` in 1-based labels: a minimum zero forcing set of `G_n`.
pub fn counterexample_min_set() -> VertexSet {
    VertexSet::from([0, 1, 2])
}

/// `{1, 3, 4, 5, 6}` in 1-based labels: a minimal zero forcing set of
/// `G_n ∨ K_1` of size 5.
pub fn counterexample_join_witness() -> VertexSet {
    VertexSet::from([0, 2, 3, 4, 5])
}

fn validate_counterexample(g: &Graph) -> Result<()> {
    let fail = |what: String| Err(Error::ValidationFailed(format!("G_{}: {what}", g.order())));
    let (z, _) = zero_forcing_number(g)?;
    if z != 3 {
        return fail(format!("Z = {z}, expected 3"));
    }
    let zbar = ZfsTable::build(g)?.max_minimal().0;
    if zbar != 3 {
        return fail(format!("Z̄ = {zbar}, expected 3"));
    }
    if !is_zero_forcing_set(g, counterexample_min_set()) {
        return fail("{1,2,3} does not force".into());
    }
    let h = g.add_universal_vertex()?;
    if !is_minimal_zfs(&h, counterexample_join_witness()) {
        return fail("{1,3,4,5,6} is not a minimal zero forcing set of the join".into());
    }
    Ok(())
}

/// `(2K_2) ∨ P_{n-4}` for `n ≥ 7`: the two `K_2` are `{0,1}` and `{2,3}`,
/// the path is `4-5-...-(n-1)`. Checked to have `Z = 5` and `Z̄ = n-2`.
pub fn gap_family(n: usize) -> Result<Graph> {
    let g = gap_family_unchecked(n)?;
    let s = summarize(&g)?;
    if s.z != 5 || s.zbar != n - 2 {
        return Err(Error::ValidationFailed(format!(
            "(2K_2) ∨ P_{}: Z = {}, Z̄ = {}, expected 5 and {}",
            n - 4,
            s.z,
            s.zbar,
            n - 2
        )));
    }
    Ok(g)
}

pub fn gap_family_unchecked(n: usize) -> Result<Graph> {
    if n < 7 {
        return Err(param(format!("gap family needs n >= 7, got {n}")));
    }
    let k2 = complete(2)?;
    k2.disjoint_union(&k2)?.join(&path(n - 4)?)
}

/// The path plus vertex 0 and vertex 2 (one from each `K_2`): a minimal zero
/// forcing set of size `n-2`.
pub fn gap_family_large_witness(n: usize) -> VertexSet {
    VertexSet::full(n).without(1).without(3)
}

/// Both `K_2` plus the first path vertex: a minimum zero forcing set of size 5.
pub fn gap_family_min_witness() -> VertexSet {
    VertexSet::from([0, 1, 2, 3, 4])
}
