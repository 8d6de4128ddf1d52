//! Simple undirected graphs on at most 64 vertices, with the family
//! generators and graph operations used throughout the crate.
//!
//! Every composite constructor fixes a labeling so results are reproducible:
//!
//! * `disjoint_union(G, H)` and `join(G, H)`: `G` keeps ids `0..|G|`, vertex
//!   `v` of `H` becomes `|G| + v`.
//! * `corona(G, H)`: `G` keeps its ids; the copy of `H` attached to vertex `i`
//!   occupies `|G| + i*|H| .. |G| + (i+1)*|H|`.
//! * `cartesian_product(G, H)`: pair `(u, v)` has id `u*|H| + v`.
//! * `add_universal_vertex(G)`: the new vertex is `|G|`.
//! * `delete_vertex(G, v)`: ids above `v` shift down by one.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_ORDER};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph on `n` vertices with the given edges, using the default
    /// order cap of 64.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_cap(n, edges, MAX_ORDER)
    }

    /// Builds a graph, rejecting orders above `cap` (itself clamped to 64).
    /// Duplicate and reversed pairs collapse onto one undirected edge.
    pub fn with_cap(n: usize, edges: &[(usize, usize)], cap: usize) -> Result<Self> {
        let mut g = Self::edgeless(n, cap)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The graph on `n` vertices with no edges.
    pub fn edgeless(n: usize, cap: usize) -> Result<Self> {
        let cap = cap.min(MAX_ORDER);
        if n == 0 || n > cap {
            return Err(Error::OrderOutOfRange { n, cap });
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { v: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, &nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_universal(&self, v: usize) -> bool {
        self.degree(v) + 1 == self.order()
    }

    pub fn universal_vertices(&self) -> VertexSet {
        (0..self.order())
            .filter(|&v| self.is_universal(v))
            .collect()
    }

    pub fn isolates(&self) -> VertexSet {
        (0..self.order())
            .filter(|&v| self.adj[v].is_empty())
            .collect()
    }

    pub fn leaves(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::VertexOutOfRange { v, n: self.order() })
        } else {
            Ok(())
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.max() {
            Some(v) if v >= self.order() => Err(Error::VertexOutOfRange { v, n: self.order() }),
            _ => Ok(()),
        }
    }

    fn with_order(n: usize) -> Result<Self> {
        Self::edgeless(n, MAX_ORDER)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order();
        let mut g = Self::with_order(n + other.order())?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(n + u, n + v)?;
        }
        Ok(g)
    }

    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.order();
        let mut g = self.disjoint_union(other)?;
        for u in 0..n {
            for v in 0..other.order() {
                g.add_edge(u, n + v)?;
            }
        }
        Ok(g)
    }

    /// One copy of `other` per vertex of `self`, each fully joined to its
    /// base vertex.
    pub fn corona(&self, other: &Graph) -> Result<Graph> {
        let (n, h) = (self.order(), other.order());
        let total = n.checked_mul(h + 1).ok_or(Error::OrderOutOfRange {
            n: usize::MAX,
            cap: MAX_ORDER,
        })?;
        let mut g = Self::with_order(total)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for i in 0..n {
            let base = n + i * h;
            for (u, v) in other.edges() {
                g.add_edge(base + u, base + v)?;
            }
            for v in 0..h {
                g.add_edge(i, base + v)?;
            }
        }
        Ok(g)
    }

    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        let h = other.order();
        let total = self.order().checked_mul(h).ok_or(Error::OrderOutOfRange {
            n: usize::MAX,
            cap: MAX_ORDER,
        })?;
        let mut g = Self::with_order(total)?;
        for u in 0..self.order() {
            for (a, b) in other.edges() {
                g.add_edge(u * h + a, u * h + b)?;
            }
        }
        for (a, b) in self.edges() {
            for v in 0..h {
                g.add_edge(a * h + v, b * h + v)?;
            }
        }
        Ok(g)
    }

    pub fn add_universal_vertex(&self) -> Result<Graph> {
        self.join(&complete(1)?)
    }

    /// Removes `v`. The returned map sends each old id to its new id
    /// (`None` for `v` itself).
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<Option<usize>>)> {
        self.check_vertex(v)?;
        if self.order() == 1 {
            return Err(Error::OrderOutOfRange {
                n: 0,
                cap: MAX_ORDER,
            });
        }
        let keep = self.vertices().without(v);
        let (g, new_to_old) = self.induced_subgraph(keep)?;
        let mut old_to_new = vec![None; self.order()];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        Ok((g, old_to_new))
    }

    /// Subgraph induced by `keep`, relabeled to `0..|keep|` in ascending
    /// order. Returns the new-to-old id map.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(keep)?;
        let new_to_old = keep.to_vec();
        let mut old_to_new = vec![usize::MAX; self.order()];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut g = Self::with_order(new_to_old.len())?;
        for (u, v) in self.edges() {
            if keep.contains(u) && keep.contains(v) {
                g.add_edge(old_to_new[u], old_to_new[v])?;
            }
        }
        Ok((g, new_to_old))
    }

    /// The graph with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.order()];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { adj }
    }

    /// Vertices reachable from `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next |= self.adj[u];
            }
            frontier = next - seen;
            seen |= frontier;
        }
        seen
    }

    pub fn components(&self) -> ComponentDecomposition {
        let mut rest = self.vertices();
        let mut blocks = Vec::new();
        while let Some(v) = rest.min() {
            let c = self.component_of(v);
            blocks.push(c);
            rest = rest - c;
        }
        ComponentDecomposition { blocks }
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertices()
    }

    pub fn is_complete(&self) -> bool {
        (0..self.order()).all(|v| self.is_universal(v))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// Connected components, ascending by least vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub blocks: Vec<VertexSet>,
}

impl ComponentDecomposition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_trivial(&self, i: usize) -> bool {
        self.blocks[i].len() == 1
    }

    pub fn nontrivial_count(&self) -> usize {
        self.blocks.iter().filter(|b| b.len() > 1).count()
    }
}

/// Named graph families with canonical labelings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Empty(usize),
    Path(usize),
    /// `0-1-...-(n-1)-0`.
    Cycle(usize),
    /// `K̄_{n-1} ∨ K_1`; the center is vertex `n-1`.
    Star(usize),
    /// `C_{n-1} ∨ K_1`; the hub is vertex `n-1`.
    Wheel(usize),
    /// Center 0, legs laid out consecutively from vertex 1, each leg a path
    /// whose first vertex touches the center.
    Spider(Vec<usize>),
    /// `K_m ∪ kK_1`; the clique is `0..m`.
    CompleteUnionIsolates(usize, usize),
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Complete(n) => complete(n),
            Family::Empty(n) => Graph::with_order(n),
            Family::Path(n) => path(n),
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(param("cycle needs n >= 3"));
                }
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Graph::new(n, &edges)
            }
            Family::Star(n) => {
                if n < 2 {
                    return Err(param("star needs n >= 2"));
                }
                Graph::with_order(n - 1)?.add_universal_vertex()
            }
            Family::Wheel(n) => {
                if n < 4 {
                    return Err(param("wheel needs n >= 4"));
                }
                Family::Cycle(n - 1).build()?.add_universal_vertex()
            }
            Family::Spider(ref legs) => spider(legs),
            Family::CompleteUnionIsolates(m, k) => {
                if m == 0 {
                    return Err(param("complete_union_isolates needs m >= 1"));
                }
                let clique = complete(m)?;
                if k == 0 {
                    Ok(clique)
                } else {
                    clique.disjoint_union(&Graph::with_order(k)?)
                }
            }
        }
    }
}

fn param(msg: &str) -> Error {
    Error::InvalidParameter(msg.to_string())
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::with_order(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

pub fn spider(legs: &[usize]) -> Result<Graph> {
    if legs.len() < 3 {
        return Err(param("spider needs at least 3 legs"));
    }
    if legs.contains(&0) {
        return Err(param("spider legs must have length >= 1"));
    }
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for &len in legs {
        edges.push((0, next));
        for i in 1..len {
            edges.push((next + i - 1, next + i));
        }
        next += len;
    }
    Graph::new(n, &edges)
}

/// Parses `name:p1,p2,...`, e.g. `cycle:7`, `spider:5,5,5`,
/// `complete_union_isolates:4,2`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<usize> = if args.trim().is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| {
                    a.trim()
                        .parse::<usize>()
                        .map_err(|_| param(&format!("bad family parameter `{a}`")))
                })
                .collect::<Result<_>>()?
        };
        let one = |nums: &[usize]| -> Result<usize> {
            match nums {
                [x] => Ok(*x),
                _ => Err(param(&format!("family `{name}` takes one parameter"))),
            }
        };
        Ok(match name.trim() {
            "complete" => Family::Complete(one(&nums)?),
            "empty" => Family::Empty(one(&nums)?),
            "path" => Family::Path(one(&nums)?),
            "cycle" => Family::Cycle(one(&nums)?),
            "star" => Family::Star(one(&nums)?),
            "wheel" => Family::Wheel(one(&nums)?),
            "spider" => Family::Spider(nums),
            "complete_union_isolates" => match nums[..] {
                [m, k] => Family::CompleteUnionIsolates(m, k),
                _ => return Err(param("complete_union_isolates takes m,k")),
            },
            other => return Err(param(&format!("unknown family `{other}`"))),
        })
    }
}
