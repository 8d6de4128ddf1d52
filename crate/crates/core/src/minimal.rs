//! Minimal zero forcing sets, `Z(G)` and `Z̄(G)`.
//!
//! Two independent routes are provided:
//!
//! * a subset scan ([`ZfsTable`]) that runs closure on all `2^n` subsets and
//!   reads minimality off single deletions, and
//! * a hypergraph route that enumerates the minimal transversals of the
//!   minimal-fort collection ([`minimal_transversals`]).
//!
//! A set is a minimal zero forcing set exactly when it is a minimal cover of
//! the forts, so the two must agree set for set. [`max_minimal_zfs`] runs both
//! and reports any disagreement as an error.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forcing::is_zero_forcing_set;
use crate::forts::{disjoint_fort_packing, enumerate_forts, is_minimal_cover, FortCollection};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::vertex_set::{combinations, VertexSet};

/// One bit per vertex subset: set iff that subset is zero forcing.
pub struct ZfsTable {
    n: usize,
    words: Vec<u64>,
}

impl ZfsTable {
    pub fn build(g: &Graph) -> Result<Self> {
        Limits::default().check_enumeration(g)?;
        let n = g.order();
        let total = 1u64 << n;
        let nwords = total.div_ceil(64) as usize;
        let words = (0..nwords)
            .into_par_iter()
            .map(|w| {
                let base = (w as u64) << 6;
                let mut word = 0u64;
                for off in 0..64u64.min(total - base) {
                    if is_zero_forcing_set(g, VertexSet::from_bits(base + off)) {
                        word |= 1 << off;
                    }
                }
                word
            })
            .collect();
        Ok(ZfsTable { n, words })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_zfs(&self, s: VertexSet) -> bool {
        let b = s.bits();
        self.words[(b >> 6) as usize] >> (b & 63) & 1 == 1
    }

    #[inline]
    pub fn is_minimal(&self, s: VertexSet) -> bool {
        self.is_zfs(s) && s.iter().all(|v| !self.is_zfs(s.without(v)))
    }

    /// Every subset in the table, handed out per 64-bit word so callers can
    /// parallelize.
    fn par_members<F>(&self, keep: F) -> Vec<VertexSet>
    where
        F: Fn(VertexSet) -> bool + Sync,
    {
        let mut out: Vec<VertexSet> = self
            .words
            .par_iter()
            .enumerate()
            .flat_map_iter(|(w, &word)| {
                let base = (w as u64) << 6;
                VertexSet::from_bits(word)
                    .iter()
                    .map(move |off| VertexSet::from_bits(base + off as u64))
                    .filter(|&s| keep(s))
                    .collect::<Vec<_>>()
            })
            .collect();
        out.par_sort_unstable_by(|a, b| a.size_lex_cmp(*b));
        out
    }

    /// All zero forcing sets, by size then lexicographically.
    pub fn zero_forcing_sets(&self) -> Vec<VertexSet> {
        self.par_members(|_| true)
    }

    /// All minimal zero forcing sets, by size then lexicographically.
    pub fn minimal_sets(&self) -> Vec<VertexSet> {
        self.par_members(|s| self.is_minimal(s))
    }

    pub fn count_minimal(&self) -> u64 {
        self.words
            .par_iter()
            .enumerate()
            .map(|(w, &word)| {
                let base = (w as u64) << 6;
                VertexSet::from_bits(word)
                    .iter()
                    .filter(|&off| self.is_minimal(VertexSet::from_bits(base + off as u64)))
                    .count() as u64
            })
            .sum()
    }

    /// Smallest zero forcing set size and the lexicographically least set of
    /// that size.
    pub fn minimum(&self) -> (usize, VertexSet) {
        self.best(|s| self.is_zfs(s), |a, b| a.size_lex_cmp(b).is_lt())
    }

    /// Largest minimal zero forcing set size and the lexicographically least
    /// minimal set of that size.
    pub fn max_minimal(&self) -> (usize, VertexSet) {
        self.best(
            |s| self.is_minimal(s),
            |a, b| a.len() > b.len() || (a.len() == b.len() && a.lex_cmp(b).is_lt()),
        )
    }

    fn best<P, B>(&self, pred: P, better: B) -> (usize, VertexSet)
    where
        P: Fn(VertexSet) -> bool + Sync,
        B: Fn(VertexSet, VertexSet) -> bool + Sync,
    {
        let pick = |a: Option<VertexSet>, b: Option<VertexSet>| match (a, b) {
            (Some(x), Some(y)) => Some(if better(y, x) { y } else { x }),
            (x, None) => x,
            (None, y) => y,
        };
        let found = self
            .words
            .par_iter()
            .enumerate()
            .map(|(w, &word)| {
                let base = (w as u64) << 6;
                VertexSet::from_bits(word)
                    .iter()
                    .map(|off| VertexSet::from_bits(base + off as u64))
                    .filter(|&s| pred(s))
                    .fold(None, |acc, s| pick(acc, Some(s)))
            })
            .reduce(|| None, pick)
            .expect("the full vertex set is always zero forcing");
        (found.len(), found)
    }

    /// True iff every zero forcing set contains a minimum one. Marks the
    /// minimum sets, closes the marking upward over the subset lattice, and
    /// compares against the zero forcing table.
    pub fn every_zfs_contains_minimum(&self) -> bool {
        let (z, _) = self.minimum();
        let mut mark: Vec<u64> = self
            .words
            .iter()
            .enumerate()
            .map(|(w, &word)| {
                let base = (w as u64) << 6;
                VertexSet::from_bits(word)
                    .iter()
                    .filter(|&off| VertexSet::from_bits(base + off as u64).len() == z)
                    .fold(0u64, |acc, off| acc | 1 << off)
            })
            .collect();
        upward_closure(&mut mark, self.n);
        self.words.iter().zip(&mark).all(|(&zfs, &m)| zfs & !m == 0)
    }
}

/// In-place superset closure of a subset-indexed bit table:
/// afterwards bit `S` is set iff some marked set is contained in `S`.
fn upward_closure(words: &mut [u64], n: usize) {
    const IN_WORD: [u64; 6] = [
        0xAAAA_AAAA_AAAA_AAAA,
        0xCCCC_CCCC_CCCC_CCCC,
        0xF0F0_F0F0_F0F0_F0F0,
        0xFF00_FF00_FF00_FF00,
        0xFFFF_0000_FFFF_0000,
        0xFFFF_FFFF_0000_0000,
    ];
    for (i, &mask) in IN_WORD.iter().enumerate().take(n) {
        for w in words.iter_mut() {
            *w |= (*w << (1 << i)) & mask;
        }
    }
    for i in 6..n {
        let stride = 1usize << (i - 6);
        for w in 0..words.len() {
            if w & stride != 0 {
                words[w] |= words[w ^ stride];
            }
        }
    }
}

pub fn is_minimal_zfs(g: &Graph, s: VertexSet) -> bool {
    is_zero_forcing_set(g, s) && s.iter().all(|v| !is_zero_forcing_set(g, s.without(v)))
}

/// Drops vertices of `b` in ascending id order whenever the rest still forces.
pub fn shrink_to_minimal(g: &Graph, b: VertexSet) -> Result<VertexSet> {
    g.check_set(b)?;
    if !is_zero_forcing_set(g, b) {
        return Err(Error::NotZeroForcing);
    }
    let mut s = b;
    for v in b {
        if is_zero_forcing_set(g, s.without(v)) {
            s.remove(v);
        }
    }
    Ok(s)
}

/// `Z(G)` with the lexicographically least minimum zero forcing set.
///
/// Sizes are tried upward from a lower bound: the larger of the minimum degree
/// and the number of pairwise disjoint minimal forts found greedily.
pub fn zero_forcing_number(g: &Graph) -> Result<(usize, VertexSet)> {
    Limits::default().check_enumeration(g)?;
    let n = g.order();
    let forts = enumerate_forts(g, true)?;
    let lower = disjoint_fort_packing(&forts)
        .len()
        .max(g.min_degree())
        .max(1);
    for k in lower..=n {
        if let Some(s) = combinations(n, k).find(|&s| is_zero_forcing_set(g, s)) {
            return Ok((k, s));
        }
    }
    unreachable!("the full vertex set is zero forcing")
}

/// `Z̄(G)` with the lexicographically least minimal set of that size, computed
/// by the subset scan and by fort transversals. Errors if the routes differ.
pub fn max_minimal_zfs(g: &Graph) -> Result<(usize, VertexSet)> {
    let by_scan = ZfsTable::build(g)?.max_minimal();
    let by_forts = max_minimal_zfs_via_forts(g)?;
    if by_scan != by_forts {
        return Err(Error::RouteDisagreement(format!(
            "subset scan gives {} {}, fort transversals give {} {}",
            by_scan.0, by_scan.1, by_forts.0, by_forts.1
        )));
    }
    Ok(by_scan)
}

/// `Z̄(G)` from the subset scan alone.
pub fn max_minimal_zfs_by_scan(g: &Graph) -> Result<(usize, VertexSet)> {
    Ok(ZfsTable::build(g)?.max_minimal())
}

/// `Z̄(G)` from the minimal transversals of the minimal forts.
pub fn max_minimal_zfs_via_forts(g: &Graph) -> Result<(usize, VertexSet)> {
    let sets = enumerate_minimal_zfs_via_forts(g)?;
    let best = sets
        .iter()
        .copied()
        .reduce(|a, b| if b.len() > a.len() { b } else { a })
        .expect("a graph always has a minimal zero forcing set");
    Ok((best.len(), best))
}

/// All minimal zero forcing sets, by size then lexicographically.
pub fn enumerate_minimal_zfs(g: &Graph) -> Result<Vec<VertexSet>> {
    Ok(ZfsTable::build(g)?.minimal_sets())
}

pub fn enumerate_minimal_zfs_via_forts(g: &Graph) -> Result<Vec<VertexSet>> {
    let forts = enumerate_forts(g, true)?;
    Ok(minimal_transversals(&forts))
}

/// Minimal transversals of a fort collection, by size then lexicographically.
///
/// Branches on the first uncovered fort. In the branch that adds `v`, the
/// vertices of that fort below `v` are excluded for the rest of the subtree,
/// so each transversal is produced at most once. A partial set in which some
/// member has lost every private fort can never become minimal and is cut.
pub fn minimal_transversals(forts: &FortCollection) -> Vec<VertexSet> {
    let mut out = Vec::new();
    branch(forts, VertexSet::EMPTY, VertexSet::EMPTY, &mut out);
    out.retain(|&t| is_minimal_cover(t, forts));
    out.sort_unstable_by(|a, b| a.size_lex_cmp(*b));
    out
}

fn branch(
    forts: &FortCollection,
    chosen: VertexSet,
    excluded: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    let Some(uncovered) = forts.iter().find(|f| !f.intersects(chosen)) else {
        out.push(chosen);
        return;
    };
    let mut excluded = excluded;
    for v in uncovered - excluded {
        let next = chosen.with(v);
        if every_member_has_private_fort(forts, next) {
            branch(forts, next, excluded, out);
        }
        excluded.insert(v);
    }
}

fn every_member_has_private_fort(forts: &FortCollection, s: VertexSet) -> bool {
    let mut private = VertexSet::EMPTY;
    for f in forts.iter() {
        let hit = f & s;
        if hit.len() == 1 {
            private |= hit;
            if private == s {
                return true;
            }
        }
    }
    private == s
}

/// Number of minimal zero forcing sets, as the product of the per-component
/// counts.
pub fn count_minimal_zfs(g: &Graph) -> Result<u128> {
    Limits::default().check_enumeration(g)?;
    let mut total: u128 = 1;
    for block in g.components().blocks {
        if block.len() == 1 {
            continue;
        }
        let (sub, _) = g.induced_subgraph(block)?;
        total *= ZfsTable::build(&sub)?.count_minimal() as u128;
    }
    Ok(total)
}

pub fn every_zfs_contains_minimum(g: &Graph) -> Result<bool> {
    Ok(ZfsTable::build(g)?.every_zfs_contains_minimum())
}

/// Whether `v` lies in every minimal zero forcing set.
pub fn in_every_minimal_zfs(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    let table = ZfsTable::build(g)?;
    let common = table
        .minimal_sets()
        .into_iter()
        .fold(g.vertices(), |acc, s| acc & s);
    Ok(common.contains(v))
}

/// `G ≅ K_m ∪ kK_1` for some `m ≥ max(min_clique, 1)` and `k ≥ min_isolates`.
/// An edgeless graph reads as `K_1 ∪ (n-1)K_1`.
pub fn is_clique_plus_isolates(g: &Graph, min_clique: usize, min_isolates: usize) -> bool {
    let isolates = g.isolates();
    let rest = isolates.complement(g.order());
    if rest.is_empty() {
        return min_clique <= 1 && g.order() > min_isolates;
    }
    rest.iter().all(|v| g.neighbors(v) == rest.without(v))
        && rest.len() >= min_clique
        && isolates.len() >= min_isolates
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZfsSummary {
    pub order: usize,
    pub z: usize,
    pub zbar: usize,
    pub minimal_count: u64,
    pub witness_min: VertexSet,
    pub witness_max_minimal: VertexSet,
}

/// `Z`, `Z̄`, the minimal-set count and both witnesses from one subset scan.
pub fn summarize(g: &Graph) -> Result<ZfsSummary> {
    let table = ZfsTable::build(g)?;
    let (z, witness_min) = table.minimum();
    let (zbar, witness_max_minimal) = table.max_minimal();
    Ok(ZfsSummary {
        order: g.order(),
        z,
        zbar,
        minimal_count: table.count_minimal(),
        witness_min,
        witness_max_minimal,
    })
}
