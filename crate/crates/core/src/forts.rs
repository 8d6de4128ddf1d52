//! Forts: nonempty sets `F` such that no vertex outside `F` has exactly one
//! neighbor in `F`. Every zero forcing set meets every fort, and the
//! complement of a stalled closure is always a fort.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forcing::closure_set;
use crate::graph::Graph;
use crate::limits::Limits;
use crate::vertex_set::VertexSet;

pub fn is_fort(g: &Graph, f: VertexSet) -> bool {
    if f.is_empty() {
        return false;
    }
    f.complement(g.order())
        .iter()
        .all(|v| (g.neighbors(v) & f).len() != 1)
}

/// Forts of one graph, ordered by size then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FortCollection {
    pub order: usize,
    pub minimal_only: bool,
    pub forts: Vec<VertexSet>,
}

impl FortCollection {
    pub fn len(&self) -> usize {
        self.forts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.forts.iter().copied()
    }
}

const SCAN_CHUNK: u64 = 1 << 12;

/// Enumerates all forts, or only the inclusion-minimal ones, by scanning every
/// nonempty subset.
pub fn enumerate_forts(g: &Graph, minimal_only: bool) -> Result<FortCollection> {
    enumerate_forts_with(g, minimal_only, &Limits::default())
}

pub fn enumerate_forts_with(
    g: &Graph,
    minimal_only: bool,
    limits: &Limits,
) -> Result<FortCollection> {
    limits.check_enumeration(g)?;
    let n = g.order();
    let total = 1u64 << n;
    let chunks = total.div_ceil(SCAN_CHUNK);
    let mut forts: Vec<VertexSet> = (0..chunks)
        .into_par_iter()
        .flat_map_iter(|c| {
            let lo = (c * SCAN_CHUNK).max(1);
            let hi = ((c + 1) * SCAN_CHUNK).min(total);
            (lo..hi)
                .map(VertexSet::from_bits)
                .filter(|&f| is_fort(g, f))
                .collect::<Vec<_>>()
        })
        .collect();
    forts.par_sort_unstable_by(|a, b| a.size_lex_cmp(*b));
    if minimal_only {
        forts = minimal_elements(forts);
    }
    Ok(FortCollection {
        order: n,
        minimal_only,
        forts,
    })
}

/// Keeps the inclusion-minimal members of a size-sorted list.
fn minimal_elements(sorted: Vec<VertexSet>) -> Vec<VertexSet> {
    let mut kept: Vec<VertexSet> = Vec::new();
    for f in sorted {
        if !kept.iter().any(|k| k.is_subset(f)) {
            kept.push(f);
        }
    }
    kept
}

/// `V \ cl(S)`, which is a fort disjoint from `S` whenever `S` is not zero
/// forcing.
pub fn fort_from_failed_closure(g: &Graph, s: VertexSet) -> Result<VertexSet> {
    g.check_set(s)?;
    let rest = closure_set(g, s).complement(g.order());
    if rest.is_empty() {
        Err(Error::IsZeroForcing)
    } else {
        Ok(rest)
    }
}

pub fn is_cover(s: VertexSet, forts: &FortCollection) -> bool {
    forts.iter().all(|f| f.intersects(s))
}

/// Cover with no removable vertex. Checking single deletions is enough since
/// covering is preserved under supersets.
pub fn is_minimal_cover(s: VertexSet, forts: &FortCollection) -> bool {
    is_cover(s, forts) && s.iter().all(|v| !is_cover(s.without(v), forts))
}

/// Greedy packing of pairwise disjoint forts taken in collection order. Every
/// zero forcing set meets each of them, so the count is a lower bound on Z.
pub fn disjoint_fort_packing(forts: &FortCollection) -> Vec<VertexSet> {
    let mut used = VertexSet::EMPTY;
    let mut packed = Vec::new();
    for f in forts.iter() {
        if !f.intersects(used) {
            used |= f;
            packed.push(f);
        }
    }
    packed
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path, Family};

    fn sets(v: &[&[usize]]) -> Vec<VertexSet> {
        v.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn is_fort_examples() {
        let k3 = complete(3).unwrap();
        assert!(is_fort(&k3, VertexSet::from([0, 1])));
        let p3 = path(3).unwrap();
        assert!(is_fort(&p3, VertexSet::from([0, 2])));
        assert!(!is_fort(&p3, VertexSet::from([2])));
        assert!(!is_fort(&p3, VertexSet::EMPTY));
        // K_4 ∨ K̄_3: clique side 0..4, independent side 4..7
        let g = complete(4)
            .unwrap()
            .join(&Family::Empty(3).build().unwrap())
            .unwrap();
        for a in 0..4 {
            for b in a + 1..4 {
                assert!(is_fort(&g, VertexSet::from([a, b])));
            }
        }
        for a in 4..7 {
            for b in a + 1..7 {
                assert!(is_fort(&g, VertexSet::from([a, b])));
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let p3 = path(3).unwrap();
        assert_eq!(
            enumerate_forts(&p3, false).unwrap().forts,
            sets(&[&[0, 2], &[0, 1, 2]])
        );
        assert_eq!(enumerate_forts(&p3, true).unwrap().forts, sets(&[&[0, 2]]));
        let k3 = complete(3).unwrap();
        assert_eq!(
            enumerate_forts(&k3, true).unwrap().forts,
            sets(&[&[0, 1], &[0, 2], &[1, 2]])
        );
        assert!(enumerate_forts(&k3, false)
            .unwrap()
            .forts
            .contains(&k3.vertices()));
        let e2 = Family::Empty(2).build().unwrap();
        assert_eq!(
            enumerate_forts(&e2, true).unwrap().forts,
            sets(&[&[0], &[1]])
        );
    }

    #[test]
    fn enumerate_respects_cap() {
        let g = Family::Empty(25).build().unwrap();
        assert_eq!(
            enumerate_forts(&g, true),
            Err(Error::EnumerationCap { n: 25, cap: 24 })
        );
        let small = Limits {
            enumeration_cap: 4,
            ..Limits::default()
        };
        assert!(enumerate_forts_with(&path(5).unwrap(), true, &small).is_err());
    }

    #[test]
    fn fort_from_failed_closure_examples() {
        let c4 = Family::Cycle(4).build().unwrap();
        let f = fort_from_failed_closure(&c4, VertexSet::from([0])).unwrap();
        assert_eq!(f, VertexSet::from([1, 2, 3]));
        assert!(is_fort(&c4, f));
        let c5 = Family::Cycle(5).build().unwrap();
        let f = fort_from_failed_closure(&c5, VertexSet::from([0, 2])).unwrap();
        assert_eq!(f, VertexSet::from([1, 3, 4]));
        assert!(is_fort(&c5, f));
        let p3 = path(3).unwrap();
        assert_eq!(
            fort_from_failed_closure(&p3, VertexSet::EMPTY),
            Ok(p3.vertices())
        );
        assert_eq!(
            fort_from_failed_closure(&p3, VertexSet::from([0])),
            Err(Error::IsZeroForcing)
        );
    }

    #[test]
    fn cover_examples() {
        let p3 = path(3).unwrap();
        let min = enumerate_forts(&p3, true).unwrap();
        assert!(is_cover(VertexSet::from([0]), &min));
        assert!(!is_cover(VertexSet::from([1]), &min));
        assert!(is_cover(
            p3.vertices(),
            &enumerate_forts(&p3, false).unwrap()
        ));
        assert!(is_minimal_cover(VertexSet::from([0]), &min));
        assert!(!is_minimal_cover(VertexSet::from([0, 2]), &min));
        let k3 = complete(3).unwrap();
        assert!(is_minimal_cover(
            VertexSet::from([0, 1]),
            &enumerate_forts(&k3, true).unwrap()
        ));
    }

    #[test]
    fn packing_gives_disjoint_forts() {
        let g = Family::Empty(3)
            .build()
            .unwrap()
            .join(&complete(3).unwrap())
            .unwrap();
        let packed = disjoint_fort_packing(&enumerate_forts(&g, true).unwrap());
        assert_eq!(packed.len(), 2);
        assert!(!packed[0].intersects(packed[1]));
    }
}
