mod common;

use common::*;
use rand::Rng;
use zforce_core::forts::{fort_from_failed_closure, is_cover, is_minimal_cover};
use zforce_core::graph::{complete, path};
use zforce_core::minimal::{
    enumerate_minimal_zfs_via_forts, max_minimal_zfs_by_scan, max_minimal_zfs_via_forts,
    minimal_transversals,
};
use zforce_core::{
    count_minimal_zfs, enumerate_forts, enumerate_minimal_zfs, every_zfs_contains_minimum,
    in_every_minimal_zfs, is_fort, is_minimal_zfs, is_zero_forcing_set, max_minimal_zfs,
    shrink_to_minimal, summarize, zero_forcing_number, Family, Graph, VertexSet,
};

fn small_graphs(max_n: usize) -> impl Iterator<Item = Graph> {
    (1..=max_n).flat_map(all_labeled)
}

fn random_graphs(salt: u64, count: usize, lo: usize, hi: usize) -> Vec<Graph> {
    let mut rng = rng(salt);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(lo..=hi);
            let p = rng.gen_range(0.15..0.85);
            random_graph(&mut rng, n, p)
        })
        .collect()
}

fn bits(sets: &[VertexSet]) -> Vec<u64> {
    let mut v: Vec<u64> = sets.iter().map(|s| s.bits()).collect();
    v.sort_unstable();
    v
}

#[test]
fn forts_match_the_definition() {
    for g in small_graphs(5) {
        let adj = adjacency(&g);
        let all = enumerate_forts(&g, false).unwrap();
        let expected: Vec<u64> = (1..1u64 << g.order())
            .filter(|&f| naive_is_fort(&adj, f))
            .collect();
        assert_eq!(bits(&all.iter().collect::<Vec<_>>()), expected);
        for f in 1..1u64 << g.order() {
            assert_eq!(is_fort(&g, VertexSet::from_bits(f)), naive_is_fort(&adj, f));
        }
        let minimal = enumerate_forts(&g, true).unwrap();
        let expected_min: Vec<u64> = expected
            .iter()
            .copied()
            .filter(|&f| !expected.iter().any(|&h| h != f && h & f == h))
            .collect();
        assert_eq!(bits(&minimal.iter().collect::<Vec<_>>()), expected_min);
    }
}

#[test]
fn zfs_iff_hits_every_fort() {
    for g in small_graphs(6) {
        let all = enumerate_forts(&g, false).unwrap();
        let minimal = enumerate_forts(&g, true).unwrap();
        for b in 0..1u64 << g.order() {
            let s = VertexSet::from_bits(b);
            let z = is_zero_forcing_set(&g, s);
            assert_eq!(z, is_cover(s, &all), "{g:?} {s}");
            assert_eq!(is_cover(s, &all), is_cover(s, &minimal));
        }
        // every fort contains a minimal one
        for f in all.iter() {
            assert!(minimal.iter().any(|m| m.is_subset(f)));
        }
    }
}

#[test]
fn failed_closure_complement_is_a_fort() {
    let graphs: Vec<Graph> = small_graphs(5).chain(random_graphs(2, 200, 6, 7)).collect();
    for g in graphs {
        for b in 0..1u64 << g.order() {
            let s = VertexSet::from_bits(b);
            match fort_from_failed_closure(&g, s) {
                Ok(f) => {
                    assert!(is_fort(&g, f));
                    assert!(!f.intersects(s));
                }
                Err(_) => assert!(is_zero_forcing_set(&g, s)),
            }
        }
    }
}

#[test]
fn minimal_sets_match_oracle() {
    let graphs: Vec<Graph> = small_graphs(5).chain(random_graphs(3, 60, 6, 8)).collect();
    for g in graphs {
        let adj = adjacency(&g);
        let expected = naive_minimal_sets(&adj);
        assert_eq!(bits(&enumerate_minimal_zfs(&g).unwrap()), expected, "{g:?}");
        for b in 0..1u64 << g.order() {
            assert_eq!(
                is_minimal_zfs(&g, VertexSet::from_bits(b)),
                expected.binary_search(&b).is_ok()
            );
        }
        let (z, zw) = zero_forcing_number(&g).unwrap();
        assert_eq!(z, naive_z(&adj));
        assert_eq!(zw.len(), z);
        assert!(is_zero_forcing_set(&g, zw));
        let (zbar, w) = max_minimal_zfs(&g).unwrap();
        assert_eq!(zbar, naive_zbar(&adj));
        assert!(is_minimal_zfs(&g, w) && w.len() == zbar);
    }
}

#[test]
fn minimal_cover_equivalence_on_all_small_graphs() {
    for g in small_graphs(6) {
        let forts = enumerate_forts(&g, true).unwrap();
        let all = enumerate_forts(&g, false).unwrap();
        for b in 0..1u64 << g.order() {
            let s = VertexSet::from_bits(b);
            assert_eq!(
                is_minimal_zfs(&g, s),
                is_minimal_cover(s, &forts),
                "{g:?} {s}"
            );
            assert_eq!(is_minimal_cover(s, &forts), is_minimal_cover(s, &all));
        }
    }
}

#[test]
fn two_routes_agree_exhaustively_up_to_six() {
    for g in small_graphs(6) {
        let scan = enumerate_minimal_zfs(&g).unwrap();
        let forts = enumerate_minimal_zfs_via_forts(&g).unwrap();
        assert_eq!(scan, forts, "{g:?}");
        assert_eq!(
            max_minimal_zfs_by_scan(&g).unwrap(),
            max_minimal_zfs_via_forts(&g).unwrap()
        );
    }
}

#[test]
fn two_routes_agree_on_random_larger_graphs() {
    for g in random_graphs(4, 200, 7, 10) {
        let scan = enumerate_minimal_zfs(&g).unwrap();
        let forts = enumerate_minimal_zfs_via_forts(&g).unwrap();
        assert_eq!(scan.len(), forts.len(), "{g:?}");
        assert_eq!(scan, forts, "{g:?}");
        assert_eq!(
            max_minimal_zfs_by_scan(&g).unwrap(),
            max_minimal_zfs_via_forts(&g).unwrap()
        );
    }
}

#[test]
fn transversals_of_path_forts() {
    let g = path(4).unwrap();
    let forts = enumerate_forts(&g, true).unwrap();
    let t = minimal_transversals(&forts);
    assert_eq!(bits(&t), naive_minimal_sets(&adjacency(&g)));
    assert_eq!(t.len(), 3);
}

#[test]
fn every_zfs_contains_minimum_matches_definition() {
    for g in small_graphs(5) {
        let adj = adjacency(&g);
        let n = g.order();
        let z = naive_z(&adj);
        let zfs: Vec<u64> = (0..1u64 << n).filter(|&s| naive_is_zfs(&adj, s)).collect();
        let expected = zfs.iter().all(|&s| {
            zfs.iter()
                .any(|&m| m.count_ones() as usize == z && m & s == m)
        });
        assert_eq!(every_zfs_contains_minimum(&g).unwrap(), expected, "{g:?}");
    }
}

#[test]
fn in_every_minimal_matches_definition() {
    for g in small_graphs(5) {
        let sets = naive_minimal_sets(&adjacency(&g));
        let common = sets.iter().fold(u64::MAX, |acc, s| acc & s);
        for v in 0..g.order() {
            assert_eq!(in_every_minimal_zfs(&g, v).unwrap(), common >> v & 1 == 1);
        }
    }
}

#[test]
fn shrink_yields_minimal_subset() {
    for g in random_graphs(5, 100, 1, 9) {
        let all = VertexSet::full(g.order());
        let m = shrink_to_minimal(&g, all).unwrap();
        assert!(is_minimal_zfs(&g, m));
        assert_eq!(shrink_to_minimal(&g, m).unwrap(), m);
    }
}

#[test]
fn component_product_on_random_unions() {
    let parts = random_graphs(6, 40, 1, 5);
    for pair in parts.chunks(2) {
        let u = pair[0].disjoint_union(&pair[1]).unwrap();
        let full = naive_minimal_sets(&adjacency(&u)).len() as u128;
        let a = naive_minimal_sets(&adjacency(&pair[0])).len() as u128;
        let b = naive_minimal_sets(&adjacency(&pair[1])).len() as u128;
        assert_eq!(full, a * b);
        assert_eq!(count_minimal_zfs(&u).unwrap(), full);
    }
    let c3 = Family::Cycle(3).build().unwrap();
    assert_eq!(
        count_minimal_zfs(&c3.disjoint_union(&c3).unwrap()).unwrap(),
        9
    );
}

#[test]
fn universal_vertex_arithmetic() {
    for g in small_graphs(6) {
        let z = naive_z(&adjacency(&g));
        let h = g.add_universal_vertex().unwrap();
        let zh = zero_forcing_number(&h).unwrap().0;
        let expected = match g.isolates().len() {
            0 => z + 1,
            1 => z,
            _ => z - 1,
        };
        assert_eq!(zh, expected, "{g:?}");
        let (back, _) = h.delete_vertex(g.order()).unwrap();
        assert_eq!(back, g);
    }
}

#[test]
fn extremal_characterization_corrected_form() {
    for g in small_graphs(6) {
        let n = g.order();
        let zbar = summarize(&g).unwrap().zbar;
        let shape = naive_clique_plus_isolates(&adjacency(&g), 2, 0);
        assert_eq!(zbar + 1 == n, shape, "{g:?}");
    }
}

#[test]
fn summary_examples() {
    let k5 = complete(5).unwrap();
    let s = summarize(&k5).unwrap();
    assert_eq!((s.z, s.zbar, s.minimal_count), (4, 4, 5));
    let gap9 = zforce_core::constructions::gap_family(9).unwrap();
    assert_eq!(summarize(&gap9).unwrap().zbar, 7);
}
