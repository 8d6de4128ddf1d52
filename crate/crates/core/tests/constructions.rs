mod common;

use std::collections::BTreeSet;

use common::*;
use rand::Rng;
use zforce_core::constructions::*;
use zforce_core::{
    enumerate_minimal_zfs, is_minimal_zfs, is_zero_forcing_set, summarize, zero_forcing_number,
    Graph, VertexSet,
};

fn one_based(s: VertexSet) -> Vec<usize> {
    s.iter().map(|v| v + 1).collect()
}

#[test]
fn counterexample_validates_for_seven_to_twelve() {
    for n in 7..=12 {
        let g = counterexample_graph(n).unwrap();
        let adj = adjacency(&g);
        assert_eq!(naive_z(&adj), 3);
        if n <= 10 {
            assert_eq!(naive_zbar(&adj), 3);
            let h = adjacency(&g.add_universal_vertex().unwrap());
            assert_eq!(naive_z(&h), 4);
            assert!(naive_zbar(&h) >= 5);
        }
    }
}

#[test]
fn counterexample_degree_four_vertices() {
    for n in 8..=12 {
        let g = counterexample_graph_unchecked(n).unwrap();
        let deg4: Vec<usize> = (0..n)
            .filter(|&v| g.degree(v) == 4)
            .map(|v| v + 1)
            .collect();
        assert_eq!(deg4, vec![1, 3, 5], "n = {n}");
    }
}

#[test]
fn counterexample_reflection_is_an_automorphism() {
    // 1<->5, 2<->4, 3 fixed, and the path 6..n reversed
    for n in 7..=12 {
        let g = counterexample_graph_unchecked(n).unwrap();
        let image = |p: usize| match p {
            1 => 5,
            2 => 4,
            3 => 3,
            4 => 2,
            5 => 1,
            _ => n + 6 - p,
        };
        for u in 1..=n {
            for v in 1..=n {
                if u != v {
                    assert_eq!(
                        g.has_edge(u - 1, v - 1),
                        g.has_edge(image(u) - 1, image(v) - 1)
                    );
                }
            }
        }
    }
}

#[test]
fn join_witness_is_minimal_without_universal_vertex() {
    for n in 7..=10 {
        let g = counterexample_graph_unchecked(n).unwrap();
        let h = g.add_universal_vertex().unwrap();
        let w = counterexample_join_witness();
        assert_eq!(one_based(w), vec![1, 3, 4, 5, 6]);
        assert!(is_minimal_zfs(&h, w));
        // adding the universal vertex makes it forcing but no longer minimal
        assert!(is_zero_forcing_set(&h, w.with(n)));
        assert!(!is_minimal_zfs(&h, w.with(n)));
        assert!(is_zero_forcing_set(&g, counterexample_min_set()));
    }
}

#[test]
fn gap_family_matches_oracle() {
    for n in 7..=10 {
        let g = gap_family(n).unwrap();
        let adj = adjacency(&g);
        assert_eq!(naive_z(&adj), 5);
        assert_eq!(naive_zbar(&adj), n - 2);
        assert!(is_minimal_zfs(&g, gap_family_large_witness(n)));
        assert_eq!(gap_family_large_witness(n).len(), n - 2);
        assert!(is_zero_forcing_set(&g, gap_family_min_witness()));
    }
    let s = summarize(&gap_family(12).unwrap()).unwrap();
    assert_eq!((s.z, s.zbar), (5, 10));
}

#[test]
fn spider_witness_sets_are_distinct_and_minimal() {
    let k = 3;
    let g = five_leg_spider(k).unwrap();
    assert_eq!(g.order(), 16);
    let mut all = BTreeSet::new();
    for j in 1..=k {
        let mut per_j = BTreeSet::new();
        for mask in 0..1u32 << k {
            let legs: Vec<usize> = (1..=k).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let s = spider_witness_set(k, j, &legs).unwrap();
            assert_eq!(s.len(), 2 * (k - 1));
            assert!(is_minimal_zfs(&g, s));
            per_j.insert(s.bits());
        }
        assert_eq!(per_j.len(), 1 << (k - 1));
        all.extend(per_j);
    }
    assert_eq!(all.len(), k << (k - 1));
}

#[test]
fn twin_spider_minimal_sets_follow_description() {
    for k in [3, 4] {
        let t = twin_spider(k).unwrap();
        let sets = enumerate_minimal_zfs(&t).unwrap();
        // leaves: one per short leg plus the end of the long leg
        let short_leaves: Vec<usize> = (1..k).collect();
        let long: Vec<usize> = (k..k + 4 * k + 1).collect();
        let leaves: VertexSet = short_leaves
            .iter()
            .copied()
            .chain([*long.last().unwrap()])
            .collect();
        let mut expected = BTreeSet::new();
        for drop in leaves {
            expected.insert(leaves.without(drop).bits());
        }
        let short: VertexSet = short_leaves.iter().copied().collect();
        for drop in short {
            // next to the center one vertex is enough: the center then has a
            // single white neighbor left
            expected.insert(short.without(drop).with(long[0]).bits());
            for w in long[1..long.len() - 1].windows(2) {
                expected.insert(short.without(drop).with(w[0]).with(w[1]).bits());
            }
        }
        let got: BTreeSet<u64> = sets.iter().map(|s| s.bits()).collect();
        assert_eq!(got, expected, "k = {k}");
        assert_eq!(got.len(), k + (k - 1) * (4 * k - 1));
    }
}

#[test]
fn prism_witnesses_are_minimum() {
    for m in 2..=3 {
        let g = prism(m).unwrap();
        let (z, _) = zero_forcing_number(&g).unwrap();
        assert_eq!(z, 2 * g.order() / 5);
        if m == 2 {
            assert_eq!(naive_z(&adjacency(&g)), 4);
        }
        let mut seen = BTreeSet::new();
        for mask in 0..1u32 << m {
            let idx: Vec<usize> = (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let s = prism_witness_set(m, &idx).unwrap();
            assert_eq!(s.len(), z);
            assert!(is_zero_forcing_set(&g, s));
            seen.insert(s.bits());
        }
        assert_eq!(seen.len(), 1 << m);
    }
}

#[test]
fn components_partition_and_are_connected() {
    let mut rng = rng(20);
    for _ in 0..200 {
        let n = rng.gen_range(1..=14);
        let g = random_graph(&mut rng, n, 0.15);
        let blocks = g.components().blocks;
        let mut seen = VertexSet::EMPTY;
        for &b in &blocks {
            assert!(!b.is_empty() && !b.intersects(seen));
            seen |= b;
            // traversal from the smallest vertex reaches exactly the block
            let mut reach = VertexSet::singleton(b.min().unwrap());
            let mut frontier = reach;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next |= g.neighbors(v);
                }
                frontier = next - reach;
                reach |= next;
            }
            assert_eq!(reach, b);
        }
        assert_eq!(seen, g.vertices());
        let degree_sum: usize = (0..n).map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum, 2 * g.edge_count());
    }
}

#[test]
fn constructions_reject_bad_parameters() {
    assert!(counterexample_graph(6).is_err());
    assert!(gap_family(5).is_err());
    assert!(twin_spider(2).is_err());
    assert!(prism(0).is_err());
    assert!(prism_witness_set(2, &[0]).is_err());
    let _: Graph = prism(1).unwrap();
}
