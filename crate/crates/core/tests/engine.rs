mod common;

use common::*;
use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zforce_core::forcing::{closure_with, replay_forces};
use zforce_core::{closure, is_zero_forcing_set, reversal, Graph, VertexSet};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn arb_graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), 0..1u64 << n).prop_map(|(g, bits)| (g, VertexSet::from_bits(bits)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 400,
        rng_seed: RngSeed::Fixed(seed()),
        ..ProptestConfig::default()
    })]

    #[test]
    fn closure_matches_naive_rule((g, s) in arb_graph_and_set(8)) {
        let r = closure(&g, s);
        prop_assert_eq!(r.closure.bits(), naive_closure(&adjacency(&g), s.bits()));
    }

    #[test]
    fn closure_ignores_schedule((g, s) in arb_graph_and_set(8), seed in any::<u64>()) {
        let expected = closure(&g, s).closure;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..20 {
            let r = closure_with(&g, s, |avail| rng.gen_range(0..avail.len()));
            prop_assert_eq!(r.closure, expected);
            prop_assert_eq!(r.closure.len(), s.len() + r.forces.len());
            prop_assert_eq!(replay_forces(&g, s, &r.forces), Some(r.closure));
        }
    }

    #[test]
    fn fixed_point_and_force_count((g, s) in arb_graph_and_set(8)) {
        let r = closure(&g, s);
        prop_assert_eq!(closure(&g, r.closure).closure, r.closure);
        prop_assert!(closure(&g, r.closure).forces.is_empty());
        prop_assert_eq!(r.closure.len(), s.len() + r.forces.len());
        prop_assert!(s.is_subset(r.closure));
        for f in &r.forces {
            prop_assert_ne!(f.source, f.target);
            prop_assert!(g.has_edge(f.source, f.target));
        }
        prop_assert_eq!(replay_forces(&g, s, &r.forces), Some(r.closure));
    }

    #[test]
    fn reversal_of_random_zfs((g, s) in arb_graph_and_set(8)) {
        let t = s | VertexSet::full(g.order()).difference(closure(&g, s).closure);
        // t is always forcing: it adds everything the closure missed
        prop_assert!(is_zero_forcing_set(&g, t));
        let rev = reversal(&g, t);
        prop_assert!(is_zero_forcing_set(&g, rev));
        prop_assert_eq!(rev.len(), t.len());
    }
}

#[test]
fn monotonicity_on_random_graphs() {
    let mut rng = rng(1);
    for _ in 0..40 {
        let n = rng.gen_range(1..=6);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let cl: Vec<VertexSet> = (0..1u64 << n)
            .map(|b| closure(&g, VertexSet::from_bits(b)).closure)
            .collect();
        for a in 0..1u64 << n {
            for b in 0..1u64 << n {
                if a & b == a {
                    assert!(
                        cl[a as usize].is_subset(cl[b as usize]),
                        "{g:?} {a:b} {b:b}"
                    );
                }
            }
        }
    }
}

fn check_reversals(g: &Graph) {
    for bits in 0..1u64 << g.order() {
        let s = VertexSet::from_bits(bits);
        if is_zero_forcing_set(g, s) {
            let rev = reversal(g, s);
            assert!(
                is_zero_forcing_set(g, rev),
                "{g:?}: reversal of {s} is {rev}"
            );
            assert_eq!(rev.len(), s.len());
        }
    }
}

#[test]
fn reversal_law_all_graphs_up_to_six() {
    for n in 1..=6 {
        all_labeled(n).for_each(|g| check_reversals(&g));
    }
}

#[test]
fn reversal_law_all_graphs_of_order_seven() {
    use rayon::prelude::*;
    let n = 7;
    (0..1u64 << 21)
        .into_par_iter()
        .for_each(|code| check_reversals(&zforce_core::enumerate::decode(n, code)));
}

#[test]
fn empty_start_is_legal() {
    let g = zforce_core::graph::path(3).unwrap();
    let r = closure(&g, VertexSet::EMPTY);
    assert!(r.closure.is_empty() && r.forces.is_empty());
}
