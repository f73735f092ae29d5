use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tdp_core::coloring::{two_coupon_color, verify_coupon};
use tdp_core::formats::{parse_edge_list, parse_graph6, serialize_edge_list, serialize_graph6};
use tdp_core::generators::{gen_named, gen_random_cubic, truncate, NamedGraph};
use tdp_core::motif::{c4_through, find_l_witness, on_short_cycle, triangle_through};
use tdp_core::oracle::{canonical_cover, enumerate_f_partitions, search_l_embedding};
use tdp_core::partition::{f_partition, f_partition_traced, validate_partition, PartitionError};
use tdp_core::Graph;

fn relabel(g: &Graph, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(&mut rng);
    Graph::from_edges(g.order(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

fn assert_simple_symmetric(g: &Graph) {
    for v in g.vertices() {
        let nb = g.neighbors(v);
        assert!(nb.windows(2).all(|w| w[0] < w[1]));
        assert!(!nb.contains(&v));
        assert!(nb.iter().all(|&w| g.neighbors(w).contains(&v)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn graph6_round_trip(half in 2usize..40, seed in any::<u64>()) {
        let g = gen_random_cubic(2 * half, seed).unwrap();
        assert_simple_symmetric(&g);
        let s = serialize_graph6(&g);
        prop_assert_eq!(serialize_graph6(&parse_graph6(&s).unwrap()), s);
        prop_assert_eq!(parse_edge_list(&serialize_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn truncation_shape(half in 2usize..30, seed in any::<u64>()) {
        let g = gen_random_cubic(2 * half, seed).unwrap();
        let t = truncate(&g).unwrap();
        prop_assert!(t.is_cubic());
        prop_assert_eq!(t.order(), 3 * g.order());
        prop_assert_eq!(t.size(), g.size() + 3 * g.order());
        prop_assert!(t.vertices().all(|v| triangle_through(&t, v).is_some()));
        prop_assert!(find_l_witness(&t).is_none());
    }

    #[test]
    fn pipeline_on_truncations(half in 2usize..33, seed in any::<u64>(), perm_seed in any::<u64>()) {
        let g = relabel(&truncate(&gen_random_cubic(2 * half, seed).unwrap()).unwrap(), perm_seed);
        let (p, trace) = f_partition_traced(&g).unwrap();
        prop_assert!(validate_partition(&g, p.pieces()).is_ok());
        prop_assert!(trace.len() <= g.order());
        let c = two_coupon_color(&g, &p).unwrap();
        prop_assert_eq!(verify_coupon(&g, &c), Ok(true));
        prop_assert_eq!(verify_coupon(&g, &c.flipped()), Ok(true));
        prop_assert_eq!(two_coupon_color(&g, &f_partition(&g).unwrap()).unwrap(), c);
    }

    #[test]
    fn l_free_means_short_cycles_everywhere(half in 2usize..10, seed in any::<u64>()) {
        let g = gen_random_cubic(2 * half, seed).unwrap();
        match find_l_witness(&g) {
            None => prop_assert!(g.vertices().all(|v| on_short_cycle(&g, v))),
            Some(w) => {
                prop_assert!(w.verify(&g));
                prop_assert!(triangle_through(&g, w.center).is_none());
                prop_assert!(c4_through(&g, w.center).is_none());
            }
        }
    }
}

#[test]
fn edge_list_round_trip_on_heawood() {
    let h = gen_named(NamedGraph::Heawood).unwrap();
    assert_eq!(parse_edge_list(&serialize_edge_list(&h)).unwrap(), h);
}

/// The per-vertex criterion agrees with a direct search for a copy of L.
#[test]
fn l_criterion_matches_explicit_search() {
    let mut corpus: Vec<Graph> = Vec::new();
    for name in [
        NamedGraph::K4,
        NamedGraph::K33,
        NamedGraph::Petersen,
        NamedGraph::Heawood,
    ] {
        corpus.push(gen_named(name).unwrap());
    }
    for k in 3..=10 {
        corpus.push(gen_named(NamedGraph::Prism(k)).unwrap());
        corpus.push(gen_named(NamedGraph::MoebiusLadder(k)).unwrap());
    }
    for seed in 0..300u64 {
        corpus.push(gen_random_cubic(4 + 2 * (seed as usize % 9), seed).unwrap());
    }
    let mut with_l = 0;
    for g in &corpus {
        assert!(g.order() <= 20);
        let by_criterion = find_l_witness(g).is_some();
        let by_search = search_l_embedding(g);
        assert_eq!(by_criterion, by_search.is_some(), "{g:?}");
        if let Some(w) = by_search {
            assert!(w.verify(g));
            with_l += 1;
        }
    }
    assert!(with_l > 0 && with_l < corpus.len());
}

/// Random cubic graphs that happen to be L-free hit the square and apex branches.
#[test]
fn random_l_free_cubic_graphs() {
    let mut tested = 0;
    for seed in 0..3000u64 {
        let g = gen_random_cubic(4 + 2 * (seed as usize % 8), seed).unwrap();
        if find_l_witness(&g).is_some() {
            assert!(matches!(f_partition(&g), Err(PartitionError::ContainsL(_))));
            continue;
        }
        tested += 1;
        let p = f_partition(&g).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        let c = two_coupon_color(&g, &p).unwrap();
        assert_eq!(verify_coupon(&g, &c), Ok(true), "seed {seed}");
    }
    assert!(tested > 1000);
}

/// Exhaustive cover enumeration contains the constructed cover.
#[test]
fn constructed_cover_is_among_all_covers() {
    let mut corpus: Vec<Graph> = vec![
        gen_named(NamedGraph::K4).unwrap(),
        gen_named(NamedGraph::K33).unwrap(),
    ];
    for k in 3..=5 {
        corpus.push(gen_named(NamedGraph::Prism(k)).unwrap());
        corpus.push(gen_named(NamedGraph::MoebiusLadder(k)).unwrap());
    }
    for seed in 0..200u64 {
        let g = gen_random_cubic(4 + 2 * (seed as usize % 4), seed).unwrap();
        if find_l_witness(&g).is_none() {
            corpus.push(relabel(&g, seed));
        }
    }
    for g in &corpus {
        assert!(g.order() <= 10);
        let covers = enumerate_f_partitions(g, usize::MAX);
        assert!(!covers.is_empty());
        let ours = canonical_cover(f_partition(g).unwrap().pieces());
        assert!(covers.iter().any(|c| canonical_cover(c) == ours), "{g:?}");
    }
}
