use tdp_core::coloring::{two_coupon_color, verify_coupon, Color};
use tdp_core::generators::{gen_named, gen_random_cubic, NamedGraph};
use tdp_core::motif::find_l_witness;
use tdp_core::oracle::{exact_two_colorable, onh, total_domatic_number, Hypergraph, SearchLimits};
use tdp_core::partition::f_partition;
use tdp_core::Graph;

fn limits() -> SearchLimits {
    SearchLimits::with_budget(u64::MAX)
}

/// Independent check: some 2-coloring of the hypergraph leaves no edge monochromatic.
fn hypergraph_bipartite_brute_force(h: &Hypergraph) -> bool {
    (0u32..1 << h.order).any(|bits| {
        let colors: Vec<Color> = (0..h.order)
            .map(|v| {
                if bits >> v & 1 == 0 {
                    Color::Black
                } else {
                    Color::White
                }
            })
            .collect();
        h.is_proper_two_coloring(&colors)
    })
}

fn small_corpus() -> Vec<Graph> {
    let mut corpus: Vec<Graph> = [
        NamedGraph::K4,
        NamedGraph::K33,
        NamedGraph::Petersen,
        NamedGraph::Heawood,
    ]
    .into_iter()
    .map(|n| gen_named(n).unwrap())
    .collect();
    for n in 3..=14 {
        corpus.push(gen_named(NamedGraph::Cycle(n)).unwrap());
    }
    for k in 3..=7 {
        corpus.push(gen_named(NamedGraph::Prism(k)).unwrap());
        corpus.push(gen_named(NamedGraph::MoebiusLadder(k)).unwrap());
    }
    for seed in 0..150u64 {
        corpus.push(gen_random_cubic(4 + 2 * (seed as usize % 6), seed).unwrap());
    }
    corpus
}

#[test]
fn two_colorability_is_hypergraph_bipartiteness() {
    for g in small_corpus() {
        let h = onh(&g);
        let found = exact_two_colorable(&g, &limits()).unwrap();
        assert_eq!(
            found.is_some(),
            hypergraph_bipartite_brute_force(&h),
            "{g:?}"
        );
        if let Some(c) = found {
            assert!(h.is_proper_two_coloring(&c.to_vec().unwrap()));
            assert_eq!(verify_coupon(&g, &c), Ok(true));
        }
    }
}

#[test]
fn domatic_number_bounds() {
    for g in small_corpus() {
        let r = total_domatic_number(&g, &limits()).unwrap();
        assert!(r.verify_witness(&g));
        assert!(r.d_t <= g.min_degree().unwrap());
        let two = exact_two_colorable(&g, &limits()).unwrap();
        assert_eq!(r.d_t >= 2, two.is_some(), "{g:?}");
    }
}

#[test]
fn failures_only_where_l_occurs() {
    for g in small_corpus().into_iter().filter(Graph::is_cubic) {
        let two = exact_two_colorable(&g, &limits()).unwrap();
        if two.is_none() {
            assert!(find_l_witness(&g).is_some(), "{g:?}");
        }
        if find_l_witness(&g).is_none() && g.order() <= 14 {
            assert!(two.is_some());
            let p = f_partition(&g).unwrap();
            assert_eq!(
                verify_coupon(&g, &two_coupon_color(&g, &p).unwrap()),
                Ok(true)
            );
        }
    }
}
