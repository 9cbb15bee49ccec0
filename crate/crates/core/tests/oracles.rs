mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{brute_line_graph, brute_partition, literal_ladder, matrix_degrees, q};
use mobius_mpoly::polynomial::rational;
use mobius_mpoly::{
    indices_from_edges, indices_from_mpoly, ladder, thm31_mpoly, thm32_mpoly, Alpha, Graph,
    IndexValue, MPoly,
};

#[test]
fn generator_matches_literal_grid_identification() {
    for m in 4..=9 {
        for n in 2..=8 {
            let g = ladder(m as i64, n as i64).unwrap();
            let (count, edges) = literal_ladder(m, n);
            assert_eq!(g.vertex_count(), count, "M_{{{m},{n}}}");
            let built: BTreeSet<_> = g.edges().iter().copied().collect();
            assert_eq!(built, edges, "M_{{{m},{n}}}");
        }
    }
}

#[test]
fn line_graph_matches_pairwise_check() {
    for g in [
        ladder(5, 6).unwrap(),
        ladder(4, 2).unwrap(),
        Graph::star(5),
        Graph::cycle(6),
        Graph::complete(5),
    ] {
        let l = g.line_graph();
        let brute = brute_line_graph(&g);
        assert_eq!(l.vertex_count(), g.edge_count());
        assert_eq!(l.edges().iter().copied().collect::<BTreeSet<_>>(), brute);
    }
}

#[test]
fn partition_matches_matrix_degrees() {
    for (m, n) in [(4, 2), (7, 3), (5, 6), (10, 10)] {
        let g = ladder(m, n).unwrap();
        assert_eq!(matrix_degrees(&g), g.degrees());
        assert_eq!(&brute_partition(&g), g.edge_degree_partition().counts());
        let l = g.line_graph();
        assert_eq!(&brute_partition(&l), l.edge_degree_partition().counts());
    }
}

// Frozen values below were computed with the literal-grid and pairwise oracles above.

#[test]
fn frozen_ladder_counts() {
    let g = ladder(7, 3).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (18, 30));
    assert_eq!(g.degree_multiset(), BTreeMap::from([(3, 12), (4, 6)]));
    assert_eq!(g.m_polynomial().eval_at_one(), rational(30));

    let g = ladder(4, 2).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (6, 9));
    assert_eq!(g.degree_multiset(), BTreeMap::from([(3, 6)]));

    let p = ladder(5, 2).unwrap().edge_degree_partition();
    assert_eq!(p.counts(), &BTreeMap::from([((3, 3), 12)]));
}

#[test]
fn frozen_line_graph_of_m_5_6() {
    let l = ladder(5, 6).unwrap().line_graph();
    assert_eq!((l.vertex_count(), l.edge_count()), (44, 120));
    assert_eq!(brute_line_graph(&ladder(5, 6).unwrap()).len(), 120);
    assert_eq!(
        brute_partition(&l),
        BTreeMap::from([((4, 4), 8), ((4, 5), 16), ((5, 6), 24), ((6, 6), 72)])
    );
    assert_eq!(l.m_polynomial(), thm32_mpoly(5, 6).unwrap());
}

#[test]
fn frozen_m_polynomials() {
    let path = Graph::path(4).m_polynomial();
    assert_eq!(
        path,
        MPoly::from_terms([((1, 2), rational(2)), ((2, 2), rational(1))])
    );
    assert_eq!(ladder(7, 3).unwrap().m_polynomial(), thm31_mpoly(7, 3).unwrap());
}

/// Edge-by-edge sums written out with literal degree pairs.
#[test]
fn frozen_index_values() {
    // P_4: edges with degree pairs (1,2), (2,2), (2,1)
    let s = indices_from_edges(&Graph::path(4), &[Alpha::from(1)]);
    assert_eq!(s.m1, rational(3 + 4 + 3));
    assert_eq!(s.m2, rational(2 + 4 + 2));
    assert_eq!(s.mm2, q(1, 2) + q(1, 4) + q(1, 2));
    assert_eq!(s.sdd, q(5, 2) + q(2, 1) + q(5, 2));

    // M_{7,3}: 12 edges (3,3), 12 edges (3,4), 6 edges (4,4)
    let g = ladder(7, 3).unwrap();
    let s = indices_from_edges(&g, &[Alpha::from(1), Alpha::from(0)]);
    assert_eq!(s.m1, rational(204));
    assert_eq!(s.m2, rational(348));
    assert_eq!(s.mm2, q(12, 9) + q(12, 12) + q(6, 16));
    assert_eq!(s.sdd, q(12 * 2, 1) + q(12 * 25, 12) + q(6 * 2, 1));
    assert_eq!(s.r(0), Some(&IndexValue::Exact(rational(30))));

    let p = indices_from_mpoly(&g.m_polynomial(), &[Alpha::from(1)]).unwrap();
    assert_eq!(p.m2, rational(348));
}
