use std::collections::BTreeSet;

use mobius_mpoly::polynomial::{rational, ratio};
use mobius_mpoly::{indices_from_edges, indices_from_mpoly, ladder, poly_add, Alpha, Graph, MPoly};
use proptest::prelude::*;

fn arb_poly(min_exp: u32) -> impl Strategy<Value = MPoly> {
    prop::collection::vec(((min_exp..7u32, min_exp..7u32), -50i64..50, 1i64..6), 0..8).prop_map(
        |terms| MPoly::from_terms(terms.into_iter().map(|(k, n, d)| (k, ratio(n, d)))),
    )
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..12).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..30).prop_map(move |pairs| {
            let edges: BTreeSet<(usize, usize)> = pairs
                .into_iter()
                .filter(|(u, v)| u != v)
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect();
            Graph::new(n, edges).unwrap()
        })
    })
}

fn exponents() -> Vec<Alpha> {
    [-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0]
        .iter()
        .map(|&a| Alpha::new(a).unwrap())
        .collect()
}

proptest! {
    #[test]
    fn weights_compose(p in arb_poly(1), a in -2i32..3, b in -2i32..3, c in -2i32..3, d in -2i32..3) {
        let twice = p.weight_by(a, b).unwrap().weight_by(c, d).unwrap();
        prop_assert_eq!(twice, p.weight_by(a + c, b + d).unwrap());
    }

    #[test]
    fn d_and_s_are_inverse(p in arb_poly(1)) {
        prop_assert_eq!(p.d_x().s_x().unwrap(), p.clone());
        prop_assert_eq!(p.s_y().unwrap().d_y(), p);
    }

    #[test]
    fn eval_is_additive(p in arb_poly(0), q in arb_poly(0)) {
        prop_assert_eq!(
            poly_add(&p, &q).eval_at_one(),
            p.eval_at_one() + q.eval_at_one()
        );
    }

    #[test]
    fn no_zero_coefficients_are_stored(p in arb_poly(0), q in arb_poly(0)) {
        let s = &p - &q;
        prop_assert!(s.terms().all(|(_, c)| *c != rational(0)));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn graph_invariants(g in arb_graph()) {
        let degree_sum: usize = g.degree_multiset().iter().map(|(d, c)| d * c).sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());

        let l = g.line_graph();
        let expected: usize = g.degrees().iter().map(|&d| d * d.saturating_sub(1) / 2).sum();
        prop_assert_eq!(l.edge_count(), expected);
        for (k, &(u, v)) in g.edges().iter().enumerate() {
            prop_assert_eq!(l.degree(k), g.degree(u) + g.degree(v) - 2);
        }

        let part = g.edge_degree_partition();
        prop_assert_eq!(part.total(), g.edge_count());
        prop_assert_eq!(g.m_polynomial().eval_at_one(), rational(g.edge_count() as i64));
    }

    #[test]
    fn operator_route_equals_edge_sums(g in arb_graph()) {
        let alphas = exponents();
        let by_edges = indices_from_edges(&g, &alphas);
        let by_poly = indices_from_mpoly(&g.m_polynomial(), &alphas).unwrap();
        prop_assert!(by_edges.agreement(&by_poly).all());
        prop_assert_eq!(&by_edges.r(1).unwrap().as_exact().cloned(), &Some(by_edges.m2.clone()));
        prop_assert_eq!(&by_edges.r(-1).unwrap().as_exact().cloned(), &Some(by_edges.mm2.clone()));
        for a in &alphas {
            // the exponent list is closed under negation
            prop_assert!(by_edges.rr_alpha[a].agrees_with(&by_edges.r_alpha[&a.negated()]));
        }
    }

    #[test]
    fn sdd_is_symmetric_under_transpose(p in arb_poly(1)) {
        let transposed = MPoly::from_terms(p.terms().map(|((i, j), c)| ((j, i), c.clone())));
        let a = indices_from_mpoly(&p, &[]).unwrap();
        let b = indices_from_mpoly(&transposed, &[]).unwrap();
        prop_assert_eq!(a.sdd, b.sdd);
        prop_assert_eq!(a.m1, b.m1);
        prop_assert_eq!(a.m2, b.m2);
    }

    #[test]
    fn ladder_shape(m in 4i64..20, n in 2i64..15) {
        let g = ladder(m, n).unwrap();
        let (mu, nu) = (m as usize, n as usize);
        prop_assert_eq!(g.vertex_count(), (mu - 1) * nu);
        prop_assert_eq!(g.edge_count(), (mu - 1) * (2 * nu - 1));
        prop_assert!(g.is_connected());
        let ms = g.degree_multiset();
        prop_assert_eq!(ms.get(&3).copied(), Some(2 * (mu - 1)));
        prop_assert_eq!(ms.get(&4).copied().unwrap_or(0), (mu - 1) * (nu - 2));
        if n >= 3 {
            prop_assert_eq!(boundary_cycle_length(&g), Some(2 * (mu - 1)));
        }
    }
}

/// Length of the cycle formed by (3,3)-edges, if they form exactly one cycle.
fn boundary_cycle_length(g: &Graph) -> Option<usize> {
    let boundary: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| g.degree(u) == 3 && g.degree(v) == 3)
        .collect();
    let sub = Graph::new(g.vertex_count(), boundary.iter().copied()).ok()?;
    let on_cycle: Vec<usize> = (0..g.vertex_count()).filter(|&v| sub.degree(v) > 0).collect();
    if on_cycle.iter().any(|&v| sub.degree(v) != 2) {
        return None;
    }
    // walk the cycle from its first vertex
    let adj = sub.adjacency();
    let start = *on_cycle.first()?;
    let (mut prev, mut cur, mut steps) = (start, adj[start][0], 1);
    while cur != start {
        let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
        prev = cur;
        cur = next;
        steps += 1;
    }
    (steps == on_cycle.len()).then_some(steps)
}
