//! Line graph of a ladder: sizes and the degree-transfer rule d(uv) = d(u) + d(v) − 2.

use mobius_mpoly::ladder;

fn main() {
    let g = ladder(5, 6).expect("valid parameters");
    let l = g.line_graph();
    let choose2: usize = g.degrees().iter().map(|&d| d * (d - 1) / 2).sum();

    println!("M_{{5,6}}:    {} vertices, {} edges", g.vertex_count(), g.edge_count());
    println!("L(M_{{5,6}}): {} vertices, {} edges (Σ C(d,2) = {choose2})", l.vertex_count(), l.edge_count());

    for (k, &(u, v)) in g.edges().iter().enumerate().take(6) {
        println!(
            "  edge {k} = ({u},{v}): d(u) + d(v) − 2 = {} + {} − 2 = {}",
            g.degree(u),
            g.degree(v),
            l.degree(k)
        );
    }
    for (degree, count) in l.degree_multiset() {
        println!("  line-graph degree {degree}: {count} vertices");
    }
}
