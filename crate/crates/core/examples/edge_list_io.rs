//! Read an arbitrary simple graph from the edge-list format and analyse it.
//!
//!     cargo run --example edge_list_io -- path/to/graph.txt

use mobius_mpoly::{indices_from_edges, Alpha, Graph, RenderFormat};

// naphthalene carbon skeleton
const DEFAULT: &str = "p 10 11
0 1
0 5
1 2
2 3
3 4
4 5
4 6
5 9
6 7
7 8
8 9
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => DEFAULT.to_string(),
    };
    let g = Graph::from_edgelist(&text)?;
    assert_eq!(Graph::from_edgelist(&g.to_edgelist())?, g);

    println!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
    println!("M(G)    = {}", g.m_polynomial().render(RenderFormat::Plain));
    println!("M(L(G)) = {}", g.line_graph().m_polynomial().render(RenderFormat::Plain));
    let s = indices_from_edges(&g, &[Alpha::new(-0.5).unwrap()]);
    println!("M1 = {}, M2 = {}, SDD = {}", s.m1, s.m2, s.sdd);
    println!("Randić index R_-1/2 = {}", s.r_alpha.values().next().unwrap());
    Ok(())
}
