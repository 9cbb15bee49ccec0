//! Edge-degree partitions and M-polynomials in every output format.

use mobius_mpoly::{ladder, Graph, RenderFormat};

fn main() {
    let graphs = [
        ("P_4".to_string(), Graph::path(4)),
        ("K_{1,4}".to_string(), Graph::star(4)),
        ("M_{7,3}".to_string(), ladder(7, 3).unwrap()),
        ("L(M_{5,6})".to_string(), ladder(5, 6).unwrap().line_graph()),
    ];
    for (name, g) in &graphs {
        let partition = g.edge_degree_partition();
        println!("{name}");
        for (&(i, j), &count) in partition.counts() {
            println!("  m_{{{i},{j}}} = {count}");
        }
        let m = g.m_polynomial();
        println!("  plain: {}", m.render(RenderFormat::Plain));
        println!("  latex: {}", m.render(RenderFormat::Latex));
        println!("  json:  {}", m.render(RenderFormat::Json));
    }
}
