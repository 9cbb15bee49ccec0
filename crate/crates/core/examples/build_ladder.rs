//! Build a generalized Möbius ladder and inspect its shape.
//!
//!     cargo run --example build_ladder -- 7 3

use mobius_mpoly::{build_ladder, LadderParams};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (m, n) = match args.as_slice() {
        [m, n, ..] => (*m, *n),
        _ => (7, 3),
    };
    let params = match LadderParams::new(m, n) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let g = build_ladder(params);

    println!("M_{{{m},{n}}}: {} vertices, {} edges", g.vertex_count(), g.edge_count());
    println!("connected: {}", g.is_connected());
    for (degree, count) in g.degree_multiset() {
        println!("  degree {degree}: {count} vertices");
    }
    println!("twist edges:");
    for r in 1..=params.n() {
        let a = params.vertex(params.columns() - 1, r);
        let b = params.vertex(0, params.n() + 1 - r);
        println!("  v({}, {r}) = {a}  --  v(0, {}) = {b}", params.columns() - 1, params.n() + 1 - r);
    }
    print!("{}", g.to_edgelist());
}
