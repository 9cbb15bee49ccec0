//! The six degree-based indices, from edge sums and from the M-polynomial.

use mobius_mpoly::{indices_from_edges, indices_from_mpoly, ladder, Alpha};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alphas: Vec<Alpha> = [-1.0, -0.5, 0.0, 0.5, 1.0, 2.0]
        .iter()
        .filter_map(|&a| Alpha::new(a))
        .collect();

    for (name, g) in [
        ("M_{6,5}", ladder(6, 5)?),
        ("L(M_{6,5})", ladder(6, 5)?.line_graph()),
    ] {
        let by_edges = indices_from_edges(&g, &alphas);
        let by_poly = indices_from_mpoly(&g.m_polynomial(), &alphas)?;
        let agree = by_edges.agreement(&by_poly);

        println!("{name}  (both routes agree: {})", agree.all());
        println!("  M1  = {}", by_edges.m1);
        println!("  M2  = {}", by_edges.m2);
        println!("  MM2 = {}", by_edges.mm2);
        println!("  SDD = {}", by_edges.sdd);
        for a in &alphas {
            println!("  R_{a:<4} = {:<28} RR_{a:<4} = {}", by_edges.r_alpha[a], by_edges.rr_alpha[a]);
        }
    }
    Ok(())
}
