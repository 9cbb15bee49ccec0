//! Recover indices from an M-polynomial with the D and S operators.

use mobius_mpoly::{ladder, RenderFormat};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = ladder(7, 3)?.m_polynomial();
    let show = |p: &mobius_mpoly::MPoly| p.render(RenderFormat::Plain);

    println!("M         = {}", show(&m));
    println!("D_x M     = {}", show(&m.d_x()));
    println!("D_y M     = {}", show(&m.d_y()));
    println!("S_x M     = {}", show(&m.s_x()?));
    println!("S_y M     = {}", show(&m.s_y()?));
    println!("D_x D_y M = {}", show(&m.weight_by(1, 1)?));
    println!("S_x S_y M = {}", show(&m.weight_by(-1, -1)?));
    println!();
    println!("M1  = (D_x + D_y)M |x=y=1    = {}", (m.d_x() + m.d_y()).eval_at_one());
    println!("M2  = D_x D_y M |x=y=1       = {}", m.weight_by(1, 1)?.eval_at_one());
    println!("MM2 = S_x S_y M |x=y=1       = {}", m.weight_by(-1, -1)?.eval_at_one());
    println!("R_2 = D_x^2 D_y^2 M |x=y=1   = {}", m.weight_by(2, 2)?.eval_at_one());
    println!(
        "SDD = (D_x S_y + S_x D_y)M |x=y=1 = {}",
        (m.weight_by(1, -1)? + m.weight_by(-1, 1)?).eval_at_one()
    );

    // D_x and S_x undo each other
    assert_eq!(m.d_x().s_x()?, m);
    Ok(())
}
