//! Check the closed-form M-polynomials against generated graphs over a grid.

use mobius_mpoly::verify::Verdict;
use mobius_mpoly::{verify_thm31, verify_thm32, GridRange};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ladder_report = verify_thm31(GridRange::new(4, 12), GridRange::new(2, 10))?;
    let line_report = verify_thm32(GridRange::new(4, 10), GridRange::new(4, 10))?;

    for report in [&ladder_report, &line_report] {
        for (subject, s) in report.summary() {
            println!("{subject}: {} match, {} mismatch", s.matches, s.mismatches);
        }
    }

    println!("\nmismatching grid points:");
    for case in ladder_report.cases().iter().filter(|c| c.verdict == Verdict::Mismatch) {
        println!(
            "  ({}, {}) {}: oracle {} vs closed form {}",
            case.m,
            case.n,
            case.quantity,
            case.computed.as_ref().unwrap(),
            case.closed_form.as_ref().unwrap()
        );
    }
    Ok(())
}
