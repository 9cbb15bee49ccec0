//! Compare the published index formulas with edge sums and print the report.
//!
//!     cargo run --example proposition_report -- json

use mobius_mpoly::{verify_propositions, Alpha, GridRange};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let json = std::env::args().nth(1).as_deref() == Some("json");
    let alphas = [Alpha::from(1), Alpha::new(0.5).unwrap()];
    let report = verify_propositions(GridRange::new(6, 7), GridRange::new(3, 5), &alphas)?;
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(())
}
