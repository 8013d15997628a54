//! The one-real-parameter slice epsilon = alpha eta: window half-width
//! eta_0(alpha) and the two tanh sign ratios across a grid.
//!
//! ```bash
//! cargo run --example admissibility_window
//! ```

use pseudoboson::region::Classification;
use pseudoboson::{eta_window, scan_region, tanh_conditions};

fn main() -> pseudoboson::Result<()> {
    for alpha in [2.5, 3.0, 5.0, 10.0, -3.0] {
        println!("eta_0({alpha:5}) = {:.6}", eta_window(alpha)?);
    }

    let alpha = 3.0;
    let eta0 = eta_window(alpha)?;
    println!("\nalpha = 3 grid (eta_0 = {eta0:.6}):");
    println!("    eta       ratioA       ratioB  class");
    let etas: Vec<f64> = (-8..=8).map(|i| i as f64 * 0.05).collect();
    for point in scan_region(&[alpha], &etas)? {
        let class = match point.classification {
            Classification::Admissible => "admissible",
            Classification::Inadmissible => "inadmissible",
            Classification::Boundary => "boundary",
            Classification::Excluded => "excluded (eta = 0)",
            Classification::Singular => "singular",
        };
        println!(
            "{:>7.2} {:>12.5} {:>12.5}  {}",
            point.eta, point.ratio_a, point.ratio_b, class
        );
    }

    // the ratios flip sign exactly at the window edge
    let just_in = tanh_conditions(alpha, eta0 - 1e-6)?;
    let just_out = tanh_conditions(alpha, eta0 + 1e-6)?;
    println!("\nratioA just inside the window:  {:+.3e}", just_in.0);
    println!("ratioA just outside the window: {:+.3e}", just_out.0);
    Ok(())
}
