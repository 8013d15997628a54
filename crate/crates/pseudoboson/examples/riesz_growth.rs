//! The non-Riesz symptom: biorthonormality forces d_n = ||phi_n|| ||psi_n||
//! >= 1, and away from eta = 0 the products grow without bound.
//!
//! ```bash
//! cargo run --example riesz_growth
//! ```

use num_complex::Complex64;
use pseudoboson::{build_family, make_parameters, riesz_diagnostic};

fn main() -> pseudoboson::Result<()> {
    for (epsilon, eta) in [(1.0, 0.0), (0.3, 0.1), (0.45, 0.15)] {
        let p = make_parameters(epsilon, Complex64::new(eta, 0.0))?;
        let family = build_family(&p, 20)?;
        let rep = riesz_diagnostic(&family);
        println!("({epsilon}, {eta}):");
        print!("  d_n =");
        for (n, d) in rep.d.iter().enumerate() {
            if n % 4 == 0 {
                print!(" {d:.4e}");
            }
        }
        println!("   (every 4th level)");
        println!("  min d_n = {:.12}", rep.min_d);
        println!("  d_20 / d_0 = {:.6e}", rep.growth_factor);
        println!(
            "  strictly increasing from n = 2: {}",
            rep.strictly_increasing_from_2
        );
        println!(
            "  Gram condition numbers (K = {}): phi {:.3e}, psi {:.3e}\n",
            rep.gram_size, rep.gram_phi_condition, rep.gram_psi_condition
        );
    }
    println!("at eta = 0 the families are reciprocal rescalings of one");
    println!("orthonormal basis, so every d_n is exactly 1; off the axis the");
    println!("growth of d_n rules out a Riesz-basis pair.");
    Ok(())
}
