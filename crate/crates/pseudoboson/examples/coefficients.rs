//! Parameter validation and the coefficient algebra of the ladder pair.
//!
//! ```bash
//! cargo run --example coefficients
//! ```

use num_complex::Complex64;
use pseudoboson::{admissibility, coefficient_set, make_parameters};

fn main() -> pseudoboson::Result<()> {
    for (epsilon, eta) in [
        (1.0, Complex64::new(0.0, 0.0)),
        (0.3, Complex64::new(0.1, 0.0)),
        (0.45, Complex64::new(0.1, 0.1)),
    ] {
        let p = make_parameters(epsilon, eta)?;
        let c = coefficient_set(&p);
        let (cond_a, cond_b) = admissibility(&c)?;
        println!("epsilon = {epsilon}, eta = {eta}");
        println!("  theta           = {:.12}", p.theta);
        println!("  kA1, kA2        = {:.6}, {:.6}", c.k_a1, c.k_a2);
        println!("  kB1, kB2        = {:.6}, {:.6}", c.k_b1, c.k_b2);
        println!("  kA+/kA-         = {:.6}", c.width_phi());
        println!("  kB+/kB-         = {:.6}", -c.width_psi().conj());
        println!("  det - 1         = {:.3e}", (c.determinant() - 1.0).norm());
        println!("  kA- kB-         = {:.6}", c.hermite_product());
        println!("  sign conditions = ({cond_a}, {cond_b})\n");
    }

    // the guard rejects pairs without a real positive theta
    match make_parameters(0.1, Complex64::new(0.2, 0.0)) {
        Err(e) => println!("(0.1, 0.2) rejected as expected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
