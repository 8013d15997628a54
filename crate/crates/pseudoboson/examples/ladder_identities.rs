//! Raising, lowering and number-operator identities, checked as exact
//! polynomial identities through the operator route.
//!
//! ```bash
//! cargo run --example ladder_identities
//! ```

use num_complex::Complex64;
use pseudoboson::{build_family, ladder_consistency, make_parameters, number_eigencheck};

fn main() -> pseudoboson::Result<()> {
    for (epsilon, eta) in [(1.0, 0.0), (0.3, 0.1), (0.45, 0.15)] {
        let p = make_parameters(epsilon, Complex64::new(eta, 0.0))?;
        let family = build_family(&p, 12)?;

        let ladder = ladder_consistency(&family);
        let eigen = number_eigencheck(&family);
        println!("({epsilon}, {eta}):");
        println!(
            "  B phi_n = sqrt(n+1) phi_n+1   worst rel dev {:.2e}",
            ladder.raise_phi.iter().cloned().fold(0.0, f64::max)
        );
        println!(
            "  A phi_n = sqrt(n) phi_n-1     worst rel dev {:.2e}  (A phi_0 residual {:.2e})",
            ladder.lower_phi.iter().cloned().fold(0.0, f64::max),
            ladder.lower_phi[0]
        );
        println!(
            "  A† psi_n = sqrt(n+1) psi_n+1  worst rel dev {:.2e}",
            ladder.raise_psi.iter().cloned().fold(0.0, f64::max)
        );
        println!(
            "  B† psi_n = sqrt(n) psi_n-1    worst rel dev {:.2e}",
            ladder.lower_psi.iter().cloned().fold(0.0, f64::max)
        );
        println!(
            "  BA phi_n = n phi_n, A†B† psi_n = n psi_n: scaled dev {:.2e} (bound 1e-9)\n",
            eigen.max_scaled
        );
    }
    Ok(())
}
