//! Builds both families and checks `<psi_n, phi_m> = delta_nm`.
//!
//! ```bash
//! cargo run --example biorthonormal_family
//! ```

use num_complex::Complex64;
use pseudoboson::{build_family, make_parameters, verify_biorthonormality};

fn main() -> pseudoboson::Result<()> {
    let p = make_parameters(0.3, Complex64::new(0.1, 0.0))?;
    let family = build_family(&p, 12)?;
    println!(
        "family at (0.3, 0.1): widths {:.6} / {:.6}",
        family.coeffs.width_phi(),
        family.coeffs.width_psi()
    );

    let rep = verify_biorthonormality(&family);
    println!("pairing matrix moduli (n, m <= 6):");
    for row in rep.pairing.iter().take(7) {
        let line: Vec<String> = row
            .iter()
            .take(7)
            .map(|v| format!("{:9.2e}", v.norm()))
            .collect();
        println!("  {}", line.join(" "));
    }
    println!(
        "max |<psi_n, phi_m> - delta| over n, m <= 12: {:.3e}",
        rep.max_deviation_n12
    );
    println!(
        "max over the full range n, m <= {}: {:.3e}",
        rep.n_max, rep.max_deviation
    );
    Ok(())
}
