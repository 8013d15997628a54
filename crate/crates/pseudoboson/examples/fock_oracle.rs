//! Independent matrix-side verification on the truncated number-state
//! space: the defining conjugations, the single connecting constant gamma,
//! and the intertwining relations.
//!
//! ```bash
//! cargo run --release --example fock_oracle
//! ```

use num_complex::Complex64;
use pseudoboson::fock::expm_self_check;
use pseudoboson::{
    make_parameters, verify_conjugation, verify_intertwining, verify_single_constant,
};

fn main() -> pseudoboson::Result<()> {
    let p = make_parameters(0.3, Complex64::new(0.1, 0.0))?;

    println!(
        "exp(M) exp(-M) interior deviation at D = 80: {:.3e}",
        expm_self_check(&p, 80)?
    );

    println!("\nconjugation residuals S a S^-1 vs kA1 a + kA2 a† (interior block):");
    for dim in [40usize, 60, 80] {
        let r = verify_conjugation(&p, dim, 12)?;
        println!(
            "  D = {dim:2}: res_a = {:.3e}, res_b = {:.3e}",
            r.res_a, r.res_b
        );
    }

    let rep = verify_single_constant(&p, 80, 8)?;
    println!("\nsingle-constant relations phi_n = gamma S Phi_n, psi_n = gamma^-1 S^-1 Phi_n:");
    println!(
        "  gamma (n = 0 fit) = {:.12} + {:.2e} i",
        rep.gamma.re, rep.gamma.im
    );
    println!(
        "  per-n fits agree to {:.2e}",
        rep.gamma_per_n
            .iter()
            .map(|g| (g - rep.gamma).norm())
            .fold(0.0, f64::max)
    );
    println!(
        "  phi-side deviation {:.3e}, psi-side {:.3e}",
        rep.dev_phi, rep.dev_psi
    );

    println!("\nintertwining HS = Sh, SH† = hS (relative, interior block):");
    for (epsilon, eta, dim) in [(1.0, 0.0, 60), (0.3, 0.1, 80)] {
        let p = make_parameters(epsilon, Complex64::new(eta, 0.0))?;
        let r = verify_intertwining(&p, dim, 20, 1.0)?;
        println!(
            "  ({epsilon}, {eta}), D = {dim}: {:.3e} / {:.3e}",
            r.res_hs_sh, r.res_sh_hs
        );
    }
    Ok(())
}
