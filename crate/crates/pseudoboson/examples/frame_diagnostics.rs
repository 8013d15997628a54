//! Finite-rank frame operators S_phi = sum |phi_n><phi_n| and the rank-K
//! resolution of identity sum |phi_n><psi_n|, represented on Hermite modes.
//!
//! ```bash
//! cargo run --example frame_diagnostics
//! ```

use num_complex::Complex64;
use pseudoboson::family::FrameTruncation;
use pseudoboson::{build_family, frame_truncation, make_parameters, resolution_diagnostic};

fn main() -> pseudoboson::Result<()> {
    // at eta = 0 the frame operator is diagonal with entries e^{2n}
    let p = make_parameters(1.0, Complex64::ZERO)?;
    let family = build_family(&p, 12)?;
    let frame = frame_truncation(&family, 10, 10)?;
    print!("(1, 0) S_phi diagonal:");
    for i in 0..5 {
        print!(" {:.4}", frame.s_phi[(i, i)].re);
    }
    println!(" ... (e^{{2n}})");

    let p = make_parameters(0.3, Complex64::new(0.1, 0.0))?;
    let family = build_family(&p, 16)?;
    let frame = frame_truncation(&family, 40, 12)?;
    println!("\n(0.3, 0.1), K = 12 on 40 modes:");
    println!(
        "  hermiticity deviation: {:.2e} (phi), {:.2e} (psi)",
        FrameTruncation::hermiticity_deviation(&frame.s_phi),
        FrameTruncation::hermiticity_deviation(&frame.s_psi)
    );
    println!(
        "  smallest eigenvalues:  {:.2e} (phi), {:.2e} (psi) — positive semidefinite",
        FrameTruncation::min_eigenvalue(&frame.s_phi),
        FrameTruncation::min_eigenvalue(&frame.s_psi)
    );
    println!(
        "  S_phi S_psi vs identity on the low block: {:.3e}",
        frame.product_identity_deviation(6)
    );
    println!("  (the exact operators are mutual inverses; rank-K truncations are not)");

    println!("\nresolution of identity, deviation on modes < K/2:");
    for k in [4usize, 8, 16] {
        let rep = resolution_diagnostic(&family, 40, k)?;
        println!(
            "  K = {k:2}: block {} deviation {:.4e}",
            rep.block, rep.deviation
        );
    }
    Ok(())
}
