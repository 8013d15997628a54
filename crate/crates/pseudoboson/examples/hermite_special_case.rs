//! Hermite polynomials reappear whenever kA- kB- = -1/2: closed forms at
//! eta = 0 and convergence to the standard oscillator functions along an
//! admissible path to the excluded origin.
//!
//! ```bash
//! cargo run --example hermite_special_case
//! ```

use num_complex::Complex64;
use pseudoboson::hermite::hermite_polynomial;
use pseudoboson::{build_family, hermite_case_check, make_parameters};

fn main() -> pseudoboson::Result<()> {
    // eta = 0 satisfies kA- kB- = -1/2 for every admissible epsilon
    let p = make_parameters(1.0, Complex64::ZERO)?;
    let family = build_family(&p, 10)?;
    let rep = hermite_case_check(&family, 1e-10);
    println!("(1, 0): kA- kB- = {:.6}", rep.product);
    println!(
        "  closed forms p_n = (-kB-)^n H_n / conj(kA-)^n H_n: deviations {:.2e} / {:.2e}",
        rep.max_phi_deviation, rep.max_psi_deviation
    );

    // a generic point misses the condition and the check reports that
    let p = make_parameters(0.3, Complex64::new(0.1, 0.0))?;
    let family = build_family(&p, 10)?;
    let rep = hermite_case_check(&family, 1e-10);
    println!(
        "(0.3, 0.1): kA- kB- = {:.6} -> applicable = {}",
        rep.product, rep.applicable
    );

    // epsilon = 2.0001 eta, eta -> 0: polynomials approach H_n / sqrt(2^n)
    println!("\nlimit path epsilon = 2.0001 eta:");
    for eta in [1e-2, 1e-3, 1e-4] {
        let p = make_parameters(2.0001 * eta, Complex64::new(eta, 0.0))?;
        let family = build_family(&p, 10)?;
        let mut scale = family.phi[0].poly.coeff(0);
        let mut worst = 0.0f64;
        for n in 1..=10usize {
            scale *= Complex64::from(1.0 / (2.0 * n as f64).sqrt());
            let target = hermite_polynomial(n).scale(scale);
            worst = worst.max(family.phi[n].poly.rel_distance(&target));
        }
        println!("  eta = {eta:7.0e}: max deviation from H_n/sqrt(n! 2^n) form = {worst:.3e}");
    }
    Ok(())
}
