//! Closed-form Gaussian moments against the composite Gauss-Legendre rule.
//!
//! ```bash
//! cargo run --example quadrature_cross_check
//! ```

use num_complex::Complex64;
use pseudoboson::fock::{default_half_width, DEFAULT_QUADRATURE_NODES};
use pseudoboson::{
    build_family, gaussian_moment, inner_product, make_parameters, quadrature_inner_product,
    ComplexPolynomial, GaussPolyFn,
};

fn main() -> pseudoboson::Result<()> {
    // moments of x^{2k} e^{-c x^2} for a complex width
    let c = Complex64::new(2.0, 1.0);
    println!("moments with c = {c}:");
    for k in [0usize, 1, 3, 6] {
        let moment = gaussian_moment(c, k)?;
        let xk = ComplexPolynomial::monomial(k, Complex64::from(1.0));
        let bra = GaussPolyFn::new(xk.clone(), c.conj())?;
        let ket = GaussPolyFn::new(xk, c)?;
        let hw = default_half_width(&bra, &ket);
        let quad = quadrature_inner_product(&bra, &ket, hw, DEFAULT_QUADRATURE_NODES)?;
        println!(
            "  k = {k}: closed form {:.12}, |difference| = {:.2e}",
            moment,
            (moment - quad).norm()
        );
    }

    // cross-family pairings, both routes
    let p = make_parameters(0.3, Complex64::new(0.1, 0.0))?;
    let family = build_family(&p, 6)?;
    println!("\npairings at (0.3, 0.1):");
    for (n, m) in [(0usize, 0usize), (1, 1), (3, 5), (6, 6)] {
        let exact = inner_product(&family.psi[n], &family.phi[m])?;
        let hw = default_half_width(&family.psi[n], &family.phi[m]);
        let quad =
            quadrature_inner_product(&family.psi[n], &family.phi[m], hw, DEFAULT_QUADRATURE_NODES)?;
        println!(
            "  <psi_{n}, phi_{m}> = {:.12}  routes differ by {:.2e}",
            exact,
            (exact - quad).norm()
        );
    }

    // an interval that is too short for the integrand is refused
    let err = quadrature_inner_product(&family.psi[6], &family.phi[6], 1.0, 2400).unwrap_err();
    println!("\nhalf_width = 1 rejected: {err}");
    Ok(())
}
