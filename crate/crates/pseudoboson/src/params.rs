//! Model parameters and the coefficient algebra of the deformed ladder pair.
//!
//! The model is driven by a real `epsilon` and a complex `eta` subject to
//! `epsilon^2 > 4|eta|^2`, which makes `theta = sqrt(epsilon^2 - 4|eta|^2)`
//! real and positive. From these the eight k-coefficients are formed; they
//! define the first-order operators
//!
//! ```text
//! A = kA+ x + kA- d/dx = kA1 a + kA2 a†
//! B = kB+ x + kB- d/dx = kB1 a + kB2 a†
//! ```
//!
//! with `kA- kB+ - kA+ kB- = 1` so that `[A, B] = 1`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Strict-inequality band: real parts within this distance of zero are
/// classified as failing the sign conditions (the integrability argument
/// needs strict signs).
pub const STRICT_BAND: f64 = 1e-12;

/// The admissible parameter pair together with the derived `theta`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ParameterPoint {
    pub epsilon: f64,
    pub eta: Complex64,
    pub theta: f64,
}

/// Rejects non-finite input and any pair with `epsilon^2 <= 4|eta|^2`.
pub fn make_parameters(epsilon: f64, eta: Complex64) -> Result<ParameterPoint> {
    if !epsilon.is_finite() || !eta.re.is_finite() || !eta.im.is_finite() {
        return Err(Error::Domain("parameters must be finite".into()));
    }
    let gap = epsilon * epsilon - 4.0 * eta.norm_sqr();
    if gap <= 0.0 {
        return Err(Error::Domain(format!(
            "epsilon^2 > 4|eta|^2 violated (epsilon^2 = {:e}, 4|eta|^2 = {:e}); theta would not be real positive",
            epsilon * epsilon,
            4.0 * eta.norm_sqr()
        )));
    }
    Ok(ParameterPoint {
        epsilon,
        eta,
        theta: gap.sqrt(),
    })
}

/// The eight coefficients of the ladder pair, plus `theta`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CoefficientSet {
    pub k_a1: Complex64,
    pub k_a2: Complex64,
    pub k_b1: Complex64,
    pub k_b2: Complex64,
    pub k_a_plus: Complex64,
    pub k_a_minus: Complex64,
    pub k_b_plus: Complex64,
    pub k_b_minus: Complex64,
    pub theta: f64,
}

pub fn coefficient_set(p: &ParameterPoint) -> CoefficientSet {
    let theta = p.theta;
    let (ch, sh) = (theta.cosh(), theta.sinh());
    let k_a1 = Complex64::from(ch - p.epsilon / theta * sh);
    let k_a2 = -2.0 * p.eta.conj() / theta * sh;
    let k_b1 = 2.0 * p.eta / theta * sh;
    let k_b2 = Complex64::from(ch + p.epsilon / theta * sh);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    CoefficientSet {
        k_a1,
        k_a2,
        k_b1,
        k_b2,
        k_a_plus: (k_a1 + k_a2) * s,
        k_a_minus: (k_a1 - k_a2) * s,
        k_b_plus: (k_b1 + k_b2) * s,
        k_b_minus: (k_b1 - k_b2) * s,
        theta,
    }
}

impl CoefficientSet {
    /// `kA- kB+ - kA+ kB-`; equals 1 for every valid parameter point.
    pub fn determinant(&self) -> Complex64 {
        self.k_a_minus * self.k_b_plus - self.k_a_plus * self.k_b_minus
    }

    /// Gaussian width of the first family: `phi_n ~ exp(-kA+/kA- x^2/2)`.
    pub fn width_phi(&self) -> Complex64 {
        self.k_a_plus / self.k_a_minus
    }

    /// Gaussian width of the second family after rewriting its exponent as
    /// `-c x^2/2`: `c = -conj(kB+/kB-)`.
    pub fn width_psi(&self) -> Complex64 {
        -(self.k_b_plus / self.k_b_minus).conj()
    }

    /// `kA- kB-`; the value -1/2 marks the Hermite special case.
    pub fn hermite_product(&self) -> Complex64 {
        self.k_a_minus * self.k_b_minus
    }

    pub fn op_a(&self) -> LadderCoefficients {
        LadderCoefficients {
            kx: self.k_a_plus,
            kd: self.k_a_minus,
        }
    }

    pub fn op_b(&self) -> LadderCoefficients {
        LadderCoefficients {
            kx: self.k_b_plus,
            kd: self.k_b_minus,
        }
    }

    /// Adjoint of A under the L2 pairing (d/dx is anti-self-adjoint).
    pub fn op_a_dagger(&self) -> LadderCoefficients {
        LadderCoefficients {
            kx: self.k_a_plus.conj(),
            kd: -self.k_a_minus.conj(),
        }
    }

    pub fn op_b_dagger(&self) -> LadderCoefficients {
        LadderCoefficients {
            kx: self.k_b_plus.conj(),
            kd: -self.k_b_minus.conj(),
        }
    }
}

/// Both square-integrability sign conditions: `Re(kA+/kA-) > 0` and
/// `Re(kB+/kB-) < 0`, evaluated strictly (a `STRICT_BAND` neighbourhood of
/// zero fails).
pub fn admissibility(c: &CoefficientSet) -> Result<(bool, bool)> {
    let scale_a = c.k_a1.norm() + c.k_a2.norm();
    let scale_b = c.k_b1.norm() + c.k_b2.norm();
    if c.k_a_minus.norm() <= 1e-14 * scale_a {
        return Err(Error::Degenerate(
            "kA- vanishes; ratio kA+/kA- undefined".into(),
        ));
    }
    if c.k_b_minus.norm() <= 1e-14 * scale_b {
        return Err(Error::Degenerate(
            "kB- vanishes; ratio kB+/kB- undefined".into(),
        ));
    }
    let ra = (c.k_a_plus / c.k_a_minus).re;
    let rb = (c.k_b_plus / c.k_b_minus).re;
    Ok((ra > STRICT_BAND, rb < -STRICT_BAND))
}

/// A first-order operator `kx * x + kd * d/dx`.
#[derive(Debug, Clone, Copy)]
pub struct LadderCoefficients {
    pub kx: Complex64,
    pub kd: Complex64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn theta_examples() {
        let p = make_parameters(1.0, Complex64::ZERO).unwrap();
        assert_relative_eq!(p.theta, 1.0, max_relative = 1e-15);

        let p = make_parameters(0.3, Complex64::new(0.1, 0.0)).unwrap();
        assert_relative_eq!(p.theta, 0.05f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(p.theta, 0.223_606_797_749_979, max_relative = 1e-12);
    }

    #[test]
    fn rejects_inadmissible_pair() {
        let err = make_parameters(0.1, Complex64::new(0.2, 0.0)).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
        assert!(make_parameters(f64::NAN, Complex64::ZERO).is_err());
    }

    #[test]
    fn eta_zero_coefficients_are_exponentials() {
        let p = make_parameters(1.0, Complex64::ZERO).unwrap();
        let c = coefficient_set(&p);
        assert_relative_eq!(c.k_a1.re, (-1.0f64).exp(), max_relative = 1e-14);
        assert_eq!(c.k_a2, Complex64::ZERO);
        assert_eq!(c.k_b1, Complex64::ZERO);
        assert_relative_eq!(c.k_b2.re, 1.0f64.exp(), max_relative = 1e-14);

        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert_relative_eq!(c.k_a_plus.re, (-1.0f64).exp() * s, max_relative = 1e-14);
        assert_relative_eq!(c.k_a_minus.re, (-1.0f64).exp() * s, max_relative = 1e-14);
        assert_relative_eq!(c.k_b_plus.re, 1.0f64.exp() * s, max_relative = 1e-14);
        assert_relative_eq!(c.k_b_minus.re, -(1.0f64.exp()) * s, max_relative = 1e-14);
    }

    #[test]
    fn determinant_identity() {
        for (e, h) in [
            (0.3, Complex64::new(0.1, 0.0)),
            (1.0, Complex64::ZERO),
            (0.45, Complex64::new(0.1, 0.1)),
            (-0.8, Complex64::new(0.05, -0.2)),
        ] {
            let c = coefficient_set(&make_parameters(e, h).unwrap());
            assert!(
                (c.determinant() - 1.0).norm() <= 1e-12,
                "det deviation {:e} at ({e}, {h})",
                (c.determinant() - 1.0).norm()
            );
        }
    }

    #[test]
    fn admissibility_examples() {
        let c = coefficient_set(&make_parameters(1.0, Complex64::ZERO).unwrap());
        assert_eq!(admissibility(&c).unwrap(), (true, true));
        assert_relative_eq!(c.width_phi().re, 1.0, max_relative = 1e-14);
        assert_relative_eq!(c.width_psi().re, 1.0, max_relative = 1e-14);

        // alpha = 3 slice: eta = 0.1 sits inside the window, 0.3 outside
        let c = coefficient_set(&make_parameters(0.3, Complex64::new(0.1, 0.0)).unwrap());
        assert_eq!(admissibility(&c).unwrap(), (true, true));
        let c = coefficient_set(&make_parameters(0.9, Complex64::new(0.3, 0.0)).unwrap());
        let (a, b) = admissibility(&c).unwrap();
        assert!(!(a && b));
    }

    #[test]
    fn hermite_product_at_eta_zero() {
        for e in [1.0, 0.5, -0.7] {
            let c = coefficient_set(&make_parameters(e, Complex64::ZERO).unwrap());
            assert_relative_eq!(c.hermite_product().re, -0.5, max_relative = 1e-13);
            assert_relative_eq!(c.hermite_product().im, 0.0, epsilon = 1e-15);
        }
    }
}
