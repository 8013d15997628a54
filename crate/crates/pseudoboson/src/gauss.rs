//! Gaussian-polynomial functions `p(x) exp(-c x^2 / 2)` and their exact
//! integral calculus.
//!
//! Every member of both function families (and every Hermite function) lives
//! in this class, which is closed under the first-order ladder operators.
//! Inner products reduce to closed-form Gaussian moments, so no quadrature is
//! involved on this path; the quadrature oracle lives in [`crate::fock`].

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::LadderCoefficients;
use crate::poly::ComplexPolynomial;

/// Even Gaussian moment `I_k = \int x^{2k} exp(-c x^2) dx` for `Re c > 0`,
/// via `I_0 = sqrt(pi/c)` (principal branch) and
/// `I_{k+1} = (2k+1)/(2c) I_k`. Odd moments vanish by symmetry and are never
/// computed.
pub fn gaussian_moment(c: Complex64, k: usize) -> Result<Complex64> {
    if c.re.is_nan() || c.re <= 0.0 {
        return Err(Error::Domain(format!(
            "gaussian_moment requires Re c > 0, got c = {c}"
        )));
    }
    let mut val = (std::f64::consts::PI / c).sqrt();
    for j in 0..k {
        val *= (2 * j + 1) as f64 / (2.0 * c);
    }
    Ok(val)
}

/// A function `p(x) exp(-c x^2 / 2)` with complex width `c`, `Re c > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussPolyFn {
    pub poly: ComplexPolynomial,
    pub width: Complex64,
}

impl GaussPolyFn {
    pub fn new(poly: ComplexPolynomial, width: Complex64) -> Result<Self> {
        if width.re.is_nan() || width.re <= 0.0 {
            return Err(Error::Domain(format!(
                "Gaussian width must have positive real part, got {width}"
            )));
        }
        Ok(Self { poly, width })
    }

    /// The bare Gaussian `exp(-c x^2 / 2)`.
    pub fn gaussian(width: Complex64) -> Result<Self> {
        Self::new(ComplexPolynomial::one(), width)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            poly: self.poly.scale(s),
            width: self.width,
        }
    }

    pub fn evaluate(&self, x: f64) -> Complex64 {
        self.poly.evaluate(x) * (-0.5 * self.width * x * x).exp()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

/// Applies `kx x + kd d/dx` to `p(x) exp(-c x^2/2)`:
/// the result is `((kx - kd c) x p + kd p') exp(-c x^2/2)` — same width.
pub fn apply_ladder(op: &LadderCoefficients, f: &GaussPolyFn) -> GaussPolyFn {
    let xp = f.poly.mul_x().scale(op.kx - op.kd * f.width);
    let dp = f.poly.differentiate().scale(op.kd);
    GaussPolyFn {
        poly: xp.add(&dp),
        width: f.width,
    }
}

/// Exact L2 pairing `<f, g> = \int conj(f(x)) g(x) dx`, conjugate-linear in
/// the bra. The integrand is `conj(p_f) p_g exp(-(conj(c_f)+c_g) x^2/2)`, so
/// the value is the moment expansion with combined width
/// `C = (conj(c_f) + c_g)/2`.
pub fn inner_product(bra: &GaussPolyFn, ket: &GaussPolyFn) -> Result<Complex64> {
    let c = (bra.width.conj() + ket.width) / 2.0;
    if c.re.is_nan() || c.re <= 0.0 {
        return Err(Error::Domain(format!(
            "combined Gaussian width must have positive real part, got {c}"
        )));
    }
    let q = bra.poly.conjugate().mul(&ket.poly);
    let mut total = Complex64::ZERO;
    for (k, qk) in q.coeffs().iter().enumerate() {
        if k % 2 == 0 && qk.norm() > 0.0 {
            total += qk * gaussian_moment(c, k / 2)?;
        }
    }
    Ok(total)
}

/// `||f|| = sqrt(<f, f>)` via the exact moment expansion.
pub fn norm(f: &GaussPolyFn) -> Result<f64> {
    Ok(inner_product(f, f)?.re.max(0.0).sqrt())
}
