//! Dense complex polynomials in one real variable.
//!
//! Coefficients are stored ascending by degree and trailing near-zero
//! coefficients are trimmed after every operation so that floating-point
//! noise never inflates the degree. The zero polynomial is the empty
//! coefficient sequence.

use num_complex::Complex64;

/// Trailing coefficients with modulus below this fraction of the largest
/// coefficient modulus are dropped.
const TRIM_REL: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexPolynomial {
    coeffs: Vec<Complex64>,
}

impl ComplexPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c * x^degree`.
    pub fn monomial(degree: usize, c: Complex64) -> Self {
        let mut coeffs = vec![Complex64::ZERO; degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the stored degree.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(Complex64::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_coeff_modulus(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    fn trim(&mut self) {
        let m = self.max_coeff_modulus();
        if m == 0.0 {
            self.coeffs.clear();
            return;
        }
        while let Some(last) = self.coeffs.last() {
            if last.norm() <= TRIM_REL * m {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Complex64::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Multiplication by `x` (degree shift).
    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::ZERO);
        coeffs.extend_from_slice(&self.coeffs);
        Self::from_coeffs(coeffs)
    }

    pub fn differentiate(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * k as f64)
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Horner evaluation at a real point.
    pub fn evaluate(&self, x: f64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Polynomial with conjugated coefficients; equals `conj(p(x))` for real x.
    pub fn conjugate(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.conj()).collect())
    }

    /// Coefficient-wise relative distance: max |p_k - q_k| over the larger of
    /// the two max coefficient moduli. Returns the absolute distance when both
    /// polynomials are numerically zero-scale.
    pub fn rel_distance(&self, other: &Self) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        let diff = (0..n)
            .map(|k| (self.coeff(k) - other.coeff(k)).norm())
            .fold(0.0, f64::max);
        let scale = self.max_coeff_modulus().max(other.max_coeff_modulus());
        if scale > 0.0 {
            diff / scale
        } else {
            diff
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn differentiate_x_squared() {
        let p = ComplexPolynomial::monomial(2, re(1.0));
        assert_eq!(p.differentiate(), ComplexPolynomial::monomial(1, re(2.0)));
    }

    #[test]
    fn evaluate_h2_at_one() {
        // 4x^2 - 2 at x = 1
        let p = ComplexPolynomial::from_coeffs(vec![re(-2.0), re(0.0), re(4.0)]);
        assert_eq!(p.evaluate(1.0), re(2.0));
    }

    #[test]
    fn multiply_difference_of_squares() {
        let a = ComplexPolynomial::from_coeffs(vec![re(1.0), re(1.0)]);
        let b = ComplexPolynomial::from_coeffs(vec![re(-1.0), re(1.0)]);
        let expect = ComplexPolynomial::from_coeffs(vec![re(-1.0), re(0.0), re(1.0)]);
        assert_eq!(a.mul(&b), expect);
    }

    #[test]
    fn zero_polynomial_is_empty() {
        let p = ComplexPolynomial::from_coeffs(vec![re(0.0), re(0.0)]);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert!(p.differentiate().is_zero());
        assert_eq!(p.evaluate(3.0), Complex64::ZERO);
    }

    #[test]
    fn trailing_noise_is_trimmed() {
        let p = ComplexPolynomial::from_coeffs(vec![re(1.0), re(2.0), re(1e-30)]);
        assert_eq!(p.degree(), Some(1));
        // subtraction of equal polynomials collapses to zero
        let q = ComplexPolynomial::from_coeffs(vec![re(1.0), re(2.0)]);
        assert!(p.sub(&q).is_zero());
    }

    #[test]
    fn horner_matches_expansion() {
        let p = ComplexPolynomial::from_coeffs(vec![
            Complex64::new(1.0, -2.0),
            Complex64::new(0.5, 0.25),
            Complex64::new(-3.0, 1.0),
        ]);
        let x = 1.7;
        let direct = p.coeff(0) + p.coeff(1) * x + p.coeff(2) * x * x;
        assert!((p.evaluate(x) - direct).norm() < 1e-14);
    }
}
