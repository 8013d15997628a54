//! Hermite polynomials and the orthonormal Hermite functions.

use num_complex::Complex64;

use crate::gauss::GaussPolyFn;
use crate::poly::ComplexPolynomial;

/// Physicists' Hermite polynomial `H_n` via the three-term recurrence
/// `H_{n+1} = 2x H_n - 2n H_{n-1}`.
pub fn hermite_polynomial(n: usize) -> ComplexPolynomial {
    let mut prev = ComplexPolynomial::one();
    if n == 0 {
        return prev;
    }
    let two = Complex64::new(2.0, 0.0);
    let mut cur = ComplexPolynomial::monomial(1, two);
    for m in 1..n {
        let next = cur
            .mul_x()
            .scale(two)
            .sub(&prev.scale(Complex64::from(2.0 * m as f64)));
        prev = cur;
        cur = next;
    }
    cur
}

/// Polynomial part of the orthonormal Hermite function,
/// `P_n = H_n / sqrt(2^n n! sqrt(pi))`, built by the normalized recurrence
/// `P_{n+1} = (sqrt(2) x P_n - sqrt(n) P_{n-1}) / sqrt(n+1)` to avoid
/// factorial overflow.
pub fn hermite_function_poly(n: usize) -> ComplexPolynomial {
    let n0 = Complex64::from(std::f64::consts::PI.powf(-0.25));
    let mut prev = ComplexPolynomial::constant(n0);
    if n == 0 {
        return prev;
    }
    let mut cur = prev
        .mul_x()
        .scale(Complex64::from(std::f64::consts::SQRT_2));
    for m in 1..n {
        let next = cur
            .mul_x()
            .scale(Complex64::from(std::f64::consts::SQRT_2))
            .sub(&prev.scale(Complex64::from((m as f64).sqrt())))
            .scale(Complex64::from(1.0 / ((m + 1) as f64).sqrt()));
        prev = cur;
        cur = next;
    }
    cur
}

/// The orthonormal Hermite function `Phi_n(x) = P_n(x) exp(-x^2/2)`.
pub fn hermite_function(n: usize) -> GaussPolyFn {
    GaussPolyFn {
        poly: hermite_function_poly(n),
        width: Complex64::new(1.0, 0.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::inner_product;
    use approx::assert_relative_eq;

    #[test]
    fn low_order_polynomials() {
        assert_eq!(hermite_polynomial(0).coeffs(), &[Complex64::from(1.0)]);
        assert_eq!(
            hermite_polynomial(1).coeffs(),
            &[Complex64::ZERO, Complex64::from(2.0)]
        );
        // H_2 = 4x^2 - 2, H_3 = 8x^3 - 12x
        let h2 = hermite_polynomial(2);
        assert_eq!(h2.coeff(0), Complex64::from(-2.0));
        assert_eq!(h2.coeff(2), Complex64::from(4.0));
        let h3 = hermite_polynomial(3);
        assert_eq!(h3.coeff(1), Complex64::from(-12.0));
        assert_eq!(h3.coeff(3), Complex64::from(8.0));
    }

    #[test]
    fn hermite_functions_are_orthonormal() {
        for n in 0..=6 {
            for m in 0..=6 {
                let v = inner_product(&hermite_function(n), &hermite_function(m)).unwrap();
                let expect = if n == m { 1.0 } else { 0.0 };
                assert!((v - expect).norm() < 1e-12, "<Phi_{n}, Phi_{m}> = {v}");
            }
        }
    }

    #[test]
    fn normalized_poly_matches_raw_hermite() {
        for n in 0..=10usize {
            let fac = (0..n).fold(std::f64::consts::PI.sqrt(), |acc, k| {
                acc * 2.0 * (k + 1) as f64
            });
            let scaled = hermite_polynomial(n).scale(Complex64::from(1.0 / fac.sqrt()));
            let dev = scaled.rel_distance(&hermite_function_poly(n));
            assert!(dev < 1e-13, "n = {n}: deviation {dev:e}");
        }
    }

    #[test]
    fn function_value_at_zero() {
        // Phi_0(0) = pi^{-1/4}
        let v = hermite_function(0).evaluate(0.0);
        assert_relative_eq!(v.re, std::f64::consts::PI.powf(-0.25), max_relative = 1e-15);
    }
}
