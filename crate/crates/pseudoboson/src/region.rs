//! One-real-parameter admissibility analysis on the slice `epsilon = alpha
//! eta` with real `eta` and `alpha^2 > 4`.
//!
//! On this slice both sign conditions reduce to positivity of two real
//! ratios built from `tanh(eta sqrt(alpha^2-4))`, and the admissible set is
//! the open window `|eta| < eta_0(alpha)`. The scanner classifies grid
//! points through the full coefficient route and through the tanh ratios and
//! cross-checks the two against the window.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{admissibility, coefficient_set, make_parameters};

/// Points closer than this to `|eta| = eta_0` are reported as `Boundary`
/// rather than pass/fail; the analysis is on the open interval.
pub const BOUNDARY_BAND: f64 = 1e-9;

fn check_alpha(alpha: f64) -> Result<f64> {
    if !alpha.is_finite() || alpha * alpha <= 4.0 {
        return Err(Error::Domain(format!(
            "alpha^2 > 4 required, got alpha = {alpha}"
        )));
    }
    Ok((alpha * alpha - 4.0).sqrt())
}

/// Half-width of the admissible window in `eta` at fixed `alpha`:
/// `eta_0 = artanh(sqrt((|alpha|-2)/(|alpha|+2))) / sqrt(alpha^2-4)`.
/// Depends on `alpha` only through `alpha^2`.
pub fn eta_window(alpha: f64) -> Result<f64> {
    let root = check_alpha(alpha)?;
    let aa = alpha.abs();
    let x = ((aa - 2.0) / (aa + 2.0)).sqrt();
    // artanh via the log form; x < 1 strictly for finite alpha
    let artanh = 0.5 * ((1.0 + x) / (1.0 - x)).ln();
    Ok(artanh / root)
}

/// The two displayed sign ratios. With `u = tanh(eta sqrt(alpha^2-4))` and
/// `c± = (alpha±2)/sqrt(alpha^2-4)`:
///
/// ```text
/// ratioA = (1 - c+ u) / (1 - c- u)     (first condition  <=>  ratioA > 0)
/// ratioB = (1 + c+ u) / (1 + c- u)     (second condition <=>  ratioB > 0)
/// ```
///
/// For `alpha > 2` the prefactors are exactly `sqrt((alpha±2)/(alpha∓2))`;
/// the signed form keeps the equivalence valid for `alpha < -2` as well.
pub fn tanh_conditions(alpha: f64, eta: f64) -> Result<(f64, f64)> {
    let root = check_alpha(alpha)?;
    let u = (eta * root).tanh();
    let c_plus = (alpha + 2.0) / root;
    let c_minus = (alpha - 2.0) / root;
    let den_a = 1.0 - c_minus * u;
    let den_b = 1.0 + c_minus * u;
    if den_a.abs() <= 1e-14 || den_b.abs() <= 1e-14 {
        return Err(Error::Singular {
            eta,
            context: format!("tanh-ratio denominator vanishes ({den_a:e}, {den_b:e})"),
        });
    }
    Ok(((1.0 - c_plus * u) / den_a, (1.0 + c_plus * u) / den_b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Admissible,
    Inadmissible,
    /// Within `BOUNDARY_BAND` of `|eta| = eta_0`.
    Boundary,
    /// `eta = 0` forces `epsilon = 0`, which violates the standing
    /// assumption.
    Excluded,
    Singular,
}

/// One classified grid point of the `(alpha, eta)` scan.
#[derive(Debug, Clone, Serialize)]
pub struct RegionPoint {
    pub alpha: f64,
    pub eta: f64,
    pub epsilon: f64,
    pub ratio_a: f64,
    pub ratio_b: f64,
    pub cond_a: bool,
    pub cond_b: bool,
    pub admissible: bool,
    pub eta0: f64,
    pub classification: Classification,
    /// Whether the coefficient route, the tanh route and the window
    /// membership all agree (always true for boundary/excluded points, which
    /// are not judged).
    pub consistent: bool,
    pub error: Option<String>,
}

/// Classifies every `(alpha, eta)` pair of the grids, in input order. Grid
/// validation errors abort; per-point singularities are recorded on the
/// point.
pub fn scan_region(alpha_grid: &[f64], eta_grid: &[f64]) -> Result<Vec<RegionPoint>> {
    for &a in alpha_grid {
        check_alpha(a)?;
    }
    for &h in eta_grid {
        if !h.is_finite() {
            return Err(Error::Domain(format!("eta grid entry not finite: {h}")));
        }
    }
    let mut out = Vec::with_capacity(alpha_grid.len() * eta_grid.len());
    for &alpha in alpha_grid {
        let eta0 = eta_window(alpha)?;
        for &eta in eta_grid {
            out.push(classify(alpha, eta, eta0));
        }
    }
    Ok(out)
}

fn classify(alpha: f64, eta: f64, eta0: f64) -> RegionPoint {
    let epsilon = alpha * eta;
    let mut point = RegionPoint {
        alpha,
        eta,
        epsilon,
        ratio_a: f64::NAN,
        ratio_b: f64::NAN,
        cond_a: false,
        cond_b: false,
        admissible: false,
        eta0,
        classification: Classification::Excluded,
        consistent: true,
        error: None,
    };
    if eta == 0.0 {
        point.error = Some("eta = 0 gives epsilon = 0: epsilon^2 > 4 eta^2 violated".into());
        return point;
    }
    let ratios = match tanh_conditions(alpha, eta) {
        Ok(r) => r,
        Err(e) => {
            point.classification = Classification::Singular;
            point.error = Some(e.to_string());
            return point;
        }
    };
    point.ratio_a = ratios.0;
    point.ratio_b = ratios.1;
    let tanh_a = ratios.0 > 0.0;
    let tanh_b = ratios.1 > 0.0;

    // full coefficient route
    let eq_conditions =
        make_parameters(epsilon, eta.into()).and_then(|p| admissibility(&coefficient_set(&p)));
    let (cond_a, cond_b) = match eq_conditions {
        Ok(c) => c,
        Err(e) => {
            point.classification = Classification::Singular;
            point.error = Some(e.to_string());
            return point;
        }
    };
    point.cond_a = cond_a;
    point.cond_b = cond_b;
    point.admissible = cond_a && cond_b;

    if (eta.abs() - eta0).abs() <= BOUNDARY_BAND {
        point.classification = Classification::Boundary;
        return point;
    }
    point.classification = if point.admissible {
        Classification::Admissible
    } else {
        Classification::Inadmissible
    };
    let in_window = eta.abs() < eta0;
    point.consistent = cond_a == tanh_a && cond_b == tanh_b && point.admissible == in_window;
    point
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn window_closed_form_at_three() {
        // (1/sqrt(5)) artanh(sqrt(1/5)), evaluated in high precision
        let eta0 = eta_window(3.0).unwrap();
        assert_relative_eq!(eta0, 0.215_204_470_482_002, max_relative = 1e-12);
    }

    #[test]
    fn window_is_even_in_alpha() {
        for a in [2.5, 3.0, 6.0, 25.0] {
            assert_relative_eq!(
                eta_window(a).unwrap(),
                eta_window(-a).unwrap(),
                max_relative = 1e-15
            );
        }
    }

    #[test]
    fn window_shrinks_for_large_alpha() {
        let mut prev = eta_window(3.0).unwrap();
        for a in [4.0, 6.0, 10.0, 20.0, 50.0] {
            let next = eta_window(a).unwrap();
            assert!(next < prev, "eta0 not decreasing at alpha = {a}");
            prev = next;
        }
    }

    #[test]
    fn window_rejects_small_alpha() {
        assert!(eta_window(2.0).is_err());
        assert!(eta_window(-1.0).is_err());
        assert!(tanh_conditions(1.9, 0.1).is_err());
    }

    #[test]
    fn ratios_at_eta_zero_are_unity() {
        let (a, b) = tanh_conditions(3.0, 0.0).unwrap();
        assert_relative_eq!(a, 1.0, max_relative = 1e-15);
        assert_relative_eq!(b, 1.0, max_relative = 1e-15);
    }

    #[test]
    fn ratios_inside_and_outside_window() {
        let (a, b) = tanh_conditions(3.0, 0.1).unwrap();
        assert!(a > 0.0 && b > 0.0);
        let (a, _b) = tanh_conditions(3.0, 0.3).unwrap();
        assert!(a <= 0.0);
    }

    #[test]
    fn tanh_ratio_matches_coefficient_ratio() {
        // for real eta the first ratio *is* kA+/kA-, the second is -kB+/kB-
        for (alpha, eta) in [(3.0, 0.1), (3.0, -0.17), (-3.0, 0.08), (5.0, 0.05)] {
            let (ra, rb) = tanh_conditions(alpha, eta).unwrap();
            let c = coefficient_set(&make_parameters(alpha * eta, eta.into()).unwrap());
            assert_relative_eq!(ra, (c.k_a_plus / c.k_a_minus).re, max_relative = 1e-10);
            assert_relative_eq!(rb, -(c.k_b_plus / c.k_b_minus).re, max_relative = 1e-10);
        }
    }

    #[test]
    fn scan_classifies_window_membership() {
        let etas = [
            -0.4, -0.25, -0.2, -0.1, -0.05, 0.0, 0.05, 0.1, 0.2, 0.25, 0.4,
        ];
        let points = scan_region(&[3.0], &etas).unwrap();
        assert_eq!(points.len(), etas.len());
        for p in &points {
            assert!(p.consistent, "inconsistent at eta = {}", p.eta);
            let expect = if p.eta == 0.0 {
                Classification::Excluded
            } else if p.eta.abs() < 0.215 {
                Classification::Admissible
            } else {
                Classification::Inadmissible
            };
            assert_eq!(p.classification, expect, "eta = {}", p.eta);
        }
    }

    #[test]
    fn scan_is_symmetric_in_eta() {
        let etas: Vec<f64> = (1..40).map(|i| i as f64 * 0.01).collect();
        let plus = scan_region(&[3.0], &etas).unwrap();
        let minus: Vec<f64> = etas.iter().map(|h| -h).collect();
        let minus = scan_region(&[3.0], &minus).unwrap();
        for (p, m) in plus.iter().zip(minus.iter()) {
            assert_eq!(p.classification, m.classification, "eta = {}", p.eta);
        }
    }

    #[test]
    fn scan_rejects_bad_alpha_grid() {
        assert!(scan_region(&[2.1, 1.0], &[0.1]).is_err());
        // alpha = 2.1 itself is fine; eta = 0 is excluded per point
        let pts = scan_region(&[2.1], &[0.0]).unwrap();
        assert_eq!(pts[0].classification, Classification::Excluded);
        assert!(pts[0].error.is_some());
    }
}
