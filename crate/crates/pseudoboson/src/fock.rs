//! Independent verification layer on the truncated number-state space.
//!
//! Ladder operators become finite matrices on the first D levels, the
//! similarity generator `M = epsilon a†a + eta a^2 + conj(eta) a†^2`
//! exponentiates to the transform `S`, and the operator identities of the
//! model are checked as matrix identities on an interior block (truncation
//! error concentrates at the matrix edge, so comparisons stay away from it).
//! A composite Gauss-Legendre rule provides the quadrature cross-check for
//! the closed-form moment integrals.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::build_family;
use crate::gauss::GaussPolyFn;
use crate::params::{coefficient_set, ParameterPoint};

/// Default truncation size for oracle runs.
pub const DEFAULT_DIM: usize = 80;
/// Default interior comparison block.
pub const DEFAULT_BLOCK: usize = 20;

/// A dense operator on the first `dim` number states.
#[derive(Debug, Clone)]
pub struct TruncatedOperator {
    pub dim: usize,
    pub mat: DMatrix<Complex64>,
}

impl TruncatedOperator {
    pub fn from_matrix(mat: DMatrix<Complex64>) -> Self {
        assert_eq!(mat.nrows(), mat.ncols(), "operator matrix must be square");
        Self {
            dim: mat.nrows(),
            mat,
        }
    }

    /// The annihilation matrix: `a[n, n+1] = sqrt(n+1)`.
    pub fn annihilation(dim: usize) -> Self {
        let mat = DMatrix::from_fn(dim, dim, |i, j| {
            if j == i + 1 {
                Complex64::from((j as f64).sqrt())
            } else {
                Complex64::ZERO
            }
        });
        Self { dim, mat }
    }

    /// Conjugate transpose of the annihilation matrix.
    pub fn creation(dim: usize) -> Self {
        let a = Self::annihilation(dim);
        Self {
            dim,
            mat: a.mat.adjoint(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            dim,
            mat: DMatrix::identity(dim, dim),
        }
    }

    /// Generator of the similarity transform,
    /// `M = epsilon a†a + eta a^2 + conj(eta) a†^2` (Hermitian).
    pub fn s_generator(p: &ParameterPoint, dim: usize) -> Self {
        let a = Self::annihilation(dim).mat;
        let ad = a.adjoint();
        let mat = (&ad * &a) * Complex64::from(p.epsilon)
            + (&a * &a) * p.eta
            + (&ad * &ad) * p.eta.conj();
        Self { dim, mat }
    }

    pub fn adjoint(&self) -> Self {
        Self {
            dim: self.dim,
            mat: self.mat.adjoint(),
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            dim: self.dim,
            mat: &self.mat * s,
        }
    }
}

/// Max-entry modulus of the leading `block x block` corner.
fn block_max(m: &DMatrix<Complex64>, block: usize) -> f64 {
    let b = block.min(m.nrows());
    let mut worst = 0.0f64;
    for i in 0..b {
        for j in 0..b {
            worst = worst.max(m[(i, j)].norm());
        }
    }
    worst
}

fn one_norm(m: &DMatrix<Complex64>) -> f64 {
    (0..m.ncols())
        .map(|j| m.column(j).iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Scaling-and-squaring matrix exponential with a truncated-series kernel.
///
/// The argument is scaled by `2^-s` until its 1-norm is at most 1/4, the
/// series is summed until the term norm falls below `1e-18` of the running
/// sum (the geometric tail is then far below the `1e-12` kernel contract),
/// and the result is squared `s` times.
pub fn matrix_exponential(m: &TruncatedOperator) -> Result<TruncatedOperator> {
    const THETA: f64 = 0.25;
    const MAX_TERMS: usize = 60;
    let dim = m.dim;
    let norm = one_norm(&m.mat);
    if !norm.is_finite() {
        return Err(Error::Convergence("matrix has non-finite entries".into()));
    }
    let s = if norm > THETA {
        (norm / THETA).log2().ceil() as u32
    } else {
        0
    };
    let x = &m.mat / Complex64::from(2f64.powi(s as i32));
    let mut sum = DMatrix::<Complex64>::identity(dim, dim);
    let mut term = DMatrix::<Complex64>::identity(dim, dim);
    let mut converged = false;
    for k in 1..=MAX_TERMS {
        term = (&term * &x) / Complex64::from(k as f64);
        sum += &term;
        if one_norm(&term) <= 1e-18 * one_norm(&sum).max(1.0) {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Convergence(format!(
            "series tail above tolerance after {MAX_TERMS} terms (scaled 1-norm {:e})",
            one_norm(&x)
        )));
    }
    for _ in 0..s {
        sum = &sum * &sum;
    }
    Ok(TruncatedOperator { dim, mat: sum })
}

/// Residuals of the defining conjugations `S a S^-1 = kA1 a + kA2 a†` and
/// `S a† S^-1 = kB1 a + kB2 a†`, as max-entry deviations on the leading
/// `block x block` corner.
#[derive(Debug, Clone, Serialize)]
pub struct ConjugationResiduals {
    pub dim: usize,
    pub block: usize,
    pub res_a: f64,
    pub res_b: f64,
}

pub fn verify_conjugation(
    p: &ParameterPoint,
    dim: usize,
    block: usize,
) -> Result<ConjugationResiduals> {
    if block == 0 || 3 * block > dim {
        return Err(Error::Domain(format!(
            "interior block required: block <= dim/3 (got dim = {dim}, block = {block})"
        )));
    }
    let ks = coefficient_set(p);
    let gen = TruncatedOperator::s_generator(p, dim);
    let s = matrix_exponential(&gen)?;
    let s_inv = matrix_exponential(&gen.scale(Complex64::from(-1.0)))?;
    let a = TruncatedOperator::annihilation(dim).mat;
    let ad = TruncatedOperator::creation(dim).mat;

    let lhs_a = &s.mat * (&a * &s_inv.mat);
    let rhs_a = &a * ks.k_a1 + &ad * ks.k_a2;
    let lhs_b = &s.mat * (&ad * &s_inv.mat);
    let rhs_b = &a * ks.k_b1 + &ad * ks.k_b2;
    Ok(ConjugationResiduals {
        dim,
        block,
        res_a: block_max(&(lhs_a - rhs_a), block),
        res_b: block_max(&(lhs_b - rhs_b), block),
    })
}

/// Residual of the single-constant relations `phi_n = gamma S Phi_n`,
/// `psi_n = (1/gamma) S^-1 Phi_n`.
#[derive(Debug, Clone, Serialize)]
pub struct SingleConstantReport {
    pub dim: usize,
    pub n_max: usize,
    /// Least-squares fit of `gamma` from the n = 0 column alone.
    pub gamma: Complex64,
    /// Max over n of the relative deviation of the phi expansion from
    /// `gamma S e_n`.
    pub dev_phi: f64,
    /// Same on the psi side with `1/gamma` and `S^-1`.
    pub dev_psi: f64,
    /// Per-n least squares estimates; all agree with `gamma` when the
    /// single-constant claim holds.
    pub gamma_per_n: Vec<Complex64>,
}

pub fn verify_single_constant(
    p: &ParameterPoint,
    dim: usize,
    n_max: usize,
) -> Result<SingleConstantReport> {
    if n_max == 0 || 4 * n_max > dim {
        return Err(Error::Domain(format!(
            "n_max <= dim/4 required (got dim = {dim}, n_max = {n_max})"
        )));
    }
    let family = build_family(p, n_max)?;
    let gen = TruncatedOperator::s_generator(p, dim);
    let s = matrix_exponential(&gen)?;
    let s_inv = matrix_exponential(&gen.scale(Complex64::from(-1.0)))?;

    let (u, w) = family.fock_coefficients(dim);
    let fit = |col: &DVector<Complex64>, v: &DVector<Complex64>| col.dotc(v) / col.dotc(col);

    let w0: DVector<Complex64> = s.mat.column(0).into_owned();
    let gamma = fit(&w0, &u[0]);
    if gamma.norm() == 0.0 {
        return Err(Error::Convergence(
            "gamma fit degenerate (zero column)".into(),
        ));
    }
    let mut dev_phi = 0.0f64;
    let mut dev_psi = 0.0f64;
    let mut gamma_per_n = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let col: DVector<Complex64> = s.mat.column(n).into_owned();
        gamma_per_n.push(fit(&col, &u[n]));
        dev_phi = dev_phi.max((&u[n] - &col * gamma).norm() / u[n].norm());
        let col_inv: DVector<Complex64> = s_inv.mat.column(n).into_owned();
        dev_psi = dev_psi.max((&w[n] - &col_inv / gamma).norm() / w[n].norm());
    }
    Ok(SingleConstantReport {
        dim,
        n_max,
        gamma,
        dev_phi,
        dev_psi,
        gamma_per_n,
    })
}

/// Interior-block residuals of `HS = Sh` and `SH† = hS` with
/// `H = omega B A` and `h = omega a†a`.
///
/// Residuals are measured relative to the magnitude of the products being
/// compared: the comparands grow like `n e^theta n` along the diagonal at
/// eta = 0, so an absolute deviation would merely restate their size.
#[derive(Debug, Clone, Serialize)]
pub struct IntertwiningResiduals {
    pub dim: usize,
    pub block: usize,
    pub omega: f64,
    /// `max|HS - Sh| / max(1, |HS|, |Sh|)` on the block.
    pub res_hs_sh: f64,
    /// `max|S H† - h S| / max(1, |S H†|, |h S|)` on the block.
    pub res_sh_hs: f64,
    pub res_hs_sh_abs: f64,
    pub res_sh_hs_abs: f64,
}

pub fn verify_intertwining(
    p: &ParameterPoint,
    dim: usize,
    block: usize,
    omega: f64,
) -> Result<IntertwiningResiduals> {
    if block == 0 || 3 * block > dim {
        return Err(Error::Domain(format!(
            "interior block required: block <= dim/3 (got dim = {dim}, block = {block})"
        )));
    }
    let ks = coefficient_set(p);
    let a = TruncatedOperator::annihilation(dim).mat;
    let ad = TruncatedOperator::creation(dim).mat;
    let op_a = &a * ks.k_a1 + &ad * ks.k_a2;
    let op_b = &a * ks.k_b1 + &ad * ks.k_b2;
    let h_big = (&op_b * &op_a) * Complex64::from(omega);
    let h_small = (&ad * &a) * Complex64::from(omega);
    let s = matrix_exponential(&TruncatedOperator::s_generator(p, dim))?;

    let hs = &h_big * &s.mat;
    let sh = &s.mat * &h_small;
    let abs1 = block_max(&(&hs - &sh), block);
    let scale1 = block_max(&hs, block).max(block_max(&sh, block)).max(1.0);

    let shd = &s.mat * &h_big.adjoint();
    let hds = &h_small * &s.mat;
    let abs2 = block_max(&(&shd - &hds), block);
    let scale2 = block_max(&shd, block).max(block_max(&hds, block)).max(1.0);

    Ok(IntertwiningResiduals {
        dim,
        block,
        omega,
        res_hs_sh: abs1 / scale1,
        res_sh_hs: abs2 / scale2,
        res_hs_sh_abs: abs1,
        res_sh_hs_abs: abs2,
    })
}

/// Self-consistency of the exponential kernel: max-entry deviation of
/// `exp(M) exp(-M)` from the identity on the interior block `dim/3`.
pub fn expm_self_check(p: &ParameterPoint, dim: usize) -> Result<f64> {
    let gen = TruncatedOperator::s_generator(p, dim);
    let e = matrix_exponential(&gen)?;
    let e_inv = matrix_exponential(&gen.scale(Complex64::from(-1.0)))?;
    let prod = &e.mat * &e_inv.mat;
    let block = (dim / 3).max(1);
    let mut dev = 0.0f64;
    for i in 0..block {
        for j in 0..block {
            let delta = if i == j { 1.0 } else { 0.0 };
            dev = dev.max((prod[(i, j)] - delta).norm());
        }
    }
    Ok(dev)
}

// ---------------------------------------------------------------------------
// Quadrature oracle
// ---------------------------------------------------------------------------

const GL_ORDER: usize = 24;

/// Nodes and weights of the `GL_ORDER`-point Gauss-Legendre rule on [-1, 1],
/// by Newton iteration on the Legendre recurrence.
fn gauss_legendre_rule() -> ([f64; GL_ORDER], [f64; GL_ORDER]) {
    let n = GL_ORDER;
    let mut xs = [0.0; GL_ORDER];
    let mut ws = [0.0; GL_ORDER];
    let eval = |x: f64| -> (f64, f64) {
        let mut p0 = 1.0f64;
        let mut p1 = x;
        for k in 2..=n {
            let kf = k as f64;
            let next = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
            p0 = p1;
            p1 = next;
        }
        let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
        (p1, dp)
    };
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = eval(x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = eval(x);
        xs[i] = x;
        ws[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (xs, ws)
}

/// Half-width that pushes the bare-Gaussian tail of the pairing integrand to
/// about `e^{-80}`: `sqrt(2 * 40 / Re C)` with `C` the combined width.
pub fn default_half_width(bra: &GaussPolyFn, ket: &GaussPolyFn) -> f64 {
    let c = (bra.width.conj() + ket.width) / 2.0;
    (2.0 * 40.0 / c.re).sqrt()
}

/// Independent numerical evaluation of `<bra, ket>` by composite
/// Gauss-Legendre quadrature over `[-half_width, half_width]` with roughly
/// `nodes` total evaluation points.
///
/// The endpoint integrand must be negligible against its central scale
/// (1e-12 relative); otherwise the interval is too short for the requested
/// polynomial degrees and a tolerance error is returned.
pub fn quadrature_inner_product(
    bra: &GaussPolyFn,
    ket: &GaussPolyFn,
    half_width: f64,
    nodes: usize,
) -> Result<Complex64> {
    if half_width.is_nan() || half_width <= 0.0 || nodes == 0 {
        return Err(Error::Domain(
            "half_width must be positive and nodes nonzero".into(),
        ));
    }
    let integrand = |x: f64| bra.evaluate(x).conj() * ket.evaluate(x);
    let central_scale = [0.0, 0.25 * half_width, 0.5 * half_width]
        .iter()
        .map(|&x| integrand(x).norm())
        .fold(f64::MIN_POSITIVE, f64::max);
    let tail = integrand(half_width)
        .norm()
        .max(integrand(-half_width).norm());
    if tail > 1e-12 * central_scale {
        return Err(Error::Tolerance(format!(
            "integrand tail {tail:e} exceeds 1e-12 of central scale {central_scale:e}; enlarge half_width"
        )));
    }

    let (xs, ws) = gauss_legendre_rule();
    let panels = (nodes / GL_ORDER).max(1);
    let step = 2.0 * half_width / panels as f64;
    let mut total = Complex64::ZERO;
    for p in 0..panels {
        let lo = -half_width + p as f64 * step;
        let mid = lo + 0.5 * step;
        let half = 0.5 * step;
        for (x, w) in xs.iter().zip(ws.iter()) {
            total += integrand(mid + half * x) * (w * half);
        }
    }
    Ok(total)
}

pub const DEFAULT_QUADRATURE_NODES: usize = 2400;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::{gaussian_moment, inner_product};
    use crate::hermite::hermite_function;
    use crate::params::make_parameters;
    use crate::poly::ComplexPolynomial;
    use approx::assert_relative_eq;

    fn point(e: f64, h: f64) -> ParameterPoint {
        make_parameters(e, Complex64::new(h, 0.0)).unwrap()
    }

    #[test]
    fn ladder_commutator_on_truncation() {
        // [a, a†] = 1 except in the last diagonal entry; off-diagonal
        // entries vanish exactly, diagonal ones up to rounding of sqrt(n)^2
        let d = 12;
        let a = TruncatedOperator::annihilation(d).mat;
        let ad = TruncatedOperator::creation(d).mat;
        let comm = &a * &ad - &ad * &a;
        for i in 0..d {
            for j in 0..d {
                if i != j {
                    assert_eq!(comm[(i, j)], Complex64::ZERO, "entry ({i}, {j})");
                } else if i == d - 1 {
                    // truncation corrupts only this entry
                    let expect = -((d - 1) as f64);
                    assert_relative_eq!(comm[(i, i)].re, expect, max_relative = 1e-14);
                } else {
                    assert_relative_eq!(comm[(i, i)].re, 1.0, epsilon = 1e-13);
                }
            }
        }
    }

    #[test]
    fn exponential_of_zero_and_diagonal() {
        let z = TruncatedOperator::from_matrix(DMatrix::zeros(5, 5));
        let e = matrix_exponential(&z).unwrap();
        assert_eq!(e.mat, DMatrix::identity(5, 5));

        let d = DMatrix::from_diagonal(&DVector::from_vec(vec![
            Complex64::from(0.0),
            Complex64::from(1.0),
            Complex64::from(2.0),
        ]));
        let e = matrix_exponential(&TruncatedOperator::from_matrix(d)).unwrap();
        for (i, want) in [1.0, 1.0f64.exp(), 2.0f64.exp()].iter().enumerate() {
            assert_relative_eq!(e.mat[(i, i)].re, *want, max_relative = 1e-13);
        }
        let offdiag = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
            .map(|(i, j)| e.mat[(i, j)].norm())
            .fold(0.0f64, f64::max);
        assert!(offdiag <= 1e-12);
    }

    #[test]
    fn exponential_of_nilpotent_is_exact() {
        let mut m = DMatrix::<Complex64>::zeros(3, 3);
        m[(0, 1)] = Complex64::from(1.0);
        m[(0, 2)] = Complex64::from(2.0);
        m[(1, 2)] = Complex64::from(3.0);
        let e = matrix_exponential(&TruncatedOperator::from_matrix(m.clone())).unwrap();
        let expect = DMatrix::identity(3, 3) + &m + (&m * &m) * Complex64::from(0.5);
        let dev = (&e.mat - expect)
            .iter()
            .map(|z| z.norm())
            .fold(0.0f64, f64::max);
        assert!(dev <= 1e-12, "dev = {dev:e}");
    }

    #[test]
    fn exponential_self_consistency_interior() {
        for (e, h, d) in [(1.0, 0.0, 60), (0.3, 0.1, 60), (0.3, 0.1, 80)] {
            let dev = expm_self_check(&point(e, h), d).unwrap();
            assert!(dev <= 1e-9, "({e}, {h}) D = {d}: {dev:e}");
        }
    }

    #[test]
    fn conjugation_identity_eta_zero() {
        let res = verify_conjugation(&point(1.0, 0.0), 60, 20).unwrap();
        assert!(res.res_a <= 1e-9, "res_a = {:e}", res.res_a);
        assert!(res.res_b <= 1e-9, "res_b = {:e}", res.res_b);
    }

    #[test]
    fn conjugation_identity_generic_point() {
        let res = verify_conjugation(&point(0.3, 0.1), 80, 20).unwrap();
        assert!(res.res_a <= 1e-6, "res_a = {:e}", res.res_a);
        assert!(res.res_b <= 1e-6, "res_b = {:e}", res.res_b);
    }

    #[test]
    fn conjugation_residual_shrinks_with_dimension() {
        let p = point(0.3, 0.1);
        let r40 = verify_conjugation(&p, 40, 12).unwrap();
        let r80 = verify_conjugation(&p, 80, 12).unwrap();
        assert!(r80.res_a <= r40.res_a + 1e-12);
        assert!(r80.res_b <= r40.res_b + 1e-12);
    }

    #[test]
    fn block_precondition_is_enforced() {
        assert!(verify_conjugation(&point(0.3, 0.1), 10, 20).is_err());
        assert!(verify_intertwining(&point(0.3, 0.1), 10, 20, 1.0).is_err());
        assert!(verify_single_constant(&point(0.3, 0.1), 20, 8).is_err());
    }

    #[test]
    fn single_constant_eta_zero() {
        let rep = verify_single_constant(&point(1.0, 0.0), 60, 8).unwrap();
        // diagonal transform: gamma = 1, real
        assert!((rep.gamma - 1.0).norm() <= 1e-10, "gamma = {}", rep.gamma);
        assert!(rep.gamma.im.abs() <= 1e-12);
        assert!(rep.dev_phi <= 1e-8, "dev_phi = {:e}", rep.dev_phi);
        assert!(rep.dev_psi <= 1e-8, "dev_psi = {:e}", rep.dev_psi);
    }

    #[test]
    fn single_constant_generic_point() {
        let rep = verify_single_constant(&point(0.3, 0.1), 80, 8).unwrap();
        assert!(rep.dev_phi <= 1e-5, "dev_phi = {:e}", rep.dev_phi);
        assert!(rep.dev_psi <= 1e-5, "dev_psi = {:e}", rep.dev_psi);
        // frozen from an independent reference run
        assert!((rep.gamma - Complex64::from(0.967_805_370_499_133)).norm() <= 1e-9);
        for g in &rep.gamma_per_n {
            assert!((g - rep.gamma).norm() <= 1e-5 * rep.gamma.norm());
        }
    }

    #[test]
    fn intertwining_residuals() {
        let res = verify_intertwining(&point(1.0, 0.0), 60, 20, 1.0).unwrap();
        assert!(res.res_hs_sh <= 1e-9, "{:e}", res.res_hs_sh);
        assert!(res.res_sh_hs <= 1e-9, "{:e}", res.res_sh_hs);

        let res = verify_intertwining(&point(0.3, 0.1), 80, 20, 1.0).unwrap();
        assert!(res.res_hs_sh <= 1e-6, "{:e}", res.res_hs_sh);
        assert!(res.res_sh_hs <= 1e-6, "{:e}", res.res_sh_hs);
    }

    #[test]
    fn intertwining_scales_linearly_in_omega() {
        let r1 = verify_intertwining(&point(0.3, 0.1), 60, 15, 1.0).unwrap();
        let r2 = verify_intertwining(&point(0.3, 0.1), 60, 15, 2.0).unwrap();
        assert_relative_eq!(
            r2.res_hs_sh_abs,
            2.0 * r1.res_hs_sh_abs,
            max_relative = 1e-6
        );
    }

    #[test]
    fn quadrature_matches_moments() {
        // normalized Gaussian
        let phi0 = hermite_function(0);
        let v =
            quadrature_inner_product(&phi0, &phi0, default_half_width(&phi0, &phi0), 2400).unwrap();
        assert!((v - 1.0).norm() <= 1e-12);

        // x^6 e^{-(2+i) x^2} as the pairing of two half-width cubics:
        // conj(c_bra) + c_ket = 2c with c_bra = conj(c), c_ket = c
        let c = Complex64::new(2.0, 1.0);
        let x3 = ComplexPolynomial::monomial(3, Complex64::from(1.0));
        let bra = GaussPolyFn::new(x3.clone(), c.conj()).unwrap();
        let ket = GaussPolyFn::new(x3, c).unwrap();
        let direct = gaussian_moment(c, 3).unwrap();
        let exact = inner_product(&bra, &ket).unwrap();
        assert!((direct - exact).norm() <= 1e-14);
        let quad =
            quadrature_inner_product(&bra, &ket, default_half_width(&bra, &ket), 2400).unwrap();
        assert!(
            (direct - quad).norm() <= 1e-10,
            "diff = {:e}",
            (direct - quad).norm()
        );
    }

    #[test]
    fn hermite_expansion_matches_quadrature() {
        // coefficients <Phi_m, phi_2> at (0.3, 0.1) for m < 40, both routes
        let family = build_family(&point(0.3, 0.1), 4).unwrap();
        let g = &family.phi[2];
        let coeffs = crate::family::hermite_expansion(g, 40);
        for m in [0usize, 1, 2, 5, 10, 20, 30, 39] {
            let phi_m = hermite_function(m);
            let hw = default_half_width(&phi_m, g);
            let quad = quadrature_inner_product(&phi_m, g, hw, 2400).unwrap();
            assert!(
                (coeffs[m] - quad).norm() <= 1e-9,
                "m = {m}: expansion {} vs quadrature {quad}",
                coeffs[m]
            );
        }
    }

    #[test]
    fn quadrature_cross_family_orthogonality() {
        let family = build_family(&point(0.3, 0.1), 6).unwrap();
        let bra = &family.psi[3];
        let ket = &family.phi[5];
        let hw = default_half_width(bra, ket);
        let quad = quadrature_inner_product(bra, ket, hw, 2400).unwrap();
        let exact = inner_product(bra, ket).unwrap();
        assert!(quad.norm() <= 1e-8, "pairing = {quad}");
        assert!((quad - exact).norm() <= 1e-9);
    }

    #[test]
    fn quadrature_rejects_short_interval() {
        let f = build_family(&point(0.3, 0.1), 12).unwrap();
        let err = quadrature_inner_product(&f.psi[12], &f.phi[12], 1.5, 2400).unwrap_err();
        assert!(matches!(err, Error::Tolerance(_)));
    }
}
