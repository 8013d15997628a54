//! Construction of the paired function families and all family-level checks:
//! biorthonormality, ladder and number-operator identities, Hermite special
//! cases, norm-growth diagnostics and finite-rank frame truncations.
//!
//! The families are built by the polynomial recursions
//!
//! ```text
//! p_{n+1}^phi = (1/kA-) x p_n^phi + kB- (p_n^phi)'
//! p_{n+1}^psi = (-1/conj(kB-)) x p_n^psi - conj(kA-) (p_n^psi)'
//! ```
//!
//! with the `1/sqrt(n!)` prefactors folded in one factor `1/sqrt(n)` at a
//! time. Normalization fixes `||phi_0|| = 1` with a real positive constant
//! and then solves `<psi_0, phi_0> = 1` for the second family's constant, so
//! every reported number is reproducible.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gauss::{apply_ladder, inner_product, GaussPolyFn};
use crate::hermite::hermite_polynomial;
use crate::params::{admissibility, coefficient_set, CoefficientSet, ParameterPoint};
use crate::poly::ComplexPolynomial;

pub const DEFAULT_N_MAX: usize = 20;

/// Paired sequences `{phi_n}`, `{psi_n}` up to `n_max`, all sharing one
/// Gaussian width per family.
#[derive(Debug, Clone)]
pub struct BiorthogonalFamily {
    pub params: ParameterPoint,
    pub coeffs: CoefficientSet,
    pub phi: Vec<GaussPolyFn>,
    pub psi: Vec<GaussPolyFn>,
    pub n_max: usize,
}

pub fn build_family(p: &ParameterPoint, n_max: usize) -> Result<BiorthogonalFamily> {
    let coeffs = coefficient_set(p);
    let (cond_a, cond_b) = admissibility(&coeffs)?;
    if !(cond_a && cond_b) {
        return Err(Error::Inadmissible(format!(
            "sign conditions (Re(kA+/kA-) > 0, Re(kB+/kB-) < 0) = ({cond_a}, {cond_b}); a vacuum is not square-integrable"
        )));
    }
    let c_phi = coeffs.width_phi();
    let c_psi = coeffs.width_psi();

    let n0_phi = Complex64::from((c_phi.re / std::f64::consts::PI).powf(0.25));
    let phi0 = GaussPolyFn::new(ComplexPolynomial::constant(n0_phi), c_phi)?;
    let psi0_raw = GaussPolyFn::gaussian(c_psi)?;
    let overlap = inner_product(&psi0_raw, &phi0)?;
    let n0_psi = Complex64::from(1.0) / overlap.conj();
    let psi0 = psi0_raw.scale(n0_psi);

    let mut phi = vec![phi0];
    let mut psi = vec![psi0];
    let x_phi = Complex64::from(1.0) / coeffs.k_a_minus;
    let d_phi = coeffs.k_b_minus;
    let x_psi = -Complex64::from(1.0) / coeffs.k_b_minus.conj();
    let d_psi = -coeffs.k_a_minus.conj();
    for n in 0..n_max {
        let step = Complex64::from(1.0 / ((n + 1) as f64).sqrt());
        let p = &phi[n].poly;
        let next = p.mul_x().scale(x_phi).add(&p.differentiate().scale(d_phi));
        phi.push(GaussPolyFn {
            poly: next.scale(step),
            width: c_phi,
        });
        let q = &psi[n].poly;
        let next = q.mul_x().scale(x_psi).add(&q.differentiate().scale(d_psi));
        psi.push(GaussPolyFn {
            poly: next.scale(step),
            width: c_psi,
        });
    }
    Ok(BiorthogonalFamily {
        params: *p,
        coeffs,
        phi,
        psi,
        n_max,
    })
}

// ---------------------------------------------------------------------------
// Hermite-mode expansions
// ---------------------------------------------------------------------------

/// Expansion coefficients `<Phi_m, g>` for `m < modes` of an arbitrary
/// Gaussian-polynomial function.
///
/// The bare-Gaussian coefficients obey the closed two-term recurrence
/// `t_{m+2} = rho sqrt((m+1)/(m+2)) t_m` with `rho = (1-c)/(1+c)` and
/// `t_0 = pi^{-1/4} sqrt(pi / ((1+c)/2))`; polynomial factors enter through
/// the tridiagonal action of multiplication by x on mode coefficients. This
/// evaluates the same exact moment integrals as [`inner_product`] but stays
/// numerically stable at high mode index.
pub fn hermite_expansion(g: &GaussPolyFn, modes: usize) -> Vec<Complex64> {
    let deg = match g.poly.degree() {
        Some(d) => d,
        None => return vec![Complex64::ZERO; modes],
    };
    let len = modes + deg + 2;
    let c = g.width;
    let combined = (Complex64::from(1.0) + c) / 2.0;
    let rho = (Complex64::from(1.0) - c) / (Complex64::from(1.0) + c);
    let mut t = vec![Complex64::ZERO; len];
    t[0] = Complex64::from(std::f64::consts::PI.powf(-0.25))
        * (std::f64::consts::PI / combined).sqrt();
    for m in 0..len - 2 {
        t[m + 2] = rho * ((m + 1) as f64 / (m + 2) as f64).sqrt() * t[m];
    }

    let mut out = vec![Complex64::ZERO; modes];
    let mut w = t;
    for (j, pj) in g.poly.coeffs().iter().enumerate() {
        if j > 0 {
            // multiply the expanded function by x:
            // v_m = (sqrt(m+1) w_{m+1} + sqrt(m) w_{m-1}) / sqrt(2)
            let mut v = vec![Complex64::ZERO; w.len() - 1];
            for (m, vm) in v.iter_mut().enumerate() {
                let mut acc = ((m + 1) as f64).sqrt() * w[m + 1];
                if m >= 1 {
                    acc += (m as f64).sqrt() * w[m - 1];
                }
                *vm = acc * std::f64::consts::FRAC_1_SQRT_2;
            }
            w = v;
        }
        for (o, wm) in out.iter_mut().zip(w.iter()) {
            *o += pj * wm;
        }
    }
    out
}

/// Number of Hermite modes needed to capture a family member to roughly
/// machine precision, from the geometric decay `|rho|^{m/2}` of Gaussian
/// mode content.
pub fn expansion_modes(width: Complex64, need: usize) -> usize {
    let rho = ((Complex64::from(1.0) - width) / (Complex64::from(1.0) + width)).norm();
    if rho <= 1e-3 {
        return need + 4;
    }
    let digits_per_mode = (-rho.log10()).max(0.05);
    need + (16.0 / digits_per_mode).ceil() as usize + 12
}

fn lower(v: &DVector<Complex64>) -> DVector<Complex64> {
    let n = v.len();
    DVector::from_fn(n, |m, _| {
        if m + 1 < n {
            ((m + 1) as f64).sqrt() * v[m + 1]
        } else {
            Complex64::ZERO
        }
    })
}

fn raise(v: &DVector<Complex64>) -> DVector<Complex64> {
    let n = v.len();
    DVector::from_fn(n, |m, _| {
        if m >= 1 {
            (m as f64).sqrt() * v[m - 1]
        } else {
            Complex64::ZERO
        }
    })
}

impl BiorthogonalFamily {
    fn default_modes(&self) -> usize {
        expansion_modes(self.coeffs.width_phi(), self.n_max + 1)
            .max(expansion_modes(self.coeffs.width_psi(), self.n_max + 1))
    }

    /// Hermite-mode coefficient vectors of every family member, obtained by
    /// running the ladder recursion directly on mode coefficients
    /// (`B = kB1 a + kB2 a†` acts tridiagonally). This route has no
    /// large-coefficient cancellation and is what the verification routines
    /// pair and measure.
    pub fn fock_coefficients(
        &self,
        modes: usize,
    ) -> (Vec<DVector<Complex64>>, Vec<DVector<Complex64>>) {
        let c = &self.coeffs;
        let u0 = DVector::from_vec(hermite_expansion(&self.phi[0], modes));
        let w0 = DVector::from_vec(hermite_expansion(&self.psi[0], modes));
        let mut u = vec![u0];
        let mut w = vec![w0];
        for n in 0..self.n_max {
            let step = Complex64::from(1.0 / ((n + 1) as f64).sqrt());
            let prev = &u[n];
            u.push((lower(prev) * c.k_b1 + raise(prev) * c.k_b2) * step);
            let prev = &w[n];
            w.push((lower(prev) * c.k_a2.conj() + raise(prev) * c.k_a1.conj()) * step);
        }
        (u, w)
    }
}

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

/// Full pairing matrix `<psi_n, phi_m>` with its worst deviation from the
/// Kronecker delta.
pub struct BiorthReport {
    pub n_max: usize,
    pub pairing: Vec<Vec<Complex64>>,
    pub max_deviation: f64,
    /// Deviation restricted to `n, m <= 12`, the range the acceptance bound
    /// is stated for. Beyond it the pairing of `||psi_n|| ~ 1/||phi_n||`
    /// scales is increasingly limited by double precision itself.
    pub max_deviation_n12: f64,
}

pub fn verify_biorthonormality(f: &BiorthogonalFamily) -> BiorthReport {
    let modes = f.default_modes();
    let (u, w) = f.fock_coefficients(modes);
    let n = f.n_max + 1;
    let mut pairing = vec![vec![Complex64::ZERO; n]; n];
    let mut max_dev = 0.0f64;
    let mut max_dev_12 = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let v = w[i].dotc(&u[j]);
            pairing[i][j] = v;
            let delta = if i == j { 1.0 } else { 0.0 };
            let dev = (v - delta).norm();
            max_dev = max_dev.max(dev);
            if i <= 12 && j <= 12 {
                max_dev_12 = max_dev_12.max(dev);
            }
        }
    }
    BiorthReport {
        n_max: f.n_max,
        pairing,
        max_deviation: max_dev,
        max_deviation_n12: max_dev_12,
    }
}

/// Per-n relative deviations of the four ladder identities. Index n of each
/// vector holds the check involving `phi_n` / `psi_n`; entry 0 of the
/// lowering vectors is the vacuum annihilation check.
#[derive(Debug, Clone, Serialize)]
pub struct LadderReport {
    pub raise_phi: Vec<f64>,
    pub lower_phi: Vec<f64>,
    pub raise_psi: Vec<f64>,
    pub lower_psi: Vec<f64>,
    /// Worst deviation after dividing each entry by `1 + n^2`.
    pub max_scaled: f64,
}

impl LadderReport {
    pub fn passes(&self, base_tol: f64) -> bool {
        self.max_scaled <= base_tol
    }
}

fn scaled_max(devs: &[Vec<f64>]) -> f64 {
    let mut worst = 0.0f64;
    for v in devs {
        for (n, d) in v.iter().enumerate() {
            worst = worst.max(d / (1.0 + (n * n) as f64));
        }
    }
    worst
}

/// Checks, coefficient-wise, that the operator route reproduces the
/// recursion route: `B phi_n = sqrt(n+1) phi_{n+1}`,
/// `A phi_n = sqrt(n) phi_{n-1}` (with `A phi_0 = 0`), and the adjoint pair
/// on the second family. The family polynomials come from the three-term
/// recursion while the left-hand sides go through [`apply_ladder`], so the
/// two floating-point routes are genuinely independent.
pub fn ladder_consistency(f: &BiorthogonalFamily) -> LadderReport {
    let op_a = f.coeffs.op_a();
    let op_b = f.coeffs.op_b();
    let op_ad = f.coeffs.op_a_dagger();
    let op_bd = f.coeffs.op_b_dagger();

    let mut raise_phi = Vec::new();
    let mut lower_phi = Vec::new();
    let mut raise_psi = Vec::new();
    let mut lower_psi = Vec::new();

    for n in 0..f.n_max {
        let got = apply_ladder(&op_b, &f.phi[n]);
        let want = f.phi[n + 1]
            .poly
            .scale(Complex64::from(((n + 1) as f64).sqrt()));
        raise_phi.push(got.poly.rel_distance(&want));

        let got = apply_ladder(&op_ad, &f.psi[n]);
        let want = f.psi[n + 1]
            .poly
            .scale(Complex64::from(((n + 1) as f64).sqrt()));
        raise_psi.push(got.poly.rel_distance(&want));
    }
    for n in 0..=f.n_max {
        let got = apply_ladder(&op_a, &f.phi[n]);
        let dev = if n == 0 {
            got.poly.max_coeff_modulus() / f.phi[0].poly.max_coeff_modulus()
        } else {
            let want = f.phi[n - 1].poly.scale(Complex64::from((n as f64).sqrt()));
            got.poly.rel_distance(&want)
        };
        lower_phi.push(dev);

        let got = apply_ladder(&op_bd, &f.psi[n]);
        let dev = if n == 0 {
            got.poly.max_coeff_modulus() / f.psi[0].poly.max_coeff_modulus()
        } else {
            let want = f.psi[n - 1].poly.scale(Complex64::from((n as f64).sqrt()));
            got.poly.rel_distance(&want)
        };
        lower_psi.push(dev);
    }

    let max_scaled = scaled_max(&[
        raise_phi.clone(),
        lower_phi.clone(),
        raise_psi.clone(),
        lower_psi.clone(),
    ]);
    LadderReport {
        raise_phi,
        lower_phi,
        raise_psi,
        lower_psi,
        max_scaled,
    }
}

/// Number-operator eigenrelations `BA phi_n = n phi_n` and
/// `A†B† psi_n = n psi_n`, applied through the operator route.
#[derive(Debug, Clone, Serialize)]
pub struct EigenReport {
    pub phi: Vec<f64>,
    pub psi: Vec<f64>,
    pub max_scaled: f64,
}

impl EigenReport {
    pub fn passes(&self, base_tol: f64) -> bool {
        self.max_scaled <= base_tol
    }
}

pub fn number_eigencheck(f: &BiorthogonalFamily) -> EigenReport {
    let op_a = f.coeffs.op_a();
    let op_b = f.coeffs.op_b();
    let op_ad = f.coeffs.op_a_dagger();
    let op_bd = f.coeffs.op_b_dagger();
    let mut phi = Vec::new();
    let mut psi = Vec::new();
    for n in 0..=f.n_max {
        let got = apply_ladder(&op_b, &apply_ladder(&op_a, &f.phi[n]));
        let dev = if n == 0 {
            got.poly.max_coeff_modulus() / f.phi[0].poly.max_coeff_modulus()
        } else {
            got.poly
                .rel_distance(&f.phi[n].poly.scale(Complex64::from(n as f64)))
        };
        phi.push(dev);

        let got = apply_ladder(&op_ad, &apply_ladder(&op_bd, &f.psi[n]));
        let dev = if n == 0 {
            got.poly.max_coeff_modulus() / f.psi[0].poly.max_coeff_modulus()
        } else {
            got.poly
                .rel_distance(&f.psi[n].poly.scale(Complex64::from(n as f64)))
        };
        psi.push(dev);
    }
    let max_scaled = scaled_max(&[phi.clone(), psi.clone()]);
    EigenReport {
        phi,
        psi,
        max_scaled,
    }
}

/// Result of checking the closed Hermite forms
/// `p_n^phi = (-kB-)^n H_n` and `p_n^psi = conj(kA-)^n H_n`, which hold
/// exactly when `kA- kB- = -1/2`.
#[derive(Debug, Clone, Serialize)]
pub struct HermiteCaseReport {
    pub applicable: bool,
    pub product: Complex64,
    /// True when additionally `kA- = -kB- = 1/sqrt(2)` within tolerance; in
    /// that case the closed form *is* the standard `1/sqrt(n! 2^n)` Hermite
    /// function normalization.
    pub standard_boson_coefficients: bool,
    pub max_phi_deviation: f64,
    pub max_psi_deviation: f64,
}

pub fn hermite_case_check(f: &BiorthogonalFamily, tol: f64) -> HermiteCaseReport {
    let product = f.coeffs.hermite_product();
    let applicable = (product + 0.5).norm() <= tol;
    let inv_sqrt2 = Complex64::from(std::f64::consts::FRAC_1_SQRT_2);
    let standard = (f.coeffs.k_a_minus - inv_sqrt2).norm() <= tol
        && (f.coeffs.k_b_minus + inv_sqrt2).norm() <= tol;
    if !applicable {
        return HermiteCaseReport {
            applicable,
            product,
            standard_boson_coefficients: standard,
            max_phi_deviation: 0.0,
            max_psi_deviation: 0.0,
        };
    }
    let n0_phi = f.phi[0].poly.coeff(0);
    let n0_psi = f.psi[0].poly.coeff(0);
    let mut scale_phi = n0_phi;
    let mut scale_psi = n0_psi;
    let mut max_phi = 0.0f64;
    let mut max_psi = 0.0f64;
    for n in 1..=f.n_max {
        scale_phi *= -f.coeffs.k_b_minus / (n as f64).sqrt();
        scale_psi *= f.coeffs.k_a_minus.conj() / (n as f64).sqrt();
        let h = hermite_polynomial(n);
        max_phi = max_phi.max(f.phi[n].poly.rel_distance(&h.scale(scale_phi)));
        max_psi = max_psi.max(f.psi[n].poly.rel_distance(&h.scale(scale_psi)));
    }
    HermiteCaseReport {
        applicable,
        product,
        standard_boson_coefficients: standard,
        max_phi_deviation: max_phi,
        max_psi_deviation: max_psi,
    }
}

/// Norm products `d_n = ||phi_n|| ||psi_n||` and Gram-matrix condition
/// numbers — the quantitative symptom separating these families from a
/// rescaled orthonormal basis.
#[derive(Debug, Clone, Serialize)]
pub struct RieszReport {
    pub d: Vec<f64>,
    pub min_d: f64,
    /// `d[n_max] / d[0]`.
    pub growth_factor: f64,
    pub strictly_increasing_from_2: bool,
    pub gram_size: usize,
    pub gram_phi_condition: f64,
    pub gram_psi_condition: f64,
}

pub const DEFAULT_GRAM_SIZE: usize = 16;

pub fn riesz_diagnostic(f: &BiorthogonalFamily) -> RieszReport {
    let modes = f.default_modes();
    let (u, w) = f.fock_coefficients(modes);
    let d: Vec<f64> = (0..=f.n_max).map(|n| u[n].norm() * w[n].norm()).collect();
    let min_d = d.iter().copied().fold(f64::INFINITY, f64::min);
    let growth_factor = d[f.n_max] / d[0];
    let strictly_increasing_from_2 = d.windows(2).skip(2).all(|p| p[1] > p[0]);

    let k = DEFAULT_GRAM_SIZE.min(f.n_max + 1);
    let gram = |vs: &[DVector<Complex64>]| -> f64 {
        let g = DMatrix::from_fn(k, k, |i, j| vs[i].dotc(&vs[j]));
        let eig = g.symmetric_eigenvalues();
        let max = eig.iter().copied().fold(f64::MIN, f64::max);
        let min = eig.iter().copied().fold(f64::MAX, f64::min);
        max / min.max(max * f64::EPSILON)
    };
    RieszReport {
        min_d,
        growth_factor,
        strictly_increasing_from_2,
        gram_size: k,
        gram_phi_condition: gram(&u[..k]),
        gram_psi_condition: gram(&w[..k]),
        d,
    }
}

/// Rank-K truncations of the two frame operators on the first `dimension`
/// Hermite modes.
#[derive(Debug, Clone)]
pub struct FrameTruncation {
    pub dimension: usize,
    pub rank: usize,
    pub s_phi: DMatrix<Complex64>,
    pub s_psi: DMatrix<Complex64>,
}

pub fn frame_truncation(f: &BiorthogonalFamily, modes: usize, k: usize) -> Result<FrameTruncation> {
    if k > f.n_max {
        return Err(Error::Domain(format!(
            "frame rank K = {k} exceeds built family size n_max = {}",
            f.n_max
        )));
    }
    if modes == 0 {
        return Err(Error::Domain("mode count must be at least 1".into()));
    }
    let (u, w) = f.fock_coefficients(modes);
    let mut s_phi = DMatrix::zeros(modes, modes);
    let mut s_psi = DMatrix::zeros(modes, modes);
    for n in 0..k {
        s_phi += &u[n] * u[n].adjoint();
        s_psi += &w[n] * w[n].adjoint();
    }
    Ok(FrameTruncation {
        dimension: modes,
        rank: k,
        s_phi,
        s_psi,
    })
}

impl FrameTruncation {
    pub fn hermiticity_deviation(m: &DMatrix<Complex64>) -> f64 {
        (m - m.adjoint())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn min_eigenvalue(m: &DMatrix<Complex64>) -> f64 {
        m.clone()
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .fold(f64::MAX, f64::min)
    }

    /// Max-entry deviation of `S_phi S_psi` from the identity on the leading
    /// `block x block` corner. The exact operators are mutual inverses; the
    /// rank-K truncations are not, and this records by how much.
    pub fn product_identity_deviation(&self, block: usize) -> f64 {
        let prod = &self.s_phi * &self.s_psi;
        let b = block.min(self.dimension);
        let mut dev = 0.0f64;
        for i in 0..b {
            for j in 0..b {
                let delta = if i == j { 1.0 } else { 0.0 };
                dev = dev.max((prod[(i, j)] - delta).norm());
            }
        }
        dev
    }
}

/// Deviation of the rank-K resolution-of-identity truncation
/// `T_K = sum_{n<K} |phi_n><psi_n|` from the identity on the leading block
/// of `max(1, K/2)` Hermite modes.
#[derive(Debug, Clone, Serialize)]
pub struct ResolutionReport {
    pub modes: usize,
    pub rank: usize,
    pub block: usize,
    pub deviation: f64,
}

pub fn resolution_diagnostic(
    f: &BiorthogonalFamily,
    modes: usize,
    k: usize,
) -> Result<ResolutionReport> {
    if k > f.n_max {
        return Err(Error::Domain(format!(
            "resolution rank K = {k} exceeds built family size n_max = {}",
            f.n_max
        )));
    }
    let (u, w) = f.fock_coefficients(modes);
    let mut t = DMatrix::<Complex64>::zeros(modes, modes);
    for n in 0..k {
        t += &u[n] * w[n].adjoint();
    }
    let block = (k / 2).max(1).min(modes);
    let mut dev = 0.0f64;
    for i in 0..block {
        for j in 0..block {
            let delta = if i == j { 1.0 } else { 0.0 };
            dev = dev.max((t[(i, j)] - delta).norm());
        }
    }
    Ok(ResolutionReport {
        modes,
        rank: k,
        block,
        deviation: dev,
    })
}
