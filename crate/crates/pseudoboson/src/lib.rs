//! Two-parameter families of deformed bosonic ladder operators and the
//! biorthogonal Gaussian-polynomial function systems they generate.
//!
//! A real `epsilon` and a complex `eta` with `epsilon^2 > 4|eta|^2` define a
//! pair of first-order operators `A` and `B` with `[A, B] = 1` but
//! `B != A†`. Where the two sign conditions on the coefficient ratios hold,
//! each operator pair owns a square-integrable vacuum, and repeated raising
//! produces two families `{phi_n}`, `{psi_n}` of polynomial-times-Gaussian
//! functions that are biorthonormal but — away from `eta = 0` — not a
//! rescaled orthonormal basis: the norm products `||phi_n|| ||psi_n||` grow
//! without bound.
//!
//! The crate constructs these families exactly (complex polynomials times
//! Gaussians, closed-form moment integrals), verifies every identity they
//! satisfy, and cross-checks the underlying operator algebra on a truncated
//! number-state space with an independent matrix oracle and a quadrature
//! rule.
//!
//! ## Modules
//!
//! - [`params`] — parameter validation and the eight ladder coefficients
//! - [`poly`], [`gauss`], [`hermite`] — the exact function calculus
//! - [`family`] — family construction and all family-level verifications
//! - [`region`] — the one-real-parameter admissibility window and scans
//! - [`fock`] — truncated-matrix oracle: conjugation, intertwining,
//!   single-constant relations, quadrature cross-checks
//! - [`report`], [`tol`] — machine-readable reports and tolerances
//!
//! ## Runnable examples
//!
//! Each major capability has one example:
//!
//! ```bash
//! cargo run --example coefficients           # parameters and the k-algebra
//! cargo run --example biorthonormal_family   # pairing matrix deviations
//! cargo run --example ladder_identities      # raising/lowering/number checks
//! cargo run --example admissibility_window   # eta_0 and the (alpha, eta) scan
//! cargo run --example hermite_special_case   # closed Hermite forms and limits
//! cargo run --example riesz_growth           # norm products and Gram spectra
//! cargo run --example fock_oracle            # matrix-side verification
//! cargo run --example frame_diagnostics      # frame operators at finite rank
//! cargo run --example quadrature_cross_check # moments vs quadrature
//! ```
//!
//! ## Quick start
//!
//! ```
//! use num_complex::Complex64;
//! use pseudoboson::{build_family, make_parameters, verify_biorthonormality};
//!
//! let p = make_parameters(0.3, Complex64::new(0.1, 0.0)).unwrap();
//! let family = build_family(&p, 12).unwrap();
//! let pairing = verify_biorthonormality(&family);
//! assert!(pairing.max_deviation < 1e-8);
//! ```
//!
//! A thin binary (`pseudoboson`) exposes the same checks as the
//! subcommands `family`, `scan`, `oracle` and `verify-all` with JSON/CSV
//! reports; see the repository README.

pub mod error;
pub mod family;
pub mod fock;
pub mod gauss;
pub mod hermite;
pub mod params;
pub mod poly;
pub mod region;
pub mod report;
pub mod tol;

pub use error::{Error, Result};
pub use family::{
    build_family, frame_truncation, hermite_case_check, hermite_expansion, ladder_consistency,
    number_eigencheck, resolution_diagnostic, riesz_diagnostic, verify_biorthonormality,
    BiorthogonalFamily,
};
pub use fock::{
    matrix_exponential, quadrature_inner_product, verify_conjugation, verify_intertwining,
    verify_single_constant, TruncatedOperator,
};
pub use gauss::{apply_ladder, gaussian_moment, inner_product, GaussPolyFn};
pub use hermite::{hermite_function, hermite_polynomial};
pub use params::{
    admissibility, coefficient_set, make_parameters, CoefficientSet, LadderCoefficients,
    ParameterPoint,
};
pub use poly::ComplexPolynomial;
pub use region::{eta_window, scan_region, tanh_conditions, RegionPoint};
pub use tol::Tolerances;
