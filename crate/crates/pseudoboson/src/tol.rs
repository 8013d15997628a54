//! Verification tolerances, with their defaults in one place.
//!
//! Every CLI run echoes the effective values it used, and all of them can be
//! rescaled together through the `PSEUDOBOSON_TOL_SCALE` environment
//! variable (a plain multiplier, default 1).

use serde::Serialize;

/// Environment variable holding a global multiplier for all tolerances.
pub const TOL_SCALE_ENV: &str = "PSEUDOBOSON_TOL_SCALE";

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Tolerances {
    /// Biorthonormality deviation |<psi_n, phi_m> - delta| for n, m <= 12.
    pub biorth: f64,
    /// Base for the per-level ladder/eigenrelation bound `base * (1 + n^2)`.
    pub ladder_base: f64,
    /// Determinant identity |kA- kB+ - kA+ kB- - 1|.
    pub determinant: f64,
    /// Slack below 1 allowed for the norm products d_n.
    pub riesz_slack: f64,
    /// Hermite-case precondition |kA- kB- + 1/2| and coefficient deviation.
    pub hermite_case: f64,
    /// Interior-block residual of the two defining conjugations.
    pub conjugation: f64,
    /// Relative deviation of the single-constant expansions.
    pub single_constant: f64,
    /// Relative interior-block intertwining residual.
    pub intertwining: f64,
    /// Interior-block deviation of exp(M) exp(-M) from the identity.
    pub expm_self: f64,
    /// Agreement between exact-moment and quadrature inner products.
    pub quadrature: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            biorth: 1e-8,
            ladder_base: 1e-9,
            determinant: 1e-12,
            riesz_slack: 1e-10,
            hermite_case: 1e-9,
            conjugation: 1e-6,
            single_constant: 1e-5,
            intertwining: 1e-6,
            expm_self: 1e-9,
            quadrature: 1e-9,
        }
    }
}

impl Tolerances {
    /// Multiplies every tolerance by `k`.
    pub fn scaled(mut self, k: f64) -> Self {
        self.biorth *= k;
        self.ladder_base *= k;
        self.determinant *= k;
        self.riesz_slack *= k;
        self.hermite_case *= k;
        self.conjugation *= k;
        self.single_constant *= k;
        self.intertwining *= k;
        self.expm_self *= k;
        self.quadrature *= k;
        self
    }

    /// Applies the `PSEUDOBOSON_TOL_SCALE` multiplier if set and parsable.
    pub fn from_env(self) -> Self {
        match std::env::var(TOL_SCALE_ENV) {
            Ok(v) => match v.trim().parse::<f64>() {
                Ok(k) if k.is_finite() && k > 0.0 => self.scaled(k),
                _ => self,
            },
            Err(_) => self,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaling_multiplies_everything() {
        let t = Tolerances::default().scaled(10.0);
        assert!((t.biorth - 1e-7).abs() < 1e-21);
        assert!((t.conjugation - 1e-5).abs() < 1e-19);
    }
}
