//! Tendencies of the shallow-water system in two equivalent forms and the
//! scalar brackets that generate them.
//!
//! Sign conventions are pinned to the evolution equations
//!
//! ```text
//! dzeta/dt =  J(q, chi)  - A_q gamma
//! dmu/dt   =  J(q, gamma) + A_q chi - L Phi
//! dh/dt    = -L gamma
//! ```
//!
//! with `A_q f = div(q grad f)`. In terms of `H_zeta = -chi` and
//! `H_mu = -gamma` the Jacobian terms read `J(H_zeta, Z_zeta)` and
//! `J(H_mu, Z_zeta)`, which fixes the argument order used by
//! [`nambu_bracket_zeta`] and [`nambu_bracket_mu`].

use crate::grid::{assert_same_grid, Grid, ScalarField};
use crate::ops::{inner, inner_abs, jacobian, laplacian, weighted_laplacian};
use crate::state::DerivedFields;

/// Functional derivatives `(F_zeta, F_mu, F_h)` of some functional `F`.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionalGradient {
    pub zeta: ScalarField,
    pub mu: ScalarField,
    pub h: ScalarField,
}

impl FunctionalGradient {
    pub fn new(zeta: ScalarField, mu: ScalarField, h: ScalarField) -> Self {
        assert_same_grid(&zeta, &mu);
        assert_same_grid(&zeta, &h);
        Self { zeta, mu, h }
    }

    pub fn zeros(grid: Grid) -> Self {
        Self::new(ScalarField::zeros(grid), ScalarField::zeros(grid), ScalarField::zeros(grid))
    }

    /// Gradient of the total mass functional `integral(h)`.
    pub fn mass(grid: Grid) -> Self {
        Self::new(ScalarField::zeros(grid), ScalarField::zeros(grid), ScalarField::constant(grid, 1.0))
    }

    pub fn grid(&self) -> &Grid {
        self.zeta.grid()
    }
}

/// Time derivatives of `(zeta, mu, h)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tendency {
    pub dzeta: ScalarField,
    pub dmu: ScalarField,
    pub dh: ScalarField,
}

impl Tendency {
    pub fn grid(&self) -> &Grid {
        self.dh.grid()
    }
}

/// Applies the antisymmetric operator
///
/// ```text
/// | -J_q   A_q    0  |
/// | -A_q  -J_q   -L  |
/// |  0     L      0  |
/// ```
///
/// to `(F_zeta, F_mu, F_h)`, where `J_q f = J(q, f)`.
pub fn poisson_operator_apply(d: &DerivedFields, fg: &FunctionalGradient) -> Tendency {
    let q = &d.q;
    let dzeta = &weighted_laplacian(q, &fg.mu) - &jacobian(q, &fg.zeta);
    let dmu = &(&(-&weighted_laplacian(q, &fg.zeta)) - &jacobian(q, &fg.mu)) - &laplacian(&fg.h);
    let dh = laplacian(&fg.mu);
    Tendency { dzeta, dmu, dh }
}

/// Right-hand sides written out directly in terms of the derived fields.
pub fn tendencies_direct(d: &DerivedFields) -> Tendency {
    let q = &d.q;
    let dzeta = &jacobian(q, &d.chi) - &weighted_laplacian(q, &d.gamma);
    let dmu = &(&jacobian(q, &d.gamma) + &weighted_laplacian(q, &d.chi)) - &laplacian(&d.bernoulli);
    let dh = -&laplacian(&d.gamma);
    Tendency { dzeta, dmu, dh }
}

/// Vortical Nambu bracket `integral(F_zeta J(H_zeta, Z_zeta))`.
///
/// Totally antisymmetric in `(F, Z, H)` because the Arakawa trilinear form is.
pub fn nambu_bracket_zeta(f: &FunctionalGradient, z: &FunctionalGradient, h: &FunctionalGradient) -> f64 {
    inner(&f.zeta, &jacobian(&h.zeta, &z.zeta))
}

/// Advection of vorticity by the divergent flow, `integral(F_mu J(H_mu, Z_zeta))`.
pub fn nambu_bracket_mu(f: &FunctionalGradient, z: &FunctionalGradient, h: &FunctionalGradient) -> f64 {
    inner(&f.mu, &jacobian(&h.mu, &z.zeta))
}

/// [`nambu_bracket_mu`] completed with its two cyclic permutations.
///
/// Coincides with the generator form only on the dynamical slice; exposed
/// for inspection, never used for time stepping.
pub fn nambu_bracket_mu_cyclic(f: &FunctionalGradient, z: &FunctionalGradient, h: &FunctionalGradient) -> f64 {
    nambu_bracket_mu(f, z, h) + nambu_bracket_mu(z, h, f) + nambu_bracket_mu(h, f, z)
}

/// `{F, Z, H}_zeta + {F, Z, H}_mu`.
pub fn nambu_bracket_zeta_mu(f: &FunctionalGradient, z: &FunctionalGradient, h: &FunctionalGradient) -> f64 {
    nambu_bracket_zeta(f, z, h) + nambu_bracket_mu(f, z, h)
}

/// Vortical/divergent interaction bracket
/// `integral(F_zeta A_Z H_mu) - integral(F_mu A_Z H_zeta)` with `A_Z = div(Z_zeta grad .)`.
pub fn nambu_bracket_mu_zeta_zeta(f: &FunctionalGradient, z: &FunctionalGradient, h: &FunctionalGradient) -> f64 {
    inner(&f.zeta, &weighted_laplacian(&z.zeta, &h.mu)) - inner(&f.mu, &weighted_laplacian(&z.zeta, &h.zeta))
}

/// Gravity-wave Poisson bracket `-integral(F_mu L H_h) + integral(F_h L H_mu)`.
pub fn poisson_bracket_mu_h(f: &FunctionalGradient, h: &FunctionalGradient) -> f64 {
    -inner(&f.mu, &laplacian(&h.h)) + inner(&f.h, &laplacian(&h.mu))
}

/// Rate of change of `F` from the sum of the two Nambu brackets and the
/// Poisson bracket, with `Z` the potential enstrophy and `H` the energy.
pub fn functional_rate(d: &DerivedFields, fg: &FunctionalGradient) -> f64 {
    let z = d.enstrophy_gradient();
    let h = d.energy_gradient();
    nambu_bracket_zeta_mu(fg, &z, &h) + nambu_bracket_mu_zeta_zeta(fg, &z, &h) + poisson_bracket_mu_h(fg, &h)
}

/// `integral(F_zeta dzeta + F_mu dmu + F_h dh)`.
pub fn tendency_weighted_rate(fg: &FunctionalGradient, t: &Tendency) -> f64 {
    inner(&fg.zeta, &t.dzeta) + inner(&fg.mu, &t.dmu) + inner(&fg.h, &t.dh)
}

/// Sum of `integral|F_i dX_i|`, the roundoff scale of [`tendency_weighted_rate`].
pub fn tendency_weighted_scale(fg: &FunctionalGradient, t: &Tendency) -> f64 {
    inner_abs(&fg.zeta, &t.dzeta) + inner_abs(&fg.mu, &t.dmu) + inner_abs(&fg.h, &t.dh)
}
