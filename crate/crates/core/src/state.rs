//! Prognostic state `(zeta, mu, h)` and the diagnostic fields recovered
//! from it, including the functional derivatives of energy and potential
//! enstrophy.

use crate::brackets::FunctionalGradient;
use crate::elliptic::{solve_poisson, PoissonSettings};
use crate::error::{EllipticError, StateError};
use crate::grid::{Grid, ScalarField, VectorField};
use crate::ops::{derivative, vector_curl, vector_divergence, Axis};

/// Height must stay strictly above this everywhere.
pub const H_MIN: f64 = 1e-8;

/// Vorticity and divergence means must satisfy `|mean| <= MEAN_TOL * scale`,
/// where `scale` is the largest of `max|field|`, `|f|` and the grid gravity-wave
/// frequency `sqrt(g max h) / min(dx, dy)`. The last keeps fields that are
/// pure roundoff from being judged against themselves.
pub const MEAN_TOL: f64 = 1e-12;

/// Relative vorticity, divergence and layer height on an f-plane.
#[derive(Debug, Clone, PartialEq)]
pub struct SweState {
    pub zeta: ScalarField,
    pub mu: ScalarField,
    pub h: ScalarField,
    /// Coriolis parameter (constant).
    pub f: f64,
    pub g: f64,
}

/// Means removed by [`SweState::validate_projecting`].
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RemovedMeans {
    pub zeta: f64,
    pub mu: f64,
}

impl SweState {
    pub fn new(zeta: ScalarField, mu: ScalarField, h: ScalarField, f: f64, g: f64) -> Result<Self, StateError> {
        let s = Self { zeta, mu, h, f, g };
        s.validate()?;
        Ok(s)
    }

    /// Ocean at rest: flat layer of depth `h0`.
    pub fn rest(grid: Grid, h0: f64, f: f64, g: f64) -> Result<Self, StateError> {
        Self::new(
            ScalarField::zeros(grid),
            ScalarField::zeros(grid),
            ScalarField::constant(grid, h0),
            f,
            g,
        )
    }

    pub fn grid(&self) -> &Grid {
        self.h.grid()
    }

    pub fn validate(&self) -> Result<(), StateError> {
        self.check_structure()?;
        let scale = self.frequency_scale();
        check_mean(&self.zeta, scale).map_err(|mean| StateError::NonZeroMeanVorticity { mean })?;
        check_mean(&self.mu, scale).map_err(|mean| StateError::NonZeroMeanDivergence { mean })?;
        check_height(&self.h)
    }

    /// Like [`validate`](Self::validate) but removes nonzero vorticity and
    /// divergence means instead of rejecting them.
    pub fn validate_projecting(&mut self) -> Result<RemovedMeans, StateError> {
        self.check_structure()?;
        let removed = RemovedMeans {
            zeta: self.zeta.remove_mean(),
            mu: self.mu.remove_mean(),
        };
        check_height(&self.h)?;
        Ok(removed)
    }

    fn check_structure(&self) -> Result<(), StateError> {
        if self.zeta.grid() != self.h.grid() || self.mu.grid() != self.h.grid() {
            return Err(StateError::GridMismatch);
        }
        if !(self.g.is_finite() && self.g > 0.0) {
            return Err(StateError::NonPositiveGravity(self.g));
        }
        if !self.f.is_finite() {
            return Err(StateError::NonFiniteCoriolis(self.f));
        }
        for (name, field) in [("zeta", &self.zeta), ("mu", &self.mu), ("h", &self.h)] {
            if !field.is_finite() {
                return Err(StateError::NonFinite(name));
            }
        }
        Ok(())
    }
}

impl SweState {
    fn frequency_scale(&self) -> f64 {
        let g = self.grid();
        let h_max = self.h.values().iter().fold(0.0f64, |m, v| m.max(*v));
        self.f.abs().max((self.g * h_max).sqrt() / g.dx().min(g.dy()))
    }
}

fn check_mean(field: &ScalarField, scale: f64) -> Result<(), f64> {
    let mean = field.mean();
    if mean.abs() > MEAN_TOL * field.max_abs().max(scale) {
        Err(mean)
    } else {
        Ok(())
    }
}

pub(crate) fn check_height(h: &ScalarField) -> Result<(), StateError> {
    let (i, j, value) = h.argmin();
    if value > H_MIN {
        Ok(())
    } else {
        Err(StateError::NonPositiveHeight { i, j, value })
    }
}

/// Everything the tendencies and diagnostics need, recovered from a state.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivedFields {
    /// Velocity stream function, `L psi = zeta`.
    pub psi: ScalarField,
    /// Velocity potential, `L phi = mu`.
    pub phi: ScalarField,
    pub u: ScalarField,
    pub v: ScalarField,
    /// Momentum stream function, `L chi = curl(h v)`.
    pub chi: ScalarField,
    /// Momentum potential, `L gamma = div(h v)`.
    pub gamma: ScalarField,
    /// Potential vorticity `(zeta + f) / h`.
    pub q: ScalarField,
    /// Bernoulli function `|v|^2 / 2 + g h`.
    pub bernoulli: ScalarField,
}

impl DerivedFields {
    pub fn grid(&self) -> &Grid {
        self.q.grid()
    }

    /// `(H_zeta, H_mu, H_h) = (-chi, -gamma, Phi)`.
    pub fn energy_gradient(&self) -> FunctionalGradient {
        FunctionalGradient::new(-&self.chi, -&self.gamma, self.bernoulli.clone())
    }

    /// `(Z_zeta, Z_mu, Z_h) = (q, 0, -q^2/2)`.
    pub fn enstrophy_gradient(&self) -> FunctionalGradient {
        FunctionalGradient::new(
            self.q.clone(),
            ScalarField::zeros(*self.grid()),
            self.q.map(|q| -0.5 * q * q),
        )
    }

    pub fn velocity(&self) -> VectorField {
        VectorField::new(self.u.clone(), self.v.clone()).expect("u and v share a grid")
    }
}

pub fn derive_fields(s: &SweState, settings: &PoissonSettings) -> Result<DerivedFields, EllipticError> {
    derive_fields_threaded(s, settings, 1)
}

/// [`derive_fields`] with the two pairs of independent Poisson solves run
/// on separate threads when `threads >= 2`. Each solve is sequential, so
/// the result does not depend on `threads`.
pub fn derive_fields_threaded(
    s: &SweState,
    settings: &PoissonSettings,
    threads: usize,
) -> Result<DerivedFields, EllipticError> {
    let (psi, phi) = solve_pair(&centred(&s.zeta), &centred(&s.mu), settings, threads)?;

    // v = k x grad(psi) + grad(phi)
    let u = &(-&derivative(&psi, Axis::Y)) + &derivative(&phi, Axis::X);
    let v = &derivative(&psi, Axis::X) + &derivative(&phi, Axis::Y);

    let momentum = VectorField::new(&s.h * &u, &s.h * &v).expect("shared grid");
    let (chi, gamma) = solve_pair(
        &centred(&vector_curl(&momentum)),
        &centred(&vector_divergence(&momentum)),
        settings,
        threads,
    )?;

    let f = s.f;
    let q = s.zeta.zip_map(&s.h, |z, h| (z + f) / h);
    let g = s.g;
    let bernoulli = ScalarField::from_raw_parts(
        *s.grid(),
        u.values()
            .iter()
            .zip(v.values())
            .zip(s.h.values())
            .map(|((u, v), h)| 0.5 * (u * u + v * v) + g * h)
            .collect(),
    );

    Ok(DerivedFields {
        psi,
        phi,
        u,
        v,
        chi,
        gamma,
        q,
        bernoulli,
    })
}

/// Sources of the four solves have zero mean up to roundoff (validated
/// state, or a discrete curl/divergence that telescopes); remove it exactly.
fn centred(f: &ScalarField) -> ScalarField {
    let mut out = f.clone();
    out.remove_mean();
    out
}

fn solve_pair(
    a: &ScalarField,
    b: &ScalarField,
    settings: &PoissonSettings,
    threads: usize,
) -> Result<(ScalarField, ScalarField), EllipticError> {
    if threads >= 2 {
        std::thread::scope(|scope| {
            let ha = scope.spawn(|| solve_poisson(a, settings));
            let sb = solve_poisson(b, settings);
            let sa = ha.join().expect("Poisson worker panicked");
            Ok((sa?, sb?))
        })
    } else {
        Ok((solve_poisson(a, settings)?, solve_poisson(b, settings)?))
    }
}
