//! Named initial conditions.

use std::f64::consts::PI;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::elliptic::{solve_poisson, PoissonSettings};
use crate::error::PresetError;
use crate::grid::{Grid, ScalarField};
use crate::lorenz86::{Lorenz86Params, Lorenz86State};
use crate::ops::laplacian;
use crate::sampling::smooth_random_field;
use crate::state::SweState;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresetKind {
    Rest,
    Vortex,
    GravityWave,
    RandomBalanced,
    L86Default,
}

impl PresetKind {
    pub const ALL: [PresetKind; 5] = [
        PresetKind::Rest,
        PresetKind::Vortex,
        PresetKind::GravityWave,
        PresetKind::RandomBalanced,
        PresetKind::L86Default,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PresetKind::Rest => "rest",
            PresetKind::Vortex => "vortex",
            PresetKind::GravityWave => "gravity_wave",
            PresetKind::RandomBalanced => "random_balanced",
            PresetKind::L86Default => "l86_default",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|p| p.name() == s)
    }
}

pub fn rest(grid: Grid, h0: f64, f: f64, g: f64) -> Result<SweState, PresetError> {
    Ok(SweState::rest(grid, h0, f, g)?)
}

/// Height in geostrophic balance with `psi`: `h = h0 + (f/g) psi`.
fn balanced(grid: Grid, psi: &ScalarField, h0: f64, f: f64, g: f64) -> Result<SweState, PresetError> {
    let zeta = laplacian(psi);
    let h = psi.map(|p| h0 + f / g * p);
    Ok(SweState::new(zeta, ScalarField::zeros(grid), h, f, g)?)
}

/// Gaussian vortex of peak vorticity `amplitude` and width a tenth of the
/// shorter side, centred in the domain, with height in geostrophic balance.
pub fn vortex(grid: Grid, h0: f64, amplitude: f64, f: f64, g: f64) -> Result<SweState, PresetError> {
    let (cx, cy) = (0.5 * grid.lx(), 0.5 * grid.ly());
    let sigma = 0.1 * grid.lx().min(grid.ly());
    let mut zeta = ScalarField::from_fn(grid, |x, y| {
        let r2 = (x - cx).powi(2) + (y - cy).powi(2);
        amplitude * (-r2 / (2.0 * sigma * sigma)).exp()
    });
    zeta.remove_mean();
    let psi = solve_poisson(&zeta, &PoissonSettings::default())?;
    balanced(grid, &psi, h0, f, g)
}

/// Linear inertia–gravity wave with mode numbers `(kx, ky)`: height
/// `h0 + amplitude cos(k.x)`, vorticity `(f/h0) h'` so the potential vorticity
/// anomaly vanishes and only the wave is excited; divergence starts at zero.
pub fn gravity_wave(grid: Grid, h0: f64, amplitude: f64, f: f64, g: f64, kx: i32, ky: i32) -> Result<SweState, PresetError> {
    let (wx, wy) = (2.0 * PI * f64::from(kx) / grid.lx(), 2.0 * PI * f64::from(ky) / grid.ly());
    let mut eta = ScalarField::from_fn(grid, |x, y| amplitude * (wx * x + wy * y).cos());
    eta.remove_mean();
    let zeta = eta.map(|e| f / h0 * e);
    let h = eta.map(|e| h0 + e);
    Ok(SweState::new(zeta, ScalarField::zeros(grid), h, f, g)?)
}

/// Smooth random stream function with modes up to `kmax`, scaled to peak
/// `amplitude`, with balanced height.
pub fn random_balanced(
    grid: Grid,
    h0: f64,
    amplitude: f64,
    f: f64,
    g: f64,
    kmax: i32,
    seed: u64,
) -> Result<SweState, PresetError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let raw = smooth_random_field(grid, kmax, &mut rng);
    let mut psi = raw.map(|v| v * amplitude / raw.max_abs());
    psi.remove_mean();
    balanced(grid, &psi, h0, f, g)
}

pub fn l86_default() -> (Lorenz86State, Lorenz86Params) {
    let p = Lorenz86Params::new(0.5, 0.1).expect("default parameters are valid");
    (Lorenz86State([1.0, 0.5, -0.5, 0.2, 0.1]), p)
}
