//! Seeded random fields and states for identity checks and presets.

use std::f64::consts::PI;

use rand::Rng;

use crate::brackets::FunctionalGradient;
use crate::grid::{Grid, ScalarField};
use crate::state::SweState;

/// Independent uniform samples in `[-1, 1)` at every cell.
pub fn random_field(grid: Grid, rng: &mut impl Rng) -> ScalarField {
    let values = (0..grid.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
    ScalarField::from_raw_parts(grid, values)
}

/// Random trigonometric polynomial with mode indices `|kx|, |ky| <= kmax`,
/// amplitudes falling off as `1/(1 + |k|^2)` and uniform random phases.
/// The constant mode is excluded, so the result has zero continuous mean.
pub fn smooth_random_field(grid: Grid, kmax: i32, rng: &mut impl Rng) -> ScalarField {
    let mut modes = Vec::new();
    for ky in 0..=kmax {
        for kx in -kmax..=kmax {
            if ky == 0 && kx <= 0 {
                continue;
            }
            let amp = rng.gen_range(-1.0..1.0) / (1.0 + (kx * kx + ky * ky) as f64);
            let phase = rng.gen_range(0.0..2.0 * PI);
            modes.push((
                2.0 * PI * kx as f64 / grid.lx(),
                2.0 * PI * ky as f64 / grid.ly(),
                amp,
                phase,
            ));
        }
    }
    ScalarField::from_fn(grid, |x, y| {
        modes
            .iter()
            .map(|&(kx, ky, a, p)| a * (kx * x + ky * y + p).cos())
            .sum()
    })
}

/// A valid but otherwise unstructured state: rough zero-mean vorticity
/// and divergence, height in `[0.5, 1.5)`, `f` in `[-2, 2)` and `g` in
/// `[0.5, 2)`.
pub fn random_valid_state(grid: Grid, rng: &mut impl Rng) -> SweState {
    let mut zeta = random_field(grid, rng);
    zeta.remove_mean();
    let mut mu = random_field(grid, rng);
    mu.remove_mean();
    let h = random_field(grid, rng).map(|v| 1.0 + 0.5 * v);
    let f = rng.gen_range(-2.0..2.0);
    let g = rng.gen_range(0.5..2.0);
    SweState::new(zeta, mu, h, f, g).expect("random state is valid by construction")
}

/// Three independent rough fields packaged as a functional gradient.
pub fn random_gradient(grid: Grid, rng: &mut impl Rng) -> FunctionalGradient {
    FunctionalGradient::new(random_field(grid, rng), random_field(grid, rng), random_field(grid, rng))
}
