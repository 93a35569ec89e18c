//! Periodic Poisson inversion by conjugate gradients.
//!
//! The five-point Laplacian on a periodic lattice is symmetric negative
//! semidefinite with the constants as its null space. We run CG on `-L`,
//! restricted to zero-mean fields by projecting the iterate and residual
//! after every update, and always start from zero.

use crate::error::EllipticError;
use crate::grid::ScalarField;
use crate::ops::laplacian_into;

/// Compatibility threshold: `|mean(rhs)| <= MEAN_TOLERANCE * rms(rhs)`.
pub const MEAN_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoissonSettings {
    pub rel_tolerance: f64,
    /// `None` means `10 * nx * ny`.
    pub max_iterations: Option<usize>,
}

impl Default for PoissonSettings {
    fn default() -> Self {
        Self {
            rel_tolerance: 1e-12,
            max_iterations: None,
        }
    }
}

impl PoissonSettings {
    pub fn validate(&self) -> Result<(), EllipticError> {
        if !(self.rel_tolerance > 0.0 && self.rel_tolerance < 1.0) {
            return Err(EllipticError::InvalidSettings(format!(
                "rel_tolerance must lie in (0, 1), got {}",
                self.rel_tolerance
            )));
        }
        if self.max_iterations == Some(0) {
            return Err(EllipticError::InvalidSettings("max_iterations must be at least 1".into()));
        }
        Ok(())
    }

    pub fn iteration_limit(&self, cells: usize) -> usize {
        self.max_iterations.unwrap_or(10 * cells)
    }
}

/// Convergence record of one solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoissonReport {
    pub iterations: usize,
    /// `||L s - rhs||_2 / ||rhs||_2`, using the mean-projected rhs.
    pub rel_residual: f64,
}

/// Returns the zero-mean `s` with `laplacian(s) = rhs`.
pub fn solve_poisson(rhs: &ScalarField, settings: &PoissonSettings) -> Result<ScalarField, EllipticError> {
    solve_poisson_report(rhs, settings).map(|(s, _)| s)
}

pub fn solve_poisson_report(
    rhs: &ScalarField,
    settings: &PoissonSettings,
) -> Result<(ScalarField, PoissonReport), EllipticError> {
    settings.validate()?;
    let grid = *rhs.grid();
    let n = grid.len();
    let rms = rhs.rms();
    let mean = rhs.mean();
    if rms == 0.0 {
        return Ok((
            ScalarField::zeros(grid),
            PoissonReport {
                iterations: 0,
                rel_residual: 0.0,
            },
        ));
    }
    if mean.abs() > MEAN_TOLERANCE * rms {
        return Err(EllipticError::NonZeroMeanRhs { mean, rms });
    }

    let b: Vec<f64> = rhs.values().iter().map(|v| v - mean).collect();
    let b_norm = norm(&b);
    let target = settings.rel_tolerance * b_norm;
    let limit = settings.iteration_limit(n);

    let mut x = vec![0.0; n];
    // Residual of (-L) x = -b, which equals L x - b.
    let mut r: Vec<f64> = b.iter().map(|v| -v).collect();
    let mut p = r.clone();
    let mut ap = vec![0.0; n];
    let mut rr = dot(&r, &r);

    let mut iterations = 0;
    while iterations < limit {
        iterations += 1;
        laplacian_into(&grid, &p, &mut ap);
        // ap holds L p; the CG operator is -L.
        let pap = -dot(&p, &ap);
        if !(pap > 0.0) {
            break;
        }
        let alpha = rr / pap;
        let (mut sx, mut sr) = ([0.0; LANES], [0.0; LANES]);
        for (((xc, rc), pc), ac) in x.chunks_mut(LANES).zip(r.chunks_mut(LANES)).zip(p.chunks(LANES)).zip(ap.chunks(LANES)) {
            for l in 0..xc.len() {
                xc[l] += alpha * pc[l];
                rc[l] += alpha * ac[l];
                sx[l] += xc[l];
                sr[l] += rc[l];
            }
        }
        let (mx, mr) = (sx.iter().sum::<f64>() / n as f64, sr.iter().sum::<f64>() / n as f64);
        let mut acc = [0.0; LANES];
        for (xc, rc) in x.chunks_mut(LANES).zip(r.chunks_mut(LANES)) {
            for l in 0..xc.len() {
                xc[l] -= mx;
                rc[l] -= mr;
                acc[l] += rc[l] * rc[l];
            }
        }
        let rr_new: f64 = acc.iter().sum();
        if rr_new.sqrt() <= target {
            let true_res = residual(&grid, &x, &b);
            if norm(&true_res) <= target {
                return Ok(finish(grid, x, iterations, &b, b_norm));
            }
            // Recursive residual drifted; restart from the true one.
            r = true_res;
            rr = dot(&r, &r);
            p.copy_from_slice(&r);
            continue;
        }
        let beta = rr_new / rr;
        for k in 0..n {
            p[k] = r[k] + beta * p[k];
        }
        rr = rr_new;
    }
    let final_res = norm(&residual(&grid, &x, &b)) / b_norm;
    if final_res <= settings.rel_tolerance {
        return Ok(finish(grid, x, iterations, &b, b_norm));
    }
    Err(EllipticError::NoConvergence {
        iterations,
        residual: final_res,
    })
}

fn finish(
    grid: crate::grid::Grid,
    mut x: Vec<f64>,
    iterations: usize,
    b: &[f64],
    b_norm: f64,
) -> (ScalarField, PoissonReport) {
    project_mean(&mut x);
    let rel_residual = norm(&residual(&grid, &x, b)) / b_norm;
    (
        ScalarField::from_raw_parts(grid, x),
        PoissonReport {
            iterations,
            rel_residual,
        },
    )
}

fn residual(grid: &crate::grid::Grid, x: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; x.len()];
    laplacian_into(grid, x, &mut out);
    for (o, bv) in out.iter_mut().zip(b) {
        *o -= bv;
    }
    out
}

fn project_mean(v: &mut [f64]) {
    let m = v.iter().sum::<f64>() / v.len() as f64;
    for x in v {
        *x -= m;
    }
}

// Independent partial sums let the reductions pipeline; the order is fixed,
// so results stay deterministic.
const LANES: usize = 8;

fn dot(a: &[f64], b: &[f64]) -> f64 {
    let mut acc = [0.0; LANES];
    for (ac, bc) in a.chunks(LANES).zip(b.chunks(LANES)) {
        for l in 0..ac.len() {
            acc[l] += ac[l] * bc[l];
        }
    }
    acc.iter().sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}
