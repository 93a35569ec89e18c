//! Periodic finite-difference operators.
//!
//! Every operator here is built so that the integral identities the
//! dynamics rely on hold to roundoff on the lattice:
//!
//! * [`jacobian`] is the Arakawa nine-point form, written as
//!   `(Q(a,b) - Q(b,a)) / (12 dx dy)` so that antisymmetry and `J(a,a) = 0`
//!   are bitwise exact and the trilinear form `sum f J(g,h)` is totally
//!   antisymmetric.
//! * [`laplacian`] and [`weighted_laplacian`] share one edge-flux layout.
//!   Edge weights are arithmetic means of the two adjacent cells, which
//!   makes `sum q A_q f = sum q^2/2 L f` an exact per-edge identity.

use crate::grid::{assert_same_grid, Grid, ScalarField, VectorField};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// Periodic neighbour offsets for one row or column count.
#[inline]
fn neighbours(k: usize, n: usize) -> (usize, usize) {
    (if k == 0 { n - 1 } else { k - 1 }, if k + 1 == n { 0 } else { k + 1 })
}

/// Applies a stencil closure at every cell. The closure receives the
/// index of the cell and of its eight neighbours, in the order
/// `[c, e, w, n, s, ne, nw, se, sw]`.
fn stencil(grid: &Grid, mut f: impl FnMut([usize; 9]) -> f64) -> ScalarField {
    let (nx, ny) = (grid.nx(), grid.ny());
    let mut out = Vec::with_capacity(grid.len());
    for j in 0..ny {
        let (jm, jp) = neighbours(j, ny);
        let (row, row_n, row_s) = (j * nx, jp * nx, jm * nx);
        for i in 0..nx {
            let (im, ip) = neighbours(i, nx);
            out.push(f([
                row + i,
                row + ip,
                row + im,
                row_n + i,
                row_s + i,
                row_n + ip,
                row_n + im,
                row_s + ip,
                row_s + im,
            ]));
        }
    }
    ScalarField::from_raw_parts(*grid, out)
}

/// Centred second-order difference with periodic wraparound.
pub fn derivative(f: &ScalarField, axis: Axis) -> ScalarField {
    let grid = *f.grid();
    let v = f.values();
    match axis {
        Axis::X => {
            let inv = 1.0 / (2.0 * grid.dx());
            stencil(&grid, |[_, e, w, ..]| (v[e] - v[w]) * inv)
        }
        Axis::Y => {
            let inv = 1.0 / (2.0 * grid.dy());
            stencil(&grid, |[_, _, _, n, s, ..]| (v[n] - v[s]) * inv)
        }
    }
}

/// Five-point Laplacian, written as a sum of four edge differences.
pub fn laplacian(f: &ScalarField) -> ScalarField {
    let grid = *f.grid();
    let mut out = vec![0.0; grid.len()];
    laplacian_into(&grid, f.values(), &mut out);
    ScalarField::from_raw_parts(grid, out)
}

/// Allocation-free [`laplacian`] for the iterative solver.
pub(crate) fn laplacian_into(grid: &Grid, v: &[f64], out: &mut [f64]) {
    let (nx, ny) = (grid.nx(), grid.ny());
    let (ix2, iy2) = (1.0 / grid.dx().powi(2), 1.0 / grid.dy().powi(2));
    for j in 0..ny {
        let (jm, jp) = neighbours(j, ny);
        let c = &v[j * nx..(j + 1) * nx];
        let north = &v[jp * nx..(jp + 1) * nx];
        let south = &v[jm * nx..(jm + 1) * nx];
        let o = &mut out[j * nx..(j + 1) * nx];
        let at = |i: usize, im: usize, ip: usize| {
            let fc = c[i];
            ((c[ip] - fc) + (c[im] - fc)) * ix2 + ((north[i] - fc) + (south[i] - fc)) * iy2
        };
        // Split off the wrap-around columns so the interior loop vectorises.
        o[0] = at(0, nx - 1, 1 % nx);
        for i in 1..nx - 1 {
            o[i] = at(i, i - 1, i + 1);
        }
        if nx > 1 {
            o[nx - 1] = at(nx - 1, nx - 2, 0);
        }
    }
}

/// Flux-form `div(w grad f)` with arithmetic-mean edge weights.
///
/// With `w` identically one this evaluates exactly the same floating-point
/// expression as [`laplacian`].
pub fn weighted_laplacian(w: &ScalarField, f: &ScalarField) -> ScalarField {
    assert_same_grid(w, f);
    let grid = *f.grid();
    let (wv, v) = (w.values(), f.values());
    let (ix2, iy2) = (1.0 / grid.dx().powi(2), 1.0 / grid.dy().powi(2));
    stencil(&grid, |[c, e, w_, n, s, ..]| {
        let (fc, wc) = (v[c], wv[c]);
        let edge = |k: usize| 0.5 * (wc + wv[k]) * (v[k] - fc);
        (edge(e) + edge(w_)) * ix2 + (edge(n) + edge(s)) * iy2
    })
}

/// Arakawa (1966) nine-point Jacobian `J(a, b) = a_x b_y - a_y b_x`.
pub fn jacobian(a: &ScalarField, b: &ScalarField) -> ScalarField {
    assert_same_grid(a, b);
    let grid = *a.grid();
    let (av, bv) = (a.values(), b.values());
    let scale = 1.0 / (12.0 * grid.dx() * grid.dy());
    // Q(p, r) collects the J++ half and the J+x form; J^x+ is -J+x with the
    // arguments swapped, so Q(a,b) - Q(b,a) is the Arakawa average.
    let half = |p: &[f64], r: &[f64], [_, e, w, n, s, ne, nw, se, sw]: [usize; 9]| {
        (p[e] - p[w]) * (r[n] - r[s]) + p[e] * (r[ne] - r[se]) - p[w] * (r[nw] - r[sw])
            - p[n] * (r[ne] - r[nw])
            + p[s] * (r[se] - r[sw])
    };
    stencil(&grid, |idx| (half(av, bv, idx) - half(bv, av, idx)) * scale)
}

pub fn vector_divergence(field: &VectorField) -> ScalarField {
    &derivative(field.u(), Axis::X) + &derivative(field.v(), Axis::Y)
}

/// Vertical component of the curl, `dv/dx - du/dy`.
pub fn vector_curl(field: &VectorField) -> ScalarField {
    &derivative(field.v(), Axis::X) - &derivative(field.u(), Axis::Y)
}

/// Area integral `sum(values) * cell_area`, accumulated in index order.
pub fn integral(f: &ScalarField) -> f64 {
    f.values().iter().sum::<f64>() * f.grid().cell_area()
}

/// `integral(a * b)` without materialising the product field.
pub fn inner(a: &ScalarField, b: &ScalarField) -> f64 {
    a.dot(b) * a.grid().cell_area()
}

/// Area integral of `|a * b|`; the natural roundoff scale for [`inner`].
pub fn inner_abs(a: &ScalarField, b: &ScalarField) -> f64 {
    assert_same_grid(a, b);
    a.values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| (x * y).abs())
        .sum::<f64>()
        * a.grid().cell_area()
}
