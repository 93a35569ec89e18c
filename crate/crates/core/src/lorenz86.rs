//! Five-component fast–slow model: a vorticity triad (x1, x2, x3) coupled
//! through the rotational Froude number `b` to a fast oscillator (x4, x5).
//!
//! Besides the direct right-hand side, the flow is assembled as two
//! three-dimensional Nambu brackets plus a planar Poisson bracket, and the
//! two forms should agree to roundoff.

pub type Vec5 = [f64; 5];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lorenz86State(pub Vec5);

/// Which sign of the `x4/ε` term in `ẋ5` to use. Only `Corrected` conserves
/// `H`; `AsPrinted` (`ẋ5 = -x4/ε + b x1 x2`) is kept for comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignVariant {
    #[default]
    Corrected,
    AsPrinted,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lorenz86Params {
    pub b: f64,
    pub eps: f64,
    /// Mixing constant in `Z = w H - K`; does not affect the dynamics.
    pub w: f64,
    pub variant: SignVariant,
}

impl Lorenz86Params {
    pub fn new(b: f64, eps: f64) -> Result<Self, String> {
        if !(eps.is_finite() && eps > 0.0) {
            return Err(format!("eps must be positive, got {eps}"));
        }
        if !b.is_finite() {
            return Err(format!("b must be finite, got {b}"));
        }
        Ok(Self {
            b,
            eps,
            w: 0.0,
            variant: SignVariant::Corrected,
        })
    }

    fn oscillator_sign(&self) -> f64 {
        match self.variant {
            SignVariant::Corrected => 1.0,
            SignVariant::AsPrinted => -1.0,
        }
    }
}

pub fn rhs_direct(x: &Lorenz86State, p: &Lorenz86Params) -> Vec5 {
    let [x1, x2, x3, x4, x5] = x.0;
    let (b, ie) = (p.b, 1.0 / p.eps);
    [
        -x2 * x3 + b * x2 * x5,
        x1 * x3 - b * x1 * x5,
        -x1 * x2,
        -x5 * ie,
        p.oscillator_sign() * x4 * ie + b * x1 * x2,
    ]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// Slow triad functionals: `H123 = ½(x1² + 2x2² + x3²)`, `K123 = ½(x1² + x2²)`, `Z123 = w H123 - K123`.
fn triad_gradients(y: [f64; 3], w: f64) -> ([f64; 3], [f64; 3]) {
    let grad_h = [y[0], 2.0 * y[1], y[2]];
    let grad_k = [y[0], y[1], 0.0];
    let grad_z = [w * grad_h[0] - grad_k[0], w * grad_h[1] - grad_k[1], w * grad_h[2] - grad_k[2]];
    (grad_z, grad_h)
}

/// Same functional form on the (x1, x2, x5) sub-triad.
fn coupling_gradients(y: [f64; 3], w: f64) -> ([f64; 3], [f64; 3]) {
    triad_gradients(y, w)
}

/// Sum of the two Nambu cross products and the planar oscillator bracket.
pub fn rhs_nambu(x: &Lorenz86State, p: &Lorenz86Params) -> Vec5 {
    let [x1, x2, x3, x4, x5] = x.0;
    let mut out = [0.0; 5];

    let (gz, gh) = triad_gradients([x1, x2, x3], p.w);
    let c = cross(gz, gh);
    out[0] += c[0];
    out[1] += c[1];
    out[2] += c[2];

    let (gz, gh) = coupling_gradients([x1, x2, x5], p.w);
    let c = cross(gz, gh);
    out[0] -= p.b * c[0];
    out[1] -= p.b * c[1];
    out[4] -= p.b * c[2];

    // [x_k, H45] with H45 = ½(x4² + x5²) and [F, G] = ∂5F ∂4G − ∂4F ∂5G.
    let ie = 1.0 / p.eps;
    let s = p.oscillator_sign();
    out[3] += -x5 * ie;
    out[4] += s * x4 * ie;
    out
}

/// `(H, Z)` with `H = ½(x1² + 2x2² + x3² + x4² + x5²)`, `Z = ½(x2² + x3² + x4² + x5²)`.
pub fn conserved(x: &Lorenz86State) -> (f64, f64) {
    let [x1, x2, x3, x4, x5] = x.0;
    let fast = x4 * x4 + x5 * x5;
    (
        0.5 * (x1 * x1 + 2.0 * x2 * x2 + x3 * x3 + fast),
        0.5 * (x2 * x2 + x3 * x3 + fast),
    )
}

/// Pointwise `dH/dt` and `dZ/dt` along the direct right-hand side.
pub fn conserved_rates(x: &Lorenz86State, p: &Lorenz86Params) -> (f64, f64) {
    let [x1, x2, x3, x4, x5] = x.0;
    let d = rhs_direct(x, p);
    (
        x1 * d[0] + 2.0 * x2 * d[1] + x3 * d[2] + x4 * d[3] + x5 * d[4],
        x2 * d[1] + x3 * d[2] + x4 * d[3] + x5 * d[4],
    )
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lorenz86Record {
    pub t: f64,
    pub x: Vec5,
    pub energy: f64,
    pub enstrophy: f64,
}

fn combine(x: &Vec5, k: &Vec5, c: f64) -> Lorenz86State {
    Lorenz86State(std::array::from_fn(|i| x[i] + c * k[i]))
}

pub fn rk4_step(x: &Lorenz86State, p: &Lorenz86Params, dt: f64) -> Lorenz86State {
    let k1 = rhs_direct(x, p);
    let k2 = rhs_direct(&combine(&x.0, &k1, 0.5 * dt), p);
    let k3 = rhs_direct(&combine(&x.0, &k2, 0.5 * dt), p);
    let k4 = rhs_direct(&combine(&x.0, &k3, dt), p);
    let c = dt / 6.0;
    Lorenz86State(std::array::from_fn(|i| x.0[i] + c * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i])))
}

fn record(t: f64, x: &Lorenz86State) -> Lorenz86Record {
    let (energy, enstrophy) = conserved(x);
    Lorenz86Record { t, x: x.0, energy, enstrophy }
}

/// RK4 trajectory; records at step 0 and every `record_every` steps.
pub fn simulate(
    x0: &Lorenz86State,
    p: &Lorenz86Params,
    dt: f64,
    n_steps: usize,
    record_every: usize,
) -> Result<Vec<Lorenz86Record>, String> {
    if !(dt.is_finite() && dt > 0.0) {
        return Err(format!("dt must be positive, got {dt}"));
    }
    if record_every == 0 {
        return Err("record_every must be at least 1".into());
    }
    let mut out = vec![record(0.0, x0)];
    let mut x = *x0;
    for step in 1..=n_steps {
        x = rk4_step(&x, p, dt);
        if step % record_every == 0 {
            out.push(record(step as f64 * dt, &x));
        }
    }
    Ok(out)
}

/// Final state only, without keeping the trajectory.
pub fn integrate(x0: &Lorenz86State, p: &Lorenz86Params, dt: f64, n_steps: usize) -> Lorenz86State {
    (0..n_steps).fold(*x0, |x, _| rk4_step(&x, p, dt))
}

/// Mean spacing between successive upward zero crossings of component `k`,
/// located by linear interpolation. `None` with fewer than two crossings.
pub fn crossing_period(records: &[Lorenz86Record], k: usize) -> Option<f64> {
    let crossings: Vec<f64> = records
        .windows(2)
        .filter_map(|w| {
            let (a, b) = (w[0].x[k], w[1].x[k]);
            (a < 0.0 && b >= 0.0).then(|| w[0].t + (w[1].t - w[0].t) * (-a) / (b - a))
        })
        .collect();
    if crossings.len() < 2 {
        return None;
    }
    Some((crossings[crossings.len() - 1] - crossings[0]) / (crossings.len() - 1) as f64)
}
