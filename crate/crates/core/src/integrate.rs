//! Fixed-step classical RK4 for the shallow-water state.
//!
//! Guidance (not enforced): keep `dt <= 0.5 * min(dx, dy) / sqrt(g * max h)`.

use std::io;

use crate::brackets::{tendencies_direct, Tendency};
use crate::diagnostics::{ChainRuleRates, DiagnosticsRecord, CHAIN_RULE_TOL};
use crate::elliptic::PoissonSettings;
use crate::error::{SimulationError, StateError, StepError};
use crate::grid::ScalarField;
use crate::state::{check_height, derive_fields_threaded, DerivedFields, SweState};

#[derive(Debug, Clone, PartialEq)]
pub struct RunSpec {
    pub dt: f64,
    pub n_steps: usize,
    pub record_every: usize,
    /// Zero disables snapshots.
    pub snapshot_every: usize,
    pub poisson: PoissonSettings,
    /// Orders `n` of the generalized enstrophies reported per record.
    pub enstrophy_orders: Vec<u32>,
    pub threads: usize,
}

impl RunSpec {
    pub fn new(dt: f64, n_steps: usize) -> Self {
        Self {
            dt,
            n_steps,
            record_every: 1,
            snapshot_every: 0,
            poisson: PoissonSettings::default(),
            enstrophy_orders: Vec::new(),
            threads: 1,
        }
    }

    pub fn validate(&self) -> Result<(), SimulationError> {
        let bad = |m: String| Err(SimulationError::InvalidRunSpec(m));
        if !(self.dt.is_finite() && self.dt > 0.0) {
            return bad(format!("dt must be positive, got {}", self.dt));
        }
        if self.n_steps == 0 {
            return bad("n_steps must be at least 1".into());
        }
        if self.record_every == 0 {
            return bad("record_every must be at least 1".into());
        }
        self.poisson
            .validate()
            .map_err(|e| SimulationError::InvalidRunSpec(e.to_string()))
    }
}

/// Consumer of the diagnostic and snapshot streams of [`simulate`].
pub trait RunSink {
    fn record(&mut self, record: &DiagnosticsRecord) -> io::Result<()>;

    fn snapshot(&mut self, _step: usize, _t: f64, _state: &SweState) -> io::Result<()> {
        Ok(())
    }
}

/// Discards everything.
pub struct NullSink;

impl RunSink for NullSink {
    fn record(&mut self, _record: &DiagnosticsRecord) -> io::Result<()> {
        Ok(())
    }
}

impl RunSink for Vec<DiagnosticsRecord> {
    fn record(&mut self, record: &DiagnosticsRecord) -> io::Result<()> {
        self.push(record.clone());
        Ok(())
    }
}

/// One RK4 step from a validated state.
pub fn rk4_step(s: &SweState, dt: f64, settings: &PoissonSettings) -> Result<SweState, StepError> {
    s.validate()?;
    let d = derive_fields_threaded(s, settings, 1)?;
    let k1 = tendencies_direct(&d);
    step_from(s, k1, dt, settings, 1)
}

fn advanced(s: &SweState, t: &Tendency, c: f64) -> SweState {
    let axpy = |x: &ScalarField, dx: &ScalarField| {
        let mut out = x.clone();
        out.axpy(c, dx);
        out
    };
    SweState {
        zeta: axpy(&s.zeta, &t.dzeta),
        mu: axpy(&s.mu, &t.dmu),
        h: axpy(&s.h, &t.dh),
        f: s.f,
        g: s.g,
    }
}

fn stage_height(s: &SweState, stage: usize) -> Result<(), StepError> {
    match check_height(&s.h) {
        Ok(()) => Ok(()),
        Err(StateError::NonPositiveHeight { i, j, value }) => Err(StepError::HeightUnderflow { stage, i, j, value }),
        Err(e) => Err(e.into()),
    }
}

/// Completes an RK4 step given the first-stage tendency. Stages 2 to 4 are
/// the intermediate evaluations; stage 5 labels the combined update.
fn step_from(s: &SweState, k1: Tendency, dt: f64, settings: &PoissonSettings, threads: usize) -> Result<SweState, StepError> {
    let stage = |input: &SweState, n: usize| -> Result<Tendency, StepError> {
        stage_height(input, n)?;
        let d = derive_fields_threaded(input, settings, threads)?;
        Ok(tendencies_direct(&d))
    };
    let k2 = stage(&advanced(s, &k1, 0.5 * dt), 2)?;
    let k3 = stage(&advanced(s, &k2, 0.5 * dt), 3)?;
    let k4 = stage(&advanced(s, &k3, dt), 4)?;

    let c = dt / 6.0;
    let combine = |x: &ScalarField, a: &ScalarField, b: &ScalarField, cc: &ScalarField, e: &ScalarField| {
        let values = x
            .values()
            .iter()
            .zip(a.values())
            .zip(b.values())
            .zip(cc.values())
            .zip(e.values())
            .map(|((((x, a), b), cc), e)| x + c * (a + 2.0 * b + 2.0 * cc + e))
            .collect();
        ScalarField::from_raw_parts(*x.grid(), values)
    };
    let next = SweState {
        zeta: combine(&s.zeta, &k1.dzeta, &k2.dzeta, &k3.dzeta, &k4.dzeta),
        mu: combine(&s.mu, &k1.dmu, &k2.dmu, &k3.dmu, &k4.dmu),
        h: combine(&s.h, &k1.dh, &k2.dh, &k3.dh, &k4.dh),
        f: s.f,
        g: s.g,
    };
    stage_height(&next, 5)?;
    next.validate()?;
    Ok(next)
}

fn check_rates(rates: &ChainRuleRates) -> Result<(), StepError> {
    if rates.dh_roundoff_relative() > CHAIN_RULE_TOL {
        return Err(StepError::ChainRuleViolation {
            which: "dH_chain",
            value: rates.dh,
            scale: rates.dh_l1,
            tolerance: CHAIN_RULE_TOL,
        });
    }
    if rates.dz_roundoff_relative() > CHAIN_RULE_TOL {
        return Err(StepError::ChainRuleViolation {
            which: "dZ_chain",
            value: rates.dz,
            scale: rates.dz_l1,
            tolerance: CHAIN_RULE_TOL,
        });
    }
    Ok(())
}

/// Advances `s0` by `spec.n_steps` steps. Records are emitted at step 0 and
/// every `record_every` steps after; snapshots likewise for `snapshot_every`.
/// Time is `step * dt`, never accumulated.
pub fn simulate(s0: &SweState, spec: &RunSpec, sink: &mut dyn RunSink) -> Result<SweState, SimulationError> {
    spec.validate()?;
    let fail = |step: usize, source: StepError| SimulationError::Step {
        step,
        time: step as f64 * spec.dt,
        source,
    };
    s0.validate().map_err(|e| fail(0, e.into()))?;

    let mut state = s0.clone();
    let mut derived: DerivedFields =
        derive_fields_threaded(&state, &spec.poisson, spec.threads).map_err(|e| fail(0, e.into()))?;
    for step in 0..=spec.n_steps {
        let t = step as f64 * spec.dt;
        let tendency = tendencies_direct(&derived);
        if step % spec.record_every == 0 {
            let (record, rates) = DiagnosticsRecord::evaluate(t, &state, &derived, &tendency, &spec.enstrophy_orders);
            check_rates(&rates).map_err(|e| fail(step, e))?;
            sink.record(&record).map_err(|source| SimulationError::Sink { step, source })?;
        }
        if spec.snapshot_every > 0 && step % spec.snapshot_every == 0 {
            sink.snapshot(step, t, &state)
                .map_err(|source| SimulationError::Sink { step, source })?;
        }
        if step == spec.n_steps {
            break;
        }
        state = step_from(&state, tendency, spec.dt, &spec.poisson, spec.threads).map_err(|e| fail(step + 1, e))?;
        derived = derive_fields_threaded(&state, &spec.poisson, spec.threads).map_err(|e| fail(step + 1, e.into()))?;
    }
    Ok(state)
}
