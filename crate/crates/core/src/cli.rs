//! Runners behind the `swe` and `l86` binaries. Each returns a process exit
//! code: 0 on success, 1 on a numerical or I/O failure, 2 on bad input.

use std::f64::consts::PI;
use std::io;
use std::path::Path;

use crate::config::{parse_config, parse_l86_config, L86Config, SweConfig};
use crate::diagnostics::DiagnosticsRecord;
use crate::error::PresetError;
use crate::integrate::{simulate, RunSink};
use crate::io::{write_l86_trajectory, FileSink};
use crate::lorenz86;
use crate::presets::{self, PresetKind};
use crate::state::SweState;
use crate::verify::{identity_checks, rel_diff};

pub const THREADS_VAR: &str = "SWE_THREADS";

/// Parallelism degree from `SWE_THREADS`; unset means 1.
pub fn threads_from_env() -> Result<usize, String> {
    match std::env::var(THREADS_VAR) {
        Err(_) => Ok(1),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(format!("{THREADS_VAR} must be a positive integer, got `{v}`")),
        },
    }
}

pub fn initial_state(c: &SweConfig) -> Result<SweState, PresetError> {
    match c.preset {
        PresetKind::Rest => presets::rest(c.grid, c.h0, c.f, c.g),
        PresetKind::Vortex => presets::vortex(c.grid, c.h0, c.amplitude, c.f, c.g),
        PresetKind::GravityWave => presets::gravity_wave(c.grid, c.h0, c.amplitude, c.f, c.g, c.kx, c.ky),
        PresetKind::RandomBalanced => presets::random_balanced(c.grid, c.h0, c.amplitude, c.f, c.g, c.kmax, c.seed),
        PresetKind::L86Default => unreachable!("rejected by the config parser"),
    }
}

fn read_config(path: &Path) -> Result<String, i32> {
    std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        2
    })
}

pub fn load_swe_config(path: &Path) -> Result<SweConfig, i32> {
    parse_config(&read_config(path)?).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        2
    })
}

pub fn load_l86_config(path: &Path) -> Result<L86Config, i32> {
    parse_l86_config(&read_config(path)?).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        2
    })
}

/// Forwards to the file sink and keeps the first and latest records.
struct Tracking {
    inner: FileSink,
    first: Option<DiagnosticsRecord>,
    last: Option<DiagnosticsRecord>,
}

impl RunSink for Tracking {
    fn record(&mut self, record: &DiagnosticsRecord) -> io::Result<()> {
        if self.first.is_none() {
            self.first = Some(record.clone());
        }
        self.last = Some(record.clone());
        self.inner.record(record)
    }

    fn snapshot(&mut self, step: usize, t: f64, state: &SweState) -> io::Result<()> {
        self.inner.snapshot(step, t, state)
    }
}

fn drift(a: f64, b: f64) -> f64 {
    if a == 0.0 {
        (b - a).abs()
    } else {
        ((b - a) / a).abs()
    }
}

pub fn run_swe(config: &SweConfig, threads: usize) -> i32 {
    let s0 = match initial_state(config) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: initial state: {e}");
            return 2;
        }
    };
    let mut spec = config.run.clone();
    spec.threads = threads;
    let sink = match FileSink::create(&config.output_dir, &spec.enstrophy_orders, config.pgm) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let mut sink = Tracking {
        inner: sink,
        first: None,
        last: None,
    };
    let result = simulate(&s0, &spec, &mut sink);
    let Tracking { inner, first, last } = sink;
    if let Err(e) = inner.finish() {
        eprintln!("error: {e}");
        return 1;
    }
    if let Err(e) = result {
        eprintln!("error: {e}");
        return 1;
    }
    if let (Some(a), Some(b)) = (first, last) {
        println!("preset {} on {}x{}, {} steps to t = {}", config.preset.name(), config.grid.nx(), config.grid.ny(), spec.n_steps, b.t);
        println!("relative drift: energy {:.3e}, potential enstrophy {:.3e}, mass {:.3e}", drift(a.energy, b.energy), drift(a.potential_enstrophy, b.potential_enstrophy), drift(a.mass, b.mass));
    }
    0
}

pub fn run_l86(config: &L86Config) -> i32 {
    let records = match lorenz86::simulate(&config.x0, &config.params, config.dt, config.n_steps, config.record_every) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    if let Err(e) = std::fs::create_dir_all(&config.output_dir) {
        eprintln!("error: {}: {e}", config.output_dir.display());
        return 1;
    }
    if let Err(e) = write_l86_trajectory(&records, config.output_dir.join("l86.csv")) {
        eprintln!("error: {e}");
        return 1;
    }
    let (first, last) = (&records[0], &records[records.len() - 1]);
    println!("{} steps to t = {}", config.n_steps, last.t);
    println!("relative drift: H {:.3e}, Z {:.3e}", drift(first.energy, last.energy), drift(first.enstrophy, last.enstrophy));
    if let Some(period) = lorenz86::crossing_period(&records, 3) {
        let expected = 2.0 * PI * config.params.eps;
        println!("fast period: measured {period:.10}, 2*pi*eps = {expected:.10}, relative deviation {:.3e}", rel_diff(period, expected));
    }
    0
}

pub fn run_verify() -> i32 {
    let checks = match identity_checks(0x5eed) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let mut failed = 0;
    for c in &checks {
        let verdict = if c.passed() { "ok" } else { "FAIL" };
        println!("{:<40} residual {:.3e}  tolerance {:.0e}  {verdict}", c.name, c.residual, c.tolerance);
        failed += usize::from(!c.passed());
    }
    if failed == 0 {
        println!("all {} identities hold", checks.len());
        0
    } else {
        println!("{failed} of {} identities failed", checks.len());
        1
    }
}
