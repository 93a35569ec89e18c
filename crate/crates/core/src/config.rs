//! Flat `key=value` run configuration.
//!
//! One pair per line; `#` starts a comment; blank lines are ignored; keys
//! may appear once. Unknown keys are rejected. Keys and defaults for the
//! shallow-water runner:
//!
//! | key                | default            |
//! |--------------------|--------------------|
//! | `preset`           | required           |
//! | `nx`, `ny`         | required           |
//! | `lx`, `ly`         | required           |
//! | `f`, `g`           | required           |
//! | `dt`, `n_steps`    | required           |
//! | `h0`               | `1`                |
//! | `amplitude`        | `0.1`              |
//! | `kx`, `ky`         | `1`, `0`           |
//! | `kmax`             | `4`                |
//! | `seed`             | `0`                |
//! | `record_every`     | `1`                |
//! | `snapshot_every`   | `0` (never)        |
//! | `poisson_tol`      | `1e-12`            |
//! | `poisson_max_iter` | `10 * nx * ny`     |
//! | `enstrophy_orders` | `1,2` (may be empty) |
//! | `output_dir`       | `output`           |
//! | `pgm`              | `true`             |
//!
//! The five-mode runner takes `dt` and `n_steps` (required), `b`, `eps`,
//! `x1`..`x5` (defaults from the `l86_default` preset), `w` (`0`),
//! `variant` (`corrected` or `as_printed`), `record_every` (`1`) and
//! `output_dir` (`output`). `preset`, if given, must be `l86_default`.

use std::collections::HashMap;
use std::path::PathBuf;
use std::str::FromStr;

use crate::elliptic::PoissonSettings;
use crate::error::{ConfigError, GridError};
use crate::grid::Grid;
use crate::integrate::RunSpec;
use crate::lorenz86::{Lorenz86Params, Lorenz86State, SignVariant};
use crate::presets::{l86_default, PresetKind};

const SWE_KEYS: &[&str] = &[
    "preset",
    "nx",
    "ny",
    "lx",
    "ly",
    "f",
    "g",
    "dt",
    "n_steps",
    "h0",
    "amplitude",
    "kx",
    "ky",
    "kmax",
    "seed",
    "record_every",
    "snapshot_every",
    "poisson_tol",
    "poisson_max_iter",
    "enstrophy_orders",
    "output_dir",
    "pgm",
];

const L86_KEYS: &[&str] = &[
    "preset",
    "dt",
    "n_steps",
    "record_every",
    "b",
    "eps",
    "w",
    "variant",
    "x1",
    "x2",
    "x3",
    "x4",
    "x5",
    "output_dir",
];

struct Pairs {
    map: HashMap<String, (usize, String)>,
}

fn parse_error(line: usize, message: impl Into<String>) -> ConfigError {
    ConfigError::ParseError {
        line,
        message: message.into(),
    }
}

impl Pairs {
    fn parse(text: &str, allowed: &[&str]) -> Result<Self, ConfigError> {
        let mut map = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| parse_error(line, format!("expected key=value, got `{content}`")))?;
            let (key, value) = (key.trim(), value.trim());
            if !allowed.contains(&key) {
                return Err(ConfigError::UnknownKey {
                    line,
                    key: key.to_string(),
                });
            }
            if let Some((first, _)) = map.insert(key.to_string(), (line, value.to_string())) {
                return Err(parse_error(line, format!("duplicate key `{key}` (first set on line {first})")));
            }
        }
        Ok(Self { map })
    }

    fn line(&self, key: &str) -> usize {
        self.map.get(key).map_or(0, |(l, _)| *l)
    }

    fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, ConfigError> {
        match self.map.get(key) {
            None => Ok(None),
            Some((line, value)) => value
                .parse()
                .map(Some)
                .map_err(|_| parse_error(*line, format!("invalid value `{value}` for `{key}`"))),
        }
    }

    fn or<T: FromStr>(&self, key: &str, default: T) -> Result<T, ConfigError> {
        Ok(self.get(key)?.unwrap_or(default))
    }

    fn require<T: FromStr>(&self, key: &'static str) -> Result<T, ConfigError> {
        self.get(key)?.ok_or(ConfigError::MissingRequiredKey(key))
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.map.get(key).map(|(_, v)| v.as_str())
    }

    fn check(&self, ok: bool, key: &str, message: impl FnOnce() -> String) -> Result<(), ConfigError> {
        if ok {
            Ok(())
        } else {
            Err(parse_error(self.line(key), message()))
        }
    }
}

fn positive(p: &Pairs, key: &str, v: f64) -> Result<(), ConfigError> {
    p.check(v.is_finite() && v > 0.0, key, || format!("`{key}` must be positive, got {v}"))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweConfig {
    pub preset: PresetKind,
    pub grid: Grid,
    pub f: f64,
    pub g: f64,
    pub h0: f64,
    pub amplitude: f64,
    pub kx: i32,
    pub ky: i32,
    pub kmax: i32,
    pub seed: u64,
    pub run: RunSpec,
    pub output_dir: PathBuf,
    pub pgm: bool,
}

pub fn parse_config(text: &str) -> Result<SweConfig, ConfigError> {
    let p = Pairs::parse(text, SWE_KEYS)?;

    let preset_name: String = p.require("preset")?;
    let preset = match PresetKind::parse(&preset_name) {
        Some(PresetKind::L86Default) | None => {
            return Err(parse_error(
                p.line("preset"),
                format!("`{preset_name}` is not a shallow-water preset (rest, vortex, gravity_wave, random_balanced)"),
            ))
        }
        Some(k) => k,
    };

    let (nx, ny): (usize, usize) = (p.require("nx")?, p.require("ny")?);
    let (lx, ly): (f64, f64) = (p.require("lx")?, p.require("ly")?);
    let grid = Grid::new(nx, ny, lx, ly).map_err(|e| {
        let key = match e {
            GridError::TooFewCells { nx, .. } if nx < 4 => "nx",
            GridError::TooFewCells { .. } => "ny",
            _ if !(lx.is_finite() && lx > 0.0) => "lx",
            _ => "ly",
        };
        parse_error(p.line(key), e.to_string())
    })?;

    let f: f64 = p.require("f")?;
    p.check(f.is_finite(), "f", || format!("`f` must be finite, got {f}"))?;
    let g: f64 = p.require("g")?;
    positive(&p, "g", g)?;
    let h0 = p.or("h0", 1.0)?;
    positive(&p, "h0", h0)?;
    let amplitude: f64 = p.or("amplitude", 0.1)?;
    p.check(amplitude.is_finite(), "amplitude", || "`amplitude` must be finite".into())?;

    let dt: f64 = p.require("dt")?;
    positive(&p, "dt", dt)?;
    let n_steps: usize = p.require("n_steps")?;
    p.check(n_steps >= 1, "n_steps", || "`n_steps` must be at least 1".into())?;
    let record_every: usize = p.or("record_every", 1)?;
    p.check(record_every >= 1, "record_every", || "`record_every` must be at least 1".into())?;

    let poisson = PoissonSettings {
        rel_tolerance: p.or("poisson_tol", 1e-12)?,
        max_iterations: p.get("poisson_max_iter")?,
    };
    poisson
        .validate()
        .map_err(|e| parse_error(p.line("poisson_tol").max(p.line("poisson_max_iter")), e.to_string()))?;

    let enstrophy_orders = match p.raw("enstrophy_orders") {
        None => vec![1, 2],
        Some(list) => list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse()
                    .map_err(|_| parse_error(p.line("enstrophy_orders"), format!("invalid enstrophy order `{s}`")))
            })
            .collect::<Result<_, _>>()?,
    };
    let kmax: i32 = p.or("kmax", 4)?;
    p.check(kmax >= 1, "kmax", || "`kmax` must be at least 1".into())?;

    Ok(SweConfig {
        preset,
        grid,
        f,
        g,
        h0,
        amplitude,
        kx: p.or("kx", 1)?,
        ky: p.or("ky", 0)?,
        kmax,
        seed: p.or("seed", 0)?,
        run: RunSpec {
            dt,
            n_steps,
            record_every,
            snapshot_every: p.or("snapshot_every", 0)?,
            poisson,
            enstrophy_orders,
            threads: 1,
        },
        output_dir: PathBuf::from(p.or("output_dir", String::from("output"))?),
        pgm: p.or("pgm", true)?,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct L86Config {
    pub x0: Lorenz86State,
    pub params: Lorenz86Params,
    pub dt: f64,
    pub n_steps: usize,
    pub record_every: usize,
    pub output_dir: PathBuf,
}

pub fn parse_l86_config(text: &str) -> Result<L86Config, ConfigError> {
    let p = Pairs::parse(text, L86_KEYS)?;
    if let Some(name) = p.raw("preset") {
        p.check(name == PresetKind::L86Default.name(), "preset", || {
            format!("`{name}` is not a five-mode preset (l86_default)")
        })?;
    }
    let (x_default, p_default) = l86_default();

    let dt: f64 = p.require("dt")?;
    positive(&p, "dt", dt)?;
    let n_steps: usize = p.require("n_steps")?;
    p.check(n_steps >= 1, "n_steps", || "`n_steps` must be at least 1".into())?;
    let record_every: usize = p.or("record_every", 1)?;
    p.check(record_every >= 1, "record_every", || "`record_every` must be at least 1".into())?;

    let b: f64 = p.or("b", p_default.b)?;
    p.check(b.is_finite(), "b", || "`b` must be finite".into())?;
    let eps: f64 = p.or("eps", p_default.eps)?;
    positive(&p, "eps", eps)?;
    let variant = match p.raw("variant") {
        None | Some("corrected") => SignVariant::Corrected,
        Some("as_printed") => SignVariant::AsPrinted,
        Some(other) => {
            return Err(parse_error(
                p.line("variant"),
                format!("`{other}` is not a sign variant (corrected, as_printed)"),
            ))
        }
    };
    let mut x = x_default.0;
    for (k, key) in ["x1", "x2", "x3", "x4", "x5"].into_iter().enumerate() {
        x[k] = p.or(key, x[k])?;
        p.check(x[k].is_finite(), key, || format!("`{key}` must be finite"))?;
    }
    Ok(L86Config {
        x0: Lorenz86State(x),
        params: Lorenz86Params {
            b,
            eps,
            w: p.or("w", 0.0)?,
            variant,
        },
        dt,
        n_steps,
        record_every,
        output_dir: PathBuf::from(p.or("output_dir", String::from("output"))?),
    })
}
