//! Conserved integrals and chain-rule rate checks.

use crate::brackets::{tendency_weighted_rate, tendency_weighted_scale, FunctionalGradient, Tendency};
use crate::grid::ScalarField;
use crate::ops::{inner, inner_abs, integral};
use crate::state::{DerivedFields, SweState};

/// Chain-rule rates must vanish to this fraction of their constituent scale.
pub const CHAIN_RULE_TOL: f64 = 1e-12;

/// `H = 1/2 integral(h |v|^2 + g h^2)`.
pub fn energy(s: &SweState, d: &DerivedFields) -> f64 {
    let g = s.g;
    let density: Vec<f64> = s
        .h
        .values()
        .iter()
        .zip(d.u.values().iter().zip(d.v.values()))
        .map(|(h, (u, v))| 0.5 * (h * (u * u + v * v) + g * h * h))
        .collect();
    integral(&ScalarField::from_raw_parts(*s.grid(), density))
}

/// `Z = 1/2 integral(h q^2)`.
pub fn potential_enstrophy(s: &SweState, d: &DerivedFields) -> f64 {
    generalized_enstrophy(s, d, 0)
}

/// `Z_n = 1/(2+n) integral(h q^(2+n))`. Reported, not conserved for `n > 0`.
pub fn generalized_enstrophy(s: &SweState, d: &DerivedFields, n: u32) -> f64 {
    let p = 2 + n as i32;
    let c = 1.0 / f64::from(p);
    let density: Vec<f64> = s
        .h
        .values()
        .iter()
        .zip(d.q.values())
        .map(|(h, q)| c * h * q.powi(p))
        .collect();
    integral(&ScalarField::from_raw_parts(*s.grid(), density))
}

pub fn mass(s: &SweState) -> f64 {
    integral(&s.h)
}

/// Energy and enstrophy rates from the chain rule with two reference scales:
/// the largest of the three integrals in each sum, and the sum of absolute
/// pointwise products (`integral|F dX|` over all components), which bounds
/// the roundoff of the summation itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainRuleRates {
    pub dh: f64,
    pub dz: f64,
    pub dh_scale: f64,
    pub dz_scale: f64,
    pub dh_l1: f64,
    pub dz_l1: f64,
}

impl ChainRuleRates {
    /// `|dH| / max |integral|` over the three constituent integrals.
    pub fn dh_relative(&self) -> f64 {
        relative(self.dh, self.dh_scale)
    }

    pub fn dz_relative(&self) -> f64 {
        relative(self.dz, self.dz_scale)
    }

    /// `|dH| / integral|F dX|`: robust when the constituent integrals cancel
    /// among themselves.
    pub fn dh_roundoff_relative(&self) -> f64 {
        relative(self.dh, self.dh_l1)
    }

    pub fn dz_roundoff_relative(&self) -> f64 {
        relative(self.dz, self.dz_l1)
    }
}

fn relative(v: f64, scale: f64) -> f64 {
    if scale == 0.0 {
        v.abs()
    } else {
        v.abs() / scale
    }
}

pub fn chain_rule_rates(d: &DerivedFields, t: &Tendency) -> ChainRuleRates {
    let hg = d.energy_gradient();
    let zg = d.enstrophy_gradient();
    let largest = |fg: &FunctionalGradient| {
        [inner(&fg.zeta, &t.dzeta), inner(&fg.mu, &t.dmu), inner(&fg.h, &t.dh)]
            .iter()
            .fold(0.0f64, |m, v| m.max(v.abs()))
    };
    ChainRuleRates {
        dh: tendency_weighted_rate(&hg, t),
        dz: tendency_weighted_rate(&zg, t),
        dh_scale: largest(&hg),
        dz_scale: largest(&zg),
        dh_l1: tendency_weighted_scale(&hg, t),
        dz_l1: tendency_weighted_scale(&zg, t),
    }
}

/// Mass rate `integral(dh/dt)` and its roundoff scale `integral|dh/dt|`.
pub fn mass_rate(t: &Tendency) -> (f64, f64) {
    let one = ScalarField::constant(*t.grid(), 1.0);
    (integral(&t.dh), inner_abs(&t.dh, &one))
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiagnosticsRecord {
    pub t: f64,
    pub energy: f64,
    pub potential_enstrophy: f64,
    /// `Z_n` for each configured order, in configuration order.
    pub z_n: Vec<f64>,
    pub mass: f64,
    pub dh_chain: f64,
    pub dz_chain: f64,
}

impl DiagnosticsRecord {
    pub fn evaluate(t: f64, s: &SweState, d: &DerivedFields, tendency: &Tendency, orders: &[u32]) -> (Self, ChainRuleRates) {
        let rates = chain_rule_rates(d, tendency);
        let record = Self {
            t,
            energy: energy(s, d),
            potential_enstrophy: potential_enstrophy(s, d),
            z_n: orders.iter().map(|&n| generalized_enstrophy(s, d, n)).collect(),
            mass: mass(s),
            dh_chain: rates.dh,
            dz_chain: rates.dz,
        };
        (record, rates)
    }

    pub fn is_finite(&self) -> bool {
        [self.t, self.energy, self.potential_enstrophy, self.mass, self.dh_chain, self.dz_chain]
            .iter()
            .chain(&self.z_n)
            .all(|v| v.is_finite())
    }
}
