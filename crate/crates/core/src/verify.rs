//! Machine-precision identity checks, shared by `swe verify` and the tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::brackets::{functional_rate, poisson_operator_apply, tendencies_direct, tendency_weighted_rate};
use crate::diagnostics::{chain_rule_rates, mass_rate};
use crate::elliptic::PoissonSettings;
use crate::error::EllipticError;
use crate::grid::{Grid, ScalarField};
use crate::lorenz86::{conserved_rates, rhs_direct, rhs_nambu, Lorenz86Params, Lorenz86State, SignVariant};
use crate::ops::{inner, inner_abs, jacobian, laplacian, weighted_laplacian};
use crate::sampling::{random_field, random_gradient, random_valid_state};
use crate::state::derive_fields;

/// `|a - b| / max(|a|, |b|)`, zero when both vanish.
pub fn rel_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

/// `max|a - b| / max(max|a|, max|b|)`.
pub fn field_rel_diff(a: &ScalarField, b: &ScalarField) -> f64 {
    let scale = a.max_abs().max(b.max_abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).max_abs() / scale
    }
}

/// Discrete operator identities on one random field set.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct OperatorResiduals {
    pub laplacian_self_adjoint: f64,
    pub weighted_self_adjoint: f64,
    pub jacobian_antisymmetry: f64,
    pub jacobian_cyclicity: f64,
    pub q_identity: f64,
}

impl OperatorResiduals {
    pub fn max(self, o: Self) -> Self {
        Self {
            laplacian_self_adjoint: self.laplacian_self_adjoint.max(o.laplacian_self_adjoint),
            weighted_self_adjoint: self.weighted_self_adjoint.max(o.weighted_self_adjoint),
            jacobian_antisymmetry: self.jacobian_antisymmetry.max(o.jacobian_antisymmetry),
            jacobian_cyclicity: self.jacobian_cyclicity.max(o.jacobian_cyclicity),
            q_identity: self.q_identity.max(o.q_identity),
        }
    }

    pub fn worst(&self) -> f64 {
        [
            self.laplacian_self_adjoint,
            self.weighted_self_adjoint,
            self.jacobian_antisymmetry,
            self.jacobian_cyclicity,
            self.q_identity,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

pub fn operator_residuals(grid: Grid, rng: &mut impl Rng) -> OperatorResiduals {
    let a = random_field(grid, rng);
    let b = random_field(grid, rng);
    let c = random_field(grid, rng);
    let w = random_field(grid, rng).map(|v| 1.0 + 0.5 * v);
    let q = random_field(grid, rng);

    let jab = jacobian(&a, &b);
    let antisym = field_rel_diff(&jab, &(-&jacobian(&b, &a)));
    let self_term = jacobian(&a, &a).max_abs();
    let (jbc, jca) = (jacobian(&b, &c), jacobian(&c, &a));
    let abc = inner(&a, &jbc);
    let cyc_scale = inner_abs(&a, &jbc).max(inner_abs(&b, &jca)).max(inner_abs(&c, &jab));
    let cyclic = rel_to(abc, inner(&b, &jca), cyc_scale).max(rel_to(abc, inner(&c, &jab), cyc_scale));
    let half_q2 = q.map(|v| 0.5 * v * v);

    OperatorResiduals {
        laplacian_self_adjoint: adjoint_gap(&a, &laplacian(&a), &b, &laplacian(&b)),
        weighted_self_adjoint: adjoint_gap(&a, &weighted_laplacian(&w, &a), &b, &weighted_laplacian(&w, &b)),
        jacobian_antisymmetry: antisym.max(self_term),
        jacobian_cyclicity: cyclic,
        q_identity: {
            let (wq, lc) = (weighted_laplacian(&q, &c), laplacian(&c));
            rel_to(inner(&q, &wq), inner(&half_q2, &lc), inner_abs(&q, &wq).max(inner_abs(&half_q2, &lc)))
        },
    }
}

/// `|a - b| / scale`, absolute when the scale vanishes.
fn rel_to(a: f64, b: f64, scale: f64) -> f64 {
    if scale == 0.0 {
        (a - b).abs()
    } else {
        (a - b).abs() / scale
    }
}

/// Gap between `<x, ly>` and `<lx, y>`, relative to the integrals of the
/// absolute integrands: random fields often make the integrals themselves
/// cancel far below their roundoff scale.
fn adjoint_gap(x: &ScalarField, lx: &ScalarField, y: &ScalarField, ly: &ScalarField) -> f64 {
    rel_to(inner(x, ly), inner(lx, y), inner_abs(x, ly).max(inner_abs(lx, y)))
}

/// Chain-rule rates on one random valid state, each relative to its scale.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ChainResiduals {
    pub energy: f64,
    pub enstrophy: f64,
    pub mass: f64,
}

pub fn chain_residuals(grid: Grid, rng: &mut impl Rng, settings: &PoissonSettings) -> Result<ChainResiduals, EllipticError> {
    let s = random_valid_state(grid, rng);
    let d = derive_fields(&s, settings)?;
    let t = tendencies_direct(&d);
    let rates = chain_rule_rates(&d, &t);
    let (m, m_scale) = mass_rate(&t);
    Ok(ChainResiduals {
        energy: rates.dh_relative(),
        enstrophy: rates.dz_relative(),
        mass: if m_scale == 0.0 { m.abs() } else { m.abs() / m_scale },
    })
}

/// Bracket form against the direct tendencies on one random state and gradient.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct BracketResiduals {
    pub functional_rate: f64,
    pub operator_elementwise: f64,
}

pub fn bracket_residuals(grid: Grid, rng: &mut impl Rng, settings: &PoissonSettings) -> Result<BracketResiduals, EllipticError> {
    let s = random_valid_state(grid, rng);
    let d = derive_fields(&s, settings)?;
    let t = tendencies_direct(&d);
    let fg = random_gradient(grid, rng);
    let op = poisson_operator_apply(&d, &d.energy_gradient());
    let elementwise = field_rel_diff(&t.dzeta, &op.dzeta)
        .max(field_rel_diff(&t.dmu, &op.dmu))
        .max(field_rel_diff(&t.dh, &op.dh));
    Ok(BracketResiduals {
        functional_rate: rel_diff(functional_rate(&d, &fg), tendency_weighted_rate(&fg, &t)),
        operator_elementwise: elementwise,
    })
}

/// Nambu-vs-direct deviation and pointwise conservation rates, both
/// absolute, maximised over random states in `[-1, 1]^5` and a small
/// parameter grid.
pub fn l86_residuals(samples: usize, rng: &mut impl Rng) -> (f64, f64) {
    let mut deviation = 0.0f64;
    let mut rate = 0.0f64;
    for _ in 0..samples {
        let x = Lorenz86State(std::array::from_fn(|_| rng.gen_range(-1.0..1.0)));
        for b in [0.0, 0.5, 2.0] {
            for eps in [0.1, 1.0] {
                for w in [0.0, 1.0, -3.0, 7.0] {
                    let p = Lorenz86Params { b, eps, w, variant: SignVariant::Corrected };
                    let (n, d) = (rhs_nambu(&x, &p), rhs_direct(&x, &p));
                    deviation = n.iter().zip(&d).map(|(a, b)| (a - b).abs()).fold(deviation, f64::max);
                }
                let p = Lorenz86Params::new(b, eps).expect("valid grid point");
                let (dh, dz) = conserved_rates(&x, &p);
                rate = rate.max(dh.abs()).max(dz.abs());
            }
        }
    }
    (deviation, rate)
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub residual: f64,
    pub tolerance: f64,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.residual <= self.tolerance
    }
}

/// The full identity suite on modest random inputs.
pub fn identity_checks(seed: u64) -> Result<Vec<IdentityCheck>, EllipticError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let settings = PoissonSettings::default();
    let grid = Grid::new(32, 32, 1.0, 1.0).expect("fixed grid is valid");
    let skewed = Grid::new(24, 40, 2.0, 1.0).expect("fixed grid is valid");

    let mut ops = OperatorResiduals::default();
    for _ in 0..10 {
        ops = ops.max(operator_residuals(grid, &mut rng));
        ops = ops.max(operator_residuals(skewed, &mut rng));
    }
    let mut chain = ChainResiduals::default();
    let mut brackets = BracketResiduals::default();
    for _ in 0..5 {
        let c = chain_residuals(grid, &mut rng, &settings)?;
        chain = ChainResiduals {
            energy: chain.energy.max(c.energy),
            enstrophy: chain.enstrophy.max(c.enstrophy),
            mass: chain.mass.max(c.mass),
        };
        let b = bracket_residuals(grid, &mut rng, &settings)?;
        brackets = BracketResiduals {
            functional_rate: brackets.functional_rate.max(b.functional_rate),
            operator_elementwise: brackets.operator_elementwise.max(b.operator_elementwise),
        };
    }
    let (l86_dev, l86_rate) = l86_residuals(200, &mut rng);

    let check = |name, residual, tolerance| IdentityCheck { name, residual, tolerance };
    Ok(vec![
        check("laplacian self-adjointness", ops.laplacian_self_adjoint, 1e-12),
        check("weighted laplacian self-adjointness", ops.weighted_self_adjoint, 1e-12),
        check("jacobian antisymmetry", ops.jacobian_antisymmetry, 1e-12),
        check("jacobian cyclicity", ops.jacobian_cyclicity, 1e-12),
        check("q-weighted laplacian identity", ops.q_identity, 1e-12),
        check("energy chain rule", chain.energy, 1e-12),
        check("enstrophy chain rule", chain.enstrophy, 1e-12),
        check("mass rate", chain.mass, 1e-13),
        check("bracket rate vs direct tendencies", brackets.functional_rate, 1e-12),
        check("operator form vs direct tendencies", brackets.operator_elementwise, 1e-13),
        check("five-mode nambu vs direct", l86_dev, 1e-14),
        check("five-mode conservation rates", l86_rate, 1e-14),
    ])
}
