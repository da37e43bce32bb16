use crate::idealcalc;
use crate::polyring::{Budget, Polynomial};
use crate::Result;

use super::BundleTotalSpace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaActionReport {
    /// `f·(V + g·t) − g·(U + f·t) − (fV − gU)` expanded in the ring with `t`;
    /// the action preserves the equation iff this is the zero polynomial.
    pub invariance_residue: Polynomial,
    /// `I_total + (f, g)` has no points: no orbit is a fixed point.
    pub fixed_point_free: bool,
}

impl GaActionReport {
    pub fn passed(&self) -> bool {
        self.invariance_residue.is_zero() && self.fixed_point_free
    }
}

/// Checks `t·(s, U, V) = (s, U + f(s)t, V + g(s)t)` on the total space.
pub fn verify_ga_action(space: &BundleTotalSpace, budget: &Budget) -> Result<GaActionReport> {
    let ring = space.ring();
    let t_name = ring.fresh_name("t");
    let ext = ring.extend([t_name.as_str()])?;
    let t = ext.var(&t_name)?;
    let (f, g) = space.lifted_center()?;
    let (f, g) = (f.to_ring(&ext)?, g.to_ring(&ext)?);
    let u = ext.var(super::U_NAME)?;
    let v = ext.var(super::V_NAME)?;
    let moved_u = &u + &(&f * &t);
    let moved_v = &v + &(&g * &t);
    let before = &(&f * &v) - &(&g * &u);
    let after = &(&f * &moved_v) - &(&g * &moved_u);
    let invariance_residue = &after - &before;

    let (f0, g0) = space.lifted_center()?;
    let fixed = space.total().ideal().with([f0, g0])?;
    let fixed_point_free = idealcalc::variety_is_empty(&fixed, budget)?;
    Ok(GaActionReport { invariance_residue, fixed_point_free })
}
