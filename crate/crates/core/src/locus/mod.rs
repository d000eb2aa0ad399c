//! Divisor membership and Jacobian singularity at weighted projective
//! points, and the incidence reports for the quintic and sextic moduli.

mod point;
mod report;

use thiserror::Error;

use crate::polyalg::{PolyError, WeightedDegree, WeightedGrading};
use crate::Poly;

pub use point::PointW;
pub use report::{
    audit, quintic_locus_report, sextic_locus_report, Claim, Incidence, LocusFamily, LocusReport,
    Verdict, QUINTIC_CLAIMS, SEXTIC_CLAIMS,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LocusError {
    #[error("polynomial is not weighted-homogeneous for weights {0:?}")]
    Inhomogeneous(Vec<u64>),
    #[error("expected {expected} coordinates, found {found}")]
    WeightMismatch { expected: usize, found: usize },
    #[error("the point has all coordinates zero")]
    ZeroPoint,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn check(f: &Poly, w: &WeightedGrading, p: &PointW) -> Result<(), LocusError> {
    if f.nvars() != w.len() {
        return Err(LocusError::WeightMismatch {
            expected: w.len(),
            found: f.nvars(),
        });
    }
    if p.weights() != w {
        return Err(LocusError::WeightMismatch {
            expected: w.len(),
            found: p.coords().len(),
        });
    }
    match f.weighted_degree(w)? {
        WeightedDegree::Inhomogeneous => Err(LocusError::Inhomogeneous(w.weights().to_vec())),
        _ => Ok(()),
    }
}

pub fn on_divisor(f: &Poly, w: &WeightedGrading, p: &PointW) -> Result<bool, LocusError> {
    check(f, w, p)?;
    Ok(f.evaluate(p.coords())?.is_zero())
}

/// F(p) = 0 and every partial vanishes at p, on the affine cone.
pub fn is_singular_at(f: &Poly, w: &WeightedGrading, p: &PointW) -> Result<bool, LocusError> {
    if !on_divisor(f, w, p)? {
        return Ok(false);
    }
    for d in f.partials() {
        if !d.evaluate(p.coords())?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Σ e_i x_i ∂F/∂x_i = deg(F)·F.
pub fn euler_relation_holds(f: &Poly, w: &WeightedGrading) -> Result<bool, LocusError> {
    let deg = match f.weighted_degree(w)? {
        WeightedDegree::Homogeneous(d) => d,
        WeightedDegree::Zero => return Ok(true),
        WeightedDegree::Inhomogeneous => {
            return Err(LocusError::Inhomogeneous(w.weights().to_vec()))
        }
    };
    let vars = f.vars().clone();
    let lhs = f.partials().iter().zip(w.weights()).enumerate().fold(
        Poly::zero(vars.clone()),
        |acc, (k, (d, &e))| {
            let term = Poly::var(vars.clone(), k)
                .mul(d)
                .scale(&crate::exactnum::Cyclotomic::from_i64(e as i64));
            acc.add(&term)
        },
    );
    Ok(lhs == f.scale(&crate::exactnum::Cyclotomic::from_i64(deg as i64)))
}

#[cfg(test)]
mod tests;
