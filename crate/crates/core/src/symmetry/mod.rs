//! Binary polyhedral groups, semi-invariance and the symmetry catalogs of
//! low-degree binary forms.

mod catalog;
mod ground;
mod groups;

use serde::Serialize;
use thiserror::Error;

use crate::exactnum::{Cyclotomic, ExactError};
use crate::polyalg::PolyError;
use crate::Form;

pub use catalog::{catalog_cases, is_generic, special_form, CatalogCase, Family};
pub use ground::{ground_forms, klein_generate, GroundFormSet};
pub use groups::{
    group_elements, group_generators, is_subgroup, GroupSpec, SL2Matrix, ELEMENT_BOUND,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SymmetryError {
    #[error("group closure for {group} exceeded {limit} elements")]
    SizeBound { group: GroupSpec, limit: usize },
    #[error("form has {distinct} distinct roots; its stabilizer is infinite")]
    InfiniteStabilizer { distinct: usize },
    #[error("cyclic group {0} has no ground forms")]
    NoGroundForms(GroupSpec),
    #[error("parameter pair {0} is (0, 0)")]
    ZeroParameter(usize),
    #[error("unknown catalog case {0}")]
    UnknownCase(String),
    #[error("expected {expected} parameter pairs, found {found}")]
    ParameterCount { expected: usize, found: usize },
    #[error("invalid group {0}")]
    InvalidGroup(String),
    #[error("matrix does not have determinant 1")]
    NotUnimodular,
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// λ_g with f∘g = λ_g·f for each generator g, in generator order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SemiInvarianceCertificate {
    pub group: GroupSpec,
    pub scalars: Vec<Cyclotomic>,
}

impl SemiInvarianceCertificate {
    /// The character on a word in the generators (indices into the list).
    pub fn character(&self, word: &[usize]) -> Cyclotomic {
        word.iter().fold(Cyclotomic::from_i64(1), |acc, &k| {
            acc.mul_ref(&self.scalars[k])
        })
    }
}

pub fn semi_invariance(
    f: &Form,
    spec: GroupSpec,
) -> Result<Option<SemiInvarianceCertificate>, SymmetryError> {
    if f.is_zero() {
        return Err(PolyError::ZeroForm.into());
    }
    let mut scalars = Vec::new();
    for g in group_generators(spec)? {
        match f.proportionality(&g.act(f)) {
            Some(l) => scalars.push(l),
            None => return Ok(None),
        }
    }
    Ok(Some(SemiInvarianceCertificate {
        group: spec,
        scalars,
    }))
}

/// Every catalog group certifying semi-invariance, and the maximal ones
/// under containment of standard copies.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilizerAnalysis {
    pub certifying: Vec<GroupSpec>,
    pub maximal: Vec<GroupSpec>,
}

pub fn stabilizer_analysis(f: &Form, n_max: u32) -> Result<StabilizerAnalysis, SymmetryError> {
    let distinct = f.distinct_roots()?;
    if distinct < 3 {
        return Err(SymmetryError::InfiniteStabilizer { distinct });
    }
    let mut candidates = Vec::new();
    for n in 1..=n_max.max(1) {
        candidates.push(GroupSpec::C(n));
        candidates.push(GroupSpec::D(n));
    }
    candidates.extend([GroupSpec::T, GroupSpec::O, GroupSpec::I]);
    let mut certifying = Vec::new();
    for g in candidates {
        if semi_invariance(f, g)?.is_some() {
            certifying.push(g);
        }
    }
    let mut maximal = Vec::new();
    for &g in &certifying {
        let mut dominated = false;
        for &h in &certifying {
            if h != g && h.order() > g.order() && is_subgroup(g, h)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            maximal.push(g);
        }
    }
    Ok(StabilizerAnalysis {
        certifying,
        maximal,
    })
}

/// Maximal catalog groups (C_n, D_n with n ≤ n_max, T, O, I) under which f
/// is semi-invariant.
pub fn catalog_stabilizer(f: &Form, n_max: u32) -> Result<Vec<GroupSpec>, SymmetryError> {
    Ok(stabilizer_analysis(f, n_max)?.maximal)
}

/// All root multiplicities strictly below d/2.
pub fn is_stable(f: &Form) -> Result<bool, SymmetryError> {
    let profile = f.multiplicity_profile()?;
    let d = f.degree() as u32;
    Ok(profile.first().is_none_or(|&m| 2 * m < d))
}

pub fn has_finite_stabilizer(f: &Form) -> Result<bool, SymmetryError> {
    Ok(f.distinct_roots()? >= 3)
}

#[cfg(test)]
mod tests;
