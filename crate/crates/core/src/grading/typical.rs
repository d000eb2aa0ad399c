use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use super::{is_well_formed, root_stack, veronese, GradingError, RootTarget};
use super::{GradedRingPresentation, Opaque, Relation, Section};
use crate::Poly;

/// A failed requirement of a typical presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypicalCondition {
    /// The hcf d of the first n weights divides the last weight.
    HcfDividesLastWeight { d: u64, last: u64 },
    /// The reduced weights d_i/d are not well formed.
    ReducedWeightsNotWellFormed(Vec<u64>),
    /// d does not divide twice the last weight.
    HcfDoesNotDivideTwiceLast { d: u64, last: u64 },
}

impl fmt::Display for TypicalCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypicalCondition::HcfDividesLastWeight { d, last } => {
                write!(f, "hcf-divides-last-weight: d = {d} divides {last}")
            }
            TypicalCondition::ReducedWeightsNotWellFormed(e) => {
                write!(f, "reduced-weights-not-well-formed: {e:?}")
            }
            TypicalCondition::HcfDoesNotDivideTwiceLast { d, last } => {
                write!(
                    f,
                    "hcf-does-not-divide-twice-last-weight: d = {d}, 2*{last}"
                )
            }
        }
    }
}

/// R = k[t_1, …, t_n, t_{n+1}]/(t_{n+1}² − F(t_1, …, t_n)) with its numerology.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TypicalData {
    pub n: usize,
    pub weights: Vec<u64>,
    /// F over t_1..t_n, graded by the original weights (degree 2·d_{n+1}).
    pub f: Section,
    pub d: u64,
    pub reduced_weights: Vec<u64>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootDatum {
    pub order: u64,
    pub divisor: Section,
    pub canonical_degree: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecompositionReport {
    pub typical: TypicalData,
    pub coarse_weights: Vec<u64>,
    pub canonical_stack_weights: Vec<u64>,
    pub rigidification: GradedRingPresentation,
    pub gerbe_index: u64,
    pub root: RootDatum,
    /// The root stack of the canonical free ring along F reproduces the
    /// rigidification.
    pub reconstruction_matches: bool,
}

/// Splits the relation as c·t² + G with t the last generator; returns F = −G/c.
fn split_square(r: &GradedRingPresentation) -> Result<Section, GradingError> {
    let last = r.generators().len() - 1;
    match r.relation() {
        None => Err(GradingError::Shape("presentation has no relation".into())),
        Some(Relation::PowerMinusOpaque {
            generator,
            power,
            opaque,
        }) => {
            if *generator != last || *power != 2 {
                return Err(GradingError::Shape(
                    "relation is not a square of the last generator minus F".into(),
                ));
            }
            Ok(Section::Opaque(opaque.clone()))
        }
        Some(Relation::Poly(p)) => {
            let mut square = vec![0u32; last + 1];
            square[last] = 2;
            let c = p.coeff(&square);
            if c.is_zero() {
                return Err(GradingError::Shape(
                    "relation has no square term in the last generator".into(),
                ));
            }
            let mut g = p.clone();
            g.add_term(square, c.neg_ref());
            if g.involves(last) {
                return Err(GradingError::Shape(
                    "F must not involve the last generator".into(),
                ));
            }
            let minus_inv_c = c.inv().expect("nonzero").neg_ref();
            let f = g.scale(&minus_inv_c);
            let keep: std::sync::Arc<[String]> = r.generators()[..last].to_vec().into();
            // t has exponent 0 everywhere in F, so any target index works for it.
            let mapping: Vec<usize> = (0..=last).map(|j| j.min(last - 1)).collect();
            Ok(Section::Poly(f.relabel(keep, &mapping)))
        }
    }
}

pub fn recognize_typical(r: &GradedRingPresentation) -> Result<TypicalData, GradingError> {
    let count = r.generators().len();
    if count < 2 {
        return Err(GradingError::Shape("need at least two generators".into()));
    }
    let f = split_square(r)?;
    let n = count - 1;
    let w = r.weights();
    let last = w[n];
    if r.relation_degree()? != Some(2 * last) {
        return Err(GradingError::Shape(
            "deg F differs from twice the last weight".into(),
        ));
    }
    let d = w[..n].iter().fold(0u64, |a, &x| a.gcd(&x));
    if last.is_multiple_of(d) {
        return Err(GradingError::NotTypical(
            TypicalCondition::HcfDividesLastWeight { d, last },
        ));
    }
    let e: Vec<u64> = w[..n].iter().map(|x| x / d).collect();
    // A single reduced weight is 1 by construction: P(1) is a point.
    let well_formed = n == 1 || is_well_formed(&e)?;
    if !well_formed {
        return Err(GradingError::NotTypical(
            TypicalCondition::ReducedWeightsNotWellFormed(e),
        ));
    }
    if !(2 * last).is_multiple_of(d) {
        return Err(GradingError::NotTypical(
            TypicalCondition::HcfDoesNotDivideTwiceLast { d, last },
        ));
    }
    let canonical = 2 * last / d;
    let mut notes = Vec::new();
    if canonical.is_multiple_of(2) {
        // d | 2·last and d ∤ last force the quotient to be odd.
        notes.push(format!(
            "canonical degree {canonical} of F is even; the square root is not coprime to it"
        ));
    } else {
        notes.push(format!(
            "canonical degree {canonical} of F is odd, coprime to the root order 2"
        ));
    }
    Ok(TypicalData {
        n,
        weights: w.to_vec(),
        f,
        d,
        reduced_weights: e,
        notes,
    })
}

pub fn stacky_decompose(r: &GradedRingPresentation) -> Result<DecompositionReport, GradingError> {
    let typical = recognize_typical(r)?;
    let d = typical.d;
    let half = d / 2;
    let canonical_degree = 2 * typical.weights[typical.n] / d;
    let rigidification = veronese(r, half)?;

    let names: Vec<String> = r.generators()[..typical.n].to_vec();
    let free = GradedRingPresentation::new(
        names,
        typical.reduced_weights.clone(),
        None,
        r.field_order(),
    )?;
    let divisor = match &typical.f {
        Section::Poly(p) => Section::Poly(p.clone()),
        Section::Opaque(o) => Section::Opaque(Opaque {
            label: o.label.clone(),
            degree: canonical_degree,
        }),
    };
    let root_name = &r.generators()[typical.n];
    let reconstruction_matches =
        match root_stack(&free, &RootTarget::Section(divisor.clone()), 2, root_name) {
            Ok(rebuilt) => rebuilt.is_isomorphic(&rigidification),
            Err(_) => false,
        };
    Ok(DecompositionReport {
        coarse_weights: typical.reduced_weights.clone(),
        canonical_stack_weights: typical.reduced_weights.clone(),
        rigidification,
        gerbe_index: half,
        root: RootDatum {
            order: 2,
            divisor,
            canonical_degree,
        },
        reconstruction_matches,
        typical,
    })
}

impl Section {
    pub fn as_poly(&self) -> Option<&Poly> {
        match self {
            Section::Poly(p) => Some(p),
            Section::Opaque(_) => None,
        }
    }
}
