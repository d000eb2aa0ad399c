//! Weighted graded rings: Veronese subrings, regrading, root stacks,
//! rigidification and the decomposition of typical hypersurface rings.

mod chart;
mod presentation;
mod typical;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::exactnum::Cyclotomic;
use crate::polyalg::{PolyError, WeightedDegree};
use crate::Poly;

pub use chart::{affine_chart, wps_singular_strata, ChartPresentation, ChartRelation, Stratum};
pub use presentation::{integral_expression, GradedRingPresentation, Opaque, Relation, Section};
pub use typical::{
    recognize_typical, stacky_decompose, DecompositionReport, RootDatum, TypicalCondition,
    TypicalData,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GradingError {
    #[error("generator {generator} has weight {weight}, not divisible by {n}")]
    IndivisibleWeight {
        generator: String,
        weight: u64,
        n: u64,
    },
    #[error("root order {r} and section degree {n} share the factor {common}")]
    CommonFactor { r: u64, n: u64, common: u64 },
    #[error("presentation has no generators")]
    EmptyPresentation,
    #[error("expected {expected} entries, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("duplicate generator {0}")]
    DuplicateGenerator(String),
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("relation is not weighted-homogeneous")]
    InhomogeneousRelation,
    #[error("section is not weighted-homogeneous")]
    InhomogeneousSection,
    #[error("scaling factor must be positive")]
    ZeroFactor,
    #[error("not a typical presentation: {0}")]
    NotTypical(TypicalCondition),
    #[error("unsupported shape: {0}")]
    Shape(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The n-th Veronese subring R^(n): every weight divided by n.
pub fn veronese(
    r: &GradedRingPresentation,
    n: u64,
) -> Result<GradedRingPresentation, GradingError> {
    if n == 0 {
        return Err(GradingError::ZeroFactor);
    }
    if r.generators().is_empty() {
        return Err(GradingError::EmptyPresentation);
    }
    for (g, &w) in r.generators().iter().zip(r.weights()) {
        if w % n != 0 {
            return Err(GradingError::IndivisibleWeight {
                generator: g.clone(),
                weight: w,
                n,
            });
        }
    }
    Ok(r.rescaled(1, n))
}

/// R^(1/n): every weight multiplied by n.
pub fn regrade_inverse(
    r: &GradedRingPresentation,
    n: u64,
) -> Result<GradedRingPresentation, GradingError> {
    if n == 0 {
        return Err(GradingError::ZeroFactor);
    }
    Ok(r.rescaled(n, 1))
}

/// Highest common factor of the generator weights.
pub fn hcf_degrees(r: &GradedRingPresentation) -> Result<u64, GradingError> {
    if r.generators().is_empty() {
        return Err(GradingError::EmptyPresentation);
    }
    Ok(r.weights().iter().fold(0, |a, &w| a.gcd(&w)))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Rigidification {
    pub ring: GradedRingPresentation,
    pub gerbe_index: u64,
}

/// Divides out the generic stabilizer: returns R^(h) and the μ_h gerbe index
/// h = hcf of the weights.
pub fn rigidify(r: &GradedRingPresentation) -> Result<Rigidification, GradingError> {
    let h = hcf_degrees(r)?;
    Ok(Rigidification {
        ring: veronese(r, h)?,
        gerbe_index: h,
    })
}

/// What to extract a root of: an existing generator or an explicit section.
#[derive(Debug, Clone)]
pub enum RootTarget {
    Generator(String),
    Section(Section),
}

/// Root stack of order `r` along the section s of degree n:
/// S = R^(1/r)[t]/(t^r − s), deg t = n.
///
/// Supported for free R. A presentation with a relation has no room for a
/// second one and is rejected.
pub fn root_stack(
    base: &GradedRingPresentation,
    target: &RootTarget,
    r: u64,
    root_name: &str,
) -> Result<GradedRingPresentation, GradingError> {
    if r == 0 {
        return Err(GradingError::ZeroFactor);
    }
    if base.generators().is_empty() {
        return Err(GradingError::EmptyPresentation);
    }
    if !base.is_free() {
        return Err(GradingError::Shape(
            "root stacks are built over free presentations only".into(),
        ));
    }
    let section = match target {
        RootTarget::Generator(name) => {
            let idx = base
                .generator_index(name)
                .ok_or_else(|| GradingError::UnknownGenerator(name.clone()))?;
            Section::Poly(Poly::var(base.generators().clone(), idx))
        }
        RootTarget::Section(s) => s.clone(),
    };
    let n = match section.weighted_degree(base.grading())? {
        WeightedDegree::Homogeneous(n) if n > 0 => n,
        WeightedDegree::Homogeneous(_) => {
            return Err(GradingError::Shape("section has degree 0".into()))
        }
        WeightedDegree::Zero => return Err(GradingError::Shape("section is zero".into())),
        WeightedDegree::Inhomogeneous => return Err(GradingError::InhomogeneousSection),
    };
    let common = r.gcd(&n);
    if common != 1 {
        return Err(GradingError::CommonFactor { r, n, common });
    }
    if base.generator_index(root_name).is_some() {
        return Err(GradingError::DuplicateGenerator(root_name.to_string()));
    }
    let mut gens: Vec<String> = base.generators().to_vec();
    gens.push(root_name.to_string());
    let mut weights: Vec<u64> = base.weights().iter().map(|w| w * r).collect();
    weights.push(n);
    let vars: std::sync::Arc<[String]> = gens.clone().into();
    let t_index = gens.len() - 1;
    let relation = match section {
        Section::Poly(s) => {
            let s = s.extend_vars(vars.clone());
            let power =
                u32::try_from(r).map_err(|_| GradingError::Shape("root order too large".into()))?;
            Relation::Poly(Poly::var(vars, t_index).pow(power).sub(&s))
        }
        Section::Opaque(o) => Relation::PowerMinusOpaque {
            generator: t_index,
            power: u32::try_from(r)
                .map_err(|_| GradingError::Shape("root order too large".into()))?,
            opaque: Opaque {
                label: o.label,
                degree: o.degree * r,
            },
        },
    };
    GradedRingPresentation::new(gens, weights, Some(relation), base.field_order())
}

/// Well-formedness of weighted projective space P(a_0, …, a_n): every n of
/// the weights are coprime.
pub fn is_well_formed(weights: &[u64]) -> Result<bool, GradingError> {
    if weights.len() < 2 {
        return Err(GradingError::Arity {
            expected: 2,
            found: weights.len(),
        });
    }
    if weights.contains(&0) {
        return Err(GradingError::Poly(PolyError::NonPositiveWeight));
    }
    Ok((0..weights.len()).all(|skip| {
        weights
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != skip)
            .fold(0u64, |a, (_, &w)| a.gcd(&w))
            == 1
    }))
}

pub(crate) fn one() -> Cyclotomic {
    Cyclotomic::from_i64(1)
}
