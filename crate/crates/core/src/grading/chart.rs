use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use super::{is_well_formed, one, GradedRingPresentation, GradingError, Relation};
use crate::Poly;

/// A maximal coordinate subset whose weights share a factor > 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stratum {
    /// 0-based coordinate indices.
    pub coords: Vec<usize>,
    pub gcd: u64,
}

/// Singular strata of a well-formed P(e_0, …, e_n).
pub fn wps_singular_strata(weights: &[u64]) -> Result<Vec<Stratum>, GradingError> {
    if !is_well_formed(weights)? {
        return Err(GradingError::Shape(format!(
            "weights {weights:?} are not well formed"
        )));
    }
    let n = weights.len();
    if n > 24 {
        return Err(GradingError::Shape("too many coordinates".into()));
    }
    let gcd_of = |mask: u32| {
        (0..n)
            .filter(|j| mask >> j & 1 == 1)
            .fold(0u64, |a, j| a.gcd(&weights[j]))
    };
    let candidates: Vec<u32> = (1u32..1 << n).filter(|&m| gcd_of(m) > 1).collect();
    let mut out: Vec<Stratum> = candidates
        .iter()
        .filter(|&&m| !candidates.iter().any(|&o| o != m && o & m == m))
        .map(|&m| Stratum {
            coords: (0..n).filter(|j| m >> j & 1 == 1).collect(),
            gcd: gcd_of(m),
        })
        .collect();
    out.sort_by(|a, b| a.coords.cmp(&b.coords));
    Ok(out)
}

/// The relation after setting the chart generator to 1.
#[derive(Debug, Clone, PartialEq)]
pub enum ChartRelation {
    Poly(Poly),
    Opaque(String),
}

impl Serialize for ChartRelation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ChartRelation::Poly(p) => s.serialize_str(&super::integral_expression(p)),
            ChartRelation::Opaque(d) => s.serialize_str(d),
        }
    }
}

/// R/(f − 1), graded by Z/r with r = deg f.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChartPresentation {
    pub base: GradedRingPresentation,
    pub chart_generator: String,
    pub order: u64,
    /// Remaining generators with their degrees mod r.
    pub residual: Vec<(String, u64)>,
    pub relation: Option<ChartRelation>,
}

impl ChartPresentation {
    /// The chart is a scheme: the residual group μ_r is trivial.
    pub fn is_scheme_like(&self) -> bool {
        self.order == 1
    }
}

impl fmt::Display for ChartPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .residual
            .iter()
            .map(|(g, w)| format!("{g}:{w}"))
            .collect();
        write!(f, "k[{}]", gens.join(", "))?;
        match &self.relation {
            Some(ChartRelation::Poly(p)) => write!(f, "/({p})")?,
            Some(ChartRelation::Opaque(d)) => write!(f, "/({d})")?,
            None => {}
        }
        write!(f, " graded by Z/{}", self.order)
    }
}

pub fn affine_chart(
    r: &GradedRingPresentation,
    f: &str,
) -> Result<ChartPresentation, GradingError> {
    let idx = r
        .generator_index(f)
        .ok_or_else(|| GradingError::UnknownGenerator(f.to_string()))?;
    let order = r.weights()[idx];
    let rest: Vec<usize> = (0..r.generators().len()).filter(|&j| j != idx).collect();
    let residual = rest
        .iter()
        .map(|&j| (r.generators()[j].clone(), r.weights()[j] % order))
        .collect();
    let vars: Arc<[String]> = rest
        .iter()
        .map(|&j| r.generators()[j].clone())
        .collect::<Vec<_>>()
        .into();
    let relation = match r.relation() {
        None => None,
        Some(Relation::Poly(p)) => {
            let images: Vec<Poly> = (0..r.generators().len())
                .map(|j| match rest.iter().position(|&k| k == j) {
                    Some(pos) => Poly::var(vars.clone(), pos),
                    None => Poly::constant(vars.clone(), one()),
                })
                .collect();
            Some(ChartRelation::Poly(p.compose(&images)?))
        }
        Some(Relation::PowerMinusOpaque {
            generator,
            power,
            opaque,
        }) => {
            let lead = if *generator == idx {
                "1".to_string()
            } else {
                format!("{}^{}", r.generators()[*generator], power)
            };
            Some(ChartRelation::Opaque(format!(
                "{lead} - {}|{f}=1",
                opaque.label
            )))
        }
    };
    Ok(ChartPresentation {
        base: r.clone(),
        chart_generator: f.to_string(),
        order,
        residual,
        relation,
    })
}
