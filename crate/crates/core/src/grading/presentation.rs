use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use super::GradingError;
use crate::exactnum::Rational;
use crate::polyalg::{WeightedDegree, WeightedGrading};
use crate::Poly;

/// An unspecified weighted-homogeneous polynomial known only by name and degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Opaque {
    pub label: String,
    pub degree: u64,
}

/// A homogeneous element of a graded ring: explicit, or opaque.
#[derive(Debug, Clone, PartialEq)]
pub enum Section {
    Poly(Poly),
    Opaque(Opaque),
}

impl Section {
    pub fn weighted_degree(&self, w: &WeightedGrading) -> Result<WeightedDegree, GradingError> {
        match self {
            Section::Poly(p) => Ok(p.weighted_degree(w)?),
            Section::Opaque(o) => Ok(WeightedDegree::Homogeneous(o.degree)),
        }
    }

    fn scale_degree(&self, num: u64, den: u64) -> Section {
        match self {
            Section::Poly(p) => Section::Poly(p.clone()),
            Section::Opaque(o) => Section::Opaque(Opaque {
                label: o.label.clone(),
                degree: o.degree * num / den,
            }),
        }
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Section::Poly(p) => write!(f, "{p}"),
            Section::Opaque(o) => write!(f, "{} (unspecified, degree {})", o.label, o.degree),
        }
    }
}

impl Serialize for Section {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The single defining relation of a hypersurface presentation.
#[derive(Debug, Clone, PartialEq)]
pub enum Relation {
    /// An explicit polynomial in the generators.
    Poly(Poly),
    /// `generator^power − F` with F opaque.
    PowerMinusOpaque {
        generator: usize,
        power: u32,
        opaque: Opaque,
    },
}

/// Generators with positive weights plus at most one homogeneous relation,
/// coefficients in Q(ζ_m).
#[derive(Debug, Clone, PartialEq)]
pub struct GradedRingPresentation {
    generators: Arc<[String]>,
    weights: WeightedGrading,
    relation: Option<Relation>,
    field_order: u32,
}

impl GradedRingPresentation {
    pub fn new(
        generators: Vec<String>,
        weights: Vec<u64>,
        relation: Option<Relation>,
        field_order: u32,
    ) -> Result<Self, GradingError> {
        if generators.len() != weights.len() {
            return Err(GradingError::Arity {
                expected: generators.len(),
                found: weights.len(),
            });
        }
        let mut seen = HashSet::new();
        for g in &generators {
            if !seen.insert(g.as_str()) {
                return Err(GradingError::DuplicateGenerator(g.clone()));
            }
        }
        let generators: Arc<[String]> = generators.into();
        let relation = relation.map(|r| match r {
            Relation::Poly(p) if p.vars() != &generators => {
                Relation::Poly(p.extend_vars_to(&generators))
            }
            other => other,
        });
        let out = GradedRingPresentation {
            generators,
            weights: WeightedGrading::new(weights)?,
            relation,
            field_order: field_order.max(1),
        };
        out.relation_degree()?;
        Ok(out)
    }

    pub fn free(generators: &[&str], weights: &[u64]) -> Result<Self, GradingError> {
        Self::new(
            generators.iter().map(|s| s.to_string()).collect(),
            weights.to_vec(),
            None,
            1,
        )
    }

    pub fn generators(&self) -> &Arc<[String]> {
        &self.generators
    }

    pub fn weights(&self) -> &[u64] {
        self.weights.weights()
    }

    pub fn grading(&self) -> &WeightedGrading {
        &self.weights
    }

    pub fn relation(&self) -> Option<&Relation> {
        self.relation.as_ref()
    }

    pub fn field_order(&self) -> u32 {
        self.field_order
    }

    pub fn is_free(&self) -> bool {
        self.relation.is_none()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Degree of the relation, checking that it is weighted-homogeneous.
    pub fn relation_degree(&self) -> Result<Option<u64>, GradingError> {
        match &self.relation {
            None => Ok(None),
            Some(Relation::Poly(p)) => match p.weighted_degree(&self.weights)? {
                WeightedDegree::Homogeneous(d) => Ok(Some(d)),
                WeightedDegree::Zero => Err(GradingError::Shape(
                    "relation is the zero polynomial".into(),
                )),
                WeightedDegree::Inhomogeneous => Err(GradingError::InhomogeneousRelation),
            },
            Some(Relation::PowerMinusOpaque {
                generator,
                power,
                opaque,
            }) => {
                let lead = self.weights().get(*generator).copied().ok_or_else(|| {
                    GradingError::Shape("relation names a missing generator".into())
                })?;
                if lead * *power as u64 != opaque.degree {
                    return Err(GradingError::InhomogeneousRelation);
                }
                Ok(Some(opaque.degree))
            }
        }
    }

    /// Same ring and relation with weights multiplied by `factor / divisor`.
    pub(crate) fn rescaled(&self, factor: u64, divisor: u64) -> Self {
        let weights = self
            .weights()
            .iter()
            .map(|w| w * factor / divisor)
            .collect();
        let relation = self.relation.as_ref().map(|r| match r {
            Relation::Poly(p) => Relation::Poly(p.clone()),
            Relation::PowerMinusOpaque {
                generator,
                power,
                opaque,
            } => Relation::PowerMinusOpaque {
                generator: *generator,
                power: *power,
                opaque: match Section::Opaque(opaque.clone()).scale_degree(factor, divisor) {
                    Section::Opaque(o) => o,
                    Section::Poly(_) => unreachable!(),
                },
            },
        });
        GradedRingPresentation {
            generators: self.generators.clone(),
            weights: WeightedGrading::new(weights).expect("rescaled weights stay positive"),
            relation,
            field_order: self.field_order,
        }
    }

    /// If the relation is `t − s` with s free of t, drops t and the relation.
    pub fn eliminate_linear_generator(&self) -> Option<Self> {
        let Some(Relation::Poly(p)) = &self.relation else {
            return None;
        };
        for t in 0..self.generators.len() {
            let linear: Vec<_> = p.terms().filter(|(e, _)| e[t] > 0).collect();
            if linear.len() != 1 {
                continue;
            }
            let (e, _) = linear[0];
            if e[t] != 1 || e.iter().enumerate().any(|(j, &k)| j != t && k > 0) {
                continue;
            }
            let keep: Vec<String> = self
                .generators
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != t)
                .map(|(_, g)| g.clone())
                .collect();
            let weights = self
                .weights()
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != t)
                .map(|(_, &w)| w)
                .collect();
            return GradedRingPresentation::new(keep, weights, None, self.field_order).ok();
        }
        None
    }

    /// Isomorphism of presentations up to renaming: a weight-preserving
    /// bijection of generators carrying one relation to a nonzero multiple of
    /// the other.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        if self.generators.len() != other.generators.len() {
            return false;
        }
        let mut a = self.weights().to_vec();
        let mut b = other.weights().to_vec();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
        let mut mapping = vec![usize::MAX; self.generators.len()];
        let mut used = vec![false; self.generators.len()];
        self.match_from(other, 0, &mut mapping, &mut used)
    }

    fn match_from(&self, other: &Self, i: usize, mapping: &mut [usize], used: &mut [bool]) -> bool {
        if i == mapping.len() {
            return self.relation_matches(other, mapping);
        }
        for j in 0..mapping.len() {
            if !used[j] && other.weights()[j] == self.weights()[i] {
                used[j] = true;
                mapping[i] = j;
                if self.match_from(other, i + 1, mapping, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }

    fn relation_matches(&self, other: &Self, mapping: &[usize]) -> bool {
        match (&self.relation, &other.relation) {
            (None, None) => true,
            (Some(Relation::Poly(p)), Some(Relation::Poly(q))) => p
                .relabel(other.generators.clone(), mapping)
                .proportionality(q)
                .is_some(),
            (
                Some(Relation::PowerMinusOpaque {
                    generator: g1,
                    power: p1,
                    opaque: o1,
                }),
                Some(Relation::PowerMinusOpaque {
                    generator: g2,
                    power: p2,
                    opaque: o2,
                }),
            ) => mapping[*g1] == *g2 && p1 == p2 && o1 == o2,
            _ => false,
        }
    }

    /// Ring-spec text: `name : weight` lines, optional `field:`, `opaque:` and
    /// `relation:` lines. Relation coefficients are cleared to integers.
    pub fn to_ringspec(&self) -> String {
        let mut out = String::new();
        for (g, w) in self.generators.iter().zip(self.weights()) {
            out.push_str(&format!("{g} : {w}\n"));
        }
        if self.field_order > 1 {
            out.push_str(&format!("field: zeta({})\n", self.field_order));
        }
        match &self.relation {
            None => {}
            Some(Relation::Poly(p)) => {
                out.push_str(&format!("relation: {}\n", integral_expression(p)));
            }
            Some(Relation::PowerMinusOpaque {
                generator,
                power,
                opaque,
            }) => {
                out.push_str(&format!("opaque: {} : {}\n", opaque.label, opaque.degree));
                out.push_str(&format!(
                    "relation: {}^{} - {}\n",
                    self.generators[*generator], power, opaque.label
                ));
            }
        }
        out
    }
}

impl Poly {
    /// Re-expresses over `target`, matching variables by name.
    fn extend_vars_to(&self, target: &Arc<[String]>) -> Poly {
        let mapping: Vec<usize> = self
            .vars()
            .iter()
            .map(|v| {
                target
                    .iter()
                    .position(|t| t == v)
                    .expect("relation variable is not a generator")
            })
            .collect();
        self.relabel(target.clone(), &mapping)
    }
}

/// Prints `p` scaled by the lcm of its coefficient denominators, in the
/// `+ - * ^ zeta(m)` grammar the ring-spec loader reads.
pub fn integral_expression(p: &Poly) -> String {
    let mut lcm = num_bigint::BigInt::from(1);
    for (_, c) in p.terms() {
        for q in c.coeffs() {
            lcm = lcm.lcm(q.denom());
        }
    }
    let scale = Rational::from_integer(lcm);
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (e, c)) in p.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
        let c = c.scale(&scale);
        let mono: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(j, &k)| {
                if k == 1 {
                    p.vars()[j].clone()
                } else {
                    format!("{}^{}", p.vars()[j], k)
                }
            })
            .collect();
        let (negative, coeff) = match c.to_rational() {
            Some(q) => (q.is_negative(), q.abs().to_string()),
            None => (
                false,
                format!("({})", cyclotomic_expression(c.coeffs(), c.order())),
            ),
        };
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&coeff);
        } else if coeff == "1" {
            out.push_str(&mono.join("*"));
        } else {
            out.push_str(&coeff);
            out.push('*');
            out.push_str(&mono.join("*"));
        }
    }
    out
}

fn cyclotomic_expression(coeffs: &[Rational], m: u32) -> String {
    let mut parts = Vec::new();
    for (k, q) in coeffs.iter().enumerate() {
        if q.is_zero() {
            continue;
        }
        let z = match k {
            0 => None,
            1 => Some(format!("zeta({m})")),
            _ => Some(format!("zeta({m})^{k}")),
        };
        let mag = q.abs();
        let body = match (&z, mag == Rational::from_integer(1.into())) {
            (None, _) => mag.to_string(),
            (Some(z), true) => z.clone(),
            (Some(z), false) => format!("{mag}*{z}"),
        };
        parts.push((q.is_negative(), body));
    }
    let mut out = String::new();
    for (i, (neg, body)) in parts.into_iter().enumerate() {
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

impl fmt::Display for GradedRingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .generators
            .iter()
            .zip(self.weights())
            .map(|(g, w)| format!("{g}:{w}"))
            .collect();
        write!(f, "k[{}]", gens.join(", "))?;
        match &self.relation {
            None => Ok(()),
            Some(Relation::Poly(p)) => write!(f, "/({p})"),
            Some(Relation::PowerMinusOpaque {
                generator,
                power,
                opaque,
            }) => write!(
                f,
                "/({}^{} - {}[deg {}])",
                self.generators[*generator], power, opaque.label, opaque.degree
            ),
        }
    }
}

#[derive(Serialize)]
struct GeneratorJson<'a> {
    name: &'a str,
    weight: u64,
}

#[derive(Serialize)]
struct PresentationJson<'a> {
    generators: Vec<GeneratorJson<'a>>,
    relation: Option<String>,
    field_order: u32,
}

impl Serialize for GradedRingPresentation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let relation = self.relation.as_ref().map(|r| match r {
            Relation::Poly(p) => integral_expression(p),
            Relation::PowerMinusOpaque {
                generator,
                power,
                opaque,
            } => format!(
                "{}^{} - {}",
                self.generators[*generator], power, opaque.label
            ),
        });
        PresentationJson {
            generators: self
                .generators
                .iter()
                .zip(self.weights())
                .map(|(g, &w)| GeneratorJson { name: g, weight: w })
                .collect(),
            relation,
            field_order: self.field_order,
        }
        .serialize(s)
    }
}
