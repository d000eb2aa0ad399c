//! Ring-spec files: `name : weight` lines, optional `field: zeta(m)`,
//! `opaque: NAME : degree` and `relation: <expression>` lines. `#` starts a
//! comment.

use thiserror::Error;

use stacky_core::grading::{GradedRingPresentation, GradingError, Opaque, Relation};
use stacky_core::polyalg::var_list;

use crate::expr::{parse_poly, Expr, LowerError, ParseError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RingSpecError {
    #[error("line {line}: expected `name : weight` or a `key: value` line")]
    MissingColon { line: usize },
    #[error("line {line}: weight {text:?} is not a positive integer")]
    BadWeight { line: usize, text: String },
    #[error("line {line}: field must be written zeta(m)")]
    BadField { line: usize },
    #[error("line {line}: opaque must be written `NAME : degree`")]
    BadOpaque { line: usize },
    #[error("line {line}: {key} given twice")]
    Repeated { line: usize, key: &'static str },
    #[error("no generators")]
    NoGenerators,
    #[error("line {line}: {source}")]
    Syntax { line: usize, source: ParseError },
    #[error("line {line}: {source}")]
    Lower { line: usize, source: LowerError },
    #[error("line {line}: a relation using an opaque section must read `t^k - NAME`")]
    OpaqueShape { line: usize },
    #[error(transparent)]
    Grading(#[from] GradingError),
}

#[derive(Default)]
struct Fields {
    generators: Vec<(String, u64)>,
    field: Option<u32>,
    opaque: Option<(String, u64)>,
    relation: Option<(usize, Expr)>,
}

fn set<T>(
    slot: &mut Option<T>,
    value: T,
    line: usize,
    key: &'static str,
) -> Result<(), RingSpecError> {
    if slot.is_some() {
        return Err(RingSpecError::Repeated { line, key });
    }
    *slot = Some(value);
    Ok(())
}

fn positive(text: &str, line: usize) -> Result<u64, RingSpecError> {
    match text.trim().parse::<u64>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(RingSpecError::BadWeight {
            line,
            text: text.trim().to_string(),
        }),
    }
}

pub fn parse_ringspec(text: &str) -> Result<GradedRingPresentation, RingSpecError> {
    let mut fields = Fields::default();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once(':')
            .ok_or(RingSpecError::MissingColon { line })?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "field" => {
                let m = value
                    .strip_prefix("zeta(")
                    .and_then(|v| v.strip_suffix(')'))
                    .and_then(|v| v.trim().parse::<u32>().ok())
                    .filter(|&m| m > 0)
                    .ok_or(RingSpecError::BadField { line })?;
                set(&mut fields.field, m, line, "field")?;
            }
            "opaque" => {
                let (name, deg) = value
                    .split_once(':')
                    .ok_or(RingSpecError::BadOpaque { line })?;
                let name = name.trim();
                if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                    return Err(RingSpecError::BadOpaque { line });
                }
                let deg = positive(deg, line).map_err(|_| RingSpecError::BadOpaque { line })?;
                set(&mut fields.opaque, (name.to_string(), deg), line, "opaque")?;
            }
            "relation" => {
                let e =
                    parse_poly(value).map_err(|source| RingSpecError::Syntax { line, source })?;
                set(&mut fields.relation, (line, e), line, "relation")?;
            }
            name => {
                fields
                    .generators
                    .push((name.to_string(), positive(value, line)?));
            }
        }
    }
    build(fields)
}

fn build(fields: Fields) -> Result<GradedRingPresentation, RingSpecError> {
    if fields.generators.is_empty() {
        return Err(RingSpecError::NoGenerators);
    }
    let names: Vec<String> = fields.generators.iter().map(|(n, _)| n.clone()).collect();
    let weights: Vec<u64> = fields.generators.iter().map(|(_, w)| *w).collect();
    let field = fields.field.unwrap_or(1);
    let relation = match (fields.relation, fields.opaque) {
        (None, _) => None,
        (Some((line, e)), Some((label, degree))) if e.variables().contains(&label) => {
            let shape = RingSpecError::OpaqueShape { line };
            let Expr::Sub(lhs, rhs) = e else {
                return Err(shape);
            };
            if *rhs != Expr::Var(label.clone()) {
                return Err(shape);
            }
            let (g, power) = match *lhs {
                Expr::Pow(base, k) => match *base {
                    Expr::Var(g) => (g, k),
                    _ => return Err(shape),
                },
                _ => return Err(shape),
            };
            let generator = names
                .iter()
                .position(|n| *n == g)
                .ok_or(RingSpecError::Lower {
                    line,
                    source: LowerError::UnknownIdentifier(g),
                })?;
            Some(Relation::PowerMinusOpaque {
                generator,
                power,
                opaque: Opaque { label, degree },
            })
        }
        (Some((line, e)), _) => {
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let p = e
                .lower(&var_list(&refs))
                .map_err(|source| RingSpecError::Lower { line, source })?;
            Some(Relation::Poly(p))
        }
    };
    Ok(GradedRingPresentation::new(
        names, weights, relation, field,
    )?)
}
