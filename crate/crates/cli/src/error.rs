use thiserror::Error;

use stacky_core::exactnum::ExactError;
use stacky_core::grading::{GradingError, TypicalCondition};
use stacky_core::invariants::InvariantsError;
use stacky_core::locus::LocusError;
use stacky_core::polyalg::PolyError;
use stacky_core::symmetry::SymmetryError;

use crate::expr::{LowerError, ParseError};
use crate::ringspec::RingSpecError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid parameter {0:?}: expected l:m")]
    BadParameter(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Lower(#[from] LowerError),
    #[error("{0}")]
    RingSpec(#[from] RingSpecError),
    #[error("{0}")]
    Grading(#[from] GradingError),
    #[error("{0}")]
    Symmetry(#[from] SymmetryError),
    #[error("{0}")]
    Invariants(#[from] InvariantsError),
    #[error("{0}")]
    Locus(#[from] LocusError),
}

fn poly_code(e: &PolyError) -> &'static str {
    match e {
        PolyError::VariableMismatch { .. } => "poly.variable-mismatch",
        PolyError::Arity { .. } => "poly.arity",
        PolyError::NonPositiveWeight => "poly.non-positive-weight",
        PolyError::ZeroForm => "poly.zero-form",
        PolyError::NotBinary(_) => "poly.not-binary",
        PolyError::NotHomogeneous => "poly.not-homogeneous",
    }
}

fn exact_code(e: &ExactError) -> &'static str {
    match e {
        ExactError::DivisionByZero => "exact.division-by-zero",
        ExactError::IncompatibleOrder { .. } => "exact.incompatible-order",
        ExactError::ZeroOrder => "exact.zero-order",
        ExactError::OrderBound { .. } => "exact.order-bound",
    }
}

fn grading_code(e: &GradingError) -> &'static str {
    match e {
        GradingError::IndivisibleWeight { .. } => "grading.indivisible-weight",
        GradingError::CommonFactor { .. } => "grading.common-factor",
        GradingError::EmptyPresentation => "grading.empty-presentation",
        GradingError::Arity { .. } => "grading.arity",
        GradingError::DuplicateGenerator(_) => "grading.duplicate-generator",
        GradingError::UnknownGenerator(_) => "grading.unknown-generator",
        GradingError::InhomogeneousRelation => "grading.inhomogeneous-relation",
        GradingError::InhomogeneousSection => "grading.inhomogeneous-section",
        GradingError::ZeroFactor => "grading.zero-factor",
        GradingError::NotTypical(c) => match c {
            TypicalCondition::HcfDividesLastWeight { .. } => {
                "grading.not-typical.hcf-divides-last-weight"
            }
            TypicalCondition::ReducedWeightsNotWellFormed(_) => {
                "grading.not-typical.reduced-weights-not-well-formed"
            }
            TypicalCondition::HcfDoesNotDivideTwiceLast { .. } => {
                "grading.not-typical.hcf-does-not-divide-twice-last-weight"
            }
        },
        GradingError::Shape(_) => "grading.shape",
        GradingError::Poly(p) => poly_code(p),
    }
}

fn symmetry_code(e: &SymmetryError) -> &'static str {
    match e {
        SymmetryError::SizeBound { .. } => "symmetry.size-bound",
        SymmetryError::InfiniteStabilizer { .. } => "symmetry.infinite-stabilizer",
        SymmetryError::NoGroundForms(_) => "symmetry.no-ground-forms",
        SymmetryError::ZeroParameter(_) => "symmetry.zero-parameter",
        SymmetryError::UnknownCase(_) => "symmetry.unknown-case",
        SymmetryError::ParameterCount { .. } => "symmetry.parameter-count",
        SymmetryError::InvalidGroup(_) => "symmetry.invalid-group",
        SymmetryError::NotUnimodular => "symmetry.not-unimodular",
        SymmetryError::Exact(x) => exact_code(x),
        SymmetryError::Poly(p) => poly_code(p),
    }
}

fn invariants_code(e: &InvariantsError) -> &'static str {
    match e {
        InvariantsError::UnknownFamily(_) => "invariants.unknown-family",
        InvariantsError::WrongDegree { .. } => "invariants.wrong-degree",
        InvariantsError::OrderTooLarge { .. } => "invariants.order-too-large",
        InvariantsError::NotStable => "invariants.not-stable",
        InvariantsError::BothZero => "invariants.both-zero",
        InvariantsError::UnderDetermined(_) => "invariants.under-determined",
        InvariantsError::Recipe(_) => "invariants.recipe",
        InvariantsError::Grading(g) => grading_code(g),
        InvariantsError::Poly(p) => poly_code(p),
    }
}

impl CliError {
    /// Machine-readable code; distinct for every error path.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::BadParameter(_) => "bad-parameter",
            CliError::Parse(_) => "syntax",
            CliError::Lower(l) => match l {
                LowerError::UnknownIdentifier(_) => "unknown-identifier",
                LowerError::InvalidZeta(_) => "invalid-zeta",
                LowerError::NotAForm(_) => "not-a-binary-form",
                LowerError::NotConstant(_) => "not-a-constant",
            },
            CliError::RingSpec(r) => match r {
                RingSpecError::MissingColon { .. } => "ringspec.missing-colon",
                RingSpecError::BadWeight { .. } => "ringspec.bad-weight",
                RingSpecError::BadField { .. } => "ringspec.bad-field",
                RingSpecError::BadOpaque { .. } => "ringspec.bad-opaque",
                RingSpecError::Repeated { .. } => "ringspec.repeated-key",
                RingSpecError::NoGenerators => "ringspec.no-generators",
                RingSpecError::Syntax { .. } => "ringspec.syntax",
                RingSpecError::Lower { .. } => "ringspec.unknown-identifier",
                RingSpecError::OpaqueShape { .. } => "ringspec.opaque-shape",
                RingSpecError::Grading(g) => grading_code(g),
            },
            CliError::Grading(g) => grading_code(g),
            CliError::Symmetry(s) => symmetry_code(s),
            CliError::Invariants(i) => invariants_code(i),
            CliError::Locus(l) => match l {
                LocusError::Inhomogeneous(_) => "locus.inhomogeneous",
                LocusError::WeightMismatch { .. } => "locus.weight-mismatch",
                LocusError::ZeroPoint => "locus.zero-point",
                LocusError::Poly(p) => poly_code(p),
            },
        }
    }

    pub fn exit_code(&self) -> i32 {
        let bound = matches!(
            self,
            CliError::Symmetry(SymmetryError::SizeBound { .. })
                | CliError::Symmetry(SymmetryError::Exact(ExactError::OrderBound { .. }))
        );
        if bound {
            EXIT_BOUND
        } else {
            EXIT_INPUT
        }
    }
}
