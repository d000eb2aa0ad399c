//! Invariant rings of binary forms and cubics as graded presentations,
//! explicit quartic invariants, the quintic and sextic relations, and a
//! transvectant engine with a calibration harness.

mod calibrate;
mod linalg;
mod transvectant;

use std::fmt;
use std::str::FromStr;

use num_integer::binomial;
use serde::Serialize;
use thiserror::Error;

use crate::exactnum::{rat, Cyclotomic};
use crate::grading::{GradedRingPresentation, GradingError, Opaque, Relation, Section};
use crate::polyalg::var_list;
use crate::{Form, Poly};

pub use calibrate::{
    calibrate_invariants, quartic_recipe, quintic_recipe, sextic_recipe, CalibrationFamily,
    CalibrationOutcome, CalibrationReport, Recipe, RecipeStep,
};
pub use linalg::{nullspace, nullspace_rational};
pub use transvectant::transvectant;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InvariantsError {
    #[error("unknown family {0}")]
    UnknownFamily(String),
    #[error("expected a form of degree {expected}, found degree {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("transvectant order {r} exceeds the degrees {d}, {e}")]
    OrderTooLarge { r: usize, d: usize, e: usize },
    #[error("form is not stable")]
    NotStable,
    #[error("both invariants vanish")]
    BothZero,
    #[error("recipe output {0} vanishes on every sample")]
    UnderDetermined(String),
    #[error("malformed recipe: {0}")]
    Recipe(String),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Poly(#[from] crate::polyalg::PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CatalogFamily {
    Quartic,
    Quintic,
    Sextic,
    CubicCurve,
    CubicSurface,
}

impl CatalogFamily {
    pub const ALL: [CatalogFamily; 5] = [
        CatalogFamily::Quartic,
        CatalogFamily::Quintic,
        CatalogFamily::Sextic,
        CatalogFamily::CubicCurve,
        CatalogFamily::CubicSurface,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CatalogFamily::Quartic => "quartic",
            CatalogFamily::Quintic => "quintic",
            CatalogFamily::Sextic => "sextic",
            CatalogFamily::CubicCurve => "cubic-curve",
            CatalogFamily::CubicSurface => "cubic-surface",
        }
    }
}

impl fmt::Display for CatalogFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CatalogFamily {
    type Err = InvariantsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CatalogFamily::ALL
            .into_iter()
            .find(|f| f.name() == s.trim())
            .ok_or_else(|| InvariantsError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantCatalogEntry {
    pub family: CatalogFamily,
    pub ring: GradedRingPresentation,
    pub f: Option<Section>,
    pub source: &'static str,
}

fn c(n: i64, d: i64) -> Cyclotomic {
    Cyclotomic::from_rational(rat(n, d))
}

fn poly_from(names: &[&str], terms: &[(i64, i64, &[u32])]) -> Poly {
    Poly::from_terms(
        var_list(names),
        terms.iter().map(|(n, d, e)| (e.to_vec(), c(*n, *d))),
    )
}

/// F(I₄, I₈, I₁₂) with I₁₈² = F, as 1/324 of the six-term expression.
pub fn quintic_f() -> Poly {
    poly_from(
        &["I4", "I8", "I12"],
        &[
            (-9, 324, &[1, 4, 0]),
            (-24, 324, &[0, 3, 1]),
            (6, 324, &[2, 2, 1]),
            (72, 324, &[1, 1, 2]),
            (144, 324, &[0, 0, 3]),
            (-1, 324, &[3, 0, 2]),
        ],
    )
}

/// The symmetric 3×3 matrix whose doubled determinant is the sextic F,
/// with a₃₃ repaired to its homogeneous form ½I₄I₁₀ + (2/9)I₆(I₄² + I₂I₆).
pub fn sextic_matrix() -> [[Poly; 3]; 3] {
    let names = ["I2", "I4", "I6", "I10"];
    let p = |terms: &[(i64, i64, &[u32])]| poly_from(&names, terms);
    let a11 = p(&[(2, 1, &[0, 0, 1, 0]), (1, 3, &[1, 1, 0, 0])]);
    let a12 = p(&[(2, 3, &[0, 2, 0, 0]), (2, 3, &[1, 0, 1, 0])]);
    let a13 = p(&[(1, 1, &[0, 0, 0, 1])]);
    let a22 = a13.clone();
    // ⅓I₄(I₄² + I₂I₆) + ⅓I₆(2I₆ + ⅓I₂I₄)
    let a23 = p(&[
        (1, 3, &[0, 3, 0, 0]),
        (1, 3, &[1, 1, 1, 0]),
        (2, 3, &[0, 0, 2, 0]),
        (1, 9, &[1, 1, 1, 0]),
    ]);
    let a33 = p(&[
        (1, 2, &[0, 1, 0, 1]),
        (2, 9, &[0, 2, 1, 0]),
        (2, 9, &[1, 0, 2, 0]),
    ]);
    [
        [a11.clone(), a12.clone(), a13.clone()],
        [a12, a22.clone(), a23.clone()],
        [a13, a23, a33],
    ]
}

/// a₃₃ exactly as printed, ½I₆I₁₀ + (2/9)I₆(I₄² + I₂I₆); inhomogeneous.
pub fn sextic_a33_as_printed() -> Poly {
    poly_from(
        &["I2", "I4", "I6", "I10"],
        &[
            (1, 2, &[0, 0, 1, 1]),
            (2, 9, &[0, 2, 1, 0]),
            (2, 9, &[1, 0, 2, 0]),
        ],
    )
}

pub fn det3(m: &[[Poly; 3]; 3]) -> Poly {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        m[r1][c1].mul(&m[r2][c2]).sub(&m[r1][c2].mul(&m[r2][c1]))
    };
    m[0][0]
        .mul(&minor(1, 2, 1, 2))
        .sub(&m[0][1].mul(&minor(1, 2, 0, 2)))
        .add(&m[0][2].mul(&minor(1, 2, 0, 1)))
}

/// F(I₂, I₄, I₆, I₁₀) = 2·det of the repaired matrix.
pub fn sextic_f() -> Poly {
    det3(&sextic_matrix()).scale(&c(2, 1))
}

fn square_relation(
    names: &[&str],
    weights: &[u64],
    f: &Poly,
) -> Result<GradedRingPresentation, GradingError> {
    let vars = var_list(names);
    let last = names.len() - 1;
    let t = Poly::var(vars.clone(), last);
    let f = f.extend_vars(vars);
    GradedRingPresentation::new(
        names.iter().map(|s| s.to_string()).collect(),
        weights.to_vec(),
        Some(Relation::Poly(t.pow(2).sub(&f))),
        1,
    )
}

pub fn catalog_ring(family: CatalogFamily) -> Result<InvariantCatalogEntry, InvariantsError> {
    let (ring, f, source) = match family {
        CatalogFamily::Quartic => (
            GradedRingPresentation::free(&["I2", "I3"], &[2, 3])?,
            None,
            "binary quartics",
        ),
        CatalogFamily::Quintic => {
            let f = quintic_f();
            (
                square_relation(&["I4", "I8", "I12", "I18"], &[4, 8, 12, 18], &f)?,
                Some(Section::Poly(f)),
                "binary quintics",
            )
        }
        CatalogFamily::Sextic => {
            let f = sextic_f();
            (
                square_relation(&["I2", "I4", "I6", "I10", "I15"], &[2, 4, 6, 10, 15], &f)?,
                Some(Section::Poly(f)),
                "binary sextics",
            )
        }
        CatalogFamily::CubicCurve => (
            GradedRingPresentation::free(&["I4", "I6"], &[4, 6])?,
            None,
            "plane cubic curves",
        ),
        CatalogFamily::CubicSurface => {
            let opaque = Opaque {
                label: "F".into(),
                degree: 200,
            };
            let ring = GradedRingPresentation::new(
                ["I8", "I16", "I24", "I32", "I40", "I100"]
                    .iter()
                    .map(|s| s.to_string())
                    .collect(),
                vec![8, 16, 24, 32, 40, 100],
                Some(Relation::PowerMinusOpaque {
                    generator: 5,
                    power: 2,
                    opaque: opaque.clone(),
                }),
                1,
            )?;
            (ring, Some(Section::Opaque(opaque)), "cubic surfaces")
        }
    };
    Ok(InvariantCatalogEntry {
        family,
        ring,
        f,
        source,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuarticInvariants {
    pub i2: Cyclotomic,
    pub i3: Cyclotomic,
}

impl QuarticInvariants {
    /// I₂³ − 27I₃², zero exactly on quartics with a repeated root.
    pub fn discriminant(&self) -> Cyclotomic {
        let i2c = self.i2.pow_i64(3).expect("positive power");
        let i3s = self.i3.mul_ref(&self.i3).scale(&rat(27, 1));
        i2c.sub_ref(&i3s)
    }
}

/// I₂ = b₀b₄ − 4b₁b₃ + 3b₂², I₃ = b₀b₂b₄ − b₀b₃² + 2b₁b₂b₃ − b₁²b₄ − b₂³
/// with f = Σ C(4,i) bᵢ x^{4−i} yⁱ.
pub fn quartic_invariants(f: &Form) -> Result<QuarticInvariants, InvariantsError> {
    if f.degree() != 4 {
        return Err(InvariantsError::WrongDegree {
            expected: 4,
            found: f.degree(),
        });
    }
    let b: Vec<Cyclotomic> = (0..=4)
        .map(|i| f.coeff(i).scale(&rat(1, binomial(4, i as i64))))
        .collect();
    let m = |xs: &[usize]| {
        xs.iter()
            .fold(Cyclotomic::from_i64(1), |acc, &k| acc.mul_ref(&b[k]))
    };
    let k = |n: i64| rat(n, 1);
    let i2 = m(&[0, 4])
        .sub_ref(&m(&[1, 3]).scale(&k(4)))
        .add_ref(&m(&[2, 2]).scale(&k(3)));
    let i3 = m(&[0, 2, 4])
        .sub_ref(&m(&[0, 3, 3]))
        .add_ref(&m(&[1, 2, 3]).scale(&k(2)))
        .sub_ref(&m(&[1, 1, 4]))
        .sub_ref(&m(&[2, 2, 2]));
    Ok(QuarticInvariants { i2, i3 })
}

/// A stable quartic's image in P(2,3): raw (I₂, I₃) and the coarse class
/// (I₂³ : I₃²) scaled so its first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuarticPoint {
    pub i2: Cyclotomic,
    pub i3: Cyclotomic,
    pub coarse: [Cyclotomic; 2],
}

impl QuarticPoint {
    /// The stacky point has extra automorphisms: μ₂ at I₃ = 0, μ₃ at I₂ = 0.
    pub fn automorphism_order(&self) -> u32 {
        if self.i3.is_zero() {
            2
        } else if self.i2.is_zero() {
            3
        } else {
            1
        }
    }
}

pub fn quartic_point(f: &Form) -> Result<QuarticPoint, InvariantsError> {
    let inv = quartic_invariants(f)?;
    if f.multiplicity_profile()?.iter().any(|&m| m > 1) {
        return Err(InvariantsError::NotStable);
    }
    let a = inv.i2.pow_i64(3).expect("positive power");
    let b = inv.i3.mul_ref(&inv.i3);
    let coarse = if !a.is_zero() {
        [Cyclotomic::from_i64(1), b.try_div(&a).expect("nonzero")]
    } else if !b.is_zero() {
        [Cyclotomic::from_i64(0), Cyclotomic::from_i64(1)]
    } else {
        return Err(InvariantsError::BothZero);
    };
    Ok(QuarticPoint {
        i2: inv.i2,
        i3: inv.i3,
        coarse,
    })
}

#[cfg(test)]
mod tests;
