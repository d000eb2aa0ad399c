use serde::Serialize;

use super::ground::{tetra_quartic, xy_x4_minus_y4};
use super::{GroupSpec, SymmetryError};
use crate::exactnum::Cyclotomic;
use crate::Form;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Quartic,
    Quintic,
    Sextic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CatalogCase {
    pub id: &'static str,
    pub family: Family,
    pub label: &'static str,
    pub degree: usize,
    pub expected: GroupSpec,
    /// Number of (λ:μ) parameter pairs.
    pub params: usize,
    pub normal_form: &'static str,
}

const fn case(
    id: &'static str,
    family: Family,
    label: &'static str,
    degree: usize,
    expected: GroupSpec,
    params: usize,
    normal_form: &'static str,
) -> CatalogCase {
    CatalogCase {
        id,
        family,
        label,
        degree,
        expected,
        params,
        normal_form,
    }
}

use Family::*;
use GroupSpec::*;

static CASES: [CatalogCase; 16] = [
    case(
        "quartic-generic",
        Quartic,
        "generic",
        4,
        D(2),
        1,
        "l*(x^2+y^2)^2 + m*(x^2-y^2)^2",
    ),
    case("quartic-I", Quartic, "I", 4, D(4), 0, "x^4 + y^4"),
    case(
        "quartic-II",
        Quartic,
        "II",
        4,
        T,
        0,
        "x^4 + 2*sqrtm3*x^2*y^2 + y^4",
    ),
    case(
        "quintic-I",
        Quintic,
        "I",
        5,
        C(2),
        1,
        "x*(x^2+y^2)*(l*x^2 + m*y^2)",
    ),
    case("quintic-II", Quintic, "II", 5, C(3), 0, "x^2*(x^3+y^3)"),
    case("quintic-III", Quintic, "III", 5, C(4), 0, "x*(x^4+y^4)"),
    case("quintic-IV", Quintic, "IV", 5, D(3), 0, "x*y*(x^3+y^3)"),
    case("quintic-V", Quintic, "V", 5, D(5), 0, "x^5 + y^5"),
    case(
        "sextic-I",
        Sextic,
        "I",
        6,
        C(2),
        2,
        "(x^2+y^2)*(l1*x^2+m1*y^2)*(l2*x^2+m2*y^2)",
    ),
    case("sextic-II", Sextic, "II", 6, C(5), 0, "x*(x^5+y^5)"),
    case(
        "sextic-III",
        Sextic,
        "III",
        6,
        D(2),
        1,
        "x*y*(l*(x^2+y^2)^2 + m*(x^2-y^2)^2)",
    ),
    case(
        "sextic-IV",
        Sextic,
        "IV",
        6,
        D(3),
        1,
        "l*(x^3+y^3)^2 + m*(x^3-y^3)^2",
    ),
    case("sextic-V", Sextic, "V", 6, D(6), 0, "x^6 + y^6"),
    case("sextic-VI", Sextic, "VI", 6, O, 0, "x*y*(x^4-y^4)"),
    case("sextic-VII", Sextic, "VII", 6, C(3), 0, "x^2*y*(x^3+y^3)"),
    case("sextic-VIII", Sextic, "VIII", 6, C(4), 0, "x^2*(x^4+y^4)"),
];

/// Parameters used when a parameterized case is requested without any.
pub const DEFAULT_PARAMS: [(i64, i64); 2] = [(2, 3), (5, 7)];

pub fn catalog_cases() -> &'static [CatalogCase] {
    &CASES
}

pub fn lookup(id: &str) -> Result<&'static CatalogCase, SymmetryError> {
    CASES
        .iter()
        .find(|c| c.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| SymmetryError::UnknownCase(id.to_string()))
}

type Pair = (Cyclotomic, Cyclotomic);

fn resolve(case: &CatalogCase, params: Option<&[Pair]>) -> Result<Vec<Pair>, SymmetryError> {
    let p: Vec<Pair> = match params {
        Some(p) => p.to_vec(),
        None => DEFAULT_PARAMS[..case.params]
            .iter()
            .map(|&(l, m)| (Cyclotomic::from_i64(l), Cyclotomic::from_i64(m)))
            .collect(),
    };
    if p.len() != case.params {
        return Err(SymmetryError::ParameterCount {
            expected: case.params,
            found: p.len(),
        });
    }
    if let Some(k) = p.iter().position(|(l, m)| l.is_zero() && m.is_zero()) {
        return Err(SymmetryError::ZeroParameter(k));
    }
    Ok(p)
}

fn ci(n: i64) -> Cyclotomic {
    Cyclotomic::from_i64(n)
}

fn mono(c: i64, i: usize, j: usize) -> Form {
    Form::monomial(ci(c), i, j)
}

fn binomial(n: usize, sign: i64) -> Form {
    mono(1, n, 0).add(&mono(sign, 0, n))
}

/// λ(xⁿ+yⁿ)² + μ(xⁿ−yⁿ)².
fn pencil(n: usize, (l, m): &Pair) -> Form {
    binomial(n, 1)
        .pow(2)
        .scale(l)
        .add(&binomial(n, -1).pow(2).scale(m))
}

/// λx² + μy².
fn linear_in_squares((l, m): &Pair) -> Form {
    Form::monomial(l.clone(), 2, 0).add(&Form::monomial(m.clone(), 0, 2))
}

/// The normal form of a catalog case; parameterized cases default to
/// (2:3), then (5:7).
pub fn special_form(id: &str, params: Option<&[Pair]>) -> Result<Form, SymmetryError> {
    let case = lookup(id)?;
    let p = resolve(case, params)?;
    let x = Form::x();
    let y = Form::y();
    let f = match case.id {
        "quartic-generic" => pencil(2, &p[0]),
        "quartic-I" => binomial(4, 1),
        "quartic-II" => tetra_quartic(1),
        "quintic-I" => x.mul(&binomial(2, 1)).mul(&linear_in_squares(&p[0])),
        "quintic-II" => x.pow(2).mul(&binomial(3, 1)),
        "quintic-III" => x.mul(&binomial(4, 1)),
        "quintic-IV" => x.mul(&y).mul(&binomial(3, 1)),
        "quintic-V" => binomial(5, 1),
        "sextic-I" => binomial(2, 1)
            .mul(&linear_in_squares(&p[0]))
            .mul(&linear_in_squares(&p[1])),
        "sextic-II" => x.mul(&binomial(5, 1)),
        "sextic-III" => x.mul(&y).mul(&pencil(2, &p[0])),
        "sextic-IV" => pencil(3, &p[0]),
        "sextic-V" => binomial(6, 1),
        "sextic-VI" => xy_x4_minus_y4(),
        "sextic-VII" => x.pow(2).mul(&y).mul(&binomial(3, 1)),
        "sextic-VIII" => x.pow(2).mul(&binomial(4, 1)),
        _ => unreachable!("catalog table and builder disagree"),
    };
    Ok(f)
}

/// Genericity of the parameters: a parameterized form is squarefree and
/// avoids the values where the case meets a more symmetric one. Cases
/// without parameters are always generic.
///
/// Exceptional values checked, with r = λ/μ:
/// quartic pencil and sextic (III): the quartic factor has I₂ ≠ 0 and I₃ ≠ 0;
/// quintic (I): r ≠ −1; sextic (I): r₁r₂ ≠ 1; sextic (IV): r ≠ 1.
pub fn is_generic(id: &str, params: Option<&[Pair]>) -> Result<bool, SymmetryError> {
    let case = lookup(id)?;
    let p = resolve(case, params)?;
    if case.params == 0 {
        return Ok(true);
    }
    let f = special_form(id, Some(&p))?;
    let squarefree = f.multiplicity_profile()?.iter().all(|&m| m == 1);
    if !squarefree {
        return Ok(false);
    }
    let ok = match case.id {
        "quartic-generic" | "sextic-III" => {
            let q = pencil(2, &p[0]);
            let inv = crate::invariants::quartic_invariants(&q)
                .map_err(|_| SymmetryError::UnknownCase(id.to_string()))?;
            !inv.i2.is_zero() && !inv.i3.is_zero()
        }
        "quintic-I" => p[0].0.add_ref(&p[0].1) != ci(0),
        "sextic-I" => p[0].0.mul_ref(&p[1].0) != p[0].1.mul_ref(&p[1].1),
        "sextic-IV" => p[0].0 != p[0].1,
        _ => true,
    };
    Ok(ok)
}
