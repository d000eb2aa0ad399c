use serde::Serialize;

use super::{GroupSpec, SymmetryError};
use crate::exactnum::Cyclotomic;
use crate::Form;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroundFormSet {
    pub group: GroupSpec,
    pub forms: [Form; 3],
    pub nu: [u64; 3],
}

/// Form from (coefficient, power of x, power of y) terms.
fn form(d: usize, terms: &[(Cyclotomic, usize)]) -> Form {
    terms.iter().fold(Form::zero(d), |acc, (c, i)| {
        acc.add(&Form::monomial(c.clone(), *i, d - i))
    })
}

fn ci(n: i64) -> Cyclotomic {
    Cyclotomic::from_i64(n)
}

pub(crate) fn xy_x4_minus_y4() -> Form {
    form(6, &[(ci(1), 5), (ci(-1), 1)])
}

pub(crate) fn tetra_quartic(sign: i64) -> Form {
    let mid = Cyclotomic::sqrt_m3().scale(&crate::exactnum::int(2 * sign));
    form(4, &[(ci(1), 4), (mid, 2), (ci(1), 0)])
}

pub fn ground_forms(spec: GroupSpec) -> Result<GroundFormSet, SymmetryError> {
    let forms: [Form; 3] = match spec {
        GroupSpec::C(_) => return Err(SymmetryError::NoGroundForms(spec)),
        GroupSpec::D(n) => {
            let n = n as usize;
            [
                form(n, &[(ci(1), n), (ci(1), 0)]),
                form(n, &[(ci(1), n), (ci(-1), 0)]),
                form(2, &[(ci(1), 1)]),
            ]
        }
        GroupSpec::T => [tetra_quartic(1), tetra_quartic(-1), xy_x4_minus_y4()],
        GroupSpec::O => [
            xy_x4_minus_y4(),
            form(8, &[(ci(1), 8), (ci(14), 4), (ci(1), 0)]),
            form(12, &[(ci(1), 12), (ci(-33), 8), (ci(-33), 4), (ci(1), 0)]),
        ],
        GroupSpec::I => [
            form(12, &[(ci(1), 11), (ci(11), 6), (ci(-1), 1)]),
            form(
                20,
                &[
                    (ci(-1), 20),
                    (ci(228), 15),
                    (ci(-494), 10),
                    (ci(-228), 5),
                    (ci(-1), 0),
                ],
            ),
            form(
                30,
                &[
                    (ci(1), 30),
                    (ci(522), 25),
                    (ci(-10005), 20),
                    (ci(-10005), 10),
                    (ci(-522), 5),
                    (ci(1), 0),
                ],
            ),
        ],
    };
    let order = spec.order();
    let nu = [0, 1, 2].map(|k| order / (2 * forms[k].degree() as u64));
    Ok(GroundFormSet {
        group: spec,
        forms,
        nu,
    })
}

/// The semi-invariant forms of Klein's classification:
/// x^α y^β Π(λ xⁿ + μ yⁿ) for C_n, otherwise
/// F₁^α F₂^β F₃^γ Π(λ F₁^ν₁ + μ F₂^ν₂).
pub fn klein_generate(
    spec: GroupSpec,
    alpha: u32,
    beta: u32,
    gamma: u32,
    params: &[(Cyclotomic, Cyclotomic)],
) -> Result<Form, SymmetryError> {
    if let Some(k) = params.iter().position(|(l, m)| l.is_zero() && m.is_zero()) {
        return Err(SymmetryError::ZeroParameter(k));
    }
    let (head, a, b) = match spec {
        GroupSpec::C(n) => {
            let n = n as usize;
            let head = Form::x().pow(alpha).mul(&Form::y().pow(beta));
            (
                head,
                Form::monomial(ci(1), n, 0),
                Form::monomial(ci(1), 0, n),
            )
        }
        _ => {
            let g = ground_forms(spec)?;
            let [f1, f2, f3] = &g.forms;
            let head = f1.pow(alpha).mul(&f2.pow(beta)).mul(&f3.pow(gamma));
            (head, f1.pow(g.nu[0] as u32), f2.pow(g.nu[1] as u32))
        }
    };
    Ok(params
        .iter()
        .fold(head, |acc, (l, m)| acc.mul(&a.scale(l).add(&b.scale(m)))))
}
