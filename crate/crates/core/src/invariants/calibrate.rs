//! Fitting transvectant-built invariants to the catalog normalizations.
//!
//! A recipe builds covariants from the base form `f` by successive
//! transvectants; its outputs are invariants (degree-0 forms). Calibration
//! finds scalars c_k with I_k = c_k·J_k satisfying the catalog relation, by
//! computing the syzygy of the J_k in the relation degree over random sample
//! forms and reading the scalings off its coefficients.

use std::collections::HashMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::linalg::{nullspace_rational, unit_combinations};
use super::{quartic_invariants, quintic_f, sextic_f, transvectant, InvariantsError};
use crate::exactnum::{Cyclotomic, Rational};
use crate::polyalg::BinaryForm;
use crate::scalar::Scalar;
use crate::{Form, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CalibrationFamily {
    Quartic,
    Quintic,
    Sextic,
}

impl CalibrationFamily {
    pub fn degree(&self) -> usize {
        match self {
            CalibrationFamily::Quartic => 4,
            CalibrationFamily::Quintic => 5,
            CalibrationFamily::Sextic => 6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecipeStep {
    pub name: String,
    pub left: String,
    pub right: String,
    pub order: usize,
}

/// Covariant construction; the base form is called `f`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Recipe {
    pub name: String,
    pub family: CalibrationFamily,
    pub steps: Vec<RecipeStep>,
    /// (catalog generator name, step name) per catalog degree.
    pub outputs: Vec<(String, String)>,
}

fn step(name: &str, left: &str, right: &str, order: usize) -> RecipeStep {
    RecipeStep {
        name: name.into(),
        left: left.into(),
        right: right.into(),
        order,
    }
}

fn outputs(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
    pairs
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

pub fn quartic_recipe() -> Recipe {
    Recipe {
        name: "quartic: (f,f)_4 and (f,(f,f)_2)_4".into(),
        family: CalibrationFamily::Quartic,
        steps: vec![
            step("J2", "f", "f", 4),
            step("h", "f", "f", 2),
            step("J3", "f", "h", 4),
        ],
        outputs: outputs(&[("I2", "J2"), ("I3", "J3")]),
    }
}

pub fn quintic_recipe() -> Recipe {
    Recipe {
        name: "quintic: i=(f,f)_4, j=(f,i)_2, tau=(j,j)_2, L5=(i,j)_2, L7=(i,L5)_1, L11=(tau,L5)_1"
            .into(),
        family: CalibrationFamily::Quintic,
        steps: vec![
            step("i", "f", "f", 4),
            step("j", "f", "i", 2),
            step("tau", "j", "j", 2),
            step("L5", "i", "j", 2),
            step("L7", "i", "L5", 1),
            step("L11", "tau", "L5", 1),
            step("J4", "i", "i", 2),
            step("J8", "i", "tau", 2),
            step("J12", "tau", "tau", 2),
            step("J18", "L7", "L11", 1),
        ],
        outputs: outputs(&[("I4", "J4"), ("I8", "J8"), ("I12", "J12"), ("I18", "J18")]),
    }
}

/// A candidate sextic recipe; the catalog generators are only known up to
/// the relation, so this may fail to calibrate.
pub fn sextic_recipe() -> Recipe {
    Recipe {
        name: "sextic: i=(f,f)_4, D=(i,i)_2, m=(f,i)_4, n=(i,m)_2, q=(D,m)_2, p=(m,n)_1".into(),
        family: CalibrationFamily::Sextic,
        steps: vec![
            step("i", "f", "f", 4),
            step("D", "i", "i", 2),
            step("m", "f", "i", 4),
            step("n", "i", "m", 2),
            step("q", "D", "m", 2),
            step("p", "m", "n", 1),
            step("J2", "f", "f", 6),
            step("J4", "i", "i", 4),
            step("J6", "i", "D", 4),
            step("J10", "n", "n", 2),
            step("J15", "p", "q", 2),
        ],
        outputs: outputs(&[
            ("I2", "J2"),
            ("I4", "J4"),
            ("I6", "J6"),
            ("I10", "J10"),
            ("I15", "J15"),
        ]),
    }
}

impl Recipe {
    /// The output invariants of `f`, in output order.
    pub fn evaluate<S: Scalar>(&self, f: &BinaryForm<S>) -> Result<Vec<S>, InvariantsError> {
        let mut env: HashMap<&str, BinaryForm<S>> = HashMap::new();
        env.insert("f", f.clone());
        for s in &self.steps {
            let get = |n: &str| {
                env.get(n)
                    .cloned()
                    .ok_or_else(|| InvariantsError::Recipe(format!("undefined covariant {n}")))
            };
            let (a, b) = (get(&s.left)?, get(&s.right)?);
            let out = transvectant(&a, &b, s.order)?;
            env.insert(s.name.as_str(), out);
        }
        self.outputs
            .iter()
            .map(|(_, n)| {
                let form = env
                    .get(n.as_str())
                    .ok_or_else(|| InvariantsError::Recipe(format!("undefined output {n}")))?;
                if form.degree() != 0 {
                    return Err(InvariantsError::Recipe(format!(
                        "output {n} has order {}, not an invariant",
                        form.degree()
                    )));
                }
                Ok(form.coeff(0).clone())
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CalibrationOutcome {
    Success {
        /// c_k with I_k = c_k·J_k; the generator whose square enters the
        /// relation is reported through c² only.
        scalings: Vec<(String, Cyclotomic)>,
        squared: Option<(String, Cyclotomic)>,
        checked_samples: usize,
    },
    Failure {
        reason: String,
        residuals: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CalibrationReport {
    pub family: CalibrationFamily,
    pub recipe: String,
    pub seed: u64,
    pub outcome: CalibrationOutcome,
}

impl CalibrationReport {
    pub fn succeeded(&self) -> bool {
        matches!(self.outcome, CalibrationOutcome::Success { .. })
    }

    /// `c_k` for a base generator.
    pub fn scaling(&self, name: &str) -> Option<&Cyclotomic> {
        match &self.outcome {
            CalibrationOutcome::Success { scalings, .. } => {
                scalings.iter().find(|(n, _)| n == name).map(|(_, c)| c)
            }
            CalibrationOutcome::Failure { .. } => None,
        }
    }

    /// `c²` for the squared generator.
    pub fn squared_scaling(&self) -> Option<&Cyclotomic> {
        match &self.outcome {
            CalibrationOutcome::Success { squared, .. } => squared.as_ref().map(|(_, c)| c),
            CalibrationOutcome::Failure { .. } => None,
        }
    }
}

fn random_form(rng: &mut ChaCha8Rng, d: usize) -> BinaryForm<Rational> {
    BinaryForm::new(
        (0..=d)
            .map(|_| Rational::from_integer(rng.gen_range(-9i64..=9).into()))
            .collect(),
    )
}

/// Exponent vectors e with Σ e_k·w_k = target.
fn monomials(weights: &[u64], target: u64) -> Vec<Vec<u32>> {
    fn go(w: &[u64], left: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if w.is_empty() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for k in 0..=left / w[0] {
            cur.push(k as u32);
            go(&w[1..], left - k * w[0], cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(weights, target, &mut Vec::new(), &mut out);
    out
}

fn monomial_value(values: &[Rational], e: &[u32]) -> Rational {
    values
        .iter()
        .zip(e)
        .fold(Rational::from_integer(1.into()), |acc, (v, &k)| {
            acc * num_traits::pow(v.clone(), k as usize)
        })
}

const CHECK_SAMPLES: usize = 25;

pub fn calibrate_invariants(
    recipe: &Recipe,
    seed: u64,
) -> Result<CalibrationReport, InvariantsError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = recipe.family.degree();
    let report = |outcome| CalibrationReport {
        family: recipe.family,
        recipe: recipe.name.clone(),
        seed,
        outcome,
    };
    if recipe.family == CalibrationFamily::Quartic {
        return quartic_mode(recipe, &mut rng).map(report);
    }
    let (f, weights): (Poly, Vec<u64>) = match recipe.family {
        CalibrationFamily::Quintic => (quintic_f(), vec![4, 8, 12, 18]),
        CalibrationFamily::Sextic => (sextic_f(), vec![2, 4, 6, 10, 15]),
        CalibrationFamily::Quartic => unreachable!(),
    };
    if recipe.outputs.len() != weights.len() {
        return Err(InvariantsError::Recipe(format!(
            "expected {} outputs, found {}",
            weights.len(),
            recipe.outputs.len()
        )));
    }
    let n = weights.len() - 1;
    let base = &weights[..n];
    let target = 2 * weights[n];
    let monos = monomials(base, target);
    let cols = 1 + monos.len();
    let fit = cols + 8;

    let mut samples: Vec<Vec<Rational>> = Vec::new();
    for _ in 0..fit + CHECK_SAMPLES {
        samples.push(recipe.evaluate(&random_form(&mut rng, d))?);
    }
    for (k, (name, step)) in recipe.outputs.iter().enumerate() {
        if samples.iter().all(|s| s[k].is_zero()) {
            return Err(InvariantsError::UnderDetermined(format!("{name} = {step}")));
        }
    }
    let rows: Vec<Vec<Rational>> = samples[..fit]
        .iter()
        .map(|s| {
            let mut row = vec![s[n].clone() * s[n].clone()];
            row.extend(monos.iter().map(|e| monomial_value(&s[..n], e)));
            row
        })
        .collect();
    let ns = nullspace_rational(&rows, cols);
    if ns.len() != 1 {
        return Ok(report(CalibrationOutcome::Failure {
            reason: format!(
                "syzygy space in degree {target} has dimension {}, expected 1",
                ns.len()
            ),
            residuals: Vec::new(),
        }));
    }
    // v₀·J² + Σ v_m·M_m = 0, read as w·J² − Σ g_m·M_m = 0.
    let v = &ns[0];
    let w = v[0].clone();
    let g: Vec<Rational> = v[1..].iter().map(|x| -x.clone()).collect();
    let f_coeff = |e: &[u32]| f.coeff(e).to_rational().expect("rational relation");
    let mut mismatched = Vec::new();
    let mut ratios = Vec::new();
    let mut exps = Vec::new();
    for (e, gm) in monos.iter().zip(&g) {
        let fm = f_coeff(e);
        match (fm.is_zero(), gm.is_zero()) {
            (true, true) => {}
            (false, false) => {
                ratios.push(gm / &fm);
                exps.push(e.clone());
            }
            _ => mismatched.push(format!("monomial {e:?}: syzygy {gm}, relation {fm}")),
        }
    }
    if w.is_zero() || !mismatched.is_empty() {
        return Ok(report(CalibrationOutcome::Failure {
            reason: "syzygy support differs from the catalog relation".into(),
            residuals: mismatched,
        }));
    }
    // μ·c^{e_m} = r_m with c_1 = 1; unknowns (log μ, log c_2, …, log c_n).
    let lattice: Vec<Vec<i64>> = exps
        .iter()
        .map(|e| {
            let mut row = vec![1i64];
            row.extend(e[1..].iter().map(|&k| k as i64));
            row
        })
        .collect();
    let Some(alphas) = unit_combinations(&lattice, n) else {
        return Ok(report(CalibrationOutcome::Failure {
            reason: "relation monomials do not determine the scalings without radicals".into(),
            residuals: Vec::new(),
        }));
    };
    let solve = |alpha: &[i64]| {
        alpha
            .iter()
            .zip(&ratios)
            .fold(Rational::from_integer(1.into()), |acc, (&a, r)| {
                let p = num_traits::pow(r.clone(), a.unsigned_abs() as usize);
                if a < 0 {
                    acc / p
                } else {
                    acc * p
                }
            })
    };
    let mu = solve(&alphas[0]);
    let mut c: Vec<Rational> = vec![Rational::from_integer(1.into())];
    c.extend(alphas[1..].iter().map(|a| solve(a)));
    let c_last_sq = &w / &mu;
    let mut inconsistent = Vec::new();
    for (e, r) in exps.iter().zip(&ratios) {
        if &(mu.clone() * monomial_value(&c, e)) != r {
            inconsistent.push(format!("monomial {e:?}"));
        }
    }
    if !inconsistent.is_empty() {
        return Ok(report(CalibrationOutcome::Failure {
            reason: "no torus-normalized scaling matches every relation coefficient".into(),
            residuals: inconsistent,
        }));
    }
    // Independent check on samples not used for the fit.
    let mut residuals = Vec::new();
    for s in &samples[fit..] {
        let point: Vec<Cyclotomic> = (0..n)
            .map(|k| Cyclotomic::from_rational(&c[k] * &s[k]))
            .collect();
        let rhs = f.evaluate(&point)?;
        let lhs = Cyclotomic::from_rational(&c_last_sq * &s[n] * &s[n]);
        let res = lhs.sub_ref(&rhs);
        if !res.is_zero() {
            residuals.push(res.to_string());
        }
    }
    if !residuals.is_empty() {
        return Ok(report(CalibrationOutcome::Failure {
            reason: "nonzero residuals on check samples".into(),
            residuals,
        }));
    }
    let names: Vec<String> = recipe.outputs.iter().map(|(a, _)| a.clone()).collect();
    Ok(report(CalibrationOutcome::Success {
        scalings: (0..n)
            .map(|k| (names[k].clone(), Cyclotomic::from_rational(c[k].clone())))
            .collect(),
        squared: Some((names[n].clone(), Cyclotomic::from_rational(c_last_sq))),
        checked_samples: CHECK_SAMPLES,
    }))
}

/// Scalars c₂, c₃ with I₂ = c₂·J₂, I₃ = c₃·J₃, fitted at two quartics and
/// checked at ten more.
fn quartic_mode(
    recipe: &Recipe,
    rng: &mut ChaCha8Rng,
) -> Result<CalibrationOutcome, InvariantsError> {
    if recipe.outputs.len() != 2 {
        return Err(InvariantsError::Recipe(
            "quartic mode needs two outputs".into(),
        ));
    }
    let mut fit: Vec<Option<Rational>> = vec![None, None];
    let mut residuals = Vec::new();
    let mut checked = 0;
    let mut drawn = 0;
    while checked < 10 {
        drawn += 1;
        if drawn > 200 {
            break;
        }
        let q = random_form(rng, 4);
        let j = recipe.evaluate(&q)?;
        let qc: Form = q.map(|x| Cyclotomic::from_rational(x.clone()));
        let inv = quartic_invariants(&qc)?;
        let targets = [
            inv.i2.to_rational().expect("rational"),
            inv.i3.to_rational().expect("rational"),
        ];
        if fit.iter().any(Option::is_none) {
            for k in 0..2 {
                if fit[k].is_none() && !j[k].is_zero() {
                    fit[k] = Some(&targets[k] / &j[k]);
                }
            }
            continue;
        }
        checked += 1;
        for k in 0..2 {
            let c = fit[k].as_ref().expect("fitted");
            if (c * &j[k]) != targets[k] {
                residuals.push(format!(
                    "{}: {} vs {}",
                    recipe.outputs[k].0,
                    c * &j[k],
                    targets[k]
                ));
            }
        }
    }
    if fit.iter().any(Option::is_none) {
        let k = fit.iter().position(Option::is_none).expect("some unfitted");
        return Err(InvariantsError::UnderDetermined(
            recipe.outputs[k].1.clone(),
        ));
    }
    if !residuals.is_empty() {
        return Ok(CalibrationOutcome::Failure {
            reason: "quartic scalings not constant".into(),
            residuals,
        });
    }
    Ok(CalibrationOutcome::Success {
        scalings: recipe
            .outputs
            .iter()
            .zip(&fit)
            .map(|((n, _), c)| {
                (
                    n.clone(),
                    Cyclotomic::from_rational(c.clone().expect("fitted")),
                )
            })
            .collect(),
        squared: None,
        checked_samples: checked,
    })
}
