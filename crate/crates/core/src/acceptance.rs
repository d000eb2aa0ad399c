//! The acceptance suite: one exact check per criterion, each producing a
//! pass/fail line with its supporting detail. Every comparison is exact;
//! the pinned tolerance is zero throughout.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exactnum::{rat, Cyclotomic};
use crate::grading::{
    rigidify, root_stack, stacky_decompose, veronese, GradedRingPresentation, GradingError,
    RootTarget, Section,
};
use crate::invariants::{
    calibrate_invariants, catalog_ring, quartic_invariants, quartic_point, quintic_f,
    quintic_recipe, sextic_f, sextic_recipe, CalibrationReport, CatalogFamily, InvariantsError,
};
use crate::locus::{euler_relation_holds, is_singular_at, on_divisor, PointW};
use crate::polyalg::{Mat2, WeightedDegree, WeightedGrading};
use crate::symmetry::{
    catalog_cases, ground_forms, group_elements, is_subgroup, klein_generate, semi_invariance,
    special_form, GroupSpec,
};
use crate::{Form, Matrix, Poly};

pub const DEFAULT_SEED: u64 = 7;
pub const TOLERANCE: &str = "exact (zero tolerance)";

/// Draws per group in the Klein suite and per check in the quartic suite.
pub const KLEIN_DRAWS: usize = 100;
pub const INVARIANCE_DRAWS: usize = 100;
pub const SEPARATION_DRAWS: usize = 20;
/// Largest n for C_n, D_n among the comparison groups.
pub const CATALOG_N_MAX: u32 = 12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    /// Criterion 10 is reported but does not gate the suite.
    pub blocking: bool,
    pub tolerance: &'static str,
    pub detail: Vec<String>,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        let status = match (self.passed, self.blocking) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "FAIL (non-blocking)",
        };
        format!(
            "criterion {:>2} {status}: {} [{}]",
            self.id, self.title, self.tolerance
        )
    }
}

pub const TITLES: [&str; 10] = [
    "root-stack law and common-factor error",
    "rigidification gerbe indices",
    "stacky decomposition of the typical rings",
    "binary polyhedral group orders",
    "symmetry catalog semi-invariance and maximality",
    "Klein generator semi-invariance and degrees",
    "quartic invariants",
    "quintic divisor points",
    "sextic relation",
    "invariant calibration (stretch)",
];

pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    (1..=10).map(|id| run(id, seed)).collect()
}

/// Runs criterion `id` (1 to 10).
pub fn run(id: u8, seed: u64) -> CriterionResult {
    let mut detail = Vec::new();
    let outcome = match id {
        1 => root_stack_law(&mut detail),
        2 => gerbe_indices(&mut detail),
        3 => decompositions(&mut detail),
        4 => group_orders(&mut detail),
        5 => symmetry_catalog(&mut detail),
        6 => klein_suite(seed, &mut detail),
        7 => quartic_suite(seed, &mut detail),
        8 => quintic_locus(&mut detail),
        9 => sextic_relation(&mut detail),
        10 => calibration(seed, &mut detail),
        _ => Err(format!("no criterion {id}")),
    };
    let passed = match outcome {
        Ok(ok) => ok,
        Err(e) => {
            detail.push(format!("error: {e}"));
            false
        }
    };
    CriterionResult {
        id,
        title: TITLES.get(id as usize - 1).copied().unwrap_or("unknown"),
        passed,
        blocking: id != 10,
        tolerance: TOLERANCE,
        detail,
    }
}

type Check = Result<bool, String>;

fn note(detail: &mut Vec<String>, ok: bool, msg: impl Into<String>) -> bool {
    detail.push(format!(
        "{} {}",
        if ok { "ok" } else { "MISMATCH" },
        msg.into()
    ));
    ok
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ring(family: CatalogFamily) -> Result<GradedRingPresentation, String> {
    Ok(catalog_ring(family).map_err(err)?.ring)
}

fn root_stack_law(detail: &mut Vec<String>) -> Check {
    let free = GradedRingPresentation::free(&["I4", "I8", "I12"], &[1, 2, 3]).map_err(err)?;
    let rebuilt = root_stack(
        &free,
        &RootTarget::Section(Section::Poly(quintic_f())),
        2,
        "I18",
    )
    .map_err(err)?;
    let quintic = ring(CatalogFamily::Quintic)?;
    let target = veronese(&quintic, 2).map_err(err)?;
    let mut ok = note(
        detail,
        rebuilt.is_isomorphic(&target),
        format!("root_stack(P(1,2,3), F, 2) = {rebuilt} ≅ veronese(R, 2) = {target}"),
    );
    let rig = rigidify(&quintic).map_err(err)?;
    ok &= note(
        detail,
        rig.ring.is_isomorphic(&target),
        "rigidify(R) ≅ veronese(R, 2)",
    );
    let plane = GradedRingPresentation::free(&["x0", "x1", "x2"], &[1, 1, 1]).map_err(err)?;
    let vars = plane.generators().clone();
    let x0 = Poly::var(vars.clone(), 0);
    let conic = x0
        .mul(&x0)
        .add(&Poly::var(vars.clone(), 1).mul(&Poly::var(vars, 2)));
    let out = root_stack(&plane, &RootTarget::Section(Section::Poly(conic)), 2, "t");
    ok &= note(
        detail,
        matches!(
            out,
            Err(GradingError::CommonFactor {
                r: 2,
                n: 2,
                common: 2
            })
        ),
        format!("square root of a conic in P² (r = n = 2): {out:?}"),
    );
    Ok(ok)
}

fn gerbe_indices(detail: &mut Vec<String>) -> Check {
    let expected = [
        (CatalogFamily::Quartic, 1),
        (CatalogFamily::Quintic, 2),
        (CatalogFamily::Sextic, 1),
        (CatalogFamily::CubicCurve, 2),
        (CatalogFamily::CubicSurface, 4),
    ];
    let mut ok = true;
    for (family, want) in expected {
        let got = rigidify(&ring(family)?).map_err(err)?.gerbe_index;
        ok &= note(
            detail,
            got == want,
            format!("{family}: gerbe index {got}, expected {want}"),
        );
    }
    Ok(ok)
}

fn decompositions(detail: &mut Vec<String>) -> Check {
    let expected: [(CatalogFamily, &[u64], u64); 3] = [
        (CatalogFamily::Quintic, &[1, 2, 3], 9),
        (CatalogFamily::Sextic, &[1, 2, 3, 5], 15),
        (CatalogFamily::CubicSurface, &[1, 2, 3, 4, 5], 25),
    ];
    let mut ok = true;
    for (family, weights, degree) in expected {
        let rep = stacky_decompose(&ring(family)?).map_err(err)?;
        ok &= note(
            detail,
            rep.coarse_weights == weights
                && rep.canonical_stack_weights == weights
                && rep.root.canonical_degree == degree
                && rep.root.order == 2
                && rep.reconstruction_matches,
            format!(
                "{family}: coarse P{:?}, square root of a degree-{} divisor, reconstruction {}",
                rep.coarse_weights, rep.root.canonical_degree, rep.reconstruction_matches
            ),
        );
    }
    Ok(ok)
}

fn group_orders(detail: &mut Vec<String>) -> Check {
    let mut groups: Vec<(GroupSpec, usize)> = Vec::new();
    for n in 1..=6u32 {
        groups.push((GroupSpec::C(n), 2 * n as usize));
        groups.push((GroupSpec::D(n), 4 * n as usize));
    }
    groups.extend([(GroupSpec::T, 24), (GroupSpec::O, 48), (GroupSpec::I, 120)]);
    let one = Cyclotomic::from_i64(1);
    let mut ok = true;
    for (g, want) in groups {
        let elems = group_elements(g).map_err(err)?;
        let unimodular = elems.iter().all(|m| m.matrix().det() == one);
        ok &= note(
            detail,
            elems.len() == want && unimodular,
            format!(
                "|{g}| = {}, expected {want}, all determinants 1: {unimodular}",
                elems.len()
            ),
        );
    }
    Ok(ok)
}

fn comparison_groups() -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for n in 1..=CATALOG_N_MAX {
        out.push(GroupSpec::C(n));
        out.push(GroupSpec::D(n));
    }
    out.extend([GroupSpec::T, GroupSpec::O, GroupSpec::I]);
    out
}

/// Second parameter values for the parameterized cases.
const SECOND_PARAMS: [(i64, i64); 2] = [(3, 5), (7, 11)];

fn symmetry_catalog(detail: &mut Vec<String>) -> Check {
    let groups = comparison_groups();
    let mut ok = true;
    for case in catalog_cases() {
        let larger: Vec<GroupSpec> = groups
            .iter()
            .copied()
            .filter(|&h| {
                h.order() > case.expected.order() && is_subgroup(case.expected, h).unwrap_or(false)
            })
            .collect();
        let mut draws: Vec<Option<Vec<(Cyclotomic, Cyclotomic)>>> = vec![None];
        if case.params > 0 {
            draws.push(Some(
                SECOND_PARAMS[..case.params]
                    .iter()
                    .map(|&(l, m)| (Cyclotomic::from_i64(l), Cyclotomic::from_i64(m)))
                    .collect(),
            ));
        }
        for p in draws {
            let f = special_form(case.id, p.as_deref()).map_err(err)?;
            let holds = semi_invariance(&f, case.expected).map_err(err)?.is_some();
            let mut refuted = Vec::new();
            for &h in &larger {
                if semi_invariance(&f, h).map_err(err)?.is_some() {
                    refuted.push(h.to_string());
                }
            }
            let which = if p.is_none() {
                "default parameters"
            } else {
                "second parameters"
            };
            ok &= note(
                detail,
                holds && refuted.is_empty(),
                format!(
                    "{} ({which}): semi-invariant under {}: {holds}; {} larger groups fail{}",
                    case.id,
                    case.expected,
                    larger.len() - refuted.len(),
                    if refuted.is_empty() {
                        String::new()
                    } else {
                        format!(", unexpectedly certified by {}", refuted.join(", "))
                    }
                ),
            );
        }
    }
    Ok(ok)
}

fn klein_groups() -> Vec<GroupSpec> {
    let mut out: Vec<GroupSpec> = (1..=6).map(GroupSpec::C).collect();
    out.extend((2..=6).map(GroupSpec::D));
    out.extend([GroupSpec::T, GroupSpec::O, GroupSpec::I]);
    out
}

struct KleinDraw {
    alpha: u32,
    beta: u32,
    gamma: u32,
    params: Vec<(i64, i64)>,
}

fn klein_draw(rng: &mut ChaCha8Rng, g: GroupSpec) -> KleinDraw {
    let mut params: Vec<(i64, i64)> = (0..rng.gen_range(0..=2))
        .map(|_| loop {
            let p = (rng.gen_range(-4i64..=4), rng.gen_range(-4i64..=4));
            if p != (0, 0) {
                break p;
            }
        })
        .collect();
    let (mut alpha, mut beta, mut gamma) = (
        rng.gen_range(0..3),
        rng.gen_range(0..3),
        rng.gen_range(0..2),
    );
    if g == GroupSpec::I {
        // Keep icosahedral outputs at degree ≤ 62.
        if params.is_empty() {
            alpha = alpha.min(1);
            beta = beta.min(1);
        } else {
            params.truncate(1);
            (alpha, beta, gamma) = (0, 0, 0);
        }
    }
    KleinDraw {
        alpha,
        beta,
        gamma,
        params,
    }
}

fn klein_suite(seed: u64, detail: &mut Vec<String>) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ok = true;
    for g in klein_groups() {
        let degrees: Option<[usize; 3]> = ground_forms(g).ok().map(|s| s.forms.map(|f| f.degree()));
        let mut failures = Vec::new();
        for k in 0..KLEIN_DRAWS {
            let d = klein_draw(&mut rng, g);
            let pairs: Vec<_> = d
                .params
                .iter()
                .map(|&(l, m)| (Cyclotomic::from_i64(l), Cyclotomic::from_i64(m)))
                .collect();
            let f = klein_generate(g, d.alpha, d.beta, d.gamma, &pairs).map_err(err)?;
            let expect = match (g, degrees) {
                (GroupSpec::C(n), _) => (d.alpha + d.beta) as usize + d.params.len() * n as usize,
                (_, Some(deg)) => {
                    d.alpha as usize * deg[0]
                        + d.beta as usize * deg[1]
                        + d.gamma as usize * deg[2]
                        + d.params.len() * (g.order() / 2) as usize
                }
                _ => return Err(format!("{g} has no ground forms")),
            };
            let semi = f.is_zero() || semi_invariance(&f, g).map_err(err)?.is_some();
            if f.degree() != expect || !semi {
                failures.push(format!(
                    "draw {k}: degree {} vs {expect}, semi-invariant {semi}",
                    f.degree()
                ));
            }
        }
        ok &= note(
            detail,
            failures.is_empty(),
            format!(
                "{g}: {KLEIN_DRAWS} draws, {} failures {failures:?}",
                failures.len()
            ),
        );
    }
    Ok(ok)
}

fn q(n: i64, d: i64) -> Cyclotomic {
    Cyclotomic::from_rational(rat(n, d))
}

fn random_rational(rng: &mut ChaCha8Rng) -> Cyclotomic {
    q(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

/// A product of shears and a diagonal scaling; determinant 1 by construction.
fn random_sl2(rng: &mut ChaCha8Rng) -> Matrix {
    let one = Cyclotomic::from_i64(1);
    let zero = Cyclotomic::from_i64(0);
    let upper = Mat2::new(one.clone(), random_rational(rng), zero.clone(), one.clone());
    let lower = Mat2::new(one.clone(), zero.clone(), random_rational(rng), one.clone());
    let t = loop {
        let t = random_rational(rng);
        if !t.is_zero() {
            break t;
        }
    };
    let diag = Mat2::new(t.clone(), zero.clone(), zero, t.inv().expect("nonzero"));
    upper.mul(&lower).mul(&diag).mul(&Mat2::new(
        one.clone(),
        random_rational(rng),
        Cyclotomic::from_i64(0),
        one,
    ))
}

fn random_quartic(rng: &mut ChaCha8Rng) -> Form {
    Form::new(
        (0..5)
            .map(|_| Cyclotomic::from_i64(rng.gen_range(-9..=9)))
            .collect(),
    )
}

fn quartic_suite(seed: u64, detail: &mut Vec<String>) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5157);
    let mut ok = true;
    let mut broken = 0;
    for _ in 0..INVARIANCE_DRAWS {
        let f = random_quartic(&mut rng);
        let m = random_sl2(&mut rng);
        if m.det() != Cyclotomic::from_i64(1) {
            broken += 1;
            continue;
        }
        let a = quartic_invariants(&f).map_err(err)?;
        let b = quartic_invariants(&f.substitute_linear(&m)).map_err(err)?;
        if a != b {
            broken += 1;
        }
    }
    ok &= note(
        detail,
        broken == 0,
        format!("I2, I3 invariant under {INVARIANCE_DRAWS} random SL2(Q) substitutions: {broken} failures"),
    );

    let p1 = quartic_point(&special_form("quartic-I", None).map_err(err)?).map_err(err)?;
    let p2 = quartic_point(&special_form("quartic-II", None).map_err(err)?).map_err(err)?;
    let (one, zero) = (Cyclotomic::from_i64(1), Cyclotomic::from_i64(0));
    ok &= note(
        detail,
        p1.coarse == [one.clone(), zero.clone()] && p1.automorphism_order() == 2,
        format!(
            "case (I) ↦ ({}:{}), extra automorphisms μ{}",
            p1.coarse[0],
            p1.coarse[1],
            p1.automorphism_order()
        ),
    );
    ok &= note(
        detail,
        p2.coarse == [zero, one] && p2.automorphism_order() == 3,
        format!(
            "case (II) ↦ ({}:{}), extra automorphisms μ{}",
            p2.coarse[0],
            p2.coarse[1],
            p2.automorphism_order()
        ),
    );

    // Double roots by construction; square-freeness judged from the root
    // multiplicities, independently of the invariants.
    let mut wrong = 0;
    for _ in 0..SEPARATION_DRAWS {
        let a = Cyclotomic::from_i64(rng.gen_range(-5..=5));
        let b = Cyclotomic::from_i64(rng.gen_range(1..=5));
        let lin = Form::new(vec![b, a.neg_ref()]);
        let rest = loop {
            let r = Form::new(
                (0..3)
                    .map(|_| Cyclotomic::from_i64(rng.gen_range(-9..=9)))
                    .collect(),
            );
            if !r.is_zero() {
                break r;
            }
        };
        let f = lin.pow(2).mul(&rest);
        if !quartic_invariants(&f)
            .map_err(err)?
            .discriminant()
            .is_zero()
        {
            wrong += 1;
        }
    }
    let mut squarefree = 0;
    while squarefree < SEPARATION_DRAWS {
        let f = random_quartic(&mut rng);
        if f.coeff(0).is_zero()
            || f.multiplicity_profile()
                .map_err(err)?
                .iter()
                .any(|&m| m > 1)
        {
            continue;
        }
        squarefree += 1;
        if quartic_invariants(&f)
            .map_err(err)?
            .discriminant()
            .is_zero()
        {
            wrong += 1;
        }
    }
    ok &= note(
        detail,
        wrong == 0,
        format!("I2³ − 27I3² separates {SEPARATION_DRAWS} double-root from {SEPARATION_DRAWS} square-free quartics: {wrong} misclassified"),
    );
    Ok(ok)
}

fn quintic_locus(detail: &mut Vec<String>) -> Check {
    let f = quintic_f();
    let scaled = f.scale(&Cyclotomic::from_i64(324));
    let w = WeightedGrading::new(vec![1, 2, 3]).map_err(err)?;
    let pt = |c: &[i64]| PointW::from_ints(c, &[1, 2, 3]).map_err(err);
    let gradient_zero = |p: &PointW| -> Result<bool, String> {
        Ok(scaled
            .partials()
            .iter()
            .map(|d| d.evaluate(p.coords()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?
            .iter()
            .all(Cyclotomic::is_zero))
    };
    let value = |p: &PointW| scaled.evaluate(p.coords()).map_err(err);
    let mut ok = true;
    for c in [[1, 0, 0], [-3, 3, 3]] {
        let p = pt(&c)?;
        let (v, g) = (value(&p)?, gradient_zero(&p)?);
        ok &= note(
            detail,
            v.is_zero() && g && is_singular_at(&f, &w, &p).map_err(err)?,
            format!("324F{p} = {v}, gradient vanishes: {g}"),
        );
    }
    let p = pt(&[0, 1, 0])?;
    let (v, g) = (value(&p)?, gradient_zero(&p)?);
    ok &= note(
        detail,
        v.is_zero() && !g && on_divisor(&f, &w, &p).map_err(err)?,
        format!("324F{p} = {v}, gradient vanishes: {g}"),
    );
    let p = pt(&[0, 0, 1])?;
    let v = value(&p)?;
    ok &= note(
        detail,
        v == Cyclotomic::from_i64(144),
        format!("324F{p} = {v}, expected 144"),
    );
    Ok(ok)
}

fn sextic_relation(detail: &mut Vec<String>) -> Check {
    let f = sextic_f();
    let ring_w = WeightedGrading::new(vec![2, 4, 6, 10]).map_err(err)?;
    let amb = WeightedGrading::new(vec![1, 2, 3, 5]).map_err(err)?;
    let term_degrees: Vec<u64> = f.terms().map(|(e, _)| ring_w.degree_of(e)).collect();
    let mut ok = note(
        detail,
        !term_degrees.is_empty() && term_degrees.iter().all(|&d| d == 30),
        format!("{} terms, each of weighted degree 30", term_degrees.len()),
    );
    ok &= note(
        detail,
        f.weighted_degree(&ring_w).map_err(err)? == WeightedDegree::Homogeneous(30),
        "weighted_degree = 30",
    );
    let euler = euler_relation_holds(&f, &ring_w).map_err(err)?;
    ok &= note(detail, euler, "Σ e_i x_i ∂F/∂x_i = 30·F");
    let mut off = 0;
    let mut smooth_on = 0;
    for k in 1..4 {
        let p = PointW::coordinate(k, &amb).map_err(err)?;
        let on = on_divisor(&f, &amb, &p).map_err(err)?;
        let sing = is_singular_at(&f, &amb, &p).map_err(err)?;
        if !on {
            off += 1;
        } else if !sing {
            smooth_on += 1;
        }
        detail.push(format!(
            "F{p} = {}, on Z(F): {on}, singular: {sing}",
            f.evaluate(p.coords()).map_err(err)?
        ));
    }
    ok &= note(
        detail,
        off == 2 && smooth_on == 1,
        format!("coordinate pattern: {off} off Z(F), {smooth_on} on it and smooth"),
    );
    Ok(ok)
}

/// The calibration runs behind criterion 10.
pub fn calibration_reports(seed: u64) -> Vec<Result<CalibrationReport, InvariantsError>> {
    vec![
        calibrate_invariants(&quintic_recipe(), seed),
        calibrate_invariants(&sextic_recipe(), seed),
    ]
}

fn calibration(seed: u64, detail: &mut Vec<String>) -> Check {
    let mut any = false;
    for (family, rep) in ["quintic", "sextic"].iter().zip(calibration_reports(seed)) {
        match rep {
            Ok(r) if r.succeeded() => {
                any = true;
                let CalibrationOutcomeView { scalings, squared } = view(&r);
                detail.push(format!(
                    "ok {family}: {} ({}); {squared}; I² = F on 25 check samples",
                    r.recipe, scalings
                ));
            }
            Ok(r) => detail.push(format!("diagnostic {family}: {:?}", r.outcome)),
            Err(e) => detail.push(format!("diagnostic {family}: {e}")),
        }
    }
    Ok(any)
}

struct CalibrationOutcomeView {
    scalings: String,
    squared: String,
}

fn view(r: &CalibrationReport) -> CalibrationOutcomeView {
    use crate::invariants::CalibrationOutcome;
    match &r.outcome {
        CalibrationOutcome::Success {
            scalings, squared, ..
        } => CalibrationOutcomeView {
            scalings: scalings
                .iter()
                .map(|(n, c)| format!("c{} = {c}", n.trim_start_matches('I')))
                .collect::<Vec<_>>()
                .join(", "),
            squared: squared
                .as_ref()
                .map(|(n, c)| format!("c{}² = {c}", n.trim_start_matches('I')))
                .unwrap_or_default(),
        },
        CalibrationOutcome::Failure { reason, .. } => CalibrationOutcomeView {
            scalings: reason.clone(),
            squared: String::new(),
        },
    }
}
