use super::*;
use crate::exactnum::{int, Rational};
use crate::grading::{hcf_degrees, rigidify, stacky_decompose};
use crate::polyalg::{BinaryForm, Mat2, WeightedDegree, WeightedGrading};
use crate::symmetry::special_form;
use crate::Matrix;
use proptest::prelude::*;

fn cf(c: &[i64]) -> Form {
    Form::new(c.iter().map(|&x| Cyclotomic::from_i64(x)).collect())
}

fn rf(c: &[i64]) -> BinaryForm<Rational> {
    BinaryForm::new(c.iter().map(|&x| int(x)).collect())
}

/// det-1 rational matrix from integer data: [[a, b], [c, (1 + b c)/a]].
fn sl2_rational(a: i64, b: i64, c: i64) -> Mat2<Rational> {
    Mat2::new(int(a), int(b), int(c), rat(1 + b * c, a))
}

#[test]
fn catalog_weights_and_degrees() {
    let q = catalog_ring(CatalogFamily::Quartic).unwrap();
    assert!(q.ring.is_free());
    assert_eq!(q.ring.weights(), &[2, 3]);
    let q5 = catalog_ring(CatalogFamily::Quintic).unwrap();
    assert_eq!(q5.ring.weights(), &[4, 8, 12, 18]);
    assert_eq!(q5.ring.relation_degree().unwrap(), Some(36));
    let s = catalog_ring(CatalogFamily::Sextic).unwrap();
    assert_eq!(s.ring.relation_degree().unwrap(), Some(30));
    let cs = catalog_ring(CatalogFamily::CubicSurface).unwrap();
    assert_eq!(cs.ring.weights(), &[8, 16, 24, 32, 40, 100]);
    assert_eq!(cs.ring.relation_degree().unwrap(), Some(200));
    assert_eq!(
        "sextic".parse::<CatalogFamily>().unwrap(),
        CatalogFamily::Sextic
    );
    assert!("octic".parse::<CatalogFamily>().is_err());
}

#[test]
fn gerbe_indices() {
    let expect = [
        (CatalogFamily::Quartic, 1),
        (CatalogFamily::Quintic, 2),
        (CatalogFamily::Sextic, 1),
        (CatalogFamily::CubicCurve, 2),
        (CatalogFamily::CubicSurface, 4),
    ];
    for (fam, g) in expect {
        let ring = catalog_ring(fam).unwrap().ring;
        assert_eq!(hcf_degrees(&ring).unwrap(), g, "{fam}");
        assert_eq!(rigidify(&ring).unwrap().gerbe_index, g);
    }
}

#[test]
fn catalog_rings_decompose() {
    for (fam, coarse, deg) in [
        (CatalogFamily::Quintic, vec![1, 2, 3], 9),
        (CatalogFamily::Sextic, vec![1, 2, 3, 5], 15),
        (CatalogFamily::CubicSurface, vec![1, 2, 3, 4, 5], 25),
    ] {
        let r = stacky_decompose(&catalog_ring(fam).unwrap().ring).unwrap();
        assert_eq!(r.coarse_weights, coarse);
        assert_eq!(r.root.canonical_degree, deg);
        assert!(r.reconstruction_matches);
    }
}

#[test]
fn quintic_f_values() {
    let f = quintic_f();
    let w = WeightedGrading::new(vec![4, 8, 12]).unwrap();
    assert_eq!(
        f.weighted_degree(&w).unwrap(),
        WeightedDegree::Homogeneous(36)
    );
    let at = |p: [i64; 3]| {
        f.evaluate(&p.map(Cyclotomic::from_i64))
            .unwrap()
            .scale(&int(324))
    };
    assert_eq!(at([0, 0, 1]), Cyclotomic::from_i64(144));
    assert_eq!(at([1, 0, 0]), Cyclotomic::from_i64(0));
    assert_eq!(at([-3, 3, 3]), Cyclotomic::from_i64(0));
    // Term sum at (−3, 3, 3): 2187 − 1944 + 1458 − 5832 + 3888 + 243.
    assert_eq!(2187 - 1944 + 1458 - 5832 + 3888 + 243, 0);
}

#[test]
fn sextic_f_homogeneous_and_a12() {
    let w = WeightedGrading::new(vec![2, 4, 6, 10]).unwrap();
    let f = sextic_f();
    assert_eq!(
        f.weighted_degree(&w).unwrap(),
        WeightedDegree::Homogeneous(30)
    );
    for (_, e) in f.terms().map(|(e, c)| (c, e)) {
        assert_eq!(w.degree_of(e), 30);
    }
    let m = sextic_matrix();
    assert_eq!(
        m[0][1].weighted_degree(&w).unwrap(),
        WeightedDegree::Homogeneous(8)
    );
    assert_eq!(
        sextic_a33_as_printed().weighted_degree(&w).unwrap(),
        WeightedDegree::Inhomogeneous
    );
    let mut broken = m.clone();
    broken[2][2] = sextic_a33_as_printed();
    assert_eq!(
        det3(&broken).weighted_degree(&w).unwrap(),
        WeightedDegree::Inhomogeneous
    );
}

#[test]
fn quartic_examples() {
    let inv = quartic_invariants(&cf(&[1, 0, 0, 0, 1])).unwrap();
    assert_eq!(
        (inv.i2.clone(), inv.i3.clone()),
        (Cyclotomic::from_i64(1), Cyclotomic::from_i64(0))
    );
    let t = special_form("quartic-II", None).unwrap();
    assert!(quartic_invariants(&t).unwrap().i2.is_zero());
    assert!(quartic_invariants(&cf(&[1, 0, 1])).is_err());

    let p1 = quartic_point(&cf(&[1, 0, 0, 0, 1])).unwrap();
    assert_eq!(
        p1.coarse,
        [Cyclotomic::from_i64(1), Cyclotomic::from_i64(0)]
    );
    assert_eq!(p1.automorphism_order(), 2);
    let p2 = quartic_point(&t).unwrap();
    assert_eq!(
        p2.coarse,
        [Cyclotomic::from_i64(0), Cyclotomic::from_i64(1)]
    );
    assert_eq!(p2.automorphism_order(), 3);
    let g = quartic_point(&special_form("quartic-generic", None).unwrap()).unwrap();
    assert!(!g.i2.is_zero() && !g.i3.is_zero());
    assert_eq!(
        quartic_point(&cf(&[1, 2, 1, 0, 0])),
        Err(InvariantsError::NotStable)
    );
}

#[test]
fn discriminant_separates() {
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(11);
    use rand::Rng;
    let mut sq = 0;
    let mut dbl = 0;
    while sq < 20 || dbl < 20 {
        let a = rng.gen_range(-5i64..=5);
        // (x − a y)² · q
        let lin = cf(&[1, -a]);
        let q = cf(&[
            rng.gen_range(-5..=5),
            rng.gen_range(-5..=5),
            rng.gen_range(-5..=5),
        ]);
        if q.is_zero() {
            continue;
        }
        if dbl < 20 {
            let f = lin.pow(2).mul(&q);
            assert!(quartic_invariants(&f).unwrap().discriminant().is_zero());
            dbl += 1;
        }
        let f = cf(&(0..5).map(|_| rng.gen_range(-6..=6)).collect::<Vec<_>>());
        if f.coeff(0).is_zero() && f.coeff(4).is_zero() {
            continue;
        }
        if f.is_zero() {
            continue;
        }
        let squarefree = f.multiplicity_profile().unwrap().iter().all(|&m| m == 1)
            && f.coeffs().iter().take_while(|c| c.is_zero()).count() <= 1;
        if squarefree && sq < 20 && !f.coeff(0).is_zero() {
            assert!(!quartic_invariants(&f).unwrap().discriminant().is_zero());
            sq += 1;
        }
    }
}

#[test]
fn transvectant_basics() {
    let f = rf(&[1, 2, 0, -1, 3]);
    let g = rf(&[2, 0, 1]);
    assert_eq!(transvectant(&f, &g, 0).unwrap(), f.mul(&g));
    assert!(transvectant(&f, &f, 3).unwrap().is_zero());
    assert!(transvectant(&f, &f, 1).unwrap().is_zero());
    assert!(matches!(
        transvectant(&f, &g, 3),
        Err(InvariantsError::OrderTooLarge { .. })
    ));
    assert_eq!(transvectant(&f, &g, 2).unwrap().degree(), 2);
}

#[test]
fn quartic_transvectant_matches_i2() {
    // (f,f)_4 ∝ I₂: fit at x⁴+y⁴, confirm at another quartic.
    let fit = |c: &[i64]| {
        let j = transvectant(&rf(c), &rf(c), 4).unwrap().coeff(0).clone();
        let i2 = quartic_invariants(&cf(c))
            .unwrap()
            .i2
            .to_rational()
            .unwrap();
        (j, i2)
    };
    let (j0, i0) = fit(&[1, 0, 0, 0, 1]);
    let k = i0 / j0;
    let (j1, i1) = fit(&[3, -1, 4, 1, -5]);
    assert_eq!(k * j1, i1);
}

#[test]
fn quartic_sanity_calibration() {
    let r = calibrate_invariants(&quartic_recipe(), 3).unwrap();
    match r.outcome {
        CalibrationOutcome::Success {
            scalings,
            checked_samples,
            ..
        } => {
            assert_eq!(checked_samples, 10);
            assert!(scalings.iter().all(|(_, c)| c.to_rational().is_some()));
        }
        other => panic!("quartic calibration failed: {other:?}"),
    }
}

#[test]
fn quintic_calibration_succeeds() {
    let r = calibrate_invariants(&quintic_recipe(), 7).unwrap();
    assert!(r.succeeded(), "{:?}", r.outcome);
    assert_eq!(r.scaling("I4"), Some(&Cyclotomic::from_i64(1)));
    assert_eq!(r.scaling("I8"), Some(&Cyclotomic::from_rational(rat(1, 2))));
    assert_eq!(
        r.scaling("I12"),
        Some(&Cyclotomic::from_rational(rat(-1, 4)))
    );
    assert_eq!(
        r.squared_scaling(),
        Some(&Cyclotomic::from_rational(rat(1, 648)))
    );
}

#[test]
fn calibration_under_determined() {
    let mut recipe = quintic_recipe();
    // (f,f)_5 vanishes identically: the degree-4 slot becomes zero.
    recipe.steps.push(RecipeStep {
        name: "z".into(),
        left: "i".into(),
        right: "i".into(),
        order: 1,
    });
    recipe.steps.push(RecipeStep {
        name: "Z4".into(),
        left: "z".into(),
        right: "z".into(),
        order: 2,
    });
    recipe.outputs[0].1 = "Z4".into();
    assert!(matches!(
        calibrate_invariants(&recipe, 1),
        Err(InvariantsError::UnderDetermined(_))
    ));
}

#[test]
fn calibration_is_deterministic() {
    let a = calibrate_invariants(&quintic_recipe(), 99).unwrap();
    let b = calibrate_invariants(&quintic_recipe(), 99).unwrap();
    assert_eq!(a, b);
}

fn small() -> impl Strategy<Value = i64> {
    -6i64..=6
}

fn unimodular() -> impl Strategy<Value = Mat2<Rational>> {
    (prop_oneof![1i64..=5, -5i64..=-1], small(), small())
        .prop_map(|(a, b, c)| sl2_rational(a, b, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn quartic_invariants_are_invariant(c in prop::collection::vec(small(), 5), m in unimodular()) {
        let f = cf(&c);
        let mc: Matrix = Matrix::new(
            Cyclotomic::from_rational(m.a.clone()),
            Cyclotomic::from_rational(m.b.clone()),
            Cyclotomic::from_rational(m.c.clone()),
            Cyclotomic::from_rational(m.d.clone()),
        );
        let g = f.substitute_linear(&mc);
        prop_assert_eq!(quartic_invariants(&f).unwrap(), quartic_invariants(&g).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn transvectant_equivariance(
        f in prop::collection::vec(small(), 2..7),
        g in prop::collection::vec(small(), 2..7),
        r in 0usize..6,
        m in unimodular(),
    ) {
        let (f, g) = (rf(&f), rf(&g));
        prop_assume!(r <= f.degree().min(g.degree()));
        let lhs = transvectant(&f.substitute_linear(&m), &g.substitute_linear(&m), r).unwrap();
        let rhs = transvectant(&f, &g, r).unwrap().substitute_linear(&m);
        prop_assert_eq!(lhs, rhs);
    }
}
