use super::*;
use crate::exactnum::{rat, Cyclotomic};
use crate::invariants::{quintic_f, sextic_f};
use proptest::prelude::*;

fn w(ws: &[u64]) -> WeightedGrading {
    WeightedGrading::new(ws.to_vec()).unwrap()
}

fn pt(c: &[i64], ws: &[u64]) -> PointW {
    PointW::from_ints(c, ws).unwrap()
}

#[test]
fn weighted_equality() {
    let a = pt(&[1, 1, 1], &[1, 2, 3]);
    let b = a.rescale(&Cyclotomic::from_i64(2)).unwrap();
    assert_eq!(b.coords()[2], Cyclotomic::from_i64(8));
    assert_eq!(a, b);
    assert_eq!(pt(&[-3, 3, 3], &[1, 2, 3]), pt(&[3, 3, -3], &[1, 2, 3]));
    assert_ne!(pt(&[1, 1, 1], &[1, 2, 3]), pt(&[1, -1, 1], &[1, 2, 3]));
    // (0:1:0) in P(1,2,3): t² = 4 has a solution.
    assert_eq!(pt(&[0, 1, 0], &[1, 2, 3]), pt(&[0, 4, 0], &[1, 2, 3]));
    // Over k̄, t² = −1 is solvable too.
    assert_eq!(pt(&[0, 1, 0], &[1, 2, 3]), pt(&[0, -1, 0], &[1, 2, 3]));
    assert_ne!(pt(&[0, 1, 0], &[1, 2, 3]), pt(&[0, 0, 1], &[1, 2, 3]));
    assert_ne!(pt(&[1, 0], &[1, 1]), pt(&[1, 0, 0], &[1, 1, 1]));
    assert!(matches!(
        PointW::from_ints(&[0, 0], &[1, 2]),
        Err(LocusError::ZeroPoint)
    ));
    assert!(matches!(
        PointW::from_ints(&[1], &[1, 2]),
        Err(LocusError::WeightMismatch { .. })
    ));
}

#[test]
fn quintic_divisor_examples() {
    let f = quintic_f();
    let g = w(&[1, 2, 3]);
    assert!(on_divisor(&f, &g, &pt(&[0, 1, 0], &[1, 2, 3])).unwrap());
    assert!(!on_divisor(&f, &g, &pt(&[0, 0, 1], &[1, 2, 3])).unwrap());
    assert_eq!(
        f.evaluate(pt(&[0, 0, 1], &[1, 2, 3]).coords()).unwrap(),
        Cyclotomic::from_rational(rat(144, 324))
    );
    assert!(on_divisor(&f, &g, &pt(&[-3, 3, 3], &[1, 2, 3])).unwrap());
    assert!(is_singular_at(&f, &g, &pt(&[1, 0, 0], &[1, 2, 3])).unwrap());
    assert!(is_singular_at(&f, &g, &pt(&[-3, 3, 3], &[1, 2, 3])).unwrap());
    assert!(!is_singular_at(&f, &g, &pt(&[0, 1, 0], &[1, 2, 3])).unwrap());
    let d12 = f
        .partial(2)
        .evaluate(pt(&[0, 1, 0], &[1, 2, 3]).coords())
        .unwrap();
    assert_eq!(d12, Cyclotomic::from_rational(rat(-24, 324)));
}

#[test]
fn divisor_errors() {
    let f = quintic_f();
    let p = pt(&[1, 0, 0], &[1, 2, 3]);
    assert!(matches!(
        on_divisor(&f, &w(&[1, 1, 1]), &p),
        Err(LocusError::Inhomogeneous(_)) | Err(LocusError::WeightMismatch { .. })
    ));
    assert!(matches!(
        on_divisor(&f, &w(&[1, 2, 3, 4]), &pt(&[1, 0, 0, 0], &[1, 2, 3, 4])),
        Err(LocusError::WeightMismatch { .. })
    ));
    let q = pt(&[1, 0, 0], &[1, 1, 1]);
    assert!(matches!(
        on_divisor(&f, &w(&[1, 1, 1]), &q),
        Err(LocusError::Inhomogeneous(_))
    ));
}

#[test]
fn euler_relation() {
    assert!(euler_relation_holds(&quintic_f(), &w(&[1, 2, 3])).unwrap());
    assert!(euler_relation_holds(&quintic_f(), &w(&[4, 8, 12])).unwrap());
    assert!(euler_relation_holds(&sextic_f(), &w(&[2, 4, 6, 10])).unwrap());
    assert!(euler_relation_holds(&sextic_f(), &w(&[1, 2, 3, 5])).unwrap());
}

#[test]
fn sextic_coordinate_pattern() {
    let f = sextic_f();
    let g = w(&[1, 2, 3, 5]);
    let e = |k| PointW::coordinate(k, &g).unwrap();
    assert!(on_divisor(&f, &g, &e(1)).unwrap());
    assert!(!is_singular_at(&f, &g, &e(1)).unwrap());
    assert!(!on_divisor(&f, &g, &e(2)).unwrap());
    assert!(!on_divisor(&f, &g, &e(3)).unwrap());
}

#[test]
fn quintic_report() {
    let r = quintic_locus_report();
    audit(&r).unwrap();
    assert!(r.calibration.as_ref().unwrap().succeeded());
    for c in &r.claims {
        assert_eq!(c.verdict, Verdict::Verified, "{c:?}");
    }
    assert!(r.incidence.iter().any(|i| i.locus == "(V)" && i.singular));
}

#[test]
fn sextic_report() {
    let r = sextic_locus_report();
    audit(&r).unwrap();
    assert!(r.refuted().is_empty(), "{:?}", r.refuted());
    for label in [
        "sextic.relation-homogeneous",
        "sextic.II-VII-VIII-ambient",
        "sextic.coordinate-incidence",
    ] {
        assert_eq!(
            r.claim(label).unwrap().verdict,
            Verdict::Verified,
            "{label}"
        );
    }
    assert_eq!(
        r.claim("sextic.curve-intersection").unwrap().verdict,
        Verdict::OutOfScope
    );
}

#[test]
fn audit_detects_gaps() {
    let mut r = quintic_locus_report();
    let dup = r.claims[0].clone();
    r.claims.push(dup);
    r.claims.remove(1);
    let problems = audit(&r).unwrap_err();
    assert_eq!(problems.len(), 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn rescaling_preserves_verdicts(n in 1i64..30, d in 1i64..30, neg: bool) {
        let t = Cyclotomic::from_rational(rat(if neg { -n } else { n }, d));
        let f = quintic_f();
        let g = w(&[1, 2, 3]);
        for c in [[1, 0, 0], [-3, 3, 3], [0, 1, 0], [0, 0, 1], [2, -1, 5]] {
            let p = pt(&c, &[1, 2, 3]);
            let q = p.rescale(&t).unwrap();
            prop_assert_eq!(&p, &q);
            prop_assert_eq!(on_divisor(&f, &g, &p).unwrap(), on_divisor(&f, &g, &q).unwrap());
            prop_assert_eq!(is_singular_at(&f, &g, &p).unwrap(), is_singular_at(&f, &g, &q).unwrap());
        }
        let s = sextic_f();
        let h = w(&[1, 2, 3, 5]);
        for c in [[0, 1, 0, 0], [1, 2, -1, 3]] {
            let p = pt(&c, &[1, 2, 3, 5]);
            let q = p.rescale(&t).unwrap();
            prop_assert_eq!(on_divisor(&s, &h, &p).unwrap(), on_divisor(&s, &h, &q).unwrap());
            prop_assert_eq!(is_singular_at(&s, &h, &p).unwrap(), is_singular_at(&s, &h, &q).unwrap());
        }
    }
}
