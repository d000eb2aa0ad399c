use super::*;
use crate::exactnum::{rat, Cyclotomic};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cf(c: &[i64]) -> Form {
    Form::new(c.iter().map(|&x| Cyclotomic::from_i64(x)).collect())
}

fn pair(l: i64, m: i64) -> (Cyclotomic, Cyclotomic) {
    (Cyclotomic::from_i64(l), Cyclotomic::from_i64(m))
}

#[test]
fn generator_examples() {
    let c1 = group_generators(GroupSpec::C(1)).unwrap();
    assert_eq!(c1.len(), 1);
    let m = c1[0].matrix();
    assert_eq!(m.a, Cyclotomic::from_i64(-1));
    assert_eq!(m.d, Cyclotomic::from_i64(-1));
    assert_eq!(group_generators(GroupSpec::O).unwrap().len(), 4);
    let ico = group_generators(GroupSpec::I).unwrap();
    assert_eq!(ico.len(), 2);
    assert!(ico
        .iter()
        .all(|g| g.matrix().det() == Cyclotomic::from_i64(1)));
}

#[test]
fn group_orders() {
    for n in 1..=6 {
        assert_eq!(
            group_elements(GroupSpec::C(n)).unwrap().len(),
            2 * n as usize
        );
        assert_eq!(
            group_elements(GroupSpec::D(n)).unwrap().len(),
            4 * n as usize
        );
    }
    assert_eq!(group_elements(GroupSpec::T).unwrap().len(), 24);
    assert_eq!(group_elements(GroupSpec::O).unwrap().len(), 48);
    assert_eq!(group_elements(GroupSpec::I).unwrap().len(), 120);
    for g in group_elements(GroupSpec::I).unwrap().iter() {
        assert_eq!(g.matrix().det(), Cyclotomic::from_i64(1));
    }
}

#[test]
fn group_parsing() {
    assert_eq!("D5".parse::<GroupSpec>().unwrap(), GroupSpec::D(5));
    assert_eq!("C_3".parse::<GroupSpec>().unwrap(), GroupSpec::C(3));
    assert_eq!("O".parse::<GroupSpec>().unwrap(), GroupSpec::O);
    assert!("C0".parse::<GroupSpec>().is_err());
    assert!("X2".parse::<GroupSpec>().is_err());
}

#[test]
fn containments() {
    assert!(is_subgroup(GroupSpec::T, GroupSpec::O).unwrap());
    assert!(is_subgroup(GroupSpec::D(2), GroupSpec::T).unwrap());
    assert!(is_subgroup(GroupSpec::D(4), GroupSpec::O).unwrap());
    assert!(is_subgroup(GroupSpec::C(3), GroupSpec::D(6)).unwrap());
    assert!(is_subgroup(GroupSpec::C(2), GroupSpec::C(4)).unwrap());
    assert!(!is_subgroup(GroupSpec::D(3), GroupSpec::D(4)).unwrap());
    assert!(!is_subgroup(GroupSpec::C(5), GroupSpec::T).unwrap());
}

#[test]
fn semi_invariance_examples() {
    let f = cf(&[1, 0, 0, 0, 1]);
    assert!(semi_invariance(&f, GroupSpec::D(4)).unwrap().is_some());
    assert!(semi_invariance(&f, GroupSpec::T).unwrap().is_none());
    let o = special_form("sextic-VI", None).unwrap();
    let cert = semi_invariance(&o, GroupSpec::O).unwrap().unwrap();
    assert_eq!(cert.scalars.len(), 4);
    assert!(semi_invariance(&Form::zero(3), GroupSpec::C(1)).is_err());
}

#[test]
fn stabilizer_examples() {
    let s = |c: &[i64]| catalog_stabilizer(&cf(c), 6).unwrap();
    assert_eq!(s(&[1, 0, 0, 0, 0, 1]), vec![GroupSpec::D(5)]);
    assert_eq!(s(&[1, 0, 0, 0, 0, 0, 1]), vec![GroupSpec::D(6)]);
    assert_eq!(
        catalog_stabilizer(&special_form("quintic-II", None).unwrap(), 5).unwrap(),
        vec![GroupSpec::C(3)]
    );
    assert!(matches!(
        catalog_stabilizer(&cf(&[0, 0, 1, 0, 0]), 4),
        Err(SymmetryError::InfiniteStabilizer { distinct: 2 })
    ));
}

#[test]
fn catalog_soundness() {
    let second = [pair(3, 5), pair(7, 11)];
    for case in catalog_cases() {
        let mut draws: Vec<Option<Vec<(Cyclotomic, Cyclotomic)>>> = vec![None];
        if case.params > 0 {
            draws.push(Some(second[..case.params].to_vec()));
        }
        for p in draws {
            let f = special_form(case.id, p.as_deref()).unwrap();
            assert!(is_generic(case.id, p.as_deref()).unwrap(), "{}", case.id);
            assert_eq!(f.degree(), case.degree);
            let got = catalog_stabilizer(&f, case.degree as u32).unwrap();
            assert_eq!(got, vec![case.expected], "{} with {:?}", case.id, p);
        }
    }
}

#[test]
fn catalog_normal_forms() {
    let t = special_form("quartic-II", None).unwrap();
    assert_eq!(t.coeff(2), &Cyclotomic::sqrt_m3().scale(&rat(2, 1)));
    assert_eq!(
        special_form("sextic-VI", None).unwrap(),
        cf(&[0, 1, 0, 0, 0, -1, 0])
    );
    assert_eq!(
        special_form("quintic-IV", None).unwrap(),
        cf(&[0, 1, 0, 0, 1, 0])
    );
    assert!(matches!(
        special_form("septic-I", None),
        Err(SymmetryError::UnknownCase(_))
    ));
    assert!(matches!(
        special_form("sextic-I", Some(&[pair(1, 2)])),
        Err(SymmetryError::ParameterCount {
            expected: 2,
            found: 1
        })
    ));
    // λ = μ collapses the sextic pencil onto x⁶ + y⁶.
    assert!(!is_generic("sextic-IV", Some(&[pair(1, 1)])).unwrap());
    assert!(!is_generic("quartic-generic", Some(&[pair(1, 1)])).unwrap());
    assert!(!is_generic("quintic-I", Some(&[pair(1, -1)])).unwrap());
}

#[test]
fn ground_form_data() {
    let d = ground_forms(GroupSpec::D(4)).unwrap();
    assert_eq!(d.nu, [2, 2, 4]);
    assert_eq!(ground_forms(GroupSpec::T).unwrap().nu, [3, 3, 2]);
    assert_eq!(ground_forms(GroupSpec::O).unwrap().nu, [4, 3, 2]);
    assert_eq!(ground_forms(GroupSpec::I).unwrap().nu, [5, 3, 2]);
    assert!(matches!(
        ground_forms(GroupSpec::C(3)),
        Err(SymmetryError::NoGroundForms(_))
    ));
}

#[test]
fn ground_forms_are_semi_invariant() {
    for g in [
        GroupSpec::D(2),
        GroupSpec::D(3),
        GroupSpec::D(5),
        GroupSpec::T,
        GroupSpec::O,
        GroupSpec::I,
    ] {
        let set = ground_forms(g).unwrap();
        for (k, f) in set.forms.iter().enumerate() {
            assert!(semi_invariance(f, g).unwrap().is_some(), "{g} F{}", k + 1);
            assert_eq!(g.order() % (2 * f.degree() as u64), 0);
        }
    }
}

#[test]
fn klein_examples() {
    let l = Cyclotomic::from_i64(2);
    let m = Cyclotomic::from_i64(3);
    let f = klein_generate(
        GroupSpec::C(2),
        1,
        0,
        0,
        &[pair(1, 1), (l.clone(), m.clone())],
    )
    .unwrap();
    assert_eq!(f, special_form("quintic-I", Some(&[(l, m)])).unwrap());
    let s = klein_generate(GroupSpec::D(3), 0, 0, 1, &[pair(2, 3)]).unwrap();
    // xy·(2(x³+y³)² + 3(x³−y³)²)
    assert_eq!(s.degree(), 8);
    assert_eq!(
        klein_generate(GroupSpec::O, 0, 0, 0, &[]).unwrap(),
        Form::constant(Cyclotomic::from_i64(1))
    );
    assert_eq!(
        klein_generate(GroupSpec::T, 0, 0, 0, &[pair(0, 0)]),
        Err(SymmetryError::ZeroParameter(0))
    );
}

#[test]
fn stability() {
    assert!(!is_stable(&cf(&[1, 0, 1, 0, 0, 0])).unwrap()); // x³(x²+y²)
    assert!(is_stable(&cf(&[1, 0, 0, 0, 0, 0, 1])).unwrap());
    assert!(!is_stable(&cf(&[0, 0, 0, 1, 0, 0, 0])).unwrap());
    assert!(!has_finite_stabilizer(&cf(&[0, 0, 1, 0, 0])).unwrap());
    assert!(has_finite_stabilizer(&cf(&[1, 0, 0, 0, 0, 1])).unwrap());
    // x²y²(x+y)
    assert!(has_finite_stabilizer(&cf(&[0, 0, 1, 1, 0, 0])).unwrap());
    assert!(is_stable(&Form::zero(2)).is_err());
}

fn random_word(rng: &mut ChaCha8Rng, gens: usize) -> Vec<usize> {
    let len = rng.gen_range(1..8);
    (0..len).map(|_| rng.gen_range(0..gens)).collect()
}

#[test]
fn characters_are_consistent() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let cases = [
        (special_form("sextic-VI", None).unwrap(), GroupSpec::O),
        (special_form("quintic-V", None).unwrap(), GroupSpec::D(5)),
        (
            ground_forms(GroupSpec::I).unwrap().forms[0].clone(),
            GroupSpec::I,
        ),
    ];
    for (f, g) in cases {
        let cert = semi_invariance(&f, g).unwrap().unwrap();
        let gens = group_generators(g).unwrap();
        for _ in 0..20 {
            let w = random_word(&mut rng, gens.len());
            let m = w[1..]
                .iter()
                .fold(gens[w[0]].clone(), |acc, &k| acc.mul(&gens[k]));
            let direct = f.proportionality(&m.act(&f)).unwrap();
            assert_eq!(direct, cert.character(&w));
        }
    }
}

fn group_strategy() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        (1u32..6).prop_map(GroupSpec::C),
        (1u32..6).prop_map(GroupSpec::D),
        Just(GroupSpec::T),
        Just(GroupSpec::O),
        Just(GroupSpec::I),
    ]
}

fn params(max: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-4i64..=4, -4i64..=4), 0..=max).prop_map(|v| {
        v.into_iter()
            .map(|(l, m)| if l == 0 && m == 0 { (1, 0) } else { (l, m) })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn klein_outputs_are_semi_invariant(
        g in group_strategy(), a in 0u32..3, b in 0u32..3, c in 0u32..2, p in params(2)
    ) {
        // Icosahedral draws stay at degree ≤ 62: either one orbit factor or
        // a product of ground forms.
        let (p, (a, b, c)) = if g == GroupSpec::I {
            if p.is_empty() { (p, (a.min(1), b.min(1), c)) } else { (p[..1].to_vec(), (0, 0, 0)) }
        } else {
            (p, (a, b, c))
        };
        let pairs: Vec<_> = p.iter().map(|&(l, m)| pair(l, m)).collect();
        let f = klein_generate(g, a, b, c, &pairs).unwrap();
        let expect = if g.is_cyclic() {
            let GroupSpec::C(n) = g else { unreachable!() };
            (a + b) as usize + p.len() * n as usize
        } else {
            let set = ground_forms(g).unwrap();
            a as usize * set.forms[0].degree()
                + b as usize * set.forms[1].degree()
                + c as usize * set.forms[2].degree()
                + p.len() * (g.order() / 2) as usize
        };
        prop_assert_eq!(f.degree(), expect);
        if !f.is_zero() {
            prop_assert!(semi_invariance(&f, g).unwrap().is_some());
        }
    }
}
