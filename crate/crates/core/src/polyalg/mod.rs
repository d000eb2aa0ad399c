//! Sparse multivariate polynomials, weighted gradings and binary forms.

mod binary;
mod multipoly;
pub mod univariate;

pub use binary::{BinaryForm, Mat2};
pub use multipoly::{var_list, MultiPoly, WeightedDegree, WeightedGrading};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("grading has {found} weights but the polynomial has {expected} variables")]
    VariableMismatch { expected: usize, found: usize },
    #[error("expected {expected} values, got {found}")]
    Arity { expected: usize, found: usize },
    #[error("weights must be positive")]
    NonPositiveWeight,
    #[error("the zero form has no root multiplicities")]
    ZeroForm,
    #[error("a binary form needs exactly two variables, got {0}")]
    NotBinary(usize),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, Cyclotomic, Rational};
    use crate::scalar::Scalar;

    type Q = Rational;

    fn q(n: i64) -> Q {
        int(n)
    }

    fn form(c: &[i64]) -> BinaryForm<Cyclotomic> {
        BinaryForm::new(c.iter().map(|&x| Cyclotomic::from_i64(x)).collect())
    }

    #[test]
    fn weighted_degree_examples() {
        let vars = var_list(&["t1", "t2"]);
        let one: MultiPoly<Q> = MultiPoly::constant(vars.clone(), q(1));
        let w = WeightedGrading::new(vec![1, 3]).unwrap();
        assert_eq!(one.weighted_degree(&w), Ok(WeightedDegree::Homogeneous(0)));
        let t1 = MultiPoly::<Q>::var(vars.clone(), 0);
        let t2 = MultiPoly::<Q>::var(vars.clone(), 1);
        let p = t1.pow(2).add(&t2);
        assert_eq!(p.weighted_degree(&w), Ok(WeightedDegree::Inhomogeneous));
        let w3 = WeightedGrading::new(vec![1, 2, 3]).unwrap();
        assert!(matches!(
            p.weighted_degree(&w3),
            Err(PolyError::VariableMismatch { .. })
        ));
        assert_eq!(
            MultiPoly::<Q>::zero(vars).weighted_degree(&w),
            Ok(WeightedDegree::Zero)
        );
        assert_eq!(
            WeightedGrading::new(vec![1, 0]),
            Err(PolyError::NonPositiveWeight)
        );
    }

    #[test]
    fn partials_examples() {
        let vars = var_list(&["t", "s"]);
        let t = MultiPoly::<Q>::var(vars.clone(), 0);
        let s = MultiPoly::<Q>::var(vars.clone(), 1);
        let p = t.pow(2).sub(&s);
        assert_eq!(p.partials()[0], t.scale(&q(2)));
        let c = MultiPoly::<Q>::constant(vars, q(7));
        assert!(c.partials().iter().all(MultiPoly::is_zero));
    }

    #[test]
    fn evaluate_at_origin_is_constant_term() {
        let vars = var_list(&["a", "b"]);
        let p = MultiPoly::<Q>::var(vars.clone(), 0)
            .mul(&MultiPoly::var(vars.clone(), 1))
            .add(&MultiPoly::constant(vars, q(5)));
        assert_eq!(p.evaluate(&[q(0), q(0)]), Ok(q(5)));
        assert!(matches!(p.evaluate(&[q(0)]), Err(PolyError::Arity { .. })));
    }

    #[test]
    fn substitution_examples() {
        let i = Cyclotomic::i();
        let anti = Mat2::new(Cyclotomic::zero(), i.clone(), i, Cyclotomic::zero());
        let xy = form(&[0, 1, 0]);
        assert_eq!(xy.substitute_linear(&anti), form(&[0, -1, 0]));

        let f = form(&[1, 0, 0, 0, 1]);
        assert_eq!(f.substitute_linear(&Mat2::identity()), f);
        let z8 = Cyclotomic::zeta(8).unwrap();
        let diag = Mat2::new(
            z8.clone(),
            Cyclotomic::zero(),
            Cyclotomic::zero(),
            z8.inv().unwrap(),
        );
        assert_eq!(f.substitute_linear(&diag), f.neg());
    }

    #[test]
    fn multiplicity_examples() {
        // x²y³
        assert_eq!(
            form(&[0, 0, 1, 0, 0, 0]).multiplicity_profile(),
            Ok(vec![3, 2])
        );
        assert_eq!(
            form(&[1, 0, 0, 0, 0, 1]).multiplicity_profile(),
            Ok(vec![1; 5])
        );
        // (x²+y²)²(x²−y²)² = (x⁴ − y⁴)²
        let g = form(&[1, 0, 0, 0, -1]).pow(2);
        assert_eq!(g.multiplicity_profile(), Ok(vec![2, 2, 2, 2]));
        assert_eq!(
            BinaryForm::<Cyclotomic>::zero(3).multiplicity_profile(),
            Err(PolyError::ZeroForm)
        );
    }

    #[test]
    fn multiplicities_over_cyclotomic_coefficients() {
        // (x − i y)^2 (x + y): double root at a non-rational point.
        let i = Cyclotomic::i();
        let l = BinaryForm::new(vec![Cyclotomic::one(), -i]);
        let f = l.pow(2).mul(&form(&[1, 1]));
        assert_eq!(f.multiplicity_profile(), Ok(vec![2, 1]));
    }

    #[test]
    fn form_poly_conversion() {
        let f = form(&[1, -2, 0, 3]);
        let p = f.to_poly(var_list(&["x", "y"]));
        assert_eq!(BinaryForm::from_poly(&p).unwrap(), f);
        assert_eq!(
            p.evaluate(&[Cyclotomic::from_i64(2), Cyclotomic::from_i64(1)])
                .unwrap(),
            f.evaluate(&Cyclotomic::from_i64(2), &Cyclotomic::one())
        );
    }

    #[test]
    fn scalar_pow() {
        assert_eq!(q(3).pow_u32(4), q(81));
        assert_eq!(Cyclotomic::i().pow_u32(4), Cyclotomic::one());
    }

    use num_traits::One;
    use num_traits::Zero;
}
