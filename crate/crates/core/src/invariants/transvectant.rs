use num_bigint::BigInt;
use num_integer::binomial;

use super::InvariantsError;
use crate::exactnum::Rational;
use crate::polyalg::BinaryForm;
use crate::scalar::Scalar;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k))
}

fn derivative<S: Scalar>(f: &BinaryForm<S>, dx: usize, dy: usize) -> BinaryForm<S> {
    let mut g = f.clone();
    for _ in 0..dx {
        g = g.partial_x();
    }
    for _ in 0..dy {
        g = g.partial_y();
    }
    g
}

/// The r-th transvectant
/// ((d−r)!(e−r)!/(d!e!)) Σᵢ (−1)ⁱ C(r,i) ∂ʳf/∂x^{r−i}∂yⁱ · ∂ʳg/∂xⁱ∂y^{r−i}.
pub fn transvectant<S: Scalar>(
    f: &BinaryForm<S>,
    g: &BinaryForm<S>,
    r: usize,
) -> Result<BinaryForm<S>, InvariantsError> {
    let (d, e) = (f.degree(), g.degree());
    if r > d.min(e) {
        return Err(InvariantsError::OrderTooLarge { r, d, e });
    }
    let mut acc = BinaryForm::zero(d + e - 2 * r);
    for i in 0..=r {
        let term = derivative(f, r - i, i).mul(&derivative(g, i, r - i));
        let c = binomial(r as i64, i as i64) * if i % 2 == 0 { 1 } else { -1 };
        acc = acc.add(&term.scale(&S::from_integer(c)));
    }
    let norm = Rational::new(
        factorial(d - r) * factorial(e - r),
        factorial(d) * factorial(e),
    );
    Ok(acc.scale(&S::from_rational(&norm)))
}
