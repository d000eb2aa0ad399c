use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU32, Ordering};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::cyclopoly::{cyclotomic_polynomial, euler_phi};
use super::{ExactError, Rational};

pub const DEFAULT_MAX_ORDER: u32 = 120;

static MAX_ORDER: AtomicU32 = AtomicU32::new(DEFAULT_MAX_ORDER);

/// Largest cyclotomic order that construction and arithmetic may produce.
pub fn max_order() -> u32 {
    MAX_ORDER.load(Ordering::Relaxed)
}

pub fn set_max_order(bound: u32) {
    MAX_ORDER.store(bound.max(1), Ordering::Relaxed);
}

/// An element of Q(ζ_m), stored in the power basis 1, ζ, …, ζ^{φ(m)−1}
/// modulo the m-th cyclotomic polynomial.
///
/// The representation for a fixed order is canonical, so zero testing and
/// same-order equality are coordinate-wise. Values of different orders compare
/// equal when they agree after embedding into Q(ζ_lcm).
#[derive(Clone)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

fn check_order(m: u64) -> Result<u32, ExactError> {
    if m == 0 {
        return Err(ExactError::ZeroOrder);
    }
    let bound = max_order();
    if m > bound as u64 {
        return Err(ExactError::OrderBound { order: m, bound });
    }
    Ok(m as u32)
}

/// Reduces a dense coefficient vector (index = exponent of ζ_m) to the
/// canonical length-φ(m) representative.
fn reduce(m: u32, mut dense: Vec<Rational>) -> Vec<Rational> {
    let phi = cyclotomic_polynomial(m);
    let deg = phi.len() - 1;
    // ζ^m = 1 first, which keeps the division short.
    if dense.len() > m as usize {
        let mut folded = vec![Rational::zero(); m as usize];
        for (k, c) in dense.into_iter().enumerate() {
            if !c.is_zero() {
                folded[k % m as usize] += c;
            }
        }
        dense = folded;
    }
    if dense.len() < deg {
        dense.resize(deg, Rational::zero());
        return dense;
    }
    for k in (deg..dense.len()).rev() {
        let c = std::mem::take(&mut dense[k]);
        if c.is_zero() {
            continue;
        }
        for (j, &pj) in phi[..deg].iter().enumerate() {
            if pj != 0 {
                dense[k - deg + j] -= &c * Rational::from_integer(pj.into());
            }
        }
    }
    dense.truncate(deg);
    dense
}

impl Cyclotomic {
    /// Canonical representative of Σ coeffs[k]·ζ_m^k.
    pub fn new(m: u32, coeffs: Vec<Rational>) -> Result<Self, ExactError> {
        let m = check_order(m as u64)?;
        Ok(Self::from_dense(m, coeffs))
    }

    fn from_dense(m: u32, coeffs: Vec<Rational>) -> Self {
        Cyclotomic {
            order: m,
            coeffs: reduce(m, coeffs),
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// ζ_m^k, with k taken modulo m.
    pub fn zeta_pow(m: u32, k: i64) -> Result<Self, ExactError> {
        let m = check_order(m as u64)?;
        let e = k.rem_euclid(m as i64) as usize;
        let mut dense = vec![Rational::zero(); e + 1];
        dense[e] = Rational::one();
        Ok(Self::from_dense(m, dense))
    }

    pub fn zeta(m: u32) -> Result<Self, ExactError> {
        Self::zeta_pow(m, 1)
    }

    fn zeta_unchecked(m: u32, k: i64) -> Self {
        let e = k.rem_euclid(m as i64) as usize;
        let mut dense = vec![Rational::zero(); e + 1];
        dense[e] = Rational::one();
        Self::from_dense(m, dense)
    }

    /// i = ζ_4.
    pub fn i() -> Self {
        Self::zeta_unchecked(4, 1)
    }

    /// √−3 = 1 + 2ζ_3.
    pub fn sqrt_m3() -> Self {
        Self::from_dense(3, vec![Rational::one(), Rational::from_integer(2.into())])
    }

    /// √2 = ζ_8 + ζ_8^7.
    pub fn sqrt2() -> Self {
        Self::zeta_unchecked(8, 1).add_ref(&Self::zeta_unchecked(8, 7))
    }

    /// √5 = 1 + 2ζ_5 + 2ζ_5^4.
    pub fn sqrt5() -> Self {
        let two = Rational::from_integer(2.into());
        Self::from_dense(
            5,
            vec![
                Rational::one(),
                two.clone(),
                Rational::zero(),
                Rational::zero(),
                two,
            ],
        )
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it lies in Q.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The same number represented in Q(ζ_m2).
    pub fn embed(&self, m2: u32) -> Result<Self, ExactError> {
        let m2 = check_order(m2 as u64)?;
        if m2 % self.order != 0 {
            return Err(ExactError::IncompatibleOrder {
                from: self.order,
                to: m2,
            });
        }
        Ok(self.embed_unchecked(m2))
    }

    fn embed_unchecked(&self, m2: u32) -> Self {
        if m2 == self.order {
            return self.clone();
        }
        if self.coeffs.len() == 1 {
            // φ(order) = 1: the value is the rational coeffs[0].
            let deg = euler_phi(m2) as usize;
            let mut coeffs = vec![Rational::zero(); deg];
            coeffs[0] = self.coeffs[0].clone();
            return Cyclotomic { order: m2, coeffs };
        }
        let scale = (m2 / self.order) as usize;
        let mut dense = vec![Rational::zero(); (self.coeffs.len() - 1) * scale + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            dense[k * scale] = c.clone();
        }
        Self::from_dense(m2, dense)
    }

    fn common_order(&self, other: &Self) -> u32 {
        let l = (self.order as u64).lcm(&(other.order as u64));
        match check_order(l) {
            Ok(m) => m,
            Err(e) => panic!("cyclotomic arithmetic: {e}"),
        }
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let m = self.common_order(other);
        (self.embed_unchecked(m), other.embed_unchecked(m))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        check_order((self.order as u64).lcm(&(other.order as u64)))?;
        Ok(self.add_ref(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        check_order((self.order as u64).lcm(&(other.order as u64)))?;
        Ok(self.mul_ref(other))
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if let Some(q) = other.rational_repr() {
            let mut out = self.clone();
            out.coeffs[0] += q;
            return out;
        }
        if let Some(q) = self.rational_repr() {
            let mut out = other.clone();
            out.coeffs[0] += q;
            return out;
        }
        let (a, b) = self.aligned(other);
        let coeffs = a
            .coeffs
            .into_iter()
            .zip(b.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        Cyclotomic {
            order: a.order,
            coeffs,
        }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Rational value when the stored order has φ = 1 (orders 1 and 2).
    fn rational_repr(&self) -> Option<&Rational> {
        (self.coeffs.len() == 1).then(|| &self.coeffs[0])
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if let Some(q) = other.rational_repr() {
            return self.scale(q);
        }
        if let Some(q) = self.rational_repr() {
            return other.scale(q);
        }
        let (a, b) = self.aligned(other);
        let mut dense = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    dense[i + j] += x * y;
                }
            }
        }
        Self::from_dense(a.order, dense)
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if let Some(q) = self.rational_repr() {
            return Ok(Self::from_rational(q.recip()));
        }
        let m = self.order;
        let phi: Vec<Rational> = cyclotomic_polynomial(m)
            .iter()
            .map(|&c| Rational::from_integer(c.into()))
            .collect();
        let s = inverse_mod(&self.coeffs, &phi);
        Ok(Self::from_dense(m, s))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ExactError> {
        Ok(self.mul_ref(&other.inv()?))
    }

    /// Integer power; negative exponents invert.
    pub fn pow_i64(&self, e: i64) -> Result<Self, ExactError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(crate::scalar::Scalar::pow_u32(
            &base,
            e.unsigned_abs() as u32,
        ))
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_deg(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Inverse of `a` modulo the irreducible `modulus` by the extended Euclidean
/// algorithm over Q.
fn inverse_mod(a: &[Rational], modulus: &[Rational]) -> Vec<Rational> {
    // Invariant: s_k·a ≡ r_k (mod modulus).
    let mut r0 = modulus.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    let mut s0: Vec<Rational> = vec![Rational::zero()];
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while let Some(d1) = poly_deg(&r1) {
        if d1 == 0 {
            let c = r1[0].recip();
            return s1.into_iter().map(|x| x * &c).collect();
        }
        // r0 = q·r1 + r
        let mut rem = r0.clone();
        let d0 = poly_deg(&rem).unwrap_or(0);
        let mut quot = vec![Rational::zero(); d0.saturating_sub(d1) + 1];
        let lead = r1[d1].clone();
        while let Some(dr) = poly_deg(&rem) {
            if dr < d1 {
                break;
            }
            let c = &rem[dr] / &lead;
            for j in 0..=d1 {
                let t = &c * &r1[j];
                rem[dr - d1 + j] -= t;
            }
            quot[dr - d1] = c;
        }
        trim(&mut rem);
        // s = s0 − q·s1
        let mut s = vec![Rational::zero(); (quot.len() + s1.len()).max(s0.len())];
        for (k, c) in s0.iter().enumerate() {
            s[k] += c;
        }
        for (i, q) in quot.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for (j, t) in s1.iter().enumerate() {
                s[i + j] -= q * t;
            }
        }
        trim(&mut s);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s);
    }
    unreachable!("element is nonzero in a field, so the gcd is a nonzero constant")
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let l = (self.order as u64).lcm(&(other.order as u64)) as u32;
        self.embed_unchecked(l).coeffs == other.embed_unchecked(l).coeffs
    }
}

impl Eq for Cyclotomic {}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

/// Panics on a zero divisor; use [`Cyclotomic::div`] for the checked form.
impl Div for Cyclotomic {
    type Output = Cyclotomic;
    fn div(self, rhs: Self) -> Self {
        Cyclotomic::try_div(&self, &rhs).expect("cyclotomic division by zero")
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_i64(n)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders as a sum of `c*zeta(m)^k` terms, e.g. `1 + 2*zeta(3)`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_negative() {
                (true, -c.clone())
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let zeta = match k {
                0 => String::new(),
                1 => format!("zeta({})", self.order),
                _ => format!("zeta({})^{}", self.order, k),
            };
            if zeta.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{zeta}")?;
            } else {
                write!(f, "{mag}*{zeta}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn cyc(m: u32, c: &[i64]) -> Cyclotomic {
        Cyclotomic::new(m, c.iter().map(|&x| int(x)).collect()).unwrap()
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = cyc(4, &[0, 1]);
        assert_eq!(i.mul_ref(&i), Cyclotomic::from_i64(-1));
    }

    #[test]
    fn one_plus_two_zeta3_squared_is_minus_three() {
        let s = cyc(3, &[1, 2]);
        assert_eq!(s.mul_ref(&s), Cyclotomic::from_i64(-3));
        assert_eq!(s, Cyclotomic::sqrt_m3());
    }

    #[test]
    fn zeta8_plus_inverse_squared_is_two() {
        let z = cyc(8, &[0, 1, 0, 0]);
        let z7 = z.pow_i64(7).unwrap();
        let s = z.add_ref(&z7);
        assert_eq!(s.mul_ref(&s), Cyclotomic::from_i64(2));
    }

    #[test]
    fn sqrt5_squares_to_five() {
        let s = Cyclotomic::sqrt5();
        assert_eq!(s.mul_ref(&s), Cyclotomic::from_i64(5));
    }

    #[test]
    fn mixed_order_product_lands_in_lcm() {
        let p = Cyclotomic::i().mul_ref(&Cyclotomic::zeta(3).unwrap());
        assert_eq!(p.order(), 12);
        assert_eq!(p, Cyclotomic::zeta_pow(12, 7).unwrap());
    }

    #[test]
    fn self_division_is_one() {
        let a = cyc(5, &[3, -1, 0, 2]);
        assert_eq!(a.try_div(&a).unwrap(), Cyclotomic::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let a = cyc(5, &[3, -1, 0, 2]);
        assert_eq!(
            a.try_div(&Cyclotomic::zero()),
            Err(ExactError::DivisionByZero)
        );
    }

    #[test]
    fn phi5_relation_sums_to_zero() {
        // 1 + ζ + ζ² + ζ³ + ζ⁴ as a dense vector longer than φ(5).
        let s = cyc(5, &[1, 1, 1, 1, 1]);
        assert!(s.is_zero());
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(
            Cyclotomic::i().embed(8).unwrap().coeffs(),
            Cyclotomic::zeta_pow(8, 2).unwrap().coeffs()
        );
        let five = Cyclotomic::from_i64(5).embed(24).unwrap();
        assert_eq!(five, Cyclotomic::from_i64(5));
        assert_eq!(
            Cyclotomic::zeta(3).unwrap().embed(12).unwrap().coeffs(),
            Cyclotomic::zeta_pow(12, 4).unwrap().coeffs()
        );
        assert_eq!(
            Cyclotomic::zeta(3).unwrap().embed(8),
            Err(ExactError::IncompatibleOrder { from: 3, to: 8 })
        );
    }

    #[test]
    fn order_bound_is_enforced_at_construction() {
        assert!(matches!(
            Cyclotomic::zeta(121),
            Err(ExactError::OrderBound { order: 121, .. })
        ));
        assert_eq!(
            Cyclotomic::new(0, vec![]).unwrap_err(),
            ExactError::ZeroOrder
        );
    }

    #[test]
    fn rational_values_are_detected() {
        let z = Cyclotomic::zeta(3).unwrap();
        let s = z.add_ref(&z.mul_ref(&z));
        assert_eq!(s.to_rational(), Some(int(-1)));
        assert_eq!(
            Cyclotomic::from_rational(rat(1, 2)).to_rational(),
            Some(rat(1, 2))
        );
        assert_eq!(Cyclotomic::i().to_rational(), None);
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(Cyclotomic::sqrt_m3().to_string(), "1 + 2*zeta(3)");
        assert_eq!(Cyclotomic::zero().to_string(), "0");
        assert_eq!(cyc(8, &[0, -1, 0, 3]).to_string(), "-zeta(8) + 3*zeta(8)^3");
    }
}
