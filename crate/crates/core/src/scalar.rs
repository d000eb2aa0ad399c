//! Coefficient abstraction shared by the polynomial and form layers.
//!
//! Everything above `exactnum` is written against [`Scalar`], so the same
//! polynomial code runs over `Rational`, over cyclotomic fields, and over
//! `f64` for quick numeric sanity checks. Operations whose correctness depends
//! on exact zero testing (gcd chains, proportionality) additionally require
//! [`ExactScalar`].

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exactnum::{Cyclotomic, Rational};

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_integer(n: i64) -> Self;

    fn from_rational(q: &Rational) -> Self;

    /// `self / other`, or `None` when `other` is zero.
    fn checked_div(&self, other: &Self) -> Option<Self>;

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn pow_u32(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

/// Marker for scalars whose equality and zero test are exact.
pub trait ExactScalar: Scalar {}

impl Scalar for Rational {
    fn from_integer(n: i64) -> Self {
        Rational::from_integer(n.into())
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            None
        } else {
            Some(self / other)
        }
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl ExactScalar for Rational {}

impl Scalar for Cyclotomic {
    fn from_integer(n: i64) -> Self {
        Cyclotomic::from_rational(Rational::from_integer(n.into()))
    }

    fn from_rational(q: &Rational) -> Self {
        Cyclotomic::from_rational(q.clone())
    }

    fn checked_div(&self, other: &Self) -> Option<Self> {
        self.try_div(other).ok()
    }

    fn add_ref(&self, other: &Self) -> Self {
        Cyclotomic::add_ref(self, other)
    }

    fn sub_ref(&self, other: &Self) -> Self {
        Cyclotomic::sub_ref(self, other)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        Cyclotomic::mul_ref(self, other)
    }
}

impl ExactScalar for Cyclotomic {}

impl Scalar for f64 {
    fn from_integer(n: i64) -> Self {
        n as f64
    }

    fn from_rational(q: &Rational) -> Self {
        use num_traits::ToPrimitive;
        q.to_f64().unwrap_or(f64::NAN)
    }

    fn checked_div(&self, other: &Self) -> Option<Self> {
        if *other == 0.0 {
            None
        } else {
            Some(self / other)
        }
    }
}
