use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::univariate::UniPoly;
use super::{MultiPoly, PolyError};
use crate::scalar::{ExactScalar, Scalar};

/// 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat2<S> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

impl<S: Scalar> Mat2<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(S::one(), S::zero(), S::zero(), S::one())
    }

    pub fn det(&self) -> S {
        self.a.mul_ref(&self.d).sub_ref(&self.b.mul_ref(&self.c))
    }

    pub fn mul(&self, o: &Self) -> Self {
        Mat2 {
            a: self.a.mul_ref(&o.a).add_ref(&self.b.mul_ref(&o.c)),
            b: self.a.mul_ref(&o.b).add_ref(&self.b.mul_ref(&o.d)),
            c: self.c.mul_ref(&o.a).add_ref(&self.d.mul_ref(&o.c)),
            d: self.c.mul_ref(&o.b).add_ref(&self.d.mul_ref(&o.d)),
        }
    }

    pub fn scale(&self, k: &S) -> Self {
        Mat2 {
            a: self.a.mul_ref(k),
            b: self.b.mul_ref(k),
            c: self.c.mul_ref(k),
            d: self.d.mul_ref(k),
        }
    }

    /// M·(u, v)ᵀ.
    pub fn apply(&self, u: &S, v: &S) -> (S, S) {
        (
            self.a.mul_ref(u).add_ref(&self.b.mul_ref(v)),
            self.c.mul_ref(u).add_ref(&self.d.mul_ref(v)),
        )
    }
}

/// f = a_0 x^d + a_1 x^{d−1} y + … + a_d y^d, plain (non-binomial) coefficients.
#[derive(Clone, PartialEq)]
pub struct BinaryForm<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> BinaryForm<S> {
    /// `coeffs[i]` multiplies x^{d−i} y^i; d = coeffs.len() − 1.
    pub fn new(coeffs: Vec<S>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a binary form needs at least one coefficient"
        );
        BinaryForm { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm {
            coeffs: vec![S::zero(); degree + 1],
        }
    }

    pub fn constant(c: S) -> Self {
        BinaryForm { coeffs: vec![c] }
    }

    pub fn x() -> Self {
        BinaryForm::new(vec![S::one(), S::zero()])
    }

    pub fn y() -> Self {
        BinaryForm::new(vec![S::zero(), S::one()])
    }

    /// c·x^i·y^j.
    pub fn monomial(c: S, i: usize, j: usize) -> Self {
        let mut f = Self::zero(i + j);
        f.coeffs[j] = c;
        f
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &S {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(
            self.degree(),
            o.degree(),
            "adding forms of different degree"
        );
        BinaryForm::new(
            self.coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c.clone())
    }

    pub fn scale(&self, k: &S) -> Self {
        self.map(|c| c.mul_ref(k))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> BinaryForm<T> {
        BinaryForm::new(self.coeffs.iter().map(f).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = vec![S::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        BinaryForm { coeffs: out }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = BinaryForm::constant(S::one());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn partial_x(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return BinaryForm::zero(0);
        }
        BinaryForm::new(
            (0..d)
                .map(|i| self.coeffs[i].mul_ref(&S::from_integer((d - i) as i64)))
                .collect(),
        )
    }

    pub fn partial_y(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return BinaryForm::zero(0);
        }
        BinaryForm::new(
            (0..d)
                .map(|i| self.coeffs[i + 1].mul_ref(&S::from_integer((i + 1) as i64)))
                .collect(),
        )
    }

    pub fn evaluate(&self, u: &S, v: &S) -> S {
        // Σ a_i u^{d−i} v^i
        let d = self.degree();
        let mut upow = vec![S::one(); d + 1];
        let mut vpow = vec![S::one(); d + 1];
        for k in 1..=d {
            upow[k] = upow[k - 1].mul_ref(u);
            vpow[k] = vpow[k - 1].mul_ref(v);
        }
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(S::zero(), |acc, (i, c)| {
                acc.add_ref(&c.mul_ref(&upow[d - i]).mul_ref(&vpow[i]))
            })
    }

    /// f(ax + by, cx + dy) for M = [[a, b], [c, d]].
    pub fn substitute_linear(&self, m: &Mat2<S>) -> Self {
        let l1 = BinaryForm::new(vec![m.a.clone(), m.b.clone()]);
        let l2 = BinaryForm::new(vec![m.c.clone(), m.d.clone()]);
        // g_k = g_{k-1}·l1 + c_k·l2^k, so g_d = Σ c_k l1^{d-k} l2^k.
        let mut acc = BinaryForm::constant(self.coeffs[0].clone());
        let mut l2k = BinaryForm::constant(S::one());
        for c in &self.coeffs[1..] {
            l2k = l2k.mul(&l2);
            acc = acc.mul(&l1);
            if !c.is_zero() {
                acc = acc.add(&l2k.scale(c));
            }
        }
        acc
    }

    pub fn to_poly(&self, vars: std::sync::Arc<[String]>) -> MultiPoly<S> {
        assert_eq!(vars.len(), 2);
        let d = self.degree() as u32;
        MultiPoly::from_terms(
            vars,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (vec![d - i as u32, i as u32], c.clone())),
        )
    }

    /// Reads a homogeneous polynomial in two variables (x first).
    pub fn from_poly(p: &MultiPoly<S>) -> Result<Self, PolyError> {
        if p.nvars() != 2 {
            return Err(PolyError::NotBinary(p.nvars()));
        }
        let degree = match p.terms().next() {
            None => return Ok(BinaryForm::zero(0)),
            Some((e, _)) => (e[0] + e[1]) as usize,
        };
        let mut f = BinaryForm::zero(degree);
        for (e, c) in p.terms() {
            if (e[0] + e[1]) as usize != degree {
                return Err(PolyError::NotHomogeneous);
            }
            f.coeffs[e[1] as usize] = c.clone();
        }
        Ok(f)
    }
}

impl<S: ExactScalar> BinaryForm<S> {
    /// `Some(λ)` with `other = λ·self`, λ ≠ 0.
    pub fn proportionality(&self, other: &Self) -> Option<S> {
        if self.degree() != other.degree() {
            return None;
        }
        let k = self.coeffs.iter().position(|c| !c.is_zero())?;
        let lambda = other.coeffs[k].checked_div(&self.coeffs[k])?;
        if lambda.is_zero() {
            return None;
        }
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| a.mul_ref(&lambda) == *b)
            .then_some(lambda)
    }

    pub fn projectively_eq(&self, other: &Self) -> bool {
        self.proportionality(other).is_some()
    }

    /// Root multiplicities over the algebraic closure, largest first, including
    /// the root (1:0) detected from leading zero coefficients.
    pub fn multiplicity_profile(&self) -> Result<Vec<u32>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroForm);
        }
        let d = self.degree();
        // y^k | f  ⇔  a_0 = … = a_{k−1} = 0; that root sits at (1:0).
        let at_infinity = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        let mut out = Vec::new();
        if at_infinity > 0 {
            out.push(at_infinity as u32);
        }
        // Dehomogenize at y = 1: g(t) = Σ a_i t^{d−i}, constant term first.
        let g = UniPoly::new((0..=d).rev().map(|i| self.coeffs[i].clone()).collect());
        for (j, count) in g.squarefree_profile().into_iter().enumerate() {
            out.extend(std::iter::repeat_n(j as u32 + 1, count));
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(out)
    }

    pub fn distinct_roots(&self) -> Result<usize, PolyError> {
        Ok(self.multiplicity_profile()?.len())
    }
}

impl<S: Scalar> fmt::Debug for BinaryForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryForm{:?}", self.coeffs)
    }
}

/// Renders as `c*x^i*y^j + …`, dropping zero terms.
impl<S: Scalar + fmt::Display> fmt::Display for BinaryForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut mono = Vec::new();
            match d - i {
                0 => {}
                1 => mono.push("x".to_string()),
                k => mono.push(format!("x^{k}")),
            }
            match i {
                0 => {}
                1 => mono.push("y".to_string()),
                k => mono.push(format!("y^{k}")),
            }
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<S: Scalar + fmt::Display> Serialize for BinaryForm<S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        serializer.serialize_str(&self.to_string())
    }
}
