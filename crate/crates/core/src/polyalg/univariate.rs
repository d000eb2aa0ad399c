//! Dense univariate polynomials over an exact field, just enough for
//! squarefree decomposition.

use num_traits::Zero;

use crate::scalar::ExactScalar;

/// Coefficients, constant term first, no trailing zeros (zero polynomial = empty).
#[derive(Debug, Clone, PartialEq)]
pub struct UniPoly<S> {
    coeffs: Vec<S>,
}

impl<S: ExactScalar> UniPoly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul_ref(&S::from_integer(k as i64)))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => {
                let l = l.clone();
                UniPoly::new(
                    self.coeffs
                        .iter()
                        .map(|c| c.checked_div(&l).expect("nonzero lead"))
                        .collect(),
                )
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|k| {
                    let a = self.coeffs.get(k).cloned().unwrap_or_else(S::zero);
                    match other.coeffs.get(k) {
                        Some(b) => a.sub_ref(b),
                        None => a,
                    }
                })
                .collect(),
        )
    }

    /// Pseudo-remainder: lc(b)^(deg a − deg b + 1)·a mod b, computed without
    /// any division.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-remainder by zero polynomial");
        let lb = b.coeffs[db].clone();
        let mut r = self.coeffs.clone();
        while let Some(dr) = UniPoly::new(r.clone()).degree() {
            if dr < db {
                break;
            }
            let lr = r[dr].clone();
            // r ← lb·r − lr·x^(dr−db)·b
            for c in r.iter_mut() {
                *c = c.mul_ref(&lb);
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                let t = lr.mul_ref(bj);
                r[dr - db + j] = r[dr - db + j].sub_ref(&t);
            }
            r.truncate(dr);
        }
        UniPoly::new(r)
    }

    /// Monic gcd by a pseudo-remainder sequence, normalizing each remainder to
    /// be monic before it is reused.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.monic(), other.monic())
        } else {
            (other.monic(), self.monic())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).monic();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Exact quotient; panics if `b` does not divide `self`.
    pub fn exact_div(&self, b: &Self) -> Self {
        let db = b.degree().expect("division by zero polynomial");
        let lb = b.coeffs[db].clone();
        let Some(da) = self.degree() else {
            return self.clone();
        };
        if da < db {
            assert!(self.is_zero(), "inexact polynomial division");
            return UniPoly::new(Vec::new());
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![S::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let c = r[k + db].checked_div(&lb).expect("nonzero lead");
            for (j, bj) in b.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].sub_ref(&c.mul_ref(bj));
            }
            q[k] = c;
        }
        assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
        UniPoly::new(q)
    }

    /// Yun's squarefree decomposition: entry j−1 is the number of distinct
    /// roots of multiplicity exactly j.
    pub fn squarefree_profile(&self) -> Vec<usize> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let d1 = self.derivative();
        let a0 = self.gcd(&d1);
        let mut b = self.exact_div(&a0);
        let mut c = d1.exact_div(&a0);
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        loop {
            let a = b.gcd(&d);
            out.push(a.degree().unwrap_or(0));
            b = b.exact_div(&a);
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.exact_div(&a);
            d = c.sub(&b.derivative());
        }
        out
    }
}
