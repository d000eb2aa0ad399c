use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::PolyError;
use crate::scalar::Scalar;

/// Positive integer weights, one per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct WeightedGrading {
    weights: Vec<u64>,
}

impl WeightedGrading {
    pub fn new(weights: Vec<u64>) -> Result<Self, PolyError> {
        if weights.contains(&0) {
            return Err(PolyError::NonPositiveWeight);
        }
        Ok(WeightedGrading { weights })
    }

    pub fn standard(n: usize) -> Self {
        WeightedGrading {
            weights: vec![1; n],
        }
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn degree_of(&self, exps: &[u32]) -> u64 {
        exps.iter()
            .zip(&self.weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }
}

/// Result of [`MultiPoly::weighted_degree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WeightedDegree {
    Homogeneous(u64),
    Inhomogeneous,
    /// The zero polynomial is homogeneous of every degree.
    Zero,
}

impl WeightedDegree {
    pub fn homogeneous(self) -> Option<u64> {
        match self {
            WeightedDegree::Homogeneous(d) => Some(d),
            _ => None,
        }
    }
}

/// Sparse polynomial: exponent vector → nonzero coefficient.
#[derive(Clone, PartialEq)]
pub struct MultiPoly<S> {
    vars: Arc<[String]>,
    terms: BTreeMap<Vec<u32>, S>,
}

impl<S: Scalar> MultiPoly<S> {
    pub fn zero(vars: Arc<[String]>) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Arc<[String]>, c: S) -> Self {
        let n = vars.len();
        Self::monomial(vars, vec![0; n], c)
    }

    pub fn monomial(vars: Arc<[String]>, exps: Vec<u32>, c: S) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPoly { vars, terms }
    }

    pub fn var(vars: Arc<[String]>, index: usize) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[index] = 1;
        Self::monomial(vars, exps, S::one())
    }

    /// Builds from (exponents, coefficient) pairs, merging repeats and dropping zeros.
    pub fn from_terms<I>(vars: Arc<[String]>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, S)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &S)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> S {
        self.terms.get(exps).cloned().unwrap_or_else(S::zero)
    }

    pub fn constant_term(&self) -> S {
        self.coeff(&vec![0; self.nvars()])
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: S) {
        assert_eq!(exps.len(), self.vars.len(), "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                let sum = existing.add_ref(&c);
                if sum.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    fn same_vars(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomials over different variable lists: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c.clone())
    }

    pub fn scale(&self, k: &S) -> Self {
        if k.is_zero() {
            return Self::zero(self.vars.clone());
        }
        self.map_coeffs(|c| c.mul_ref(k))
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> MultiPoly<T> {
        MultiPoly::from_terms(
            self.vars.clone(),
            self.terms.iter().map(|(e, c)| (e.clone(), f(c))),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_vars(other);
        let mut out = Self::zero(self.vars.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.mul_ref(cb));
            }
        }
        out
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(self.vars.clone(), S::one());
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

    /// Common weighted degree of all terms.
    pub fn weighted_degree(&self, w: &WeightedGrading) -> Result<WeightedDegree, PolyError> {
        if w.len() != self.nvars() {
            return Err(PolyError::VariableMismatch {
                expected: self.nvars(),
                found: w.len(),
            });
        }
        let mut degree = None;
        for e in self.terms.keys() {
            let d = w.degree_of(e);
            match degree {
                None => degree = Some(d),
                Some(d0) if d0 != d => return Ok(WeightedDegree::Inhomogeneous),
                _ => {}
            }
        }
        Ok(degree.map_or(WeightedDegree::Zero, WeightedDegree::Homogeneous))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.keys().map(|e| e[index]).max().unwrap_or(0)
    }

    pub fn involves(&self, index: usize) -> bool {
        self.terms.keys().any(|e| e[index] > 0)
    }

    pub fn partial(&self, index: usize) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            if e[index] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[index] -= 1;
            out.add_term(e2, c.mul_ref(&S::from_integer(e[index] as i64)));
        }
        out
    }

    /// All first partial derivatives, in variable order.
    pub fn partials(&self) -> Vec<Self> {
        (0..self.nvars()).map(|i| self.partial(i)).collect()
    }

    pub fn evaluate(&self, point: &[S]) -> Result<S, PolyError> {
        if point.len() != self.nvars() {
            return Err(PolyError::Arity {
                expected: self.nvars(),
                found: point.len(),
            });
        }
        let mut powers: Vec<Vec<S>> = Vec::with_capacity(point.len());
        for (i, x) in point.iter().enumerate() {
            let top = self.degree_in(i) as usize;
            let mut row = Vec::with_capacity(top + 1);
            row.push(S::one());
            for k in 1..=top {
                let next = row[k - 1].mul_ref(x);
                row.push(next);
            }
            powers.push(row);
        }
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t.mul_ref(&powers[i][k as usize]);
                }
            }
            acc = acc.add_ref(&t);
        }
        Ok(acc)
    }

    /// Substitutes `images[i]` for variable i; the images share one variable list.
    pub fn compose(&self, images: &[MultiPoly<S>]) -> Result<MultiPoly<S>, PolyError> {
        if images.len() != self.nvars() {
            return Err(PolyError::Arity {
                expected: self.nvars(),
                found: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.vars.clone(),
            None => {
                return Ok(MultiPoly::constant(
                    Arc::from(Vec::new()),
                    self.constant_term(),
                ))
            }
        };
        let mut cache: Vec<Vec<MultiPoly<S>>> = images
            .iter()
            .map(|p| vec![MultiPoly::constant(target.clone(), S::one()), p.clone()])
            .collect();
        let mut out = MultiPoly::zero(target.clone());
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(target.clone(), c.clone());
            for (i, &k) in e.iter().enumerate() {
                while cache[i].len() <= k as usize {
                    let next = cache[i].last().expect("nonempty").mul(&images[i]);
                    cache[i].push(next);
                }
                if k > 0 {
                    t = t.mul(&cache[i][k as usize]);
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Same terms over a relabelled (or reordered) variable list.
    ///
    /// `mapping[i]` is the index in `vars` receiving old variable i.
    pub fn relabel(&self, vars: Arc<[String]>, mapping: &[usize]) -> Self {
        assert_eq!(mapping.len(), self.nvars());
        let n = vars.len();
        MultiPoly::from_terms(
            vars,
            self.terms.iter().map(|(e, c)| {
                let mut e2 = vec![0; n];
                for (i, &k) in e.iter().enumerate() {
                    e2[mapping[i]] += k;
                }
                (e2, c.clone())
            }),
        )
    }

    /// Extends to a larger variable list that starts with the current variables.
    pub fn extend_vars(&self, vars: Arc<[String]>) -> Self {
        let mapping: Vec<usize> = (0..self.nvars()).collect();
        self.relabel(vars, &mapping)
    }

    /// Leading coefficient-free comparison: `Some(λ)` with `other = λ·self`.
    pub fn proportionality(&self, other: &Self) -> Option<S> {
        let (e, c) = self.terms.iter().next()?;
        let lambda = other.coeff(e).checked_div(c)?;
        if lambda.is_zero() {
            return None;
        }
        (self.scale(&lambda) == *other).then_some(lambda)
    }
}

impl<S: Scalar> fmt::Debug for MultiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}](", self.vars.join(","))?;
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c:?})*{e:?}")?;
        }
        write!(f, ")")
    }
}

/// Human-readable rendering, `(c)*x^2*y` per term.
impl<S: Scalar + fmt::Display> fmt::Display for MultiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| {
                    if k == 1 {
                        self.vars[j].clone()
                    } else {
                        format!("{}^{}", self.vars[j], k)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

pub fn var_list(names: &[&str]) -> Arc<[String]> {
    names
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .into()
}
