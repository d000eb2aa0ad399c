use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use super::LocusError;
use crate::exactnum::Cyclotomic;
use crate::polyalg::WeightedGrading;

/// A point of a weighted projective space, compared up to
/// (x_i) ~ (t^{e_i} x_i).
#[derive(Debug, Clone)]
pub struct PointW {
    coords: Vec<Cyclotomic>,
    weights: WeightedGrading,
}

impl PointW {
    pub fn new(coords: Vec<Cyclotomic>, weights: WeightedGrading) -> Result<Self, LocusError> {
        if coords.len() != weights.len() {
            return Err(LocusError::WeightMismatch {
                expected: weights.len(),
                found: coords.len(),
            });
        }
        if coords.iter().all(Cyclotomic::is_zero) {
            return Err(LocusError::ZeroPoint);
        }
        Ok(PointW { coords, weights })
    }

    pub fn from_ints(coords: &[i64], weights: &[u64]) -> Result<Self, LocusError> {
        let w = WeightedGrading::new(weights.to_vec())?;
        PointW::new(coords.iter().map(|&c| Cyclotomic::from_i64(c)).collect(), w)
    }

    /// The coordinate point with a 1 in position `k`.
    pub fn coordinate(k: usize, weights: &WeightedGrading) -> Result<Self, LocusError> {
        let coords = (0..weights.len())
            .map(|j| Cyclotomic::from_i64(i64::from(j == k)))
            .collect();
        PointW::new(coords, weights.clone())
    }

    pub fn coords(&self) -> &[Cyclotomic] {
        &self.coords
    }

    pub fn weights(&self) -> &WeightedGrading {
        &self.weights
    }

    /// (t^{e_i} x_i); `t` must be nonzero.
    pub fn rescale(&self, t: &Cyclotomic) -> Result<Self, LocusError> {
        if t.is_zero() {
            return Err(LocusError::ZeroPoint);
        }
        let coords = self
            .coords
            .iter()
            .zip(self.weights.weights())
            .map(|(x, &e)| x.mul_ref(&t.pow_i64(e as i64).expect("nonzero t")))
            .collect();
        Ok(PointW {
            coords,
            weights: self.weights.clone(),
        })
    }
}

/// Same support, and ρ_i^{e_j/g} = ρ_j^{e_i/g} for ρ = y/x on the support;
/// these pairwise relations generate all multiplicative relations among
/// the t^{e_i}.
impl PartialEq for PointW {
    fn eq(&self, other: &Self) -> bool {
        if self.weights != other.weights {
            return false;
        }
        let mut ratios = Vec::new();
        for ((x, y), &e) in self
            .coords
            .iter()
            .zip(&other.coords)
            .zip(self.weights.weights())
        {
            match (x.is_zero(), y.is_zero()) {
                (true, true) => {}
                (false, false) => ratios.push((y.try_div(x).expect("nonzero"), e)),
                _ => return false,
            }
        }
        ratios.iter().enumerate().all(|(a, (ra, ea))| {
            ratios[a + 1..].iter().all(|(rb, eb)| {
                let g = ea.gcd(eb);
                let lhs = ra.pow_i64((eb / g) as i64).expect("nonzero");
                let rhs = rb.pow_i64((ea / g) as i64).expect("nonzero");
                lhs == rhs
            })
        })
    }
}

impl fmt::Display for PointW {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(":"))
    }
}

impl Serialize for PointW {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
