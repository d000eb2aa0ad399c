use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use serde::{Serialize, Serializer};

use super::SymmetryError;
use crate::exactnum::{rat, Cyclotomic, Rational};
use crate::{Form, Matrix};

/// Closure enumeration gives up past this many elements.
pub const ELEMENT_BOUND: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupSpec {
    C(u32),
    D(u32),
    T,
    O,
    I,
}

impl GroupSpec {
    pub fn order(&self) -> u64 {
        match *self {
            GroupSpec::C(n) => 2 * n as u64,
            GroupSpec::D(n) => 4 * n as u64,
            GroupSpec::T => 24,
            GroupSpec::O => 48,
            GroupSpec::I => 120,
        }
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self, GroupSpec::C(_))
    }

    /// Smallest m with all generator entries in Q(ζ_m).
    pub fn field_order(&self) -> u32 {
        match *self {
            GroupSpec::C(n) => 2 * n,
            GroupSpec::D(n) => (2 * n).lcm(&4),
            GroupSpec::T => 4,
            GroupSpec::O => 8,
            GroupSpec::I => 5,
        }
    }

    fn validate(&self) -> Result<(), SymmetryError> {
        match self {
            GroupSpec::C(0) | GroupSpec::D(0) => Err(SymmetryError::InvalidGroup(self.to_string())),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::C(n) => write!(f, "C{n}"),
            GroupSpec::D(n) => write!(f, "D{n}"),
            GroupSpec::T => write!(f, "T"),
            GroupSpec::O => write!(f, "O"),
            GroupSpec::I => write!(f, "I"),
        }
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for GroupSpec {
    type Err = SymmetryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || SymmetryError::InvalidGroup(s.to_string());
        let spec = match t {
            "T" => GroupSpec::T,
            "O" => GroupSpec::O,
            "I" => GroupSpec::I,
            _ if t.len() > 1 => {
                let n: u32 = t[1..].trim_start_matches('_').parse().map_err(|_| bad())?;
                match &t[..1] {
                    "C" => GroupSpec::C(n),
                    "D" => GroupSpec::D(n),
                    _ => return Err(bad()),
                }
            }
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// A 2×2 matrix of determinant exactly 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SL2Matrix(Matrix);

impl SL2Matrix {
    pub fn new(m: Matrix) -> Result<Self, SymmetryError> {
        if m.det() != Cyclotomic::from_i64(1) {
            return Err(SymmetryError::NotUnimodular);
        }
        Ok(SL2Matrix(m))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn mul(&self, o: &Self) -> Self {
        SL2Matrix(self.0.mul(&o.0))
    }

    pub fn act(&self, f: &Form) -> Form {
        f.substitute_linear(&self.0)
    }

    /// Coefficient vectors of all entries inside Q(ζ_m): a hashable key.
    fn key(&self, m: u32) -> Result<Vec<Vec<Rational>>, SymmetryError> {
        [&self.0.a, &self.0.b, &self.0.c, &self.0.d]
            .iter()
            .map(|e| Ok(e.embed(m)?.coeffs().to_vec()))
            .collect()
    }
}

impl fmt::Display for SL2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.0.a, self.0.b, self.0.c, self.0.d
        )
    }
}

impl Serialize for SL2Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn z(m: u32, k: i64) -> Result<Cyclotomic, SymmetryError> {
    Ok(Cyclotomic::zeta_pow(m, k)?)
}

fn cy(n: i64) -> Cyclotomic {
    Cyclotomic::from_i64(n)
}

fn sl2(
    a: Cyclotomic,
    b: Cyclotomic,
    c: Cyclotomic,
    d: Cyclotomic,
) -> Result<SL2Matrix, SymmetryError> {
    SL2Matrix::new(Matrix::new(a, b, c, d))
}

fn diag_eps(m: u32) -> Result<SL2Matrix, SymmetryError> {
    sl2(z(m, 1)?, cy(0), cy(0), z(m, -1)?)
}

fn antidiag_i() -> Result<SL2Matrix, SymmetryError> {
    sl2(cy(0), Cyclotomic::i(), Cyclotomic::i(), cy(0))
}

fn tetra_generators() -> Result<Vec<SL2Matrix>, SymmetryError> {
    let i = Cyclotomic::i();
    let half = Cyclotomic::from_rational(rat(1, 2));
    let one = cy(1);
    let third = Matrix::new(
        one.add_ref(&i),
        i.sub_ref(&one),
        one.add_ref(&i),
        one.sub_ref(&i),
    )
    .scale(&half);
    Ok(vec![
        sl2(i.clone(), cy(0), cy(0), i.neg_ref())?,
        antidiag_i()?,
        SL2Matrix::new(third)?,
    ])
}

/// The generators of the standard copy of the group, entries exact.
pub fn group_generators(spec: GroupSpec) -> Result<Vec<SL2Matrix>, SymmetryError> {
    spec.validate()?;
    match spec {
        GroupSpec::C(n) => Ok(vec![diag_eps(2 * n)?]),
        GroupSpec::D(n) => Ok(vec![diag_eps(2 * n)?, antidiag_i()?]),
        GroupSpec::T => tetra_generators(),
        GroupSpec::O => {
            let mut g = tetra_generators()?;
            let i = Cyclotomic::i();
            let inv_sqrt2 = Cyclotomic::sqrt2().inv()?;
            let m =
                Matrix::new(cy(1).add_ref(&i), cy(0), cy(0), cy(1).sub_ref(&i)).scale(&inv_sqrt2);
            g.push(SL2Matrix::new(m)?);
            Ok(g)
        }
        GroupSpec::I => {
            let e = |k| z(5, k);
            let inv_sqrt5 = Cyclotomic::sqrt5().inv()?;
            let p = e(1)?.sub_ref(&e(4)?);
            let q = e(3)?.sub_ref(&e(2)?);
            let m = Matrix::new(p.clone(), q.clone(), q, p.neg_ref()).scale(&inv_sqrt5);
            Ok(vec![sl2(e(3)?, cy(0), cy(0), e(2)?)?, SL2Matrix::new(m)?])
        }
    }
}

type ElementCache = Mutex<HashMap<GroupSpec, Arc<Vec<SL2Matrix>>>>;

fn cache() -> &'static ElementCache {
    static CACHE: OnceLock<ElementCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All elements, by closure of the generators under multiplication.
pub fn group_elements(spec: GroupSpec) -> Result<Arc<Vec<SL2Matrix>>, SymmetryError> {
    if let Some(hit) = cache().lock().expect("cache poisoned").get(&spec) {
        return Ok(hit.clone());
    }
    let gens = group_generators(spec)?;
    let m = spec.field_order();
    let identity = SL2Matrix(Matrix::identity());
    let mut seen: HashSet<Vec<Vec<Rational>>> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.key(m)?);
    queue.push_back(identity);
    while let Some(g) = queue.pop_front() {
        for h in &gens {
            let p = g.mul(h);
            if seen.insert(p.key(m)?) {
                if seen.len() > ELEMENT_BOUND {
                    return Err(SymmetryError::SizeBound {
                        group: spec,
                        limit: ELEMENT_BOUND,
                    });
                }
                queue.push_back(p);
            }
        }
        out.push(g);
    }
    let out = Arc::new(out);
    cache()
        .lock()
        .expect("cache poisoned")
        .insert(spec, out.clone());
    Ok(out)
}

/// Whether the standard copy of `a` lies inside the standard copy of `b`.
pub fn is_subgroup(a: GroupSpec, b: GroupSpec) -> Result<bool, SymmetryError> {
    if !b.order().is_multiple_of(a.order()) {
        return Ok(false);
    }
    let elems = group_elements(b)?;
    Ok(group_generators(a)?
        .iter()
        .all(|g| elems.iter().any(|h| h == g)))
}
