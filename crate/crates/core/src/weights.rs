//! Dominant weights of the classical compact Lie algebras.
//!
//! Weights are written in the standard `L_i` basis and stored with every
//! coordinate doubled, so spin weights such as `(1/2, 1/2, -1/2)` become
//! `[1, 1, -1]` and all arithmetic stays in the integers. Family `A` of rank
//! `n` denotes `u(n)` with `n` coordinates (not reduced to `sl(n)`), which
//! keeps determinant characters `(k, ..., k)` expressible.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Limits;

/// Weight multiplicities keyed by doubled coordinates.
pub type WeightMap = BTreeMap<Vec<i64>, u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraType {
    family: Family,
    rank: usize,
}

impl AlgebraType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min = if family == Family::D { 2 } else { 1 };
        if rank < min {
            return Err(Error::InvalidAlgebra(format!("{family:?}{rank}")));
        }
        Ok(AlgebraType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn allows_spin(&self) -> bool {
        matches!(self.family, Family::B | Family::D)
    }

    /// Positive roots in the `L_i` basis. Roots are integral, so the same
    /// vectors serve for doubled weight coordinates.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let unit = |i: usize, a: i64, j: Option<(usize, i64)>| {
            let mut v = vec![0; n];
            v[i] = a;
            if let Some((j, b)) = j {
                v[j] = b;
            }
            v
        };
        let mut roots = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                roots.push(unit(i, 1, Some((j, -1))));
                if self.family != Family::A {
                    roots.push(unit(i, 1, Some((j, 1))));
                }
            }
            match self.family {
                Family::B => roots.push(unit(i, 1, None)),
                Family::C => roots.push(unit(i, 2, None)),
                Family::A | Family::D => {}
            }
        }
        roots
    }

    pub fn simple_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut roots: Vec<Vec<i64>> = (0..n.saturating_sub(1))
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v[i + 1] = -1;
                v
            })
            .collect();
        let mut last = vec![0; n];
        match self.family {
            Family::A => return roots,
            Family::B => last[n - 1] = 1,
            Family::C => last[n - 1] = 2,
            Family::D => {
                last[n - 2] = 1;
                last[n - 1] = 1;
            }
        }
        roots.push(last);
        roots
    }

    /// Twice the Weyl vector, i.e. the sum of the positive roots.
    pub fn rho2(&self) -> Vec<i64> {
        let mut rho = vec![0; self.rank];
        for root in self.positive_roots() {
            for (r, a) in rho.iter_mut().zip(&root) {
                *r += a;
            }
        }
        rho
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for AlgebraType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidAlgebra(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        AlgebraType::new(family, rank).map_err(|_| bad())
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn reflect(v: &mut [i64], root: &[i64]) {
    // roots have norm 1, 2 or 4, and 2<v,a>/<a,a> is integral for
    // doubled weight coordinates
    let k = 2 * dot(v, root) / dot(root, root);
    for (x, a) in v.iter_mut().zip(root) {
        *x -= k * a;
    }
}

/// Result of moving a vector into the closed dominant chamber.
pub(crate) struct Chamber {
    pub vector: Vec<i64>,
    /// Determinant of the Weyl group element used.
    pub sign: i64,
    /// Whether the image lies on a wall.
    pub on_wall: bool,
}

pub(crate) fn to_dominant(algebra: &AlgebraType, v: &[i64]) -> Chamber {
    let simple = algebra.simple_roots();
    let mut vector = v.to_vec();
    let mut sign = 1;
    while let Some(a) = simple.iter().find(|a| dot(&vector, a) < 0) {
        reflect(&mut vector, a);
        sign = -sign;
    }
    let on_wall = simple.iter().any(|a| dot(&vector, a) == 0);
    Chamber {
        vector,
        sign,
        on_wall,
    }
}

pub(crate) fn weyl_orbit(algebra: &AlgebraType, v: &[i64]) -> Vec<Vec<i64>> {
    let simple = algebra.simple_roots();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(v.to_vec());
    queue.push_back(v.to_vec());
    let mut orbit = Vec::new();
    while let Some(x) = queue.pop_front() {
        for a in &simple {
            let mut y = x.clone();
            reflect(&mut y, a);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
        orbit.push(x);
    }
    orbit
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HighestWeight {
    algebra: AlgebraType,
    coords2: Vec<i64>,
}

impl HighestWeight {
    /// Wraps doubled coordinates. Only the length is checked here; use
    /// [`HighestWeight::is_dominant`] for the remaining invariants.
    pub fn new(algebra: AlgebraType, coords2: Vec<i64>) -> Result<Self> {
        if coords2.len() != algebra.rank() {
            return Err(Error::DimensionMismatch {
                expected: algebra.rank(),
                got: coords2.len(),
            });
        }
        Ok(HighestWeight { algebra, coords2 })
    }

    /// Builds a weight from ordinary integer coordinates.
    pub fn from_integers(algebra: AlgebraType, coords: &[i64]) -> Result<Self> {
        Self::new(algebra, coords.iter().map(|c| 2 * c).collect())
    }

    pub fn zero(algebra: AlgebraType) -> Self {
        HighestWeight {
            algebra,
            coords2: vec![0; algebra.rank()],
        }
    }

    /// The one-row weight `(j, 0, ..., 0)`.
    pub fn one_row(algebra: AlgebraType, j: u32) -> Self {
        let mut w = Self::zero(algebra);
        w.coords2[0] = 2 * j as i64;
        w
    }

    pub fn algebra(&self) -> AlgebraType {
        self.algebra
    }

    pub fn coords2(&self) -> &[i64] {
        &self.coords2
    }

    /// Ordinary coordinates, or `None` for a spin weight.
    pub fn integer_coords(&self) -> Option<Vec<i64>> {
        if self.is_spin() {
            None
        } else {
            Some(self.coords2.iter().map(|c| c / 2).collect())
        }
    }

    pub fn is_spin(&self) -> bool {
        self.coords2.iter().any(|c| c.rem_euclid(2) == 1)
    }

    pub fn is_trivial(&self) -> bool {
        self.coords2.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        let parity = self.coords2[0].rem_euclid(2);
        if self.coords2.iter().any(|c| c.rem_euclid(2) != parity) {
            return false;
        }
        if parity == 1 && !self.algebra.allows_spin() {
            return false;
        }
        self.algebra
            .simple_roots()
            .iter()
            .all(|a| dot(&self.coords2, a) >= 0)
    }

    pub fn ensure_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant {
                algebra: self.algebra.to_string(),
                weight: self.to_string(),
            })
        }
    }

    /// Highest weight of the dual module: `-w_0(w)`.
    pub fn dual(&self) -> HighestWeight {
        let neg: Vec<i64> = self.coords2.iter().map(|c| -c).collect();
        HighestWeight {
            algebra: self.algebra,
            coords2: to_dominant(&self.algebra, &neg).vector,
        }
    }

    /// `[2,1,0]` / `[3/2,1/2,-1/2]` form accepted by the parsers.
    pub fn notation(&self) -> String {
        format!("[{}]", self.coord_strings().join(","))
    }

    fn coord_strings(&self) -> Vec<String> {
        self.coords2
            .iter()
            .map(|&c| {
                if c % 2 == 0 {
                    (c / 2).to_string()
                } else {
                    format!("{c}/2")
                }
            })
            .collect()
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coord_strings().join(","))
    }
}

pub fn validate_dominant(w: &HighestWeight) -> bool {
    w.is_dominant()
}

/// Weyl dimension formula, evaluated over exact rationals.
pub fn weyl_dimension(w: &HighestWeight) -> Result<u64> {
    w.ensure_dominant()?;
    let rho = w.algebra.rho2();
    let shifted: Vec<i64> = w.coords2.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut dim = BigRational::one();
    for root in w.algebra.positive_roots() {
        dim *= BigRational::new(
            BigInt::from(dot(&shifted, &root)),
            BigInt::from(dot(&rho, &root)),
        );
    }
    if !dim.is_integer() {
        return Err(Error::Consistency(format!(
            "non-integral Weyl dimension for {w}"
        )));
    }
    dim.to_integer()
        .to_u64()
        .ok_or_else(|| Error::CeilingExceeded {
            dim: dim.to_string(),
            ceiling: u64::MAX,
        })
}

pub(crate) fn check_ceiling(dim: u64, limits: &Limits) -> Result<()> {
    if dim > limits.max_dim {
        return Err(Error::CeilingExceeded {
            dim: dim.to_string(),
            ceiling: limits.max_dim,
        });
    }
    Ok(())
}

/// Dominant weights of the module `w`, found by walking down through
/// positive roots inside the dominant chamber.
fn dominant_weights_below(w: &HighestWeight) -> Vec<Vec<i64>> {
    let roots = w.algebra.positive_roots();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut out = vec![w.coords2.clone()];
    seen.insert(w.coords2.clone());
    let mut i = 0;
    while i < out.len() {
        let mu = out[i].clone();
        i += 1;
        for a in &roots {
            // doubled coordinates: subtracting a root is subtracting 2a
            let nu: Vec<i64> = mu.iter().zip(a).map(|(x, y)| x - 2 * y).collect();
            let dominant = w.algebra.simple_roots().iter().all(|s| dot(&nu, s) >= 0);
            if dominant && seen.insert(nu.clone()) {
                out.push(nu);
            }
        }
    }
    out
}

/// Full weight multiplicity function of the irreducible module `w`,
/// computed by Freudenthal's recursion on dominant weights and spread over
/// Weyl orbits.
pub fn freudenthal_multiplicities(w: &HighestWeight, limits: &Limits) -> Result<WeightMap> {
    let dim = weyl_dimension(w)?;
    check_ceiling(dim, limits)?;
    let algebra = w.algebra;
    let rho = algebra.rho2();
    let roots = algebra.positive_roots();
    let lambda = &w.coords2;

    let mut dominant = dominant_weights_below(w);
    let diff_height = |mu: &Vec<i64>| {
        let d: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
        dot(&d, &rho)
    };
    dominant.sort_by_key(|mu| (diff_height(mu), mu.clone()));

    let shifted_norm = |mu: &[i64]| {
        let v: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a + b).collect();
        dot(&v, &v) as i128
    };
    let top = shifted_norm(lambda);
    let lambda_norm = dot(lambda, lambda);

    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    mult.insert(lambda.clone(), 1);
    for mu in dominant.iter().skip(1) {
        let mut acc: i128 = 0;
        for a in &roots {
            let a2: Vec<i64> = a.iter().map(|x| 2 * x).collect();
            let mut nu = mu.clone();
            loop {
                for (x, y) in nu.iter_mut().zip(&a2) {
                    *x += y;
                }
                if dot(&nu, &nu) > lambda_norm {
                    break;
                }
                let rep = to_dominant(&algebra, &nu).vector;
                let m = mult.get(&rep).copied().unwrap_or(0) as i128;
                acc += m * dot(&nu, &a2) as i128;
            }
        }
        let denom = top - shifted_norm(mu);
        let numer = 2 * acc;
        if denom <= 0 || numer % denom != 0 {
            return Err(Error::Consistency(format!(
                "Freudenthal recursion not integral at {mu:?} for {w}"
            )));
        }
        let m = numer / denom;
        if m > 0 {
            mult.insert(mu.clone(), m as u64);
        }
    }

    let mut full = WeightMap::new();
    for (mu, m) in mult {
        for nu in weyl_orbit(&algebra, &mu) {
            full.insert(nu, m);
        }
    }
    let total: u64 = full.values().sum();
    if total != dim {
        return Err(Error::Consistency(format!(
            "weight multiplicities of {w} sum to {total}, expected {dim}"
        )));
    }
    Ok(full)
}

/// A finite direct sum of irreducible modules over one algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    algebra: AlgebraType,
    terms: BTreeMap<HighestWeight, u64>,
}

impl Decomposition {
    pub fn new(algebra: AlgebraType) -> Self {
        Decomposition {
            algebra,
            terms: BTreeMap::new(),
        }
    }

    pub fn singleton(w: HighestWeight) -> Result<Self> {
        let mut d = Decomposition::new(w.algebra());
        d.add(w, 1)?;
        Ok(d)
    }

    pub fn from_terms(
        algebra: AlgebraType,
        terms: impl IntoIterator<Item = (HighestWeight, u64)>,
    ) -> Result<Self> {
        let mut d = Decomposition::new(algebra);
        for (w, m) in terms {
            d.add(w, m)?;
        }
        Ok(d)
    }

    pub fn algebra(&self) -> AlgebraType {
        self.algebra
    }

    pub fn add(&mut self, w: HighestWeight, mult: u64) -> Result<()> {
        if w.algebra() != self.algebra {
            return Err(Error::AlgebraMismatch {
                left: self.algebra.to_string(),
                right: w.algebra().to_string(),
            });
        }
        w.ensure_dominant()?;
        if mult > 0 {
            *self.terms.entry(w).or_insert(0) += mult;
        }
        Ok(())
    }

    pub fn multiplicity(&self, w: &HighestWeight) -> u64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// Terms in ascending lexicographic order of doubled coordinates.
    pub fn iter(&self) -> impl Iterator<Item = (&HighestWeight, u64)> {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|&m| m == 1)
    }

    /// True when every summand is the trivial module.
    pub fn is_trivial_isotypic(&self) -> bool {
        self.terms.keys().all(HighestWeight::is_trivial)
    }

    pub fn total_dimension(&self) -> Result<u64> {
        self.terms
            .iter()
            .map(|(w, &m)| weyl_dimension(w).map(|d| d * m))
            .sum()
    }
}

impl fmt::Display for Decomposition {
    /// Descending order, `(2) + (0)`; multiplicities as `2(2,1,0)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(w, &m)| {
                if m == 1 {
                    w.to_string()
                } else {
                    format!("{m}{w}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
