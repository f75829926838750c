//! Octonions by Cayley–Dickson doubling of the quaternions.
//!
//! An octonion is a pair `(a, b)` of quaternions with
//! `(a, b)(c, d) = (ac − d̄b, da + bc̄)`. The basis is `e_0..e_3 = (1, i, j, k)`
//! in the first slot and `e_4..e_7 = (0, 1), (0, i), (0, j), (0, k)`, so
//! `e_4` is the doubling unit.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::Serialize;

use super::quaternion::{format_combination, Quaternion};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Octonion(pub [Rational; 8]);

impl Octonion {
    pub fn zero() -> Self {
        Octonion(std::array::from_fn(|_| rational::zero()))
    }

    pub fn unit(idx: usize) -> Self {
        let mut o = Self::zero();
        o.0[idx] = rational::one();
        o
    }

    pub fn from_ints(c: [i64; 8]) -> Self {
        Octonion(c.map(rational::int))
    }

    fn halves(&self) -> (Quaternion, Quaternion) {
        let c = &self.0;
        (
            Quaternion([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()]),
            Quaternion([c[4].clone(), c[5].clone(), c[6].clone(), c[7].clone()]),
        )
    }

    fn join(lo: Quaternion, hi: Quaternion) -> Self {
        let [a, b, c, d] = lo.0;
        let [e, f, g, h] = hi.0;
        Octonion([a, b, c, d, e, f, g, h])
    }

    pub fn conj(&self) -> Self {
        let mut out = -self;
        out.0[0] = self.0[0].clone();
        out
    }

    pub fn norm2(&self) -> Rational {
        self.dot(self)
    }

    pub fn dot(&self, other: &Self) -> Rational {
        self.0.iter().zip(&other.0).map(|(x, y)| x * y).sum()
    }

    pub fn is_imaginary(&self) -> bool {
        self.0[0].is_zero()
    }

    pub fn scale(&self, t: &Rational) -> Self {
        Octonion(self.0.clone().map(|x| x * t))
    }

    /// Matrix of `v ↦ self · v` in the basis `e_0..e_7` (column `q` is the
    /// image of `e_q`).
    pub fn left_mult_matrix(&self) -> Vec<Vec<Rational>> {
        let cols: Vec<Octonion> = (0..8).map(|q| self * &Octonion::unit(q)).collect();
        (0..8)
            .map(|p| (0..8).map(|q| cols[q].0[p].clone()).collect())
            .collect()
    }
}

impl<'a> Mul<&'a Octonion> for &'a Octonion {
    type Output = Octonion;

    fn mul(self, rhs: &Octonion) -> Octonion {
        let (a, b) = self.halves();
        let (c, d) = rhs.halves();
        let lo = &(&a * &c) - &(&d.conj() * &b);
        let hi = &(&d * &a) + &(&b * &c.conj());
        Octonion::join(lo, hi)
    }
}

impl Mul for Octonion {
    type Output = Octonion;

    fn mul(self, rhs: Octonion) -> Octonion {
        &self * &rhs
    }
}

impl<'a> Add<&'a Octonion> for &'a Octonion {
    type Output = Octonion;

    fn add(self, rhs: &Octonion) -> Octonion {
        Octonion(std::array::from_fn(|t| &self.0[t] + &rhs.0[t]))
    }
}

impl<'a> Sub<&'a Octonion> for &'a Octonion {
    type Output = Octonion;

    fn sub(self, rhs: &Octonion) -> Octonion {
        Octonion(std::array::from_fn(|t| &self.0[t] - &rhs.0[t]))
    }
}

impl Neg for &Octonion {
    type Output = Octonion;

    fn neg(self) -> Octonion {
        Octonion(self.0.clone().map(|x| -x))
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_combination(
            &self.0,
            &["e0", "e1", "e2", "e3", "e4", "e5", "e6", "e7"],
        ))
    }
}

/// `e_p · e_q = sign · e_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SignedUnit {
    pub sign: i8,
    pub index: usize,
}

fn signed_unit(coords: &[Rational]) -> SignedUnit {
    let (index, c) = coords
        .iter()
        .enumerate()
        .find(|(_, c)| !c.is_zero())
        .expect("product of basis units is a signed unit");
    SignedUnit {
        sign: if c > &rational::zero() { 1 } else { -1 },
        index,
    }
}

pub fn octonion_table() -> Vec<Vec<SignedUnit>> {
    (0..8)
        .map(|p| {
            (0..8)
                .map(|q| signed_unit(&(&Octonion::unit(p) * &Octonion::unit(q)).0))
                .collect()
        })
        .collect()
}

pub fn quaternion_table() -> Vec<Vec<SignedUnit>> {
    (0..4)
        .map(|p| {
            (0..4)
                .map(|q| signed_unit(&(&Quaternion::unit(p) * &Quaternion::unit(q)).0))
                .collect()
        })
        .collect()
}
