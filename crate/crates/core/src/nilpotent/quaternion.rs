use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::rational::{self, Rational};

/// Quaternion with rational coordinates in the basis `1, i, j, k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion(pub [Rational; 4]);

impl Quaternion {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Quaternion([a, b, c, d])
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Quaternion([
            rational::int(a),
            rational::int(b),
            rational::int(c),
            rational::int(d),
        ])
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    pub fn real(a: Rational) -> Self {
        Quaternion([a, rational::zero(), rational::zero(), rational::zero()])
    }

    /// `unit(0) = 1`, `unit(1) = i`, `unit(2) = j`, `unit(3) = k`.
    pub fn unit(idx: usize) -> Self {
        let mut q = Self::zero();
        q.0[idx] = rational::one();
        q
    }

    pub fn i() -> Self {
        Self::unit(1)
    }

    pub fn j() -> Self {
        Self::unit(2)
    }

    pub fn k() -> Self {
        Self::unit(3)
    }

    pub fn re(&self) -> &Rational {
        &self.0[0]
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.0;
        Quaternion([a.clone(), -b, -c, -d])
    }

    pub fn norm2(&self) -> Rational {
        self.dot(self)
    }

    /// Euclidean inner product of coordinates, `Re(p q̄)`.
    pub fn dot(&self, other: &Self) -> Rational {
        self.0.iter().zip(&other.0).map(|(x, y)| x * y).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_imaginary(&self) -> bool {
        self.0[0].is_zero()
    }

    pub fn scale(&self, t: &Rational) -> Self {
        Quaternion(self.0.clone().map(|x| x * t))
    }
}

impl<'a> Mul<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;

    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let [a1, b1, c1, d1] = &self.0;
        let [a2, b2, c2, d2] = &rhs.0;
        Quaternion([
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ])
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    fn mul(self, rhs: Quaternion) -> Quaternion {
        &self * &rhs
    }
}

impl<'a> Add<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;

    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion(std::array::from_fn(|t| &self.0[t] + &rhs.0[t]))
    }
}

impl Add for Quaternion {
    type Output = Quaternion;

    fn add(self, rhs: Quaternion) -> Quaternion {
        &self + &rhs
    }
}

impl<'a> Sub<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;

    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion(std::array::from_fn(|t| &self.0[t] - &rhs.0[t]))
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;

    fn sub(self, rhs: Quaternion) -> Quaternion {
        &self - &rhs
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        Quaternion(self.0.clone().map(|x| -x))
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        -&self
    }
}

pub(crate) fn format_combination(coords: &[Rational], units: &[&str]) -> String {
    let mut out = String::new();
    for (c, u) in coords.iter().zip(units) {
        if c.is_zero() {
            continue;
        }
        let neg = c < &rational::zero();
        let abs = if neg { -c } else { c.clone() };
        if !out.is_empty() {
            out.push(if neg { '-' } else { '+' });
        } else if neg {
            out.push('-');
        }
        let unit_only = abs == rational::one() && !u.is_empty();
        if !unit_only {
            out.push_str(&rational::format(&abs));
        }
        out.push_str(u);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_combination(&self.0, &["", "i", "j", "k"]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&j * &i, -&k);
        assert_eq!(&i * &i, Quaternion::from_ints(-1, 0, 0, 0));
    }

    #[test]
    fn norm_is_multiplicative() {
        let p = Quaternion::from_ints(1, -2, 3, 5);
        let q = Quaternion::from_ints(-4, 1, 0, 2);
        assert_eq!((&p * &q).norm2(), p.norm2() * q.norm2());
        assert_eq!((&p * &q).conj(), &q.conj() * &p.conj());
    }

    #[test]
    fn display() {
        assert_eq!(Quaternion::from_ints(0, 1, -1, 0).to_string(), "i-j");
        assert_eq!(Quaternion::zero().to_string(), "0");
        assert_eq!(
            Quaternion::new(
                rational::ratio(1, 2),
                rational::zero(),
                rational::int(2),
                rational::zero()
            )
            .to_string(),
            "1/2+2j"
        );
    }
}
