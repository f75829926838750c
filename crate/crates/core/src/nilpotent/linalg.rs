//! Exact dense linear algebra over fields (rationals and Gaussian rationals).

use std::ops::Neg;

use num_traits::{Num, One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Determinant by Gaussian elimination.
pub fn determinant<T>(matrix: &[Vec<T>]) -> T
where
    T: Clone + Num + Neg<Output = T>,
{
    let n = matrix.len();
    let mut a: Vec<Vec<T>> = matrix.to_vec();
    let mut det = T::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return T::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det = det * p.clone();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() / p.clone();
            for c in col..n {
                let v = a[col][c].clone() * f.clone();
                a[r][c] = a[r][c].clone() - v;
            }
        }
    }
    det
}

/// Rank by row reduction.
pub fn rank<T>(matrix: &[Vec<T>]) -> usize
where
    T: Clone + Num,
{
    let mut a: Vec<Vec<T>> = matrix.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(pivot, r);
        let p = a[r][c].clone();
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone() / p.clone();
            for k in c..cols {
                let v = a[r][k].clone() * f.clone();
                a[i][k] = a[i][k].clone() - v;
            }
        }
        r += 1;
    }
    r
}

/// An exactly skew-symmetric rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewForm {
    matrix: Vec<Vec<Rational>>,
}

impl SkewForm {
    pub fn new(matrix: Vec<Vec<Rational>>) -> Result<Self> {
        let n = matrix.len();
        for row in &matrix {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if matrix[i][j] != -matrix[j][i].clone() {
                    return Err(Error::NotSkew);
                }
            }
        }
        Ok(SkewForm { matrix })
    }

    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn determinant(&self) -> Rational {
        determinant(&self.matrix)
    }
}

/// Pfaffian by expansion along the first row, normalised so that
/// `Pf([[0, 1], [-1, 0]]) = 1`.
pub fn pfaffian(form: &SkewForm) -> Result<Rational> {
    let n = form.size();
    if n % 2 == 1 {
        return Err(Error::OddSize(n));
    }
    let idx: Vec<usize> = (0..n).collect();
    Ok(pfaffian_rec(&form.matrix, &idx))
}

fn pfaffian_rec(a: &[Vec<Rational>], idx: &[usize]) -> Rational {
    if idx.is_empty() {
        return Rational::one();
    }
    let i = idx[0];
    let mut total = Rational::zero();
    for k in 1..idx.len() {
        let j = idx[k];
        if a[i][j].is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..]
            .iter()
            .enumerate()
            .filter(|&(t, _)| t + 1 != k)
            .map(|(_, &x)| x)
            .collect();
        let term = &a[i][j] * pfaffian_rec(a, &rest);
        if k % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}
