//! The three two-step nilpotent case algebras `n = z ⊕ V`.
//!
//! * Case A: `V = C^{2n}`, `z = Λ²(C^{2n}) ⊕ iR`, `K = U(2n)`.
//! * Case B: `V = H^n`, `z = H_0(H^n) ⊕ Im(H)`, `K = S¹ × Sp(n)`.
//! * Case C: `V = O`, `z = Im(O)`, `K = Spin(7)`.
//!
//! Vectors of `V` are real coordinate vectors. Complex coordinates expand as
//! `(e_m, i·e_m)` pairs, quaternionic ones as `(1, i, j, k)` blocks and
//! octonions as `e_0..e_7`.
//!
//! Inner products on the center: `Re tr(AB*)/2` on `Λ²`, `Re tr(AB*)` on
//! `H_0`, Euclidean on `iR`, `Im(H)` and `Im(O)`. They are invariant under the
//! respective `K`, and only vanishing of `B_λ` and its Pfaffian is used
//! downstream, so the normalisation is immaterial.

pub mod linalg;
pub mod octonion;
pub mod quaternion;

use std::fmt;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
pub use linalg::{determinant, pfaffian, rank, SkewForm};
pub use octonion::Octonion;
pub use quaternion::Quaternion;

pub type Gaussian = Complex<Rational>;
pub type ComplexMatrix = Vec<Vec<Gaussian>>;
pub type QuaternionMatrix = Vec<Vec<Quaternion>>;

fn cz() -> Gaussian {
    Complex::new(rational::zero(), rational::zero())
}

fn creal(x: i64) -> Gaussian {
    Complex::new(rational::int(x), rational::zero())
}

fn cimag(x: i64) -> Gaussian {
    Complex::new(rational::zero(), rational::int(x))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    A,
    B,
    C,
}

impl std::str::FromStr for CaseTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(CaseTag::A),
            "B" | "b" => Ok(CaseTag::B),
            "C" | "c" => Ok(CaseTag::C),
            other => Err(Error::Parse(format!("unknown case {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseAlgebra {
    A { n: usize },
    B { n: usize },
    C,
}

impl fmt::Display for CaseAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseAlgebra::A { n } => write!(f, "A(n={n})"),
            CaseAlgebra::B { n } => write!(f, "B(n={n})"),
            CaseAlgebra::C => write!(f, "C"),
        }
    }
}

/// An element of the center, stored in the natural structured form of each
/// case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CenterElement {
    /// Complex antisymmetric `2n × 2n` matrix and the `iR` coefficient.
    A { wedge: ComplexMatrix, s: Rational },
    /// Quaternionic hermitian trace-free `n × n` matrix and an imaginary
    /// quaternion.
    B {
        herm: QuaternionMatrix,
        q: Quaternion,
    },
    /// Imaginary octonion.
    C { z: Octonion },
}

impl CaseAlgebra {
    pub fn new(tag: CaseTag, n: Option<usize>) -> Result<Self> {
        let need_n = || {
            n.filter(|&n| n >= 1)
                .ok_or_else(|| Error::Parse("cases A and B need a rank n ≥ 1".into()))
        };
        Ok(match tag {
            CaseTag::A => CaseAlgebra::A { n: need_n()? },
            CaseTag::B => CaseAlgebra::B { n: need_n()? },
            CaseTag::C => CaseAlgebra::C,
        })
    }

    pub fn tag(&self) -> CaseTag {
        match self {
            CaseAlgebra::A { .. } => CaseTag::A,
            CaseAlgebra::B { .. } => CaseTag::B,
            CaseAlgebra::C => CaseTag::C,
        }
    }

    pub fn dim_v(&self) -> usize {
        match *self {
            CaseAlgebra::A { n } | CaseAlgebra::B { n } => 4 * n,
            CaseAlgebra::C => 8,
        }
    }

    pub fn dim_center(&self) -> usize {
        match *self {
            CaseAlgebra::A { n } => 2 * n * (2 * n - 1) + 1,
            CaseAlgebra::B { n } => 2 * n * n - n - 1 + 3,
            CaseAlgebra::C => 7,
        }
    }

    /// Dimension of `Lie(K)`.
    pub fn lie_dim(&self) -> usize {
        match *self {
            CaseAlgebra::A { n } => 4 * n * n,
            CaseAlgebra::B { n } => 1 + 2 * n * n + n,
            CaseAlgebra::C => 21,
        }
    }

    pub fn v_basis_labels(&self) -> Vec<String> {
        match *self {
            CaseAlgebra::A { n } => (1..=2 * n)
                .flat_map(|m| [format!("e{m}"), format!("i*e{m}")])
                .collect(),
            CaseAlgebra::B { n } => (1..=n)
                .flat_map(|m| ["1", "i", "j", "k"].map(|u| format!("{u}@{m}")))
                .collect(),
            CaseAlgebra::C => (0..8).map(|m| format!("e{m}")).collect(),
        }
    }

    /// Labels of the coordinates returned by [`CaseAlgebra::center_coords`].
    /// Orthonormal for cases A and C; for case B the trace-free diagonal
    /// directions `E_pp − E_(p+1)(p+1)` and the off-diagonal hermitian units
    /// are orthogonal only up to Gram weights.
    pub fn center_basis_labels(&self) -> Vec<String> {
        match *self {
            CaseAlgebra::A { n } => {
                let mut out = Vec::new();
                for p in 1..=2 * n {
                    for q in p + 1..=2 * n {
                        out.push(format!("Re(e{p}^e{q})"));
                        out.push(format!("Im(e{p}^e{q})"));
                    }
                }
                out.push("iR".into());
                out
            }
            CaseAlgebra::B { n } => {
                let mut out: Vec<String> =
                    (1..n).map(|p| format!("E{p}{p}-E{0}{0}", p + 1)).collect();
                for p in 1..=n {
                    for q in p + 1..=n {
                        for u in ["1", "i", "j", "k"] {
                            out.push(format!("{u}@({p},{q})"));
                        }
                    }
                }
                out.extend(["Im:i", "Im:j", "Im:k"].map(String::from));
                out
            }
            CaseAlgebra::C => (1..8).map(|a| format!("e{a}")).collect(),
        }
    }

    pub fn zero_center(&self) -> CenterElement {
        match *self {
            CaseAlgebra::A { n } => CenterElement::A {
                wedge: vec![vec![cz(); 2 * n]; 2 * n],
                s: rational::zero(),
            },
            CaseAlgebra::B { n } => CenterElement::B {
                herm: vec![vec![Quaternion::zero(); n]; n],
                q: Quaternion::zero(),
            },
            CaseAlgebra::C => CenterElement::C {
                z: Octonion::zero(),
            },
        }
    }

    /// Checks shape and membership in the declared center subspace.
    pub fn validate_center(&self, x: &CenterElement) -> Result<()> {
        let invalid = |m: &str| Err(Error::InvalidElement(m.to_string()));
        match (self, x) {
            (CaseAlgebra::A { n }, CenterElement::A { wedge, .. }) => {
                let size = 2 * n;
                if wedge.len() != size || wedge.iter().any(|r| r.len() != size) {
                    return Err(Error::DimensionMismatch {
                        expected: size,
                        got: wedge.len(),
                    });
                }
                for p in 0..size {
                    for q in 0..size {
                        if wedge[p][q] != -wedge[q][p].clone() {
                            return invalid("case A center matrix must be antisymmetric");
                        }
                    }
                }
                Ok(())
            }
            (CaseAlgebra::B { n }, CenterElement::B { herm, q }) => {
                if herm.len() != *n || herm.iter().any(|r| r.len() != *n) {
                    return Err(Error::DimensionMismatch {
                        expected: *n,
                        got: herm.len(),
                    });
                }
                for p in 0..*n {
                    for r in 0..*n {
                        if herm[p][r] != herm[r][p].conj() {
                            return invalid("case B center matrix must be hermitian");
                        }
                    }
                }
                let trace: Rational = (0..*n).map(|p| herm[p][p].re().clone()).sum();
                if !trace.is_zero() {
                    return invalid("case B center matrix must be trace-free");
                }
                if !q.is_imaginary() {
                    return invalid("case B Im(H) part must be imaginary");
                }
                Ok(())
            }
            (CaseAlgebra::C, CenterElement::C { z }) => {
                if z.is_imaginary() {
                    Ok(())
                } else {
                    invalid("case C center element must be an imaginary octonion")
                }
            }
            _ => invalid("center element belongs to a different case"),
        }
    }

    fn check_v(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim_v() {
            return Err(Error::DimensionMismatch {
                expected: self.dim_v(),
                got: v.len(),
            });
        }
        Ok(())
    }

    pub fn v_unit(&self, idx: usize) -> Vec<Rational> {
        let mut v = vec![rational::zero(); self.dim_v()];
        v[idx] = rational::one();
        v
    }

    /// Lie bracket `[u, v] ∈ z` of two elements of `V`.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Result<CenterElement> {
        self.check_v(u)?;
        self.check_v(v)?;
        Ok(match *self {
            CaseAlgebra::A { n } => {
                let (u, v) = (to_complex(u), to_complex(v));
                let size = 2 * n;
                let wedge = (0..size)
                    .map(|p| (0..size).map(|q| &u[p] * &v[q] - &v[p] * &u[q]).collect())
                    .collect();
                let herm: Gaussian = u
                    .iter()
                    .zip(&v)
                    .fold(cz(), |acc, (a, b)| acc + a.conj() * b);
                CenterElement::A { wedge, s: herm.im }
            }
            CaseAlgebra::B { n } => {
                let (u, v) = (to_quaternions(u), to_quaternions(v));
                let i = Quaternion::i();
                let mut herm: QuaternionMatrix = (0..n)
                    .map(|p| {
                        (0..n)
                            .map(|r| {
                                &(&(&u[p] * &i) * &v[r].conj()) - &(&(&v[p] * &i) * &u[r].conj())
                            })
                            .collect()
                    })
                    .collect();
                let trace: Rational = (0..n).map(|p| herm[p][p].re().clone()).sum();
                let shift = trace / rational::int(n as i64);
                for (p, row) in herm.iter_mut().enumerate() {
                    row[p] = &row[p] - &Quaternion::real(shift.clone());
                }
                let q = (0..n).fold(Quaternion::zero(), |acc, p| {
                    &acc + &(&(&u[p].conj() * &v[p]) - &(&v[p].conj() * &u[p]))
                });
                CenterElement::B { herm, q }
            }
            CaseAlgebra::C => {
                let (u, v) = (to_octonion(u), to_octonion(v));
                let mut z = Octonion::zero();
                for a in 1..8 {
                    z.0[a] = (&Octonion::unit(a) * &u).dot(&v);
                }
                CenterElement::C { z }
            }
        })
    }

    /// Invariant inner product on the center.
    pub fn inner(&self, x: &CenterElement, y: &CenterElement) -> Result<Rational> {
        match (x, y) {
            (CenterElement::A { wedge: a, s: s1 }, CenterElement::A { wedge: b, s: s2 }) => {
                let mut total = s1 * s2;
                for p in 0..a.len() {
                    for q in p + 1..a.len() {
                        total += &a[p][q].re * &b[p][q].re + &a[p][q].im * &b[p][q].im;
                    }
                }
                Ok(total)
            }
            (CenterElement::B { herm: a, q: q1 }, CenterElement::B { herm: b, q: q2 }) => {
                let mut total = q1.dot(q2);
                for (ra, rb) in a.iter().zip(b) {
                    for (x, y) in ra.iter().zip(rb) {
                        total += x.dot(y);
                    }
                }
                Ok(total)
            }
            (CenterElement::C { z: a }, CenterElement::C { z: b }) => Ok(a.dot(b)),
            _ => Err(Error::InvalidElement(
                "center elements from different cases".into(),
            )),
        }
    }

    /// Coordinates in the basis of [`CaseAlgebra::center_basis_labels`].
    pub fn center_coords(&self, x: &CenterElement) -> Vec<Rational> {
        match x {
            CenterElement::A { wedge, s } => {
                let mut out = Vec::new();
                for p in 0..wedge.len() {
                    for q in p + 1..wedge.len() {
                        out.push(wedge[p][q].re.clone());
                        out.push(wedge[p][q].im.clone());
                    }
                }
                out.push(s.clone());
                out
            }
            CenterElement::B { herm, q } => {
                let n = herm.len();
                let mut out = Vec::new();
                let mut partial = rational::zero();
                for p in 0..n.saturating_sub(1) {
                    partial += herm[p][p].re();
                    out.push(partial.clone());
                }
                for p in 0..n {
                    for r in p + 1..n {
                        out.extend(herm[p][r].0.iter().cloned());
                    }
                }
                out.extend(q.0[1..].iter().cloned());
                out
            }
            CenterElement::C { z } => z.0[1..].to_vec(),
        }
    }

    /// Matrix of `B_λ(u, v) = ⟨[u, v], X⟩` on `V`.
    pub fn b_lambda_matrix(&self, x: &CenterElement) -> Result<SkewForm> {
        self.validate_center(x)?;
        let d = self.dim_v();
        let mut m = vec![vec![rational::zero(); d]; d];
        for p in 0..d {
            for q in p + 1..d {
                let val = self.inner(&self.bracket(&self.v_unit(p), &self.v_unit(q))?, x)?;
                m[q][p] = -val.clone();
                m[p][q] = val;
            }
        }
        SkewForm::new(m)
    }

    pub fn pfaffian_at(&self, x: &CenterElement) -> Result<Rational> {
        pfaffian(&self.b_lambda_matrix(x)?)
    }

    /// `B_λ` non-degenerate on `V`, i.e. nonzero Pfaffian.
    pub fn square_integrable(&self, x: &CenterElement) -> Result<bool> {
        Ok(!self.pfaffian_at(x)?.is_zero())
    }

    /// Action of the `idx`-th basis element of `Lie(K)` on `V`.
    pub fn act_v(&self, idx: usize, v: &[Rational]) -> Result<Vec<Rational>> {
        self.check_v(v)?;
        self.check_lie(idx)?;
        Ok(match *self {
            CaseAlgebra::A { n } => {
                let y = u2n_basis(n, idx);
                let v = to_complex(v);
                let out: Vec<Gaussian> = y
                    .iter()
                    .map(|row| row.iter().zip(&v).fold(cz(), |acc, (a, b)| acc + a * b))
                    .collect();
                from_complex(&out)
            }
            CaseAlgebra::B { n } => {
                let (theta, y) = case_b_basis(n, idx);
                let v = to_quaternions(v);
                let i = Quaternion::i();
                let out: Vec<Quaternion> = (0..n)
                    .map(|p| {
                        let yv =
                            (0..n).fold(Quaternion::zero(), |acc, r| &acc + &(&y[p][r] * &v[r]));
                        &yv - &(&v[p] * &i).scale(&theta)
                    })
                    .collect();
                out.iter().flat_map(|q| q.0.iter().cloned()).collect()
            }
            CaseAlgebra::C => {
                let (a, b) = spin7_pair(idx);
                let v = to_octonion(v);
                let w = &Octonion::unit(a) * &(&Octonion::unit(b) * &v);
                w.scale(&rational::ratio(1, 2)).0.to_vec()
            }
        })
    }

    /// Action of the `idx`-th basis element of `Lie(K)` on the center.
    pub fn act_center(&self, idx: usize, x: &CenterElement) -> Result<CenterElement> {
        self.validate_center(x)?;
        self.check_lie(idx)?;
        Ok(match (*self, x) {
            (CaseAlgebra::A { n }, CenterElement::A { wedge, .. }) => {
                let y = u2n_basis(n, idx);
                let size = 2 * n;
                let prod = |a: &ComplexMatrix, b: &ComplexMatrix, p: usize, q: usize| {
                    (0..size).fold(cz(), |acc, r| acc + &a[p][r] * &b[r][q])
                };
                let yt: ComplexMatrix = (0..size)
                    .map(|p| (0..size).map(|q| y[q][p].clone()).collect())
                    .collect();
                let out = (0..size)
                    .map(|p| {
                        (0..size)
                            .map(|q| prod(&y, wedge, p, q) + prod(wedge, &yt, p, q))
                            .collect()
                    })
                    .collect();
                CenterElement::A {
                    wedge: out,
                    s: rational::zero(),
                }
            }
            (CaseAlgebra::B { n }, CenterElement::B { herm, q }) => {
                let (theta, y) = case_b_basis(n, idx);
                let out = (0..n)
                    .map(|p| {
                        (0..n)
                            .map(|r| {
                                (0..n).fold(Quaternion::zero(), |acc, t| {
                                    &acc + &(&(&y[p][t] * &herm[t][r]) - &(&herm[p][t] * &y[t][r]))
                                })
                            })
                            .collect()
                    })
                    .collect();
                let i = Quaternion::i();
                let dq = (&(&i * q) - &(q * &i)).scale(&theta);
                CenterElement::B { herm: out, q: dq }
            }
            (CaseAlgebra::C, CenterElement::C { z }) => {
                let (a, b) = spin7_pair(idx);
                let mut out = Octonion::zero();
                out.0[b] = z.0[a].clone();
                out.0[a] = -z.0[b].clone();
                CenterElement::C { z: out }
            }
            _ => unreachable!("validated above"),
        })
    }

    fn check_lie(&self, idx: usize) -> Result<()> {
        if idx >= self.lie_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.lie_dim(),
                got: idx,
            });
        }
        Ok(())
    }

    /// `dim {ξ ∈ Lie(K) : ξ·X = 0}` from the exact rank of `ξ ↦ ξ·X`.
    pub fn stabilizer_dimension(&self, x: &CenterElement) -> Result<usize> {
        let columns: Vec<Vec<Rational>> = (0..self.lie_dim())
            .map(|k| Ok(self.center_coords(&self.act_center(k, x)?)))
            .collect::<Result<_>>()?;
        Ok(self.lie_dim() - rank(&columns))
    }
}

/// Matrix of `J(z): v ↦ z·v` on the octonions.
pub fn j_matrix(z: &Octonion) -> Vec<Vec<Rational>> {
    z.left_mult_matrix()
}

fn to_complex(v: &[Rational]) -> Vec<Gaussian> {
    v.chunks(2)
        .map(|c| Complex::new(c[0].clone(), c[1].clone()))
        .collect()
}

fn from_complex(v: &[Gaussian]) -> Vec<Rational> {
    v.iter()
        .flat_map(|c| [c.re.clone(), c.im.clone()])
        .collect()
}

fn to_quaternions(v: &[Rational]) -> Vec<Quaternion> {
    v.chunks(4)
        .map(|c| Quaternion::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()))
        .collect()
}

fn to_octonion(v: &[Rational]) -> Octonion {
    Octonion(std::array::from_fn(|t| v[t].clone()))
}

/// Basis of `u(2n)`: `i E_pp`, then for `p < q` the pair `E_pq − E_qp`,
/// `i(E_pq + E_qp)`.
fn u2n_basis(n: usize, idx: usize) -> ComplexMatrix {
    let size = 2 * n;
    let mut y = vec![vec![cz(); size]; size];
    if idx < size {
        y[idx][idx] = cimag(1);
        return y;
    }
    let mut k = size;
    for p in 0..size {
        for q in p + 1..size {
            if idx == k {
                y[p][q] = creal(1);
                y[q][p] = creal(-1);
                return y;
            }
            if idx == k + 1 {
                y[p][q] = cimag(1);
                y[q][p] = cimag(1);
                return y;
            }
            k += 2;
        }
    }
    unreachable!("index checked against lie_dim")
}

/// Basis of `Lie(S¹ × Sp(n))`: index 0 is the circle generator; then
/// `h E_pp` for imaginary units `h`, then `h E_pq − h̄ E_qp` for `p < q`.
fn case_b_basis(n: usize, idx: usize) -> (Rational, QuaternionMatrix) {
    let mut y = vec![vec![Quaternion::zero(); n]; n];
    if idx == 0 {
        return (rational::one(), y);
    }
    let mut k = 1;
    for p in 0..n {
        for h in 1..4 {
            if idx == k {
                y[p][p] = Quaternion::unit(h);
                return (rational::zero(), y);
            }
            k += 1;
        }
    }
    for p in 0..n {
        for r in p + 1..n {
            for h in 0..4 {
                if idx == k {
                    let unit = Quaternion::unit(h);
                    y[r][p] = -&unit.conj();
                    y[p][r] = unit;
                    return (rational::zero(), y);
                }
                k += 1;
            }
        }
    }
    unreachable!("index checked against lie_dim")
}

/// `spin(7)` basis element `idx` is `½ J(e_a) J(e_b)` for the `idx`-th pair
/// `1 ≤ a < b ≤ 7`; on `Im(O)` it acts as `z ↦ z_a e_b − z_b e_a`.
fn spin7_pair(idx: usize) -> (usize, usize) {
    let mut k = 0;
    for a in 1..8 {
        for b in a + 1..8 {
            if k == idx {
                return (a, b);
            }
            k += 1;
        }
    }
    unreachable!("index checked against lie_dim")
}

impl CenterElement {
    /// `(0, q)` in case B.
    pub fn case_b_imaginary(n: usize, q: Quaternion) -> Self {
        CenterElement::B {
            herm: vec![vec![Quaternion::zero(); n]; n],
            q,
        }
    }

    /// `(A, s)` in case A from an integer-coefficient antisymmetric matrix
    /// given by its strictly upper triangle of Gaussian integers `(re, im)`.
    pub fn case_a_from_upper(n: usize, upper: &[(usize, usize, i64, i64)], s: Rational) -> Self {
        let size = 2 * n;
        let mut wedge = vec![vec![cz(); size]; size];
        for &(p, q, re, im) in upper {
            let c = Complex::new(rational::int(re), rational::int(im));
            wedge[q][p] = -c.clone();
            wedge[p][q] = c;
        }
        CenterElement::A { wedge, s }
    }

    pub fn case_c(z: Octonion) -> Self {
        CenterElement::C { z }
    }

    pub fn scale(&self, t: &Rational) -> Self {
        let ct = Complex::new(t.clone(), rational::zero());
        match self {
            CenterElement::A { wedge, s } => CenterElement::A {
                wedge: wedge
                    .iter()
                    .map(|r| r.iter().map(|c| c * &ct).collect())
                    .collect(),
                s: s * t,
            },
            CenterElement::B { herm, q } => CenterElement::B {
                herm: herm
                    .iter()
                    .map(|r| r.iter().map(|x| x.scale(t)).collect())
                    .collect(),
                q: q.scale(t),
            },
            CenterElement::C { z } => CenterElement::C { z: z.scale(t) },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            CenterElement::A { wedge, s } => {
                s.is_zero()
                    && wedge
                        .iter()
                        .flatten()
                        .all(|c| c.re.is_zero() && c.im.is_zero())
            }
            CenterElement::B { herm, q } => {
                q.is_zero() && herm.iter().flatten().all(Quaternion::is_zero)
            }
            CenterElement::C { z } => z.0.iter().all(Zero::is_zero),
        }
    }

    pub fn add(&self, other: &CenterElement) -> Result<CenterElement> {
        Ok(match (self, other) {
            (CenterElement::A { wedge: a, s: s1 }, CenterElement::A { wedge: b, s: s2 }) => {
                CenterElement::A {
                    wedge: a
                        .iter()
                        .zip(b)
                        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
                        .collect(),
                    s: s1 + s2,
                }
            }
            (CenterElement::B { herm: a, q: q1 }, CenterElement::B { herm: b, q: q2 }) => {
                CenterElement::B {
                    herm: a
                        .iter()
                        .zip(b)
                        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
                        .collect(),
                    q: q1 + q2,
                }
            }
            (CenterElement::C { z: a }, CenterElement::C { z: b }) => CenterElement::C { z: a + b },
            _ => {
                return Err(Error::InvalidElement(
                    "center elements from different cases".into(),
                ))
            }
        })
    }
}

impl fmt::Display for CenterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn complex(c: &Gaussian) -> String {
            quaternion::format_combination(&[c.re.clone(), c.im.clone()], &["", "i"])
        }
        match self {
            CenterElement::A { wedge, s } => {
                let rows: Vec<String> = wedge
                    .iter()
                    .map(|r| format!("[{}]", r.iter().map(complex).collect::<Vec<_>>().join(",")))
                    .collect();
                write!(f, "([{}], {})", rows.join(","), rational::format(s))
            }
            CenterElement::B { herm, q } => {
                let rows: Vec<String> = herm
                    .iter()
                    .map(|r| {
                        format!(
                            "[{}]",
                            r.iter()
                                .map(|x| x.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        )
                    })
                    .collect();
                write!(f, "([{}], {})", rows.join(","), q)
            }
            CenterElement::C { z } => write!(f, "{z}"),
        }
    }
}

/// `Im(u^* v)` helper kept public for grids that build `u ∧ v` directly.
pub fn wedge(u: &[Gaussian], v: &[Gaussian]) -> ComplexMatrix {
    (0..u.len())
        .map(|p| {
            (0..u.len())
                .map(|q| &u[p] * &v[q] - &v[p] * &u[q])
                .collect()
        })
        .collect()
}

pub fn gaussian(re: i64, im: i64) -> Gaussian {
    Complex::new(rational::int(re), rational::int(im))
}

pub fn is_one(q: &Rational) -> bool {
    q.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn dimensions() {
        let a1 = CaseAlgebra::A { n: 1 };
        assert_eq!((a1.dim_v(), a1.dim_center(), a1.lie_dim()), (4, 3, 4));
        let b2 = CaseAlgebra::B { n: 2 };
        assert_eq!((b2.dim_v(), b2.dim_center(), b2.lie_dim()), (8, 8, 11));
        assert_eq!(CaseAlgebra::C.dim_center(), 7);
        for case in [
            a1,
            b2,
            CaseAlgebra::B { n: 1 },
            CaseAlgebra::A { n: 2 },
            CaseAlgebra::C,
        ] {
            assert_eq!(
                case.center_basis_labels().len(),
                case.dim_center(),
                "{case}"
            );
            assert_eq!(case.v_basis_labels().len(), case.dim_v());
            let x = case.zero_center();
            assert_eq!(case.center_coords(&x).len(), case.dim_center());
        }
    }

    #[test]
    fn self_bracket_vanishes() {
        for case in [
            CaseAlgebra::A { n: 2 },
            CaseAlgebra::B { n: 2 },
            CaseAlgebra::C,
        ] {
            let u: Vec<Rational> = (0..case.dim_v()).map(|t| int(t as i64 - 3)).collect();
            assert!(case.bracket(&u, &u).unwrap().is_zero(), "{case}");
        }
    }

    #[test]
    fn case_a_standard_pair() {
        let a = CaseAlgebra::A { n: 1 };
        // e1 is real index 0, e2 is real index 2
        let x = a.bracket(&a.v_unit(0), &a.v_unit(2)).unwrap();
        let expected = CenterElement::case_a_from_upper(1, &[(0, 1, 1, 0)], int(0));
        assert_eq!(x, expected);
    }

    #[test]
    fn case_b_one_and_i() {
        let b = CaseAlgebra::B { n: 1 };
        let x = b.bracket(&b.v_unit(0), &b.v_unit(1)).unwrap();
        assert_eq!(
            x,
            CenterElement::case_b_imaginary(1, Quaternion::from_ints(0, 2, 0, 0))
        );
    }

    #[test]
    fn case_b_rejects_real_q() {
        let b = CaseAlgebra::B { n: 1 };
        let x = CenterElement::case_b_imaginary(1, Quaternion::from_ints(1, 0, 0, 0));
        assert_eq!(
            b.validate_center(&x).unwrap_err().code(),
            "E_INVALID_ELEMENT"
        );
    }

    #[test]
    fn zero_center_gives_zero_form() {
        for case in [
            CaseAlgebra::A { n: 1 },
            CaseAlgebra::B { n: 2 },
            CaseAlgebra::C,
        ] {
            let m = case.b_lambda_matrix(&case.zero_center()).unwrap();
            assert!(m.rows().iter().flatten().all(Zero::is_zero));
            assert!(!case.square_integrable(&case.zero_center()).unwrap());
        }
    }

    #[test]
    fn case_c_form_is_left_multiplication() {
        let z = Octonion::unit(1);
        let m = CaseAlgebra::C
            .b_lambda_matrix(&CenterElement::case_c(z.clone()))
            .unwrap();
        let l = j_matrix(&z);
        // B(e_p, e_q) = <z e_p, e_q> = L[q][p]
        for p in 0..8 {
            for q in 0..8 {
                assert_eq!(m.rows()[p][q], l[q][p]);
            }
        }
        assert!(!CaseAlgebra::C
            .pfaffian_at(&CenterElement::case_c(z))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn stabilizers() {
        let b = CaseAlgebra::B { n: 1 };
        let xj = CenterElement::case_b_imaginary(1, Quaternion::j());
        let xi = CenterElement::case_b_imaginary(1, Quaternion::i());
        assert_eq!(b.stabilizer_dimension(&xj).unwrap(), 3);
        assert_eq!(b.stabilizer_dimension(&xi).unwrap(), 4);
        let c = CenterElement::case_c(Octonion::unit(1));
        assert_eq!(CaseAlgebra::C.stabilizer_dimension(&c).unwrap(), 15);
        // generic case A point: the symplectic form, stabilizer sp(n)
        let a = CaseAlgebra::A { n: 2 };
        let x = CenterElement::case_a_from_upper(2, &[(0, 2, 1, 0), (1, 3, 1, 0)], int(0));
        assert_eq!(a.stabilizer_dimension(&x).unwrap(), 10);
    }

    fn sample_v(case: &CaseAlgebra, seed: i64) -> Vec<Rational> {
        (0..case.dim_v() as i64)
            .map(|t| int((t * 7 + seed) % 5 - 2))
            .collect()
    }

    #[test]
    fn bracket_is_equivariant() {
        let cases = [
            CaseAlgebra::A { n: 1 },
            CaseAlgebra::A { n: 2 },
            CaseAlgebra::B { n: 1 },
            CaseAlgebra::B { n: 2 },
            CaseAlgebra::C,
        ];
        for case in cases {
            let (u, v) = (sample_v(&case, 1), sample_v(&case, 3));
            let x = case
                .bracket(&sample_v(&case, 2), &sample_v(&case, 4))
                .unwrap();
            for k in 0..case.lie_dim() {
                let lhs = case
                    .bracket(&case.act_v(k, &u).unwrap(), &v)
                    .unwrap()
                    .add(&case.bracket(&u, &case.act_v(k, &v).unwrap()).unwrap())
                    .unwrap();
                let total = case.inner(&lhs, &x).unwrap()
                    + case
                        .inner(
                            &case.bracket(&u, &v).unwrap(),
                            &case.act_center(k, &x).unwrap(),
                        )
                        .unwrap();
                assert!(total.is_zero(), "{case} generator {k}");
            }
        }
    }

    #[test]
    fn octonion_h_type_identity() {
        let z = Octonion::from_ints([0, 1, -2, 0, 3, 1, 0, -1]);
        let l = j_matrix(&z);
        let sq: Vec<Vec<Rational>> = (0..8)
            .map(|p| {
                (0..8)
                    .map(|q| (0..8).map(|r| &l[p][r] * &l[r][q]).sum())
                    .collect()
            })
            .collect();
        for p in 0..8 {
            for q in 0..8 {
                let expected = if p == q { -z.norm2() } else { int(0) };
                assert_eq!(sq[p][q], expected);
            }
        }
    }

    #[test]
    fn pfaffian_squares_to_determinant() {
        for case in [
            CaseAlgebra::A { n: 1 },
            CaseAlgebra::B { n: 2 },
            CaseAlgebra::C,
        ] {
            let x = case
                .bracket(&sample_v(&case, 0), &sample_v(&case, 2))
                .unwrap();
            let x = x
                .add(
                    &case
                        .bracket(&sample_v(&case, 1), &sample_v(&case, 4))
                        .unwrap(),
                )
                .unwrap();
            let m = case.b_lambda_matrix(&x).unwrap();
            let pf = pfaffian(&m).unwrap();
            assert_eq!(&pf * &pf, m.determinant(), "{case}");
        }
    }
}
