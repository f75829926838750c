//! Commutativity verdicts for triples `(K ⋉ N, K, τ)` over the case algebras.
//!
//! The pipeline picks one square-integrable stratum per case, restricts `τ`
//! to the stabilizer `K_λ` there and scans `ω ⊗ τ|` for repeated
//! constituents:
//!
//! | case | stratum       | `K_λ`    | restriction                |
//! |------|---------------|----------|----------------------------|
//! | A    | `(Σ e_p ∧ e_{n+p}, 0)` | `Sp(n)`  | weight restriction from `U(2n)` |
//! | B    | `(0, j)`      | `Sp(n)`  | `η`                        |
//! | C    | `e1`          | `Spin(6)`| supplied, or interlacing branching from `so(7)` |

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::metaplectic::{default_scan_bound, multiplicity_free_scan, Certificate, ScanOutcome};
use crate::nilpotent::{CaseAlgebra, CenterElement, Octonion, Quaternion};
use crate::rational;
use crate::weights::{
    dot, freudenthal_multiplicities, weyl_dimension, AlgebraType, Decomposition, Family,
    HighestWeight,
};
use crate::Limits;

/// Flag for `det^k`, `k ≠ 0`, in case A: the generic stratum sees a trivial
/// restriction, while the classification claims non-commutativity for every
/// non-trivial `τ`. Neither direction is overridden.
pub const FLAG_UNRESOLVED: &str = "UNRESOLVED-BY-PAPER";
/// Flag for case C inputs given at the `so(7)` level.
pub const FLAG_SPIN7: &str = "SPIN7-INTERPRETATION";

fn alg(family: Family, rank: usize) -> AlgebraType {
    AlgebraType::new(family, rank).expect("rank validated by caller")
}

/// Interlacing branching `so(7) ↓ so(6)`:
/// `λ_1 ≥ μ_1 ≥ λ_2 ≥ μ_2 ≥ λ_3 ≥ |μ_3|` with `μ` in the parity class of `λ`.
pub fn branch_so7_to_so6(lambda: &HighestWeight) -> Result<Decomposition> {
    let b3 = lambda.algebra();
    if b3.family() != Family::B || b3.rank() != 3 {
        return Err(Error::Unsupported(format!(
            "branching is from B3, got {b3}"
        )));
    }
    lambda.ensure_dominant()?;
    let d3 = alg(Family::D, 3);
    let l = lambda.coords2();
    let mut out = Decomposition::new(d3);
    for m1 in (l[1]..=l[0]).step_by(2) {
        for m2 in (l[2]..=l[1]).step_by(2) {
            for m3 in (-l[2]..=l[2]).step_by(2) {
                out.add(HighestWeight::new(d3, vec![m1, m2, m3])?, 1)?;
            }
        }
    }
    let expected = weyl_dimension(lambda)?;
    let got = out.total_dimension()?;
    if got != expected {
        return Err(Error::Consistency(format!(
            "branching of {lambda} has dimension {got}, expected {expected}"
        )));
    }
    Ok(out)
}

/// Restriction of a `u(2n)` module to `Sp(n)`, embedded so that the torus
/// element `H_i` is `E_ii − E_{n+i,n+i}`.
pub fn restrict_u2n_to_spn(
    tau: &HighestWeight,
    n: usize,
    limits: &Limits,
) -> Result<Decomposition> {
    if !(1..=2).contains(&n) {
        return Err(Error::Unsupported(format!(
            "restriction to Sp(n) is implemented for n ∈ {{1, 2}}, got {n}"
        )));
    }
    let source = tau.algebra();
    if source.family() != Family::A || source.rank() != 2 * n {
        return Err(Error::AlgebraMismatch {
            left: format!("A{}", 2 * n),
            right: source.to_string(),
        });
    }
    let target = alg(Family::C, n);
    let mut remaining: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (mu, m) in freudenthal_multiplicities(tau, limits)? {
        let r: Vec<i64> = (0..n).map(|i| mu[i] - mu[n + i]).collect();
        *remaining.entry(r).or_insert(0) += m as i64;
    }
    peel(target, remaining, limits, weyl_dimension(tau)?)
}

/// Splits a Weyl-invariant weight multiset into irreducible characters by
/// repeatedly removing the module of the highest remaining weight.
fn peel(
    algebra: AlgebraType,
    mut remaining: BTreeMap<Vec<i64>, i64>,
    limits: &Limits,
    expected_dim: u64,
) -> Result<Decomposition> {
    let rho = algebra.rho2();
    let mut out = Decomposition::new(algebra);
    loop {
        remaining.retain(|_, m| *m != 0);
        let Some((top, m)) = remaining
            .iter()
            .max_by_key(|(mu, _)| (dot(mu, &rho), (*mu).clone()))
            .map(|(mu, m)| (mu.clone(), *m))
        else {
            break;
        };
        let w = HighestWeight::new(algebra, top.clone())?;
        if m < 0 || !w.is_dominant() {
            return Err(Error::Consistency(format!(
                "restriction is not a character at {top:?}"
            )));
        }
        for (nu, k) in freudenthal_multiplicities(&w, limits)? {
            *remaining.entry(nu).or_insert(0) -= m * k as i64;
        }
        out.add(w, m as u64)?;
    }
    if out.total_dimension()? != expected_dim {
        return Err(Error::Consistency("restriction lost dimension".into()));
    }
    Ok(out)
}

/// Case B: at the stratum `(0, j)` the circle factor acts trivially on the
/// stabilizer, so `τ| = η`.
pub fn restrict_case_b(_r: i64, eta: &HighestWeight) -> Result<Decomposition> {
    if eta.algebra().family() != Family::C {
        return Err(Error::AlgebraMismatch {
            left: format!("C{}", eta.algebra().rank()),
            right: eta.algebra().to_string(),
        });
    }
    Decomposition::singleton(eta.clone())
}

/// Case C input: a `so(7)` weight to be branched, or the `so(6)` restriction
/// itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseCTau {
    So7(HighestWeight),
    So6(Decomposition),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TripleSpec {
    A {
        n: usize,
        tau: HighestWeight,
    },
    B {
        n: usize,
        r: i64,
        eta: HighestWeight,
    },
    C {
        tau: CaseCTau,
    },
}

impl TripleSpec {
    pub fn case(&self) -> CaseAlgebra {
        match *self {
            TripleSpec::A { n, .. } => CaseAlgebra::A { n },
            TripleSpec::B { n, .. } => CaseAlgebra::B { n },
            TripleSpec::C { .. } => CaseAlgebra::C,
        }
    }

    fn validate(&self) -> Result<()> {
        let expect = |w: &HighestWeight, family: Family, rank: usize| {
            let want = alg(family, rank);
            if w.algebra() != want {
                return Err(Error::AlgebraMismatch {
                    left: want.to_string(),
                    right: w.algebra().to_string(),
                });
            }
            w.ensure_dominant()
        };
        match self {
            TripleSpec::A { n, tau } => expect(tau, Family::A, 2 * n),
            TripleSpec::B { n, eta, .. } => expect(eta, Family::C, *n),
            TripleSpec::C {
                tau: CaseCTau::So7(w),
            } => expect(w, Family::B, 3),
            TripleSpec::C {
                tau: CaseCTau::So6(d),
            } => {
                if d.algebra() != alg(Family::D, 3) {
                    return Err(Error::AlgebraMismatch {
                        left: "D3".into(),
                        right: d.algebra().to_string(),
                    });
                }
                if d.is_empty() {
                    return Err(Error::InvalidElement("empty so(6) restriction".into()));
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TripleKind {
    Commutative,
    NonCommutative(Certificate),
}

/// A stratum the pipeline checked, with its exact invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumReport {
    pub center: CenterElement,
    pub square_integrable: bool,
    pub stabilizer_dim: usize,
    pub expected_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub kind: TripleKind,
    /// Scan depth: the verdict is a statement about `j ≤ scanned_j` only.
    pub scanned_j: u32,
    pub restriction: Decomposition,
    pub strata: Vec<StratumReport>,
    pub flags: Vec<String>,
}

impl Classification {
    pub fn is_commutative(&self) -> bool {
        matches!(self.kind, TripleKind::Commutative)
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match &self.kind {
            TripleKind::NonCommutative(c) => Some(c),
            TripleKind::Commutative => None,
        }
    }
}

fn sp_dim(n: usize) -> usize {
    2 * n * n + n
}

/// The generic stratum of each case together with `dim K_λ` there.
pub fn generic_stratum(case: &CaseAlgebra) -> (CenterElement, usize) {
    match *case {
        CaseAlgebra::A { n } => {
            let pairs: Vec<(usize, usize, i64, i64)> = (0..n).map(|p| (p, n + p, 1, 0)).collect();
            (
                CenterElement::case_a_from_upper(n, &pairs, rational::zero()),
                sp_dim(n),
            )
        }
        CaseAlgebra::B { n } => (
            CenterElement::case_b_imaginary(n, Quaternion::j()),
            sp_dim(n),
        ),
        CaseAlgebra::C => (CenterElement::case_c(Octonion::unit(1)), 15),
    }
}

fn check_stratum(
    case: &CaseAlgebra,
    center: CenterElement,
    expected_dim: usize,
) -> Result<StratumReport> {
    let report = StratumReport {
        square_integrable: case.square_integrable(&center)?,
        stabilizer_dim: case.stabilizer_dimension(&center)?,
        center,
        expected_dim,
    };
    if !report.square_integrable || report.stabilizer_dim != expected_dim {
        return Err(Error::Consistency(format!(
            "stratum {} of case {case}: square integrable {}, stabilizer dimension {} (expected {expected_dim})",
            report.center, report.square_integrable, report.stabilizer_dim
        )));
    }
    Ok(report)
}

/// Runs the pipeline. `max_j = None` uses [`default_scan_bound`] of the
/// restriction.
pub fn classify_triple(
    spec: &TripleSpec,
    max_j: Option<u32>,
    limits: &Limits,
) -> Result<Classification> {
    spec.validate()?;
    let case = spec.case();
    let (center, dim) = generic_stratum(&case);
    let mut strata = vec![check_stratum(&case, center, dim)?];
    let mut flags = Vec::new();

    let restriction = match spec {
        TripleSpec::A { n, tau } => {
            let c = tau.coords2();
            if c[0] != 0 && c.iter().all(|&x| x == c[0]) {
                flags.push(FLAG_UNRESOLVED.to_string());
            }
            restrict_u2n_to_spn(tau, *n, limits)?
        }
        TripleSpec::B { n, r, eta } => {
            if eta.is_trivial() {
                // at (0, i) the stabilizer is all of K and τ is a character
                let x = CenterElement::case_b_imaginary(*n, Quaternion::i());
                strata.push(check_stratum(&case, x, case.lie_dim())?);
            }
            restrict_case_b(*r, eta)?
        }
        TripleSpec::C {
            tau: CaseCTau::So6(d),
        } => d.clone(),
        TripleSpec::C {
            tau: CaseCTau::So7(w),
        } => {
            flags.push(FLAG_SPIN7.to_string());
            branch_so7_to_so6(w)?
        }
    };

    let scanned = max_j.unwrap_or_else(|| default_scan_bound(&restriction));
    if restriction.is_trivial_isotypic() {
        // ω itself is multiplicity free
        return Ok(Classification {
            kind: if restriction.is_multiplicity_free() {
                TripleKind::Commutative
            } else {
                trivial_duplicate(&restriction)
            },
            scanned_j: scanned,
            restriction,
            strata,
            flags,
        });
    }
    if restriction.iter().any(|(w, _)| w.is_spin()) {
        return Err(Error::SpinParity(
            "the one-row rule is stated for integral weights; spin restrictions are not scanned"
                .into(),
        ));
    }
    let verdict = multiplicity_free_scan(restriction.algebra(), &restriction, scanned, limits)?;
    let kind = match verdict.outcome {
        ScanOutcome::MultiplicityFree => TripleKind::Commutative,
        ScanOutcome::Duplicate(cert) => TripleKind::NonCommutative(cert),
    };
    Ok(Classification {
        kind,
        scanned_j: verdict.scanned_j,
        restriction,
        strata,
        flags,
    })
}

/// `m·trivial` with `m ≥ 2` already repeats at `j = 0`.
fn trivial_duplicate(restriction: &Decomposition) -> TripleKind {
    let (sigma, mult) = restriction.iter().next().expect("non-empty");
    TripleKind::NonCommutative(Certificate {
        sigma: sigma.clone(),
        occurrences: vec![crate::metaplectic::Occurrence { j: 0, mult }],
    })
}

/// Whether the restriction has a non-trivial constituent.
pub fn has_nontrivial_component(d: &Decomposition) -> bool {
    d.iter().any(|(w, _)| !w.is_trivial())
}

/// All `B_3` weights with `λ_1 ≤ max2 / 2`, integral and spin.
pub fn b3_weights(max2: i64) -> Vec<HighestWeight> {
    let b3 = alg(Family::B, 3);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for a in 0..=max2 {
        for b in 0..=a {
            for c in 0..=b {
                let Ok(w) = HighestWeight::new(b3, vec![a, b, c]) else {
                    continue;
                };
                if w.is_dominant() && seen.insert(w.clone()) {
                    out.push(w);
                }
            }
        }
    }
    out
}

/// Dominant `C_n` weights with `η_1 ≤ max_first`.
pub fn c_weights(n: usize, max_first: i64) -> Vec<HighestWeight> {
    let cn = alg(Family::C, n);
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                let hi = p.last().copied().unwrap_or(max_first);
                (0..=hi).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|c| HighestWeight::from_integers(cn, &c).expect("length n"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::integral_d_weights;

    fn w(a: &str, c: &[i64]) -> HighestWeight {
        HighestWeight::from_integers(a.parse().unwrap(), c).unwrap()
    }

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn so7_branching_examples() {
        let b3: AlgebraType = "B3".parse().unwrap();
        let triv = branch_so7_to_so6(&HighestWeight::zero(b3)).unwrap();
        assert_eq!(triv.to_string(), "(0,0,0)");
        let vec7 = branch_so7_to_so6(&w("B3", &[1, 0, 0])).unwrap();
        assert_eq!(vec7.to_string(), "(1,0,0) + (0,0,0)");
        let spin = branch_so7_to_so6(&HighestWeight::new(b3, vec![1, 1, 1]).unwrap()).unwrap();
        assert_eq!(spin.to_string(), "(1/2,1/2,1/2) + (1/2,1/2,-1/2)");
        assert!(branch_so7_to_so6(&w("D3", &[1, 0, 0])).is_err());
    }

    #[test]
    fn branching_is_multiplicity_free() {
        for lambda in b3_weights(5) {
            let d = branch_so7_to_so6(&lambda).unwrap();
            assert!(d.is_multiplicity_free(), "{lambda}");
        }
    }

    #[test]
    fn u2_restrictions() {
        assert_eq!(
            restrict_u2n_to_spn(&w("A2", &[1, 0]), 1, &l())
                .unwrap()
                .to_string(),
            "(1)"
        );
        assert_eq!(
            restrict_u2n_to_spn(&w("A2", &[2, 0]), 1, &l())
                .unwrap()
                .to_string(),
            "(2)"
        );
        assert_eq!(
            restrict_u2n_to_spn(&w("A2", &[3, 3]), 1, &l())
                .unwrap()
                .to_string(),
            "(0)"
        );
        assert_eq!(
            restrict_u2n_to_spn(&w("A2", &[-1, -1]), 1, &l())
                .unwrap()
                .to_string(),
            "(0)"
        );
        assert!(restrict_u2n_to_spn(&w("A6", &[0; 6]), 3, &l()).is_err());
    }

    #[test]
    fn u4_restrictions() {
        // Λ²C⁴ = (1,1) ⊕ trivial under Sp(2); C⁴ stays irreducible
        assert_eq!(
            restrict_u2n_to_spn(&w("A4", &[1, 1, 0, 0]), 2, &l())
                .unwrap()
                .to_string(),
            "(1,1) + (0,0)"
        );
        assert_eq!(
            restrict_u2n_to_spn(&w("A4", &[1, 0, 0, 0]), 2, &l())
                .unwrap()
                .to_string(),
            "(1,0)"
        );
        assert_eq!(
            restrict_u2n_to_spn(&w("A4", &[2, 0, 0, 0]), 2, &l())
                .unwrap()
                .to_string(),
            "(2,0)"
        );
    }

    #[test]
    fn case_b_restriction() {
        assert_eq!(
            restrict_case_b(5, &w("C1", &[0])).unwrap().to_string(),
            "(0)"
        );
        assert_eq!(
            restrict_case_b(0, &w("C2", &[1, 0])).unwrap().to_string(),
            "(1,0)"
        );
        assert_eq!(
            restrict_case_b(-2, &w("C2", &[2, 1])).unwrap().to_string(),
            "(2,1)"
        );
    }

    #[test]
    fn case_a_verdicts() {
        let triv = classify_triple(
            &TripleSpec::A {
                n: 1,
                tau: w("A2", &[0, 0]),
            },
            None,
            &l(),
        )
        .unwrap();
        assert!(triv.is_commutative());
        assert_eq!(triv.scanned_j, 12);
        let std = classify_triple(
            &TripleSpec::A {
                n: 1,
                tau: w("A2", &[1, 0]),
            },
            None,
            &l(),
        )
        .unwrap();
        let cert = std.certificate().unwrap();
        assert_eq!(cert.sigma, w("C1", &[1]));
        assert_eq!(cert.degrees(), vec![0, 2]);
        let det = classify_triple(
            &TripleSpec::A {
                n: 1,
                tau: w("A2", &[2, 2]),
            },
            None,
            &l(),
        )
        .unwrap();
        assert!(det.is_commutative());
        assert_eq!(det.flags, vec![FLAG_UNRESOLVED]);
    }

    #[test]
    fn case_b_verdicts() {
        for n in [1, 2] {
            let eta = HighestWeight::zero(alg(Family::C, n));
            let c = classify_triple(&TripleSpec::B { n, r: 3, eta }, None, &l()).unwrap();
            assert!(c.is_commutative());
            assert_eq!(c.strata.len(), 2);
            assert_eq!(c.strata[1].stabilizer_dim, CaseAlgebra::B { n }.lie_dim());
        }
        let c = classify_triple(
            &TripleSpec::B {
                n: 2,
                r: 0,
                eta: w("C2", &[1, 0]),
            },
            None,
            &l(),
        )
        .unwrap();
        assert_eq!(c.certificate().unwrap().degrees(), vec![0, 2]);
    }

    #[test]
    fn case_c_verdicts() {
        let d3: AlgebraType = "D3".parse().unwrap();
        let single = |c: &[i64]| TripleSpec::C {
            tau: CaseCTau::So6(Decomposition::singleton(w("D3", c)).unwrap()),
        };
        let c = classify_triple(&single(&[1, 1, 1]), Some(12), &l()).unwrap();
        assert!(c.is_commutative());
        assert_eq!(c.strata[0].stabilizer_dim, 15);
        let nc = classify_triple(&single(&[2, 1, 0]), None, &l()).unwrap();
        let cert = nc.certificate().unwrap();
        assert_eq!(cert.sigma, w("D3", &[2, 1, 0]));
        assert_eq!(cert.degrees()[0], 0);

        // bounded sweep: multiplicity free exactly when η̃_1 = η̃_2 = |η̃_3|
        for eta in integral_d_weights(d3, 3) {
            let c = eta.coords2();
            let v =
                classify_triple(&single(&[c[0] / 2, c[1] / 2, c[2] / 2]), Some(12), &l()).unwrap();
            assert_eq!(
                v.is_commutative(),
                c[0] == c[1] && c[1] == c[2].abs(),
                "{eta}"
            );
        }
    }

    #[test]
    fn so7_inputs_are_flagged() {
        let spec = TripleSpec::C {
            tau: CaseCTau::So7(w("B3", &[1, 0, 0])),
        };
        let c = classify_triple(&spec, None, &l()).unwrap();
        assert_eq!(c.flags, vec![FLAG_SPIN7]);
        assert!(!c.is_commutative());
    }

    #[test]
    fn rejects_mismatched_specs() {
        let e = classify_triple(
            &TripleSpec::A {
                n: 1,
                tau: w("C1", &[1]),
            },
            None,
            &l(),
        )
        .unwrap_err();
        assert_eq!(e.code(), "E_ALGEBRA_MISMATCH");
    }
}
