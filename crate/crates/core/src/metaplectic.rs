//! Truncated metaplectic spectra and the multiplicity-freeness scan.
//!
//! The metaplectic module of `Sp(n)` (and, through the identification used
//! for `Spin(6)`, of `so(6)`) is the sum of the one-row modules `(j,0,...,0)`,
//! each once. A restriction `τ|` gives a commutative triple exactly when
//! `ω ⊗ τ|` is multiplicity free; a scan can only certify this up to a
//! finite truncation `J`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::tensor::{okada_row_multiplicity, okada_row_tensor, tensor_klimyk};
use crate::weights::{weyl_dimension, AlgebraType, Decomposition, Family, HighestWeight};
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetaplecticSpectrum {
    pub algebra: AlgebraType,
    pub truncation: u32,
    pub components: Vec<HighestWeight>,
}

fn check_supported(algebra: AlgebraType) -> Result<()> {
    match (algebra.family(), algebra.rank()) {
        (Family::C, _) | (Family::D, 3) => Ok(()),
        _ => Err(Error::Unsupported(format!(
            "metaplectic spectra are defined here for C_n and D3, not {algebra}"
        ))),
    }
}

pub fn metaplectic_components(algebra: AlgebraType, max_j: u32) -> Result<MetaplecticSpectrum> {
    check_supported(algebra)?;
    Ok(MetaplecticSpectrum {
        algebra,
        truncation: max_j,
        components: (0..=max_j)
            .map(|j| HighestWeight::one_row(algebra, j))
            .collect(),
    })
}

/// `η ⊗ (j,0,...,0)`: interlacing rule for `D`, Klimyk oracle for `C`.
pub fn one_row_product(eta: &HighestWeight, j: u32, limits: &Limits) -> Result<Decomposition> {
    match eta.algebra().family() {
        Family::D => okada_row_tensor(eta, j),
        _ => tensor_klimyk(eta, &HighestWeight::one_row(eta.algebra(), j), limits),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Occurrence {
    pub j: u32,
    pub mult: u64,
}

/// A weight seen at least twice in `ω ⊗ τ|`, with the degrees it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub sigma: HighestWeight,
    pub occurrences: Vec<Occurrence>,
}

impl Certificate {
    pub fn total(&self) -> u64 {
        self.occurrences.iter().map(|o| o.mult).sum()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.occurrences.iter().map(|o| o.j).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanOutcome {
    MultiplicityFree,
    Duplicate(Certificate),
}

/// Outcome of a bounded scan. For a duplicate, `scanned_j` is the degree at
/// which the scan stopped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub scanned_j: u32,
    pub outcome: ScanOutcome,
}

impl Verdict {
    pub fn is_multiplicity_free(&self) -> bool {
        self.outcome == ScanOutcome::MultiplicityFree
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match &self.outcome {
            ScanOutcome::Duplicate(c) => Some(c),
            ScanOutcome::MultiplicityFree => None,
        }
    }
}

/// `max(12, 2·spread + 2)` where spread is the largest `η_1 − η_m` among
/// the components.
pub fn default_scan_bound(tau: &Decomposition) -> u32 {
    let spread = tau
        .iter()
        .map(|(w, _)| {
            let c = w.coords2();
            ((c[0] - c[c.len() - 1]) / 2).max(0) as u32
        })
        .max()
        .unwrap_or(0);
    12.max(2 * spread + 2)
}

/// Accumulates `(⊕_{j≤J} (j)) ⊗ τ|` degree by degree and stops after the
/// first degree at which some weight has cumulative multiplicity two or
/// more. Among such weights the lexicographically smallest is reported,
/// together with every degree it has appeared in so far.
pub fn multiplicity_free_scan(
    algebra: AlgebraType,
    tau: &Decomposition,
    max_j: u32,
    limits: &Limits,
) -> Result<Verdict> {
    check_supported(algebra)?;
    if tau.algebra() != algebra {
        return Err(Error::AlgebraMismatch {
            left: algebra.to_string(),
            right: tau.algebra().to_string(),
        });
    }
    if tau.is_empty() {
        return Err(Error::InvalidElement("empty restriction".into()));
    }

    // degrees are independent; the merge below is sequential in j
    let per_degree: Vec<BTreeMap<HighestWeight, u64>> = (0..=max_j)
        .into_par_iter()
        .map(|j| {
            let mut level: BTreeMap<HighestWeight, u64> = BTreeMap::new();
            for (eta, c) in tau.iter() {
                for (sigma, m) in one_row_product(eta, j, limits)?.iter() {
                    *level.entry(sigma.clone()).or_insert(0) += c * m;
                }
            }
            Ok(level)
        })
        .collect::<Result<_>>()?;

    let mut seen: BTreeMap<HighestWeight, Vec<Occurrence>> = BTreeMap::new();
    for (j, level) in per_degree.into_iter().enumerate() {
        let j = j as u32;
        for (sigma, mult) in level {
            seen.entry(sigma).or_default().push(Occurrence { j, mult });
        }
        let duplicate = seen
            .iter()
            .find(|(_, occ)| occ.iter().map(|o| o.mult).sum::<u64>() >= 2);
        if let Some((sigma, occ)) = duplicate {
            return Ok(Verdict {
                scanned_j: j,
                outcome: ScanOutcome::Duplicate(Certificate {
                    sigma: sigma.clone(),
                    occurrences: occ.clone(),
                }),
            });
        }
    }
    Ok(Verdict {
        scanned_j: max_j,
        outcome: ScanOutcome::MultiplicityFree,
    })
}

/// Recomputes every listed occurrence independently: the interlacing count
/// for `D`, the Klimyk oracle for `C`, weighted by the multiplicities in
/// `τ|`.
pub fn verify_certificate(
    tau: &Decomposition,
    cert: &Certificate,
    limits: &Limits,
) -> Result<bool> {
    if cert.total() < 2 {
        return Ok(false);
    }
    for occ in &cert.occurrences {
        if occ.mult == 0 {
            return Ok(false);
        }
        let mut recomputed = 0;
        for (eta, c) in tau.iter() {
            let m = match eta.algebra().family() {
                Family::D => okada_row_multiplicity(eta, occ.j, &cert.sigma)?,
                _ => tensor_klimyk(eta, &HighestWeight::one_row(eta.algebra(), occ.j), limits)?
                    .multiplicity(&cert.sigma),
            };
            recomputed += c * m;
        }
        if recomputed != occ.mult {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One row of the informational comparison between `dim P_j(C^4)` and the
/// dimension of the `so(6)` one-row module `(j,0,0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionRow {
    pub j: u32,
    pub polynomial_dim: u64,
    pub one_row_dim: u64,
}

/// Informational only: the two sides agree at `j = 0` and differ afterwards.
pub fn d3_dimension_report(max_j: u32) -> Result<Vec<DimensionRow>> {
    let d3 = AlgebraType::new(Family::D, 3)?;
    (0..=max_j)
        .map(|j| {
            let n = j as u64;
            Ok(DimensionRow {
                j,
                polynomial_dim: (n + 1) * (n + 2) * (n + 3) / 6,
                one_row_dim: weyl_dimension(&HighestWeight::one_row(d3, j))?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(s: &str) -> AlgebraType {
        s.parse().unwrap()
    }

    fn hw(s: &str, c: &[i64]) -> HighestWeight {
        HighestWeight::from_integers(alg(s), c).unwrap()
    }

    fn single(s: &str, c: &[i64]) -> Decomposition {
        Decomposition::singleton(hw(s, c)).unwrap()
    }

    #[test]
    fn components() {
        let spec = metaplectic_components(alg("C2"), 2).unwrap();
        assert_eq!(
            spec.components,
            vec![hw("C2", &[0, 0]), hw("C2", &[1, 0]), hw("C2", &[2, 0])]
        );
        let spec = metaplectic_components(alg("D3"), 1).unwrap();
        assert_eq!(
            spec.components,
            vec![hw("D3", &[0, 0, 0]), hw("D3", &[1, 0, 0])]
        );
        let spec = metaplectic_components(alg("C1"), 0).unwrap();
        assert_eq!(spec.components, vec![hw("C1", &[0])]);
        assert!(metaplectic_components(alg("B3"), 2).is_err());
        assert!(metaplectic_components(alg("D4"), 2).is_err());
    }

    #[test]
    fn constant_partition_is_free() {
        let l = Limits::default();
        let v = multiplicity_free_scan(alg("D3"), &single("D3", &[1, 1, 1]), 10, &l).unwrap();
        assert_eq!(
            v,
            Verdict {
                scanned_j: 10,
                outcome: ScanOutcome::MultiplicityFree
            }
        );
    }

    #[test]
    fn d3_210_duplicates_at_degree_two() {
        // η̃ = (2,1,0) already occurs twice inside η̃ ⊗ (2,0,0)
        let l = Limits::default();
        let tau = single("D3", &[2, 1, 0]);
        let v = multiplicity_free_scan(alg("D3"), &tau, 6, &l).unwrap();
        let cert = v.certificate().unwrap();
        assert_eq!(v.scanned_j, 2);
        assert_eq!(cert.sigma, hw("D3", &[2, 1, 0]));
        assert_eq!(
            cert.occurrences,
            vec![Occurrence { j: 0, mult: 1 }, Occurrence { j: 2, mult: 2 }]
        );
        assert!(verify_certificate(&tau, cert, &l).unwrap());
        // the degree 2(η̃_1 − η̃_3) = 4 is also an occurrence
        assert_eq!(
            okada_row_multiplicity(&hw("D3", &[2, 1, 0]), 4, &hw("D3", &[2, 1, 0])).unwrap(),
            1
        );
    }

    #[test]
    fn symplectic_duplicate_at_zero_and_two() {
        let l = Limits::default();
        for (tag, c) in [("C1", vec![1]), ("C2", vec![1, 0]), ("C2", vec![2, 1])] {
            let tau = single(tag, &c);
            let v = multiplicity_free_scan(alg(tag), &tau, 2, &l).unwrap();
            let cert = v.certificate().expect("duplicate");
            assert_eq!(cert.sigma, hw(tag, &c));
            assert_eq!(cert.degrees(), vec![0, 2]);
            assert!(verify_certificate(&tau, cert, &l).unwrap());
        }
    }

    #[test]
    fn repeated_component_is_immediate_duplicate() {
        let l = Limits::default();
        let tau = Decomposition::from_terms(alg("D3"), [(hw("D3", &[1, 1, 1]), 2)]).unwrap();
        let v = multiplicity_free_scan(alg("D3"), &tau, 5, &l).unwrap();
        assert_eq!(v.scanned_j, 0);
        assert_eq!(
            v.certificate().unwrap().occurrences,
            vec![Occurrence { j: 0, mult: 2 }]
        );
    }

    #[test]
    fn bad_certificates_fail_verification() {
        let l = Limits::default();
        let tau = single("D3", &[2, 1, 0]);
        let forged = Certificate {
            sigma: hw("D3", &[2, 1, 0]),
            occurrences: vec![Occurrence { j: 0, mult: 1 }, Occurrence { j: 1, mult: 1 }],
        };
        assert!(!verify_certificate(&tau, &forged, &l).unwrap());
    }

    #[test]
    fn default_bound() {
        assert_eq!(default_scan_bound(&single("D3", &[1, 1, 1])), 12);
        assert_eq!(default_scan_bound(&single("D3", &[3, 3, -3])), 14);
        assert_eq!(default_scan_bound(&single("C2", &[9, 0])), 20);
    }

    #[test]
    fn dimension_report_differs_after_zero() {
        let rows = d3_dimension_report(3).unwrap();
        assert_eq!(rows[0].polynomial_dim, rows[0].one_row_dim);
        assert_eq!((rows[1].polynomial_dim, rows[1].one_row_dim), (4, 6));
        assert_eq!((rows[2].polynomial_dim, rows[2].one_row_dim), (10, 20));
    }
}
