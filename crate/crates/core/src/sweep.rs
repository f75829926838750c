//! Named batch checks. Each preset runs a finite exhaustive (or seeded
//! random) family of cases and reports every failure it finds.

use num_complex::Complex;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::classifier::{
    b3_weights, branch_so7_to_so6, c_weights, classify_triple, TripleSpec, FLAG_UNRESOLVED,
};
use crate::error::{Error, Result};
use crate::metaplectic::{multiplicity_free_scan, verify_certificate, ScanOutcome};
use crate::nilpotent::{
    determinant, j_matrix, pfaffian, CaseAlgebra, CenterElement, Gaussian, Octonion, Quaternion,
    SkewForm,
};
use crate::rational::{self, Rational};
use crate::tensor::{
    integral_d_weights, okada_row_multiplicity, okada_row_tensor, tensor_klimyk,
    verify_row2_selfcontainment,
};
use crate::weights::{AlgebraType, Decomposition, Family, HighestWeight};
use crate::Limits;

pub const SEED: u64 = 20_240_611;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Preset {
    pub name: &'static str,
    pub summary: &'static str,
}

pub const PRESETS: [Preset; 8] = [
    Preset {
        name: "okada-oracle",
        summary: "one-row rule equals Klimyk on D3, η̃_1 ≤ 3, s ≤ 4",
    },
    Preset {
        name: "constant-partitions",
        summary: "D3 scans at J=12: free exactly for (r,r,r), else duplicates at {0, 2(η̃_1−η̃_3)}",
    },
    Preset {
        name: "row2",
        summary: "η ⊂ η⊗(2) for non-trivial η over C1, C2 with η_1 ≤ 4",
    },
    Preset {
        name: "certificates",
        summary: "case A and B verdicts with duplicates exactly at {0, 2}",
    },
    Preset {
        name: "pfaffian",
        summary: "Pf² = det, case B scaling, case A vanishing locus",
    },
    Preset {
        name: "stabilizers",
        summary: "stabilizer dimensions 3, 4 (case B) and 15 (case C)",
    },
    Preset {
        name: "branching",
        summary: "so(7) ↓ so(6) multiplicity free with exact dimensions, λ_1 ≤ 5/2",
    },
    Preset {
        name: "structure",
        summary: "bracket antisymmetry and J(z)² = −|z|²",
    },
];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
    /// Informational findings that do not affect the pass/fail status.
    pub notes: Vec<String>,
}

impl SweepReport {
    fn new(name: &str) -> Self {
        SweepReport {
            name: name.to_string(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

pub fn run(name: &str, limits: &Limits) -> Result<SweepReport> {
    match name {
        "okada-oracle" => okada_oracle(limits),
        "constant-partitions" => constant_partitions(limits),
        "row2" => row2(limits),
        "certificates" => certificates(limits),
        "pfaffian" => pfaffian_laws(),
        "stabilizers" => stabilizers(),
        "branching" => branching(),
        "structure" => structure(),
        other => Err(Error::Parse(format!(
            "unknown sweep {other:?}; expected one of {}",
            PRESETS.map(|p| p.name).join(", ")
        ))),
    }
}

fn alg(family: Family, rank: usize) -> AlgebraType {
    AlgebraType::new(family, rank).expect("fixed ranks are valid")
}

fn okada_oracle(limits: &Limits) -> Result<SweepReport> {
    let d3 = alg(Family::D, 3);
    let cases: Vec<(HighestWeight, u32)> = integral_d_weights(d3, 3)
        .into_iter()
        .flat_map(|w| (0..=4).map(move |s| (w.clone(), s)))
        .collect();
    let results: Vec<(String, bool)> = cases
        .par_iter()
        .map(|(eta, s)| {
            let fast = okada_row_tensor(eta, *s)?;
            let oracle = tensor_klimyk(eta, &HighestWeight::one_row(d3, *s), limits)?;
            Ok((
                format!("{eta} ⊗ ({s},0,0): one-row {fast} vs Klimyk {oracle}"),
                fast == oracle,
            ))
        })
        .collect::<Result<_>>()?;
    let mut report = SweepReport::new("okada-oracle");
    for (what, ok) in results {
        report.check(ok, || what);
    }
    Ok(report)
}

fn constant_partitions(limits: &Limits) -> Result<SweepReport> {
    let d3 = alg(Family::D, 3);
    let weights = integral_d_weights(d3, 3);
    let verdicts = weights
        .par_iter()
        .map(|eta| multiplicity_free_scan(d3, &Decomposition::singleton(eta.clone())?, 12, limits))
        .collect::<Result<Vec<_>>>()?;
    let mut report = SweepReport::new("constant-partitions");
    for (eta, verdict) in weights.iter().zip(verdicts) {
        let c = eta.coords2();
        let constant = c[0] == c[1] && c[1] == c[2];
        let spread = ((c[0] - c[2]) / 2) as u32;
        match (&verdict.outcome, constant) {
            (ScanOutcome::MultiplicityFree, true) => report.check(true, String::new),
            (ScanOutcome::MultiplicityFree, false) => report.check(false, || {
                format!(
                    "{eta}: multiplicity free up to J=12, expected a duplicate at {{0, {}}}",
                    2 * spread
                )
            }),
            (ScanOutcome::Duplicate(cert), true) => report.check(false, || {
                format!(
                    "{eta}: duplicate {} at {:?}, expected multiplicity free",
                    cert.sigma,
                    cert.degrees()
                )
            }),
            (ScanOutcome::Duplicate(cert), false) => {
                let degrees = cert.degrees();
                report.check(degrees == vec![0, 2 * spread], || {
                    format!(
                        "{eta}: duplicate {} at {degrees:?}, expected [0, {}]",
                        cert.sigma,
                        2 * spread
                    )
                });
            }
        }
        if !constant {
            let at = okada_row_multiplicity(eta, 2 * spread, eta)?;
            if at == 0 {
                report.notes.push(format!(
                    "{eta} does not occur in {eta} ⊗ ({},0,0)",
                    2 * spread
                ));
            }
        }
    }
    Ok(report)
}

fn row2(limits: &Limits) -> Result<SweepReport> {
    let mut report = SweepReport::new("row2");
    for n in [1, 2] {
        for eta in c_weights(n, 4).into_iter().filter(|w| !w.is_trivial()) {
            let ok = verify_row2_selfcontainment(&eta, limits)?;
            report.check(ok, || format!("C{n}: {eta} missing from {eta} ⊗ (2)"));
        }
    }
    Ok(report)
}

fn certificates(limits: &Limits) -> Result<SweepReport> {
    let mut report = SweepReport::new("certificates");
    let expect = |label: String,
                  spec: TripleSpec,
                  commutative: bool,
                  report: &mut SweepReport|
     -> Result<()> {
        let c = classify_triple(&spec, None, limits)?;
        match c.certificate() {
            None => report.check(commutative, || {
                format!("{label}: Commutative, expected a duplicate at {{0, 2}}")
            }),
            Some(cert) => {
                let sound = verify_certificate(&c.restriction, cert, limits)?;
                let degrees = cert.degrees();
                report.check(!commutative && degrees == vec![0, 2] && sound, || {
                    format!(
                        "{label}: duplicate {} at {degrees:?} (re-verified: {sound})",
                        cert.sigma
                    )
                });
            }
        }
        Ok(())
    };
    let a2 = alg(Family::A, 2);
    expect(
        "A n=1 τ=(1,0)".into(),
        TripleSpec::A {
            n: 1,
            tau: HighestWeight::from_integers(a2, &[1, 0])?,
        },
        false,
        &mut report,
    )?;
    expect(
        "A n=1 τ trivial".into(),
        TripleSpec::A {
            n: 1,
            tau: HighestWeight::zero(a2),
        },
        true,
        &mut report,
    )?;
    for n in [1, 2] {
        for eta in c_weights(n, 2) {
            let trivial = eta.is_trivial();
            expect(
                format!("B n={n} η={eta}"),
                TripleSpec::B { n, r: 1, eta },
                trivial,
                &mut report,
            )?;
        }
    }
    let det = classify_triple(
        &TripleSpec::A {
            n: 1,
            tau: HighestWeight::from_integers(a2, &[1, 1])?,
        },
        None,
        limits,
    )?;
    report.check(det.flags.iter().any(|f| f == FLAG_UNRESOLVED), || {
        "A n=1 τ=det: flag missing".into()
    });
    Ok(report)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rational::ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

fn pfaffian_laws() -> Result<SweepReport> {
    let mut report = SweepReport::new("pfaffian");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);

    for t in 0..50 {
        let size = 4 + 2 * (t % 5);
        let mut m = vec![vec![rational::zero(); size]; size];
        for p in 0..size {
            for q in p + 1..size {
                let x = random_rational(&mut rng);
                m[q][p] = -x.clone();
                m[p][q] = x;
            }
        }
        let form = SkewForm::new(m)?;
        let pf = pfaffian(&form)?;
        report.check(&pf * &pf == form.determinant(), || {
            format!("random matrix {t} of size {size}: Pf² ≠ det")
        });
    }

    let units = [
        Quaternion::i(),
        Quaternion::j(),
        Quaternion::k(),
        Quaternion::from_ints(0, 1, 1, 0),
    ];
    for n in [1usize, 2] {
        let case = CaseAlgebra::B { n };
        for q in &units {
            let base = case.pfaffian_at(&CenterElement::case_b_imaginary(n, q.clone()))?;
            for t in 1..=3i64 {
                let scaled = case.pfaffian_at(&CenterElement::case_b_imaginary(
                    n,
                    q.scale(&rational::int(t)),
                ))?;
                let factor = rational::int(t.pow(2 * n as u32));
                report.check(scaled == &base * &factor, || {
                    format!("case B n={n} q={q} t={t}: {scaled} ≠ {factor}·{base}")
                });
            }
        }
    }

    for n in [1usize, 2] {
        let case = CaseAlgebra::A { n };
        for (idx, x) in case_a_grid(n, &mut rng).into_iter().enumerate() {
            let CenterElement::A { wedge, .. } = &x else {
                unreachable!()
            };
            let degenerate = determinant::<Gaussian>(wedge).is_zero();
            let si = case.square_integrable(&x)?;
            report.check(si != degenerate, || {
                format!("case A n={n} point {idx}: square integrable {si}, det zero {degenerate}")
            });
        }
    }
    Ok(report)
}

/// Twenty centers `(A, 0)` per rank: single wedges `u ∧ v` (degenerate for
/// `n = 2`), dependent pairs, zero, and sums of wedges.
fn case_a_grid(n: usize, rng: &mut ChaCha8Rng) -> Vec<CenterElement> {
    let size = 2 * n;
    let sample = |rng: &mut ChaCha8Rng| -> Vec<Gaussian> {
        (0..size)
            .map(|_| {
                Complex::new(
                    rational::int(rng.gen_range(-2..=2)),
                    rational::int(rng.gen_range(-2..=2)),
                )
            })
            .collect()
    };
    let mut out = Vec::new();
    for k in 0..20 {
        let terms = match k % 4 {
            0 => 0,
            1 => 1,
            _ => 2,
        };
        let mut wedge = vec![vec![Complex::new(rational::zero(), rational::zero()); size]; size];
        for t in 0..terms {
            let u = sample(rng);
            // every fifth point uses a dependent pair
            let v = if k % 5 == 3 && t == 0 {
                u.iter().map(|c| c * rational::int(2)).collect()
            } else {
                sample(rng)
            };
            let w = crate::nilpotent::wedge(&u, &v);
            for p in 0..size {
                for q in 0..size {
                    wedge[p][q] = &wedge[p][q] + &w[p][q];
                }
            }
        }
        out.push(CenterElement::A {
            wedge,
            s: rational::zero(),
        });
    }
    out
}

fn stabilizers() -> Result<SweepReport> {
    let mut report = SweepReport::new("stabilizers");
    let b1 = CaseAlgebra::B { n: 1 };
    let cases = [
        (
            "case B n=1 X=(0,j)",
            b1,
            CenterElement::case_b_imaginary(1, Quaternion::j()),
            3,
        ),
        (
            "case B n=1 X=(0,i)",
            b1,
            CenterElement::case_b_imaginary(1, Quaternion::i()),
            4,
        ),
        (
            "case C X=e1",
            CaseAlgebra::C,
            CenterElement::case_c(Octonion::unit(1)),
            15,
        ),
    ];
    for (label, case, x, expected) in cases {
        let got = case.stabilizer_dimension(&x)?;
        report.check(got == expected, || {
            format!("{label}: dimension {got}, expected {expected}")
        });
    }
    Ok(report)
}

fn branching() -> Result<SweepReport> {
    let mut report = SweepReport::new("branching");
    for lambda in b3_weights(5) {
        // dimension exactness is enforced inside the branching itself
        match branch_so7_to_so6(&lambda) {
            Ok(d) => report.check(d.is_multiplicity_free(), || {
                format!("{lambda}: {d} has multiplicities")
            }),
            Err(e) => report.check(false, || format!("{lambda}: {e}")),
        }
    }
    Ok(report)
}

fn structure() -> Result<SweepReport> {
    let mut report = SweepReport::new("structure");
    let cases = [
        CaseAlgebra::A { n: 1 },
        CaseAlgebra::A { n: 2 },
        CaseAlgebra::B { n: 1 },
        CaseAlgebra::B { n: 2 },
        CaseAlgebra::C,
    ];
    for case in cases {
        for p in 0..case.dim_v() {
            for q in 0..case.dim_v() {
                let (u, v) = (case.v_unit(p), case.v_unit(q));
                let sum = case.bracket(&u, &v)?.add(&case.bracket(&v, &u)?)?;
                report.check(sum.is_zero(), || {
                    format!("{case}: [e{p}, e{q}] + [e{q}, e{p}] ≠ 0")
                });
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for t in 0..10 {
        let mut z = Octonion::zero();
        for a in 1..8 {
            z.0[a] = random_rational(&mut rng);
        }
        let l = j_matrix(&z);
        let norm = z.norm2();
        let mut ok = true;
        for p in 0..8 {
            for q in 0..8 {
                let entry: Rational = (0..8).map(|r| &l[p][r] * &l[r][q]).sum();
                let expected = if p == q {
                    -norm.clone()
                } else {
                    rational::zero()
                };
                ok &= entry == expected;
            }
        }
        report.check(ok, || format!("random octonion {t} = {z}: J(z)² ≠ −|z|²"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_presets_pass() {
        for name in [
            "row2",
            "stabilizers",
            "branching",
            "structure",
            "pfaffian",
            "certificates",
        ] {
            let r = run(name, &Limits::default()).unwrap();
            assert!(r.passed(), "{name}: {:?}", r.failures);
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn case_a_grid_has_both_kinds() {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for n in [1, 2] {
            let dets: Vec<bool> = case_a_grid(n, &mut rng)
                .iter()
                .map(|x| match x {
                    CenterElement::A { wedge, .. } => determinant::<Gaussian>(wedge).is_zero(),
                    _ => unreachable!(),
                })
                .collect();
            assert_eq!(dets.len(), 20);
            assert!(
                dets.iter().any(|&d| d) && dets.iter().any(|&d| !d),
                "n={n}: {dets:?}"
            );
        }
    }

    #[test]
    fn unknown_preset_is_a_usage_error() {
        assert!(run("nope", &Limits::default()).unwrap_err().is_usage());
    }
}
