//! Tensor product decompositions.
//!
//! [`tensor_klimyk`] is the general brute-force route: expand the weights of
//! one factor with Freudenthal's recursion and reflect each shifted weight
//! back into the dominant chamber. [`okada_row_tensor`] is the fast
//! interlacing rule for `so(2m)` tensored with a one-row module; the two are
//! checked against each other in the acceptance suite.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::weights::{
    check_ceiling, freudenthal_multiplicities, to_dominant, weyl_dimension, AlgebraType,
    Decomposition, Family, HighestWeight,
};
use crate::Limits;

pub fn tensor_klimyk(
    a: &HighestWeight,
    b: &HighestWeight,
    limits: &Limits,
) -> Result<Decomposition> {
    if a.algebra() != b.algebra() {
        return Err(Error::AlgebraMismatch {
            left: a.algebra().to_string(),
            right: b.algebra().to_string(),
        });
    }
    let (dim_a, dim_b) = (weyl_dimension(a)?, weyl_dimension(b)?);
    let product = dim_a.saturating_mul(dim_b);
    check_ceiling(product, limits)?;

    // the product is symmetric; expand whichever factor has fewer weights
    let (fixed, expanded) = if dim_b <= dim_a { (a, b) } else { (b, a) };
    let algebra = a.algebra();
    let rho = algebra.rho2();
    let weights = freudenthal_multiplicities(expanded, limits)?;

    let mut acc: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (mu, m) in &weights {
        let shifted: Vec<i64> = fixed
            .coords2()
            .iter()
            .zip(&rho)
            .zip(mu)
            .map(|((x, r), y)| x + r + y)
            .collect();
        let chamber = to_dominant(&algebra, &shifted);
        if chamber.on_wall {
            continue;
        }
        let top: Vec<i64> = chamber
            .vector
            .iter()
            .zip(&rho)
            .map(|(x, r)| x - r)
            .collect();
        *acc.entry(top).or_insert(0) += chamber.sign * *m as i64;
    }

    let mut out = Decomposition::new(algebra);
    for (coords, m) in acc {
        if m < 0 {
            return Err(Error::Consistency(format!(
                "negative Klimyk coefficient {m} at {coords:?}"
            )));
        }
        if m > 0 {
            out.add(HighestWeight::new(algebra, coords)?, m as u64)?;
        }
    }
    Ok(out)
}

/// One sequence `ς` counted by the one-row interlacing rule.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct InterlacingWitness {
    pub varsigma: Vec<i64>,
    pub s: u32,
}

impl InterlacingWitness {
    /// `ς_1 ≥ ... ≥ ς_{m-1} ≥ |ς_m|`.
    pub fn is_interlacing_dominant(&self) -> bool {
        let v = &self.varsigma;
        let m = v.len();
        v.windows(2).all(|w| w[0] >= w[1]) && v[m - 2] >= v[m - 1].abs()
    }
}

fn integral_d_coords(w: &HighestWeight) -> Result<Vec<i64>> {
    if w.algebra().family() != Family::D {
        return Err(Error::Unsupported(format!(
            "one-row rule is stated for so(2m), got {}",
            w.algebra()
        )));
    }
    w.ensure_dominant()?;
    w.integer_coords()
        .ok_or_else(|| Error::SpinParity(format!("{w} is a spin weight")))
}

/// All `ς` satisfying the four interlacing conditions for `σ ⊂ η̃ ⊗ η̃_(s)`.
///
/// Condition (ii) is read as two simultaneous chains, one against `η̃` and
/// one against `σ`; together with (iv) this pins `ς_m` to `min(η̃_m, σ_m)`.
pub fn okada_row_witnesses(
    eta: &HighestWeight,
    s: u32,
    sigma: &HighestWeight,
) -> Result<Vec<InterlacingWitness>> {
    if eta.algebra() != sigma.algebra() {
        return Err(Error::AlgebraMismatch {
            left: eta.algebra().to_string(),
            right: sigma.algebra().to_string(),
        });
    }
    let e = integral_d_coords(eta)?;
    let g = integral_d_coords(sigma)?;
    Ok(interlacing_sequences(&e, s as i64, &g)
        .into_iter()
        .map(|varsigma| InterlacingWitness { varsigma, s })
        .collect())
}

fn interlacing_sequences(eta: &[i64], s: i64, sigma: &[i64]) -> Vec<Vec<i64>> {
    let m = eta.len();
    // (ii): upper and lower bounds for ς_1..ς_{m-1}
    let bounds: Vec<(i64, i64)> = (0..m - 1)
        .map(|i| (eta[i + 1].max(sigma[i + 1]), eta[i].min(sigma[i])))
        .collect();
    // (ii) last link and (iv)
    let last_cap = eta[m - 1].min(sigma[m - 1]);
    let mut lasts: Vec<i64> = vec![eta[m - 1], sigma[m - 1]];
    lasts.retain(|&x| x <= last_cap);
    lasts.dedup();
    let total: i64 = eta.iter().sum::<i64>() + sigma.iter().sum::<i64>();

    let mut found = Vec::new();
    let mut current = vec![0i64; m];
    fn walk(
        i: usize,
        bounds: &[(i64, i64)],
        lasts: &[i64],
        total: i64,
        s: i64,
        current: &mut Vec<i64>,
        found: &mut Vec<Vec<i64>>,
    ) {
        let m = current.len();
        if i == m - 1 {
            for &last in lasts {
                current[m - 1] = last;
                let interlaced = current.windows(2).all(|w| w[0] >= w[1])
                    && current[m - 2] >= current[m - 1].abs();
                let sum: i64 = current.iter().sum();
                if interlaced && total - 2 * sum == s {
                    found.push(current.clone());
                }
            }
            return;
        }
        let (lo, hi) = bounds[i];
        for x in lo..=hi {
            current[i] = x;
            walk(i + 1, bounds, lasts, total, s, current, found);
        }
    }
    if bounds.iter().all(|(lo, hi)| lo <= hi) {
        walk(0, &bounds, &lasts, total, s, &mut current, &mut found);
    }
    found
}

pub fn okada_row_multiplicity(eta: &HighestWeight, s: u32, sigma: &HighestWeight) -> Result<u64> {
    Ok(okada_row_witnesses(eta, s, sigma)?.len() as u64)
}

/// Dominant integral `so(2m)` weights with `|σ_i| ≤ bound`.
fn d_weights_in_box(m: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; m];
    fn rec(i: usize, upper: i64, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let m = cur.len();
        if i == m - 1 {
            for x in -upper..=upper {
                cur[i] = x;
                out.push(cur.clone());
            }
            return;
        }
        for x in 0..=upper.min(bound) {
            cur[i] = x;
            rec(i + 1, x, bound, cur, out);
        }
    }
    rec(0, bound, bound, &mut cur, &mut out);
    out
}

/// Full decomposition of `η̃ ⊗ η̃_(s)` over `so(2m)` by the interlacing rule.
pub fn okada_row_tensor(eta: &HighestWeight, s: u32) -> Result<Decomposition> {
    let e = integral_d_coords(eta)?;
    let algebra = eta.algebra();
    let bound = e[0] + s as i64;
    let parity = (e.iter().sum::<i64>() + s as i64).rem_euclid(2);
    let terms: Vec<(Vec<i64>, u64)> = d_weights_in_box(e.len(), bound)
        .into_par_iter()
        .filter(|g| g.iter().sum::<i64>().rem_euclid(2) == parity)
        .filter_map(|g| {
            let c = interlacing_sequences(&e, s as i64, &g).len() as u64;
            (c > 0).then_some((g, c))
        })
        .collect();
    let mut out = Decomposition::new(algebra);
    for (g, c) in terms {
        out.add(HighestWeight::from_integers(algebra, &g)?, c)?;
    }
    Ok(out)
}

/// Whether `η ⊂ η ⊗ η_(2)` over `sp(n)`, by the Klimyk oracle.
pub fn verify_row2_selfcontainment(eta: &HighestWeight, limits: &Limits) -> Result<bool> {
    if eta.algebra().family() != Family::C {
        return Err(Error::Unsupported(format!(
            "row-2 self-containment is a statement about sp(n), got {}",
            eta.algebra()
        )));
    }
    let row2 = HighestWeight::one_row(eta.algebra(), 2);
    Ok(tensor_klimyk(eta, &row2, limits)?.multiplicity(eta) >= 1)
}

/// Dominant integral weights of `D_m` with first coordinate at most `max_first`,
/// including those with negative last coordinate.
pub fn integral_d_weights(algebra: AlgebraType, max_first: i64) -> Vec<HighestWeight> {
    d_weights_in_box(algebra.rank(), max_first)
        .into_iter()
        .filter_map(|c| HighestWeight::from_integers(algebra, &c).ok())
        .filter(HighestWeight::is_dominant)
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

    fn dec(s: &str, terms: &[(&[i64], u64)]) -> Decomposition {
        Decomposition::from_terms(alg(s), terms.iter().map(|(c, m)| (hw(s, c), *m))).unwrap()
    }

    #[test]
    fn klimyk_unit() {
        let l = Limits::default();
        let b = hw("C2", &[2, 1]);
        let got = tensor_klimyk(&HighestWeight::zero(alg("C2")), &b, &l).unwrap();
        assert_eq!(got, dec("C2", &[(&[2, 1], 1)]));
    }

    #[test]
    fn klimyk_small_products() {
        let l = Limits::default();
        assert_eq!(
            tensor_klimyk(&hw("C1", &[1]), &hw("C1", &[1]), &l).unwrap(),
            dec("C1", &[(&[2], 1), (&[0], 1)])
        );
        assert_eq!(
            tensor_klimyk(&hw("D3", &[1, 0, 0]), &hw("D3", &[1, 0, 0]), &l).unwrap(),
            dec("D3", &[(&[2, 0, 0], 1), (&[1, 1, 0], 1), (&[0, 0, 0], 1)])
        );
        assert_eq!(
            tensor_klimyk(&hw("C1", &[1]), &hw("C1", &[2]), &l).unwrap(),
            dec("C1", &[(&[3], 1), (&[1], 1)])
        );
    }

    #[test]
    fn klimyk_spin_d3() {
        // 4 ⊗ 4̄ of su(4) = 15 + 1
        let l = Limits::default();
        let plus = HighestWeight::new(alg("D3"), vec![1, 1, 1]).unwrap();
        let minus = HighestWeight::new(alg("D3"), vec![1, 1, -1]).unwrap();
        let got = tensor_klimyk(&plus, &minus, &l).unwrap();
        assert_eq!(got, dec("D3", &[(&[1, 1, 0], 1), (&[0, 0, 0], 1)]));
    }

    #[test]
    fn klimyk_rejects_mismatch_and_ceiling() {
        let l = Limits::default();
        let err = tensor_klimyk(&hw("C2", &[1, 0]), &hw("D3", &[1, 0, 0]), &l).unwrap_err();
        assert_eq!(err.code(), "E_ALGEBRA_MISMATCH");
        let tight = Limits { max_dim: 30 };
        let err = tensor_klimyk(&hw("D3", &[1, 0, 0]), &hw("D3", &[1, 0, 0]), &tight).unwrap_err();
        assert_eq!(err.code(), "E_CEILING");
    }

    #[test]
    fn okada_trivial_row() {
        let eta = hw("D3", &[2, 1, 0]);
        assert_eq!(okada_row_multiplicity(&eta, 0, &eta).unwrap(), 1);
        assert_eq!(
            okada_row_multiplicity(&eta, 0, &hw("D3", &[2, 1, 1])).unwrap(),
            0
        );
    }

    #[test]
    fn okada_examples() {
        let eta = hw("D3", &[2, 1, 0]);
        let w = okada_row_witnesses(&eta, 4, &eta).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].varsigma, vec![1, 0, 0]);

        let w = okada_row_witnesses(&hw("D3", &[1, 1, 1]), 2, &hw("D3", &[2, 1, 0])).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].varsigma, vec![1, 1, 0]);
        assert!(w[0].is_interlacing_dominant());
    }

    #[test]
    fn okada_tensor_examples() {
        let triv = HighestWeight::zero(alg("D3"));
        for s in 0..5 {
            assert_eq!(
                okada_row_tensor(&triv, s).unwrap(),
                Decomposition::singleton(HighestWeight::one_row(alg("D3"), s)).unwrap()
            );
        }
        let t = okada_row_tensor(&hw("D3", &[1, 1, 1]), 2).unwrap();
        assert_eq!(t.multiplicity(&hw("D3", &[3, 1, 1])), 1);
        assert_eq!(t.multiplicity(&hw("D3", &[2, 1, 0])), 1);
        let t = okada_row_tensor(&hw("D3", &[2, 1, 0]), 4).unwrap();
        assert_eq!(t.multiplicity(&hw("D3", &[2, 1, 0])), 1);
    }

    #[test]
    fn okada_rejects_spin_and_non_d() {
        let spin = HighestWeight::new(alg("D3"), vec![1, 1, 1]).unwrap();
        assert_eq!(
            okada_row_tensor(&spin, 1).unwrap_err().code(),
            "E_SPIN_PARITY"
        );
        assert_eq!(
            okada_row_tensor(&hw("C2", &[1, 0]), 1).unwrap_err().code(),
            "E_UNSUPPORTED"
        );
    }

    #[test]
    fn row2_examples() {
        let l = Limits::default();
        assert!(verify_row2_selfcontainment(&hw("C1", &[1]), &l).unwrap());
        assert!(verify_row2_selfcontainment(&hw("C2", &[1, 1]), &l).unwrap());
        // trivial ⊗ (2) = (2)
        assert!(!verify_row2_selfcontainment(&HighestWeight::zero(alg("C3")), &l).unwrap());
    }

    #[test]
    fn d3_sweep_set() {
        let ws = integral_d_weights(alg("D3"), 3);
        assert_eq!(ws.len(), 30);
        assert!(ws.contains(&hw("D3", &[3, 3, -3])));
    }
}
