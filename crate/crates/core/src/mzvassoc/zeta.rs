use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::words::{ABWord, Composition, AB};
use crate::error::{Error, Result};

pub const DEFAULT_EPS: f64 = 1e-8;

/// Finest tolerance double precision can honour for the weights in scope.
const MIN_EPS: f64 = 1e-13;
const MAX_WEIGHT: u32 = 20;

fn cache() -> &'static RwLock<HashMap<Composition, f64>> {
    static CACHE: OnceLock<RwLock<HashMap<Composition, f64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Li_{s1..sk}(1/2) = sum_{n1 > ... > nk >= 1} 2^{-n1} / prod n_i^{s_i}`.
pub fn polylog_half(c: &Composition) -> f64 {
    let k = c.depth();
    if k == 0 {
        return 1.0;
    }
    // tail after M terms is below 2^-M (1 + ln M)^k
    let mut m = 40usize;
    while (m as f64).ln_1p().powi(k as i32) * 0.5f64.powi(m as i32) > 1e-19 {
        m += 8;
    }
    let mut acc = vec![0.0f64; k + 1];
    acc[k] = 1.0;
    let mut half = 1.0;
    for n in 1..=m {
        half *= 0.5;
        let nf = n as f64;
        for j in 0..k {
            let mut w = nf.powi(-(c.0[j] as i32));
            if j == 0 {
                w *= half;
            }
            acc[j] += w * acc[j + 1];
        }
    }
    acc[0]
}

fn dual_reverse(w: &[AB]) -> ABWord {
    ABWord(w.iter().rev().map(|&l| if l == AB::A { AB::B } else { AB::A }).collect())
}

/// Splits the path from 0 to 1 at 1/2; the half near 1 is mapped back by `t -> 1 - t`.
fn zeta_uncached(c: &Composition) -> f64 {
    let w = c.to_word();
    (0..=w.degree())
        .map(|i| {
            let head = dual_reverse(&w.0[..i]).to_composition().expect("admissible words start with a");
            let tail = ABWord(w.0[i..].to_vec()).to_composition().expect("admissible words end with b");
            polylog_half(&head) * polylog_half(&tail)
        })
        .sum()
}

/// `ζ(l1, ..., lk) = sum_{n1 > ... > nk >= 1} prod n_i^{-l_i}` to within `eps`.
pub fn zeta(c: &Composition, eps: f64) -> Result<f64> {
    if !c.is_admissible() {
        return Err(Error::Inadmissible(c.to_string()));
    }
    if !(eps >= MIN_EPS) || c.weight() > MAX_WEIGHT {
        return Err(Error::Precision(eps));
    }
    if let Some(&v) = cache().read().unwrap().get(c) {
        return Ok(v);
    }
    let v = zeta_uncached(c);
    cache().write().unwrap().insert(c.clone(), v);
    Ok(v)
}

/// Sum of `ζ(l1..lk)` over compositions of `m` into `k` parts, all at least 2.
pub fn zeta_depth_sum(m: u32, k: usize, eps: f64) -> Result<f64> {
    let parts = Composition::enumerate(m, k, 2);
    let each = eps / parts.len().max(1) as f64;
    parts.iter().map(|c| zeta(c, each.max(MIN_EPS))).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    fn z(parts: &[u32]) -> f64 {
        zeta(&Composition::new(parts), DEFAULT_EPS).unwrap()
    }

    /// Plain partial sums with an integral tail estimate.
    fn brute_single(s: i32) -> f64 {
        let n = 200_000;
        let head: f64 = (1..=n).rev().map(|k| (k as f64).powi(-s)).sum();
        head + (n as f64).powi(1 - s) / (s - 1) as f64 - 0.5 * (n as f64).powi(-s)
    }

    #[test]
    fn single_values() {
        assert!((z(&[2]) - PI * PI / 6.0).abs() < 1e-12);
        assert!((z(&[4]) - PI.powi(4) / 90.0).abs() < 1e-12);
        assert!((z(&[3]) - 1.2020569031595942).abs() < 1e-12);
        assert!((z(&[5]) - brute_single(5)).abs() < 1e-10);
        assert!((z(&[2]) - 1.64493407).abs() < 1e-8);
        assert!((z(&[4]) - 1.08232323).abs() < 1e-8);
    }

    #[test]
    fn dilogarithm_at_half() {
        let li2 = polylog_half(&Composition::new([2]));
        assert!((li2 - (PI * PI / 12.0 - LN_2 * LN_2 / 2.0)).abs() < 1e-14);
        assert!((polylog_half(&Composition::new([1])) - LN_2).abs() < 1e-14);
    }

    #[test]
    fn classical_evaluations() {
        assert!((z(&[2, 2]) - PI.powi(4) / 120.0).abs() < 1e-12);
        assert!((z(&[3, 1]) - PI.powi(4) / 360.0).abs() < 1e-12);
        assert!((z(&[2, 1]) - z(&[3])).abs() < 1e-12);
        assert!((z(&[2, 1, 1]) - z(&[4])).abs() < 1e-12);
        assert!((z(&[2, 2]) - 0.81174242).abs() < 1e-8);
    }

    #[test]
    fn double_sum_oracle() {
        // sum_{n > m} n^-2 m^-2 with the inner sum accumulated directly
        let n_max = 200_000;
        let (mut inner, mut total) = (0.0f64, 0.0f64);
        for n in 1..=n_max {
            let nf = n as f64;
            total += inner / (nf * nf);
            inner += 1.0 / (nf * nf);
        }
        // tail: sum_{n > N} ζ(2)/n^2 ≈ ζ(2)/N
        total += z(&[2]) / n_max as f64;
        assert!((z(&[2, 2]) - total).abs() < 1e-8);
    }

    #[test]
    fn stuffle_identities() {
        assert!((z(&[2]).powi(2) - (2.0 * z(&[2, 2]) + z(&[4]))).abs() < 1e-8);
        assert!((z(&[2]) * z(&[3]) - (z(&[2, 3]) + z(&[3, 2]) + z(&[5]))).abs() < 1e-8);
        assert!((z(&[2]) * z(&[2, 2]) - (3.0 * z(&[2, 2, 2]) + z(&[4, 2]) + z(&[2, 4]))).abs() < 1e-8);
        assert!((z(&[3]) * z(&[5]) - (z(&[3, 5]) + z(&[5, 3]) + z(&[8]))).abs() < 1e-8);
    }

    #[test]
    fn depth_sums() {
        assert_eq!(zeta_depth_sum(2, 1, DEFAULT_EPS).unwrap(), z(&[2]));
        assert_eq!(zeta_depth_sum(4, 2, DEFAULT_EPS).unwrap(), z(&[2, 2]));
        assert!((zeta_depth_sum(5, 2, DEFAULT_EPS).unwrap() - z(&[3, 2]) - z(&[2, 3])).abs() < 1e-15);
        assert_eq!(zeta_depth_sum(3, 2, DEFAULT_EPS).unwrap(), 0.0);
    }

    #[test]
    fn errors() {
        assert!(matches!(zeta(&Composition::new([1, 2]), DEFAULT_EPS), Err(Error::Inadmissible(_))));
        assert!(matches!(zeta(&Composition::new([2]), 1e-30), Err(Error::Precision(_))));
    }
}
