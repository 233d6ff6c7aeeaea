use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use super::regularize::{shuffle_regularize, MzvCombination};
use super::words::ABWord;
use super::zeta::zeta_depth_sum;
use crate::chisymbol::chi;
use crate::chord3::InsertionReducer;
use crate::error::{Error, Result};

pub const MAX_ASSOCIATOR_DEGREE: usize = 12;

/// Largest imaginary part tolerated in a coefficient of the symbol.
const IMAGINARY_TOLERANCE: f64 = 1e-6;

/// The associator through degree `D`: numeric coefficients and the
/// underlying integer combinations of multiple zeta values.
#[derive(Debug, Clone, Serialize)]
pub struct AssociatorSeries {
    pub degree: usize,
    pub symbolic: BTreeMap<ABWord, MzvCombination>,
    pub numeric: BTreeMap<ABWord, f64>,
}

impl AssociatorSeries {
    pub fn coefficient(&self, w: &ABWord) -> f64 {
        self.numeric.get(w).copied().unwrap_or(0.0)
    }

    pub fn symbolic_coefficient(&self, w: &ABWord) -> MzvCombination {
        self.symbolic.get(w).cloned().unwrap_or_default()
    }

    /// Nonzero terms in graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&ABWord, &MzvCombination, f64)> {
        let mut v: Vec<_> = self.symbolic.iter().map(|(w, c)| (w, c, self.numeric[w])).collect();
        v.sort_by(|a, b| (a.0.degree(), a.0).cmp(&(b.0.degree(), b.0)));
        v.into_iter()
    }
}

/// Coefficient of `w` in the associator is `(-1)^{#b}` times its regularized value.
pub fn associator(degree: usize, eps: f64) -> Result<AssociatorSeries> {
    if degree > MAX_ASSOCIATOR_DEGREE {
        return Err(Error::DegreeCap(degree, MAX_ASSOCIATOR_DEGREE));
    }
    let mut symbolic = BTreeMap::new();
    let mut numeric = BTreeMap::new();
    for d in 0..=degree {
        for w in ABWord::all_of_degree(d) {
            let sign = if w.depth() % 2 == 0 { 1 } else { -1 };
            let c = shuffle_regularize(&w).scaled(sign);
            if c.is_zero() {
                continue;
            }
            numeric.insert(w.clone(), c.eval(eps)?);
            symbolic.insert(w, c);
        }
    }
    Ok(AssociatorSeries { degree, symbolic, numeric })
}

/// Real coefficients of `T^2, T^4, ...` where `T = t/(2πi)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjecturePolynomial {
    pub variable: &'static str,
    pub coeffs: Vec<f64>,
}

impl ConjecturePolynomial {
    /// Coefficient of `T^{2n}`.
    pub fn coeff(&self, n: usize) -> Option<f64> {
        n.checked_sub(1).and_then(|i| self.coeffs.get(i)).copied()
    }
}

impl fmt::Display for ConjecturePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            let sign = if *c < 0.0 { "-" } else { "+" };
            if i == 0 {
                write!(f, "{}", if *c < 0.0 { "-" } else { "" })?;
            } else {
                write!(f, " {sign} ")?;
            }
            write!(f, "{:.6} T^{}", c.abs(), 2 * (i + 1))?;
        }
        Ok(())
    }
}

/// `(2πi)^e` for `e >= 0`.
fn two_pi_i_pow(e: usize) -> Complex64 {
    let mag = (2.0 * PI).powi(e as i32);
    match e % 4 {
        0 => Complex64::new(mag, 0.0),
        1 => Complex64::new(0.0, mag),
        2 => Complex64::new(-mag, 0.0),
        _ => Complex64::new(0.0, -mag),
    }
}

/// How powers of `2πi` enter when a word in `a`, `b` is read over `A`, `B`
/// and `t^{2j}` is rewritten in `T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Scaling {
    /// `a -> A`, `b -> B`, `t -> T`: the normalization behind the printed
    /// coefficients `-ζ2 T^2 + (-ζ3 + ζ(2,2)) T^4 + ...`.
    #[default]
    Printed,
    /// `a = A/(2πi)`, `b = B/(2πi)`, `t = 2πi T`: a word of degree `d`
    /// feeds `T^{2j}` with weight `(2πi)^{2j-d}`, which is imaginary for
    /// odd `d` (for instance `aab`, whose symbol is `t^4`).
    Literal,
}

/// The symbol of the associator, truncated at words of degree `degree`.
/// Words of degree `d` only reach `T^{2n}` with `n <= d <= 2n`, so the
/// coefficients of `T^{2n}` with `2n <= degree` are exact.
pub fn chi_on_associator(degree: usize, eps: f64) -> Result<ConjecturePolynomial> {
    chi_on_associator_scaled(degree, eps, Scaling::Printed)
}

pub fn chi_on_associator_scaled(degree: usize, eps: f64, scaling: Scaling) -> Result<ConjecturePolynomial> {
    let phi = associator(degree, eps)?;
    let top = degree / 2;
    let words: Vec<(&ABWord, f64)> =
        phi.numeric.iter().filter(|(w, _)| w.degree() > 0).map(|(w, &c)| (w, c)).collect();
    let acc = words
        .par_iter()
        .map_init(InsertionReducer::new, |reducer, &(w, c)| {
            let mut out = vec![Complex64::new(0.0, 0.0); top + 1];
            let chord = w.to_chord_word().expect("associator words fit the packed form");
            let value = chi(&reducer.reduce_without_trailing_a(chord));
            for (j, k) in value.coeffs().iter().enumerate().take(top + 1).skip(1) {
                let k = k.to_f64().expect("small integer");
                if k != 0.0 {
                    debug_assert!(2 * j >= w.degree());
                    let weight = match scaling {
                        Scaling::Printed => Complex64::new(1.0, 0.0),
                        Scaling::Literal => two_pi_i_pow(2 * j - w.degree()),
                    };
                    out[j] += weight * (c * k);
                }
            }
            out
        })
        .reduce(
            || vec![Complex64::new(0.0, 0.0); top + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let mut coeffs = Vec::with_capacity(top);
    for (j, z) in acc.iter().enumerate().skip(1) {
        if z.im.abs() > IMAGINARY_TOLERANCE {
            return Err(Error::ImaginaryResidue { power: 2 * j, residue: z.im });
        }
        coeffs.push(z.re);
    }
    Ok(ConjecturePolynomial { variable: "T", coeffs })
}

/// `sum_{k=1}^n (-1)^k ζ^{(k)}_{n+k}`.
pub fn conjecture_rhs(n: usize, eps: f64) -> Result<f64> {
    (1..=n)
        .map(|k| {
            let s = zeta_depth_sum((n + k) as u32, k, eps / n as f64)?;
            Ok(if k % 2 == 0 { s } else { -s })
        })
        .sum()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub lhs: Option<f64>,
    pub rhs: f64,
    pub difference: Option<f64>,
}

/// Both sides for `n = 1..=max_n`; the left side stops at the associator cap.
pub fn conjecture_table(max_n: usize, eps: f64) -> Result<Vec<ConjectureRow>> {
    let lhs_top = max_n.min(MAX_ASSOCIATOR_DEGREE / 2);
    let lhs = chi_on_associator(2 * lhs_top, eps)?;
    (1..=max_n)
        .map(|n| {
            let rhs = conjecture_rhs(n, eps)?;
            let l = lhs.coeff(n);
            Ok(ConjectureRow { n, lhs: l, rhs, difference: l.map(|x| x - rhs) })
        })
        .collect()
}
