//! The symbol of the Conway polynomial on descending chord diagrams.
//!
//! On codes the symbol is
//!
//! ```text
//! chi(1)              = 1
//! chi(wA) = chi(Bw) = chi(w1 B B w2) = 0
//! chi([c1..ck])       = (-1)^(k-1) · prod_{i<k} (p1 · p_{ci-1}) · p_ck
//! chi([c1..ck]')      = t^-2 · chi([c1..ck, 1])
//! ```
//!
//! with `p0 = 1`, `p1 = t^2`, `p_{s+2} = t^2 (p_s + p_{s+1})`.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::braidword::{comb, BraidWord, CombedForm, Generator};
use crate::chord3::{classify, DiagramCode, DiagramPoly, Reducer};
use crate::error::{Error, Result};
use crate::ncseries::{magnus3, Coeff, Series};
use crate::poly::EvenPoly;

static P_CACHE: RwLock<Vec<EvenPoly>> = RwLock::new(Vec::new());

/// `p_k` from the recursion (memoized).
pub fn p(k: usize) -> EvenPoly {
    if let Some(v) = P_CACHE.read().unwrap().get(k) {
        return v.clone();
    }
    let mut cache = P_CACHE.write().unwrap();
    if cache.is_empty() {
        cache.push(EvenPoly::one());
        cache.push(EvenPoly::t2());
    }
    while cache.len() <= k {
        let n = cache.len();
        let next = (&cache[n - 2] + &cache[n - 1]).mul_t2();
        cache.push(next);
    }
    cache[k].clone()
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

/// `p_k = sum_{k/2 <= j <= k} C(j, 2j-k) t^{2j}`.
pub fn p_closed(k: usize) -> EvenPoly {
    let k = k as i64;
    EvenPoly::new((0..=k).map(|j| binom(j, 2 * j - k)))
}

/// `q_s = sum_{j<=s} C(s+j, s-j) t^{2j}`, the Conway polynomial of the `(2, 2s+1)` torus knot.
pub fn q(s: usize) -> EvenPoly {
    let s = s as i64;
    EvenPoly::new((0..=s).map(|j| binom(s + j, s - j)))
}

pub fn chi_code(code: &DiagramCode) -> Result<EvenPoly> {
    match code {
        DiagramCode::Unit => Ok(EvenPoly::one()),
        DiagramCode::Zero => Ok(EvenPoly::zero()),
        DiagramCode::Code { parts, primed: false } => Ok(chi_unprimed(parts)),
        DiagramCode::Code { parts, primed: true } => {
            let mut ext = parts.clone();
            ext.push(1);
            chi_unprimed(&ext).div_t2()
        }
    }
}

fn chi_unprimed(parts: &[usize]) -> EvenPoly {
    let (last, init) = parts.split_last().expect("codes are nonempty");
    let mut acc = p(*last);
    for &c in init {
        acc = -(&acc * &p(c - 1)).mul_t2();
    }
    acc
}

/// The symbol applied to a reduced element.
pub fn chi(d: &DiagramPoly<BigInt>) -> EvenPoly {
    let mut acc = EvenPoly::zero();
    for (diag, c) in d.terms() {
        let v = chi_code(&classify(diag)).expect("codes from classify are valid");
        acc = &acc + &v.scale(c);
    }
    acc
}

/// The symbol with coefficients in any ring: entry `j` multiplies `t^{2j}`.
pub fn chi_numeric<C: Coeff>(d: &DiagramPoly<C>) -> Vec<C> {
    let mut out: Vec<C> = Vec::new();
    for (diag, c) in d.terms() {
        let v = chi_code(&classify(diag)).expect("codes from classify are valid");
        for (j, k) in v.coeffs().iter().enumerate() {
            if out.len() <= j {
                out.resize(j + 1, C::zero());
            }
            out[j] = out[j].clone() + c.clone() * C::from_bigint(k);
        }
    }
    out
}

/// The symbol of an integer series, after reduction to the descending basis.
pub fn chi_series(s: &Series<BigInt>, reducer: &mut Reducer) -> EvenPoly {
    chi(&reducer.reduce_series(s))
}

/// `chi(mu3(w))` through the literal route: truncated Magnus expansion,
/// reduction, and the symbol on codes. Only coefficients of `t^{2j}` with
/// `2j <= n` are reported; those are independent of `n`.
pub fn chi_braid_literal(w: &BraidWord, n: usize) -> EvenPoly {
    let series: Series<BigInt> = magnus3(&comb(w), n);
    chi_series(&series, &mut Reducer::new()).truncate_t(n)
}

/// `chi(mu3(w))` restricted to the stabilized coefficients `2j <= n`.
pub fn chi_braid(w: &BraidWord, n: usize) -> EvenPoly {
    chi_braid_full(w).truncate_t(n)
}

/// Which version of the block weight the streaming evaluator uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SymbolVariant {
    #[default]
    Standard,
    /// Uses `p_c` in place of `p_{c-1}` for closed blocks. A negative control.
    CorruptedBlockWeight,
}

/// The full polynomial `chi(mu3(w))`.
pub fn chi_braid_full(w: &BraidWord) -> EvenPoly {
    chi_combed(&comb(w), SymbolVariant::Standard)
}

/// Evaluates the symbol on the Magnus expansion of a combed braid without
/// truncating.
///
/// Only the `{B, C}` part of the expansion matters because every diagram with
/// a trailing `A` is killed. A `{B, C}` word is read left to right through
/// three states: nothing read yet, inside a block of `C`s, and just after a
/// `B`. Inside a block the pending weight is a row vector against
/// `(p_{c-1}, p_c)`, which advances by `M = [[0, t^2], [1, t^2]]` per `C`.
/// The factor `(1 + C)^a` therefore acts by `(I + M)^a`, an exact
/// polynomial matrix since `det(I + M) = 1`, and `(1 + B)^b` contributes only
/// through its linear term.
pub fn chi_combed(cf: &CombedForm, variant: SymbolVariant) -> EvenPoly {
    let start = EvenPoly::one();
    let mut block = [EvenPoly::zero(), EvenPoly::zero()];
    let mut after_b = EvenPoly::zero();
    for l in cf.tail.letters() {
        match l.gen {
            Generator::X13 => {
                let pw = Mat2::one_plus_m().pow(l.exp);
                let entering = &start + &after_b;
                block = [
                    &(&block[0] * &pw.0[0][0]) + &(&block[1] * &pw.0[1][0]),
                    &(&block[1] * &pw.0[1][1]) + &(&block[0] * &pw.0[0][1]),
                ];
                // (0, 1)·(P - I) is the second row of P - I
                block[0] = &block[0] + &(&entering * &pw.0[1][0]);
                block[1] = &block[1] + &(&entering * &(&pw.0[1][1] - &EvenPoly::one()));
            }
            Generator::X23 => {
                let pending = match variant {
                    SymbolVariant::Standard => &block[0],
                    SymbolVariant::CorruptedBlockWeight => &block[1],
                };
                let closed = pending.mul_t2().scale(&BigInt::from(-l.exp));
                after_b = &after_b + &closed;
            }
            Generator::X12 => unreachable!("combed tails avoid x12"),
        }
    }
    &(&start + &block[1]) + &after_b
}

/// 2×2 matrices over `Z[t^2]`.
#[derive(Clone, Debug, PartialEq)]
struct Mat2([[EvenPoly; 2]; 2]);

impl Mat2 {
    fn identity() -> Self {
        Mat2([[EvenPoly::one(), EvenPoly::zero()], [EvenPoly::zero(), EvenPoly::one()]])
    }

    /// `I + M`
    fn one_plus_m() -> Self {
        Mat2([[EvenPoly::one(), EvenPoly::t2()], [EvenPoly::one(), EvenPoly::new([1, 1])]])
    }

    /// `(I + M)^-1`, using `det(I + M) = 1`.
    fn inverse_unimodular(&self) -> Self {
        let [[a, b], [c, d]] = &self.0;
        Mat2([[d.clone(), -b], [-c, a.clone()]])
    }

    fn mul(&self, o: &Mat2) -> Mat2 {
        let e = |i: usize, j: usize| &(&self.0[i][0] * &o.0[0][j]) + &(&self.0[i][1] * &o.0[1][j]);
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    fn pow(&self, n: i64) -> Mat2 {
        let base = if n < 0 { self.inverse_unimodular() } else { self.clone() };
        let mut out = Mat2::identity();
        let mut sq = base;
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&sq);
            }
            sq = sq.mul(&sq);
            k >>= 1;
        }
        out
    }
}

/// Unordered partition, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionMultiset(Vec<usize>);

impl PartitionMultiset {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable();
        PartitionMultiset(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `prod p_part`.
    pub fn p_product(&self) -> EvenPoly {
        self.0.iter().fold(EvenPoly::one(), |acc, &k| &acc * &p(k))
    }
}

/// `[c1..ck] -> (1^{k-1}, c1-1, ..., c(k-1)-1, ck)` with zero parts dropped.
pub fn partition_transform(code: &DiagramCode) -> Result<PartitionMultiset> {
    match code {
        DiagramCode::Code { parts, primed: false } => {
            let k = parts.len();
            let mut out = vec![1; k - 1];
            out.extend(parts[..k - 1].iter().map(|c| c - 1));
            out.push(parts[k - 1]);
            Ok(PartitionMultiset::new(out))
        }
        DiagramCode::Code { primed: true, .. } => Err(Error::PrimedCode),
        _ => Err(Error::Parse(format!("no partition for code {code}"))),
    }
}

/// `sum_{s=j}^{n-1} (-1)^s C(n-1,s) C(s+j,2j) == (-1)^{n-1} C(j, 2j-n+1)`.
pub fn binomial_identity_check(n: i64, j: i64) -> bool {
    let lhs: BigInt = (j..n)
        .map(|s| {
            let t = binom(n - 1, s) * binom(s + j, 2 * j);
            if s % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum();
    let rhs = binom(j, 2 * j - n + 1);
    let rhs = if (n - 1) % 2 == 0 { rhs } else { -rhs };
    lhs == rhs
}

/// `sum_{l=1}^n (-1)^{n-l} C(n,l) sum_{s<l} q_s == p_{n-1}`.
pub fn telescoping_check(n: usize) -> bool {
    telescoping_sum(n) == p(n - 1)
}

pub fn telescoping_sum(n: usize) -> EvenPoly {
    let mut partial = EvenPoly::zero();
    let mut acc = EvenPoly::zero();
    for l in 1..=n {
        partial = &partial + &q(l - 1);
        let c = binom(n as i64, l as i64);
        let term = partial.scale(&c);
        acc = if (n - l) % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braidword::parse_braid;
    use crate::chord3::{reduce, DescendingDiagram};
    use crate::ncseries::Word;

    fn diag(s: &str) -> DescendingDiagram {
        DescendingDiagram::from_word(s.parse().unwrap()).unwrap()
    }

    fn chi_word(s: &str) -> EvenPoly {
        chi(&reduce(s.parse::<Word>().unwrap()))
    }

    #[test]
    fn p_examples() {
        assert_eq!(p(0), EvenPoly::one());
        assert_eq!(p(1), EvenPoly::t2());
        assert_eq!(p(3), EvenPoly::new([0, 0, 2, 1]));
        assert_eq!(p_closed(2), EvenPoly::new([0, 1, 1]));
        assert_eq!(p_closed(0), EvenPoly::one());
        assert_eq!(p_closed(4), EvenPoly::new([0, 0, 1, 3, 1]));
    }

    #[test]
    fn q_examples() {
        assert_eq!(q(0), EvenPoly::one());
        assert_eq!(q(1), EvenPoly::new([1, 1]));
        assert_eq!(q(2), EvenPoly::new([1, 3, 1]));
    }

    #[test]
    fn chi_code_examples() {
        assert_eq!(chi_code(&DiagramCode::code(&[1], false)).unwrap(), EvenPoly::t2());
        assert_eq!(chi_code(&DiagramCode::code(&[1], true)).unwrap(), -EvenPoly::t2());
        let expected = -(&(&p(1) * &p(2)) * &p(3));
        assert_eq!(expected, -EvenPoly::new([0, 0, 0, 0, 2, 3, 1]));
        assert_eq!(chi_code(&DiagramCode::code(&[3, 3], false)).unwrap(), expected);
        assert_eq!(chi_code(&DiagramCode::Unit).unwrap(), EvenPoly::one());
        assert_eq!(chi_code(&DiagramCode::Zero).unwrap(), EvenPoly::zero());
    }

    #[test]
    fn chi_on_words() {
        assert_eq!(chi_word("1"), EvenPoly::one());
        assert_eq!(chi_word("B"), EvenPoly::zero());
        assert_eq!(chi_word("C"), EvenPoly::t2());
        assert_eq!(chi_word("CB"), -EvenPoly::t2());
        assert_eq!(chi_word("BC"), EvenPoly::zero());
        assert_eq!(chi_word("AB"), EvenPoly::t2());
        assert_eq!(chi_word("BA"), EvenPoly::zero());
        assert_eq!(chi_word("C^3 B C^3"), -(&(&p(1) * &p(2)) * &p(3)));
    }

    #[test]
    fn chi_on_braids() {
        let b = |s: &str| parse_braid(s).unwrap();
        assert_eq!(chi_braid(&b("x13"), 4), EvenPoly::new([1, 1]));
        assert_eq!(chi_braid(&b("x13 x23"), 6), EvenPoly::one());
        assert_eq!(chi_braid(&b(""), 2), EvenPoly::one());
        assert_eq!(chi_braid(&b("x13 x23^-1"), 6), EvenPoly::new([1, 2]));
        assert_eq!(chi_braid(&b("x13^-1"), 8), EvenPoly::one());
    }

    #[test]
    fn streaming_matches_literal_route() {
        for s in ["x13", "x13^-2 x23", "x12 x23", "x23^-1 x13^2 x12^-1 x23 x13^-1", "x12^2 x13 x23^-2"] {
            let w = parse_braid(s).unwrap();
            for n in [2, 4, 6] {
                assert_eq!(chi_braid(&w, n), chi_braid_literal(&w, n), "{s} at N={n}");
            }
        }
    }

    #[test]
    fn corrupted_variant_differs() {
        let w = parse_braid("x13^2 x23").unwrap();
        let good = chi_combed(&comb(&w), SymbolVariant::Standard);
        let bad = chi_combed(&comb(&w), SymbolVariant::CorruptedBlockWeight);
        assert_ne!(good, bad);
    }

    #[test]
    fn primed_rule_and_partition() {
        for parts in [vec![1], vec![2, 1], vec![3, 1, 4], vec![1, 1, 1]] {
            let primed = chi_code(&DiagramCode::code(&parts, true)).unwrap();
            let mut ext = parts.clone();
            ext.push(1);
            assert_eq!(primed.mul_t2(), chi_code(&DiagramCode::code(&ext, false)).unwrap());
        }
        let part = |v: &[usize]| partition_transform(&DiagramCode::code(v, false)).unwrap();
        assert_eq!(part(&[3, 3]).parts(), &[1, 2, 3]);
        assert_eq!(part(&[1]).parts(), &[1]);
        assert_eq!(part(&[1, 1, 1]).parts(), &[1, 1, 1]);
        assert_eq!(chi_code(&DiagramCode::code(&[1, 1, 1], false)).unwrap(), EvenPoly::monomial(3, 1));
        assert_eq!(partition_transform(&DiagramCode::code(&[1], true)), Err(Error::PrimedCode));
    }

    #[test]
    fn partition_product_matches_symbol() {
        for parts in [vec![3, 3], vec![1, 2, 5], vec![4], vec![2, 2, 2, 1]] {
            let code = DiagramCode::code(&parts, false);
            let sign = if parts.len() % 2 == 1 { BigInt::one() } else { -BigInt::one() };
            assert_eq!(chi_code(&code).unwrap(), partition_transform(&code).unwrap().p_product().scale(&sign));
        }
    }

    #[test]
    fn identity_checks() {
        assert!(binomial_identity_check(1, 0));
        assert!(binomial_identity_check(3, 1));
        assert!(binomial_identity_check(10, 4));
        assert!(telescoping_check(1));
        assert_eq!(telescoping_sum(2), EvenPoly::t2());
        assert!(telescoping_check(6));
    }

    #[test]
    fn zero_class_shortcut_agrees() {
        assert_eq!(chi_code(&classify(diag("CBBC"))).unwrap(), EvenPoly::zero());
        assert_eq!(chi_code(&classify(diag("CCA"))).unwrap(), EvenPoly::zero());
    }
}
