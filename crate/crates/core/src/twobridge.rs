//! Conway polynomials of short-circuit closures of 3-braids.
//!
//! The closure of `x13^{a1} x23^{b1} ... ` is the two-bridge knot of the
//! continued fraction `(2a1, -2b1, ..., 2ak, -2bk + 1)` (or
//! `(..., -2bk, 2a(k+1) + 1)` when the word ends in an `x13` block),
//! evaluated as `c1 + 1/(c2 + 1/(...))`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::braidword::{comb, BraidWord, CombedForm, Generator};
use crate::chisymbol::binom;
use crate::error::{Error, Result};
use crate::poly::EvenPoly;

/// Determinants up to this size use the staircase sum; larger ones use the
/// continuant of the even continued fraction.
pub const STAIRCASE_LIMIT: u64 = 4096;

/// Exponents `(a1, b1, a2, ...)` of an alternating `x13`/`x23` word that
/// starts with `x13`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct AlternatingWord(pub Vec<i64>);

impl AlternatingWord {
    pub fn is_unknot(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for AlternatingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", v.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ContinuedFraction(pub Vec<BigInt>);

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(BigInt::to_string).collect();
        write!(f, "({})", v.join(", "))
    }
}

impl Serialize for ContinuedFraction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.iter().map(BigInt::to_string).collect::<Vec<_>>().serialize(s)
    }
}

/// A reduced fraction `p/q` with `q >= 0`; `1/0` stands for infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fraction {
    p: BigInt,
    q: BigInt,
}

impl Fraction {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q): (BigInt, BigInt) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::Parse("0/0 is not a fraction".into()));
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / &g, q / &g);
        if q.is_negative() || (q.is_zero() && p.is_negative()) {
            p = -p;
            q = -q;
        }
        Ok(Fraction { p, q })
    }

    pub fn numerator(&self) -> &BigInt {
        &self.p
    }

    pub fn denominator(&self) -> &BigInt {
        &self.q
    }

    /// `|p|`, the determinant of the knot.
    pub fn determinant(&self) -> BigInt {
        self.p.abs()
    }

    pub fn is_unknot(&self) -> bool {
        self.p.abs().is_one() || self.q.is_zero()
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Fraction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected p/q, got `{s}`"));
        let (p, q) = s.trim().split_once('/').unwrap_or((s.trim(), "1"));
        Fraction::new(p.trim().parse::<BigInt>().map_err(|_| bad())?, q.trim().parse::<BigInt>().map_err(|_| bad())?)
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_string().serialize(s)
    }
}

/// Integer Laurent polynomial `sum coeffs[k] t^{low + k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn new(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        while p.coeffs.last().is_some_and(Zero::is_zero) {
            p.coeffs.pop();
        }
        let lead = p.coeffs.iter().take_while(|c| c.is_zero()).count();
        p.coeffs.drain(..lead);
        p.low += lead as i64;
        if p.coeffs.is_empty() {
            p.low = 0;
        }
        p
    }

    pub fn from_ints(low: i64, coeffs: &[i64]) -> Self {
        LaurentPoly::new(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        LaurentPoly::from_ints(0, &[1])
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let k = e - self.low;
        if k < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_default()
    }

    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.low == -self.high() && self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Shifts to a symmetric exponent range and fixes the sign so the value at 1 is positive.
    pub fn symmetrized(&self) -> Result<Self> {
        if self.coeffs.is_empty() {
            return Ok(self.clone());
        }
        let span = self.high() - self.low;
        if span % 2 != 0 {
            return Err(Error::NotSymmetric);
        }
        let mut out = LaurentPoly { low: -span / 2, coeffs: self.coeffs.clone() };
        if out.at_one().is_negative() {
            out.coeffs.iter_mut().for_each(|c| *c = -c.clone());
        }
        if !out.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = self.low + k as i64;
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let m = if mag.is_one() && e != 0 { String::new() } else { mag.to_string() };
            match e {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{m}t")?,
                _ => write!(f, "{m}t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Drops the `x12` block and any leading `x23` block, then groups exponents.
pub fn closure_word(cf: &CombedForm) -> AlternatingWord {
    let letters = cf.tail.letters();
    let skip = usize::from(letters.first().is_some_and(|l| l.gen == Generator::X23));
    AlternatingWord(letters[skip..].iter().map(|l| l.exp).collect())
}

pub fn word_to_cf(w: &AlternatingWord) -> ContinuedFraction {
    if w.0.is_empty() {
        return ContinuedFraction(vec![BigInt::one()]);
    }
    let mut out: Vec<BigInt> = w
        .0
        .iter()
        .enumerate()
        .map(|(i, &e)| BigInt::from(if i % 2 == 0 { 2 * e } else { -2 * e }))
        .collect();
    *out.last_mut().unwrap() += 1;
    ContinuedFraction(out)
}

/// Evaluates `c1 + 1/(c2 + 1/(...))` over `Q ∪ {∞}`.
pub fn cf_to_fraction(cf: &ContinuedFraction) -> Result<Fraction> {
    let (mut num, mut den) = (BigInt::one(), BigInt::zero());
    for c in cf.0.iter().rev() {
        let next = c * &num + &den;
        den = std::mem::replace(&mut num, next);
    }
    if num.is_zero() {
        return Err(Error::NotAKnot(format!("0/{den}")));
    }
    Fraction::new(num, den)
}

fn check_knot(f: &Fraction) -> Result<()> {
    if f.p.is_zero() || f.p.is_even() {
        return Err(Error::NotAKnot(f.to_string()));
    }
    Ok(())
}

/// Alexander polynomial, symmetrized with value 1 at `t = 1`.
pub fn alexander_2bridge(f: &Fraction) -> Result<LaurentPoly> {
    check_knot(f)?;
    if f.is_unknot() {
        return Ok(LaurentPoly::one());
    }
    match f.determinant().to_u64() {
        Some(p) if p <= STAIRCASE_LIMIT => alexander_staircase(f),
        _ => alexander_plumbing(f),
    }
}

/// `sum_{i<p} (-1)^i t^{e_i}` with `e_i = sum_{j<=i} (-1)^{floor(j q / p)}`, `q` odd.
pub fn alexander_staircase(f: &Fraction) -> Result<LaurentPoly> {
    check_knot(f)?;
    let p = f.determinant().to_i64().ok_or_else(|| Error::NotAKnot(format!("{f} is too large to enumerate")))?;
    let two_p = 2 * p;
    let mut q = f.q.mod_floor(&BigInt::from(two_p)).to_i64().unwrap();
    if q % 2 == 0 {
        q = (q + p) % two_p;
    }
    let mut exps = Vec::with_capacity(p as usize);
    let mut e = 0i64;
    exps.push(0);
    for j in 1..p {
        e += if ((j as i128 * q as i128) / p as i128) % 2 == 0 { 1 } else { -1 };
        exps.push(e);
    }
    let lo = *exps.iter().min().unwrap();
    let hi = *exps.iter().max().unwrap();
    let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (i, &e) in exps.iter().enumerate() {
        let s = if i % 2 == 0 { 1 } else { -1 };
        coeffs[(e - lo) as usize] += s;
    }
    LaurentPoly::new(lo, coeffs).symmetrized()
}

/// Continued fraction of `p/q` with every entry even; exists when `p` is odd.
pub fn even_continued_fraction(f: &Fraction) -> Result<Vec<BigInt>> {
    check_knot(f)?;
    let p = f.p.clone();
    let mut q = f.q.mod_floor(&p.abs());
    if q.is_odd() {
        q -= p.abs();
    }
    let (mut x, mut y) = (p, q);
    let mut out = Vec::new();
    while !y.is_zero() {
        let two_y = &y * 2;
        let mut m = x.div_floor(&two_y);
        let mut rem = &x - &m * &two_y;
        if rem.abs() > y.abs() {
            m += 1;
            rem -= &two_y;
        }
        out.push(m * 2);
        x = std::mem::replace(&mut y, rem);
    }
    Ok(out)
}

/// Alexander polynomial from the even continued fraction `[2m1, ..., 2mk]`:
/// the Conway polynomial is the continuant of `(m1 z, -m2 z, m3 z, ...)`.
pub fn alexander_plumbing(f: &Fraction) -> Result<LaurentPoly> {
    check_knot(f)?;
    if f.is_unknot() {
        return Ok(LaurentPoly::one());
    }
    let cf = even_continued_fraction(f)?;
    // dense polynomials in z
    let mut prev: Vec<BigInt> = vec![BigInt::one()];
    let mut cur: Vec<BigInt> = vec![BigInt::one()];
    for (i, e) in cf.iter().enumerate() {
        let m: BigInt = e / 2;
        let x = if i % 2 == 0 { m } else { -m };
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (k, c) in cur.iter().enumerate() {
            next[k + 1] += c * &x;
        }
        if i > 0 {
            for (k, c) in prev.iter().enumerate() {
                next[k] += c;
            }
        }
        prev = std::mem::replace(&mut cur, next);
    }
    if cur.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
        return Err(Error::NotAKnot(f.to_string()));
    }
    let conway = EvenPoly::new(cur.into_iter().step_by(2));
    Ok(alexander_from_conway(&conway))
}

/// `Δ(t) = ∇(t^{1/2} - t^{-1/2})`, using `z^2 = t - 2 + t^-1`.
pub fn alexander_from_conway(c: &EvenPoly) -> LaurentPoly {
    let n = c.half_degree().unwrap_or(0) as i64;
    let mut coeffs = vec![BigInt::zero(); (2 * n + 1) as usize];
    for (j, cj) in c.coeffs().iter().enumerate() {
        for (k, b) in z2_power(j as i64) {
            coeffs[(k + n) as usize] += cj * b;
        }
    }
    LaurentPoly::new(-n, coeffs)
}

/// `(t - 2 + t^-1)^j = sum_k (-1)^{j-k} C(2j, j+k) t^k`.
fn z2_power(j: i64) -> impl Iterator<Item = (i64, BigInt)> {
    (-j..=j).map(move |k| {
        let b = binom(2 * j, j + k);
        (k, if (j - k) % 2 == 0 { b } else { -b })
    })
}

/// Rewrites a symmetric Alexander polynomial in powers of `z^2 = t - 2 + t^-1`.
pub fn conway_from_alexander(d: &LaurentPoly) -> Result<EvenPoly> {
    if !d.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut rest = d.clone();
    let v1 = rest.at_one();
    if v1 == -BigInt::one() {
        rest.coeffs.iter_mut().for_each(|c| *c = -c.clone());
    } else if !v1.is_one() {
        return Err(Error::NoConwayForm);
    }
    let n = rest.high().max(0);
    let mut out = vec![BigInt::zero(); n as usize + 1];
    let mut work: Vec<BigInt> = (-n..=n).map(|e| rest.coeff(e)).collect();
    for j in (0..=n).rev() {
        let cj = work[(j + n) as usize].clone();
        if cj.is_zero() {
            continue;
        }
        for (k, b) in z2_power(j) {
            work[(k + n) as usize] -= &cj * b;
        }
        out[j as usize] = cj;
    }
    if work.iter().any(|c| !c.is_zero()) {
        return Err(Error::NoConwayForm);
    }
    Ok(EvenPoly::new(out))
}

pub fn conway_of_fraction(f: &Fraction) -> Result<EvenPoly> {
    if f.is_unknot() {
        return Ok(EvenPoly::one());
    }
    conway_from_alexander(&alexander_2bridge(f)?)
}

/// Every stage of the oracle for one braid.
#[derive(Debug, Clone, Serialize)]
pub struct OracleTrace {
    pub braid: BraidWord,
    pub combed: CombedForm,
    pub closure: AlternatingWord,
    pub continued_fraction: ContinuedFraction,
    pub fraction: Fraction,
    pub alexander: String,
    pub conway: EvenPoly,
}

pub fn trace_braid(w: &BraidWord) -> Result<OracleTrace> {
    let combed = comb(w);
    let closure = closure_word(&combed);
    let continued_fraction = word_to_cf(&closure);
    let fraction = cf_to_fraction(&continued_fraction)?;
    let alexander = alexander_2bridge(&fraction)?;
    let conway = conway_from_alexander(&alexander)?;
    Ok(OracleTrace {
        braid: w.clone(),
        combed,
        closure,
        continued_fraction,
        fraction,
        alexander: alexander.to_string(),
        conway,
    })
}

/// Conway polynomial of the short-circuit closure of `w`.
pub fn conway_of_braid(w: &BraidWord) -> Result<EvenPoly> {
    conway_of_combed(&comb(w))
}

pub fn conway_of_combed(cf: &CombedForm) -> Result<EvenPoly> {
    let closure = closure_word(cf);
    if closure.is_unknot() {
        return Ok(EvenPoly::one());
    }
    conway_of_fraction(&cf_to_fraction(&word_to_cf(&closure))?)
}
