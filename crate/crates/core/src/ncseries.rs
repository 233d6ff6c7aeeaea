//! Truncated noncommutative power series in `A = t12`, `B = t23`, `C = t13`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::braidword::{CombedForm, Generator};
use crate::error::{Error, Result};

/// Default cap on word length for the `2^n` subword sums.
pub const DEFAULT_SUBWORD_CAP: usize = 16;

/// Longest word the packed representation holds.
pub const MAX_WORD_LEN: usize = 32;

/// One chord on three strands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chord {
    /// `t12`
    A = 0,
    /// `t23`
    B = 1,
    /// `t13`
    C = 2,
}

impl Chord {
    fn from_bits(b: u64) -> Chord {
        match b {
            0 => Chord::A,
            1 => Chord::B,
            _ => Chord::C,
        }
    }

    pub fn of_generator(g: Generator) -> Chord {
        match g {
            Generator::X12 => Chord::A,
            Generator::X23 => Chord::B,
            Generator::X13 => Chord::C,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Chord::A => 'A',
            Chord::B => 'B',
            Chord::C => 'C',
        }
    }
}

/// A monomial in the chords, packed two bits per letter; the first letter
/// occupies the most significant position.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    len: u8,
    code: u64,
}

impl Word {
    pub const EMPTY: Word = Word { len: 0, code: 0 };

    pub fn from_letters(letters: &[Chord]) -> Result<Word> {
        if letters.len() > MAX_WORD_LEN {
            return Err(Error::WordTooLong(letters.len()));
        }
        let mut w = Word::EMPTY;
        for &l in letters {
            w = w.push(l);
        }
        Ok(w)
    }

    pub fn single(l: Chord) -> Word {
        Word { len: 1, code: l as u64 }
    }

    pub fn power(l: Chord, n: usize) -> Word {
        let mut w = Word::EMPTY;
        for _ in 0..n {
            w = w.push(l);
        }
        w
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn degree(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn get(self, i: usize) -> Chord {
        debug_assert!(i < self.len());
        Chord::from_bits((self.code >> (2 * (self.len() - 1 - i))) & 3)
    }

    pub fn set(self, i: usize, l: Chord) -> Word {
        let shift = 2 * (self.len() - 1 - i);
        Word { len: self.len, code: (self.code & !(3 << shift)) | ((l as u64) << shift) }
    }

    /// Appends a letter; panics past `MAX_WORD_LEN`.
    pub fn push(self, l: Chord) -> Word {
        assert!(self.len() < MAX_WORD_LEN, "word too long");
        Word { len: self.len + 1, code: (self.code << 2) | l as u64 }
    }

    pub fn concat(self, other: Word) -> Word {
        assert!(self.len() + other.len() <= MAX_WORD_LEN, "word too long");
        if other.len == 0 {
            return self;
        }
        Word { len: self.len + other.len, code: (self.code << (2 * other.len)) | other.code }
    }

    /// Letters `[start, end)`.
    pub fn slice(self, start: usize, end: usize) -> Word {
        let n = end - start;
        if n == 0 {
            return Word::EMPTY;
        }
        let shifted = self.code >> (2 * (self.len() - end));
        let mask = if n == 32 { u64::MAX } else { (1u64 << (2 * n)) - 1 };
        Word { len: n as u8, code: shifted & mask }
    }

    pub fn letters(self) -> impl Iterator<Item = Chord> {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn count(self, l: Chord) -> usize {
        self.letters().filter(|&x| x == l).count()
    }

    /// Exponent-grouped form such as `C^3 B C^3`; the empty word prints as `1`.
    pub fn pretty(self) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.len() {
            let l = self.get(i);
            let mut j = i;
            while j < self.len() && self.get(j) == l {
                j += 1;
            }
            let run = j - i;
            parts.push(if run == 1 { l.as_char().to_string() } else { format!("{}^{}", l.as_char(), run) });
            i = j;
        }
        parts.join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts plain letter strings `CBA` and grouped forms `C^3 B C^3`.
    fn from_str(s: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (body, rep) = match tok.split_once('^') {
                Some((b, e)) => (b, e.parse::<usize>().map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?),
                None => (tok, 1),
            };
            let mut chars = Vec::new();
            for c in body.chars() {
                chars.push(match c {
                    'A' => Chord::A,
                    'B' => Chord::B,
                    'C' => Chord::C,
                    _ => return Err(Error::Parse(format!("unknown chord `{c}`"))),
                });
            }
            if rep != 1 && chars.len() != 1 {
                return Err(Error::Parse(format!("exponent needs a single letter in `{tok}`")));
            }
            for _ in 0..rep {
                letters.extend_from_slice(&chars);
            }
        }
        Word::from_letters(&letters)
    }
}

/// Coefficient rings for series and diagram polynomials.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_i64(n: i64) -> Self;
    fn from_bigint(n: &BigInt) -> Self;
}

impl Coeff for BigInt {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }
}

impl Coeff for i64 {
    fn from_i64(n: i64) -> Self {
        n
    }
    fn from_bigint(n: &BigInt) -> Self {
        n.to_i64().expect("coefficient fits in i64")
    }
}

impl Coeff for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn from_bigint(n: &BigInt) -> Self {
        n.to_f64().unwrap_or(f64::NAN)
    }
}

impl Coeff for Complex64 {
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn from_bigint(n: &BigInt) -> Self {
        Complex64::new(n.to_f64().unwrap_or(f64::NAN), 0.0)
    }
}

/// A power series truncated above degree `n`.
#[derive(Clone, PartialEq)]
pub struct Series<C> {
    n: usize,
    terms: BTreeMap<Word, C>,
}

impl<C: Coeff> Series<C> {
    pub fn zero(n: usize) -> Self {
        Series { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Series::monomial(n, Word::EMPTY, C::one())
    }

    pub fn monomial(n: usize, w: Word, c: C) -> Self {
        let mut s = Series::zero(n);
        s.add_term(w, c);
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, C)>>(n: usize, terms: I) -> Self {
        let mut s = Series::zero(n);
        for (w, c) in terms {
            s.add_term(w, c);
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.n
    }

    /// Adds `c·w`, dropping words above the truncation degree.
    pub fn add_term(&mut self, w: Word, c: C) {
        if w.degree() > self.n || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn coeff(&self, w: Word) -> C {
        self.terms.get(&w).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Word, &C)> {
        self.terms.iter().map(|(w, c)| (*w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scalar_mul(&-C::one()))
    }

    pub fn scalar_mul(&self, k: &C) -> Self {
        Series::from_terms(self.n, self.terms().map(|(w, c)| (w, k.clone() * c.clone())))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Series::zero(self.n);
        for (u, cu) in self.terms() {
            for (v, cv) in other.terms() {
                if u.degree() + v.degree() <= self.n {
                    out.add_term(u.concat(v), cu.clone() * cv.clone());
                }
            }
        }
        Ok(out)
    }

    /// Drops every word above degree `m`; `m` becomes the new truncation.
    pub fn truncate(&self, m: usize) -> Self {
        let m = m.min(self.n);
        Series::from_terms(m, self.terms().filter(|(w, _)| w.degree() <= m).map(|(w, c)| (w, c.clone())))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series::from_terms(self.n, self.terms().map(|(w, c)| (w, f(c))))
    }
}

impl<C: Coeff> fmt::Debug for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series(N={}, ", self.n)?;
        f.debug_map().entries(self.terms.iter().map(|(w, c)| (w.to_string(), c))).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Series<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let mag = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{mag}{w}")?;
            }
        }
        Ok(())
    }
}

/// Generalized binomial coefficients `C(a, k)` for `k = 0..=n`.
fn binomials(a: i64, n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    for k in 0..=n {
        out.push(c.clone());
        c = c * BigInt::from(a - k as i64) / BigInt::from(k as i64 + 1);
    }
    out
}

/// `(1 + letter)^a` truncated at degree `n`.
pub fn geom_power<C: Coeff>(letter: Chord, a: i64, n: usize) -> Result<Series<C>> {
    if a == 0 {
        return Err(Error::ZeroPower);
    }
    let coeffs = binomials(a, n);
    Ok(Series::from_terms(n, coeffs.iter().enumerate().map(|(k, c)| (Word::power(letter, k), C::from_bigint(c)))))
}

/// Magnus expansion of a combed braid: `prod (1 + t)^a` over the tail, then `(1 + A)^e12`.
pub fn magnus3<C: Coeff>(cf: &CombedForm, n: usize) -> Series<C> {
    let mut acc = Series::one(n);
    for l in cf.tail.letters() {
        let f = geom_power(Chord::of_generator(l.gen), l.exp, n).expect("nonzero exponent");
        acc = acc.mul(&f).expect("same truncation");
    }
    if cf.e12 != 0 {
        acc = acc.mul(&geom_power(Chord::A, cf.e12, n).expect("nonzero")).expect("same truncation");
    }
    acc
}

/// The chord word of a positive combed braid under `x_ij <-> t_ij`.
pub fn positive_word(cf: &CombedForm) -> Option<Word> {
    let mut letters = Vec::new();
    for l in cf.tail.letters() {
        if l.exp < 0 {
            return None;
        }
        letters.extend(std::iter::repeat(Chord::of_generator(l.gen)).take(l.exp as usize));
    }
    if cf.e12 < 0 {
        return None;
    }
    letters.extend(std::iter::repeat(Chord::A).take(cf.e12 as usize));
    Word::from_letters(&letters).ok()
}

/// Integer combination of positive words, i.e. an element of `Z P3+`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignedSubwordSum {
    terms: BTreeMap<Word, BigInt>,
}

impl SignedSubwordSum {
    pub fn add_term(&mut self, w: Word, c: BigInt) {
        let slot = self.terms.entry(w).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn coeff(&self, w: Word) -> BigInt {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Word, &BigInt)> {
        self.terms.iter().map(|(w, c)| (*w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Calls `f(subword, |w| - |subword|)` for every subsequence of `w`, with multiplicity.
pub fn for_each_subword(w: Word, cap: usize, mut f: impl FnMut(Word, usize)) -> Result<()> {
    let n = w.len();
    if n > cap {
        return Err(Error::SubwordCap { len: n, cap });
    }
    for mask in 0u64..(1u64 << n) {
        let mut sub = Word::EMPTY;
        for i in 0..n {
            if mask >> (n - 1 - i) & 1 == 1 {
                sub = sub.push(w.get(i));
            }
        }
        f(sub, n - mask.count_ones() as usize);
    }
    Ok(())
}

/// Left inverse of the Magnus map on positive words:
/// `nu3(w) = sum over subwords w' of (-1)^{|w|-|w'|} w'`.
pub fn nu3(w: Word) -> Result<SignedSubwordSum> {
    nu3_capped(w, DEFAULT_SUBWORD_CAP)
}

pub fn nu3_capped(w: Word, cap: usize) -> Result<SignedSubwordSum> {
    let mut out = SignedSubwordSum::default();
    for_each_subword(w, cap, |sub, dropped| {
        out.add_term(sub, if dropped % 2 == 0 { BigInt::one() } else { -BigInt::one() })
    })?;
    Ok(out)
}

/// Linear extension of `nu3` to an integer series.
pub fn nu3_series(s: &Series<BigInt>) -> Result<SignedSubwordSum> {
    let mut out = SignedSubwordSum::default();
    for (w, c) in s.terms() {
        for (sub, k) in nu3(w)?.terms() {
            out.add_term(sub, c * k);
        }
    }
    Ok(out)
}

/// Magnus expansion of a positive braid given as a chord word: the sum of all its subwords.
pub fn mu3_positive(w: Word, n: usize) -> Result<Series<BigInt>> {
    let mut s = Series::zero(n);
    for_each_subword(w, DEFAULT_SUBWORD_CAP, |sub, _| s.add_term(sub, BigInt::one()))?;
    Ok(s)
}

#[derive(Serialize, Deserialize)]
struct SeriesTerm {
    word: String,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    #[serde(rename = "N")]
    n: usize,
    terms: Vec<SeriesTerm>,
}

impl Serialize for Series<BigInt> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson {
            n: self.n,
            terms: self.terms().map(|(w, c)| SeriesTerm { word: w.to_string(), coeff: c.to_string() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Series<BigInt> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SeriesJson::deserialize(d)?;
        let mut s = Series::zero(raw.n);
        for t in raw.terms {
            let w: Word = t.word.parse().map_err(D::Error::custom)?;
            let c: BigInt = t.coeff.parse().map_err(D::Error::custom)?;
            if w.degree() > raw.n {
                return Err(D::Error::custom(format!("word {w} exceeds N = {}", raw.n)));
            }
            s.add_term(w, c);
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braidword::{comb, parse_braid};

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn series(n: usize, terms: &[(&str, i64)]) -> Series<BigInt> {
        Series::from_terms(n, terms.iter().map(|&(w, c)| (word(w), BigInt::from(c))))
    }

    #[test]
    fn word_packing() {
        let w = word("CBA");
        assert_eq!(w.len(), 3);
        assert_eq!(w.get(0), Chord::C);
        assert_eq!(w.get(2), Chord::A);
        assert_eq!(w.set(1, Chord::C).to_string(), "CCA");
        assert_eq!(w.slice(1, 3).to_string(), "BA");
        assert_eq!(word("C^3 B C^3"), word("CCCBCCC"));
        assert_eq!(word("CCCBCCC").pretty(), "C^3 B C^3");
        assert_eq!(Word::EMPTY.pretty(), "1");
        assert!("CD".parse::<Word>().is_err());
    }

    #[test]
    fn ring_examples() {
        let a = series(2, &[("", 1), ("A", 1)]);
        let b = series(2, &[("", 1), ("A", -1)]);
        assert_eq!(a.mul(&b).unwrap(), series(2, &[("", 1), ("AA", -1)]));
        let c = series(2, &[("", 1), ("C", 1)]);
        assert_eq!(c.mul(&Series::one(2)).unwrap(), c);
        let b1 = series(2, &[("", 1), ("B", 1)]);
        assert_eq!(b1.mul(&c).unwrap(), series(2, &[("", 1), ("B", 1), ("C", 1), ("BC", 1)]));
        assert_eq!(a.mul(&Series::one(3)), Err(Error::DegreeMismatch(2, 3)));
    }

    #[test]
    fn geom_power_examples() {
        assert_eq!(geom_power::<BigInt>(Chord::C, 1, 5).unwrap(), series(5, &[("", 1), ("C", 1)]));
        assert_eq!(
            geom_power::<BigInt>(Chord::C, -1, 3).unwrap(),
            series(3, &[("", 1), ("C", -1), ("CC", 1), ("CCC", -1)])
        );
        assert_eq!(geom_power::<BigInt>(Chord::B, 2, 2).unwrap(), series(2, &[("", 1), ("B", 2), ("BB", 1)]));
        assert_eq!(geom_power::<BigInt>(Chord::B, 0, 2), Err(Error::ZeroPower));
        // (1+C)^-2 = 1 - 2C + 3C^2 - 4C^3
        assert_eq!(
            geom_power::<BigInt>(Chord::C, -2, 3).unwrap(),
            series(3, &[("", 1), ("C", -2), ("CC", 3), ("CCC", -4)])
        );
    }

    #[test]
    fn magnus_examples() {
        let m: Series<BigInt> = magnus3(&comb(&parse_braid("x13").unwrap()), 3);
        assert_eq!(m, series(3, &[("", 1), ("C", 1)]));
        let m: Series<BigInt> = magnus3(&comb(&parse_braid("x12 x23").unwrap()), 2);
        // 1 + t12 + t23 + t13 t23 - t23 t13 + t23 t12
        assert_eq!(m, series(2, &[("", 1), ("A", 1), ("B", 1), ("CB", 1), ("BC", -1), ("BA", 1)]));
        let m: Series<BigInt> = magnus3(&comb(&parse_braid("x13^-1").unwrap()), 4);
        assert_eq!(m, series(4, &[("", 1), ("C", -1), ("CC", 1), ("CCC", -1), ("CCCC", 1)]));
    }

    #[test]
    fn nu3_examples() {
        let e = nu3(Word::EMPTY).unwrap();
        assert_eq!((e.len(), e.coeff(Word::EMPTY)), (1, BigInt::one()));
        let c = nu3(word("C")).unwrap();
        assert_eq!(c.coeff(word("C")), BigInt::one());
        assert_eq!(c.coeff(Word::EMPTY), -BigInt::one());
        let cb = nu3(word("CB")).unwrap();
        assert_eq!(cb.len(), 4);
        assert_eq!(cb.coeff(word("CB")), BigInt::from(1));
        assert_eq!(cb.coeff(word("C")), BigInt::from(-1));
        assert_eq!(cb.coeff(word("B")), BigInt::from(-1));
        assert_eq!(cb.coeff(Word::EMPTY), BigInt::from(1));
        // multiplicity: CC has the subword C twice
        assert_eq!(nu3(word("CC")).unwrap().coeff(word("C")), BigInt::from(-2));
        assert!(matches!(nu3(Word::power(Chord::C, 17)), Err(Error::SubwordCap { .. })));
    }

    #[test]
    fn mu3_positive_examples() {
        assert_eq!(mu3_positive(word("C"), 4).unwrap(), series(4, &[("", 1), ("C", 1)]));
        assert_eq!(mu3_positive(word("CB"), 4).unwrap(), series(4, &[("", 1), ("C", 1), ("B", 1), ("CB", 1)]));
        assert_eq!(mu3_positive(Word::EMPTY, 4).unwrap(), Series::one(4));
    }

    #[test]
    fn json_schema() {
        let s = series(2, &[("", 1), ("CB", -3)]);
        let j = serde_json::to_value(&s).unwrap();
        assert_eq!(j, serde_json::json!({"N": 2, "terms": [{"word": "", "coeff": "1"}, {"word": "CB", "coeff": "-3"}]}));
        let back: Series<BigInt> = serde_json::from_value(j).unwrap();
        assert_eq!(back, s);
    }
}
