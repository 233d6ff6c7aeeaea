//! Pure braids on three strands.
//!
//! `P3` is generated by the full twists `x12`, `x13`, `x23`. It splits as
//! `F2 ⋉ F1` where `F2 = <x13, x23>` and `F1 = <x12>`, so every braid has a
//! unique combed form `w(x13, x23) · x12^e`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    X12,
    X13,
    X23,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::X12, Generator::X13, Generator::X23];

    pub fn from_indices(i: u8, j: u8) -> Option<Self> {
        match (i, j) {
            (1, 2) => Some(Generator::X12),
            (1, 3) => Some(Generator::X13),
            (2, 3) => Some(Generator::X23),
            _ => None,
        }
    }

    pub fn indices(self) -> (u8, u8) {
        match self {
            Generator::X12 => (1, 2),
            Generator::X13 => (1, 3),
            Generator::X23 => (2, 3),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = self.indices();
        write!(f, "x{i}{j}")
    }
}

/// A syllable `gen^exp` with `exp != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Generator,
    pub exp: i64,
}

impl Letter {
    pub fn new(gen: Generator, exp: i64) -> Self {
        Letter { gen, exp }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 1 {
            write!(f, "{}", self.gen)
        } else {
            write!(f, "{}^{}", self.gen, self.exp)
        }
    }
}

/// A freely reduced word in the generators of `P3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BraidWord {
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity() -> Self {
        BraidWord::default()
    }

    /// Builds a word from arbitrary syllables, merging and cancelling.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = BraidWord::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn generator(gen: Generator, exp: i64) -> Self {
        BraidWord::from_letters([Letter::new(gen, exp)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of syllables.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends a syllable on the right, keeping the word freely reduced.
    pub fn push(&mut self, l: Letter) {
        if l.exp == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some(last) if last.gen == l.gen => {
                last.exp += l.exp;
                if last.exp == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push(l),
        }
    }

    pub fn multiply(&self, other: &BraidWord) -> BraidWord {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord::from_letters(self.letters.iter().rev().map(|l| Letter::new(l.gen, -l.exp)))
    }

    /// `self^n` for any integer `n`.
    pub fn pow(&self, n: i64) -> BraidWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = BraidWord::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// Exponent sum of one generator (the abelianization coordinate).
    pub fn exponent_sum(&self, gen: Generator) -> i64 {
        self.letters.iter().filter(|l| l.gen == gen).map(|l| l.exp).sum()
    }

    /// All exponents negated. This is not the mirror image of the braid: reflecting
    /// `x13 = σ2 σ1^2 σ2^-1` gives `σ2^-1 σ1^-2 σ2`, not `x13^-1`.
    pub fn mirror(&self) -> BraidWord {
        BraidWord::from_letters(self.letters.iter().map(|l| Letter::new(l.gen, -l.exp)))
    }

    pub fn to_triples(&self) -> Vec<(u8, u8, i64)> {
        self.letters
            .iter()
            .map(|l| {
                let (i, j) = l.gen.indices();
                (i, j, l.exp)
            })
            .collect()
    }

    pub fn from_triples(triples: &[(u8, u8, i64)]) -> Result<Self> {
        let mut w = BraidWord::identity();
        for &(i, j, e) in triples {
            let gen = Generator::from_indices(i, j)
                .ok_or_else(|| Error::IndexOutOfRange(format!("x{i}{j}")))?;
            if e == 0 {
                return Err(Error::ZeroExponent(format!("x{i}{j}^0")));
            }
            w.push(Letter::new(gen, e));
        }
        Ok(w)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn parse_token(tok: &str) -> Result<Letter> {
    let malformed = || Error::MalformedToken(tok.to_string());
    let body = tok.strip_prefix('x').ok_or_else(malformed)?;
    let (idx, exp) = match body.split_once('^') {
        Some((idx, e)) => (idx, e.parse::<i64>().map_err(|_| malformed())?),
        None => (body, 1),
    };
    let digits: Vec<u32> = idx.chars().map(|c| c.to_digit(10)).collect::<Option<_>>().ok_or_else(malformed)?;
    if digits.len() != 2 {
        return Err(malformed());
    }
    let gen = Generator::from_indices(digits[0] as u8, digits[1] as u8)
        .ok_or_else(|| Error::IndexOutOfRange(tok.to_string()))?;
    if exp == 0 {
        return Err(Error::ZeroExponent(tok.to_string()));
    }
    Ok(Letter::new(gen, exp))
}

/// Parses whitespace separated tokens `x12`, `x13^-2`, ... into a reduced word.
/// Empty text and `1` are the identity.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let mut w = BraidWord::identity();
    if text.trim() == "1" {
        return Ok(w);
    }
    for tok in text.split_whitespace() {
        w.push(parse_token(tok)?);
    }
    Ok(w)
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_braid(s)
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_triples().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let triples = Vec::<(u8, u8, i64)>::deserialize(d)?;
        BraidWord::from_triples(&triples).map_err(serde::de::Error::custom)
    }
}

/// The word `x12^{by} · g^{sign} · x12^{-by}` rewritten over `{x13, x23}`.
///
/// Conjugation by `x12` fixes `x13 x23` and sends
/// `x23` to `x13 x23 x13^-1`; conjugation by `x12^-1` is its inverse.
pub fn conj_action(gen: Generator, sign: i64, by: i64) -> Result<BraidWord> {
    use Generator::*;
    let l = |g, e| Letter::new(g, e);
    let forward = by > 0;
    let image = match (gen, forward) {
        (X12, _) => return Err(Error::NotFreeGenerator),
        (X13, true) => vec![l(X13, 1), l(X23, 1), l(X13, 1), l(X23, -1), l(X13, -1)],
        (X23, true) => vec![l(X13, 1), l(X23, 1), l(X13, -1)],
        (X13, false) => vec![l(X23, -1), l(X13, 1), l(X23, 1)],
        (X23, false) => vec![l(X23, -1), l(X13, -1), l(X23, 1), l(X13, 1), l(X23, 1)],
    };
    let w = BraidWord::from_letters(image);
    Ok(if sign < 0 { w.inverse() } else { w })
}

/// Applies conjugation by `x12^{by}` (`by = ±1`) to a word over `{x13, x23}`.
fn conjugate_free_word(w: &BraidWord, by: i64) -> BraidWord {
    let mut out = BraidWord::identity();
    for l in &w.letters {
        let image = conj_action(l.gen, l.exp.signum(), by).expect("free word");
        for _ in 0..l.exp.unsigned_abs() {
            out = out.multiply(&image);
        }
    }
    out
}

/// Combed normal form `tail · x12^e12`, `tail` a reduced word in `x13, x23`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct CombedForm {
    pub tail: BraidWord,
    pub e12: i64,
}

impl CombedForm {
    pub fn to_braid(&self) -> BraidWord {
        self.tail.multiply(&BraidWord::generator(Generator::X12, self.e12))
    }

    pub fn is_identity(&self) -> bool {
        self.tail.is_identity() && self.e12 == 0
    }
}

impl fmt::Display for CombedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            write!(f, "identity")
        } else {
            write!(f, "{} · x12^{}", self.tail, self.e12)
        }
    }
}

/// Combs a braid word by pushing every `x12^{±1}` to the right end.
pub fn comb(w: &BraidWord) -> CombedForm {
    let mut tail = BraidWord::identity();
    let mut e12 = 0i64;
    // Invariant: the processed suffix equals tail · x12^e12.
    for l in w.letters.iter().rev() {
        match l.gen {
            Generator::X12 => {
                for _ in 0..l.exp.unsigned_abs() {
                    tail = conjugate_free_word(&tail, l.exp.signum());
                }
                e12 += l.exp;
            }
            _ => tail = BraidWord::from_letters([*l]).multiply(&tail),
        }
    }
    CombedForm { tail, e12 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn w(s: &str) -> BraidWord {
        parse_braid(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w("x12 x23").to_triples(), vec![(1, 2, 1), (2, 3, 1)]);
        assert!(w("x13^2 x13^-2").is_identity());
        assert_eq!(w("x13^3 x23^-1").to_triples(), vec![(1, 3, 3), (2, 3, -1)]);
        assert!(w("").is_identity());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_braid("y12"), Err(Error::MalformedToken(_))));
        assert!(matches!(parse_braid("x1"), Err(Error::MalformedToken(_))));
        assert!(matches!(parse_braid("x12^"), Err(Error::MalformedToken(_))));
        assert!(matches!(parse_braid("x14"), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(parse_braid("x21"), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(parse_braid("x34"), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(parse_braid("x12^0"), Err(Error::ZeroExponent(_))));
    }

    #[test]
    fn multiply_examples() {
        assert!(w("x12").multiply(&w("x12^-1")).is_identity());
        assert_eq!(w("x12").multiply(&w("x23")), w("x12 x23"));
        assert_eq!(w("x13^2").multiply(&w("x13^-1")), w("x13"));
        // cascading cancellation
        assert!(w("x13 x23").multiply(&w("x23^-1 x13^-1")).is_identity());
    }

    #[test]
    fn conj_action_examples() {
        assert_eq!(conj_action(X23, 1, 1).unwrap(), w("x13 x23 x13^-1"));
        assert_eq!(conj_action(X13, 1, 1).unwrap(), w("x13 x23 x13 x23^-1 x13^-1"));
        assert_eq!(conj_action(X13, 1, -1).unwrap(), w("x23^-1 x13 x23"));
        assert_eq!(conj_action(X12, 1, 1), Err(Error::NotFreeGenerator));
    }

    #[test]
    fn conj_action_fixes_product_and_inverts() {
        for by in [1, -1] {
            let img = conj_action(X13, 1, by).unwrap().multiply(&conj_action(X23, 1, by).unwrap());
            assert_eq!(img, w("x13 x23"));
        }
        for gen in [X13, X23] {
            let g = BraidWord::generator(gen, 1);
            assert_eq!(conjugate_free_word(&conjugate_free_word(&g, 1), -1), g);
            assert_eq!(conjugate_free_word(&conjugate_free_word(&g, -1), 1), g);
        }
    }

    #[test]
    fn comb_examples() {
        let c = comb(&w("x12 x23"));
        assert_eq!(c.tail, w("x13 x23 x13^-1"));
        assert_eq!(c.e12, 1);
        assert_eq!(comb(&BraidWord::identity()), CombedForm::default());
        let c = comb(&w("x13^2 x23^-1"));
        assert_eq!((c.tail, c.e12), (w("x13^2 x23^-1"), 0));
    }

    #[test]
    fn combed_display() {
        assert_eq!(comb(&w("x12 x23")).to_string(), "x13 x23 x13^-1 · x12^1");
        assert_eq!(comb(&w("")).to_string(), "identity");
    }

    #[test]
    fn json_triples() {
        let b = w("x13^3 x23^-1");
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(s, "[[1,3,3],[2,3,-1]]");
        assert_eq!(serde_json::from_str::<BraidWord>(&s).unwrap(), b);
        assert!(serde_json::from_str::<BraidWord>("[[1,4,1]]").is_err());
    }
}
