use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ncseries::{Chord, Word};

/// Index `(l1, ..., lk)` of a multiple zeta value. The empty composition is the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        Composition(parts.into())
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_admissible(&self) -> bool {
        self.0.iter().all(|&l| l >= 1) && self.0.first().map_or(true, |&l| l >= 2)
    }

    /// `a^{l1-1} b ... a^{lk-1} b`
    pub fn to_word(&self) -> ABWord {
        let mut w = Vec::with_capacity(self.weight() as usize);
        for &l in &self.0 {
            w.extend(std::iter::repeat(AB::A).take(l.saturating_sub(1) as usize));
            w.push(AB::B);
        }
        ABWord(w)
    }

    /// All compositions of `m` into `k` parts, each at least `min`.
    pub fn enumerate(m: u32, k: usize, min: u32) -> Vec<Composition> {
        fn go(rest: u32, k: usize, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if k == 0 {
                if rest == 0 {
                    out.push(Composition(cur.clone()));
                }
                return;
            }
            let max = rest.saturating_sub(min * (k as u32 - 1));
            for l in min..=max {
                cur.push(l);
                go(rest - l, k - 1, min, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(m, k, min, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", v.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(Composition::default());
        }
        inner
            .split(',')
            .map(|p| p.trim().parse::<u32>().ok().filter(|&l| l > 0))
            .collect::<Option<Vec<_>>>()
            .map(Composition)
            .ok_or_else(|| Error::Parse(format!("bad composition `{s}`")))
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AB {
    A,
    B,
}

/// Word in `a`, `b`; `a` stands for `A/(2πi)` and `b` for `B/(2πi)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ABWord(pub Vec<AB>);

impl ABWord {
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn depth(&self) -> usize {
        self.0.iter().filter(|&&l| l == AB::B).count()
    }

    /// Starts with `a` and ends with `b` (or is empty).
    pub fn is_convergent(&self) -> bool {
        self.0.is_empty() || (self.0[0] == AB::A && self.0[self.0.len() - 1] == AB::B)
    }

    /// The composition of a word ending in `b`.
    pub fn to_composition(&self) -> Option<Composition> {
        if self.0.last().is_some_and(|&l| l == AB::A) {
            return None;
        }
        let mut parts = Vec::new();
        let mut run = 1;
        for &l in &self.0 {
            match l {
                AB::A => run += 1,
                AB::B => {
                    parts.push(run);
                    run = 1;
                }
            }
        }
        Some(Composition(parts))
    }

    /// All words of the given degree, in lexicographic order.
    pub fn all_of_degree(d: usize) -> impl Iterator<Item = ABWord> {
        (0u64..1 << d).map(move |bits| {
            ABWord((0..d).map(|i| if bits >> (d - 1 - i) & 1 == 1 { AB::B } else { AB::A }).collect())
        })
    }

    pub fn to_chord_word(&self) -> Result<Word> {
        let letters: Vec<Chord> = self.0.iter().map(|&l| if l == AB::A { Chord::A } else { Chord::B }).collect();
        Word::from_letters(&letters)
    }
}

impl fmt::Display for ABWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for &l in &self.0 {
            write!(f, "{}", if l == AB::A { 'a' } else { 'b' })?;
        }
        Ok(())
    }
}

impl FromStr for ABWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(ABWord::default());
        }
        s.chars()
            .map(|c| match c {
                'a' => Some(AB::A),
                'b' => Some(AB::B),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(ABWord)
            .ok_or_else(|| Error::Parse(format!("bad a/b word `{s}`")))
    }
}

impl Serialize for ABWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_string().serialize(s)
    }
}
