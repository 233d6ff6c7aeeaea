//! Batch checks of the symbol against the two-bridge oracle.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::braidword::{comb, BraidWord, Generator, Letter};
use crate::chisymbol::{chi_code, chi_combed, SymbolVariant};
use crate::chord3::{classify, DescendingDiagram};
use crate::error::Result;
use crate::ncseries::{nu3, Chord, Word};
use crate::poly::EvenPoly;
use crate::twobridge::conway_of_combed;

const GENERATORS: [Generator; 3] = [Generator::X12, Generator::X13, Generator::X23];

/// A word whose symbol disagrees with its oracle value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Mismatch {
    pub word: BraidWord,
    pub chi: EvenPoly,
    pub oracle: EvenPoly,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerifyReport {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn merge(mut self, other: VerifyReport) -> VerifyReport {
        self.checked += other.checked;
        self.mismatches.extend(other.mismatches);
        self
    }
}

/// Compares `chi(mu3(w))` with the Conway polynomial of the closure of `w`.
pub fn check_word(w: &BraidWord, variant: SymbolVariant) -> Result<Option<Mismatch>> {
    let cf = comb(w);
    let chi = chi_combed(&cf, variant);
    let oracle = conway_of_combed(&cf)?;
    Ok((chi != oracle).then(|| Mismatch { word: w.clone(), chi, oracle }))
}

fn check_all(words: &[BraidWord], variant: SymbolVariant) -> Result<VerifyReport> {
    let results: Vec<Option<Mismatch>> = words.par_iter().map(|w| check_word(w, variant)).collect::<Result<_>>()?;
    let mut mismatches: Vec<Mismatch> = results.into_iter().flatten().collect();
    mismatches.sort_by_key(|m| m.word.to_string());
    Ok(VerifyReport { checked: words.len(), mismatches })
}

/// Every sequence of `x_ij^{±1}` letters of length at most `max_len`.
pub fn all_words(max_len: usize) -> Vec<BraidWord> {
    let letters: Vec<Letter> =
        GENERATORS.iter().flat_map(|&g| [Letter::new(g, 1), Letter::new(g, -1)]).collect();
    let mut out = vec![BraidWord::identity()];
    let mut frontier: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * letters.len());
        for w in &frontier {
            for &l in &letters {
                let mut v = w.clone();
                v.push(l);
                out.push(BraidWord::from_letters(v.iter().copied()));
                next.push(v);
            }
        }
        frontier = next;
    }
    out
}

/// A word of `1..=max_len` letters with exponents in `±1..=±max_exp`.
pub fn random_word<R: Rng>(rng: &mut R, max_len: usize, max_exp: i64) -> BraidWord {
    let len = rng.gen_range(1..=max_len.max(1));
    BraidWord::from_letters((0..len).map(|_| {
        let g = GENERATORS[rng.gen_range(0..3)];
        let e = rng.gen_range(1..=max_exp.max(1));
        Letter::new(g, if rng.gen_bool(0.5) { e } else { -e })
    }))
}

pub fn random_words(samples: usize, max_len: usize, max_exp: i64, seed: u64) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).map(|_| random_word(&mut rng, max_len, max_exp)).collect()
}

pub fn verify_exhaustive(max_len: usize, variant: SymbolVariant) -> Result<VerifyReport> {
    check_all(&all_words(max_len), variant)
}

pub fn verify_random(samples: usize, max_len: usize, max_exp: i64, seed: u64, variant: SymbolVariant) -> Result<VerifyReport> {
    check_all(&random_words(samples, max_len, max_exp, seed), variant)
}

/// Positive braid of a `{B, C}` word: `B -> x23`, `C -> x13`.
pub fn positive_braid(w: Word) -> BraidWord {
    BraidWord::from_letters(w.letters().map(|l| {
        let g = match l {
            Chord::A => Generator::X12,
            Chord::B => Generator::X23,
            Chord::C => Generator::X13,
        };
        Letter::new(g, 1)
    }))
}

/// Both sides of `chi(w) = sum_{w' ⊆ w} (-1)^{|w|-|w'|} ∇(κ(w'))` for a
/// positive `{B, C}` word, with oracle values shared through `cache`.
pub fn subword_identity(w: Word, cache: &mut HashMap<Word, EvenPoly>) -> Result<(EvenPoly, EvenPoly)> {
    let d = DescendingDiagram::from_word(w).expect("B/C words are descending");
    let lhs = chi_code(&classify(d))?;
    let mut rhs = EvenPoly::zero();
    for (sub, c) in nu3(w)?.terms() {
        if !cache.contains_key(&sub) {
            cache.insert(sub, conway_of_combed(&comb(&positive_braid(sub)))?);
        }
        rhs = &rhs + &cache[&sub].scale(c);
    }
    Ok((lhs, rhs))
}

/// All `{B, C}` words of length at most `max_len`.
pub fn bc_words(max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::EMPTY];
    let mut frontier = vec![Word::EMPTY];
    for _ in 0..max_len {
        frontier = frontier.iter().flat_map(|w| [w.push(Chord::B), w.push(Chord::C)]).collect();
        out.extend(&frontier);
    }
    out
}
