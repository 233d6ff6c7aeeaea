//! Horizontal chord diagrams on three strands.
//!
//! The algebra is generated by `A = t12`, `B = t23`, `C = t13` subject to
//! `[A,B] = [B,C] = [C,A]`. Descending monomials (a `{B,C}` word followed by
//! a block of `A`s) form a basis; [`Reducer`] rewrites any word into it with
//!
//! ```text
//! AB -> BA + BC - CB
//! AC -> CA - BC + CB
//! ```

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::ncseries::{Chord, Coeff, Series, Word};

/// `u · A^a` with `u` a word in `B, C`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DescendingDiagram {
    pub u: Word,
    pub a: usize,
}

impl DescendingDiagram {
    pub const UNIT: DescendingDiagram = DescendingDiagram { u: Word::EMPTY, a: 0 };

    /// Splits a word into `u · A^a`, or `None` if some `A` precedes a `B` or `C`.
    pub fn from_word(w: Word) -> Option<Self> {
        let mut a = 0;
        while a < w.len() && w.get(w.len() - 1 - a) == Chord::A {
            a += 1;
        }
        let u = w.slice(0, w.len() - a);
        if u.letters().any(|l| l == Chord::A) {
            return None;
        }
        Some(DescendingDiagram { u, a })
    }

    pub fn word(self) -> Word {
        self.u.concat(Word::power(Chord::A, self.a))
    }

    pub fn degree(self) -> usize {
        self.u.len() + self.a
    }
}

impl fmt::Display for DescendingDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word().pretty())
    }
}

/// A linear combination of descending diagrams.
#[derive(Clone, PartialEq, Debug)]
pub struct DiagramPoly<C> {
    terms: BTreeMap<DescendingDiagram, C>,
}

impl<C> Default for DiagramPoly<C> {
    fn default() -> Self {
        DiagramPoly { terms: BTreeMap::new() }
    }
}

impl<C: Coeff> DiagramPoly<C> {
    pub fn add_term(&mut self, d: DescendingDiagram, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(d).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn coeff(&self, d: DescendingDiagram) -> C {
        self.terms.get(&d).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (DescendingDiagram, &C)> {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies two reduced elements and reduces the product.
    pub fn mul(&self, other: &Self, reducer: &mut Reducer) -> Self {
        let mut out = DiagramPoly::default();
        for (d, c) in self.terms() {
            for (e, k) in other.terms() {
                let cc = c.clone() * k.clone();
                for &(r, m) in reducer.reduce_word(d.word().concat(e.word())) {
                    out.add_term(r, cc.clone() * C::from_i64(m));
                }
            }
        }
        out
    }
}

impl fmt::Display for DiagramPoly<num_bigint::BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(d, c)| format!("({c})·{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Order in which `A`-redexes are rewritten.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Schedule {
    Leftmost,
    Rightmost,
}

/// Position `i` with `w[i] = A` and `w[i+1] ∈ {B, C}`.
fn find_redex(w: Word, schedule: Schedule) -> Option<usize> {
    let is_redex = |i: usize| w.get(i) == Chord::A && w.get(i + 1) != Chord::A;
    let n = w.len();
    if n < 2 {
        return None;
    }
    match schedule {
        Schedule::Leftmost => (0..n - 1).find(|&i| is_redex(i)),
        Schedule::Rightmost => (0..n - 1).rev().find(|&i| is_redex(i)),
    }
}

/// The three words produced by one rewrite at `i`, with signs.
fn rewrite_at(w: Word, i: usize) -> [(Word, i64); 3] {
    let next = w.get(i + 1);
    let s = if next == Chord::B { 1 } else { -1 };
    let swapped = w.set(i, next).set(i + 1, Chord::A);
    let bc = w.set(i, Chord::B).set(i + 1, Chord::C);
    let cb = w.set(i, Chord::C).set(i + 1, Chord::B);
    [(swapped, 1), (bc, s), (cb, -s)]
}

/// Memoized reduction to the descending basis with the leftmost schedule.
///
/// Lookups need `&mut self`; use one per thread.
#[derive(Default)]
pub struct Reducer {
    memo: HashMap<Word, Vec<(DescendingDiagram, i64)>>,
}

impl Reducer {
    pub fn new() -> Self {
        Reducer::default()
    }

    pub fn cached_words(&self) -> usize {
        self.memo.len()
    }

    pub fn reduce_word(&mut self, w: Word) -> &[(DescendingDiagram, i64)] {
        if !self.memo.contains_key(&w) {
            let value = self.compute(w);
            self.memo.insert(w, value);
        }
        &self.memo[&w]
    }

    fn compute(&mut self, w: Word) -> Vec<(DescendingDiagram, i64)> {
        let Some(i) = find_redex(w, Schedule::Leftmost) else {
            let d = DescendingDiagram::from_word(w).expect("no redex means descending");
            return vec![(d, 1)];
        };
        let mut acc: BTreeMap<DescendingDiagram, i64> = BTreeMap::new();
        for (v, s) in rewrite_at(w, i) {
            for &(d, c) in self.reduce_word(v) {
                *acc.entry(d).or_insert(0) += s * c;
            }
        }
        acc.into_iter().filter(|&(_, c)| c != 0).collect()
    }

    pub fn reduce<C: Coeff>(&mut self, w: Word) -> DiagramPoly<C> {
        let mut out = DiagramPoly::default();
        for &(d, c) in self.reduce_word(w) {
            out.add_term(d, C::from_i64(c));
        }
        out
    }

    pub fn reduce_series<C: Coeff>(&mut self, s: &Series<C>) -> DiagramPoly<C> {
        let mut out = DiagramPoly::default();
        for (w, k) in s.terms() {
            for &(d, c) in self.reduce_word(w) {
                out.add_term(d, k.clone() * C::from_i64(c));
            }
        }
        out
    }
}

/// Reduction that reads a word from the right, pushing each `A` through the
/// `{B, C}` part already in normal form. Gives the same result as [`Reducer`]
/// but shares work across words with common letters, which matters for the
/// long `A`/`B` words of the associator.
#[derive(Default)]
pub struct InsertionReducer {
    push_memo: HashMap<Word, Vec<(DescendingDiagram, i64)>>,
}

impl InsertionReducer {
    pub fn new() -> Self {
        InsertionReducer::default()
    }

    /// Normal form of `A · u` for a `{B, C}` word `u`.
    fn push_a(&mut self, u: Word) -> &[(DescendingDiagram, i64)] {
        if !self.push_memo.contains_key(&u) {
            let value = if u.is_empty() {
                vec![(DescendingDiagram { u, a: 1 }, 1)]
            } else {
                let x = u.get(0);
                let rest = u.slice(1, u.len());
                let s = if x == Chord::B { 1 } else { -1 };
                let bc = Word::from_letters(&[Chord::B, Chord::C]).unwrap().concat(rest);
                let cb = Word::from_letters(&[Chord::C, Chord::B]).unwrap().concat(rest);
                let mut acc: Vec<(DescendingDiagram, i64)> = self
                    .push_a(rest)
                    .iter()
                    .map(|&(d, c)| (DescendingDiagram { u: Word::single(x).concat(d.u), a: d.a }, c))
                    .collect();
                acc.push((DescendingDiagram { u: bc, a: 0 }, s));
                acc.push((DescendingDiagram { u: cb, a: 0 }, -s));
                acc
            };
            self.push_memo.insert(u, value);
        }
        &self.push_memo[&u]
    }

    pub fn reduce<C: Coeff>(&mut self, w: Word) -> DiagramPoly<C> {
        self.reduce_filtered(w, false)
    }

    /// Like [`InsertionReducer::reduce`], but drops every diagram ending in `A`.
    /// Trailing `A`s are never consumed by later letters, so this is exact
    /// for anything that vanishes on `wA`, such as the Conway symbol.
    pub fn reduce_without_trailing_a<C: Coeff>(&mut self, w: Word) -> DiagramPoly<C> {
        self.reduce_filtered(w, true)
    }

    fn reduce_filtered<C: Coeff>(&mut self, w: Word, drop_a: bool) -> DiagramPoly<C> {
        let mut acc: BTreeMap<DescendingDiagram, i64> = BTreeMap::from([(DescendingDiagram::UNIT, 1)]);
        for i in (0..w.len()).rev() {
            let x = w.get(i);
            let mut next = BTreeMap::new();
            for (d, c) in acc {
                if x == Chord::A {
                    for &(e, s) in self.push_a(d.u) {
                        *next.entry(DescendingDiagram { u: e.u, a: e.a + d.a }).or_insert(0) += c * s;
                    }
                } else {
                    *next.entry(DescendingDiagram { u: Word::single(x).concat(d.u), a: d.a }).or_insert(0) += c;
                }
            }
            next.retain(|d, c| *c != 0 && !(drop_a && d.a > 0));
            acc = next;
        }
        let mut out = DiagramPoly::default();
        for (d, c) in acc {
            out.add_term(d, C::from_i64(c));
        }
        out
    }
}

/// Reduction of a single word, without memoization, following `schedule`.
pub fn reduce_with_schedule(w: Word, schedule: Schedule) -> DiagramPoly<i64> {
    let mut out = DiagramPoly::default();
    let mut stack = vec![(w, 1i64)];
    while let Some((v, c)) = stack.pop() {
        match find_redex(v, schedule) {
            None => out.add_term(DescendingDiagram::from_word(v).unwrap(), c),
            Some(i) => stack.extend(rewrite_at(v, i).into_iter().map(|(x, s)| (x, s * c))),
        }
    }
    out
}

/// Reduction of a single word with the canonical schedule.
pub fn reduce(w: Word) -> DiagramPoly<num_bigint::BigInt> {
    Reducer::new().reduce(w)
}

/// Encoding of a descending diagram for the symbol.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum DiagramCode {
    /// The empty diagram.
    Unit,
    /// Trailing `A`, leading `B`, or a `BB` factor.
    Zero,
    /// `C^{c1} B ... C^{c(k-1)} B C^{ck}`, followed by one more `B` when primed.
    Code { parts: Vec<usize>, primed: bool },
}

impl DiagramCode {
    pub fn code(parts: &[usize], primed: bool) -> Self {
        DiagramCode::Code { parts: parts.to_vec(), primed }
    }

    /// The `{B, C}` word encoded by a `Code`; `Unit` gives the empty word.
    pub fn word(&self) -> Option<Word> {
        match self {
            DiagramCode::Unit => Some(Word::EMPTY),
            DiagramCode::Zero => None,
            DiagramCode::Code { parts, primed } => {
                let mut w = Word::EMPTY;
                for (i, &c) in parts.iter().enumerate() {
                    if i > 0 {
                        w = w.push(Chord::B);
                    }
                    w = w.concat(Word::power(Chord::C, c));
                }
                if *primed {
                    w = w.push(Chord::B);
                }
                Some(w)
            }
        }
    }
}

impl fmt::Display for DiagramCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramCode::Unit => write!(f, "1"),
            DiagramCode::Zero => write!(f, "0"),
            DiagramCode::Code { parts, primed } => {
                let body: Vec<String> = parts.iter().map(|c| c.to_string()).collect();
                write!(f, "[{}]{}", body.join(","), if *primed { "'" } else { "" })
            }
        }
    }
}

pub fn classify(d: DescendingDiagram) -> DiagramCode {
    if d.a > 0 {
        return DiagramCode::Zero;
    }
    if d.u.is_empty() {
        return DiagramCode::Unit;
    }
    if d.u.get(0) == Chord::B {
        return DiagramCode::Zero;
    }
    let mut parts = Vec::new();
    let mut run = 0;
    let mut prev_b = false;
    for l in d.u.letters() {
        match l {
            Chord::C => {
                run += 1;
                prev_b = false;
            }
            Chord::B if prev_b => return DiagramCode::Zero,
            Chord::B => {
                parts.push(run);
                run = 0;
                prev_b = true;
            }
            Chord::A => unreachable!("descending u has no A"),
        }
    }
    if prev_b {
        DiagramCode::Code { parts, primed: true }
    } else {
        parts.push(run);
        DiagramCode::Code { parts, primed: false }
    }
}
