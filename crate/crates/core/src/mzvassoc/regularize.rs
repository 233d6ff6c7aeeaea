use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::words::{ABWord, Composition, AB};
use super::zeta::zeta;
use crate::error::Result;

/// Integer combination of admissible multiple zeta values.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MzvCombination(pub BTreeMap<Composition, i64>);

impl MzvCombination {
    pub fn unit() -> Self {
        MzvCombination(BTreeMap::from([(Composition::default(), 1)]))
    }

    pub fn single(c: Composition) -> Self {
        MzvCombination(BTreeMap::from([(c, 1)]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, i64)> {
        self.0.iter().map(|(c, &k)| (c, k))
    }

    pub fn scaled(&self, k: i64) -> Self {
        MzvCombination(self.0.iter().filter(|_| k != 0).map(|(c, &v)| (c.clone(), v * k)).collect())
    }

    pub fn eval(&self, eps: f64) -> Result<f64> {
        let n = self.0.len().max(1) as f64;
        let scale = self.0.values().map(|v| v.unsigned_abs()).max().unwrap_or(1).max(1) as f64;
        self.0.iter().map(|(c, &k)| Ok(k as f64 * zeta(c, eps / (n * scale))?)).sum()
    }
}

impl fmt::Display for MzvCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, &k)) in self.0.iter().enumerate() {
            let sign = if k < 0 { "-" } else if i > 0 { "+" } else { "" };
            let sep = if i > 0 { " " } else { "" };
            let mag = k.unsigned_abs();
            let coeff = if mag == 1 { String::new() } else { format!("{mag}·") };
            if c.depth() == 0 {
                write!(f, "{sep}{sign}{sep}{mag}")?;
            } else {
                write!(f, "{sep}{sign}{sep}{coeff}ζ{c}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for MzvCombination {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            composition: &'a Composition,
            coeff: i64,
        }
        self.0.iter().map(|(c, &k)| Term { composition: c, coeff: k }).collect::<Vec<_>>().serialize(s)
    }
}

/// Shuffles of `u` and `v` with multiplicities.
pub fn shuffle(u: &ABWord, v: &ABWord) -> BTreeMap<ABWord, u64> {
    fn go(u: &[AB], v: &[AB], prefix: &mut Vec<AB>, out: &mut BTreeMap<ABWord, u64>) {
        if u.is_empty() || v.is_empty() {
            let mut w = prefix.clone();
            w.extend_from_slice(u);
            w.extend_from_slice(v);
            *out.entry(ABWord(w)).or_default() += 1;
            return;
        }
        prefix.push(u[0]);
        go(&u[1..], v, prefix, out);
        prefix.pop();
        prefix.push(v[0]);
        go(u, &v[1..], prefix, out);
        prefix.pop();
    }
    let mut out = BTreeMap::new();
    go(&u.0, &v.0, &mut Vec::new(), &mut out);
    out
}

fn memo() -> &'static Mutex<HashMap<ABWord, MzvCombination>> {
    static MEMO: OnceLock<Mutex<HashMap<ABWord, MzvCombination>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Shuffle-regularized value of the iterated integral of `w`, with both
/// one-letter words regularized to 0.
pub fn shuffle_regularize(w: &ABWord) -> MzvCombination {
    if let Some(v) = memo().lock().unwrap().get(w) {
        return v.clone();
    }
    let v = regularize_uncached(w);
    memo().lock().unwrap().insert(w.clone(), v.clone());
    v
}

fn regularize_uncached(w: &ABWord) -> MzvCombination {
    let letters = &w.0;
    if w.is_convergent() {
        return if letters.is_empty() {
            MzvCombination::unit()
        } else {
            MzvCombination::single(w.to_composition().unwrap())
        };
    }
    let mut acc: BTreeMap<Composition, Rational64> = BTreeMap::new();
    let mut add = |word: Vec<AB>| {
        for (c, k) in shuffle_regularize(&ABWord(word)).terms() {
            *acc.entry(c.clone()).or_insert_with(Rational64::zero) += Rational64::from(k);
        }
    };
    let lead = letters.iter().take_while(|&&l| l == AB::B).count();
    let m = if lead > 0 {
        // b ⧢ b^{m-1}u: every insertion into the leading block gives b^m u
        let u = &letters[lead..];
        if u.is_empty() {
            return MzvCombination::default();
        }
        for i in 1..=u.len() {
            let mut x = vec![AB::B; lead - 1];
            x.extend_from_slice(&u[..i]);
            x.push(AB::B);
            x.extend_from_slice(&u[i..]);
            add(x);
        }
        lead
    } else {
        let trail = letters.iter().rev().take_while(|&&l| l == AB::A).count();
        let v = &letters[..letters.len() - trail];
        if v.is_empty() {
            return MzvCombination::default();
        }
        for i in 0..v.len() {
            let mut x = v[..i].to_vec();
            x.push(AB::A);
            x.extend_from_slice(&v[i..]);
            x.extend(std::iter::repeat(AB::A).take(trail - 1));
            add(x);
        }
        trail
    };
    let m = Rational64::from(m as i64);
    MzvCombination(
        acc.into_iter()
            .filter_map(|(c, k)| {
                let r = -k / m;
                assert!(r.is_integer(), "regularized value of {w} is not integral");
                (!r.is_zero()).then(|| (c, r.to_integer()))
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mzvassoc::zeta::DEFAULT_EPS;

    fn reg(s: &str) -> MzvCombination {
        shuffle_regularize(&s.parse().unwrap())
    }

    fn comb(terms: &[(&[u32], i64)]) -> MzvCombination {
        MzvCombination(terms.iter().map(|&(c, k)| (Composition::new(c), k)).collect())
    }

    #[test]
    fn spec_examples() {
        assert_eq!(reg("ab"), comb(&[(&[2], 1)]));
        assert_eq!(reg("ba"), comb(&[(&[2], -1)]));
        assert!(reg("a").is_zero());
        assert!(reg("b").is_zero());
        assert!(reg("bb").is_zero());
        assert_eq!(reg(""), MzvCombination::unit());
    }

    #[test]
    fn shuffle_counts() {
        let s = shuffle(&"a".parse().unwrap(), &"ab".parse().unwrap());
        assert_eq!(s.get(&"aab".parse().unwrap()), Some(&2));
        assert_eq!(s.get(&"aba".parse().unwrap()), Some(&1));
        assert_eq!(s.values().sum::<u64>(), 3);
    }

    fn all_words(max: usize) -> Vec<ABWord> {
        (0..=max).flat_map(ABWord::all_of_degree).collect()
    }

    #[test]
    fn shuffle_homomorphism() {
        let words = all_words(3);
        for u in &words {
            for v in &words {
                if u.degree() + v.degree() > 6 {
                    continue;
                }
                let lhs = reg(&u.to_string()).eval(DEFAULT_EPS).unwrap() * reg(&v.to_string()).eval(DEFAULT_EPS).unwrap();
                let rhs: f64 = shuffle(u, v)
                    .iter()
                    .map(|(w, &k)| k as f64 * shuffle_regularize(w).eval(DEFAULT_EPS).unwrap())
                    .sum();
                assert!((lhs - rhs).abs() < 1e-7, "{u} ⧢ {v}: {lhs} vs {rhs}");
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(reg("ba").to_string(), "-ζ(2)");
        assert_eq!(comb(&[(&[2, 1], 2), (&[3], -1)]).to_string(), "2·ζ(2,1) - ζ(3)");
    }
}
