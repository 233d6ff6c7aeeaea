//! Even integer polynomials in the Conway variable `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `sum_j coeffs[j] · t^{2j}`, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct EvenPoly {
    coeffs: Vec<BigInt>,
}

impl EvenPoly {
    pub fn new<I: IntoIterator<Item = T>, T: Into<BigInt>>(coeffs: I) -> Self {
        let mut p = EvenPoly { coeffs: coeffs.into_iter().map(Into::into).collect() };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        EvenPoly::default()
    }

    pub fn one() -> Self {
        EvenPoly::new([1])
    }

    /// `c · t^{2j}`
    pub fn monomial(j: usize, c: impl Into<BigInt>) -> Self {
        let mut v = vec![BigInt::zero(); j];
        v.push(c.into());
        EvenPoly::new(v)
    }

    /// `t^2`
    pub fn t2() -> Self {
        EvenPoly::monomial(1, 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^{2j}`.
    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Largest `j` with a nonzero `t^{2j}` coefficient.
    pub fn half_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest `j` with a nonzero `t^{2j}` coefficient.
    pub fn low_half_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Keeps the coefficients of `t^{2j}` with `2j <= n`.
    pub fn truncate_t(&self, n: usize) -> Self {
        EvenPoly::new(self.coeffs.iter().take(n / 2 + 1).cloned())
    }

    pub fn mul_t2(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![BigInt::zero()];
        v.extend(self.coeffs.iter().cloned());
        EvenPoly { coeffs: v }
    }

    /// Exact division by `t^2`.
    pub fn div_t2(&self) -> Result<Self> {
        match self.coeffs.first() {
            None => Ok(EvenPoly::zero()),
            Some(c) if !c.is_zero() => Err(Error::InexactDivision),
            Some(_) => Ok(EvenPoly { coeffs: self.coeffs[1..].to_vec() }),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        EvenPoly::new(self.coeffs.iter().map(|c| c * k))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(EvenPoly::one(), |acc, _| &acc * self)
    }

    /// Value at `t^2 = u`.
    pub fn eval_u(&self, u: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * u + c)
    }
}

impl Add for &EvenPoly {
    type Output = EvenPoly;
    fn add(self, rhs: &EvenPoly) -> EvenPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        EvenPoly::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)))
    }
}

impl Sub for &EvenPoly {
    type Output = EvenPoly;
    fn sub(self, rhs: &EvenPoly) -> EvenPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        EvenPoly::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)))
    }
}

impl Mul for &EvenPoly {
    type Output = EvenPoly;
    fn mul(self, rhs: &EvenPoly) -> EvenPoly {
        if self.is_zero() || rhs.is_zero() {
            return EvenPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        EvenPoly::new(v)
    }
}

impl Neg for &EvenPoly {
    type Output = EvenPoly;
    fn neg(self) -> EvenPoly {
        EvenPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for EvenPoly {
            type Output = EvenPoly;
            fn $m(self, rhs: EvenPoly) -> EvenPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for EvenPoly {
    type Output = EvenPoly;
    fn neg(self) -> EvenPoly {
        -&self
    }
}

impl fmt::Display for EvenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t^2")?,
                (_, true) => write!(f, "t^{}", 2 * j)?,
                (_, false) => write!(f, "{mag}t^{}", 2 * j)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for EvenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EvenPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct EvenPolyJson {
    var: String,
    even: bool,
    coeffs: Vec<serde_json::Number>,
}

impl Serialize for EvenPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::Error as _;
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.to_string().parse::<serde_json::Number>().map_err(S::Error::custom))
            .collect::<std::result::Result<_, _>>()?;
        EvenPolyJson { var: "t".into(), even: true, coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for EvenPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = EvenPolyJson::deserialize(d)?;
        if raw.var != "t" || !raw.even {
            return Err(D::Error::custom("expected an even polynomial in t"));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|n| n.to_string().parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(EvenPoly::new(coeffs))
    }
}
