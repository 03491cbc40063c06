//! Polynomials in one variable `q` with arbitrary-precision non-negative
//! integer coefficients, and the standard `q`-analogues built from them.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// A polynomial `c_0 + c_1 q + c_2 q^2 + ...` with `BigUint` coefficients.
///
/// Stored densely by exponent. The highest stored coefficient is always
/// nonzero, so the zero polynomial has no coefficients and equality is
/// coefficient-exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigUint>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::monomial(0)
    }

    /// `q^exponent`.
    pub fn monomial(exponent: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); exponent + 1];
        coeffs[exponent] = BigUint::one();
        QPoly { coeffs }
    }

    pub fn from_coefficients(coeffs: Vec<BigUint>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_u64_coefficients(coeffs: &[u64]) -> Self {
        QPoly::from_coefficients(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Coefficients indexed by exponent, without trailing zeros.
    pub fn coefficients(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coefficient(&self, exponent: usize) -> BigUint {
        self.coeffs.get(exponent).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Value at `q = 1`, i.e. the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Coefficients as `u64`, or `None` if any of them does not fit.
    pub fn to_u64_coefficients(&self) -> Option<Vec<u64>> {
        self.coeffs.iter().map(ToPrimitive::to_u64).collect()
    }

    /// Multiplies by `q^by`.
    pub fn shifted(&self, by: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigUint::zero(); by];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigUint::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl AddAssign for QPoly {
    fn add_assign(&mut self, rhs: QPoly) {
        *self += &rhs;
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;

    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coefficients(coeffs)
    }
}

impl Mul for QPoly {
    type Output = QPoly;

    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl core::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |acc, p| acc + p)
    }
}

impl core::iter::Product for QPoly {
    fn product<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::one(), |acc, p| acc * p)
    }
}

/// Ascending exponents, e.g. `1 + 2*q^2 + q^3`. The zero polynomial is `0`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (e, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{c}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{c}*q^{e}")?,
            }
        }
        Ok(())
    }
}

/// `[k]_q = 1 + q + ... + q^{k-1}`; `[0]_q = 0`.
pub fn q_integer(k: usize) -> QPoly {
    QPoly { coeffs: vec![BigUint::one(); k] }
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> QPoly {
    (1..=n).map(q_integer).product()
}

/// The Gaussian polynomial `[n choose m]_q`.
///
/// Built row by row from `[n, m] = [n-1, m-1] + q^m [n-1, m]`, so no
/// polynomial division is involved. Total in its arguments: the result is
/// zero whenever `m < 0` or `m > n` (in particular for every negative `n`).
pub fn gaussian_binomial(n: i64, m: i64) -> QPoly {
    if m < 0 || m > n {
        return QPoly::zero();
    }
    let (n, m) = (n as usize, m as usize);
    let m = m.min(n - m);
    // row[j] = [i, j] for the current i, j <= m
    let mut row: Vec<QPoly> = vec![QPoly::zero(); m + 1];
    row[0] = QPoly::one();
    for i in 1..=n {
        for j in (1..=m.min(i)).rev() {
            let lifted = row[j].shifted(j);
            let mut next = row[j - 1].clone();
            next += &lifted;
            row[j] = next;
        }
    }
    row.swap_remove(m)
}
