use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

/// Integer Laurent polynomial in one variable `q`, stored sparsely.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(degree: i64, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(degree, coeff);
        p
    }

    /// `[d]_q = 1 + q + ⋯ + q^{d−1}`.
    pub fn q_integer(d: usize) -> Self {
        let mut p = Self::zero();
        for k in 0..d as i64 {
            p.add_term(k, 1);
        }
        p
    }

    /// Builds from a dense coefficient list starting at degree 0.
    pub fn from_coeffs(c: &[i64]) -> Self {
        let mut p = Self::zero();
        for (k, &x) in c.iter().enumerate() {
            p.add_term(k as i64, x);
        }
        p
    }

    pub fn add_term(&mut self, degree: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.coeffs.entry(degree).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.coeffs.remove(&degree);
        }
    }

    pub fn coeff(&self, degree: i64) -> i64 {
        self.coeffs.get(&degree).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&d, &c)| (d, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// `P(q) = q^d P(1/q)`.
    pub fn is_palindromic_of_degree(&self, d: i64) -> bool {
        self.coeffs.iter().all(|(&k, &c)| self.coeff(d - k) == c)
    }

    /// Dense coefficients from degree 0 to the maximal degree.
    pub fn dense(&self) -> Vec<i64> {
        match self.max_degree() {
            None => vec![],
            Some(m) => (0..=m).map(|k| self.coeff(k)).collect(),
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (d, c) in rhs.terms() {
            out.add_term(d, c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in self.terms() {
            for (b, y) in rhs.terms() {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.terms() {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match d {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if d == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
