//! Dense univariate polynomials over the scalar field, the workhorse behind
//! Sturm sequences and positivity certificates.

use crate::scalar::Scalar;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients in increasing degree order; the leading coefficient is
/// nonzero, the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> UPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Euclidean remainder; the scalar type is a field so this is exact.
    pub fn rem(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut r = self.coeffs.clone();
        let d = divisor.coeffs.len();
        let lead = divisor.coeffs.last().unwrap();
        while r.len() >= d {
            let q = r.last().unwrap().clone() / lead.clone();
            let shift = r.len() - d;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let idx = shift + i;
                r[idx] = r[idx].clone() - q.clone() * c.clone();
            }
            // leading term cancels exactly
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Self::new(r)
    }

    /// Strips the factor `x^k` dividing the polynomial; returns the cofactor
    /// and `k`. Nonzero roots are unchanged.
    pub fn strip_zero_roots(&self) -> (Self, usize) {
        if self.is_zero() {
            return (Self::zero(), 0);
        }
        let k = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial");
        (Self::new(self.coeffs[k..].to_vec()), k)
    }

    /// Multiplies by `(1 + x)` in place-friendly form.
    pub fn mul_one_plus_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let n = self.coeffs.len();
        let mut out = vec![T::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = out[i].clone() + c.clone();
            out[i + 1] = out[i + 1].clone() + c.clone();
        }
        Self::new(out)
    }

    /// Substitutes `x -> -x`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if i % 2 == 1 {
                        T::zero() - c.clone()
                    } else {
                        c.clone()
                    }
                })
                .collect(),
        )
    }

    /// Splits into even and odd parts: `p(x) = E(x^2) + x * O(x^2)`.
    pub fn even_odd_split(&self) -> (Self, Self) {
        let even = self.coeffs.iter().step_by(2).cloned().collect();
        let odd = self.coeffs.iter().skip(1).step_by(2).cloned().collect();
        (Self::new(even), Self::new(odd))
    }
}

impl<T: Scalar> Add for UPoly<T> {
    type Output = UPoly<T>;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![T::zero(); n];
        for (i, c) in self.coeffs.into_iter().enumerate() {
            out[i] = out[i].clone() + c;
        }
        for (i, c) in rhs.coeffs.into_iter().enumerate() {
            out[i] = out[i].clone() + c;
        }
        Self::new(out)
    }
}

impl<T: Scalar> Neg for UPoly<T> {
    type Output = UPoly<T>;
    fn neg(self) -> Self {
        Self::new(
            self.coeffs
                .into_iter()
                .map(|c| T::zero() - c)
                .collect(),
        )
    }
}

impl<T: Scalar> Sub for UPoly<T> {
    type Output = UPoly<T>;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Mul for UPoly<T> {
    type Output = UPoly<T>;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<T: Scalar> fmt::Display for UPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*x", c)?,
                _ => write!(f, "{}*x^{}", c, i)?,
            }
        }
        Ok(())
    }
}
