//! Finite real Puiseux series: exact Laurent polynomials in `t` with
//! rational exponents and rational coefficients.
//!
//! Series here are always finite sums, so all ring arithmetic is exact and
//! there is never a truncation precision to manage. Division is deliberately
//! not provided; every construction in the crate uses ring operations and
//! clears denominators by multiplying with monomial units instead.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tropical::Sign;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A finite sum of terms `c * t^e` with rational `c != 0` and rational `e`,
/// stored in strictly increasing exponent order. The empty sum is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Puiseux<T> {
    terms: Vec<(T, T)>, // (exponent, coefficient)
}

impl<T: Scalar> Puiseux<T> {
    pub fn zero() -> Self {
        Puiseux { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, T::zero())
    }

    /// The monomial `c * t^e`; zero when `c == 0`.
    pub fn monomial(c: T, e: T) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Puiseux {
                terms: vec![(e, c)],
            }
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(T::from_int(n))
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(T::one(), T::one())
    }

    /// Builds a series from arbitrary (exponent, coefficient) pairs,
    /// collecting like exponents and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (T, T)>) -> Self {
        let mut map: BTreeMap<T, T> = BTreeMap::new();
        for (e, c) in terms {
            let entry = map.entry(e).or_insert_with(T::zero);
            *entry = entry.clone() + c;
        }
        Puiseux {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).map(|(e, c)| (e, c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order as (exponent, coefficient).
    pub fn terms(&self) -> &[(T, T)] {
        &self.terms
    }

    /// Least exponent of a nonzero series.
    pub fn valuation(&self) -> Result<T> {
        self.terms
            .first()
            .map(|(e, _)| e.clone())
            .ok_or(Error::ZeroValuation)
    }

    /// Coefficient at the least exponent.
    pub fn principal(&self) -> Result<T> {
        self.terms
            .first()
            .map(|(_, c)| c.clone())
            .ok_or(Error::ZeroValuation)
    }

    /// Sign of the principal coefficient.
    pub fn sign(&self) -> Result<Sign> {
        let c = self.principal()?;
        Ok(if c.is_negative() { Sign::Minus } else { Sign::Plus })
    }

    /// Coefficient of exponent `w`, zero if absent.
    pub fn residue(&self, w: &T) -> T {
        match self.terms.binary_search_by(|(e, _)| e.cmp(w)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn is_positive(&self) -> bool {
        matches!(self.sign(), Ok(Sign::Plus))
    }

    /// True when the series is a single term `c * t^e`.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Exact inverse of a monomial: `(c t^e)^-1 = c^-1 t^-e`.
    /// General series have no finite inverse, hence the error.
    pub fn monomial_inverse(&self) -> Result<Self> {
        if self.terms.len() != 1 {
            return Err(Error::NegativeExponentEval);
        }
        let (e, c) = &self.terms[0];
        Ok(Self::monomial(T::one() / c.clone(), T::zero() - e.clone()))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.clone() * self.clone();
        }
        acc
    }

    /// `self^k` for integer `k`; negative powers require a monomial.
    pub fn powi(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            Ok(self.monomial_inverse()?.pow((-k) as u32))
        }
    }

    /// Total order induced by the sign of `a - b`.
    pub fn cmp_series(&self, other: &Self) -> Ordering {
        let d = self.clone() - other.clone();
        if d.is_zero() {
            Ordering::Equal
        } else if d.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Common denominator of all exponents.
    pub fn exponent_denominator(&self) -> num_bigint::BigInt {
        crate::scalar::denominator_lcm(
            &self.terms.iter().map(|(e, _)| e.clone()).collect::<Vec<_>>(),
        )
    }
}

impl<T: Scalar> Add for Puiseux<T> {
    type Output = Puiseux<T>;
    fn add(self, rhs: Self) -> Self {
        Self::from_terms(self.terms.into_iter().chain(rhs.terms))
    }
}

impl<T: Scalar> Neg for Puiseux<T> {
    type Output = Puiseux<T>;
    fn neg(mut self) -> Self {
        for (_, c) in &mut self.terms {
            *c = T::zero() - c.clone();
        }
        self
    }
}

impl<T: Scalar> Sub for Puiseux<T> {
    type Output = Puiseux<T>;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Mul for Puiseux<T> {
    type Output = Puiseux<T>;
    fn mul(self, rhs: Self) -> Self {
        let mut acc: BTreeMap<T, T> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.clone() + eb.clone();
                let c = ca.clone() * cb.clone();
                let entry = acc.entry(e).or_insert_with(T::zero);
                *entry = entry.clone() + c;
            }
        }
        Puiseux {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl<T: Scalar> PartialOrd for Puiseux<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_series(other))
    }
}

impl<T: Scalar> Ord for Puiseux<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_series(other)
    }
}

impl<T: Scalar> fmt::Display for Puiseux<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::render_puiseux(self))
    }
}

impl<T: Scalar> std::str::FromStr for Puiseux<T> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::text::parse_puiseux(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    type P = Puiseux<Rat>;

    fn ps(s: &str) -> P {
        s.parse().unwrap()
    }

    #[test]
    fn add_cancels() {
        assert!((ps("1*t") + ps("-1*t")).is_zero());
        assert_eq!(ps("2 + 1*t") + ps("1"), ps("3 + 1*t"));
        assert_eq!(ps("-2*t") + ps("-7"), ps("-7 - 2*t"));
    }

    #[test]
    fn mul_collects() {
        assert_eq!(ps("2*t") * ps("4*t"), ps("8*t^2"));
        assert_eq!(ps("-1*t") * ps("-1*t"), ps("1*t^2"));
        assert_eq!(ps("1 + 1*t^1/2") * ps("1 - 1*t^1/2"), ps("1 - 1*t"));
    }

    #[test]
    fn valuation_sign_principal() {
        assert_eq!(ps("3*t^1/2 - 1*t").valuation().unwrap(), Rat::ratio(1, 2));
        assert_eq!(ps("-3").valuation().unwrap(), Rat::from_int(0));
        assert_eq!(ps("32*t^3").valuation().unwrap(), Rat::from_int(3));
        assert_eq!(ps("-1*t").sign().unwrap(), Sign::Minus);
        assert_eq!(ps("-1*t").principal().unwrap(), Rat::from_int(-1));
        assert_eq!(ps("2 + 1*t").sign().unwrap(), Sign::Plus);
        assert_eq!(ps("2 + 1*t").principal().unwrap(), Rat::from_int(2));
        assert_eq!(ps("1*t^2 + 4*t").sign().unwrap(), Sign::Plus);
        assert_eq!(ps("1*t^2 + 4*t").principal().unwrap(), Rat::from_int(4));
        assert_eq!(P::zero().valuation(), Err(Error::ZeroValuation));
    }

    #[test]
    fn order_and_valuation_compatibility() {
        assert_eq!(ps("1*t").cmp_series(&P::zero()), Ordering::Greater);
        assert_eq!(ps("1*t").cmp_series(&ps("1/2")), Ordering::Less);
        // 0 < t < 1/2 and v(1/2) = 0 <= v(t) = 1
        assert!(ps("1/2").valuation().unwrap() <= ps("1*t").valuation().unwrap());
    }

    #[test]
    fn residue_lookup() {
        let p = ps("2 + 1*t");
        assert_eq!(p.residue(&Rat::from_int(0)), Rat::from_int(2));
        assert_eq!(p.residue(&Rat::from_int(1)), Rat::from_int(1));
        assert_eq!(ps("1*t^2").residue(&Rat::from_int(0)), Rat::from_int(0));
    }

    #[test]
    fn monomial_inverse_errors_on_sums() {
        assert!(ps("1 + 1*t").monomial_inverse().is_err());
        assert_eq!(ps("2*t").monomial_inverse().unwrap(), ps("1/2*t^-1"));
    }
}
