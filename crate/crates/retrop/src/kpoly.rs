//! Multivariate Laurent polynomials over the Puiseux field, their signed
//! tropicalizations and residue polynomials.

use crate::error::{Error, Result};
use crate::puiseux::Puiseux;
use crate::scalar::Scalar;
use crate::tropical::{SignedTrop, TropPoly};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A polynomial over the Puiseux field: a finite map from integer exponent
/// vectors (Laurent monomials allowed) to nonzero Puiseux coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxPoly<T> {
    dim: usize,
    terms: BTreeMap<Vec<i64>, Puiseux<T>>,
}

impl<T: Scalar> PuiseuxPoly<T> {
    pub fn zero(dim: usize) -> Self {
        PuiseuxPoly {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(dim: usize, exp: Vec<i64>, coeff: Puiseux<T>) -> Self {
        assert_eq!(exp.len(), dim);
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        PuiseuxPoly { dim, terms }
    }

    pub fn constant(dim: usize, coeff: Puiseux<T>) -> Self {
        Self::monomial(dim, vec![0; dim], coeff)
    }

    /// The coordinate variable `x_i` (0-based).
    pub fn variable(dim: usize, i: usize) -> Self {
        let mut exp = vec![0; dim];
        exp[i] = 1;
        Self::monomial(dim, exp, Puiseux::one())
    }

    pub fn from_terms(
        dim: usize,
        terms: impl IntoIterator<Item = (Vec<i64>, Puiseux<T>)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Vec<i64>, Puiseux<T>> = BTreeMap::new();
        for (exp, coeff) in terms {
            if exp.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: exp.len(),
                });
            }
            let entry = map.entry(exp).or_insert_with(Puiseux::zero);
            *entry = entry.clone() + coeff;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(PuiseuxPoly { dim, terms: map })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Puiseux<T>)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms.keys().cloned().collect()
    }

    pub fn coeff(&self, exp: &[i64]) -> Puiseux<T> {
        self.terms.get(exp).cloned().unwrap_or_else(Puiseux::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, c: &Puiseux<T>) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        PuiseuxPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.dim, Puiseux::one());
        for _ in 0..k {
            acc = acc * self.clone();
        }
        acc
    }

    /// Exact evaluation at a vector of Puiseux coordinates. Negative
    /// exponents require the corresponding coordinate to be a monomial.
    pub fn eval(&self, point: &[Puiseux<T>]) -> Result<Puiseux<T>> {
        if point.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: point.len(),
            });
        }
        let mut acc = Puiseux::zero();
        for (exp, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (e, x) in exp.iter().zip(point) {
                term = term * x.powi(*e)?;
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Partial derivative with respect to coordinate `i`.
    pub fn partial(&self, i: usize) -> Self {
        assert!(i < self.dim);
        let terms = self.terms.iter().filter(|(e, _)| e[i] != 0).map(|(e, c)| {
            let mut e2 = e.clone();
            e2[i] -= 1;
            (e2, c.clone() * Puiseux::from_int(e[i]))
        });
        Self::from_terms(self.dim, terms).expect("dimensions preserved")
    }

    /// The scaled Euler combination `b0*F + sum_i b_i x_i dF/dx_i`; its
    /// tropicalization is the Euler derivative of `trop(F)`.
    pub fn euler_combination(&self, b0: i64, b: &[i64]) -> Self {
        assert_eq!(b.len(), self.dim);
        let terms = self.terms.iter().filter_map(|(e, c)| {
            let weight: i64 = b0 + e.iter().zip(b).map(|(ei, bi)| ei * bi).sum::<i64>();
            if weight == 0 {
                None
            } else {
                Some((e.clone(), c.clone() * Puiseux::from_int(weight)))
            }
        });
        Self::from_terms(self.dim, terms).expect("dimensions preserved")
    }

    /// Per-monomial (sign, valuation) of the coefficients.
    pub fn tropicalize(&self) -> Result<TropPoly<T>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        TropPoly::new(
            self.dim,
            self.terms
                .iter()
                .map(|(e, c)| {
                    Ok((
                        e.clone(),
                        SignedTrop::new(c.sign()?, c.valuation()?),
                    ))
                })
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// Residue polynomial with respect to a modulus vector `w`: the sum over
    /// the monomials minimizing the tropicalization at `w` of their principal
    /// coefficients.
    pub fn residue(&self, w: &[T]) -> Result<MPoly<T>> {
        let trop = self.tropicalize()?;
        let argmin = trop.argmin_moduli(w)?;
        let terms = argmin
            .into_iter()
            .map(|e| {
                let pc = self.terms[&e].principal().expect("stored coefficients nonzero");
                (e, pc)
            })
            .collect::<Vec<_>>();
        Ok(MPoly::from_terms(self.dim, terms))
    }

    /// True when the two polynomials are equal up to a nonzero constant of
    /// the Puiseux field, decided by cross-multiplication of coefficients.
    pub fn proportional_to(&self, other: &Self) -> bool {
        if self.dim != other.dim || self.terms.len() != other.terms.len() {
            return false;
        }
        if self.is_zero() {
            return other.is_zero();
        }
        let mut pairs = self.terms.iter().zip(other.terms.iter());
        let Some(((e0, a0), (f0, b0))) = pairs.next() else {
            return true;
        };
        if e0 != f0 {
            return false;
        }
        for ((e, a), (f, b)) in self.terms.iter().zip(other.terms.iter()) {
            if e != f {
                return false;
            }
            if a0.clone() * b.clone() != b0.clone() * a.clone() {
                return false;
            }
        }
        true
    }

    /// Lexicographically largest exponent vector of the support.
    pub fn leading_exponent(&self) -> Option<Vec<i64>> {
        self.terms.keys().next_back().cloned()
    }

    /// Multiplies by the monomial unit `r * t^s` that gives the coefficient
    /// of the leading (lex) monomial principal coefficient 1 and valuation 0.
    pub fn normalize_leading(&self) -> Self {
        let Some(lead) = self.leading_exponent() else {
            return self.clone();
        };
        let c = &self.terms[&lead];
        let v = c.valuation().expect("stored coefficients nonzero");
        let pc = c.principal().expect("stored coefficients nonzero");
        let unit = Puiseux::monomial(T::one() / pc, T::zero() - v);
        self.scale(&unit)
    }
}

impl<T: Scalar> Add for PuiseuxPoly<T> {
    type Output = PuiseuxPoly<T>;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        Self::from_terms(self.dim, self.terms.into_iter().chain(rhs.terms))
            .expect("dimensions checked")
    }
}

impl<T: Scalar> Neg for PuiseuxPoly<T> {
    type Output = PuiseuxPoly<T>;
    fn neg(mut self) -> Self {
        self.terms = self
            .terms
            .into_iter()
            .map(|(e, c)| (e, -c))
            .collect();
        self
    }
}

impl<T: Scalar> Sub for PuiseuxPoly<T> {
    type Output = PuiseuxPoly<T>;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Mul for PuiseuxPoly<T> {
    type Output = PuiseuxPoly<T>;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut acc: BTreeMap<Vec<i64>, Puiseux<T>> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let c = ca.clone() * cb.clone();
                let entry = acc.entry(e).or_insert_with(Puiseux::zero);
                *entry = entry.clone() + c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        PuiseuxPoly {
            dim: self.dim,
            terms: acc,
        }
    }
}

impl<T: Scalar> fmt::Display for PuiseuxPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::render_kpoly(self))
    }
}

/// Product of one representative per proportionality class of the factors.
/// The first occurrence of each class is kept, normalized so that the
/// leading (lex) monomial has principal coefficient 1 and valuation 0.
pub fn squarefree_from_factors<T: Scalar>(factors: &[PuiseuxPoly<T>]) -> PuiseuxPoly<T> {
    let dim = factors.first().map(|f| f.dim()).unwrap_or(0);
    let mut reps: Vec<PuiseuxPoly<T>> = Vec::new();
    for f in factors {
        assert!(!f.is_zero(), "factors must be nonzero");
        if !reps.iter().any(|r| r.proportional_to(f)) {
            reps.push(f.clone());
        }
    }
    let mut acc = PuiseuxPoly::constant(dim, Puiseux::one());
    for r in reps {
        acc = acc * r.normalize_leading();
    }
    acc
}

/// A polynomial with scalar (residue field) coefficients on an integer
/// exponent support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly<T> {
    dim: usize,
    terms: BTreeMap<Vec<i64>, T>,
}

impl<T: Scalar> MPoly<T> {
    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Vec<i64>, T)>) -> Self {
        let mut map: BTreeMap<Vec<i64>, T> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), dim);
            let entry = map.entry(e).or_insert_with(T::zero);
            *entry = entry.clone() + c;
        }
        map.retain(|_, c| !c.is_zero());
        MPoly { dim, terms: map }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &T)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms.keys().cloned().collect()
    }

    pub fn coeff(&self, exp: &[i64]) -> T {
        self.terms.get(exp).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Dense univariate coefficient vector; requires dim 1 and nonnegative
    /// exponents.
    pub fn to_univariate(&self) -> Result<crate::upoly::UPoly<T>> {
        if self.dim != 1 {
            return Err(Error::NotUnivariate);
        }
        let deg = self
            .terms
            .keys()
            .map(|e| e[0])
            .max()
            .unwrap_or(0);
        if self.terms.keys().any(|e| e[0] < 0) {
            return Err(Error::NotUnivariate);
        }
        let mut coeffs = vec![T::zero(); (deg + 1) as usize];
        for (e, c) in &self.terms {
            coeffs[e[0] as usize] = c.clone();
        }
        Ok(crate::upoly::UPoly::new(coeffs))
    }
}

impl<T: Scalar> fmt::Display for MPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{}*x^{:?}", c, e)?;
        }
        Ok(())
    }
}
