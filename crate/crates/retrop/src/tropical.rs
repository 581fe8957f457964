//! Signed tropical values and real tropical polynomials.
//!
//! A signed tropical value is a pair (sign, modulus). Multiplication is
//! componentwise (sign product, modulus sum); there is no tropical addition
//! of opposite signs, so no semiring structure is pretended here.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

/// Sign of a nonzero series or tropical value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_int(n: i64) -> Sign {
        if n < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn as_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `self^e`; only the parity of `e` matters, so negative exponents are
    /// treated by `sign^-k = sign^k`.
    pub fn pow(self, e: i64) -> Sign {
        if e.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            self
        }
    }

    pub fn glyph(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.glyph())
    }
}

/// An element `a^+` or `a^-`: a sign together with a modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedTrop<T> {
    pub sign: Sign,
    pub modulus: T,
}

impl<T: Scalar> SignedTrop<T> {
    pub fn new(sign: Sign, modulus: T) -> Self {
        SignedTrop { sign, modulus }
    }

    pub fn pos(modulus: T) -> Self {
        Self::new(Sign::Plus, modulus)
    }

    pub fn neg(modulus: T) -> Self {
        Self::new(Sign::Minus, modulus)
    }
}

impl<T: Scalar> Mul for SignedTrop<T> {
    type Output = SignedTrop<T>;
    fn mul(self, rhs: Self) -> Self {
        SignedTrop {
            sign: self.sign * rhs.sign,
            modulus: self.modulus + rhs.modulus,
        }
    }
}

impl<T: Scalar> PartialOrd for SignedTrop<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> Ord for SignedTrop<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.modulus
            .cmp(&other.modulus)
            .then(self.sign.cmp(&other.sign))
    }
}

impl<T: Scalar> fmt::Display for SignedTrop<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.modulus, self.sign.glyph())
    }
}

/// A point of the signed tropical torus, one signed value per coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TropPoint<T> {
    pub coords: Vec<SignedTrop<T>>,
}

impl<T: Scalar> PartialOrd for TropPoint<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> Ord for TropPoint<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl<T: Scalar> TropPoint<T> {
    pub fn new(coords: Vec<SignedTrop<T>>) -> Self {
        assert!(!coords.is_empty(), "tropical points have positive dimension");
        TropPoint { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn moduli(&self) -> Vec<T> {
        self.coords.iter().map(|c| c.modulus.clone()).collect()
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.coords.iter().map(|c| c.sign).collect()
    }

    /// Evaluated sign contribution of the point at exponent vector `exp`:
    /// the product of coordinate signs raised to the exponents.
    pub fn sign_at(&self, exp: &[i64]) -> Sign {
        let mut s = Sign::Plus;
        for (c, e) in self.coords.iter().zip(exp) {
            s = s * c.sign.pow(*e);
        }
        s
    }
}

impl<T: Scalar> fmt::Display for TropPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::render_point(self))
    }
}

/// A real tropical polynomial: a finite map from integer exponent vectors to
/// signed tropical coefficients. Defines the piecewise affine function
/// `p -> min over the support of (|a| + <|p|, exp>)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropPoly<T> {
    dim: usize,
    terms: BTreeMap<Vec<i64>, SignedTrop<T>>,
}

impl<T: Scalar> TropPoly<T> {
    pub fn new(
        dim: usize,
        terms: impl IntoIterator<Item = (Vec<i64>, SignedTrop<T>)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (exp, coeff) in terms {
            if exp.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: exp.len(),
                });
            }
            map.insert(exp, coeff);
        }
        if map.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(TropPoly { dim, terms: map })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &SignedTrop<T>)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coeff(&self, exp: &[i64]) -> Option<&SignedTrop<T>> {
        self.terms.get(exp)
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got,
            });
        }
        Ok(())
    }

    /// Value of one monomial at moduli `w`.
    fn term_value(exp: &[i64], coeff: &SignedTrop<T>, w: &[T]) -> T {
        let mut v = coeff.modulus.clone();
        for (e, wi) in exp.iter().zip(w) {
            v = v + wi.clone() * T::from_int(*e);
        }
        v
    }

    /// Minimum of the piecewise affine function at moduli `w`.
    pub fn eval_moduli(&self, w: &[T]) -> Result<T> {
        self.check_dim(w.len())?;
        Ok(self
            .terms
            .iter()
            .map(|(exp, c)| Self::term_value(exp, c, w))
            .min()
            .expect("nonempty support"))
    }

    /// Minimum of the piecewise affine function at a signed point (the value
    /// depends only on the moduli).
    pub fn eval(&self, p: &TropPoint<T>) -> Result<T> {
        self.eval_moduli(&p.moduli())
    }

    /// Exponent vectors achieving the minimum at moduli `w`, in
    /// lexicographic order.
    pub fn argmin_moduli(&self, w: &[T]) -> Result<Vec<Vec<i64>>> {
        let min = self.eval_moduli(w)?;
        Ok(self
            .terms
            .iter()
            .filter(|(exp, c)| Self::term_value(exp, c, w) == min)
            .map(|(exp, _)| exp.clone())
            .collect())
    }

    /// Minimizing monomials together with their evaluated signs
    /// `s(a) * prod s(p_l)^(l)`, ordered lexicographically by exponent.
    pub fn argmin(&self, p: &TropPoint<T>) -> Result<Vec<(Vec<i64>, Sign)>> {
        self.check_dim(p.dim())?;
        let exps = self.argmin_moduli(&p.moduli())?;
        Ok(exps
            .into_iter()
            .map(|exp| {
                let s = self.terms[&exp].sign * p.sign_at(&exp);
                (exp, s)
            })
            .collect())
    }

    /// Real tropical hypersurface membership: the minimum is attained by two
    /// monomials of opposite evaluated sign.
    pub fn is_member(&self, p: &TropPoint<T>) -> Result<bool> {
        let am = self.argmin(p)?;
        let has_plus = am.iter().any(|(_, s)| *s == Sign::Plus);
        let has_minus = am.iter().any(|(_, s)| *s == Sign::Minus);
        Ok(has_plus && has_minus)
    }

    /// Forgets signs; usable as the classical min-plus polynomial via
    /// `eval_moduli`/`argmin_moduli`.
    pub fn unsigned(&self) -> TropPoly<T> {
        TropPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), SignedTrop::pos(c.modulus.clone())))
                .collect(),
        }
    }

    /// Twists every coefficient sign by the evaluated sign of `p` at its
    /// exponent, so that membership data at `p` equals membership data of the
    /// twisted polynomial at the all-positive point with the same moduli.
    pub fn sign_twist(&self, p: &TropPoint<T>) -> Result<TropPoly<T>> {
        self.check_dim(p.dim())?;
        Ok(TropPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    (
                        e.clone(),
                        SignedTrop::new(c.sign * p.sign_at(e), c.modulus.clone()),
                    )
                })
                .collect(),
        })
    }
}

impl<T: Scalar> fmt::Display for TropPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::render_trop_poly(self))
    }
}
