//! The exact scalar field underlying all computations.
//!
//! Everything in this crate is generic over a scalar type implementing
//! [`Scalar`]: an ordered field with exact arithmetic and a rational
//! representation. The crate root exports concrete aliases built on
//! `BigRational`; a fixed-width variant over `Ratio<i128>` is available for
//! small inputs where allocation overhead matters.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed, ToPrimitive};
use std::fmt;

/// An exact, totally ordered field scalar with rational structure.
///
/// Floating point types do not qualify: membership tests, argmin ties and
/// Sturm sequences all rely on exact equality of field elements.
pub trait Scalar: Num + Signed + Ord + Clone + fmt::Debug + fmt::Display {
    fn from_int(n: i64) -> Self;

    /// Builds `numer/denom`. `denom` must be nonzero.
    fn from_big_ratio(numer: BigInt, denom: BigInt) -> Self;

    /// Reduced `(numer, denom)` with `denom > 0`.
    fn ratio_parts(&self) -> (BigInt, BigInt);

    fn ratio(n: i64, d: i64) -> Self {
        Self::from_big_ratio(BigInt::from(n), BigInt::from(d))
    }

    /// Lossy conversion used only for rendering (SVG coordinates).
    fn to_f64_approx(&self) -> f64 {
        let (n, d) = self.ratio_parts();
        n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN)
    }

    /// True when the scalar is an integer.
    fn is_integer(&self) -> bool {
        self.ratio_parts().1 == BigInt::from(1)
    }
}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_big_ratio(numer: BigInt, denom: BigInt) -> Self {
        BigRational::new(numer, denom)
    }

    fn ratio_parts(&self) -> (BigInt, BigInt) {
        (self.numer().clone(), self.denom().clone())
    }
}

impl Scalar for Ratio<i128> {
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(n as i128)
    }

    fn from_big_ratio(numer: BigInt, denom: BigInt) -> Self {
        let n = i128::try_from(numer).expect("numerator overflows i128");
        let d = i128::try_from(denom).expect("denominator overflows i128");
        Ratio::new(n, d)
    }

    fn ratio_parts(&self) -> (BigInt, BigInt) {
        (BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }
}

/// Least common multiple of the denominators of a slice of scalars.
pub fn denominator_lcm<T: Scalar>(values: &[T]) -> BigInt {
    let mut acc = BigInt::from(1);
    for v in values {
        let (_, d) = v.ratio_parts();
        acc = acc.lcm(&d);
    }
    acc
}

/// Scales a rational vector to a primitive integer vector (gcd 1), keeping
/// signs. Returns `None` on the zero vector.
pub fn to_primitive_integers<T: Scalar>(values: &[T]) -> Option<Vec<BigInt>> {
    let lcm = denominator_lcm(values);
    let ints: Vec<BigInt> = values
        .iter()
        .map(|v| {
            let (n, d) = v.ratio_parts();
            n * (&lcm / d)
        })
        .collect();
    let mut g = BigInt::from(0);
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return None;
    }
    Some(ints.into_iter().map(|x| x / &g).collect())
}

use num_traits::Zero;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_round_trip() {
        let x = BigRational::ratio(-6, 4);
        let (n, d) = x.ratio_parts();
        assert_eq!(n, BigInt::from(-3));
        assert_eq!(d, BigInt::from(2));
        assert!(!x.is_integer());
        assert!(BigRational::from_int(7).is_integer());
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![
            BigRational::ratio(1, 2),
            BigRational::ratio(-2, 3),
            BigRational::from_int(1),
        ];
        let ints = to_primitive_integers(&v).unwrap();
        assert_eq!(
            ints,
            vec![BigInt::from(3), BigInt::from(-4), BigInt::from(6)]
        );
    }
}
