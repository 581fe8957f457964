//! Exact real-root counting via Sturm sequences.
//!
//! The chain is the classical one (`p`, `p'`, negated remainders); the count
//! of sign variations between two endpoints equals the number of distinct
//! real roots in the half-open interval. Endpoints may be rational, plus or
//! minus infinity, or `±sqrt(u)` for positive rational `u` — the latter is
//! decided exactly through the even/odd split `p(x) = E(x^2) + x·O(x^2)`.

use crate::scalar::Scalar;
use crate::upoly::UPoly;
use std::cmp::Ordering;

/// An evaluation point for sign queries.
#[derive(Debug, Clone)]
pub enum Endpoint<T> {
    NegInf,
    Rat(T),
    /// `sqrt(base)` if `negated` is false, `-sqrt(base)` otherwise;
    /// `base` must be positive.
    Sqrt { base: T, negated: bool },
    PosInf,
}

impl<T: Scalar> Endpoint<T> {
    pub fn sqrt(base: T) -> Self {
        Endpoint::Sqrt {
            base,
            negated: false,
        }
    }

    pub fn neg_sqrt(base: T) -> Self {
        Endpoint::Sqrt {
            base,
            negated: true,
        }
    }
}

fn sign_of<T: Scalar>(x: &T) -> i8 {
    match x.cmp(&T::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Exact sign of `a + b*sqrt(u)` for rational `a`, `b` and positive `u`.
fn sign_with_sqrt<T: Scalar>(a: &T, b: &T, u: &T) -> i8 {
    let sa = sign_of(a);
    let sb = sign_of(b);
    match (sa, sb) {
        (0, _) => sb,
        (_, 0) => sa,
        (1, 1) => 1,
        (-1, -1) => -1,
        (1, -1) => sign_of(&(a.clone() * a.clone() - b.clone() * b.clone() * u.clone())),
        (-1, 1) => sign_of(&(b.clone() * b.clone() * u.clone() - a.clone() * a.clone())),
        _ => unreachable!(),
    }
}

/// Sign of a polynomial at an endpoint, computed exactly.
pub fn sign_at<T: Scalar>(p: &UPoly<T>, at: &Endpoint<T>) -> i8 {
    if p.is_zero() {
        return 0;
    }
    match at {
        Endpoint::Rat(x) => sign_of(&p.eval(x)),
        Endpoint::PosInf => sign_of(p.leading().unwrap()),
        Endpoint::NegInf => {
            let s = sign_of(p.leading().unwrap());
            if p.degree().unwrap() % 2 == 1 {
                -s
            } else {
                s
            }
        }
        Endpoint::Sqrt { base, negated } => {
            debug_assert!(base > &T::zero());
            let (e, o) = p.even_odd_split();
            let a = e.eval(base);
            let b = o.eval(base);
            let b = if *negated { T::zero() - b } else { b };
            sign_with_sqrt(&a, &b, base)
        }
    }
}

/// The Sturm chain of `p`.
#[derive(Debug, Clone)]
pub struct SturmChain<T> {
    chain: Vec<UPoly<T>>,
}

impl<T: Scalar> SturmChain<T> {
    pub fn new(p: &UPoly<T>) -> Self {
        let mut chain = Vec::new();
        if p.is_zero() {
            return SturmChain { chain };
        }
        chain.push(p.clone());
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d);
        }
        while chain.len() >= 2 {
            let r = chain[chain.len() - 2].rem(&chain[chain.len() - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(-r);
        }
        SturmChain { chain }
    }

    fn variations(&self, at: &Endpoint<T>) -> usize {
        let mut count = 0;
        let mut last: i8 = 0;
        for p in &self.chain {
            let s = sign_at(p, at);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the open interval `(lo, hi)`.
    /// The endpoints must not themselves be roots.
    pub fn count_roots_between(&self, lo: &Endpoint<T>, hi: &Endpoint<T>) -> usize {
        if self.chain.is_empty() {
            return 0;
        }
        debug_assert!(sign_at(&self.chain[0], lo) != 0, "left endpoint is a root");
        debug_assert!(sign_at(&self.chain[0], hi) != 0, "right endpoint is a root");
        self.variations(lo) - self.variations(hi)
    }
}

/// Distinct real roots of `p` in `(lo, hi)`; roots at 0 are first stripped so
/// endpoints at 0 are safe.
pub fn count_roots_in<T: Scalar>(p: &UPoly<T>, lo: Endpoint<T>, hi: Endpoint<T>) -> usize {
    let (q, _) = p.strip_zero_roots();
    if q.degree().unwrap_or(0) == 0 {
        return 0;
    }
    SturmChain::new(&q).count_roots_between(&lo, &hi)
}

/// Distinct strictly positive real roots.
pub fn count_positive_roots<T: Scalar>(p: &UPoly<T>) -> usize {
    count_roots_in(p, Endpoint::Rat(T::zero()), Endpoint::PosInf)
}

/// Distinct strictly negative real roots.
pub fn count_negative_roots<T: Scalar>(p: &UPoly<T>) -> usize {
    count_roots_in(p, Endpoint::NegInf, Endpoint::Rat(T::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn up(cs: &[i64]) -> UPoly<Rat> {
        UPoly::from_ints(cs)
    }

    #[test]
    fn counts_simple_roots() {
        // x^2 - 2: one positive, one negative root
        let p = up(&[-2, 0, 1]);
        assert_eq!(count_positive_roots(&p), 1);
        assert_eq!(count_negative_roots(&p), 1);
        // x^2 + 1: none
        let q = up(&[1, 0, 1]);
        assert_eq!(count_positive_roots(&q), 0);
        assert_eq!(count_negative_roots(&q), 0);
    }

    #[test]
    fn strips_zero_roots() {
        // x^3 - x^2 = x^2 (x - 1)
        let p = up(&[0, 0, -1, 1]);
        assert_eq!(count_positive_roots(&p), 1);
        assert_eq!(count_negative_roots(&p), 0);
    }

    #[test]
    fn multiple_roots_counted_once() {
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let p = up(&[2, -3, 0, 1]);
        assert_eq!(count_positive_roots(&p), 1);
        assert_eq!(count_negative_roots(&p), 1);
    }

    #[test]
    fn sqrt_endpoints() {
        // roots of x^2 - 2 are +-sqrt(2); count in (sqrt(1), sqrt(3)) is 1
        let p = up(&[-2, 0, 1]);
        let n = count_roots_in(
            &p,
            Endpoint::sqrt(Rat::from_int(1)),
            Endpoint::sqrt(Rat::from_int(3)),
        );
        assert_eq!(n, 1);
        let none = count_roots_in(
            &p,
            Endpoint::sqrt(Rat::from_int(3)),
            Endpoint::sqrt(Rat::from_int(5)),
        );
        assert_eq!(none, 0);
        let neg = count_roots_in(
            &p,
            Endpoint::neg_sqrt(Rat::from_int(3)),
            Endpoint::neg_sqrt(Rat::from_int(1)),
        );
        assert_eq!(neg, 1);
    }

    #[test]
    fn sign_with_sqrt_branches() {
        // 3 - 2*sqrt(2) > 0, 2 - 2*sqrt(2) < 0
        let two = Rat::from_int(2);
        assert_eq!(sign_with_sqrt(&Rat::from_int(3), &Rat::from_int(-2), &two), 1);
        assert_eq!(sign_with_sqrt(&Rat::from_int(2), &Rat::from_int(-2), &two), -1);
        assert_eq!(sign_with_sqrt(&Rat::from_int(-3), &Rat::from_int(2), &two), -1);
        assert_eq!(sign_with_sqrt(&Rat::from_int(-2), &Rat::from_int(2), &two), 1);
    }
}
