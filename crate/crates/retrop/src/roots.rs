//! Real tropical roots of univariate polynomials, their multiplicities, and
//! positivity-based non-membership certificates.

use crate::error::{Error, Result};
use crate::kpoly::PuiseuxPoly;
use crate::puiseux::Puiseux;
use crate::scalar::Scalar;
use crate::sturm;
use crate::tropical::{Sign, SignedTrop, TropPoint, TropPoly};
use crate::upoly::UPoly;
use std::collections::BTreeMap;

/// Multiplicity data of one unsigned tropical root.
///
/// `complex_mult` is the exponent span of the minimizing monomials;
/// `real_plus`/`real_minus` count sign changes of the evaluated sign
/// sequence at the positive and negative signed lift of the root. The
/// complex multiplicity always dominates the sum and the difference is even.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootReport<T> {
    pub modulus: T,
    pub complex_mult: u32,
    pub real_plus: u32,
    pub real_minus: u32,
}

fn require_univariate<T: Scalar>(f: &TropPoly<T>) -> Result<()> {
    if f.dim() != 1 {
        return Err(Error::NotUnivariate);
    }
    Ok(())
}

/// Breakpoints of the unsigned tropicalization, with complex multiplicities,
/// in decreasing modulus order.
pub fn unsigned_roots<T: Scalar>(f: &TropPoly<T>) -> Result<Vec<(T, u32)>> {
    require_univariate(f)?;
    if f.len() < 2 {
        return Err(Error::SingleMonomial);
    }
    let terms: Vec<(i64, T)> = f
        .terms()
        .map(|(e, c)| (e[0], c.modulus.clone()))
        .collect();
    // candidate breakpoints: equal-value crossings of pairs of monomials
    let mut candidates: Vec<T> = Vec::new();
    for i in 0..terms.len() {
        for j in (i + 1)..terms.len() {
            let (ei, ci) = &terms[i];
            let (ej, cj) = &terms[j];
            if ei != ej {
                let p = (ci.clone() - cj.clone()) / T::from_int(ej - ei);
                candidates.push(p);
            }
        }
    }
    candidates.sort();
    candidates.dedup();
    candidates.reverse();
    let mut out = Vec::new();
    for p in candidates {
        let argmin = f.argmin_moduli(&[p.clone()])?;
        if argmin.len() >= 2 {
            let lo = argmin.first().unwrap()[0];
            let hi = argmin.last().unwrap()[0];
            out.push((p, (hi - lo) as u32));
        }
    }
    Ok(out)
}

/// Evaluated sign sequence over the minimizing monomials at `p`, in
/// increasing exponent order.
pub fn sign_sequence<T: Scalar>(f: &TropPoly<T>, p: &SignedTrop<T>) -> Result<Vec<Sign>> {
    require_univariate(f)?;
    let point = TropPoint::new(vec![p.clone()]);
    Ok(f.argmin(&point)?.into_iter().map(|(_, s)| s).collect())
}

fn sign_changes(seq: &[Sign]) -> u32 {
    seq.windows(2).filter(|w| w[0] != w[1]).count() as u32
}

/// Number of sign changes of the evaluated sign sequence at `p`; requires
/// the modulus of `p` to be a breakpoint of the unsigned tropicalization.
pub fn real_multiplicity<T: Scalar>(f: &TropPoly<T>, p: &SignedTrop<T>) -> Result<u32> {
    let roots = unsigned_roots(f)?;
    if !roots.iter().any(|(m, _)| *m == p.modulus) {
        return Err(Error::NotBreakpoint(p.modulus.to_string()));
    }
    Ok(sign_changes(&sign_sequence(f, p)?))
}

/// One report per unsigned root, in decreasing modulus order.
pub fn real_roots<T: Scalar>(f: &TropPoly<T>) -> Result<Vec<RootReport<T>>> {
    let mut out = Vec::new();
    for (modulus, complex_mult) in unsigned_roots(f)? {
        let plus = sign_changes(&sign_sequence(f, &SignedTrop::pos(modulus.clone()))?);
        let minus = sign_changes(&sign_sequence(f, &SignedTrop::neg(modulus.clone()))?);
        out.push(RootReport {
            modulus,
            complex_mult,
            real_plus: plus,
            real_minus: minus,
        });
    }
    Ok(out)
}

/// The signed roots (elements of the real tropical hypersurface), derived
/// from the reports: a signed lift is a root iff its sign-change count is
/// positive.
pub fn signed_roots<T: Scalar>(f: &TropPoly<T>) -> Result<Vec<SignedTrop<T>>> {
    let mut out = Vec::new();
    for r in real_roots(f)? {
        if r.real_plus > 0 {
            out.push(SignedTrop::pos(r.modulus.clone()));
        }
        if r.real_minus > 0 {
            out.push(SignedTrop::neg(r.modulus));
        }
    }
    out.sort();
    Ok(out)
}

/// The witness polynomial with coefficients `sign * t^(l^2)` on the given
/// support: a strictly convex lifting, so each consecutive support pair
/// contributes one simple tropical root.
pub fn viro_lift<T: Scalar>(signs: &BTreeMap<i64, Sign>) -> PuiseuxPoly<T> {
    assert!(!signs.is_empty(), "support must be nonempty");
    let terms = signs.iter().map(|(&e, &s)| {
        let c = match s {
            Sign::Plus => T::one(),
            Sign::Minus => T::zero() - T::one(),
        };
        (vec![e], Puiseux::monomial(c, T::from_int(e * e)))
    });
    PuiseuxPoly::from_terms(1, terms).expect("univariate terms")
}

/// Least `N <= nmax` such that `g * (1+x)^N` has only positive coefficients,
/// together with the expansion. The precondition that `g` is positive on the
/// closed positive axis is checked exactly: `g(0) > 0` and no root in
/// `(0, oo)` by Sturm count.
pub fn polya_exponent<T: Scalar>(g: &UPoly<T>, nmax: u32) -> Result<(u32, UPoly<T>)> {
    if g.is_zero() || !(g.coeff(0) > T::zero()) || sturm::count_positive_roots(g) != 0 {
        return Err(Error::NotPositiveOnAxis);
    }
    let mut h = g.clone();
    for n in 0..=nmax {
        if h.coeffs().iter().all(|c| c > &T::zero()) {
            return Ok((n, h));
        }
        h = h.mul_one_plus_x();
    }
    Err(Error::NmaxExceeded(nmax))
}

/// Certifies that the signed tropical root `p` of `trop(F)` has no lift to a
/// root of `F`: returns `H = F * (1 + s(p) t^(-|p|) x)^N` with `p` not in the
/// hypersurface of `trop(H)`. `H` is a multiple of `F`, so membership in the
/// ideal is syntactic.
pub fn certify_nonroot<T: Scalar>(
    f: &PuiseuxPoly<T>,
    p: &SignedTrop<T>,
    nmax: u32,
) -> Result<PuiseuxPoly<T>> {
    if f.dim() != 1 {
        return Err(Error::NotUnivariate);
    }
    let trop = f.tropicalize()?;
    let point = TropPoint::new(vec![p.clone()]);
    if !trop.is_member(&point)? {
        return Err(Error::NotOnHypersurface);
    }
    // the residue at |p| must avoid roots of sign s(p), otherwise no
    // positivity certificate can exist
    let residue = f.residue(&[p.modulus.clone()])?.to_univariate()?;
    let obstructed = match p.sign {
        Sign::Plus => sturm::count_positive_roots(&residue) != 0,
        Sign::Minus => sturm::count_negative_roots(&residue) != 0,
    };
    if obstructed {
        return Err(Error::ResidueRootObstruction);
    }
    let unit = Puiseux::monomial(
        match p.sign {
            Sign::Plus => T::one(),
            Sign::Minus => T::zero() - T::one(),
        },
        T::zero() - p.modulus.clone(),
    );
    // 1 + s(p) t^(-|p|) x
    let factor = PuiseuxPoly::constant(1, Puiseux::one())
        + PuiseuxPoly::monomial(1, vec![1], unit);
    let mut h = f.clone();
    for _ in 0..=nmax {
        if !h.tropicalize()?.is_member(&point)? {
            return Ok(h);
        }
        h = h * factor.clone();
    }
    Err(Error::NmaxExceeded(nmax))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_kpoly, parse_trop_poly};
    use crate::Rat;

    fn tp(s: &str) -> TropPoly<Rat> {
        parse_trop_poly(s).unwrap()
    }

    fn quartic() -> TropPoly<Rat> {
        tp("+ 0 : 0\n+ 1 : 1\n+ 0 : 2\n+ 1 : 3\n- 2 : 4")
    }

    #[test]
    fn unsigned_roots_of_quartic() {
        assert_eq!(
            unsigned_roots(&quartic()).unwrap(),
            vec![(Rat::from_int(0), 2), (Rat::from_int(-1), 2)]
        );
    }

    #[test]
    fn unsigned_roots_simple_cases() {
        assert_eq!(
            unsigned_roots(&tp("+ 0 : 0\n+ 0 : 1")).unwrap(),
            vec![(Rat::from_int(0), 1)]
        );
        // breakpoints of min(0, 1+p, 2p): the middle monomial never reaches
        // the lower envelope (1+p < 0 needs p < -1, 1+p < 2p needs p > 1),
        // so the only breakpoint is 0 where monomials 0 and 2 tie
        assert_eq!(
            unsigned_roots(&tp("+ 0 : 0\n- 1 : 1\n+ 0 : 2")).unwrap(),
            vec![(Rat::from_int(0), 2)]
        );
        // with modulus -1 on the middle monomial all three pieces appear:
        // breakpoints of min(0, -1+p, 2p) are 1 and -1, each simple
        assert_eq!(
            unsigned_roots(&tp("+ 0 : 0\n- -1 : 1\n+ 0 : 2")).unwrap(),
            vec![(Rat::from_int(1), 1), (Rat::from_int(-1), 1)]
        );
        assert!(matches!(
            unsigned_roots(&tp("+ 0 : 0")),
            Err(Error::SingleMonomial)
        ));
    }

    #[test]
    fn real_multiplicities_of_quartic() {
        let f = quartic();
        assert_eq!(real_multiplicity(&f, &SignedTrop::pos(Rat::from_int(0))).unwrap(), 0);
        assert_eq!(real_multiplicity(&f, &SignedTrop::neg(Rat::from_int(0))).unwrap(), 0);
        assert_eq!(
            sign_sequence(&f, &SignedTrop::pos(Rat::from_int(-1))).unwrap(),
            vec![Sign::Plus, Sign::Plus, Sign::Minus]
        );
        assert_eq!(real_multiplicity(&f, &SignedTrop::pos(Rat::from_int(-1))).unwrap(), 1);
        assert_eq!(
            sign_sequence(&f, &SignedTrop::neg(Rat::from_int(-1))).unwrap(),
            vec![Sign::Plus, Sign::Minus, Sign::Minus]
        );
        assert_eq!(real_multiplicity(&f, &SignedTrop::neg(Rat::from_int(-1))).unwrap(), 1);
        assert_eq!(real_multiplicity(&tp("+ 0 : 0\n- 0 : 1"), &SignedTrop::pos(Rat::from_int(0))).unwrap(), 1);
        assert!(matches!(
            real_multiplicity(&f, &SignedTrop::pos(Rat::from_int(7))),
            Err(Error::NotBreakpoint(_))
        ));
    }

    #[test]
    fn reports_for_quartic_and_cubics() {
        let reports = real_roots(&quartic()).unwrap();
        assert_eq!(
            reports,
            vec![
                RootReport {
                    modulus: Rat::from_int(0),
                    complex_mult: 2,
                    real_plus: 0,
                    real_minus: 0
                },
                RootReport {
                    modulus: Rat::from_int(-1),
                    complex_mult: 2,
                    real_plus: 1,
                    real_minus: 1
                },
            ]
        );
        // trop(x^2 - x + 1)
        let f = tp("+ 0 : 0\n- 0 : 1\n+ 0 : 2");
        assert_eq!(
            real_roots(&f).unwrap(),
            vec![RootReport {
                modulus: Rat::from_int(0),
                complex_mult: 2,
                real_plus: 2,
                real_minus: 0
            }]
        );
        // trop(x^3 + 1)
        let g = tp("+ 0 : 0\n+ 0 : 3");
        assert_eq!(
            real_roots(&g).unwrap(),
            vec![RootReport {
                modulus: Rat::from_int(0),
                complex_mult: 3,
                real_plus: 0,
                real_minus: 1
            }]
        );
        assert_eq!(
            signed_roots(&g).unwrap(),
            vec![SignedTrop::neg(Rat::from_int(0))]
        );
    }

    #[test]
    fn viro_lift_formula() {
        let mut signs = BTreeMap::new();
        signs.insert(0, Sign::Plus);
        signs.insert(1, Sign::Minus);
        let f: PuiseuxPoly<Rat> = viro_lift(&signs);
        assert_eq!(f, parse_kpoly(1, "0 : 1\n1 : -1*t").unwrap());

        signs.insert(1, Sign::Plus);
        signs.insert(2, Sign::Minus);
        let g: PuiseuxPoly<Rat> = viro_lift(&signs);
        assert_eq!(g, parse_kpoly(1, "0 : 1\n1 : 1*t\n2 : -1*t^4").unwrap());

        let mut quartic_signs = BTreeMap::new();
        for (e, s) in [(0, '+'), (1, '+'), (2, '+'), (3, '+'), (4, '-')] {
            quartic_signs.insert(e, if s == '+' { Sign::Plus } else { Sign::Minus });
        }
        let h: PuiseuxPoly<Rat> = viro_lift(&quartic_signs);
        assert_eq!(
            h,
            parse_kpoly(1, "0 : 1\n1 : 1*t\n2 : 1*t^4\n3 : 1*t^9\n4 : -1*t^16").unwrap()
        );
    }

    #[test]
    fn polya_on_paper_cubic() {
        let g = UPoly::<Rat>::from_ints(&[8, -8, 2, 1]);
        let (n, h) = polya_exponent(&g, 64).unwrap();
        assert_eq!(n, 11);
        let expected: Vec<i64> = vec![
            8, 80, 354, 903, 1441, 1441, 825, 198, 66, 242, 308, 195, 69, 13, 1,
        ];
        assert_eq!(h, UPoly::from_ints(&expected));
    }

    #[test]
    fn polya_simple_cases() {
        let g = UPoly::<Rat>::from_ints(&[1, 1]);
        assert_eq!(polya_exponent(&g, 8).unwrap().0, 0);
        // x^2 - x + 1 first gets strictly positive coefficients at N = 3
        let g = UPoly::<Rat>::from_ints(&[1, -1, 1]);
        assert_eq!(polya_exponent(&g, 8).unwrap().0, 3);
        // x - 1 is negative at 0
        let bad = UPoly::<Rat>::from_ints(&[-1, 1]);
        assert!(matches!(polya_exponent(&bad, 8), Err(Error::NotPositiveOnAxis)));
        // x^2 - 3x + 2 has positive roots
        let bad = UPoly::<Rat>::from_ints(&[2, -3, 1]);
        assert!(matches!(polya_exponent(&bad, 8), Err(Error::NotPositiveOnAxis)));
    }

    #[test]
    fn certify_quadratic_yields_cubic() {
        let f = parse_kpoly::<Rat>(1, "2 : 1\n1 : -1\n0 : 1").unwrap();
        let p = SignedTrop::pos(Rat::from_int(0));
        let h = certify_nonroot(&f, &p, 64).unwrap();
        // the minimal certificate is F*(1+x) = x^3 + 1
        assert_eq!(h, parse_kpoly(1, "3 : 1\n0 : 1").unwrap());
        let point = TropPoint::new(vec![p]);
        assert!(!h.tropicalize().unwrap().is_member(&point).unwrap());
    }

    #[test]
    fn certify_rejects_nonmembers_and_obstructions() {
        // x^3 + 1 does not have 0+ on its hypersurface
        let f = parse_kpoly::<Rat>(1, "3 : 1\n0 : 1").unwrap();
        assert!(matches!(
            certify_nonroot(&f, &SignedTrop::pos(Rat::from_int(0)), 64),
            Err(Error::NotOnHypersurface)
        ));
        // (x-1)(x^2+1) = x^3 - x^2 + x - 1: 0- is not on the hypersurface
        // either (all evaluated signs negative), so certification errors.
        let g = parse_kpoly::<Rat>(1, "3 : 1\n2 : -1\n1 : 1\n0 : -1").unwrap();
        assert!(matches!(
            certify_nonroot(&g, &SignedTrop::neg(Rat::from_int(0)), 64),
            Err(Error::NotOnHypersurface)
        ));
        // 0+ of the same polynomial lifts to the honest root 1, and the
        // residue obstruction reports exactly that.
        assert!(matches!(
            certify_nonroot(&g, &SignedTrop::pos(Rat::from_int(0)), 64),
            Err(Error::ResidueRootObstruction)
        ));
    }
}
