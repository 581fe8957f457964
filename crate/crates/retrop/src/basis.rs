//! Construction and verification of real tropical bases for the ideal of a
//! finite point set in the torus over the Puiseux field.
//!
//! The pipeline builds squarefree coordinate polynomials, reads off a finite
//! candidate set from their signed tropical roots, separates candidate
//! moduli with a monomial functional, and discards the surviving candidates
//! outside the tropicalized point set with per-point product polynomials.

use crate::error::{Error, Result};
use crate::kpoly::{squarefree_from_factors, PuiseuxPoly};
use crate::puiseux::Puiseux;
use crate::roots::signed_roots;
use crate::scalar::Scalar;
use crate::tropical::{SignedTrop, TropPoint, TropPoly};
use std::collections::{BTreeMap, BTreeSet};

/// A finite set of points in the torus: all coordinates nonzero, points
/// pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet<T> {
    dim: usize,
    points: Vec<Vec<Puiseux<T>>>,
}

impl<T: Scalar> PointSet<T> {
    pub fn new(dim: usize, points: Vec<Vec<Puiseux<T>>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidPointSet("empty point set".into()));
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
            if p.iter().any(|c| c.is_zero()) {
                return Err(Error::InvalidPointSet(
                    "points must have nonzero coordinates".into(),
                ));
            }
        }
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                if points[i] == points[j] {
                    return Err(Error::InvalidPointSet(format!(
                        "points {} and {} coincide",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(PointSet { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<Puiseux<T>>] {
        &self.points
    }

    /// Signed tropicalization of every point.
    pub fn trop_points(&self) -> Vec<TropPoint<T>> {
        self.points
            .iter()
            .map(|p| {
                TropPoint::new(
                    p.iter()
                        .map(|c| {
                            SignedTrop::new(
                                c.sign().expect("nonzero"),
                                c.valuation().expect("nonzero"),
                            )
                        })
                        .collect(),
                )
            })
            .collect()
    }
}

/// The full output of the basis construction, re-checkable piece by piece.
#[derive(Debug, Clone)]
pub struct BasisCertificate<T> {
    /// Squarefree coordinate polynomials, one per coordinate.
    pub coord_polys: Vec<PuiseuxPoly<T>>,
    /// The monomial functional injective on the candidate moduli.
    pub functional: Vec<i64>,
    /// Squarefree product separating candidate moduli.
    pub f0: PuiseuxPoly<T>,
    /// The finite candidate set built from the coordinate polynomials.
    pub candidates: Vec<TropPoint<T>>,
    /// Tropicalization of the input points.
    pub trop_v: Vec<TropPoint<T>>,
    /// Per-candidate discard polynomials, keyed by the excluded candidate.
    pub discards: BTreeMap<TropPoint<T>, PuiseuxPoly<T>>,
}

impl<T: Scalar> BasisCertificate<T> {
    /// Every polynomial of the certificate, in deterministic order.
    pub fn polynomials(&self) -> Vec<&PuiseuxPoly<T>> {
        let mut out: Vec<&PuiseuxPoly<T>> = self.coord_polys.iter().collect();
        out.push(&self.f0);
        out.extend(self.discards.values());
        out
    }

    /// The candidates surviving every membership test, which the
    /// construction guarantees to be exactly the tropicalized point set.
    pub fn survivors(&self) -> Result<Vec<TropPoint<T>>> {
        let trops: Vec<TropPoly<T>> = self
            .polynomials()
            .iter()
            .map(|f| f.tropicalize())
            .collect::<Result<_>>()?;
        let mut out = Vec::new();
        for c in &self.candidates {
            let mut ok = true;
            for t in &trops {
                if !t.is_member(c)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                out.push(c.clone());
            }
        }
        Ok(out)
    }
}

/// The linear factor `x_j - value` in `dim` variables.
fn linear_factor<T: Scalar>(dim: usize, j: usize, value: &Puiseux<T>) -> PuiseuxPoly<T> {
    let var = PuiseuxPoly::variable(dim, j);
    var - PuiseuxPoly::constant(dim, value.clone())
}

/// Squarefree coordinate polynomials: for each coordinate, the product of
/// one linear factor per distinct coordinate value.
pub fn coordinate_polys<T: Scalar>(v: &PointSet<T>) -> Vec<PuiseuxPoly<T>> {
    (0..v.dim())
        .map(|j| {
            let factors: Vec<PuiseuxPoly<T>> = v
                .points()
                .iter()
                .map(|p| linear_factor(v.dim(), j, &p[j]))
                .collect();
            squarefree_from_factors(&factors)
        })
        .collect()
}

/// Restricts a coordinate polynomial (support on one axis) to a univariate
/// tropical polynomial.
fn axis_to_univariate<T: Scalar>(f: &PuiseuxPoly<T>, j: usize) -> Result<TropPoly<T>> {
    let trop = f.tropicalize()?;
    TropPoly::new(
        1,
        trop.terms().map(|(e, c)| (vec![e[j]], c.clone())),
    )
}

/// The candidate set: the product over coordinates of the signed tropical
/// roots (positive real multiplicity) of the coordinate polynomials.
pub fn candidate_set<T: Scalar>(v: &PointSet<T>) -> Result<Vec<TropPoint<T>>> {
    let polys = coordinate_polys(v);
    let mut per_coord: Vec<Vec<SignedTrop<T>>> = Vec::new();
    for (j, f) in polys.iter().enumerate() {
        per_coord.push(signed_roots(&axis_to_univariate(f, j)?)?);
    }
    let mut out: Vec<TropPoint<T>> = vec![];
    let mut stack: Vec<Vec<SignedTrop<T>>> = vec![Vec::new()];
    for coords in &per_coord {
        let mut next = Vec::new();
        for prefix in &stack {
            for c in coords {
                let mut p = prefix.clone();
                p.push(c.clone());
                next.push(p);
            }
        }
        stack = next;
    }
    for coords in stack {
        out.push(TropPoint::new(coords));
    }
    Ok(out)
}

/// Component order used by the functional search: nonzero values first,
/// positives before negatives, then by magnitude; zero last.
fn component_key(c: i64) -> (u8, u8, i64) {
    if c == 0 {
        (2, 0, 0)
    } else if c > 0 {
        (0, 0, c)
    } else {
        (1, 0, -c)
    }
}

fn enumerate_functionals(dim: usize, max_norm: i64) -> Vec<Vec<i64>> {
    let mut all: Vec<Vec<i64>> = Vec::new();
    let mut cur = vec![0i64; dim];
    fn rec(cur: &mut Vec<i64>, i: usize, max_norm: i64, all: &mut Vec<Vec<i64>>) {
        if i == cur.len() {
            if cur.iter().any(|&c| c != 0) {
                all.push(cur.clone());
            }
            return;
        }
        for c in -max_norm..=max_norm {
            cur[i] = c;
            rec(cur, i + 1, max_norm, all);
        }
        cur[i] = 0;
    }
    rec(&mut cur, 0, max_norm, &mut all);
    all.sort_by(|a, b| {
        let norm = |v: &Vec<i64>| v.iter().map(|c| c.abs()).max().unwrap_or(0);
        let l1 = |v: &Vec<i64>| v.iter().map(|c| c.abs()).sum::<i64>();
        (norm(a), l1(a))
            .cmp(&(norm(b), l1(b)))
            .then_with(|| {
                let ka: Vec<_> = a.iter().map(|&c| component_key(c)).collect();
                let kb: Vec<_> = b.iter().map(|&c| component_key(c)).collect();
                ka.cmp(&kb)
            })
    });
    all
}

/// Deterministic search for an integer vector whose linear functional is
/// injective on the given moduli vectors.
pub fn choose_l<T: Scalar>(moduli: &[Vec<T>]) -> Vec<i64> {
    let dim = moduli.first().map(|m| m.len()).unwrap_or(0);
    for norm in 1.. {
        for b in enumerate_functionals(dim, norm) {
            if b.iter().map(|c| c.abs()).max().unwrap_or(0) != norm {
                continue;
            }
            let values: Vec<T> = moduli
                .iter()
                .map(|m| {
                    m.iter()
                        .zip(&b)
                        .fold(T::zero(), |acc, (x, &c)| acc + x.clone() * T::from_int(c))
                })
                .collect();
            let set: BTreeSet<&T> = values.iter().collect();
            if set.len() == values.len() {
                return b;
            }
        }
    }
    unreachable!("an injective functional always exists")
}

/// The cleared factor `x^(b+) p^(b-) - x^(b-) p^(b+)` of the monomial
/// difference `x^b - p^b`; ring operations only.
fn cleared_factor<T: Scalar>(dim: usize, b: &[i64], p: &[Puiseux<T>]) -> PuiseuxPoly<T> {
    let mut x_pos = vec![0i64; dim];
    let mut x_neg = vec![0i64; dim];
    let mut p_pos = Puiseux::one();
    let mut p_neg = Puiseux::one();
    for (j, &bj) in b.iter().enumerate() {
        if bj >= 0 {
            x_pos[j] = bj;
            p_pos = p_pos * p[j].pow(bj as u32);
        } else {
            x_neg[j] = -bj;
            p_neg = p_neg * p[j].pow((-bj) as u32);
        }
    }
    PuiseuxPoly::monomial(dim, x_pos, p_neg) - PuiseuxPoly::monomial(dim, x_neg, p_pos)
}

/// Squarefree product of the cleared monomial differences over all points.
pub fn build_f0<T: Scalar>(v: &PointSet<T>, b: &[i64]) -> PuiseuxPoly<T> {
    let factors: Vec<PuiseuxPoly<T>> = v
        .points()
        .iter()
        .map(|p| cleared_factor(v.dim(), b, p))
        .collect();
    squarefree_from_factors(&factors)
}

/// The discard polynomial for an excluded candidate `c`: linear factors in a
/// sign-differing coordinate for points of matching modulus, cleared
/// monomial differences for the rest.
pub fn build_gc<T: Scalar>(
    v: &PointSet<T>,
    c: &TropPoint<T>,
    b: &[i64],
) -> Result<PuiseuxPoly<T>> {
    let trop_v = v.trop_points();
    let c_moduli = c.moduli();
    let mut factors: Vec<PuiseuxPoly<T>> = Vec::new();
    for (p, a) in v.points().iter().zip(&trop_v) {
        if a.moduli() == c_moduli {
            let h = (0..v.dim())
                .find(|&j| a.coords[j].sign != c.coords[j].sign)
                .ok_or(Error::PointNotExcludable)?;
            factors.push(linear_factor(v.dim(), h, &p[h]));
        } else {
            factors.push(cleared_factor(v.dim(), b, p));
        }
    }
    Ok(squarefree_from_factors(&factors))
}

/// Runs the whole construction: coordinate polynomials, candidates, the
/// separating functional, the modulus separator, and one discard polynomial
/// per surviving candidate outside the tropicalized point set.
pub fn build_basis<T: Scalar>(v: &PointSet<T>) -> Result<BasisCertificate<T>> {
    let coord_polys = coordinate_polys(v);
    let candidates = candidate_set(v)?;
    let trop_v: Vec<TropPoint<T>> = {
        let mut t = v.trop_points();
        t.sort();
        t.dedup();
        t
    };
    let moduli: Vec<Vec<T>> = {
        let set: BTreeSet<Vec<T>> = candidates.iter().map(|c| c.moduli()).collect();
        set.into_iter().collect()
    };
    let functional = choose_l(&moduli);
    let f0 = build_f0(v, &functional);

    // membership screening against the construction polynomials
    let coord_trops: Vec<TropPoly<T>> = coord_polys
        .iter()
        .map(|f| f.tropicalize())
        .collect::<Result<_>>()?;
    let f0_trop = f0.tropicalize()?;
    let mut discards = BTreeMap::new();
    for c in &candidates {
        let mut survives = f0_trop.is_member(c)?;
        for t in &coord_trops {
            if !survives {
                break;
            }
            survives = t.is_member(c)?;
        }
        if survives && !trop_v.contains(c) {
            discards.insert(c.clone(), build_gc(v, c, &functional)?);
        }
    }
    Ok(BasisCertificate {
        coord_polys,
        functional,
        f0,
        candidates,
        trop_v,
        discards,
    })
}

/// Checks the certificate against the point set: every polynomial vanishes
/// on every point, a candidate survives every membership test exactly when
/// it is the tropicalization of an input point, and the discards are keyed
/// by exactly the candidates that pass the coordinate-and-modulus screening
/// without being tropicalized points.
pub fn verify_basis<T: Scalar>(cert: &BasisCertificate<T>, v: &PointSet<T>) -> bool {
    // recorded tropicalization must match the input
    let mut trop_v = v.trop_points();
    trop_v.sort();
    trop_v.dedup();
    if trop_v != cert.trop_v {
        return false;
    }
    for f in cert.polynomials() {
        for p in v.points() {
            match f.eval(p) {
                Ok(value) if value.is_zero() => {}
                _ => return false,
            }
        }
    }
    // the screening polynomials alone must leave exactly trop(V) plus the
    // discarded candidates
    let Ok(screened) = screening_survivors(cert) else {
        return false;
    };
    let expected_keys: Vec<&TropPoint<T>> = screened
        .iter()
        .filter(|c| !cert.trop_v.contains(c))
        .collect();
    let keys: Vec<&TropPoint<T>> = cert.discards.keys().collect();
    if keys != expected_keys {
        return false;
    }
    match cert.survivors() {
        Ok(s) => s == cert.trop_v,
        Err(_) => false,
    }
}

/// Candidates passing the coordinate polynomials and the modulus separator.
fn screening_survivors<T: Scalar>(cert: &BasisCertificate<T>) -> Result<Vec<TropPoint<T>>> {
    let mut trops: Vec<TropPoly<T>> = cert
        .coord_polys
        .iter()
        .map(|f| f.tropicalize())
        .collect::<Result<_>>()?;
    trops.push(cert.f0.tropicalize()?);
    let mut out = Vec::new();
    for c in &cert.candidates {
        let mut ok = true;
        for t in &trops {
            if !t.is_member(c)? {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(c.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_kpoly, parse_point, parse_puiseux_rows};
    use crate::Rat;

    fn pset(dim: usize, s: &str) -> PointSet<Rat> {
        PointSet::new(dim, parse_puiseux_rows(s).unwrap()).unwrap()
    }

    /// The worked five-point example.
    fn example_points() -> PointSet<Rat> {
        pset(2, "-1, 2\n2, 3\n-3, -1*t\n1, -4\n2*t, 4*t")
    }

    fn pt(s: &str) -> TropPoint<Rat> {
        parse_point(s).unwrap()
    }

    #[test]
    fn coordinate_polys_match_hand_expansion() {
        let v = example_points();
        let polys = coordinate_polys(&v);
        let f1 = parse_kpoly::<Rat>(
            2,
            "5 0 : 1\n4 0 : -2*t + 1\n3 0 : -2*t - 7\n2 0 : 14*t - 1\n1 0 : 2*t + 6\n0 0 : -12*t",
        )
        .unwrap();
        assert_eq!(polys[0], f1);
        let f2 = parse_kpoly::<Rat>(
            2,
            "0 5 : 1\n0 4 : -3*t - 1\n0 3 : -4*t^2 + 3*t - 14\n0 2 : 4*t^2 + 42*t + 24\n0 1 : 56*t^2 - 72*t\n0 0 : -96*t^2",
        )
        .unwrap();
        assert_eq!(polys[1], f2);
    }

    #[test]
    fn coordinate_polys_dedup_repeats() {
        let v = pset(2, "1, 1\n-1, 1");
        let polys = coordinate_polys(&v);
        assert_eq!(polys[0], parse_kpoly(2, "2 0 : 1\n0 0 : -1").unwrap());
        assert_eq!(polys[1], parse_kpoly(2, "0 1 : 1\n0 0 : -1").unwrap());
    }

    #[test]
    fn candidate_set_of_example() {
        let v = example_points();
        let s = candidate_set(&v).unwrap();
        assert_eq!(s.len(), 12);
        let expected: BTreeSet<TropPoint<Rat>> = [
            "+0 +0", "+0 +1", "+0 -1", "+0 -0", "-0 +0", "-0 +1", "-0 -1", "-0 -0",
            "+1 +0", "+1 +1", "+1 -1", "+1 -0",
        ]
        .iter()
        .map(|s| pt(s))
        .collect();
        let got: BTreeSet<TropPoint<Rat>> = s.into_iter().collect();
        assert_eq!(got, expected);
        // |S| has the four listed moduli
        let moduli: BTreeSet<Vec<Rat>> = got.iter().map(|p| p.moduli()).collect();
        assert_eq!(moduli.len(), 4);
    }

    #[test]
    fn candidate_set_single_point() {
        let v = pset(2, "1*t, -1*t");
        let s = candidate_set(&v).unwrap();
        assert_eq!(s, vec![pt("+1 -1")]);
    }

    #[test]
    fn functional_choice() {
        // the worked example's moduli admit the paper's x + 2y
        let moduli: Vec<Vec<Rat>> = [
            [0, 0], [0, 1], [1, 0], [1, 1],
        ]
        .iter()
        .map(|m| m.iter().map(|&x| Rat::from_int(x)).collect())
        .collect();
        assert_eq!(choose_l(&moduli), vec![1, 2]);
        // a single modulus accepts the first candidate
        let single: Vec<Vec<Rat>> = vec![vec![Rat::from_int(3), Rat::from_int(7)]];
        assert_eq!(choose_l(&single), vec![1, 0]);
        // injectivity forces rejection of (1, 1)
        let pair: Vec<Vec<Rat>> = vec![
            vec![Rat::from_int(0), Rat::from_int(0)],
            vec![Rat::from_int(1), Rat::from_int(-1)],
        ];
        assert_eq!(choose_l(&pair), vec![1, 0]);
    }

    #[test]
    fn f0_matches_paper_product() {
        let v = example_points();
        let f0 = build_f0(&v, &[1, 2]);
        let factors = [
            "1 2 : 1\n0 0 : -18",
            "1 2 : 1\n0 0 : -16",
            "1 2 : 1\n0 0 : 4",
            "1 2 : 1\n0 0 : 3*t^2",
            "1 2 : 1\n0 0 : -32*t^3",
        ];
        let mut expected = PuiseuxPoly::constant(2, Puiseux::one());
        for f in factors {
            expected = expected * parse_kpoly::<Rat>(2, f).unwrap();
        }
        assert_eq!(f0, expected);
    }

    #[test]
    fn f0_simple_cases() {
        let v = pset(2, "1*t, 1");
        assert_eq!(
            build_f0(&v, &[1, 0]),
            parse_kpoly(2, "1 0 : 1\n0 0 : -1*t").unwrap()
        );
        // negative entry: numerator of x^-1 - t^-1, cleared and normalized
        assert_eq!(
            build_f0(&v, &[-1, 0]),
            parse_kpoly(2, "1 0 : 1\n0 0 : -1*t").unwrap()
        );
    }

    #[test]
    fn gc_matches_paper_products() {
        let v = example_points();
        let b = vec![1, 2];
        let cases = [
            (
                "-0 -0",
                vec![
                    "1 0 : 1\n0 0 : -2",
                    "1 0 : 1\n0 0 : -1",
                    "0 1 : 1\n0 0 : -2",
                    "1 2 : 1\n0 0 : -32*t^3",
                    "1 2 : 1\n0 0 : 3*t^2",
                ],
            ),
            (
                "-0 +1",
                vec![
                    "0 1 : 1\n0 0 : 1*t",
                    "1 2 : 1\n0 0 : 4",
                    "1 2 : 1\n0 0 : -18",
                    "1 2 : 1\n0 0 : -16",
                    "1 2 : 1\n0 0 : -32*t^3",
                ],
            ),
            (
                "+1 -1",
                vec![
                    "0 1 : 1\n0 0 : -4*t",
                    "1 2 : 1\n0 0 : 4",
                    "1 2 : 1\n0 0 : -18",
                    "1 2 : 1\n0 0 : -16",
                    "1 2 : 1\n0 0 : 3*t^2",
                ],
            ),
        ];
        for (point, factors) in cases {
            let gc = build_gc(&v, &pt(point), &b).unwrap();
            let mut expected = PuiseuxPoly::constant(2, Puiseux::one());
            for f in factors {
                expected = expected * parse_kpoly::<Rat>(2, f).unwrap();
            }
            assert_eq!(gc, expected, "discard polynomial at {}", point);
        }
    }

    #[test]
    fn full_construction_on_example() {
        let v = example_points();
        let cert = build_basis(&v).unwrap();
        assert_eq!(cert.functional, vec![1, 2]);
        let keys: Vec<TropPoint<Rat>> = cert.discards.keys().cloned().collect();
        let expected: Vec<TropPoint<Rat>> = {
            let mut e = vec![pt("-0 +1"), pt("-0 -0"), pt("+1 -1")];
            e.sort();
            e
        };
        assert_eq!(keys, expected);
        // eight survivors of the coordinate + modulus screening
        let survivors = cert.trop_v.len() + cert.discards.len();
        assert_eq!(survivors, 8);
        assert!(verify_basis(&cert, &v));
    }

    #[test]
    fn degenerate_certificates() {
        let v = pset(2, "1, 1");
        let cert = build_basis(&v).unwrap();
        assert_eq!(cert.candidates, vec![pt("+0 +0")]);
        assert!(cert.discards.is_empty());
        assert!(verify_basis(&cert, &v));

        let v2 = pset(2, "1, 1\n-1, -1");
        let cert2 = build_basis(&v2).unwrap();
        assert_eq!(cert2.candidates.len(), 4);
        assert_eq!(cert2.discards.len(), 2);
        assert!(cert2.discards.contains_key(&pt("+0 -0")));
        assert!(cert2.discards.contains_key(&pt("-0 +0")));
        assert!(verify_basis(&cert2, &v2));
    }

    #[test]
    fn verify_detects_tampering() {
        let v = example_points();
        let cert = build_basis(&v).unwrap();
        // dropping the modulus separator keeps a stray candidate alive
        let mut without_f0 = cert.clone();
        without_f0.f0 = PuiseuxPoly::constant(2, Puiseux::one())
            * without_f0.coord_polys[0].clone();
        assert!(!verify_basis(&without_f0, &v));
        // emptying the discards leaves survivors outside trop(V)
        let mut without_discards = cert.clone();
        without_discards.discards.clear();
        assert!(!verify_basis(&without_discards, &v));
    }
}
