//! Euler derivatives, flags and weight classes, exact separation tests, and
//! the singularity decision for points of a real tropical hypersurface.

use crate::error::{Error, Result};
use crate::feasibility::{feasible_point, Constraint};
use crate::scalar::{to_primitive_integers, Scalar};
use crate::subdivision::{affine_span_dim, plane_curve_cells};
use crate::tropical::{Sign, SignedTrop, TropPoint, TropPoly};
use std::collections::BTreeSet;

/// An affine functional with integer coefficients on exponent space:
/// `L(l) = b0 + <b, l>`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AffineFunctional {
    pub b0: i64,
    pub b: Vec<i64>,
}

impl AffineFunctional {
    pub fn new(b0: i64, b: Vec<i64>) -> Self {
        assert!(
            b0 != 0 || b.iter().any(|&x| x != 0),
            "the zero functional is not allowed"
        );
        AffineFunctional { b0, b }
    }

    pub fn eval(&self, exp: &[i64]) -> i64 {
        self.b0 + self.b.iter().zip(exp).map(|(a, b)| a * b).sum::<i64>()
    }
}

impl std::fmt::Display for AffineFunctional {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.b0)?;
        for (i, c) in self.b.iter().enumerate() {
            write!(f, " {} {}*w{}", if *c < 0 { "-" } else { "+" }, c.abs(), i + 1)?;
        }
        Ok(())
    }
}

/// Euler derivative: drop the monomials where the functional vanishes, flip
/// the sign of those where it is negative, keep moduli.
pub fn euler_derivative<T: Scalar>(f: &TropPoly<T>, l: &AffineFunctional) -> Result<TropPoly<T>> {
    let terms: Vec<(Vec<i64>, SignedTrop<T>)> = f
        .terms()
        .filter_map(|(e, c)| {
            let v = l.eval(e);
            if v == 0 {
                None
            } else {
                let s = if v < 0 { c.sign.flip() } else { c.sign };
                Some((e.clone(), SignedTrop::new(s, c.modulus.clone())))
            }
        })
        .collect();
    if terms.is_empty() {
        return Err(Error::DerivativeZero);
    }
    TropPoly::new(f.dim(), terms)
}

/// Twists coefficient signs by the evaluated sign of `p`, returning the
/// twisted polynomial and the all-positive point with the same moduli.
/// Membership, argmin and evaluated signs are preserved.
pub fn positivize<T: Scalar>(
    f: &TropPoly<T>,
    p: &TropPoint<T>,
) -> Result<(TropPoly<T>, TropPoint<T>)> {
    let twisted = f.sign_twist(p)?;
    let positive = TropPoint::new(p.moduli().into_iter().map(SignedTrop::pos).collect());
    Ok((twisted, positive))
}

/// Which span is used when excluding monomials between flag levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SpanMode {
    /// Affine span over the rationals (the canonical reading).
    #[default]
    Affine,
    /// Linear span through the origin (recorded alternative, not endorsed).
    Linear,
}

fn span_dim<T: Scalar>(points: &[Vec<i64>], mode: SpanMode) -> usize {
    match mode {
        SpanMode::Affine => affine_span_dim::<T>(points),
        SpanMode::Linear => {
            // rank of the vectors themselves: prepend the origin
            let mut pts = vec![vec![0; points.first().map(|p| p.len()).unwrap_or(0)]];
            pts.extend(points.iter().cloned());
            affine_span_dim::<T>(&pts)
        }
    }
}

fn in_span<T: Scalar>(points: &[Vec<i64>], q: &[i64], mode: SpanMode) -> bool {
    let d = span_dim::<T>(points, mode);
    let mut ext = points.to_vec();
    ext.push(q.to_vec());
    span_dim::<T>(&ext, mode) == d
}

/// One level of a flag: the cumulative member set with its partition by
/// evaluated sign at the base point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagLevel {
    pub members: BTreeSet<Vec<i64>>,
    pub plus: BTreeSet<Vec<i64>>,
    pub minus: BTreeSet<Vec<i64>>,
}

/// The iterated-argmin flag of a tropical polynomial at a point: a strictly
/// increasing chain of support subsets whose last level spans the ambient
/// space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag<T> {
    pub levels: Vec<FlagLevel>,
    pub moduli: Vec<T>,
}

impl<T: Scalar> Flag<T> {
    /// The chain of member sets, the datum that defines a weight class.
    pub fn chain(&self) -> Vec<&BTreeSet<Vec<i64>>> {
        self.levels.iter().map(|l| &l.members).collect()
    }
}

/// Builds the flag of `f` at `p` by iterated argmin over the support minus
/// the span of the previous level, until the level spans the ambient space.
pub fn flag<T: Scalar>(f: &TropPoly<T>, p: &TropPoint<T>, mode: SpanMode) -> Result<Flag<T>> {
    let n = f.dim();
    let support = f.support();
    if affine_span_dim::<T>(&support) != n {
        return Err(Error::NonSpanningSupport);
    }
    let twisted = f.sign_twist(p)?;
    let moduli = p.moduli();
    let mut levels: Vec<FlagLevel> = Vec::new();
    let mut current: BTreeSet<Vec<i64>> = BTreeSet::new();
    loop {
        let member_vec: Vec<Vec<i64>> = current.iter().cloned().collect();
        if !current.is_empty() && span_dim::<T>(&member_vec, mode) == n {
            break;
        }
        // minimize over the support outside the span of the current level
        let candidates: Vec<Vec<i64>> = support
            .iter()
            .filter(|e| current.is_empty() || !in_span::<T>(&member_vec, e, mode))
            .cloned()
            .collect();
        debug_assert!(!candidates.is_empty(), "spanning support never exhausts");
        let value = |e: &Vec<i64>| -> T {
            let mut v = twisted.coeff(e).expect("support").modulus.clone();
            for (m, ei) in moduli.iter().zip(e) {
                v = v + m.clone() * T::from_int(*ei);
            }
            v
        };
        let min = candidates.iter().map(&value).min().expect("nonempty");
        let increment: Vec<Vec<i64>> = candidates.into_iter().filter(|e| value(e) == min).collect();
        current.extend(increment.iter().cloned());
        let mut plus = BTreeSet::new();
        let mut minus = BTreeSet::new();
        for e in &current {
            match twisted.coeff(e).expect("support").sign {
                Sign::Plus => plus.insert(e.clone()),
                Sign::Minus => minus.insert(e.clone()),
            };
        }
        levels.push(FlagLevel {
            members: current.clone(),
            plus,
            minus,
        });
    }
    Ok(Flag { levels, moduli })
}

/// Separation test: `L` does not contain all of `A U B`, and the two sets
/// lie in opposite closed halfspaces of `L`.
pub fn separates(l: &AffineFunctional, a: &BTreeSet<Vec<i64>>, b: &BTreeSet<Vec<i64>>) -> bool {
    debug_assert!(a.is_disjoint(b));
    let values_a: Vec<i64> = a.iter().map(|q| l.eval(q)).collect();
    let values_b: Vec<i64> = b.iter().map(|q| l.eval(q)).collect();
    if values_a.iter().all(|&v| v == 0) && values_b.iter().all(|&v| v == 0) {
        return false;
    }
    let one_way = values_a.iter().all(|&v| v >= 0) && values_b.iter().all(|&v| v <= 0);
    let other = values_a.iter().all(|&v| v <= 0) && values_b.iter().all(|&v| v >= 0);
    one_way || other
}

/// Searches for an integer affine functional vanishing on `fixed`,
/// nonnegative on `plus`, nonpositive on `minus` (or the swapped
/// orientation), and nonzero somewhere on `plus U minus`. Strictness is
/// forced through the normalization `L(q) >= 1` tried over every witness
/// `q` and both orientations; feasibility is decided by exact
/// Fourier-Motzkin elimination.
pub fn find_separating_l<T: Scalar>(
    fixed: &BTreeSet<Vec<i64>>,
    plus: &BTreeSet<Vec<i64>>,
    minus: &BTreeSet<Vec<i64>>,
) -> Option<AffineFunctional> {
    let n = plus
        .iter()
        .chain(minus.iter())
        .chain(fixed.iter())
        .next()?
        .len();
    let nvars = n + 1; // (b0, b1 .. bn)
    let row = |q: &[i64], scale: i64| -> Vec<T> {
        let mut r = Vec::with_capacity(nvars);
        r.push(T::from_int(scale));
        for &e in q {
            r.push(T::from_int(scale * e));
        }
        r
    };
    let witnesses: Vec<Vec<i64>> = plus.iter().chain(minus.iter()).cloned().collect();
    for orientation in [1i64, -1i64] {
        let mut base: Vec<Constraint<T>> = Vec::new();
        for q in fixed {
            let [le, ge] = Constraint::equality(row(q, 1), T::zero());
            base.push(le);
            base.push(ge);
        }
        for q in plus {
            base.push(Constraint::new(row(q, orientation), T::zero()));
        }
        for q in minus {
            base.push(Constraint::new(row(q, -orientation), T::zero()));
        }
        for witness in &witnesses {
            let scale = if plus.contains(witness) {
                orientation
            } else {
                -orientation
            };
            let mut cons = base.clone();
            cons.push(Constraint::new(row(witness, scale), T::one()));
            if let Some(solution) = feasible_point(&cons, nvars) {
                let ints =
                    to_primitive_integers(&solution).expect("a feasible separator is nonzero");
                let as_i64: Vec<i64> = ints
                    .iter()
                    .map(|x| i64::try_from(x.clone()).expect("separator coefficients fit i64"))
                    .collect();
                return Some(AffineFunctional::new(as_i64[0], as_i64[1..].to_vec()));
            }
        }
    }
    None
}

/// Outcome of the singularity decision, with a re-checkable witness: the
/// separating functional and its flag level when regular, the full flag when
/// singular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityVerdict<T> {
    pub singular: bool,
    pub flag: Flag<T>,
    pub separator: Option<(usize, AffineFunctional)>,
}

/// Decides whether `p` is a singular point of the hypersurface of `f`:
/// after positivization, some flag level admits a functional vanishing on
/// the previous level and separating the level's sign parts exactly when the
/// point is not singular.
pub fn is_singular<T: Scalar>(
    f: &TropPoly<T>,
    p: &TropPoint<T>,
    mode: SpanMode,
) -> Result<SingularityVerdict<T>> {
    if !f.is_member(p)? {
        return Err(Error::NotOnHypersurface);
    }
    let (twisted, positive) = positivize(f, p)?;
    let flag = flag(&twisted, &positive, mode)?;
    let empty = BTreeSet::new();
    for (i, level) in flag.levels.iter().enumerate() {
        let fixed = if i == 0 {
            &empty
        } else {
            &flag.levels[i - 1].members
        };
        if let Some(l) = find_separating_l::<T>(fixed, &level.plus, &level.minus) {
            return Ok(SingularityVerdict {
                singular: false,
                flag,
                separator: Some((i, l)),
            });
        }
    }
    Ok(SingularityVerdict {
        singular: true,
        flag,
        separator: None,
    })
}

/// Two hypersurface points are in the same weight class when their flags
/// agree as chains of subsets.
pub fn weight_class_eq<T: Scalar>(
    f: &TropPoly<T>,
    p: &TropPoint<T>,
    q: &TropPoint<T>,
    mode: SpanMode,
) -> Result<bool> {
    if !f.is_member(p)? || !f.is_member(q)? {
        return Err(Error::NotOnHypersurface);
    }
    let (tf, tp) = positivize(f, p)?;
    let (uf, uq) = positivize(f, q)?;
    let fp = flag(&tf, &tp, mode)?;
    let fq = flag(&uf, &uq, mode)?;
    Ok(fp.chain() == fq.chain())
}

/// Finite necessary condition for singularity: membership in the
/// hypersurface of every provided Euler derivative. Functionals that kill
/// the whole support are skipped (the zero polynomial vanishes everywhere).
pub fn euler_intersection_check<T: Scalar>(
    f: &TropPoly<T>,
    p: &TropPoint<T>,
    ls: &[AffineFunctional],
) -> Result<bool> {
    for l in ls {
        match euler_derivative(f, l) {
            Ok(df) => {
                if !df.is_member(p)? {
                    return Ok(false);
                }
            }
            Err(Error::DerivativeZero) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}

/// A cell of the plane curve in one orthant, named for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlaneCell<T> {
    Vertex([T; 2]),
    Segment([T; 2], [T; 2]),
    Ray([T; 2], [i64; 2]),
}

impl<T: Scalar> PlaneCell<T> {
    /// A rational point in the relative interior of the cell.
    pub fn representative(&self) -> [T; 2] {
        match self {
            PlaneCell::Vertex(v) => v.clone(),
            PlaneCell::Segment(a, b) => [
                (a[0].clone() + b[0].clone()) / T::from_int(2),
                (a[1].clone() + b[1].clone()) / T::from_int(2),
            ],
            PlaneCell::Ray(o, d) => [
                o[0].clone() + T::from_int(d[0]),
                o[1].clone() + T::from_int(d[1]),
            ],
        }
    }
}

impl<T: Scalar> std::fmt::Display for PlaneCell<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PlaneCell::Vertex(v) => write!(f, "vertex ({}, {})", v[0], v[1]),
            PlaneCell::Segment(a, b) => {
                write!(f, "segment ({}, {}) - ({}, {})", a[0], a[1], b[0], b[1])
            }
            PlaneCell::Ray(o, d) => write!(
                f,
                "ray from ({}, {}) direction ({}, {})",
                o[0], o[1], d[0], d[1]
            ),
        }
    }
}

/// A weight class of the plane curve in one orthant: the cells sharing a
/// flag, one representative, and the singularity verdict (constant on the
/// class for fixed signs).
#[derive(Debug, Clone)]
pub struct WeightClass<T> {
    pub cells: Vec<PlaneCell<T>>,
    pub representative: TropPoint<T>,
    pub verdict: SingularityVerdict<T>,
}

/// Enumerates the curve cells of `f` in the given orthant, groups them by
/// flag, and decides singularity once per class.
pub fn classify_plane_weight_classes<T: Scalar>(
    f: &TropPoly<T>,
    orthant: (Sign, Sign),
) -> Result<Vec<WeightClass<T>>> {
    if f.dim() != 2 {
        return Err(Error::NotBivariate);
    }
    let curve = plane_curve_cells(f)?;
    let oc = curve.orthant(orthant);
    let mut cells: Vec<PlaneCell<T>> = Vec::new();
    cells.extend(oc.vertices.iter().map(|v| PlaneCell::Vertex(v.clone())));
    cells.extend(
        oc.segments
            .iter()
            .map(|(a, b)| PlaneCell::Segment(a.clone(), b.clone())),
    );
    cells.extend(oc.rays.iter().map(|(o, d)| PlaneCell::Ray(o.clone(), *d)));

    let mut classes: Vec<(Vec<Vec<Vec<i64>>>, WeightClass<T>)> = Vec::new();
    for cell in cells {
        let w = cell.representative();
        let point = TropPoint::new(vec![
            SignedTrop::new(orthant.0, w[0].clone()),
            SignedTrop::new(orthant.1, w[1].clone()),
        ]);
        let (tf, tp) = positivize(f, &point)?;
        let fl = flag(&tf, &tp, SpanMode::Affine)?;
        let key: Vec<Vec<Vec<i64>>> = fl
            .levels
            .iter()
            .map(|l| l.members.iter().cloned().collect())
            .collect();
        if let Some((_, class)) = classes.iter_mut().find(|(k, _)| *k == key) {
            class.cells.push(cell);
        } else {
            let verdict = is_singular(f, &point, SpanMode::Affine)?;
            classes.push((
                key,
                WeightClass {
                    cells: vec![cell],
                    representative: point,
                    verdict,
                },
            ));
        }
    }
    Ok(classes.into_iter().map(|(_, c)| c).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_point, parse_trop_poly};
    use crate::Rat;

    fn tp(s: &str) -> TropPoly<Rat> {
        parse_trop_poly(s).unwrap()
    }

    fn point(s: &str) -> TropPoint<Rat> {
        parse_point(s).unwrap()
    }

    /// The plane cubic with a line-like positive part.
    fn cubic() -> TropPoly<Rat> {
        tp("+ 0 : 3 0\n+ 0 : 0 3\n- 0 : 2 1\n- 0 : 1 2\n+ 0 : 2 0\n+ 0 : 0 2\n+ 0 : 1 1\n- 0 : 1 0\n- 0 : 0 1\n+ 0 : 0 0")
    }

    #[test]
    fn euler_derivative_of_quadric() {
        let f = tp("+ 0 : 0 0\n+ 0 : 1 0\n+ 0 : 0 1\n+ 0 : 2 0\n+ 0 : 1 1\n+ 0 : 0 2");
        let l = AffineFunctional::new(0, vec![1, -1]);
        let df = euler_derivative(&f, &l).unwrap();
        let expected = tp("+ 0 : 1 0\n- 0 : 0 1\n+ 0 : 2 0\n- 0 : 0 2");
        assert_eq!(df, expected);
    }

    #[test]
    fn euler_derivative_of_cubic_in_w() {
        let l = AffineFunctional::new(0, vec![0, 1]);
        let df = euler_derivative(&cubic(), &l).unwrap();
        let expected = tp("+ 0 : 0 3\n- 0 : 2 1\n- 0 : 1 2\n+ 0 : 0 2\n+ 0 : 1 1\n- 0 : 0 1");
        assert_eq!(df, expected);
        // functional vanishing on the whole support
        let f = tp("+ 0 : 1 0\n+ 0 : 1 1");
        let l = AffineFunctional::new(-1, vec![1, 0]);
        assert!(matches!(
            euler_derivative(&f, &l),
            Err(Error::DerivativeZero)
        ));
    }

    #[test]
    fn positivize_examples() {
        let f = tp("+ 0 : 1");
        let p = point("-0");
        let (tf, tq) = positivize(&f, &p).unwrap();
        assert_eq!(tf, tp("- 0 : 1"));
        assert_eq!(tq, point("+0"));
        // all-positive point: identity
        let g = tp("+ 0 : 1 0\n- 2 : 0 3");
        let q = point("+1 +2");
        let (tg, _) = positivize(&g, &q).unwrap();
        assert_eq!(tg, g);
    }

    #[test]
    fn flag_of_cubic_on_vertical_ray() {
        // (0+, a+), a > 0
        let p = point("+0 +3");
        let fl = flag(&cubic(), &p, SpanMode::Affine).unwrap();
        let l0 = &fl.levels[0];
        let members: Vec<Vec<i64>> = l0.members.iter().cloned().collect();
        assert_eq!(
            members,
            vec![vec![0, 0], vec![1, 0], vec![2, 0], vec![3, 0]]
        );
        let plus: Vec<Vec<i64>> = l0.plus.iter().cloned().collect();
        assert_eq!(plus, vec![vec![0, 0], vec![2, 0], vec![3, 0]]);
        let minus: Vec<Vec<i64>> = l0.minus.iter().cloned().collect();
        assert_eq!(minus, vec![vec![1, 0]]);
        assert_eq!(fl.levels.len(), 2);
    }

    #[test]
    fn flag_of_cubic_on_diagonal() {
        // (a+, a+), a < 0: the cubic monomials minimize
        let p = point("+-2 +-2");
        let fl = flag(&cubic(), &p, SpanMode::Affine).unwrap();
        let members: Vec<Vec<i64>> = fl.levels[0].members.iter().cloned().collect();
        assert_eq!(
            members,
            vec![vec![0, 3], vec![1, 2], vec![2, 1], vec![3, 0]]
        );
        // generic point: singleton argmin
        let g = point("+1 +2");
        let fl = flag(&cubic(), &g, SpanMode::Affine).unwrap();
        assert_eq!(fl.levels[0].members.len(), 1);
    }

    #[test]
    fn separation_examples() {
        let l = AffineFunctional::new(0, vec![1, 0]);
        let empty = BTreeSet::new();
        let b: BTreeSet<Vec<i64>> = [vec![1, 0], vec![2, 1]].into_iter().collect();
        assert!(separates(&l, &empty, &b));
        // A inside the kernel, B in a closed halfspace but not inside
        let a: BTreeSet<Vec<i64>> = [vec![0, 0], vec![0, 1]].into_iter().collect();
        assert!(separates(&l, &a, &b));
        // the square circuit is not separable by any small functional
        let plus: BTreeSet<Vec<i64>> = [vec![0, 0], vec![1, 1]].into_iter().collect();
        let minus: BTreeSet<Vec<i64>> = [vec![1, 0], vec![0, 1]].into_iter().collect();
        for b0 in -3..=3 {
            for b1 in -3..=3 {
                for b2 in -3i64..=3 {
                    if b0 == 0 && b1 == 0 && b2 == 0 {
                        continue;
                    }
                    let l = AffineFunctional::new(b0, vec![b1, b2]);
                    assert!(!separates(&l, &plus, &minus));
                }
            }
        }
        assert!(find_separating_l::<Rat>(&empty, &plus, &minus).is_none());
    }

    #[test]
    fn separator_search_finds_witnesses() {
        // level-1 separation data of the cubic on the diagonal class
        let fixed: BTreeSet<Vec<i64>> = [vec![3, 0], vec![0, 3], vec![2, 1], vec![1, 2]]
            .into_iter()
            .collect();
        let plus: BTreeSet<Vec<i64>> = [
            vec![3, 0],
            vec![0, 3],
            vec![2, 0],
            vec![0, 2],
            vec![1, 1],
        ]
        .into_iter()
        .collect();
        let minus: BTreeSet<Vec<i64>> = [vec![2, 1], vec![1, 2]].into_iter().collect();
        let l = find_separating_l::<Rat>(&fixed, &plus, &minus).unwrap();
        // vanishes on the fixed line v + w = 3
        assert!(fixed.iter().all(|q| l.eval(q) == 0));
        let plus_only: BTreeSet<Vec<i64>> = plus.difference(&fixed).cloned().collect();
        let minus_only: BTreeSet<Vec<i64>> = minus.difference(&fixed).cloned().collect();
        assert!(separates(&l, &plus_only, &minus_only));
        // single point on one side in one variable
        let p1: BTreeSet<Vec<i64>> = [vec![0]].into_iter().collect();
        let empty = BTreeSet::new();
        let l1 = find_separating_l::<Rat>(&empty, &p1, &empty).unwrap();
        assert_eq!(l1.eval(&[0]), 1);
    }

    #[test]
    fn cubic_singularity_verdicts() {
        let f = cubic();
        for (s, singular) in [
            ("+0 +0", true),
            ("+0 +1", true),
            ("+0 +2", true),
            ("+1 +0", true),
            ("+-1 +-1", false),
            ("+-3 +-3", false),
        ] {
            let v = is_singular(&f, &point(s), SpanMode::Affine).unwrap();
            assert_eq!(v.singular, singular, "at {}", s);
            if !singular {
                let (level, l) = v.separator.clone().unwrap();
                // the witness separates the level's sign parts
                let lev = &v.flag.levels[level];
                assert!(separates(&l, &lev.plus, &lev.minus));
            }
        }
        // off-curve points are rejected
        assert!(matches!(
            is_singular(&f, &point("+1 +2"), SpanMode::Affine),
            Err(Error::NotOnHypersurface)
        ));
    }

    #[test]
    fn weight_class_comparisons() {
        let f = cubic();
        assert!(
            weight_class_eq(&f, &point("+0 +1"), &point("+0 +2"), SpanMode::Affine).unwrap()
        );
        assert!(
            !weight_class_eq(&f, &point("+-1 +-1"), &point("+0 +0"), SpanMode::Affine).unwrap()
        );
        assert!(weight_class_eq(&f, &point("+0 +0"), &point("+0 +0"), SpanMode::Affine).unwrap());
    }

    #[test]
    fn euler_intersection_checks() {
        let f = cubic();
        let mut all_small = Vec::new();
        for b0 in -2..=2 {
            for b1 in -2..=2 {
                for b2 in -2i64..=2 {
                    if b0 == 0 && b1 == 0 && b2 == 0 {
                        continue;
                    }
                    all_small.push(AffineFunctional::new(b0, vec![b1, b2]));
                }
            }
        }
        assert!(euler_intersection_check(&f, &point("+0 +0"), &all_small).unwrap());
        let with_witness = vec![AffineFunctional::new(-3, vec![1, 1])];
        assert!(!euler_intersection_check(&f, &point("+-1 +-1"), &with_witness).unwrap());
        assert!(euler_intersection_check(&f, &point("+0 +0"), &[]).unwrap());
    }

    #[test]
    fn cubic_positive_orthant_classes() {
        let classes = classify_plane_weight_classes(&cubic(), (Sign::Plus, Sign::Plus)).unwrap();
        assert_eq!(classes.len(), 4);
        let mut verdicts: Vec<(String, bool)> = classes
            .iter()
            .map(|c| (c.cells[0].to_string(), c.verdict.singular))
            .collect();
        verdicts.sort();
        assert_eq!(
            verdicts,
            vec![
                ("ray from (0, 0) direction (-1, -1)".to_string(), false),
                ("ray from (0, 0) direction (0, 1)".to_string(), true),
                ("ray from (0, 0) direction (1, 0)".to_string(), true),
                ("vertex (0, 0)".to_string(), true),
            ]
        );
    }

    #[test]
    fn hyperplane_classes_are_regular() {
        let f = tp("+ 0 : 0 0\n+ 0 : 1 0\n+ 0 : 0 1");
        for orthant in [
            (Sign::Plus, Sign::Minus),
            (Sign::Minus, Sign::Plus),
            (Sign::Minus, Sign::Minus),
        ] {
            for class in classify_plane_weight_classes(&f, orthant).unwrap() {
                assert!(!class.verdict.singular);
            }
        }
    }
}
