//! Circuit (minimal-support) generators of affine ideals over the Puiseux
//! field and membership in the tropicalization of linear spaces.
//!
//! All linear algebra is fraction free: ranks by cross-multiplication
//! elimination, kernel vectors by Cramer determinants, so only ring
//! operations on finite series are ever needed.

use crate::error::{Error, Result};
use crate::kpoly::PuiseuxPoly;
use crate::puiseux::Puiseux;
use crate::scalar::Scalar;
use crate::subdivision::subsets;
use crate::tropical::TropPoint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A system of affine forms: each row holds the coefficients of
/// `x_1 .. x_n` followed by the constant term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem<T> {
    dim: usize,
    rows: Vec<Vec<Puiseux<T>>>,
}

impl<T: Scalar> LinearSystem<T> {
    pub fn new(dim: usize, rows: Vec<Vec<Puiseux<T>>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidPointSet("empty system".into()));
        }
        for r in &rows {
            if r.len() != dim + 1 {
                return Err(Error::DimensionMismatch {
                    expected: dim + 1,
                    got: r.len(),
                });
            }
            if r.iter().all(|c| c.is_zero()) {
                return Err(Error::InvalidPointSet("zero row".into()));
            }
        }
        Ok(LinearSystem { dim, rows })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<Puiseux<T>>] {
        &self.rows
    }
}

/// An affine form with inclusion-minimal support in the row space,
/// normalized to minimum coefficient valuation 0 and principal coefficient 1
/// at the least-index nonzero entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitForm<T> {
    pub coeffs: Vec<Puiseux<T>>,
    pub support: Vec<usize>,
}

impl<T: Scalar> CircuitForm<T> {
    /// The circuit as a polynomial: entries `0..n-1` are the coordinate
    /// coefficients, entry `n` the constant term.
    pub fn to_poly(&self) -> PuiseuxPoly<T> {
        let n = self.coeffs.len() - 1;
        let terms = self.coeffs.iter().enumerate().filter_map(|(i, c)| {
            if c.is_zero() {
                None
            } else {
                let mut exp = vec![0i64; n];
                if i < n {
                    exp[i] = 1;
                }
                Some((exp, c.clone()))
            }
        });
        PuiseuxPoly::from_terms(n, terms).expect("dimension consistent")
    }
}

fn det<T: Scalar>(m: &[Vec<Puiseux<T>>]) -> Puiseux<T> {
    let n = m.len();
    if n == 0 {
        return Puiseux::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    // cofactor expansion along the first row; fine at desk scale
    let mut acc = Puiseux::zero();
    for (j, c) in m[0].iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Puiseux<T>>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = c.clone() * det(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// Rank by cross-multiplication elimination (no division).
fn puiseux_rank<T: Scalar>(mut rows: Vec<Vec<Puiseux<T>>>) -> usize {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][col].clone();
        for i in (r + 1)..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let f = rows[i][col].clone();
            for j in col..ncols {
                rows[i][j] =
                    rows[i][j].clone() * pivot.clone() - rows[r][j].clone() * f.clone();
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Checks row independence; on failure returns the least dependent row and
/// the multipliers expressing it from the earlier rows.
fn independence_witness<T: Scalar>(rows: &[Vec<Puiseux<T>>]) -> Result<()> {
    for k in 2..=rows.len() {
        if puiseux_rank(rows[..k].to_vec()) < k {
            return Err(Error::DependentRows(format!(
                "row {} lies in the span of rows 1..{}",
                k,
                k - 1
            )));
        }
    }
    Ok(())
}

/// All circuits of the row space: inclusion-minimal supports of nonzero
/// affine forms in the span of the input rows, one normalized form each.
pub fn circuits<T: Scalar>(sys: &LinearSystem<T>) -> Result<Vec<CircuitForm<T>>> {
    let r = sys.rows.len();
    let ncols = sys.dim + 1;
    independence_witness(&sys.rows)?;

    // column views
    let col = |j: usize| -> Vec<Puiseux<T>> {
        sys.rows.iter().map(|row| row[j].clone()).collect()
    };

    let mut out: Vec<CircuitForm<T>> = Vec::new();
    for size in 1..=ncols {
        'cand: for c_idx in subsets(ncols, size) {
            let not_c: Vec<usize> = (0..ncols).filter(|j| !c_idx.contains(j)).collect();
            // a one-dimensional space of forms supported inside C needs the
            // excluded columns to have rank r-1
            let excluded: Vec<Vec<Puiseux<T>>> =
                (0..r).map(|i| not_c.iter().map(|&j| sys.rows[i][j].clone()).collect()).collect();
            if puiseux_rank(excluded.clone()) != r - 1 {
                continue;
            }
            // pick r-1 independent excluded columns
            let mut chosen: Vec<usize> = Vec::new();
            for (k, &j) in not_c.iter().enumerate() {
                let _ = j;
                let mut test = chosen.clone();
                test.push(k);
                let cols_mat: Vec<Vec<Puiseux<T>>> = test
                    .iter()
                    .map(|&kk| excluded.iter().map(|row| row[kk].clone()).collect())
                    .collect();
                if puiseux_rank(cols_mat) == test.len() {
                    chosen = test;
                }
                if chosen.len() == r - 1 {
                    break;
                }
            }
            if chosen.len() != r - 1 {
                continue;
            }
            // lambda orthogonal to the chosen columns via Cramer: the i-th
            // entry is the signed maximal minor omitting row i
            let n_mat: Vec<Vec<Puiseux<T>>> = chosen
                .iter()
                .map(|&kk| excluded.iter().map(|row| row[kk].clone()).collect())
                .collect(); // (r-1) columns, each of length r
            let mut lambda: Vec<Puiseux<T>> = Vec::with_capacity(r);
            for i in 0..r {
                let minor: Vec<Vec<Puiseux<T>>> = (0..r)
                    .filter(|&row| row != i)
                    .map(|row| n_mat.iter().map(|c| c[row].clone()).collect())
                    .collect();
                let d = det(&minor);
                lambda.push(if i % 2 == 0 { d } else { -d });
            }
            // the candidate form
            let mut v: Vec<Puiseux<T>> = Vec::with_capacity(ncols);
            for j in 0..ncols {
                let column = col(j);
                let mut acc = Puiseux::zero();
                for (l, cj) in lambda.iter().zip(column) {
                    acc = acc + l.clone() * cj;
                }
                v.push(acc);
            }
            // support must be exactly C
            for (j, value) in v.iter().enumerate() {
                let inside = c_idx.contains(&j);
                if inside == value.is_zero() {
                    continue 'cand;
                }
            }
            out.push(normalize_circuit(v, c_idx));
        }
    }
    Ok(out)
}

fn normalize_circuit<T: Scalar>(coeffs: Vec<Puiseux<T>>, support: Vec<usize>) -> CircuitForm<T> {
    let minval = coeffs
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.valuation().expect("nonzero"))
        .min()
        .expect("circuit has nonempty support");
    let first = coeffs
        .iter()
        .find(|c| !c.is_zero())
        .expect("circuit has nonempty support");
    let pc = first.principal().expect("nonzero");
    let unit = Puiseux::monomial(T::one() / pc, T::zero() - minval);
    CircuitForm {
        coeffs: coeffs.into_iter().map(|c| c * unit.clone()).collect(),
        support,
    }
}

/// Membership of `p` in the tropicalized affine space: every circuit's
/// hypersurface must contain `p`. Returns the index of the first rejecting
/// circuit otherwise.
pub fn linear_member<T: Scalar>(
    circuits: &[CircuitForm<T>],
    p: &TropPoint<T>,
) -> Result<(bool, Option<usize>)> {
    for (i, c) in circuits.iter().enumerate() {
        if !c.to_poly().tropicalize()?.is_member(p)? {
            return Ok((false, Some(i)));
        }
    }
    Ok((true, None))
}

fn random_series<T: Scalar, R: Rng>(rng: &mut R) -> Puiseux<T> {
    let nterms = rng.gen_range(1..=2);
    let mut terms = Vec::new();
    let mut exp = rng.gen_range(-2..=2);
    for _ in 0..nterms {
        let c = loop {
            let c = rng.gen_range(-9..=9);
            if c != 0 {
                break c;
            }
        };
        terms.push((T::from_int(exp), T::from_int(c)));
        exp += rng.gen_range(1..=2);
    }
    Puiseux::from_terms(terms)
}

/// Deterministic pseudo-random finite-series points in the solution set with
/// all coordinates nonzero. The pivot block must have a monomial
/// determinant, otherwise the solution has no finite-series representation
/// and sampling fails.
pub fn sample_solutions<T: Scalar>(
    sys: &LinearSystem<T>,
    count: usize,
    seed: u64,
) -> Result<Vec<Vec<Puiseux<T>>>> {
    let r = sys.rows.len();
    let n = sys.dim;
    independence_witness(&sys.rows)?;
    let coeff_cols: Vec<Vec<Puiseux<T>>> = (0..n)
        .map(|j| sys.rows.iter().map(|row| row[j].clone()).collect())
        .collect();
    // choose a pivot column set with a monomial determinant
    let mut pivot: Option<(Vec<usize>, Puiseux<T>)> = None;
    for cand in subsets(n, r) {
        let mat: Vec<Vec<Puiseux<T>>> = (0..r)
            .map(|i| cand.iter().map(|&j| coeff_cols[j][i].clone()).collect())
            .collect();
        let d = det(&mat);
        if d.is_monomial() {
            pivot = Some((cand, d));
            break;
        }
    }
    let Some((pivot_cols, pivot_det)) = pivot else {
        return Err(Error::CannotSampleExactly);
    };
    let det_inv = pivot_det.monomial_inverse()?;
    let free_cols: Vec<usize> = (0..n).filter(|j| !pivot_cols.contains(j)).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let wanted = if free_cols.is_empty() { 1 } else { count };
    let mut out = Vec::new();
    let mut retries = 0usize;
    while out.len() < wanted {
        if retries > 64 * wanted + 64 {
            return Err(Error::RetriesExhausted);
        }
        retries += 1;
        let assignment: Vec<Puiseux<T>> = free_cols
            .iter()
            .map(|_| random_series::<T, _>(&mut rng))
            .collect();
        // rhs_i = -(const_i + sum over free columns)
        let rhs: Vec<Puiseux<T>> = (0..r)
            .map(|i| {
                let mut acc = sys.rows[i][n].clone();
                for (k, &j) in free_cols.iter().enumerate() {
                    acc = acc + coeff_cols[j][i].clone() * assignment[k].clone();
                }
                -acc
            })
            .collect();
        // Cramer on the pivot block
        let mut point = vec![Puiseux::zero(); n];
        for (k, &j) in free_cols.iter().enumerate() {
            point[j] = assignment[k].clone();
        }
        for (pos, &j) in pivot_cols.iter().enumerate() {
            let mat: Vec<Vec<Puiseux<T>>> = (0..r)
                .map(|i| {
                    pivot_cols
                        .iter()
                        .enumerate()
                        .map(|(q, &jj)| {
                            if q == pos {
                                rhs[i].clone()
                            } else {
                                coeff_cols[jj][i].clone()
                            }
                        })
                        .collect()
                })
                .collect();
            point[j] = det(&mat) * det_inv.clone();
        }
        if point.iter().any(|c| c.is_zero()) {
            if free_cols.is_empty() {
                return Err(Error::RetriesExhausted);
            }
            continue;
        }
        out.push(point);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_puiseux, parse_puiseux_rows};
    use crate::Rat;

    fn sys(dim: usize, s: &str) -> LinearSystem<Rat> {
        LinearSystem::new(dim, parse_puiseux_rows(s).unwrap()).unwrap()
    }

    fn ps(s: &str) -> Puiseux<Rat> {
        parse_puiseux(s).unwrap()
    }

    #[test]
    fn single_hyperplane_is_its_own_circuit() {
        let s = sys(2, "1, 1, 1");
        let cs = circuits(&s).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].support, vec![0, 1, 2]);
        assert_eq!(cs[0].coeffs, vec![ps("1"), ps("1"), ps("1")]);
    }

    #[test]
    fn pencil_of_coordinate_differences() {
        // rows x - z, y - z in three variables
        let s = sys(3, "1, 0, -1, 0\n0, 1, -1, 0");
        let cs = circuits(&s).unwrap();
        let supports: Vec<Vec<usize>> = cs.iter().map(|c| c.support.clone()).collect();
        assert_eq!(supports, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        // x - y, x - z, y - z, normalized
        assert_eq!(cs[0].coeffs[0], ps("1"));
        assert_eq!(cs[0].coeffs[1], ps("-1"));
        for c in &cs {
            // every circuit vanishes on the diagonal (a, a, a)
            let a = ps("2 + 1*t");
            let val = c.to_poly().eval(&[a.clone(), a.clone(), a]).unwrap();
            assert!(val.is_zero());
        }
    }

    #[test]
    fn affine_pair_has_three_circuits() {
        // x + y + 1 = 0, x - y + t = 0
        let s = sys(2, "1, 1, 1\n1, -1, 1*t");
        let cs = circuits(&s).unwrap();
        let supports: Vec<Vec<usize>> = cs.iter().map(|c| c.support.clone()).collect();
        assert_eq!(supports, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        let solution = vec![
            ps("-1/2 - 1/2*t"),
            ps("-1/2 + 1/2*t"),
        ];
        for c in &cs {
            assert!(c.to_poly().eval(&solution).unwrap().is_zero());
        }
    }

    #[test]
    fn dependent_rows_are_rejected() {
        let s = sys(2, "1, 1, 0\n2, 2, 0");
        assert!(matches!(circuits(&s), Err(Error::DependentRows(_))));
    }

    #[test]
    fn hyperplane_membership() {
        let s = sys(2, "1, 1, 1");
        let cs = circuits(&s).unwrap();
        let yes = crate::text::parse_point::<Rat>("-0 -0").unwrap();
        assert!(linear_member(&cs, &yes).unwrap().0);
        let no = crate::text::parse_point::<Rat>("+0 +0").unwrap();
        let (ok, reject) = linear_member(&cs, &no).unwrap();
        assert!(!ok);
        assert_eq!(reject, Some(0));
    }

    #[test]
    fn diagonal_membership_via_circuits() {
        let s = sys(3, "1, 0, -1, 0\n0, 1, -1, 0");
        let cs = circuits(&s).unwrap();
        let p = crate::text::parse_point::<Rat>("+0 +0 -0").unwrap();
        let (ok, reject) = linear_member(&cs, &p).unwrap();
        assert!(!ok);
        // the x - z circuit rejects: evaluated signs are {+, +}
        assert_eq!(reject, Some(1));
        let q = crate::text::parse_point::<Rat>("+2 +2 +2").unwrap();
        assert!(linear_member(&cs, &q).unwrap().0);
    }

    #[test]
    fn sampling_respects_the_equations() {
        let s = sys(2, "1, 1, 1");
        let pts = sample_solutions(&s, 5, 7).unwrap();
        assert_eq!(pts.len(), 5);
        for p in &pts {
            let val = p[0].clone() + p[1].clone() + ps("1");
            assert!(val.is_zero());
            assert!(!p[0].is_zero() && !p[1].is_zero());
        }
        // determined system: the unique solution is emitted once
        let s2 = sys(2, "1, 1, 1\n1, -1, 1*t");
        let pts2 = sample_solutions(&s2, 5, 7).unwrap();
        assert_eq!(pts2.len(), 1);
        assert_eq!(pts2[0], vec![ps("-1/2 - 1/2*t"), ps("-1/2 + 1/2*t")]);
        // diagonal line: points (a, a, a)
        let s3 = sys(3, "1, 0, -1, 0\n0, 1, -1, 0");
        for p in sample_solutions(&s3, 4, 1).unwrap() {
            assert_eq!(p[0], p[2]);
            assert_eq!(p[1], p[2]);
        }
    }
}
