//! Regular subdivisions dual to a tropical polynomial, the triangulation
//! certificate for single-polynomial tropical bases, and extraction of the
//! plane curve skeleton for rendering.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tropical::{Sign, TropPoint, TropPoly};
use std::collections::{BTreeMap, BTreeSet};

/// The regular subdivision of the support induced by lifting each exponent
/// vector to its coefficient modulus. Cells are the equality sets of lower
/// support hyperplanes, full-dimensional relative to the affine span of the
/// support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdivision<T> {
    pub support: Vec<Vec<i64>>,
    pub lifting: BTreeMap<Vec<i64>, T>,
    pub cells: Vec<Vec<Vec<i64>>>,
    pub span_dim: usize,
}

fn scal<T: Scalar>(v: &[i64]) -> Vec<T> {
    v.iter().map(|&x| T::from_int(x)).collect()
}

/// Row-echelon rank of a small rational matrix.
fn rank<T: Scalar>(mut rows: Vec<Vec<T>>) -> usize {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let p = rows[r][col].clone();
        for i in (r + 1)..rows.len() {
            let factor = rows[i][col].clone() / p.clone();
            for j in col..ncols {
                rows[i][j] = rows[i][j].clone() - factor.clone() * rows[r][j].clone();
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Dimension of the affine span of a set of integer points.
pub fn affine_span_dim<T: Scalar>(points: &[Vec<i64>]) -> usize {
    let Some(base) = points.first() else {
        return 0;
    };
    let rows: Vec<Vec<T>> = points[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(base)
                .map(|(a, b)| T::from_int(a - b))
                .collect()
        })
        .collect();
    rank(rows)
}

/// Solves `M x = rhs` for a consistent system with exactly one solution on
/// its column span; returns `None` when inconsistent.
fn solve<T: Scalar>(m: &[Vec<T>], rhs: &[T]) -> Option<Vec<T>> {
    let nrows = m.len();
    let ncols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut aug: Vec<Vec<T>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !aug[i][col].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let pv = aug[r][col].clone();
        for j in col..=ncols {
            aug[r][j] = aug[r][j].clone() / pv.clone();
        }
        for i in 0..nrows {
            if i != r && !aug[i][col].is_zero() {
                let f = aug[i][col].clone();
                for j in col..=ncols {
                    aug[i][j] = aug[i][j].clone() - f.clone() * aug[r][j].clone();
                }
            }
        }
        pivots.push((r, col));
        r += 1;
        if r == nrows {
            break;
        }
    }
    // inconsistent row: 0 = nonzero
    for i in r..nrows {
        if !aug[i][ncols].is_zero() {
            return None;
        }
    }
    let mut x = vec![T::zero(); ncols];
    for (row, col) in pivots {
        x[col] = aug[row][ncols].clone();
    }
    Some(x)
}

/// Full-dimensional lower-hull cells by exhaustive enumeration of candidate
/// facet hyperplanes: every affinely independent (d+1)-subset of the lifted
/// points, d the affine span dimension of the support.
pub fn dual_subdivision<T: Scalar>(f: &TropPoly<T>) -> Result<Subdivision<T>> {
    let support = f.support();
    let lifting: BTreeMap<Vec<i64>, T> = f
        .terms()
        .map(|(e, c)| (e.clone(), c.modulus.clone()))
        .collect();
    let d = affine_span_dim::<T>(&support);
    if d == 0 {
        return Err(Error::DegenerateSupport);
    }
    let mut cells: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    for subset in subsets(support.len(), d + 1) {
        let pts: Vec<&Vec<i64>> = subset.iter().map(|&i| &support[i]).collect();
        if affine_span_dim::<T>(&subset.iter().map(|&i| support[i].clone()).collect::<Vec<_>>())
            != d
        {
            continue;
        }
        // the affine values of the candidate plane are determined on the
        // span by interpolation over the subset
        if let Some(cell) = equality_cell(&support, &lifting, &pts) {
            cells.insert(cell);
        }
    }
    Ok(Subdivision {
        support,
        lifting,
        cells: cells.into_iter().collect(),
        span_dim: d,
    })
}

/// If the affine interpolation of the lifting over `base` is a lower support
/// plane (everywhere at most the lifting), returns its equality set.
fn equality_cell<T: Scalar>(
    support: &[Vec<i64>],
    lifting: &BTreeMap<Vec<i64>, T>,
    base: &[&Vec<i64>],
) -> Option<Vec<Vec<i64>>> {
    let b0 = base[0];
    // columns are the difference vectors of the base subset
    let cols: Vec<Vec<T>> = base[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(b0.iter())
                .map(|(a, b)| T::from_int(a - b))
                .collect()
        })
        .collect();
    let nrows = b0.len();
    let matrix: Vec<Vec<T>> = (0..nrows)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let mut cell = Vec::new();
    for a in support {
        let rhs: Vec<T> = a
            .iter()
            .zip(b0.iter())
            .map(|(x, y)| T::from_int(x - y))
            .collect();
        let lambda = solve(&matrix, &rhs).expect("support point lies in the span of the base");
        let mut predicted = lifting[b0].clone();
        for (l, p) in lambda.iter().zip(base[1..].iter()) {
            predicted =
                predicted + l.clone() * (lifting[*p].clone() - lifting[b0].clone());
        }
        let actual = &lifting[a];
        match predicted.cmp(actual) {
            std::cmp::Ordering::Greater => return None, // plane passes above a lifted point
            std::cmp::Ordering::Equal => cell.push(a.clone()),
            std::cmp::Ordering::Less => {}
        }
    }
    Some(cell)
}

/// All k-subsets of 0..n in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in (i + 1)..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// The T-construction certificate: the dual subdivision is a triangulation
/// (relative to the affine span) using every support monomial as a vertex.
pub fn is_patchwork_certified<T: Scalar>(f: &TropPoly<T>) -> bool {
    if f.len() == 1 {
        // empty hypersurface, trivially a basis
        return true;
    }
    let Ok(sub) = dual_subdivision(f) else {
        return false;
    };
    let want = sub.span_dim + 1;
    if sub.cells.iter().any(|c| c.len() != want) {
        return false;
    }
    let used: BTreeSet<&Vec<i64>> = sub.cells.iter().flatten().collect();
    sub.support.iter().all(|p| used.contains(p))
}

/// Outcome of a certified membership query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertifiedMembership {
    /// Membership promoted to an exact statement about the tropicalized
    /// variety of any lift.
    InTropV,
    NotInTropV,
    /// No triangulation certificate; the raw hypersurface membership value
    /// is attached.
    Uncertified(bool),
}

pub fn certified_member<T: Scalar>(
    f: &TropPoly<T>,
    p: &TropPoint<T>,
) -> Result<CertifiedMembership> {
    let member = f.is_member(p)?;
    Ok(if is_patchwork_certified(f) {
        if member {
            CertifiedMembership::InTropV
        } else {
            CertifiedMembership::NotInTropV
        }
    } else {
        CertifiedMembership::Uncertified(member)
    })
}

/// One orthant's worth of the plane curve: exact vertices, bounded segments
/// and unbounded rays (origin plus primitive integer direction).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthantCurve<T> {
    pub vertices: Vec<[T; 2]>,
    pub segments: Vec<([T; 2], [T; 2])>,
    pub rays: Vec<([T; 2], [i64; 2])>,
}

impl<T> Default for OrthantCurve<T> {
    fn default() -> Self {
        OrthantCurve {
            vertices: Vec::new(),
            segments: Vec::new(),
            rays: Vec::new(),
        }
    }
}

/// The 1-skeleton of a plane real tropical curve, per sign orthant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCurve<T> {
    pub orthants: Vec<((Sign, Sign), OrthantCurve<T>)>,
}

impl<T: Scalar> PlaneCurve<T> {
    pub fn orthant(&self, s: (Sign, Sign)) -> &OrthantCurve<T> {
        &self
            .orthants
            .iter()
            .find(|(o, _)| *o == s)
            .expect("all four orthants present")
            .1
    }
}

fn gcd64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn primitive(v: [i64; 2]) -> [i64; 2] {
    let g = gcd64(v[0], v[1]);
    if g == 0 {
        v
    } else {
        [v[0] / g, v[1] / g]
    }
}

/// Value slope comparison data for one face: the tied monomials and the
/// locus geometry.
#[derive(Debug, Clone)]
enum FaceDual<T> {
    Segment([T; 2], [T; 2]),
    Ray([T; 2], [i64; 2]),
    Line([T; 2], [i64; 2]),
}

/// The dual vertex of a full-dimensional cell: the unique weight where all
/// cell monomials tie.
fn cell_vertex<T: Scalar>(lifting: &BTreeMap<Vec<i64>, T>, cell: &[Vec<i64>]) -> [T; 2] {
    let base = &cell[0];
    // pick two independent difference vectors
    let mut rows: Vec<Vec<T>> = Vec::new();
    let mut rhs: Vec<T> = Vec::new();
    for p in &cell[1..] {
        let d = [p[0] - base[0], p[1] - base[1]];
        rows.push(scal(&d));
        rhs.push(lifting[base].clone() - lifting[p].clone());
        if rank(rows.clone()) == 2 {
            break;
        }
    }
    let sol = solve(&rows, &rhs).expect("cell spans the plane");
    [sol[0].clone(), sol[1].clone()]
}

/// Enumerates the 1-faces of the subdivision with their dual loci.
fn curve_faces<T: Scalar>(sub: &Subdivision<T>) -> Vec<(Vec<Vec<i64>>, FaceDual<T>)> {
    let mut out: BTreeMap<Vec<Vec<i64>>, Vec<usize>> = BTreeMap::new();
    if sub.span_dim == 1 {
        // cells themselves are the 1-faces; their duals are full lines
        for cell in &sub.cells {
            out.entry(cell.clone()).or_default();
        }
        return out
            .into_keys()
            .map(|face| {
                let dual = line_dual(&sub.lifting, &face);
                (face, dual)
            })
            .collect();
    }
    // span_dim == 2: boundary edges of each cell, keyed to incident cells
    for (ci, cell) in sub.cells.iter().enumerate() {
        for edge in cell_boundary_edges::<T>(cell) {
            out.entry(edge).or_default().push(ci);
        }
    }
    out.into_iter()
        .map(|(face, incident)| {
            let dual = match incident.len() {
                2 => {
                    let a = cell_vertex(&sub.lifting, &sub.cells[incident[0]]);
                    let b = cell_vertex(&sub.lifting, &sub.cells[incident[1]]);
                    FaceDual::Segment(a, b)
                }
                1 => {
                    let cell = &sub.cells[incident[0]];
                    let v = cell_vertex(&sub.lifting, cell);
                    let dir = outward_ray_direction::<T>(cell, &face);
                    FaceDual::Ray(v, dir)
                }
                n => unreachable!("interior edge bounds {} cells", n),
            };
            (face, dual)
        })
        .collect()
}

/// Maximal collinear boundary subsets of a full-dimensional cell.
fn cell_boundary_edges<T: Scalar>(cell: &[Vec<i64>]) -> Vec<Vec<Vec<i64>>> {
    let mut edges: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    for i in 0..cell.len() {
        for j in (i + 1)..cell.len() {
            let (p, q) = (&cell[i], &cell[j]);
            let normal = [q[1] - p[1], -(q[0] - p[0])];
            let side = |r: &Vec<i64>| normal[0] * (r[0] - p[0]) + normal[1] * (r[1] - p[1]);
            let mut on_line = Vec::new();
            let mut pos = false;
            let mut neg = false;
            for r in cell {
                match side(r).cmp(&0) {
                    std::cmp::Ordering::Equal => on_line.push(r.clone()),
                    std::cmp::Ordering::Greater => pos = true,
                    std::cmp::Ordering::Less => neg = true,
                }
            }
            if pos != neg {
                on_line.sort();
                edges.insert(on_line);
            }
        }
    }
    edges.into_iter().collect()
}

/// Direction of the unbounded dual ray of a boundary edge of `cell`:
/// perpendicular to the edge, oriented so the non-edge cell monomials fall
/// behind.
fn outward_ray_direction<T: Scalar>(cell: &[Vec<i64>], edge: &[Vec<i64>]) -> [i64; 2] {
    let p = &edge[0];
    let q = &edge[1];
    let u = [q[0] - p[0], q[1] - p[1]];
    let mut dir = primitive([-u[1], u[0]]);
    let witness = cell
        .iter()
        .find(|r| !edge.contains(r))
        .expect("full-dimensional cell exceeds its edge");
    let side = dir[0] * (witness[0] - p[0]) + dir[1] * (witness[1] - p[1]);
    debug_assert!(side != 0);
    if side < 0 {
        dir = [-dir[0], -dir[1]];
    }
    dir
}

/// The dual locus of a 1-face when the whole support is collinear: a line.
fn line_dual<T: Scalar>(lifting: &BTreeMap<Vec<i64>, T>, face: &[Vec<i64>]) -> FaceDual<T> {
    let p = &face[0];
    let q = &face[1];
    let u = [q[0] - p[0], q[1] - p[1]];
    // base point: solve <w, u> = c(p) - c(q) along the direction u itself
    let rhs = lifting[p].clone() - lifting[q].clone();
    let norm = T::from_int(u[0] * u[0] + u[1] * u[1]);
    let gamma = rhs / norm;
    let base = [gamma.clone() * T::from_int(u[0]), gamma * T::from_int(u[1])];
    FaceDual::Line(base, primitive([-u[1], u[0]]))
}

fn face_has_both_signs<T: Scalar>(
    f: &TropPoly<T>,
    face: &[Vec<i64>],
    orthant: (Sign, Sign),
) -> bool {
    let mut plus = false;
    let mut minus = false;
    for e in face {
        let c = f.coeff(e).expect("face points lie in the support");
        let s = c.sign * orthant.0.pow(e[0]) * orthant.1.pow(e[1]);
        match s {
            Sign::Plus => plus = true,
            Sign::Minus => minus = true,
        }
    }
    plus && minus
}

/// Per-orthant 1-skeleton of the real tropical plane curve: the faces of the
/// min-breakpoint locus restricted to sign-compatible opposite-sign argmin
/// sets. Coordinates are exact rationals.
pub fn plane_curve_cells<T: Scalar>(f: &TropPoly<T>) -> Result<PlaneCurve<T>> {
    if f.dim() != 2 {
        return Err(Error::NotBivariate);
    }
    let orthants = [
        (Sign::Plus, Sign::Plus),
        (Sign::Plus, Sign::Minus),
        (Sign::Minus, Sign::Plus),
        (Sign::Minus, Sign::Minus),
    ];
    if f.len() == 1 {
        return Ok(PlaneCurve {
            orthants: orthants
                .into_iter()
                .map(|o| (o, OrthantCurve::default()))
                .collect(),
        });
    }
    let sub = dual_subdivision(f)?;
    let faces = curve_faces(&sub);
    let mut curve = Vec::new();
    for orthant in orthants {
        let mut oc = OrthantCurve::default();
        let mut vertices: BTreeSet<Vec<T>> = BTreeSet::new();
        if sub.span_dim == 2 {
            for cell in &sub.cells {
                if face_has_both_signs(f, cell, orthant) {
                    let v = cell_vertex(&sub.lifting, cell);
                    vertices.insert(v.to_vec());
                }
            }
        }
        for (face, dual) in &faces {
            if !face_has_both_signs(f, face, orthant) {
                continue;
            }
            match dual {
                FaceDual::Segment(a, b) => {
                    if a == b {
                        // adjacent cells can share their dual vertex when the
                        // edge is dual to a degenerate (zero length) segment
                        continue;
                    }
                    let (a, b) = if a.to_vec() <= b.to_vec() { (a, b) } else { (b, a) };
                    oc.segments.push((a.clone(), b.clone()));
                }
                FaceDual::Ray(v, d) => oc.rays.push((v.clone(), *d)),
                FaceDual::Line(base, d) => {
                    oc.rays.push((base.clone(), *d));
                    oc.rays.push((base.clone(), [-d[0], -d[1]]));
                }
            }
        }
        oc.vertices = vertices
            .into_iter()
            .map(|v| [v[0].clone(), v[1].clone()])
            .collect();
        oc.segments.sort_by(|a, b| {
            (a.0.to_vec(), a.1.to_vec()).cmp(&(b.0.to_vec(), b.1.to_vec()))
        });
        oc.segments.dedup();
        oc.rays
            .sort_by(|a, b| (a.0.to_vec(), a.1).cmp(&(b.0.to_vec(), b.1)));
        oc.rays.dedup();
        curve.push((orthant, oc));
    }
    Ok(PlaneCurve { orthants: curve })
}

/// Twice the area of the convex hull of a cell (normalized volume in the
/// lattice sense for 2D), used by the volume-additivity checks.
pub fn cell_normalized_volume_2d(cell: &[Vec<i64>]) -> i64 {
    let hull = convex_hull_2d(cell);
    let mut area2 = 0;
    for i in 1..hull.len().saturating_sub(1) {
        let a = &hull[0];
        let b = &hull[i];
        let c = &hull[i + 1];
        area2 += (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    }
    area2.abs()
}

/// Monotone chain convex hull over integer points.
pub fn convex_hull_2d(points: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut pts: Vec<Vec<i64>> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let cross = |o: &Vec<i64>, a: &Vec<i64>, b: &Vec<i64>| {
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let mut lower: Vec<Vec<i64>> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Vec<i64>> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}
