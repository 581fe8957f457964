//! Exact linear feasibility over the rationals by Fourier-Motzkin
//! elimination, with back-substitution to produce a concrete solution.
//!
//! Intended for the small systems of the separation criterion (a handful of
//! variables, tens of constraints), where the doubly exponential worst case
//! is irrelevant and exactness is everything.

use crate::scalar::Scalar;

/// The constraint `<coeffs, y> >= rhs`.
#[derive(Debug, Clone)]
pub struct Constraint<T> {
    pub coeffs: Vec<T>,
    pub rhs: T,
}

impl<T: Scalar> Constraint<T> {
    pub fn new(coeffs: Vec<T>, rhs: T) -> Self {
        Constraint { coeffs, rhs }
    }

    /// `<coeffs, y> = rhs` as a pair of inequalities.
    pub fn equality(coeffs: Vec<T>, rhs: T) -> [Self; 2] {
        let neg: Vec<T> = coeffs.iter().map(|c| T::zero() - c.clone()).collect();
        let nrhs = T::zero() - rhs.clone();
        [Constraint::new(coeffs, rhs), Constraint::new(neg, nrhs)]
    }

    fn satisfied_by(&self, y: &[T]) -> bool {
        let lhs = self
            .coeffs
            .iter()
            .zip(y)
            .fold(T::zero(), |acc, (c, v)| acc + c.clone() * v.clone());
        lhs >= self.rhs
    }
}

/// Finds a rational point satisfying every constraint, or `None` when the
/// system is infeasible.
pub fn feasible_point<T: Scalar>(constraints: &[Constraint<T>], nvars: usize) -> Option<Vec<T>> {
    // stages[k] holds constraints mentioning only variables 0..k
    let mut stages: Vec<Vec<Constraint<T>>> = vec![Vec::new(); nvars + 1];
    for c in constraints {
        debug_assert_eq!(c.coeffs.len(), nvars);
        stages[nvars].push(c.clone());
    }

    for var in (0..nvars).rev() {
        let current = std::mem::take(&mut stages[var + 1]);
        let mut pos: Vec<Constraint<T>> = Vec::new();
        let mut neg: Vec<Constraint<T>> = Vec::new();
        let mut keep: Vec<Constraint<T>> = Vec::new();
        for c in current {
            match c.coeffs[var].cmp(&T::zero()) {
                std::cmp::Ordering::Greater => pos.push(c),
                std::cmp::Ordering::Less => neg.push(c),
                std::cmp::Ordering::Equal => keep.push(c),
            }
        }
        // each (pos, neg) pair eliminates the variable:
        // from a*y_v + <rest1> >= r1 (a>0) and -b*y_v + <rest2> >= r2 (b>0)
        // derive b*<rest1> + a*<rest2> >= b*r1 + a*r2
        for p in &pos {
            for n in &neg {
                let a = p.coeffs[var].clone();
                let b = T::zero() - n.coeffs[var].clone();
                let mut coeffs = vec![T::zero(); nvars];
                for i in 0..var {
                    coeffs[i] = b.clone() * p.coeffs[i].clone() + a.clone() * n.coeffs[i].clone();
                }
                let rhs = b.clone() * p.rhs.clone() + a.clone() * n.rhs.clone();
                keep.push(Constraint::new(coeffs, rhs));
            }
        }
        stages[var + 1] = pos;
        stages[var + 1].extend(neg);
        stages[var] = keep;
    }

    // stage 0: constraints with no variables left, i.e. 0 >= rhs
    if stages[0].iter().any(|c| c.rhs > T::zero()) {
        return None;
    }

    // back-substitute, choosing a value inside the interval each stage
    // allows (midpoint when bounded, the finite bound otherwise)
    let mut y = vec![T::zero(); nvars];
    for var in 0..nvars {
        let mut lower: Option<T> = None;
        let mut upper: Option<T> = None;
        for c in &stages[var + 1] {
            let mut rest = c.rhs.clone();
            for i in 0..var {
                rest = rest - c.coeffs[i].clone() * y[i].clone();
            }
            let a = c.coeffs[var].clone();
            let bound = rest / a.clone();
            if a > T::zero() {
                lower = Some(match lower {
                    Some(l) if l >= bound => l,
                    _ => bound,
                });
            } else {
                upper = Some(match upper {
                    Some(u) if u <= bound => u,
                    _ => bound,
                });
            }
        }
        y[var] = match (lower, upper) {
            (Some(l), Some(u)) => {
                debug_assert!(l <= u, "Fourier-Motzkin guarantees a nonempty interval");
                (l + u) / T::from_int(2)
            }
            (Some(l), None) => l,
            (None, Some(u)) => u,
            (None, None) => T::zero(),
        };
    }
    debug_assert!(constraints.iter().all(|c| c.satisfied_by(&y)));
    Some(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn con(coeffs: &[i64], rhs: i64) -> Constraint<Rat> {
        Constraint::new(
            coeffs.iter().map(|&c| Rat::from_int(c)).collect(),
            Rat::from_int(rhs),
        )
    }

    #[test]
    fn feasible_box() {
        // 0 <= x <= 1, 0 <= y <= 1, x + y >= 1
        let cons = vec![
            con(&[1, 0], 0),
            con(&[-1, 0], -1),
            con(&[0, 1], 0),
            con(&[0, -1], -1),
            con(&[1, 1], 1),
        ];
        let y = feasible_point(&cons, 2).unwrap();
        assert!(cons.iter().all(|c| c.satisfied_by(&y)));
    }

    #[test]
    fn infeasible_system() {
        // x >= 1 and -x >= 0
        let cons = vec![con(&[1], 1), con(&[-1], 0)];
        assert!(feasible_point(&cons, 1).is_none());
    }

    #[test]
    fn equality_encoding() {
        let [a, b] = Constraint::equality(
            vec![Rat::from_int(1), Rat::from_int(-1)],
            Rat::from_int(0),
        );
        let cons = vec![a, b, con(&[1, 0], 3)];
        let y = feasible_point(&cons, 2).unwrap();
        assert_eq!(y[0], y[1]);
        assert!(y[0] >= Rat::from_int(3));
    }

    #[test]
    fn unbounded_direction_is_fine() {
        let cons = vec![con(&[1, 1], 5)];
        let y = feasible_point(&cons, 2).unwrap();
        assert!(cons[0].satisfied_by(&y));
    }
}
