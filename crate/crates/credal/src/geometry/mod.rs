//! Exact polytope primitives over rational coordinates: hull membership,
//! extreme-point reduction, inclusion tests, facet and vertex enumeration.

pub mod facets;
pub mod lp;

use num_traits::One;

use crate::error::{CredalError, Result};
use crate::rational::Rational;
use lp::{feasible_nonneg, Constraint, Feasibility};

pub use facets::{facet_representation, vertex_enumerate};

/// A nonempty list of rational points sharing one dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointList {
    dim: usize,
    points: Vec<Vec<Rational>>,
}

impl PointList {
    pub fn new(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        if points.is_empty() {
            return Err(CredalError::EmptyInput("point list".into()));
        }
        for p in &points {
            if p.len() != dim {
                return Err(CredalError::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
        }
        Ok(PointList { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Convex-hull membership, decided by LP feasibility over barycentric
/// weights: true iff some lambda >= 0 with sum 1 has `sum lambda_i v_i = p`.
pub fn in_hull(point: &[Rational], vertices: &PointList) -> Result<bool> {
    if point.len() != vertices.dim() {
        return Err(CredalError::DimensionMismatch {
            expected: vertices.dim(),
            got: point.len(),
        });
    }
    // Cheap exact pre-filters: coordinate bounding box and vertex identity.
    for d in 0..vertices.dim() {
        let mut lo = &vertices.points()[0][d];
        let mut hi = lo;
        for v in vertices.points() {
            if &v[d] < lo {
                lo = &v[d];
            }
            if &v[d] > hi {
                hi = &v[d];
            }
        }
        if &point[d] < lo || &point[d] > hi {
            return Ok(false);
        }
    }
    if vertices.points().iter().any(|v| v.as_slice() == point) {
        return Ok(true);
    }
    let k = vertices.len();
    let mut constraints = Vec::with_capacity(vertices.dim() + 1);
    constraints.push(Constraint::eq(vec![Rational::one(); k], Rational::one()));
    for d in 0..vertices.dim() {
        let coeffs = vertices.points().iter().map(|v| v[d].clone()).collect();
        constraints.push(Constraint::eq(coeffs, point[d].clone()));
    }
    Ok(matches!(
        feasible_nonneg(k, &constraints)?,
        Feasibility::Feasible(_)
    ))
}

/// Reduces a point list to the extreme points of its hull, in stable
/// first-occurrence order. Idempotent.
pub fn canonicalize(vertices: &PointList) -> Result<PointList> {
    // Drop exact duplicates first, keeping first occurrences.
    let mut seen: Vec<&Vec<Rational>> = Vec::new();
    let mut distinct: Vec<Vec<Rational>> = Vec::new();
    for p in vertices.points() {
        if !seen.iter().any(|q| *q == p) {
            seen.push(p);
            distinct.push(p.clone());
        }
    }
    // A point of a finite distinct set is extreme iff it is outside the hull
    // of the others; removing a non-extreme point leaves the hull unchanged,
    // so a single greedy sweep suffices.
    let mut keep = vec![true; distinct.len()];
    for i in 0..distinct.len() {
        let others: Vec<Vec<Rational>> = distinct
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i && keep[*j])
            .map(|(_, p)| p.clone())
            .collect();
        if others.is_empty() {
            break;
        }
        let others = PointList::new(vertices.dim(), others)?;
        if in_hull(&distinct[i], &others)? {
            keep[i] = false;
        }
    }
    let points: Vec<Vec<Rational>> = distinct
        .into_iter()
        .zip(&keep)
        .filter(|(_, k)| **k)
        .map(|(p, _)| p)
        .collect();
    PointList::new(vertices.dim(), points)
}

/// True iff `CH(a)` is contained in `CH(b)`.
pub fn hull_subset(a: &PointList, b: &PointList) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(CredalError::DimensionMismatch {
            expected: b.dim(),
            got: a.dim(),
        });
    }
    for p in a.points() {
        if !in_hull(p, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Hull equality as mutual inclusion; insensitive to redundant points.
pub fn hull_equal(a: &PointList, b: &PointList) -> Result<bool> {
    Ok(hull_subset(a, b)? && hull_subset(b, a)?)
}

/// First point of `a` outside `CH(b)`, if any.
pub fn first_outside(a: &PointList, b: &PointList) -> Result<Option<usize>> {
    for (i, p) in a.points().iter().enumerate() {
        if !in_hull(p, b)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn pl(points: Vec<Vec<Rational>>) -> PointList {
        let dim = points[0].len();
        PointList::new(dim, points).unwrap()
    }

    #[test]
    fn midpoint_is_inside_segment() {
        let verts = pl(vec![vec![int(1), int(0)], vec![int(0), int(1)]]);
        assert!(in_hull(&[rat(1, 2), rat(1, 2)], &verts).unwrap());
        assert!(!in_hull(&[int(2), int(0)], &verts).unwrap());
    }

    #[test]
    fn hull_membership_by_two_point_solve() {
        // lambda * (1/4,3/4) + (1-lambda) * (1/3,2/3) = (3/10,7/10)
        // First coordinate forces lambda = 2/5; checking the second:
        // (2/5)(3/4) + (3/5)(2/3) = 3/10 + 2/5 = 7/10, so the point is inside.
        let verts = pl(vec![
            vec![rat(1, 4), rat(3, 4)],
            vec![rat(1, 3), rat(2, 3)],
        ]);
        let lambda = rat(2, 5);
        let one_minus = int(1) - &lambda;
        assert_eq!(&lambda * rat(1, 4) + &one_minus * rat(1, 3), rat(3, 10));
        assert_eq!(&lambda * rat(3, 4) + &one_minus * rat(2, 3), rat(7, 10));
        assert!(in_hull(&[rat(3, 10), rat(7, 10)], &verts).unwrap());
        assert!(!in_hull(&[rat(1, 5), rat(4, 5)], &verts).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let verts = pl(vec![vec![int(0)], vec![int(1)]]);
        assert!(in_hull(&[int(0), int(0)], &verts).is_err());
    }

    #[test]
    fn canonicalize_removes_interior_and_duplicate_points() {
        let verts = pl(vec![
            vec![int(0), int(0)],
            vec![int(1), int(1)],
            vec![rat(1, 2), rat(1, 2)],
        ]);
        let canon = canonicalize(&verts).unwrap();
        assert_eq!(
            canon.points(),
            &[vec![int(0), int(0)], vec![int(1), int(1)]]
        );

        let plain = pl(vec![vec![int(1), int(0)], vec![int(0), int(1)]]);
        assert_eq!(canonicalize(&plain).unwrap(), plain);

        let dup = pl(vec![vec![int(1)], vec![int(1)]]);
        assert_eq!(canonicalize(&dup).unwrap().len(), 1);
    }

    #[test]
    fn subset_and_equality_ignore_redundancy() {
        let a = pl(vec![vec![rat(1, 2), rat(1, 2)]]);
        let b = pl(vec![vec![int(1), int(0)], vec![int(0), int(1)]]);
        assert!(hull_subset(&a, &b).unwrap());
        assert!(!hull_equal(&a, &b).unwrap());

        let b_perm = pl(vec![vec![int(0), int(1)], vec![int(1), int(0)]]);
        assert!(hull_equal(&b, &b_perm).unwrap());

        let b_padded = pl(vec![
            vec![int(1), int(0)],
            vec![int(0), int(1)],
            vec![rat(1, 3), rat(2, 3)],
        ]);
        assert!(hull_equal(&b, &b_padded).unwrap());
    }
}
