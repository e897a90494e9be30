//! Inequality representations and vertex enumeration for desk-scale
//! polytopes, by brute force over affinely independent point subsets.

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::error::{CredalError, Result};
use crate::rational::Rational;

use super::lp::{feasible, Constraint, Feasibility, Relation};
use super::{canonicalize, PointList};

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(mat: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, pr);
        let inv = mat[r][c].clone();
        for v in mat[r].iter_mut() {
            *v = std::mem::take(v) / &inv;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in 0..cols {
                    let delta = &f * &mat[r][j];
                    mat[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub(crate) fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : rows . x = 0}` in `cols` unknowns.
pub(crate) fn nullspace(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Rational::zero(); cols];
        v[f] = Rational::one();
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = -row[f].clone();
        }
        basis.push(v);
    }
    basis
}

/// Unique solution of `a . x = b`, or None when inconsistent or
/// underdetermined.
pub(crate) fn solve_unique(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    // Inconsistent when a pivot lands in the augmented column.
    if pivots.contains(&cols) {
        return None;
    }
    if pivots.len() < cols {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &p) in m.iter().zip(&pivots) {
        x[p] = row[cols].clone();
    }
    Some(x)
}

fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                });
            }
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Maximal linearly independent subset of `vectors`, in input order.
fn independent_subset(vectors: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for v in vectors {
        let mut trial = basis.clone();
        trial.push(v.clone());
        if rank(&trial) > basis.len() {
            basis.push(v.clone());
        }
    }
    basis
}

/// A finite inequality/equality system whose solution set is exactly the
/// convex hull of the input points. Equalities pin the affine hull; facets
/// are found by brute force over affinely independent point subsets, which
/// is adequate at desk scale.
pub fn facet_representation(points: &PointList) -> Result<Vec<Constraint>> {
    let canon = canonicalize(points)?;
    let dim = canon.dim();
    let pts = canon.points();
    let p0 = &pts[0];
    let diffs: Vec<Vec<Rational>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(p0).map(|(a, b)| a - b).collect())
        .collect();

    let mut out: Vec<Constraint> = Vec::new();
    for normal in nullspace(&diffs, dim) {
        let rhs = dot(&normal, p0);
        out.push(Constraint::eq(normal, rhs));
    }

    let basis = independent_subset(&diffs);
    let r = basis.len();
    if r == 0 {
        // Single point: the affine-hull equalities already pin it.
        return Ok(out);
    }

    // Choose r coordinate rows on which the basis matrix is invertible and
    // parametrize the affine hull through them.
    let coord_rows: Vec<Vec<Rational>> = (0..dim)
        .map(|d| basis.iter().map(|v| v[d].clone()).collect())
        .collect();
    let mut row_ids: Vec<usize> = Vec::new();
    let mut picked: Vec<Vec<Rational>> = Vec::new();
    for (d, row) in coord_rows.iter().enumerate() {
        let mut trial = picked.clone();
        trial.push(row.clone());
        if rank(&trial) > picked.len() {
            picked.push(row.clone());
            row_ids.push(d);
        }
        if picked.len() == r {
            break;
        }
    }
    let b_inv = invert(&picked).expect("picked rows form an invertible matrix");

    let to_param = |x: &[Rational]| -> Vec<Rational> {
        let shifted: Vec<Rational> = row_ids.iter().map(|&d| &x[d] - &p0[d]).collect();
        b_inv.iter().map(|row| dot(row, &shifted)).collect()
    };
    let qs: Vec<Vec<Rational>> = pts.iter().map(|p| to_param(p)).collect();

    // Every hyperplane spanned by r affinely independent points that leaves
    // all points on one side is a facet of the (full-dimensional) projection.
    let mut seen: Vec<Vec<Rational>> = Vec::new();
    let mut halfspaces: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for subset in (0..qs.len()).combinations(r) {
        let rows: Vec<Vec<Rational>> = subset
            .iter()
            .map(|&i| {
                let mut row = qs[i].clone();
                row.push(-Rational::one());
                row
            })
            .collect();
        let ns = nullspace(&rows, r + 1);
        if ns.len() != 1 {
            continue;
        }
        let mut a = ns[0][..r].to_vec();
        let mut c = ns[0][r].clone();
        let mut neg = false;
        let mut pos = false;
        for q in &qs {
            let e = dot(&a, q) - &c;
            if e.is_positive() {
                pos = true;
            } else if e.is_negative() {
                neg = true;
            }
            if pos && neg {
                break;
            }
        }
        if pos && neg {
            continue;
        }
        if pos {
            for v in a.iter_mut() {
                *v = -std::mem::take(v);
            }
            c = -c;
        }
        // Canonical scale for deduplication.
        let lead = a
            .iter()
            .find(|v| !v.is_zero())
            .expect("hyperplane normal is nonzero")
            .abs();
        for v in a.iter_mut() {
            *v = std::mem::take(v) / &lead;
        }
        c /= &lead;
        let mut key = a.clone();
        key.push(c.clone());
        if seen.contains(&key) {
            continue;
        }
        seen.push(key);
        halfspaces.push((a, c));
    }

    for (a, c) in halfspaces {
        // a . t <= c  with  t = Binv (x_I - p0_I)  pulls back to coords I.
        let folded: Vec<Rational> = (0..r)
            .map(|j| {
                (0..r)
                    .map(|i| &a[i] * &b_inv[i][j])
                    .sum()
            })
            .collect();
        let mut coeffs = vec![Rational::zero(); dim];
        let mut rhs = c;
        for (j, &d) in row_ids.iter().enumerate() {
            rhs += &folded[j] * &p0[d];
            coeffs[d] = folded[j].clone();
        }
        out.push(Constraint::le(coeffs, rhs));
    }
    Ok(out)
}

/// Exact vertex list of the polyhedron described by `constraints`.
/// Errors on unbounded regions; an empty region yields an empty list.
pub fn vertex_enumerate(dim: usize, constraints: &[Constraint]) -> Result<Vec<Vec<Rational>>> {
    for c in constraints {
        if c.coeffs.len() != dim {
            return Err(CredalError::DimensionMismatch {
                expected: dim,
                got: c.coeffs.len(),
            });
        }
    }
    match feasible(dim, constraints)? {
        Feasibility::Infeasible => return Ok(Vec::new()),
        Feasibility::Feasible(_) => {}
    }
    // Unbounded iff the recession cone contains a direction with some
    // coordinate pinned to +-1.
    let recession: Vec<Constraint> = constraints
        .iter()
        .map(|c| Constraint {
            coeffs: c.coeffs.clone(),
            relation: c.relation,
            rhs: Rational::zero(),
        })
        .collect();
    for d in 0..dim {
        for sign in [Rational::one(), -Rational::one()] {
            let mut probe = recession.clone();
            let mut unit = vec![Rational::zero(); dim];
            unit[d] = Rational::one();
            probe.push(Constraint::eq(unit, sign));
            if matches!(feasible(dim, &probe)?, Feasibility::Feasible(_)) {
                return Err(CredalError::UnboundedRegion);
            }
        }
    }

    let eqs: Vec<&Constraint> = constraints
        .iter()
        .filter(|c| c.relation == Relation::Eq)
        .collect();
    let ineqs: Vec<&Constraint> = constraints
        .iter()
        .filter(|c| c.relation != Relation::Eq)
        .collect();
    let eq_rows: Vec<Vec<Rational>> = eqs.iter().map(|c| c.coeffs.clone()).collect();
    let rank_eq = rank(&eq_rows);
    let need = dim.saturating_sub(rank_eq);

    let mut vertices: Vec<Vec<Rational>> = Vec::new();
    let push_candidate = |x: Vec<Rational>, vertices: &mut Vec<Vec<Rational>>| {
        if constraints.iter().all(|c| c.satisfied_by(&x)) && !vertices.contains(&x) {
            vertices.push(x);
        }
    };
    if need > ineqs.len() {
        return Ok(vertices);
    }
    for combo in (0..ineqs.len()).combinations(need) {
        let mut rows = eq_rows.clone();
        let mut rhs: Vec<Rational> = eqs.iter().map(|c| c.rhs.clone()).collect();
        for &i in &combo {
            rows.push(ineqs[i].coeffs.clone());
            rhs.push(ineqs[i].rhs.clone());
        }
        if let Some(x) = solve_unique(&rows, &rhs) {
            push_candidate(x, &mut vertices);
        }
    }
    Ok(vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn pl(points: Vec<Vec<Rational>>) -> PointList {
        let dim = points[0].len();
        PointList::new(dim, points).unwrap()
    }

    fn sorted(mut pts: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
        pts.sort();
        pts
    }

    #[test]
    fn unit_interval_facets() {
        let cons = facet_representation(&pl(vec![vec![int(0)], vec![int(1)]])).unwrap();
        // No equalities, two halfspaces bounding [0, 1].
        assert!(cons.iter().all(|c| c.relation == Relation::Le));
        assert_eq!(cons.len(), 2);
        for x in [int(0), rat(1, 2), int(1)] {
            assert!(cons.iter().all(|c| c.satisfied_by(&[x.clone()])));
        }
        assert!(cons.iter().any(|c| !c.satisfied_by(&[rat(3, 2)])));
        assert!(cons.iter().any(|c| !c.satisfied_by(&[rat(-1, 2)])));
    }

    #[test]
    fn one_simplex_has_an_equality_and_two_facets() {
        let cons =
            facet_representation(&pl(vec![vec![int(1), int(0)], vec![int(0), int(1)]])).unwrap();
        let eqs = cons.iter().filter(|c| c.relation == Relation::Eq).count();
        let les = cons.iter().filter(|c| c.relation == Relation::Le).count();
        assert_eq!((eqs, les), (1, 2));
        assert!(cons
            .iter()
            .all(|c| c.satisfied_by(&[rat(1, 2), rat(1, 2)])));
        assert!(cons
            .iter()
            .any(|c| !c.satisfied_by(&[rat(1, 2), rat(1, 4)])));
    }

    #[test]
    fn square_has_four_facets() {
        let square = pl(vec![
            vec![int(0), int(0)],
            vec![int(1), int(0)],
            vec![int(0), int(1)],
            vec![int(1), int(1)],
        ]);
        let cons = facet_representation(&square).unwrap();
        assert_eq!(cons.len(), 4);
        assert!(cons.iter().all(|c| c.relation == Relation::Le));
    }

    #[test]
    fn degenerate_single_point_pins_with_equalities() {
        let cons = facet_representation(&pl(vec![
            vec![rat(1, 3), rat(2, 3)],
            vec![rat(1, 3), rat(2, 3)],
        ]))
        .unwrap();
        assert!(cons.iter().all(|c| c.relation == Relation::Eq));
        assert!(cons.iter().all(|c| c.satisfied_by(&[rat(1, 3), rat(2, 3)])));
        assert!(cons.iter().any(|c| !c.satisfied_by(&[rat(1, 3), rat(1, 2)])));
    }

    #[test]
    fn interval_vertices() {
        let cons = vec![
            Constraint::ge(vec![int(1)], int(0)),
            Constraint::le(vec![int(1)], int(1)),
        ];
        let verts = vertex_enumerate(1, &cons).unwrap();
        assert_eq!(sorted(verts), vec![vec![int(0)], vec![int(1)]]);
    }

    #[test]
    fn triangle_vertices() {
        let cons = vec![
            Constraint::ge(vec![int(1), int(0)], int(0)),
            Constraint::ge(vec![int(0), int(1)], int(0)),
            Constraint::le(vec![int(1), int(1)], int(1)),
        ];
        let verts = vertex_enumerate(2, &cons).unwrap();
        assert_eq!(verts.len(), 3);
        assert!(verts.contains(&vec![int(0), int(0)]));
        assert!(verts.contains(&vec![int(1), int(0)]));
        assert!(verts.contains(&vec![int(0), int(1)]));
    }

    #[test]
    fn capped_probability_simplex_vertices() {
        // 2-simplex intersected with x <= 1/3. Enumerating active pairs by
        // hand: x = 1/3 meets y = 0 at (1/3, 0, 2/3) and z = 0 at
        // (1/3, 2/3, 0); the untouched simplex corners with x = 0 remain.
        let cons = vec![
            Constraint::ge(vec![int(1), int(0), int(0)], int(0)),
            Constraint::ge(vec![int(0), int(1), int(0)], int(0)),
            Constraint::ge(vec![int(0), int(0), int(1)], int(0)),
            Constraint::eq(vec![int(1), int(1), int(1)], int(1)),
            Constraint::le(vec![int(1), int(0), int(0)], rat(1, 3)),
        ];
        let verts = vertex_enumerate(3, &cons).unwrap();
        let expect = sorted(vec![
            vec![rat(1, 3), rat(2, 3), int(0)],
            vec![rat(1, 3), int(0), rat(2, 3)],
            vec![int(0), int(1), int(0)],
            vec![int(0), int(0), int(1)],
        ]);
        assert_eq!(sorted(verts), expect);
    }

    #[test]
    fn unbounded_region_errors_and_empty_region_is_empty() {
        let unbounded = vec![Constraint::ge(vec![int(1)], int(0))];
        assert_eq!(
            vertex_enumerate(1, &unbounded),
            Err(CredalError::UnboundedRegion)
        );
        let empty = vec![
            Constraint::ge(vec![int(1)], int(1)),
            Constraint::le(vec![int(1)], int(0)),
        ];
        assert_eq!(vertex_enumerate(1, &empty).unwrap(), Vec::<Vec<Rational>>::new());
    }

    #[test]
    fn facets_and_vertices_roundtrip() {
        let original = pl(vec![
            vec![int(0), int(0)],
            vec![int(1), int(0)],
            vec![rat(1, 2), int(1)],
        ]);
        let cons = facet_representation(&original).unwrap();
        let verts = vertex_enumerate(2, &cons).unwrap();
        let back = PointList::new(2, verts).unwrap();
        assert!(super::super::hull_equal(&original, &back).unwrap());
    }
}
