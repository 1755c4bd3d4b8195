//! Linear systems over `ZG`, solved exactly through integer linear algebra.

use num_bigint::BigInt;

use super::{integer_vector, ring_vector};
use crate::error::{Error, Result};
use crate::lattice::IntMatrix;
use crate::ring::{same_group, GroupRingMatrix};

/// Some `X` with `A·X = B`, or `None` if no such matrix over `ZG` exists.
///
/// Columns of `X` are independent: each is an integer solve against the integerized `A`.
pub fn solve_right(a: &GroupRingMatrix, b: &GroupRingMatrix) -> Result<Option<GroupRingMatrix>> {
    if !same_group(a.group(), b.group()) {
        return Err(Error::GroupMismatch);
    }
    if a.rows() != b.rows() {
        return Err(Error::shape(format!(
            "A has {} rows but B has {}",
            a.rows(),
            b.rows()
        )));
    }
    let g = a.group();
    let system = a.integerize();
    let rhs: Vec<Vec<BigInt>> = (0..b.cols())
        .map(|l| {
            let col: Vec<_> = (0..b.rows()).map(|i| b.get(i, l)).collect();
            if col.is_empty() {
                Vec::new()
            } else {
                integer_vector(&col)
            }
        })
        .collect();
    let mut x = GroupRingMatrix::zero(g, a.cols(), b.cols());
    if a.cols() == 0 {
        return Ok(if b.is_zero() { Some(x) } else { None });
    }
    if a.rows() == 0 {
        return Ok(Some(x));
    }
    for (l, sol) in system.solve_many(&rhs).into_iter().enumerate() {
        let Some(sol) = sol else { return Ok(None) };
        for (j, e) in ring_vector(g, &sol).into_iter().enumerate() {
            x.set(j, l, e);
        }
    }
    Ok(Some(x))
}

/// Some `X` with `X·A = B`, or `None` if no such matrix over `ZG` exists.
///
/// Rows of `X` are independent; for a row `x`, `(x A)_k = Σ_j A_jk · x_j`, and the
/// coefficient of `h` in `A_jk · g` is `A_jk[h g⁻¹]`.
pub fn solve_left(a: &GroupRingMatrix, b: &GroupRingMatrix) -> Result<Option<GroupRingMatrix>> {
    if !same_group(a.group(), b.group()) {
        return Err(Error::GroupMismatch);
    }
    if a.cols() != b.cols() {
        return Err(Error::shape(format!(
            "A has {} columns but B has {}",
            a.cols(),
            b.cols()
        )));
    }
    let g = a.group();
    let mut x = GroupRingMatrix::zero(g, b.rows(), a.rows());
    if a.rows() == 0 {
        return Ok(if b.is_zero() { Some(x) } else { None });
    }
    if a.cols() == 0 {
        return Ok(Some(x));
    }
    let system = left_system(a);
    let rhs: Vec<Vec<BigInt>> = (0..b.rows())
        .map(|i| {
            let row: Vec<_> = (0..b.cols()).map(|k| b.get(i, k)).collect();
            integer_vector(&row)
        })
        .collect();
    for (i, sol) in system.solve_many(&rhs).into_iter().enumerate() {
        let Some(sol) = sol else { return Ok(None) };
        for (j, e) in ring_vector(g, &sol).into_iter().enumerate() {
            x.set(i, j, e);
        }
    }
    Ok(Some(x))
}

/// The integer matrix of `x ↦ x·A` on integerized row vectors.
pub(crate) fn left_system(a: &GroupRingMatrix) -> IntMatrix {
    let g = a.group();
    let n = g.order();
    let mut triplets = Vec::new();
    for (j, k, e) in a.entries() {
        for (t, c) in e.terms() {
            for h in 0..n {
                triplets.push((k * n + g.mul(t, h), j * n + h, c.clone()));
            }
        }
    }
    IntMatrix::from_triplets(a.cols() * n, a.rows() * n, triplets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_group, GroupFamily};
    use crate::ring::GroupRingElement;
    use std::sync::Arc;

    #[test]
    fn left_and_right_inverses_over_s3() {
        let g = Arc::new(make_group(GroupFamily::Dihedral(3)).unwrap());
        // an invertible upper unitriangular matrix with non-central entries
        let mut a = GroupRingMatrix::identity(&g, 2);
        a.set(0, 1, GroupRingElement::parse(&g, "g1 + 2*g4").unwrap());
        let i = GroupRingMatrix::identity(&g, 2);
        let r = solve_right(&a, &i).unwrap().unwrap();
        assert_eq!(a.mul(&r).unwrap(), i);
        let l = solve_left(&a, &i).unwrap().unwrap();
        assert_eq!(l.mul(&a).unwrap(), i);
    }

    #[test]
    fn unsolvable_systems() {
        let g = Arc::new(make_group(GroupFamily::Cyclic(2)).unwrap());
        let two = GroupRingMatrix::from_ints(&g, 1, 1, &[2]);
        let one = GroupRingMatrix::identity(&g, 1);
        assert!(solve_left(&two, &one).unwrap().is_none());
        assert!(solve_right(&two, &one).unwrap().is_none());
    }

    #[test]
    fn right_solve_with_noncommuting_entries() {
        let g = Arc::new(make_group(GroupFamily::Tetrahedral).unwrap());
        let mut a = GroupRingMatrix::zero(&g, 2, 3);
        a.set(0, 0, GroupRingElement::parse(&g, "g1 - g0").unwrap());
        a.set(1, 1, GroupRingElement::parse(&g, "g2").unwrap());
        a.set(0, 2, GroupRingElement::parse(&g, "g3 + g5").unwrap());
        let mut x0 = GroupRingMatrix::zero(&g, 3, 2);
        x0.set(0, 0, GroupRingElement::parse(&g, "g7 - 3*g2").unwrap());
        x0.set(2, 1, GroupRingElement::parse(&g, "g4").unwrap());
        x0.set(1, 1, GroupRingElement::parse(&g, "g9").unwrap());
        let b = a.mul(&x0).unwrap();
        let x = solve_right(&a, &b).unwrap().unwrap();
        assert_eq!(a.mul(&x).unwrap(), b);
        let c = x0.mul(&a).unwrap();
        let y = solve_left(&a, &c).unwrap().unwrap();
        assert_eq!(y.mul(&a).unwrap(), c);
    }
}
