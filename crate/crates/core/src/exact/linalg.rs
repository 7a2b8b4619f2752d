//! Dense linear algebra over a [`Scalar`] field: row reduction, nullspaces,
//! solving and rank.

use super::Scalar;

/// Reduced row echelon form in place. Returns the pivot columns.
pub fn rref<S: Scalar>(m: &mut [Vec<S>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().unwrap();
        for c in col..ncols {
            m[row][c] = m[row][c].mul_ref(&inv);
        }
        for r in 0..m.len() {
            if r == row || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in col..ncols {
                let sub = f.mul_ref(&m[row][c]);
                m[r][c] = m[r][c].sub_ref(&sub);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Basis of `{v : m v = 0}`. The field context is taken from the first entry
/// of the matrix, so callers with an empty matrix should use [`nullspace_with`].
pub fn nullspace<S: Scalar>(m: &[Vec<S>], ncols: usize) -> Vec<Vec<S>> {
    let one = m
        .iter()
        .flat_map(|r| r.iter())
        .next()
        .map(|s| s.one_like())
        .expect("nullspace of an empty matrix needs a field context");
    nullspace_with(m, ncols, &one)
}

pub fn nullspace_with<S: Scalar>(m: &[Vec<S>], ncols: usize, one: &S) -> Vec<Vec<S>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a, ncols);
    let zero = one.zero_like();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero.clone(); ncols];
        v[free] = one.clone();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = a[i][free].neg_ref();
        }
        basis.push(v);
    }
    basis
}

pub fn rank<S: Scalar>(m: &[Vec<S>], ncols: usize) -> usize {
    let mut a = m.to_vec();
    rref(&mut a, ncols).len()
}

/// One solution of `m x = b`, if the system is consistent.
pub fn solve<S: Scalar>(m: &[Vec<S>], b: &[S], ncols: usize) -> Option<Vec<S>> {
    let zero = b.first()?.zero_like();
    let mut a: Vec<Vec<S>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut a, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![zero; ncols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = a[i][ncols].clone();
    }
    Some(x)
}

/// Determinant by Gaussian elimination.
pub fn determinant<S: Scalar>(m: &[Vec<S>], one: &S) -> S {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = one.clone();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return one.zero_like();
        };
        if p != col {
            a.swap(p, col);
            det = det.neg_ref();
        }
        det = det.mul_ref(&a[col][col]);
        let inv = a[col][col].inv().unwrap();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].mul_ref(&inv);
            for c in col..n {
                let sub = f.mul_ref(&a[col][c]);
                a[r][c] = a[r][c].sub_ref(&sub);
            }
        }
    }
    det
}

/// Row space basis (reduced) of the given vectors.
pub fn row_basis<S: Scalar>(rows: &[Vec<S>], ncols: usize) -> Vec<Vec<S>> {
    let mut a = rows.to_vec();
    let k = rref(&mut a, ncols).len();
    a.truncate(k);
    a
}

/// Basis of the intersection of two row spaces in `S^ncols`.
pub fn intersect_spans<S: Scalar>(u: &[Vec<S>], v: &[Vec<S>], ncols: usize, one: &S) -> Vec<Vec<S>> {
    let u = row_basis(u, ncols);
    let v = row_basis(v, ncols);
    if u.is_empty() || v.is_empty() {
        return Vec::new();
    }
    // x in both spans: sum a_i u_i - sum b_j v_j = 0
    let k = u.len() + v.len();
    let m: Vec<Vec<S>> = (0..ncols)
        .map(|c| {
            u.iter()
                .map(|r| r[c].clone())
                .chain(v.iter().map(|r| r[c].neg_ref()))
                .collect()
        })
        .collect();
    let ns = nullspace_with(&m, k, one);
    let zero = one.zero_like();
    let combos: Vec<Vec<S>> = ns
        .iter()
        .map(|coef| {
            let mut x = vec![zero.clone(); ncols];
            for (a, r) in coef.iter().zip(&u) {
                for c in 0..ncols {
                    x[c] = x[c].add_ref(&a.mul_ref(&r[c]));
                }
            }
            x
        })
        .collect();
    row_basis(&combos, ncols)
}

/// Whether `x` lies in the row span of `rows`.
pub fn in_span<S: Scalar>(rows: &[Vec<S>], x: &[S], ncols: usize) -> bool {
    let r = rank(rows, ncols);
    let mut ext = rows.to_vec();
    ext.push(x.to_vec());
    rank(&ext, ncols) == r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, one, Rational};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn nullspace_and_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(rank(&a, 3), 1);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let dot: Rational = a[0].iter().zip(&v).map(|(x, y)| x * y).sum();
            assert_eq!(dot, int(0));
        }
    }

    #[test]
    fn determinant_and_solve() {
        let a = m(&[&[2, 1], &[1, 3]]);
        assert_eq!(determinant(&a, &one()), int(5));
        let x = solve(&a, &[int(3), int(4)], 2).unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
        assert!(solve(&m(&[&[1, 1], &[1, 1]]), &[int(1), int(2)], 2).is_none());
    }

    #[test]
    fn span_intersection() {
        let u = m(&[&[1, 0, 0], &[0, 1, 0]]);
        let v = m(&[&[0, 1, 0], &[0, 0, 1]]);
        let w = intersect_spans(&u, &v, 3, &one());
        assert_eq!(w, m(&[&[0, 1, 0]]));
        assert!(in_span(&u, &[int(3), int(-1), int(0)], 3));
        assert!(!in_span(&u, &[int(0), int(0), int(1)], 3));
    }
}
