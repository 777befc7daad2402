//! Exact rational linear algebra: the substrate for every kernel, rank and
//! limit computed in this crate.

mod elim;
mod matrix;
mod rational;
mod system;

pub use elim::{rref, rref_dense, rref_sparse, Rref, SparseVec, DENSE_LIMIT};
pub use matrix::Mat;
pub use rational::Rat;
pub use system::SparseSystem;

use crate::error::{Error, Result};

pub fn rank(a: &Mat) -> usize {
    rref(a).rank()
}

/// Rational basis of `{x : Ax = 0}` in reduced-echelon-derived form.
pub fn nullspace(a: &Mat) -> Vec<Vec<Rat>> {
    rref(a).kernel_basis().0
}

/// Kernel of `a` as a [`Subspace`].
pub fn kernel(a: &Mat) -> Subspace {
    let (basis, free) = rref(a).kernel_basis();
    Subspace { ambient: a.cols(), basis, selectors: free }
}

/// Kernel of a system given directly as sparse rows.
pub fn kernel_sparse(rows: Vec<SparseVec>, cols: usize) -> Subspace {
    let (basis, free) = rref_sparse(rows, cols).kernel_basis();
    Subspace { ambient: cols, basis, selectors: free }
}

/// The unique `x` with `Ax = b`.
///
/// `Ok(None)` when the system is inconsistent, `Err(Underdetermined)` when it
/// is consistent but has free variables.
pub fn solve_unique(a: &Mat, b: &[Rat]) -> Result<Option<Vec<Rat>>> {
    if b.len() != a.rows() {
        return Err(Error::ShapeMismatch(format!(
            "right-hand side has length {}, matrix has {} rows",
            b.len(),
            a.rows()
        )));
    }
    let mut rows = a.sparse_rows();
    for (row, x) in rows.iter_mut().zip(b) {
        if !x.is_zero() {
            row.push((a.cols(), x.clone()));
        }
    }
    let r = if a.rows() * (a.cols() + 1) <= DENSE_LIMIT {
        let mut aug = Mat::zeros(a.rows(), a.cols() + 1);
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row {
                aug.set(i, *j, x.clone());
            }
        }
        rref_dense(&aug)
    } else {
        rref_sparse(rows, a.cols() + 1)
    };
    solution_from_rref(&r, a.cols())
}

/// Same as [`solve_unique`] for a system supplied as sparse rows over
/// `cols` unknowns, with the right-hand side in column `cols`.
pub fn solve_unique_sparse(augmented: Vec<SparseVec>, cols: usize) -> Result<Option<Vec<Rat>>> {
    let r = rref_sparse(augmented, cols + 1);
    solution_from_rref(&r, cols)
}

fn solution_from_rref(r: &Rref, cols: usize) -> Result<Option<Vec<Rat>>> {
    if r.pivots.last() == Some(&cols) {
        return Ok(None);
    }
    if r.rank() < cols {
        return Err(Error::Underdetermined { free: cols - r.rank() });
    }
    let mut x = vec![Rat::ZERO; cols];
    for (row, &p) in r.rows.iter().zip(&r.pivots) {
        if let Some((_, v)) = row.iter().find(|(c, _)| *c == cols) {
            x[p] = v.clone();
        }
    }
    Ok(Some(x))
}

/// A subspace of `Q^ambient` with a basis that is the identity on a set of
/// selector coordinates, so coordinates of a member are read off directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rat>>,
    selectors: Vec<usize>,
}

impl Subspace {
    /// Canonical reduced basis of the span of `vectors`.
    pub fn span(vectors: &[Vec<Rat>], ambient: usize) -> Subspace {
        let rows = vectors
            .iter()
            .map(|v| {
                assert_eq!(v.len(), ambient, "vector length mismatch");
                v.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(j, x)| (j, x.clone()))
                    .collect()
            })
            .collect();
        let r = rref_sparse(rows, ambient);
        let basis = r
            .rows
            .iter()
            .map(|row| {
                let mut v = vec![Rat::ZERO; ambient];
                for (j, x) in row {
                    v[*j] = x.clone();
                }
                v
            })
            .collect();
        Subspace { ambient, basis, selectors: r.pivots }
    }

    pub fn whole(ambient: usize) -> Subspace {
        let basis = Mat::identity(ambient).columns();
        Subspace { ambient, basis, selectors: (0..ambient).collect() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn basis_matrix(&self) -> Mat {
        Mat::from_columns(&self.basis, self.ambient)
    }

    /// Coordinates of `v` in the basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let c: Vec<Rat> = self.selectors.iter().map(|&s| v[s].clone()).collect();
        let mut back = vec![Rat::ZERO; self.ambient];
        for (x, b) in c.iter().zip(&self.basis) {
            if x.is_zero() {
                continue;
            }
            for (y, bj) in back.iter_mut().zip(b) {
                if !bj.is_zero() {
                    *y += x * bj;
                }
            }
        }
        (back == v).then_some(c)
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Equality as subspaces, independent of how the bases were produced.
    pub fn same_space(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && self.dim() == other.dim()
            && other.basis.iter().all(|v| self.contains(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| Rat::from_int(x)).collect()
    }

    #[test]
    fn nullspace_examples() {
        assert!(nullspace(&Mat::identity(2)).is_empty());
        let n = nullspace(&Mat::from_ints(&[[1, 1]]));
        assert_eq!(n, vec![ints(&[-1, 1])]);
        assert_eq!(nullspace(&Mat::zeros(3, 4)).len(), 4);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Mat::identity(5)), 5);
        assert_eq!(rank(&Mat::zeros(3, 2)), 0);
        assert_eq!(rank(&Mat::from_ints(&[[1, 2], [2, 4]])), 1);
    }

    #[test]
    fn solve_unique_examples() {
        let b = ints(&[3, -4, 7]);
        assert_eq!(solve_unique(&Mat::identity(3), &b).unwrap(), Some(b.clone()));
        let a = Mat::from_ints(&[[1], [1]]);
        assert_eq!(solve_unique(&a, &ints(&[1, 2])).unwrap(), None);
        let a = Mat::from_ints(&[[1, 0]]);
        assert_eq!(solve_unique(&a, &ints(&[1])), Err(Error::Underdetermined { free: 1 }));
        assert!(solve_unique(&a, &ints(&[1, 2])).is_err());
    }

    #[test]
    fn large_system_uses_sparse_path_consistently() {
        // 120 x 120 bidiagonal system, above the dense limit.
        let n = 120;
        let mut a = Mat::zeros(n, n);
        for i in 0..n {
            a.set(i, i, Rat::from_int(2));
            if i + 1 < n {
                a.set(i, i + 1, Rat::from_int(-1));
            }
        }
        let b: Vec<Rat> = (0..n).map(|i| Rat::from_int(i as i64 % 5)).collect();
        let x = solve_unique(&a, &b).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x), b);
    }

    #[test]
    fn subspace_coordinates() {
        let k = kernel(&Mat::from_ints(&[[1, 1, 0]]));
        assert_eq!(k.dim(), 2);
        let v = ints(&[2, -2, 5]);
        let c = k.coordinates(&v).unwrap();
        assert_eq!(k.basis_matrix().mul_vec(&c), v);
        assert!(!k.contains(&ints(&[1, 0, 0])));
        let s = Subspace::span(&[ints(&[-1, 1, 0]), ints(&[0, 0, 3])], 3);
        assert!(s.same_space(&k));
        assert_ne!(s, k);
    }
}
