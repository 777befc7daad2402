//! Row reduction to canonical reduced echelon form.
//!
//! Two paths produce the same (unique) RREF: a fraction-free Bareiss forward
//! sweep over integers for small dense matrices, and a sparse Gauss-Jordan
//! sweep for large, mostly-zero constraint systems. Both choose pivot columns
//! left to right, so free columns and nullspace bases agree between paths.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Mat, Rat};

/// Sorted `(column, value)` pairs, no explicit zeros.
pub type SparseVec = Vec<(usize, Rat)>;

/// Above this many entries [`rref`] switches to the sparse path.
pub const DENSE_LIMIT: usize = 10_000;

/// Reduced row echelon form: `rows[t]` has a unit entry at `pivots[t]` and
/// zeros in every other pivot column. Pivots are strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub cols: usize,
    pub pivots: Vec<usize>,
    pub rows: Vec<SparseVec>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols).filter(|&c| !is_pivot[c]).collect()
    }

    /// Kernel basis: one vector per free column `f`, equal to `e_f` minus the
    /// pivot-row entries in column `f`.
    pub fn kernel_basis(&self) -> (Vec<Vec<Rat>>, Vec<usize>) {
        let free = self.free_columns();
        let mut slot = vec![usize::MAX; self.cols];
        for (s, &f) in free.iter().enumerate() {
            slot[f] = s;
        }
        let mut basis = vec![vec![Rat::ZERO; self.cols]; free.len()];
        for (s, &f) in free.iter().enumerate() {
            basis[s][f] = Rat::ONE;
        }
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            for (c, x) in row {
                if *c != p {
                    basis[slot[*c]][p] = -x;
                }
            }
        }
        (basis, free)
    }
}

/// Canonical RREF, dispatching on size.
pub fn rref(m: &Mat) -> Rref {
    if m.rows() * m.cols() <= DENSE_LIMIT {
        rref_dense(m)
    } else {
        rref_sparse(m.sparse_rows(), m.cols())
    }
}

/// Fraction-free forward elimination followed by rational back substitution.
pub fn rref_dense(m: &Mat) -> Rref {
    let (nrows, ncols) = m.shape();
    // Clear denominators row by row.
    let mut a: Vec<Vec<BigInt>> = (0..nrows)
        .map(|i| {
            let row = m.row(i);
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(&x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pv = &pivot_row[c];
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                for x in row[c + 1..].iter_mut() {
                    if !x.is_zero() {
                        *x = &*x * pv / &prev;
                    }
                }
            } else {
                let lead = std::mem::take(&mut row[c]);
                for j in c + 1..ncols {
                    let v = &row[j] * pv - &lead * &pivot_row[j];
                    row[j] = v / &prev;
                }
            }
        }
        prev = pv.clone();
        pivots.push(c);
        r += 1;
    }

    // Normalize and eliminate upwards in rationals.
    let mut rows: Vec<Vec<Rat>> = a[..pivots.len()]
        .iter()
        .zip(&pivots)
        .map(|(row, &p)| {
            let lead = row[p].clone();
            row.iter().map(|x| Rat::from_bigints(x.clone(), lead.clone())).collect()
        })
        .collect();
    for t in (0..rows.len()).rev() {
        let p = pivots[t];
        let (upper, lower) = rows.split_at_mut(t);
        let prow = &lower[0];
        for row in upper.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for j in p..ncols {
                if !prow[j].is_zero() {
                    row[j] -= &f * &prow[j];
                }
            }
        }
    }
    let rows = rows
        .into_iter()
        .map(|row| {
            row.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect::<SparseVec>()
        })
        .collect();
    Rref { cols: ncols, pivots, rows }
}

/// `target - factor * pivot`, merged in column order.
fn axpy(target: &SparseVec, factor: &Rat, pivot: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < pivot.len() {
        let ci = target.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push(target[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, -(factor * &pivot[j].1)));
            j += 1;
        } else {
            let v = &target[i].1 - &(factor * &pivot[j].1);
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn entry(row: &SparseVec, col: usize) -> Option<&Rat> {
    row.binary_search_by_key(&col, |e| e.0).ok().map(|k| &row[k].1)
}

/// Sparse Gauss-Jordan with left-to-right pivot columns. Among candidate rows
/// for a column the shortest unassigned row is chosen to limit fill-in.
pub fn rref_sparse(rows: Vec<SparseVec>, ncols: usize) -> Rref {
    let mut rows: Vec<SparseVec> = rows
        .into_iter()
        .map(|r| r.into_iter().filter(|(_, x)| !x.is_zero()).collect())
        .collect();
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); ncols];
    for (r, row) in rows.iter().enumerate() {
        for (c, _) in row {
            col_rows[*c].push(r as u32);
        }
    }
    let mut assigned = vec![false; rows.len()];
    let mut mark = vec![usize::MAX; rows.len()];
    let mut order: Vec<(usize, usize)> = Vec::new();

    for c in 0..ncols {
        let mut cand = Vec::new();
        for &r in &col_rows[c] {
            let r = r as usize;
            if mark[r] != c && entry(&rows[r], c).is_some() {
                mark[r] = c;
                cand.push(r);
            }
        }
        col_rows[c] = Vec::new();
        let Some(p) = cand
            .iter()
            .copied()
            .filter(|&r| !assigned[r])
            .min_by_key(|&r| (rows[r].len(), r))
        else {
            continue;
        };
        let inv = entry(&rows[p], c).expect("candidate holds column").recip();
        if !inv.is_one() {
            for e in rows[p].iter_mut() {
                e.1 *= &inv;
            }
        }
        let prow = std::mem::take(&mut rows[p]);
        for &r in &cand {
            if r == p {
                continue;
            }
            let f = entry(&rows[r], c).expect("candidate holds column").clone();
            rows[r] = axpy(&rows[r], &f, &prow);
            for (cc, _) in &prow {
                if *cc > c {
                    col_rows[*cc].push(r as u32);
                }
            }
        }
        rows[p] = prow;
        assigned[p] = true;
        order.push((c, p));
    }

    let pivots = order.iter().map(|&(c, _)| c).collect();
    let out_rows = order.iter().map(|&(_, r)| std::mem::take(&mut rows[r])).collect();
    Rref { cols: ncols, pivots, rows: out_rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_mat(max: usize) -> impl Strategy<Value = Mat> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(
                prop_oneof![3 => Just(0i64), 1 => -3i64..=3, 1 => -40i64..40],
                r * c,
            )
            .prop_map(move |v| {
                let rows: Vec<Vec<i64>> = v.chunks(c).map(|ch| ch.to_vec()).collect();
                Mat::from_ints(&rows)
            })
        })
    }

    #[test]
    fn bareiss_small_known() {
        let m = Mat::from_ints(&[[1, 2], [2, 4]]);
        let r = rref_dense(&m);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.rows[0], vec![(0, Rat::ONE), (1, Rat::from_int(2))]);
    }

    proptest! {
        #[test]
        fn dense_and_sparse_agree(m in arb_mat(9)) {
            let d = rref_dense(&m);
            let s = rref_sparse(m.sparse_rows(), m.cols());
            prop_assert_eq!(d, s);
        }

        #[test]
        fn kernel_vectors_are_annihilated(m in arb_mat(8)) {
            let r = rref(&m);
            let (basis, free) = r.kernel_basis();
            prop_assert_eq!(basis.len() + r.rank(), m.cols());
            prop_assert_eq!(free.len(), basis.len());
            for v in &basis {
                prop_assert!(m.mul_vec(v).iter().all(Rat::is_zero));
            }
        }
    }
}
