use super::{kernel, rref_sparse, Mat, Rat, SparseVec, Subspace, DENSE_LIMIT};

/// Incrementally assembled homogeneous linear system `Ax = 0`.
#[derive(Clone, Debug, Default)]
pub struct SparseSystem {
    cols: usize,
    rows: Vec<SparseVec>,
}

impl SparseSystem {
    pub fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Add one equation; duplicate columns are summed and zero rows dropped.
    pub fn push_row(&mut self, mut entries: Vec<(usize, Rat)>) {
        entries.sort_by_key(|e| e.0);
        let mut row: SparseVec = Vec::with_capacity(entries.len());
        for (c, x) in entries {
            debug_assert!(c < self.cols, "column {c} out of range");
            match row.last_mut() {
                Some((lc, lx)) if *lc == c => *lx += &x,
                _ => row.push((c, x)),
            }
        }
        row.retain(|(_, x)| !x.is_zero());
        if !row.is_empty() {
            self.rows.push(row);
        }
    }

    /// Add `rows(M)` equations `Σ_t sign_t M_t x[offset_t ..] = 0`, one per
    /// row of the (equally tall) matrices.
    pub fn push_block_equations(&mut self, terms: &[(&Mat, usize, Rat)]) {
        let Some(height) = terms.first().map(|t| t.0.rows()) else {
            return;
        };
        for r in 0..height {
            let mut entries = Vec::new();
            for (m, offset, sign) in terms {
                debug_assert_eq!(m.rows(), height);
                for (c, x) in m.row(r).iter().enumerate() {
                    if !x.is_zero() {
                        entries.push((offset + c, x * sign));
                    }
                }
            }
            self.push_row(entries);
        }
    }

    pub fn to_mat(&self) -> Mat {
        let mut m = Mat::zeros(self.rows.len(), self.cols);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, x) in row {
                m.set(i, *j, x.clone());
            }
        }
        m
    }

    /// Solution space.
    pub fn kernel(self) -> Subspace {
        if self.rows.len() * self.cols <= DENSE_LIMIT {
            kernel(&self.to_mat())
        } else {
            super::kernel_sparse(self.rows, self.cols)
        }
    }

    pub fn rank(self) -> usize {
        rref_sparse(self.rows, self.cols).rank()
    }
}
