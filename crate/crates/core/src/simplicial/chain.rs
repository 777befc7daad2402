use crate::error::{Error, Result};
use crate::exactla::Mat;

/// Non-negatively graded chain complex `C_0 <- C_1 <- ... <- C_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    dims: Vec<usize>,
    /// `diffs[k - 1]` is `∂_k : C_k -> C_{k-1}`.
    diffs: Vec<Mat>,
}

impl ChainComplex {
    pub fn new(dims: Vec<usize>, diffs: Vec<Mat>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::ShapeMismatch("a chain complex needs degree 0".into()));
        }
        if diffs.len() != dims.len() - 1 {
            return Err(Error::ShapeMismatch(format!(
                "{} degrees need {} differentials, found {}",
                dims.len(),
                dims.len() - 1,
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate().map(|(i, d)| (i + 1, d)) {
            if d.shape() != (dims[k - 1], dims[k]) {
                return Err(Error::ShapeMismatch(format!(
                    "∂_{k} is {:?}, expected {:?}",
                    d.shape(),
                    (dims[k - 1], dims[k])
                )));
            }
        }
        for k in 2..dims.len() {
            if !diffs[k - 2].mul(&diffs[k - 1]).is_zero() {
                return Err(Error::NotAComplex(format!("∂_{} ∂_{k} ≠ 0", k - 1)));
            }
        }
        Ok(Self { dims, diffs })
    }

    /// Complex with the given dimensions and all differentials zero.
    pub fn zero_differential(dims: Vec<usize>) -> Self {
        let diffs = (1..dims.len()).map(|k| Mat::zeros(dims[k - 1], dims[k])).collect();
        Self { dims, diffs }
    }

    /// Highest degree `n`.
    pub fn length(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, k: usize) -> usize {
        self.dims.get(k).copied().unwrap_or(0)
    }

    /// `∂_k` for `1 <= k <= n`.
    pub fn diff(&self, k: usize) -> &Mat {
        &self.diffs[k - 1]
    }

    pub fn diffs(&self) -> &[Mat] {
        &self.diffs
    }

    /// Drop trailing zero-dimensional degrees (keeping degree 0).
    pub fn trimmed(&self) -> ChainComplex {
        let mut n = self.length();
        while n > 0 && self.dims[n] == 0 {
            n -= 1;
        }
        ChainComplex { dims: self.dims[..=n].to_vec(), diffs: self.diffs[..n].to_vec() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_nonzero_square() {
        let d1 = Mat::from_ints(&[[1]]);
        let d2 = Mat::from_ints(&[[1]]);
        assert!(matches!(ChainComplex::new(vec![1, 1, 1], vec![d1, d2]), Err(Error::NotAComplex(_))));
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(ChainComplex::new(vec![1, 2], vec![Mat::zeros(2, 1)]).is_err());
        assert!(ChainComplex::new(vec![1, 2], vec![]).is_err());
    }

    #[test]
    fn trims_trailing_zeros() {
        let c = ChainComplex::zero_differential(vec![0, 2, 0, 0]);
        assert_eq!(c.trimmed().dims(), &[0, 2]);
    }
}
