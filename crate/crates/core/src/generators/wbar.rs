use crate::exactla::Mat;
use crate::simplicial::SimplicialVS;

/// Block offsets of `W̄_k = X_{k-1} ⊕ ... ⊕ X_0`; entry `p` holds `X_{k-1-p}`.
fn offsets(s: &SimplicialVS, k: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(k + 1);
    let mut acc = 0;
    out.push(0);
    for p in 0..k {
        acc += s.dim(k - 1 - p);
        out.push(acc);
    }
    out
}

/// Additive classifying complex, levels `0..=N` for an input of top level `N`.
///
/// With `(g_{k-1}, ..., g_0) ∈ W̄_k`:
/// `d̄_0` drops `g_{k-1}`; for `0 < i < k`
/// `d̄_i = (d_{i-1} g_{k-1}, ..., d_1 g_{k-i+1}, d_0 g_{k-i} + g_{k-i-1}, g_{k-i-2}, ..., g_0)`;
/// `d̄_k = (d_{k-1} g_{k-1}, ..., d_1 g_1)`;
/// `s̄_i = (s_{i-1} g_{k-1}, ..., s_0 g_{k-i}, 0, g_{k-i-1}, ..., g_0)`.
pub fn wbar(s: &SimplicialVS) -> SimplicialVS {
    let n = s.max_level();
    let dims = (0..=n).map(|k| (0..k).map(|a| s.dim(a)).sum()).collect();
    SimplicialVS::from_fn(
        dims,
        |k, i| {
            let (src, dst) = (offsets(s, k), offsets(s, k - 1));
            let mut m = Mat::zeros(dst[k - 1], src[k]);
            for p in 0..k - 1 {
                let level = k - 2 - p;
                if i == 0 {
                    m.set_block(dst[p], src[p + 1], &Mat::identity(s.dim(level)));
                } else if p + 1 < i {
                    m.set_block(dst[p], src[p], s.face(level + 1, i - 1 - p));
                } else if p + 1 == i {
                    m.set_block(dst[p], src[p], s.face(level + 1, 0));
                    m.set_block(dst[p], src[p + 1], &Mat::identity(s.dim(level)));
                } else {
                    m.set_block(dst[p], src[p + 1], &Mat::identity(s.dim(level)));
                }
            }
            m
        },
        |k, i| {
            let (src, dst) = (offsets(s, k), offsets(s, k + 1));
            let mut m = Mat::zeros(dst[k + 1], src[k]);
            for p in 0..=k {
                let level = k - p;
                if p < i {
                    m.set_block(dst[p], src[p], s.degen(level - 1, i - 1 - p));
                } else if p > i {
                    m.set_block(dst[p], src[p - 1], &Mat::identity(s.dim(level)));
                }
            }
            m
        },
    )
    .expect("classifying complex shapes are consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::nerve_group_vs;
    use crate::simplicial::{dk_realize, moore_complex, validate, ChainComplex};

    #[test]
    fn shifts_the_moore_complex() {
        let c = ChainComplex::new(vec![1, 2], vec![Mat::from_ints(&[[1, -1]])]).unwrap();
        for s in [nerve_group_vs(1, 4), nerve_group_vs(2, 4), dk_realize(&c, 4).unwrap()] {
            let w = wbar(&s);
            assert!(validate(&w).is_empty(), "{:?}", validate(&w));
            let (mw, ms) = (moore_complex(&w).unwrap(), moore_complex(&s).unwrap());
            for k in 1..=3 {
                assert_eq!(mw.dim(k), ms.dim(k - 1));
            }
        }
    }

    #[test]
    fn zero_object_stays_zero() {
        let w = wbar(&nerve_group_vs(0, 3));
        assert!(w.dims().iter().all(|&d| d == 0));
    }
}
