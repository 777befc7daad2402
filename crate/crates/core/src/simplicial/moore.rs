use super::horn::stacked_faces;
use super::{ChainComplex, SimplicialVS};
use crate::error::{Error, Result};
use crate::exactla::{kernel, Mat, Subspace};

/// Normalized complex with the subspaces it was cut out of.
#[derive(Clone, Debug)]
pub struct Normalized {
    pub complex: ChainComplex,
    /// `N_k ⊆ X_k`.
    pub spaces: Vec<Subspace>,
}

/// `N_k = ∩_{i=1}^k ker d^k_i` with differential `d^k_0`, together with the
/// subspaces `N_k ⊆ X_k` in kernel-basis form.
pub fn normalize(s: &SimplicialVS) -> Result<Normalized> {
    let spaces: Vec<Subspace> = (0..=s.max_level())
        .map(|k| {
            if k == 0 {
                Subspace::whole(s.dim(0))
            } else {
                let faces: Vec<usize> = (1..=k).collect();
                kernel(&stacked_faces(s, k, &faces))
            }
        })
        .collect();
    let complex = restrict_d0(s, &spaces)?;
    Ok(Normalized { complex, spaces })
}

/// Restrict `d_0` to a graded family of subspaces, in their bases.
pub(crate) fn restrict_d0(s: &SimplicialVS, spaces: &[Subspace]) -> Result<ChainComplex> {
    let mut diffs = Vec::new();
    for k in 1..spaces.len() {
        let mut d = Mat::zeros(spaces[k - 1].dim(), spaces[k].dim());
        for (c, v) in spaces[k].basis().iter().enumerate() {
            let image = s.face(k, 0).mul_vec(v);
            let coords = spaces[k - 1].coordinates(&image).ok_or_else(|| {
                Error::NotSimplicial(format!("d_0 does not preserve the normalized part at {k}"))
            })?;
            for (r, x) in coords.into_iter().enumerate() {
                d.set(r, c, x);
            }
        }
        diffs.push(d);
    }
    let dims = spaces.iter().map(Subspace::dim).collect();
    ChainComplex::new(dims, diffs)
}

pub fn moore_complex(s: &SimplicialVS) -> Result<ChainComplex> {
    Ok(normalize(s)?.complex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rat;
    use crate::generators::nerve_group_vs;

    #[test]
    fn nerve_concentrates_in_degree_one() {
        let m = moore_complex(&nerve_group_vs(2, 4)).unwrap();
        assert_eq!(m.dims(), &[0, 2, 0, 0, 0]);
    }

    #[test]
    fn spaces_are_the_face_kernels() {
        let s = nerve_group_vs(1, 3);
        let n = normalize(&s).unwrap();
        for k in 1..=3 {
            for v in n.spaces[k].basis() {
                assert!((1..=k).all(|i| s.face(k, i).mul_vec(v).iter().all(Rat::is_zero)));
            }
        }
    }
}
