use crate::error::{Error, Result};
use crate::exactla::{kernel, Subspace};
use crate::simplicial::{horn_space, normalize, restrict_d0, ChainComplex, SimplicialVS};

/// `ker p^k_0 ⊆ X_k` for `k ≥ 1`, and `X_0` in degree 0.
pub fn tangent_spaces(s: &SimplicialVS) -> Result<Vec<Subspace>> {
    (0..=s.max_level())
        .map(|k| {
            if k == 0 {
                Ok(Subspace::whole(s.dim(0)))
            } else {
                Ok(kernel(&horn_space(s, k, 0)?.projection))
            }
        })
        .collect()
}

/// `C_k = ker p^k_0` with differential the restriction of `d_0`.
///
/// Agrees with the Moore complex in every degree; a mismatch is reported as
/// an internal error.
pub fn tangent_complex(s: &SimplicialVS) -> Result<ChainComplex> {
    let spaces = tangent_spaces(s)?;
    let complex = restrict_d0(s, &spaces)?;
    let moore = normalize(s)?;
    if moore.spaces != spaces || moore.complex != complex {
        return Err(Error::Internal("tangent complex differs from the Moore complex".into()));
    }
    Ok(complex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{nerve_group_vs, nerve_pair_groupoid};
    use crate::simplicial::dk_realize;

    #[test]
    fn lie_group_gives_its_algebra() {
        let c = tangent_complex(&nerve_group_vs(2, 4)).unwrap();
        assert_eq!(c.dims(), &[0, 2, 0, 0, 0]);
    }

    #[test]
    fn realized_complexes() {
        let c = dk_realize(&ChainComplex::zero_differential(vec![0, 2, 1]), 4).unwrap();
        assert_eq!(tangent_complex(&c).unwrap().trimmed().dims(), &[0, 2, 1]);
        let c = dk_realize(&ChainComplex::zero_differential(vec![0, 1, 1, 1]), 5).unwrap();
        assert_eq!(tangent_complex(&c).unwrap().trimmed().dims(), &[0, 1, 1, 1]);
    }

    #[test]
    fn pair_groupoid_degree_one() {
        let c = tangent_complex(&nerve_pair_groupoid(3, 3)).unwrap();
        assert_eq!(c.dim(1), 3);
    }
}
