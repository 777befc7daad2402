use rayon::prelude::*;
use serde::Serialize;

use super::SimplicialVS;
use crate::error::{Error, Result};
use crate::exactla::{rank, Mat, Rat, SparseSystem, Subspace};

/// `Hom(Λ[l, j], X)` inside `⊕_{i≠j} X_{l-1}` together with the horn
/// projection `p^l_j : X_l -> Hom(Λ[l, j], X)` written in the space's basis.
///
/// Ambient coordinates are ordered by face index, then by coordinate.
#[derive(Clone, Debug)]
pub struct HornSpace {
    pub level: usize,
    pub missing: usize,
    pub faces: Vec<usize>,
    pub space: Subspace,
    /// `dim(space) x dim X_l`.
    pub projection: Mat,
}

impl HornSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// Stacked face maps `[d_i]_{i ∈ faces}` as one matrix `X_l -> ⊕ X_{l-1}`.
pub(crate) fn stacked_faces(s: &SimplicialVS, level: usize, faces: &[usize]) -> Mat {
    let blocks: Vec<&Mat> = faces.iter().map(|&i| s.face(level, i)).collect();
    Mat::vstack(&blocks, s.dim(level))
}

pub fn horn_space(s: &SimplicialVS, level: usize, missing: usize) -> Result<HornSpace> {
    if level < 1 || level > s.max_level() || missing > level {
        return Err(Error::OutOfRange(format!(
            "horn Λ[{level},{missing}] outside levels 1..={}",
            s.max_level()
        )));
    }
    let faces: Vec<usize> = (0..=level).filter(|&i| i != missing).collect();
    let block = s.dim(level - 1);
    let offset = |pos: usize| pos * block;

    let mut system = SparseSystem::new(faces.len() * block);
    if level >= 2 {
        let one = Rat::ONE;
        let minus = -Rat::ONE;
        for (pa, &a) in faces.iter().enumerate() {
            for (pb, &b) in faces.iter().enumerate().skip(pa + 1) {
                // d_a y_b = d_{b-1} y_a
                system.push_block_equations(&[
                    (s.face(level - 1, a), offset(pb), one.clone()),
                    (s.face(level - 1, b - 1), offset(pa), minus.clone()),
                ]);
            }
        }
    }
    let space = system.kernel();

    let stacked = stacked_faces(s, level, &faces);
    let mut projection = Mat::zeros(space.dim(), s.dim(level));
    for c in 0..s.dim(level) {
        let image = stacked.column(c);
        let coords = space.coordinates(&image).ok_or_else(|| {
            Error::NotSimplicial(format!(
                "faces of basis vector {c} of X_{level} do not match along Λ[{level},{missing}]"
            ))
        })?;
        for (r, x) in coords.into_iter().enumerate() {
            projection.set(r, c, x);
        }
    }
    Ok(HornSpace { level, missing, faces, space, projection })
}

#[derive(Clone, Debug, Serialize)]
pub struct HornCheck {
    pub level: usize,
    pub missing: usize,
    pub horn_dim: usize,
    pub simplex_dim: usize,
    pub rank: usize,
    pub surjective: bool,
    pub injective: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct KanReport {
    pub degree: usize,
    pub max_level: usize,
    pub checks: Vec<HornCheck>,
    /// All horn projections surjective, and bijective above `degree`.
    pub verdict: bool,
}

impl KanReport {
    pub fn failures(&self) -> impl Iterator<Item = &HornCheck> {
        self.checks
            .iter()
            .filter(|c| !c.surjective || (c.level > self.degree && !c.injective))
    }
}

/// Kan conditions of a linear Lie `degree`-groupoid, checked up to the top level.
pub fn kan_report(s: &SimplicialVS, degree: usize) -> Result<KanReport> {
    let pairs: Vec<(usize, usize)> =
        (1..=s.max_level()).flat_map(|l| (0..=l).map(move |j| (l, j))).collect();
    let checks = pairs
        .par_iter()
        .map(|&(l, j)| {
            let h = horn_space(s, l, j)?;
            let r = rank(&h.projection);
            Ok(HornCheck {
                level: l,
                missing: j,
                horn_dim: h.dim(),
                simplex_dim: s.dim(l),
                rank: r,
                surjective: r == h.dim(),
                injective: r == s.dim(l),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = KanReport { degree, max_level: s.max_level(), checks, verdict: true };
    let ok = report.failures().next().is_none();
    report.verdict = ok;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::nullspace;
    use crate::generators::nerve_group_vs;
    use crate::simplicial::{dk_realize, moore_complex, ChainComplex};

    #[test]
    fn nerve_two_horn() {
        let h = horn_space(&nerve_group_vs(1, 3), 2, 0).unwrap();
        assert_eq!(h.dim(), 2);
        assert_eq!(h.faces, vec![1, 2]);
    }

    #[test]
    fn one_horns_are_level_zero() {
        let s = dk_realize(&ChainComplex::zero_differential(vec![2, 1]), 3).unwrap();
        for j in 0..=1 {
            assert_eq!(horn_space(&s, 1, j).unwrap().dim(), 2);
        }
    }

    #[test]
    fn kernel_of_projection_is_moore() {
        let s = dk_realize(&ChainComplex::zero_differential(vec![0, 1, 1]), 4).unwrap();
        let h = horn_space(&s, 2, 0).unwrap();
        assert_eq!(nullspace(&h.projection).len(), 1);
        assert_eq!(moore_complex(&s).unwrap().dim(2), 1);
    }

    #[test]
    fn out_of_range() {
        let s = nerve_group_vs(1, 2);
        assert!(horn_space(&s, 3, 0).is_err());
        assert!(horn_space(&s, 2, 3).is_err());
        assert!(horn_space(&s, 0, 0).is_err());
    }

    #[test]
    fn kan_verdicts() {
        let s = SimplicialVS::new(vec![2], vec![vec![]], vec![]).unwrap();
        assert!(kan_report(&s, 0).unwrap().verdict);
        let s = dk_realize(&ChainComplex::zero_differential(vec![1, 2, 1]), 4).unwrap();
        let r = kan_report(&s, 2).unwrap();
        assert!(r.verdict);
        assert!(!kan_report(&s, 1).unwrap().verdict);
    }
}
