use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::Mat;

/// A finite tower `X_0, ..., X_N` of rational vector spaces with face maps
/// `d^l_i : X_l -> X_{l-1}` and degeneracies `s^l_i : X_l -> X_{l+1}`.
///
/// Construction checks every matrix shape; [`validate`] checks the
/// simplicial identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialVS {
    dims: Vec<usize>,
    /// `faces[l][i]`, with `faces[0]` empty.
    faces: Vec<Vec<Mat>>,
    /// `degens[l][i]` for `l < N`.
    degens: Vec<Vec<Mat>>,
}

impl SimplicialVS {
    pub fn new(dims: Vec<usize>, faces: Vec<Vec<Mat>>, degens: Vec<Vec<Mat>>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::ShapeMismatch("a simplicial object needs level 0".into()));
        }
        let n = dims.len() - 1;
        if faces.len() != n + 1 || !faces[0].is_empty() {
            return Err(Error::ShapeMismatch(format!(
                "faces must have {} levels with level 0 empty",
                n + 1
            )));
        }
        if degens.len() != n {
            return Err(Error::ShapeMismatch(format!("degens must have {n} levels")));
        }
        for l in 1..=n {
            if faces[l].len() != l + 1 {
                return Err(Error::ShapeMismatch(format!(
                    "faces[{l}] has {} maps, expected {}",
                    faces[l].len(),
                    l + 1
                )));
            }
            for (i, d) in faces[l].iter().enumerate() {
                if d.shape() != (dims[l - 1], dims[l]) {
                    return Err(Error::ShapeMismatch(format!(
                        "faces[{l}][{i}] is {:?}, expected {:?}",
                        d.shape(),
                        (dims[l - 1], dims[l])
                    )));
                }
            }
        }
        for l in 0..n {
            if degens[l].len() != l + 1 {
                return Err(Error::ShapeMismatch(format!(
                    "degens[{l}] has {} maps, expected {}",
                    degens[l].len(),
                    l + 1
                )));
            }
            for (i, s) in degens[l].iter().enumerate() {
                if s.shape() != (dims[l + 1], dims[l]) {
                    return Err(Error::ShapeMismatch(format!(
                        "degens[{l}][{i}] is {:?}, expected {:?}",
                        s.shape(),
                        (dims[l + 1], dims[l])
                    )));
                }
            }
        }
        Ok(Self { dims, faces, degens })
    }

    /// Build from closures producing `d^l_i` and `s^l_i`.
    pub fn from_fn(
        dims: Vec<usize>,
        mut face: impl FnMut(usize, usize) -> Mat,
        mut degen: impl FnMut(usize, usize) -> Mat,
    ) -> Result<Self> {
        let n = dims.len().saturating_sub(1);
        let faces = (0..=n)
            .map(|l| if l == 0 { Vec::new() } else { (0..=l).map(|i| face(l, i)).collect() })
            .collect();
        let degens = (0..n).map(|l| (0..=l).map(|i| degen(l, i)).collect()).collect();
        Self::new(dims, faces, degens)
    }

    pub fn max_level(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, level: usize) -> usize {
        self.dims[level]
    }

    pub fn face(&self, level: usize, i: usize) -> &Mat {
        &self.faces[level][i]
    }

    pub fn degen(&self, level: usize, i: usize) -> &Mat {
        &self.degens[level][i]
    }

    pub fn faces(&self) -> &[Vec<Mat>] {
        &self.faces
    }

    pub fn degens(&self) -> &[Vec<Mat>] {
        &self.degens
    }

    /// Keep levels `0..=level`.
    pub fn truncate(&self, level: usize) -> SimplicialVS {
        let level = level.min(self.max_level());
        SimplicialVS {
            dims: self.dims[..=level].to_vec(),
            faces: self.faces[..=level].to_vec(),
            degens: self.degens[..level].to_vec(),
        }
    }

    /// Mutable access for building perturbed fixtures; shapes must be kept.
    pub fn set_face(&mut self, level: usize, i: usize, m: Mat) -> Result<()> {
        if m.shape() != self.faces[level][i].shape() {
            return Err(Error::ShapeMismatch(format!("replacement for faces[{level}][{i}]")));
        }
        self.faces[level][i] = m;
        Ok(())
    }

    pub fn set_degen(&mut self, level: usize, i: usize, m: Mat) -> Result<()> {
        if m.shape() != self.degens[level][i].shape() {
            return Err(Error::ShapeMismatch(format!("replacement for degens[{level}][{i}]")));
        }
        self.degens[level][i] = m;
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    /// `d_i d_j = d_{j-1} d_i` for `i < j`
    FaceFace,
    /// `s_i s_j = s_{j+1} s_i` for `i <= j`
    DegenDegen,
    /// `d_i s_j = s_{j-1} d_i` for `i < j`
    FaceDegenBelow,
    /// `d_i s_j = id` for `i = j, j+1`
    FaceDegenIdentity,
    /// `d_i s_j = s_j d_{i-1}` for `i > j + 1`
    FaceDegenAbove,
}

/// One failed identity. `level` is the level of the outermost map's source
/// for face-face pairs, and the level of `s_j`'s target otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub identity: Identity,
    pub level: usize,
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, l) = (self.i, self.j, self.level);
        match self.identity {
            Identity::FaceFace => write!(f, "d_{i} d_{j} = d_{} d_{i} fails on X_{l}", j - 1),
            Identity::DegenDegen => write!(f, "s_{i} s_{j} = s_{} s_{i} fails into X_{l}", j + 1),
            Identity::FaceDegenBelow => {
                write!(f, "d_{i} s_{j} = s_{} d_{i} fails at level {l}", j - 1)
            }
            Identity::FaceDegenIdentity => write!(f, "d_{i} s_{j} = id fails at level {l}"),
            Identity::FaceDegenAbove => {
                write!(f, "d_{i} s_{j} = s_{j} d_{} fails at level {l}", i - 1)
            }
        }
    }
}

/// Every violated simplicial identity, in a fixed scan order. Empty iff `s`
/// is a simplicial vector space (up to its top level).
pub fn validate(s: &SimplicialVS) -> Vec<Violation> {
    let n = s.max_level();
    let mut out = Vec::new();
    let mut check = |ok: bool, identity, level, i, j| {
        if !ok {
            out.push(Violation { identity, level, i, j });
        }
    };
    for l in 2..=n {
        for j in 0..=l {
            for i in 0..j {
                let lhs = s.face(l - 1, i).mul(s.face(l, j));
                let rhs = s.face(l - 1, j - 1).mul(s.face(l, i));
                check(lhs == rhs, Identity::FaceFace, l, i, j);
            }
        }
    }
    // s^l_i s^{l-1}_j = s^l_{j+1} s^{l-1}_i on X_{l-1}, i <= j <= l-1.
    for l in 1..n {
        for j in 0..l {
            for i in 0..=j {
                let lhs = s.degen(l, i).mul(s.degen(l - 1, j));
                let rhs = s.degen(l, j + 1).mul(s.degen(l - 1, i));
                check(lhs == rhs, Identity::DegenDegen, l + 1, i, j);
            }
        }
    }
    // d^l_i s^{l-1}_j on X_{l-1}.
    for l in 1..=n {
        for j in 0..l {
            for i in 0..=l {
                let lhs = s.face(l, i).mul(s.degen(l - 1, j));
                if i == j || i == j + 1 {
                    check(lhs == Mat::identity(s.dim(l - 1)), Identity::FaceDegenIdentity, l, i, j);
                } else if i < j {
                    let rhs = s.degen(l - 2, j - 1).mul(s.face(l - 1, i));
                    check(lhs == rhs, Identity::FaceDegenBelow, l, i, j);
                } else {
                    let rhs = s.degen(l - 2, j).mul(s.face(l - 1, i - 1));
                    check(lhs == rhs, Identity::FaceDegenAbove, l, i, j);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::nerve_group_vs;

    #[test]
    fn shape_errors_come_first() {
        let bad = SimplicialVS::new(vec![1, 1], vec![vec![], vec![Mat::zeros(1, 1), Mat::zeros(2, 1)]], vec![vec![
            Mat::identity(1),
        ]]);
        assert!(matches!(bad, Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn level_zero_has_nothing_to_check() {
        let s = SimplicialVS::new(vec![3], vec![vec![]], vec![]).unwrap();
        assert!(validate(&s).is_empty());
    }

    #[test]
    fn corrupted_degeneracy_is_named() {
        let mut s = nerve_group_vs(1, 3);
        s.set_degen(1, 0, Mat::from_ints(&[[1], [1]])).unwrap();
        let report = validate(&s);
        assert!(!report.is_empty());
        assert!(report.iter().any(|v| v.identity == Identity::FaceDegenIdentity && v.j == 0));
        assert!(report[0].to_string().contains("fails"));
    }
}
