//! Dold–Kan realization `Γ(C)_m = ⊕_{[m] ↠ [p]} C_p`.
//!
//! A surjection `η : [m] ↠ [p]` is stored as its jump set
//! `{x ∈ 1..m : η(x) = η(x-1) + 1}`. Summands of `Γ(C)_m` are ordered by `p`,
//! then lexicographically by jump set. For an operator `θ : [m'] -> [m]` the
//! induced map sends the summand of `η` to
//!
//! * the summand of `ηθ` by the identity, when `ηθ` is onto;
//! * the summand of `ηθ - 1` by `∂_p`, when `ηθ` has image `{1..p}`;
//! * zero otherwise.
//!
//! With this rule `N_p = C_p` sits in the identity summand and `d_0` restricts
//! to `∂_p` with no sign.

use std::collections::HashMap;

use itertools::Itertools;

use super::{moore_complex, ChainComplex, SimplicialVS};
use crate::error::{Error, Result};
use crate::exactla::Mat;

type Jumps = Vec<usize>;

struct Level {
    summands: Vec<(usize, Jumps)>,
    offsets: Vec<usize>,
    index: HashMap<(usize, Jumps), usize>,
    dim: usize,
}

impl Level {
    fn new(m: usize, c: &ChainComplex) -> Level {
        let top = m.min(c.length());
        let summands: Vec<(usize, Jumps)> = (0..=top)
            .flat_map(|p| (1..=m).combinations(p).map(move |j| (p, j)))
            .collect();
        let mut offsets = Vec::with_capacity(summands.len());
        let mut dim = 0;
        for (p, _) in &summands {
            offsets.push(dim);
            dim += c.dim(*p);
        }
        let index = summands.iter().cloned().enumerate().map(|(n, s)| (s, n)).collect();
        Level { summands, offsets, index, dim }
    }
}

/// Values of the surjection with jump set `jumps` on `0..=m`.
fn eval(jumps: &[usize], m: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(m + 1);
    let mut v = 0;
    for x in 0..=m {
        if jumps.contains(&x) {
            v += 1;
        }
        out.push(v);
    }
    out
}

/// Matrix of `θ^* : Γ_m -> Γ_{m'}` where `theta[x] = θ(x)` for `x ∈ 0..=m'`.
fn operator(c: &ChainComplex, src: &Level, dst: &Level, m: usize, theta: &[usize]) -> Mat {
    let mut out = Mat::zeros(dst.dim, src.dim);
    for (n, (p, jumps)) in src.summands.iter().enumerate() {
        let p = *p;
        let eta = eval(jumps, m);
        let f: Vec<usize> = theta.iter().map(|&x| eta[x]).collect();
        let new_jumps: Jumps = (1..f.len()).filter(|&x| f[x] != f[x - 1]).collect();
        let (q, block) = if f[0] == 0 && *f.last().unwrap() == p {
            (p, None)
        } else if p >= 1 && f[0] == 1 && *f.last().unwrap() == p {
            (p - 1, Some(c.diff(p)))
        } else {
            continue;
        };
        if new_jumps.len() != q {
            continue;
        }
        let target = dst.index[&(q, new_jumps)];
        let (r0, c0) = (dst.offsets[target], src.offsets[n]);
        match block {
            None => {
                for t in 0..c.dim(p) {
                    out.set(r0 + t, c0 + t, crate::exactla::Rat::ONE);
                }
            }
            Some(d) => out.set_block(r0, c0, d),
        }
    }
    out
}

/// Realize `c` as a simplicial vector space through level `max_level`.
pub fn dk_realize(c: &ChainComplex, max_level: usize) -> Result<SimplicialVS> {
    if max_level < c.length() {
        return Err(Error::InvalidArgument(format!(
            "max level {max_level} below complex length {}",
            c.length()
        )));
    }
    let levels: Vec<Level> = (0..=max_level).map(|m| Level::new(m, c)).collect();
    let dims = levels.iter().map(|l| l.dim).collect();
    let mut faces = vec![Vec::new()];
    let mut degens = Vec::new();
    for m in 0..=max_level {
        if m >= 1 {
            let row = (0..=m)
                .map(|i| {
                    let delta: Vec<usize> = (0..m).map(|x| if x < i { x } else { x + 1 }).collect();
                    operator(c, &levels[m], &levels[m - 1], m, &delta)
                })
                .collect();
            faces.push(row);
        }
        if m < max_level {
            let row = (0..=m)
                .map(|i| {
                    let sigma: Vec<usize> = (0..=m + 1).map(|x| if x <= i { x } else { x - 1 }).collect();
                    operator(c, &levels[m], &levels[m + 1], m, &sigma)
                })
                .collect();
            degens.push(row);
        }
    }
    SimplicialVS::new(dims, faces, degens)
}

/// The normalized complex; inverse to [`dk_realize`] up to the Moore basis.
pub fn dk_normalize(s: &SimplicialVS) -> Result<ChainComplex> {
    moore_complex(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{kan_report, validate};

    fn complex(dims: &[usize]) -> ChainComplex {
        ChainComplex::zero_differential(dims.to_vec())
    }

    #[test]
    fn one_dimensional_shift_matches_level_counts() {
        let s = dk_realize(&complex(&[0, 1]), 4).unwrap();
        assert_eq!(s.dims(), &[0, 1, 2, 3, 4]);
        assert!(validate(&s).is_empty());
    }

    #[test]
    fn level_three_of_two_term_complex() {
        let s = dk_realize(&complex(&[0, 2, 1]), 3).unwrap();
        assert_eq!(s.dim(3), 9);
    }

    #[test]
    fn degree_zero_is_constant() {
        let s = dk_realize(&complex(&[3]), 3).unwrap();
        assert_eq!(s.dims(), &[3, 3, 3, 3]);
        for l in 1..=3 {
            for i in 0..=l {
                assert_eq!(s.face(l, i), &Mat::identity(3));
            }
        }
    }

    #[test]
    fn roundtrip_with_differential() {
        let d1 = Mat::from_ints(&[[1, 2]]);
        let d2 = Mat::from_ints(&[[2, -2], [-1, 1]]);
        let c = ChainComplex::new(vec![1, 2, 2], vec![d1, d2]).unwrap();
        let s = dk_realize(&c, 4).unwrap();
        assert!(validate(&s).is_empty());
        assert_eq!(dk_normalize(&s).unwrap().trimmed(), c);
        assert!(kan_report(&s, 2).unwrap().verdict);
    }

    #[test]
    fn rejects_short_cutoff() {
        assert!(dk_realize(&complex(&[0, 1, 1]), 1).is_err());
    }
}
