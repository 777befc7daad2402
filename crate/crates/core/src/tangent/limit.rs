//! Linearized limit `lim H^N` of maps from the fat-point nerve into `X`.
//!
//! A level-`l` map `F_l` has one component `F_l^B ∈ X_l` per `B ⊆ {0..l}`.
//! Precomposition with a simplicial operator `θ` of the nerve acts by
//! `(F ∘ θ)^J = Σ F^B` over those `B` on which `θ` is injective with
//! `θ(B) = J`. Restricting to `B ∌ 0` gives the families of
//! [`TanFamily`](super::TanFamily), on which degeneracies act by
//! [`sigma`](super::sigma). Components of different sizes never interact,
//! so each degree `m = |B|` is solved on its own.

use std::collections::HashMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{Mat, Rat, SparseSystem, Subspace};
use crate::simplicial::SimplicialVS;

/// Which unknowns and which equations make up the limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Formulation {
    /// Restricted families `x_k` for `1 ≤ k ≤ N`, degeneracy equations for all
    /// `i`, face equations for `1 ≤ i ≤ k`.
    Pullback,
    /// Full maps `F_l` for `l < N` and a restricted top family `x_N`, with
    /// every face and degeneracy equation.
    Presheaf,
    /// [`Formulation::Pullback`] plus `d_0` equations that read the missing
    /// `B ∋ 0` components as zero.
    NaiveZeroFace,
}

impl Formulation {
    fn full_level(self, level: usize, cutoff: usize) -> bool {
        self == Formulation::Presheaf && level < cutoff
    }
}

/// Unknown `(level, B)` with `B ⊆ {0..level}`.
type Key = (usize, Vec<usize>);

struct Layout {
    unknowns: Vec<Key>,
    offsets: HashMap<Key, usize>,
    total: usize,
}

impl Layout {
    /// Levels descending, then `B` lexicographic.
    fn new(s: &SimplicialVS, cutoff: usize, m: usize, formulation: Formulation) -> Layout {
        let mut unknowns = Vec::new();
        for level in (0..=cutoff).rev() {
            unknowns.extend(sets(level, m, formulation.full_level(level, cutoff)).map(|b| (level, b)));
        }
        let mut offsets = HashMap::with_capacity(unknowns.len());
        let mut total = 0;
        for key in &unknowns {
            offsets.insert(key.clone(), total);
            total += s.dim(key.0);
        }
        Layout { unknowns, offsets, total }
    }

    fn offset(&self, level: usize, b: &[usize]) -> Option<usize> {
        self.offsets.get(&(level, b.to_vec())).copied()
    }
}

/// `m`-subsets of `{0..level}` (full) or `{1..level}` (restricted), lexicographic.
fn sets(level: usize, m: usize, full: bool) -> impl Iterator<Item = Vec<usize>> {
    let start = usize::from(!full);
    (start..=level).combinations(m)
}

/// `B` with `θ` injective on `B` and `θ(B) = J`, for `θ` given by its values.
fn preimages(theta: &[usize], j: &[usize]) -> Vec<Vec<usize>> {
    if j.is_empty() {
        return vec![Vec::new()];
    }
    j.iter()
        .map(|&y| (0..theta.len()).filter(|&x| theta[x] == y).collect::<Vec<_>>())
        .multi_cartesian_product()
        .collect()
}

/// `δ^i : [l] -> [l+1]` skipping `i`.
fn coface_map(l: usize, i: usize) -> Vec<usize> {
    (0..=l).map(|x| if x < i { x } else { x + 1 }).collect()
}

/// `σ^i : [l+1] -> [l]` hitting `i` twice.
fn codegeneracy_map(l: usize, i: usize) -> Vec<usize> {
    (0..=l + 1).map(|x| if x <= i { x } else { x - 1 }).collect()
}

enum Op<'a> {
    Id,
    Mat(&'a Mat),
}

/// Rows `Σ_t sign_t op_t (unknown at offset_t) = 0`, one per output coordinate.
fn push_equations(system: &mut SparseSystem, height: usize, terms: &[(Op, usize, Rat)]) {
    for r in 0..height {
        let mut row = Vec::new();
        for (op, offset, sign) in terms {
            match op {
                Op::Id => row.push((offset + r, sign.clone())),
                Op::Mat(m) => {
                    for (c, x) in m.row(r).iter().enumerate() {
                        if !x.is_zero() {
                            row.push((offset + c, x * sign));
                        }
                    }
                }
            }
        }
        system.push_row(row);
    }
}

fn assemble(s: &SimplicialVS, cutoff: usize, m: usize, formulation: Formulation, layout: &Layout) -> SparseSystem {
    let mut system = SparseSystem::new(layout.total);
    let (one, minus) = (Rat::ONE, -Rat::ONE);
    for l in 0..cutoff {
        let upper_full = formulation.full_level(l + 1, cutoff);
        let lower_full = formulation.full_level(l, cutoff);
        // s^X_i F_l^J = Σ F_{l+1}^B over σ^i(B) = J.
        for i in 0..=l {
            let theta = codegeneracy_map(l, i);
            for j in sets(l, m, lower_full && upper_full) {
                let Some(lower) = layout.offset(l, &j) else { continue };
                let mut terms = vec![(Op::Mat(s.degen(l, i)), lower, one.clone())];
                for b in preimages(&theta, &j) {
                    let at = layout.offset(l + 1, &b).expect("preimage of an allowed set is allowed");
                    terms.push((Op::Id, at, minus.clone()));
                }
                push_equations(&mut system, s.dim(l + 1), &terms);
            }
        }
        // d^X_i F_{l+1}^J = Σ F_l^B over δ^i(B) = J.
        let first_face = if formulation == Formulation::Pullback { 1 } else { 0 };
        for i in first_face..=l + 1 {
            let theta = coface_map(l, i);
            for j in sets(l + 1, m, upper_full) {
                let upper = layout.offset(l + 1, &j).expect("layout covers level");
                let mut terms = vec![(Op::Mat(s.face(l + 1, i)), upper, one.clone())];
                for b in preimages(&theta, &j) {
                    if let Some(at) = layout.offset(l, &b) {
                        terms.push((Op::Id, at, minus.clone()));
                    }
                }
                push_equations(&mut system, s.dim(l), &terms);
            }
        }
    }
    system
}

/// Solution space of one degree.
#[derive(Clone, Debug)]
pub struct DegreeSolution {
    pub degree: usize,
    /// Dimension of the full solution space of the formulation.
    pub dim: usize,
    /// Image in the restricted unknowns `x_k^J`, `J ⊆ {1..k}`, `m ≤ k ≤ N`,
    /// laid out by level descending, then `J`, then coordinate.
    pub restricted: Subspace,
    /// Span of the `x_m^{(1..m)}` components inside `X_m`.
    pub witness: Subspace,
}

pub fn solve_degree(s: &SimplicialVS, cutoff: usize, m: usize, formulation: Formulation) -> Result<DegreeSolution> {
    if cutoff > s.max_level() {
        return Err(Error::OutOfRange(format!(
            "cutoff {cutoff} exceeds the top level {}",
            s.max_level()
        )));
    }
    if m == 0 || m > cutoff {
        return Err(Error::OutOfRange(format!("degree {m} outside 1..={cutoff}")));
    }
    let layout = Layout::new(s, cutoff, m, formulation);
    let solutions = assemble(s, cutoff, m, formulation, &layout).kernel();

    let restricted_layout = Layout::new(s, cutoff, m, Formulation::Pullback);
    let project = |v: &Vec<Rat>| -> Vec<Rat> {
        let mut out = vec![Rat::ZERO; restricted_layout.total];
        for key in &restricted_layout.unknowns {
            let (src, dst) = (layout.offsets[key], restricted_layout.offsets[key]);
            let d = s.dim(key.0);
            out[dst..dst + d].clone_from_slice(&v[src..src + d]);
        }
        out
    };
    let restricted = if formulation == Formulation::Presheaf {
        let images: Vec<Vec<Rat>> = solutions.basis().iter().map(project).collect();
        Subspace::span(&images, restricted_layout.total)
    } else {
        solutions.clone()
    };

    let top: Vec<usize> = (1..=m).collect();
    let at = restricted_layout.offset(m, &top).expect("top index present");
    let witness_vectors: Vec<Vec<Rat>> =
        restricted.basis().iter().map(|v| v[at..at + s.dim(m)].to_vec()).collect();
    let witness = Subspace::span(&witness_vectors, s.dim(m));
    Ok(DegreeSolution { degree: m, dim: solutions.dim(), restricted, witness })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HomLimitReport {
    pub cutoff: usize,
    pub formulation: Formulation,
    /// Dimensions in degrees `1..=cutoff`.
    pub dims: Vec<usize>,
    /// Dimensions at cutoff `N - 1`, degrees `1..N`.
    pub previous: Vec<usize>,
    /// `dims` and `previous` agree on their common degrees.
    pub stable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Vec<Vec<Rat>>>>,
}

/// Per-degree dimensions of the limit at cutoff `N` and at `N - 1`.
pub fn hom_limit(s: &SimplicialVS, cutoff: usize, formulation: Formulation, witnesses: bool) -> Result<HomLimitReport> {
    if cutoff > s.max_level() {
        return Err(Error::OutOfRange(format!(
            "cutoff {cutoff} exceeds the top level {}",
            s.max_level()
        )));
    }
    let jobs: Vec<(usize, usize)> = (1..=cutoff)
        .map(|m| (cutoff, m))
        .chain((1..cutoff).map(|m| (cutoff - 1, m)))
        .collect();
    let solved = jobs
        .par_iter()
        .map(|&(n, m)| solve_degree(s, n, m, formulation))
        .collect::<Result<Vec<_>>>()?;
    let (current, previous) = solved.split_at(cutoff);
    let dims: Vec<usize> = current.iter().map(|d| d.dim).collect();
    let previous: Vec<usize> = previous.iter().map(|d| d.dim).collect();
    let stable = previous.iter().zip(&dims).all(|(a, b)| a == b);
    let witnesses = witnesses.then(|| current.iter().map(|d| d.witness.basis().to_vec()).collect());
    Ok(HomLimitReport { cutoff, formulation, dims, previous, stable, witnesses })
}
