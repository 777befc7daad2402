//! Linearized instances of higher Lie groupoids: nerves, pair groupoids, the
//! classifying complex `W̄`, and a catalogue of named presets.

mod catalogue;
mod random;
mod wbar;

pub use catalogue::{catalogue, documentation_fixtures, preset, DocFixture, ExampleSpec, Family};
pub use random::random_complex;
pub use wbar::wbar;

use crate::exactla::{Mat, Rat};
use crate::simplicial::SimplicialVS;

/// Block matrix `V^inputs -> V^outputs` whose output block `r` is the sum of
/// the input blocks listed in `rows[r]`, with `dim V = d`.
pub(crate) fn block_map(d: usize, inputs: usize, rows: &[Vec<usize>]) -> Mat {
    let mut m = Mat::zeros(rows.len() * d, inputs * d);
    for (r, sources) in rows.iter().enumerate() {
        for &c in sources {
            for t in 0..d {
                m.set(r * d + t, c * d + t, Rat::ONE);
            }
        }
    }
    m
}

/// Nerve of the additive group `V = Q^d`: `X_l = V^l`. Faces drop the first
/// or last entry or add two neighbours; `s_j` inserts `0` after entry `j`.
pub fn nerve_group_vs(d: usize, max_level: usize) -> SimplicialVS {
    let dims = (0..=max_level).map(|l| l * d).collect();
    SimplicialVS::from_fn(
        dims,
        |l, j| {
            let rows: Vec<Vec<usize>> = if j == 0 {
                (1..l).map(|c| vec![c]).collect()
            } else if j == l {
                (0..l - 1).map(|c| vec![c]).collect()
            } else {
                (0..l - 1)
                    .map(|r| match r.cmp(&(j - 1)) {
                        std::cmp::Ordering::Less => vec![r],
                        std::cmp::Ordering::Equal => vec![r, r + 1],
                        std::cmp::Ordering::Greater => vec![r + 1],
                    })
                    .collect()
            };
            block_map(d, l, &rows)
        },
        |l, j| {
            let rows: Vec<Vec<usize>> = (0..=l)
                .map(|r| match r.cmp(&j) {
                    std::cmp::Ordering::Less => vec![r],
                    std::cmp::Ordering::Equal => vec![],
                    std::cmp::Ordering::Greater => vec![r - 1],
                })
                .collect();
            block_map(d, l, &rows)
        },
    )
    .expect("nerve shapes are consistent")
}

/// Nerve of the pair groupoid of `V = Q^d`: `X_l = V^{l+1}`, `d_i` deletes
/// entry `i`, `s_i` repeats entry `i`.
pub fn nerve_pair_groupoid(d: usize, max_level: usize) -> SimplicialVS {
    let dims = (0..=max_level).map(|l| (l + 1) * d).collect();
    SimplicialVS::from_fn(
        dims,
        |l, i| {
            let rows: Vec<Vec<usize>> = (0..=l).filter(|&c| c != i).map(|c| vec![c]).collect();
            block_map(d, l + 1, &rows)
        },
        |l, i| {
            let rows: Vec<Vec<usize>> =
                (0..=l + 1).map(|r| vec![if r <= i { r } else { r - 1 }]).collect();
            block_map(d, l + 1, &rows)
        },
    )
    .expect("pair groupoid shapes are consistent")
}
