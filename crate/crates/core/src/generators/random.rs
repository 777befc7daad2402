use rand::Rng;

use crate::exactla::{nullspace, Mat, Rat};
use crate::simplicial::ChainComplex;

/// Random complex of length `1..=max_length` with every `dim C_k ≤ max_dim`.
///
/// `∂_k` is a random combination of a kernel basis of `∂_{k-1}`, so `∂² = 0`
/// holds by construction; a coin decides whether `∂_k` is zero.
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R, max_length: usize, max_dim: usize) -> ChainComplex {
    let length = rng.gen_range(1..=max_length.max(1));
    let dims: Vec<usize> = (0..=length).map(|_| rng.gen_range(0..=max_dim)).collect();
    let mut diffs: Vec<Mat> = Vec::with_capacity(length);
    for k in 1..=length {
        let kernel: Vec<Vec<Rat>> = if k == 1 {
            Mat::identity(dims[0]).columns()
        } else {
            nullspace(&diffs[k - 2])
        };
        let mut d = Mat::zeros(dims[k - 1], dims[k]);
        if rng.gen_bool(0.75) {
            for c in 0..dims[k] {
                for b in &kernel {
                    let coeff = Rat::from_int(rng.gen_range(-2..=2));
                    if coeff.is_zero() {
                        continue;
                    }
                    for (r, x) in b.iter().enumerate() {
                        if !x.is_zero() {
                            let v = d.get(r, c) + &(&coeff * x);
                            d.set(r, c, v);
                        }
                    }
                }
            }
        }
        diffs.push(d);
    }
    ChainComplex::new(dims, diffs).expect("∂² = 0 by construction")
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn respects_bounds_and_is_sometimes_nontrivial() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let complexes: Vec<ChainComplex> = (0..40).map(|_| random_complex(&mut rng, 4, 3)).collect();
        assert!(complexes.iter().all(|c| c.length() <= 4 && c.dims().iter().all(|&d| d <= 3)));
        assert!(complexes.iter().any(|c| c.diffs().iter().any(|d| !d.is_zero())));
    }
}
