use std::collections::HashMap;

use rand::Rng;

use super::family::{CompatFamily, TanFamily};
use crate::exactla::{Rat, SparseSystem};
use crate::multiindex::{all_subsets, MultiIndex};

/// Small rational with numerator in `-5..=5` and denominator in `1..=3`.
pub fn random_rat<R: Rng + ?Sized>(rng: &mut R) -> Rat {
    Rat::new(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

/// Truncated family of ambient `k` with every component random.
pub fn random_truncated<R: Rng + ?Sized>(k: usize, fiber_dim: usize, rng: &mut R) -> TanFamily {
    let mut w = TanFamily::zero(k, fiber_dim, true);
    for index in w.indices() {
        let v = (0..fiber_dim).map(|_| random_rat(rng)).collect();
        w.set(index, v).expect("index in range");
    }
    w
}

/// `{σ_i w}` for a random truncated `w`.
pub fn random_compatible_via_sigma<R: Rng + ?Sized>(k: usize, fiber_dim: usize, rng: &mut R) -> CompatFamily {
    CompatFamily::from_sigmas(&random_truncated(k, fiber_dim, rng))
}

/// Random points of the solution space of `σ_i v_{j+1} = σ_j v_i`, assembled
/// directly from the members' coordinates.
pub struct NullspaceSampler {
    k: usize,
    fiber_dim: usize,
    layout: Vec<MultiIndex>,
    basis: Vec<Vec<Rat>>,
}

impl NullspaceSampler {
    pub fn new(k: usize, fiber_dim: usize) -> NullspaceSampler {
        assert!(k >= 1, "compatible families need k ≥ 1");
        let d = fiber_dim;
        let layout = all_subsets(k - 1);
        let position: HashMap<MultiIndex, usize> =
            layout.iter().cloned().enumerate().map(|(p, i)| (i, p)).collect();
        let block = layout.len() * d;
        let col = |member: usize, index: &MultiIndex, t: usize| member * block + position[index] * d + t;
        // σ_a v_m at I as a list of (index) terms.
        let sigma_terms = |index: &MultiIndex, a: usize| {
            let a = a as isize;
            let mut terms = vec![index.push(a)];
            if index.contains(a) {
                terms.push(index.push(a - 1));
            }
            terms
        };
        let mut system = SparseSystem::new(k * block);
        for j in 0..k.saturating_sub(1) {
            for i in 0..=j {
                for index in all_subsets(k - 2) {
                    for t in 0..d {
                        let mut row = Vec::new();
                        for term in sigma_terms(&index, i) {
                            row.push((col(j + 1, &term, t), Rat::ONE));
                        }
                        for term in sigma_terms(&index, j) {
                            row.push((col(i, &term, t), -Rat::ONE));
                        }
                        system.push_row(row);
                    }
                }
            }
        }
        let basis = system.kernel().basis().to_vec();
        NullspaceSampler { k, fiber_dim, layout, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> CompatFamily {
        let d = self.fiber_dim;
        let total = self.k * self.layout.len() * d;
        let mut x = vec![Rat::ZERO; total];
        for b in &self.basis {
            let c = Rat::from_int(rng.gen_range(-3..=3));
            if c.is_zero() {
                continue;
            }
            for (xi, bi) in x.iter_mut().zip(b) {
                if !bi.is_zero() {
                    *xi += &c * bi;
                }
            }
        }
        let block = self.layout.len() * d;
        let members = (0..self.k)
            .map(|m| {
                let mut v = TanFamily::zero(self.k - 1, d, false);
                for (p, index) in self.layout.iter().enumerate() {
                    let start = m * block + p * d;
                    v.set(index.clone(), x[start..start + d].to_vec()).expect("layout index");
                }
                v
            })
            .collect();
        CompatFamily::new(self.k, d, members).expect("sampler shapes")
    }
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::multiindex::binomial;
    use crate::tangent::check_compatible;

    #[test]
    fn nullspace_has_the_dimension_of_truncated_families() {
        for k in 1..=5 {
            let s = NullspaceSampler::new(k, 2);
            let expected: usize = (0..k).map(|m| binomial(k, m)).sum::<usize>() * 2;
            assert_eq!(s.dim(), expected, "k = {k}");
        }
    }

    #[test]
    fn samples_are_compatible() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let s = NullspaceSampler::new(4, 1);
        for _ in 0..10 {
            assert_eq!(check_compatible(&s.sample(&mut rng)), None);
            assert_eq!(check_compatible(&random_compatible_via_sigma(4, 2, &mut rng)), None);
        }
    }
}
