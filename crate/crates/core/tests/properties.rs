use higher_tangent::exactla::Rat;
use higher_tangent::generators::{random_complex, wbar};
use higher_tangent::multiindex::{binomial, MultiIndex};
use higher_tangent::simplicial::{dk_realize, horn_space, kan_report, moore_complex, validate};
use higher_tangent::tangent::{reconstruct, sigma, tangent_complex, CompatFamily, TanFamily};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn multi_index() -> impl Strategy<Value = MultiIndex> {
    (0usize..=8).prop_flat_map(|k| {
        proptest::collection::btree_set(1..=k.max(1), 0..=k).prop_map(move |set| {
            let entries: Vec<usize> = set.into_iter().filter(|&e| e <= k).collect();
            MultiIndex::new(entries, k).unwrap()
        })
    })
}

fn truncated_family() -> impl Strategy<Value = TanFamily> {
    (1usize..=5, 1usize..=2).prop_flat_map(|(k, d)| {
        let slots = ((1usize << k) - 1) * d;
        proptest::collection::vec((-6i64..=6, 1i64..=4), slots).prop_map(move |values| {
            let mut w = TanFamily::zero(k, d, true);
            let indices = w.indices();
            for (n, index) in indices.into_iter().enumerate() {
                let v = values[n * d..(n + 1) * d].iter().map(|&(p, q)| Rat::new(p, q)).collect();
                w.set(index, v).unwrap();
            }
            w
        })
    })
}

proptest! {
    #[test]
    fn push_then_pull_cancels(index in multi_index(), i in -2isize..10) {
        prop_assert_eq!(index.push(i).pull(i), Some(index.clone()));
        let pushed = index.push(i);
        prop_assert!(pushed.entries().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn swaps_are_mutually_inverse(index in multi_index(), i in 0isize..9) {
        if let Some(r) = index.raise_swap(i) {
            prop_assert_eq!(r.lower_swap(i), Some(index.clone()));
        }
        if let Some(l) = index.lower_swap(i) {
            prop_assert_eq!(l.raise_swap(i), Some(index.clone()));
        }
    }

    #[test]
    fn reconstruction_inverts_sigma(w in truncated_family()) {
        let f = CompatFamily::from_sigmas(&w);
        prop_assert_eq!(reconstruct(&f).unwrap(), w);
    }

    #[test]
    fn component_counts_are_binomial(w in truncated_family()) {
        for m in 0..w.k() {
            prop_assert_eq!(w.degree_part(m).len(), binomial(w.k(), m));
        }
    }

    #[test]
    fn sigma_is_linear(a in truncated_family(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = higher_tangent::tangent::random_truncated(a.k(), a.fiber_dim(), &mut rng);
        for i in 0..a.k() {
            let sum = sigma(&a.add(&b), i).unwrap();
            prop_assert_eq!(sum, sigma(&a, i).unwrap().add(&sigma(&b, i).unwrap()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn realized_complexes_are_kan_and_normalize_back(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_complex(&mut rng, 3, 3);
        let s = dk_realize(&c, c.length() + 2).unwrap();
        prop_assert!(validate(&s).is_empty());
        prop_assert_eq!(moore_complex(&s).unwrap().trimmed(), c.trimmed());
        prop_assert!(kan_report(&s, c.length()).unwrap().verdict);
    }

    #[test]
    fn horn_kernel_dimension_is_moore(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_complex(&mut rng, 3, 2);
        let s = dk_realize(&c, 4).unwrap();
        let moore = moore_complex(&s).unwrap();
        for k in 1..=4 {
            let p = horn_space(&s, k, 0).unwrap().projection;
            prop_assert_eq!(s.dim(k) - higher_tangent::exactla::rank(&p), moore.dim(k));
        }
        prop_assert_eq!(tangent_complex(&s).unwrap(), moore);
    }

    #[test]
    fn wbar_shifts_moore(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_complex(&mut rng, 2, 2);
        let s = dk_realize(&c, 4).unwrap();
        let w = wbar(&s);
        prop_assert!(validate(&w).is_empty());
        let (mw, ms) = (moore_complex(&w).unwrap(), moore_complex(&s).unwrap());
        for k in 1..=3 {
            prop_assert_eq!(mw.dim(k), ms.dim(k - 1));
        }
    }
}

#[test]
fn perturbed_matrix_breaks_validation() {
    let mut s = dk_realize(&higher_tangent::simplicial::ChainComplex::zero_differential(vec![1, 1]), 3).unwrap();
    let mut d = s.face(2, 1).clone();
    let v = d.get(0, 0) + &Rat::ONE;
    d.set(0, 0, v);
    s.set_face(2, 1, d).unwrap();
    assert!(!validate(&s).is_empty());
}
