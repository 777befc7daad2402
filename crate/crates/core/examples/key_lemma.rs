//! Rebuild a tangent family from its codegeneracies, two ways.

use higher_tangent::exactla::Rat;
use higher_tangent::multiindex::MultiIndex;
use higher_tangent::tangent::{
    check_compatible, random_truncated, reconstruct, reconstruct_bruteforce, CompatFamily, TanFamily,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut v0 = TanFamily::zero(1, 1, false);
    v0.set(MultiIndex::new(vec![1], 1).unwrap(), vec![Rat::from_int(1)]).unwrap();
    let mut v1 = TanFamily::zero(1, 1, false);
    v1.set(MultiIndex::new(vec![1], 1).unwrap(), vec![Rat::from_int(3)]).unwrap();
    let f = CompatFamily::new(2, 1, vec![v0, v1]).unwrap();
    println!("k = 2, v_0 = 1, v_1 = 3:  w = {}", reconstruct(&f).unwrap());

    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let w = random_truncated(4, 1, &mut rng);
    let f = CompatFamily::from_sigmas(&w);
    println!("random w at k = 4 has {} nonzero components", w.components().count());
    let fast = reconstruct(&f).unwrap();
    let slow = reconstruct_bruteforce(&f).unwrap().unwrap();
    println!("inductive = linear solve: {}, = original: {}", fast == slow, fast == w);

    let mut broken = f.clone();
    broken.members_mut()[3].add_to(MultiIndex::new(vec![2], 3).unwrap(), &[Rat::ONE]).unwrap();
    println!("perturbed family: {}", check_compatible(&broken).map_or("compatible".into(), |v| v.to_string()));
    println!("linear solve on it: {:?}", reconstruct_bruteforce(&broken).unwrap().map(|w| w.to_string()));
}
