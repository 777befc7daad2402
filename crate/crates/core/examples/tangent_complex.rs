//! Three computations of the tangent complex that must agree.

use higher_tangent::generators::random_complex;
use higher_tangent::simplicial::{dk_realize, moore_complex};
use higher_tangent::tangent::{hom_limit, tangent_complex, Formulation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..4 {
        let c = random_complex(&mut rng, 3, 2);
        let s = dk_realize(&c, 5).unwrap();
        let horn = tangent_complex(&s).unwrap();
        let moore = moore_complex(&s).unwrap();
        let limit = hom_limit(&s, 5, Formulation::Pullback, false).unwrap();
        let presheaf = hom_limit(&s, 5, Formulation::Presheaf, false).unwrap();
        println!("complex dims {:?}", c.dims());
        println!("  ker p^k_0      {:?}", &horn.dims()[1..]);
        println!("  Moore          {:?}", &moore.dims()[1..]);
        println!("  limit          {:?} (stable: {})", limit.dims, limit.stable);
        println!("  limit with d_0 {:?}", presheaf.dims);
    }
}
