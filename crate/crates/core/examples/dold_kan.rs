//! Realize a chain complex as a simplicial vector space and normalize back.

use higher_tangent::exactla::Mat;
use higher_tangent::simplicial::{dk_normalize, dk_realize, validate, ChainComplex};

fn main() {
    let d1 = Mat::from_ints(&[[1, 1]]);
    let d2 = Mat::from_ints(&[[1], [-1]]);
    let c = ChainComplex::new(vec![1, 2, 1], vec![d1, d2]).unwrap();
    let s = dk_realize(&c, 4).unwrap();
    println!("level dimensions: {:?}", s.dims());
    println!("simplicial identities hold: {}", validate(&s).is_empty());
    let back = dk_normalize(&s).unwrap().trimmed();
    println!("normalized dims: {:?}", back.dims());
    for (k, d) in back.diffs().iter().enumerate() {
        println!("∂_{} = {d:?}", k + 1);
    }
    println!("roundtrip exact: {}", back == c);
}
