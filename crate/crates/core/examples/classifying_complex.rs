//! The additive classifying complex shifts the tangent complex up by one.

use higher_tangent::generators::{nerve_group_vs, wbar};
use higher_tangent::simplicial::{moore_complex, validate};
use higher_tangent::tangent::tangent_complex;

fn main() {
    let s = nerve_group_vs(2, 5);
    let w = wbar(&s);
    println!("W̄ level dims: {:?}", w.dims());
    println!("W̄ satisfies the identities: {}", validate(&w).is_empty());
    println!("tangent of G:  {:?}", tangent_complex(&s).unwrap().trimmed().dims());
    println!("tangent of W̄G: {:?}", tangent_complex(&w).unwrap().trimmed().dims());
    let ww = wbar(&w);
    println!("Moore of W̄W̄G: {:?}", moore_complex(&ww).unwrap().trimmed().dims());
}
