//! Exact ranks, kernels and unique solves over the rationals.

use higher_tangent::exactla::{nullspace, rank, solve_unique, Mat, Rat};
use higher_tangent::Error;

fn main() {
    let a = Mat::from_ints(&[[1, 2, 3], [2, 4, 6], [1, 0, -1]]);
    println!("A = {a:?}");
    println!("rank A = {}", rank(&a));
    for v in nullspace(&a) {
        let shown: Vec<String> = v.iter().map(ToString::to_string).collect();
        println!("kernel vector ({})", shown.join(", "));
    }

    let b = Mat::from_ints(&[[3, 1], [1, 2]]);
    let rhs = [Rat::from_int(1), Rat::from_int(0)];
    let x = solve_unique(&b, &rhs).unwrap().unwrap();
    println!("unique solution of [[3,1],[1,2]] x = (1,0): ({}, {})", x[0], x[1]);

    let inconsistent = Mat::from_ints(&[[1], [1]]);
    println!("[[1],[1]] x = (1,2): {:?}", solve_unique(&inconsistent, &[Rat::ONE, Rat::from_int(2)]).unwrap());
    match solve_unique(&Mat::from_ints(&[[1, 0]]), &[Rat::ONE]) {
        Err(Error::Underdetermined { free }) => println!("[1 0] x = 1: {free} free variable"),
        other => println!("unexpected: {other:?}"),
    }
}
