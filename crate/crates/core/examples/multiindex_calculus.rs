//! Push, pull and the two swap moves on multi-indices.

use higher_tangent::multiindex::{subsets, MultiIndex};

fn show(label: &str, x: Option<MultiIndex>) {
    match x {
        Some(i) => println!("{label:<22} {i}"),
        None => println!("{label:<22} absent (zero component)"),
    }
}

fn main() {
    let i = MultiIndex::new(vec![2, 3, 5, 7], 7).unwrap();
    println!("I = {i} in {{1..{}}}", i.ambient());
    for shift in [3, -1, 10] {
        show(&format!("push(I, {shift})"), Some(i.push(shift)));
    }
    let j = i.push(3);
    for shift in [2, 3, 4] {
        show(&format!("pull({j}, {shift})"), j.pull(shift));
    }
    let j = MultiIndex::new(vec![2, 5], 6).unwrap();
    show("raise_swap((2,5), 2)", j.raise_swap(2));
    show("raise_swap((2,5), 4)", j.raise_swap(4));
    show("lower_swap((3,5), 2)", MultiIndex::new(vec![3, 5], 6).unwrap().lower_swap(2));
    show("lower_swap((1,5), 0)", MultiIndex::new(vec![1, 5], 6).unwrap().lower_swap(0));
    let pairs: Vec<String> = subsets(4, 2).unwrap().iter().map(ToString::to_string).collect();
    println!("2-subsets of {{1..4}}: {}", pairs.join(" "));
}
