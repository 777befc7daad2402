//! Horn spaces, horn projections and Kan verdicts.

use higher_tangent::generators::nerve_group_vs;
use higher_tangent::simplicial::{dk_realize, horn_space, kan_report, ChainComplex};

fn main() {
    let nerve = nerve_group_vs(1, 4);
    let h = horn_space(&nerve, 2, 0).unwrap();
    println!("nerve of Q: Hom(Λ[2,0], X) has dimension {} inside X_1 ⊕ X_1", h.dim());

    let nerve2 = nerve_group_vs(2, 4);
    for n in 0..=2 {
        let verdict = kan_report(&nerve2, n).unwrap().verdict;
        println!("nerve of Q^2 is a linear Lie {n}-groupoid up to level 4: {verdict}");
    }

    let c = ChainComplex::zero_differential(vec![0, 1, 1]);
    let s = dk_realize(&c, 4).unwrap();
    let report = kan_report(&s, 2).unwrap();
    println!("realization of (0,1,1), horn by horn:");
    for check in &report.checks {
        println!(
            "  Λ[{},{}]: horn dim {}, simplex dim {}, rank {}",
            check.level, check.missing, check.horn_dim, check.simplex_dim, check.rank
        );
    }
    println!("verdict for degree 2: {}", report.verdict);
}
