//! Seeded invariant suites run by `htan selftest`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exactla::{nullspace, rank, solve_unique, Mat, Rat};
use crate::generators::{catalogue, nerve_group_vs, nerve_pair_groupoid, random_complex, wbar};
use crate::multiindex::{all_subsets, binomial, subsets};
use crate::simplicial::{dk_realize, kan_report, moore_complex, validate};
use crate::tangent::{
    check_compatible, coface, hom_limit, random_compatible_via_sigma, random_truncated, reconstruct,
    reconstruct_bruteforce, sigma, solve_degree, tangent_complex, CompatFamily, Formulation, NullspaceSampler,
    TanFamily,
};

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

struct Tally {
    checks: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Tally {
        Tally { checks: 0, failure: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn finish(self, name: &'static str) -> SuiteResult {
        SuiteResult { name, checks: self.checks, passed: self.failure.is_none(), failure: self.failure }
    }
}

pub fn multiindex_suite() -> SuiteResult {
    let mut t = Tally::new();
    for k in 0..=6 {
        t.check(all_subsets(k).len() == 1 << k, || format!("2^{k} subsets"));
        for m in 0..=k {
            t.check(subsets(k, m).map(|v| v.len()).ok() == Some(binomial(k, m)), || format!("C({k},{m})"));
        }
        for index in all_subsets(k) {
            for i in -1..=k as isize + 1 {
                t.check(index.push(i).pull(i).as_ref() == Some(&index), || format!("pull∘push at {index}, {i}"));
                if let Some(r) = index.raise_swap(i) {
                    let via = index.pull(i).map(|p| p.push(i - 1).with_ambient(k));
                    t.check(via.and_then(Result::ok).as_ref() == Some(&r), || format!("raise_swap {index}, {i}"));
                    t.check(r.lower_swap(i).as_ref() == Some(&index), || format!("lower∘raise {index}, {i}"));
                }
                if let Some(l) = index.lower_swap(i) {
                    t.check(l.raise_swap(i).as_ref() == Some(&index), || format!("raise∘lower {index}, {i}"));
                }
            }
            t.check(index.lower_swap(0).is_none(), || format!("lower_swap at 0 for {index}"));
        }
    }
    t.finish("multiindex")
}

fn random_matrix(rng: &mut ChaCha8Rng) -> Mat {
    let (r, c) = (rng.gen_range(0..6), rng.gen_range(0..6));
    let rows: Vec<Vec<i64>> = (0..r)
        .map(|_| (0..c).map(|_| if rng.gen_bool(0.5) { 0 } else { rng.gen_range(-4..=4) }).collect())
        .collect();
    if r == 0 {
        Mat::zeros(0, c)
    } else {
        Mat::from_ints(&rows)
    }
}

pub fn exactla_suite(seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new();
    for _ in 0..60 {
        let a = random_matrix(&mut rng);
        let null = nullspace(&a);
        t.check(rank(&a) + null.len() == a.cols(), || format!("rank-nullity for {a:?}"));
        for v in &null {
            t.check(a.mul_vec(v).iter().all(Rat::is_zero), || format!("Av ≠ 0 for {a:?}"));
        }
        let b: Vec<Rat> = (0..a.rows()).map(|_| Rat::from_int(rng.gen_range(-3..=3))).collect();
        if let Ok(Some(x)) = solve_unique(&a, &b) {
            t.check(a.mul_vec(&x) == b, || format!("solve_unique residual for {a:?}"));
        }
    }
    t.finish("exactla")
}

pub fn simplicial_suite(seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new();
    let mut objects = vec![nerve_group_vs(2, 4), nerve_pair_groupoid(2, 4)];
    objects.extend(catalogue().iter().map(|s| s.build()));
    for s in &objects {
        t.check(validate(s).is_empty(), || format!("generator with dims {:?} violates identities", s.dims()));
    }
    for _ in 0..12 {
        let c = random_complex(&mut rng, 3, 2);
        let Ok(s) = dk_realize(&c, c.length() + 2) else {
            t.check(false, || "dk_realize failed".into());
            continue;
        };
        t.check(validate(&s).is_empty(), || format!("realization of {:?} is not simplicial", c.dims()));
        let normalized = moore_complex(&s).map(|m| m.trimmed());
        t.check(normalized.ok() == Some(c.trimmed()), || format!("Dold–Kan roundtrip for {:?}", c.dims()));
        let verdict = kan_report(&s, c.length()).map(|r| r.verdict);
        t.check(verdict.ok() == Some(true), || format!("Kan verdict for {:?}", c.dims()));
        let w = wbar(&s);
        t.check(validate(&w).is_empty(), || "W̄ violates identities".into());
        if let (Ok(mw), Ok(ms)) = (moore_complex(&w), moore_complex(&s)) {
            t.check((1..s.max_level()).all(|k| mw.dim(k) == ms.dim(k - 1)), || "W̄ degree shift".into());
        }
    }
    t.finish("simplicial")
}

fn unit_families(k: usize) -> Vec<TanFamily> {
    all_subsets(k)
        .into_iter()
        .map(|index| {
            let mut w = TanFamily::zero(k, 1, false);
            w.set(index, vec![Rat::ONE]).expect("valid index");
            w
        })
        .collect()
}

/// Dual simplicial identities for `sigma` and `coface_i`, `i ≥ 1`, on every
/// unit family up to ambient 5.
pub fn cosimplicial_suite() -> SuiteResult {
    let mut t = Tally::new();
    for k in 2..=5 {
        for w in unit_families(k) {
            for j in 0..k - 1 {
                for i in 0..=j {
                    let lhs = sigma(&sigma(&w, i).unwrap(), j).unwrap();
                    let rhs = sigma(&sigma(&w, j + 1).unwrap(), i).unwrap();
                    t.check(lhs == rhs, || format!("σσ at k={k}, i={i}, j={j}"));
                }
            }
        }
        for x in unit_families(k - 1) {
            for j in 0..k {
                for i in 1..=k {
                    let lhs = sigma(&coface(&x, i).unwrap(), j).unwrap();
                    let rhs = if i < j {
                        coface(&sigma(&x, j - 1).unwrap(), i).unwrap()
                    } else if i == j || i == j + 1 {
                        x.clone()
                    } else {
                        coface(&sigma(&x, j).unwrap(), i - 1).unwrap()
                    };
                    t.check(lhs == rhs, || format!("σ_{j} coface_{i} at k={k}"));
                }
            }
        }
    }
    t.finish("cosimplicial")
}

pub fn reconstruction_suite(seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new();
    for k in 2..=5 {
        for d in 1..=2 {
            let sampler = NullspaceSampler::new(k, d);
            for n in 0..6 {
                let f: CompatFamily = if n % 2 == 0 {
                    random_compatible_via_sigma(k, d, &mut rng)
                } else {
                    sampler.sample(&mut rng)
                };
                t.check(check_compatible(&f).is_none(), || format!("generated family incompatible, k={k}"));
                let fast = reconstruct(&f);
                let slow = reconstruct_bruteforce(&f);
                let agree = matches!((&fast, &slow), (Ok(a), Ok(Some(b))) if a == b);
                t.check(agree, || format!("reconstruct disagrees with the linear solve at k={k}"));
                if let Ok(w) = fast {
                    let back = (0..k).all(|i| sigma(&w, i).ok().as_ref() == Some(f.member(i)));
                    t.check(back, || format!("σ_i of the reconstruction differ at k={k}"));
                }
            }
            let w = random_truncated(k, d, &mut rng);
            let again = reconstruct(&CompatFamily::from_sigmas(&w));
            t.check(again.ok() == Some(w), || format!("roundtrip at k={k}"));
        }
    }
    t.finish("reconstruction")
}

pub fn tangent_suite(seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new();
    for _ in 0..6 {
        let c = random_complex(&mut rng, 3, 2);
        let n = 4;
        let Ok(s) = dk_realize(&c, n) else {
            t.check(false, || "dk_realize failed".into());
            continue;
        };
        let (Ok(tan), Ok(moore)) = (tangent_complex(&s), moore_complex(&s)) else {
            t.check(false, || "tangent or Moore complex failed".into());
            continue;
        };
        t.check(tan.dims() == moore.dims(), || format!("tangent ≠ Moore for {:?}", c.dims()));
        match hom_limit(&s, n, Formulation::Pullback, false) {
            Ok(r) => {
                t.check(r.stable, || format!("unstable limit for {:?}", c.dims()));
                t.check(r.dims[..] == moore.dims()[1..=n], || format!("limit ≠ Moore for {:?}", c.dims()));
            }
            Err(e) => t.check(false, || e.to_string()),
        }
        for m in 1..=n {
            let pair = (
                solve_degree(&s, n, m, Formulation::Presheaf),
                solve_degree(&s, n, m, Formulation::Pullback),
            );
            let same = matches!(&pair, (Ok(a), Ok(b)) if a.dim == b.dim && a.restricted.same_space(&b.restricted));
            t.check(same, || format!("i = 0 faces change degree {m} for {:?}", c.dims()));
        }
    }
    t.finish("tangent")
}

/// Every suite, in a fixed order.
pub fn run_all(seed: u64) -> Vec<SuiteResult> {
    vec![
        multiindex_suite(),
        exactla_suite(seed),
        simplicial_suite(seed),
        cosimplicial_suite(),
        reconstruction_suite(seed),
        tangent_suite(seed),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_with_default_seed() {
        for r in run_all(0) {
            assert!(r.passed, "{}: {:?}", r.name, r.failure);
        }
    }

    #[test]
    fn restricted_coface_zero_is_not_dual_to_d0() {
        let x = &unit_families(1)[1];
        let lhs = sigma(&coface(x, 0).unwrap(), 1).unwrap();
        let rhs = coface(&sigma(x, 0).unwrap(), 0).unwrap();
        assert_ne!(lhs, rhs);
        assert_eq!(coface(x, 0).unwrap(), coface(x, 1).unwrap());
    }
}
