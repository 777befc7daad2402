use super::family::{check_compatible, sigma, CompatFamily, TanFamily};
use crate::error::{Error, Result};
use crate::exactla::{solve_unique_sparse, Rat, SparseVec};
use crate::multiindex::{all_subsets, subsets, MultiIndex};

fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Component at an optional index, absent read as zero.
fn member_at(v: &TanFamily, index: Option<MultiIndex>) -> Vec<Rat> {
    index.map_or_else(|| vec![Rat::ZERO; v.fiber_dim()], |i| v.component(&i))
}

/// The unique truncated `w` of ambient `k` with `σ_i w = v_i` for all `i`.
///
/// Each degree `l < k` is filled in backwards lexicographic order. The
/// largest index `(k-l+1, ..., k)` reads `v_0`; every later `J` reads
/// `v_j` with `j = max{a ∉ J} - 1`, corrected by the already known
/// `w^{raise_swap(J, j)}` when `j ∈ J`.
pub fn reconstruct(f: &CompatFamily) -> Result<TanFamily> {
    if let Some(v) = check_compatible(f) {
        return Err(Error::Incompatible(v.to_string()));
    }
    let k = f.k();
    let mut w = TanFamily::zero(k, f.fiber_dim(), true);
    for l in 0..k {
        let mut order = subsets(k, l)?;
        order.reverse();
        for (n, j_index) in order.iter().enumerate() {
            let value = if n == 0 {
                f.member(0).component(&j_index.pull(0).expect("initial index pulls"))
            } else {
                let gap = (1..=k).rev().find(|&a| !j_index.contains(a as isize)).expect("J is not full");
                let j = gap - 1;
                let base = f.member(j).component(&j_index.pull(j as isize).expect("j + 1 ∉ J"));
                if j_index.contains(j as isize) {
                    let later = j_index.raise_swap(j as isize).expect("j ∈ J, j + 1 ∉ J");
                    sub(&base, &w.component(&later))
                } else {
                    base
                }
            };
            w.set(j_index.clone(), value)?;
        }
    }
    check_table(f, &w)?;
    debug_assert!((0..k).all(|i| sigma(&w, i).ok().as_ref() == Some(f.member(i))));
    Ok(w)
}

/// Every equation linking `w^J` to the members, by the position of `i`, `i+1`
/// relative to `J`.
fn check_table(f: &CompatFamily, w: &TanFamily) -> Result<()> {
    let k = f.k();
    for j_index in w.indices() {
        for i in 0..k {
            let v = f.member(i);
            let s = i as isize;
            let (has_i, has_next) = (j_index.contains(s), j_index.contains(s + 1));
            let holds = match (has_i, has_next) {
                (true, true) => true,
                (false, true) if i >= 1 => {
                    member_at(v, j_index.pull(s - 1))
                        == add(&member_at(w, j_index.lower_swap(s)), &w.component(&j_index))
                }
                (false, true) => true,
                (true, false) => {
                    member_at(v, j_index.pull(s))
                        == add(&w.component(&j_index), &member_at(w, j_index.raise_swap(s)))
                }
                (false, false) => member_at(v, j_index.pull(s)) == w.component(&j_index),
            };
            if !holds {
                return Err(Error::Internal(format!(
                    "reconstruction violates the equation for v_{i} at J = {j_index}"
                )));
            }
        }
    }
    Ok(())
}

/// Solve all equations `σ_i w = v_i` at once for a truncated `w`.
///
/// `Ok(None)` when they are inconsistent; `Err(Underdetermined)` when the
/// solution is not unique.
pub fn reconstruct_bruteforce(f: &CompatFamily) -> Result<Option<TanFamily>> {
    let (k, d) = (f.k(), f.fiber_dim());
    let unknowns = TanFamily::zero(k, d, true).indices();
    let column = |index: &MultiIndex| -> Option<usize> {
        unknowns.binary_search_by(|u| cmp_graded(u, index)).ok().map(|p| p * d)
    };
    let cols = unknowns.len() * d;
    let mut rows: Vec<SparseVec> = Vec::new();
    for i in 0..k {
        let s = i as isize;
        for index in all_subsets(k - 1) {
            let mut terms = vec![index.push(s)];
            if index.contains(s) {
                terms.push(index.push(s - 1));
            }
            let rhs = f.member(i).component(&index);
            for t in 0..d {
                let mut row: SparseVec = terms
                    .iter()
                    .filter_map(|j| column(j))
                    .map(|c| (c + t, Rat::ONE))
                    .collect();
                if !rhs[t].is_zero() {
                    row.push((cols, rhs[t].clone()));
                }
                if !row.is_empty() {
                    row.sort_by_key(|e| e.0);
                    rows.push(row);
                }
            }
        }
    }
    let Some(x) = solve_unique_sparse(rows, cols)? else {
        return Ok(None);
    };
    let mut w = TanFamily::zero(k, d, true);
    for (p, index) in unknowns.into_iter().enumerate() {
        w.set(index, x[p * d..(p + 1) * d].to_vec())?;
    }
    Ok(Some(w))
}

/// Order of [`all_subsets`]: by size, then lexicographic.
fn cmp_graded(a: &MultiIndex, b: &MultiIndex) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.entries().cmp(b.entries()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(e: &[usize], k: usize) -> MultiIndex {
        MultiIndex::new(e.to_vec(), k).unwrap()
    }

    fn hand_family() -> CompatFamily {
        let mut v0 = TanFamily::zero(1, 1, false);
        v0.set(idx(&[1], 1), vec![Rat::from_int(1)]).unwrap();
        let mut v1 = TanFamily::zero(1, 1, false);
        v1.set(idx(&[1], 1), vec![Rat::from_int(3)]).unwrap();
        CompatFamily::new(2, 1, vec![v0, v1]).unwrap()
    }

    #[test]
    fn hand_solved_k2() {
        let f = hand_family();
        let w = reconstruct(&f).unwrap();
        assert_eq!(w.component(&idx(&[2], 2)), vec![Rat::from_int(1)]);
        assert_eq!(w.component(&idx(&[1], 2)), vec![Rat::from_int(2)]);
        assert_eq!(reconstruct_bruteforce(&f).unwrap(), Some(w));
    }

    #[test]
    fn zero_members_give_zero() {
        let zero = TanFamily::zero(3, 2, false);
        let f = CompatFamily::new(4, 2, vec![zero; 4]).unwrap();
        assert!(reconstruct(&f).unwrap().is_zero());
    }

    #[test]
    fn incompatible_is_rejected_by_both_routes() {
        let mut w = TanFamily::zero(4, 1, true);
        w.set(idx(&[1, 3], 4), vec![Rat::from_int(2)]).unwrap();
        w.set(idx(&[2], 4), vec![Rat::from_int(-1)]).unwrap();
        let mut f = CompatFamily::from_sigmas(&w);
        assert_eq!(reconstruct(&f).unwrap(), w);
        f.members_mut()[2].add_to(idx(&[1], 3), &[Rat::ONE]).unwrap();
        assert!(matches!(reconstruct(&f), Err(Error::Incompatible(_))));
        assert_eq!(reconstruct_bruteforce(&f).unwrap(), None);
    }
}
