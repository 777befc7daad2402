use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::Rat;
use crate::multiindex::{all_subsets, MultiIndex};

/// An element of `⊕_{I ⊆ {1..k}} V_I` with `V = Q^fiber_dim`.
///
/// Only nonzero components are stored. A truncated family has no component at
/// the full index `(1, ..., k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TanFamily {
    k: usize,
    fiber_dim: usize,
    truncated: bool,
    components: BTreeMap<MultiIndex, Vec<Rat>>,
}

impl TanFamily {
    pub fn zero(k: usize, fiber_dim: usize, truncated: bool) -> TanFamily {
        TanFamily { k, fiber_dim, truncated, components: BTreeMap::new() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn fiber_dim(&self) -> usize {
        self.fiber_dim
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Stored (nonzero) components in index order.
    pub fn components(&self) -> impl Iterator<Item = (&MultiIndex, &Vec<Rat>)> {
        self.components.iter()
    }

    /// Every index a component may live at, grouped by size, lexicographic.
    pub fn indices(&self) -> Vec<MultiIndex> {
        let mut all = all_subsets(self.k);
        if self.truncated {
            all.pop();
        }
        all
    }

    pub fn get(&self, index: &MultiIndex) -> Option<&[Rat]> {
        self.components.get(index).map(Vec::as_slice)
    }

    /// Component at `index`, with absent indices read as zero.
    pub fn component(&self, index: &MultiIndex) -> Vec<Rat> {
        self.get(index).map_or_else(|| vec![Rat::ZERO; self.fiber_dim], <[Rat]>::to_vec)
    }

    fn check_index(&self, index: &MultiIndex) -> Result<()> {
        if index.ambient() != self.k {
            return Err(Error::InvalidArgument(format!(
                "index {index} has ambient {}, family has k = {}",
                index.ambient(),
                self.k
            )));
        }
        if self.truncated && index.is_full() {
            return Err(Error::InvalidArgument(format!(
                "truncated family has no component at {index}"
            )));
        }
        Ok(())
    }

    pub fn set(&mut self, index: MultiIndex, value: Vec<Rat>) -> Result<()> {
        self.check_index(&index)?;
        if value.len() != self.fiber_dim {
            return Err(Error::ShapeMismatch(format!(
                "component at {index} has length {}, fiber dimension is {}",
                value.len(),
                self.fiber_dim
            )));
        }
        if value.iter().all(Rat::is_zero) {
            self.components.remove(&index);
        } else {
            self.components.insert(index, value);
        }
        Ok(())
    }

    /// Add `value` into the component at `index`.
    pub fn add_to(&mut self, index: MultiIndex, value: &[Rat]) -> Result<()> {
        let mut current = self.component(&index);
        for (c, v) in current.iter_mut().zip(value) {
            *c += v;
        }
        self.set(index, current)
    }

    /// Components with `|I| = m`, lexicographic, zeros included.
    pub fn degree_part(&self, m: usize) -> Vec<(MultiIndex, Vec<Rat>)> {
        self.indices()
            .into_iter()
            .filter(|i| i.len() == m)
            .map(|i| {
                let v = self.component(&i);
                (i, v)
            })
            .collect()
    }

    pub fn add(&self, other: &TanFamily) -> TanFamily {
        let mut out = self.clone();
        for (i, v) in &other.components {
            out.add_to(i.clone(), v).expect("matching shapes");
        }
        out
    }
}

impl fmt::Display for TanFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(i, v)| {
                let v: Vec<String> = v.iter().map(ToString::to_string).collect();
                format!("{i}: [{}]", v.join(", "))
            })
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub(crate) struct FamilyDoc {
    pub k: usize,
    pub fiber_dim: usize,
    #[serde(default)]
    pub truncated: bool,
    pub components: Vec<(MultiIndex, Vec<Rat>)>,
}

impl FamilyDoc {
    pub(crate) fn into_family(self, field: &str) -> Result<TanFamily> {
        let mut out = TanFamily::zero(self.k, self.fiber_dim, self.truncated);
        for (n, (index, value)) in self.components.into_iter().enumerate() {
            let index = index
                .with_ambient(self.k)
                .map_err(|e| Error::Parse(format!("{field}.components[{n}]: {e}")))?;
            if out.get(&index).is_some() {
                return Err(Error::Parse(format!("{field}.components[{n}]: repeated index {index}")));
            }
            out.set(index, value).map_err(|e| Error::Parse(format!("{field}.components[{n}]: {e}")))?;
        }
        Ok(out)
    }
}

impl From<&TanFamily> for FamilyDoc {
    fn from(w: &TanFamily) -> FamilyDoc {
        FamilyDoc {
            k: w.k,
            fiber_dim: w.fiber_dim,
            truncated: w.truncated,
            components: w.components.iter().map(|(i, v)| (i.clone(), v.clone())).collect(),
        }
    }
}

/// Serialized as `{k, fiberDim, truncated, components: [[index, vector], ...]}`.
impl Serialize for TanFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FamilyDoc::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for TanFamily {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        FamilyDoc::deserialize(d)?.into_family("family").map_err(serde::de::Error::custom)
    }
}

/// `(σ_i w)^I = w^{push(I, i)}`, plus `w^{push(I, i-1)}` when `i ∈ I`.
pub fn sigma(w: &TanFamily, i: usize) -> Result<TanFamily> {
    if w.k == 0 || i >= w.k {
        return Err(Error::OutOfRange(format!("σ_{i} on a family with k = {}", w.k)));
    }
    let mut out = TanFamily::zero(w.k - 1, w.fiber_dim, false);
    let i = i as isize;
    for index in all_subsets(w.k - 1) {
        let mut value = w.component(&index.push(i));
        if index.contains(i) {
            for (x, y) in value.iter_mut().zip(w.component(&index.push(i - 1))) {
                *x += y;
            }
        }
        out.set(index, value)?;
    }
    Ok(out)
}

/// `(coface_j x)^J = x^I` for `J = push(I, j - 1)`, zero off that image.
pub fn coface(x: &TanFamily, j: usize) -> Result<TanFamily> {
    if j > x.k + 1 {
        return Err(Error::OutOfRange(format!("coface {j} on a family with k = {}", x.k)));
    }
    let mut out = TanFamily::zero(x.k + 1, x.fiber_dim, false);
    for (index, value) in &x.components {
        out.set(index.push(j as isize - 1), value.clone())?;
    }
    Ok(out)
}

/// Members `v_0, ..., v_{k-1}` of ambient `k - 1` meant to be `σ_i` of one
/// family of ambient `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatFamily {
    k: usize,
    fiber_dim: usize,
    members: Vec<TanFamily>,
}

impl CompatFamily {
    pub fn new(k: usize, fiber_dim: usize, members: Vec<TanFamily>) -> Result<CompatFamily> {
        if k == 0 {
            return Err(Error::InvalidArgument("compatible families need k ≥ 1".into()));
        }
        if members.len() != k {
            return Err(Error::ShapeMismatch(format!("k = {k} needs {k} members, found {}", members.len())));
        }
        for (i, v) in members.iter().enumerate() {
            if v.k != k - 1 || v.fiber_dim != fiber_dim || v.truncated {
                return Err(Error::ShapeMismatch(format!(
                    "member {i} must be an untruncated family with k = {} and fiber {fiber_dim}",
                    k - 1
                )));
            }
        }
        Ok(CompatFamily { k, fiber_dim, members })
    }

    /// `v_i = σ_i w`.
    pub fn from_sigmas(w: &TanFamily) -> CompatFamily {
        let members = (0..w.k).map(|i| sigma(w, i).expect("i < k")).collect();
        CompatFamily { k: w.k, fiber_dim: w.fiber_dim, members }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn fiber_dim(&self) -> usize {
        self.fiber_dim
    }

    pub fn members(&self) -> &[TanFamily] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &TanFamily {
        &self.members[i]
    }

    pub fn members_mut(&mut self) -> &mut [TanFamily] {
        &mut self.members
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct CompatDoc {
    format_version: u32,
    k: usize,
    fiber_dim: usize,
    members: Vec<Vec<(MultiIndex, Vec<Rat>)>>,
}

/// Versioned document: `{formatVersion, k, fiberDim, members: [components...]}`.
pub fn compat_to_json(f: &CompatFamily) -> String {
    let doc = CompatDoc {
        format_version: crate::simplicial::format::FORMAT_VERSION,
        k: f.k,
        fiber_dim: f.fiber_dim,
        members: f.members.iter().map(|v| FamilyDoc::from(v).components).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn compat_from_json(text: &str) -> Result<CompatFamily> {
    use crate::simplicial::format::{check_version, json_error};
    let doc: CompatDoc = serde_json::from_str(text).map_err(json_error)?;
    check_version(doc.format_version)?;
    if doc.k == 0 {
        return Err(Error::Parse("k: must be at least 1".into()));
    }
    let members = doc
        .members
        .into_iter()
        .enumerate()
        .map(|(i, components)| {
            FamilyDoc { k: doc.k - 1, fiber_dim: doc.fiber_dim, truncated: false, components }
                .into_family(&format!("members[{i}]"))
        })
        .collect::<Result<Vec<_>>>()?;
    CompatFamily::new(doc.k, doc.fiber_dim, members).map_err(|e| Error::Parse(format!("members: {e}")))
}

/// First failure of `σ_i v_{j+1} = σ_j v_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompatViolation {
    pub i: usize,
    pub j: usize,
    pub index: MultiIndex,
}

impl fmt::Display for CompatViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = (self.i, self.j);
        write!(f, "σ_{i} v_{} ≠ σ_{j} v_{i} at {}", j + 1, self.index)
    }
}

/// `None` iff `σ_i v_{j+1} = σ_j v_i` for all `0 ≤ i ≤ j ≤ k - 2`.
pub fn check_compatible(f: &CompatFamily) -> Option<CompatViolation> {
    for j in 0..f.k.saturating_sub(1) {
        for i in 0..=j {
            let lhs = sigma(&f.members[j + 1], i).expect("i < k - 1");
            let rhs = sigma(&f.members[i], j).expect("j < k - 1");
            if lhs != rhs {
                let index = lhs
                    .indices()
                    .into_iter()
                    .find(|x| lhs.component(x) != rhs.component(x))
                    .expect("unequal families differ somewhere");
                return Some(CompatViolation { i, j, index });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(e: &[usize], k: usize) -> MultiIndex {
        MultiIndex::new(e.to_vec(), k).unwrap()
    }

    fn int(n: i64) -> Vec<Rat> {
        vec![Rat::from_int(n)]
    }

    #[test]
    fn sigma_examples() {
        let mut w = TanFamily::zero(2, 1, true);
        w.set(idx(&[1], 2), int(5)).unwrap();
        w.set(idx(&[2], 2), int(7)).unwrap();
        assert_eq!(sigma(&w, 0).unwrap().component(&idx(&[1], 1)), int(7));
        assert_eq!(sigma(&w, 1).unwrap().component(&idx(&[1], 1)), int(12));
        assert!(sigma(&TanFamily::zero(3, 2, true), 1).unwrap().is_zero());
        assert!(sigma(&w, 2).is_err());
    }

    #[test]
    fn coface_examples() {
        let mut x = TanFamily::zero(1, 1, false);
        x.set(idx(&[1], 1), int(4)).unwrap();
        let c2 = coface(&x, 2).unwrap();
        assert_eq!(c2.component(&idx(&[1], 2)), int(4));
        assert_eq!(c2.component(&idx(&[2], 2)), int(0));
        let c0 = coface(&x, 0).unwrap();
        assert_eq!(c0.component(&idx(&[2], 2)), int(4));
        assert_eq!(c0.component(&idx(&[1], 2)), int(0));
        assert!(coface(&TanFamily::zero(1, 1, false), 1).unwrap().is_zero());
    }

    #[test]
    fn truncated_rejects_full_index() {
        let mut w = TanFamily::zero(2, 1, true);
        assert!(w.set(idx(&[1, 2], 2), int(1)).is_err());
        assert!(w.set(idx(&[1], 3), int(1)).is_err());
        assert!(w.set(idx(&[1], 2), vec![]).is_err());
    }

    #[test]
    fn k2_is_compatible_when_empty_components_agree() {
        let mut v0 = TanFamily::zero(1, 1, false);
        v0.set(idx(&[1], 1), int(1)).unwrap();
        let mut v1 = TanFamily::zero(1, 1, false);
        v1.set(idx(&[1], 1), int(3)).unwrap();
        let f = CompatFamily::new(2, 1, vec![v0, v1.clone()]).unwrap();
        assert_eq!(check_compatible(&f), None);
        v1.set(MultiIndex::empty(1), int(1)).unwrap();
        let g = CompatFamily::new(2, 1, vec![f.member(0).clone(), v1]).unwrap();
        assert_eq!(check_compatible(&g).unwrap().index, MultiIndex::empty(0));
    }

    #[test]
    fn json_roundtrip() {
        let mut w = TanFamily::zero(3, 2, true);
        w.set(idx(&[1, 3], 3), vec![Rat::new(1, 2), Rat::from_int(-3)]).unwrap();
        let text = serde_json::to_string(&w).unwrap();
        assert_eq!(serde_json::from_str::<TanFamily>(&text).unwrap(), w);
        let f = CompatFamily::from_sigmas(&w);
        assert_eq!(compat_from_json(&compat_to_json(&f)).unwrap(), f);
    }

    #[test]
    fn compat_document_errors_carry_fields() {
        let text = r#"{"formatVersion":1,"k":2,"fiberDim":1,"members":[[[[1],["1"]]],[[[2],["3"]]]]}"#;
        let err = compat_from_json(text).unwrap_err().to_string();
        assert!(err.contains("members[1].components[0]"), "{err}");
    }
}
