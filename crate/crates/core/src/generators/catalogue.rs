use serde::Serialize;

use super::{nerve_group_vs, nerve_pair_groupoid, wbar};
use crate::error::{Error, Result};
use crate::exactla::{Mat, Rat};
use crate::simplicial::{dk_realize, ChainComplex, SimplicialVS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Point,
    NerveGroup,
    PairGroupoid,
    CrossedModule,
    Ntower,
    Wbar,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Point,
        Family::NerveGroup,
        Family::PairGroupoid,
        Family::CrossedModule,
        Family::Ntower,
        Family::Wbar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Point => "point",
            Family::NerveGroup => "nerve-group",
            Family::PairGroupoid => "pair-groupoid",
            Family::CrossedModule => "crossed-module",
            Family::Ntower => "ntower",
            Family::Wbar => "wbar",
        }
    }

    fn default_dims(self) -> Vec<usize> {
        match self {
            Family::Point => vec![],
            Family::NerveGroup | Family::PairGroupoid | Family::Wbar => vec![1],
            Family::CrossedModule => vec![2, 1],
            Family::Ntower => vec![1, 1, 1],
        }
    }
}

/// A named instance: a generator plus its dimension parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExampleSpec {
    pub name: String,
    pub family: Family,
    pub dims: Vec<usize>,
    pub max_level: usize,
}

impl ExampleSpec {
    pub fn new(family: Family, dims: Vec<usize>, max_level: usize) -> Result<ExampleSpec> {
        let arity_ok = match family {
            Family::Point => dims.is_empty(),
            Family::NerveGroup | Family::PairGroupoid | Family::Wbar => dims.len() == 1,
            Family::CrossedModule => dims.len() == 2,
            Family::Ntower => !dims.is_empty(),
        };
        if !arity_ok {
            return Err(Error::InvalidArgument(format!(
                "{} does not take dimensions {dims:?}",
                family.name()
            )));
        }
        let min_level = match family {
            Family::Point => 0,
            Family::NerveGroup | Family::PairGroupoid => 1,
            Family::CrossedModule => 2,
            Family::Ntower => dims.len(),
            Family::Wbar => 2,
        };
        if max_level < min_level {
            return Err(Error::InvalidArgument(format!(
                "{} needs max level at least {min_level}",
                family.name()
            )));
        }
        let dims_label = dims.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        let name = if dims.is_empty() {
            family.name().to_string()
        } else {
            format!("{} d=({dims_label})", family.name())
        };
        Ok(ExampleSpec { name, family, dims, max_level })
    }

    pub fn build(&self) -> SimplicialVS {
        let n = self.max_level;
        match self.family {
            Family::Point => nerve_group_vs(0, n),
            Family::NerveGroup => nerve_group_vs(self.dims[0], n),
            Family::PairGroupoid => nerve_pair_groupoid(self.dims[0], n),
            Family::CrossedModule => {
                dk_realize(&crossed_module(self.dims[0], self.dims[1]), n).expect("level checked")
            }
            Family::Ntower => {
                let mut dims = vec![0];
                dims.extend(&self.dims);
                dk_realize(&ChainComplex::zero_differential(dims), n).expect("level checked")
            }
            Family::Wbar => {
                let c = ChainComplex::zero_differential(vec![0, self.dims[0]]);
                wbar(&dk_realize(&c, n).expect("level checked"))
            }
        }
    }

    /// Tangent-complex dimensions in degrees `0..`, trailing zeros dropped.
    pub fn expected_tangent(&self) -> Vec<usize> {
        let mut out = match self.family {
            Family::Point => vec![0],
            Family::NerveGroup => vec![0, self.dims[0]],
            Family::PairGroupoid => vec![self.dims[0], self.dims[0]],
            Family::CrossedModule => vec![0, self.dims[0], self.dims[1]],
            Family::Ntower => std::iter::once(0).chain(self.dims.iter().copied()).collect(),
            Family::Wbar => vec![0, 0, self.dims[0]],
        };
        while out.len() > 1 && out.last() == Some(&0) {
            out.pop();
        }
        out
    }
}

/// Two-term complex `h -> g` with `∂` the inclusion of the first coordinates.
fn crossed_module(g: usize, h: usize) -> ChainComplex {
    let mut d = Mat::zeros(g, h);
    for t in 0..g.min(h) {
        d.set(t, t, Rat::ONE);
    }
    ChainComplex::new(vec![0, g, h], vec![Mat::zeros(0, g), d]).expect("two-term complex")
}

pub fn preset(name: &str, dims: Option<Vec<usize>>, max_level: Option<usize>) -> Result<ExampleSpec> {
    let family = Family::ALL
        .into_iter()
        .find(|f| f.name() == name)
        .ok_or_else(|| {
            let known: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
            Error::InvalidArgument(format!("unknown example {name:?}; known: {}", known.join(", ")))
        })?;
    let dims = dims.unwrap_or_else(|| family.default_dims());
    let default_level = (dims.len() + 2).max(4);
    ExampleSpec::new(family, dims, max_level.unwrap_or(default_level))
}

/// Deterministic preset list.
pub fn catalogue() -> Vec<ExampleSpec> {
    Family::ALL
        .into_iter()
        .flat_map(|f| match f {
            Family::NerveGroup | Family::PairGroupoid => vec![vec![1], vec![2]],
            _ => vec![f.default_dims()],
        }.into_iter().map(move |d| (f, d)))
        .map(|(f, d)| preset(f.name(), Some(d), None).expect("catalogue presets are valid"))
        .collect()
}

/// Tangent dimension profiles of instances with no linear model here.
#[derive(Clone, Debug, Serialize)]
pub struct DocFixture {
    pub name: &'static str,
    pub expected_tangent: Vec<String>,
}

pub fn documentation_fixtures() -> Vec<DocFixture> {
    vec![
        DocFixture {
            name: "courant (dim M = n)",
            expected_tangent: vec!["0".into(), "2n".into(), "n".into()],
        },
        DocFixture {
            name: "string group",
            expected_tangent: vec!["0".into(), "dim g".into(), "1".into()],
        },
        DocFixture {
            name: "central extension by a",
            expected_tangent: vec!["0".into(), "dim g + dim b".into(), "dim a".into()],
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::validate;

    #[test]
    fn presets_validate() {
        for spec in catalogue() {
            assert!(validate(&spec.build()).is_empty(), "{}", spec.name);
        }
    }

    #[test]
    fn preset_names_and_arity() {
        assert_eq!(preset("crossed-module", None, None).unwrap().expected_tangent(), vec![0, 2, 1]);
        assert_eq!(preset("ntower", None, None).unwrap().expected_tangent(), vec![0, 1, 1, 1]);
        assert_eq!(preset("point", None, None).unwrap().expected_tangent(), vec![0]);
        assert!(preset("nope", None, None).is_err());
        assert!(preset("crossed-module", Some(vec![1]), None).is_err());
        assert!(preset("ntower", Some(vec![1, 1, 1]), Some(2)).is_err());
    }
}
