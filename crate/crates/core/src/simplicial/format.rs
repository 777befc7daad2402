//! Versioned JSON interchange for simplicial vector spaces and chain complexes.
//!
//! ```json
//! { "formatVersion": 1, "maxLevel": 2, "dims": [0, 1, 2],
//!   "faces": [[], [[], []], [[["0","1"]], [["1","1"]], [["1","0"]]]],
//!   "degens": [[[[]]], [[["0"],["1"]], [["1"],["0"]]]] }
//! ```
//!
//! Matrices are row-major arrays of rational strings (`"p/q"` or `"p"`).
//! A `0 x c` matrix is written `[]`; a `r x 0` matrix as `r` empty rows.

use serde::{Deserialize, Serialize};

use super::{ChainComplex, SimplicialVS};
use crate::error::{Error, Result};
use crate::exactla::{Mat, Rat};

pub const FORMAT_VERSION: u32 = 1;

type RawMat = Vec<Vec<Rat>>;

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct SimplicialDoc {
    format_version: u32,
    max_level: usize,
    dims: Vec<usize>,
    faces: Vec<Vec<RawMat>>,
    degens: Vec<Vec<RawMat>>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct ComplexDoc {
    format_version: u32,
    dims: Vec<usize>,
    diffs: Vec<RawMat>,
}

pub(crate) fn check_version(found: u32) -> Result<()> {
    if found != FORMAT_VERSION {
        return Err(Error::Parse(format!(
            "formatVersion: expected {FORMAT_VERSION}, found {found}"
        )));
    }
    Ok(())
}

pub(crate) fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn matrix(raw: RawMat, rows: usize, cols: usize, field: &str) -> Result<Mat> {
    Mat::from_serialized(raw, rows, cols).map_err(|e| Error::Parse(format!("{field}: {e}")))
}

pub fn simplicial_to_json(s: &SimplicialVS) -> String {
    let doc = SimplicialDoc {
        format_version: FORMAT_VERSION,
        max_level: s.max_level(),
        dims: s.dims().to_vec(),
        faces: s.faces().iter().map(|row| row.iter().map(Mat::to_rows).collect()).collect(),
        degens: s.degens().iter().map(|row| row.iter().map(Mat::to_rows).collect()).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn simplicial_from_json(text: &str) -> Result<SimplicialVS> {
    let doc: SimplicialDoc = serde_json::from_str(text).map_err(json_error)?;
    check_version(doc.format_version)?;
    let n = doc.max_level;
    if doc.dims.len() != n + 1 {
        return Err(Error::Parse(format!(
            "dims: maxLevel {n} needs {} entries, found {}",
            n + 1,
            doc.dims.len()
        )));
    }
    if doc.faces.len() != n + 1 {
        return Err(Error::Parse(format!("faces: expected {} levels, found {}", n + 1, doc.faces.len())));
    }
    if doc.degens.len() != n {
        return Err(Error::Parse(format!("degens: expected {n} levels, found {}", doc.degens.len())));
    }
    let dims = doc.dims;
    let mut faces = Vec::with_capacity(n + 1);
    for (l, row) in doc.faces.into_iter().enumerate() {
        let expected = if l == 0 { 0 } else { l + 1 };
        if row.len() != expected {
            return Err(Error::Parse(format!("faces[{l}]: expected {expected} maps, found {}", row.len())));
        }
        let mats = row
            .into_iter()
            .enumerate()
            .map(|(i, m)| matrix(m, dims[l - 1], dims[l], &format!("faces[{l}][{i}]")))
            .collect::<Result<Vec<_>>>()?;
        faces.push(mats);
    }
    let mut degens = Vec::with_capacity(n);
    for (l, row) in doc.degens.into_iter().enumerate() {
        if row.len() != l + 1 {
            return Err(Error::Parse(format!("degens[{l}]: expected {} maps, found {}", l + 1, row.len())));
        }
        let mats = row
            .into_iter()
            .enumerate()
            .map(|(i, m)| matrix(m, dims[l + 1], dims[l], &format!("degens[{l}][{i}]")))
            .collect::<Result<Vec<_>>>()?;
        degens.push(mats);
    }
    SimplicialVS::new(dims, faces, degens)
}

pub fn complex_to_json(c: &ChainComplex) -> String {
    let doc = ComplexDoc {
        format_version: FORMAT_VERSION,
        dims: c.dims().to_vec(),
        diffs: c.diffs().iter().map(Mat::to_rows).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn complex_from_json(text: &str) -> Result<ChainComplex> {
    let doc: ComplexDoc = serde_json::from_str(text).map_err(json_error)?;
    check_version(doc.format_version)?;
    if doc.dims.is_empty() {
        return Err(Error::Parse("dims: at least degree 0 is required".into()));
    }
    if doc.diffs.len() + 1 != doc.dims.len() {
        return Err(Error::Parse(format!(
            "diffs: expected {} matrices, found {}",
            doc.dims.len() - 1,
            doc.diffs.len()
        )));
    }
    let diffs = doc
        .diffs
        .into_iter()
        .enumerate()
        .map(|(i, m)| matrix(m, doc.dims[i], doc.dims[i + 1], &format!("diffs[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    ChainComplex::new(doc.dims, diffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::dk_realize;

    #[test]
    fn simplicial_roundtrip() {
        let d = Mat::from_ints(&[[1, 1]]);
        let c = ChainComplex::new(vec![1, 2, 0], vec![d, Mat::zeros(2, 0)]).unwrap();
        let s = dk_realize(&c, 3).unwrap();
        assert_eq!(simplicial_from_json(&simplicial_to_json(&s)).unwrap(), s);
        assert_eq!(complex_from_json(&complex_to_json(&c)).unwrap(), c);
    }

    #[test]
    fn documented_example_parses() {
        let text = r#"{ "formatVersion": 1, "maxLevel": 2, "dims": [0, 1, 2],
          "faces": [[], [[], []], [[["0","1"]], [["1","1"]], [["1","0"]]]],
          "degens": [[[[]]], [[["0"],["1"]], [["1"],["0"]]]] }"#;
        let s = simplicial_from_json(text).unwrap();
        assert_eq!(s.dims(), &[0, 1, 2]);
        assert!(crate::simplicial::validate(&s).is_empty());
    }

    #[test]
    fn errors_name_the_field() {
        let text = r#"{ "formatVersion": 1, "dims": [1, 1], "diffs": [[["1", "2"]]] }"#;
        let err = complex_from_json(text).unwrap_err().to_string();
        assert!(err.contains("diffs[0]"), "{err}");
        let text = r#"{ "formatVersion": 2, "dims": [1], "diffs": [] }"#;
        assert!(complex_from_json(text).unwrap_err().to_string().contains("formatVersion"));
        let err = complex_from_json("{\n \"dims\": [1,\n").unwrap_err().to_string();
        assert!(err.contains("line"), "{err}");
    }
}
