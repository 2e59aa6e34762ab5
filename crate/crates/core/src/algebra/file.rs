//! JSON file format for custom twin algebras.
//!
//! ```json
//! {
//!   "rank_C": 2,
//!   "rank_W": 2,
//!   "C": { "mult": [[["1", "0"], ...]], "unit": [...], "comult": [...], "counit": [...] },
//!   "W": { ... },
//!   "z": [["1", "0"], ["0", "1"]],
//!   "zstar": [["-i", "0"], ["0", "-i"]]
//! }
//! ```
//!
//! `mult[i][j][k]` is the coefficient of `e_k` in `m(e_i ⊗ e_j)`,
//! `comult[i][j][k]` the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`, and `z` is
//! given row by row as a `rank_W x rank_C` matrix (`zstar` as `rank_C x rank_W`).
//! Entries use the polynomial text syntax.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::Matrix;
use crate::ring::{parse_poly, PolyParseError, RingPoly};

use super::{AlgebraError, FrobeniusPresentation, TwinAlgebraPresentation};

#[derive(Debug, Error)]
pub enum AlgebraFileError {
    #[error("invalid algebra file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad polynomial in {field}: {source}")]
    Poly { field: String, source: PolyParseError },
    #[error(transparent)]
    Shape(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FrobeniusFile {
    mult: Vec<Vec<Vec<String>>>,
    unit: Vec<String>,
    comult: Vec<Vec<Vec<String>>>,
    counit: Vec<String>,
}

/// Serialized form of a [`TwinAlgebraPresentation`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwinAlgebraFile {
    #[serde(rename = "rank_C")]
    rank_c: usize,
    #[serde(rename = "rank_W")]
    rank_w: usize,
    #[serde(rename = "C")]
    c: FrobeniusFile,
    #[serde(rename = "W")]
    w: FrobeniusFile,
    z: Vec<Vec<String>>,
    zstar: Vec<Vec<String>>,
}

fn poly(field: &str, s: &str) -> Result<RingPoly, AlgebraFileError> {
    parse_poly(s).map_err(|source| AlgebraFileError::Poly { field: field.to_string(), source })
}

fn vec_in(field: &str, v: &[String]) -> Result<Vec<RingPoly>, AlgebraFileError> {
    v.iter().map(|s| poly(field, s)).collect()
}

fn cube_in(field: &str, c: &[Vec<Vec<String>>]) -> Result<Vec<Vec<Vec<RingPoly>>>, AlgebraFileError> {
    c.iter().map(|a| a.iter().map(|b| vec_in(field, b)).collect()).collect()
}

fn matrix_in(field: &str, rows: &[Vec<String>], shape: (usize, usize)) -> Result<Matrix, AlgebraFileError> {
    if rows.len() != shape.0 || rows.iter().any(|r| r.len() != shape.1) {
        return Err(AlgebraError::Shape(format!("{field} must be {}x{}", shape.0, shape.1)).into());
    }
    let parsed = rows.iter().map(|r| vec_in(field, r)).collect::<Result<Vec<_>, _>>()?;
    Ok(if shape.0 == 0 { Matrix::zeros(0, shape.1) } else { Matrix::from_rows(parsed) })
}

fn text_vec(v: &[RingPoly]) -> Vec<String> {
    v.iter().map(RingPoly::to_text).collect()
}

fn text_cube(c: &[Vec<Vec<RingPoly>>]) -> Vec<Vec<Vec<String>>> {
    c.iter().map(|a| a.iter().map(|b| text_vec(b)).collect()).collect()
}

impl FrobeniusFile {
    fn from_presentation(p: &FrobeniusPresentation) -> Self {
        Self { mult: text_cube(&p.mult), unit: text_vec(&p.unit), comult: text_cube(&p.comult), counit: text_vec(&p.counit) }
    }

    fn to_presentation(&self, name: &str, rank: usize) -> Result<FrobeniusPresentation, AlgebraFileError> {
        let p = FrobeniusPresentation {
            rank,
            mult: cube_in(&format!("{name}.mult"), &self.mult)?,
            unit: vec_in(&format!("{name}.unit"), &self.unit)?,
            comult: cube_in(&format!("{name}.comult"), &self.comult)?,
            counit: vec_in(&format!("{name}.counit"), &self.counit)?,
        };
        p.validate_shape()?;
        Ok(p)
    }
}

impl TwinAlgebraFile {
    pub fn from_presentation(t: &TwinAlgebraPresentation) -> Self {
        Self {
            rank_c: t.c.rank,
            rank_w: t.w.rank,
            c: FrobeniusFile::from_presentation(&t.c),
            w: FrobeniusFile::from_presentation(&t.w),
            z: t.z.to_text_rows(),
            zstar: t.zstar.to_text_rows(),
        }
    }

    pub fn to_presentation(&self) -> Result<TwinAlgebraPresentation, AlgebraFileError> {
        let t = TwinAlgebraPresentation {
            c: self.c.to_presentation("C", self.rank_c)?,
            w: self.w.to_presentation("W", self.rank_w)?,
            z: matrix_in("z", &self.z, (self.rank_w, self.rank_c))?,
            zstar: matrix_in("zstar", &self.zstar, (self.rank_c, self.rank_w))?,
        };
        t.validate_shape()?;
        Ok(t)
    }

    pub fn parse(text: &str) -> Result<TwinAlgebraPresentation, AlgebraFileError> {
        serde_json::from_str::<TwinAlgebraFile>(text)?.to_presentation()
    }

    /// Canonical text: pretty JSON with canonical polynomial strings.
    pub fn render(t: &TwinAlgebraPresentation) -> String {
        let mut s = serde_json::to_string_pretty(&Self::from_presentation(t)).expect("plain data serializes");
        s.push('\n');
        s
    }
}
