//! JSON structure-constant files.
//!
//! ```json
//! {"dim": 2, "conductor": 1,
//!  "mul": [[0,0,0,"1"], [0,1,1,"1"], [1,0,1,"1"], [1,1,0,"1"]],
//!  "comul": [[0,0,0,"1"], [1,1,1,"1"]],
//!  "antipode": [["1","0"], ["0","1"]],
//!  "counit": ["1","1"], "unit": ["1","0"]}
//! ```
//!
//! `mul` and `comul` list nonzero `[i, j, k, coeff]` entries (0-based, omitted
//! entries are zero); `antipode` row `i` is `S(x_i)`. Scalars are strings
//! (`"a/b"` or `"[a0, a1, ...]@N"`); bare JSON integers are accepted on input.

use serde::{Deserialize, Serialize};

use super::HopfData;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::FieldScalar;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Text(String),
    Int(i64),
}

impl ScalarRepr {
    pub fn parse(&self) -> Result<FieldScalar> {
        match self {
            ScalarRepr::Text(s) => Ok(s.parse()?),
            ScalarRepr::Int(v) => Ok(FieldScalar::from_int(*v)),
        }
    }
}

/// Serialized form of [`HopfData`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HopfFile {
    pub dim: usize,
    pub conductor: u32,
    pub mul: Vec<(usize, usize, usize, ScalarRepr)>,
    pub comul: Vec<(usize, usize, usize, ScalarRepr)>,
    pub antipode: Vec<Vec<ScalarRepr>>,
    pub counit: Vec<ScalarRepr>,
    pub unit: Vec<ScalarRepr>,
}

/// Writes rational values as `a/b`, others in the ambient field.
pub fn format_scalar(s: &FieldScalar, conductor: u32) -> String {
    match s.as_rational() {
        Some(q) => q.to_string(),
        None => s.display_in(conductor),
    }
}

fn parse_vec(v: &[ScalarRepr], n: usize, what: &str) -> Result<Vec<FieldScalar>> {
    if v.len() != n {
        return Err(Error::InvalidInput(format!("{what} has length {}, expected {n}", v.len())));
    }
    v.iter().map(ScalarRepr::parse).collect()
}

fn dense_tensor(entries: &[(usize, usize, usize, ScalarRepr)], n: usize, what: &str) -> Result<Vec<FieldScalar>> {
    let mut t = vec![FieldScalar::zero(); n * n * n];
    for (i, j, k, c) in entries {
        if *i >= n || *j >= n || *k >= n {
            return Err(Error::InvalidInput(format!("{what} index ({i}, {j}, {k}) out of range for dim {n}")));
        }
        t[(i * n + j) * n + k] += &c.parse()?;
    }
    Ok(t)
}

impl HopfFile {
    pub fn into_hopf(self) -> Result<HopfData> {
        let n = self.dim;
        let mul = dense_tensor(&self.mul, n, "mul")?;
        let comul = dense_tensor(&self.comul, n, "comul")?;
        if self.antipode.len() != n {
            return Err(Error::InvalidInput(format!("antipode has {} rows, expected {n}", self.antipode.len())));
        }
        let rows = self
            .antipode
            .iter()
            .map(|r| parse_vec(r, n, "antipode row"))
            .collect::<Result<Vec<_>>>()?;
        let antipode = Matrix::from_rows(rows)?;
        let counit = parse_vec(&self.counit, n, "counit")?;
        let unit = parse_vec(&self.unit, n, "unit")?;
        HopfData::new(n, self.conductor, mul, comul, antipode, counit, unit)
    }

    pub fn from_hopf(h: &HopfData) -> Self {
        let n = h.dim();
        let c = h.conductor();
        let text = |s: &FieldScalar| ScalarRepr::Text(format_scalar(s, c));
        let sparse = |t: &[FieldScalar]| {
            let mut out = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let v = &t[(i * n + j) * n + k];
                        if !v.is_zero() {
                            out.push((i, j, k, text(v)));
                        }
                    }
                }
            }
            out
        };
        HopfFile {
            dim: n,
            conductor: c,
            mul: sparse(h.mul_tensor()),
            comul: sparse(h.comul_tensor()),
            antipode: (0..n)
                .map(|i| h.antipode_matrix().row(i).iter().map(text).collect())
                .collect(),
            counit: h.counit().iter().map(text).collect(),
            unit: h.unit().coeffs().iter().map(text).collect(),
        }
    }
}

impl HopfData {
    pub fn from_json(s: &str) -> Result<HopfData> {
        serde_json::from_str::<HopfFile>(s)?.into_hopf()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&HopfFile::from_hopf(self)).expect("plain data serializes")
    }
}
