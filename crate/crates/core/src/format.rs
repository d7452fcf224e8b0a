//! The JSON structure-constant file.
//!
//! ```json
//! {
//!   "alpha": [["2", "0"], ["-1", "1"]],
//!   "basis": ["e1", "e2"],
//!   "dim": 2,
//!   "mul": [[["1", "0"], ["0", "1"]], [["0", "1"], ["0", "1"]]],
//!   "scalars": "rational",
//!   "unit": ["1", "0"]
//! }
//! ```
//!
//! `mul[i][j]` holds the coordinates of `e_i e_j`; matrices are lists of
//! rows; `comul[x]` lists `[coef, i, j]` for the terms `coef · e_i ⊗ e_j` of
//! `Δ(e_x)`. The algebra part (`mul`, `unit`, `alpha`) and the coalgebra
//! part (`comul`, `counit`, `beta`) are each optional but all-or-nothing.
//! `grading` and `truncation` describe a degree truncation.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{LinMap, SparseVec, Vector};
use crate::structures::{HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfCandidate, Truncation};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    dim: usize,
    basis: Option<Vec<String>>,
    scalars: Option<String>,
    mul: Option<Vec<Vec<Vec<String>>>>,
    unit: Option<Vec<String>>,
    alpha: Option<Vec<Vec<String>>>,
    comul: Option<Vec<Vec<(String, usize, usize)>>>,
    counit: Option<Vec<String>>,
    beta: Option<Vec<Vec<String>>>,
    antipode: Option<Vec<Vec<String>>>,
    params: Option<BTreeMap<String, String>>,
    grading: Option<Vec<u32>>,
    truncation: Option<u32>,
}

/// A parsed structure file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFile {
    pub basis: Vec<String>,
    pub algebra: Option<HomAlgebra>,
    pub coalgebra: Option<HomCoalgebra>,
    pub antipode: Option<LinMap>,
    pub params: BTreeMap<String, Scalar>,
    pub truncation: Option<Truncation>,
}

fn format_err(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

fn scalars(values: &[String]) -> Result<Vec<Scalar>> {
    values.iter().map(|s| s.parse()).collect()
}

fn vector(values: &[String], n: usize, what: &str) -> Result<Vector> {
    if values.len() != n {
        return Err(Error::dims(what, n, values.len()));
    }
    Ok(Vector(scalars(values)?))
}

fn matrix(rows: &[Vec<String>], n: usize, what: &str) -> Result<LinMap> {
    if rows.len() != n {
        return Err(Error::dims(what, n, rows.len()));
    }
    let parsed = rows
        .iter()
        .map(|r| {
            if r.len() != n {
                return Err(Error::dims(what, n, r.len()));
            }
            scalars(r)
        })
        .collect::<Result<Vec<_>>>()?;
    LinMap::from_rows(&parsed, n)
}

fn default_basis(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl StructureFile {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: Raw = serde_json::from_str(text).map_err(|e| Error::Parse {
            message: e.to_string(),
            line: e.line(),
            column: e.column(),
        })?;
        let n = raw.dim;
        if n == 0 {
            return Err(format_err("dim must be positive"));
        }
        if let Some(s) = &raw.scalars {
            if s != "rational" {
                return Err(format_err(format!("unsupported scalars {s:?}")));
            }
        }
        let basis = match raw.basis {
            Some(b) if b.len() != n => return Err(Error::dims("basis", n, b.len())),
            Some(b) => b,
            None => default_basis(n),
        };
        let truncation = match (raw.grading, raw.truncation) {
            (Some(grading), Some(max_degree)) => {
                if grading.len() != n {
                    return Err(Error::dims("grading", n, grading.len()));
                }
                Some(Truncation {
                    grading,
                    max_degree,
                })
            }
            (None, None) => None,
            _ => return Err(format_err("grading and truncation must appear together")),
        };
        let algebra = match (raw.mul, raw.unit, raw.alpha) {
            (Some(mul), Some(unit), Some(alpha)) => {
                if mul.len() != n {
                    return Err(Error::dims("mul", n, mul.len()));
                }
                let mut cols = Vec::with_capacity(n * n);
                for row in &mul {
                    if row.len() != n {
                        return Err(Error::dims("mul", n, row.len()));
                    }
                    for entry in row {
                        cols.push(SparseVec::from_dense(&vector(entry, n, "mul entry")?));
                    }
                }
                let a = HomAlgebra::new(
                    LinMap::from_columns(n, cols)?,
                    vector(&unit, n, "unit")?,
                    matrix(&alpha, n, "alpha")?,
                )?;
                Some(a.with_truncation(truncation.clone())?)
            }
            (None, None, None) => None,
            _ => return Err(format_err("mul, unit and alpha must appear together")),
        };
        let coalgebra = match (raw.comul, raw.counit, raw.beta) {
            (Some(comul), Some(counit), Some(beta)) => {
                if comul.len() != n {
                    return Err(Error::dims("comul", n, comul.len()));
                }
                let mut cols = Vec::with_capacity(n);
                for terms in &comul {
                    let mut v = SparseVec::new();
                    for (coef, i, j) in terms {
                        if *i >= n || *j >= n {
                            return Err(format_err(format!("comul index ({i}, {j}) out of range")));
                        }
                        v.add_term(i * n + j, &coef.parse()?);
                    }
                    cols.push(v);
                }
                let c = HomCoalgebra::new(
                    LinMap::from_columns(n * n, cols)?,
                    LinMap::row_vector(&vector(&counit, n, "counit")?),
                    matrix(&beta, n, "beta")?,
                )?;
                Some(c.with_truncation(truncation.clone())?)
            }
            (None, None, None) => None,
            _ => return Err(format_err("comul, counit and beta must appear together")),
        };
        if algebra.is_none() && coalgebra.is_none() {
            return Err(format_err("neither algebra nor coalgebra data present"));
        }
        let antipode = raw
            .antipode
            .map(|s| matrix(&s, n, "antipode"))
            .transpose()?;
        let params = raw
            .params
            .unwrap_or_default()
            .into_iter()
            .map(|(k, v)| Ok((k, v.parse()?)))
            .collect::<Result<_>>()?;
        Ok(StructureFile {
            basis,
            algebra,
            coalgebra,
            antipode,
            params,
            truncation,
        })
    }

    pub fn from_bialgebra(b: &HomBialgebra, basis: Option<Vec<String>>) -> Self {
        StructureFile {
            basis: basis.unwrap_or_else(|| default_basis(b.dim())),
            algebra: Some(b.algebra.clone()),
            coalgebra: Some(b.coalgebra.clone()),
            antipode: None,
            params: BTreeMap::new(),
            truncation: b.truncation().cloned(),
        }
    }

    pub fn from_hopf(h: &HomHopfCandidate, basis: Option<Vec<String>>) -> Self {
        let mut f = Self::from_bialgebra(&h.bialgebra, basis);
        f.antipode = Some(h.antipode.clone());
        f
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn bialgebra(&self) -> Result<HomBialgebra> {
        match (&self.algebra, &self.coalgebra) {
            (Some(a), Some(c)) => HomBialgebra::new(a.clone(), c.clone()),
            _ => Err(format_err("file lacks algebra or coalgebra data")),
        }
    }

    pub fn hopf(&self) -> Result<HomHopfCandidate> {
        let s = self
            .antipode
            .clone()
            .ok_or_else(|| format_err("file has no antipode"))?;
        HomHopfCandidate::new(self.bialgebra()?, s)
    }

    /// Canonical text: sorted keys, two-space indentation, scalar arrays
    /// on one line, trailing newline.
    pub fn emit(&self) -> String {
        let n = self.dim();
        let mut fields: BTreeMap<&str, String> = BTreeMap::new();
        let q = |s: &str| serde_json::to_string(s).expect("strings serialize");
        let inline = |v: &[Scalar]| {
            let items: Vec<String> = v.iter().map(|s| q(&s.to_string())).collect();
            format!("[{}]", items.join(", "))
        };
        let rows = |m: &LinMap| {
            let lines: Vec<String> = m
                .to_rows()
                .iter()
                .map(|r| format!("    {}", inline(r)))
                .collect();
            format!("[\n{}\n  ]", lines.join(",\n"))
        };
        let names: Vec<String> = self.basis.iter().map(|b| q(b)).collect();
        fields.insert("basis", format!("[{}]", names.join(", ")));
        fields.insert("dim", n.to_string());
        fields.insert("scalars", q("rational"));
        if let Some(a) = &self.algebra {
            let mut blocks = Vec::with_capacity(n);
            for i in 0..n {
                let entries: Vec<String> = (0..n)
                    .map(|j| format!("      {}", inline(&a.basis_product(i, j).to_dense(n).0)))
                    .collect();
                blocks.push(format!("    [\n{}\n    ]", entries.join(",\n")));
            }
            fields.insert("mul", format!("[\n{}\n  ]", blocks.join(",\n")));
            fields.insert("unit", inline(&a.unit().0));
            fields.insert("alpha", rows(a.alpha()));
        }
        if let Some(c) = &self.coalgebra {
            let lines: Vec<String> = (0..n)
                .map(|x| {
                    let terms: Vec<String> = c
                        .comul()
                        .column(x)
                        .iter()
                        .map(|(ij, coef)| {
                            format!("[{}, {}, {}]", q(&coef.to_string()), ij / n, ij % n)
                        })
                        .collect();
                    format!("    [{}]", terms.join(", "))
                })
                .collect();
            fields.insert("comul", format!("[\n{}\n  ]", lines.join(",\n")));
            fields.insert("counit", inline(&c.counit().to_rows()[0]));
            fields.insert("beta", rows(c.beta()));
        }
        if let Some(s) = &self.antipode {
            fields.insert("antipode", rows(s));
        }
        if !self.params.is_empty() {
            let items: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{}: {}", q(k), q(&v.to_string())))
                .collect();
            fields.insert("params", format!("{{{}}}", items.join(", ")));
        }
        if let Some(t) = &self.truncation {
            let g: Vec<String> = t.grading.iter().map(u32::to_string).collect();
            fields.insert("grading", format!("[{}]", g.join(", ")));
            fields.insert("truncation", t.max_degree.to_string());
        }
        let mut out = String::from("{\n");
        let last = fields.len() - 1;
        for (i, (k, v)) in fields.iter().enumerate() {
            let sep = if i == last { "" } else { "," };
            writeln!(out, "  {}: {}{}", q(k), v, sep).expect("writing to a String");
        }
        out.push_str("}\n");
        out
    }
}

/// Rows separated by `;`, entries by `,`: `"2,0;-1,1"`.
pub fn parse_matrix_literal(text: &str) -> Result<LinMap> {
    let rows = text
        .split(';')
        .map(|r| {
            r.split(',')
                .map(|e| e.trim().parse())
                .collect::<Result<Vec<Scalar>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let cols = rows[0].len();
    if rows.iter().any(|r| r.len() != cols) {
        return Err(format_err("matrix rows differ in length"));
    }
    LinMap::from_rows(&rows, cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_D: &str = r#"{
  "alpha": [
    ["2", "0"],
    ["-1", "1"]
  ],
  "basis": ["e1", "e2"],
  "dim": 2,
  "mul": [
    [
      ["1", "0"],
      ["0", "1"]
    ],
    [
      ["0", "1"],
      ["0", "1"]
    ]
  ],
  "scalars": "rational",
  "unit": ["1", "0"]
}
"#;

    #[test]
    fn canonical_round_trip() {
        let f = StructureFile::parse(TWO_D).unwrap();
        assert_eq!(f.emit(), TWO_D);
        assert_eq!(StructureFile::parse(&f.emit()).unwrap(), f);
        assert!(f.coalgebra.is_none());
    }

    #[test]
    fn parse_errors() {
        let bad = TWO_D.replace("\"-1\"", "\"1/0\"");
        assert_eq!(StructureFile::parse(&bad), Err(Error::DivisionByZero));
        match StructureFile::parse("{\n  \"dim\": 2,\n  \"mul\": [oops]\n}") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            StructureFile::parse(r#"{"dim": 0, "mul": [], "unit": [], "alpha": []}"#),
            Err(Error::Format(_))
        ));
        assert!(StructureFile::parse(r#"{"dim": 1, "extra": 1}"#).is_err());
        let short = TWO_D.replace("[\"1\", \"0\"]\n}", "[\"1\"]\n}");
        assert!(matches!(
            StructureFile::parse(&short),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn matrix_literal() {
        let m = parse_matrix_literal("2,0;-1,1").unwrap();
        assert_eq!(m, LinMap::from_int_rows(&[&[2, 0], &[-1, 1]]));
        assert!(parse_matrix_literal("1,2;3").is_err());
        assert!(parse_matrix_literal("").is_err());
        assert_eq!(parse_matrix_literal("1/0"), Err(Error::DivisionByZero));
    }
}
