//! JSON interchange formats and complex-number parsing.
//!
//! All floating-point payloads are `[re, im]` pairs serialized through
//! `serde_json`, whose shortest-representation printing round-trips every
//! finite `f64` bit-exactly. Readers validate shape and finiteness and
//! report structured errors instead of panicking.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::acc::{AccParams, BasisOrdering, PARAM_NAMES};
use crate::catalog::FamilyInstance;
use crate::numerics::SquareMatrix;
use crate::C64;

/// Errors from parsing or validating interchange payloads.
#[derive(Debug, Error)]
pub enum IoError {
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("matrix side {side} does not match {rows} rows")]
    RowCountMismatch { side: usize, rows: usize },
    #[error("row {row} has {len} entries, expected {side}")]
    RowLengthMismatch { row: usize, len: usize, side: usize },
    #[error("non-finite value at row {row}, column {col}")]
    NonFiniteEntry { row: usize, col: usize },
    #[error("non-finite value for parameter '{name}'")]
    NonFiniteParam { name: String },
    #[error("unknown family '{name}'")]
    UnknownFamily { name: String },
    #[error("cannot parse '{text}' as a complex number")]
    BadComplex { text: String },
}

fn pair(z: C64) -> [f64; 2] {
    [z.re, z.im]
}

fn unpair(p: [f64; 2]) -> C64 {
    C64::new(p[0], p[1])
}

/// A dense square matrix with an explicit basis-ordering tag.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub ordering: BasisOrdering,
    pub side: usize,
    /// Rows of `[re, im]` pairs.
    pub entries: Vec<Vec<[f64; 2]>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &SquareMatrix, ordering: BasisOrdering) -> Self {
        let side = m.side();
        let entries = (0..side)
            .map(|r| m.row(r).iter().map(|&z| pair(z)).collect())
            .collect();
        MatrixFile { ordering, side, entries }
    }

    /// Validate shape and finiteness and build the matrix.
    pub fn to_matrix(&self) -> Result<SquareMatrix, IoError> {
        if self.entries.len() != self.side {
            return Err(IoError::RowCountMismatch { side: self.side, rows: self.entries.len() });
        }
        let mut m = SquareMatrix::zeros(self.side);
        for (r, row) in self.entries.iter().enumerate() {
            if row.len() != self.side {
                return Err(IoError::RowLengthMismatch { row: r, len: row.len(), side: self.side });
            }
            for (c, &p) in row.iter().enumerate() {
                if !p[0].is_finite() || !p[1].is_finite() {
                    return Err(IoError::NonFiniteEntry { row: r, col: c });
                }
                m.set(r, c, unpair(p));
            }
        }
        Ok(m)
    }
}

/// The nineteen ansatz parameters as named `[re, im]` pairs, serialized in
/// canonical parameter order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamFile {
    pub a1: [f64; 2],
    pub a2: [f64; 2],
    pub a3: [f64; 2],
    pub a12: [f64; 2],
    pub b12: [f64; 2],
    pub c12: [f64; 2],
    pub d12: [f64; 2],
    pub a13: [f64; 2],
    pub b13: [f64; 2],
    pub c13: [f64; 2],
    pub d13: [f64; 2],
    pub a23: [f64; 2],
    pub b23: [f64; 2],
    pub c23: [f64; 2],
    pub d23: [f64; 2],
    pub x1: [f64; 2],
    pub x2: [f64; 2],
    pub x3: [f64; 2],
    pub x4: [f64; 2],
}

impl ParamFile {
    pub fn from_params(p: &AccParams) -> Self {
        let a = p.as_array();
        let g = |name: &str| pair(a[PARAM_NAMES.iter().position(|&n| n == name).unwrap()]);
        ParamFile {
            a1: g("a1"),
            a2: g("a2"),
            a3: g("a3"),
            a12: g("a12"),
            b12: g("b12"),
            c12: g("c12"),
            d12: g("d12"),
            a13: g("a13"),
            b13: g("b13"),
            c13: g("c13"),
            d13: g("d13"),
            a23: g("a23"),
            b23: g("b23"),
            c23: g("c23"),
            d23: g("d23"),
            x1: g("x1"),
            x2: g("x2"),
            x3: g("x3"),
            x4: g("x4"),
        }
    }

    /// Validate finiteness and build the parameter set.
    pub fn to_params(&self) -> Result<AccParams, IoError> {
        let named = [
            ("a1", self.a1),
            ("a2", self.a2),
            ("a3", self.a3),
            ("a12", self.a12),
            ("b12", self.b12),
            ("c12", self.c12),
            ("d12", self.d12),
            ("a13", self.a13),
            ("b13", self.b13),
            ("c13", self.c13),
            ("d13", self.d13),
            ("a23", self.a23),
            ("b23", self.b23),
            ("c23", self.c23),
            ("d23", self.d23),
            ("x1", self.x1),
            ("x2", self.x2),
            ("x3", self.x3),
            ("x4", self.x4),
        ];
        let mut p = AccParams::default();
        for (name, value) in named {
            if !value[0].is_finite() || !value[1].is_finite() {
                return Err(IoError::NonFiniteParam { name: name.to_string() });
            }
            assert!(p.set(name, unpair(value)), "canonical name");
        }
        Ok(p)
    }
}

/// A catalog family instance: family tag plus named parameter values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub family: String,
    #[serde(default)]
    pub continuous: BTreeMap<String, [f64; 2]>,
    #[serde(default)]
    pub discrete: BTreeMap<String, String>,
}

impl InstanceFile {
    pub fn from_instance(inst: &FamilyInstance) -> Self {
        InstanceFile {
            family: inst.id.as_str().to_string(),
            continuous: inst.continuous.iter().map(|(k, &v)| (k.clone(), pair(v))).collect(),
            discrete: inst.discrete.clone(),
        }
    }

    /// Validate finiteness and the family tag and build the instance
    /// (domain validation happens later, at instantiation).
    pub fn to_instance(&self) -> Result<FamilyInstance, IoError> {
        let id = crate::catalog::FamilyId::parse(&self.family)
            .ok_or_else(|| IoError::UnknownFamily { name: self.family.clone() })?;
        let mut continuous = BTreeMap::new();
        for (name, &value) in &self.continuous {
            if !value[0].is_finite() || !value[1].is_finite() {
                return Err(IoError::NonFiniteParam { name: name.clone() });
            }
            continuous.insert(name.clone(), unpair(value));
        }
        Ok(FamilyInstance { id, continuous, discrete: self.discrete.clone() })
    }
}

/// Parse a complex literal: `"1.5"`, `"-2"`, `"1+2i"`, `"0.5-0.25i"`,
/// `"2i"`, `"i"`, `"-i"`. Scientific notation works in both parts
/// (`"1e-3+2.5e2i"`). Whitespace around the literal is ignored; embedded
/// spaces are not.
pub fn parse_complex(text: &str) -> Result<C64, IoError> {
    let bad = || IoError::BadComplex { text: text.to_string() };
    let s = text.trim();
    if s.is_empty() {
        return Err(bad());
    }
    if let Some(body) = s.strip_suffix(['i', 'I']) {
        // Find the sign separating real and imaginary parts: the last
        // '+'/'-' that is neither leading nor an exponent sign.
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| {
                (bytes[k] == b'+' || bytes[k] == b'-')
                    && !matches!(bytes[k - 1], b'e' | b'E')
            });
        let (re_str, im_str) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let re = if re_str.is_empty() { 0.0 } else { re_str.parse::<f64>().map_err(|_| bad())? };
        let im = match im_str {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other.parse::<f64>().map_err(|_| bad())?,
        };
        if !re.is_finite() || !im.is_finite() {
            return Err(bad());
        }
        return Ok(C64::new(re, im));
    }
    let re = s.parse::<f64>().map_err(|_| bad())?;
    if !re.is_finite() {
        return Err(bad());
    }
    Ok(C64::new(re, 0.0))
}

/// Render a complex value in the same literal syntax [`parse_complex`]
/// accepts (shortest round-tripping decimal for each part).
pub fn format_complex(z: C64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}i", z.im)
    } else if z.im < 0.0 {
        format!("{}{}i", z.re, z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}
