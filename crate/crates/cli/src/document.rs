//! The JSON wire form of a CR algebra `(𝔤, τ, 𝔣)`.

use std::path::Path;

use crwb_core::cralg::CrAlgebra;
use crwb_core::exactnum::{GaussianRational, Matrix, Subspace, Vector};
use crwb_core::liecore::{AntilinearMap, LieAlgebra};
use crwb_core::su2family::FamilyInstance;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliError;

const SU2_BOREL: &str = include_str!("../data/su2_borel.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coeff {
    pub k: usize,
    pub value: GaussianRational,
}

/// `[e_i, e_j] = Σ value·e_k`, stated for `i < j` only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<Coeff>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrAlgebraDocument {
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    /// Row-major matrix of the antilinear involution.
    pub tau: Vec<Vec<GaussianRational>>,
    /// Spanning vectors of the CR subalgebra.
    pub f: Vec<Vec<GaussianRational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grades: Option<Vec<i64>>,
}

impl CrAlgebraDocument {
    pub fn from_parts(g: &LieAlgebra, tau: &AntilinearMap, f: &Subspace) -> Self {
        let brackets = g
            .nonzero_brackets()
            .map(|((i, j), v)| BracketEntry {
                i,
                j,
                coeffs: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| Coeff { k, value: c.clone() })
                    .collect(),
            })
            .collect();
        let m = tau.matrix();
        Self {
            basis: g.labels().to_vec(),
            brackets,
            tau: (0..m.rows()).map(|i| m.row(i).into_entries()).collect(),
            f: f.basis().iter().map(|v| v.entries().to_vec()).collect(),
            grades: g.grades().map(<[i64]>::to_vec),
        }
    }

    pub fn from_family(fam: &FamilyInstance) -> Self {
        Self::from_parts(&fam.g, &fam.tau, &fam.f)
    }

    /// The bundled `(𝔰𝔩₂, τ, 𝔟)` control document.
    pub fn su2_borel() -> Self {
        Self::parse(SU2_BOREL).expect("bundled document parses")
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Document(format!("malformed JSON: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Document(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// Hex SHA-256 of the compact serialization.
    pub fn digest(&self) -> String {
        digest_of(self)
    }

    /// Builds the algebra and runs the Jacobi, involution and subalgebra gates.
    pub fn to_cr_algebra(&self) -> Result<CrAlgebra, CliError> {
        let n = self.basis.len();
        if n == 0 {
            return Err(CliError::Document("basis is empty".into()));
        }
        let bad = |msg: String| CliError::Document(msg);
        let vector = |row: &[GaussianRational], what: &str| -> Result<Vector, CliError> {
            if row.len() != n {
                return Err(bad(format!("{what} has length {}, expected {n}", row.len())));
            }
            Ok(Vector::new(row.to_vec()))
        };

        let mut seen = std::collections::BTreeSet::new();
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            if b.i >= n || b.j >= n {
                return Err(bad(format!("bracket ({}, {}) out of range for dimension {n}", b.i, b.j)));
            }
            if b.i >= b.j {
                return Err(bad(format!("bracket ({}, {}) must have i < j", b.i, b.j)));
            }
            if !seen.insert((b.i, b.j)) {
                return Err(bad(format!("bracket ({}, {}) given twice", b.i, b.j)));
            }
            let mut v = Vector::zeros(n);
            for c in &b.coeffs {
                if c.k >= n {
                    return Err(bad(format!("coefficient index {} out of range in bracket ({}, {})", c.k, b.i, b.j)));
                }
                v[c.k] = &v[c.k] + &c.value;
            }
            brackets.push(((b.i, b.j), v));
        }
        let g = LieAlgebra::new(self.basis.clone(), brackets, self.grades.clone()).map_err(CliError::from_structure)?;

        if self.tau.len() != n {
            return Err(bad(format!("tau has {} rows, expected {n}", self.tau.len())));
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in self.tau.iter().enumerate() {
            data.extend(vector(row, &format!("tau row {i}"))?.into_entries());
        }
        let tau = AntilinearMap::new(Matrix::new(n, n, data).map_err(CliError::from_structure)?)
            .map_err(CliError::from_structure)?;

        let vs = self
            .f
            .iter()
            .enumerate()
            .map(|(i, row)| vector(row, &format!("f vector {i}")))
            .collect::<Result<Vec<_>, _>>()?;
        let f = Subspace::span(n, &vs).map_err(CliError::from_structure)?;

        CrAlgebra::new(g, tau, f).map_err(CliError::from_structure)
    }
}

/// Hex SHA-256 of the compact JSON form of `value`.
pub fn digest_of<T: Serialize>(value: &T) -> String {
    let bytes = serde_json::to_vec(value).expect("value serializes");
    hex::encode(Sha256::digest(bytes))
}
