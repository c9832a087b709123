//! JSON file format for fusion and premodular data.

use num::integer::lcm;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::CatalogEntry;
use crate::chartab::{table_from_smatrix_rows, validate_character_table, CharTabError, CharacterTable};
use crate::exactnum::CycNum;
use crate::fusion::{validate_fusion_ring, FusionError, FusionRing, RawFusionRing};
use crate::premod::{validate_smatrix, PremodError, SMatrix};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FusionFile {
    pub rank: usize,
    pub names: Vec<String>,
    pub tensor: Vec<Vec<Vec<u32>>>,
    pub dual: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fpdims: Option<Vec<CycNum>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smatrix: Option<Vec<Vec<CycNum>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub char_table: Option<Vec<Vec<CycNum>>>,
    pub conductor: u32,
    /// Accepted and stored; no check uses them.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twists: Option<Vec<CycNum>>,
}

/// Problems with the file itself (exit code 2 in the CLI).
#[derive(Debug, Error)]
pub enum SchemaError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Shape(String),
}

/// Data that parsed but violates an axiom (exit code 1 in the CLI).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DataError {
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error(transparent)]
    CharTab(#[from] CharTabError),
    #[error(transparent)]
    Premod(#[from] PremodError),
    #[error("an S-matrix needs exact dimensions and, unless its rows give every character, a char_table")]
    TableRequired,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error(transparent)]
    Data(#[from] DataError),
}

/// A fusion ring plus whichever exact layers the input provided.
#[derive(Debug, Clone, PartialEq)]
pub struct Target {
    pub name: String,
    pub ring: FusionRing,
    pub table: Option<CharacterTable>,
    pub smatrix: Option<SMatrix>,
    pub twists: Option<Vec<CycNum>>,
}

impl From<CatalogEntry> for Target {
    fn from(e: CatalogEntry) -> Self {
        Target { name: e.key, ring: e.ring, table: Some(e.table), smatrix: e.smatrix, twists: None }
    }
}

impl FusionFile {
    pub fn parse(text: &str) -> Result<Self, SchemaError> {
        let file: FusionFile = serde_json::from_str(text)?;
        file.check_shape()?;
        Ok(file)
    }

    fn check_shape(&self) -> Result<(), SchemaError> {
        let r = self.rank;
        let shape = |msg: String| Err(SchemaError::Shape(msg));
        if r == 0 {
            return shape("rank must be positive".into());
        }
        if self.names.len() != r {
            return shape(format!("expected {r} names, found {}", self.names.len()));
        }
        if self.tensor.len() != r || self.tensor.iter().any(|m| m.len() != r || m.iter().any(|row| row.len() != r)) {
            return shape(format!("tensor must be {r}x{r}x{r}"));
        }
        if self.dual.len() != r || self.dual.iter().any(|&d| d >= r) {
            return shape(format!("dual must list {r} indices below {r}"));
        }
        if self.conductor == 0 {
            return shape("conductor must be positive".into());
        }
        let check_vec = |what: &str, v: &[CycNum]| -> Result<(), SchemaError> {
            if v.len() != r {
                return shape(format!("{what} must have {r} entries"));
            }
            if let Some(x) = v.iter().find(|x| !self.conductor.is_multiple_of(x.conductor())) {
                return shape(format!("{what} entry of conductor {} does not divide {}", x.conductor(), self.conductor));
            }
            Ok(())
        };
        if let Some(d) = &self.fpdims {
            check_vec("fpdims", d)?;
        }
        if let Some(t) = &self.twists {
            check_vec("twists", t)?;
        }
        for (what, m) in [("smatrix", &self.smatrix), ("char_table", &self.char_table)] {
            if let Some(m) = m {
                if m.len() != r {
                    return shape(format!("{what} must have {r} rows"));
                }
                for row in m {
                    check_vec(what, row)?;
                }
            }
        }
        Ok(())
    }

    /// Runs every validator that applies to the supplied layers.
    pub fn into_target(self, name: impl Into<String>) -> Result<Target, DataError> {
        let ring = validate_fusion_ring(RawFusionRing {
            names: self.names,
            tensor: self.tensor,
            dual: self.dual,
            fpdims: self.fpdims,
        })?;
        let table = match (self.char_table, &self.smatrix, ring.fpdims()) {
            (Some(t), _, _) => Some(validate_character_table(&ring, t)?),
            // a modular S-matrix determines the table through its rows
            (None, Some(s), Some(dims)) => {
                let t = table_from_smatrix_rows(dims, s);
                (t[0].len() == ring.rank()).then(|| validate_character_table(&ring, t)).transpose()?
            }
            _ => None,
        };
        let smatrix = match (self.smatrix, &table) {
            (Some(s), Some(t)) => Some(validate_smatrix(&ring, t, s)?),
            (Some(_), None) => return Err(DataError::TableRequired),
            (None, _) => None,
        };
        Ok(Target { name: name.into(), ring, table, smatrix, twists: self.twists })
    }

    pub fn from_target(t: &Target) -> Self {
        let mut conductor = t.ring.conductor();
        let mut fold = |v: &[CycNum]| v.iter().for_each(|x| conductor = lcm(conductor, x.conductor()));
        if let Some(s) = &t.smatrix {
            s.matrix().iter().for_each(|row| fold(row));
        }
        if let Some(tab) = &t.table {
            tab.matrix().iter().for_each(|row| fold(row));
        }
        if let Some(tw) = &t.twists {
            fold(tw);
        }
        FusionFile {
            rank: t.ring.rank(),
            names: t.ring.names().to_vec(),
            tensor: t.ring.tensor_nested(),
            dual: t.ring.dual_map().to_vec(),
            fpdims: t.ring.fpdims().map(<[CycNum]>::to_vec),
            smatrix: t.smatrix.as_ref().map(|s| s.matrix().to_vec()),
            char_table: t.table.as_ref().map(|c| c.matrix().to_vec()),
            conductor,
            twists: t.twists.clone(),
        }
    }
}

pub fn load_target(text: &str, name: impl Into<String>) -> Result<Target, LoadError> {
    Ok(FusionFile::parse(text)?.into_target(name)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{builtin, builtin_keys};

    #[test]
    fn catalog_round_trips_bit_exactly() {
        for key in builtin_keys() {
            let target = Target::from(builtin(key).unwrap());
            let text = serde_json::to_string(&FusionFile::from_target(&target)).unwrap();
            let back = load_target(&text, key).unwrap();
            let again = serde_json::to_string(&FusionFile::from_target(&back)).unwrap();
            assert_eq!(text, again, "{key}");
            // float dimensions may differ in the last bits when the catalog restricted a larger ring
            assert_eq!(back.ring.to_raw(), target.ring.to_raw(), "{key}");
        }
    }

    #[test]
    fn schema_problems() {
        assert!(matches!(load_target("{", "x"), Err(LoadError::Schema(SchemaError::Json(_)))));
        let text = r#"{"rank":2,"names":["1"],"tensor":[],"dual":[0,1],"conductor":1}"#;
        assert!(matches!(load_target(text, "x"), Err(LoadError::Schema(SchemaError::Shape(_)))));
    }

    #[test]
    fn table_is_derived_from_modular_smatrix() {
        let mut file = FusionFile::from_target(&Target::from(builtin("ising").unwrap()));
        file.char_table = None;
        let t = file.into_target("ising").unwrap();
        assert!(t.table.is_some() && t.smatrix.is_some());
    }
}
