//! The JSON generator-file format consumed by the command-line tool.
//!
//! A file fixes one ambient radicand and lists generators either as 3×3
//! matrices of scalar strings or as quaternion 4-tuples (which are mapped to
//! rotations on load). Scalar strings use the wire syntax of
//! [`QuadScalar::parse`], e.g. `"-3/5"` or `"1/2+1/2√3"`.
//!
//! ```json
//! {
//!   "ambient_d": 0,
//!   "matrices": [[["1","0","0"],["0","0","-1"],["0","1","0"]]],
//!   "quaternions": [["1","2","0","0"]]
//! }
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quaternion::Quaternion;
use crate::rotation::{theta, Rot3, RotError};
use crate::scalar::{QuadScalar, ScalarError};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("cannot read generator file: {0}")]
    Io(#[from] std::io::Error),
    #[error("generator file is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{location}: {source}")]
    Scalar {
        location: String,
        source: ScalarError,
    },
    #[error("{location}: {source}")]
    Rotation { location: String, source: RotError },
    #[error("{location}: the zero quaternion has no rotation image")]
    ZeroQuaternion { location: String },
}

/// Serialized form of a set of generators in one ambient field.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorFile {
    pub ambient_d: u64,
    #[serde(default)]
    pub matrices: Vec<[[String; 3]; 3]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub quaternions: Vec<[String; 4]>,
}

/// Validated generators: every matrix passed rotation validation, every
/// quaternion was nonzero and mapped through the rotation homomorphism.
#[derive(Debug, Clone)]
pub struct LoadedGenerators {
    pub ambient: u64,
    pub rotations: Vec<Rot3>,
}

impl GeneratorFile {
    pub fn from_json(text: &str) -> Result<Self, FileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_path(path: &Path) -> Result<Self, FileError> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// Serializes rotations back into the wire format.
    pub fn from_rotations(rotations: &[Rot3]) -> Self {
        let ambient_d = rotations.first().map_or(0, |r| r.ambient());
        let matrices = rotations
            .iter()
            .map(|r| {
                std::array::from_fn(|i| std::array::from_fn(|j| r.entry(i, j).to_string()))
            })
            .collect();
        GeneratorFile {
            ambient_d,
            matrices,
            quaternions: Vec::new(),
        }
    }

    /// Parses and validates every entry against the file's ambient.
    pub fn load(&self) -> Result<LoadedGenerators, FileError> {
        let d = self.ambient_d;
        let mut rotations = Vec::new();
        for (mi, rows) in self.matrices.iter().enumerate() {
            let mut entries: Vec<QuadScalar> = Vec::with_capacity(9);
            for (ri, row) in rows.iter().enumerate() {
                for (ci, text) in row.iter().enumerate() {
                    let value =
                        QuadScalar::parse(text, d).map_err(|source| FileError::Scalar {
                            location: format!("matrix {mi}, entry ({ri},{ci})"),
                            source,
                        })?;
                    entries.push(value);
                }
            }
            let m: [[QuadScalar; 3]; 3] = std::array::from_fn(|r| {
                std::array::from_fn(|c| entries[r * 3 + c].clone())
            });
            let rotation = Rot3::new(m).map_err(|source| FileError::Rotation {
                location: format!("matrix {mi}"),
                source,
            })?;
            rotations.push(rotation);
        }
        for (qi, tuple) in self.quaternions.iter().enumerate() {
            let mut parts: Vec<QuadScalar> = Vec::with_capacity(4);
            for (pi, text) in tuple.iter().enumerate() {
                let value = QuadScalar::parse(text, d).map_err(|source| FileError::Scalar {
                    location: format!("quaternion {qi}, component {pi}"),
                    source,
                })?;
                parts.push(value);
            }
            let q = Quaternion::new(
                parts[0].clone(),
                parts[1].clone(),
                parts[2].clone(),
                parts[3].clone(),
            );
            if q.is_zero() {
                return Err(FileError::ZeroQuaternion {
                    location: format!("quaternion {qi}"),
                });
            }
            rotations.push(theta(&q).expect("nonzero quaternion"));
        }
        Ok(LoadedGenerators {
            ambient: d,
            rotations,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_matrices_and_quaternions() {
        let text = r#"{
            "ambient_d": 0,
            "matrices": [[["1","0","0"],["0","0","-1"],["0","1","0"]]],
            "quaternions": [["1","2","0","0"]]
        }"#;
        let file = GeneratorFile::from_json(text).unwrap();
        let loaded = file.load().unwrap();
        assert_eq!(loaded.rotations.len(), 2);
        assert_eq!(
            loaded.rotations[1],
            theta(&Quaternion::from_ints(1, 2, 0, 0, 0)).unwrap()
        );
    }

    #[test]
    fn surd_entries_need_matching_ambient() {
        let text = r#"{
            "ambient_d": 3,
            "matrices": [[["1","0","0"],["0","1/2","0-1/2√3"],["0","0+1/2√3","1/2"]]]
        }"#;
        let loaded = GeneratorFile::from_json(text).unwrap().load().unwrap();
        assert_eq!(loaded.ambient, 3);
        let wrong = r#"{
            "ambient_d": 0,
            "matrices": [[["1","0","0"],["0","1/2","0-1/2√3"],["0","0+1/2√3","1/2"]]]
        }"#;
        match GeneratorFile::from_json(wrong).unwrap().load() {
            Err(FileError::Scalar { location, .. }) => {
                assert!(location.contains("matrix 0"));
            }
            other => panic!("expected scalar error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_non_rotations_and_zero_quaternions() {
        let not_rotation = r#"{
            "ambient_d": 0,
            "matrices": [[["1","1","0"],["0","1","0"],["0","0","1"]]]
        }"#;
        assert!(matches!(
            GeneratorFile::from_json(not_rotation).unwrap().load(),
            Err(FileError::Rotation { .. })
        ));
        let zero_q = r#"{"ambient_d": 0, "quaternions": [["0","0","0","0"]]}"#;
        assert!(matches!(
            GeneratorFile::from_json(zero_q).unwrap().load(),
            Err(FileError::ZeroQuaternion { .. })
        ));
        assert!(GeneratorFile::from_json("not json").is_err());
    }

    #[test]
    fn round_trip_through_wire_format() {
        let b_tilde = theta(&Quaternion::from_ints(1, 2, 0, 0, 0)).unwrap();
        let file = GeneratorFile::from_rotations(std::slice::from_ref(&b_tilde));
        let json = serde_json::to_string(&file).unwrap();
        let loaded = GeneratorFile::from_json(&json).unwrap().load().unwrap();
        assert_eq!(loaded.rotations, vec![b_tilde]);
    }
}
