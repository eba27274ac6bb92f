//! JSON file formats, canonical hashing, and the bundled data files.
//!
//! Every format stores rationals as `"p/q"` strings and matrices as
//! row-major arrays of such strings. Bundled data (curve systems and relator
//! catalogs for genus 3 and 4) is hash-pinned so tests are reproducible;
//! other genera are generated on demand and can be cached by the CLI.

use crate::cohomology::{Chirality, Cocycle};
use crate::linalg::Mat;
use crate::presentation::{GroupWord, Relator, RelatorCatalog, RelatorTag};
use crate::reps::Representation;
use crate::surface::{CurveClass, CurveSystem, Surface};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;

/// Errors from parsing and validating data files.
#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("hash mismatch for {what}: expected {expected}, got {got}")]
    HashMismatch {
        what: String,
        expected: String,
        got: String,
    },
}

fn hex_digest(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Canonical serialization bytes of a serializable value (compact JSON with
/// struct-declared field order).
fn canonical_bytes<T: Serialize>(value: &T) -> Vec<u8> {
    serde_json::to_vec(value).expect("serialization cannot fail")
}

// ---------------------------------------------------------------------------
// Curve system files
// ---------------------------------------------------------------------------

/// On-disk form of a generator curve system.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveSystemFile {
    pub version: u32,
    pub genus: usize,
    pub boundary_components: usize,
    pub curves: Vec<CurveClass>,
    pub geometric_intersections: Vec<Vec<u32>>,
}

impl CurveSystemFile {
    pub fn from_system(system: &CurveSystem) -> Self {
        CurveSystemFile {
            version: 1,
            genus: system.surface.genus(),
            boundary_components: system.surface.boundary_components(),
            curves: system.curves.clone(),
            geometric_intersections: system.geometric_intersections.clone(),
        }
    }

    pub fn into_system(self) -> Result<CurveSystem, IoError> {
        let surface = Surface::new(self.genus).map_err(|e| IoError::Schema(e.to_string()))?;
        let system = CurveSystem {
            surface,
            curves: self.curves,
            geometric_intersections: self.geometric_intersections,
        };
        system
            .validate()
            .map_err(|e| IoError::Schema(e.to_string()))?;
        Ok(system)
    }
}

/// The pinned content hash of a curve system (over its canonical file bytes).
pub fn curve_system_hash(system: &CurveSystem) -> String {
    hex_digest(&canonical_bytes(&CurveSystemFile::from_system(system)))
}

// ---------------------------------------------------------------------------
// Relator catalog files
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelatorEntry {
    pub tag: RelatorTag,
    pub word: Vec<(String, i64)>,
}

/// On-disk form of a relator catalog.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelatorCatalogFile {
    pub version: u32,
    pub genus: usize,
    pub curve_system_hash: String,
    pub generators: Vec<String>,
    pub relators: Vec<RelatorEntry>,
}

impl RelatorCatalogFile {
    pub fn from_catalog(catalog: &RelatorCatalog) -> Self {
        RelatorCatalogFile {
            version: 1,
            genus: catalog.surface.genus(),
            curve_system_hash: catalog.curve_system_hash.clone(),
            generators: catalog.generators.clone(),
            relators: catalog
                .relators
                .iter()
                .map(|r| RelatorEntry {
                    tag: r.tag,
                    word: r.word.letters().to_vec(),
                })
                .collect(),
        }
    }

    pub fn into_catalog(self) -> Result<RelatorCatalog, IoError> {
        let surface = Surface::new(self.genus).map_err(|e| IoError::Schema(e.to_string()))?;
        Ok(RelatorCatalog {
            surface,
            generators: self.generators,
            relators: self
                .relators
                .into_iter()
                .map(|r| Relator {
                    tag: r.tag,
                    word: GroupWord::from_letters(&r.word),
                })
                .collect(),
            curve_system_hash: self.curve_system_hash,
        })
    }
}

pub fn relator_catalog_hash(catalog: &RelatorCatalog) -> String {
    hex_digest(&canonical_bytes(&RelatorCatalogFile::from_catalog(catalog)))
}

// ---------------------------------------------------------------------------
// Bundled data
// ---------------------------------------------------------------------------

/// Pinned hashes of the bundled data files.
pub mod pinned {
    pub const CURVE_SYSTEM_G3: &str =
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/curve_system_g3.hash"));
    pub const CURVE_SYSTEM_G4: &str =
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/curve_system_g4.hash"));
    pub const RELATOR_CATALOG_G3: &str =
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/relator_catalog_g3.hash"));
    pub const RELATOR_CATALOG_G4: &str =
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/relator_catalog_g4.hash"));
}

/// Bundled curve-system JSON for genus 3 and 4.
pub fn bundled_curve_system_json(genus: usize) -> Option<&'static str> {
    match genus {
        3 => Some(include_str!(concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/data/curve_system_g3.json"
        ))),
        4 => Some(include_str!(concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/data/curve_system_g4.json"
        ))),
        _ => None,
    }
}

/// Bundled relator-catalog JSON for genus 3 and 4.
pub fn bundled_relator_catalog_json(genus: usize) -> Option<&'static str> {
    match genus {
        3 => Some(include_str!(concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/data/relator_catalog_g3.json"
        ))),
        4 => Some(include_str!(concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/data/relator_catalog_g4.json"
        ))),
        _ => None,
    }
}

/// Load the curve system for a genus: bundled and hash-checked for 3 and 4,
/// generated otherwise.
pub fn load_curve_system(genus: usize) -> Result<CurveSystem, IoError> {
    match bundled_curve_system_json(genus) {
        Some(json) => {
            let file: CurveSystemFile = serde_json::from_str(json)?;
            let system = file.into_system()?;
            let got = curve_system_hash(&system);
            let expected = match genus {
                3 => pinned::CURVE_SYSTEM_G3.trim(),
                _ => pinned::CURVE_SYSTEM_G4.trim(),
            };
            if got != expected {
                return Err(IoError::HashMismatch {
                    what: format!("curve system g={genus}"),
                    expected: expected.to_owned(),
                    got,
                });
            }
            Ok(system)
        }
        None => {
            let surface = Surface::new(genus).map_err(|e| IoError::Schema(e.to_string()))?;
            Ok(surface.generator_curve_system())
        }
    }
}

/// Load the relator catalog for a genus: bundled and hash-checked for 3 and
/// 4, generated otherwise.
pub fn load_relator_catalog(genus: usize) -> Result<RelatorCatalog, IoError> {
    match bundled_relator_catalog_json(genus) {
        Some(json) => {
            let file: RelatorCatalogFile = serde_json::from_str(json)?;
            let catalog = file.into_catalog()?;
            let got = relator_catalog_hash(&catalog);
            let expected = match genus {
                3 => pinned::RELATOR_CATALOG_G3.trim(),
                _ => pinned::RELATOR_CATALOG_G4.trim(),
            };
            if got != expected {
                return Err(IoError::HashMismatch {
                    what: format!("relator catalog g={genus}"),
                    expected: expected.to_owned(),
                    got,
                });
            }
            Ok(catalog)
        }
        None => {
            let surface = Surface::new(genus).map_err(|e| IoError::Schema(e.to_string()))?;
            Ok(crate::presentation::relator_catalog(&surface))
        }
    }
}

// ---------------------------------------------------------------------------
// Representation files
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorImage {
    pub name: String,
    pub matrix: Mat,
}

/// On-disk form of a representation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepresentationFile {
    pub genus: usize,
    pub boundary: usize,
    pub dimension: usize,
    pub curve_system_hash: String,
    pub generators: Vec<GeneratorImage>,
}

impl RepresentationFile {
    pub fn from_representation(rep: &Representation) -> Self {
        RepresentationFile {
            genus: rep.surface().genus(),
            boundary: rep.surface().boundary_components(),
            dimension: rep.dimension(),
            curve_system_hash: rep.curve_system_hash().to_owned(),
            generators: rep
                .iter()
                .map(|(name, matrix)| GeneratorImage {
                    name: name.clone(),
                    matrix: matrix.clone(),
                })
                .collect(),
        }
    }

    pub fn into_representation(self) -> Result<Representation, IoError> {
        let surface = Surface::new(self.genus).map_err(|e| IoError::Schema(e.to_string()))?;
        if self.boundary != 1 {
            return Err(IoError::Schema(format!(
                "exactly one boundary component expected, got {}",
                self.boundary
            )));
        }
        let names: Vec<String> = self.generators.iter().map(|g| g.name.clone()).collect();
        let images: Vec<Mat> = self.generators.into_iter().map(|g| g.matrix).collect();
        for (name, m) in names.iter().zip(&images) {
            if m.rows() != self.dimension || m.cols() != self.dimension {
                return Err(IoError::Schema(format!(
                    "generator {name:?}: expected a {0}x{0} matrix",
                    self.dimension
                )));
            }
        }
        Representation::new(surface, names, images, self.curve_system_hash)
            .map_err(|e| IoError::Schema(e.to_string()))
    }
}

// ---------------------------------------------------------------------------
// Cocycle files
// ---------------------------------------------------------------------------

/// On-disk form of a cocycle: generator values over a named base
/// representation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CocycleFile {
    pub chirality: Chirality,
    pub base_rep_ref: String,
    pub values: BTreeMap<String, Mat>,
}

impl CocycleFile {
    pub fn from_cocycle(phi: &Cocycle, base_rep_ref: &str) -> Self {
        CocycleFile {
            chirality: phi.chirality(),
            base_rep_ref: base_rep_ref.to_owned(),
            values: phi.values().clone(),
        }
    }

    pub fn into_cocycle(self, base: &Representation) -> Result<Cocycle, IoError> {
        Cocycle::new(base.clone(), self.chirality, self.values)
            .map_err(|e| IoError::Schema(e.to_string()))
    }
}

// ---------------------------------------------------------------------------
// Helpers
// ---------------------------------------------------------------------------

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &std::path::Path) -> Result<T, IoError> {
    let bytes = std::fs::read(path)?;
    Ok(serde_json::from_slice(&bytes)?)
}

pub fn write_json<T: Serialize>(path: &std::path::Path, value: &T) -> Result<(), IoError> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    std::fs::write(path, bytes)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_system_round_trips_through_file_form() {
        let s = Surface::new(3).unwrap();
        let system = s.generator_curve_system();
        let file = CurveSystemFile::from_system(&system);
        let json = serde_json::to_string(&file).unwrap();
        let back: CurveSystemFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back.into_system().unwrap(), system);
    }

    #[test]
    fn hashes_are_stable_across_reserialization() {
        let s = Surface::new(3).unwrap();
        let system = s.generator_curve_system();
        assert_eq!(curve_system_hash(&system), curve_system_hash(&system));
    }

    #[test]
    fn bundled_data_matches_generated_data() {
        for genus in [3usize, 4] {
            let surface = Surface::new(genus).unwrap();
            let system = load_curve_system(genus).unwrap();
            assert_eq!(system, surface.generator_curve_system());
            let catalog = load_relator_catalog(genus).unwrap();
            assert_eq!(catalog, crate::presentation::relator_catalog(&surface));
        }
    }

    #[test]
    fn representation_file_rejects_singular_generator() {
        let s = Surface::new(3).unwrap();
        let rep = crate::reps::symplectic_rep(&s);
        let mut file = RepresentationFile::from_representation(&rep);
        file.generators[0].matrix = Mat::zeros(6, 6);
        assert!(file.into_representation().is_err());
    }
}
