//! Input detection and atomic output.

use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use serde_json::Value;

use rclkit::approx::{RclStructure, StructureFile};
use rclkit::granular::{MaterializedSetRcl, SetRcl, SetRclDescriptor, MAX_MATERIALIZED_UNIVERSE};
use rclkit::lattice::{FiniteLattice, LatticeFile};
use rclkit::search::ClaimResult;
use rclkit::{Error, Result};

pub enum Input {
    Structure(RclStructure),
    /// Materialized when the carrier is small enough to list.
    Set(Box<SetRcl>, Option<Box<MaterializedSetRcl>>),
}

impl Input {
    pub fn structure(&self) -> Result<&RclStructure> {
        match self {
            Input::Structure(s) => Ok(s),
            Input::Set(_, Some(m)) => Ok(&m.structure),
            Input::Set(s, None) => Err(Error::UniverseTooLarge(s.universe().len(), MAX_MATERIALIZED_UNIVERSE)),
        }
    }

    pub fn set(&self) -> Option<&SetRcl> {
        match self {
            Input::Set(s, _) => Some(s),
            Input::Structure(_) => None,
        }
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Detects the document kind: set descriptor, claim result (its witness),
/// bare lattice (identity maps) or structure file.
pub fn parse_input(text: &str) -> Result<Input> {
    let v: Value = serde_json::from_str(text)?;
    let Some(obj) = v.as_object() else {
        return Err(Error::Parse("expected a JSON object".into()));
    };
    if obj.contains_key("universe") {
        let set = SetRcl::from_descriptor(&SetRclDescriptor::from_json(text)?)?;
        let m = match set.materialize() {
            Ok(m) => Some(Box::new(m)),
            Err(Error::UniverseTooLarge(..)) => None,
            Err(e) => return Err(e),
        };
        return Ok(Input::Set(Box::new(set), m));
    }
    if obj.contains_key("claim") {
        let r = ClaimResult::from_json(text)?;
        let w = r
            .witness
            .ok_or_else(|| Error::Parse(format!("claim result `{}` has no witness structure", r.claim)))?;
        return Ok(Input::Structure(RclStructure::from_file(&w.structure)?));
    }
    if !obj.contains_key("lower") {
        let lattice = FiniteLattice::from_file(&LatticeFile::from_json(text)?)?;
        return Ok(Input::Structure(RclStructure::identity(Arc::new(lattice))));
    }
    Ok(Input::Structure(RclStructure::from_file(&StructureFile::from_json(
        text,
    )?)?))
}

pub fn load_input(path: &Path) -> Result<Input> {
    parse_input(&read_text(path)?)
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error.to_string()))?;
    Ok(())
}
