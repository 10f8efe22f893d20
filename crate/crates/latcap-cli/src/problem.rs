//! Problem-file loading: a JSON description of a lattice plus named
//! capacities, all rationals as exact strings.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use latcap::capacity::LatticeFn;
use latcap::lattice::Lattice;
use latcap::parse_rational;
use serde::Deserialize;
use sha2::{Digest, Sha256};

/// CLI failure classes: domain errors exit with 1 and carry the library
/// error name; usage and parse problems exit with 2.
#[derive(Debug)]
pub enum CliError {
    Domain(latcap::Error),
    Usage(String),
}

impl From<latcap::Error> for CliError {
    fn from(e: latcap::Error) -> Self {
        CliError::Domain(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Deserialize)]
struct ProblemFile {
    elements: Vec<String>,
    relation: Vec<(String, String)>,
    #[serde(default)]
    capacities: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default)]
    psi: Option<BTreeMap<String, String>>,
}

pub struct Problem {
    pub path: String,
    pub sha256: String,
    pub lattice: Arc<Lattice>,
    pub capacities: BTreeMap<String, LatticeFn>,
    pub psi: Option<LatticeFn>,
}

impl Problem {
    pub fn load(path: &Path, cap: Option<usize>) -> CliResult<Problem> {
        let bytes = std::fs::read(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&path.display().to_string(), &bytes, cap)
    }

    pub fn parse(label: &str, bytes: &[u8], cap: Option<usize>) -> CliResult<Problem> {
        let file: ProblemFile = serde_json::from_slice(bytes)
            .map_err(|e| CliError::Usage(format!("{label}: invalid problem file: {e}")))?;
        let sha256 = hex_digest(bytes);
        let lattice = Arc::new(Lattice::build_with_cap(
            &file.elements,
            &file.relation,
            cap.unwrap_or(latcap::lattice::DEFAULT_ELEMENT_CAP),
        )?);
        let mut capacities = BTreeMap::new();
        for (name, entries) in &file.capacities {
            capacities.insert(name.clone(), parse_fn(&lattice, entries, label, name)?);
        }
        let psi = match &file.psi {
            Some(entries) => Some(parse_fn(&lattice, entries, label, "psi")?),
            None => None,
        };
        Ok(Problem { path: label.to_string(), sha256, lattice, capacities, psi })
    }

    /// The named capacity, or the sole one when the name is omitted. The
    /// reserved name `psi` selects the joint section.
    pub fn capacity(&self, name: Option<&str>) -> CliResult<&LatticeFn> {
        match name {
            Some("psi") if self.psi.is_some() => Ok(self.psi.as_ref().unwrap()),
            Some(n) => self.capacities.get(n).ok_or_else(|| {
                CliError::Usage(format!(
                    "no capacity named `{n}` (available: {})",
                    self.capacities.keys().cloned().collect::<Vec<_>>().join(", ")
                ))
            }),
            None => {
                if self.capacities.len() == 1 {
                    Ok(self.capacities.values().next().unwrap())
                } else {
                    Err(CliError::Usage(format!(
                        "--capacity required (available: {})",
                        self.capacities.keys().cloned().collect::<Vec<_>>().join(", ")
                    )))
                }
            }
        }
    }

    pub fn psi(&self) -> CliResult<&LatticeFn> {
        self.psi
            .as_ref()
            .ok_or_else(|| CliError::Usage("this command needs a `psi` section".to_string()))
    }

    /// Elements named on the command line, comma separated.
    pub fn elems(&self, list: &str) -> CliResult<Vec<latcap::Elem>> {
        list.split(',')
            .map(|s| self.lattice.elem(s.trim()).map_err(CliError::from))
            .collect()
    }
}

fn parse_fn(
    lattice: &Arc<Lattice>,
    entries: &BTreeMap<String, String>,
    label: &str,
    name: &str,
) -> CliResult<LatticeFn> {
    let mut parsed = Vec::new();
    for (id, value) in entries {
        let r = parse_rational(value)
            .map_err(|e| CliError::Usage(format!("{label}: capacity `{name}`, element `{id}`: {e}")))?;
        parsed.push((id.clone(), r));
    }
    LatticeFn::from_sparse(lattice.clone(), &parsed).map_err(CliError::from)
}

pub fn hex_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    hasher.finalize().iter().map(|b| format!("{b:02x}")).collect()
}
