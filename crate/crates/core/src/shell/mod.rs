//! JSON file format, diagram emitters and the bundled fixture corpus.

mod corpus;
mod diagram;

pub use corpus::{corpus, registry_fixture, CorpusEntry};
pub use diagram::{emit_diagram, DiagramFormat, DiagramRendering};

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cartan::{default_labels, GeneralizedCartanMatrix, SimpleRootSubset};
use crate::characters::{AmbientSpace, Character};
use crate::cones::{Functional, IntegerLattice};
use crate::datum::{AElement, CompatEntry, CompatStatus, HomogeneousSphericalDatum, Registry};
use crate::rational::{from_exact, to_exact, Exact};

pub const MAX_SUBSETS_VAR: &str = "KMSPH_MAX_SUBSETS";
pub const DEFAULT_MAX_SUBSETS: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumFile {
    pub name: String,
    pub cartan: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient: Option<AmbientBlock>,
    pub datum: DatumBlock,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub compat_registry: Option<Vec<RegistryEntryFile>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color_map: Option<BTreeMap<String, String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmbientBlock {
    pub dim: usize,
    pub simple_roots: Vec<Vec<Exact>>,
    pub coroot_pairing: Vec<Vec<Exact>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumBlock {
    #[serde(rename = "Sp", default)]
    pub sp: Vec<String>,
    #[serde(rename = "Sigma")]
    pub sigma: Vec<Vec<Exact>>,
    /// Omitted for spherical systems, where the lattice is spanned by Sigma.
    #[serde(rename = "Xi_basis", default, skip_serializing_if = "Option::is_none")]
    pub xi_basis: Option<Vec<Vec<Exact>>>,
    #[serde(rename = "A", default)]
    pub a: Vec<AElementFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AElementFile {
    pub name: String,
    pub rho: Vec<Exact>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegistryEntryFile {
    /// Simple-root coordinates of the spherical root.
    pub sigma: Vec<Exact>,
    #[serde(rename = "Sp_cap_supp")]
    pub sp_cap_supp: Vec<String>,
    pub status: String,
    pub note: String,
}

/// A standalone registry file, tied to one Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegistryFile {
    pub cartan: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub entries: Vec<RegistryEntryFile>,
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
}

impl LoadError {
    fn from_json(e: serde_json::Error) -> Self {
        use serde_json::error::Category;
        match e.classify() {
            Category::Syntax | Category::Eof | Category::Io => {
                LoadError::Parse { line: e.line(), column: e.column(), message: e.to_string() }
            }
            Category::Data => LoadError::Schema(e.to_string()),
        }
    }
}

/// A loaded and fully validated file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loaded {
    pub name: String,
    pub datum: HomogeneousSphericalDatum,
    pub registry: Registry,
    pub color_map: Option<BTreeMap<String, String>>,
}

impl Loaded {
    pub fn gcm(&self) -> &GeneralizedCartanMatrix {
        self.datum.space().gcm()
    }
}

fn invariant(e: impl std::fmt::Display) -> LoadError {
    LoadError::Invariant(e.to_string())
}

fn build_gcm(cartan: &[Vec<i64>], labels: &Option<Vec<String>>) -> Result<GeneralizedCartanMatrix, LoadError> {
    let labels = labels.clone().unwrap_or_else(|| default_labels(cartan.len()));
    GeneralizedCartanMatrix::with_labels(cartan.to_vec(), labels).map_err(invariant)
}

fn parse_labels(gcm: &GeneralizedCartanMatrix, labels: &[String], field: &str) -> Result<SimpleRootSubset, LoadError> {
    let mut out = SimpleRootSubset::empty();
    for l in labels {
        let i = gcm
            .index_of(l)
            .ok_or_else(|| LoadError::Schema(format!("{field}: unknown simple root {l:?}")))?;
        out.insert(i);
    }
    Ok(out)
}

fn registry_entries(gcm: &GeneralizedCartanMatrix, entries: &[RegistryEntryFile]) -> Result<Registry, LoadError> {
    let mut out = Vec::with_capacity(entries.len());
    for e in entries {
        if e.sigma.len() != gcm.rank() {
            return Err(LoadError::Schema(format!(
                "registry sigma has {} coordinates, expected {}",
                e.sigma.len(),
                gcm.rank()
            )));
        }
        let status = match e.status.as_str() {
            "compatible" => CompatStatus::Compatible,
            "incompatible" => CompatStatus::Incompatible,
            other => return Err(LoadError::Schema(format!("registry status {other:?} is not compatible/incompatible"))),
        };
        out.push(CompatEntry {
            sigma: from_exact(&e.sigma),
            sp_cap_supp: parse_labels(gcm, &e.sp_cap_supp, "Sp_cap_supp")?,
            status,
            note: e.note.clone(),
        });
    }
    Registry::new(out).map_err(invariant)
}

impl DatumFile {
    pub fn parse(text: &str) -> Result<Self, LoadError> {
        serde_json::from_str(text).map_err(LoadError::from_json)
    }

    pub fn into_loaded(self) -> Result<Loaded, LoadError> {
        let gcm = build_gcm(&self.cartan, &self.labels)?;
        let space = match &self.ambient {
            None => AmbientSpace::root_lattice(gcm.clone()),
            Some(b) => AmbientSpace::new(
                gcm.clone(),
                b.dim,
                b.simple_roots.iter().map(|r| from_exact(r)).collect(),
                b.coroot_pairing.iter().map(|r| from_exact(r)).collect(),
            )
            .map_err(|errs| {
                LoadError::Invariant(errs.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))
            })?,
        };
        let sp = parse_labels(&gcm, &self.datum.sp, "Sp")?;
        let sigma: Vec<Character> = self.datum.sigma.iter().map(|s| Character::new(from_exact(s))).collect();
        if let Some(s) = sigma.iter().find(|s| s.dim() != space.dim()) {
            return Err(LoadError::Schema(format!(
                "Sigma entry {s} has {} coordinates, ambient dimension is {}",
                s.dim(),
                space.dim()
            )));
        }
        let a: Vec<AElement> = self
            .datum
            .a
            .iter()
            .map(|e| AElement::new(e.name.clone(), Functional::new(from_exact(&e.rho))))
            .collect();
        let datum = match &self.datum.xi_basis {
            Some(rows) => {
                let xi = IntegerLattice::new(space.dim(), rows.iter().map(|r| from_exact(r)).collect())
                    .map_err(invariant)?;
                HomogeneousSphericalDatum::new(space, sp, sigma, xi, a)
            }
            None => HomogeneousSphericalDatum::spherical_system(space, sp, sigma, a),
        }
        .map_err(invariant)?;
        let registry = match &self.compat_registry {
            Some(entries) => registry_entries(&gcm, entries)?,
            None => Registry::empty(),
        };
        Ok(Loaded { name: self.name, datum, registry, color_map: self.color_map })
    }

    pub fn from_datum(
        name: &str,
        datum: &HomogeneousSphericalDatum,
        registry: &Registry,
        color_map: Option<BTreeMap<String, String>>,
    ) -> Self {
        let space = datum.space();
        let gcm = space.gcm();
        let labels = (gcm.labels() != default_labels(gcm.rank()).as_slice()).then(|| gcm.labels().to_vec());
        let ambient = (!space.is_root_lattice_model()).then(|| AmbientBlock {
            dim: space.dim(),
            simple_roots: space.simple_roots().iter().map(|r| to_exact(r)).collect(),
            coroot_pairing: space.coroot_pairing().iter().map(|r| to_exact(r)).collect(),
        });
        let compat_registry = (!registry.entries().is_empty()).then(|| {
            registry
                .entries()
                .iter()
                .map(|e| RegistryEntryFile {
                    sigma: to_exact(&e.sigma),
                    sp_cap_supp: gcm.subset_labels(&e.sp_cap_supp),
                    status: match e.status {
                        CompatStatus::Compatible => "compatible".into(),
                        CompatStatus::Incompatible => "incompatible".into(),
                    },
                    note: e.note.clone(),
                })
                .collect()
        });
        DatumFile {
            name: name.to_string(),
            cartan: gcm.entries().to_vec(),
            labels,
            ambient,
            datum: DatumBlock {
                sp: gcm.subset_labels(datum.sp()),
                sigma: datum.sigma().iter().map(|s| to_exact(s.coords())).collect(),
                xi_basis: Some(datum.xi().basis().iter().map(|r| to_exact(r)).collect()),
                a: datum
                    .a()
                    .iter()
                    .map(|e| AElementFile { name: e.name.clone(), rho: to_exact(e.rho.values()) })
                    .collect(),
            },
            compat_registry,
            color_map,
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("datum file serializes");
        s.push('\n');
        s
    }
}

pub fn load_str(text: &str) -> Result<Loaded, LoadError> {
    DatumFile::parse(text)?.into_loaded()
}

pub fn load(path: impl AsRef<Path>) -> Result<Loaded, LoadError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|source| LoadError::Io { path: path.display().to_string(), source })?;
    load_str(&text)
}

pub fn save(path: impl AsRef<Path>, file: &DatumFile) -> std::io::Result<()> {
    std::fs::write(path, file.to_json_string())
}

/// Parses a registry file and checks that it belongs to `gcm`.
pub fn load_registry_str(text: &str, gcm: &GeneralizedCartanMatrix) -> Result<Registry, LoadError> {
    let file: RegistryFile = serde_json::from_str(text).map_err(LoadError::from_json)?;
    let own = build_gcm(&file.cartan, &file.labels)?;
    if own.entries() != gcm.entries() {
        return Err(LoadError::Invariant("registry was written for a different Cartan matrix".into()));
    }
    registry_entries(gcm, &file.entries)
}

pub fn load_registry(path: impl AsRef<Path>, gcm: &GeneralizedCartanMatrix) -> Result<Registry, LoadError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|source| LoadError::Io { path: path.display().to_string(), source })?;
    load_registry_str(&text, gcm)
}

/// Subset limit from the environment, or the default.
pub fn max_subsets_from_env() -> Result<u64, String> {
    match std::env::var(MAX_SUBSETS_VAR) {
        Err(_) => Ok(DEFAULT_MAX_SUBSETS),
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| format!("{MAX_SUBSETS_VAR} must be a positive integer, got {v:?}")),
    }
}
