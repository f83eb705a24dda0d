//! Axiom S: compatibility of each spherical root with `S^p`.
//!
//! A few shapes are decided by built-in rules. Everything else is looked up
//! in a registry keyed by the root coordinates of `sigma` and by
//! `S^p` intersected with the support of `sigma`.

use num::{One, Signed, Zero};

use super::{AxiomResult, HomogeneousSphericalDatum, Status};
use crate::cartan::SimpleRootSubset;
use crate::characters::describe_root_coordinates;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompatStatus {
    Compatible,
    Incompatible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatEntry {
    /// Simple-root coordinates of the spherical root.
    pub sigma: Vec<Rational>,
    pub sp_cap_supp: SimpleRootSubset,
    pub status: CompatStatus,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RegistryError {
    #[error("registry entry {0} has an empty note")]
    MissingNote(usize),
    #[error("registry entry {0} lists {1} twice")]
    Duplicate(usize, String),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Registry {
    entries: Vec<CompatEntry>,
}

impl Registry {
    pub fn new(entries: Vec<CompatEntry>) -> Result<Self, RegistryError> {
        for (i, e) in entries.iter().enumerate() {
            if e.note.trim().is_empty() {
                return Err(RegistryError::MissingNote(i));
            }
            if entries[..i].iter().any(|f| f.sigma == e.sigma && f.sp_cap_supp == e.sp_cap_supp) {
                return Err(RegistryError::Duplicate(i, format!("{:?}", e.sigma)));
            }
        }
        Ok(Self { entries })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn entries(&self) -> &[CompatEntry] {
        &self.entries
    }

    pub fn merged(&self, other: &Registry) -> Registry {
        let mut entries = self.entries.clone();
        for e in &other.entries {
            if !entries.iter().any(|f| f.sigma == e.sigma && f.sp_cap_supp == e.sp_cap_supp) {
                entries.push(e.clone());
            }
        }
        Registry { entries }
    }

    pub fn lookup(&self, sigma: &[Rational], sp_cap_supp: &SimpleRootSubset) -> Option<&CompatEntry> {
        self.entries
            .iter()
            .find(|e| e.sigma == sigma && e.sp_cap_supp == *sp_cap_supp)
    }
}

impl HomogeneousSphericalDatum {
    /// Axiom S. Roots not settled by a rule or the registry are reported as
    /// unconfirmed, which counts as a failure in strict mode.
    pub fn check_s(&self, registry: &Registry, strict: bool) -> AxiomResult {
        let mut failures = Vec::new();
        let mut unconfirmed = Vec::new();
        let two = Rational::from_integer(2.into());
        let labels = self.space().gcm().labels();
        for k in 0..self.sigma().len() {
            let Some(c) = self.sigma_root_coordinates(k) else {
                failures.push(format!(
                    "{} is not a unique rational combination of simple roots",
                    self.describe_sigma(k)
                ));
                continue;
            };
            let s = describe_root_coordinates(labels, &c);
            if c.iter().any(Signed::is_negative) {
                failures.push(format!("{s} has a negative simple-root coefficient"));
                continue;
            }
            let support: SimpleRootSubset =
                (0..c.len()).filter(|&i| !c[i].is_zero()).collect();
            let in_sp: Vec<usize> = support.iter().filter(|&i| self.sp().contains(i)).collect();

            if support.len() == 1 {
                let i = support.iter().next().unwrap();
                let m = &c[i];
                if !(m.is_one() || *m == two) {
                    failures.push(format!("{s} is a multiple of a simple root other than 1 or 2 times it"));
                } else if self.sp().contains(i) {
                    failures.push(format!("{s} is incompatible with S^p, which contains {}", labels[i]));
                }
                continue;
            }
            if let Some((i, j)) = self.orthogonal_pair_shape(k) {
                if !in_sp.is_empty() {
                    failures.push(format!(
                        "{s} needs {} and {} outside S^p",
                        labels[i], labels[j]
                    ));
                }
                continue;
            }
            let key: SimpleRootSubset = in_sp.into_iter().collect();
            match registry.lookup(&c, &key) {
                Some(e) if e.status == CompatStatus::Compatible => {}
                Some(e) => failures.push(format!("{s} is incompatible with S^p per registry ({})", e.note)),
                None => unconfirmed.push(format!("compatibility unconfirmed for {s}")),
            }
        }
        let status = if !failures.is_empty() || (strict && !unconfirmed.is_empty()) {
            Status::Fail
        } else if !unconfirmed.is_empty() {
            Status::Unconfirmed
        } else {
            Status::Pass
        };
        failures.extend(unconfirmed);
        AxiomResult { axiom: "S", status, reasons: failures }
    }
}
