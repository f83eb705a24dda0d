use super::{load_str, LoadError, Loaded};

/// A bundled fixture together with its expected JSON report, computed with
/// default options and no external registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub source: &'static str,
    pub expected_report: &'static str,
}

impl CorpusEntry {
    pub fn load(&self) -> Result<Loaded, LoadError> {
        load_str(self.source)
    }

    pub fn expected_json(&self) -> serde_json::Value {
        serde_json::from_str(self.expected_report).expect("bundled report is valid JSON")
    }
}

macro_rules! entry {
    ($name:literal) => {
        CorpusEntry {
            name: $name,
            source: include_str!(concat!("../../fixtures/", $name, ".json")),
            expected_report: include_str!(concat!("../../fixtures/expected/", $name, ".json")),
        }
    };
}

pub fn corpus() -> Vec<CorpusEntry> {
    vec![
        entry!("ex_verysolv"),
        entry!("ex_second"),
        entry!("ex_second_K"),
        entry!("ex_conj"),
        entry!("ex_new"),
        entry!("ex_veryred"),
    ]
}

/// Bundled compatibility registry for a Cartan matrix, by name.
pub fn registry_fixture(name: &str) -> Option<&'static str> {
    match name {
        "g2_affine" => Some(include_str!("../../fixtures/registry/g2_affine.json")),
        "a2_affine" => Some(include_str!("../../fixtures/registry/a2_affine.json")),
        _ => None,
    }
}
