use std::fmt::Write as _;

use serde_json::{json, Value};

use super::{
    AxiomResult, Color, FiniteTypeError, FiniteTypeOptions, HomogeneousSphericalDatum, Registry, Status,
    TypePartition, Witness,
};
use crate::cartan::SimpleRootSubset;
use crate::rational::{format_vec, to_exact};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ValidationOptions {
    pub strict_compat: bool,
    pub lenient_a1: bool,
    pub finite_type: FiniteTypeOptions,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiniteTypeOutcome {
    Found(Witness),
    Absent,
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub name: String,
    pub rank: usize,
    pub axioms: Vec<AxiomResult>,
    /// All of A1, A2, A3, Sigma1, Sigma2 pass and S has no failure.
    pub axioms_pass: bool,
    pub partition: Result<TypePartition, String>,
    pub colors: Result<Vec<Color>, String>,
    pub finite_type: FiniteTypeOutcome,
    pub lints: Vec<String>,
    pub warnings: Vec<String>,
    pub notes: Vec<String>,
    labels: Vec<String>,
    a_names: Vec<String>,
    sigma_names: Vec<String>,
}

impl ValidationReport {
    /// Axioms pass and a finite-type witness exists.
    pub fn pass(&self) -> bool {
        self.axioms_pass && matches!(self.finite_type, FiniteTypeOutcome::Found(_))
    }

    pub fn axiom(&self, name: &str) -> Option<&AxiomResult> {
        self.axioms.iter().find(|a| a.axiom == name)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.finite_type {
            FiniteTypeOutcome::Found(w) => Some(w),
            _ => None,
        }
    }

    fn names(&self, s: &SimpleRootSubset) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn finite_type_label(&self) -> &'static str {
        match self.finite_type {
            FiniteTypeOutcome::Found(_) => "FOUND",
            FiniteTypeOutcome::Absent => "ABSENT",
            FiniteTypeOutcome::Skipped(_) => "SKIPPED",
        }
    }

    pub fn to_json(&self) -> Value {
        let axioms: serde_json::Map<String, Value> = self
            .axioms
            .iter()
            .map(|a| (a.axiom.to_string(), json!({ "status": a.status.as_str(), "reasons": a.reasons })))
            .collect();
        let partition = match &self.partition {
            Ok(p) => json!({
                "a": self.names(&p.sa),
                "2a": self.names(&p.s2a),
                "b": self.names(&p.sb),
                "p": self.names(&p.sp),
            }),
            Err(e) => json!({ "error": e }),
        };
        let colors = match &self.colors {
            Ok(cs) => Value::Array(
                cs.iter()
                    .map(|c| {
                        json!({
                            "id": c.id,
                            "kind": c.kind.as_str(),
                            "movers": self.names(&c.movers),
                            "rho": to_exact(c.functional.values()),
                        })
                    })
                    .collect(),
            ),
            Err(e) => json!({ "error": e }),
        };
        let finite_type = match &self.finite_type {
            FiniteTypeOutcome::Found(w) => json!({
                "status": "FOUND",
                "A1": w.a1.iter().map(|&d| self.a_names[d].clone()).collect::<Vec<_>>(),
                "S1": self.names(&w.s1),
                "S2": self.names(&w.s2),
                "coefficients": to_exact(&w.coefficients),
                "eta": to_exact(w.eta.values()),
                "eta_on_sigma": to_exact(&w.eta_on_sigma),
            }),
            FiniteTypeOutcome::Absent => json!({ "status": "ABSENT" }),
            FiniteTypeOutcome::Skipped(why) => json!({ "status": "SKIPPED", "reason": why }),
        };
        json!({
            "name": self.name,
            "rank": self.rank,
            "sigma": self.sigma_names,
            "axioms": axioms,
            "axioms_pass": self.axioms_pass,
            "type_partition": partition,
            "colors": colors,
            "finite_type": finite_type,
            "lints": self.lints,
            "warnings": self.warnings,
            "notes": self.notes,
            "pass": self.pass(),
        })
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "datum {} (rank {})", self.name, self.rank);
        for a in &self.axioms {
            let _ = writeln!(out, "{}: {}", a.axiom, a.status);
            for r in &a.reasons {
                let _ = writeln!(out, "  - {r}");
            }
        }
        if let Ok(p) = &self.partition {
            let _ = writeln!(
                out,
                "types: a={{{}}} 2a={{{}}} b={{{}}} p={{{}}}",
                self.names(&p.sa).join(","),
                self.names(&p.s2a).join(","),
                self.names(&p.sb).join(","),
                self.names(&p.sp).join(",")
            );
        }
        match &self.finite_type {
            FiniteTypeOutcome::Found(w) => {
                let a1: Vec<&str> = w.a1.iter().map(|&d| self.a_names[d].as_str()).collect();
                let _ = writeln!(
                    out,
                    "finite-type: FOUND (A1={{{}}}, S2={{{}}}, eta on Sigma = {})",
                    a1.join(","),
                    self.names(&w.s2).join(","),
                    format_vec(&w.eta_on_sigma)
                );
            }
            FiniteTypeOutcome::Absent => {
                let _ = writeln!(out, "finite-type: ABSENT");
            }
            FiniteTypeOutcome::Skipped(why) => {
                let _ = writeln!(out, "finite-type: SKIPPED ({why})");
            }
        }
        for l in &self.lints {
            let _ = writeln!(out, "lint: {l}");
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        let _ = writeln!(out, "result: {}", if self.pass() { "PASS" } else { "FAIL" });
        out
    }
}

impl HomogeneousSphericalDatum {
    pub fn validate(
        &self,
        name: &str,
        registry: &Registry,
        options: &ValidationOptions,
    ) -> Result<ValidationReport, FiniteTypeError> {
        let axioms = vec![
            self.check_a1(!options.lenient_a1),
            self.check_a2(),
            self.check_a3(),
            self.check_sigma1(),
            self.check_sigma2(),
            self.check_s(registry, options.strict_compat),
        ];
        let axioms_pass = axioms.iter().all(|a| a.status != Status::Fail);
        let partition = self.type_partition().map_err(|e| e.to_string());
        let colors = self.derive_colors().map_err(|e| e.to_string());

        let finite_type = if !axioms[..5].iter().all(AxiomResult::passed) {
            FiniteTypeOutcome::Skipped("axioms A1-Sigma2 do not all pass".into())
        } else if let Err(e) = &colors {
            FiniteTypeOutcome::Skipped(e.clone())
        } else {
            match self.check_finite_type(&options.finite_type)? {
                Some(w) => FiniteTypeOutcome::Found(w),
                None => FiniteTypeOutcome::Absent,
            }
        };

        let mut lints = Vec::new();
        if self.sigma().is_empty() {
            lints.push("Sigma is empty: the datum is horospherical".to_string());
        } else if !self.sigma_is_independent() {
            lints.push("Sigma is linearly dependent".to_string());
        }
        for k in 0..self.sigma().len() {
            match self.sigma_is_nonnegative(k) {
                Some(true) => {}
                Some(false) => lints.push(format!(
                    "{} is not a non-negative combination of simple roots",
                    self.describe_sigma(k)
                )),
                None => lints.push(format!("{} is not in the span of the simple roots", self.describe_sigma(k))),
            }
        }
        let warnings = axioms
            .iter()
            .filter(|a| a.status == Status::Unconfirmed)
            .flat_map(|a| a.reasons.iter().cloned())
            .collect();

        let mut notes = vec![
            "A1: an element with value 1 on sigma requires sigma itself to be a simple root".to_string(),
            "S: registry entries are keyed by S^p intersected with the support of sigma".to_string(),
        ];
        notes.push(if options.lenient_a1 {
            "A1: lenient mode, only the value-1 clause is checked".to_string()
        } else {
            "A1: strict mode, every positive value must come from A(sigma)".to_string()
        });
        notes.push(if options.finite_type.include_doubled_in_s2 {
            "finite type: roots of type 2a may belong to S2".to_string()
        } else {
            "finite type: roots of type 2a are excluded from S2".to_string()
        });

        Ok(ValidationReport {
            name: name.to_string(),
            rank: self.rank(),
            axioms,
            axioms_pass,
            partition,
            colors,
            finite_type,
            lints,
            warnings,
            notes,
            labels: self.space().gcm().labels().to_vec(),
            a_names: self.a().iter().map(|d| d.name.clone()).collect(),
            sigma_names: (0..self.sigma().len()).map(|k| self.describe_sigma(k)).collect(),
        })
    }
}
