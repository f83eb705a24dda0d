use std::fmt;

use num::{Integer as _, One, Signed, Zero};

use super::HomogeneousSphericalDatum;
use crate::cartan::SimpleRootSubset;
use crate::rational::format_rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Warn,
    Unconfirmed,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Warn => "warn",
            Status::Unconfirmed => "unconfirmed",
            Status::Fail => "fail",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: &'static str,
    pub status: Status,
    pub reasons: Vec<String>,
}

impl AxiomResult {
    fn from_failures(axiom: &'static str, reasons: Vec<String>) -> Self {
        let status = if reasons.is_empty() { Status::Pass } else { Status::Fail };
        Self { axiom, status, reasons }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl HomogeneousSphericalDatum {
    fn rho_label(&self, d: usize) -> String {
        format!("rho({})", self.a()[d].name)
    }

    /// Values of every element of `A` are at most 1 on `Sigma`, and positive
    /// values only occur on spherical roots that are simple roots. In strict
    /// mode every positive value must also put the element into `A(sigma)`.
    pub fn check_a1(&self, strict: bool) -> AxiomResult {
        let mut reasons = Vec::new();
        for (d, delta) in self.a().iter().enumerate() {
            for k in 0..self.sigma().len() {
                let v = self.value(delta, k);
                let s = self.describe_sigma(k);
                let simple = self.space().as_simple_root(&self.sigma()[k]).is_some();
                if v > One::one() {
                    reasons.push(format!("{}({s}) = {} exceeds 1", self.rho_label(d), format_rational(&v)));
                    continue;
                }
                if strict && v.is_positive() && !simple {
                    reasons.push(format!(
                        "{}({s}) = {} is positive but {s} is not a simple root",
                        self.rho_label(d),
                        format_rational(&v)
                    ));
                } else if v.is_one() && !simple {
                    reasons.push(format!("{}({s}) = 1 but {s} is not a simple root", self.rho_label(d)));
                } else if strict && v.is_positive() && !v.is_one() {
                    reasons.push(format!(
                        "{}({s}) = {} is positive but {} is not in A({s})",
                        self.rho_label(d),
                        format_rational(&v),
                        delta.name
                    ));
                }
            }
        }
        AxiomResult::from_failures("A1", reasons)
    }

    /// Each simple spherical root has exactly two elements in `A(alpha)`,
    /// whose functionals add up to the coroot restricted to `Xi`.
    pub fn check_a2(&self) -> AxiomResult {
        let mut reasons = Vec::new();
        for (k, i) in self.simple_spherical_roots() {
            let s = self.describe_sigma(k);
            let members = self.a_of(i);
            if members.len() != 2 {
                let names: Vec<&str> = members.iter().map(|&d| self.a()[d].name.as_str()).collect();
                reasons.push(format!("A({s}) has {} elements [{}], expected 2", members.len(), names.join(", ")));
                continue;
            }
            let sum = self.a()[members[0]].rho.add(&self.a()[members[1]].rho);
            let coroot = self.coroot_restriction(i);
            if sum != coroot {
                reasons.push(format!(
                    "rho({}) + rho({}) = {sum} differs from the coroot of {s} on Xi, {coroot}",
                    self.a()[members[0]].name,
                    self.a()[members[1]].name
                ));
            }
        }
        AxiomResult::from_failures("A2", reasons)
    }

    /// `A` is the union of the sets `A(alpha)`.
    pub fn check_a3(&self) -> AxiomResult {
        let mut used = vec![false; self.a().len()];
        for (_, i) in self.simple_spherical_roots() {
            for d in self.a_of(i) {
                used[d] = true;
            }
        }
        let reasons = used
            .iter()
            .enumerate()
            .filter(|(_, u)| !**u)
            .map(|(d, _)| format!("{} takes value 1 on no simple spherical root", self.a()[d].name))
            .collect();
        AxiomResult::from_failures("A3", reasons)
    }

    /// If `2 alpha` is a spherical root, `alpha^vee` is even on `Xi`.
    pub fn check_sigma1(&self) -> AxiomResult {
        let mut reasons = Vec::new();
        for i in 0..self.simple_count() {
            if self.sigma_index_of_doubled(i).is_none() {
                continue;
            }
            let coroot = self.coroot_restriction(i);
            let two = 2.into();
            let even = coroot
                .values()
                .iter()
                .all(|v| v.is_integer() && v.to_integer().is_multiple_of(&two));
            if !even {
                reasons.push(format!(
                    "2{} is a spherical root but the coroot of {} takes values {coroot} on Xi",
                    self.label(i),
                    self.label(i)
                ));
            }
        }
        AxiomResult::from_failures("Sigma1", reasons)
    }

    /// Orthogonal `alpha, beta` with `alpha+beta` or half of it in `Sigma`
    /// have equal coroots on `Xi`.
    pub fn check_sigma2(&self) -> AxiomResult {
        let mut reasons = Vec::new();
        for k in 0..self.sigma().len() {
            let Some((i, j)) = self.orthogonal_pair_shape(k) else {
                continue;
            };
            let (ci, cj) = (self.coroot_restriction(i), self.coroot_restriction(j));
            if ci != cj {
                reasons.push(format!(
                    "{} is in Sigma but the coroots of {} and {} differ on Xi: {ci} vs {cj}",
                    self.describe_sigma(k),
                    self.label(i),
                    self.label(j)
                ));
            }
        }
        AxiomResult::from_failures("Sigma2", reasons)
    }

    /// Splits the simple roots by the way they move colors.
    pub fn type_partition(&self) -> Result<TypePartition, TypePartitionError> {
        let mut part = TypePartition::default();
        for i in 0..self.simple_count() {
            let in_sigma = self.sigma_index_of_simple(i).is_some();
            let doubled = self.sigma_index_of_doubled(i).is_some();
            if self.sp().contains(i) {
                if in_sigma || doubled {
                    return Err(TypePartitionError::OverlapWithSp(self.label(i).to_string()));
                }
                if !self.coroot_restriction(i).values().iter().all(Zero::is_zero) {
                    return Err(TypePartitionError::SpMovesColor(self.label(i).to_string()));
                }
                part.sp.insert(i);
            } else if in_sigma {
                part.sa.insert(i);
            } else if doubled {
                part.s2a.insert(i);
            } else {
                part.sb.insert(i);
            }
        }
        Ok(part)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TypePartition {
    pub sa: SimpleRootSubset,
    pub s2a: SimpleRootSubset,
    pub sb: SimpleRootSubset,
    pub sp: SimpleRootSubset,
}

impl TypePartition {
    /// One of `a`, `2a`, `b`, `p`.
    pub fn type_of(&self, i: usize) -> &'static str {
        if self.sa.contains(i) {
            "a"
        } else if self.s2a.contains(i) {
            "2a"
        } else if self.sp.contains(i) {
            "p"
        } else {
            "b"
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TypePartitionError {
    #[error("{0} is in S^p but also of type a or 2a")]
    OverlapWithSp(String),
    #[error("{0} is in S^p but its coroot does not vanish on Xi")]
    SpMovesColor(String),
}
