//! Generalized Cartan matrices and subsets of simple roots.

use std::collections::BTreeSet;
use std::fmt;

use num::Signed;

use crate::linalg::integer_determinant;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GcmViolation {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is empty")]
    Empty,
    #[error("diagonal entry a[{0}][{0}] is not 2")]
    DiagonalNotTwo(usize),
    #[error("off-diagonal entry a[{0}][{1}] is positive")]
    PositiveOffDiagonal(usize, usize),
    #[error("a[{0}][{1}] and a[{1}][{0}] disagree on being zero")]
    ZeroAsymmetry(usize, usize),
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("label {0:?} is used twice")]
    DuplicateLabel(String),
}

/// Every violated invariant of a candidate Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid generalized Cartan matrix: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
pub struct InvalidGcm(pub Vec<GcmViolation>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedCartanMatrix {
    entries: Vec<Vec<i64>>,
    labels: Vec<String>,
}

pub fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("a{i}")).collect()
}

/// Validates `a` and attaches the default labels `a0, a1, ...`.
pub fn validate_gcm(a: Vec<Vec<i64>>) -> Result<GeneralizedCartanMatrix, InvalidGcm> {
    let n = a.len();
    GeneralizedCartanMatrix::with_labels(a, default_labels(n))
}

impl GeneralizedCartanMatrix {
    pub fn with_labels(
        entries: Vec<Vec<i64>>,
        labels: Vec<String>,
    ) -> Result<Self, InvalidGcm> {
        let n = entries.len();
        if n == 0 {
            return Err(InvalidGcm(vec![GcmViolation::Empty]));
        }
        if entries.iter().any(|r| r.len() != n) {
            return Err(InvalidGcm(vec![GcmViolation::NotSquare]));
        }
        let mut bad = Vec::new();
        for i in 0..n {
            if entries[i][i] != 2 {
                bad.push(GcmViolation::DiagonalNotTwo(i));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if entries[i][j] > 0 {
                    bad.push(GcmViolation::PositiveOffDiagonal(i, j));
                }
                if i < j && ((entries[i][j] == 0) != (entries[j][i] == 0)) {
                    bad.push(GcmViolation::ZeroAsymmetry(i, j));
                }
            }
        }
        if labels.len() != n {
            bad.push(GcmViolation::LabelCount { expected: n, found: labels.len() });
        } else {
            let mut seen = BTreeSet::new();
            for l in &labels {
                if !seen.insert(l.as_str()) {
                    bad.push(GcmViolation::DuplicateLabel(l.clone()));
                }
            }
        }
        if bad.is_empty() {
            Ok(Self { entries, labels })
        } else {
            Err(InvalidGcm(bad))
        }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// `<alpha_i^vee, alpha_j>`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn full_set(&self) -> SimpleRootSubset {
        SimpleRootSubset::all(self.rank())
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.entries[i][j] != 0
    }

    /// Principal submatrix on `subset`, with labels carried over.
    pub fn principal_submatrix(&self, subset: &SimpleRootSubset) -> GeneralizedCartanMatrix {
        let idx: Vec<usize> = subset.iter().collect();
        let entries = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| self.entries[i][j]).collect())
            .collect();
        let labels = idx.iter().map(|&i| self.labels[i].clone()).collect();
        GeneralizedCartanMatrix { entries, labels }
    }

    pub fn check_subset(&self, subset: &SimpleRootSubset) -> Result<(), SubsetOutOfRange> {
        match subset.iter().find(|&i| i >= self.rank()) {
            Some(i) => Err(SubsetOutOfRange { index: i, rank: self.rank() }),
            None => Ok(()),
        }
    }

    /// Parses a comma-separated list of labels or indices.
    pub fn parse_subset(&self, list: &str) -> Result<SimpleRootSubset, UnknownLabel> {
        let mut out = SimpleRootSubset::empty();
        for tok in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let i = self
                .index_of(tok)
                .or_else(|| tok.parse::<usize>().ok().filter(|&i| i < self.rank()))
                .ok_or_else(|| UnknownLabel(tok.to_string()))?;
            out.insert(i);
        }
        Ok(out)
    }

    pub fn subset_labels(&self, subset: &SimpleRootSubset) -> Vec<String> {
        subset.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// Partition of `subset` into connected pieces of the Dynkin diagram.
    pub fn connected_components(&self, subset: &SimpleRootSubset) -> Vec<SimpleRootSubset> {
        let mut remaining: BTreeSet<usize> = subset.iter().collect();
        let mut out = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            remaining.remove(&start);
            let mut comp = SimpleRootSubset::empty();
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                comp.insert(i);
                let next: Vec<usize> =
                    remaining.iter().copied().filter(|&j| self.adjacent(i, j)).collect();
                for j in next {
                    remaining.remove(&j);
                    stack.push(j);
                }
            }
            out.push(comp);
        }
        out
    }

    /// Whether every connected component of `subset` is a finite Dynkin diagram.
    ///
    /// Uses the criterion that an indecomposable GCM is of finite type exactly
    /// when all of its principal minors are positive. No symmetrizability
    /// test is needed: a non-symmetrizable matrix always has a nonpositive
    /// principal minor.
    pub fn is_finite_type(&self, subset: &SimpleRootSubset) -> bool {
        self.connected_components(subset)
            .iter()
            .all(|c| self.principal_minors_positive(c))
    }

    fn principal_minors_positive(&self, component: &SimpleRootSubset) -> bool {
        let idx: Vec<usize> = component.iter().collect();
        let k = idx.len();
        // Every minor of size <= 1 is 2.
        (1u64..(1 << k)).filter(|m| m.count_ones() >= 2).all(|mask| {
            let rows: Vec<usize> =
                (0..k).filter(|b| mask & (1 << b) != 0).map(|b| idx[b]).collect();
            let minor: Vec<Vec<i64>> = rows
                .iter()
                .map(|&i| rows.iter().map(|&j| self.entries[i][j]).collect())
                .collect();
            integer_determinant(&minor).is_positive()
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("simple root index {index} out of range for rank {rank}")]
pub struct SubsetOutOfRange {
    pub index: usize,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown simple root {0:?}")]
pub struct UnknownLabel(pub String);

/// A set of simple roots, stored as sorted node indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleRootSubset(BTreeSet<usize>);

impl SimpleRootSubset {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn all(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn insert(&mut self, i: usize) -> bool {
        self.0.insert(i)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn union(&self, other: &Self) -> Self {
        Self(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self(self.0.difference(&other.0).copied().collect())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Subsets of a set of size `n` encoded as a bit mask.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        Self((0..n).filter(|i| mask & (1 << i) != 0).collect())
    }
}

impl FromIterator<usize> for SimpleRootSubset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl fmt::Display for SimpleRootSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

pub mod known {
    //! Cartan matrices that appear throughout the tests and fixtures.

    pub fn a1() -> Vec<Vec<i64>> {
        vec![vec![2]]
    }

    pub fn a1_affine() -> Vec<Vec<i64>> {
        vec![vec![2, -2], vec![-2, 2]]
    }

    pub fn a2_affine() -> Vec<Vec<i64>> {
        vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]
    }

    /// Nodes 0-1 joined by a simple edge, 1-2 by a triple edge.
    pub fn g2_affine() -> Vec<Vec<i64>> {
        vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -3, 2]]
    }
}
