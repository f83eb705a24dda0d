//! Homogeneous spherical data, Luna's axioms, colors and the finite-type
//! condition.

mod axioms;
mod colors;
mod compat;
mod finite_type;
mod report;

pub use axioms::{AxiomResult, Status, TypePartition, TypePartitionError};
pub use colors::{Color, ColorError, ColorKind};
pub use compat::{CompatEntry, CompatStatus, Registry, RegistryError};
pub use finite_type::{FiniteTypeError, FiniteTypeOptions, Witness, WitnessElement};
pub use report::{FiniteTypeOutcome, ValidationOptions, ValidationReport};

use std::collections::BTreeSet;

use num::{One, Signed, Zero};

use crate::cartan::SimpleRootSubset;
use crate::characters::{AmbientSpace, Character};
use crate::cones::{Functional, IntegerLattice};
use crate::linalg::rank;
use crate::rational::{from_integers, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DatumError {
    #[error("S^p contains index {0}, outside the simple roots")]
    SpOutOfRange(usize),
    #[error("lattice lives in dimension {found}, ambient dimension is {expected}")]
    LatticeDimension { expected: usize, found: usize },
    #[error("spherical root {0} has the wrong length")]
    SigmaDimension(String),
    #[error("spherical root {0} is not in Xi")]
    SigmaNotInLattice(String),
    #[error("spherical root {0} is not primitive in Xi")]
    SigmaNotPrimitive(String),
    #[error("spherical root {0} is listed twice")]
    DuplicateSigma(String),
    #[error("element {0:?} of A is listed twice")]
    DuplicateName(String),
    #[error("rho({name}) has {found} values, Xi has rank {expected}")]
    RhoLength { name: String, expected: usize, found: usize },
    #[error("rho({0}) is not integral on the basis of Xi")]
    RhoNotIntegral(String),
}

/// A named element of the abstract set `A` with its functional on `Xi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AElement {
    pub name: String,
    pub rho: Functional,
}

impl AElement {
    pub fn new(name: impl Into<String>, rho: Functional) -> Self {
        Self { name: name.into(), rho }
    }
}

/// The quintuple `(S^p, Sigma, A, Xi, rho)` over an ambient space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousSphericalDatum {
    space: AmbientSpace,
    sp: SimpleRootSubset,
    sigma: Vec<Character>,
    sigma_coords: Vec<Vec<Rational>>,
    xi: IntegerLattice,
    a: Vec<AElement>,
}

impl HomogeneousSphericalDatum {
    pub fn new(
        space: AmbientSpace,
        sp: SimpleRootSubset,
        sigma: Vec<Character>,
        xi: IntegerLattice,
        a: Vec<AElement>,
    ) -> Result<Self, DatumError> {
        if let Some(i) = sp.iter().find(|&i| i >= space.rank()) {
            return Err(DatumError::SpOutOfRange(i));
        }
        if xi.dim() != space.dim() {
            return Err(DatumError::LatticeDimension { expected: space.dim(), found: xi.dim() });
        }
        let mut sigma_coords = Vec::with_capacity(sigma.len());
        for (i, s) in sigma.iter().enumerate() {
            if s.dim() != space.dim() {
                return Err(DatumError::SigmaDimension(s.to_string()));
            }
            if sigma[..i].contains(s) {
                return Err(DatumError::DuplicateSigma(space.describe(s)));
            }
            let coords = xi
                .membership(s)
                .ok_or_else(|| DatumError::SigmaNotInLattice(space.describe(s)))?;
            if !xi.is_primitive(s).unwrap_or(false) {
                return Err(DatumError::SigmaNotPrimitive(space.describe(s)));
            }
            sigma_coords.push(from_integers(&coords));
        }
        let mut names = BTreeSet::new();
        for d in &a {
            if !names.insert(d.name.as_str()) {
                return Err(DatumError::DuplicateName(d.name.clone()));
            }
            if d.rho.values().len() != xi.rank() {
                return Err(DatumError::RhoLength {
                    name: d.name.clone(),
                    expected: xi.rank(),
                    found: d.rho.values().len(),
                });
            }
            if !d.rho.is_integral() {
                return Err(DatumError::RhoNotIntegral(d.name.clone()));
            }
        }
        Ok(Self { space, sp, sigma, sigma_coords, xi, a })
    }

    /// A spherical system: the lattice is the span of `sigma`.
    pub fn spherical_system(
        space: AmbientSpace,
        sp: SimpleRootSubset,
        sigma: Vec<Character>,
        a: Vec<AElement>,
    ) -> Result<Self, DatumError> {
        let xi = IntegerLattice::spanned_by(space.dim(), &sigma);
        Self::new(space, sp, sigma, xi, a)
    }

    pub fn space(&self) -> &AmbientSpace {
        &self.space
    }

    pub fn sp(&self) -> &SimpleRootSubset {
        &self.sp
    }

    pub fn sigma(&self) -> &[Character] {
        &self.sigma
    }

    /// Coordinates of each spherical root in the basis of `Xi`.
    pub fn sigma_coords(&self) -> &[Vec<Rational>] {
        &self.sigma_coords
    }

    pub fn xi(&self) -> &IntegerLattice {
        &self.xi
    }

    pub fn a(&self) -> &[AElement] {
        &self.a
    }

    pub fn rank(&self) -> usize {
        self.xi.rank()
    }

    pub fn simple_count(&self) -> usize {
        self.space.rank()
    }

    pub fn label(&self, i: usize) -> &str {
        self.space.gcm().label(i)
    }

    pub fn describe_sigma(&self, k: usize) -> String {
        self.space.describe(&self.sigma[k])
    }

    /// `<rho(delta), sigma_k>`.
    pub fn value(&self, delta: &AElement, k: usize) -> Rational {
        delta.rho.eval(&self.sigma_coords[k])
    }

    /// `alpha_i^vee` restricted to `Xi`, as values on the basis.
    pub fn coroot_restriction(&self, i: usize) -> Functional {
        Functional::new(
            (0..self.xi.rank())
                .map(|k| {
                    self.space
                        .pair(i, &self.xi.basis_vector(k))
                        .expect("lattice vectors live in the ambient space")
                })
                .collect(),
        )
    }

    /// Indices `k` of spherical roots that are simple roots, with the root.
    pub fn simple_spherical_roots(&self) -> Vec<(usize, usize)> {
        self.sigma
            .iter()
            .enumerate()
            .filter_map(|(k, s)| self.space.as_simple_root(s).map(|i| (k, i)))
            .collect()
    }

    /// The spherical root equal to `alpha_i`, if any.
    pub fn sigma_index_of_simple(&self, i: usize) -> Option<usize> {
        let alpha = self.space.simple_root(i);
        self.sigma.iter().position(|s| *s == alpha)
    }

    /// The spherical root equal to `2 alpha_i`, if any.
    pub fn sigma_index_of_doubled(&self, i: usize) -> Option<usize> {
        let two = Rational::from_integer(2.into());
        let alpha = self.space.simple_root(i).scaled(&two);
        self.sigma.iter().position(|s| *s == alpha)
    }

    /// `A(alpha)`: indices of elements with value 1 on the spherical root `alpha_i`.
    pub fn a_of(&self, i: usize) -> Vec<usize> {
        match self.sigma_index_of_simple(i) {
            Some(k) => (0..self.a.len())
                .filter(|&d| self.value(&self.a[d], k) == Rational::one())
                .collect(),
            None => Vec::new(),
        }
    }

    /// Simple-root coefficients of `sigma_k`, when defined.
    pub fn sigma_root_coordinates(&self, k: usize) -> Option<Vec<Rational>> {
        self.space.root_coordinates(&self.sigma[k]).ok()
    }

    /// Pairs `(i, j)` with `i < j`, `a[i][j] = 0` and `sigma_k` equal to
    /// `alpha_i + alpha_j` or half of it.
    pub fn orthogonal_pair_shape(&self, k: usize) -> Option<(usize, usize)> {
        let c = self.sigma_root_coordinates(k)?;
        let nonzero: Vec<usize> = (0..c.len()).filter(|&i| !c[i].is_zero()).collect();
        let [i, j] = nonzero[..] else {
            return None;
        };
        let half = Rational::new(1.into(), 2.into());
        let shaped = c[i] == c[j] && (c[i].is_one() || c[i] == half);
        (shaped && self.space.gcm().entry(i, j) == 0).then_some((i, j))
    }

    pub fn sigma_is_independent(&self) -> bool {
        rank(&self.sigma_coords) == self.sigma.len()
    }

    pub fn find_a(&self, name: &str) -> Option<&AElement> {
        self.a.iter().find(|d| d.name == name)
    }

    /// Whether every simple-root coefficient of `sigma_k` is nonnegative.
    pub fn sigma_is_nonnegative(&self, k: usize) -> Option<bool> {
        self.sigma_root_coordinates(k)
            .map(|c| c.iter().all(|x| !x.is_negative()))
    }
}
