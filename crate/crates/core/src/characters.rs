//! Ambient character spaces, coroot pairings and simple reflections.

use std::fmt;

use num::{Signed, Zero};

use crate::cartan::{GeneralizedCartanMatrix, SimpleRootSubset};
use crate::linalg::{express_in_rows, Combination};
use crate::rational::{dot, format_rational, rat, Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CharacterError {
    #[error("character has length {found}, ambient dimension is {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("coroot index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("character {0} is not in the span of the simple roots")]
    NotInRootSpan(String),
    #[error("character {0} has no unique expansion in simple roots")]
    AmbiguousRootExpansion(String),
    #[error("character {0} is not a nonnegative integer combination of simple roots")]
    NotAPositiveRoot(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AmbientError {
    #[error("simple_roots must be {rows}x{cols}")]
    SimpleRootsShape { rows: usize, cols: usize },
    #[error("coroot_pairing must be {rows}x{cols}")]
    CorootShape { rows: usize, cols: usize },
    #[error("<alpha_{i}^vee, alpha_{k}> is {found} in the ambient space but {expected} in the Cartan matrix")]
    PairingMismatch { i: usize, k: usize, found: String, expected: i64 },
}

/// An element of the ambient rational character space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character(pub Vec<Rational>);

impl Character {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self(coords)
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self(v.iter().map(|&x| rat(x)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![Rational::zero(); dim])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn scaled(&self, k: &Rational) -> Character {
        Character(self.0.iter().map(|x| x * k).collect())
    }

    pub fn add(&self, other: &Character) -> Character {
        Character(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Character) -> Character {
        Character(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::rational::format_vec(&self.0))
    }
}

/// The rational span of the torus characters, together with the coordinates
/// of the simple roots and the coroots acting on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbientSpace {
    gcm: GeneralizedCartanMatrix,
    dim: usize,
    simple_roots: Vec<Vec<Rational>>,
    coroot_pairing: Vec<Vec<Rational>>,
}

impl AmbientSpace {
    /// The root-lattice model: coordinates are simple-root coefficients.
    pub fn root_lattice(gcm: GeneralizedCartanMatrix) -> Self {
        let n = gcm.rank();
        let simple_roots = (0..n)
            .map(|i| (0..n).map(|j| rat((i == j) as i64)).collect())
            .collect();
        let coroot_pairing = gcm
            .entries()
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        Self { gcm, dim: n, simple_roots, coroot_pairing }
    }

    /// A user-declared ambient space, checked against the Cartan matrix.
    pub fn new(
        gcm: GeneralizedCartanMatrix,
        dim: usize,
        simple_roots: Vec<Vec<Rational>>,
        coroot_pairing: Vec<Vec<Rational>>,
    ) -> Result<Self, Vec<AmbientError>> {
        let n = gcm.rank();
        let mut bad = Vec::new();
        if simple_roots.len() != n || simple_roots.iter().any(|r| r.len() != dim) {
            bad.push(AmbientError::SimpleRootsShape { rows: n, cols: dim });
        }
        if coroot_pairing.len() != n || coroot_pairing.iter().any(|r| r.len() != dim) {
            bad.push(AmbientError::CorootShape { rows: n, cols: dim });
        }
        if !bad.is_empty() {
            return Err(bad);
        }
        for i in 0..n {
            for k in 0..n {
                let found = dot(&coroot_pairing[i], &simple_roots[k]);
                let expected = gcm.entry(i, k);
                if found != rat(expected) {
                    bad.push(AmbientError::PairingMismatch {
                        i,
                        k,
                        found: format_rational(&found),
                        expected,
                    });
                }
            }
        }
        if bad.is_empty() {
            Ok(Self { gcm, dim, simple_roots, coroot_pairing })
        } else {
            Err(bad)
        }
    }

    pub fn gcm(&self) -> &GeneralizedCartanMatrix {
        &self.gcm
    }

    pub fn rank(&self) -> usize {
        self.gcm.rank()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn simple_roots(&self) -> &[Vec<Rational>] {
        &self.simple_roots
    }

    pub fn coroot_pairing(&self) -> &[Vec<Rational>] {
        &self.coroot_pairing
    }

    /// Whether this is the default model (identity roots, pairing = GCM).
    pub fn is_root_lattice_model(&self) -> bool {
        *self == Self::root_lattice(self.gcm.clone())
    }

    pub fn simple_root(&self, i: usize) -> Character {
        Character(self.simple_roots[i].clone())
    }

    /// Restricts to the simple roots in `subset`, keeping the ambient space.
    pub fn restrict(&self, subset: &SimpleRootSubset) -> AmbientSpace {
        AmbientSpace {
            gcm: self.gcm.principal_submatrix(subset),
            dim: self.dim,
            simple_roots: subset.iter().map(|i| self.simple_roots[i].clone()).collect(),
            coroot_pairing: subset.iter().map(|i| self.coroot_pairing[i].clone()).collect(),
        }
    }

    /// Builds a character from simple-root coefficients.
    pub fn from_root_coordinates(&self, coeffs: &[Rational]) -> Character {
        let mut out = Character::zero(self.dim());
        for (c, row) in coeffs.iter().zip(&self.simple_roots) {
            for (o, r) in out.0.iter_mut().zip(row) {
                *o += c * r;
            }
        }
        out
    }

    fn check_dim(&self, x: &Character) -> Result<(), CharacterError> {
        if x.dim() == self.dim() {
            Ok(())
        } else {
            Err(CharacterError::DimensionMismatch { expected: self.dim(), found: x.dim() })
        }
    }

    fn check_index(&self, i: usize) -> Result<(), CharacterError> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(CharacterError::IndexOutOfRange { index: i, rank: self.rank() })
        }
    }

    /// `<alpha_i^vee, x>`.
    pub fn pair(&self, i: usize, x: &Character) -> Result<Rational, CharacterError> {
        self.check_index(i)?;
        self.check_dim(x)?;
        Ok(dot(&self.coroot_pairing[i], &x.0))
    }

    /// `s_i(x) = x - <alpha_i^vee, x> alpha_i`.
    pub fn simple_reflection(&self, i: usize, x: &Character) -> Result<Character, CharacterError> {
        let p = self.pair(i, x)?;
        Ok(x.sub(&self.simple_root(i).scaled(&p)))
    }

    /// Applies `s_{w[0]} s_{w[1]} ... s_{w[last]}` to `x`; the last letter acts first.
    pub fn apply_word(&self, word: &[usize], x: &Character) -> Result<Character, CharacterError> {
        word.iter()
            .rev()
            .try_fold(x.clone(), |acc, &i| self.simple_reflection(i, &acc))
    }

    /// Coefficients of `x` in the simple roots, when they are unique.
    pub fn root_coordinates(&self, x: &Character) -> Result<Vec<Rational>, CharacterError> {
        self.check_dim(x)?;
        match express_in_rows(&self.simple_roots, &x.0) {
            Combination::Unique(c) => Ok(c),
            Combination::NotUnique => {
                Err(CharacterError::AmbiguousRootExpansion(x.to_string()))
            }
            Combination::Inconsistent => Err(CharacterError::NotInRootSpan(x.to_string())),
        }
    }

    pub fn support(&self, x: &Character) -> Result<SimpleRootSubset, CharacterError> {
        let c = self.root_coordinates(x)?;
        Ok(c.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, _)| i).collect())
    }

    /// Height of `x` counting only simple roots outside `excluded`.
    pub fn s_prime_height(
        &self,
        x: &Character,
        excluded: &SimpleRootSubset,
    ) -> Result<Integer, CharacterError> {
        let coeffs = self.root_coordinates(x)?;
        if coeffs.iter().any(|c| !c.is_integer() || c.is_negative()) {
            return Err(CharacterError::NotAPositiveRoot(x.to_string()));
        }
        Ok(coeffs
            .iter()
            .enumerate()
            .filter(|(i, _)| !excluded.contains(*i))
            .map(|(_, c)| c.to_integer())
            .sum())
    }

    /// Which simple root `x` equals, if any.
    pub fn as_simple_root(&self, x: &Character) -> Option<usize> {
        (0..self.rank()).find(|&i| self.simple_roots[i] == x.0)
    }

    /// Writes `x` with simple-root labels, e.g. `a0+2a1` or `1/2a0+1/2a2`.
    pub fn describe(&self, x: &Character) -> String {
        match self.root_coordinates(x) {
            Ok(c) => describe_root_coordinates(self.gcm.labels(), &c),
            Err(_) => x.to_string(),
        }
    }
}

pub fn describe_root_coordinates(labels: &[String], coeffs: &[Rational]) -> String {
    let mut out = String::new();
    for (label, c) in labels.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let a = c.abs();
        if a != rat(1) {
            out.push_str(&format_rational(&a));
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
