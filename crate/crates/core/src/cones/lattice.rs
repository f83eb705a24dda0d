use num::{One, Zero};

use crate::characters::Character;
use crate::linalg::{express_in_rows, hermite_basis, rank, smith_invariants, Combination};
use crate::rational::{dot, gcd_all, Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("basis vector {index} has length {found}, expected {expected}")]
    DimensionMismatch { index: usize, expected: usize, found: usize },
    #[error("lattice basis rows are linearly dependent")]
    DependentBasis,
    #[error("{0} is not in the lattice")]
    NotInLattice(String),
    #[error("generator {0} of the sublattice is not in the lattice")]
    NotASublattice(String),
}

/// A sublattice of the ambient space, given by linearly independent rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerLattice {
    dim: usize,
    basis: Vec<Vec<Rational>>,
}

impl IntegerLattice {
    pub fn new(dim: usize, basis: Vec<Vec<Rational>>) -> Result<Self, LatticeError> {
        if let Some((index, row)) = basis.iter().enumerate().find(|(_, r)| r.len() != dim) {
            return Err(LatticeError::DimensionMismatch { index, expected: dim, found: row.len() });
        }
        if rank(&basis) != basis.len() {
            return Err(LatticeError::DependentBasis);
        }
        Ok(Self { dim, basis })
    }

    /// The lattice generated by arbitrary rational vectors, with a Hermite basis.
    pub fn span_of(dim: usize, generators: &[Character]) -> Self {
        use num::Integer as _;
        let denom = generators
            .iter()
            .flat_map(|g| g.coords())
            .fold(Integer::one(), |acc, x| acc.lcm(x.denom()));
        let scale = Rational::from_integer(denom.clone());
        let scaled: Vec<Vec<Integer>> = generators
            .iter()
            .map(|g| g.coords().iter().map(|x| (x * &scale).to_integer()).collect())
            .collect();
        let basis = hermite_basis(&scaled, dim)
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| Rational::new(x, denom.clone()))
                    .collect()
            })
            .collect();
        Self { dim, basis }
    }

    /// Uses the generators as the basis when they are independent, otherwise
    /// falls back to a Hermite basis of their span.
    pub fn spanned_by(dim: usize, generators: &[Character]) -> Self {
        let rows: Vec<Vec<Rational>> = generators.iter().map(|g| g.coords().to_vec()).collect();
        match Self::new(dim, rows) {
            Ok(l) => l,
            Err(_) => Self::span_of(dim, generators),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn basis_vector(&self, k: usize) -> Character {
        Character::new(self.basis[k].clone())
    }

    /// Rational coordinates in the basis, when `x` lies in the rational span.
    pub fn rational_coordinates(&self, x: &Character) -> Option<Vec<Rational>> {
        if x.dim() != self.dim {
            return None;
        }
        if self.basis.is_empty() {
            return x.coords().iter().all(Zero::is_zero).then(Vec::new);
        }
        match express_in_rows(&self.basis, x.coords()) {
            Combination::Unique(c) => Some(c),
            _ => None,
        }
    }

    /// Integer coordinates of `x`, or `None` when `x` is not in the lattice.
    pub fn membership(&self, x: &Character) -> Option<Vec<Integer>> {
        let c = self.rational_coordinates(x)?;
        c.iter()
            .map(|v| v.is_integer().then(|| v.to_integer()))
            .collect()
    }

    pub fn contains(&self, x: &Character) -> bool {
        self.membership(x).is_some()
    }

    pub fn is_primitive(&self, x: &Character) -> Result<bool, LatticeError> {
        let c = self
            .membership(x)
            .ok_or_else(|| LatticeError::NotInLattice(x.to_string()))?;
        Ok(gcd_all(&c) == Integer::one())
    }

    pub fn vector(&self, coords: &[Integer]) -> Character {
        let mut out = Character::zero(self.dim);
        for (c, row) in coords.iter().zip(&self.basis) {
            let c = Rational::from_integer(c.clone());
            for (o, r) in out.0.iter_mut().zip(row) {
                *o += &c * r;
            }
        }
        out
    }

    /// Index of the lattice generated by `generators` inside its saturation
    /// in `self`. A value of 1 means the generators span a saturated sublattice.
    pub fn saturation_index(&self, generators: &[Character]) -> Result<Integer, LatticeError> {
        let coords: Vec<Vec<Integer>> = generators
            .iter()
            .map(|g| {
                self.membership(g)
                    .ok_or_else(|| LatticeError::NotASublattice(g.to_string()))
            })
            .collect::<Result<_, _>>()?;
        Ok(smith_invariants(&coords, self.rank())
            .into_iter()
            .fold(Integer::one(), |acc, d| acc * d))
    }
}

/// A linear functional on a lattice, stored as its values on the basis rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Functional(pub Vec<Rational>);

impl Functional {
    pub fn new(values: Vec<Rational>) -> Self {
        Self(values)
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    /// Value on a vector given by its lattice coordinates.
    pub fn eval(&self, coords: &[Rational]) -> Rational {
        dot(&self.0, coords)
    }

    pub fn eval_int(&self, coords: &[Integer]) -> Rational {
        self.0
            .iter()
            .zip(coords)
            .fold(Rational::zero(), |acc, (v, c)| acc + v * Rational::from_integer(c.clone()))
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    pub fn add(&self, other: &Functional) -> Functional {
        Functional(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scaled(&self, k: &Rational) -> Functional {
        Functional(self.0.iter().map(|x| x * k).collect())
    }
}

impl std::fmt::Display for Functional {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::rational::format_vec(&self.0))
    }
}
