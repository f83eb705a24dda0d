//! Lattices, functionals, cones and the linear programs built on them.
//!
//! Vectors of the dual space `N = Hom(Xi, Q)` are written in the dual basis of
//! the lattice basis, so `<v, x>` is the plain dot product of `v` with the
//! lattice coordinates of `x`.

mod cone;
mod lattice;
pub mod lp;

pub use cone::{ConeConstraint, Generators, PolyhedralCone, Sense};
pub use lattice::{Functional, IntegerLattice, LatticeError};

use num::One;

use crate::linalg::RatMatrix;
use crate::rational::Rational;
use lp::{LinearProgram, LpOutcome, Relation};

/// Finds `c >= 0` with `sum_i c_i rows[i][j] >= 1` for every column `j`,
/// minimizing `sum c`. `cols` is the number of columns.
pub fn strict_feasibility(rows: &[Vec<Rational>], cols: usize) -> Option<Vec<Rational>> {
    let k = rows.len();
    let mut lp = LinearProgram::new(k);
    lp.minimize(vec![Rational::one(); k]);
    for j in 0..cols {
        let coeffs = rows.iter().map(|r| r[j].clone()).collect();
        lp.constrain(coeffs, Relation::Ge, Rational::one());
    }
    match lp.solve() {
        LpOutcome::Optimal { point, .. } => Some(point),
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("objective is bounded below by zero"),
    }
}

/// Whether some `v` vanishes exactly on the chosen elements and is strictly
/// negative on the others. `sigma` holds lattice coordinates of each element.
pub fn neighbor_set(sigma: &[Vec<Rational>], chosen: &[usize], rank: usize) -> bool {
    let mut lp = LinearProgram::new(rank).all_free();
    for (i, s) in sigma.iter().enumerate() {
        if chosen.contains(&i) {
            lp.constrain(s.clone(), Relation::Eq, Rational::from_integer(0.into()));
        } else {
            lp.constrain(s.clone(), Relation::Le, -Rational::one());
        }
    }
    lp.solve().is_feasible()
}

/// The valuation cone `{v : <v, s> <= 0 for every s}` cut by `<v, s> = 0` on
/// the chosen elements.
pub fn face_cone(sigma: &[Vec<Rational>], chosen: &[usize], rank: usize) -> PolyhedralCone {
    let constraints = sigma
        .iter()
        .enumerate()
        .map(|(i, s)| {
            if chosen.contains(&i) {
                ConeConstraint::zero(s.clone())
            } else {
                ConeConstraint::non_positive(s.clone())
            }
        })
        .collect();
    PolyhedralCone::new(rank, constraints)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("the chosen spherical roots {0:?} are not a set of neighbors")]
pub struct NotANeighborSet(pub Vec<usize>);

/// Basis of the linear span of the face cut out by the chosen elements.
pub fn face_span(sigma: &[Vec<Rational>], chosen: &[usize], rank: usize) -> Result<RatMatrix, NotANeighborSet> {
    if !neighbor_set(sigma, chosen, rank) {
        return Err(NotANeighborSet(chosen.to_vec()));
    }
    Ok(face_cone(sigma, chosen, rank).span_basis())
}
