//! Polyhedral cones `{v : <a, v> <= 0 or = 0}` and the double description
//! method for their generators.

use num::{Signed, Zero};

use super::lp::{LinearProgram, Relation};
use crate::linalg::{rank, row_space_basis, RatMatrix};
use crate::rational::{dot, from_integers, primitive_integer_direction, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    NonPositive,
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeConstraint {
    pub normal: Vec<Rational>,
    pub sense: Sense,
}

impl ConeConstraint {
    pub fn non_positive(normal: Vec<Rational>) -> Self {
        Self { normal, sense: Sense::NonPositive }
    }

    pub fn zero(normal: Vec<Rational>) -> Self {
        Self { normal, sense: Sense::Zero }
    }

    pub fn holds(&self, v: &[Rational]) -> bool {
        let x = dot(&self.normal, v);
        match self.sense {
            Sense::NonPositive => !x.is_positive(),
            Sense::Zero => x.is_zero(),
        }
    }
}

/// `cone = span(lineality) + cone(rays)`. Rays are primitive integer vectors.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Generators {
    pub lineality: RatMatrix,
    pub rays: RatMatrix,
}

impl Generators {
    /// Exact LP test for `v` in the generated cone.
    pub fn contains(&self, v: &[Rational]) -> bool {
        let l = self.lineality.len();
        let k = self.rays.len();
        let mut lp = LinearProgram::new(l + k);
        for i in 0..l {
            lp.set_free(i);
        }
        for (j, target) in v.iter().enumerate() {
            let coeffs = self
                .lineality
                .iter()
                .chain(&self.rays)
                .map(|g| g[j].clone())
                .collect();
            lp.constrain(coeffs, Relation::Eq, target.clone());
        }
        lp.solve().is_feasible()
    }

    pub fn span_basis(&self) -> RatMatrix {
        let all: RatMatrix = self.lineality.iter().chain(&self.rays).cloned().collect();
        row_space_basis(&all)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyhedralCone {
    dim: usize,
    constraints: Vec<ConeConstraint>,
    declared: Option<Generators>,
}

impl PolyhedralCone {
    pub fn new(dim: usize, constraints: Vec<ConeConstraint>) -> Self {
        debug_assert!(constraints.iter().all(|c| c.normal.len() == dim));
        Self { dim, constraints, declared: None }
    }

    /// Attaches a user-declared V-representation, checked by
    /// [`PolyhedralCone::verify_representations`].
    pub fn with_generators(mut self, generators: Generators) -> Self {
        self.declared = Some(generators);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[ConeConstraint] {
        &self.constraints
    }

    pub fn declared_generators(&self) -> Option<&Generators> {
        self.declared.as_ref()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.constraints.iter().all(|c| c.holds(v))
    }

    /// Generators of the cone. Every equality is processed as a pair of
    /// opposite inequalities.
    pub fn double_description(&self) -> Generators {
        let mut lineality: RatMatrix = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| rat((i == j) as i64)).collect())
            .collect();
        let mut rays: RatMatrix = Vec::new();
        let mut processed: RatMatrix = Vec::new();

        let halfspaces = self.constraints.iter().flat_map(|c| {
            let neg: Vec<Rational> = c.normal.iter().map(|x| -x.clone()).collect();
            match c.sense {
                Sense::NonPositive => vec![c.normal.clone()],
                Sense::Zero => vec![c.normal.clone(), neg],
            }
        });

        for a in halfspaces {
            if a.iter().all(Zero::is_zero) {
                continue;
            }
            if let Some(p) = lineality.iter().position(|l| !dot(&a, l).is_zero()) {
                let mut l0 = lineality.remove(p);
                let mut val = dot(&a, &l0);
                if val.is_positive() {
                    l0 = l0.into_iter().map(|x| -x).collect();
                    val = -val;
                }
                for v in lineality.iter_mut().chain(rays.iter_mut()) {
                    let f = dot(&a, v) / &val;
                    if !f.is_zero() {
                        for (x, y) in v.iter_mut().zip(&l0) {
                            *x -= &f * y;
                        }
                    }
                }
                for r in rays.iter_mut() {
                    *r = normalize(r);
                }
                rays.push(normalize(&l0));
                processed.push(a);
                continue;
            }

            processed.push(a.clone());
            let values: Vec<Rational> = rays.iter().map(|r| dot(&a, r)).collect();
            let pointed_dim = self.dim - lineality.len();
            let mut next: RatMatrix = rays
                .iter()
                .zip(&values)
                .filter(|(_, v)| !v.is_positive())
                .map(|(r, _)| r.clone())
                .collect();
            for (i, p) in rays.iter().enumerate() {
                if !values[i].is_positive() {
                    continue;
                }
                for (j, n) in rays.iter().enumerate() {
                    if !values[j].is_negative() {
                        continue;
                    }
                    if !adjacent(&processed[..processed.len() - 1], p, n, pointed_dim) {
                        continue;
                    }
                    let combo: Vec<Rational> = p
                        .iter()
                        .zip(n)
                        .map(|(x, y)| &values[i] * y - &values[j] * x)
                        .collect();
                    let combo = normalize(&combo);
                    if !next.contains(&combo) {
                        next.push(combo);
                    }
                }
            }
            rays = next;
        }

        rays.sort();
        Generators { lineality: row_space_basis(&lineality), rays }
    }

    pub fn span_basis(&self) -> RatMatrix {
        self.double_description().span_basis()
    }

    pub fn dimension(&self) -> usize {
        self.span_basis().len()
    }

    /// Mutual containment of the H-cone and the declared generators. Returns
    /// `true` when no generators are declared.
    pub fn verify_representations(&self) -> bool {
        let Some(declared) = &self.declared else {
            return true;
        };
        let inside = declared.rays.iter().all(|r| self.contains(r))
            && declared.lineality.iter().all(|l| {
                let neg: Vec<Rational> = l.iter().map(|x| -x.clone()).collect();
                self.contains(l) && self.contains(&neg)
            });
        if !inside {
            return false;
        }
        let computed = self.double_description();
        computed.rays.iter().all(|r| declared.contains(r))
            && computed.lineality.iter().all(|l| {
                let neg: Vec<Rational> = l.iter().map(|x| -x.clone()).collect();
                declared.contains(l) && declared.contains(&neg)
            })
    }
}

fn normalize(v: &[Rational]) -> Vec<Rational> {
    from_integers(&primitive_integer_direction(v))
}

/// Two extreme rays of a cone (modulo its lineality) are adjacent iff the
/// constraints tight on both have rank `pointed_dim - 2`.
fn adjacent(processed: &[Vec<Rational>], p: &[Rational], n: &[Rational], pointed_dim: usize) -> bool {
    if pointed_dim < 2 {
        return true;
    }
    let common: RatMatrix = processed
        .iter()
        .filter(|a| dot(a, p).is_zero() && dot(a, n).is_zero())
        .cloned()
        .collect();
    common.len() >= pointed_dim - 2 && rank(&common) == pointed_dim - 2
}
