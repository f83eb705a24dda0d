//! Localization at a subset of simple roots and at a set of neighboring
//! spherical roots.

use std::collections::BTreeMap;

use crate::cartan::{SimpleRootSubset, SubsetOutOfRange};
use crate::characters::{CharacterError, Character};
use crate::cones::{face_span, Functional, IntegerLattice, NotANeighborSet};
use crate::datum::{AElement, ColorError, ColorKind, DatumError, HomogeneousSphericalDatum};
use crate::linalg::integer_kernel;
use crate::rational::primitive_integer_direction;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizationResult {
    pub datum: HomogeneousSphericalDatum,
    /// New color or element name to the original one.
    pub color_map: BTreeMap<String, String>,
    pub rank_drop: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LocalizeError {
    #[error(transparent)]
    Subset(#[from] SubsetOutOfRange),
    #[error("spherical root index {0} out of range")]
    SigmaOutOfRange(usize),
    #[error(transparent)]
    NotANeighborSet(#[from] NotANeighborSet),
    #[error(transparent)]
    Datum(#[from] DatumError),
    #[error(transparent)]
    Colors(#[from] ColorError),
}

/// Restricts `Xi`-functionals to the lattice spanned by `basis`, a list of
/// vectors of `Xi`.
fn restrict(d: &HomogeneousSphericalDatum, f: &Functional, basis: &[Character]) -> Functional {
    Functional::new(
        basis
            .iter()
            .map(|b| {
                let c = d.xi().membership(b).expect("sublattice of Xi");
                f.eval_int(&c)
            })
            .collect(),
    )
}

/// Keeps the spherical roots in the span of `subset` and the elements they
/// move. The result is a spherical system over the sub-diagram on `subset`.
pub fn localize_at_simple_roots(
    d: &HomogeneousSphericalDatum,
    subset: &SimpleRootSubset,
) -> Result<LocalizationResult, LocalizeError> {
    d.space().gcm().check_subset(subset)?;
    let old: Vec<usize> = subset.iter().collect();
    let space = d.space().restrict(subset);
    let sp: SimpleRootSubset = old
        .iter()
        .enumerate()
        .filter(|(_, &i)| d.sp().contains(i))
        .map(|(n, _)| n)
        .collect();

    let sigma: Vec<Character> = d
        .sigma()
        .iter()
        .filter(|s| !matches!(space.root_coordinates(s), Err(CharacterError::NotInRootSpan(_))))
        .cloned()
        .collect();
    let xi = IntegerLattice::spanned_by(space.dim(), &sigma);
    let basis: Vec<Character> = (0..xi.rank()).map(|k| xi.basis_vector(k)).collect();

    let mut kept = Vec::new();
    for i in subset.iter() {
        if let Some(k) = d.sigma_index_of_simple(i) {
            if sigma.contains(&d.sigma()[k]) {
                kept.extend(d.a_of(i));
            }
        }
    }
    kept.sort_unstable();
    kept.dedup();
    let a: Vec<AElement> = kept
        .iter()
        .map(|&k| {
            let delta = &d.a()[k];
            AElement::new(delta.name.clone(), restrict(d, &delta.rho, &basis))
        })
        .collect();

    let datum = HomogeneousSphericalDatum::new(space, sp, sigma, xi, a)?;

    let original = d.derive_colors()?;
    let mut color_map = BTreeMap::new();
    for c in datum.derive_colors()? {
        let target = if c.kind == ColorKind::AElement {
            Some(c.id.clone())
        } else {
            let first = old[c.movers.iter().next().expect("derived colors have movers")];
            original
                .iter()
                .find(|o| o.kind == c.kind && o.moved_by(first))
                .map(|o| o.id.clone())
        };
        if let Some(t) = target {
            color_map.insert(c.id, t);
        }
    }
    let rank_drop = d.rank() - datum.rank();
    Ok(LocalizationResult { datum, color_map, rank_drop })
}

/// Localization at the face of the valuation cone where exactly the chosen
/// spherical roots vanish.
pub fn localize_at_spherical_roots(
    d: &HomogeneousSphericalDatum,
    chosen: &[usize],
) -> Result<LocalizationResult, LocalizeError> {
    if let Some(&k) = chosen.iter().find(|&&k| k >= d.sigma().len()) {
        return Err(LocalizeError::SigmaOutOfRange(k));
    }
    let mut chosen = chosen.to_vec();
    chosen.sort_unstable();
    chosen.dedup();

    let r = d.rank();
    let span = face_span(d.sigma_coords(), &chosen, r)?;
    let rows: Vec<Vec<_>> = span.iter().map(|w| primitive_integer_direction(w)).collect();
    let kernel = integer_kernel(&rows, r);
    let basis: Vec<Character> = kernel.iter().map(|c| d.xi().vector(c)).collect();
    let xi = IntegerLattice::new(d.space().dim(), basis.iter().map(|b| b.coords().to_vec()).collect())
        .expect("kernel basis is independent");

    let sigma: Vec<Character> = chosen.iter().map(|&k| d.sigma()[k].clone()).collect();
    let mut kept = Vec::new();
    for &k in &chosen {
        if let Some(i) = d.space().as_simple_root(&d.sigma()[k]) {
            kept.extend(d.a_of(i));
        }
    }
    kept.sort_unstable();
    kept.dedup();
    let a: Vec<AElement> = kept
        .iter()
        .map(|&k| {
            let delta = &d.a()[k];
            AElement::new(delta.name.clone(), restrict(d, &delta.rho, &basis))
        })
        .collect();
    let color_map = a.iter().map(|e| (e.name.clone(), e.name.clone())).collect();
    let datum = HomogeneousSphericalDatum::new(d.space().clone(), d.sp().clone(), sigma, xi, a)?;
    Ok(LocalizationResult { datum, color_map, rank_drop: span.len() })
}
