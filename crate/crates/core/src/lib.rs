//! Exact combinatorics of homogeneous spherical data over Kac-Moody root
//! systems: Cartan matrices, characters, lattices and cones, Luna's axioms,
//! the finite-type condition, colors and localization.

pub mod cartan;
pub mod characters;
pub mod cones;
pub mod datum;
pub mod linalg;
pub mod localize;
pub mod rational;
pub mod shell;
