use std::fmt;

use super::{HomogeneousSphericalDatum, TypePartitionError};
use crate::cartan::SimpleRootSubset;
use crate::cones::Functional;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ColorKind {
    AElement,
    Doubled,
    Basic,
}

impl ColorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ColorKind::AElement => "A",
            ColorKind::Doubled => "2a",
            ColorKind::Basic => "b",
        }
    }
}

impl fmt::Display for ColorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Color {
    pub id: String,
    pub movers: SimpleRootSubset,
    pub kind: ColorKind,
    pub functional: Functional,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ColorError {
    #[error(transparent)]
    Partition(#[from] TypePartitionError),
    #[error("{0} and {1} share a color but their coroots differ on Xi")]
    InconsistentMerge(String, String),
}

impl HomogeneousSphericalDatum {
    /// All colors: one per element of `A`, one per root of type 2a, and one
    /// per root of type b, where orthogonal b roots whose sum or half-sum is
    /// a spherical root share their color.
    ///
    /// Ordered by smallest mover, then kind, then input order.
    pub fn derive_colors(&self) -> Result<Vec<Color>, ColorError> {
        let part = self.type_partition()?;
        let mut out: Vec<(usize, ColorKind, usize, Color)> = Vec::new();

        for (d, delta) in self.a().iter().enumerate() {
            let movers: SimpleRootSubset = self
                .simple_spherical_roots()
                .into_iter()
                .filter(|&(k, _)| self.value(delta, k) == Rational::from_integer(1.into()))
                .map(|(_, i)| i)
                .collect();
            let first = movers.iter().next().unwrap_or(usize::MAX);
            out.push((
                first,
                ColorKind::AElement,
                d,
                Color { id: delta.name.clone(), movers, kind: ColorKind::AElement, functional: delta.rho.clone() },
            ));
        }

        let half = Rational::new(1.into(), 2.into());
        for i in part.s2a.iter() {
            out.push((
                i,
                ColorKind::Doubled,
                i,
                Color {
                    id: format!("D_{}", self.label(i)),
                    movers: [i].into_iter().collect(),
                    kind: ColorKind::Doubled,
                    functional: self.coroot_restriction(i).scaled(&half),
                },
            ));
        }

        // Union-find over type b roots.
        let n = self.simple_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for k in 0..self.sigma().len() {
            if let Some((i, j)) = self.orthogonal_pair_shape(k) {
                if part.sb.contains(i) && part.sb.contains(j) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
        let roots: Vec<usize> = part.sb.iter().filter(|&i| find(&mut parent, i) == i).collect();
        for r in roots {
            let movers: SimpleRootSubset = part.sb.iter().filter(|&i| find(&mut parent, i) == r).collect();
            let functional = self.coroot_restriction(r);
            for m in movers.iter() {
                if self.coroot_restriction(m) != functional {
                    return Err(ColorError::InconsistentMerge(self.label(r).to_string(), self.label(m).to_string()));
                }
            }
            let id = std::iter::once("D".to_string())
                .chain(movers.iter().map(|i| self.label(i).to_string()))
                .collect::<Vec<_>>()
                .join("_");
            out.push((r, ColorKind::Basic, r, Color { id, movers, kind: ColorKind::Basic, functional }));
        }

        out.sort_by_key(|e| (e.0, e.1, e.2));
        Ok(out.into_iter().map(|(_, _, _, c)| c).collect())
    }
}

impl Color {
    pub fn moved_by(&self, i: usize) -> bool {
        self.movers.contains(i)
    }
}
