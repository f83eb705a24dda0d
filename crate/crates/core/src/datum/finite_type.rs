use super::{HomogeneousSphericalDatum, TypePartitionError};
use crate::cartan::SimpleRootSubset;
use crate::cones::{strict_feasibility, Functional};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiniteTypeOptions {
    /// Allow roots `alpha` with `2 alpha` in `Sigma` as members of `S2`.
    pub include_doubled_in_s2: bool,
    /// Upper bound on the number of candidate subsets examined.
    pub max_subsets: u64,
}

impl Default for FiniteTypeOptions {
    fn default() -> Self {
        Self { include_doubled_in_s2: true, max_subsets: 1 << 20 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FiniteTypeError {
    #[error(transparent)]
    Partition(#[from] TypePartitionError),
    #[error("finite-type search needs 2^{exponent} subsets, above the limit of {limit}")]
    TooManySubsets { exponent: usize, limit: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum WitnessElement {
    /// Index into `A`.
    A(usize),
    /// Simple root whose coroot is used.
    Coroot(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub a1: Vec<usize>,
    pub s2: SimpleRootSubset,
    pub s1: SimpleRootSubset,
    /// One coefficient per element of `a1`, then per element of `s2`.
    pub coefficients: Vec<Rational>,
    pub eta: Functional,
    pub eta_on_sigma: Vec<Rational>,
}

impl HomogeneousSphericalDatum {
    /// Roots allowed in `S2`.
    pub fn s2_candidates(&self, options: &FiniteTypeOptions) -> Result<SimpleRootSubset, TypePartitionError> {
        let part = self.type_partition()?;
        let mut out = part.sb.clone();
        if options.include_doubled_in_s2 {
            out = out.union(&part.s2a);
        }
        Ok(out)
    }

    /// `S1` for a given `A1`: simple spherical roots whose `A(alpha)` lies in `A1`.
    pub fn s1_for(&self, a1: &[usize]) -> SimpleRootSubset {
        self.simple_spherical_roots()
            .into_iter()
            .map(|(_, i)| i)
            .filter(|&i| self.a_of(i).iter().all(|d| a1.contains(d)))
            .collect()
    }

    /// Searches subsets `A1`, `S2` by increasing size, lexicographically in
    /// the list of elements of `A` followed by the candidate roots. The first
    /// hit is returned; minimality makes all its coefficients positive.
    pub fn check_finite_type(&self, options: &FiniteTypeOptions) -> Result<Option<Witness>, FiniteTypeError> {
        let cands: Vec<usize> = self.s2_candidates(options)?.iter().collect();
        let pool: Vec<WitnessElement> = (0..self.a().len())
            .map(WitnessElement::A)
            .chain(cands.iter().map(|&i| WitnessElement::Coroot(i)))
            .collect();
        let exponent = pool.len();
        if exponent >= 64 || (1u64 << exponent) > options.max_subsets {
            return Err(FiniteTypeError::TooManySubsets { exponent, limit: options.max_subsets });
        }

        let rows: Vec<Functional> = pool
            .iter()
            .map(|e| match *e {
                WitnessElement::A(d) => self.a()[d].rho.clone(),
                WitnessElement::Coroot(i) => self.coroot_restriction(i),
            })
            .collect();
        let table: Vec<Vec<Rational>> = rows
            .iter()
            .map(|f| self.sigma_coords().iter().map(|s| f.eval(s)).collect())
            .collect();
        let gcm = self.space().gcm();

        for size in 0..=pool.len() {
            for chosen in Combinations::new(pool.len(), size) {
                let a1: Vec<usize> = chosen
                    .iter()
                    .filter_map(|&p| match pool[p] {
                        WitnessElement::A(d) => Some(d),
                        _ => None,
                    })
                    .collect();
                let s2: SimpleRootSubset = chosen
                    .iter()
                    .filter_map(|&p| match pool[p] {
                        WitnessElement::Coroot(i) => Some(i),
                        _ => None,
                    })
                    .collect();
                let s1 = self.s1_for(&a1);
                if !gcm.is_finite_type(&s1.union(&s2).union(self.sp())) {
                    continue;
                }
                let m: Vec<Vec<Rational>> = chosen.iter().map(|&p| table[p].clone()).collect();
                let Some(coefficients) = strict_feasibility(&m, self.sigma().len()) else {
                    continue;
                };
                let mut eta = Functional::new(vec![Rational::from_integer(0.into()); self.rank()]);
                for (c, &p) in coefficients.iter().zip(&chosen) {
                    eta = eta.add(&rows[p].scaled(c));
                }
                let eta_on_sigma = self.sigma_coords().iter().map(|s| eta.eval(s)).collect();
                return Ok(Some(Witness { a1, s2, s1, coefficients, eta, eta_on_sigma }));
            }
        }
        Ok(None)
    }
}

/// k-subsets of `0..n` in lexicographic order.
pub(crate) struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Self { n, current: (k <= n).then(|| (0..k).collect()) }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        let k = cur.len();
        let mut next = cur.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                return Some(cur);
            }
        }
        Some(cur)
    }
}
