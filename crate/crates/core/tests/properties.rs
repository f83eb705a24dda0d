mod common;

use kmsph::cartan::{validate_gcm, GeneralizedCartanMatrix, SimpleRootSubset};
use kmsph::characters::{AmbientSpace, Character};
use kmsph::cones::lp::{LinearProgram, LpOutcome, Relation};
use kmsph::cones::{neighbor_set, ConeConstraint, PolyhedralCone};
use kmsph::linalg::{determinant, hermite_normal_form, integer_kernel, rank, smith_invariants};
use kmsph::rational::{dot, int, rat, Integer, Rational};
use num::{Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn gcm_from_seed(n: usize, seed: u64) -> GeneralizedCartanMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    validate_gcm(common::random_gcm_entries(&mut rng, n)).unwrap()
}

fn rats(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

fn small_matrix(rows: std::ops::RangeInclusive<usize>, cols: usize, bound: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-bound..=bound, cols), rows)
}

proptest! {
    #[test]
    fn reflections_are_involutions(n in 1usize..=5, seed: u64, x in prop::collection::vec(-5i64..=5, 5), i in 0usize..5) {
        let space = AmbientSpace::root_lattice(gcm_from_seed(n, seed));
        let i = i % n;
        let x = Character::from_ints(&x[..n]);
        let y = space.simple_reflection(i, &x).unwrap();
        prop_assert_eq!(space.simple_reflection(i, &y).unwrap(), x.clone());
        prop_assert_eq!(space.pair(i, &y).unwrap(), -space.pair(i, &x).unwrap());
        prop_assert_eq!(space.pair(i, &space.simple_root(i)).unwrap(), rat(2));
    }

    #[test]
    fn word_then_reverse_is_identity(n in 1usize..=4, seed: u64, word in prop::collection::vec(0usize..4, 0..8)) {
        let space = AmbientSpace::root_lattice(gcm_from_seed(n, seed));
        let word: Vec<usize> = word.into_iter().map(|i| i % n).collect();
        let rev: Vec<usize> = word.iter().rev().copied().collect();
        let x = space.simple_root(n - 1);
        let y = space.apply_word(&rev, &space.apply_word(&word, &x).unwrap()).unwrap();
        prop_assert_eq!(y, x);
    }

    #[test]
    fn components_partition_the_subset(n in 1usize..=6, seed: u64, mask in 0u64..64) {
        let g = gcm_from_seed(n, seed);
        let s = SimpleRootSubset::from_mask(mask & ((1 << n) - 1), n);
        let comps = g.connected_components(&s);
        let mut union = SimpleRootSubset::empty();
        for (a, c) in comps.iter().enumerate() {
            prop_assert!(!c.is_empty());
            prop_assert!(union.intersection(c).is_empty());
            union = union.union(c);
            for d in &comps[a + 1..] {
                for i in c.iter() {
                    for j in d.iter() {
                        prop_assert!(!g.adjacent(i, j));
                    }
                }
            }
        }
        prop_assert_eq!(union, s);
    }

    #[test]
    fn finite_type_is_hereditary_and_matches_oracle(n in 1usize..=5, seed: u64, mask in 0u64..32, sub in 0u64..32) {
        let g = gcm_from_seed(n, seed);
        let s = SimpleRootSubset::from_mask(mask & ((1 << n) - 1), n);
        let t = s.intersection(&SimpleRootSubset::from_mask(sub & ((1 << n) - 1), n));
        prop_assert_eq!(g.is_finite_type(&s), common::dynkin_finite(&g, &common::subset_vec(&s)));
        if g.is_finite_type(&s) {
            prop_assert!(g.is_finite_type(&t));
        }
    }

    #[test]
    fn double_description_is_exact(dim in 1usize..=4, rows in small_matrix(0..=5, 4, 3), eq in 0usize..3) {
        let constraints: Vec<ConeConstraint> = rows
            .iter()
            .enumerate()
            .map(|(k, r)| {
                let v = rats(&r[..dim]);
                if k < eq { ConeConstraint::zero(v) } else { ConeConstraint::non_positive(v) }
            })
            .collect();
        let cone = PolyhedralCone::new(dim, constraints);
        let g = cone.double_description();
        for r in &g.rays {
            prop_assert!(cone.contains(r));
            prop_assert!(r.iter().all(|x| x.is_integer()));
        }
        for l in &g.lineality {
            let neg: Vec<Rational> = l.iter().map(|x| -x.clone()).collect();
            prop_assert!(cone.contains(l) && cone.contains(&neg));
        }
        let with = PolyhedralCone::new(dim, cone.constraints().to_vec()).with_generators(g);
        prop_assert!(with.verify_representations());
    }

    #[test]
    fn lp_optimum_beats_every_grid_point(n in 1usize..=3, a in small_matrix(1..=3, 3, 3), b in prop::collection::vec(0i64..=6, 3), c in prop::collection::vec(-3i64..=3, 3)) {
        let mut lp = LinearProgram::new(n);
        lp.minimize(rats(&c[..n]));
        for (k, row) in a.iter().enumerate() {
            lp.constrain(rats(&row[..n]), Relation::Le, rat(b[k]));
        }
        let outcome = lp.solve();
        let feasible = |p: &[Rational]| {
            p.iter().all(|x| !x.is_negative())
                && a.iter().enumerate().all(|(k, row)| dot(&rats(&row[..n]), p) <= rat(b[k]))
        };
        match outcome {
            LpOutcome::Optimal { point, value } => {
                prop_assert!(feasible(&point));
                prop_assert_eq!(dot(&rats(&c[..n]), &point), value.clone());
                for m in 0..4usize.pow(n as u32) {
                    let p: Vec<Rational> = (0..n).map(|j| rat(((m / 4usize.pow(j as u32)) % 4) as i64)).collect();
                    if feasible(&p) {
                        prop_assert!(value <= dot(&rats(&c[..n]), &p));
                    }
                }
            }
            LpOutcome::Unbounded => {}
            LpOutcome::Infeasible => prop_assert!(false, "origin is feasible"),
        }
    }

    #[test]
    fn hermite_and_kernel(m in small_matrix(1..=3, 4, 5), cols in 1usize..=4) {
        let mi: Vec<Vec<Integer>> = m.iter().map(|r| r[..cols].iter().map(|&x| int(x)).collect()).collect();
        let (h, u) = hermite_normal_form(&mi, cols);
        for (urow, hrow) in u.iter().zip(&h) {
            for j in 0..cols {
                let s: Integer = urow.iter().zip(&mi).map(|(x, r)| x * &r[j]).sum();
                prop_assert_eq!(&s, &hrow[j]);
            }
        }
        let mr: Vec<Vec<Rational>> = m.iter().map(|r| rats(&r[..cols])).collect();
        let ker = integer_kernel(&mi, cols);
        prop_assert_eq!(ker.len(), cols - rank(&mr));
        for k in &ker {
            for r in &mi {
                let s: Integer = r.iter().zip(k).map(|(x, y)| x * y).sum();
                prop_assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn smith_product_is_determinant(m in small_matrix(3..=3, 3, 4)) {
        let mi: Vec<Vec<Integer>> = m.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let det = determinant(&m.iter().map(|r| rats(r)).collect::<Vec<_>>());
        let inv = smith_invariants(&mi, 3);
        if det.is_zero() {
            prop_assert!(inv.len() < 3);
        } else {
            let prod: Integer = inv.iter().product();
            prop_assert_eq!(Rational::from(prod), det.abs());
            for w in inv.windows(2) {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn independent_sigma_faces_are_all_neighbors(rows in small_matrix(1..=3, 3, 3), mask in 0u64..8) {
        let r = 3;
        let sigma: Vec<Vec<Rational>> = rows.iter().map(|v| rats(v)).collect();
        let all: Vec<usize> = (0..sigma.len()).collect();
        prop_assert!(neighbor_set(&sigma, &all, r));
        if rank(&sigma) == sigma.len() {
            let chosen: Vec<usize> = all.iter().copied().filter(|&k| mask >> k & 1 == 1).collect();
            prop_assert!(neighbor_set(&sigma, &chosen, r));
        }
    }
}
