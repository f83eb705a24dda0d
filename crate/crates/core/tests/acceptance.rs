//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use kmsph::cartan::{known, validate_gcm, SimpleRootSubset};
use kmsph::characters::{AmbientSpace, Character};
use kmsph::cones::{neighbor_set, strict_feasibility};
use kmsph::datum::{FiniteTypeOutcome, HomogeneousSphericalDatum, Registry, ValidationOptions};
use kmsph::localize::localize_at_simple_roots;
use kmsph::rational::{dot, rat, Rational};
use kmsph::shell::{corpus, Loaded};
use num::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

type Outcome = Result<String, String>;

fn loaded(name: &str) -> Loaded {
    corpus().into_iter().find(|e| e.name == name).expect("fixture exists").load().expect("fixture loads")
}

fn all_loaded() -> Vec<Loaded> {
    corpus().iter().map(|e| e.load().expect("fixture loads")).collect()
}

fn corpus_gate() -> Outcome {
    let mut slowest = Duration::ZERO;
    for name in ["ex_verysolv", "ex_second", "ex_second_K", "ex_conj", "ex_new"] {
        let l = loaded(name);
        let start = Instant::now();
        let report = l
            .datum
            .validate(&l.name, &l.registry, &ValidationOptions::default())
            .map_err(|e| format!("{name}: {e}"))?;
        let took = start.elapsed();
        slowest = slowest.max(took);
        if !report.pass() {
            return Err(format!("{name} does not pass:\n{}", report.to_text()));
        }
        if took >= Duration::from_secs(1) {
            return Err(format!("{name} took {took:?}"));
        }
    }
    Ok(format!("5 fixtures pass, slowest {slowest:?}"))
}

fn negative_gate() -> Outcome {
    let l = loaded("ex_veryred");
    let report = l.datum.validate(&l.name, &l.registry, &ValidationOptions::default()).map_err(|e| e.to_string())?;
    for a in &report.axioms[..5] {
        if !a.passed() {
            return Err(format!("{} does not pass: {:?}", a.axiom, a.reasons));
        }
    }
    if report.finite_type != FiniteTypeOutcome::Absent {
        return Err(format!("finite type is {}", report.finite_type_label()));
    }
    if common::brute_force_finite_type(&l.datum) {
        return Err("brute-force oracle finds a witness".into());
    }
    Ok("axioms A1-Sigma2 pass, witness absent, oracle agrees".into())
}

fn color_values(name: &str) -> Result<serde_json::Value, String> {
    let l = loaded(name);
    let report = l.datum.validate(&l.name, &l.registry, &ValidationOptions::default()).map_err(|e| e.to_string())?;
    let parsed: serde_json::Value = serde_json::from_str(&report.to_json_string()).map_err(|e| e.to_string())?;
    let rhos = parsed["colors"].as_array().ok_or("colors missing")?.iter().map(|c| c["rho"].clone()).collect();
    Ok(serde_json::Value::Array(rhos))
}

fn table_reproduction() -> Outcome {
    let k = color_values("ex_second_K")?;
    let want_k = json!([[2, -1], [0, 1], [-4, 1]]);
    if k != want_k {
        return Err(format!("ex_second_K colors {k}, expected {want_k}"));
    }
    let h = color_values("ex_second")?;
    let want_h = json!([[1, -1], [1, -1], [0, 1], [-2, 1]]);
    if h != want_h {
        return Err(format!("ex_second colors {h}, expected {want_h}"));
    }
    Ok(format!("ex_second_K {k}, ex_second {h}"))
}

fn weyl_computation() -> Outcome {
    let space = AmbientSpace::root_lattice(validate_gcm(known::g2_affine()).map_err(|e| e.to_string())?);
    let got = space.apply_word(&[0, 1, 0], &space.simple_root(2)).map_err(|e| e.to_string())?;
    let want = Character::from_ints(&[1, 1, 1]);
    if got != want {
        return Err(format!("got {got}"));
    }
    Ok(format!("s0 s1 s0 (a2) = {}", space.describe(&got)))
}

fn connected_subsets(g: &kmsph::cartan::GeneralizedCartanMatrix) -> Vec<SimpleRootSubset> {
    let n = g.rank();
    (1u64..(1 << n))
        .map(|m| SimpleRootSubset::from_mask(m, n))
        .filter(|s| g.connected_components(s).len() == 1)
        .collect()
}

fn classifier_oracle() -> Outcome {
    let mut checked = 0usize;
    let mut compare = |g: &kmsph::cartan::GeneralizedCartanMatrix, s: &SimpleRootSubset| -> Result<(), String> {
        checked += 1;
        let ours = g.is_finite_type(s);
        let oracle = common::dynkin_finite(g, &common::subset_vec(s));
        if ours != oracle {
            return Err(format!("{:?} on {s}: ours {ours}, oracle {oracle}", g.entries()));
        }
        Ok(())
    };
    for l in all_loaded() {
        for s in connected_subsets(l.gcm()) {
            compare(l.gcm(), &s)?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=5);
        let g = validate_gcm(common::random_gcm_entries(&mut rng, n)).map_err(|e| e.to_string())?;
        compare(&g, &g.full_set())?;
        for s in connected_subsets(&g) {
            compare(&g, &s)?;
        }
    }
    Ok(format!("{checked} subdiagrams, 0 disagreements"))
}

fn lp_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut feasible = 0;
    for case in 0..1000 {
        let k = rng.gen_range(1..=6);
        let s = rng.gen_range(1..=4);
        let rows: Vec<Vec<Rational>> =
            (0..k).map(|_| (0..s).map(|_| rat(rng.gen_range(-4..=4))).collect()).collect();
        let ours = strict_feasibility(&rows, s);
        let oracle = common::fm_strictly_feasible(&rows, s);
        if ours.is_some() != oracle {
            return Err(format!("case {case}: {rows:?}: ours {}, oracle {oracle}", ours.is_some()));
        }
        if let Some(c) = ours {
            feasible += 1;
            let nonneg = c.iter().all(|x| !x.is_negative());
            let strict = (0..s).all(|j| {
                let col: Vec<Rational> = rows.iter().map(|r| r[j].clone()).collect();
                dot(&c, &col) >= rat(1)
            });
            if !nonneg || !strict {
                return Err(format!("case {case}: certificate {c:?} is invalid"));
            }
        }
    }
    Ok(format!("1000 instances ({feasible} feasible), 0 disagreements"))
}

fn compose(outer: &BTreeMap<String, String>, inner: &BTreeMap<String, String>) -> BTreeMap<String, String> {
    outer.iter().filter_map(|(k, v)| inner.get(v).map(|w| (k.clone(), w.clone()))).collect()
}

fn localization_coherence() -> Outcome {
    let mut chains = 0;
    for l in all_loaded() {
        let d = &l.datum;
        let n = d.simple_count();
        for m1 in 0u64..(1 << n) {
            let s1 = SimpleRootSubset::from_mask(m1, n);
            let mid = localize_at_simple_roots(d, &s1).map_err(|e| format!("{}: {e}", l.name))?;
            let pos: Vec<usize> = s1.iter().collect();
            for m2 in 0u64..(1 << n) {
                let s2 = SimpleRootSubset::from_mask(m2, n);
                if !s2.is_subset(&s1) {
                    continue;
                }
                chains += 1;
                let rel: SimpleRootSubset =
                    s2.iter().map(|i| pos.iter().position(|&p| p == i).expect("nested")).collect();
                let two = localize_at_simple_roots(&mid.datum, &rel).map_err(|e| e.to_string())?;
                let one = localize_at_simple_roots(d, &s2).map_err(|e| e.to_string())?;
                if two.datum != one.datum {
                    return Err(format!("{}: S'={s1} S''={s2}: data differ", l.name));
                }
                let composed = compose(&two.color_map, &mid.color_map);
                if composed != one.color_map {
                    return Err(format!(
                        "{}: S'={s1} S''={s2}: color maps {composed:?} vs {:?}",
                        l.name, one.color_map
                    ));
                }
            }
        }
    }
    Ok(format!("{chains} chains, all coherent"))
}

fn value_at_simple(d: &HomogeneousSphericalDatum, f: &[Rational], i: usize) -> Option<Rational> {
    let alpha = d.space().simple_root(i);
    let c = d.xi().rational_coordinates(&alpha)?;
    Some(dot(f, &c))
}

fn at_most_one() -> Outcome {
    let mut checked = 0;
    for l in all_loaded() {
        let d = &l.datum;
        let report = d.validate(&l.name, &Registry::empty(), &ValidationOptions::default()).map_err(|e| e.to_string())?;
        if !report.pass() {
            continue;
        }
        let colors = d.derive_colors().map_err(|e| e.to_string())?;
        for i in 0..d.simple_count() {
            checked += 1;
            let movers: Vec<_> = colors.iter().filter(|c| c.moved_by(i)).collect();
            let in_sigma = d.sigma_index_of_simple(i).is_some();
            if movers.len() > 2 || (movers.len() == 2) != in_sigma {
                return Err(format!("{}: {} moves {} colors", l.name, d.label(i), movers.len()));
            }
            if !in_sigma {
                continue;
            }
            for c in &colors {
                let v = value_at_simple(d, c.functional.values(), i).ok_or("simple spherical root outside Xi")?;
                if c.moved_by(i) && v != rat(1) {
                    return Err(format!("{}: {} has value {v} at {}", l.name, c.id, d.label(i)));
                }
                if !c.moved_by(i) && v.is_positive() {
                    return Err(format!("{}: non-mover {} is positive at {}", l.name, c.id, d.label(i)));
                }
            }
        }
    }
    Ok(format!("{checked} simple roots, 0 violations"))
}

fn neighbor_property() -> Outcome {
    let mut pairs = 0;
    for l in all_loaded() {
        let d = &l.datum;
        let multiples: Vec<usize> = (0..d.sigma().len())
            .filter(|&k| {
                d.sigma_root_coordinates(k)
                    .is_some_and(|c| c.iter().filter(|x| !x.is_zero()).count() == 1 && c.iter().all(|x| !x.is_negative()))
            })
            .collect();
        for (x, &a) in multiples.iter().enumerate() {
            for &b in &multiples[x + 1..] {
                pairs += 1;
                if !neighbor_set(d.sigma_coords(), &[a, b], d.rank()) {
                    return Err(format!("{}: {{{}, {}}} is not a neighbor set", l.name, d.describe_sigma(a), d.describe_sigma(b)));
                }
            }
        }
    }
    Ok(format!("{pairs} pairs, all neighbors"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("corpus gate", corpus_gate),
        ("negative gate", negative_gate),
        ("table reproduction", table_reproduction),
        ("Weyl computation", weyl_computation),
        ("classifier oracle", classifier_oracle),
        ("LP oracle", lp_oracle),
        ("localization coherence", localization_coherence),
        ("colors per simple root", at_most_one),
        ("neighbor property", neighbor_property),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why})", n + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
