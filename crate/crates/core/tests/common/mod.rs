//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use kmsph::cartan::{GeneralizedCartanMatrix, SimpleRootSubset};
use kmsph::datum::HomogeneousSphericalDatum;
use kmsph::rational::{rat, Rational};
use num::{Signed, Zero};
use rand::Rng;

/// Finite type by matching each connected component against the finite
/// Dynkin diagrams A, B, C, D, E6-E8, F4, G2. Uses only graph shape and the
/// edge labels, no determinants.
pub fn dynkin_finite(g: &GeneralizedCartanMatrix, subset: &[usize]) -> bool {
    components(g, subset).iter().all(|c| component_finite(g, c))
}

fn components(g: &GeneralizedCartanMatrix, subset: &[usize]) -> Vec<Vec<usize>> {
    let mut left: BTreeSet<usize> = subset.iter().copied().collect();
    let mut out = Vec::new();
    while let Some(&start) = left.iter().next() {
        left.remove(&start);
        let mut comp = vec![start];
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            let next: Vec<usize> = left.iter().copied().filter(|&j| g.entry(i, j) != 0).collect();
            for j in next {
                left.remove(&j);
                comp.push(j);
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn component_finite(g: &GeneralizedCartanMatrix, c: &[usize]) -> bool {
    let n = c.len();
    let mut edges = Vec::new();
    for (x, &i) in c.iter().enumerate() {
        for (y, &j) in c.iter().enumerate().skip(x + 1) {
            if g.entry(i, j) != 0 {
                edges.push((x, y, g.entry(i, j) * g.entry(j, i)));
            }
        }
    }
    if n == 1 {
        return true;
    }
    // Finite diagrams are trees with edge products 1, 2 or 3.
    if edges.len() != n - 1 || edges.iter().any(|e| e.2 > 3) {
        return false;
    }
    let mut deg = vec![0usize; n];
    for &(x, y, _) in &edges {
        deg[x] += 1;
        deg[y] += 1;
    }
    let multi: Vec<&(usize, usize, i64)> = edges.iter().filter(|e| e.2 > 1).collect();
    if multi.iter().any(|e| e.2 == 3) {
        return n == 2;
    }
    match multi.len() {
        0 => {
            let branches: Vec<usize> = (0..n).filter(|&x| deg[x] >= 3).collect();
            match branches.as_slice() {
                [] => true,
                [b] if deg[*b] == 3 => {
                    let mut arms: Vec<usize> = neighbors(&edges, *b)
                        .into_iter()
                        .map(|start| arm_length(&edges, *b, start))
                        .collect();
                    arms.sort_unstable();
                    // 1/(p+1) + 1/(q+1) + 1/(r+1) > 1
                    let (p, q, r) = (arms[0] + 1, arms[1] + 1, arms[2] + 1);
                    q * r + p * r + p * q > p * q * r
                }
                _ => false,
            }
        }
        1 => {
            if deg.iter().any(|&d| d > 2) {
                return false;
            }
            let &&(x, y, _) = &multi[0];
            let at_end = deg[x] == 1 || deg[y] == 1;
            at_end || (n == 4)
        }
        _ => false,
    }
}

fn neighbors(edges: &[(usize, usize, i64)], v: usize) -> Vec<usize> {
    edges
        .iter()
        .filter_map(|&(x, y, _)| if x == v { Some(y) } else if y == v { Some(x) } else { None })
        .collect()
}

fn arm_length(edges: &[(usize, usize, i64)], from: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let next: Vec<usize> = neighbors(edges, cur).into_iter().filter(|&w| w != prev).collect();
        match next.as_slice() {
            [w] => {
                prev = cur;
                cur = *w;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// Is there `c >= 0` with `sum_i c_i rows[i][j] >= 1` for every column `j`?
/// Decided by Fourier-Motzkin elimination without redundancy pruning beyond
/// normalisation and removal of duplicate rows.
pub fn fm_strictly_feasible(rows: &[Vec<Rational>], cols: usize) -> bool {
    let k = rows.len();
    // Inequalities a.x <= b over x = c.
    let mut system: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for i in 0..k {
        let mut a = vec![Rational::zero(); k];
        a[i] = rat(-1);
        system.push((a, Rational::zero()));
    }
    for j in 0..cols {
        let a: Vec<Rational> = (0..k).map(|i| -rows[i][j].clone()).collect();
        system.push((a, rat(-1)));
    }
    for var in (0..k).rev() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for row in system {
            if row.0[var].is_positive() {
                pos.push(row);
            } else if row.0[var].is_negative() {
                neg.push(row);
            } else {
                rest.push(row);
            }
        }
        for (pa, pb) in &pos {
            for (na, nb) in &neg {
                let (lp, ln) = (pa[var].clone(), -na[var].clone());
                let a: Vec<Rational> = pa.iter().zip(na).map(|(p, n)| p * &ln + n * &lp).collect();
                let b = pb * &ln + nb * &lp;
                rest.push((a, b));
            }
        }
        system = dedup(rest);
    }
    system.iter().all(|(_, b)| !b.is_negative())
}

fn dedup(rows: Vec<(Vec<Rational>, Rational)>) -> Vec<(Vec<Rational>, Rational)> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (a, b) in rows {
        let scale = a.iter().chain(std::iter::once(&b)).find(|x| !x.is_zero()).map(|x| x.abs());
        let (a, b) = match scale {
            Some(s) => (a.iter().map(|x| x / &s).collect::<Vec<_>>(), &b / &s),
            None => (a, b),
        };
        let key = (a.clone(), b.clone());
        if seen.insert(key) {
            out.push((a, b));
        }
    }
    out
}

/// Finite type of a datum by trying every `A1` and every `S2` inside
/// `S \ (Sigma u Sp)`, using the two oracles above.
pub fn brute_force_finite_type(d: &HomogeneousSphericalDatum) -> bool {
    let n = d.simple_count();
    let simple_in_sigma: BTreeSet<usize> = (0..n).filter(|&i| d.sigma_index_of_simple(i).is_some()).collect();
    let cands: Vec<usize> = (0..n).filter(|&i| !simple_in_sigma.contains(&i) && !d.sp().contains(i)).collect();
    let a = d.a();
    for amask in 0u64..(1 << a.len()) {
        let a1: Vec<usize> = (0..a.len()).filter(|&k| amask >> k & 1 == 1).collect();
        let s1: Vec<usize> = simple_in_sigma
            .iter()
            .copied()
            .filter(|&i| d.a_of(i).iter().all(|x| a1.contains(x)))
            .collect();
        for smask in 0u64..(1 << cands.len()) {
            let s2: Vec<usize> = (0..cands.len()).filter(|&k| smask >> k & 1 == 1).map(|k| cands[k]).collect();
            let mut support: BTreeSet<usize> = s1.iter().chain(&s2).copied().collect();
            support.extend(d.sp().iter());
            let support: Vec<usize> = support.into_iter().collect();
            if !dynkin_finite(d.space().gcm(), &support) {
                continue;
            }
            let mut gens: Vec<Vec<Rational>> = a1.iter().map(|&k| a[k].rho.values().to_vec()).collect();
            gens.extend(s2.iter().map(|&i| d.coroot_restriction(i).values().to_vec()));
            let on_sigma: Vec<Vec<Rational>> = gens
                .iter()
                .map(|g| d.sigma_coords().iter().map(|s| kmsph::rational::dot(g, s)).collect())
                .collect();
            if fm_strictly_feasible(&on_sigma, d.sigma().len()) {
                return true;
            }
        }
    }
    false
}

pub fn random_gcm_entries<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        for j in i + 1..n {
            let x: i64 = rng.gen_range(-4..=0);
            a[i][j] = x;
            a[j][i] = if x == 0 { 0 } else { rng.gen_range(-4..=-1) };
        }
    }
    a
}

pub fn subset_vec(s: &SimpleRootSubset) -> Vec<usize> {
    s.iter().collect()
}
