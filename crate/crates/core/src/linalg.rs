//! Dense exact linear algebra over the rationals and the integers.
//!
//! Matrices are row-major `Vec<Vec<_>>`. Everything here is desk scale: the
//! algorithms are plain Gaussian elimination, Hermite reduction and Smith
//! reduction without any attempt at asymptotic cleverness.

use num::{Integer as _, One, Signed, Zero};

use crate::rational::{Integer, Rational};

pub type RatMatrix = Vec<Vec<Rational>>;
pub type IntMatrix = Vec<Vec<Integer>>;

/// Reduced row echelon form and the pivot columns.
pub fn rref(m: &[Vec<Rational>]) -> (RatMatrix, Vec<usize>) {
    let mut a: RatMatrix = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let delta = &f * &a[r][j];
                    a[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    rref(m).1.len()
}

/// Nonzero rows of the reduced echelon form: a canonical basis of the row space.
pub fn row_space_basis(m: &[Vec<Rational>]) -> RatMatrix {
    let (r, pivots) = rref(m);
    r.into_iter().take(pivots.len()).collect()
}

/// Basis of `{x : m x = 0}` for a matrix with `cols` columns.
pub fn nullspace(m: &[Vec<Rational>], cols: usize) -> RatMatrix {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[row][f].clone();
            }
            v
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Combination {
    Unique(Vec<Rational>),
    NotUnique,
    Inconsistent,
}

/// Solves `sum_i c_i rows[i] = target` for the coefficient vector `c`.
pub fn express_in_rows(rows: &[Vec<Rational>], target: &[Rational]) -> Combination {
    let k = rows.len();
    let m = target.len();
    // Columns of the augmented system are the given rows.
    let system: RatMatrix = (0..m)
        .map(|j| {
            let mut line: Vec<Rational> = rows.iter().map(|r| r[j].clone()).collect();
            line.push(target[j].clone());
            line
        })
        .collect();
    let (r, pivots) = rref(&system);
    if pivots.contains(&k) {
        return Combination::Inconsistent;
    }
    if pivots.len() < k {
        return Combination::NotUnique;
    }
    let mut c = vec![Rational::zero(); k];
    for (row, &p) in pivots.iter().enumerate() {
        c[p] = r[row][k].clone();
    }
    Combination::Unique(c)
}

pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: RatMatrix = m.to_vec();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let inv = a[c][c].recip();
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = &a[i][c] * &inv;
                for j in c..n {
                    let delta = &f * &a[c][j];
                    a[i][j] -= delta;
                }
            }
        }
    }
    det
}

pub fn integer_determinant(m: &[Vec<i64>]) -> Integer {
    let q: RatMatrix = m
        .iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect();
    determinant(&q).to_integer()
}

fn row_sub_multiple(a: &mut IntMatrix, target: usize, source: usize, q: &Integer) {
    if q.is_zero() {
        return;
    }
    let src = a[source].clone();
    for (x, s) in a[target].iter_mut().zip(src) {
        *x -= q * s;
    }
}

fn negate_row(a: &mut IntMatrix, i: usize) {
    for x in a[i].iter_mut() {
        *x = -x.clone();
    }
}

/// Row-style Hermite normal form: returns `(h, u)` with `u` unimodular and
/// `u * m = h`. Pivots are positive and entries above a pivot lie in
/// `0..pivot`. Zero rows sit at the bottom of `h`.
pub fn hermite_normal_form(m: &[Vec<Integer>], cols: usize) -> (IntMatrix, IntMatrix) {
    let rows = m.len();
    let mut a: IntMatrix = m.to_vec();
    let mut u: IntMatrix = (0..rows)
        .map(|i| (0..rows).map(|j| Integer::from((i == j) as i32)).collect())
        .collect();
    let mut p = 0;
    for c in 0..cols {
        if p == rows {
            break;
        }
        loop {
            let best = (p..rows)
                .filter(|&i| !a[i][c].is_zero())
                .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()));
            let Some(best) = best else { break };
            a.swap(p, best);
            u.swap(p, best);
            let mut done = true;
            for i in p + 1..rows {
                if !a[i][c].is_zero() {
                    let q = a[i][c].div_floor(&a[p][c]);
                    row_sub_multiple(&mut a, i, p, &q);
                    row_sub_multiple(&mut u, i, p, &q);
                    if !a[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a.get(p).is_none_or(|r| r[c].is_zero()) {
            continue;
        }
        if a[p][c].is_negative() {
            negate_row(&mut a, p);
            negate_row(&mut u, p);
        }
        for i in 0..p {
            let q = a[i][c].div_floor(&a[p][c]);
            row_sub_multiple(&mut a, i, p, &q);
            row_sub_multiple(&mut u, i, p, &q);
        }
        p += 1;
    }
    (a, u)
}

/// Nonzero rows of the Hermite form: a canonical basis of the lattice spanned
/// by the rows.
pub fn hermite_basis(m: &[Vec<Integer>], cols: usize) -> IntMatrix {
    let (h, _) = hermite_normal_form(m, cols);
    h.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect()
}

/// Basis (in Hermite form) of the integer kernel `{x in Z^cols : m x = 0}`.
pub fn integer_kernel(m: &[Vec<Integer>], cols: usize) -> IntMatrix {
    let transposed: IntMatrix = (0..cols)
        .map(|j| m.iter().map(|r| r[j].clone()).collect())
        .collect();
    let (h, u) = hermite_normal_form(&transposed, m.len());
    let kernel: IntMatrix = h
        .iter()
        .zip(u)
        .filter(|(row, _)| row.iter().all(Zero::is_zero))
        .map(|(_, urow)| urow)
        .collect();
    hermite_basis(&kernel, cols)
}

/// Nonzero invariant factors of an integer matrix (Smith normal form diagonal).
pub fn smith_invariants(m: &[Vec<Integer>], cols: usize) -> Vec<Integer> {
    let rows = m.len();
    let mut a: IntMatrix = m.to_vec();
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        'pivot: loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return out;
            };
            a.swap(t, bi);
            for r in a.iter_mut() {
                r.swap(t, bj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t].div_floor(&a[t][t]);
                row_sub_multiple(&mut a, i, t, &q);
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = a[t][j].div_floor(&a[t][t]);
                for r in a.iter_mut() {
                    let delta = &q * &r[t];
                    r[j] -= delta;
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if !a[i][j].is_multiple_of(&a[t][t]) {
                        let src = a[i].clone();
                        for (x, s) in a[t].iter_mut().zip(src) {
                            *x += s;
                        }
                        continue 'pivot;
                    }
                }
            }
            break;
        }
        out.push(a[t][t].abs());
    }
    out
}
