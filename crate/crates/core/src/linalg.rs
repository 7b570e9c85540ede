//! Small exact linear algebra over the integers and rationals.
//!
//! Everything here runs on tiny matrices (dimension <= 5, a few dozen rows),
//! so the implementations favour clarity over asymptotics.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// Returns the nonzero rows of an echelon basis: each returned row has a
/// positive pivot, pivot columns strictly increase, and entries above a pivot
/// are reduced modulo it.
pub fn hermite_normal_form(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut pivot_row = 0usize;
    for col in 0..ncols {
        // Euclid out column `col` below `pivot_row`.
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..m.len() {
                if !m[r][col].is_zero() {
                    let better = match best {
                        None => true,
                        Some(b) => m[r][col].abs() < m[b][col].abs(),
                    };
                    if better {
                        best = Some(r);
                    }
                }
            }
            let Some(b) = best else { break };
            m.swap(pivot_row, b);
            if m[pivot_row][col].is_negative() {
                for x in m[pivot_row].iter_mut() {
                    *x = -x.clone();
                }
            }
            let mut finished = true;
            let pivot = m[pivot_row][col].clone();
            for r in pivot_row + 1..m.len() {
                if !m[r][col].is_zero() {
                    let q = m[r][col].div_floor(&pivot);
                    for c in 0..ncols {
                        let t = &m[r][c] - &q * &m[pivot_row][c];
                        m[r][c] = t;
                    }
                    if !m[r][col].is_zero() {
                        finished = false;
                    }
                }
            }
            if finished {
                break;
            }
        }
        if !m[pivot_row][col].is_zero() {
            // Reduce the rows above this pivot.
            let pivot = m[pivot_row][col].clone();
            for r in 0..pivot_row {
                if !m[r][col].is_zero() {
                    let q = m[r][col].div_floor(&pivot);
                    for c in 0..ncols {
                        let t = &m[r][c] - &q * &m[pivot_row][c];
                        m[r][c] = t;
                    }
                }
            }
            pivot_row += 1;
            if pivot_row == m.len() {
                break;
            }
        }
    }
    m.truncate(pivot_row);
    m
}

/// Whether `v` lies in the lattice spanned by an HNF basis.
pub fn lattice_contains(hnf: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let mut v = v.to_vec();
    for row in hnf {
        let col = match row.iter().position(|x| !x.is_zero()) {
            Some(c) => c,
            None => continue,
        };
        if !v[col].is_zero() {
            let (q, r) = v[col].div_rem(&row[col]);
            if !r.is_zero() {
                return false;
            }
            for c in 0..v.len() {
                let t = &v[c] - &q * &row[c];
                v[c] = t;
            }
        }
    }
    v.iter().all(|x| x.is_zero())
}

/// Product of the pivots of a full-rank square HNF basis: the lattice covolume.
pub fn hnf_covolume(hnf: &[Vec<BigInt>]) -> BigInt {
    let mut det = BigInt::one();
    for row in hnf {
        let pivot = row.iter().find(|x| !x.is_zero()).cloned().unwrap_or_else(BigInt::zero);
        det *= pivot;
    }
    det
}

/// Rank of a rational matrix via Gaussian elimination.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    let mut r = 0usize;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][col].clone();
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = &m[i][col] / &pivot;
                for c in col..ncols {
                    let t = &m[i][c] - &f * &m[r][c];
                    m[i][c] = t;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Inverse of a square rational matrix, if it exists.
pub fn invert(rows: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = rows.len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
            }
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, p);
        let pivot = m[col][col].clone();
        for c in 0..2 * n {
            let t = &m[col][c] / &pivot;
            m[col][c] = t;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for c in 0..2 * n {
                    let t = &m[i][c] - &f * &m[col][c];
                    m[i][c] = t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Clear denominators and divide by the gcd, preserving direction.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * &lcm / x.denom()).collect();
    normalize_integer_vector(&ints)
}

/// Divide an integer vector by the gcd of its entries (zero vector unchanged).
pub fn normalize_integer_vector(v: &[BigInt]) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

pub fn to_rational_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| r.iter().map(|x| BigRational::from(x.clone())).collect())
        .collect()
}
