//! Exact dual-cone computation by the double description method.
//!
//! Given integer vectors `v_1, ..., v_m` spanning `R^n`, `dual_extreme_rays`
//! returns the extreme rays of `{ a : <v_i, a> >= 0 for all i }` as primitive
//! integer vectors. Applied to the generators of a full-dimensional cone this
//! yields its facet normals; applied to the facet normals of a pointed cone it
//! yields the extreme rays. All arithmetic is exact.

use crate::error::{Error, Result};
use crate::linalg;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::cmp::Ordering;

const MAX_CONSTRAINTS: usize = 64; // zero sets are tracked as u64 bitmasks

#[derive(Clone)]
struct Ray {
    dir: Vec<BigInt>,
    /// Bitmask of the processed constraints this ray is tight on.
    zero_set: u64,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Extreme rays of the dual cone of `constraints` (which must span `R^n`).
pub fn dual_extreme_rays(constraints: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    let n = constraints[0].len();
    if constraints.len() > MAX_CONSTRAINTS {
        return Err(Error::InvalidArgument(format!(
            "too many generators for exact dual computation: {} (limit {MAX_CONSTRAINTS})",
            constraints.len()
        )));
    }

    // Seed with a simplicial subcone: n independent constraints whose dual is
    // spanned by the columns of the inverse transpose.
    let rational = linalg::to_rational_rows(constraints);
    let mut basis_idx: Vec<usize> = Vec::new();
    let mut picked: Vec<Vec<BigRational>> = Vec::new();
    for (i, row) in rational.iter().enumerate() {
        picked.push(row.clone());
        if linalg::rank(&picked) == picked.len() {
            basis_idx.push(i);
        } else {
            picked.pop();
        }
        if basis_idx.len() == n {
            break;
        }
    }
    assert_eq!(basis_idx.len(), n, "constraints do not span the space");

    let mut processed = 0u64;
    for &i in &basis_idx {
        processed |= 1 << i;
    }
    let zero_set_of = |dir: &[BigInt], processed: u64| -> u64 {
        let mut z = 0u64;
        for (k, c) in constraints.iter().enumerate() {
            if processed & (1 << k) != 0 && dot(c, dir).is_zero() {
                z |= 1 << k;
            }
        }
        z
    };

    let inv = linalg::invert(&picked).expect("independent rows invert");
    let mut rays: Vec<Ray> = (0..n)
        .map(|j| {
            let col: Vec<BigRational> = (0..n).map(|i| inv[i][j].clone()).collect();
            let dir = linalg::primitive_integer_vector(&col);
            let zero_set = zero_set_of(&dir, processed);
            Ray { dir, zero_set }
        })
        .collect();

    for (k, c) in constraints.iter().enumerate() {
        if basis_idx.contains(&k) {
            continue;
        }
        processed |= 1 << k;
        let signs: Vec<(Ordering, BigInt)> = rays
            .iter()
            .map(|r| {
                let v = dot(c, &r.dir);
                (v.cmp(&BigInt::zero()), v)
            })
            .collect();
        if signs.iter().all(|(s, _)| *s != Ordering::Less) {
            for (r, (s, _)) in rays.iter_mut().zip(&signs) {
                if *s == Ordering::Equal {
                    r.zero_set |= 1 << k;
                }
            }
            continue;
        }

        let mut next: Vec<Ray> = Vec::new();
        for (r, (s, _)) in rays.iter().zip(&signs) {
            match s {
                Ordering::Greater => next.push(r.clone()),
                Ordering::Equal => {
                    let mut r = r.clone();
                    r.zero_set |= 1 << k;
                    next.push(r);
                }
                Ordering::Less => {}
            }
        }
        for i in 0..rays.len() {
            for j in 0..rays.len() {
                if signs[i].0 != Ordering::Greater || signs[j].0 != Ordering::Less {
                    continue;
                }
                if !adjacent(&rays, i, j) {
                    continue;
                }
                // Positive combination tight on constraint k.
                let (pi, pj) = (&signs[i].1, &signs[j].1);
                let dir: Vec<BigInt> = rays[i]
                    .dir
                    .iter()
                    .zip(&rays[j].dir)
                    .map(|(a, b)| pi * b - pj * a)
                    .collect();
                let dir = linalg::normalize_integer_vector(&dir);
                let zero_set = zero_set_of(&dir, processed);
                if !next.iter().any(|r| r.dir == dir) {
                    next.push(Ray { dir, zero_set });
                }
            }
        }
        rays = next;
    }

    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.dir).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Combinatorial adjacency over the processed constraints: no third ray is
/// tight on everything the pair is.
fn adjacent(rays: &[Ray], i: usize, j: usize) -> bool {
    let common = rays[i].zero_set & rays[j].zero_set;
    rays.iter()
        .enumerate()
        .all(|(t, r)| t == i || t == j || (r.zero_set & common) != common)
}
