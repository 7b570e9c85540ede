//! Exponent vectors of monomials.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// The exponent vector of a monomial: a point of `N^d`.
///
/// Coordinates are stored as `i64` so that differences of exponent vectors
/// (which may be negative) can be formed without conversion; construction
/// rejects negative entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidArgument("exponent vector of dimension 0".into()));
        }
        if coords.iter().any(|&c| c < 0) {
            return Err(Error::InvalidArgument(format!(
                "negative exponent in {coords:?}"
            )));
        }
        Ok(Self(coords))
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![0; dim])
    }

    /// The i-th unit vector in dimension `dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut c = vec![0; dim];
        c[i] = 1;
        Self(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, or `None` if any coordinate would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.dim(), other.dim());
        let mut out = Vec::with_capacity(self.dim());
        for (a, b) in self.0.iter().zip(&other.0) {
            let c = a - b;
            if c < 0 {
                return None;
            }
            out.push(c);
        }
        Some(Self(out))
    }

    /// Signed difference (coordinates may be negative; not an exponent vector).
    pub fn signed_sub(&self, other: &Self) -> Vec<i64> {
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }

    pub fn scale(&self, k: i64) -> Self {
        debug_assert!(k >= 0);
        Self(self.0.iter().map(|c| c * k).collect())
    }

    /// Extend by one extra coordinate (used for the adjoined grading variable).
    pub fn extend(&self, last: i64) -> Self {
        let mut c = self.0.clone();
        c.push(last);
        Self(c)
    }

    /// Graded-lexicographic comparison: by total degree, then lexicographic.
    pub fn graded_lex_cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
