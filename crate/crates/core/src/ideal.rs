//! Monomial ideals: minimal generators, membership, arithmetic, colength.

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::ring::AmbientRing;
use std::fmt;

/// A monomial ideal, stored as the unique minimal (antichain) generating set.
///
/// The empty generating set is the zero ideal; the set `{0}` is the unit
/// ideal. Both are representable, but colength and multiplicity reject them.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ambient: AmbientRing,
    /// Minimal generators, sorted lexicographically descending.
    gens: Vec<ExponentVector>,
}

/// The finite set of semigroup points outside an m-primary ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementSet {
    points: Vec<ExponentVector>,
}

impl ComplementSet {
    pub fn points(&self) -> &[ExponentVector] {
        &self.points
    }

    pub fn len(&self) -> u64 {
        self.points.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

impl MonomialIdeal {
    /// Minimalize a generating set: membership is unchanged and the result
    /// is the divisibility antichain.
    pub fn new(
        ambient: AmbientRing,
        gens: impl IntoIterator<Item = ExponentVector>,
    ) -> Result<Self> {
        let mut raw: Vec<ExponentVector> = Vec::new();
        for g in gens {
            if g.dim() != ambient.dim() || !ambient.contains(&g) {
                return Err(Error::InvalidGenerator(format!("{g:?}")));
            }
            raw.push(g);
        }
        raw.sort_by(|a, b| a.graded_lex_cmp(b));
        raw.dedup();
        // A generator is redundant iff an earlier (lower-degree) kept one
        // divides it; equal vectors were deduplicated, so strict divisibility
        // suffices.
        let mut kept: Vec<ExponentVector> = Vec::new();
        for g in raw {
            if !kept.iter().any(|u| divides(&ambient, u, &g)) {
                kept.push(g);
            }
        }
        kept.sort_by(|a, b| b.cmp(a));
        Ok(Self { ambient, gens: kept })
    }

    pub fn zero(ambient: AmbientRing) -> Self {
        Self { ambient, gens: Vec::new() }
    }

    pub fn unit(ambient: AmbientRing) -> Self {
        let dim = ambient.dim();
        Self { ambient, gens: vec![ExponentVector::zero(dim)] }
    }

    pub fn ambient(&self) -> &AmbientRing {
        &self.ambient
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn dim(&self) -> usize {
        self.ambient.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_zero())
    }

    /// Ideal membership of a semigroup point.
    pub fn contains(&self, v: &ExponentVector) -> Result<bool> {
        if v.dim() != self.dim() || !self.ambient.contains(v) {
            return Err(Error::InvalidPoint(format!("{v:?}")));
        }
        Ok(self.contains_unchecked(v))
    }

    pub(crate) fn contains_unchecked(&self, v: &ExponentVector) -> bool {
        self.gens.iter().any(|g| divides(&self.ambient, g, v))
    }

    fn contains_raw(&self, v: &[i64]) -> bool {
        self.gens.iter().any(|g| {
            let diff: Vec<i64> = v.iter().zip(g.coords()).map(|(a, b)| a - b).collect();
            self.ambient.contains_signed(&diff)
        })
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::RingMismatch);
        }
        Self::new(
            self.ambient.clone(),
            self.gens.iter().chain(&other.gens).cloned(),
        )
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::RingMismatch);
        }
        let mut sums = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                sums.push(a.add(b));
            }
        }
        Self::new(self.ambient.clone(), sums)
    }

    pub fn power(&self, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("power requires n >= 1".into()));
        }
        let mut out = self.clone();
        for _ in 1..n {
            out = out.product(self)?;
        }
        Ok(out)
    }

    /// Number of minimal generators μ(I).
    pub fn min_gens_count(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(self.gens.len())
    }

    /// m-primary test: every extreme ray of the ambient cone must carry a
    /// generator, which is equivalent to the complement being finite.
    pub fn is_m_primary(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Ok(true);
        }
        let rays = self.ambient.ray_points();
        Ok(rays.iter().all(|r| {
            self.gens.iter().any(|g| is_positive_multiple(g, r))
        }))
    }

    /// Colength ℓ(R/I) together with the witnessing complement set.
    ///
    /// Polynomial rings enumerate the box bounded by the componentwise
    /// maximum of the generator coordinates (sound because an m-primary
    /// monomial ideal contains a pure power of every variable). Semigroup
    /// rings start from a cone-slab box and certify completeness by checking
    /// that every Hilbert-basis successor of a complement point that avoids
    /// the ideal stays inside the box, growing the box otherwise.
    pub fn complement(&self) -> Result<ComplementSet> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if !self.is_m_primary()? {
            return Err(Error::InfiniteColength);
        }
        let dim = self.dim();
        if self.ambient.is_polynomial() {
            let mut bound = vec![0i64; dim];
            for g in &self.gens {
                for (b, &c) in bound.iter_mut().zip(g.coords()) {
                    *b = (*b).max(c);
                }
            }
            let mut points = Vec::new();
            for p in BoxIter::new(&bound.iter().map(|&b| b - 1).collect::<Vec<_>>()) {
                if !self.contains_raw(&p) {
                    points.push(ExponentVector::new(p).expect("box points are nonnegative"));
                }
            }
            points.sort_by(|a, b| a.graded_lex_cmp(b));
            return Ok(ComplementSet { points });
        }

        let max_coord = self
            .gens
            .iter()
            .flat_map(|g| g.coords())
            .copied()
            .max()
            .unwrap_or(0);
        let hb = self.ambient.hilbert_basis();
        let mut side = max_coord * dim as i64;
        for _ in 0..30 {
            let bound = vec![side; dim];
            let mut points = Vec::new();
            for p in BoxIter::new(&bound) {
                if self.ambient.contains_signed(&p) && !self.contains_raw(&p) {
                    points.push(ExponentVector::new(p).expect("box points are nonnegative"));
                }
            }
            let certified = points.iter().all(|f| {
                hb.iter().all(|h| {
                    let succ = f.add(h);
                    self.contains_unchecked(&succ) || succ.coords().iter().all(|&c| c <= side)
                })
            });
            if certified {
                points.sort_by(|a, b| a.graded_lex_cmp(b));
                return Ok(ComplementSet { points });
            }
            side *= 2;
        }
        Err(Error::InvalidArgument(
            "complement enumeration box failed to close".into(),
        ))
    }

    pub fn colength(&self) -> Result<u64> {
        Ok(self.complement()?.len())
    }

    /// Canonical monomial text (e.g. `x^3, x*y, y^3`), parseable back.
    pub fn describe(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.gens
            .iter()
            .map(|g| monomial_text(g))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.describe())
    }
}

pub(crate) fn divides(ambient: &AmbientRing, u: &ExponentVector, v: &ExponentVector) -> bool {
    ambient.contains_signed(&v.signed_sub(u))
}

fn is_positive_multiple(g: &ExponentVector, ray: &ExponentVector) -> bool {
    if g.is_zero() {
        return false;
    }
    let gc = g.coords();
    let rc = ray.coords();
    for i in 0..gc.len() {
        for j in i + 1..gc.len() {
            if gc[i] as i128 * rc[j] as i128 != gc[j] as i128 * rc[i] as i128 {
                return false;
            }
        }
    }
    // Proportional; both nonzero and nonnegative means same ray.
    gc.iter().zip(rc).all(|(&a, &b)| (a == 0) == (b == 0))
}

/// Monomial text of a single exponent vector, e.g. `x^2*y`.
pub fn monomial_text(g: &ExponentVector) -> String {
    if g.is_zero() {
        return "1".into();
    }
    let dim = g.dim();
    let mut parts = Vec::new();
    for (i, &e) in g.coords().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let var = variable_name(i, dim);
        if e == 1 {
            parts.push(var);
        } else {
            parts.push(format!("{var}^{e}"));
        }
    }
    parts.join("*")
}

pub fn variable_name(i: usize, dim: usize) -> String {
    if dim <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

/// Iterates all integer points of the box `0..=bound[i]` per coordinate.
struct BoxIter {
    bound: Vec<i64>,
    cur: Vec<i64>,
    done: bool,
}

impl BoxIter {
    fn new(bound: &[i64]) -> Self {
        let done = bound.iter().any(|&b| b < 0);
        Self {
            bound: bound.to_vec(),
            cur: vec![0; bound.len()],
            done,
        }
    }
}

impl Iterator for BoxIter {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        let mut i = self.cur.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.cur[i] < self.bound[i] {
                self.cur[i] += 1;
                for c in self.cur.iter_mut().skip(i + 1) {
                    *c = 0;
                }
                break;
            }
        }
        Some(out)
    }
}
