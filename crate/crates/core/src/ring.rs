//! Ambient rings: polynomial rings and normal affine semigroup rings.
//!
//! A semigroup ring is specified by a finite list of generators in `N^d`.
//! Construction computes the group lattice L (Hermite form), the rational
//! cone C (facet normals and extreme rays, via double description), checks
//! that the data is full-dimensional and normal (S = L ∩ C), and extracts
//! the Hilbert basis. Monomial arithmetic downstream only ever needs the
//! membership test "lattice and cone", which is valid precisely because
//! normality has been verified.

use crate::cone::dual_extreme_rays;
use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::ideal::MonomialIdeal;
use crate::linalg;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;
use std::sync::Arc;

#[derive(Clone)]
pub struct AmbientRing(Arc<RingRepr>);

enum RingRepr {
    Polynomial { dim: usize },
    Semigroup(SemigroupData),
}

struct SemigroupData {
    dim: usize,
    /// Canonically sorted generator list, as given (deduplicated).
    gens: Vec<ExponentVector>,
    /// Hermite rows of the group lattice L generated by `gens`, in machine
    /// integers with pivot columns precomputed (coordinates are
    /// parse-bounded, so the entries always fit).
    lattice_rows: Vec<(usize, Vec<i64>)>,
    /// |det L| — the covolume of the lattice in Z^d.
    covolume: BigInt,
    /// Facet normals of the cone C = cone(gens); <a, x> >= 0 on C.
    facet_normals: Vec<Vec<BigInt>>,
    facet_rows: Vec<Vec<i64>>,
    /// Primitive integer directions of the extreme rays of C.
    extreme_rays: Vec<Vec<BigInt>>,
    /// Minimal nonzero S-point on each extreme ray (same order).
    ray_points: Vec<ExponentVector>,
    /// Hilbert basis of S = L ∩ C.
    hilbert_basis: Vec<ExponentVector>,
}

impl AmbientRing {
    pub fn polynomial(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidRing("dimension must be at least 1".into()));
        }
        Ok(Self(Arc::new(RingRepr::Polynomial { dim })))
    }

    /// Build a normal affine semigroup ring from generators in `N^d`.
    pub fn semigroup(gens: Vec<ExponentVector>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidRing("no semigroup generators given".into()));
        }
        let dim = gens[0].dim();
        if gens.iter().any(|g| g.dim() != dim) {
            return Err(Error::InvalidRing("generators of mixed dimension".into()));
        }
        if gens.iter().any(|g| g.is_zero()) {
            return Err(Error::InvalidRing("the zero vector is not a generator".into()));
        }
        let mut gens = gens;
        gens.sort_by(|a, b| a.graded_lex_cmp(b));
        gens.dedup();

        let int_rows: Vec<Vec<BigInt>> = gens
            .iter()
            .map(|g| g.coords().iter().map(|&c| BigInt::from(c)).collect())
            .collect();
        if linalg::rank(&linalg::to_rational_rows(&int_rows)) != dim {
            return Err(Error::InvalidRing(
                "semigroup is not full-dimensional".into(),
            ));
        }

        let lattice = linalg::hermite_normal_form(&int_rows);
        let covolume = linalg::hnf_covolume(&lattice);
        let lattice_rows = lattice
            .iter()
            .map(|row| {
                let small: Vec<i64> = row
                    .iter()
                    .map(|x| x.to_i64().expect("lattice entries fit in i64"))
                    .collect();
                let pivot = small.iter().position(|&x| x != 0).expect("nonzero row");
                (pivot, small)
            })
            .collect();

        // Generators lie in the orthant, so the cone is automatically pointed.
        let facet_normals = dual_extreme_rays(&int_rows)?;
        let facet_rows = facet_normals
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.to_i64().expect("facet entries fit in i64"))
                    .collect()
            })
            .collect();
        let extreme_rays = dual_extreme_rays(&facet_normals)?;

        let data = SemigroupData {
            dim,
            gens,
            lattice_rows,
            covolume,
            facet_normals,
            facet_rows,
            extreme_rays,
            ray_points: Vec::new(),
            hilbert_basis: Vec::new(),
        };
        let (hilbert_basis, ray_points) = validate_normal_and_extract(&data)?;
        Ok(Self(Arc::new(RingRepr::Semigroup(SemigroupData {
            ray_points,
            hilbert_basis,
            ..data
        }))))
    }

    pub fn dim(&self) -> usize {
        match &*self.0 {
            RingRepr::Polynomial { dim } => *dim,
            RingRepr::Semigroup(s) => s.dim,
        }
    }

    pub fn is_polynomial(&self) -> bool {
        matches!(&*self.0, RingRepr::Polynomial { .. })
    }

    /// Membership in the semigroup S (all of N^d for polynomial rings).
    pub fn contains(&self, v: &ExponentVector) -> bool {
        if v.dim() != self.dim() {
            return false;
        }
        match &*self.0 {
            RingRepr::Polynomial { .. } => true,
            RingRepr::Semigroup(s) => s.lattice_contains(v.coords()) && s.cone_contains(v.coords()),
        }
    }

    /// Membership of a signed integer vector in S; the workhorse of the
    /// divisibility order "u divides v iff v - u ∈ S".
    pub(crate) fn contains_signed(&self, v: &[i64]) -> bool {
        match &*self.0 {
            RingRepr::Polynomial { .. } => v.iter().all(|&c| c >= 0),
            RingRepr::Semigroup(s) => s.lattice_contains(v) && s.cone_contains(v),
        }
    }

    /// Hilbert basis of S: unit vectors for the polynomial ring.
    pub fn hilbert_basis(&self) -> Vec<ExponentVector> {
        match &*self.0 {
            RingRepr::Polynomial { dim } => {
                (0..*dim).map(|i| ExponentVector::unit(*dim, i)).collect()
            }
            RingRepr::Semigroup(s) => s.hilbert_basis.clone(),
        }
    }

    /// The maximal monomial ideal, generated by the Hilbert basis.
    pub fn maximal_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.clone(), self.hilbert_basis())
            .expect("Hilbert basis generates a valid ideal")
    }

    /// Minimal nonzero S-point on each extreme ray of the cone.
    pub fn ray_points(&self) -> Vec<ExponentVector> {
        match &*self.0 {
            RingRepr::Polynomial { dim } => {
                (0..*dim).map(|i| ExponentVector::unit(*dim, i)).collect()
            }
            RingRepr::Semigroup(s) => s.ray_points.clone(),
        }
    }

    /// Facet normals of the ambient cone (nonnegativity of each coordinate
    /// for polynomial rings).
    pub fn cone_facet_normals(&self) -> Vec<Vec<BigInt>> {
        match &*self.0 {
            RingRepr::Polynomial { dim } => (0..*dim)
                .map(|i| {
                    (0..*dim)
                        .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                        .collect()
                })
                .collect(),
            RingRepr::Semigroup(s) => s.facet_normals.clone(),
        }
    }

    /// Generators spanning the ambient cone (for recession directions).
    pub fn cone_generators(&self) -> Vec<ExponentVector> {
        match &*self.0 {
            RingRepr::Polynomial { dim } => {
                (0..*dim).map(|i| ExponentVector::unit(*dim, i)).collect()
            }
            RingRepr::Semigroup(s) => s.gens.clone(),
        }
    }

    pub fn covolume(&self) -> BigInt {
        match &*self.0 {
            RingRepr::Polynomial { .. } => BigInt::one(),
            RingRepr::Semigroup(s) => s.covolume.clone(),
        }
    }

    pub fn semigroup_generators(&self) -> Option<&[ExponentVector]> {
        match &*self.0 {
            RingRepr::Polynomial { .. } => None,
            RingRepr::Semigroup(s) => Some(&s.gens),
        }
    }

    /// The ring S × N in one more coordinate (adjoining a free variable).
    pub fn extend_by_variable(&self) -> Result<AmbientRing> {
        match &*self.0 {
            RingRepr::Polynomial { dim } => AmbientRing::polynomial(dim + 1),
            RingRepr::Semigroup(s) => {
                let mut gens: Vec<ExponentVector> =
                    s.gens.iter().map(|g| g.extend(0)).collect();
                gens.push(ExponentVector::zero(s.dim).extend(1));
                AmbientRing::semigroup(gens)
            }
        }
    }

    /// Canonical textual form, e.g. `poly:2` or `semigroup:[[0,2],[1,1],[2,0]]`.
    pub fn describe(&self) -> String {
        match &*self.0 {
            RingRepr::Polynomial { dim } => format!("poly:{dim}"),
            RingRepr::Semigroup(s) => {
                let body: Vec<String> = s
                    .gens
                    .iter()
                    .map(|g| {
                        let coords: Vec<String> =
                            g.coords().iter().map(|c| c.to_string()).collect();
                        format!("[{}]", coords.join(","))
                    })
                    .collect();
                format!("semigroup:[{}]", body.join(","))
            }
        }
    }
}

impl PartialEq for AmbientRing {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        match (&*self.0, &*other.0) {
            (RingRepr::Polynomial { dim: a }, RingRepr::Polynomial { dim: b }) => a == b,
            (RingRepr::Semigroup(a), RingRepr::Semigroup(b)) => a.gens == b.gens,
            _ => false,
        }
    }
}

impl Eq for AmbientRing {}

impl fmt::Debug for AmbientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

const MAX_DIM: usize = 8;

impl SemigroupData {
    /// Reduce against the Hermite rows in machine integers; intermediate
    /// values stay far below i64 range for parse-bounded exponents.
    fn lattice_contains(&self, v: &[i64]) -> bool {
        debug_assert!(v.len() <= MAX_DIM);
        let mut buf = [0i64; MAX_DIM];
        buf[..v.len()].copy_from_slice(v);
        for (pivot, row) in &self.lattice_rows {
            let x = buf[*pivot];
            if x != 0 {
                if x % row[*pivot] != 0 {
                    return false;
                }
                let q = x / row[*pivot];
                for (b, r) in buf[*pivot..v.len()].iter_mut().zip(&row[*pivot..]) {
                    *b -= q * r;
                }
            }
        }
        buf[..v.len()].iter().all(|&x| x == 0)
    }

    fn cone_contains(&self, v: &[i64]) -> bool {
        self.facet_rows.iter().all(|a| {
            let s: i128 = a
                .iter()
                .zip(v)
                .map(|(&ai, &vi)| ai as i128 * vi as i128)
                .sum();
            s >= 0
        })
    }
}

/// Normality check and Hilbert basis extraction.
///
/// Every Hilbert basis element of L ∩ C lies in the zonotope spanned by the
/// generators, hence in the box with corner `sum of generators`. Within that
/// box we compare L ∩ C with the N-span of the generators: equality there
/// forces S = L ∩ C everywhere.
fn validate_normal_and_extract(
    s: &SemigroupData,
) -> Result<(Vec<ExponentVector>, Vec<ExponentVector>)> {
    let dim = s.dim;
    let mut bound = vec![0i64; dim];
    for g in &s.gens {
        for (b, &c) in bound.iter_mut().zip(g.coords()) {
            *b += c;
        }
    }

    // N-span of the generators within the box, by dynamic programming.
    let mut strides = vec![1usize; dim];
    for i in (0..dim.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * (bound[i + 1] as usize + 1);
    }
    let total: usize = bound.iter().map(|&b| b as usize + 1).product();
    let idx = |v: &[i64]| -> usize {
        v.iter()
            .zip(&strides)
            .map(|(&c, &s)| c as usize * s)
            .sum()
    };
    let mut reachable = vec![false; total];
    reachable[0] = true;
    // Sweep in graded order so every partial sum is seen before its extensions.
    let mut points: Vec<Vec<i64>> = box_points(&bound);
    points.sort_by_key(|p| p.iter().sum::<i64>());
    for p in &points {
        if p.iter().all(|&c| c == 0) {
            continue;
        }
        let hit = s.gens.iter().any(|g| {
            let mut q = Vec::with_capacity(dim);
            for (a, b) in p.iter().zip(g.coords()) {
                let c = a - b;
                if c < 0 {
                    return false;
                }
                q.push(c);
            }
            reachable[idx(&q)]
        });
        if hit {
            reachable[idx(p)] = true;
        }
    }

    // Every lattice-and-cone point of the box must be generated.
    let mut in_s: Vec<ExponentVector> = Vec::new();
    for p in &points {
        if s.lattice_contains(p) && s.cone_contains(p) {
            if !reachable[idx(p)] {
                return Err(Error::InvalidRing(format!(
                    "semigroup is not normal: {p:?} lies in the group and cone \
                     but is not a nonnegative combination of the generators"
                )));
            }
            in_s.push(ExponentVector::new(p.clone()).expect("box points are nonnegative"));
        }
    }

    // Hilbert basis: irreducible nonzero elements. Summands of a decomposition
    // stay inside the box, so checking against `in_s` is complete.
    let mut hb: Vec<ExponentVector> = Vec::new();
    for v in &in_s {
        if v.is_zero() {
            continue;
        }
        let reducible = in_s.iter().any(|a| {
            !a.is_zero()
                && a != v
                && v.checked_sub(a)
                    .map_or(false, |r| !r.is_zero() && s.lattice_contains(r.coords()) && s.cone_contains(r.coords()))
        });
        if !reducible {
            hb.push(v.clone());
        }
    }
    hb.sort_by(|a, b| a.graded_lex_cmp(b));

    // Minimal S-point on each extreme ray: smallest multiple of the primitive
    // direction that lands in the lattice.
    let mut ray_points = Vec::new();
    for ray in &s.extreme_rays {
        let prim: Vec<i64> = ray
            .iter()
            .map(|x| x.to_i64().expect("ray coordinates fit in i64"))
            .collect();
        let max_c = s.covolume.to_i64().unwrap_or(i64::MAX).max(1);
        let mut found = None;
        for c in 1..=max_c {
            let cand: Vec<i64> = prim.iter().map(|&x| x * c).collect();
            if s.lattice_contains(&cand) {
                found = Some(ExponentVector::new(cand).expect("ray points are nonnegative"));
                break;
            }
        }
        ray_points.push(found.ok_or_else(|| {
            Error::InvalidRing("no lattice point found on an extreme ray".into())
        })?);
    }

    Ok((hb, ray_points))
}

fn box_points(bound: &[i64]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; bound.len()];
    loop {
        out.push(cur.clone());
        let mut i = bound.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < bound[i] {
                cur[i] += 1;
                for c in cur.iter_mut().skip(i + 1) {
                    *c = 0;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::new(v.to_vec()).unwrap()
    }

    pub(crate) fn veronese() -> AmbientRing {
        AmbientRing::semigroup(vec![ev(&[2, 0]), ev(&[1, 1]), ev(&[0, 2])]).unwrap()
    }

    #[test]
    fn veronese_is_normal_with_covolume_two() {
        let r = veronese();
        assert_eq!(r.dim(), 2);
        assert_eq!(r.covolume(), BigInt::from(2));
        assert_eq!(r.hilbert_basis(), vec![ev(&[0, 2]), ev(&[1, 1]), ev(&[2, 0])]);
        assert!(r.contains(&ev(&[3, 1])));
        assert!(!r.contains(&ev(&[1, 0])));
        assert!(!r.contains(&ev(&[2, 1])));
        let rays = r.ray_points();
        assert_eq!(rays.len(), 2);
        assert!(rays.contains(&ev(&[2, 0])));
        assert!(rays.contains(&ev(&[0, 2])));
    }

    #[test]
    fn numerical_semigroup_two_three_is_rejected() {
        let err = AmbientRing::semigroup(vec![ev(&[2]), ev(&[3])]).unwrap_err();
        assert!(matches!(err, Error::InvalidRing(_)), "{err}");
    }

    #[test]
    fn scaled_line_is_normal() {
        let r = AmbientRing::semigroup(vec![ev(&[2])]).unwrap();
        assert!(r.contains(&ev(&[4])));
        assert!(!r.contains(&ev(&[3])));
        assert_eq!(r.hilbert_basis(), vec![ev(&[2])]);
    }

    #[test]
    fn missing_interior_point_is_not_normal() {
        // (2,2) is in the group and cone but not in the semigroup.
        let err = AmbientRing::semigroup(vec![
            ev(&[4, 0]),
            ev(&[3, 1]),
            ev(&[1, 3]),
            ev(&[0, 4]),
        ])
        .unwrap_err();
        assert!(matches!(err, Error::InvalidRing(_)), "{err}");
    }

    #[test]
    fn lower_dimensional_semigroup_is_rejected() {
        let err = AmbientRing::semigroup(vec![ev(&[1, 1]), ev(&[2, 2])]).unwrap_err();
        assert!(matches!(err, Error::InvalidRing(_)), "{err}");
    }

    #[test]
    fn skew_cone_membership() {
        let r = AmbientRing::semigroup(vec![ev(&[2, 1]), ev(&[1, 2]), ev(&[1, 1])]).unwrap();
        assert!(r.contains(&ev(&[1, 1])));
        assert!(!r.contains(&ev(&[1, 0])));
        assert!(r.contains(&ev(&[3, 2])));
        assert_eq!(r.hilbert_basis().len(), 3);
    }

    #[test]
    fn cone_over_a_square_is_normal_with_four_rays() {
        let r = AmbientRing::semigroup(vec![
            ev(&[0, 0, 1]),
            ev(&[1, 0, 1]),
            ev(&[0, 1, 1]),
            ev(&[1, 1, 1]),
        ])
        .unwrap();
        assert_eq!(r.dim(), 3);
        assert_eq!(r.hilbert_basis().len(), 4);
        assert_eq!(r.ray_points().len(), 4);
        assert!(r.contains(&ev(&[1, 1, 2])));
        assert!(r.contains(&ev(&[2, 1, 3])));
        assert!(!r.contains(&ev(&[1, 1, 0])));
        assert!(!r.contains(&ev(&[2, 0, 1])));
        assert_eq!(r.maximal_ideal().colength().unwrap(), 1);
    }

    #[test]
    fn extend_by_variable_stays_normal() {
        let r = veronese().extend_by_variable().unwrap();
        assert_eq!(r.dim(), 3);
        assert!(r.contains(&ev(&[1, 1, 5])));
        assert!(!r.contains(&ev(&[1, 0, 2])));
    }

    #[test]
    fn describe_round_trips_canonical_order() {
        let r = veronese();
        assert_eq!(r.describe(), "semigroup:[[0,2],[1,1],[2,0]]");
        assert_eq!(AmbientRing::polynomial(3).unwrap().describe(), "poly:3");
    }
}
