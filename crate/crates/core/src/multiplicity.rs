//! Hilbert-Samuel multiplicity by finite differences and, in dimension two,
//! by exact lattice geometry. The two routes are independent and are held
//! against each other throughout the test suite.

use crate::closure::hull_chain_2d;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::AmbientRing;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// The record of one finite-difference run: colengths of the powers of an
/// ideal, the iterated difference table, and the stabilized top difference
/// (which equals the multiplicity).
#[derive(Clone, Debug)]
pub struct HilbertSamuelTrace {
    /// `lengths[j]` is the colength of the (j+1)-st power.
    pub lengths: Vec<u64>,
    /// `differences[k]` is the k-th finite difference row, k = 0..=d.
    pub differences: Vec<Vec<i64>>,
    /// Earliest index in the top row from which the value stays constant.
    pub stabilized_at: Option<usize>,
    pub e_value: Option<u64>,
}

/// Default power horizon per total dimension.
pub fn default_n_max(dim: usize) -> usize {
    match dim {
        0 | 1 | 2 => 12,
        _ => 8,
    }
}

/// Colengths of `I^n` for n = 1..=n_max, with the d-th finite difference
/// required to be constant over the last three values.
pub fn multiplicity_oracle(ideal: &MonomialIdeal, n_max: usize) -> Result<HilbertSamuelTrace> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let d = ideal.dim();
    if n_max < d + 3 {
        return Err(Error::InvalidArgument(format!(
            "n_max = {n_max} is too small: need at least d + 3 = {}",
            d + 3
        )));
    }
    if !ideal.is_m_primary()? {
        return Err(Error::InfiniteColength);
    }

    let mut lengths = Vec::with_capacity(n_max);
    let mut power = ideal.clone();
    lengths.push(power.colength()?);
    for _ in 1..n_max {
        power = power.product(ideal)?;
        lengths.push(power.colength()?);
    }

    Ok(finish_trace(lengths, d, n_max)?)
}

pub(crate) fn finish_trace(lengths: Vec<u64>, d: usize, n_max: usize) -> Result<HilbertSamuelTrace> {
    let mut differences: Vec<Vec<i64>> = Vec::with_capacity(d + 1);
    differences.push(lengths.iter().map(|&x| x as i64).collect());
    for _ in 0..d {
        let prev = differences.last().unwrap();
        let next: Vec<i64> = prev.windows(2).map(|w| w[1] - w[0]).collect();
        differences.push(next);
    }

    let top = differences.last().unwrap();
    let n = top.len();
    let stabilized = n >= 3 && top[n - 1] == top[n - 2] && top[n - 1] == top[n - 3];
    let e = top.last().copied().unwrap_or(0);
    if !stabilized || e <= 0 {
        let trace = HilbertSamuelTrace {
            lengths,
            differences,
            stabilized_at: None,
            e_value: None,
        };
        return Err(Error::NotStabilized {
            n_max,
            trace: Box::new(trace),
        });
    }
    let mut start = n - 1;
    while start > 0 && top[start - 1] == e {
        start -= 1;
    }
    Ok(HilbertSamuelTrace {
        lengths,
        differences,
        stabilized_at: Some(start),
        e_value: Some(e as u64),
    })
}

/// Hilbert-Samuel multiplicity via the finite-difference oracle.
pub fn multiplicity(ideal: &MonomialIdeal, n_max: usize) -> Result<u64> {
    Ok(multiplicity_oracle(ideal, n_max)?
        .e_value
        .expect("stabilized trace carries a value"))
}

/// Exact multiplicity in dimension two: twice the euclidean area between the
/// ambient cone and the Newton polyhedron, divided by the lattice covolume.
pub fn newton_multiplicity_2d(ideal: &MonomialIdeal) -> Result<u64> {
    if ideal.dim() != 2 {
        return Err(Error::DimensionUnsupported {
            found: ideal.dim(),
            reason: "the lattice-area method applies in dimension 2 only".into(),
        });
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !ideal.is_m_primary()? {
        return Err(Error::InfiniteColength);
    }

    let chain = hull_chain_2d(ideal)?;
    let mut polygon: Vec<(i64, i64)> = vec![(0, 0)];
    polygon.extend(chain.iter().map(|p| (p.coords()[0], p.coords()[1])));

    let mut twice_area = BigInt::zero();
    for i in 0..polygon.len() {
        let (x1, y1) = polygon[i];
        let (x2, y2) = polygon[(i + 1) % polygon.len()];
        twice_area += BigInt::from(x1) * BigInt::from(y2) - BigInt::from(x2) * BigInt::from(y1);
    }
    let twice_area = twice_area.abs();
    let covolume = ideal.ambient().covolume();
    let (q, r) = twice_area.div_rem(&covolume);
    if !r.is_zero() {
        return Err(Error::NonIntegerResult(format!(
            "2*area = {twice_area} is not divisible by the covolume {covolume}"
        )));
    }
    q.to_u64().ok_or_else(|| {
        Error::NonIntegerResult("multiplicity does not fit in u64".into())
    })
}

/// Multiplicity of the ambient ring itself: e of the maximal ideal.
pub fn ring_multiplicity(ring: &AmbientRing, n_max: usize) -> Result<u64> {
    if ring.is_polynomial() {
        return Ok(1);
    }
    multiplicity(&ring.maximal_ideal(), n_max)
}

/// The cheapest exact route per dimension: lattice area for d = 2, the
/// finite-difference oracle otherwise.
pub fn multiplicity_auto(ideal: &MonomialIdeal) -> Result<u64> {
    if ideal.dim() == 2 {
        newton_multiplicity_2d(ideal)
    } else {
        multiplicity(ideal, default_n_max(ideal.dim()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::integral_closure;
    use crate::exponent::ExponentVector;

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::new(v.to_vec()).unwrap()
    }

    fn poly(d: usize) -> AmbientRing {
        AmbientRing::polynomial(d).unwrap()
    }

    fn veronese() -> AmbientRing {
        AmbientRing::semigroup(vec![ev(&[2, 0]), ev(&[1, 1]), ev(&[0, 2])]).unwrap()
    }

    fn ideal(ring: &AmbientRing, gens: &[&[i64]]) -> MonomialIdeal {
        MonomialIdeal::new(ring.clone(), gens.iter().map(|g| ev(g))).unwrap()
    }

    #[test]
    fn maximal_ideal_of_the_plane_has_multiplicity_one() {
        let m = poly(2).maximal_ideal();
        let trace = multiplicity_oracle(&m, 8).unwrap();
        assert_eq!(trace.lengths[..4], [1, 3, 6, 10]);
        assert!(trace.lengths.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(trace.e_value, Some(1));
        assert_eq!(newton_multiplicity_2d(&m).unwrap(), 1);
    }

    #[test]
    fn pure_power_ideals_multiply_the_exponents() {
        for (a, b) in [(2u64, 3u64), (3, 3), (4, 2)] {
            let i = ideal(&poly(2), &[&[a as i64, 0], &[0, b as i64]]);
            assert_eq!(multiplicity(&i, 12).unwrap(), a * b);
            assert_eq!(newton_multiplicity_2d(&i).unwrap(), a * b);
        }
    }

    #[test]
    fn staircase_ideal_has_multiplicity_six() {
        let i = ideal(&poly(2), &[&[3, 0], &[1, 1], &[0, 3]]);
        assert_eq!(multiplicity(&i, 12).unwrap(), 6);
        assert_eq!(newton_multiplicity_2d(&i).unwrap(), 6);
    }

    #[test]
    fn veronese_ring_has_multiplicity_two() {
        assert_eq!(ring_multiplicity(&veronese(), 12).unwrap(), 2);
        assert_eq!(newton_multiplicity_2d(&veronese().maximal_ideal()).unwrap(), 2);
        assert_eq!(ring_multiplicity(&poly(2), 12).unwrap(), 1);
        assert_eq!(ring_multiplicity(&poly(3), 12).unwrap(), 1);
    }

    #[test]
    fn homogeneity_under_powers() {
        let i = ideal(&poly(2), &[&[3, 0], &[1, 1], &[0, 3]]);
        let e = newton_multiplicity_2d(&i).unwrap();
        for n in [2u64, 3] {
            let p = i.power(n).unwrap();
            assert_eq!(newton_multiplicity_2d(&p).unwrap(), n * n * e);
        }
    }

    #[test]
    fn containment_reverses_multiplicity() {
        let small = ideal(&poly(2), &[&[4, 0], &[2, 2], &[0, 4]]);
        let big = ideal(&poly(2), &[&[2, 0], &[0, 2]]);
        // small ⊆ big
        for g in small.generators() {
            assert!(big.contains(g).unwrap());
        }
        assert!(
            newton_multiplicity_2d(&small).unwrap() >= newton_multiplicity_2d(&big).unwrap()
        );
    }

    #[test]
    fn closure_preserves_multiplicity() {
        for gens in [
            vec![vec![2i64, 0], vec![0, 2]],
            vec![vec![3, 0], vec![0, 2]],
            vec![vec![5, 0], vec![1, 2], vec![0, 4]],
        ] {
            let i = MonomialIdeal::new(poly(2), gens.iter().map(|g| ev(g))).unwrap();
            let c = integral_closure(&i).unwrap();
            assert_eq!(
                multiplicity(&i, 12).unwrap(),
                multiplicity(&c, 12).unwrap()
            );
        }
    }

    #[test]
    fn oracle_rejects_small_horizons() {
        let m = poly(2).maximal_ideal();
        assert!(matches!(
            multiplicity_oracle(&m, 4).unwrap_err(),
            Error::InvalidArgument(_)
        ));
    }

    #[test]
    fn unstable_differences_are_reported_with_the_trace() {
        // A wobbling top difference must not be declared stable.
        let err = finish_trace(vec![1, 2, 4, 5, 7, 8], 1, 6).unwrap_err();
        match err {
            Error::NotStabilized { n_max, trace } => {
                assert_eq!(n_max, 6);
                assert_eq!(trace.e_value, None);
                assert_eq!(trace.differences[1], vec![1, 2, 1, 2, 1]);
            }
            other => panic!("expected NotStabilized, got {other}"),
        }
    }

    #[test]
    fn oracle_agrees_with_area_on_the_veronese() {
        let v = veronese();
        let i = ideal(&v, &[&[4, 0], &[1, 1], &[0, 4]]);
        let by_area = newton_multiplicity_2d(&i).unwrap();
        let by_oracle = multiplicity(&i, 12).unwrap();
        assert_eq!(by_area, by_oracle);
    }

    #[test]
    fn three_dimensional_maximal_power() {
        let m2 = poly(3).maximal_ideal().power(2).unwrap();
        assert_eq!(multiplicity(&m2, 8).unwrap(), 8);
    }

    #[test]
    fn skew_cone_methods_agree() {
        // A cone that is not the orthant: both routes agree, and the area
        // route sees the non-axis facets through the cone functionals.
        let ring =
            AmbientRing::semigroup(vec![ev(&[2, 1]), ev(&[1, 2]), ev(&[1, 1])]).unwrap();
        let i = ideal(&ring, &[&[4, 2], &[2, 4]]);
        assert!(i.is_m_primary().unwrap());
        let by_area = newton_multiplicity_2d(&i).unwrap();
        assert_eq!(by_area, multiplicity(&i, 12).unwrap());
        let j = ideal(&ring, &[&[4, 2], &[2, 2], &[2, 4]]);
        assert_eq!(
            newton_multiplicity_2d(&j).unwrap(),
            multiplicity(&j, 12).unwrap()
        );
    }
}
