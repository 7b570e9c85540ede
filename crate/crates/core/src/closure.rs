//! Newton polyhedra, integral closure, and m-fullness certificates.

use crate::cone::dual_extreme_rays;
use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::ideal::MonomialIdeal;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// One inequality `<normal, x> >= threshold` of a Newton polyhedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Halfspace {
    pub normal: Vec<BigInt>,
    pub threshold: BigInt,
}

/// Half-space description of `conv(generators) + ambient cone`.
#[derive(Clone, Debug)]
pub struct NewtonPolyhedron {
    dim: usize,
    /// Facets with positive threshold (the compact part of the boundary).
    halfspaces: Vec<Halfspace>,
    /// Cone facets (threshold zero).
    cone_constraints: Vec<Vec<BigInt>>,
    /// In dimension 2, the hull vertices ordered along the compact boundary.
    chain: Option<Vec<ExponentVector>>,
}

impl NewtonPolyhedron {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    pub fn cone_constraints(&self) -> &[Vec<BigInt>] {
        &self.cone_constraints
    }

    /// Hull vertices along the compact boundary (dimension 2 only).
    pub fn hull_chain(&self) -> Option<&[ExponentVector]> {
        self.chain.as_deref()
    }

    pub fn contains(&self, v: &ExponentVector) -> bool {
        let coords = v.coords();
        let eval = |a: &[BigInt]| -> BigInt {
            a.iter()
                .zip(coords)
                .map(|(ai, &ci)| ai * BigInt::from(ci))
                .sum()
        };
        self.halfspaces.iter().all(|h| eval(&h.normal) >= h.threshold)
            && self.cone_constraints.iter().all(|a| !eval(a).is_negative())
    }
}

/// Vertices of `conv(gens) + C` along the compact boundary, for d = 2.
///
/// Generators are mapped by the two cone facet functionals, which carries any
/// ambient cone onto the standard orthant; the monotone chain then runs in
/// those coordinates while the returned points stay in the original ones.
pub(crate) fn hull_chain_2d(ideal: &MonomialIdeal) -> Result<Vec<ExponentVector>> {
    let ring = ideal.ambient();
    if ring.dim() != 2 {
        return Err(Error::DimensionUnsupported {
            found: ring.dim(),
            reason: "hull chain requires dimension 2".into(),
        });
    }
    let normals = ring.cone_facet_normals();
    debug_assert_eq!(normals.len(), 2);
    let eval = |a: &[BigInt], g: &ExponentVector| -> BigInt {
        a.iter()
            .zip(g.coords())
            .map(|(ai, &ci)| ai * BigInt::from(ci))
            .sum()
    };
    let mut pts: Vec<(BigInt, BigInt, ExponentVector)> = ideal
        .generators()
        .iter()
        .map(|g| (eval(&normals[0], g), eval(&normals[1], g), g.clone()))
        .collect();
    pts.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    for w in pts.windows(2) {
        debug_assert!(w[0].0 != w[1].0, "antichain generators cannot tie");
    }

    let cross = |o: &(BigInt, BigInt, ExponentVector),
                 a: &(BigInt, BigInt, ExponentVector),
                 b: &(BigInt, BigInt, ExponentVector)|
     -> BigInt { (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0) };

    let mut chain: Vec<(BigInt, BigInt, ExponentVector)> = Vec::new();
    for p in pts {
        while chain.len() >= 2
            && cross(&chain[chain.len() - 2], &chain[chain.len() - 1], &p) <= BigInt::zero()
        {
            chain.pop();
        }
        chain.push(p);
    }
    Ok(chain.into_iter().map(|(_, _, g)| g).collect())
}

/// Half-space representation of the Newton polyhedron of an m-primary ideal.
pub fn newton_polyhedron(ideal: &MonomialIdeal) -> Result<NewtonPolyhedron> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !ideal.is_m_primary()? {
        return Err(Error::InfiniteColength);
    }
    let ring = ideal.ambient();
    let dim = ring.dim();

    if dim == 2 {
        let chain = hull_chain_2d(ideal)?;
        let mut halfspaces = Vec::new();
        for w in chain.windows(2) {
            let (u, v) = (&w[0], &w[1]);
            // Inward normal of the segment u -> v, with the cone side positive.
            let a = vec![
                BigInt::from(u.coords()[1] - v.coords()[1]),
                BigInt::from(v.coords()[0] - u.coords()[0]),
            ];
            let a = crate::linalg::normalize_integer_vector(&a);
            let a = if a[0].is_negative() || (a[0].is_zero() && a[1].is_negative()) {
                a.iter().map(|x| -x.clone()).collect()
            } else {
                a
            };
            let threshold: BigInt = a
                .iter()
                .zip(u.coords())
                .map(|(ai, &ci)| ai * BigInt::from(ci))
                .sum();
            halfspaces.push(Halfspace { normal: a, threshold });
        }
        return Ok(NewtonPolyhedron {
            dim,
            halfspaces,
            cone_constraints: ring.cone_facet_normals(),
            chain: Some(chain),
        });
    }

    // General dimension: homogenize and read facets off the dual cone.
    let mut rays: Vec<Vec<BigInt>> = Vec::new();
    for g in ideal.generators() {
        let mut r = vec![BigInt::from(1)];
        r.extend(g.coords().iter().map(|&c| BigInt::from(c)));
        rays.push(r);
    }
    for c in ring.cone_generators() {
        let mut r = vec![BigInt::zero()];
        r.extend(c.coords().iter().map(|&x| BigInt::from(x)));
        rays.push(r);
    }
    let mut halfspaces = Vec::new();
    let mut cone_constraints = Vec::new();
    for normal in dual_extreme_rays(&rays)? {
        let (alpha0, a) = (normal[0].clone(), normal[1..].to_vec());
        if a.iter().all(|x| x.is_zero()) {
            continue; // the trivial "homogenizing coordinate >= 0" facet
        }
        let threshold = -alpha0;
        debug_assert!(!threshold.is_negative());
        if threshold.is_zero() {
            cone_constraints.push(a);
        } else {
            halfspaces.push(Halfspace { normal: a, threshold });
        }
    }
    Ok(NewtonPolyhedron {
        dim,
        halfspaces,
        cone_constraints,
        chain: None,
    })
}

/// Integral closure of an m-primary monomial ideal: the semigroup points of
/// the Newton polyhedron. Only finitely many candidates exist outside the
/// ideal (the complement), so the closure is the ideal plus those complement
/// points that satisfy the polyhedron inequalities.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let np = newton_polyhedron(ideal)?;
    let complement = ideal.complement()?;
    let extra: Vec<ExponentVector> = complement
        .points()
        .iter()
        .filter(|p| np.contains(p))
        .cloned()
        .collect();
    MonomialIdeal::new(
        ideal.ambient().clone(),
        ideal.generators().iter().cloned().chain(extra),
    )
}

pub fn is_integrally_closed(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(integral_closure(ideal)? == *ideal)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FullnessStatus {
    MFullByClosure,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct FullnessCertificate {
    pub status: FullnessStatus,
    pub witness: Option<String>,
}

impl FullnessCertificate {
    pub fn is_certified(&self) -> bool {
        self.status == FullnessStatus::MFullByClosure
    }
}

/// Certify m-fullness through integral closedness (dimension >= 2).
/// Anything weaker is reported as `Unknown` rather than guessed.
pub fn m_full_certificate(ideal: &MonomialIdeal) -> Result<FullnessCertificate> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.dim() < 2 {
        return Ok(FullnessCertificate {
            status: FullnessStatus::Unknown,
            witness: Some("dimension 1 carries no closure certificate".into()),
        });
    }
    if !ideal.is_m_primary()? {
        return Ok(FullnessCertificate {
            status: FullnessStatus::Unknown,
            witness: Some("ideal is not m-primary".into()),
        });
    }
    if is_integrally_closed(ideal)? {
        Ok(FullnessCertificate {
            status: FullnessStatus::MFullByClosure,
            witness: Some("integrally closed m-primary ideal in dimension >= 2".into()),
        })
    } else {
        Ok(FullnessCertificate {
            status: FullnessStatus::Unknown,
            witness: Some("not integrally closed".into()),
        })
    }
}

/// Result of sampling the generator-count monotonicity of m-full ideals:
/// mu(J) <= mu(I) for every J containing a certified I.
#[derive(Clone, Debug)]
pub struct MonotonicityReport {
    pub ideal: String,
    pub base_mu: usize,
    /// (description of J, mu(J)) for every sampled superideal.
    pub pairs: Vec<(String, usize)>,
    /// Sampled superideals violating the monotonicity (always empty unless
    /// the implementation itself is wrong).
    pub violations: Vec<String>,
}

impl MonotonicityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn watanabe_monotonicity_check(
    ideal: &MonomialIdeal,
    samples: usize,
    seed: u64,
) -> Result<MonotonicityReport> {
    let cert = m_full_certificate(ideal)?;
    if !cert.is_certified() {
        return Err(Error::HypothesisNotMet(format!(
            "m-fullness certificate unavailable: {}",
            cert.witness.unwrap_or_default()
        )));
    }
    let base_mu = ideal.min_gens_count()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let complement = ideal.complement()?;
    let addable: Vec<ExponentVector> = complement
        .points()
        .iter()
        .filter(|p| !p.is_zero())
        .cloned()
        .collect();

    let mut superideals: Vec<MonomialIdeal> = vec![
        ideal.clone(),
        ideal.ambient().maximal_ideal(),
    ];
    for _ in 0..samples {
        if addable.is_empty() {
            break;
        }
        let k = rng.gen_range(1..=addable.len());
        let mut picks = addable.clone();
        picks.shuffle(&mut rng);
        picks.truncate(k);
        let j = MonomialIdeal::new(
            ideal.ambient().clone(),
            ideal.generators().iter().cloned().chain(picks),
        )?;
        superideals.push(j);
    }

    let mut pairs = Vec::new();
    let mut violations = Vec::new();
    for j in &superideals {
        let mu = j.min_gens_count()?;
        if mu > base_mu {
            violations.push(j.describe());
        }
        pairs.push((j.describe(), mu));
    }
    Ok(MonotonicityReport {
        ideal: ideal.describe(),
        base_mu,
        pairs,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::AmbientRing;

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

    fn halfspace(a: &[i64], c: i64) -> Halfspace {
        Halfspace {
            normal: a.iter().map(|&x| BigInt::from(x)).collect(),
            threshold: BigInt::from(c),
        }
    }

    #[test]
    fn polyhedron_of_staircase_ideal() {
        let i = ideal(&poly(2), &[&[3, 0], &[1, 1], &[0, 3]]);
        let np = newton_polyhedron(&i).unwrap();
        assert_eq!(
            np.halfspaces(),
            &[halfspace(&[2, 1], 3), halfspace(&[1, 2], 3)]
        );
        assert_eq!(
            np.hull_chain().unwrap(),
            &[ev(&[0, 3]), ev(&[1, 1]), ev(&[3, 0])]
        );
    }

    #[test]
    fn polyhedron_of_two_pure_powers() {
        let i = ideal(&poly(2), &[&[2, 0], &[0, 2]]);
        let np = newton_polyhedron(&i).unwrap();
        assert_eq!(np.halfspaces(), &[halfspace(&[1, 1], 2)]);
        let m = poly(2).maximal_ideal();
        let np = newton_polyhedron(&m).unwrap();
        assert_eq!(np.halfspaces(), &[halfspace(&[1, 1], 1)]);
    }

    #[test]
    fn every_generator_is_tight_on_some_facet() {
        let i = ideal(&poly(2), &[&[4, 0], &[2, 1], &[1, 3], &[0, 4]]);
        let np = newton_polyhedron(&i).unwrap();
        for g in i.generators() {
            assert!(np.contains(g));
        }
        for h in np.halfspaces() {
            let tight = i.generators().iter().any(|g| {
                let v: BigInt = h
                    .normal
                    .iter()
                    .zip(g.coords())
                    .map(|(a, &c)| a * BigInt::from(c))
                    .sum();
                v == h.threshold
            });
            assert!(tight, "facet {h:?} touches no generator");
        }
    }

    #[test]
    fn closure_adds_the_diagonal_monomial() {
        let i = ideal(&poly(2), &[&[2, 0], &[0, 2]]);
        let c = integral_closure(&i).unwrap();
        assert_eq!(c.generators(), &[ev(&[2, 0]), ev(&[1, 1]), ev(&[0, 2])]);
        assert!(!is_integrally_closed(&i).unwrap());
        assert!(is_integrally_closed(&c).unwrap());
    }

    #[test]
    fn closure_of_mixed_powers() {
        let i = ideal(&poly(2), &[&[3, 0], &[0, 2]]);
        let c = integral_closure(&i).unwrap();
        assert_eq!(c.generators(), &[ev(&[3, 0]), ev(&[2, 1]), ev(&[0, 2])]);
    }

    #[test]
    fn staircase_ideal_is_already_closed() {
        let i = ideal(&poly(2), &[&[3, 0], &[1, 1], &[0, 3]]);
        assert_eq!(integral_closure(&i).unwrap(), i);
    }

    #[test]
    fn closure_is_idempotent_and_contains_the_ideal() {
        for gens in [
            vec![vec![4i64, 0], vec![0, 4]],
            vec![vec![5, 0], vec![2, 2], vec![0, 3]],
            vec![vec![6, 0], vec![1, 2], vec![0, 5]],
        ] {
            let i = MonomialIdeal::new(
                poly(2),
                gens.iter().map(|g| ev(g)),
            )
            .unwrap();
            let c = integral_closure(&i).unwrap();
            for g in i.generators() {
                assert!(c.contains(g).unwrap());
            }
            assert_eq!(integral_closure(&c).unwrap(), c);
            assert!(c.colength().unwrap() <= i.colength().unwrap());
        }
    }

    #[test]
    fn three_dimensional_closure_via_exact_hull() {
        let i = ideal(&poly(3), &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        let np = newton_polyhedron(&i).unwrap();
        // Single compact facet x + y + z >= 2; every facet touches a generator.
        assert_eq!(np.halfspaces(), &[Halfspace {
            normal: vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)],
            threshold: BigInt::from(2),
        }]);
        for h in np.halfspaces() {
            assert!(i.generators().iter().any(|g| {
                let v: BigInt = h
                    .normal
                    .iter()
                    .zip(g.coords())
                    .map(|(a, &c)| a * BigInt::from(c))
                    .sum();
                v == h.threshold
            }));
        }
        let c = integral_closure(&i).unwrap();
        let m2 = poly(3).maximal_ideal().power(2).unwrap();
        assert_eq!(c, m2);
        assert!(is_integrally_closed(&m2).unwrap());
    }

    #[test]
    fn certificates_follow_closedness() {
        let closed = poly(2).maximal_ideal().power(2).unwrap();
        assert!(m_full_certificate(&closed).unwrap().is_certified());

        let open = ideal(&poly(2), &[&[2, 0], &[0, 2]]);
        assert_eq!(
            m_full_certificate(&open).unwrap().status,
            FullnessStatus::Unknown
        );

        let veronese_max = veronese().maximal_ideal();
        assert!(m_full_certificate(&veronese_max).unwrap().is_certified());
    }

    #[test]
    fn veronese_maximal_ideal_polyhedron() {
        let m = veronese().maximal_ideal();
        let np = newton_polyhedron(&m).unwrap();
        // Hull chain collapses the collinear middle generator.
        assert_eq!(np.hull_chain().unwrap(), &[ev(&[2, 0]), ev(&[0, 2])]);
        assert_eq!(np.halfspaces(), &[halfspace(&[1, 1], 2)]);
    }

    #[test]
    fn monotonicity_check_accepts_closed_and_rejects_open() {
        let m2 = poly(2).maximal_ideal().power(2).unwrap();
        let report = watanabe_monotonicity_check(&m2, 10, 7).unwrap();
        assert!(report.holds());
        assert_eq!(report.base_mu, 3);
        assert!(report.pairs.iter().any(|(_, mu)| *mu == 2)); // J = m

        let open = ideal(&poly(2), &[&[2, 0], &[0, 2]]);
        assert!(matches!(
            watanabe_monotonicity_check(&open, 5, 1).unwrap_err(),
            Error::HypothesisNotMet(_)
        ));

        let v_max = veronese().maximal_ideal().power(2).unwrap();
        let report = watanabe_monotonicity_check(&v_max, 8, 3).unwrap();
        assert!(report.holds());
    }

    #[test]
    fn monotonicity_on_the_staircase_example() {
        let i = ideal(&poly(2), &[&[3, 0], &[1, 1], &[0, 3]]);
        let report = watanabe_monotonicity_check(&i, 20, 11).unwrap();
        assert!(report.holds());
        assert_eq!(report.base_mu, 3);
        // The superideal obtained by adding the complement point (2,0).
        let j = ideal(&poly(2), &[&[2, 0], &[1, 1], &[0, 3]]);
        assert_eq!(j.describe(), "x^2, x*y, y^3");
        assert!(j.min_gens_count().unwrap() <= 3);
    }
}
