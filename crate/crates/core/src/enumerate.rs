//! Generation of m-primary monomial ideals: exhaustive by colength in
//! dimension two, seeded random sampling elsewhere, and structured families.
//!
//! In two variables the ideals of colength n in a polynomial ring correspond
//! to integer partitions of n via the staircase of standard monomials; in a
//! two-dimensional semigroup ring the staircases are the downward-closed
//! subsets of the semigroup.

use crate::closure::is_integrally_closed;
use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::ideal::MonomialIdeal;
use crate::multiplicity::multiplicity_auto;
use crate::ring::AmbientRing;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumerationMode {
    /// All m-primary ideals of colength `1..=max` (dimension 2 only).
    ByColength { max: u64 },
    /// All staircase ideals with generator exponents `<= max_degree` and at
    /// most `max_gens` minimal generators (polynomial dimension 2 only).
    ByGenerators { max_gens: usize, max_degree: i64 },
    /// Seeded random m-primary ideals (any supported ambient).
    Random { count: usize, seed: u64, max_degree: i64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealFilter {
    All,
    IntegrallyClosed,
}

#[derive(Clone, Debug)]
pub struct EnumerationSpec {
    pub ambient: AmbientRing,
    pub mode: EnumerationMode,
    pub filter: IdealFilter,
}

/// Emit the qualifying ideals, each exactly once, in deterministic order
/// (colength, then lexicographic staircase).
pub fn enumerate_ideals(spec: &EnumerationSpec) -> Result<Vec<MonomialIdeal>> {
    let mut out = match &spec.mode {
        EnumerationMode::ByColength { max } => by_colength(&spec.ambient, *max)?,
        EnumerationMode::ByGenerators { max_gens, max_degree } => {
            by_generators(&spec.ambient, *max_gens, *max_degree)?
        }
        EnumerationMode::Random { count, seed, max_degree } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut seen: Vec<MonomialIdeal> = Vec::new();
            for _ in 0..*count {
                let i = random_m_primary(&spec.ambient, *max_degree, &mut rng)?;
                if !seen.contains(&i) {
                    seen.push(i);
                }
            }
            seen
        }
    };
    if spec.filter == IdealFilter::IntegrallyClosed {
        let mut kept = Vec::new();
        for i in out {
            if is_integrally_closed(&i)? {
                kept.push(i);
            }
        }
        out = kept;
    }
    Ok(out)
}

fn by_colength(ring: &AmbientRing, max: u64) -> Result<Vec<MonomialIdeal>> {
    if ring.dim() != 2 {
        return Err(Error::DimensionUnsupported {
            found: ring.dim(),
            reason: "exhaustive enumeration by colength requires dimension 2".into(),
        });
    }
    if ring.is_polynomial() {
        let mut out = Vec::new();
        for n in 1..=max {
            for parts in partitions(n) {
                out.push(staircase_ideal(ring, &parts)?);
            }
        }
        Ok(out)
    } else {
        let mut sets = downward_closed_sets(ring, max as usize);
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        sets.iter().map(|f| downset_to_ideal(ring, f)).collect()
    }
}

fn by_generators(ring: &AmbientRing, max_gens: usize, max_degree: i64) -> Result<Vec<MonomialIdeal>> {
    if !ring.is_polynomial() || ring.dim() != 2 {
        return Err(Error::DimensionUnsupported {
            found: ring.dim(),
            reason: "generator-bounded enumeration requires the polynomial plane".into(),
        });
    }
    if max_degree < 1 {
        return Err(Error::InvalidArgument("max_degree must be at least 1".into()));
    }
    let mut out = Vec::new();
    for n in 1..=(max_degree as u64 * max_degree as u64) {
        for parts in bounded_partitions(n as i64, max_degree, max_degree as usize) {
            let ideal = staircase_ideal(ring, &parts)?;
            if ideal.min_gens_count()? <= max_gens {
                out.push(ideal);
            }
        }
    }
    Ok(out)
}

/// Partitions of n with parts <= max_part and at most max_len parts,
/// generated directly (no filtering of the unbounded list).
fn bounded_partitions(n: i64, max_part: i64, max_len: usize) -> Vec<Vec<i64>> {
    fn rec(n: i64, max_part: i64, slots: usize, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        if slots == 0 || max_part == 0 || n > max_part * slots as i64 {
            return;
        }
        for first in (1..=max_part.min(n)).rev() {
            prefix.push(first);
            rec(n - first, first, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// The staircase ideal whose standard monomials form the Young diagram of
/// `parts` (row j holds x-exponents `0..parts[j]`).
pub fn staircase_ideal(ring: &AmbientRing, parts: &[i64]) -> Result<MonomialIdeal> {
    debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
    let mut gens = vec![ExponentVector::new(vec![parts[0], 0])?];
    for j in 1..parts.len() {
        if parts[j] < parts[j - 1] {
            gens.push(ExponentVector::new(vec![parts[j], j as i64])?);
        }
    }
    gens.push(ExponentVector::new(vec![0, parts.len() as i64])?);
    MonomialIdeal::new(ring.clone(), gens)
}

/// All partitions of n, parts in non-increasing order, lexicographically
/// descending: [n], [n-1,1], ..., [1,...,1].
pub fn partitions(n: u64) -> Vec<Vec<i64>> {
    fn rec(n: i64, max_part: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in (1..=max_part.min(n)).rev() {
            prefix.push(first);
            rec(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as i64, n as i64, &mut Vec::new(), &mut out);
    out
}

/// Partition numbers by the bounded-part recurrence (not hard-coded).
pub fn partition_count(n: u64) -> u64 {
    let n = n as usize;
    // p[k][m] = partitions of m with parts <= k, built up by k.
    let mut row = vec![0u64; n + 1];
    row[0] = 1;
    for k in 1..=n {
        for m in k..=n {
            row[m] += row[m - k];
        }
    }
    row[n]
}

/// Downward-closed subsets of the semigroup of size `1..=max`, generated in
/// canonical graded-lex insertion order so each set appears exactly once.
pub fn downward_closed_sets(ring: &AmbientRing, max: usize) -> Vec<Vec<ExponentVector>> {
    let hb = ring.hilbert_basis();
    let mut out = Vec::new();
    let mut cur = vec![ExponentVector::zero(ring.dim())];
    rec(ring, &hb, &mut cur, max, &mut out);
    return out;

    fn rec(
        ring: &AmbientRing,
        hb: &[ExponentVector],
        cur: &mut Vec<ExponentVector>,
        max: usize,
        out: &mut Vec<Vec<ExponentVector>>,
    ) {
        out.push(cur.clone());
        if cur.len() == max {
            return;
        }
        let last = cur.last().unwrap().clone();
        let mut candidates = addable_points(ring, hb, cur);
        candidates.retain(|c| c.graded_lex_cmp(&last) == std::cmp::Ordering::Greater);
        candidates.sort_by(|a, b| a.graded_lex_cmp(b));
        for c in candidates {
            cur.push(c);
            rec(ring, hb, cur, max, out);
            cur.pop();
        }
    }
}

/// Minimal semigroup points outside a downward-closed set: the points all of
/// whose predecessors lie inside. These are exactly the points that can be
/// appended while keeping the set downward closed, and exactly the minimal
/// generators of the complement ideal.
fn addable_points(
    ring: &AmbientRing,
    hb: &[ExponentVector],
    f: &[ExponentVector],
) -> Vec<ExponentVector> {
    let mut cands: Vec<ExponentVector> = Vec::new();
    for p in f {
        for h in hb {
            let c = p.add(h);
            if f.contains(&c) || cands.contains(&c) {
                continue;
            }
            let ok = hb.iter().all(|h2| {
                match c.checked_sub(h2) {
                    Some(pred) if ring.contains(&pred) => f.contains(&pred),
                    _ => true,
                }
            });
            if ok {
                cands.push(c);
            }
        }
    }
    cands
}

fn downset_to_ideal(ring: &AmbientRing, f: &[ExponentVector]) -> Result<MonomialIdeal> {
    let hb = ring.hilbert_basis();
    MonomialIdeal::new(ring.clone(), addable_points(ring, &hb, f))
}

/// A seeded random m-primary ideal with generator coordinates `<= max_degree`
/// (ray generators are scaled as needed to cover every extreme ray).
pub fn random_m_primary(
    ring: &AmbientRing,
    max_degree: i64,
    rng: &mut ChaCha8Rng,
) -> Result<MonomialIdeal> {
    if max_degree < 1 {
        return Err(Error::InvalidArgument("max_degree must be at least 1".into()));
    }
    let dim = ring.dim();
    let mut gens = Vec::new();
    if ring.is_polynomial() {
        for i in 0..dim {
            let a = rng.gen_range(1..=max_degree);
            gens.push(ExponentVector::unit(dim, i).scale(a));
        }
        let extras = rng.gen_range(0..=dim);
        for _ in 0..extras {
            let coords: Vec<i64> = (0..dim).map(|_| rng.gen_range(0..=max_degree)).collect();
            let v = ExponentVector::new(coords)?;
            if !v.is_zero() {
                gens.push(v);
            }
        }
    } else {
        for r in ring.ray_points() {
            let c = rng.gen_range(1..=3.max(max_degree / r.degree().max(1)));
            gens.push(r.scale(c));
        }
        // A few interior points sampled from a box.
        let pool: Vec<ExponentVector> = box_semigroup_points(ring, max_degree);
        let extras = rng.gen_range(0..=2usize);
        if !pool.is_empty() {
            let mut pool = pool;
            pool.shuffle(rng);
            for v in pool.into_iter().take(extras) {
                if !v.is_zero() {
                    gens.push(v);
                }
            }
        }
    }
    MonomialIdeal::new(ring.clone(), gens)
}

fn box_semigroup_points(ring: &AmbientRing, side: i64) -> Vec<ExponentVector> {
    let dim = ring.dim();
    let mut out = Vec::new();
    let mut cur = vec![0i64; dim];
    loop {
        let v = ExponentVector::new(cur.clone()).expect("box points are nonnegative");
        if ring.contains(&v) {
            out.push(v);
        }
        let mut i = dim;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < side {
                cur[i] += 1;
                for c in cur.iter_mut().skip(i + 1) {
                    *c = 0;
                }
                break;
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct CurveRow {
    pub cutoff: u64,
    pub max_ratio: BigRational,
    pub argmax: String,
    /// Maximum over ideals with colength in (previous cutoff, this cutoff].
    pub band_max: Option<BigRational>,
    pub band_argmax: Option<String>,
}

#[derive(Clone, Debug)]
pub struct SupRatioCurve {
    pub rows: Vec<CurveRow>,
}

/// Exact maxima of e/(d! l) over all enumerated ideals up to each colength
/// cutoff, plus per-band maxima.
pub fn sup_ratio_curve(spec: &EnumerationSpec, cutoffs: &[u64]) -> Result<SupRatioCurve> {
    let mut cutoffs: Vec<u64> = cutoffs.to_vec();
    cutoffs.sort_unstable();
    cutoffs.dedup();
    let Some(&max) = cutoffs.last() else {
        return Err(Error::InvalidArgument("no cutoffs given".into()));
    };
    let full = EnumerationSpec {
        ambient: spec.ambient.clone(),
        mode: EnumerationMode::ByColength { max },
        filter: spec.filter,
    };
    let ideals = enumerate_ideals(&full)?;
    let d = spec.ambient.dim();
    let dfact = crate::linalg::factorial(d as u64);

    let mut scored: Vec<(u64, BigRational, String)> = Vec::new();
    for i in &ideals {
        let l = i.colength()?;
        let e = multiplicity_auto(i)?;
        let ratio = BigRational::new(BigInt::from(e), &dfact * BigInt::from(l));
        scored.push((l, ratio, i.describe()));
    }

    let mut rows = Vec::new();
    let mut prev = 0u64;
    let mut best: Option<(BigRational, String)> = None;
    for &cutoff in &cutoffs {
        let mut band_best: Option<(BigRational, String)> = None;
        for (l, ratio, desc) in &scored {
            if *l > prev && *l <= cutoff {
                if band_best.as_ref().map_or(true, |(b, _)| ratio > b) {
                    band_best = Some((ratio.clone(), desc.clone()));
                }
            }
        }
        if let Some((r, a)) = &band_best {
            if best.as_ref().map_or(true, |(b, _)| r > b) {
                best = Some((r.clone(), a.clone()));
            }
        }
        let (max_ratio, argmax) = best.clone().ok_or_else(|| {
            Error::InvalidArgument(format!("no ideals of colength <= {cutoff}"))
        })?;
        rows.push(CurveRow {
            cutoff,
            max_ratio,
            argmax,
            band_max: band_best.as_ref().map(|(r, _)| r.clone()),
            band_argmax: band_best.map(|(_, a)| a),
        });
        prev = cutoff;
    }
    Ok(SupRatioCurve { rows })
}

#[derive(Clone, Debug)]
pub enum Family {
    /// m, m^2, ..., m^n.
    MaxPowers { n: u64 },
    /// The single ideal (x_1^{a_1}, ..., x_d^{a_d}).
    PurePowers(Vec<i64>),
    /// Greedy staircase search maximizing e/(d! l) subject to mu <= n.
    /// Heuristic: the result is a lower-bound witness, not an optimum.
    HanesExtremal { n: usize },
}

pub fn structured_families(ring: &AmbientRing, family: &Family) -> Result<Vec<MonomialIdeal>> {
    match family {
        Family::MaxPowers { n } => {
            let m = ring.maximal_ideal();
            (1..=*n).map(|k| m.power(k)).collect()
        }
        Family::PurePowers(exps) => {
            if !ring.is_polynomial() || exps.len() != ring.dim() {
                return Err(Error::InvalidArgument(
                    "pure powers require a polynomial ambient of matching dimension".into(),
                ));
            }
            let gens = exps
                .iter()
                .enumerate()
                .map(|(i, &a)| ExponentVector::unit(ring.dim(), i).scale(a));
            Ok(vec![MonomialIdeal::new(ring.clone(), gens)?])
        }
        Family::HanesExtremal { n } => hanes_extremal(ring, *n),
    }
}

fn hanes_extremal(ring: &AmbientRing, max_gens: usize) -> Result<Vec<MonomialIdeal>> {
    if !ring.is_polynomial() || ring.dim() != 2 {
        return Err(Error::DimensionUnsupported {
            found: ring.dim(),
            reason: "greedy staircase search runs in the polynomial plane".into(),
        });
    }
    if max_gens < 2 {
        return Err(Error::InvalidArgument("need mu >= 2 in dimension 2".into()));
    }
    let score = |parts: &[i64]| -> Result<Option<(BigRational, MonomialIdeal)>> {
        let ideal = staircase_ideal(ring, parts)?;
        if ideal.min_gens_count()? > max_gens {
            return Ok(None);
        }
        let e = multiplicity_auto(&ideal)?;
        let l = ideal.colength()?;
        Ok(Some((
            BigRational::new(BigInt::from(e), BigInt::from(2 * l)),
            ideal,
        )))
    };

    // Start from the largest power of m with mu <= max_gens.
    let k = (max_gens - 1) as i64;
    let mut parts: Vec<i64> = (1..=k).rev().collect();
    let (mut best_ratio, mut best_ideal) = score(&parts)?.expect("powers of m qualify");

    const CAP: i64 = 40;
    for _ in 0..300 {
        let mut improved = false;
        let mut moves: Vec<Vec<i64>> = Vec::new();
        // Grow or shrink any row by one cell, keeping a valid partition.
        for j in 0..parts.len() {
            if parts[j] < CAP && (j == 0 || parts[j] < parts[j - 1]) {
                let mut p = parts.clone();
                p[j] += 1;
                moves.push(p);
            }
            if parts[j] > 1 && (j + 1 == parts.len() || parts[j] > parts[j + 1]) {
                let mut p = parts.clone();
                p[j] -= 1;
                moves.push(p);
            }
            if parts[j] == 1 && j + 1 == parts.len() && parts.len() > 1 {
                moves.push(parts[..j].to_vec());
            }
        }
        if parts.len() < CAP as usize {
            let mut p = parts.clone();
            p.push(1);
            moves.push(p);
        }
        for p in moves {
            if let Some((r, ideal)) = score(&p)? {
                if r > best_ratio {
                    best_ratio = r;
                    best_ideal = ideal;
                    parts = p;
                    improved = true;
                    break;
                }
            }
        }
        if !improved {
            break;
        }
    }
    Ok(vec![best_ideal])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::new(v.to_vec()).unwrap()
    }

    fn poly2() -> AmbientRing {
        AmbientRing::polynomial(2).unwrap()
    }

    fn veronese() -> AmbientRing {
        AmbientRing::semigroup(vec![ev(&[2, 0]), ev(&[1, 1]), ev(&[0, 2])]).unwrap()
    }

    fn spec(ring: AmbientRing, mode: EnumerationMode) -> EnumerationSpec {
        EnumerationSpec { ambient: ring, mode, filter: IdealFilter::All }
    }

    #[test]
    fn partitions_are_emitted_descending() {
        assert_eq!(
            partitions(4),
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn partition_counts_by_recurrence() {
        let expected = [1u64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &p) in expected.iter().enumerate() {
            assert_eq!(partition_count(n as u64), p, "p({n})");
        }
    }

    #[test]
    fn colength_two_enumeration_is_exact() {
        let ideals =
            enumerate_ideals(&spec(poly2(), EnumerationMode::ByColength { max: 2 })).unwrap();
        assert_eq!(ideals.len(), 3);
        let descs: Vec<String> = ideals.iter().map(|i| i.describe()).collect();
        assert!(descs.contains(&"x, y".to_string()));
        assert!(descs.contains(&"x^2, y".to_string()));
        assert!(descs.contains(&"x, y^2".to_string()));
    }

    #[test]
    fn enumeration_count_matches_partition_numbers() {
        let ideals =
            enumerate_ideals(&spec(poly2(), EnumerationMode::ByColength { max: 6 })).unwrap();
        let expected: u64 = (1..=6).map(partition_count).sum();
        assert_eq!(ideals.len() as u64, expected);
        for i in &ideals {
            assert!(i.is_m_primary().unwrap());
        }
        // Each colength class has the right size and the witness matches.
        for n in 1..=6u64 {
            let count = ideals
                .iter()
                .filter(|i| i.colength().unwrap() == n)
                .count() as u64;
            assert_eq!(count, partition_count(n));
        }
    }

    #[test]
    fn polynomial_downsets_agree_with_partitions() {
        let sets = downward_closed_sets(&poly2(), 5);
        for n in 1..=5usize {
            let count = sets.iter().filter(|s| s.len() == n).count() as u64;
            assert_eq!(count, partition_count(n as u64), "downsets of size {n}");
        }
    }

    #[test]
    fn veronese_enumeration_is_deterministic() {
        let s = spec(veronese(), EnumerationMode::ByColength { max: 4 });
        let a = enumerate_ideals(&s).unwrap();
        let b = enumerate_ideals(&s).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_empty());
        for i in &a {
            assert!(i.colength().unwrap() <= 4);
        }
        // Size-1 downset is the origin alone: complement ideal is maximal.
        assert_eq!(a[0], veronese().maximal_ideal());
    }

    #[test]
    fn veronese_closed_filter() {
        let s = EnumerationSpec {
            ambient: veronese(),
            mode: EnumerationMode::ByColength { max: 3 },
            filter: IdealFilter::IntegrallyClosed,
        };
        let closed = enumerate_ideals(&s).unwrap();
        for i in &closed {
            assert!(is_integrally_closed(i).unwrap());
        }
        assert!(closed.contains(&veronese().maximal_ideal()));
    }

    #[test]
    fn random_mode_is_reproducible() {
        let mode = EnumerationMode::Random { count: 20, seed: 42, max_degree: 5 };
        let a = enumerate_ideals(&spec(poly2(), mode.clone())).unwrap();
        let b = enumerate_ideals(&spec(poly2(), mode)).unwrap();
        assert_eq!(a, b);
        for i in &a {
            assert!(i.is_m_primary().unwrap());
        }
    }

    #[test]
    fn random_mode_on_the_veronese() {
        let mode = EnumerationMode::Random { count: 10, seed: 7, max_degree: 6 };
        let ideals = enumerate_ideals(&spec(veronese(), mode)).unwrap();
        for i in &ideals {
            assert!(i.is_m_primary().unwrap());
        }
        assert!(!ideals.is_empty());
    }

    #[test]
    fn sup_curve_small_cutoffs() {
        let s = spec(poly2(), EnumerationMode::ByColength { max: 3 });
        let curve = sup_ratio_curve(&s, &[1, 2, 3]).unwrap();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let two_thirds = BigRational::new(BigInt::from(2), BigInt::from(3));
        assert_eq!(curve.rows[0].max_ratio, half);
        assert_eq!(curve.rows[1].max_ratio, half);
        assert_eq!(curve.rows[2].max_ratio, two_thirds);
        assert_eq!(curve.rows[2].argmax, "x^2, x*y, y^2");
        // Cumulative maxima never decrease.
        for w in curve.rows.windows(2) {
            assert!(w[0].max_ratio <= w[1].max_ratio);
        }
    }

    #[test]
    fn families_produce_expected_ideals() {
        let r = poly2();
        let powers =
            structured_families(&r, &Family::MaxPowers { n: 4 }).unwrap();
        assert_eq!(powers.len(), 4);
        assert_eq!(powers[3], r.maximal_ideal().power(4).unwrap());

        let pure = structured_families(&r, &Family::PurePowers(vec![2, 3])).unwrap();
        assert_eq!(pure[0].describe(), "x^2, y^3");

        let extremal = structured_families(&r, &Family::HanesExtremal { n: 3 }).unwrap();
        assert_eq!(extremal.len(), 1);
        assert!(extremal[0].min_gens_count().unwrap() <= 3);
    }

    #[test]
    fn bounded_partitions_match_filtered_partitions() {
        for n in 1..=9i64 {
            let bounded = bounded_partitions(n, 3, 3);
            let filtered: Vec<Vec<i64>> = partitions(n as u64)
                .into_iter()
                .filter(|p| p.len() <= 3 && p[0] <= 3)
                .collect();
            assert_eq!(bounded, filtered, "n = {n}");
        }
    }

    #[test]
    fn veronese_sup_curve_stays_below_the_ring_multiplicity() {
        let s = spec(veronese(), EnumerationMode::ByColength { max: 8 });
        let curve = sup_ratio_curve(&s, &[2, 4, 6, 8]).unwrap();
        let two = BigRational::new(BigInt::from(2), BigInt::from(1));
        for w in curve.rows.windows(2) {
            assert!(w[0].max_ratio <= w[1].max_ratio);
        }
        for row in &curve.rows {
            assert!(row.max_ratio < two, "cutoff {}: {}", row.cutoff, row.max_ratio);
        }
    }

    #[test]
    fn by_generators_respects_bounds() {
        let ideals = enumerate_ideals(&spec(
            poly2(),
            EnumerationMode::ByGenerators { max_gens: 3, max_degree: 3 },
        ))
        .unwrap();
        assert!(!ideals.is_empty());
        for i in &ideals {
            assert!(i.min_gens_count().unwrap() <= 3);
            for g in i.generators() {
                assert!(g.coords().iter().all(|&c| c <= 3));
            }
        }
    }

    #[test]
    fn exhaustive_enumeration_rejects_higher_dimension() {
        let err = enumerate_ideals(&spec(
            AmbientRing::polynomial(3).unwrap(),
            EnumerationMode::ByColength { max: 3 },
        ))
        .unwrap_err();
        assert!(matches!(err, Error::DimensionUnsupported { .. }));
    }
}
