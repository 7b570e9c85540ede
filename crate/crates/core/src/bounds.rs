//! Evaluation of the named multiplicity bounds against concrete ideals,
//! with every constant an exact rational.
//!
//! All bounds are stated on the normalized ratio e(I)/(d! l(R/I)):
//!
//!   lech        ratio <= e(R)
//!   lech_strict ratio <  e(R)                      (d >= 2)
//!   hanes       ratio <= (1 - N^{-1/(d-1)})^{d-1} e(R),  N = mu(I)
//!   mfull2      ratio <= (1 - 1/(2N-2)) e(R),      d = 2, closed, N = mu(I)
//!   dimd        ratio <= (1 - 1/((d-1)! N)) e(R),  d > 2, closed, N = mu(I)
//!   colength    ratio <= (1 - 1/(d! N)) e(R),      d >= 2, N = l(R/I)

use crate::closure::m_full_certificate;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::factorial;
use crate::multiplicity::{multiplicity_auto, ring_multiplicity, default_n_max};
use crate::ring::AmbientRing;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundName {
    Lech,
    LechStrict,
    Hanes,
    Dim2MFull,
    DimDGenerators,
    ColengthBound,
}

impl BoundName {
    pub const ALL: [BoundName; 6] = [
        BoundName::Lech,
        BoundName::LechStrict,
        BoundName::Hanes,
        BoundName::Dim2MFull,
        BoundName::DimDGenerators,
        BoundName::ColengthBound,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            BoundName::Lech => "lech",
            BoundName::LechStrict => "lech_strict",
            BoundName::Hanes => "hanes",
            BoundName::Dim2MFull => "mfull2",
            BoundName::DimDGenerators => "dimd",
            BoundName::ColengthBound => "colength",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|b| b.as_str() == s)
    }
}

/// Outcome of one bound against one ideal. `satisfied` is meaningful only
/// when `hypothesis_met` is true; `tight` flags exact equality.
#[derive(Clone, Debug)]
pub struct BoundCheck {
    pub name: BoundName,
    pub bound: BigRational,
    pub hypothesis_met: bool,
    pub satisfied: bool,
    pub tight: bool,
    pub note: Option<String>,
}

/// Exact-rational record of one ideal against a list of bounds.
#[derive(Clone, Debug)]
pub struct RatioReport {
    pub ideal: String,
    pub dim: usize,
    pub e: u64,
    pub colength: u64,
    pub mu: u64,
    /// e / (d! l), the quantity every bound caps.
    pub ratio: BigRational,
    pub checks: Vec<BoundCheck>,
}

impl RatioReport {
    pub fn violations(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| c.hypothesis_met && !c.satisfied)
    }

    pub fn rejections(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| !c.hypothesis_met)
    }
}

/// Precomputed ambient data shared across report rows.
#[derive(Clone, Debug)]
pub struct BoundContext {
    pub ring: AmbientRing,
    pub ring_e: u64,
}

impl BoundContext {
    pub fn new(ring: AmbientRing) -> Result<Self> {
        let ring_e = ring_multiplicity(&ring, default_n_max(ring.dim()))?;
        Ok(Self { ring, ring_e })
    }
}

/// Evaluate the requested bounds on one m-primary ideal.
pub fn evaluate(
    ideal: &MonomialIdeal,
    bounds: &[BoundName],
    ctx: &BoundContext,
) -> Result<RatioReport> {
    if *ideal.ambient() != ctx.ring {
        return Err(Error::RingMismatch);
    }
    let d = ideal.dim();
    let e = multiplicity_auto(ideal)?;
    let colength = ideal.colength()?;
    let mu = ideal.min_gens_count()? as u64;
    let ratio = BigRational::new(
        BigInt::from(e),
        factorial(d as u64) * BigInt::from(colength),
    );
    let ring_e = BigRational::from(BigInt::from(ctx.ring_e));

    let needs_certificate = bounds
        .iter()
        .any(|b| matches!(b, BoundName::Dim2MFull | BoundName::DimDGenerators));
    let certified = if needs_certificate {
        m_full_certificate(ideal)?.is_certified()
    } else {
        false
    };

    let mut checks = Vec::with_capacity(bounds.len());
    for &name in bounds {
        let check = match name {
            BoundName::Lech => simple_check(name, &ratio, ring_e.clone(), true, None),
            BoundName::LechStrict => {
                if d < 2 {
                    unmet(name, ring_e.clone(), "strictness requires dimension >= 2")
                } else {
                    let satisfied = ratio < ring_e;
                    BoundCheck {
                        name,
                        bound: ring_e.clone(),
                        hypothesis_met: true,
                        satisfied,
                        tight: false,
                        note: None,
                    }
                }
            }
            BoundName::Hanes => {
                if d < 2 {
                    unmet(name, ring_e.clone(), "requires dimension >= 2")
                } else if mu < d as u64 {
                    unmet(name, ring_e.clone(), "requires mu(I) >= d")
                } else {
                    let c = hanes_constant(mu, d as u64);
                    let tight_note = (d > 2).then(|| {
                        "constant uses a certified rational upper root bound".to_string()
                    });
                    simple_check(name, &ratio, c * &ring_e, true, tight_note)
                }
            }
            BoundName::Dim2MFull => {
                if d != 2 {
                    unmet(name, ring_e.clone(), "requires dimension 2")
                } else if !certified {
                    unmet(name, ring_e.clone(), "no m-fullness certificate")
                } else {
                    let c = one_minus_inverse(2 * mu - 2);
                    simple_check(name, &ratio, c * &ring_e, true, None)
                }
            }
            BoundName::DimDGenerators => {
                if d <= 2 {
                    unmet(name, ring_e.clone(), "requires dimension > 2")
                } else if !certified {
                    unmet(name, ring_e.clone(), "no m-fullness certificate")
                } else {
                    let denom = factorial(d as u64 - 1) * BigInt::from(mu);
                    let c = BigRational::one() - BigRational::new(BigInt::one(), denom);
                    simple_check(name, &ratio, c * &ring_e, true, None)
                }
            }
            BoundName::ColengthBound => {
                if d < 2 {
                    unmet(name, ring_e.clone(), "requires dimension >= 2")
                } else {
                    let denom = factorial(d as u64) * BigInt::from(colength);
                    let c = BigRational::one() - BigRational::new(BigInt::one(), denom);
                    simple_check(name, &ratio, c * &ring_e, true, None)
                }
            }
        };
        checks.push(check);
    }

    Ok(RatioReport {
        ideal: ideal.describe(),
        dim: d,
        e,
        colength,
        mu,
        ratio,
        checks,
    })
}

fn simple_check(
    name: BoundName,
    ratio: &BigRational,
    bound: BigRational,
    hypothesis_met: bool,
    note: Option<String>,
) -> BoundCheck {
    let satisfied = *ratio <= bound;
    let tight = *ratio == bound;
    BoundCheck { name, bound, hypothesis_met, satisfied, tight, note }
}

fn unmet(name: BoundName, bound: BigRational, reason: &str) -> BoundCheck {
    BoundCheck {
        name,
        bound,
        hypothesis_met: false,
        satisfied: false,
        tight: false,
        note: Some(reason.into()),
    }
}

fn one_minus_inverse(n: u64) -> BigRational {
    BigRational::one() - BigRational::new(BigInt::one(), BigInt::from(n))
}

/// (1 - N^{-1/(d-1)})^{d-1} as an exact rational. For d = 2 this is exactly
/// 1 - 1/N; for d > 2 the (d-1)-st root of N is replaced by its smallest
/// rational upper bound with denominator 10^6, so the returned constant is
/// never smaller than the true one and a reported violation stays meaningful.
pub fn hanes_constant(n: u64, d: u64) -> BigRational {
    assert!(d >= 2 && n >= 1);
    let root = if d == 2 {
        BigRational::from(BigInt::from(n))
    } else {
        nth_root_upper(n, d - 1)
    };
    let c = BigRational::one() - root.recip();
    let mut out = BigRational::one();
    for _ in 0..d - 1 {
        out *= &c;
    }
    out
}

/// Smallest p / 10^6 with (p / 10^6)^k >= n, by integer binary search.
pub fn nth_root_upper(n: u64, k: u64) -> BigRational {
    let scale = BigInt::from(10u64).pow(6);
    let target = BigInt::from(n) * scale.pow(k as u32);
    let mut lo = BigInt::zero(); // invariant: lo^k < target
    let mut hi = BigInt::from(n) * &scale + 1u32; // hi^k >= target since n >= 1
    while &lo + 1u32 < hi {
        let mid: BigInt = (&lo + &hi) / 2;
        if mid.pow(k as u32) >= target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    BigRational::new(hi, scale)
}

/// Ring-level uniform improvement: epsilon = e(R) - max e/(d! l) over the
/// supplied ideals, together with the maximizing ideal and the per-colength
/// maxima curve.
#[derive(Clone, Debug)]
pub struct UniformReport {
    pub ring: String,
    pub ring_e: u64,
    pub epsilon: BigRational,
    pub max_ratio: BigRational,
    pub argmax: String,
    pub curve: Vec<UniformCurvePoint>,
}

#[derive(Clone, Debug)]
pub struct UniformCurvePoint {
    pub colength: u64,
    pub max_ratio: BigRational,
    pub argmax: String,
}

pub fn uniform_epsilon_report(
    ctx: &BoundContext,
    ideals: &[MonomialIdeal],
) -> Result<UniformReport> {
    if ctx.ring_e <= 1 {
        return Err(Error::HypothesisNotMet(
            "uniform improvement requires e(R) > 1; over a regular ring the \
             powers of the maximal ideal push the ratio to e(R) = 1"
                .into(),
        ));
    }
    if ideals.is_empty() {
        return Err(Error::InvalidArgument("no ideals supplied".into()));
    }
    let d = ctx.ring.dim() as u64;
    let mut best: Option<(BigRational, String)> = None;
    let mut per_colength: std::collections::BTreeMap<u64, (BigRational, String)> =
        std::collections::BTreeMap::new();
    for i in ideals {
        if *i.ambient() != ctx.ring {
            return Err(Error::RingMismatch);
        }
        let e = multiplicity_auto(i)?;
        let l = i.colength()?;
        let ratio = BigRational::new(BigInt::from(e), factorial(d) * BigInt::from(l));
        let desc = i.describe();
        if best.as_ref().map_or(true, |(b, _)| ratio > *b) {
            best = Some((ratio.clone(), desc.clone()));
        }
        per_colength
            .entry(l)
            .and_modify(|(r, a)| {
                if ratio > *r {
                    *r = ratio.clone();
                    *a = desc.clone();
                }
            })
            .or_insert((ratio, desc));
    }
    let (max_ratio, argmax) = best.expect("nonempty collection");
    let epsilon = BigRational::from(BigInt::from(ctx.ring_e)) - &max_ratio;
    Ok(UniformReport {
        ring: ctx.ring.describe(),
        ring_e: ctx.ring_e,
        epsilon,
        max_ratio,
        argmax,
        curve: per_colength
            .into_iter()
            .map(|(colength, (max_ratio, argmax))| UniformCurvePoint {
                colength,
                max_ratio,
                argmax,
            })
            .collect(),
    })
}
