//! T-homogeneous ideals over a monomial base ring: ascending chains of
//! coefficient ideals I_0 ⊆ ... ⊆ I_{K-1} together with the implicit T^K,
//! their arithmetic, lengths, generator counts, and the bracket-power
//! experiments in one-dimensional bases.

use crate::closure::integral_closure;
use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::ideal::MonomialIdeal;
use crate::linalg::factorial;
use crate::multiplicity::{finish_trace, multiplicity_auto};
use crate::ring::AmbientRing;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Σ I_k T^k + T^K · R[T] with I_0 ⊆ I_1 ⊆ ... ⊆ I_{K-1}, I_0 m-primary and
/// I_{K-1} proper. Components of index >= K are implicitly the unit ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TGradedIdeal {
    base: AmbientRing,
    components: Vec<MonomialIdeal>,
}

impl TGradedIdeal {
    pub fn new(base: AmbientRing, components: Vec<MonomialIdeal>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidArgument(
                "a T-homogeneous ideal needs at least one component".into(),
            ));
        }
        for c in &components {
            if *c.ambient() != base {
                return Err(Error::BaseMismatch);
            }
            if c.is_zero() {
                return Err(Error::ZeroIdeal);
            }
        }
        if components.last().unwrap().is_unit() {
            return Err(Error::UnitIdeal);
        }
        if !components[0].is_m_primary()? {
            return Err(Error::InvalidArgument(
                "the degree-zero component must be m-primary".into(),
            ));
        }
        for w in components.windows(2) {
            for g in w[0].generators() {
                if !w[1].contains_unchecked(g) {
                    return Err(Error::InvalidArgument(format!(
                        "components do not ascend: {g:?} is lost at the next level"
                    )));
                }
            }
        }
        Ok(Self { base, components })
    }

    pub fn base(&self) -> &AmbientRing {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[MonomialIdeal] {
        &self.components
    }

    fn component(&self, i: usize) -> MonomialIdeal {
        if i < self.components.len() {
            self.components[i].clone()
        } else {
            MonomialIdeal::unit(self.base.clone())
        }
    }

    /// ℓ(R[T]/I) = Σ_k ℓ(R/I_k).
    pub fn t_length(&self) -> Result<u64> {
        let mut total = 0u64;
        for c in &self.components {
            total += c.colength()?;
        }
        Ok(total)
    }

    /// Convolution product: (I·J)_k = Σ_{i+j=k} I_i · J_j, with components of
    /// index >= K treated as the unit ideal; K' = K_I + K_J.
    pub fn t_product(&self, other: &Self) -> Result<Self> {
        if self.base != other.base {
            return Err(Error::BaseMismatch);
        }
        let (ka, kb) = (self.k(), other.k());
        let mut components = Vec::with_capacity(ka + kb);
        for k in 0..ka + kb {
            let mut acc: Option<MonomialIdeal> = None;
            let push = |ideal: MonomialIdeal, acc: &mut Option<MonomialIdeal>| -> Result<()> {
                *acc = Some(match acc.take() {
                    None => ideal,
                    Some(prev) => prev.sum(&ideal)?,
                });
                Ok(())
            };
            for i in 0..=k.min(ka - 1) {
                let j = k - i;
                if j < kb {
                    push(self.components[i].product(&other.components[j])?, &mut acc)?;
                }
            }
            // Unit components of one factor reproduce the other factor's chain.
            if k >= ka {
                push(other.component(k - ka), &mut acc)?;
            }
            if k >= kb {
                push(self.component(k - kb), &mut acc)?;
            }
            components.push(acc.expect("every convolution degree has a term"));
        }
        Self::new(self.base.clone(), components)
    }

    pub fn t_power(&self, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("power requires n >= 1".into()));
        }
        let mut out = self.clone();
        for _ in 1..n {
            out = out.t_product(self)?;
        }
        Ok(out)
    }

    /// Exact minimal generator count: a monomial u T^k generates minimally
    /// iff u is a minimal generator of I_k outside I_{k-1}; T^K always counts.
    /// Also returns the chain bound mu(I_0) + l(R/I_0).
    pub fn t_min_gens(&self) -> Result<MinGensReport> {
        let mut mu = self.components[0].min_gens_count()? as u64;
        for w in self.components.windows(2) {
            for g in w[1].generators() {
                if !w[0].contains_unchecked(g) {
                    mu += 1;
                }
            }
        }
        mu += 1; // T^K
        let bound = self.components[0].min_gens_count()? as u64 + self.components[0].colength()?;
        Ok(MinGensReport { mu, bound })
    }

    /// Multiplicity in dimension dim(base) + 1 by the finite-difference
    /// oracle on n -> l(R[T]/I^n).
    pub fn t_multiplicity(&self, n_max: usize) -> Result<u64> {
        let d = self.base.dim() + 1;
        if n_max < d + 3 {
            return Err(Error::InvalidArgument(format!(
                "n_max = {n_max} is too small: need at least {}",
                d + 3
            )));
        }
        let mut lengths = Vec::with_capacity(n_max);
        let mut power = self.clone();
        lengths.push(power.t_length()?);
        for _ in 1..n_max {
            power = power.t_product(self)?;
            lengths.push(power.t_length()?);
        }
        Ok(finish_trace(lengths, d, n_max)?
            .e_value
            .expect("stabilized trace carries a value"))
    }

    /// The same ideal as a monomial ideal in the base ring with one more
    /// variable adjoined: generators u T^k plus T^K. Used as an independent
    /// route for lengths, generator counts and multiplicities.
    pub fn flatten(&self) -> Result<MonomialIdeal> {
        let ext = self.base.extend_by_variable()?;
        let mut gens = Vec::new();
        for (k, c) in self.components.iter().enumerate() {
            for g in c.generators() {
                gens.push(g.extend(k as i64));
            }
        }
        gens.push(ExponentVector::zero(self.base.dim()).extend(self.k() as i64));
        MonomialIdeal::new(ext, gens)
    }

    /// Replace every component by its integral closure (still a valid chain).
    pub fn componentwise_closure(&self) -> Result<Self> {
        let closed: Result<Vec<MonomialIdeal>> =
            self.components.iter().map(integral_closure).collect();
        Self::new(self.base.clone(), closed?)
    }

    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.components.iter().enumerate() {
            let t = match k {
                0 => String::new(),
                1 => "T".into(),
                _ => format!("T^{k}"),
            };
            parts.push(format!("({}){}", c.describe(), t));
        }
        parts.push(match self.k() {
            1 => "T".into(),
            k => format!("T^{k}"),
        });
        parts.join(" + ")
    }
}

#[derive(Clone, Debug)]
pub struct MinGensReport {
    pub mu: u64,
    /// mu(I_0) + l(R/I_0); the exact count never exceeds it.
    pub bound: u64,
}

impl MinGensReport {
    pub fn holds(&self) -> bool {
        self.mu <= self.bound
    }
}

/// Bookkeeping identities of the graded decomposition: the length of the
/// T-graded ideal is the sum of the component colengths (cross-checked in
/// the flattened monomial model), and replacing components by their integral
/// closures preserves the multiplicity while never increasing the length.
#[derive(Clone, Debug)]
pub struct DoubleGradedReport {
    pub t_length: u64,
    pub component_lengths: Vec<u64>,
    pub flattened_length: u64,
    pub e_value: u64,
    pub closure_e_value: u64,
    pub closure_t_length: u64,
}

impl DoubleGradedReport {
    pub fn holds(&self) -> bool {
        self.t_length == self.component_lengths.iter().sum::<u64>()
            && self.t_length == self.flattened_length
            && self.e_value == self.closure_e_value
            && self.closure_t_length <= self.t_length
    }
}

pub fn double_graded_check(ideal: &TGradedIdeal, n_max: usize) -> Result<DoubleGradedReport> {
    let t_length = ideal.t_length()?;
    let component_lengths: Result<Vec<u64>> =
        ideal.components().iter().map(|c| c.colength()).collect();
    let flattened_length = ideal.flatten()?.colength()?;
    let e_value = ideal.t_multiplicity(n_max)?;
    let closed = ideal.componentwise_closure()?;
    let closure_e_value = closed.t_multiplicity(n_max)?;
    let closure_t_length = closed.t_length()?;
    Ok(DoubleGradedReport {
        t_length,
        component_lengths: component_lengths?,
        flattened_length,
        e_value,
        closure_e_value,
        closure_t_length,
    })
}

/// The chain e(I)/((d+1)! l(R[T]/I)) <= Σe(I_k)/(d! Σl(R/I_k)) <= max_k of
/// the componentwise ratios, as exact rationals.
#[derive(Clone, Debug)]
pub struct MumfordReport {
    pub lhs: BigRational,
    pub mid: BigRational,
    pub rhs: BigRational,
}

impl MumfordReport {
    pub fn holds(&self) -> bool {
        self.lhs <= self.mid && self.mid <= self.rhs
    }
}

pub fn mumford_chain_check(ideal: &TGradedIdeal, n_max: usize) -> Result<MumfordReport> {
    let d = ideal.base().dim() as u64;
    let e_total = ideal.t_multiplicity(n_max)?;
    let t_len = ideal.t_length()?;
    let lhs = BigRational::new(
        BigInt::from(e_total),
        factorial(d + 1) * BigInt::from(t_len),
    );

    let mut e_sum = 0u64;
    let mut l_sum = 0u64;
    let mut rhs: Option<BigRational> = None;
    for c in ideal.components() {
        let e = multiplicity_auto(c)?;
        let l = c.colength()?;
        e_sum += e;
        l_sum += l;
        let r = BigRational::new(BigInt::from(e), factorial(d) * BigInt::from(l));
        if rhs.as_ref().map_or(true, |m| r > *m) {
            rhs = Some(r);
        }
    }
    let mid = BigRational::new(BigInt::from(e_sum), factorial(d) * BigInt::from(l_sum));
    Ok(MumfordReport {
        lhs,
        mid,
        rhs: rhs.expect("at least one component"),
    })
}

/// One homogeneous generator a T^level of a T-graded ideal; the entry with a
/// zero base exponent at level K stands for T^K itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChosenGenerator {
    pub exponent: ExponentVector,
    pub level: usize,
}

#[derive(Clone, Debug)]
pub struct BracketQRow {
    pub q: u64,
    pub length: u64,
    pub length_by_formula: u64,
    /// s = ceil(q / (2N-3)) used in the surjection inequality.
    pub s: u64,
    pub surjection_rhs: i128,
    pub ratio: BigRational,
}

impl BracketQRow {
    pub fn identity_holds(&self) -> bool {
        self.length == self.length_by_formula
    }

    pub fn surjection_holds(&self) -> bool {
        self.length as i128 >= self.surjection_rhs
    }
}

/// Trace of a bracket-power run: lengths of the ideals generated by q-th
/// powers of a fixed generator list, their scaling limit, and the target
/// sum of component multiplicities.
#[derive(Clone, Debug)]
pub struct BracketPowerTrace {
    pub generators: Vec<ChosenGenerator>,
    pub q_values: Vec<u64>,
    pub lengths: Vec<u64>,
    pub rows: Vec<BracketQRow>,
    /// l / q^2 at the largest q.
    pub limit_estimate: BigRational,
    /// Σ_k e(I_k) over the components.
    pub target: u64,
    /// e of the T-graded ideal itself.
    pub e_value: u64,
    /// (e/2)(1 + 1/(2N-3)) with N the number of chosen generators.
    pub lower_bound: BigRational,
}

impl BracketPowerTrace {
    pub fn all_identities_hold(&self) -> bool {
        self.rows.iter().all(|r| r.identity_holds() && r.surjection_holds())
    }
}

/// Bracket powers over a one-dimensional base: for each q, the ideal
/// generated by the q-th powers of the chosen generators, with its length
/// computed both directly and by the q-fold component formula, the
/// surjection inequality against ordinary powers, and the quadratic scaling
/// of the lengths.
pub fn bracket_power_experiment(
    ideal: &TGradedIdeal,
    choice: &[ChosenGenerator],
    q_list: &[u64],
) -> Result<BracketPowerTrace> {
    let base = ideal.base().clone();
    if base.dim() != 1 {
        return Err(Error::DimensionUnsupported {
            found: base.dim(),
            reason: "bracket powers are defined over one-dimensional bases".into(),
        });
    }
    let k = ideal.k();
    let t_top: Vec<&ChosenGenerator> =
        choice.iter().filter(|c| c.level == k).collect();
    if t_top.len() != 1 || !t_top[0].exponent.is_zero() {
        return Err(Error::BadGeneratorChoice(format!(
            "the choice must contain exactly the generator T^{k}"
        )));
    }
    for c in choice {
        if c.level > k {
            return Err(Error::BadGeneratorChoice(format!(
                "level {} exceeds K = {k}",
                c.level
            )));
        }
        if c.level < k && c.exponent.is_zero() {
            return Err(Error::BadGeneratorChoice(
                "a unit generator below level K is not allowed".into(),
            ));
        }
    }
    // The choice must generate the ideal, component by component.
    for i in 0..k {
        let gens = choice
            .iter()
            .filter(|c| c.level <= i && c.level < k)
            .map(|c| c.exponent.clone());
        let generated = MonomialIdeal::new(base.clone(), gens)?;
        if generated != ideal.components()[i] {
            return Err(Error::BadGeneratorChoice(format!(
                "the generators at levels <= {i} span ({}) instead of ({})",
                generated.describe(),
                ideal.components()[i].describe()
            )));
        }
    }

    let n = choice.len() as u64;
    debug_assert!(n >= 2);
    let denom = 2 * n - 3;

    let mut rows = Vec::new();
    for &q in q_list {
        if q == 0 {
            return Err(Error::InvalidArgument("q must be positive".into()));
        }
        // Component i of the bracket power, for the q-block starting at iq.
        let mut block_ideals = Vec::with_capacity(k);
        for i in 0..k {
            let gens = choice
                .iter()
                .filter(|c| c.level <= i && c.level < k)
                .map(|c| c.exponent.scale(q as i64));
            block_ideals.push(MonomialIdeal::new(base.clone(), gens)?);
        }
        let mut components = Vec::with_capacity(k * q as usize);
        for t in 0..k as u64 * q {
            components.push(block_ideals[(t / q) as usize].clone());
        }
        let bracket = TGradedIdeal::new(base.clone(), components)?;
        let length = bracket.t_length()?;

        let mut by_formula = 0u64;
        for b in &block_ideals {
            by_formula += b.colength()?;
        }
        by_formula *= q;

        let s = q.div_ceil(denom);
        let big = ideal.t_power(q + s)?.t_length()? as i128;
        let small = ideal.t_power(s)?.t_length()? as i128;
        let surjection_rhs = big - 2 * (n as i128 - 1) * small;

        rows.push(BracketQRow {
            q,
            length,
            length_by_formula: by_formula,
            s,
            surjection_rhs,
            ratio: BigRational::new(BigInt::from(length), BigInt::from(q * q)),
        });
    }

    let largest = rows
        .iter()
        .max_by_key(|r| r.q)
        .ok_or_else(|| Error::InvalidArgument("no q values given".into()))?;
    let limit_estimate = largest.ratio.clone();

    let mut target = 0u64;
    for c in ideal.components() {
        target += multiplicity_auto(c)?;
    }
    let e_value = ideal.t_multiplicity(crate::multiplicity::default_n_max(2))?;
    let lower_bound = BigRational::new(BigInt::from(e_value), BigInt::from(2u64))
        * BigRational::new(BigInt::from(denom + 1), BigInt::from(denom));

    Ok(BracketPowerTrace {
        generators: choice.to_vec(),
        q_values: rows.iter().map(|r| r.q).collect(),
        lengths: rows.iter().map(|r| r.length).collect(),
        rows,
        limit_estimate,
        target,
        e_value,
        lower_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::new(v.to_vec()).unwrap()
    }

    fn poly(d: usize) -> AmbientRing {
        AmbientRing::polynomial(d).unwrap()
    }

    fn ideal(ring: &AmbientRing, gens: &[&[i64]]) -> MonomialIdeal {
        MonomialIdeal::new(ring.clone(), gens.iter().map(|g| ev(g))).unwrap()
    }

    /// J = (x^2) + (x)T + T^2 over k[x].
    fn running_example() -> TGradedIdeal {
        let r = poly(1);
        TGradedIdeal::new(
            r.clone(),
            vec![ideal(&r, &[&[2]]), ideal(&r, &[&[1]])],
        )
        .unwrap()
    }

    #[test]
    fn lengths_of_small_chains() {
        let r = poly(2);
        let m = r.maximal_ideal();
        let i = TGradedIdeal::new(r.clone(), vec![m.clone(), m.clone()]).unwrap();
        assert_eq!(i.t_length().unwrap(), 2);

        assert_eq!(running_example().t_length().unwrap(), 3);

        let s = TGradedIdeal::new(r.clone(), vec![ideal(&r, &[&[3, 0], &[1, 1], &[0, 3]])])
            .unwrap();
        assert_eq!(s.t_length().unwrap(), 5);
    }

    #[test]
    fn chain_validation() {
        let r = poly(2);
        let m = r.maximal_ideal();
        let m2 = m.power(2).unwrap();
        assert!(TGradedIdeal::new(r.clone(), vec![m2.clone(), m.clone()]).is_ok());
        // Descending chains are rejected.
        let err = TGradedIdeal::new(r.clone(), vec![m.clone(), m2.clone()]).unwrap_err();
        assert!(matches!(err, Error::InvalidArgument(_)));
        let err = TGradedIdeal::new(r.clone(), vec![m2.clone(), ideal(&r, &[&[5, 0], &[0, 5]])])
            .unwrap_err();
        assert!(matches!(err, Error::InvalidArgument(_)));
        // Unit tail is rejected.
        let err =
            TGradedIdeal::new(r.clone(), vec![m, MonomialIdeal::unit(r.clone())]).unwrap_err();
        assert!(matches!(err, Error::UnitIdeal));
    }

    #[test]
    fn square_of_maximal_plus_t() {
        let r = poly(2);
        let m = r.maximal_ideal();
        let i = TGradedIdeal::new(r.clone(), vec![m.clone()]).unwrap();
        let sq = i.t_power(2).unwrap();
        assert_eq!(sq.k(), 2);
        assert_eq!(sq.components()[0], m.power(2).unwrap());
        assert_eq!(sq.components()[1], m);
    }

    #[test]
    fn product_of_two_principal_chains() {
        let r = poly(2);
        let a = ideal(&r, &[&[2, 0], &[0, 2]]);
        let b = ideal(&r, &[&[3, 0], &[0, 3]]);
        let i = TGradedIdeal::new(r.clone(), vec![a.clone()]).unwrap();
        let j = TGradedIdeal::new(r.clone(), vec![b.clone()]).unwrap();
        let p = i.t_product(&j).unwrap();
        // (I_0 + T)(J_0 + T) = I_0 J_0 + (I_0 + J_0) T + T^2.
        assert_eq!(p.k(), 2);
        assert_eq!(p.components()[0], a.product(&b).unwrap());
        assert_eq!(p.components()[1], a.sum(&b).unwrap());
    }

    #[test]
    fn power_of_the_running_example() {
        let r = poly(1);
        let sq = running_example().t_power(2).unwrap();
        assert_eq!(sq.k(), 4);
        let expected: Vec<MonomialIdeal> = [4, 3, 2, 1]
            .iter()
            .map(|&a| ideal(&r, &[&[a]]))
            .collect();
        assert_eq!(sq.components(), &expected[..]);
    }

    #[test]
    fn min_gens_counts_and_bound() {
        let report = running_example().t_min_gens().unwrap();
        assert_eq!(report.mu, 3);
        assert_eq!(report.bound, 3);
        assert!(report.holds());

        let r = poly(2);
        let m = r.maximal_ideal();
        let i = TGradedIdeal::new(r.clone(), vec![m.clone()]).unwrap();
        let report = i.t_min_gens().unwrap();
        assert_eq!(report.mu, 3);
        assert_eq!(report.bound, 3);

        let m2 = m.power(2).unwrap();
        let j = TGradedIdeal::new(r.clone(), vec![m2.clone(), m2]).unwrap();
        let report = j.t_min_gens().unwrap();
        assert_eq!(report.mu, 4);
        assert_eq!(report.bound, 6);
    }

    #[test]
    fn product_commutes_with_flattening() {
        // Convolution in the chain model equals the plain monomial product
        // in the model with the grading variable adjoined.
        let r = poly(2);
        let m = r.maximal_ideal();
        let a = TGradedIdeal::new(
            r.clone(),
            vec![ideal(&r, &[&[2, 0], &[0, 2]]), m.clone()],
        )
        .unwrap();
        let b = TGradedIdeal::new(r.clone(), vec![m.power(2).unwrap()]).unwrap();
        let product = a.t_product(&b).unwrap();
        assert_eq!(
            product.flatten().unwrap(),
            a.flatten().unwrap().product(&b.flatten().unwrap()).unwrap()
        );
        assert_eq!(
            product.t_length().unwrap(),
            product.flatten().unwrap().colength().unwrap()
        );
    }

    #[test]
    fn min_gens_matches_the_flattened_model() {
        let r = poly(2);
        let m = r.maximal_ideal();
        for chain in [
            vec![m.power(2).unwrap(), m.clone()],
            vec![m.power(3).unwrap(), m.power(2).unwrap(), m.clone()],
            vec![ideal(&r, &[&[3, 0], &[1, 1], &[0, 3]]), m.clone()],
        ] {
            let i = TGradedIdeal::new(r.clone(), chain).unwrap();
            let direct = i.t_min_gens().unwrap().mu;
            let flat = i.flatten().unwrap().min_gens_count().unwrap() as u64;
            assert_eq!(direct, flat);
        }
    }

    #[test]
    fn multiplicities_of_small_chains() {
        let r = poly(2);
        let m = r.maximal_ideal();
        let i = TGradedIdeal::new(r.clone(), vec![m.clone()]).unwrap();
        assert_eq!(i.t_multiplicity(8).unwrap(), 1);

        let j = TGradedIdeal::new(r.clone(), vec![m.clone(), m.clone()]).unwrap();
        assert_eq!(j.t_multiplicity(8).unwrap(), 2);

        assert_eq!(running_example().t_multiplicity(12).unwrap(), 4);
    }

    #[test]
    fn t_multiplicity_agrees_with_the_flattened_oracle() {
        let r = poly(1);
        let i = running_example();
        let flat = i.flatten().unwrap();
        assert_eq!(
            i.t_multiplicity(12).unwrap(),
            crate::multiplicity::multiplicity(&flat, 12).unwrap()
        );
        let m = r.maximal_ideal();
        let j = TGradedIdeal::new(r.clone(), vec![m.clone(), m]).unwrap();
        assert_eq!(
            j.t_multiplicity(12).unwrap(),
            crate::multiplicity::multiplicity(&j.flatten().unwrap(), 12).unwrap()
        );
    }

    #[test]
    fn double_graded_bookkeeping() {
        let r = poly(2);
        let m = r.maximal_ideal();
        let i = TGradedIdeal::new(r.clone(), vec![m.clone()]).unwrap();
        let report = double_graded_check(&i, 8).unwrap();
        assert!(report.holds());
        assert_eq!(report.t_length, 1);

        let report = double_graded_check(&running_example(), 12).unwrap();
        assert!(report.holds());
        assert_eq!(report.t_length, 3);
        assert_eq!(report.component_lengths, vec![2, 1]);

        // Componentwise closure: level 0 gains x*y, e is unchanged.
        let open = TGradedIdeal::new(
            r.clone(),
            vec![ideal(&r, &[&[2, 0], &[0, 2]]), m.clone()],
        )
        .unwrap();
        let report = double_graded_check(&open, 8).unwrap();
        assert!(report.holds());
        assert!(report.closure_t_length < report.t_length);
        assert_eq!(report.e_value, report.closure_e_value);
    }

    #[test]
    fn mumford_chain_on_hand_checked_cases() {
        let r = poly(2);
        let m = r.maximal_ideal();
        let i = TGradedIdeal::new(r.clone(), vec![m.clone(), m.clone()]).unwrap();
        let report = mumford_chain_check(&i, 8).unwrap();
        assert!(report.holds());
        assert_eq!(
            report.lhs,
            BigRational::new(BigInt::from(2), BigInt::from(12))
        );
        assert_eq!(
            report.mid,
            BigRational::new(BigInt::from(1), BigInt::from(2))
        );
        assert_eq!(
            report.rhs,
            BigRational::new(BigInt::from(1), BigInt::from(2))
        );

        let j = TGradedIdeal::new(r.clone(), vec![m.power(2).unwrap(), m.clone()]).unwrap();
        assert!(mumford_chain_check(&j, 8).unwrap().holds());

        // K = 1: the middle and right terms coincide.
        let single =
            TGradedIdeal::new(r.clone(), vec![ideal(&r, &[&[3, 0], &[1, 1], &[0, 3]])]).unwrap();
        let report = mumford_chain_check(&single, 8).unwrap();
        assert_eq!(report.mid, report.rhs);
        assert!(report.holds());
    }

    #[test]
    fn mumford_chain_over_a_semigroup_base() {
        let v = AmbientRing::semigroup(vec![ev(&[2, 0]), ev(&[1, 1]), ev(&[0, 2])]).unwrap();
        let m = v.maximal_ideal();
        let chain =
            TGradedIdeal::new(v.clone(), vec![m.power(2).unwrap(), m.clone()]).unwrap();
        let report = mumford_chain_check(&chain, 9).unwrap();
        assert!(report.holds(), "{} <= {} <= {}", report.lhs, report.mid, report.rhs);
        assert_eq!(
            chain.t_length().unwrap(),
            chain.flatten().unwrap().colength().unwrap()
        );
    }

    fn running_choice() -> Vec<ChosenGenerator> {
        vec![
            ChosenGenerator { exponent: ev(&[2]), level: 0 },
            ChosenGenerator { exponent: ev(&[1]), level: 1 },
            ChosenGenerator { exponent: ev(&[0]), level: 2 },
        ]
    }

    #[test]
    fn bracket_powers_of_the_running_example() {
        let trace =
            bracket_power_experiment(&running_example(), &running_choice(), &[2, 4, 8]).unwrap();
        assert!(trace.all_identities_hold());
        for row in &trace.rows {
            assert_eq!(row.length, 3 * row.q * row.q);
        }
        assert_eq!(trace.target, 3); // e((x^2)) + e((x)) = 2 + 1
        assert_eq!(trace.e_value, 4);
        assert_eq!(
            trace.limit_estimate,
            BigRational::new(BigInt::from(3), BigInt::from(1))
        );
        assert_eq!(
            trace.lower_bound,
            BigRational::new(BigInt::from(8), BigInt::from(3))
        );
        assert!(trace.lower_bound <= trace.limit_estimate);
    }

    #[test]
    fn bracket_rejects_bad_choices() {
        let j = running_example();
        // Missing T^K.
        let err = bracket_power_experiment(
            &j,
            &[
                ChosenGenerator { exponent: ev(&[2]), level: 0 },
                ChosenGenerator { exponent: ev(&[1]), level: 1 },
            ],
            &[2],
        )
        .unwrap_err();
        assert!(matches!(err, Error::BadGeneratorChoice(_)));

        // Wrong span at level 0.
        let err = bracket_power_experiment(
            &j,
            &[
                ChosenGenerator { exponent: ev(&[3]), level: 0 },
                ChosenGenerator { exponent: ev(&[1]), level: 1 },
                ChosenGenerator { exponent: ev(&[0]), level: 2 },
            ],
            &[2],
        )
        .unwrap_err();
        assert!(matches!(err, Error::BadGeneratorChoice(_)));

        // Two-dimensional bases are not supported.
        let r = poly(2);
        let m = r.maximal_ideal();
        let i = TGradedIdeal::new(r.clone(), vec![m]).unwrap();
        let err = bracket_power_experiment(
            &i,
            &[ChosenGenerator { exponent: ev(&[0, 0]), level: 1 }],
            &[2],
        )
        .unwrap_err();
        assert!(matches!(err, Error::DimensionUnsupported { .. }));
    }

    #[test]
    fn bracket_over_a_scaled_base() {
        // Base 2N: components ((4)) and ((2)) with minimal-order generators.
        let r = AmbientRing::semigroup(vec![ev(&[2])]).unwrap();
        let j = TGradedIdeal::new(
            r.clone(),
            vec![ideal(&r, &[&[4]]), ideal(&r, &[&[2]])],
        )
        .unwrap();
        let choice = vec![
            ChosenGenerator { exponent: ev(&[4]), level: 0 },
            ChosenGenerator { exponent: ev(&[2]), level: 1 },
            ChosenGenerator { exponent: ev(&[0]), level: 2 },
        ];
        let trace = bracket_power_experiment(&j, &choice, &[2, 4]).unwrap();
        assert!(trace.all_identities_hold());
        assert_eq!(trace.target, 3);
    }

    #[test]
    fn describe_renders_the_chain() {
        assert_eq!(running_example().describe(), "(x^2) + (x)T + T^2");
    }
}
