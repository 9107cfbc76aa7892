//! Truncated formal power series in `x` and `q` with exact rational
//! coefficients, and the product and sum sides of the generating-function
//! identities built from them.
//!
//! Every series here has nonnegative exponents, so truncating factors before
//! multiplying never changes an in-range coefficient.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::enumerate::{
    ensure_rule_covers, for_each, visit_scaled_multisets, FamilyDescriptor, Slot,
};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::sequence::SequenceSpec;

/// Sparse truncated series: coefficients of `x^a q^b` for `a <= xtrunc`,
/// `b <= qtrunc`. Absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    xtrunc: usize,
    qtrunc: usize,
    coeffs: BTreeMap<(usize, usize), BigRational>,
}

impl BivariateSeries {
    pub fn zero(xtrunc: usize, qtrunc: usize) -> Self {
        BivariateSeries { xtrunc, qtrunc, coeffs: BTreeMap::new() }
    }

    pub fn one(xtrunc: usize, qtrunc: usize) -> Self {
        let mut s = Self::zero(xtrunc, qtrunc);
        s.add_term(0, 0, BigRational::one());
        s
    }

    pub fn xtrunc(&self) -> usize {
        self.xtrunc
    }

    pub fn qtrunc(&self) -> usize {
        self.qtrunc
    }

    pub fn coeff(&self, xexp: usize, qexp: usize) -> BigRational {
        self.coeffs.get(&(xexp, qexp)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero coefficients ordered by `(x exponent, q exponent)`.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &BigRational)> {
        self.coeffs.iter().map(|(&k, v)| (k, v))
    }

    /// Adds `c x^a q^b`; out-of-range terms are discarded.
    pub fn add_term(&mut self, xexp: usize, qexp: usize, c: BigRational) {
        if xexp > self.xtrunc || qexp > self.qtrunc || c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry((xexp, qexp)).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&(xexp, qexp));
        }
    }

    fn check_bounds(&self, other: &Self) -> Result<()> {
        if self.xtrunc != other.xtrunc || self.qtrunc != other.qtrunc {
            return Err(Error::BoundsMismatch(format!(
                "(x^{}, q^{}) vs (x^{}, q^{})",
                self.xtrunc, self.qtrunc, other.xtrunc, other.qtrunc
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let mut out = self.clone();
        for ((a, b), c) in other.terms() {
            out.add_term(a, b, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let mut out = self.clone();
        for ((a, b), c) in other.terms() {
            out.add_term(a, b, -c.clone());
        }
        Ok(out)
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let mut out = Self::zero(self.xtrunc, self.qtrunc);
        for (&(a1, b1), c1) in &self.coeffs {
            for (&(a2, b2), c2) in &other.coeffs {
                if a1 + a2 <= self.xtrunc && b1 + b2 <= self.qtrunc {
                    out.add_term(a1 + a2, b1 + b2, c1 * c2);
                }
            }
        }
        Ok(out)
    }

    fn dense(&self) -> Vec<Vec<BigRational>> {
        let mut grid = vec![vec![BigRational::zero(); self.qtrunc + 1]; self.xtrunc + 1];
        for (&(a, b), c) in &self.coeffs {
            grid[a][b] = c.clone();
        }
        grid
    }

    fn from_dense(xtrunc: usize, qtrunc: usize, grid: Vec<Vec<BigRational>>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (a, row) in grid.into_iter().enumerate() {
            for (b, c) in row.into_iter().enumerate() {
                if !c.is_zero() {
                    coeffs.insert((a, b), c);
                }
            }
        }
        BivariateSeries { xtrunc, qtrunc, coeffs }
    }

    /// Multiplies in place by `(1 - c x^a q^b)^{-1}`, using
    /// `g[i][j] = f[i][j] + c g[i-a][j-b]`. Needs `a + b > 0`.
    pub(crate) fn mul_geometric_in_place(&mut self, c: &BigRational, a: usize, b: usize) {
        assert!(a + b > 0, "geometric factor needs a positive exponent");
        if c.is_zero() || a > self.xtrunc || b > self.qtrunc {
            return;
        }
        let mut g = self.dense();
        for i in a..=self.xtrunc {
            for j in b..=self.qtrunc {
                if !g[i - a][j - b].is_zero() {
                    let add = c * &g[i - a][j - b];
                    g[i][j] += add;
                }
            }
        }
        *self = Self::from_dense(self.xtrunc, self.qtrunc, g);
    }

    /// Multiplies in place by `(1 + c x^a q^b)`.
    pub(crate) fn mul_binomial_in_place(&mut self, c: &BigRational, a: usize, b: usize) {
        if c.is_zero() || a > self.xtrunc || b > self.qtrunc {
            return;
        }
        let shifted: Vec<_> = self
            .coeffs
            .iter()
            .filter(|(&(i, j), _)| i + a <= self.xtrunc && j + b <= self.qtrunc)
            .map(|(&(i, j), v)| (i + a, j + b, c * v))
            .collect();
        for (i, j, v) in shifted {
            self.add_term(i, j, v);
        }
    }
}

impl fmt::Display for BivariateSeries {
    /// One line per nonzero coefficient: `x^a q^b: c`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (&(a, b), c) in &self.coeffs {
            writeln!(f, "x^{a} q^{b}: {c}")?;
        }
        Ok(())
    }
}

/// `Σ_{k>=0} c^k x^{ka} q^{kb}`, i.e. `(1 - c x^a q^b)^{-1}`, truncated.
pub fn geometric_factor(
    c: &BigRational,
    a: usize,
    b: usize,
    xtrunc: usize,
    qtrunc: usize,
) -> Result<BivariateSeries> {
    if b == 0 {
        return Err(Error::InvalidExponent("q exponent of a geometric factor must be at least 1".into()));
    }
    let mut s = BivariateSeries::zero(xtrunc, qtrunc);
    let mut power = BigRational::one();
    let mut k = 0usize;
    while k * a <= xtrunc && k * b <= qtrunc {
        s.add_term(k * a, k * b, power.clone());
        power *= c;
        if power.is_zero() {
            break;
        }
        k += 1;
    }
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightKind {
    /// `f(n)` for `n = 1..=len`.
    Table(Vec<BigRational>),
    ConstantOne,
    /// `f(n) = 1` when `n` is in the set, else 0.
    Indicator(BTreeSet<u64>),
}

/// A rational-valued weight function `f` on the positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpec {
    kind: WeightKind,
}

impl WeightSpec {
    pub fn table(values: Vec<BigRational>) -> Self {
        WeightSpec { kind: WeightKind::Table(values) }
    }

    pub fn one() -> Self {
        WeightSpec { kind: WeightKind::ConstantOne }
    }

    pub fn indicator(set: BTreeSet<u64>) -> Self {
        WeightSpec { kind: WeightKind::Indicator(set) }
    }

    /// Seeded table of `extent` rationals `p/q` with `|p| <= 5`, `1 <= q <= 4`.
    pub fn random(seed: u64, extent: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values = (0..extent)
            .map(|_| {
                let num: i64 = rng.gen_range(-5..=5);
                let den: i64 = rng.gen_range(1..=4);
                BigRational::new(BigInt::from(num), BigInt::from(den))
            })
            .collect();
        Self::table(values)
    }

    pub fn kind(&self) -> &WeightKind {
        &self.kind
    }

    /// Largest argument at which `f` is defined.
    pub fn extent(&self) -> u64 {
        match &self.kind {
            WeightKind::Table(v) => v.len() as u64,
            _ => u64::MAX,
        }
    }

    pub fn eval(&self, n: u64) -> Result<BigRational> {
        if n == 0 || n > self.extent() {
            return Err(Error::ExtentExceeded(format!(
                "weight queried at {n}, defined on 1..={}",
                self.extent()
            )));
        }
        Ok(match &self.kind {
            WeightKind::Table(v) => v[n as usize - 1].clone(),
            WeightKind::ConstantOne => BigRational::one(),
            WeightKind::Indicator(s) => {
                if s.contains(&n) {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }
        })
    }

    fn require(&self, n: u64) -> Result<()> {
        if n > self.extent() {
            return Err(Error::ExtentExceeded(format!(
                "weight must be defined up to {n}, defined on 1..={}",
                self.extent()
            )));
        }
        Ok(())
    }
}

/// `∏_{n=1}^{N} (1 - f(n) q^n)^{-1}` truncated at `q^N` (no `x`).
pub fn product_side(f: &WeightSpec, qtrunc: usize) -> Result<BivariateSeries> {
    f.require(qtrunc as u64)?;
    let mut s = BivariateSeries::one(0, qtrunc);
    for n in 1..=qtrunc {
        s.mul_geometric_in_place(&f.eval(n as u64)?, 0, n);
    }
    Ok(s)
}

/// `Σ_{λ} q^{|λ|} ∏ f(i)^{m_i}` over all partitions of size at most `N`.
pub fn partition_sum_side(f: &WeightSpec, qtrunc: usize, max_items: u64) -> Result<BivariateSeries> {
    f.require(qtrunc as u64)?;
    let mut s = BivariateSeries::zero(0, qtrunc);
    for n in 0..=qtrunc {
        let mut total = BigRational::zero();
        let mut failure = None;
        for_each(&FamilyDescriptor::All { n: n as u64 }, max_items, |lambda| {
            match frequency_weight(f, &lambda) {
                Ok(w) => total += w,
                Err(e) => failure = Some(e),
            }
        })?;
        if let Some(e) = failure {
            return Err(e);
        }
        s.add_term(0, n, total);
    }
    Ok(s)
}

fn frequency_weight(f: &WeightSpec, lambda: &Partition) -> Result<BigRational> {
    let mut w = BigRational::one();
    for (part, mult) in lambda.frequencies().iter() {
        w *= pow(&f.eval(part)?, mult);
    }
    Ok(w)
}

fn pow(base: &BigRational, exp: u64) -> BigRational {
    num_traits::pow(base.clone(), exp as usize)
}

/// `Σ_{φ ∈ S} q^{lg φ} ∏ f(i)^{(φ_i - φ_{i+1})/i}` over sequentially
/// congruent `φ` with largest part at most `N`.
pub fn seqcong_sum_side(f: &WeightSpec, qtrunc: usize, max_items: u64) -> Result<BivariateSeries> {
    f.require(qtrunc as u64)?;
    let mut s = BivariateSeries::zero(0, qtrunc);
    for n in 0..=qtrunc {
        let mut total = BigRational::zero();
        let mut failure = None;
        for_each(&FamilyDescriptor::SeqCong { largest: n as u64 }, max_items, |phi| {
            match seqcong_weight(f, &phi) {
                Ok(w) => total += w,
                Err(e) => failure = Some(e),
            }
        })?;
        if let Some(e) = failure {
            return Err(e);
        }
        s.add_term(0, n, total);
    }
    Ok(s)
}

fn seqcong_weight(f: &WeightSpec, phi: &Partition) -> Result<BigRational> {
    let mut w = BigRational::one();
    for i in 1..=phi.length() {
        let exp = (phi.part_at(i) - phi.part_at(i + 1)) / i as u64;
        if exp > 0 {
            w *= pow(&f.eval(i as u64)?, exp);
        }
    }
    Ok(w)
}

/// Number of index pairs `(a_n, b_n)` shared by the two sequences.
///
/// Two tables must have equal length; a table paired with a rule fixes the
/// length and the rule's extent must reach it; two rules use the smaller
/// extent, which must leave no contributing factor `a_n <= M`,
/// `a_n b_n <= N` just past it.
fn paired_extent(a: &SequenceSpec, b: &SequenceSpec, xtrunc: usize, qtrunc: usize) -> Result<usize> {
    match (a.is_rule(), b.is_rule()) {
        (false, false) => {
            if a.extent() != b.extent() {
                return Err(Error::ExtentExceeded(format!(
                    "tables {a} and {b} have different lengths"
                )));
            }
            Ok(a.extent())
        }
        (false, true) | (true, false) => {
            let (table, rule) = if a.is_rule() { (b, a) } else { (a, b) };
            if rule.extent() < table.extent() {
                return Err(Error::ExtentExceeded(format!(
                    "{rule} does not reach the length {} of {table}",
                    table.extent()
                )));
            }
            Ok(table.extent())
        }
        (true, true) => {
            let k = a.extent().min(b.extent());
            let an = a.rule_term(k + 1).expect("rule");
            let bn = b.rule_term(k + 1).expect("rule");
            if an as usize <= xtrunc && (an * bn) as usize <= qtrunc {
                return Err(Error::ExtentExceeded(format!(
                    "index {} of {a}, {b} still contributes x^{an} q^{}",
                    k + 1,
                    an * bn
                )));
            }
            Ok(k)
        }
    }
}

fn paired_slots(a: &SequenceSpec, b: &SequenceSpec, k: usize) -> Result<Vec<Slot>> {
    let slots: Vec<Slot> = (1..=k)
        .map(|i| Ok(Slot { part: b.term(i)?, step: a.term(i)? }))
        .collect::<Result<_>>()?;
    let distinct: BTreeSet<u64> = slots.iter().map(|s| s.part).collect();
    if distinct.len() != slots.len() {
        return Err(Error::NonDistinct(format!("terms of {b} repeat")));
    }
    Ok(slots)
}

/// `∏_n (1 - x^{a_n} q^{a_n b_n})^{-1}` truncated at `x^M q^N`.
pub fn two_var_product_side(
    a: &SequenceSpec,
    b: &SequenceSpec,
    xtrunc: usize,
    qtrunc: usize,
) -> Result<BivariateSeries> {
    let k = paired_extent(a, b, xtrunc, qtrunc)?;
    let mut s = BivariateSeries::one(xtrunc, qtrunc);
    let one = BigRational::one();
    for n in 1..=k {
        let an = a.term(n)? as usize;
        let bn = b.term(n)? as usize;
        s.mul_geometric_in_place(&one, an, an * bn);
    }
    Ok(s)
}

/// `Σ_{λ ∈ P_B(A)} x^{ℓ(λ)} q^{|λ|}` by enumerating members with
/// `ℓ(λ) <= M` and `|λ| <= N`.
pub fn pba_sum_side(
    a: &SequenceSpec,
    b: &SequenceSpec,
    xtrunc: usize,
    qtrunc: usize,
    max_items: u64,
) -> Result<BivariateSeries> {
    let k = paired_extent(a, b, xtrunc, qtrunc)?;
    let slots = paired_slots(a, b, k)?;
    let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    visit_scaled_multisets(
        &slots,
        Some(qtrunc as u64),
        Some(xtrunc as u64),
        max_items,
        &mut |_, size, len| *counts.entry((len as usize, size as usize)).or_insert(0) += 1,
    )?;
    let mut s = BivariateSeries::zero(xtrunc, qtrunc);
    for ((len, size), c) in counts {
        s.add_term(len, size, BigRational::from_integer(BigInt::from(c)));
    }
    Ok(s)
}

/// `∏_{n ∈ A} (1 - x^n)^{-1}` truncated at `x^M`, a series in `x` alone
/// (stored with `qtrunc = 0`). Its coefficients are `p_A(n)`.
pub fn euler_limit_side(a: &SequenceSpec, xtrunc: usize) -> Result<BivariateSeries> {
    a.check_distinct()?;
    ensure_rule_covers(a, xtrunc as u64)?;
    let mut s = BivariateSeries::one(xtrunc, 0);
    let one = BigRational::one();
    for t in a.terms() {
        s.mul_geometric_in_place(&one, t as usize, 0);
    }
    Ok(s)
}

/// `∏_{n=1}^{N} (1 + q^n)` truncated at `q^N`.
pub fn distinct_product_side(qtrunc: usize) -> BivariateSeries {
    let mut s = BivariateSeries::one(0, qtrunc);
    let one = BigRational::one();
    for n in 1..=qtrunc {
        s.mul_binomial_in_place(&one, 0, n);
    }
    s
}

/// `Σ q^{lg φ}` over sequentially congruent `φ` whose steps are all 0 or `i`.
pub fn step_bounded_sum_side(qtrunc: usize, max_items: u64) -> Result<BivariateSeries> {
    let mut s = BivariateSeries::zero(0, qtrunc);
    for n in 0..=qtrunc {
        let c = crate::enumerate::count_with_cap(&FamilyDescriptor::StepBounded { largest: n as u64 }, max_items)?;
        s.add_term(0, n, BigRational::from_integer(BigInt::from(c)));
    }
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub xexp: usize,
    pub qexp: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub equal: bool,
    pub xtrunc: usize,
    pub qtrunc: usize,
    /// First differing coefficient in `(x exponent, q exponent)` order.
    pub first_mismatch: Option<Mismatch>,
}

pub fn compare(lhs: &BivariateSeries, rhs: &BivariateSeries) -> Result<Comparison> {
    lhs.check_bounds(rhs)?;
    let keys: BTreeSet<(usize, usize)> =
        lhs.coeffs.keys().chain(rhs.coeffs.keys()).copied().collect();
    let first_mismatch = keys.into_iter().find_map(|(a, b)| {
        let (l, r) = (lhs.coeff(a, b), rhs.coeff(a, b));
        (l != r).then(|| Mismatch { xexp: a, qexp: b, lhs: l.to_string(), rhs: r.to_string() })
    });
    Ok(Comparison {
        equal: first_mismatch.is_none(),
        xtrunc: lhs.xtrunc,
        qtrunc: lhs.qtrunc,
        first_mismatch,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZetaApproximation {
    /// Partial sum over `λ ∈ P_T` with `|λ| <= depth`.
    pub sum_side: f64,
    /// `∏_{n ∈ T} (1 - n^{-s})^{-1}`.
    pub product_side: f64,
    pub sum_decimal: String,
    pub product_decimal: String,
    pub depth: u64,
    pub terms: u64,
    /// Whether both sides were computed in exact rational arithmetic
    /// (integer `s`) before rounding.
    pub exact: bool,
}

pub const ZETA_PLACES: usize = 12;

/// Partition zeta function `Σ_{λ ∈ P_T} N(λ)^{-s}` truncated at size `depth`,
/// alongside its Euler product, where `N(λ)` is the product of the parts.
pub fn partition_zeta(
    parts: &[u64],
    s: &BigRational,
    depth: u64,
    max_items: u64,
) -> Result<ZetaApproximation> {
    if parts.iter().any(|&t| t <= 1) {
        return Err(Error::DivergentParameters("part set must exclude 0 and 1".into()));
    }
    if *s <= BigRational::one() {
        return Err(Error::DivergentParameters(format!("s = {s} must exceed 1")));
    }
    let set: BTreeSet<u64> = parts.iter().copied().collect();
    let slots: Vec<Slot> = set.iter().rev().map(|&t| Slot { part: t, step: 1 }).collect();
    let integer_s = s.is_integer().then(|| s.to_integer().to_u64()).flatten();

    let mut terms = 0u64;
    if let Some(k) = integer_s {
        let mut sum = BigRational::zero();
        visit_scaled_multisets(&slots, Some(depth), None, max_items, &mut |fv, _, _| {
            let mut norm = BigInt::one();
            for (part, mult) in fv.iter() {
                norm *= num_traits::pow(BigInt::from(part), mult as usize);
            }
            sum += BigRational::new(BigInt::one(), num_traits::pow(norm, k as usize));
            terms += 1;
        })?;
        let mut product = BigRational::one();
        for &t in &set {
            let inv = BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(t), k as usize));
            product /= BigRational::one() - inv;
        }
        Ok(ZetaApproximation {
            sum_side: rational_to_f64(&sum),
            product_side: rational_to_f64(&product),
            sum_decimal: format_decimal(&sum, ZETA_PLACES),
            product_decimal: format_decimal(&product, ZETA_PLACES),
            depth,
            terms,
            exact: true,
        })
    } else {
        let sf = rational_to_f64(s);
        let mut sum = 0.0f64;
        visit_scaled_multisets(&slots, Some(depth), None, max_items, &mut |fv, _, _| {
            let log_norm: f64 = fv.iter().map(|(p, m)| m as f64 * (p as f64).ln()).sum();
            sum += (-sf * log_norm).exp();
            terms += 1;
        })?;
        let product: f64 = set.iter().map(|&t| 1.0 / (1.0 - (t as f64).powf(-sf))).product();
        Ok(ZetaApproximation {
            sum_side: sum,
            product_side: product,
            sum_decimal: format!("{sum:.prec$}", prec = ZETA_PLACES),
            product_decimal: format!("{product:.prec$}", prec = ZETA_PLACES),
            depth,
            terms,
            exact: false,
        })
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Decimal expansion rounded half away from zero to `places` digits.
pub fn format_decimal(r: &BigRational, places: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), places);
    let scaled = r.abs() * BigRational::from_integer(scale.clone());
    let rounded = (scaled + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer();
    let int_part = &rounded / &scale;
    let frac_part = &rounded % &scale;
    let sign = if r.is_negative() && !rounded.is_zero() { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{int_part}");
    }
    format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = places)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn int(n: i64) -> BigRational {
        q(n, 1)
    }

    fn q_coeffs(s: &BivariateSeries) -> Vec<BigRational> {
        (0..=s.qtrunc()).map(|b| s.coeff(0, b)).collect()
    }

    #[test]
    fn geometric_examples() {
        let s = geometric_factor(&int(1), 0, 1, 0, 3).unwrap();
        assert_eq!(q_coeffs(&s), vec![int(1); 4]);

        let s = geometric_factor(&int(1), 2, 4, 4, 8).unwrap();
        let terms: Vec<_> = s.terms().map(|(k, c)| (k, c.clone())).collect();
        assert_eq!(terms, vec![((0, 0), int(1)), ((2, 4), int(1)), ((4, 8), int(1))]);

        let s = geometric_factor(&int(0), 1, 1, 3, 3).unwrap();
        assert_eq!(s, BivariateSeries::one(3, 3));

        assert!(matches!(geometric_factor(&int(1), 1, 0, 3, 3), Err(Error::InvalidExponent(_))));
    }

    #[test]
    fn in_place_geometric_matches_cauchy_product() {
        let mut base = BivariateSeries::one(4, 9);
        base.add_term(1, 2, q(3, 2));
        base.add_term(0, 5, int(-2));
        let g = geometric_factor(&q(-2, 3), 1, 3, 4, 9).unwrap();
        let expected = base.mul(&g).unwrap();
        let mut got = base.clone();
        got.mul_geometric_in_place(&q(-2, 3), 1, 3);
        assert_eq!(got, expected);
    }

    #[test]
    fn geometric_times_its_inverse_is_one() {
        let g = geometric_factor(&q(5, 3), 2, 3, 6, 12).unwrap();
        let mut linear = BivariateSeries::one(6, 12);
        linear.add_term(2, 3, -q(5, 3));
        assert_eq!(g.mul(&linear).unwrap(), BivariateSeries::one(6, 12));
    }

    #[test]
    fn product_side_examples() {
        let s = product_side(&WeightSpec::one(), 5).unwrap();
        assert_eq!(q_coeffs(&s), [1, 1, 2, 3, 5, 7].map(int).to_vec());

        let f = WeightSpec::table(vec![int(2), int(3), int(1)]);
        assert_eq!(product_side(&f, 3).unwrap().coeff(0, 3), int(15));
        assert_eq!(product_side(&WeightSpec::one(), 0).unwrap(), BivariateSeries::one(0, 0));
        assert!(matches!(product_side(&f, 4), Err(Error::ExtentExceeded(_))));
    }

    #[test]
    fn sum_side_examples() {
        let f = WeightSpec::table(vec![int(2), int(3), int(1)]);
        assert_eq!(partition_sum_side(&f, 3, u64::MAX).unwrap().coeff(0, 3), int(15));
        assert_eq!(seqcong_sum_side(&f, 3, u64::MAX).unwrap().coeff(0, 3), int(15));
        assert_eq!(partition_sum_side(&f, 0, u64::MAX).unwrap(), BivariateSeries::one(0, 0));
        assert_eq!(seqcong_sum_side(&f, 0, u64::MAX).unwrap(), BivariateSeries::one(0, 0));
        let s = seqcong_sum_side(&WeightSpec::one(), 6, u64::MAX).unwrap();
        assert_eq!(q_coeffs(&s), [1, 1, 2, 3, 5, 7, 11].map(int).to_vec());
    }

    #[test]
    fn two_var_examples() {
        let a = SequenceSpec::table(vec![2, 3]).unwrap();
        let b = SequenceSpec::table(vec![5, 7]).unwrap();
        let lhs = two_var_product_side(&a, &b, 12, 50).unwrap();
        let rhs = pba_sum_side(&a, &b, 12, 50, u64::MAX).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(rhs.coeff(6, 30), int(1));
        assert_eq!(rhs.coeff(6, 42), int(1));

        let empty = SequenceSpec::table(vec![]).unwrap();
        assert_eq!(two_var_product_side(&empty, &empty, 3, 3).unwrap(), BivariateSeries::one(3, 3));
        assert_eq!(pba_sum_side(&a, &b, 0, 0, u64::MAX).unwrap(), BivariateSeries::one(0, 0));

        let short = SequenceSpec::naturals(3);
        assert!(matches!(
            two_var_product_side(&short, &short, 5, 20),
            Err(Error::ExtentExceeded(_))
        ));
    }

    #[test]
    fn euler_examples() {
        let s = euler_limit_side(&SequenceSpec::naturals(5), 5).unwrap();
        assert_eq!((0..=5).map(|n| s.coeff(n, 0)).collect::<Vec<_>>(), [1, 1, 2, 3, 5, 7].map(int).to_vec());
        let s = euler_limit_side(&SequenceSpec::table(vec![2, 3]).unwrap(), 6).unwrap();
        assert_eq!((0..=6).map(|n| s.coeff(n, 0)).collect::<Vec<_>>(), [1, 0, 1, 1, 1, 1, 2].map(int).to_vec());
        assert_eq!(euler_limit_side(&SequenceSpec::naturals(0), 0).unwrap(), BivariateSeries::one(0, 0));
        assert!(matches!(
            euler_limit_side(&SequenceSpec::table(vec![2, 2]).unwrap(), 4),
            Err(Error::NonDistinct(_))
        ));
    }

    #[test]
    fn compare_reports_first_mismatch() {
        let lhs = product_side(&WeightSpec::one(), 8).unwrap();
        let mut rhs = lhs.clone();
        assert!(compare(&lhs, &rhs).unwrap().equal);
        rhs.add_term(0, 6, int(1));
        let c = compare(&lhs, &rhs).unwrap();
        assert!(!c.equal);
        let m = c.first_mismatch.unwrap();
        assert_eq!((m.xexp, m.qexp), (0, 6));
        assert_eq!((m.lhs.as_str(), m.rhs.as_str()), ("11", "12"));
        assert!(matches!(
            compare(&lhs, &BivariateSeries::one(0, 7)),
            Err(Error::BoundsMismatch(_))
        ));
    }

    #[test]
    fn zeta_examples() {
        let z = partition_zeta(&[2], &int(2), 60, u64::MAX).unwrap();
        assert!(z.exact);
        assert!((z.product_side - 4.0 / 3.0).abs() < 1e-12);
        assert!((z.sum_side - 4.0 / 3.0).abs() < 1e-9);
        assert_eq!(z.product_decimal, "1.333333333333");

        let z = partition_zeta(&[2, 3], &int(2), 40, u64::MAX).unwrap();
        assert_eq!(z.product_decimal, "1.500000000000");
        assert!((z.sum_side - 1.5).abs() < 1e-3);

        let z = partition_zeta(&[2], &q(5, 2), 40, u64::MAX).unwrap();
        assert!(!z.exact);
        let expected = 1.0 / (1.0 - 2f64.powf(-2.5));
        assert!((z.product_side - expected).abs() < 1e-12);
        assert!((z.sum_side - expected).abs() < 1e-6);

        assert!(matches!(partition_zeta(&[2], &int(1), 10, u64::MAX), Err(Error::DivergentParameters(_))));
        assert!(matches!(partition_zeta(&[1, 2], &int(2), 10, u64::MAX), Err(Error::DivergentParameters(_))));
    }

    #[test]
    fn decimal_rounding() {
        assert_eq!(format_decimal(&q(4, 3), 3), "1.333");
        assert_eq!(format_decimal(&q(2, 3), 3), "0.667");
        assert_eq!(format_decimal(&q(-1, 8), 2), "-0.13");
        assert_eq!(format_decimal(&int(3), 0), "3");
    }
}
