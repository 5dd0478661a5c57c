//! Truncated multivariate series in `x_1..x_k` with [`YPoly`] coefficients,
//! and the generating series
//!
//! ```text
//! Q_k(x_1, ..., x_k, y) = Σ_{λ with k parts} P_λ(y) x^λ
//! ```
//!
//! Truncation is by total `x`-degree. Every factor that appears in the
//! recursion for `Q_k` has nonnegative `x`-degree, so a product of series
//! truncated at `N` is exact through degree `N`. Division by `1 - g` only
//! ever happens as multiplication by the truncated geometric series of `g`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{for_each_partition_up_to, Partition};
use crate::rankpoly::{interval_count, lower_ideal_poly};
use crate::ypoly::YPoly;

/// Sparse truncated series. Invariants: every key has length `nvars` and
/// total degree at most `trunc`; no zero coefficient is stored.
#[derive(Debug, Clone)]
pub struct MultiSeries {
    nvars: usize,
    trunc: u32,
    terms: HashMap<Vec<u32>, YPoly>,
}

fn degree(exps: &[u32]) -> u32 {
    exps.iter().sum()
}

impl MultiSeries {
    pub fn zero(nvars: usize, trunc: u32) -> Self {
        MultiSeries {
            nvars,
            trunc,
            terms: HashMap::new(),
        }
    }

    pub fn one(nvars: usize, trunc: u32) -> Self {
        Self::monomial(nvars, trunc, vec![0; nvars], YPoly::one())
    }

    /// `coeff * x^exps`, or zero when the degree exceeds `trunc`.
    pub fn monomial(nvars: usize, trunc: u32, exps: Vec<u32>, coeff: YPoly) -> Self {
        let mut s = Self::zero(nvars, trunc);
        s.add_term(exps, &coeff);
        s
    }

    /// `y^y_power * p_m` where `p_m = x_1 ... x_m`.
    pub fn p_monomial(nvars: usize, trunc: u32, m: usize, y_power: usize) -> Self {
        Self::monomial(nvars, trunc, p_exponents(nvars, m), YPoly::y_pow(y_power))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x^exps` (zero if absent).
    pub fn coeff(&self, exps: &[u32]) -> YPoly {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Adds `coeff * x^exps`, ignoring terms above the truncation order.
    pub fn add_term(&mut self, exps: Vec<u32>, coeff: &YPoly) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if coeff.is_zero() || degree(&exps) > self.trunc {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
        }
    }

    /// Terms in graded lex order: total degree ascending, then exponent
    /// vectors descending.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &YPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| degree(a).cmp(&degree(b)).then_with(|| b.cmp(a)));
        v
    }

    /// Largest total degree with a nonzero coefficient.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| degree(e)).max()
    }

    /// Drops every term of degree above `trunc`.
    pub fn truncate(&self, trunc: u32) -> Self {
        let trunc = trunc.min(self.trunc);
        MultiSeries {
            nvars: self.nvars,
            trunc,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| degree(e) <= trunc)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// The same series viewed in `nvars >= self.nvars` variables.
    pub fn embed(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars, "cannot embed into fewer variables");
        MultiSeries {
            nvars,
            trunc: self.trunc,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.resize(nvars, 0);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Replaces each coefficient by `f(coeff)`.
    pub fn map_coeffs(&self, f: impl Fn(&YPoly) -> YPoly) -> Self {
        let mut out = Self::zero(self.nvars, self.trunc);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &f(c));
        }
        out
    }

    /// Multiplies by `y^y_shift * x^exps`.
    pub fn mul_monomial(&self, exps: &[u32], y_shift: usize) -> Self {
        let mut out = Self::zero(self.nvars, self.trunc);
        for (e, c) in &self.terms {
            let shifted: Vec<u32> = e.iter().zip(exps).map(|(a, b)| a + b).collect();
            out.add_term(shifted, &c.shift(y_shift));
        }
        out
    }

    /// Substitutes `X_m = (x^{m+1}, x, ..., x)` and `y = y_value`, returning
    /// the coefficients of `x^0..=x^len-1` of the univariate result.
    /// Exact only for indices up to the truncation order.
    pub fn collapse(&self, m: u32, y_value: &BigInt, len: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); len];
        for (e, c) in &self.terms {
            let n = e.first().map_or(0, |&a| m * a) + degree(e);
            if (n as usize) < len {
                out[n as usize] += c.eval(y_value);
            }
        }
        out
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(
            self.nvars, other.nvars,
            "series in different variable counts"
        );
    }
}

/// Exponent vector of `p_m` in `nvars` variables.
pub fn p_exponents(nvars: usize, m: usize) -> Vec<u32> {
    (0..nvars).map(|i| u32::from(i < m)).collect()
}

impl PartialEq for MultiSeries {
    /// Equal after truncating both to the smaller order.
    fn eq(&self, other: &Self) -> bool {
        if self.nvars != other.nvars {
            return false;
        }
        let t = self.trunc.min(other.trunc);
        let a = self.truncate(t);
        let b = other.truncate(t);
        a.terms == b.terms
    }
}

impl std::ops::Add for &MultiSeries {
    type Output = MultiSeries;

    fn add(self, rhs: &MultiSeries) -> MultiSeries {
        self.check_compatible(rhs);
        let mut out = self.truncate(self.trunc.min(rhs.trunc));
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl std::ops::Sub for &MultiSeries {
    type Output = MultiSeries;

    fn sub(self, rhs: &MultiSeries) -> MultiSeries {
        self.check_compatible(rhs);
        let mut out = self.truncate(self.trunc.min(rhs.trunc));
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), &-c);
        }
        out
    }
}

impl std::ops::Mul for &MultiSeries {
    type Output = MultiSeries;

    fn mul(self, rhs: &MultiSeries) -> MultiSeries {
        self.check_compatible(rhs);
        let trunc = self.trunc.min(rhs.trunc);
        let mut out = MultiSeries::zero(self.nvars, trunc);
        let mut exps = vec![0u32; self.nvars];
        for (ea, ca) in &self.terms {
            let da = degree(ea);
            if da > trunc {
                continue;
            }
            for (eb, cb) in &rhs.terms {
                if da + degree(eb) > trunc {
                    continue;
                }
                for (slot, (a, b)) in exps.iter_mut().zip(ea.iter().zip(eb)) {
                    *slot = a + b;
                }
                out.add_term(exps.clone(), &(ca * cb));
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    exponents: Vec<u32>,
    coeff: YPoly,
}

impl Serialize for MultiSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.sorted_terms()
            .into_iter()
            .map(|(e, c)| TermRecord {
                exponents: e.clone(),
                coeff: c.clone(),
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }
}

impl MultiSeries {
    /// Rebuilds a series from its JSON term list. The variable count and
    /// truncation order are not part of the wire form and must be supplied.
    pub fn from_json(json: &str, nvars: usize, trunc: u32) -> Result<Self> {
        let records: Vec<TermRecord> = serde_json::from_str(json)
            .map_err(|e| Error::InvalidArgument(format!("series JSON: {e}")))?;
        let mut s = Self::zero(nvars, trunc);
        for r in records {
            if r.exponents.len() != nvars {
                return Err(Error::InvalidArgument(format!(
                    "exponent vector {:?} has length {}, expected {nvars}",
                    r.exponents,
                    r.exponents.len()
                )));
            }
            s.add_term(r.exponents, &r.coeff);
        }
        Ok(s)
    }
}

/// `Σ_{t ≥ 0} (y^y_power x^monomial)^t` truncated at total degree `trunc`.
pub fn geometric_factor(monomial: &[u32], y_power: usize, trunc: u32) -> Result<MultiSeries> {
    let d = degree(monomial);
    if d == 0 {
        return Err(Error::ZeroDegreeMonomial);
    }
    let nvars = monomial.len();
    let mut out = MultiSeries::zero(nvars, trunc);
    for t in 0..=trunc / d {
        let exps = monomial.iter().map(|&a| a * t).collect();
        out.add_term(exps, &YPoly::y_pow(y_power * t as usize));
    }
    Ok(out)
}

/// `Q_k` truncated at degree `trunc`, straight from the definition.
pub fn qk_direct(k: usize, trunc: u32) -> MultiSeries {
    qk_direct_filtered(k, trunc, |_| true)
}

/// `Q_{k,m}`: the part of `Q_k` with last part `λ_k = m`.
pub fn qk_last_part(k: usize, m: u32, trunc: u32) -> MultiSeries {
    qk_direct_filtered(k, trunc, |lam| lam.last() == m)
}

fn qk_direct_filtered(k: usize, trunc: u32, keep: impl Fn(&Partition) -> bool) -> MultiSeries {
    let mut out = MultiSeries::zero(k, trunc);
    for_each_partition_up_to(k, u64::from(trunc), |lam| {
        if keep(lam) {
            out.add_term(lam.parts().to_vec(), &lower_ideal_poly(lam));
        }
    });
    out
}

/// Exponent vector and `y`-shift of the image of `x^a` under `Z_r`:
/// `x_1 -> y^r p_{r+1}` and `x_j -> x_{r+j}` for `j >= 2`.
fn z_image(a: &[u32], r: usize) -> (Vec<u32>, usize) {
    let first = a.first().copied().unwrap_or(0);
    let mut exps = vec![first; r + 1];
    exps.extend_from_slice(&a[1.min(a.len())..]);
    if a.is_empty() {
        exps.truncate(r);
        exps.fill(0);
    }
    (exps, r * first as usize)
}

/// `Q_{k-r}(Z_r)` with `Z_r = (y^r p_{r+1}, x_{r+2}, ..., x_k, y)`, a series
/// in `k = k_minus_r + r` variables, built by enumerating the partitions of
/// length `k - r`.
pub fn qk_substituted(k_minus_r: usize, r: usize, trunc: u32) -> MultiSeries {
    qk_substituted_filtered(k_minus_r, r, trunc, |_| true)
}

/// [`qk_substituted`] restricted to partitions with last part `m`, i.e.
/// `Q_{k-r,m}(Z_r)`.
pub fn qk_last_part_substituted(k_minus_r: usize, m: u32, r: usize, trunc: u32) -> MultiSeries {
    qk_substituted_filtered(k_minus_r, r, trunc, |lam| lam.last() == m)
}

fn qk_substituted_filtered(
    k_minus_r: usize,
    r: usize,
    trunc: u32,
    keep: impl Fn(&Partition) -> bool,
) -> MultiSeries {
    let nvars = k_minus_r + r;
    if k_minus_r == 0 {
        return MultiSeries::one(nvars, trunc);
    }
    let mut out = MultiSeries::zero(nvars, trunc);
    // the image has degree (r+1)λ_1 + λ_2 + ... >= |λ|
    for_each_partition_up_to(k_minus_r, u64::from(trunc), |lam| {
        if !keep(lam) {
            return;
        }
        let (exps, y_shift) = z_image(lam.parts(), r);
        if degree(&exps) <= trunc {
            out.add_term(exps, &lower_ideal_poly(lam).shift(y_shift));
        }
    });
    out
}

/// Applies `Z_r` to a series in `k - r` variables.
pub fn substitute_z(series: &MultiSeries, r: usize) -> MultiSeries {
    let nvars = series.nvars() + r;
    let mut out = MultiSeries::zero(nvars, series.trunc());
    for (e, c) in &series.terms {
        let (exps, y_shift) = if series.nvars() == 0 {
            (vec![0; nvars], 0)
        } else {
            z_image(e, r)
        };
        out.add_term(exps, &c.shift(y_shift));
    }
    out
}

/// Right-hand side of the recursion for `(1 - p_k) Q_k`:
///
/// ```text
/// x_k Q_{k-1} + Σ_{0 ≤ i < r ≤ k} y^r p_k / (1 - y^r p_r) · Q_{k-r}(Z_r) · Q_i
/// ```
///
/// `lower[j]` must hold `Q_j` (in `j` variables) for `j < k`.
pub fn recursion_rhs(k: usize, trunc: u32, lower: &[MultiSeries]) -> MultiSeries {
    assert!(k >= 1 && lower.len() >= k, "need Q_0..Q_(k-1)");
    let mut x_k = vec![0; k];
    x_k[k - 1] = 1;
    let mut rhs = lower[k - 1].embed(k).truncate(trunc).mul_monomial(&x_k, 0);
    let mut partial_sum = MultiSeries::zero(k, trunc);
    for r in 1..=k {
        partial_sum = &partial_sum + &lower[r - 1].embed(k).truncate(trunc);
        let geo = geometric_factor(&p_exponents(k, r), r, trunc).expect("r >= 1");
        let sub = substitute_z(&lower[k - r].truncate(trunc), r);
        let term = &(&geo * &sub) * &partial_sum;
        rhs = &rhs + &term.mul_monomial(&p_exponents(k, k), r);
    }
    rhs
}

/// `Q_0, ..., Q_k` from the rational recursion alone, starting at `Q_0 = 1`.
pub fn qk_recursive_all(k: usize, trunc: u32) -> Vec<MultiSeries> {
    let mut qs = vec![MultiSeries::one(0, trunc)];
    for j in 1..=k {
        let rhs = recursion_rhs(j, trunc, &qs);
        let inv = geometric_factor(&p_exponents(j, j), 0, trunc).expect("j >= 1");
        qs.push(&inv * &rhs);
    }
    qs
}

/// `Q_k` truncated at `trunc`, via the rational recursion.
pub fn qk_recursive(k: usize, trunc: u32) -> MultiSeries {
    qk_recursive_all(k, trunc).pop().expect("nonempty")
}

/// `D_k = ∏_{m=1..k} ∏_{j=0..m} (1 - y^j p_m)`, truncated.
pub fn dk_polynomial(k: usize, trunc: u32) -> MultiSeries {
    let mut d = MultiSeries::one(k, trunc);
    for m in 1..=k {
        for j in 0..=m {
            let factor = &MultiSeries::one(k, trunc) - &MultiSeries::p_monomial(k, trunc, m, j);
            d = &d * &factor;
        }
    }
    d
}

#[derive(Debug, Clone)]
pub struct DkReport {
    pub k: usize,
    pub trunc: u32,
    /// `Q_k · D_k` truncated at `trunc`.
    pub product: MultiSeries,
    /// Largest total degree with a nonzero term, `d₀`.
    pub max_degree: Option<u32>,
}

impl DkReport {
    /// All terms of degree in `(d₀, trunc]` vanish with `d₀ < trunc`.
    pub fn stabilized(&self) -> bool {
        self.max_degree.is_none_or(|d| d < self.trunc)
    }
}

/// Multiplies `Q_k` by `D_k` and records where the product stops.
pub fn dk_product_check(k: usize, trunc: u32) -> DkReport {
    let product = &qk_direct(k, trunc) * &dk_polynomial(k, trunc);
    let max_degree = product.max_degree();
    DkReport {
        k,
        trunc,
        product,
        max_degree,
    }
}

/// `Q_k` at `y = 0`.
pub fn specialize_y0(k: usize, trunc: u32) -> MultiSeries {
    qk_direct(k, trunc).map_coeffs(|c| YPoly::from_coeffs(vec![c.coeff(0)]))
}

/// `p_k ∏_{m=1..k} (1 - p_m)^{-1}`, truncated.
pub fn y0_product_formula(k: usize, trunc: u32) -> MultiSeries {
    let mut out = MultiSeries::p_monomial(k, trunc, k, 0);
    for m in 1..=k {
        out = &out * &geometric_factor(&p_exponents(k, m), 0, trunc).expect("m >= 1");
    }
    out
}

/// Coefficients `C^m_{k,n}` of `Q_k(X_m)` for `n = 0..=trunc`, summing
/// `#[∅,λ]` over partitions with `k` parts and `|λ| + m λ_1 = n`.
pub fn qk_xm(k: usize, m: u32, trunc: u32) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); trunc as usize + 1];
    if k == 0 {
        out[0] = BigUint::one();
        return out;
    }
    for_each_partition_up_to(k, u64::from(trunc), |lam| {
        let n = lam.rank() + u64::from(m) * u64::from(lam.first());
        if n <= u64::from(trunc) {
            out[n as usize] += interval_count(lam);
        }
    });
    out
}

/// Truncated univariate integer series helpers.
pub mod univariate {
    use num_bigint::BigInt;
    use num_traits::Zero;

    pub fn mul(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); len];
        for (i, x) in a.iter().enumerate().take(len) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(len - i) {
                out[i + j] += x * y;
            }
        }
        out
    }

    /// `x^d`.
    pub fn shift(a: &[BigInt], d: usize, len: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); len];
        for (i, x) in a.iter().enumerate() {
            if i + d < len {
                out[i + d] = x.clone();
            }
        }
        out
    }

    /// `1 / (1 - x^d)` for `d >= 1`.
    pub fn geometric(d: usize, len: usize) -> Vec<BigInt> {
        assert!(d >= 1);
        (0..len)
            .map(|i| BigInt::from(u8::from(i % d == 0)))
            .collect()
    }

    /// `1 - x^d`.
    pub fn one_minus(d: usize, len: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); len];
        if len > 0 {
            out[0] += 1;
        }
        if d < len {
            out[d] -= 1;
        }
        out
    }

    pub fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XmReport {
    pub k: usize,
    pub m: u32,
    pub trunc: u32,
    /// First coefficient index where the quotient form disagrees.
    pub quotient_mismatch: Option<usize>,
    /// First coefficient index where the cleared-denominator form disagrees.
    pub multiplied_mismatch: Option<usize>,
}

impl XmReport {
    pub fn holds(&self) -> bool {
        self.quotient_mismatch.is_none() && self.multiplied_mismatch.is_none()
    }
}

/// Checks the single-variable recursion
///
/// ```text
/// Q_k(X_m) = x Q_{k-1}(X_m) / (1 - x^{k+m})
///          + Σ_{0 ≤ i < r ≤ k} x^{k+m} Q_{k-r}(X_{r+m}) Q_i(X_m) / ((1 - x^{k+m})(1 - x^{r+m}))
/// ```
///
/// through `x^trunc`, both as written (geometric series) and with every
/// denominator cleared. The leading `x` is the image of `x_k` under `X_m`,
/// which is `x^{m+1}` when `k = 1`.
pub fn verify_xm_recursion(k: usize, m: u32, trunc: u32) -> XmReport {
    use univariate::*;
    assert!(k >= 1);
    let len = trunc as usize + 1;
    let km = k + m as usize;
    let signed = |v: Vec<BigUint>| -> Vec<BigInt> { v.into_iter().map(BigInt::from).collect() };
    let q_m: Vec<Vec<BigInt>> = (0..=k).map(|i| signed(qk_xm(i, m, trunc))).collect();
    let q_shift = |r: usize| signed(qk_xm(k - r, r as u32 + m, trunc));
    let lead = if k == 1 { m as usize + 1 } else { 1 };

    // quotient form
    let mut inner = shift(&q_m[k - 1], lead, len);
    for r in 1..=k {
        let mut lower_sum = vec![BigInt::zero(); len];
        for q in &q_m[..r] {
            lower_sum = add(&lower_sum, q);
        }
        let t = mul(&q_shift(r), &lower_sum, len);
        let t = mul(&t, &geometric(r + m as usize, len), len);
        inner = add(&inner, &shift(&t, km, len));
    }
    let rhs = mul(&inner, &geometric(km, len), len);
    let quotient_mismatch = (0..len).find(|&i| rhs[i] != q_m[k][i]);

    // cleared form: (1 - x^{k+m}) ∏_r (1 - x^{r+m}) Q_k = ...
    let den_r = |skip: Option<usize>| {
        let mut acc = vec![BigInt::zero(); len];
        acc[0] = BigInt::from(1);
        for r in (1..=k).filter(|&r| Some(r) != skip) {
            acc = mul(&acc, &one_minus(r + m as usize, len), len);
        }
        acc
    };
    let lhs = mul(&mul(&q_m[k], &one_minus(km, len), len), &den_r(None), len);
    let mut rhs = mul(&shift(&q_m[k - 1], lead, len), &den_r(None), len);
    for r in 1..=k {
        let qs = q_shift(r);
        let others = den_r(Some(r));
        for q in &q_m[..r] {
            let t = mul(&mul(&qs, q, len), &others, len);
            rhs = add(&rhs, &shift(&t, km, len));
        }
    }
    let multiplied_mismatch = (0..len).find(|&i| lhs[i] != rhs[i]);

    XmReport {
        k,
        m,
        trunc,
        quotient_mismatch,
        multiplied_mismatch,
    }
}
