//! Rank generating polynomials `P_{μ,λ}(y) = Σ_{ν ∈ [μ,λ]} y^{|ν|}`.
//!
//! Evaluation splits the interval until it is a single point:
//!
//! * if `μ_r = λ_r` for some row `r` strictly above the last row of `λ`, the
//!   interval is a product of the rows `1..=r` and the rows below, so the
//!   polynomial factors;
//! * otherwise, at the smallest `r` with `λ_r > λ_{r+1}` and `μ_r < λ_r`, the
//!   interval is the disjoint union of the part with `ν_r < λ_r` and the part
//!   with `ν_r = λ_r`, so the polynomial is a sum.
//!
//! The same recursion evaluated at `y = 1` gives interval cardinalities,
//! which have their own integer memo.
//!
//! # Caching
//!
//! [`RankPolyMemo`] keeps results in sharded concurrent maps keyed by the
//! canonical `(μ, λ)` pair. Entries are only inserted once fully computed and
//! values are immutable afterwards, so a reader sees either nothing or the
//! complete value. Two threads racing on the same key compute the same value;
//! the later insert is dropped. The free functions in this module share one
//! process-wide memo.

use std::sync::{Arc, LazyLock};

use dashmap::DashMap;
use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::{Error, Result};
use crate::partition::{contains, sum_split_parts, Partition};
use crate::ypoly::YPoly;

type Key = (Partition, Partition);

#[derive(Debug, Clone, PartialEq, Eq)]
enum Step {
    Point,
    Product(Key, Key),
    Sum(Key, Key),
}

fn next_step(mu: &Partition, lambda: &Partition) -> Step {
    if mu == lambda {
        return Step::Point;
    }
    let k = lambda.len();
    // rows 0..k-1 (zero-based), excluding the last row so both factors shrink
    if let Some(r0) = (0..k.saturating_sub(1)).find(|&i| mu.part(i) == lambda.part(i)) {
        let split = r0 + 1;
        let (mu_head, mu_tail) = split_at(mu, split);
        let (lam_head, lam_tail) = split_at(lambda, split);
        return Step::Product((mu_head, lam_head), (mu_tail, lam_tail));
    }
    let r0 = (0..k)
        .find(|&i| lambda.part(i) > lambda.part(i + 1) && mu.part(i) < lambda.part(i))
        .expect("μ < λ leaves a removable row");
    let (lowered, raised) = sum_split_parts(mu, lambda, r0);
    Step::Sum((mu.clone(), lowered), (raised, lambda.clone()))
}

fn split_at(p: &Partition, r: usize) -> (Partition, Partition) {
    let parts = p.parts();
    let cut = r.min(parts.len());
    (
        Partition::from_decreasing(parts[..cut].to_vec()),
        Partition::from_decreasing(parts[cut..].to_vec()),
    )
}

/// Shared memo for rank polynomials and interval counts.
#[derive(Debug, Default)]
pub struct RankPolyMemo {
    polys: DashMap<Key, Arc<YPoly>>,
    counts: DashMap<Key, Arc<BigUint>>,
}

impl RankPolyMemo {
    pub fn new() -> Self {
        Self::default()
    }

    /// `P_{μ,λ}(y)`.
    pub fn rank_gen_poly(&self, mu: &Partition, lambda: &Partition) -> Result<Arc<YPoly>> {
        if !contains(mu, lambda) {
            return Err(Error::NotContained {
                mu: mu.clone(),
                lambda: lambda.clone(),
            });
        }
        Ok(self.poly_unchecked(mu, lambda))
    }

    fn poly_unchecked(&self, mu: &Partition, lambda: &Partition) -> Arc<YPoly> {
        let key = (mu.clone(), lambda.clone());
        if let Some(hit) = self.polys.get(&key) {
            return Arc::clone(hit.value());
        }
        let value = match next_step(mu, lambda) {
            Step::Point => YPoly::y_pow(lambda.rank() as usize),
            Step::Product((m1, l1), (m2, l2)) => {
                let a = self.poly_unchecked(&m1, &l1);
                let b = self.poly_unchecked(&m2, &l2);
                &*a * &*b
            }
            Step::Sum((m1, l1), (m2, l2)) => {
                let a = self.poly_unchecked(&m1, &l1);
                let b = self.poly_unchecked(&m2, &l2);
                &*a + &*b
            }
        };
        let value = Arc::new(value);
        self.polys.entry(key).or_insert_with(|| Arc::clone(&value));
        value
    }

    /// `#[μ, λ]`, the same recursion evaluated at `y = 1`.
    pub fn interval_size(&self, mu: &Partition, lambda: &Partition) -> Result<BigUint> {
        if !contains(mu, lambda) {
            return Err(Error::NotContained {
                mu: mu.clone(),
                lambda: lambda.clone(),
            });
        }
        Ok((*self.count_unchecked(mu, lambda)).clone())
    }

    /// `#[∅, λ]`.
    pub fn interval_count(&self, lambda: &Partition) -> BigUint {
        (*self.count_unchecked(&Partition::empty(), lambda)).clone()
    }

    fn count_unchecked(&self, mu: &Partition, lambda: &Partition) -> Arc<BigUint> {
        let key = (mu.clone(), lambda.clone());
        if let Some(hit) = self.counts.get(&key) {
            return Arc::clone(hit.value());
        }
        let value = match next_step(mu, lambda) {
            Step::Point => BigUint::one(),
            Step::Product((m1, l1), (m2, l2)) => {
                &*self.count_unchecked(&m1, &l1) * &*self.count_unchecked(&m2, &l2)
            }
            Step::Sum((m1, l1), (m2, l2)) => {
                &*self.count_unchecked(&m1, &l1) + &*self.count_unchecked(&m2, &l2)
            }
        };
        let value = Arc::new(value);
        self.counts.entry(key).or_insert_with(|| Arc::clone(&value));
        value
    }

    /// Number of cached polynomials and counts.
    pub fn len(&self) -> (usize, usize) {
        (self.polys.len(), self.counts.len())
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty() && self.counts.is_empty()
    }
}

static GLOBAL: LazyLock<RankPolyMemo> = LazyLock::new(RankPolyMemo::new);

/// The process-wide memo used by the free functions.
pub fn global_memo() -> &'static RankPolyMemo {
    &GLOBAL
}

/// `P_{μ,λ}(y)` using the process-wide memo.
pub fn rank_gen_poly(mu: &Partition, lambda: &Partition) -> Result<YPoly> {
    GLOBAL.rank_gen_poly(mu, lambda).map(|p| (*p).clone())
}

/// `P_λ(y) = P_{∅,λ}(y)`.
pub fn lower_ideal_poly(lambda: &Partition) -> Arc<YPoly> {
    GLOBAL.poly_unchecked(&Partition::empty(), lambda)
}

/// `#[∅, λ]` using the process-wide integer memo.
pub fn interval_count(lambda: &Partition) -> BigUint {
    GLOBAL.interval_count(lambda)
}

/// `P_λ(y²)`, the Poincaré polynomial of the Schubert variety of `λ`.
pub fn poincare_poly(lambda: &Partition) -> YPoly {
    lower_ideal_poly(lambda).double_exponents()
}

/// The Gaussian polynomial `C(n+k, k)_y = ∏_{i=1..k} (1 - y^{n+i}) / (1 - y^i)`,
/// computed by one exact polynomial division.
pub fn gaussian_poly(n: usize, k: usize) -> Result<YPoly> {
    let one_minus = |e: usize| &YPoly::one() - &YPoly::y_pow(e);
    let num = (1..=k).fold(YPoly::one(), |acc, i| &acc * &one_minus(n + i));
    let den = (1..=k).fold(YPoly::one(), |acc, i| &acc * &one_minus(i));
    num.div_exact(&den)
}

/// Brute-force `Σ y^{|ν|}` over the enumerated interval. Test oracle.
pub fn rank_poly_by_enumeration(mu: &Partition, lambda: &Partition) -> Result<YPoly> {
    let mut coeffs = vec![BigInt::from(0); lambda.rank() as usize + 1];
    for nu in crate::partition::enumerate_interval(mu, lambda)? {
        coeffs[nu.rank() as usize] += 1;
    }
    Ok(YPoly::from_coeffs(coeffs))
}
