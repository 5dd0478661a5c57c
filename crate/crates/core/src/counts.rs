//! Exact counts, averages and growth constants.
//!
//! With `c_{k,n}` the number of partitions of `n` into exactly `k` parts and
//! `C_{k,n}` the total size of their lower ideals, the average ideal size is
//! `A_{k,n} = C_{k,n} / c_{k,n}` and grows like `G_k n^k`. All values here are
//! exact rationals.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions_capped, enumerate_staircase_interval, Partition};
use crate::rankpoly::interval_count;
use crate::rational::{
    factorial, falling_factorial, from_uint, ratio, reciprocal, to_decimal_string,
    to_fraction_string,
};

/// `c_{k,n}` by the recurrence `c_{k,n} = c_{k-1,n-1} + c_{k,n-k}`.
pub fn count_partitions(k: usize, n: u64) -> BigUint {
    let n = n as usize;
    if k > n {
        return BigUint::from(u8::from(k == 0 && n == 0));
    }
    // table[j][t] = c_{j,t}
    let mut table = vec![vec![BigUint::zero(); n + 1]; k + 1];
    table[0][0] = BigUint::one();
    for j in 1..=k {
        for t in j..=n {
            let v = &table[j - 1][t - 1] + &table[j][t - j];
            table[j][t] = v;
        }
    }
    table[k][n].clone()
}

/// Partitions with `k` parts and `|λ| + m λ_1 = n`.
pub fn weighted_partitions(k: usize, n: u64, m: u32) -> Vec<Partition> {
    if k == 0 {
        return if n == 0 {
            vec![Partition::empty()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    let step = u64::from(m) + 1;
    let mut first = 1u64;
    while step * first <= n {
        let rest = n - step * first;
        for tail in enumerate_partitions_capped(k - 1, rest, first as u32) {
            let mut parts = Vec::with_capacity(k);
            parts.push(first as u32);
            parts.extend_from_slice(tail.parts());
            out.push(Partition::new(parts).expect("decreasing by construction"));
        }
        first += 1;
    }
    out
}

/// `C^m_{k,n} = Σ #[∅, λ]` over `λ` with `k` parts and `|λ| + m λ_1 = n`.
/// For `m = 0` this is `C_{k,n}`. Summed in parallel over partitions.
pub fn ideal_total(k: usize, n: u64, m: u32) -> BigUint {
    weighted_partitions(k, n, m)
        .par_iter()
        .map(interval_count)
        .reduce(BigUint::zero, |a, b| a + b)
}

/// `A_{k,n} = C_{k,n} / c_{k,n}`.
pub fn average_ideal_size(k: usize, n: u64) -> Result<BigRational> {
    let c = count_partitions(k, n);
    if c.is_zero() {
        return Err(Error::NoPartitions {
            k: k as u32,
            n: n as u32,
        });
    }
    Ok(ratio(&ideal_total(k, n, 0), &c))
}

/// `A_{≤k,n}`: the same average over partitions with between 1 and `k` parts.
pub fn average_ideal_size_at_most(k: usize, n: u64) -> Result<BigRational> {
    if n == 0 || k == 0 {
        return Err(Error::NoPartitions {
            k: k as u32,
            n: n as u32,
        });
    }
    let (total, count) = (1..=k).fold((BigUint::zero(), BigUint::zero()), |(t, c), j| {
        (t + ideal_total(j, n, 0), c + count_partitions(j, n))
    });
    Ok(ratio(&total, &count))
}

static B_MEMO: LazyLock<Mutex<HashMap<(usize, u32), BigRational>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// `B(k,m)` from `B(0,m) = 1` and
/// `B(k,m) = Σ_{r=1..k} B(k-r, r+m) B(r-1, m) / ((m+k)(m+r))`.
///
/// Memoized process-wide behind a mutex; the lock is never held across the
/// recursive calls.
pub fn b_recursive(k: usize, m: u32) -> BigRational {
    if k == 0 {
        return BigRational::one();
    }
    if let Some(v) = B_MEMO.lock().expect("memo poisoned").get(&(k, m)) {
        return v.clone();
    }
    let mk = u64::from(m) + k as u64;
    let value = (1..=k)
        .map(|r| {
            let mr = u64::from(m) + r as u64;
            let num = b_recursive(k - r, r as u32 + m) * b_recursive(r - 1, m);
            num / BigRational::from_integer(BigInt::from(mk * mr))
        })
        .fold(BigRational::zero(), |a, b| a + b);
    B_MEMO
        .lock()
        .expect("memo poisoned")
        .entry((k, m))
        .or_insert_with(|| value.clone());
    value
}

/// `Σ_{λ ∈ I_{k,m}} ∏ 1/λ_i`.
pub fn staircase_reciprocal_sum(k: usize, m: u32) -> BigRational {
    enumerate_staircase_interval(k, m)
        .iter()
        .map(|lam| reciprocal(&lam.part_product()))
        .fold(BigRational::zero(), |a, b| a + b)
}

/// `B̃(k,m) = (1 / (m+k)_k) Σ_{λ ∈ I_{k,m}} ∏ 1/λ_i`, with `B̃(0,m) = 1`.
pub fn b_direct(k: usize, m: u32) -> BigRational {
    if k == 0 {
        return BigRational::one();
    }
    let ff = falling_factorial(u64::from(m) + k as u64, k as u64);
    staircase_reciprocal_sum(k, m) / from_uint(&ff)
}

/// `G_k = ((k-1)! / (2k-1)!) Σ_{λ ∈ I_k} ∏ 1/λ_i`.
pub fn g_k(k: usize) -> Result<BigRational> {
    if k == 0 {
        return Err(Error::InvalidArgument("G_k needs k >= 1".into()));
    }
    let k64 = k as u64;
    Ok(staircase_reciprocal_sum(k, 0) * ratio(&factorial(k64 - 1), &factorial(2 * k64 - 1)))
}

/// `(k! (k-1)! / (2k-1)!) B(k, 0)`, the growth constant read off the
/// singular coefficient of `Q_k(X_0)`.
pub fn g_k_from_b(k: usize) -> Result<BigRational> {
    if k == 0 {
        return Err(Error::InvalidArgument("G_k needs k >= 1".into()));
    }
    let k64 = k as u64;
    let scale = ratio(
        &(factorial(k64) * factorial(k64 - 1)),
        &factorial(2 * k64 - 1),
    );
    Ok(scale * b_recursive(k, 0))
}

/// One row of the convergence table for `A_{k,n} ~ G_k n^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceRow {
    pub n: u64,
    pub c: BigUint,
    pub big_c: BigUint,
    pub average: BigRational,
    /// `A_{k,n} / (G_k n^k)`.
    pub ratio: BigRational,
}

impl ConvergenceRow {
    pub fn ratio_decimal(&self) -> String {
        to_decimal_string(&self.ratio, 12)
    }

    /// `|ratio - 1|`.
    pub fn distance_from_one(&self) -> BigRational {
        let d = &self.ratio - BigRational::one();
        if d < BigRational::zero() {
            -d
        } else {
            d
        }
    }
}

#[derive(Serialize)]
struct RowRecord {
    n: u64,
    c: String,
    #[serde(rename = "C")]
    big_c: String,
    #[serde(rename = "A")]
    average: String,
    ratio: String,
    ratio_decimal: String,
}

impl From<&ConvergenceRow> for RowRecord {
    fn from(r: &ConvergenceRow) -> Self {
        RowRecord {
            n: r.n,
            c: r.c.to_string(),
            big_c: r.big_c.to_string(),
            average: to_fraction_string(&r.average),
            ratio: to_fraction_string(&r.ratio),
            ratio_decimal: r.ratio_decimal(),
        }
    }
}

/// Exact rows for each `n` in `n_values`, skipping `n` with no partitions.
pub fn convergence_table(k: usize, n_values: &[u64]) -> Result<Vec<ConvergenceRow>> {
    let g = g_k(k)?;
    let mut rows = Vec::new();
    for &n in n_values {
        let c = count_partitions(k, n);
        if c.is_zero() {
            continue;
        }
        let big_c = ideal_total(k, n, 0);
        let average = ratio(&big_c, &c);
        let scale = &g * BigRational::from_integer(BigInt::from(n).pow(k as u32));
        let ratio = &average / scale;
        rows.push(ConvergenceRow {
            n,
            c,
            big_c,
            average,
            ratio,
        });
    }
    Ok(rows)
}

/// CSV with header `n,c,C,A_num,A_den,ratio_decimal`.
pub fn convergence_csv(rows: &[ConvergenceRow]) -> String {
    let mut out = String::from("n,c,C,A_num,A_den,ratio_decimal\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.n,
            r.c,
            r.big_c,
            r.average.numer(),
            r.average.denom(),
            r.ratio_decimal()
        ));
    }
    out
}

pub fn convergence_json(rows: &[ConvergenceRow]) -> serde_json::Value {
    serde_json::to_value(rows.iter().map(RowRecord::from).collect::<Vec<_>>())
        .expect("plain records serialize")
}
