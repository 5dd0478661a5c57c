//! Partitions as elements of Young's lattice.
//!
//! A [`Partition`] stores its parts weakly decreasing with no zero parts, so
//! every value has exactly one representation and can be used directly as a
//! memo key. Comparisons in the containment order pad the shorter partition
//! with zeros.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; a zero followed by a positive part is rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts descending and drops zeros.
    pub(crate) fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    /// Caller guarantees the parts are weakly decreasing; zeros are trimmed.
    pub(crate) fn from_decreasing(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    /// The rectangle `(width^height)`.
    pub fn rectangle(width: u32, height: usize) -> Self {
        Partition::from_decreasing(vec![width; height])
    }

    /// The shifted staircase `(m+k, m+k-1, ..., m+1)`.
    pub fn staircase(k: usize, m: u32) -> Self {
        Partition((1..=k as u32).rev().map(|i| m + i).collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn rank(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// Part at zero-based index `i`, or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Largest part, or 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.part(0)
    }

    /// Smallest part, or 0 for the empty partition.
    pub fn last(&self) -> u32 {
        self.0.last().copied().unwrap_or(0)
    }

    /// Product of the parts (1 for the empty partition).
    pub fn part_product(&self) -> num_bigint::BigUint {
        self.0
            .iter()
            .map(|&p| num_bigint::BigUint::from(p))
            .product()
    }

    /// Containment order on Young diagrams.
    pub fn contained_in(&self, other: &Partition) -> bool {
        contains(self, other)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim().parse::<u32>().map_err(|e| Error::Parse {
                    input: s.to_string(),
                    reason: format!("{tok:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| Error::Parse {
            input: s.to_string(),
            reason: "parts must be weakly decreasing".into(),
        })
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Self {
        Partition::from_unsorted(parts.to_vec())
    }
}

/// A pair `mu ≤ lambda`, standing for the interval `[mu, lambda]` and its
/// skew diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewInterval {
    mu: Partition,
    lambda: Partition,
}

impl SkewInterval {
    pub fn new(mu: Partition, lambda: Partition) -> Result<Self> {
        if !contains(&mu, &lambda) {
            return Err(Error::NotContained { mu, lambda });
        }
        Ok(SkewInterval { mu, lambda })
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn into_pair(self) -> (Partition, Partition) {
        (self.mu, self.lambda)
    }

    /// All elements of the interval, descending lexicographic.
    pub fn elements(&self) -> Vec<Partition> {
        interval_unchecked(&self.mu, &self.lambda)
    }
}

impl fmt::Display for SkewInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[({}), ({})]", self.mu, self.lambda)
    }
}

/// `mu_i ≤ lambda_i` for every `i`, padding with zeros.
pub fn contains(mu: &Partition, lambda: &Partition) -> bool {
    mu.len() <= lambda.len() && mu.0.iter().zip(&lambda.0).all(|(a, b)| a <= b)
}

/// Subtracts `power` from every part, dropping parts that reach zero.
pub fn rho(lambda: &Partition, power: u32) -> Result<Partition> {
    if lambda.last() < power && !lambda.is_empty() {
        return Err(Error::NegativePart {
            lambda: lambda.clone(),
            power,
        });
    }
    Ok(Partition::from_decreasing(
        lambda.0.iter().map(|&p| p - power).collect(),
    ))
}

/// `(λ_1..λ_r, λ_{r+1}..λ_k)`.
pub fn slice(lambda: &Partition, r: usize) -> Result<(Partition, Partition)> {
    if r > lambda.len() {
        return Err(Error::IndexOutOfRange {
            index: r,
            max: lambda.len(),
        });
    }
    let (head, tail) = lambda.0.split_at(r);
    Ok((Partition(head.to_vec()), Partition(tail.to_vec())))
}

/// Splits `[mu, lambda]` by whether `ν_r = λ_r` (one-based `r`).
///
/// Requires `λ_r > λ_{r+1}` and `μ_r < λ_r`; the second condition keeps both
/// halves nonempty. Returns `([μ, λ with λ_r lowered], [μ raised to λ_r in
/// rows 1..=r, λ])`.
pub fn lemma_sum_split(
    mu: &Partition,
    lambda: &Partition,
    r: usize,
) -> Result<(SkewInterval, SkewInterval)> {
    check_contains(mu, lambda)?;
    let k = lambda.len();
    if r == 0 || r > k {
        return Err(Error::IndexOutOfRange { index: r, max: k });
    }
    let lr = lambda.part(r - 1);
    if lr <= lambda.part(r) {
        return Err(Error::Precondition(format!(
            "λ_{r} = {lr} must exceed λ_{} = {}",
            r + 1,
            lambda.part(r)
        )));
    }
    if mu.part(r - 1) >= lr {
        return Err(Error::Precondition(format!(
            "μ_{r} = {} must be below λ_{r} = {lr}",
            mu.part(r - 1)
        )));
    }
    let (left, right) = sum_split_parts(mu, lambda, r - 1);
    Ok((
        SkewInterval {
            mu: mu.clone(),
            lambda: left,
        },
        SkewInterval {
            mu: right,
            lambda: lambda.clone(),
        },
    ))
}

/// Zero-based core of [`lemma_sum_split`] without checks.
pub(crate) fn sum_split_parts(
    mu: &Partition,
    lambda: &Partition,
    r0: usize,
) -> (Partition, Partition) {
    let mut lowered = lambda.0.clone();
    lowered[r0] -= 1;
    let lr = lambda.0[r0];
    let raised: Vec<u32> = (0..mu.len().max(r0 + 1))
        .map(|i| {
            if i <= r0 {
                mu.part(i).max(lr)
            } else {
                mu.part(i)
            }
        })
        .collect();
    (
        Partition::from_decreasing(lowered),
        Partition::from_decreasing(raised),
    )
}

/// Splits `[mu, lambda]` by whether `ν_r > μ_r` (one-based `r`).
///
/// Requires `μ_r < μ_{r-1}` (with `μ_0 = ∞`) and `μ_r < λ_r`. Returns
/// `([μ with a box added in row r, λ], [μ, λ with rows r.. cut to μ_r])`.
pub fn lemma_sum2_split(
    mu: &Partition,
    lambda: &Partition,
    r: usize,
) -> Result<(SkewInterval, SkewInterval)> {
    check_contains(mu, lambda)?;
    let k = lambda.len();
    if r == 0 || r > k {
        return Err(Error::IndexOutOfRange { index: r, max: k });
    }
    let mr = mu.part(r - 1);
    if r > 1 && mr >= mu.part(r - 2) {
        return Err(Error::Precondition(format!(
            "μ_{r} = {mr} must be below μ_{} = {}",
            r - 1,
            mu.part(r - 2)
        )));
    }
    if mr >= lambda.part(r - 1) {
        return Err(Error::Precondition(format!(
            "μ_{r} = {mr} must be below λ_{r} = {}",
            lambda.part(r - 1)
        )));
    }
    let mut raised: Vec<u32> = (0..r).map(|i| mu.part(i)).collect();
    raised[r - 1] += 1;
    raised.extend(mu.0.iter().skip(r));
    let cut: Vec<u32> = (0..k)
        .map(|i| {
            if i < r - 1 {
                lambda.0[i]
            } else {
                lambda.0[i].min(mr)
            }
        })
        .collect();
    Ok((
        SkewInterval {
            mu: Partition::from_decreasing(raised),
            lambda: lambda.clone(),
        },
        SkewInterval {
            mu: mu.clone(),
            lambda: Partition::from_decreasing(cut),
        },
    ))
}

fn check_contains(mu: &Partition, lambda: &Partition) -> Result<()> {
    if contains(mu, lambda) {
        Ok(())
    } else {
        Err(Error::NotContained {
            mu: mu.clone(),
            lambda: lambda.clone(),
        })
    }
}

/// All partitions with exactly `k` parts and rank `n`, descending lex.
pub fn enumerate_partitions(k: usize, n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Partition::empty());
        }
        return out;
    }
    if n < k as u64 {
        return out;
    }
    let mut buf = Vec::with_capacity(k);
    fill_parts(k, n, n, &mut buf, &mut |p| out.push(Partition(p.to_vec())));
    out
}

/// Partitions with exactly `k` parts, rank `n` and every part at most `cap`,
/// descending lex.
pub fn enumerate_partitions_capped(k: usize, n: u64, cap: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Partition::empty());
        }
        return out;
    }
    let mut buf = Vec::with_capacity(k);
    fill_parts(k, n, u64::from(cap), &mut buf, &mut |p| {
        out.push(Partition(p.to_vec()))
    });
    out
}

/// Visits every partition with exactly `k` parts and rank at most `max_rank`.
pub fn for_each_partition_up_to(k: usize, max_rank: u64, mut f: impl FnMut(&Partition)) {
    for n in k as u64..=max_rank {
        for p in enumerate_partitions(k, n) {
            f(&p);
        }
    }
}

// Parts in buf so far; `k` parts remain, summing to `n`, each at most `cap`.
fn fill_parts(k: usize, n: u64, cap: u64, buf: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
    if k == 0 {
        if n == 0 {
            emit(buf);
        }
        return;
    }
    // Each remaining part is at least 1 and at most cap.
    if n < k as u64 || n > cap * k as u64 {
        return;
    }
    let hi = cap.min(n - (k as u64 - 1));
    let lo = n.div_ceil(k as u64);
    for a in (lo..=hi).rev() {
        buf.push(a as u32);
        fill_parts(k - 1, n - a, a, buf, emit);
        buf.pop();
    }
}

/// Every ν with `mu ≤ ν ≤ lambda`, descending lex.
pub fn enumerate_interval(mu: &Partition, lambda: &Partition) -> Result<Vec<Partition>> {
    check_contains(mu, lambda)?;
    Ok(interval_unchecked(mu, lambda))
}

fn interval_unchecked(mu: &Partition, lambda: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(lambda.len());
    walk_interval(mu, lambda, &mut buf, &mut out);
    out
}

fn walk_interval(mu: &Partition, lambda: &Partition, buf: &mut Vec<u32>, out: &mut Vec<Partition>) {
    let i = buf.len();
    if i == lambda.len() {
        out.push(Partition::from_decreasing(buf.clone()));
        return;
    }
    let hi = match buf.last() {
        Some(&prev) => prev.min(lambda.0[i]),
        None => lambda.0[i],
    };
    let lo = mu.part(i);
    for v in (lo..=hi).rev() {
        buf.push(v);
        walk_interval(mu, lambda, buf, out);
        buf.pop();
    }
}

/// The blocks `α_{k,m}(r)` and `β_{k,m}(r)` of the staircase decomposition,
/// for one-based `r` in `1..=k`.
pub fn alpha_beta(k: usize, m: u32, r: usize) -> Result<(Partition, Partition)> {
    if r == 0 || r > k {
        return Err(Error::IndexOutOfRange { index: r, max: k });
    }
    let top = m + k as u32;
    let pivot = k - r + 1;
    let alpha = (1..=k)
        .map(|i| {
            if i == 1 {
                top
            } else if i > pivot {
                top + 1 - i as u32
            } else {
                top + 2 - i as u32
            }
        })
        .collect();
    let beta = (1..=k)
        .map(|i| if i <= pivot { top } else { m + r as u32 - 1 })
        .collect();
    Ok((
        Partition::from_decreasing(alpha),
        Partition::from_decreasing(beta),
    ))
}

/// `I_{k,m}`: everything between the shifted staircase and the `(m+k)^k`
/// rectangle.
pub fn enumerate_staircase_interval(k: usize, m: u32) -> Vec<Partition> {
    interval_unchecked(
        &Partition::staircase(k, m),
        &Partition::rectangle(m + k as u32, k),
    )
}

/// The `k` blocks `[α_{k,m}(r), β_{k,m}(r)]`, `r = 1..=k`, whose disjoint
/// union is `I_{k,m}`.
pub fn decompose_staircase_interval(k: usize, m: u32) -> Vec<SkewInterval> {
    (1..=k)
        .map(|r| {
            let (a, b) = alpha_beta(k, m, r).expect("r in range");
            SkewInterval { mu: a, lambda: b }
        })
        .collect()
}

fn in_staircase_interval(lambda: &Partition, k: usize, m: u32) -> bool {
    lambda.len() == k
        && contains(&Partition::staircase(k, m), lambda)
        && contains(lambda, &Partition::rectangle(m + k as u32, k))
}

/// `(λ, λ') ↦ (k+m, λ_1..λ_{k-r}, λ'_1..λ'_{r-1})`, mapping
/// `I_{k-r, r+m} × I_{r-1, m}` onto `[α_{k,m}(r), β_{k,m}(r)]`.
pub fn concat_map(
    k: usize,
    m: u32,
    r: usize,
    lam: &Partition,
    lam2: &Partition,
) -> Result<Partition> {
    if r == 0 || r > k {
        return Err(Error::IndexOutOfRange { index: r, max: k });
    }
    if !in_staircase_interval(lam, k - r, r as u32 + m) {
        return Err(Error::Precondition(format!(
            "({lam}) is not in I_({},{})",
            k - r,
            r as u32 + m
        )));
    }
    if !in_staircase_interval(lam2, r - 1, m) {
        return Err(Error::Precondition(format!(
            "({lam2}) is not in I_({},{m})",
            r - 1
        )));
    }
    let mut parts = Vec::with_capacity(k);
    parts.push(k as u32 + m);
    parts.extend_from_slice(lam.parts());
    parts.extend_from_slice(lam2.parts());
    Ok(Partition::from_decreasing(parts))
}

/// `C(2k, k) / (k+1)`.
pub fn catalan(k: u64) -> num_bigint::BigUint {
    let mut c = num_bigint::BigUint::from(1u32);
    for i in 0..k {
        c = c * (2 * (2 * i + 1)) / (i + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("5,5,4,2,2").parts(), &[5, 5, 4, 2, 2]);
        assert_eq!(p("").to_string(), "");
        assert_eq!(p("3,1,0").to_string(), "3,1");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn containment() {
        assert!(contains(&Partition::empty(), &p("2,1")));
        assert!(contains(&p("3,2"), &p("5,3,2,1")));
        assert!(!contains(&p("2,2"), &p("3,1")));
        assert!(!contains(&p("1,1,1"), &p("3,1")));
    }

    #[test]
    fn rho_shifts() {
        assert_eq!(rho(&p("2,1"), 1).unwrap(), p("1"));
        assert_eq!(rho(&p("10,8,7"), 7).unwrap(), p("3,1"));
        assert_eq!(rho(&p("5,5"), 2).unwrap(), p("3,3"));
        assert!(rho(&p("3,1"), 4).is_err());
    }

    #[test]
    fn slicing() {
        let lam = p("5,4,3,3,2,2");
        assert_eq!(slice(&lam, 3).unwrap(), (p("5,4,3"), p("3,2,2")));
        assert_eq!(slice(&lam, 0).unwrap(), (Partition::empty(), lam.clone()));
        assert_eq!(slice(&lam, 6).unwrap(), (lam.clone(), Partition::empty()));
        assert!(slice(&lam, 7).is_err());
    }

    #[test]
    fn sum_split_examples() {
        let (mu, lam) = (p("3,2,2,1"), p("5,5,4,2,2"));
        let (a, b) = lemma_sum_split(&mu, &lam, 3).unwrap();
        assert_eq!(a.clone().into_pair(), (p("3,2,2,1"), p("5,5,3,2,2")));
        // ν_3 = λ_3 = 4 forces ν_1, ν_2 >= 4, so the raised lower bound is
        // (4,4,4,1), not (3,3,3,1)
        assert_eq!(b.clone().into_pair(), (p("4,4,4,1"), p("5,5,4,2,2")));
        let whole = enumerate_interval(&mu, &lam).unwrap();
        let fixed: Vec<_> = whole.iter().filter(|nu| nu.part(2) == 4).cloned().collect();
        let free: Vec<_> = whole.iter().filter(|nu| nu.part(2) < 4).cloned().collect();
        assert_eq!(b.elements(), fixed);
        assert_eq!(a.elements(), free);

        let (a, b) = lemma_sum_split(&p("6"), &p("7"), 1).unwrap();
        assert_eq!(a.into_pair(), (p("6"), p("6")));
        assert_eq!(b.into_pair(), (p("7"), p("7")));

        let (a, b) = lemma_sum_split(&p("1"), &p("2,1"), 1).unwrap();
        assert_eq!(a.into_pair(), (p("1"), p("1,1")));
        assert_eq!(b.into_pair(), (p("2"), p("2,1")));
        // brute force: [(1),(2,1)] = {(2,1),(2),(1,1),(1)}
        let whole = enumerate_interval(&p("1"), &p("2,1")).unwrap();
        assert_eq!(whole, vec![p("2,1"), p("2"), p("1,1"), p("1")]);

        assert!(lemma_sum_split(&p("1"), &p("2,2"), 1).is_err());
        assert!(lemma_sum_split(&p("2"), &p("2,1"), 1).is_err());
        assert!(lemma_sum_split(&p("3"), &p("2,1"), 1).is_err());
    }

    #[test]
    fn sum2_split_examples() {
        let (a, b) = lemma_sum2_split(&p("1"), &p("2,2"), 1).unwrap();
        assert_eq!(a.into_pair(), (p("2"), p("2,2")));
        assert_eq!(b.into_pair(), (p("1"), p("1,1")));

        let (a, b) = lemma_sum2_split(&p("2,1"), &p("2,2"), 2).unwrap();
        assert_eq!(a.into_pair(), (p("2,2"), p("2,2")));
        assert_eq!(b.into_pair(), (p("2,1"), p("2,1")));

        let (a, b) = lemma_sum2_split(&p("3,1"), &p("3,3"), 2).unwrap();
        assert_eq!(a.into_pair(), (p("3,2"), p("3,3")));
        assert_eq!(b.into_pair(), (p("3,1"), p("3,1")));

        // rows below r that are already shorter than μ_r stay as they are
        let (a, b) = lemma_sum2_split(&p("2,1"), &p("3,1"), 1).unwrap();
        assert_eq!(a.into_pair(), (p("3,1"), p("3,1")));
        assert_eq!(b.into_pair(), (p("2,1"), p("2,1")));

        assert!(lemma_sum2_split(&p("2,2"), &p("3,3"), 2).is_err());
        assert!(lemma_sum2_split(&p("3,1"), &p("3,3"), 1).is_err());
    }

    #[test]
    fn partitions_by_length_and_rank() {
        assert_eq!(enumerate_partitions(2, 5), vec![p("4,1"), p("3,2")]);
        assert_eq!(enumerate_partitions(1, 7), vec![p("7")]);
        assert_eq!(
            enumerate_partitions(3, 6),
            vec![p("4,1,1"), p("3,2,1"), p("2,2,2")]
        );
        assert_eq!(enumerate_partitions(0, 0), vec![Partition::empty()]);
        assert!(enumerate_partitions(0, 3).is_empty());
        assert!(enumerate_partitions(4, 3).is_empty());
    }

    #[test]
    fn capped_partitions() {
        assert_eq!(enumerate_partitions_capped(2, 5, 3), vec![p("3,2")]);
        assert_eq!(
            enumerate_partitions_capped(3, 6, 6),
            enumerate_partitions(3, 6)
        );
        assert!(enumerate_partitions_capped(2, 7, 3).is_empty());
        assert_eq!(
            enumerate_partitions_capped(0, 0, 0),
            vec![Partition::empty()]
        );
    }

    #[test]
    fn intervals() {
        let ideal = enumerate_interval(&Partition::empty(), &p("2,1")).unwrap();
        assert_eq!(
            ideal,
            vec![p("2,1"), p("2"), p("1,1"), p("1"), Partition::empty()]
        );
        let lam = p("4,2,1");
        assert_eq!(enumerate_interval(&lam, &lam).unwrap(), vec![lam.clone()]);
        assert_eq!(
            enumerate_interval(&Partition::empty(), &p("2,2"))
                .unwrap()
                .len(),
            6
        );
        assert!(enumerate_interval(&p("2,2"), &p("3,1")).is_err());
    }

    #[test]
    fn alpha_beta_cases() {
        assert_eq!(alpha_beta(2, 0, 2).unwrap(), (p("2,1"), p("2,1")));
        assert_eq!(alpha_beta(2, 0, 1).unwrap(), (p("2,2"), p("2,2")));
        for k in 1..6 {
            for m in 0..3 {
                let (a, _) = alpha_beta(k, m, k).unwrap();
                assert_eq!(a, Partition::staircase(k, m));
                let (_, b) = alpha_beta(k, m, 1).unwrap();
                assert_eq!(b, Partition::rectangle(m + k as u32, k));
                for r in 1..=k {
                    let (a, b) = alpha_beta(k, m, r).unwrap();
                    assert!(contains(&a, &b));
                }
            }
        }
        assert!(alpha_beta(3, 0, 0).is_err());
        assert!(alpha_beta(3, 0, 4).is_err());
    }

    #[test]
    fn staircase_intervals() {
        for m in 0..4 {
            assert_eq!(
                enumerate_staircase_interval(1, m),
                vec![p(&(m + 1).to_string())]
            );
        }
        assert_eq!(
            enumerate_staircase_interval(3, 0),
            vec![p("3,3,3"), p("3,3,2"), p("3,3,1"), p("3,2,2"), p("3,2,1")]
        );
        assert_eq!(enumerate_staircase_interval(4, 2).len(), 14);
        assert_eq!(enumerate_staircase_interval(0, 5), vec![Partition::empty()]);
    }

    #[test]
    fn decomposition_examples() {
        let blocks = decompose_staircase_interval(2, 0);
        assert_eq!(blocks[0].elements(), vec![p("2,2")]);
        assert_eq!(blocks[1].elements(), vec![p("2,1")]);
        let blocks = decompose_staircase_interval(1, 4);
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].elements(), vec![p("5")]);
        let blocks = decompose_staircase_interval(5, 1);
        let total: usize = blocks.iter().map(|b| b.elements().len()).sum();
        assert_eq!(blocks.len(), 5);
        assert_eq!(total, 42);
    }

    #[test]
    fn concat_examples() {
        let e = Partition::empty();
        assert_eq!(concat_map(2, 0, 1, &p("2"), &e).unwrap(), p("2,2"));
        assert_eq!(concat_map(2, 0, 2, &e, &p("1")).unwrap(), p("2,1"));
        let img = concat_map(3, 0, 1, &p("3,2"), &e).unwrap();
        assert_eq!(img, p("3,3,2"));
        let (a, b) = alpha_beta(3, 0, 1).unwrap();
        assert!(enumerate_interval(&a, &b).unwrap().contains(&img));
        assert!(concat_map(2, 0, 1, &p("1"), &e).is_err());
        assert!(concat_map(2, 0, 2, &e, &p("2")).is_err());
    }

    #[test]
    fn catalan_numbers() {
        let c: Vec<u64> = (0..8).map(|k| catalan(k).try_into().unwrap()).collect();
        assert_eq!(c, vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }
}
