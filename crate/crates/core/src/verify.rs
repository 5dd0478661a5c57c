//! End-to-end identity checks.
//!
//! Each function sweeps a parameter range, compares two independent routes
//! exactly, and stops at the first disagreement. The command-line `verify`
//! subcommand and the acceptance tests both go through here.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::counts::{b_direct, b_recursive, g_k, g_k_from_b};
use crate::partition::{
    alpha_beta, catalan, concat_map, contains, decompose_staircase_interval, enumerate_interval,
    enumerate_partitions, enumerate_staircase_interval, lemma_sum2_split, lemma_sum_split, rho,
    slice, Partition,
};
use crate::rankpoly::{
    gaussian_poly, global_memo, interval_count, rank_gen_poly, rank_poly_by_enumeration,
};
use crate::rational::to_fraction_string;
use crate::series::{
    dk_product_check, geometric_factor, p_exponents, qk_direct, qk_last_part,
    qk_last_part_substituted, qk_recursive_all, qk_xm, recursion_rhs, specialize_y0,
    verify_xm_recursion, y0_product_formula, MultiSeries,
};
use crate::ypoly::YPoly;

/// Successful sweep: how many individual identities were checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summary {
    pub target: &'static str,
    pub checks: u64,
    pub notes: Vec<String>,
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ok, {} checks", self.target, self.checks)?;
        for n in &self.notes {
            write!(f, "\n  {n}")?;
        }
        Ok(())
    }
}

/// First identity that failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub target: &'static str,
    pub message: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: counterexample: {}", self.target, self.message)
    }
}

pub type Outcome = std::result::Result<Summary, Counterexample>;

struct Tally {
    target: &'static str,
    checks: u64,
    notes: Vec<String>,
}

impl Tally {
    fn new(target: &'static str) -> Self {
        Tally {
            target,
            checks: 0,
            notes: Vec::new(),
        }
    }

    fn check(
        &mut self,
        ok: bool,
        msg: impl FnOnce() -> String,
    ) -> std::result::Result<(), Counterexample> {
        self.checks += 1;
        if ok {
            Ok(())
        } else {
            Err(Counterexample {
                target: self.target,
                message: msg(),
            })
        }
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }

    fn done(self) -> Outcome {
        Ok(Summary {
            target: self.target,
            checks: self.checks,
            notes: self.notes,
        })
    }
}

/// Every partition of rank at most `max_rank`, any length.
pub fn partitions_up_to_rank(max_rank: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=max_rank {
        for k in 0..=n as usize {
            out.extend(enumerate_partitions(k, n));
        }
    }
    out
}

/// Gaussian polynomials against the rank polynomials of rectangles, and
/// their palindromy, for `n ≤ max_n`, `k ≤ max_k`.
pub fn gaussian(max_n: u32, max_k: usize) -> Outcome {
    let mut t = Tally::new("gaussian");
    for n in 0..=max_n {
        for k in 0..=max_k {
            let g = gaussian_poly(n as usize, k).map_err(|e| Counterexample {
                target: "gaussian",
                message: format!("n={n} k={k}: {e}"),
            })?;
            let rect = Partition::rectangle(n, k);
            let p = rank_gen_poly(&Partition::empty(), &rect).expect("∅ ≤ λ");
            t.check(p == g, || {
                format!("P_({rect}) = {p} but Gaussian({n},{k}) = {g}")
            })?;
            t.check(g.is_palindromic(), || {
                format!("Gaussian({n},{k}) = {g} not palindromic")
            })?;
        }
    }
    t.done()
}

/// For every `λ` with `|λ| ≤ max_rank` and every `μ ≤ λ`: the recursive
/// rank polynomial equals brute-force enumeration, both interval splits are
/// disjoint unions with additive polynomials, the row factorisation holds
/// wherever `μ_r = λ_r`, and the product-sum expansion of `P_λ` holds term
/// by term.
pub fn lemmas(max_rank: u64) -> Outcome {
    let mut t = Tally::new("lemmas");
    let poly = |mu: &Partition, lam: &Partition| rank_gen_poly(mu, lam).expect("contained");
    for lambda in partitions_up_to_rank(max_rank) {
        let ideal = enumerate_interval(&Partition::empty(), &lambda).expect("∅ ≤ λ");
        let count = interval_count(&lambda);
        t.check(count == ideal.len().into(), || {
            format!(
                "#[∅,({lambda})] = {count}, enumeration gives {}",
                ideal.len()
            )
        })?;
        for mu in &ideal {
            let p = poly(mu, &lambda);
            let brute = rank_poly_by_enumeration(mu, &lambda).expect("contained");
            t.check(p == brute, || {
                format!("P_({mu}),({lambda}) = {p}, enumeration gives {brute}")
            })?;
            let size = global_memo().interval_size(mu, &lambda).expect("contained");
            t.check(BigInt::from(size.clone()) == p.eval_one(), || {
                format!("#[({mu}),({lambda})] = {size} but P(1) = {}", p.eval_one())
            })?;
            check_sum_splits(&mut t, mu, &lambda, &poly)?;
            check_row_products(&mut t, mu, &lambda, &poly)?;
        }
        check_product_sum(&mut t, &lambda, &poly)?;
    }
    t.done()
}

fn disjoint_union(whole: &[Partition], a: &[Partition], b: &[Partition]) -> bool {
    let sa: HashSet<&Partition> = a.iter().collect();
    let sb: HashSet<&Partition> = b.iter().collect();
    let sw: HashSet<&Partition> = whole.iter().collect();
    sa.is_disjoint(&sb) && sa.len() + sb.len() == sw.len() && sa.union(&sb).all(|p| sw.contains(p))
}

fn check_sum_splits(
    t: &mut Tally,
    mu: &Partition,
    lambda: &Partition,
    poly: &impl Fn(&Partition, &Partition) -> YPoly,
) -> std::result::Result<(), Counterexample> {
    let whole = enumerate_interval(mu, lambda).expect("contained");
    let p = poly(mu, lambda);
    for r in 1..=lambda.len() {
        for (name, split) in [
            ("remove-box", lemma_sum_split(mu, lambda, r)),
            ("add-box", lemma_sum2_split(mu, lambda, r)),
        ] {
            let Ok((a, b)) = split else { continue };
            let (ea, eb) = (a.elements(), b.elements());
            t.check(disjoint_union(&whole, &ea, &eb), || {
                format!("{name} split of [({mu}),({lambda})] at r={r} into {a} and {b} is not a partition of the interval")
            })?;
            let sum = &poly(a.mu(), a.lambda()) + &poly(b.mu(), b.lambda());
            t.check(sum == p, || {
                format!("{name} split of [({mu}),({lambda})] at r={r}: {sum} != {p}")
            })?;
        }
    }
    Ok(())
}

fn check_row_products(
    t: &mut Tally,
    mu: &Partition,
    lambda: &Partition,
    poly: &impl Fn(&Partition, &Partition) -> YPoly,
) -> std::result::Result<(), Counterexample> {
    let p = poly(mu, lambda);
    for r in 1..=lambda.len() {
        if mu.part(r - 1) != lambda.part(r - 1) {
            continue;
        }
        let (mu_head, mu_tail) = slice(mu, r.min(mu.len())).expect("in range");
        let (lam_head, lam_tail) = slice(lambda, r).expect("in range");
        let prod = &poly(&mu_head, &lam_head) * &poly(&mu_tail, &lam_tail);
        t.check(prod == p, || {
            format!("row factorisation of [({mu}),({lambda})] at r={r}: {prod} != {p}")
        })?;
    }
    Ok(())
}

fn check_product_sum(
    t: &mut Tally,
    lambda: &Partition,
    poly: &impl Fn(&Partition, &Partition) -> YPoly,
) -> std::result::Result<(), Counterexample> {
    let k = lambda.len();
    if k == 0 {
        return Ok(());
    }
    let e = Partition::empty();
    // μ^r: λ in rows 1..=r, λ - 1 below
    let mu_r = |r: usize| {
        Partition::new(
            (0..k)
                .map(|i| {
                    if i < r {
                        lambda.part(i)
                    } else {
                        lambda.part(i) - 1
                    }
                })
                .collect(),
        )
        .expect("decreasing")
    };
    let rho_lam = rho(lambda, 1).expect("parts >= 1");
    t.check(mu_r(0) == rho_lam && mu_r(k) == *lambda, || {
        format!("μ^0, μ^k endpoints wrong for ({lambda})")
    })?;
    let mut total = poly(&e, &rho_lam);
    for r in 1..=k {
        let lower = Partition::rectangle(lambda.part(r - 1), r);
        let upper = mu_r(r);
        let step = poly(&lower, &upper);
        let chain = &poly(&e, &mu_r(r - 1)) + &step;
        t.check(chain == poly(&e, &upper), || {
            format!(
                "P_μ^{r} != P_μ^{} + P_(({lower}),({upper})) for λ=({lambda})",
                r - 1
            )
        })?;
        if r < k {
            let (head, tail) = slice(lambda, r).expect("in range");
            let factored = &poly(&lower, &head) * &poly(&e, &rho(&tail, 1).expect("parts >= 1"));
            t.check(factored == step, || {
                format!(
                    "term r={r} of the product-sum expansion of ({lambda}): {factored} != {step}"
                )
            })?;
        }
        total += &step;
    }
    t.check(total == poly(&e, lambda), || {
        format!("product-sum expansion of ({lambda}) sums to {total}")
    })?;
    Ok(())
}

/// `Q_j` from the recursion equals `Q_j` from the definition for
/// `j = 1..=k`, plus the recursion in cleared form, the refinement by last
/// part, and the `y = 0` specialisation.
pub fn recursion(k: usize, trunc: u32) -> Outcome {
    let mut t = Tally::new("recursion");
    if trunc < k as u32 {
        return Err(Counterexample {
            target: "recursion",
            message: format!("truncation {trunc} below k = {k}"),
        });
    }
    let direct: Vec<MultiSeries> = (0..=k).map(|j| qk_direct(j, trunc)).collect();
    let recursive = qk_recursive_all(k, trunc);
    for j in 1..=k {
        t.check(recursive[j] == direct[j], || {
            format!("Q_{j} from the recursion differs from the definition at truncation {trunc}")
        })?;
        // (1 - p_j) Q_j = rhs, no series inversion
        let one_minus = &MultiSeries::one(j, trunc) - &MultiSeries::p_monomial(j, trunc, j, 0);
        let lhs = &one_minus * &direct[j];
        t.check(lhs == recursion_rhs(j, trunc, &direct), || {
            format!("cleared recursion for Q_{j} fails at truncation {trunc}")
        })?;
        t.check(
            specialize_y0(j, trunc) == y0_product_formula(j, trunc),
            || format!("Q_{j}(x, 0) differs from p_j ∏ 1/(1 - p_m)"),
        )?;
        check_last_part_identities(&mut t, j, trunc, &direct)?;
    }
    t.note(format!("k = 1..={k}, truncation {trunc}"));
    t.done()
}

fn check_last_part_identities(
    t: &mut Tally,
    k: usize,
    trunc: u32,
    direct: &[MultiSeries],
) -> std::result::Result<(), Counterexample> {
    let lift = |s: &MultiSeries| s.embed(k).truncate(trunc);
    let lower_sum = |upto: usize| {
        direct[..upto]
            .iter()
            .fold(MultiSeries::zero(k, trunc), |acc, q| &acc + &lift(q))
    };
    let p_k = p_exponents(k, k);
    let mut x_k = vec![0; k];
    x_k[k - 1] = 1;

    // Q_{k,1} = x_k Q_{k-1} + y^k p_k Σ_{j<k} Q_j
    let rhs = &lift(&direct[k - 1]).mul_monomial(&x_k, 0) + &lower_sum(k).mul_monomial(&p_k, k);
    t.check(qk_last_part(k, 1, trunc) == rhs, || {
        format!("Q_({k},1) identity fails")
    })?;

    let max_m = (trunc / k as u32).min(3);
    for m in 2..=max_m {
        let in_class = |f: &dyn Fn(&Partition) -> YPoly| {
            let mut s = MultiSeries::zero(k, trunc);
            for n in 0..=u64::from(trunc) {
                for lam in enumerate_partitions(k, n) {
                    if lam.last() == m {
                        s.add_term(lam.parts().to_vec(), &f(&lam));
                    }
                }
            }
            s
        };
        let e = Partition::empty();

        // Σ P_{ρ(λ)} x^λ = p_k Q_{k,m-1}
        let first = in_class(&|lam| rank_gen_poly(&e, &rho(lam, 1).unwrap()).unwrap());
        let expect = qk_last_part(k, m - 1, trunc).mul_monomial(&p_k, 0);
        t.check(first == expect, || {
            format!("first summand identity fails for k={k} m={m}")
        })?;

        // Σ P_{(m)^k, λ} x^λ = (y^k p_k)^m Σ_{i<k} Q_i
        let rect = Partition::rectangle(m, k);
        let second = in_class(&|lam| rank_gen_poly(&rect, lam).unwrap());
        let pk_m: Vec<u32> = p_k.iter().map(|a| a * m).collect();
        let expect = lower_sum(k).mul_monomial(&pk_m, k * m as usize);
        t.check(second == expect, || {
            format!("second summand identity fails for k={k} m={m}")
        })?;

        // third summand, one r at a time
        for r in 1..k {
            let third = in_class(&|lam| {
                let (head, tail) = slice(lam, r).unwrap();
                let lower = Partition::rectangle(lam.part(r - 1), r);
                &rank_gen_poly(&lower, &head).unwrap()
                    * &rank_gen_poly(&e, &rho(&tail, 1).unwrap()).unwrap()
            });
            let geo = geometric_factor(&p_exponents(k, r), r, trunc).expect("r >= 1");
            let sub = qk_last_part_substituted(k - r, m - 1, r, trunc);
            let expect = (&(&geo * &lower_sum(r)) * &sub).mul_monomial(&p_k, r);
            t.check(third == expect, || {
                format!("third summand identity fails for k={k} m={m} r={r}")
            })?;
        }
    }
    Ok(())
}

/// `(x_1 + (x_1 - x_1^2) y)`, the numerator of `Q_1`.
pub fn printed_q1_numerator(trunc: u32) -> MultiSeries {
    let mut s = MultiSeries::zero(1, trunc);
    s.add_term(vec![1], &YPoly::from_i64s(&[1, 1]));
    s.add_term(vec![2], &YPoly::from_i64s(&[0, -1]));
    s
}

/// The numerator of `Q_2` over `D_2`.
pub fn printed_q2_numerator(trunc: u32) -> MultiSeries {
    let mut s = MultiSeries::zero(2, trunc);
    s.add_term(vec![1, 1], &YPoly::from_i64s(&[1, 1, 1]));
    s.add_term(vec![2, 1], &YPoly::from_i64s(&[0, -1]));
    s.add_term(vec![2, 2], &YPoly::from_i64s(&[0, -1, -1, -1]));
    s.add_term(vec![3, 3], &YPoly::from_i64s(&[0, 0, 0, 1]));
    s
}

/// `Q_1 = (x_1 + (x_1 - x_1^2) y) / ((1 - x_1)(1 - x_1 y))`, expanded.
pub fn printed_q1_closed_form(trunc: u32) -> MultiSeries {
    [(vec![1], 0), (vec![1], 1)]
        .iter()
        .fold(printed_q1_numerator(trunc), |acc, (mono, yp)| {
            &acc * &geometric_factor(mono, *yp, trunc).expect("positive degree")
        })
}

/// `Q_2` over `(1-x_1)(1-x_1x_2)(1-x_1y)(1-x_1x_2y)(1-x_1x_2y^2)`, expanded.
pub fn printed_q2_closed_form(trunc: u32) -> MultiSeries {
    [
        (vec![1, 0], 0),
        (vec![1, 1], 0),
        (vec![1, 0], 1),
        (vec![1, 1], 1),
        (vec![1, 1], 2),
    ]
    .iter()
    .fold(printed_q2_numerator(trunc), |acc, (mono, yp)| {
        &acc * &geometric_factor(mono, *yp, trunc).expect("positive degree")
    })
}

/// `Q_k · D_k` is a polynomial: its truncation stops below `trunc` and does
/// not change when recomputed at `trunc + k`, and for `k = 1, 2` it equals
/// the known numerators.
pub fn denominator(k: usize, trunc: u32) -> Outcome {
    let mut t = Tally::new("denominator");
    for j in 1..=k {
        let report = dk_product_check(j, trunc);
        let wider = dk_product_check(j, trunc + j as u32);
        match j {
            1 => t.check(report.product == printed_q1_numerator(trunc), || {
                "Q_1 · D_1 differs from x_1 + (x_1 - x_1^2) y".into()
            })?,
            2 => t.check(report.product == printed_q2_numerator(trunc), || {
                "Q_2 · D_2 differs from the known numerator".into()
            })?,
            _ => {}
        }
        t.check(report.stabilized(), || {
            format!(
                "Q_{j} · D_{j} has a term of degree {trunc} at truncation {trunc}; no stabilization seen"
            )
        })?;
        t.check(
            wider.product.truncate(trunc) == report.product
                && wider.max_degree == report.max_degree,
            || {
                format!(
                    "Q_{j} · D_{j} gains terms between truncation {trunc} and {}",
                    trunc + j as u32
                )
            },
        )?;
        t.note(format!(
            "k={j}: Q_k·D_k has degree {}, {} terms",
            report.max_degree.map_or("-".into(), |d| d.to_string()),
            report.product.len()
        ));
    }
    t.done()
}

/// The single-variable recursion for `Q_k(X_m)` through `x^trunc`, and
/// `qk_xm` against the `X_m` collapse of `Q_k`.
pub fn xm(max_k: usize, max_m: u32, trunc: u32) -> Outcome {
    let mut t = Tally::new("xm");
    for k in 1..=max_k {
        for m in 0..=max_m {
            let report = verify_xm_recursion(k, m, trunc);
            t.check(report.holds(), || format!("{report:?}"))?;
            let small = trunc.min(20);
            let collapsed = qk_direct(k, small).collapse(m, &BigInt::one(), small as usize + 1);
            let coeffs: Vec<BigInt> = qk_xm(k, m, small).into_iter().map(BigInt::from).collect();
            t.check(collapsed == coeffs, || {
                format!("Q_{k}(X_{m}) coefficients differ from the collapsed series")
            })?;
        }
    }
    t.done()
}

/// The staircase interval splits into its `α/β` blocks, each block is the
/// bijective image of the concatenation map, and `|I_{k,m}|` is Catalan.
pub fn decomposition(max_k: usize, max_m: u32, catalan_k: usize, catalan_m: u32) -> Outcome {
    let mut t = Tally::new("decomposition");
    for k in 1..=max_k {
        for m in 0..=max_m {
            let whole = enumerate_staircase_interval(k, m);
            let whole_set: HashSet<&Partition> = whole.iter().collect();
            let mut seen: HashSet<Partition> = HashSet::new();
            for (r, block) in (1..=k).zip(decompose_staircase_interval(k, m)) {
                let elems = block.elements();
                for e in &elems {
                    t.check(whole_set.contains(e) && seen.insert(e.clone()), || {
                        format!("({e}) in block r={r} of I_({k},{m}) is outside or repeated")
                    })?;
                }
                let left = enumerate_staircase_interval(k - r, r as u32 + m);
                let right = enumerate_staircase_interval(r - 1, m);
                let mut image = HashSet::new();
                for a in &left {
                    for b in &right {
                        let c = concat_map(k, m, r, a, b).map_err(|e| Counterexample {
                            target: "decomposition",
                            message: e.to_string(),
                        })?;
                        let (lo, hi) = alpha_beta(k, m, r).expect("in range");
                        t.check(contains(&lo, &c) && contains(&c, &hi), || {
                            format!("concatenation ({a}) ++ ({b}) = ({c}) leaves block r={r} of I_({k},{m})")
                        })?;
                        t.check(image.insert(c.clone()), || {
                            format!("concatenation not injective at ({c}), k={k} m={m} r={r}")
                        })?;
                    }
                }
                t.check(image.len() == elems.len(), || {
                    format!(
                        "concatenation image has {} elements, block r={r} of I_({k},{m}) has {}",
                        image.len(),
                        elems.len()
                    )
                })?;
            }
            t.check(seen.len() == whole.len(), || {
                format!(
                    "blocks of I_({k},{m}) cover {} of {} elements",
                    seen.len(),
                    whole.len()
                )
            })?;
        }
    }
    for k in 0..=catalan_k {
        for m in 0..=catalan_m {
            let n = enumerate_staircase_interval(k, m).len();
            t.check(catalan(k as u64) == n.into(), || {
                format!("|I_({k},{m})| = {n}, Catalan({k}) = {}", catalan(k as u64))
            })?;
        }
    }
    t.done()
}

/// `B(k,m) = B̃(k,m)` for `k + m ≤ max_sum`, and both expressions for `G_k`
/// agree for `1 ≤ k ≤ max_sum`.
pub fn bkm(max_sum: u32) -> Outcome {
    let mut t = Tally::new("bkm");
    for k in 0..=max_sum as usize {
        for m in 0..=max_sum - k as u32 {
            let (rec, dir) = (b_recursive(k, m), b_direct(k, m));
            t.check(rec == dir, || {
                format!(
                    "B({k},{m}) = {} by recursion, {} by staircase sum",
                    to_fraction_string(&rec),
                    to_fraction_string(&dir)
                )
            })?;
        }
    }
    for k in 1..=max_sum as usize {
        let (a, b) = (g_k(k).expect("k >= 1"), g_k_from_b(k).expect("k >= 1"));
        t.check(a == b, || {
            format!(
                "G_{k} = {} but k!(k-1)!/(2k-1)! B(k,0) = {}",
                to_fraction_string(&a),
                to_fraction_string(&b)
            )
        })?;
    }
    t.done()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        gaussian(3, 3).unwrap();
        lemmas(6).unwrap();
        recursion(2, 8).unwrap();
        denominator(2, 10).unwrap();
        xm(2, 1, 15).unwrap();
        decomposition(3, 1, 4, 1).unwrap();
        bkm(5).unwrap();
    }

    #[test]
    fn printed_closed_forms() {
        assert_eq!(printed_q1_closed_form(10), qk_direct(1, 10));
        assert_eq!(printed_q2_closed_form(10), qk_direct(2, 10));
    }

    #[test]
    fn recursion_rejects_short_truncation() {
        assert!(recursion(3, 2).is_err());
    }

    #[test]
    fn counterexample_reports_target() {
        let e = denominator(3, 6).unwrap_err();
        assert!(denominator(3, 14).is_err());
        assert_eq!(e.target, "denominator");
        assert!(e.to_string().contains("no stabilization"));
    }
}
