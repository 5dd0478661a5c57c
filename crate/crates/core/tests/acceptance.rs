//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p young-lattice --test acceptance -- --nocapture`.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use young_lattice::counts::{
    b_direct, b_recursive, convergence_table, g_k, g_k_from_b, ideal_total,
};
use young_lattice::rational::{parse_fraction, Rational};
use young_lattice::series::{
    dk_product_check, qk_direct, qk_recursive, qk_xm, verify_xm_recursion,
};
use young_lattice::verify;

fn report(id: u32, name: &str, ok: bool, elapsed: Duration, limit: Option<Duration>, detail: &str) {
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let verdict = if ok && in_time { "PASS" } else { "FAIL" };
    let budget = limit.map_or(String::new(), |l| format!(" (limit {:.0?})", l));
    println!("criterion {id:>2} {verdict} {name}: {detail} [{elapsed:.2?}{budget}]");
    assert!(ok, "criterion {id} failed: {detail}");
    assert!(in_time, "criterion {id} exceeded its time limit");
}

fn q(s: &str) -> Rational {
    parse_fraction(s).unwrap()
}

const TABLE: [&str; 7] = [
    "1",
    "1/8",
    "49/6480",
    "1597/5806080",
    "104797/15552000000",
    "30867157/258660864000000",
    "8883026474947/5538476941949952000000",
];

#[test]
fn c01_growth_constant_table() {
    let t = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_yl"))
        .args(["gk", "--max-k", "7"])
        .output()
        .expect("yl runs");
    let text = String::from_utf8(out.stdout).unwrap();
    let got: Vec<&str> = text
        .lines()
        .map(|l| l.split(", ").nth(1).unwrap_or(""))
        .collect();
    let ok = out.status.success() && got == TABLE;
    report(
        1,
        "G_1..G_7 table",
        ok,
        t.elapsed(),
        Some(Duration::from_secs(10)),
        &format!("G_7 = {}", got.last().unwrap_or(&"")),
    );
}

#[test]
fn c02_recursion_matches_definition() {
    let t = Instant::now();
    let mut ok = true;
    for (max_k, trunc) in [(4, 10), (3, 12)] {
        for k in 1..=max_k {
            ok &= qk_recursive(k, trunc) == qk_direct(k, trunc);
        }
    }
    report(
        2,
        "Q_k recursion = definition",
        ok,
        t.elapsed(),
        Some(Duration::from_secs(120)),
        "k<=4 at N=10, k<=3 at N=12",
    );
}

#[test]
fn c03_closed_forms() {
    let t = Instant::now();
    let q1 = verify::printed_q1_closed_form(12) == qk_direct(1, 12);
    let q2 = verify::printed_q2_closed_form(12) == qk_direct(2, 12);
    let n1 = dk_product_check(1, 8).product == verify::printed_q1_numerator(8);
    let n2 = dk_product_check(2, 10).product == verify::printed_q2_numerator(10);
    report(
        3,
        "Q_1, Q_2 closed forms and numerators",
        q1 && q2 && n1 && n2,
        t.elapsed(),
        None,
        &format!("Q1 {q1}, Q2 {q2}, Q1·D1 {n1}, Q2·D2 {n2}"),
    );
}

fn sweep(id: u32, name: &str, limit: Option<Duration>, f: impl FnOnce() -> verify::Outcome) {
    let t = Instant::now();
    let outcome = f();
    let detail = match &outcome {
        Ok(s) => format!("{} checks", s.checks),
        Err(c) => c.to_string(),
    };
    report(id, name, outcome.is_ok(), t.elapsed(), limit, &detail);
}

#[test]
fn c04_gaussian_identity() {
    sweep(4, "Gaussian polynomials, n,k <= 6", None, || {
        verify::gaussian(6, 6)
    });
}

#[test]
fn c05_oracle_and_lemmas() {
    sweep(
        5,
        "rank polynomial oracle and split lemmas, |λ| <= 10",
        Some(Duration::from_secs(300)),
        || verify::lemmas(10),
    );
}

#[test]
fn c06_b_constants() {
    let t = Instant::now();
    let mut ok = true;
    let mut checks = 0;
    for k in 0..=8usize {
        for m in 0..=(8 - k as u32) {
            ok &= b_recursive(k, m) == b_direct(k, m);
            checks += 1;
        }
    }
    for k in 1..=7 {
        ok &= g_k(k).unwrap() == g_k_from_b(k).unwrap();
        checks += 1;
    }
    report(
        6,
        "B recursion = staircase sum, G via B",
        ok,
        t.elapsed(),
        None,
        &format!("{checks} checks"),
    );
}

#[test]
fn c07_staircase_decomposition() {
    sweep(
        7,
        "staircase blocks, concatenation bijection, Catalan counts",
        None,
        || verify::decomposition(5, 2, 7, 3),
    );
}

#[test]
fn c08_single_variable_recursion() {
    let t = Instant::now();
    let mut failures = Vec::new();
    for k in 1..=3 {
        for m in 0..=2 {
            let r = verify_xm_recursion(k, m, 30);
            if !r.holds() {
                failures.push(format!("{r:?}"));
            }
        }
    }
    let detail = if failures.is_empty() {
        "k<=3, m<=2 to x^30".to_string()
    } else {
        failures.join("; ")
    };
    report(
        8,
        "Q_k(X_m) recursion",
        failures.is_empty(),
        t.elapsed(),
        None,
        &detail,
    );
}

#[test]
fn c09_average_ideal_growth() {
    let t = Instant::now();
    let ns: Vec<u64> = (1..=60).chain([100, 300]).collect();
    let k1 = convergence_table(1, &ns).unwrap();
    let exact_k1 = k1.len() == ns.len()
        && k1.iter().all(|r| {
            let n = Rational::from_integer(BigInt::from(r.n));
            r.ratio == Rational::one() + Rational::one() / &n && r.average == &n + Rational::one()
        });

    let band = |k: usize, n: u64, lo: &str, hi: &str| {
        let rows = convergence_table(k, &[n / 3, n]).unwrap();
        let (early, late) = (&rows[0], &rows[1]);
        let in_band = late.ratio >= q(lo) && late.ratio <= q(hi);
        let quarter = late.distance_from_one() <= q("1/4");
        let closer = late.distance_from_one() < early.distance_from_one();
        (
            in_band && quarter && closer,
            format!(
                "k={k}: {} at n={}, {} at n={n}",
                early.ratio_decimal(),
                early.n,
                late.ratio_decimal()
            ),
        )
    };
    let (ok2, d2) = band(2, 300, "102/100", "1035/1000");
    let (ok3, d3) = band(3, 180, "112/100", "114/100");
    report(
        9,
        "A_{k,n} / (G_k n^k) convergence",
        exact_k1 && ok2 && ok3,
        t.elapsed(),
        Some(Duration::from_secs(600)),
        &format!("k=1 exact 1+1/n: {exact_k1}; {d2}; {d3}"),
    );
}

#[test]
fn c10_coefficients_across_modules() {
    let t = Instant::now();
    let mut ok = true;
    for k in 1..=3usize {
        for m in 0..=2 {
            let series = qk_xm(k, m, 20);
            for n in 0..=20u64 {
                ok &= ideal_total(k, n, m) == series[n as usize];
            }
        }
    }
    ok &= qk_xm(1, 0, 5)
        == (0..=5u32)
            .map(|n| BigUint::from(if n == 0 { 0 } else { n + 1 }))
            .collect::<Vec<_>>();
    report(
        10,
        "C^m_{k,n} = coefficients of Q_k(X_m)",
        ok,
        t.elapsed(),
        None,
        "k<=3, m<=2, n<=20",
    );
}
