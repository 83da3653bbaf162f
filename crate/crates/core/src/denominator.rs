//! Denominators of the Euler coefficients and of `E*_n(x) = E_n(x) - E_n(1)`.
//!
//! The closed form for the whole polynomial is `D(E*_n) = 2^{v2(n+1) - g(n)}`.
//! The per-coefficient formulas can produce a negative exponent when the
//! binomial carries more factors of two than `k + 1` (e.g. `n = 4, k = 1`
//! gives `v2(2) - v2(4) = -1` while `e_1(4) = -2`). A denominator is at
//! least 1, so every exponent here is clamped at 0; the `*_exponent`
//! functions expose the unclamped value.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_integer::Integer as _;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::euler::shifted_euler;
use crate::numeric::{binomial, bit_length, carries_base2, g, pow2, v2, Integer, Rational};
use crate::oeis::SequenceTable;
use crate::poly::Polynomial;

pub fn rational_denominator(x: &Rational) -> Integer {
    x.denom().clone()
}

/// Least common multiple of the coefficient denominators; 1 for zero.
pub fn poly_denominator(p: &Polynomial) -> Integer {
    p.coeffs()
        .iter()
        .fold(Integer::one(), |acc, c| acc.lcm(c.denom()))
}

fn check_odd_k(n: u64, k: u64) -> Result<()> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::out_of_range("coefficient k", k, "1 <= k <= n"));
    }
    if k.is_multiple_of(2) {
        return Err(Error::out_of_range("coefficient k", k, "k odd"));
    }
    Ok(())
}

fn clamped_pow2(e: i64) -> Integer {
    pow2(e.max(0) as u64)
}

/// Unclamped `v2(k+1) - v2(C(n,k))`.
pub fn coeff_denom_exponent(n: u64, k: u64) -> Result<i64> {
    check_odd_k(n, k)?;
    let c = binomial(n, k as i64);
    Ok(v2(&Integer::from(k + 1))? as i64 - v2(&c)? as i64)
}

/// Denominator of `e_k(n)` for odd `k`, `2^{max(0, v2(k+1) - v2(C(n,k)))}`.
pub fn coeff_denom_formula(n: u64, k: u64) -> Result<Integer> {
    coeff_denom_exponent(n, k).map(clamped_pow2)
}

/// Unclamped `v2(n+1) - v2(C(n+1,k+1)) - [k == n]`.
pub fn shifted_coeff_denom_exponent(n: u64, k: u64) -> Result<i64> {
    check_odd_k(n, k)?;
    let c = binomial(n + 1, k as i64 + 1);
    let delta = (k == n) as i64;
    Ok(v2(&Integer::from(n + 1))? as i64 - v2(&c)? as i64 - delta)
}

/// Denominator of the coefficient of `x^{n-k}` in `E*_n` for odd `k`.
pub fn shifted_coeff_denom_formula(n: u64, k: u64) -> Result<Integer> {
    shifted_coeff_denom_exponent(n, k).map(clamped_pow2)
}

/// `v2(n+1) - g(n)`, never negative.
pub fn closed_exponent(n: u64) -> u64 {
    let v = (n + 1).trailing_zeros() as u64;
    v - g(n) as u64
}

/// `2^{v2(n+1) - g(n)}`; 1 for `n = 0`.
pub fn shifted_poly_denom_closed(n: u64) -> Integer {
    pow2(closed_exponent(n))
}

/// Minimum over odd `k` in `[1, n]` of `t(n+1, k+1) + [k == n]`, with every
/// `k` that attains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarryMinimum {
    pub value: u32,
    pub attained_at: Vec<u64>,
}

pub fn carry_minimum(n: u64) -> Result<CarryMinimum> {
    if n == 0 {
        return Err(Error::out_of_range("carry form n", n, "n >= 1"));
    }
    let mut best = CarryMinimum {
        value: u32::MAX,
        attained_at: Vec::new(),
    };
    for k in (1..=n).step_by(2) {
        let t = carries_base2(n + 1, k + 1)? + (k == n) as u32;
        if t < best.value {
            best.value = t;
            best.attained_at.clear();
        }
        if t == best.value {
            best.attained_at.push(k);
        }
    }
    Ok(best)
}

/// Denominator of `E*_n` from the carry form:
/// `2^{v2(n+1) - min_k (t(n+1,k+1) + [k == n])}`, clamped at 0.
pub fn shifted_poly_denom_carry_form(n: u64) -> Result<Integer> {
    let min = carry_minimum(n)?;
    let v = (n + 1).trailing_zeros() as i64;
    Ok(clamped_pow2(v - min.value as i64))
}

/// Odd `k = 2^{u(n)-1} - 1` with `t(n+1, k+1) = 0` for `n >= 2` not of the
/// form `2^m - 1`; `u(n)` is the binary length of `n`. `None` otherwise.
pub fn non_mersenne_witness(n: u64) -> Option<u64> {
    if n < 2 || g(n) == 1 {
        return None;
    }
    let u = bit_length(n).ok()?;
    Some((1u64 << (u - 1)) - 1)
}

/// `n -> 2^{v2(n+1) - g(n)}` for `0 <= n <= max_n`.
pub fn luschny_sequence(max_n: u64) -> SequenceTable {
    (0..=max_n)
        .map(|n| (n, shifted_poly_denom_closed(n)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenomRecord {
    pub n: u64,
    /// lcm of the coefficient denominators of `E*_n`.
    pub direct: Integer,
    /// `2^{v2(n+1) - g(n)}`
    pub closed: Integer,
    pub exponent: u64,
    pub pass: bool,
    /// Coefficients of `E*_n`, kept only for failing records.
    pub coefficients: Option<Vec<Rational>>,
}

pub fn denom_record(n: u64) -> DenomRecord {
    let shifted = shifted_euler(n);
    let direct = poly_denominator(&shifted);
    let exponent = closed_exponent(n);
    let closed = pow2(exponent);
    let pass = direct == closed;
    DenomRecord {
        n,
        direct,
        closed,
        exponent,
        pass,
        coefficients: (!pass).then(|| shifted.into_coeffs()),
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub max_n: u64,
    pub records: Vec<DenomRecord>,
    pub passed: usize,
    pub failed: usize,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &DenomRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:>6}  {:>12}  {:>12}  {:>8}  status",
            "n", "direct", "closed", "exponent"
        );
        for r in &self.records {
            let status = if r.pass { "ok" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{:>6}  {:>12}  {:>12}  {:>8}  {status}",
                r.n, r.direct, r.closed, r.exponent
            );
        }
        for r in self.failures() {
            let _ = writeln!(out, "\nn = {}: coefficients of E*_n (ascending power)", r.n);
            for (i, c) in r.coefficients.iter().flatten().enumerate() {
                let _ = writeln!(out, "  {i}\t{c}");
            }
        }
        let _ = writeln!(
            out,
            "\nchecked n = 0..={}: {} passed, {} failed in {:.3}s",
            self.max_n,
            self.passed,
            self.failed,
            self.elapsed.as_secs_f64()
        );
        out
    }

    pub fn render_tsv(&self) -> String {
        let mut out = String::from("n\tdirect\tclosed\texponent\tpass\n");
        for r in &self.records {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                r.n, r.direct, r.closed, r.exponent, r.pass
            );
        }
        out
    }
}

/// Checks `D(E*_n) = 2^{v2(n+1) - g(n)}` for every `0 <= n <= max_n`.
pub fn verify_theorem(max_n: u64) -> VerificationReport {
    let start = Instant::now();
    let mut records: Vec<DenomRecord> = (0..=max_n).into_par_iter().map(denom_record).collect();
    records.sort_by_key(|r| r.n);
    let failed = records.iter().filter(|r| !r.pass).count();
    VerificationReport {
        max_n,
        passed: records.len() - failed,
        failed,
        records,
        elapsed: start.elapsed(),
    }
}
