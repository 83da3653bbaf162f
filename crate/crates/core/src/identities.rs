//! Exhaustive sweeps of the classical identities the denominator result rests
//! on. Each sweep counts the cases it checked and records every violation.

use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::denominator::{
    carry_minimum, closed_exponent, coeff_denom_exponent, coeff_denom_formula,
    non_mersenne_witness, poly_denominator, rational_denominator, shifted_coeff_denom_formula,
    shifted_poly_denom_carry_form, shifted_poly_denom_closed,
};
use crate::euler::{
    euler_at_zero, euler_coeff_explicit, euler_coeff_explicit_with, euler_poly_explicit, rat_n,
    shifted_euler, CoefficientForm, EulerRecurrence,
};
use crate::numeric::{carries_base2, pascal_rows, ratio, v2, Integer, Rational};
use crate::poly::Polynomial;
use crate::special::{bernoulli, vsc_decompose, vsc_primes};

/// Outcome of one identity sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub range: String,
    pub cases: usize,
    pub violations: Vec<String>,
}

impl IdentityCheck {
    fn new(name: &'static str, range: String) -> Self {
        IdentityCheck {
            name,
            range,
            cases: 0,
            violations: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn render_summary(checks: &[IdentityCheck]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<28}  {:<22}  {:>9}  {:>10}  status",
        "identity", "range", "cases", "violations"
    );
    for c in checks {
        let status = if c.passed() { "ok" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{:<28}  {:<22}  {:>9}  {:>10}  {status}",
            c.name,
            c.range,
            c.cases,
            c.violations.len()
        );
    }
    for c in checks.iter().filter(|c| !c.passed()) {
        let _ = writeln!(out, "\n{}:", c.name);
        for v in c.violations.iter().take(20) {
            let _ = writeln!(out, "  {v}");
        }
    }
    out
}

/// `count` rationals with numerators in `[-50, 50]` and denominators in `[1, 20]`.
pub fn random_points(count: usize, seed: u64) -> Vec<Rational> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| ratio(rng.gen_range(-50..=50), rng.gen_range(1..=20)))
        .collect()
}

fn recurrence_polys(max_n: u64) -> Vec<Polynomial> {
    EulerRecurrence::new().take(max_n as usize + 1).collect()
}

/// `(-1)^n E_n(-x) = 2 x^n - E_n(x)`.
pub fn reflection(max_n: u64, points: &[Rational]) -> IdentityCheck {
    let mut c = IdentityCheck::new("reflection", format!("n<={max_n}, {} pts", points.len()));
    for (n, e) in (0u64..).zip(recurrence_polys(max_n)) {
        for x in points {
            let mut lhs = e.evaluate(&-x);
            if n % 2 == 1 {
                lhs = -lhs;
            }
            let rhs = num_traits::pow(x.clone(), n as usize) * Integer::from(2) - e.evaluate(x);
            c.check(lhs == rhs, || format!("n={n} x={x}: {lhs} != {rhs}"));
        }
    }
    c
}

/// `E_n(0) = -E_n(1)` equals the Bernoulli closed form.
pub fn endpoints(max_n: u64) -> IdentityCheck {
    let mut c = IdentityCheck::new("endpoints", format!("1<=n<={max_n}"));
    for (n, e) in (0u64..).zip(recurrence_polys(max_n)).skip(1) {
        let closed = euler_at_zero(n).expect("n >= 1");
        let at0 = e.evaluate(&Rational::zero());
        let at1 = e.evaluate(&Rational::one());
        c.check(closed == at0 && at0 == -&at1, || {
            format!("n={n}: closed {closed}, E(0) {at0}, E(1) {at1}")
        });
    }
    c
}

/// `E_n'(x) = n E_{n-1}(x)`.
pub fn derivative(max_n: u64) -> IdentityCheck {
    let mut c = IdentityCheck::new("derivative", format!("1<=n<={max_n}"));
    let polys = recurrence_polys(max_n);
    for (n, w) in (1u64..).zip(polys.windows(2)) {
        let ok = w[1].derivative() == w[0].scale(&rat_n(n));
        c.check(ok, || format!("n={n}: E_n' != n E_(n-1)"));
    }
    c
}

/// `e_k(n) = n/(n-k) e_k(n-1)` for odd `k < n`.
pub fn ratio_recurrence(max_n: u64) -> IdentityCheck {
    let mut c = IdentityCheck::new("coefficient ratio", format!("odd k<n<={max_n}"));
    let polys = recurrence_polys(max_n);
    for (n, w) in (1u64..).zip(polys.windows(2)) {
        for k in (1..n).step_by(2) {
            let cur = w[1].coeff((n - k) as usize);
            let prev = w[0].coeff((n - 1 - k) as usize);
            let expect = prev * Rational::new(n.into(), (n - k).into());
            c.check(cur == expect, || format!("n={n} k={k}: {cur} != {expect}"));
        }
    }
    c
}

/// The coefficient of `x^{n-k}` vanishes for even `k >= 2`, and `E_n` is monic.
pub fn parity(max_n: u64) -> IdentityCheck {
    let mut c = IdentityCheck::new("even k vanish, monic", format!("n<={max_n}"));
    for (n, e) in (0u64..).zip(recurrence_polys(max_n)) {
        c.check(
            e.degree() == Some(n as usize) && e.leading_coeff().is_some_and(One::is_one),
            || format!("n={n}: not monic of degree n"),
        );
        for k in (2..=n).step_by(2) {
            let coeff = e.coeff((n - k) as usize);
            c.check(coeff.is_zero(), || format!("n={n} k={k}: {coeff} != 0"));
        }
    }
    c
}

/// `sign(e_k(n)) = (-1)^{(k+1)/2}` for odd `k <= n`.
pub fn sign_law(max_n: u64) -> IdentityCheck {
    let mut c = IdentityCheck::new("coefficient sign", format!("odd k<=n<={max_n}"));
    for (n, e) in (0u64..).zip(recurrence_polys(max_n)) {
        for k in (1..=n).step_by(2) {
            let coeff = e.coeff((n - k) as usize);
            let want_positive = k.div_ceil(2).is_multiple_of(2);
            let ok = !coeff.is_zero() && coeff.is_positive() == want_positive;
            c.check(ok, || format!("n={n} k={k}: e_k(n) = {coeff}"));
        }
    }
    c
}

/// Carries of `k + (n-k)` in base 2 equal `v2(C(n,k))`.
pub fn kummer(max_n: u64) -> IdentityCheck {
    let mut c = IdentityCheck::new("kummer carries", format!("0<=k<=n<={max_n}"));
    for (n, row) in (0u64..).zip(pascal_rows()).take(max_n as usize + 1) {
        for (k, binom) in (0u64..).zip(&row) {
            let t = carries_base2(n, k).expect("k <= n") as u64;
            let v = v2(binom).expect("binomial is nonzero");
            c.check(t == v, || format!("n={n} k={k}: carries {t}, v2 {v}"));
        }
    }
    c
}

/// `B_{2m} + sum 1/p` is an integer and `D(B_{2m}) = prod p`, `(p-1) | 2m`.
pub fn von_staudt_clausen(max_m: u64) -> IdentityCheck {
    let mut c = IdentityCheck::new("von Staudt-Clausen", format!("1<=m<={max_m}"));
    for m in 1..=max_m {
        let decomposition = vsc_decompose(m);
        c.check(decomposition.is_ok(), || {
            format!("m={m}: {decomposition:?}")
        });
        let b = bernoulli(2 * m).expect("2m >= 1");
        let product: Integer = vsc_primes(2 * m).into_iter().map(Integer::from).product();
        let odd = b.numer().bit(0);
        c.check(*b.denom() == product && odd, || {
            format!("m={m}: B_2m = {b}, prime product {product}")
        });
    }
    c
}

/// Bernoulli-form and recurrence-built `E_n` agree exactly.
pub fn route_equivalence(max_n: u64) -> IdentityCheck {
    let mut c = IdentityCheck::new("explicit = recurrence", format!("n<={max_n}"));
    for (n, e) in (0u64..).zip(recurrence_polys(max_n)) {
        let explicit = euler_poly_explicit(n);
        c.check(explicit == e, || {
            format!("n={n}: explicit {explicit} vs recurrence {e}")
        });
    }
    c
}

/// Bernoulli form and Stirling form of `e_k(n)` agree for odd `k`.
pub fn stirling_form(max_n: u64) -> IdentityCheck {
    let mut c = IdentityCheck::new("bernoulli = stirling form", format!("odd k<=n<={max_n}"));
    for n in 1..=max_n {
        for k in (1..=n).step_by(2) {
            let b = euler_coeff_explicit_with(n, k, CoefficientForm::Bernoulli);
            let s = euler_coeff_explicit_with(n, k, CoefficientForm::Stirling);
            c.check(b == s, || format!("n={n} k={k}: {b:?} vs {s:?}"));
        }
    }
    c
}

/// Clamped `2^{v2(k+1) - v2(C(n,k))}` is the true denominator of `e_k(n)`,
/// which has no odd prime factor.
pub fn coefficient_denominators(max_n: u64) -> IdentityCheck {
    let mut c = IdentityCheck::new("coefficient denominators", format!("odd k<=n<={max_n}"));
    for n in 1..=max_n {
        for k in (1..=n).step_by(2) {
            let actual = rational_denominator(&euler_coeff_explicit(n, k).expect("k <= n"));
            let formula = coeff_denom_formula(n, k).expect("odd k <= n");
            let power_of_two = (&actual & (&actual - 1u32)) == Integer::zero();
            c.check(actual == formula && power_of_two, || {
                format!("n={n} k={k}: actual {actual}, formula {formula}")
            });
        }
    }
    c
}

/// Clamped shifted-coefficient formula matches the coefficients of `E*_n`.
pub fn shifted_coefficient_denominators(max_n: u64) -> IdentityCheck {
    let mut c = IdentityCheck::new("shifted coeff denominators", format!("odd k<=n<={max_n}"));
    for n in 1..=max_n {
        let shifted = shifted_euler(n);
        for k in (1..=n).step_by(2) {
            let actual = rational_denominator(&shifted.coeff((n - k) as usize));
            let formula = shifted_coeff_denom_formula(n, k).expect("odd k <= n");
            c.check(actual == formula, || {
                format!("n={n} k={k}: actual {actual}, formula {formula}")
            });
        }
    }
    c
}

/// `v2(k+1) - v2(C(n,k)) = v2(n+1) - v2(C(n+1,k+1))`, unclamped.
pub fn valuation_shift(max_n: u64) -> IdentityCheck {
    let mut c = IdentityCheck::new("valuation shift", format!("odd k<=n<={max_n}"));
    let rows: Vec<Vec<Integer>> = pascal_rows().take(max_n as usize + 2).collect();
    for n in 1..=max_n {
        for k in (1..=n).step_by(2) {
            let left = v2(&Integer::from(k + 1)).unwrap() as i64
                - v2(&rows[n as usize][k as usize]).unwrap() as i64;
            let right = v2(&Integer::from(n + 1)).unwrap() as i64
                - v2(&rows[n as usize + 1][k as usize + 1]).unwrap() as i64;
            c.check(left == right, || format!("n={n} k={k}: {left} != {right}"));
        }
    }
    c
}

/// The carry-minimum form of `D(E*_n)` equals the closed form.
pub fn carry_form(max_n: u64) -> IdentityCheck {
    let mut c = IdentityCheck::new("carry form = closed form", format!("1<=n<={max_n}"));
    for n in 1..=max_n {
        let carry = shifted_poly_denom_carry_form(n).expect("n >= 1");
        let closed = shifted_poly_denom_closed(n);
        c.check(carry == closed, || {
            format!("n={n}: carry {carry}, closed {closed}")
        });
    }
    c
}

/// For `n = 2^m - 1` the carry minimum is 1 and `k = n` attains it.
pub fn mersenne_branch(max_m: u32) -> IdentityCheck {
    let mut c = IdentityCheck::new("mersenne branch", format!("1<=m<={max_m}"));
    for m in 1..=max_m {
        let n = (1u64 << m) - 1;
        let min = carry_minimum(n).expect("n >= 1");
        c.check(min.value == 1 && min.attained_at.contains(&n), || {
            format!("n={n}: {min:?}")
        });
    }
    c
}

/// For `n >= 2` not of the form `2^m - 1`, `k = 2^{u(n)-1} - 1` is odd,
/// below `n`, and `t(n+1, k+1) = 0`.
pub fn non_mersenne_branch(max_n: u64) -> IdentityCheck {
    let mut c = IdentityCheck::new("non-mersenne witness", format!("2<=n<={max_n}"));
    for n in (2..=max_n).filter(|&n| !(n + 1).is_power_of_two()) {
        let Some(k) = non_mersenne_witness(n) else {
            c.check(false, || format!("n={n}: no witness"));
            continue;
        };
        let t = carries_base2(n + 1, k + 1);
        c.check(k % 2 == 1 && k < n && t == Ok(0), || {
            format!("n={n} k={k}: t = {t:?}")
        });
    }
    c
}

/// `D(E*_n) = 2^{v2(n+1) - g(n)}` through the lcm of actual coefficients.
pub fn main_theorem(max_n: u64) -> IdentityCheck {
    let mut c = IdentityCheck::new("D(E*_n) closed form", format!("n<={max_n}"));
    for n in 0..=max_n {
        let direct = poly_denominator(&shifted_euler(n));
        let exponent = closed_exponent(n);
        let ok = direct == Integer::from(1u64) << exponent;
        c.check(ok, || {
            format!("n={n}: direct {direct}, exponent {exponent}")
        });
    }
    c
}

/// The sweeps behind the `identities` command.
pub fn run_identity_sweeps(max_n: u64, seed: u64) -> Vec<IdentityCheck> {
    let points = random_points(20, seed);
    vec![
        reflection(max_n, &points),
        endpoints(max_n),
        derivative(max_n),
        ratio_recurrence(max_n),
        parity(max_n),
        sign_law(max_n),
        kummer(max_n),
        von_staudt_clausen(max_n.max(1)),
    ]
}

/// Unclamped exponent of the `n = 4, k = 1` coefficient, which the printed
/// per-coefficient formula gets wrong.
pub fn clamping_counterexample() -> (i64, Rational) {
    (
        coeff_denom_exponent(4, 1).expect("k = 1 is odd"),
        euler_coeff_explicit(4, 1).expect("k <= n"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        let checks = run_identity_sweeps(24, 7);
        for c in &checks {
            assert!(c.passed(), "{}: {:?}", c.name, c.violations);
            assert!(c.cases > 0, "{}", c.name);
        }
        let table = render_summary(&checks);
        assert!(table.contains("kummer carries"));
        assert!(!table.contains("FAIL"));
    }

    #[test]
    fn formula_sweeps_pass() {
        for c in [
            route_equivalence(30),
            stirling_form(30),
            coefficient_denominators(30),
            shifted_coefficient_denominators(30),
            valuation_shift(60),
            carry_form(60),
            mersenne_branch(8),
            non_mersenne_branch(300),
            main_theorem(30),
        ] {
            assert!(c.passed(), "{}: {:?}", c.name, c.violations);
        }
    }

    #[test]
    fn violation_is_reported() {
        let mut c = IdentityCheck::new("x", String::new());
        c.check(true, || unreachable!());
        c.check(false, || "bad".into());
        assert_eq!((c.cases, c.passed(), c.violations.len()), (2, false, 1));
        assert!(render_summary(&[c]).contains("FAIL"));
    }

    #[test]
    fn counterexample() {
        assert_eq!(clamping_counterexample(), (-1, ratio(-2, 1)));
        assert_eq!(crate::numeric::binomial(4, 1), Integer::from(4));
    }

    #[test]
    fn points_are_deterministic() {
        assert_eq!(random_points(5, 1), random_points(5, 1));
        assert!(random_points(50, 3)
            .iter()
            .all(|x| *x.denom() <= Integer::from(20)));
    }
}
