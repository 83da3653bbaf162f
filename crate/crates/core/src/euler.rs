//! Euler polynomials `E_n(x)` by two independent routes.
//!
//! The recurrence route uses only the generating function
//! `2 e^{xt} / (e^t + 1) = sum E_n(x) t^n / n!`. Multiplying through by
//! `e^t + 1` and comparing the coefficients of `t^n / n!` on both sides gives
//!
//! ```text
//! 2 x^n = sum_{k=0}^{n} C(n,k) E_k(x) + E_n(x)
//! E_n(x) = x^n - (1/2) sum_{k=0}^{n-1} C(n,k) E_k(x)
//! ```
//!
//! The explicit route builds each coefficient from Bernoulli numbers:
//! the coefficient of `x^{n-k}` is `1` for `k = 0`, `0` for even `k >= 2`,
//! and `-2/(k+1) (2^{k+1} - 1) B_{k+1} C(n,k)` for odd `k`.
//!
//! Coefficients are stored ascending by power, so the coefficient written
//! `e_k(n)` (the one multiplying `x^{n-k}`) lives at index `n - k`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{binomial, binomial_row, pow2, rat_int, Integer, Rational};
use crate::poly::Polynomial;
use crate::special::{bernoulli, stirling_sum};

/// Yields `E_0, E_1, E_2, ...` from the generating-function recurrence.
///
/// Internally keeps `2^k E_k(x)`, which has integer coefficients, so the
/// recurrence runs in integer arithmetic:
/// `2^n E_n = 2^n x^n - sum_{k<n} C(n,k) 2^{n-1-k} (2^k E_k)`.
#[derive(Debug, Clone, Default)]
pub struct EulerRecurrence {
    scaled: Vec<Vec<Integer>>,
}

impl EulerRecurrence {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Iterator for EulerRecurrence {
    type Item = Polynomial;

    fn next(&mut self) -> Option<Polynomial> {
        let n = self.scaled.len();
        let mut acc = vec![Integer::zero(); n + 1];
        acc[n] = pow2(n as u64);
        for (k, (ek, c)) in self.scaled.iter().zip(binomial_row(n as u64)).enumerate() {
            let factor = c << (n - 1 - k);
            for (a, b) in acc.iter_mut().zip(ek) {
                *a -= &factor * b;
            }
        }
        let den = pow2(n as u64);
        let poly = Polynomial::from_coeffs(
            acc.iter()
                .map(|c| Rational::new(c.clone(), den.clone()))
                .collect(),
        );
        self.scaled.push(acc);
        Some(poly)
    }
}

/// `E_n(x)` from the generating-function recurrence.
pub fn euler_poly_recurrence(n: u64) -> Polynomial {
    EulerRecurrence::new()
        .nth(n as usize)
        .expect("recurrence is infinite")
}

/// `[E_0, ..., E_n]` from the recurrence.
pub fn euler_polys_recurrence(n: u64) -> Vec<Polynomial> {
    EulerRecurrence::new().take(n as usize + 1).collect()
}

/// Which closed form produces the odd-`k` coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoefficientForm {
    /// `-2/(k+1) (2^{k+1} - 1) B_{k+1} C(n,k)`
    #[default]
    Bernoulli,
    /// `-C(n,k) sum_{j=0}^{k} (-1)^j S(k+1, j+1) j! / 2^j`
    Stirling,
}

/// The `n`-independent factor of `e_k(n)`, so that `e_k(n) = factor * C(n,k)`.
fn odd_coefficient_factor(k: u64, form: CoefficientForm) -> Rational {
    match form {
        CoefficientForm::Bernoulli => {
            let b = bernoulli(k + 1).expect("k + 1 >= 1");
            let scale = Rational::new((pow2(k + 1) - 1u32) * -2, Integer::from(k + 1));
            scale * b
        }
        CoefficientForm::Stirling => -stirling_sum(k + 1),
    }
}

/// `e_k(n)`, the coefficient of `x^{n-k}` in `E_n(x)`.
pub fn euler_coeff_explicit(n: u64, k: u64) -> Result<Rational> {
    euler_coeff_explicit_with(n, k, CoefficientForm::default())
}

pub fn euler_coeff_explicit_with(n: u64, k: u64, form: CoefficientForm) -> Result<Rational> {
    if k > n {
        return Err(Error::out_of_range("euler coefficient k", k, "0 <= k <= n"));
    }
    Ok(match k {
        0 => Rational::one(),
        k if k % 2 == 0 => Rational::zero(),
        k => odd_coefficient_factor(k, form) * binomial(n, k as i64),
    })
}

/// `E_n(x)` assembled coefficientwise from the Bernoulli closed form.
pub fn euler_poly_explicit(n: u64) -> Polynomial {
    euler_poly_explicit_with(n, CoefficientForm::default())
}

pub fn euler_poly_explicit_with(n: u64, form: CoefficientForm) -> Polynomial {
    let row = binomial_row(n);
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    coeffs[n as usize] = Rational::one();
    for k in (1..=n).step_by(2) {
        coeffs[(n - k) as usize] = odd_coefficient_factor(k, form) * &row[k as usize];
    }
    Polynomial::from_coeffs(coeffs)
}

/// `E_n(0) = -2/(n+1) (2^{n+1} - 1) B_{n+1}` for `n >= 1`.
pub fn euler_at_zero(n: u64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::out_of_range("euler_at_zero n", n, "n >= 1"));
    }
    let b = bernoulli(n + 1)?;
    Ok(Rational::new((pow2(n + 1) - 1u32) * -2, Integer::from(n + 1)) * b)
}

/// `E*_n(x) = E_n(x) - E_n(1)`, computed as `E_n(x) + E_n(0)`.
/// `E*_0` is the zero polynomial.
pub fn shifted_euler(n: u64) -> Polynomial {
    if n == 0 {
        return Polynomial::zero();
    }
    let at_zero = euler_at_zero(n).expect("n >= 1");
    euler_poly_explicit(n).add_constant(&at_zero)
}

/// `p(x) - p(1)`, the shift applied literally.
pub fn shift_to_vanish_at_one(p: &Polynomial) -> Polynomial {
    let at_one = p.evaluate(&Rational::one());
    p.add_constant(&-at_one)
}

/// Integer `n` as a rational.
pub(crate) fn rat_n(n: u64) -> Rational {
    rat_int(Integer::from(n))
}
