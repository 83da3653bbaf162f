//! Stirling numbers of the second kind, Bernoulli numbers from the Stirling
//! sum, and the von Staudt-Clausen decomposition of `B_{2n}`.
//!
//! The Bernoulli formula used here is
//!
//! ```text
//! B_n = n / (2 (2^n - 1)) * sum_{j=0}^{n-1} (-1)^j S(n, j+1) j! / 2^j
//! ```
//!
//! which gives `B_1 = +1/2`. Every Euler coefficient only needs `B_{k+1}`
//! with `k` odd, where the sign convention of `B_1` plays no role.

use std::sync::{LazyLock, Mutex, MutexGuard};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{is_prime, pow2, rat_int, Integer, Rational};

/// Grow-only triangle of `S(n, k)`.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    rows: Vec<Vec<Integer>>,
}

impl Default for StirlingTable {
    fn default() -> Self {
        StirlingTable {
            rows: vec![vec![Integer::one()]],
        }
    }
}

impl StirlingTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of rows currently materialized.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn grow_to(&mut self, n: usize) {
        while self.rows.len() <= n {
            let prev = self.rows.last().expect("row 0 is always present");
            let m = prev.len();
            let mut row = Vec::with_capacity(m + 1);
            row.push(Integer::zero());
            for k in 1..m {
                row.push(&prev[k] * k + &prev[k - 1]);
            }
            row.push(Integer::one());
            self.rows.push(row);
        }
    }

    /// Row `n`: `[S(n,0), ..., S(n,n)]`.
    pub fn row(&mut self, n: usize) -> &[Integer] {
        self.grow_to(n);
        &self.rows[n]
    }

    pub fn get(&mut self, n: usize, k: i64) -> Integer {
        if k < 0 || k as usize > n {
            return Integer::zero();
        }
        self.row(n)[k as usize].clone()
    }
}

/// Memoized Bernoulli numbers together with the Stirling rows they need.
#[derive(Debug, Clone, Default)]
pub struct BernoulliCache {
    stirling: StirlingTable,
    values: Vec<Option<Rational>>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn stirling(&mut self) -> &mut StirlingTable {
        &mut self.stirling
    }

    /// `sum_{j=0}^{n-1} (-1)^j S(n, j+1) j! / 2^j`, the Stirling sum shared by
    /// the Bernoulli formula and the Stirling form of the Euler coefficients.
    pub fn stirling_sum(&mut self, n: u64) -> Rational {
        if n == 0 {
            return Rational::zero();
        }
        let row = self.stirling.row(n as usize);
        // scaled by 2^(n-1) so the loop stays in integers
        let mut total = Integer::zero();
        let mut fact = Integer::one();
        for j in 0..n {
            if j > 0 {
                fact *= j;
            }
            let term = (&row[j as usize + 1] * &fact) << (n - 1 - j);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        Rational::new(total, pow2(n - 1))
    }

    pub fn bernoulli(&mut self, n: u64) -> Result<Rational> {
        if n == 0 {
            return Err(Error::out_of_range("bernoulli n", n, "n >= 1"));
        }
        let idx = n as usize;
        if let Some(Some(b)) = self.values.get(idx) {
            return Ok(b.clone());
        }
        let scale = Rational::new(Integer::from(n), (pow2(n) - 1u32) * 2u32);
        let b = scale * self.stirling_sum(n);
        if self.values.len() <= idx {
            self.values.resize(idx + 1, None);
        }
        self.values[idx] = Some(b.clone());
        Ok(b)
    }
}

static TABLES: LazyLock<Mutex<BernoulliCache>> = LazyLock::new(Default::default);

/// Process-wide memo shared by the free functions in this module.
pub fn shared_cache() -> MutexGuard<'static, BernoulliCache> {
    // a panic while holding the lock cannot leave a half-built row behind
    TABLES.lock().unwrap_or_else(|e| e.into_inner())
}

/// Stirling number of the second kind, zero outside `0 <= k <= n`.
pub fn stirling2(n: u64, k: i64) -> Integer {
    shared_cache().stirling().get(n as usize, k)
}

/// Bernoulli number `B_n` for `n >= 1` (with `B_1 = +1/2`).
pub fn bernoulli(n: u64) -> Result<Rational> {
    shared_cache().bernoulli(n)
}

pub fn stirling_sum(n: u64) -> Rational {
    shared_cache().stirling_sum(n)
}

/// `B_{2n} = integer - sum 1/p` over primes `p` with `(p - 1) | 2n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VscDecomposition {
    pub integer: Integer,
    pub primes: Vec<u64>,
}

/// Primes `p` with `(p - 1) | m`, ascending.
pub fn vsc_primes(m: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            for q in [d, m / d] {
                if is_prime(q + 1) && !primes.contains(&(q + 1)) {
                    primes.push(q + 1);
                }
            }
        }
        d += 1;
    }
    primes.sort_unstable();
    primes
}

pub fn vsc_decompose(n: u64) -> Result<VscDecomposition> {
    if n == 0 {
        return Err(Error::out_of_range("vsc_decompose n", n, "n >= 1"));
    }
    let primes = vsc_primes(2 * n);
    let mut sum = bernoulli(2 * n)?;
    for &p in &primes {
        sum += Rational::new(Integer::one(), Integer::from(p));
    }
    if !sum.is_integer() {
        return Err(Error::Consistency(format!(
            "B_{} + sum 1/p = {sum} is not an integer",
            2 * n
        )));
    }
    debug_assert_eq!(rat_int(sum.to_integer()), sum);
    Ok(VscDecomposition {
        integer: sum.to_integer(),
        primes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{binomial, int, ratio};

    /// `sum_{k=0}^{n} C(n+1,k) B_k = 0` with `B_1 = -1/2`.
    fn bernoulli_oracle(max: usize) -> Vec<Rational> {
        let mut b = vec![rat_int(int(1))];
        for n in 1..=max {
            let mut s = Rational::zero();
            for (k, bk) in b.iter().enumerate() {
                s += bk * rat_int(binomial(n as u64 + 1, k as i64));
            }
            b.push(-s / rat_int(int(n as i64 + 1)));
        }
        b
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling2(2, 1), int(1));
        assert_eq!(stirling2(4, 2), int(7));
        assert_eq!(stirling2(0, 0), int(1));
        assert_eq!(stirling2(3, 4), int(0));
        assert_eq!(stirling2(3, -1), int(0));
        for n in 0..30 {
            assert_eq!(stirling2(n, n as i64), int(1));
        }
    }

    #[test]
    fn stirling_table_invariants() {
        let mut t = StirlingTable::new();
        for n in 1..60usize {
            assert_eq!(t.get(n, 0), int(0));
            for k in 1..n {
                let expect = t.get(n - 1, k as i64) * k + t.get(n - 1, k as i64 - 1);
                assert_eq!(t.get(n, k as i64), expect);
            }
        }
        assert_eq!(t.len(), 60);
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli(1), Ok(ratio(1, 2)));
        assert_eq!(bernoulli(2), Ok(ratio(1, 6)));
        assert_eq!(bernoulli(3), Ok(ratio(0, 1)));
        assert_eq!(bernoulli(4), Ok(ratio(-1, 30)));
        assert_eq!(bernoulli(12), Ok(ratio(-691, 2730)));
        assert!(bernoulli(0).is_err());
    }

    #[test]
    fn bernoulli_matches_oracle_at_even_indices() {
        let oracle = bernoulli_oracle(200);
        for n in (2..=200).step_by(2) {
            assert_eq!(bernoulli(n as u64).unwrap(), oracle[n], "B_{n}");
        }
    }

    #[test]
    fn odd_bernoulli_vanish() {
        for n in (3..=199).step_by(2) {
            assert!(bernoulli(n).unwrap().is_zero(), "B_{n}");
        }
    }

    #[test]
    fn even_bernoulli_denominators_and_signs() {
        for m in 1..=100u64 {
            let b = bernoulli(2 * m).unwrap();
            let product: Integer = vsc_primes(2 * m).iter().map(|&p| int(p as i64)).product();
            assert_eq!(*b.denom(), product, "denominator of B_{}", 2 * m);
            assert!(b.numer().bit(0), "numerator of B_{} must be odd", 2 * m);
            assert_eq!(b > Rational::zero(), m % 2 == 1, "sign of B_{}", 2 * m);
        }
    }

    #[test]
    fn vsc_examples() {
        let d = vsc_decompose(1).unwrap();
        assert_eq!((d.integer, d.primes), (int(1), vec![2, 3]));
        let d = vsc_decompose(2).unwrap();
        assert_eq!((d.integer, d.primes), (int(1), vec![2, 3, 5]));
        let d = vsc_decompose(3).unwrap();
        assert_eq!((d.integer, d.primes), (int(1), vec![2, 3, 7]));
        assert!(vsc_decompose(0).is_err());
    }

    #[test]
    fn vsc_sweep() {
        for m in 1..=100 {
            vsc_decompose(m).unwrap();
        }
        // B_12 = -691/2730, primes 2,3,5,7,13
        let d = vsc_decompose(6).unwrap();
        assert_eq!(d.primes, vec![2, 3, 5, 7, 13]);
        assert_eq!(d.integer, int(1));
    }
}
