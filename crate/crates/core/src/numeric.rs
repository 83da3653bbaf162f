//! Arbitrary-precision integers and rationals, plus the 2-adic combinatorics
//! (valuations, binomials, base-2 carries) the rest of the crate builds on.
//!
//! Indices such as `n` and `k` are machine integers; every value that can
//! grow (binomials, Bernoulli numerators, coefficients) is a [`Integer`] or
//! [`Rational`].

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Signed arbitrary-precision integer.
pub type Integer = BigInt;

/// Reduced fraction with a positive denominator; zero is stored as `0/1`.
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

pub fn rat_int(v: Integer) -> Rational {
    Rational::from_integer(v)
}

/// `2^e` as an [`Integer`].
pub fn pow2(e: u64) -> Integer {
    Integer::one() << e
}

/// 2-adic valuation: the largest `e` with `2^e | n`.
pub fn v2(n: &Integer) -> Result<u64> {
    // trailing_zeros is None only for zero
    n.trailing_zeros().ok_or(Error::ZeroValuation)
}

/// `p`-adic valuation of `n` for a prime `p`.
pub fn vp(p: &Integer, n: &Integer) -> Result<u64> {
    if !is_prime_big(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if n.is_zero() {
        return Err(Error::ZeroValuation);
    }
    if *p == int(2) {
        return v2(n);
    }
    let mut rest = n.abs();
    let mut e = 0;
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return Ok(e);
        }
        rest = q;
        e += 1;
    }
}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > n {
        return Integer::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Integer::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Row `n` of Pascal's triangle: `[C(n,0), ..., C(n,n)]`.
pub fn binomial_row(n: u64) -> Vec<Integer> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = Integer::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * (n - k) / (k + 1);
        row.push(c.clone());
    }
    row
}

/// Successive rows of Pascal's triangle, starting at row 0, built by addition.
#[derive(Debug, Clone, Default)]
pub struct PascalRows {
    row: Vec<Integer>,
}

impl Iterator for PascalRows {
    type Item = Vec<Integer>;

    fn next(&mut self) -> Option<Vec<Integer>> {
        let next = if self.row.is_empty() {
            vec![Integer::one()]
        } else {
            let mut next = Vec::with_capacity(self.row.len() + 1);
            next.push(Integer::one());
            for w in self.row.windows(2) {
                next.push(&w[0] + &w[1]);
            }
            next.push(Integer::one());
            next
        };
        self.row = next.clone();
        Some(next)
    }
}

pub fn pascal_rows() -> PascalRows {
    PascalRows::default()
}

/// Number of carries produced when adding `k` and `n - k` in base 2.
pub fn carries_base2(n: u64, k: u64) -> Result<u32> {
    if k > n {
        return Err(Error::out_of_range("carries_base2 k", k, "0 <= k <= n"));
    }
    let (mut a, mut b) = (k, n - k);
    let mut carry = 0u64;
    let mut count = 0;
    while a != 0 || b != 0 || carry != 0 {
        let s = (a & 1) + (b & 1) + carry;
        carry = s >> 1;
        count += carry as u32;
        a >>= 1;
        b >>= 1;
    }
    Ok(count)
}

/// Number of binary digits of `n >= 1`.
pub fn bit_length(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::out_of_range("bit_length n", n, "n >= 1"));
    }
    Ok(u64::BITS - n.leading_zeros())
}

/// Characteristic function of `{2^m - 1 : m >= 1}`.
pub fn g(n: u64) -> u32 {
    (n != 0 && (n & n.wrapping_add(1)) == 0) as u32
}

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality for arbitrary integers. Exact below `2^64`; above that a
/// Miller-Rabin test over the first twelve prime bases (probabilistic).
pub fn is_prime_big(n: &Integer) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime(small);
    }
    if !n.is_positive() || n.is_even() {
        return false;
    }
    let one = Integer::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &MR_BASES {
        let mut x = Integer::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&int(2), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v2_examples() {
        assert_eq!(v2(&int(1)), Ok(0));
        assert_eq!(v2(&int(8)), Ok(3));
        assert_eq!(v2(&int(12)), Ok(2));
        assert_eq!(v2(&int(-12)), Ok(2));
        assert_eq!(v2(&int(0)), Err(Error::ZeroValuation));
    }

    #[test]
    fn vp_examples() {
        assert_eq!(vp(&int(3), &int(9)), Ok(2));
        assert_eq!(vp(&int(5), &int(7)), Ok(0));
        assert_eq!(vp(&int(2), &int(8)), Ok(3));
        assert_eq!(vp(&int(7), &int(-98)), Ok(2));
        assert!(matches!(vp(&int(4), &int(8)), Err(Error::NotPrime(_))));
        assert_eq!(vp(&int(3), &int(0)), Err(Error::ZeroValuation));
    }

    #[test]
    fn vp_large_prime() {
        // 2^89 - 1 is a Mersenne prime
        let p = pow2(89) - 1;
        let n = &p * &p * int(6);
        assert_eq!(vp(&p, &n), Ok(2));
        assert!(matches!(vp(&(pow2(89) + 1), &n), Err(Error::NotPrime(_))));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 1), int(4));
        assert_eq!(binomial(7, 3), int(35));
        assert_eq!(binomial(5, 7), int(0));
        assert_eq!(binomial(5, -1), int(0));
        assert_eq!(binomial(0, 0), int(1));
    }

    #[test]
    fn rows_agree() {
        for (n, row) in pascal_rows().take(40).enumerate() {
            assert_eq!(row, binomial_row(n as u64));
            for (k, c) in row.iter().enumerate() {
                assert_eq!(*c, binomial(n as u64, k as i64));
            }
        }
    }

    #[test]
    fn carries_examples() {
        assert_eq!(carries_base2(4, 1), Ok(2));
        assert_eq!(carries_base2(7, 3), Ok(0));
        for n in 0..50 {
            assert_eq!(carries_base2(n, 0), Ok(0));
        }
        assert!(carries_base2(3, 4).is_err());
    }

    #[test]
    fn bit_length_examples() {
        assert_eq!(bit_length(1), Ok(1));
        assert_eq!(bit_length(7), Ok(3));
        assert_eq!(bit_length(8), Ok(4));
        assert_eq!(bit_length(u64::MAX), Ok(64));
        assert!(bit_length(0).is_err());
    }

    #[test]
    fn g_examples() {
        assert_eq!(g(7), 1);
        assert_eq!(g(8), 0);
        assert_eq!(g(0), 0);
        assert_eq!(g(1), 1);
        assert_eq!(g(u64::MAX), 1);
    }

    #[test]
    fn g_matches_power_of_two_test() {
        for n in 1..=10_000u64 {
            assert_eq!(g(n) == 1, (n + 1).is_power_of_two(), "n = {n}");
        }
    }

    #[test]
    fn primes_below_200() {
        let sieve: Vec<u64> = (2..200u64)
            .filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
            .collect();
        let mr: Vec<u64> = (0..200).filter(|&n| is_prime(n)).collect();
        assert_eq!(mr, sieve);
        // strong pseudoprime to bases 2..=11
        assert!(!is_prime(3_215_031_751));
        assert!(is_prime(18_446_744_073_709_551_557));
    }

    #[test]
    fn rational_zero_is_canonical() {
        let z = ratio(0, -7);
        assert_eq!(z.numer(), &int(0));
        assert_eq!(z.denom(), &int(1));
        let r = ratio(6, -4);
        assert_eq!((r.numer().clone(), r.denom().clone()), (int(-3), int(2)));
    }
}
