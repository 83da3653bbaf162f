use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::numeric::{Integer, Rational};

/// Dense univariate polynomial with rational coefficients, stored in
/// ascending order of power. The zero polynomial has no stored coefficients;
/// otherwise the last stored coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^power`
    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming zeros at the top.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^power`, zero past the degree.
    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs
            .get(power)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exact evaluation. Clears denominators and runs Horner on the
    /// homogenized integer form `sum c_i a^i b^{d-i}` at `x = a/b`, reducing once.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        let Some(degree) = self.degree() else {
            return Rational::zero();
        };
        let common = self.coeffs.iter().fold(Integer::one(), |acc, c| {
            num_integer::Integer::lcm(&acc, c.denom())
        });
        let scaled = |c: &Rational| c.numer() * (&common / c.denom());
        let (a, b) = (x.numer(), x.denom());
        let mut acc = scaled(&self.coeffs[degree]);
        let mut b_pow = Integer::one();
        for c in self.coeffs[..degree].iter().rev() {
            b_pow *= b;
            acc = acc * a + scaled(c) * &b_pow;
        }
        Rational::new(acc, common * b_pow)
    }

    /// Plain rational Horner, used to cross-check [`Polynomial::evaluate`].
    pub fn evaluate_horner(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Integer::from(i))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Adds `c` to the constant term.
    pub fn add_constant(&self, c: &Rational) -> Self {
        let mut coeffs = self.coeffs.clone();
        match coeffs.first_mut() {
            Some(c0) => *c0 += c,
            None => coeffs.push(c.clone()),
        }
        Self::from_coeffs(coeffs)
    }

    /// In-place `self += s * other`.
    pub fn add_scaled(&mut self, s: &Rational, other: &Polynomial) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += s * b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), rhs);
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), rhs);
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = mag.is_one() && i > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, ratio};

    fn p(cs: &[(i64, i64)]) -> Polynomial {
        Polynomial::from_coeffs(cs.iter().map(|&(a, b)| ratio(a, b)).collect())
    }

    #[test]
    fn zero_is_canonical() {
        assert_eq!(p(&[(0, 1), (0, 3)]), Polynomial::zero());
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(p(&[(1, 2), (0, 1)]).degree(), Some(0));
    }

    #[test]
    fn evaluate_examples() {
        let e1 = p(&[(-1, 2), (1, 1)]);
        assert_eq!(e1.evaluate(&ratio(1, 2)), ratio(0, 1));
        assert_eq!(Polynomial::zero().evaluate(&ratio(7, 3)), ratio(0, 1));
        let e3 = p(&[(1, 4), (0, 1), (-3, 2), (1, 1)]);
        assert_eq!(e3.evaluate(&ratio(1, 1)), ratio(-1, 4));
    }

    #[test]
    fn derivative_examples() {
        let x3 = Polynomial::monomial(ratio(1, 1), 3);
        assert_eq!(x3.derivative(), Polynomial::monomial(ratio(3, 1), 2));
        assert_eq!(
            Polynomial::constant(ratio(5, 7)).derivative(),
            Polynomial::zero()
        );
        let e3 = p(&[(1, 4), (0, 1), (-3, 2), (1, 1)]);
        assert_eq!(e3.derivative(), p(&[(0, 1), (-3, 1), (3, 1)]));
    }

    #[test]
    fn arithmetic() {
        let a = p(&[(1, 2), (1, 1)]);
        let b = p(&[(1, 2), (-1, 1)]);
        assert_eq!(&a + &b, p(&[(1, 1)]));
        assert_eq!(&a - &a, Polynomial::zero());
        assert_eq!(-&a, p(&[(-1, 2), (-1, 1)]));
        assert_eq!(a.scale(&ratio(0, 1)), Polynomial::zero());
        assert_eq!(
            a.add_constant(&ratio(-1, 2)),
            Polynomial::monomial(ratio(1, 1), 1)
        );
        assert_eq!(
            Polynomial::zero().add_constant(&ratio(3, 1)).coeff(0),
            ratio(3, 1)
        );
        assert_eq!(a.coeff(9), ratio(0, 1));
        assert_eq!(a.leading_coeff(), Some(&Rational::from_integer(int(1))));
    }

    #[test]
    fn display() {
        let e3 = p(&[(1, 4), (0, 1), (-3, 2), (1, 1)]);
        assert_eq!(e3.to_string(), "x^3 - 3/2x^2 + 1/4");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p(&[(0, 1), (-1, 1)]).to_string(), "-x");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn rational() -> impl Strategy<Value = Rational> {
            (-1000i64..1000, 1i64..64).prop_map(|(a, b)| ratio(a, b))
        }

        proptest! {
            #[test]
            fn evaluate_matches_horner(
                cs in proptest::collection::vec(rational(), 0..24),
                x in rational(),
            ) {
                let poly = Polynomial::from_coeffs(cs);
                prop_assert_eq!(poly.evaluate(&x), poly.evaluate_horner(&x));
            }
        }
    }
}
