//! Exact rational scalars.
//!
//! Everything downstream (series, polynomials, Padé systems) computes over
//! this type, so no floating point enters until a caller explicitly asks for
//! an `f64` via [`Rational::to_f64`].

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number, always reduced, denominator positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer/denom` from machine integers. Panics if `denom` is 0.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        Rational(BigRational::new(numer, denom))
    }

    pub fn int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    pub fn pow(&self, exp: usize) -> Self {
        if exp == 0 {
            return Rational::one();
        }
        let mut acc = self.clone();
        for _ in 1..exp {
            acc = &acc * self;
        }
        acc
    }

    /// n! as a rational.
    pub fn factorial(n: usize) -> Self {
        let mut acc = BigInt::one();
        for k in 2..=n {
            acc *= BigInt::from(k);
        }
        Rational(BigRational::from_integer(acc))
    }

    /// Falling factorial n·(n−1)···(n−k+1). Zero once the product crosses 0,
    /// so terms indexed past the family degree drop out on their own.
    pub fn falling(n: usize, k: usize) -> Self {
        let mut acc = BigInt::one();
        for i in 0..k {
            let factor = n as i64 - i as i64;
            if factor == 0 {
                return Rational::zero();
            }
            acc *= BigInt::from(factor);
        }
        Rational(BigRational::from_integer(acc))
    }

    /// Binomial coefficient C(n, k); zero for k > n.
    pub fn binomial(n: usize, k: usize) -> Self {
        if k > n {
            return Rational::zero();
        }
        &Self::falling(n, k) / &Self::factorial(k)
    }

    /// Nearest `f64`, ties to even, computed by one exact integer division at
    /// extended precision so the result is correctly rounded (≤ 0.5 ulp).
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let negative = self.is_negative();
        let num = self.numer().abs();
        let den = self.denom().clone();
        // Scale so the integer quotient carries at least 54 significant bits:
        // 53 for the mantissa plus guard bits for the rounding decision.
        let shift = 55i64 + den.bits() as i64 - num.bits() as i64;
        let (scaled_num, scaled_den) = if shift >= 0 {
            (num << shift as u64, den)
        } else {
            (num, den << (-shift) as u64)
        };
        let (quot, rem) = num::Integer::div_rem(&scaled_num, &scaled_den);
        let drop = quot.bits() as i64 - 53; // 1..=3 by construction
        let q: BigInt = &quot >> drop as u64;
        let dropped: BigInt = &quot - (&q << drop as u64);
        let half: BigInt = BigInt::one() << (drop - 1) as u64;
        let mut q64 = q.to_f64().expect("53-bit integer is exact in f64");
        // The discarded tail is dropped + rem/den with rem/den < 1; a tie
        // happens only when the division was exact and dropped == half.
        if dropped > half || (dropped == half && (!rem.is_zero() || q64 as u64 % 2 == 1)) {
            q64 += 1.0;
        }
        let magnitude = q64 * ((drop - shift) as f64).exp2();
        if negative {
            -magnitude
        } else {
            magnitude
        }
    }
}

impl fmt::Display for Rational {
    /// `p/q`, or just `p` when the denominator is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::int(n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}: expected `p` or `p/q` with q != 0")]
pub struct ParseRationalError(String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p` or `p/q` with optional sign, e.g. `-1/2`, `7`, `3/4`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseRationalError(s.to_string());
        if s.trim().is_empty() || s.matches('/').count() > 1 {
            return Err(bad());
        }
        let mut parts = s.splitn(2, '/');
        let numer: BigInt = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let denom: BigInt = match parts.next() {
            Some(d) => d.trim().parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $imp<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl $imp<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_is_reduced() {
        assert_eq!(q("1/3") + q("1/6"), q("1/2"));
        assert_eq!(q("2/4"), q("1/2"));
        assert_eq!(q("-2/-4"), q("1/2"));
        assert_eq!(q("1/2") * q("2/3"), q("1/3"));
        assert_eq!(q("1") / q("-3"), q("-1/3"));
    }

    #[test]
    fn display_hides_unit_denominator() {
        assert_eq!(q("4/2").to_string(), "2");
        assert_eq!(q("-1/2").to_string(), "-1/2");
        assert_eq!(Rational::zero().to_string(), "0");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("1/0".parse::<Rational>().is_err());
        assert!("a/b".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert!("1/2/3".parse::<Rational>().is_err());
    }

    #[test]
    fn factorial_binomial_falling() {
        assert_eq!(Rational::factorial(0), q("1"));
        assert_eq!(Rational::factorial(5), q("120"));
        assert_eq!(Rational::binomial(11, 2), q("55"));
        assert_eq!(Rational::binomial(3, 5), q("0"));
        assert_eq!(Rational::falling(11, 2), q("110"));
        // Crosses zero: 2·1·0·(−1) = 0.
        assert_eq!(Rational::falling(2, 4), q("0"));
        assert_eq!(Rational::falling(6, 0), q("1"));
    }

    #[test]
    fn pow_handles_corners() {
        assert_eq!(q("-1/2").pow(3), q("-1/8"));
        assert_eq!(Rational::zero().pow(0), q("1"));
        assert_eq!(Rational::zero().pow(4), q("0"));
    }

    #[test]
    fn to_f64_matches_ieee_division() {
        // IEEE division of exactly-representable operands is correctly
        // rounded, so these must agree bit for bit.
        let cases: &[(i64, i64)] = &[
            (1, 3),
            (2, 3),
            (22, 7),
            (-355, 113),
            (1, 480),
            (1, 288),
            (123456789012345, 987654321),
            (-1, 2879),
            (7, 1),
            (0, 5),
        ];
        for &(p, d) in cases {
            let got = Rational::new(p, d).to_f64();
            let want = p as f64 / d as f64;
            assert_eq!(got.to_bits(), want.to_bits(), "{p}/{d}");
        }
    }

    #[test]
    fn to_f64_huge_and_tiny() {
        let big = Rational::from_big(BigInt::from(10).pow(40u32), BigInt::from(3));
        assert!((big.to_f64() - 10f64.powi(40) / 3.0).abs() / 1e40 < 1e-15);
        let tiny = Rational::from_big(BigInt::from(3), BigInt::from(10).pow(40u32));
        assert!((tiny.to_f64() - 3.0e-40).abs() < 1e-55);
    }

    #[test]
    fn to_f64_ties_round_to_even() {
        // 1 + 2^-53 lies halfway between 1.0 and 1.0 + 2^-52; the even
        // mantissa wins.
        let half_ulp = Rational::from_big((BigInt::from(1) << 53u8) + 1, BigInt::from(1) << 53u8);
        assert_eq!(half_ulp.to_f64(), 1.0);
        // 1 + 3·2^-54 sits three quarters of an ulp up, so it rounds up.
        let three_quarters =
            Rational::from_big((BigInt::from(1) << 54u8) + 3, BigInt::from(1) << 54u8);
        assert_eq!(three_quarters.to_f64(), 1.0 + 2f64.powi(-52));
    }
}
