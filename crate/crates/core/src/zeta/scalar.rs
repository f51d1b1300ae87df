//! Scalars a truncated zeta sum can be evaluated in.
//!
//! Exact evaluation pairs [`BigRational`] values with integer exponents, so
//! every term `1 / m^s` is an exact rational. Floating evaluation pairs `f64`
//! (or `f32`) values with real exponents of the same type.

use std::fmt::Debug;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Num, One, Zero};

/// An exponent value attached to a variable.
pub trait Exponent: Copy + Debug + PartialEq + Send + Sync + 'static {
    fn to_f64(&self) -> f64;

    /// Reason the value is unusable, if any.
    fn check(&self) -> Option<String>;

    /// Bit pattern used as a memoization key.
    fn key(&self) -> u64;
}

impl Exponent for u32 {
    fn to_f64(&self) -> f64 {
        f64::from(*self)
    }

    fn check(&self) -> Option<String> {
        (*self == 0).then(|| "exact exponents must be integers >= 1".to_string())
    }

    fn key(&self) -> u64 {
        u64::from(*self)
    }
}

impl Exponent for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }

    fn check(&self) -> Option<String> {
        (!self.is_finite()).then(|| format!("{self} is not finite"))
    }

    fn key(&self) -> u64 {
        self.to_bits()
    }
}

impl Exponent for f32 {
    fn to_f64(&self) -> f64 {
        f64::from(*self)
    }

    fn check(&self) -> Option<String> {
        (!self.is_finite()).then(|| format!("{self} is not finite"))
    }

    fn key(&self) -> u64 {
        u64::from(self.to_bits())
    }
}

pub trait ZetaScalar: Num + Clone + Debug + PartialOrd + Send + Sync + 'static {
    type Exponent: Exponent;

    /// `1 / base^exponent`.
    fn reciprocal_power(base: usize, exponent: &Self::Exponent) -> Self;

    /// `∏ 1 / base^exponent` over the given pairs.
    fn reciprocal_monomial<'a>(factors: impl Iterator<Item = (usize, &'a Self::Exponent)>) -> Self {
        factors.fold(Self::one(), |acc, (b, e)| acc * Self::reciprocal_power(b, e))
    }

    fn from_count(count: usize) -> Self;
}

impl ZetaScalar for BigRational {
    type Exponent = u32;

    fn reciprocal_power(base: usize, exponent: &u32) -> Self {
        BigRational::new_raw(BigInt::one(), BigInt::from(BigUint::from(base).pow(*exponent)))
    }

    fn reciprocal_monomial<'a>(factors: impl Iterator<Item = (usize, &'a u32)>) -> Self {
        // the numerator is 1, so the fraction is already reduced
        let mut small: u128 = 1;
        let mut big: Option<BigUint> = None;
        for (b, &e) in factors {
            if b == 1 {
                continue;
            }
            if big.is_none() {
                if let Some(p) = (b as u128).checked_pow(e).and_then(|p| small.checked_mul(p)) {
                    small = p;
                    continue;
                }
                big = Some(BigUint::from(small));
            }
            if let Some(acc) = big.as_mut() {
                *acc *= BigUint::from(b).pow(e);
            }
        }
        let denom = big.unwrap_or_else(|| BigUint::from(small));
        BigRational::new_raw(BigInt::one(), BigInt::from(denom))
    }

    fn from_count(count: usize) -> Self {
        BigRational::from_integer(BigInt::from(count))
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl ZetaScalar for $t {
            type Exponent = $t;

            fn reciprocal_power(base: usize, exponent: &$t) -> Self {
                if base == 1 {
                    return 1.0;
                }
                (base as $t).powf(-*exponent)
            }

            fn from_count(count: usize) -> Self {
                count as $t
            }
        }
    };
}

float_scalar!(f64);
float_scalar!(f32);

/// Formats a rational as `num/den`, including integers (`3/1`).
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => s.parse().ok().map(BigRational::from_integer),
    }
}
