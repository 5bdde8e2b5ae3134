//! Exact rational helpers on top of [`num_rational::BigRational`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision fraction, always stored reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// `num / den` as a reduced rational. Panics if `den == 0`.
pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn from_int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// `⌊x⌋` as an integer.
pub fn floor(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// `⌈x⌉` as an integer.
pub fn ceil(x: &Rational) -> BigInt {
    -((-x.numer()).div_floor(x.denom()))
}

/// Fractional part `x - ⌊x⌋`, always in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x - Rational::from_integer(floor(x))
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

pub fn is_nonnegative(x: &Rational) -> bool {
    !x.is_negative()
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Only reachable for magnitudes beyond f64 range.
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Ceiling of a float bound as an integer. Non-finite values map to zero.
pub fn ceil_f64(x: f64) -> BigInt {
    if !x.is_finite() {
        return BigInt::zero();
    }
    BigInt::from(libm::ceil(x) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_ceil_frac_on_signs() {
        assert_eq!(floor(&ratio(7, 2)), BigInt::from(3));
        assert_eq!(ceil(&ratio(7, 2)), BigInt::from(4));
        assert_eq!(floor(&ratio(-7, 2)), BigInt::from(-4));
        assert_eq!(ceil(&ratio(-7, 2)), BigInt::from(-3));
        assert_eq!(ceil(&from_int(5)), BigInt::from(5));
        assert_eq!(frac(&ratio(7, 2)), ratio(1, 2));
        assert_eq!(frac(&ratio(-7, 2)), ratio(1, 2));
        assert!(frac(&from_int(3)).is_zero());
    }

    #[test]
    fn always_reduced() {
        let r = ratio(12, -9);
        assert_eq!(r.numer(), &BigInt::from(-4));
        assert_eq!(r.denom(), &BigInt::from(3));
    }

    #[test]
    fn float_ceiling() {
        assert_eq!(ceil_f64(1.4986), BigInt::from(2));
        assert_eq!(ceil_f64(-0.5), BigInt::from(0));
        assert_eq!(ceil_f64(3.0), BigInt::from(3));
    }
}
