//! Coefficient rings.
//!
//! Two concrete rings are supported: the integers with arbitrary precision
//! ([`BigInt`]) and the field with two elements ([`F2`]). Both are integral
//! domains. Only the integers carry a sign, which is what the positive /
//! negative decomposition of chains needs.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact commutative ring used for chain coefficients.
pub trait Ring: Clone + Eq + Hash + Debug + Display + Send + Sync + 'static {
    /// Short tag used in reports and on the command line (`z`, `f2`).
    const NAME: &'static str;
    /// Whether elements have a sign, so that `c = c⁺ - c⁻` makes sense.
    const SIGNED: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Image of an integer under the unique ring map from ℤ.
    fn from_i64(value: i64) -> Self;
    /// The sign of the element, `None` for unsigned rings.
    fn signum(&self) -> Option<i8>;
    /// Integer representative used for serialization (0/1 over 𝔽₂).
    fn to_bigint(&self) -> BigInt;
    /// Magnitude of the integer representative.
    fn magnitude(&self) -> u64 {
        self.to_bigint().abs().to_u64().unwrap_or(u64::MAX)
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `(-1)^exponent` in this ring.
    fn sign_power(exponent: usize) -> Self {
        if exponent.is_multiple_of(2) {
            Self::one()
        } else {
            Self::one().neg()
        }
    }
}

impl Ring for BigInt {
    const NAME: &'static str = "z";
    const SIGNED: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn from_i64(value: i64) -> Self {
        BigInt::from(value)
    }
    fn signum(&self) -> Option<i8> {
        Some(if Signed::is_positive(self) {
            1
        } else if Signed::is_negative(self) {
            -1
        } else {
            0
        })
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// The field with two elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F2(pub bool);

impl Debug for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

impl Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

impl Ring for F2 {
    const NAME: &'static str = "f2";
    const SIGNED: bool = false;

    fn zero() -> Self {
        F2(false)
    }
    fn one() -> Self {
        F2(true)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn add(&self, other: &Self) -> Self {
        F2(self.0 ^ other.0)
    }
    fn neg(&self) -> Self {
        *self
    }
    fn mul(&self, other: &Self) -> Self {
        F2(self.0 & other.0)
    }
    fn from_i64(value: i64) -> Self {
        F2(value.rem_euclid(2) == 1)
    }
    fn signum(&self) -> Option<i8> {
        None
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(u8::from(self.0))
    }
}

/// Lifts an 𝔽₂ coefficient to ℤ by `0 ↦ 0`, `1 ↦ 1`.
pub fn set_lift(value: &F2) -> BigInt {
    value.to_bigint()
}

/// Which coefficient ring a computation runs over, for runtime dispatch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Integers,
    F2,
}

impl RingKind {
    pub fn name(self) -> &'static str {
        match self {
            RingKind::Integers => <BigInt as Ring>::NAME,
            RingKind::F2 => <F2 as Ring>::NAME,
        }
    }
}

impl std::str::FromStr for RingKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "z" | "Z" => Ok(RingKind::Integers),
            "f2" | "F2" => Ok(RingKind::F2),
            other => Err(format!("unknown ring `{other}` (expected z or f2)")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2_arithmetic() {
        let one = F2::one();
        assert!(one.add(&one).is_zero());
        assert_eq!(one.neg(), one);
        assert_eq!(F2::from_i64(-3), one);
        assert_eq!(F2::from_i64(4), F2::zero());
    }

    #[test]
    fn sign_power_matches_parity() {
        assert_eq!(<BigInt as Ring>::sign_power(3), BigInt::from(-1));
        assert_eq!(<BigInt as Ring>::sign_power(4), BigInt::from(1));
        assert_eq!(F2::sign_power(3), F2::one());
    }

    #[test]
    fn set_lift_is_zero_one() {
        assert_eq!(set_lift(&F2(true)), BigInt::from(1));
        assert_eq!(set_lift(&F2(false)), BigInt::from(0));
    }
}
