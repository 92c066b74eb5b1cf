//! Rational scalar with an inline machine-word fast path.
//!
//! Echelon entries in this project are overwhelmingly tiny integers, and
//! heap-allocated big rationals dominate the cost of elimination. `Scalar`
//! keeps values as `Ratio<i64>` while every operation fits, and falls back to
//! [`Rational`] on overflow, so results are always exact.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{CheckedMul, CheckedSub, One, ToPrimitive, Zero};

use super::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Scalar {
    Small(Ratio<i64>),
    Big(Box<Rational>),
}

impl Scalar {
    pub fn one() -> Self {
        Scalar::Small(Ratio::one())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Small(x) => x.is_zero(),
            Scalar::Big(x) => x.is_zero(),
        }
    }

    pub fn from_rational(x: &Rational) -> Self {
        match (x.numer().to_i64(), x.denom().to_i64()) {
            (Some(n), Some(d)) => Scalar::Small(Ratio::new_raw(n, d)),
            _ => Scalar::Big(Box::new(x.clone())),
        }
    }

    pub fn to_rational(&self) -> Rational {
        match self {
            Scalar::Small(x) => Rational::new_raw(BigInt::from(*x.numer()), BigInt::from(*x.denom())),
            Scalar::Big(x) => (**x).clone(),
        }
    }

    fn demote(x: Rational) -> Self {
        Self::from_rational(&x)
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        if let (Scalar::Small(a), Scalar::Small(b)) = (self, other) {
            if let Some(r) = a.checked_mul(b) {
                return Scalar::Small(r);
            }
        }
        Self::demote(self.to_rational() * other.to_rational())
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        if let (Scalar::Small(a), Scalar::Small(b)) = (self, other) {
            if let Some(r) = a.checked_sub(b) {
                return Scalar::Small(r);
            }
        }
        Self::demote(self.to_rational() - other.to_rational())
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.sub(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Small(x) if *x.numer() != i64::MIN => Scalar::Small(-*x),
            _ => Self::demote(-self.to_rational()),
        }
    }

    /// Multiplicative inverse; the value must be nonzero.
    pub fn recip(&self) -> Scalar {
        match self {
            Scalar::Small(x) if *x.numer() != i64::MIN => Scalar::Small(x.recip()),
            _ => Self::demote(self.to_rational().recip()),
        }
    }
}
