//! Exact integer and rational value types.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::CountError;

/// An arbitrary-precision nonnegative count.
///
/// Signed intermediates (the alternating DAG recurrence) are carried as
/// `BigInt` inside the counting routines; only nonnegative results are
/// wrapped in this type.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactCount(BigUint);

impl ExactCount {
    pub fn one() -> Self {
        ExactCount(BigUint::one())
    }

    pub fn zero() -> Self {
        ExactCount(BigUint::zero())
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Number of decimal digits (1 for zero).
    pub fn decimal_digits(&self) -> usize {
        self.0.to_str_radix(10).len()
    }
}

impl From<BigUint> for ExactCount {
    fn from(v: BigUint) -> Self {
        ExactCount(v)
    }
}

impl From<u64> for ExactCount {
    fn from(v: u64) -> Self {
        ExactCount(BigUint::from(v))
    }
}

impl PartialEq<u64> for ExactCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl FromStr for ExactCount {
    type Err = CountError;

    /// Parses plain decimal digits; comma group separators are accepted.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits: String = s.chars().filter(|&c| c != ',').collect();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(CountError::Parse(s.to_string()));
        }
        BigUint::parse_bytes(digits.as_bytes(), 10)
            .map(ExactCount)
            .ok_or_else(|| CountError::Parse(s.to_string()))
    }
}

impl fmt::Display for ExactCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// An exact nonnegative rational `numerator / denominator`.
///
/// The pair is stored as given, not reduced: for [`ratio`](super::MemoTable::ratio)
/// the numerator is BN(n) and the denominator MB(n). Equality and ordering are
/// cross-multiplicative, so `25/15 == 5/3`.
#[derive(Clone, Debug)]
pub struct ExactRatio {
    numerator: ExactCount,
    denominator: ExactCount,
}

impl ExactRatio {
    pub fn new(numerator: ExactCount, denominator: ExactCount) -> Result<Self, CountError> {
        if denominator.is_zero() {
            return Err(CountError::ZeroDenominator);
        }
        Ok(ExactRatio {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &ExactCount {
        &self.numerator
    }

    pub fn denominator(&self) -> &ExactCount {
        &self.denominator
    }

    /// The same value in lowest terms.
    pub fn reduced(&self) -> ExactRatio {
        let g = self.numerator.0.gcd(&self.denominator.0);
        ExactRatio {
            numerator: ExactCount(&self.numerator.0 / &g),
            denominator: ExactCount(&self.denominator.0 / &g),
        }
    }

    pub fn is_integer(&self) -> bool {
        (&self.numerator.0 % &self.denominator.0).is_zero()
    }

    /// `self / other`, unreduced.
    pub fn checked_div(&self, other: &ExactRatio) -> Result<ExactRatio, CountError> {
        ExactRatio::new(
            ExactCount(&self.numerator.0 * &other.denominator.0),
            ExactCount(&self.denominator.0 * &other.numerator.0),
        )
    }
}

impl PartialEq for ExactRatio {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ExactRatio {}

impl PartialOrd for ExactRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = &self.numerator.0 * &other.denominator.0;
        let rhs = &other.numerator.0 * &self.denominator.0;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for ExactRatio {
    /// Lowest-terms `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        write!(f, "{}/{}", r.numerator, r.denominator)
    }
}
