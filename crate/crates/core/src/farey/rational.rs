use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geometry::ExtReal;

/// A point of the rational projective line: a reduced fraction `p/q` with
/// `q > 0`, or the point at infinity written `1/0`.
///
/// There is deliberately no `Ord` impl: infinity has no place on the real
/// line. Use [`ExtendedRational::canonical_cmp`] when a storage order is
/// needed and the cyclic predicates in `geometry` for anything geometric.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedRational {
    Finite(BigRational),
    Infinity,
}

impl ExtendedRational {
    /// Builds `num/den`, reducing and moving the sign to the numerator.
    /// Any `n/0` with `n != 0` is infinity.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            if num.is_zero() {
                return Err(Error::InvalidRational("0/0".into()));
            }
            return Ok(ExtendedRational::Infinity);
        }
        Ok(ExtendedRational::Finite(BigRational::new(num, den)))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        ExtendedRational::Finite(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn infinity() -> Self {
        ExtendedRational::Infinity
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedRational::Infinity)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExtendedRational::Finite(r) => Some(r),
            ExtendedRational::Infinity => None,
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            ExtendedRational::Finite(r) => r.numer().clone(),
            ExtendedRational::Infinity => BigInt::one(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            ExtendedRational::Finite(r) => r.denom().clone(),
            ExtendedRational::Infinity => BigInt::zero(),
        }
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, ExtendedRational::Finite(r) if r.is_integer())
    }

    pub fn to_ext_real(&self) -> ExtReal {
        match self {
            ExtendedRational::Finite(r) => ExtReal::Finite(r.to_f64().unwrap_or_else(|| {
                // Only reached for values far outside the f64 range.
                if r.is_negative() {
                    f64::MIN
                } else {
                    f64::MAX
                }
            })),
            ExtendedRational::Infinity => ExtReal::Infinity,
        }
    }

    /// Storage order: finite values by size, infinity last.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtendedRational::Finite(a), ExtendedRational::Finite(b)) => a.cmp(b),
            (ExtendedRational::Finite(_), ExtendedRational::Infinity) => Ordering::Less,
            (ExtendedRational::Infinity, ExtendedRational::Finite(_)) => Ordering::Greater,
            (ExtendedRational::Infinity, ExtendedRational::Infinity) => Ordering::Equal,
        }
    }
}

impl From<i64> for ExtendedRational {
    fn from(n: i64) -> Self {
        ExtendedRational::integer(n)
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for ExtendedRational {
    type Err = Error;

    /// Accepts `p/q`, a bare integer, or `inf` / `∞` for the point at infinity.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(ExtendedRational::Infinity);
        }
        let bad = || Error::InvalidRational(s.to_string());
        match t.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                if q.is_negative() {
                    return Err(bad());
                }
                Self::new(p, q).map_err(|_| bad())
            }
            None => Ok(ExtendedRational::integer(
                t.parse::<BigInt>().map_err(|_| bad())?,
            )),
        }
    }
}

/// Farey neighbor predicate `|ps - qr| = 1`.
pub fn is_farey_edge(a: &ExtendedRational, b: &ExtendedRational) -> bool {
    let det = a.numer() * b.denom() - a.denom() * b.numer();
    det.abs().is_one()
}
