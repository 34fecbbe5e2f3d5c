//! Decidable subrings of the ambient cyclotomic field.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::FieldScalar;
use crate::error::ScalarError;

/// p-adic valuation of a rational; zero has valuation `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

/// Returns `v` with `q = p^v * (a/b)` and `p` dividing neither `a` nor `b`.
pub fn p_valuation(q: &BigRational, p: u64) -> Valuation {
    assert!(is_prime(p), "{p} is not prime");
    if q.is_zero() {
        return Valuation::Infinite;
    }
    let p = BigInt::from(p);
    let count = |mut x: BigInt| {
        let mut v = 0i64;
        loop {
            let (d, r) = x.div_rem(&p);
            if !r.is_zero() {
                return v;
            }
            x = d;
            v += 1;
        }
    };
    Valuation::Finite(count(q.numer().abs()) - count(q.denom().abs()))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes dividing `n` in increasing order.
pub fn prime_divisors(n: &BigInt) -> Vec<u64> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while BigInt::from(p) * BigInt::from(p) <= n {
        let bp = BigInt::from(p);
        if (&n % &bp).is_zero() {
            out.push(p);
            while (&n % &bp).is_zero() {
                n /= &bp;
            }
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push(n.try_into().expect("prime factor fits in u64"));
    }
    out
}

/// A subring `R` of the ambient field with a decidable membership test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SubringSpec {
    /// The rational integers.
    Integers,
    /// `Z` localized at a prime: rationals whose denominator is prime to `p`.
    LocalizedAt(u64),
    /// `Z[zeta_N]`, the full ring of integers of `Q(zeta_N)`.
    CyclotomicIntegers(u32),
}

impl SubringSpec {
    pub fn localized(p: u64) -> Result<Self, ScalarError> {
        if is_prime(p) {
            Ok(SubringSpec::LocalizedAt(p))
        } else {
            Err(ScalarError::Parse(format!("{p} is not prime")))
        }
    }

    /// Membership test.
    ///
    /// `Integers` and `LocalizedAt` accept any element whose value is rational,
    /// whatever field it is stored in; a non-rational value is outside their
    /// ambient field `Q`. `CyclotomicIntegers(N)` accepts elements stored with a
    /// conductor dividing `N`, and rational values.
    pub fn contains(&self, x: &FieldScalar) -> Result<bool, ScalarError> {
        match *self {
            SubringSpec::Integers | SubringSpec::LocalizedAt(_) => {
                let q = x.as_rational().ok_or(ScalarError::IncompatibleField {
                    conductor: x.conductor(),
                    target: 1,
                })?;
                Ok(match *self {
                    SubringSpec::Integers => q.is_integer(),
                    SubringSpec::LocalizedAt(p) => p_valuation(q, p) >= Valuation::Finite(0),
                    SubringSpec::CyclotomicIntegers(_) => unreachable!(),
                })
            }
            SubringSpec::CyclotomicIntegers(n) => {
                if n % x.conductor() != 0 && !x.is_rational() {
                    return Err(ScalarError::IncompatibleField {
                        conductor: x.conductor(),
                        target: n,
                    });
                }
                // Z[zeta_M] is the ring of integers of Q(zeta_M), so integral
                // coordinates in the element's own power basis decide membership.
                Ok(x.has_integral_coords())
            }
        }
    }
}

pub fn in_subring(x: &FieldScalar, r: &SubringSpec) -> Result<bool, ScalarError> {
    r.contains(x)
}

impl fmt::Display for SubringSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubringSpec::Integers => write!(f, "Z"),
            SubringSpec::LocalizedAt(p) => write!(f, "Zp:{p}"),
            SubringSpec::CyclotomicIntegers(n) => write!(f, "OK:{n}"),
        }
    }
}

impl FromStr for SubringSpec {
    type Err = ScalarError;

    /// Parses `Z`, `Zp:<p>` or `OK:<N>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ScalarError::Parse(format!("unknown ring {s:?}; expected Z, Zp:<p> or OK:<N>"));
        if s == "Z" {
            return Ok(SubringSpec::Integers);
        }
        if let Some(p) = s.strip_prefix("Zp:") {
            return SubringSpec::localized(p.parse().map_err(|_| bad())?);
        }
        if let Some(n) = s.strip_prefix("OK:") {
            let n: u32 = n.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            return Ok(SubringSpec::CyclotomicIntegers(n));
        }
        Err(bad())
    }
}
