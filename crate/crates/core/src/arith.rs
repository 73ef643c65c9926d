//! Exact scalar helpers shared by every module.
//!
//! Everything here is arbitrary precision. `Q` is the rational type used in
//! public signatures; small number-theoretic helpers work on machine integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::str::FromStr;

pub type Z = BigInt;
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(Z::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(Z::from(n), Z::from(d))
}

pub fn z(n: i64) -> Z {
    Z::from(n)
}

/// Error for malformed `p/q` strings.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational literal {0:?}")]
pub struct ParseRationalError(pub String);

/// Parses `"p"` or `"p/q"` (q non-zero). Whitespace around the parts is not accepted.
pub fn parse_rational(s: &str) -> Result<Q, ParseRationalError> {
    let err = || ParseRationalError(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let n = Z::from_str(num).map_err(|_| err())?;
    match den {
        None => Ok(Q::from_integer(n)),
        Some(d) => {
            let d = Z::from_str(d).map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Q::new(n, d))
        }
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise, in lowest terms.
pub fn format_rational(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Display adaptor for rationals in the canonical `p/q` form.
pub struct Rat<'a>(pub &'a Q);

impl fmt::Display for Rat<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(self.0))
    }
}

pub fn to_i64(x: &Z) -> Option<i64> {
    x.to_i64()
}

/// Returns the integer value of `x` if it is integral and fits in `i64`.
pub fn q_to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn q_abs(x: &Q) -> Q {
    x.abs()
}

/// Nearest integer, ties rounded towards +infinity.
pub fn round_q(x: &Q) -> Z {
    let two = Z::from(2);
    let num = x.numer() * &two + x.denom();
    let den = x.denom() * &two;
    num.div_floor(&den)
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / a.gcd(&b) * b
    }
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn moebius(n: u64) -> i64 {
    assert!(n > 0);
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0);
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Composite in the usual sense: at least 4 and not prime. 1 is neither prime nor composite.
pub fn is_composite(n: u64) -> bool {
    n >= 4 && !is_prime(n)
}

/// Exact inner product of two rational vectors.
pub fn dot(a: &[Q], b: &[Q]) -> Q {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_one(x: &Q) -> bool {
    x.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text_round_trip() {
        for s in ["0", "7", "-3", "26/7", "-1/2", "216/75"] {
            let v = parse_rational(s).unwrap();
            let t = format_rational(&v);
            assert_eq!(parse_rational(&t).unwrap(), v);
        }
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1 /2").is_err());
    }

    #[test]
    fn number_theory() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(12), 0);
        assert_eq!(moebius(30), -1);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(23), 22);
        assert!(is_composite(9) && is_composite(4) && !is_composite(1) && !is_composite(13));
        assert_eq!(lcm_u64(4, 6), 12);
    }

    #[test]
    fn rounding() {
        assert_eq!(round_q(&qf(1, 2)), z(1));
        assert_eq!(round_q(&qf(-1, 2)), z(0));
        assert_eq!(round_q(&qf(-3, 2)), z(-1));
        assert_eq!(round_q(&qf(7, 3)), z(2));
        assert_eq!(round_q(&qf(-7, 3)), z(-2));
    }
}
