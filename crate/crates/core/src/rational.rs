//! Canonical arbitrary-precision rationals and the small integer helpers
//! (factorials, binomials) shared by every other module.
//!
//! `BigRational` already keeps `gcd(|p|, q) = 1` and `q > 0` after every
//! operation, so equality of values is structural equality of canonical forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p/q` or `p` with an optional sign and no whitespace.
///
/// Denominators `<= 0` are rejected; non-reduced fractions such as `2/4` are
/// accepted and reduced.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = |why: &str| Error::Parse(format!("{why}: {text:?}"));
    if text.is_empty() {
        return Err(bad("empty rational"));
    }
    if text.chars().any(char::is_whitespace) {
        return Err(bad("whitespace in rational"));
    }
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer = parse_int(num).ok_or_else(|| bad("malformed numerator"))?;
    let denom = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.starts_with('+') || d.starts_with('-') {
                return Err(bad("signed denominator"));
            }
            parse_int(d).ok_or_else(|| bad("malformed denominator"))?
        }
    };
    if !denom.is_positive() {
        return Err(bad("denominator must be positive"));
    }
    Ok(Rational::new(numer, denom))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc = acc.div_floor(&BigInt::from(i + 1));
    }
    acc
}

/// `base^exp` with `0^0 = 1`.
pub fn pow(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}

pub fn sign(exp: usize) -> Rational {
    if exp % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn from_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}
