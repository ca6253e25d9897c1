//! Exact integer and rational arithmetic: square detection, quadruple
//! normalization, and the canonical `p/q` text form.
//!
//! Every value in this crate is built from these two scalars. No floating
//! point appears anywhere in a computation path.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;
/// Arbitrary-precision rational, always stored reduced with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    /// `isqrt_floor` of a negative integer.
    NegativeSquareRoot,
    /// `normalize_quadruple` of the all-zero quadruple.
    ZeroQuadruple,
    /// Text that does not match the `p` / `p/q` grammar.
    ParseRational(String),
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::NegativeSquareRoot => write!(f, "square root of a negative integer"),
            ArithError::ZeroQuadruple => write!(f, "cannot normalize the all-zero quadruple"),
            ArithError::ParseRational(s) => write!(f, "invalid rational literal: {s:?}"),
        }
    }
}

impl std::error::Error for ArithError {}

/// Convenience constructor for small integers.
pub fn int(n: i64) -> Integer {
    Integer::from(n)
}

/// Convenience constructor for small rationals; panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

/// Floor of the square root of a nonnegative integer.
///
/// Newton iteration on integers, started above the root, followed by a
/// bracketing fix-up so the postcondition `r^2 <= n < (r+1)^2` is checked
/// rather than assumed.
pub fn isqrt_floor(n: &Integer) -> Result<Integer, ArithError> {
    if n.is_negative() {
        return Err(ArithError::NegativeSquareRoot);
    }
    if n.is_zero() {
        return Ok(Integer::zero());
    }
    // 2^ceil(bits/2) >= sqrt(n), so the iteration descends to the floor.
    let mut r: Integer = Integer::one() << n.bits().div_ceil(2);
    loop {
        let next: Integer = (&r + n / &r) >> 1;
        if next >= r {
            break;
        }
        r = next;
    }
    while &r * &r > *n {
        r -= 1;
    }
    let succ: Integer = &r + 1;
    assert!(
        &r * &r <= *n && &succ * &succ > *n,
        "isqrt bracketing violated for {n}"
    );
    Ok(r)
}

/// The exact square root of `n` when `n` is a perfect square, `None` otherwise.
/// Negative inputs are never squares.
pub fn perfect_square_root(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    let r = isqrt_floor(n).expect("nonnegative");
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// The exact nonnegative square root of a rational, present iff numerator and
/// denominator (in lowest terms) are both perfect squares.
pub fn rational_square_root(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let rn = perfect_square_root(q.numer())?;
    let rd = perfect_square_root(q.denom())?;
    Some(Rational::new(rn, rd))
}

/// Divide a quadruple of integers by the gcd of its entries, preserving order
/// and signs. The result has gcd 1.
pub fn normalize_quadruple(v: &[Integer; 4]) -> Result<[Integer; 4], ArithError> {
    let mut g = Integer::zero();
    for z in v {
        g = g.gcd(z);
    }
    if g.is_zero() {
        return Err(ArithError::ZeroQuadruple);
    }
    Ok([&v[0] / &g, &v[1] / &g, &v[2] / &g, &v[3] / &g])
}

/// Canonical text form: `p/q`, or just `p` when the denominator is 1.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parse the canonical text form. Accepts an optional leading sign on the
/// numerator; the denominator must be a positive integer. No decimals.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let s = s.trim();
    let bad = || ArithError::ParseRational(s.to_string());
    let (ns, ds) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer = Integer::from_str(ns).map_err(|_| bad())?;
    let denom = match ds {
        None => Integer::one(),
        Some(d) => {
            if d.starts_with('+') || d.starts_with('-') {
                return Err(bad());
            }
            let d = Integer::from_str(d).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            d
        }
    };
    Ok(Rational::new(numer, denom))
}
