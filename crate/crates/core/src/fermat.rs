//! Fermat's method for finding rational arguments at which a quartic
//! polynomial takes perfect-square values, with iteration for further
//! solutions.
//!
//! The method matches the quartic `f` against the square of a quadratic `g`
//! that agrees with it through three coefficients (anchored at either the
//! constant or the leading end); the residual `f - g^2` then has a single
//! linear root, which is the produced argument.

use std::fmt;

use num_traits::Zero;

use crate::arith::{format_rational, rational_square_root, Rational};
use crate::poly::UniPoly;

/// `f(z) = c0 + c1 z + c2 z^2 + c3 z^3 + c4 z^4`, not identically zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Quartic {
    c: [Rational; 5],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FermatError {
    ZeroQuartic,
    /// The anchor coefficient is not a nonzero rational square.
    AnchorNotSquare,
    /// The residual degenerates: its only root is the excluded z = 0.
    NoSolution,
    /// `f` is already the square of a quadratic; every argument works.
    IdenticallySquare,
    /// The produced argument makes `f` vanish, which is degenerate downstream.
    ZeroValue,
}

impl fmt::Display for FermatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FermatError::ZeroQuartic => write!(f, "quartic is identically zero"),
            FermatError::AnchorNotSquare => {
                write!(f, "anchor coefficient is not a nonzero rational square")
            }
            FermatError::NoSolution => write!(f, "no Fermat solution from this expansion"),
            FermatError::IdenticallySquare => write!(f, "quartic is identically a square"),
            FermatError::ZeroValue => write!(f, "solution makes the quartic vanish"),
        }
    }
}

impl std::error::Error for FermatError {}

impl Quartic {
    pub fn new(c: [Rational; 5]) -> Result<Self, FermatError> {
        if c.iter().all(Zero::is_zero) {
            return Err(FermatError::ZeroQuartic);
        }
        Ok(Quartic { c })
    }

    pub fn coeffs(&self) -> &[Rational; 5] {
        &self.c
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.c.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn to_unipoly(&self) -> UniPoly {
        UniPoly::new(self.c.to_vec())
    }

    /// `f(z + s)` as a quartic; its constant term is `f(s)`.
    pub fn shift(&self, s: &Rational) -> Quartic {
        let shifted = self.to_unipoly().substitute(&(&UniPoly::variable()
            + &UniPoly::constant(s.clone())));
        let mut c = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        for (k, v) in shifted.coeffs().iter().enumerate() {
            c[k] = v.clone();
        }
        Quartic { c }
    }

    /// True when `f` is the square of a rational quadratic.
    pub fn is_square_of_quadratic(&self) -> bool {
        self.to_unipoly().square_root().is_some()
    }

    /// Comma-separated `c0,c1,c2,c3,c4` form.
    pub fn parse(s: &str) -> Result<Quartic, FermatError> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 5 {
            return Err(FermatError::ZeroQuartic);
        }
        let mut c = Vec::with_capacity(5);
        for p in parts {
            c.push(crate::arith::parse_rational(p).map_err(|_| FermatError::ZeroQuartic)?);
        }
        Quartic::new([
            c[0].clone(),
            c[1].clone(),
            c[2].clone(),
            c[3].clone(),
            c[4].clone(),
        ])
    }
}

impl fmt::Display for Quartic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.c.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Quartic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quartic({self})")
    }
}

fn finish(f: &Quartic, a: Rational, b: Rational) -> Result<Rational, FermatError> {
    if a.is_zero() && b.is_zero() {
        return Err(FermatError::IdenticallySquare);
    }
    if a.is_zero() || b.is_zero() {
        return Err(FermatError::NoSolution);
    }
    let z = -(a / b);
    if f.eval(&z).is_zero() {
        return Err(FermatError::ZeroValue);
    }
    Ok(z)
}

/// Fermat expansion anchored at the constant term.
///
/// Requires `c0 = e0^2` a nonzero square. Matching `g = e0 + b1 z + b2 z^2`
/// through degree 2 leaves `f - g^2 = z^3 (A + B z)`; the produced argument is
/// `z = -A/B`, at which `f` is the square of `g`.
pub fn root_from_constant(f: &Quartic) -> Result<Rational, FermatError> {
    let c = f.coeffs();
    let e0 = match rational_square_root(&c[0]) {
        Some(r) if !r.is_zero() => r,
        _ => return Err(FermatError::AnchorNotSquare),
    };
    let two_e0 = &e0 + &e0;
    let b1 = &c[1] / &two_e0;
    let b2 = &(&c[2] - &(&b1 * &b1)) / &two_e0;
    let a = &c[3] - &(Rational::from_integer(2.into()) * &b1 * &b2);
    let b = &c[4] - &(&b2 * &b2);
    finish(f, a, b)
}

/// Fermat expansion anchored at the leading term: the mirror of
/// [`root_from_constant`], with `c4 = e4^2` a nonzero square and a linear
/// residual at the low end.
pub fn root_from_leading(f: &Quartic) -> Result<Rational, FermatError> {
    let c = f.coeffs();
    let e4 = match rational_square_root(&c[4]) {
        Some(r) if !r.is_zero() => r,
        _ => return Err(FermatError::AnchorNotSquare),
    };
    let two_e4 = &e4 + &e4;
    let b1 = &c[3] / &two_e4;
    let b0 = &(&c[2] - &(&b1 * &b1)) / &two_e4;
    // f - (e4 z^2 + b1 z + b0)^2 = A z + B
    let a = &c[1] - &(Rational::from_integer(2.into()) * &b1 * &b0);
    let b = &c[0] - &(&b0 * &b0);
    // z = -B/A; swap the roles so `finish` solves B + A z = 0
    finish(f, b, a)
}

/// Result of repeatedly applying the method with shifts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterateOutcome {
    pub solutions: Vec<Rational>,
    /// Set when the chain degenerated before producing the requested count.
    pub stalled: bool,
    /// Set when every argument gives a square; solutions are then 1..=count
    /// by convention.
    pub identically_square: bool,
}

/// Up to `count` distinct nonzero arguments with square values, each new one
/// obtained by shifting the quartic to the previous argument (so the constant
/// term is a known square) and re-running the constant-anchored expansion.
pub fn iterate(f: &Quartic, count: usize) -> IterateOutcome {
    let start = root_from_constant(f).or_else(|_| root_from_leading(f));
    iterate_with_start(f, start, count)
}

/// As [`iterate`], but with the first solution supplied by the caller.
pub fn iterate_from(f: &Quartic, first: Rational, count: usize) -> IterateOutcome {
    iterate_with_start(f, Ok(first), count)
}

fn iterate_with_start(
    f: &Quartic,
    start: Result<Rational, FermatError>,
    count: usize,
) -> IterateOutcome {
    if f.is_square_of_quadratic() {
        return IterateOutcome {
            solutions: (1..=count as i64)
                .map(|k| Rational::from_integer(k.into()))
                .collect(),
            stalled: false,
            identically_square: true,
        };
    }
    let mut out = IterateOutcome {
        solutions: Vec::new(),
        stalled: false,
        identically_square: false,
    };
    if count == 0 {
        return out;
    }
    let mut current = match start {
        Ok(z) => z,
        Err(_) => {
            out.stalled = true;
            return out;
        }
    };
    out.solutions.push(current.clone());
    while out.solutions.len() < count {
        let shifted = f.shift(&current);
        match root_from_constant(&shifted) {
            Ok(delta) => {
                let z = &delta + &current;
                if z.is_zero() || out.solutions.contains(&z) {
                    out.stalled = true;
                    break;
                }
                out.solutions.push(z.clone());
                current = z;
            }
            Err(_) => {
                out.stalled = true;
                break;
            }
        }
    }
    out
}
