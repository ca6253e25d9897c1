//! Dense univariate polynomials, ascending coefficients, no trailing zeros.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{format_rational, rational_square_root, Rational};
use crate::poly::{text, PolyError};

/// A univariate polynomial with exact rational coefficients.
///
/// The zero polynomial is the empty coefficient list; otherwise the leading
/// coefficient is nonzero and `degree() == len - 1`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `c * z^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// The identity polynomial `z`.
    pub fn variable() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `z^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, z: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Substitute the variable by another polynomial (composition).
    pub fn substitute(&self, inner: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &UniPoly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact square root with positive leading coefficient, when one exists.
    ///
    /// Peels coefficients from the leading term downward, then verifies the
    /// full square so transcription or peeling mistakes cannot pass silently.
    pub fn square_root(&self) -> Option<UniPoly> {
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        let d = self.degree().unwrap();
        if !d.is_multiple_of(2) {
            return None;
        }
        let n = d / 2;
        let lead = rational_square_root(self.leading().unwrap())?;
        if lead.is_zero() {
            return None;
        }
        let mut q = vec![Rational::zero(); n + 1];
        q[n] = lead;
        let two_lead = &q[n] + &q[n];
        for k in (0..n).rev() {
            let mut acc = self.coeff(n + k);
            let mut i = k + 1;
            while i <= n.saturating_sub(1) {
                let j = n + k - i;
                if j > k && j < n {
                    acc -= &q[i] * &q[j];
                }
                i += 1;
            }
            q[k] = acc / &two_lead;
        }
        let root = UniPoly::new(q);
        if &(&root * &root) == self {
            Some(root)
        } else {
            None
        }
    }

    /// Parse the term grammar. Any single identifier may serve as the
    /// variable; mixing identifiers is an error.
    pub fn parse(s: &str) -> Result<UniPoly, PolyError> {
        let terms = text::parse_terms(s)?;
        let mut var: Option<String> = None;
        let mut poly = UniPoly::zero();
        for term in terms {
            let mut pow = 0usize;
            for (name, e) in term.vars {
                match &var {
                    None => var = Some(name.clone()),
                    Some(v) if *v == name => {}
                    Some(_) => return Err(PolyError::UnknownVariable(name)),
                }
                pow += e as usize;
            }
            poly = &poly + &UniPoly::monomial(term.coeff, pow);
        }
        Ok(poly)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) + rhs.coeff(k));
        }
        UniPoly::new(v)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) - rhs.coeff(k));
        }
        UniPoly::new(v)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::new(v)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{}", format_rational(&mag))?;
            }
            if k > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "x")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}
