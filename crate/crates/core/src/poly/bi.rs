//! Sparse bivariate polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{format_rational, Rational};
use crate::poly::{text, PolyError, UniPoly};

/// A bivariate polynomial stored as a map from `(i, j)` to the coefficient of
/// `x^i * y^j`. Zero coefficients are never stored; equality is map equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = BiPoly::default();
        p.insert(0, 0, c);
        p
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `c * x^i * y^j`
    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut p = BiPoly::default();
        p.insert(i, j, c);
        p
    }

    fn insert(&mut self, i: u32, j: u32, c: Rational) {
        if !c.is_zero() {
            self.terms.insert((i, j), c);
        }
    }

    fn add_to(&mut self, i: u32, j: u32, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        // power tables keep this to two multiplications per term
        let max = |pick: fn(&(u32, u32)) -> u32| {
            self.terms.keys().map(pick).max().unwrap_or(0) as usize
        };
        let powers = |base: &Rational, n: usize| {
            let mut v = Vec::with_capacity(n + 1);
            v.push(Rational::one());
            for k in 0..n {
                let next = &v[k] * base;
                v.push(next);
            }
            v
        };
        let xs = powers(x, max(|k| k.0));
        let ys = powers(y, max(|k| k.1));
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * &xs[i as usize] * &ys[j as usize];
        }
        acc
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, v)| (k, v * c))
                .collect(),
        }
    }

    /// Total degree when homogeneous, `None` otherwise (zero counts as
    /// homogeneous of degree 0 here only for the empty map).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let d = first.0 + first.1;
        for k in it {
            if k.0 + k.1 != d {
                return None;
            }
        }
        Some(d)
    }

    /// Substitute a rational for `y`, collapsing to a univariate polynomial
    /// in `x`.
    pub fn substitute_y(&self, v: &Rational) -> UniPoly {
        let mut acc = UniPoly::zero();
        for (&(i, j), c) in &self.terms {
            let mut coeff = c.clone();
            for _ in 0..j {
                coeff *= v;
            }
            acc = &acc + &UniPoly::monomial(coeff, i as usize);
        }
        acc
    }

    /// Substitute a rational for `x`, collapsing to a univariate polynomial
    /// in `y`.
    pub fn substitute_x(&self, v: &Rational) -> UniPoly {
        let mut acc = UniPoly::zero();
        for (&(i, j), c) in &self.terms {
            let mut coeff = c.clone();
            for _ in 0..i {
                coeff *= v;
            }
            acc = &acc + &UniPoly::monomial(coeff, j as usize);
        }
        acc
    }

    /// Substitute `y = 1`, collapsing to a univariate polynomial in `x`.
    pub fn dehomogenize_y(&self) -> UniPoly {
        self.substitute_y(&Rational::one())
    }

    /// Exact square root when one exists, `None` otherwise.
    ///
    /// Handles the zero polynomial, polynomials in a single variable, and
    /// homogeneous polynomials (dehomogenize at `y = 1`, take the univariate
    /// root, rehomogenize). Other shapes are unsupported and report `None`;
    /// all inputs arising here are of the handled shapes.
    pub fn square_root(&self) -> Option<BiPoly> {
        if self.is_zero() {
            return Some(BiPoly::zero());
        }
        let only_x = self.terms.keys().all(|&(_, j)| j == 0);
        let only_y = self.terms.keys().all(|&(i, _)| i == 0);
        if only_x || only_y {
            let uni = UniPoly::new(
                (0..=self.terms.keys().map(|&(i, j)| i.max(j)).max().unwrap())
                    .map(|k| {
                        let key = if only_x { (k, 0) } else { (0, k) };
                        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
                    })
                    .collect(),
            );
            let root = uni.square_root()?;
            let mut out = BiPoly::zero();
            for (k, c) in root.coeffs().iter().enumerate() {
                if only_x {
                    out.add_to(k as u32, 0, c);
                } else {
                    out.add_to(0, k as u32, c);
                }
            }
            return Some(out);
        }
        let d = self.homogeneous_degree()?;
        if d % 2 != 0 {
            return None;
        }
        let half = d / 2;
        let root_uni = self.dehomogenize_y().square_root()?;
        let mut root = BiPoly::zero();
        for (k, c) in root_uni.coeffs().iter().enumerate() {
            let i = k as u32;
            if i > half {
                return None;
            }
            root.add_to(i, half - i, c);
        }
        if &(&root * &root) == self {
            Some(root)
        } else {
            None
        }
    }

    /// Parse with variables named `x` and `y`.
    pub fn parse(s: &str) -> Result<BiPoly, PolyError> {
        Self::parse_with_vars(s, "x", "y")
    }

    /// Parse with caller-chosen variable names.
    pub fn parse_with_vars(s: &str, vx: &str, vy: &str) -> Result<BiPoly, PolyError> {
        let terms = text::parse_terms(s)?;
        let mut poly = BiPoly::zero();
        for term in terms {
            let (mut i, mut j) = (0u32, 0u32);
            for (name, e) in term.vars {
                if name == vx {
                    i += e;
                } else if name == vy {
                    j += e;
                } else {
                    return Err(PolyError::UnknownVariable(name));
                }
            }
            poly.add_to(i, j, &term.coeff);
        }
        Ok(poly)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_to(i, j, c);
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_to(i, j, &-c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_to(i1 + i2, j1 + j2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // descending total degree, then descending x power
        let mut keys: Vec<(u32, u32)> = self.terms.keys().cloned().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
        let mut first = true;
        for (i, j) in keys {
            let c = &self.terms[&(i, j)];
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
            let show_coeff = !mag.is_one() || (i == 0 && j == 0);
            if show_coeff {
                write!(f, "{}", format_rational(&mag))?;
            }
            let mut lead = !show_coeff;
            for (v, e) in [("x", i), ("y", j)] {
                if e == 0 {
                    continue;
                }
                if !lead {
                    write!(f, "*")?;
                }
                lead = false;
                write!(f, "{v}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    fn bp(s: &str) -> BiPoly {
        BiPoly::parse(s).unwrap()
    }

    #[test]
    fn product_of_conjugates() {
        let p = &bp("x + y") * &bp("x - y");
        assert_eq!(p, bp("x^2 - y^2"));
    }

    #[test]
    fn eval_example() {
        let p = bp("3*x^2*y - 1/2*y^3 + 4");
        assert_eq!(p.eval(&rat(2, 1), &rat(3, 1)), rat(53, 2));
    }

    #[test]
    fn substitution_collapses_to_univariate() {
        let p = bp("x^2*y + 2*x*y^2 - y + 5");
        let in_x = p.substitute_y(&rat(3, 1));
        assert_eq!(in_x, crate::poly::UniPoly::parse("3*x^2 + 18*x + 2").unwrap());
        let in_y = p.substitute_x(&rat(1, 2));
        assert_eq!(
            in_y,
            crate::poly::UniPoly::parse("y^2 - 3/4*y + 5").unwrap()
        );
        // eval commutes with substitute-then-eval
        assert_eq!(in_x.eval(&rat(7, 1)), p.eval(&rat(7, 1), &rat(3, 1)));
    }

    #[test]
    fn square_root_shapes() {
        let sq = bp("x^2 + x*y").pow(2);
        assert_eq!(sq.square_root(), Some(bp("x^2 + x*y")));
        // univariate in disguise
        assert_eq!(bp("x^2 + 2*x + 1").square_root(), Some(bp("x + 1")));
        assert_eq!(bp("y^4").square_root(), Some(bp("y^2")));
        // unsupported / non-square shapes
        assert_eq!(bp("x^2*y + 1").square_root(), None);
        assert_eq!(bp("x*y").square_root(), None);
        assert_eq!(BiPoly::zero().square_root(), Some(BiPoly::zero()));
    }

    #[test]
    fn parse_with_custom_names() {
        let p = BiPoly::parse_with_vars("r1^2 - 4*r1*r2 + r2^2", "r1", "r2").unwrap();
        assert_eq!(p, bp("x^2 - 4*x*y + y^2"));
        assert!(BiPoly::parse("x + z").is_err());
    }

    fn small_bipoly() -> impl Strategy<Value = BiPoly> {
        proptest::collection::vec((0u32..4, 0u32..4, -9i64..=9), 0..6).prop_map(|ts| {
            let mut p = BiPoly::zero();
            for (i, j, c) in ts {
                p.add_to(i, j, &rat(c, 1));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_bipoly(), b in small_bipoly(), c in small_bipoly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn display_parse_round_trip(p in small_bipoly()) {
            prop_assert_eq!(BiPoly::parse(&p.to_string()).unwrap(), p);
        }

        #[test]
        fn eval_is_ring_hom(a in small_bipoly(), b in small_bipoly(), x in -9i64..=9, y in -9i64..=9) {
            let (x, y) = (rat(x, 1), rat(y, 1));
            prop_assert_eq!((&a * &b).eval(&x, &y), a.eval(&x, &y) * b.eval(&x, &y));
            prop_assert_eq!((&a + &b).eval(&x, &y), a.eval(&x, &y) + b.eval(&x, &y));
        }

        #[test]
        fn homogeneous_square_root(ts in proptest::collection::vec((0u32..=5, -9i64..=9), 1..5)) {
            // build a homogeneous polynomial of degree 5, square it, recover
            let mut p = BiPoly::zero();
            for (i, c) in ts {
                p.add_to(i, 5 - i, &rat(c, 1));
            }
            let sq = &p * &p;
            if p.is_zero() {
                prop_assert_eq!(sq.square_root(), Some(BiPoly::zero()));
            } else {
                let r = sq.square_root().expect("square must have a root");
                prop_assert_eq!(&r * &r, sq);
            }
        }
    }
}
