//! The first parametric family: pairs of Brahmagupta quadrilaterals with
//! equal perimeters and equal areas in which each quadrilateral has two equal
//! sides, driven by two coprime integer parameters.
//!
//! Both routes are implemented: the closed-form side polynomials, and the
//! full seed pipeline (square parametrization of the transformed system plus
//! the inverse linear transformation). `build_pair` runs both and insists
//! they agree up to the single expected constant factor.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::arith::{rational_square_root, Integer, Rational};
use crate::fermat::{self, Quartic};
use crate::poly::BiPoly;
use crate::quad::{self, QuadSides};
use crate::record::{PairRecord, Provenance};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoError {
    /// Parameters violating the invariants (zero, negative, or equal).
    Degenerate(String),
    /// An internal cross-check failed; signals an implementation bug.
    Internal(String),
    /// The quartic-square iteration degenerated before producing enough seeds.
    Stalled { produced: usize },
}

impl fmt::Display for IsoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoError::Degenerate(msg) => write!(f, "degenerate parameters: {msg}"),
            IsoError::Internal(msg) => write!(f, "internal consistency error: {msg}"),
            IsoError::Stalled { produced } => {
                write!(f, "seed iteration stalled after {produced} seeds")
            }
        }
    }
}

impl std::error::Error for IsoError {}

/// Coprime positive integer parameters with `r1 != r2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoParams {
    r1: Integer,
    r2: Integer,
}

impl IsoParams {
    /// Reduce to coprime form; rejects nonpositive or equal parameters.
    pub fn new(r1: Integer, r2: Integer) -> Result<Self, IsoError> {
        if !r1.is_positive() || !r2.is_positive() {
            return Err(IsoError::Degenerate(format!(
                "parameters must be positive integers, got ({r1}, {r2})"
            )));
        }
        let g = r1.gcd(&r2);
        let (r1, r2) = (r1 / &g, r2 / &g);
        if r1 == r2 {
            return Err(IsoError::Degenerate(
                "equal parameters collapse the construction".into(),
            ));
        }
        Ok(IsoParams { r1, r2 })
    }

    /// The construction is homogeneous, so rational parameters reduce to the
    /// coprime integer pair with the same ratio.
    pub fn from_rationals(r1: &Rational, r2: &Rational) -> Result<Self, IsoError> {
        if r2.is_zero() {
            return Err(IsoError::Degenerate("second parameter is zero".into()));
        }
        let ratio = r1 / r2;
        Self::new(ratio.numer().clone(), ratio.denom().clone())
    }

    pub fn r1(&self) -> &Integer {
        &self.r1
    }

    pub fn r2(&self) -> &Integer {
        &self.r2
    }

    fn rat(&self) -> (Rational, Rational) {
        (
            Rational::from_integer(self.r1.clone()),
            Rational::from_integer(self.r2.clone()),
        )
    }
}

/// A solved instance of the transformed system: the square parametrization
/// plus the two transformed quadruples (`x` carries the equal-side pair in
/// its last two slots, and likewise `y`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoSeed {
    pub q1: Rational,
    pub q2: Rational,
    pub p1: Rational,
    pub p2: Rational,
    pub x: [Rational; 4],
    pub y: [Rational; 4],
}

impl IsoSeed {
    fn build(q1: Rational, q2: Rational, r1: &Rational, r2: &Rational) -> Self {
        let d1 = r1 - r2;
        let d2 = &q1 - &q2;
        let p1 = &d1 * &d1;
        let p2 = &d2 * &d2;
        let x = [
            &p1 * &(&q1 * &q1),
            &p1 * &(&q2 * &q2),
            &p2 * &(r1 * r2),
            &p2 * &(r1 * r2),
        ];
        let y = [
            &p2 * &(r1 * r1),
            &p2 * &(r2 * r2),
            &p1 * &(&q1 * &q2),
            &p1 * &(&q1 * &q2),
        ];
        IsoSeed { q1, q2, p1, p2, x, y }
    }

    fn verify(&self) -> Result<(), IsoError> {
        let fail = |msg: &str| Err(IsoError::Internal(msg.into()));
        if self.x[3] != self.x[2] || self.y[3] != self.y[2] {
            return fail("equal-side slots differ");
        }
        if rational_square_root(&(&self.x[0] * &self.x[1])).is_none() {
            return fail("x1*x2 is not a rational square");
        }
        if rational_square_root(&(&self.y[0] * &self.y[1])).is_none() {
            return fail("y1*y2 is not a rational square");
        }
        let sum_x: Rational = self.x.iter().sum();
        let sum_y: Rational = self.y.iter().sum();
        if sum_x != sum_y {
            return fail("transformed sums differ");
        }
        let prod_x: Rational = self.x.iter().product();
        let prod_y: Rational = self.y.iter().product();
        if prod_x != prod_y {
            return fail("transformed products differ");
        }
        if rational_square_root(&prod_x).is_none() {
            return fail("transformed product is not a perfect square");
        }
        Ok(())
    }

    /// Invert the linear transformation: each side is half the transformed
    /// sum minus the corresponding transformed value.
    pub fn sides(&self) -> ([Rational; 4], [Rational; 4]) {
        let two = Rational::from_integer(Integer::from(2));
        let half_sum = self.x.iter().sum::<Rational>() / &two;
        let a = [
            &half_sum - &self.x[0],
            &half_sum - &self.x[1],
            &half_sum - &self.x[2],
            &half_sum - &self.x[3],
        ];
        let b = [
            &half_sum - &self.y[0],
            &half_sum - &self.y[1],
            &half_sum - &self.y[2],
            &half_sum - &self.y[3],
        ];
        (a, b)
    }
}

/// The quartic form in the first two arguments whose square values make both
/// diagonal triple-product conditions perfect squares.
pub fn diagonal_square_form(q1: &Rational, q2: &Rational, r1: &Rational, r2: &Rational) -> Rational {
    let rr = r1 * r2;
    let rr2 = &rr * &rr;
    let q1_2 = q1 * q1;
    let q2_2 = q2 * q2;
    let four = Rational::from_integer(Integer::from(4));
    let mid = middle_coefficient(r1, r2);
    &rr2 * &(&q1_2 * &q1_2)
        - &four * &rr2 * &(&q1_2 * q1) * q2
        + &mid * &q1_2 * &q2_2
        - &four * &rr2 * q1 * &(&q2_2 * q2)
        + &rr2 * &(&q2_2 * &q2_2)
}

fn middle_coefficient(r1: &Rational, r2: &Rational) -> Rational {
    // r1^4 - 4 r1^3 r2 + 12 r1^2 r2^2 - 4 r1 r2^3 + r2^4
    let c = |n: i64| Rational::from_integer(Integer::from(n));
    let (r1_2, r2_2) = (r1 * r1, r2 * r2);
    &r1_2 * &r1_2 - c(4) * &r1_2 * r1 * r2 + c(12) * &r1_2 * &r2_2 - c(4) * r1 * &r2_2 * r2
        + &r2_2 * &r2_2
}

/// The default quartic-square solution and the seed it induces.
pub fn default_seed(params: &IsoParams) -> Result<IsoSeed, IsoError> {
    let (r1, r2) = params.rat();
    let c = |n: i64| Rational::from_integer(Integer::from(n));
    let rr = &r1 * &r2;
    let q1 = c(8) * &rr * &rr;
    // r1^4 - 4 r1^3 r2 + 10 r1^2 r2^2 - 4 r1 r2^3 + r2^4
    let q2 = &middle_coefficient(&r1, &r2) - &(c(2) * &rr * &rr);
    let seed = IsoSeed::build(q1, q2, &r1, &r2);
    seed.verify()?;
    let phi = diagonal_square_form(&seed.q1, &seed.q2, &r1, &r2);
    if rational_square_root(&phi).is_none() {
        return Err(IsoError::Internal(
            "default solution does not square the quartic form".into(),
        ));
    }
    Ok(seed)
}

/// Further quartic-square solutions by repeated Fermat shifts, one seed each.
/// The first iterate reproduces the default solution and is skipped.
pub fn extended_seeds(params: &IsoParams, count: usize) -> Result<Vec<IsoSeed>, IsoError> {
    if count == 0 {
        return Ok(Vec::new());
    }
    let (r1, r2) = params.rat();
    let rr2 = {
        let rr = &r1 * &r2;
        &rr * &rr
    };
    let minus4 = Rational::from_integer(Integer::from(-4));
    let quartic = Quartic::new([
        rr2.clone(),
        &minus4 * &rr2,
        middle_coefficient(&r1, &r2),
        &minus4 * &rr2,
        rr2.clone(),
    ])
    .expect("nonzero coefficients");
    let outcome = fermat::iterate(&quartic, count + 1);
    let mut solutions = outcome.solutions.into_iter();
    match solutions.next() {
        Some(first) => {
            let default = default_seed(params)?;
            if first != &default.q1 / &default.q2 {
                return Err(IsoError::Internal(
                    "first iterate differs from the default solution".into(),
                ));
            }
        }
        None => return Err(IsoError::Stalled { produced: 0 }),
    }
    let mut seeds = Vec::new();
    for z in solutions {
        let q1 = Rational::from_integer(z.numer().clone());
        let q2 = Rational::from_integer(z.denom().clone());
        let phi = diagonal_square_form(&q1, &q2, &r1, &r2);
        if rational_square_root(&phi).is_none() {
            return Err(IsoError::Internal(
                "iterated solution does not square the quartic form".into(),
            ));
        }
        let seed = IsoSeed::build(q1, q2, &r1, &r2);
        seed.verify()?;
        seeds.push(seed);
    }
    if seeds.len() < count {
        return Err(IsoError::Stalled {
            produced: seeds.len(),
        });
    }
    Ok(seeds)
}

fn rp(s: &str) -> BiPoly {
    BiPoly::parse_with_vars(s, "r1", "r2").expect("static polynomial text")
}

fn sum_sq() -> BiPoly {
    rp("r1^2 + r2^2")
}

fn near_sq() -> BiPoly {
    rp("r1^2 - 4*r1*r2 + r2^2")
}

fn diff() -> BiPoly {
    rp("r1 - r2")
}

/// The closed form of the default quartic-square solution's second value.
fn q2_poly() -> BiPoly {
    rp("r1^4 - 4*r1^3*r2 + 10*r1^2*r2^2 - 4*r1*r2^3 + r2^4")
}

fn deg8_36() -> BiPoly {
    rp("r1^8 - 8*r1^7*r2 + 36*r1^6*r2^2 - 88*r1^5*r2^3 + 198*r1^4*r2^4 - 88*r1^3*r2^5 + 36*r1^2*r2^6 - 8*r1*r2^7 + r2^8")
}

fn deg8_52() -> BiPoly {
    rp("r1^8 - 8*r1^7*r2 + 52*r1^6*r2^2 - 152*r1^5*r2^3 + 230*r1^4*r2^4 - 152*r1^3*r2^5 + 52*r1^2*r2^6 - 8*r1*r2^7 + r2^8")
}

/// Closed-form side polynomials of the two quadruples.
pub(crate) fn side_polys() -> ([BiPoly; 4], [BiPoly; 4]) {
    let a1 = &(&sum_sq() * &near_sq())
        * &rp("r1^6 - 4*r1^5*r2 + 19*r1^4*r2^2 - 40*r1^3*r2^3 + 19*r1^2*r2^4 - 4*r1*r2^5 + r2^6");
    let a2 = &(&(-&sum_sq()) * &near_sq())
        * &rp("r1^6 - 8*r1^5*r2 + 35*r1^4*r2^2 - 48*r1^3*r2^3 + 35*r1^2*r2^4 - 8*r1*r2^5 + r2^6");
    let a3 = &diff().pow(2) * &deg8_36();
    let b1 = &(&(-&diff()) * &rp("r1^4 - 8*r1^3*r2 + 10*r1^2*r2^2 + r2^4"))
        * &rp("r1^5 + r1^4*r2 - 6*r1^3*r2^2 + 18*r1^2*r2^3 - 7*r1*r2^4 + r2^5");
    let b2 = &(&diff() * &rp("r1^4 + 10*r1^2*r2^2 - 8*r1*r2^3 + r2^4"))
        * &rp("r1^5 - 7*r1^4*r2 + 18*r1^3*r2^2 - 6*r1^2*r2^3 + r1*r2^4 + r2^5");
    let b3 = &near_sq().pow(2) * &sum_sq().pow(3);
    ([a1, a2, a3.clone(), a3], [b1, b2, b3.clone(), b3])
}

/// The closed-form common-perimeter polynomial.
pub(crate) fn perimeter_poly() -> BiPoly {
    rp("2*r1^10 - 16*r1^9*r2 + 74*r1^8*r2^2 - 256*r1^7*r2^3 + 724*r1^6*r2^4 - 992*r1^5*r2^5 \
        + 724*r1^4*r2^6 - 256*r1^3*r2^7 + 74*r1^2*r2^8 - 16*r1*r2^9 + 2*r2^10")
}

/// The closed-form common-area polynomial.
pub(crate) fn area_poly() -> BiPoly {
    let c32 = BiPoly::monomial(Rational::from_integer(Integer::from(32)), 3, 3);
    &(&(&c32 * &diff().pow(2)) * &(&sum_sq().pow(2) * &near_sq().pow(2))) * &q2_poly()
}

/// The shared first diagonal (also the common trapezoid diagonal).
pub(crate) fn shared_diagonal_poly() -> BiPoly {
    let two_r1r2 = BiPoly::monomial(Rational::from_integer(Integer::from(2)), 1, 1);
    &two_r1r2 * &deg8_52()
}

/// Second diagonal of the first quadruple, as numerator and denominator.
pub(crate) fn second_diagonal_a() -> (BiPoly, BiPoly) {
    let two = BiPoly::constant(Rational::from_integer(Integer::from(2)));
    let num = &(&(&two * &deg8_36()) * &diff().pow(2)) * &(&sum_sq().pow(2) * &near_sq().pow(2));
    (num, deg8_52())
}

/// Second diagonal of the second quadruple, as numerator and denominator.
pub(crate) fn second_diagonal_b() -> (BiPoly, BiPoly) {
    let c16 = BiPoly::monomial(Rational::from_integer(Integer::from(16)), 1, 1);
    let num = &(&(&c16 * &q2_poly()) * &(&diff().pow(2) * &near_sq().pow(2))) * &sum_sq().pow(3);
    (num, deg8_52())
}

/// Circumradius of the first quadruple, as numerator and denominator.
pub(crate) fn circumradius_a() -> (BiPoly, BiPoly) {
    let c16 = BiPoly::monomial(Rational::from_integer(Integer::from(16)), 1, 1);
    (&deg8_36() * &deg8_52(), &c16 * &q2_poly())
}

/// Circumradius of the second quadruple, as numerator and denominator.
pub(crate) fn circumradius_b() -> (BiPoly, BiPoly) {
    (
        &sum_sq() * &deg8_52(),
        BiPoly::constant(Rational::from_integer(Integer::from(2))),
    )
}

/// The quartic form with the default solution substituted, as a polynomial in
/// the two parameters.
pub(crate) fn quartic_form_substituted() -> BiPoly {
    let q1 = BiPoly::monomial(Rational::from_integer(Integer::from(8)), 2, 2);
    let q2 = q2_poly();
    let rr2 = BiPoly::monomial(Rational::one(), 2, 2);
    let four = BiPoly::constant(Rational::from_integer(Integer::from(4)));
    let mid = rp("r1^4 - 4*r1^3*r2 + 12*r1^2*r2^2 - 4*r1*r2^3 + r2^4");
    let q1_2 = &q1 * &q1;
    let q2_2 = &q2 * &q2;
    let mut acc = &rr2 * &(&q1_2 * &q1_2);
    acc = &acc - &(&(&(&four * &rr2) * &(&q1_2 * &q1)) * &q2);
    acc = &acc + &(&(&mid * &q1_2) * &q2_2);
    acc = &acc - &(&(&(&four * &rr2) * &q1) * &(&q2_2 * &q2));
    &acc + &(&rr2 * &(&q2_2 * &q2_2))
}

/// The seed pipeline written symbolically: the transformed quadruples as
/// polynomials in the two parameters.
pub(crate) fn seed_polys() -> ([BiPoly; 4], [BiPoly; 4]) {
    let q1 = BiPoly::monomial(Rational::from_integer(Integer::from(8)), 2, 2);
    let q2 = q2_poly();
    let p1 = diff().pow(2);
    let p2 = (&q1 - &q2).pow(2);
    let r1r2 = BiPoly::monomial(Rational::one(), 1, 1);
    let x = [
        &p1 * &(&q1 * &q1),
        &p1 * &(&q2 * &q2),
        &p2 * &r1r2,
        &p2 * &r1r2,
    ];
    let y = [
        &p2 * &BiPoly::monomial(Rational::one(), 2, 0),
        &p2 * &BiPoly::monomial(Rational::one(), 0, 2),
        &p1 * &(&q1 * &q2),
        &p1 * &(&q1 * &q2),
    ];
    (x, y)
}

fn eval_sides(polys: &[BiPoly; 4], r1: &Rational, r2: &Rational) -> [Rational; 4] {
    [
        polys[0].eval(r1, r2),
        polys[1].eval(r1, r2),
        polys[2].eval(r1, r2),
        polys[3].eval(r1, r2),
    ]
}

/// Check the two quadruples are proportional and return the common factor.
fn proportion(
    closed: &[Rational],
    pipeline: &[Rational],
) -> Result<Rational, IsoError> {
    let mut factor: Option<Rational> = None;
    for (c, p) in closed.iter().zip(pipeline) {
        match (c.is_zero(), p.is_zero()) {
            (true, true) => continue,
            (false, false) => {
                let f = c / p;
                match &factor {
                    None => factor = Some(f),
                    Some(prev) if *prev == f => {}
                    Some(prev) => {
                        return Err(IsoError::Internal(format!(
                            "closed form and pipeline differ by non-constant factor: {prev} vs {f}"
                        )))
                    }
                }
            }
            _ => {
                return Err(IsoError::Internal(
                    "closed form and pipeline disagree on a zero side".into(),
                ))
            }
        }
    }
    factor.ok_or_else(|| IsoError::Internal("all sides vanished".into()))
}

/// Build the pair from the closed forms, cross-checked against the seed
/// pipeline and the closed-form perimeter/area/diagonal/circumradius formulas.
/// Outside the constructibility window the record carries a cleared flag.
pub fn build_pair(params: &IsoParams) -> Result<PairRecord, IsoError> {
    let (r1, r2) = params.rat();
    let (pa, pb) = side_polys();
    let sides_a = eval_sides(&pa, &r1, &r2);
    let sides_b = eval_sides(&pb, &r1, &r2);

    let seed = default_seed(params)?;
    let (pipe_a, pipe_b) = seed.sides();
    let factor_a = proportion(&sides_a, &pipe_a)?;
    let factor_b = proportion(&sides_b, &pipe_b)?;
    if factor_a != factor_b {
        return Err(IsoError::Internal(
            "closed-form factor differs between the two quadruples".into(),
        ));
    }

    let record = PairRecord::new(
        Provenance::Isosceles {
            r1: params.r1.clone(),
            r2: params.r2.clone(),
        },
        sides_a.clone(),
        sides_b.clone(),
    )
    .map_err(|e| IsoError::Internal(e.to_string()))?;

    if record.constructible() {
        verify_metrics(&sides_a, &sides_b, &r1, &r2)?;
        let (qa, qb) = record.quads().expect("constructible");
        let report = quad::equal_pair_check(&qa, &qb)
            .map_err(|e| IsoError::Internal(e.to_string()))?;
        if !report.conditions_pass() {
            return Err(IsoError::Internal(
                "equal-pair conditions failed on a constructible pair".into(),
            ));
        }
    }
    Ok(record)
}

fn verify_metrics(
    sides_a: &[Rational; 4],
    sides_b: &[Rational; 4],
    r1: &Rational,
    r2: &Rational,
) -> Result<(), IsoError> {
    let check = |label: &str, got: &Rational, want: &Rational| {
        if got == want {
            Ok(())
        } else {
            Err(IsoError::Internal(format!(
                "{label}: metrics give {got}, closed form gives {want}"
            )))
        }
    };
    let qa = QuadSides::new(sides_a.clone()).expect("positive");
    let qb = QuadSides::new(sides_b.clone()).expect("positive");
    let ma = quad::metrics(&qa).map_err(|e| IsoError::Internal(e.to_string()))?;
    let mb = quad::metrics(&qb).map_err(|e| IsoError::Internal(e.to_string()))?;

    check("perimeter", &ma.perimeter, &perimeter_poly().eval(r1, r2))?;
    let area = area_poly().eval(r1, r2);
    check(
        "area",
        ma.area.as_ref().ok_or_else(|| {
            IsoError::Internal("first quadrilateral area is not rational".into())
        })?,
        &area,
    )?;
    check(
        "area (second)",
        mb.area.as_ref().ok_or_else(|| {
            IsoError::Internal("second quadrilateral area is not rational".into())
        })?,
        &area,
    )?;
    let d1 = shared_diagonal_poly().eval(r1, r2);
    let want_d1a = ma
        .d1
        .as_ref()
        .ok_or_else(|| IsoError::Internal("first diagonal irrational".into()))?;
    check("first diagonal", want_d1a, &d1)?;
    let want_d1b = mb
        .d1
        .as_ref()
        .ok_or_else(|| IsoError::Internal("first diagonal irrational (second)".into()))?;
    check("first diagonal (second)", want_d1b, &d1)?;
    let (n2a, den) = second_diagonal_a();
    check(
        "second diagonal",
        ma.d2.as_ref().ok_or_else(|| {
            IsoError::Internal("second diagonal irrational".into())
        })?,
        &(n2a.eval(r1, r2) / den.eval(r1, r2)),
    )?;
    let (n2b, den) = second_diagonal_b();
    check(
        "second diagonal (second)",
        mb.d2.as_ref().ok_or_else(|| {
            IsoError::Internal("second diagonal irrational (second)".into())
        })?,
        &(n2b.eval(r1, r2) / den.eval(r1, r2)),
    )?;
    let (rn, rd) = circumradius_a();
    check(
        "circumradius",
        ma.circumradius.as_ref().ok_or_else(|| {
            IsoError::Internal("circumradius irrational".into())
        })?,
        &(rn.eval(r1, r2) / rd.eval(r1, r2)),
    )?;
    let (rn, rd) = circumradius_b();
    check(
        "circumradius (second)",
        mb.circumradius.as_ref().ok_or_else(|| {
            IsoError::Internal("circumradius irrational (second)".into())
        })?,
        &(rn.eval(r1, r2) / rd.eval(r1, r2)),
    )?;
    Ok(())
}

/// The same pair with the middle sides swapped in both quadruples, which
/// turns them into isosceles trapezoids whose four diagonals all equal the
/// shared diagonal value.
pub fn trapezium_variant(params: &IsoParams) -> Result<PairRecord, IsoError> {
    let pair = build_pair(params)?;
    let [a1, a2, a3, a4] = pair.sides_a().clone();
    let [b1, b2, b3, b4] = pair.sides_b().clone();
    let record = PairRecord::new(
        pair.provenance.clone(),
        [a1, a3, a2, a4],
        [b1, b3, b2, b4],
    )
    .map_err(|e| IsoError::Internal(e.to_string()))?
    .mark_trapezium();

    if record.constructible() {
        let (r1, r2) = params.rat();
        let want = shared_diagonal_poly().eval(&r1, &r2);
        let (qa, qb) = record.quads().expect("constructible");
        for (label, q) in [("first", &qa), ("second", &qb)] {
            let m = quad::metrics(q).map_err(|e| IsoError::Internal(e.to_string()))?;
            if m.d1.as_ref() != Some(&want) || m.d2.as_ref() != Some(&want) {
                return Err(IsoError::Internal(format!(
                    "{label} trapezoid diagonals differ from the shared value"
                )));
            }
        }
    }
    Ok(record)
}
