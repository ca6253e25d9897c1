//! Exact geometry of cyclic quadrilaterals: area and diagonals from the four
//! sides, the circumradius, constructibility, side reorderings, and minimal
//! scaling to a Brahmagupta quadrilateral (integer sides, diagonals and area).

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::arith::{rational_square_root, Integer, Rational};

/// Consecutive sides of a cyclic quadrilateral; all strictly positive.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadSides {
    sides: [Rational; 4],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuadError {
    NonPositiveSide { index: usize, value: Rational },
    /// A side at least as long as the other three together; carries the
    /// violated triple.
    NotConstructible { side: Rational, others: [Rational; 3] },
}

impl fmt::Display for QuadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadError::NonPositiveSide { index, value } => {
                write!(f, "side {} is not positive: {}", index + 1, value)
            }
            QuadError::NotConstructible { side, others } => write!(
                f,
                "no cyclic quadrilateral: side {} >= {} + {} + {}",
                side, others[0], others[1], others[2]
            ),
        }
    }
}

impl std::error::Error for QuadError {}

impl QuadSides {
    pub fn new(sides: [Rational; 4]) -> Result<Self, QuadError> {
        for (index, s) in sides.iter().enumerate() {
            if !s.is_positive() {
                return Err(QuadError::NonPositiveSide {
                    index,
                    value: s.clone(),
                });
            }
        }
        Ok(QuadSides { sides })
    }

    pub fn from_ints(sides: [i64; 4]) -> Result<Self, QuadError> {
        Self::new(sides.map(|s| Rational::from_integer(Integer::from(s))))
    }

    pub fn sides(&self) -> &[Rational; 4] {
        &self.sides
    }

    pub fn perimeter(&self) -> Rational {
        self.sides.iter().sum()
    }

    pub fn semiperimeter(&self) -> Rational {
        self.perimeter() / Rational::from_integer(Integer::from(2))
    }

    /// Sides in ascending order, for multiset comparison.
    pub fn sorted(&self) -> [Rational; 4] {
        let mut v = self.sides.clone();
        v.sort();
        v
    }

    fn products(&self) -> [Rational; 3] {
        let [a1, a2, a3, a4] = &self.sides;
        [a1 * a2 + a3 * a4, a1 * a3 + a2 * a4, a1 * a4 + a2 * a3]
    }
}

impl fmt::Debug for QuadSides {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "QuadSides({}, {}, {}, {})",
            self.sides[0], self.sides[1], self.sides[2], self.sides[3]
        )
    }
}

/// Derived exact quantities. Squares are always rational; the optional fields
/// hold rational roots when they exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadMetrics {
    pub semiperimeter: Rational,
    pub perimeter: Rational,
    pub area_sq: Rational,
    pub area: Option<Rational>,
    pub d1_sq: Rational,
    pub d1: Option<Rational>,
    pub d2_sq: Rational,
    pub d2: Option<Rational>,
    pub circumradius_sq: Rational,
    pub circumradius: Option<Rational>,
}

/// True iff every side is strictly shorter than the other three together.
pub fn constructible(q: &QuadSides) -> bool {
    let perimeter = q.perimeter();
    q.sides()
        .iter()
        .all(|s| s + s < perimeter)
}

fn require_constructible(q: &QuadSides) -> Result<(), QuadError> {
    let perimeter = q.perimeter();
    for (i, s) in q.sides().iter().enumerate() {
        if s + s >= perimeter {
            let mut others = Vec::with_capacity(3);
            for (j, o) in q.sides().iter().enumerate() {
                if j != i {
                    others.push(o.clone());
                }
            }
            return Err(QuadError::NotConstructible {
                side: s.clone(),
                others: [others[0].clone(), others[1].clone(), others[2].clone()],
            });
        }
    }
    Ok(())
}

/// Area, diagonal and circumradius squares of a constructible quadruple, with
/// rational roots where they exist.
pub fn metrics(q: &QuadSides) -> Result<QuadMetrics, QuadError> {
    require_constructible(q)?;
    let s = q.semiperimeter();
    let area_sq: Rational = q.sides().iter().map(|a| &s - a).product();
    let [p12, p13, p14] = q.products();
    let d1_sq = &(&p12 * &p13) / &p14;
    let d2_sq = &(&p13 * &p14) / &p12;
    let sixteen = Rational::from_integer(Integer::from(16));
    let circumradius_sq = &(&(&p12 * &p13) * &p14) / &(&sixteen * &area_sq);
    Ok(QuadMetrics {
        semiperimeter: s,
        perimeter: q.perimeter(),
        area: rational_square_root(&area_sq),
        area_sq,
        d1: rational_square_root(&d1_sq),
        d1_sq,
        d2: rational_square_root(&d2_sq),
        d2_sq,
        circumradius: rational_square_root(&circumradius_sq),
        circumradius_sq,
    })
}

/// The three cyclic-order representatives of a side multiset:
/// `(a1,a2,a3,a4)`, `(a1,a3,a2,a4)`, `(a1,a2,a4,a3)`.
///
/// All three share the perimeter and squared area; their diagonals are drawn
/// from the same three values. Representatives may coincide when sides repeat;
/// no deduplication is applied.
pub fn sibling_orders(q: &QuadSides) -> [QuadSides; 3] {
    let [a1, a2, a3, a4] = q.sides().clone();
    [
        q.clone(),
        QuadSides::new([a1.clone(), a3.clone(), a2.clone(), a4.clone()]).expect("positive"),
        QuadSides::new([a1, a2, a4, a3]).expect("positive"),
    ]
}

/// Certificate that a rational quadrilateral scales to a Brahmagupta one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrahmaguptaCertificate {
    /// Minimal positive scale making sides, diagonals and area integers.
    pub scale: Rational,
    pub sides: [Integer; 4],
    pub diagonals: [Integer; 2],
    pub area: Integer,
    pub circumradius: Option<Rational>,
}

fn as_integer(q: &Rational) -> Option<Integer> {
    if q.denom().is_one() {
        Some(q.numer().clone())
    } else {
        None
    }
}

/// Minimal positive rational scale turning sides and diagonals into integers
/// and the area into an integer, when diagonals and area are rational.
///
/// The scale is built in two steps: the least rational making the six lengths
/// integral (lcm of denominators divided by the gcd of the scaled values),
/// then the least integer multiplier whose square clears the area.
pub fn scale_to_brahmagupta(q: &QuadSides) -> Result<Option<BrahmaguptaCertificate>, QuadError> {
    let m = metrics(q)?;
    let (Some(d1), Some(d2), Some(area)) = (m.d1, m.d2, m.area) else {
        return Ok(None);
    };
    let six: Vec<Rational> = q
        .sides()
        .iter()
        .cloned()
        .chain([d1.clone(), d2.clone()])
        .collect();
    let mut lcm = Integer::one();
    for v in &six {
        lcm = lcm.lcm(v.denom());
    }
    let mut content = Integer::zero();
    for v in &six {
        let scaled = v * Rational::from_integer(lcm.clone());
        content = content.gcd(scaled.numer());
    }
    let lambda0 = Rational::new(lcm, content);
    // least integer m with m^2 * lambda0^2 * area integral; the residual
    // denominator divides 4 for integral sides, so the loop is short
    let mut mult = Integer::one();
    let lambda = loop {
        let lam = &lambda0 * Rational::from_integer(mult.clone());
        if (&lam * &lam * &area).denom().is_one() {
            break lam;
        }
        mult += 1;
        assert!(mult <= Integer::from(4), "area denominator out of range");
    };
    let scaled_sides = q.sides().clone().map(|s| {
        as_integer(&(&s * &lambda)).expect("scale clears side denominators")
    });
    let scaled_diags = [
        as_integer(&(&d1 * &lambda)).expect("scale clears diagonal denominators"),
        as_integer(&(&d2 * &lambda)).expect("scale clears diagonal denominators"),
    ];
    let scaled_area = as_integer(&(&area * &(&lambda * &lambda))).expect("scale clears area");
    let circumradius = m.circumradius.map(|r| &r * &lambda);
    // recompute through the scaled quadruple as verification
    let check = metrics(&QuadSides::new(
        scaled_sides.clone().map(Rational::from_integer),
    )?)?;
    assert_eq!(check.d1.as_deref_int(), Some(&scaled_diags[0]));
    assert_eq!(check.d2.as_deref_int(), Some(&scaled_diags[1]));
    assert_eq!(check.area.as_deref_int(), Some(&scaled_area));
    Ok(Some(BrahmaguptaCertificate {
        scale: lambda,
        sides: scaled_sides,
        diagonals: scaled_diags,
        area: scaled_area,
        circumradius,
    }))
}

trait AsDerefInt {
    fn as_deref_int(&self) -> Option<&Integer>;
}

impl AsDerefInt for Option<Rational> {
    fn as_deref_int(&self) -> Option<&Integer> {
        match self {
            Some(q) if q.denom().is_one() => Some(q.numer()),
            _ => None,
        }
    }
}

/// Outcome of checking the equal-perimeter / equal-area / square-diagonal
/// conditions on a pair of quadruples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualPairReport {
    pub perimeter_equal: bool,
    pub area_sq_equal: bool,
    pub first_triple_square: bool,
    pub second_triple_square: bool,
    pub multisets_distinct: bool,
}

impl EqualPairReport {
    /// The shared-value and square conditions, distinctness aside.
    pub fn conditions_pass(&self) -> bool {
        self.perimeter_equal
            && self.area_sq_equal
            && self.first_triple_square
            && self.second_triple_square
    }

    pub fn all_pass(&self) -> bool {
        self.conditions_pass() && self.multisets_distinct
    }
}

fn triple_product(q: &QuadSides) -> Rational {
    let [p12, p13, p14] = q.products();
    &(&p12 * &p13) * &p14
}

/// Check a candidate pair: equal perimeters, equal squared areas, both
/// triple products perfect squares, side multisets distinct.
pub fn equal_pair_check(a: &QuadSides, b: &QuadSides) -> Result<EqualPairReport, QuadError> {
    let ma = metrics(a)?;
    let mb = metrics(b)?;
    Ok(EqualPairReport {
        perimeter_equal: ma.perimeter == mb.perimeter,
        area_sq_equal: ma.area_sq == mb.area_sq,
        first_triple_square: rational_square_root(&triple_product(a)).is_some(),
        second_triple_square: rational_square_root(&triple_product(b)).is_some(),
        multisets_distinct: a.sorted() != b.sorted(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use proptest::prelude::*;

    fn q(sides: [i64; 4]) -> QuadSides {
        QuadSides::from_ints(sides).unwrap()
    }

    #[test]
    fn rectangle_metrics() {
        let m = metrics(&q([3, 4, 3, 4])).unwrap();
        assert_eq!(m.semiperimeter, rat(7, 1));
        assert_eq!(m.area, Some(rat(12, 1)));
        assert_eq!(m.d1, Some(rat(5, 1)));
        assert_eq!(m.d2, Some(rat(5, 1)));
        assert_eq!(m.circumradius, Some(rat(5, 2)));
    }

    #[test]
    fn first_reference_quadrilateral() {
        let m = metrics(&q([165, 1635, 1313, 1313])).unwrap();
        assert_eq!(m.perimeter, rat(4426, 1));
        assert_eq!(m.area, Some(rat(979200, 1)));
        assert_eq!(m.d1, Some(rat(1412, 1)));
        assert_eq!(m.d2, Some(rat(590850, 353)));
        assert_eq!(m.circumradius, Some(rat(463489, 544)));
    }

    #[test]
    fn second_reference_quadrilateral() {
        let m = metrics(&q([413, 1763, 1125, 1125])).unwrap();
        assert_eq!(m.perimeter, rat(4426, 1));
        assert_eq!(m.area, Some(rat(979200, 1)));
        assert_eq!(m.d1, Some(rat(1412, 1)));
        assert_eq!(m.d2, Some(rat(612000, 353)));
        assert_eq!(m.circumradius, Some(rat(1765, 2)));
    }

    #[test]
    fn constructibility() {
        assert!(!constructible(&q([1, 1, 1, 5])));
        assert!(constructible(&q([1, 2, 3, 4])));
        assert!(constructible(&q([165, 1635, 1313, 1313])));
        // degenerate equality is rejected too
        assert!(!constructible(&q([1, 1, 1, 3])));
        assert!(metrics(&q([1, 1, 1, 5])).is_err());
    }

    #[test]
    fn sibling_orders_share_invariants() {
        let sib = sibling_orders(&q([3, 4, 3, 4]));
        assert_eq!(sib[1], q([3, 3, 4, 4]));
        for s in &sib {
            let m = metrics(s).unwrap();
            assert_eq!(m.perimeter, rat(14, 1));
            assert_eq!(m.area_sq, rat(144, 1));
        }
        let all_equal = sibling_orders(&q([1, 1, 1, 1]));
        assert_eq!(all_equal[0], all_equal[1]);
        assert_eq!(all_equal[1], all_equal[2]);
        let big = sibling_orders(&q([165, 1635, 1313, 1313]));
        for s in &big {
            assert_eq!(metrics(s).unwrap().area, Some(rat(979200, 1)));
        }
    }

    #[test]
    fn trapezium_order_equalizes_diagonals() {
        // swapping the middle sides of both reference quadruples makes every
        // diagonal 1412
        for sides in [[165, 1313, 1635, 1313], [413, 1125, 1763, 1125]] {
            let m = metrics(&q(sides)).unwrap();
            assert_eq!(m.d1, Some(rat(1412, 1)));
            assert_eq!(m.d2, Some(rat(1412, 1)));
        }
    }

    #[test]
    fn scaling_certificates() {
        let c = scale_to_brahmagupta(&q([3, 4, 3, 4])).unwrap().unwrap();
        assert_eq!(c.scale, rat(1, 1));
        assert_eq!(c.area, int(12));

        let half = QuadSides::new([rat(3, 2), rat(2, 1), rat(3, 2), rat(2, 1)]).unwrap();
        let c = scale_to_brahmagupta(&half).unwrap().unwrap();
        assert_eq!(c.scale, rat(2, 1));
        assert_eq!(c.sides, [int(3), int(4), int(3), int(4)]);
        assert_eq!(c.area, int(12));

        let c = scale_to_brahmagupta(&q([165, 1635, 1313, 1313]))
            .unwrap()
            .unwrap();
        assert_eq!(c.scale, rat(353, 1));
        // oracle: multiply the metrics through by 353 and recheck integrality
        assert_eq!(c.diagonals, [int(353) * int(1412), int(590850)]);
        assert_eq!(c.area, int(979200) * int(353) * int(353));
        // minimality: no proper divisor of the scale works
        let smaller = QuadSides::new(
            q([165, 1635, 1313, 1313])
                .sides()
                .clone()
                .map(|s| s * rat(1, 353)),
        )
        .unwrap();
        let again = scale_to_brahmagupta(&smaller).unwrap().unwrap();
        assert_eq!(again.scale, rat(353, 1) * rat(353, 1));

        // irrational diagonal: 1x2 rectangle has diagonal sqrt(5)
        assert_eq!(scale_to_brahmagupta(&q([1, 2, 1, 2])).unwrap(), None);
    }

    #[test]
    fn equal_pair_reports() {
        let r = equal_pair_check(&q([165, 1635, 1313, 1313]), &q([413, 1763, 1125, 1125])).unwrap();
        assert!(r.all_pass());

        let r = equal_pair_check(&q([3, 4, 3, 4]), &q([4, 3, 4, 3])).unwrap();
        assert!(r.conditions_pass());
        assert!(!r.multisets_distinct);

        let r = equal_pair_check(&q([1, 1, 1, 1]), &q([1, 2, 3, 4])).unwrap();
        assert!(!r.perimeter_equal);

        assert!(equal_pair_check(&q([1, 1, 1, 5]), &q([1, 1, 1, 1])).is_err());
    }

    fn arb_quad() -> impl Strategy<Value = QuadSides> {
        // three free sides plus one bounded to keep the quadruple constructible
        (1i64..60, 1i64..60, 1i64..60, 1i64..60).prop_map(|(a, b, c, raw)| {
            let d = 1 + raw % (a + b + c - 1).max(1);
            QuadSides::from_ints([a, b, c, d.min(a + b + c - 1)]).unwrap()
        })
    }

    proptest! {
        #[test]
        fn ptolemy(quad in arb_quad()) {
            prop_assume!(constructible(&quad));
            let m = metrics(&quad).unwrap();
            let [a1, a2, a3, a4] = quad.sides().clone();
            let p13 = &a1 * &a3 + &a2 * &a4;
            prop_assert_eq!(m.d1_sq * m.d2_sq, &p13 * &p13);
        }

        #[test]
        fn scaling_laws(quad in arb_quad(), n in 1i64..40, d in 1i64..40) {
            prop_assume!(constructible(&quad));
            let lam = rat(n, d);
            let scaled = QuadSides::new(quad.sides().clone().map(|s| &s * &lam)).unwrap();
            let m0 = metrics(&quad).unwrap();
            let m1 = metrics(&scaled).unwrap();
            let lam2 = &lam * &lam;
            prop_assert_eq!(m1.perimeter, &m0.perimeter * &lam);
            prop_assert_eq!(m1.area_sq, &m0.area_sq * &lam2 * &lam2);
            prop_assert_eq!(m1.d1_sq, &m0.d1_sq * &lam2);
            prop_assert_eq!(m1.d2_sq, &m0.d2_sq * &lam2);
            prop_assert_eq!(m1.circumradius_sq, &m0.circumradius_sq * &lam2);
        }

        #[test]
        fn siblings_preserve_perimeter_and_area(quad in arb_quad()) {
            prop_assume!(constructible(&quad));
            let m0 = metrics(&quad).unwrap();
            for s in sibling_orders(&quad) {
                let m = metrics(&s).unwrap();
                prop_assert_eq!(&m.perimeter, &m0.perimeter);
                prop_assert_eq!(&m.area_sq, &m0.area_sq);
            }
        }
    }
}
