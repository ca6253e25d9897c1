//! Certified pairs of quadruples sharing perimeter and squared area, with
//! provenance, plus their JSON form.

use std::fmt;

use num_traits::Signed;
use serde_json::{json, Value};

use crate::arith::{format_rational, Integer, Rational};
use crate::quad::{self, QuadSides};

/// Where a pair came from: one of the two parametric families, or search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Isosceles { r1: Integer, r2: Integer },
    Scalene { t: Rational },
    Search,
}

impl Provenance {
    pub fn family_name(&self) -> &'static str {
        match self {
            Provenance::Isosceles { .. } => "isosceles",
            Provenance::Scalene { .. } => "scalene",
            Provenance::Search => "search",
        }
    }

    fn params_json(&self) -> Value {
        match self {
            Provenance::Isosceles { r1, r2 } => {
                json!({ "r1": r1.to_string(), "r2": r2.to_string() })
            }
            Provenance::Scalene { t } => json!({ "t": format_rational(t) }),
            Provenance::Search => json!({}),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecordError {
    PerimetersDiffer { first: Rational, second: Rational },
    AreasDiffer,
}

impl fmt::Display for RecordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecordError::PerimetersDiffer { first, second } => {
                write!(f, "perimeters differ: {first} vs {second}")
            }
            RecordError::AreasDiffer => write!(f, "squared areas differ"),
        }
    }
}

impl std::error::Error for RecordError {}

/// Two side quadruples certified to share perimeter and squared area.
///
/// Sides are stored raw so out-of-window parameter choices (where some closed
/// form goes nonpositive) can still be reported; `constructible` records
/// whether both quadruples are positive and satisfy the polygon inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRecord {
    pub provenance: Provenance,
    sides_a: [Rational; 4],
    sides_b: [Rational; 4],
    constructible: bool,
    trapezium: bool,
}

fn complements_product(sides: &[Rational; 4]) -> Rational {
    let two = Rational::from_integer(Integer::from(2));
    let s = sides.iter().sum::<Rational>() / two;
    sides.iter().map(|a| &s - a).product()
}

fn positive_and_constructible(sides: &[Rational; 4]) -> bool {
    sides.iter().all(Signed::is_positive)
        && QuadSides::new(sides.clone())
            .map(|q| quad::constructible(&q))
            .unwrap_or(false)
}

impl PairRecord {
    /// Certify and wrap a pair. The two quadruples must have equal side sums
    /// and equal products of semiperimeter complements (the squared-area
    /// quantity); these hold identically for both families and by grouping
    /// for search output.
    pub fn new(
        provenance: Provenance,
        sides_a: [Rational; 4],
        sides_b: [Rational; 4],
    ) -> Result<Self, RecordError> {
        let (pa, pb) = (
            sides_a.iter().sum::<Rational>(),
            sides_b.iter().sum::<Rational>(),
        );
        if pa != pb {
            return Err(RecordError::PerimetersDiffer {
                first: pa,
                second: pb,
            });
        }
        if complements_product(&sides_a) != complements_product(&sides_b) {
            return Err(RecordError::AreasDiffer);
        }
        let constructible =
            positive_and_constructible(&sides_a) && positive_and_constructible(&sides_b);
        Ok(PairRecord {
            provenance,
            sides_a,
            sides_b,
            constructible,
            trapezium: false,
        })
    }

    /// Bypass certification; only for deliberately corrupted test inputs.
    #[doc(hidden)]
    pub fn unchecked(
        provenance: Provenance,
        sides_a: [Rational; 4],
        sides_b: [Rational; 4],
    ) -> Self {
        let constructible =
            positive_and_constructible(&sides_a) && positive_and_constructible(&sides_b);
        PairRecord {
            provenance,
            sides_a,
            sides_b,
            constructible,
            trapezium: false,
        }
    }

    pub(crate) fn mark_trapezium(mut self) -> Self {
        self.trapezium = true;
        self
    }

    pub fn sides_a(&self) -> &[Rational; 4] {
        &self.sides_a
    }

    pub fn sides_b(&self) -> &[Rational; 4] {
        &self.sides_b
    }

    pub fn constructible(&self) -> bool {
        self.constructible
    }

    pub fn perimeter(&self) -> Rational {
        self.sides_a.iter().sum()
    }

    pub fn quads(&self) -> Option<(QuadSides, QuadSides)> {
        if !self.constructible {
            return None;
        }
        Some((
            QuadSides::new(self.sides_a.clone()).expect("constructible implies positive"),
            QuadSides::new(self.sides_b.clone()).expect("constructible implies positive"),
        ))
    }

    /// Whether the four sides are pairwise distinct, per quadruple.
    pub fn sides_pairwise_distinct(&self) -> (bool, bool) {
        let distinct = |s: &[Rational; 4]| {
            for i in 0..4 {
                for j in (i + 1)..4 {
                    if s[i] == s[j] {
                        return false;
                    }
                }
            }
            true
        };
        (distinct(&self.sides_a), distinct(&self.sides_b))
    }

    /// The documented pair schema: family, params, both quadruples with their
    /// metrics (and scaling certificates when they exist), the shared values,
    /// and the constructibility flag.
    pub fn to_json(&self) -> Value {
        let quad_a = quad_json(&self.sides_a);
        let quad_b = quad_json(&self.sides_b);
        let (area, area_sq) = if self.constructible {
            let q = QuadSides::new(self.sides_a.clone()).expect("positive");
            let m = quad::metrics(&q).expect("constructible");
            (
                m.area.as_ref().map(|a| Value::String(format_rational(a))),
                Some(format_rational(&m.area_sq)),
            )
        } else {
            (None, None)
        };
        let mut record = json!({
            "family": self.provenance.family_name(),
            "params": self.provenance.params_json(),
            "quad_a": quad_a,
            "quad_b": quad_b,
            "common": {
                "perimeter": format_rational(&self.perimeter()),
                "area": area.unwrap_or(Value::Null),
                "area_sq": area_sq.map(Value::String).unwrap_or(Value::Null),
            },
            "constructible": self.constructible,
        });
        if self.trapezium {
            record["variant"] = Value::String("trapezium".into());
        }
        record
    }
}

fn opt_rat(v: &Option<Rational>) -> Value {
    match v {
        Some(q) => Value::String(format_rational(q)),
        None => Value::Null,
    }
}

/// The documented per-quadrilateral JSON record; metric fields are null when
/// the sides do not form a cyclic quadrilateral.
pub fn quad_json(sides: &[Rational; 4]) -> Value {
    let side_strings: Vec<String> = sides.iter().map(format_rational).collect();
    let perimeter = sides.iter().sum::<Rational>();
    let base = |metrics: Option<&quad::QuadMetrics>, cert: Option<&quad::BrahmaguptaCertificate>| {
        json!({
            "sides": side_strings,
            "perimeter": format_rational(&perimeter),
            "area": metrics.map(|m| opt_rat(&m.area)).unwrap_or(Value::Null),
            "area_sq": metrics.map(|m| Value::String(format_rational(&m.area_sq))).unwrap_or(Value::Null),
            "d1": metrics.map(|m| opt_rat(&m.d1)).unwrap_or(Value::Null),
            "d1_sq": metrics.map(|m| Value::String(format_rational(&m.d1_sq))).unwrap_or(Value::Null),
            "d2": metrics.map(|m| opt_rat(&m.d2)).unwrap_or(Value::Null),
            "d2_sq": metrics.map(|m| Value::String(format_rational(&m.d2_sq))).unwrap_or(Value::Null),
            "circumradius": metrics.map(|m| opt_rat(&m.circumradius)).unwrap_or(Value::Null),
            "circumradius_sq": metrics.map(|m| Value::String(format_rational(&m.circumradius_sq))).unwrap_or(Value::Null),
            "certificate": cert.map(certificate_json).unwrap_or(Value::Null),
        })
    };
    match QuadSides::new(sides.clone()) {
        Ok(q) if quad::constructible(&q) => {
            let m = quad::metrics(&q).expect("constructible");
            let cert = quad::scale_to_brahmagupta(&q).expect("constructible");
            base(Some(&m), cert.as_ref())
        }
        _ => base(None, None),
    }
}

fn certificate_json(c: &quad::BrahmaguptaCertificate) -> Value {
    json!({
        "scale": format_rational(&c.scale),
        "sides": c.sides.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "diagonals": c.diagonals.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "area": c.area.to_string(),
        "circumradius": opt_rat(&c.circumradius),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn sides(v: [i64; 4]) -> [Rational; 4] {
        v.map(|s| rat(s, 1))
    }

    #[test]
    fn certifies_shared_values() {
        let rec = PairRecord::new(
            Provenance::Search,
            sides([2, 2, 9, 9]),
            sides([2, 5, 5, 10]),
        )
        .unwrap();
        assert!(rec.constructible());
        assert_eq!(rec.perimeter(), rat(22, 1));
        assert_eq!(rec.sides_pairwise_distinct(), (false, false));

        assert!(matches!(
            PairRecord::new(Provenance::Search, sides([1, 1, 1, 1]), sides([1, 2, 3, 4])),
            Err(RecordError::PerimetersDiffer { .. })
        ));
        assert!(matches!(
            PairRecord::new(Provenance::Search, sides([1, 2, 3, 4]), sides([1, 1, 4, 4])),
            Err(RecordError::AreasDiffer)
        ));
    }

    #[test]
    fn json_schema_shape() {
        let rec = PairRecord::new(
            Provenance::Isosceles {
                r1: int(2),
                r2: int(1),
            },
            sides([165, 1635, 1313, 1313]),
            sides([413, 1763, 1125, 1125]),
        )
        .unwrap();
        let v = rec.to_json();
        assert_eq!(v["family"], "isosceles");
        assert_eq!(v["params"]["r1"], "2");
        assert_eq!(v["common"]["perimeter"], "4426");
        assert_eq!(v["common"]["area"], "979200");
        assert_eq!(v["quad_a"]["sides"][0], "165");
        assert_eq!(v["quad_a"]["d2"], "590850/353");
        assert_eq!(v["quad_b"]["circumradius"], "1765/2");
        assert_eq!(v["quad_a"]["certificate"]["scale"], "353");
        assert_eq!(v["constructible"], true);
        // parse-then-serialize identity
        let text = serde_json::to_string(&v).unwrap();
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back, v);
    }
}
