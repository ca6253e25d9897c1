//! Brute-force enumeration of integer-sided cyclic quadrilaterals grouped by
//! (perimeter, squared area), the independent ground truth for the parametric
//! families at desk scale.
//!
//! The inner loops run on machine integers for speed (exactness is
//! preserved; products stay far below the 128-bit limit at desk scale);
//! emitted rows convert to exact rationals on demand.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer as _;
use num_traits::One;

use crate::arith::{format_rational, perfect_square_root, Integer, Rational};
use crate::quad::{self, QuadSides};
use crate::record::{PairRecord, Provenance};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Upper bound on the side sum; at least 4.
    pub max_perimeter: u64,
    /// Keep only quadruples whose area is a positive integer.
    pub require_integer_area: bool,
    /// Keep only quadruples whose diagonal triple product is a perfect
    /// square (equivalently, rational diagonals).
    pub require_square_diagonals: bool,
    /// Number of parallel enumeration shards (1 = in-order single thread).
    pub worker_shards: usize,
}

impl SearchConfig {
    pub fn new(max_perimeter: u64) -> Self {
        SearchConfig {
            max_perimeter,
            require_integer_area: true,
            require_square_diagonals: false,
            worker_shards: 1,
        }
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.max_perimeter < 4 {
            return Err(SearchError::PerimeterTooSmall(self.max_perimeter));
        }
        if self.worker_shards == 0 {
            return Err(SearchError::ZeroShards);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchError {
    PerimeterTooSmall(u64),
    ZeroShards,
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::PerimeterTooSmall(p) => {
                write!(f, "max perimeter {p} is below the smallest quadrilateral")
            }
            SearchError::ZeroShards => write!(f, "worker shard count must be positive"),
        }
    }
}

impl std::error::Error for SearchError {}

/// Grouping key: perimeter and sixteen times the squared area, both integers
/// for integer sides, so grouping needs no square roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupKey {
    pub perimeter: u64,
    pub sixteen_k_sq: u128,
}

/// One enumerated quadruple with its native-integer invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub sides: [u64; 4],
    pub perimeter: u64,
    pub sixteen_k_sq: u128,
    /// The integer area, when it is one.
    pub area: Option<u64>,
}

impl Row {
    pub fn key(&self) -> GroupKey {
        GroupKey {
            perimeter: self.perimeter,
            sixteen_k_sq: self.sixteen_k_sq,
        }
    }

    pub fn quad(&self) -> QuadSides {
        QuadSides::new(
            self.sides
                .map(|s| Rational::from_integer(Integer::from(s))),
        )
        .expect("enumerated sides are positive")
    }

    pub fn metrics(&self) -> quad::QuadMetrics {
        quad::metrics(&self.quad()).expect("enumerated quadruples are constructible")
    }

    /// One CSV line in the documented column order.
    pub fn csv_line(&self) -> String {
        let m = self.metrics();
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.sides[0],
            self.sides[1],
            self.sides[2],
            self.sides[3],
            self.perimeter,
            self.sixteen_k_sq,
            self.area.map(|k| k.to_string()).unwrap_or_default(),
            format_rational(&m.d1_sq),
            format_rational(&m.d2_sq),
        )
    }
}

pub const CSV_HEADER: &str = "a1,a2,a3,a4,perimeter,sixteen_K_sq,K,d1_sq,d2_sq";

fn sixteen_k_sq(a: u64, b: u64, c: u64, d: u64) -> u128 {
    let t1 = (b + c + d) as i128 - a as i128;
    let t2 = (a + c + d) as i128 - b as i128;
    let t3 = (a + b + d) as i128 - c as i128;
    let t4 = (a + b + c) as i128 - d as i128;
    (t1 * t2 * t3 * t4) as u128
}

fn isqrt_u128(n: u128) -> u128 {
    if n == 0 {
        return 0;
    }
    let mut r = 1u128 << (n.ilog2() / 2 + 1);
    loop {
        let next = (r + n / r) / 2;
        if next >= r {
            break;
        }
        r = next;
    }
    while r * r > n {
        r -= 1;
    }
    r
}

// squares are 0, 1, 4 or 9 mod 16; cheap rejection before the full root
fn square_candidate(n: u128) -> bool {
    matches!(n % 16, 0 | 1 | 4 | 9)
}

fn integer_area(sixteen: u128) -> Option<u64> {
    // an integer area K means sixteen = (4K)^2, divisible by 16
    if !sixteen.is_multiple_of(16) {
        return None;
    }
    let k_sq = sixteen / 16;
    if !square_candidate(k_sq) {
        return None;
    }
    let r = isqrt_u128(k_sq);
    (r * r == k_sq).then_some(r as u64)
}

fn triple_product_is_square(a: u64, b: u64, c: u64, d: u64) -> bool {
    let (a, b, c, d) = (a as u128, b as u128, c as u128, d as u128);
    let p = (a * b + c * d) * (a * c + b * d) * (a * d + b * c);
    if !square_candidate(p) {
        return false;
    }
    let r = isqrt_u128(p);
    r * r == p
}

fn accept(cfg: &SearchConfig, a: u64, b: u64, c: u64, d: u64) -> Option<Row> {
    let sixteen = sixteen_k_sq(a, b, c, d);
    let area = integer_area(sixteen);
    if cfg.require_integer_area && area.is_none() {
        return None;
    }
    if cfg.require_square_diagonals && !triple_product_is_square(a, b, c, d) {
        return None;
    }
    Some(Row {
        sides: [a, b, c, d],
        perimeter: a + b + c + d,
        sixteen_k_sq: sixteen,
        area,
    })
}

/// Visit, in lexicographic order, every sorted quadruple `a <= b <= c <= d`
/// of positive integers with perimeter at most the bound that passes the
/// constructibility condition (enforced structurally by the `d` loop bound)
/// and the configured filters.
pub fn for_each_row(cfg: &SearchConfig, mut f: impl FnMut(Row)) -> Result<(), SearchError> {
    cfg.validate()?;
    for_each_row_in_shard(cfg, 1, 0, &mut f);
    Ok(())
}

fn for_each_row_in_shard(cfg: &SearchConfig, shards: u64, shard: u64, f: &mut impl FnMut(Row)) {
    let max_p = cfg.max_perimeter;
    let mut a = 1;
    while 4 * a <= max_p {
        if a % shards == shard {
            let mut b = a;
            while a + 3 * b <= max_p {
                let mut c = b;
                while a + b + 2 * c <= max_p {
                    // structural constructibility: d < a + b + c
                    let d_hi = (max_p - a - b - c).min(a + b + c - 1);
                    for d in c..=d_hi {
                        if let Some(row) = accept(cfg, a, b, c, d) {
                            f(row);
                        }
                    }
                    c += 1;
                }
                b += 1;
            }
        }
        a += 1;
    }
}

/// Collected enumeration; uses the configured shard count and returns the
/// rows in lexicographic order regardless of sharding.
pub fn enumerate(cfg: &SearchConfig) -> Result<Vec<Row>, SearchError> {
    cfg.validate()?;
    if cfg.worker_shards == 1 {
        let mut rows = Vec::new();
        for_each_row_in_shard(cfg, 1, 0, &mut |row| rows.push(row));
        return Ok(rows);
    }
    let shards = cfg.worker_shards as u64;
    let mut rows = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..shards)
            .map(|shard| {
                scope.spawn(move || {
                    let mut part = Vec::new();
                    for_each_row_in_shard(cfg, shards, shard, &mut |row| part.push(row));
                    part
                })
            })
            .collect();
        let mut all = Vec::new();
        for h in handles {
            all.extend(h.join().expect("enumeration shard panicked"));
        }
        all
    });
    rows.sort_by_key(|r| r.sides);
    Ok(rows)
}

/// Group the enumeration by (perimeter, squared area) and emit every pair of
/// distinct quadruples within a group, in deterministic order.
pub fn find_equal_pairs(cfg: &SearchConfig) -> Result<Vec<PairRecord>, SearchError> {
    let rows = enumerate(cfg)?;
    let mut groups: BTreeMap<GroupKey, Vec<[u64; 4]>> = BTreeMap::new();
    for row in rows {
        groups.entry(row.key()).or_default().push(row.sides);
    }
    let mut pairs = Vec::new();
    for quads in groups.values() {
        for i in 0..quads.len() {
            for j in (i + 1)..quads.len() {
                let to_sides =
                    |q: &[u64; 4]| q.map(|s| Rational::from_integer(Integer::from(s)));
                let record = PairRecord::new(
                    Provenance::Search,
                    to_sides(&quads[i]),
                    to_sides(&quads[j]),
                )
                .expect("grouped quadruples share perimeter and squared area");
                pairs.push(record);
            }
        }
    }
    Ok(pairs)
}

/// Fresh-arithmetic replay of the pair conditions on integer-scaled sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub perimeter: Integer,
    pub sixteen_area_sq: Integer,
    pub first_triple_root: Integer,
    pub second_triple_root: Integer,
    pub multisets_distinct: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckFailure {
    pub violated: Vec<String>,
}

impl fmt::Display for CrossCheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cross-check failed: {}", self.violated.join("; "))
    }
}

impl std::error::Error for CrossCheckFailure {}

fn scaled_integers(sides: &[Rational; 4], scale: &Integer) -> [Integer; 4] {
    sides.clone().map(|s| {
        let v = s * Rational::from_integer(scale.clone());
        debug_assert!(v.denom().is_one());
        v.numer().clone()
    })
}

fn sixteen_area_sq_int(s: &[Integer; 4]) -> Integer {
    let total: Integer = s.iter().sum();
    let term = |i: usize| &total - &s[i] - &s[i];
    term(0) * term(1) * term(2) * term(3)
}

fn triple_product_int(s: &[Integer; 4]) -> Integer {
    (&s[0] * &s[1] + &s[2] * &s[3])
        * (&s[0] * &s[2] + &s[1] * &s[3])
        * (&s[0] * &s[3] + &s[1] * &s[2])
}

/// Replay the equal-perimeter, equal-area and square-diagonal conditions on a
/// pair with arithmetic independent of the metrics path. Any mismatch names
/// the violated condition.
pub fn cross_check_family(pair: &PairRecord) -> Result<CrossCheckReport, CrossCheckFailure> {
    let mut scale = Integer::one();
    for s in pair.sides_a().iter().chain(pair.sides_b()) {
        scale = scale.lcm(s.denom());
    }
    let a = scaled_integers(pair.sides_a(), &scale);
    let b = scaled_integers(pair.sides_b(), &scale);
    let mut violated = Vec::new();

    let pa: Integer = a.iter().sum();
    let pb: Integer = b.iter().sum();
    if pa != pb {
        violated.push(format!("perimeters differ: {pa} vs {pb}"));
    }
    let ka = sixteen_area_sq_int(&a);
    let kb = sixteen_area_sq_int(&b);
    if ka != kb {
        violated.push(format!("sixteen-area-squares differ: {ka} vs {kb}"));
    }
    let ta = triple_product_int(&a);
    let tb = triple_product_int(&b);
    let ra = perfect_square_root(&ta);
    let rb = perfect_square_root(&tb);
    if ra.is_none() {
        violated.push(format!("first triple product is not a square: {ta}"));
    }
    if rb.is_none() {
        violated.push(format!("second triple product is not a square: {tb}"));
    }
    let mut sa = a.clone();
    let mut sb = b.clone();
    sa.sort();
    sb.sort();
    let multisets_distinct = sa != sb;
    if !multisets_distinct {
        violated.push("side multisets are identical".into());
    }
    if !violated.is_empty() {
        return Err(CrossCheckFailure { violated });
    }
    Ok(CrossCheckReport {
        perimeter: pa,
        sixteen_area_sq: ka,
        first_triple_root: ra.expect("checked"),
        second_triple_root: rb.expect("checked"),
        multisets_distinct,
    })
}
