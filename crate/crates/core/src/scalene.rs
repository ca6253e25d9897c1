//! The second parametric family: pairs of Brahmagupta quadrilaterals with
//! equal perimeters, equal areas, and all sides unequal, driven by one
//! rational parameter.
//!
//! The derivation runs through quadruples with equal sums and equal products,
//! a quartic model of an elliptic curve supplying the compatibility solution,
//! and a final quartic form made square by Fermat's method. Every step is
//! verified exactly at runtime; the closed-form sides are cross-checked
//! against the pipeline.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::arith::{rational_square_root, Integer, Rational};
use crate::fermat::{self, FermatError, Quartic};
use crate::poly::UniPoly;
use crate::quad;
use crate::record::{PairRecord, Provenance};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScaleneError {
    Degenerate(String),
    /// An internal cross-check failed; signals an implementation bug.
    Internal(String),
    Fermat(FermatError),
}

impl fmt::Display for ScaleneError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScaleneError::Degenerate(msg) => write!(f, "degenerate parameter: {msg}"),
            ScaleneError::Internal(msg) => write!(f, "internal consistency error: {msg}"),
            ScaleneError::Fermat(e) => write!(f, "quartic-square step failed: {e}"),
        }
    }
}

impl std::error::Error for ScaleneError {}

impl From<FermatError> for ScaleneError {
    fn from(e: FermatError) -> Self {
        ScaleneError::Fermat(e)
    }
}

/// The rational parameter; 0 and +-1 collapse the construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaleneParams {
    t: Rational,
}

impl ScaleneParams {
    pub fn new(t: Rational) -> Result<Self, ScaleneError> {
        if t.is_zero() {
            return Err(ScaleneError::Degenerate("parameter is zero".into()));
        }
        let one = Rational::one();
        if t == one || t == -&one {
            return Err(ScaleneError::Degenerate(
                "parameter +-1 makes the curve coefficients equal".into(),
            ));
        }
        Ok(ScaleneParams { t })
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }
}

fn up(s: &str) -> UniPoly {
    UniPoly::parse(s).expect("static polynomial text")
}

pub(crate) struct ParamPolys {
    pub g: UniPoly,
    pub h: UniPoly,
    pub m: UniPoly,
    pub n: UniPoly,
    pub u: UniPoly,
    pub v: UniPoly,
}

/// The reference compatibility solution, as polynomials in the parameter.
pub(crate) fn param_polys() -> ParamPolys {
    ParamPolys {
        g: &up("t^2 + 2*t - 1") * &up("t^2 - 2*t - 1"),
        h: up("-4*t^3 - 4*t"),
        m: up("t^5 - 3*t^4 + 6*t^3 + 6*t^2 - 3*t + 1"),
        n: up("t^5 + 6*t^3 - 3*t"),
        u: up("t^5 - 2*t^3 + 5*t"),
        v: up("5*t^4 - 2*t^2 + 1"),
    }
}

/// Numerators and denominators of the curve point coordinates.
pub(crate) fn point_polys() -> (UniPoly, UniPoly, UniPoly, UniPoly) {
    let x_num = up("3*t^4 - 6*t^2 - 1");
    let x_den = up("t^5 + 6*t^3 - 3*t");
    let y_num = &(&(&up("4*t^2 - 4") * &up("t^2 + 1").pow(2))
        * &(&up("t^2 + 2*t - 1") * &up("t^2 - 2*t - 1")))
        * &up("t^8 + 20*t^6 - 26*t^4 + 20*t^2 + 1");
    let y_den = &up("t") * &up("t^4 + 6*t^2 - 3").pow(2);
    (x_num, x_den, y_num, y_den)
}

/// The reference quartic-square solution for the final ratio, as polynomials.
pub(crate) fn ratio_polys() -> (UniPoly, UniPoly) {
    let r1 = &(&up("32*t^2") * &(&quartic_minus() * &quartic_plus())) * &up("t^2 + 1").pow(2);
    let r2 = &up("t^8 + 4*t^7 + 4*t^6 - 20*t^5 + 70*t^4 - 20*t^3 + 4*t^2 + 4*t + 1")
        * &up("t^8 - 4*t^7 + 4*t^6 + 20*t^5 + 70*t^4 + 20*t^3 + 4*t^2 - 4*t + 1");
    (r1, r2)
}

fn quartic_minus() -> UniPoly {
    up("t^4 - 4*t^3 + 10*t^2 - 4*t + 1")
}

fn quartic_plus() -> UniPoly {
    up("t^4 + 4*t^3 + 10*t^2 + 4*t + 1")
}

/// Coefficients of the final quartic form, ascending in the first ratio
/// component (the `k`-th entry multiplies `r1^k r2^(4-k)`).
pub(crate) fn square_form_coeff_polys() -> [UniPoly; 5] {
    let a = quartic_minus();
    let b = quartic_plus();
    let p = up("t^2 + 2*t - 1");
    let m = up("t^2 - 2*t - 1");
    let t2p1 = up("t^2 + 1");
    let ab = &a * &b;
    let a2b2 = &ab * &ab;
    let c4 = &a2b2 * &(&p.pow(4) * &m.pow(4));
    let c3 = &(&(&up("-64*t^2") * &t2p1.pow(2)) * &(&p.pow(4) * &m.pow(4))) * &ab;
    let c2 = &(&(&up("32*t^2") * &t2p1.pow(2)) * &(&p.pow(2) * &m.pow(2))) * &a2b2;
    let c1 = &(&(&up("-1024*t^4") * &t2p1.pow(4)) * &(&p.pow(2) * &m.pow(2))) * &ab;
    let c0 = &(&up("256*t^4") * &t2p1.pow(4)) * &a2b2;
    [c0, c1, c2, c3, c4]
}

/// The square prefactor in the final square condition.
pub(crate) fn square_prefactor_poly() -> UniPoly {
    // r1 r2 (r1 - r2) t (3t^4 - 6t^2 - 1)(t^4 + 6t^2 - 3)
    //   * { r1 (t^2+2t-1)^2 (t^2-2t-1)^2 - 16 r2 t^2 (t^2+1)^2 }
    let (r1, r2) = ratio_polys();
    let head = &(&(&r1 * &r2) * &(&r1 - &r2))
        * &(&(&up("t") * &up("3*t^4 - 6*t^2 - 1")) * &up("t^4 + 6*t^2 - 3"));
    let brace = &(&r1 * &(&up("t^2 + 2*t - 1").pow(2) * &up("t^2 - 2*t - 1").pow(2)))
        - &(&(&r2 * &up("16*t^2")) * &up("t^2 + 1").pow(2));
    &head * &brace
}

/// The final quartic form with the reference ratio substituted, univariate in
/// the parameter.
pub(crate) fn square_form_substituted() -> UniPoly {
    let (r1, r2) = ratio_polys();
    let coeffs = square_form_coeff_polys();
    let mut acc = UniPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        acc = &acc + &(&(c * &r1.pow(k as u32)) * &r2.pow(4 - k as u32));
    }
    acc
}

/// Transformed quadruples from the compatibility parameters. Generic so the
/// same formulas serve exact values and polynomials.
fn solved_values<T>(g: &T, h: &T, m: &T, n: &T, r1: &T, r2: &T) -> ([T; 4], [T; 4])
where
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>
        + std::ops::Sub<&'a T, Output = T>
        + std::ops::Neg<Output = T>,
{
    let g2 = g * g;
    let h2 = h * h;
    let g2r1 = &g2 * r1;
    let h2r2 = &h2 * r2;
    let lever = &g2r1 - &h2r2;
    let dr = r1 - r2;
    let mn = m - n;
    let x = [
        &(&g2r1 * n) * &dr,
        -&(&(&h2r2 * &dr) * &mn),
        &(r2 * n) * &lever,
        -&(&(r1 * &lever) * &mn),
    ];
    let y = [
        -&(&(&g2r1 * &dr) * &mn),
        &(&h2r2 * n) * &dr,
        &(r1 * n) * &lever,
        -&(&(r2 * &lever) * &mn),
    ];
    (x, y)
}

/// The transformed quadruples with every reference form substituted, as
/// polynomials in the parameter.
pub(crate) fn seed_value_polys() -> ([UniPoly; 4], [UniPoly; 4]) {
    let pp = param_polys();
    let (r1, r2) = ratio_polys();
    solved_values(&pp.g, &pp.h, &pp.m, &pp.n, &r1, &r2)
}

/// A rational point on the quartic curve model, satisfying
/// `y^2 = (x u - v)(x u + v)(x v - u)(x v + u)` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticQuarticPoint {
    pub u: Rational,
    pub v: Rational,
    pub x: Rational,
    pub y: Rational,
}

impl EllipticQuarticPoint {
    pub fn new(u: Rational, v: Rational, x: Rational, y: Rational) -> Result<Self, ScaleneError> {
        let xu = &x * &u;
        let xv = &x * &v;
        let rhs = (&xu - &v) * (&xu + &v) * (&xv - &u) * (&xv + &u);
        if &y * &y != rhs {
            return Err(ScaleneError::Internal(
                "point does not satisfy the curve equation".into(),
            ));
        }
        Ok(EllipticQuarticPoint { u, v, x, y })
    }
}

/// The curve coefficients attached to the parameter.
pub fn curve_coefficients(params: &ScaleneParams) -> (Rational, Rational) {
    let pp = param_polys();
    (pp.u.eval(params.t()), pp.v.eval(params.t()))
}

/// The reference rational point on the curve; its defining equation is
/// re-verified exactly on construction.
pub fn curve_point(params: &ScaleneParams) -> Result<EllipticQuarticPoint, ScaleneError> {
    let (x_num, x_den, y_num, y_den) = point_polys();
    let t = params.t();
    let xd = x_den.eval(t);
    if xd.is_zero() {
        return Err(ScaleneError::Degenerate(
            "curve point denominator vanishes".into(),
        ));
    }
    let x = x_num.eval(t) / &xd;
    let y = y_num.eval(t) / y_den.eval(t);
    let (u, v) = curve_coefficients(params);
    EllipticQuarticPoint::new(u, v, x, y)
}

/// Residual of the compatibility condition linking the two square conditions;
/// zero for consistent parameter sets.
pub fn compat_residual(
    g: &Rational,
    h: &Rational,
    m: &Rational,
    n: &Rational,
    u: &Rational,
    v: &Rational,
) -> Rational {
    let mu = m * u;
    let nu = n * u;
    let nv = n * v;
    let mv = m * v;
    (&mu - &nu - &nv) * (&mu - &nu + &nv) * (g * g) - (&mv + &nu - &nv) * (&mv - &nu - &nv) * (h * h)
}

/// A fully solved instance: compatibility parameters, the final ratio, and
/// the two transformed quadruples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaleneSeed {
    pub g: Rational,
    pub h: Rational,
    pub m: Rational,
    pub n: Rational,
    pub w: Rational,
    pub r1: Rational,
    pub r2: Rational,
    pub x: [Rational; 4],
    pub y: [Rational; 4],
}

impl ScaleneSeed {
    /// Invert the linear transformation to sides.
    pub fn sides(&self) -> ([Rational; 4], [Rational; 4]) {
        let two = Rational::from_integer(Integer::from(2));
        let half_sum = self.x.iter().sum::<Rational>() / &two;
        (
            [
                &half_sum - &self.x[0],
                &half_sum - &self.x[1],
                &half_sum - &self.x[2],
                &half_sum - &self.x[3],
            ],
            [
                &half_sum - &self.y[0],
                &half_sum - &self.y[1],
                &half_sum - &self.y[2],
                &half_sum - &self.y[3],
            ],
        )
    }
}

fn triple_product(v: &[Rational; 4]) -> Rational {
    (&v[0] * &v[1] + &v[2] * &v[3])
        * (&v[0] * &v[2] + &v[1] * &v[3])
        * (&v[0] * &v[3] + &v[1] * &v[2])
}

/// Solve the whole chain at the given parameter and verify every invariant:
/// equal sums, equal square products, both triple products perfect squares,
/// and the exact factorization of the first triple product through the final
/// quartic form.
pub fn seed(params: &ScaleneParams) -> Result<ScaleneSeed, ScaleneError> {
    let t = params.t();
    let pp = param_polys();
    let (r1p, r2p) = ratio_polys();
    let (g, h, m, n) = (pp.g.eval(t), pp.h.eval(t), pp.m.eval(t), pp.n.eval(t));
    let (r1, r2) = (r1p.eval(t), r2p.eval(t));
    let (x, y) = solved_values(&g, &h, &m, &n, &r1, &r2);
    let seed = ScaleneSeed {
        g,
        h,
        m,
        n,
        w: Rational::one(),
        r1,
        r2,
        x,
        y,
    };
    verify_seed(&seed, t)?;
    Ok(seed)
}

fn verify_seed(seed: &ScaleneSeed, t: &Rational) -> Result<(), ScaleneError> {
    let fail = |msg: String| Err(ScaleneError::Internal(msg));
    let sum_x: Rational = seed.x.iter().sum();
    let sum_y: Rational = seed.y.iter().sum();
    if sum_x != sum_y {
        return fail("transformed sums differ".into());
    }
    let prod_x: Rational = seed.x.iter().product();
    let prod_y: Rational = seed.y.iter().product();
    if prod_x != prod_y {
        return fail("transformed products differ".into());
    }
    if rational_square_root(&prod_x).is_none() {
        return fail("transformed product is not a perfect square".into());
    }
    let triple_x = triple_product(&seed.x);
    let triple_y = triple_product(&seed.y);
    if rational_square_root(&triple_x).is_none() || rational_square_root(&triple_y).is_none() {
        return fail("a triple product is not a perfect square".into());
    }
    // first triple product factors exactly through the square condition
    let coeffs = square_form_coeff_polys();
    let mut form = Rational::zero();
    for (k, c) in coeffs.iter().enumerate() {
        let mut term = c.eval(t);
        for _ in 0..k {
            term *= &seed.r1;
        }
        for _ in 0..(4 - k) {
            term *= &seed.r2;
        }
        form += term;
    }
    if rational_square_root(&form).is_none() {
        return fail("final quartic form is not a perfect square".into());
    }
    let prefactor = square_prefactor_poly().eval(t);
    let u = param_polys().u.eval(t);
    let expect = &(&u * &u) * &(&prefactor * &prefactor) * &form;
    if triple_x != expect {
        return fail(format!(
            "triple product does not factor through the square condition at t = {t}"
        ));
    }
    Ok(())
}

/// Closed-form side polynomials of the two quadruples.
pub(crate) fn side_polys() -> ([UniPoly; 4], [UniPoly; 4]) {
    let a1 = &(&quartic_plus()
        * &up("t^16 - 24*t^14 + 48*t^13 - 100*t^12 - 672*t^11 - 1128*t^10 + 2960*t^9 \
               - 3002*t^8 - 4032*t^7 + 1240*t^6 + 592*t^5 - 868*t^4 + 96*t^3 + 40*t^2 - 16*t + 1"))
        * &up("3*t^17 - 15*t^16 + 8*t^15 + 136*t^14 - 140*t^13 - 276*t^12 + 2488*t^11 \
               - 2792*t^10 + 1170*t^9 - 42*t^8 + 2488*t^7 - 1800*t^6 - 140*t^5 - 52*t^4 \
               + 8*t^3 - 24*t^2 + 3*t + 1");
    let a2 = &(&(-&quartic_minus())
        * &up("t^17 + t^16 - 72*t^15 - 264*t^14 - 580*t^13 - 964*t^12 - 2680*t^11 \
               - 2232*t^10 - 250*t^9 + 1542*t^8 - 2680*t^7 - 952*t^6 - 580*t^5 + 60*t^4 \
               - 72*t^3 - 8*t^2 + t + 1"))
        * &up("t^16 - 8*t^14 + 60*t^12 - 768*t^11 - 1720*t^10 + 1542*t^8 + 2560*t^7 \
               + 328*t^6 + 2048*t^5 + 1084*t^4 + 256*t^3 - 8*t^2 + 1");
    let a3 = &(&(-&quartic_minus())
        * &up("t^16 - 24*t^14 - 48*t^13 - 100*t^12 + 672*t^11 - 1128*t^10 - 2960*t^9 \
               - 3002*t^8 + 4032*t^7 + 1240*t^6 - 592*t^5 - 868*t^4 - 96*t^3 + 40*t^2 + 16*t + 1"))
        * &up("3*t^17 + 15*t^16 + 8*t^15 - 136*t^14 - 140*t^13 + 276*t^12 + 2488*t^11 \
               + 2792*t^10 + 1170*t^9 + 42*t^8 + 2488*t^7 + 1800*t^6 - 140*t^5 + 52*t^4 \
               + 8*t^3 + 24*t^2 + 3*t - 1");
    let a4 = &(&(-&quartic_plus())
        * &up("t^16 - 8*t^14 + 60*t^12 + 768*t^11 - 1720*t^10 + 1542*t^8 - 2560*t^7 \
               + 328*t^6 - 2048*t^5 + 1084*t^4 - 256*t^3 - 8*t^2 + 1"))
        * &up("t^17 - t^16 - 72*t^15 + 264*t^14 - 580*t^13 + 964*t^12 - 2680*t^11 \
               + 2232*t^10 - 250*t^9 - 1542*t^8 - 2680*t^7 + 952*t^6 - 580*t^5 - 60*t^4 \
               - 72*t^3 + 8*t^2 + t - 1");
    let b1 = &(&(-&quartic_plus())
        * &up("t^16 - 16*t^15 + 40*t^14 + 96*t^13 - 868*t^12 + 592*t^11 + 1240*t^10 \
               - 4032*t^9 - 3002*t^8 + 2960*t^7 - 1128*t^6 - 672*t^5 - 100*t^4 + 48*t^3 \
               - 24*t^2 + 1"))
        * &up("t^17 + 3*t^16 - 24*t^15 + 8*t^14 - 52*t^13 - 140*t^12 - 1800*t^11 \
               + 2488*t^10 - 42*t^9 + 1170*t^8 - 2792*t^7 + 2488*t^6 - 276*t^5 - 140*t^4 \
               + 136*t^3 + 8*t^2 - 15*t + 3");
    let b2 = &(&quartic_minus()
        * &up("t^17 + t^16 - 8*t^15 - 72*t^14 + 60*t^13 - 580*t^12 - 952*t^11 - 2680*t^10 \
               + 1542*t^9 - 250*t^8 - 2232*t^7 - 2680*t^6 - 964*t^5 - 580*t^4 - 264*t^3 \
               - 72*t^2 + t + 1"))
        * &up("t^16 - 8*t^14 + 256*t^13 + 1084*t^12 + 2048*t^11 + 328*t^10 + 2560*t^9 \
               + 1542*t^8 - 1720*t^6 - 768*t^5 + 60*t^4 - 8*t^2 + 1");
    let b3 = &(&(-&quartic_plus())
        * &up("t^16 - 8*t^14 - 256*t^13 + 1084*t^12 - 2048*t^11 + 328*t^10 - 2560*t^9 \
               + 1542*t^8 - 1720*t^6 + 768*t^5 + 60*t^4 - 8*t^2 + 1"))
        * &up("t^17 - t^16 - 8*t^15 + 72*t^14 + 60*t^13 + 580*t^12 - 952*t^11 + 2680*t^10 \
               + 1542*t^9 + 250*t^8 - 2232*t^7 + 2680*t^6 - 964*t^5 + 580*t^4 - 264*t^3 \
               + 72*t^2 + t - 1");
    let b4 = &(&(-&quartic_minus())
        * &up("t^16 + 16*t^15 + 40*t^14 - 96*t^13 - 868*t^12 - 592*t^11 + 1240*t^10 \
               + 4032*t^9 - 3002*t^8 - 2960*t^7 - 1128*t^6 + 672*t^5 - 100*t^4 - 48*t^3 \
               - 24*t^2 + 1"))
        * &up("t^17 - 3*t^16 - 24*t^15 - 8*t^14 - 52*t^13 + 140*t^12 - 1800*t^11 \
               - 2488*t^10 - 42*t^9 - 1170*t^8 - 2792*t^7 - 2488*t^6 - 276*t^5 + 140*t^4 \
               + 136*t^3 - 8*t^2 - 15*t - 3");
    ([a1, a2, a3, a4], [b1, b2, b3, b4])
}

/// Evaluate the closed forms, clear denominators, and remove the joint common
/// factor across all eight values (one factor, preserving the pair
/// relations). All-negative results are flipped positive.
fn normalized_closed_sides(t: &Rational) -> Result<([Rational; 4], [Rational; 4]), ScaleneError> {
    let (pa, pb) = side_polys();
    let mut vals: Vec<Rational> = pa.iter().chain(pb.iter()).map(|p| p.eval(t)).collect();
    let mut denom_lcm = Integer::one();
    for v in &vals {
        denom_lcm = denom_lcm.lcm(v.denom());
    }
    let scale = Rational::from_integer(denom_lcm);
    let mut gcd = Integer::zero();
    let ints: Vec<Integer> = vals
        .iter()
        .map(|v| {
            let n = (v * &scale).numer().clone();
            gcd = gcd.gcd(&n);
            n
        })
        .collect();
    if gcd.is_zero() {
        return Err(ScaleneError::Internal("all closed-form sides vanish".into()));
    }
    let mut normalized: Vec<Integer> = ints.into_iter().map(|n| n / &gcd).collect();
    if normalized.iter().all(|n| n.is_negative()) {
        for n in &mut normalized {
            *n = -&*n;
        }
    }
    vals = normalized
        .into_iter()
        .map(Rational::from_integer)
        .collect();
    let b = vals.split_off(4);
    Ok((
        [
            vals[0].clone(),
            vals[1].clone(),
            vals[2].clone(),
            vals[3].clone(),
        ],
        [b[0].clone(), b[1].clone(), b[2].clone(), b[3].clone()],
    ))
}

fn check_proportional(
    closed: &[Rational],
    pipeline: &[Rational],
) -> Result<(), ScaleneError> {
    let mut witness: Option<(Rational, Rational)> = None;
    for (c, p) in closed.iter().zip(pipeline) {
        match (c.is_zero(), p.is_zero()) {
            (true, true) => continue,
            (false, false) => match &witness {
                None => witness = Some((c.clone(), p.clone())),
                Some((c0, p0)) => {
                    if (c0 * p) != (c * p0) {
                        return Err(ScaleneError::Internal(
                            "closed forms and pipeline are not proportional".into(),
                        ));
                    }
                }
            },
            _ => {
                return Err(ScaleneError::Internal(
                    "closed forms and pipeline disagree on a zero side".into(),
                ))
            }
        }
    }
    Ok(())
}

/// Build the pair from the closed forms (gcd-normalized jointly across the
/// eight values), cross-checked against the seed pipeline. Outside the
/// constructibility window the record carries a cleared flag.
pub fn build_pair(params: &ScaleneParams) -> Result<PairRecord, ScaleneError> {
    let (sides_a, sides_b) = normalized_closed_sides(params.t())?;
    let sd = seed(params)?;
    let (pipe_a, pipe_b) = sd.sides();
    let all_closed: Vec<Rational> = sides_a.iter().chain(sides_b.iter()).cloned().collect();
    let all_pipe: Vec<Rational> = pipe_a.iter().chain(pipe_b.iter()).cloned().collect();
    check_proportional(&all_closed, &all_pipe)?;

    let record = PairRecord::new(
        Provenance::Scalene {
            t: params.t().clone(),
        },
        sides_a,
        sides_b,
    )
    .map_err(|e| ScaleneError::Internal(e.to_string()))?;

    if record.constructible() {
        let (qa, qb) = record.quads().expect("constructible");
        let report = quad::equal_pair_check(&qa, &qb)
            .map_err(|e| ScaleneError::Internal(e.to_string()))?;
        if !report.conditions_pass() {
            return Err(ScaleneError::Internal(
                "equal-pair conditions failed on a constructible pair".into(),
            ));
        }
    }
    Ok(record)
}

/// Re-derive the final ratio by running Fermat's method on the quartic form
/// (constant-term anchor; its constant and leading coefficients are both
/// squares). The result must match the reference ratio.
pub fn rederive_ratio_by_fermat(params: &ScaleneParams) -> Result<Rational, ScaleneError> {
    let t = params.t();
    let ratio = fermat::root_from_constant(&square_form_quartic(t)?)?;
    let (r1p, r2p) = ratio_polys();
    let reference = r1p.eval(t) / r2p.eval(t);
    if ratio != reference {
        return Err(ScaleneError::Internal(format!(
            "Fermat ratio {ratio} differs from the reference ratio {reference}"
        )));
    }
    Ok(ratio)
}

/// The final quartic form as a quartic in the ratio, at a fixed parameter.
pub fn square_form_quartic(t: &Rational) -> Result<Quartic, ScaleneError> {
    let coeffs = square_form_coeff_polys();
    Quartic::new([
        coeffs[0].eval(t),
        coeffs[1].eval(t),
        coeffs[2].eval(t),
        coeffs[3].eval(t),
        coeffs[4].eval(t),
    ])
    .map_err(ScaleneError::Fermat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn params(n: i64, d: i64) -> ScaleneParams {
        ScaleneParams::new(rat(n, d)).unwrap()
    }

    #[test]
    fn parameter_invariants() {
        assert!(ScaleneParams::new(rat(0, 1)).is_err());
        assert!(ScaleneParams::new(rat(1, 1)).is_err());
        assert!(ScaleneParams::new(rat(-1, 1)).is_err());
        assert!(ScaleneParams::new(rat(5, 1)).is_ok());
    }

    #[test]
    fn curve_coefficient_values() {
        assert_eq!(
            curve_coefficients(&params(5, 1)),
            (rat(2900, 1), rat(3076, 1))
        );
        assert_eq!(curve_coefficients(&params(2, 1)), (rat(26, 1), rat(73, 1)));
    }

    #[test]
    fn curve_point_satisfies_equation() {
        let p = curve_point(&params(5, 1)).unwrap();
        let xu = &p.x * &p.u;
        let xv = &p.x * &p.v;
        assert_eq!(
            &p.y * &p.y,
            (&xu - &p.v) * (&xu + &p.v) * (&xv - &p.u) * (&xv + &p.u)
        );
        // denominator never vanishes at rational parameters
        for k in 2..102i64 {
            assert!(curve_point(&params(k, k - 1)).is_ok());
        }
    }

    #[test]
    fn compat_residual_zero_for_reference_solution() {
        let t = rat(5, 1);
        let pp = param_polys();
        assert_eq!(
            compat_residual(
                &pp.g.eval(&t),
                &pp.h.eval(&t),
                &pp.m.eval(&t),
                &pp.n.eval(&t),
                &pp.u.eval(&t),
                &pp.v.eval(&t),
            ),
            rat(0, 1)
        );
        // hand arithmetic: all ones gives (-1)(1) - (1)(-1) = 0
        let one = rat(1, 1);
        assert_eq!(
            compat_residual(&one, &one, &one, &one, &one, &one),
            rat(0, 1)
        );
    }

    #[test]
    fn seed_invariants_at_five() {
        let s = seed(&params(5, 1)).unwrap();
        let sx: Rational = s.x.iter().sum();
        let sy: Rational = s.y.iter().sum();
        assert_eq!(sx, sy);
        let px: Rational = s.x.iter().product();
        let py: Rational = s.y.iter().product();
        assert_eq!(px, py);
        assert!(rational_square_root(&px).is_some());
        assert!(rational_square_root(&triple_product(&s.x)).is_some());
        assert!(rational_square_root(&triple_product(&s.y)).is_some());
    }

    #[test]
    fn reference_pair_at_five() {
        let rec = build_pair(&params(5, 1)).unwrap();
        assert!(rec.constructible());
        let want_a = [
            "1910470516999149312",
            "175866555513132912053",
            "169314770763852594617",
            "207503184245618672382",
        ];
        let want_b = [
            "154300800756891939924",
            "50195745087237056747",
            "121029496193614687182",
            "229068939001859644511",
        ];
        for (got, want) in rec.sides_a().iter().zip(want_a) {
            assert_eq!(got, &crate::arith::parse_rational(want).unwrap());
        }
        for (got, want) in rec.sides_b().iter().zip(want_b) {
            assert_eq!(got, &crate::arith::parse_rational(want).unwrap());
        }
        assert_eq!(rec.sides_pairwise_distinct(), (true, true));
    }

    #[test]
    fn fermat_rederives_reference_ratio() {
        let ratio = rederive_ratio_by_fermat(&params(5, 1)).unwrap();
        let (r1p, r2p) = ratio_polys();
        assert_eq!(ratio, r1p.eval(&rat(5, 1)) / r2p.eval(&rat(5, 1)));

        // the quartic form value at the ratio is a perfect square
        let t = rat(2, 1);
        let z = rederive_ratio_by_fermat(&params(2, 1)).unwrap();
        let f = square_form_quartic(&t).unwrap();
        assert!(rational_square_root(&f.eval(&z)).is_some());
    }

    #[test]
    fn anchors_on_the_square_form_across_parameters() {
        // the constant-term anchor reproduces the reference ratio for any
        // rational parameter; the leading anchor lands on a different but
        // still sound solution
        let (r1p, r2p) = ratio_polys();
        let samples = [
            rat(5, 1),
            rat(3, 1),
            rat(7, 2),
            rat(11, 3),
            rat(9, 4),
            rat(13, 5),
            rat(-3, 2),
            rat(8, 3),
            rat(21, 5),
            rat(17, 6),
        ];
        for t in samples {
            let f = square_form_quartic(&t).unwrap();
            let reference = r1p.eval(&t) / r2p.eval(&t);
            let via_const = crate::fermat::root_from_constant(&f).unwrap();
            assert_eq!(via_const, reference, "t = {t}");
            let via_leading = crate::fermat::root_from_leading(&f).unwrap();
            assert_ne!(via_leading, reference, "t = {t}");
            assert!(rational_square_root(&f.eval(&via_leading)).is_some(), "t = {t}");
        }
    }

    #[test]
    fn raw_closed_forms_normalize_to_reference_values() {
        // the joint common factor at t = 5 equals the per-quadruple gcd, so
        // normalizing the raw first quadruple alone reproduces the reference
        // integers
        let (pa, _) = side_polys();
        let five = rat(5, 1);
        let raw: Vec<Integer> = pa.iter().map(|p| p.eval(&five).numer().clone()).collect();
        let normalized = crate::arith::normalize_quadruple(&[
            raw[0].clone(),
            raw[1].clone(),
            raw[2].clone(),
            raw[3].clone(),
        ])
        .unwrap();
        let want = [
            "1910470516999149312",
            "175866555513132912053",
            "169314770763852594617",
            "207503184245618672382",
        ];
        for (got, want) in normalized.iter().zip(want) {
            assert_eq!(got.to_string(), want);
        }
    }

    #[test]
    fn out_of_window_flagged() {
        assert!(!build_pair(&params(4, 1)).unwrap().constructible());
        assert!(!build_pair(&params(6, 1)).unwrap().constructible());
    }
}
