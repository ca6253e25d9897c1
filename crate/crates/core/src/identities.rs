//! Symbolic identity suites: the closed forms behind both families are verified as exact
//! polynomial identities, not just at sample points.

use crate::arith::{Integer, Rational};
use crate::isosceles;
use crate::poly::{BiPoly, UniPoly};
use crate::scalene;

/// One named identity with its outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: Option<String>,
}

impl IdentityCheck {
    fn equal<T: PartialEq + std::fmt::Debug>(name: &'static str, got: T, want: T) -> Self {
        let pass = got == want;
        IdentityCheck {
            name,
            pass,
            detail: (!pass).then(|| format!("mismatch: {got:?} != {want:?}")),
        }
    }

    fn holds(name: &'static str, pass: bool, detail: &str) -> Self {
        IdentityCheck {
            name,
            pass,
            detail: (!pass).then(|| detail.to_string()),
        }
    }
}

fn bi_products(sides: &[BiPoly; 4]) -> [BiPoly; 3] {
    let [a1, a2, a3, a4] = sides;
    [
        &(a1 * a2) + &(a3 * a4),
        &(a1 * a3) + &(a2 * a4),
        &(a1 * a4) + &(a2 * a3),
    ]
}

fn bi_sixteen_area_sq(sides: &[BiPoly; 4]) -> BiPoly {
    let [a1, a2, a3, a4] = sides;
    let sum = &(&(a1 + a2) + a3) + a4;
    let term = |s: &BiPoly| &sum - &(s + s);
    &(&term(a1) * &term(a2)) * &(&term(a3) * &term(a4))
}

fn bi_sum(sides: &[BiPoly; 4]) -> BiPoly {
    &(&(&sides[0] + &sides[1]) + &sides[2]) + &sides[3]
}

/// The first-family suite: perimeter and area polynomials, square triple
/// products, the closed-form diagonal and circumradius formulas, the trapezoid
/// reordering, and agreement between the closed forms and the seed pipeline.
pub fn isosceles_suite() -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    let (a, b) = isosceles::side_polys();
    let perimeter = isosceles::perimeter_poly();
    let area = isosceles::area_poly();
    let sixteen = BiPoly::constant(Rational::from_integer(Integer::from(16)));

    out.push(IdentityCheck::equal("perimeter-a", bi_sum(&a), perimeter.clone()));
    out.push(IdentityCheck::equal("perimeter-b", bi_sum(&b), perimeter));

    let sixteen_area_sq = &sixteen * &(&area * &area);
    out.push(IdentityCheck::equal(
        "area-product-a",
        bi_sixteen_area_sq(&a),
        sixteen_area_sq.clone(),
    ));
    out.push(IdentityCheck::equal(
        "area-product-b",
        bi_sixteen_area_sq(&b),
        sixteen_area_sq.clone(),
    ));

    let pa = bi_products(&a);
    let pb = bi_products(&b);
    let triple = |p: &[BiPoly; 3]| &(&p[0] * &p[1]) * &p[2];
    out.push(IdentityCheck::holds(
        "triple-product-square-a",
        triple(&pa).square_root().is_some(),
        "triple product of the first quadruple is not a polynomial square",
    ));
    out.push(IdentityCheck::holds(
        "triple-product-square-b",
        triple(&pb).square_root().is_some(),
        "triple product of the second quadruple is not a polynomial square",
    ));

    // the quartic form with the default solution substituted is a square;
    // the root squares back term for term
    let form = isosceles::quartic_form_substituted();
    let squares_back = form
        .square_root()
        .is_some_and(|root| (&root * &root) == form);
    out.push(IdentityCheck::holds(
        "quartic-form-square",
        squares_back,
        "substituted quartic form is not a polynomial square",
    ));

    let diag = isosceles::shared_diagonal_poly();
    let diag_sq = &diag * &diag;
    out.push(IdentityCheck::equal(
        "first-diagonal-a",
        &pa[0] * &pa[1],
        &diag_sq * &pa[2],
    ));
    out.push(IdentityCheck::equal(
        "first-diagonal-b",
        &pb[0] * &pb[1],
        &diag_sq * &pb[2],
    ));

    let (n2a, den) = isosceles::second_diagonal_a();
    out.push(IdentityCheck::equal(
        "second-diagonal-a",
        &(&(&pa[1] * &pa[2]) * &den) * &den,
        &(&n2a * &n2a) * &pa[0],
    ));
    let (n2b, den) = isosceles::second_diagonal_b();
    out.push(IdentityCheck::equal(
        "second-diagonal-b",
        &(&(&pb[1] * &pb[2]) * &den) * &den,
        &(&n2b * &n2b) * &pb[0],
    ));

    let (rna, rda) = isosceles::circumradius_a();
    out.push(IdentityCheck::equal(
        "circumradius-a",
        &(&(triple(&pa)) * &rda) * &rda,
        &(&rna * &rna) * &sixteen_area_sq,
    ));
    let (rnb, rdb) = isosceles::circumradius_b();
    out.push(IdentityCheck::equal(
        "circumradius-b",
        &(&(triple(&pb)) * &rdb) * &rdb,
        &(&rnb * &rnb) * &sixteen_area_sq,
    ));

    // trapezoid reorder: swap the middle sides, then both diagonals square to
    // the shared diagonal polynomial
    for (name1, name2, sides) in [
        ("trapezoid-diagonal-1-a", "trapezoid-diagonal-2-a", &a),
        ("trapezoid-diagonal-1-b", "trapezoid-diagonal-2-b", &b),
    ] {
        let swapped = [
            sides[0].clone(),
            sides[2].clone(),
            sides[1].clone(),
            sides[3].clone(),
        ];
        let p = bi_products(&swapped);
        out.push(IdentityCheck::equal(name1, &p[0] * &p[1], &diag_sq * &p[2]));
        out.push(IdentityCheck::equal(name2, &p[1] * &p[2], &diag_sq * &p[0]));
    }

    // closed forms equal twice the seed pipeline
    let (x, y) = isosceles::seed_polys();
    let sum_x = bi_sum(&x);
    for (name, sides, transformed) in
        [("pipeline-agreement-a", &a, &x), ("pipeline-agreement-b", &b, &y)]
    {
        let mut pass = true;
        for (side, tv) in sides.iter().zip(transformed) {
            if side != &(&sum_x - &(tv + tv)) {
                pass = false;
            }
        }
        out.push(IdentityCheck::holds(
            name,
            pass,
            "closed form differs from twice the pipeline",
        ));
    }
    out
}

fn uni_products(values: &[UniPoly; 4]) -> [UniPoly; 3] {
    let [x1, x2, x3, x4] = values;
    [
        &(x1 * x2) + &(x3 * x4),
        &(x1 * x3) + &(x2 * x4),
        &(x1 * x4) + &(x2 * x3),
    ]
}

fn uni_sum(values: &[UniPoly; 4]) -> UniPoly {
    &(&(&values[0] + &values[1]) + &values[2]) + &values[3]
}

/// The second-family suite: the curve point identity, the compatibility
/// residual, the square root of the substituted quartic form, the transformed
/// sum/product identities, the triple-product factorization, and agreement
/// between the closed forms and the pipeline.
pub fn scalene_suite() -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    let pp = scalene::param_polys();

    // curve point satisfies its quartic equation, cleared of denominators
    let (xn, xd, yn, yd) = scalene::point_polys();
    let e1 = &(&xn * &pp.u) - &(&pp.v * &xd);
    let e2 = &(&xn * &pp.u) + &(&pp.v * &xd);
    let e3 = &(&xn * &pp.v) - &(&pp.u * &xd);
    let e4 = &(&xn * &pp.v) + &(&pp.u * &xd);
    let lhs = &(&yn * &yn) * &xd.pow(4);
    let rhs = &(&yd * &yd) * &(&(&e1 * &e2) * &(&e3 * &e4));
    out.push(IdentityCheck::equal("curve-point", lhs, rhs));

    // compatibility residual vanishes identically
    let mu = &pp.m * &pp.u;
    let nu = &pp.n * &pp.u;
    let nv = &pp.n * &pp.v;
    let mv = &pp.m * &pp.v;
    let residual = &(&(&(&mu - &nu) - &nv) * &(&(&mu - &nu) + &nv)) * &(&pp.g * &pp.g);
    let residual = &residual
        - &(&(&(&(&mv + &nu) - &nv) * &(&(&mv - &nu) - &nv)) * &(&pp.h * &pp.h));
    out.push(IdentityCheck::equal(
        "compat-residual",
        residual,
        UniPoly::zero(),
    ));

    // the substituted quartic form is a polynomial square
    let form = scalene::square_form_substituted();
    let root = form.square_root();
    out.push(IdentityCheck::holds(
        "square-form-root",
        root.is_some(),
        "substituted quartic form is not a polynomial square",
    ));

    // transformed quadruples share sum and product identically
    let (x, y) = scalene::seed_value_polys();
    out.push(IdentityCheck::equal("equal-sums", uni_sum(&x), uni_sum(&y)));
    let prod = |v: &[UniPoly; 4]| &(&v[0] * &v[1]) * &(&v[2] * &v[3]);
    out.push(IdentityCheck::equal("equal-products", prod(&x), prod(&y)));

    // first triple product factors exactly through the square condition
    let px = uni_products(&x);
    let triple_x = &(&px[0] * &px[1]) * &px[2];
    let prefactor = scalene::square_prefactor_poly();
    let expect = &(&(&pp.u * &pp.u) * &(&prefactor * &prefactor)) * &form;
    out.push(IdentityCheck::equal(
        "triple-product-factorization",
        triple_x,
        expect,
    ));

    // closed forms and pipeline sides differ by one common polynomial factor
    let (ca, cb) = scalene::side_polys();
    let sum_x = uni_sum(&x);
    let pipe: Vec<UniPoly> = x
        .iter()
        .chain(y.iter())
        .map(|tv| &sum_x - &(tv + tv))
        .collect();
    let closed: Vec<UniPoly> = ca.iter().chain(cb.iter()).cloned().collect();
    let mut pass = true;
    for i in 0..8 {
        for j in (i + 1)..8 {
            if (&closed[i] * &pipe[j]) != (&closed[j] * &pipe[i]) {
                pass = false;
            }
        }
    }
    out.push(IdentityCheck::holds(
        "pipeline-agreement",
        pass,
        "closed forms are not proportional to the pipeline sides",
    ));
    out
}
