//! Local expansions at split places and valuations of function-field elements.

use super::{CurveModel, Place, Sign};
use crate::algebra::{LaurentSeries, RatFun};
use crate::degree::Valuation;
use crate::elements::FFElem;
use crate::error::{Error, Result};

/// Initial number of coefficients examined past the lower bound.
const INITIAL_DEPTH: i64 = 8;

/// Order of a rational function of `X` on the `X`-line below `place`:
/// `(X - x0)`-adic for affine places, `(1/X)`-adic at infinity.
pub(crate) fn line_order(place: &Place, r: &RatFun) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    match place.x() {
        Some(x) => r.ord_at(x),
        None => Some(-r.degree().finite().expect("nonzero")),
    }
}

/// Valuation of `Y` at a split place (unit at affine points).
fn y_order(c: &CurveModel, place: &Place) -> i64 {
    match place {
        Place::InfSplit(_) => -(c.g() + 1),
        _ => 0,
    }
}

/// Expansion of `r(X)` in the local parameter at a split place, known below `abs_prec`.
pub(crate) fn ratfun_expansion(place: &Place, r: &RatFun, abs_prec: i64) -> LaurentSeries {
    let p = r.modulus();
    if r.is_zero() {
        return LaurentSeries::new(p, abs_prec, alloc::vec::Vec::new(), abs_prec);
    }
    let (num, den, shift) = match place.x() {
        Some(x) => (r.num().taylor_shift(x), r.den().taylor_shift(x), 0),
        None => {
            // X = 1/w: num(1/w) / den(1/w) = w^(deg den - deg num) rev(num) / rev(den)
            let dn = r.num().deg().expect("nonzero");
            let dd = r.den().deg().expect("den nonzero");
            (r.num().reverse(dn), r.den().reverse(dd), dd as i64 - dn as i64)
        }
    };
    let vn = num.ord_at(0).expect("nonzero") as i64;
    let vd = den.ord_at(0).expect("nonzero") as i64;
    let lead = vn - vd + shift;
    let rel = abs_prec - lead;
    if rel <= 0 {
        return LaurentSeries::new(p, abs_prec, alloc::vec::Vec::new(), abs_prec);
    }
    let num_s = LaurentSeries::from_poly(&num, vn + rel);
    let den_s = LaurentSeries::from_poly(&den, vd + rel);
    let q = num_s.mul(&den_s.inverse().expect("den nonzero"));
    q.shift(shift)
}

/// Expansion of `Y` in the local parameter at a split place with `rel_prec`
/// known coefficients.
pub fn y_expansion(c: &CurveModel, place: &Place, rel_prec: i64) -> Result<LaurentSeries> {
    c.check_place(place)?;
    let rel = rel_prec.max(1);
    match *place {
        Place::AffineSplit { x, y } => {
            let local = LaurentSeries::from_poly(&c.f().taylor_shift(x), rel);
            let root = local.sqrt(rel)?;
            Ok(if root.leading_coeff() == y { root } else { root.neg() })
        }
        Place::InfSplit(sign) => {
            let d = c.deg_f();
            let local = LaurentSeries::from_poly(&c.f().reverse(d), rel);
            let root = local.sqrt(rel)?;
            // The `+` branch has the smaller square root of lc(f) as leading coefficient.
            let root = match sign {
                Sign::Plus => root,
                Sign::Minus => root.neg(),
            };
            Ok(root.shift(-(c.g() + 1)))
        }
        _ => Err(Error::UnsupportedModel("Y has no rational expansion at this place")),
    }
}

/// Expansion of `a + Y b` at a split place, known below `abs_prec`.
pub(crate) fn element_expansion(
    c: &CurveModel,
    place: &Place,
    a: &RatFun,
    b: &RatFun,
    abs_prec: i64,
) -> Result<LaurentSeries> {
    let a_s = ratfun_expansion(place, a, abs_prec);
    if b.is_zero() {
        return Ok(a_s);
    }
    let vy = y_order(c, place);
    let vb = line_order(place, b).expect("nonzero");
    let b_s = ratfun_expansion(place, b, abs_prec - vy);
    let y_s = y_expansion(c, place, abs_prec - vy - vb)?;
    Ok(a_s.add(&y_s.mul(&b_s)).truncate(abs_prec))
}

/// `v_P(a + Y b)` for `Y^2 = f`.
pub(crate) fn valuation_ab(c: &CurveModel, place: &Place, a: &RatFun, b: &RatFun) -> Result<Valuation> {
    c.check_place(place)?;
    let oa = line_order(place, a);
    let ob = line_order(place, b);
    if oa.is_none() && ob.is_none() {
        return Ok(Valuation::PosInf);
    }
    let arm = |o: Option<i64>, f: &dyn Fn(i64) -> i64| o.map_or(i64::MAX, f);
    let d = c.deg_f() as i64;
    let g = c.g();
    let v = match place {
        Place::AffineRamified { .. } => arm(oa, &|o| 2 * o).min(arm(ob, &|o| 1 + 2 * o)),
        Place::AffineInert { .. } => arm(oa, &|o| o).min(arm(ob, &|o| o)),
        Place::InfRamified => arm(oa, &|o| 2 * o).min(arm(ob, &|o| 2 * o - d)),
        Place::InfInert => arm(oa, &|o| o).min(arm(ob, &|o| o - (g + 1))),
        Place::AffineSplit { .. } | Place::InfSplit(_) => {
            return split_valuation(c, place, a, b, oa, ob);
        }
    };
    Ok(Valuation::Finite(v))
}

fn split_valuation(
    c: &CurveModel,
    place: &Place,
    a: &RatFun,
    b: &RatFun,
    oa: Option<i64>,
    ob: Option<i64>,
) -> Result<Valuation> {
    let vy = y_order(c, place);
    let lower = match (oa, ob) {
        (Some(x), None) => return Ok(Valuation::Finite(x)),
        (None, Some(y)) => return Ok(Valuation::Finite(y + vy)),
        (Some(x), Some(y)) => x.min(y + vy),
        (None, None) => unreachable!(),
    };
    // v_P(x) + v_P(conj x) = ord(N(x)) and v_P(conj x) >= lower bound the search.
    let norm = &(a * a) - &(&(b * b) * &RatFun::from_poly(c.f().clone()));
    let upper = line_order(place, &norm)
        .ok_or_else(|| Error::Internal("nonzero element with zero norm".into()))?
        - lower;
    let mut depth = INITIAL_DEPTH;
    loop {
        let prec = (lower + depth).min(upper + 1);
        let s = element_expansion(c, place, a, b, prec)?;
        if let Some(v) = s.valuation() {
            return Ok(Valuation::Finite(v));
        }
        if prec > upper {
            return Err(Error::Internal(alloc::format!(
                "expansion of a nonzero element vanishes past its bound {upper} at {place}"
            )));
        }
        depth *= 2;
    }
}

/// `v_P(x)`; `+inf` for `x = 0`.
pub fn valuation(c: &CurveModel, place: &Place, x: &FFElem<'_>) -> Result<Valuation> {
    if x.curve() != c {
        return Err(Error::CurveMismatch);
    }
    valuation_ab(c, place, x.a(), x.b())
}
