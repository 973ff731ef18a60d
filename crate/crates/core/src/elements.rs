//! Arithmetic in `K = GF(p)(X)[Y] / (Y^2 - f)`, S-degrees at infinity,
//! Euclidean reduction and Euclidean minima.

use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Poly, RatFun};
use crate::curve::{valuation, CurveModel, InfinityKind, Place};
use crate::degree::{Degree, Valuation};
use crate::error::{Error, Result};
use crate::riemannroch;

/// Default cap on the number of `(c, d)` pairs enumerated by [`brute_force_min`].
pub const BRUTE_FORCE_CAP: u128 = 10_000_000;

/// `a + Y b` with `a, b` in GF(p)(X); the representation is unique.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FFElem<'c> {
    curve: &'c CurveModel,
    a: RatFun,
    b: RatFun,
}

impl<'c> FFElem<'c> {
    pub fn new(curve: &'c CurveModel, a: RatFun, b: RatFun) -> Result<Self> {
        curve.require_hyperelliptic()?;
        assert!(a.modulus() == curve.p() && b.modulus() == curve.p(), "field mismatch");
        Ok(Self { curve, a, b })
    }

    pub(crate) fn from_parts(curve: &'c CurveModel, a: RatFun, b: RatFun) -> Self {
        Self { curve, a, b }
    }

    /// `c + Y d` with polynomial components, an element of `GF(p)[X, Y]`.
    pub fn from_polys(curve: &'c CurveModel, c: Poly, d: Poly) -> Result<Self> {
        Self::new(curve, c.into(), d.into())
    }

    pub fn zero(curve: &'c CurveModel) -> Self {
        Self::from_parts(curve, RatFun::zero(curve.p()), RatFun::zero(curve.p()))
    }

    pub fn one(curve: &'c CurveModel) -> Self {
        Self::from_parts(curve, RatFun::one(curve.p()), RatFun::zero(curve.p()))
    }

    /// The coordinate function `X`.
    pub fn x(curve: &'c CurveModel) -> Self {
        Self::from_parts(curve, Poly::monomial(1, 1, curve.p()).into(), RatFun::zero(curve.p()))
    }

    /// The coordinate function `Y`.
    pub fn y(curve: &'c CurveModel) -> Self {
        Self::from_parts(curve, RatFun::zero(curve.p()), RatFun::one(curve.p()))
    }

    pub fn curve(&self) -> &'c CurveModel {
        self.curve
    }

    pub fn a(&self) -> &RatFun {
        &self.a
    }

    pub fn b(&self) -> &RatFun {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Whether both components are polynomials, i.e. `self` lies in `GF(p)[X, Y]`.
    pub fn is_integral(&self) -> bool {
        self.a.is_poly() && self.b.is_poly()
    }

    fn same_curve(&self, other: &Self) -> Result<()> {
        if core::ptr::eq(self.curve, other.curve) || self.curve == other.curve {
            Ok(())
        } else {
            Err(Error::CurveMismatch)
        }
    }

    fn f(&self) -> RatFun {
        RatFun::from_poly(self.curve.f().clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_curve(other)?;
        Ok(Self::from_parts(self.curve, &self.a + &other.a, &self.b + &other.b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_curve(other)?;
        Ok(Self::from_parts(self.curve, &self.a - &other.a, &self.b - &other.b))
    }

    /// `(a + Yb)(c + Yd) = (ac + f bd) + Y (ad + bc)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_curve(other)?;
        let a = &(&self.a * &other.a) + &(&(&self.b * &other.b) * &self.f());
        let b = &(&self.a * &other.b) + &(&self.b * &other.a);
        Ok(Self::from_parts(self.curve, a, b))
    }

    pub fn neg(&self) -> Self {
        Self::from_parts(self.curve, -&self.a, -&self.b)
    }

    /// `a - Y b`.
    pub fn conj(&self) -> Self {
        Self::from_parts(self.curve, self.a.clone(), -&self.b)
    }

    /// Multiplies both components by a rational function of `X`.
    pub fn scale(&self, r: &RatFun) -> Self {
        Self::from_parts(self.curve, &self.a * r, &self.b * r)
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm().inv()?;
        Ok(self.conj().scale(&n))
    }

    /// `N(a + Y b) = a^2 - f b^2`.
    pub fn norm(&self) -> RatFun {
        &(&self.a * &self.a) - &(&(&self.b * &self.b) * &self.f())
    }

    /// `-sum_{P | inf} deg(P) v_P(self)`, checked against `deg N(self)`.
    pub fn deg_s(&self) -> Result<Degree> {
        let (_, places) = self.curve.infinity_places()?;
        let mut total = 0i64;
        for place in &places {
            match valuation(self.curve, place, self)? {
                Valuation::PosInf => total = i64::MIN,
                Valuation::Finite(v) => {
                    if total != i64::MIN {
                        total -= v * place.degree();
                    }
                }
            }
        }
        let by_valuations = if total == i64::MIN {
            Degree::NegInf
        } else {
            Degree::Finite(total)
        };
        let by_norm = self.norm().degree();
        if by_valuations != by_norm {
            return Err(Error::Internal(alloc::format!(
                "deg_S mismatch for {self}: valuations give {by_valuations}, norm gives {by_norm}"
            )));
        }
        Ok(by_norm)
    }
}

impl fmt::Display for FFElem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "y*({})", self.b),
            (false, false) => write!(f, "{} + y*({})", self.a, self.b),
        }
    }
}

impl fmt::Debug for FFElem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FFElem[{self}]")
    }
}

pub fn ff_add<'c>(x: &FFElem<'c>, y: &FFElem<'c>) -> Result<FFElem<'c>> {
    x.add(y)
}

pub fn ff_mul<'c>(x: &FFElem<'c>, y: &FFElem<'c>) -> Result<FFElem<'c>> {
    x.mul(y)
}

pub fn ff_conj<'c>(x: &FFElem<'c>) -> FFElem<'c> {
    x.conj()
}

pub fn norm(x: &FFElem<'_>) -> RatFun {
    x.norm()
}

pub fn deg_s(x: &FFElem<'_>) -> Result<Degree> {
    x.deg_s()
}

/// The best approximation `y` of `x` from `GF(p)[X, Y]` and `deg_S(x - y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReduceResult<'c> {
    pub y: FFElem<'c>,
    pub value: Degree,
}

/// Subtracts the polynomial parts of both components.
///
/// With ramified or inert infinity the two terms of `deg N(x - y)` cannot
/// cancel, so the minimisation over `c` and `d` separates and the result is
/// the minimum over all of `GF(p)[X, Y]`.
pub fn euclidean_reduce<'c>(x: &FFElem<'c>) -> Result<ReduceResult<'c>> {
    let c = x.curve();
    let kind = c.infinity_kind()?;
    if kind == InfinityKind::Split {
        return Err(Error::SplitInfinity);
    }
    let (whole_a, frac_a) = x.a().proper_split();
    let (whole_b, frac_b) = x.b().proper_split();
    let y = FFElem::from_parts(c, whole_a.into(), whole_b.into());
    let value = x.sub(&y)?.deg_s()?;
    let g = c.g();
    let expected = match kind {
        InfinityKind::Inert => frac_a.degree().max(frac_b.degree().shift(g + 1)).scale(2),
        _ => frac_a.degree().scale(2).max(frac_b.degree().scale(2).shift(2 * g + 1)),
    };
    if expected != value {
        return Err(Error::Internal(alloc::format!(
            "reduction of {x}: closed form {expected} differs from deg_S {value}"
        )));
    }
    Ok(ReduceResult { y, value })
}

/// Exhaustive `min deg_S(x - c - Y d)` over `deg c, deg d <= degree_bound`,
/// with `S` the places at infinity.
pub fn brute_force_min(x: &FFElem<'_>, degree_bound: i64, cap: u128) -> Result<Degree> {
    let c = x.curve();
    let p = c.p();
    let n_coeffs = (degree_bound + 1).max(0) as u32;
    let per_side = (p as u128).checked_pow(n_coeffs).unwrap_or(u128::MAX);
    let size = per_side.saturating_mul(per_side);
    if size > cap {
        return Err(Error::EnumerationCap { size, cap });
    }
    let f = c.f();
    let (na, da) = (x.a().num(), x.a().den());
    let (nb, db) = (x.b().num(), x.b().den());
    // N(x - y) = [(na - c da)^2 db^2 - f (nb - d db)^2 da^2] / (da db)^2
    let shift = 2 * (da.deg().unwrap_or(0) + db.deg().unwrap_or(0)) as i64;
    let db2 = db * db;
    let da2f = &(da * da) * f;
    let candidates: Vec<Poly> = (0..per_side as u64)
        .map(|idx| poly_from_index(idx, n_coeffs, p))
        .collect();
    let left: Vec<Poly> = candidates
        .iter()
        .map(|cand| {
            let t = na - &(cand * da);
            &(&t * &t) * &db2
        })
        .collect();
    let right: Vec<Poly> = candidates
        .iter()
        .map(|cand| {
            let t = nb - &(cand * db);
            &(&t * &t) * &da2f
        })
        .collect();
    let mut best = None::<Degree>;
    for l in &left {
        for r in &right {
            let d = match degree_of_difference(l.coeffs(), r.coeffs()) {
                None => Degree::NegInf,
                Some(k) => Degree::Finite(k as i64 - shift),
            };
            if best.is_none_or(|b| d < b) {
                best = Some(d);
                if d == Degree::NegInf {
                    return Ok(d);
                }
            }
        }
    }
    Ok(best.expect("at least one candidate"))
}

fn poly_from_index(mut idx: u64, n: u32, p: u64) -> Poly {
    let mut coeffs = Vec::with_capacity(n as usize);
    for _ in 0..n {
        coeffs.push(idx % p);
        idx /= p;
    }
    Poly::from_residues(p, coeffs)
}

/// Degree of `l - r` for normalized coefficient slices.
fn degree_of_difference(l: &[u64], r: &[u64]) -> Option<usize> {
    if l.len() != r.len() {
        return Some(l.len().max(r.len()) - 1);
    }
    (0..l.len()).rev().find(|&i| l[i] != r[i])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinimumStatus {
    Exact(i64),
    UpperBound(i64),
}

impl MinimumStatus {
    pub fn value(self) -> i64 {
        match self {
            MinimumStatus::Exact(v) | MinimumStatus::UpperBound(v) => v,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, MinimumStatus::Exact(_))
    }
}

/// Which result justifies a [`MinimumResult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinimumMethod {
    /// Single rational place: the minimum is the largest Weierstrass gap.
    Prop3,
    /// Inert infinity on `Y^2 = f`, `deg f = 2g + 2`: the minimum is `2g`.
    Thm10,
    /// Upper bound by the index of speciality.
    Thm2Mu,
}

impl MinimumMethod {
    pub fn tag(self) -> &'static str {
        match self {
            MinimumMethod::Prop3 => "PROP3",
            MinimumMethod::Thm10 => "THM10",
            MinimumMethod::Thm2Mu => "THM2_MU",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimumResult<'c> {
    pub status: MinimumStatus,
    pub method: MinimumMethod,
    pub witness: Option<FFElem<'c>>,
}

/// Euclidean minimum of `K` with respect to the closed places `s`.
pub fn minimum<'c>(c: &'c CurveModel, s: &[Place]) -> Result<MinimumResult<'c>> {
    if s.is_empty() {
        return Err(Error::EmptyPlaceSet);
    }
    for place in s {
        c.check_place(place)?;
    }
    let mut places: Vec<Place> = s.to_vec();
    places.sort();
    places.dedup();
    if let [place] = places[..] {
        if place.is_rational() {
            let mu = riemannroch::mu_singleton(c, &place)?;
            let witness = prop3_witness(c, &place, mu)?;
            return Ok(MinimumResult {
                status: MinimumStatus::Exact(mu),
                method: MinimumMethod::Prop3,
                witness: Some(witness),
            });
        }
        if place == Place::InfInert {
            let p = c.p();
            let witness = FFElem::from_parts(
                c,
                RatFun::zero(p),
                RatFun::new(Poly::one(p), Poly::monomial(1, 1, p))?,
            );
            return Ok(MinimumResult {
                status: MinimumStatus::Exact(2 * c.g()),
                method: MinimumMethod::Thm10,
                witness: Some(witness),
            });
        }
    }
    let mu = riemannroch::mu(c, &places, riemannroch::default_height(c))?;
    Ok(MinimumResult {
        status: MinimumStatus::UpperBound(mu.value),
        method: MinimumMethod::Thm2Mu,
        witness: None,
    })
}

/// First rational affine place other than `avoid`, scanning `x = 0, 1, 2, ...`;
/// when every affine fibre is inert, the place over the first `x`.
pub fn auxiliary_place(c: &CurveModel, avoid: &Place) -> Result<Place> {
    let mut fallback = None;
    for x in 0..c.p() {
        for q in c.affine_places(x)? {
            if q == *avoid {
                continue;
            }
            if q.is_rational() {
                return Ok(q);
            }
            fallback.get_or_insert(q);
        }
    }
    fallback.ok_or(Error::UnsupportedModel("no affine place available"))
}

/// A function with a pole of exact order `mu` at `place` and no poles
/// outside `{place, Q}`.
fn prop3_witness<'c>(c: &'c CurveModel, place: &Place, mu: i64) -> Result<FFElem<'c>> {
    let q = auxiliary_place(c, place)?;
    for k in 0..=2 * c.g() + 1 {
        let d = crate::curve::Divisor::from_terms([(*place, mu), (q, k)]);
        let basis = riemannroch::l_space(c, &d)?;
        for x in basis.functions {
            if valuation(c, place, &x)? == Valuation::Finite(-mu) {
                return Ok(x);
            }
        }
    }
    Err(Error::Internal("no function with the required pole order".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::CurveModel;

    fn px(p: u64, c: &[i64]) -> Poly {
        Poly::from_i64(p, c)
    }

    fn hyper(p: u64, c: &[i64]) -> CurveModel {
        CurveModel::hyperelliptic(p, px(p, c)).unwrap()
    }

    fn y_over_x(c: &CurveModel) -> FFElem<'_> {
        let p = c.p();
        FFElem::new(c, RatFun::zero(p), RatFun::new(px(p, &[1]), px(p, &[0, 1])).unwrap()).unwrap()
    }

    #[test]
    fn ring_examples() {
        let c = hyper(7, &[1, 0, 0, 1]);
        let y = FFElem::y(&c);
        assert_eq!(y.mul(&y).unwrap(), FFElem::from_polys(&c, c.f().clone(), Poly::zero(7)).unwrap());
        let one = FFElem::one(&c);
        let lhs = one.add(&y).unwrap().mul(&one.sub(&y).unwrap()).unwrap();
        assert_eq!(lhs, FFElem::from_polys(&c, &Poly::one(7) - c.f(), Poly::zero(7)).unwrap());
        let x = lhs.add(&y).unwrap();
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn norm_examples() {
        let c = hyper(7, &[1, 0, 0, 1]);
        assert_eq!(FFElem::y(&c).norm(), RatFun::from_poly(-c.f()));
        let x = FFElem::x(&c);
        assert_eq!(x.norm(), RatFun::from_poly(px(7, &[0, 0, 1])));
        let one_plus_y = FFElem::one(&c).add(&FFElem::y(&c)).unwrap();
        assert_eq!(one_plus_y.norm(), RatFun::from_poly(px(7, &[0, 0, 0, -1])));
    }

    #[test]
    fn deg_s_examples() {
        for c in [hyper(7, &[1, 2, 0, 0, 0, 1]), hyper(7, &[2, 1, 0, 0, 0, 0, 3]), hyper(7, &[1, 0, 0, 0, 0, 0, 1])] {
            assert_eq!(FFElem::x(&c).deg_s(), Ok(Degree::Finite(2)));
            assert_eq!(FFElem::zero(&c).deg_s(), Ok(Degree::NegInf));
        }
        let c = hyper(7, &[1, 2, 0, 0, 0, 1]);
        assert_eq!(FFElem::y(&c).deg_s(), Ok(Degree::Finite(5)));
    }

    #[test]
    fn reduce_examples() {
        let inert = hyper(7, &[2, 1, 0, 0, 0, 0, 3]);
        assert_eq!(euclidean_reduce(&y_over_x(&inert)).unwrap().value, Degree::Finite(4));
        let odd = hyper(7, &[1, 2, 0, 0, 0, 1]);
        assert_eq!(euclidean_reduce(&y_over_x(&odd)).unwrap().value, Degree::Finite(3));
        let integral = FFElem::from_polys(&odd, px(7, &[1, 2]), px(7, &[3])).unwrap();
        let r = euclidean_reduce(&integral).unwrap();
        assert_eq!((r.y, r.value), (integral, Degree::NegInf));
        let split = hyper(7, &[1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(euclidean_reduce(&y_over_x(&split)), Err(Error::SplitInfinity));
    }

    #[test]
    fn brute_force_examples() {
        // 2 is a nonsquare mod 3
        let inert = hyper(3, &[1, 1, 0, 0, 0, 0, 2]);
        assert_eq!(inert.infinity_kind(), Ok(InfinityKind::Inert));
        assert_eq!(brute_force_min(&y_over_x(&inert), 3, BRUTE_FORCE_CAP), Ok(Degree::Finite(4)));
        let odd = hyper(3, &[1, 2, 0, 0, 0, 1]);
        assert_eq!(brute_force_min(&y_over_x(&odd), 3, BRUTE_FORCE_CAP), Ok(Degree::Finite(3)));
        let integral = FFElem::from_polys(&odd, px(3, &[1, 2]), px(3, &[1])).unwrap();
        assert_eq!(brute_force_min(&integral, 1, BRUTE_FORCE_CAP), Ok(Degree::NegInf));
        let inv_x = FFElem::new(&odd, RatFun::new(px(3, &[1]), px(3, &[0, 1])).unwrap(), RatFun::zero(3)).unwrap();
        assert_eq!(brute_force_min(&inv_x, 0, BRUTE_FORCE_CAP), Ok(Degree::Finite(-2)));
        assert!(matches!(
            brute_force_min(&inv_x, 20, BRUTE_FORCE_CAP),
            Err(Error::EnumerationCap { .. })
        ));
    }

    #[test]
    fn minimum_dispatch() {
        let odd = hyper(7, &[1, 2, 0, 0, 0, 1]);
        let m = minimum(&odd, &[Place::InfRamified]).unwrap();
        assert_eq!((m.status, m.method), (MinimumStatus::Exact(3), MinimumMethod::Prop3));
        let w = m.witness.unwrap();
        assert_eq!(valuation(&odd, &Place::InfRamified, &w), Ok(Valuation::Finite(-3)));
        let inert = hyper(7, &[2, 1, 0, 0, 0, 0, 3]);
        let m = minimum(&inert, &[Place::InfInert]).unwrap();
        assert_eq!((m.status, m.method), (MinimumStatus::Exact(4), MinimumMethod::Thm10));
        let split = hyper(7, &[1, 0, 0, 0, 0, 0, 1]);
        let s = split.infinity_places().unwrap().1;
        let m = minimum(&split, &s).unwrap();
        assert_eq!(m.method, MinimumMethod::Thm2Mu);
        assert!(!m.status.is_exact());
        assert_eq!(minimum(&odd, &[]), Err(Error::EmptyPlaceSet));
    }

    #[test]
    fn auxiliary_place_without_rational_points() {
        // f takes the non-square value 2 at every x in GF(3)
        let c = hyper(3, &[2, 2, 0, 1]);
        assert_eq!(auxiliary_place(&c, &Place::InfRamified), Ok(Place::AffineInert { x: 0 }));
        let m = minimum(&c, &[Place::InfRamified]).unwrap();
        assert_eq!(m.status, MinimumStatus::Exact(1));
        assert_eq!(valuation(&c, &Place::InfRamified, &m.witness.unwrap()), Ok(Valuation::Finite(-1)));
    }
}
