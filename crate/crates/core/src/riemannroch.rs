//! Riemann-Roch spaces `L(D)` by exact linear algebra, indices of speciality,
//! Weierstrass gap sequences and the index of speciality `mu(S)` of a set of places.
//!
//! A function in `L(D)` is written `(u + Y v) / h` with `u, v` in GF(p)[X] and
//! `h = prod (X - x_i)^{e_i}` over the affine `X`-coordinates of `supp D`.
//! Since `Y^2 = f` with `f` squarefree is smooth, `GF(p)[X, Y]` is integrally
//! closed, so clearing the allowed affine poles with `h` lands in it. The
//! conditions at infinity bound `deg u` and `deg v`; the conditions at the
//! places over each `x_i` are linear in the coefficients of `u` and `v`.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{FpMatrix, Poly, RatFun};
use crate::curve::{element_expansion, valuation, y_expansion, CurveModel, Divisor, InfinityKind, Place};
use crate::degree::Valuation;
use crate::elements::FFElem;
use crate::error::{Error, Result};

/// Basis of `L(D)`.
#[derive(Clone, Debug)]
pub struct LBasis<'c> {
    pub divisor: Divisor,
    pub functions: Vec<FFElem<'c>>,
    pub dimension: usize,
}

/// Gap sequence of a rational place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapSequence {
    pub place: Place,
    pub gaps: Vec<i64>,
}

/// Least degree of a divisor supported on `S` with vanishing index of speciality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuResult {
    pub value: i64,
    pub witness: Divisor,
    /// True when no divisor of smaller degree can exist outside the searched box.
    pub exhaustive: bool,
}

/// Default coefficient bound for the `mu` search.
pub fn default_height(c: &CurveModel) -> i64 {
    2 * c.g() + 2
}

/// Unknown layout: `u_0..u_du`, then `v_0..v_dv`.
struct Layout {
    du: Option<usize>,
    dv: Option<usize>,
}

impl Layout {
    fn new(du: i64, dv: i64) -> Self {
        let to_opt = |d: i64| (d >= 0).then_some(d as usize);
        Self {
            du: to_opt(du),
            dv: to_opt(dv),
        }
    }

    fn nu(&self) -> usize {
        self.du.map_or(0, |d| d + 1)
    }

    fn nv(&self) -> usize {
        self.dv.map_or(0, |d| d + 1)
    }

    fn cols(&self) -> usize {
        self.nu() + self.nv()
    }
}

/// `binom(j, k) x^(j - k)`: the `t^k` coefficient of `(x + t)^j`.
fn taylor_of_monomial(j: usize, k: usize, x: u64, p: u64) -> u64 {
    if k > j {
        return 0;
    }
    Poly::monomial(1, j, p).taylor_shift(x).coeff(k)
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// A basis of `L(D) = { x : v_P(x) >= -n_P for all P }`.
pub fn l_space<'c>(c: &'c CurveModel, d: &Divisor) -> Result<LBasis<'c>> {
    c.require_hyperelliptic()?;
    c.check_divisor(d)?;
    let p = c.p();
    let g = c.g();

    // Allowed pole order of h at each x_i.
    let xs = d.affine_xs();
    let mut fibres = Vec::with_capacity(xs.len());
    for &x in &xs {
        let over = c.affine_places(x)?;
        let e = over
            .iter()
            .map(|pl| ceil_div(d.coeff(pl), pl.ramification()))
            .max()
            .unwrap_or(0)
            .max(0);
        fibres.push((x, e, over));
    }
    let h = fibres
        .iter()
        .fold(Poly::one(p), |acc, (x, e, _)| &acc * &Poly::linear(*x, p).pow(*e as u32));
    let hd = h.deg().expect("nonzero") as i64;

    let (kind, inf_places) = c.infinity_places()?;
    let n_inf = |pl: &Place| d.coeff(pl);
    let (du, dv) = match kind {
        InfinityKind::Ramified => {
            let n = n_inf(&Place::InfRamified);
            (hd + n.div_euclid(2), hd + (n - c.deg_f() as i64).div_euclid(2))
        }
        InfinityKind::Inert => {
            let n = n_inf(&Place::InfInert);
            (hd + n, hd + n - g - 1)
        }
        InfinityKind::Split => {
            let nmax = inf_places.iter().map(n_inf).max().expect("two places");
            (hd + nmax, hd + nmax - g - 1)
        }
    };
    let layout = Layout::new(du, dv);
    let cols = layout.cols();
    let mut m = FpMatrix::zeros(p, 0, cols);

    for (x, e, over) in &fibres {
        for place in over {
            let threshold = e * place.ramification() - d.coeff(place);
            if threshold <= 0 {
                continue;
            }
            match place {
                Place::AffineRamified { .. } => {
                    vanish_taylor(&mut m, &layout, *x, ceil_div(threshold, 2), ceil_div(threshold - 1, 2), p);
                }
                Place::AffineInert { .. } => {
                    vanish_taylor(&mut m, &layout, *x, threshold, threshold, p);
                }
                Place::AffineSplit { .. } => {
                    split_rows(c, &mut m, &layout, place, *x, threshold)?;
                }
                _ => unreachable!("affine fibre"),
            }
        }
    }
    if kind == InfinityKind::Split {
        let nmax = inf_places.iter().map(n_inf).max().expect("two places");
        for place in &inf_places {
            let n = n_inf(place);
            if n < nmax {
                infinity_split_rows(c, &mut m, &layout, place, hd, nmax, n)?;
            }
        }
    }

    let mut functions = Vec::new();
    for vec in m.kernel() {
        let u = Poly::from_residues(p, vec[..layout.nu()].to_vec());
        let v = Poly::from_residues(p, vec[layout.nu()..].to_vec());
        let a = RatFun::new(u, h.clone())?;
        let b = RatFun::new(v, h.clone())?;
        functions.push(FFElem::new(c, a, b)?);
    }
    check_membership(c, d, &fibres, &inf_places, &functions)?;
    let dimension = functions.len();
    Ok(LBasis {
        divisor: d.clone(),
        functions,
        dimension,
    })
}

/// Rows forcing the first `ku` Taylor coefficients of `u` and the first `kv`
/// of `v` at `x` to vanish.
fn vanish_taylor(m: &mut FpMatrix, layout: &Layout, x: u64, ku: i64, kv: i64, p: u64) {
    let cols = layout.cols();
    for k in 0..ku.max(0) as usize {
        let mut row = vec![0u64; cols];
        for j in 0..layout.nu() {
            row[j] = taylor_of_monomial(j, k, x, p);
        }
        m.push_row(&row);
    }
    for k in 0..kv.max(0) as usize {
        let mut row = vec![0u64; cols];
        for j in 0..layout.nv() {
            row[layout.nu() + j] = taylor_of_monomial(j, k, x, p);
        }
        m.push_row(&row);
    }
}

/// Rows forcing `u(x + t) + y(t) v(x + t)` to vanish to order `threshold`.
fn split_rows(
    c: &CurveModel,
    m: &mut FpMatrix,
    layout: &Layout,
    place: &Place,
    x: u64,
    threshold: i64,
) -> Result<()> {
    let p = c.p();
    let y = y_expansion(c, place, threshold)?;
    let cols = layout.cols();
    for k in 0..threshold as usize {
        let mut row = vec![0u64; cols];
        for j in 0..layout.nu() {
            row[j] = taylor_of_monomial(j, k, x, p);
        }
        for j in 0..layout.nv() {
            // [t^k] y(t) (x + t)^j
            let mut acc = 0u64;
            for i in 0..=k.min(j) {
                let yc = y.coeff((k - i) as i64).expect("enough precision");
                acc = (acc + yc * taylor_of_monomial(j, i, x, p)) % p;
            }
            row[layout.nu() + j] = acc;
        }
        m.push_row(&row);
    }
    Ok(())
}

/// Rows at a split place at infinity whose allowed pole order `n` is below
/// the `nmax` used for the degree bounds: in `w = 1/X`, the coefficients of
/// `w^k` in `u + Y v` vanish for `-(hd + nmax) <= k < -(hd + n)`.
fn infinity_split_rows(
    c: &CurveModel,
    m: &mut FpMatrix,
    layout: &Layout,
    place: &Place,
    hd: i64,
    nmax: i64,
    n: i64,
) -> Result<()> {
    let low = -(hd + nmax);
    let high = -(hd + n);
    let vy = -(c.g() + 1);
    // Y X^j = w^(-j) y(w); needs coefficients of y up to exponent high - 1 + dv.
    let top = high - 1 + layout.dv.map_or(0, |d| d as i64);
    let y = y_expansion(c, place, top - vy + 1)?;
    let cols = layout.cols();
    for k in low..high {
        let mut row = vec![0u64; cols];
        for j in 0..layout.nu() {
            if -(j as i64) == k {
                row[j] = 1;
            }
        }
        for j in 0..layout.nv() {
            row[layout.nu() + j] = y.coeff(k + j as i64).expect("enough precision");
        }
        m.push_row(&row);
    }
    Ok(())
}

/// Re-checks `v_P(x) >= -n_P` at every place that carries a constraint.
fn check_membership(
    c: &CurveModel,
    d: &Divisor,
    fibres: &[(u64, i64, Vec<Place>)],
    inf_places: &[Place],
    functions: &[FFElem<'_>],
) -> Result<()> {
    let places = fibres
        .iter()
        .flat_map(|(_, _, over)| over.iter())
        .chain(inf_places.iter());
    for place in places {
        let bound = -d.coeff(place);
        for x in functions {
            if valuation(c, place, x)? < Valuation::Finite(bound) {
                return Err(Error::Internal(alloc::format!(
                    "basis function {x} of L({d}) violates the condition at {place}"
                )));
            }
        }
    }
    Ok(())
}

/// `dim L(D)`.
pub fn ell(c: &CurveModel, d: &Divisor) -> Result<usize> {
    Ok(l_space(c, d)?.dimension)
}

/// `i(D) = l(D) - deg D + g - 1`, cross-checked against `l(W - D)` when a
/// canonical divisor is available.
pub fn speciality_index(c: &CurveModel, d: &Divisor) -> Result<i64> {
    let l = ell(c, d)? as i64;
    let i = l - d.degree() + c.g() - 1;
    if c.infinity_kind()? == InfinityKind::Ramified {
        let w = c.canonical_divisor()?;
        let dual = ell(c, &(&w - d))? as i64;
        if dual != i {
            return Err(Error::Internal(alloc::format!(
                "Riemann-Roch mismatch for D = {d}: l(W - D) = {dual}, l(D) - deg D + g - 1 = {i}"
            )));
        }
    }
    Ok(i)
}

fn require_rational(place: &Place) -> Result<()> {
    if place.is_rational() {
        Ok(())
    } else {
        Err(Error::NotRational)
    }
}

/// Integers `n` in `[1, 2g - 1]` with `l(nP) = l((n - 1)P)`.
pub fn gap_sequence(c: &CurveModel, place: &Place) -> Result<GapSequence> {
    c.check_place(place)?;
    require_rational(place)?;
    let g = c.g();
    let mut gaps = Vec::new();
    let mut prev = ell(c, &Divisor::zero())?;
    for n in 1..2 * g {
        let cur = ell(c, &Divisor::single(*place, n))?;
        if cur == prev {
            gaps.push(n);
        }
        prev = cur;
    }
    if gaps.len() as i64 != g {
        return Err(Error::Internal(alloc::format!(
            "{} gaps at {place} on a genus {g} curve",
            gaps.len()
        )));
    }
    Ok(GapSequence {
        place: *place,
        gaps,
    })
}

/// `mu(P)`: the largest Weierstrass gap of a rational place.
pub fn mu_singleton(c: &CurveModel, place: &Place) -> Result<i64> {
    Ok(*gap_sequence(c, place)?.gaps.last().expect("genus is positive"))
}

/// Whether the gap sequence at `place` differs from `(1, ..., g)`.
///
/// Refuses `p <= 2g`, where the generic sequence need not be `(1, ..., g)`.
pub fn is_weierstrass_point(c: &CurveModel, place: &Place) -> Result<bool> {
    let g = c.g();
    if c.p() <= 2 * g as u64 {
        return Err(Error::ClassicalityGuard {
            p: c.p(),
            twice_genus: 2 * g as u64,
        });
    }
    let gaps = gap_sequence(c, place)?.gaps;
    Ok(!gaps.iter().copied().eq(1..=g))
}

/// Upper limit on `(2H + 1)^|S|` for the `mu` search.
pub const MU_SEARCH_CAP: u128 = 2_000_000;

/// Least `deg D` over `D` supported on `s` with `|n_P| <= height_bound`,
/// `g - 1 <= deg D <= 2g - 2 + d_min` and `i(D) = 0`.
pub fn mu(c: &CurveModel, s: &[Place], height_bound: i64) -> Result<MuResult> {
    if s.is_empty() {
        return Err(Error::EmptyPlaceSet);
    }
    let mut places: Vec<Place> = s.to_vec();
    places.sort();
    places.dedup();
    for place in &places {
        c.check_place(place)?;
    }
    let g = c.g();
    let height = height_bound.max(0);
    let d_min = places.iter().map(Place::degree).min().expect("nonempty");
    let lo = g - 1;
    let hi = 2 * g - 2 + d_min;
    let size = ((2 * height + 1) as u128).checked_pow(places.len() as u32).unwrap_or(u128::MAX);
    if size > MU_SEARCH_CAP {
        return Err(Error::EnumerationCap {
            size,
            cap: MU_SEARCH_CAP,
        });
    }

    // Candidates sorted by degree, then lexicographically by coefficient vector.
    let mut candidates: Vec<(i64, Vec<i64>)> = Vec::new();
    let mut coeffs = vec![-height; places.len()];
    loop {
        let deg: i64 = coeffs.iter().zip(&places).map(|(n, pl)| n * pl.degree()).sum();
        if (lo..=hi).contains(&deg) {
            candidates.push((deg, coeffs.clone()));
        }
        if !next_vector(&mut coeffs, height) {
            break;
        }
    }
    // The effective divisor on a place of least degree always qualifies.
    let min_place = places.iter().position(|pl| pl.degree() == d_min).expect("nonempty");
    let k = ceil_div(2 * g - 1, d_min).max(0);
    let mut effective = vec![0i64; places.len()];
    effective[min_place] = k;
    let effective_deg = k * d_min;
    if !candidates.iter().any(|(_, v)| *v == effective) {
        candidates.push((effective_deg, effective));
    }
    candidates.sort();

    let to_divisor = |v: &[i64]| Divisor::from_terms(places.iter().copied().zip(v.iter().copied()));
    for (deg, v) in &candidates {
        let divisor = to_divisor(v);
        if speciality_index(c, &divisor)? == 0 {
            let step = places.iter().map(Place::degree).fold(0, gcd_i64);
            let least_possible = ceil_div(lo, step) * step;
            let single_complete = places.len() == 1 && height * d_min >= hi;
            return Ok(MuResult {
                value: *deg,
                witness: divisor,
                exhaustive: *deg == least_possible || single_complete,
            });
        }
    }
    Err(Error::Internal(alloc::format!(
        "no divisor of degree {effective_deg} with vanishing speciality"
    )))
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i64(b, a % b)
    }
}

/// Odometer over `[-h, h]^n`; returns false after the last vector.
fn next_vector(v: &mut [i64], h: i64) -> bool {
    for x in v.iter_mut().rev() {
        if *x < h {
            *x += 1;
            return true;
        }
        *x = -h;
    }
    false
}

/// An element `y = c + Y d` of `GF(p)[X, Y]` with `v_P(x - y) >= -n_P` at
/// both places at infinity of a split model, where `d = n_+ inf+ + n_- inf-`.
///
/// When `i(d) = 0` such a `y` exists, so `deg_S(x - y) <= deg d`. It has
/// `v_P(y) >= min(v_P(x), -n_P)`, which bounds `deg c` and `deg d`; the
/// conditions on the Laurent coefficients of `x - y` in `w = 1/X` are linear.
/// Returns `None` when the system has no solution. The result is not
/// re-checked here; callers measure `deg_S(x - y)` themselves.
pub fn approximate_at_infinity<'c>(x: &FFElem<'c>, d: &Divisor) -> Result<Option<FFElem<'c>>> {
    let c = x.curve();
    let (kind, inf) = c.infinity_places()?;
    if kind != InfinityKind::Split {
        return Err(Error::UnsupportedModel("approximation needs split infinity"));
    }
    if d.support().any(|pl| !pl.is_infinite()) {
        return Err(Error::PlaceMismatch);
    }
    let p = c.p();
    let g = c.g();
    // -v_P(x) <= max(deg a, deg b + g + 1) at either place.
    let pole = x.a().degree().max(x.b().degree().shift(g + 1));
    let top = inf
        .iter()
        .map(|pl| d.coeff(pl))
        .chain(pole.finite())
        .max()
        .expect("two places");
    let layout = Layout::new(top, top - g - 1);
    let (nu, nv) = (layout.nu(), layout.nv());
    let cols = nu + nv + 1;
    let mut sys = FpMatrix::zeros(p, 0, cols);
    for place in &inf {
        let n = d.coeff(place);
        if -top >= -n {
            continue;
        }
        let xs = element_expansion(c, place, x.a(), x.b(), -n)?;
        // Y X^j needs coefficients of Y from -(g + 1) up to exponent -n - 1 + (nv - 1).
        let y = y_expansion(c, place, nv as i64 - n + g)?;
        for k in -top..-n {
            let mut row = vec![0u64; cols];
            if k <= 0 && ((-k) as usize) < nu {
                row[(-k) as usize] = 1;
            }
            for j in 0..nv {
                row[nu + j] = y.coeff(k + j as i64).expect("enough precision");
            }
            row[cols - 1] = (p - xs.coeff(k).expect("enough precision")) % p;
            sys.push_row(&row);
        }
    }
    let Some(sol) = sys.kernel().into_iter().find(|v| v[cols - 1] != 0) else {
        return Ok(None);
    };
    let scale = crate::algebra::FpElem::from_residue(sol[cols - 1], p)
        .inv()
        .ok_or(Error::DivisionByZero)?
        .value();
    let part = |range: core::ops::Range<usize>| {
        Poly::from_residues(p, sol[range].iter().map(|v| v * scale % p).collect())
    };
    Ok(Some(FFElem::from_polys(c, part(0..nu), part(nu..nu + nv))?))
}
