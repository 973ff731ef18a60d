//! Checks of the bounds on Euclidean minima, run on single curves or whole families.

use std::cmp::Ordering;
use std::ops::RangeInclusive;

use ffmin_core::algebra::{Poly, RatFun};
use ffmin_core::elements::{brute_force_min, euclidean_reduce, minimum, MinimumStatus};
use ffmin_core::riemannroch::{approximate_at_infinity, default_height, gap_sequence, mu};
use ffmin_core::semigroup::semigroup_gaps;
use ffmin_core::{CurveKind, CurveModel, Degree, Error as CoreError, FFElem, InfinityKind, Place};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::parse::CurveSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CheckId {
    Lemma1,
    Thm2,
    Prop3,
    Cor4,
    Cor5Semigroup,
    Cor6,
    Thm8,
    Thm9,
    Thm10,
    MuExcessSect4,
}

impl CheckId {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::Lemma1 => "LEMMA1",
            CheckId::Thm2 => "THM2",
            CheckId::Prop3 => "PROP3",
            CheckId::Cor4 => "COR4",
            CheckId::Cor5Semigroup => "COR5_SEMIGROUP",
            CheckId::Cor6 => "COR6",
            CheckId::Thm8 => "THM8",
            CheckId::Thm9 => "THM9",
            CheckId::Thm10 => "THM10",
            CheckId::MuExcessSect4 => "MU_EXCESS_SECT4",
        }
    }
}

/// One evaluated bound. Skipped checks carry `observed.status = "SKIPPED"`
/// and count as passed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub check_id: CheckId,
    pub curve: String,
    pub inputs: Value,
    pub observed: Value,
    pub bound: Value,
    pub passed: bool,
    pub witness: Option<Value>,
}

impl CheckOutcome {
    fn new(check_id: CheckId, curve: &str, inputs: Value, observed: Value, bound: Value, passed: bool) -> Self {
        Self {
            check_id,
            curve: curve.to_owned(),
            inputs,
            observed,
            bound,
            passed,
            witness: None,
        }
    }

    fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    fn skipped(check_id: CheckId, curve: &str, reason: &str) -> Self {
        Self::new(
            check_id,
            curve,
            json!({}),
            json!({ "status": "SKIPPED", "reason": reason }),
            Value::Null,
            true,
        )
    }

    fn errored(check_id: CheckId, curve: &str, err: &CoreError) -> Self {
        Self::new(check_id, curve, json!({}), json!({ "error": err.to_string() }), Value::Null, false)
    }

    pub fn is_skipped(&self) -> bool {
        self.observed.get("status").and_then(Value::as_str) == Some("SKIPPED")
    }

    fn sort_key(&self) -> (&'static str, String, String) {
        (self.check_id.as_str(), self.curve.clone(), self.inputs.to_string())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub outcomes: Vec<CheckOutcome>,
    pub summary: Summary,
    pub seed: u64,
    pub config: Value,
}

impl BoundsReport {
    pub fn new(mut outcomes: Vec<CheckOutcome>, seed: u64, config: Value) -> Self {
        outcomes.sort_by_cached_key(CheckOutcome::sort_key);
        let skipped = outcomes.iter().filter(|o| o.is_skipped()).count();
        let failed = outcomes.iter().filter(|o| !o.passed).count();
        let summary = Summary {
            total: outcomes.len(),
            passed: outcomes.len() - failed - skipped,
            failed,
            skipped,
        };
        Self {
            outcomes,
            summary,
            seed,
            config,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("untestable configuration: {0}")]
    Untestable(&'static str),
    #[error(transparent)]
    Core(#[from] CoreError),
}

type VResult<T> = Result<T, VerifyError>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Random elements per THM2 check.
    pub samples: usize,
    /// Pair limit for the brute-force confirmation in THM10 checks.
    pub brute_force_cap: u128,
    /// Restricts the per-curve checks to the places at infinity.
    pub light: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            samples: 200,
            brute_force_cap: ffmin_core::elements::BRUTE_FORCE_CAP,
            light: false,
        }
    }
}

impl VerifyConfig {
    pub fn family(seed: u64) -> Self {
        Self {
            seed,
            samples: 3,
            brute_force_cap: 1_000,
            light: true,
        }
    }
}

/// Polynomial counts above which a family degree is sampled instead of enumerated.
pub const FULL_ENUMERATION_LIMIT: u128 = 100_000;
/// Curves drawn per sampled degree.
pub const FAMILY_SAMPLE: usize = 100;

pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn degree_json(d: Degree) -> Value {
    match d {
        Degree::Finite(n) => json!(n),
        Degree::NegInf => json!("-inf"),
    }
}

fn element_json(x: &FFElem<'_>) -> Value {
    json!({ "a": x.a().to_string(), "b": x.b().to_string() })
}

fn places_json(s: &[Place]) -> Value {
    Value::Array(s.iter().map(|p| json!(p.to_string())).collect())
}

/// A random rational function with numerator and denominator degrees at most `max_deg`.
pub fn random_ratfun<R: Rng>(rng: &mut R, p: u64, max_deg: usize) -> RatFun {
    let nd = rng.random_range(0..=max_deg);
    let num: Vec<u64> = (0..=nd).map(|_| rng.random_range(0..p)).collect();
    let dd = rng.random_range(0..=max_deg);
    let mut den: Vec<u64> = (0..dd).map(|_| rng.random_range(0..p)).collect();
    den.push(1);
    RatFun::new(Poly::from_residues(p, num), Poly::from_residues(p, den)).expect("monic denominator")
}

pub fn random_element<'c, R: Rng>(c: &'c CurveModel, rng: &mut R, max_deg: usize) -> FFElem<'c> {
    let a = random_ratfun(rng, c.p(), max_deg);
    let b = random_ratfun(rng, c.p(), max_deg);
    FFElem::new(c, a, b).expect("hyperelliptic model")
}

/// `g - 1 <= mu(S) <= 2g - 1` for a set of rational places.
pub fn check_lemma1(c: &CurveModel, s: &[Place], curve: &str) -> VResult<CheckOutcome> {
    if s.iter().any(|p| !p.is_rational()) {
        return Err(VerifyError::Untestable("mu bounds need rational places"));
    }
    let g = c.g();
    let r = mu(c, s, default_height(c))?;
    let passed = g - 1 <= r.value && r.value < 2 * g;
    Ok(CheckOutcome::new(
        CheckId::Lemma1,
        curve,
        json!({ "S": places_json(s), "height": default_height(c) }),
        json!({ "mu": r.value, "exhaustive": r.exhaustive }),
        json!({ "lower": g - 1, "upper": 2 * g - 1 }),
        passed,
    )
    .with_witness(json!(r.witness.to_string())))
}

/// `mu(S) = 2 > 2g - 1` for the inert place at infinity of a genus one model.
pub fn check_mu_excess(c: &CurveModel, curve: &str) -> VResult<CheckOutcome> {
    if !c.is_hyperelliptic() || c.g() != 1 || c.infinity_kind()? != InfinityKind::Inert {
        return Err(VerifyError::Untestable("needs a genus one model with inert infinity"));
    }
    let r = mu(c, &[Place::InfInert], default_height(c))?;
    let passed = r.value == 2 && r.value > 2 * c.g() - 1;
    Ok(CheckOutcome::new(
        CheckId::MuExcessSect4,
        curve,
        json!({ "S": [Place::InfInert.to_string()] }),
        json!({ "mu": r.value }),
        json!({ "expected": 2, "two_g_minus_one": 2 * c.g() - 1 }),
        passed,
    )
    .with_witness(json!(r.witness.to_string())))
}

/// `min_y deg_S(x - y) <= mu(S)` for sampled `x`, with `S` the places at infinity.
pub fn check_theorem2(c: &CurveModel, samples: usize, rng: &mut ChaCha8Rng, curve: &str) -> VResult<CheckOutcome> {
    if !c.is_hyperelliptic() {
        return Err(VerifyError::Untestable("approximation sampling needs a hyperelliptic model"));
    }
    let (kind, s) = c.infinity_places()?;
    let r = mu(c, &s, default_height(c))?;
    let max_deg = (2 * c.g() + 3) as usize;
    let mut worst: Option<(Degree, FFElem<'_>)> = None;
    let mut unresolved = None;
    for _ in 0..samples {
        let x = random_element(c, rng, max_deg);
        let inner = match kind {
            InfinityKind::Split => match approximate_at_infinity(&x, &r.witness)? {
                Some(y) => x.sub(&y)?.deg_s()?,
                None => {
                    unresolved.get_or_insert(x);
                    continue;
                }
            },
            _ => euclidean_reduce(&x)?.value,
        };
        if worst.as_ref().is_none_or(|(d, _)| inner > *d) {
            worst = Some((inner, x));
        }
    }
    let observed_max = worst.as_ref().map_or(Degree::NegInf, |(d, _)| *d);
    let passed = unresolved.is_none() && observed_max <= Degree::Finite(r.value);
    let method = if kind == InfinityKind::Split { "approximation" } else { "reduction" };
    let mut out = CheckOutcome::new(
        CheckId::Thm2,
        curve,
        json!({ "S": places_json(&s), "samples": samples, "max_component_degree": max_deg, "inner_min": method }),
        json!({ "max_inner_min": degree_json(observed_max), "unresolved": unresolved.is_some() }),
        json!({ "mu": r.value }),
        passed,
    );
    if let Some(x) = unresolved.as_ref().or(worst.as_ref().map(|(_, x)| x)) {
        out = out.with_witness(element_json(x));
    }
    Ok(out)
}

/// Minimum at a single rational place against its largest gap (PROP3), plus COR4 and COR6 where they apply.
pub fn check_prop3_cor4_cor6(c: &CurveModel, place: &Place, curve: &str) -> VResult<Vec<CheckOutcome>> {
    let g = c.g();
    let gaps = gap_sequence(c, place)?.gaps;
    let mu_s = *gaps.last().expect("positive genus");
    let m = minimum(c, &[*place])?;
    let MinimumStatus::Exact(value) = m.status else {
        return Err(VerifyError::Untestable("minimum is not exact"));
    };
    let search = mu(c, &[*place], default_height(c))?.value;
    let w = m.witness.expect("single-place minima carry a witness");
    let pole = match ffmin_core::curve::valuation(c, place, &w)? {
        ffmin_core::Valuation::Finite(v) => -v,
        ffmin_core::Valuation::PosInf => i64::MIN,
    };
    // At a ramified infinity the inner minimum of the witness is computable exactly.
    let inner = if *place == Place::InfRamified {
        Some(euclidean_reduce(&w)?.value)
    } else {
        None
    };
    let passed = value == mu_s
        && value < 2 * g
        && search == mu_s
        && pole == mu_s
        && inner.is_none_or(|d| d == Degree::Finite(mu_s));
    let inputs = json!({ "place": place.to_string() });
    let mut out = vec![CheckOutcome::new(
        CheckId::Prop3,
        curve,
        inputs.clone(),
        json!({
            "minimum": value,
            "method": m.method.tag(),
            "mu_search": search,
            "witness_pole_order": pole,
            "witness_inner_min": inner.map(degree_json),
        }),
        // Both lower bounds in circulation are reported; only n_g < 2g is asserted.
        json!({ "mu_singleton": mu_s, "gaps": gaps, "range": [g, 2 * g - 1], "range_weak": [g - 1, 2 * g - 1] }),
        passed,
    )
    .with_witness(element_json(&w))];
    if c.is_hyperelliptic() && place.ramification() == 2 {
        out.push(CheckOutcome::new(
            CheckId::Cor4,
            curve,
            inputs.clone(),
            json!({ "minimum": value }),
            json!({ "two_g_minus_one": 2 * g - 1 }),
            value == 2 * g - 1,
        ));
    }
    if gaps.iter().copied().eq(1..=g) {
        out.push(CheckOutcome::new(
            CheckId::Cor6,
            curve,
            inputs,
            json!({ "minimum": value }),
            json!({ "g": g }),
            value == g,
        ));
    }
    Ok(out)
}

/// Exact `M(K)` with respect to the places at infinity, when available.
pub fn exact_minimum(c: &CurveModel) -> VResult<i64> {
    match c.kind() {
        CurveKind::Superelliptic(m) => {
            let s = semigroup_gaps(m as u64, c.deg_f() as u64)?;
            Ok(s.frobenius.map_or(-1, |f| f as i64))
        }
        CurveKind::Hyperelliptic => {
            let (kind, s) = c.infinity_places()?;
            if kind == InfinityKind::Split {
                return Err(VerifyError::Untestable("no exact minimum with split infinity"));
            }
            match minimum(c, &s)?.status {
                MinimumStatus::Exact(v) => Ok(v),
                MinimumStatus::UpperBound(_) => Err(VerifyError::Untestable("minimum is not exact")),
            }
        }
    }
}

fn equality_expected(c: &CurveModel) -> VResult<bool> {
    Ok(match c.kind() {
        CurveKind::Superelliptic(_) => true,
        CurveKind::Hyperelliptic => c.infinity_kind()? != InfinityKind::Split,
    })
}

/// `M(K) <= deg d_K - n` under tame ramification at infinity.
pub fn check_theorem8(c: &CurveModel, curve: &str) -> VResult<CheckOutcome> {
    theorem8(c, exact_minimum(c)?, curve)
}

fn theorem8(c: &CurveModel, m: i64, curve: &str) -> VResult<CheckOutcome> {
    if !c.is_tame_at_infinity() {
        return Err(VerifyError::Untestable("wild ramification at infinity"));
    }
    let disc = c.discriminant_degree()?;
    let n = c.cover_degree() as i64;
    let upper = disc - n;
    let expect_eq = equality_expected(c)?;
    Ok(CheckOutcome::new(
        CheckId::Thm8,
        curve,
        json!({ "n": n }),
        json!({ "M": m, "equality": m == upper }),
        json!({ "disc_degree": disc, "upper": upper, "equality_expected": expect_eq }),
        m <= upper && (!expect_eq || m == upper),
    ))
}

/// `(deg d_K - n - 1) / 2 <= M(K) <= deg d_K - n` when infinity is totally ramified.
pub fn check_theorem9(c: &CurveModel, curve: &str) -> VResult<CheckOutcome> {
    theorem9(c, exact_minimum(c)?, curve)
}

fn totally_ramified(c: &CurveModel) -> VResult<bool> {
    Ok(match c.kind() {
        CurveKind::Superelliptic(_) => true,
        CurveKind::Hyperelliptic => c.infinity_kind()? == InfinityKind::Ramified,
    })
}

fn theorem9(c: &CurveModel, m: i64, curve: &str) -> VResult<CheckOutcome> {
    if !totally_ramified(c)? {
        return Err(VerifyError::Untestable("infinity is not totally ramified"));
    }
    let n = c.cover_degree() as i64;
    if (n as u64).is_multiple_of(c.p()) {
        return Err(VerifyError::Untestable("p divides the degree"));
    }
    let disc = c.discriminant_degree()?;
    let twice_lower = disc - n - 1;
    let upper = disc - n;
    Ok(CheckOutcome::new(
        CheckId::Thm9,
        curve,
        json!({ "n": n }),
        json!({ "M": m, "equality": m == upper }),
        json!({ "lower": twice_lower.div_euclid(2) + twice_lower.rem_euclid(2), "upper": upper }),
        twice_lower <= 2 * m && m <= upper,
    ))
}

/// Largest `b <= g + 2` whose brute-force search stays within `cap` pairs.
pub fn feasible_bound(c: &CurveModel, cap: u128) -> Option<i64> {
    (0..=c.g() + 2).rev().find(|&b| {
        (c.p() as u128)
            .checked_pow(2 * (b as u32 + 1))
            .is_some_and(|size| size <= cap)
    })
}

/// `M(K) = 2g` for inert infinity, attained by `Y/X`.
pub fn check_theorem10(c: &CurveModel, brute_force_cap: u128, curve: &str) -> VResult<CheckOutcome> {
    if !c.is_hyperelliptic() || c.infinity_kind()? != InfinityKind::Inert {
        return Err(VerifyError::Untestable("needs inert infinity"));
    }
    let g = c.g();
    let p = c.p();
    let m = minimum(c, &[Place::InfInert])?;
    let y_over_x = FFElem::new(c, RatFun::zero(p), RatFun::new(Poly::one(p), Poly::monomial(1, 1, p))?)?;
    let reduced = euclidean_reduce(&y_over_x)?.value;
    let bound = feasible_bound(c, brute_force_cap);
    let brute = bound.map(|b| brute_force_min(&y_over_x, b, brute_force_cap)).transpose()?;
    let two_g = Degree::Finite(2 * g);
    let passed = m.status == MinimumStatus::Exact(2 * g) && reduced == two_g && brute.is_none_or(|d| d == two_g);
    Ok(CheckOutcome::new(
        CheckId::Thm10,
        curve,
        json!({ "brute_force_bound": bound }),
        json!({
            "minimum": m.status.value(),
            "method": m.method.tag(),
            "reduce_y_over_x": degree_json(reduced),
            "brute_force_y_over_x": brute.map(degree_json),
        }),
        json!({ "two_g": 2 * g }),
        passed,
    )
    .with_witness(element_json(&y_over_x)))
}

/// Largest gap of `<p, r>` against `2g - 1` for an Artin-Schreier descriptor `(p, r)`.
pub fn check_cor5_semigroup(p: u64, r: u64) -> VResult<CheckOutcome> {
    let s = semigroup_gaps(p, r)?;
    let g = s.genus as i64;
    let frob = s.frobenius.map_or(-1, |f| f as i64);
    Ok(CheckOutcome::new(
        CheckId::Cor5Semigroup,
        &format!("artin-schreier(p={p},r={r})"),
        json!({ "p": p, "r": r }),
        json!({ "frobenius": frob, "gap_count": s.gaps.len() }),
        json!({ "two_g_minus_one": 2 * g - 1, "genus": g }),
        frob == 2 * g - 1 && s.gaps.len() as i64 == g,
    ))
}

fn collect(out: &mut Vec<CheckOutcome>, id: CheckId, curve: &str, r: VResult<CheckOutcome>) {
    collect_many(out, id, curve, r.map(|o| vec![o]));
}

fn collect_many(out: &mut Vec<CheckOutcome>, id: CheckId, curve: &str, r: VResult<Vec<CheckOutcome>>) {
    match r {
        Ok(v) => out.extend(v),
        Err(VerifyError::Untestable(why)) => out.push(CheckOutcome::skipped(id, curve, why)),
        Err(VerifyError::Core(e)) => out.push(CheckOutcome::errored(id, curve, &e)),
    }
}

/// Every applicable check on one model; `stream` selects the random stream.
pub fn model_checks(c: &CurveModel, cfg: &VerifyConfig, stream: u64) -> Vec<CheckOutcome> {
    let curve = CurveSpec::from_poly(c.p(), c.f().clone(), c.cover_degree()).render();
    let curve = curve.as_str();
    let mut out = Vec::new();
    let exact = exact_minimum(c);
    let with_m = |f: fn(&CurveModel, i64, &str) -> VResult<CheckOutcome>| match &exact {
        Ok(m) => f(c, *m, curve),
        Err(e) => Err(e.clone()),
    };
    collect(&mut out, CheckId::Thm8, curve, with_m(theorem8));
    collect(&mut out, CheckId::Thm9, curve, with_m(theorem9));
    if !c.is_hyperelliptic() {
        return out;
    }
    let (kind, inf) = match c.infinity_places() {
        Ok(v) => v,
        Err(e) => {
            out.push(CheckOutcome::errored(CheckId::Thm2, curve, &e));
            return out;
        }
    };
    let mut rng = rng_for(cfg.seed, stream);
    collect(&mut out, CheckId::Thm2, curve, check_theorem2(c, cfg.samples, &mut rng, curve));
    match kind {
        InfinityKind::Ramified | InfinityKind::Split => {
            collect(&mut out, CheckId::Lemma1, curve, check_lemma1(c, &inf, curve));
            collect_many(&mut out, CheckId::Prop3, curve, check_prop3_cor4_cor6(c, &inf[0], curve));
        }
        InfinityKind::Inert => {
            collect(&mut out, CheckId::Thm10, curve, check_theorem10(c, cfg.brute_force_cap, curve));
            if c.g() == 1 {
                collect(&mut out, CheckId::MuExcessSect4, curve, check_mu_excess(c, curve));
            }
        }
    }
    if cfg.light {
        return out;
    }
    // Affine places: the auxiliary rational place and the first ramified one.
    let mut extra: Vec<Place> = Vec::new();
    if let Ok(q) = ffmin_core::elements::auxiliary_place(c, &inf[0]) {
        if q.is_rational() {
            extra.push(q);
        }
    }
    if let Ok(places) = c.rational_places() {
        if let Some(r) = places.into_iter().find(|p| matches!(p, Place::AffineRamified { .. })) {
            extra.push(r);
        }
    }
    extra.sort();
    extra.dedup();
    for place in &extra {
        collect_many(&mut out, CheckId::Prop3, curve, check_prop3_cor4_cor6(c, place, curve));
    }
    if let [first, ..] = extra[..] {
        let mut s = vec![first];
        s.extend(inf.iter().filter(|p| p.is_rational()));
        collect(&mut out, CheckId::Lemma1, curve, check_lemma1(c, &s, curve));
    }
    out
}

/// All checks on one curve.
pub fn verify_curve(spec: &CurveSpec, cfg: &VerifyConfig) -> BoundsReport {
    let c = spec.model();
    let outcomes = model_checks(&c, cfg, 0);
    let config = json!({
        "mode": "curve",
        "curve": spec.render(),
        "samples": cfg.samples,
        "brute_force_cap": cfg.brute_force_cap.to_string(),
    });
    BoundsReport::new(outcomes, cfg.seed, config)
}

/// Polynomial of degree `deg` number `idx`: leading coefficient `1 + idx mod (p - 1)`,
/// then the base-`p` digits of `idx / (p - 1)` from the constant term up.
fn family_member(p: u64, deg: u32, idx: u128) -> Poly {
    let mut coeffs = Vec::with_capacity(deg as usize + 1);
    let lc = 1 + (idx % (p as u128 - 1)) as u64;
    let mut rest = idx / (p as u128 - 1);
    for _ in 0..deg {
        coeffs.push((rest % p as u128) as u64);
        rest /= p as u128;
    }
    coeffs.push(lc);
    Poly::from_residues(p, coeffs)
}

/// Every squarefree `f` of each degree in `degrees` (a seeded sample above
/// [`FULL_ENUMERATION_LIMIT`]) run through [`model_checks`], plus the
/// Artin-Schreier semigroup checks for `(p, r)` with `r` in the range.
pub fn family_sweep(p: u64, degrees: RangeInclusive<u32>, cfg: &VerifyConfig) -> BoundsReport {
    let mut outcomes = Vec::new();
    let mut enumeration = serde_json::Map::new();
    for deg in degrees.clone() {
        if deg < 3 {
            continue;
        }
        let count = (p as u128 - 1).saturating_mul((p as u128).saturating_pow(deg));
        let indices: Vec<u128> = if count <= FULL_ENUMERATION_LIMIT {
            enumeration.insert(deg.to_string(), json!({ "mode": "full", "candidates": count as u64 }));
            (0..count).collect()
        } else {
            let mut rng = rng_for(cfg.seed, u64::MAX - deg as u64);
            let space = count.min(u64::MAX as u128) as u64;
            let mut picks: Vec<u128> = (0..FAMILY_SAMPLE)
                .map(|_| rng.random_range(0..space) as u128)
                .collect();
            picks.sort();
            picks.dedup();
            enumeration.insert(deg.to_string(), json!({ "mode": "sample", "candidates": picks.len() }));
            picks
        };
        let chunk: Vec<CheckOutcome> = indices
            .par_iter()
            .flat_map_iter(|&idx| {
                let f = family_member(p, deg, idx);
                match CurveModel::hyperelliptic(p, f) {
                    Ok(c) => model_checks(&c, cfg, ((deg as u64) << 40) | idx as u64),
                    Err(_) => Vec::new(),
                }
            })
            .collect();
        outcomes.extend(chunk);
    }
    for r in degrees.clone() {
        if r >= 2 && !(r as u64).is_multiple_of(p) {
            if let Ok(o) = check_cor5_semigroup(p, r as u64) {
                outcomes.push(o);
            }
        }
    }
    let config = json!({
        "mode": "family",
        "p": p,
        "deg": [degrees.start(), degrees.end()],
        "samples": cfg.samples,
        "brute_force_cap": cfg.brute_force_cap.to_string(),
        "enumeration": enumeration,
    });
    BoundsReport::new(outcomes, cfg.seed, config)
}

impl PartialOrd for CheckId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CheckId {
    fn cmp(&self, other: &Self) -> Ordering {
        self.as_str().cmp(other.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_curve;

    fn model(text: &str) -> CurveModel {
        parse_curve(text).unwrap().model()
    }

    #[test]
    fn lemma1_examples() {
        let c = model("y^2 = x^5 + 2*x + 1 over gf(7)");
        let o = check_lemma1(&c, &[Place::InfRamified], "c").unwrap();
        assert!(o.passed);
        assert_eq!(o.observed["mu"], 3);
        let e = model("y^2 = x^3 - x over gf(7)");
        let o = check_lemma1(&e, &[Place::InfRamified], "e").unwrap();
        assert_eq!(o.observed["mu"], 1);
        let w = [Place::AffineRamified { x: 0 }, Place::AffineRamified { x: 1 }];
        let o = check_lemma1(&e, &w, "e").unwrap();
        assert_eq!((o.observed["mu"].as_i64(), o.passed), (Some(0), true));
    }

    #[test]
    fn mu_excess_examples() {
        let c = model("y^2 = 3*x^4 + x + 1 over gf(7)");
        let o = check_mu_excess(&c, "c").unwrap();
        assert!(o.passed);
        assert_eq!(o.observed["mu"], 2);
        let c3 = model("y^2 = 2*x^4 + x + 2 over gf(3)");
        assert!(check_mu_excess(&c3, "c").unwrap().passed);
        let odd = model("y^2 = x^3 + x + 1 over gf(7)");
        assert!(matches!(check_mu_excess(&odd, "o"), Err(VerifyError::Untestable(_))));
    }

    #[test]
    fn theorem2_examples() {
        for text in [
            "y^2 = x^5 + 2*x + 1 over gf(7)",
            "y^2 = 3*x^6 + x + 2 over gf(7)",
            "y^2 = x^6 + 3*x + 1 over gf(7)",
        ] {
            let c = model(text);
            let mut rng = rng_for(1, 0);
            let o = check_theorem2(&c, 40, &mut rng, text).unwrap();
            assert!(o.passed, "{o:?}");
        }
    }

    #[test]
    fn prop3_examples() {
        let c = model("y^2 = x^5 + 2*x + 1 over gf(7)");
        let out = check_prop3_cor4_cor6(&c, &Place::InfRamified, "c").unwrap();
        assert_eq!(out.iter().map(|o| o.check_id).collect::<Vec<_>>(), [CheckId::Prop3, CheckId::Cor4]);
        assert!(out.iter().all(|o| o.passed));
        assert_eq!(out[0].observed["minimum"], 3);
        let e = model("y^2 = x^3 + x + 1 over gf(7)");
        let out = check_prop3_cor4_cor6(&e, &Place::AffineSplit { x: 0, y: 1 }, "e").unwrap();
        assert_eq!(out.iter().map(|o| o.check_id).collect::<Vec<_>>(), [CheckId::Prop3, CheckId::Cor6]);
        assert!(out.iter().all(|o| o.passed));
        let g3 = model("y^2 = x^7 + x^2 + 3 over gf(11)");
        let out = check_prop3_cor4_cor6(&g3, &Place::InfRamified, "g3").unwrap();
        assert_eq!(out[0].observed["minimum"], 5);
    }

    #[test]
    fn theorem8_9_examples() {
        let odd = model("y^2 = x^5 + 2*x + 1 over gf(7)");
        let o = check_theorem8(&odd, "o").unwrap();
        assert!(o.passed && o.observed["equality"] == true);
        let inert = model("y^2 = 3*x^6 + x + 2 over gf(7)");
        let o = check_theorem8(&inert, "i").unwrap();
        assert_eq!((o.observed["M"].as_i64(), o.passed), (Some(4), true));
        let sup = parse_curve("y^3 = x^4 + x + 1 over gf(7)").unwrap().model();
        let o = check_theorem8(&sup, "s").unwrap();
        assert_eq!((o.observed["M"].as_i64(), o.bound["upper"].as_i64(), o.passed), (Some(5), Some(5), true));
        let o = check_theorem9(&sup, "s").unwrap();
        assert_eq!((o.bound["lower"].as_i64(), o.passed), (Some(2), true));
        let o = check_theorem9(&odd, "o").unwrap();
        assert_eq!((o.bound["lower"].as_i64(), o.passed), (Some(1), true));
        let g3 = model("y^2 = x^7 + x^2 + 3 over gf(11)");
        let o = check_theorem9(&g3, "g3").unwrap();
        assert_eq!((o.bound["lower"].as_i64(), o.observed["M"].as_i64()), (Some(2), Some(5)));
        assert!(matches!(check_theorem9(&inert, "i"), Err(VerifyError::Untestable(_))));
    }

    #[test]
    fn theorem10_examples() {
        for (text, v) in [
            ("y^2 = 3*x^6 + x + 2 over gf(7)", 4),
            ("y^2 = 2*x^6 + x + 2 over gf(3)", 4),
            ("y^2 = 3*x^4 + x + 1 over gf(7)", 2),
        ] {
            let c = model(text);
            let o = check_theorem10(&c, 100_000, text).unwrap();
            assert!(o.passed, "{o:?}");
            assert_eq!(o.observed["minimum"], v);
        }
        let odd = model("y^2 = x^5 + 2*x + 1 over gf(7)");
        assert!(check_theorem10(&odd, 100, "o").is_err());
    }

    #[test]
    fn cor5_semigroup() {
        let o = check_cor5_semigroup(5, 3).unwrap();
        assert!(o.passed);
        assert_eq!(o.observed["frobenius"], 7);
    }

    #[test]
    fn family_members_cover_the_space() {
        let p = 3;
        let all: Vec<Poly> = (0..2 * 27).map(|i| family_member(p, 3, i)).collect();
        let mut dedup = all.clone();
        dedup.sort_by_key(|f| f.coeffs().to_vec());
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
        assert!(all.iter().all(|f| f.deg() == Some(3)));
    }

    #[test]
    fn empty_family() {
        #[allow(clippy::reversed_empty_ranges)]
        let r = family_sweep(5, 6..=5, &VerifyConfig::family(0));
        assert!(r.outcomes.is_empty());
        assert_eq!(r.summary.total, 0);
    }

    #[test]
    fn small_family_is_clean_and_deterministic() {
        let cfg = VerifyConfig::family(1);
        let a = family_sweep(3, 3..=4, &cfg);
        assert!(a.all_passed(), "{:?}", a.outcomes.iter().find(|o| !o.passed));
        assert!(a.summary.total > 0);
        assert_eq!(a, family_sweep(3, 3..=4, &cfg));
    }
}
