use ffmin_core::algebra::{FpMatrix, LaurentSeries, Poly, RatFun};
use ffmin_core::curve::valuation;
use ffmin_core::elements::{brute_force_min, euclidean_reduce, BRUTE_FORCE_CAP};
use ffmin_core::riemannroch::{ell, l_space};
use ffmin_core::{CurveModel, Degree, Divisor, FFElem, Place, Valuation};
use proptest::prelude::*;

const P: u64 = 7;

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(0..P, 0..=max_len).prop_map(|c| Poly::from_residues(P, c))
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = Poly> {
    poly(max_len).prop_filter("nonzero", |q| !q.is_zero())
}

fn ratfun(max_len: usize) -> impl Strategy<Value = RatFun> {
    (poly(max_len), nonzero_poly(max_len)).prop_map(|(n, d)| RatFun::new(n, d).unwrap())
}

fn odd_model() -> CurveModel {
    CurveModel::hyperelliptic(P, Poly::from_i64(P, &[1, 2, 0, 0, 0, 1])).unwrap()
}

fn inert_model() -> CurveModel {
    CurveModel::hyperelliptic(P, Poly::from_i64(P, &[2, 1, 0, 0, 0, 0, 3])).unwrap()
}

fn split_model() -> CurveModel {
    CurveModel::hyperelliptic(P, Poly::from_i64(P, &[1, 3, 0, 0, 0, 0, 1])).unwrap()
}

fn elem(c: &CurveModel, a: RatFun, b: RatFun) -> FFElem<'_> {
    FFElem::new(c, a, b).unwrap()
}

/// Any place of `c`: `x = p` selects the infinite places.
fn place_of(c: &CurveModel, x: u64, pick: usize) -> Place {
    let places = if x == c.p() {
        c.infinity_places().unwrap().1
    } else {
        c.affine_places(x).unwrap()
    };
    places[pick % places.len()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn divmod_identity(a in poly(8), b in nonzero_poly(5)) {
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(6), b in nonzero_poly(6)) {
        let g = a.gcd(&b);
        prop_assert!(g.is_monic());
        prop_assert!(a.rem(&g).unwrap().is_zero());
        prop_assert!(b.rem(&g).unwrap().is_zero());
    }

    #[test]
    fn ratfun_degree_axioms(r in ratfun(5), s in ratfun(5)) {
        prop_assert_eq!((&r * &s).degree(), r.degree() + s.degree());
        prop_assert!((&r + &s).degree() <= r.degree().max(s.degree()));
    }

    #[test]
    fn proper_split_recombines(r in ratfun(6)) {
        let (whole, frac) = r.proper_split();
        prop_assert_eq!(&RatFun::from_poly(whole) + &frac, r);
        prop_assert!(frac.degree() < Degree::Finite(0));
    }

    #[test]
    fn series_sqrt_squares_back(c in prop::collection::vec(0..P, 1..8), lead in -3i64..3) {
        // Leading coefficient 2 = 3^2 mod 7.
        let mut coeffs = c;
        coeffs[0] = 2;
        let prec = 2 * lead + coeffs.len() as i64;
        let s = LaurentSeries::new(P, 2 * lead, coeffs, prec);
        let root = s.sqrt(prec).unwrap();
        let back = root.mul(&root);
        for e in 2 * lead..back.precision().min(prec) {
            prop_assert_eq!(back.coeff(e), s.coeff(e));
        }
    }

    #[test]
    fn kernel_is_annihilated(rows in prop::collection::vec(prop::collection::vec(-3i64..4, 5), 1..5)) {
        let m = FpMatrix::from_rows(P, &rows);
        let ker = m.kernel();
        prop_assert_eq!(ker.len(), m.cols() - m.rank());
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn norm_is_multiplicative(a in ratfun(4), b in ratfun(4), c2 in ratfun(4), d in ratfun(4)) {
        let c = inert_model();
        let x = elem(&c, a, b);
        let y = elem(&c, c2, d);
        prop_assert_eq!(x.mul(&y).unwrap().norm(), &x.norm() * &y.norm());
    }

    #[test]
    fn deg_s_axioms(which in 0usize..3, a in ratfun(4), b in ratfun(4), c2 in ratfun(4), d in ratfun(4)) {
        let c = [odd_model(), inert_model(), split_model()][which].clone();
        let x = elem(&c, a, b);
        let y = elem(&c, c2, d);
        let dx = x.deg_s().unwrap();
        let dy = y.deg_s().unwrap();
        prop_assert_eq!(x.mul(&y).unwrap().deg_s().unwrap(), dx + dy);
        prop_assert!(x.add(&y).unwrap().deg_s().unwrap() <= dx.max(dy));
    }

    #[test]
    fn product_formula(which in 0usize..3, roots in prop::collection::vec((0..P, -3i64..4), 1..4), lc in 1..P) {
        let c = [odd_model(), inert_model(), split_model()][which].clone();
        let mut num = Poly::constant(lc, P);
        let mut den = Poly::one(P);
        for &(x0, e) in &roots {
            let lin = Poly::linear(x0, P).pow(e.unsigned_abs() as u32);
            if e >= 0 { num = &num * &lin; } else { den = &den * &lin; }
        }
        let r = RatFun::new(num, den).unwrap();
        let x = elem(&c, r, RatFun::zero(P));
        let mut xs: Vec<u64> = roots.iter().map(|&(x0, _)| x0).collect();
        xs.sort();
        xs.dedup();
        let mut places = c.infinity_places().unwrap().1;
        for x0 in xs {
            places.extend(c.affine_places(x0).unwrap());
        }
        let mut total = 0;
        for pl in &places {
            match valuation(&c, pl, &x).unwrap() {
                Valuation::Finite(v) => total += v * pl.degree(),
                Valuation::PosInf => prop_assert!(false, "nonzero element"),
            }
        }
        prop_assert_eq!(total, 0);
    }

    #[test]
    fn riemann_roch(terms in prop::collection::vec((0..=P, 0usize..2, -3i64..4), 0..4)) {
        let c = odd_model();
        let d = Divisor::from_terms(terms.iter().map(|&(x, pick, n)| (place_of(&c, x, pick), n)));
        let w = c.canonical_divisor().unwrap();
        let l = ell(&c, &d).unwrap() as i64;
        let dual = ell(&c, &(&w - &d)).unwrap() as i64;
        prop_assert_eq!(l - dual, d.degree() + 1 - c.g());
        if d.degree() < 0 {
            prop_assert_eq!(l, 0);
        }
        for x in l_space(&c, &d).unwrap().functions {
            for (pl, n) in d.terms() {
                prop_assert!(valuation(&c, pl, &x).unwrap() >= Valuation::Finite(-n));
            }
        }
    }

    #[test]
    fn split_riemann_roch(terms in prop::collection::vec((0..=P, 0usize..2, -2i64..4), 0..4)) {
        let c = split_model();
        let d = Divisor::from_terms(terms.iter().map(|&(x, pick, n)| (place_of(&c, x, pick), n)));
        let l = ell(&c, &d).unwrap() as i64;
        let g = c.g();
        prop_assert!(l >= d.degree() + 1 - g);
        if d.degree() < 0 {
            prop_assert_eq!(l, 0);
        }
        if d.degree() >= 2 * g - 1 {
            prop_assert_eq!(l, d.degree() + 1 - g);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reduce_matches_brute_force(
        inert in any::<bool>(),
        na in prop::collection::vec(0u64..3, 0..3),
        da in prop::collection::vec(0u64..3, 1..3),
        nb in prop::collection::vec(0u64..3, 0..3),
        db in prop::collection::vec(0u64..3, 1..3),
    ) {
        let p = 3;
        // 2 is not a square mod 3
        let f: &[i64] = if inert { &[2, 1, 0, 0, 2] } else { &[1, 2, 0, 1] };
        let c = CurveModel::hyperelliptic(p, Poly::from_i64(p, f)).unwrap();
        let den = |v: Vec<u64>| {
            let q = Poly::from_residues(p, v);
            if q.is_zero() { Poly::one(p) } else { q }
        };
        let a = RatFun::new(Poly::from_residues(p, na), den(da)).unwrap();
        let b = RatFun::new(Poly::from_residues(p, nb), den(db)).unwrap();
        let x = FFElem::new(&c, a, b).unwrap();
        let top = x.a().degree().max(x.b().degree()).finite().unwrap_or(0).max(0);
        let bound = top + c.g() + 2;
        let reduced = euclidean_reduce(&x).unwrap().value;
        prop_assert_eq!(brute_force_min(&x, bound, BRUTE_FORCE_CAP).unwrap(), reduced);
    }
}
