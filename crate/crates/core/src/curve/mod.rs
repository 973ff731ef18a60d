//! Curve models `Y^2 = f(X)` (and superelliptic descriptors `Y^m = f(X)`),
//! their places, valuations and discriminant data.

mod local;
mod place;

use alloc::vec;
use alloc::vec::Vec;

pub use local::{valuation, y_expansion};
pub(crate) use local::element_expansion;
pub use place::{Divisor, Place, Sign};

use crate::algebra::fp::{self, sqrt_mod};
use crate::algebra::{discriminant_in_t, Poly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurveKind {
    Hyperelliptic,
    /// `Y^m = f` with `gcd(m, deg f) = 1`; supports genus, discriminant and
    /// semigroup computations only.
    Superelliptic(u32),
}

/// Splitting of the place at infinity of GF(p)(X).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InfinityKind {
    Ramified,
    Split,
    Inert,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveModel {
    p: u64,
    f: Poly,
    kind: CurveKind,
    genus: usize,
}

impl CurveModel {
    /// Validates and builds a model.
    pub fn new(p: u64, f: Poly, kind: CurveKind) -> Result<Self> {
        assert_eq!(f.modulus(), p, "f is defined over a different field");
        let d = f.deg().unwrap_or(0);
        let genus = match kind {
            CurveKind::Hyperelliptic => {
                fp::check_modulus(p)?;
                if d < 3 {
                    return Err(Error::DegreeTooSmall(d));
                }
                (d - 1) / 2
            }
            CurveKind::Superelliptic(m) => {
                if p > fp::MAX_MODULUS || !fp::is_prime(p) {
                    return Err(Error::InvalidModulus(p));
                }
                let m = m as usize;
                if m < 2 {
                    return Err(Error::Superelliptic("m must be at least 2"));
                }
                if (m as u64).is_multiple_of(p) {
                    return Err(Error::Superelliptic("p divides m"));
                }
                if d < 2 {
                    return Err(Error::DegreeTooSmall(d));
                }
                if gcd(m as u64, d as u64) != 1 {
                    return Err(Error::Superelliptic("gcd(m, deg f) must be 1"));
                }
                (m - 1) * (d - 1) / 2
            }
        };
        if !f.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        Ok(Self { p, f, kind, genus })
    }

    pub fn hyperelliptic(p: u64, f: Poly) -> Result<Self> {
        Self::new(p, f, CurveKind::Hyperelliptic)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    /// Degree `m` of the cover `(X, Y) -> X`.
    pub fn cover_degree(&self) -> u32 {
        match self.kind {
            CurveKind::Hyperelliptic => 2,
            CurveKind::Superelliptic(m) => m,
        }
    }

    pub fn deg_f(&self) -> usize {
        self.f.deg().expect("f nonzero")
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn g(&self) -> i64 {
        self.genus as i64
    }

    pub fn is_hyperelliptic(&self) -> bool {
        self.kind == CurveKind::Hyperelliptic
    }

    pub(crate) fn require_hyperelliptic(&self) -> Result<()> {
        if self.is_hyperelliptic() {
            Ok(())
        } else {
            Err(Error::UnsupportedModel("superelliptic models carry no places"))
        }
    }

    pub fn infinity_kind(&self) -> Result<InfinityKind> {
        self.require_hyperelliptic()?;
        Ok(if self.deg_f() % 2 == 1 {
            InfinityKind::Ramified
        } else if fp::is_square_mod(self.f.lc(), self.p) {
            InfinityKind::Split
        } else {
            InfinityKind::Inert
        })
    }

    /// The places over `X = infinity`.
    pub fn infinity_places(&self) -> Result<(InfinityKind, Vec<Place>)> {
        let kind = self.infinity_kind()?;
        let places = match kind {
            InfinityKind::Ramified => vec![Place::InfRamified],
            InfinityKind::Split => vec![Place::InfSplit(Sign::Plus), Place::InfSplit(Sign::Minus)],
            InfinityKind::Inert => vec![Place::InfInert],
        };
        Ok((kind, places))
    }

    /// The places over a rational `X = x0`.
    pub fn affine_places(&self, x0: u64) -> Result<Vec<Place>> {
        self.require_hyperelliptic()?;
        let x = x0 % self.p;
        let v = self.f.eval(x);
        Ok(if v == 0 {
            vec![Place::AffineRamified { x }]
        } else if let Some(y) = sqrt_mod(v, self.p) {
            vec![
                Place::AffineSplit { x, y },
                Place::AffineSplit { x, y: self.p - y },
            ]
        } else {
            vec![Place::AffineInert { x }]
        })
    }

    /// Every rational place of the curve: affine points, then infinity.
    pub fn rational_places(&self) -> Result<Vec<Place>> {
        let mut out = Vec::new();
        for x in 0..self.p {
            out.extend(self.affine_places(x)?.into_iter().filter(Place::is_rational));
        }
        out.extend(self.infinity_places()?.1.into_iter().filter(Place::is_rational));
        Ok(out)
    }

    /// Whether `place` is a place of this curve.
    pub fn has_place(&self, place: &Place) -> bool {
        if !self.is_hyperelliptic() {
            return false;
        }
        match *place {
            Place::AffineSplit { x, y } => {
                x < self.p && y < self.p && y != 0 && self.f.eval(x) == y * y % self.p
            }
            Place::AffineRamified { x } => x < self.p && self.f.eval(x) == 0,
            Place::AffineInert { x } => {
                x < self.p && !fp::is_square_mod(self.f.eval(x), self.p)
            }
            Place::InfRamified => self.infinity_kind() == Ok(InfinityKind::Ramified),
            Place::InfSplit(_) => self.infinity_kind() == Ok(InfinityKind::Split),
            Place::InfInert => self.infinity_kind() == Ok(InfinityKind::Inert),
        }
    }

    pub(crate) fn check_place(&self, place: &Place) -> Result<()> {
        self.require_hyperelliptic()?;
        if self.has_place(place) {
            Ok(())
        } else {
            Err(Error::PlaceMismatch)
        }
    }

    pub(crate) fn check_divisor(&self, d: &Divisor) -> Result<()> {
        d.support().try_for_each(|p| self.check_place(p))
    }

    /// `div(dX / Y) = (2g - 2) * inf` on a model with ramified infinity.
    pub fn canonical_divisor(&self) -> Result<Divisor> {
        if self.infinity_kind()? != InfinityKind::Ramified {
            return Err(Error::UnsupportedModel("canonical divisor needs ramified infinity"));
        }
        let w = Divisor::single(Place::InfRamified, 2 * self.g() - 2);
        if w.degree() != 2 * self.g() - 2 {
            return Err(Error::Internal("canonical divisor degree".into()));
        }
        Ok(w)
    }

    /// Minimal polynomial `T^m - f` of `Y`, coefficients lowest first.
    pub fn minimal_polynomial(&self) -> Vec<Poly> {
        let m = self.cover_degree() as usize;
        let mut coeffs = vec![Poly::zero(self.p); m + 1];
        coeffs[0] = -&self.f;
        coeffs[m] = Poly::one(self.p);
        coeffs
    }

    /// Degree of the discriminant of `T^m - f` over GF(p)[X].
    pub fn discriminant_degree(&self) -> Result<i64> {
        let disc = discriminant_in_t(&self.minimal_polynomial())?;
        disc.deg()
            .map(|d| d as i64)
            .ok_or_else(|| Error::Internal("vanishing discriminant".into()))
    }

    /// Whether every ramification index above infinity is prime to `p`.
    pub fn is_tame_at_infinity(&self) -> bool {
        let m = self.cover_degree() as u64;
        let d = self.deg_f() as u64;
        // Above infinity the indices are m / gcd(m, deg f).
        let e = m / gcd(m, d);
        !e.is_multiple_of(self.p)
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Free-function form of [`CurveModel::new`].
pub fn make_curve(p: u64, f: Poly, kind: CurveKind) -> Result<CurveModel> {
    CurveModel::new(p, f, kind)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn px(p: u64, c: &[i64]) -> Poly {
        Poly::from_i64(p, c)
    }

    fn hyper(p: u64, c: &[i64]) -> CurveModel {
        CurveModel::hyperelliptic(p, px(p, c)).unwrap()
    }

    #[test]
    fn construction() {
        let c = hyper(7, &[1, 2, 0, 0, 0, 1]);
        assert_eq!(c.genus(), 2);
        assert_eq!(c.infinity_kind(), Ok(InfinityKind::Ramified));
        let c = hyper(7, &[2, 1, 0, 0, 0, 0, 3]);
        assert_eq!(c.genus(), 2);
        assert_eq!(c.infinity_kind(), Ok(InfinityKind::Inert));
        assert_eq!(
            CurveModel::hyperelliptic(7, px(7, &[0, 0, 0, 0, 1])),
            Err(Error::NotSquarefree)
        );
        assert_eq!(
            CurveModel::hyperelliptic(2, px(2, &[1, 1, 0, 1])),
            Err(Error::EvenCharacteristic)
        );
    }

    #[test]
    fn genus_formulas() {
        assert_eq!(hyper(7, &[1, 2, 0, 0, 0, 1]).genus(), 2);
        assert_eq!(hyper(7, &[1, 0, 0, 0, 0, 0, 1]).genus(), 2);
        let s = CurveModel::new(7, px(7, &[1, 1, 0, 0, 1]), CurveKind::Superelliptic(3)).unwrap();
        assert_eq!(s.genus(), 3);
        assert!(CurveModel::new(7, px(7, &[1, 1, 0, 1]), CurveKind::Superelliptic(3)).is_err());
        assert!(CurveModel::new(3, px(3, &[1, 1, 0, 0, 1]), CurveKind::Superelliptic(3)).is_err());
    }

    #[test]
    fn infinity() {
        let (k, pl) = hyper(7, &[1, 2, 0, 0, 0, 1]).infinity_places().unwrap();
        assert_eq!((k, pl.len()), (InfinityKind::Ramified, 1));
        let (k, pl) = hyper(7, &[1, 0, 0, 0, 0, 0, 1]).infinity_places().unwrap();
        assert_eq!((k, pl.len()), (InfinityKind::Split, 2));
        let (k, pl) = hyper(7, &[1, 0, 0, 0, 0, 0, 3]).infinity_places().unwrap();
        assert_eq!((k, pl.len(), pl[0].degree()), (InfinityKind::Inert, 1, 2));
        for c in [&[1i64, 2, 0, 0, 0, 1][..], &[1, 0, 0, 0, 0, 0, 1], &[1, 0, 0, 0, 0, 0, 3]] {
            let places = hyper(7, c).infinity_places().unwrap().1;
            assert_eq!(places.iter().map(|p| p.degree() * p.ramification()).sum::<i64>(), 2);
        }
    }

    #[test]
    fn affine() {
        let c = hyper(7, &[0, -1, 0, 1]);
        assert_eq!(c.affine_places(0).unwrap(), [Place::AffineRamified { x: 0 }]);
        let c = hyper(7, &[1, 0, 0, 1]);
        assert_eq!(
            c.affine_places(1).unwrap(),
            [Place::AffineSplit { x: 1, y: 3 }, Place::AffineSplit { x: 1, y: 4 }]
        );
        let c = hyper(7, &[1, 1, 0, 1]);
        assert_eq!(
            c.affine_places(0).unwrap(),
            [Place::AffineSplit { x: 0, y: 1 }, Place::AffineSplit { x: 0, y: 6 }]
        );
        // f(2) = 11 = 4 mod 7 is a square; f(3) = 31 = 3 mod 7 is not
        assert_eq!(c.affine_places(3).unwrap(), [Place::AffineInert { x: 3 }]);
        assert!(c.has_place(&Place::AffineInert { x: 3 }));
        assert!(!c.has_place(&Place::AffineInert { x: 2 }));
        assert!(!c.has_place(&Place::InfInert));
    }

    #[test]
    fn canonical() {
        assert!(hyper(7, &[1, 1, 0, 1]).canonical_divisor().unwrap().is_zero());
        assert_eq!(
            hyper(7, &[1, 2, 0, 0, 0, 1]).canonical_divisor().unwrap(),
            Divisor::single(Place::InfRamified, 2)
        );
        assert_eq!(
            hyper(7, &[1, 1, 0, 0, 0, 0, 0, 1]).canonical_divisor().unwrap().degree(),
            4
        );
        assert!(hyper(7, &[1, 0, 0, 0, 0, 0, 3]).canonical_divisor().is_err());
    }

    #[test]
    fn discriminant_and_tameness() {
        assert_eq!(hyper(7, &[1, 2, 0, 0, 0, 1]).discriminant_degree(), Ok(5));
        assert_eq!(hyper(7, &[2, 1, 0, 0, 0, 0, 3]).discriminant_degree(), Ok(6));
        let s = CurveModel::new(7, px(7, &[1, 1, 0, 0, 1]), CurveKind::Superelliptic(3)).unwrap();
        assert_eq!(s.discriminant_degree(), Ok(8));
        assert!(s.is_tame_at_infinity());
        assert!(hyper(7, &[1, 2, 0, 0, 0, 1]).is_tame_at_infinity());
    }

    #[test]
    fn hurwitz_bookkeeping() {
        // deg B = deg d_K + (m - 1) when infinity is totally ramified; 2g - 2 = deg B - 2m.
        let models = [
            hyper(7, &[1, 2, 0, 0, 0, 1]),
            hyper(5, &[1, 1, 0, 1]),
            hyper(11, &[3, 0, 1, 0, 0, 0, 0, 1]),
            CurveModel::new(7, px(7, &[1, 1, 0, 0, 1]), CurveKind::Superelliptic(3)).unwrap(),
            CurveModel::new(11, px(11, &[2, 0, 1, 0, 0, 1]), CurveKind::Superelliptic(4)).unwrap(),
        ];
        for c in &models {
            let m = c.cover_degree() as i64;
            let branch = c.discriminant_degree().unwrap() + (m - 1);
            assert_eq!(branch - 2 * m, 2 * c.g() - 2, "{c:?}");
        }
    }
}
