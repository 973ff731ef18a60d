//! Closed places of a hyperelliptic curve and divisors supported on them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Neg, Sub};

/// Which of the two branches at a split place at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

/// A closed point of `Y^2 = f(X)` over GF(p).
///
/// Affine places lie over a rational `X = x`; the inert variants have
/// residue degree 2, everything else is rational.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Place {
    AffineSplit { x: u64, y: u64 },
    AffineRamified { x: u64 },
    AffineInert { x: u64 },
    InfRamified,
    InfSplit(Sign),
    InfInert,
}

impl Place {
    pub fn degree(&self) -> i64 {
        match self {
            Place::AffineInert { .. } | Place::InfInert => 2,
            _ => 1,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Place::InfRamified | Place::InfSplit(_) | Place::InfInert)
    }

    /// The `X`-coordinate of an affine place.
    pub fn x(&self) -> Option<u64> {
        match *self {
            Place::AffineSplit { x, .. } | Place::AffineRamified { x } | Place::AffineInert { x } => Some(x),
            _ => None,
        }
    }

    /// Ramification index over the `X`-line.
    pub fn ramification(&self) -> i64 {
        match self {
            Place::AffineRamified { .. } | Place::InfRamified => 2,
            _ => 1,
        }
    }

    /// Row ordering: affine places by `(x, variant, y)`, infinite places last.
    fn sort_key(&self) -> (u8, u64, u8, u64) {
        match *self {
            Place::AffineSplit { x, y } => (0, x, 0, y),
            Place::AffineRamified { x } => (0, x, 1, 0),
            Place::AffineInert { x } => (0, x, 2, 0),
            Place::InfRamified => (1, 0, 0, 0),
            Place::InfSplit(Sign::Plus) => (1, 0, 1, 0),
            Place::InfSplit(Sign::Minus) => (1, 0, 1, 1),
            Place::InfInert => (1, 0, 2, 0),
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Place {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::AffineSplit { x, y } => write!(f, "(x={x},y={y})"),
            Place::AffineRamified { x } => write!(f, "(x={x},ram)"),
            Place::AffineInert { x } => write!(f, "(x={x},inert)"),
            Place::InfRamified => f.write_str("inf"),
            Place::InfSplit(Sign::Plus) => f.write_str("inf+"),
            Place::InfSplit(Sign::Minus) => f.write_str("inf-"),
            Place::InfInert => f.write_str("inf(inert)"),
        }
    }
}

/// A finite integer combination of places. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Divisor {
    coeffs: BTreeMap<Place, i64>,
}

impl Divisor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(place: Place, n: i64) -> Self {
        let mut d = Self::zero();
        d.add_at(place, n);
        d
    }

    pub fn from_terms<I: IntoIterator<Item = (Place, i64)>>(terms: I) -> Self {
        let mut d = Self::zero();
        for (place, n) in terms {
            d.add_at(place, n);
        }
        d
    }

    /// Adds `n * place`.
    pub fn add_at(&mut self, place: Place, n: i64) {
        let entry = self.coeffs.entry(place).or_insert(0);
        *entry += n;
        if *entry == 0 {
            self.coeffs.remove(&place);
        }
    }

    pub fn coeff(&self, place: &Place) -> i64 {
        self.coeffs.get(place).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.iter().map(|(p, n)| n * p.degree()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|&n| n > 0)
    }

    /// Largest absolute coefficient.
    pub fn height(&self) -> i64 {
        self.coeffs.values().map(|n| n.abs()).max().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = &Place> {
        self.coeffs.keys()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Place, i64)> {
        self.coeffs.iter().map(|(p, &n)| (p, n))
    }

    /// Distinct affine `X`-coordinates in the support, ascending.
    pub fn affine_xs(&self) -> Vec<u64> {
        let mut xs: Vec<u64> = self.coeffs.keys().filter_map(Place::x).collect();
        xs.dedup();
        xs
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(p, n)| (*p, n * k)))
    }
}

impl Add for &Divisor {
    type Output = Divisor;
    fn add(self, rhs: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (p, n) in rhs.terms() {
            out.add_at(*p, n);
        }
        out
    }
}

impl Sub for &Divisor {
    type Output = Divisor;
    fn sub(self, rhs: &Divisor) -> Divisor {
        self + &(-rhs)
    }
}

impl Neg for &Divisor {
    type Output = Divisor;
    fn neg(self) -> Divisor {
        self.scale(-1)
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (place, n)) in self.terms().enumerate() {
            match (i, n) {
                (0, 1) => write!(f, "{place}")?,
                (0, -1) => write!(f, "-{place}")?,
                (0, n) => write!(f, "{n}*{place}")?,
                (_, 1) => write!(f, " + {place}")?,
                (_, -1) => write!(f, " - {place}")?,
                (_, n) if n < 0 => write!(f, " - {}*{place}", -n)?,
                (_, n) => write!(f, " + {n}*{place}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn ordering_puts_infinity_last() {
        let mut places = alloc::vec![
            Place::InfSplit(Sign::Minus),
            Place::AffineInert { x: 1 },
            Place::InfSplit(Sign::Plus),
            Place::AffineSplit { x: 1, y: 3 },
            Place::AffineRamified { x: 0 },
        ];
        places.sort();
        assert_eq!(
            places,
            [
                Place::AffineRamified { x: 0 },
                Place::AffineSplit { x: 1, y: 3 },
                Place::AffineInert { x: 1 },
                Place::InfSplit(Sign::Plus),
                Place::InfSplit(Sign::Minus),
            ]
        );
    }

    #[test]
    fn divisor_arithmetic() {
        let p = Place::AffineRamified { x: 0 };
        let d = Divisor::from_terms([(p, 2), (Place::InfInert, -1), (p, -2)]);
        assert_eq!(d, Divisor::single(Place::InfInert, -1));
        assert_eq!(d.degree(), -2);
        let e = &d + &Divisor::single(Place::InfInert, 1);
        assert!(e.is_zero());
        assert_eq!(Divisor::single(p, 3).to_string(), "3*(x=0,ram)");
    }
}
