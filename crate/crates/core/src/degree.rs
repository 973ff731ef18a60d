//! Degrees that may be `-inf` and valuations that may be `+inf`.

use core::fmt;
use core::ops::Add;

/// An integer degree or the sentinel `-inf` attached to zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    NegInf,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }

    pub fn is_neg_inf(self) -> bool {
        matches!(self, Degree::NegInf)
    }

    /// `self` scaled by a positive integer; `-inf` stays `-inf`.
    pub fn scale(self, k: i64) -> Degree {
        debug_assert!(k > 0);
        match self {
            Degree::NegInf => Degree::NegInf,
            Degree::Finite(d) => Degree::Finite(d * k),
        }
    }

    /// `self + k` for a finite shift.
    pub fn shift(self, k: i64) -> Degree {
        match self {
            Degree::NegInf => Degree::NegInf,
            Degree::Finite(d) => Degree::Finite(d + k),
        }
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInf,
        }
    }
}

impl From<i64> for Degree {
    fn from(d: i64) -> Self {
        Degree::Finite(d)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A discrete valuation value; `+inf` only for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    PosInf,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::PosInf => None,
        }
    }

    /// The degree `-v`, mapping `+inf` to `-inf`.
    pub fn negated(self) -> Degree {
        match self {
            Valuation::Finite(v) => Degree::Finite(-v),
            Valuation::PosInf => Degree::NegInf,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::PosInf => f.write_str("+inf"),
            Valuation::Finite(v) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neg_inf_is_least() {
        assert!(Degree::NegInf < Degree::Finite(i64::MIN));
        assert_eq!(Degree::Finite(3).max(Degree::NegInf), Degree::Finite(3));
        assert_eq!(Degree::NegInf + Degree::Finite(2), Degree::NegInf);
        assert_eq!(Valuation::PosInf.negated(), Degree::NegInf);
        assert!(Valuation::Finite(i64::MAX) < Valuation::PosInf);
    }
}
