//! Rational functions over GF(p) in reduced form with a monic denominator.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::fp::inv_mod;
use super::poly::Poly;
use crate::degree::Degree;
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` monic. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        let p = num.modulus();
        if num.is_zero() {
            return Self {
                num,
                den: Poly::one(p),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if !den.is_monic() {
            let k = inv_mod(den.lc(), p);
            num = num.scale(k);
            den = den.scale(k);
        }
        Self { num, den }
    }

    pub fn from_poly(num: Poly) -> Self {
        let p = num.modulus();
        Self {
            num,
            den: Poly::one(p),
        }
    }

    pub fn zero(p: u64) -> Self {
        Self::from_poly(Poly::zero(p))
    }

    pub fn one(p: u64) -> Self {
        Self::from_poly(Poly::one(p))
    }

    pub fn constant(c: u64, p: u64) -> Self {
        Self::from_poly(Poly::constant(c, p))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn modulus(&self) -> u64 {
        self.num.modulus()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_constant()
    }

    /// `deg num - deg den`, or `-inf` for zero.
    pub fn degree(&self) -> Degree {
        match (self.num.deg(), self.den.deg()) {
            (Some(n), Some(d)) => Degree::Finite(n as i64 - d as i64),
            _ => Degree::NegInf,
        }
    }

    /// Order of vanishing at `X = x0`; `None` for zero.
    pub fn ord_at(&self, x0: u64) -> Option<i64> {
        let n = self.num.ord_at(x0)? as i64;
        let d = self.den.ord_at(x0).expect("den nonzero") as i64;
        Some(n - d)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &RatFun) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::reduce(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        Self {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Evaluation at `x0` when `x0` is not a pole.
    pub fn eval(&self, x0: u64) -> Option<u64> {
        let d = self.den.eval(x0);
        (d != 0).then(|| super::fp::mul_mod(self.num.eval(x0), inv_mod(d, self.modulus()), self.modulus()))
    }

    /// Splits into polynomial part and proper fraction (degree at most -1).
    pub fn proper_split(&self) -> (Poly, RatFun) {
        let (q, r) = self.num.divmod(&self.den).expect("den nonzero");
        // gcd(r, den) = gcd(num, den) = 1, so the remainder is already reduced.
        (
            q,
            Self {
                num: r,
                den: self.den.clone(),
            }
            .renormalized(),
        )
    }

    fn renormalized(self) -> Self {
        if self.num.is_zero() {
            Self::zero(self.modulus())
        } else {
            self
        }
    }
}

/// Free-function form of [`RatFun::degree`].
pub fn ratfun_deg(r: &RatFun) -> Degree {
    r.degree()
}

/// Free-function form of [`RatFun::proper_split`].
pub fn proper_split(r: &RatFun) -> (Poly, RatFun) {
    r.proper_split()
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.den == rhs.den {
            return RatFun::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RatFun::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl From<Poly> for RatFun {
    fn from(p: Poly) -> Self {
        RatFun::from_poly(p)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            return write!(f, "{}", self.num);
        }
        let wrap = |poly: &Poly| poly.coeffs().iter().filter(|&&c| c != 0).count() > 1;
        match (wrap(&self.num), wrap(&self.den)) {
            (true, true) => write!(f, "({})/({})", self.num, self.den),
            (true, false) => write!(f, "({})/{}", self.num, self.den),
            (false, true) => write!(f, "{}/({})", self.num, self.den),
            (false, false) => write!(f, "{}/{}", self.num, self.den),
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn px(c: &[i64]) -> Poly {
        Poly::from_i64(7, c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFun {
        RatFun::new(px(n), px(d)).unwrap()
    }

    #[test]
    fn degree_examples() {
        assert_eq!(rf(&[1, 0, 1], &[0, 1]).degree(), Degree::Finite(1));
        assert_eq!(rf(&[1], &[0, 1]).degree(), Degree::Finite(-1));
        assert_eq!(RatFun::zero(7).degree(), Degree::NegInf);
    }

    #[test]
    fn canonical_form() {
        // (2X - 2) / (2X^2 - 2) = 1 / (X + 1)
        let r = rf(&[-2, 2], &[-2, 0, 2]);
        assert_eq!(r.num(), &px(&[1]));
        assert_eq!(r.den(), &px(&[1, 1]));
        assert!(RatFun::new(px(&[1]), Poly::zero(7)).is_err());
    }

    #[test]
    fn proper_split_examples() {
        let (w, fr) = rf(&[1, 0, 1], &[0, 1]).proper_split();
        assert_eq!((w, fr), (px(&[0, 1]), rf(&[1], &[0, 1])));
        let (w, fr) = rf(&[1], &[0, 1]).proper_split();
        assert_eq!((w, fr), (Poly::zero(7), rf(&[1], &[0, 1])));
        // (X^3 + X + 1) / (X - 1) = X^2 + X + 2 + 3/(X - 1)
        let (w, fr) = rf(&[1, 1, 0, 1], &[-1, 1]).proper_split();
        assert_eq!((w, fr), (px(&[2, 1, 1]), rf(&[3], &[-1, 1])));
        let (w, fr) = RatFun::from_poly(px(&[1, 2])).proper_split();
        assert_eq!((w, fr), (px(&[1, 2]), RatFun::zero(7)));
    }

    #[test]
    fn ord_and_eval() {
        let r = rf(&[0, 0, 1], &[-1, 1]);
        assert_eq!(r.ord_at(0), Some(2));
        assert_eq!(r.ord_at(1), Some(-1));
        assert_eq!(r.eval(1), None);
        assert_eq!(r.eval(2), Some(4));
    }
}
