//! Dense univariate polynomials over GF(p).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::fp::{add_mod, from_i64, inv_mod, mul_mod, neg_mod, sub_mod, FpElem};
use crate::degree::Degree;
use crate::error::{Error, Result};

/// A polynomial over GF(p), coefficients lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    p: u64,
    coeffs: Vec<u64>,
}

impl Poly {
    /// Builds a polynomial from residues already reduced mod `p`.
    pub fn from_residues(p: u64, coeffs: Vec<u64>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < p));
        let mut poly = Self { p, coeffs };
        poly.normalize();
        poly
    }

    /// Builds a polynomial from signed integer coefficients, lowest first.
    pub fn from_i64(p: u64, coeffs: &[i64]) -> Self {
        Self::from_residues(p, coeffs.iter().map(|&c| from_i64(c, p)).collect())
    }

    pub fn zero(p: u64) -> Self {
        Self { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::constant(1, p)
    }

    pub fn constant(c: u64, p: u64) -> Self {
        Self::from_residues(p, vec![c % p])
    }

    /// The monomial `c * X^n`.
    pub fn monomial(c: u64, n: usize, p: u64) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = c % p;
        Self::from_residues(p, coeffs)
    }

    /// `X - x0`.
    pub fn linear(x0: u64, p: u64) -> Self {
        Self::from_residues(p, vec![neg_mod(x0 % p, p), 1])
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `X^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n as i64 - 1),
        }
    }

    /// Degree as an index; `None` for zero.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn lc_elem(&self) -> FpElem {
        FpElem::from_residue(self.lc(), self.p)
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == 1
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = c % self.p;
        Self::from_residues(self.p, self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect())
    }

    /// Multiplies by `X^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; n];
        coeffs.extend_from_slice(&self.coeffs);
        Self { p: self.p, coeffs }
    }

    /// The monic associate; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.lc(), self.p))
    }

    pub fn eval(&self, x: u64) -> u64 {
        let x = x % self.p;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| add_mod(mul_mod(acc, x, self.p), c, self.p))
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
            .collect();
        Self::from_residues(p, coeffs)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Long division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_modulus(divisor);
        let Some(db) = divisor.deg() else {
            return Err(Error::DivisionByZero);
        };
        let p = self.p;
        let Some(da) = self.deg() else {
            return Ok((Poly::zero(p), Poly::zero(p)));
        };
        if da < db {
            return Ok((Poly::zero(p), self.clone()));
        }
        let inv_lc = inv_mod(divisor.lc(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; da - db + 1];
        for k in (0..=da - db).rev() {
            let c = mul_mod(rem[k + db], inv_lc, p);
            quot[k] = c;
            if c != 0 {
                for (j, &b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = sub_mod(rem[k + j], mul_mod(c, b, p), p);
                }
            }
        }
        rem.truncate(db);
        Ok((Poly::from_residues(p, quot), Poly::from_residues(p, rem)))
    }

    /// Quotient of a division known to be exact.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divmod(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal(alloc::format!(
                "inexact division of {self} by {divisor}"
            )));
        }
        Ok(q)
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.check_modulus(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(p), Poly::zero(p));
        let (mut t0, mut t1) = (Poly::zero(p), Poly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1).expect("nonzero divisor");
            r0 = core::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = core::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = core::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let k = inv_mod(r0.lc(), p);
        (r0.scale(k), s0.scale(k), t0.scale(k))
    }

    /// `gcd(f, f')` is constant.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    /// Multiplicity of `x0` as a root; `None` for the zero polynomial.
    pub fn ord_at(&self, x0: u64) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let shifted = self.taylor_shift(x0);
        shifted.coeffs.iter().position(|&c| c != 0)
    }

    /// `self(x0 + t)` as a polynomial in `t`.
    pub fn taylor_shift(&self, x0: u64) -> Poly {
        let p = self.p;
        let x0 = x0 % p;
        let mut out = self.coeffs.clone();
        // Horner-style synthetic division, repeated.
        let n = out.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                out[j] = add_mod(out[j], mul_mod(x0, out[j + 1], p), p);
            }
        }
        Poly::from_residues(p, out)
    }

    /// `t^n * self(1/t)`; requires `n >= deg self`.
    pub fn reverse(&self, n: usize) -> Poly {
        debug_assert!(self.deg().is_none_or(|d| d <= n));
        let mut coeffs = vec![0; n + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[n - i] = c;
        }
        Poly::from_residues(self.p, coeffs)
    }

    fn check_modulus(&self, other: &Poly) {
        assert_eq!(self.p, other.p, "polynomials over different fields");
    }
}

/// Free-function form of [`Poly::divmod`].
pub fn poly_divmod(a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
    a.divmod(b)
}

/// Free-function form of [`Poly::gcd`].
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    a.gcd(b)
}

/// Free-function form of [`Poly::is_squarefree`].
pub fn poly_is_squarefree(f: &Poly) -> bool {
    f.is_squarefree()
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check_modulus(rhs);
        let p = self.p;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| add_mod(self.coeff(i), rhs.coeff(i), p)).collect();
        Poly::from_residues(p, coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.check_modulus(rhs);
        let p = self.p;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| sub_mod(self.coeff(i), rhs.coeff(i), p)).collect();
        Poly::from_residues(p, coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check_modulus(rhs);
        let p = self.p;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(p);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(a, b, p), p);
            }
        }
        Poly::from_residues(p, out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let p = self.p;
        Poly::from_residues(p, self.coeffs.iter().map(|&c| neg_mod(c, p)).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}*x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}] over GF({})", self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn px(coeffs: &[i64]) -> Poly {
        Poly::from_i64(7, coeffs)
    }

    #[test]
    fn divmod_examples() {
        // (X^2 + 1) / X
        let (q, r) = px(&[1, 0, 1]).divmod(&px(&[0, 1])).unwrap();
        assert_eq!((q, r), (px(&[0, 1]), px(&[1])));
        // X^3 / (X - 1) = X^2 + X + 1, remainder 1
        let (q, r) = px(&[0, 0, 0, 1]).divmod(&px(&[-1, 1])).unwrap();
        assert_eq!((q, r), (px(&[1, 1, 1]), px(&[1])));
        let (q, r) = px(&[1]).divmod(&px(&[0, 1])).unwrap();
        assert_eq!((q, r), (Poly::zero(7), px(&[1])));
        assert_eq!(px(&[1]).divmod(&Poly::zero(7)), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(px(&[-1, 0, 1]).gcd(&px(&[-1, 1])), px(&[-1, 1]));
        assert_eq!(px(&[0, 0, 1]).gcd(&px(&[0, 0, 0, 1])), px(&[0, 0, 1]));
        assert_eq!(px(&[1, 0, 1]).gcd(&px(&[0, 2])), px(&[1]));
    }

    #[test]
    fn squarefree_examples() {
        assert!(!px(&[0, 0, 1]).is_squarefree());
        assert!(px(&[1, 0, 1]).is_squarefree());
        assert!(px(&[1, 2, 0, 0, 0, 1]).is_squarefree());
        assert!(!px(&[0, 0, 0, 0, 1]).is_squarefree());
    }

    #[test]
    fn shifts_and_reversal() {
        let f = px(&[1, 2, 0, 0, 0, 1]);
        let g = f.taylor_shift(3);
        for t in 0..7 {
            assert_eq!(g.eval(t), f.eval(t + 3));
        }
        assert_eq!(px(&[1, 2, 3]).reverse(3), px(&[0, 3, 2, 1]));
        assert_eq!(px(&[0, 0, 5, 1]).ord_at(0), Some(2));
        assert_eq!(px(&[-1, 0, 1]).ord_at(1), Some(1));
        assert_eq!(px(&[1, 0, 1]).ord_at(1), Some(0));
    }

    #[test]
    fn xgcd_identity() {
        let a = px(&[1, 2, 0, 3, 1]);
        let b = px(&[3, 0, 1, 1]);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert_eq!(g, a.gcd(&b));
    }
}
