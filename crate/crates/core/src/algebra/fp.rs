//! Prime field arithmetic on single-word residues.
//!
//! Residues are plain `u64` values in `[0, p)`. The modulus is at most
//! `2^31`, so every product of two residues fits in a `u64`.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest supported modulus.
pub const MAX_MODULUS: u64 = 1 << 31;

/// Deterministic primality test for `n < 2^32` (Miller-Rabin with bases 2, 7, 61).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 61] {
        if n == small {
            return true;
        }
        if n.is_multiple_of(small) {
            return false;
        }
    }
    if n >= 1 << 32 {
        // Outside the range the fixed bases certify.
        return (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 7, 61] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Validates a modulus for use as an odd prime base field.
pub fn check_modulus(p: u64) -> Result<()> {
    if p == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if p > MAX_MODULUS || !is_prime(p) {
        return Err(Error::InvalidModulus(p));
    }
    Ok(())
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

#[inline]
pub(crate) fn neg_mod(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue (Fermat).
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p), "inverse of zero");
    pow_mod(a, p - 2, p)
}

/// Reduces a signed integer into `[0, p)`.
pub(crate) fn from_i64(v: i64, p: u64) -> u64 {
    let r = v.rem_euclid(p as i64);
    r as u64
}

/// Euler's criterion. Zero counts as a square.
pub(crate) fn is_square_mod(a: u64, p: u64) -> bool {
    a == 0 || pow_mod(a, (p - 1) / 2, p) == 1
}

/// Square root by Tonelli-Shanks, returning the smaller of the two roots.
pub(crate) fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return Some(0);
    }
    if !is_square_mod(a, p) {
        return None;
    }
    let root = if p % 4 == 3 {
        pow_mod(a, (p + 1) / 4, p)
    } else {
        let mut q = p - 1;
        let mut s = 0u32;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let z = (2..p).find(|&z| !is_square_mod(z, p)).expect("p odd prime");
        let mut m = s;
        let mut c = pow_mod(z, q, p);
        let mut t = pow_mod(a, q, p);
        let mut r = pow_mod(a, q.div_ceil(2), p);
        while t != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = t2 * t2 % p;
                i += 1;
            }
            let b = pow_mod(c, 1 << (m - i - 1), p);
            m = i;
            c = b * b % p;
            t = t * c % p;
            r = r * b % p;
        }
        r
    };
    Some(root.min(p - root))
}

/// An element of GF(p).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpElem {
    value: u64,
    p: u64,
}

impl FpElem {
    pub fn new(value: i64, p: u64) -> Self {
        Self {
            value: from_i64(value, p),
            p,
        }
    }

    pub(crate) fn from_residue(value: u64, p: u64) -> Self {
        debug_assert!(value < p);
        Self { value, p }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<Self> {
        (self.value != 0).then(|| Self::from_residue(inv_mod(self.value, self.p), self.p))
    }

    pub fn pow(self, exp: u64) -> Self {
        Self::from_residue(pow_mod(self.value, exp, self.p), self.p)
    }

    /// Whether `self` is a square in GF(p); zero is a square.
    pub fn is_square(self) -> bool {
        is_square_mod(self.value, self.p)
    }

    /// The smaller of the two square roots in `[0, p)`, if any.
    pub fn sqrt(self) -> Option<Self> {
        sqrt_mod(self.value, self.p).map(|r| Self::from_residue(r, self.p))
    }
}

/// Free-function form of [`FpElem::is_square`].
pub fn fp_is_square(a: FpElem) -> bool {
    a.is_square()
}

impl Add for FpElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        Self::from_residue(add_mod(self.value, rhs.value, self.p), self.p)
    }
}

impl Sub for FpElem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        Self::from_residue(sub_mod(self.value, rhs.value, self.p), self.p)
    }
}

impl Mul for FpElem {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        Self::from_residue(mul_mod(self.value, rhs.value, self.p), self.p)
    }
}

impl Neg for FpElem {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_residue(neg_mod(self.value, self.p), self.p)
    }
}

impl fmt::Debug for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.p)
    }
}

impl fmt::Display for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_mod_7() {
        let squares: alloc::vec::Vec<u64> = (0..7).filter(|&a| is_square_mod(a, 7)).collect();
        assert_eq!(squares, [0, 1, 2, 4]);
        assert!(fp_is_square(FpElem::new(0, 7)));
        assert!(fp_is_square(FpElem::new(2, 7)));
        assert!(!fp_is_square(FpElem::new(3, 7)));
    }

    #[test]
    fn sqrt_matches_enumeration() {
        for p in [3u64, 5, 7, 11, 13, 17, 41, 97, 257] {
            for a in 0..p {
                let brute = (0..p).find(|&r| r * r % p == a);
                assert_eq!(sqrt_mod(a, p), brute, "p={p} a={a}");
            }
        }
    }

    #[test]
    fn primality() {
        let primes: alloc::vec::Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(2_147_483_649));
        assert!(check_modulus(4).is_err());
        assert_eq!(check_modulus(2), Err(Error::EvenCharacteristic));
        assert!(check_modulus(7).is_ok());
    }

    #[test]
    fn inverse_and_negation() {
        let p = 11;
        for a in 1..p {
            assert_eq!(mul_mod(a, inv_mod(a, p), p), 1);
            assert_eq!(add_mod(a, neg_mod(a, p), p), 0);
        }
        assert_eq!(FpElem::new(-1, 7).value(), 6);
    }
}
