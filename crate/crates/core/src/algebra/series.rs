//! Truncated Laurent series over GF(p).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::fp::{add_mod, inv_mod, mul_mod, neg_mod, sqrt_mod};
use super::poly::Poly;
use crate::error::{Error, Result};

/// `sum_i coeffs[i] * t^(lead + i)`, known for exponents below `precision`.
///
/// The leading coefficient is nonzero unless every known coefficient
/// vanishes, in which case `coeffs` is empty and `lead == precision`.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    p: u64,
    lead: i64,
    coeffs: Vec<u64>,
    precision: i64,
}

impl LaurentSeries {
    /// Series with the given coefficients starting at `t^lead`, exact below `precision`.
    pub fn new(p: u64, lead: i64, mut coeffs: Vec<u64>, precision: i64) -> Self {
        assert!(precision >= lead, "precision below leading exponent");
        coeffs.truncate((precision - lead) as usize);
        coeffs.resize((precision - lead) as usize, 0);
        let mut s = Self {
            p,
            lead,
            coeffs,
            precision,
        };
        s.normalize();
        s
    }

    /// A polynomial in `t` viewed as a series known below `precision`.
    pub fn from_poly(poly: &Poly, precision: i64) -> Self {
        let n = precision.max(0) as usize;
        let coeffs = (0..n).map(|i| poly.coeff(i)).collect();
        Self::new(poly.modulus(), 0, coeffs, precision.max(0))
    }

    fn normalize(&mut self) {
        let zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if zeros > 0 {
            self.coeffs.drain(..zeros);
            self.lead += zeros as i64;
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Exponent of the first nonzero coefficient, if one is known.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.lead)
    }

    pub fn lead_exponent(&self) -> i64 {
        self.lead
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    /// Number of known coefficients from the leading term on.
    pub fn relative_precision(&self) -> i64 {
        self.precision - self.lead
    }

    pub fn is_zero_to_precision(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^e`; `None` past the precision.
    pub fn coeff(&self, e: i64) -> Option<u64> {
        if e >= self.precision {
            return None;
        }
        if e < self.lead {
            return Some(0);
        }
        Some(self.coeffs[(e - self.lead) as usize])
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.first().copied().unwrap_or(0)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            p: self.p,
            lead: self.lead + k,
            coeffs: self.coeffs.clone(),
            precision: self.precision + k,
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = c % self.p;
        let coeffs = self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect();
        Self::new(self.p, self.lead, coeffs, self.precision)
    }

    pub fn neg(&self) -> Self {
        self.scale(self.p - 1)
    }

    /// Drops everything at or above exponent `precision`.
    pub fn truncate(&self, precision: i64) -> Self {
        if precision >= self.precision {
            return self.clone();
        }
        let precision = precision.max(self.lead);
        Self::new(self.p, self.lead, self.coeffs.clone(), precision)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        let p = self.p;
        let precision = self.precision.min(other.precision);
        let lead = self.lead.min(other.lead).min(precision);
        let n = (precision - lead) as usize;
        let coeffs = (0..n)
            .map(|i| {
                let e = lead + i as i64;
                add_mod(self.coeff(e).unwrap_or(0), other.coeff(e).unwrap_or(0), p)
            })
            .collect();
        Self::new(p, lead, coeffs, precision)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        let p = self.p;
        let lead = self.lead + other.lead;
        let rel = self.relative_precision().min(other.relative_precision());
        let n = rel.max(0) as usize;
        let mut coeffs = vec![0u64; n];
        for (i, &a) in self.coeffs.iter().take(n).enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().take(n - i).enumerate() {
                coeffs[i + j] = add_mod(coeffs[i + j], mul_mod(a, b, p), p);
            }
        }
        Self::new(p, lead, coeffs, lead + rel)
    }

    /// Multiplicative inverse, keeping the relative precision.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero_to_precision() {
            return Err(Error::ZeroSeries);
        }
        let p = self.p;
        let n = self.coeffs.len();
        let inv0 = inv_mod(self.coeffs[0], p);
        let mut out = vec![0u64; n];
        out[0] = inv0;
        for k in 1..n {
            let mut acc = 0;
            for i in 1..=k {
                acc = add_mod(acc, mul_mod(self.coeffs[i], out[k - i], p), p);
            }
            out[k] = mul_mod(neg_mod(acc, p), inv0, p);
        }
        Ok(Self::new(p, -self.lead, out, -self.lead + n as i64))
    }

    /// Square root by Newton iteration `t <- (t + s/t) / 2`.
    ///
    /// The branch has leading coefficient equal to the smaller square root
    /// of the input's leading coefficient. The result is known below
    /// `precision` (capped by what the input determines).
    pub fn sqrt(&self, precision: i64) -> Result<Self> {
        let p = self.p;
        if self.is_zero_to_precision() {
            return Err(Error::ZeroSeries);
        }
        if self.lead.rem_euclid(2) != 0 {
            return Err(Error::OddLeadExponent);
        }
        let root0 = match sqrt_mod(self.leading_coeff(), p) {
            Some(r) if r != 0 => r,
            _ => return Err(Error::NonSquareLeading),
        };
        let half_lead = self.lead / 2;
        let target_rel = (precision - half_lead).min(self.relative_precision());
        if target_rel <= 0 {
            return Ok(Self::new(p, half_lead, Vec::new(), half_lead));
        }
        // Work with the unit part u = s / t^lead, so sqrt(s) = t^(lead/2) sqrt(u).
        let unit = self.shift(-self.lead);
        let inv2 = inv_mod(2, p);
        let mut root = Self::new(p, 0, vec![root0], 1);
        let mut known = 1i64;
        while known < target_rel {
            known = (2 * known).min(target_rel);
            let padded = Self::new(p, 0, root.coeffs.clone(), known);
            let quotient = unit.truncate(known).mul(&padded.inverse()?);
            root = padded.add(&quotient).scale(inv2).truncate(known);
        }
        Ok(root.shift(half_lead))
    }
}

/// Free-function form of [`LaurentSeries::sqrt`].
pub fn series_sqrt(s: &LaurentSeries, precision: i64) -> Result<LaurentSeries> {
    s.sqrt(precision)
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}*t^{}", self.lead + i as i64)?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.precision)
    }
}
