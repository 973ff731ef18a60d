//! Resultants and discriminants of polynomials in an auxiliary variable `T`
//! whose coefficients live in GF(p)[X].

use alloc::vec::Vec;

use super::poly::Poly;
use crate::error::{Error, Result};

/// Determinant of a square matrix over GF(p)[X] by Bareiss elimination.
///
/// Every intermediate division is exact in GF(p)[X].
pub fn det_fraction_free(mut m: Vec<Vec<Poly>>, p: u64) -> Result<Poly> {
    let n = m.len();
    if n == 0 {
        return Ok(Poly::one(p));
    }
    let mut negate = false;
    let mut prev = Poly::one(p);
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(Poly::zero(p));
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = cross.div_exact(&prev)?;
            }
            m[i][k] = Poly::zero(p);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

/// Sylvester matrix of `a` and `b` (coefficients lowest first) with formal
/// degrees `a.len() - 1` and `b.len() - 1`.
pub fn sylvester(a: &[Poly], b: &[Poly], p: u64) -> Vec<Vec<Poly>> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = alloc::vec![Poly::zero(p); size];
        for (i, c) in a.iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = alloc::vec![Poly::zero(p); size];
        for (i, c) in b.iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// `Res_T(a, b)` as the Sylvester determinant.
pub fn resultant_in_t(a: &[Poly], b: &[Poly], p: u64) -> Result<Poly> {
    if a.len() < 2 && b.len() < 2 {
        return Ok(Poly::one(p));
    }
    det_fraction_free(sylvester(a, b, p), p)
}

/// Discriminant in `T` of a monic polynomial `sum_i coeffs[i] T^i`.
///
/// Normalized as `(-1)^(m(m-1)/2) Res(g, g')`, `m = deg_T g`.
pub fn discriminant_in_t(coeffs: &[Poly]) -> Result<Poly> {
    let Some(lead) = coeffs.last() else {
        return Err(Error::NotMonic);
    };
    let p = lead.modulus();
    if !(lead.is_constant() && lead.is_monic()) {
        return Err(Error::NotMonic);
    }
    let m = coeffs.len() - 1;
    if m == 0 {
        return Ok(Poly::one(p));
    }
    let derivative: Vec<Poly> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.scale(i as u64 % p))
        .collect();
    let res = resultant_in_t(coeffs, &derivative, p)?;
    Ok(if (m * (m - 1) / 2) % 2 == 1 { -&res } else { res })
}
