//! Numerical semigroups `<m, r>` generated by two coprime integers.

use alloc::vec::Vec;

use crate::curve::gcd;
use crate::error::{Error, Result};

/// Gaps of `<m, r>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupGaps {
    pub m: u64,
    pub r: u64,
    pub gaps: Vec<u64>,
    /// Number of gaps, `(m - 1)(r - 1) / 2`.
    pub genus: u64,
    /// Largest gap `mr - m - r`; `None` when there are no gaps.
    pub frobenius: Option<u64>,
}

fn check(m: u64, r: u64) -> Result<()> {
    if m == 0 || r == 0 || gcd(m, r) != 1 {
        return Err(Error::NotCoprime(m, r));
    }
    Ok(())
}

/// Whether `n` is a non-negative combination of `m` and `r`.
fn represented(n: u64, m: u64, r: u64) -> bool {
    (0..=n / r).any(|j| (n - j * r).is_multiple_of(m))
}

pub fn semigroup_gaps(m: u64, r: u64) -> Result<SemigroupGaps> {
    check(m, r)?;
    let bound = m * r;
    let gaps: Vec<u64> = (1..bound).filter(|&n| !represented(n, m, r)).collect();
    let genus = (m - 1) * (r - 1) / 2;
    if gaps.len() as u64 != genus {
        return Err(Error::Internal(alloc::format!(
            "<{m}, {r}> has {} gaps, expected {genus}",
            gaps.len()
        )));
    }
    let frobenius = gaps.last().copied();
    Ok(SemigroupGaps {
        m,
        r,
        gaps,
        genus,
        frobenius,
    })
}

/// `#{ s in <m, r> : s <= n }` for `n = 0..=nmax`.
pub fn ell_counts(m: u64, r: u64, nmax: u64) -> Result<Vec<u64>> {
    check(m, r)?;
    let mut out = Vec::with_capacity(nmax as usize + 1);
    let mut count = 0;
    for n in 0..=nmax {
        if represented(n, m, r) {
            count += 1;
        }
        out.push(count);
    }
    Ok(out)
}
