//! The two-generator parameters `b = n·a + r` and the standing hypotheses.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Coprime `2 <= a < b` with `b = n·a + r`, `n >= 1`, `0 < r < a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TwoGenParams {
    pub a: u64,
    pub b: u64,
    pub n: u64,
    pub r: u64,
}

impl TwoGenParams {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a < 2 {
            return Err(Error::MultiplicityTooSmall(a));
        }
        if b <= a {
            return Err(Error::BNotLarger { a, b });
        }
        let gcd = a.gcd(&b);
        if gcd != 1 {
            return Err(Error::NotCoprime { a, b, gcd });
        }
        let (n, r) = b.div_rem(&a);
        // Keep (a-1)(b-1) and (a-1)·b representable for every downstream formula.
        (a - 1).checked_mul(b).ok_or(Error::Overflow)?;
        Ok(TwoGenParams { a, b, n, r })
    }

    /// `(a-1)(b-1)/2`, the genus of `<a; b>`.
    pub fn full_genus(&self) -> u64 {
        (self.a - 1) * (self.b - 1) / 2
    }

    /// `(a-1)(b-a+r)/2`, the genus threshold above which a second point on
    /// the same pencil cannot share the semigroup.
    pub fn same_pencil_threshold(&self) -> u64 {
        (self.a - 1) * (self.b - self.a + self.r) / 2
    }

    /// The cusp multiplicity forced on a second point with the same semigroup.
    pub fn default_mu(&self) -> u64 {
        self.a - self.r
    }

    /// `<a; b>` itself.
    pub fn semigroup(&self) -> Result<NumericalSemigroup> {
        NumericalSemigroup::from_generators(&[self.a, self.b])
    }
}

/// `a, b, n, r` read off a concrete semigroup plus the window condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HypothesesReport {
    pub a: u64,
    pub b: u64,
    pub n: u64,
    pub r: u64,
    /// `b` is the only member strictly between `n·a` and `(n+1)·a`.
    pub dim_condition_holds: bool,
    /// Set when the report was not read off a concrete semigroup but assumed
    /// (bound-mode classification).
    pub assumed: bool,
}

impl HypothesesReport {
    pub fn params(&self) -> TwoGenParams {
        TwoGenParams {
            a: self.a,
            b: self.b,
            n: self.n,
            r: self.r,
        }
    }
}

/// Reads `a` (multiplicity) and `b` (second generator) off `h`, decomposes
/// `b = n·a + r` and counts the members in the window `(n·a, (n+1)·a)`.
pub fn standing_hypotheses_check(h: &NumericalSemigroup) -> Result<HypothesesReport> {
    let b = h.second_generator().ok_or(Error::GenusZero)?;
    let a = h.multiplicity();
    let p = TwoGenParams::new(a, b)?;
    let window = h.members_between(p.n * a, (p.n + 1) * a).count();
    Ok(HypothesesReport {
        a,
        b,
        n: p.n,
        r: p.r,
        dim_condition_holds: window == 1,
        assumed: false,
    })
}
