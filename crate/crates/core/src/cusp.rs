//! Delta invariants of coprime `(ν; μ)` cusps.
//!
//! Resolving a cusp of multiplicity `ν` whose tangent line meets it with
//! contact `μ` produces a chain of infinitely near singular points whose
//! multiplicities are the successive remainders of the Euclidean algorithm on
//! `(μ, ν)`. Each of the `n_i` points of multiplicity `c_i` drops the genus by
//! `c_i(c_i - 1)/2`; the total telescopes to `(ν-1)(μ-1)/2`.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::TwoGenParams;

/// A unibranch plane singularity of multiplicity `nu` with tangent contact `mu`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CuspType {
    pub nu: u64,
    pub mu: u64,
}

impl CuspType {
    pub fn new(nu: u64, mu: u64) -> Result<Self> {
        if nu < 2 || mu <= nu || nu.gcd(&mu) != 1 {
            return Err(Error::InvalidCusp { nu, mu });
        }
        Ok(CuspType { nu, mu })
    }
}

/// Blow-up data of a cusp: `cs = [μ, ν, c_3, ..., 1]` and the quotients
/// `ns[j]` counting the infinitely near points of multiplicity `cs[j + 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplicitySequence {
    pub cs: Vec<u64>,
    pub ns: Vec<u64>,
    pub delta: u64,
}

/// Runs `c_{i-1} = n_i·c_i + c_{i+1}` from `(c_1, c_2) = (μ, ν)` down to 1 and
/// sums `n_i·c_i(c_i - 1)/2`.
pub fn euclid_sequence(cusp: CuspType) -> MultiplicitySequence {
    let mut cs = vec![cusp.mu, cusp.nu];
    let mut ns = Vec::new();
    let mut delta = 0u64;
    let (mut prev, mut cur) = (cusp.mu, cusp.nu);
    while cur != 1 {
        let (q, rem) = prev.div_rem(&cur);
        debug_assert!(rem >= 1, "coprime inputs never reach remainder 0 before 1");
        ns.push(q);
        delta += q * (cur * (cur - 1) / 2);
        cs.push(rem);
        prev = cur;
        cur = rem;
    }
    MultiplicitySequence { cs, ns, delta }
}

/// `(ν-1)(μ-1)/2`.
pub fn delta_closed(cusp: CuspType) -> u64 {
    (cusp.nu - 1) * (cusp.mu - 1) / 2
}

/// `(a-1)(b-μ)/2`: the genus left after a degree-`b` plane model pays for a
/// `(b-a; b)` cusp and a `(μ; a)` cusp.
pub fn max_genus_with_cusp(p: &TwoGenParams, mu: u64) -> Result<u64> {
    if mu == 0 || mu >= p.a || p.a.gcd(&mu) != 1 {
        return Err(Error::NotCoprimeMu { a: p.a, mu });
    }
    let twice = (p.a - 1) * (p.b - mu);
    if !twice.is_multiple_of(2) {
        return Err(Error::NonIntegral(twice));
    }
    Ok(twice / 2)
}
