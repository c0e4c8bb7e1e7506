//! Constructions attached to a second point `Q` with `aQ ∈ |aP|`.
//!
//! * the window-by-window description of the semigroup at `Q` when the genus
//!   is maximal,
//! * the trivial new non-gaps `i·b - m·a` forced on `Q` by a `(μ; a)` cusp,
//! * the sharp semigroup `S = <a; b> ∪ {trivial new non-gaps}` for `μ = a - r`.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::TwoGenParams;
use crate::semigroup::NumericalSemigroup;

/// The unique `n(m)` with `(n(m) - 1)·μ < m·a < n(m)·μ`.
///
/// Panics if either inequality is not strict, which only happens when
/// `gcd(a, μ) != 1` or `m` is outside `1..μ`.
pub fn n_of_m(m: u64, a: u64, mu: u64) -> u64 {
    let n = m * a / mu + 1;
    assert!(
        (n - 1) * mu < m * a && m * a < n * mu,
        "n(m) undefined for m = {m}, a = {a}, mu = {mu}"
    );
    n
}

/// The trivial new non-gaps of a `(μ; a)` cusp on the plane model of `<a; b>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrivialNewNonGaps {
    pub params: TwoGenParams,
    pub mu: u64,
    /// `(m, n(m))` for `1 <= m <= μ - 1`.
    pub n_table: Vec<(u64, u64)>,
    pub values: BTreeSet<u64>,
}

impl TrivialNewNonGaps {
    /// Whether `mu` is the cusp multiplicity `a - r` used by the classifier.
    pub fn is_default_mu(&self) -> bool {
        self.mu == self.params.default_mu()
    }

    /// `(a-1)(μ-1)/2`.
    pub fn expected_count(&self) -> u64 {
        (self.params.a - 1) * (self.mu - 1) / 2
    }

    /// Generating pairs `(i, m)` in the order they are produced.
    pub fn pairs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let a = self.params.a;
        self.n_table
            .iter()
            .flat_map(move |&(m, n)| (n..a).map(move |i| (i, m)))
    }
}

/// `{ i·b - m·a : 1 <= m <= μ-1, n(m) <= i <= a-1 }`.
pub fn trivial_new_nongaps(p: &TwoGenParams, mu: u64) -> Result<TrivialNewNonGaps> {
    let a = p.a;
    if mu == 0 || mu >= a || a.gcd(&mu) != 1 {
        return Err(Error::NotCoprimeMu { a, mu });
    }
    let n_table: Vec<(u64, u64)> = (1..mu).map(|m| (m, n_of_m(m, a, mu))).collect();
    let mut values = BTreeSet::new();
    let mut produced = 0u64;
    for &(m, n) in &n_table {
        for i in n..a {
            values.insert(i * p.b - m * a);
            produced += 1;
        }
    }
    // i·b - m·a = i'·b - m'·a forces a | (i - i'), so collisions are impossible.
    assert_eq!(
        produced,
        values.len() as u64,
        "trivial new non-gaps collide for {p:?}, mu = {mu}"
    );
    Ok(TrivialNewNonGaps {
        params: *p,
        mu,
        n_table,
        values,
    })
}

/// `<a; b>` united with the trivial new non-gaps for `μ = a - r`; its genus is
/// `(a-1)(b-a+r)/2`.
pub fn sharp_semigroup(p: &TwoGenParams) -> Result<NumericalSemigroup> {
    let trivial = trivial_new_nongaps(p, p.default_mu())?;
    p.semigroup()?.union_with(trivial.values)
}

/// Members of `<a; b>` strictly inside `(t·a, (t+1)·a)` and the matching
/// members of the semigroup at `Q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowProfile {
    pub t: u64,
    pub s: u64,
    pub q_non_gaps: Vec<u64>,
}

/// One profile per window `t = 1, 2, ...` up to the first full window of `<a; b>`.
pub fn window_profiles(p: &TwoGenParams) -> Result<Vec<WindowProfile>> {
    let base = p.semigroup()?;
    let a = p.a;
    let mut out = Vec::new();
    for t in 1.. {
        let s = base.members_between(t * a, (t + 1) * a).count() as u64;
        let top = (t + 1) * a;
        out.push(WindowProfile {
            t,
            s,
            q_non_gaps: (1..=s).rev().map(|i| top - i).collect(),
        });
        if s == a - 1 && t * a >= base.conductor() {
            break;
        }
    }
    Ok(out)
}

/// The semigroup at `Q` when the genus is `(a-1)(b-1)/2`: in every window the
/// top `s` positions are members, where `s` is the `<a; b>` count there.
pub fn ws_of_q_full_genus(p: &TwoGenParams) -> Result<NumericalSemigroup> {
    let profiles = window_profiles(p)?;
    let a = p.a;
    let mut gaps = Vec::new();
    for w in &profiles {
        let lo = w.t * a + 1;
        let hi = (w.t + 1) * a - w.s;
        gaps.extend(lo..hi);
    }
    // Window t = 0 holds no member of <a; b>.
    gaps.extend(1..a);
    NumericalSemigroup::from_gaps(gaps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: u64, b: u64) -> TwoGenParams {
        TwoGenParams::new(a, b).unwrap()
    }

    #[test]
    fn n_of_m_values() {
        assert_eq!(n_of_m(1, 4, 3), 2);
        assert_eq!(n_of_m(2, 4, 3), 3);
        for a in 3..30u64 {
            for mu in 2..a {
                if a.gcd(&mu) != 1 {
                    continue;
                }
                for m in 1..mu {
                    assert_eq!(n_of_m(mu - m, a, mu), a - n_of_m(m, a, mu) + 1);
                }
            }
        }
    }

    #[test]
    #[should_panic]
    fn n_of_m_rejects_non_coprime() {
        n_of_m(2, 4, 2);
    }

    #[test]
    fn example_sets() {
        let t = trivial_new_nongaps(&params(4, 9), 3).unwrap();
        assert_eq!(
            t.values.iter().copied().collect::<Vec<_>>(),
            vec![14, 19, 23]
        );
        assert_eq!(t.n_table, vec![(1, 2), (2, 3)]);
        assert!(t.is_default_mu());

        let t = trivial_new_nongaps(&params(4, 13), 3).unwrap();
        assert_eq!(
            t.values.iter().copied().collect::<Vec<_>>(),
            vec![22, 31, 35]
        );

        // a = 5, r = 1: {10n-3, 15n-7, 15n-2, 20n-11, 20n-6, 20n-1}.
        for n in 2..8 {
            let t = trivial_new_nongaps(&params(5, 5 * n + 1), 4).unwrap();
            let want: BTreeSet<u64> = [
                10 * n - 3,
                15 * n - 7,
                15 * n - 2,
                20 * n - 11,
                20 * n - 6,
                20 * n - 1,
            ]
            .into_iter()
            .collect();
            assert_eq!(t.values, want);
        }
        // a = 5, r = 2: {10n-1, 15n+1, 20n-2, 20n+3}; r = 3: {15n+4, 20n+7}.
        for n in 2..8 {
            let t = trivial_new_nongaps(&params(5, 5 * n + 2), 3).unwrap();
            let want: BTreeSet<u64> = [10 * n - 1, 15 * n + 1, 20 * n - 2, 20 * n + 3]
                .into_iter()
                .collect();
            assert_eq!(t.values, want);
            let t = trivial_new_nongaps(&params(5, 5 * n + 3), 2).unwrap();
            let want: BTreeSet<u64> = [15 * n + 4, 20 * n + 7].into_iter().collect();
            assert_eq!(t.values, want);
        }
    }

    #[test]
    fn a_six_set() {
        // Enumerated straight from the definition; the 24n-14 and 24n-2
        // entries are where a hand-written list is easy to get wrong.
        let t = trivial_new_nongaps(&params(6, 13), 5).unwrap();
        assert_eq!(
            t.values.iter().copied().collect::<Vec<_>>(),
            vec![20, 27, 33, 34, 40, 41, 46, 47, 53, 59]
        );
        assert_eq!(t.values.len() as u64, t.expected_count());
    }

    #[test]
    fn mu_errors() {
        let p = params(6, 13);
        assert_eq!(
            trivial_new_nongaps(&p, 4),
            Err(Error::NotCoprimeMu { a: 6, mu: 4 })
        );
        assert_eq!(
            trivial_new_nongaps(&p, 6),
            Err(Error::NotCoprimeMu { a: 6, mu: 6 })
        );
        assert_eq!(
            trivial_new_nongaps(&p, 0),
            Err(Error::NotCoprimeMu { a: 6, mu: 0 })
        );
        let t = trivial_new_nongaps(&p, 1).unwrap();
        assert!(t.values.is_empty());
        assert!(!t.is_default_mu());
    }

    #[test]
    fn sharp_examples() {
        let s = sharp_semigroup(&params(4, 9)).unwrap();
        let base = params(4, 9).semigroup().unwrap();
        assert_eq!(s, base.union_with([14, 19, 23]).unwrap());
        assert_eq!(s.genus(), 9);

        for n in 1..8 {
            let p = params(3, 3 * n + 2);
            assert_eq!(sharp_semigroup(&p).unwrap(), p.semigroup().unwrap());
        }

        let p = params(5, 11);
        let s = sharp_semigroup(&p).unwrap();
        assert_eq!(s.genus(), 14);
        assert_eq!(trivial_new_nongaps(&p, 4).unwrap().values.len(), 6);
    }

    #[test]
    fn ws_q_three_seven() {
        let q = ws_of_q_full_genus(&params(3, 7)).unwrap();
        assert_eq!(q.gaps(), &[1, 2, 4, 5, 7, 10]);
        let profiles = window_profiles(&params(3, 7)).unwrap();
        assert_eq!(
            profiles[1],
            WindowProfile {
                t: 2,
                s: 1,
                q_non_gaps: vec![8]
            }
        );
        assert_eq!(
            profiles[2],
            WindowProfile {
                t: 3,
                s: 1,
                q_non_gaps: vec![11]
            }
        );
        assert_eq!(
            profiles[3],
            WindowProfile {
                t: 4,
                s: 2,
                q_non_gaps: vec![13, 14]
            }
        );
    }

    #[test]
    fn ws_q_hyperelliptic_and_last_residue() {
        for g in 1..20 {
            let p = params(2, 2 * g + 1);
            assert_eq!(ws_of_q_full_genus(&p).unwrap(), p.semigroup().unwrap());
        }
        for (a, b) in [(4, 7), (5, 9), (6, 11), (7, 20)] {
            let p = params(a, b);
            assert_eq!(p.r, a - 1);
            assert_eq!(ws_of_q_full_genus(&p).unwrap(), p.semigroup().unwrap());
        }
        let p = params(4, 9);
        assert_ne!(ws_of_q_full_genus(&p).unwrap(), p.semigroup().unwrap());
    }
}
