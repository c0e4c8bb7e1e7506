//! Enumeration of the semigroups of a given genus containing `<a; b>`, batch
//! classification, and the explicit families built on `<4; 4n+1>`,
//! `<5; 5n+1>` and `<6; 6n+1>`.

use std::collections::HashMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::engine::{classify, Verdict, VerdictKind};
use crate::error::{Error, Result};
use crate::params::{standing_hypotheses_check, TwoGenParams};
use crate::pencil::sharp_semigroup;
use crate::semigroup::NumericalSemigroup;

/// Largest `n` accepted by the family generators.
pub const FAMILY_N_LIMIT: u64 = 1 << 20;

/// Largest number of promotions the brute-force oracle accepts.
pub const BRUTE_FORCE_LIMIT: u64 = 12;

/// Runs `f` on a pool of `jobs` workers, or on the global pool for `None`.
pub fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
        {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        None => f(),
    }
}

fn check_genus(p: &TwoGenParams, g: u64) -> Result<()> {
    let full_genus = p.full_genus();
    if g > full_genus {
        return Err(Error::GenusTooLarge {
            a: p.a,
            b: p.b,
            genus: g,
            full_genus,
        });
    }
    Ok(())
}

/// `x` can join the members when every already decided sum `x + m` is a member.
fn can_promote(x: usize, members: &[bool]) -> bool {
    let len = members.len();
    if 2 * x < len && !members[2 * x] {
        return false;
    }
    (1..len - x.min(len)).all(|m| !members[m] || members[x + m])
}

fn dfs(
    gaps_desc: &[usize],
    idx: usize,
    need: usize,
    members: &mut Vec<bool>,
    out: &mut Vec<Vec<bool>>,
) {
    if need == 0 {
        out.push(members.clone());
        return;
    }
    if gaps_desc.len() - idx < need {
        return;
    }
    let x = gaps_desc[idx];
    if can_promote(x, members) {
        members[x] = true;
        dfs(gaps_desc, idx + 1, need - 1, members, out);
        members[x] = false;
    }
    dfs(gaps_desc, idx + 1, need, members, out);
}

fn keeps_hypotheses(h: &NumericalSemigroup, p: &TwoGenParams) -> bool {
    standing_hypotheses_check(h)
        .map(|rep| rep.a == p.a && rep.b == p.b && rep.dim_condition_holds)
        .unwrap_or(false)
}

fn canonical(mut list: Vec<NumericalSemigroup>) -> Vec<NumericalSemigroup> {
    list.sort_by(|x, y| x.gaps().cmp(y.gaps()));
    list.dedup();
    list
}

/// Every semigroup of genus `g` containing `<a; b>`, sorted by gap set.
///
/// Gaps of `<a; b>` are decided in decreasing order, so a promotion only has
/// to check sums that are already decided. With `require_hypotheses` the
/// list keeps only semigroups with multiplicity `a`, second generator `b`
/// and the window condition.
pub fn enumerate_containing(
    p: &TwoGenParams,
    g: u64,
    require_hypotheses: bool,
) -> Result<Vec<NumericalSemigroup>> {
    check_genus(p, g)?;
    let base = p.semigroup()?;
    let need = (p.full_genus() - g) as usize;
    let table: Vec<bool> = (0..=base.conductor()).map(|x| base.contains(x)).collect();
    let gaps_desc: Vec<usize> = base.gaps().iter().rev().map(|&x| x as usize).collect();

    let tables: Vec<Vec<bool>> = if need == 0 {
        vec![table]
    } else {
        // One task per largest promoted gap.
        (0..gaps_desc.len())
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut out = Vec::new();
                let x = gaps_desc[i];
                if gaps_desc.len() - i >= need && can_promote(x, &table) {
                    let mut members = table.clone();
                    members[x] = true;
                    dfs(&gaps_desc, i + 1, need - 1, &mut members, &mut out);
                }
                out
            })
            .collect()
    };
    let list = tables
        .into_par_iter()
        .map(NumericalSemigroup::from_table)
        .filter(|h| !require_hypotheses || keeps_hypotheses(h, p))
        .collect();
    Ok(canonical(list))
}

/// Unpruned oracle: tries every subset of `full_genus - g` gaps.
pub fn brute_force_enumerate(p: &TwoGenParams, g: u64) -> Result<Vec<NumericalSemigroup>> {
    check_genus(p, g)?;
    let promoted = p.full_genus() - g;
    if promoted > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            promoted,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let base = p.semigroup()?;
    let list = base
        .gaps()
        .iter()
        .copied()
        .combinations(promoted as usize)
        .filter_map(|extra| base.union_with(extra).ok())
        .collect();
    Ok(canonical(list))
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ConstraintViolated(what()))
    }
}

/// `<4; 4n+1> ∪ { 4i+3 : 3n-m <= i <= 3n-1 }`, of genus `6n - m`.
pub fn family_4_1(n: u64, m: u64) -> Result<NumericalSemigroup> {
    check(n >= 2, || format!("n = {n} < 2"))?;
    check(n <= FAMILY_N_LIMIT, || format!("n = {n} is too large"))?;
    check(m < 2 * n, || format!("m = {m} > 2n-1 = {}", 2 * n - 1))?;
    let base = TwoGenParams::new(4, 4 * n + 1)?.semigroup()?;
    let h = base.union_with((3 * n - m..3 * n).map(|i| 4 * i + 3))?;
    assert_eq!(
        h.genus(),
        6 * n - m,
        "family on <4; 4n+1> has the wrong genus"
    );
    Ok(h)
}

/// `<5; 5n+1> ∪ { 5i+3 : m' <= i <= 3n } ∪ { 5i+4 : m <= i <= 4n }` under
/// `m <= n + m'`, `2m >= m'` and `m + m' > 3n + 3`.
pub fn family_4_2(n: u64, m: u64, m_prime: u64) -> Result<NumericalSemigroup> {
    check(n >= 4, || format!("n = {n} < 4"))?;
    check(n <= FAMILY_N_LIMIT, || format!("n = {n} is too large"))?;
    check(m <= n + m_prime, || {
        format!("m = {m} > n + m' = {}", n + m_prime)
    })?;
    check(2 * m >= m_prime, || {
        format!("2m = {} < m' = {m_prime}", 2 * m)
    })?;
    check(m + m_prime > 3 * n + 3, || {
        format!("m + m' = {} <= 3n + 3 = {}", m + m_prime, 3 * n + 3)
    })?;
    let base = TwoGenParams::new(5, 5 * n + 1)?.semigroup()?;
    let threes = (m_prime..=3 * n).map(|i| 5 * i + 3);
    let fours = (m..=4 * n).map(|i| 5 * i + 4);
    base.union_with(threes.chain(fours))
}

/// The ten values added to `<6; 6n+1>`.
pub fn family_4_3_values(n: u64) -> [u64; 10] {
    [
        12 * n - 4,
        18 * n - 9,
        18 * n - 3,
        24 * n - 14,
        24 * n - 8,
        24 * n - 2,
        30 * n - 19,
        30 * n - 13,
        30 * n - 7,
        30 * n - 1,
    ]
}

/// `<6; 6n+1>` with the trivial new non-gaps of a `(5; 6)` cusp; genus `15n - 10`.
pub fn family_4_3(n: u64) -> Result<NumericalSemigroup> {
    check(n >= 2, || format!("n = {n} < 2"))?;
    check(n <= FAMILY_N_LIMIT, || format!("n = {n} is too large"))?;
    let base = TwoGenParams::new(6, 6 * n + 1)?.semigroup()?;
    let h = base.union_with(family_4_3_values(n))?;
    assert_eq!(
        h.genus(),
        15 * n - 10,
        "family on <6; 6n+1> has the wrong genus"
    );
    Ok(h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyTag {
    #[serde(rename = "BASE")]
    Base,
    #[serde(rename = "SHARP_S")]
    SharpS,
    #[serde(rename = "EX_4_1")]
    Ex41,
    #[serde(rename = "EX_4_2")]
    Ex42,
    #[serde(rename = "EX_4_3")]
    Ex43,
}

impl FamilyTag {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::Base => "BASE",
            FamilyTag::SharpS => "SHARP_S",
            FamilyTag::Ex41 => "EX_4_1",
            FamilyTag::Ex42 => "EX_4_2",
            FamilyTag::Ex43 => "EX_4_3",
        }
    }
}

/// Family members of genus `g` on `<a; b>`, keyed by gap set. Earlier
/// entries win: `BASE`, then `SHARP_S`, then the explicit families.
pub fn family_members(p: &TwoGenParams, g: u64) -> Result<HashMap<Vec<u64>, FamilyTag>> {
    let mut tags = HashMap::new();
    let mut add = |h: NumericalSemigroup, tag| {
        if h.genus() == g {
            tags.entry(h.gaps().to_vec()).or_insert(tag);
        }
    };
    add(p.semigroup()?, FamilyTag::Base);
    add(sharp_semigroup(p)?, FamilyTag::SharpS);
    let n = p.n;
    match (p.a, p.r) {
        (4, 1) if n >= 2 && g <= 6 * n && 6 * n - g < 2 * n => {
            add(family_4_1(n, 6 * n - g)?, FamilyTag::Ex41);
        }
        (5, 1) if n >= 4 => {
            for (m, m_prime) in (0..=4 * n + 1).cartesian_product(0..=3 * n + 1) {
                if let Ok(h) = family_4_2(n, m, m_prime) {
                    add(h, FamilyTag::Ex42);
                }
            }
        }
        (6, 1) if n >= 2 => add(family_4_3(n)?, FamilyTag::Ex43),
        _ => {}
    }
    Ok(tags)
}

/// One enumerated semigroup with its verdict and family label.
///
/// `verdict` is `None` only when the hypotheses cannot be read off the
/// semigroup (possible with the hypothesis filter off); `note` says why.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub semigroup: NumericalSemigroup,
    pub verdict: Option<Verdict>,
    pub family_tag: Option<FamilyTag>,
    pub note: Option<String>,
}

impl CensusRow {
    pub fn kind(&self) -> Option<VerdictKind> {
        self.verdict.as_ref().map(|v| v.kind)
    }
}

/// Enumerates, classifies and tags every semigroup of genus `g` on `<a; b>`.
pub fn census_classify(
    p: &TwoGenParams,
    g: u64,
    require_hypotheses: bool,
) -> Result<Vec<CensusRow>> {
    let list = enumerate_containing(p, g, require_hypotheses)?;
    let tags = family_members(p, g)?;
    Ok(list
        .into_par_iter()
        .map(|h| {
            let family_tag = tags.get(h.gaps()).copied();
            let (verdict, note) = match classify(&h) {
                Ok(v) => (Some(v), None),
                Err(e) => (None, Some(e.to_string())),
            };
            CensusRow {
                semigroup: h,
                verdict,
                family_tag,
                note,
            }
        })
        .collect())
}

/// The residue of the genus of `<3; 3n+1>` modulo 3 against the printed
/// claim that the at-most-once trigonal semigroup has `g ≡ 1 (mod 3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TrigonalResidue {
    pub n: u64,
    pub genus: u64,
    pub computed_residue: u64,
    pub printed_residue: u64,
    pub verdict: VerdictKind,
    pub agrees: bool,
}

pub fn trigonal_residue_report(n: u64) -> Result<TrigonalResidue> {
    let h = TwoGenParams::new(3, 3 * n + 1)?.semigroup()?;
    let genus = h.genus();
    let computed_residue = genus % 3;
    Ok(TrigonalResidue {
        n,
        genus,
        computed_residue,
        printed_residue: 1,
        verdict: classify(&h)?.kind,
        agrees: computed_residue == 1,
    })
}
