//! Numerical semigroups stored as a membership table up to the conductor.
//!
//! Every construction in this crate ends up as a bounded membership scan, so
//! the table representation is used throughout. Values are `u64`; anything
//! derived from user input goes through checked arithmetic.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest conductor we are willing to tabulate.
pub const MAX_CONDUCTOR: u64 = 1 << 24;

/// A cofinite additive submonoid of the non-negative integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    // members[x] for 0 <= x <= conductor; members[conductor] is always true.
    members: Vec<bool>,
    gaps: Vec<u64>,
    conductor: u64,
    multiplicity: u64,
}

impl NumericalSemigroup {
    /// The semigroup of all non-negative integers (genus 0, conductor 0).
    pub fn full() -> Self {
        NumericalSemigroup {
            members: vec![true],
            gaps: Vec::new(),
            conductor: 0,
            multiplicity: 1,
        }
    }

    /// Smallest additively closed set containing 0 and `gens`.
    ///
    /// Uses the Apéry set with respect to the smallest generator, computed as
    /// shortest paths over the residues modulo that generator.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let g = gens.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::NonCoprimeGenerators {
                gens: gens.to_vec(),
                gcd: g,
            });
        }
        let m = *gens.iter().min().expect("non-empty");
        if m == 1 {
            return Ok(Self::full());
        }
        if m > MAX_CONDUCTOR {
            return Err(Error::ConductorTooLarge(m));
        }

        let modulus = m as usize;
        let mut apery = vec![u64::MAX; modulus];
        apery[0] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0u64, 0usize)));
        while let Some(Reverse((dist, res))) = heap.pop() {
            if dist > apery[res] {
                continue;
            }
            for &gen in gens {
                let next = dist.checked_add(gen).ok_or(Error::Overflow)?;
                let r = (next % m) as usize;
                if next < apery[r] {
                    apery[r] = next;
                    heap.push(Reverse((next, r)));
                }
            }
        }

        let frobenius_plus_m = *apery.iter().max().expect("non-empty");
        let conductor = frobenius_plus_m + 1 - m;
        if conductor > MAX_CONDUCTOR {
            return Err(Error::ConductorTooLarge(conductor));
        }
        let members = (0..=conductor)
            .map(|x| x >= apery[(x % m) as usize])
            .collect();
        Ok(Self::from_table(members))
    }

    /// The semigroup whose gap set is exactly `gapset`.
    ///
    /// Fails with [`Error::NotClosed`] carrying the first witness pair
    /// `s <= t` (ascending) whose sum is a gap.
    pub fn from_gaps<I: IntoIterator<Item = u64>>(gapset: I) -> Result<Self> {
        let gaps: BTreeSet<u64> = gapset.into_iter().collect();
        if gaps.contains(&0) {
            return Err(Error::ZeroGap);
        }
        let conductor = match gaps.iter().next_back() {
            None => return Ok(Self::full()),
            Some(&f) => f + 1,
        };
        if conductor > MAX_CONDUCTOR {
            return Err(Error::ConductorTooLarge(conductor));
        }
        let mut members = vec![true; conductor as usize + 1];
        for &x in &gaps {
            members[x as usize] = false;
        }
        if let Some((s, t)) = closure_witness(&members) {
            return Err(Error::NotClosed { s, t });
        }
        Ok(Self::from_table(members))
    }

    /// Builds from a table already known to be closed; trims trailing members
    /// so the last entry sits at the conductor.
    pub(crate) fn from_table(mut members: Vec<bool>) -> Self {
        debug_assert!(members.first().copied().unwrap_or(false));
        let conductor = match members.iter().rposition(|&m| !m) {
            None => 0,
            Some(f) => f + 1,
        };
        members.truncate(conductor + 1);
        members.resize(conductor + 1, true);
        let gaps: Vec<u64> = members
            .iter()
            .enumerate()
            .filter(|(_, &m)| !m)
            .map(|(x, _)| x as u64)
            .collect();
        let multiplicity = members
            .iter()
            .skip(1)
            .position(|&m| m)
            .map(|p| p as u64 + 1)
            .unwrap_or(1);
        NumericalSemigroup {
            members,
            gaps,
            conductor: conductor as u64,
            multiplicity,
        }
    }

    /// True iff `x` is a member. Everything at or above the conductor is.
    #[inline]
    pub fn contains(&self, x: u64) -> bool {
        x >= self.conductor || self.members[x as usize]
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Largest gap, `None` for the full semigroup.
    pub fn frobenius(&self) -> Option<u64> {
        self.gaps.last().copied()
    }

    /// Smallest positive member.
    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// Smallest member not divisible by the multiplicity, `None` at genus 0.
    pub fn second_generator(&self) -> Option<u64> {
        if self.genus() == 0 {
            return None;
        }
        let a = self.multiplicity;
        (a + 1..=self.conductor + a).find(|&x| x % a != 0 && self.contains(x))
    }

    /// Members in `[0, bound]`.
    pub fn members_up_to(&self, bound: u64) -> impl Iterator<Item = u64> + '_ {
        (0..=bound).filter(move |&x| self.contains(x))
    }

    /// Members strictly between `lo` and `hi`.
    pub fn members_between(&self, lo: u64, hi: u64) -> impl Iterator<Item = u64> + '_ {
        (lo.saturating_add(1)..hi).filter(move |&x| self.contains(x))
    }

    /// `self ⊇ other`.
    pub fn is_superset_of(&self, other: &NumericalSemigroup) -> bool {
        self.gaps.iter().all(|&x| !other.contains(x))
    }

    /// The semigroup with membership `self ∪ extra`, if that set is closed.
    pub fn union_with<I: IntoIterator<Item = u64>>(&self, extra: I) -> Result<Self> {
        let extra: BTreeSet<u64> = extra.into_iter().collect();
        if extra.is_empty() {
            return Ok(self.clone());
        }
        Self::from_gaps(self.gaps.iter().copied().filter(|x| !extra.contains(x)))
    }

    /// Checks additive closure over the stored table (always true for values
    /// built through the public constructors).
    pub fn is_closed(&self) -> bool {
        closure_witness(&self.members).is_none()
    }
}

/// First `(s, t)` with `s <= t` members and `s + t` a non-member inside the
/// table, scanning `s` then `t` ascending.
pub(crate) fn closure_witness(members: &[bool]) -> Option<(u64, u64)> {
    if closed_by_apery(members) {
        return None;
    }
    let len = members.len();
    for s in 1..len {
        if !members[s] {
            continue;
        }
        for t in s..len - s {
            if members[t] && !members[s + t] {
                return Some((s as u64, t as u64));
            }
        }
    }
    None
}

/// O(c + m^2) closure test: the members are closed under `+m` and the
/// minimal members `w_i` of each residue class mod `m` satisfy
/// `w_i + w_j ∈ H`.
fn closed_by_apery(members: &[bool]) -> bool {
    let len = members.len();
    let is_member = |x: usize| x >= len || members[x];
    let m = match (1..len).find(|&x| members[x]) {
        None => return true,
        Some(m) => m,
    };
    if (1..len).any(|x| members[x] && !is_member(x + m)) {
        return false;
    }
    let mut apery = vec![usize::MAX; m];
    for x in 0..len + m {
        if is_member(x) && apery[x % m] == usize::MAX {
            apery[x % m] = x;
        }
    }
    (0..m).all(|i| (i..m).all(|j| is_member(apery[i] + apery[j])))
}

impl fmt::Display for NumericalSemigroup {
    /// Canonical form `genus=<g>; gaps=<ascending, comma-separated>;`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "genus={}; gaps=", self.genus())?;
        for (i, g) in self.gaps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(";")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup({self})")
    }
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let rest = s.trim().strip_prefix("genus=").ok_or_else(bad)?;
        let (genus, rest) = rest.split_once("; gaps=").ok_or_else(bad)?;
        let list = rest.strip_suffix(';').ok_or_else(bad)?;
        let genus: u64 = genus.parse().map_err(|_| bad())?;
        let gaps = parse_list(list).map_err(|_| bad())?;
        let sg = Self::from_gaps(gaps)?;
        if sg.genus() != genus || sg.to_string() != s.trim() {
            return Err(bad());
        }
        Ok(sg)
    }
}

/// Parses a comma-separated list of non-negative integers (empty allowed).
pub fn parse_list(list: &str) -> std::result::Result<Vec<u64>, std::num::ParseIntError> {
    list.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("NumericalSemigroup", 5)?;
        st.serialize_field("canonical", &self.to_string())?;
        st.serialize_field("conductor", &self.conductor)?;
        st.serialize_field("gaps", &self.gaps)?;
        st.serialize_field("genus", &self.genus())?;
        st.serialize_field("multiplicity", &self.multiplicity)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            gaps: Vec<u64>,
            genus: Option<u64>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let sg = NumericalSemigroup::from_gaps(repr.gaps).map_err(de::Error::custom)?;
        match repr.genus {
            Some(g) if g != sg.genus() => Err(de::Error::custom(format!(
                "genus field {g} disagrees with {} gaps",
                sg.genus()
            ))),
            _ => Ok(sg),
        }
    }
}
