//! Classification of a candidate semigroup as occurring at most once.
//!
//! An at-most-once conclusion always has two parts:
//!
//! 1. *pencil uniqueness*: `|aP|` is the only base-point-free `g^1_a` on any
//!    curve carrying the semigroup ([`RuleId::LemmaXPencil`],
//!    [`RuleId::Prop1`], [`RuleId::Prop2Bound`]);
//! 2. *same-pencil exclusion*: no second point `Q` with `aQ ∈ |aP|` has the
//!    same semigroup ([`RuleId::Cor2Genus`], [`RuleId::CorYTrivial`]).
//!
//! [`RuleId::TheoremA`], [`RuleId::Cor7`] and [`RuleId::Cor10`] settle both
//! parts at once. Independently, two constructions certify that a semigroup
//! occurs more than once ([`RuleId::KnownMultipleFullGenus`],
//! [`RuleId::KnownMultipleS`]). Everything else is [`VerdictKind::Undetermined`]:
//! the criteria are sufficient, never necessary.

use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::params::{standing_hypotheses_check, HypothesesReport, TwoGenParams};
use crate::pencil::{sharp_semigroup, trivial_new_nongaps};
use crate::semigroup::NumericalSemigroup;

/// Exact rational used for the bound comparisons.
pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RuleId {
    #[serde(rename = "THEOREM_A")]
    TheoremA,
    #[serde(rename = "LEMMA_X_PENCIL")]
    LemmaXPencil,
    #[serde(rename = "PROP_1")]
    Prop1,
    #[serde(rename = "PROP_2_BOUND")]
    Prop2Bound,
    #[serde(rename = "COR_2_GENUS")]
    Cor2Genus,
    #[serde(rename = "COR_Y_TRIVIAL")]
    CorYTrivial,
    #[serde(rename = "COR_7")]
    Cor7,
    #[serde(rename = "COR_10")]
    Cor10,
    #[serde(rename = "KNOWN_MULTIPLE_FULL_GENUS")]
    KnownMultipleFullGenus,
    #[serde(rename = "KNOWN_MULTIPLE_S")]
    KnownMultipleS,
}

impl RuleId {
    pub const ALL: [RuleId; 10] = [
        RuleId::TheoremA,
        RuleId::LemmaXPencil,
        RuleId::Prop1,
        RuleId::Prop2Bound,
        RuleId::Cor2Genus,
        RuleId::CorYTrivial,
        RuleId::Cor7,
        RuleId::Cor10,
        RuleId::KnownMultipleFullGenus,
        RuleId::KnownMultipleS,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::TheoremA => "THEOREM_A",
            RuleId::LemmaXPencil => "LEMMA_X_PENCIL",
            RuleId::Prop1 => "PROP_1",
            RuleId::Prop2Bound => "PROP_2_BOUND",
            RuleId::Cor2Genus => "COR_2_GENUS",
            RuleId::CorYTrivial => "COR_Y_TRIVIAL",
            RuleId::Cor7 => "COR_7",
            RuleId::Cor10 => "COR_10",
            RuleId::KnownMultipleFullGenus => "KNOWN_MULTIPLE_FULL_GENUS",
            RuleId::KnownMultipleS => "KNOWN_MULTIPLE_S",
        }
    }

    fn is_pencil(self) -> bool {
        matches!(
            self,
            RuleId::LemmaXPencil | RuleId::Prop1 | RuleId::Prop2Bound
        )
    }

    fn is_same_pencil(self) -> bool {
        matches!(self, RuleId::Cor2Genus | RuleId::CorYTrivial)
    }

    fn is_both_axes(self) -> bool {
        matches!(self, RuleId::TheoremA | RuleId::Cor7 | RuleId::Cor10)
    }

    fn is_known_multiple(self) -> bool {
        matches!(
            self,
            RuleId::KnownMultipleFullGenus | RuleId::KnownMultipleS
        )
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    Established,
    Failed,
    NotApplicable,
}

fn ser_rational<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

/// One piece of evidence behind a rule outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "fact", rename_all = "snake_case")]
pub enum Fact {
    /// `witness ∉ H` refutes the divisor progression for divisor `e`.
    DivisorWitness { divisor: u64, witness: u64 },
    /// Every `(a/e - 1)a + i·e`, `i >= 1`, is a member.
    DivisorUnrefuted { divisor: u64, start: u64 },
    /// Strict comparison `genus > bound` (for the divisor, when relevant).
    GenusVsBound {
        divisor: Option<u64>,
        genus: u64,
        #[serde(serialize_with = "ser_rational")]
        bound: Rational,
        exceeds: bool,
    },
    /// A trivial new non-gap absent from `H`.
    MissingNonGap { value: u64 },
    /// `H` contains every listed value.
    ContainsAll { values: Vec<u64> },
    /// A named boolean hypothesis.
    Condition { name: String, holds: bool },
}

impl Fact {
    fn condition(name: impl Into<String>, holds: bool) -> Self {
        Fact::Condition {
            name: name.into(),
            holds,
        }
    }

    fn genus_vs(divisor: Option<u64>, genus: u64, bound: Rational) -> Self {
        Fact::GenusVsBound {
            divisor,
            genus,
            bound,
            exceeds: Rational::from_integer(genus as i128) > bound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionOutcome {
    pub rule: RuleId,
    pub status: Status,
    pub evidence: Vec<Fact>,
}

impl CriterionOutcome {
    fn new(rule: RuleId, status: Status, evidence: Vec<Fact>) -> Self {
        debug_assert!(!evidence.is_empty());
        CriterionOutcome {
            rule,
            status,
            evidence,
        }
    }

    fn from_bool(rule: RuleId, established: bool, evidence: Vec<Fact>) -> Self {
        let status = if established {
            Status::Established
        } else {
            Status::Failed
        };
        Self::new(rule, status, evidence)
    }

    fn not_applicable(rule: RuleId, evidence: Vec<Fact>) -> Self {
        Self::new(rule, Status::NotApplicable, evidence)
    }

    pub fn is_established(&self) -> bool {
        self.status == Status::Established
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum VerdictKind {
    AtMostOnce,
    KnownMultiple,
    Undetermined,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictKind::AtMostOnce => "AtMostOnce",
            VerdictKind::KnownMultiple => "KnownMultiple",
            VerdictKind::Undetermined => "Undetermined",
        })
    }
}

/// Whether the verdict was computed from a concrete semigroup or from
/// `(a, b, g)` alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Concrete,
    Bounds,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub mode: Mode,
    pub hypotheses: HypothesesReport,
    pub outcomes: Vec<CriterionOutcome>,
}

impl Verdict {
    fn assemble(
        mode: Mode,
        hypotheses: HypothesesReport,
        mut outcomes: Vec<CriterionOutcome>,
    ) -> Self {
        outcomes.sort_by_key(|o| o.rule);
        let established =
            |pred: fn(RuleId) -> bool| outcomes.iter().any(|o| pred(o.rule) && o.is_established());
        let at_most_once = (established(RuleId::is_pencil) && established(RuleId::is_same_pencil))
            || established(RuleId::is_both_axes);
        let known_multiple = established(RuleId::is_known_multiple);
        assert!(
            !(at_most_once && known_multiple),
            "at-most-once and known-multiple both established: {outcomes:?}"
        );
        let kind = if known_multiple {
            VerdictKind::KnownMultiple
        } else if at_most_once {
            VerdictKind::AtMostOnce
        } else {
            VerdictKind::Undetermined
        };
        Verdict {
            kind,
            mode,
            hypotheses,
            outcomes,
        }
    }

    pub fn outcome(&self, rule: RuleId) -> Option<&CriterionOutcome> {
        self.outcomes.iter().find(|o| o.rule == rule)
    }

    pub fn established_rules(&self) -> impl Iterator<Item = RuleId> + '_ {
        self.outcomes
            .iter()
            .filter(|o| o.is_established())
            .map(|o| o.rule)
    }

    /// Pencil axis established by a dedicated pencil rule.
    pub fn pencil_axis(&self) -> bool {
        self.established_rules().any(RuleId::is_pencil)
    }

    /// Same-pencil exclusion established by a dedicated rule.
    pub fn same_pencil_axis(&self) -> bool {
        self.established_rules().any(RuleId::is_same_pencil)
    }
}

/// Proper divisors of `a` (including 1, excluding `a`), ascending.
pub fn proper_divisors(a: u64) -> Vec<u64> {
    (1..a).filter(|e| a.is_multiple_of(*e)).collect()
}

fn is_prime(a: u64) -> bool {
    a >= 2
        && (2..)
            .take_while(|d| d * d <= a)
            .all(|d| !a.is_multiple_of(d))
}

/// The uniqueness bound for divisor `e`:
/// `(a-1)(b-1)/2 - (an - ne - a/e + 2)(an - ne - a/e + 1) / (2ne)`.
pub fn prop2_bound(p: &TwoGenParams, e: u64) -> Rational {
    assert!(
        e >= 1 && e < p.a && p.a.is_multiple_of(e),
        "e = {e} is not a proper divisor of {}",
        p.a
    );
    let (a, n, e) = (p.a as i128, p.n as i128, e as i128);
    let full = Rational::new((a - 1) * (p.b as i128 - 1), 2);
    let x = a * n - n * e - a / e + 2;
    full - Rational::new(x * (x - 1), 2 * n * e)
}

/// A concrete semigroup together with the data every rule reads off it.
#[derive(Debug, Clone)]
pub struct Candidate<'a> {
    pub semigroup: &'a NumericalSemigroup,
    pub hypotheses: HypothesesReport,
    pub params: TwoGenParams,
    base: NumericalSemigroup,
}

impl<'a> Candidate<'a> {
    pub fn new(h: &'a NumericalSemigroup) -> Result<Self> {
        let hypotheses = standing_hypotheses_check(h)?;
        let params = hypotheses.params();
        Ok(Candidate {
            semigroup: h,
            hypotheses,
            params,
            base: params.semigroup()?,
        })
    }

    fn genus(&self) -> u64 {
        self.semigroup.genus()
    }

    fn at_full_genus(&self) -> bool {
        self.genus() == self.params.full_genus()
    }

    fn dim_fact(&self) -> Fact {
        Fact::condition("dim_condition", self.hypotheses.dim_condition_holds)
    }

    /// Divisor progression for one divisor: the smallest non-member of
    /// `(a/e - 1)a + i·e`, `i >= 1`, if any.
    fn lemma_x_witness(&self, e: u64) -> Option<u64> {
        let a = self.params.a;
        let start = (a / e - 1) * a;
        let h = self.semigroup;
        (1..)
            .map(|i| start + i * e)
            .take_while(|&x| x < h.conductor())
            .find(|&x| !h.contains(x))
    }

    pub fn classify(&self) -> Verdict {
        let mut outcomes = vec![
            check_theorem_a(self),
            check_pencil_lemma_x(self),
            check_prop1(self),
            check_prop2(self),
            check_cor2(self),
            check_cor_y(self),
            check_cor7(self),
            check_cor10(self),
        ];
        outcomes.extend(check_known_multiple(self));
        Verdict::assemble(Mode::Concrete, self.hypotheses, outcomes)
    }
}

/// Runs every rule on `h`.
pub fn classify(h: &NumericalSemigroup) -> Result<Verdict> {
    Ok(Candidate::new(h)?.classify())
}

/// `H = <a; b>` with `b >= a + 2` and `r <= a - 2`.
pub fn check_theorem_a(c: &Candidate) -> CriterionOutcome {
    let p = &c.params;
    let full = Fact::condition("full_genus", c.at_full_genus());
    if !c.at_full_genus() {
        return CriterionOutcome::not_applicable(RuleId::TheoremA, vec![full]);
    }
    let wide = p.b >= p.a + 2;
    let residue = p.r + 2 <= p.a;
    CriterionOutcome::from_bool(
        RuleId::TheoremA,
        wide && residue,
        vec![
            full,
            Fact::condition("b >= a+2", wide),
            Fact::condition("r <= a-2", residue),
        ],
    )
}

/// Pencil test: for every proper divisor `e` of `a` some
/// `(a/e - 1)a + i·e` must be a gap.
pub fn check_pencil_lemma_x(c: &Candidate) -> CriterionOutcome {
    let a = c.params.a;
    let mut all_refuted = true;
    let evidence = proper_divisors(a)
        .into_iter()
        .map(|e| match c.lemma_x_witness(e) {
            Some(witness) => Fact::DivisorWitness {
                divisor: e,
                witness,
            },
            None => {
                all_refuted = false;
                Fact::DivisorUnrefuted {
                    divisor: e,
                    start: (a / e - 1) * a,
                }
            }
        })
        .collect();
    CriterionOutcome::from_bool(RuleId::LemmaXPencil, all_refuted, evidence)
}

/// `H = <a; b>` at full genus with `b != a + 1`.
pub fn check_prop1(c: &Candidate) -> CriterionOutcome {
    let p = &c.params;
    let full = c.at_full_genus();
    let wide = p.b >= p.a + 2;
    let evidence = vec![
        Fact::condition("full_genus", full),
        Fact::condition("b >= a+2", wide),
    ];
    if full && wide {
        CriterionOutcome::new(RuleId::Prop1, Status::Established, evidence)
    } else {
        CriterionOutcome::not_applicable(RuleId::Prop1, evidence)
    }
}

fn prop2_outcome(p: &TwoGenParams, genus: u64) -> CriterionOutcome {
    let evidence: Vec<Fact> = proper_divisors(p.a)
        .into_iter()
        .map(|e| Fact::genus_vs(Some(e), genus, prop2_bound(p, e)))
        .collect();
    let all = evidence
        .iter()
        .all(|f| matches!(f, Fact::GenusVsBound { exceeds: true, .. }));
    CriterionOutcome::from_bool(RuleId::Prop2Bound, all, evidence)
}

/// `g > prop2_bound(e)` for every proper divisor `e`.
pub fn check_prop2(c: &Candidate) -> CriterionOutcome {
    prop2_outcome(&c.params, c.genus())
}

fn threshold_fact(p: &TwoGenParams, genus: u64) -> Fact {
    Fact::genus_vs(
        None,
        genus,
        Rational::from_integer(p.same_pencil_threshold() as i128),
    )
}

/// With the window condition, `g > (a-1)(b-a+r)/2`.
pub fn check_cor2(c: &Candidate) -> CriterionOutcome {
    if !c.hypotheses.dim_condition_holds {
        return CriterionOutcome::not_applicable(RuleId::Cor2Genus, vec![c.dim_fact()]);
    }
    let g = c.genus();
    CriterionOutcome::from_bool(
        RuleId::Cor2Genus,
        g > c.params.same_pencil_threshold(),
        vec![c.dim_fact(), threshold_fact(&c.params, g)],
    )
}

/// With the window condition, some trivial new non-gap of the `(a-r; a)`
/// cusp is missing from `H`.
pub fn check_cor_y(c: &Candidate) -> CriterionOutcome {
    if !c.hypotheses.dim_condition_holds {
        return CriterionOutcome::not_applicable(RuleId::CorYTrivial, vec![c.dim_fact()]);
    }
    let trivial = trivial_new_nongaps(&c.params, c.params.default_mu())
        .expect("a - r is coprime to a whenever b is");
    match trivial.values.iter().find(|&&v| !c.semigroup.contains(v)) {
        Some(&value) => CriterionOutcome::new(
            RuleId::CorYTrivial,
            Status::Established,
            vec![c.dim_fact(), Fact::MissingNonGap { value }],
        ),
        None => CriterionOutcome::new(
            RuleId::CorYTrivial,
            Status::Failed,
            vec![
                c.dim_fact(),
                Fact::ContainsAll {
                    values: trivial.values.into_iter().collect(),
                },
            ],
        ),
    }
}

/// `a` prime, `b > 3a`, no member outside `<a; b>` below `(n+1)a`, and
/// `g > (a-1)(b-a+r)/2`.
pub fn check_cor7(c: &Candidate) -> CriterionOutcome {
    let p = &c.params;
    let prime = is_prime(p.a);
    let large_b = p.b > 3 * p.a;
    let no_early_extra = c
        .semigroup
        .members_up_to((p.n + 1) * p.a - 1)
        .all(|x| c.base.contains(x));
    let mut evidence = vec![
        Fact::condition("a prime", prime),
        Fact::condition("b > 3a", large_b),
        Fact::condition("no member outside <a;b> below (n+1)a", no_early_extra),
    ];
    if !(prime && large_b && no_early_extra) {
        return CriterionOutcome::not_applicable(RuleId::Cor7, evidence);
    }
    let g = c.genus();
    evidence.push(threshold_fact(p, g));
    CriterionOutcome::from_bool(RuleId::Cor7, g > p.same_pencil_threshold(), evidence)
}

/// Window condition, `b > (a/2)^2`, `g > (a-1)(b-a+r)/2`, and the `e = 1`
/// branch of the divisor test refuted (the `(a/2)^2` estimate only covers `e >= 2`).
pub fn check_cor10(c: &Candidate) -> CriterionOutcome {
    let p = &c.params;
    let large_b = 4 * p.b > p.a * p.a;
    let mut evidence = vec![c.dim_fact(), Fact::condition("b > (a/2)^2", large_b)];
    if !(c.hypotheses.dim_condition_holds && large_b) {
        return CriterionOutcome::not_applicable(RuleId::Cor10, evidence);
    }
    let g = c.genus();
    let above = g > p.same_pencil_threshold();
    evidence.push(threshold_fact(p, g));
    let e1 = c.lemma_x_witness(1);
    evidence.push(match e1 {
        Some(witness) => Fact::DivisorWitness {
            divisor: 1,
            witness,
        },
        None => Fact::DivisorUnrefuted {
            divisor: 1,
            start: (p.a - 1) * p.a,
        },
    });
    CriterionOutcome::from_bool(RuleId::Cor10, above && e1.is_some(), evidence)
}

/// `[KNOWN_MULTIPLE_FULL_GENUS, KNOWN_MULTIPLE_S]`.
///
/// Full genus with `b = a + 1` or `r = a - 1`; or `H` equal to the sharp
/// semigroup at genus `(a-1)(b-a+r)/2` under the window condition.
pub fn check_known_multiple(c: &Candidate) -> [CriterionOutcome; 2] {
    let p = &c.params;
    [known_multiple_full(p, c.genus()), known_multiple_sharp(c)]
}

fn known_multiple_full(p: &TwoGenParams, genus: u64) -> CriterionOutcome {
    let full = genus == p.full_genus();
    let plane = p.b == p.a + 1;
    let last_residue = p.r + 1 == p.a;
    let evidence = vec![
        Fact::condition("full_genus", full),
        Fact::condition("b = a+1", plane),
        Fact::condition("r = a-1", last_residue),
    ];
    if !full {
        return CriterionOutcome::not_applicable(RuleId::KnownMultipleFullGenus, evidence);
    }
    CriterionOutcome::from_bool(
        RuleId::KnownMultipleFullGenus,
        plane || last_residue,
        evidence,
    )
}

fn known_multiple_sharp(c: &Candidate) -> CriterionOutcome {
    let p = &c.params;
    let at_threshold = c.genus() == p.same_pencil_threshold();
    let mut evidence = vec![
        c.dim_fact(),
        Fact::condition("genus = (a-1)(b-a+r)/2", at_threshold),
    ];
    if !(c.hypotheses.dim_condition_holds && at_threshold) {
        return CriterionOutcome::not_applicable(RuleId::KnownMultipleS, evidence);
    }
    let sharp = sharp_semigroup(p).expect("the sharp semigroup is always closed");
    let equal = &sharp == c.semigroup;
    evidence.push(Fact::condition("H = <a;b> ∪ trivial new non-gaps", equal));
    CriterionOutcome::from_bool(RuleId::KnownMultipleS, equal, evidence)
}

/// Classification from `(a, b, g)` alone, assuming the standing hypotheses.
///
/// Only the rules that need nothing beyond the genus are evaluated:
/// `PROP_1`, `PROP_2_BOUND`, `COR_2_GENUS`, `COR_10` and
/// `KNOWN_MULTIPLE_FULL_GENUS`.
pub fn classify_bounds(a: u64, b: u64, genus: u64) -> Result<Verdict> {
    let p = TwoGenParams::new(a, b)?;
    let full_genus = p.full_genus();
    if genus > full_genus {
        return Err(Error::GenusTooLarge {
            a,
            b,
            genus,
            full_genus,
        });
    }
    let hypotheses = HypothesesReport {
        a,
        b,
        n: p.n,
        r: p.r,
        dim_condition_holds: true,
        assumed: true,
    };
    let full = genus == full_genus;
    let wide = b >= a + 2;
    let prop1_evidence = vec![
        Fact::condition("full_genus", full),
        Fact::condition("b >= a+2", wide),
    ];
    let prop1 = if full && wide {
        CriterionOutcome::new(RuleId::Prop1, Status::Established, prop1_evidence)
    } else {
        CriterionOutcome::not_applicable(RuleId::Prop1, prop1_evidence)
    };
    let cor2 = CriterionOutcome::from_bool(
        RuleId::Cor2Genus,
        genus > p.same_pencil_threshold(),
        vec![
            Fact::condition("dim_condition (assumed)", true),
            threshold_fact(&p, genus),
        ],
    );

    // If every integer past (a-1)a were a member, all gaps would be gaps of
    // <a; b> below a^2 - a + 1.
    let large_b = 4 * b > a * a;
    let cor10 = if large_b {
        let base = p.semigroup()?;
        let cap = base.gaps().iter().filter(|&&x| x <= (a - 1) * a).count() as u64;
        let e1_refuted = genus > cap;
        CriterionOutcome::from_bool(
            RuleId::Cor10,
            genus > p.same_pencil_threshold() && e1_refuted,
            vec![
                Fact::condition("b > (a/2)^2", true),
                threshold_fact(&p, genus),
                Fact::genus_vs(Some(1), genus, Rational::from_integer(cap as i128)),
            ],
        )
    } else {
        CriterionOutcome::not_applicable(RuleId::Cor10, vec![Fact::condition("b > (a/2)^2", false)])
    };

    let outcomes = vec![
        prop1,
        prop2_outcome(&p, genus),
        cor2,
        cor10,
        known_multiple_full(&p, genus),
    ];
    Ok(Verdict::assemble(Mode::Bounds, hypotheses, outcomes))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn params(a: u64, b: u64) -> TwoGenParams {
        TwoGenParams::new(a, b).unwrap()
    }

    #[test]
    fn lemma_x_examples() {
        let h = sg(&[4, 9]);
        let c = Candidate::new(&h).unwrap();
        let o = check_pencil_lemma_x(&c);
        assert_eq!(o.status, Status::Established);
        assert_eq!(
            o.evidence,
            vec![
                Fact::DivisorWitness {
                    divisor: 1,
                    witness: 14
                },
                Fact::DivisorWitness {
                    divisor: 2,
                    witness: 6
                },
            ]
        );

        let h = sg(&[4, 5]);
        let o = check_pencil_lemma_x(&Candidate::new(&h).unwrap());
        assert_eq!(o.status, Status::Failed);
        assert!(o.evidence.contains(&Fact::DivisorUnrefuted {
            divisor: 1,
            start: 12
        }));

        for g in 2..10 {
            let h = sg(&[2, 2 * g + 1]);
            let o = check_pencil_lemma_x(&Candidate::new(&h).unwrap());
            assert_eq!(o.status, Status::Established);
            assert_eq!(
                o.evidence,
                vec![Fact::DivisorWitness {
                    divisor: 1,
                    witness: 3
                }]
            );
        }
    }

    #[test]
    fn prop1_examples() {
        let h = sg(&[4, 9]);
        assert_eq!(
            check_prop1(&Candidate::new(&h).unwrap()).status,
            Status::Established
        );
        let h = sg(&[4, 5]);
        assert_eq!(
            check_prop1(&Candidate::new(&h).unwrap()).status,
            Status::NotApplicable
        );
        let h = sg(&[4, 9]).union_with([14, 19, 23]).unwrap();
        assert_eq!(
            check_prop1(&Candidate::new(&h).unwrap()).status,
            Status::NotApplicable
        );
    }

    #[test]
    fn prop2_bound_values() {
        assert_eq!(prop2_bound(&params(5, 11), 1), Rational::from_integer(15));
        assert_eq!(prop2_bound(&params(4, 9), 2), Rational::new(21, 2));
        assert_eq!(prop2_bound(&params(4, 9), 1), Rational::from_integer(9));
        assert_eq!(prop2_bound(&params(4, 9), 2).to_string(), "21/2");
    }

    #[test]
    fn prop2_examples() {
        let h = sg(&[4, 9]);
        assert_eq!(
            check_prop2(&Candidate::new(&h).unwrap()).status,
            Status::Established
        );
        assert_eq!(prop2_outcome(&params(5, 11), 15).status, Status::Failed);
        assert_eq!(
            prop2_outcome(&params(5, 11), 16).status,
            Status::Established
        );
    }

    #[test]
    fn cor2_examples() {
        let h = sg(&[4, 9]);
        let o = check_cor2(&Candidate::new(&h).unwrap());
        assert_eq!(o.status, Status::Established);
        let s = h.union_with([14, 19, 23]).unwrap();
        assert_eq!(
            check_cor2(&Candidate::new(&s).unwrap()).status,
            Status::Failed
        );
        let wide = sg(&[4, 9, 10]);
        assert_eq!(
            check_cor2(&Candidate::new(&wide).unwrap()).status,
            Status::NotApplicable
        );
    }

    #[test]
    fn cor_y_examples() {
        let h = sg(&[4, 9]);
        let o = check_cor_y(&Candidate::new(&h).unwrap());
        assert_eq!(o.status, Status::Established);
        assert!(o.evidence.contains(&Fact::MissingNonGap { value: 14 }));

        let s = h.union_with([14, 19, 23]).unwrap();
        assert_eq!(
            check_cor_y(&Candidate::new(&s).unwrap()).status,
            Status::Failed
        );

        // <4;9> ∪ {19, 23} is closed and still misses 14.
        let v = h.union_with([19, 23]).unwrap();
        let o = check_cor_y(&Candidate::new(&v).unwrap());
        assert_eq!(o.status, Status::Established);
        assert!(o.evidence.contains(&Fact::MissingNonGap { value: 14 }));
    }

    #[test]
    fn cor7_cor10_examples() {
        // a = 5, b = 21: threshold 4·17/2 = 34.
        let p = params(5, 21);
        assert_eq!(p.same_pencil_threshold(), 34);
        let base = p.semigroup().unwrap();
        // Promote the largest gaps (Frobenius first) to drop the genus.
        let mut h = base.clone();
        while h.genus() > 35 {
            let f = h.frobenius().unwrap();
            h = h.union_with([f]).unwrap();
        }
        let c = Candidate::new(&h).unwrap();
        assert_eq!(check_cor7(&c).status, Status::Established);
        let h34 = h.union_with([h.frobenius().unwrap()]).unwrap();
        assert_eq!(h34.genus(), 34);
        assert_eq!(
            check_cor7(&Candidate::new(&h34).unwrap()).status,
            Status::Failed
        );

        let h = sg(&[4, 9]);
        assert_eq!(
            check_cor7(&Candidate::new(&h).unwrap()).status,
            Status::NotApplicable
        );

        let h = sg(&[6, 13]);
        let o = check_cor10(&Candidate::new(&h).unwrap());
        assert_ne!(o.status, Status::NotApplicable);
        assert_eq!(o.status, Status::Established);
    }

    #[test]
    fn known_multiple_examples() {
        let s = sg(&[4, 9]).union_with([14, 19, 23]).unwrap();
        let [full, sharp] = check_known_multiple(&Candidate::new(&s).unwrap());
        assert_eq!(full.status, Status::NotApplicable);
        assert_eq!(sharp.status, Status::Established);

        for n in 1..6 {
            let h = sg(&[3, 3 * n + 2]);
            let [full, _] = check_known_multiple(&Candidate::new(&h).unwrap());
            assert_eq!(full.status, Status::Established);
        }
        let h = sg(&[4, 5]);
        let [full, _] = check_known_multiple(&Candidate::new(&h).unwrap());
        assert_eq!(full.status, Status::Established);
    }

    #[test]
    fn classify_examples() {
        let v = classify(&sg(&[4, 9])).unwrap();
        assert_eq!(v.kind, VerdictKind::AtMostOnce);
        assert_eq!(v.outcomes.len(), RuleId::ALL.len());
        assert!(v.outcomes.iter().map(|o| o.rule).eq(RuleId::ALL));

        let s = sg(&[4, 9]).union_with([14, 19, 23]).unwrap();
        assert_eq!(classify(&s).unwrap().kind, VerdictKind::KnownMultiple);

        for n in 2..8 {
            assert_eq!(
                classify(&sg(&[3, 3 * n + 2])).unwrap().kind,
                VerdictKind::KnownMultiple
            );
            assert_eq!(
                classify(&sg(&[3, 3 * n + 1])).unwrap().kind,
                VerdictKind::AtMostOnce
            );
        }
        assert_eq!(
            classify(&sg(&[4, 5])).unwrap().kind,
            VerdictKind::KnownMultiple
        );
        assert!(matches!(
            classify(&sg(&[4, 6, 9])),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn bound_mode() {
        let v = classify_bounds(4, 9, 12).unwrap();
        assert_eq!(v.kind, VerdictKind::AtMostOnce);
        assert_eq!(v.mode, Mode::Bounds);
        assert!(v.hypotheses.assumed);
        assert_eq!(
            classify_bounds(4, 5, 6).unwrap().kind,
            VerdictKind::KnownMultiple
        );
        assert!(matches!(
            classify_bounds(4, 9, 13),
            Err(Error::GenusTooLarge { .. })
        ));
        assert!(matches!(
            classify_bounds(4, 6, 3),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn helpers() {
        assert_eq!(proper_divisors(12), vec![1, 2, 3, 4, 6]);
        assert_eq!(proper_divisors(7), vec![1]);
        let primes: Vec<u64> = (0..30).filter(|&x| is_prime(x)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
