//! Evidence-combination rules.
//!
//! All three rules start from the conjunctive products `m_A(X)·m_B(Y)`
//! accumulated on `X ∩ Y`. They differ in what happens to the products that
//! land on the empty set:
//!
//! * [`dempster`] discards them and rescales the rest by `1 / (1 - K)`;
//! * [`smets`] keeps them as mass on `∅` (the open-world reading);
//! * [`pcr5`] hands each conflicting product back to the two sets that
//!   produced it, in proportion to their masses.

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::mass::BodyOfEvidence;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Dempster,
    Smets,
    Pcr5,
}

impl Rule {
    pub const ALL: [Rule; 3] = [Rule::Dempster, Rule::Smets, Rule::Pcr5];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Dempster => "dempster",
            Rule::Smets => "smets",
            Rule::Pcr5 => "pcr5",
        }
    }

    pub fn apply(self, a: &BodyOfEvidence, b: &BodyOfEvidence) -> Result<CombinationReport> {
        match self {
            Rule::Dempster => dempster(a, b),
            Rule::Smets => smets(a, b),
            Rule::Pcr5 => pcr5(a, b),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dempster" => Ok(Rule::Dempster),
            "smets" => Ok(Rule::Smets),
            "pcr5" => Ok(Rule::Pcr5),
            other => Err(Error::Parse(format!("unknown rule {other:?}"))),
        }
    }
}

/// Outcome of one combination.
#[derive(Debug, Clone, PartialEq)]
pub struct CombinationReport {
    pub result: BodyOfEvidence,
    /// `K`: total product mass on empty intersections.
    pub conflict_mass: f64,
    pub rule: Rule,
}

fn check_pair(a: &BodyOfEvidence, b: &BodyOfEvidence) -> Result<()> {
    a.frame().ensure_same(b.frame())?;
    a.ensure_normalized()?;
    b.ensure_normalized()
}

fn check_closed(body: &BodyOfEvidence) -> Result<()> {
    if body.is_closed_world() {
        Ok(())
    } else {
        Err(Error::OpenWorld(body.empty_mass()))
    }
}

/// Conjunctive products accumulated per intersection, `∅` included.
fn conjunctive(a: &BodyOfEvidence, b: &BodyOfEvidence) -> BTreeMap<BitSet, f64> {
    let mut acc = BTreeMap::new();
    for (x, mx) in a.raw() {
        for (y, my) in b.raw() {
            *acc.entry(x.intersection(y)).or_insert(0.0) += mx * my;
        }
    }
    acc
}

fn empty_key(body: &BodyOfEvidence) -> BitSet {
    BitSet::empty(body.frame().len())
}

/// Dempster's rule for closed-world bodies.
pub fn dempster(a: &BodyOfEvidence, b: &BodyOfEvidence) -> Result<CombinationReport> {
    check_pair(a, b)?;
    check_closed(a)?;
    check_closed(b)?;
    let mut acc = conjunctive(a, b);
    let conflict = acc.remove(&empty_key(a)).unwrap_or(0.0);
    if acc.values().all(|&m| m == 0.0) {
        return Err(Error::TotalConflict);
    }
    // 1 - K, summed from the surviving products so that rounding in K does
    // not leak into the result
    let scale: f64 = acc.values().sum();
    let masses = if conflict == 0.0 {
        acc
    } else {
        acc.into_iter().map(|(k, m)| (k, m / scale)).collect()
    };
    Ok(CombinationReport {
        result: BodyOfEvidence::from_raw(a.frame(), masses),
        conflict_mass: conflict,
        rule: Rule::Dempster,
    })
}

/// Smets' unnormalized conjunctive rule: conflict stays on `∅`.
pub fn smets(a: &BodyOfEvidence, b: &BodyOfEvidence) -> Result<CombinationReport> {
    check_pair(a, b)?;
    let acc = conjunctive(a, b);
    let result = BodyOfEvidence::from_raw(a.frame(), acc).normalize()?;
    Ok(CombinationReport {
        conflict_mass: result.empty_mass(),
        result,
        rule: Rule::Smets,
    })
}

/// Proportional conflict redistribution, rule no. 5.
///
/// For every conflicting pair `X ∩ Y = ∅`, `X` receives
/// `m_A(X)² m_B(Y) / (m_A(X) + m_B(Y))` and `Y` receives
/// `m_B(Y)² m_A(X) / (m_A(X) + m_B(Y))`; the two shares add back up to the
/// product `m_A(X) m_B(Y)`.
pub fn pcr5(a: &BodyOfEvidence, b: &BodyOfEvidence) -> Result<CombinationReport> {
    check_pair(a, b)?;
    check_closed(a)?;
    check_closed(b)?;
    let mut acc: BTreeMap<BitSet, f64> = BTreeMap::new();
    let mut conflict = 0.0;
    for (x, mx) in a.raw() {
        for (y, my) in b.raw() {
            let meet = x.intersection(y);
            if !meet.is_empty() {
                *acc.entry(meet).or_insert(0.0) += mx * my;
                continue;
            }
            conflict += mx * my;
            let denom = mx + my;
            if denom > 0.0 {
                *acc.entry(x.clone()).or_insert(0.0) += mx * mx * my / denom;
                *acc.entry(y.clone()).or_insert(0.0) += my * my * mx / denom;
            }
        }
    }
    Ok(CombinationReport {
        result: BodyOfEvidence::from_raw(a.frame(), acc),
        conflict_mass: conflict,
        rule: Rule::Pcr5,
    })
}

/// Left fold of `rule` over `bodies` in the given order. The reported
/// conflict is that of the final step. PCR5 is not associative, so for it
/// the order is part of the result.
pub fn combine_all(rule: Rule, bodies: &[BodyOfEvidence]) -> Result<CombinationReport> {
    let (first, rest) = bodies
        .split_first()
        .ok_or_else(|| Error::Parse("at least one body is required".into()))?;
    first.ensure_normalized()?;
    let mut report = CombinationReport {
        result: first.clone(),
        conflict_mass: first.empty_mass(),
        rule,
    };
    for body in rest {
        report = rule.apply(&report.result, body)?;
    }
    Ok(report)
}

fn check_reliability(m: f64, n: u32) -> Result<()> {
    if !(0.0..=1.0).contains(&m) {
        return Err(Error::InvalidReliability(m));
    }
    if n == 0 {
        return Err(Error::EmptyChain);
    }
    Ok(())
}

/// Reliability of `n` testimonies relayed in series: `m^n`.
pub fn serial_reliability(m: f64, n: u32) -> Result<f64> {
    check_reliability(m, n)?;
    Ok(m.powi(n as i32))
}

/// Reliability of `n` independent testimonies heard in parallel:
/// `1 - (1 - m)^n`.
pub fn parallel_reliability(m: f64, n: u32) -> Result<f64> {
    check_reliability(m, n)?;
    Ok(1.0 - (1.0 - m).powi(n as i32))
}

/// Bayesian conditioning of a singleton prior on singleton evidence:
/// `p(x) ∝ prior(x) · evidence(x)`.
///
/// Computed directly on per-element probability vectors, independently of
/// the set-intersection machinery used by [`dempster`].
pub fn bayes_posterior(prior: &BodyOfEvidence, evidence: &BodyOfEvidence) -> Result<BodyOfEvidence> {
    prior.frame().ensure_same(evidence.frame())?;
    let n = prior.frame().len();
    let as_vector = |body: &BodyOfEvidence| -> Result<Vec<f64>> {
        let mut p = vec![0.0; n];
        for (set, m) in body.iter() {
            if set.len() != 1 {
                return Err(Error::NotBayesian(set.to_string()));
            }
            p[set.bits().ones().next().unwrap_or_default()] = m;
        }
        Ok(p)
    };
    let p = as_vector(prior)?;
    let q = as_vector(evidence)?;
    let joint: Vec<f64> = p.iter().zip(&q).map(|(a, b)| a * b).collect();
    let total: f64 = joint.iter().sum();
    if total <= 0.0 {
        return Err(Error::TotalConflict);
    }
    let frame = prior.frame();
    BodyOfEvidence::new(
        frame,
        joint.iter().enumerate().map(|(i, j)| (frame.singleton(i), j / total)),
    )
}
