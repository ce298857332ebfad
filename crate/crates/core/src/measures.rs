//! Evaluating hypotheses against a body of evidence.

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::frame::{FocalSet, Frame};
use crate::mass::BodyOfEvidence;
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// Tolerance below which two belief or plausibility values compare equal.
pub const COMPARISON_TOLERANCE: f64 = 1e-12;

/// Where a hypothesis came from. Hypotheses are constructs of the reasoner,
/// not evidence, so the origin is carried along for reporting only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Origin {
    #[default]
    Supplied,
    /// Read off a focal set produced by a combination.
    Induced,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypothesis {
    set: FocalSet,
    origin: Origin,
}

impl Hypothesis {
    pub fn new(set: FocalSet) -> Self {
        Hypothesis {
            set,
            origin: Origin::Supplied,
        }
    }

    pub fn induced(set: FocalSet) -> Self {
        Hypothesis {
            set,
            origin: Origin::Induced,
        }
    }

    pub fn set(&self) -> &FocalSet {
        &self.set
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }
}

impl From<FocalSet> for Hypothesis {
    fn from(set: FocalSet) -> Self {
        Hypothesis::new(set)
    }
}

/// Hypotheses drawn from every focal set of a body, marked as induced.
pub fn induced_hypotheses(body: &BodyOfEvidence) -> Vec<Hypothesis> {
    body.iter().map(|(s, _)| Hypothesis::induced(s)).collect()
}

/// The closure of a set of generators under union and complement relative
/// to a region `Ω` of the frame.
#[derive(Debug, Clone)]
pub struct HypothesisSpace {
    frame: Frame,
    region: BitSet,
    members: BTreeSet<BitSet>,
}

impl HypothesisSpace {
    pub fn generate(region: &FocalSet, generators: &[FocalSet]) -> Result<Self> {
        let frame = region.frame().clone();
        let omega = region.bits().clone();
        let mut members = BTreeSet::new();
        members.insert(BitSet::empty(frame.len()));
        members.insert(omega.clone());
        for g in generators {
            frame.ensure_same(g.frame())?;
            if !g.bits().is_subset(&omega) {
                return Err(Error::OutsideRegion);
            }
            members.insert(g.bits().clone());
        }
        loop {
            let current: Vec<BitSet> = members.iter().cloned().collect();
            let mut grew = false;
            for a in &current {
                grew |= members.insert(complement_within(a, &omega));
                for b in &current {
                    grew |= members.insert(a.union(b));
                }
            }
            if !grew {
                break;
            }
        }
        Ok(HypothesisSpace {
            frame,
            region: omega,
            members,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, set: &FocalSet) -> bool {
        *set.frame() == self.frame && self.members.contains(set.bits())
    }

    /// Complement of `set` relative to the region.
    pub fn complement(&self, set: &FocalSet) -> Result<FocalSet> {
        self.frame.ensure_same(set.frame())?;
        if !set.bits().is_subset(&self.region) {
            return Err(Error::OutsideRegion);
        }
        Ok(FocalSet::from_bits(
            self.frame.clone(),
            complement_within(set.bits(), &self.region),
        ))
    }

    pub fn iter(&self) -> impl Iterator<Item = Hypothesis> + '_ {
        self.members
            .iter()
            .map(|b| Hypothesis::new(FocalSet::from_bits(self.frame.clone(), b.clone())))
    }

    pub fn is_closed(&self) -> bool {
        self.members.iter().all(|a| {
            self.members.contains(&complement_within(a, &self.region))
                && self.members.iter().all(|b| self.members.contains(&a.union(b)))
        })
    }
}

fn complement_within(set: &BitSet, region: &BitSet) -> BitSet {
    let mut out = region.clone();
    for i in set.ones() {
        out.remove(i);
    }
    out
}

/// Sums in ascending order so the result does not depend on how the frame
/// happens to be labelled.
fn ordered_sum(mut terms: Vec<f64>) -> f64 {
    terms.sort_by(f64::total_cmp);
    terms.iter().sum()
}

enum Special {
    Empty,
    Whole,
    Proper,
}

fn classify(body: &BodyOfEvidence, h: &Hypothesis) -> Result<Special> {
    body.frame().ensure_same(h.set().frame())?;
    body.ensure_normalized()?;
    Ok(if h.set().is_empty() {
        Special::Empty
    } else if h.set().is_full() {
        Special::Whole
    } else {
        Special::Proper
    })
}

/// Belief: mass committed to non-empty subsets of `h`. By convention
/// `Bel(∅) = m(∅)` and `Bel(Θ) = m(Θ)`.
pub fn belief(body: &BodyOfEvidence, h: &Hypothesis) -> Result<f64> {
    Ok(match classify(body, h)? {
        Special::Empty => body.empty_mass(),
        Special::Whole => body.frame_mass(),
        Special::Proper => ordered_sum(
            body.raw()
                .iter()
                .filter(|(c, _)| !c.is_empty() && c.is_subset(h.set().bits()))
                .map(|(_, &m)| m)
                .collect(),
        ),
    })
}

/// Plausibility: mass on non-empty sets that meet `h`. By convention
/// `Pl(∅) = m(∅)` and `Pl(Θ) = m(Θ)`.
pub fn plausibility(body: &BodyOfEvidence, h: &Hypothesis) -> Result<f64> {
    Ok(match classify(body, h)? {
        Special::Empty => body.empty_mass(),
        Special::Whole => body.frame_mass(),
        Special::Proper => ordered_sum(
            body.raw()
                .iter()
                .filter(|(c, _)| c.intersects(h.set().bits()))
                .map(|(_, &m)| m)
                .collect(),
        ),
    })
}

/// Evidential entropy in bits, summed over the singletons `{x}` of the frame:
///
/// ```text
/// H = -Σ Pl(x)·lg Pl(x) / e^(Pl(x) - Bel(x))  +  Σ (Pl(x) - Bel(x))
/// ```
///
/// The first term is Shannon's entropy when every focal set is a singleton;
/// the second measures how far the evidence spills beyond each element.
pub fn entropy(body: &BodyOfEvidence) -> Result<f64> {
    body.ensure_normalized()?;
    let frame = body.frame();
    let mut weighted = Vec::with_capacity(frame.len());
    let mut ambiguity = Vec::with_capacity(frame.len());
    for i in 0..frame.len() {
        let h = Hypothesis::new(frame.singleton(i));
        let bel = belief(body, &h)?;
        let pl = plausibility(body, &h)?;
        let gap = pl - bel;
        if pl > 0.0 {
            weighted.push(pl * pl.log2() / gap.exp());
        }
        ambiguity.push(gap);
    }
    Ok(-ordered_sum(weighted) + ordered_sum(ambiguity))
}

/// Mass on the empty set: how strongly the evidence points outside the frame.
pub fn conflict_level(body: &BodyOfEvidence) -> Result<f64> {
    body.ensure_normalized()?;
    Ok(body.empty_mass())
}

/// True once the conflict mass strictly exceeds `threshold`, signalling that
/// the frame should be reconsidered.
pub fn reframe_signal(body: &BodyOfEvidence, threshold: f64) -> Result<bool> {
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(Error::InvalidThreshold(threshold));
    }
    Ok(conflict_level(body)? > threshold)
}

fn tolerant_cmp(a: f64, b: f64) -> Ordering {
    if (a - b).abs() <= COMPARISON_TOLERANCE {
        Ordering::Equal
    } else if a < b {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Orders `h1` against `h2` by belief and by plausibility. Values within
/// [`COMPARISON_TOLERANCE`] are reported equal.
pub fn compare_hypotheses(body: &BodyOfEvidence, h1: &Hypothesis, h2: &Hypothesis) -> Result<(Ordering, Ordering)> {
    let by_bel = tolerant_cmp(belief(body, h1)?, belief(body, h2)?);
    let by_pl = tolerant_cmp(plausibility(body, h1)?, plausibility(body, h2)?);
    Ok((by_bel, by_pl))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combine::{dempster, smets};

    fn abc_body() -> BodyOfEvidence {
        let f = Frame::new(["a", "b", "c"]).unwrap();
        BodyOfEvidence::new(
            &f,
            [
                (f.subset(["b"]).unwrap(), 0.3),
                (f.subset(["a", "b"]).unwrap(), 0.3),
                (f.subset(["b", "c"]).unwrap(), 0.2),
                (f.full_set(), 0.2),
            ],
        )
        .unwrap()
    }

    fn hyp(body: &BodyOfEvidence, labels: &[&str]) -> Hypothesis {
        Hypothesis::new(body.frame().subset(labels).unwrap())
    }

    fn zadeh() -> (BodyOfEvidence, BodyOfEvidence) {
        let f = Frame::new(["M", "C", "T"]).unwrap();
        let a = BodyOfEvidence::from_labels(&f, [(vec!["M"], 0.99), (vec!["T"], 0.01)]).unwrap();
        let b = BodyOfEvidence::from_labels(&f, [(vec!["C"], 0.99), (vec!["T"], 0.01)]).unwrap();
        (a, b)
    }

    #[test]
    fn belief_examples() {
        let (a, b) = zadeh();
        let d = dempster(&a, &b).unwrap().result;
        assert!((belief(&d, &hyp(&d, &["T"])).unwrap() - 1.0).abs() < 1e-12);

        let s = smets(&a, &b).unwrap().result;
        let empty = Hypothesis::new(s.frame().empty_set());
        assert!((belief(&s, &empty).unwrap() - 0.9999).abs() < 1e-12);

        let body = abc_body();
        assert!((belief(&body, &hyp(&body, &["a", "b"])).unwrap() - 0.6).abs() < 1e-15);
        let whole = Hypothesis::new(body.frame().full_set());
        assert_eq!(belief(&body, &whole).unwrap(), 0.2);
        assert_eq!(plausibility(&body, &whole).unwrap(), 0.2);
    }

    #[test]
    fn plausibility_examples() {
        let body = abc_body();
        assert!((plausibility(&body, &hyp(&body, &["a", "b"])).unwrap() - 1.0).abs() < 1e-15);
        assert!((plausibility(&body, &hyp(&body, &["c"])).unwrap() - 0.4).abs() < 1e-15);
    }

    #[test]
    fn frame_mismatch_and_unnormalized() {
        let body = abc_body();
        let other = Frame::new(["a"]).unwrap();
        let h = Hypothesis::new(other.full_set());
        assert_eq!(belief(&body, &h).unwrap_err(), Error::FrameMismatch);
        assert_eq!(plausibility(&body, &h).unwrap_err(), Error::FrameMismatch);
        let f = body.frame().clone();
        let half = BodyOfEvidence::from_labels(&f, [(vec!["a"], 0.5)]).unwrap();
        assert!(matches!(entropy(&half), Err(Error::NotNormalized(_))));
    }

    #[test]
    fn entropy_examples() {
        let f = Frame::new(["a", "b"]).unwrap();
        let fair = BodyOfEvidence::from_labels(&f, [(vec!["a"], 0.5), (vec!["b"], 0.5)]).unwrap();
        assert!((entropy(&fair).unwrap() - 1.0).abs() < 1e-15);
        let sure = BodyOfEvidence::from_labels(&f, [(vec!["a"], 1.0)]).unwrap();
        assert_eq!(entropy(&sure).unwrap(), 0.0);
        assert_eq!(entropy(&BodyOfEvidence::vacuous(&f)).unwrap(), 2.0);
    }

    #[test]
    fn conflict_and_signal() {
        let (a, b) = zadeh();
        let s = smets(&a, &b).unwrap().result;
        assert!((conflict_level(&s).unwrap() - 0.9999).abs() < 1e-12);
        assert!(reframe_signal(&s, 0.5).unwrap());
        assert_eq!(conflict_level(&a).unwrap(), 0.0);
        assert!(!reframe_signal(&a, 0.5).unwrap());

        let f = a.frame().clone();
        let quarter = BodyOfEvidence::new(&f, [(f.empty_set(), 0.25), (f.subset(["M"]).unwrap(), 0.75)]).unwrap();
        assert_eq!(conflict_level(&quarter).unwrap(), 0.25);
        let half = BodyOfEvidence::new(&f, [(f.empty_set(), 0.5), (f.subset(["M"]).unwrap(), 0.5)]).unwrap();
        assert!(!reframe_signal(&half, 0.5).unwrap());
        for t in [0.0, 1.0, -0.1, f64::NAN] {
            assert!(matches!(reframe_signal(&half, t), Err(Error::InvalidThreshold(_))));
        }
    }

    #[test]
    fn comparisons() {
        let (a, b) = zadeh();
        let d = dempster(&a, &b).unwrap().result;
        assert_eq!(
            compare_hypotheses(&d, &hyp(&d, &["T"]), &hyp(&d, &["M"])).unwrap(),
            (Ordering::Greater, Ordering::Greater)
        );
        let h = hyp(&d, &["M", "C"]);
        assert_eq!(
            compare_hypotheses(&d, &h, &h).unwrap(),
            (Ordering::Equal, Ordering::Equal)
        );

        let body = abc_body();
        assert_eq!(
            compare_hypotheses(&body, &hyp(&body, &["a", "b"]), &hyp(&body, &["c"])).unwrap(),
            (Ordering::Greater, Ordering::Greater)
        );
    }

    #[test]
    fn induced_hypotheses_follow_focal_sets() {
        let body = abc_body();
        let hs = induced_hypotheses(&body);
        assert_eq!(hs.len(), 4);
        assert!(hs.iter().all(|h| h.origin() == Origin::Induced));
    }

    #[test]
    fn hypothesis_space_closure() {
        let f = Frame::new(["a", "b", "c", "d"]).unwrap();
        let omega = f.subset(["a", "b", "c"]).unwrap();
        let space = HypothesisSpace::generate(&omega, &[f.subset(["a"]).unwrap()]).unwrap();
        // {∅, {a}, {b,c}, Ω}
        assert_eq!(space.len(), 4);
        assert!(space.is_closed());
        assert!(space.contains(&f.subset(["b", "c"]).unwrap()));
        assert_eq!(
            space.complement(&f.subset(["a"]).unwrap()).unwrap(),
            f.subset(["b", "c"]).unwrap()
        );
        assert_eq!(
            HypothesisSpace::generate(&omega, &[f.subset(["d"]).unwrap()]).unwrap_err(),
            Error::OutsideRegion
        );
    }
}
