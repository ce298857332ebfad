//! Bodies of evidence: mass assignments over the subsets of a frame,
//! including mass on the empty set (conflict, the open-world share) and on
//! the whole frame (suspended judgement).

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::frame::{FocalSet, Frame};
use std::collections::BTreeMap;

/// Tolerance on the total mass for a body to count as normalized.
pub const NORMALIZED_TOLERANCE: f64 = 1e-9;

/// A finite mass assignment over the subsets of one frame.
///
/// Only strictly positive masses are stored. Entries are kept in bit-pattern
/// order, so iteration is deterministic and the empty set comes first.
#[derive(Debug, Clone, PartialEq)]
pub struct BodyOfEvidence {
    frame: Frame,
    masses: BTreeMap<BitSet, f64>,
}

impl BodyOfEvidence {
    /// Builds a body from `(set, mass)` entries. Duplicate sets are merged by
    /// summation and zero masses are dropped; nothing is normalized.
    pub fn new(frame: &Frame, entries: impl IntoIterator<Item = (FocalSet, f64)>) -> Result<Self> {
        let mut masses = BTreeMap::new();
        for (set, m) in entries {
            frame.ensure_same(set.frame())?;
            if !m.is_finite() || m < 0.0 {
                return Err(Error::InvalidMass {
                    set: set.to_string(),
                    value: m,
                });
            }
            if m > 0.0 {
                *masses.entry(set.bits().clone()).or_insert(0.0) += m;
            }
        }
        Ok(BodyOfEvidence {
            frame: frame.clone(),
            masses,
        })
    }

    /// Shorthand for tests and demos: entries given as label lists.
    pub fn from_labels<E, S>(frame: &Frame, entries: impl IntoIterator<Item = (E, f64)>) -> Result<Self>
    where
        E: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let entries = entries
            .into_iter()
            .map(|(e, m)| Ok((frame.subset(e)?, m)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(frame, entries)
    }

    /// Total ignorance: all mass on the frame itself.
    pub fn vacuous(frame: &Frame) -> Self {
        let mut masses = BTreeMap::new();
        masses.insert(BitSet::full(frame.len()), 1.0);
        BodyOfEvidence {
            frame: frame.clone(),
            masses,
        }
    }

    pub(crate) fn from_raw(frame: &Frame, masses: BTreeMap<BitSet, f64>) -> Self {
        BodyOfEvidence {
            frame: frame.clone(),
            masses: masses.into_iter().filter(|(_, m)| *m > 0.0).collect(),
        }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Number of focal sets (positive-mass entries), `∅` and `Θ` included.
    pub fn len(&self) -> usize {
        self.masses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masses.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.masses.values().sum()
    }

    pub fn is_normalized(&self) -> bool {
        (self.total() - 1.0).abs() <= NORMALIZED_TOLERANCE
    }

    pub(crate) fn ensure_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::NotNormalized(self.total()))
        }
    }

    /// Stored mass of `set`, or zero.
    pub fn mass_of(&self, set: &FocalSet) -> Result<f64> {
        self.frame.ensure_same(set.frame())?;
        Ok(self.mass_of_bits(set.bits()))
    }

    pub(crate) fn mass_of_bits(&self, bits: &BitSet) -> f64 {
        self.masses.get(bits).copied().unwrap_or(0.0)
    }

    pub fn empty_mass(&self) -> f64 {
        self.mass_of_bits(&BitSet::empty(self.frame.len()))
    }

    pub fn frame_mass(&self) -> f64 {
        self.mass_of_bits(&BitSet::full(self.frame.len()))
    }

    /// True when no mass sits on the empty set.
    pub fn is_closed_world(&self) -> bool {
        self.empty_mass() == 0.0
    }

    /// True when every focal set is a singleton.
    pub fn is_bayesian(&self) -> bool {
        self.masses.keys().all(|b| b.count() == 1)
    }

    /// Focal sets and their masses in bit-pattern order.
    pub fn iter(&self) -> impl Iterator<Item = (FocalSet, f64)> + '_ {
        self.masses
            .iter()
            .map(|(b, &m)| (FocalSet::from_bits(self.frame.clone(), b.clone()), m))
    }

    pub(crate) fn raw(&self) -> &BTreeMap<BitSet, f64> {
        &self.masses
    }

    /// Divides every mass (the empty-set and whole-frame shares included) by
    /// the total, so the masses sum to one.
    ///
    /// A body already within [`NORMALIZED_TOLERANCE`] of unit total is
    /// returned unchanged, which makes the operation exactly idempotent.
    pub fn normalize(&self) -> Result<Self> {
        let total = self.total();
        if total <= 0.0 {
            return Err(Error::NoEvidence);
        }
        if (total - 1.0).abs() <= NORMALIZED_TOLERANCE {
            return Ok(self.clone());
        }
        Ok(BodyOfEvidence {
            frame: self.frame.clone(),
            masses: self.masses.iter().map(|(b, m)| (b.clone(), m / total)).collect(),
        })
    }

    /// Builds a body from weights of evidence. See [`weight_to_mass`]; the
    /// shortfall `max(0, 1 - Σm)` goes to the whole frame and the result is
    /// normalized.
    pub fn from_weights(frame: &Frame, weights: &WeightAssignment) -> Result<Self> {
        let mut masses = BTreeMap::new();
        for (set, w) in &weights.weights {
            frame.ensure_same(set.frame())?;
            let m = weight_to_mass(*w)?;
            if m > 0.0 {
                *masses.entry(set.bits().clone()).or_insert(0.0) += m;
            }
        }
        let residual = (1.0 - masses.values().sum::<f64>()).max(0.0);
        if residual > 0.0 {
            *masses.entry(BitSet::full(frame.len())).or_insert(0.0) += residual;
        }
        BodyOfEvidence {
            frame: frame.clone(),
            masses,
        }
        .normalize()
    }
}

/// Weights of evidence in `[0, +∞]` attached to subsets of a frame.
#[derive(Debug, Clone, Default)]
pub struct WeightAssignment {
    weights: Vec<(FocalSet, f64)>,
}

impl WeightAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, set: FocalSet, weight: f64) -> Result<Self> {
        check_weight(weight)?;
        self.weights.push((set, weight));
        Ok(self)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(FocalSet, f64)> {
        self.weights.iter()
    }
}

fn check_weight(w: f64) -> Result<()> {
    if w.is_nan() || w < 0.0 {
        Err(Error::InvalidWeight(w))
    } else {
        Ok(())
    }
}

/// Mass supported by a weight of evidence: `1 - e^(-w)`, so zero weight
/// gives zero mass and infinite weight gives mass one.
pub fn weight_to_mass(w: f64) -> Result<f64> {
    check_weight(w)?;
    Ok(-(-w).exp_m1())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Frame {
        Frame::new(["a", "b", "c"]).unwrap()
    }

    fn zadeh_a() -> BodyOfEvidence {
        let f = Frame::new(["M", "C", "T"]).unwrap();
        BodyOfEvidence::from_labels(&f, [(vec!["M"], 0.99), (vec!["T"], 0.01)]).unwrap()
    }

    #[test]
    fn zadeh_doctor_a() {
        let a = zadeh_a();
        assert_eq!(a.len(), 2);
        assert!(a.is_bayesian());
        let f = a.frame().clone();
        assert_eq!(a.mass_of(&f.subset(["M"]).unwrap()).unwrap(), 0.99);
        assert_eq!(a.mass_of(&f.empty_set()).unwrap(), 0.0);
    }

    #[test]
    fn vacuous_body() {
        let f = abc();
        let v = BodyOfEvidence::vacuous(&f);
        assert_eq!(v.mass_of(&f.full_set()).unwrap(), 1.0);
        assert_eq!(v, BodyOfEvidence::new(&f, [(f.full_set(), 1.0)]).unwrap());
    }

    #[test]
    fn duplicates_merge_and_zeros_drop() {
        let f = abc();
        let b = BodyOfEvidence::from_labels(&f, [(vec!["a"], 0.2), (vec!["a"], 0.3), (vec!["b"], 0.0)]).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b.mass_of(&f.subset(["a"]).unwrap()).unwrap(), 0.5);
    }

    #[test]
    fn negative_and_foreign_rejected() {
        let f = abc();
        assert!(matches!(
            BodyOfEvidence::from_labels(&f, [(vec!["a"], -0.1)]),
            Err(Error::InvalidMass { .. })
        ));
        assert!(BodyOfEvidence::from_labels(&f, [(vec!["a"], f64::NAN)]).is_err());
        let g = Frame::new(["z"]).unwrap();
        assert_eq!(
            BodyOfEvidence::new(&f, [(g.full_set(), 1.0)]).unwrap_err(),
            Error::FrameMismatch
        );
        assert_eq!(zadeh_a().mass_of(&g.full_set()).unwrap_err(), Error::FrameMismatch);
    }

    #[test]
    fn normalize_examples() {
        let f = abc();
        let b = BodyOfEvidence::new(
            &f,
            [
                (f.subset(["a"]).unwrap(), 0.5),
                (f.empty_set(), 0.25),
                (f.full_set(), 0.25),
            ],
        )
        .unwrap();
        assert_eq!(b.normalize().unwrap(), b);

        let b = BodyOfEvidence::from_labels(&f, [(vec!["a"], 2.0), (vec!["b"], 2.0)]).unwrap();
        let n = b.normalize().unwrap();
        assert_eq!(n.mass_of(&f.subset(["a"]).unwrap()).unwrap(), 0.5);
        assert_eq!(n.mass_of(&f.subset(["b"]).unwrap()).unwrap(), 0.5);

        let b = BodyOfEvidence::new(
            &f,
            [
                (f.subset(["a", "b"]).unwrap(), 0.3),
                (f.empty_set(), 0.1),
                (f.full_set(), 0.1),
            ],
        )
        .unwrap();
        let n = b.normalize().unwrap();
        assert!((n.mass_of(&f.subset(["a", "b"]).unwrap()).unwrap() - 0.6).abs() < 1e-15);
        assert!((n.empty_mass() - 0.2).abs() < 1e-15);
        assert!((n.frame_mass() - 0.2).abs() < 1e-15);
        assert!(n.is_normalized());
    }

    #[test]
    fn normalize_without_evidence_fails() {
        let f = abc();
        let b = BodyOfEvidence::new(&f, []).unwrap();
        assert_eq!(b.normalize().unwrap_err(), Error::NoEvidence);
    }

    #[test]
    fn weights_of_evidence() {
        assert_eq!(weight_to_mass(0.0).unwrap(), 0.0);
        assert_eq!(weight_to_mass(f64::INFINITY).unwrap(), 1.0);
        assert!((weight_to_mass(std::f64::consts::LN_2).unwrap() - 0.5).abs() < 1e-15);
        assert!(weight_to_mass(-1.0).is_err());

        let f = abc();
        let a = f.subset(["a"]).unwrap();
        let w = WeightAssignment::new().with(a.clone(), std::f64::consts::LN_2).unwrap();
        let b = BodyOfEvidence::from_weights(&f, &w).unwrap();
        assert!((b.mass_of(&a).unwrap() - 0.5).abs() < 1e-15);
        assert!((b.frame_mass() - 0.5).abs() < 1e-15);

        let w = WeightAssignment::new().with(a.clone(), 0.0).unwrap();
        let b = BodyOfEvidence::from_weights(&f, &w).unwrap();
        assert_eq!(b.mass_of(&a).unwrap(), 0.0);
        assert_eq!(b, BodyOfEvidence::vacuous(&f));

        let w = WeightAssignment::new().with(a.clone(), f64::INFINITY).unwrap();
        let b = BodyOfEvidence::from_weights(&f, &w).unwrap();
        assert_eq!(b.mass_of(&a).unwrap(), 1.0);
        assert_eq!(b.frame_mass(), 0.0);
    }

    #[test]
    fn overfull_weights_renormalize_without_frame_share() {
        let f = abc();
        let w = WeightAssignment::new()
            .with(f.subset(["a"]).unwrap(), 5.0)
            .unwrap()
            .with(f.subset(["b"]).unwrap(), 5.0)
            .unwrap();
        let b = BodyOfEvidence::from_weights(&f, &w).unwrap();
        assert_eq!(b.frame_mass(), 0.0);
        assert!((b.total() - 1.0).abs() < 1e-12);
        assert!((b.mass_of(&f.subset(["a"]).unwrap()).unwrap() - 0.5).abs() < 1e-12);
    }
}
