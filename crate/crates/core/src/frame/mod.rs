//! Frames of discernment and the subsets drawn from them.

mod hypergraph;
mod maps;

pub use hypergraph::{graham_reduce, is_hypertree, Hypergraph};
pub use maps::{coarsen, refine, CoarseningMap, RefinementMap};

use crate::bits::BitSet;
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug)]
struct FrameInner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

/// An ordered, finite set of distinct element labels.
///
/// Cloning is cheap. Two frames are equal when they list the same labels in
/// the same order; sets from unequal frames never mix.
#[derive(Clone)]
pub struct Frame(Arc<FrameInner>);

impl Frame {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyFrame);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Frame(Arc::new(FrameInner { labels, index })))
    }

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    /// Always false; frames hold at least one element.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.index.get(label).copied()
    }

    /// The subset with exactly the given members. Unknown labels are an error.
    pub fn subset<I, S>(&self, members: I) -> Result<FocalSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = BitSet::empty(self.len());
        for m in members {
            let m = m.as_ref();
            let i = self.index_of(m).ok_or_else(|| Error::UnknownLabel(m.to_string()))?;
            bits.insert(i);
        }
        Ok(FocalSet::from_bits(self.clone(), bits))
    }

    pub fn empty_set(&self) -> FocalSet {
        FocalSet::from_bits(self.clone(), BitSet::empty(self.len()))
    }

    pub fn full_set(&self) -> FocalSet {
        FocalSet::from_bits(self.clone(), BitSet::full(self.len()))
    }

    pub fn singleton(&self, i: usize) -> FocalSet {
        let mut bits = BitSet::empty(self.len());
        bits.insert(i);
        FocalSet::from_bits(self.clone(), bits)
    }

    /// All `2^n` subsets in bit-pattern order. Intended for small frames.
    pub fn powerset(&self) -> impl Iterator<Item = FocalSet> + '_ {
        assert!(self.len() < 32, "powerset enumeration limited to n < 32");
        (0u64..1 << self.len()).map(move |m| FocalSet::from_bits(self.clone(), BitSet::from_mask(self.len(), m)))
    }

    pub(crate) fn ensure_same(&self, other: &Frame) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FrameMismatch)
        }
    }
}

impl PartialEq for Frame {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.labels == other.0.labels
    }
}

impl Eq for Frame {}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Frame").field(&self.0.labels).finish()
    }
}

/// A subset of a specific frame.
#[derive(Clone, PartialEq, Eq)]
pub struct FocalSet {
    frame: Frame,
    bits: BitSet,
}

impl FocalSet {
    pub(crate) fn from_bits(frame: Frame, bits: BitSet) -> Self {
        FocalSet { frame, bits }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.bits.count() == self.frame.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.frame.index_of(label).is_some_and(|i| self.bits.contains(i))
    }

    pub fn members(&self) -> impl Iterator<Item = &str> + '_ {
        self.bits.ones().map(|i| self.frame.label(i))
    }

    pub fn intersection(&self, other: &FocalSet) -> Result<FocalSet> {
        self.frame.ensure_same(&other.frame)?;
        Ok(FocalSet::from_bits(
            self.frame.clone(),
            self.bits.intersection(&other.bits),
        ))
    }

    pub fn union(&self, other: &FocalSet) -> Result<FocalSet> {
        self.frame.ensure_same(&other.frame)?;
        Ok(FocalSet::from_bits(self.frame.clone(), self.bits.union(&other.bits)))
    }

    pub fn is_subset(&self, other: &FocalSet) -> Result<bool> {
        self.frame.ensure_same(&other.frame)?;
        Ok(self.bits.is_subset(&other.bits))
    }

    pub fn complement(&self) -> FocalSet {
        FocalSet::from_bits(self.frame.clone(), self.bits.complement(self.frame.len()))
    }
}

impl fmt::Display for FocalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_full() {
            return f.write_str("Θ");
        }
        f.write_str("{")?;
        for (k, m) in self.members().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(m)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FocalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
