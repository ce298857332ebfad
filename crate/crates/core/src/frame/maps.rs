//! Coarsening and refinement of frames.
//!
//! A coarsening merges source elements into fewer target elements; a
//! refinement splits each source element into one or more target elements.
//! Both carry a set-image function that carries subsets across.

use super::{FocalSet, Frame};
use crate::bits::BitSet;
use crate::error::{Error, Result};

/// A total, surjective mapping from the elements of a source frame onto the
/// elements of a coarser target frame.
#[derive(Debug, Clone)]
pub struct CoarseningMap {
    source: Frame,
    target: Frame,
    /// target index for each source index
    image: Vec<usize>,
}

impl CoarseningMap {
    /// Builds the map from `(source label, target label)` pairs. The target
    /// frame lists target labels in order of first appearance along the
    /// source frame's ordering.
    pub fn new<I, S, T>(source: &Frame, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, T)>,
        S: AsRef<str>,
        T: Into<String>,
    {
        let assigned = collect_assignment(source, pairs)?;
        let mut target_labels: Vec<String> = Vec::new();
        for t in &assigned {
            if !target_labels.contains(t) {
                target_labels.push(t.clone());
            }
        }
        let target = Frame::new(target_labels)?;
        Self::build(source, target, assigned)
    }

    /// Builds the map onto an explicitly given target frame, which every
    /// target element must be hit by.
    pub fn onto<I, S, T>(source: &Frame, target: &Frame, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, T)>,
        S: AsRef<str>,
        T: Into<String>,
    {
        let assigned = collect_assignment(source, pairs)?;
        Self::build(source, target.clone(), assigned)
    }

    fn build(source: &Frame, target: Frame, assigned: Vec<String>) -> Result<Self> {
        let mut image = Vec::with_capacity(assigned.len());
        let mut hit = vec![false; target.len()];
        for t in &assigned {
            let ti = target
                .index_of(t)
                .ok_or_else(|| Error::InvalidCoarsening(format!("target label {t:?} not in target frame")))?;
            hit[ti] = true;
            image.push(ti);
        }
        if let Some(miss) = hit.iter().position(|h| !h) {
            return Err(Error::InvalidCoarsening(format!(
                "target element {:?} has no preimage",
                target.label(miss)
            )));
        }
        Ok(CoarseningMap {
            source: source.clone(),
            target,
            image,
        })
    }

    pub fn identity(frame: &Frame) -> Self {
        CoarseningMap {
            source: frame.clone(),
            target: frame.clone(),
            image: (0..frame.len()).collect(),
        }
    }

    pub fn source(&self) -> &Frame {
        &self.source
    }

    pub fn target(&self) -> &Frame {
        &self.target
    }

    pub fn target_of(&self, label: &str) -> Option<&str> {
        self.source.index_of(label).map(|i| self.target.label(self.image[i]))
    }

    /// Union of the images of the members of `set`.
    pub fn image(&self, set: &FocalSet) -> Result<FocalSet> {
        self.source.ensure_same(set.frame())?;
        let mut bits = BitSet::empty(self.target.len());
        for i in set.bits().ones() {
            bits.insert(self.image[i]);
        }
        Ok(FocalSet::from_bits(self.target.clone(), bits))
    }
}

fn collect_assignment<I, S, T>(source: &Frame, pairs: I) -> Result<Vec<String>>
where
    I: IntoIterator<Item = (S, T)>,
    S: AsRef<str>,
    T: Into<String>,
{
    let mut assigned: Vec<Option<String>> = vec![None; source.len()];
    for (s, t) in pairs {
        let s = s.as_ref();
        let si = source.index_of(s).ok_or_else(|| Error::UnknownLabel(s.to_string()))?;
        let t = t.into();
        match &assigned[si] {
            Some(prev) if *prev != t => {
                return Err(Error::InvalidCoarsening(format!(
                    "{s:?} mapped to both {prev:?} and {t:?}"
                )))
            }
            _ => assigned[si] = Some(t),
        }
    }
    assigned
        .into_iter()
        .enumerate()
        .map(|(i, t)| t.ok_or_else(|| Error::InvalidCoarsening(format!("{:?} is not mapped", source.label(i)))))
        .collect()
}

/// Returns the coarsened frame after checking that `map` applies to `frame`.
pub fn coarsen(frame: &Frame, map: &CoarseningMap) -> Result<Frame> {
    frame.ensure_same(map.source())?;
    Ok(map.target().clone())
}

/// A mapping from each source element to a non-empty block of target
/// elements. Blocks are pairwise disjoint and cover the target frame.
#[derive(Debug, Clone)]
pub struct RefinementMap {
    source: Frame,
    target: Frame,
    blocks: Vec<BitSet>,
}

impl RefinementMap {
    /// Builds the map from `(source label, image labels)` pairs. The target
    /// frame concatenates the images in source order.
    pub fn new<I, S, J, T>(source: &Frame, expansion: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, J)>,
        S: AsRef<str>,
        J: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let mut images: Vec<Option<Vec<String>>> = vec![None; source.len()];
        for (s, img) in expansion {
            let s = s.as_ref();
            let si = source.index_of(s).ok_or_else(|| Error::UnknownLabel(s.to_string()))?;
            let img: Vec<String> = img.into_iter().map(Into::into).collect();
            if img.is_empty() {
                return Err(Error::InvalidRefinement(format!("{s:?} has an empty image")));
            }
            if images[si].replace(img).is_some() {
                return Err(Error::InvalidRefinement(format!("{s:?} expanded twice")));
            }
        }
        let mut target_labels = Vec::new();
        let mut spans = Vec::with_capacity(source.len());
        for (i, img) in images.into_iter().enumerate() {
            let img = img.ok_or_else(|| Error::InvalidRefinement(format!("{:?} is not expanded", source.label(i))))?;
            let start = target_labels.len();
            target_labels.extend(img);
            spans.push(start..target_labels.len());
        }
        let target = Frame::new(target_labels).map_err(|e| match e {
            Error::DuplicateLabel(l) => Error::InvalidRefinement(format!("images overlap on {l:?}")),
            other => other,
        })?;
        let blocks = spans
            .into_iter()
            .map(|span| {
                let mut b = BitSet::empty(target.len());
                span.for_each(|j| b.insert(j));
                b
            })
            .collect();
        Ok(RefinementMap {
            source: source.clone(),
            target,
            blocks,
        })
    }

    pub fn identity(frame: &Frame) -> Self {
        let blocks = (0..frame.len())
            .map(|i| {
                let mut b = BitSet::empty(frame.len());
                b.insert(i);
                b
            })
            .collect();
        RefinementMap {
            source: frame.clone(),
            target: frame.clone(),
            blocks,
        }
    }

    pub fn source(&self) -> &Frame {
        &self.source
    }

    pub fn target(&self) -> &Frame {
        &self.target
    }

    /// Union of the blocks of the members of `set`.
    pub fn image(&self, set: &FocalSet) -> Result<FocalSet> {
        self.source.ensure_same(set.frame())?;
        let bits = set
            .bits()
            .ones()
            .fold(BitSet::empty(self.target.len()), |acc, i| acc.union(&self.blocks[i]));
        Ok(FocalSet::from_bits(self.target.clone(), bits))
    }

    /// The coarsening that merges each block back into its source element.
    pub fn inverse(&self) -> CoarseningMap {
        let mut image = vec![0; self.target.len()];
        for (si, block) in self.blocks.iter().enumerate() {
            for ti in block.ones() {
                image[ti] = si;
            }
        }
        CoarseningMap {
            source: self.target.clone(),
            target: self.source.clone(),
            image,
        }
    }
}

/// Returns the refined frame after checking that `map` applies to `frame`.
pub fn refine(frame: &Frame, map: &RefinementMap) -> Result<Frame> {
    frame.ensure_same(map.source())?;
    Ok(map.target().clone())
}
