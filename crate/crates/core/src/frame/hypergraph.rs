//! Hypergraphs over a frame and the Graham (GYO) acyclicity test.

use super::{FocalSet, Frame};
use crate::bits::BitSet;
use crate::error::{Error, Result};

/// A finite collection of non-empty hyperedges over one frame.
#[derive(Debug, Clone)]
pub struct Hypergraph {
    frame: Frame,
    edges: Vec<BitSet>,
}

impl Hypergraph {
    pub fn new(frame: &Frame, edges: impl IntoIterator<Item = FocalSet>) -> Result<Self> {
        let mut out = Vec::new();
        for e in edges {
            frame.ensure_same(e.frame())?;
            if e.is_empty() {
                return Err(Error::EmptyEdge);
            }
            out.push(e.bits().clone());
        }
        Ok(Hypergraph {
            frame: frame.clone(),
            edges: out,
        })
    }

    /// Convenience constructor from label lists.
    pub fn from_labels<E, S>(frame: &Frame, edges: impl IntoIterator<Item = E>) -> Result<Self>
    where
        E: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let sets = edges.into_iter().map(|e| frame.subset(e)).collect::<Result<Vec<_>>>()?;
        Self::new(frame, sets)
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = FocalSet> + '_ {
        self.edges
            .iter()
            .map(|b| FocalSet::from_bits(self.frame.clone(), b.clone()))
    }

    /// Drops every edge equal to one in `remove`, then appends `add`.
    pub fn replace_edges(&self, remove: &[FocalSet], add: &[FocalSet]) -> Result<Self> {
        for s in remove.iter().chain(add) {
            self.frame.ensure_same(s.frame())?;
        }
        let kept = self
            .edges
            .iter()
            .filter(|e| !remove.iter().any(|r| r.bits() == *e))
            .map(|b| FocalSet::from_bits(self.frame.clone(), b.clone()));
        Hypergraph::new(&self.frame, kept.chain(add.iter().cloned()))
    }

    /// True when every edge of `self` lies inside some edge of `other`, i.e.
    /// `other` is a coarser covering of the same structure.
    pub fn is_covered_by(&self, other: &Hypergraph) -> Result<bool> {
        self.frame.ensure_same(&other.frame)?;
        Ok(self.edges.iter().all(|e| other.edges.iter().any(|o| e.is_subset(o))))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    /// delete a vertex that occurs in exactly one edge
    Vertex(usize),
    /// delete an edge contained in another edge
    Edge(usize),
}

fn applicable_steps(frame_len: usize, edges: &[BitSet]) -> Vec<Step> {
    let mut steps = Vec::new();
    for v in 0..frame_len {
        if edges.iter().filter(|e| e.contains(v)).count() == 1 {
            steps.push(Step::Vertex(v));
        }
    }
    for (i, e) in edges.iter().enumerate() {
        if edges.iter().enumerate().any(|(j, o)| j != i && e.is_subset(o)) {
            steps.push(Step::Edge(i));
        }
    }
    steps
}

/// Runs Graham reduction to a fixed point and returns the surviving edges.
///
/// `choose` receives the number of applicable steps and returns the index of
/// the one to apply, which lets callers vary the reduction order. The result
/// is confluent: the number of surviving edges does not depend on the order.
pub fn graham_reduce(h: &Hypergraph, mut choose: impl FnMut(usize) -> usize) -> Vec<FocalSet> {
    let mut edges = h.edges.clone();
    loop {
        let steps = applicable_steps(h.frame.len(), &edges);
        if steps.is_empty() {
            break;
        }
        match steps[choose(steps.len()) % steps.len()] {
            Step::Vertex(v) => edges.iter_mut().for_each(|e| e.remove(v)),
            Step::Edge(i) => {
                edges.remove(i);
            }
        }
    }
    edges
        .into_iter()
        .map(|b| FocalSet::from_bits(h.frame.clone(), b))
        .collect()
}

/// True iff Graham reduction leaves at most one edge. The empty hypergraph
/// counts as a hypertree.
pub fn is_hypertree(h: &Hypergraph) -> bool {
    graham_reduce(h, |_| 0).len() <= 1
}
