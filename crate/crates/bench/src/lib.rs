//! Seeded input generators for the benchmarks.

use belief_core::{BodyOfEvidence, FocalSet, Frame, Hypergraph, PBox};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Frame with labels `x0 .. x{n-1}`.
pub fn frame(n: usize) -> Frame {
    Frame::new((0..n).map(|i| format!("x{i}"))).expect("distinct labels")
}

fn random_set<R: Rng>(rng: &mut R, frame: &Frame, allow_empty: bool) -> FocalSet {
    loop {
        let members: Vec<&str> = frame
            .labels()
            .iter()
            .filter(|_| rng.random_bool(0.5))
            .map(String::as_str)
            .collect();
        if allow_empty || !members.is_empty() {
            return frame.subset(members).expect("labels from the frame");
        }
    }
}

/// Normalized closed-world body with `focal` random focal sets.
pub fn random_body<R: Rng>(rng: &mut R, frame: &Frame, focal: usize) -> BodyOfEvidence {
    let entries: Vec<_> = (0..focal)
        .map(|_| (random_set(rng, frame, false), rng.random_range(0.05..1.0)))
        .collect();
    BodyOfEvidence::new(frame, entries)
        .and_then(|b| b.normalize())
        .expect("positive masses")
}

/// Random step p-box on `n` points.
pub fn random_pbox<R: Rng>(rng: &mut R, n: usize) -> PBox {
    let mut cdf = || {
        let mut v: Vec<f64> = (0..n).map(|_| rng.random()).collect();
        v.sort_by(f64::total_cmp);
        v[n - 1] = 1.0;
        v
    };
    let (a, b) = (cdf(), cdf());
    let lower = a.iter().zip(&b).map(|(x, y)| x.min(*y)).collect();
    let upper = a.iter().zip(&b).map(|(x, y)| x.max(*y)).collect();
    PBox::new((0..n).map(|i| format!("x{i}")).collect(), lower, upper).expect("valid cdfs")
}

/// A path of `n - 1` two-element edges (a hypertree) plus, when `cyclic`,
/// one edge closing the loop.
pub fn chain(n: usize, cyclic: bool) -> Hypergraph {
    let f = frame(n);
    let mut edges: Vec<Vec<String>> = (1..n)
        .map(|i| vec![f.label(i - 1).to_string(), f.label(i).to_string()])
        .collect();
    if cyclic {
        edges.push(vec![f.label(n - 1).to_string(), f.label(0).to_string()]);
    }
    Hypergraph::from_labels(&f, edges).expect("labels from the frame")
}
