#![allow(dead_code)]

use belief_core::{BodyOfEvidence, FocalSet, Frame, PBox};
use rand::Rng;

pub const LABELS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

pub fn frame(n: usize) -> Frame {
    Frame::new(LABELS[..n].iter().copied()).unwrap()
}

pub fn set_from_mask(frame: &Frame, mask: u64) -> FocalSet {
    let members: Vec<&str> = (0..frame.len())
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| frame.label(i))
        .collect();
    frame.subset(members).unwrap()
}

pub fn mask_of(set: &FocalSet) -> u64 {
    set.bits().as_mask().unwrap()
}

/// Random normalized body with up to `max_sets` focal sets. Closed-world
/// bodies never put mass on the empty set.
pub fn random_body<R: Rng>(rng: &mut R, frame: &Frame, max_sets: usize, open_world: bool) -> BodyOfEvidence {
    let n = frame.len();
    let lo = if open_world { 0 } else { 1 };
    let k = rng.random_range(1..=max_sets);
    let entries: Vec<(FocalSet, f64)> = (0..k)
        .map(|_| {
            let mask = rng.random_range(lo..(1u64 << n));
            (set_from_mask(frame, mask), rng.random_range(0.05..1.0))
        })
        .collect();
    BodyOfEvidence::new(frame, entries).unwrap().normalize().unwrap()
}

/// Random Bayesian body with every singleton supported.
pub fn random_bayesian<R: Rng>(rng: &mut R, frame: &Frame) -> BodyOfEvidence {
    let entries: Vec<(FocalSet, f64)> = (0..frame.len())
        .map(|i| (frame.singleton(i), rng.random_range(0.01..1.0)))
        .collect();
    BodyOfEvidence::new(frame, entries).unwrap().normalize().unwrap()
}

/// Dense mass vector indexed by subset mask.
pub fn dense(body: &BodyOfEvidence) -> Vec<f64> {
    let mut v = vec![0.0; 1 << body.frame().len()];
    for (s, m) in body.iter() {
        v[mask_of(&s) as usize] += m;
    }
    v
}

pub fn max_abs_diff(a: &BodyOfEvidence, b: &BodyOfEvidence) -> f64 {
    dense(a)
        .iter()
        .zip(dense(b))
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Random step p-box on `n` points: the pointwise min and max of two random
/// CDFs. Values are optionally snapped to a coarse grid to produce ties.
pub fn random_pbox<R: Rng>(rng: &mut R, n: usize) -> PBox {
    let snap = rng.random_bool(0.5);
    let mut cdf = || {
        let mut v: Vec<f64> = (0..n)
            .map(|_| {
                let x: f64 = rng.random();
                if snap {
                    (x * 10.0).round() / 10.0
                } else {
                    x
                }
            })
            .collect();
        v.sort_by(f64::total_cmp);
        v[n - 1] = 1.0;
        v
    };
    let p = cdf();
    let q = cdf();
    let lower = p.iter().zip(&q).map(|(x, y)| x.min(*y)).collect();
    let upper = p.iter().zip(&q).map(|(x, y)| x.max(*y)).collect();
    PBox::new(LABELS[..n].iter().map(|s| s.to_string()).collect(), lower, upper).unwrap()
}

/// Shannon entropy in bits.
pub fn shannon(p: &[f64]) -> f64 {
    -p.iter().filter(|&&x| x > 0.0).map(|x| x * x.log2()).sum::<f64>()
}

/// Independent PCR5: dense vectors over all `2^n` masks, every ordered pair
/// of subsets visited, zero-mass pairs included.
pub fn pcr5_oracle(a: &[f64], b: &[f64]) -> Vec<f64> {
    let size = a.len();
    let mut out = vec![0.0; size];
    for x in 0..size {
        for y in 0..size {
            let (mx, my) = (a[x], b[y]);
            let meet = x & y;
            if meet != 0 {
                out[meet] += mx * my;
            } else if mx + my > 0.0 {
                out[x] += mx * mx * my / (mx + my);
                out[y] += my * my * mx / (mx + my);
            }
        }
    }
    out
}
