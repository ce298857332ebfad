//! Imprecise probabilities on an ordered domain.
//!
//! A p-box bounds an unknown distribution by a lower and an upper cumulative
//! step function. Slicing the probability axis at every step of either
//! function turns the p-box into precise probabilities on intervals of the
//! domain, i.e. a body of evidence whose focal sets are intervals.

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::mass::BodyOfEvidence;

const CDF_TOLERANCE: f64 = 1e-9;
/// Probability levels closer than this are treated as one breakpoint.
const LEVEL_EPSILON: f64 = 1e-12;

/// Lower and upper cumulative step functions over an ordered domain.
///
/// `lower[i]` is `F_*(x_i)` and `upper[i]` is `F^*(x_i)`; `F_* ≤ F^*`
/// pointwise and both end at one.
#[derive(Debug, Clone, PartialEq)]
pub struct PBox {
    domain: Vec<String>,
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl PBox {
    pub fn new(domain: Vec<String>, lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidPBox(msg));
        if domain.is_empty() {
            return bad("empty domain".into());
        }
        if lower.len() != domain.len() || upper.len() != domain.len() {
            return bad(format!(
                "domain has {} points but lower has {} and upper has {}",
                domain.len(),
                lower.len(),
                upper.len()
            ));
        }
        // validates label distinctness
        Frame::new(domain.iter().cloned())?;
        for (name, cdf) in [("lower", &lower), ("upper", &upper)] {
            if cdf.iter().any(|v| !(0.0..=1.0 + CDF_TOLERANCE).contains(v)) {
                return bad(format!("{name} CDF leaves [0, 1]"));
            }
            if cdf.windows(2).any(|w| w[1] < w[0]) {
                return bad(format!("{name} CDF decreases"));
            }
            let last = cdf[cdf.len() - 1];
            if (last - 1.0).abs() > CDF_TOLERANCE {
                return bad(format!("{name} CDF ends at {last}, not 1"));
            }
        }
        if let Some(i) = lower.iter().zip(&upper).position(|(lo, up)| lo > up) {
            return bad(format!("lower CDF exceeds upper CDF at {:?}", domain[i]));
        }
        let clamp = |mut v: Vec<f64>| {
            v.iter_mut().for_each(|x| *x = x.min(1.0));
            *v.last_mut().unwrap() = 1.0;
            v
        };
        Ok(PBox {
            domain,
            lower: clamp(lower),
            upper: clamp(upper),
        })
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    /// `F_*` at each domain point.
    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    /// `F^*` at each domain point.
    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Bounds `[p_*, p^*]` on the probability of each single domain point:
    /// `p^*(x_i) = F^*(x_i) - F_*(x_{i-1})` and
    /// `p_*(x_i) = max(0, F_*(x_i) - F^*(x_{i-1}))`.
    pub fn point_bounds(&self) -> Vec<(f64, f64)> {
        (0..self.domain.len())
            .map(|i| {
                let (prev_lo, prev_up) = if i == 0 {
                    (0.0, 0.0)
                } else {
                    (self.lower[i - 1], self.upper[i - 1])
                };
                ((self.lower[i] - prev_up).max(0.0), self.upper[i] - prev_lo)
            })
            .collect()
    }
}

/// Closed interval `[lo, hi]` of domain indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn new(lo: usize, hi: usize) -> Self {
        Interval { lo, hi }
    }

    pub fn point(i: usize) -> Self {
        Interval { lo: i, hi: i }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.lo <= i && i <= self.hi
    }
}

/// Probabilities on contiguous intervals of an ordered domain. Intervals may
/// overlap.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalMassList {
    domain: Vec<String>,
    entries: Vec<(Interval, f64)>,
}

impl IntervalMassList {
    pub fn new(domain: Vec<String>, entries: Vec<(Interval, f64)>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidIntervals(msg));
        if domain.is_empty() {
            return bad("empty domain".into());
        }
        Frame::new(domain.iter().cloned())?;
        for (iv, p) in &entries {
            if iv.lo > iv.hi || iv.hi >= domain.len() {
                return bad(format!("interval [{}, {}] outside the domain", iv.lo, iv.hi));
            }
            if !p.is_finite() || *p < 0.0 {
                return bad(format!("probability {p} is not a non-negative number"));
            }
        }
        let total: f64 = entries.iter().map(|(_, p)| p).sum();
        if (total - 1.0).abs() > CDF_TOLERANCE {
            return bad(format!("probabilities sum to {total}, not 1"));
        }
        Ok(IntervalMassList { domain, entries })
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn entries(&self) -> &[(Interval, f64)] {
        &self.entries
    }

    /// Sorted by interval, duplicates merged, zero entries dropped.
    pub fn canonical(&self) -> Self {
        let mut entries: Vec<(Interval, f64)> = Vec::new();
        let mut sorted = self.entries.clone();
        sorted.sort_by_key(|(iv, _)| *iv);
        for (iv, p) in sorted {
            match entries.last_mut() {
                Some((last, q)) if *last == iv => *q += p,
                _ => entries.push((iv, p)),
            }
        }
        entries.retain(|(_, p)| *p > 0.0);
        IntervalMassList {
            domain: self.domain.clone(),
            entries,
        }
    }

    /// True when the intervals, sorted, have non-decreasing left and right
    /// ends. This is exactly the family the slice construction emits, and
    /// the regime in which the p-box correspondence is one-to-one.
    pub fn is_nested_free(&self) -> bool {
        let c = self.canonical();
        c.entries.windows(2).all(|w| w[0].0.hi <= w[1].0.hi)
    }

    /// The body of evidence over the domain as a frame.
    pub fn to_body(&self) -> Result<BodyOfEvidence> {
        let frame = Frame::new(self.domain.iter().cloned())?;
        BodyOfEvidence::new(
            &frame,
            self.entries.iter().map(|(iv, p)| {
                let labels = (iv.lo..=iv.hi).map(|i| self.domain[i].as_str());
                (frame.subset(labels).expect("interval labels come from the frame"), *p)
            }),
        )
    }
}

/// Slices the probability axis at every step of either CDF. A slice
/// `(l, l']` maps to the interval from the first point where `F^*` reaches
/// `l'` to the first point where `F_*` reaches `l'`.
pub fn pbox_to_intervals(pb: &PBox) -> IntervalMassList {
    let mut levels: Vec<f64> = pb.lower.iter().chain(&pb.upper).copied().filter(|&v| v > 0.0).collect();
    levels.sort_by(f64::total_cmp);
    let mut cuts: Vec<f64> = Vec::with_capacity(levels.len());
    for l in levels {
        match cuts.last_mut() {
            Some(last) if l - *last <= LEVEL_EPSILON => *last = l,
            _ => cuts.push(l),
        }
    }
    let first_reaching = |cdf: &[f64], level: f64| {
        cdf.iter()
            .position(|&v| v >= level - LEVEL_EPSILON)
            .unwrap_or(cdf.len() - 1)
    };
    let mut entries: Vec<(Interval, f64)> = Vec::new();
    let mut floor = 0.0;
    for top in cuts {
        let iv = Interval::new(first_reaching(&pb.upper, top), first_reaching(&pb.lower, top));
        let p = top - floor;
        floor = top;
        match entries.last_mut() {
            Some((last, q)) if *last == iv => *q += p,
            _ => entries.push((iv, p)),
        }
    }
    IntervalMassList {
        domain: pb.domain.clone(),
        entries,
    }
}

/// `F_*(x)` sums the intervals lying wholly at or below `x`; `F^*(x)` sums
/// the intervals that start at or below `x`.
pub fn intervals_to_pbox(im: &IntervalMassList) -> PBox {
    let n = im.domain.len();
    let mut lower = vec![0.0; n];
    let mut upper = vec![0.0; n];
    for (i, (lo, up)) in lower.iter_mut().zip(upper.iter_mut()).enumerate() {
        *lo = im.entries.iter().filter(|(iv, _)| iv.hi <= i).map(|(_, p)| p).sum();
        *up = im.entries.iter().filter(|(iv, _)| iv.lo <= i).map(|(_, p)| p).sum();
    }
    PBox::new(im.domain.clone(), lower, upper).expect("interval list with unit total yields a valid p-box")
}

/// Lower and upper probability of one singleton, with the lower probability
/// of its complement when known.
#[derive(Debug, Clone, PartialEq)]
pub struct SingletonBounds {
    pub label: String,
    pub lower: f64,
    pub upper: f64,
    pub complement_lower: Option<f64>,
}

impl SingletonBounds {
    pub fn new(label: impl Into<String>, lower: f64, upper: f64) -> Self {
        SingletonBounds {
            label: label.into(),
            lower,
            upper,
            complement_lower: None,
        }
    }

    pub fn with_complement(mut self, complement_lower: f64) -> Self {
        self.complement_lower = Some(complement_lower);
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubadditivityReport {
    pub sum_lower: f64,
    pub sum_upper: f64,
    /// `Σ p_* ≤ 1`
    pub lower_ok: bool,
    /// `Σ p^* ≥ 1`
    pub upper_ok: bool,
    /// `p^*(x) = 1 - p_*(x̄)` for every singleton with a supplied complement;
    /// `None` when no complement bounds were given.
    pub duality_ok: Option<bool>,
}

impl SubadditivityReport {
    pub fn passed(&self) -> bool {
        self.lower_ok && self.upper_ok && self.duality_ok.unwrap_or(true)
    }
}

/// Checks that singleton lower probabilities are sub-additive and upper
/// probabilities super-additive.
pub fn subadditivity_report(bounds: &[SingletonBounds]) -> Result<SubadditivityReport> {
    for b in bounds {
        let valid = (0.0..=1.0).contains(&b.lower) && (0.0..=1.0).contains(&b.upper) && b.lower <= b.upper;
        if !valid {
            return Err(Error::InvalidBounds {
                label: b.label.clone(),
                lower: b.lower,
                upper: b.upper,
            });
        }
    }
    let sum_lower: f64 = bounds.iter().map(|b| b.lower).sum();
    let sum_upper: f64 = bounds.iter().map(|b| b.upper).sum();
    let dual: Vec<bool> = bounds
        .iter()
        .filter_map(|b| b.complement_lower.map(|c| (b.upper - (1.0 - c)).abs() <= CDF_TOLERANCE))
        .collect();
    Ok(SubadditivityReport {
        sum_lower,
        sum_upper,
        lower_ok: sum_lower <= 1.0 + CDF_TOLERANCE,
        upper_ok: sum_upper >= 1.0 - CDF_TOLERANCE,
        duality_ok: (!dual.is_empty()).then(|| dual.iter().all(|&d| d)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn two_point() -> PBox {
        PBox::new(labels(&["a", "b"]), vec![0.2, 1.0], vec![0.6, 1.0]).unwrap()
    }

    fn assert_entries(got: &IntervalMassList, want: &[(Interval, f64)]) {
        assert_eq!(got.entries().len(), want.len(), "{got:?}");
        for ((gi, gp), (wi, wp)) in got.entries().iter().zip(want) {
            assert_eq!(gi, wi);
            assert!((gp - wp).abs() < 1e-12, "{gp} vs {wp}");
        }
    }

    #[test]
    fn precise_cdf_gives_singletons() {
        let pb = PBox::new(labels(&["a", "b", "c"]), vec![0.3, 0.7, 1.0], vec![0.3, 0.7, 1.0]).unwrap();
        let im = pbox_to_intervals(&pb);
        assert_entries(
            &im,
            &[
                (Interval::point(0), 0.3),
                (Interval::point(1), 0.4),
                (Interval::point(2), 0.3),
            ],
        );
    }

    #[test]
    fn two_point_slices() {
        let im = pbox_to_intervals(&two_point());
        assert_entries(
            &im,
            &[
                (Interval::point(0), 0.2),
                (Interval::new(0, 1), 0.4),
                (Interval::point(1), 0.4),
            ],
        );
    }

    #[test]
    fn intervals_back_to_pbox() {
        let im = IntervalMassList::new(
            labels(&["a", "b"]),
            vec![
                (Interval::point(0), 0.2),
                (Interval::new(0, 1), 0.4),
                (Interval::point(1), 0.4),
            ],
        )
        .unwrap();
        let pb = intervals_to_pbox(&im);
        let want = two_point();
        for i in 0..2 {
            assert!((pb.lower()[i] - want.lower()[i]).abs() < 1e-12);
            assert!((pb.upper()[i] - want.upper()[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn singletons_give_precise_pbox() {
        let im = IntervalMassList::new(
            labels(&["a", "b", "c"]),
            vec![(Interval::point(0), 0.5), (Interval::point(2), 0.5)],
        )
        .unwrap();
        let pb = intervals_to_pbox(&im);
        assert_eq!(pb.lower(), pb.upper());
    }

    #[test]
    fn point_bounds_of_two_point_pbox() {
        let b = two_point().point_bounds();
        assert!((b[0].0 - 0.2).abs() < 1e-15 && (b[0].1 - 0.6).abs() < 1e-15);
        assert!((b[1].0 - 0.4).abs() < 1e-15 && (b[1].1 - 0.8).abs() < 1e-15);
    }

    #[test]
    fn invalid_pboxes_rejected() {
        let d = labels(&["a", "b"]);
        assert!(PBox::new(d.clone(), vec![0.7, 1.0], vec![0.6, 1.0]).is_err());
        assert!(PBox::new(d.clone(), vec![0.2, 0.9], vec![0.6, 1.0]).is_err());
        assert!(PBox::new(d.clone(), vec![0.5, 0.4], vec![0.6, 1.0]).is_err());
        assert!(PBox::new(d.clone(), vec![0.5], vec![0.6, 1.0]).is_err());
        assert!(PBox::new(labels(&["a", "a"]), vec![0.5, 1.0], vec![0.6, 1.0]).is_err());
        assert!(PBox::new(vec![], vec![], vec![]).is_err());
    }

    #[test]
    fn invalid_interval_lists_rejected() {
        let d = labels(&["a", "b"]);
        assert!(IntervalMassList::new(d.clone(), vec![(Interval::new(1, 0), 1.0)]).is_err());
        assert!(IntervalMassList::new(d.clone(), vec![(Interval::new(0, 2), 1.0)]).is_err());
        assert!(IntervalMassList::new(d.clone(), vec![(Interval::point(0), 0.5)]).is_err());
        assert!(IntervalMassList::new(d, vec![(Interval::point(0), -0.5), (Interval::point(1), 1.5)]).is_err());
    }

    #[test]
    fn crossing_intervals_are_not_one_to_one() {
        let im = IntervalMassList::new(
            labels(&["a", "b", "c"]),
            vec![(Interval::new(0, 2), 0.5), (Interval::point(1), 0.5)],
        )
        .unwrap();
        assert!(!im.is_nested_free());
        let back = pbox_to_intervals(&intervals_to_pbox(&im));
        assert_ne!(back.canonical(), im.canonical());
        assert!(back.is_nested_free());
    }

    #[test]
    fn die_report() {
        let faces: Vec<_> = (1..=6)
            .map(|i| SingletonBounds::new(i.to_string(), 1.0 / 7.0, 1.0 / 5.0))
            .collect();
        let r = subadditivity_report(&faces).unwrap();
        assert!((r.sum_lower - 6.0 / 7.0).abs() < 1e-12);
        assert!((r.sum_upper - 6.0 / 5.0).abs() < 1e-12);
        assert!(r.passed());
        assert_eq!(r.duality_ok, None);
    }

    #[test]
    fn precise_distribution_is_additive() {
        let bounds = [
            SingletonBounds::new("a", 0.25, 0.25),
            SingletonBounds::new("b", 0.75, 0.75),
        ];
        let r = subadditivity_report(&bounds).unwrap();
        assert_eq!(r.sum_lower, 1.0);
        assert_eq!(r.sum_upper, 1.0);
        assert!(r.passed());
    }

    #[test]
    fn superadditive_lower_bounds_fail() {
        let bounds = [SingletonBounds::new("a", 0.6, 0.8), SingletonBounds::new("b", 0.6, 0.8)];
        let r = subadditivity_report(&bounds).unwrap();
        assert!((r.sum_lower - 1.2).abs() < 1e-15);
        assert!(!r.lower_ok);
        assert!(!r.passed());
    }

    #[test]
    fn duality_check() {
        // two-element frame: the complement of {a} is {b}
        let ok = [
            SingletonBounds::new("a", 0.2, 0.6).with_complement(0.4),
            SingletonBounds::new("b", 0.4, 0.8).with_complement(0.2),
        ];
        assert_eq!(subadditivity_report(&ok).unwrap().duality_ok, Some(true));
        let broken = [SingletonBounds::new("a", 0.2, 0.7).with_complement(0.4)];
        assert_eq!(subadditivity_report(&broken).unwrap().duality_ok, Some(false));
    }

    #[test]
    fn inverted_bounds_rejected() {
        let err = subadditivity_report(&[SingletonBounds::new("a", 0.5, 0.4)]).unwrap_err();
        assert!(matches!(err, Error::InvalidBounds { .. }));
    }
}
