//! Built-in scenarios. Each prints its inputs and results, then checks the
//! expected numbers and reports PASS or FAIL per check.

use belief_core::json::{format_number, JSON_DIGITS};
use belief_core::{
    belief, dempster, graham_reduce, is_hypertree, pcr5, smets, subadditivity_report, BodyOfEvidence, Frame,
    Hypergraph, Hypothesis, SingletonBounds,
};
use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Demo {
    /// Two doctors, three diagnoses, nearly total conflict.
    Zadeh,
    /// A cyclic hypergraph and an acyclic rearrangement of it.
    Fig3,
    /// Imprecise face probabilities of a die.
    Die,
}

impl Demo {
    pub fn name(self) -> &'static str {
        match self {
            Demo::Zadeh => "zadeh",
            Demo::Fig3 => "fig3",
            Demo::Die => "die",
        }
    }
}

const REDUCTION_TRIALS: usize = 300;

struct Transcript {
    out: String,
    passed: bool,
}

impl Transcript {
    fn new(title: &str) -> Self {
        Transcript {
            out: format!("== {title} ==\n"),
            passed: true,
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    fn check(&mut self, ok: bool, what: impl AsRef<str>) {
        self.passed &= ok;
        let _ = writeln!(self.out, "{}  {}", if ok { "PASS" } else { "FAIL" }, what.as_ref());
    }

    fn body(&mut self, name: &str, body: &BodyOfEvidence) {
        let entries: Vec<String> = body
            .iter()
            .map(|(s, m)| format!("{s}: {}", format_number(m, JSON_DIGITS)))
            .collect();
        self.line(format!("{name} = {}", entries.join(", ")));
    }

    fn finish(mut self) -> (String, bool) {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        self.line(format!("overall: {verdict}"));
        (self.out, self.passed)
    }
}

pub fn run(demo: Demo) -> (String, bool) {
    match demo {
        Demo::Zadeh => zadeh(),
        Demo::Fig3 => fig3(),
        Demo::Die => die(),
    }
}

fn zadeh() -> (String, bool) {
    let mut t = Transcript::new("zadeh: two doctors");
    let f = Frame::new(["meningitis", "concussion", "tumor"]).expect("fixed labels");
    let a = BodyOfEvidence::from_labels(&f, [(vec!["meningitis"], 0.99), (vec!["tumor"], 0.01)]).expect("valid");
    let b = BodyOfEvidence::from_labels(&f, [(vec!["concussion"], 0.99), (vec!["tumor"], 0.01)]).expect("valid");
    t.body("doctor A", &a);
    t.body("doctor B", &b);
    let set = |labels: &[&str]| f.subset(labels).expect("fixed labels");
    let tol = 1e-12;

    match dempster(&a, &b) {
        Ok(r) => {
            t.body("dempster", &r.result);
            let bel = belief(&r.result, &Hypothesis::new(set(&["tumor"]))).unwrap_or(f64::NAN);
            t.check(
                (bel - 1.0).abs() < tol,
                format!("dempster Bel(tumor) = {} (expected 1)", format_number(bel, JSON_DIGITS)),
            );
            t.check(
                (r.conflict_mass - 0.9999).abs() < tol,
                format!(
                    "dempster conflict K = {} (expected 0.9999)",
                    format_number(r.conflict_mass, JSON_DIGITS)
                ),
            );
        }
        Err(e) => t.check(false, format!("dempster failed: {e}")),
    }

    match smets(&a, &b) {
        Ok(r) => {
            t.body("smets", &r.result);
            let empty = r.result.empty_mass();
            let tumor = r.result.mass_of(&set(&["tumor"])).unwrap_or(f64::NAN);
            t.check(
                (empty - 0.9999).abs() < tol,
                format!("smets m(∅) = {} (expected 0.9999)", format_number(empty, JSON_DIGITS)),
            );
            t.check(
                (tumor - 0.0001).abs() < tol,
                format!(
                    "smets m(tumor) = {} (expected 0.0001)",
                    format_number(tumor, JSON_DIGITS)
                ),
            );
        }
        Err(e) => t.check(false, format!("smets failed: {e}")),
    }

    match pcr5(&a, &b) {
        Ok(r) => {
            t.body("pcr5", &r.result);
            for (label, want) in [("meningitis", 0.499851), ("concussion", 0.499851), ("tumor", 0.000298)] {
                let got = r.result.mass_of(&set(&[label])).unwrap_or(f64::NAN);
                t.check(
                    (got - want).abs() < 1e-9,
                    format!(
                        "pcr5 m({label}) = {} (expected {want})",
                        format_number(got, JSON_DIGITS)
                    ),
                );
            }
        }
        Err(e) => t.check(false, format!("pcr5 failed: {e}")),
    }
    t.finish()
}

fn fig3() -> (String, bool) {
    let mut t = Transcript::new("fig3: hypergraph acyclicity");
    let f = Frame::new(["α", "β", "γ", "δ", "ε", "ζ", "η", "θ"]).expect("fixed labels");
    let left = Hypergraph::from_labels(
        &f,
        [
            vec!["α", "η"],
            vec!["β", "ζ"],
            vec!["δ", "θ"],
            vec!["ε", "ζ"],
            vec!["β", "γ", "δ"],
            vec!["δ", "ε", "η"],
        ],
    )
    .expect("fixed edges");
    let set = |labels: &[&str]| f.subset(labels).expect("fixed labels");
    let right = left
        .replace_edges(
            &[set(&["β", "ζ"]), set(&["ε", "ζ"])],
            &[set(&["β", "δ", "ε"]), set(&["β", "ε", "ζ"])],
        )
        .expect("fixed edges");

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (name, h, want) in [("left", &left, false), ("right", &right, true)] {
        let edges: Vec<String> = h.edges().map(|e| e.to_string()).collect();
        t.line(format!("{name}: {}", edges.join(" ")));
        let mut agree = 0;
        for _ in 0..REDUCTION_TRIALS {
            let mut edges: Vec<_> = h.edges().collect();
            for i in (1..edges.len()).rev() {
                edges.swap(i, rng.random_range(0..=i));
            }
            let shuffled = Hypergraph::new(&f, edges).expect("same edges");
            let rest = graham_reduce(&shuffled, |k| rng.random_range(0..k));
            if (rest.len() <= 1) == want {
                agree += 1;
            }
        }
        let verdict = is_hypertree(h);
        t.check(
            verdict == want && agree == REDUCTION_TRIALS,
            format!("{name} hypertree = {verdict} (expected {want}), {agree}/{REDUCTION_TRIALS} random reduction orders agree"),
        );
    }
    match left.is_covered_by(&right) {
        Ok(covered) => t.check(covered, format!("every left edge lies inside a right edge: {covered}")),
        Err(e) => t.check(false, format!("covering check failed: {e}")),
    }
    t.finish()
}

fn die() -> (String, bool) {
    let mut t = Transcript::new("die: six faces with p in [1/7, 1/5]");
    let faces: Vec<_> = (1..=6)
        .map(|i| SingletonBounds::new(format!("face{i}"), 1.0 / 7.0, 1.0 / 5.0))
        .collect();
    for b in &faces {
        t.line(format!(
            "{}: [{}, {}]",
            b.label,
            format_number(b.lower, 12),
            format_number(b.upper, 12)
        ));
    }
    match subadditivity_report(&faces) {
        Ok(r) => {
            t.check(
                (r.sum_lower - 6.0 / 7.0).abs() < 1e-12,
                format!("Σp_* = {} (expected 6/7)", format_number(r.sum_lower, 12)),
            );
            t.check(
                (r.sum_upper - 6.0 / 5.0).abs() < 1e-12,
                format!("Σp^* = {} (expected 6/5)", format_number(r.sum_upper, 12)),
            );
            t.check(r.lower_ok, "lower bounds sub-additive (Σp_* ≤ 1)");
            t.check(r.upper_ok, "upper bounds super-additive (Σp^* ≥ 1)");
        }
        Err(e) => t.check(false, format!("report failed: {e}")),
    }
    t.finish()
}
