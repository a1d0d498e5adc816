//! Randomized decision procedure for `Γ'(g) >= k` by color coding.
//!
//! Each trial colors every vertex uniformly from `1..=k` and then repeatedly
//! deletes vertices that miss some smaller color among their surviving
//! neighbors. Whatever survives is a weak witness, so a survivor colored `k`
//! proves `Γ'(g) >= k`. Trial `i` draws from stream `i` of a ChaCha generator
//! keyed by the seed, which makes the outcome independent of scheduling.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{Color, ColorAssignment, Variant, UNCOLORED};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::witness::Witness;

/// Most trials a single call will run.
pub const REPETITION_CAP: u64 = 10_000_000;

const CHUNK: u64 = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColorCodingOutcome {
    Yes(Witness),
    ProbablyNo,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ColorCodingReport {
    pub outcome: ColorCodingOutcome,
    /// `⌈ln(1/ε) · k^(2^(k-1))⌉`, possibly larger than `u64`.
    pub theoretical_trials: f64,
    /// Trials planned after applying [`REPETITION_CAP`].
    pub planned_trials: u64,
    /// Trials run before the answer was known.
    pub trials_run: u64,
    /// Set when the cap cut the theoretical count, voiding the error bound.
    pub capped: bool,
    /// Set when `k > Δ + 1` decided the answer without sampling.
    pub exact: bool,
    pub seed: u64,
}

impl ColorCodingReport {
    pub fn is_yes(&self) -> bool {
        matches!(self.outcome, ColorCodingOutcome::Yes(_))
    }
}

/// `⌈ln(1/ε) · k^(2^(k-1))⌉` as a float, and the capped integer count.
pub fn repetitions(k: usize, epsilon: f64) -> (f64, u64, bool) {
    let exponent = 2f64.powi((k as i32 - 1).max(0));
    let theoretical = ((1.0 / epsilon).ln() * (k as f64).powf(exponent)).ceil().max(1.0);
    if theoretical > REPETITION_CAP as f64 {
        (theoretical, REPETITION_CAP, true)
    } else {
        (theoretical, theoretical as u64, false)
    }
}

/// Decides `Γ'(g) >= k` with one-sided error at most `epsilon` (while the
/// trial count is not capped). `Yes` always carries a valid witness.
pub fn weak_grundy_color_coding(g: &Graph, k: usize, epsilon: f64, seed: u64) -> Result<ColorCodingReport> {
    if k == 0 || k > 63 {
        return Err(Error::InvalidParameter(format!("k = {k} must lie in 1..=63")));
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidParameter(format!("epsilon = {epsilon} must lie in (0, 1)")));
    }
    let (theoretical, planned, capped) = repetitions(k, epsilon);
    let mut report = ColorCodingReport {
        outcome: ColorCodingOutcome::ProbablyNo,
        theoretical_trials: theoretical,
        planned_trials: planned,
        trials_run: 0,
        capped,
        exact: false,
        seed,
    };
    if g.n() == 0 || k > g.max_degree() + 1 {
        report.exact = true;
        return Ok(report);
    }

    let mut start = 0u64;
    while start < planned {
        let end = (start + CHUNK).min(planned);
        let hit = (start..end)
            .into_par_iter()
            .map_init(|| Pruner::new(g), |p, i| p.trial(k, seed, i).map(|w| (i, w)))
            .find_map_first(|r| r);
        if let Some((i, assignment)) = hit {
            report.trials_run = i + 1;
            let w = Witness::from_assignment(g, Variant::Weak, k, &assignment)
                .expect("surviving vertices form a weak witness");
            report.outcome = ColorCodingOutcome::Yes(w);
            return Ok(report);
        }
        report.trials_run = end;
        start = end;
    }
    Ok(report)
}

/// The largest vertex set on which every vertex `v` keeps, for each color
/// `c < col(v)`, a neighbor inside the set colored `c`. Returned sorted.
pub fn prune_to_fixpoint(g: &Graph, col: &ColorAssignment) -> Result<Vec<usize>> {
    if col.len() != g.n() {
        return Err(Error::InvalidParameter(format!("{} colors for {} vertices", col.len(), g.n())));
    }
    if let Some(v) = (0..g.n()).find(|&v| col.get(v) == UNCOLORED) {
        return Err(Error::InvalidParameter(format!("vertex {v} is uncolored")));
    }
    let mut p = Pruner::new(g);
    p.colors.copy_from_slice(col.as_slice());
    p.prune();
    Ok((0..g.n()).filter(|&v| p.alive[v]).collect())
}

/// Reusable scratch space for one worker.
struct Pruner<'g> {
    g: &'g Graph,
    colors: Vec<Color>,
    alive: Vec<bool>,
    /// `counts[offset[v] + c - 1]`: surviving neighbors of `v` colored `c`.
    counts: Vec<u32>,
    offset: Vec<usize>,
    queue: Vec<usize>,
    rng: Option<ChaCha8Rng>,
}

impl<'g> Pruner<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Pruner {
            g,
            colors: vec![UNCOLORED; n],
            alive: vec![true; n],
            counts: Vec::new(),
            offset: vec![0; n + 1],
            queue: Vec::new(),
            rng: None,
        }
    }

    fn trial(&mut self, k: usize, seed: u64, i: u64) -> Option<ColorAssignment> {
        let rng = self.rng.get_or_insert_with(|| ChaCha8Rng::seed_from_u64(seed));
        rng.set_stream(i);
        rng.set_word_pos(0);
        for c in self.colors.iter_mut() {
            *c = rng.gen_range(1..=k as Color);
        }
        let top = k as Color;
        // A vertex colored k that already misses a color cannot survive, so
        // most trials end here without running the full pruning.
        let full = (1u64 << k) - 2;
        let hopeful = (0..self.g.n()).any(|v| {
            self.colors[v] == top
                && self.g.neighbors(v).iter().fold(0u64, |acc, &u| acc | 1 << self.colors[u]) & full == full
        });
        if !hopeful {
            return None;
        }
        self.prune();
        let reached = (0..self.g.n()).any(|v| self.alive[v] && self.colors[v] == top);
        reached.then(|| {
            ColorAssignment(
                (0..self.g.n()).map(|v| if self.alive[v] { self.colors[v] } else { UNCOLORED }).collect(),
            )
        })
    }

    fn prune(&mut self) {
        let n = self.g.n();
        for v in 0..n {
            self.offset[v + 1] = self.offset[v] + (self.colors[v] as usize).saturating_sub(1);
        }
        self.counts.clear();
        self.counts.resize(self.offset[n], 0);
        self.alive.fill(true);
        for v in 0..n {
            let cv = self.colors[v];
            for &u in self.g.neighbors(v) {
                let cu = self.colors[u];
                if cu < cv {
                    self.counts[self.offset[v] + cu as usize - 1] += 1;
                }
            }
        }
        self.queue.clear();
        for v in 0..n {
            if self.lacks_color(v) {
                self.alive[v] = false;
                self.queue.push(v);
            }
        }
        while let Some(u) = self.queue.pop() {
            let cu = self.colors[u];
            for &w in self.g.neighbors(u) {
                if !self.alive[w] || self.colors[w] <= cu {
                    continue;
                }
                let slot = self.offset[w] + cu as usize - 1;
                self.counts[slot] -= 1;
                if self.counts[slot] == 0 {
                    self.alive[w] = false;
                    self.queue.push(w);
                }
            }
        }
    }

    fn lacks_color(&self, v: usize) -> bool {
        self.counts[self.offset[v]..self.offset[v + 1]].contains(&0)
    }
}
