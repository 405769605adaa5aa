//! Certified bounds on the entropy rate by exhaustive prefix-tree enumeration.
//!
//! For each depth `n` the tree holds one [`PathState`] per observation prefix
//! `z` of length `n`: its probability, the belief `F_z(p0)`, and the image
//! `[F_z(0), F_z(1)]` of the whole belief interval. Writing
//! `phi(y) = hb(g0(y))`, a row is
//!
//! ```text
//! H(n) = sum_z P(z) phi(F_z(p0))
//! L(n) = sum_z P(z) min { phi(y) : y in [F_z(0), F_z(1)] }
//! U(n) = sum_z P(z) max { phi(y) : y in [F_z(0), F_z(1)] }
//! ```
//!
//! `L` never decreases and `U` never increases with `n`, both bracket `H(n)`
//! and the entropy rate, and when the belief maps contract with coefficient
//! `delta`, `U(n) - L(n) <= M delta^n`.
//!
//! Levels are stored breadth-first while they fit the node budget. Deeper
//! rows are produced by walking the subtrees below the last stored level,
//! which keeps memory flat at the cost of recomputing the upper levels.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forward::MAX_DEPTH;
use crate::model::{hb, ContractionInfo, ModelParams};
use crate::parallel::{available_threads, Executor, CHUNK};
use crate::sum::NeumaierSum;

/// Default limit on the number of stored nodes in one level (2^22).
pub const DEFAULT_NODE_BUDGET: usize = 1 << 22;

/// One observation prefix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PathState {
    pub prob: f64,
    /// `F_z(p0)`.
    pub belief: f64,
    /// `F_z(0)`.
    pub lo: f64,
    /// `F_z(1)`.
    pub hi: f64,
}

impl PathState {
    /// The empty prefix.
    pub fn root(params: &ModelParams) -> Self {
        Self {
            prob: 1.0,
            belief: params.p0(),
            lo: 0.0,
            hi: 1.0,
        }
    }

    #[inline]
    pub fn child(&self, params: &ModelParams, symbol: u8) -> Self {
        Self {
            prob: self.prob * params.emit(self.belief, symbol),
            belief: params.update(self.belief, symbol),
            lo: params.update(self.lo, symbol),
            hi: params.update(self.hi, symbol),
        }
    }
}

/// One line of the convergence table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundsRow {
    pub n: usize,
    #[serde(rename = "L")]
    pub lower: f64,
    #[serde(rename = "H")]
    pub approx: f64,
    #[serde(rename = "U")]
    pub upper: f64,
    pub width: f64,
    /// `M delta^n`; absent when the maps are not contractive.
    pub geo: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub rows: Vec<BoundsRow>,
    /// Midpoint of the final interval.
    pub estimate: f64,
    /// Half-width of the final interval.
    pub guaranteed_error: f64,
    pub converged: bool,
    pub contraction: ContractionInfo,
}

impl ConvergenceReport {
    pub fn last(&self) -> &BoundsRow {
        self.rows.last().expect("a report always has row zero")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsConfig {
    /// Worker count; 1 runs the sequential reference path.
    pub threads: usize,
    /// Largest level kept in memory.
    pub node_budget: usize,
}

impl Default for BoundsConfig {
    fn default() -> Self {
        Self {
            threads: available_threads(),
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

impl BoundsConfig {
    pub fn sequential() -> Self {
        Self {
            threads: 1,
            ..Self::default()
        }
    }
}

/// `hb(g0(y))`: entropy of the next symbol at belief `y`.
#[inline]
pub fn phi(params: &ModelParams, y: f64) -> f64 {
    hb(params.g0(y))
}

/// The belief `y*` with `g0(y*) = 1/2`, where `phi` peaks; `None` when `g0` is constant.
pub fn crossing_point(params: &ModelParams) -> Option<f64> {
    let e = params.eps();
    let denom = params.slope() * (1.0 - 2.0 * e);
    (denom > 0.0).then(|| (0.5 - params.pi10() * (1.0 - e) - (1.0 - params.pi10()) * e) / denom)
}

/// Exact `(min, max)` of `phi` over `[lo, hi]`.
///
/// `g0` is affine and nondecreasing, so `phi` rises up to `y*` and falls after
/// it: the minimum sits at an endpoint and the maximum is 1 whenever `y*` is
/// inside the interval.
pub fn extremize_phi(params: &ModelParams, lo: f64, hi: f64) -> (f64, f64) {
    extremize_with(params, crossing_point(params), lo, hi)
}

#[inline]
fn extremize_with(params: &ModelParams, peak: Option<f64>, lo: f64, hi: f64) -> (f64, f64) {
    let Some(peak) = peak else {
        let v = phi(params, lo);
        return (v, v);
    };
    let (a, b) = (phi(params, lo), phi(params, hi));
    let max = if lo <= peak && peak <= hi { 1.0 } else { a.max(b) };
    (a.min(b), max)
}

/// Children of every state, child `2i + s` extending parent `i` by symbol `s`.
pub fn level_expand(params: &ModelParams, states: &[PathState], node_budget: usize) -> Result<Vec<PathState>> {
    expand_with(params, states, node_budget, &Executor::sequential())
}

fn expand_with(
    params: &ModelParams,
    states: &[PathState],
    node_budget: usize,
    exec: &Executor,
) -> Result<Vec<PathState>> {
    let requested = states.len().saturating_mul(2);
    if requested > node_budget {
        return Err(Error::Capacity {
            what: "level size exceeds node budget",
            requested,
            limit: node_budget,
        });
    }
    let mut out = vec![PathState::root(params); requested];
    exec.fill_pairs(states, &mut out, |parent, pair| {
        pair[0] = parent.child(params, 0);
        pair[1] = parent.child(params, 1);
    });
    Ok(out)
}

#[derive(Debug, Default, Clone, Copy)]
struct RowSums {
    lower: NeumaierSum,
    approx: NeumaierSum,
    upper: NeumaierSum,
}

impl RowSums {
    #[inline]
    fn add(&mut self, params: &ModelParams, peak: Option<f64>, s: &PathState) {
        let (min, max) = extremize_with(params, peak, s.lo, s.hi);
        self.lower += s.prob * min;
        self.approx += s.prob * phi(params, s.belief);
        self.upper += s.prob * max;
    }

    fn merge(mut self, other: Self) -> Self {
        self.lower += other.lower;
        self.approx += other.approx;
        self.upper += other.upper;
        self
    }

    fn into_row(self, n: usize, contraction: &ContractionInfo) -> BoundsRow {
        let (lower, approx, upper) = (self.lower.sum(), self.approx.sum(), self.upper.sum());
        BoundsRow {
            n,
            lower,
            approx,
            upper,
            width: upper - lower,
            geo: contraction.envelope(n),
        }
    }
}

/// Row `n` from the complete set of depth-`n` states.
pub fn compute_row(params: &ModelParams, n: usize, states: &[PathState], contraction: &ContractionInfo) -> BoundsRow {
    row_with(params, n, states, contraction, &Executor::sequential())
}

fn row_with(
    params: &ModelParams,
    n: usize,
    states: &[PathState],
    contraction: &ContractionInfo,
    exec: &Executor,
) -> BoundsRow {
    let peak = crossing_point(params);
    exec.map_chunks(states.len(), CHUNK, |start, end| {
        let mut sums = RowSums::default();
        for s in &states[start..end] {
            sums.add(params, peak, s);
        }
        sums
    })
    .into_iter()
    .fold(RowSums::default(), RowSums::merge)
    .into_row(n, contraction)
}

fn descend(params: &ModelParams, peak: Option<f64>, state: &PathState, depth: usize, sums: &mut RowSums) {
    if depth == 0 {
        sums.add(params, peak, state);
        return;
    }
    for s in 0..2u8 {
        descend(params, peak, &state.child(params, s), depth - 1, sums);
    }
}

/// Row at `extra` levels below the stored `frontier`, walked depth first.
fn deep_row(
    params: &ModelParams,
    n: usize,
    frontier: &[PathState],
    extra: usize,
    contraction: &ContractionInfo,
    exec: &Executor,
) -> BoundsRow {
    let peak = crossing_point(params);
    let chunk = (CHUNK >> extra.min(12)).max(1);
    exec.map_chunks(frontier.len(), chunk, |start, end| {
        let mut sums = RowSums::default();
        for s in &frontier[start..end] {
            descend(params, peak, s, extra, &mut sums);
        }
        sums
    })
    .into_iter()
    .fold(RowSums::default(), RowSums::merge)
    .into_row(n, contraction)
}

/// Runs to tolerance `tol` with the default configuration.
pub fn run(params: &ModelParams, tol: f64, n_max: usize) -> Result<ConvergenceReport> {
    run_with(params, tol, n_max, &BoundsConfig::default())
}

/// Emits rows `n = 0, 1, ...` until `width <= 2 tol` or `n = n_max`.
pub fn run_with(params: &ModelParams, tol: f64, n_max: usize, config: &BoundsConfig) -> Result<ConvergenceReport> {
    if !(tol > 0.0) {
        return Err(Error::Parameter {
            field: "tol",
            value: tol,
            reason: "must be positive",
        });
    }
    let contraction = params.contraction();
    let rows = drive(params, n_max, config, &contraction, |row| row.width <= 2.0 * tol)?;
    let last = rows.last().copied().expect("row zero is always computed");
    Ok(ConvergenceReport {
        rows,
        estimate: 0.5 * (last.lower + last.upper),
        guaranteed_error: 0.5 * last.width,
        converged: last.width <= 2.0 * tol,
        contraction,
    })
}

/// Rows `0..=n_max` with no stopping rule.
pub fn table(params: &ModelParams, n_max: usize, config: &BoundsConfig) -> Result<Vec<BoundsRow>> {
    drive(params, n_max, config, &params.contraction(), |_| false)
}

fn drive(
    params: &ModelParams,
    n_max: usize,
    config: &BoundsConfig,
    contraction: &ContractionInfo,
    stop: impl Fn(&BoundsRow) -> bool,
) -> Result<Vec<BoundsRow>> {
    if n_max > MAX_DEPTH {
        return Err(Error::Capacity {
            what: "requested depth exceeds hard cap",
            requested: n_max,
            limit: MAX_DEPTH,
        });
    }
    let exec = Executor::new(config.threads);
    let mut level = vec![PathState::root(params)];
    let mut stored_depth = 0;
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if n > stored_depth && level.len() * 2 <= config.node_budget {
            level = expand_with(params, &level, config.node_budget, &exec)?;
            stored_depth = n;
        }
        let row = if n == stored_depth {
            row_with(params, n, &level, contraction, &exec)
        } else {
            deep_row(params, n, &level, n - stored_depth, contraction, &exec)
        };
        rows.push(row);
        if stop(&row) {
            break;
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn reference() -> ModelParams {
        ModelParams::new(0.1, 0.1, 0.01).unwrap()
    }

    #[test]
    fn phi_values() {
        let p = reference();
        assert_abs_diff_eq!(phi(&p, 0.5), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(phi(&p, 0.0), hb(0.108), epsilon = 1e-15);
        assert_abs_diff_eq!(phi(&p, 1.0), hb(0.108), epsilon = 1e-12);
        assert_abs_diff_eq!(phi(&p, 0.0), 0.49385, epsilon = 1e-4);
    }

    #[test]
    fn extremize_full_interval() {
        let p = reference();
        let (min, max) = extremize_phi(&p, 0.0, 1.0);
        assert_abs_diff_eq!(min, 0.493853723699520, epsilon = 1e-12);
        assert_eq!(max, 1.0);
        let v = phi(&p, 0.3);
        assert_eq!(extremize_phi(&p, 0.3, 0.3), (v, v));
    }

    #[test]
    fn extremize_on_decreasing_side() {
        let p = reference();
        let (lo, hi) = (p.f0(0.0), p.f0(1.0));
        assert_abs_diff_eq!(lo, 0.91667, epsilon = 1e-5);
        assert_abs_diff_eq!(hi, 0.99888, epsilon = 1e-5);
        let (min, max) = extremize_phi(&p, lo, hi);
        assert_eq!(min, phi(&p, hi));
        assert_eq!(max, phi(&p, lo));
        // Grid scan of the same interval.
        let scan: Vec<f64> = (0..=100_000)
            .map(|i| phi(&p, lo + (hi - lo) * i as f64 / 100_000.0))
            .collect();
        let smin = scan.iter().copied().fold(f64::INFINITY, f64::min);
        let smax = scan.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        assert!(min <= smin + 1e-15 && (smin - min).abs() < 1e-12);
        assert!(max >= smax - 1e-15 && (smax - max).abs() < 1e-12);
    }

    #[test]
    fn extremize_constant_phi() {
        let p = ModelParams::new(0.1, 0.1, 0.5).unwrap();
        assert_eq!(crossing_point(&p), None);
        assert_eq!(extremize_phi(&p, 0.0, 1.0), (1.0, 1.0));
    }

    #[test]
    fn root_expansion() {
        let p = reference();
        let kids = level_expand(&p, &[PathState::root(&p)], 16).unwrap();
        assert_abs_diff_eq!(kids[0].prob, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(kids[1].prob, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(kids[0].belief, 0.99, epsilon = 1e-15);
        assert_abs_diff_eq!(kids[1].belief, 0.01, epsilon = 1e-15);
        assert_abs_diff_eq!(kids[0].lo, 0.91667, epsilon = 1e-5);
        assert_abs_diff_eq!(kids[0].hi, 0.99888, epsilon = 1e-5);
    }

    #[test]
    fn expansion_respects_budget() {
        let p = reference();
        let states = vec![PathState::root(&p); 8];
        assert!(matches!(
            level_expand(&p, &states, 15),
            Err(Error::Capacity { requested: 16, limit: 15, .. })
        ));
    }

    #[test]
    fn noiseless_intervals_collapse() {
        let p = ModelParams::new(0.1, 0.1, 0.0).unwrap();
        let kids = level_expand(&p, &[PathState::root(&p)], 16).unwrap();
        assert_eq!((kids[0].lo, kids[0].hi), (1.0, 1.0));
        assert_eq!((kids[1].lo, kids[1].hi), (0.0, 0.0));
    }

    #[test]
    fn first_rows() {
        let p = reference();
        let c = p.contraction();
        let root = [PathState::root(&p)];
        let r0 = compute_row(&p, 0, &root, &c);
        assert_abs_diff_eq!(r0.approx, 1.0, epsilon = 1e-15);
        assert_eq!(r0.upper, 1.0);
        assert_abs_diff_eq!(r0.lower, 0.49385, epsilon = 1e-5);
        assert_eq!(r0.geo, Some(c.big_m));
        let kids = level_expand(&p, &root, 16).unwrap();
        let r1 = compute_row(&p, 1, &kids, &c);
        // h_b(g0(0.99)) with g0(0.99) = 0.784 * 0.99 + 0.108
        assert_abs_diff_eq!(r1.approx, hb(0.88416), epsilon = 1e-12);
        assert_abs_diff_eq!(r1.approx, 0.5173, epsilon = 1e-4);
    }

    #[test]
    fn run_rejects_bad_arguments() {
        let p = reference();
        assert!(matches!(run(&p, 0.0, 5), Err(Error::Parameter { field: "tol", .. })));
        assert!(matches!(run(&p, 1e-3, 31), Err(Error::Capacity { .. })));
    }

    #[test]
    fn run_depth_zero() {
        let p = reference();
        let r = run_with(&p, 1e-3, 0, &BoundsConfig::sequential()).unwrap();
        assert_eq!(r.rows.len(), 1);
        assert!(!r.converged);
        let r = run_with(&p, 0.3, 0, &BoundsConfig::sequential()).unwrap();
        assert!(r.converged);
    }

    #[test]
    fn streamed_rows_match_stored_rows() {
        let p = ModelParams::new(0.2, 0.1, 0.05).unwrap();
        let stored = table(&p, 12, &BoundsConfig::sequential()).unwrap();
        let small = BoundsConfig {
            threads: 1,
            node_budget: 64,
        };
        let streamed = table(&p, 12, &small).unwrap();
        for (a, b) in stored.iter().zip(&streamed) {
            assert!((a.lower - b.lower).abs() <= 1e-14);
            assert!((a.approx - b.approx).abs() <= 1e-14);
            assert!((a.upper - b.upper).abs() <= 1e-14);
        }
    }
}
