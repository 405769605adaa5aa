//! Built-in self-check suite: every structural property the library relies on,
//! evaluated at preset parameter points.

use serde::Serialize;

use crate::bounds::{self, BoundsConfig};
use crate::forward::{self, ObservationString};
use crate::model::{hb, ModelParams};
use crate::sum::compensated_sum;

/// Parameter points exercised by default: the reference point, an asymmetric
/// chain, and the noise-free corner.
pub const DEFAULT_PARAMS: [(f64, f64, f64); 3] = [(0.1, 0.1, 0.01), (0.2, 0.1, 0.05), (0.1, 0.1, 0.0)];

const SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, Default)]
pub struct ValidationOptions {
    /// Lower depth caps for a fast smoke run.
    pub quick: bool,
    pub threads: usize,
    /// Deliberately corrupts the sandwich check, to show failures are caught.
    pub inject_fault: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

struct Depths {
    conservation: usize,
    oracle: usize,
    chain: usize,
    table: usize,
}

impl Depths {
    fn new(quick: bool) -> Self {
        if quick {
            Self {
                conservation: 8,
                oracle: 6,
                chain: 8,
                table: 12,
            }
        } else {
            Self {
                conservation: 12,
                oracle: 10,
                chain: 12,
                table: 20,
            }
        }
    }
}

fn outcome(name: String, worst: f64, limit: f64) -> CheckOutcome {
    CheckOutcome {
        name,
        passed: worst <= limit,
        detail: format!("worst deviation {worst:.3e} (limit {limit:.0e})"),
    }
}

fn max_abs(values: impl Iterator<Item = f64>) -> f64 {
    values.fold(0.0, |m, v| if v.is_nan() { f64::INFINITY } else { m.max(v.abs()) })
}

/// Largest central-difference slope over a `grid`-point grid.
pub fn finite_difference_sup(f: impl Fn(f64) -> f64, grid: usize) -> f64 {
    let h = 1e-6;
    (0..=grid)
        .map(|i| i as f64 / grid as f64)
        .map(|x| ((f(x + h) - f(x - h)) / (2.0 * h)).abs())
        .fold(0.0, f64::max)
}

/// Runs every check at one parameter point.
pub fn check_params(params: &ModelParams, opts: &ValidationOptions) -> Vec<CheckOutcome> {
    let d = Depths::new(opts.quick);
    let tag = format!("({}, {}, {})", params.pi01(), params.pi10(), params.eps());
    let mut out = Vec::new();

    let conservation = max_abs((1..=d.conservation).map(|n| {
        compensated_sum(ObservationString::all(n).map(|z| forward::sequence_prob(params, &z).prob)) - 1.0
    }));
    out.push(outcome(format!("conservation {tag}"), conservation, SLACK));

    let oracle = max_abs((1..=d.oracle).flat_map(|n| {
        ObservationString::all(n).map(|z| {
            let bf = forward::brute_force_prob(params, &z).expect("within oracle cap");
            forward::sequence_prob(params, &z).prob - bf
        })
    }));
    out.push(outcome(format!("oracle-equivalence {tag}"), oracle, SLACK));

    let c = params.contraction();
    let fd_delta = finite_difference_sup(|x| params.f0(x), 10_000).max(finite_difference_sup(|x| params.f1(x), 10_000));
    let fd_m = finite_difference_sup(|x| hb(params.g0(x)), 10_000);
    let contraction = (c.delta - fd_delta).abs().max((c.big_m - fd_m).abs());
    out.push(outcome(format!("contraction {tag}"), contraction, 1e-6));

    let config = BoundsConfig {
        threads: opts.threads.max(1),
        ..BoundsConfig::default()
    };
    let rows = bounds::table(params, d.table, &config).expect("depth within hard cap");
    let sign = if opts.inject_fault { -1.0 } else { 1.0 };
    let sandwich = rows
        .iter()
        .map(|r| {
            let h = sign * r.approx;
            (r.lower - h).max(h - r.upper).max(0.0)
        })
        .fold(0.0, f64::max);
    out.push(outcome(format!("sandwich {tag}"), sandwich, SLACK));

    let monotone = rows
        .windows(2)
        .map(|w| (w[0].lower - w[1].lower).max(w[1].upper - w[0].upper).max(0.0))
        .fold(0.0, f64::max);
    out.push(outcome(format!("monotonicity {tag}"), monotone, SLACK));

    let envelope = rows
        .iter()
        .filter_map(|r| r.geo.map(|g| (r.width - g).max(0.0)))
        .fold(0.0, f64::max);
    out.push(outcome(format!("envelope {tag}"), envelope, SLACK));

    let entropies: Vec<f64> = (0..=d.chain + 1)
        .map(|n| forward::block_entropy(params, n).expect("depth within cap"))
        .collect();
    let chain = max_abs((0..=d.chain).map(|n| rows[n].approx - (entropies[n + 1] - entropies[n])));
    out.push(outcome(format!("chain-identity {tag}"), chain, 1e-10));

    out
}

/// Runs the suite over [`DEFAULT_PARAMS`].
pub fn run_suite(opts: &ValidationOptions) -> Vec<CheckOutcome> {
    DEFAULT_PARAMS
        .iter()
        .flat_map(|&(a, b, e)| {
            let params = ModelParams::new(a, b, e).expect("preset parameters are valid");
            check_params(&params, opts)
        })
        .collect()
}
