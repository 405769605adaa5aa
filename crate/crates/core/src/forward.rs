//! Belief propagation along observation strings and exact block probabilities.
//!
//! [`sequence_prob`] uses the multiplicative forward recursion
//! `P(z_1..z_{n+1}) = g_{z_{n+1}}(belief_n) * P(z_1..z_n)`, seeded at the
//! stationary belief. [`brute_force_prob`] marginalizes over every hidden
//! path directly and shares no code with it, so the two can check each other.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::ModelParams;
use crate::parallel::Executor;
use crate::sum::NeumaierSum;

/// Default (and hard) limit on observation-string length and tree depth.
pub const MAX_DEPTH: usize = 30;

/// Longest string the brute-force oracle accepts (2^14 hidden paths).
pub const ORACLE_MAX_LEN: usize = 14;

/// A finite string over `{0, 1}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "String")]
pub struct ObservationString(Vec<u8>);

impl ObservationString {
    /// Builds from raw symbols; every element must be 0 or 1.
    pub fn from_bits(bits: impl Into<Vec<u8>>) -> Result<Self> {
        let bits = bits.into();
        if let Some(position) = bits.iter().position(|&b| b > 1) {
            return Err(Error::Symbol {
                position,
                found: char::from_digit(u32::from(bits[position]) % 36, 36).unwrap_or('?'),
            });
        }
        Ok(Self(bits))
    }

    /// Parses a `'0'`/`'1'` string no longer than `max_len`.
    pub fn parse_bounded(s: &str, max_len: usize) -> Result<Self> {
        let bits = s
            .chars()
            .enumerate()
            .map(|(position, c)| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                found => Err(Error::Symbol { position, found }),
            })
            .collect::<Result<Vec<u8>>>()?;
        if bits.len() > max_len {
            return Err(Error::Length {
                len: bits.len(),
                max: max_len,
            });
        }
        Ok(Self(bits))
    }

    /// The string of length `n` whose bits spell `index` with `z_1` most significant.
    pub fn from_index(index: usize, n: usize) -> Self {
        Self((0..n).map(|k| ((index >> (n - 1 - k)) & 1) as u8).collect())
    }

    /// All `2^n` strings of length `n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Self> {
        (0..1usize << n).map(move |i| Self::from_index(i, n))
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn complement(&self) -> Self {
        Self(self.0.iter().map(|b| 1 - b).collect())
    }
}

impl Deref for ObservationString {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl FromStr for ObservationString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_bounded(s, MAX_DEPTH)
    }
}

impl fmt::Display for ObservationString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl From<ObservationString> for String {
    fn from(z: ObservationString) -> String {
        z.to_string()
    }
}

/// Beliefs along a string together with its joint probability.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BeliefTrace {
    /// Entry `k` is `P(X_k = 0 | z_1..z_k)`; entry 0 is the stationary start.
    pub beliefs: Vec<f64>,
    pub prob: f64,
}

pub fn belief_step(params: &ModelParams, belief: f64, symbol: u8) -> f64 {
    params.update(belief, symbol)
}

/// `F_z(x)`: the belief maps of `z` applied left to right, starting at `x`.
pub fn compose_f(params: &ModelParams, z: &[u8], x: f64) -> f64 {
    z.iter().fold(x, |b, &s| params.update(b, s))
}

/// Exact `P(Z_1..Z_n = z)` by the forward recursion, with the belief trace.
pub fn sequence_prob(params: &ModelParams, z: &[u8]) -> BeliefTrace {
    let mut beliefs = Vec::with_capacity(z.len() + 1);
    let mut belief = params.p0();
    let mut prob = 1.0;
    beliefs.push(belief);
    for &s in z {
        prob *= params.emit(belief, s);
        belief = params.update(belief, s);
        beliefs.push(belief);
    }
    BeliefTrace { beliefs, prob }
}

/// Direct marginalization over all `2^n` hidden paths.
pub fn brute_force_prob(params: &ModelParams, z: &[u8]) -> Result<f64> {
    let n = z.len();
    if n > ORACLE_MAX_LEN {
        return Err(Error::Length {
            len: n,
            max: ORACLE_MAX_LEN,
        });
    }
    if n == 0 {
        return Ok(1.0);
    }
    let stay = [1.0 - params.pi01(), 1.0 - params.pi10()];
    let initial = [params.p0(), 1.0 - params.p0()];
    let eps = params.eps();
    let mut total = NeumaierSum::new();
    for hidden in 0..1usize << n {
        let state = |k: usize| (hidden >> (n - 1 - k)) & 1;
        let mut p = initial[state(0)];
        for k in 0..n {
            let x = state(k);
            if k > 0 {
                let prev = state(k - 1);
                p *= if prev == x { stay[prev] } else { 1.0 - stay[prev] };
            }
            p *= if usize::from(z[k]) == x { 1.0 - eps } else { eps };
        }
        total += p;
    }
    Ok(total.sum())
}

fn neg_plogp(p: f64) -> f64 {
    if p > 0.0 {
        -p * p.log2()
    } else {
        0.0
    }
}

/// Accumulates `-P log P` over all leaves `depth` levels below a node.
fn entropy_below(params: &ModelParams, prob: f64, belief: f64, depth: usize, acc: &mut NeumaierSum) {
    if depth == 0 {
        *acc += neg_plogp(prob);
        return;
    }
    for s in 0..2u8 {
        let child = prob * params.emit(belief, s);
        entropy_below(params, child, params.update(belief, s), depth - 1, acc);
    }
}

/// Block entropy `H(Z_1..Z_n)` in bits, summed over all `2^n` strings.
pub fn block_entropy(params: &ModelParams, n: usize) -> Result<f64> {
    block_entropy_with(params, n, &Executor::sequential())
}

/// [`block_entropy`] with the string space split across workers.
pub fn block_entropy_with(params: &ModelParams, n: usize, exec: &Executor) -> Result<f64> {
    if n > MAX_DEPTH {
        return Err(Error::Length {
            len: n,
            max: MAX_DEPTH,
        });
    }
    // Fixed split depth keeps the reduction order independent of the worker count.
    let split = n.min(12);
    let mut frontier = vec![(1.0, params.p0())];
    for _ in 0..split {
        frontier = frontier
            .iter()
            .flat_map(|&(p, b)| (0..2u8).map(move |s| (p * params.emit(b, s), params.update(b, s))))
            .collect();
    }
    let rest = n - split;
    let chunk = (crate::parallel::CHUNK >> rest.min(12)).max(1);
    let partials = exec.map_chunks(frontier.len(), chunk, |start, end| {
        let mut acc = NeumaierSum::new();
        for &(p, b) in &frontier[start..end] {
            entropy_below(params, p, b, rest, &mut acc);
        }
        acc
    });
    Ok(partials.into_iter().sum::<NeumaierSum>().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn reference() -> ModelParams {
        ModelParams::new(0.1, 0.1, 0.01).unwrap()
    }

    fn z(s: &str) -> ObservationString {
        s.parse().unwrap()
    }

    #[test]
    fn parse_rejects_bad_symbols_and_length() {
        assert_eq!(
            "02".parse::<ObservationString>(),
            Err(Error::Symbol { position: 1, found: '2' })
        );
        assert!(matches!(
            ObservationString::parse_bounded("0101", 3),
            Err(Error::Length { len: 4, max: 3 })
        ));
        assert_eq!(z("0110").to_string(), "0110");
        assert!(ObservationString::from_bits(vec![0, 3]).is_err());
    }

    #[test]
    fn belief_step_values() {
        let p = reference();
        assert_abs_diff_eq!(belief_step(&p, 0.5, 0), 0.99, epsilon = 1e-15);
        assert_abs_diff_eq!(belief_step(&p, 0.5, 1), 0.01, epsilon = 1e-15);
        let clean = ModelParams::new(0.1, 0.1, 0.0).unwrap();
        for b in [0.0, 0.3, 1.0] {
            assert_eq!(belief_step(&clean, b, 0), 1.0);
        }
    }

    #[test]
    fn compose_identity_and_single_step() {
        let p = reference();
        assert_eq!(compose_f(&p, &[], 0.37), 0.37);
        assert_abs_diff_eq!(compose_f(&p, &z("0"), 0.5), 0.99, epsilon = 1e-15);
    }

    #[test]
    fn sequence_prob_values() {
        let p = reference();
        assert_abs_diff_eq!(sequence_prob(&p, &z("0")).prob, 0.5, epsilon = 1e-15);
        // 0.45*0.9801 + 2*0.05*0.0099 + 0.45*0.0001
        assert_abs_diff_eq!(sequence_prob(&p, &z("00")).prob, 0.44208, epsilon = 1e-14);
        let empty = sequence_prob(&p, &[]);
        assert_eq!(empty.prob, 1.0);
        assert_eq!(empty.beliefs, vec![0.5]);
        let trace = sequence_prob(&p, &z("0110"));
        assert_eq!(trace.beliefs.len(), 5);
        assert_abs_diff_eq!(trace.beliefs[1], 0.99, epsilon = 1e-15);
    }

    #[test]
    fn brute_force_values() {
        let p = reference();
        assert_abs_diff_eq!(brute_force_prob(&p, &z("00")).unwrap(), 0.44208, epsilon = 1e-15);
        assert_abs_diff_eq!(brute_force_prob(&p, &z("0")).unwrap(), 0.5, epsilon = 1e-15);
        let long = ObservationString::from_bits(vec![0; 15]).unwrap();
        assert!(matches!(brute_force_prob(&p, &long), Err(Error::Length { len: 15, max: 14 })));
    }

    #[test]
    fn oracle_equivalence_small() {
        for &(a, b, e) in &[(0.1, 0.1, 0.01), (0.2, 0.1, 0.05), (0.1, 0.3, 0.0)] {
            let p = ModelParams::new(a, b, e).unwrap();
            for n in 1..=8 {
                for s in ObservationString::all(n) {
                    let fwd = sequence_prob(&p, &s).prob;
                    let bf = brute_force_prob(&p, &s).unwrap();
                    assert!((fwd - bf).abs() <= 1e-12, "{s}: {fwd} vs {bf}");
                }
            }
        }
    }

    #[test]
    fn block_entropy_values() {
        let p = reference();
        assert_abs_diff_eq!(block_entropy(&p, 1).unwrap(), 1.0, epsilon = 1e-15);
        let (q, r) = (0.44208f64, 0.05792f64);
        let expected = -2.0 * (q * q.log2() + r * r.log2());
        assert_abs_diff_eq!(block_entropy(&p, 2).unwrap(), expected, epsilon = 1e-13);
        assert_abs_diff_eq!(expected, 1.5173, epsilon = 1e-4);
        let fair = ModelParams::new(0.2, 0.1, 0.5).unwrap();
        for n in [1, 5, 13] {
            assert_abs_diff_eq!(block_entropy(&fair, n).unwrap(), n as f64, epsilon = 1e-12);
        }
        assert!(block_entropy(&p, 31).is_err());
    }

    #[test]
    fn block_entropy_independent_of_workers() {
        let p = ModelParams::new(0.2, 0.1, 0.05).unwrap();
        let one = block_entropy_with(&p, 16, &Executor::new(1)).unwrap();
        let four = block_entropy_with(&p, 16, &Executor::new(4)).unwrap();
        assert_eq!(one.to_bits(), four.to_bits());
    }
}
