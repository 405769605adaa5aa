//! Sampling the process and estimating its entropy rate from data.
//!
//! Paths are drawn with ChaCha8 seeded through `SeedableRng::seed_from_u64`,
//! which is specified bit-for-bit by `rand_chacha`, so a seed reproduces the
//! same path on every platform. The plug-in estimator is a statistical
//! cross-check on the certified bounds, not a replacement for them.

use std::io::{self, BufRead, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::ModelParams;

/// Recorded in output metadata next to the seed.
pub const GENERATOR: &str = "ChaCha8Rng (rand_chacha 0.3, seed_from_u64)";

/// Bootstrap resamples behind [`McEstimate::stderr`].
pub const BOOTSTRAP_RESAMPLES: usize = 64;

/// Largest supported context length for [`plugin_entropy_rate`].
pub const MAX_BLOCK_K: usize = 24;

/// Symbols per line in the ASCII format.
pub const ASCII_LINE_WIDTH: usize = 80;

const BOOTSTRAP_SEED: u64 = 0x5eed_b007;
const MAX_SEGMENTS: usize = 256;
const MAX_COUNT_CELLS: usize = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SamplePath {
    pub hidden: Vec<u8>,
    pub observed: Vec<u8>,
    pub seed: u64,
}

impl SamplePath {
    pub fn len(&self) -> usize {
        self.observed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.observed.is_empty()
    }

    /// Fraction of positions where the channel flipped the hidden symbol.
    pub fn flip_rate(&self) -> f64 {
        let flips = self
            .hidden
            .iter()
            .zip(&self.observed)
            .filter(|(x, z)| x != z)
            .count();
        flips as f64 / self.len().max(1) as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McEstimate {
    /// Bits per symbol.
    pub value: f64,
    pub stderr: f64,
    /// Number of `(k+1)`-blocks counted.
    pub n_samples: usize,
    pub block_k: usize,
}

/// Draws `n` steps of the hidden chain (started from stationarity) and its noisy observation.
pub fn sample_path(params: &ModelParams, n: usize, seed: u64) -> SamplePath {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let leave = [params.pi01(), params.pi10()];
    let mut hidden = Vec::with_capacity(n);
    let mut observed = Vec::with_capacity(n);
    let mut state = u8::from(rng.gen::<f64>() >= params.p0());
    for k in 0..n {
        if k > 0 && rng.gen::<f64>() < leave[usize::from(state)] {
            state ^= 1;
        }
        let flip = u8::from(rng.gen::<f64>() < params.eps());
        hidden.push(state);
        observed.push(state ^ flip);
    }
    SamplePath {
        hidden,
        observed,
        seed,
    }
}

/// Fraction of zeros in a bit sequence.
pub fn zero_frequency(bits: &[u8]) -> f64 {
    bits.iter().filter(|&&b| b == 0).count() as f64 / bits.len().max(1) as f64
}

fn conditional_entropy(counts: &[u64]) -> f64 {
    let total: u64 = counts.iter().sum();
    if total == 0 {
        return 0.0;
    }
    let mut h = 0.0;
    for pair in counts.chunks_exact(2) {
        let ctx = pair[0] + pair[1];
        for &c in pair {
            if c > 0 {
                h += c as f64 * (ctx as f64 / c as f64).log2();
            }
        }
    }
    h / total as f64
}

/// Plug-in estimate of `H(Z_{k+1} | Z_1..Z_k)` from overlapping `(k+1)`-blocks.
///
/// The standard error comes from a block bootstrap: the block counts are
/// tallied per contiguous segment of the sequence, and segments are
/// resampled with replacement [`BOOTSTRAP_RESAMPLES`] times.
pub fn plugin_entropy_rate(z: &[u8], block_k: usize) -> Result<McEstimate> {
    if block_k > MAX_BLOCK_K {
        return Err(Error::Parameter {
            field: "block_k",
            value: block_k as f64,
            reason: "context length is too large",
        });
    }
    let cells = 1usize << (block_k + 1);
    let needed = 100usize << block_k;
    if z.len() < needed {
        return Err(Error::InsufficientData {
            len: z.len(),
            block_k,
            needed,
        });
    }
    let n_blocks = z.len() - block_k;
    let segments = (n_blocks / (16 * cells)).clamp(2, MAX_SEGMENTS.min((MAX_COUNT_CELLS / cells).max(2)));

    let mask = cells - 1;
    let mut counts = vec![0u64; segments * cells];
    let mut ctx = z[..block_k]
        .iter()
        .fold(0usize, |acc, &b| (acc << 1) | usize::from(b & 1));
    for (i, &b) in z[block_k..].iter().enumerate() {
        ctx = ((ctx << 1) | usize::from(b & 1)) & mask;
        let seg = i * segments / n_blocks;
        counts[seg * cells + ctx] += 1;
    }

    let mut total = vec![0u64; cells];
    for seg in counts.chunks_exact(cells) {
        total.iter_mut().zip(seg).for_each(|(t, c)| *t += c);
    }
    let value = conditional_entropy(&total);

    let mut rng = ChaCha8Rng::seed_from_u64(BOOTSTRAP_SEED);
    let mut resampled = vec![0u64; cells];
    let replicates: Vec<f64> = (0..BOOTSTRAP_RESAMPLES)
        .map(|_| {
            resampled.fill(0);
            for _ in 0..segments {
                let seg = rng.gen_range(0..segments);
                let src = &counts[seg * cells..(seg + 1) * cells];
                resampled.iter_mut().zip(src).for_each(|(t, c)| *t += c);
            }
            conditional_entropy(&resampled)
        })
        .collect();
    let mean = replicates.iter().sum::<f64>() / replicates.len() as f64;
    let var = replicates.iter().map(|r| (r - mean).powi(2)).sum::<f64>() / (replicates.len() - 1) as f64;

    Ok(McEstimate {
        value,
        stderr: var.sqrt(),
        n_samples: n_blocks,
        block_k,
    })
}

/// On-disk encodings for bit sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BitFormat {
    /// `'0'`/`'1'` characters, [`ASCII_LINE_WIDTH`] per line.
    Ascii,
    /// Eight symbols per byte, most significant bit first, zero padded.
    Packed,
}

pub fn pack_bits(bits: &[u8]) -> Vec<u8> {
    bits.chunks(8)
        .map(|chunk| {
            chunk
                .iter()
                .enumerate()
                .fold(0u8, |byte, (i, &b)| byte | ((b & 1) << (7 - i)))
        })
        .collect()
}

/// Inverse of [`pack_bits`]; `len` drops the padding.
pub fn unpack_bits(bytes: &[u8], len: usize) -> Vec<u8> {
    bytes
        .iter()
        .flat_map(|&byte| (0..8).map(move |i| (byte >> (7 - i)) & 1))
        .take(len)
        .collect()
}

pub fn write_bits<W: Write>(mut out: W, bits: &[u8], format: BitFormat) -> io::Result<()> {
    match format {
        BitFormat::Packed => out.write_all(&pack_bits(bits)),
        BitFormat::Ascii => {
            let mut line = Vec::with_capacity(ASCII_LINE_WIDTH + 1);
            for chunk in bits.chunks(ASCII_LINE_WIDTH) {
                line.clear();
                line.extend(chunk.iter().map(|&b| b'0' + (b & 1)));
                line.push(b'\n');
                out.write_all(&line)?;
            }
            Ok(())
        }
    }
}

/// Reads an ASCII bit file, ignoring whitespace.
pub fn read_ascii_bits<R: BufRead>(input: R) -> Result<Vec<u8>> {
    let mut bits = Vec::new();
    for line in input.lines() {
        let line = line.map_err(|_| Error::Symbol {
            position: bits.len(),
            found: '\u{fffd}',
        })?;
        for c in line.chars().filter(|c| !c.is_whitespace()) {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                found => {
                    return Err(Error::Symbol {
                        position: bits.len(),
                        found,
                    })
                }
            }
        }
    }
    Ok(bits)
}
