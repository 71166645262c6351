//! Timing of `BV` multiplication on random inputs of growing size.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::braids::{BraidWord, Letter, Permutation, SimpleBraid};
use crate::bv::{BVElement, RawTriple};
use crate::error::Error;
use crate::rng::SplitMix64;
use crate::trees::BinaryTree;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchMode {
    /// Full product: reduce and put the braid in normal form.
    Normalized,
    /// Semi-reduced product only.
    Fast,
}

impl fmt::Display for BenchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BenchMode::Normalized => "nf",
            BenchMode::Fast => "fast",
        })
    }
}

impl FromStr for BenchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "nf" => Ok(BenchMode::Normalized),
            "fast" => Ok(BenchMode::Fast),
            other => Err(Error::InvalidParams(format!(
                "unknown bench mode '{other}'"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub size: usize,
    pub mode: BenchMode,
    pub trials: usize,
    pub median_micros: f64,
    /// Mean over trials of the summed bit length of both factors.
    pub mean_input_bits: f64,
}

impl BenchRow {
    pub const CSV_HEADER: &'static str = "size,mode,trials,median_micros";

    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{:.3}",
            self.size, self.mode, self.trials, self.median_micros
        )
    }
}

/// Random planar tree with `leaves` leaves; the left subtree size is uniform.
pub fn random_tree(rng: &mut SplitMix64, leaves: usize) -> BinaryTree {
    if leaves <= 1 {
        return BinaryTree::Leaf;
    }
    let left = 1 + rng.below(leaves - 1);
    let l = random_tree(rng, left);
    let r = random_tree(rng, leaves - left);
    BinaryTree::caret(l, r)
}

/// Word of `len` uniformly random simple braids with random signs.
pub fn random_braid(rng: &mut SplitMix64, strands: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let s = SimpleBraid::from_permutation(
                Permutation::from_images(rng.permutation(strands)).expect("shuffle is a bijection"),
            );
            if rng.coin() {
                Letter::neg(s)
            } else {
                Letter::pos(s)
            }
        })
        .collect();
    BraidWord::new(strands, letters).expect("letters share the strand count")
}

/// Random element with `size`-leaf trees and a `size`-letter braid word, reduced.
pub fn random_element(rng: &mut SplitMix64, size: usize) -> BVElement {
    let top = random_tree(rng, size);
    let bot = random_tree(rng, size);
    let braid = random_braid(rng, size, size);
    RawTriple::new(top, braid, bot)
        .expect("shapes agree")
        .reduce()
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len();
    if n == 0 {
        0.0
    } else if n % 2 == 1 {
        xs[n / 2]
    } else {
        0.5 * (xs[n / 2 - 1] + xs[n / 2])
    }
}

/// Times `trials` products per size. Inputs depend only on `seed`, `size` and
/// the trial number, so both modes see the same pairs.
pub fn run_bench(sizes: &[usize], trials: usize, mode: BenchMode, seed: u64) -> Vec<BenchRow> {
    sizes
        .iter()
        .map(|&size| {
            let mut rng = SplitMix64::new(seed ^ (size as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let mut times = Vec::with_capacity(trials);
            let mut bits = 0.0;
            for _ in 0..trials {
                let a = random_element(&mut rng, size);
                let b = random_element(&mut rng, size);
                bits += a.bit_length() + b.bit_length();
                let (ra, rb) = (a.to_raw(), b.to_raw());
                let start = Instant::now();
                match mode {
                    BenchMode::Normalized => {
                        std::hint::black_box(a.multiply(&b));
                    }
                    BenchMode::Fast => {
                        std::hint::black_box(ra.multiply(&rb));
                    }
                }
                times.push(start.elapsed().as_secs_f64() * 1e6);
            }
            BenchRow {
                size,
                mode,
                trials,
                median_micros: median(times),
                mean_input_bits: bits / trials.max(1) as f64,
            }
        })
        .collect()
}

/// Least-squares slope of `log y` against `log x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_tree_has_requested_leaves() {
        let mut rng = SplitMix64::new(4);
        for n in 1..20 {
            assert_eq!(random_tree(&mut rng, n).leaf_count(), n);
        }
    }

    #[test]
    fn smoke_row() {
        let rows = run_bench(&[8], 1, BenchMode::Normalized, 1);
        assert_eq!(rows.len(), 1);
        assert!(rows[0].median_micros > 0.0);
        assert!(rows[0].csv().starts_with("8,nf,1,"));
    }

    #[test]
    fn slope_of_exact_power_law() {
        let pts: Vec<(f64, f64)> = [1.0, 2.0, 4.0, 8.0]
            .iter()
            .map(|&x| (x, 3.0 * x * x))
            .collect();
        assert!((log_log_slope(&pts) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("nf".parse::<BenchMode>().unwrap(), BenchMode::Normalized);
        assert_eq!("fast".parse::<BenchMode>().unwrap(), BenchMode::Fast);
        assert!("slow".parse::<BenchMode>().is_err());
    }
}
