//! Finite-level cylinder distributions: exact rational weight tables,
//! uniform Bernoulli families on sub-alphabets, per-level measure entropy,
//! the support-count inequality, disjoint-support tests, and seeded
//! empirical frequencies.
//!
//! Weights stay exact rationals throughout; entropy is the single
//! real-valued output and is evaluated last, so inequality checks can use
//! one-sided rounding without false alarms. Uniform Bernoulli families are
//! kept symbolic — a level-12 table over 20 letters has 20¹² rows and is
//! never materialized unless explicitly asked for (and small enough).

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::util::{big_ln, rational_to_f64};
use crate::word::{LetterSet, Word};

/// Largest table `materialize`/`to_csv` will write out.
const MAX_MATERIALIZED_ROWS: u64 = 1 << 20;

/// A probability distribution on the length-`level` words.
#[derive(Debug, Clone, PartialEq)]
pub enum CylinderDistribution {
    /// An explicit weight table; absent words have weight zero.
    Explicit {
        level: usize,
        weights: BTreeMap<Word, BigRational>,
    },
    /// Uniform i.i.d. letters from `letters`: every word over the set gets
    /// weight `|letters|^{-level}`, all others zero. Kept symbolic.
    Bernoulli { letters: LetterSet, level: usize },
}

impl CylinderDistribution {
    /// Validates and normalizes an explicit table: positive level, words of
    /// the right length, nonnegative weights summing to exactly one.
    /// Zero-weight entries are dropped so the key set is the support.
    pub fn explicit(level: usize, weights: BTreeMap<Word, BigRational>) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidArgument("cylinder levels start at 1".into()));
        }
        let mut sum = BigRational::zero();
        let mut kept = BTreeMap::new();
        for (w, weight) in weights {
            if w.len() != level {
                return Err(Error::WordLength {
                    expected: level,
                    actual: w.len(),
                });
            }
            if weight < BigRational::zero() {
                return Err(Error::InvalidArgument(format!(
                    "negative weight {weight} on word {w}"
                )));
            }
            sum += &weight;
            if !weight.is_zero() {
                kept.insert(w, weight);
            }
        }
        if !sum.is_one() {
            return Err(Error::InvalidArgument(format!(
                "weights sum to {sum}, expected 1"
            )));
        }
        Ok(CylinderDistribution::Explicit {
            level,
            weights: kept,
        })
    }

    pub fn bernoulli(letters: LetterSet, level: usize) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidArgument("cylinder levels start at 1".into()));
        }
        Ok(CylinderDistribution::Bernoulli { letters, level })
    }

    pub fn level(&self) -> usize {
        match self {
            CylinderDistribution::Explicit { level, .. } => *level,
            CylinderDistribution::Bernoulli { level, .. } => *level,
        }
    }

    /// The weight of `w`, which must have the distribution's level length.
    pub fn weight(&self, w: &Word) -> Result<BigRational> {
        if w.len() != self.level() {
            return Err(Error::WordLength {
                expected: self.level(),
                actual: w.len(),
            });
        }
        Ok(match self {
            CylinderDistribution::Explicit { weights, .. } => {
                weights.get(w).cloned().unwrap_or_else(BigRational::zero)
            }
            CylinderDistribution::Bernoulli { letters, .. } => bernoulli_weight(letters, w),
        })
    }

    /// Number of words with positive weight.
    pub fn support_size(&self) -> BigUint {
        match self {
            CylinderDistribution::Explicit { weights, .. } => BigUint::from(weights.len()),
            CylinderDistribution::Bernoulli { letters, level } => {
                BigUint::from(letters.size()).pow(*level as u32)
            }
        }
    }

    /// Expands a symbolic family into its explicit table (identity on
    /// explicit tables). Refuses tables above `MAX_MATERIALIZED_ROWS`.
    pub fn materialize(&self) -> Result<CylinderDistribution> {
        match self {
            CylinderDistribution::Explicit { .. } => Ok(self.clone()),
            CylinderDistribution::Bernoulli { letters, level } => {
                let rows = self.support_size();
                if rows > BigUint::from(MAX_MATERIALIZED_ROWS) {
                    return Err(Error::InvalidArgument(format!(
                        "table would need {rows} rows; cap is {MAX_MATERIALIZED_ROWS}"
                    )));
                }
                let all = letters.letters();
                let weight = BigRational::new(
                    BigInt::one(),
                    BigInt::from(letters.size()).pow(*level as u32),
                );
                let mut weights = BTreeMap::new();
                let mut indices = vec![0usize; *level];
                loop {
                    let w: Vec<_> = indices.iter().map(|&i| all[i]).collect();
                    weights.insert(Word::from(&w[..]), weight.clone());
                    // Odometer over letter indices, most significant first.
                    let mut pos = *level;
                    loop {
                        if pos == 0 {
                            return CylinderDistribution::explicit(*level, weights);
                        }
                        pos -= 1;
                        indices[pos] += 1;
                        if indices[pos] < all.len() {
                            break;
                        }
                        indices[pos] = 0;
                    }
                }
            }
        }
    }

    /// The level-`(n-1)` distribution obtained by summing over the last
    /// letter.
    pub fn marginal(&self) -> Result<CylinderDistribution> {
        let level = self.level();
        if level < 2 {
            return Err(Error::InvalidArgument(
                "marginal needs a level of at least 2".into(),
            ));
        }
        match self {
            CylinderDistribution::Bernoulli { letters, .. } => {
                CylinderDistribution::bernoulli(letters.clone(), level - 1)
            }
            CylinderDistribution::Explicit { weights, .. } => {
                let mut folded: BTreeMap<Word, BigRational> = BTreeMap::new();
                for (w, weight) in weights {
                    let prefix = w.subword(0, level - 1);
                    *folded.entry(prefix).or_insert_with(BigRational::zero) += weight;
                }
                CylinderDistribution::explicit(level - 1, folded)
            }
        }
    }

    /// Per-level measure entropy `(-1/n)·Σ w·ln w` over the support.
    ///
    /// When every weight is an exact `n`-th power `r^n`, the per-term factor
    /// `n` cancels the leading `1/n` algebraically before any float math, so
    /// a uniform family on `a` letters returns `ln a` to the last bit at
    /// every level.
    pub fn level_entropy(&self) -> f64 {
        let n = self.level();
        match self {
            CylinderDistribution::Bernoulli { letters, .. } => (letters.size() as f64).ln(),
            CylinderDistribution::Explicit { weights, .. } => {
                // Group equal weights so their total mass is summed exactly.
                let mut multiplicity: BTreeMap<&BigRational, u64> = BTreeMap::new();
                for weight in weights.values() {
                    *multiplicity.entry(weight).or_insert(0) += 1;
                }
                let mut reduced_sum = 0.0; // valid when every weight is an n-th power
                let mut direct_sum = 0.0;
                let mut all_reduced = true;
                for (weight, count) in multiplicity {
                    let mass =
                        rational_to_f64(&(weight * BigRational::from(BigInt::from(count))));
                    let num = weight.numer().to_biguint().expect("validated nonnegative");
                    let den = weight.denom().to_biguint().expect("positive denominator");
                    match nth_root_exact(&num, n).zip(nth_root_exact(&den, n)) {
                        Some((rn, rd)) => {
                            reduced_sum += mass * (big_ln(&rn) - big_ln(&rd));
                        }
                        None => all_reduced = false,
                    }
                    direct_sum += mass * (big_ln(&num) - big_ln(&den));
                }
                if all_reduced {
                    -reduced_sum
                } else {
                    -direct_sum / n as f64
                }
            }
        }
    }

    /// CSV export, one row per supported word: `word,weight_num,weight_den`.
    pub fn to_csv(&self) -> Result<String> {
        let table = self.materialize()?;
        let CylinderDistribution::Explicit { weights, .. } = &table else {
            unreachable!("materialize returns an explicit table");
        };
        let mut out = String::from("word,weight_num,weight_den\n");
        for (w, weight) in weights {
            out.push_str(&format!("{w},{},{}\n", weight.numer(), weight.denom()));
        }
        Ok(out)
    }
}

/// `x` as an exact `n`-th power's root, if it is one.
fn nth_root_exact(x: &BigUint, n: usize) -> Option<BigUint> {
    if n == 0 || n > u32::MAX as usize {
        return None;
    }
    let root = x.nth_root(n as u32);
    (root.pow(n as u32) == *x).then_some(root)
}

/// `|letters|^{-|w|}` if every letter of `w` lies in the set, else 0; the
/// empty word gets 1. (Letter sets are nonempty by construction.)
pub fn bernoulli_weight(letters: &LetterSet, w: &Word) -> BigRational {
    if w.letters().iter().all(|&l| letters.contains(l)) {
        BigRational::new(
            BigInt::one(),
            BigInt::from(letters.size()).pow(w.len() as u32),
        )
    } else {
        BigRational::zero()
    }
}

/// Both sides of the support-count inequality
/// `|support| ≥ e^{n·entropy}`, compared in the log domain.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportCountCheck {
    pub level: usize,
    pub support: BigUint,
    pub ln_support: f64,
    pub entropy: f64,
    /// `ln_support ≥ level·entropy` up to one-sided float slack.
    pub pass: bool,
}

/// Checks that a level-`n` distribution supports at least `e^{n·h}` words.
/// This is a theorem for every probability distribution, so a failure
/// indicates an implementation bug, not an interesting input.
pub fn support_count_check(dist: &CylinderDistribution) -> SupportCountCheck {
    let level = dist.level();
    let support = dist.support_size();
    let ln_support = big_ln(&support);
    let entropy = dist.level_entropy();
    let pass = ln_support >= level as f64 * entropy - 1e-9;
    SupportCountCheck {
        level,
        support,
        ln_support,
        entropy,
        pass,
    }
}

/// True iff no word has positive weight under both distributions.
pub fn disjoint_support_check(
    d1: &CylinderDistribution,
    d2: &CylinderDistribution,
) -> Result<bool> {
    if d1.level() != d2.level() {
        return Err(Error::LevelMismatch {
            left: d1.level(),
            right: d2.level(),
        });
    }
    use CylinderDistribution::*;
    Ok(match (d1, d2) {
        (Bernoulli { letters: a, .. }, Bernoulli { letters: b, .. }) => {
            // Supports are full cubes; they share a word iff they share a letter.
            a.letters().iter().all(|&l| !b.contains(l))
        }
        (Bernoulli { letters, .. }, Explicit { weights, .. })
        | (Explicit { weights, .. }, Bernoulli { letters, .. }) => weights
            .keys()
            .all(|w| !w.letters().iter().all(|&l| letters.contains(l))),
        (Explicit { weights: wa, .. }, Explicit { weights: wb, .. }) => {
            wa.keys().all(|w| !wb.contains_key(w))
        }
    })
}

/// Draws one i.i.d.-uniform word of length `length` over `letters` with the
/// given seed and returns the empirical distribution of its `level`-letter
/// windows (`length - level + 1` of them, exactly normalized).
pub fn sample_and_frequencies(
    letters: &LetterSet,
    length: usize,
    level: usize,
    seed: u64,
) -> Result<CylinderDistribution> {
    if level == 0 {
        return Err(Error::InvalidArgument("cylinder levels start at 1".into()));
    }
    if length < level {
        return Err(Error::InvalidArgument(format!(
            "sample length {length} is shorter than the window level {level}"
        )));
    }
    let all = letters.letters();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample: Vec<_> = (0..length).map(|_| all[rng.gen_range(0..all.len())]).collect();
    let windows = length - level + 1;
    let mut counts: BTreeMap<Word, u64> = BTreeMap::new();
    for start in 0..windows {
        *counts
            .entry(Word::from(&sample[start..start + level]))
            .or_insert(0) += 1;
    }
    let weights = counts
        .into_iter()
        .map(|(w, c)| {
            (
                w,
                BigRational::new(BigInt::from(c), BigInt::from(windows as u64)),
            )
        })
        .collect();
    CylinderDistribution::explicit(level, weights)
}
