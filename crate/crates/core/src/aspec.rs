//! The run-family subshift over `{-N,…,-1,1,…,N}` (no zero): points are
//! concatenations of constant-sign words, and every such word that is
//! bracketed by opposite signs must belong to the family for its sign and
//! length. The families come from the covering codes:
//!
//! * length 1 — the anchor alone: `{1}` positive, `{-1}` negative;
//! * length `2..=ℓ` — the anchored `V` family (first two letters are the
//!   anchor), `N^(n-2)` words;
//! * length `> ℓ` — the product `U` family of two minimum parity classes,
//!   at most `16·N^n/n²` words.
//!
//! Negative families are letterwise sign-mirrors of the positive ones, so
//! both families at each length share one cardinality `M_n`. Because every
//! family is 2-spanning inside its constant-sign cube, any concatenation of
//! member words can be repaired into the language by changing at most 2
//! letters per maximal run, hence at most 4 letters per input word. The
//! family sizes also control the language count exactly, which yields the
//! gap-density series `α = Σ M_t N^(-t)` and, when `α < 1`, the entropy
//! ceiling `|L_n| ≤ (2n/(1-α))·N^n`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::codes::{self, Code};
use crate::error::{Error, Result};
use crate::util::rational_to_f64;
use crate::word::{hamming, run_decompose, sign_of, Letter, LetterSet, Sign, SignedAlphabet, Word};

/// Model parameters: alphabet magnitude `N ≥ 2` and family threshold `ℓ ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AspecModel {
    max_magnitude: u32,
    ell: u32,
}

impl AspecModel {
    pub fn new(max_magnitude: u32, ell: u32) -> Result<Self> {
        if max_magnitude < 2 {
            return Err(Error::InvalidArgument(
                "the run-family model needs alphabet magnitude N ≥ 2".into(),
            ));
        }
        if ell < 2 {
            return Err(Error::InvalidArgument(
                "the run-family model needs threshold ℓ ≥ 2".into(),
            ));
        }
        Ok(AspecModel { max_magnitude, ell })
    }

    pub fn max_magnitude(&self) -> u32 {
        self.max_magnitude
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// The zero-free signed alphabet.
    pub fn alphabet(&self) -> SignedAlphabet {
        SignedAlphabet::new(self.max_magnitude, false).expect("N ≥ 2")
    }

    pub fn positive_letters(&self) -> LetterSet {
        LetterSet::range(1, self.max_magnitude as Letter).expect("N ≥ 2")
    }

    /// The covering code realizing the positive family at this length;
    /// `None` at length 1, where the family is the bare anchor `{1}`.
    fn positive_family_code(&self, len: usize) -> Result<Option<Code>> {
        if len == 1 {
            return Ok(None);
        }
        let positives = self.positive_letters();
        if len <= self.ell as usize {
            Ok(Some(codes::build_v(&positives, len)?))
        } else {
            Ok(Some(codes::build_u(&positives, len)?))
        }
    }

    fn mirror(run: &[Letter]) -> Vec<Letter> {
        run.iter().map(|&l| -l).collect()
    }

    /// Is this constant-sign run in the family for its sign and length?
    pub fn run_in_family(&self, run: &[Letter]) -> Result<bool> {
        let positive = self.to_positive(run)?;
        match self.positive_family_code(positive.len())? {
            None => Ok(positive.letters() == [1]),
            Some(code) => code.contains(&positive),
        }
    }

    /// Repairs a constant-sign run into its family (≤ 2 changes, sign and
    /// length preserved; family members come back unchanged).
    pub fn repair_run(&self, run: &[Letter]) -> Result<Vec<Letter>> {
        let negative = sign_of(run[0]) == Sign::Negative;
        let positive = self.to_positive(run)?;
        let repaired = match self.positive_family_code(positive.len())? {
            None => Word::new(vec![1]),
            Some(code) => code.repair(&positive)?,
        };
        let letters = repaired.into_letters();
        Ok(if negative {
            Self::mirror(&letters)
        } else {
            letters
        })
    }

    /// Validates a run (nonempty, constant sign, in range) and returns its
    /// positive mirror image.
    fn to_positive(&self, run: &[Letter]) -> Result<Word> {
        if run.is_empty() {
            return Err(Error::EmptyWord);
        }
        self.alphabet().check_word(&Word::from(run))?;
        let sign = sign_of(run[0]);
        if run.iter().any(|&l| sign_of(l) != sign) {
            return Err(Error::InvalidArgument(
                "family membership is defined for constant-sign runs".into(),
            ));
        }
        Ok(Word::new(if sign == Sign::Negative {
            Self::mirror(run)
        } else {
            run.to_vec()
        }))
    }

    /// Family sizes `M_0..=M_up_to` (`M_0 = 0` by convention).
    pub fn family_cardinalities(&self, up_to: usize) -> Result<Vec<BigUint>> {
        let positives = self.positive_letters();
        let n_big = BigUint::from(self.max_magnitude);
        let mut min_class: BTreeMap<usize, BigUint> = BTreeMap::new();
        let mut table = Vec::with_capacity(up_to + 1);
        table.push(BigUint::zero());
        for t in 1..=up_to {
            let m = if t == 1 {
                BigUint::one()
            } else if t <= self.ell as usize {
                n_big.pow((t - 2) as u32)
            } else {
                let mut half = |h: usize| -> Result<BigUint> {
                    if let Some(c) = min_class.get(&h) {
                        return Ok(c.clone());
                    }
                    let c = codes::select_min_t_class(&positives, h)?.1;
                    min_class.insert(h, c.clone());
                    Ok(c)
                };
                half(t / 2)? * half(t - t / 2)?
            };
            table.push(m);
        }
        Ok(table)
    }

    pub fn family_cardinality(&self, len: usize) -> Result<BigUint> {
        if len == 0 {
            return Err(Error::InvalidArgument("family lengths start at 1".into()));
        }
        Ok(self.family_cardinalities(len)?.pop().expect("len ≥ 1"))
    }

    /// CSV of the family-size table: header `n,M_n`, one row per length.
    pub fn family_csv(&self, up_to: usize) -> Result<String> {
        let table = self.family_cardinalities(up_to)?;
        let mut out = String::from("n,M_n\n");
        for (n, m) in table.iter().enumerate().skip(1) {
            out.push_str(&format!("{n},{m}\n"));
        }
        Ok(out)
    }
}

/// Membership: every maximal constant-sign run bracketed on both sides by
/// opposite-sign letters must lie in its family; the first and last runs are
/// unconstrained. Letters must be nonzero and within magnitude.
pub fn aspec_is_member(model: &AspecModel, w: &Word) -> Result<bool> {
    model.alphabet().check_word(w)?;
    if w.is_empty() {
        return Ok(true);
    }
    let decomposition = run_decompose(w)?;
    let runs = decomposition.runs();
    if runs.len() >= 3 {
        for run in &runs[1..runs.len() - 1] {
            let slice = &w.letters()[run.start..run.start + run.len];
            if !model.run_in_family(slice)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One changed letter inside one input word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LetterChange {
    /// Position within the word (0-based).
    pub position: usize,
    pub before: Letter,
    pub after: Letter,
}

/// All changes applied to one input word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordRepair {
    pub word_index: usize,
    pub changes: Vec<LetterChange>,
}

/// Result of repairing a concatenation into the language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairOutcome {
    /// The inputs after repair, same lengths, concatenating to `glued`.
    pub repaired: Vec<Word>,
    pub glued: Word,
    /// Hamming distance input → repaired, per word; each is ≤ 4.
    pub distances: Vec<usize>,
    /// Per-word change audit trail, one entry per input word.
    pub transcript: Vec<WordRepair>,
}

impl RepairOutcome {
    /// JSON form of the audit trail.
    pub fn transcript_json(&self) -> String {
        serde_json::to_string_pretty(&self.transcript).expect("transcript serializes")
    }
}

/// Repairs the concatenation of member words into the language by repairing
/// every maximal constant-sign run of the raw concatenation into its family
/// — edge runs included, which membership alone would not require. Repair
/// preserves signs, so run boundaries stay fixed and the per-word damage is
/// at most 2 letters in each of the (at most 2) boundary runs: ≤ 4 changes
/// per word, re-checked at runtime along with membership of the result.
pub fn repair_concatenation(model: &AspecModel, words: &[Word]) -> Result<RepairOutcome> {
    if words.is_empty() {
        return Err(Error::InvalidArgument(
            "repair needs at least one word".into(),
        ));
    }
    for (index, w) in words.iter().enumerate() {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        if !aspec_is_member(model, w)? {
            return Err(Error::NonMemberInput { index });
        }
    }
    let raw = Word::concat(words);
    let mut letters = raw.letters().to_vec();
    let decomposition = run_decompose(&raw)?;
    for run in decomposition.runs() {
        let slice = &raw.letters()[run.start..run.start + run.len];
        let repaired = model.repair_run(slice)?;
        letters[run.start..run.start + run.len].copy_from_slice(&repaired);
    }
    let glued = Word::new(letters);
    assert!(
        aspec_is_member(model, &glued)?,
        "repaired concatenation fell outside the language; the family spanning argument is broken"
    );
    let mut repaired = Vec::with_capacity(words.len());
    let mut distances = Vec::with_capacity(words.len());
    let mut transcript = Vec::with_capacity(words.len());
    let mut offset = 0usize;
    for (word_index, w) in words.iter().enumerate() {
        let piece = glued.subword(offset, w.len());
        let changes: Vec<LetterChange> = w
            .letters()
            .iter()
            .zip(piece.letters())
            .enumerate()
            .filter(|(_, (b, a))| b != a)
            .map(|(position, (&before, &after))| LetterChange {
                position,
                before,
                after,
            })
            .collect();
        let distance = hamming(w, &piece)?;
        assert!(
            distance <= 4,
            "word {word_index} changed in {distance} > 4 positions"
        );
        assert!(
            w.letters()
                .iter()
                .zip(piece.letters())
                .all(|(&b, &a)| sign_of(b) == sign_of(a)),
            "repair changed a sign in word {word_index}"
        );
        offset += w.len();
        repaired.push(piece);
        distances.push(distance);
        transcript.push(WordRepair {
            word_index,
            changes,
        });
    }
    Ok(RepairOutcome {
        repaired,
        glued,
        distances,
        transcript,
    })
}

/// Exact `|L_n|` by a transfer recurrence over the open final run: scanning
/// left to right, a run is charged `N^len` if it is the first (free prefix)
/// or `M_len` if interior, and the still-open run at the end is a free
/// suffix. The leading factor 2 chooses the first sign; the rest alternate.
pub fn count_dp(model: &AspecModel, n: usize) -> Result<BigUint> {
    if n == 0 {
        return Ok(BigUint::one());
    }
    let m_table = model.family_cardinalities(n)?;
    let mut pow_n = Vec::with_capacity(n + 1);
    pow_n.push(BigUint::one());
    for r in 1..=n {
        pow_n.push(&pow_n[r - 1] * model.max_magnitude);
    }
    // first[r]: still inside the first run, which has length r so far.
    // later[r]: inside a non-first run of length r so far, earlier runs
    // already charged.
    let mut first = vec![BigUint::zero(); n + 2];
    let mut later = vec![BigUint::zero(); n + 2];
    first[1] = BigUint::one();
    for _ in 2..=n {
        let mut next_first = vec![BigUint::zero(); n + 2];
        let mut next_later = vec![BigUint::zero(); n + 2];
        let mut closing = BigUint::zero();
        for r in 1..=n {
            next_first[r + 1] = first[r].clone();
            next_later[r + 1] = later[r].clone();
            closing += &first[r] * &pow_n[r];
            closing += &later[r] * &m_table[r];
        }
        next_later[1] = closing;
        first = next_first;
        later = next_later;
    }
    let mut total = BigUint::zero();
    for r in 1..=n {
        total += (&first[r] + &later[r]) * &pow_n[r];
    }
    Ok(total * 2u32)
}

/// Exact `|L_n|` by the closed-form parametrization over run compositions:
///
/// `|L_n| = 2N^n + 2(n-1)N^n + Σ_k Σ_(n₁+…+n_k=n) 2·N^(n₁)·(Π M_(n_j))·N^(n_k)`
///
/// with the inner sums folded into a convolution `I(s)` over the total
/// interior length `s`, so the whole evaluation is `O(n²)` rather than a
/// walk over compositions.
pub fn count_formula(model: &AspecModel, n: usize) -> Result<BigUint> {
    if n == 0 {
        return Ok(BigUint::one());
    }
    let m_table = model.family_cardinalities(n)?;
    let mut pow_n = Vec::with_capacity(n + 1);
    pow_n.push(BigUint::one());
    for r in 1..=n {
        pow_n.push(&pow_n[r - 1] * model.max_magnitude);
    }
    let interior_max = n.saturating_sub(2);
    // interior[s]: summed family products over all compositions of s into
    // one or more interior run lengths.
    let mut interior = vec![BigUint::zero(); interior_max + 1];
    for s in 1..=interior_max {
        let mut total = m_table[s].clone();
        for t in 1..s {
            total += &m_table[t] * &interior[s - t];
        }
        interior[s] = total;
    }
    let two = BigUint::from(2u32);
    let mut total = &two * &pow_n[n] + &two * BigUint::from(n - 1) * &pow_n[n];
    for s in 1..=interior_max {
        total += &two * BigUint::from(n - s - 1) * &pow_n[n - s] * &interior[s];
    }
    Ok(total)
}

/// Exact rational bracket around the gap-density series `α = Σ_t M_t·N^(-t)`:
/// the lower end is the partial sum through `tail_cutoff`, the upper end adds
/// the tail bound `Σ_(t>cutoff) 16/t² ≤ 16/cutoff` (valid because every tail
/// term is a `U` family, whose size bound gives `M_t·N^(-t) ≤ 16/t²`).
/// Requires `tail_cutoff > ℓ` so the tail is pure `U`.
pub fn alpha_interval(
    model: &AspecModel,
    tail_cutoff: usize,
) -> Result<(BigRational, BigRational)> {
    if tail_cutoff <= model.ell as usize {
        return Err(Error::InvalidArgument(format!(
            "tail cutoff must exceed ℓ = {}",
            model.ell
        )));
    }
    let m_table = model.family_cardinalities(tail_cutoff)?;
    let n_int = BigInt::from(model.max_magnitude);
    let mut lower = BigRational::zero();
    let mut pow = BigInt::one();
    for m in m_table.iter().skip(1) {
        pow *= &n_int;
        lower += BigRational::new(BigInt::from(m.clone()), pow.clone());
    }
    let upper = &lower + BigRational::new(BigInt::from(16), BigInt::from(tail_cutoff));
    Ok((lower, upper))
}

/// One row of the entropy-ceiling sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyBoundRow {
    pub n: usize,
    pub count: BigUint,
    /// `count / ((2n/(1-α_upper))·N^n)` as a float; ≤ 1 exactly when `pass`.
    pub ratio: f64,
    pub pass: bool,
}

/// The entropy-ceiling sweep: exact counts against `(2n/(1-α_upper))·N^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyBoundCheck {
    pub alpha_lower: BigRational,
    pub alpha_upper: BigRational,
    pub rows: Vec<EntropyBoundRow>,
}

impl EntropyBoundCheck {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

/// Verifies `|L_n| ≤ (2n/(1-α_upper))·N^n` in exact arithmetic for every
/// `n ≤ n_max`, with `α_upper` from [`alpha_interval`] at `tail_cutoff`.
/// When the upper bound reaches 1 the ceiling says nothing and the check
/// reports itself inapplicable as an error.
pub fn entropy_bound_check(
    model: &AspecModel,
    n_max: usize,
    tail_cutoff: usize,
) -> Result<EntropyBoundCheck> {
    let (alpha_lower, alpha_upper) = alpha_interval(model, tail_cutoff)?;
    if alpha_upper >= BigRational::one() {
        return Err(Error::EntropyBoundInapplicable {
            alpha_upper: format!(
                "{} ≈ {:.4}",
                alpha_upper,
                rational_to_f64(&alpha_upper)
            ),
        });
    }
    let p = alpha_upper.numer().clone();
    let q = alpha_upper.denom().clone();
    let gap = &q - &p; // q·(1-α) > 0
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let count = BigInt::from(count_dp(model, n)?);
        let ceiling = BigInt::from(2 * n) * BigInt::from(model.max_magnitude).pow(n as u32) * &q;
        let lhs = &count * &gap;
        let pass = lhs <= ceiling;
        let ratio = rational_to_f64(&BigRational::new(lhs, ceiling));
        rows.push(EntropyBoundRow {
            n,
            count: count.to_biguint().expect("counts are nonnegative"),
            ratio,
            pass,
        });
    }
    Ok(EntropyBoundCheck {
        alpha_lower,
        alpha_upper,
        rows,
    })
}

/// Draws a member word of the requested length, uniformly over the valid
/// extensions at each step (every member word has positive probability; the
/// distribution is not the uniform one on the language).
pub fn sample_member<R: Rng>(model: &AspecModel, len: usize, rng: &mut R) -> Word {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    let mut candidates: Vec<Letter> = Vec::new();
    let m = model.max_magnitude as Letter;
    for _ in 0..len {
        candidates.clear();
        for mag in 1..=m {
            for l in [mag, -mag] {
                letters.push(l);
                if aspec_is_member(model, &Word::from(&letters[..])).expect("letters in range") {
                    candidates.push(l);
                }
                letters.pop();
            }
        }
        // Same-sign extension never invalidates a prefix, so the candidate
        // set is nonempty at every step.
        letters.push(candidates[rng.gen_range(0..candidates.len())]);
    }
    Word::new(letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn model(n: u32, ell: u32) -> AspecModel {
        AspecModel::new(n, ell).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn membership_examples() {
        let m = model(2, 2);
        assert!(aspec_is_member(&m, &w("1 -1 1")).unwrap());
        assert!(!aspec_is_member(&m, &w("1 -2 1")).unwrap());
        assert!(aspec_is_member(&m, &w("2 2 2 2")).unwrap(), "constant sign");
        assert!(aspec_is_member(&m, &w("2 -2")).unwrap(), "both runs are edges");
        assert!(matches!(
            aspec_is_member(&m, &w("1 0 1")),
            Err(Error::LetterOutsideAlphabet { letter: 0, .. })
        ));
        assert!(matches!(
            aspec_is_member(&m, &w("3 1")),
            Err(Error::LetterOutsideAlphabet { letter: 3, .. })
        ));
        assert!(AspecModel::new(1, 2).is_err());
        assert!(AspecModel::new(2, 1).is_err());
    }

    #[test]
    fn interior_runs_follow_the_case_split() {
        // ℓ = 3: interior run "2 2" has length 2 ≤ ℓ, so it must start with
        // two anchors — "1 1" is the only in-family word of its sign pattern
        // with first two letters fixed... and "1 2" is not in V.
        let m = model(2, 3);
        assert!(aspec_is_member(&m, &w("-1 1 1 -1")).unwrap());
        assert!(!aspec_is_member(&m, &w("-1 1 2 -1")).unwrap());
        // Interior run of length 4 > ℓ: U family over halves of length 2.
        // Its members split as T(min)×T(min); exhaustively verified below,
        // here one spot check: family cardinality 4 = 2·2.
        assert_eq!(m.family_cardinality(4).unwrap(), BigUint::from(4u32));
    }

    #[test]
    fn family_sizes_follow_the_case_split() {
        let m = model(2, 3);
        let table = m.family_cardinalities(8).unwrap();
        assert_eq!(table[1], BigUint::one());
        assert_eq!(table[2], BigUint::one(), "N^0 anchored pairs");
        assert_eq!(table[3], BigUint::from(2u32), "N^1");
        // Beyond ℓ, even alphabets split half-cubes exactly in 2^⌊log₂ h⌋.
        assert_eq!(table[4], BigUint::from(4u32), "2⁴/2^(1+1)");
        assert_eq!(table[5], BigUint::from(8u32), "2⁵/2^(1+1)");
        assert_eq!(table[8], BigUint::from(16u32), "2⁸/2^(2+2)");
        let csv = m.family_csv(4).unwrap();
        assert_eq!(csv, "n,M_n\n1,1\n2,1\n3,2\n4,4\n");
    }

    #[test]
    fn mirrored_families_share_cardinalities_and_membership() {
        let m = model(2, 3);
        for len in 1..=6usize {
            let mut in_pos = 0u64;
            let mut in_neg = 0u64;
            // Walk the positive cube of this length; mirror for negatives.
            let mut digits = vec![1i32; len];
            loop {
                let run: Vec<Letter> = digits.clone();
                let mirrored: Vec<Letter> = run.iter().map(|&l| -l).collect();
                if m.run_in_family(&run).unwrap() {
                    in_pos += 1;
                }
                if m.run_in_family(&mirrored).unwrap() {
                    in_neg += 1;
                }
                assert_eq!(
                    m.run_in_family(&run).unwrap(),
                    m.run_in_family(&mirrored).unwrap()
                );
                let mut p = 0;
                loop {
                    if p == len {
                        break;
                    }
                    digits[p] += 1;
                    if digits[p] <= 2 {
                        break;
                    }
                    digits[p] = 1;
                    p += 1;
                }
                if p == len {
                    break;
                }
            }
            assert_eq!(BigUint::from(in_pos), m.family_cardinality(len).unwrap());
            assert_eq!(in_pos, in_neg);
        }
    }

    #[test]
    fn families_are_2_spanning_in_their_cubes() {
        use std::collections::BTreeSet;
        let m = model(2, 3);
        let positives = m.positive_letters();
        for len in 1..=6usize {
            let mut members = BTreeSet::new();
            crate::codes::for_each_cube_word(&positives, len, u64::MAX, |word| {
                if m.run_in_family(word.letters())? {
                    members.insert(word.clone());
                }
                Ok(())
            })
            .unwrap();
            let check =
                crate::codes::verify_spanning_set(&members, &positives, len, 2, u64::MAX).unwrap();
            assert!(check.ok, "length {len}: max distance {:?}", check.max_distance);
        }
    }

    #[test]
    fn repair_worked_example_repairs_edge_runs_too() {
        // Every maximal run is placed into its family, edges included, so
        // the outer words move to the anchor as well.
        let m = model(2, 2);
        let outcome = repair_concatenation(&m, &[w("2"), w("-2"), w("2")]).unwrap();
        assert_eq!(outcome.glued, w("1 -1 1"));
        assert_eq!(outcome.repaired, vec![w("1"), w("-1"), w("1")]);
        assert_eq!(outcome.distances, vec![1, 1, 1]);
        assert!(aspec_is_member(&m, &outcome.glued).unwrap());
        assert_eq!(
            outcome.transcript[1],
            WordRepair {
                word_index: 1,
                changes: vec![LetterChange { position: 0, before: -2, after: -1 }],
            }
        );
        let json = outcome.transcript_json();
        assert!(json.contains("\"word_index\": 1") && json.contains("\"before\": -2"));
    }

    #[test]
    fn repair_fixes_in_family_words() {
        let m = model(2, 2);
        // Edge runs already anchored, interior run in family: nothing moves.
        let input = w("1 -1 1");
        let outcome = repair_concatenation(&m, &[input.clone()]).unwrap();
        assert_eq!(outcome.glued, input);
        assert_eq!(outcome.distances, vec![0]);
        assert!(outcome.transcript[0].changes.is_empty());
        // A lone out-of-family edge run does move.
        let outcome = repair_concatenation(&m, &[w("2")]).unwrap();
        assert_eq!(outcome.glued, w("1"));
    }

    #[test]
    fn repair_rejects_bad_inputs() {
        let m = model(2, 2);
        assert!(matches!(
            repair_concatenation(&m, &[w("1"), w("1 -2 1")]),
            Err(Error::NonMemberInput { index: 1 })
        ));
        assert!(repair_concatenation(&m, &[]).is_err());
        assert!(matches!(
            repair_concatenation(&m, &[Word::empty()]),
            Err(Error::EmptyWord)
        ));
    }

    #[test]
    fn repair_property_suite() {
        let m = model(2, 3);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let mut max_distance = 0usize;
        for _ in 0..200 {
            let k = rng.gen_range(1..=5usize);
            let words: Vec<Word> = (0..k)
                .map(|_| sample_member(&m, rng.gen_range(1..=20), &mut rng))
                .collect();
            let outcome = repair_concatenation(&m, &words).unwrap();
            assert!(aspec_is_member(&m, &outcome.glued).unwrap());
            assert_eq!(outcome.glued, Word::concat(&outcome.repaired));
            for (orig, (rep, dist)) in words
                .iter()
                .zip(outcome.repaired.iter().zip(&outcome.distances))
            {
                assert_eq!(orig.len(), rep.len());
                assert!(*dist <= 4);
                max_distance = max_distance.max(*dist);
                assert!(orig
                    .letters()
                    .iter()
                    .zip(rep.letters())
                    .all(|(&b, &a)| sign_of(b) == sign_of(a)));
            }
        }
        assert!(max_distance <= 4);
    }

    /// Count oracle: enumerate by prefix extension, pruning non-members.
    fn brute_count(m: &AspecModel, n: usize) -> u64 {
        fn extend(m: &AspecModel, prefix: &mut Vec<Letter>, left: usize) -> u64 {
            if left == 0 {
                return 1;
            }
            let mag = m.max_magnitude() as Letter;
            let mut total = 0;
            for l in (-mag..=mag).filter(|&l| l != 0) {
                prefix.push(l);
                if aspec_is_member(m, &Word::from(&prefix[..])).unwrap() {
                    total += extend(m, prefix, left - 1);
                }
                prefix.pop();
            }
            total
        }
        extend(m, &mut Vec::new(), n)
    }

    #[test]
    fn counts_agree_three_ways() {
        for ell in [2u32, 3] {
            let m = model(2, ell);
            for n in 1..=10usize {
                let brute = BigUint::from(brute_count(&m, n));
                let dp = count_dp(&m, n).unwrap();
                let formula = count_formula(&m, n).unwrap();
                assert_eq!(dp, brute, "dp vs brute at ℓ={ell} n={n}");
                assert_eq!(formula, brute, "formula vs brute at ℓ={ell} n={n}");
            }
        }
    }

    #[test]
    fn count_frozen_values() {
        let m = model(2, 2);
        assert_eq!(count_dp(&m, 1).unwrap(), BigUint::from(4u32), "2N");
        assert_eq!(count_dp(&m, 3).unwrap(), BigUint::from(56u32));
        assert_eq!(count_dp(&m, 10).unwrap(), BigUint::from(96592u32));
        let m3 = model(2, 3);
        assert_eq!(count_dp(&m3, 10).unwrap(), BigUint::from(80272u32));
    }

    #[test]
    fn counts_dominate_constant_sign_cubes() {
        let m = model(2, 3);
        for n in 1..=30usize {
            let floor = BigUint::from(2u32) * BigUint::from(2u32).pow(n as u32);
            assert!(count_dp(&m, n).unwrap() >= floor);
        }
    }

    #[test]
    fn alpha_interval_frozen_values() {
        let m = model(10, 32);
        let (lower, upper) = alpha_interval(&m, 64).unwrap();
        let exact = |num: i64, den: i64| {
            BigRational::new(BigInt::from(num), BigInt::from(den))
        };
        assert_eq!(lower, exact(5301171875, 10_000_000_000));
        assert_eq!(upper, &lower + exact(1, 4));
        assert_eq!(upper, exact(7801171875, 10_000_000_000));
        // Strictly inside the coarse three-term estimate 0.91.
        assert!(upper < exact(91, 100));
        // The t = 1 term alone contributes M₁/N = 1/10.
        assert!(lower > exact(1, 10));
        assert!(alpha_interval(&m, 32).is_err(), "cutoff must exceed ℓ");
    }

    #[test]
    fn entropy_bound_holds_at_showcase_parameters() {
        let m = model(10, 32);
        let check = entropy_bound_check(&m, 60, 64).unwrap();
        assert!(check.all_pass());
        assert!(check.alpha_upper < BigRational::one());
        for row in &check.rows {
            assert!(row.ratio <= 1.0 + 1e-12, "n = {}", row.n);
        }
        // n = 1: 2N ≤ (2/(1-α))·N because the factor exceeds 2.
        assert!(check.rows[0].pass);
    }

    #[test]
    fn entropy_bound_reports_inapplicable_at_small_parameters() {
        // N = 2, ℓ = 2: the partial sums already exceed 1.
        let m = model(2, 2);
        assert!(matches!(
            entropy_bound_check(&m, 10, 16),
            Err(Error::EntropyBoundInapplicable { .. })
        ));
    }

    proptest! {
        #[test]
        fn sampled_words_are_members(seed in any::<u64>(), len in 1usize..18) {
            let m = model(2, 3);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let word = sample_member(&m, len, &mut rng);
            prop_assert_eq!(word.len(), len);
            prop_assert!(aspec_is_member(&m, &word).unwrap());
        }

        #[test]
        fn language_is_closed_under_subwords(seed in any::<u64>(), len in 2usize..14) {
            let m = model(2, 2);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let word = sample_member(&m, len, &mut rng);
            for start in 0..len {
                for sub_len in 1..=(len - start) {
                    prop_assert!(aspec_is_member(&m, &word.subword(start, sub_len)).unwrap());
                }
            }
        }

        #[test]
        fn same_sign_padding_preserves_membership(seed in any::<u64>(), len in 1usize..12) {
            let m = model(2, 2);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let word = sample_member(&m, len, &mut rng);
            let first = word.letters()[0];
            let last = word.letters()[len - 1];
            let mut letters = vec![first; 2];
            letters.extend_from_slice(word.letters());
            letters.extend_from_slice(&[last, last]);
            prop_assert!(aspec_is_member(&m, &Word::new(letters)).unwrap());
        }
    }
}
