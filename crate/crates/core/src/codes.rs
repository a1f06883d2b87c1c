//! Covering codes on finite cubes `A^n`, built from parity constraints.
//!
//! Four families live here, all defined through the canonical letter-index
//! map of a [`LetterSet`]:
//!
//! * **T** — with `m = ⌊log₂ n⌋`, a word belongs to `T_v` when, for every
//!   `j < m`, the index sum over the positions `i < 2^m` whose `j`-th bit is
//!   `0` has parity `v_j`. Positions from `2^m` on are unconstrained. Each
//!   `T_v` is 1-spanning: flipping the parity of the single position whose
//!   set bits are exactly the satisfied constraints repairs every violation
//!   at once.
//! * **U** — a product of two minimum-size `T` classes on the two halves of
//!   the word, hence 2-spanning with `|U| · n² ≤ 16 · a^n`.
//! * **V** — all words whose first two letters equal a fixed anchor letter;
//!   2-spanning with `|V| = a^(n-2)`.
//! * **S** — extracted from an arbitrary word set `W` by keeping one largest
//!   joint residue class of the index sum (mod `2a`) and the position-weighted
//!   index sum (mod `2an`, positions numbered from 1). Any two distinct words
//!   that agree on both residues differ in at least 3 positions, and the
//!   class keeps at least `|W| / (4na²)` words.
//!
//! `T` constraints index positions from 0; the `S` extraction weights
//! positions from 1. The mismatch is deliberate: each construction follows
//! the convention its correctness argument is written in.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::word::{Letter, LetterSet, Word};

/// `⌊log₂ n⌋` for `n ≥ 1`.
pub(crate) fn floor_log2(n: usize) -> usize {
    assert!(n >= 1);
    (usize::BITS - 1 - n.leading_zeros()) as usize
}

/// `a^n` when it fits in a `u128`.
pub(crate) fn checked_pow_u128(a: usize, n: usize) -> Option<u128> {
    let mut out: u128 = 1;
    for _ in 0..n {
        out = out.checked_mul(a as u128)?;
    }
    Some(out)
}

fn check_len(w: &Word, n: usize) -> Result<()> {
    if w.len() != n {
        return Err(Error::WordLength {
            expected: n,
            actual: w.len(),
        });
    }
    Ok(())
}

/// Parity of the constrained index sums of `w` under the `T` construction:
/// entry `j` is the parity of the index sum over positions `i < 2^m` whose
/// `j`-th bit is `0`.
fn t_parities(indices: &[usize], m: usize) -> Vec<bool> {
    let block = 1usize << m;
    let mut parity = vec![false; m];
    for (i, &idx) in indices.iter().enumerate().take(block) {
        if idx % 2 == 1 {
            for (j, p) in parity.iter_mut().enumerate() {
                if i & (1 << j) == 0 {
                    *p ^= true;
                }
            }
        }
    }
    parity
}

/// Does `w ∈ T_{A,n,v}`? `v` must have length `⌊log₂ n⌋`.
pub fn t_membership(alphabet: &LetterSet, n: usize, v: &[bool], w: &Word) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidArgument("T codes require n ≥ 1".into()));
    }
    let m = floor_log2(n);
    if v.len() != m {
        return Err(Error::InvalidArgument(format!(
            "parity vector has length {}, expected ⌊log₂ {}⌋ = {}",
            v.len(),
            n,
            m
        )));
    }
    check_len(w, n)?;
    let indices = alphabet.word_indices(w)?;
    Ok(t_parities(&indices, m) == v)
}

/// Exact cardinalities `|T_{A,n,v}|` for all `2^m` parity vectors at once.
/// Entry `k` corresponds to the vector with `v_j = bit j of k`.
///
/// Counting walks the first `2^m` positions with one parity-state vector per
/// possible constraint pattern; the remaining `n - 2^m` positions are free
/// and contribute a factor `a^(n - 2^m)`.
pub fn count_all_t_classes(alphabet: &LetterSet, n: usize) -> Result<Vec<BigUint>> {
    if n == 0 {
        return Err(Error::InvalidArgument("T codes require n ≥ 1".into()));
    }
    let m = floor_log2(n);
    if m > 12 {
        return Err(Error::InvalidArgument(format!(
            "exact class counting needs 4^m = 4^{m} parity-state updates; n = {n} is too large"
        )));
    }
    let a = alphabet.size();
    let block = 1usize << m;
    let evens = BigUint::from(a - a / 2); // letters with even index
    let odds = BigUint::from(a / 2); // letters with odd index
    let mut dp = vec![BigUint::zero(); block];
    dp[0] = BigUint::one();
    for i in 0..block {
        // A letter of odd index at position i flips every constraint j with
        // bit j of i equal to 0.
        let flip = !i & (block - 1);
        let mut next = vec![BigUint::zero(); block];
        for s in 0..block {
            if dp[s].is_zero() {
                continue;
            }
            next[s] += &dp[s] * &evens;
            next[s ^ flip] += &dp[s] * &odds;
        }
        dp = next;
    }
    let free = BigUint::from(a).pow((n - block) as u32);
    for c in &mut dp {
        *c *= &free;
    }
    Ok(dp)
}

/// Exact cardinality of a single class `T_{A,n,v}`.
pub fn count_t_class(alphabet: &LetterSet, n: usize, v: &[bool]) -> Result<BigUint> {
    let m = floor_log2(n.max(1));
    if n == 0 || v.len() != m {
        return Err(Error::InvalidArgument(format!(
            "parity vector has length {}, expected ⌊log₂ {}⌋",
            v.len(),
            n
        )));
    }
    let all = count_all_t_classes(alphabet, n)?;
    let k: usize = v
        .iter()
        .enumerate()
        .map(|(j, &b)| usize::from(b) << j)
        .sum();
    Ok(all[k].clone())
}

/// The parity vector whose class is smallest, ties broken by the
/// lexicographically smallest vector `(v_0, …, v_{m-1})`.
///
/// The tie-break compares vectors componentwise from `v_0`, which is *not*
/// the numeric order of the packed index: `(0,0,1)` precedes `(0,1,0)`.
pub fn select_min_t_class(alphabet: &LetterSet, n: usize) -> Result<(Vec<bool>, BigUint)> {
    let counts = count_all_t_classes(alphabet, n)?;
    let m = floor_log2(n);
    let as_vector = |k: usize| -> Vec<bool> { (0..m).map(|j| k & (1 << j) != 0).collect() };
    let mut best: Option<(Vec<bool>, &BigUint)> = None;
    for (k, c) in counts.iter().enumerate() {
        let v = as_vector(k);
        let better = match &best {
            None => true,
            Some((bv, bc)) => c < bc || (c == *bc && v < *bv),
        };
        if better {
            best = Some((v, c));
        }
    }
    let (v, c) = best.expect("at least one parity class exists");
    Ok((v, c.clone()))
}

/// Repairs `w` into `T_{A,n,v}` by changing at most one letter.
///
/// If some constraints are violated, the position whose set bits are exactly
/// the *satisfied* constraints participates in every violated constraint and
/// no satisfied one, so flipping the parity of its letter index (to the
/// lexicographically smallest letter of the opposite parity) lands in the
/// class in a single change.
pub fn repair_t(alphabet: &LetterSet, n: usize, v: &[bool], w: &Word) -> Result<Word> {
    if n == 0 {
        return Err(Error::InvalidArgument("T codes require n ≥ 1".into()));
    }
    let m = floor_log2(n);
    if v.len() != m {
        return Err(Error::InvalidArgument(format!(
            "parity vector has length {}, expected ⌊log₂ {}⌋ = {}",
            v.len(),
            n,
            m
        )));
    }
    check_len(w, n)?;
    let indices = alphabet.word_indices(w)?;
    let parity = t_parities(&indices, m);
    let satisfied: usize = (0..m).filter(|&j| parity[j] == v[j]).map(|j| 1 << j).sum();
    if satisfied == (1 << m) - 1 {
        return Ok(w.clone());
    }
    let target_parity = (indices[satisfied] + 1) % 2;
    if target_parity >= alphabet.size() {
        return Err(Error::NoOppositeParityLetter);
    }
    let mut letters = w.letters().to_vec();
    letters[satisfied] = alphabet.letter(target_parity);
    Ok(Word::new(letters))
}

/// Which parity-constraint family a [`Code`] belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeFamily {
    /// One parity class; 1-spanning.
    T { parity: Vec<bool> },
    /// Product of minimum `T` classes on the two halves; 2-spanning.
    U { left: Vec<bool>, right: Vec<bool> },
    /// Words starting with two copies of the anchor letter; 2-spanning.
    V { anchor: Letter },
    /// A 3-separated residue class extracted from an explicit word set.
    S {
        sum_residue: u64,
        weighted_residue: u64,
    },
}

impl CodeFamily {
    pub fn name(&self) -> &'static str {
        match self {
            CodeFamily::T { .. } => "T",
            CodeFamily::U { .. } => "U",
            CodeFamily::V { .. } => "V",
            CodeFamily::S { .. } => "S",
        }
    }

    pub fn params(&self) -> String {
        let bits = |v: &[bool]| -> String { v.iter().map(|&b| if b { '1' } else { '0' }).collect() };
        match self {
            CodeFamily::T { parity } => format!("v={}", bits(parity)),
            CodeFamily::U { left, right } => format!("left={};right={}", bits(left), bits(right)),
            CodeFamily::V { anchor } => format!("anchor={anchor}"),
            CodeFamily::S {
                sum_residue,
                weighted_residue,
            } => format!("i={sum_residue};j={weighted_residue}"),
        }
    }
}

/// A concrete code: a subset of `A^n` with membership test, exact
/// cardinality, and (for the spanning families) a bounded repair procedure.
#[derive(Debug, Clone)]
pub struct Code {
    family: CodeFamily,
    alphabet: LetterSet,
    n: usize,
    cardinality: BigUint,
    /// Only `S` codes carry explicit members; the others are predicates.
    members: Option<BTreeSet<Word>>,
}

impl Code {
    pub fn family(&self) -> &CodeFamily {
        &self.family
    }

    pub fn alphabet(&self) -> &LetterSet {
        &self.alphabet
    }

    pub fn word_len(&self) -> usize {
        self.n
    }

    pub fn cardinality(&self) -> &BigUint {
        &self.cardinality
    }

    /// The spanning radius guaranteed by construction; `None` for `S`, which
    /// separates instead of spanning.
    pub fn spanning_radius(&self) -> Option<usize> {
        match self.family {
            CodeFamily::T { .. } => Some(1),
            CodeFamily::U { .. } | CodeFamily::V { .. } => Some(2),
            CodeFamily::S { .. } => None,
        }
    }

    pub fn contains(&self, w: &Word) -> Result<bool> {
        check_len(w, self.n)?;
        match &self.family {
            CodeFamily::T { parity } => t_membership(&self.alphabet, self.n, parity, w),
            CodeFamily::U { left, right } => {
                let n1 = self.n / 2;
                let (wl, wr) = (w.subword(0, n1), w.subword(n1, self.n - n1));
                Ok(t_membership(&self.alphabet, n1, left, &wl)?
                    && t_membership(&self.alphabet, self.n - n1, right, &wr)?)
            }
            CodeFamily::V { anchor } => {
                self.alphabet.word_indices(w)?;
                let l = w.letters();
                Ok(l[0] == *anchor && l[1] == *anchor)
            }
            CodeFamily::S { .. } => {
                self.alphabet.word_indices(w)?;
                Ok(self.members.as_ref().expect("S codes store members").contains(w))
            }
        }
    }

    /// Changes at most `spanning_radius` letters of `w` to reach the code.
    /// `S` codes do not support repair.
    pub fn repair(&self, w: &Word) -> Result<Word> {
        check_len(w, self.n)?;
        match &self.family {
            CodeFamily::T { parity } => repair_t(&self.alphabet, self.n, parity, w),
            CodeFamily::U { left, right } => {
                let n1 = self.n / 2;
                let rl = repair_t(&self.alphabet, n1, left, &w.subword(0, n1))?;
                let rr = repair_t(&self.alphabet, self.n - n1, right, &w.subword(n1, self.n - n1))?;
                Ok(Word::concat(&[rl, rr]))
            }
            CodeFamily::V { anchor } => {
                self.alphabet.word_indices(w)?;
                let mut letters = w.letters().to_vec();
                letters[0] = *anchor;
                letters[1] = *anchor;
                Ok(Word::new(letters))
            }
            CodeFamily::S { .. } => Err(Error::RepairUnsupported { family: "S" }),
        }
    }

    /// Materializes the member set. Predicate-backed families scan all of
    /// `A^n`, so the cube size is charged against `budget`.
    pub fn members(&self, budget: u64) -> Result<BTreeSet<Word>> {
        if let Some(m) = &self.members {
            return Ok(m.clone());
        }
        let mut out = BTreeSet::new();
        for_each_cube_word(&self.alphabet, self.n, budget, |w| {
            if self.contains(w)? {
                out.insert(w.clone());
            }
            Ok(())
        })?;
        Ok(out)
    }

    /// Text export: one header line `family,alphabet size,n,params,cardinality`
    /// followed by the member words in lexicographic order, compact form when
    /// every letter is a single digit.
    pub fn export(&self, budget: u64) -> Result<String> {
        let mut out = format!(
            "{},{},{},{},{}\n",
            self.family.name(),
            self.alphabet.size(),
            self.n,
            self.family.params(),
            self.cardinality
        );
        for w in self.members(budget)? {
            match w.compact() {
                Some(c) => {
                    out.push_str(&c);
                }
                None => {
                    out.push_str(&w.to_string());
                }
            }
            out.push('\n');
        }
        Ok(out)
    }
}

/// Builds the minimum-cardinality `T` class on `A^n`.
pub fn build_t(alphabet: &LetterSet, n: usize) -> Result<Code> {
    if alphabet.size() < 2 {
        return Err(Error::InvalidArgument("T codes require |A| ≥ 2".into()));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("T codes require n ≥ 1".into()));
    }
    let (parity, cardinality) = select_min_t_class(alphabet, n)?;
    Ok(Code {
        family: CodeFamily::T { parity },
        alphabet: alphabet.clone(),
        n,
        cardinality,
        members: None,
    })
}

/// Builds the two-half product code `U` on `A^n`, `n ≥ 2`.
pub fn build_u(alphabet: &LetterSet, n: usize) -> Result<Code> {
    if alphabet.size() < 2 {
        return Err(Error::InvalidArgument("U codes require |A| ≥ 2".into()));
    }
    if n < 2 {
        return Err(Error::InvalidArgument("U codes require n ≥ 2".into()));
    }
    let n1 = n / 2;
    let (left, cl) = select_min_t_class(alphabet, n1)?;
    let (right, cr) = select_min_t_class(alphabet, n - n1)?;
    let cardinality = cl * cr;
    // Size guarantee of the product construction; a violation is a bug.
    let a = BigUint::from(alphabet.size());
    assert!(
        &cardinality * BigUint::from(n * n) <= BigUint::from(16u32) * a.pow(n as u32),
        "U code exceeds its size bound"
    );
    Ok(Code {
        family: CodeFamily::U { left, right },
        alphabet: alphabet.clone(),
        n,
        cardinality,
        members: None,
    })
}

/// Builds the anchored code `V` on `A^n`, `n ≥ 2`: all words starting with
/// two copies of the anchor. The anchor is the letter `1` when present, else
/// `-1` when present, else the smallest letter.
pub fn build_v(alphabet: &LetterSet, n: usize) -> Result<Code> {
    if n < 2 {
        return Err(Error::InvalidArgument("V codes require n ≥ 2".into()));
    }
    let anchor = if alphabet.contains(1) {
        1
    } else if alphabet.contains(-1) {
        -1
    } else {
        alphabet.letter(0)
    };
    let cardinality = BigUint::from(alphabet.size()).pow((n - 2) as u32);
    Ok(Code {
        family: CodeFamily::V { anchor },
        alphabet: alphabet.clone(),
        n,
        cardinality,
        members: None,
    })
}

/// Extracts a 3-separated subset of `words ⊆ A^n`: the largest joint residue
/// class of the index sum (mod `2a`) and the 1-based position-weighted index
/// sum (mod `2an`), ties broken by the smallest residue pair. The returned
/// code keeps at least `|words| / (4na²)` members.
pub fn extract_3_separated(
    words: &BTreeSet<Word>,
    alphabet: &LetterSet,
    n: usize,
) -> Result<Code> {
    if words.is_empty() {
        return Err(Error::InvalidArgument(
            "3-separated extraction needs a nonempty word set".into(),
        ));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("3-separated extraction needs n ≥ 1".into()));
    }
    let a = alphabet.size() as u64;
    let sum_mod = 2 * a;
    let weighted_mod = 2 * a * n as u64;
    let mut classes: std::collections::BTreeMap<(u64, u64), BTreeSet<Word>> =
        std::collections::BTreeMap::new();
    for w in words {
        check_len(w, n)?;
        let indices = alphabet.word_indices(w)?;
        let sum: u64 = indices.iter().map(|&i| i as u64).sum();
        let weighted: u64 = indices
            .iter()
            .enumerate()
            .map(|(k, &i)| (k as u64 + 1) * i as u64)
            .sum();
        classes
            .entry((sum % sum_mod, weighted % weighted_mod))
            .or_default()
            .insert(w.clone());
    }
    let ((sum_residue, weighted_residue), members) = classes
        .into_iter()
        .max_by(|(ka, va), (kb, vb)| va.len().cmp(&vb.len()).then(kb.cmp(ka)))
        .expect("nonempty input yields at least one class");
    // Pigeonhole over at most 4na² classes; a violation is a bug.
    assert!(
        members.len() as u128 * (4 * n as u128 * (a as u128).pow(2)) >= words.len() as u128,
        "extracted class is smaller than the pigeonhole bound allows"
    );
    Ok(Code {
        family: CodeFamily::S {
            sum_residue,
            weighted_residue,
        },
        alphabet: alphabet.clone(),
        n,
        cardinality: BigUint::from(members.len()),
        members: Some(members),
    })
}

/// Outcome of an exhaustive spanning check over `A^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningCheck {
    pub radius: usize,
    /// Largest Hamming distance from any cube word to the code; `None` when
    /// the code is empty.
    pub max_distance: Option<usize>,
    pub ok: bool,
    pub words_checked: u64,
}

/// Exhaustively verifies that every word of `A^n` is within `radius` letter
/// changes of the code, by multi-source breadth-first search over the cube
/// graph. The cube size `a^n` is charged against `budget`.
pub fn verify_spanning(code: &Code, radius: usize, budget: u64) -> Result<SpanningCheck> {
    let members = code.members(budget)?;
    verify_spanning_set(&members, &code.alphabet, code.n, radius, budget)
}

/// Set-based variant of [`verify_spanning`]; an empty set fails for every
/// radius.
pub fn verify_spanning_set(
    members: &BTreeSet<Word>,
    alphabet: &LetterSet,
    n: usize,
    radius: usize,
    budget: u64,
) -> Result<SpanningCheck> {
    let a = alphabet.size();
    let total = checked_pow_u128(a, n)
        .filter(|&t| t <= budget as u128 && t <= usize::MAX as u128)
        .ok_or(Error::BudgetExceeded { budget })? as usize;
    if n * (a - 1) > u8::MAX as usize - 1 {
        return Err(Error::InvalidArgument(
            "cube diameter exceeds the distance-array range".into(),
        ));
    }
    let mut dist = vec![u8::MAX; total];
    let mut queue = std::collections::VecDeque::new();
    for w in members {
        check_len(w, n)?;
        let indices = alphabet.word_indices(w)?;
        let mut idx = 0usize;
        for &d in indices.iter().rev() {
            idx = idx * a + d;
        }
        if dist[idx] == u8::MAX {
            dist[idx] = 0;
            queue.push_back(idx);
        }
    }
    if queue.is_empty() {
        return Ok(SpanningCheck {
            radius,
            max_distance: None,
            ok: false,
            words_checked: total as u64,
        });
    }
    let mut max_distance = 0usize;
    while let Some(idx) = queue.pop_front() {
        let d = dist[idx];
        max_distance = max_distance.max(d as usize);
        let mut stride = 1usize;
        for _ in 0..n {
            let digit = (idx / stride) % a;
            let base = idx - digit * stride;
            for other in 0..a {
                if other != digit {
                    let nidx = base + other * stride;
                    if dist[nidx] == u8::MAX {
                        dist[nidx] = d + 1;
                        queue.push_back(nidx);
                    }
                }
            }
            stride *= a;
        }
    }
    Ok(SpanningCheck {
        radius,
        max_distance: Some(max_distance),
        ok: max_distance <= radius,
        words_checked: total as u64,
    })
}

/// Checks that every pair of distinct words differs in at least `d_min`
/// positions. All words must share one length.
pub fn verify_separated(words: &BTreeSet<Word>, d_min: usize) -> Result<bool> {
    let list: Vec<&Word> = words.iter().collect();
    for (i, v) in list.iter().enumerate() {
        for w in &list[i + 1..] {
            if crate::word::hamming(v, w)? < d_min {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The full cube `A^n` as a sorted set, refusing to materialize more than
/// `budget` words.
pub fn cube_words(alphabet: &LetterSet, n: usize, budget: u64) -> Result<BTreeSet<Word>> {
    let mut out = BTreeSet::new();
    for_each_cube_word(alphabet, n, budget, |w| {
        out.insert(w.clone());
        Ok(())
    })?;
    Ok(out)
}

/// Calls `f` on every word of `A^n` in lexicographic order, charging one
/// budget unit per word.
pub(crate) fn for_each_cube_word<F>(
    alphabet: &LetterSet,
    n: usize,
    budget: u64,
    mut f: F,
) -> Result<()>
where
    F: FnMut(&Word) -> Result<()>,
{
    let a = alphabet.size();
    let total = checked_pow_u128(a, n)
        .filter(|&t| t <= budget as u128)
        .ok_or(Error::BudgetExceeded { budget })?;
    let mut digits = vec![0usize; n];
    let mut letters: Vec<Letter> = vec![alphabet.letter(0); n];
    let mut word = Word::new(letters.clone());
    let mut seen: u128 = 0;
    loop {
        f(&word)?;
        seen += 1;
        if seen == total {
            return Ok(());
        }
        // Odometer step on the rightmost (least significant) position keeps
        // the leftmost positions most significant, i.e. lexicographic order.
        let mut p = n;
        loop {
            p -= 1;
            digits[p] += 1;
            if digits[p] < a {
                break;
            }
            digits[p] = 0;
        }
        for (slot, &d) in letters.iter_mut().zip(digits.iter()) {
            *slot = alphabet.letter(d);
        }
        word = Word::new(letters.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn abc() -> LetterSet {
        LetterSet::range(0, 2).unwrap()
    }

    fn parse_bits(s: &str) -> Vec<bool> {
        s.bytes().map(|b| b == b'1').collect()
    }

    /// Independent membership oracle: recompute each constraint sum directly
    /// from the definition, with none of the incremental machinery.
    fn t_member_oracle(alphabet: &LetterSet, v: &[bool], w: &Word) -> bool {
        let n = w.len();
        let m = floor_log2(n);
        assert_eq!(v.len(), m);
        (0..m).all(|j| {
            let sum: usize = (0..1usize << m)
                .filter(|i| i & (1 << j) == 0)
                .map(|i| alphabet.index_of(w.letters()[i]).unwrap())
                .sum();
            (sum % 2 == 1) == v[j]
        })
    }

    #[test]
    fn membership_worked_examples() {
        let v = parse_bits("010");
        let w_in = Word::parse("0121200111").unwrap();
        let w_out = Word::parse("0211221100").unwrap();
        assert!(t_membership(&abc(), 10, &v, &w_in).unwrap());
        assert!(!t_membership(&abc(), 10, &v, &w_out).unwrap());
    }

    #[test]
    fn repair_worked_example() {
        let v = parse_bits("010");
        let w = Word::parse("0211221100").unwrap();
        let repaired = repair_t(&abc(), 10, &v, &w).unwrap();
        assert_eq!(repaired, Word::parse("0211211100").unwrap());
        assert_eq!(crate::word::hamming(&w, &repaired).unwrap(), 1);
        assert!(t_membership(&abc(), 10, &v, &repaired).unwrap());
        // A member word comes back untouched.
        let w_in = Word::parse("0121200111").unwrap();
        assert_eq!(repair_t(&abc(), 10, &v, &w_in).unwrap(), w_in);
    }

    #[test]
    fn class_counts_match_exhaustive_enumeration() {
        // Alphabets of odd and even size, block sizes 2, 4, 8.
        for letters in [vec![0, 1], vec![0, 1, 2], vec![0, 1, 2, 3]] {
            let alpha = LetterSet::new(letters).unwrap();
            for n in [2usize, 3, 4, 5, 8, 9] {
                let m = floor_log2(n);
                let counts = count_all_t_classes(&alpha, n).unwrap();
                let mut brute = vec![0u64; 1 << m];
                for_each_cube_word(&alpha, n, u64::MAX, |w| {
                    let indices = alpha.word_indices(w).unwrap();
                    let parity = t_parities(&indices, m);
                    let k: usize = parity
                        .iter()
                        .enumerate()
                        .map(|(j, &b)| usize::from(b) << j)
                        .sum();
                    brute[k] += 1;
                    Ok(())
                })
                .unwrap();
                let brute: Vec<BigUint> = brute.into_iter().map(BigUint::from).collect();
                assert_eq!(counts, brute, "alphabet size {} n {}", alpha.size(), n);
            }
        }
    }

    #[test]
    fn class_counts_sum_to_cube_size() {
        let alpha = abc();
        for n in [1usize, 4, 10, 16] {
            let counts = count_all_t_classes(&alpha, n).unwrap();
            let total: BigUint = counts.iter().sum();
            assert_eq!(total, BigUint::from(3u32).pow(n as u32));
        }
    }

    #[test]
    fn even_alphabets_split_classes_equally() {
        // For even |A| exactly half the letters have odd index, so every
        // parity pattern is hit by the same number of words.
        for (a, n) in [(2usize, 8usize), (4, 9), (10, 4)] {
            let alpha = LetterSet::range(0, a as Letter - 1).unwrap();
            let m = floor_log2(n);
            let counts = count_all_t_classes(&alpha, n).unwrap();
            let expected = BigUint::from(a).pow(n as u32) / BigUint::from(1u32 << m);
            assert!(counts.iter().all(|c| *c == expected));
        }
    }

    #[test]
    fn min_class_selection_and_tie_break() {
        // |A| = 3, n = 10: the frozen distribution is one class of 8019 and
        // seven classes of 7290; the smallest vector among the 7290s,
        // compared componentwise from v_0, is (0,0,1).
        let (v, c) = select_min_t_class(&abc(), 10).unwrap();
        assert_eq!(c, BigUint::from(7290u32));
        assert_eq!(v, parse_bits("001"));
        let all = count_all_t_classes(&abc(), 10).unwrap();
        assert_eq!(all[0], BigUint::from(8019u32));
        assert!(all[1..].iter().all(|c| *c == BigUint::from(7290u32)));
    }

    #[test]
    fn min_class_never_exceeds_average() {
        for (letters, n) in [
            (vec![0, 1, 2], 10usize),
            (vec![0, 1], 9),
            (vec![0, 1, 2, 3, 4], 6),
        ] {
            let alpha = LetterSet::new(letters).unwrap();
            let m = floor_log2(n);
            let (_, c) = select_min_t_class(&alpha, n).unwrap();
            let avg_times_classes = c * BigUint::from(1u32 << m);
            assert!(avg_times_classes <= BigUint::from(alpha.size()).pow(n as u32));
        }
    }

    #[test]
    fn t_code_is_1_spanning_exhaustively() {
        for n in [4usize, 6, 10] {
            let code = build_t(&abc(), n).unwrap();
            let check = verify_spanning(&code, 1, 100_000_000).unwrap();
            assert!(check.ok, "n = {n}: max distance {:?}", check.max_distance);
            assert_eq!(check.max_distance, Some(1));
        }
    }

    #[test]
    fn u_and_v_codes_are_2_spanning_exhaustively() {
        for n in [4usize, 7, 10] {
            for code in [build_u(&abc(), n).unwrap(), build_v(&abc(), n).unwrap()] {
                let check = verify_spanning(&code, 2, 100_000_000).unwrap();
                assert!(
                    check.ok,
                    "{} n = {n}: max distance {:?}",
                    code.family().name(),
                    check.max_distance
                );
            }
        }
    }

    #[test]
    fn code_cardinalities_match_member_counts() {
        for n in [4usize, 9] {
            for code in [
                build_t(&abc(), n).unwrap(),
                build_u(&abc(), n).unwrap(),
                build_v(&abc(), n).unwrap(),
            ] {
                let members = code.members(u64::MAX).unwrap();
                assert_eq!(BigUint::from(members.len()), *code.cardinality());
                for w in &members {
                    assert!(code.contains(w).unwrap());
                }
            }
        }
    }

    #[test]
    fn v_code_anchor_prefers_one_then_minus_one() {
        let with_one = build_v(&LetterSet::range(1, 3).unwrap(), 4).unwrap();
        assert_eq!(with_one.family(), &CodeFamily::V { anchor: 1 });
        let with_minus = build_v(&LetterSet::range(-3, -1).unwrap(), 4).unwrap();
        assert_eq!(with_minus.family(), &CodeFamily::V { anchor: -1 });
        let neither = build_v(&LetterSet::new([0, 2, 4]).unwrap(), 4).unwrap();
        assert_eq!(neither.family(), &CodeFamily::V { anchor: 0 });
        assert_eq!(
            *with_one.cardinality(),
            BigUint::from(9u32),
            "|A|^(n-2) with |A| = 3, n = 4"
        );
    }

    #[test]
    fn extraction_produces_3_separated_class_on_full_cube() {
        let alpha = LetterSet::range(0, 1).unwrap();
        let mut cube = BTreeSet::new();
        for_each_cube_word(&alpha, 6, u64::MAX, |w| {
            cube.insert(w.clone());
            Ok(())
        })
        .unwrap();
        let code = extract_3_separated(&cube, &alpha, 6).unwrap();
        let members = code.members(u64::MAX).unwrap();
        assert!(verify_separated(&members, 3).unwrap());
        // Pigeonhole floor: 64 words over at most 4·6·4 = 96 classes.
        assert!(!members.is_empty());
        assert!(matches!(code.family(), CodeFamily::S { .. }));
        assert!(code.repair(cube.iter().next().unwrap()).is_err());
    }

    #[test]
    fn empty_set_spans_nothing() {
        let alpha = abc();
        let check = verify_spanning_set(&BTreeSet::new(), &alpha, 3, 3, u64::MAX).unwrap();
        assert!(!check.ok);
        assert_eq!(check.max_distance, None);
        // ... and extraction refuses an empty input outright.
        assert!(extract_3_separated(&BTreeSet::new(), &alpha, 3).is_err());
    }

    #[test]
    fn export_lists_sorted_members_under_header() {
        let code = build_t(&LetterSet::range(0, 1).unwrap(), 2).unwrap();
        let text = code.export(u64::MAX).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        // m = 1, so the one constraint reads position 0 alone; the v = 0
        // class is exactly the words with an even first index.
        assert_eq!(lines[0], "T,2,2,v=0,2");
        assert_eq!(&lines[1..], &["00", "01"]);
        // Compact form is chosen per word: a signed word falls back to
        // spaced letters while an all-digit word on the same lines compacts.
        let spaced = build_v(&LetterSet::new([-1, 1]).unwrap(), 3).unwrap();
        let text = spaced.export(u64::MAX).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "V,2,3,anchor=1,2");
        assert_eq!(&lines[1..], &["1 1 -1", "111"]);
        for line in &lines[1..] {
            assert!(spaced.contains(&Word::parse(line).unwrap()).unwrap());
        }
    }

    #[test]
    fn budget_guards_cube_scans() {
        let code = build_t(&abc(), 10).unwrap();
        assert!(matches!(
            code.members(100),
            Err(Error::BudgetExceeded { budget: 100 })
        ));
        assert!(matches!(
            verify_spanning(&code, 1, 1000),
            Err(Error::BudgetExceeded { budget: 1000 })
        ));
    }

    #[test]
    fn length_and_alphabet_mismatches_are_rejected() {
        let code = build_t(&abc(), 4).unwrap();
        assert!(matches!(
            code.contains(&Word::parse("012").unwrap()),
            Err(Error::WordLength { expected: 4, actual: 3 })
        ));
        assert!(matches!(
            code.contains(&Word::parse("0129").unwrap()),
            Err(Error::LetterOutsideAlphabet { letter: 9, .. })
        ));
        assert!(build_t(&LetterSet::new([5]).unwrap(), 4).is_err());
        assert!(build_u(&abc(), 1).is_err());
        assert!(build_v(&abc(), 1).is_err());
    }

    proptest! {
        #[test]
        fn repair_reaches_membership_in_at_most_one_change(
            letters in proptest::collection::vec(0i32..=2, 10),
            vbits in proptest::collection::vec(any::<bool>(), 3),
        ) {
            let w = Word::new(letters);
            let repaired = repair_t(&abc(), 10, &vbits, &w).unwrap();
            prop_assert!(t_membership(&abc(), 10, &vbits, &repaired).unwrap());
            prop_assert!(crate::word::hamming(&w, &repaired).unwrap() <= 1);
            // Members are fixed points.
            if t_membership(&abc(), 10, &vbits, &w).unwrap() {
                prop_assert_eq!(&repaired, &w);
            }
            // Oracle agreement on both input and output.
            prop_assert_eq!(
                t_membership(&abc(), 10, &vbits, &w).unwrap(),
                t_member_oracle(&abc(), &vbits, &w)
            );
            prop_assert!(t_member_oracle(&abc(), &vbits, &repaired));
        }

        #[test]
        fn u_repair_stays_within_two_changes(letters in proptest::collection::vec(0i32..=2, 9)) {
            let code = build_u(&abc(), 9).unwrap();
            let w = Word::new(letters);
            let repaired = code.repair(&w).unwrap();
            prop_assert!(code.contains(&repaired).unwrap());
            prop_assert!(crate::word::hamming(&w, &repaired).unwrap() <= 2);
        }

        #[test]
        fn extraction_separates_random_subsets(
            picks in proptest::collection::btree_set(proptest::collection::vec(0i32..=2, 5), 1..80),
        ) {
            let alpha = abc();
            let words: BTreeSet<Word> = picks.into_iter().map(Word::new).collect();
            let code = extract_3_separated(&words, &alpha, 5).unwrap();
            let members = code.members(u64::MAX).unwrap();
            prop_assert!(verify_separated(&members, 3).unwrap());
            prop_assert!(members.iter().all(|w| words.contains(w)));
            prop_assert!(members.len() as u128 * 4 * 5 * 9 >= words.len() as u128);
        }
    }
}
