//! Alphabets, words, Hamming distance, and run decomposition.
//!
//! Letters are signed integers, and the sign class of a letter (negative,
//! zero, positive) is the structure everything downstream cares about.
//! Ascending letter value is the canonical order throughout the crate: it
//! fixes lexicographic order on words and the index map that the parity-code
//! constructions rely on.

use std::fmt;

use crate::error::{Error, Result};

/// A single letter. Magnitudes stay tiny in practice; `i32` is plenty.
pub type Letter = i32;

/// The symmetric alphabet `{-N, …, -1, 1, …, N}`, optionally including `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedAlphabet {
    max_magnitude: u32,
    includes_zero: bool,
}

impl SignedAlphabet {
    pub fn new(max_magnitude: u32, includes_zero: bool) -> Result<Self> {
        if max_magnitude == 0 {
            return Err(Error::InvalidArgument(
                "alphabet magnitude N must be at least 1".into(),
            ));
        }
        Ok(SignedAlphabet {
            max_magnitude,
            includes_zero,
        })
    }

    pub fn max_magnitude(&self) -> u32 {
        self.max_magnitude
    }

    pub fn includes_zero(&self) -> bool {
        self.includes_zero
    }

    pub fn size(&self) -> usize {
        2 * self.max_magnitude as usize + usize::from(self.includes_zero)
    }

    pub fn contains(&self, letter: Letter) -> bool {
        if letter == 0 {
            self.includes_zero
        } else {
            letter.unsigned_abs() <= self.max_magnitude
        }
    }

    /// Letters in canonical (ascending) order.
    pub fn letters(&self) -> Vec<Letter> {
        let n = self.max_magnitude as Letter;
        let mut out = Vec::with_capacity(self.size());
        out.extend(-n..0);
        if self.includes_zero {
            out.push(0);
        }
        out.extend(1..=n);
        out
    }

    pub fn describe(&self) -> String {
        let n = self.max_magnitude;
        if self.includes_zero {
            format!("{{-{n},…,{n}}}")
        } else {
            format!("{{-{n},…,-1,1,…,{n}}}")
        }
    }

    /// Rejects the first letter of `w` that falls outside the alphabet.
    pub fn check_word(&self, w: &Word) -> Result<()> {
        for &l in w.letters() {
            if !self.contains(l) {
                return Err(Error::LetterOutsideAlphabet {
                    letter: l,
                    alphabet: self.describe(),
                });
            }
        }
        Ok(())
    }
}

/// An arbitrary finite set of letters together with the canonical index map
/// (position in ascending order). The code constructions work with letter
/// indices, never with letter values, so alphabets like `{0,…,a-1}` and
/// `{1,…,N}` go through the same machinery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterSet {
    letters: Vec<Letter>,
}

impl LetterSet {
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Result<Self> {
        let mut v: Vec<Letter> = letters.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(Error::InvalidArgument("letter set must be nonempty".into()));
        }
        Ok(LetterSet { letters: v })
    }

    /// The contiguous range `first..=last`.
    pub fn range(first: Letter, last: Letter) -> Result<Self> {
        if first > last {
            return Err(Error::InvalidArgument(format!(
                "empty letter range {first}..={last}"
            )));
        }
        Self::new(first..=last)
    }

    pub fn size(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.index_of(letter).is_some()
    }

    /// Canonical index of a letter: its rank in ascending order.
    pub fn index_of(&self, letter: Letter) -> Option<usize> {
        self.letters.binary_search(&letter).ok()
    }

    pub fn letter(&self, index: usize) -> Letter {
        self.letters[index]
    }

    pub fn describe(&self) -> String {
        let body: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        format!("{{{}}}", body.join(","))
    }

    /// Letter indices of `w`, rejecting letters outside the set.
    pub fn word_indices(&self, w: &Word) -> Result<Vec<usize>> {
        w.letters()
            .iter()
            .map(|&l| {
                self.index_of(l).ok_or(Error::LetterOutsideAlphabet {
                    letter: l,
                    alphabet: self.describe(),
                })
            })
            .collect()
    }
}

/// A finite word. Comparison is lexicographic under ascending letter order,
/// which `Vec<i32>`'s derived `Ord` already is.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn subword(&self, start: usize, len: usize) -> Word {
        Word(self.0[start..start + len].to_vec())
    }

    /// Concatenation of `words` in order.
    pub fn concat(words: &[Word]) -> Word {
        let mut out = Vec::with_capacity(words.iter().map(Word::len).sum());
        for w in words {
            out.extend_from_slice(w.letters());
        }
        Word(out)
    }

    /// Digit-string form (`"0121200111"`), available exactly when every
    /// letter lies in `0..=9`.
    pub fn compact(&self) -> Option<String> {
        if self.0.iter().all(|&l| (0..=9).contains(&l)) {
            Some(self.0.iter().map(|&l| char::from(b'0' + l as u8)).collect())
        } else {
            None
        }
    }

    /// Parses a word from text. Three forms are accepted:
    ///
    /// * whitespace-separated signed integers: `"1 -2 0 3"`;
    /// * a digit string of length ≥ 2, one letter per digit: `"0121200111"`;
    /// * a single signed integer: `"-7"`.
    pub fn parse(input: &str) -> Result<Word> {
        let trimmed = input.trim();
        if trimmed.is_empty() {
            return Err(Error::WordParse {
                input: input.to_string(),
                reason: "empty input".into(),
            });
        }
        let parse_int = |tok: &str| -> Result<Letter> {
            tok.parse::<Letter>().map_err(|e| Error::WordParse {
                input: input.to_string(),
                reason: format!("bad letter {tok:?}: {e}"),
            })
        };
        if trimmed.split_whitespace().nth(1).is_some() {
            let letters: Result<Vec<Letter>> = trimmed.split_whitespace().map(parse_int).collect();
            return Ok(Word(letters?));
        }
        if trimmed.len() >= 2 && trimmed.bytes().all(|b| b.is_ascii_digit()) {
            return Ok(Word(
                trimmed.bytes().map(|b| Letter::from(b - b'0')).collect(),
            ));
        }
        Ok(Word(vec![parse_int(trimmed)?]))
    }
}

impl fmt::Display for Word {
    /// Space-separated letters: `"1 -2 0 3"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}

/// Sign class of a letter. `Ord` follows the numeric order of representatives:
/// negative < zero < positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

pub fn sign_of(letter: Letter) -> Sign {
    match letter.cmp(&0) {
        std::cmp::Ordering::Less => Sign::Negative,
        std::cmp::Ordering::Equal => Sign::Zero,
        std::cmp::Ordering::Greater => Sign::Positive,
    }
}

/// One maximal constant-sign run: `w[start..start+len]` all share `sign`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub sign: Sign,
    pub start: usize,
    pub len: usize,
}

/// The unique split of a word into maximal constant-sign runs, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunDecomposition {
    runs: Vec<Run>,
}

impl RunDecomposition {
    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }
}

/// Splits `w` into maximal constant-sign runs. Adjacent runs have different
/// sign classes, and the runs tile `w` exactly.
pub fn run_decompose(w: &Word) -> Result<RunDecomposition> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let letters = w.letters();
    let mut runs = Vec::new();
    let mut start = 0usize;
    let mut current = sign_of(letters[0]);
    for (i, &l) in letters.iter().enumerate().skip(1) {
        let s = sign_of(l);
        if s != current {
            runs.push(Run {
                sign: current,
                start,
                len: i - start,
            });
            start = i;
            current = s;
        }
    }
    runs.push(Run {
        sign: current,
        start,
        len: letters.len() - start,
    });
    Ok(RunDecomposition { runs })
}

/// Number of positions where `v` and `w` differ. Lengths must match.
pub fn hamming(v: &Word, w: &Word) -> Result<usize> {
    if v.len() != w.len() {
        return Err(Error::UnequalLengths {
            left: v.len(),
            right: w.len(),
        });
    }
    Ok(v.letters()
        .iter()
        .zip(w.letters())
        .filter(|(a, b)| a != b)
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn signed_alphabet_letters_are_ascending() {
        let a = SignedAlphabet::new(2, true).unwrap();
        assert_eq!(a.letters(), vec![-2, -1, 0, 1, 2]);
        assert_eq!(a.size(), 5);
        let b = SignedAlphabet::new(2, false).unwrap();
        assert_eq!(b.letters(), vec![-2, -1, 1, 2]);
        assert!(!b.contains(0));
        assert!(b.contains(-2));
        assert!(!b.contains(3));
        assert!(SignedAlphabet::new(0, true).is_err());
    }

    #[test]
    fn letter_set_indexing_is_ascending_rank() {
        let s = LetterSet::new([2, 0, 1]).unwrap();
        assert_eq!(s.letters(), &[0, 1, 2]);
        assert_eq!(s.index_of(0), Some(0));
        assert_eq!(s.index_of(2), Some(2));
        assert_eq!(s.index_of(5), None);
        assert_eq!(s.letter(1), 1);
        let neg = LetterSet::range(-3, -1).unwrap();
        assert_eq!(neg.letters(), &[-3, -2, -1]);
        assert_eq!(neg.index_of(-3), Some(0));
        assert!(LetterSet::new([]).is_err());
    }

    #[test]
    fn word_display_and_parse_round_trip() {
        let w = Word::new(vec![1, -2, 0, 3]);
        assert_eq!(w.to_string(), "1 -2 0 3");
        assert_eq!(Word::parse("1 -2 0 3").unwrap(), w);
        assert_eq!(Word::parse("  1  -2 0 3 ").unwrap(), w);
    }

    #[test]
    fn compact_form_is_digits_only() {
        let w = Word::new(vec![0, 1, 2, 1, 2, 0, 0, 1, 1, 1]);
        assert_eq!(w.compact().as_deref(), Some("0121200111"));
        assert_eq!(Word::parse("0121200111").unwrap(), w);
        assert_eq!(Word::new(vec![-1, 2]).compact(), None);
        assert_eq!(Word::new(vec![10]).compact(), None);
        // A lone digit parses as one letter either way.
        assert_eq!(Word::parse("7").unwrap(), Word::new(vec![7]));
        // A lone signed integer is one letter, not digits.
        assert_eq!(Word::parse("-12").unwrap(), Word::new(vec![-12]));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Word::parse("").is_err());
        assert!(Word::parse("  ").is_err());
        assert!(Word::parse("1 x 2").is_err());
        assert!(Word::parse("--3").is_err());
    }

    #[test]
    fn hamming_counts_differing_positions() {
        let v = Word::parse("0211221100").unwrap();
        let w = Word::parse("0211211100").unwrap();
        assert_eq!(hamming(&v, &w).unwrap(), 1);
        assert_eq!(hamming(&v, &v).unwrap(), 0);
        assert!(matches!(
            hamming(&v, &Word::new(vec![1])),
            Err(Error::UnequalLengths { left: 10, right: 1 })
        ));
    }

    #[test]
    fn run_decompose_splits_on_sign_changes() {
        let w = Word::parse("1 1 0 0 -2").unwrap();
        let d = run_decompose(&w).unwrap();
        assert_eq!(
            d.runs(),
            &[
                Run { sign: Sign::Positive, start: 0, len: 2 },
                Run { sign: Sign::Zero, start: 2, len: 2 },
                Run { sign: Sign::Negative, start: 4, len: 1 },
            ]
        );
        assert!(matches!(run_decompose(&Word::empty()), Err(Error::EmptyWord)));
    }

    #[test]
    fn run_decompose_single_run() {
        let w = Word::new(vec![3, 1, 2]);
        let d = run_decompose(&w).unwrap();
        assert_eq!(d.runs(), &[Run { sign: Sign::Positive, start: 0, len: 3 }]);
    }

    proptest! {
        #[test]
        fn runs_tile_the_word_exactly(letters in proptest::collection::vec(-3i32..=3, 1..40)) {
            let w = Word::new(letters.clone());
            let d = run_decompose(&w).unwrap();
            // Tiling: runs are contiguous, cover everything, in order.
            let mut pos = 0usize;
            for r in d.runs() {
                prop_assert_eq!(r.start, pos);
                prop_assert!(r.len >= 1);
                for i in r.start..r.start + r.len {
                    prop_assert_eq!(sign_of(letters[i]), r.sign);
                }
                pos += r.len;
            }
            prop_assert_eq!(pos, letters.len());
            // Maximality: adjacent runs differ in sign class.
            for pair in d.runs().windows(2) {
                prop_assert_ne!(pair[0].sign, pair[1].sign);
            }
        }

        #[test]
        fn display_parse_round_trip(letters in proptest::collection::vec(-9i32..=9, 1..30)) {
            let w = Word::new(letters);
            prop_assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
        }

        #[test]
        fn hamming_is_a_metric_on_equal_lengths(
            a in proptest::collection::vec(-2i32..=2, 8),
            b in proptest::collection::vec(-2i32..=2, 8),
            c in proptest::collection::vec(-2i32..=2, 8),
        ) {
            let (a, b, c) = (Word::new(a), Word::new(b), Word::new(c));
            let ab = hamming(&a, &b).unwrap();
            let ba = hamming(&b, &a).unwrap();
            prop_assert_eq!(ab, ba);
            prop_assert_eq!(ab == 0, a == b);
            let ac = hamming(&a, &c).unwrap();
            let cb = hamming(&c, &b).unwrap();
            prop_assert!(ab <= ac + cb);
        }
    }
}
