//! The zero-gap subshift over `{-N,…,N}`: sign-consistent nonzero runs
//! separated by zero runs whose lengths grow logarithmically with the run
//! they follow. Words of this language glue into longer ones across
//! all-zero spacers of length `gap_f(n) = 2 + ⌈log₃ n⌉`, and the higher-power
//! gap inequality drives that gap function below any prescribed `C·log₃ n`.
//!
//! Three families of forbidden words define the language:
//!
//! * (a) adjacent letters with a negative product;
//! * (b) `i 0 j` with `i·j < 0`;
//! * (c) `v₁…v_j 0^m v_{j+1}` with every `v` nonzero and `m < 2 + log₃ j`,
//!   decided exactly as: forbidden iff `m < 2`, or `m ≥ 2` and `3^(m-2) < j`.
//!
//! Membership has two equivalent readings, both implemented: a literal
//! subword scan over the three families, and a run-decomposition form (every
//! interior zero run must be long enough for the *whole* maximal nonzero run
//! before it — the binding case of (c)). Their agreement is a tested
//! invariant, not an assumption.
//!
//! `N` is a free parameter here. Entropy equality `h = ln N` is asserted
//! nowhere: it needs alphabet sizes far beyond desk scale, while everything
//! in this module is exact at any `N`.

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

use crate::error::{Error, Result};
use crate::word::{run_decompose, sign_of, Letter, Sign, SignedAlphabet, Word};

/// Is `3^t ≥ x`? Exact for every input; the power saturates rather than
/// wrapping.
fn pow3_ge(t: usize, x: u64) -> bool {
    let mut pow: u64 = 1;
    for _ in 0..t {
        if pow >= x {
            return true;
        }
        pow = pow.saturating_mul(3);
    }
    pow >= x
}

/// The gluing gap function `f(n) = 2 + ⌈log₃ n⌉`, i.e. `2` plus the smallest
/// `t ≥ 0` with `3^t ≥ n`. Defined for `n ≥ 1`.
pub fn gap_f(n: u64) -> u64 {
    assert!(n >= 1, "gap function is defined for n ≥ 1");
    let mut t = 0u64;
    let mut pow: u64 = 1;
    while pow < n {
        t += 1;
        pow = pow.saturating_mul(3);
    }
    2 + t
}

fn check_letters(max_magnitude: u32, w: &Word) -> Result<()> {
    SignedAlphabet::new(max_magnitude, true)?.check_word(w)
}

/// Membership via run decomposition: maximal nonzero runs may never touch,
/// and each interior zero run of length `m` after a nonzero run of length `L`
/// needs `m ≥ 2` and `3^(m-2) ≥ L`. Leading and trailing zero runs are free.
pub fn aws_is_member(max_magnitude: u32, w: &Word) -> Result<bool> {
    check_letters(max_magnitude, w)?;
    if w.is_empty() {
        return Ok(true);
    }
    let decomposition = run_decompose(w)?;
    let runs = decomposition.runs();
    for (i, run) in runs.iter().enumerate() {
        if run.sign == Sign::Zero {
            if i == 0 || i + 1 == runs.len() {
                continue;
            }
            let m = run.len;
            let preceding = runs[i - 1].len;
            if m < 2 || !pow3_ge(m - 2, preceding as u64) {
                return Ok(false);
            }
        } else if i + 1 < runs.len() && runs[i + 1].sign != Sign::Zero {
            // Maximal runs alternate sign class, so a nonzero neighbor run
            // necessarily has the opposite sign: family (a).
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership by literal subword scan over the three forbidden families.
///
/// Family (c) is applied to every all-nonzero block before a zero run,
/// mixed signs included — such blocks only occur in words already killed by
/// family (a), which is what makes this scan and [`aws_is_member`] agree.
pub fn aws_is_member_scan(max_magnitude: u32, w: &Word) -> Result<bool> {
    check_letters(max_magnitude, w)?;
    let l = w.letters();
    let negative_product = |x: Letter, y: Letter| (x as i64) * (y as i64) < 0;
    for p in 1..l.len() {
        if negative_product(l[p - 1], l[p]) {
            return Ok(false);
        }
    }
    for p in 2..l.len() {
        if l[p - 1] == 0 && negative_product(l[p - 2], l[p]) {
            return Ok(false);
        }
    }
    // Family (c): locate each maximal zero block 0^m with nonzero letters on
    // both sides, then test every nonzero block v₁…v_j ending just before it.
    let mut z = 0usize;
    while z < l.len() {
        if l[z] != 0 {
            z += 1;
            continue;
        }
        let mut end = z;
        while end < l.len() && l[end] == 0 {
            end += 1;
        }
        let m = end - z;
        if z > 0 && end < l.len() {
            let mut j = 0usize;
            while j < z && l[z - 1 - j] != 0 {
                j += 1;
                if m < 2 || !pow3_ge(m - 2, j as u64) {
                    return Ok(false);
                }
            }
        }
        z = end;
    }
    Ok(true)
}

/// Zero-filled concatenation `w⁽⁰⁾ 0^(g₀) w⁽¹⁾ … 0^(g_(k-2)) w⁽ᵏ⁻¹⁾`.
///
/// Takes `k ≥ 2` member words and `k-1` gaps with `gaps[i] ≥ gap_f(|wᵢ|)`;
/// membership of the result is the point of the construction and is
/// re-verified at runtime.
pub fn glue(max_magnitude: u32, words: &[Word], gaps: &[u64]) -> Result<Word> {
    if words.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "gluing needs at least 2 words, got {}",
            words.len()
        )));
    }
    if gaps.len() != words.len() - 1 {
        return Err(Error::InvalidArgument(format!(
            "{} words need {} gaps, got {}",
            words.len(),
            words.len() - 1,
            gaps.len()
        )));
    }
    for (index, w) in words.iter().enumerate() {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        if !aws_is_member(max_magnitude, w)? {
            return Err(Error::NonMemberInput { index });
        }
    }
    for (index, (&gap, w)) in gaps.iter().zip(words).enumerate() {
        let required = gap_f(w.len() as u64);
        if gap < required {
            return Err(Error::GapTooSmall {
                index,
                gap,
                required,
            });
        }
    }
    let total: usize = words.iter().map(Word::len).sum::<usize>()
        + gaps
            .iter()
            .map(|&g| usize::try_from(g))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidArgument("gap too large to materialize".into()))?
            .iter()
            .sum::<usize>();
    let mut letters = Vec::with_capacity(total);
    for (i, w) in words.iter().enumerate() {
        if i > 0 {
            letters.resize(letters.len() + gaps[i - 1] as usize, 0);
        }
        letters.extend_from_slice(w.letters());
    }
    let out = Word::new(letters);
    assert!(
        aws_is_member(max_magnitude, &out)?,
        "glued word fell outside the language; the gap bound argument is broken"
    );
    Ok(out)
}

/// Outcome of the exact higher-power gap sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HpGapCheck {
    pub c_num: u64,
    pub c_den: u64,
    /// `k = ⌈8/C⌉`.
    pub k: u64,
    pub n_max: u64,
    /// Every `n` where the inequality failed (expected empty).
    pub violations: Vec<u64>,
    /// Largest left-hand side seen over the sweep.
    pub max_lhs: u64,
}

impl HpGapCheck {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies `⌈(2 + ⌈log₃(k·n)⌉)/k⌉ ≤ max(1, ⌈C·log₃ n⌉)` for all
/// `1 ≤ n ≤ n_max`, with `C = c_num/c_den > 0` and `k = ⌈8/C⌉`.
///
/// `⌈C·log₃ n⌉` is the smallest `t ≥ 0` with `3^(c_den·t) ≥ n^(c_num)`, so
/// both sides are decided by integer powering; no floating point anywhere.
/// Both thresholds move monotonically as `n` sweeps upward, which keeps the
/// whole pass incremental.
pub fn hp_gap_inequality_check(c_num: u64, c_den: u64, n_max: u64) -> Result<HpGapCheck> {
    if c_num == 0 || c_den == 0 {
        return Err(Error::InvalidArgument("C must be a positive rational".into()));
    }
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be at least 1".into()));
    }
    if c_num > 4096 || c_den > 4096 {
        return Err(Error::InvalidArgument(
            "C numerator and denominator are capped at 4096".into(),
        ));
    }
    // k = ⌈8/C⌉ = ⌈8·c_den / c_num⌉.
    let k = (8 * c_den).div_ceil(c_num);
    let pow3_den = BigUint::from(3u32).pow(c_den as u32);
    // Left side: t_left is the smallest t with 3^t ≥ k·n.
    let mut t_left: u64 = 0;
    let mut pow_left: u128 = 1;
    // Right side: t_right is the smallest t with 3^(c_den·t) ≥ n^(c_num).
    let mut t_right: u64 = 0;
    let mut threshold = BigUint::one();
    let mut violations = Vec::new();
    let mut max_lhs = 0u64;
    for n in 1..=n_max {
        let kn = k as u128 * n as u128;
        while pow_left < kn {
            t_left += 1;
            pow_left = pow_left.saturating_mul(3);
        }
        let n_pow = BigUint::from(n).pow(c_num as u32);
        while threshold < n_pow {
            t_right += 1;
            threshold *= &pow3_den;
        }
        let lhs = (2 + t_left).div_ceil(k);
        let rhs = t_right.max(1);
        max_lhs = max_lhs.max(lhs);
        if lhs > rhs && violations.len() < 32 {
            violations.push(n);
        }
    }
    Ok(HpGapCheck {
        c_num,
        c_den,
        k,
        n_max,
        violations,
        max_lhs,
    })
}

/// Exact `|L_n|` for the alphabet magnitude `N`, by a run-composition
/// recurrence in `O(n²)` big-integer operations.
///
/// Every word splits as `[zeros] R₁ Z₁ R₂ Z₂ … R_t [zeros]` with nonzero
/// maximal runs `R` and interior zero runs `Z`. A run of length `L`
/// contributes `2·N^L` (one sign, free magnitudes), and an interior zero run
/// of length `m` after a run of length `L` is admissible iff `m ≥ 2` and
/// `3^(m-2) ≥ L`. The tables below count the stripped (no leading/trailing
/// zeros) words by length and final-run length:
///
/// * `P[j][c]`: stripped words of length `j` whose final run has length ≤ `c`;
/// * `H[i]`: words of length `i` formed by a stripped word plus one complete
///   admissible zero run at the end.
///
/// Reattaching free boundary zeros gives
/// `|L_n| = 1 + Σ_j (n-j+1)·P[j][j]`.
pub fn aws_count_dp(max_magnitude: u32, n: usize) -> BigUint {
    let zero = BigUint::default();
    if n == 0 {
        return BigUint::one();
    }
    let mut pow_n = Vec::with_capacity(n + 1);
    pow_n.push(BigUint::one());
    for l in 1..=n {
        pow_n.push(&pow_n[l - 1] * max_magnitude);
    }
    let two = BigUint::from(2u32);
    // p[j] has entries for c = 0..=j.
    let mut p: Vec<Vec<BigUint>> = Vec::with_capacity(n + 1);
    p.push(vec![zero.clone()]);
    let mut h: Vec<BigUint> = vec![zero.clone(), zero.clone()];
    for j in 1..=n {
        if j >= 2 {
            // One admissible zero run of length m completes a stripped word
            // of length j - m whose final run is capped by 3^(m-2).
            let mut total = zero.clone();
            for m in 2..j {
                let rest = j - m;
                let mut cap = rest;
                if !pow3_ge(m - 2, rest as u64) {
                    // 3^(m-2) < rest, so the exact power fits in u64.
                    cap = 3usize.pow((m - 2) as u32);
                }
                total += &p[rest][cap];
            }
            h.push(total);
        }
        let mut row = Vec::with_capacity(j + 1);
        row.push(zero.clone());
        for len in 1..=j {
            // New final run of length `len` follows either nothing or a
            // completed zero run.
            let mut ways = if len == j { BigUint::one() } else { zero.clone() };
            ways += &h[j - len];
            let c_val = &two * &pow_n[len] * ways;
            let prev = row[len - 1].clone();
            row.push(prev + c_val);
        }
        p.push(row);
    }
    let mut total = BigUint::one();
    for j in 1..=n {
        total += BigUint::from(n - j + 1) * &p[j][j];
    }
    total
}

/// Draws a member word of the requested length, one letter at a time,
/// uniformly over the valid extensions at each step (a hitting distribution
/// over the language, not the uniform one — every member word has positive
/// probability).
pub fn sample_member<R: Rng>(max_magnitude: u32, len: usize, rng: &mut R) -> Word {
    let n = max_magnitude as Letter;
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    let mut seen_nonzero = false;
    let mut last_sign = Sign::Zero;
    let mut last_run = 0usize;
    let mut trailing_zeros = 0usize;
    let mut candidates: Vec<Letter> = Vec::with_capacity(2 * n as usize + 1);
    for _ in 0..len {
        candidates.clear();
        candidates.push(0);
        for mag in 1..=n {
            for l in [mag, -mag] {
                let valid = if !seen_nonzero {
                    true
                } else if trailing_zeros == 0 {
                    sign_of(l) == last_sign
                } else {
                    trailing_zeros >= 2 && pow3_ge(trailing_zeros - 2, last_run as u64)
                };
                if valid {
                    candidates.push(l);
                }
            }
        }
        let l = candidates[rng.gen_range(0..candidates.len())];
        if l == 0 {
            trailing_zeros += 1;
        } else {
            if !seen_nonzero || trailing_zeros > 0 {
                last_run = 1;
            } else {
                last_run += 1;
            }
            seen_nonzero = true;
            last_sign = sign_of(l);
            trailing_zeros = 0;
        }
        letters.push(l);
    }
    let w = Word::new(letters);
    debug_assert!(aws_is_member(max_magnitude, &w).unwrap());
    w
}
