//! The model-facing engine: one enum for the supported subshifts, with
//! budgeted language enumeration, exact counting by several methods, entropy
//! upper-bound tables, higher powers, and gap-function checks.
//!
//! Membership of a finite word always means "contains no forbidden subword".
//! Each model's words extend to legal biinfinite points — the full shift
//! trivially, the zero-gap model through all-zero padding, the run-family
//! model through constant-sign continuation — so the finite predicate and
//! the language of the subshift agree.
//!
//! Higher-power words are represented flat: a length-`n` word of the `k`-th
//! power is its `k·n`-letter spelling over the base alphabet, read as `n`
//! blocks. This keeps the block alphabet implicit (it would be `|L_k|`-ary)
//! while preserving counts and membership exactly.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::aspec::{self, AspecModel};
use crate::aws;
use crate::error::{Error, Result};
use crate::util::big_ln;
use crate::word::{Letter, SignedAlphabet, Word};

/// A subshift with decidable word membership.
#[derive(Debug, Clone)]
pub enum SubshiftModel {
    /// Every word over the alphabet is allowed.
    Full { alphabet: SignedAlphabet },
    /// The zero-gap model: `{-N,…,N}`, sign-consistent runs, logarithmic
    /// zero gaps.
    Aws { max_magnitude: u32 },
    /// The run-family model over `{-N,…,-1,1,…,N}`.
    Aspec(AspecModel),
    /// The `k`-th higher power of a base model, words spelled flat.
    HigherPower { base: Box<SubshiftModel>, k: usize },
}

/// How to count a language level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    /// Budgeted prefix-tree enumeration (counts without materializing).
    Brute,
    /// The model's exact run-structure recurrence.
    Dp,
    /// The closed-form parametrization (run-family model only).
    Formula,
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountMethod::Brute => "brute",
            CountMethod::Dp => "dp",
            CountMethod::Formula => "formula",
        })
    }
}

impl SubshiftModel {
    pub fn full(max_magnitude: u32, include_zero: bool) -> Result<Self> {
        Ok(SubshiftModel::Full {
            alphabet: SignedAlphabet::new(max_magnitude, include_zero)?,
        })
    }

    pub fn aws(max_magnitude: u32) -> Result<Self> {
        if max_magnitude == 0 {
            return Err(Error::InvalidArgument(
                "alphabet magnitude N must be at least 1".into(),
            ));
        }
        Ok(SubshiftModel::Aws { max_magnitude })
    }

    pub fn aspec(max_magnitude: u32, ell: u32) -> Result<Self> {
        Ok(SubshiftModel::Aspec(AspecModel::new(max_magnitude, ell)?))
    }

    /// Human-readable parameter summary, used in reports and error text.
    pub fn describe(&self) -> String {
        match self {
            SubshiftModel::Full { alphabet } => format!(
                "full{{N={}{}}}",
                alphabet.max_magnitude(),
                if alphabet.includes_zero() { ",zero" } else { "" }
            ),
            SubshiftModel::Aws { max_magnitude } => format!("aws{{N={max_magnitude}}}"),
            SubshiftModel::Aspec(m) => {
                format!("aspec{{N={},ell={}}}", m.max_magnitude(), m.ell())
            }
            SubshiftModel::HigherPower { base, k } => {
                format!("power{{k={k},base={}}}", base.describe())
            }
        }
    }

    /// Flat letters per word position: 1 for scalar models, the product of
    /// the `k`s for nested powers.
    pub fn block_len(&self) -> usize {
        match self {
            SubshiftModel::HigherPower { base, k } => k * base.block_len(),
            _ => 1,
        }
    }

    /// The scalar model underneath any tower of powers.
    fn root(&self) -> &SubshiftModel {
        match self {
            SubshiftModel::HigherPower { base, .. } => base.root(),
            other => other,
        }
    }

    /// The root alphabet in ascending order; enumeration extends words over
    /// these letters.
    pub fn root_letters(&self) -> Vec<Letter> {
        match self.root() {
            SubshiftModel::Full { alphabet } => alphabet.letters(),
            SubshiftModel::Aws { max_magnitude } => {
                SignedAlphabet::new(*max_magnitude, true).expect("N ≥ 1").letters()
            }
            SubshiftModel::Aspec(m) => m.alphabet().letters(),
            SubshiftModel::HigherPower { .. } => unreachable!("root is scalar"),
        }
    }

    /// Does `w` belong to the model's language? Higher powers accept exactly
    /// the base members whose flat length is a whole number of blocks.
    pub fn is_member(&self, w: &Word) -> Result<bool> {
        match self {
            SubshiftModel::Full { alphabet } => {
                alphabet.check_word(w)?;
                Ok(true)
            }
            SubshiftModel::Aws { max_magnitude } => aws::aws_is_member(*max_magnitude, w),
            SubshiftModel::Aspec(m) => aspec::aspec_is_member(m, w),
            SubshiftModel::HigherPower { .. } => {
                if w.len() % self.block_len() != 0 {
                    return Ok(false);
                }
                self.root().is_member(w)
            }
        }
    }

    /// All member words of length `n`, sorted. Each attempted one-letter
    /// extension costs one unit of `budget`.
    pub fn enumerate_language(&self, n: usize, budget: u64) -> Result<BTreeSet<Word>> {
        let mut out = BTreeSet::new();
        self.walk_language(n, budget, &mut |w| {
            out.insert(w.clone());
            Ok(())
        })?;
        Ok(out)
    }

    /// `|L_n|` by the requested method.
    pub fn count_language(&self, n: usize, method: CountMethod, budget: u64) -> Result<BigUint> {
        if n == 0 {
            return Err(Error::InvalidArgument("language levels start at n = 1".into()));
        }
        let flat = n * self.block_len();
        match (method, self.root()) {
            (CountMethod::Brute, _) => {
                let mut count: u64 = 0;
                self.walk_language(n, budget, &mut |_| {
                    count += 1;
                    Ok(())
                })?;
                Ok(BigUint::from(count))
            }
            (CountMethod::Dp, SubshiftModel::Full { alphabet }) => {
                Ok(BigUint::from(alphabet.size()).pow(flat as u32))
            }
            (CountMethod::Dp, SubshiftModel::Aws { max_magnitude }) => {
                Ok(aws::aws_count_dp(*max_magnitude, flat))
            }
            (CountMethod::Dp, SubshiftModel::Aspec(m)) => aspec::count_dp(m, flat),
            (CountMethod::Formula, SubshiftModel::Aspec(m)) => aspec::count_formula(m, flat),
            (CountMethod::Formula, _) => Err(Error::UnsupportedMethod {
                model: self.describe(),
                method: method.to_string(),
            }),
            (_, SubshiftModel::HigherPower { .. }) => unreachable!("root is scalar"),
        }
    }

    /// Counting methods meaningful for this model, cheapest-exact first.
    pub fn supported_methods(&self) -> Vec<CountMethod> {
        match self.root() {
            SubshiftModel::Aspec(_) => {
                vec![CountMethod::Dp, CountMethod::Formula, CountMethod::Brute]
            }
            _ => vec![CountMethod::Dp, CountMethod::Brute],
        }
    }

    /// Count table for `n = 1..=n_max` with per-`n` log rates.
    pub fn entropy_table(
        &self,
        n_max: usize,
        method: CountMethod,
        budget: u64,
    ) -> Result<CountTable> {
        let mut rows = Vec::with_capacity(n_max);
        for n in 1..=n_max {
            let count = self.count_language(n, method, budget)?;
            let log_rate = big_ln(&count) / n as f64;
            rows.push(CountRow {
                n,
                count,
                method,
                log_rate,
            });
        }
        Ok(CountTable { rows })
    }

    /// Depth-first walk of the language level, pruning non-member prefixes
    /// (sound because every model's language is closed under subwords).
    fn walk_language(
        &self,
        n: usize,
        budget: u64,
        visit: &mut dyn FnMut(&Word) -> Result<()>,
    ) -> Result<()> {
        if n == 0 {
            return Err(Error::InvalidArgument("language levels start at n = 1".into()));
        }
        let flat = n * self.block_len();
        let letters = self.root_letters();
        let root = self.root();
        let mut used: u64 = 0;
        let mut prefix: Vec<Letter> = Vec::with_capacity(flat);
        fn go(
            root: &SubshiftModel,
            letters: &[Letter],
            flat: usize,
            prefix: &mut Vec<Letter>,
            used: &mut u64,
            budget: u64,
            visit: &mut dyn FnMut(&Word) -> Result<()>,
        ) -> Result<()> {
            if prefix.len() == flat {
                return visit(&Word::from(&prefix[..]));
            }
            for &l in letters {
                *used += 1;
                if *used > budget {
                    return Err(Error::BudgetExceeded { budget });
                }
                prefix.push(l);
                if root.is_member(&Word::from(&prefix[..]))? {
                    go(root, letters, flat, prefix, used, budget, visit)?;
                }
                prefix.pop();
            }
            Ok(())
        }
        go(root, &letters, flat, &mut prefix, &mut used, budget, visit)
    }
}

/// Wraps a model into its `k`-th power; `k = 1` is the model itself.
pub fn higher_power(model: SubshiftModel, k: usize) -> Result<SubshiftModel> {
    match k {
        0 => Err(Error::InvalidArgument("higher powers need k ≥ 1".into())),
        1 => Ok(model),
        _ => Ok(SubshiftModel::HigherPower {
            base: Box::new(model),
            k,
        }),
    }
}

/// One entropy-table row.
#[derive(Debug, Clone, PartialEq)]
pub struct CountRow {
    pub n: usize,
    pub count: BigUint,
    pub method: CountMethod,
    /// `(1/n)·ln count`, an upper bound for the entropy at this level.
    pub log_rate: f64,
}

/// Exact counts with their log rates, `n = 1..=n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct CountTable {
    pub rows: Vec<CountRow>,
}

impl CountTable {
    /// The upper-bound column must never rise (up to float noise); exactness
    /// lives in the counts, the rates are views.
    pub fn is_rate_nonincreasing(&self) -> bool {
        self.rows
            .windows(2)
            .all(|pair| pair[1].log_rate <= pair[0].log_rate + 1e-12)
    }

    /// `|L_(m+n)| ≤ |L_m|·|L_n|` for every in-range pair, checked exactly.
    pub fn is_subadditive(&self) -> bool {
        let n_max = self.rows.len();
        for m in 1..=n_max {
            for n in m..=n_max {
                if m + n > n_max {
                    break;
                }
                let lhs = &self.rows[m + n - 1].count;
                if *lhs > &self.rows[m - 1].count * &self.rows[n - 1].count {
                    return false;
                }
            }
        }
        true
    }

    /// CSV with header `n,count,method,log_rate`; counts in full decimal.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,count,method,log_rate\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                row.n, row.count, row.method, row.log_rate
            ));
        }
        out
    }
}

/// A gap function `n ↦ f(n)` with a printable description.
#[derive(Clone)]
pub struct GapFunction {
    description: String,
    eval: Arc<dyn Fn(u64) -> u64 + Send + Sync>,
}

impl fmt::Debug for GapFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GapFunction")
            .field("description", &self.description)
            .finish_non_exhaustive()
    }
}

impl GapFunction {
    pub fn new(
        description: impl Into<String>,
        eval: impl Fn(u64) -> u64 + Send + Sync + 'static,
    ) -> Self {
        GapFunction {
            description: description.into(),
            eval: Arc::new(eval),
        }
    }

    /// The zero-gap model's gluing gap `2 + ⌈log₃ n⌉`.
    pub fn aws_log_gap() -> Self {
        Self::new("2+ceil(log3(n))", aws::gap_f)
    }

    pub fn constant(c: u64) -> Self {
        Self::new(format!("constant {c}"), move |_| c)
    }

    pub fn eval(&self, n: u64) -> u64 {
        (self.eval)(n)
    }

    pub fn description(&self) -> &str {
        &self.description
    }
}

/// Positivity/monotonicity sweep of a gap function, with the extremal
/// relative gap `f(n)/n` kept as an exact fraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapFunctionCheck {
    pub description: String,
    pub n_max: u64,
    pub positive: bool,
    pub nondecreasing: bool,
    /// `(f(n), n)` at the `n` maximizing `f(n)/n`.
    pub max_ratio: (u64, u64),
    /// Positions violating positivity or monotonicity (first 32).
    pub violations: Vec<u64>,
}

impl GapFunctionCheck {
    pub fn ok(&self) -> bool {
        self.positive && self.nondecreasing
    }

    pub fn max_ratio_f64(&self) -> f64 {
        self.max_ratio.0 as f64 / self.max_ratio.1 as f64
    }
}

/// Checks `f(n) ≥ 1` and `f(n+1) ≥ f(n)` for `n ≤ n_max` and reports the
/// largest `f(n)/n` seen, compared exactly by cross-multiplication.
pub fn check_gap_function(f: &GapFunction, n_max: u64) -> Result<GapFunctionCheck> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be at least 1".into()));
    }
    let mut positive = true;
    let mut nondecreasing = true;
    let mut violations = Vec::new();
    let mut max_ratio = (f.eval(1), 1u64);
    let mut prev = None;
    for n in 1..=n_max {
        let v = f.eval(n);
        let mut bad = false;
        if v == 0 {
            positive = false;
            bad = true;
        }
        if let Some(p) = prev {
            if v < p {
                nondecreasing = false;
                bad = true;
            }
        }
        if bad && violations.len() < 32 {
            violations.push(n);
        }
        // v/n > best ⇔ v·best_n > best_v·n, overflow-safe in u128.
        if v as u128 * max_ratio.1 as u128 > max_ratio.0 as u128 * n as u128 {
            max_ratio = (v, n);
        }
        prev = Some(v);
    }
    Ok(GapFunctionCheck {
        description: f.description().to_string(),
        n_max,
        positive,
        nondecreasing,
        max_ratio,
        violations,
    })
}
