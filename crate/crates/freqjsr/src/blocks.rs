//! Admissible-block combinatorics.
//!
//! [`FrequencyConstraint`] holds the exact rational frequency brackets. All
//! decisions reduce to the integer occurrence bounds `lo_i = ceil(p_lower_i *
//! ell)` and `hi_i = floor(p_upper_i * ell)`; those are computed once with
//! exact rational arithmetic and everything downstream is pure integer work.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// A symbol of the alphabet `{1..r}`.
pub type Symbol = usize;

/// A finite sequence of symbols.
///
/// Symbols are 1-based; the container itself does not know the alphabet size,
/// so operations that need one validate the range themselves. Ordering is
/// lexicographic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn from_slice(symbols: &[Symbol]) -> Self {
        Word(symbols.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    /// Occurrence count per symbol, or an error if a symbol falls outside
    /// `1..=r`.
    pub fn counts(&self, r: usize) -> Result<Vec<usize>, BlockError> {
        counts_checked(&self.0, r)
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    /// Symbols joined without separators, e.g. `2123332331`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

pub(crate) fn counts_checked(symbols: &[Symbol], r: usize) -> Result<Vec<usize>, BlockError> {
    let mut counts = vec![0usize; r];
    for &s in symbols {
        if s == 0 || s > r {
            return Err(BlockError::SymbolOutOfRange { symbol: s, alphabet: r });
        }
        counts[s - 1] += 1;
    }
    Ok(counts)
}

/// Error from word-level operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockError {
    /// The word does not have the length required by the operation.
    WrongLength { expected: usize, got: usize },
    /// A symbol lies outside `1..=r`.
    SymbolOutOfRange { symbol: Symbol, alphabet: usize },
    /// The operation requires a non-empty word.
    EmptyWord,
}

impl fmt::Display for BlockError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockError::WrongLength { expected, got } => {
                write!(f, "word has length {got}, expected {expected}")
            }
            BlockError::SymbolOutOfRange { symbol, alphabet } => {
                write!(f, "symbol {symbol} outside alphabet 1..={alphabet}")
            }
            BlockError::EmptyWord => write!(f, "word must be non-empty"),
        }
    }
}

impl core::error::Error for BlockError {}

/// Error from [`FrequencyConstraint`] construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstraintError {
    /// Alphabet size must be at least 1.
    EmptyAlphabet,
    /// Window length must be at least 1.
    ZeroWindow,
    /// A bound vector does not have `r` entries.
    WrongArity { expected: usize, got: usize },
    /// Some bound lies outside `[0, 1]`.
    BoundOutOfRange { index: usize },
    /// `p_lower_i < p_upper_i` violated.
    BoundsNotOrdered { index: usize },
    /// A target frequency does not lie strictly between its bounds.
    TargetOutsideBounds { index: usize },
}

impl fmt::Display for ConstraintError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintError::EmptyAlphabet => write!(f, "alphabet size must be >= 1"),
            ConstraintError::ZeroWindow => write!(f, "window length must be >= 1"),
            ConstraintError::WrongArity { expected, got } => {
                write!(f, "expected {expected} bounds, got {got}")
            }
            ConstraintError::BoundOutOfRange { index } => {
                write!(f, "bound for symbol {} outside [0, 1]", index + 1)
            }
            ConstraintError::BoundsNotOrdered { index } => {
                write!(f, "lower bound not below upper bound for symbol {}", index + 1)
            }
            ConstraintError::TargetOutsideBounds { index } => {
                write!(
                    f,
                    "target frequency for symbol {} not strictly inside its bounds",
                    index + 1
                )
            }
        }
    }
}

impl core::error::Error for ConstraintError {}

/// Sliding-window frequency constraint: alphabet size `r`, window length
/// `ell`, and exact rational brackets `0 <= lower_i < upper_i <= 1`.
///
/// The optional target frequencies are documentation only; no computation
/// reads them beyond construction-time validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrequencyConstraint {
    r: usize,
    ell: usize,
    lower: Vec<BigRational>,
    upper: Vec<BigRational>,
    target: Option<Vec<BigRational>>,
}

impl FrequencyConstraint {
    pub fn new(
        r: usize,
        ell: usize,
        lower: Vec<BigRational>,
        upper: Vec<BigRational>,
    ) -> Result<Self, ConstraintError> {
        Self::with_target(r, ell, lower, upper, None)
    }

    pub fn with_target(
        r: usize,
        ell: usize,
        lower: Vec<BigRational>,
        upper: Vec<BigRational>,
        target: Option<Vec<BigRational>>,
    ) -> Result<Self, ConstraintError> {
        if r == 0 {
            return Err(ConstraintError::EmptyAlphabet);
        }
        if ell == 0 {
            return Err(ConstraintError::ZeroWindow);
        }
        if lower.len() != r {
            return Err(ConstraintError::WrongArity { expected: r, got: lower.len() });
        }
        if upper.len() != r {
            return Err(ConstraintError::WrongArity { expected: r, got: upper.len() });
        }
        let zero = BigRational::zero();
        let one = BigRational::one();
        for i in 0..r {
            if lower[i] < zero || upper[i] > one {
                return Err(ConstraintError::BoundOutOfRange { index: i });
            }
            if lower[i] >= upper[i] {
                return Err(ConstraintError::BoundsNotOrdered { index: i });
            }
        }
        if let Some(t) = &target {
            if t.len() != r {
                return Err(ConstraintError::WrongArity { expected: r, got: t.len() });
            }
            for i in 0..r {
                if t[i] <= lower[i] || t[i] >= upper[i] {
                    return Err(ConstraintError::TargetOutsideBounds { index: i });
                }
            }
        }
        Ok(FrequencyConstraint { r, ell, lower, upper, target })
    }

    /// The constraint with `lower = 0` and `upper = 1` everywhere: every word
    /// over `{1..r}` is admissible.
    pub fn vacuous(r: usize, ell: usize) -> Self {
        FrequencyConstraint::new(
            r,
            ell,
            vec![BigRational::zero(); r],
            vec![BigRational::one(); r],
        )
        .expect("vacuous bounds are always valid")
    }

    pub fn alphabet_size(&self) -> usize {
        self.r
    }

    pub fn window(&self) -> usize {
        self.ell
    }

    pub fn lower(&self) -> &[BigRational] {
        &self.lower
    }

    pub fn upper(&self) -> &[BigRational] {
        &self.upper
    }

    pub fn target(&self) -> Option<&[BigRational]> {
        self.target.as_deref()
    }
}

/// Integer occurrence bounds `lo_i = ceil(p_lower_i * ell)`,
/// `hi_i = floor(p_upper_i * ell)`.
///
/// `lo_i > hi_i` is possible (the bracket is too narrow for symbol `i`); in
/// that case no block is admissible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerBounds {
    ell: usize,
    lo: Vec<usize>,
    hi: Vec<usize>,
}

impl IntegerBounds {
    pub fn lo(&self) -> &[usize] {
        &self.lo
    }

    pub fn hi(&self) -> &[usize] {
        &self.hi
    }

    pub fn alphabet_size(&self) -> usize {
        self.lo.len()
    }

    pub fn window(&self) -> usize {
        self.ell
    }

    pub fn sum_lo(&self) -> usize {
        self.lo.iter().sum()
    }

    pub fn sum_hi(&self) -> usize {
        self.hi.iter().sum()
    }

    /// True iff a count vector sits inside the per-symbol box.
    pub(crate) fn admits_counts(&self, counts: &[usize]) -> bool {
        counts
            .iter()
            .zip(self.lo.iter().zip(&self.hi))
            .all(|(&k, (&lo, &hi))| lo <= k && k <= hi)
    }

    /// Decides whether a prefix with the given symbol counts and length can
    /// be completed to an admissible block: for every symbol the remaining
    /// budget interval must be non-empty and the remaining length must fit
    /// between the summed minima and maxima.
    pub(crate) fn prefix_feasible(&self, counts: &[usize], len: usize) -> bool {
        debug_assert!(len <= self.ell);
        let remaining = self.ell - len;
        let mut need = 0usize;
        let mut capacity = 0usize;
        for ((&count, &lo), &hi) in counts.iter().zip(&self.lo).zip(&self.hi) {
            if count > hi {
                return false;
            }
            let min_extra = lo.saturating_sub(count);
            let max_extra = hi - count;
            if min_extra > max_extra {
                return false;
            }
            need += min_extra;
            capacity += max_extra;
        }
        need <= remaining && remaining <= capacity
    }
}

fn exact_scaled_bound(p: &BigRational, ell: usize, round_up: bool) -> usize {
    let scaled = p * BigRational::from_integer(BigInt::from(ell));
    let bound = if round_up { scaled.ceil() } else { scaled.floor() };
    bound
        .to_integer()
        .to_usize()
        .expect("bounds in [0, 1] scale into 0..=ell")
}

/// Integer occurrence bounds of a constraint, computed with exact rational
/// ceiling/floor.
pub fn count_bounds(c: &FrequencyConstraint) -> IntegerBounds {
    IntegerBounds {
        ell: c.ell,
        lo: c.lower.iter().map(|p| exact_scaled_bound(p, c.ell, true)).collect(),
        hi: c.upper.iter().map(|p| exact_scaled_bound(p, c.ell, false)).collect(),
    }
}

/// Outcome of the two non-emptiness conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonEmptyReport {
    /// Per-symbol verdicts of `lo_i <= hi_i`.
    pub per_symbol_ok: Vec<bool>,
    /// Verdict of `sum(lo) <= ell <= sum(hi)`.
    pub sum_ok: bool,
    pub sum_lo: usize,
    pub sum_hi: usize,
    /// Conjunction of both conditions: some admissible block exists.
    pub nonempty: bool,
}

impl NonEmptyReport {
    /// Indices (1-based) where the per-symbol condition fails.
    pub fn failing_symbols(&self) -> Vec<usize> {
        self.per_symbol_ok
            .iter()
            .enumerate()
            .filter(|(_, ok)| !**ok)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// Decides whether any admissible block exists: per symbol `lo_i <= hi_i`,
/// and the bounds must admit a total of exactly `ell` occurrences.
pub fn check_nonempty(c: &FrequencyConstraint) -> NonEmptyReport {
    let bounds = count_bounds(c);
    nonempty_report(&bounds)
}

pub(crate) fn nonempty_report(bounds: &IntegerBounds) -> NonEmptyReport {
    let per_symbol_ok: Vec<bool> = bounds
        .lo
        .iter()
        .zip(&bounds.hi)
        .map(|(&lo, &hi)| lo <= hi)
        .collect();
    let sum_lo = bounds.sum_lo();
    let sum_hi = bounds.sum_hi();
    let sum_ok = sum_lo <= bounds.ell && bounds.ell <= sum_hi;
    let nonempty = sum_ok && per_symbol_ok.iter().all(|&b| b);
    NonEmptyReport { per_symbol_ok, sum_ok, sum_lo, sum_hi, nonempty }
}

/// Why a constraint forces all infinite admissible sequences to be periodic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForcedPeriodicReason {
    /// `sum(lo) = ell` or `sum(hi) = ell`: every block carries the same count
    /// vector because a boundary sum is saturated.
    SumSaturated,
    /// `sum(lo) < ell < sum(hi)` but at most one symbol has `lo_i < hi_i`,
    /// which again pins the count vector.
    SingleSlack,
}

/// Trichotomy of a constraint: no admissible blocks at all, all infinite
/// admissible sequences periodic with period `ell`, or genuinely branching.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RigidityClass {
    Empty,
    ForcedPeriodic(ForcedPeriodicReason),
    Branching,
}

impl fmt::Display for RigidityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RigidityClass::Empty => write!(f, "empty"),
            RigidityClass::ForcedPeriodic(ForcedPeriodicReason::SumSaturated) => {
                write!(f, "forced-periodic (saturated bound sum)")
            }
            RigidityClass::ForcedPeriodic(ForcedPeriodicReason::SingleSlack) => {
                write!(f, "forced-periodic (at most one free symbol)")
            }
            RigidityClass::Branching => write!(f, "branching"),
        }
    }
}

/// Classifies a constraint into exactly one of the three rigidity classes.
///
/// Given non-emptiness the classes are exhaustive and mutually exclusive:
/// if neither bound sum saturates then `sum(lo) < ell < sum(hi)`, which
/// forces at least one strict gap `lo_i < hi_i`; one gap pins the count
/// vector, two or more leave room to trade occurrences between symbols.
pub fn classify_rigidity(c: &FrequencyConstraint) -> RigidityClass {
    let bounds = count_bounds(c);
    classify_from_bounds(&bounds)
}

pub(crate) fn classify_from_bounds(bounds: &IntegerBounds) -> RigidityClass {
    let report = nonempty_report(bounds);
    if !report.nonempty {
        return RigidityClass::Empty;
    }
    if report.sum_lo == bounds.ell || report.sum_hi == bounds.ell {
        return RigidityClass::ForcedPeriodic(ForcedPeriodicReason::SumSaturated);
    }
    let strict_gaps = bounds
        .lo
        .iter()
        .zip(&bounds.hi)
        .filter(|(&lo, &hi)| lo < hi)
        .count();
    if strict_gaps <= 1 {
        RigidityClass::ForcedPeriodic(ForcedPeriodicReason::SingleSlack)
    } else {
        RigidityClass::Branching
    }
}

/// Tests a single block: length must be exactly `ell`, and every symbol
/// count must sit in its integer bracket.
pub fn is_admissible_block(w: &Word, c: &FrequencyConstraint) -> Result<bool, BlockError> {
    if w.len() != c.ell {
        return Err(BlockError::WrongLength { expected: c.ell, got: w.len() });
    }
    let counts = w.counts(c.r)?;
    Ok(count_bounds(c).admits_counts(&counts))
}

/// All integer vectors `(k_1..k_r)` with `lo_i <= k_i <= hi_i` and
/// `sum(k) = ell`, in lexicographic order.
pub fn admissible_count_vectors(c: &FrequencyConstraint) -> Vec<Vec<usize>> {
    let bounds = count_bounds(c);
    admissible_count_vectors_from(&bounds)
}

pub(crate) fn admissible_count_vectors_from(bounds: &IntegerBounds) -> Vec<Vec<usize>> {
    let r = bounds.lo.len();
    // Suffix sums let each position enumerate only completable values.
    let mut suffix_lo = vec![0usize; r + 1];
    let mut suffix_hi = vec![0usize; r + 1];
    for i in (0..r).rev() {
        suffix_lo[i] = suffix_lo[i + 1] + bounds.lo[i];
        suffix_hi[i] = suffix_hi[i + 1] + bounds.hi[i];
    }
    let mut out = Vec::new();
    let mut current = vec![0usize; r];
    fn recurse(
        bounds: &IntegerBounds,
        suffix_lo: &[usize],
        suffix_hi: &[usize],
        i: usize,
        remaining: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let r = bounds.lo.len();
        if i == r {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        let min_k = bounds.lo[i].max(remaining.saturating_sub(suffix_hi[i + 1]));
        let max_k = bounds.hi[i].min(remaining.saturating_sub(suffix_lo[i + 1]));
        let mut k = min_k;
        while k <= max_k {
            current[i] = k;
            recurse(bounds, suffix_lo, suffix_hi, i + 1, remaining - k, current, out);
            k += 1;
        }
        current[i] = 0;
    }
    recurse(bounds, &suffix_lo, &suffix_hi, 0, bounds.ell, &mut current, &mut out);
    out
}

/// All admissible blocks in lexicographic order.
pub fn enumerate_blocks(c: &FrequencyConstraint) -> Vec<Word> {
    let bounds = count_bounds(c);
    let mut out = Vec::new();
    let mut counts = vec![0usize; c.r];
    let mut word: Vec<Symbol> = Vec::with_capacity(c.ell);
    fn recurse(
        bounds: &IntegerBounds,
        r: usize,
        counts: &mut Vec<usize>,
        word: &mut Vec<Symbol>,
        out: &mut Vec<Word>,
    ) {
        if word.len() == bounds.ell {
            out.push(Word::from_slice(word));
            return;
        }
        for s in 1..=r {
            counts[s - 1] += 1;
            if bounds.prefix_feasible(counts, word.len() + 1) {
                word.push(s);
                recurse(bounds, r, counts, word, out);
                word.pop();
            }
            counts[s - 1] -= 1;
        }
    }
    if bounds.prefix_feasible(&counts, 0) {
        recurse(&bounds, c.r, &mut counts, &mut word, &mut out);
    }
    out
}

/// Number of admissible blocks, as the sum of multinomial coefficients over
/// the admissible count vectors. Agrees with `enumerate_blocks(c).len()` but
/// never materializes the blocks.
pub fn count_blocks(c: &FrequencyConstraint) -> BigUint {
    let mut total = BigUint::zero();
    for counts in admissible_count_vectors(c) {
        total += multinomial(c.ell, &counts);
    }
    total
}

fn multinomial(n: usize, parts: &[usize]) -> BigUint {
    debug_assert_eq!(parts.iter().sum::<usize>(), n);
    let mut result = BigUint::one();
    let mut taken = 0usize;
    for &k in parts {
        // result *= C(taken + k, k)
        for j in 1..=k {
            result = result * BigUint::from(taken + j) / BigUint::from(j);
        }
        taken += k;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;
    use alloc::string::ToString;

    pub(crate) fn constraint(r: usize, ell: usize, lower: &[&str], upper: &[&str]) -> FrequencyConstraint {
        FrequencyConstraint::new(
            r,
            ell,
            lower.iter().map(|s| parse_rational(s).unwrap()).collect(),
            upper.iter().map(|s| parse_rational(s).unwrap()).collect(),
        )
        .unwrap()
    }

    /// r=3, ell=10, p = (0.23, 0.33, 0.44) with a +-0.1 bracket.
    pub(crate) fn wide_bracket() -> FrequencyConstraint {
        constraint(3, 10, &["0.13", "0.23", "0.34"], &["0.33", "0.43", "0.54"])
    }

    /// Same p with a +-0.01 bracket: per-symbol condition fails everywhere.
    pub(crate) fn narrow_bracket() -> FrequencyConstraint {
        constraint(3, 10, &["0.22", "0.32", "0.43"], &["0.24", "0.34", "0.45"])
    }

    /// Same p with a +-0.05 bracket: per-symbol condition holds, sum fails.
    pub(crate) fn medium_bracket() -> FrequencyConstraint {
        constraint(3, 10, &["0.18", "0.28", "0.39"], &["0.28", "0.38", "0.49"])
    }

    /// r=2, ell=2 balanced bounds 0.4/0.6: only the alternating words.
    pub(crate) fn balanced_pair() -> FrequencyConstraint {
        constraint(2, 2, &["0.4", "0.4"], &["0.6", "0.6"])
    }

    #[test]
    fn count_bounds_wide() {
        let b = count_bounds(&wide_bracket());
        assert_eq!(b.lo(), &[2, 3, 4]);
        assert_eq!(b.hi(), &[3, 4, 5]);
    }

    #[test]
    fn count_bounds_narrow() {
        let b = count_bounds(&narrow_bracket());
        assert_eq!(b.lo(), &[3, 4, 5]);
        assert_eq!(b.hi(), &[2, 3, 4]);
    }

    #[test]
    fn count_bounds_vacuous() {
        let c = constraint(2, 5, &["0", "0"], &["1", "1"]);
        let b = count_bounds(&c);
        assert_eq!(b.lo(), &[0, 0]);
        assert_eq!(b.hi(), &[5, 5]);
    }

    #[test]
    fn count_bounds_integer_boundary() {
        // Exact integer products must not be perturbed: ceil(0.3*10) = 3.
        let c = constraint(2, 10, &["0.3", "0.1"], &["0.7", "0.9"]);
        let b = count_bounds(&c);
        assert_eq!(b.lo(), &[3, 1]);
        assert_eq!(b.hi(), &[7, 9]);
    }

    #[test]
    fn admissibility_examples() {
        let c = wide_bracket();
        let w = Word::from_slice(&[2, 1, 2, 3, 3, 3, 2, 3, 3, 1]);
        assert!(is_admissible_block(&w, &c).unwrap());
        let mono = Word::from_slice(&[1; 10]);
        assert!(!is_admissible_block(&mono, &c).unwrap());
        // Narrow brackets admit nothing of length 10.
        let c = narrow_bracket();
        assert!(!is_admissible_block(&w, &c).unwrap());
        assert!(!is_admissible_block(&mono, &c).unwrap());
    }

    #[test]
    fn admissibility_errors() {
        let c = wide_bracket();
        let short = Word::from_slice(&[1, 2, 3]);
        assert_eq!(
            is_admissible_block(&short, &c),
            Err(BlockError::WrongLength { expected: 10, got: 3 })
        );
        let bad = Word::from_slice(&[1, 2, 3, 4, 1, 2, 3, 1, 2, 3]);
        assert_eq!(
            is_admissible_block(&bad, &c),
            Err(BlockError::SymbolOutOfRange { symbol: 4, alphabet: 3 })
        );
    }

    #[test]
    fn nonempty_report_cases() {
        let report = check_nonempty(&wide_bracket());
        assert!(report.nonempty);
        assert_eq!((report.sum_lo, report.sum_hi), (9, 12));

        let report = check_nonempty(&narrow_bracket());
        assert!(!report.nonempty);
        assert_eq!(report.failing_symbols(), vec![1, 2, 3]);

        let report = check_nonempty(&medium_bracket());
        assert!(!report.nonempty);
        assert!(report.per_symbol_ok.iter().all(|&b| b));
        assert!(!report.sum_ok);
        assert_eq!(report.sum_hi, 9);
    }

    #[test]
    fn rigidity_cases() {
        // lo = (2,2), sum = 4 = ell.
        let c = constraint(2, 4, &["0.4", "0.4"], &["0.6", "0.6"]);
        assert_eq!(
            classify_rigidity(&c),
            RigidityClass::ForcedPeriodic(ForcedPeriodicReason::SumSaturated)
        );
        assert_eq!(classify_rigidity(&wide_bracket()), RigidityClass::Branching);
        assert_eq!(classify_rigidity(&narrow_bracket()), RigidityClass::Empty);
        // Single slack: lo = (1,0), hi = (1,2), ell = 2.
        let c = constraint(2, 2, &["0.5", "0"], &["0.7", "1"]);
        assert_eq!(
            classify_rigidity(&c),
            RigidityClass::ForcedPeriodic(ForcedPeriodicReason::SingleSlack)
        );
    }

    #[test]
    fn count_vectors() {
        assert_eq!(
            admissible_count_vectors(&wide_bracket()),
            vec![vec![2, 3, 5], vec![2, 4, 4], vec![3, 3, 4]]
        );
        assert!(admissible_count_vectors(&medium_bracket()).is_empty());
        let c = constraint(1, 3, &["0"], &["1"]);
        assert_eq!(admissible_count_vectors(&c), vec![vec![3]]);
    }

    #[test]
    fn blocks_balanced_pair() {
        let blocks = enumerate_blocks(&balanced_pair());
        assert_eq!(blocks, vec![Word::from_slice(&[1, 2]), Word::from_slice(&[2, 1])]);
    }

    #[test]
    fn blocks_match_multinomial_count() {
        assert_eq!(count_blocks(&wide_bracket()).to_string(), "9870");
        assert_eq!(enumerate_blocks(&wide_bracket()).len(), 9870);
        assert!(enumerate_blocks(&narrow_bracket()).is_empty());
    }

    #[test]
    fn blocks_sorted_and_admissible() {
        let c = wide_bracket();
        let blocks = enumerate_blocks(&c);
        for pair in blocks.windows(2) {
            assert!(pair[0] < pair[1]);
        }
        for b in blocks.iter().take(100) {
            assert!(is_admissible_block(b, &c).unwrap());
        }
    }

    #[test]
    fn degenerate_sizes() {
        let c = constraint(1, 1, &["0"], &["1"]);
        assert_eq!(enumerate_blocks(&c), vec![Word::from_slice(&[1])]);
        assert_eq!(classify_rigidity(&c), RigidityClass::ForcedPeriodic(ForcedPeriodicReason::SumSaturated));

        let c = constraint(3, 1, &["0", "0", "0"], &["1", "1", "1"]);
        assert_eq!(enumerate_blocks(&c).len(), 3);
    }

    #[test]
    fn constructor_validation() {
        let half = parse_rational("0.5").unwrap();
        let one = parse_rational("1").unwrap();
        assert_eq!(
            FrequencyConstraint::new(0, 1, vec![], vec![]),
            Err(ConstraintError::EmptyAlphabet)
        );
        assert_eq!(
            FrequencyConstraint::new(1, 0, vec![half.clone()], vec![one.clone()]),
            Err(ConstraintError::ZeroWindow)
        );
        assert_eq!(
            FrequencyConstraint::new(2, 2, vec![half.clone()], vec![one.clone(), one.clone()]),
            Err(ConstraintError::WrongArity { expected: 2, got: 1 })
        );
        assert_eq!(
            FrequencyConstraint::new(1, 2, vec![one.clone()], vec![half.clone()]),
            Err(ConstraintError::BoundsNotOrdered { index: 0 })
        );
        assert_eq!(
            FrequencyConstraint::new(1, 2, vec![-half.clone()], vec![half.clone()]),
            Err(ConstraintError::BoundOutOfRange { index: 0 })
        );
        // Target must be strict.
        assert_eq!(
            FrequencyConstraint::with_target(
                1,
                2,
                vec![BigRational::zero()],
                vec![one.clone()],
                Some(vec![one.clone()]),
            ),
            Err(ConstraintError::TargetOutsideBounds { index: 0 })
        );
        assert!(FrequencyConstraint::with_target(
            1,
            2,
            vec![BigRational::zero()],
            vec![one.clone()],
            Some(vec![half]),
        )
        .is_ok());
    }

    #[test]
    fn word_display() {
        assert_eq!(Word::from_slice(&[1, 2, 3]).to_string(), "123");
        assert_eq!(Word::new(vec![]).to_string(), "");
    }
}
