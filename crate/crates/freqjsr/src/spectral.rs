//! Joint and generalized spectral radius bounds for matrix products whose
//! factor indices run over a word source.
//!
//! For a set of matrices and a source of index words, three families are
//! computed per word length `n`:
//!
//! - `rho_n`: sup of `||M_word||^(1/n)` — upper bounds for the joint radius;
//! - `rho_hat_n`: sup of `rho(M_word)^(1/n)` — lower bounds;
//! - `rho_hat_per_n`: the same sup restricted to periodically extendable
//!   words — norm-free lower bounds that converge to the joint radius.
//!
//! An empty word set at some length contributes the value 0.
//! Products are ordered `M_{w_n} * ... * M_{w_1}`: later symbols multiply on
//! the left.

mod eval;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[allow(unused_imports)]
use num_traits::Float;

use crate::blocks::{
    check_nonempty, classify_rigidity, FrequencyConstraint, RigidityClass, Symbol, Word,
};
use crate::linalg::{spectral_norm_raw, spectral_radius_raw, Mat};
use crate::subshift::{build_graph, Omega, TransitionGraph, WordSource};

use eval::{sup_word_values, CompiledSource, Family};

/// Error from spectral-radius operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpectralError {
    /// A matrix contains a NaN or infinite entry.
    InvalidMatrix,
    /// The matrix set is empty.
    EmptySet,
    /// Matrices in a set have different dimensions.
    DimensionMismatch { expected: usize, got: usize },
    /// The word-source alphabet does not match the number of matrices.
    AlphabetMismatch { matrices: usize, alphabet: usize },
    /// The constraint admits no blocks.
    EmptyConstraint,
    /// A word length of zero was requested.
    InvalidLength,
    /// The eigenvalue iteration failed to converge.
    NoConvergence,
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::InvalidMatrix => write!(f, "matrix has non-finite entries"),
            SpectralError::EmptySet => write!(f, "matrix set must be non-empty"),
            SpectralError::DimensionMismatch { expected, got } => {
                write!(f, "matrix of dimension {got} in a set of dimension {expected}")
            }
            SpectralError::AlphabetMismatch { matrices, alphabet } => {
                write!(f, "{matrices} matrices but alphabet of size {alphabet}")
            }
            SpectralError::EmptyConstraint => write!(f, "constraint admits no blocks"),
            SpectralError::InvalidLength => write!(f, "word length must be >= 1"),
            SpectralError::NoConvergence => write!(f, "eigenvalue iteration did not converge"),
        }
    }
}

impl core::error::Error for SpectralError {}

/// An ordered set of `r` square real matrices, one per alphabet symbol.
#[derive(Clone, Debug)]
pub struct MatrixSet {
    d: usize,
    mats: Vec<Mat>,
}

impl MatrixSet {
    pub fn new(mats: Vec<Mat>) -> Result<Self, SpectralError> {
        let d = match mats.first() {
            None => return Err(SpectralError::EmptySet),
            Some(m) => m.dim(),
        };
        for m in &mats {
            if m.dim() != d {
                return Err(SpectralError::DimensionMismatch { expected: d, got: m.dim() });
            }
            if !m.is_finite() {
                return Err(SpectralError::InvalidMatrix);
            }
        }
        Ok(MatrixSet { d, mats })
    }

    /// Matrix dimension.
    pub fn dim(&self) -> usize {
        self.d
    }

    /// Number of matrices, equal to the alphabet size of any paired source.
    pub fn count(&self) -> usize {
        self.mats.len()
    }

    /// Matrix for a 1-based symbol.
    pub fn matrix(&self, s: Symbol) -> &Mat {
        &self.mats[s - 1]
    }

    pub fn matrices(&self) -> &[Mat] {
        &self.mats
    }

    /// Every matrix multiplied by `c`.
    pub fn scaled(&self, c: f64) -> MatrixSet {
        MatrixSet { d: self.d, mats: self.mats.iter().map(|m| m.scaled(c)).collect() }
    }
}

/// Sub-multiplicative operator norms available for the upper family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum NormKind {
    /// Induced infinity norm: maximum absolute row sum.
    #[default]
    RowSum,
    /// Induced 1-norm: maximum absolute column sum.
    ColSum,
    /// Induced 2-norm: largest singular value.
    Spectral,
}

impl fmt::Display for NormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormKind::RowSum => write!(f, "rowsum"),
            NormKind::ColSum => write!(f, "colsum"),
            NormKind::Spectral => write!(f, "spectral"),
        }
    }
}

/// Search options for the radius evaluations.
#[derive(Clone, Copy, Debug)]
pub struct EvalOptions {
    /// Cut subtrees whose best-case continuation cannot beat the current
    /// supremum. Disabling this re-runs the search exhaustively; both modes
    /// return identical values.
    pub prune: bool,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { prune: true }
    }
}

/// Modulus of the dominant eigenvalue.
pub fn spectral_radius(m: &Mat) -> Result<f64, SpectralError> {
    if !m.is_finite() {
        return Err(SpectralError::InvalidMatrix);
    }
    spectral_radius_raw(m).map_err(|_| SpectralError::NoConvergence)
}

/// Induced operator norm of the requested kind.
pub fn operator_norm(m: &Mat, kind: NormKind) -> Result<f64, SpectralError> {
    if !m.is_finite() {
        return Err(SpectralError::InvalidMatrix);
    }
    match kind {
        NormKind::RowSum => Ok(m.row_sum_norm()),
        NormKind::ColSum => Ok(m.col_sum_norm()),
        NormKind::Spectral => spectral_norm_raw(m).map_err(|_| SpectralError::NoConvergence),
    }
}

/// `sup ||M_word||^(1/n)` over the length-`n` words of the source.
pub fn rho_n(ms: &MatrixSet, src: &WordSource, n: usize, kind: NormKind) -> Result<f64, SpectralError> {
    rho_n_opts(ms, src, n, kind, EvalOptions::default())
}

pub fn rho_n_opts(
    ms: &MatrixSet,
    src: &WordSource,
    n: usize,
    kind: NormKind,
    opts: EvalOptions,
) -> Result<f64, SpectralError> {
    if n == 0 {
        return Err(SpectralError::InvalidLength);
    }
    let compiled = CompiledSource::compile(src, ms, n)?;
    Ok(sup_word_values(ms, &compiled, n, Family::Norm(kind), opts)?.0)
}

/// `sup rho(M_word)^(1/n)` over the length-`n` words of the source.
pub fn rho_hat_n(ms: &MatrixSet, src: &WordSource, n: usize) -> Result<f64, SpectralError> {
    rho_hat_n_opts(ms, src, n, EvalOptions::default())
}

pub fn rho_hat_n_opts(
    ms: &MatrixSet,
    src: &WordSource,
    n: usize,
    opts: EvalOptions,
) -> Result<f64, SpectralError> {
    if n == 0 {
        return Err(SpectralError::InvalidLength);
    }
    let compiled = CompiledSource::compile(src, ms, n)?;
    Ok(sup_word_values(ms, &compiled, n, Family::SpecRad, opts)?.0)
}

/// `sup rho(M_word)^(1/n)` restricted to periodically extendable words.
pub fn rho_hat_per_n(ms: &MatrixSet, src: &WordSource, n: usize) -> Result<f64, SpectralError> {
    rho_hat_per_n_opts(ms, src, n, EvalOptions::default())
}

pub fn rho_hat_per_n_opts(
    ms: &MatrixSet,
    src: &WordSource,
    n: usize,
    opts: EvalOptions,
) -> Result<f64, SpectralError> {
    if n == 0 {
        return Err(SpectralError::InvalidLength);
    }
    let compiled = CompiledSource::compile(src, ms, n)?;
    Ok(sup_word_values(ms, &compiled, n, Family::SpecRadPer, opts)?.0)
}

/// Per-length record of the three families.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BracketRow {
    pub n: usize,
    /// Periodic lower family `rho_hat_per_n`.
    pub lower_per: f64,
    /// Lower family `rho_hat_n`.
    pub lower: f64,
    /// Upper family `rho_n` in the requested norm.
    pub upper: f64,
}

/// Two-sided bounds on the radius collected over `n = 1..=n_max`.
///
/// Only the periodic family enters `best_lower`: a periodically extendable
/// word can be repeated, so its value stays below the radius at every
/// length, whereas a plain admissible word of length `n` need not extend to
/// one of length `2n` and `rho_hat_n` can overshoot the radius (and even the
/// running upper bound). The plain family is still reported per row.
#[derive(Clone, Debug)]
pub struct RadiusBracket {
    pub rows: Vec<BracketRow>,
    /// Largest periodic lower value seen.
    pub best_lower: f64,
    /// Smallest upper-family value seen.
    pub best_upper: f64,
    /// `best_upper - best_lower`.
    pub gap: f64,
}

/// Evaluates all three families for `n = 1..=n_max` and keeps the running
/// best two-sided bracket.
pub fn bracket(
    ms: &MatrixSet,
    src: &WordSource,
    n_max: usize,
    kind: NormKind,
) -> Result<RadiusBracket, SpectralError> {
    bracket_opts(ms, src, n_max, kind, EvalOptions::default())
}

pub fn bracket_opts(
    ms: &MatrixSet,
    src: &WordSource,
    n_max: usize,
    kind: NormKind,
    opts: EvalOptions,
) -> Result<RadiusBracket, SpectralError> {
    if n_max == 0 {
        return Err(SpectralError::InvalidLength);
    }
    let compiled = CompiledSource::compile(src, ms, n_max)?;
    let mut rows = Vec::with_capacity(n_max);
    let mut best_lower = 0.0f64;
    let mut best_upper = f64::INFINITY;
    for n in 1..=n_max {
        let lower_per = sup_word_values(ms, &compiled, n, Family::SpecRadPer, opts)?.0;
        let lower = sup_word_values(ms, &compiled, n, Family::SpecRad, opts)?.0;
        let upper = sup_word_values(ms, &compiled, n, Family::Norm(kind), opts)?.0;
        best_lower = best_lower.max(lower_per);
        best_upper = best_upper.min(upper);
        rows.push(BracketRow { n, lower_per, lower, upper });
    }
    Ok(RadiusBracket { rows, best_lower, best_upper, gap: best_upper - best_lower })
}

/// One-step re-encoding of the constrained language over the block alphabet.
///
/// Blocks become symbols; the transition relation is the block graph; the
/// edge into a block carries the matrix of that block's last symbol, so a
/// path of `k` edges reproduces the last `k` factors of the spelled word
/// (the first `window - 1` factors are absorbed into the start block).
#[derive(Clone, Debug)]
pub struct MarkovLift {
    r: usize,
    graph: TransitionGraph,
}

impl MarkovLift {
    /// Size of the block alphabet.
    pub fn block_count(&self) -> usize {
        self.graph.node_count()
    }

    pub fn graph(&self) -> &TransitionGraph {
        &self.graph
    }

    /// Block adjacency: `omega[u][v] = 1` iff block `u` transitions to `v`.
    pub fn omega(&self) -> Vec<Vec<u8>> {
        self.graph.adjacency()
    }

    /// Original-alphabet symbol carried by every edge into `target`: the last
    /// symbol of the target block.
    pub fn edge_symbol(&self, target: usize) -> Symbol {
        *self.graph.node(target).symbols().last().expect("window >= 1")
    }

    /// Matrix per block symbol: `M` of the block's last symbol.
    pub fn matrix_set(&self, ms: &MatrixSet) -> Result<MatrixSet, SpectralError> {
        if ms.count() != self.r {
            return Err(SpectralError::AlphabetMismatch {
                matrices: ms.count(),
                alphabet: self.r,
            });
        }
        MatrixSet::new(
            (0..self.block_count())
                .map(|b| ms.matrix(self.edge_symbol(b)).clone())
                .collect(),
        )
    }

    /// The lift as a Markov word source over the block alphabet, oriented for
    /// left products: entry `(next, current)` of the source matrix allows the
    /// transition `current -> next`.
    pub fn word_source(&self) -> WordSource {
        let adj = self.graph.adjacency();
        let b = self.block_count();
        let mut rows = vec![vec![0u8; b]; b];
        for (u, adj_row) in adj.iter().enumerate() {
            for (v, &bit) in adj_row.iter().enumerate() {
                rows[v][u] = bit;
            }
        }
        WordSource::Markov(Omega::new(rows).expect("adjacency is square and binary"))
    }
}

/// Builds the block-alphabet lift of a non-empty constraint.
pub fn build_markov_lift(c: &FrequencyConstraint) -> Result<MarkovLift, SpectralError> {
    if !check_nonempty(c).nonempty {
        return Err(SpectralError::EmptyConstraint);
    }
    Ok(MarkovLift { r: c.alphabet_size(), graph: build_graph(c) })
}

/// For a forced-periodic constraint the language is a finite union of cycles
/// and the constrained joint spectral radius is attained on one of them:
/// returns `max` over graph cycles of `rho(cycle product)^(1/length)`.
/// Returns `None` for branching constraints.
pub fn exact_radius_if_forced_periodic(
    ms: &MatrixSet,
    c: &FrequencyConstraint,
) -> Result<Option<f64>, SpectralError> {
    if c.alphabet_size() != ms.count() {
        return Err(SpectralError::AlphabetMismatch {
            matrices: ms.count(),
            alphabet: c.alphabet_size(),
        });
    }
    match classify_rigidity(c) {
        RigidityClass::Empty => Err(SpectralError::EmptyConstraint),
        RigidityClass::Branching => Ok(None),
        RigidityClass::ForcedPeriodic(_) => {
            let graph = build_graph(c);
            let node_count = graph.node_count();
            let mut visited = vec![false; node_count];
            let mut best = 0.0f64;
            for start in 0..node_count {
                if visited[start] {
                    continue;
                }
                // The forced count vector makes the successor unique, so the
                // graph is a permutation and the walk returns to its start.
                debug_assert_eq!(graph.successors(start).len(), 1);
                let mut walk: Vec<usize> = Vec::new();
                let mut node = start;
                loop {
                    if visited[node] {
                        break;
                    }
                    visited[node] = true;
                    walk.push(node);
                    match graph.successors(node).first() {
                        Some(&next) => node = next,
                        None => break,
                    }
                }
                if let Some(at) = walk.iter().position(|&v| v == node) {
                    let cycle = &walk[at..];
                    let symbols: Vec<Symbol> = (0..cycle.len())
                        .map(|i| {
                            let target = cycle[(i + 1) % cycle.len()];
                            *graph.node(target).symbols().last().expect("window >= 1")
                        })
                        .collect();
                    best = best.max(eval::product_rho_root(ms, &symbols)?);
                }
            }
            Ok(Some(best))
        }
    }
}

/// Per-length record for the gap report: both lower families and the upper
/// family under all three norms.
#[derive(Clone, Debug, PartialEq)]
pub struct GapRow {
    pub n: usize,
    pub lower_per: f64,
    pub lower: f64,
    pub upper_row_sum: f64,
    pub upper_col_sum: f64,
    pub upper_spectral: f64,
}

impl GapRow {
    pub fn min_upper(&self) -> f64 {
        self.upper_row_sum.min(self.upper_col_sum).min(self.upper_spectral)
    }
}

/// Result of the two-sided radius verification.
///
/// `best_lower` is the running maximum of the norm-free periodic family,
/// `best_upper` the running minimum of the norm family over all three norms;
/// the two converge to the same limit, so the gap shrinks as `n_max` grows.
/// The per-length series is exposed as is; `best_lower` is its running
/// maximum, with no claim that the limsup is attained at any finite length.
#[derive(Clone, Debug)]
pub struct GapReport {
    pub rows: Vec<GapRow>,
    pub best_lower: f64,
    pub best_upper: f64,
    pub gap: f64,
    /// Lexicographically least word attaining `best_lower`, from the smallest
    /// length that attains it. `None` when no word of any length exists.
    pub witness: Option<Word>,
    /// Ordering violations beyond the 1e-9 slack; always empty unless the
    /// implementation itself is inconsistent.
    pub violations: Vec<String>,
}

impl GapReport {
    pub fn chain_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

const CHAIN_SLACK: f64 = 1e-9;

/// Runs both bound families over `n = 1..=n_max` under every norm, checks the
/// ordering `rho_hat_per_n <= rho_hat_n <= rho_n` and the nesting of the
/// running bracket, and reports the best two-sided gap.
pub fn verify_berger_wang(
    ms: &MatrixSet,
    src: &WordSource,
    n_max: usize,
) -> Result<GapReport, SpectralError> {
    if n_max == 0 {
        return Err(SpectralError::InvalidLength);
    }
    let compiled = CompiledSource::compile(src, ms, n_max)?;
    let opts = EvalOptions::default();
    let mut rows = Vec::with_capacity(n_max);
    let mut violations = Vec::new();
    let mut best_lower = 0.0f64;
    let mut best_upper = f64::INFINITY;
    let mut witness: Option<Word> = None;
    for n in 1..=n_max {
        let (lower_per, per_witness) =
            sup_word_values(ms, &compiled, n, Family::SpecRadPer, opts)?;
        let lower = sup_word_values(ms, &compiled, n, Family::SpecRad, opts)?.0;
        let upper_row_sum =
            sup_word_values(ms, &compiled, n, Family::Norm(NormKind::RowSum), opts)?.0;
        let upper_col_sum =
            sup_word_values(ms, &compiled, n, Family::Norm(NormKind::ColSum), opts)?.0;
        let upper_spectral =
            sup_word_values(ms, &compiled, n, Family::Norm(NormKind::Spectral), opts)?.0;

        if lower_per > lower + CHAIN_SLACK {
            violations.push(format!(
                "n={n}: periodic lower bound {lower_per} exceeds rho_hat {lower}"
            ));
        }
        for (name, upper) in [
            ("rowsum", upper_row_sum),
            ("colsum", upper_col_sum),
            ("spectral", upper_spectral),
        ] {
            if lower > upper + CHAIN_SLACK {
                violations.push(format!("n={n}: rho_hat {lower} exceeds rho_n[{name}] {upper}"));
            }
        }

        if per_witness.is_some() && (witness.is_none() || lower_per > best_lower) {
            witness = per_witness;
        }
        best_lower = best_lower.max(lower_per);
        best_upper = best_upper
            .min(upper_row_sum)
            .min(upper_col_sum)
            .min(upper_spectral);
        if best_lower > best_upper + CHAIN_SLACK {
            violations.push(format!(
                "n={n}: running bracket inverted: lower {best_lower} above upper {best_upper}"
            ));
        }
        rows.push(GapRow { n, lower_per, lower, upper_row_sum, upper_col_sum, upper_spectral });
    }
    Ok(GapReport {
        rows,
        best_lower,
        best_upper,
        gap: best_upper - best_lower,
        witness,
        violations,
    })
}
