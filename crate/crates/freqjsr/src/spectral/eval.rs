//! Depth-first search over word languages with renormalized products.
//!
//! Every family evaluates `sup` over words of a fixed length `n` of
//! `value(M_word)^(1/n)`, where the value is an induced norm or the spectral
//! radius. Products are renormalized by their row-sum norm after every factor
//! and the scale is carried in log space, so no intermediate overflows.
//!
//! Pruning cuts a subtree only when even the best-case continuation bound
//! `||prefix|| * cap^(remaining)` cannot exceed the current supremum; a
//! safety margin keeps the decision value-preserving under floating-point
//! rounding, so pruned and exhaustive searches return identical bits.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::{EvalOptions, MatrixSet, NormKind, SpectralError};
use crate::blocks::{count_bounds, IntegerBounds, Symbol, Word};
use crate::linalg::{spectral_norm_raw, spectral_radius_raw, Mat, NoConvergence};
use crate::subshift::{build_graph, cyclically_admissible, Omega, TransitionGraph, WordSource};

/// What gets evaluated at a completed word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Family {
    /// Induced norm of the product: the upper family.
    Norm(NormKind),
    /// Spectral radius of the product: the lower family.
    SpecRad,
    /// Spectral radius restricted to periodically extendable words.
    SpecRadPer,
}

/// A word source resolved against a matrix set, with the transition graph
/// prebuilt when path enumeration will be needed.
#[derive(Debug)]
pub(crate) enum CompiledSource {
    All {
        r: usize,
    },
    Markov {
        omega: Omega,
    },
    Constrained {
        bounds: IntegerBounds,
        graph: Option<TransitionGraph>,
    },
}

impl CompiledSource {
    /// Validates alphabet agreement and prepares the source for word lengths
    /// up to `max_n`.
    pub(crate) fn compile(
        src: &WordSource,
        ms: &MatrixSet,
        max_n: usize,
    ) -> Result<Self, SpectralError> {
        match src {
            WordSource::All => Ok(CompiledSource::All { r: ms.count() }),
            WordSource::Markov(omega) => {
                if omega.alphabet_size() != ms.count() {
                    return Err(SpectralError::AlphabetMismatch {
                        matrices: ms.count(),
                        alphabet: omega.alphabet_size(),
                    });
                }
                Ok(CompiledSource::Markov { omega: omega.clone() })
            }
            WordSource::Constrained(c) => {
                if c.alphabet_size() != ms.count() {
                    return Err(SpectralError::AlphabetMismatch {
                        matrices: ms.count(),
                        alphabet: c.alphabet_size(),
                    });
                }
                let graph = if max_n >= c.window() { Some(build_graph(c)) } else { None };
                Ok(CompiledSource::Constrained { bounds: count_bounds(c), graph })
            }
        }
    }
}

/// A left product of matrices, renormalized after every factor.
#[derive(Clone, Debug)]
struct ProductState {
    mat: Mat,
    log_scale: f64,
}

impl ProductState {
    fn identity(d: usize) -> Self {
        ProductState { mat: Mat::identity(d), log_scale: 0.0 }
    }

    /// Prepends a factor: the state for `M * product`.
    fn push(&self, m: &Mat) -> Self {
        let prod = m.mul(&self.mat);
        let norm = prod.row_sum_norm();
        if norm > 0.0 {
            let mut mat = prod;
            mat.scale_mut(1.0 / norm);
            ProductState { mat, log_scale: self.log_scale + norm.ln() }
        } else {
            // The zero product absorbs everything after it.
            ProductState { mat: prod, log_scale: self.log_scale }
        }
    }

    /// `(scale * inner)^(1/n)` computed in log space.
    fn root_value(&self, inner: f64, n: usize) -> f64 {
        if inner <= 0.0 {
            0.0
        } else {
            ((self.log_scale + inner.ln()) / n as f64).exp()
        }
    }
}

/// Upper bound on the `kind`-norm of the normalized matrix, cheap enough to
/// evaluate at every search node.
fn prefix_norm_bound(mat: &Mat, kind: NormKind) -> f64 {
    match kind {
        NormKind::RowSum => mat.row_sum_norm(),
        NormKind::ColSum => mat.col_sum_norm(),
        // The spectral norm never exceeds the geometric mean of the two.
        NormKind::Spectral => (mat.row_sum_norm() * mat.col_sum_norm()).sqrt(),
    }
}

fn exact_norm(mat: &Mat, kind: NormKind) -> Result<f64, NoConvergence> {
    match kind {
        NormKind::RowSum => Ok(mat.row_sum_norm()),
        NormKind::ColSum => Ok(mat.col_sum_norm()),
        NormKind::Spectral => spectral_norm_raw(mat),
    }
}

struct Search<'m> {
    ms: &'m MatrixSet,
    n: usize,
    family: Family,
    prune: bool,
    /// Norm kind used for prefix bounds: the family norm for the upper
    /// family, row-sum otherwise (the spectral radius never exceeds it).
    bound_kind: NormKind,
    /// `ln(max_i ||M_i||_bound_kind)`.
    ln_cap: f64,
    sup: f64,
    witness: Option<Vec<Symbol>>,
}

impl<'m> Search<'m> {
    fn new(
        ms: &'m MatrixSet,
        n: usize,
        family: Family,
        opts: EvalOptions,
    ) -> Result<Self, SpectralError> {
        let bound_kind = match family {
            Family::Norm(kind) => kind,
            Family::SpecRad | Family::SpecRadPer => NormKind::RowSum,
        };
        let mut cap = 0.0f64;
        for m in ms.matrices() {
            cap = cap.max(exact_norm(m, bound_kind).map_err(|_| SpectralError::NoConvergence)?);
        }
        let ln_cap = if cap > 0.0 { cap.ln() } else { f64::NEG_INFINITY };
        Ok(Search {
            ms,
            n,
            family,
            prune: opts.prune,
            bound_kind,
            ln_cap,
            sup: 0.0,
            witness: None,
        })
    }

    /// Records a completed word. `periodic` reports whether the word closes
    /// periodically in its source; only the periodic family consults it.
    fn leaf(
        &mut self,
        word: &[Symbol],
        state: &ProductState,
        periodic: bool,
    ) -> Result<(), NoConvergence> {
        let value = match self.family {
            Family::Norm(kind) => state.root_value(exact_norm(&state.mat, kind)?, self.n),
            Family::SpecRad => state.root_value(spectral_radius_raw(&state.mat)?, self.n),
            Family::SpecRadPer => {
                if !periodic {
                    return Ok(());
                }
                state.root_value(spectral_radius_raw(&state.mat)?, self.n)
            }
        };
        // First attained value wins ties: the witness stays lexicographically
        // least because the search is in lexicographic order.
        if self.witness.is_none() || value > self.sup {
            self.sup = value;
            self.witness = Some(word.to_vec());
        }
        Ok(())
    }

    /// Whether the subtree below a prefix of length `depth` can still beat
    /// the current supremum.
    fn should_explore(&self, state: &ProductState, depth: usize) -> bool {
        if !self.prune || self.witness.is_none() {
            return true;
        }
        let prefix = prefix_norm_bound(&state.mat, self.bound_kind);
        if prefix <= 0.0 {
            // Zero product: every continuation evaluates to 0 <= sup.
            return false;
        }
        let remaining = (self.n - depth) as f64;
        let bound_log = state.log_scale + prefix.ln() + remaining * self.ln_cap;
        let bound = (bound_log / self.n as f64).exp();
        // The margin absorbs rounding so pruning never changes the result.
        bound * (1.0 + 1e-9) >= self.sup
    }
}

/// `sup` of the family value over all length-`n` words of the source,
/// together with the lexicographically least witness attaining it.
/// Returns `(0.0, None)` when the source has no words of length `n`.
pub(crate) fn sup_word_values(
    ms: &MatrixSet,
    src: &CompiledSource,
    n: usize,
    family: Family,
    opts: EvalOptions,
) -> Result<(f64, Option<Word>), SpectralError> {
    debug_assert!(n >= 1);
    let mut search = Search::new(ms, n, family, opts)?;
    let mut word: Vec<Symbol> = Vec::with_capacity(n);
    let state = ProductState::identity(ms.dim());
    let run = match src {
        CompiledSource::All { r } => dfs_all(&mut search, *r, &mut word, &state),
        CompiledSource::Markov { omega } => dfs_markov(&mut search, omega, &mut word, &state),
        CompiledSource::Constrained { bounds, graph } => {
            if n >= bounds.window() {
                let graph = graph.as_ref().expect("graph prepared for n >= window");
                dfs_graph_starts(&mut search, graph, bounds, &mut word)
            } else {
                let mut counts = alloc::vec![0usize; bounds.alphabet_size()];
                dfs_short(&mut search, bounds, &mut word, &mut counts, &state)
            }
        }
    };
    run.map_err(|_| SpectralError::NoConvergence)?;
    Ok((search.sup, search.witness.map(Word::new)))
}

fn dfs_all(
    search: &mut Search,
    r: usize,
    word: &mut Vec<Symbol>,
    state: &ProductState,
) -> Result<(), NoConvergence> {
    for s in 1..=r {
        let next = state.push(search.ms.matrix(s));
        word.push(s);
        if word.len() == search.n {
            search.leaf(word, &next, true)?;
        } else if search.should_explore(&next, word.len()) {
            dfs_all(search, r, word, &next)?;
        }
        word.pop();
    }
    Ok(())
}

fn dfs_markov(
    search: &mut Search,
    omega: &Omega,
    word: &mut Vec<Symbol>,
    state: &ProductState,
) -> Result<(), NoConvergence> {
    let r = omega.alphabet_size();
    let prev = word.last().copied();
    for s in 1..=r {
        if let Some(prev) = prev {
            if !omega.allows(prev, s) {
                continue;
            }
        }
        let next = state.push(search.ms.matrix(s));
        word.push(s);
        if word.len() == search.n {
            // Membership requires the final symbol to admit a successor.
            if omega.extendable(s) {
                let periodic = omega.closes(word[0], s);
                search.leaf(word, &next, periodic)?;
            }
        } else if search.should_explore(&next, word.len()) {
            dfs_markov(search, omega, word, &next)?;
        }
        word.pop();
    }
    Ok(())
}

/// Constrained words of length `n >= ell`: an admissible block followed by
/// graph transitions.
fn dfs_graph_starts(
    search: &mut Search,
    graph: &TransitionGraph,
    bounds: &IntegerBounds,
    word: &mut Vec<Symbol>,
) -> Result<(), NoConvergence> {
    for start in 0..graph.node_count() {
        let block = graph.node(start);
        let mut state = ProductState::identity(search.ms.dim());
        word.clear();
        for &s in block.symbols() {
            state = state.push(search.ms.matrix(s));
            word.push(s);
        }
        if word.len() == search.n {
            let periodic = needs_periodic(search) && cyclically_admissible(word, bounds);
            search.leaf(word, &state, periodic)?;
        } else if search.should_explore(&state, word.len()) {
            dfs_graph_walk(search, graph, bounds, start, word, &state)?;
        }
    }
    word.clear();
    Ok(())
}

fn dfs_graph_walk(
    search: &mut Search,
    graph: &TransitionGraph,
    bounds: &IntegerBounds,
    node: usize,
    word: &mut Vec<Symbol>,
    state: &ProductState,
) -> Result<(), NoConvergence> {
    for &target in graph.successors(node) {
        let s = *graph.node(target).symbols().last().expect("window >= 1");
        let next = state.push(search.ms.matrix(s));
        word.push(s);
        if word.len() == search.n {
            let periodic = needs_periodic(search) && cyclically_admissible(word, bounds);
            search.leaf(word, &next, periodic)?;
        } else if search.should_explore(&next, word.len()) {
            dfs_graph_walk(search, graph, bounds, target, word, &next)?;
        }
        word.pop();
    }
    Ok(())
}

/// Constrained words shorter than the window: completable prefixes.
fn dfs_short(
    search: &mut Search,
    bounds: &IntegerBounds,
    word: &mut Vec<Symbol>,
    counts: &mut [usize],
    state: &ProductState,
) -> Result<(), NoConvergence> {
    let r = bounds.alphabet_size();
    for s in 1..=r {
        counts[s - 1] += 1;
        if bounds.prefix_feasible(counts, word.len() + 1) {
            let next = state.push(search.ms.matrix(s));
            word.push(s);
            if word.len() == search.n {
                let periodic = needs_periodic(search) && cyclically_admissible(word, bounds);
                search.leaf(word, &next, periodic)?;
            } else if search.should_explore(&next, word.len()) {
                dfs_short(search, bounds, word, counts, &next)?;
            }
            word.pop();
        }
        counts[s - 1] -= 1;
    }
    Ok(())
}

/// The cyclic admissibility test is only worth running for the periodic
/// family.
fn needs_periodic(search: &Search) -> bool {
    matches!(search.family, Family::SpecRadPer)
}

/// `rho(M_{s_k} ... M_{s_1})^(1/k)` with the same renormalization as the
/// word search; used for exact cycle values.
pub(crate) fn product_rho_root(ms: &MatrixSet, symbols: &[Symbol]) -> Result<f64, SpectralError> {
    debug_assert!(!symbols.is_empty());
    let mut state = ProductState::identity(ms.dim());
    for &s in symbols {
        state = state.push(ms.matrix(s));
    }
    let rho = spectral_radius_raw(&state.mat).map_err(|_| SpectralError::NoConvergence)?;
    Ok(state.root_value(rho, symbols.len()))
}
