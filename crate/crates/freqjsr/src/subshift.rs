//! The block transition graph and the constrained word language.
//!
//! Admissible blocks become graph nodes; an edge `u -> v` exists when `v` is
//! `u` with its first symbol dropped and one new symbol appended, both blocks
//! admissible. Words of length `n >= ell` are exactly the paths of `n - ell`
//! edges; shorter words are the prefixes completable to a block.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::blocks::{
    check_nonempty, count_bounds, enumerate_blocks, BlockError, FrequencyConstraint,
    IntegerBounds, Symbol, Word,
};

/// Error from word-language operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubshiftError {
    /// The requested length is below the minimum the operation supports.
    UnsupportedLength { n: usize, min: usize },
    /// The constraint admits no blocks at all.
    EmptyConstraint,
    /// No admissible extension exists (possible only when some block has no
    /// successor; never for a non-empty constraint, where the cyclic rotation
    /// of a block is always a successor).
    DeadEnd,
}

impl fmt::Display for SubshiftError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubshiftError::UnsupportedLength { n, min } => {
                write!(f, "length {n} unsupported, need at least {min}")
            }
            SubshiftError::EmptyConstraint => write!(f, "constraint admits no blocks"),
            SubshiftError::DeadEnd => write!(f, "no admissible extension exists"),
        }
    }
}

impl core::error::Error for SubshiftError {}

/// Transition graph over admissible blocks.
///
/// Nodes are stored in lexicographic order; successor lists are ascending by
/// node index, which coincides with ascending appended symbol.
#[derive(Clone, Debug)]
pub struct TransitionGraph {
    r: usize,
    ell: usize,
    nodes: Vec<Word>,
    succ: Vec<Vec<usize>>,
}

impl TransitionGraph {
    pub fn alphabet_size(&self) -> usize {
        self.r
    }

    pub fn window(&self) -> usize {
        self.ell
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn nodes(&self) -> &[Word] {
        &self.nodes
    }

    pub fn node(&self, index: usize) -> &Word {
        &self.nodes[index]
    }

    pub fn successors(&self, index: usize) -> &[usize] {
        &self.succ[index]
    }

    /// Ordinal of a block among the nodes, if admissible.
    pub fn node_index(&self, block: &Word) -> Option<usize> {
        self.nodes.binary_search(block).ok()
    }

    /// Nodes with no outgoing edge. Always empty for graphs built from a
    /// constraint (rotating a block yields an admissible successor), but
    /// callers must not assume that for arbitrary graphs.
    pub fn dead_ends(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| self.succ[i].is_empty()).collect()
    }

    /// Adjacency as 0/1 rows: `rows[u][v] = 1` iff the edge `u -> v` exists.
    pub fn adjacency(&self) -> Vec<Vec<u8>> {
        let n = self.nodes.len();
        let mut rows = vec![vec![0u8; n]; n];
        for (u, succs) in self.succ.iter().enumerate() {
            for &v in succs {
                rows[u][v] = 1;
            }
        }
        rows
    }
}

/// Builds the transition graph of a constraint. An empty constraint yields
/// the empty graph.
pub fn build_graph(c: &FrequencyConstraint) -> TransitionGraph {
    let nodes = enumerate_blocks(c);
    let ell = c.window();
    let r = c.alphabet_size();
    let mut succ = Vec::with_capacity(nodes.len());
    let mut candidate: Vec<Symbol> = Vec::with_capacity(ell);
    for u in &nodes {
        let mut list = Vec::new();
        candidate.clear();
        candidate.extend_from_slice(&u.symbols()[1..]);
        candidate.push(0);
        for s in 1..=r {
            *candidate.last_mut().expect("ell >= 1") = s;
            let word = Word::from_slice(&candidate);
            if let Ok(v) = nodes.binary_search(&word) {
                list.push(v);
            }
        }
        succ.push(list);
    }
    TransitionGraph { r, ell, nodes, succ }
}

/// Source of index words for matrix products.
#[derive(Clone, Debug)]
pub enum WordSource {
    /// Every word over the alphabet.
    All,
    /// Words admitted by a 0/1 transition matrix.
    Markov(Omega),
    /// Words whose sliding windows satisfy a frequency constraint.
    Constrained(FrequencyConstraint),
}

/// 0/1 matrix of admissible transitions for Markovian words.
///
/// Entry `(i, j)` (row `i`, column `j`) set to 1 allows symbol `j` to be
/// followed by symbol `i`; a word also needs its final symbol to admit at
/// least one successor. A word closes periodically when its first symbol is
/// an allowed successor of its last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Omega {
    r: usize,
    rows: Vec<Vec<u8>>,
}

impl Omega {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self, OmegaError> {
        let r = rows.len();
        if r == 0 {
            return Err(OmegaError::Empty);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != r {
                return Err(OmegaError::NotSquare { row: i, len: row.len(), expected: r });
            }
            for (j, &e) in row.iter().enumerate() {
                if e > 1 {
                    return Err(OmegaError::NotBinary { row: i, col: j });
                }
            }
        }
        Ok(Omega { r, rows })
    }

    pub fn alphabet_size(&self) -> usize {
        self.r
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// May `prev` be followed by `next`?
    pub fn allows(&self, prev: Symbol, next: Symbol) -> bool {
        self.rows[next - 1][prev - 1] == 1
    }

    /// Does the word with the given first and last symbols close into a
    /// periodic sequence?
    pub fn closes(&self, first: Symbol, last: Symbol) -> bool {
        self.rows[first - 1][last - 1] == 1
    }

    /// Does `last` admit any successor?
    pub fn extendable(&self, last: Symbol) -> bool {
        (0..self.r).any(|i| self.rows[i][last - 1] == 1)
    }
}

/// Error from [`Omega`] construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OmegaError {
    Empty,
    NotSquare { row: usize, len: usize, expected: usize },
    NotBinary { row: usize, col: usize },
}

impl fmt::Display for OmegaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OmegaError::Empty => write!(f, "transition matrix must be non-empty"),
            OmegaError::NotSquare { row, len, expected } => {
                write!(f, "transition row {row} has {len} entries, expected {expected}")
            }
            OmegaError::NotBinary { row, col } => {
                write!(f, "transition entry ({row}, {col}) is not 0 or 1")
            }
        }
    }
}

impl core::error::Error for OmegaError {}

/// Tests whether a word belongs to the constrained language: every window of
/// length `ell` admissible when the word is long enough, otherwise
/// completable to an admissible block.
pub fn is_admissible_word(w: &Word, c: &FrequencyConstraint) -> Result<bool, BlockError> {
    if w.is_empty() {
        return Err(BlockError::EmptyWord);
    }
    let counts = w.counts(c.alphabet_size())?;
    let bounds = count_bounds(c);
    Ok(admissible_symbols(w.symbols(), &counts, &bounds))
}

/// Window-by-window admissibility over validated symbols.
pub(crate) fn admissible_symbols(
    symbols: &[Symbol],
    full_counts: &[usize],
    bounds: &IntegerBounds,
) -> bool {
    let ell = bounds.window();
    let n = symbols.len();
    if n < ell {
        return bounds.prefix_feasible(full_counts, n);
    }
    let mut counts = vec![0usize; bounds.alphabet_size()];
    for &s in &symbols[..ell] {
        counts[s - 1] += 1;
    }
    if !bounds.admits_counts(&counts) {
        return false;
    }
    for start in 1..=n - ell {
        counts[symbols[start - 1] - 1] -= 1;
        counts[symbols[start + ell - 1] - 1] += 1;
        if !bounds.admits_counts(&counts) {
            return false;
        }
    }
    true
}

/// Tests whether the `n`-periodic extension of a length-`n` word stays
/// admissible, by checking every window of the cyclic word.
pub fn is_periodically_extendable(w: &Word, c: &FrequencyConstraint) -> Result<bool, BlockError> {
    if w.is_empty() {
        return Err(BlockError::EmptyWord);
    }
    // Validate symbol range up front.
    let _ = w.counts(c.alphabet_size())?;
    let bounds = count_bounds(c);
    Ok(cyclically_admissible(w.symbols(), &bounds))
}

/// All `ell`-windows of the periodic repetition of `symbols` are admissible.
pub(crate) fn cyclically_admissible(symbols: &[Symbol], bounds: &IntegerBounds) -> bool {
    let n = symbols.len();
    let ell = bounds.window();
    let r = bounds.alphabet_size();
    let mut counts = vec![0usize; r];
    for k in 0..ell {
        counts[symbols[k % n] - 1] += 1;
    }
    if !bounds.admits_counts(&counts) {
        return false;
    }
    for start in 1..n {
        counts[symbols[(start - 1) % n] - 1] -= 1;
        counts[symbols[(start + ell - 1) % n] - 1] += 1;
        if !bounds.admits_counts(&counts) {
            return false;
        }
    }
    true
}

/// Lazy lexicographic iterator over the admissible words of a fixed length.
#[derive(Debug)]
pub struct Words {
    inner: WordsInner,
}

#[derive(Debug)]
enum WordsInner {
    Done,
    /// Length below the window: depth-first search over completable
    /// prefixes.
    Prefix {
        bounds: IntegerBounds,
        r: usize,
        n: usize,
        word: Vec<Symbol>,
        counts: Vec<usize>,
        started: bool,
    },
    /// Length at least the window: paths in the transition graph.
    Paths {
        graph: TransitionGraph,
        n: usize,
        start: usize,
        /// Successor-list positions per path step.
        path: Vec<(usize, usize)>,
        word: Vec<Symbol>,
        started: bool,
    },
}

/// Enumerates the admissible words of length `n` in lexicographic order.
///
/// For `n >= ell` the words are realized as paths of `n - ell` edges in the
/// transition graph; for `n < ell` as prefixes completable to a block.
/// `n = 0` yields nothing.
pub fn enumerate_words(c: &FrequencyConstraint, n: usize) -> Words {
    if n == 0 {
        return Words { inner: WordsInner::Done };
    }
    let ell = c.window();
    if n < ell {
        let bounds = count_bounds(c);
        Words {
            inner: WordsInner::Prefix {
                bounds,
                r: c.alphabet_size(),
                n,
                word: Vec::with_capacity(n),
                counts: vec![0; c.alphabet_size()],
                started: false,
            },
        }
    } else {
        let graph = build_graph(c);
        Words {
            inner: WordsInner::Paths {
                graph,
                n,
                start: 0,
                path: Vec::new(),
                word: Vec::with_capacity(n),
                started: false,
            },
        }
    }
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        match &mut self.inner {
            WordsInner::Done => None,
            WordsInner::Prefix { bounds, r, n, word, counts, started } => {
                let found = if !*started {
                    *started = true;
                    descend_prefix(bounds, *r, *n, word, counts, 1)
                } else {
                    advance_prefix(bounds, *r, *n, word, counts)
                };
                if found {
                    Some(Word::from_slice(word))
                } else {
                    self.inner = WordsInner::Done;
                    None
                }
            }
            WordsInner::Paths { graph, n, start, path, word, started } => {
                let found = if !*started {
                    *started = true;
                    next_path_from_start(graph, *n, start, path, word)
                } else {
                    advance_path(graph, *n, start, path, word)
                };
                if found {
                    Some(Word::from_slice(word))
                } else {
                    self.inner = WordsInner::Done;
                    None
                }
            }
        }
    }
}

/// Greedily extends the current prefix with the smallest feasible symbols
/// starting from `first_symbol` at the current depth. Any feasible prefix
/// admits a completion, so the descent always reaches length `n`.
fn descend_prefix(
    bounds: &IntegerBounds,
    r: usize,
    n: usize,
    word: &mut Vec<Symbol>,
    counts: &mut [usize],
    first_symbol: Symbol,
) -> bool {
    let mut lowest = first_symbol;
    while word.len() < n {
        let mut placed = false;
        for s in lowest..=r {
            counts[s - 1] += 1;
            if bounds.prefix_feasible(counts, word.len() + 1) {
                word.push(s);
                placed = true;
                break;
            }
            counts[s - 1] -= 1;
        }
        if !placed {
            return false;
        }
        lowest = 1;
    }
    true
}

/// Lexicographic successor among feasible prefixes of length `n`.
fn advance_prefix(
    bounds: &IntegerBounds,
    r: usize,
    n: usize,
    word: &mut Vec<Symbol>,
    counts: &mut [usize],
) -> bool {
    while let Some(last) = word.pop() {
        counts[last - 1] -= 1;
        if last < r && descend_prefix(bounds, r, n, word, counts, last + 1) {
            return true;
        }
    }
    false
}

/// Positions the path state on the first word starting at node `>= *start`.
fn next_path_from_start(
    graph: &TransitionGraph,
    n: usize,
    start: &mut usize,
    path: &mut Vec<(usize, usize)>,
    word: &mut Vec<Symbol>,
) -> bool {
    let steps = n - graph.window();
    while *start < graph.node_count() {
        path.clear();
        word.clear();
        word.extend_from_slice(graph.node(*start).symbols());
        path.push((*start, 0));
        if descend_path(graph, steps, path, word) {
            return true;
        }
        *start += 1;
    }
    false
}

/// Extends the current path with lexicographically smallest successors until
/// it has `steps` edges, backtracking when a node has no further successor.
fn descend_path(graph: &TransitionGraph, steps: usize, path: &mut Vec<(usize, usize)>, word: &mut Vec<Symbol>) -> bool {
    loop {
        if path.len() == steps + 1 {
            return true;
        }
        let (node, pos) = *path.last().expect("path starts non-empty");
        if let Some(&next) = graph.successors(node).get(pos) {
            path.push((next, 0));
            word.push(*graph.node(next).symbols().last().expect("ell >= 1"));
        } else {
            // Exhausted this node: backtrack and bump the parent position.
            path.pop();
            if let Some((_, parent_pos)) = path.last_mut() {
                *parent_pos += 1;
                word.pop();
            } else {
                return false;
            }
        }
    }
}

/// Lexicographic successor among words realized as graph paths.
fn advance_path(
    graph: &TransitionGraph,
    n: usize,
    start: &mut usize,
    path: &mut Vec<(usize, usize)>,
    word: &mut Vec<Symbol>,
) -> bool {
    let steps = n - graph.window();
    // Bump the deepest position that still has an untried successor.
    while path.len() > 1 {
        path.pop();
        word.pop();
        let (_, pos) = path.last_mut().expect("non-empty after pop");
        *pos += 1;
        if descend_path(graph, steps, path, word) {
            return true;
        }
    }
    *start += 1;
    next_path_from_start(graph, n, start, path, word)
}

/// Enumerates the length-`n` words whose periodic extension stays admissible;
/// a sub-language of [`enumerate_words`].
pub fn enumerate_periodic_words(
    c: &FrequencyConstraint,
    n: usize,
) -> impl Iterator<Item = Word> {
    let bounds = count_bounds(c);
    enumerate_words(c, n).filter(move |w| cyclically_admissible(w.symbols(), &bounds))
}

/// Counts the admissible words of length `n >= ell` as the number of paths of
/// `n - ell` edges, in exact big-integer arithmetic.
pub fn count_words(c: &FrequencyConstraint, n: usize) -> Result<BigUint, SubshiftError> {
    let ell = c.window();
    if n < ell {
        return Err(SubshiftError::UnsupportedLength { n, min: ell });
    }
    let graph = build_graph(c);
    let mut paths = vec![BigUint::from(1u32); graph.node_count()];
    for _ in 0..n - ell {
        let mut next = vec![BigUint::zero(); graph.node_count()];
        for (u, total) in next.iter_mut().enumerate() {
            for &v in graph.successors(u) {
                *total += &paths[v];
            }
        }
        paths = next;
    }
    Ok(paths.into_iter().sum())
}

/// Draws an admissible word of length `n`, choosing uniformly among the
/// admissible one-symbol extensions at each step and backtracking from dead
/// ends. Deterministic for a fixed seed.
pub fn sample_sequence(
    c: &FrequencyConstraint,
    n: usize,
    seed: u64,
) -> Result<Word, SubshiftError> {
    if n == 0 {
        return Err(SubshiftError::UnsupportedLength { n, min: 1 });
    }
    if !check_nonempty(c).nonempty {
        return Err(SubshiftError::EmptyConstraint);
    }
    let bounds = count_bounds(c);
    let r = c.alphabet_size();
    let ell = c.window();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut word: Vec<Symbol> = Vec::with_capacity(n);
    // Rolling counts over the last min(len, ell) symbols.
    let mut window_counts = vec![0usize; r];

    fn extension_ok(
        symbols: &[Symbol],
        window_counts: &[usize],
        s: Symbol,
        bounds: &IntegerBounds,
    ) -> bool {
        let len = symbols.len();
        let ell = bounds.window();
        let mut counts = window_counts.to_vec();
        if len < ell {
            counts[s - 1] += 1;
            bounds.prefix_feasible(&counts, len + 1)
        } else {
            // The new window drops the symbol leaving the span of ell.
            counts[symbols[len - ell] - 1] -= 1;
            counts[s - 1] += 1;
            bounds.admits_counts(&counts)
        }
    }

    // Stack of not-yet-tried candidates per depth, pre-shuffled.
    let mut pending: Vec<Vec<Symbol>> = Vec::with_capacity(n);
    let mut first = true;
    while word.len() < n {
        if first || pending.len() == word.len() {
            let mut candidates: Vec<Symbol> = (1..=r)
                .filter(|&s| extension_ok(&word, &window_counts, s, &bounds))
                .collect();
            // Fisher-Yates with the seeded generator.
            for i in (1..candidates.len()).rev() {
                let j = rng.gen_range(0..=i);
                candidates.swap(i, j);
            }
            pending.push(candidates);
            first = false;
        }
        match pending.last_mut().and_then(Vec::pop) {
            Some(s) => {
                if word.len() >= ell {
                    window_counts[word[word.len() - ell] - 1] -= 1;
                }
                window_counts[s - 1] += 1;
                word.push(s);
            }
            None => {
                pending.pop();
                match word.pop() {
                    Some(s) => {
                        window_counts[s - 1] -= 1;
                        if word.len() >= ell {
                            window_counts[word[word.len() - ell] - 1] += 1;
                        }
                    }
                    None => return Err(SubshiftError::DeadEnd),
                }
            }
        }
    }
    Ok(Word::new(word))
}

/// Renders the graph in DOT format. Node labels are the block symbol strings;
/// nodes and edges appear in node order.
pub fn export_dot(g: &TransitionGraph) -> String {
    let mut out = String::from("digraph subshift {\n");
    for (i, node) in g.nodes().iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{node}\"];");
    }
    for u in 0..g.node_count() {
        for &v in g.successors(u) {
            let _ = writeln!(out, "  n{u} -> n{v};");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;

    fn constraint(r: usize, ell: usize, lower: &[&str], upper: &[&str]) -> FrequencyConstraint {
        FrequencyConstraint::new(
            r,
            ell,
            lower.iter().map(|s| parse_rational(s).unwrap()).collect(),
            upper.iter().map(|s| parse_rational(s).unwrap()).collect(),
        )
        .unwrap()
    }

    fn balanced_pair() -> FrequencyConstraint {
        constraint(2, 2, &["0.4", "0.4"], &["0.6", "0.6"])
    }

    fn wide_bracket() -> FrequencyConstraint {
        constraint(3, 10, &["0.13", "0.23", "0.34"], &["0.33", "0.43", "0.54"])
    }

    fn narrow_bracket() -> FrequencyConstraint {
        constraint(3, 10, &["0.22", "0.32", "0.43"], &["0.24", "0.34", "0.45"])
    }

    #[test]
    fn graph_two_cycle() {
        let g = build_graph(&balanced_pair());
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.nodes()[0], Word::from_slice(&[1, 2]));
        assert_eq!(g.nodes()[1], Word::from_slice(&[2, 1]));
        assert_eq!(g.successors(0), &[1]);
        assert_eq!(g.successors(1), &[0]);
        assert!(g.dead_ends().is_empty());
    }

    #[test]
    fn graph_empty_and_large() {
        assert_eq!(build_graph(&narrow_bracket()).node_count(), 0);
        let g = build_graph(&wide_bracket());
        assert_eq!(g.node_count(), 9870);
        assert!(g.dead_ends().is_empty());
    }

    #[test]
    fn graph_full_shift() {
        let g = build_graph(&FrequencyConstraint::vacuous(3, 1));
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 9);
    }

    #[test]
    fn graph_edges_are_overlaps() {
        let g = build_graph(&wide_bracket());
        for u in 0..g.node_count() {
            for &v in g.successors(u) {
                let us = g.node(u).symbols();
                let vs = g.node(v).symbols();
                assert_eq!(&us[1..], &vs[..vs.len() - 1]);
            }
        }
    }

    #[test]
    fn admissible_word_cases() {
        let c = wide_bracket();
        let alpha1 = Word::from_slice(&[2, 1, 2, 3, 3, 3, 2, 3, 3, 1, 2, 1, 2, 3, 1]);
        assert!(is_admissible_word(&alpha1, &c).unwrap());
        assert!(is_admissible_word(&Word::from_slice(&[2, 1, 2]), &c).unwrap());
        // (1,1,1) cannot be completed: symbol 1 is capped at 3 of 10... it can.
        // But 7 ones cannot reach a block with at most 3 ones.
        assert!(!is_admissible_word(&Word::from_slice(&[1; 7]), &c).unwrap());
        let c = balanced_pair();
        assert!(!is_admissible_word(&Word::from_slice(&[1, 1, 1, 1]), &c).unwrap());
        assert!(is_admissible_word(&Word::from_slice(&[1]), &c).unwrap());
        assert!(is_admissible_word(&Word::new(vec![]), &c).is_err());
    }

    #[test]
    fn periodic_extendability() {
        let c = balanced_pair();
        assert!(is_periodically_extendable(&Word::from_slice(&[1, 2]), &c).unwrap());
        assert!(!is_periodically_extendable(&Word::from_slice(&[1, 2, 1]), &c).unwrap());
        assert!(!is_periodically_extendable(&Word::from_slice(&[1]), &c).unwrap());
        // Every admissible block extends with period ell.
        let c = wide_bracket();
        for block in enumerate_blocks(&c).iter().take(50) {
            assert!(is_periodically_extendable(block, &c).unwrap());
        }
    }

    #[test]
    fn words_balanced() {
        let c = balanced_pair();
        let words: Vec<Word> = enumerate_words(&c, 4).collect();
        assert_eq!(
            words,
            vec![Word::from_slice(&[1, 2, 1, 2]), Word::from_slice(&[2, 1, 2, 1])]
        );
        let words: Vec<Word> = enumerate_words(&c, 1).collect();
        assert_eq!(words, vec![Word::from_slice(&[1]), Word::from_slice(&[2])]);
    }

    #[test]
    fn words_brute_force_agreement() {
        // Cross-check the iterator against direct filtering of all words.
        let c = constraint(2, 3, &["0.2", "0.2"], &["0.8", "0.8"]);
        for n in 1..=6 {
            let mut expected = Vec::new();
            for code in 0..(1usize << n) {
                let word: Vec<Symbol> = (0..n).map(|k| 1 + ((code >> (n - 1 - k)) & 1)).collect();
                let w = Word::new(word);
                if is_admissible_word(&w, &c).unwrap() {
                    expected.push(w);
                }
            }
            let got: Vec<Word> = enumerate_words(&c, n).collect();
            assert_eq!(got, expected, "length {n}");
        }
    }

    #[test]
    fn words_of_window_length_are_blocks() {
        let c = wide_bracket();
        let words: Vec<Word> = enumerate_words(&c, 10).collect();
        assert_eq!(words, enumerate_blocks(&c));
    }

    #[test]
    fn periodic_words_cases() {
        let c = balanced_pair();
        let per: Vec<Word> = enumerate_periodic_words(&c, 2).collect();
        assert_eq!(per, vec![Word::from_slice(&[1, 2]), Word::from_slice(&[2, 1])]);
        assert_eq!(enumerate_periodic_words(&c, 3).count(), 0);
        // At n = ell the periodic words are exactly the blocks.
        let c = wide_bracket();
        let per: BTreeSet<Word> = enumerate_periodic_words(&c, 10).collect();
        let blocks: BTreeSet<Word> = enumerate_blocks(&c).into_iter().collect();
        assert_eq!(per, blocks);
    }

    #[test]
    fn count_words_cases() {
        let c = balanced_pair();
        assert_eq!(count_words(&c, 4).unwrap(), BigUint::from(2u32));
        assert_eq!(count_words(&c, 2).unwrap(), BigUint::from(2u32));
        assert_eq!(
            count_words(&c, 1),
            Err(SubshiftError::UnsupportedLength { n: 1, min: 2 })
        );
        assert_eq!(count_words(&narrow_bracket(), 12).unwrap(), BigUint::zero());
        // Long horizon: the language stays two words at every length.
        assert_eq!(count_words(&c, 200).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn count_words_matches_enumeration() {
        let c = constraint(3, 2, &["0.1", "0.1", "0.1"], &["0.6", "0.6", "0.6"]);
        for n in 2..=7 {
            let counted = count_words(&c, n).unwrap();
            let listed = enumerate_words(&c, n).count();
            assert_eq!(counted, BigUint::from(listed));
        }
    }

    #[test]
    fn sampling() {
        let c = wide_bracket();
        let w = sample_sequence(&c, 31, 1).unwrap();
        assert_eq!(w.len(), 31);
        assert!(is_admissible_word(&w, &c).unwrap());
        // Deterministic per seed.
        assert_eq!(sample_sequence(&c, 31, 1).unwrap(), w);
        // Balanced constraint admits exactly two words.
        let c = balanced_pair();
        for seed in 0..5 {
            let w = sample_sequence(&c, 6, seed).unwrap();
            let s = w.to_string();
            assert!(s == "121212" || s == "212121", "got {s}");
        }
        assert_eq!(
            sample_sequence(&narrow_bracket(), 4, 0),
            Err(SubshiftError::EmptyConstraint)
        );
    }

    #[test]
    fn sample_short_words() {
        let c = wide_bracket();
        for seed in 0..4 {
            let w = sample_sequence(&c, 3, seed).unwrap();
            assert!(is_admissible_word(&w, &c).unwrap());
        }
    }

    #[test]
    fn dot_round_trip() {
        let g = build_graph(&balanced_pair());
        let dot = export_dot(&g);
        assert_eq!(parse_dot(&dot), (vec!["12".into(), "21".into()], vec![(0, 1), (1, 0)]));
        let empty = build_graph(&narrow_bracket());
        assert_eq!(export_dot(&empty), "digraph subshift {\n}\n");
        // Round trip on a larger graph.
        let c = constraint(2, 3, &["0.2", "0.2"], &["0.8", "0.8"]);
        let g = build_graph(&c);
        let (labels, edges) = parse_dot(&export_dot(&g));
        assert_eq!(labels.len(), g.node_count());
        assert_eq!(edges.len(), g.edge_count());
        for (i, label) in labels.iter().enumerate() {
            assert_eq!(*label, g.node(i).to_string());
        }
        for (u, v) in edges {
            assert!(g.successors(u).contains(&v));
        }
    }

    /// Minimal DOT reader for the exporter's own output.
    fn parse_dot(dot: &str) -> (Vec<String>, Vec<(usize, usize)>) {
        let mut labels = Vec::new();
        let mut edges = Vec::new();
        for line in dot.lines() {
            let line = line.trim();
            if let Some((from, to)) = line.split_once(" -> ") {
                let u: usize = from.trim_start_matches('n').parse().unwrap();
                let v: usize = to.trim_end_matches(';').trim_start_matches('n').parse().unwrap();
                edges.push((u, v));
            } else if let Some((_, rest)) = line.split_once("[label=\"") {
                labels.push(rest.trim_end_matches("\"];").to_string());
            }
        }
        (labels, edges)
    }

    #[test]
    fn shift_invariance_and_subadditivity() {
        let c = constraint(2, 3, &["0.25", "0.25"], &["0.75", "0.75"]);
        for w in enumerate_words(&c, 6) {
            let symbols = w.symbols();
            let shifted = Word::from_slice(&symbols[1..]);
            assert!(is_admissible_word(&shifted, &c).unwrap(), "shift of {w}");
            for m in 1..symbols.len() {
                let prefix = Word::from_slice(&symbols[..m]);
                let suffix = Word::from_slice(&symbols[m..]);
                assert!(is_admissible_word(&prefix, &c).unwrap(), "prefix of {w} at {m}");
                assert!(is_admissible_word(&suffix, &c).unwrap(), "suffix of {w} at {m}");
            }
        }
    }
}
