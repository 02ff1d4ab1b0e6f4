//! Symbolic sequences with sliding-block frequency constraints.
//!
//! A constraint fixes an alphabet `{1..r}`, a window length `ell`, and per
//! symbol an exact rational frequency bracket `[p_lower, p_upper]`. A word is
//! admissible when every window of `ell` consecutive symbols contains each
//! symbol `i` between `ceil(p_lower_i * ell)` and `floor(p_upper_i * ell)`
//! times. This crate decides, classifies, and enumerates such words, builds
//! the transition graph over admissible blocks, and computes two-sided bounds
//! on the joint/generalized spectral radius of matrix products whose factor
//! indices run over the constrained language.
//!
//! Modules:
//!
//! - [`blocks`]: exact integer bounds, non-emptiness, rigidity classification,
//!   and block enumeration;
//! - [`subshift`]: the block transition graph, word enumeration, periodic
//!   extendability, sampling, and DOT export;
//! - [`spectral`]: matrix sets, norm and spectral-radius evaluation over word
//!   sources, radius brackets, the block-alphabet lift, and gap reports;
//! - [`linalg`]: the small dense matrix type with induced norms and a real
//!   eigenvalue solver;
//! - [`rational`]: exact rational parsing from decimal or fraction strings.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the default `std`
//! feature only switches dependency features.
//!
//! # Quick start
//!
//! ```
//! use freqjsr::{
//!     bracket, check_nonempty, parse_rational, FrequencyConstraint, Mat, MatrixSet,
//!     NormKind, WordSource,
//! };
//!
//! // Windows of length 2 over {1, 2} in which each symbol appears 40-60%
//! // of the time: only the alternating words survive.
//! let c = FrequencyConstraint::new(
//!     2,
//!     2,
//!     vec![parse_rational("0.4")?, parse_rational("0.4")?],
//!     vec![parse_rational("0.6")?, parse_rational("0.6")?],
//! )?;
//! assert!(check_nonempty(&c).nonempty);
//!
//! // Alternating products of the two triangular counters grow like the
//! // golden ratio; the bracket pins it from both sides.
//! let ms = MatrixSet::new(vec![
//!     Mat::from_rows(&[vec![1.0, 1.0], vec![0.0, 1.0]])?,
//!     Mat::from_rows(&[vec![1.0, 0.0], vec![1.0, 1.0]])?,
//! ])?;
//! let b = bracket(&ms, &WordSource::Constrained(c), 8, NormKind::RowSum)?;
//! let phi = (1.0 + 5.0_f64.sqrt()) / 2.0;
//! assert!((b.best_lower - phi).abs() < 1e-10);
//! assert!(b.best_upper >= phi && b.best_upper - phi < 0.1);
//! # Ok::<(), Box<dyn core::error::Error>>(())
//! ```

#![cfg_attr(not(feature = "std"), no_std)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod blocks;
pub mod linalg;
pub mod rational;
pub mod spectral;
pub mod subshift;

pub use blocks::{
    admissible_count_vectors, check_nonempty, classify_rigidity, count_blocks, count_bounds,
    enumerate_blocks, is_admissible_block, BlockError, ConstraintError, ForcedPeriodicReason,
    FrequencyConstraint, IntegerBounds, NonEmptyReport, RigidityClass, Symbol, Word,
};
pub use linalg::Mat;
pub use rational::{parse_rational, BigRational, ParseRationalError};
pub use spectral::{
    bracket, bracket_opts, build_markov_lift, exact_radius_if_forced_periodic, operator_norm,
    rho_hat_n, rho_hat_n_opts, rho_hat_per_n, rho_hat_per_n_opts, rho_n, rho_n_opts,
    spectral_radius, verify_berger_wang, BracketRow, EvalOptions, GapReport, GapRow, MarkovLift,
    MatrixSet, NormKind, RadiusBracket, SpectralError,
};
pub use subshift::{
    build_graph, count_words, enumerate_periodic_words, enumerate_words, export_dot,
    is_admissible_word, is_periodically_extendable, sample_sequence, Omega, OmegaError,
    SubshiftError, TransitionGraph, WordSource, Words,
};
