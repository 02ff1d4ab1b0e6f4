//! Shared helpers for the integration suites: constraints realized from
//! integer occurrence bounds with small-denominator rationals, exhaustive
//! integer-bound grids, and seeded random instances.
#![allow(dead_code)] // each test binary uses a different subset

use freqjsr::{parse_rational, FrequencyConstraint, Mat, MatrixSet};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const MAX_DENOMINATOR: usize = 12;

/// All fractions `num/den` with `den <= max_den` strictly between `lo` and
/// `hi`, ascending and deduplicated by value.
fn fractions_strictly_between(
    lo: (usize, usize),
    hi: (usize, usize),
    max_den: usize,
) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for den in 1..=max_den {
        for num in 0..=den {
            if num * lo.1 > lo.0 * den && num * hi.1 < hi.0 * den {
                out.push((num, den));
            }
        }
    }
    out.sort_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)));
    out.dedup_by(|a, b| a.0 * b.1 == b.0 * a.1);
    out
}

/// Builds a constraint whose integer occurrence bounds come out exactly as
/// `(lo, hi)`, using rationals with denominator at most 12. Returns `None`
/// for combinations no valid rational bracket can realize (a gap of two or
/// more, or an infeasible symbol pinned above the window).
pub fn realize_bounds(lo: &[usize], hi: &[usize], ell: usize) -> Option<FrequencyConstraint> {
    assert!(2 * ell <= MAX_DENOMINATOR || ell <= MAX_DENOMINATOR, "window too large to realize");
    let r = lo.len();
    let mut lower = Vec::with_capacity(r);
    let mut upper = Vec::with_capacity(r);
    for i in 0..r {
        let (lo_i, hi_i) = (lo[i], hi[i]);
        let (p_minus, p_plus) = if lo_i <= hi_i {
            if lo_i < hi_i {
                ((lo_i, ell), (hi_i, ell))
            } else if lo_i == ell {
                // lo = hi = ell: the upper bound must be exactly 1 and the
                // lower strictly inside ((ell-1)/ell, 1).
                let f = *fractions_strictly_between((ell - 1, ell), (1, 1), MAX_DENOMINATOR)
                    .first()?;
                (f, (1, 1))
            } else {
                // lo = hi = k < ell: keep the lower bound exact and push the
                // upper strictly inside (k/ell, (k+1)/ell).
                let f = *fractions_strictly_between((lo_i, ell), (lo_i + 1, ell), MAX_DENOMINATOR)
                    .first()?;
                ((lo_i, ell), f)
            }
        } else if lo_i == hi_i + 1 && hi_i < ell {
            // Infeasible symbol: both bounds strictly inside
            // (hi/ell, (hi+1)/ell) so that ceil lands above floor.
            let between =
                fractions_strictly_between((hi_i, ell), (hi_i + 1, ell), MAX_DENOMINATOR);
            if between.len() < 2 {
                return None;
            }
            (between[0], between[1])
        } else {
            return None;
        };
        lower.push(parse_rational(&format!("{}/{}", p_minus.0, p_minus.1)).unwrap());
        upper.push(parse_rational(&format!("{}/{}", p_plus.0, p_plus.1)).unwrap());
    }
    FrequencyConstraint::new(r, ell, lower, upper).ok()
}

/// Every per-symbol integer-bound option a rational bracket can produce:
/// `hi` anywhere in `0..=ell`, `lo` from 0 up to one past `hi` (ceil can
/// exceed floor by at most one), capped at the window length.
pub fn per_symbol_options(ell: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for hi in 0..=ell {
        for lo in 0..=(hi + 1).min(ell) {
            out.push((lo, hi));
        }
    }
    out
}

/// Cartesian product of the per-symbol options over `r` symbols, as
/// `(lo, hi)` vector pairs.
pub fn integer_bound_grid(r: usize, ell: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let options = per_symbol_options(ell);
    let mut grid: Vec<(Vec<usize>, Vec<usize>)> = vec![(Vec::new(), Vec::new())];
    for _ in 0..r {
        let mut next = Vec::with_capacity(grid.len() * options.len());
        for (lo, hi) in &grid {
            for &(ol, oh) in &options {
                let mut lo = lo.clone();
                let mut hi = hi.clone();
                lo.push(ol);
                hi.push(oh);
                next.push((lo, hi));
            }
        }
        grid = next;
    }
    grid
}

/// A seeded random matrix set with uniform entries in `[-scale, scale]`.
pub fn random_matrix_set(rng: &mut ChaCha8Rng, r: usize, d: usize, scale: f64) -> MatrixSet {
    let mats = (0..r)
        .map(|_| {
            let data: Vec<f64> = (0..d * d).map(|_| rng.gen_range(-scale..=scale)).collect();
            Mat::from_flat(d, data).unwrap()
        })
        .collect();
    MatrixSet::new(mats).unwrap()
}

/// A seeded random matrix set with integer entries in `{0, 1, 2}`.
pub fn random_small_int_matrix_set(rng: &mut ChaCha8Rng, r: usize, d: usize) -> MatrixSet {
    let mats = (0..r)
        .map(|_| {
            let data: Vec<f64> = (0..d * d).map(|_| rng.gen_range(0..=2) as f64).collect();
            Mat::from_flat(d, data).unwrap()
        })
        .collect();
    MatrixSet::new(mats).unwrap()
}

/// The deterministic instance set shared by the bound-chain and the
/// pruned-versus-exhaustive suites: mostly non-empty constraints built
/// around a random count vector, with a sprinkling of empty ones.
pub fn random_instances(count: usize) -> Vec<(FrequencyConstraint, MatrixSet)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let r = rng.gen_range(1..=3);
        let ell = rng.gen_range(1..=4);
        let d = rng.gen_range(1..=3);
        let mut center = vec![0usize; r];
        for _ in 0..ell {
            center[rng.gen_range(0..r)] += 1;
        }
        let mut lo: Vec<usize> = center
            .iter()
            .map(|&k| k.saturating_sub(rng.gen_range(0..=1)))
            .collect();
        let hi: Vec<usize> = center
            .iter()
            .map(|&k| (k + rng.gen_range(0..=1)).min(ell))
            .collect();
        if rng.gen_range(0..10) == 0 && hi[0] < ell {
            // Occasionally force an empty constraint.
            lo[0] = hi[0] + 1;
        }
        let Some(c) = realize_bounds(&lo, &hi, ell) else { continue };
        let ms = random_matrix_set(&mut rng, r, d, 1.5);
        out.push((c, ms));
    }
    out
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
