//! Output formatting: fixed-precision and hexadecimal float encodings, the
//! radius CSV tables, and the feasibility report.

use std::fmt::Write as _;

use freqjsr::{GapReport, NonEmptyReport, RadiusBracket, RigidityClass};

/// Twelve decimal places; the table format for all radius values.
pub fn fixed12(x: f64) -> String {
    format!("{x:.12}")
}

/// Exact hexadecimal float encoding, e.g. `0x1.9e3779b97f4a8p+0`.
pub fn hex_f64(x: f64) -> String {
    let bits = x.to_bits();
    let sign = if bits >> 63 == 1 { "-" } else { "" };
    let exponent = ((bits >> 52) & 0x7ff) as i64;
    let fraction = bits & ((1u64 << 52) - 1);
    match exponent {
        0 => {
            if fraction == 0 {
                format!("{sign}0x0p+0")
            } else {
                format!("{sign}0x0.{fraction:013x}p-1022")
            }
        }
        0x7ff => {
            if fraction == 0 {
                format!("{sign}inf")
            } else {
                String::from("nan")
            }
        }
        _ => format!("{sign}0x1.{fraction:013x}p{:+}", exponent - 1023),
    }
}

fn value(x: f64, raw: bool) -> String {
    if raw {
        hex_f64(x)
    } else {
        fixed12(x)
    }
}

pub const RADIUS_HEADER: &str = "n,rho_hat_per_n,rho_hat_n,rho_n,best_lower,best_upper,gap";

/// Radius table: one row per length with the running best bracket, then a
/// `best` summary row. LF line endings.
pub fn radius_csv(bracket: &RadiusBracket, raw: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{RADIUS_HEADER}");
    let mut run_lower = 0.0f64;
    let mut run_upper = f64::INFINITY;
    let mut max_per = 0.0f64;
    let mut max_hat = 0.0f64;
    for row in &bracket.rows {
        run_lower = run_lower.max(row.lower_per);
        run_upper = run_upper.min(row.upper);
        max_per = max_per.max(row.lower_per);
        max_hat = max_hat.max(row.lower);
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            row.n,
            value(row.lower_per, raw),
            value(row.lower, raw),
            value(row.upper, raw),
            value(run_lower, raw),
            value(run_upper, raw),
            value(run_upper - run_lower, raw),
        );
    }
    let _ = writeln!(
        out,
        "best,{},{},{},{},{},{}",
        value(max_per, raw),
        value(max_hat, raw),
        value(bracket.best_upper, raw),
        value(bracket.best_lower, raw),
        value(bracket.best_upper, raw),
        value(bracket.gap, raw),
    );
    out
}

/// A zero radius table for an empty constraint: a single all-zero data row
/// plus the summary row.
pub fn radius_csv_empty(raw: bool) -> String {
    let zero = value(0.0, raw);
    format!(
        "{RADIUS_HEADER}\n1,{z},{z},{z},{z},{z},{z}\nbest,{z},{z},{z},{z},{z},{z}\n",
        z = zero
    )
}

pub const VERIFY_HEADER: &str =
    "n,rho_hat_per_n,rho_hat_n,rho_n_rowsum,rho_n_colsum,rho_n_spectral,best_lower,best_upper,gap";

/// Verification table: both lower families, the norm family under all three
/// norms, and the running bracket; then a `best` summary row.
pub fn verify_csv(report: &GapReport, raw: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{VERIFY_HEADER}");
    let mut run_lower = 0.0f64;
    let mut run_upper = f64::INFINITY;
    for row in &report.rows {
        run_lower = run_lower.max(row.lower_per);
        run_upper = run_upper.min(row.min_upper());
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            row.n,
            value(row.lower_per, raw),
            value(row.lower, raw),
            value(row.upper_row_sum, raw),
            value(row.upper_col_sum, raw),
            value(row.upper_spectral, raw),
            value(run_lower, raw),
            value(run_upper, raw),
            value(run_upper - run_lower, raw),
        );
    }
    let _ = writeln!(
        out,
        "best,,,,,,{},{},{}",
        value(report.best_lower, raw),
        value(report.best_upper, raw),
        value(report.gap, raw),
    );
    out
}

/// Witness, bounds, and verdict lines after the verification table, paired
/// with the exit code: 3 when the ordering invariants were violated, 0
/// otherwise (whether or not the gap met the tolerance, which the verdict
/// line spells out).
pub fn verify_verdict(report: &GapReport, tol: f64) -> (String, u8) {
    let mut out = String::new();
    match &report.witness {
        Some(word) => {
            let _ = writeln!(out, "witness={word}");
        }
        None => {
            let _ = writeln!(out, "witness=none");
        }
    }
    let _ = writeln!(out, "best_lower={}", fixed12(report.best_lower));
    let _ = writeln!(out, "best_upper={}", fixed12(report.best_upper));
    let _ = writeln!(out, "gap={}", fixed12(report.gap));
    if !report.chain_ok() {
        let _ = writeln!(out, "verdict: FAIL (internal inconsistency)");
        return (out, 3);
    }
    if report.gap <= tol {
        let _ = writeln!(out, "verdict: PASS (gap {} <= tol {tol})", fixed12(report.gap));
    } else {
        let _ = writeln!(
            out,
            "verdict: PASS (bound chain consistent; gap {} > tol {tol})",
            fixed12(report.gap)
        );
    }
    (out, 0)
}

/// Human-readable feasibility and rigidity report.
pub fn check_report(
    r: usize,
    ell: usize,
    lo: &[usize],
    hi: &[usize],
    report: &NonEmptyReport,
    rigidity: &RigidityClass,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "alphabet size r = {r}");
    let _ = writeln!(out, "window length ell = {ell}");
    let _ = writeln!(out, "lo = {lo:?}");
    let _ = writeln!(out, "hi = {hi:?}");
    if report.per_symbol_ok.iter().all(|&ok| ok) {
        let _ = writeln!(out, "per-symbol bound check (lo_i <= hi_i): ok");
    } else {
        let failing: Vec<String> =
            report.failing_symbols().iter().map(|i| i.to_string()).collect();
        let _ = writeln!(
            out,
            "per-symbol bound check (lo_i <= hi_i): fails at i={}",
            failing.join(",")
        );
    }
    let _ = writeln!(
        out,
        "window-sum check: {} <= {} <= {} {}",
        report.sum_lo,
        ell,
        report.sum_hi,
        if report.sum_ok { "holds" } else { "fails" }
    );
    let _ = writeln!(out, "nonempty: {}", if report.nonempty { "yes" } else { "no" });
    let _ = writeln!(out, "rigidity: {rigidity}");
    out
}
