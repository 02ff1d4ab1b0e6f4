//! JSON problem files.
//!
//! Frequencies are decimal or fraction strings so that they parse into exact
//! rationals; matrices are nested row arrays; `omega` is an optional 0/1
//! transition matrix for the markov mode, with entry `(i, j)` allowing
//! symbol `j` to be followed by symbol `i`.

use std::fs;
use std::path::Path;

use freqjsr::{parse_rational, BigRational, FrequencyConstraint, Mat, MatrixSet, Omega, WordSource};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub alphabet_size: usize,
    pub block_length: usize,
    pub lower: Vec<String>,
    pub upper: Vec<String>,
    #[serde(default)]
    pub target: Option<Vec<String>>,
    #[serde(default)]
    pub matrices: Option<Vec<Vec<Vec<f64>>>>,
    #[serde(default)]
    pub omega: Option<Vec<Vec<u8>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Constrained,
    Markov,
    All,
}

impl ProblemFile {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text =
            fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        // serde_json reports the offending line and column.
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    fn parse_bounds(&self, field: &str, values: &[String]) -> Result<Vec<BigRational>, String> {
        values
            .iter()
            .enumerate()
            .map(|(i, s)| {
                parse_rational(s).map_err(|e| format!("field {field}[{i}] = {s:?}: {e}"))
            })
            .collect()
    }

    pub fn constraint(&self) -> Result<FrequencyConstraint, String> {
        let lower = self.parse_bounds("lower", &self.lower)?;
        let upper = self.parse_bounds("upper", &self.upper)?;
        let target = match &self.target {
            None => None,
            Some(t) => Some(self.parse_bounds("target", t)?),
        };
        FrequencyConstraint::with_target(
            self.alphabet_size,
            self.block_length,
            lower,
            upper,
            target,
        )
        .map_err(|e| e.to_string())
    }

    pub fn matrix_set(&self) -> Result<MatrixSet, String> {
        let raw = self
            .matrices
            .as_ref()
            .ok_or("problem file has no \"matrices\" field")?;
        if raw.len() != self.alphabet_size {
            return Err(format!(
                "field matrices has {} entries, alphabet_size is {}",
                raw.len(),
                self.alphabet_size
            ));
        }
        let mats = raw
            .iter()
            .enumerate()
            .map(|(i, rows)| {
                Mat::from_rows(rows).map_err(|e| format!("field matrices[{i}]: {e}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        MatrixSet::new(mats).map_err(|e| e.to_string())
    }

    pub fn word_source(&self, mode: Mode) -> Result<WordSource, String> {
        match mode {
            Mode::All => Ok(WordSource::All),
            Mode::Constrained => Ok(WordSource::Constrained(self.constraint()?)),
            Mode::Markov => {
                let raw = self
                    .omega
                    .as_ref()
                    .ok_or("markov mode needs an \"omega\" field")?;
                let omega = Omega::new(raw.clone()).map_err(|e| format!("field omega: {e}"))?;
                if omega.alphabet_size() != self.alphabet_size {
                    return Err(format!(
                        "field omega is {}x{}, alphabet_size is {}",
                        omega.alphabet_size(),
                        omega.alphabet_size(),
                        self.alphabet_size
                    ));
                }
                Ok(WordSource::Markov(omega))
            }
        }
    }
}
