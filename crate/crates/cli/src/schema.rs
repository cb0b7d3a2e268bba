//! JSON file formats.
//!
//! One object per file, dispatched by field presence:
//!
//! * channel: `{"n": 1, "X": [[...]], "Y": [[...]]}`
//! * state:   `{"n": 1, "V": [[...]], "mean": [...]}` (mean optional)
//! * matrix:  `{"n": 1, "matrix": [[...]]}` — accepted by `compose` as the
//!   additive-noise channel with that `Y`
//! * Fock-diagonal state: `{"probs": [...]}`
//!
//! All matrices are `2n x 2n`, row-major, with finite entries.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use ncdepth_core::{Error as CoreError, GaussianChannel, GaussianState, Mat, NoiseMatrix};

use crate::CliError;

#[derive(Debug, Serialize, Deserialize)]
pub struct ChannelFile {
    pub n: usize,
    #[serde(rename = "X")]
    pub x: Vec<Vec<f64>>,
    #[serde(rename = "Y")]
    pub y: Vec<Vec<f64>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct StateFile {
    pub n: usize,
    #[serde(rename = "V")]
    pub v: Vec<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mean: Option<Vec<f64>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MatrixFile {
    pub n: usize,
    pub matrix: Vec<Vec<f64>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ProbsFile {
    pub probs: Vec<f64>,
}

/// Anything `compose` accepts: a channel pair, or a bare noise matrix.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum ChannelInput {
    Channel(ChannelFile),
    Noise(MatrixFile),
}

pub fn load_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

/// Classifies core validation failures into the exit-code scheme: physics
/// violations are distinct from shape/parse problems.
pub fn physics_error(err: CoreError) -> CliError {
    match err {
        CoreError::InvalidCovariance(_)
        | CoreError::NotCompletelyPositive(_)
        | CoreError::InvalidNoise(_)
        | CoreError::NotSymmetric(_)
        | CoreError::NotHermitian(_)
        | CoreError::NotSymplectic(_)
        | CoreError::NotOrthosymplectic(_) => CliError::Physics(err.to_string()),
        CoreError::DimensionMismatch { .. } => CliError::Shape(err.to_string()),
        _ => CliError::Parse(err.to_string()),
    }
}

fn matrix_2n(n: usize, rows: &[Vec<f64>], what: &str) -> Result<Mat, CliError> {
    if n == 0 {
        return Err(CliError::Parse(format!("{what}: n must be at least 1")));
    }
    if rows.len() != 2 * n {
        return Err(CliError::Parse(format!(
            "{what}: expected a {0}x{0} matrix for n={n}, got {1} rows",
            2 * n,
            rows.len()
        )));
    }
    Mat::from_rows(rows).map_err(|e| CliError::Parse(format!("{what}: {e}")))
}

impl StateFile {
    pub fn to_state(&self) -> Result<GaussianState, CliError> {
        let v = matrix_2n(self.n, &self.v, "V")?;
        GaussianState::new(v, self.mean.clone()).map_err(physics_error)
    }
}

impl ChannelFile {
    /// Builds a candidate channel; complete positivity is diagnosed by the
    /// caller, not enforced here.
    pub fn to_candidate(&self) -> Result<GaussianChannel, CliError> {
        let x = matrix_2n(self.n, &self.x, "X")?;
        let y = matrix_2n(self.n, &self.y, "Y")?;
        GaussianChannel::candidate(x, y).map_err(physics_error)
    }

    pub fn from_channel(ch: &GaussianChannel) -> Self {
        ChannelFile {
            n: ch.modes(),
            x: ch.x().to_rows(),
            y: ch.y().to_rows(),
        }
    }
}

impl ChannelInput {
    /// Resolves to a concrete channel; bare matrices become additive-noise
    /// channels `(I, Y)`.
    pub fn to_channel(&self) -> Result<GaussianChannel, CliError> {
        match self {
            ChannelInput::Channel(ch) => {
                let candidate = ch.to_candidate()?;
                if !candidate.is_cp() {
                    return Err(CliError::Physics(format!(
                        "channel is not completely positive: min eig of V(X,Y) + iOmega = {:.6e}",
                        candidate.cp_min_eig()
                    )));
                }
                Ok(candidate)
            }
            ChannelInput::Noise(m) => {
                let y = matrix_2n(m.n, &m.matrix, "matrix")?;
                let noise = NoiseMatrix::new(y).map_err(physics_error)?;
                Ok(GaussianChannel::additive_noise(&noise))
            }
        }
    }
}
