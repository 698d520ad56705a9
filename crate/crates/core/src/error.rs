//! Error type shared by the core library.

use thiserror::Error;

/// Errors produced by DSP kernels, feature extractors, classifiers, and
/// the evaluation pipeline.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("empty input signal")]
    EmptyInput,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("nfft {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("nfft {nfft} shorter than frame length {frame_len}")]
    NfftTooSmall { nfft: usize, frame_len: usize },

    #[error("mel filter {index} collapsed to zero width (n_mels too large for the nfft resolution)")]
    FilterCollapsed { index: usize },

    #[error("silent frame: zero-lag autocorrelation is zero, prediction undefined")]
    SilentFrame,

    #[error("shape mismatch in {op}: left {left:?}, right {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("sequence of {len} frames is shorter than kernel length {kernel_len}")]
    SequenceTooShort { len: usize, kernel_len: usize },

    #[error("class {class} has {count} members, fewer than k = {k} folds")]
    ClassTooSmall {
        class: String,
        count: usize,
        k: usize,
    },

    #[error("empty dataset")]
    EmptyDataset,

    #[error("label {label} outside [0, {n_classes})")]
    LabelOutOfRange { label: usize, n_classes: usize },

    #[error("training aborted: non-finite loss at epoch {epoch}, batch {batch}")]
    NonFiniteLoss { epoch: usize, batch: usize },

    #[error("feature source: {0}")]
    FeatureSource(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
