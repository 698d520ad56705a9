//! Decoded audio carrier.

use crate::error::{CoreError, Result};

/// A decoded mono waveform.
///
/// Samples are normalized amplitudes in `[-1, 1]`; integer PCM is scaled by
/// `2^(bits-1)` at load time and stereo sources are averaged per sample, so
/// two clips with the same content compare directly regardless of container
/// details.
#[derive(Debug, Clone, PartialEq)]
pub struct AudioClip {
    pub samples: Vec<f64>,
    pub sample_rate_hz: u32,
    pub source_path: String,
}

impl AudioClip {
    pub fn new(samples: Vec<f64>, sample_rate_hz: u32, source_path: impl Into<String>) -> Self {
        Self {
            samples,
            sample_rate_hz,
            source_path: source_path.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn duration_s(&self) -> f64 {
        self.samples.len() as f64 / self.sample_rate_hz as f64
    }

    /// Check the carrier invariants: nonempty, positive rate, amplitudes
    /// within `[-1, 1]` up to rounding slack.
    pub fn validate(&self) -> Result<()> {
        if self.samples.is_empty() {
            return Err(CoreError::EmptyInput);
        }
        if self.sample_rate_hz == 0 {
            return Err(CoreError::InvalidParameter(format!(
                "sample rate must be positive ({})",
                self.source_path
            )));
        }
        if let Some(s) = self
            .samples
            .iter()
            .find(|s| !s.is_finite() || s.abs() > 1.0 + 1e-6)
        {
            return Err(CoreError::InvalidParameter(format!(
                "sample {s} out of range in {}",
                self.source_path
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_accepts_normalized_audio() {
        let clip = AudioClip::new(vec![0.0, 0.5, -1.0, 1.0], 48_000, "mem");
        assert!(clip.validate().is_ok());
        assert!((clip.duration_s() - 4.0 / 48_000.0).abs() < 1e-12);
    }

    #[test]
    fn validate_rejects_empty_and_out_of_range() {
        assert!(AudioClip::new(vec![], 48_000, "mem").validate().is_err());
        assert!(AudioClip::new(vec![1.5], 48_000, "mem").validate().is_err());
        assert!(AudioClip::new(vec![0.1], 0, "mem").validate().is_err());
    }
}
