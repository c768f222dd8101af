//! Recording-device identification from audio.
//!
//! The pipeline synthesizes a labeled multi-device corpus, extracts MFCC and
//! Gaussian-supervector features, and trains a parallel spatial-temporal
//! network with attention fusion to predict which device produced a clip.
//! A classical GMM-UBM classifier is included as a baseline.

pub mod config;
pub mod corpus;
pub mod dsp;
pub mod gmm;
pub mod ndnet;
pub mod pstnn;
pub mod seed;
pub mod trainer;
