//! Promptable cell-nucleus segmentation at desk scale.
//!
//! The pipeline: a small ViT-style image encoder whose frozen attention
//! layers carry trainable low-rank (LoRA) adapters on the Q and V
//! projections, a UNet auto-prompt generator that emits per-pixel
//! positive/negative prompt probabilities, two prompt-selection strategies
//! (connected-region centroids and direct thresholded sampling), a frozen
//! point-prompt encoder, and a trainable cross-attention mask decoder.
//! Everything runs on a from-scratch f64 tensor substrate with explicit
//! forward/backward pairs validated against a finite-difference oracle.

pub mod checkpoint;
pub mod datagen;
pub mod decoder;
pub mod encoder;
pub mod error;
pub mod generator;
pub mod layers;
pub mod lora;
pub mod losses;
pub mod model;
pub mod ops;
pub mod pnm;
pub mod prompt_encoder;
pub mod rng;
pub mod selection;
pub mod tensor;
pub mod trainer;

pub use error::{Error, Result};
pub use tensor::{Param, Tensor};
