//! Marksheet digitization library.
//!
//! Turns a photographed or scanned grid-ruled marksheet into a structured
//! table: classical image processing recovers the row/column ruling, each
//! cell is cropped and handed to a pluggable recognizer (a from-scratch
//! CNN digit classifier or a nearest-centroid baseline), and the recovered
//! table is compared against ground truth with cell-outcome counts,
//! precision/recall/F1 and CER/WER.
//!
//! The crate is organized along the pipeline stages:
//!
//! - [`imaging`] — PGM/PPM codecs, grayscale/resize/blur/threshold and
//!   binary morphology.
//! - [`grid`] — connected components, line position recovery, the grid
//!   model, cell extraction and debug overlays.
//! - [`recognizer`] — tensors, conv/pool/FC layers with backprop, SGD
//!   training, weight serialization and the centroid baseline.
//! - [`eval`] — table comparison, P/R/F1/accuracy, Levenshtein, CER/WER
//!   and report output.
//! - [`datagen`] — deterministic synthetic sheet generation, procedural
//!   digit glyphs and augmentations.
//! - [`pipeline`] — configuration plus the end-to-end `digitize`
//!   orchestration used by the CLI and the browser demo.

pub mod datagen;
pub mod error;
pub mod eval;
pub mod grid;
pub mod imaging;
pub mod pipeline;
pub mod recognizer;

pub use error::{Error, Result};
