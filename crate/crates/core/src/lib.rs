//! Numerical core for geometry-guided cross-view feature refinement.
//!
//! The crate is organized around a small set of dense raster types and pure
//! functions over them:
//!
//! - [`camera`] — pinhole projection, unprojection, and cross-view
//!   reprojection in 64-bit floating point.
//! - [`correspondence`] — dense target→reference correspondence fields built
//!   by forward splatting, plus field downsampling.
//! - [`featuremap`] / [`layers`] — the `FeatureMap` tensor type and the
//!   differentiable primitives (bilinear sampling, linear / patch-linear
//!   projections, softmax, small MLPs) with hand-written backward passes.
//! - [`gca`] — windowed geometry-guided cross-view attention with proxy
//!   queries, gated fusion, and a global attention baseline.
//! - [`losses`] — reconstruction, Gram, and fixed-extractor perceptual terms.
//! - [`toyscene`] — a deterministic synthetic multi-view scene generator with
//!   exact depth and a seeded corruption model.
//! - [`refiner`] — a one-step refiner network composed from the pieces above.
//! - [`gradcheck`] — a central-difference oracle used to verify every
//!   backward pass in the crate.
//!
//! Everything here is `no_std + alloc`; IO, file formats, and the CLI live in
//! the companion `crossview-cli` crate. All transcendental functions route
//! through `libm` so results are bit-identical across platforms and build
//! configurations.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod camera;
pub mod correspondence;
pub mod error;
pub mod featuremap;
pub mod gca;
pub mod gradcheck;
pub mod layers;
pub mod losses;
pub mod math;
pub mod metrics;
pub mod refiner;
pub mod toyscene;

pub use camera::{CameraIntrinsics, CameraModel, CameraPose, Pixel2, Point3};
pub use correspondence::{CorrespondenceField, DepthRaster};
pub use error::{Error, Result};
pub use featuremap::FeatureMap;
pub use gca::{GcaOutput, GcaParams, QuerySource};
pub use layers::{LinearWeights, MlpWeights};
pub use losses::{FeatureExtractor, LossWeights};
pub use refiner::{AttentionVariant, ToyRefiner};
