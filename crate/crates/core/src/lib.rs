//! Exact computations for variation of GIT quotients of pairs and the K-moduli of
//! log del Pezzo pairs: torus GIT walls, binary forms, toric and Neron-Severi surface
//! models, beta-invariants, and the per-degree wall atlas.

pub mod atlas;
pub mod binary;
pub mod data;
pub mod error;
pub mod git;
pub mod kernel;
pub mod kinv;
pub mod report;
pub mod surfaces;

pub use error::{Error, Result};
