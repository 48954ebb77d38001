//! Exact construction and analysis of (+)-twisted generalized Reed-Solomon
//! codes and their extended variants over GF(p^m).
//!
//! Everything here is `no_std` + `alloc`; file formats and the command-line
//! front end live in the `etgrs` crate.

#![no_std]

extern crate alloc;

pub mod analysis;
pub mod codes;
pub mod counting;
pub mod error;
pub mod gf;
pub mod grs;
pub mod linalg;
pub mod poly;
pub mod selfdual;
pub mod tgrs;

pub use analysis::{etgrs_classify, etgrs_weight_distribution, non_grs_certificate, schur_square_closed, NonGrsCertificate};
pub use codes::{Classification, LinearCode, SelfOrthogonality, WeightDistribution};
pub use error::{Error, Result};
pub use gf::{Elem, Field};
pub use linalg::Matrix;
pub use num_bigint::BigUint;
pub use poly::Poly;
pub use selfdual::{Construction, Duality, DualityCertificate, SelfOrthWitness};
pub use tgrs::{CodeSpec, TwistedPolySpace};
