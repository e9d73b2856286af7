//! State-vector simulation of the hidden subgroup problem on dihedral groups.
//!
//! The crate covers the whole pipeline for a hidden reflection subgroup
//! H_a = ⟨y x^a⟩ ≤ D_n:
//!
//! - [`group`]: exact arithmetic in D_n in the form y^β x^α.
//! - [`representations`]: the irreps φ_{u,v} and ρ_k, coset sums, Schur checks.
//! - [`qft`]: the dense nonabelian Fourier transform and strong Fourier sampling.
//! - [`hsp`]: separating functions, coset states and exact outcome tables.
//! - [`dcp`]: dihedral coset samples and their inner products.
//! - [`ettinger_hoyer`]: cos²/sin² statistics and likelihood recovery of a.
//! - [`cloning`]: known-slope cloning, slope recovery from clones, and
//!   numerical no-cloning witnesses.
//! - [`experiments`]: reproducible experiment reports used by the `dhsp` binary.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory:
//!
//! ```bash
//! cargo run --release --example irreps_and_schur
//! cargo run --release --example eh_slope_recovery -- 64
//! ```

pub mod cloning;
pub mod dcp;
pub mod distribution;
pub mod error;
pub mod ettinger_hoyer;
pub mod experiments;
pub mod group;
pub mod hsp;
pub mod qft;
pub mod representations;
pub mod rng;

pub use distribution::OutcomeDistribution;
pub use error::{Error, Result};
pub use group::{DihedralElement, DihedralGroup, ReflectionSubgroup};
pub use representations::{IrrepLabel, RepMatrix};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
