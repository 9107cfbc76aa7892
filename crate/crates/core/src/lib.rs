//! Sequentially congruent partitions.
//!
//! A partition `λ = (λ_1, ..., λ_r)` is sequentially congruent when
//! `λ_i ≡ λ_{i+1} (mod i)` for every `i < r` and `λ_r ≡ 0 (mod r)`. This
//! crate provides the bijection `π` between all partitions of `n` and the
//! sequentially congruent partitions with largest part `n`, the companion
//! map `σ` (with `σ ∘ π` equal to conjugation), the frequency-scaling
//! bijections onto `P_B(A)`, exhaustive enumerators for each family, and
//! exact truncated power series for the matching generating functions.

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod maps;
pub mod partition;
pub mod predicates;
pub mod qseries;
pub mod sequence;

pub use enumerate::{count, enumerate, FamilyDescriptor};
pub use error::{Error, Result};
pub use maps::{pi, pi_inverse, sigma, sigma_inverse, sigma_pi, Side};
pub use partition::{from_frequencies, from_parts, FrequencyView, Partition};
pub use predicates::ViolationReport;
pub use qseries::{BivariateSeries, WeightSpec};
pub use sequence::SequenceSpec;
