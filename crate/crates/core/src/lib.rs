//! Exact-arithmetic engine for Steiner t-design parameter admissibility and
//! for the case-by-case elimination of block-transitive Steiner 7-designs.
//!
//! The engine has three layers:
//!
//! * combinatorial admissibility of a parameter tuple t-(v,k,lambda)
//!   ([`admissibility`], on top of [`exactmath`]);
//! * the catalog of finite 3-homogeneous permutation groups ([`catalog`])
//!   together with desk-scale permutation machinery used to cross-validate
//!   it ([`permgroup`], [`designs`]);
//! * the elimination sweep itself ([`elimination`]), which walks every
//!   candidate (group, k) pair up to a degree bound and emits a replayable
//!   certificate for each eliminated case.
//!
//! All arithmetic is exact. Certificates carry enough named integers that an
//! independent checker can recompute the failed condition from scratch.

pub mod admissibility;
pub mod catalog;
pub mod cli;
pub mod designs;
pub mod elimination;
pub mod error;
pub mod exactmath;
pub mod permgroup;

pub use error::{Error, Result};
