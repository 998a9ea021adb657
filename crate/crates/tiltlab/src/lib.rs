//! tiltlab: exact computations with n-representation-finite bound quiver
//! algebras.
//!
//! The library models path algebras of finite acyclic quivers bound by
//! admissible relation ideals and computes their Cartan and Coxeter data,
//! Euler and Tits forms, cluster-roots with Φ-positivity classification,
//! n-APR tilt mutations of quivers with relations, reflection functors on
//! explicit representations, and homological operators (minimal
//! resolutions, Ext dimensions, the n-Auslander-Reiten translations).
//! All arithmetic is exact over the rationals.

pub mod algebra;
pub mod error;
pub mod forms;
pub mod linalg;
pub mod mutation;
pub mod reflect;
pub mod rep;
pub mod roots;

pub use error::{Error, Result};
