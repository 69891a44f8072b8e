//! Ballistic quantum propagators, energy Green functions, quantum-source
//! currents, and semiclassical closed-orbit machinery.
//!
//! The crate works in natural units (`hbar = m = e = 1` unless a function
//! takes them explicitly); all SI conversion lives in the CLI front end.
//! Everything here is pure and reentrant: no globals, no interior mutability,
//! safe for unrestricted parallel invocation.

pub mod atomlaser;
pub mod closedorbit;
pub mod error;
pub mod green;
pub mod linalg;
pub mod propagator;
pub mod qhe;
pub mod quad;
pub mod rootfind;
pub mod shutter;
pub mod source;
pub mod specialfns;
pub mod stm;

pub use error::{CoreError, Result};
pub use num_complex::Complex64;
