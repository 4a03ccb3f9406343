//! Bicomplex numbers, the bicomplex Bargmann space `F^{2,ν}(𝔹ℂ)`, and the
//! Segal–Bargmann and fractional Fourier transforms built on top of it.
//!
//! A bicomplex number `Z = z1 + j z2` is stored by its four real components.
//! Most operations go through the idempotent decomposition
//! `Z = α e+ + β e−`, where `α = z1 − i z2`, `β = z1 + i z2`, which turns
//! bicomplex analysis into a pair of independent complex problems.

pub mod bargmann;
pub mod bicomplex;
pub mod error;
pub mod frft;
pub mod hermite;
pub mod quadrature;
pub mod transforms;
pub mod verify;

pub use bicomplex::{Bicomplex, IdempotentPair};
pub use error::{BcError, Result};
pub use quadrature::{gauss_hermite, QuadratureRule};
