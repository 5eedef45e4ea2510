//! Exact-arithmetic Fourier expansions of degree-2 Siegel modular forms.
//!
//! A degree-2 Siegel modular form is stored here as an *equivariant
//! coefficient map*: a map `C` from positive semidefinite integral binary
//! quadratic forms to a coefficient module, satisfying
//! `C(A.f) = chi(A) A.C(f)` for all `A` in GL(2,Z) and a linear character
//! `chi`.  Only values at GL(2,Z)-reduced forms are stored; everything else
//! is recovered through reduction.
//!
//! The crate provides the reduction theory (`quadform`), the four formal
//! characters and coefficient modules (`coeff`), the central container and
//! its arithmetic (`fsmf`), degree-1 building blocks (`qseries`), index-1
//! Jacobi forms (`jacobi`), Maass lifts and Eisenstein series (`lifts`),
//! lattice theta series and theta constants (`theta`), differential-operator
//! constructions (`brackets`), Hecke operators (`hecke`), and the generator
//! catalogs for levels 1 through 4 (`rings`).

pub mod brackets;
pub mod coeff;
pub mod error;
pub mod fsmf;
pub mod hecke;
pub mod jacobi;
pub mod lifts;
pub mod linalg;
pub mod qseries;
pub mod quadform;
pub mod rat;
pub mod rings;
pub mod theta;

pub use coeff::{CoeffValue, FormalCharacter, HomPoly, ValueModule};
pub use error::Error;
pub use fsmf::{FormalSMF, RawFourier};
pub use quadform::{BinQF, UnimodMat};
pub use rat::{Qi, Rat};
