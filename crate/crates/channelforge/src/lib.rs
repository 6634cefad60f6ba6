//! channelforge: finite-dimensional quantum channels as data.
//!
//! The crate models completely positive (and deliberately not-completely
//! positive) linear maps on n×n density matrices through their standard
//! interchangeable representations — superoperator (A-form), Choi matrix
//! (B-form), Kraus operator sums, process (χ) matrices, Stinespring
//! dilations, and operator sum-difference forms — with conversions between
//! all of them, validation (TP/CP/unitality/Hermiticity preservation),
//! qubit Bloch-ball geometry, and Lindblad-type Markovian dynamics.
//!
//! Layout:
//! * [`mat`] / [`eig`] — dense complex matrices, vectorization toolkit,
//!   Jacobi Hermitian eigensolver,
//! * [`rep`] — the representations and conversions,
//! * [`props`] — validation and positivity-domain probing,
//! * [`qubit`] — Bloch vectors, affine maps, the named channel zoo,
//! * [`dynamics`] — generators, integrators, channel extraction,
//! * [`io`] — the JSON/CSV wire formats,
//! * [`random`] — seeded sampling (Haar unitaries, random channels, states),
//! * [`tol`] — every numerical tolerance in one place.

pub mod error;
pub mod tol;

pub mod mat;

pub mod eig;

pub mod rep;

pub mod props;

pub mod qubit;

pub mod dynamics;

pub mod io;

pub mod random;

pub use error::{Error, Result};
pub use mat::{c64, Complex64, ComplexMatrix, Factor};
pub use rep::{Channel, RepKind, Representation};
