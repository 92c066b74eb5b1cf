//! Springer representations of the symmetric group computed by equivariant
//! localization.
//!
//! For a nilpotent of Jordan type `λ`, the equivariant cohomology of its
//! Springer fiber is realized as a module of polynomial vectors over the
//! fixed-point set of a subtorus. The symmetric group acts by permuting
//! fixed points; the action descends to ordinary cohomology through the
//! augmentation quotient, where its graded character is read off and checked
//! against an independent Garsia–Procesi presentation.
//!
//! Modules, bottom-up:
//! - [`exactalg`]: rational polynomials and graded echelon linear algebra.
//! - [`symgroup`]: partitions, permutations, the word model of fixed
//!   points, Murnaghan–Nakayama characters.
//! - [`flagmodel`]: Borel presentation of the flag variety and restriction
//!   to fixed points.
//! - [`locengine`]: image module, W-stability, augmentation quotient,
//!   freeness certificate, quotient action and graded characters.
//! - [`springer`]: the type A pipeline and Kostka–Foulkes tables.
//! - [`gporacle`]: Tanisaki ideal quotients as an independent oracle.

pub mod error;
pub mod exactalg;
pub mod flagmodel;
pub mod gporacle;
pub mod locengine;
pub mod serial;
pub mod springer;
pub mod symgroup;

pub use error::{Error, Result};
