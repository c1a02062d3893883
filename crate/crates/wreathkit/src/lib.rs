//! Exact computational algebra for wreath-style structures over finite
//! dimensional vector spaces.
//!
//! Everything is computed with exact scalars — arbitrary-precision rationals
//! or prime-field residues — over tensor words of finite-dimensional
//! generators. The crate provides:
//!
//! * a strict symmetric monoidal category of dense matrices ([`mor`], [`word`]),
//! * monoid / comonoid / bimonoid law checkers ([`structures`]),
//! * wreaths around a monoid, wreath products and distributive laws ([`wreath`]),
//! * finite monoid extensions, their classifying data and cocycle search
//!   ([`extension`]),
//! * mixed opwreaths, their Kleisli category and convolution ([`mixed`]),
//! * twisted coactions and the opmonoidal structure they induce ([`coaction`]),
//! * a JSON bundle format ([`bundle`]) and a command-line front end ([`cli`]).
//!
//! Every law checker returns an [`report::AxiomReport`] listing each axiom
//! with a pass/fail verdict and, on failure, a concrete basis witness.

pub mod bundle;
pub mod cli;
pub mod coaction;
pub mod corpus;
pub mod error;
pub mod extension;
pub mod mixed;
pub mod mor;
pub mod report;
pub mod scalar;
pub mod structures;
pub mod word;
pub mod wreath;

pub use error::{Error, Result};
pub use mor::Mor;
pub use report::{AxiomEntry, AxiomReport, Witness};
pub use scalar::{FieldDescriptor, Scalar};
pub use word::{Generator, ObjWord};
