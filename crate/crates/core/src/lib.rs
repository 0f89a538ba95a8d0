//! Core algorithms for a census of primitive number fields of degree 4..=11.
//!
//! The crate is organised as a pipeline over monic integer polynomials:
//!
//! * [`exactmath`] — exact polynomial and integer arithmetic: resultants,
//!   factorization mod p and over Q, Sturm chains, certified complex root
//!   boxes, integer factorization.
//! * [`hunter`] — complete enumeration boxes for generators of primitive
//!   fields with bounded discriminant (trace/T2 bounds, sharding, resume
//!   cursors).
//! * [`orders`] — p-maximal orders: Dedekind criterion, the Pohst–Zassenhaus
//!   enlargement loop, certified field discriminants.
//! * [`galois`] — Galois group labelling by resolvents, Frobenius cycle-type
//!   sampling and Jordan-style certificates.
//! * [`canon`] — canonical minimal-T2 generating polynomials (lattice
//!   reduction plus exact verification) and isomorphism tests.
//! * [`census`] — in-memory field stores, counting curves, error-term
//!   diagnostics and secondary-term fits.
//! * [`heuristics`] — mass-formula density constants, prime zeta values,
//!   and class-group distribution predictions.
//!
//! Everything in this crate is deterministic: the only randomness is a
//! seeded splitting sequence inside the finite-field factorizer, derived
//! from the input polynomial itself. All heavy computation is exact
//! (big-integer or dyadic-interval); floating point only steers search.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod exactmath;
pub mod galois;
pub mod heuristics;
pub mod hunter;
pub mod orders;
