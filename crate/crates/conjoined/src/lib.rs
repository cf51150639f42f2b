//! A bi-indexed error-handling algebra.
//!
//! A carrier `C<E, A>` holds a computation that either produces a value of
//! type `A` or fails with an error of type `E`. Both indices are treated as
//! first-class monads over the one shared carrier:
//!
//! | index | unit    | sequencing |
//! |-------|---------|------------|
//! | value | `pure`  | `bind`     |
//! | error | `throw` | `catch`    |
//!
//! The two halves interact through the left-zero laws:
//!
//! ```text
//! bind(throw(e), f) == throw(e)
//! catch(pure(a), h) == pure(a)
//! ```
//!
//! Four carriers implement the algebra: [`outcome`] (first-order results),
//! [`parser`] (stateful combinators), [`cont`] (continuation-passing
//! throw/catch), and [`eio`] (error-explicit simulated IO, in direct and
//! Scott-encoded form). On top of these, [`dynamic`] adds a
//! dynamically-dispatched error layer over `eio`, [`applicative`] an
//! error-accumulating applicative, and [`laws`] a seeded, adapter-driven law
//! engine that checks every instance. [`testkit`] holds the brute-force
//! oracles and program generators used to cross-check the implementations.

// Adapters pass operations and generators as Arc'd closures; the resulting
// signatures trip the type-complexity lint by design.
#![allow(clippy::type_complexity)]

pub mod applicative;
pub mod cont;
pub mod dynamic;
pub mod eio;
pub mod laws;
pub mod monoid;
pub mod outcome;
pub mod parser;
pub mod testkit;

pub use monoid::Monoid;
pub use outcome::Outcome;
pub use parser::ErrorLog;
