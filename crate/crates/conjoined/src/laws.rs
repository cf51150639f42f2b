//! The generic law-checking engine: adapters describe an instance as
//! values (generators, operations, observation), the engine runs every
//! law over derived-seed cases and reports structured results.
//!
//! Submodules:
//!
//! * [`seed`]: deterministic seed derivation, one seed per (law, case).
//! * [`report`]: verdicts, per-law tallies, serialized reports.
//! * [`engine`]: the adapter record, the canonical law list, the four
//!   core checks, and failure replay.
//! * [`adapters`]: the shipped adapters, one per concrete instance.
//! * [`packs`]: instance-specific laws beyond the canonical list.
//! * [`suite`]: the shipped registry and the end-to-end runner.

pub mod adapters;
pub mod engine;
pub mod packs;
pub mod suite;
pub mod report;
pub mod seed;
