//! The shipped suite: every adapter bundled with its checks, ready to run
//! end to end.
//!
//! Each [`ShippedAdapter`] owns a runner producing one report per check
//! suite: the four core checks for every instance, plus the instance's
//! law pack where it has one. Suite counts per adapter:
//!
//! | adapter            | core | pack | reports |
//! |--------------------|------|------|---------|
//! | `outcome`          | 4    | –    | 4       |
//! | `parser/Keep`      | 4    | 1    | 5       |
//! | `parser/Backtrack` | 4    | 1    | 5       |
//! | `cont-ThrowT`      | 4    | –    | 4       |
//! | `eio`              | 4    | –    | 4       |
//! | `seio`             | 4    | 1    | 5       |
//! | `ea-error-index`   | 4    | 1    | 5       |
//!
//! [`run_full_suite`] concatenates the reports of the adapters it is
//! given, in registry order, so the total report count is the sum of the
//! per-adapter suite counts (32 for the full registry).

use crate::laws::adapters::{
    cont_adapter, ea_adapter, eio_adapter, outcome_adapter, parser_adapter, seio_adapter,
};
use crate::laws::engine::core_checks;
use crate::laws::packs::{ea_pack, parser_pack, run_pack, seio_pack};
use crate::laws::report::LawReport;
use crate::parser::CatchMode;

/// A named adapter together with everything needed to run its checks.
pub struct ShippedAdapter {
    /// The adapter's display name.
    pub name: &'static str,
    runner: Box<dyn Fn(u64, u64) -> Vec<LawReport> + Send + Sync>,
}

impl ShippedAdapter {
    /// Runs every check suite for this adapter at the given budget.
    pub fn run(&self, cases: u64, seed: u64) -> Vec<LawReport> {
        (self.runner)(cases, seed)
    }
}

/// The full registry, in canonical order.
pub fn shipped_adapters() -> Vec<ShippedAdapter> {
    vec![
        ShippedAdapter {
            name: "outcome",
            runner: Box::new(|cases, seed| core_checks(&outcome_adapter(), cases, seed)),
        },
        ShippedAdapter {
            name: "parser/Keep",
            runner: Box::new(|cases, seed| {
                let adapter = parser_adapter(CatchMode::Keep);
                let mut reports = core_checks(&adapter, cases, seed);
                reports.push(run_pack(
                    &adapter.name,
                    &parser_pack(CatchMode::Keep),
                    cases,
                    seed,
                ));
                reports
            }),
        },
        ShippedAdapter {
            name: "parser/Backtrack",
            runner: Box::new(|cases, seed| {
                let adapter = parser_adapter(CatchMode::Backtrack);
                let mut reports = core_checks(&adapter, cases, seed);
                reports.push(run_pack(
                    &adapter.name,
                    &parser_pack(CatchMode::Backtrack),
                    cases,
                    seed,
                ));
                reports
            }),
        },
        ShippedAdapter {
            name: "cont-ThrowT",
            runner: Box::new(|cases, seed| core_checks(&cont_adapter(), cases, seed)),
        },
        ShippedAdapter {
            name: "eio",
            runner: Box::new(|cases, seed| core_checks(&eio_adapter(), cases, seed)),
        },
        ShippedAdapter {
            name: "seio",
            runner: Box::new(|cases, seed| {
                let mut reports = core_checks(&seio_adapter(), cases, seed);
                reports.push(run_pack("seio", &seio_pack(), cases, seed));
                reports
            }),
        },
        ShippedAdapter {
            name: "ea-error-index",
            runner: Box::new(|cases, seed| {
                let mut reports = core_checks(&ea_adapter(), cases, seed);
                reports.push(run_pack("ea-error-index", &ea_pack(), cases, seed));
                reports
            }),
        },
    ]
}

/// Runs the given adapters' full check suites and concatenates their
/// reports in order. An empty adapter list yields an empty report list.
pub fn run_full_suite(adapters: &[ShippedAdapter], cases: u64, seed: u64) -> Vec<LawReport> {
    adapters
        .iter()
        .flat_map(|adapter| adapter.run(cases, seed))
        .collect()
}

/// Counts failing cases across a report list.
pub fn total_failures(reports: &[LawReport]) -> usize {
    reports.iter().map(|report| report.failures.len()).sum()
}
