//! Instance-specific law packs: properties the canonical list cannot
//! state because they involve operations beyond the four operators
//! (alternation, repetition, encoding round trips, accumulation).
//!
//! A [`PackLaw`] is one seeded, self-contained case function plus a
//! stable law index for seed derivation; [`run_pack`] folds a pack into
//! the same report shape the core checks produce, so suites concatenate
//! cleanly.
//!
//! Pack law indices start at 100 so their case-seed streams never collide
//! with the canonical laws' streams.
//!
//! | pack        | laws                                                         |
//! |-------------|--------------------------------------------------------------|
//! | parser      | alt identities and associativity, repetition unfoldings      |
//! | seio        | Scott bisimulation, round trip through `to_scott`/`from_scott` |
//! | ea          | applicative laws, double-failure accumulation, fold oracle   |

use std::sync::Arc;

use crate::applicative::{ea_apply, ea_pure, map_ap, throw_ea, EA};
use crate::eio::{from_scott, to_scott};
use crate::laws::adapters::{parser_adapter, small_log, small_value, world_panel};
use crate::laws::engine::Gen;
use crate::laws::report::{LawCase, LawReport};
use crate::laws::seed::{derive_case_seed, mix, rng_from, sub_seed};
use crate::monoid::Monoid;
use crate::outcome::Outcome;
use crate::parser::{
    alt, alt_empty, bind_p, char_p, many_p, or_else, pure_p, some_p, CatchMode, ErrorLog,
    Parser,
};
use crate::testkit::{
    compile_eio, compile_seio, ea_fold_oracle, gen_prog, gen_world, parser_observation_inputs,
    EffObs,
};

/// The two rendered sides of one pack case.
pub struct CaseOutcome {
    /// Whether the sides agreed.
    pub pass: bool,
    /// Rendered left side.
    pub lhs: String,
    /// Rendered right side.
    pub rhs: String,
}

impl CaseOutcome {
    /// Builds the outcome by comparing the two renderings.
    pub fn compare(lhs: String, rhs: String) -> Self {
        CaseOutcome {
            pass: lhs == rhs,
            lhs,
            rhs,
        }
    }
}

/// One instance-specific law: an identifier, a seed-stream index, and a
/// case function from derived seed to verdict.
pub struct PackLaw {
    /// Stable identifier, echoed in reports.
    pub id: &'static str,
    /// Seed-stream index; unique per law, 100 or above.
    pub law_index: u64,
    /// Runs one case at the given derived seed.
    pub case: Arc<dyn Fn(u64) -> CaseOutcome + Send + Sync>,
}

/// Runs every pack law for `cases` cases and folds the verdicts into a
/// report under the given adapter name.
pub fn run_pack(adapter_name: &str, laws: &[PackLaw], cases: u64, root_seed: u64) -> LawReport {
    let mut report = LawReport::new(adapter_name.to_string(), cases);
    for law in laws {
        let mut pass = 0;
        let mut fail = 0;
        let mut failures = Vec::new();
        for case in 0..cases {
            let case_seed = derive_case_seed(root_seed, law.law_index, case);
            let outcome = (law.case)(case_seed);
            if outcome.pass {
                pass += 1;
            } else {
                fail += 1;
                failures.push(LawCase::fail(law.id, case_seed, outcome.lhs, outcome.rhs));
            }
        }
        report.push_law(law.id, pass, fail, failures);
    }
    report
}

/// Renders a parser the way its mode's adapter does: full results under
/// Keep, error component on failure under Backtrack. Generic in the value
/// type so repetition laws (which parse into vectors) share the scoping.
fn render_parser<A: std::fmt::Debug>(
    p: &Parser<String, ErrorLog, A>,
    mode: CatchMode,
) -> String {
    parser_observation_inputs()
        .into_iter()
        .map(|s| match p.run(s) {
            Outcome::Ok((v, rest)) => format!("Ok(({v:?}, {rest:?}))"),
            Outcome::Fail(f) => match mode {
                CatchMode::Keep => format!("Fail({f:?})"),
                CatchMode::Backtrack => format!("Fail({:?})", f.0),
            },
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

/// A parser guaranteed to consume on success, so the repetition
/// unfolding is not truncated by the no-progress guard.
fn consuming_parser(seed: u64) -> Parser<String, ErrorLog, i64> {
    match mix(seed) % 3 {
        0 => char_p('a').map(|_| 1),
        1 => char_p('b').map(|_| 2),
        _ => bind_p(char_p('a').map(|_| 10), |ten| char_p('b').map(move |_| ten + 2)),
    }
}

/// Alternation and repetition laws for the parser instance in the given
/// mode, compared under that mode's documented observation.
pub fn parser_pack(mode: CatchMode) -> Vec<PackLaw> {
    let gen: Gen<Parser<String, ErrorLog, i64>> =
        Arc::clone(&parser_adapter(mode).gen_computation);

    let alt_left = {
        let gen = Arc::clone(&gen);
        PackLaw {
            id: "alt-left-identity",
            law_index: 100,
            case: Arc::new(move |seed| {
                let p = gen(sub_seed(seed, 0));
                let lhs = alt(alt_empty(), p.clone(), mode);
                CaseOutcome::compare(render_parser(&lhs, mode), render_parser(&p, mode))
            }),
        }
    };
    let alt_right = {
        let gen = Arc::clone(&gen);
        PackLaw {
            id: "alt-right-identity",
            law_index: 101,
            case: Arc::new(move |seed| {
                let p = gen(sub_seed(seed, 0));
                let lhs = alt(p.clone(), alt_empty(), mode);
                CaseOutcome::compare(render_parser(&lhs, mode), render_parser(&p, mode))
            }),
        }
    };
    let alt_assoc = {
        let gen = Arc::clone(&gen);
        PackLaw {
            id: "alt-associativity",
            law_index: 102,
            case: Arc::new(move |seed| {
                let p = gen(sub_seed(seed, 0));
                let q = gen(sub_seed(seed, 1));
                let r = gen(sub_seed(seed, 2));
                let lhs = alt(alt(p.clone(), q.clone(), mode), r.clone(), mode);
                let rhs = alt(p, alt(q, r, mode), mode);
                CaseOutcome::compare(render_parser(&lhs, mode), render_parser(&rhs, mode))
            }),
        }
    };
    let many_def = {
        let gen = Arc::clone(&gen);
        PackLaw {
            id: "many-is-some-or-nothing",
            law_index: 103,
            case: Arc::new(move |seed| {
                let p = gen(sub_seed(seed, 0));
                let lhs = many_p::<_, _, ErrorLog, _>(p.clone());
                let rhs = or_else(some_p(p), pure_p(Vec::new()));
                CaseOutcome::compare(render_parser(&lhs, mode), render_parser(&rhs, mode))
            }),
        }
    };
    let some_def = PackLaw {
        id: "some-unfolds-once",
        law_index: 104,
        case: Arc::new(move |seed| {
            let p = consuming_parser(sub_seed(seed, 0));
            let lhs = some_p(p.clone());
            let rhs = {
                let tail = p.clone();
                bind_p(p, move |a| {
                    many_p::<_, _, ErrorLog, _>(tail.clone()).map(move |mut v| {
                        v.insert(0, a);
                        v
                    })
                })
            };
            CaseOutcome::compare(render_parser(&lhs, mode), render_parser(&rhs, mode))
        }),
    };
    vec![alt_left, alt_right, alt_assoc, many_def, some_def]
}

fn render_effobs(pairs: &[EffObs]) -> String {
    pairs
        .iter()
        .map(|pair| format!("{pair:?}"))
        .collect::<Vec<_>>()
        .join(" | ")
}

/// Encoding-equivalence laws for the Scott instance: direct bisimulation
/// of randomly generated programs, and the conversion round trip.
pub fn seio_pack() -> Vec<PackLaw> {
    let bisim = PackLaw {
        id: "scott-bisimulation",
        law_index: 110,
        case: Arc::new(move |seed| {
            let mut rng = rng_from(sub_seed(seed, 0));
            let budget = 3 + (mix(sub_seed(seed, 1)) % 18) as u32;
            let prog = gen_prog(&mut rng, budget);
            let world = gen_world(&mut rng);
            let direct = compile_eio(&prog).run(world.clone());
            let scott = compile_seio(&prog).run(
                Arc::new(|e, w| (Outcome::Fail(e), w)),
                Arc::new(|a, w| (Outcome::Ok(a), w)),
                world,
            );
            CaseOutcome::compare(format!("{direct:?}"), format!("{scott:?}"))
        }),
    };
    let round_trip = PackLaw {
        id: "scott-round-trip",
        law_index: 111,
        case: Arc::new(move |seed| {
            let mut rng = rng_from(sub_seed(seed, 0));
            let budget = 3 + (mix(sub_seed(seed, 1)) % 8) as u32;
            let m = compile_eio(&gen_prog(&mut rng, budget));
            let round = from_scott(to_scott::<EffObs, _, _>(m.clone()));
            let run_all = |m: &crate::eio::EIO<String, i64>| {
                world_panel()
                    .into_iter()
                    .map(|w| m.run(w))
                    .collect::<Vec<_>>()
            };
            CaseOutcome::compare(render_effobs(&run_all(&round)), render_effobs(&run_all(&m)))
        }),
    };
    vec![bisim, round_trip]
}

const EA_FNS: [fn(i64) -> i64; 3] = [|x| x + 1, |x| x * 2, |x| -x];

fn gen_ea(seed: u64) -> EA<ErrorLog, i64> {
    if mix(seed).is_multiple_of(3) {
        throw_ea(small_log(sub_seed(seed, 10)))
    } else {
        ea_pure(small_value(sub_seed(seed, 11)))
    }
}

fn gen_ea_fn(seed: u64) -> EA<ErrorLog, fn(i64) -> i64> {
    if mix(seed).is_multiple_of(3) {
        throw_ea(small_log(sub_seed(seed, 12)))
    } else {
        ea_pure(EA_FNS[(mix(sub_seed(seed, 13)) % 3) as usize])
    }
}

fn gen_int_list(seed: u64) -> Vec<i64> {
    let len = (mix(sub_seed(seed, 0)) % 7) as usize;
    (0..len)
        .map(|i| (mix(sub_seed(seed, 1 + i as u64)) % 5) as i64 - 2)
        .collect()
}

/// Accumulation and applicative laws for the error-accumulating instance.
pub fn ea_pack() -> Vec<PackLaw> {
    let identity = PackLaw {
        id: "ap-identity",
        law_index: 120,
        case: Arc::new(|seed| {
            let v = gen_ea(sub_seed(seed, 0));
            let lhs = ea_apply(ea_pure(|x: i64| x), v.clone());
            CaseOutcome::compare(format!("{lhs:?}"), format!("{v:?}"))
        }),
    };
    let homomorphism = PackLaw {
        id: "ap-homomorphism",
        law_index: 121,
        case: Arc::new(|seed| {
            let f = EA_FNS[(mix(sub_seed(seed, 0)) % 3) as usize];
            let x = small_value(sub_seed(seed, 1));
            let lhs: EA<ErrorLog, i64> = ea_apply(ea_pure(f), ea_pure(x));
            let rhs: EA<ErrorLog, i64> = ea_pure(f(x));
            CaseOutcome::compare(format!("{lhs:?}"), format!("{rhs:?}"))
        }),
    };
    let interchange = PackLaw {
        id: "ap-interchange",
        law_index: 122,
        case: Arc::new(|seed| {
            let u = gen_ea_fn(sub_seed(seed, 0));
            let y = small_value(sub_seed(seed, 1));
            let lhs = ea_apply(u.clone(), ea_pure(y));
            let rhs = ea_apply(ea_pure(move |g: fn(i64) -> i64| g(y)), u);
            CaseOutcome::compare(format!("{lhs:?}"), format!("{rhs:?}"))
        }),
    };
    let composition = PackLaw {
        id: "ap-composition",
        law_index: 123,
        case: Arc::new(|seed| {
            let u = gen_ea_fn(sub_seed(seed, 0));
            let v = gen_ea_fn(sub_seed(seed, 1));
            let w = gen_ea(sub_seed(seed, 2));
            let compose = |f: fn(i64) -> i64| move |g: fn(i64) -> i64| move |x: i64| f(g(x));
            let lhs = ea_apply(
                ea_apply(ea_apply(ea_pure(compose), u.clone()), v.clone()),
                w.clone(),
            );
            let rhs = ea_apply(u, ea_apply(v, w));
            CaseOutcome::compare(format!("{lhs:?}"), format!("{rhs:?}"))
        }),
    };
    let accumulation = PackLaw {
        id: "double-failure-accumulates",
        law_index: 124,
        case: Arc::new(|seed| {
            let a = small_log(sub_seed(seed, 0));
            let b = small_log(sub_seed(seed, 1));
            let lhs = ea_apply::<ErrorLog, i64, i64, fn(i64) -> i64>(
                throw_ea(a.clone()),
                throw_ea(b.clone()),
            );
            let rhs: EA<ErrorLog, i64> = throw_ea(a.combine(b));
            CaseOutcome::compare(format!("{lhs:?}"), format!("{rhs:?}"))
        }),
    };
    let fold_oracle = PackLaw {
        id: "map-ap-fold-oracle",
        law_index: 125,
        case: Arc::new(|seed| {
            let xs = gen_int_list(sub_seed(seed, 0));
            let kind = mix(sub_seed(seed, 1)) % 4;
            let f = move |x: &i64| -> EA<ErrorLog, i64> {
                match kind {
                    0 => ea_pure(x * 2),
                    1 if x % 2 != 0 => throw_ea(ErrorLog::of(format!("odd {x}"))),
                    1 => ea_pure(*x),
                    2 if *x == 2 => throw_ea(ErrorLog::of("two")),
                    2 => ea_pure(*x),
                    _ => throw_ea(ErrorLog::of(format!("no {x}"))),
                }
            };
            let lhs = map_ap(f, &xs);
            let rhs = ea_fold_oracle(f, &xs);
            CaseOutcome::compare(format!("{lhs:?}"), format!("{rhs:?}"))
        }),
    };
    vec![
        identity,
        homomorphism,
        interchange,
        composition,
        accumulation,
        fold_oracle,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parser_packs_hold_in_both_modes_on_a_smoke_budget() {
        for mode in [CatchMode::Keep, CatchMode::Backtrack] {
            let report = run_pack("parser", &parser_pack(mode), 40, 42);
            assert!(report.all_pass(), "{mode:?}: {}", report.to_json());
            assert_eq!(report.results.len(), 5);
            assert_eq!(report.total_cases(), 200);
        }
    }

    #[test]
    fn seio_pack_holds_on_a_smoke_budget() {
        let report = run_pack("seio", &seio_pack(), 40, 42);
        assert!(report.all_pass(), "{}", report.to_json());
        assert_eq!(report.results.len(), 2);
    }

    #[test]
    fn ea_pack_holds_on_a_smoke_budget() {
        let report = run_pack("ea", &ea_pack(), 60, 42);
        assert!(report.all_pass(), "{}", report.to_json());
        assert_eq!(report.results.len(), 6);
    }

    #[test]
    fn a_broken_pack_law_reports_its_observations() {
        let broken = PackLaw {
            id: "always-unequal",
            law_index: 990,
            case: Arc::new(|seed| CaseOutcome::compare(format!("L{seed}"), "R".to_string())),
        };
        let report = run_pack("demo", &[broken], 3, 5);
        assert!(!report.all_pass());
        assert_eq!(report.failures.len(), 3);
        let first = &report.failures[0];
        assert_eq!(first.law_id, "always-unequal");
        assert_eq!(first.lhs_obs.as_deref(), Some(format!("L{}", first.seed).as_str()));
        assert_eq!(first.rhs_obs.as_deref(), Some("R"));
    }

    #[test]
    fn pack_case_seeds_replay_deterministically() {
        let laws = ea_pack();
        let a = run_pack("ea", &laws, 30, 7).to_json();
        let b = run_pack("ea", &laws, 30, 7).to_json();
        assert_eq!(a, b);
    }
}
