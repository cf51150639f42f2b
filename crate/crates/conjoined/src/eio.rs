//! Error-explicit effectful computation over a deterministic simulated
//! world, in two realizations: direct state passing ([`EIO`]) and a
//! Scott-encoded double-continuation form ([`SEIO`]).
//!
//! A [`World`] is the whole mutable universe these programs see: a queue
//! of pending input lines, an append-only output log, and a step counter.
//! An `EIO<E, A>` maps a world to an [`Outcome`] paired with the
//! successor world; an `SEIO<R, E, A>` instead takes one consumer per
//! verdict and invokes exactly one of them exactly once. [`to_scott`] and
//! [`from_scott`] convert between the two, and the test suite bisimulates
//! random programs across both forms.
//!
//! Two semantic commitments worth calling out:
//!
//! * `catch` does not roll the world back: the handler starts from the
//!   failure world, so effects performed before a throw persist.
//! * [`read_line`] increments the tick even when input is exhausted, so
//!   failed attempts are observable in the final world.
//!
//! Law sheet (observation: run on a panel of worlds, comparing the full
//! `(Outcome, World)` pair structurally):
//!
//! | law                  | statement                                          |
//! |----------------------|----------------------------------------------------|
//! | value left identity  | `eio_bind(eio_pure(a), f) == f(a)`                 |
//! | value right identity | `eio_bind(m, eio_pure) == m`                       |
//! | value associativity  | `eio_bind(eio_bind(m, f), g) == eio_bind(m, f;g)`  |
//! | error left identity  | `catch_eio(throw_eio(e), h) == h(e)`               |
//! | error right identity | `catch_eio(m, throw_eio) == m`                     |
//! | error associativity  | `catch_eio(catch_eio(m, h), k) == catch_eio(m, h;k)` |
//! | throw left zero      | `eio_bind(throw_eio(e), f) == throw_eio(e)`        |
//! | pure left zero       | `catch_eio(eio_pure(a), h) == eio_pure(a)`         |
//!
//! and the same eight for the `seio_*` family.

use std::collections::VecDeque;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::outcome::Outcome;

/// The simulated universe: pending input, written output, and a step
/// counter. Operations never reorder existing output, and the tick never
/// decreases across a run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct World {
    /// Lines not yet consumed by [`read_line`], front first.
    #[serde(default)]
    pub input: VecDeque<String>,
    /// Lines written so far, in write order.
    #[serde(default)]
    pub output: Vec<String>,
    /// Count of primitive effect steps taken so far.
    #[serde(default)]
    pub tick: u64,
}

impl World {
    /// A world with no input, no output, and tick zero.
    pub fn empty() -> Self {
        World::default()
    }

    /// A fresh world holding the given input lines.
    pub fn with_input<I, T>(lines: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        World {
            input: lines.into_iter().map(Into::into).collect(),
            output: Vec::new(),
            tick: 0,
        }
    }
}

/// A computation that, given a world, produces an outcome and the
/// possibly-advanced successor world.
pub struct EIO<E, A> {
    run: Arc<dyn Fn(World) -> (Outcome<E, A>, World) + Send + Sync>,
}

impl<E, A> Clone for EIO<E, A> {
    fn clone(&self) -> Self {
        EIO {
            run: Arc::clone(&self.run),
        }
    }
}

impl<E, A> EIO<E, A> {
    /// Wraps a world-stepping function as a computation.
    pub fn new(run: impl Fn(World) -> (Outcome<E, A>, World) + Send + Sync + 'static) -> Self {
        EIO { run: Arc::new(run) }
    }

    /// Runs on the given world.
    pub fn run(&self, world: World) -> (Outcome<E, A>, World) {
        (self.run)(world)
    }
}

/// Succeeds with `a`, leaving the world untouched; the value-index unit.
pub fn eio_pure<E, A>(a: A) -> EIO<E, A>
where
    A: Clone + Send + Sync + 'static,
{
    EIO::new(move |world| (Outcome::Ok(a.clone()), world))
}

/// Threads the world through `m` and then `f`, stopping at the first
/// failure and carrying its world forward unchanged.
pub fn eio_bind<E, A, B>(
    m: EIO<E, A>,
    f: impl Fn(A) -> EIO<E, B> + Send + Sync + 'static,
) -> EIO<E, B>
where
    E: 'static,
    A: 'static,
    B: 'static,
{
    EIO::new(move |world| match m.run(world) {
        (Outcome::Ok(a), next) => f(a).run(next),
        (Outcome::Fail(e), next) => (Outcome::Fail(e), next),
    })
}

/// Fails with `e`, leaving the world untouched; the error-index unit.
pub fn throw_eio<E, A>(e: E) -> EIO<E, A>
where
    E: Clone + Send + Sync + 'static,
{
    EIO::new(move |world| (Outcome::Fail(e.clone()), world))
}

/// Passes successes through and runs `h` on failure, starting the handler
/// from the failure world (no rollback); the handler may change the error
/// type.
pub fn catch_eio<E, F, A>(
    m: EIO<E, A>,
    h: impl Fn(E) -> EIO<F, A> + Send + Sync + 'static,
) -> EIO<F, A>
where
    E: 'static,
    F: 'static,
    A: 'static,
{
    EIO::new(move |world| match m.run(world) {
        (Outcome::Ok(a), next) => (Outcome::Ok(a), next),
        (Outcome::Fail(e), next) => h(e).run(next),
    })
}

/// Appends `t` to the output log and advances the tick.
pub fn write_line<E>(t: impl Into<String>) -> EIO<E, ()> {
    let t = t.into();
    EIO::new(move |mut world| {
        world.output.push(t.clone());
        world.tick += 1;
        (Outcome::Ok(()), world)
    })
}

/// Pops the front input line, or fails with `on_eof` when input is
/// exhausted. The tick advances either way, so failed reads are visible.
pub fn read_line<E>(on_eof: E) -> EIO<E, String>
where
    E: Clone + Send + Sync + 'static,
{
    EIO::new(move |mut world| {
        world.tick += 1;
        match world.input.pop_front() {
            Some(line) => (Outcome::Ok(line), world),
            None => (Outcome::Fail(on_eof.clone()), world),
        }
    })
}

/// Advances the tick and returns nothing; the smallest observable effect.
pub fn tick<E>() -> EIO<E, ()> {
    EIO::new(|mut world| {
        world.tick += 1;
        (Outcome::Ok(()), world)
    })
}

/// Error consumer of a Scott-encoded run: error and world to final answer.
pub type ErrK<R, E> = Arc<dyn Fn(E, World) -> R + Send + Sync>;

/// Success consumer of a Scott-encoded run: value and world to final
/// answer.
pub type OkK<R, A> = Arc<dyn Fn(A, World) -> R + Send + Sync>;

/// The Scott-encoded form: instead of building an `(Outcome, World)`
/// pair, the computation is handed one consumer per verdict and invokes
/// exactly one of them exactly once.
///
/// The answer type is hoisted to the parameter `R`; conversions pin it to
/// `(Outcome<E, A>, World)`, the one instantiation a state-passing
/// observer needs.
pub struct SEIO<R, E, A> {
    run: Arc<dyn Fn(ErrK<R, E>, OkK<R, A>, World) -> R + Send + Sync>,
}

impl<R, E, A> Clone for SEIO<R, E, A> {
    fn clone(&self) -> Self {
        SEIO {
            run: Arc::clone(&self.run),
        }
    }
}

impl<R, E, A> SEIO<R, E, A> {
    /// Wraps a double-consumer function as a computation.
    pub fn new(
        run: impl Fn(ErrK<R, E>, OkK<R, A>, World) -> R + Send + Sync + 'static,
    ) -> Self {
        SEIO { run: Arc::new(run) }
    }

    /// Runs with the given consumers on the given world.
    pub fn run(&self, err: ErrK<R, E>, ok: OkK<R, A>, world: World) -> R {
        (self.run)(err, ok, world)
    }
}

/// Invokes the success consumer with `a` and the untouched world.
pub fn seio_pure<R, E, A>(a: A) -> SEIO<R, E, A>
where
    A: Clone + Send + Sync + 'static,
{
    SEIO::new(move |_err, ok, world| ok(a.clone(), world))
}

/// Sequences by consumer substitution: `m` gets a success consumer that
/// feeds `f`, while the error consumer flows through untouched.
pub fn seio_bind<R, E, A, B>(
    m: SEIO<R, E, A>,
    f: impl Fn(A) -> SEIO<R, E, B> + Send + Sync + 'static,
) -> SEIO<R, E, B>
where
    R: 'static,
    E: 'static,
    A: 'static,
    B: 'static,
{
    let f = Arc::new(f);
    SEIO::new(move |err: ErrK<R, E>, ok: OkK<R, B>, world| {
        let f = Arc::clone(&f);
        let later_err = Arc::clone(&err);
        let later_ok = Arc::clone(&ok);
        m.run(
            err,
            Arc::new(move |a, next| {
                f(a).run(Arc::clone(&later_err), Arc::clone(&later_ok), next)
            }),
            world,
        )
    })
}

/// Invokes the error consumer with `e` and the untouched world.
pub fn throw_seio<R, E, A>(e: E) -> SEIO<R, E, A>
where
    E: Clone + Send + Sync + 'static,
{
    SEIO::new(move |err, _ok, world| err(e.clone(), world))
}

/// Sequences in the error index: `m` gets an error consumer that feeds
/// `h`, while the success consumer flows through untouched. The handler
/// starts from the failure world and may change the error type.
pub fn catch_seio<R, E, F, A>(
    m: SEIO<R, E, A>,
    h: impl Fn(E) -> SEIO<R, F, A> + Send + Sync + 'static,
) -> SEIO<R, F, A>
where
    R: 'static,
    E: 'static,
    F: 'static,
    A: 'static,
{
    let h = Arc::new(h);
    SEIO::new(move |err: ErrK<R, F>, ok: OkK<R, A>, world| {
        let h = Arc::clone(&h);
        let later_err = Arc::clone(&err);
        let later_ok = Arc::clone(&ok);
        m.run(
            Arc::new(move |e, next| {
                h(e).run(Arc::clone(&later_err), Arc::clone(&later_ok), next)
            }),
            ok,
            world,
        )
    })
}

/// Scott-encoded twin of [`write_line`], built natively on the consumers.
pub fn write_line_s<R, E>(t: impl Into<String>) -> SEIO<R, E, ()> {
    let t = t.into();
    SEIO::new(move |_err, ok, mut world| {
        world.output.push(t.clone());
        world.tick += 1;
        ok((), world)
    })
}

/// Scott-encoded twin of [`read_line`], built natively on the consumers.
pub fn read_line_s<R, E>(on_eof: E) -> SEIO<R, E, String>
where
    E: Clone + Send + Sync + 'static,
{
    SEIO::new(move |err, ok, mut world| {
        world.tick += 1;
        match world.input.pop_front() {
            Some(line) => ok(line, world),
            None => err(on_eof.clone(), world),
        }
    })
}

/// Scott-encoded twin of [`tick`], built natively on the consumers.
pub fn tick_s<R, E>() -> SEIO<R, E, ()> {
    SEIO::new(|_err, ok, mut world| {
        world.tick += 1;
        ok((), world)
    })
}

/// Converts a state-passing computation into Scott form by running it and
/// dispatching the resulting outcome to the matching consumer.
pub fn to_scott<R, E, A>(m: EIO<E, A>) -> SEIO<R, E, A>
where
    E: 'static,
    A: 'static,
{
    SEIO::new(move |err: ErrK<R, E>, ok: OkK<R, A>, world| match m.run(world) {
        (Outcome::Ok(a), next) => ok(a, next),
        (Outcome::Fail(e), next) => err(e, next),
    })
}

/// Converts a Scott-form computation back to state passing by
/// instantiating the answer type at `(Outcome, World)` and handing in the
/// pair constructors as consumers.
pub fn from_scott<E, A>(m: SEIO<(Outcome<E, A>, World), E, A>) -> EIO<E, A>
where
    E: Send + Sync + 'static,
    A: Send + Sync + 'static,
{
    EIO::new(move |world| {
        m.run(
            Arc::new(|e, next| (Outcome::Fail(e), next)),
            Arc::new(|a, next| (Outcome::Ok(a), next)),
            world,
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    use std::sync::atomic::{AtomicU64, Ordering};

    type Obs = (Outcome<String, i64>, World);

    fn w0() -> World {
        World::empty()
    }

    #[test]
    fn pure_leaves_the_world_untouched() {
        let m: EIO<String, i64> = eio_pure(1);
        assert_eq!(m.run(w0()), (Outcome::Ok(1), w0()));

        let busy = World {
            input: ["a".to_string()].into(),
            output: vec!["b".to_string()],
            tick: 7,
        };
        assert_eq!(m.run(busy.clone()), (Outcome::Ok(1), busy));
    }

    #[test]
    fn effects_before_a_throw_persist() {
        let m: EIO<String, ()> =
            eio_bind(write_line("x"), |_| throw_eio("boom".to_string()));
        let (outcome, world) = m.run(w0());
        assert_eq!(outcome, Outcome::Fail("boom".to_string()));
        assert_eq!(world.output, vec!["x".to_string()]);
        assert_eq!(world.tick, 1);
    }

    #[test]
    fn catch_recovers_with_the_handler_value() {
        let m: EIO<String, i64> = catch_eio(throw_eio("boom".to_string()), |e: String| {
            eio_pure(e.len() as i64)
        });
        assert_eq!(m.run(w0()), (Outcome::Ok(4), w0()));
    }

    #[test]
    fn write_line_appends_and_ticks() {
        let m: EIO<String, ()> = write_line("a");
        let (outcome, world) = m.run(w0());
        assert_eq!(outcome, Outcome::Ok(()));
        assert_eq!(world.output, vec!["a".to_string()]);
        assert_eq!(world.tick, 1);
    }

    #[test]
    fn sequenced_writes_preserve_order() {
        let m: EIO<String, ()> = eio_bind(write_line("a"), |_| write_line("b"));
        let (_, world) = m.run(w0());
        assert_eq!(world.output, vec!["a".to_string(), "b".to_string()]);
        assert_eq!(world.tick, 2);
    }

    #[test]
    fn a_write_inside_a_handled_failure_region_persists() {
        let failing: EIO<String, i64> =
            eio_bind(write_line("before"), |_| throw_eio("oops".to_string()));
        let m: EIO<String, i64> =
            catch_eio(failing, |_| eio_bind(write_line("after"), |_| eio_pure(0)));
        let (outcome, world) = m.run(w0());
        assert_eq!(outcome, Outcome::Ok(0));
        assert_eq!(
            world.output,
            vec!["before".to_string(), "after".to_string()],
            "catch must not roll back effects"
        );
    }

    #[test]
    fn read_line_pops_the_front_line() {
        let m: EIO<String, String> = read_line("eof".to_string());
        let (outcome, world) = m.run(World::with_input(["hi"]));
        assert_eq!(outcome, Outcome::Ok("hi".to_string()));
        assert!(world.input.is_empty());
        assert_eq!(world.tick, 1);
    }

    #[test]
    fn read_line_on_empty_input_fails_but_still_ticks() {
        let m: EIO<String, String> = read_line("eof".to_string());
        let (outcome, world) = m.run(w0());
        assert_eq!(outcome, Outcome::Fail("eof".to_string()));
        assert_eq!(world.tick, 1);
        assert!(world.output.is_empty());
    }

    #[test]
    fn echo_reads_then_writes() {
        let m: EIO<String, ()> =
            eio_bind(read_line("eof".to_string()), write_line);
        let (outcome, world) = m.run(World::with_input(["a"]));
        assert_eq!(outcome, Outcome::Ok(()));
        assert_eq!(world.output, vec!["a".to_string()]);
        assert_eq!(world.tick, 2);
    }

    #[test]
    fn tick_only_advances_the_counter() {
        let m: EIO<String, ()> = tick();
        let (outcome, world) = m.run(w0());
        assert_eq!(outcome, Outcome::Ok(()));
        assert_eq!(world, World { tick: 1, ..World::empty() });
    }

    #[test]
    fn scott_pure_matches_direct_pure_on_a_world_panel() {
        let panel = [
            w0(),
            World::with_input(["a"]),
            World::with_input(["a", "b", "c"]),
            World {
                input: VecDeque::new(),
                output: vec!["old".to_string()],
                tick: 5,
            },
        ];
        for world in panel {
            let scott: SEIO<Obs, String, i64> = seio_pure(1);
            let direct: EIO<String, i64> = eio_pure(1);
            assert_eq!(from_scott(scott).run(world.clone()), direct.run(world));
        }
    }

    #[test]
    fn scott_catch_recovers_without_touching_the_world() {
        let m: SEIO<Obs, String, i64> =
            catch_seio(throw_seio("b".to_string()), |_e: String| seio_pure(0));
        assert_eq!(from_scott(m).run(w0()), (Outcome::Ok(0), w0()));
    }

    #[test]
    fn scott_chain_with_mid_throw_matches_the_direct_twin() {
        type ObsText = (Outcome<String, String>, World);
        let scott: SEIO<ObsText, String, String> = catch_seio(
            seio_bind(write_line_s("one"), |_| {
                seio_bind(
                    read_line_s("dry".to_string()),
                    |line: String| seio_bind(write_line_s(line), |_| seio_pure("done".to_string())),
                )
            }),
            |e: String| seio_bind(write_line_s(format!("caught {e}")), move |_| seio_pure(e.clone())),
        );
        let direct: EIO<String, String> = catch_eio(
            eio_bind(write_line("one"), |_| {
                eio_bind(read_line("dry".to_string()), |line: String| {
                    eio_bind(write_line(line), |_| eio_pure("done".to_string()))
                })
            }),
            |e: String| eio_bind(write_line(format!("caught {e}")), move |_| eio_pure(e.clone())),
        );
        for world in [w0(), World::with_input(["in"]), World::with_input(["x", "y"])] {
            assert_eq!(from_scott(scott.clone()).run(world.clone()), direct.run(world));
        }
    }

    #[test]
    fn round_trip_of_pure_is_identity() {
        let m: EIO<String, i64> = eio_pure(7);
        let back = from_scott(to_scott::<Obs, _, _>(m.clone()));
        for world in [w0(), World::with_input(["z"])] {
            assert_eq!(back.run(world.clone()), m.run(world));
        }
    }

    #[test]
    fn round_trip_of_an_effectful_program_is_identity() {
        let mk = || -> EIO<String, i64> {
            catch_eio(
                eio_bind(write_line("w1"), |_| {
                    eio_bind(read_line("eof".to_string()), |line: String| {
                        eio_bind(tick(), move |_| {
                            if line.is_empty() {
                                throw_eio("empty".to_string())
                            } else {
                                eio_pure(line.len() as i64)
                            }
                        })
                    })
                }),
                |e: String| eio_bind(write_line(format!("h:{e}")), move |_| eio_pure(-(e.len() as i64))),
            )
        };
        let back = from_scott(to_scott::<Obs, _, _>(mk()));
        for world in [w0(), World::with_input([""]), World::with_input(["abc"])] {
            assert_eq!(back.run(world.clone()), mk().run(world));
        }
    }

    #[test]
    fn scott_throw_invokes_only_the_error_consumer() {
        let err_hits = Arc::new(AtomicU64::new(0));
        let ok_hits = Arc::new(AtomicU64::new(0));
        let m: SEIO<Obs, String, i64> = to_scott(throw_eio("e".to_string()));
        let err_seen = Arc::clone(&err_hits);
        let ok_seen = Arc::clone(&ok_hits);
        let answer = m.run(
            Arc::new(move |e, next| {
                err_seen.fetch_add(1, Ordering::SeqCst);
                (Outcome::Fail(e), next)
            }),
            Arc::new(move |a, next| {
                ok_seen.fetch_add(1, Ordering::SeqCst);
                (Outcome::Ok(a), next)
            }),
            w0(),
        );
        assert_eq!(answer.0, Outcome::Fail("e".to_string()));
        assert_eq!(err_hits.load(Ordering::SeqCst), 1);
        assert_eq!(ok_hits.load(Ordering::SeqCst), 0);
    }

    #[test]
    fn exactly_one_consumer_fires_exactly_once() {
        let programs: Vec<SEIO<Obs, String, i64>> = vec![
            seio_pure(3),
            throw_seio("x".to_string()),
            seio_bind(seio_pure(1), |a| seio_pure(a + 1)),
            catch_seio(throw_seio("x".to_string()), |_e: String| seio_pure(9)),
            seio_bind(write_line_s("w"), |_| {
                seio_bind(read_line_s("eof".to_string()), |l: String| {
                    seio_pure(l.len() as i64)
                })
            }),
        ];
        for (idx, m) in programs.into_iter().enumerate() {
            let calls = Arc::new(AtomicU64::new(0));
            let err_calls = Arc::clone(&calls);
            let ok_calls = Arc::clone(&calls);
            m.run(
                Arc::new(move |e, next| {
                    err_calls.fetch_add(1, Ordering::SeqCst);
                    (Outcome::Fail(e), next)
                }),
                Arc::new(move |a, next| {
                    ok_calls.fetch_add(1, Ordering::SeqCst);
                    (Outcome::Ok(a), next)
                }),
                w0(),
            );
            assert_eq!(calls.load(Ordering::SeqCst), 1, "program {idx} must consume once");
        }
    }

    #[test]
    fn output_and_tick_never_shrink_over_a_run() {
        let m: EIO<String, i64> = catch_eio(
            eio_bind(write_line("a"), |_| {
                eio_bind(read_line("eof".to_string()), |_l: String| {
                    eio_bind(write_line("b"), |_| throw_eio("late".to_string()))
                })
            }),
            |_| eio_pure(0),
        );
        for start in [w0(), World::with_input(["line"]), World { tick: 4, ..World::empty() }] {
            let before_out = start.output.len();
            let before_tick = start.tick;
            let (_, after) = m.run(start);
            assert!(after.output.len() >= before_out);
            assert!(after.tick >= before_tick);
        }
    }

    #[test]
    fn world_serializes_to_the_documented_shape() {
        let world = World {
            input: ["a".to_string(), "b".to_string()].into(),
            output: vec!["c".to_string()],
            tick: 3,
        };
        let json = serde_json::to_string(&world).unwrap();
        assert_eq!(json, r#"{"input":["a","b"],"output":["c"],"tick":3}"#);
        let back: World = serde_json::from_str(&json).unwrap();
        assert_eq!(back, world);
    }
}
