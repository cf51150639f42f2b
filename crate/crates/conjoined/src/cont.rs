//! Continuation-passing computations and the handler-context exception
//! runtime built from them.
//!
//! [`Cont<R, A>`] is a computation that produces its `A` by feeding it to a
//! consumer `A -> R`; [`call_cc`] captures that consumer as a first-class
//! escape. [`ThrowT<R, E, A>`] layers a reader of the innermost error
//! [`Handler`] on top, giving a `throw_t`/`catch_t` pair where throwing
//! jumps straight to the current handler and catching installs a new one
//! for the protected region only:
//!
//! * a throw inside the protected computation reaches the catch's own
//!   handler;
//! * the handler body runs under the *outer* handler, so a throw inside it
//!   escalates outward;
//! * the handler's value is delivered to the catch's normal return point.
//!
//! Everything is answer-type-delimited: `R` is the final answer produced
//! by [`run_throw_t`], and escape continuations never return to their
//! local consumer, so a handler is just a function `E -> R`.
//!
//! Law sheet (observed through `run_throw_t` on a consumer panel):
//!
//! | law                  | statement                                            |
//! |----------------------|------------------------------------------------------|
//! | value left identity  | `bind_t(pure_t(a), f) == f(a)`                       |
//! | value right identity | `bind_t(m, pure_t) == m`                             |
//! | value associativity  | `bind_t(bind_t(m, f), g) == bind_t(m, bind f;g)`     |
//! | error left identity  | `catch_t(throw_t(e), h) == h(e)`                     |
//! | error right identity | `catch_t(m, throw_t) == m`                           |
//! | error associativity  | `catch_t(catch_t(m, h), k) == catch_t(m, catch h;k)` |
//! | throw left zero      | `bind_t(throw_t(e), f) == throw_t(e)`                |
//! | pure left zero       | `catch_t(pure_t(a), h) == pure_t(a)`                 |

use std::sync::Arc;

/// The consumer a continuation feeds its value to.
pub type Consumer<R, A> = Arc<dyn Fn(A) -> R + Send + Sync>;

/// The escape handed out by [`call_cc`]: invoking it abandons the local
/// continuation, so the computation it returns never consults its
/// consumer and its value index `B` is free.
pub type Escape<R, A, B> = Arc<dyn Fn(A) -> Cont<R, B> + Send + Sync>;

/// A computation that produces an `A` by calling a consumer `A -> R`.
pub struct Cont<R, A> {
    run: Arc<dyn Fn(Consumer<R, A>) -> R + Send + Sync>,
}

impl<R, A> Clone for Cont<R, A> {
    fn clone(&self) -> Self {
        Cont {
            run: Arc::clone(&self.run),
        }
    }
}

impl<R, A> Cont<R, A> {
    /// Wraps a consumer-transformer as a computation.
    pub fn new(run: impl Fn(Consumer<R, A>) -> R + Send + Sync + 'static) -> Self {
        Cont { run: Arc::new(run) }
    }

    /// Runs with the given consumer.
    pub fn run(&self, consumer: Consumer<R, A>) -> R {
        (self.run)(consumer)
    }

    /// Runs with a plain closure as the consumer.
    pub fn run_with(&self, consumer: impl Fn(A) -> R + Send + Sync + 'static) -> R {
        self.run(Arc::new(consumer))
    }
}

/// Feeds `a` straight to the consumer; the value-index unit.
pub fn cont_pure<R, A>(a: A) -> Cont<R, A>
where
    A: Clone + Send + Sync + 'static,
{
    Cont::new(move |consumer| consumer(a.clone()))
}

/// Sequences by consumer substitution: `m` runs with a consumer that feeds
/// each value through `f` and on to the final consumer.
pub fn cont_bind<R, A, B>(
    m: Cont<R, A>,
    f: impl Fn(A) -> Cont<R, B> + Send + Sync + 'static,
) -> Cont<R, B>
where
    R: 'static,
    A: 'static,
    B: 'static,
{
    let f = Arc::new(f);
    Cont::new(move |consumer: Consumer<R, B>| {
        let f = Arc::clone(&f);
        m.run(Arc::new(move |a| f(a).run(Arc::clone(&consumer))))
    })
}

/// Captures the current consumer as a first-class escape.
///
/// The escape's result index `B` is a per-call type parameter standing in
/// for a universally quantified result: an escaped computation never
/// resumes its local consumer, so `B` is never inhabited by an actual
/// return.
pub fn call_cc<R, A, B>(
    f: impl Fn(Escape<R, A, B>) -> Cont<R, A> + Send + Sync + 'static,
) -> Cont<R, A>
where
    R: 'static,
    A: Clone + Send + Sync + 'static,
    B: 'static,
{
    Cont::new(move |consumer: Consumer<R, A>| {
        let captured = Arc::clone(&consumer);
        let escape: Escape<R, A, B> = Arc::new(move |a: A| {
            let captured = Arc::clone(&captured);
            Cont::new(move |_local: Consumer<R, B>| captured(a.clone()))
        });
        f(escape).run(consumer)
    })
}

/// The innermost error handler: how a throw turns into the final answer.
pub struct Handler<R, E> {
    on_error: Arc<dyn Fn(E) -> R + Send + Sync>,
}

impl<R, E> Clone for Handler<R, E> {
    fn clone(&self) -> Self {
        Handler {
            on_error: Arc::clone(&self.on_error),
        }
    }
}

impl<R, E> Handler<R, E> {
    /// Wraps a total function from errors to final answers.
    pub fn new(on_error: impl Fn(E) -> R + Send + Sync + 'static) -> Self {
        Handler {
            on_error: Arc::new(on_error),
        }
    }

    /// Applies the handler to an error.
    pub fn handle(&self, e: E) -> R {
        (self.on_error)(e)
    }
}

/// A continuation computation that reads the innermost enclosing error
/// handler.
pub struct ThrowT<R, E, A> {
    run: Arc<dyn Fn(Handler<R, E>) -> Cont<R, A> + Send + Sync>,
}

impl<R, E, A> Clone for ThrowT<R, E, A> {
    fn clone(&self) -> Self {
        ThrowT {
            run: Arc::clone(&self.run),
        }
    }
}

impl<R, E, A> ThrowT<R, E, A> {
    /// Wraps a handler-reader as a computation.
    pub fn new(run: impl Fn(Handler<R, E>) -> Cont<R, A> + Send + Sync + 'static) -> Self {
        ThrowT { run: Arc::new(run) }
    }

    /// Supplies the innermost handler, yielding the underlying
    /// continuation computation.
    pub fn run(&self, handler: Handler<R, E>) -> Cont<R, A> {
        (self.run)(handler)
    }
}

/// Succeeds with `a`, ignoring the handler; the value-index unit.
pub fn pure_t<R, E, A>(a: A) -> ThrowT<R, E, A>
where
    A: Clone + Send + Sync + 'static,
{
    ThrowT::new(move |_handler| cont_pure(a.clone()))
}

/// Sequences in the value index, distributing the current handler to both
/// stages.
pub fn bind_t<R, E, A, B>(
    m: ThrowT<R, E, A>,
    f: impl Fn(A) -> ThrowT<R, E, B> + Send + Sync + 'static,
) -> ThrowT<R, E, B>
where
    R: 'static,
    E: 'static,
    A: 'static,
    B: 'static,
{
    let f = Arc::new(f);
    ThrowT::new(move |handler: Handler<R, E>| {
        let f = Arc::clone(&f);
        let later = handler.clone();
        cont_bind(m.run(handler), move |a| f(a).run(later.clone()))
    })
}

/// Jumps to the innermost handler with `e`; the error-index unit. The
/// produced continuation ignores its consumer entirely.
pub fn throw_t<R, E, A>(e: E) -> ThrowT<R, E, A>
where
    R: 'static,
    E: Clone + Send + Sync + 'static,
    A: 'static,
{
    ThrowT::new(move |handler: Handler<R, E>| {
        let e = e.clone();
        Cont::new(move |_consumer: Consumer<R, A>| handler.handle(e.clone()))
    })
}

/// Protects `m` with a handler: a throw of `e` inside `m` runs `h(e)`
/// under the *outer* handler and delivers its value to `catch_t`'s normal
/// return point; the handler may change the error type.
pub fn catch_t<R, E, F, A>(
    m: ThrowT<R, E, A>,
    h: impl Fn(E) -> ThrowT<R, F, A> + Send + Sync + 'static,
) -> ThrowT<R, F, A>
where
    R: 'static,
    E: 'static,
    F: 'static,
    A: 'static,
{
    let h = Arc::new(h);
    ThrowT::new(move |outer: Handler<R, F>| {
        let m = m.clone();
        let h = Arc::clone(&h);
        Cont::new(move |return_point: Consumer<R, A>| {
            let h = Arc::clone(&h);
            let outer = outer.clone();
            let resume = Arc::clone(&return_point);
            let inner = Handler::new(move |e: E| {
                h(e).run(outer.clone()).run(Arc::clone(&resume))
            });
            m.run(inner).run(return_point)
        })
    })
}

/// The top-level delimiter: installs the outermost handler and consumer
/// and produces the final answer through exactly one of them.
pub fn run_throw_t<R, E, A>(
    m: &ThrowT<R, E, A>,
    on_error: impl Fn(E) -> R + Send + Sync + 'static,
    on_ok: impl Fn(A) -> R + Send + Sync + 'static,
) -> R {
    m.run(Handler::new(on_error)).run(Arc::new(on_ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    use std::sync::atomic::{AtomicU64, Ordering};

    use crate::outcome::Outcome;

    fn observe(m: &ThrowT<Outcome<String, i64>, String, i64>) -> Outcome<String, i64> {
        run_throw_t(m, Outcome::Fail, Outcome::Ok)
    }

    #[test]
    fn pure_feeds_the_consumer() {
        let m: Cont<i64, i64> = cont_pure(5);
        assert_eq!(m.run_with(|x| x), 5);
        assert_eq!(m.run_with(|x| x + 1), 6);
    }

    #[test]
    fn bind_chains_by_consumer_substitution() {
        let m: Cont<i64, i64> = cont_bind(cont_pure(1), |a| cont_pure(a + 1));
        assert_eq!(m.run_with(|x| x), 2);

        let chain: Cont<i64, i64> = cont_bind(
            cont_bind(cont_pure(1), |a| cont_pure(a + 1)),
            |b| cont_pure(b * 3),
        );
        assert_eq!(chain.run_with(|x| x), 6);
    }

    #[test]
    fn left_identity_for_cont() {
        let f = |a: i64| cont_pure::<i64, i64>(a * 7);
        let lhs = cont_bind(cont_pure(1), f);
        assert_eq!(lhs.run_with(|x| x), f(1).run_with(|x| x));
    }

    #[test]
    fn right_identity_for_cont_on_a_consumer_panel() {
        let consumers: Vec<(fn(i64) -> i64, fn(i64) -> i64)> =
            vec![(|x| x, |x| x), (|x| x + 1, |x| x + 1), (|x| x * -3, |x| x * -3)];
        for (lhs_consumer, rhs_consumer) in consumers {
            let m: Cont<i64, i64> = cont_pure(9);
            let bound = cont_bind(m.clone(), cont_pure);
            assert_eq!(bound.run_with(lhs_consumer), m.run_with(rhs_consumer));
        }
    }

    #[test]
    fn escape_abandons_the_rest_of_the_body() {
        let m: Cont<i64, i64> =
            call_cc::<i64, i64, i64>(|k| cont_bind(k(1), |_| cont_pure(999)));
        assert_eq!(m.run_with(|x| x), 1);
    }

    #[test]
    fn escape_resumes_at_the_return_point() {
        let m: Cont<i64, i64> = cont_bind(
            call_cc::<i64, i64, i64>(|k| k(2)),
            |x| cont_pure(x * 10),
        );
        assert_eq!(m.run_with(|x| x), 20);
    }

    #[test]
    fn call_cc_is_transparent_when_the_escape_is_unused() {
        let consumers: [fn(i64) -> i64; 3] = [|x| x, |x| x - 4, |x| x * x];
        for consumer in consumers {
            let direct: Cont<i64, i64> = cont_bind(cont_pure(3), |a| cont_pure(a + 1));
            let wrapped: Cont<i64, i64> =
                call_cc::<i64, i64, i64>(|_k| cont_bind(cont_pure(3), |a| cont_pure(a + 1)));
            assert_eq!(wrapped.run_with(consumer), direct.run_with(consumer));
        }
    }

    #[test]
    fn run_delivers_through_exactly_one_side() {
        let ok: ThrowT<String, String, i64> = pure_t(1);
        assert_eq!(
            run_throw_t(&ok, |e| format!("err {e}"), |a| format!("ok {a}")),
            "ok 1"
        );
        let err: ThrowT<String, String, i64> = throw_t("e".to_string());
        assert_eq!(
            run_throw_t(&err, |e| format!("err {e}"), |a| format!("ok {a}")),
            "err e"
        );
    }

    #[test]
    fn throw_never_runs_a_later_arrow() {
        let hits = Arc::new(AtomicU64::new(0));
        let counted = Arc::clone(&hits);
        let m: ThrowT<Outcome<String, i64>, String, i64> = bind_t(
            throw_t("stop".to_string()),
            move |a: i64| {
                counted.fetch_add(1, Ordering::SeqCst);
                pure_t(a + 1)
            },
        );
        assert_eq!(observe(&m), Outcome::Fail("stop".to_string()));
        assert_eq!(hits.load(Ordering::SeqCst), 0, "arrow after throw must stay cold");
    }

    #[test]
    fn catch_handles_a_throw_with_the_installed_handler() {
        let m: ThrowT<Outcome<String, i64>, String, i64> =
            catch_t(throw_t(3i64), |e: i64| pure_t(e + 1));
        assert_eq!(observe(&m), Outcome::Ok(4));
    }

    #[test]
    fn catch_leaves_pure_values_alone() {
        let m: ThrowT<Outcome<String, i64>, String, i64> =
            catch_t(pure_t(1), |e: String| throw_t(e));
        assert_eq!(observe(&m), Outcome::Ok(1));
    }

    #[test]
    fn a_throw_inside_a_handler_escalates_to_the_outer_handler() {
        let inner: ThrowT<Outcome<String, i64>, String, i64> =
            catch_t(throw_t("a".to_string()), |_| throw_t("b".to_string()));
        assert_eq!(observe(&inner), Outcome::Fail("b".to_string()));

        let recovered = catch_t(inner, |e: String| pure_t(e.len() as i64));
        assert_eq!(observe(&recovered), Outcome::Ok(1));
    }

    #[test]
    fn handler_scoping_selects_the_matching_layer_at_every_depth() {
        let sentinels = ["s1", "s2", "s3", "s4"];
        let layer = |m: ThrowT<Outcome<String, String>, String, String>,
                     level: usize,
                     sentinel: &'static str| {
            catch_t(m, move |e: String| {
                if e == sentinel {
                    pure_t(format!("caught-at-{level}"))
                } else {
                    throw_t(e)
                }
            })
        };
        for (idx, thrown) in ["s1", "s2", "s3", "s4", "s9"].iter().enumerate() {
            let mut m: ThrowT<Outcome<String, String>, String, String> =
                throw_t(thrown.to_string());
            for (level, sentinel) in sentinels.iter().enumerate().rev() {
                m = layer(m, level + 1, sentinel);
            }
            let outcome = run_throw_t(&m, Outcome::Fail, Outcome::Ok);
            if idx < 4 {
                assert_eq!(
                    outcome,
                    Outcome::Ok(format!("caught-at-{}", idx + 1)),
                    "sentinel {thrown} must be caught by its own layer"
                );
            } else {
                assert_eq!(
                    outcome,
                    Outcome::Fail("s9".to_string()),
                    "an unmatched sentinel must escape every layer"
                );
            }
        }
    }

    #[test]
    fn deep_chain_through_a_throw_and_catch() {
        let mut m: ThrowT<Outcome<String, i64>, String, i64> = pure_t(0);
        for _ in 0..5 {
            m = bind_t(m, |x| pure_t(x + 1));
        }
        m = bind_t(m, |x| throw_t(format!("at {x}")));
        m = catch_t(m, |e: String| pure_t(e.len() as i64));
        for _ in 0..5 {
            m = bind_t(m, |x| pure_t(x * 2));
        }
        assert_eq!(observe(&m), Outcome::Ok(4 * 32));
    }

    /// The literal two-call_cc construction of catch: trap the error with
    /// one capture, route normal completion past the handler with another.
    /// The escape continuation never resumes its consumer, so the dead
    /// consumer below is unreachable.
    fn catch_via_two_call_cc<R, E, F, A>(
        m: ThrowT<R, E, A>,
        h: impl Fn(E) -> ThrowT<R, F, A> + Send + Sync + 'static,
    ) -> ThrowT<R, F, A>
    where
        R: 'static,
        E: Clone + Send + Sync + 'static,
        F: 'static,
        A: Clone + Send + Sync + 'static,
    {
        let h = Arc::new(h);
        ThrowT::new(move |outer: Handler<R, F>| {
            let m = m.clone();
            let h = Arc::clone(&h);
            let outer = outer.clone();
            call_cc::<R, A, E>(move |normal_exit| {
                let m = m.clone();
                let trapped: Cont<R, E> = call_cc::<R, E, A>(move |new_throw| {
                    let thrower = Handler::new(move |e: E| {
                        new_throw(e).run(Arc::new(|_: A| {
                            unreachable!("escape continuations never resume their consumer")
                        }))
                    });
                    let normal_exit = Arc::clone(&normal_exit);
                    cont_bind(m.run(thrower), move |a| normal_exit(a))
                });
                let h = Arc::clone(&h);
                let outer = outer.clone();
                cont_bind(trapped, move |e| h(e).run(outer.clone()))
            })
        })
    }

    #[test]
    fn flattened_catch_matches_the_two_call_cc_construction() {
        type M = ThrowT<Outcome<String, i64>, String, i64>;
        let computations: Vec<(&str, fn() -> M)> = vec![
            ("pure", || pure_t(5)),
            ("throw", || throw_t("a".to_string())),
            ("bind then throw", || {
                bind_t(pure_t(1), |x| {
                    bind_t(throw_t(format!("mid {x}")), |y: i64| pure_t(y + 1))
                })
            }),
            ("bind pure chain", || bind_t(pure_t(2), |x| pure_t(x * 3))),
        ];
        let handlers: Vec<(&str, fn(String) -> M)> = vec![
            ("recover", |e| pure_t(e.len() as i64)),
            ("rethrow tagged", |e| throw_t(format!("{e}!"))),
            ("fresh throw", |_| throw_t("fresh".to_string())),
        ];
        for (mn, mk) in &computations {
            for (hn, h) in &handlers {
                let flattened = catch_t(mk(), *h);
                let constructed = catch_via_two_call_cc(mk(), *h);
                assert_eq!(
                    observe(&flattened),
                    observe(&constructed),
                    "catch constructions disagree on ({mn}, {hn})"
                );
            }
        }
    }
}
