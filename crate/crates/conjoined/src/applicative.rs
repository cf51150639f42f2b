//! The error-accumulating applicative: applicative in the value index,
//! still a full monad in the error index.
//!
//! [`EA`] wraps an [`Outcome`] whose error type carries a [`Monoid`].
//! Application with [`ea_apply`] evaluates *both* operands; when both
//! fail, the errors are combined left-then-right instead of keeping only
//! the first. That is the whole point of the structure: a traversal such
//! as [`map_ap`] reports every failing element, not just the earliest.
//!
//! The error index keeps the ordinary monad: [`throw_ea`] and
//! [`catch_ea`] behave exactly like their [`Outcome`] counterparts, and
//! `catch_ea` may change the error type.
//!
//! Law sheet:
//!
//! | law              | statement                                                          |
//! |------------------|--------------------------------------------------------------------|
//! | identity         | `ea_apply(ea_pure(id), v) == v`                                    |
//! | homomorphism     | `ea_apply(ea_pure(f), ea_pure(x)) == ea_pure(f(x))`                |
//! | interchange      | `ea_apply(u, ea_pure(y)) == ea_apply(ea_pure(\|f\| f(y)), u)`      |
//! | composition      | `ea_apply(ea_apply(ea_apply(ea_pure(∘), u), v), w) == ea_apply(u, ea_apply(v, w))` |
//! | error left id    | `catch_ea(throw_ea(e), h) == h(e)`                                 |
//! | error right id   | `catch_ea(m, throw_ea) == m`                                       |
//! | error assoc      | `catch_ea(catch_ea(m, h), k) == catch_ea(m, \|e\| catch_ea(h(e), k))` |
//! | pure left zero   | `catch_ea(ea_pure(a), h) == ea_pure(a)`                            |
//! | throw left zero  | `ea_apply(throw_ea(e), ea_pure(x)) == throw_ea(e)`                 |
//!
//! The throw left zero above is deliberately scoped to a succeeding right
//! operand: on a failing one the two errors accumulate, with the error
//! component of `ea_apply(throw_ea(e1), throw_ea(e2))` equal to
//! `e1 ⋄ e2`.

use crate::monoid::Monoid;
use crate::outcome::Outcome;

/// An error-accumulating computation: an [`Outcome`] whose failures
/// combine through the monoid on `E` when applied side by side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EA<E, A>(pub Outcome<E, A>);

impl<E, A> From<Outcome<E, A>> for EA<E, A> {
    fn from(outcome: Outcome<E, A>) -> Self {
        EA(outcome)
    }
}

impl<E, A> From<EA<E, A>> for Outcome<E, A> {
    fn from(ea: EA<E, A>) -> Self {
        ea.0
    }
}

/// Succeeds with `a`; the applicative unit.
pub fn ea_pure<E, A>(a: A) -> EA<E, A> {
    EA(Outcome::Ok(a))
}

/// Applies a function to the success value, leaving failures alone.
pub fn ea_map<E, A, B>(m: EA<E, A>, f: impl FnOnce(A) -> B) -> EA<E, B> {
    EA(m.0.map(f))
}

/// Applies a wrapped function to a wrapped argument.
///
/// Both operands are always evaluated. One failure propagates; two
/// failures combine left-then-right through the monoid.
pub fn ea_apply<E, A, B, F>(f: EA<E, F>, a: EA<E, A>) -> EA<E, B>
where
    E: Monoid,
    F: FnOnce(A) -> B,
{
    EA(match (f.0, a.0) {
        (Outcome::Ok(f), Outcome::Ok(a)) => Outcome::Ok(f(a)),
        (Outcome::Ok(_), Outcome::Fail(e)) => Outcome::Fail(e),
        (Outcome::Fail(e), Outcome::Ok(_)) => Outcome::Fail(e),
        (Outcome::Fail(e1), Outcome::Fail(e2)) => Outcome::Fail(e1.combine(e2)),
    })
}

/// Fails with `e`; the error-index unit.
pub fn throw_ea<E, A>(e: E) -> EA<E, A> {
    EA(Outcome::Fail(e))
}

/// Passes successes through and feeds failures to the handler, which may
/// change the error type.
pub fn catch_ea<E, F, A>(m: EA<E, A>, h: impl FnOnce(E) -> EA<F, A>) -> EA<F, A> {
    match m.0 {
        Outcome::Ok(a) => EA(Outcome::Ok(a)),
        Outcome::Fail(e) => h(e),
    }
}

/// Applicative traversal: maps `f` over the list and collects the results
/// with [`ea_apply`], so every failing element contributes its error, in
/// input order.
pub fn map_ap<E, A, B>(f: impl Fn(&A) -> EA<E, B>, xs: &[A]) -> EA<E, Vec<B>>
where
    E: Monoid,
{
    fn go<E, A, B, F>(f: &F, xs: &[A]) -> EA<E, Vec<B>>
    where
        E: Monoid,
        F: Fn(&A) -> EA<E, B>,
    {
        match xs.split_first() {
            None => ea_pure(Vec::new()),
            Some((a, rest)) => {
                let cons = ea_map(f(a), |b| {
                    move |mut tail: Vec<B>| {
                        tail.insert(0, b);
                        tail
                    }
                });
                ea_apply(cons, go(f, rest))
            }
        }
    }
    go(&f, xs)
}

#[cfg(test)]
mod tests {
    use super::*;

    use proptest::prelude::*;

    use crate::parser::ErrorLog;

    fn log(messages: &[&str]) -> ErrorLog {
        ErrorLog::from_messages(messages.iter().map(|m| m.to_string()))
    }

    fn ok<A>(a: A) -> EA<ErrorLog, A> {
        ea_pure(a)
    }

    fn fail<A>(messages: &[&str]) -> EA<ErrorLog, A> {
        throw_ea(log(messages))
    }

    #[test]
    fn apply_on_two_successes_applies() {
        let f: EA<ErrorLog, fn(i64) -> i64> = ok(|x| x + 1);
        assert_eq!(ea_apply(f, ok(1)), ok(2));
    }

    #[test]
    fn apply_on_two_failures_accumulates_left_then_right() {
        let f: EA<ErrorLog, fn(i64) -> i64> = fail(&["a"]);
        assert_eq!(ea_apply(f, fail::<i64>(&["b"])), fail(&["a", "b"]));
    }

    #[test]
    fn apply_propagates_a_single_failure_from_either_side() {
        let failing: EA<ErrorLog, fn(i64) -> i64> = fail(&["a"]);
        assert_eq!(ea_apply(failing, ok(1)), fail(&["a"]));

        let applying: EA<ErrorLog, fn(i64) -> i64> = ok(|x| x + 1);
        assert_eq!(ea_apply(applying, fail::<i64>(&["b"])), fail(&["b"]));
    }

    #[test]
    fn catch_passes_successes_through() {
        let m: EA<ErrorLog, i64> = ok(1);
        assert_eq!(catch_ea(m, |_| fail(&["never"])), ok(1));
    }

    #[test]
    fn catch_can_extend_the_log() {
        let m: EA<ErrorLog, i64> = fail(&["a"]);
        assert_eq!(
            catch_ea(m, |e| throw_ea(e.combine(log(&["b"])))),
            fail::<i64>(&["a", "b"])
        );
    }

    #[test]
    fn throw_is_a_left_zero_for_apply_on_a_succeeding_operand() {
        let f: EA<ErrorLog, fn(i64) -> i64> = fail(&["e"]);
        assert_eq!(ea_apply(f, ok(7)), fail(&["e"]));
    }

    #[test]
    fn map_ap_collects_all_successes() {
        let m = map_ap(|x: &i64| ok(*x), &[1, 2]);
        assert_eq!(m, ok(vec![1, 2]));
    }

    #[test]
    fn map_ap_collects_every_failure_in_input_order() {
        let odd_fails = |x: &i64| {
            if x % 2 != 0 {
                fail(&[&x.to_string()])
            } else {
                ok(*x)
            }
        };
        assert_eq!(map_ap(odd_fails, &[1, 2, 3]), fail(&["1", "3"]));
    }

    #[test]
    fn map_ap_on_the_empty_list_is_pure_empty() {
        let m = map_ap(|_: &i64| fail::<i64>(&["unused"]), &[]);
        assert_eq!(m, ok(Vec::new()));
    }

    const FNS: [fn(i64) -> i64; 3] = [|x| x + 1, |x| x * 2, |x| -x];

    fn arb_log() -> impl Strategy<Value = ErrorLog> {
        proptest::collection::vec("[a-c]{1,2}", 0..3)
            .prop_map(ErrorLog::from_messages)
    }

    fn arb_ea_i64() -> impl Strategy<Value = EA<ErrorLog, i64>> {
        prop_oneof![
            arb_log().prop_map(throw_ea),
            (-100i64..100).prop_map(ea_pure),
        ]
    }

    fn arb_ea_fn() -> impl Strategy<Value = EA<ErrorLog, fn(i64) -> i64>> {
        prop_oneof![
            arb_log().prop_map(throw_ea),
            (0usize..FNS.len()).prop_map(|i| ea_pure(FNS[i])),
        ]
    }

    proptest! {
        #[test]
        fn law_applicative_identity(v in arb_ea_i64()) {
            let id: EA<ErrorLog, fn(i64) -> i64> = ea_pure(|x| x);
            prop_assert_eq!(ea_apply(id, v.clone()), v);
        }

        #[test]
        fn law_applicative_homomorphism(i in 0usize..FNS.len(), x in -100i64..100) {
            let lhs = ea_apply(ea_pure::<ErrorLog, _>(FNS[i]), ea_pure(x));
            prop_assert_eq!(lhs, ea_pure(FNS[i](x)));
        }

        #[test]
        fn law_applicative_interchange(u in arb_ea_fn(), y in -100i64..100) {
            let lhs = ea_apply(u.clone(), ea_pure(y));
            let rhs = ea_apply(ea_pure(move |f: fn(i64) -> i64| f(y)), u);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn law_applicative_composition(
            u in arb_ea_fn(),
            v in arb_ea_fn(),
            w in arb_ea_i64(),
        ) {
            let compose = |f: fn(i64) -> i64| move |g: fn(i64) -> i64| move |x: i64| f(g(x));
            let lhs = ea_apply(
                ea_apply(ea_apply(ea_pure(compose), u.clone()), v.clone()),
                w.clone(),
            );
            let rhs = ea_apply(u, ea_apply(v, w));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn law_error_left_identity(l in arb_log()) {
            let h = |e: ErrorLog| throw_ea::<_, i64>(e.combine(log(&["h"])));
            prop_assert_eq!(catch_ea(throw_ea(l.clone()), h), h(l));
        }

        #[test]
        fn law_error_right_identity(m in arb_ea_i64()) {
            prop_assert_eq!(catch_ea(m.clone(), throw_ea), m);
        }

        #[test]
        fn law_error_associativity(m in arb_ea_i64()) {
            let h = |e: ErrorLog| throw_ea::<_, i64>(e.combine(log(&["h"])));
            let k = |e: ErrorLog| {
                if e.messages().len().is_multiple_of(2) {
                    ea_pure(e.messages().len() as i64)
                } else {
                    throw_ea(e)
                }
            };
            let lhs = catch_ea(catch_ea(m.clone(), h), k);
            let rhs = catch_ea(m, |e| catch_ea(h(e), k));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn law_pure_left_zero(a in -100i64..100) {
            let h = |e: ErrorLog| throw_ea::<_, i64>(e);
            prop_assert_eq!(catch_ea(ea_pure(a), h), ea_pure(a));
        }

        #[test]
        fn double_failure_error_component_is_the_monoid_product(
            e1 in arb_log(),
            e2 in arb_log(),
        ) {
            let f: EA<ErrorLog, fn(i64) -> i64> = throw_ea(e1.clone());
            let a: EA<ErrorLog, i64> = throw_ea(e2.clone());
            prop_assert_eq!(ea_apply(f, a), throw_ea(e1.combine(e2)));
        }
    }
}
