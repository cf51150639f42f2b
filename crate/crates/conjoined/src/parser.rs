//! Stateful parser combinators as a carrier of the algebra.
//!
//! A [`Parser<S, E, A>`] is a function from a state `S` to either a failure
//! `(E, S)` or a success `(A, S)`; both sides carry the state reached when
//! the parser stopped. Failure is data, so the error index supports a real
//! `throw`/`catch` pair, and `catch` comes in two flavours chosen by
//! [`CatchMode`]:
//!
//! * [`CatchMode::Backtrack`]: the handler runs from the state the failed
//!   parser *started* in (roll back on failure).
//! * [`CatchMode::Keep`]: the handler runs from the state the failed parser
//!   *stopped* in (keep consumed input).
//!
//! Law sheet:
//!
//! | law                      | Keep        | Backtrack                        |
//! |--------------------------|-------------|----------------------------------|
//! | value monad laws         | structural  | structural                       |
//! | error left identity      | structural  | structural                       |
//! | error right identity     | structural  | error-component observation only |
//! | error associativity      | structural  | structural                       |
//! | left zero interactions   | structural  | structural                       |
//! | alternation monoid laws  | structural  | structural                       |
//!
//! The one caveat is deliberate: `catch_p(m, throw_p, Backtrack)` re-runs
//! the handler from the original state, so when `m` fails after consuming
//! input the rethrown failure reports the original state while `m` itself
//! reports the failure-point state. The error payload is identical, hence
//! the law holds when failures are compared by error component alone, and a
//! witness test pins the structural counterexample.
//!
//! Alternation ([`alt`], [`alt_empty`]) needs errors that form a
//! [`Monoid`]; a double failure combines both errors left-to-right.
//! [`ErrorLog`] is the reference error monoid: an ordered list of messages.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::monoid::Monoid;
use crate::outcome::Outcome;

/// An ordered list of error messages; the reference error monoid.
///
/// Combining two logs concatenates them, keeping the left operand's
/// messages first, so alternation reports every branch's complaint in the
/// order the branches were tried.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ErrorLog(Vec<String>);

impl ErrorLog {
    /// The empty log.
    pub fn new() -> Self {
        ErrorLog(Vec::new())
    }

    /// A log holding a single message.
    pub fn of(message: impl Into<String>) -> Self {
        ErrorLog(vec![message.into()])
    }

    /// A log holding the given messages in order.
    pub fn from_messages<I, T>(messages: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        ErrorLog(messages.into_iter().map(Into::into).collect())
    }

    /// The messages in order.
    pub fn messages(&self) -> &[String] {
        &self.0
    }

    /// Appends one message, returning the extended log.
    pub fn push(mut self, message: impl Into<String>) -> Self {
        self.0.push(message.into());
        self
    }
}

impl Monoid for ErrorLog {
    fn empty() -> Self {
        ErrorLog::new()
    }

    fn combine(mut self, mut other: Self) -> Self {
        self.0.append(&mut other.0);
        self
    }
}

/// How `catch_p` resumes after a failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatchMode {
    /// Run the handler from the state the failed parser started in.
    Backtrack,
    /// Run the handler from the state the failed parser stopped in.
    Keep,
}

/// A stateful parser: a function from `S` to failure `(E, S)` or success
/// `(A, S)`.
///
/// Parsers are immutable function values; cloning shares the underlying
/// closure and running the same parser from several threads on distinct
/// states is safe.
pub struct Parser<S, E, A> {
    run: Arc<dyn Fn(S) -> Outcome<(E, S), (A, S)> + Send + Sync>,
}

impl<S, E, A> Clone for Parser<S, E, A> {
    fn clone(&self) -> Self {
        Parser {
            run: Arc::clone(&self.run),
        }
    }
}

impl<S, E, A> Parser<S, E, A> {
    /// Wraps a state-transition function as a parser.
    pub fn new(run: impl Fn(S) -> Outcome<(E, S), (A, S)> + Send + Sync + 'static) -> Self {
        Parser { run: Arc::new(run) }
    }

    /// Runs the parser on a state.
    pub fn run(&self, s: S) -> Outcome<(E, S), (A, S)> {
        (self.run)(s)
    }

    /// Applies a function to the produced value, leaving state and errors
    /// untouched.
    pub fn map<B>(self, f: impl Fn(A) -> B + Send + Sync + 'static) -> Parser<S, E, B>
    where
        S: 'static,
        E: 'static,
        A: 'static,
    {
        Parser::new(move |s| match self.run(s) {
            Outcome::Fail(err) => Outcome::Fail(err),
            Outcome::Ok((a, rest)) => Outcome::Ok((f(a), rest)),
        })
    }
}

/// Runs a parser on an initial state.
pub fn run_parser<S, E, A>(p: &Parser<S, E, A>, s: S) -> Outcome<(E, S), (A, S)> {
    p.run(s)
}

/// Succeeds with `a`, leaving the state untouched; the value-index unit.
pub fn pure_p<S, E, A>(a: A) -> Parser<S, E, A>
where
    S: 'static,
    E: 'static,
    A: Clone + Send + Sync + 'static,
{
    Parser::new(move |s| Outcome::Ok((a.clone(), s)))
}

/// Fails with `e`, leaving the state untouched; the error-index unit.
pub fn throw_p<S, E, A>(e: E) -> Parser<S, E, A>
where
    S: 'static,
    E: Clone + Send + Sync + 'static,
    A: 'static,
{
    Parser::new(move |s| Outcome::Fail((e.clone(), s)))
}

/// Sequences in the value index: runs `p`, then feeds its value to `f` and
/// continues from the state `p` reached.
pub fn bind_p<S, E, A, B>(
    p: Parser<S, E, A>,
    f: impl Fn(A) -> Parser<S, E, B> + Send + Sync + 'static,
) -> Parser<S, E, B>
where
    S: 'static,
    E: 'static,
    A: 'static,
    B: 'static,
{
    Parser::new(move |s| match p.run(s) {
        Outcome::Fail(err) => Outcome::Fail(err),
        Outcome::Ok((a, rest)) => f(a).run(rest),
    })
}

/// The rollback twin of [`bind_p`]: on success the continuation runs from
/// the *original* state, discarding what `p` consumed. Still a lawful
/// sequencing, but no longer a parser in spirit.
pub fn bind_rollback<S, E, A, B>(
    p: Parser<S, E, A>,
    f: impl Fn(A) -> Parser<S, E, B> + Send + Sync + 'static,
) -> Parser<S, E, B>
where
    S: Clone + 'static,
    E: 'static,
    A: 'static,
    B: 'static,
{
    Parser::new(move |s: S| match p.run(s.clone()) {
        Outcome::Fail(err) => Outcome::Fail(err),
        Outcome::Ok((a, _)) => f(a).run(s),
    })
}

/// Sequences in the error index: runs `p`, and on failure feeds the error
/// to the handler. `mode` picks the state the handler resumes from; the
/// handler may change the error type.
pub fn catch_p<S, E, F, A>(
    p: Parser<S, E, A>,
    h: impl Fn(E) -> Parser<S, F, A> + Send + Sync + 'static,
    mode: CatchMode,
) -> Parser<S, F, A>
where
    S: Clone + 'static,
    E: 'static,
    F: 'static,
    A: 'static,
{
    Parser::new(move |s: S| match p.run(s.clone()) {
        Outcome::Ok(ok) => Outcome::Ok(ok),
        Outcome::Fail((e, failure_state)) => {
            let resume = match mode {
                CatchMode::Backtrack => s,
                CatchMode::Keep => failure_state,
            };
            h(e).run(resume)
        }
    })
}

/// `p`, or on failure `q` from the original state, discarding `p`'s error:
/// `catch_p(p, |_| q, Backtrack)`.
pub fn or_else<S, E, F, A>(p: Parser<S, E, A>, q: Parser<S, F, A>) -> Parser<S, F, A>
where
    S: Clone + 'static,
    E: 'static,
    F: 'static,
    A: 'static,
{
    catch_p(p, move |_| q.clone(), CatchMode::Backtrack)
}

/// Binary alternation: first success wins; a double failure combines both
/// errors with the monoid, left operand first.
///
/// With [`CatchMode::Backtrack`], `q` is retried from the original state
/// and a double failure reports the original state. With
/// [`CatchMode::Keep`], `q` continues from `p`'s failure state and a double
/// failure reports `q`'s failure state.
pub fn alt<S, E, A>(p: Parser<S, E, A>, q: Parser<S, E, A>, mode: CatchMode) -> Parser<S, E, A>
where
    S: Clone + 'static,
    E: Monoid + Send + Sync + 'static,
    A: 'static,
{
    Parser::new(move |s: S| match p.run(s.clone()) {
        Outcome::Ok(ok) => Outcome::Ok(ok),
        Outcome::Fail((e, p_failure_state)) => {
            let resume = match mode {
                CatchMode::Backtrack => s.clone(),
                CatchMode::Keep => p_failure_state,
            };
            match q.run(resume) {
                Outcome::Ok(ok) => Outcome::Ok(ok),
                Outcome::Fail((f, q_failure_state)) => {
                    let reported = match mode {
                        CatchMode::Backtrack => s,
                        CatchMode::Keep => q_failure_state,
                    };
                    Outcome::Fail((e.combine(f), reported))
                }
            }
        }
    })
}

/// The identity of alternation: fails with the empty error, state
/// untouched.
pub fn alt_empty<S, E, A>() -> Parser<S, E, A>
where
    S: 'static,
    E: Monoid + Send + Sync + 'static,
    A: 'static,
{
    Parser::new(|s| Outcome::Fail((E::empty(), s)))
}

/// One parse attempt after another, collected until the first failure.
///
/// `first_error` is set only when the very first attempt fails (so `items`
/// is empty). An attempt that succeeds without moving the state is
/// included once and then iteration halts, which keeps repetition total on
/// non-consuming parsers.
struct Repeat<S, E, A> {
    items: Vec<A>,
    rest: S,
    first_error: Option<(E, S)>,
}

fn run_repeat<S, E, A>(p: &Parser<S, E, A>, start: S) -> Repeat<S, E, A>
where
    S: Clone + PartialEq,
{
    let mut items = Vec::new();
    let mut cur = start;
    loop {
        match p.run(cur.clone()) {
            Outcome::Fail((e, failure_state)) => {
                let first_error = if items.is_empty() {
                    Some((e, failure_state))
                } else {
                    None
                };
                return Repeat {
                    items,
                    rest: cur,
                    first_error,
                };
            }
            Outcome::Ok((a, next)) => {
                let progressed = next != cur;
                items.push(a);
                cur = next;
                if !progressed {
                    return Repeat {
                        items,
                        rest: cur,
                        first_error: None,
                    };
                }
            }
        }
    }
}

/// Zero or more repetitions of `p`; never fails, so its error index is
/// free. Equivalent to `or_else(some_p(p), pure_p(vec![]))`.
pub fn many_p<S, E, F, A>(p: Parser<S, E, A>) -> Parser<S, F, Vec<A>>
where
    S: Clone + PartialEq + 'static,
    E: 'static,
    F: 'static,
    A: 'static,
{
    Parser::new(move |s| {
        let rep = run_repeat(&p, s);
        Outcome::Ok((rep.items, rep.rest))
    })
}

/// One or more repetitions of `p`; fails with `p`'s error exactly when the
/// first attempt fails. Unfolds as `p` followed by [`many_p`], truncated by
/// the no-progress guard.
pub fn some_p<S, E, A>(p: Parser<S, E, A>) -> Parser<S, E, Vec<A>>
where
    S: Clone + PartialEq + 'static,
    E: 'static,
    A: 'static,
{
    Parser::new(move |s| {
        let rep = run_repeat(&p, s);
        match rep.first_error {
            Some(err) => Outcome::Fail(err),
            None => Outcome::Ok((rep.items, rep.rest)),
        }
    })
}

/// Tries the parsers in order with backtracking alternation, starting from
/// [`alt_empty`]; a total failure combines every branch's error.
pub fn choice<S, E, A>(parsers: Vec<Parser<S, E, A>>) -> Parser<S, E, A>
where
    S: Clone + 'static,
    E: Monoid + Send + Sync + 'static,
    A: 'static,
{
    parsers
        .into_iter()
        .fold(alt_empty(), |acc, p| alt(acc, p, CatchMode::Backtrack))
}

/// Succeeds exactly at the end of input.
pub fn eof() -> Parser<String, ErrorLog, ()> {
    Parser::new(|s: String| {
        if s.is_empty() {
            Outcome::Ok(((), s))
        } else {
            Outcome::Fail((ErrorLog::of("expected eof"), s))
        }
    })
}

/// Consumes exactly the character `x`.
pub fn char_p(x: char) -> Parser<String, ErrorLog, ()> {
    Parser::new(move |s: String| {
        let mut chars = s.chars();
        match chars.next() {
            None => Outcome::Fail((ErrorLog::of("unexpected eof"), s)),
            Some(c) if c == x => Outcome::Ok(((), chars.as_str().to_string())),
            Some(c) => Outcome::Fail((ErrorLog::of(format!("expected `{x}' got `{c}'")), s)),
        }
    })
}

/// Consumes exactly the string `w`, one character at a time.
pub fn string_p(w: &str) -> Parser<String, ErrorLog, ()> {
    w.chars().rev().fold(pure_p(()), |rest, c| {
        bind_p(char_p(c), move |_| rest.clone())
    })
}
