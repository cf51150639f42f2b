//! The first-order carrier: a finished computation.
//!
//! [`Outcome<E, A>`] is either `Fail(e)` or `Ok(a)`. It is the simplest
//! instance of the algebra and also the observation type most of the other
//! carriers reduce to when run.
//!
//! Law sheet (all hold by structural equality):
//!
//! | law                 | statement                                                |
//! |---------------------|----------------------------------------------------------|
//! | value left identity | `bind(pure(a), f) == f(a)`                               |
//! | value right identity| `bind(m, pure) == m`                                     |
//! | value associativity | `bind(bind(m, f), g) == bind(m, \|x\| bind(f(x), g))`    |
//! | error left identity | `catch(throw(e), h) == h(e)`                             |
//! | error right identity| `catch(m, throw) == m`                                   |
//! | error associativity | `catch(catch(m, h), k) == catch(m, \|e\| catch(h(e), k))`|
//! | throw left zero     | `bind(throw(e), f) == throw(e)`                          |
//! | pure left zero      | `catch(pure(a), h) == pure(a)`                           |
//!
//! The two indices are mirror images: `catch` over `Outcome<E, A>` is `bind`
//! over `Outcome<A, E>` conjugated by [`swap`](Outcome::swap).

/// A computation that has either failed with an error or produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome<E, A> {
    /// The computation failed with an error payload.
    Fail(E),
    /// The computation produced a value.
    Ok(A),
}

/// Injects a value; the unit of the value index.
pub fn pure<E, A>(a: A) -> Outcome<E, A> {
    Outcome::Ok(a)
}

/// Injects an error; the unit of the error index.
pub fn throw<E, A>(e: E) -> Outcome<E, A> {
    Outcome::Fail(e)
}

impl<E, A> Outcome<E, A> {
    /// Sequences in the value index: feeds an `Ok` value to `f`, passes
    /// `Fail` through untouched.
    pub fn bind<B>(self, f: impl FnOnce(A) -> Outcome<E, B>) -> Outcome<E, B> {
        match self {
            Outcome::Fail(e) => Outcome::Fail(e),
            Outcome::Ok(a) => f(a),
        }
    }

    /// Sequences in the error index: feeds a `Fail` payload to the handler,
    /// passes `Ok` through untouched. The handler may change the error type.
    pub fn catch<F>(self, h: impl FnOnce(E) -> Outcome<F, A>) -> Outcome<F, A> {
        match self {
            Outcome::Fail(e) => h(e),
            Outcome::Ok(a) => Outcome::Ok(a),
        }
    }

    /// Applies a function to the value inside `Ok`.
    pub fn map<B>(self, f: impl FnOnce(A) -> B) -> Outcome<E, B> {
        self.bind(|a| Outcome::Ok(f(a)))
    }

    /// Applies a function to the error inside `Fail`.
    pub fn map_fail<F>(self, f: impl FnOnce(E) -> F) -> Outcome<F, A> {
        self.catch(|e| Outcome::Fail(f(e)))
    }

    /// Exchanges the two indices: `Fail(e)` becomes `Ok(e)` and `Ok(a)`
    /// becomes `Fail(a)`. Conjugating `catch` by `swap` yields `bind`.
    pub fn swap(self) -> Outcome<A, E> {
        match self {
            Outcome::Fail(e) => Outcome::Ok(e),
            Outcome::Ok(a) => Outcome::Fail(a),
        }
    }

    /// True for `Ok`.
    pub fn is_ok(&self) -> bool {
        matches!(self, Outcome::Ok(_))
    }

    /// True for `Fail`.
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }
}

/// Composes two value-index arrows: `fish_value(f, g)(a) == bind(f(a), g)`.
pub fn fish_value<E, A, B, C>(
    f: impl Fn(A) -> Outcome<E, B>,
    g: impl Fn(B) -> Outcome<E, C>,
) -> impl Fn(A) -> Outcome<E, C> {
    move |a| f(a).bind(&g)
}

/// Composes two error-index arrows: `fish_error(f, g)(e) == catch(f(e), g)`.
pub fn fish_error<E, F, G, A>(
    f: impl Fn(E) -> Outcome<F, A>,
    g: impl Fn(F) -> Outcome<G, A>,
) -> impl Fn(E) -> Outcome<G, A> {
    move |e| f(e).catch(&g)
}
