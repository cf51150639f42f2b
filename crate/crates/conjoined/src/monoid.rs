//! Monoid structure for error payloads.
//!
//! Error types that support alternation and accumulation must form a
//! monoid: an associative [`combine`](Monoid::combine) with
//! [`empty`](Monoid::empty) as its two-sided identity.
//!
//! ```text
//! combine(empty(), x)           == x
//! combine(x, empty())           == x
//! combine(x, combine(y, z))     == combine(combine(x, y), z)
//! ```

/// An associative combine with a two-sided identity.
///
/// # Laws
///
/// * `combine(empty(), x) == x`
/// * `combine(x, empty()) == x`
/// * `combine(x, combine(y, z)) == combine(combine(x, y), z)`
pub trait Monoid: Clone {
    /// The identity element.
    fn empty() -> Self;

    /// Associative combination; for error payloads this keeps the left
    /// operand's content before the right operand's.
    fn combine(self, other: Self) -> Self;
}

impl Monoid for String {
    fn empty() -> Self {
        String::new()
    }

    fn combine(mut self, other: Self) -> Self {
        self.push_str(&other);
        self
    }
}

impl<T: Clone> Monoid for Vec<T> {
    fn empty() -> Self {
        Vec::new()
    }

    fn combine(mut self, mut other: Self) -> Self {
        self.append(&mut other);
        self
    }
}

impl Monoid for () {
    fn empty() -> Self {}

    fn combine(self, _other: Self) -> Self {}
}
