//! The demo grammar: arithmetic expressions over digits, `+`, `*`, and
//! parentheses, parsed with the library's combinators and terminated by
//! end of input.
//!
//! Standard precedence: `*` binds tighter than `+`, both left
//! associative. Alternation backtracks, so a total failure reports the
//! state the choice started at and every branch's complaint.

use conjoined::outcome::Outcome;
use conjoined::parser::{
    alt, bind_p, char_p, eof, many_p, some_p, CatchMode, ErrorLog, Parser,
};
use serde::Serialize;

/// An arithmetic expression.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Expr {
    /// A decimal literal.
    Lit(i64),
    /// Addition.
    Add(Box<Expr>, Box<Expr>),
    /// Multiplication.
    Mul(Box<Expr>, Box<Expr>),
}

type PE<A> = Parser<String, ErrorLog, A>;

/// Defers construction to parse time, so the grammar can recurse.
fn lazy<A: 'static>(build: fn() -> PE<A>) -> PE<A> {
    Parser::new(move |s| build().run(s))
}

fn digit_p() -> PE<i64> {
    Parser::new(|s: String| match s.chars().next() {
        None => Outcome::Fail((ErrorLog::of("unexpected eof"), s)),
        Some(c) if c.is_ascii_digit() => {
            let rest = s[c.len_utf8()..].to_string();
            Outcome::Ok((i64::from(c as u8 - b'0'), rest))
        }
        Some(c) => Outcome::Fail((ErrorLog::of(format!("expected digit got `{c}'")), s)),
    })
}

fn number_p() -> PE<Expr> {
    some_p(digit_p()).map(|digits| Expr::Lit(digits.iter().fold(0, |n, d| n * 10 + d)))
}

fn parens_p() -> PE<Expr> {
    bind_p(char_p('('), |_| {
        bind_p(lazy(expr_p), |e| char_p(')').map(move |_| e.clone()))
    })
}

fn factor_p() -> PE<Expr> {
    alt(number_p(), parens_p(), CatchMode::Backtrack)
}

fn chain(operand: fn() -> PE<Expr>, op: char, node: fn(Box<Expr>, Box<Expr>) -> Expr) -> PE<Expr> {
    bind_p(operand(), move |first| {
        many_p::<_, _, ErrorLog, _>(bind_p(char_p(op), move |_| lazy(operand))).map(move |rest| {
            rest.into_iter()
                .fold(first.clone(), |l, r| node(Box::new(l), Box::new(r)))
        })
    })
}

fn term_p() -> PE<Expr> {
    chain(factor_p, '*', Expr::Mul)
}

fn expr_p() -> PE<Expr> {
    chain(term_p, '+', Expr::Add)
}

/// The complete demo parser: an expression followed by end of input.
pub fn expr_grammar() -> PE<Expr> {
    bind_p(expr_p(), |e| eof().map(move |_| e.clone()))
}
