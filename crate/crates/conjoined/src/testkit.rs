//! Independent oracles and program generators used by the heavier test
//! suites.
//!
//! Nothing here is needed to *use* the library; it exists so that the
//! combinators can be checked against implementations that share no code
//! with them:
//!
//! * a small combinator-tree grammar for the parser kernel, with an
//!   exhaustive enumerator, a compiler into the real combinators, and a
//!   [direct interpreter](interpret_tree) that re-derives the semantics
//!   by recursion;
//! * a random effect-program grammar compiled separately into [`EIO`]
//!   and native [`SEIO`], with a [bisimulation runner](bisimulate) that
//!   compares the two runs world by world;
//! * a [fold oracle](ea_fold_oracle) for the error-accumulating
//!   traversal, plus an exhaustive sweep against it.
//!
//! Everything is deterministic: random choices come from seeds derived
//! with [`crate::laws::seed`].

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::applicative::{ea_pure, map_ap, throw_ea, EA};
use crate::eio::{
    catch_eio, catch_seio, eio_bind, eio_pure, from_scott, read_line, read_line_s, seio_bind,
    seio_pure, throw_eio, throw_seio, tick, tick_s, write_line, write_line_s, World, EIO, SEIO,
};
use crate::laws::seed::{derive_case_seed, rng_from};
use crate::monoid::Monoid;
use crate::outcome::Outcome;
use crate::parser::{
    alt, bind_p, catch_p, char_p, pure_p, run_parser, throw_p, CatchMode, ErrorLog, Parser,
};

/// Outcome of comparing an implementation against an oracle over a swept
/// input space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    /// Number of (subject, input) pairs compared.
    pub checks: u64,
    /// Number of disagreements.
    pub mismatches: u64,
    /// Human-readable description of the first disagreement, if any.
    pub first_mismatch: Option<String>,
}

impl OracleReport {
    fn record(&mut self, agree: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !agree {
            self.mismatches += 1;
            if self.first_mismatch.is_none() {
                self.first_mismatch = Some(describe());
            }
        }
    }

    fn new() -> Self {
        OracleReport {
            checks: 0,
            mismatches: 0,
            first_mismatch: None,
        }
    }
}

/// One node of the parser combinator-tree grammar.
///
/// The value type is fixed to `i64`: a matched character denotes its code
/// point, `Pure` carries a literal, and the `Bind`/`Catch` shapes embed a
/// fixed menu of arrows and handlers so the space stays enumerable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParserTree {
    /// Succeed with the literal.
    Pure(i64),
    /// Fail with a one-message log.
    Throw(&'static str),
    /// Match one character, yielding its code point.
    Char(char),
    /// Binary alternation in the given mode.
    Alt(CatchMode, Box<ParserTree>, Box<ParserTree>),
    /// Value-index sequencing through one of the fixed arrows.
    Bind(Box<ParserTree>, ArrowKind),
    /// Error-index sequencing through one of the fixed handlers.
    Catch(Box<ParserTree>, HandlerKind, CatchMode),
}

/// The fixed arrow menu for [`ParserTree::Bind`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrowKind {
    /// `λv. pure (v + 1)`
    AddOne,
    /// `λv. if even v then pure v else throw ["odd"]`
    GuardEven,
}

/// The fixed handler menu for [`ParserTree::Catch`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HandlerKind {
    /// `λe. pure 0`
    ConstZero,
    /// `λe. throw (e ++ ["tagged"])`
    Tag,
}

/// Every tree of depth at most `max_depth` over the grammar: 4 leaves,
/// with interior nodes drawing children from the previous depth.
pub fn parser_trees(max_depth: usize) -> Vec<ParserTree> {
    let leaves = vec![
        ParserTree::Pure(1),
        ParserTree::Throw("x"),
        ParserTree::Char('a'),
        ParserTree::Char('b'),
    ];
    if max_depth <= 1 {
        return leaves;
    }
    let smaller = parser_trees(max_depth - 1);
    let mut out = leaves;
    for mode in [CatchMode::Backtrack, CatchMode::Keep] {
        for left in &smaller {
            for right in &smaller {
                out.push(ParserTree::Alt(
                    mode,
                    Box::new(left.clone()),
                    Box::new(right.clone()),
                ));
            }
        }
    }
    for arrow in [ArrowKind::AddOne, ArrowKind::GuardEven] {
        for child in &smaller {
            out.push(ParserTree::Bind(Box::new(child.clone()), arrow));
        }
    }
    for handler in [HandlerKind::ConstZero, HandlerKind::Tag] {
        for mode in [CatchMode::Backtrack, CatchMode::Keep] {
            for child in &smaller {
                out.push(ParserTree::Catch(Box::new(child.clone()), handler, mode));
            }
        }
    }
    out
}

/// Compiles a tree into the real combinators.
pub fn compile_tree(tree: &ParserTree) -> Parser<String, ErrorLog, i64> {
    match tree {
        ParserTree::Pure(v) => pure_p(*v),
        ParserTree::Throw(tag) => throw_p(ErrorLog::of(*tag)),
        ParserTree::Char(c) => {
            let c = *c;
            char_p(c).map(move |_| c as i64)
        }
        ParserTree::Alt(mode, left, right) => {
            alt(compile_tree(left), compile_tree(right), *mode)
        }
        ParserTree::Bind(child, ArrowKind::AddOne) => {
            bind_p(compile_tree(child), |v| pure_p(v + 1))
        }
        ParserTree::Bind(child, ArrowKind::GuardEven) => bind_p(compile_tree(child), |v| {
            if v % 2 == 0 {
                pure_p(v)
            } else {
                throw_p(ErrorLog::of("odd"))
            }
        }),
        ParserTree::Catch(child, HandlerKind::ConstZero, mode) => {
            catch_p(compile_tree(child), |_| pure_p(0), *mode)
        }
        ParserTree::Catch(child, HandlerKind::Tag, mode) => catch_p(
            compile_tree(child),
            |e: ErrorLog| throw_p(e.push("tagged")),
            *mode,
        ),
    }
}

/// Evaluates a tree by direct recursion on the semantics, sharing no code
/// with the combinators.
pub fn interpret_tree(
    tree: &ParserTree,
    state: &str,
) -> Outcome<(ErrorLog, String), (i64, String)> {
    match tree {
        ParserTree::Pure(v) => Outcome::Ok((*v, state.to_string())),
        ParserTree::Throw(tag) => Outcome::Fail((ErrorLog::of(*tag), state.to_string())),
        ParserTree::Char(x) => {
            let mut chars = state.chars();
            match chars.next() {
                None => Outcome::Fail((ErrorLog::of("unexpected eof"), state.to_string())),
                Some(c) if c == *x => Outcome::Ok((*x as i64, chars.as_str().to_string())),
                Some(c) => Outcome::Fail((
                    ErrorLog::of(format!("expected `{x}' got `{c}'")),
                    state.to_string(),
                )),
            }
        }
        ParserTree::Alt(mode, left, right) => match interpret_tree(left, state) {
            Outcome::Ok(ok) => Outcome::Ok(ok),
            Outcome::Fail((e, left_failure)) => {
                let resume = match mode {
                    CatchMode::Backtrack => state.to_string(),
                    CatchMode::Keep => left_failure,
                };
                match interpret_tree(right, &resume) {
                    Outcome::Ok(ok) => Outcome::Ok(ok),
                    Outcome::Fail((f, right_failure)) => {
                        let reported = match mode {
                            CatchMode::Backtrack => state.to_string(),
                            CatchMode::Keep => right_failure,
                        };
                        Outcome::Fail((e.combine(f), reported))
                    }
                }
            }
        },
        ParserTree::Bind(child, arrow) => match interpret_tree(child, state) {
            Outcome::Fail(failure) => Outcome::Fail(failure),
            Outcome::Ok((v, rest)) => match arrow {
                ArrowKind::AddOne => Outcome::Ok((v + 1, rest)),
                ArrowKind::GuardEven => {
                    if v % 2 == 0 {
                        Outcome::Ok((v, rest))
                    } else {
                        Outcome::Fail((ErrorLog::of("odd"), rest))
                    }
                }
            },
        },
        ParserTree::Catch(child, handler, mode) => match interpret_tree(child, state) {
            Outcome::Ok(ok) => Outcome::Ok(ok),
            Outcome::Fail((e, failure_state)) => {
                let resume = match mode {
                    CatchMode::Backtrack => state.to_string(),
                    CatchMode::Keep => failure_state,
                };
                match handler {
                    HandlerKind::ConstZero => Outcome::Ok((0, resume)),
                    HandlerKind::Tag => Outcome::Fail((e.push("tagged"), resume)),
                }
            }
        },
    }
}

/// All strings over the alphabet `{a, b}` of length at most `max_len`,
/// shortest first.
pub fn ab_inputs(max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut frontier = vec![String::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for stem in &frontier {
            for c in ['a', 'b'] {
                let mut grown = stem.clone();
                grown.push(c);
                next.push(grown);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// The observation panel parser adapters run computations on: every
/// string over `{a, b}` of length at most 3, plus one longer probe.
pub fn parser_observation_inputs() -> Vec<String> {
    let mut inputs = ab_inputs(3);
    inputs.push("abab".to_string());
    inputs
}

/// Sweeps every tree of depth at most `max_depth` against every input of
/// length at most `max_input_len`, comparing the compiled combinators
/// with the direct interpreter.
pub fn parser_oracle_sweep(max_depth: usize, max_input_len: usize) -> OracleReport {
    let trees = parser_trees(max_depth);
    let inputs = ab_inputs(max_input_len);
    let mut report = OracleReport::new();
    for tree in &trees {
        let compiled = compile_tree(tree);
        for input in &inputs {
            let kernel = run_parser(&compiled, input.clone());
            let oracle = interpret_tree(tree, input);
            report.record(kernel == oracle, || {
                format!(
                    "tree {tree:?} on input {input:?}: kernel {kernel:?}, oracle {oracle:?}"
                )
            });
        }
    }
    report
}

/// One node of the random effect-program grammar. The value type is
/// fixed to `i64`; errors are short strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Prog {
    /// Succeed with the literal.
    Pure(i64),
    /// Fail with the message.
    Throw(String),
    /// Write the line, then succeed with 0.
    WriteLine(String),
    /// Read a line and succeed with its length, or fail with the message.
    ReadLen(String),
    /// Advance the tick, then succeed with 0.
    Tick,
    /// Value-index sequencing through an arrow.
    Bind(Box<Prog>, ArrowSpec),
    /// Error-index sequencing through a handler.
    Catch(Box<Prog>, HandlerSpec),
}

/// Arrows for [`Prog::Bind`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrowSpec {
    /// Ignore the value and run the embedded program.
    Const(Box<Prog>),
    /// Write `v=<value>` and pass the value through.
    WriteVal,
    /// Pass non-negative values through; throw `negative` otherwise.
    GuardNonNegative,
}

/// Handlers for [`Prog::Catch`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HandlerSpec {
    /// Ignore the error and run the embedded program.
    Const(Box<Prog>),
    /// Rethrow the error unchanged.
    Rethrow,
    /// Write `err:<message>` and succeed with the message length.
    WriteErr,
}

/// Number of primitive steps a program denotes, counting every node and
/// one step per non-constant arrow or handler.
pub fn prog_steps(p: &Prog) -> u32 {
    match p {
        Prog::Pure(_) | Prog::Throw(_) | Prog::WriteLine(_) | Prog::ReadLen(_) | Prog::Tick => 1,
        Prog::Bind(m, arrow) => {
            1 + prog_steps(m)
                + match arrow {
                    ArrowSpec::Const(q) => prog_steps(q),
                    ArrowSpec::WriteVal | ArrowSpec::GuardNonNegative => 1,
                }
        }
        Prog::Catch(m, handler) => {
            1 + prog_steps(m)
                + match handler {
                    HandlerSpec::Const(q) => prog_steps(q),
                    HandlerSpec::Rethrow | HandlerSpec::WriteErr => 1,
                }
        }
    }
}

fn gen_leaf(rng: &mut ChaCha8Rng) -> Prog {
    match rng.gen_range(0u32..5) {
        0 => Prog::Pure(rng.gen_range(-5i64..10)),
        1 => Prog::Throw(format!("e{}", rng.gen_range(0u32..3))),
        2 => Prog::WriteLine(format!("w{}", rng.gen_range(0u32..3))),
        3 => Prog::ReadLen(format!("eof{}", rng.gen_range(0u32..2))),
        _ => Prog::Tick,
    }
}

/// Generates a random program of at most `budget` primitive steps.
pub fn gen_prog(rng: &mut ChaCha8Rng, budget: u32) -> Prog {
    if budget < 3 {
        return gen_leaf(rng);
    }
    match rng.gen_range(0u32..10) {
        0..=2 => gen_leaf(rng),
        3..=6 => match rng.gen_range(0u32..4) {
            0 => {
                let left = rng.gen_range(1..=budget - 2);
                let m = gen_prog(rng, left);
                let payload = gen_prog(rng, budget - 1 - left);
                Prog::Bind(Box::new(m), ArrowSpec::Const(Box::new(payload)))
            }
            1 | 2 => Prog::Bind(Box::new(gen_prog(rng, budget - 2)), ArrowSpec::WriteVal),
            _ => Prog::Bind(
                Box::new(gen_prog(rng, budget - 2)),
                ArrowSpec::GuardNonNegative,
            ),
        },
        _ => match rng.gen_range(0u32..4) {
            0 => {
                let left = rng.gen_range(1..=budget - 2);
                let m = gen_prog(rng, left);
                let payload = gen_prog(rng, budget - 1 - left);
                Prog::Catch(Box::new(m), HandlerSpec::Const(Box::new(payload)))
            }
            1 => Prog::Catch(Box::new(gen_prog(rng, budget - 2)), HandlerSpec::Rethrow),
            _ => Prog::Catch(Box::new(gen_prog(rng, budget - 2)), HandlerSpec::WriteErr),
        },
    }
}

/// A small random world: up to three input lines, sometimes pre-existing
/// output, a small starting tick.
pub fn gen_world(rng: &mut ChaCha8Rng) -> World {
    let lines = rng.gen_range(0usize..4);
    let input = (0..lines)
        .map(|i| match rng.gen_range(0u32..3) {
            0 => String::new(),
            1 => format!("in{i}"),
            _ => "line".to_string(),
        })
        .collect();
    World {
        input,
        output: if rng.gen_bool(0.3) {
            vec!["pre".to_string()]
        } else {
            Vec::new()
        },
        tick: rng.gen_range(0u64..5),
    }
}

/// The answer type Scott-encoded effect programs are observed at.
pub type EffObs = (Outcome<String, i64>, World);

/// Compiles a program into the state-passing form.
pub fn compile_eio(p: &Prog) -> EIO<String, i64> {
    match p {
        Prog::Pure(v) => eio_pure(*v),
        Prog::Throw(e) => throw_eio(e.clone()),
        Prog::WriteLine(t) => eio_bind(write_line(t.clone()), |_| eio_pure(0)),
        Prog::ReadLen(on_eof) => eio_bind(read_line(on_eof.clone()), |line: String| {
            eio_pure(line.len() as i64)
        }),
        Prog::Tick => eio_bind(tick(), |_| eio_pure(0)),
        Prog::Bind(m, arrow) => {
            let arrow = arrow.clone();
            eio_bind(compile_eio(m), move |v| match &arrow {
                ArrowSpec::Const(q) => compile_eio(q),
                ArrowSpec::WriteVal => {
                    eio_bind(write_line(format!("v={v}")), move |_| eio_pure(v))
                }
                ArrowSpec::GuardNonNegative => {
                    if v >= 0 {
                        eio_pure(v)
                    } else {
                        throw_eio("negative".to_string())
                    }
                }
            })
        }
        Prog::Catch(m, handler) => {
            let handler = handler.clone();
            catch_eio(compile_eio(m), move |e: String| match &handler {
                HandlerSpec::Const(q) => compile_eio(q),
                HandlerSpec::Rethrow => throw_eio(e),
                HandlerSpec::WriteErr => {
                    let n = e.len() as i64;
                    eio_bind(write_line(format!("err:{e}")), move |_| eio_pure(n))
                }
            })
        }
    }
}

/// Compiles a program into the Scott-encoded form using the native
/// `seio_*` operations, sharing no evaluation path with [`compile_eio`].
pub fn compile_seio(p: &Prog) -> SEIO<EffObs, String, i64> {
    match p {
        Prog::Pure(v) => seio_pure(*v),
        Prog::Throw(e) => throw_seio(e.clone()),
        Prog::WriteLine(t) => seio_bind(write_line_s(t.clone()), |_| seio_pure(0)),
        Prog::ReadLen(on_eof) => seio_bind(read_line_s(on_eof.clone()), |line: String| {
            seio_pure(line.len() as i64)
        }),
        Prog::Tick => seio_bind(tick_s(), |_| seio_pure(0)),
        Prog::Bind(m, arrow) => {
            let arrow = arrow.clone();
            seio_bind(compile_seio(m), move |v| match &arrow {
                ArrowSpec::Const(q) => compile_seio(q),
                ArrowSpec::WriteVal => {
                    seio_bind(write_line_s(format!("v={v}")), move |_| seio_pure(v))
                }
                ArrowSpec::GuardNonNegative => {
                    if v >= 0 {
                        seio_pure(v)
                    } else {
                        throw_seio("negative".to_string())
                    }
                }
            })
        }
        Prog::Catch(m, handler) => {
            let handler = handler.clone();
            catch_seio(compile_seio(m), move |e: String| match &handler {
                HandlerSpec::Const(q) => compile_seio(q),
                HandlerSpec::Rethrow => throw_seio(e),
                HandlerSpec::WriteErr => {
                    let n = e.len() as i64;
                    seio_bind(write_line_s(format!("err:{e}")), move |_| seio_pure(n))
                }
            })
        }
    }
}

/// Outcome of a bisimulation sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BisimReport {
    /// Programs generated and run through both encodings.
    pub programs: u64,
    /// Largest step count among the generated programs.
    pub max_steps_seen: u32,
    /// Runs where the two encodings disagreed.
    pub mismatches: u64,
    /// Description of the first disagreement, if any.
    pub first_mismatch: Option<String>,
}

/// Runs `count` random programs of at most `max_steps` primitive steps
/// through both encodings on random worlds and compares the full
/// `(Outcome, World)` results.
pub fn bisimulate(count: u64, max_steps: u32, root_seed: u64) -> BisimReport {
    let mut report = BisimReport {
        programs: 0,
        max_steps_seen: 0,
        mismatches: 0,
        first_mismatch: None,
    };
    for case in 0..count {
        let mut rng = rng_from(derive_case_seed(root_seed, 0xB151, case));
        let prog = gen_prog(&mut rng, max_steps);
        let world = gen_world(&mut rng);
        report.programs += 1;
        report.max_steps_seen = report.max_steps_seen.max(prog_steps(&prog));
        let direct = compile_eio(&prog).run(world.clone());
        let scott = from_scott(compile_seio(&prog)).run(world.clone());
        if direct != scott {
            report.mismatches += 1;
            if report.first_mismatch.is_none() {
                report.first_mismatch = Some(format!(
                    "program {prog:?} on world {world:?}: direct {direct:?}, scott {scott:?}"
                ));
            }
        }
    }
    report
}

/// The brute-force oracle for the accumulating traversal: run `f` on
/// every element, collect all successes, and fold all failures in input
/// order.
pub fn ea_fold_oracle<E, A, B>(f: impl Fn(&A) -> EA<E, B>, xs: &[A]) -> EA<E, Vec<B>>
where
    E: Monoid,
{
    let mut failures: Option<E> = None;
    let mut successes = Vec::new();
    for x in xs {
        match f(x).0 {
            Outcome::Ok(b) => successes.push(b),
            Outcome::Fail(e) => {
                failures = Some(match failures {
                    None => e,
                    Some(acc) => acc.combine(e),
                });
            }
        }
    }
    match failures {
        None => ea_pure(successes),
        Some(e) => throw_ea(e),
    }
}

/// All lists over `domain` of length at most `max_len`, shortest first.
pub fn int_lists(domain: &[i64], max_len: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for stem in &frontier {
            for d in domain {
                let mut grown = stem.clone();
                grown.push(*d);
                next.push(grown);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Sweeps the accumulating traversal against the fold oracle on every
/// list over `{1, 2, 3}` of length at most `max_len`, under four element
/// functions with different failure patterns.
pub fn ea_oracle_sweep(max_len: usize) -> OracleReport {
    let element_fns: Vec<(&str, fn(&i64) -> EA<ErrorLog, i64>)> = vec![
        ("always-ok", |x| ea_pure(*x)),
        ("fail-odd", |x| {
            if x % 2 != 0 {
                throw_ea(ErrorLog::of(x.to_string()))
            } else {
                ea_pure(*x)
            }
        }),
        ("fail-on-two", |x| {
            if *x == 2 {
                throw_ea(ErrorLog::of("two"))
            } else {
                ea_pure(*x)
            }
        }),
        ("always-fail", |x| throw_ea(ErrorLog::of(format!("e{x}")))),
    ];
    let lists = int_lists(&[1, 2, 3], max_len);
    let mut report = OracleReport::new();
    for (name, f) in &element_fns {
        for xs in &lists {
            let subject = map_ap(f, xs);
            let oracle = ea_fold_oracle(f, xs);
            report.record(subject == oracle, || {
                format!("{name} on {xs:?}: map_ap {subject:?}, oracle {oracle:?}")
            });
        }
    }
    report
}
