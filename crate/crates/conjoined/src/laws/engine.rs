//! The adapter record and the law runner.
//!
//! An [`InstanceAdapter`] packages one instance as plain values: seeded
//! generators for values, errors, computations, and arrows; the four
//! operators; and an observation function with its equivalence. No
//! trait-level abstraction is involved, so wildly different carriers
//! (plain sums, parsers, continuations, effects) all fit the same record.
//!
//! Laws are encoded once, over the record, in [`canonical_laws`]:
//!
//! | index | id                     | statement                                          |
//! |-------|------------------------|----------------------------------------------------|
//! | 0     | `value-left-identity`  | `bind(pure(a), f) == f(a)`                         |
//! | 1     | `value-right-identity` | `bind(m, pure) == m`                               |
//! | 2     | `value-associativity`  | `bind(bind(m, f), g) == bind(m, λx. bind(f x, g))` |
//! | 3     | `error-left-identity`  | `catch(throw(e), h) == h(e)`                       |
//! | 4     | `error-right-identity` | `catch(m, throw) == m`                             |
//! | 5     | `error-associativity`  | `catch(catch(m, h), k) == catch(m, λe. catch(h e, k))` |
//! | 6     | `throw-left-zero`      | `bind(throw(e), f) == throw(e)`                    |
//! | 7     | `pure-left-zero`       | `catch(pure(a), h) == pure(a)`                     |
//! | 8     | `fish-roundtrip-value` | `bind(m, f) == (const m >=> f)(probe)`             |
//! | 9     | `fish-roundtrip-error` | `catch(m, h) == (const m >=>! h)(probe)`           |
//! | 10    | `fish-composition`     | `(f >=> g)(h(x)) == ((f ∘ h) >=> g)(x)`           |
//!
//! where `>=>` is value-index fish built from `bind_op`, `>=>!` its
//! error-index twin built from `catch_op`, and the pure premap `h` of law
//! 10 is drawn from the closed menu {identity, constant}. Each law runs
//! `cases` times; case seeds derive from (root seed, law index, case
//! index), so any reported failure replays exactly from its seed.

use std::sync::Arc;

use crate::laws::report::{LawCase, LawReport};
use crate::laws::seed::{derive_case_seed, mix, sub_seed};

/// A deterministic seeded generator.
pub type Gen<T> = Arc<dyn Fn(u64) -> T + Send + Sync>;

/// An arrow from inputs to computations in the instance.
pub type Arrow<X, C> = Arc<dyn Fn(X) -> C + Send + Sync>;

/// One instance of the conjoined structure, described entirely by values.
pub struct InstanceAdapter<C, V, E> {
    /// Display name, echoed in reports.
    pub name: String,
    /// Seeded generator of plain values.
    pub gen_value: Gen<V>,
    /// Seeded generator of error payloads.
    pub gen_error: Gen<E>,
    /// Seeded generator of computations.
    pub gen_computation: Gen<C>,
    /// Seeded generator of value arrows, drawn from a closed grammar.
    pub gen_value_arrow: Gen<Arrow<V, C>>,
    /// Seeded generator of error arrows (handlers), drawn from a closed
    /// grammar.
    pub gen_error_arrow: Gen<Arrow<E, C>>,
    /// The value-index unit.
    pub pure_op: Arrow<V, C>,
    /// The error-index unit.
    pub throw_op: Arrow<E, C>,
    /// Value-index sequencing.
    pub bind_op: Arc<dyn Fn(C, Arrow<V, C>) -> C + Send + Sync>,
    /// Error-index sequencing.
    pub catch_op: Arc<dyn Fn(C, Arrow<E, C>) -> C + Send + Sync>,
    /// Renders a computation to the observation laws are compared under.
    pub observe: Arc<dyn Fn(&C) -> String + Send + Sync>,
    /// Equivalence of observations; structural equality unless the
    /// instance documents otherwise.
    pub observe_eq: Arc<dyn Fn(&str, &str) -> bool + Send + Sync>,
}

impl<C, V, E> Clone for InstanceAdapter<C, V, E> {
    fn clone(&self) -> Self {
        InstanceAdapter {
            name: self.name.clone(),
            gen_value: Arc::clone(&self.gen_value),
            gen_error: Arc::clone(&self.gen_error),
            gen_computation: Arc::clone(&self.gen_computation),
            gen_value_arrow: Arc::clone(&self.gen_value_arrow),
            gen_error_arrow: Arc::clone(&self.gen_error_arrow),
            pure_op: Arc::clone(&self.pure_op),
            throw_op: Arc::clone(&self.throw_op),
            bind_op: Arc::clone(&self.bind_op),
            catch_op: Arc::clone(&self.catch_op),
            observe: Arc::clone(&self.observe),
            observe_eq: Arc::clone(&self.observe_eq),
        }
    }
}

/// Value-index fish composition derived from the adapter's bind:
/// `(p >=> q)(x) = bind(p(x), q)`.
pub fn fish_value<C, V, E>(
    adapter: &InstanceAdapter<C, V, E>,
    p: Arrow<V, C>,
    q: Arrow<V, C>,
) -> Arrow<V, C>
where
    C: 'static,
    V: 'static,
    E: 'static,
{
    let bind = Arc::clone(&adapter.bind_op);
    Arc::new(move |v| bind(p(v), Arc::clone(&q)))
}

/// Error-index fish composition derived from the adapter's catch:
/// `(p >=>! q)(e) = catch(p(e), q)`.
pub fn fish_error<C, V, E>(
    adapter: &InstanceAdapter<C, V, E>,
    p: Arrow<E, C>,
    q: Arrow<E, C>,
) -> Arrow<E, C>
where
    C: 'static,
    V: 'static,
    E: 'static,
{
    let catch = Arc::clone(&adapter.catch_op);
    Arc::new(move |e| catch(p(e), Arc::clone(&q)))
}

/// One law: an identifier plus a builder that turns a case seed into the
/// two computations the law equates.
pub struct NamedLaw<C, V, E> {
    /// Stable identifier, echoed in reports.
    pub id: &'static str,
    /// Builds (lhs, rhs) for one case.
    pub build: fn(&InstanceAdapter<C, V, E>, u64) -> (C, C),
}

impl<C, V, E> Clone for NamedLaw<C, V, E> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<C, V, E> Copy for NamedLaw<C, V, E> {}

fn value_left_identity<C, V, E>(ad: &InstanceAdapter<C, V, E>, seed: u64) -> (C, C)
where
    C: Clone + Send + Sync + 'static,
    V: Clone + Send + Sync + 'static,
    E: Clone + Send + Sync + 'static,
{
    let v = (ad.gen_value)(sub_seed(seed, 0));
    let f = (ad.gen_value_arrow)(sub_seed(seed, 1));
    let lhs = (ad.bind_op)((ad.pure_op)(v.clone()), Arc::clone(&f));
    (lhs, f(v))
}

fn value_right_identity<C, V, E>(ad: &InstanceAdapter<C, V, E>, seed: u64) -> (C, C)
where
    C: Clone + Send + Sync + 'static,
    V: Clone + Send + Sync + 'static,
    E: Clone + Send + Sync + 'static,
{
    let m = (ad.gen_computation)(sub_seed(seed, 0));
    let lhs = (ad.bind_op)(m.clone(), Arc::clone(&ad.pure_op));
    (lhs, m)
}

fn value_associativity<C, V, E>(ad: &InstanceAdapter<C, V, E>, seed: u64) -> (C, C)
where
    C: Clone + Send + Sync + 'static,
    V: Clone + Send + Sync + 'static,
    E: Clone + Send + Sync + 'static,
{
    let m = (ad.gen_computation)(sub_seed(seed, 0));
    let f = (ad.gen_value_arrow)(sub_seed(seed, 1));
    let g = (ad.gen_value_arrow)(sub_seed(seed, 2));
    let lhs = (ad.bind_op)((ad.bind_op)(m.clone(), Arc::clone(&f)), Arc::clone(&g));
    let bind = Arc::clone(&ad.bind_op);
    let composed: Arrow<V, C> = Arc::new(move |v| bind(f(v), Arc::clone(&g)));
    let rhs = (ad.bind_op)(m, composed);
    (lhs, rhs)
}

fn error_left_identity<C, V, E>(ad: &InstanceAdapter<C, V, E>, seed: u64) -> (C, C)
where
    C: Clone + Send + Sync + 'static,
    V: Clone + Send + Sync + 'static,
    E: Clone + Send + Sync + 'static,
{
    let e = (ad.gen_error)(sub_seed(seed, 0));
    let h = (ad.gen_error_arrow)(sub_seed(seed, 1));
    let lhs = (ad.catch_op)((ad.throw_op)(e.clone()), Arc::clone(&h));
    (lhs, h(e))
}

fn error_right_identity<C, V, E>(ad: &InstanceAdapter<C, V, E>, seed: u64) -> (C, C)
where
    C: Clone + Send + Sync + 'static,
    V: Clone + Send + Sync + 'static,
    E: Clone + Send + Sync + 'static,
{
    let m = (ad.gen_computation)(sub_seed(seed, 0));
    let lhs = (ad.catch_op)(m.clone(), Arc::clone(&ad.throw_op));
    (lhs, m)
}

fn error_associativity<C, V, E>(ad: &InstanceAdapter<C, V, E>, seed: u64) -> (C, C)
where
    C: Clone + Send + Sync + 'static,
    V: Clone + Send + Sync + 'static,
    E: Clone + Send + Sync + 'static,
{
    let m = (ad.gen_computation)(sub_seed(seed, 0));
    let h = (ad.gen_error_arrow)(sub_seed(seed, 1));
    let k = (ad.gen_error_arrow)(sub_seed(seed, 2));
    let lhs = (ad.catch_op)((ad.catch_op)(m.clone(), Arc::clone(&h)), Arc::clone(&k));
    let catch = Arc::clone(&ad.catch_op);
    let composed: Arrow<E, C> = Arc::new(move |e| catch(h(e), Arc::clone(&k)));
    let rhs = (ad.catch_op)(m, composed);
    (lhs, rhs)
}

fn throw_left_zero<C, V, E>(ad: &InstanceAdapter<C, V, E>, seed: u64) -> (C, C)
where
    C: Clone + Send + Sync + 'static,
    V: Clone + Send + Sync + 'static,
    E: Clone + Send + Sync + 'static,
{
    let e = (ad.gen_error)(sub_seed(seed, 0));
    let f = (ad.gen_value_arrow)(sub_seed(seed, 1));
    let lhs = (ad.bind_op)((ad.throw_op)(e.clone()), f);
    (lhs, (ad.throw_op)(e))
}

fn pure_left_zero<C, V, E>(ad: &InstanceAdapter<C, V, E>, seed: u64) -> (C, C)
where
    C: Clone + Send + Sync + 'static,
    V: Clone + Send + Sync + 'static,
    E: Clone + Send + Sync + 'static,
{
    let v = (ad.gen_value)(sub_seed(seed, 0));
    let h = (ad.gen_error_arrow)(sub_seed(seed, 1));
    let lhs = (ad.catch_op)((ad.pure_op)(v.clone()), h);
    (lhs, (ad.pure_op)(v))
}

fn fish_roundtrip_value<C, V, E>(ad: &InstanceAdapter<C, V, E>, seed: u64) -> (C, C)
where
    C: Clone + Send + Sync + 'static,
    V: Clone + Send + Sync + 'static,
    E: Clone + Send + Sync + 'static,
{
    let m = (ad.gen_computation)(sub_seed(seed, 0));
    let f = (ad.gen_value_arrow)(sub_seed(seed, 1));
    let probe = (ad.gen_value)(sub_seed(seed, 2));
    let lhs = (ad.bind_op)(m.clone(), Arc::clone(&f));
    let const_m: Arrow<V, C> = Arc::new(move |_| m.clone());
    let rhs = fish_value(ad, const_m, f)(probe);
    (lhs, rhs)
}

fn fish_roundtrip_error<C, V, E>(ad: &InstanceAdapter<C, V, E>, seed: u64) -> (C, C)
where
    C: Clone + Send + Sync + 'static,
    V: Clone + Send + Sync + 'static,
    E: Clone + Send + Sync + 'static,
{
    let m = (ad.gen_computation)(sub_seed(seed, 0));
    let h = (ad.gen_error_arrow)(sub_seed(seed, 1));
    let probe = (ad.gen_error)(sub_seed(seed, 2));
    let lhs = (ad.catch_op)(m.clone(), Arc::clone(&h));
    let const_m: Arrow<E, C> = Arc::new(move |_| m.clone());
    let rhs = fish_error(ad, const_m, h)(probe);
    (lhs, rhs)
}

fn fish_composition<C, V, E>(ad: &InstanceAdapter<C, V, E>, seed: u64) -> (C, C)
where
    C: Clone + Send + Sync + 'static,
    V: Clone + Send + Sync + 'static,
    E: Clone + Send + Sync + 'static,
{
    let f = (ad.gen_value_arrow)(sub_seed(seed, 0));
    let g = (ad.gen_value_arrow)(sub_seed(seed, 1));
    let x = (ad.gen_value)(sub_seed(seed, 2));
    let constant = (ad.gen_value)(sub_seed(seed, 3));
    let premap: Arc<dyn Fn(V) -> V + Send + Sync> = if mix(sub_seed(seed, 4)).is_multiple_of(2) {
        Arc::new(|v| v)
    } else {
        Arc::new(move |_| constant.clone())
    };
    let lhs = fish_value(ad, Arc::clone(&f), Arc::clone(&g))(premap(x.clone()));
    let premapped: Arrow<V, C> = {
        let premap = Arc::clone(&premap);
        Arc::new(move |v| f(premap(v)))
    };
    let rhs = fish_value(ad, premapped, g)(x);
    (lhs, rhs)
}

/// The full ordered law list. A law's position here is its law index for
/// seed derivation, so a law keeps its case stream no matter which check
/// runs it.
pub fn canonical_laws<C, V, E>() -> Vec<NamedLaw<C, V, E>>
where
    C: Clone + Send + Sync + 'static,
    V: Clone + Send + Sync + 'static,
    E: Clone + Send + Sync + 'static,
{
    vec![
        NamedLaw { id: "value-left-identity", build: value_left_identity },
        NamedLaw { id: "value-right-identity", build: value_right_identity },
        NamedLaw { id: "value-associativity", build: value_associativity },
        NamedLaw { id: "error-left-identity", build: error_left_identity },
        NamedLaw { id: "error-right-identity", build: error_right_identity },
        NamedLaw { id: "error-associativity", build: error_associativity },
        NamedLaw { id: "throw-left-zero", build: throw_left_zero },
        NamedLaw { id: "pure-left-zero", build: pure_left_zero },
        NamedLaw { id: "fish-roundtrip-value", build: fish_roundtrip_value },
        NamedLaw { id: "fish-roundtrip-error", build: fish_roundtrip_error },
        NamedLaw { id: "fish-composition", build: fish_composition },
    ]
}

fn run_selection<C, V, E>(
    adapter: &InstanceAdapter<C, V, E>,
    offset: usize,
    count: usize,
    cases: u64,
    root_seed: u64,
) -> LawReport
where
    C: Clone + Send + Sync + 'static,
    V: Clone + Send + Sync + 'static,
    E: Clone + Send + Sync + 'static,
{
    let laws = canonical_laws::<C, V, E>();
    let mut report = LawReport::new(adapter.name.clone(), cases);
    for (position, law) in laws[offset..offset + count].iter().enumerate() {
        let law_index = (offset + position) as u64;
        let mut pass = 0;
        let mut fail = 0;
        let mut failures = Vec::new();
        for case in 0..cases {
            let case_seed = derive_case_seed(root_seed, law_index, case);
            let (lhs, rhs) = (law.build)(adapter, case_seed);
            let lhs_obs = (adapter.observe)(&lhs);
            let rhs_obs = (adapter.observe)(&rhs);
            if (adapter.observe_eq)(&lhs_obs, &rhs_obs) {
                pass += 1;
            } else {
                fail += 1;
                failures.push(LawCase::fail(law.id, case_seed, lhs_obs, rhs_obs));
            }
        }
        report.push_law(law.id, pass, fail, failures);
    }
    report
}

/// Checks the three value-index monad laws.
pub fn check_value_monad<C, V, E>(
    adapter: &InstanceAdapter<C, V, E>,
    cases: u64,
    seed: u64,
) -> LawReport
where
    C: Clone + Send + Sync + 'static,
    V: Clone + Send + Sync + 'static,
    E: Clone + Send + Sync + 'static,
{
    run_selection(adapter, 0, 3, cases, seed)
}

/// Checks the three error-index monad laws.
pub fn check_error_monad<C, V, E>(
    adapter: &InstanceAdapter<C, V, E>,
    cases: u64,
    seed: u64,
) -> LawReport
where
    C: Clone + Send + Sync + 'static,
    V: Clone + Send + Sync + 'static,
    E: Clone + Send + Sync + 'static,
{
    run_selection(adapter, 3, 3, cases, seed)
}

/// Checks the two cross-index left-zero laws.
pub fn check_interaction<C, V, E>(
    adapter: &InstanceAdapter<C, V, E>,
    cases: u64,
    seed: u64,
) -> LawReport
where
    C: Clone + Send + Sync + 'static,
    V: Clone + Send + Sync + 'static,
    E: Clone + Send + Sync + 'static,
{
    run_selection(adapter, 6, 2, cases, seed)
}

/// Checks that fish compositions derived from bind and catch agree with
/// direct sequencing, plus the composition lemma under pure premaps.
pub fn check_fish_equivalence<C, V, E>(
    adapter: &InstanceAdapter<C, V, E>,
    cases: u64,
    seed: u64,
) -> LawReport
where
    C: Clone + Send + Sync + 'static,
    V: Clone + Send + Sync + 'static,
    E: Clone + Send + Sync + 'static,
{
    run_selection(adapter, 8, 3, cases, seed)
}

/// The four core checks in their canonical order.
pub fn core_checks<C, V, E>(
    adapter: &InstanceAdapter<C, V, E>,
    cases: u64,
    seed: u64,
) -> Vec<LawReport>
where
    C: Clone + Send + Sync + 'static,
    V: Clone + Send + Sync + 'static,
    E: Clone + Send + Sync + 'static,
{
    vec![
        check_value_monad(adapter, cases, seed),
        check_error_monad(adapter, cases, seed),
        check_interaction(adapter, cases, seed),
        check_fish_equivalence(adapter, cases, seed),
    ]
}

/// Re-executes one law at one stored case seed, reproducing its verdict
/// and observations exactly.
pub fn replay<C, V, E>(
    adapter: &InstanceAdapter<C, V, E>,
    law_id: &str,
    case_seed: u64,
) -> Option<LawCase>
where
    C: Clone + Send + Sync + 'static,
    V: Clone + Send + Sync + 'static,
    E: Clone + Send + Sync + 'static,
{
    let laws = canonical_laws::<C, V, E>();
    let law = laws.iter().find(|law| law.id == law_id)?;
    let (lhs, rhs) = (law.build)(adapter, case_seed);
    let lhs_obs = (adapter.observe)(&lhs);
    let rhs_obs = (adapter.observe)(&rhs);
    Some(if (adapter.observe_eq)(&lhs_obs, &rhs_obs) {
        LawCase::pass(law.id, case_seed)
    } else {
        LawCase::fail(law.id, case_seed, lhs_obs, rhs_obs)
    })
}
