//! The demo effect program: echo every input line; after echoing a line
//! equal to `BOOM`, throw a typed error carrying that line; an outer
//! typed handler appends `recovered` to the output. End of input is a
//! separate typed error handled by an inner layer, so normal exhaustion
//! terminates cleanly while the boom error passes through to its own
//! handler.

use std::sync::OnceLock;

use conjoined::dynamic::{catch_typed, to_dyn, DynError, TypeTag};
use conjoined::eio::{eio_bind, eio_pure, read_line, throw_eio, write_line, EIO};

fn eof_tag() -> &'static TypeTag {
    static TAG: OnceLock<TypeTag> = OnceLock::new();
    TAG.get_or_init(|| TypeTag::register("Eof"))
}

fn boom_tag() -> &'static TypeTag {
    static TAG: OnceLock<TypeTag> = OnceLock::new();
    TAG.get_or_init(|| TypeTag::register("Boom"))
}

fn echo_all() -> EIO<DynError, ()> {
    eio_bind(read_line(to_dyn(eof_tag(), (), "eof")), |line| {
        eio_bind(write_line(line.clone()), move |_| {
            if line == "BOOM" {
                throw_eio(to_dyn(boom_tag(), line.clone(), "boom"))
            } else {
                echo_all()
            }
        })
    })
}

/// The full demo program with both handler layers installed.
pub fn demo_program() -> EIO<DynError, ()> {
    let echoed = catch_typed(echo_all(), eof_tag(), |_: ()| eio_pure(()));
    catch_typed(echoed, boom_tag(), |_line: String| {
        eio_bind(write_line("recovered"), |_| eio_pure(()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    use conjoined::eio::World;
    use conjoined::outcome::Outcome;

    fn run_demo(input: &[&str]) -> (Outcome<DynError, ()>, Vec<String>) {
        let (outcome, world) = demo_program().run(World::with_input(input.iter().copied()));
        (outcome, world.output)
    }

    #[test]
    fn plain_input_echoes_and_succeeds() {
        let (outcome, output) = run_demo(&["a", "b"]);
        assert_eq!(outcome, Outcome::Ok(()));
        assert_eq!(output, vec!["a", "b"]);
    }

    #[test]
    fn boom_recovers_and_stops_reading() {
        let (outcome, output) = run_demo(&["a", "BOOM", "c"]);
        assert_eq!(outcome, Outcome::Ok(()));
        assert_eq!(output, vec!["a", "BOOM", "recovered"]);
    }

    #[test]
    fn empty_input_is_a_clean_run() {
        let (outcome, output) = run_demo(&[]);
        assert_eq!(outcome, Outcome::Ok(()));
        assert!(output.is_empty());
    }
}
