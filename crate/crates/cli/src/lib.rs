//! Expression parser and command-line front door for the series engine.

pub mod ast;
pub mod eval;
pub mod parser;
pub mod run;

pub use ast::{CallName, Expr};
pub use eval::{eval, reverse_two_ways, RingChoice};
pub use parser::parse;
pub use run::{run, Cli};
