//! A source-code language modeling toolkit for a Java-like subset.
//!
//! The pipeline runs in stages: corpus discovery and fold splitting
//! ([`corpus`]), noise removal and structure normalization ([`sampler`]),
//! lexing ([`lexer`]) and type-based token regularization ([`regularizer`]),
//! vocabulary construction ([`vocab`]), variable-size-context example
//! generation and training ([`context`], [`trainer`]) over a recurrent
//! next-token model ([`model`]), ranked evaluation ([`eval`]), and
//! suggestion/generation surfaces ([`suggest`], [`repl`]).

pub mod context;
pub mod corpus;
pub mod error;
pub mod eval;
pub mod lexer;
pub mod model;
pub mod pipeline;
pub mod regularizer;
pub mod repl;
pub mod sampler;
pub mod suggest;
pub mod trainer;
pub mod vocab;

pub use error::{Error, Result};
