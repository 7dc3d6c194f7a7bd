//! Exact sizes of the Bayesian-network and Markov-blanket structure search
//! spaces on `n` labeled variables.
//!
//! - [`counting`] evaluates the DAG and MB recurrences with big integers.
//! - [`enumeration`] checks them by exhaustive enumeration of small digraphs.
//! - [`cli`] is the command-line front end built on both.

pub mod cli;
pub mod counting;
pub mod enumeration;
