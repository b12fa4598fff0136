//! A three-variable polynomial invariant `F(x, w, t)` of oriented colored
//! links, computed by skein recursion on link diagrams.
//!
//! - [`poly`]: exact values of the form `P / (1-t)^k`.
//! - [`diagram`]: colored diagrams, edits, Reidemeister moves, braid closures.
//! - [`skein`]: deciding crossings and the recursive evaluator.
//! - [`oracle`]: Kauffman bracket and Jones polynomial, used as a cross-check.
//! - [`cli`]: the `chroma-skein` command.
//!
//! ```
//! use chroma_skein::diagram::{braid_closure, parse_braid_word};
//! use chroma_skein::skein::evaluate_f;
//!
//! let hopf = braid_closure(&parse_braid_word("s1^-1 s1^-1").unwrap(), &["a".into(), "b".into()]).unwrap();
//! assert_eq!(evaluate_f(&hopf).to_string(), "(w^2*x + t - x) / (w^3*x*t)");
//! ```

pub mod cli;
pub mod diagram;
pub mod fixtures;
pub mod fuzz;
pub mod oracle;
pub mod par;
pub mod poly;
pub mod skein;
pub mod verify;
