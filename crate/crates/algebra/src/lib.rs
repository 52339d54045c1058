//! Exact symbolic kernel: Laurent polynomials and rational functions over Q
//! in up to sixteen named variables, matrices over the fraction field, rule
//! based reduction modulo algebraic relations, and a small expression
//! language for input and output.
//!
//! ```
//! use okamoto_algebra::{parse, print, Ring};
//!
//! let ring = Ring::new(["x", "y"]).unwrap();
//! let a = parse("(x^2 - y^2)/(x + y)", &ring).unwrap();
//! assert_eq!(print(&a, &ring), "x - y");
//! ```

pub mod check;
pub mod error;
pub mod gcd;
pub mod matrix;
pub mod par;
pub mod parse;
pub mod poly;
pub mod props;
pub mod rational;
pub mod ring;
pub mod rules;
pub mod spectral;

pub use check::{all_pass, Check};
pub use error::AlgebraError;
pub use matrix::Matrix;
pub use par::Exec;
pub use parse::{parse, parse_rule, parse_rules, print, print_poly};
pub use poly::{Poly, Q};
pub use rational::{RationalFunction, RF};
pub use ring::{Mono, Ring, MAX_VARS};
pub use rules::{rf_equal_mod, RuleSet, SubstitutionRule};
pub use spectral::SpectralPoly;
