//! Symbolic computation in free Lie superalgebras with operators.
//!
//! The crate builds, layer by layer:
//!
//! - [`words`]: Lyndon-Shirshov combinatorics on plain words — the lex and
//!   deg-lex orders, LS/SLS predicates, Lyndon factorization and canonical
//!   bracketing;
//! - [`omega`]: words over letters *and* operator applications, the Deg-lex
//!   order on them, SLS recognition and enumeration, contexts (words with a
//!   hole) and occurrence search;
//! - [`superalgebra`]: exact-rational linear algebra of the free associative
//!   and free Lie operator superalgebras — superbracket expansion with sign
//!   bookkeeping and conversion into the SLS-monomial basis;
//! - [`gsb`]: the Groebner-Shirshov machinery — special bracketings with
//!   runtime certificates, normal-form reduction, the three composition
//!   kinds, certification and bounded completion;
//! - [`rota_baxter`]: the flagship application — normal forms, linear bases
//!   and dimension tables of free Lie Rota-Baxter superalgebras of any
//!   rational weight.
//!
//! All coefficients are exact rationals; there is no floating point anywhere.
//! Every operation is a pure function on immutable values, so everything is
//! safe to call concurrently.
//!
//! The `examples/` directory shows one runnable program per capability; the
//! `shirshov` binary exposes the same operations as batch subcommands.

pub mod alphabet;
pub mod error;
pub mod gsb;
pub mod omega;
pub mod parse;
pub mod rational;
pub mod rota_baxter;
pub mod superalgebra;
pub mod words;

pub use alphabet::{GradedAlphabet, LetterId, OpId, Parity};
pub use error::{Error, Result};
pub use omega::{Budget, Context, NATree, OmegaWord, Prime};
pub use rational::Coefficient;
pub use superalgebra::{AssocElement, Expander, LieElement};
