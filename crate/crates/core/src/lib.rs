//! Groebner bases, Hilbert series and graded Betti tables over prime fields,
//! together with executable checks for componentwise linear ideals and their
//! square-free Groebner degenerations.

pub mod betti;
pub mod corpus;
pub mod degeneration;
pub mod error;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod monomial;
pub mod monomial_ideal;
pub mod order;
pub mod parse;
pub mod poly;
pub mod ring;

pub use betti::{betti_table, koszul_betti, regularity, BettiTable, ModuleSpec, Subject};
pub use degeneration::{DegenerationReport, Verdict};
pub use error::{Error, Result};
pub use field::{PrimeField, Scalar};
pub use groebner::{buchberger, normal_form, GroebnerBasis, IdealHandle};
pub use monomial::Monomial;
pub use monomial_ideal::{HilbertNumerator, HilbertSubject, MonomialIdeal};
pub use order::{MonomialOrder, TieBreak, WeightVector};
pub use parse::{parse_input, IdealFile};
pub use poly::Polynomial;
pub use ring::{Ring, RingContext};
