//! Noncommutative Gröbner and involutive bases over the rationals.
//!
//! The crate covers arithmetic in the free associative algebra
//! ([`algebra`]), admissible monomial orderings ([`orderings`]), overlaps and
//! S-polynomials ([`spoly`]), Mora's algorithm ([`groebner`]), involutive
//! divisions and bases ([`involutive`]) and basis conversion between
//! orderings ([`walk`]). The [`cli`] module drives all of them from problem
//! files.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod groebner;
pub mod involutive;
pub mod orderings;
pub mod spoly;
pub mod walk;

pub use algebra::{parse_polynomial, rat, ratio, Alphabet, Polynomial, Rational, Term, Word};
pub use error::{Error, Result};
pub use orderings::MonomialOrdering;
