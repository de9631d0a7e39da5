//! Toric ideals of integer matrices and finite simple graphs, graph
//! gluing/splitting constructions, and exact (multi-)graded Betti numbers.
//!
//! The crate is organized around a small pure-difference binomial engine:
//! exact integer linear algebra ([`exactlin`]), binomial Gröbner bases
//! ([`binomials`]), graphs and their gluings ([`graphcore`]), toric ideal
//! construction ([`toricgen`]), homological invariants ([`resolve`]), and
//! splitting certificates ([`splitkit`]).

pub mod binomials;
pub mod exactlin;
pub mod graphcore;
