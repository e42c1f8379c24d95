//! Exact finite-group computations centred on the Jordan constant
//! `J(G) = max over subgroups H of min [H : A]`, `A` normal abelian in `H`.

pub mod algebra;
pub mod bitset;
pub mod construct;
pub mod engine;
pub mod kernel;
pub mod suite;
