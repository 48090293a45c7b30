//! Exact enumeration and orbit counting of non-commutative curves.
//!
//! A non-commutative curve of genus `l` is a subcategory generated by an
//! exceptional pair `(E1, E2)` with `hom(E1, E2) = l + 1`. This crate
//! enumerates them in `D^b(A_N)`, `D^b(D_4)`, the two affine quivers `Q1`
//! and `Q2`, and `D^b(P^2)`, and counts them up to the action of groups of
//! auto-equivalences.

pub mod affine;
pub mod cli;
pub mod count;
pub mod d4;
pub mod digraph;
pub mod error;
pub mod incidence;
pub mod markov;
pub mod necklace;
pub mod quiver;
pub mod type_a;

pub use count::Count;
pub use error::{Error, Result};
