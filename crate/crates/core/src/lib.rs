//! Supercharacter theory of the unitriangular groups U_n(q).
//!
//! The crate computes, exactly:
//!
//! * type-A positive-root combinatorics (hooks, closed sets, basic sets and
//!   their monomial matrices and interaction roots),
//! * concrete unitriangular matrix groups over F_q, pattern subgroups and
//!   quotients, with collection normal forms and conjugacy classes,
//! * the class-function algebra over the cyclotomic value ring, including
//!   induction and exact inner products,
//! * full irreducible character tables of small p-groups via class-matrix
//!   eigenvector lifting (the independent oracle),
//! * the decomposition pipeline reducing a supercharacter to its pattern
//!   subgroup and producing an exact constituent census, and
//! * the complete rank-12 sample decomposition carried out symbolically in q.

pub mod basicset;
pub mod error;
pub mod polyq;
pub mod render;
pub mod roots;
pub mod scalars;
pub mod unigroup;
pub mod charfn;
pub mod superdecomp;
pub mod u13;
pub mod tables;

pub use error::{Error, Result};
