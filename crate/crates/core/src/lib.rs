//! Tangent cones of numerical semigroup rings.
//!
//! Given a numerical semigroup `S` with multiplicity `e`, the tangent cone
//! `G` of `k[[S]]` is a finitely generated graded module over the fiber cone
//! `F` of `(t^e)`, a polynomial ring in `x = (t^e)*`. This crate computes the
//! Apery table of the powers of the maximal ideal of `S` and reads off the
//! decomposition of `G` into cyclic `F`-modules, the invariants `α_i`,
//! `α_{i,j}`, graded Betti numbers and Hilbert function, and decides whether
//! `G` is Cohen-Macaulay or Buchsbaum.
//!
//! ```
//! use tangentcone::{NumericalSemigroup, Analysis};
//!
//! let s = NumericalSemigroup::new(&[5, 6, 13]).unwrap();
//! let a = Analysis::of(&s).unwrap();
//! assert_eq!(a.table.reduction_number(), 4);
//! assert_eq!(
//!     a.decomposition.render(),
//!     "F ⊕ F(-1) ⊕ (F/xF)(-1) ⊕ F(-2) ⊕ (F/xF)(-2) ⊕ F(-3) ⊕ F(-4)"
//! );
//! assert!(!a.buchsbaum.buchsbaum);
//! ```

pub mod apery;
pub mod enumerate;
pub mod error;
pub mod ideals;
pub mod ladder;
pub mod oracle;
pub mod report;
pub mod semigroup;
pub mod tangent_cone;

pub use apery::{build_apery_table, validate_table, AperyTable};
pub use error::{Error, Result, SemigroupError};
pub use ideals::{IdealChain, SemigroupIdeal};
pub use ladder::{analyze_ladder, LadderProfile};
pub use report::Report;
pub use semigroup::NumericalSemigroup;
pub use tangent_cone::{
    decompose, is_buchsbaum, torsion_monomials, Analysis, TangentConeDecomposition,
};
