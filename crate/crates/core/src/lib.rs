//! Exact cohomology of Lie algebras and Lie superalgebras.
//!
//! Given structure constants for an algebra `g` and a `g`-module `V`, the
//! crate computes `Z^k(g, V)`, `B^k(g, V)` and `H^k(g, V)` with explicit bases,
//! using reduced Gröbner bases of linear forms in place of matrices:
//!
//! * [`scalar`]: exact rationals.
//! * [`algebra`]: algebras, subalgebras, module actions and axiom checks.
//! * [`cochain`]: cochain bases and the differential.
//! * [`lingb`]: reduced bases, normal forms, elimination, subspace and quotient bases.
//! * [`cohomology`]: the cocycle, coboundary and quotient pipeline.
//! * [`graded`]: the same pipeline split by homogeneity.
//! * [`format`]: the algebra file format.
//! * [`report`]: human and machine-readable summaries.
//!
//! ```
//! use lsac::format::parse_algebra_file;
//! use lsac::cohomology::compute_cohomology;
//!
//! let text = "\
//! name heisenberg
//! basis x even
//! basis y even
//! basis z even
//! bracket x y = z
//! ";
//! let file = parse_algebra_file(text).unwrap();
//! let cx = file.complex(None).unwrap();
//! let h2 = compute_cohomology(&cx, 2).unwrap();
//! assert_eq!((h2.dims.c, h2.dims.z, h2.dims.b, h2.dims.h), (9, 8, 3, 5));
//! ```

pub mod algebra;
pub mod cochain;
pub mod cohomology;
pub mod format;
pub mod graded;
pub mod lingb;
pub mod report;
pub mod scalar;

pub use algebra::{GModuleAction, LieSuperAlgebra, Parity, SparseVector, Subalgebra};
pub use cochain::{Cochain, CochainComplex, CochainIndex, OddConvention};
pub use cohomology::{compute_cohomology, full_complex, CohomologyResult, Dims};
pub use graded::compute_graded_cohomology;
pub use lingb::{LinearForm, ReducedLinearBasis, VariableUniverse};
pub use scalar::Scalar;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/cochains.md")]
    mod cochains {}
    #[doc = include_str!("../../../book/src/linear-groebner.md")]
    mod linear_groebner {}
    #[doc = include_str!("../../../book/src/pipeline.md")]
    mod pipeline {}
    #[doc = include_str!("../../../book/src/grading.md")]
    mod grading {}
    #[doc = include_str!("../../../book/src/file-format.md")]
    mod file_format {}
}
