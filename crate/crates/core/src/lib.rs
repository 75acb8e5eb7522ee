//! Exact computations on small simple matroids: Tutte and characteristic
//! polynomials, Orlik-Solomon algebras, first resonance varieties and regular
//! colorations.
//!
//! Elements are 0-based internally ([`ElementSet`] bit `i` is element `i + 1`)
//! and 1-based in every text and JSON format. All arithmetic is exact.

pub mod coloration;
pub mod echelon;
pub mod error;
pub mod exterior;
pub mod field;
pub mod io;
pub mod matroid;
pub mod os;
pub mod par;
pub mod poly;
pub mod realization;
pub mod resonance;
pub mod subset;
pub mod tutte;

pub use coloration::{is_regular, max_regular_k, named_coloration, search_regular, Coloration, NamedColoration};
pub use error::{Error, Result};
pub use matroid::{canonical_key, find_isomorphism, uniform, Backing, CanonicalKey, Matroid, VectorConfig};
pub use os::{hilbert_series, ideal_component, nbc_oracle, verify_free_ext_ideal_eq, verify_graded_map, DegreeOneMap};
pub use par::Exec;
pub use poly::{BivariatePoly, UnivariatePoly};
pub use realization::{generate, FamilySpec};
pub use resonance::{hp_dim, local_components, r1_membership, LambdaVector};
pub use subset::ElementSet;
pub use tutte::{char_poly, corank_nullity_oracle, tutte, tutte_rank3_from_lines};
