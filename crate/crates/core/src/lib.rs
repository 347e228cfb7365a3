//! Combinatorics and homological algebra for the self-injective special
//! biserial algebras `Lambda_{m,N}`.
//!
//! The quiver has vertices `Z/m` with arrows `a_i : i -> i+1` and
//! `A_i : i+1 -> i` (written `ā_i` on paper), subject to the relations
//! `a_{i+1} a_i = 0`, `A_{i-1} A_i = 0` and `(A_i a_i)^N = (a_{i-1} A_{i-1})^N`.
//! Words compose right to left.
//!
//! The crate builds string modules, computes Hom spaces (both through the
//! canonical-basis combinatorics and through a brute-force intertwiner
//! solver over exact fields), walks syzygies, and classifies the universal
//! deformation ring of a string module with stable endomorphism ring `k`.
//!
//! ```
//! use biserial::{Algebra, Rationals, Ring, StringRep, udr};
//!
//! let alg = Algebra::new(3, 2).unwrap();
//! let arrow = StringRep::arrow(&alg, alg.arrow_a(0));
//! let label = udr(&Rationals, &alg, &arrow).unwrap();
//! assert_eq!(label.ring, Ring::KTModTN(2));
//! assert_eq!(label.ring.label(), "k[[t]]/(t^2)");
//! assert_eq!(label.ext1_self, Some(1));
//! ```

pub mod algebra;
pub mod classify;
pub mod field;
pub mod hom;
pub mod matrix;
pub mod rep;
pub mod strings;
pub mod syzygy;
pub mod verify;

pub use algebra::{Algebra, AlgebraError, ArrowKind, Letter, PathElement, Word};
pub use classify::{
    census_component, census_tubes, end_is_k, locate_component, udr, verify_lift_chain,
    CensusRow, ChainSide, ClassifyError, ComponentFamily, ComponentLocus, LiftChainReport,
    LiftChainVariant, Ring, UdrLabel,
};
pub use field::{Field, PrimeField, Rationals};
pub use hom::{
    admissible_occurrences, canonical_hom, hom_basis, hom_oracle, projective_cover,
    stable_hom_dim, HomElement, Occurrence,
};
pub use matrix::Matrix;
pub use rep::{check_relations, direct_sum, string_module, Rep};
pub use strings::{
    enumerate_strings, maximal_directed, modify_hook, FamilySpec, HookDirection, HookKind,
    Side, StringError, StringRep,
};
pub use syzygy::{ext1_dim, omega, omega_inverse, omega_orbit, omega_string, tau, OmegaResult, SyzygyError};
