//! Exact computer algebra for octonions and octonionic modules.
//!
//! Everything is computed over exact scalars (the shipped instantiation is
//! [`Rat`], arbitrary-precision rationals), so rank, subspace and feasibility
//! questions are decided, not approximated. The building blocks:
//!
//! * [`linalg`] — dense rational linear algebra: RREF, nullspaces, affine
//!   solving, operator/algebra closures.
//! * [`octonion`] — the octonion algebra over a generic scalar: multiplication
//!   table, conjugation, norm, associator, literal parsing.
//! * [`clifford`] — the representation of an octonion as a pair of 8×8
//!   left-multiplication matrices, anticommutation checks, the pseudoscalar.
//! * [`omodule`] — modules of the form 𝕆ⁿ⊕𝕆̄ᵏ: element classification,
//!   length, generated submodules, and canonicalization of abstract modules
//!   given by seven action matrices.
//! * [`bimodule`] — right actions, the two-sided compatibility checker, and
//!   the feasibility solver that decides whether a left module admits a
//!   compatible right action.
//! * [`selftest`] — the seeded verification suite behind `octomod selftest`
//!   and the acceptance tests.
//!
//! The core types are generic over [`scalar::Scalar`]; the aliases below fix
//! the rational instantiation used by the CLI and the JSON interfaces.

pub mod bimodule;
pub mod clifford;
pub mod error;
pub mod json;
pub mod linalg;
pub mod octonion;
pub mod omodule;
pub mod scalar;
pub mod selftest;

pub use error::Error;
pub use scalar::Scalar;

/// Exact rational scalar: reduced fraction of arbitrary-precision integers.
pub type Rat = num::BigRational;

/// Fixed-width exact rationals, for bounded computations where the
/// magnitudes provably stay far from overflow (single algebra products).
pub type Rat64 = num::Rational64;

pub type RatMatrix = linalg::Matrix<Rat>;
pub type RatSubspace = linalg::Subspace<Rat>;
pub type RatAffineSet = linalg::AffineSet<Rat>;
pub type RatOctonion = octonion::Octonion<Rat>;
pub type RatCliffordPair = clifford::CliffordPair<Rat>;
pub type RatModuleElement = omodule::ModuleElement<Rat>;
pub type RatStandardModule = omodule::StandardModule<Rat>;
pub type RatAbstractModule = omodule::AbstractModule<Rat>;
pub type RatCanonicalForm = omodule::CanonicalForm<Rat>;
pub type RatRightAction = bimodule::RightAction<Rat>;
pub type RatSolveOutcome = bimodule::SolveOutcome<Rat>;

