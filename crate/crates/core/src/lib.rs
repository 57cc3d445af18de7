//! Spin-j representations of su(2) and su_q(2), the twisted coproduct
//! families `Δ(J±) = J± ⊗ q^{J0} e^{±inπJ0} + e^{∓inπJ0} q^{-J0} ⊗ J±`
//! realized as matrices on tensor products, and the numerical checks that
//! go with them: Hopf axioms, (non-)cocommutativity, Clebsch-Gordan
//! multiplets and their exchange symmetry, intertwiners between twists,
//! and the divergence of the Casimir as `q → -1`.
//!
//! Everything is dense complex linear algebra in double precision on
//! dimensions up to a few hundred.

pub mod clebsch;
pub mod cli;
pub mod error;
pub mod exchange;
pub mod hopf;
pub mod irrep;
pub mod linalg;
pub mod qcore;
pub mod report;

pub use num_complex::Complex64 as C64;

pub use clebsch::{cg_decompose, classify_symmetry, verify_multiplet, CGState, SymmetryClass};
pub use error::{Error, Result};
pub use exchange::{
    eta_exchange, exchange_p, exchange_p_twisted, find_intertwiner, intertwiner_u,
    verify_intertwiner, ExchangeMatrix, Intertwiner,
};
pub use hopf::{
    cocommutativity_residual, dressing, raising_commutator, realize, realize_opposite,
    verify_antipode, verify_coassociativity, verify_counit, verify_homomorphism,
    verify_homomorphism_against, verify_star, CoproductFamily, CoproductKind, DressedCoproduct,
    RelationTarget, TensorRealization,
};
pub use irrep::{
    build_classical_irrep, build_irrep, build_q_irrep, casimir_matrix, Generators, Irrep,
};
pub use qcore::{
    casimir_scalar, casimir_series_fit, predicted_series, q_number, q_power, HalfInt, QPoint,
    SeriesFit,
};
pub use report::VerificationReport;
