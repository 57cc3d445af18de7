use thiserror::Error;

use crate::qcore::HalfInt;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A q-number was requested at a point where it has no finite value.
    #[error("q-number [{arg}] diverges at q = -1")]
    Divergent { arg: f64 },

    #[error("least-squares fit is numerically singular (condition estimate {condition:.3e})")]
    IllConditioned { condition: f64 },

    #[error("dimension {dim} exceeds the supported maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("highest-weight kernel at J = {j_total} has dimension {found}, expected 1")]
    KernelDimensionMismatch { j_total: HalfInt, found: usize },

    #[error("lowering collapsed the J = {j_total} tower at m = {m}")]
    TowerCollapsed { j_total: HalfInt, m: HalfInt },

    #[error("flip symmetry needs identical factors, got {left} and {right}")]
    NotIdenticalFactors { left: HalfInt, right: HalfInt },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// No unitary intertwiner exists at the gate tolerance. `residual` is the
    /// smallest singular value of the stacked commutation system, or the
    /// unitarity defect of the best candidate when a singular solution exists.
    #[error("no unitary intertwiner (residual {residual:.3e})")]
    NoIntertwiner { residual: f64 },

    #[error("invalid half-integer {0:?}")]
    InvalidHalfInt(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
