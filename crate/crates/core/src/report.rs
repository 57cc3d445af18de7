//! Machine-readable verification records.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::hopf::CoproductFamily;
use crate::linalg::CMatrix;
use crate::qcore::HalfInt;
use crate::C64;

/// A complex number as `{"re": .., "im": ..}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexScalar {
    pub re: f64,
    pub im: f64,
}

impl From<C64> for ComplexScalar {
    fn from(z: C64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<ComplexScalar> for C64 {
    fn from(z: ComplexScalar) -> Self {
        C64::new(z.re, z.im)
    }
}

/// Row-major nested list of `{"re", "im"}` objects.
pub fn matrix_json(m: &CMatrix) -> Value {
    let rows: Vec<Vec<ComplexScalar>> = (0..m.nrows())
        .map(|r| (0..m.ncols()).map(|c| m[(r, c)].into()).collect())
        .collect();
    serde_json::to_value(rows).expect("matrix serializes")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub family: CoproductFamily,
    pub reps: Vec<HalfInt>,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

impl VerificationReport {
    /// A check that passes when `residual <= tolerance`.
    pub fn residual_check(
        check: impl Into<String>,
        family: CoproductFamily,
        reps: Vec<HalfInt>,
        residual: f64,
        tolerance: f64,
    ) -> Self {
        Self {
            check: check.into(),
            family,
            reps,
            residual,
            tolerance,
            pass: residual <= tolerance,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: Value) -> Self {
        self.detail = Some(detail);
        self
    }

    /// One human-readable line; residuals carry 13 significant digits.
    pub fn text_line(&self) -> String {
        let reps: Vec<String> = self.reps.iter().map(|j| j.to_string()).collect();
        format!(
            "{} {:<24} {:<15} q=({}, {}) n={} reps=[{}] residual={:.12e} tol={:.3e}",
            if self.pass { "PASS" } else { "FAIL" },
            self.check,
            self.family.kind.label(),
            self.family.q.modulus(),
            self.family.q.phase(),
            self.family.n,
            reps.join(", "),
            self.residual,
            self.tolerance,
        )
    }
}
