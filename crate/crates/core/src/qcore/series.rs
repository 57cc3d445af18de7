//! Least-squares recovery of the Laurent coefficients of `[j][j+1]` as
//! `q → -1` along the negative real axis.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcore::{casimir_scalar, HalfInt, QPoint};

/// Coefficients of `c_neg2·ε⁻² + c_0 + c_2·ε²` and the 2-norm of the fit residual.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesFit {
    pub c_neg2: f64,
    pub c_0: f64,
    pub c_2: f64,
    pub residual: f64,
}

pub const MIN_SAMPLES: usize = 4;
pub const MAX_DELTA: f64 = 0.1;
/// Reciprocal condition number below which the scaled design is rejected.
const RCOND_FLOOR: f64 = 1e-12;

/// Closed-form expansion coefficients `(c_neg2, c_0, c_2)`.
///
/// Half-odd spins diverge like `4/ε²`; integer spins have the finite limit
/// `-j(j+1)` and no `ε²` prediction is offered for them.
pub fn predicted_series(j: HalfInt) -> (f64, f64, Option<f64>) {
    let jj = j.value() * (j.value() + 1.0);
    if j.is_integer() {
        (0.0, -jj, None)
    } else {
        (
            4.0,
            0.5 + jj,
            Some(-1.0 / 32.0 + jj * (2.0 * jj - 1.0) / 24.0),
        )
    }
}

/// Samples `[j][j+1]` at `q = (1+δ, π)` for each `δ` and fits the basis
/// `{ε⁻², 1, ε²}` by ordinary least squares, with `ε = q - q⁻¹` real.
pub fn casimir_series_fit(j: HalfInt, deltas: &[f64]) -> Result<SeriesFit> {
    if deltas.len() < MIN_SAMPLES {
        return Err(Error::InvalidArgument(format!(
            "series fit needs at least {MIN_SAMPLES} deltas, got {}",
            deltas.len()
        )));
    }
    if let Some(bad) = deltas
        .iter()
        .find(|d| !(d.is_finite() && **d > 0.0 && **d < MAX_DELTA))
    {
        return Err(Error::InvalidArgument(format!(
            "deltas must lie in (0, {MAX_DELTA}), got {bad}"
        )));
    }
    if j.is_negative() {
        return Err(Error::InvalidArgument(format!(
            "spin must be non-negative, got {j}"
        )));
    }

    let rows = deltas.len();
    let mut design = DMatrix::<f64>::zeros(rows, 3);
    let mut target = DVector::<f64>::zeros(rows);
    for (r, &delta) in deltas.iter().enumerate() {
        let q = QPoint::near_minus_one(delta)?;
        let u = q.epsilon().re.powi(2);
        design[(r, 0)] = 1.0 / u;
        design[(r, 1)] = 1.0;
        design[(r, 2)] = u;
        target[r] = casimir_scalar(q, j)?.re;
    }

    let scales: Vec<f64> = (0..3).map(|c| design.column(c).amax()).collect();
    let mut scaled = design.clone();
    for (c, s) in scales.iter().enumerate() {
        scaled.column_mut(c).unscale_mut(*s);
    }

    let sv = scaled.singular_values();
    let s_max = sv.max();
    let s_min = sv.min();
    if s_min.is_nan() || s_min <= RCOND_FLOOR * s_max {
        return Err(Error::IllConditioned {
            condition: if s_min > 0.0 {
                s_max / s_min
            } else {
                f64::INFINITY
            },
        });
    }
    // Householder QR; more accurate than the SVD solve on this design.
    let qr = scaled.clone().qr();
    let qty = qr.q().transpose() * &target;
    let solved = qr
        .r()
        .solve_upper_triangular(&qty)
        .ok_or(Error::IllConditioned {
            condition: f64::INFINITY,
        })?;
    // one step of iterative refinement
    let correction = qr
        .r()
        .solve_upper_triangular(&(qr.q().transpose() * (&target - &scaled * &solved)))
        .ok_or(Error::IllConditioned {
            condition: f64::INFINITY,
        })?;
    let solved = solved + correction;
    let coeffs = DVector::from_iterator(3, (0..3).map(|c| solved[c] / scales[c]));
    let residual = (&design * &coeffs - &target).norm();

    Ok(SeriesFit {
        c_neg2: coeffs[0],
        c_0: coeffs[1],
        c_2: coeffs[2],
        residual,
    })
}
