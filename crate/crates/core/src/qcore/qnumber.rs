use crate::error::{Error, Result};
use crate::qcore::{HalfInt, QPoint};
use crate::C64;

/// The q-number `[x] = (q^x - q^{-x}) / (q - q^{-1})`.
///
/// At `q = 1` this is `x`; at `q = -1` it is `(-1)^{x+1}·x` for integer `x`
/// and has no finite value otherwise.
pub fn q_number(q: QPoint, x: impl Into<f64>) -> Result<C64> {
    let x = x.into();
    if q.is_one() {
        return Ok(C64::new(x, 0.0));
    }
    if q.is_minus_one() {
        if x.fract() != 0.0 {
            return Err(Error::Divergent { arg: x });
        }
        let sign = if (x as i64).rem_euclid(2) == 0 {
            -1.0
        } else {
            1.0
        };
        return Ok(C64::new(sign * x, 0.0));
    }
    Ok(q.half_difference(x) / q.half_difference(1.0))
}

/// `[j][j+1]`, the value of the quadratic Casimir on the spin-j irrep.
pub fn casimir_scalar(q: QPoint, j: HalfInt) -> Result<C64> {
    Ok(q_number(q, j)? * q_number(q, j + HalfInt::ONE)?)
}
