//! Half-integers, branch-controlled powers of q, q-numbers, and the
//! Casimir series fit near `q = -1`.

mod half_int;
mod qnumber;
mod qpoint;
mod series;

pub use half_int::{HalfInt, MAX_TWICE};
pub use qnumber::{casimir_scalar, q_number};
pub use qpoint::{cis_pi, q_power, QPoint};
pub use series::{casimir_series_fit, predicted_series, SeriesFit, MAX_DELTA, MIN_SAMPLES};
