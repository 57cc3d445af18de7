//! Fits [j][j+1] near q = -1 to c₋₂/u + c₀ + c₂u with u = (q - 1/q)².
//! Half-odd spins diverge, integer spins stay finite.

use qhopf::{casimir_series_fit, predicted_series, HalfInt};

fn main() -> qhopf::Result<()> {
    let deltas = [1e-2, 5e-3, 2e-3, 1e-3];
    for twice in 1..=5 {
        let j = HalfInt::from_twice(twice);
        let fit = casimir_series_fit(j, &deltas)?;
        let (p_neg2, p_0, p_2) = predicted_series(j);
        println!(
            "j = {j:<4} fitted ({:+.6}, {:+.6}, {:+.6})  predicted ({p_neg2:+.6}, {p_0:+.6}, {})",
            fit.c_neg2,
            fit.c_0,
            fit.c_2,
            p_2.map_or("finite".to_string(), |c| format!("{c:+.6}")),
        );
    }
    Ok(())
}
