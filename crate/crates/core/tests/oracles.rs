//! Independent numerical routes to values the library computes in closed form.

use qhopf::{casimir_scalar, q_number, Error, HalfInt, QPoint, C64};

/// Evaluates `[x]` straight from `(q^x - q^-x)/(q - q^-1)` with complex powers.
fn naive_q_number(q: QPoint, x: f64) -> C64 {
    let z = q.to_complex();
    (z.powf(x) - z.powf(-x)) / (z - z.inv())
}

/// Extrapolates `f(δ)` to `δ = 0` assuming an even expansion in `δ`-like steps.
fn richardson(f: impl Fn(f64) -> C64, h: f64, levels: usize) -> C64 {
    let mut table: Vec<C64> = (0..levels).map(|k| f(h / 2f64.powi(k as i32))).collect();
    for order in 1..levels {
        let factor = 2f64.powi(order as i32);
        for k in (order..levels).rev() {
            table[k] = (table[k] * factor - table[k - 1]) / (factor - 1.0);
        }
    }
    table[levels - 1]
}

#[test]
fn q_number_of_two_at_minus_one_matches_extrapolated_limit() {
    let limit = richardson(
        |d| naive_q_number(QPoint::near_minus_one(d).unwrap(), 2.0),
        1e-2,
        5,
    );
    let direct = q_number(QPoint::minus_one(), 2.0).unwrap();
    assert!((limit - direct).norm() < 1e-9, "{limit} vs {direct}");
    assert!((direct - C64::new(-2.0, 0.0)).norm() < 1e-15);
}

#[test]
fn integer_q_numbers_at_minus_one_match_limits() {
    for x in 1..=8 {
        let limit = richardson(
            |d| naive_q_number(QPoint::near_minus_one(d).unwrap(), x as f64),
            1e-2,
            5,
        );
        let direct = q_number(QPoint::minus_one(), x as f64).unwrap();
        assert!(
            (limit - direct).norm() < 1e-7 * x as f64,
            "x={x}: {limit} vs {direct}"
        );
    }
}

#[test]
fn closed_form_agrees_with_naive_powers_away_from_singularities() {
    for (r, t) in [(2.0, 0.0), (0.5, 0.0), (1.3, 0.4), (1.0, 0.9), (0.8, 2.5)] {
        let q = QPoint::new(r, t).unwrap();
        for x in [0.5, 1.0, 1.5, 2.0, 3.5, 4.0] {
            let want = naive_q_number(q, x);
            let got = q_number(q, x).unwrap();
            assert!(
                (got - want).norm() <= 1e-12 * want.norm().max(1.0),
                "q=({r},{t}) x={x}"
            );
        }
    }
}

#[test]
fn integer_spin_casimir_stays_finite_near_minus_one() {
    for delta in [1e-3, 1e-4] {
        let q = QPoint::near_minus_one(delta).unwrap();
        for twice in (2..=8).step_by(2) {
            let j = HalfInt::from_twice(twice);
            let jj = j.value() * (j.value() + 1.0);
            let c = casimir_scalar(q, j).unwrap();
            assert!(
                (c - C64::new(-jj, 0.0)).norm() <= 10.0 * delta,
                "j={j} δ={delta} c={c}"
            );
        }
    }
}

#[test]
fn half_odd_spin_casimir_grows_like_inverse_square() {
    for twice in [1, 3, 5] {
        let j = HalfInt::from_twice(twice);
        let at = |d: f64| {
            casimir_scalar(QPoint::near_minus_one(d).unwrap(), j)
                .unwrap()
                .norm()
        };
        let ratio = at(1e-4) / at(2e-4);
        assert!((ratio - 4.0).abs() < 1e-2, "j={j}: ratio {ratio}");
        assert!(matches!(
            casimir_scalar(QPoint::minus_one(), j),
            Err(Error::Divergent { .. })
        ));
    }
}
