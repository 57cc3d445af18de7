//! Classical and q-deformed spin-j generators with their Casimir.

use qhopf::{build_classical_irrep, build_q_irrep, casimir_matrix, HalfInt, QPoint};

fn main() -> qhopf::Result<()> {
    let j: HalfInt = "1".parse()?;
    let classical = build_classical_irrep(j)?;
    let deformed = build_q_irrep(j, QPoint::real(2.0)?)?;
    println!("spin {j} classical J+:\n{}", classical.jp().map(|z| z.re));
    println!(
        "spin {j} at q = 2, J+ (√[2] = √2.5 on the superdiagonal):\n{}",
        deformed.jp().map(|z| z.re)
    );
    println!(
        "Casimir at q = 2: {:.6}",
        casimir_matrix(&deformed)?[(0, 0)].re
    );

    let half: HalfInt = "1/2".parse()?;
    let at_minus_one = build_q_irrep(half, QPoint::minus_one())?;
    println!("spin 1/2 at q = -1 has J+ = {}", at_minus_one.jp()[(0, 1)]);
    println!(
        "its Casimir: {}",
        casimir_matrix(&at_minus_one).unwrap_err()
    );
    Ok(())
}
