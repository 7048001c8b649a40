// Skew Schur polynomials from tableaux and from the Jacobi–Trudi determinant.

use num_complex::Complex64;
use toeplitz_schur::schur::{jacobi_trudi_matrix, schur_jacobi_trudi};
use toeplitz_schur::shapes::{Partition, SkewShape};
use toeplitz_schur::tableaux::{enumerate_ssyt, schur_by_tableaux};

pub fn run_example() -> toeplitz_schur::Result<()> {
    let shape = SkewShape::new(Partition::parse("4,2,1")?, Partition::parse("2,2")?)?;
    let n = 3;

    let by_tableaux = schur_by_tableaux(&shape, n);
    let by_det = schur_jacobi_trudi(&shape, n);
    println!("S_{shape}(x1..x{n})");
    println!("  tableaux:     {by_tableaux}");
    println!("  jacobi-trudi: {by_det}");
    assert_eq!(by_tableaux, by_det);
    assert!(by_det.is_symmetric());

    println!("dual Jacobi–Trudi matrix:");
    print!("{}", jacobi_trudi_matrix(&shape, n));

    let ssyt = enumerate_ssyt(&shape, n);
    println!(
        "{} tableaux, coefficient sum {}",
        ssyt.len(),
        by_det.coefficient_sum()
    );
    for t in ssyt.iter().take(3) {
        println!("  {:?}", t.rows());
    }

    let at = [
        Complex64::new(1.0, 0.0),
        Complex64::new(-0.5, 0.25),
        Complex64::new(2.0, 0.0),
    ];
    println!("value at {at:?}: {}", by_det.evaluate(&at)?);
    Ok(())
}

fn main() -> toeplitz_schur::Result<()> {
    run_example()
}
