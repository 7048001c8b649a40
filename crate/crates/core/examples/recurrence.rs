// The linear recurrence satisfied by a family of minor determinants.

use toeplitz_schur::recurrence::{char_coeffs, recurrence_residual, verify_recurrence};
use toeplitz_schur::shapes::MinorSpec;

pub fn run_example() -> toeplitz_schur::Result<()> {
    let spec = MinorSpec::new(vec![2], vec![1, 3], 3)?;
    let cc = char_coeffs(spec.n(), spec.c() - spec.r())?;
    println!("{spec}: order b = {}", cc.b());
    for (i, q) in cc.q().iter().enumerate() {
        println!("  Q_{i} = {q}");
    }
    let report = verify_recurrence(&spec, spec.min_k() + 3);
    println!(
        "all residuals zero from j = {}: {}",
        spec.min_k(),
        report.all_zero
    );
    assert!(report.all_zero);

    // below the threshold the recurrence need not hold
    let boundary = MinorSpec::new(vec![], vec![2], 2)?;
    println!("{boundary}");
    println!("  j=0 residual: {}", recurrence_residual(&boundary, 0));
    println!("  j=1 residual: {}", recurrence_residual(&boundary, 1));
    Ok(())
}

fn main() -> toeplitz_schur::Result<()> {
    run_example()
}
