// Simultaneous polynomial root finding on a badly conditioned product.

use num_complex::Complex64;
use toeplitz_schur::spectra::poly_roots;

pub fn run_example() -> toeplitz_schur::Result<()> {
    // coefficients of (z - 1)(z - 2)...(z - 10), ascending
    let mut p = vec![Complex64::new(1.0, 0.0)];
    for m in 1..=10 {
        p.insert(0, Complex64::new(0.0, 0.0));
        for i in 0..p.len() - 1 {
            let next = p[i + 1];
            p[i] -= m as f64 * next;
        }
    }
    let roots = poly_roots(&p)?;
    let worst = roots
        .iter()
        .map(|z| (z - z.re.round()).norm() / z.re.round())
        .fold(0.0, f64::max);
    for z in &roots {
        println!("{:.12}{:+.1e}i", z.re, z.im);
    }
    println!("max relative error {worst:.2e}");

    // z^2 + 1
    let r = poly_roots(&[
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
    ])?;
    println!("z^2 + 1: {r:?}");
    Ok(())
}

fn main() -> toeplitz_schur::Result<()> {
    run_example()
}
