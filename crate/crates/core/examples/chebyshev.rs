// One-row Schur polynomials in two variables with product 1 are
// Chebyshev polynomials of the second kind.

use num_complex::Complex64;
use toeplitz_schur::shapes::{Partition, SkewShape};
use toeplitz_schur::tableaux::schur_by_tableaux;

fn chebyshev_u(j: usize, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 2.0 * x);
    if j == 0 {
        return prev;
    }
    for _ in 1..j {
        (prev, cur) = (cur, 2.0 * x * cur - prev);
    }
    cur
}

pub fn run_example() -> toeplitz_schur::Result<()> {
    let x = 0.3_f64;
    let root = Complex64::new(x * x - 1.0, 0.0).sqrt();
    let point = [x - root, x + root];
    for j in 0..=8u32 {
        let s = schur_by_tableaux(&SkewShape::straight(Partition::new(vec![j])?), 2);
        let value = s.evaluate(&point)?;
        let u = chebyshev_u(j as usize, x);
        println!("j={j}: S_({j}) = {:+.12}  U_{j}({x}) = {u:+.12}", value.re);
        assert!((value.re - u).abs() < 1e-12 && value.im.abs() < 1e-12);
    }
    Ok(())
}

fn main() -> toeplitz_schur::Result<()> {
    run_example()
}
