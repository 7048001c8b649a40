// Eigenvalues of finite sections against the scanned limit set.

use std::f64::consts::PI;

use toeplitz_schur::shapes::MinorSpec;
use toeplitz_schur::spectra::{finite_section_spectrum, spectrum_vs_limitset, GridSpec};
use toeplitz_schur::toeplitz::BandedSymbol;

pub fn run_example() -> toeplitz_schur::Result<()> {
    let (s1, s2) = (0.5, 2.0);
    let sym = BandedSymbol::from_real(&[1.0, s1, s2])?;
    let k = 8;
    let res = finite_section_spectrum(&sym, &MinorSpec::leading(1, 2)?, k)?;
    for (m, z) in (1..=k).rev().zip(&res.eigenvalues) {
        let exact = s1 + 2.0 * s2.sqrt() * (m as f64 * PI / (k + 1) as f64).cos();
        println!("{:+.12} (closed form {exact:+.12})", z.re);
    }

    // sections of the shifted family keep the constant diagonal s_c
    let sym = BandedSymbol::from_real(&[1.0, 0.3, 1.0, 0.2])?;
    let spec = MinorSpec::shifted_family(1, vec![3], 3)?;
    let res = finite_section_spectrum(&sym, &spec, 30)?;
    println!(
        "{spec}: {} eigenvalues, first {}",
        res.eigenvalues.len(),
        res.eigenvalues[0]
    );

    let tridiagonal = BandedSymbol::from_real(&[1.0, 0.0, 1.0])?;
    let grid = GridSpec::parse("-3,3,-1,1,241,81")?;
    for k in [10, 50] {
        let cmp = spectrum_vs_limitset(&tridiagonal, 1, k, &grid, 2e-2)?;
        println!(
            "k={k}: median distance {:.2e}, max {:.2e}, pitch {}",
            cmp.median, cmp.max, cmp.pitch
        );
    }
    Ok(())
}

fn main() -> toeplitz_schur::Result<()> {
    run_example()
}
