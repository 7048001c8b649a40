// Scan the v-plane for the curve where the middle root moduli of
// Q(v, z) coincide.

use toeplitz_schur::spectra::{limit_set_scan, rho_profile, GridSpec};
use toeplitz_schur::toeplitz::BandedSymbol;

pub fn run_example() -> toeplitz_schur::Result<()> {
    let sym = BandedSymbol::from_real(&[1.0, 0.0, 1.0])?;
    let grid = GridSpec::parse("-3,3,-1,1,121,41")?;
    let report = limit_set_scan(&sym, 1, &grid, 2e-2)?;
    let (lo, hi) = report
        .hits
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), h| {
            (lo.min(h.re), hi.max(h.re))
        });
    let max_im = report.hits.iter().map(|h| h.im.abs()).fold(0.0, f64::max);
    println!(
        "{} hits, real parts in [{lo}, {hi}], |imag| ≤ {max_im}",
        report.hits.len()
    );

    // a cubic band: the curve is no longer a segment
    let sym = BandedSymbol::from_real(&[1.0, 0.5, 1.0, 0.3])?;
    let grid = GridSpec::parse("-3,3,-3,3,81,81")?;
    let report = limit_set_scan(&sym, 1, &grid, 3e-2)?;
    println!("cubic band ({sym}): {} hits", report.hits.len());
    if let Some(h) = report.hits.first() {
        println!("first hit {}{:+}i, gap {:.2e}", h.re, h.im, h.gap);
        println!("moduli there: {:?}", rho_profile(&sym, 1, h.v())?);
    }
    for note in &report.notes {
        println!("note: {note}");
    }
    Ok(())
}

fn main() -> toeplitz_schur::Result<()> {
    run_example()
}
