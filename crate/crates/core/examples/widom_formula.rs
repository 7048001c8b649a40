// Closed forms for det D_c^k from the roots of the band polynomial.

use num_complex::Complex64;
use toeplitz_schur::shapes::{MinorSpec, Partition};
use toeplitz_schur::toeplitz::build_minor_numeric;
use toeplitz_schur::widom::{hall_schur_eval, widom_modified, widom_original, RootData};

pub fn run_example() -> toeplitz_schur::Result<()> {
    let chi = RootData::chi(vec![
        Complex64::new(1.2, 0.3),
        Complex64::new(-0.4, 0.9),
        Complex64::new(0.7, -1.1),
        Complex64::new(-1.3, -0.2),
    ])?;
    let psi = chi.converted();
    let sym = chi.symbol();
    println!("band s = ({sym})");

    for c in 1..chi.n() {
        let spec = MinorSpec::leading(c, chi.n())?;
        for k in [1, 5, 12] {
            let det = build_minor_numeric(&sym, &spec, k as usize)?.det();
            let modified = widom_modified(&chi, c, k)?;
            let original = widom_original(&psi, chi.s_n(), c, k)?;
            let hall = hall_schur_eval(&Partition::rectangle(c, k), chi.roots())?;
            let err = [modified, original, hall]
                .iter()
                .map(|w| (w - det).norm() / det.norm())
                .fold(0.0, f64::max);
            println!("c={c} k={k:2}: det = {det:.6}, max relative deviation {err:.1e}");
        }
    }
    Ok(())
}

fn main() -> toeplitz_schur::Result<()> {
    run_example()
}
