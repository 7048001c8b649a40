// Minors of the banded Toeplitz matrix and their skew shapes.

use toeplitz_schur::shapes::MinorSpec;
use toeplitz_schur::toeplitz::{
    build_minor_numeric, build_minor_symbolic, verify_minor_schur, BandedSymbol,
};

pub fn run_example() -> toeplitz_schur::Result<()> {
    // delete row 2 and columns 1, 3 from the band of width 3
    let spec = MinorSpec::new(vec![2], vec![1, 3], 3)?;
    println!("{spec}, threshold k = {}", spec.min_k());

    for k in spec.min_k()..spec.min_k() + 4 {
        let check = verify_minor_schur(&spec, k)?;
        println!(
            "k={k}: shape {}  det = S_shape: {}",
            spec.shape(k)?,
            check.holds
        );
        assert!(check.holds);
    }

    let k = 3;
    println!("symbolic D^{k}:");
    print!("{}", build_minor_symbolic(&spec, k));

    let sym = BandedSymbol::from_real(&[1.0, 0.5, -2.0, 0.25])?;
    let numeric = build_minor_numeric(&sym, &spec, k)?;
    println!("numeric det with s = ({sym}): {}", numeric.det());
    Ok(())
}

fn main() -> toeplitz_schur::Result<()> {
    run_example()
}
