// Inserting a strictly increasing sequence into a skew tableau, one value per row.

use toeplitz_schur::shapes::{Partition, SkewShape};
use toeplitz_schur::tableaux::{insert_sequence, InsertionSequence, Tableau};

pub fn run_example() -> toeplitz_schur::Result<()> {
    let shape = SkewShape::new(Partition::parse("3,1")?, Partition::empty())?;
    let t = Tableau::new(shape, vec![vec![1, 2, 4], vec![3]])?;
    println!("T = {:?} of shape {}", t.rows(), t.shape());

    for values in [vec![2, 3], vec![1, 4], vec![-1, 2, 3]] {
        let seq = InsertionSequence::new(values.clone())?;
        let out = insert_sequence(&t, &seq)?;
        println!(
            "insert {values:?}: {:?} of shape {}",
            out.rows(),
            out.shape()
        );
    }

    // two insertions in either order give the same tableau
    let a = InsertionSequence::new(vec![1, 3])?;
    let b = InsertionSequence::new(vec![2, 4])?;
    let ab = insert_sequence(&insert_sequence(&t, &a)?, &b)?;
    let ba = insert_sequence(&insert_sequence(&t, &b)?, &a)?;
    println!("commute: {}", ab == ba);
    Ok(())
}

fn main() -> toeplitz_schur::Result<()> {
    run_example()
}
