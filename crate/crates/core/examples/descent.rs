// Split a flag preserved by an order-4 automorphism into eigenspaces and
// descend it to the four fibre points of a cyclic cover.

use std::error::Error;

use parabolic_strata::eigenflag::{
    descend, fixed_point_shape, nested_eigenbasis, FlagAutomorphism, WeightedFlag,
};
use parabolic_strata::Rational;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // a rotation by a quarter turn on each of two planes: eigenvalues i, -i
    // each with multiplicity two
    let phi = FlagAutomorphism::from_integer_rows(
        4,
        &[
            vec![0, -1, 0, 0],
            vec![1, 0, 0, 0],
            vec![0, 0, 0, -1],
            vec![0, 0, 1, 0],
        ],
    )?;
    let flag = WeightedFlag::from_integer_vectors(
        4,
        4,
        &[
            vec![
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 1],
            ],
            vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]],
        ],
        vec![Rational::zero(), Rational::new(1, 2)],
    )?;

    let basis = nested_eigenbasis(&phi, &flag)?;
    for (i, level) in basis.levels.iter().enumerate() {
        let exps: Vec<u32> = level.iter().map(|v| v.exponent).collect();
        println!("B_{}: eigenvalue exponents {:?}", i + 1, exps);
    }

    let res = descend(&phi, &flag, 4)?;
    for f in &res.fibers {
        println!(
            "q_{}: eigenspace dim {}, weights {:?}",
            f.index,
            f.eigenspace_dim,
            f.weights.multiplicities()
        );
    }
    println!("matrix {:?}", res.matrix);
    // only two of the four eigenvalues occur, so this is not a fixed-point shape
    assert!(!fixed_point_shape(&res, 4, 4));
    assert_eq!(res.eigenspace_dims(), vec![2, 0, 2, 0]);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("descent example failed");
}
