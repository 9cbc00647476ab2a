// Wall test for parabolic weights: a generic system and a non-generic one
// with its witness sub-datum.

use std::error::Error;

use parabolic_strata::parabolic::{
    is_generic, par_slope, Genericity, ParabolicDatum, PointWeights,
};
use parabolic_strata::Rational;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let generic = ParabolicDatum::single_point(
        2,
        0,
        "p",
        PointWeights::new(vec![(Rational::new(1, 4), 1), (Rational::new(1, 2), 1)])?,
    )?;
    println!(
        "slope {} -> {:?}",
        par_slope(&generic),
        is_generic(&generic)
    );
    assert!(is_generic(&generic).is_generic());

    let wall = ParabolicDatum::single_point(
        2,
        0,
        "p",
        PointWeights::new(vec![(Rational::new(1, 4), 2)])?,
    )?;
    match is_generic(&wall) {
        Genericity::NonGeneric(w) => {
            println!(
                "non-generic: sub-datum of rank {} and degree {} with multiplicities {:?}",
                w.sub_rank, w.sub_degree, w.sub_multiplicities
            );
            assert_eq!((w.sub_rank, w.sub_degree), (1, 0));
        }
        Genericity::Generic => return Err("expected a wall".into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("genericity example failed");
}
