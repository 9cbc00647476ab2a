// Push a parabolic line bundle down a double cover, then pull back and
// twist by the Galois involution.

use std::collections::BTreeMap;
use std::error::Error;

use parabolic_strata::cover::{cover_genus, galois_twist, pullback, pushforward, CoverSpec};
use parabolic_strata::parabolic::{par_degree, par_slope, ParabolicDatum, PointWeights};
use parabolic_strata::Rational;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cover = CoverSpec::standard(2, &["p"])?;
    println!(
        "a genus 3 base has a genus {} double cover",
        cover_genus(3, 2)
    );

    let upstairs = ParabolicDatum::new(
        1,
        1,
        BTreeMap::from([
            (
                "p.1".to_string(),
                PointWeights::new(vec![(Rational::new(1, 3), 1)])?,
            ),
            (
                "p.2".to_string(),
                PointWeights::new(vec![(Rational::new(2, 3), 1)])?,
            ),
        ]),
    )?;
    let down = pushforward(&cover, &upstairs)?;
    println!(
        "pushforward: rank {} degree {} weights {:?}",
        down.rank(),
        down.degree(),
        down.points()["p"]
            .weights()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    assert_eq!(par_degree(&down), par_degree(&upstairs));

    let twisted = galois_twist(&cover, &upstairs, 1)?;
    assert_eq!(par_slope(&twisted), par_slope(&upstairs));
    println!(
        "Galois twist swaps the fibre data: p.1 now has {:?}",
        twisted.points()["p.1"].weights()
    );

    let back = pullback(&cover, &down)?;
    let round = pushforward(&cover, &back)?;
    println!(
        "pushforward of the pullback: par_degree {} = 2 * {}",
        par_degree(&round),
        par_degree(&down)
    );
    assert_eq!(par_degree(&round), par_degree(&down) * Rational::integer(2));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("pushforward example failed");
}
