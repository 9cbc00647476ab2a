// Dimension of the moduli space against its largest fixed-point stratum.

use std::collections::BTreeMap;
use std::error::Error;

use parabolic_strata::parabolic::PointWeights;
use parabolic_strata::strata::{codim_report, ModuliSpec};
use parabolic_strata::Rational;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let full_flag = PointWeights::new(vec![(Rational::new(1, 4), 1), (Rational::new(1, 2), 1)])?;
    let spec = ModuliSpec::new(2, 2, 1, BTreeMap::from([("p".to_string(), full_flag)]))?;
    let rep = codim_report(&spec, 2)?;
    println!(
        "g=2 r=2 d=2: dim {} max stratum {:?} codim {:?} bound {}",
        rep.dim_moduli, rep.max_stratum_dim, rep.codim, rep.bound
    );
    assert_eq!(rep.codim, Some(3));

    let spec = ModuliSpec::new(3, 3, 0, BTreeMap::new())?;
    let rep = codim_report(&spec, 3)?;
    println!(
        "g=3 r=3 d=3: dim {} max stratum {:?} codim {:?} bound {}",
        rep.dim_moduli, rep.max_stratum_dim, rep.codim, rep.bound
    );
    assert!(rep.bound_holds && rep.codim_at_least_three);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("codim example failed");
}
