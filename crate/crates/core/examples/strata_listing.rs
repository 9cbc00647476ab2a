// List every fixed-point stratum of a rank 4 problem with its
// multiplicity matrix and the induced weights on the two fibre points.

use std::collections::BTreeMap;
use std::error::Error;

use parabolic_strata::parabolic::PointWeights;
use parabolic_strata::strata::{
    matrix_to_multiplicity_system, moduli_dimension, strata, ModuliSpec,
};
use parabolic_strata::Rational;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let w = PointWeights::new(vec![(Rational::new(1, 4), 2), (Rational::new(1, 2), 2)])?;
    let spec = ModuliSpec::new(2, 4, 0, BTreeMap::from([("p".to_string(), w.clone())]))?;
    println!("dim M = {}", moduli_dimension(&spec));
    let mut count = 0;
    for st in strata(&spec, 2)? {
        let m = &st.matrices["p"];
        let fibres = matrix_to_multiplicity_system(m, &w)?;
        let shapes: Vec<Vec<u32>> = fibres.iter().map(|f| f.multiplicities()).collect();
        println!(
            "index {:?} matrix {:?} fibres {:?} dim {}",
            st.index.0["p"].0,
            m.rows(),
            shapes,
            st.dimension
        );
        count += 1;
    }
    // 9 subset tuples, of which 3 carry a matrix
    assert_eq!(count, 3);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("strata example failed");
}
