// Exact linear algebra over Q(i): eigenvectors of a rotation.

use std::error::Error;

use parabolic_strata::{Cyclotomic, ExactMatrix, Field};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let i = Cyclotomic::zeta(4)?;
    let zero = i.zero_like();
    let one = i.one_like();
    let rot = ExactMatrix::from_rows(
        vec![
            vec![zero.clone(), one.negated()],
            vec![one.clone(), zero.clone()],
        ],
        zero,
    )?;
    for k in [1, 3] {
        let lambda = Cyclotomic::zeta_pow(4, k)?;
        let ker = rot.shift(&lambda)?.kernel();
        let shown: Vec<String> = ker[0].iter().map(ToString::to_string).collect();
        println!("eigenvalue {lambda}: eigenvector ({})", shown.join(", "));
        assert_eq!(ker.len(), 1);
    }
    println!(
        "1/(1 + z) in Q(zeta_3) = {}",
        Cyclotomic::from_coeffs(3, vec![1.into(), 1.into()])?.inverse()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("exact kernel example failed");
}
