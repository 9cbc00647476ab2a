// Poincaré polynomials of flag varieties and the Picard rank count for a
// product of them.

use std::error::Error;

use parabolic_strata::flagcoh::{
    flag_poincare, kunneth_report, levi_components, weyl_bfs_order, weyl_poincare, CartanType,
    ParabolicSubset,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for name in ["A2", "B2", "G2", "D4", "E6"] {
        let t: CartanType = name.parse()?;
        let w = weyl_poincare(&t);
        println!(
            "{name}: |W| = {} (search: {})",
            w.eval(1),
            weyl_bfs_order(&t)?
        );
    }

    let a3: CartanType = "A3".parse()?;
    let p2 = ParabolicSubset::from_global(&a3, &[2, 3])?;
    println!(
        "A3 / P(2,3) = P^3: {}",
        flag_poincare(&a3, &p2)?.display_in("q")
    );
    let grass = ParabolicSubset::from_global(&a3, &[1, 3])?;
    println!(
        "A3 / P(1,3): Levi {} Poincare {}",
        levi_components(&a3, &grass)?,
        flag_poincare(&a3, &grass)?.display_in("q")
    );

    let rep = kunneth_report(&a3, &[p2, grass, ParabolicSubset::borel(&a3)], 1, 1)?;
    println!(
        "F = P^3 x Gr(2,4) x Fl(4): b2 = {}, pic ranks {:?}, t = {}",
        rep.b2, rep.pic_ranks, rep.t
    );
    assert_eq!(rep.b2, 5);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("flag cohomology example failed");
}
