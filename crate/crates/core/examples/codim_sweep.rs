// Sweep genus, rank, cover degree and multiplicity systems, checking the
// codimension bound everywhere.

use std::error::Error;

use parabolic_strata::strata::{codim_report, sweep_configurations, SweepRange};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let range = SweepRange {
        genus: (2, 3),
        ranks: vec![2, 3, 4],
        degrees: None,
        max_length: 3,
        max_points: 1,
    };
    let mut worst: Option<(i64, String)> = None;
    let configs = sweep_configurations(&range);
    for (spec, d) in &configs {
        let rep = codim_report(spec, *d)?;
        assert!(rep.bound_holds);
        if let Some(c) = rep.codim {
            let label = format!(
                "g={} r={} d={} mults={:?}",
                spec.genus(),
                spec.rank(),
                d,
                spec.points()
                    .values()
                    .map(|w| w.multiplicities())
                    .collect::<Vec<_>>()
            );
            if worst.as_ref().is_none_or(|(w, _)| c < *w) {
                worst = Some((c, label));
            }
        }
    }
    let (c, label) = worst.ok_or("empty sweep")?;
    println!(
        "{} configurations; smallest codimension {c} at {label}",
        configs.len()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("sweep example failed");
}
