//! Computed against predicted HL2(stl_n(R)) for n = 3, 4, 5.

use stl_homology::rings::{ground, ring_catalog};
use stl_homology::steinberg::hl2_report;
use stl_homology::ScalarDomain;

fn main() -> stl_homology::Result<()> {
    let rings = [
        ground(ScalarDomain::PrimeField(2)),
        ground(ScalarDomain::PrimeField(3)),
        ring_catalog("int", ScalarDomain::Integers)?,
    ];
    println!(
        "{:<10} {:>2}  {:<24} {:<24} match",
        "ring", "n", "computed", "predicted"
    );
    for r in &rings {
        for n in 3..=5 {
            let rep = hl2_report(n, r)?;
            let name = format!("{}@{}", r.name(), r.domain().code());
            println!(
                "{name:<10} {n:>2}  {:<24} {:<24} {}",
                rep.computed,
                rep.predicted,
                rep.passed()
            );
        }
    }
    Ok(())
}
