//! Exhaustive 2-cocycle check on the symbolic basis, and a corrupted control.

use stl_homology::rings::{dual, ground, mat2};
use stl_homology::steinberg::{verify_cocycle, verify_cocycle_corrupted};
use stl_homology::ScalarDomain;

fn main() -> stl_homology::Result<()> {
    let f2 = ScalarDomain::PrimeField(2);
    let f3 = ScalarDomain::PrimeField(3);
    let cases = [
        (4, ground(f2)),
        (4, dual(f2)),
        (4, mat2(f2)),
        (3, ground(f3)),
        (3, dual(f3)),
    ];
    for (n, r) in &cases {
        let rep = verify_cocycle(*n, r)?;
        println!(
            "n={n} {}@{}: passed={} evaluated={}",
            r.name(),
            r.domain(),
            rep.passed,
            rep.evaluated
        );
    }
    let bad = verify_cocycle_corrupted(&ground(f2))?;
    println!(
        "corrupted labels: passed={} witness={}",
        bad.passed,
        bad.witness.unwrap_or_default()
    );
    Ok(())
}
