//! Builds stl_n(R), prints its kernel over sl_n(R) and runs the T/t identities.

use stl_homology::rings::{dual, mat2};
use stl_homology::steinberg::{build_stl, verify_calculus};
use stl_homology::ScalarDomain;

fn main() -> stl_homology::Result<()> {
    let q = ScalarDomain::Rationals;
    let f2 = ScalarDomain::PrimeField(2);
    for (n, r) in [(3, dual(q)), (4, dual(f2)), (3, mat2(f2))] {
        let m = build_stl(n, &r)?;
        println!(
            "{}: dim {} = {} (X part) + {} (H), kernel {} (HH1 = {})",
            m.algebra().name(),
            m.dim(),
            m.x_dim(),
            m.h_dim(),
            m.extension.kernel_invariants,
            m.hh1
        );
        let rep = verify_calculus(&m);
        for c in &rep.checks {
            println!(
                "  {:<28} {:>6} cases  {}",
                c.check,
                c.cases,
                if c.passed { "ok" } else { "FAIL" }
            );
        }
    }
    Ok(())
}
