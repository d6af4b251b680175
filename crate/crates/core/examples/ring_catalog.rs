//! The catalog rings with their Hochschild H1 and the quotients R/(2R + R[R,R]), R/(3R + R[R,R]).

use stl_homology::rings::{ring_catalog, CATALOG};
use stl_homology::ScalarDomain;

fn main() -> stl_homology::Result<()> {
    for k in [
        ScalarDomain::PrimeField(2),
        ScalarDomain::PrimeField(3),
        ScalarDomain::Integers,
    ] {
        for name in CATALOG {
            let Ok(r) = ring_catalog(name, k) else {
                continue;
            };
            println!(
                "{name:>9} over {k}: dim {}, commutative {}, HH1 = {}, R2 = {}, R3 = {}",
                r.dim(),
                r.is_commutative(),
                r.hochschild_h1(),
                r.quotient_rm(2).invariants(),
                r.quotient_rm(3).invariants(),
            );
        }
    }
    Ok(())
}
