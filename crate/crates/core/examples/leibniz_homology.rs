//! HL2 of sl_n(R) and its universal central extension.

use stl_homology::leibniz::{build_sl, complex_sizes, homology_hl, uce};
use stl_homology::rings::{dual, ground};
use stl_homology::ScalarDomain;

fn main() -> stl_homology::Result<()> {
    let f2 = ScalarDomain::PrimeField(2);
    let f3 = ScalarDomain::PrimeField(3);
    for (n, r) in [(3, ground(f3)), (4, ground(f2)), (3, dual(f2))] {
        let sl = build_sl(n, &r)?.algebra;
        let sizes = complex_sizes(&sl);
        let hl2 = homology_hl(&sl, 2)?;
        let u = uce(&sl)?;
        println!(
            "{}: dim {}, {} weight blocks (largest {} triples), HL2 = {}, uce dim {}",
            sl.name(),
            sl.dim(),
            sizes.blocks,
            sizes.max_block_triples,
            hl2.invariants,
            u.total.dim()
        );
    }
    Ok(())
}
