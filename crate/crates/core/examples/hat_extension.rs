//! The extension of stl_4(F2) by W and of stl_3(F3) by U, with the sharp relations.

use stl_homology::rings::ground;
use stl_homology::steinberg::{build_hat, verify_sharp_relations};
use stl_homology::ScalarDomain;

fn main() -> stl_homology::Result<()> {
    for (n, p) in [(4, 2), (3, 3)] {
        let k = ScalarDomain::PrimeField(p);
        let hat = build_hat(n, &ground(k))?;
        let one = ground(k).one();
        let (a, b) = if n == 4 {
            ((0, 1), (2, 3))
        } else {
            ((0, 1), (0, 2))
        };
        let v = hat.bracket(&hat.x_sharp(a.0, a.1, &one), &hat.x_sharp(b.0, b.1, &one));
        let labels: Vec<&str> = v
            .iter()
            .map(|(i, _)| hat.algebra.labels()[*i].as_str())
            .collect();
        println!(
            "{}: dim {}, center dim {}",
            hat.algebra.name(),
            hat.dim(),
            hat.algebra.center().rank()
        );
        println!(
            "  [X{}{}(1), X{}{}(1)] = {:?}",
            a.0 + 1,
            a.1 + 1,
            b.0 + 1,
            b.1 + 1,
            labels
        );
        let rep = verify_sharp_relations(&hat);
        println!(
            "  sharp relations: {}",
            if rep.passed { "all hold" } else { "FAIL" }
        );
    }
    Ok(())
}
