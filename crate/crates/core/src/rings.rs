//! Small test algebras used throughout the examples and the campaign runner.

use crate::assoc::AssocAlgebra;
use crate::error::{Error, Result};
use crate::scalar::ScalarDomain;

/// Names accepted by [`ring_catalog`].
pub const CATALOG: [&str; 7] = [
    "ground", "dual", "trunc3", "group-c2", "upper2", "mat2", "int",
];

/// `K` itself.
pub fn ground(k: ScalarDomain) -> AssocAlgebra {
    AssocAlgebra::from_i64("ground", k, &["1"], &[(0, 0, 0, 1)], 0).expect("valid ring")
}

/// Dual numbers `K[x]/(x^2)`.
pub fn dual(k: ScalarDomain) -> AssocAlgebra {
    AssocAlgebra::from_i64(
        "dual",
        k,
        &["1", "x"],
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)],
        0,
    )
    .expect("valid ring")
}

/// `K[x]/(x^3)`.
pub fn trunc3(k: ScalarDomain) -> AssocAlgebra {
    AssocAlgebra::from_i64(
        "trunc3",
        k,
        &["1", "x", "x^2"],
        &[
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (1, 0, 1, 1),
            (0, 2, 2, 1),
            (2, 0, 2, 1),
            (1, 1, 2, 1),
        ],
        0,
    )
    .expect("valid ring")
}

/// The group algebra `K[C_2]` on `{1, g}`.
pub fn group_c2(k: ScalarDomain) -> AssocAlgebra {
    AssocAlgebra::from_i64(
        "group-c2",
        k,
        &["1", "g"],
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1)],
        0,
    )
    .expect("valid ring")
}

/// Upper triangular 2x2 matrices on `{1, e11, e12}`.
pub fn upper2(k: ScalarDomain) -> AssocAlgebra {
    AssocAlgebra::from_i64(
        "upper2",
        k,
        &["1", "e11", "e12"],
        &[
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (1, 0, 1, 1),
            (0, 2, 2, 1),
            (2, 0, 2, 1),
            (1, 1, 1, 1),
            (1, 2, 2, 1),
        ],
        0,
    )
    .expect("valid ring")
}

/// `M_2(K)` on `{1, e11, e12, e21}` (so `e22 = 1 - e11`).
pub fn mat2(k: ScalarDomain) -> AssocAlgebra {
    let mut s = vec![(0, 0, 0, 1)];
    for x in 1..4 {
        s.push((0, x, x, 1));
        s.push((x, 0, x, 1));
    }
    s.extend([
        (1, 1, 1, 1),
        (1, 2, 2, 1),
        (2, 3, 1, 1),
        (3, 1, 3, 1),
        (3, 2, 0, 1),
        (3, 2, 1, -1),
    ]);
    AssocAlgebra::from_i64("mat2", k, &["1", "e11", "e12", "e21"], &s, 0).expect("valid ring")
}

/// Looks up a catalog ring over the requested scalars.
pub fn ring_catalog(name: &str, scalar: ScalarDomain) -> Result<AssocAlgebra> {
    let r = match name {
        "ground" => ground(scalar),
        "dual" => dual(scalar),
        "trunc3" => trunc3(scalar),
        "group-c2" => group_c2(scalar),
        "upper2" => upper2(scalar),
        "mat2" => mat2(scalar),
        "int" => {
            if scalar != ScalarDomain::Integers {
                return Err(Error::IncompatibleScalar {
                    ring: name.to_string(),
                    scalar,
                });
            }
            let z = ground(scalar);
            AssocAlgebra::new("int", scalar, z.labels().to_vec(), &z.structure(), 0)?
        }
        _ => return Err(Error::UnknownRing(name.to_string())),
    };
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_entries_validate() {
        let f2 = ScalarDomain::PrimeField(2);
        for name in CATALOG.iter().filter(|n| **n != "int") {
            assert!(ring_catalog(name, f2).is_ok());
        }
        assert!(ring_catalog("int", ScalarDomain::Integers).is_ok());
        assert!(matches!(
            ring_catalog("int", f2),
            Err(Error::IncompatibleScalar { .. })
        ));
        assert!(matches!(
            ring_catalog("nope", f2),
            Err(Error::UnknownRing(_))
        ));
    }

    #[test]
    fn catalog_shapes() {
        let f2 = ScalarDomain::PrimeField(2);
        let m = mat2(f2);
        assert_eq!(m.dim(), 4);
        assert!(!m.is_commutative());
        assert_eq!(m.commutator_span().rank(), 3);
        assert_eq!(upper2(f2).commutator_span().rank(), 1);
        assert!(upper2(f2)
            .commutator_span()
            .contains(&upper2(f2).basis_vector(2)));
        assert_eq!(dual(ScalarDomain::Rationals).hochschild_h1().dimension(), 1);
        for name in CATALOG.iter().filter(|n| **n != "int") {
            let r = ring_catalog(name, f2).unwrap();
            assert!(r.ideal_im(1).is_full());
            assert_eq!(r.quotient_rm(1).len(), 0);
        }
    }
}
