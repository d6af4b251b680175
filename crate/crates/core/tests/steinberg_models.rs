use stl_homology::linalg::SparseVec;
use stl_homology::rings::{dual, ground, mat2, ring_catalog};
use stl_homology::steinberg::{
    build_hat, build_stl, hl2_report, verify_calculus, CocycleTarget, Descriptor, ThetaMap,
};
use stl_homology::{Error, ScalarDomain};

const F2: ScalarDomain = ScalarDomain::PrimeField(2);
const F3: ScalarDomain = ScalarDomain::PrimeField(3);

#[test]
fn model_dimensions() {
    assert_eq!(build_stl(4, &ground(F2)).unwrap().dim(), 15);
    let m = build_stl(3, &dual(ScalarDomain::Rationals)).unwrap();
    assert_eq!(m.dim(), 17);
    assert_eq!(m.extension.kernel_invariants.dimension(), 1);
    let m = build_stl(5, &ground(F2)).unwrap();
    assert_eq!(m.n_rank, m.sl_hl2.invariants.dimension());
}

#[test]
fn model_rejects_bad_sizes() {
    assert!(matches!(
        build_stl(2, &ground(F2)),
        Err(Error::UnsupportedSize(2))
    ));
    assert!(matches!(
        build_stl(6, &ground(F2)),
        Err(Error::UnsupportedSize(6))
    ));
}

#[test]
fn small_t_does_not_depend_on_j() {
    let m = build_stl(4, &mat2(F2)).unwrap();
    let r = &m.ring;
    for a in 0..r.dim() {
        for b in 0..r.dim() {
            let (ra, rb) = (r.basis_vector(a), r.basis_vector(b));
            assert_eq!(m.small_t_via(1, &ra, &rb), m.small_t_via(2, &ra, &rb));
        }
    }
}

#[test]
fn calculus_on_noncommutative_ring() {
    let rep = verify_calculus(&build_stl(3, &mat2(F2)).unwrap());
    assert!(rep.passed, "{:?}", rep.first_failure());
    assert!(rep.checks.iter().all(|c| c.cases > 0));
}

#[test]
fn cocycle_values() {
    let one = F2.one();
    let w = CocycleTarget::new(4, &ground(F2), ThetaMap::build()).unwrap();
    let x = |i, j| Descriptor::X { i, j, lambda: 0 };
    assert_eq!(w.psi(&x(0, 1), &x(2, 3)), SparseVec::unit(0, one));
    assert!(w.psi(&x(0, 1), &x(0, 2)).is_zero());
    assert!(w
        .psi(&Descriptor::SmallT { lambda: 0, mu: 0 }, &x(2, 3))
        .is_zero());
    // R_3(F2) = 0, so U vanishes
    let u = CocycleTarget::new(3, &ground(F2), ThetaMap::build()).unwrap();
    assert!(u.is_empty());
}

#[test]
fn hat_models() {
    let h = build_hat(4, &ground(F2)).unwrap();
    assert_eq!(h.dim(), 21);
    assert!(h.algebra.center().rank() >= 6);
    let one = ground(F2).one();
    let v = h.bracket(&h.x_sharp(0, 1, &one), &h.x_sharp(0, 2, &one));
    assert!(v.is_zero());

    let h = build_hat(3, &ground(F3)).unwrap();
    assert_eq!(h.dim(), 14);
    let one = ground(F3).one();
    let v = h.bracket(&h.x_sharp(0, 1, &one), &h.x_sharp(0, 2, &one));
    assert_eq!(v, SparseVec::unit(0, F3.one()));
    assert!(matches!(
        build_hat(5, &ground(F2)),
        Err(Error::UnsupportedSize(5))
    ));
}

#[test]
fn reports_over_rings() {
    let rep = hl2_report(3, &ground(F2)).unwrap();
    assert_eq!(rep.predicted_invariants.dimension(), 0);
    assert!(rep.passed());
    let rep = hl2_report(4, &mat2(F2)).unwrap();
    assert!(rep.computed_invariants.is_zero());
    assert!(rep.passed());
    let z = ring_catalog("int", ScalarDomain::Integers).unwrap();
    let rep = hl2_report(3, &z).unwrap();
    assert_eq!(rep.computed, "Z/3 + Z/3 + Z/3 + Z/3 + Z/3 + Z/3");
    assert!(rep.tower_holds);
}
