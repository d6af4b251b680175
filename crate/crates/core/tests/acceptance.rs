//! End-to-end acceptance suite: one line per criterion, nonzero exit if any fails.

use std::time::Instant;

use stl_homology::leibniz::homology_hl;
use stl_homology::rings::{dual, ground, mat2, ring_catalog, CATALOG};
use stl_homology::steinberg::{
    build_hat, build_stl, hl2_report, verify_calculus, verify_cocycle, verify_cocycle_corrupted,
    verify_sharp_relations,
};
use stl_homology::{AssocAlgebra, ScalarDomain};

type Outcome = Result<String, String>;

const F2: ScalarDomain = ScalarDomain::PrimeField(2);
const F3: ScalarDomain = ScalarDomain::PrimeField(3);
const Q: ScalarDomain = ScalarDomain::Rationals;
const Z: ScalarDomain = ScalarDomain::Integers;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: stl_homology::Error) -> String {
    e.to_string()
}

/// Every catalog ring over F2, F3 and Q, plus `int` over Z.
fn catalog() -> Vec<AssocAlgebra> {
    let mut out = Vec::new();
    for k in [F2, F3, Q] {
        for name in CATALOG.iter().filter(|n| **n != "int") {
            out.push(ring_catalog(name, k).unwrap());
        }
    }
    out.push(ring_catalog("int", Z).unwrap());
    out
}

fn hl2_dim(n: usize, r: &AssocAlgebra, expected: usize) -> Outcome {
    let rep = hl2_report(n, r).map_err(err)?;
    let got = rep.computed_invariants.dimension();
    ensure(
        got == expected && rep.computed_invariants.torsion().is_empty(),
        format!("HL2 = {}", rep.computed),
    )?;
    ensure(rep.passed(), format!("report disagrees: {rep:?}"))?;
    Ok(format!(
        "HL2(stl{n}({}@{})) = {}",
        r.name(),
        r.domain(),
        rep.computed
    ))
}

fn criterion_1() -> Outcome {
    hl2_dim(4, &ground(F2), 6)
}

fn criterion_2() -> Outcome {
    hl2_dim(3, &ground(F3), 6)
}

fn criterion_3() -> Outcome {
    let a = hl2_dim(3, &ground(F2), 0)?;
    let b = hl2_dim(4, &ground(F3), 0)?;
    Ok(format!("{a}; {b}"))
}

fn criterion_4() -> Outcome {
    let m = build_stl(5, &ground(F2)).map_err(err)?;
    ensure(
        m.n_rank == m.sl_hl2.invariants.dimension(),
        "dim N differs from HL2(sl5)",
    )?;
    hl2_dim(5, &ground(F2), 0)
}

fn criterion_5() -> Outcome {
    let z = ring_catalog("int", Z).map_err(err)?;
    let rep = hl2_report(4, &z).map_err(err)?;
    let factors: Vec<String> = rep
        .computed_invariants
        .factor_multiset()
        .iter()
        .map(|t| t.to_string())
        .collect();
    ensure(
        factors == vec!["2"; 6],
        format!("invariant factors {factors:?}"),
    )?;
    ensure(rep.passed(), format!("{rep:?}"))?;
    Ok(format!("HL2(stl4(Z)) = {}", rep.computed))
}

fn criterion_6() -> Outcome {
    let cases = [
        (4, ground(F2)),
        (4, dual(F2)),
        (4, mat2(F2)),
        (3, ground(F3)),
        (3, dual(F3)),
    ];
    let mut triples = 0;
    for (n, r) in &cases {
        let rep = verify_cocycle(*n, r).map_err(err)?;
        ensure(
            rep.passed,
            format!("n={n} {}@{}: {:?}", r.name(), r.domain(), rep.witness),
        )?;
        triples += rep.evaluated;
    }
    let bad = verify_cocycle_corrupted(&ground(F2)).map_err(err)?;
    ensure(
        !bad.passed && bad.witness.is_some(),
        "corrupted labels were not detected",
    )?;
    Ok(format!(
        "{triples} triples evaluated; control fails at {}",
        bad.witness.unwrap()
    ))
}

fn criterion_7() -> Outcome {
    let mut models = 0;
    for r in catalog() {
        for n in 3..=5 {
            let m = build_stl(n, &r).map_err(err)?;
            let rep = verify_calculus(&m);
            ensure(
                rep.passed,
                format!(
                    "{}@{} n={n}: {:?}",
                    r.name(),
                    r.domain(),
                    rep.first_failure()
                ),
            )?;
            models += 1;
        }
    }
    Ok(format!("{models} models"))
}

fn criterion_8() -> Outcome {
    let cases = [
        (ground(F2), 0),
        (ground(F3), 0),
        (mat2(F2), 0),
        (dual(Q), 1),
        (dual(F2), 2),
    ];
    for (r, expected) in &cases {
        ensure(
            r.hochschild_h1().dimension() == *expected,
            format!("HH1({}@{})", r.name(), r.domain()),
        )?;
        for n in 3..=5 {
            let m = build_stl(n, r).map_err(err)?;
            let k = &m.extension.kernel_invariants;
            ensure(
                k.dimension() == *expected,
                format!("n={n} {}@{}: kernel {k}", r.name(), r.domain()),
            )?;
        }
    }
    Ok("kernel dimensions 0, 0, 0, 1, 2 for n = 3, 4, 5".into())
}

fn criterion_9() -> Outcome {
    let mut cases = 0;
    for r in catalog() {
        let hh1 = r.hochschild_h1();
        for n in 3..=5 {
            let sl = stl_homology::leibniz::build_sl(n, &r).map_err(err)?.algebra;
            let hl2 = homology_hl(&sl, 2).map_err(err)?.invariants;
            let extra = match n {
                3 => r.quotient_rm(3).invariants().repeat(6),
                4 => r.quotient_rm(2).invariants().repeat(6),
                _ => stl_homology::linalg::SubquotientInvariants::zero(r.domain()),
            };
            let expected = hh1.sum(&extra);
            ensure(
                hl2 == expected,
                format!(
                    "{}@{} n={n}: HL2(sl) = {hl2}, expected {expected}",
                    r.name(),
                    r.domain()
                ),
            )?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (ring, n) pairs"))
}

fn criterion_10() -> Outcome {
    let mut models = 0;
    for r in catalog().into_iter().filter(|r| r.domain().is_field()) {
        for n in [3, 4] {
            let hat = build_hat(n, &r).map_err(err)?;
            let rep = verify_sharp_relations(&hat);
            ensure(
                rep.passed,
                format!("{}: {:?}", hat.algebra.name(), rep.first_failure()),
            )?;
            models += 1;
        }
    }
    Ok(format!("{models} extensions"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("HL2(stl4(F2)) has dimension 6", criterion_1),
        ("HL2(stl3(F3)) has dimension 6", criterion_2),
        ("HL2(stl3(F2)) = 0 and HL2(stl4(F3)) = 0", criterion_3),
        ("HL2(stl5(F2)) = 0", criterion_4),
        ("HL2(stl4(Z)) = (Z/2)^6", criterion_5),
        (
            "cocycle identity holds exhaustively; corrupted control fails",
            criterion_6,
        ),
        (
            "T/t calculus holds for every catalog ring and n",
            criterion_7,
        ),
        ("kernel of stl -> sl matches HH1", criterion_8),
        ("tower identity for HL2(sl)", criterion_9),
        ("sharp relations hold in the extensions", criterion_10),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2}: PASS  {name} [{detail}] ({secs:.2}s)",
                i + 1
            ),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2}: FAIL  {name} [{why}] ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
