//! Rank, kernel and invariant factors of a small integer matrix.

use stl_homology::linalg::ExactMatrix;
use stl_homology::ScalarDomain;

fn main() -> stl_homology::Result<()> {
    let rows = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
    let z = ExactMatrix::from_rows_i64(ScalarDomain::Integers, &rows);
    let snf = z.smith_normal_form()?;
    println!(
        "invariant factors over Z: {:?}",
        snf.diag.iter().map(|d| d.to_string()).collect::<Vec<_>>()
    );

    for k in [
        ScalarDomain::PrimeField(2),
        ScalarDomain::PrimeField(3),
        ScalarDomain::Rationals,
    ] {
        let m = ExactMatrix::from_rows_i64(k, &rows);
        let kernel = m.kernel_basis();
        println!(
            "over {k}: rank {}, kernel dimension {}",
            m.rank(),
            kernel.len()
        );
        for v in &kernel {
            assert!(m.mul_vec(v).is_zero());
        }
    }
    Ok(())
}
