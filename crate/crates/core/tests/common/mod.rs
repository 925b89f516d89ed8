//! Dense generalized-eigenvalue oracle on top of nalgebra's QR-based
//! symmetric eigensolver. This is an independent route (Cholesky reduction
//! plus full dense eigendecomposition) used to validate the tridiagonal
//! power iteration in the main crate.

use nalgebra::DMatrix;
use sobocheck::sharp::SymTridiag;

pub fn dense(t: &SymTridiag) -> DMatrix<f64> {
    let n = t.diag.len();
    DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            t.diag[i]
        } else if i + 1 == j {
            t.off[i]
        } else if j + 1 == i {
            t.off[j]
        } else {
            0.0
        }
    })
}

/// All eigenvalues of `A x = mu B x`, ascending.
pub fn dense_generalized_eigenvalues(a: &SymTridiag, b: &SymTridiag) -> Vec<f64> {
    let a = dense(a);
    let b = dense(b);
    let chol = b.cholesky().expect("denominator form must be positive definite");
    let l = chol.l();
    let y = l
        .solve_lower_triangular(&a)
        .expect("triangular solve");
    let c = l
        .solve_lower_triangular(&y.transpose())
        .expect("triangular solve")
        .transpose();
    let c = 0.5 * (&c + &c.transpose());
    let eig = nalgebra::SymmetricEigen::new(c);
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(f64::total_cmp);
    vals
}

pub fn dense_max_eigenvalue(a: &SymTridiag, b: &SymTridiag) -> f64 {
    *dense_generalized_eigenvalues(a, b)
        .last()
        .expect("non-empty spectrum")
}

pub fn dense_min_eigenvalue(a: &SymTridiag, b: &SymTridiag) -> f64 {
    dense_generalized_eigenvalues(a, b)[0]
}
