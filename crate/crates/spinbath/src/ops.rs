//! Spin-1/2 operator constants and small matrix helpers.
//!
//! All two-qubit matrices use the product basis ordering
//! (|↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩) with qubit 1 as the slower index.

use ndarray::{array, Array1, Array2};
use num_complex::Complex64 as C64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

pub fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Pauli matrices.
pub fn sigma_x() -> Array2<C64> {
    array![[ZERO, ONE], [ONE, ZERO]]
}

pub fn sigma_y() -> Array2<C64> {
    array![[ZERO, -I], [I, ZERO]]
}

pub fn sigma_z() -> Array2<C64> {
    array![[ONE, ZERO], [ZERO, -ONE]]
}

/// Spin operator S^m = sigma_m / 2 for m in {x, y, z}.
pub fn spin(m: usize) -> Array2<C64> {
    let s = match m {
        0 => sigma_x(),
        1 => sigma_y(),
        2 => sigma_z(),
        _ => panic!("spin component index out of range"),
    };
    s.mapv(|v| v * 0.5)
}

pub fn eye(n: usize) -> Array2<C64> {
    Array2::eye(n)
}

pub fn kron(a: &Array2<C64>, b: &Array2<C64>) -> Array2<C64> {
    ndarray::linalg::kron(a, b)
}

/// S^m of qubit 1 in the two-qubit space.
pub fn spin1(m: usize) -> Array2<C64> {
    kron(&spin(m), &eye(2))
}

/// S^m of qubit 2 in the two-qubit space.
pub fn spin2(m: usize) -> Array2<C64> {
    kron(&eye(2), &spin(m))
}

/// Dagger (conjugate transpose).
pub fn dagger(a: &Array2<C64>) -> Array2<C64> {
    a.t().mapv(|v| v.conj())
}

/// u * rho * u†
pub fn conjugate(u: &Array2<C64>, rho: &Array2<C64>) -> Array2<C64> {
    u.dot(rho).dot(&dagger(u))
}

/// |psi⟩⟨psi|
pub fn projector(psi: &Array1<C64>) -> Array2<C64> {
    let n = psi.len();
    Array2::from_shape_fn((n, n), |(i, j)| psi[i] * psi[j].conj())
}

pub fn trace(a: &Array2<C64>) -> C64 {
    a.diag().sum()
}

/// Largest absolute deviation from Hermiticity.
pub fn hermiticity_defect(a: &Array2<C64>) -> f64 {
    let n = a.nrows();
    let mut d = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            d = d.max((a[[i, j]] - a[[j, i]].conj()).norm());
        }
    }
    d
}

/// Trace distance (1/2)·||a - b||_1 between two density matrices.
pub fn trace_distance(a: &Array2<C64>, b: &Array2<C64>) -> f64 {
    use ndarray_linalg::Eigh;
    let d = a - b;
    let (vals, _) = d.eigh(ndarray_linalg::UPLO::Lower).expect("eigh of Hermitian difference");
    0.5 * vals.iter().map(|v| v.abs()).sum::<f64>()
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(a: &Array2<C64>) -> Vec<f64> {
    use ndarray_linalg::Eigh;
    let (vals, _) = a.eigh(ndarray_linalg::UPLO::Lower).expect("eigh of Hermitian matrix");
    vals.to_vec()
}

/// Full eigensystem of a Hermitian matrix, eigenvalues ascending and
/// eigenvectors in the corresponding columns.
///
/// The input is copied into column-major storage first: `eigh` on a
/// row-major complex array hands LAPACK the transpose (= conjugate for a
/// Hermitian matrix), which leaves the eigenvalues intact but conjugates
/// every eigenvector. Anything that consumes eigenvectors must go through
/// this function.
pub fn hermitian_eigensystem(a: &Array2<C64>) -> (Vec<f64>, Array2<C64>) {
    use ndarray::ShapeBuilder;
    use ndarray_linalg::Eigh;
    let n = a.nrows();
    let mut af = Array2::<C64>::zeros((n, n).f());
    af.assign(a);
    let (vals, vecs) = af.eigh(ndarray_linalg::UPLO::Lower).expect("eigh of Hermitian matrix");
    (vals.to_vec(), vecs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn pauli_algebra() {
        let xy = sigma_x().dot(&sigma_y());
        // sigma_x sigma_y = i sigma_z
        let expect = sigma_z().mapv(|v| v * I);
        for (a, b) in xy.iter().zip(expect.iter()) {
            assert_abs_diff_eq!(a.re, b.re, epsilon = 1e-15);
            assert_abs_diff_eq!(a.im, b.im, epsilon = 1e-15);
        }
    }

    #[test]
    fn spin_squared_total() {
        // (S1 + S2)^2 on the singlet is 0, on |↑↑⟩ is 2 (s=1).
        let mut s_sq = Array2::<C64>::zeros((4, 4));
        for m in 0..3 {
            let tot = &spin1(m) + &spin2(m);
            s_sq = s_sq + tot.dot(&tot);
        }
        let singlet = Array1::from(vec![ZERO, c(1.0 / 2f64.sqrt()), c(-1.0 / 2f64.sqrt()), ZERO]);
        let v = s_sq.dot(&singlet);
        assert!(v.iter().map(|z| z.norm()).fold(0.0, f64::max) < 1e-14);
        assert_abs_diff_eq!(s_sq[[0, 0]].re, 2.0, epsilon = 1e-14);
    }

    #[test]
    fn eigensystem_reconstructs_complex_hermitian() {
        // regression: eigh on a row-major complex array silently returns
        // eigenvectors of the conjugate matrix
        let a = array![
            [c(1.0), C64::new(0.2, -0.7), ZERO],
            [C64::new(0.2, 0.7), c(-0.5), I],
            [ZERO, -I, c(0.3)],
        ];
        let (vals, vecs) = hermitian_eigensystem(&a);
        for (k, lam) in vals.iter().enumerate() {
            let v = vecs.column(k);
            let av = a.dot(&v);
            let resid: f64 =
                av.iter().zip(v.iter()).map(|(x, y)| (x - y * c(*lam)).norm()).sum();
            assert!(resid < 1e-12, "eigenpair {k} residual {resid:.3e}");
        }
    }

    #[test]
    fn trace_distance_of_orthogonal_pure_states() {
        let up = Array1::from(vec![ONE, ZERO]);
        let dn = Array1::from(vec![ZERO, ONE]);
        let d = trace_distance(&projector(&up), &projector(&dn));
        assert_abs_diff_eq!(d, 1.0, epsilon = 1e-12);
    }
}
