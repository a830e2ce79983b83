// Link the system BLAS/LAPACK. On Debian-family systems `openblas` provides
// blas, cblas, and lapack symbols in one shared object.
fn main() {
    println!("cargo:rustc-link-lib=dylib=openblas");
}
