//! Sylvester matrices, `j`-th subresultant matrices and the classical
//! subresultant polynomials.
//!
//! For `deg f = m >= deg g = n > 0` the Sylvester matrix is `(m+n) x (m+n)`,
//! with `n` shifted columns of `f`'s coefficients (descending powers)
//! followed by `m` shifted columns of `g`'s. The `j`-th subresultant matrix
//! keeps the left `n - j` columns of `f` and the left `m - j` columns of `g`
//! and the top `m + n - j` rows; its tau-selections give the coefficients of
//! the `j`-th subresultant polynomial. `det` of the `j = 0` matrix is the
//! resultant.

use super::{coefficient_matrix, determinant_poly, tau_selection};
use crate::error::Error;
use crate::matrix::Mat;
use crate::poly::Poly;
use crate::Result;

fn degrees(f: &Poly, g: &Poly) -> Result<(usize, usize)> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Err(Error::ZeroInput);
    };
    if m < n || n == 0 {
        return Err(Error::DegenerateDegrees(format!(
            "need deg f >= deg g >= 1, got ({m}, {n})"
        )));
    }
    Ok((m, n))
}

/// The `(m+n) x (m+n)` Sylvester matrix of `f` and `g`.
pub fn sylvester_matrix(f: &Poly, g: &Poly) -> Result<Mat> {
    let (m, n) = degrees(f, g)?;
    coefficient_matrix(f, m, g, n, 0).inspect(|mat| {
        debug_assert_eq!((mat.rows(), mat.cols()), (m + n, m + n));
    })
}

/// The `j`-th subresultant matrix, `(m+n-j) x (m+n-2j)`, for `0 <= j < n`.
pub fn subres_matrix(f: &Poly, g: &Poly, j: usize) -> Result<Mat> {
    let (m, n) = degrees(f, g)?;
    if j >= n {
        return Err(Error::IndexOutOfRange(format!(
            "j = {j} must satisfy 0 <= j < n = {n}"
        )));
    }
    coefficient_matrix(f, m, g, n, j)
}

/// The square order-`(m+n-2j)` selection: top `m+n-2j-1` rows of the `j`-th
/// subresultant matrix plus its `(m+n-j-tau)`-th row, for `0 <= tau <= j`.
pub fn subres_matrix_tau(f: &Poly, g: &Poly, j: usize, tau: usize) -> Result<Mat> {
    if tau > j {
        return Err(Error::IndexOutOfRange(format!(
            "tau = {tau} must satisfy 0 <= tau <= j = {j}"
        )));
    }
    tau_selection(&subres_matrix(f, g, j)?, tau)
}

/// The `j`-th subresultant polynomial
/// `sum_tau det(subres_matrix_tau(f, g, j, tau)) x^tau`; nominal degree `j`,
/// true degree possibly lower. At `j = 0` this is the resultant.
pub fn subresultant_poly(f: &Poly, g: &Poly, j: usize) -> Result<Poly> {
    determinant_poly(&subres_matrix(f, g, j)?)
}
