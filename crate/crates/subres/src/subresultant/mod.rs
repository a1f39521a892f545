//! The three subresultant families over a staged remainder sequence.
//!
//! * [`classic`]: Sylvester matrices, `j`-th subresultant matrices and the
//!   classical subresultant polynomials (level 1 of everything else).
//! * [`recursive`]: the block-matrix family, one block column per coefficient
//!   column of the level matrix it expands.
//! * [`nested`]: the family whose matrix entries are themselves determinants
//!   of the previous level; equal to the recursive family up to sign.
//! * [`reduced`]: the flattened family obtained from the nested one by
//!   bordered determinants and row solves; its matrices never exceed
//!   `deg f + deg g` columns.
//!
//! All families share one sub-matrix convention: a "tau-selection" of a
//! matrix with `C` columns and `C + j` rows keeps the top `C - 1` rows plus
//! the `(rows - tau)`-th row (1-indexed), and the coefficient of `x^tau` in a
//! family polynomial is the determinant of that selection.

pub mod classic;
pub mod nested;
pub mod recursive;
pub mod reduced;

use crate::error::Error;
use crate::matrix::Mat;
use crate::poly::Poly;
use crate::rat::Rat;
use crate::Result;

/// Builds the coefficient matrix with `n2 - j` shifted columns of `p1` and
/// `n1 - j` shifted columns of `p2`, reading coefficients against the nominal
/// degrees `n1 >= n2`. Dimensions are `(n1 + n2 - j) x (n1 + n2 - 2j)`.
///
/// `j = n2` is accepted when `n1 > n2` (the `p1` column group is then empty);
/// this is the degenerate extension the staged constructions need when a
/// chain drops by exactly one.
pub(crate) fn coefficient_matrix(
    p1: &Poly,
    n1: usize,
    p2: &Poly,
    n2: usize,
    j: usize,
) -> Result<Mat> {
    if n1 < n2 {
        return Err(Error::DegenerateDegrees(format!(
            "coefficient matrix needs n1 >= n2, got {n1} < {n2}"
        )));
    }
    if j > n2 || (j == n2 && n1 == n2) {
        return Err(Error::IndexOutOfRange(format!(
            "j = {j} out of range for degrees ({n1}, {n2})"
        )));
    }
    if p1.degree_i64() > n1 as i64 || p2.degree_i64() > n2 as i64 {
        return Err(Error::DegenerateDegrees(
            "polynomial degree exceeds its nominal degree".into(),
        ));
    }
    let rows = n1 + n2 - j;
    let p1_cols = n2 - j;
    let p2_cols = n1 - j;
    let coeff_desc = |p: &Poly, nominal: usize, idx: usize| -> Rat { p.coeff(nominal - idx) };
    Ok(Mat::from_fn(rows, p1_cols + p2_cols, |r, c| {
        if c < p1_cols {
            if r >= c && r - c <= n1 {
                coeff_desc(p1, n1, r - c)
            } else {
                Rat::zero()
            }
        } else {
            let c = c - p1_cols;
            if r >= c && r - c <= n2 {
                coeff_desc(p2, n2, r - c)
            } else {
                Rat::zero()
            }
        }
    }))
}

/// The square selection described in the module docs: top `cols - 1` rows
/// plus the `(rows - tau)`-th row.
pub(crate) fn tau_selection(m: &Mat, tau: usize) -> Result<Mat> {
    let (rows, cols) = (m.rows(), m.cols());
    if rows < cols {
        return Err(Error::Internal(format!(
            "tau-selection needs rows >= cols, got {rows} < {cols}"
        )));
    }
    if tau > rows - cols {
        return Err(Error::IndexOutOfRange(format!(
            "tau = {tau} out of range, max {}",
            rows - cols
        )));
    }
    let mut keep: Vec<usize> = (0..cols - 1).collect();
    keep.push(rows - 1 - tau);
    Ok(m.select_rows(&keep))
}

/// Sums the tau-selection determinants of `m` into the polynomial
/// `sum_tau det(m_tau) x^tau` with nominal degree `j = rows - cols`.
pub(crate) fn determinant_poly(m: &Mat) -> Result<Poly> {
    let j = m.rows() - m.cols();
    let mut coeffs = vec![Rat::zero(); j + 1];
    for (tau, c) in coeffs.iter_mut().enumerate() {
        *c = tau_selection(m, tau)?.det()?;
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// Checks the chain shape `j_0 = m > j_1 > ... > j_t` with `j_1 <= n` and a
/// stage index `1 <= k <= t + 1`.
pub(crate) fn validate_chain_shape(m: usize, n: usize, chain: &[usize], k: usize) -> Result<()> {
    if chain.is_empty() || chain[0] != m {
        return Err(Error::BadChain(format!(
            "chain must start at deg f = {m}, got {chain:?}"
        )));
    }
    if m < n || n == 0 {
        return Err(Error::DegenerateDegrees(format!(
            "need deg f >= deg g >= 1, got ({m}, {n})"
        )));
    }
    if chain.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::BadChain(format!(
            "chain {chain:?} is not strictly decreasing"
        )));
    }
    if chain.len() > 1 && chain[1] > n {
        return Err(Error::BadChain(format!(
            "chain has j_1 = {} > deg g = {n}",
            chain[1]
        )));
    }
    if k == 0 {
        return Err(Error::BadChain("stage index k starts at 1".into()));
    }
    if k > chain.len() {
        return Err(Error::BadChain(format!(
            "stage k = {k} exceeds chain length {}",
            chain.len()
        )));
    }
    Ok(())
}

/// Shape check plus the target-index range `j <= j_(k-1) - 2` (at level 1
/// additionally `j < n`, the matrix's own requirement).
pub(crate) fn validate_chain(m: usize, n: usize, chain: &[usize], k: usize, j: usize) -> Result<()> {
    validate_chain_shape(m, n, chain, k)?;
    // At level 1 the matrix itself needs j < n (or j = n when m > n, which
    // the staged range j <= j_0 - 2 never requests); deeper levels need
    // j <= j_(k-1) - 2.
    let bound: i64 = if k == 1 {
        (m as i64 - 2).min(n as i64 - 1)
    } else {
        chain[k - 1] as i64 - 2
    };
    if j as i64 > bound {
        return Err(Error::BadChain(format!(
            "j = {j} out of range at stage {k} (max {bound})"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_selection_shapes() {
        let m = Mat::from_fn(5, 3, |r, c| Rat::from_int((r * 3 + c) as i64));
        let top = tau_selection(&m, 2).unwrap();
        assert_eq!((top.rows(), top.cols()), (3, 3));
        assert_eq!(top, m.slice(0, 3, 0, 3));
        let bottom = tau_selection(&m, 0).unwrap();
        assert_eq!(bottom.row(2), m.row(4));
        assert!(tau_selection(&m, 3).is_err());
    }
}
