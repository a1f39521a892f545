//! The nested subresultant family and its sign relation to the recursive
//! family.
//!
//! The level-`k` nested matrix is the coefficient matrix of the level-`(k-1)`
//! nested subresultant polynomial and its derivative, so its entries are
//! themselves determinants of the previous level. The two families agree up
//! to an explicitly computable sign:
//!
//! ```text
//! nested_(k,j) = R_(k-1)^b_(k,j) * r_(k,j) * recursive_(k,j)
//! ```
//!
//! with `b_(k,j) = 2 j_(k-1) - 2j - 1`,
//! `r_(k,j) = (-1)^((u_(k-1) - 1) * (1 + 2 + ... + (b_(k,j) - 1)))`,
//! `u_1 = m + n - 2 j_1`, `u_k = u_(k-1) * b_(k,j_k)`, and
//! `R_k = R_(k-1)^b_(k,j_k) * r_(k,j_k)` starting from `R_1 = 1`. All the
//! `R_k` are therefore signs, and the two families are equal up to sign.

use super::{coefficient_matrix, determinant_poly, recursive, validate_chain};
use crate::error::Error;
use crate::matrix::Mat;
use crate::poly::Poly;
use crate::prs::{recursive_prs, DivisionRule};
use crate::rat::Rat;
use crate::report::{self, VerifyReport, THEOREM_NESTED_RECURSIVE};
use crate::Result;

/// Scalar bookkeeping of the nested/recursive sign relation at `(k, j)`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SignConstants {
    /// Selection order `u_(k,j)`: the order of the square tau-selections of
    /// the level-`k` recursive matrix.
    pub u: u64,
    /// Block-column count `b_(k,j)`, always odd.
    pub b: u64,
    /// The per-level sign `r_(k,j)`.
    pub r: i8,
    /// Accumulated previous-level constant `R_(k-1)`, always a sign.
    pub r_prev: Rat,
    /// `R_(k-1)^b_(k,j) * r_(k,j)`.
    pub predicted_factor: Rat,
}

/// Computes the sign constants at `(k, j)` for `k >= 2`. Unlike the matrix
/// constructions this accepts the notional `j = j_(k-1) - 1` (where `b = 1`
/// and `r = +1`): the accumulated `R_k` is defined through exactly those
/// points whenever the chain drops by one.
pub fn sign_constants(
    m: usize,
    n: usize,
    chain: &[usize],
    k: usize,
    j: usize,
) -> Result<SignConstants> {
    super::validate_chain_shape(m, n, chain, k)?;
    if k < 2 {
        return Err(Error::BadChain("sign constants start at stage 2".into()));
    }
    if j + 1 > chain[k - 1] {
        return Err(Error::BadChain(format!(
            "j = {j} needs j <= j_(k-1) - 1 = {}",
            chain[k - 1] as i64 - 1
        )));
    }
    let sign_r = |u_prev: u64, b: u64| -> i8 {
        // (-1)^((u_prev - 1) * b(b-1)/2)
        let exp = (u_prev - 1) * (b * (b - 1) / 2);
        if exp.is_multiple_of(2) {
            1
        } else {
            -1
        }
    };
    let mut u_prev = (m + n - 2 * chain[1]) as u64;
    let mut r_cap = Rat::one(); // R_1
    for l in 2..k {
        let b_l = (2 * chain[l - 1] - 2 * chain[l] - 1) as u64;
        let r_l = sign_r(u_prev, b_l);
        r_cap = r_cap.pow(b_l as i64) * Rat::from_int(r_l as i64);
        u_prev *= b_l;
    }
    let b = (2 * chain[k - 1] - 2 * j - 1) as u64;
    let r = sign_r(u_prev, b);
    let predicted_factor = r_cap.pow(b as i64) * Rat::from_int(r as i64);
    Ok(SignConstants {
        u: u_prev * b,
        b,
        r,
        r_prev: r_cap,
        predicted_factor,
    })
}

/// The level-`l` nested subresultant polynomial along the chain, with the
/// vanishing-leading-coefficient guard that keeps nominal degrees exact.
fn chain_poly(f: &Poly, g: &Poly, n: usize, chain: &[usize], level: usize) -> Result<Poly> {
    let m = chain[0];
    let mut cur = determinant_poly(&coefficient_matrix(f, m, g, n, chain[1])?)?;
    for l in 2..=level {
        let nominal = chain[l - 1];
        if cur.coeff(nominal).is_zero() {
            return Err(Error::VanishingLeading { level: l - 1 });
        }
        let mat = coefficient_matrix(&cur, nominal, &cur.derivative(), nominal - 1, chain[l])?;
        cur = determinant_poly(&mat)?;
    }
    Ok(cur)
}

/// The `(k, j)`-th nested subresultant matrix.
pub fn nested_matrix(f: &Poly, g: &Poly, chain: &[usize], k: usize, j: usize) -> Result<Mat> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Err(Error::ZeroInput);
    };
    validate_chain(m, n, chain, k, j)?;
    if k == 1 {
        return coefficient_matrix(f, m, g, n, j);
    }
    let prev = chain_poly(f, g, n, chain, k - 1)?;
    let nominal = chain[k - 1];
    if prev.coeff(nominal).is_zero() {
        return Err(Error::VanishingLeading { level: k - 1 });
    }
    let mat = coefficient_matrix(&prev, nominal, &prev.derivative(), nominal - 1, j)?;
    if (mat.rows(), mat.cols()) != (2 * nominal - 1 - j, 2 * nominal - 1 - 2 * j) {
        return Err(Error::Internal(format!(
            "nested matrix is {}x{}, dimension formulas give {}x{}",
            mat.rows(),
            mat.cols(),
            2 * nominal - 1 - j,
            2 * nominal - 1 - 2 * j
        )));
    }
    Ok(mat)
}

/// The `(k, j)`-th nested subresultant polynomial.
pub fn nested_subresultant(
    f: &Poly,
    g: &Poly,
    chain: &[usize],
    k: usize,
    j: usize,
) -> Result<Poly> {
    determinant_poly(&nested_matrix(f, g, chain, k, j)?)
}

/// Checks the exact sign relation between the nested and recursive families
/// at `(k, j)`, computing both sides independently. Construction errors fold
/// into a skipped report.
pub fn verify_nested_recursive(f: &Poly, g: &Poly, k: usize, j: usize) -> VerifyReport {
    let run = || -> Result<VerifyReport> {
        let rprs = recursive_prs(f, g, DivisionRule::Subresultant)?;
        let chain = rprs.degree_chain();
        let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
        if k == 1 {
            // families coincide by definition
            return Ok(VerifyReport::pass(THEOREM_NESTED_RECURSIVE, k, j, Rat::one()));
        }
        let constants = sign_constants(m, n, &chain, k, j)?;
        let nested = nested_subresultant(f, g, &chain, k, j)?;
        let rec = recursive::recursive_subresultant(f, g, &chain, k, j)?;
        let factor = constants.predicted_factor;
        let witness = &nested - &rec.scale(&factor);
        if witness.is_zero() {
            Ok(VerifyReport::pass(THEOREM_NESTED_RECURSIVE, k, j, factor))
        } else {
            Ok(VerifyReport::fail(
                THEOREM_NESTED_RECURSIVE,
                k,
                j,
                factor,
                witness,
            ))
        }
    };
    run().unwrap_or_else(|e| {
        VerifyReport::skipped(THEOREM_NESTED_RECURSIVE, k, j, report::reason_code(&e))
    })
}
