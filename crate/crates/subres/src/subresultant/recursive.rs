//! The recursive subresultant family: block matrices over the coefficients
//! of the original inputs whose tau-selection determinants represent the
//! deeper stages of a staged remainder sequence.
//!
//! For a chain `j_0 = m, j_1, ..., j_t` the level-`k` matrix for target index
//! `j` expands the coefficient matrix of the stage-`k` pair column by column:
//! each of its `b = 2 j_(k-1) - 2j - 1` columns becomes a block column of
//! width `cols(prev)`, where `prev` is the level-`(k-1)` matrix at the
//! chain's own index `j_(k-1)`. Write `prev = [U-part; L-part]` with the
//! L-part the bottom `j_(k-1) + 1` rows. Then:
//!
//! * the upper block carries one `U-part` per block column, placed
//!   diagonally;
//! * the lower block carries, per block column, either the plain `L-part`
//!   (the first `j_(k-1) - j - 1` block columns, mirroring the coefficient
//!   columns of the stage polynomial itself) or the row-scaled `L-part` with
//!   its bottom row deleted (the remaining `j_(k-1) - j` block columns,
//!   mirroring the derivative), and each group starts at the top of the
//!   lower band with every following block shifted down one row.
//!
//! Row/column counts are `u_(k-1) * b + j` and `u_(k-1) * b` where
//! `u_(k-1)` is the column count of `prev`; the equality of tau-selection
//! determinants with the nested family (up to the sign constants of
//! [`super::nested`]) is the acceptance oracle that pins this layout.

use std::sync::OnceLock;

use super::{coefficient_matrix, determinant_poly, validate_chain};
use crate::error::Error;
use crate::matrix::Mat;
use crate::poly::Poly;
use crate::rat::Rat;
use crate::Result;

/// Placement of one lower-band block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LowerBlock {
    /// Scaled blocks are the derivative-column expansion: row `r` of the
    /// L-part multiplied by `j_(k-1) - r` and the bottom row deleted.
    pub scaled: bool,
    /// Row offset inside the lower band.
    pub top_row_offset: usize,
}

/// Resolved block layout for one `(k, j)` with `k >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecLayout {
    /// Number of diagonal U-part blocks; equals the block-column count.
    pub upper_diag_count: usize,
    /// Width of every block column (= columns of the previous level).
    pub block_width: usize,
    /// Rows of one U-part block.
    pub upper_block_rows: usize,
    /// Lower-band blocks, one per block column, in column order.
    pub lower_blocks: Vec<LowerBlock>,
    pub total_rows: usize,
    pub total_cols: usize,
}

impl RecLayout {
    /// Lays out level `k` from the previous level's column count and chain
    /// degree. `j_prev >= j + 1`; `j = j_prev - 1` is the degenerate
    /// drop-by-one extension with no plain lower blocks.
    pub fn resolve(prev_cols: usize, j_prev: usize, j: usize) -> Result<RecLayout> {
        if j + 1 > j_prev {
            return Err(Error::BadChain(format!(
                "layout needs j < j_prev, got j = {j}, j_prev = {j_prev}"
            )));
        }
        let b = 2 * j_prev - 2 * j - 1;
        let plain = j_prev - j - 1;
        let scaled = j_prev - j;
        let mut lower_blocks = Vec::with_capacity(b);
        for q in 0..plain {
            lower_blocks.push(LowerBlock {
                scaled: false,
                top_row_offset: q,
            });
        }
        for q in 0..scaled {
            lower_blocks.push(LowerBlock {
                scaled: true,
                top_row_offset: q,
            });
        }
        let upper_block_rows = prev_cols - 1;
        let lower_band_rows = 2 * j_prev - j - 1;
        let total_rows = b * upper_block_rows + lower_band_rows;
        let total_cols = b * prev_cols;
        debug_assert_eq!(total_rows, prev_cols * b + j);
        Ok(RecLayout {
            upper_diag_count: b,
            block_width: prev_cols,
            upper_block_rows,
            lower_blocks,
            total_rows,
            total_cols,
        })
    }
}

/// Row and column counts of the level-`k` matrix at index `j`:
/// `u * (2 j_(k-1) - 2j - 1) + j` rows and the same without `+ j` columns,
/// where `u = (m + n - 2 j_1) * prod_(l=2..k-1) (2 j_(l-1) - 2 j_l - 1)`.
/// At `k = 1` this is the classical `(m+n-j, m+n-2j)`.
pub fn recursive_dims(
    m: usize,
    n: usize,
    chain: &[usize],
    k: usize,
    j: usize,
) -> Result<(usize, usize)> {
    validate_chain(m, n, chain, k, j)?;
    if k == 1 {
        return Ok((m + n - j, m + n - 2 * j));
    }
    let mut u = m + n - 2 * chain[1];
    for l in 2..k {
        u *= 2 * chain[l - 1] - 2 * chain[l] - 1;
    }
    let b = 2 * chain[k - 1] - 2 * j - 1;
    Ok((u * b + j, u * b))
}

fn assemble(prev: &Mat, j_prev: usize, j: usize) -> Result<Mat> {
    let cols_prev = prev.cols();
    if prev.rows() != cols_prev + j_prev {
        return Err(Error::Internal(format!(
            "level matrix is {}x{}, expected row excess {j_prev}",
            prev.rows(),
            cols_prev
        )));
    }
    let layout = RecLayout::resolve(cols_prev, j_prev, j)?;
    let upper = prev.slice(0, cols_prev - 1, 0, cols_prev);
    let lower = prev.slice(cols_prev - 1, prev.rows(), 0, cols_prev);
    let band_top = layout.upper_diag_count * layout.upper_block_rows;
    let mut out = Mat::zeros(layout.total_rows, layout.total_cols);
    for (q, block) in layout.lower_blocks.iter().enumerate() {
        let col0 = q * layout.block_width;
        // diagonal U-part
        for r in 0..layout.upper_block_rows {
            for c in 0..layout.block_width {
                out[(q * layout.upper_block_rows + r, col0 + c)] = upper[(r, c)].clone();
            }
        }
        // lower block
        let block_rows = if block.scaled { j_prev } else { j_prev + 1 };
        for r in 0..block_rows {
            let scale = Rat::from_int((j_prev - r) as i64);
            for c in 0..layout.block_width {
                let value = if block.scaled {
                    &lower[(r, c)] * &scale
                } else {
                    lower[(r, c)].clone()
                };
                out[(band_top + block.top_row_offset + r, col0 + c)] = value;
            }
        }
    }
    Ok(out)
}

/// Builds the level-`l` matrices along the chain up to `upto`, each at the
/// chain's own index `chain[l]`.
fn chain_levels(f: &Poly, g: &Poly, n: usize, chain: &[usize], upto: usize) -> Result<Vec<Mat>> {
    let m = chain[0];
    let mut levels = Vec::with_capacity(upto);
    let mut cur = coefficient_matrix(f, m, g, n, chain[1])?;
    levels.push(cur.clone());
    for l in 2..=upto {
        cur = assemble(&cur, chain[l - 1], chain[l])?;
        levels.push(cur.clone());
    }
    Ok(levels)
}

/// The `(k, j)`-th recursive subresultant matrix. `chain` is the degree
/// chain `j_0, ..., j_t` of the staged remainder sequence of `(f, g)`.
pub fn recursive_matrix(f: &Poly, g: &Poly, chain: &[usize], k: usize, j: usize) -> Result<Mat> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Err(Error::ZeroInput);
    };
    validate_chain(m, n, chain, k, j)?;
    let mat = if k == 1 {
        coefficient_matrix(f, m, g, n, j)?
    } else {
        let prev = chain_levels(f, g, n, chain, k - 1)?
            .pop()
            .expect("at least one level");
        assemble(&prev, chain[k - 1], j)?
    };
    let want = recursive_dims(m, n, chain, k, j)?;
    if (mat.rows(), mat.cols()) != want {
        return Err(Error::Internal(format!(
            "recursive matrix is {}x{}, dimension formulas give {}x{}",
            mat.rows(),
            mat.cols(),
            want.0,
            want.1
        )));
    }
    Ok(mat)
}

/// Strict variant: depths `k >= 3` are refused unless the layout has passed
/// the cross-family check at depth 3 on the canonical chain family.
pub fn recursive_matrix_strict(
    f: &Poly,
    g: &Poly,
    chain: &[usize],
    k: usize,
    j: usize,
) -> Result<Mat> {
    if k >= 3 && !layout_validated_depth3() {
        return Err(Error::LayoutUnresolved(format!(
            "strict mode: depth k = {k} requires the depth-3 layout check to pass"
        )));
    }
    recursive_matrix(f, g, chain, k, j)
}

/// The `(k, j)`-th recursive subresultant polynomial: coefficient `tau` is
/// the determinant of the tau-selection of [`recursive_matrix`].
pub fn recursive_subresultant(
    f: &Poly,
    g: &Poly,
    chain: &[usize],
    k: usize,
    j: usize,
) -> Result<Poly> {
    determinant_poly(&recursive_matrix(f, g, chain, k, j)?)
}

/// Runs (once) the exact cross-family comparison at `(k, j) = (3, 0)` on the
/// canonical depth-3 family and caches the outcome.
pub fn layout_validated_depth3() -> bool {
    static VALIDATED: OnceLock<bool> = OnceLock::new();
    *VALIDATED.get_or_init(|| {
        let (f, g) = crate::verify::families::canonical_depth3();
        super::nested::verify_nested_recursive(&f, &g, 3, 0).is_pass()
    })
}
