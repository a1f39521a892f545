//! The reduced subresultant family: the flattened equivalent of the nested
//! one, built from bordered determinants over a shared block `U` and row
//! solves against it.
//!
//! At level `k >= 2` the previous level's matrix splits as `[U | v]` on top
//! (with `U` square) and `j_(k-1) + 1` bottom rows. Every entry of the
//! nested-style band matrix over the previous level's determinants is a
//! bordered determinant `|U v; b g|`; replacing the entries of each band
//! column `q >= 2` by `h = g_q + x * v` with `x * U = b_1 - b_q` makes all
//! border rows share `b_1`, and one condensation step (Sylvester's identity)
//! collapses the band determinant to `|U|^(J-1)` times a flat determinant.
//! The flat matrix is this family's matrix:
//!
//! ```text
//! [ U      v      v     ...  v    ]
//! [ b_(p,1) g_(p,1) h_(p,2) ... h_(p,J) ]     p = 1..I
//! ```
//!
//! with `I = (2 j_(k-1) - 2j - 1) + j` and `J = 2 j_(k-1) - 2j - 1`. Its
//! column count never exceeds `deg f + deg g`, which is the whole point.
//! Exact equality with the nested family holds with the constant
//!
//! ```text
//! nested_(k,j) = (R_(k-1) * B_(k-1))^J_(k,j) * B_(k,j) * reduced_(k,j)
//! ```
//!
//! where `B_(k,j) = |U^(k)|^(J_(k,j)-1)`, `B_1 = 1`, `B_k = B_(k,j_k)`,
//! `R_1 = 1` and `R_k = (R_(k-1) * B_(k-1))^J_(k,j_k)`. The construction is
//! only defined while every `U^(k)` is nonsingular; a singular `U` is
//! reported as such and never worked around.

use super::{coefficient_matrix, determinant_poly, nested, tau_selection, validate_chain};
use crate::error::Error;
use crate::matrix::{Mat, RowSolver};
use crate::poly::Poly;
use crate::prs::{recursive_prs, DivisionRule};
use crate::rat::Rat;
use crate::report::{self, VerifyReport, CHECK_PROPORTIONALITY, THEOREM_NESTED_REDUCED};
use crate::Result;

/// Row and column counts from the closed formulas:
/// `((m + n - 2(k-1) - 2j) + j, m + n - 2(k-1) - 2j)`.
pub fn reduced_dims(m: usize, n: usize, k: usize, j: usize) -> Result<(usize, usize)> {
    let cols = m as i64 + n as i64 - 2 * (k as i64 - 1) - 2 * j as i64;
    if k == 0 || cols < 1 {
        return Err(Error::IndexOutOfRange(format!(
            "no reduced matrix at (k, j) = ({k}, {j}) for degrees ({m}, {n})"
        )));
    }
    Ok(((cols + j as i64) as usize, cols as usize))
}

/// Per-level working data shared by every `(p, q)` solve at one level.
struct LevelCtx {
    /// Order of `U`.
    s: usize,
    u: Mat,
    v: Vec<Rat>,
    u_det: Rat,
    /// Bottom rows split as (left part, last entry), indexed by sigma.
    ell: Vec<(Vec<Rat>, Rat)>,
    /// `y_sigma`: solution of `y * U = ell_sigma` left part.
    ys: Vec<Vec<Rat>>,
    /// Determinants of the tau-selections of the previous level.
    a: Vec<Rat>,
    j_prev: usize,
}

impl LevelCtx {
    fn build(prev: &Mat, j_prev: usize, level: usize) -> Result<LevelCtx> {
        let cols = prev.cols();
        if prev.rows() != cols + j_prev {
            return Err(Error::Internal(format!(
                "level matrix is {}x{}, expected row excess {j_prev}",
                prev.rows(),
                cols
            )));
        }
        let s = cols - 1;
        let u = prev.slice(0, s, 0, s);
        let v: Vec<Rat> = (0..s).map(|i| prev[(i, s)].clone()).collect();
        let solver = RowSolver::with_level(&u, level)?;
        let u_det = u.det()?;
        let mut ell = Vec::with_capacity(j_prev + 1);
        let mut ys = Vec::with_capacity(j_prev + 1);
        let mut a = Vec::with_capacity(j_prev + 1);
        for sigma in 0..=j_prev {
            let row = prev.row(s + j_prev - sigma);
            let b_part = row[..s].to_vec();
            let g_part = row[s].clone();
            ys.push(solver.solve(&b_part));
            a.push(tau_selection(prev, sigma)?.det()?);
            ell.push((b_part, g_part));
        }
        Ok(LevelCtx {
            s,
            u,
            v,
            u_det,
            ell,
            ys,
            a,
            j_prev,
        })
    }

    /// Band entry of the determinant-coefficient matrix at 0-based `(p, q)`:
    /// `Some((sigma, scale))` means `scale * A_sigma`, `None` a structural
    /// zero. The first `j_prev - 1 - j` columns carry the coefficients
    /// themselves, the remaining `j_prev - j` their derivative scalings.
    fn band_entry(&self, j: usize, p: usize, q: usize) -> Option<(usize, u64)> {
        let plain_cols = self.j_prev - 1 - j;
        if q < plain_cols {
            let shift = p.checked_sub(q)?;
            if shift > self.j_prev {
                return None;
            }
            Some((self.j_prev - shift, 1))
        } else {
            let q = q - plain_cols;
            let shift = p.checked_sub(q)?;
            if shift > self.j_prev - 1 {
                return None;
            }
            let sigma = self.j_prev - shift;
            Some((sigma, sigma as u64))
        }
    }

    /// Assembles the reduced matrix for a target index `j <= j_prev - 1`.
    fn assemble(&self, j: usize) -> Result<Mat> {
        if j + 1 > self.j_prev {
            return Err(Error::BadChain(format!(
                "target j = {j} needs j < j_prev = {}",
                self.j_prev
            )));
        }
        let big_j = 2 * self.j_prev - 2 * j - 1;
        let big_i = big_j + j;
        let s = self.s;
        let mut out = Mat::zeros(s + big_i, s + big_j);
        for r in 0..s {
            for c in 0..s {
                out[(r, c)] = self.u[(r, c)].clone();
            }
            for q in 0..big_j {
                out[(r, s + q)] = self.v[r].clone();
            }
        }
        for p in 0..big_i {
            let first = self.band_entry(j, p, 0);
            if let Some((sigma, scale)) = first {
                let scale = Rat::from_int(scale as i64);
                for c in 0..s {
                    out[(s + p, c)] = &self.ell[sigma].0[c] * &scale;
                }
                out[(s + p, s)] = &self.ell[sigma].1 * &scale;
            }
            for q in 1..big_j {
                // x satisfies x * U = b_(p,1) - b_(p,q); by linearity it is
                // the scaled difference of the per-row solves.
                let entry = self.band_entry(j, p, q);
                let mut h = Rat::zero();
                for c in 0..s {
                    let mut x_c = Rat::zero();
                    if let Some((s1, c1)) = first {
                        x_c += Rat::from_int(c1 as i64) * &self.ys[s1][c];
                    }
                    if let Some((sq, cq)) = entry {
                        x_c -= Rat::from_int(cq as i64) * &self.ys[sq][c];
                    }
                    h += x_c * &self.v[c];
                }
                if let Some((sq, cq)) = entry {
                    h += Rat::from_int(cq as i64) * &self.ell[sq].1;
                }
                out[(s + p, s + q)] = h;
            }
        }
        Ok(out)
    }
}

/// Builds the chain of reduced level matrices `l = 1..=upto`, each at the
/// chain's own index, returning the matrices and the `|U|` determinants
/// (index `l - 2` for level `l >= 2`).
fn chain_levels(
    f: &Poly,
    g: &Poly,
    n: usize,
    chain: &[usize],
    upto: usize,
) -> Result<(Vec<Mat>, Vec<Rat>)> {
    let m = chain[0];
    let mut mats = vec![coefficient_matrix(f, m, g, n, chain[1])?];
    let mut u_dets = Vec::new();
    for l in 2..=upto {
        let ctx = LevelCtx::build(mats.last().unwrap(), chain[l - 1], l)?;
        check_u_order(m, n, l, chain[l - 1], ctx.s)?;
        u_dets.push(ctx.u_det.clone());
        mats.push(ctx.assemble(chain[l])?);
    }
    Ok((mats, u_dets))
}

/// The shared-block order invariant: `order(U^(k)) = m+n-2(k-2)-2j_(k-1)-1`.
fn check_u_order(m: usize, n: usize, level: usize, j_prev: usize, s: usize) -> Result<()> {
    let want = m as i64 + n as i64 - 2 * (level as i64 - 2) - 2 * j_prev as i64 - 1;
    if s as i64 != want {
        return Err(Error::Internal(format!(
            "U block at level {level} has order {s}, formulas give {want}"
        )));
    }
    Ok(())
}

/// The `(k, j)`-th reduced subresultant matrix.
pub fn reduced_matrix(f: &Poly, g: &Poly, chain: &[usize], k: usize, j: usize) -> Result<Mat> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Err(Error::ZeroInput);
    };
    validate_chain(m, n, chain, k, j)?;
    let mat = if k == 1 {
        coefficient_matrix(f, m, g, n, j)?
    } else {
        let (mats, _) = chain_levels(f, g, n, chain, k - 1)?;
        let ctx = LevelCtx::build(mats.last().unwrap(), chain[k - 1], k)?;
        check_u_order(m, n, k, chain[k - 1], ctx.s)?;
        ctx.assemble(j)?
    };
    let want = reduced_dims(m, n, k, j)?;
    if (mat.rows(), mat.cols()) != want {
        return Err(Error::Internal(format!(
            "reduced matrix is {}x{}, dimension formulas give {}x{}",
            mat.rows(),
            mat.cols(),
            want.0,
            want.1
        )));
    }
    Ok(mat)
}

/// The `(k, j)`-th reduced subresultant polynomial.
pub fn reduced_subresultant(
    f: &Poly,
    g: &Poly,
    chain: &[usize],
    k: usize,
    j: usize,
) -> Result<Poly> {
    determinant_poly(&reduced_matrix(f, g, chain, k, j)?)
}

/// One recorded border row: the left part and the corner entry.
pub type BorderRow = (Vec<Rat>, Rat);

/// One level's working data at `(k, j)`, `k >= 2`.
#[derive(Debug, Clone)]
pub struct ReducedLevel {
    /// The shared square block `U^(k)`.
    pub u: Mat,
    /// The repeated column `v^(k)`.
    pub v: Vec<Rat>,
    /// Determinants of the previous level's tau-selections, index = tau.
    pub a_coeffs: Vec<Rat>,
    /// The band matrix of those determinants (entries of the nested-style
    /// determinant before flattening).
    pub h: Mat,
    /// Border rows `(b_(p,q), g_(p,q))` per band position; `None` marks the
    /// structural zeros, which carry zero rows by convention.
    pub borders: Vec<Vec<Option<BorderRow>>>,
}

/// Materializes the level data at `(k, j)` for inspection and tests.
pub fn reduced_level(
    f: &Poly,
    g: &Poly,
    chain: &[usize],
    k: usize,
    j: usize,
) -> Result<ReducedLevel> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Err(Error::ZeroInput);
    };
    validate_chain(m, n, chain, k, j)?;
    if k < 2 {
        return Err(Error::BadChain("level data starts at stage 2".into()));
    }
    let (mats, _) = chain_levels(f, g, n, chain, k - 1)?;
    let ctx = LevelCtx::build(mats.last().unwrap(), chain[k - 1], k)?;
    let big_j = 2 * chain[k - 1] - 2 * j - 1;
    let big_i = big_j + j;
    let h = Mat::from_fn(big_i, big_j, |p, q| match ctx.band_entry(j, p, q) {
        Some((sigma, scale)) => Rat::from_int(scale as i64) * &ctx.a[sigma],
        None => Rat::zero(),
    });
    let borders = (0..big_i)
        .map(|p| {
            (0..big_j)
                .map(|q| {
                    ctx.band_entry(j, p, q).map(|(sigma, scale)| {
                        let scale = Rat::from_int(scale as i64);
                        let b = ctx.ell[sigma].0.iter().map(|x| x * &scale).collect();
                        (b, &ctx.ell[sigma].1 * &scale)
                    })
                })
                .collect()
        })
        .collect();
    Ok(ReducedLevel {
        u: ctx.u,
        v: ctx.v,
        a_coeffs: ctx.a,
        h,
        borders,
    })
}

/// Scalar bookkeeping of the nested/reduced relation at `(k, j)`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ReductionConstants {
    /// Band width `J_(k,j) = 2 j_(k-1) - 2j - 1`.
    pub j_kj: u64,
    /// Border-row count `I_(k,j) = J_(k,j) + j`.
    pub i_kj: u64,
    /// `B_(k,j) = |U^(k)|^(J_(k,j)-1)`.
    pub b_hat: Rat,
    /// Accumulated `R_(k-1)`.
    pub r_hat_prev: Rat,
    /// Accumulated `B_(k-1)` (at the chain index `j_(k-1)`).
    pub b_hat_prev: Rat,
    /// `(R_(k-1) * B_(k-1))^J_(k,j) * B_(k,j)`.
    pub predicted_factor: Rat,
}

/// Computes the reduction constants at `(k, j)` for `k >= 2`; constructs all
/// levels up to `k`, so it fails with `SingularU` exactly when the family
/// itself is undefined.
pub fn reduction_constants(
    f: &Poly,
    g: &Poly,
    chain: &[usize],
    k: usize,
    j: usize,
) -> Result<ReductionConstants> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Err(Error::ZeroInput);
    };
    validate_chain(m, n, chain, k, j)?;
    if k < 2 {
        return Err(Error::BadChain("reduction constants start at stage 2".into()));
    }
    let (_, u_dets) = chain_levels(f, g, n, chain, k)?;
    let j_at = |l: usize| (2 * chain[l - 1] - 2 * chain[l] - 1) as i64;
    // R_1 = 1, B_1 = 1; B_l = |U^(l)|^(J_(l,j_l)-1), R_l = (R_(l-1) B_(l-1))^J_(l,j_l)
    let mut r_prev = Rat::one();
    let mut b_prev = Rat::one();
    for l in 2..k {
        let j_l = j_at(l);
        let next_r = (&r_prev * &b_prev).pow(j_l);
        b_prev = u_dets[l - 2].pow(j_l - 1);
        r_prev = next_r;
    }
    let j_kj = (2 * chain[k - 1] - 2 * j - 1) as u64;
    let b_hat = u_dets[k - 2].pow(j_kj as i64 - 1);
    let predicted_factor = (&r_prev * &b_prev).pow(j_kj as i64) * &b_hat;
    Ok(ReductionConstants {
        j_kj,
        i_kj: j_kj + j as u64,
        b_hat,
        r_hat_prev: r_prev,
        b_hat_prev: b_prev,
        predicted_factor,
    })
}

/// Checks the exact relation between the nested and reduced families at
/// `(k, j)`; singular `U` blocks and other construction failures fold into a
/// skipped report with a reason code.
pub fn verify_nested_reduced(f: &Poly, g: &Poly, k: usize, j: usize) -> VerifyReport {
    let run = || -> Result<VerifyReport> {
        if k == 1 {
            return Ok(VerifyReport::pass(THEOREM_NESTED_REDUCED, k, j, Rat::one()));
        }
        let rprs = recursive_prs(f, g, DivisionRule::Subresultant)?;
        let chain = rprs.degree_chain();
        let constants = reduction_constants(f, g, &chain, k, j)?;
        let nested = nested::nested_subresultant(f, g, &chain, k, j)?;
        let reduced = reduced_subresultant(f, g, &chain, k, j)?;
        let factor = constants.predicted_factor;
        let witness = &nested - &reduced.scale(&factor);
        if witness.is_zero() {
            Ok(VerifyReport::pass(THEOREM_NESTED_REDUCED, k, j, factor))
        } else {
            Ok(VerifyReport::fail(
                THEOREM_NESTED_REDUCED,
                k,
                j,
                factor,
                witness,
            ))
        }
    };
    run().unwrap_or_else(|e| {
        VerifyReport::skipped(THEOREM_NESTED_REDUCED, k, j, report::reason_code(&e))
    })
}

/// Checks that the reduced family represents the staged remainder sequence:
/// wherever a stage element's degree `j` is in range, the `(k, j)` reduced
/// subresultant is a nonzero rational multiple of that element. Defective
/// stages that fail the comparison are skipped with `DEFECTIVE_PRS`; the
/// reported factor of a pass is the observed multiple.
pub fn proportionality_check(f: &Poly, g: &Poly) -> Vec<VerifyReport> {
    let rprs = match recursive_prs(f, g, DivisionRule::Subresultant) {
        Ok(r) => r,
        Err(e) => {
            return vec![VerifyReport::skipped(
                CHECK_PROPORTIONALITY,
                0,
                0,
                report::reason_code(&e),
            )]
        }
    };
    let chain = rprs.degree_chain();
    let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
    let mut reports = Vec::new();
    for (stage_idx, stage) in rprs.stages.iter().enumerate() {
        let k = stage_idx + 1;
        let bound: i64 = if k == 1 {
            (m as i64 - 2).min(n as i64 - 1)
        } else {
            chain[k - 1] as i64 - 2
        };
        let gaps = stage.gaps();
        for (elem_idx, elem) in stage.polys.iter().enumerate().skip(2) {
            let j = elem.degree().expect("elements nonzero");
            if j as i64 > bound {
                continue;
            }
            // the sequence is normal at this element when the incoming
            // degree drop is exactly one
            let normal_here = gaps[elem_idx - 1] == 1;
            match reduced_subresultant(f, g, &chain, k, j) {
                Ok(s) => {
                    let ratio = &s.coeff(j) / &elem.leading();
                    if !ratio.is_zero() && s == elem.scale(&ratio) {
                        reports.push(VerifyReport::pass(CHECK_PROPORTIONALITY, k, j, ratio));
                    } else if normal_here {
                        reports.push(VerifyReport::fail(
                            CHECK_PROPORTIONALITY,
                            k,
                            j,
                            ratio,
                            &s - &elem.scale(&Rat::one()),
                        ));
                    } else {
                        reports.push(VerifyReport::skipped(
                            CHECK_PROPORTIONALITY,
                            k,
                            j,
                            report::DEFECTIVE_PRS,
                        ));
                    }
                }
                Err(e) => reports.push(VerifyReport::skipped(
                    CHECK_PROPORTIONALITY,
                    k,
                    j,
                    report::reason_code(&e),
                )),
            }
        }
    }
    reports
}
