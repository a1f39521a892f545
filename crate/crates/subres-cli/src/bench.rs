//! Size and timing records over canonical gcd-chain families.
//!
//! The interesting assertion is structural and exact: reduced matrices stay
//! within `m + n` columns at every `(k, j)` while recursive matrices grow
//! with the product of the chain gaps. Timings are reported for context but
//! never asserted; wall-clock noise at desk scale says nothing about
//! asymptotics.

use std::time::Instant;

use serde::Serialize;
use subres::prs::{recursive_prs, DivisionRule};
use subres::subresultant::{recursive, reduced};
use subres::verify::families;
use subres::{Error, Poly};

#[derive(Serialize)]
pub struct BenchRecord {
    pub k: usize,
    pub j: usize,
    pub recursive_rows: usize,
    pub recursive_cols: usize,
    pub reduced_rows: usize,
    pub reduced_cols: usize,
    /// Build + full determinant-polynomial time for the recursive family.
    pub recursive_ms: f64,
    /// Same for the reduced family; singular `U` levels are reported as -1.
    pub reduced_ms: f64,
    /// Largest numerator/denominator bit length over both computed
    /// polynomials' coefficients.
    pub max_coeff_bits: u64,
}

#[derive(Serialize)]
pub struct BenchTable {
    pub family: String,
    pub m: usize,
    pub n: usize,
    pub chain: Vec<usize>,
    pub records: Vec<BenchRecord>,
}

fn coeff_bits(p: &Poly) -> u64 {
    p.coeffs()
        .iter()
        .map(|c| c.numer().bits().max(c.denom().bits()))
        .max()
        .unwrap_or(0)
}

pub fn run_gcd_chain(depth: usize) -> Result<BenchTable, Error> {
    let (f, g) = match depth {
        2 => families::canonical_depth2(),
        3 => families::canonical_depth3(),
        other => {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("gcd-chain family supports depth 2 or 3, got {other}"),
            })
        }
    };
    let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
    let chain = recursive_prs(&f, &g, DivisionRule::Subresultant)?.degree_chain();
    let t = chain.len() - 1;
    let mut records = Vec::new();
    for k in 2..=t {
        for j in (0..=(chain[k - 1] as i64 - 2)).rev() {
            let j = j as usize;
            let rec_dims = recursive::recursive_dims(m, n, &chain, k, j)?;
            let red_dims = reduced::reduced_dims(m, n, k, j)?;

            let start = Instant::now();
            let rec_mat = recursive::recursive_matrix(&f, &g, &chain, k, j)?;
            let rec_poly = recursive::recursive_subresultant(&f, &g, &chain, k, j)?;
            let recursive_ms = start.elapsed().as_secs_f64() * 1e3;
            if (rec_mat.rows(), rec_mat.cols()) != rec_dims {
                return Err(Error::Internal(format!(
                    "recursive dimensions at ({k},{j}) disagree with the formulas"
                )));
            }

            let start = Instant::now();
            let (red_dims_built, red_poly, reduced_ms) =
                match reduced::reduced_matrix(&f, &g, &chain, k, j) {
                    Ok(mat) => {
                        let poly = reduced::reduced_subresultant(&f, &g, &chain, k, j)?;
                        let ms = start.elapsed().as_secs_f64() * 1e3;
                        ((mat.rows(), mat.cols()), Some(poly), ms)
                    }
                    Err(Error::SingularU { .. }) => (red_dims, None, -1.0),
                    Err(e) => return Err(e),
                };
            if red_dims_built != red_dims {
                return Err(Error::Internal(format!(
                    "reduced dimensions at ({k},{j}) disagree with the formulas"
                )));
            }
            if red_dims.1 > m + n {
                return Err(Error::Internal(format!(
                    "reduced matrix at ({k},{j}) exceeds {} columns",
                    m + n
                )));
            }

            let bits = coeff_bits(&rec_poly).max(red_poly.as_ref().map_or(0, coeff_bits));
            records.push(BenchRecord {
                k,
                j,
                recursive_rows: rec_dims.0,
                recursive_cols: rec_dims.1,
                reduced_rows: red_dims.0,
                reduced_cols: red_dims.1,
                recursive_ms,
                reduced_ms,
                max_coeff_bits: bits,
            });
        }
    }
    Ok(BenchTable {
        family: "gcd-chain".into(),
        m,
        n,
        chain,
        records,
    })
}
