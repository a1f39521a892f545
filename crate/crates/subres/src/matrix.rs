//! Dense exact-rational matrices and the determinant machinery.
//!
//! Determinants are computed by fraction-free (Bareiss) condensation: every
//! intermediate entry is itself a minor of the input, so each division in the
//! elimination is exact over the integers. Rational inputs are pre-scaled row
//! by row to integers and the scaling is divided back out at the end.
//!
//! The same condensation identity is exposed directly as
//! [`sylvester_condense`]: entry `(i, j)` of the result is the determinant of
//! the `(k+1) x (k+1)` matrix bordering the leading `k x k` block with row
//! `i` and column `j`, and `det(a) * pivot^(n-k-1) = det(result)` where
//! `pivot` is the leading `k x k` minor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::rat::Rat;
use crate::Result;

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Mat {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// New matrix from a selection of row indices, in order.
    pub fn select_rows(&self, rows: &[usize]) -> Mat {
        Mat::from_rows(rows.iter().map(|&i| self.row(i).to_vec()).collect())
    }

    /// Submatrix from index ranges.
    pub fn slice(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Mat {
        Mat::from_fn(r1 - r0, c1 - c0, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    /// Largest bit-length over all numerators and denominators.
    pub fn max_entry_bits(&self) -> u64 {
        self.entries
            .iter()
            .map(|e| e.numer().bits().max(e.denom().bits()))
            .max()
            .unwrap_or(0)
    }

    fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    /// Exact determinant by fraction-free elimination. The determinant of
    /// the empty `0 x 0` matrix is 1.
    pub fn det(&self) -> Result<Rat> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(Rat::one());
        }
        // Row-wise rational-to-integer prescaling.
        let mut work: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        let mut scale = Rat::one();
        for i in 0..n {
            let mut lcm = BigInt::one();
            for e in self.row(i) {
                lcm = lcm.lcm(e.denom());
            }
            scale *= Rat::from_int(lcm.clone());
            work.push(
                self.row(i)
                    .iter()
                    .map(|e| e.numer() * (&lcm / e.denom()))
                    .collect(),
            );
        }
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            // First nonzero pivot in column k at or below row k.
            let Some(pivot_row) = (k..n).find(|&r| !work[r][k].is_zero()) else {
                return Ok(Rat::zero());
            };
            if pivot_row != k {
                work.swap(pivot_row, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &work[k][k] * &work[i][j] - &work[i][k] * &work[k][j];
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division must be exact");
                    work[i][j] = q;
                }
                work[i][k] = BigInt::zero();
            }
            prev = work[k][k].clone();
        }
        let det = Rat::from_int(work[n - 1][n - 1].clone() * BigInt::from(sign));
        Ok(det / scale)
    }

    /// Independent determinant oracle by minor expansion; order <= 8 only.
    pub fn det_cofactor(&self) -> Result<Rat> {
        const MAX: usize = 8;
        let n = self.require_square()?;
        if n > MAX {
            return Err(Error::TooLarge { order: n, max: MAX });
        }
        fn expand(m: &Mat) -> Rat {
            let n = m.rows();
            match n {
                0 => Rat::one(),
                1 => m[(0, 0)].clone(),
                _ => {
                    let mut acc = Rat::zero();
                    for j in 0..n {
                        if m[(0, j)].is_zero() {
                            continue;
                        }
                        let minor = Mat::from_fn(n - 1, n - 1, |r, c| {
                            m[(r + 1, if c < j { c } else { c + 1 })].clone()
                        });
                        let term = &m[(0, j)] * &expand(&minor);
                        if j % 2 == 0 {
                            acc += term;
                        } else {
                            acc -= term;
                        }
                    }
                    acc
                }
            }
        }
        Ok(expand(self))
    }

    /// Leading principal minor of the given order.
    pub fn leading_minor(&self, order: usize) -> Result<Rat> {
        self.slice(0, order, 0, order).det()
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl std::fmt::Display for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(Rat::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// One-step condensation: the `(n-k) x (n-k)` matrix of bordered minors of
/// the leading `k x k` block. Requires the leading principal minors of orders
/// `1..=k` to be nonzero, matching the pivots a sequential elimination would
/// use.
pub fn sylvester_condense(a: &Mat, k: usize) -> Result<Mat> {
    let n = if a.is_square() {
        a.rows()
    } else {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    };
    if k == 0 || k >= n {
        return Err(Error::IndexOutOfRange(format!(
            "condensation step k={k} must satisfy 1 <= k <= n-1 = {}",
            n - 1
        )));
    }
    for order in 1..=k {
        if a.leading_minor(order)?.is_zero() {
            return Err(Error::SingularPivot { order });
        }
    }
    let mut out = Mat::zeros(n - k, n - k);
    for i in 0..n - k {
        for j in 0..n - k {
            let bordered = Mat::from_fn(k + 1, k + 1, |r, c| {
                let row = if r < k { r } else { k + i };
                let col = if c < k { c } else { k + j };
                a[(row, col)].clone()
            });
            out[(i, j)] = bordered.det()?;
        }
    }
    Ok(out)
}

/// Reusable exact factorization of `U` for solving row systems `x * U = c`.
///
/// Internally an LU decomposition (with row swaps) of the transpose; building
/// it fails with `SingularU` exactly when `U` is singular.
#[derive(Debug, Clone)]
pub struct RowSolver {
    n: usize,
    // LU factors of U^T, packed in one matrix; perm maps pivot order.
    lu: Mat,
    perm: Vec<usize>,
}

impl RowSolver {
    pub fn new(u: &Mat) -> Result<Self> {
        Self::with_level(u, 0)
    }

    /// Same as [`RowSolver::new`] but tags `SingularU` with a level for
    /// diagnostics from the staged constructions.
    pub fn with_level(u: &Mat, level: usize) -> Result<Self> {
        let n = if u.is_square() {
            u.rows()
        } else {
            return Err(Error::NotSquare {
                rows: u.rows(),
                cols: u.cols(),
            });
        };
        let mut lu = u.transpose();
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let Some(pivot) = (k..n).find(|&r| !lu[(r, k)].is_zero()) else {
                return Err(Error::SingularU { level });
            };
            if pivot != k {
                perm.swap(pivot, k);
                for j in 0..n {
                    let tmp = lu[(pivot, j)].clone();
                    lu[(pivot, j)] = lu[(k, j)].clone();
                    lu[(k, j)] = tmp;
                }
            }
            let inv = lu[(k, k)].recip().expect("pivot nonzero");
            for i in k + 1..n {
                let factor = &lu[(i, k)] * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in k + 1..n {
                    let delta = &factor * &lu[(k, j)];
                    lu[(i, j)] = &lu[(i, j)] - &delta;
                }
                lu[(i, k)] = factor;
            }
        }
        Ok(RowSolver { n, lu, perm })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Solves `x * U = c` exactly.
    pub fn solve(&self, c: &[Rat]) -> Vec<Rat> {
        assert_eq!(c.len(), self.n, "right-hand side length mismatch");
        // U^T y = c^T with y = x^T; apply the recorded permutation first.
        let mut y: Vec<Rat> = self.perm.iter().map(|&i| c[i].clone()).collect();
        for k in 0..self.n {
            for i in k + 1..self.n {
                let delta = &self.lu[(i, k)] * &y[k];
                y[i] = &y[i] - &delta;
            }
        }
        for k in (0..self.n).rev() {
            for j in k + 1..self.n {
                let delta = &self.lu[(k, j)] * &y[j];
                y[k] = &y[k] - &delta;
            }
            y[k] = &y[k] / &self.lu[(k, k)];
        }
        y
    }
}

/// Solves the row system `x * u = c`; `SingularU` if `u` is singular.
pub fn solve_row_system(u: &Mat, c: &[Rat]) -> Result<Vec<Rat>> {
    if u.is_square() && c.len() != u.rows() {
        return Err(Error::IndexOutOfRange(format!(
            "right-hand side has length {}, expected {}",
            c.len(),
            u.rows()
        )));
    }
    Ok(RowSolver::new(u)?.solve(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_int_mat(rng: &mut StdRng, n: usize) -> Mat {
        Mat::from_fn(n, n, |_, _| Rat::from_int(rng.gen_range(-9i64..=9)))
    }

    #[test]
    fn det_examples() {
        assert_eq!(
            Mat::from_int_rows(&[&[2, 0], &[0, 3]]).det().unwrap(),
            Rat::from_int(6)
        );
        assert_eq!(Mat::identity(4).det().unwrap(), Rat::one());
        let m = Mat::from_int_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        assert_eq!(m.det().unwrap(), Rat::from_int(-3));
        assert_eq!(m.det_cofactor().unwrap(), Rat::from_int(-3));
        assert_eq!(Mat::zeros(0, 0).det().unwrap(), Rat::one());
    }

    #[test]
    fn det_errors() {
        assert!(matches!(
            Mat::zeros(2, 3).det(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
        assert!(matches!(
            Mat::identity(9).det_cofactor(),
            Err(Error::TooLarge { order: 9, max: 8 })
        ));
    }

    #[test]
    fn det_rational_entries() {
        let m = Mat::from_rows(vec![
            vec![Rat::new(1, 2), Rat::new(1, 3)],
            vec![Rat::new(1, 5), Rat::new(1, 7)],
        ]);
        // 1/14 - 1/15 = 1/210
        assert_eq!(m.det().unwrap(), Rat::new(1, 210));
        assert_eq!(m.det_cofactor().unwrap(), Rat::new(1, 210));
    }

    #[test]
    fn det_matches_cofactor_oracle() {
        let mut rng = StdRng::seed_from_u64(23);
        for trial in 0..200 {
            let n = 1 + trial % 6;
            let m = random_int_mat(&mut rng, n);
            assert_eq!(m.det().unwrap(), m.det_cofactor().unwrap());
        }
    }

    #[test]
    fn det_zero_for_equal_rows() {
        let mut rng = StdRng::seed_from_u64(29);
        for _ in 0..50 {
            let n = rng.gen_range(2..=6);
            let mut m = random_int_mat(&mut rng, n);
            let src = rng.gen_range(0..n);
            let mut dst = rng.gen_range(0..n);
            if dst == src {
                dst = (dst + 1) % n;
            }
            for j in 0..n {
                m[(dst, j)] = m[(src, j)].clone();
            }
            assert_eq!(m.det().unwrap(), Rat::zero());
        }
    }

    #[test]
    fn condense_examples() {
        let id2 = sylvester_condense(&Mat::identity(3), 1).unwrap();
        assert_eq!(id2, Mat::identity(2));

        let a = Mat::from_int_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        let c = sylvester_condense(&a, 1).unwrap();
        assert_eq!(c, Mat::from_int_rows(&[&[-3, -6], &[-6, -11]]));
        // det(a) * pivot^(n-k-1) = det(c): -3 * 1^1 = -3
        assert_eq!(c.det().unwrap(), Rat::from_int(-3));
    }

    #[test]
    fn condense_identity_random() {
        let mut rng = StdRng::seed_from_u64(31);
        let mut done = 0;
        while done < 100 {
            let n = rng.gen_range(3..=6);
            let a = random_int_mat(&mut rng, n);
            let k = rng.gen_range(1..=n - 2);
            let c = match sylvester_condense(&a, k) {
                Ok(c) => c,
                Err(Error::SingularPivot { .. }) => continue,
                Err(e) => panic!("unexpected error {e}"),
            };
            let pivot = a.leading_minor(k).unwrap();
            let lhs = a.det().unwrap() * pivot.pow((n - k - 1) as i64);
            assert_eq!(lhs, c.det().unwrap());
            done += 1;
        }
    }

    #[test]
    fn condense_singular_pivot() {
        let a = Mat::from_int_rows(&[&[0, 1, 2], &[1, 0, 1], &[2, 1, 0]]);
        assert!(matches!(
            sylvester_condense(&a, 1),
            Err(Error::SingularPivot { order: 1 })
        ));
    }

    #[test]
    fn solve_examples() {
        let x = solve_row_system(&Mat::identity(2), &[Rat::from_int(5), Rat::from_int(-2)])
            .unwrap();
        assert_eq!(x, vec![Rat::from_int(5), Rat::from_int(-2)]);

        let u = Mat::from_int_rows(&[&[1, 2], &[3, 4]]);
        let x = solve_row_system(&u, &[Rat::from_int(5), Rat::from_int(6)]).unwrap();
        assert_eq!(x, vec![Rat::from_int(-1), Rat::from_int(2)]);

        let singular = Mat::from_int_rows(&[&[1, 1], &[1, 1]]);
        assert!(matches!(
            solve_row_system(&singular, &[Rat::one(), Rat::zero()]),
            Err(Error::SingularU { level: 0 })
        ));
    }

    #[test]
    fn solve_round_trip_random() {
        let mut rng = StdRng::seed_from_u64(37);
        let mut done = 0;
        while done < 100 {
            let n = rng.gen_range(1..=6);
            let u = random_int_mat(&mut rng, n);
            if u.det().unwrap().is_zero() {
                continue;
            }
            let c: Vec<Rat> = (0..n)
                .map(|_| Rat::new(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4)))
                .collect();
            let x = solve_row_system(&u, &c).unwrap();
            for j in 0..n {
                let got: Rat = (0..n).map(|i| &x[i] * &u[(i, j)]).sum();
                assert_eq!(got, c[j]);
            }
            done += 1;
        }
    }
}
