//! Square-free decomposition driven by the staged remainder sequence.
//!
//! For `p = c * prod q_i^i` with the `q_i` squarefree and pairwise coprime,
//! the staged sequence of `(p, p')` computes the gcd tower
//! `G_k = gcd(G_(k-1), G_(k-1)') = prod_(i>k) q_i^(i-k)`; the factors fall
//! out of two exact divisions per stage. The decomposition is reported with
//! primitive positive-leading-coefficient factors and the constant that
//! makes the reconstruction exact.

use serde::Serialize;

use crate::error::Error;
use crate::poly::Poly;
use crate::prs::{recursive_prs, DivisionRule};
use crate::rat::Rat;
use crate::Result;

/// One squarefree factor with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareFreeFactor {
    pub factor: Poly,
    pub multiplicity: usize,
}

/// `input = constant * prod factor^multiplicity`, factors primitive with
/// positive leading coefficients, pairwise coprime and squarefree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareFreeDecomposition {
    pub constant: Rat,
    pub factors: Vec<SquareFreeFactor>,
}

impl SquareFreeDecomposition {
    /// Multiplies the decomposition back out.
    pub fn reconstruct(&self) -> Poly {
        let mut acc = Poly::constant(self.constant.clone());
        for f in &self.factors {
            acc = &acc * &f.factor.pow(f.multiplicity);
        }
        acc
    }
}

/// Splits `p` into squarefree factors with multiplicities; `deg p >= 1`.
pub fn square_free(p: &Poly) -> Result<SquareFreeDecomposition> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (content, prim) = p.content_primitive()?;
    if prim.degree() == Some(0) {
        return Ok(SquareFreeDecomposition {
            constant: content,
            factors: Vec::new(),
        });
    }
    let deriv = prim.derivative();
    // gcd tower G_0 = p, G_k = gcd(G_(k-1), G_(k-1)'), primitive parts
    let mut tower = vec![prim.clone()];
    let g1 = prim.gcd(&deriv);
    if g1.degree() == Some(0) {
        // already squarefree
        return Ok(SquareFreeDecomposition {
            constant: content,
            factors: vec![SquareFreeFactor {
                factor: prim,
                multiplicity: 1,
            }],
        });
    }
    let rprs = recursive_prs(&prim, &deriv, DivisionRule::Subresultant)?;
    for stage in &rprs.stages {
        tower.push(stage.last().primitive()?);
    }
    // w_k = G_(k-1) / G_k = prod_(i >= k) q_i; factors q_k = w_k / w_(k+1)
    let t = tower.len() - 1;
    let mut w = Vec::with_capacity(t + 1);
    for k in 1..=t {
        w.push(tower[k - 1].div_exact(&tower[k])?);
    }
    w.push(Poly::one());
    let mut factors = Vec::new();
    let mut constant = content;
    for k in 1..=t {
        let q = w[k - 1].div_exact(&w[k])?;
        if q.degree() > Some(0) {
            let (c, q) = q.content_primitive()?;
            constant *= c.pow(k as i64);
            factors.push(SquareFreeFactor {
                factor: q,
                multiplicity: k,
            });
        } else {
            // constant quotient folds into the reported constant
            constant *= q.coeff(0).pow(k as i64);
        }
    }
    Ok(SquareFreeDecomposition { constant, factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_poly;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    /// Independent oracle: the classical derivative-quotient iteration.
    fn yun_oracle(input: &Poly) -> Vec<(Poly, usize)> {
        let prim = input.primitive().unwrap();
        let d = prim.derivative();
        let g = prim.gcd(&d);
        let mut a = prim.div_exact(&g).unwrap();
        let mut b = d.div_exact(&g).unwrap();
        let mut out = Vec::new();
        let mut i = 1;
        loop {
            let c = &b - &a.derivative();
            if c.is_zero() {
                if a.degree() > Some(0) {
                    out.push((a.primitive().unwrap(), i));
                }
                break;
            }
            let d = a.gcd(&c);
            if d.degree() > Some(0) {
                out.push((d.primitive().unwrap(), i));
            }
            a = a.div_exact(&d).unwrap();
            b = c.div_exact(&d).unwrap();
            i += 1;
        }
        out
    }

    #[test]
    fn spec_examples() {
        // (x-1)^2 (x+3) -> [(x+3, 1), (x-1, 2)]
        let input = &p("x+3") * &p("x-1").pow(2);
        let d = square_free(&input).unwrap();
        assert_eq!(
            d.factors,
            vec![
                SquareFreeFactor {
                    factor: p("x+3"),
                    multiplicity: 1
                },
                SquareFreeFactor {
                    factor: p("x-1"),
                    multiplicity: 2
                },
            ]
        );
        assert_eq!(d.reconstruct(), input);

        // squarefree input stays whole
        let d = square_free(&p("x^2+1")).unwrap();
        assert_eq!(
            d.factors,
            vec![SquareFreeFactor {
                factor: p("x^2+1"),
                multiplicity: 1
            }]
        );

        // (x-1)^2 (x+1)^2 (x+2) -> [(x+2, 1), ((x-1)(x+1), 2)]
        let input = &(&p("x-1") * &p("x+1")).pow(2) * &p("x+2");
        let d = square_free(&input).unwrap();
        assert_eq!(
            d.factors,
            vec![
                SquareFreeFactor {
                    factor: p("x+2"),
                    multiplicity: 1
                },
                SquareFreeFactor {
                    factor: p("x^2-1"),
                    multiplicity: 2
                },
            ]
        );
        assert_eq!(d.reconstruct(), input);
    }

    #[test]
    fn zero_rejected() {
        assert!(matches!(
            square_free(&Poly::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn matches_oracle_on_random_products() {
        let mut rng = StdRng::seed_from_u64(73);
        for _ in 0..60 {
            // random product of distinct linear factors with multiplicities
            let mut roots: Vec<i64> = (-4..=4).collect();
            let count = rng.gen_range(1..=3);
            let mut input = Poly::constant(Rat::from_int(rng.gen_range(1i64..=3)));
            let mut total = 0usize;
            for _ in 0..count {
                let idx = rng.gen_range(0..roots.len());
                let r = roots.swap_remove(idx);
                let mult = rng.gen_range(1..=4);
                if total + mult > 12 {
                    break;
                }
                total += mult;
                input = &input * &p(&format!("x - {r}").replace("- -", "+ ")).pow(mult);
            }
            if input.degree() < Some(1) {
                continue;
            }
            let ours = square_free(&input).unwrap();
            assert_eq!(ours.reconstruct(), input);
            let oracle = yun_oracle(&input);
            let got: Vec<(Poly, usize)> = ours
                .factors
                .iter()
                .map(|f| (f.factor.clone(), f.multiplicity))
                .collect();
            assert_eq!(got, oracle);
            // factors squarefree and coprime to their derivatives
            for f in &ours.factors {
                assert_eq!(f.factor.gcd(&f.factor.derivative()).degree(), Some(0));
            }
        }
    }
}
