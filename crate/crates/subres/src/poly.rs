//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored in ascending power order with trailing zeros
//! trimmed, so the stored length is `degree + 1` and the zero polynomial is
//! the empty vector. Operations that need a fixed nominal degree larger than
//! the true degree (the tau-indexed determinant vectors of the subresultant
//! constructions) take that degree as an explicit parameter and read
//! coefficients through [`Poly::coeff`], which is total.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::rat::Rat;
use crate::Result;

/// A univariate polynomial with `Rat` coefficients, always normalized.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `x` as a polynomial.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// Builds from ascending-power coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Ascending-power integer coefficients; handy in tests and examples.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    /// `c * x^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial encoded as -1.
    pub fn degree_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Coefficient of `x^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| Rat::from_int(k as i64) * c)
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Exact Horner evaluation.
    pub fn eval_at(&self, x0: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x0 + c;
        }
        acc
    }

    /// Pseudo-division: returns `(quotient, remainder, multiplier)` with
    /// `multiplier * self = quotient * g + remainder` exactly and
    /// `deg remainder < deg g`. The multiplier is `lc(g)^(deg f - deg g + 1)`
    /// when `deg f >= deg g`, and 1 otherwise (quotient zero).
    pub fn pseudo_divide(&self, g: &Poly) -> Result<(Poly, Poly, Rat)> {
        if g.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let (Some(df), Some(dg)) = (self.degree(), g.degree()) else {
            return Ok((Poly::zero(), Poly::zero(), Rat::one()));
        };
        if df < dg {
            return Ok((Poly::zero(), self.clone(), Rat::one()));
        }
        let lc_g = g.leading();
        let steps = df - dg + 1;
        let mut quot = vec![Rat::zero(); df - dg + 1];
        let mut rem = self.coeffs.clone();
        let mut performed = 0usize;
        // Scale the running remainder by lc(g) before each cancellation so
        // every intermediate value stays in the same ring as the inputs.
        while rem.len() > dg && performed < steps {
            let top = rem.len() - 1;
            let factor = rem[top].clone();
            for c in rem.iter_mut() {
                *c = &*c * &lc_g;
            }
            for q in quot.iter_mut() {
                *q = &*q * &lc_g;
            }
            quot[top - dg] = &quot[top - dg] + &factor;
            for i in 0..=dg {
                let sub = &factor * &g.coeffs[i];
                rem[top - dg + i] = &rem[top - dg + i] - &sub;
            }
            while rem.last().is_some_and(Rat::is_zero) {
                rem.pop();
            }
            performed += 1;
        }
        // Top up so the multiplier is exactly lc(g)^(df - dg + 1).
        let missing = steps - performed;
        if missing > 0 {
            let boost = lc_g.pow(missing as i64);
            for c in rem.iter_mut() {
                *c = &*c * &boost;
            }
            for q in quot.iter_mut() {
                *q = &*q * &boost;
            }
        }
        Ok((
            Poly::from_coeffs(quot),
            Poly::from_coeffs(rem),
            lc_g.pow(steps as i64),
        ))
    }

    /// Ordinary division over the rationals: `self = q * g + r`.
    pub fn div_rem(&self, g: &Poly) -> Result<(Poly, Poly)> {
        let (q, r, m) = self.pseudo_divide(g)?;
        let inv = m.recip()?;
        Ok((q.scale(&inv), r.scale(&inv)))
    }

    /// Exact division; `Internal` error if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(g)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "inexact polynomial division: remainder {r}"
            )));
        }
        Ok(q)
    }

    /// Splits into `(content, primitive)` with `self = content * primitive`.
    /// The primitive part has coprime integer coefficients and positive
    /// leading coefficient; the content carries the sign.
    pub fn content_primitive(&self) -> Result<(Rat, Poly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rat::from_inner(num_rational::BigRational::new(num_gcd, den_lcm));
        if self.leading().is_negative() {
            content = -content;
        }
        let inv = content.recip()?;
        Ok((content, self.scale(&inv)))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Result<Poly> {
        Ok(self.content_primitive()?.1)
    }

    /// Monic-primitive gcd computed by rational euclidean remainders; used
    /// as a utility and cross-checked against the remainder-sequence engine.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        if a.is_zero() && b.is_zero() {
            return Poly::zero();
        }
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.primitive().expect("nonzero gcd")
    }

    /// `self^exp` by repeated multiplication.
    pub fn pow(&self, exp: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Renders in descending powers in the same grammar [`crate::parse_poly`]
    /// accepts, e.g. `3/2*x^3 - x + 5`.
    pub fn to_expr_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if k > 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push('x');
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr_string())
    }
}

impl serde::Serialize for Poly {
    /// `{"degree": d, "coeffs": ["num/den", ... ascending]}` with the zero
    /// polynomial as degree -1 and an empty coefficient list.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Poly", 2)?;
        s.serialize_field("degree", &self.degree_i64())?;
        s.serialize_field("coeffs", &self.coeffs)?;
        s.end()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
