//! Polynomial remainder sequences under pluggable division rules, and the
//! staged sequence obtained by restarting on each gcd and its derivative.
//!
//! A remainder sequence for `(f, g)` is `(P_1 = f, P_2 = g, P_3, ...)` with
//! `alpha_i * P_{i-2} = q_{i-1} * P_{i-1} + beta_i * P_i` at every step and
//! strictly decreasing degrees. The `(alpha_i, beta_i)` pairs are the
//! division rule; the last element is the final nonzero pseudo-remainder and
//! is a scalar multiple of `gcd(f, g)` for every rule.

use crate::error::Error;
use crate::poly::Poly;
use crate::rat::Rat;
use crate::Result;

/// The per-step cofactor policy for pseudo-division.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DivisionRule {
    /// `alpha = beta = 1`; plain remainders over the rationals.
    Euclidean,
    /// `alpha = lc(g)^(d+1)`, `beta` = content of the pseudo-remainder.
    Primitive,
    /// Collins' rule: integer-preserving with the classical
    /// `beta_3 = (-1)^(d+1)`, `beta_i = -c * h^d` bookkeeping.
    Subresultant,
}

impl DivisionRule {
    pub fn name(&self) -> &'static str {
        match self {
            DivisionRule::Euclidean => "euclidean",
            DivisionRule::Primitive => "primitive",
            DivisionRule::Subresultant => "subresultant",
        }
    }
}

impl std::str::FromStr for DivisionRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "euclidean" => Ok(DivisionRule::Euclidean),
            "primitive" => Ok(DivisionRule::Primitive),
            "subresultant" => Ok(DivisionRule::Subresultant),
            other => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown division rule {other:?}"),
            }),
        }
    }
}

/// One recorded division step: `alpha * P_{i-2} = quotient * P_{i-1} + beta * P_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrsStep {
    pub alpha: Rat,
    pub beta: Rat,
    pub quotient: Poly,
}

/// One remainder sequence `(P_1, ..., P_l)` together with its step records.
#[derive(Debug, Clone)]
pub struct PrsStage {
    /// The sequence elements, all nonzero.
    pub polys: Vec<Poly>,
    /// Step records for `i = 3..=l`; `steps.len() == polys.len() - 2`.
    pub steps: Vec<PrsStep>,
    /// Set when the inputs had equal degrees and the sequence was started
    /// anyway with one ordinary division step (an engine extension).
    pub equal_degree_prestep: bool,
}

impl PrsStage {
    /// Number of elements `l`.
    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn last(&self) -> &Poly {
        self.polys.last().expect("stage is never empty")
    }

    /// Complete means the last element is a (nonzero) constant.
    pub fn is_complete(&self) -> bool {
        self.last().degree() == Some(0)
    }

    /// Degrees `n_i` of the elements.
    pub fn degrees(&self) -> Vec<usize> {
        self.polys
            .iter()
            .map(|p| p.degree().expect("elements are nonzero"))
            .collect()
    }

    /// Leading coefficients `c_i`.
    pub fn leading(&self) -> Vec<Rat> {
        self.polys.iter().map(Poly::leading).collect()
    }

    /// Degree gaps `d_i = n_i - n_{i+1}` for `i = 1..l-1`.
    pub fn gaps(&self) -> Vec<usize> {
        let n = self.degrees();
        n.windows(2).map(|w| w[0] - w[1]).collect()
    }

    /// Normal means every interior gap is exactly one.
    pub fn is_normal(&self) -> bool {
        self.gaps().iter().skip(1).all(|&d| d == 1)
    }

    pub fn alphas(&self) -> Vec<Rat> {
        self.steps.iter().map(|s| s.alpha.clone()).collect()
    }

    pub fn betas(&self) -> Vec<Rat> {
        self.steps.iter().map(|s| s.beta.clone()).collect()
    }

    pub fn quotients(&self) -> Vec<Poly> {
        self.steps.iter().map(|s| s.quotient.clone()).collect()
    }
}

/// A complete staged remainder sequence: stage 1 runs on `(f, g)`, and every
/// later stage restarts on the previous stage's last element and its
/// derivative, until that element is a constant.
#[derive(Debug, Clone)]
pub struct RecursivePrs {
    pub stages: Vec<PrsStage>,
    /// `gamma_k` relating stage `k`'s last element to the primitive
    /// positive-leading-coefficient gcd of the stage inputs: recorded, never
    /// applied.
    pub gammas: Vec<Rat>,
    pub rule: DivisionRule,
}

impl RecursivePrs {
    /// Stage count `t`.
    pub fn depth(&self) -> usize {
        self.stages.len()
    }

    /// Always true by construction: stages are appended until the last
    /// element is constant.
    pub fn is_complete(&self) -> bool {
        self.stages
            .last()
            .is_some_and(|s| s.last().degree() == Some(0))
    }

    /// The chain `j_0 = deg f, j_1, ..., j_t` of last-element degrees;
    /// strictly decreasing, ending in `j_t = 0`.
    pub fn degree_chain(&self) -> Vec<usize> {
        let mut chain = Vec::with_capacity(self.stages.len() + 1);
        chain.push(
            self.stages[0].polys[0]
                .degree()
                .expect("inputs are nonzero"),
        );
        for stage in &self.stages {
            chain.push(stage.last().degree().expect("elements are nonzero"));
        }
        chain
    }
}

struct RuleState {
    /// `h` from the Collins bookkeeping; meaningful from the second step on.
    h: Rat,
    /// Leading coefficient of `P_{i-2}` at the upcoming step.
    prev_lead: Rat,
}

fn step(
    rule: DivisionRule,
    state: &mut Option<RuleState>,
    p_prev: &Poly,
    p_cur: &Poly,
) -> Result<Option<(PrsStep, Poly)>> {
    let (quot, rem, mult) = p_prev.pseudo_divide(p_cur)?;
    if rem.is_zero() {
        return Ok(None);
    }
    let delta = p_prev.degree().unwrap() - p_cur.degree().unwrap();
    let (alpha, beta) = match rule {
        DivisionRule::Euclidean => (Rat::one(), Rat::one()),
        DivisionRule::Primitive => {
            let (content, _) = rem.content_primitive()?;
            (mult.clone(), content)
        }
        DivisionRule::Subresultant => {
            let beta = match state.as_ref() {
                None => {
                    if delta.is_multiple_of(2) {
                        Rat::from_int(-1)
                    } else {
                        Rat::one()
                    }
                }
                Some(s) => -(&s.prev_lead * &s.h.pow(delta as i64)),
            };
            (mult.clone(), beta)
        }
    };
    // mult * P_prev = quot * P_cur + rem rescales to
    // alpha * P_prev = quotient * P_cur + beta * next.
    let rescale = &alpha / &mult;
    let quotient = quot.scale(&rescale);
    let next = rem.scale(&(&rescale / &beta));
    if rule == DivisionRule::Subresultant {
        let lead_cur = p_cur.leading();
        let h = match state.as_ref() {
            None => lead_cur.pow(delta as i64),
            // h <- lc^delta * h^(1 - delta), an exact division in the ring.
            Some(s) => lead_cur.pow(delta as i64) * s.h.pow(1 - delta as i64),
        };
        *state = Some(RuleState {
            h,
            prev_lead: lead_cur,
        });
    }
    Ok(Some((
        PrsStep {
            alpha,
            beta,
            quotient,
        },
        next,
    )))
}

/// Runs one remainder sequence for `(f, g)`.
///
/// Requires `deg f >= deg g` and nonzero inputs; a constant `g` yields the
/// two-element sequence. Equal degrees are accepted and flagged (see
/// [`PrsStage::equal_degree_prestep`]); proportional equal-degree inputs are
/// rejected because no remainder step is possible.
pub fn prs(f: &Poly, g: &Poly, rule: DivisionRule) -> Result<PrsStage> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput);
    }
    let (df, dg) = (f.degree().unwrap(), g.degree().unwrap());
    if df < dg {
        return Err(Error::DegenerateDegrees(format!(
            "prs needs deg f >= deg g, got {df} < {dg}"
        )));
    }
    let equal = df == dg;
    let mut stage = PrsStage {
        polys: vec![f.clone(), g.clone()],
        steps: Vec::new(),
        equal_degree_prestep: equal,
    };
    if dg == 0 {
        return Ok(stage);
    }
    let mut state: Option<RuleState> = None;
    loop {
        let len = stage.polys.len();
        let (p_prev, p_cur) = (&stage.polys[len - 2], &stage.polys[len - 1]);
        match step(rule, &mut state, p_prev, p_cur)? {
            None => break,
            Some((record, next)) => {
                stage.steps.push(record);
                let done = next.degree() == Some(0);
                stage.polys.push(next);
                if done {
                    break;
                }
            }
        }
    }
    if equal && stage.polys.len() == 2 {
        return Err(Error::DegenerateDegrees(
            "equal-degree inputs are proportional; no remainder step possible".into(),
        ));
    }
    Ok(stage)
}

/// Computes the complete staged sequence for `(f, g)`: stages are appended
/// on `(last, last')` until the last element is a constant.
pub fn recursive_prs(f: &Poly, g: &Poly, rule: DivisionRule) -> Result<RecursivePrs> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut stages = Vec::new();
    let mut gammas = Vec::new();
    let mut stage = prs(f, g, rule)?;
    loop {
        let last = stage.last().clone();
        let (content, _) = last.content_primitive()?;
        gammas.push(content);
        let done = last.degree() == Some(0);
        stages.push(stage);
        if done {
            break;
        }
        stage = prs(&last, &last.derivative(), rule)?;
    }
    let rprs = RecursivePrs {
        stages,
        gammas,
        rule,
    };
    let chain = rprs.degree_chain();
    if chain.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::Internal(format!(
            "degree chain {chain:?} is not strictly decreasing"
        )));
    }
    Ok(rprs)
}

/// The degree chain of a complete staged sequence (see
/// [`RecursivePrs::degree_chain`]).
pub fn degree_chain(r: &RecursivePrs) -> Result<Vec<usize>> {
    if !r.is_complete() {
        return Err(Error::Incomplete);
    }
    Ok(r.degree_chain())
}

/// Primitive positive-lc gcd via the remainder-sequence engine.
pub fn prs_gcd(f: &Poly, g: &Poly, rule: DivisionRule) -> Result<Poly> {
    let (f, g) = if f.degree() >= g.degree() {
        (f, g)
    } else {
        (g, f)
    };
    prs(f, g, rule)?.last().primitive()
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

    /// The classic integer pair whose naive remainder sequences blow up.
    pub(crate) fn knuth_pair() -> (Poly, Poly) {
        (
            p("x^8 + x^6 - 3*x^4 - 3*x^3 + 8*x^2 + 2*x - 5"),
            p("3*x^6 + 5*x^4 - 4*x^2 - 9*x + 21"),
        )
    }

    fn random_poly(rng: &mut StdRng, deg: usize) -> Poly {
        let mut coeffs: Vec<Rat> = (0..=deg)
            .map(|_| Rat::from_int(rng.gen_range(-9i64..=9)))
            .collect();
        if coeffs[deg].is_zero() {
            coeffs[deg] = Rat::one();
        }
        Poly::from_coeffs(coeffs)
    }

    #[test]
    fn divisor_ends_sequence() {
        let stage = prs(&p("x^2-1"), &p("x-1"), DivisionRule::Euclidean).unwrap();
        assert_eq!(stage.len(), 2);
        assert!(!stage.is_complete());
        assert_eq!(stage.last(), &p("x-1"));
    }

    #[test]
    fn euclidean_chain_example() {
        let stage = prs(&p("x^3+1"), &p("x^2+1"), DivisionRule::Euclidean).unwrap();
        let want = vec![p("x^3+1"), p("x^2+1"), p("-x+1"), p("2")];
        assert_eq!(stage.polys, want);
        assert!(stage.is_complete());
        assert_eq!(stage.degrees(), vec![3, 2, 1, 0]);
    }

    #[test]
    fn step_identity_all_rules() {
        let mut rng = StdRng::seed_from_u64(43);
        for rule in [
            DivisionRule::Euclidean,
            DivisionRule::Primitive,
            DivisionRule::Subresultant,
        ] {
            for _ in 0..40 {
                let df = rng.gen_range(2..=8);
                let dg = rng.gen_range(1..df);
                let f = random_poly(&mut rng, df);
                let g = random_poly(&mut rng, dg);
                let stage = prs(&f, &g, rule).unwrap();
                for (i, step) in stage.steps.iter().enumerate() {
                    let lhs = stage.polys[i].scale(&step.alpha);
                    let rhs = &(&step.quotient * &stage.polys[i + 1])
                        + &stage.polys[i + 2].scale(&step.beta);
                    assert_eq!(lhs, rhs, "rule {rule:?} step {i}");
                    assert!(!step.alpha.is_zero() && !step.beta.is_zero());
                }
                // strictly decreasing degrees
                let degs = stage.degrees();
                assert!(degs.windows(2).all(|w| w[0] > w[1]));
            }
        }
    }

    #[test]
    fn knuth_pair_subresultant_rule() {
        let (f, g) = knuth_pair();
        let stage = prs(&f, &g, DivisionRule::Subresultant).unwrap();
        assert_eq!(stage.degrees(), vec![8, 6, 4, 2, 1, 0]);
        assert!(stage.is_complete());
        // integer coefficients throughout
        for poly in &stage.polys {
            for c in poly.coeffs() {
                assert!(c.is_integer(), "non-integer coefficient {c} in {poly}");
            }
        }
        // proportional to the classical table values
        let table = [p("15*x^4 - 3*x^2 + 9"), p("65*x^2 + 125*x - 245"),
                     p("-9326*x + 12300"), p("260708")];
        for (got, want) in stage.polys[2..].iter().zip(table.iter()) {
            let ratio = &got.leading() / &want.leading();
            assert_eq!(got, &want.scale(&ratio), "got {got}, want multiple of {want}");
        }
    }

    #[test]
    fn rule_independence_random() {
        let mut rng = StdRng::seed_from_u64(47);
        let mut done = 0;
        while done < 100 {
            let df = rng.gen_range(2..=8);
            let dg = rng.gen_range(1..df);
            let f = random_poly(&mut rng, df);
            let g = random_poly(&mut rng, dg);
            let mut lasts = Vec::new();
            for rule in [
                DivisionRule::Euclidean,
                DivisionRule::Primitive,
                DivisionRule::Subresultant,
            ] {
                lasts.push(prs(&f, &g, rule).unwrap().last().primitive().unwrap());
            }
            assert_eq!(lasts[0], lasts[1]);
            assert_eq!(lasts[1], lasts[2]);
            assert_eq!(lasts[0], f.gcd(&g));
            done += 1;
        }
    }

    #[test]
    fn subresultant_rule_integrality_random() {
        let mut rng = StdRng::seed_from_u64(53);
        for _ in 0..50 {
            let df = rng.gen_range(2..=8);
            let dg = rng.gen_range(1..df);
            let f = random_poly(&mut rng, df);
            let g = random_poly(&mut rng, dg);
            let stage = prs(&f, &g, DivisionRule::Subresultant).unwrap();
            for poly in &stage.polys {
                assert!(poly.coeffs().iter().all(Rat::is_integer));
            }
        }
    }

    #[test]
    fn recursive_chain_examples() {
        // f = (x-1)^2 (x+1), g = (x-1)(x+2)
        let f = &(&p("x-1") * &p("x-1")) * &p("x+1");
        let g = &p("x-1") * &p("x+2");
        let r = recursive_prs(&f, &g, DivisionRule::Subresultant).unwrap();
        assert_eq!(r.degree_chain(), vec![3, 1, 0]);
        assert_eq!(r.depth(), 2);
        // stage 1 ends at gamma * (x-1)
        let last1 = r.stages[0].last();
        assert_eq!(last1.primitive().unwrap(), p("x-1"));
        assert_eq!(last1, &p("x-1").scale(&r.gammas[0]));

        // f = (x-1)^2 (x+1)^2 (x+2), g = (x-1)^2 (x+1)^2
        let sq = &(&p("x-1") * &p("x+1")).pow(2);
        let f = sq * &p("x+2");
        let r = recursive_prs(&f, sq, DivisionRule::Subresultant).unwrap();
        assert_eq!(r.degree_chain(), vec![5, 4, 2, 0]);
        assert_eq!(r.depth(), 3);

        // f = x^2 - 1, g = x + 1: g is the gcd
        let r = recursive_prs(&p("x^2-1"), &p("x+1"), DivisionRule::Subresultant).unwrap();
        assert_eq!(r.degree_chain(), vec![2, 1, 0]);
        assert_eq!(r.depth(), 2);
        assert_eq!(r.stages[1].len(), 2);
        assert_eq!(degree_chain(&r).unwrap(), vec![2, 1, 0]);
    }

    #[test]
    fn stage_gluing() {
        let mut rng = StdRng::seed_from_u64(59);
        let mut done = 0;
        while done < 30 {
            let dh = rng.gen_range(2..=3);
            let du = rng.gen_range(1..=3);
            let dw = rng.gen_range(0..=2);
            let h = random_poly(&mut rng, dh);
            let u = random_poly(&mut rng, du);
            let w = random_poly(&mut rng, dw);
            let f = &h * &u;
            let g = &h * &w;
            if g.is_zero() || f.degree() <= g.degree() || g.degree() < Some(1) {
                continue;
            }
            let Ok(r) = recursive_prs(&f, &g, DivisionRule::Subresultant) else {
                continue;
            };
            for k in 1..r.stages.len() {
                let prev_last = r.stages[k - 1].last();
                assert_eq!(&r.stages[k].polys[0], prev_last);
                assert_eq!(r.stages[k].polys[1], prev_last.derivative());
            }
            // gamma relates last element to the primitive positive-lc gcd
            for (stage, gamma) in r.stages.iter().zip(&r.gammas) {
                let prim = stage.last().primitive().unwrap();
                assert_eq!(stage.last(), &prim.scale(gamma));
            }
            done += 1;
        }
    }

    #[test]
    fn equal_degree_extension() {
        let f = p("x^2 + 3*x + 1");
        let g = p("x^2 - 1");
        let stage = prs(&f, &g, DivisionRule::Subresultant).unwrap();
        assert!(stage.equal_degree_prestep);
        assert_eq!(stage.last().primitive().unwrap(), f.gcd(&g));
        // proportional equal-degree inputs are refused
        let err = prs(&p("x^2-1"), &p("2*x^2-2"), DivisionRule::Euclidean);
        assert!(matches!(err, Err(Error::DegenerateDegrees(_))));
    }

    #[test]
    fn zero_inputs_rejected() {
        assert!(matches!(
            prs(&Poly::zero(), &p("x"), DivisionRule::Euclidean),
            Err(Error::ZeroInput)
        ));
        assert!(matches!(
            recursive_prs(&p("x"), &Poly::zero(), DivisionRule::Euclidean),
            Err(Error::ZeroInput)
        ));
    }

    #[test]
    fn constant_second_input() {
        let stage = prs(&p("x^3+2"), &p("7"), DivisionRule::Subresultant).unwrap();
        assert_eq!(stage.len(), 2);
        assert!(stage.is_complete());
    }
}
