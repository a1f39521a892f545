//! Randomized and canonical verification suites for the family identities,
//! plus the named instances they run on.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::poly::Poly;
use crate::prs::{recursive_prs, DivisionRule};
use crate::rat::Rat;
use crate::report::{Status, VerifyReport};
use crate::subresultant::{nested, reduced};

/// Draws a random integer polynomial pair with a forced nontrivial gcd
/// chain: `f = u * h`, `g = w * h` with `gcd(u, w) = 1`, degrees in
/// `2..=8`, `deg f > deg g`, and `deg h >= 2` so stage 2 has a valid target
/// index. The common factor is occasionally given a repeated root to deepen
/// the chain.
pub fn random_chain_pair<R: Rng>(rng: &mut R) -> (Poly, Poly) {
    fn random_poly<R: Rng>(rng: &mut R, deg: usize) -> Poly {
        let mut coeffs: Vec<Rat> = (0..=deg)
            .map(|_| Rat::from_int(rng.gen_range(-5i64..=5)))
            .collect();
        while coeffs[deg].is_zero() {
            coeffs[deg] = Rat::from_int(rng.gen_range(-5i64..=5));
        }
        Poly::from_coeffs(coeffs)
    }
    loop {
        let dh = rng.gen_range(2..=4usize);
        let h = if rng.gen_bool(0.3) {
            // repeated linear factor to force a deeper chain
            let root = rng.gen_range(-3i64..=3);
            let mult = rng.gen_range(2..=dh);
            let lin = Poly::from_coeffs(vec![Rat::from_int(-root), Rat::one()]);
            let rest = if dh > mult {
                random_poly(rng, dh - mult)
            } else {
                Poly::one()
            };
            &lin.pow(mult) * &rest
        } else {
            random_poly(rng, dh)
        };
        let du = rng.gen_range(1..=(8usize.saturating_sub(dh)).clamp(1, 4));
        let dw = rng.gen_range(0..du);
        let u = random_poly(rng, du);
        let w = random_poly(rng, dw);
        if u.gcd(&w).degree() != Some(0) {
            continue;
        }
        let f = &u * &h;
        let g = &w * &h;
        let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
            continue;
        };
        if m > n && (2..=8).contains(&m) && (2..=8).contains(&n) {
            // the construction guarantees gcd(f, g) = h up to constants
            return (f, g);
        }
    }
}

/// Aggregate outcome of a randomized identity suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteSummary {
    pub theorem: u8,
    pub seed: u64,
    pub trials: u64,
    /// Total `(k, j)` pairs examined.
    pub checked: u64,
    pub pass: u64,
    pub fail: u64,
    pub skipped: u64,
    /// Failed and skipped reports only; passes are counted, not listed.
    pub reports: Vec<VerifyReport>,
}

impl SuiteSummary {
    pub fn all_passed(&self) -> bool {
        self.fail == 0
    }
}

fn run_identity_suite(
    theorem: u8,
    trials: u64,
    max_deg: usize,
    seed: u64,
    check: impl Fn(&Poly, &Poly, usize, usize) -> VerifyReport,
) -> SuiteSummary {
    let mut summary = SuiteSummary {
        theorem,
        seed,
        trials,
        checked: 0,
        pass: 0,
        fail: 0,
        skipped: 0,
        reports: Vec::new(),
    };
    for trial in 0..trials {
        // per-trial stream derived from the master seed
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (0x9e37_79b9_7f4a_7c15u64.wrapping_mul(trial + 1)));
        let (f, g) = loop {
            let (f, g) = random_chain_pair(&mut rng);
            if f.degree().unwrap() <= max_deg {
                break (f, g);
            }
        };
        let chain = recursive_prs(&f, &g, DivisionRule::Subresultant)
            .expect("nonzero inputs")
            .degree_chain();
        let t = chain.len() - 1;
        for k in 2..=t {
            for j in 0..=chain[k - 1] as i64 - 2 {
                let report = check(&f, &g, k, j as usize);
                summary.checked += 1;
                match report.status {
                    Status::Pass => summary.pass += 1,
                    Status::Fail => {
                        summary.fail += 1;
                        summary.reports.push(report);
                    }
                    Status::Skipped => {
                        summary.skipped += 1;
                        summary.reports.push(report);
                    }
                }
            }
        }
    }
    summary
}

/// Randomized suite for the nested/recursive sign identity over every stage
/// `k >= 2` and valid `j` of each drawn instance.
pub fn nested_recursive_suite(trials: u64, max_deg: usize, seed: u64) -> SuiteSummary {
    run_identity_suite(1, trials, max_deg, seed, nested::verify_nested_recursive)
}

/// Randomized suite for the nested/reduced identity.
pub fn nested_reduced_suite(trials: u64, max_deg: usize, seed: u64) -> SuiteSummary {
    run_identity_suite(2, trials, max_deg, seed, reduced::verify_nested_reduced)
}

/// Randomized proportionality suite: reduced subresultants against the
/// staged remainder-sequence elements of matching degree.
pub fn proportionality_suite(trials: u64, max_deg: usize, seed: u64) -> SuiteSummary {
    let mut summary = SuiteSummary {
        theorem: 0,
        seed,
        trials,
        checked: 0,
        pass: 0,
        fail: 0,
        skipped: 0,
        reports: Vec::new(),
    };
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (0x9e37_79b9_7f4a_7c15u64.wrapping_mul(trial + 1)));
        let (f, g) = loop {
            let (f, g) = random_chain_pair(&mut rng);
            if f.degree().unwrap() <= max_deg {
                break (f, g);
            }
        };
        for report in reduced::proportionality_check(&f, &g) {
            summary.checked += 1;
            match report.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => {
                    summary.fail += 1;
                    summary.reports.push(report);
                }
                Status::Skipped => {
                    summary.skipped += 1;
                    summary.reports.push(report);
                }
            }
        }
    }
    summary
}

pub mod families {
    //! Canonical input pairs used across tests, benchmarks and the guide.

    use crate::parse_poly;
    use crate::poly::Poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).expect("valid fixture")
    }

    /// The classic degree-8/degree-6 coprime pair whose naive remainder
    /// sequences exhibit dramatic coefficient growth.
    pub fn knuth_pair() -> (Poly, Poly) {
        (
            p("x^8 + x^6 - 3*x^4 - 3*x^3 + 8*x^2 + 2*x - 5"),
            p("3*x^6 + 5*x^4 - 4*x^2 - 9*x + 21"),
        )
    }

    /// Degrees (6, 5) with a squarefree quartic gcd: chain (6, 4, 0).
    /// The top-left 2x2 block of the level-1 matrix has determinant -13,
    /// which makes constant factors in the identities visible.
    pub fn canonical_depth2() -> (Poly, Poly) {
        let h = p("x^4 + x + 1");
        let u = p("2*x^2 + 5*x + 3");
        let w = p("3*x + 1");
        (&u * &h, &w * &h)
    }

    /// Degrees (6, 5) with gcd (x-1)^2 (x+1)^2: chain (6, 4, 2, 0).
    pub fn canonical_depth3() -> (Poly, Poly) {
        let h = (&p("x-1") * &p("x+1")).pow(2);
        (&p("x^2 + 2") * &h, &p("x + 2") * &h)
    }

    /// Degrees (5, 4) with gcd (x-1)^3: chain (5, 3, 2, 1, 0), which forces
    /// the drop-by-one extension levels in the staged constructions.
    pub fn canonical_cubed_root() -> (Poly, Poly) {
        let h = p("x-1").pow(3);
        (&p("x^2 + 2") * &h, &p("x + 2") * &h)
    }

    /// Like [`canonical_depth3`] but without the even symmetry that makes
    /// the level-3 `U` block singular there: gcd (x-1)^2 (x+2)^2, chain
    /// (6, 4, 2, 0), all `U` blocks nonsingular.
    pub fn canonical_depth3_asym() -> (Poly, Poly) {
        let h = (&p("x-1") * &p("x+2")).pow(2);
        (&p("x^2 + 2") * &h, &p("x + 3") * &h)
    }

    /// Degrees (5, 4) with gcd (x-1)^2 (x+1)^2: the family behind the worked
    /// degree-chain examples (5, 4, 2, 0).
    pub fn deg54_family() -> (Poly, Poly) {
        let sq = (&p("x-1") * &p("x+1")).pow(2);
        (&sq * &p("x+2"), sq)
    }

    /// Degrees (6, 5) with a quartic gcd but a singular top-left 2x2 block
    /// in the level-1 matrix, exercising the singular-`U` error path.
    pub fn singular_u_pair() -> (Poly, Poly) {
        let h = p("x^4 + x + 1");
        // leading rows of the level-1 matrix are (1, 1) and (2, 2)
        (&p("x^2 + 2*x + 1") * &h, &p("x + 2") * &h)
    }
}
