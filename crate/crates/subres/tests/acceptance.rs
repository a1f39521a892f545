//! Acceptance suite: one test per acceptance criterion, each printing a
//! single pass/fail line. Every comparison is exact rational equality; there
//! are no tolerances anywhere.
//!
//! Run with `cargo test -p subres --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use subres::matrix::sylvester_condense;
use subres::prs::{recursive_prs, DivisionRule};
use subres::report::Status;
use subres::sqfree::square_free;
use subres::subresultant::{nested, recursive, reduced};
use subres::verify::{
    self, families, nested_recursive_suite, nested_reduced_suite, proportionality_suite,
};
use subres::{Error, Mat, Poly, Rat};

const SEED: u64 = 20260810;

struct Criterion {
    name: &'static str,
    start: Instant,
}

impl Criterion {
    fn begin(name: &'static str) -> Self {
        Criterion {
            name,
            start: Instant::now(),
        }
    }

    fn pass(self, detail: &str) {
        println!(
            "[PASS] {} ({:.1}s) {}",
            self.name,
            self.start.elapsed().as_secs_f64(),
            detail
        );
    }

    fn fail(self, detail: &str) -> ! {
        println!("[FAIL] {} {}", self.name, detail);
        panic!("criterion failed: {} {}", self.name, detail);
    }
}

/// Criterion 1: the nested/reduced identity holds exactly on every stage
/// `k >= 2` and valid `j` of 100 seeded instances with forced gcd chains;
/// skips are only SINGULAR_U or DEFECTIVE_PRS.
#[test]
fn criterion_1_nested_reduced_identity() {
    let c = Criterion::begin("criterion 1: nested = constant * reduced, 100 instances");
    let summary = nested_reduced_suite(100, 8, SEED);
    if !summary.all_passed() {
        c.fail(&format!("{} failures: {:?}", summary.fail, summary.reports));
    }
    for r in &summary.reports {
        if r.status == Status::Skipped
            && r.reason != "SINGULAR_U"
            && r.reason != "DEFECTIVE_PRS"
        {
            c.fail(&format!("unexpected skip reason {}", r.reason));
        }
    }
    if summary.checked == 0 || summary.pass == 0 {
        c.fail("suite checked nothing");
    }
    c.pass(&format!(
        "checked {} pairs: {} pass, {} skipped (singular U)",
        summary.checked, summary.pass, summary.skipped
    ));
}

/// Criterion 2: the nested/recursive sign identity holds exactly, sign
/// included, at `k = 2` (and every deeper stage the instances reach) on 100
/// seeded instances. This is the acceptance oracle for the block layout.
#[test]
fn criterion_2_nested_recursive_sign_identity() {
    let c = Criterion::begin("criterion 2: nested = sign * recursive, 100 instances");
    let summary = nested_recursive_suite(100, 8, SEED);
    if !summary.all_passed() {
        c.fail(&format!("{} failures: {:?}", summary.fail, summary.reports));
    }
    if summary.skipped > 0 {
        c.fail(&format!("unexpected skips: {:?}", summary.reports));
    }
    if summary.checked == 0 {
        c.fail("suite checked nothing");
    }
    c.pass(&format!("checked {} pairs, all exact", summary.checked));
}

/// Criterion 3: constructed matrices match the dimension formulas on every
/// instance of the randomized suites (asserted inside the constructors) and
/// on the worked profile m=6, n=5, j1=4: nested level-2 at j=2 is 5x3,
/// reduced is 7x5, its tau=2 selection is 5x5, and the relating factor is
/// |U|^2.
#[test]
fn criterion_3_dimension_conformance() {
    let c = Criterion::begin("criterion 3: dimension formulas");
    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..100 {
        let (f, g) = verify::random_chain_pair(&mut rng);
        let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
        let chain = recursive_prs(&f, &g, DivisionRule::Subresultant)
            .unwrap()
            .degree_chain();
        let t = chain.len() - 1;
        for k in 2..=t {
            for j in 0..=(chain[k - 1] as i64 - 2) {
                let j = j as usize;
                let rec = recursive::recursive_matrix(&f, &g, &chain, k, j).unwrap();
                let want = recursive::recursive_dims(m, n, &chain, k, j).unwrap();
                if (rec.rows(), rec.cols()) != want {
                    c.fail(&format!("recursive dims at ({k},{j})"));
                }
                match reduced::reduced_matrix(&f, &g, &chain, k, j) {
                    Ok(red) => {
                        let want = reduced::reduced_dims(m, n, k, j).unwrap();
                        if (red.rows(), red.cols()) != want {
                            c.fail(&format!("reduced dims at ({k},{j})"));
                        }
                    }
                    Err(Error::SingularU { .. }) => {}
                    Err(e) => c.fail(&format!("reduced construction at ({k},{j}): {e}")),
                }
            }
        }
    }
    // worked profile
    let (f, g) = families::canonical_depth2();
    let chain = [6usize, 4, 0];
    let nm = nested::nested_matrix(&f, &g, &chain, 2, 2).unwrap();
    if (nm.rows(), nm.cols()) != (5, 3) {
        c.fail("worked profile nested dims");
    }
    let rm = reduced::reduced_matrix(&f, &g, &chain, 2, 2).unwrap();
    if (rm.rows(), rm.cols()) != (7, 5) {
        c.fail("worked profile reduced dims");
    }
    let constants = reduced::reduction_constants(&f, &g, &chain, 2, 2).unwrap();
    let u_det = reduced::reduced_level(&f, &g, &chain, 2, 2)
        .unwrap()
        .u
        .det()
        .unwrap();
    if constants.predicted_factor != &u_det * &u_det {
        c.fail("worked profile factor is not |U|^2");
    }
    c.pass("100 random instances + worked profile");
}

/// Criterion 4: determinant oracle agreement on 200 random matrices of
/// order <= 6 and the condensation identity on 100 random instances.
#[test]
fn criterion_4_determinant_oracles() {
    let c = Criterion::begin("criterion 4: determinant and condensation oracles");
    let mut rng = StdRng::seed_from_u64(SEED ^ 4);
    for trial in 0..200 {
        let n = 1 + trial % 6;
        let m = Mat::from_fn(n, n, |_, _| Rat::from_int(rng.gen_range(-9i64..=9)));
        if m.det().unwrap() != m.det_cofactor().unwrap() {
            c.fail("det != det_cofactor");
        }
    }
    let mut done = 0;
    while done < 100 {
        let n = rng.gen_range(3..=6);
        let a = Mat::from_fn(n, n, |_, _| Rat::from_int(rng.gen_range(-9i64..=9)));
        let k = rng.gen_range(1..=n - 2);
        let cond = match sylvester_condense(&a, k) {
            Ok(cmat) => cmat,
            Err(Error::SingularPivot { .. }) => continue,
            Err(e) => c.fail(&format!("condense error {e}")),
        };
        let pivot = a.leading_minor(k).unwrap();
        if a.det().unwrap() * pivot.pow((n - k - 1) as i64) != cond.det().unwrap() {
            c.fail("condensation identity");
        }
        done += 1;
    }
    c.pass("200 determinant pairs, 100 condensations");
}

/// Criterion 5: reduced subresultants are nonzero rational multiples of the
/// staged remainder-sequence elements of matching degree on all normal
/// instances; the classic pair's stage-1 degrees 4, 2, 1, 0 are included.
#[test]
fn criterion_5_prs_proportionality() {
    let c = Criterion::begin("criterion 5: proportionality to sequence elements");
    let summary = proportionality_suite(100, 8, SEED);
    if !summary.all_passed() {
        c.fail(&format!("{} failures: {:?}", summary.fail, summary.reports));
    }
    for r in &summary.reports {
        if r.status == Status::Skipped
            && r.reason != "SINGULAR_U"
            && r.reason != "DEFECTIVE_PRS"
        {
            c.fail(&format!("unexpected skip reason {}", r.reason));
        }
    }
    // the classic pair, frozen degrees
    let (f, g) = families::knuth_pair();
    let reports = reduced::proportionality_check(&f, &g);
    let mut degrees: Vec<usize> = reports
        .iter()
        .filter(|r| r.is_pass() && r.k == 1)
        .map(|r| r.j)
        .collect();
    degrees.sort_unstable();
    if degrees != vec![0, 1, 2, 4] {
        c.fail(&format!("classic pair degrees {degrees:?}"));
    }
    c.pass(&format!(
        "checked {} elements: {} pass, {} skipped",
        summary.checked, summary.pass, summary.skipped
    ));
}

/// Criterion 6: squarefree decomposition reconstructs 100 random products
/// of distinct linear factors with multiplicities <= 4 and total degree
/// <= 12, recovering the exact multiplicity profile.
#[test]
fn criterion_6_square_free() {
    let c = Criterion::begin("criterion 6: squarefree decomposition, 100 products");
    let mut rng = StdRng::seed_from_u64(SEED ^ 6);
    let mut done = 0;
    while done < 100 {
        let mut roots: Vec<i64> = (-6..=6).collect();
        let n_factors = rng.gen_range(1..=4);
        let mut expected: Vec<(i64, usize)> = Vec::new();
        let mut total = 0usize;
        for _ in 0..n_factors {
            let mult = rng.gen_range(1..=4);
            if total + mult > 12 {
                break;
            }
            let root = roots.swap_remove(rng.gen_range(0..roots.len()));
            expected.push((root, mult));
            total += mult;
        }
        if expected.is_empty() {
            continue;
        }
        let mut input = Poly::constant(Rat::from_int(rng.gen_range(1i64..=4)));
        for &(root, mult) in &expected {
            let lin = Poly::from_coeffs(vec![Rat::from_int(-root), Rat::one()]);
            input = &input * &lin.pow(mult);
        }
        let d = square_free(&input).unwrap();
        if d.reconstruct() != input {
            c.fail(&format!("reconstruction of {input}"));
        }
        // multiplicity profile: group expected roots by multiplicity
        let mut profile: Vec<(usize, Poly)> = Vec::new();
        let mut mults: Vec<usize> = expected.iter().map(|&(_, m)| m).collect();
        mults.sort_unstable();
        mults.dedup();
        for m in mults {
            let mut factor = Poly::one();
            for &(root, mult) in &expected {
                if mult == m {
                    let lin = Poly::from_coeffs(vec![Rat::from_int(-root), Rat::one()]);
                    factor = &factor * &lin;
                }
            }
            profile.push((m, factor));
        }
        let got: Vec<(usize, Poly)> = d
            .factors
            .iter()
            .map(|f| (f.multiplicity, f.factor.clone()))
            .collect();
        if got != profile {
            c.fail(&format!("profile of {input}: got {got:?}, want {profile:?}"));
        }
        done += 1;
    }
    c.pass("100 random products reconstructed exactly");
}

/// Criterion 7: on the depth-3 chain family the reduced matrices never
/// exceed `m + n` columns at any `(k, j)` while the recursive matrix at
/// `(3, 0)` far exceeds it: 27 columns against 7 on the canonical profile.
#[test]
fn criterion_7_size_reduction() {
    let c = Criterion::begin("criterion 7: size reduction at depth 3");
    let (f, g) = families::canonical_depth3();
    let (m, n) = (6usize, 5usize);
    let chain = recursive_prs(&f, &g, DivisionRule::Subresultant)
        .unwrap()
        .degree_chain();
    if chain != vec![6, 4, 2, 0] {
        c.fail(&format!("canonical chain {chain:?}"));
    }
    for k in 2..=3 {
        for j in 0..=(chain[k - 1] as i64 - 2) {
            let j = j as usize;
            let (_, red_cols) = reduced::reduced_dims(m, n, k, j).unwrap();
            if red_cols > m + n {
                c.fail(&format!("reduced cols {red_cols} > m+n at ({k},{j})"));
            }
            let built = recursive::recursive_matrix(&f, &g, &chain, k, j).unwrap();
            let formula = recursive::recursive_dims(m, n, &chain, k, j).unwrap();
            if (built.rows(), built.cols()) != formula {
                c.fail(&format!("recursive dims mismatch at ({k},{j})"));
            }
        }
    }
    let (_, rec_cols) = recursive::recursive_dims(m, n, &chain, 3, 0).unwrap();
    let (_, red_cols) = reduced::reduced_dims(m, n, 3, 0).unwrap();
    if rec_cols != 27 || red_cols != 7 {
        c.fail(&format!("(3,0) columns: recursive {rec_cols}, reduced {red_cols}"));
    }
    if rec_cols <= m + n {
        c.fail("recursive matrix does not exceed m+n");
    }
    c.pass(&format!(
        "reduced <= {} columns everywhere; recursive (3,0) needs {rec_cols}",
        m + n
    ));
}
