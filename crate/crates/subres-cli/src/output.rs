//! JSON and text rendering. JSON field order is fixed by the struct
//! definitions, so identical inputs give byte-identical output.

use serde::Serialize;
use subres::prs::{PrsStage, RecursivePrs};
use subres::sqfree::SquareFreeDecomposition;
use subres::subresultant::nested::SignConstants;
use subres::subresultant::reduced::ReductionConstants;
use subres::verify::SuiteSummary;
use subres::{Mat, Poly, Rat};

use crate::bench::BenchTable;

#[derive(Serialize)]
#[serde(untagged)]
pub enum ConstantsJson {
    Sign(SignConstants),
    Reduction(ReductionConstants),
}

#[derive(Serialize)]
struct StageJson<'a> {
    rule: &'a str,
    polys: Vec<&'a Poly>,
    degrees: Vec<usize>,
    alphas: Vec<Rat>,
    betas: Vec<Rat>,
    quotients: Vec<Poly>,
    complete: bool,
    equal_degree_prestep: bool,
}

fn stage_json<'a>(stage: &'a PrsStage, rule: &'a str) -> StageJson<'a> {
    StageJson {
        rule,
        polys: stage.polys.iter().collect(),
        degrees: stage.degrees(),
        alphas: stage.alphas(),
        betas: stage.betas(),
        quotients: stage.quotients(),
        complete: stage.is_complete(),
        equal_degree_prestep: stage.equal_degree_prestep,
    }
}

pub fn emit_stage(stage: &PrsStage, rule: &str, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string(&stage_json(stage, rule)).expect("serializable")
        );
    } else {
        println!("rule: {rule}");
        for (i, p) in stage.polys.iter().enumerate() {
            println!("P_{} (deg {}): {}", i + 1, p.degree_i64(), p);
        }
        println!("complete: {}", stage.is_complete());
    }
}

pub fn emit_rprs(rprs: &RecursivePrs, json: bool) {
    #[derive(Serialize)]
    struct RprsJson<'a> {
        rule: &'a str,
        degree_chain: Vec<usize>,
        depth: usize,
        gammas: &'a [Rat],
        stages: Vec<StageJson<'a>>,
    }
    let rule = rprs.rule.name();
    if json {
        let doc = RprsJson {
            rule,
            degree_chain: rprs.degree_chain(),
            depth: rprs.depth(),
            gammas: &rprs.gammas,
            stages: rprs.stages.iter().map(|s| stage_json(s, rule)).collect(),
        };
        println!("{}", serde_json::to_string(&doc).expect("serializable"));
    } else {
        println!("rule: {rule}");
        println!("degree chain: {:?}", rprs.degree_chain());
        for (k, stage) in rprs.stages.iter().enumerate() {
            println!("stage {} (gamma {}):", k + 1, rprs.gammas[k]);
            for (i, p) in stage.polys.iter().enumerate() {
                println!("  P_{} (deg {}): {}", i + 1, p.degree_i64(), p);
            }
        }
    }
}

pub fn emit_family(
    family: &str,
    k: usize,
    j: usize,
    mat: &Mat,
    poly: &Poly,
    constants: Option<ConstantsJson>,
    json: bool,
) {
    #[derive(Serialize)]
    struct FamilyJson<'a> {
        family: &'a str,
        k: usize,
        j: usize,
        matrix_rows: usize,
        matrix_cols: usize,
        poly: &'a Poly,
        #[serde(skip_serializing_if = "Option::is_none")]
        constants: Option<ConstantsJson>,
    }
    if json {
        let doc = FamilyJson {
            family,
            k,
            j,
            matrix_rows: mat.rows(),
            matrix_cols: mat.cols(),
            poly,
            constants,
        };
        println!("{}", serde_json::to_string(&doc).expect("serializable"));
    } else {
        println!(
            "{family} subresultant at (k, j) = ({k}, {j}): matrix {}x{}",
            mat.rows(),
            mat.cols()
        );
        println!("poly: {poly}");
    }
}

pub fn emit_summary(summary: &SuiteSummary, json: bool) {
    if json {
        println!("{}", serde_json::to_string(summary).expect("serializable"));
    } else {
        println!(
            "theorem {}: {} trials, {} checks: {} pass, {} fail, {} skipped",
            summary.theorem,
            summary.trials,
            summary.checked,
            summary.pass,
            summary.fail,
            summary.skipped
        );
        for r in &summary.reports {
            println!("  ({}, {}): {:?} {}", r.k, r.j, r.status, r.reason);
        }
    }
}

pub fn emit_sqfree(input: &Poly, d: &SquareFreeDecomposition, json: bool) {
    #[derive(Serialize)]
    struct SqfreeJson<'a> {
        input: &'a Poly,
        constant: &'a Rat,
        factors: Vec<FactorJson<'a>>,
    }
    #[derive(Serialize)]
    struct FactorJson<'a> {
        factor: &'a Poly,
        multiplicity: usize,
    }
    if json {
        let doc = SqfreeJson {
            input,
            constant: &d.constant,
            factors: d
                .factors
                .iter()
                .map(|f| FactorJson {
                    factor: &f.factor,
                    multiplicity: f.multiplicity,
                })
                .collect(),
        };
        println!("{}", serde_json::to_string(&doc).expect("serializable"));
    } else {
        println!("input: {input}");
        println!("constant: {}", d.constant);
        for f in &d.factors {
            println!("  ({})^{}", f.factor, f.multiplicity);
        }
    }
}

pub fn emit_bench(table: &BenchTable, json: bool) {
    if json {
        println!("{}", serde_json::to_string(table).expect("serializable"));
    } else {
        println!(
            "family {} on degrees ({}, {}), chain {:?}",
            table.family, table.m, table.n, table.chain
        );
        println!("  (k,j)  recursive      reduced      rec_ms  red_ms  bits");
        for r in &table.records {
            println!(
                "  ({},{})  {:>4}x{:<8} {:>3}x{:<8} {:>7.2} {:>7.2} {:>5}",
                r.k,
                r.j,
                r.recursive_rows,
                r.recursive_cols,
                r.reduced_rows,
                r.reduced_cols,
                r.recursive_ms,
                r.reduced_ms,
                r.max_coeff_bits
            );
        }
    }
}

pub fn emit_matrix(mat: &Mat, json: bool) {
    if json {
        #[derive(Serialize)]
        struct MatrixJson {
            rows: usize,
            cols: usize,
            entries: Vec<Vec<Rat>>,
        }
        let doc = MatrixJson {
            rows: mat.rows(),
            cols: mat.cols(),
            entries: (0..mat.rows()).map(|i| mat.row(i).to_vec()).collect(),
        };
        println!("{}", serde_json::to_string(&doc).expect("serializable"));
    } else {
        print!("{mat}");
    }
}
