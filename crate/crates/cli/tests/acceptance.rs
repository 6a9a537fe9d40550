//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::process::ExitCode;

use clap::Parser;
use rayon::prelude::*;
use serde_json::json;

use superder_cli::{run, Cli};
use superder_core::catalog::{abelian_line, construct, corrupted_sl2, sl2, Construction, FamilySpec};
use superder_core::deltader::{analyze_space, critical_deltas, derivation_space, LinearMap};
use superder_core::exactnum::{q, Rational};
use superder_core::roots::{match_root_table, root_decompose, verify_root_axioms};
use superder_core::superalgebra::{check_superidentities, is_simple, Element, SuperAlgebra};

const INSTANCES: [&str; 15] = [
    "A:1,0", "A:2,1", "Aqq:1", "B:0,1", "B:1,1", "C:2", "D:2,1", "P:2", "P:3", "Q:2", "Q:3", "D21:1", "D21:2",
    "D21:-1/2", "D21:3/5",
];

struct Instance {
    spec: FamilySpec,
    c: Construction,
}

fn instances() -> Vec<Instance> {
    INSTANCES
        .iter()
        .map(|s| {
            let spec: FamilySpec = s.parse().unwrap();
            let c = construct(&spec).unwrap();
            Instance { spec, c }
        })
        .collect()
}

fn off_critical() -> Vec<Rational> {
    vec![q(0, 1), q(-1, 1), q(-1, 2), q(2, 1), q(3, 7)]
}

type Outcome = (bool, String);

fn failures_or(failures: Vec<String>, ok: String) -> Outcome {
    if failures.is_empty() {
        (true, ok)
    } else {
        (false, failures.join("; "))
    }
}

fn criterion1(all: &[Instance]) -> Outcome {
    let bad: Vec<String> = all
        .iter()
        .filter_map(|i| {
            let r = check_superidentities(&i.c.algebra);
            (!r.is_ok()).then(|| format!("{} has {} violations", i.spec, r.violations.len()))
        })
        .collect();
    failures_or(bad, format!("{} instances valid", all.len()))
}

fn criterion2(all: &[Instance]) -> Outcome {
    let half = q(1, 2);
    let bad: Vec<String> = all
        .iter()
        .filter_map(|i| {
            let s = derivation_space(&i.c.algebra, &half);
            let scalar = s.basis.first().and_then(|m| m.scalar_multiple());
            (s.nullity() != 1 || scalar.is_none()).then(|| format!("{}: nullity {}", i.spec, s.nullity()))
        })
        .collect();
    failures_or(bad, "nullity 1, basis map c·id on every instance".into())
}

fn criterion3(all: &[Instance]) -> Outcome {
    let mut bad = Vec::new();
    for i in all {
        for d in off_critical() {
            let n = derivation_space(&i.c.algebra, &d).nullity();
            if n != 0 {
                bad.push(format!("{} at {d}: nullity {n}", i.spec));
            }
        }
    }
    failures_or(bad, "nullity 0 at δ ∈ {0, -1, -1/2, 2, 3/7} on every instance".into())
}

/// Parameters `(a, b, c, d, e)` when `m` has the shape
/// `[[-2a, b, c], [2c, a, d], [2b, e, a]]`.
fn antiderivation_parameters(m: &LinearMap) -> Option<[Rational; 5]> {
    let g = |k, l| m.get(k, l).clone();
    let two = q(2, 1);
    let (a, b, c, d, e) = (g(1, 1), g(0, 1), g(0, 2), g(1, 2), g(2, 1));
    let fits =
        g(0, 0) == -(&two * &a) && g(2, 2) == a && g(1, 0) == &two * &c && g(2, 0) == &two * &b;
    fits.then_some([a, b, c, d, e])
}

fn criterion4() -> Outcome {
    let a = sl2().algebra;
    let s = derivation_space(&a, &q(-1, 1));
    if s.nullity() != 5 {
        return (false, format!("nullity {}", s.nullity()));
    }
    let params: Option<Vec<[Rational; 5]>> = s.basis.iter().map(antiderivation_parameters).collect();
    let Some(params) = params else {
        return (false, "a basis map is outside the five-parameter family".into());
    };
    let vectors: Vec<Vec<(usize, Rational)>> = params
        .iter()
        .map(|p| p.iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect())
        .collect();
    let rank = superder_core::linalg::Echelon::from_vectors(vectors.iter()).rank();
    (rank == 5, format!("nullity 5, all maps in the family, parameter rank {rank}"))
}

fn criterion5(all: &[Instance]) -> Outcome {
    let one = Rational::one();
    let mut bad = Vec::new();
    let mut checked = 0;
    for i in all {
        if !is_simple(&i.c.algebra).unwrap() {
            continue;
        }
        checked += 1;
        let a = &i.c.algebra;
        let s = derivation_space(a, &one);
        let missing = (0..a.dim()).filter(|&k| !s.contains(&LinearMap::ad(a, k))).count();
        let inner = analyze_space(a, &s).inner_dim;
        if missing > 0 || inner != Some(a.dim()) {
            bad.push(format!("{}: {missing} ad maps missing, inner_dim {inner:?} of {}", i.spec, a.dim()));
        }
    }
    failures_or(bad, format!("all ad e_i present and independent on {checked} simple instances"))
}

fn criterion6() -> Outcome {
    let mut bad = Vec::new();
    let mut notes = Vec::new();
    for s in ["A:1,0", "B:0,1"] {
        let a = construct(&s.parse().unwrap()).unwrap().algebra;
        let r = critical_deltas(&a);
        let deltas: Vec<Rational> = r.critical.iter().map(|c| c.delta.clone()).collect();
        if deltas != vec![q(1, 2), Rational::one()] {
            bad.push(format!("{s}: critical set {deltas:?}"));
            continue;
        }
        let (n_half, n_one) = (r.critical[0].nullity, r.critical[1].nullity);
        if n_half != 1 || n_one < a.dim() {
            bad.push(format!("{s}: nullities {n_half}, {n_one}"));
        }
        if !r.unresolved_factors.is_empty() {
            bad.push(format!("{s}: unresolved factors {:?}", r.unresolved_factors));
        }
        notes.push(format!("{s} {{1/2: {n_half}, 1: {n_one}}}"));
    }
    failures_or(bad, notes.join(", "))
}

fn criterion7(all: &[Instance]) -> Outcome {
    let half = q(1, 2);
    let bad: Vec<String> = all
        .iter()
        .filter(|i| i.spec.is_basic())
        .filter_map(|i| {
            let s = derivation_space(&i.c.algebra, &half);
            let ok = s.nullity() == 0 || analyze_space(&i.c.algebra, &s).grading_preserving;
            (!ok).then(|| i.spec.to_string())
        })
        .collect();
    failures_or(bad, "δ = 1/2 spaces preserve the grading on basic instances".into())
}

fn criterion8(all: &[Instance]) -> Outcome {
    let mut bad = Vec::new();
    for i in all.iter().filter(|i| i.spec.is_basic()) {
        let rd = root_decompose(&i.c.algebra, &i.c.cartan).unwrap();
        let r = verify_root_axioms(&i.c.algebra, &rd);
        if !r.is_ok() {
            bad.push(format!("{}: {} root axiom violations", i.spec, r.violations.len()));
        }
    }
    for s in ["B:0,1", "B:1,1", "C:2", "A:1,0"] {
        let spec: FamilySpec = s.parse().unwrap();
        let c = construct(&spec).unwrap();
        let rd = root_decompose(&c.algebra, &c.cartan).unwrap();
        if !match_root_table(&rd, &spec) {
            bad.push(format!("{s}: root table mismatch"));
        }
    }
    failures_or(bad, "root axioms hold on basic instances; tables match for B(0,1), B(1,1), C(2), A(1,0)".into())
}

/// Nullity by dense elimination over the unknowns in reverse order, with
/// the system built from all ordered pairs directly from the brackets.
fn oracle_nullity(a: &SuperAlgebra, delta: &Rational) -> usize {
    let n = a.dim();
    let unknowns = n * n;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (ei, ej) = (Element::basis(i), Element::basis(j));
            let prod = a.bracket(&ei, &ej).unwrap();
            let mut block = vec![vec![Rational::zero(); unknowns]; n];
            for u in 0..unknowns {
                let (k0, l0) = (u / n, u % n);
                let phi = |x: &Element| Element::new([(k0, x.coeff(l0))]);
                let odd_map = a.parity(k0) != a.parity(l0);
                let sign = if odd_map && a.parity(i).is_odd() { q(-1, 1) } else { Rational::one() };
                let rhs = a
                    .bracket(&phi(&ei), &ej)
                    .unwrap()
                    .add_scaled(&sign, &a.bracket(&ei, &phi(&ej)).unwrap())
                    .scale(delta);
                let residual = phi(&prod).sub(&rhs);
                for (m, v) in residual.coords() {
                    block[*m][u] = v.clone();
                }
            }
            rows.extend(block);
        }
    }
    let mut rank = 0;
    for col in (0..unknowns).rev() {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip().unwrap();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] * &inv;
                for c in 0..unknowns {
                    let d = &f * &rows[rank][c];
                    rows[r][c] -= &d;
                }
            }
        }
        rank += 1;
    }
    unknowns - rank
}

fn criterion9() -> Outcome {
    let fixtures = [("sl2", sl2().algebra), ("abelian", abelian_line().algebra), ("corrupted sl2", corrupted_sl2().algebra)];
    let deltas = [q(-1, 1), q(0, 1), q(1, 2), q(1, 1), q(2, 1)];
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for (name, a) in &fixtures {
        for d in &deltas {
            let (x, y) = (derivation_space(a, d).nullity(), oracle_nullity(a, d));
            if x != y {
                bad.push(format!("{name} at {d}: {x} vs {y}"));
            }
            seen.push(x.to_string());
        }
    }
    failures_or(bad, format!("15 comparisons agree [{}]", seen.join(" ")))
}

/// Serialized outputs of criteria 1–8, computed in a pool of `threads`.
fn transcript(threads: usize) -> String {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
    pool.install(|| {
        let all = instances();
        let per: Vec<String> = all
            .par_iter()
            .map(|i| {
                let a = &i.c.algebra;
                let mut deltas = off_critical();
                deltas.extend([q(1, 2), Rational::one()]);
                let spaces: Vec<_> = deltas
                    .iter()
                    .map(|d| {
                        let s = derivation_space(a, d);
                        json!({ "space": s, "analysis": analyze_space(a, &s) })
                    })
                    .collect();
                let rd = root_decompose(a, &i.c.cartan).unwrap();
                let roots: Vec<_> = rd.roots.iter().map(|r| json!([r.functional, r.parity, r.members])).collect();
                json!({
                    "spec": i.spec.to_string(),
                    "algebra": a.to_json(),
                    "identities": check_superidentities(a).violations,
                    "spaces": spaces,
                    "roots": roots,
                    "root_axioms": verify_root_axioms(a, &rd).violations,
                })
                .to_string()
            })
            .collect();
        let scans: Vec<String> = ["A:1,0", "B:0,1"]
            .par_iter()
            .map(|s| serde_json::to_string(&critical_deltas(&construct(&s.parse().unwrap()).unwrap().algebra)).unwrap())
            .collect();
        per.join("\n") + "\n" + &scans.join("\n")
    })
}

fn cli(args: &[&str]) -> String {
    let cli = Cli::try_parse_from(std::iter::once("superder").chain(args.iter().copied())).unwrap();
    run(&cli).unwrap().main
}

fn criterion10() -> Outcome {
    let first = transcript(1);
    let mut bad = Vec::new();
    if transcript(1) != first {
        bad.push("transcript differs between runs".to_string());
    }
    if transcript(4) != first {
        bad.push("transcript differs across thread counts".to_string());
    }
    let report = |jobs: &str| cli(&["report", "--format", "csv", "--jobs", jobs, "--max-dim", "17"]);
    let base = report("1");
    if report("1") != base || report("3") != base {
        bad.push("report differs across runs or --jobs".to_string());
    }
    if cli(&["construct", "D21:2/3"]) != cli(&["construct", "D21:2/3"]) {
        bad.push("construct is not reproducible".to_string());
    }
    failures_or(bad, format!("{} transcript bytes identical across runs and 1/4 threads; report identical for --jobs 1/3", first.len()))
}

fn main() -> ExitCode {
    let all = instances();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("superidentities", Box::new(|| criterion1(&all))),
        ("half-derivations are scalars", Box::new(|| criterion2(&all))),
        ("trivial off the critical set", Box::new(|| criterion3(&all))),
        ("sl2 antiderivations", Box::new(criterion4)),
        ("derivations contain ad", Box::new(|| criterion5(&all))),
        ("parametric scan", Box::new(criterion6)),
        ("grading at 1/2", Box::new(|| criterion7(&all))),
        ("root axioms and tables", Box::new(|| criterion8(&all))),
        ("oracle equivalence", Box::new(criterion9)),
        ("determinism", Box::new(criterion10)),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let (ok, detail) = check();
        println!("criterion {:>2} {name}: {} ({detail})", k + 1, if ok { "PASS" } else { "FAIL" });
        if !ok {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
