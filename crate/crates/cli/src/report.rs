//! The batch nullity table over catalog instances and δ values.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use superder_core::catalog::{construct, FamilySpec};
use superder_core::deltader::{analyze_space, derivation_space};
use superder_core::exactnum::{q, Rational};

use crate::CliError;

pub const INSTANCES: [&str; 15] = [
    "A:1,0", "A:2,1", "Aqq:1", "B:0,1", "B:1,1", "C:2", "D:2,1", "P:2", "P:3", "Q:2", "Q:3", "D21:1", "D21:2",
    "D21:-1/2", "D21:3/5",
];

pub fn fixed_deltas() -> Vec<Rational> {
    vec![q(-1, 1), q(-1, 2), q(0, 1), q(3, 7), q(1, 2), q(1, 1), q(2, 1)]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub family: String,
    /// `even+odd`.
    pub dims: String,
    pub delta: Rational,
    pub nullity: usize,
    pub scalar_line: bool,
    pub grading_ok: bool,
}

/// One probe `δ` per instance drawn from `seed`, in addition to the fixed set.
fn probe_delta(rng: &mut ChaCha8Rng) -> Rational {
    let n: i64 = rng.random_range(-30..=30);
    let d: i64 = rng.random_range(1..=13);
    q(n, d)
}

pub fn run_report(seed: u64, jobs: usize, max_dim: Option<usize>) -> Result<Vec<ReportRow>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut work = Vec::new();
    for s in INSTANCES {
        let spec: FamilySpec = s.parse()?;
        let c = construct(&spec)?;
        let mut deltas = fixed_deltas();
        let probe = probe_delta(&mut rng);
        if max_dim.is_some_and(|m| c.algebra.dim() > m) {
            continue;
        }
        if !deltas.contains(&probe) {
            deltas.push(probe);
        }
        for d in deltas {
            work.push((spec.clone(), c.algebra.clone(), d));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Io(format!("thread pool: {e}")))?;
    let mut rows: Vec<(FamilySpec, ReportRow)> = pool.install(|| {
        work.par_iter()
            .map(|(spec, a, d)| {
                let space = derivation_space(a, d);
                let an = analyze_space(a, &space);
                let row = ReportRow {
                    family: spec.display_name(),
                    dims: format!("{}+{}", a.even_dim(), a.odd_dim()),
                    delta: d.clone(),
                    nullity: space.nullity(),
                    scalar_line: an.scalar_line,
                    grading_ok: an.grading_preserving,
                };
                (spec.clone(), row)
            })
            .collect()
    });
    rows.sort_by(|(sa, ra), (sb, rb)| (sa, &ra.delta).cmp(&(sb, &rb.delta)));
    Ok(rows.into_iter().map(|(_, r)| r).collect())
}

pub fn to_csv(rows: &[ReportRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}
