//! Exhaustive desk-scale sweeps comparing inequality verdicts with the
//! coefficient oracles, plus the frozen reference fixtures for the crossing
//! statistics.
//!
//! Sweeps parallelize over triples with rayon; the report is a
//! deterministic reduction in enumeration order, so identical inputs yield
//! identical reports regardless of the worker count (only `duration_ms`
//! varies). Oracle values are computed once per unordered triple and shared
//! across its permutations.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::feasibility::{CheckOptions, HornEngine, RectSystem, StairSystem, TableMethod};
use crate::partition::{
    binomial, enumerate_partitions, enumerate_strict, Partition, Rectangle, Staircase,
    StrictPartition,
};
use crate::statistics::{
    inner_corner_stat, outer_corner_stat, rows_cols_stat, rows_stat, IndexSet,
};

/// Limits and switches for a sweep. The worker count is not part of the
/// configuration echo; reports do not depend on it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepConfig {
    /// Refuse rectangle sweeps with more ordered triples than this.
    pub max_triples: u64,
    /// Refuse staircase sweeps beyond this side length.
    pub max_staircase_side: u32,
    /// Only sweep triples that meet the homogeneity weight condition.
    pub weight_filter: bool,
    /// Where the engines take their feasible-triple tables from.
    pub tables: TableMethod,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_triples: 1_000_000,
            max_staircase_side: 5,
            weight_filter: false,
            tables: TableMethod::Oracle,
        }
    }
}

/// One triple on which a requested check failed, with the oracle values and
/// every system's verdict.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Disagreement {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub oracle: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_d: Option<u64>,
    pub verdicts: BTreeMap<String, bool>,
    pub failed: Vec<String>,
}

/// Aggregate outcome of one sweep (or of the fixture check).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepReport {
    pub shape: String,
    pub systems: Vec<String>,
    pub total: u64,
    pub agree: u64,
    pub disagreements: Vec<Disagreement>,
    pub duration_ms: u64,
    pub config: SweepConfig,
}

/// Compares each requested rectangle system against the oracle on every
/// triple in n×m. A theorem-violating triple lands in `disagreements`;
/// the expected count is zero.
pub fn sweep_rectangle(
    engine: &HornEngine,
    rect: Rectangle,
    systems: &[RectSystem],
    config: &SweepConfig,
) -> Result<SweepReport, Error> {
    let start = Instant::now();
    let (n, m) = (rect.rows(), rect.cols());
    let shape_count = binomial(u64::from(n + m), u64::from(n))?;
    let size = shape_count
        .checked_pow(3)
        .ok_or(Error::Overflow)?;
    if size > config.max_triples {
        return Err(Error::CapExceeded {
            size,
            cap: config.max_triples,
        });
    }

    // Shared read-only tables, built before the parallel fan-out.
    for r in 1..n {
        engine.feasible_triples(r, n - r, config.tables)?;
    }
    if systems.contains(&RectSystem::Symmetric) {
        for r in 1..n.min(m) {
            engine.feasible_triples(r, m - r, config.tables)?;
        }
    }

    let shapes: Vec<Partition> = enumerate_partitions(rect).collect();
    let indices = ordered_triples(shapes.len(), |i, j, k| {
        !config.weight_filter
            || shapes[i].weight() + shapes[j].weight() + shapes[k].weight() == rect.area()
    });

    // One oracle evaluation per unordered triple, shared across permutations.
    let oracle_values = unordered_values(&indices, |&(i, j, k)| {
        engine.oracle().sym_a(&shapes[i], &shapes[j], &shapes[k], rect)
    })?;

    let opts = CheckOptions {
        tables: config.tables,
        fail_fast: true,
    };
    let outcomes: Vec<Option<Disagreement>> = indices
        .par_iter()
        .map(|&(i, j, k)| -> Result<Option<Disagreement>, Error> {
            let (lambda, mu, nu) = (&shapes[i], &shapes[j], &shapes[k]);
            let oracle = oracle_values[&sorted_key(i, j, k)];
            let expected = oracle != 0;
            let mut verdicts = BTreeMap::new();
            let mut failed = Vec::new();
            for system in systems {
                let verdict = match system {
                    RectSystem::Classical => {
                        engine.classical_horn_feasible(lambda, mu, nu, rect, &opts)?
                    }
                    RectSystem::Symmetric => {
                        engine.symmetric_horn_feasible(lambda, mu, nu, rect, &opts)?
                    }
                };
                verdicts.insert(system.name().to_string(), verdict.feasible);
                if verdict.feasible != expected {
                    failed.push(system.name().to_string());
                }
            }
            Ok(build_disagreement(lambda, mu, nu, oracle, None, verdicts, failed))
        })
        .collect::<Result<_, Error>>()?;

    Ok(assemble_report(
        rect.to_string(),
        systems.iter().map(|s| s.name().to_string()).collect(),
        outcomes,
        start,
        config,
    ))
}

/// Compares each requested staircase system against the oracle on every
/// strict triple in Λ_n, cross-checking the two oracles (sym_c vanishes
/// exactly when sym_d does) and, when both systems are requested, the two
/// verdicts against each other.
pub fn sweep_staircase(
    engine: &HornEngine,
    stair: Staircase,
    systems: &[StairSystem],
    config: &SweepConfig,
) -> Result<SweepReport, Error> {
    let start = Instant::now();
    let n = stair.side();
    if n > config.max_staircase_side {
        return Err(Error::CapExceeded {
            size: u64::from(n),
            cap: u64::from(config.max_staircase_side),
        });
    }
    let size = 1u64
        .checked_shl(3 * n)
        .ok_or(Error::Overflow)?;
    if size > config.max_triples {
        return Err(Error::CapExceeded {
            size,
            cap: config.max_triples,
        });
    }

    for r in 1..n {
        engine.feasible_triples(r, n - r, config.tables)?;
    }
    for r in (2..=n).step_by(2) {
        engine.feasible_triples(r, n + 1 - r, config.tables)?;
    }

    let shapes: Vec<StrictPartition> = enumerate_strict(stair).collect();
    let indices = ordered_triples(shapes.len(), |i, j, k| {
        !config.weight_filter
            || shapes[i].weight() + shapes[j].weight() + shapes[k].weight() == stair.weight()
    });

    let oracle_c = unordered_values(&indices, |&(i, j, k)| {
        engine.oracle().sym_c(&shapes[i], &shapes[j], &shapes[k], stair)
    })?;
    let oracle_d = unordered_values(&indices, |&(i, j, k)| {
        engine.oracle().sym_d(&shapes[i], &shapes[j], &shapes[k], stair)
    })?;

    let opts = CheckOptions {
        tables: config.tables,
        fail_fast: true,
    };
    let outcomes: Vec<Option<Disagreement>> = indices
        .par_iter()
        .map(|&(i, j, k)| -> Result<Option<Disagreement>, Error> {
            let (lambda, mu, nu) = (&shapes[i], &shapes[j], &shapes[k]);
            let key = sorted_key(i, j, k);
            let c = oracle_c[&key];
            let d = oracle_d[&key];
            let expected = c != 0;
            let mut verdicts = BTreeMap::new();
            let mut failed = Vec::new();
            if (c != 0) != (d != 0) {
                failed.push("oracle-c-vs-d".to_string());
            }
            for system in systems {
                let verdict = match system {
                    StairSystem::TypeC => engine.type_c_feasible(lambda, mu, nu, stair, &opts)?,
                    StairSystem::TypeD => engine.type_d_feasible(lambda, mu, nu, stair, &opts)?,
                };
                verdicts.insert(system.name().to_string(), verdict.feasible);
                if verdict.feasible != expected {
                    failed.push(system.name().to_string());
                }
            }
            if systems.contains(&StairSystem::TypeC)
                && systems.contains(&StairSystem::TypeD)
                && verdicts["type-c"] != verdicts["type-d"]
            {
                failed.push("type-c-vs-type-d".to_string());
            }
            Ok(build_disagreement(
                lambda.as_partition(),
                mu.as_partition(),
                nu.as_partition(),
                c,
                Some(d),
                verdicts,
                failed,
            ))
        })
        .collect::<Result<_, Error>>()?;

    Ok(assemble_report(
        stair.to_string(),
        systems.iter().map(|s| s.name().to_string()).collect(),
        outcomes,
        start,
        config,
    ))
}

/// Evaluates the frozen reference values for the four crossing statistics
/// and their index sets. Any mismatch is a fatal disagreement.
pub fn fixture_check() -> Result<SweepReport, Error> {
    let start = Instant::now();
    let parse = |s: &str| -> Partition { s.parse().expect("fixture partitions are valid") };
    let mut checks: Vec<(String, String, String)> = Vec::new();

    let index_fixtures: [(&str, u32, u32, &[u32]); 4] = [
        ("3,1,1", 7, 3, &[2, 5, 6]),
        ("4,1,0", 8, 3, &[2, 6, 8]),
        ("4,2,2,0", 8, 4, &[1, 4, 5, 8]),
        ("4,2,2,0", 9, 4, &[2, 5, 6, 9]),
    ];
    for (alpha, ambient, r, expected) in index_fixtures {
        let got = IndexSet::from_partition(&parse(alpha), ambient, r)?;
        checks.push((
            format!("index-set({alpha}; N={ambient}, r={r})"),
            format!("{:?}", expected),
            format!("{:?}", got.elements()),
        ));
    }

    let rect = Rectangle::new(7, 8)?;
    let lam = parse("8,6,5,4,3,1,0");
    let rows = rows_stat(&lam, rect, &parse("3,1,1"), 3)?;
    checks.push(("rows(8654310; 7x8; 311; r=3)".into(), "15".into(), rows.to_string()));

    let rows_cols = rows_cols_stat(&lam, rect, &parse("3,1,1"), &parse("4,1,0"), 3)?;
    checks.push((
        "rows-cols(8654310; 7x8; 311, 410; r=3)".into(),
        "8".into(),
        rows_cols.to_string(),
    ));

    let stair = Staircase::new(8)?;
    let slam = StrictPartition::new(vec![8, 6, 4, 3])?;
    let inner = inner_corner_stat(&slam, stair, &parse("4,2,2,0"), 4)?;
    checks.push(("inner(8643; L8; 4220; r=4)".into(), "6".into(), inner.to_string()));

    let outer = outer_corner_stat(&slam, stair, &parse("4,2,2,0"), 4)?;
    checks.push(("outer(8643; L8; 4220; r=4)".into(), "5".into(), outer.to_string()));

    let total = checks.len() as u64;
    let disagreements: Vec<Disagreement> = checks
        .into_iter()
        .filter(|(_, expected, got)| expected != got)
        .map(|(name, expected, got)| Disagreement {
            lambda: Partition::empty(),
            mu: Partition::empty(),
            nu: Partition::empty(),
            oracle: 0,
            oracle_d: None,
            verdicts: BTreeMap::new(),
            failed: vec![format!("{name}: expected {expected}, got {got}")],
        })
        .collect();
    let agree = total - disagreements.len() as u64;
    Ok(SweepReport {
        shape: "fixtures".to_string(),
        systems: vec!["fixtures".to_string()],
        total,
        agree,
        disagreements,
        duration_ms: start.elapsed().as_millis() as u64,
        config: SweepConfig::default(),
    })
}

fn ordered_triples(
    count: usize,
    keep: impl Fn(usize, usize, usize) -> bool,
) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..count {
        for j in 0..count {
            for k in 0..count {
                if keep(i, j, k) {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

fn sorted_key(i: usize, j: usize, k: usize) -> (usize, usize, usize) {
    let mut v = [i, j, k];
    v.sort_unstable();
    (v[0], v[1], v[2])
}

fn unordered_values(
    indices: &[(usize, usize, usize)],
    eval: impl Fn(&(usize, usize, usize)) -> Result<u64, Error> + Sync,
) -> Result<HashMap<(usize, usize, usize), u64>, Error> {
    let mut keys: Vec<(usize, usize, usize)> = indices
        .iter()
        .map(|&(i, j, k)| sorted_key(i, j, k))
        .collect();
    keys.sort_unstable();
    keys.dedup();
    keys.par_iter()
        .map(|key| Ok((*key, eval(key)?)))
        .collect::<Result<HashMap<_, _>, Error>>()
}

fn build_disagreement(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    oracle: u64,
    oracle_d: Option<u64>,
    verdicts: BTreeMap<String, bool>,
    failed: Vec<String>,
) -> Option<Disagreement> {
    if failed.is_empty() {
        return None;
    }
    Some(Disagreement {
        lambda: lambda.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        oracle,
        oracle_d,
        verdicts,
        failed,
    })
}

fn assemble_report(
    shape: String,
    systems: Vec<String>,
    outcomes: Vec<Option<Disagreement>>,
    start: Instant,
    config: &SweepConfig,
) -> SweepReport {
    let total = outcomes.len() as u64;
    let disagreements: Vec<Disagreement> = outcomes.into_iter().flatten().collect();
    let agree = total - disagreements.len() as u64;
    SweepReport {
        shape,
        systems,
        total,
        agree,
        disagreements,
        duration_ms: start.elapsed().as_millis() as u64,
        config: config.clone(),
    }
}
