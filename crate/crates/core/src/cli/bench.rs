//! Random-query benchmark with oracle cross-checking.

use anyhow::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Baseline, PolicyName};
use crate::mesh::{HalfEdgeId, Mesh};
use crate::oracle::{brute_force_locate, link_distance_stats, sample_queries};
use crate::walk::{bootstrap, locate, visibility_walk_baseline, WalkConfig, WalkError, WalkResult};

#[derive(Debug, Clone)]
pub struct BenchOptions {
    pub queries: usize,
    pub seed: u64,
    pub policies: Vec<PolicyName>,
    pub baseline: Option<Baseline>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Sample {
    steps: usize,
    atomic_ops: usize,
    /// `None` for the baseline, which has no neighbourhood bound.
    utilization: Option<f64>,
    agrees: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub policy: String,
    pub queries: usize,
    pub mean_steps: f64,
    pub median_steps: f64,
    pub max_steps: usize,
    pub mean_atomic_ops: f64,
    pub mean_bound_utilization: Option<f64>,
    pub max_bound_utilization: Option<f64>,
    pub oracle_agreement: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

pub const CSV_HEADER: [&str; 9] = [
    "policy",
    "queries",
    "mean_steps",
    "median_steps",
    "max_steps",
    "mean_atomic_ops",
    "mean_bound_utilization",
    "max_bound_utilization",
    "oracle_agreement",
];

impl BenchReport {
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER)?;
        let opt = |v: Option<f64>| v.map_or_else(|| "NA".to_string(), |x| format!("{x:.6}"));
        for r in &self.rows {
            w.write_record([
                r.policy.clone(),
                r.queries.to_string(),
                format!("{:.6}", r.mean_steps),
                format!("{:.6}", r.median_steps),
                r.max_steps.to_string(),
                format!("{:.6}", r.mean_atomic_ops),
                opt(r.mean_bound_utilization),
                opt(r.max_bound_utilization),
                r.oracle_agreement.to_string(),
            ])?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }
}

fn summarize(policy: &str, samples: &[Sample]) -> BenchRow {
    let n = samples.len();
    let mut steps: Vec<usize> = samples.iter().map(|s| s.steps).collect();
    steps.sort_unstable();
    let median = match n {
        0 => 0.0,
        _ if n % 2 == 1 => steps[n / 2] as f64,
        _ => (steps[n / 2 - 1] + steps[n / 2]) as f64 / 2.0,
    };
    let mean = |xs: &mut dyn Iterator<Item = f64>| if n == 0 { 0.0 } else { xs.sum::<f64>() / n as f64 };
    let utils: Option<Vec<f64>> = samples.iter().map(|s| s.utilization).collect();
    BenchRow {
        policy: policy.to_string(),
        queries: n,
        mean_steps: mean(&mut samples.iter().map(|s| s.steps as f64)),
        median_steps: median,
        max_steps: steps.last().copied().unwrap_or(0),
        mean_atomic_ops: mean(&mut samples.iter().map(|s| s.atomic_ops as f64)),
        mean_bound_utilization: utils.as_ref().map(|u| mean(&mut u.iter().copied())),
        max_bound_utilization: utils.map(|u| u.into_iter().fold(0.0, f64::max)),
        oracle_agreement: samples.iter().filter(|s| s.agrees).count(),
    }
}

fn agrees(m: &Mesh, result: &WalkResult, p: crate::geometry2d::Point2) -> bool {
    result.found_face().is_some_and(|f| brute_force_locate(m, p).contains(f))
}

/// Runs `opts.queries` in-mesh queries from random start half-edges for each
/// policy (and the baseline, if requested). Rows and samples are ordered by
/// policy and query index regardless of thread scheduling.
pub fn run(m: &Mesh, opts: &BenchOptions) -> Result<BenchReport> {
    let points = sample_queries(m, opts.queries, opts.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed_57a7);
    let starts: Vec<HalfEdgeId> =
        (0..opts.queries).map(|_| HalfEdgeId(rng.gen_range(0..m.num_half_edges() as u32))).collect();

    let mut rows = Vec::new();
    for &name in &opts.policies {
        let samples = (0..opts.queries)
            .into_par_iter()
            .map(|i| -> Result<Sample> {
                let p = points[i];
                let policy = name.policy(opts.seed.wrapping_add(i as u64));
                let cfg = WalkConfig::with_policy(policy).traced();
                let walk = locate(m, starts[i], p, &cfg)?;
                let stats = link_distance_stats(walk.trace.as_ref().expect("traced"));
                let bound = match bootstrap(m, starts[i], p) {
                    Ok(e) => m.neighborhood_size(e, p)?,
                    Err(WalkError::PointOnEdge | WalkError::BoundaryStart(_)) => 1,
                    Err(e) => return Err(e.into()),
                };
                Ok(Sample {
                    steps: stats.steps,
                    atomic_ops: stats.atomic_ops,
                    utilization: Some(stats.steps as f64 / bound.max(1) as f64),
                    agrees: agrees(m, &walk.result, p),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(summarize(name.policy(0).name(), &samples));
    }
    if let Some(Baseline::Visibility) = opts.baseline {
        let samples = (0..opts.queries)
            .into_par_iter()
            .map(|i| -> Result<Sample> {
                let p = points[i];
                let w = visibility_walk_baseline(m, starts[i], p, opts.seed.wrapping_add(i as u64))?;
                Ok(Sample {
                    steps: w.result.steps(),
                    atomic_ops: w.atomic_ops,
                    utilization: None,
                    agrees: agrees(m, &w.result, p),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(summarize("visibility", &samples));
    }
    Ok(BenchReport { rows })
}
