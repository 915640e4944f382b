use rayon::prelude::*;
use serde::Serialize;

use super::optimize::optimize;
use crate::error::Result;
use crate::gate::{Circuit, CostModel, Library};
use crate::synth::{histogram_average, min_cost_pair_aware};

/// Cost saved by optimizing each two-gate cascade `[g_i, g_j]` of `lib`.
pub fn pair_savings(lib: &Library, cost: &CostModel) -> Result<Vec<Vec<u32>>> {
    let gates = lib.gates();
    gates
        .iter()
        .map(|h| {
            gates
                .iter()
                .map(|g| {
                    let plain = cost.cost(h.kind())? + cost.cost(g.kind())?;
                    let c = Circuit::new(lib.wires(), vec![h.clone(), g.clone()])?;
                    Ok(plain - optimize(&c)?.report.after)
                })
                .collect()
        })
        .collect()
}

/// Cost histograms of every 3-bit function before and after optimization.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub library: String,
    pub before: Vec<u64>,
    pub after: Vec<u64>,
}

impl SweepResult {
    pub fn before_average(&self, include_identity: bool) -> f64 {
        histogram_average(&self.before, include_identity)
    }

    pub fn after_average(&self, include_identity: bool) -> f64 {
        histogram_average(&self.after, include_identity)
    }
}

fn histogram(values: impl Iterator<Item = u32>) -> Vec<u64> {
    let mut h = Vec::new();
    for v in values {
        let v = v as usize;
        if h.len() <= v {
            h.resize(v + 1, 0);
        }
        h[v] += 1;
    }
    h
}

/// Optimizes a minimum-cost circuit for every reachable 3-bit function. Among
/// equally cheap circuits the one whose adjacent gates fuse best is used.
pub fn optimization_sweep(lib: &Library, cost: &CostModel) -> Result<SweepResult> {
    let savings = pair_savings(lib, cost)?;
    let table = min_cost_pair_aware(lib, cost, &savings)?;
    let ranks: Vec<u32> = table.ranks().collect();
    let reports = ranks
        .par_iter()
        .map(|&r| optimize(&table.reconstruct_rank(r)?).map(|o| o.report))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult {
        library: lib.name().to_string(),
        before: histogram(reports.iter().map(|r| r.before)),
        after: histogram(reports.iter().map(|r| r.after)),
    })
}
