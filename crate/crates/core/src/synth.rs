//! Exhaustive optimal synthesis over all 40320 reversible 3-bit functions.
//!
//! Both searches run on the Cayley graph of the library: vertices are the
//! ranked permutations, and appending gate `g` to a circuit realizing `p`
//! moves to `compose(p, g)`.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gate::{Circuit, CostModel, GateInstance, Library};
use crate::perm::Permutation;
use crate::rank::RankSpace;

const UNREACHED: u32 = u32::MAX;
const NO_GATE: u8 = u8::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Length,
    Cost,
}

/// Distances and predecessor links for every permutation reached by a search.
#[derive(Debug, Clone)]
pub struct SearchTable {
    library: String,
    metric: Metric,
    space: RankSpace,
    gates: Vec<GateInstance>,
    gate_costs: Vec<u32>,
    value: Vec<u32>,
    pred: Vec<(u16, u8)>,
    reached: usize,
}

impl SearchTable {
    pub fn library(&self) -> &str {
        &self.library
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn reached(&self) -> usize {
        self.reached
    }

    pub fn total(&self) -> usize {
        self.space.order()
    }

    pub fn is_complete(&self) -> bool {
        self.reached == self.total()
    }

    /// `"reachable: k / 40320"` banner for incomplete tables.
    pub fn banner(&self) -> Option<String> {
        (!self.is_complete()).then(|| format!("reachable: {} / {}", self.reached, self.total()))
    }

    pub fn value(&self, target: &Permutation) -> Option<u32> {
        self.value_at_rank(self.space.rank_of(target))
    }

    pub fn value_at_rank(&self, rank: u32) -> Option<u32> {
        let v = self.value[rank as usize];
        (v != UNREACHED).then_some(v)
    }

    pub fn max_value(&self) -> u32 {
        self.value
            .iter()
            .copied()
            .filter(|&v| v != UNREACHED)
            .max()
            .unwrap_or(0)
    }

    /// Count of reached permutations per metric value, `0..=max_value`.
    pub fn histogram(&self) -> Vec<u64> {
        let mut h = vec![0u64; self.max_value() as usize + 1];
        for &v in &self.value {
            if v != UNREACHED {
                h[v as usize] += 1;
            }
        }
        h
    }

    /// Mean metric over all reached permutations (identity included).
    pub fn average(&self) -> f64 {
        histogram_average(&self.histogram(), true)
    }

    /// Mean over reached permutations other than the identity.
    pub fn average_excluding_identity(&self) -> f64 {
        histogram_average(&self.histogram(), false)
    }

    /// Walks predecessor links back from `target` to the identity.
    pub fn reconstruct(&self, target: &Permutation) -> Result<Circuit> {
        if target.wires() != self.space.wires() {
            return Err(Error::WireMismatch(self.space.wires(), target.wires()));
        }
        let rank = self.space.rank_of(target);
        if self.value[rank as usize] == UNREACHED {
            return Err(Error::Unreachable(
                target.to_string(),
                self.library.clone(),
            ));
        }
        self.reconstruct_rank(rank)
    }

    pub fn reconstruct_rank(&self, mut rank: u32) -> Result<Circuit> {
        let mut gates = Vec::new();
        while rank != self.space.identity_rank() {
            let (prev, g) = self.pred[rank as usize];
            if g == NO_GATE {
                return Err(Error::Unreachable(rank.to_string(), self.library.clone()));
            }
            gates.push(self.gates[g as usize].clone());
            rank = prev as u32;
        }
        gates.reverse();
        Circuit::new(self.space.wires(), gates)
    }

    /// Cost of the recorded circuit for `rank` under this table's library costs.
    pub fn recorded_cost(&self, mut rank: u32) -> u32 {
        let mut total = 0;
        while rank != self.space.identity_rank() {
            let (prev, g) = self.pred[rank as usize];
            total += self.gate_costs[g as usize];
            rank = prev as u32;
        }
        total
    }

    pub fn ranks(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.value.len() as u32).filter(|&r| self.value[r as usize] != UNREACHED)
    }

    pub fn space(&self) -> RankSpace {
        self.space
    }
}

/// Mean of a value histogram, optionally dropping one count from bin 0 (the
/// identity).
pub fn histogram_average(hist: &[u64], include_identity: bool) -> f64 {
    let sum: u64 = hist.iter().enumerate().map(|(v, &c)| v as u64 * c).sum();
    let mut count: u64 = hist.iter().sum();
    if !include_identity {
        count = count.saturating_sub(1);
    }
    if count == 0 {
        0.0
    } else {
        sum as f64 / count as f64
    }
}

struct Prepared {
    space: RankSpace,
    tables: Vec<Vec<u16>>,
}

fn prepare(lib: &Library) -> Result<Prepared> {
    if lib.wires() != 3 {
        return Err(Error::SearchWires(lib.wires()));
    }
    let space = RankSpace::new(3).expect("3 wires are ranked");
    let tables = lib
        .permutations()?
        .iter()
        .map(|p| space.right_mul_table(p))
        .collect();
    Ok(Prepared { space, tables })
}

/// Breadth-first search from the identity: minimum gate count per function.
/// Ties keep the first discovery, with gates tried in library order.
pub fn min_length_table(lib: &Library) -> Result<SearchTable> {
    let Prepared { space, tables } = prepare(lib)?;
    let order = space.order();
    let mut value = vec![UNREACHED; order];
    let mut pred = vec![(0u16, NO_GATE); order];
    let start = space.identity_rank();
    value[start as usize] = 0;
    let mut queue = VecDeque::from([start as u16]);
    let mut reached = 1;
    while let Some(x) = queue.pop_front() {
        let d = value[x as usize];
        for (gi, t) in tables.iter().enumerate() {
            let y = t[x as usize];
            if value[y as usize] == UNREACHED {
                value[y as usize] = d + 1;
                pred[y as usize] = (x, gi as u8);
                reached += 1;
                queue.push_back(y);
            }
        }
    }
    Ok(SearchTable {
        library: lib.name().to_string(),
        metric: Metric::Length,
        space,
        gates: lib.gates().to_vec(),
        gate_costs: lib.gate_costs().unwrap_or_else(|_| vec![1; lib.len()]),
        value,
        pred,
        reached,
    })
}

/// Uniform-cost search from the identity: minimum total gate cost per
/// function. Zero-cost gates are fine since all costs are non-negative.
pub fn min_cost_table(lib: &Library, cost: &CostModel) -> Result<SearchTable> {
    let Prepared { space, tables } = prepare(lib)?;
    let costs = lib
        .gates()
        .iter()
        .map(|g| cost.cost(g.kind()))
        .collect::<Result<Vec<_>>>()?;
    let order = space.order();
    let mut value = vec![UNREACHED; order];
    let mut pred = vec![(0u16, NO_GATE); order];
    let mut done = vec![false; order];
    let start = space.identity_rank();
    value[start as usize] = 0;
    let mut heap = BinaryHeap::from([Reverse((0u32, start as u16))]);
    let mut reached = 0;
    while let Some(Reverse((d, x))) = heap.pop() {
        if std::mem::replace(&mut done[x as usize], true) {
            continue;
        }
        reached += 1;
        for (gi, t) in tables.iter().enumerate() {
            let y = t[x as usize];
            let nd = d + costs[gi];
            if nd < value[y as usize] {
                value[y as usize] = nd;
                pred[y as usize] = (x, gi as u8);
                heap.push(Reverse((nd, y)));
            }
        }
    }
    Ok(SearchTable {
        library: lib.name().to_string(),
        metric: Metric::Cost,
        space,
        gates: lib.gates().to_vec(),
        gate_costs: costs,
        value,
        pred,
        reached,
    })
}

/// Minimum-cost circuits chosen with a secondary preference: among all
/// circuits of optimal primary cost, the one with the largest total
/// `bonus[prev][next]` over adjacent gate pairs. Used to pick the circuits
/// handed to the elementary-gate optimizer, where `bonus` is the saving
/// measured on each two-gate cascade.
#[derive(Debug, Clone)]
pub struct PairAwareTable {
    library: String,
    space: RankSpace,
    gates: Vec<GateInstance>,
    /// `(primary, primary - bonus)` per state `rank * (k + 1) + last`.
    dist: Vec<(u32, i64)>,
    pred: Vec<u32>,
    best: Vec<u32>,
}

impl PairAwareTable {
    pub fn library(&self) -> &str {
        &self.library
    }

    fn stride(&self) -> usize {
        self.gates.len() + 1
    }

    /// Optimal primary cost of the permutation with this rank.
    pub fn value_at_rank(&self, rank: u32) -> Option<u32> {
        let d = self.dist[self.best[rank as usize] as usize].0;
        (d != UNREACHED).then_some(d)
    }

    /// Primary cost minus the collected pair bonus.
    pub fn estimate_at_rank(&self, rank: u32) -> Option<i64> {
        self.value_at_rank(rank)
            .map(|_| self.dist[self.best[rank as usize] as usize].1)
    }

    pub fn ranks(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.best.len() as u32).filter(|&r| self.value_at_rank(r).is_some())
    }

    pub fn reconstruct_rank(&self, rank: u32) -> Result<Circuit> {
        if self.value_at_rank(rank).is_none() {
            return Err(Error::Unreachable(rank.to_string(), self.library.clone()));
        }
        let k = self.gates.len();
        let start = self.space.identity_rank() as usize * self.stride() + k;
        let mut s = self.best[rank as usize] as usize;
        let mut gates = Vec::new();
        while s != start {
            gates.push(self.gates[s % self.stride()].clone());
            s = self.pred[s] as usize;
        }
        gates.reverse();
        Circuit::new(self.space.wires(), gates)
    }

    pub fn space(&self) -> RankSpace {
        self.space
    }
}

/// Lexicographic uniform-cost search over (permutation, last gate). Bonuses
/// on zero-cost gates are ignored so every edge stays non-negative in the
/// lexicographic order.
pub fn min_cost_pair_aware(
    lib: &Library,
    cost: &CostModel,
    bonus: &[Vec<u32>],
) -> Result<PairAwareTable> {
    let Prepared { space, tables } = prepare(lib)?;
    let costs = lib
        .gates()
        .iter()
        .map(|g| cost.cost(g.kind()))
        .collect::<Result<Vec<_>>>()?;
    let k = costs.len();
    assert!(bonus.len() == k && bonus.iter().all(|r| r.len() == k), "bonus must be k×k");
    let stride = k + 1;
    let order = space.order();
    let mut dist = vec![(UNREACHED, i64::MAX); order * stride];
    let mut pred = vec![u32::MAX; order * stride];
    let start = space.identity_rank() as usize * stride + k;
    dist[start] = (0, 0);
    let mut heap = BinaryHeap::from([Reverse(((0u32, 0i64), start as u32))]);
    while let Some(Reverse((d, s))) = heap.pop() {
        if d > dist[s as usize] {
            continue;
        }
        let (x, last) = (s as usize / stride, s as usize % stride);
        for (gi, t) in tables.iter().enumerate() {
            let b = if last < k && costs[gi] > 0 { bonus[last][gi] as i64 } else { 0 };
            let nd = (d.0 + costs[gi], d.1 + costs[gi] as i64 - b);
            let y = t[x] as usize * stride + gi;
            if nd < dist[y] {
                dist[y] = nd;
                pred[y] = s;
                heap.push(Reverse((nd, y as u32)));
            }
        }
    }
    let best = (0..order)
        .map(|r| (r * stride..(r + 1) * stride).min_by_key(|&s| dist[s]).unwrap() as u32)
        .collect();
    Ok(PairAwareTable {
        library: lib.name().to_string(),
        space,
        gates: lib.gates().to_vec(),
        dist,
        pred,
        best,
    })
}

/// Convenience wrapper over [`SearchTable::reconstruct`].
pub fn reconstruct(table: &SearchTable, target: &Permutation) -> Result<Circuit> {
    table.reconstruct(target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate::gate;

    #[test]
    fn identity_is_empty_everywhere() {
        let id = Permutation::identity(3).unwrap();
        for name in ["NT", "NCT", "R3"] {
            let lib = Library::named(name).unwrap();
            let t = min_length_table(&lib).unwrap();
            assert_eq!(t.value(&id), Some(0));
            assert!(t.reconstruct(&id).unwrap().is_empty());
        }
    }

    #[test]
    fn single_gate_targets() {
        let nct = Library::named("NCT").unwrap();
        let t = min_length_table(&nct).unwrap();
        let target = Permutation::from_cycles("(7,8)", 3).unwrap();
        let c = t.reconstruct(&target).unwrap();
        assert_eq!(c.gates(), &[gate("T3 1 2 3")]);
        assert_eq!(c.cost(&CostModel::default()).unwrap(), 5);

        let r3 = Library::named("R3").unwrap();
        let t = min_length_table(&r3).unwrap();
        let target = Permutation::from_cycles("(1,7,6,5,4,2,8,3)", 3).unwrap();
        assert_eq!(t.reconstruct(&target).unwrap().gates(), &[gate("R3 1 2 3")]);
    }

    #[test]
    fn nct_length_histogram() {
        let t = min_length_table(&Library::named("NCT").unwrap()).unwrap();
        assert_eq!(
            t.histogram(),
            vec![1, 12, 102, 625, 2780, 8921, 17049, 10253, 577]
        );
        assert!(t.is_complete());
        assert!(t.banner().is_none());
    }

    #[test]
    fn partial_table_for_non_universal_library() {
        let lib = Library::new(
            "C",
            3,
            crate::gate::enumerate_gates(crate::GateKind::C, 3).unwrap(),
        )
        .unwrap();
        let t = min_length_table(&lib).unwrap();
        assert_eq!(t.reached(), 168);
        assert_eq!(t.banner().unwrap(), "reachable: 168 / 40320");
        let outside = Permutation::from_cycles("(7,8)", 3).unwrap();
        assert!(matches!(
            t.reconstruct(&outside),
            Err(Error::Unreachable(..))
        ));
    }

    #[test]
    fn cost_search_rejects_undefined_costs_and_wrong_wires() {
        let lib = Library::new("T4", 4, vec![gate("T4 1 2 3 4")]).unwrap();
        assert!(matches!(min_length_table(&lib), Err(Error::SearchWires(4))));
        let lib = Library::new("X", 3, vec![gate("R3 1 2 3")]).unwrap();
        let model = CostModel::from_pairs([]);
        assert!(matches!(
            min_cost_table(&lib, &model),
            Err(Error::UndefinedCost(_))
        ));
    }

    #[test]
    fn averages() {
        assert_eq!(histogram_average(&[1, 2, 1], true), 1.0);
        assert!((histogram_average(&[1, 2, 1], false) - 4.0 / 3.0).abs() < 1e-12);
    }
}
