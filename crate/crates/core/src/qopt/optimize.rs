use serde::Serialize;

use super::decompose::{decompose_gate, network_variants};
use super::rules::{merge, try_swap, Merge};
use super::{ElemCircuit, ElemGate, Unitary};
use crate::error::{Error, Result};
use crate::gate::Circuit;

pub const DEFAULT_PASS_LIMIT: u32 = 100;

/// Largest register whose unitary is built for the final equivalence check.
pub const MAX_VERIFY_WIRES: u8 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OptimizeOptions {
    /// Cap on merge/swap iterations per fixpoint run.
    pub pass_limit: u32,
    /// Choose among equivalent gate networks greedily, gate by gate.
    pub variants: bool,
}

impl Default for OptimizeOptions {
    fn default() -> Self {
        OptimizeOptions {
            pass_limit: DEFAULT_PASS_LIMIT,
            variants: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CostReport {
    pub before: u32,
    pub after: u32,
    pub passes: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Optimized {
    pub circuit: ElemCircuit,
    pub report: CostReport,
}

fn cost(gates: &[ElemGate]) -> u32 {
    gates.iter().map(ElemGate::cost).sum()
}

/// Replaces positions `i` and `i + 1` by their merge.
fn fuse_at(gates: &mut Vec<ElemGate>, i: usize, m: Merge) {
    match m {
        Merge::Identity => {
            gates.drain(i..i + 2);
        }
        Merge::Gate(g) => {
            gates[i] = g;
            gates.remove(i + 1);
        }
    }
}

/// Greedy left-to-right fusion of adjacent pairs, cascading into the
/// already-processed prefix. Returns the number of merges.
fn merge_sweep(gates: &mut Vec<ElemGate>) -> usize {
    let mut out: Vec<ElemGate> = Vec::with_capacity(gates.len());
    let mut merges = 0;
    for &g in gates.iter() {
        let mut cur = Some(g);
        while let (Some(c), Some(top)) = (cur, out.last()) {
            match merge(top, &c) {
                Some(Merge::Identity) => {
                    out.pop();
                    cur = None;
                }
                Some(Merge::Gate(m)) => {
                    out.pop();
                    cur = Some(m);
                }
                None => break,
            }
            merges += 1;
        }
        out.extend(cur);
    }
    *gates = out;
    merges
}

/// Finds one mergeable pair separated only by gates that commute with one of
/// them, moves that gate next to its partner and fuses the pair.
fn swap_merge_once(gates: &mut Vec<ElemGate>) -> bool {
    for j in 1..gates.len() {
        for i in (0..j).rev() {
            if let Some(m) = merge(&gates[i], &gates[j]) {
                let g = gates.remove(j);
                gates.insert(i + 1, g);
                fuse_at(gates, i, m);
                return true;
            }
            if !try_swap(&gates[i], &gates[j]) {
                break;
            }
        }
    }
    for i in 0..gates.len() {
        for j in i + 1..gates.len() {
            if let Some(m) = merge(&gates[i], &gates[j]) {
                let g = gates.remove(i);
                gates.insert(j - 1, g);
                fuse_at(gates, j - 1, m);
                return true;
            }
            if !try_swap(&gates[i], &gates[j]) {
                break;
            }
        }
    }
    false
}

/// One bubble sweep: keeps applying swap-enabled merges until none is left.
fn swap_sweep(gates: &mut Vec<ElemGate>) -> usize {
    let mut n = 0;
    while swap_merge_once(gates) {
        n += 1;
    }
    n
}

/// Alternates merge and swap sweeps until an iteration changes nothing.
fn fixpoint(gates: &mut Vec<ElemGate>, limit: u32) -> Result<u32> {
    let mut passes = 0;
    loop {
        if passes == limit {
            return Err(Error::PassLimit(limit));
        }
        passes += 1;
        let merged = merge_sweep(gates);
        let swapped = swap_sweep(gates);
        if merged == 0 && swapped == 0 {
            return Ok(passes);
        }
    }
}

fn verify(circuit: &Circuit, gates: &[ElemGate]) -> Result<()> {
    let n = circuit.wires();
    if n > MAX_VERIFY_WIRES {
        return Err(Error::UnsupportedWires(n.into()));
    }
    let want = Unitary::from_permutation(&circuit.permutation()?);
    let got = Unitary::of(&ElemCircuit::from_parts_unchecked(n, gates.to_vec()));
    if got == want {
        Ok(())
    } else {
        Err(Error::NotEquivalent)
    }
}

/// Decomposes a reversible circuit over N, C, T3, P and R3, applies the merge
/// and swap rules to a fixpoint, and checks exact unitary equivalence.
pub fn optimize(c: &Circuit) -> Result<Optimized> {
    optimize_with(c, OptimizeOptions::default())
}

pub fn optimize_with(c: &Circuit, opts: OptimizeOptions) -> Result<Optimized> {
    let mut before = 0;
    let mut passes = 0;
    let mut cur: Vec<ElemGate> = Vec::new();
    if opts.variants {
        for g in c.gates() {
            let mut best: Option<(u32, Vec<ElemGate>)> = None;
            for net in network_variants(g)? {
                let mut cand = cur.clone();
                cand.extend(net);
                passes += fixpoint(&mut cand, opts.pass_limit)?;
                let k = cost(&cand);
                if best.as_ref().is_none_or(|(b, _)| k < *b) {
                    best = Some((k, cand));
                }
            }
            before += cost(&decompose_gate(g)?);
            cur = best.expect("every gate has a network").1;
        }
    } else {
        for g in c.gates() {
            cur.extend(decompose_gate(g)?);
        }
        before = cost(&cur);
        passes = fixpoint(&mut cur, opts.pass_limit)?;
    }
    verify(c, &cur)?;
    let after = cost(&cur);
    Ok(Optimized {
        circuit: ElemCircuit::from_parts_unchecked(c.wires(), cur),
        report: CostReport { before, after, passes },
    })
}

/// Applies the rules to an elementary circuit as given.
pub fn optimize_elementary(ec: &ElemCircuit, pass_limit: u32) -> Result<Optimized> {
    let mut gates = ec.gates().to_vec();
    let before = cost(&gates);
    let passes = fixpoint(&mut gates, pass_limit)?;
    let out = ElemCircuit::from_parts_unchecked(ec.wires(), gates);
    if ec.wires() <= MAX_VERIFY_WIRES && Unitary::of(&out) != Unitary::of(ec) {
        return Err(Error::NotEquivalent);
    }
    let after = out.cost();
    Ok(Optimized {
        circuit: out,
        report: CostReport { before, after, passes },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate::gate;

    fn circuit(gates: &[&str]) -> Circuit {
        Circuit::new(3, gates.iter().map(|g| gate(g)).collect()).unwrap()
    }

    #[test]
    fn single_r3_keeps_cost_four() {
        let o = optimize(&circuit(&["R3 1 2 3"])).unwrap();
        assert_eq!(o.report.before, 4);
        assert_eq!(o.report.after, 4);
        assert_eq!(o.circuit.len(), 5);
    }

    #[test]
    fn toffoli_pair_cancels() {
        let o = optimize(&circuit(&["T3 1 2 3", "T3 1 2 3"])).unwrap();
        assert_eq!(o.report.before, 10);
        assert_eq!(o.report.after, 0);
        assert!(o.circuit.is_empty());
    }

    #[test]
    fn empty_circuit() {
        let o = optimize(&circuit(&[])).unwrap();
        assert_eq!(o.report, CostReport { before: 0, after: 0, passes: 0 });
    }

    #[test]
    fn toffoli_then_cnot_is_peres() {
        let o = optimize(&circuit(&["T3 1 2 3", "C 1 2"])).unwrap();
        assert_eq!(o.report.after, 4);
    }

    #[test]
    fn elementary_rules_to_fixpoint() {
        let ec = ElemCircuit::new(
            3,
            ["V 1 2", "C 1 3", "V 1 2", "N 3", "N 3"].iter().map(|s| s.parse().unwrap()).collect(),
        )
        .unwrap();
        let o = optimize_elementary(&ec, DEFAULT_PASS_LIMIT).unwrap();
        let text: Vec<String> = o.circuit.gates().iter().map(|g| g.to_string()).collect();
        assert_eq!(text, ["C 1 2", "C 1 3"]);
    }

    #[test]
    fn pass_limit_is_reported() {
        let ec = ElemCircuit::new(2, vec!["V 1 2".parse().unwrap(); 4]).unwrap();
        assert_eq!(optimize_elementary(&ec, 0), Err(Error::PassLimit(0)));
    }
}
