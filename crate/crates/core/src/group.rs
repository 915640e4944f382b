//! Subgroup closure of gate sets and exhaustive sub-library analysis.
//!
//! For registers of up to 3 wires every permutation has a dense Lehmer rank,
//! so a subgroup is a bitset over at most 40320 slots and closure is a
//! breadth-first orbit of the identity under right multiplication.

use std::collections::{HashMap, HashSet, VecDeque};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gate::{binomial, GateInstance, Library};
use crate::perm::Permutation;
use crate::rank::RankSpace;

/// Default element cap for closures computed without ranking (`n >= 4`).
pub const HASH_CLOSURE_CAP: usize = 1 << 22;

/// Largest library accepted by [`analyze_sublibraries`].
pub const MAX_SUBLIBRARY_GATES: usize = 21;

/// The subgroup generated by a set of permutations.
#[derive(Debug, Clone)]
pub struct ClosureResult {
    pub wires: u8,
    pub size: u64,
    pub universal: bool,
    /// Membership by Lehmer rank; present for registers of at most 3 wires.
    pub members: Option<FixedBitSet>,
}

impl ClosureResult {
    pub fn contains(&self, p: &Permutation) -> Option<bool> {
        let space = RankSpace::new(p.wires())?;
        self.members
            .as_ref()
            .map(|m| m.contains(space.rank_of(p) as usize))
    }
}

/// Order of the full symmetric group on `2^n` states, when it fits in a `u64`.
pub fn full_group_order(wires: u8) -> Option<u64> {
    let degree = 1u64.checked_shl(wires.into())?;
    (1..=degree).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

pub fn closure(generators: &[Permutation]) -> Result<ClosureResult> {
    closure_with_cap(generators, HASH_CLOSURE_CAP)
}

/// Closure with an explicit element cap for the unranked (`n >= 4`) path.
pub fn closure_with_cap(generators: &[Permutation], cap: usize) -> Result<ClosureResult> {
    let first = generators.first().ok_or(Error::EmptyGenerators)?;
    let wires = first.wires();
    if let Some(g) = generators.iter().find(|g| g.wires() != wires) {
        return Err(Error::WireMismatch(wires, g.wires()));
    }
    match RankSpace::new(wires) {
        Some(space) => {
            let tables: Vec<Vec<u16>> = generators
                .iter()
                .map(|g| space.right_mul_table(g))
                .collect();
            let refs: Vec<&[u16]> = tables.iter().map(Vec::as_slice).collect();
            let members = ranked_closure(&space, &refs);
            let size = members.count_ones(..) as u64;
            Ok(ClosureResult {
                wires,
                size,
                universal: size == space.order() as u64,
                members: Some(members),
            })
        }
        None => {
            let id = Permutation::identity(wires)?;
            let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
            let mut queue = VecDeque::from([id]);
            while let Some(p) = queue.pop_front() {
                for g in generators {
                    let q = p.compose(g)?;
                    if !seen.contains(&q) {
                        if seen.len() >= cap {
                            return Err(Error::ClosureTooLarge(cap));
                        }
                        seen.insert(q.clone());
                        queue.push_back(q);
                    }
                }
            }
            let size = seen.len() as u64;
            Ok(ClosureResult {
                wires,
                size,
                universal: full_group_order(wires) == Some(size),
                members: None,
            })
        }
    }
}

fn ranked_closure(space: &RankSpace, tables: &[&[u16]]) -> FixedBitSet {
    let mut members = FixedBitSet::with_capacity(space.order());
    members.insert(space.identity_rank() as usize);
    extend_group(&mut members, vec![space.identity_rank() as u16], tables);
    members
}

/// Grows `members` (already closed under some of `tables`) to the closure
/// under all of `tables`, starting the search from `frontier`.
fn extend_group(members: &mut FixedBitSet, frontier: Vec<u16>, tables: &[&[u16]]) {
    let mut queue = frontier;
    while let Some(x) = queue.pop() {
        for t in tables {
            let y = t[x as usize] as usize;
            if !members.put(y) {
                queue.push(y as u16);
            }
        }
    }
}

pub fn is_universal(gates: &[GateInstance], n: u8) -> Result<bool> {
    let perms = gates
        .iter()
        .map(|g| g.semantics(n))
        .collect::<Result<Vec<_>>>()?;
    Ok(closure(&perms)?.universal)
}

/// Exhaustive universality statistics over all subsets of a library.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubLibraryReport {
    pub library: String,
    pub library_size: usize,
    pub total_subsets: u64,
    pub universal_subsets: u64,
    pub utilization_percent: f64,
    pub min_universal_size: Option<usize>,
    pub subsets_at_min_size: u64,
    pub universal_at_min_size: u64,
    pub min_utilization_percent: f64,
    /// Gate names of each minimal universal subset (when requested).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_subsets: Option<Vec<Vec<String>>>,
    /// Closure computations actually run (the rest were settled by
    /// monotonicity or cached subgroup extension).
    #[serde(skip)]
    pub closures_computed: u64,
}

/// Percentage rounded half-up to 3 decimals.
pub fn percent(part: u64, whole: u64) -> f64 {
    if whole == 0 {
        return 0.0;
    }
    let scaled = (part as u128 * 100_000 * 2 + whole as u128) / (whole as u128 * 2);
    scaled as f64 / 1000.0
}

/// Per-subset universality flags for a library, indexed by gate bitmask.
struct SubsetLattice {
    universal: FixedBitSet,
    closures_computed: u64,
}

/// Sweeps subsets in increasing bitmask order (every child of a mask is
/// smaller than it). A subset with a universal child is universal. Otherwise
/// its subgroup is the subgroup of `mask - lowest gate` extended by that
/// gate; extensions are memoized on (subgroup, gate).
fn sweep_pruned(space: &RankSpace, tables: &[Vec<u16>]) -> SubsetLattice {
    let l = tables.len();
    let total = 1usize << l;
    let full = space.order();
    let mut universal = FixedBitSet::with_capacity(total);
    let mut group_of = vec![0u32; total];

    let mut groups: Vec<FixedBitSet> = Vec::new();
    let mut group_size: Vec<usize> = Vec::new();
    let mut index: HashMap<FixedBitSet, u32> = HashMap::new();
    let mut memo: HashMap<(u32, u8), u32> = HashMap::new();
    let mut closures_computed = 0;

    let mut trivial = FixedBitSet::with_capacity(full);
    trivial.insert(space.identity_rank() as usize);
    index.insert(trivial.clone(), 0);
    groups.push(trivial);
    group_size.push(1);

    for mask in 1..total {
        let mut rest = mask;
        let mut child_universal = false;
        while rest != 0 {
            let b = rest.trailing_zeros();
            rest &= rest - 1;
            if universal.contains(mask ^ (1 << b)) {
                child_universal = true;
                break;
            }
        }
        if child_universal {
            universal.insert(mask);
            continue;
        }
        let low = mask.trailing_zeros() as u8;
        let parent = group_of[mask ^ (1 << low)];
        let gid = match memo.get(&(parent, low)) {
            Some(&g) => g,
            None => {
                let g = if groups[parent as usize].contains(tables[low as usize][0] as usize) {
                    parent
                } else {
                    closures_computed += 1;
                    let mut members = groups[parent as usize].clone();
                    let frontier: Vec<u16> = members.ones().map(|r| r as u16).collect();
                    let gens: Vec<&[u16]> = (0..l)
                        .filter(|&i| mask >> i & 1 == 1)
                        .map(|i| tables[i].as_slice())
                        .collect();
                    extend_group(&mut members, frontier, &gens);
                    match index.get(&members) {
                        Some(&id) => id,
                        None => {
                            let id = groups.len() as u32;
                            group_size.push(members.count_ones(..));
                            index.insert(members.clone(), id);
                            groups.push(members);
                            id
                        }
                    }
                };
                memo.insert((parent, low), g);
                g
            }
        };
        group_of[mask] = gid;
        if group_size[gid as usize] == full {
            universal.insert(mask);
        }
    }
    SubsetLattice {
        universal,
        closures_computed,
    }
}

/// Direct closure of every subset; reference path for small libraries.
fn sweep_naive(space: &RankSpace, tables: &[Vec<u16>]) -> SubsetLattice {
    let l = tables.len();
    let total = 1usize << l;
    let mut universal = FixedBitSet::with_capacity(total);
    for mask in 1..total {
        let gens: Vec<&[u16]> = (0..l)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| tables[i].as_slice())
            .collect();
        if ranked_closure(space, &gens).count_ones(..) == space.order() {
            universal.insert(mask);
        }
    }
    SubsetLattice {
        universal,
        closures_computed: total as u64 - 1,
    }
}

/// Options for [`analyze_sublibraries_with`].
#[derive(Debug, Clone, Copy, Default)]
pub struct SubLibraryOptions {
    pub list_minimal: bool,
    /// Compute every subset's closure directly instead of pruning.
    pub naive: bool,
}

pub fn analyze_sublibraries(lib: &Library) -> Result<SubLibraryReport> {
    analyze_sublibraries_with(lib, SubLibraryOptions::default())
}

pub fn analyze_sublibraries_with(
    lib: &Library,
    opts: SubLibraryOptions,
) -> Result<SubLibraryReport> {
    let l = lib.len();
    if l > MAX_SUBLIBRARY_GATES {
        return Err(Error::LibraryTooLarge {
            name: lib.name().to_string(),
            size: l,
            max: MAX_SUBLIBRARY_GATES,
        });
    }
    let space = RankSpace::new(lib.wires()).ok_or(Error::SearchWires(lib.wires()))?;
    let tables: Vec<Vec<u16>> = lib
        .permutations()?
        .iter()
        .map(|p| space.right_mul_table(p))
        .collect();
    let lattice = if opts.naive {
        sweep_naive(&space, &tables)
    } else {
        sweep_pruned(&space, &tables)
    };

    let total = 1u64 << l;
    let universal_subsets = lattice.universal.count_ones(..) as u64;
    let mut by_size = vec![0u64; l + 1];
    for mask in lattice.universal.ones() {
        by_size[(mask as u64).count_ones() as usize] += 1;
    }
    let min_size = by_size.iter().position(|&c| c > 0);
    let (subsets_at_min, universal_at_min) = match min_size {
        Some(k) => (binomial(l as u32, k as u32) as u64, by_size[k]),
        None => (0, 0),
    };
    let minimal_subsets = match (opts.list_minimal, min_size) {
        (true, Some(k)) => Some(
            lattice
                .universal
                .ones()
                .filter(|m| (*m as u64).count_ones() as usize == k)
                .map(|m| {
                    (0..l)
                        .filter(|i| m >> i & 1 == 1)
                        .map(|i| lib.gates()[i].to_string())
                        .collect()
                })
                .collect(),
        ),
        (true, None) => Some(Vec::new()),
        _ => None,
    };
    Ok(SubLibraryReport {
        library: lib.name().to_string(),
        library_size: l,
        total_subsets: total,
        universal_subsets,
        utilization_percent: percent(universal_subsets, total),
        min_universal_size: min_size,
        subsets_at_min_size: subsets_at_min,
        universal_at_min_size: universal_at_min,
        min_utilization_percent: percent(universal_at_min, subsets_at_min),
        minimal_subsets,
        closures_computed: lattice.closures_computed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate::{enumerate_gates, gate, GateKind};

    fn kind_perms(kind: GateKind) -> Vec<Permutation> {
        enumerate_gates(kind, 3)
            .unwrap()
            .iter()
            .map(|g| g.semantics(3).unwrap())
            .collect()
    }

    #[test]
    fn small_closures() {
        assert_eq!(closure(&kind_perms(GateKind::N)).unwrap().size, 8);
        assert_eq!(closure(&kind_perms(GateKind::C)).unwrap().size, 168);
        assert_eq!(closure(&kind_perms(GateKind::T(3))).unwrap().size, 24);
        assert_eq!(closure(&kind_perms(GateKind::F)).unwrap().size, 6);
        let id = Permutation::identity(3).unwrap();
        let r = closure(&[id]).unwrap();
        assert_eq!(r.size, 1);
        assert!(!r.universal);
    }

    #[test]
    fn closure_errors() {
        assert!(matches!(closure(&[]), Err(Error::EmptyGenerators)));
        let a = Permutation::identity(2).unwrap();
        let b = Permutation::identity(3).unwrap();
        assert!(matches!(closure(&[a, b]), Err(Error::WireMismatch(2, 3))));
    }

    #[test]
    fn hashed_path_for_four_wires() {
        let gens: Vec<Permutation> = enumerate_gates(GateKind::N, 4)
            .unwrap()
            .iter()
            .map(|g| g.semantics(4).unwrap())
            .collect();
        let r = closure(&gens).unwrap();
        assert_eq!(r.size, 16);
        assert!(r.members.is_none());
        let c4: Vec<Permutation> = enumerate_gates(GateKind::C, 4)
            .unwrap()
            .iter()
            .map(|g| g.semantics(4).unwrap())
            .collect();
        assert!(matches!(
            closure_with_cap(&c4, 100),
            Err(Error::ClosureTooLarge(100))
        ));
    }

    #[test]
    fn two_r3_gates_are_universal() {
        assert!(is_universal(&[gate("R3 1 3 2"), gate("R3 2 1 3")], 3).unwrap());
        assert!(!is_universal(&[gate("R3 1 2 3")], 3).unwrap());
    }

    #[test]
    fn membership_query() {
        let r = closure(&kind_perms(GateKind::T(3))).unwrap();
        let t = Permutation::from_cycles("(7,8)", 3).unwrap();
        let n1 = Permutation::from_cycles("(1,5)(2,6)(3,7)(4,8)", 3).unwrap();
        assert_eq!(r.contains(&t), Some(true));
        assert_eq!(r.contains(&n1), Some(false));
    }

    #[test]
    fn percent_rounding() {
        assert_eq!(percent(55, 64), 85.938);
        assert_eq!(percent(1, 3), 33.333);
        assert_eq!(percent(2, 3), 66.667);
        assert_eq!(percent(0, 0), 0.0);
    }

    #[test]
    fn oversized_library_rejected() {
        let gates: Vec<GateInstance> = ["N", "C", "T3", "P", "F", "G3"]
            .iter()
            .flat_map(|k| enumerate_gates(k.parse().unwrap(), 3).unwrap())
            .collect();
        let lib = Library::new("BIG", 3, gates).unwrap();
        assert!(matches!(
            analyze_sublibraries(&lib),
            Err(Error::LibraryTooLarge { size: 27, .. })
        ));
    }

    #[test]
    fn pruned_matches_naive() {
        for (name, universal, at_min) in [("NT", 4, 3), ("G3", 51, 9), ("R3", 54, 12), ("NCT", 1960, 21)] {
            let lib = Library::named(name).unwrap();
            let a = analyze_sublibraries(&lib).unwrap();
            let b = analyze_sublibraries_with(
                &lib,
                SubLibraryOptions {
                    naive: true,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(a.universal_subsets, universal, "{name}");
            assert_eq!(a.universal_subsets, b.universal_subsets, "{name}");
            assert_eq!(a.universal_at_min_size, at_min, "{name}");
            assert_eq!(a.universal_at_min_size, b.universal_at_min_size, "{name}");
            assert!(a.closures_computed <= b.closures_computed, "{name}");
        }
    }
}
