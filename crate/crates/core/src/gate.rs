//! Gate families, their permutation semantics, cost model and libraries.
//!
//! Wire tuples follow the subscript convention of the gate names:
//!
//! * `N j` flips `x_j`.
//! * `C j k` flips target `k` when control `j` is set.
//! * `Tk a1 .. ak` flips `ak` when all of `a1 .. a(k-1)` are set.
//! * `F j k l` swaps `k` and `l` when `j` is set.
//! * `P j k l`: `y_k = x_j ^ x_k`, `y_l = x_l ^ x_j x_k`.
//! * `G3 j k l`: as `P`, and additionally `y_j = !x_j`.
//! * `Rk a1 .. ak`: the cascade `Tk .. T4 (a1..), T3 a1 a3 a2, C a1 a3,
//!   N a2, C a2 a1`. For `k <= 3` it is given directly by its equations.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{check_wires, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GateKind {
    /// NOT.
    N,
    /// Feynman (CNOT).
    C,
    /// Generalized Toffoli with `k - 1` controls, `k >= 3`.
    T(u8),
    /// Fredkin.
    F,
    /// Peres.
    P,
    G3,
    /// The `R^k` gate on `k` wires.
    R(u8),
}

impl GateKind {
    pub fn arity(self) -> usize {
        match self {
            GateKind::N => 1,
            GateKind::C => 2,
            GateKind::F | GateKind::P | GateKind::G3 => 3,
            GateKind::T(k) | GateKind::R(k) => k as usize,
        }
    }

    fn validate(self) -> Result<Self> {
        match self {
            GateKind::T(k) if k < 3 => Err(Error::InvalidGate(format!(
                "T{k}: Toffoli arity must be at least 3 (use N or C)"
            ))),
            GateKind::R(0) => Err(Error::InvalidGate("R0".into())),
            _ => Ok(self),
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GateKind::N => f.write_str("N"),
            GateKind::C => f.write_str("C"),
            GateKind::T(k) => write!(f, "T{k}"),
            GateKind::F => f.write_str("F"),
            GateKind::P => f.write_str("P"),
            GateKind::G3 => f.write_str("G3"),
            GateKind::R(k) => write!(f, "R{k}"),
        }
    }
}

impl FromStr for GateKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidGate(format!("unknown gate kind {s:?}"));
        let arity = |digits: &str| digits.parse::<u8>().map_err(|_| bad());
        let kind = match s {
            "N" => GateKind::N,
            "C" => GateKind::C,
            "F" => GateKind::F,
            "P" => GateKind::P,
            "G3" | "G" => GateKind::G3,
            "T" => GateKind::T(3),
            _ if s.starts_with('T') => GateKind::T(arity(&s[1..])?),
            _ if s.starts_with('R') && s.len() > 1 => GateKind::R(arity(&s[1..])?),
            _ => return Err(bad()),
        };
        kind.validate()
    }
}

/// A gate kind placed on an ordered tuple of 1-based wires.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GateInstance {
    kind: GateKind,
    wires: Vec<u8>,
}

impl GateInstance {
    pub fn new(kind: GateKind, wires: Vec<u8>) -> Result<Self> {
        let kind = kind.validate()?;
        if wires.len() != kind.arity() {
            return Err(Error::InvalidGate(format!(
                "{kind} takes {} wire(s), got {}",
                kind.arity(),
                wires.len()
            )));
        }
        for (i, &w) in wires.iter().enumerate() {
            if w == 0 {
                return Err(Error::InvalidGate(format!("{kind}: wires are 1-based")));
            }
            if wires[..i].contains(&w) {
                return Err(Error::InvalidGate(format!("{kind}: repeated wire {w}")));
            }
        }
        Ok(GateInstance { kind, wires })
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn wires(&self) -> &[u8] {
        &self.wires
    }

    pub fn max_wire(&self) -> u8 {
        self.wires.iter().copied().max().unwrap_or(0)
    }

    pub fn check_fits(&self, n: u8) -> Result<()> {
        if self.max_wire() > n {
            return Err(Error::InvalidGate(format!(
                "{self}: wire {} exceeds register of {n} wire(s)",
                self.max_wire()
            )));
        }
        Ok(())
    }

    /// Applies the gate's Boolean output equations to a 0-based state.
    ///
    /// `R(k >= 4)` uses the natural extension of the `R^3` equations: the
    /// first three roles behave as in `R^3` and each later role is XORed
    /// with the product of all earlier ones. Roles of `R` gates are
    /// assigned by [`r_roles`].
    pub fn apply_equations(&self, state: u32, n: u8) -> u32 {
        let bit = |w: u8| (state >> (n - w)) & 1;
        let mask = |w: u8| 1u32 << (n - w);
        let w = &self.wires;
        let mut out = state;
        let mut put = |wire: u8, v: u32| {
            out = (out & !mask(wire)) | (v << (n - wire));
        };
        match self.kind {
            GateKind::N => put(w[0], bit(w[0]) ^ 1),
            GateKind::C => put(w[1], bit(w[1]) ^ bit(w[0])),
            GateKind::T(k) => {
                let ctrl = w[..k as usize - 1].iter().all(|&c| bit(c) == 1);
                let t = w[k as usize - 1];
                put(t, bit(t) ^ u32::from(ctrl));
            }
            GateKind::F => {
                if bit(w[0]) == 1 {
                    put(w[1], bit(w[2]));
                    put(w[2], bit(w[1]));
                }
            }
            GateKind::P => {
                put(w[1], bit(w[0]) ^ bit(w[1]));
                put(w[2], bit(w[2]) ^ (bit(w[0]) & bit(w[1])));
            }
            GateKind::G3 => {
                put(w[0], bit(w[0]) ^ 1);
                put(w[1], bit(w[0]) ^ bit(w[1]));
                put(w[2], bit(w[2]) ^ (bit(w[0]) & bit(w[1])));
            }
            GateKind::R(1) => put(w[0], bit(w[0]) ^ 1),
            GateKind::R(2) => {
                put(w[0], bit(w[0]) ^ 1);
                put(w[1], bit(w[1]) ^ bit(w[0]));
            }
            GateKind::R(_) => {
                let w = &r_roles(w);
                let (j, k, l) = (bit(w[0]), bit(w[1]), bit(w[2]));
                put(w[0], j ^ k ^ (j & l) ^ 1);
                put(w[1], k ^ (j & l) ^ 1);
                put(w[2], l ^ j);
                let mut prod = j & k & l;
                for &m in &w[3..] {
                    put(m, bit(m) ^ prod);
                    prod &= bit(m);
                }
            }
        }
        out
    }

    /// The permutation realized by this gate on an `n`-wire register.
    ///
    /// `R(k >= 4)` is defined by its component cascade ([`decompose_r`]);
    /// everything else by its output equations.
    pub fn semantics(&self, n: u8) -> Result<Permutation> {
        let n = check_wires(n.into())?;
        self.check_fits(n)?;
        match self.kind {
            GateKind::R(k) if k >= 4 => decompose_r(self)?.with_wires(n)?.permutation(),
            _ => Ok(Permutation::from_fn_unchecked(n, |s| {
                self.apply_equations(s, n)
            })),
        }
    }
}

impl fmt::Display for GateInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for w in &self.wires {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}

impl FromStr for GateInstance {
    type Err = Error;

    /// Parses the canonical text form, e.g. `"T3 1 3 2"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut toks = s.split_whitespace();
        let kind: GateKind = toks
            .next()
            .ok_or_else(|| Error::InvalidGate("empty gate".into()))?
            .parse()?;
        let wires = toks
            .map(|t| {
                t.parse::<u8>()
                    .map_err(|_| Error::InvalidGate(format!("bad wire {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        GateInstance::new(kind, wires)
    }
}

/// Shorthand constructor for tests and fixed tables; panics on invalid input.
pub fn gate(text: &str) -> GateInstance {
    text.parse()
        .unwrap_or_else(|e| panic!("invalid gate literal {text:?}: {e}"))
}

/// All functionally distinct instances of `kind` on `n` wires, in
/// lexicographic order of their wire tuples (first representative kept).
pub fn enumerate_gates(kind: GateKind, n: u8) -> Result<Vec<GateInstance>> {
    let kind = kind.validate()?;
    let n = check_wires(n.into())?;
    let arity = kind.arity();
    if arity > n as usize {
        return Err(Error::InvalidGate(format!(
            "{kind} needs {arity} wires, register has {n}"
        )));
    }
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut tuple = Vec::with_capacity(arity);
    let mut tuples = Vec::new();
    k_permutations(n, arity, &mut tuple, &mut tuples);
    for wires in tuples {
        let g = GateInstance::new(kind, wires)?;
        if seen.insert(g.semantics(n)?) {
            out.push(g);
        }
    }
    Ok(out)
}

fn k_permutations(n: u8, k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for w in 1..=n {
        if !cur.contains(&w) {
            cur.push(w);
            k_permutations(n, k, cur, out);
            cur.pop();
        }
    }
}

/// Number of generalized Toffoli gates (any number of controls) on `n`
/// wires: `n * sum_{r=0}^{n-1} C(n-1, r)`.
pub fn t_family_count(n: u32) -> u128 {
    let m = n.saturating_sub(1);
    let sum: u128 = (0..=m).map(|r| binomial(m, r)).sum();
    u128::from(n) * sum
}

pub fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}

/// Per-kind quantum cost.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CostModel {
    costs: BTreeMap<GateKind, u32>,
}

impl Default for CostModel {
    fn default() -> Self {
        CostModel::from_pairs([
            (GateKind::N, 0),
            (GateKind::C, 1),
            (GateKind::T(3), 5),
            (GateKind::F, 5),
            (GateKind::P, 4),
            (GateKind::G3, 5),
            (GateKind::R(1), 0),
            (GateKind::R(2), 1),
            (GateKind::R(3), 4),
        ])
    }
}

impl CostModel {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (GateKind, u32)>) -> Self {
        CostModel {
            costs: pairs.into_iter().collect(),
        }
    }

    /// Returns a copy with `kind`'s cost replaced.
    pub fn with(mut self, kind: GateKind, cost: u32) -> Self {
        self.costs.insert(kind, cost);
        self
    }

    pub fn cost(&self, kind: GateKind) -> Result<u32> {
        self.costs
            .get(&kind)
            .copied()
            .ok_or_else(|| Error::UndefinedCost(kind.to_string()))
    }
}

/// An ordered gate cascade on `wires` wires.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Circuit {
    wires: u8,
    gates: Vec<GateInstance>,
}

impl Circuit {
    pub fn new(wires: u8, gates: Vec<GateInstance>) -> Result<Self> {
        let wires = check_wires(wires.into())?;
        for g in &gates {
            g.check_fits(wires)?;
        }
        Ok(Circuit { wires, gates })
    }

    pub fn empty(wires: u8) -> Result<Self> {
        Self::new(wires, Vec::new())
    }

    pub fn wires(&self) -> u8 {
        self.wires
    }

    pub fn gates(&self) -> &[GateInstance] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, g: GateInstance) -> Result<()> {
        g.check_fits(self.wires)?;
        self.gates.push(g);
        Ok(())
    }

    /// Re-homes the cascade on a register of `wires` wires.
    pub fn with_wires(self, wires: u8) -> Result<Self> {
        Circuit::new(wires, self.gates)
    }

    pub fn permutation(&self) -> Result<Permutation> {
        let mut p = Permutation::identity(self.wires)?;
        for g in &self.gates {
            p = p.compose(&g.semantics(self.wires)?)?;
        }
        Ok(p)
    }

    pub fn cost(&self, model: &CostModel) -> Result<u32> {
        self.gates.iter().map(|g| model.cost(g.kind())).sum()
    }
}

impl fmt::Display for Circuit {
    /// Netlist form: `.n` header followed by one gate per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, ".n {}", self.wires)?;
        for g in &self.gates {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Role assignment of an `R` gate labelled `(a1, .., ak)`.
///
/// The label is read as a relabelling of its sorted wire set `s`, with
/// `a_i = s[σ(i)]`; the roles are the inverse relabelling `s[σ⁻¹(i)]`.
/// Labels that are involutions (such as `1,2,3` or `2,1,3`) are their own
/// roles. This is the reading under which the published cycle listings of
/// the three- and four-wire gates hold.
pub fn r_roles(label: &[u8]) -> Vec<u8> {
    let mut sorted = label.to_vec();
    sorted.sort_unstable();
    let mut roles = vec![0; label.len()];
    for (i, w) in label.iter().enumerate() {
        let pos = sorted.binary_search(w).expect("label wire is in its own sorted set");
        roles[pos] = sorted[i];
    }
    roles
}

/// Component cascade of an `R(k)` gate, `k >= 3`, with roles
/// `(a1, .., ak)` from [`r_roles`]:
/// `[Tk a1..ak, .., T4 a1..a4, T3 a1 a3 a2, C a1 a3, N a2, C a2 a1]`.
pub fn decompose_r(g: &GateInstance) -> Result<Circuit> {
    let k = match g.kind() {
        GateKind::R(k) if k >= 3 => k as usize,
        _ => {
            return Err(Error::InvalidGate(format!(
                "{g}: only R gates on 3 or more wires decompose into components"
            )))
        }
    };
    let a = r_roles(g.wires());
    let mut gates = Vec::with_capacity(k + 1);
    for m in (4..=k).rev() {
        gates.push(GateInstance::new(GateKind::T(m as u8), a[..m].to_vec())?);
    }
    gates.push(GateInstance::new(GateKind::T(3), vec![a[0], a[2], a[1]])?);
    gates.push(GateInstance::new(GateKind::C, vec![a[0], a[2]])?);
    gates.push(GateInstance::new(GateKind::N, vec![a[1]])?);
    gates.push(GateInstance::new(GateKind::C, vec![a[1], a[0]])?);
    Circuit::new(g.max_wire(), gates)
}

/// A named gate set over a fixed register with its cost model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Library {
    name: String,
    wires: u8,
    gates: Vec<GateInstance>,
    cost: CostModel,
}

/// Library names understood by [`Library::named`], in report order.
pub const LIBRARY_NAMES: &[&str] = &[
    "NT", "NP", "NCT", "NCF", "NCP", "NCTF", "NCPT", "NCPF", "NFT", "NCTPF", "G3", "R3", "NR3",
];

impl Library {
    pub fn new(name: impl Into<String>, wires: u8, gates: Vec<GateInstance>) -> Result<Self> {
        let name = name.into();
        let wires = check_wires(wires.into())?;
        if gates.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for g in &gates {
            g.check_fits(wires)?;
        }
        Ok(Library {
            name,
            wires,
            gates,
            cost: CostModel::default(),
        })
    }

    pub fn with_cost(mut self, cost: CostModel) -> Self {
        self.cost = cost;
        self
    }

    /// One of the standard 3-wire libraries listed in [`LIBRARY_NAMES`].
    /// Gates are ordered by constituent kind as spelled in the name.
    pub fn named(name: &str) -> Result<Self> {
        let kinds: &[GateKind] = match name.to_ascii_uppercase().as_str() {
            "NT" => &[GateKind::N, GateKind::T(3)],
            "NP" => &[GateKind::N, GateKind::P],
            "NCT" => &[GateKind::N, GateKind::C, GateKind::T(3)],
            "NCF" => &[GateKind::N, GateKind::C, GateKind::F],
            "NCP" => &[GateKind::N, GateKind::C, GateKind::P],
            "NCTF" => &[GateKind::N, GateKind::C, GateKind::T(3), GateKind::F],
            "NCPT" => &[GateKind::N, GateKind::C, GateKind::P, GateKind::T(3)],
            "NCPF" => &[GateKind::N, GateKind::C, GateKind::P, GateKind::F],
            // Feynman is the CNOT gate, so NFT shares the NCT gate set.
            "NFT" => &[GateKind::N, GateKind::C, GateKind::T(3)],
            "NCTPF" => &[
                GateKind::N,
                GateKind::C,
                GateKind::T(3),
                GateKind::P,
                GateKind::F,
            ],
            "G3" | "G" => &[GateKind::G3],
            "R3" | "R" => &[GateKind::R(3)],
            "NR3" | "NR" => &[GateKind::N, GateKind::R(3)],
            _ => return Err(Error::UnknownLibrary(name.to_string())),
        };
        let mut gates = Vec::new();
        for &k in kinds {
            gates.extend(enumerate_gates(k, 3)?);
        }
        let canonical = LIBRARY_NAMES
            .iter()
            .find(|n| n.eq_ignore_ascii_case(name))
            .map(|n| n.to_string())
            .unwrap_or_else(|| name.to_ascii_uppercase());
        Library::new(canonical, 3, gates)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn wires(&self) -> u8 {
        self.wires
    }

    pub fn gates(&self) -> &[GateInstance] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn cost_model(&self) -> &CostModel {
        &self.cost
    }

    pub fn permutations(&self) -> Result<Vec<Permutation>> {
        self.gates.iter().map(|g| g.semantics(self.wires)).collect()
    }

    pub fn gate_costs(&self) -> Result<Vec<u32>> {
        self.gates.iter().map(|g| self.cost.cost(g.kind())).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(text: &str, n: u8) -> String {
        gate(text).semantics(n).unwrap().to_cycles()
    }

    #[test]
    fn kind_text_roundtrip() {
        for s in ["N", "C", "T3", "T5", "F", "P", "G3", "R1", "R4"] {
            assert_eq!(s.parse::<GateKind>().unwrap().to_string(), s);
        }
        assert!("T2".parse::<GateKind>().is_err());
        assert!("X".parse::<GateKind>().is_err());
    }

    #[test]
    fn instance_validation() {
        assert!("C 1 1".parse::<GateInstance>().is_err());
        assert!("T3 1 2".parse::<GateInstance>().is_err());
        assert!("N 0".parse::<GateInstance>().is_err());
        assert!(gate("T3 1 2 4").semantics(3).is_err());
        assert_eq!(gate("R3 2 1 3").to_string(), "R3 2 1 3");
    }

    #[test]
    fn one_and_two_wire_r_gates() {
        assert_eq!(cyc("R1 1", 1), "(1,2)");
        assert_eq!(cyc("N 1", 1), "(1,2)");
        assert_eq!(cyc("R2 1 2", 2), "(1,3,2,4)");
        assert_eq!(cyc("R2 2 1", 2), "(1,2,3,4)");
    }

    #[test]
    fn r3_listings() {
        for (g, c) in [
            ("R3 1 2 3", "(1,7,6,5,4,2,8,3)"),
            ("R3 3 2 1", "(1,4,6,2,7,5,8,3)"),
            ("R3 3 1 2", "(1,4,7,3,6,5,8,2)"),
            ("R3 1 3 2", "(1,6,7,5,4,3,8,2)"),
            ("R3 2 3 1", "(1,6,4,2,7,3,8,5)"),
            ("R3 2 1 3", "(1,7,4,3,6,2,8,5)"),
        ] {
            assert_eq!(cyc(g, 3), c, "{g}");
            assert_eq!(decompose_r(&gate(g)).unwrap().permutation().unwrap().to_cycles(), c);
        }
    }

    #[test]
    fn roles_invert_the_label() {
        assert_eq!(r_roles(&[3, 1, 2]), [2, 3, 1]);
        assert_eq!(r_roles(&[2, 1, 3]), [2, 1, 3]);
        assert_eq!(r_roles(&[5, 2, 4]), [4, 5, 2]);
        assert_eq!(r_roles(&[4, 1, 2, 3]), [2, 3, 4, 1]);
    }

    #[test]
    fn r4_first_listing_up_to_erratum() {
        assert_eq!(
            cyc("R4 1 2 3 4", 4),
            "(1,13,11,9,7,3,15,6,2,14,12,10,8,4,16,5)"
        );
    }

    #[test]
    fn decompose_r_components() {
        let d = decompose_r(&gate("R3 1 2 3")).unwrap();
        let names: Vec<String> = d.gates().iter().map(|g| g.to_string()).collect();
        assert_eq!(names, ["T3 1 3 2", "C 1 3", "N 2", "C 2 1"]);
        assert_eq!(d.permutation().unwrap().to_cycles(), "(1,7,6,5,4,2,8,3)");

        let d4 = decompose_r(&gate("R4 1 2 3 4")).unwrap();
        let names: Vec<String> = d4.gates().iter().map(|g| g.to_string()).collect();
        assert_eq!(names, ["T4 1 2 3 4", "T3 1 3 2", "C 1 3", "N 2", "C 2 1"]);
        assert!(decompose_r(&gate("R2 1 2")).is_err());
        assert!(decompose_r(&gate("T3 1 2 3")).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let count = |k: &str, n: u8| enumerate_gates(k.parse().unwrap(), n).unwrap().len();
        assert_eq!(count("N", 3), 3);
        assert_eq!(count("C", 3), 6);
        assert_eq!(count("T3", 3), 3);
        assert_eq!(count("F", 3), 3);
        assert_eq!(count("P", 3), 6);
        assert_eq!(count("G3", 3), 6);
        assert_eq!(count("R3", 3), 6);
        assert_eq!(count("R4", 4), 24);
        assert_eq!(count("T4", 4), 4);
        assert!(enumerate_gates(GateKind::R(4), 3).is_err());
    }

    #[test]
    fn t_family_counts() {
        assert_eq!(t_family_count(1), 1);
        assert_eq!(t_family_count(3), 12);
        assert_eq!(t_family_count(4), 32);
        // N + C + T3 instances at n = 3.
        let total: usize = ["N", "C", "T3"]
            .iter()
            .map(|k| enumerate_gates(k.parse().unwrap(), 3).unwrap().len())
            .sum();
        assert_eq!(total as u128, t_family_count(3));
    }

    #[test]
    fn cost_model_defaults_and_gaps() {
        let m = CostModel::default();
        assert_eq!(m.cost(GateKind::N).unwrap(), 0);
        assert_eq!(m.cost(GateKind::C).unwrap(), 1);
        assert_eq!(m.cost(GateKind::T(3)).unwrap(), 5);
        assert_eq!(m.cost(GateKind::F).unwrap(), 5);
        assert_eq!(m.cost(GateKind::P).unwrap(), 4);
        assert_eq!(m.cost(GateKind::G3).unwrap(), 5);
        assert_eq!(m.cost(GateKind::R(3)).unwrap(), 4);
        assert!(m.cost(GateKind::T(4)).is_err());
        assert!(m.cost(GateKind::R(4)).is_err());
    }

    #[test]
    fn library_sizes() {
        let size = |n: &str| Library::named(n).unwrap().len();
        for (name, expect) in [
            ("NT", 6),
            ("NP", 9),
            ("NCT", 12),
            ("NCF", 12),
            ("NCP", 15),
            ("NCTF", 15),
            ("NCPT", 18),
            ("NCPF", 18),
            ("NCTPF", 21),
            ("G3", 6),
            ("R3", 6),
            ("NR3", 9),
        ] {
            assert_eq!(size(name), expect, "{name}");
        }
        assert!(matches!(
            Library::named("XYZ"),
            Err(Error::UnknownLibrary(_))
        ));
    }

    #[test]
    fn circuit_cost_and_netlist() {
        let c = Circuit::new(3, vec![gate("T3 1 2 3"), gate("N 2")]).unwrap();
        assert_eq!(c.cost(&CostModel::default()).unwrap(), 5);
        assert_eq!(c.to_string(), ".n 3\nT3 1 2 3\nN 2\n");
        assert!(Circuit::new(2, vec![gate("T3 1 2 3")]).is_err());
    }
}
