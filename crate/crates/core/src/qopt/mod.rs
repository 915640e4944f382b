//! Quantum-level peephole optimization over controlled-V, controlled-V†,
//! CNOT and NOT gates.
//!
//! Every elementary gate applies a power of `V` (the square root of NOT) to
//! its target: power 1 is `V`, 2 is NOT and 3 is `U = V†`. Powers on the same
//! (control, target) pair therefore add modulo 4.

mod decompose;
pub mod dyadic;
mod optimize;
mod rules;
mod sweep;
mod unitary;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gate::{Circuit, GateInstance, GateKind};
use crate::perm::check_wires;

pub use decompose::{decompose_gate, decompose_to_elementary, network_variants};
pub use dyadic::GaussDyadic;
pub use optimize::{
    optimize, optimize_elementary, optimize_with, CostReport, OptimizeOptions, Optimized,
    DEFAULT_PASS_LIMIT,
};
pub use rules::{merge, try_swap, Merge};
pub use sweep::{optimization_sweep, pair_savings, SweepResult};
pub use unitary::Unitary;

/// One elementary gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum ElemGate {
    /// Uncontrolled `V^pow` on `target`; power 2 is the NOT gate.
    Single { pow: u8, target: u8 },
    /// `V^pow` on `target` controlled by `control`.
    Controlled { pow: u8, control: u8, target: u8 },
    /// `V^first` on `a -> b` followed by `V^second` on `b -> a`, realized as a
    /// single two-wire gate.
    Merged { first: u8, second: u8, a: u8, b: u8 },
}

fn letter(pow: u8) -> char {
    match pow {
        1 => 'V',
        2 => 'C',
        3 => 'U',
        _ => unreachable!("powers are kept in 1..=3"),
    }
}

fn pow_of(letter: char) -> Option<u8> {
    match letter {
        'V' => Some(1),
        'C' => Some(2),
        'U' => Some(3),
        _ => None,
    }
}

impl ElemGate {
    pub fn not(target: u8) -> Self {
        ElemGate::Single { pow: 2, target }
    }

    pub fn cnot(control: u8, target: u8) -> Self {
        ElemGate::Controlled { pow: 2, control, target }
    }

    pub fn v(control: u8, target: u8) -> Self {
        ElemGate::Controlled { pow: 1, control, target }
    }

    pub fn u(control: u8, target: u8) -> Self {
        ElemGate::Controlled { pow: 3, control, target }
    }

    /// Validates powers and wires against an `n`-wire register.
    pub fn check(&self, n: u8) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidGate(msg));
        let pows_ok = match *self {
            ElemGate::Single { pow, .. } | ElemGate::Controlled { pow, .. } => (1..=3).contains(&pow),
            ElemGate::Merged { first, second, .. } => {
                (1..=3).contains(&first) && (1..=3).contains(&second)
            }
        };
        if !pows_ok {
            return bad(format!("{self:?}: power out of range"));
        }
        let wires = self.wires();
        if wires.iter().any(|&w| w == 0 || w > n) {
            return bad(format!("{self} does not fit {n} wire(s)"));
        }
        if wires.len() == 2 && wires[0] == wires[1] {
            return bad(format!("{self}: control equals target"));
        }
        Ok(())
    }

    pub fn wires(&self) -> Vec<u8> {
        match *self {
            ElemGate::Single { target, .. } => vec![target],
            ElemGate::Controlled { control, target, .. } => vec![control, target],
            ElemGate::Merged { a, b, .. } => vec![a, b],
        }
    }

    /// Quantum cost: NOT is free, every other elementary gate costs 1.
    pub fn cost(&self) -> u32 {
        match self {
            ElemGate::Single { pow: 2, .. } => 0,
            _ => 1,
        }
    }

    /// Bit mask of wires read as controls.
    pub(crate) fn control_mask(&self) -> u32 {
        match *self {
            ElemGate::Single { .. } => 0,
            ElemGate::Controlled { control, .. } => 1 << control,
            ElemGate::Merged { a, b, .. } => 1 << a | 1 << b,
        }
    }

    /// Bit mask of wires acted on.
    pub(crate) fn target_mask(&self) -> u32 {
        match *self {
            ElemGate::Single { target, .. } | ElemGate::Controlled { target, .. } => 1 << target,
            ElemGate::Merged { a, b, .. } => 1 << a | 1 << b,
        }
    }

    /// The inverse gate.
    pub fn adjoint(&self) -> Self {
        let inv = |p: u8| (4 - p) % 4;
        match *self {
            ElemGate::Single { pow, target } => ElemGate::Single { pow: inv(pow), target },
            ElemGate::Controlled { pow, control, target } => ElemGate::Controlled {
                pow: inv(pow),
                control,
                target,
            },
            ElemGate::Merged { first, second, a, b } => ElemGate::Merged {
                first: inv(second),
                second: inv(first),
                a: b,
                b: a,
            },
        }
    }

    /// Entry-wise complex conjugate: swaps `V` and `U`.
    pub fn conjugate(&self) -> Self {
        let c = |p: u8| if p == 2 { 2 } else { 4 - p };
        match *self {
            ElemGate::Single { pow, target } => ElemGate::Single { pow: c(pow), target },
            ElemGate::Controlled { pow, control, target } => ElemGate::Controlled {
                pow: c(pow),
                control,
                target,
            },
            ElemGate::Merged { first, second, a, b } => ElemGate::Merged {
                first: c(first),
                second: c(second),
                a,
                b,
            },
        }
    }

    /// The equivalent reversible gates when no `V` or `U` power is involved.
    pub fn to_classical(&self) -> Result<Vec<GateInstance>> {
        let nc = || Err(Error::NonClassical(self.to_string()));
        match *self {
            ElemGate::Single { pow: 2, target } => Ok(vec![GateInstance::new(GateKind::N, vec![target])?]),
            ElemGate::Controlled { pow: 2, control, target } => {
                Ok(vec![GateInstance::new(GateKind::C, vec![control, target])?])
            }
            ElemGate::Merged { first: 2, second: 2, a, b } => Ok(vec![
                GateInstance::new(GateKind::C, vec![a, b])?,
                GateInstance::new(GateKind::C, vec![b, a])?,
            ]),
            _ => nc(),
        }
    }
}

impl fmt::Display for ElemGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ElemGate::Single { pow: 2, target } => write!(f, "N {target}"),
            ElemGate::Single { pow, target } => write!(f, "{} {target}", letter(pow)),
            ElemGate::Controlled { pow, control, target } => {
                write!(f, "{} {control} {target}", letter(pow))
            }
            ElemGate::Merged { first, second, a, b } => {
                write!(f, "{}{} {a} {b}", letter(first), letter(second))
            }
        }
    }
}

impl FromStr for ElemGate {
    type Err = Error;

    /// Parses `N t`, `V t`, `U t`, `V c t`, `C c t`, `U c t`, or a merged
    /// gate such as `VC a b`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidGate(s.trim().to_string());
        let mut parts = s.split_whitespace();
        let kind = parts.next().ok_or_else(bad)?.to_ascii_uppercase();
        let wires = parts
            .map(|w| w.parse::<u8>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let letters: Vec<char> = kind.chars().collect();
        let g = match (letters.as_slice(), wires.as_slice()) {
            (['N'], &[t]) => ElemGate::not(t),
            ([l], &[t]) if *l != 'C' => ElemGate::Single { pow: pow_of(*l).ok_or_else(bad)?, target: t },
            ([l], &[c, t]) if *l != 'N' => ElemGate::Controlled {
                pow: pow_of(*l).ok_or_else(bad)?,
                control: c,
                target: t,
            },
            ([l1, l2], &[a, b]) => ElemGate::Merged {
                first: pow_of(*l1).ok_or_else(bad)?,
                second: pow_of(*l2).ok_or_else(bad)?,
                a,
                b,
            },
            _ => return Err(bad()),
        };
        g.check(crate::perm::MAX_WIRES)?;
        Ok(g)
    }
}

/// A cascade of elementary gates on `wires` wires.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ElemCircuit {
    wires: u8,
    gates: Vec<ElemGate>,
}

impl ElemCircuit {
    pub fn new(wires: u8, gates: Vec<ElemGate>) -> Result<Self> {
        let wires = check_wires(wires.into())?;
        for g in &gates {
            g.check(wires)?;
        }
        Ok(ElemCircuit { wires, gates })
    }

    pub(crate) fn from_parts_unchecked(wires: u8, gates: Vec<ElemGate>) -> Self {
        ElemCircuit { wires, gates }
    }

    pub fn wires(&self) -> u8 {
        self.wires
    }

    pub fn gates(&self) -> &[ElemGate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn cost(&self) -> u32 {
        self.gates.iter().map(ElemGate::cost).sum()
    }

    pub fn unitary(&self) -> Unitary {
        Unitary::of(self)
    }

    /// Reversible-gate form of a circuit free of `V` and `U`.
    pub fn to_classical(&self) -> Result<Circuit> {
        let mut out = Vec::new();
        for g in &self.gates {
            out.extend(g.to_classical()?);
        }
        Circuit::new(self.wires, out)
    }
}

impl fmt::Display for ElemCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, ".n {}", self.wires)?;
        for g in &self.gates {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        for s in ["N 2", "V 3", "U 1", "V 3 2", "C 1 3", "U 3 2", "VC 1 2", "CU 2 3", "UU 3 1"] {
            let g: ElemGate = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
        for s in ["C 2", "N 1 2", "VCU 1 2", "V 1 1", "X 1 2", "VC 1", "V 0 1"] {
            assert!(s.parse::<ElemGate>().is_err(), "{s}");
        }
    }

    #[test]
    fn costs() {
        let c = ElemCircuit::new(
            3,
            ["V 3 2", "C 1 3", "U 3 2", "N 2", "VC 1 2"]
                .iter()
                .map(|s| s.parse().unwrap())
                .collect(),
        )
        .unwrap();
        assert_eq!(c.cost(), 4);
        assert!(c.to_classical().is_err());
    }
}
