use super::{ElemCircuit, ElemGate};
use crate::error::{Error, Result};
use crate::gate::{r_roles, Circuit, GateInstance, GateKind};

fn toffoli(j: u8, k: u8, l: u8) -> Vec<ElemGate> {
    vec![
        ElemGate::v(k, l),
        ElemGate::cnot(j, k),
        ElemGate::u(k, l),
        ElemGate::cnot(j, k),
        ElemGate::v(j, l),
    ]
}

/// The standard elementary network of a supported gate.
pub fn decompose_gate(g: &GateInstance) -> Result<Vec<ElemGate>> {
    let w = g.wires();
    Ok(match g.kind() {
        GateKind::N => vec![ElemGate::not(w[0])],
        GateKind::C => vec![ElemGate::cnot(w[0], w[1])],
        GateKind::T(3) => toffoli(w[0], w[1], w[2]),
        GateKind::P => {
            let mut net = toffoli(w[0], w[1], w[2]);
            net.remove(3);
            net
        }
        GateKind::R(3) => {
            let r = r_roles(w);
            let (j, k, l) = (r[0], r[1], r[2]);
            vec![
                ElemGate::v(l, k),
                ElemGate::cnot(j, l),
                ElemGate::u(l, k),
                ElemGate::not(k),
                ElemGate::Merged { first: 1, second: 2, a: j, b: k },
            ]
        }
        _ => return Err(Error::UnsupportedGate(g.to_string())),
    })
}

/// Equivalent networks of the same cost, standard one first. Complex
/// conjugation (`V` ↔ `U`) preserves any real permutation matrix; for the
/// involutions the reversed adjoint network and, for the Toffoli, the
/// exchange of its two controls give further variants.
pub fn network_variants(g: &GateInstance) -> Result<Vec<Vec<ElemGate>>> {
    let base = decompose_gate(g)?;
    let mut seeds = vec![base];
    if g.kind() == GateKind::T(3) {
        let w = g.wires();
        seeds.push(toffoli(w[1], w[0], w[2]));
    }
    let involution = matches!(g.kind(), GateKind::N | GateKind::C | GateKind::T(_));
    let mut out: Vec<Vec<ElemGate>> = Vec::new();
    for seed in seeds {
        let mut forms = vec![seed.clone(), seed.iter().map(ElemGate::conjugate).collect()];
        if involution {
            let rev: Vec<ElemGate> = seed.iter().rev().map(ElemGate::adjoint).collect();
            forms.push(rev.iter().map(ElemGate::conjugate).collect());
            forms.push(rev);
        }
        for f in forms {
            if !out.contains(&f) {
                out.push(f);
            }
        }
    }
    Ok(out)
}

/// Replaces every gate by its standard elementary network. Supported gates:
/// N, C, T3, P and R3.
pub fn decompose_to_elementary(c: &Circuit) -> Result<ElemCircuit> {
    let mut gates = Vec::new();
    for g in c.gates() {
        gates.extend(decompose_gate(g)?);
    }
    Ok(ElemCircuit::from_parts_unchecked(c.wires(), gates))
}
