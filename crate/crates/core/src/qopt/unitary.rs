use std::fmt;

use super::dyadic::GaussDyadic;
use super::{ElemCircuit, ElemGate};
use crate::perm::Permutation;

/// Exact `2^n × 2^n` matrix over Gaussian dyadics, row-major, with the
/// basis ordered like the classical state encoding (wire 1 most significant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unitary {
    wires: u8,
    dim: usize,
    data: Vec<GaussDyadic>,
}

/// The 2×2 block of `V^pow`.
fn block(pow: u8) -> [[GaussDyadic; 2]; 2] {
    let p = GaussDyadic::new(1, 1, 1);
    let m = GaussDyadic::new(1, -1, 1);
    let (z, o) = (GaussDyadic::ZERO, GaussDyadic::ONE);
    match pow % 4 {
        0 => [[o, z], [z, o]],
        1 => [[p, m], [m, p]],
        2 => [[z, o], [o, z]],
        _ => [[m, p], [p, m]],
    }
}

fn bit(wires: u8, w: u8) -> usize {
    1 << (wires - w)
}

impl Unitary {
    pub fn identity(wires: u8) -> Self {
        let dim = 1usize << wires;
        let mut data = vec![GaussDyadic::ZERO; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = GaussDyadic::ONE;
        }
        Unitary { wires, dim, data }
    }

    /// Permutation matrix sending basis state `s` to `p(s)`.
    pub fn from_permutation(p: &Permutation) -> Self {
        let wires = p.wires();
        let dim = 1usize << wires;
        let mut data = vec![GaussDyadic::ZERO; dim * dim];
        for (s, &img) in p.raw().iter().enumerate() {
            data[img as usize * dim + s] = GaussDyadic::ONE;
        }
        Unitary { wires, dim, data }
    }

    /// Product of the gate matrices in cascade order.
    pub fn of(circuit: &ElemCircuit) -> Self {
        let mut u = Unitary::identity(circuit.wires());
        for g in circuit.gates() {
            u.apply(g);
        }
        u
    }

    pub fn wires(&self) -> u8 {
        self.wires
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> GaussDyadic {
        self.data[row * self.dim + col]
    }

    /// Left-multiplies by `gate`, i.e. appends it to the cascade.
    pub fn apply(&mut self, gate: &ElemGate) {
        match *gate {
            ElemGate::Single { pow, target } => self.apply_controlled(pow, None, target),
            ElemGate::Controlled { pow, control, target } => {
                self.apply_controlled(pow, Some(control), target)
            }
            ElemGate::Merged { first, second, a, b } => {
                self.apply_controlled(first, Some(a), b);
                self.apply_controlled(second, Some(b), a);
            }
        }
    }

    fn apply_controlled(&mut self, pow: u8, control: Option<u8>, target: u8) {
        let m = block(pow);
        let tb = bit(self.wires, target);
        let cb = control.map_or(0, |c| bit(self.wires, c));
        for s in 0..self.dim {
            if s & tb != 0 || s & cb != cb {
                continue;
            }
            let (r0, r1) = (s * self.dim, (s | tb) * self.dim);
            for col in 0..self.dim {
                let (a, b) = (self.data[r0 + col], self.data[r1 + col]);
                if a.is_zero() && b.is_zero() {
                    continue;
                }
                self.data[r0 + col] = m[0][0] * a + m[0][1] * b;
                self.data[r1 + col] = m[1][0] * a + m[1][1] * b;
            }
        }
    }

    pub fn adjoint(&self) -> Self {
        let mut data = vec![GaussDyadic::ZERO; self.data.len()];
        for r in 0..self.dim {
            for c in 0..self.dim {
                data[c * self.dim + r] = self.get(r, c).conj();
            }
        }
        Unitary { data, ..*self }
    }

    pub fn mul(&self, rhs: &Unitary) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut data = vec![GaussDyadic::ZERO; self.data.len()];
        for r in 0..self.dim {
            for k in 0..self.dim {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..self.dim {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        data[r * self.dim + c] = data[r * self.dim + c] + a * b;
                    }
                }
            }
        }
        Unitary { data, ..*self }
    }

    /// `U† U = I`, checked exactly.
    pub fn is_unitary(&self) -> bool {
        self.adjoint().mul(self) == Unitary::identity(self.wires)
    }

    /// The classical permutation, if this matrix is a permutation matrix.
    pub fn as_permutation(&self) -> Option<Permutation> {
        let mut images = Vec::with_capacity(self.dim);
        for c in 0..self.dim {
            let mut img = None;
            for r in 0..self.dim {
                let v = self.get(r, c);
                if v == GaussDyadic::ONE && img.is_none() {
                    img = Some(r as u32);
                } else if !v.is_zero() {
                    return None;
                }
            }
            images.push(img? + 1);
        }
        Permutation::from_images(self.wires, &images).ok()
    }

    /// Whether two elementary gates commute, checked on their matrices.
    pub fn commute(wires: u8, g1: &ElemGate, g2: &ElemGate) -> bool {
        let mut a = Unitary::identity(wires);
        a.apply(g1);
        a.apply(g2);
        let mut b = Unitary::identity(wires);
        b.apply(g2);
        b.apply(g1);
        a == b
    }
}

impl fmt::Display for Unitary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circ(n: u8, gates: &[&str]) -> ElemCircuit {
        ElemCircuit::new(n, gates.iter().map(|s| s.parse().unwrap()).collect()).unwrap()
    }

    #[test]
    fn square_root_identities() {
        let not = Unitary::of(&circ(1, &["N 1"]));
        let id = Unitary::identity(1);
        assert_eq!(Unitary::of(&circ(1, &["V 1", "V 1"])), not);
        assert_eq!(Unitary::of(&circ(1, &["U 1", "U 1"])), not);
        assert_eq!(Unitary::of(&circ(1, &["V 1", "U 1"])), id);
        assert_eq!(Unitary::of(&circ(1, &["U 1", "V 1"])), id);
        assert_eq!(Unitary::of(&circ(1, &["V 1", "N 1"])), Unitary::of(&circ(1, &["U 1"])));
        assert_eq!(Unitary::of(&circ(1, &["N 1", "U 1"])), Unitary::of(&circ(1, &["V 1"])));
        assert!(Unitary::of(&circ(2, &["V 1 2"])).is_unitary());
    }

    #[test]
    fn permutation_matrix_round_trip() {
        let p = Permutation::from_cycles("(1,7,6,5,4,2,8,3)", 3).unwrap();
        let u = Unitary::from_permutation(&p);
        assert!(u.is_unitary());
        assert_eq!(u.as_permutation().unwrap(), p);
        assert!(Unitary::of(&circ(2, &["V 1 2"])).as_permutation().is_none());
    }

    #[test]
    fn cnot_matches_classical_encoding() {
        let u = Unitary::of(&circ(2, &["C 1 2"]));
        assert_eq!(u.as_permutation().unwrap().to_cycles(), "(3,4)");
    }
}
