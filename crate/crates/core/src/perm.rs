//! Permutations of the `2^n` computational basis states.
//!
//! States are numbered `1..=2^n`. A bit vector `(x_1, ..., x_n)` maps to
//! `1 + sum x_i * 2^(n-i)`, so `x_1` is the most significant bit and the
//! all-zero vector is state 1.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported wire count (`2^16` basis states).
pub const MAX_WIRES: u8 = 16;

pub(crate) fn check_wires(wires: u32) -> Result<u8> {
    if wires == 0 || wires > MAX_WIRES as u32 {
        return Err(Error::UnsupportedWires(wires));
    }
    Ok(wires as u8)
}

/// A 1-based basis state index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateIndex(pub u32);

impl StateIndex {
    pub fn new(value: u32, wires: u8) -> Result<Self> {
        if value == 0 || u64::from(value) > 1u64 << wires {
            return Err(Error::StateOutOfRange {
                index: value.into(),
                wires,
            });
        }
        Ok(StateIndex(value))
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for StateIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An input or output pattern `(x_1, ..., x_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitVector(Vec<bool>);

impl BitVector {
    pub fn new(bits: Vec<bool>) -> Self {
        BitVector(bits)
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Packs the bits into a 0-based state number (`x_1` most significant).
    pub(crate) fn to_raw(&self) -> u32 {
        self.0.iter().fold(0, |acc, &b| (acc << 1) | u32::from(b))
    }

    pub(crate) fn from_raw(raw: u32, wires: u8) -> Self {
        BitVector(
            (1..=wires)
                .map(|w| raw >> (wires - w) & 1 == 1)
                .collect(),
        )
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::BitSyntax(s.to_string()));
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::BitSyntax(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(BitVector)
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Maps a bit vector to its state index.
pub fn encode(bits: &BitVector) -> Result<StateIndex> {
    check_wires(bits.len() as u32)?;
    Ok(StateIndex(bits.to_raw() + 1))
}

/// Inverse of [`encode`].
pub fn decode(state: StateIndex, wires: u8) -> Result<BitVector> {
    let wires = check_wires(wires.into())?;
    let state = StateIndex::new(state.0, wires)?;
    Ok(BitVector::from_raw(state.0 - 1, wires))
}

/// A bijection on the basis states of an `n`-wire register.
///
/// Stored densely: `image[i]` is the 0-based image of 0-based state `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    wires: u8,
    image: Vec<u32>,
}

impl Permutation {
    pub fn identity(wires: u8) -> Result<Self> {
        let wires = check_wires(wires.into())?;
        Ok(Permutation {
            wires,
            image: (0..1u32 << wires).collect(),
        })
    }

    /// Builds a permutation from its 1-based image list `[σ(1), ..., σ(N)]`.
    pub fn from_images(wires: u8, images: &[u32]) -> Result<Self> {
        let wires = check_wires(wires.into())?;
        let size = 1u32 << wires;
        if images.len() != size as usize {
            return Err(Error::NotBijection(size));
        }
        let image: Vec<u32> = images.iter().map(|&v| v.wrapping_sub(1)).collect();
        Self::from_raw(wires, image)
    }

    pub(crate) fn from_raw(wires: u8, image: Vec<u32>) -> Result<Self> {
        let size = 1usize << wires;
        let mut seen = vec![false; size];
        for &v in &image {
            match seen.get_mut(v as usize) {
                Some(slot) if !*slot => *slot = true,
                _ => return Err(Error::NotBijection(size as u32)),
            }
        }
        if image.len() != size {
            return Err(Error::NotBijection(size as u32));
        }
        Ok(Permutation { wires, image })
    }

    /// Builds a permutation from a function on 0-based states. The caller
    /// guarantees bijectivity.
    pub(crate) fn from_fn_unchecked(wires: u8, f: impl Fn(u32) -> u32) -> Self {
        Permutation {
            wires,
            image: (0..1u32 << wires).map(f).collect(),
        }
    }

    pub fn wires(&self) -> u8 {
        self.wires
    }

    /// Number of basis states, `2^n`.
    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// The 1-based image list.
    pub fn images(&self) -> Vec<u32> {
        self.image.iter().map(|v| v + 1).collect()
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.image
    }

    pub fn apply(&self, state: StateIndex) -> Result<StateIndex> {
        let s = StateIndex::new(state.0, self.wires)?;
        Ok(StateIndex(self.image[(s.0 - 1) as usize] + 1))
    }

    pub fn apply_bits(&self, bits: &BitVector) -> Result<BitVector> {
        if bits.len() != self.wires as usize {
            return Err(Error::BitLength {
                got: bits.len(),
                expected: self.wires.into(),
            });
        }
        Ok(BitVector::from_raw(
            self.image[bits.to_raw() as usize],
            self.wires,
        ))
    }

    /// The permutation of the cascade "`self` first, then `then`".
    pub fn compose(&self, then: &Permutation) -> Result<Permutation> {
        if self.wires != then.wires {
            return Err(Error::WireMismatch(self.wires, then.wires));
        }
        Ok(Permutation {
            wires: self.wires,
            image: self.image.iter().map(|&v| then.image[v as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v as usize] = i as u32;
        }
        Permutation {
            wires: self.wires,
            image,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// Disjoint cycles (1-based), each starting at its smallest element and
    /// ordered by that element. Fixed points are omitted.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.image.len()];
        let mut cycles = Vec::new();
        for start in 0..self.image.len() {
            if seen[start] || self.image[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur as u32 + 1);
                cur = self.image[cur] as usize;
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Cycle notation such as `(1,8,3)(5,7,6)`; the identity is the empty string.
    pub fn to_cycles(&self) -> String {
        let mut out = String::new();
        for cycle in self.cycles() {
            out.push('(');
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&v.to_string());
            }
            out.push(')');
        }
        out
    }

    /// Parses a product of disjoint cycles over `1..=2^n`.
    pub fn from_cycles(text: &str, wires: u8) -> Result<Self> {
        let mut perm = Self::identity(wires)?;
        let size = 1u32 << perm.wires;
        let mut used = vec![false; size as usize];
        let syntax = || Error::CycleSyntax(text.to_string());
        let mut rest = text.trim_start();
        while !rest.is_empty() {
            rest = rest.strip_prefix('(').ok_or_else(syntax)?;
            let close = rest.find(')').ok_or_else(syntax)?;
            let body = rest[..close].trim();
            rest = rest[close + 1..].trim_start();
            if body.is_empty() {
                continue;
            }
            let mut cycle = Vec::new();
            for tok in body.split(',') {
                let v: u32 = tok.trim().parse().map_err(|_| syntax())?;
                if v == 0 || v > size {
                    return Err(Error::StateOutOfRange {
                        index: v.into(),
                        wires: perm.wires,
                    });
                }
                if std::mem::replace(&mut used[(v - 1) as usize], true) {
                    return Err(Error::RepeatedElement(v));
                }
                cycle.push(v - 1);
            }
            for (i, &v) in cycle.iter().enumerate() {
                perm.image[v as usize] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(perm)
    }

    pub fn is_involution(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(i, &v)| self.image[v as usize] as usize == i)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            f.write_str("()")
        } else {
            f.write_str(&self.to_cycles())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    #[test]
    fn encode_is_msb_first_and_one_based() {
        assert_eq!(encode(&bits("000")).unwrap(), StateIndex(1));
        assert_eq!(encode(&bits("100")).unwrap(), StateIndex(5));
        assert_eq!(encode(&bits("110")).unwrap(), StateIndex(7));
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode(StateIndex(1), 3).unwrap(), bits("000"));
        assert_eq!(decode(StateIndex(8), 3).unwrap(), bits("111"));
        assert_eq!(decode(StateIndex(13), 4).unwrap(), bits("1100"));
        assert!(matches!(
            decode(StateIndex(9), 3),
            Err(Error::StateOutOfRange { index: 9, .. })
        ));
        assert!(decode(StateIndex(0), 3).is_err());
    }

    #[test]
    fn identity_images() {
        assert_eq!(Permutation::identity(1).unwrap().images(), vec![1, 2]);
        assert_eq!(
            Permutation::identity(3).unwrap().images(),
            (1..=8).collect::<Vec<_>>()
        );
        assert!(Permutation::identity(0).is_err());
    }

    #[test]
    fn compose_rejects_mismatched_wires() {
        let a = Permutation::identity(2).unwrap();
        let b = Permutation::identity(3).unwrap();
        assert_eq!(a.compose(&b), Err(Error::WireMismatch(2, 3)));
    }

    #[test]
    fn compose_applies_left_operand_first() {
        let a = Permutation::from_cycles("(1,2)", 2).unwrap();
        let b = Permutation::from_cycles("(2,3)", 2).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.compose(&b).unwrap().images(), vec![3, 1, 2, 4]);
    }

    #[test]
    fn inverse_of_eight_cycle() {
        let p = Permutation::from_cycles("(1,7,6,5,4,2,8,3)", 3).unwrap();
        assert_eq!(p.inverse().to_cycles(), "(1,3,8,2,4,5,6,7)");
        let t = Permutation::from_cycles("(7,8)", 3).unwrap();
        assert_eq!(t.inverse(), t);
    }

    #[test]
    fn cycle_notation_worked_example() {
        let p = Permutation::from_cycles("(1,8,3)(5,7,6)", 3).unwrap();
        assert_eq!(p.images(), vec![8, 2, 1, 4, 7, 5, 6, 3]);
        assert_eq!(p.to_cycles(), "(1,8,3)(5,7,6)");
        let q = Permutation::from_cycles(" (5, 7, 6) (3,1,8)", 3).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn empty_text_is_identity() {
        assert!(Permutation::from_cycles("", 3).unwrap().is_identity());
        assert!(Permutation::from_cycles("()", 3).unwrap().is_identity());
        assert_eq!(Permutation::identity(3).unwrap().to_cycles(), "");
        assert_eq!(Permutation::identity(3).unwrap().to_string(), "()");
    }

    #[test]
    fn cycle_errors() {
        assert_eq!(
            Permutation::from_cycles("(1,2)(2,3)", 3),
            Err(Error::RepeatedElement(2))
        );
        assert!(matches!(
            Permutation::from_cycles("(1,9)", 3),
            Err(Error::StateOutOfRange { index: 9, .. })
        ));
        for bad in ["(1,2", "1,2)", "(1;2)", "(a)", "(1,2)x"] {
            assert!(
                matches!(Permutation::from_cycles(bad, 3), Err(Error::CycleSyntax(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn from_images_validates() {
        assert!(Permutation::from_images(2, &[1, 1, 2, 3]).is_err());
        assert!(Permutation::from_images(2, &[1, 2, 3]).is_err());
        assert!(Permutation::from_images(2, &[0, 1, 2, 3]).is_err());
        assert!(Permutation::from_images(2, &[4, 3, 2, 1]).is_ok());
    }

    #[test]
    fn apply_bits_maps_patterns() {
        let t = Permutation::from_cycles("(7,8)", 3).unwrap();
        assert_eq!(t.apply_bits(&bits("110")).unwrap(), bits("111"));
        assert_eq!(t.apply_bits(&bits("000")).unwrap(), bits("000"));
        assert!(t.apply_bits(&bits("11")).is_err());
    }
}
