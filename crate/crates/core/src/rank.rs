//! Lehmer-code ranking of small permutations.
//!
//! Used to index dense tables over the whole symmetric group when the
//! register has at most 3 wires (at most 8 states, 40320 permutations).

use crate::perm::Permutation;

/// Maximum degree handled by the ranked representation.
pub const MAX_DEGREE: usize = 8;

const FACTORIALS: [u32; MAX_DEGREE + 1] = [1, 1, 2, 6, 24, 120, 720, 5040, 40320];

pub fn factorial(n: usize) -> u32 {
    FACTORIALS[n]
}

/// Lexicographic rank of a permutation of `0..perm.len()`.
pub fn rank(perm: &[u8]) -> u32 {
    let n = perm.len();
    let mut seen: u32 = 0;
    let mut r = 0;
    for (i, &v) in perm.iter().enumerate() {
        let smaller_unused = v as u32 - (seen & ((1 << v) - 1)).count_ones();
        r += smaller_unused * FACTORIALS[n - 1 - i];
        seen |= 1 << v;
    }
    r
}

/// Inverse of [`rank`]: the permutation of `0..degree` with the given rank.
pub fn unrank(mut r: u32, degree: usize) -> [u8; MAX_DEGREE] {
    let mut out = [0u8; MAX_DEGREE];
    let mut unused: u32 = (1 << degree) - 1;
    for (i, slot) in out.iter_mut().enumerate().take(degree) {
        let f = FACTORIALS[degree - 1 - i];
        let mut k = r / f;
        r %= f;
        let mut v = 0;
        loop {
            if unused >> v & 1 == 1 {
                if k == 0 {
                    break;
                }
                k -= 1;
            }
            v += 1;
        }
        unused &= !(1 << v);
        *slot = v as u8;
    }
    out
}

/// Dense index over the symmetric group on `2^n` states, `n <= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankSpace {
    wires: u8,
    degree: usize,
}

impl RankSpace {
    pub fn new(wires: u8) -> Option<Self> {
        (1..=3).contains(&wires).then_some(RankSpace {
            wires,
            degree: 1 << wires,
        })
    }

    pub fn wires(&self) -> u8 {
        self.wires
    }

    /// Number of permutations, `(2^n)!`.
    pub fn order(&self) -> usize {
        factorial(self.degree) as usize
    }

    pub fn identity_rank(&self) -> u32 {
        0
    }

    pub fn rank_of(&self, p: &Permutation) -> u32 {
        debug_assert_eq!(p.wires(), self.wires);
        let mut buf = [0u8; MAX_DEGREE];
        for (b, &v) in buf.iter_mut().zip(p.raw()) {
            *b = v as u8;
        }
        rank(&buf[..self.degree])
    }

    pub fn perm_of(&self, r: u32) -> Permutation {
        let img = unrank(r, self.degree);
        Permutation::from_fn_unchecked(self.wires, |i| img[i as usize] as u32)
    }

    /// Table `t` with `t[r] = rank(compose(unrank(r), gen))`, i.e. right
    /// multiplication by `gen` (append `gen` to the cascade).
    pub fn right_mul_table(&self, gen: &Permutation) -> Vec<u16> {
        let g = gen.raw();
        let mut buf = [0u8; MAX_DEGREE];
        (0..self.order() as u32)
            .map(|r| {
                let p = unrank(r, self.degree);
                for i in 0..self.degree {
                    buf[i] = g[p[i] as usize] as u8;
                }
                rank(&buf[..self.degree]) as u16
            })
            .collect()
    }
}
