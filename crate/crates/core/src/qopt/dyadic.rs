//! Exact Gaussian dyadic numbers `(re + im·i) / 2^exp`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A complex number with integer real and imaginary numerators over a
/// power-of-two denominator. Always kept in lowest terms, so `==` is value
/// equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GaussDyadic {
    re: i128,
    im: i128,
    exp: u32,
}

impl GaussDyadic {
    pub const ZERO: GaussDyadic = GaussDyadic { re: 0, im: 0, exp: 0 };
    pub const ONE: GaussDyadic = GaussDyadic { re: 1, im: 0, exp: 0 };
    pub const I: GaussDyadic = GaussDyadic { re: 0, im: 1, exp: 0 };

    pub fn new(re: i128, im: i128, exp: u32) -> Self {
        GaussDyadic { re, im, exp }.normalized()
    }

    pub fn parts(self) -> (i128, i128, u32) {
        (self.re, self.im, self.exp)
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn conj(self) -> Self {
        GaussDyadic { im: -self.im, ..self }
    }

    fn normalized(mut self) -> Self {
        if self.is_zero() {
            return Self::ZERO;
        }
        let shift = (self.re | self.im).trailing_zeros().min(self.exp);
        self.re >>= shift;
        self.im >>= shift;
        self.exp -= shift;
        self
    }

    fn scaled_to(self, exp: u32) -> (i128, i128) {
        let s = exp - self.exp;
        let f = 1i128.checked_shl(s).expect("dyadic exponent overflow");
        (
            self.re.checked_mul(f).expect("dyadic overflow"),
            self.im.checked_mul(f).expect("dyadic overflow"),
        )
    }
}

impl Add for GaussDyadic {
    type Output = GaussDyadic;
    fn add(self, rhs: Self) -> Self {
        let exp = self.exp.max(rhs.exp);
        let (a, b) = self.scaled_to(exp);
        let (c, d) = rhs.scaled_to(exp);
        GaussDyadic::new(a + c, b + d, exp)
    }
}

impl Neg for GaussDyadic {
    type Output = GaussDyadic;
    fn neg(self) -> Self {
        GaussDyadic {
            re: -self.re,
            im: -self.im,
            exp: self.exp,
        }
    }
}

impl Sub for GaussDyadic {
    type Output = GaussDyadic;
    fn sub(self, rhs: Self) -> Self {
        self + -rhs
    }
}

impl Mul for GaussDyadic {
    type Output = GaussDyadic;
    fn mul(self, rhs: Self) -> Self {
        let m = |x: i128, y: i128| x.checked_mul(y).expect("dyadic overflow");
        GaussDyadic::new(
            m(self.re, rhs.re) - m(self.im, rhs.im),
            m(self.re, rhs.im) + m(self.im, rhs.re),
            self.exp + rhs.exp,
        )
    }
}

impl From<i128> for GaussDyadic {
    fn from(v: i128) -> Self {
        GaussDyadic::new(v, 0, 0)
    }
}

impl fmt::Display for GaussDyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = match (self.re, self.im) {
            (r, 0) => r.to_string(),
            (0, i) => format!("{i}i"),
            (r, i) if i < 0 => format!("({r}-{}i)", -i),
            (r, i) => format!("({r}+{i}i)"),
        };
        if self.exp == 0 {
            f.write_str(&num)
        } else {
            write!(f, "{num}/{}", 1u128 << self.exp)
        }
    }
}
