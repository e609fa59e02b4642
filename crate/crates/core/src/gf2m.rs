//! Arithmetic in the binary fields GF(2^m), 1 <= m <= 16.
//!
//! Elements are bitmasks (`Fe = u32`): bit i holds the coefficient of x^i
//! in the residue-class representative of degree < m. Addition is XOR;
//! multiplication is carry-less shift-and-xor followed by reduction modulo
//! a fixed irreducible polynomial of degree m.
//!
//! No log/antilog tables are kept: the largest field used in anger is
//! GF(2^16) and everything downstream is bounded by group orders, not by
//! field-multiplication throughput.

use crate::arith::factor;
use crate::error::{Error, Result};
use std::fmt;

/// A field element, stored as a polynomial bitmask of degree < m.
pub type Fe = u32;

/// A concrete binary field GF(2^m) with a chosen reduction polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct F2m {
    m: u32,
    poly: u32,
}

/// Largest supported extension degree.
pub const MAX_M: u32 = 16;

impl F2m {
    /// Build GF(2^m) over an explicit degree-m irreducible polynomial
    /// (bit m must be set; lower bits give the tail).
    pub fn new(m: u32, poly: u32) -> Result<Self> {
        if m == 0 || m > MAX_M {
            return Err(Error::Parameter(format!(
                "field degree m={m} out of range 1..={MAX_M}"
            )));
        }
        if poly_degree(poly as u64) != Some(m) {
            return Err(Error::Parameter(format!(
                "polynomial {poly:#x} does not have degree {m}"
            )));
        }
        if !poly_irreducible(poly as u64) {
            return Err(Error::Parameter(format!(
                "polynomial {poly:#x} is reducible over GF(2)"
            )));
        }
        Ok(F2m { m, poly })
    }

    /// Build GF(2^m) over the numerically smallest irreducible polynomial
    /// of degree m.
    pub fn with_default_poly(m: u32) -> Result<Self> {
        Ok(F2m {
            m,
            poly: default_poly(m)?,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Field size q = 2^m.
    pub fn q(&self) -> u32 {
        1 << self.m
    }

    pub fn poly(&self) -> u32 {
        self.poly
    }

    pub fn contains(&self, a: Fe) -> bool {
        a < self.q()
    }

    /// Iterate every field element, 0 upward.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        0..self.q()
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        debug_assert!(self.contains(a) && self.contains(b));
        a ^ b
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        debug_assert!(self.contains(a) && self.contains(b));
        let mut acc: u64 = 0;
        let aa = a as u64;
        let mut bb = b as u64;
        let mut shift = 0;
        while bb != 0 {
            if bb & 1 == 1 {
                acc ^= aa << shift;
            }
            bb >>= 1;
            shift += 1;
        }
        self.reduce(acc)
    }

    /// Reduce a carry-less product of degree <= 2m-2 modulo the field polynomial.
    fn reduce(&self, mut acc: u64) -> Fe {
        let m = self.m;
        let poly = self.poly as u64;
        let mut bit = 2 * m as i64 - 2;
        while bit >= m as i64 {
            if (acc >> bit) & 1 == 1 {
                acc ^= poly << (bit as u32 - m);
            }
            bit -= 1;
        }
        acc as Fe
    }

    pub fn sq(&self, a: Fe) -> Fe {
        self.mul(a, a)
    }

    /// a^e by square-and-multiply; 0^0 = 1 by convention.
    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut out: Fe = 1;
        while e != 0 {
            if e & 1 == 1 {
                out = self.mul(out, base);
            }
            base = self.sq(base);
            e >>= 1;
        }
        out
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a == 0 {
            return Err(Error::Domain("inverse of zero in GF(2^m)".into()));
        }
        Ok(self.pow(a, self.q() as u64 - 2))
    }

    /// The Frobenius power a^(2^l). The exponent l is reduced mod m since
    /// the Frobenius of GF(2^m) has order m.
    pub fn frob(&self, l: u32, a: Fe) -> Fe {
        let l = l % self.m;
        let mut x = a;
        for _ in 0..l {
            x = self.sq(x);
        }
        x
    }

    /// The unique square root: squaring is a bijection in characteristic 2,
    /// and a^(2^(m-1)) inverts it.
    pub fn sqrt(&self, a: Fe) -> Fe {
        self.frob(self.m - 1, a)
    }

    /// Absolute trace to GF(2): sum of all Frobenius conjugates.
    pub fn trace(&self, a: Fe) -> Fe {
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.m {
            acc ^= x;
            x = self.sq(x);
        }
        debug_assert!(acc <= 1);
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Fe) -> Result<u64> {
        if a == 0 {
            return Err(Error::Domain("order of zero in GF(2^m)^x".into()));
        }
        let q1 = self.q() as u64 - 1;
        let mut ord = q1;
        for (p, _) in factor(q1) {
            while ord % p == 0 && self.pow(a, ord / p) == 1 {
                ord /= p;
            }
        }
        Ok(ord)
    }

    /// The smallest-bitmask generator of the multiplicative group.
    pub fn generator(&self) -> Fe {
        let q1 = self.q() as u64 - 1;
        for a in 1..self.q() {
            if self.element_order(a).expect("nonzero") == q1 {
                return a;
            }
        }
        unreachable!("GF(2^m)^x is cyclic and nonempty")
    }

    /// Elements fixed by a ↦ a^(2^l): the subfield GF(2^gcd(m,l)),
    /// returned sorted. With l ≡ 0 (mod m) this is the whole field.
    pub fn fixed_subfield(&self, l: u32) -> Vec<Fe> {
        self.elements().filter(|&a| self.frob(l, a) == a).collect()
    }
}

impl fmt::Display for F2m {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gf(m={},poly={:#x})", self.m, self.poly)
    }
}

/// Degree of a nonzero polynomial bitmask; None for the zero polynomial.
fn poly_degree(p: u64) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(63 - p.leading_zeros())
    }
}

/// Remainder of polynomial long division over GF(2).
fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = poly_degree(b).expect("division by zero polynomial");
    while let Some(da) = poly_degree(a) {
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

/// Irreducibility over GF(2) by trial division against every polynomial of
/// degree between 1 and deg/2. Fine for degrees up to 16.
pub fn poly_irreducible(p: u64) -> bool {
    let d = match poly_degree(p) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    for div in 2u64..(1u64 << (d / 2 + 1)) {
        if poly_degree(div).unwrap() >= 1 && poly_rem(p, div) == 0 {
            return false;
        }
    }
    true
}

/// The numerically smallest irreducible polynomial of degree m.
pub fn default_poly(m: u32) -> Result<u32> {
    if m == 0 || m > MAX_M {
        return Err(Error::Parameter(format!(
            "field degree m={m} out of range 1..={MAX_M}"
        )));
    }
    for p in (1u64 << m)..(1u64 << (m + 1)) {
        if poly_irreducible(p) {
            return Ok(p as u32);
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(2)")
}
