//! Arithmetic in binary extension fields GF(2^m), 1 <= m <= 16.
//!
//! Elements are polynomials over GF(2) of degree below `m`, packed into the
//! low bits of a `u16` (lowest-degree coefficient in bit 0). Multiplication
//! is carry-less shift-and-xor with reduction by the field modulus.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An element of GF(2^m): the coefficient bits of a polynomial of degree < m.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf(pub u16);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

impl fmt::LowerHex for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

/// Remainder of `a` modulo `b` in GF(2)[x]. `b` must be nonzero.
fn poly_rem(mut a: u32, b: u32) -> u32 {
    let db = 31 - b.leading_zeros();
    while a != 0 {
        let da = 31 - a.leading_zeros();
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

/// Smallest nontrivial divisor of `poly` of degree at most deg/2, if any.
fn find_divisor(poly: u32) -> Option<u32> {
    let deg = 31 - poly.leading_zeros();
    (2u32..(1 << (deg / 2 + 1))).find(|&d| poly_rem(poly, d) == 0)
}

/// The numerically smallest irreducible polynomial of degree `m`.
pub fn default_modulus(m: u32) -> Result<u32> {
    if !(1..=16).contains(&m) {
        return Err(Error::DegreeOutOfRange(m));
    }
    ((1u32 << m) | 1..(1u32 << (m + 1)))
        .step_by(2)
        .find(|&p| find_divisor(p).is_none())
        .ok_or(Error::DegreeOutOfRange(m))
}

/// A validated description of GF(2^m).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    m: u32,
    modulus: u32,
}

impl Field {
    /// Builds GF(2^m) from an explicit modulus, rejecting anything that is not
    /// an irreducible polynomial of degree exactly `m`.
    pub fn new(m: u32, modulus: u32) -> Result<Self> {
        if !(1..=16).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        if modulus >> m != 1 {
            return Err(Error::ModulusDegree { m, modulus });
        }
        if modulus & 1 == 0 {
            return Err(Error::ModulusConstantTerm { modulus });
        }
        if let Some(divisor) = find_divisor(modulus) {
            return Err(Error::ReducibleModulus { modulus, divisor });
        }
        Ok(Field { m, modulus })
    }

    /// GF(2^m) with the default (smallest irreducible) modulus.
    pub fn with_degree(m: u32) -> Result<Self> {
        Field::new(m, default_modulus(m)?)
    }

    /// GF(q) with the default modulus; `q` must be 2^m with 1 <= m <= 16.
    pub fn with_order(q: u32) -> Result<Self> {
        if !q.is_power_of_two() || q < 2 {
            return Err(Error::UnsupportedQ(q as u64));
        }
        Field::with_degree(q.trailing_zeros())
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Field order q = 2^m.
    pub fn order(&self) -> u32 {
        1 << self.m
    }

    pub fn contains(&self, a: Gf) -> bool {
        (a.0 as u32) < self.order()
    }

    /// Checks that a raw value is an element of this field.
    pub fn elem(&self, value: u32) -> Result<Gf> {
        if value < self.order() {
            Ok(Gf(value as u16))
        } else {
            Err(Error::NotAnElement { value, m: self.m })
        }
    }

    /// All field elements in increasing bit order.
    pub fn elements(&self) -> impl Iterator<Item = Gf> + Clone {
        (0..self.order()).map(|v| Gf(v as u16))
    }

    /// Nonzero field elements in increasing bit order.
    pub fn nonzero(&self) -> impl Iterator<Item = Gf> + Clone {
        (1..self.order()).map(|v| Gf(v as u16))
    }

    #[inline]
    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        Gf(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        let top = 1u32 << self.m;
        let mut x = a.0 as u32;
        let mut y = b.0 as u32;
        let mut acc = 0u32;
        while y != 0 && x != 0 {
            if y & 1 == 1 {
                acc ^= x;
            }
            y >>= 1;
            x <<= 1;
            if x & top != 0 {
                x ^= self.modulus;
            }
        }
        Gf(acc as u16)
    }

    #[inline]
    pub fn square(&self, a: Gf) -> Gf {
        self.mul(a, a)
    }

    pub fn pow(&self, a: Gf, mut e: u64) -> Gf {
        let mut base = a;
        let mut acc = Gf::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, computed as a^(q-2).
    pub fn inv(&self, a: Gf) -> Result<Gf> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.order() as u64 - 2))
    }

    pub fn div(&self, a: Gf, b: Gf) -> Result<Gf> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The unique square root a^(2^(m-1)); squaring is a bijection in characteristic 2.
    pub fn sqrt(&self, a: Gf) -> Gf {
        (1..self.m).fold(a, |x, _| self.square(x))
    }

    /// Partial trace a + a^2 + ... + a^(2^(j-1)).
    pub fn trace(&self, a: Gf, j: u32) -> Result<Gf> {
        if j < 1 || j > self.m {
            return Err(Error::Domain(format!("trace length j={j} outside 1..={}", self.m)));
        }
        let mut acc = Gf::ZERO;
        let mut frob = a;
        for _ in 0..j {
            acc = self.add(acc, frob);
            frob = self.square(frob);
        }
        Ok(acc)
    }

    /// Coordinatewise (Schur) product u * v.
    pub fn schur(&self, u: &[Gf], v: &[Gf]) -> Result<Vec<Gf>> {
        if u.len() != v.len() {
            return Err(Error::LengthMismatch {
                left: u.len(),
                right: v.len(),
            });
        }
        Ok(u.iter().zip(v).map(|(&a, &b)| self.mul(a, b)).collect())
    }

    /// Coordinatewise inverse; every coordinate must be nonzero.
    pub fn invert_vec(&self, a: &[Gf]) -> Result<Vec<Gf>> {
        a.iter()
            .enumerate()
            .map(|(i, &x)| self.inv(x).map_err(|_| Error::ZeroCoordinate(i)))
            .collect()
    }

    pub fn square_vec(&self, v: &[Gf]) -> Vec<Gf> {
        v.iter().map(|&x| self.square(x)).collect()
    }

    pub fn dot(&self, u: &[Gf], v: &[Gf]) -> Gf {
        u.iter()
            .zip(v)
            .fold(Gf::ZERO, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }

    /// Parses a lowercase (or uppercase) hex element, with or without `0x`.
    pub fn parse_elem(&self, s: &str) -> Result<Gf> {
        let digits = s.strip_prefix("0x").unwrap_or(s);
        let value = u32::from_str_radix(digits, 16).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("bad field element {s:?}: {e}"),
        })?;
        self.elem(value)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF2M m={} mod=0x{:x}", self.m, self.modulus)
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Parses the `GF2M m=<m> mod=0x<hex>` header.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            line: 1,
            msg: format!("{msg}: {s:?}"),
        };
        let mut parts = s.split(' ');
        if parts.next() != Some("GF2M") {
            return Err(bad("expected GF2M header"));
        }
        let m = parts
            .next()
            .and_then(|p| p.strip_prefix("m="))
            .and_then(|v| v.parse::<u32>().ok())
            .ok_or_else(|| bad("expected m=<degree>"))?;
        let modulus = parts
            .next()
            .and_then(|p| p.strip_prefix("mod=0x"))
            .and_then(|v| u32::from_str_radix(v, 16).ok())
            .ok_or_else(|| bad("expected mod=0x<hex>"))?;
        if parts.next().is_some() {
            return Err(bad("trailing fields"));
        }
        Field::new(m, modulus)
    }
}
