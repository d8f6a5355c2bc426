//! GF(2^m) for 2 <= m <= 20 with log/antilog tables.
//!
//! The field is built on the smallest primitive polynomial of degree `m`
//! (ordering polynomials by their coefficient mask), so `α = x` generates
//! the multiplicative group of order `n = 2^m - 1`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 20;

/// An element of GF(2^m) as a polynomial in α of degree < m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElem(pub u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

// characteristic 2: addition is XOR
#[allow(clippy::suspicious_arithmetic_impl)]
impl core::ops::Add for FieldElem {
    type Output = FieldElem;
    #[inline]
    fn add(self, rhs: FieldElem) -> FieldElem {
        FieldElem(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl core::ops::AddAssign for FieldElem {
    #[inline]
    fn add_assign(&mut self, rhs: FieldElem) {
        self.0 ^= rhs.0;
    }
}

#[derive(Clone)]
pub struct FieldGF2m {
    m: u32,
    modulus: u32,
    antilog: Vec<u32>,
    log: Vec<u32>,
}

impl core::fmt::Debug for FieldGF2m {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("FieldGF2m").field("m", &self.m).field("modulus", &self.modulus_hex()).finish()
    }
}

/// Carry-less product of two polynomials of degree < 32.
#[inline]
fn clmul(a: u64, b: u64) -> u64 {
    let mut acc = 0u64;
    let mut a = a;
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    acc
}

/// Reduce `a` modulo the degree-`m` polynomial `modulus`.
#[inline]
fn reduce(mut a: u64, modulus: u64, m: u32) -> u64 {
    while a >> m != 0 {
        let top = 63 - a.leading_zeros();
        a ^= modulus << (top - m);
    }
    a
}

fn x_pow_mod(mut e: u64, modulus: u64, m: u32) -> u64 {
    let mut base = reduce(2, modulus, m);
    let mut acc = 1u64;
    while e != 0 {
        if e & 1 == 1 {
            acc = reduce(clmul(acc, base), modulus, m);
        }
        base = reduce(clmul(base, base), modulus, m);
        e >>= 1;
    }
    acc
}

/// Distinct prime factors by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// True when `modulus` (a mask with bit `m` set) is primitive: `x` has
/// multiplicative order exactly `2^m - 1` modulo it.
pub fn is_primitive(modulus: u64, m: u32) -> bool {
    if modulus >> m != 1 || modulus & 1 == 0 {
        return false;
    }
    let order = (1u64 << m) - 1;
    if x_pow_mod(order, modulus, m) != 1 {
        return false;
    }
    prime_factors(order).into_iter().all(|p| x_pow_mod(order / p, modulus, m) != 1)
}

/// Smallest primitive polynomial of degree `m`, as a coefficient mask.
pub fn smallest_primitive(m: u32) -> Result<u64> {
    if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
        return Err(Error::DegreeOutOfRange(m));
    }
    let lo = (1u64 << m) | 1;
    let hi = 1u64 << (m + 1);
    (lo..hi).step_by(2).find(|&f| is_primitive(f, m)).ok_or(Error::DegreeOutOfRange(m))
}

impl FieldGF2m {
    pub fn new(m: u32) -> Result<Self> {
        let modulus = smallest_primitive(m)? as u32;
        let size = 1usize << m;
        let n = size - 1;
        let mut antilog = vec![0u32; n];
        let mut log = vec![0u32; size];
        let mut x = 1u32;
        for (e, slot) in antilog.iter_mut().enumerate() {
            *slot = x;
            log[x as usize] = e as u32;
            x <<= 1;
            if x & (1 << m) != 0 {
                x ^= modulus;
            }
        }
        debug_assert_eq!(x, 1);
        Ok(FieldGF2m { m, modulus, antilog, log })
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Order of the multiplicative group, `2^m - 1`.
    #[inline]
    pub fn n(&self) -> usize {
        self.antilog.len()
    }

    /// Modulus coefficient mask including the `x^m` term.
    #[inline]
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn modulus_hex(&self) -> String {
        alloc::format!("0x{:X}", self.modulus)
    }

    /// `α^e`; `e` is reduced mod `n`.
    #[inline]
    pub fn pow_alpha(&self, e: usize) -> FieldElem {
        FieldElem(self.antilog[e % self.n()])
    }

    pub fn log(&self, a: FieldElem) -> Result<usize> {
        if a.is_zero() {
            return Err(Error::LogOfZero);
        }
        Ok(self.log[a.0 as usize] as usize)
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        a + b
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.is_zero() || b.is_zero() {
            return FieldElem::ZERO;
        }
        let e = self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize;
        let n = self.n();
        FieldElem(self.antilog[if e >= n { e - n } else { e }])
    }

    /// `a · α^e` without a second table lookup for the exponent.
    #[inline]
    pub fn mul_alpha_pow(&self, a: FieldElem, e: usize) -> FieldElem {
        if a.is_zero() {
            return FieldElem::ZERO;
        }
        let n = self.n();
        FieldElem(self.antilog[(self.log[a.0 as usize] as usize + e % n) % n])
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        let e = self.log(a)?;
        Ok(self.pow_alpha((self.n() - e) % self.n()))
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if a.is_zero() {
            return if e == 0 { FieldElem::ONE } else { FieldElem::ZERO };
        }
        let n = self.n() as u64;
        let l = self.log[a.0 as usize] as u64;
        self.pow_alpha(((l * (e % n)) % n) as usize)
    }

    /// Iterates over all field elements in bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..(1u32 << self.m)).map(FieldElem)
    }
}
