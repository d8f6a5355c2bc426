//! Arithmetic over `Z_n`, `n = 2^m - 1`: binary weights, 2-cyclotomic
//! cosets and the weight-class defining sets `T[r,m,S]`.

use alloc::format;
use alloc::vec::Vec;
use core::ops::Range;

use crate::bits::BitVec;
use crate::gf2m::{MAX_DEGREE, MIN_DEGREE};
use crate::{Error, Result};

/// Number of ones in the binary expansion of `j`.
#[inline]
pub fn weight2(j: u64) -> u32 {
    j.count_ones()
}

/// The parameters `(r, m, S)` of a weight-class code.
///
/// `S` is stored as a bitmask over `Z_r`, so `r <= 64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightClassSpec {
    r: u32,
    m: u32,
    s: u64,
}

pub const MAX_R: u32 = 64;

impl WeightClassSpec {
    /// Validated constructor: `r` even, `m` odd with `3 <= m <= 20`, `S`
    /// a duplicate-free subset of `Z_r` with `|S| = r / 2`.
    pub fn new(r: u32, m: u32, s: &[u32]) -> Result<Self> {
        let spec = Self::new_unchecked(r, m, s)?;
        if !r.is_multiple_of(2) {
            return Err(Error::InvalidSpec(format!("r = {r} must be even")));
        }
        if m.is_multiple_of(2) || m < 3 {
            return Err(Error::InvalidSpec(format!("m = {m} must be odd and at least 3")));
        }
        if s.len() as u32 != r / 2 {
            return Err(Error::InvalidSpec(format!("|S| = {} but r / 2 = {}", s.len(), r / 2)));
        }
        Ok(spec)
    }

    /// Relaxed constructor for exploration. Only the structural
    /// requirements are enforced (`1 <= r <= 64`, `2 <= m <= 20`, elements
    /// of `S` distinct and below `r`). Specs built this way that fail
    /// [`WeightClassSpec::is_well_formed`] are never classified.
    pub fn new_unchecked(r: u32, m: u32, s: &[u32]) -> Result<Self> {
        if r == 0 || r > MAX_R {
            return Err(Error::InvalidSpec(format!("r = {r} must lie in 1..={MAX_R}")));
        }
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        let mut mask = 0u64;
        for &i in s {
            if i >= r {
                return Err(Error::InvalidSpec(format!("element {i} of S is not below r = {r}")));
            }
            if mask >> i & 1 == 1 {
                return Err(Error::InvalidSpec(format!("element {i} repeated in S")));
            }
            mask |= 1 << i;
        }
        Ok(WeightClassSpec { r, m, s: mask })
    }

    pub(crate) fn from_mask(r: u32, m: u32, s: u64) -> Self {
        debug_assert!(r <= MAX_R);
        WeightClassSpec { r, m, s }
    }

    /// Whether these parameters satisfy the hypotheses of the weight-class theory:
    /// even `r`, odd `m >= 3`, `|S| = r / 2`.
    pub fn is_well_formed(&self) -> bool {
        self.r.is_multiple_of(2) && self.m % 2 == 1 && self.m >= 3 && self.s.count_ones() == self.r / 2
    }

    #[inline]
    pub fn r(&self) -> u32 {
        self.r
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    /// `t = m mod r`.
    #[inline]
    pub fn t(&self) -> u32 {
        self.m % self.r
    }

    #[inline]
    pub fn n(&self) -> usize {
        (1usize << self.m) - 1
    }

    #[inline]
    pub fn s_mask(&self) -> u64 {
        self.s
    }

    #[inline]
    pub fn contains(&self, residue: u32) -> bool {
        self.s >> (residue % self.r) & 1 == 1
    }

    /// Elements of `S` in increasing order.
    pub fn elements(&self) -> Vec<u32> {
        (0..self.r).filter(|&i| self.contains(i)).collect()
    }

    /// The spec with `S' = Z_r \ S`.
    pub fn complement(&self) -> Self {
        let full = if self.r == 64 { !0 } else { (1u64 << self.r) - 1 };
        WeightClassSpec { r: self.r, m: self.m, s: full & !self.s }
    }

    /// `(t - S) mod r` as a bitmask.
    pub fn reflected_mask(&self) -> u64 {
        let t = self.t();
        (0..self.r).filter(|&i| self.contains(i)).fold(0u64, |acc, i| acc | 1 << ((t + self.r - i) % self.r))
    }

    /// Same `r` and `S` at a different extension degree.
    pub fn with_m(&self, m: u32) -> Result<Self> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        Ok(WeightClassSpec { m, ..*self })
    }
}

impl core::fmt::Display for WeightClassSpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "[r={}, m={}, S={{", self.r, self.m)?;
        for (k, i) in self.elements().into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}]")
    }
}

/// A 2-cyclotomic coset modulo `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicCoset {
    pub leader: usize,
    /// Members in increasing order.
    pub elements: Vec<usize>,
}

impl CyclotomicCoset {
    #[inline]
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// Members in orbit order `s, 2s, 4s, ...` starting from the leader.
    pub fn orbit(&self, n: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size());
        let mut x = self.leader;
        for _ in 0..self.size() {
            out.push(x);
            x = (2 * x) % n;
        }
        out
    }
}

/// The coset `C_s = {s·2^i mod n}` containing `s`.
pub fn coset(s: usize, n: usize) -> CyclotomicCoset {
    assert!(n >= 1 && s < n, "coset representative {s} not in Z_{n}");
    let mut elements = Vec::new();
    let mut x = s;
    loop {
        elements.push(x);
        x = (2 * x) % n;
        if x == s {
            break;
        }
    }
    elements.sort_unstable();
    CyclotomicCoset { leader: elements[0], elements }
}

/// All 2-cyclotomic cosets mod `n`, ordered by leader.
pub fn all_cosets(n: usize) -> Vec<CyclotomicCoset> {
    let mut seen = BitVec::zeros(n);
    let mut out = Vec::new();
    for s in 0..n {
        if !seen.get(s) {
            let c = coset(s, n);
            for &e in &c.elements {
                seen.set(e);
            }
            out.push(c);
        }
    }
    out
}

/// A subset of `Z_n` closed under doubling, stored as a bitmap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DefiningSet {
    bits: BitVec,
}

impl DefiningSet {
    pub fn empty(n: usize) -> Self {
        DefiningSet { bits: BitVec::zeros(n) }
    }

    /// Builds the set and checks closure under doubling.
    pub fn from_members(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set = DefiningSet { bits: BitVec::from_indices(n, members) };
        set.check_closed()?;
        Ok(set)
    }

    /// Union of the cosets led by (or containing) each listed element.
    pub fn from_coset_leaders(n: usize, leaders: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = BitVec::zeros(n);
        for s in leaders {
            for e in coset(s % n, n).elements {
                bits.set(e);
            }
        }
        DefiningSet { bits }
    }

    /// Wraps a bitmap without checking closure.
    pub fn from_bits_unchecked(bits: BitVec) -> Self {
        DefiningSet { bits }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.bits.get(i % self.n())
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }

    pub fn check_closed(&self) -> Result<()> {
        let n = self.n();
        for j in self.bits.iter_ones() {
            let d = (2 * j) % n;
            if !self.bits.get(d) {
                return Err(Error::NotClosed { n, member: j, double: d });
            }
        }
        Ok(())
    }

    pub fn is_closed(&self) -> bool {
        self.check_closed().is_ok()
    }

    /// Smallest element of each coset contained in the set, increasing.
    pub fn coset_leaders(&self) -> Vec<usize> {
        let n = self.n();
        let mut seen = BitVec::zeros(n);
        let mut out = Vec::new();
        for j in self.bits.iter_ones() {
            if seen.get(j) {
                continue;
            }
            let mut x = j;
            loop {
                seen.set(x);
                x = (2 * x) % n;
                if x == j {
                    break;
                }
            }
            out.push(j);
        }
        out
    }

    /// Cosets contained in the set, ordered by leader.
    pub fn cosets(&self) -> Vec<CyclotomicCoset> {
        let n = self.n();
        self.coset_leaders().into_iter().map(|s| coset(s, n)).collect()
    }

    /// `μ·T = {μ·j mod n}`.
    pub fn scaled(&self, mu: usize) -> DefiningSet {
        let n = self.n();
        let mut bits = BitVec::zeros(n);
        for j in self.bits.iter_ones() {
            bits.set(((j as u128 * mu as u128) % n as u128) as usize);
        }
        DefiningSet { bits }
    }

    /// `-T = {n - j mod n}`.
    pub fn negated(&self) -> DefiningSet {
        self.scaled(self.n() - 1)
    }

    /// `Z_n \ T`.
    pub fn complement(&self) -> DefiningSet {
        let mut bits = BitVec::ones(self.n());
        bits.xor_assign(&self.bits);
        DefiningSet { bits }
    }

    pub fn with_zero(&self) -> DefiningSet {
        let mut bits = self.bits.clone();
        bits.set(0);
        DefiningSet { bits }
    }

    pub fn union(&self, other: &DefiningSet) -> DefiningSet {
        let mut bits = self.bits.clone();
        bits.or_assign(&other.bits);
        DefiningSet { bits }
    }

    pub fn is_disjoint(&self, other: &DefiningSet) -> bool {
        !self.bits.intersects(&other.bits)
    }

    pub fn is_subset_of(&self, other: &DefiningSet) -> bool {
        self.bits.is_subset_of(&other.bits)
    }
}

/// `T[r,m,S] = {1 <= j <= n-1 : w_2(j) mod r ∈ S}`.
pub fn defining_set(spec: &WeightClassSpec) -> DefiningSet {
    defining_set_range(spec, 1..spec.n())
}

/// The members of `T[r,m,S]` that fall inside `range`; the union over a
/// partition of `1..n` equals [`defining_set`].
pub fn defining_set_range(spec: &WeightClassSpec, range: Range<usize>) -> DefiningSet {
    let n = spec.n();
    let mut bits = BitVec::zeros(n);
    let start = range.start.max(1);
    let end = range.end.min(n);
    for j in start..end {
        if spec.contains(weight2(j as u64) % spec.r()) {
            bits.set(j);
        }
    }
    DefiningSet { bits }
}
