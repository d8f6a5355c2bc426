//! Fixed-length packed bit vectors, LSB-first.
//!
//! Bit `i` lives in word `i / 64` at position `i % 64`. Bits at or above
//! `len` are always zero.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; words_for(len)] }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = BitVec { len, words: vec![!0; words_for(len)] };
        v.mask_tail();
        v
    }

    /// Builds a vector of length `len` from raw words; excess bits are cleared.
    pub fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(words_for(len), 0);
        let mut v = BitVec { len, words };
        v.mask_tail();
        v
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = BitVec::zeros(len);
        for i in indices {
            v.set(i);
        }
        v
    }

    fn mask_tail(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i >> 6] |= 1u64 << (i & 63);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i >> 6] &= !(1u64 << (i & 63));
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i >> 6] ^= 1u64 << (i & 63);
    }

    pub fn assign(&mut self, i: usize, bit: bool) {
        if bit {
            self.set(i)
        } else {
            self.clear(i)
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn or_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    /// Popcount of `self & other`.
    pub fn and_count(&self, other: &BitVec) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVec) -> bool {
        let acc = self.words.iter().zip(&other.words).fold(0u64, |acc, (a, b)| acc ^ (a & b));
        acc.count_ones() & 1 == 1
    }

    pub fn intersects(&self, other: &BitVec) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset_of(&self, other: &BitVec) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Copy with the length changed; truncation drops high bits.
    pub fn resized(&self, len: usize) -> BitVec {
        BitVec::from_words(len, self.words.clone())
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// Highest set bit, if any.
    pub fn highest_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    /// Hex mask with bit 0 as the least significant digit, e.g. `0xB` for `1101`.
    pub fn to_hex(&self) -> String {
        let mut s = String::from("0x");
        let top = match self.highest_one() {
            None => {
                s.push('0');
                return s;
            }
            Some(t) => t / 64,
        };
        write!(s, "{:X}", self.words[top]).unwrap();
        for w in self.words[..top].iter().rev() {
            write!(s, "{:016X}", w).unwrap();
        }
        s
    }

    /// Inverse of [`BitVec::to_hex`]. Returns `None` on malformed input or
    /// when a set bit does not fit in `len`.
    pub fn from_hex(len: usize, hex: &str) -> Option<BitVec> {
        let digits = hex.strip_prefix("0x").or_else(|| hex.strip_prefix("0X"))?;
        if digits.is_empty() {
            return None;
        }
        let mut v = BitVec::zeros(len);
        for (pos, c) in digits.chars().rev().enumerate() {
            let d = c.to_digit(16)? as u64;
            for b in 0..4 {
                if (d >> b) & 1 == 1 {
                    let i = pos * 4 + b;
                    if i >= len {
                        return None;
                    }
                    v.set(i);
                }
            }
        }
        Some(v)
    }
}

impl core::fmt::Debug for BitVec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "BitVec[{}](", self.len)?;
        for i in 0..self.len {
            f.write_char(if self.get(i) { '1' } else { '0' })?;
        }
        f.write_char(')')
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_uses_lsb_as_constant_term() {
        let v = BitVec::from_indices(4, [0, 1, 3]);
        assert_eq!(v.to_hex(), "0xB");
        assert_eq!(BitVec::zeros(10).to_hex(), "0x0");
        let wide = BitVec::from_indices(130, [0, 64, 129]);
        assert_eq!(wide.to_hex(), "0x200000000000000010000000000000001");
        assert_eq!(BitVec::from_hex(130, &wide.to_hex()), Some(wide));
        assert_eq!(BitVec::from_hex(3, "0xB"), None);
    }

    #[test]
    fn ones_masks_tail() {
        let v = BitVec::ones(70);
        assert_eq!(v.count_ones(), 70);
        assert_eq!(v.highest_one(), Some(69));
        assert_eq!(v.iter_ones().count(), 70);
    }

    #[test]
    fn dot_and_subset() {
        let a = BitVec::from_indices(100, [1, 70, 99]);
        let b = BitVec::from_indices(100, [1, 70]);
        assert!(!a.dot(&b));
        assert!(b.is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
        assert_eq!(a.and_count(&b), 2);
    }
}
