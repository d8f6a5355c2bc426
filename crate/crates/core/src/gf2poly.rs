//! Polynomials over GF(2) and synthesis of generator and check polynomials
//! from defining sets.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::bits::{words_for, BitVec};
use crate::cyclotomic::{CyclotomicCoset, DefiningSet};
use crate::gf2m::{FieldElem, FieldGF2m};
use crate::{Error, Result};

/// A polynomial over GF(2); bit `i` is the coefficient of `x^i`.
///
/// The backing vector is always exactly `degree + 1` bits long, and empty
/// for the zero polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryPoly {
    coeffs: BitVec,
}

/// `dst ^= src << shift`, with `dst` long enough to hold the result.
fn xor_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let ws = shift / 64;
    let bs = shift % 64;
    if bs == 0 {
        for (k, &w) in src.iter().enumerate() {
            dst[ws + k] ^= w;
        }
    } else {
        for (k, &w) in src.iter().enumerate() {
            dst[ws + k] ^= w << bs;
            let hi = w >> (64 - bs);
            if hi != 0 {
                dst[ws + k + 1] ^= hi;
            }
        }
    }
}

fn top_bit(words: &[u64]) -> Option<usize> {
    words.iter().enumerate().rev().find(|(_, &w)| w != 0).map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
}

impl BinaryPoly {
    pub fn zero() -> Self {
        BinaryPoly { coeffs: BitVec::zeros(0) }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn monomial(k: usize) -> Self {
        BinaryPoly { coeffs: BitVec::from_indices(k + 1, [k]) }
    }

    /// `x^n + 1`.
    pub fn x_n_plus_one(n: usize) -> Self {
        BinaryPoly::from_exponents([0, n])
    }

    /// Sum of `x^e`; repeated exponents cancel.
    pub fn from_exponents(exps: impl IntoIterator<Item = usize>) -> Self {
        let exps: Vec<usize> = exps.into_iter().collect();
        let len = exps.iter().max().map_or(0, |&e| e + 1);
        let mut bits = BitVec::zeros(len);
        for e in exps {
            bits.flip(e);
        }
        Self::from_bits(bits)
    }

    /// Takes a coefficient vector of any length and normalizes it.
    pub fn from_bits(bits: BitVec) -> Self {
        Self::from_words(bits.words().to_vec())
    }

    fn from_words(words: Vec<u64>) -> Self {
        let len = top_bit(&words).map_or(0, |d| d + 1);
        BinaryPoly { coeffs: BitVec::from_words(len, words) }
    }

    pub fn from_hex(hex: &str) -> Option<Self> {
        let digits = hex.strip_prefix("0x").or_else(|| hex.strip_prefix("0X"))?;
        BitVec::from_hex(digits.len() * 4, hex).map(Self::from_bits)
    }

    /// Degree, or `None` for the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    #[inline]
    pub fn coeff(&self, i: usize) -> bool {
        i < self.coeffs.len() && self.coeffs.get(i)
    }

    /// Coefficients as a bit vector of length `degree + 1`.
    #[inline]
    pub fn bits(&self) -> &BitVec {
        &self.coeffs
    }

    /// Coefficients padded (or truncated) to `len` bits.
    pub fn to_bits(&self, len: usize) -> BitVec {
        self.coeffs.resized(len)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.count_ones()
    }

    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.iter_ones()
    }

    pub fn to_hex(&self) -> String {
        self.coeffs.to_hex()
    }

    pub fn add(&self, other: &BinaryPoly) -> BinaryPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut words = self.coeffs.words().to_vec();
        words.resize(words_for(len), 0);
        for (a, b) in words.iter_mut().zip(other.coeffs.words()) {
            *a ^= *b;
        }
        Self::from_words(words)
    }

    pub fn mul(&self, other: &BinaryPoly) -> BinaryPoly {
        let (Some(da), Some(db)) = (self.degree(), other.degree()) else {
            return BinaryPoly::zero();
        };
        // iterate over the sparser operand, shift the other
        let (sparse, dense) = if self.weight() <= other.weight() { (self, other) } else { (other, self) };
        let mut out = vec![0u64; words_for(da + db + 1) + 1];
        for i in sparse.coeffs.iter_ones() {
            xor_shifted(&mut out, dense.coeffs.words(), i);
        }
        Self::from_words(out)
    }

    pub fn divmod(&self, divisor: &BinaryPoly) -> Result<(BinaryPoly, BinaryPoly)> {
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(da) = self.degree() else {
            return Ok((BinaryPoly::zero(), BinaryPoly::zero()));
        };
        if da < db {
            return Ok((BinaryPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.words().to_vec();
        rem.push(0);
        let mut quot = vec![0u64; words_for(da - db + 1)];
        let dw = divisor.coeffs.words();
        let mut d = da;
        loop {
            if rem[d / 64] >> (d % 64) & 1 == 1 {
                let shift = d - db;
                quot[shift / 64] |= 1 << (shift % 64);
                xor_shifted(&mut rem, dw, shift);
            }
            if d == db {
                break;
            }
            d -= 1;
        }
        Ok((Self::from_words(quot), Self::from_words(rem)))
    }

    pub fn rem(&self, divisor: &BinaryPoly) -> Result<BinaryPoly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// `x^deg · p(1/x)`: the coefficient string reversed.
    pub fn reciprocal(&self) -> BinaryPoly {
        let Some(d) = self.degree() else {
            return BinaryPoly::zero();
        };
        BinaryPoly::from_exponents(self.coeffs.iter_ones().map(|i| d - i))
    }

    /// Value at `α^i` in `field`.
    pub fn eval_alpha_pow(&self, field: &FieldGF2m, i: usize) -> FieldElem {
        let n = field.n();
        let step = i % n;
        let mut acc = FieldElem::ZERO;
        for j in self.coeffs.iter_ones() {
            acc += field.pow_alpha(((j as u64 * step as u64) % n as u64) as usize);
        }
        acc
    }

    /// Human-readable sparse form, highest degree first: `x^3 + x + 1`.
    pub fn to_sparse_string(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut exps: Vec<usize> = self.exponents().collect();
        exps.reverse();
        let mut s = String::new();
        for (k, e) in exps.into_iter().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            match e {
                0 => s.push('1'),
                1 => s.push('x'),
                _ => write!(s, "x^{e}").unwrap(),
            }
        }
        s
    }
}

impl core::fmt::Debug for BinaryPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.to_sparse_string())
    }
}

impl core::fmt::Display for BinaryPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.to_sparse_string())
    }
}

/// `∏_{i ∈ coset} (x - α^i)`, expanded in GF(2^m)[x]; every coefficient must
/// land in GF(2).
pub fn minimal_poly(field: &FieldGF2m, coset: &CyclotomicCoset) -> Result<BinaryPoly> {
    // coefficients low to high
    let mut acc: Vec<FieldElem> = vec![FieldElem::ONE];
    for &i in &coset.elements {
        let root = field.pow_alpha(i);
        let mut next = vec![FieldElem::ZERO; acc.len() + 1];
        for (k, &c) in acc.iter().enumerate() {
            next[k + 1] += c;
            next[k] += field.mul(c, root);
        }
        acc = next;
    }
    let mut bits = BitVec::zeros(acc.len());
    for (k, c) in acc.into_iter().enumerate() {
        match c.0 {
            0 => {}
            1 => bits.set(k),
            _ => return Err(Error::CoefficientNotBinary { leader: coset.leader }),
        }
    }
    Ok(BinaryPoly::from_bits(bits))
}

/// Product of the minimal polynomials of the cosets in `t`, in leader order.
pub fn generator_poly(field: &FieldGF2m, t: &DefiningSet) -> Result<BinaryPoly> {
    if t.n() != field.n() {
        return Err(Error::LengthMismatch { expected: field.n(), got: t.n() });
    }
    t.check_closed()?;
    t.cosets().iter().try_fold(BinaryPoly::one(), |acc, c| Ok(acc.mul(&minimal_poly(field, c)?)))
}

/// `h = (x^n + 1) / g`; fails if `g` does not divide `x^n + 1`.
pub fn check_poly(g: &BinaryPoly, n: usize) -> Result<BinaryPoly> {
    let (h, r) = BinaryPoly::x_n_plus_one(n).divmod(g)?;
    if !r.is_zero() {
        return Err(Error::NotADivisor { n });
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{all_cosets, coset, defining_set, WeightClassSpec};
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn p(exps: &[usize]) -> BinaryPoly {
        BinaryPoly::from_exponents(exps.iter().copied())
    }

    /// Bit-by-bit reference product.
    fn naive_mul(a: &BinaryPoly, b: &BinaryPoly) -> BinaryPoly {
        let mut exps = Vec::new();
        for i in a.exponents() {
            for j in b.exponents() {
                exps.push(i + j);
            }
        }
        BinaryPoly::from_exponents(exps)
    }

    fn is_irreducible_by_trial(f: &BinaryPoly) -> bool {
        let d = f.degree().unwrap();
        for deg in 1..=d / 2 {
            for mask in (1u64 << deg)..(1u64 << (deg + 1)) {
                let q = BinaryPoly::from_bits(BitVec::from_words(deg + 1, vec![mask]));
                if f.rem(&q).unwrap().is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(p(&[1, 0]).mul(&p(&[1, 0])), p(&[2, 0]));
        assert!(p(&[7, 0]).rem(&p(&[3, 1, 0])).unwrap().is_zero());
        let q = p(&[5, 3, 2]);
        assert_eq!(q.mul(&BinaryPoly::one()), q);
        assert_eq!(q.divmod(&BinaryPoly::zero()), Err(Error::DivisionByZero));
        assert_eq!(BinaryPoly::zero().degree(), None);
        assert_eq!(p(&[3, 1, 0]).to_hex(), "0xB");
        assert_eq!(p(&[3, 1, 0]).to_string(), "x^3 + x + 1");
        assert_eq!(BinaryPoly::from_hex("0xB"), Some(p(&[3, 1, 0])));
    }

    #[test]
    fn minimal_poly_examples() {
        let f = FieldGF2m::new(3).unwrap();
        assert_eq!(minimal_poly(&f, &coset(0, 7)).unwrap(), p(&[1, 0]));
        assert_eq!(minimal_poly(&f, &coset(1, 7)).unwrap(), p(&[3, 1, 0]));
        assert_eq!(minimal_poly(&f, &coset(3, 7)).unwrap(), p(&[3, 2, 0]));
    }

    #[test]
    fn non_coset_product_is_rejected() {
        let f = FieldGF2m::new(3).unwrap();
        let bogus = CyclotomicCoset { leader: 1, elements: vec![1, 2] };
        assert_eq!(minimal_poly(&f, &bogus), Err(Error::CoefficientNotBinary { leader: 1 }));
        let open = DefiningSet::from_bits_unchecked(BitVec::from_indices(7, [1]));
        assert!(matches!(generator_poly(&f, &open), Err(Error::NotClosed { .. })));
    }

    #[test]
    fn generator_and_check_examples() {
        let f = FieldGF2m::new(3).unwrap();
        let t = DefiningSet::from_members(7, [1, 2, 4]).unwrap();
        let g = generator_poly(&f, &t).unwrap();
        assert_eq!(g, p(&[3, 1, 0]));
        assert_eq!(generator_poly(&f, &DefiningSet::empty(7)).unwrap(), BinaryPoly::one());
        assert_eq!(check_poly(&g, 7).unwrap(), p(&[4, 2, 1, 0]));
        assert_eq!(check_poly(&p(&[2, 0]), 7), Err(Error::NotADivisor { n: 7 }));
        assert_eq!(g.reciprocal(), p(&[3, 2, 0]));
        assert_eq!(g.reciprocal().reciprocal(), g);
    }

    #[test]
    fn r2_generator_m5() {
        let f = FieldGF2m::new(5).unwrap();
        let spec = WeightClassSpec::new(2, 5, &[1]).unwrap();
        let t = defining_set(&spec);
        assert_eq!(t.len(), 15);
        assert_eq!(t.coset_leaders(), vec![1, 7, 11]);
        let g = generator_poly(&f, &t).unwrap();
        assert_eq!(g.degree(), Some(15));
        let by_cosets = [1, 7, 11]
            .iter()
            .map(|&s| minimal_poly(&f, &coset(s, 31)).unwrap())
            .fold(BinaryPoly::one(), |a, b| naive_mul(&a, &b));
        assert_eq!(g, by_cosets);
        assert!(check_poly(&g, 31).is_ok());
    }

    #[test]
    fn minimal_polys_irreducible_and_rooted() {
        for m in 2..=9u32 {
            let f = FieldGF2m::new(m).unwrap();
            let n = f.n();
            for c in all_cosets(n) {
                let mp = minimal_poly(&f, &c).unwrap();
                assert_eq!(mp.degree(), Some(c.size()));
                assert!(is_irreducible_by_trial(&mp), "m={m} leader={}", c.leader);
                for i in 0..n {
                    let root = mp.eval_alpha_pow(&f, i).is_zero();
                    assert_eq!(root, c.elements.contains(&i));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn mul_matches_naive(a in proptest::collection::vec(0usize..200, 0..30),
                             b in proptest::collection::vec(0usize..200, 0..30)) {
            let (a, b) = (BinaryPoly::from_exponents(a), BinaryPoly::from_exponents(b));
            prop_assert_eq!(a.mul(&b), naive_mul(&a, &b));
        }

        #[test]
        fn division_identity(a in proptest::collection::vec(0usize..300, 0..40),
                             b in proptest::collection::vec(0usize..150, 1..20)) {
            let (a, b) = (BinaryPoly::from_exponents(a), BinaryPoly::from_exponents(b));
            prop_assume!(!b.is_zero());
            let (q, r) = a.divmod(&b).unwrap();
            prop_assert_eq!(q.mul(&b).add(&r), a);
            if let Some(dr) = r.degree() {
                prop_assert!(dr < b.degree().unwrap());
            }
        }

        #[test]
        fn reciprocal_is_involution_on_unit_constant(a in proptest::collection::vec(1usize..200, 0..30)) {
            let mut a = a;
            a.push(0);
            let a = BinaryPoly::from_exponents(a);
            prop_assume!(a.coeff(0));
            prop_assert_eq!(a.reciprocal().reciprocal(), a);
        }
    }
}
