//! Cyclic codes, their duals and one-bit parity extensions.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::bits::BitVec;
use crate::bounds::{self, BchCertificate};
use crate::cyclotomic::DefiningSet;
use crate::gf2m::FieldGF2m;
use crate::gf2poly::{check_poly, generator_poly, BinaryPoly};
use crate::{Error, Result};

/// Dense binary matrix with packed rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    rows: Vec<BitVec>,
    cols: usize,
    systematic: bool,
}

impl GeneratorMatrix {
    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Result<Self> {
        for r in &rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch { expected: cols, got: r.len() });
            }
        }
        Ok(GeneratorMatrix { rows, cols, systematic: false })
    }

    #[inline]
    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    #[inline]
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn num_cols(&self) -> usize {
        self.cols
    }

    /// True when produced by [`GeneratorMatrix::to_systematic`].
    #[inline]
    pub fn is_systematic(&self) -> bool {
        self.systematic
    }

    /// Reduced row-echelon form, scanning columns left to right and taking
    /// the first available row as pivot. Zero rows are dropped. Returns the
    /// reduced matrix and its pivot columns.
    pub fn to_systematic(&self) -> (GeneratorMatrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == rows.len() {
                break;
            }
            let Some(p) = (next..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(next, p);
            let pivot = rows[next].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != next && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            pivots.push(col);
            next += 1;
        }
        rows.truncate(next);
        (GeneratorMatrix { rows, cols: self.cols, systematic: true }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.to_systematic().1.len()
    }

    /// `G · H^T = 0` over GF(2).
    pub fn is_orthogonal_to(&self, other: &GeneratorMatrix) -> bool {
        self.cols == other.cols && self.rows.iter().all(|a| other.rows.iter().all(|b| !a.dot(b)))
    }

    /// `G · G^T = 0` over GF(2).
    pub fn is_self_orthogonal(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, a)| self.rows[i..].iter().all(|b| !a.dot(b)))
    }

    pub fn row_weights(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(BitVec::count_ones)
    }

    /// `message · G`; bit `i` of the message selects row `i`.
    pub fn encode(&self, message: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.cols);
        for i in message.iter_ones() {
            out.xor_assign(&self.rows[i]);
        }
        out
    }

    /// Columns reordered so that new column `j` is old column `perm[j]`.
    pub fn permute_columns(&self, perm: &[usize]) -> GeneratorMatrix {
        let rows = self
            .rows
            .iter()
            .map(|r| BitVec::from_indices(self.cols, (0..self.cols).filter(|&j| r.get(perm[j]))))
            .collect();
        GeneratorMatrix { rows, cols: self.cols, systematic: false }
    }
}

/// Behaviour shared by the cyclic codes and their extensions for distance
/// computations.
pub trait LinearCode {
    fn length(&self) -> usize;
    fn dimension(&self) -> usize;
    fn generator_matrix(&self) -> GeneratorMatrix;
    fn contains(&self, word: &BitVec) -> bool;
    /// A nonzero codeword available without materializing the matrix.
    fn sample_codeword(&self) -> BitVec;
    /// Best BCH lower bound over the given multipliers, with its certificate.
    fn bch_lower_bound(&self, candidates: &[usize]) -> (usize, Option<BchCertificate>);
}

/// Binary cyclic code of length `n = 2^m - 1` given by its defining set.
#[derive(Debug, Clone)]
pub struct CyclicCode {
    field: Arc<FieldGF2m>,
    defining_set: DefiningSet,
    generator: BinaryPoly,
}

impl PartialEq for CyclicCode {
    fn eq(&self, other: &Self) -> bool {
        self.field.m() == other.field.m()
            && self.defining_set == other.defining_set
            && self.generator == other.generator
    }
}

impl CyclicCode {
    pub fn from_defining_set(field: Arc<FieldGF2m>, defining_set: DefiningSet) -> Result<Self> {
        let generator = generator_poly(&field, &defining_set)?;
        Ok(CyclicCode { field, defining_set, generator })
    }

    pub fn field(&self) -> &Arc<FieldGF2m> {
        &self.field
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.field.n()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.n() - self.defining_set.len()
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.defining_set
    }

    pub fn generator(&self) -> &BinaryPoly {
        &self.generator
    }

    pub fn check_polynomial(&self) -> BinaryPoly {
        check_poly(&self.generator, self.n()).expect("generator divides x^n + 1 by construction")
    }

    /// The dual code, generated by the reciprocal of the check polynomial,
    /// with defining set `Z_n \ (-T)`.
    pub fn dual(&self) -> CyclicCode {
        let generator = self.check_polynomial().reciprocal();
        let defining_set = self.defining_set.negated().complement();
        CyclicCode { field: self.field.clone(), defining_set, generator }
    }

    pub fn extend(&self) -> ExtendedCode {
        ExtendedCode { base: self.clone() }
    }

    /// Membership by division: `w(x) mod g(x) = 0`.
    pub fn contains_by_division(&self, word: &BitVec) -> bool {
        word.len() == self.n()
            && BinaryPoly::from_bits(word.clone()).rem(&self.generator).expect("generator is nonzero").is_zero()
    }

    /// Membership by roots: `w(α^i) = 0` for every `i` in the defining set.
    pub fn contains_by_roots(&self, word: &BitVec) -> bool {
        if word.len() != self.n() {
            return false;
        }
        let w = BinaryPoly::from_bits(word.clone());
        self.defining_set.members().all(|i| w.eval_alpha_pow(&self.field, i).is_zero())
    }

    /// Multiplier candidates `2^((m-1)/2) - 1` and `2^((m+1)/2) - 1` that
    /// are units mod `n`, falling back to `1`.
    pub fn default_multipliers(&self) -> Vec<usize> {
        bounds::default_v_candidates(self.field.m())
    }

    /// Whether `self` is the even-weight subcode of `sup`: contained in it,
    /// of codimension one, with every generator row of even weight.
    pub fn is_even_weight_subcode_of(&self, sup: &CyclicCode) -> bool {
        self.n() == sup.n()
            && sup.defining_set.is_subset_of(&self.defining_set)
            && self.generator.rem(&sup.generator).is_ok_and(|r| r.is_zero())
            && sup.k() == self.k() + 1
            && self.generator.weight().is_multiple_of(2)
    }
}

impl LinearCode for CyclicCode {
    fn length(&self) -> usize {
        self.n()
    }

    fn dimension(&self) -> usize {
        self.k()
    }

    /// Rows `x^i g(x)` for `0 <= i < k`.
    fn generator_matrix(&self) -> GeneratorMatrix {
        let n = self.n();
        let exps: Vec<usize> = self.generator.exponents().collect();
        let rows = (0..self.k()).map(|i| BitVec::from_indices(n, exps.iter().map(|e| e + i))).collect();
        GeneratorMatrix { rows, cols: n, systematic: false }
    }

    fn contains(&self, word: &BitVec) -> bool {
        self.contains_by_division(word)
    }

    fn sample_codeword(&self) -> BitVec {
        self.generator.to_bits(self.n())
    }

    fn bch_lower_bound(&self, candidates: &[usize]) -> (usize, Option<BchCertificate>) {
        match bounds::best_certificate(&self.defining_set, candidates) {
            Some(c) => (c.d_lower().min(self.n()), Some(c)),
            None => (1, None),
        }
    }
}

/// `C̄ = {(c_0, ..., c_{n-1}, c_n) : c ∈ C, Σ c_i = 0}`; the parity bit sits
/// at index `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtendedCode {
    base: CyclicCode,
}

impl ExtendedCode {
    pub fn base(&self) -> &CyclicCode {
        &self.base
    }

    /// Appends the overall parity bit to a length-`n` word.
    pub fn extend_word(word: &BitVec) -> BitVec {
        let mut out = word.resized(word.len() + 1);
        if word.count_ones() % 2 == 1 {
            out.set(word.len());
        }
        out
    }

    fn parity_of_generator(&self) -> usize {
        self.base.generator.weight() % 2
    }

    /// `G·G^T = 0` for the shift-form generator, computed from the linear
    /// autocorrelation of `g`: rows `i` and `j` meet in
    /// `Σ_u g_u g_{u+|i-j|}` positions plus the product of their parities.
    pub fn is_self_orthogonal_by_correlation(&self) -> bool {
        let g = self.base.generator.bits();
        let p = self.parity_of_generator();
        (0..self.dimension()).all(|lag| (and_count_shifted(g, lag) + p).is_multiple_of(2))
    }

    /// `G·G^T = 0` on the materialized generator matrix.
    pub fn is_self_orthogonal_explicit(&self) -> bool {
        self.generator_matrix().is_self_orthogonal()
    }

    /// `G·G^T = 0`, by whichever route suits the size.
    pub fn is_self_orthogonal(&self) -> bool {
        // explicit products up to 2^24 matrix bits, correlation beyond
        if self.dimension() * self.length() <= 1 << 24 {
            self.is_self_orthogonal_explicit()
        } else {
            self.is_self_orthogonal_by_correlation()
        }
    }

    /// `2·dim = length` and `G·G^T = 0`.
    pub fn is_self_dual(&self) -> bool {
        2 * self.dimension() == self.length() && self.is_self_orthogonal()
    }

    /// Self-orthogonal with every generator row of weight `0 mod 4`; for a
    /// self-orthogonal binary code this forces every codeword weight to be
    /// a multiple of 4.
    pub fn is_doubly_even(&self) -> bool {
        let row_weight = self.base.generator.weight() + self.parity_of_generator();
        (self.dimension() == 0 || row_weight.is_multiple_of(4)) && self.is_self_orthogonal()
    }
}

/// `popcount(g & (g >> shift))`.
fn and_count_shifted(g: &BitVec, shift: usize) -> usize {
    let w = g.words();
    let ws = shift / 64;
    let bs = shift % 64;
    let mut total = 0;
    for i in 0..w.len().saturating_sub(ws) {
        let lo = w[i + ws] >> bs;
        let hi = if bs == 0 { 0 } else { w.get(i + ws + 1).map_or(0, |x| x << (64 - bs)) };
        total += (w[i] & (lo | hi)).count_ones() as usize;
    }
    total
}

impl LinearCode for ExtendedCode {
    fn length(&self) -> usize {
        self.base.n() + 1
    }

    fn dimension(&self) -> usize {
        self.base.k()
    }

    fn generator_matrix(&self) -> GeneratorMatrix {
        let base = self.base.generator_matrix();
        let rows = base.rows.iter().map(ExtendedCode::extend_word).collect();
        GeneratorMatrix { rows, cols: self.length(), systematic: false }
    }

    fn contains(&self, word: &BitVec) -> bool {
        if word.len() != self.length() || !word.count_ones().is_multiple_of(2) {
            return false;
        }
        self.base.contains(&word.resized(self.base.n()))
    }

    fn sample_codeword(&self) -> BitVec {
        ExtendedCode::extend_word(&self.base.sample_codeword())
    }

    /// Base bound rounded up to the next even number: every extended
    /// codeword has even weight at least the base weight.
    fn bch_lower_bound(&self, candidates: &[usize]) -> (usize, Option<BchCertificate>) {
        let (d, cert) = self.base.bch_lower_bound(candidates);
        (d + d % 2, cert)
    }
}
