//! Minimum distance: exhaustive Gray-code enumeration for small dimension,
//! BCH lower bound plus information-set search otherwise.
//!
//! The enumeration walks the message space in Gray order so each step costs
//! one row XOR. It is split into index ranges whose results merge
//! associatively; [`ExactSearch`] exposes those pieces so callers can run
//! ranges on several threads and still get the sequential answer.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bits::BitVec;
use crate::bounds::BchCertificate;
use crate::code::{GeneratorMatrix, LinearCode};
use crate::{Error, Result};

/// Largest dimension accepted by the exhaustive routines.
pub const ENUMERATION_BUDGET: usize = 24;

/// Matrix size (bits) above which the information-set search is skipped.
pub const SEARCH_MATRIX_BUDGET: usize = 1 << 30;

/// Combination count per permutation that caps the message weight.
pub const SEARCH_COMBINATION_BUDGET: u64 = 1 << 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Exhaustive,
    InformationSet,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Exhaustive => "exhaustive",
            Method::InformationSet => "information-set",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedBound {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    /// A codeword of weight `upper`.
    pub witness: BitVec,
    pub method: Method,
    /// Minimum weight among odd-weight codewords (exhaustive only).
    pub min_odd_weight: Option<usize>,
    pub certificate: Option<BchCertificate>,
    pub seed: Option<u64>,
    pub effort: Option<usize>,
    /// Search rounds actually run; stops early once the bounds meet.
    pub rounds: Option<usize>,
    /// Largest message weight enumerated per permutation.
    pub max_message_weight: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    /// `counts[w]` codewords of weight `w`, for `w = 0..=n`.
    pub counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.counts.iter().enumerate().skip(1).find(|(_, &c)| c > 0).map(|(w, _)| w)
    }

    pub fn is_even(&self) -> bool {
        self.counts.iter().enumerate().all(|(w, &c)| c == 0 || w % 2 == 0)
    }

    pub fn is_doubly_even(&self) -> bool {
        self.counts.iter().enumerate().all(|(w, &c)| c == 0 || w % 4 == 0)
    }

    pub fn min_odd_weight(&self) -> Option<usize> {
        self.counts.iter().enumerate().find(|(w, &c)| c > 0 && w % 2 == 1).map(|(w, _)| w)
    }

    pub fn min_nonzero_even_weight(&self) -> Option<usize> {
        self.counts.iter().enumerate().skip(2).find(|(w, &c)| c > 0 && w % 2 == 0).map(|(w, _)| w)
    }
}

/// Partial result of enumerating a range of Gray-code indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumStats {
    /// Lightest nonzero codeword seen first.
    pub min: Option<(usize, BitVec)>,
    pub min_odd: Option<usize>,
    pub distribution: Option<Vec<u64>>,
}

impl EnumStats {
    /// Combine with the stats of a later range; earlier witnesses win ties.
    pub fn merge(self, later: EnumStats) -> EnumStats {
        let min = match (self.min, later.min) {
            (Some(a), Some(b)) => Some(if b.0 < a.0 { b } else { a }),
            (a, b) => a.or(b),
        };
        let min_odd = match (self.min_odd, later.min_odd) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let distribution = match (self.distribution, later.distribution) {
            (Some(mut a), Some(b)) => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                Some(a)
            }
            (a, b) => a.or(b),
        };
        EnumStats { min, min_odd, distribution }
    }
}

/// Exhaustive enumeration over a code's message space, split into ranges.
pub struct ExactSearch {
    k: usize,
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl ExactSearch {
    pub fn new<C: LinearCode + ?Sized>(code: &C) -> Result<Self> {
        let k = code.dimension();
        if k > ENUMERATION_BUDGET {
            return Err(Error::EnumerationBudget { k, budget: ENUMERATION_BUDGET });
        }
        if k == 0 {
            return Err(Error::ZeroDimension);
        }
        Self::from_matrix(&code.generator_matrix())
    }

    pub fn from_matrix(gm: &GeneratorMatrix) -> Result<Self> {
        let k = gm.num_rows();
        if k > ENUMERATION_BUDGET {
            return Err(Error::EnumerationBudget { k, budget: ENUMERATION_BUDGET });
        }
        let n = gm.num_cols();
        let stride = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; k * stride];
        for (i, r) in gm.rows().iter().enumerate() {
            rows[i * stride..i * stride + r.words().len()].copy_from_slice(r.words());
        }
        Ok(ExactSearch { k, n, stride, rows })
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    /// Number of messages, `2^k`.
    pub fn total(&self) -> u64 {
        1u64 << self.k
    }

    /// `parts` contiguous ranges covering `0..2^k`.
    pub fn ranges(&self, parts: usize) -> Vec<Range<u64>> {
        let total = self.total();
        let parts = (parts.max(1) as u64).min(total);
        (0..parts).map(|p| p * total / parts..(p + 1) * total / parts).collect()
    }

    /// Enumerates Gray indices in `range`; message `i ^ (i >> 1)` at index `i`.
    pub fn run(&self, range: Range<u64>, want_distribution: bool) -> EnumStats {
        let s = self.stride;
        let mut cw = vec![0u64; s];
        let mut dist = want_distribution.then(|| vec![0u64; self.n + 1]);
        let mut min: Option<(usize, u64)> = None;
        let mut min_odd: Option<usize> = None;
        if range.start < range.end {
            let g = range.start ^ (range.start >> 1);
            for bit in 0..self.k {
                if g >> bit & 1 == 1 {
                    for (c, r) in cw.iter_mut().zip(&self.rows[bit * s..(bit + 1) * s]) {
                        *c ^= r;
                    }
                }
            }
            let mut i = range.start;
            loop {
                let w: usize = cw.iter().map(|x| x.count_ones() as usize).sum();
                if let Some(d) = dist.as_mut() {
                    d[w] += 1;
                }
                if i != 0 {
                    if min.is_none_or(|(mw, _)| w < mw) {
                        min = Some((w, i));
                    }
                    if w % 2 == 1 && min_odd.is_none_or(|mo| w < mo) {
                        min_odd = Some(w);
                    }
                }
                i += 1;
                if i == range.end {
                    break;
                }
                let bit = i.trailing_zeros() as usize;
                for (c, r) in cw.iter_mut().zip(&self.rows[bit * s..(bit + 1) * s]) {
                    *c ^= r;
                }
            }
        }
        let min = min.map(|(w, idx)| (w, self.codeword_at(idx)));
        EnumStats { min, min_odd, distribution: dist }
    }

    /// Codeword for Gray index `idx`.
    pub fn codeword_at(&self, idx: u64) -> BitVec {
        let g = idx ^ (idx >> 1);
        let s = self.stride;
        let mut cw = vec![0u64; s];
        for bit in 0..self.k {
            if g >> bit & 1 == 1 {
                for (c, r) in cw.iter_mut().zip(&self.rows[bit * s..(bit + 1) * s]) {
                    *c ^= r;
                }
            }
        }
        BitVec::from_words(self.n, cw)
    }

    /// Turns merged stats for the whole range into a bound.
    pub fn finish(&self, stats: EnumStats) -> Result<CertifiedBound> {
        let (d, witness) = stats.min.ok_or(Error::ZeroDimension)?;
        Ok(CertifiedBound {
            lower: d,
            upper: d,
            exact: true,
            witness,
            method: Method::Exhaustive,
            min_odd_weight: stats.min_odd,
            certificate: None,
            seed: None,
            effort: None,
            rounds: None,
            max_message_weight: None,
        })
    }
}

/// Exact minimum distance by full enumeration, `k <= 24`.
pub fn exact_min_distance<C: LinearCode + ?Sized>(code: &C) -> Result<CertifiedBound> {
    let search = ExactSearch::new(code)?;
    let stats = search.run(0..search.total(), false);
    search.finish(stats)
}

/// Full weight distribution, `k <= 24`.
pub fn weight_distribution<C: LinearCode + ?Sized>(code: &C) -> Result<WeightDistribution> {
    let search = ExactSearch::new(code)?;
    let stats = search.run(0..search.total(), true);
    Ok(WeightDistribution { counts: stats.distribution.expect("requested") })
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Largest `p <= 3` such that enumerating all messages of weight `<= p`
/// stays within [`SEARCH_COMBINATION_BUDGET`].
pub fn search_depth(k: usize) -> usize {
    let k = k as u64;
    let mut total = 0u64;
    let mut depth = 0;
    for p in 1..=3u64.min(k) {
        total = total.saturating_add(binomial(k, p));
        if total > SEARCH_COMBINATION_BUDGET {
            break;
        }
        depth = p as usize;
    }
    depth.max(1)
}

/// Lower bound from the best BCH certificate over `candidates`; upper bound
/// from up to `effort` rounds of information-set search seeded by `seed`.
/// Each round permutes the columns, row-reduces, and tries every combination
/// of at most three systematic rows. With `effort = 0`, or a generator matrix
/// over [`SEARCH_MATRIX_BUDGET`], the upper bound is the weight of the code's
/// sample codeword (the generator polynomial).
pub fn bounded_min_distance<C: LinearCode + ?Sized>(
    code: &C,
    effort: usize,
    seed: u64,
    candidates: &[usize],
) -> Result<CertifiedBound> {
    let n = code.length();
    let k = code.dimension();
    if k == 0 {
        return Err(Error::ZeroDimension);
    }
    let (lower, certificate) = code.bch_lower_bound(candidates);
    let mut witness = code.sample_codeword();
    let mut upper = witness.count_ones();
    let depth = search_depth(k);
    let mut rounds = 0;
    if upper > lower && k * n <= SEARCH_MATRIX_BUDGET {
        let gm = code.generator_matrix();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..n).collect();
        while rounds < effort && upper > lower {
            rounds += 1;
            perm.shuffle(&mut rng);
            let (sys, _) = gm.permute_columns(&perm).to_systematic();
            if let Some((w, word)) = lightest_combination(sys.rows(), depth, upper) {
                upper = w;
                let mut orig = BitVec::zeros(n);
                for j in word.iter_ones() {
                    orig.set(perm[j]);
                }
                witness = orig;
            }
        }
    }
    debug_assert!(lower <= upper && code.contains(&witness));
    Ok(CertifiedBound {
        lower,
        upper,
        exact: lower == upper,
        witness,
        method: Method::InformationSet,
        min_odd_weight: None,
        certificate,
        seed: Some(seed),
        effort: Some(effort),
        rounds: Some(rounds),
        max_message_weight: Some(depth),
    })
}

/// Lightest sum of at most `depth` rows, if lighter than `bound`.
fn lightest_combination(rows: &[BitVec], depth: usize, bound: usize) -> Option<(usize, BitVec)> {
    let mut best: Option<(usize, BitVec)> = None;
    let mut limit = bound;
    let k = rows.len();
    for a in 0..k {
        let wa = rows[a].count_ones();
        if wa > 0 && wa < limit {
            limit = wa;
            best = Some((wa, rows[a].clone()));
        }
        if depth < 2 {
            continue;
        }
        for b in a + 1..k {
            let mut ab = rows[a].clone();
            ab.xor_assign(&rows[b]);
            let wab = ab.count_ones();
            if wab > 0 && wab < limit {
                limit = wab;
                best = Some((wab, ab.clone()));
            }
            if depth < 3 {
                continue;
            }
            for rc in &rows[b + 1..] {
                let w = xor_weight(&ab, rc);
                if w > 0 && w < limit {
                    limit = w;
                    let mut abc = ab.clone();
                    abc.xor_assign(rc);
                    best = Some((w, abc));
                }
            }
        }
    }
    best
}

#[inline]
fn xor_weight(a: &BitVec, b: &BitVec) -> usize {
    a.words().iter().zip(b.words()).map(|(x, y)| (x ^ y).count_ones() as usize).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::CyclicCode;
    use crate::cyclotomic::{defining_set, DefiningSet, WeightClassSpec};
    use crate::gf2m::FieldGF2m;
    use alloc::sync::Arc;

    fn code(r: u32, m: u32, s: &[u32]) -> CyclicCode {
        let spec = WeightClassSpec::new(r, m, s).unwrap();
        CyclicCode::from_defining_set(Arc::new(FieldGF2m::new(m).unwrap()), defining_set(&spec)).unwrap()
    }

    /// Plain binary-order enumeration, no Gray code.
    fn brute_distribution(gm: &GeneratorMatrix) -> Vec<u64> {
        let k = gm.num_rows();
        let mut d = vec![0u64; gm.num_cols() + 1];
        for msg in 0u64..1 << k {
            d[gm.encode(&BitVec::from_words(k, vec![msg])).count_ones()] += 1;
        }
        d
    }

    #[test]
    fn hamming_distance_three() {
        let f = Arc::new(FieldGF2m::new(3).unwrap());
        let c = CyclicCode::from_defining_set(f.clone(), DefiningSet::from_members(7, [1, 2, 4]).unwrap()).unwrap();
        let b = exact_min_distance(&c).unwrap();
        assert_eq!((b.lower, b.upper, b.exact), (3, 3, true));
        assert_eq!(b.witness.count_ones(), 3);
        assert!(c.contains_by_roots(&b.witness));
        let rep = CyclicCode::from_defining_set(f, DefiningSet::from_members(7, 1..7).unwrap()).unwrap();
        assert_eq!(exact_min_distance(&rep).unwrap().upper, 7);
    }

    #[test]
    fn r2_distances_m5() {
        let c = code(2, 5, &[1]);
        let b = exact_min_distance(&c).unwrap();
        assert_eq!(b.upper, 7);
        assert_eq!(b.min_odd_weight, Some(7));
        assert_eq!(exact_min_distance(&c.extend()).unwrap().upper, 8);
        let dual = c.dual();
        let wd = weight_distribution(&dual).unwrap();
        assert!(wd.is_even());
        assert_eq!(wd.min_nonzero_weight(), Some(8));
    }

    #[test]
    fn gray_enumeration_matches_binary_order() {
        for (r, m, s) in [(2u32, 5u32, vec![0u32]), (4, 5, vec![1, 2])] {
            let c = code(r, m, &s);
            let gm = crate::code::LinearCode::generator_matrix(&c);
            let wd = weight_distribution(&c).unwrap();
            assert_eq!(wd.counts, brute_distribution(&gm));
            assert_eq!(wd.total(), 1 << c.k());
        }
        let e = code(2, 3, &[1]).extend();
        let wd = weight_distribution(&e).unwrap();
        assert_eq!(wd.counts, vec![1, 0, 0, 0, 14, 0, 0, 0, 1]);
        assert!(wd.is_doubly_even());
    }

    #[test]
    fn full_space_distribution_is_binomial() {
        let f = Arc::new(FieldGF2m::new(3).unwrap());
        let c = CyclicCode::from_defining_set(f, DefiningSet::empty(7)).unwrap();
        assert_eq!(weight_distribution(&c).unwrap().counts, vec![1, 7, 21, 35, 35, 21, 7, 1]);
    }

    #[test]
    fn partitioned_runs_merge_to_sequential() {
        let c = code(2, 5, &[1]);
        let search = ExactSearch::new(&c).unwrap();
        let whole = search.run(0..search.total(), true);
        for parts in [1, 2, 3, 7, 64] {
            let merged =
                search.ranges(parts).into_iter().map(|r| search.run(r, true)).reduce(EnumStats::merge).unwrap();
            assert_eq!(merged, whole, "parts={parts}");
        }
    }

    #[test]
    fn budget_is_a_hard_error() {
        let c = code(2, 7, &[1]);
        assert_eq!(exact_min_distance(&c), Err(Error::EnumerationBudget { k: 64, budget: 24 }));
        assert!(weight_distribution(&c).is_err());
    }

    #[test]
    fn bounded_search_m7() {
        let c = code(2, 7, &[1]);
        let zero_effort = bounded_min_distance(&c, 0, 1, &c.default_multipliers()).unwrap();
        assert_eq!(zero_effort.upper, c.generator().weight());
        assert_eq!(zero_effort.lower, 9);
        let b = bounded_min_distance(&c, 20, 7, &c.default_multipliers()).unwrap();
        assert!(b.lower >= 9 && b.upper >= b.lower);
        assert!(c.contains_by_roots(&b.witness));
        assert_eq!(b.witness.count_ones(), b.upper);
        assert_eq!(b, bounded_min_distance(&c, 20, 7, &c.default_multipliers()).unwrap());
    }

    #[test]
    fn bounded_search_brackets_exact() {
        for (r, m, s) in [(2u32, 5u32, vec![1u32]), (4, 5, vec![0, 2]), (8, 5, vec![0, 1, 3, 7])] {
            let c = code(r, m, &s);
            let exact = exact_min_distance(&c).unwrap().upper;
            let b = bounded_min_distance(&c, 10, 3, &c.default_multipliers()).unwrap();
            assert!(b.lower <= exact && exact <= b.upper, "{r} {m} {s:?}");
            let e = c.extend();
            let exact_e = exact_min_distance(&e).unwrap().upper;
            let be = bounded_min_distance(&e, 10, 3, &c.default_multipliers()).unwrap();
            assert!(be.lower <= exact_e && exact_e <= be.upper);
        }
    }

    #[test]
    fn pair_members_share_distance() {
        for m in [3u32, 5] {
            for r in [2u32, 4, 8] {
                for set in crate::duadic::enumerate_catalog(r, m % r).unwrap() {
                    let spec = WeightClassSpec::new(r, m, &set).unwrap();
                    let f = Arc::new(FieldGF2m::new(m).unwrap());
                    let c1 = CyclicCode::from_defining_set(f.clone(), defining_set(&spec)).unwrap();
                    let c2 = CyclicCode::from_defining_set(f, defining_set(&spec.complement())).unwrap();
                    let d1 = exact_min_distance(&c1).unwrap().upper;
                    assert_eq!(d1, exact_min_distance(&c2).unwrap().upper, "{spec}");
                    let (bch, _) = c1.bch_lower_bound(&c1.default_multipliers());
                    assert!(bch <= d1);
                }
            }
        }
    }

    #[test]
    fn dual_distance_is_min_even_weight() {
        let c = code(2, 5, &[1]);
        let full = weight_distribution(&c).unwrap();
        let dual = exact_min_distance(&c.dual()).unwrap().upper;
        assert_eq!(Some(dual), full.min_nonzero_even_weight());
        assert!(dual >= exact_min_distance(&c).unwrap().upper);
        assert_eq!(full.min_odd_weight(), Some(7));
    }

    #[test]
    fn depth_respects_budget() {
        assert_eq!(search_depth(64), 3);
        assert_eq!(search_depth(256), 3);
        assert_eq!(search_depth(1024), 2);
        assert_eq!(search_depth(2), 2);
    }
}
