//! Duadic splittings `(T[r,m,S], T[r,m,S'], -1)` and the parameter
//! families that certify their minimum distances.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bounds::{check_lemma_hypotheses, lemma_parameters, LemmaId, Side};
use crate::cyclotomic::{defining_set, DefiningSet, WeightClassSpec};
use crate::{Error, Result};

/// `Z_r \ S = (t - S) mod r`, with `t = m mod r`.
///
/// Through `w_2(n - j) = m - w_2(j)` this is the same as
/// `-T[r,m,S] = T[r,m,S']` in `Z_n`; see [`is_duadic_in_zn`].
pub fn is_duadic(spec: &WeightClassSpec) -> bool {
    spec.complement().s_mask() == spec.reflected_mask()
}

/// The `Z_n`-level splitting test: `T ⊔ T' = Z_n \ {0}` and `-T = T'`.
pub fn is_duadic_in_zn(spec: &WeightClassSpec) -> bool {
    let t1 = defining_set(spec);
    let t2 = defining_set(&spec.complement());
    splits_by_negation(&t1, &t2)
}

fn splits_by_negation(t1: &DefiningSet, t2: &DefiningSet) -> bool {
    let n = t1.n();
    t1.is_disjoint(t2)
        && t1.len() + t2.len() == n - 1
        && !t1.contains(0)
        && !t2.contains(0)
        && &t1.negated() == t2
        && &t2.negated() == t1
}

fn describe_mask(mask: u64, r: u32) -> String {
    let elems: Vec<String> = (0..r).filter(|i| mask >> i & 1 == 1).map(|i| format!("{i}")).collect();
    format!("{{{}}}", elems.join(","))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairKind {
    /// Defining sets exclude 0; dimension `(n+1)/2`.
    OddLike,
    /// Defining sets include 0; dimension `(n-1)/2`.
    EvenLike,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuadicPair {
    pub spec: WeightClassSpec,
    pub t1: DefiningSet,
    pub t2: DefiningSet,
    pub kind: PairKind,
    /// The splitting multiplier, always `n - 1` here.
    pub mu: usize,
}

impl DuadicPair {
    /// Re-checks the splitting in `Z_n`: the sets cover `Z_n \ {0}`
    /// disjointly (plus the shared 0 for even-like pairs) and `μ` swaps them.
    pub fn verify_splitting(&self) -> bool {
        let (a, b) = match self.kind {
            PairKind::OddLike => (self.t1.clone(), self.t2.clone()),
            PairKind::EvenLike => {
                if !self.t1.contains(0) || !self.t2.contains(0) {
                    return false;
                }
                let mut a = self.t1.bits().clone();
                let mut b = self.t2.bits().clone();
                a.clear(0);
                b.clear(0);
                (DefiningSet::from_bits_unchecked(a), DefiningSet::from_bits_unchecked(b))
            }
        };
        splits_by_negation(&a, &b) && self.t1.scaled(self.mu) == self.t2 && self.t2.scaled(self.mu) == self.t1
    }
}

/// Builds the pair for a duadic spec. Even-like pairs add 0 to both sets.
pub fn build_pair(spec: &WeightClassSpec, kind: PairKind) -> Result<DuadicPair> {
    if !is_duadic(spec) {
        return Err(Error::NotDuadic(format!(
            "{spec}: Z_r \\ S = {} but (t - S) mod r = {} with t = {}",
            describe_mask(spec.complement().s_mask(), spec.r()),
            describe_mask(spec.reflected_mask(), spec.r()),
            spec.t()
        )));
    }
    let mut t1 = defining_set(spec);
    let mut t2 = defining_set(&spec.complement());
    if kind == PairKind::EvenLike {
        t1 = t1.with_zero();
        t2 = t2.with_zero();
    }
    Ok(DuadicPair { spec: *spec, t1, t2, kind, mu: spec.n() - 1 })
}

/// Parameter families, tried in this order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    T4,
    T7,
    T8,
    T9,
    None,
}

impl Theorem {
    pub const FAMILIES: [Theorem; 4] = [Theorem::T4, Theorem::T7, Theorem::T8, Theorem::T9];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::T4 => "T4",
            Theorem::T7 => "T7",
            Theorem::T8 => "T8",
            Theorem::T9 => "T9",
            Theorem::None => "none",
        }
    }

    /// The run statement each family rests on.
    pub fn lemma(self) -> Option<LemmaId> {
        match self {
            Theorem::T4 => Some(LemmaId::L3),
            Theorem::T7 => Some(LemmaId::L4),
            Theorem::T8 => Some(LemmaId::L5),
            Theorem::T9 => Some(LemmaId::L6),
            Theorem::None => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub theorem: Theorem,
    /// `m mod 2r` when the bound depends on it (T8, T9).
    pub residue_case: Option<u32>,
    /// `S` matched the second listed hypothesis, i.e. `S'` has the first form.
    pub via_complement: bool,
    pub d_lower: Option<usize>,
    pub d_dual_lower: Option<usize>,
    pub d_ext_lower: Option<usize>,
    /// Multiplier whose progression certifies `d_lower` on `T[r,m,S]`.
    pub v: Option<usize>,
    /// Length of that progression.
    pub run_length: Option<usize>,
    /// A later family that also matches with a larger bound.
    pub stronger_alternative: Option<(Theorem, usize)>,
}

impl TheoremVerdict {
    fn none() -> Self {
        TheoremVerdict {
            theorem: Theorem::None,
            residue_case: None,
            via_complement: false,
            d_lower: None,
            d_dual_lower: None,
            d_ext_lower: None,
            v: None,
            run_length: None,
            stronger_alternative: None,
        }
    }
}

fn try_family(spec: &WeightClassSpec, theorem: Theorem) -> Option<TheoremVerdict> {
    let lemma = theorem.lemma()?;
    let (via_complement, (v, window, branch)) = if check_lemma_hypotheses(spec, lemma).is_ok() {
        (false, lemma_parameters(spec, lemma, Side::S))
    } else {
        let comp = spec.complement();
        check_lemma_hypotheses(&comp, lemma).ok()?;
        // T[r,m,S] is the S' side of the complementary spec
        (true, lemma_parameters(&comp, lemma, Side::SPrime))
    };
    Some(TheoremVerdict {
        theorem,
        residue_case: branch,
        via_complement,
        d_lower: Some(window + 1),
        d_dual_lower: Some(window + 2),
        // extended weights are at least window + 2 and divisible by 4
        d_ext_lower: Some((window + 2).next_multiple_of(4)),
        v: Some(v),
        run_length: Some(window),
        stronger_alternative: None,
    })
}

/// First matching family among T4, T7, T8, T9, with its predicted bounds.
/// Requires a well-formed duadic spec.
pub fn classify(spec: &WeightClassSpec) -> Result<TheoremVerdict> {
    if !spec.is_well_formed() {
        return Err(Error::InvalidSpec(format!("{spec} is outside the classified range")));
    }
    if !is_duadic(spec) {
        return Err(Error::NotDuadic(format!("{spec}")));
    }
    let matches: Vec<TheoremVerdict> = Theorem::FAMILIES.iter().filter_map(|&th| try_family(spec, th)).collect();
    let Some(first) = matches.first() else {
        return Ok(TheoremVerdict::none());
    };
    let mut verdict = first.clone();
    verdict.stronger_alternative = matches[1..]
        .iter()
        .filter(|m| m.d_lower > verdict.d_lower)
        .max_by_key(|m| m.d_lower)
        .map(|m| (m.theorem, m.d_lower.unwrap()));
    Ok(verdict)
}

/// Largest `r` the exhaustive catalog scan accepts.
pub const CATALOG_MAX_R: u32 = 16;

/// Every `S ⊂ Z_r`, `|S| = r/2`, that is duadic for all `m ≡ t (mod r)`,
/// as sorted element lists in lexicographic order.
pub fn enumerate_catalog(r: u32, t: u32) -> Result<Vec<Vec<u32>>> {
    if r > CATALOG_MAX_R || r == 0 || !r.is_multiple_of(2) {
        return Err(Error::CatalogBudget(r));
    }
    if t.is_multiple_of(2) || t >= r {
        return Err(Error::InvalidSpec(format!("t = {t} must be odd and below r = {r}")));
    }
    let mut out: Vec<Vec<u32>> = (0u64..1 << r)
        .filter(|mask| mask.count_ones() == r / 2)
        .map(|mask| WeightClassSpec::from_mask(r, t, mask))
        .filter(is_duadic)
        .map(|spec| spec.elements())
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Published `r = 8` families, one list per odd residue `t = m mod 8`.
pub const KNOWN_R8_FAMILIES: [(u32, [[u32; 4]; 8]); 4] = [
    (
        1,
        [
            [0, 2, 3, 4],
            [0, 2, 3, 5],
            [0, 2, 4, 6],
            [0, 2, 5, 6],
            [0, 3, 4, 7],
            [0, 3, 5, 7],
            [0, 4, 6, 7],
            [0, 5, 6, 7],
        ],
    ),
    (
        3,
        [
            [0, 1, 4, 5],
            [0, 1, 4, 6],
            [0, 1, 5, 7],
            [0, 1, 6, 7],
            [0, 2, 4, 5],
            [0, 2, 5, 7],
            [0, 2, 6, 7],
            [0, 2, 4, 6],
        ],
    ),
    (
        5,
        [
            [0, 1, 2, 6],
            [0, 1, 2, 7],
            [0, 1, 3, 6],
            [0, 1, 3, 7],
            [0, 2, 4, 7],
            [0, 3, 4, 6],
            [0, 2, 4, 6],
            [0, 3, 4, 7],
        ],
    ),
    (
        7,
        [
            [0, 1, 2, 3],
            [0, 1, 2, 4],
            [0, 1, 3, 5],
            [0, 2, 3, 6],
            [0, 3, 5, 6],
            [0, 4, 5, 6],
            [0, 1, 4, 5],
            [0, 2, 4, 6],
        ],
    ),
];

pub fn known_r8_family(t: u32) -> Option<&'static [[u32; 4]; 8]> {
    KNOWN_R8_FAMILIES.iter().find(|(tt, _)| *tt == t).map(|(_, f)| f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn spec(r: u32, m: u32, s: &[u32]) -> WeightClassSpec {
        WeightClassSpec::new(r, m, s).unwrap()
    }

    /// Brute-force Z_r check written independently of the bitmask helpers.
    fn duadic_by_sets(r: u32, t: u32, s: &[u32]) -> bool {
        let comp: Vec<u32> = (0..r).filter(|i| !s.contains(i)).collect();
        let mut refl: Vec<u32> = s.iter().map(|&i| (t + r - i) % r).collect();
        refl.sort();
        refl == comp
    }

    #[test]
    fn duadic_examples() {
        assert!(is_duadic(&spec(8, 9, &[0, 2, 3, 4])));
        assert!(!is_duadic(&spec(8, 9, &[0, 1, 2, 3])));
        for m in [3, 5, 7, 9, 11] {
            assert!(is_duadic(&spec(2, m, &[1])));
            assert!(is_duadic(&spec(2, m, &[0])));
        }
        assert!(!is_duadic(&WeightClassSpec::new_unchecked(4, 5, &[0, 1]).unwrap()));
    }

    #[test]
    fn zr_and_zn_tests_agree() {
        for r in [2u32, 4, 6, 8] {
            for m in [3u32, 5, 7, 9, 11] {
                for mask in 0u64..1 << r {
                    if mask.count_ones() != r / 2 {
                        continue;
                    }
                    let s = WeightClassSpec::from_mask(r, m, mask);
                    let elems = s.elements();
                    // Small m leaves some residues without a weight class.
                    if is_duadic(&s) || m > r {
                        assert_eq!(is_duadic(&s), is_duadic_in_zn(&s), "{s}");
                    }
                    assert_eq!(is_duadic(&s), duadic_by_sets(r, m % r, &elems), "{s}");
                }
            }
        }
    }

    #[test]
    fn build_pair_examples() {
        let p = build_pair(&spec(2, 5, &[1]), PairKind::OddLike).unwrap();
        assert_eq!((31 - p.t1.len(), 31 - p.t2.len()), (16, 16));
        assert!(p.verify_splitting());
        let e = build_pair(&spec(2, 5, &[1]), PairKind::EvenLike).unwrap();
        assert_eq!((31 - e.t1.len(), 31 - e.t2.len()), (15, 15));
        assert!(e.verify_splitting());
        let big = build_pair(&spec(8, 9, &[0, 2, 3, 4]), PairKind::OddLike).unwrap();
        assert_eq!(511 - big.t1.len(), 256);
        assert_eq!(big.mu, 510);
        assert!(big.verify_splitting());
        let err = build_pair(&spec(8, 9, &[0, 1, 2, 3]), PairKind::OddLike).unwrap_err();
        assert!(
            matches!(err, Error::NotDuadic(ref msg) if msg.contains("{4,5,6,7}") && msg.contains("{0,1,6,7}")),
            "{err}"
        );
    }

    #[test]
    fn classify_examples() {
        let v = classify(&spec(8, 9, &[0, 2, 3, 4])).unwrap();
        assert_eq!(v.theorem, Theorem::T4);
        assert_eq!(v.d_lower, Some(19));
        assert_eq!(v.d_dual_lower, Some(20));
        assert_eq!(v.d_ext_lower, Some(20));
        assert_eq!((v.v, v.run_length), (Some(15), Some(18)));

        let v = classify(&spec(8, 9, &[0, 2, 3, 5])).unwrap();
        assert_eq!(v.theorem, Theorem::T8);
        assert_eq!(v.residue_case, Some(9));
        assert_eq!(v.d_lower, Some(17));
        let v = classify(&spec(8, 17, &[0, 2, 3, 5])).unwrap();
        assert_eq!((v.residue_case, v.d_lower), (Some(1), Some(259)));

        let v = classify(&spec(8, 11, &[0, 1, 5, 7])).unwrap();
        assert_eq!(v.d_lower, Some(33));

        // r = 2 falls under T8 with the m mod 4 split
        assert_eq!(classify(&spec(2, 5, &[1])).unwrap().d_lower, Some(7));
        assert_eq!(classify(&spec(2, 7, &[1])).unwrap().d_lower, Some(9));
        assert_eq!(classify(&spec(2, 5, &[1])).unwrap().theorem, Theorem::T8);

        assert!(classify(&spec(8, 9, &[0, 1, 2, 3])).is_err());
    }

    /// Bounds printed for the r = 8 families, as (t, S, bound offset when
    /// m ≡ t mod 16, offset when m ≡ t + 8 mod 16).
    #[test]
    fn classify_reproduces_r8_tables() {
        let table: &[(u32, [u32; 4], usize, usize)] = &[
            (1, [0, 2, 3, 4], 3, 3),
            (1, [0, 4, 6, 7], 3, 3),
            (1, [0, 2, 3, 5], 3, 1),
            (1, [0, 2, 5, 6], 3, 1),
            (1, [0, 3, 5, 7], 3, 1),
            (1, [0, 5, 6, 7], 3, 1),
            (3, [0, 1, 4, 6], 1, 3),
            (3, [0, 1, 6, 7], 1, 3),
            (3, [0, 2, 4, 5], 1, 3),
            (3, [0, 2, 5, 7], 1, 3),
            (3, [0, 1, 5, 7], 1, 1),
            (3, [0, 2, 6, 7], 1, 1),
            (5, [0, 1, 2, 6], 1, 1),
            (5, [0, 1, 3, 7], 3, 3),
            (5, [0, 1, 2, 7], 1, 3),
            (5, [0, 3, 4, 6], 1, 3),
            (5, [0, 1, 3, 6], 3, 1),
            (5, [0, 2, 4, 7], 3, 1),
            (7, [0, 1, 2, 3], 1, 3),
            (7, [0, 1, 3, 5], 1, 3),
            (7, [0, 1, 2, 4], 3, 3),
            (7, [0, 4, 5, 6], 1, 1),
            (7, [0, 2, 3, 6], 3, 1),
            (7, [0, 3, 5, 6], 3, 1),
        ];
        for &(t, s, same, shifted) in table {
            for m in [t, t + 8, t + 16].into_iter().filter(|m| (3..=20).contains(m)) {
                let off = if (m - t) % 16 == 0 { same } else { shifted };
                let sp = spec(8, m, &s);
                let v = classify(&sp).unwrap();
                let h = 1usize << ((m - 1) / 2);
                assert_eq!(v.d_lower, Some(h + off), "{sp} -> {v:?}");
                assert_eq!(v.d_dual_lower, Some(h + off + 1));
                // [8,4,4] at m = 3
                assert_eq!(v.d_ext_lower, Some(if m == 3 { 4 } else { h + 4 }));
            }
        }
    }

    #[test]
    fn complement_predicts_same_bounds() {
        for r in [2u32, 4, 6, 8] {
            for m in (3u32..=17).step_by(2) {
                for s in enumerate_catalog(r, m % r).unwrap() {
                    let a = spec(r, m, &s);
                    let va = classify(&a).unwrap();
                    let vb = classify(&a.complement()).unwrap();
                    assert_eq!(va.theorem, vb.theorem, "{a}");
                    assert_eq!(
                        (va.d_lower, va.d_dual_lower, va.d_ext_lower),
                        (vb.d_lower, vb.d_dual_lower, vb.d_ext_lower)
                    );
                }
            }
        }
    }

    #[test]
    fn catalog_examples() {
        assert_eq!(enumerate_catalog(2, 1).unwrap(), vec![vec![0], vec![1]]);
        for t in [1, 3, 5, 7] {
            let cat = enumerate_catalog(8, t).unwrap();
            assert_eq!(cat.len(), 16);
            for s in known_r8_family(t).unwrap() {
                assert!(cat.contains(&s.to_vec()), "t={t} missing {s:?}");
            }
        }
        assert!(matches!(enumerate_catalog(8, 2), Err(Error::InvalidSpec(_))));
        assert_eq!(enumerate_catalog(18, 1), Err(Error::CatalogBudget(18)));
        assert_eq!(enumerate_catalog(16, 1).unwrap().len(), 256);
    }
}
