//! BCH-bound certificates, run-membership checks for the weight-class
//! families, and the square-root bound for odd-like duadic codes.
//!
//! A cyclic code whose defining set contains `δ - 1` consecutive terms
//! `l, l + v, ..., l + (δ-2)v` of an arithmetic progression with
//! `gcd(v, n) = 1` has minimum distance at least `δ`. Runs are found by
//! pulling the defining set back along `j ↦ j·v`, which turns progressions
//! of difference `v` into runs of consecutive integers.

use alloc::format;
use alloc::vec::Vec;

use crate::bits::BitVec;
use crate::cyclotomic::{defining_set, DefiningSet, WeightClassSpec};
use crate::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inverse of `a` mod `n`, if it exists.
pub fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(n as i128) as u64)
}

/// `2^((m-1)/2) - 1` and `2^((m+1)/2) - 1`, keeping only units mod
/// `2^m - 1` (both are units for odd `m`). Never empty: falls back to `[1]`.
pub fn default_v_candidates(m: u32) -> Vec<usize> {
    let n = (1u64 << m) - 1;
    let mut out: Vec<usize> = [(m - 1) / 2, m.div_ceil(2)]
        .into_iter()
        .map(|e| (1u64 << e) - 1)
        .filter(|&v| v % n != 0 && gcd(v, n) == 1)
        .map(|v| v as usize)
        .collect();
    out.dedup();
    if out.is_empty() {
        out.push(1);
    }
    out
}

/// Every unit of `Z_n` in increasing order; `n` is capped at `2^13` to keep
/// the exhaustive sweep cheap.
pub fn all_units(n: usize) -> Result<Vec<usize>> {
    if n > 1 << 13 {
        return Err(Error::InvalidSpec(format!("exhaustive multiplier sweep needs n <= 8192, got {n}")));
    }
    Ok((1..n).filter(|&v| gcd(v as u64, n as u64) == 1).collect())
}

/// A run `{l + i·v mod n : 0 <= i < run_length}` inside a defining set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BchCertificate {
    pub n: usize,
    pub v: usize,
    pub start: usize,
    pub run_length: usize,
    /// `v⁻¹ mod n`: with `γ = α^{v⁻¹}` the run becomes consecutive powers
    /// of `γ`.
    pub gamma_exponent: usize,
}

impl BchCertificate {
    /// `run_length + 1`.
    #[inline]
    pub fn d_lower(&self) -> usize {
        self.run_length + 1
    }

    pub fn terms(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.run_length).map(move |i| ((self.start as u128 + i as u128 * self.v as u128) % self.n as u128) as usize)
    }

    /// Every term lies in `t` and the run cannot be extended at either end.
    pub fn verify(&self, t: &DefiningSet) -> bool {
        if t.n() != self.n || gcd(self.v as u64, self.n as u64) != 1 {
            return false;
        }
        if !self.terms().all(|j| t.contains(j)) {
            return false;
        }
        if self.run_length >= self.n {
            return true;
        }
        let before = (self.start + self.n - self.v % self.n) % self.n;
        let after = ((self.start as u128 + self.run_length as u128 * self.v as u128) % self.n as u128) as usize;
        !t.contains(before) && !t.contains(after)
    }
}

/// Longest arithmetic progression with difference `v` inside `t`; ties go to
/// the smallest starting exponent.
pub fn max_ap_run(t: &DefiningSet, v: usize) -> Result<BchCertificate> {
    let n = t.n();
    if n == 0 || gcd(v as u64, n as u64) != 1 {
        return Err(Error::NotAUnit { v, n });
    }
    let v = v % n;
    let gamma_exponent = mod_inverse(v as u64, n as u64).expect("unit") as usize;
    // pulled[j] = [j·v ∈ T]
    let mut pulled = BitVec::zeros(n);
    let mut x = 0usize;
    for j in 0..n {
        if t.contains(x) {
            pulled.set(j);
        }
        x += v;
        if x >= n {
            x -= n;
        }
    }
    let cert = |j: usize, len: usize| BchCertificate {
        n,
        v,
        start: ((j as u128 * v as u128) % n as u128) as usize,
        run_length: len,
        gamma_exponent,
    };
    let Some(zero) = (0..n).find(|&j| !pulled.get(j)) else {
        return Ok(cert(0, n));
    };
    let mut best: Option<BchCertificate> = None;
    let mut run_start = 0;
    let mut run_len = 0;
    for step in 1..=n {
        let j = (zero + step) % n;
        if pulled.get(j) {
            if run_len == 0 {
                run_start = j;
            }
            run_len += 1;
        } else if run_len > 0 {
            let c = cert(run_start, run_len);
            let better = match &best {
                None => true,
                Some(b) => c.run_length > b.run_length || (c.run_length == b.run_length && c.start < b.start),
            };
            if better {
                best = Some(c);
            }
            run_len = 0;
        }
    }
    Ok(best.unwrap_or(BchCertificate { n, v, start: 0, run_length: 0, gamma_exponent }))
}

/// Best certificate over `candidates` (longest run; earliest candidate on
/// ties). Non-units are skipped.
pub fn best_certificate(t: &DefiningSet, candidates: &[usize]) -> Option<BchCertificate> {
    let mut best: Option<BchCertificate> = None;
    for &v in candidates {
        if let Ok(c) = max_ap_run(t, v) {
            if best.is_none_or(|b| c.run_length > b.run_length) {
                best = Some(c);
            }
        }
    }
    best
}

/// The run-membership statements for the four hypothesis families on `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaId {
    /// `S ⊇ {(t-1)/2, (t+r-1)/2, t-1}`, odd `t ≠ 3`, even `r > 2`.
    L3,
    /// `S ⊇ {(t-1)/2, (t+r-1)/2, 1}`, odd `t ≠ 1`.
    L4,
    /// `S ⊇ {(t-1)/2, (t+r+1)/2, t-1}`, odd `t ≠ 3`; window depends on `m mod 2r`.
    L5,
    /// `S ⊇ {(t-1)/2, (t+r+1)/2, 1}`, odd `t ≠ 1`; window depends on `m mod 2r`.
    L6,
}

impl LemmaId {
    pub const ALL: [LemmaId; 4] = [LemmaId::L3, LemmaId::L4, LemmaId::L5, LemmaId::L6];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::L3 => "L3",
            LemmaId::L4 => "L4",
            LemmaId::L5 => "L5",
            LemmaId::L6 => "L6",
        }
    }
}

/// Which defining set of the pair a statement is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    S,
    SPrime,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::S => "S",
            Side::SPrime => "S'",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaOutcome {
    pub lemma: LemmaId,
    pub side: Side,
    /// `m mod 2r` for the families whose window depends on it.
    pub branch: Option<u32>,
    pub v: usize,
    /// `B`: the statement is `{a·v : 1 <= a <= B} ⊆ T`.
    pub window: usize,
    pub v_is_unit: bool,
    pub holds: bool,
}

fn residue(x: i64, r: u32) -> u32 {
    x.rem_euclid(r as i64) as u32
}

/// Residues `S` must contain and residues `S'` must contain.
fn lemma_requirements(lemma: LemmaId, t: u32, r: u32) -> ([u32; 3], [u32; 2]) {
    let (t, ri) = (t as i64, r as i64);
    let low = residue((t - 1) / 2, r);
    let high = residue((t + 1) / 2, r);
    let low_r = residue((t + ri - 1) / 2, r);
    let high_r = residue((t + ri + 1) / 2, r);
    let tm1 = residue(t - 1, r);
    match lemma {
        LemmaId::L3 => ([low, low_r, tm1], [high, high_r]),
        LemmaId::L4 => ([low, low_r, 1 % r], [high, high_r]),
        LemmaId::L5 => ([low, high_r, tm1], [high, low_r]),
        LemmaId::L6 => ([low, high_r, 1 % r], [high, low_r]),
    }
}

/// Checks the hypotheses of `lemma` against `spec`; returns the violated
/// condition on failure.
pub fn check_lemma_hypotheses(spec: &WeightClassSpec, lemma: LemmaId) -> Result<()> {
    if !spec.is_well_formed() {
        return Err(Error::Hypothesis(format!("{spec} needs even r, odd m >= 3 and |S| = r/2")));
    }
    let (r, t) = (spec.r(), spec.t());
    match lemma {
        LemmaId::L3 | LemmaId::L5 if t == 3 => {
            return Err(Error::Hypothesis(format!("{} requires t != 3", lemma.name())));
        }
        LemmaId::L4 | LemmaId::L6 if t == 1 => {
            return Err(Error::Hypothesis(format!("{} requires t != 1", lemma.name())));
        }
        LemmaId::L3 if r <= 2 => {
            return Err(Error::Hypothesis("L3 requires r > 2".into()));
        }
        _ => {}
    }
    let (in_s, in_s_prime) = lemma_requirements(lemma, t, r);
    if let Some(x) = in_s.iter().find(|&&x| !spec.contains(x)) {
        return Err(Error::Hypothesis(format!("{} requires {x} ∈ S for t = {t}, r = {r}", lemma.name())));
    }
    let comp = spec.complement();
    if let Some(x) = in_s_prime.iter().find(|&&x| !comp.contains(x)) {
        return Err(Error::Hypothesis(format!("{} requires {x} ∈ S' for t = {t}, r = {r}", lemma.name())));
    }
    Ok(())
}

/// Multiplier and window asserted by `lemma` for `side`, and the
/// `m mod 2r` branch when it matters. Hypotheses are not checked here.
pub fn lemma_parameters(spec: &WeightClassSpec, lemma: LemmaId, side: Side) -> (usize, usize, Option<u32>) {
    let m = spec.m();
    let h = 1usize << ((m - 1) / 2);
    let v_lo = h - 1;
    let v_hi = 2 * h - 1;
    let (long, short) = (h + 2, h);
    let branch = matches!(lemma, LemmaId::L5 | LemmaId::L6).then(|| m % (2 * spec.r()));
    // m ≡ t (mod 2r)
    let first_branch = branch.is_none_or(|b| b == spec.t());
    let (v_s, v_sp) = if first_branch { (v_lo, v_hi) } else { (v_hi, v_lo) };
    let window = match lemma {
        LemmaId::L3 => long,
        LemmaId::L4 => short,
        LemmaId::L5 => {
            if first_branch {
                long
            } else {
                short
            }
        }
        LemmaId::L6 => {
            if first_branch {
                short
            } else {
                long
            }
        }
    };
    let v = match side {
        Side::S => v_s,
        Side::SPrime => v_sp,
    };
    (v, window, branch)
}

/// Directly tests `{a·v mod n : 1 <= a <= B} ⊆ T` for the lemma's `v` and
/// `B` on the chosen side of the pair.
pub fn verify_lemma_membership(spec: &WeightClassSpec, lemma: LemmaId, side: Side) -> Result<LemmaOutcome> {
    check_lemma_hypotheses(spec, lemma)?;
    let (v, window, branch) = lemma_parameters(spec, lemma, side);
    let t = match side {
        Side::S => defining_set(spec),
        Side::SPrime => defining_set(&spec.complement()),
    };
    let n = spec.n();
    let v_is_unit = gcd(v as u64, n as u64) == 1;
    let holds = v_is_unit && (1..=window).all(|a| t.contains((a * v) % n));
    Ok(LemmaOutcome { lemma, side, branch, v, window, v_is_unit, holds })
}

/// Square-root style lower bounds on the minimum odd weight `d0` of an
/// odd-like duadic pair of length `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SqrtBoundReport {
    pub n: usize,
    pub mu_is_minus1: bool,
    /// Smallest integer `d` with `d^2 >= n`.
    pub d0_floor_sqrt: usize,
    /// Smallest integer `d` with `d^2 - d + 1 >= n`.
    pub d0_mu_minus1: usize,
    /// Smallest odd `d` meeting the inequality that applies (`d^2 - d + 1 >= n`
    /// when the splitting is by `-1`, else `d^2 >= n`); `d0` is an odd weight.
    pub d0_odd_lower: usize,
}

pub fn sqrt_bounds(n: usize, mu_is_minus1: bool) -> Result<SqrtBoundReport> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::LengthTooSmall(n));
    }
    let sq = |d: usize| d * d >= n;
    let mu = |d: usize| d * d - d + 1 >= n;
    let d0_floor_sqrt = (1..).find(|&d| sq(d)).unwrap();
    let d0_mu_minus1 = (1..).find(|&d| mu(d)).unwrap();
    let d0_odd_lower = (1..).step_by(2).find(|&d| if mu_is_minus1 { mu(d) } else { sq(d) }).unwrap();
    Ok(SqrtBoundReport { n, mu_is_minus1, d0_floor_sqrt, d0_mu_minus1, d0_odd_lower })
}
