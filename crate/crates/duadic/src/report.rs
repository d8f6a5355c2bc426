//! Serializable reports and their JSON, CSV and text renderings.

use std::fmt::Write as _;

use duadic_core::mindist::CertifiedBound;
use duadic_core::{BchCertificate, TheoremVerdict, WeightClassSpec};
use serde::{Deserialize, Serialize};

use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Renders a report in the requested format, newline-terminated.
pub fn render<R: Report>(report: &R, format: Format) -> Result<String, Error> {
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).map_err(|e| Error::Output(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let rows = report.csv_rows();
            if rows.is_empty() {
                w.write_record(R::CSV_COLUMNS).map_err(|e| Error::Output(e.to_string()))?;
            }
            for row in rows {
                w.serialize(row).map_err(|e| Error::Output(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Output(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Output(e.to_string()))?
        }
        Format::Text => report.text(),
    })
}

pub trait Report: Serialize {
    type Row: Serialize;
    const CSV_COLUMNS: &'static [&'static str];

    /// Flattened projection for CSV output.
    fn csv_rows(&self) -> Vec<Self::Row>;

    fn text(&self) -> String;

    /// Invariants that did not hold; a nonempty list means exit code 1.
    fn failures(&self) -> Vec<String> {
        Vec::new()
    }
}

pub(crate) fn set_string(s: &[u32]) -> String {
    let parts: Vec<String> = s.iter().map(u32::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".into(), T::to_string)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecReport {
    pub r: u32,
    pub m: u32,
    pub s: Vec<u32>,
    pub t: u32,
}

impl SpecReport {
    pub fn new(spec: &WeightClassSpec) -> Self {
        SpecReport { r: spec.r(), m: spec.m(), s: spec.elements(), t: spec.t() }
    }

    pub fn to_spec(&self) -> Result<WeightClassSpec, Error> {
        Ok(WeightClassSpec::new_unchecked(self.r, self.m, &self.s)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub v: usize,
    pub start: usize,
    pub run_length: usize,
    pub gamma_exponent: usize,
    pub d_lower: usize,
}

impl From<&BchCertificate> for CertificateReport {
    fn from(c: &BchCertificate) -> Self {
        CertificateReport {
            v: c.v,
            start: c.start,
            run_length: c.run_length,
            gamma_exponent: c.gamma_exponent,
            d_lower: c.d_lower(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub theorem: String,
    pub residue_case: Option<u32>,
    pub via_complement: bool,
    pub d_lower: Option<usize>,
    pub d_dual_lower: Option<usize>,
    pub d_ext_lower: Option<usize>,
    pub v: Option<usize>,
    pub run_length: Option<usize>,
    pub stronger_alternative: Option<String>,
    pub stronger_alternative_d_lower: Option<usize>,
}

impl From<&TheoremVerdict> for VerdictReport {
    fn from(v: &TheoremVerdict) -> Self {
        VerdictReport {
            theorem: v.theorem.name().into(),
            residue_case: v.residue_case,
            via_complement: v.via_complement,
            d_lower: v.d_lower,
            d_dual_lower: v.d_dual_lower,
            d_ext_lower: v.d_ext_lower,
            v: v.v,
            run_length: v.run_length,
            stronger_alternative: v.stronger_alternative.map(|(t, _)| t.name().into()),
            stronger_alternative_d_lower: v.stronger_alternative.map(|(_, d)| d),
        }
    }
}

/// Parameters of one cyclic code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub generator_degree: usize,
    pub generator_weight: usize,
    pub generator_hex: String,
    pub coset_leaders: Vec<usize>,
    /// Best BCH bound over the multiplier candidates.
    pub d_lower: usize,
    pub certificate: Option<CertificateReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedReport {
    pub n: usize,
    pub k: usize,
    pub d_lower: usize,
    pub self_orthogonal: bool,
    pub self_dual: bool,
    pub doubly_even: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub spec: SpecReport,
    pub field_modulus: String,
    pub v_candidates: Vec<usize>,
    /// Well-formed and `Z_r \ S = t - S`.
    pub duadic: bool,
    /// `T[S] ⊔ T[S'] = Z_n \ {0}` and `-T[S] = T[S']`, checked on bitmaps.
    pub zn_splitting: bool,
    pub verdict: Option<VerdictReport>,
    pub code: CodeParams,
    pub dual: CodeParams,
    /// The dual's defining set is `{0} ∪ T`.
    pub dual_is_zero_plus_t: bool,
    pub extended: ExtendedReport,
}

impl CodeReport {
    /// Consistency checks a freshly parsed report must pass.
    pub fn validate(&self) -> Result<(), String> {
        let n = (1usize << self.spec.m) - 1;
        let check = |ok: bool, what: &str| if ok { Ok(()) } else { Err(what.to_string()) };
        check(self.code.n == n && self.dual.n == n, "length is not 2^m - 1")?;
        check(self.code.k + self.dual.k == n, "dual dimension is not n - k")?;
        check(self.code.generator_degree == n - self.code.k, "deg g is not n - k")?;
        check(self.dual.generator_degree == n - self.dual.k, "dual deg g is not n - k")?;
        check(self.extended.n == n + 1 && self.extended.k == self.code.k, "extended parameters")?;
        check(!self.extended.self_dual || 2 * self.extended.k == self.extended.n, "self-dual flag with k != n/2")?;
        check(!self.extended.doubly_even || self.extended.self_orthogonal, "doubly-even without self-orthogonality")?;
        check(self.extended.d_lower.is_multiple_of(2), "extended bound is odd")?;
        for p in [&self.code, &self.dual] {
            check(p.d_lower >= 1 && p.d_lower <= n, "d_lower outside 1..=n")?;
            if let Some(c) = &p.certificate {
                check(c.d_lower == c.run_length + 1 && c.d_lower.min(n) == p.d_lower, "certificate bound")?;
            }
        }
        check(!self.duadic || self.zn_splitting, "duadic in Z_r but the Z_n splitting fails")?;
        check(self.duadic == self.verdict.is_some(), "verdict present iff duadic")?;
        if self.duadic {
            check(self.code.k == n.div_ceil(2), "odd-like duadic code with k != (n+1)/2")?;
            check(self.dual_is_zero_plus_t, "dual defining set is not {0} ∪ T")?;
        }
        if let Some(d) = self.verdict.as_ref().and_then(|v| v.d_lower) {
            check(self.code.d_lower >= d, "certified bound below the predicted bound")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRow {
    pub r: u32,
    pub m: u32,
    pub s: String,
    pub n: usize,
    pub k: usize,
    pub duadic: bool,
    pub zn_splitting: bool,
    pub theorem: Option<String>,
    pub predicted_d_lower: Option<usize>,
    pub certified_d_lower: usize,
    pub bch_v: Option<usize>,
    pub bch_start: Option<usize>,
    pub dual_k: usize,
    pub dual_d_lower: usize,
    pub ext_n: usize,
    pub ext_k: usize,
    pub ext_d_lower: usize,
    pub self_dual: bool,
    pub doubly_even: bool,
    pub generator_hex: String,
}

impl Report for CodeReport {
    type Row = CodeRow;
    const CSV_COLUMNS: &'static [&'static str] = &[
        "r",
        "m",
        "s",
        "n",
        "k",
        "duadic",
        "zn_splitting",
        "theorem",
        "predicted_d_lower",
        "certified_d_lower",
        "bch_v",
        "bch_start",
        "dual_k",
        "dual_d_lower",
        "ext_n",
        "ext_k",
        "ext_d_lower",
        "self_dual",
        "doubly_even",
        "generator_hex",
    ];

    fn failures(&self) -> Vec<String> {
        self.validate().err().into_iter().collect()
    }

    fn csv_rows(&self) -> Vec<CodeRow> {
        vec![CodeRow {
            r: self.spec.r,
            m: self.spec.m,
            s: set_string(&self.spec.s),
            n: self.code.n,
            k: self.code.k,
            duadic: self.duadic,
            zn_splitting: self.zn_splitting,
            theorem: self.verdict.as_ref().map(|v| v.theorem.clone()),
            predicted_d_lower: self.verdict.as_ref().and_then(|v| v.d_lower),
            certified_d_lower: self.code.d_lower,
            bch_v: self.code.certificate.as_ref().map(|c| c.v),
            bch_start: self.code.certificate.as_ref().map(|c| c.start),
            dual_k: self.dual.k,
            dual_d_lower: self.dual.d_lower,
            ext_n: self.extended.n,
            ext_k: self.extended.k,
            ext_d_lower: self.extended.d_lower,
            self_dual: self.extended.self_dual,
            doubly_even: self.extended.doubly_even,
            generator_hex: self.code.generator_hex.clone(),
        }]
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let s = &self.spec;
        let _ = writeln!(out, "spec        r={} m={} S={} (t={})", s.r, s.m, set_string(&s.s), s.t);
        let _ = writeln!(out, "field       GF(2^{}) modulus {}", s.m, self.field_modulus);
        let _ = writeln!(out, "duadic      {} (Z_n splitting: {})", self.duadic, self.zn_splitting);
        if let Some(v) = &self.verdict {
            let _ = writeln!(
                out,
                "family      {} d>={} d_dual>={} d_ext>={}{}",
                v.theorem,
                opt(&v.d_lower),
                opt(&v.d_dual_lower),
                opt(&v.d_ext_lower),
                if v.via_complement { " (complement form)" } else { "" }
            );
        }
        let c = &self.code;
        let _ = writeln!(out, "code        [{}, {}, >={}]  g weight {}", c.n, c.k, c.d_lower, c.generator_weight);
        if let Some(cert) = &c.certificate {
            let _ = writeln!(
                out,
                "certificate v={} start={} run={} gamma=alpha^{}",
                cert.v, cert.start, cert.run_length, cert.gamma_exponent
            );
        }
        let d = &self.dual;
        let _ = writeln!(
            out,
            "dual        [{}, {}, >={}]  defining set {{0}} ∪ T: {}",
            d.n, d.k, d.d_lower, self.dual_is_zero_plus_t
        );
        let e = &self.extended;
        let _ = writeln!(
            out,
            "extended    [{}, {}, >={}]  self-dual {} doubly-even {}",
            e.n, e.k, e.d_lower, e.self_dual, e.doubly_even
        );
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub s: Vec<u32>,
    /// Family at the reference degree.
    pub theorem: String,
    pub residue_case: Option<u32>,
    pub via_complement: bool,
    pub d_lower: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogReport {
    pub r: u32,
    pub t: u32,
    /// Smallest odd `m >= 3` with `m ≡ t (mod r)`, used for the verdicts.
    pub reference_m: u32,
    pub count: usize,
    pub entries: Vec<CatalogEntry>,
    /// For `r = 8`: whether every set of the known family is present.
    pub known_family_contained: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRow {
    pub r: u32,
    pub t: u32,
    pub reference_m: u32,
    pub s: String,
    pub theorem: String,
    pub residue_case: Option<u32>,
    pub via_complement: bool,
    pub d_lower: Option<usize>,
}

impl Report for CatalogReport {
    type Row = CatalogRow;
    const CSV_COLUMNS: &'static [&'static str] =
        &["r", "t", "reference_m", "s", "theorem", "residue_case", "via_complement", "d_lower"];

    fn failures(&self) -> Vec<String> {
        match self.known_family_contained {
            Some(false) => vec![format!("known family for t = {} is not contained", self.t)],
            _ => Vec::new(),
        }
    }

    fn csv_rows(&self) -> Vec<CatalogRow> {
        self.entries
            .iter()
            .map(|e| CatalogRow {
                r: self.r,
                t: self.t,
                reference_m: self.reference_m,
                s: set_string(&e.s),
                theorem: e.theorem.clone(),
                residue_case: e.residue_case,
                via_complement: e.via_complement,
                d_lower: e.d_lower,
            })
            .collect()
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let _ =
            writeln!(out, "r={} t={}: {} duadic sets (verdicts at m={})", self.r, self.t, self.count, self.reference_m);
        for e in &self.entries {
            let _ = writeln!(out, "  {:<28} {:<5} d>={}", set_string(&e.s), e.theorem, opt(&e.d_lower));
        }
        if let Some(k) = self.known_family_contained {
            let _ = writeln!(out, "known family contained: {k}");
        }
        out
    }
}

/// One row of a parameter table; fields are empty where not computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub m: u32,
    pub s: String,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub duadic: Option<bool>,
    pub theorem: Option<String>,
    pub predicted_d_lower: Option<usize>,
    pub certified_d_lower: Option<usize>,
    pub bch_v: Option<usize>,
    pub exact_d: Option<usize>,
    pub dual_k: Option<usize>,
    pub predicted_dual_d_lower: Option<usize>,
    pub certified_dual_d_lower: Option<usize>,
    pub exact_dual_d: Option<usize>,
    pub ext_n: Option<usize>,
    pub ext_k: Option<usize>,
    pub predicted_ext_d_lower: Option<usize>,
    pub exact_ext_d: Option<usize>,
    pub self_dual: Option<bool>,
    pub doubly_even: Option<bool>,
    pub error: Option<String>,
}

impl TableRow {
    pub fn failed(m: u32, s: String, error: String) -> Self {
        TableRow {
            m,
            s,
            n: None,
            k: None,
            duadic: None,
            theorem: None,
            predicted_d_lower: None,
            certified_d_lower: None,
            bch_v: None,
            exact_d: None,
            dual_k: None,
            predicted_dual_d_lower: None,
            certified_dual_d_lower: None,
            exact_dual_d: None,
            ext_n: None,
            ext_k: None,
            predicted_ext_d_lower: None,
            exact_ext_d: None,
            self_dual: None,
            doubly_even: None,
            error: Some(error),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub r: u32,
    pub rows: Vec<TableRow>,
}

impl Report for TableReport {
    type Row = TableRow;
    const CSV_COLUMNS: &'static [&'static str] = &[
        "m",
        "s",
        "n",
        "k",
        "duadic",
        "theorem",
        "predicted_d_lower",
        "certified_d_lower",
        "bch_v",
        "exact_d",
        "dual_k",
        "predicted_dual_d_lower",
        "certified_dual_d_lower",
        "exact_dual_d",
        "ext_n",
        "ext_k",
        "predicted_ext_d_lower",
        "exact_ext_d",
        "self_dual",
        "doubly_even",
        "error",
    ];

    fn failures(&self) -> Vec<String> {
        let below = |got: Option<usize>, want: Option<usize>| matches!((got, want), (Some(g), Some(w)) if g < w);
        let mut out = Vec::new();
        for row in &self.rows {
            let checks = [
                ("certified d", row.certified_d_lower, row.predicted_d_lower),
                ("exact d", row.exact_d, row.predicted_d_lower),
                ("exact dual d", row.exact_dual_d, row.predicted_dual_d_lower),
                ("exact extended d", row.exact_ext_d, row.predicted_ext_d_lower),
            ];
            for (what, got, want) in checks {
                if below(got, want) {
                    out.push(format!("m={} S={}: {what} {} below predicted {}", row.m, row.s, opt(&got), opt(&want)));
                }
            }
        }
        out
    }

    fn csv_rows(&self) -> Vec<TableRow> {
        self.rows.clone()
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:>3} {:<16} {:>18} {:>5} {:>6} {:>6} {:>14} {:>14} {:>9} {:>6}",
            "m", "S", "[n,k]", "thm", "pred", "bch", "dual", "extended", "self-dual", "d-even"
        );
        for row in &self.rows {
            if let Some(e) = &row.error {
                let _ = writeln!(out, "{:>3} {:<16} error: {e}", row.m, row.s);
                continue;
            }
            let d = row.exact_d.map_or_else(String::new, |d| format!(",{d}"));
            let dual_d = row.exact_dual_d.map_or_else(String::new, |d| format!(",{d}"));
            let ext_d = row.exact_ext_d.map_or_else(String::new, |d| format!(",{d}"));
            let _ = writeln!(
                out,
                "{:>3} {:<16} {:>18} {:>5} {:>6} {:>6} {:>14} {:>14} {:>9} {:>6}",
                row.m,
                row.s,
                format!("[{},{}{d}]", opt(&row.n), opt(&row.k)),
                opt(&row.theorem),
                opt(&row.predicted_d_lower),
                opt(&row.certified_d_lower),
                format!("[{},{}{dual_d}]", opt(&row.n), opt(&row.dual_k)),
                format!("[{},{}{ext_d}]", opt(&row.ext_n), opt(&row.ext_k)),
                opt(&row.self_dual),
                opt(&row.doubly_even),
            );
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CellStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCell {
    pub m: u32,
    pub s: String,
    pub lemma: String,
    pub side: String,
    pub status: CellStatus,
    pub v: Option<usize>,
    pub window: Option<usize>,
    pub branch: Option<u32>,
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaMatrix {
    pub r: u32,
    pub m_list: Vec<u32>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub cells: Vec<LemmaCell>,
}

impl Report for LemmaMatrix {
    type Row = LemmaCell;
    const CSV_COLUMNS: &'static [&'static str] =
        &["m", "s", "lemma", "side", "status", "v", "window", "branch", "reason"];

    fn failures(&self) -> Vec<String> {
        self.cells
            .iter()
            .filter(|c| c.status == CellStatus::Fail)
            .map(|c| format!("m={} S={} {} {}: {}", c.m, c.s, c.lemma, c.side, opt(&c.reason)))
            .collect()
    }

    fn csv_rows(&self) -> Vec<LemmaCell> {
        self.cells.clone()
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "r={} m={:?}: {} pass, {} fail, {} skipped",
            self.r, self.m_list, self.passed, self.failed, self.skipped
        );
        for c in self.cells.iter().filter(|c| c.status != CellStatus::Skipped) {
            let _ = writeln!(
                out,
                "  m={:<3} {:<24} {} {:<2} {:<4} v={} B={}",
                c.m,
                c.s,
                c.lemma,
                c.side,
                if c.status == CellStatus::Pass { "pass" } else { "FAIL" },
                opt(&c.v),
                opt(&c.window)
            );
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Code,
    Dual,
    Extended,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::Code => "code",
            Target::Dual => "dual",
            Target::Extended => "extended",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub spec: SpecReport,
    pub target: Target,
    pub n: usize,
    pub k: usize,
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    pub method: String,
    pub seed: Option<u64>,
    pub effort: Option<usize>,
    pub rounds: Option<usize>,
    pub max_message_weight: Option<usize>,
    pub min_odd_weight: Option<usize>,
    pub witness_hex: String,
    pub certificate: Option<CertificateReport>,
}

impl BoundReport {
    pub fn new(spec: &WeightClassSpec, target: Target, n: usize, k: usize, b: &CertifiedBound) -> Self {
        BoundReport {
            spec: SpecReport::new(spec),
            target,
            n,
            k,
            lower: b.lower,
            upper: b.upper,
            exact: b.exact,
            method: b.method.name().into(),
            seed: b.seed,
            effort: b.effort,
            rounds: b.rounds,
            max_message_weight: b.max_message_weight,
            min_odd_weight: b.min_odd_weight,
            witness_hex: b.witness.to_hex(),
            certificate: b.certificate.as_ref().map(CertificateReport::from),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub r: u32,
    pub m: u32,
    pub s: String,
    pub target: Target,
    pub n: usize,
    pub k: usize,
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    pub method: String,
    pub seed: Option<u64>,
    pub effort: Option<usize>,
    pub rounds: Option<usize>,
    pub min_odd_weight: Option<usize>,
    pub witness_hex: String,
}

impl Report for BoundReport {
    type Row = BoundRow;
    const CSV_COLUMNS: &'static [&'static str] = &[
        "r",
        "m",
        "s",
        "target",
        "n",
        "k",
        "lower",
        "upper",
        "exact",
        "method",
        "seed",
        "effort",
        "rounds",
        "min_odd_weight",
        "witness_hex",
    ];

    fn csv_rows(&self) -> Vec<BoundRow> {
        vec![BoundRow {
            r: self.spec.r,
            m: self.spec.m,
            s: set_string(&self.spec.s),
            target: self.target,
            n: self.n,
            k: self.k,
            lower: self.lower,
            upper: self.upper,
            exact: self.exact,
            method: self.method.clone(),
            seed: self.seed,
            effort: self.effort,
            rounds: self.rounds,
            min_odd_weight: self.min_odd_weight,
            witness_hex: self.witness_hex.clone(),
        }]
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let s = &self.spec;
        let _ = writeln!(out, "spec      r={} m={} S={} target {}", s.r, s.m, set_string(&s.s), self.target.name());
        let d =
            if self.exact { format!("d = {}", self.upper) } else { format!("{} <= d <= {}", self.lower, self.upper) };
        let _ = writeln!(out, "code      [{}, {}]  {d}  ({})", self.n, self.k, self.method);
        if let Some(w) = self.min_odd_weight {
            let _ = writeln!(out, "min odd   {w}");
        }
        if let (Some(seed), Some(effort)) = (self.seed, self.effort) {
            let _ = writeln!(out, "search    seed {seed} effort {effort} rounds {}", opt(&self.rounds));
        }
        let _ = writeln!(out, "witness   {}", self.witness_hex);
        out
    }
}
