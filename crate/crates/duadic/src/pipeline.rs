//! End-to-end computations behind each subcommand.

use std::sync::Arc;

use duadic_core::bounds::{gcd, verify_lemma_membership, LemmaId, Side};
use duadic_core::code::LinearCode;
use duadic_core::cyclotomic::defining_set;
use duadic_core::duadic::{classify, enumerate_catalog, is_duadic, is_duadic_in_zn, known_r8_family, CATALOG_MAX_R};
use duadic_core::mindist::bounded_min_distance;
use duadic_core::{CyclicCode, FieldGF2m, WeightClassSpec};
use rayon::prelude::*;

use crate::parallel;
use crate::report::{
    set_string, BoundReport, CatalogEntry, CatalogReport, CellStatus, CodeParams, CodeReport, ExtendedReport,
    LemmaCell, LemmaMatrix, SpecReport, TableReport, TableRow, Target, VerdictReport,
};
use crate::Error;

/// Builds a `Spec`, strictly unless `unchecked`.
pub fn make_spec(r: u32, m: u32, s: &[u32], unchecked: bool) -> Result<WeightClassSpec, Error> {
    let spec = if unchecked { WeightClassSpec::new_unchecked(r, m, s) } else { WeightClassSpec::new(r, m, s) };
    Ok(spec?)
}

fn odd_like_code(spec: &WeightClassSpec) -> Result<CyclicCode, Error> {
    let field = Arc::new(FieldGF2m::new(spec.m())?);
    Ok(CyclicCode::from_defining_set(field, defining_set(spec))?)
}

/// The explicit multipliers, checked to be units, or the defaults for `m`.
pub fn multipliers(code: &CyclicCode, explicit: Option<&[usize]>) -> Result<Vec<usize>, Error> {
    let Some(vs) = explicit else {
        return Ok(code.default_multipliers());
    };
    let n = code.n();
    if let Some(&v) = vs.iter().find(|&&v| v % n == 0 || gcd(v as u64, n as u64) != 1) {
        return Err(Error::Usage(format!("v = {v} is not a unit mod {n}")));
    }
    Ok(vs.to_vec())
}

fn code_params(code: &CyclicCode, candidates: &[usize]) -> CodeParams {
    let (d_lower, cert) = code.bch_lower_bound(candidates);
    let g = code.generator();
    CodeParams {
        n: code.n(),
        k: code.k(),
        generator_degree: g.degree().unwrap_or(0),
        generator_weight: g.weight(),
        generator_hex: g.to_hex(),
        coset_leaders: code.defining_set().coset_leaders(),
        d_lower,
        certificate: cert.as_ref().map(Into::into),
    }
}

pub fn construct(spec: &WeightClassSpec, v: Option<&[usize]>) -> Result<CodeReport, Error> {
    let code = odd_like_code(spec)?;
    let candidates = multipliers(&code, v)?;
    let duadic = spec.is_well_formed() && is_duadic(spec);
    let verdict = if duadic { Some(VerdictReport::from(&classify(spec)?)) } else { None };
    let dual = code.dual();
    let ext = code.extend();
    let self_orthogonal = ext.is_self_orthogonal();
    Ok(CodeReport {
        spec: SpecReport::new(spec),
        field_modulus: code.field().modulus_hex(),
        duadic,
        zn_splitting: is_duadic_in_zn(spec),
        verdict,
        dual_is_zero_plus_t: dual.defining_set() == &code.defining_set().with_zero(),
        extended: ExtendedReport {
            n: ext.length(),
            k: ext.dimension(),
            d_lower: ext.bch_lower_bound(&candidates).0,
            self_orthogonal,
            self_dual: self_orthogonal && 2 * ext.dimension() == ext.length(),
            doubly_even: ext.is_doubly_even(),
        },
        code: code_params(&code, &candidates),
        dual: code_params(&dual, &candidates),
        v_candidates: candidates,
    })
}

/// Smallest odd `m >= 3` with `m ≡ t (mod r)`.
pub fn reference_degree(r: u32, t: u32) -> u32 {
    if t >= 3 {
        t
    } else {
        t + r * ((3 - t).div_ceil(r))
    }
}

pub fn catalog(r: u32, t: u32) -> Result<CatalogReport, Error> {
    if r == 0 || !r.is_multiple_of(2) || r > CATALOG_MAX_R {
        return Err(Error::Usage(format!("r = {r} must be even and at most {CATALOG_MAX_R}")));
    }
    if t.is_multiple_of(2) || t >= r {
        return Err(Error::Usage(format!("t = {t} must be odd and below r = {r}")));
    }
    let sets = enumerate_catalog(r, t)?;
    let reference_m = reference_degree(r, t);
    let entries = sets
        .par_iter()
        .map(|s| {
            let spec = WeightClassSpec::new(r, reference_m, s)?;
            let v = classify(&spec)?;
            Ok(CatalogEntry {
                s: s.clone(),
                theorem: v.theorem.name().into(),
                residue_case: v.residue_case,
                via_complement: v.via_complement,
                d_lower: v.d_lower,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let known_family_contained = (r == 8)
        .then(|| known_r8_family(t).is_some_and(|fam| fam.iter().all(|k| sets.iter().any(|s| s.as_slice() == k))));
    Ok(CatalogReport { r, t, reference_m, count: entries.len(), entries, known_family_contained })
}

/// Which sets a table covers for each degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetRule {
    Fixed(Vec<u32>),
    /// Every catalog set for `m mod r`.
    All,
}

/// One row per `(m, S)`, computed in parallel and returned in input order.
/// Exact distances are enumerated where the dimension is at most 24.
pub fn table(r: u32, rule: &SetRule, m_list: &[u32], v: Option<&[usize]>) -> Result<TableReport, Error> {
    let mut tasks: Vec<(u32, Result<Vec<u32>, String>)> = Vec::new();
    for &m in m_list {
        match rule {
            SetRule::Fixed(s) => tasks.push((m, Ok(s.clone()))),
            SetRule::All => {
                if m % 2 == 0 || m < 3 {
                    tasks.push((m, Err(format!("m = {m} must be odd and at least 3"))));
                    continue;
                }
                match enumerate_catalog(r, m % r) {
                    Ok(sets) => tasks.extend(sets.into_iter().map(|s| (m, Ok(s)))),
                    Err(e) => tasks.push((m, Err(e.to_string()))),
                }
            }
        }
    }
    let rows = tasks
        .into_par_iter()
        .map(|(m, s)| match s {
            Ok(s) => table_row(r, m, &s, v),
            Err(e) => TableRow::failed(m, "all".into(), e),
        })
        .collect();
    Ok(TableReport { r, rows })
}

fn table_row(r: u32, m: u32, s: &[u32], v: Option<&[usize]>) -> TableRow {
    let label = set_string(s);
    match try_table_row(r, m, s, v) {
        Ok(row) => row,
        Err(e) => TableRow::failed(m, label, e.to_string()),
    }
}

fn try_table_row(r: u32, m: u32, s: &[u32], v: Option<&[usize]>) -> Result<TableRow, Error> {
    const EXACT_MAX_K: usize = duadic_core::mindist::ENUMERATION_BUDGET;
    let spec = WeightClassSpec::new(r, m, s)?;
    let code = odd_like_code(&spec)?;
    let candidates = multipliers(&code, v)?;
    let duadic = is_duadic(&spec);
    let verdict = if duadic { Some(classify(&spec)?) } else { None };
    let exact = |c: &dyn LinearCode| -> Result<Option<usize>, Error> {
        if c.dimension() == 0 || c.dimension() > EXACT_MAX_K {
            return Ok(None);
        }
        Ok(Some(parallel::exact_min_distance(c)?.upper))
    };
    let (d_cert, cert) = code.bch_lower_bound(&candidates);
    let dual = code.dual();
    let ext = code.extend();
    Ok(TableRow {
        m,
        s: set_string(s),
        n: Some(code.n()),
        k: Some(code.k()),
        duadic: Some(duadic),
        theorem: verdict.as_ref().map(|v| v.theorem.name().into()),
        predicted_d_lower: verdict.as_ref().and_then(|v| v.d_lower),
        certified_d_lower: Some(d_cert),
        bch_v: cert.map(|c| c.v),
        exact_d: exact(&code)?,
        dual_k: Some(dual.k()),
        predicted_dual_d_lower: verdict.as_ref().and_then(|v| v.d_dual_lower),
        certified_dual_d_lower: Some(dual.bch_lower_bound(&candidates).0),
        exact_dual_d: exact(&dual)?,
        ext_n: Some(ext.length()),
        ext_k: Some(ext.dimension()),
        predicted_ext_d_lower: verdict.as_ref().and_then(|v| v.d_ext_lower),
        exact_ext_d: exact(&ext)?,
        self_dual: Some(ext.is_self_dual()),
        doubly_even: Some(ext.is_doubly_even()),
        error: None,
    })
}

/// Runs every lemma on both sides of every catalog spec for each `m`.
pub fn verify_lemmas(r: u32, m_list: &[u32]) -> Result<LemmaMatrix, Error> {
    if r == 0 || !r.is_multiple_of(2) || r > CATALOG_MAX_R {
        return Err(Error::Usage(format!("r = {r} must be even and at most {CATALOG_MAX_R}")));
    }
    let mut specs = Vec::new();
    for &m in m_list {
        if m % 2 == 0 || m < 3 {
            return Err(Error::Usage(format!("m = {m} must be odd and at least 3")));
        }
        for s in enumerate_catalog(r, m % r)? {
            specs.push(WeightClassSpec::new(r, m, &s)?);
        }
    }
    let cells: Vec<LemmaCell> = specs
        .par_iter()
        .flat_map_iter(|spec| {
            LemmaId::ALL
                .into_iter()
                .flat_map(|lemma| [Side::S, Side::SPrime].map(|side| lemma_cell(spec, lemma, side)))
                .collect::<Vec<_>>()
        })
        .collect();
    let count = |st: CellStatus| cells.iter().filter(|c| c.status == st).count();
    Ok(LemmaMatrix {
        r,
        m_list: m_list.to_vec(),
        passed: count(CellStatus::Pass),
        failed: count(CellStatus::Fail),
        skipped: count(CellStatus::Skipped),
        cells,
    })
}

fn lemma_cell(spec: &WeightClassSpec, lemma: LemmaId, side: Side) -> LemmaCell {
    let mut cell = LemmaCell {
        m: spec.m(),
        s: set_string(&spec.elements()),
        lemma: lemma.name().into(),
        side: side.name().into(),
        status: CellStatus::Skipped,
        v: None,
        window: None,
        branch: None,
        reason: None,
    };
    match verify_lemma_membership(spec, lemma, side) {
        Ok(o) => {
            cell.status = if o.holds { CellStatus::Pass } else { CellStatus::Fail };
            cell.v = Some(o.v);
            cell.window = Some(o.window);
            cell.branch = o.branch;
            if !o.v_is_unit {
                cell.reason = Some(format!("v = {} is not a unit", o.v));
            } else if !o.holds {
                cell.reason = Some("progression leaves the defining set".into());
            }
        }
        Err(duadic_core::Error::Hypothesis(msg)) => cell.reason = Some(msg),
        Err(e) => {
            cell.status = CellStatus::Fail;
            cell.reason = Some(e.to_string());
        }
    }
    cell
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodChoice {
    /// Exhaustive when `k <= 24`, bounded search otherwise.
    Auto,
    Exact,
    Bounded,
}

pub fn mindist(
    spec: &WeightClassSpec,
    target: Target,
    method: MethodChoice,
    effort: usize,
    seed: u64,
    v: Option<&[usize]>,
) -> Result<BoundReport, Error> {
    let code = odd_like_code(spec)?;
    let candidates = multipliers(&code, v)?;
    let dual;
    let ext;
    let c: &dyn LinearCode = match target {
        Target::Code => &code,
        Target::Dual => {
            dual = code.dual();
            &dual
        }
        Target::Extended => {
            ext = code.extend();
            &ext
        }
    };
    let exhaustive = match method {
        MethodChoice::Exact => true,
        MethodChoice::Bounded => false,
        MethodChoice::Auto => c.dimension() <= duadic_core::mindist::ENUMERATION_BUDGET,
    };
    let bound = if exhaustive {
        let mut b = parallel::exact_min_distance(c)?;
        b.certificate = c.bch_lower_bound(&candidates).1;
        b
    } else {
        bounded_min_distance(c, effort, seed, &candidates)?
    };
    if !c.contains(&bound.witness) || bound.witness.count_ones() != bound.upper {
        return Err(Error::Verification("witness is not a codeword of the reported weight".into()));
    }
    if bound.lower > bound.upper {
        return Err(Error::Verification(format!("lower {} exceeds upper {}", bound.lower, bound.upper)));
    }
    Ok(BoundReport::new(spec, target, c.length(), c.dimension(), &bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::{render, Report};
    use crate::Format;

    #[test]
    fn reference_degrees() {
        assert_eq!(reference_degree(2, 1), 3);
        assert_eq!(reference_degree(4, 1), 5);
        assert_eq!(reference_degree(8, 3), 3);
        assert_eq!(reference_degree(16, 1), 17);
    }

    #[test]
    fn empty_table_renders_header() {
        let t = table(2, &SetRule::Fixed(vec![1]), &[], None).unwrap();
        assert!(t.rows.is_empty());
        let csv = render(&t, Format::Csv).unwrap();
        assert_eq!(csv.trim_end(), TableReport::CSV_COLUMNS.join(","));
    }

    #[test]
    fn table_flags_bounds_below_prediction() {
        let mut t = table(2, &SetRule::Fixed(vec![1]), &[5], None).unwrap();
        assert!(t.failures().is_empty());
        t.rows[0].exact_d = Some(5);
        assert_eq!(t.failures().len(), 1);
    }

    #[test]
    fn catalog_for_every_r8_residue_contains_known_family() {
        for t in [1, 3, 5, 7] {
            let c = catalog(8, t).unwrap();
            assert_eq!(c.count, 16);
            assert!(c.failures().is_empty());
        }
    }

    #[test]
    fn explicit_multipliers_must_be_units() {
        let spec = make_spec(2, 5, &[1], false).unwrap();
        assert!(matches!(construct(&spec, Some(&[31])), Err(Error::Usage(_))));
        assert_eq!(construct(&spec, Some(&[1])).unwrap().v_candidates, vec![1]);
    }
}
