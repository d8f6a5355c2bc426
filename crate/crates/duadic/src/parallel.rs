//! Thread pool setup and partitioned enumeration.

use duadic_core::code::LinearCode;
use duadic_core::mindist::{CertifiedBound, EnumStats, ExactSearch, WeightDistribution};
use rayon::prelude::*;

/// Caps the worker count when set to a positive integer.
pub const THREADS_ENV: &str = "DUADIC_THREADS";

pub fn configured_threads() -> Option<usize> {
    std::env::var(THREADS_ENV).ok()?.trim().parse().ok().filter(|&n| n > 0)
}

pub fn pool() -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = configured_threads() {
        builder = builder.num_threads(n);
    }
    builder.build().expect("failed to start worker threads")
}

/// Runs every partition on the current pool and merges in range order, so
/// the result matches a single sequential pass.
pub fn enumerate(search: &ExactSearch, distribution: bool) -> EnumStats {
    let parts = rayon::current_num_threads() * 8;
    let stats: Vec<EnumStats> = search.ranges(parts).into_par_iter().map(|r| search.run(r, distribution)).collect();
    stats.into_iter().reduce(EnumStats::merge).expect("at least one range")
}

pub fn exact_min_distance<C: LinearCode + ?Sized>(code: &C) -> duadic_core::Result<CertifiedBound> {
    let search = ExactSearch::new(code)?;
    search.finish(enumerate(&search, false))
}

pub fn weight_distribution<C: LinearCode + ?Sized>(code: &C) -> duadic_core::Result<WeightDistribution> {
    let search = ExactSearch::new(code)?;
    let counts = enumerate(&search, true).distribution.expect("requested");
    Ok(WeightDistribution { counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use duadic_core::cyclotomic::defining_set;
    use duadic_core::{mindist, CyclicCode, FieldGF2m, WeightClassSpec};
    use std::sync::Arc;

    #[test]
    fn matches_sequential_for_any_pool_size() {
        let spec = WeightClassSpec::new(4, 5, &[0, 2]).unwrap();
        let field = Arc::new(FieldGF2m::new(5).unwrap());
        let code = CyclicCode::from_defining_set(field, defining_set(&spec)).unwrap().extend();
        let seq = mindist::exact_min_distance(&code).unwrap();
        let seq_wd = mindist::weight_distribution(&code).unwrap();
        for threads in [1, 2, 5] {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
            pool.install(|| {
                assert_eq!(exact_min_distance(&code).unwrap(), seq);
                assert_eq!(weight_distribution(&code).unwrap(), seq_wd);
            });
        }
    }
}
