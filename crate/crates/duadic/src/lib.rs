//! Reports, parallel drivers and pipelines on top of `duadic-core`.
//!
//! The `duadic` binary is a thin wrapper over [`pipeline`]; everything it
//! prints is one of the serializable types in [`report`].

pub mod parallel;
pub mod pipeline;
pub mod report;

pub use report::Format;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Bad arguments or a request outside a documented budget.
    #[error("{0}")]
    Usage(String),
    /// A computed invariant did not hold.
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Core(#[from] duadic_core::Error),
    #[error("output: {0}")]
    Output(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// 2 for usage errors, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        use duadic_core::Error as E;
        match self {
            Error::Usage(_) => 2,
            Error::Core(
                E::InvalidSpec(_) | E::DegreeOutOfRange(_) | E::CatalogBudget(_) | E::EnumerationBudget { .. },
            ) => 2,
            _ => 1,
        }
    }
}

/// Parses comma-separated residues, sorted; duplicates are rejected.
pub fn parse_residues(text: &str) -> Result<Vec<u32>, Error> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let x: u32 = part.parse().map_err(|_| Error::Usage(format!("'{part}' is not a residue")))?;
        out.push(x);
    }
    out.sort_unstable();
    if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Usage(format!("residue {} repeated", w[0])));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_are_sorted_and_unique() {
        assert_eq!(parse_residues("4,3, 2,0").unwrap(), vec![0, 2, 3, 4]);
        assert_eq!(parse_residues("").unwrap(), Vec::<u32>::new());
        assert!(matches!(parse_residues("1,1"), Err(Error::Usage(_))));
        assert!(matches!(parse_residues("1,x"), Err(Error::Usage(_))));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Error::Usage("x".into()).exit_code(), 2);
        assert_eq!(Error::Core(duadic_core::Error::CatalogBudget(18)).exit_code(), 2);
        assert_eq!(Error::Core(duadic_core::Error::ZeroDimension).exit_code(), 1);
        assert_eq!(Error::Verification("x".into()).exit_code(), 1);
    }
}
