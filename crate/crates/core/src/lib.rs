//! Binary duadic codes `C[r,m,S]` of length `n = 2^m - 1`.
//!
//! The defining set of `C[r,m,S]` is the set of exponents `1 <= j < n` whose
//! binary weight, reduced mod `r`, lands in `S`. This crate builds those
//! codes, decides when a pair `(S, Z_r \ S)` splits `Z_n \ {0}` under the
//! multiplier `-1`, classifies the pair against the known parameter families,
//! certifies minimum-distance lower bounds with arithmetic-progression (BCH)
//! runs, and derives dual and extended codes with self-dual / doubly-even
//! certificates.
//!
//! The crate is `no_std` and only needs `alloc`. IO, report formats and
//! thread-level parallelism live in the companion `duadic` crate; the
//! enumeration kernels here expose partitioned entry points for that purpose.

#![no_std]

extern crate alloc;

pub mod bits;
pub mod bounds;
pub mod code;
pub mod cyclotomic;
pub mod duadic;
mod error;
pub mod gf2m;
pub mod gf2poly;
pub mod mindist;

pub use bits::BitVec;
pub use bounds::{BchCertificate, LemmaId, LemmaOutcome, Side, SqrtBoundReport};
pub use code::{CyclicCode, ExtendedCode, GeneratorMatrix};
pub use cyclotomic::{CyclotomicCoset, DefiningSet, WeightClassSpec};
pub use duadic::{DuadicPair, PairKind, Theorem, TheoremVerdict};
pub use error::Error;
pub use gf2m::{FieldElem, FieldGF2m};
pub use gf2poly::BinaryPoly;
pub use mindist::{CertifiedBound, Method, WeightDistribution};

pub type Result<T, E = Error> = core::result::Result<T, E>;
