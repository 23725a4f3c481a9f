//! Cyclic codes over the chain rings `Z/p^e`: Hensel-lifted factorizations of
//! `x^n - 1`, duadic splittings, canonical code families with duals, and
//! explicit isodual and self-dual constructions.

pub mod arith;
pub mod constructions;
pub mod cyclic_code;
pub mod error;
pub mod fq_poly;
pub mod r_poly;
pub mod ring;

pub use constructions::{Claim, ConstructionResult, Kind, LabeledCode, Params, Verification, VerifyOptions};
pub use cyclic_code::{Certificate, Codeword, CyclicCode, ModMatrix, Strategy, WeightReport, DEFAULT_BUDGET};
pub use error::{Error, Result};
pub use fq_poly::{find_splittings, FqPoly, MuMinusOne, Splitting};
pub use r_poly::{basic_irreducible_factors, hensel_lift_factorization, RPoly};
pub use ring::{RElem, RingSpec};
