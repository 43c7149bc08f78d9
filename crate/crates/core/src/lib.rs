//! Invariants, reconstruction, reduction types and conductor exponents of
//! Ciani plane quartics, the smooth quartics
//! `A x⁴ + B y⁴ + C z⁴ + a y²z² + b x²z² + c x²y²` with a Klein four-group of
//! sign-change automorphisms.
//!
//! All global arithmetic is exact over the rationals. Local questions at a
//! prime `p > 3` are answered over the maximal unramified extension of `Q_p`.
//!
//! ```
//! use ciani_core::{conductor, CianiTuple};
//!
//! let t = CianiTuple::from_ints([1, -6, 1, 1]);
//! assert_eq!(t.q_invariant().to_string(), "229");
//! let report = conductor(&t, 229).unwrap();
//! assert_eq!(report.conductor_min, Some(4));
//! ```

pub mod conductor;
pub mod error;
pub mod exactnum;
mod fp;
pub mod invariants;
pub mod padic;
pub mod poly;
pub mod reconstruct;
pub mod reduction;

pub use conductor::{conductor, good_model, ogg_check, ConductorReport, GoodModelCertificate, OggCheck};
pub use error::{Error, Result};
pub use exactnum::{format_rational, parse_rational, val_p, ExtValuation, Rational};
pub use invariants::{CianiTuple, NormalizedProfile, StandardModel};
pub use reconstruct::{k_model, reconstruct, resolvent, twists, verify_reconstruction, CubicPoly};
pub use reduction::{classify, ReductionType};
