//! Exact joint spectra of projection tuples over `Q(i, sqrt d)`.
//!
//! Scalars live in the field K = Q(i, sqrt d). Projections are Hermitian
//! idempotent matrices over K, the joint spectrum of a tuple is the zero
//! set of its determinant pencil, and the structured maps on projections
//! (unitary and anti-unitary conjugation, automorphism-induced maps) can be
//! compared against each other through those zero sets.

pub mod error;
pub mod exactla;
pub mod formats;
pub mod lattice;
pub mod maps;
pub mod oracle;
pub mod par;
pub mod polyalg;
pub mod scalar;
pub mod spectrum;
pub mod verify;

pub use error::{Error, Result};
pub use exactla::Matrix;
pub use lattice::Projection;
pub use maps::{MapClass, ProjectionMap};
pub use polyalg::MultiPoly;
pub use scalar::{Automorphism, FieldContext, FieldElem};
pub use spectrum::{JointSpectrum, SpectrumClass};
pub use verify::{TrialConfig, VerificationReport};
