//! Exact computations with roots of Coxeter systems: geometric and algebraic
//! intervals of prenilpotent pairs, root bases, and non-linearity witnesses for
//! commutation-relation tables of RGD systems over F₂.
//!
//! All arithmetic happens in Q(√2, √3), which holds every value of the
//! canonical bilinear form for Coxeter labels in `{2, 3, 4, 6, ∞}`.

// Matrix code reads best with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod basis;
pub mod cartan;
pub mod chambers;
pub mod coxeter;
pub mod error;
pub mod interval;
pub mod par;
pub mod qfield;
pub mod rgd;
pub mod root;

pub use basis::{AxiomReport, BasisKind, RootBasis};
pub use cartan::Order;
pub use coxeter::{CoxeterMatrix, CoxeterSystem, Element, Gallery, Gen};
pub use error::{Error, Result};
pub use interval::{Bounds, ConeVerdict, IntervalResult, MemberStatus};
pub use par::Execution;
pub use qfield::FieldElem;
pub use rgd::{CertificateVerdict, Family, LinearityVerdict, NonLinCertificate, RelationTable};
pub use root::{Root, Side, Witness};
