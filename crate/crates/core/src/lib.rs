//! q-complexes over finite fields: lexicographic shellability, order
//! complexes and their reduced homology.

pub mod error;
pub mod gf;
pub mod homology;
pub mod io;
pub mod ordercx;
pub mod qcomplex;
pub mod qmatroid;
pub mod qorder;
pub mod report;
pub mod reproduce;
pub mod vecspace;

pub use error::{Error, Result};
pub use gf::{Field, FieldElement, FieldVector};
pub use qcomplex::QComplex;
pub use qmatroid::{QMatroid, RankMetricCode};
pub use qorder::Chain;
pub use vecspace::{Matrix, Subspace};
