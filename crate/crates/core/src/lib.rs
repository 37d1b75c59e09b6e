//! Verification toolkit for Seidel-matrix spectral energy.
//!
//! The crate computes Seidel spectra, alpha-energies, and exact determinants
//! of small graphs, exhaustively checks the `sigma(G) >= 2n-2` energy bound
//! and the determinant-gated alpha-energy inequality at small vertex counts,
//! and numerically certifies the associated constrained power-sum
//! minimization: feasibility, KKT residuals, MFCQ witness directions, the
//! four-point power-mean inequality, and root counts of the stationarity
//! equation.
//!
//! Numeric kernels are generic over the scalar type (`f32`/`f64`) through
//! [`scalar::Real`]; the crate root re-exports `f64` aliases. Determinants
//! are exact `BigInt` values, never floating products, because the
//! `|det S| >= n-1` gate is decided by integer comparison.

pub mod energy;
pub mod graph;
pub mod graph6;
pub mod kkt;
pub mod scalar;
pub mod scan;
pub mod spectral;

pub use graph::{Graph, GraphError, SeidelMatrix};
pub use graph6::{parse_graph6, write_graph6, Graph6Error, LabeledGraphs};
pub use scalar::Real;

/// `f64` spectrum, the common working type.
pub type Spectrum = spectral::Spectrum<f64>;
/// `f64` alpha grid.
pub type AlphaGrid = energy::AlphaGrid<f64>;
/// `f64` theorem report.
pub type TheoremReport = energy::TheoremReport<f64>;
/// `f64` power-sum minimization problem.
pub type PowerSumProblem = kkt::PowerSumProblem<f64>;
/// `f64` KKT certificate report.
pub type KktReport = kkt::KktReport<f64>;

/// Seidel spectrum of a graph at the default tolerance for `T`.
pub fn seidel_spectrum<T: Real>(g: &Graph) -> Result<spectral::Spectrum<T>, spectral::SpectralError> {
    let s = g.seidel_matrix();
    spectral::eigenvalues_symmetric(&s.to_real::<T>(), s.n(), spectral::default_tolerance())
}

/// Exact Seidel determinant of a graph.
pub fn seidel_determinant(g: &Graph) -> num_bigint::BigInt {
    let s = g.seidel_matrix();
    spectral::determinant_exact(&s.to_i64(), s.n()).expect("Seidel matrix is square and small")
}
