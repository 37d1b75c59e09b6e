//! Alpha-energies and the graph-level claim checkers.
//!
//! The central quantities: `sigma(G)` is the sum of absolute Seidel
//! eigenvalues, the alpha-energy generalizes it to `sum |theta_i|^alpha`
//! for `0 < alpha < 2`, and the determinant gate `|det S(G)| >= n-1`
//! (decided exactly) controls whether the alpha-energy is bounded below by
//! `(n-1)^alpha + (n-1)` on the whole open interval.

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::graph::Graph;
use crate::scalar::{real, real_usize, Real};
use crate::spectral::{self, Spectrum};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnergyError {
    #[error("alpha must be positive")]
    NonPositiveAlpha,
    #[error("alpha grid must be nonempty, ascending, and inside the open interval (0, 2)")]
    BadGrid,
    #[error("spectrum has {got} values, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("limit check needs alpha_small in (0, 0.01]")]
    BadSmallAlpha,
    #[error("limit check is undefined on spectra with a zero eigenvalue")]
    ZeroEigenvalue,
    #[error(transparent)]
    Spectral(#[from] spectral::SpectralError),
}

/// Finite list of alpha values strictly inside `(0, 2)`, sorted ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaGrid<T> {
    values: Vec<T>,
}

impl<T: Real> AlphaGrid<T> {
    pub fn new(values: Vec<T>) -> Result<Self, EnergyError> {
        let two = real::<T>(2.0);
        let ok = !values.is_empty()
            && values.iter().all(|&a| a > T::zero() && a < two)
            && values.windows(2).all(|w| w[0] < w[1]);
        if ok {
            Ok(AlphaGrid { values })
        } else {
            Err(EnergyError::BadGrid)
        }
    }

    /// The default grid 0.1, 0.2, ..., 1.9; endpoints excluded because the
    /// inequality is stated on the open interval.
    pub fn default_grid() -> Self {
        let values = (1..=19).map(|k| real::<T>(k as f64 / 10.0)).collect();
        AlphaGrid { values }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }
}

impl<T: Real> Default for AlphaGrid<T> {
    fn default() -> Self {
        Self::default_grid()
    }
}

/// `sum |theta_i|^alpha`, summed in descending eigenvalue order. Zero
/// eigenvalues contribute zero for every positive alpha. Alphas 1 and 2 use
/// the plain absolute value and square so that `alpha_energy(s, 2)` equals
/// `power_sums(s, 2)` bit for bit.
pub fn alpha_energy<T: Real>(spectrum: &Spectrum<T>, alpha: T) -> Result<T, EnergyError> {
    if !(alpha > T::zero()) {
        return Err(EnergyError::NonPositiveAlpha);
    }
    let two = real::<T>(2.0);
    let sum = if alpha == T::one() {
        spectrum.values().iter().map(|&v| v.abs()).sum()
    } else if alpha == two {
        spectrum.values().iter().map(|&v| v * v).sum()
    } else {
        spectrum.values().iter().map(|&v| v.abs().powf(alpha)).sum()
    };
    Ok(sum)
}

/// Seidel energy `sigma(G)`: the alpha = 1 energy of the Seidel spectrum.
pub fn seidel_energy<T: Real>(g: &Graph) -> Result<T, EnergyError> {
    let spectrum = crate::seidel_spectrum::<T>(g)?;
    alpha_energy(&spectrum, T::one())
}

/// The lower bound `(n-1)^alpha + (n-1)` of the gated inequality.
fn energy_bound<T: Real>(n: usize, alpha: T) -> T {
    let m = real_usize::<T>(n - 1);
    m.powf(alpha) + m
}

/// Trace identities of the Seidel spectrum: the squared sum is pinned at
/// `n(n-1)`, and the complete graph maximizes both the fourth power sum and
/// the largest squared eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceReport<T> {
    pub n: usize,
    pub sum_squares: T,
    pub sum_fourth: T,
    pub max_square: T,
    /// |sum theta^2 - n(n-1)|
    pub slack_squares: T,
    /// (n-1)^4 + n-1 - sum theta^4 (nonnegative up to tolerance)
    pub slack_fourth: T,
    /// (n-1)^2 - max theta^2 (nonnegative up to tolerance)
    pub slack_max: T,
    pub holds_squares: bool,
    pub holds_fourth: bool,
    pub holds_max: bool,
}

impl<T: Real> TraceReport<T> {
    pub fn ok(&self) -> bool {
        self.holds_squares && self.holds_fourth && self.holds_max
    }
}

pub fn check_trace_identities<T: Real>(g: &Graph) -> Result<TraceReport<T>, EnergyError> {
    let spectrum = crate::seidel_spectrum::<T>(g)?;
    let n = g.n();
    let nf = real_usize::<T>(n);
    let m = real_usize::<T>(n - 1);
    let tol2 = real::<T>(1e-9) * nf * nf;
    let tol4 = real::<T>(1e-9) * nf * nf * nf * nf;

    let sum_squares = spectral::power_sums(&spectrum, 2)?;
    let sum_fourth = spectral::power_sums(&spectrum, 4)?;
    let max_square = spectrum
        .values()
        .iter()
        .map(|&v| v * v)
        .fold(T::zero(), T::max);

    let slack_squares = (sum_squares - nf * m).abs();
    let bound_fourth = m * m * m * m + m;
    let slack_fourth = bound_fourth - sum_fourth;
    let slack_max = m * m - max_square;

    Ok(TraceReport {
        n,
        sum_squares,
        sum_fourth,
        max_square,
        slack_squares,
        slack_fourth,
        slack_max,
        holds_squares: slack_squares <= tol2,
        holds_fourth: slack_fourth >= -tol4,
        holds_max: slack_max >= -tol2,
    })
}

/// Whether the exact determinant clears the `|det| >= n-1` gate.
pub fn det_gate_holds(det: &BigInt, n: usize) -> bool {
    det.abs() >= BigInt::from(n - 1)
}

/// Floating-point version of the gate used where only a spectrum is
/// available: `|prod theta_i| >= n-1` up to relative tolerance 1e-8.
pub fn float_gate_holds<T: Real>(eigen_product: T, n: usize) -> bool {
    let m = real_usize::<T>(n - 1);
    eigen_product.abs() >= m - real::<T>(1e-8) * m.max(T::one())
}

/// Per-graph report for the gated alpha-energy inequality and the
/// `sigma(G) >= 2n-2` energy bound.
#[derive(Debug, Clone, PartialEq)]
pub struct TheoremReport<T> {
    pub n: usize,
    pub det: BigInt,
    /// Decided by exact integer comparison.
    pub gate_holds: bool,
    /// `alpha_energy - ((n-1)^alpha + (n-1))`, one entry per grid alpha.
    pub margins: Vec<T>,
    pub energy: T,
    /// `sigma(G) - (2n-2)`.
    pub haemers_margin: T,
}

impl<T: Real> TheoremReport<T> {
    pub fn min_margin(&self) -> T {
        self.margins.iter().copied().fold(T::infinity(), T::min)
    }

    /// The gated inequality itself: margins may only dip below zero by the
    /// 1e-9 * n float allowance, and only matter when the gate holds.
    pub fn theorem_ok(&self) -> bool {
        !self.gate_holds || self.min_margin() >= -real::<T>(1e-9) * real_usize(self.n)
    }
}

pub fn check_theorem_forward<T: Real>(
    g: &Graph,
    grid: &AlphaGrid<T>,
) -> Result<TheoremReport<T>, EnergyError> {
    let spectrum = crate::seidel_spectrum::<T>(g)?;
    let det = crate::seidel_determinant(g);
    let n = g.n();
    let margins = grid
        .values()
        .iter()
        .map(|&alpha| Ok(alpha_energy(&spectrum, alpha)? - energy_bound(n, alpha)))
        .collect::<Result<Vec<_>, EnergyError>>()?;
    let energy = alpha_energy(&spectrum, T::one())?;
    let haemers_margin = energy - real::<T>(2.0) * real_usize::<T>(n - 1);
    Ok(TheoremReport {
        n,
        gate_holds: det_gate_holds(&det, n),
        det,
        margins,
        energy,
        haemers_margin,
    })
}

/// Outcome of the contrapositive search for a failing alpha.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FailingAlpha<T> {
    /// `|prod theta_i| >= n-1`: the inequality holds on all of (0, 2).
    GateHolds,
    /// An alpha in (0, 2) where the inequality fails.
    Found(T),
    /// Gate fails but no failing alpha was found above the 1e-6 cutoff;
    /// one exists below it by the alpha -> 0 limit.
    NoneBelowCutoff,
}

/// Searches downward from alpha = 1 by halving for an alpha where
/// `sum |theta_i|^alpha < (n-1)^alpha + (n-1)`.
pub fn find_failing_alpha<T: Real>(
    spectrum: &Spectrum<T>,
    n: usize,
) -> Result<FailingAlpha<T>, EnergyError> {
    if spectrum.n() != n {
        return Err(EnergyError::DimensionMismatch { expected: n, got: spectrum.n() });
    }
    if float_gate_holds(spectrum.product(), n) {
        return Ok(FailingAlpha::GateHolds);
    }
    let cutoff = real::<T>(1e-6);
    let mut alpha = T::one();
    while alpha >= cutoff {
        if alpha_energy(spectrum, alpha)? < energy_bound(n, alpha) {
            return Ok(FailingAlpha::Found(alpha));
        }
        alpha = alpha / real::<T>(2.0);
    }
    Ok(FailingAlpha::NoneBelowCutoff)
}

/// Relative distance between `(mean |theta_i|^alpha)^(1/alpha)` and the
/// geometric mean of `|theta_i|`; tends to zero with alpha.
pub fn limit_check<T: Real>(spectrum: &Spectrum<T>, alpha_small: T) -> Result<T, EnergyError> {
    if !(alpha_small > T::zero()) || alpha_small > real(0.01) {
        return Err(EnergyError::BadSmallAlpha);
    }
    if spectrum.values().iter().any(|&v| v.abs() < real(1e-12)) {
        return Err(EnergyError::ZeroEigenvalue);
    }
    let nf = real_usize::<T>(spectrum.n());
    let mean_pow = alpha_energy(spectrum, alpha_small)? / nf;
    let power_mean = mean_pow.powf(alpha_small.recip());
    let log_gm: T = spectrum.values().iter().map(|&v| v.abs().ln()).sum::<T>() / nf;
    let geometric_mean = log_gm.exp();
    Ok(((power_mean - geometric_mean) / geometric_mean).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::LabeledGraphs;
    use proptest::prelude::*;

    fn spectrum_of(values: &[f64]) -> Spectrum<f64> {
        Spectrum::new(values.to_vec(), 0.0)
    }

    fn k4_spectrum() -> Spectrum<f64> {
        spectrum_of(&[1.0, 1.0, 1.0, -3.0])
    }

    #[test]
    fn alpha_energy_known_values() {
        assert_eq!(alpha_energy(&k4_spectrum(), 1.0).unwrap(), 6.0);
        assert_eq!(alpha_energy(&k4_spectrum(), 2.0).unwrap(), 12.0);
        assert_eq!(alpha_energy(&spectrum_of(&[0.0]), 0.5).unwrap(), 0.0);
        assert_eq!(alpha_energy(&k4_spectrum(), 0.0), Err(EnergyError::NonPositiveAlpha));
    }

    #[test]
    fn alpha_energy_two_equals_power_sum_exactly() {
        let s = crate::seidel_spectrum::<f64>(
            &Graph::from_edges(6, &[(0, 1), (2, 3), (1, 4), (4, 5)]).unwrap(),
        )
        .unwrap();
        assert_eq!(
            alpha_energy(&s, 2.0).unwrap(),
            spectral::power_sums(&s, 2).unwrap()
        );
    }

    #[test]
    fn seidel_energy_known_graphs() {
        let k5: f64 = seidel_energy(&Graph::complete(5).unwrap()).unwrap();
        assert!((k5 - 8.0).abs() < 1e-9);
        let k1: f64 = seidel_energy(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(k1, 0.0);
        let p3: f64 = seidel_energy(&Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()).unwrap();
        assert!((p3 - 4.0).abs() < 1e-9);
    }

    #[test]
    fn grid_validation() {
        assert!(AlphaGrid::new(vec![0.5, 1.0, 1.5]).is_ok());
        assert_eq!(AlphaGrid::new(vec![]), Err(EnergyError::BadGrid));
        assert_eq!(AlphaGrid::new(vec![0.0, 1.0]), Err(EnergyError::BadGrid));
        assert_eq!(AlphaGrid::new(vec![1.0, 2.0]), Err(EnergyError::BadGrid));
        assert_eq!(AlphaGrid::new(vec![1.0, 0.5]), Err(EnergyError::BadGrid));
        let grid = AlphaGrid::<f64>::default_grid();
        assert_eq!(grid.values().len(), 19);
        assert_eq!(grid.values()[0], 0.1);
        assert_eq!(grid.values()[18], 1.9);
    }

    #[test]
    fn trace_identities_on_k4_attain_equality() {
        let r: TraceReport<f64> = check_trace_identities(&Graph::complete(4).unwrap()).unwrap();
        assert!(r.ok());
        assert!(r.slack_squares <= 1e-9 * 16.0);
        assert!((r.sum_fourth - 84.0).abs() < 1e-8);
        assert!((r.max_square - 9.0).abs() < 1e-9);
    }

    #[test]
    fn trace_identities_on_p3() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let r: TraceReport<f64> = check_trace_identities(&p3).unwrap();
        assert!(r.ok());
        assert!((r.sum_squares - 6.0).abs() < 1e-9);
        // 16 + 1 + 1 = 18 = 2^4 + 2: equality again
        assert!((r.sum_fourth - 18.0).abs() < 1e-9);
        assert!((r.max_square - 4.0).abs() < 1e-9);
    }

    #[test]
    fn trace_identities_on_k1_are_trivial() {
        let r: TraceReport<f64> = check_trace_identities(&Graph::empty(1).unwrap()).unwrap();
        assert!(r.ok());
        assert_eq!(r.sum_squares, 0.0);
    }

    #[test]
    fn theorem_forward_k4_margins_vanish() {
        let grid = AlphaGrid::default_grid();
        let r: TheoremReport<f64> =
            check_theorem_forward(&Graph::complete(4).unwrap(), &grid).unwrap();
        assert!(r.gate_holds);
        assert_eq!(r.det, BigInt::from(-3));
        assert!(r.theorem_ok());
        for &m in &r.margins {
            assert!(m.abs() <= 1e-9, "margin {m} should vanish for K4");
        }
        assert!((r.energy - 6.0).abs() < 1e-9);
        assert!(r.haemers_margin.abs() < 1e-9);
    }

    #[test]
    fn theorem_forward_p3_gate_tie() {
        let grid = AlphaGrid::default_grid();
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let r: TheoremReport<f64> = check_theorem_forward(&p3, &grid).unwrap();
        assert!(r.gate_holds, "|det| = 2 = n-1 holds the gate");
        assert!(r.theorem_ok());
        assert!(r.min_margin() >= -1e-9 * 3.0);
    }

    #[test]
    fn theorem_forward_edgeless4() {
        let grid = AlphaGrid::default_grid();
        let r: TheoremReport<f64> =
            check_theorem_forward(&Graph::empty(4).unwrap(), &grid).unwrap();
        assert_eq!(r.det, BigInt::from(-3));
        assert!(r.gate_holds);
        for &m in &r.margins {
            assert!(m.abs() <= 1e-9, "J - I margins are tight, got {m}");
        }
    }

    #[test]
    fn failing_alpha_cases() {
        // |det| = 3 = n-1: gate holds
        assert_eq!(
            find_failing_alpha(&k4_spectrum(), 4).unwrap(),
            FailingAlpha::GateHolds
        );
        // |det| = 1 < 3: alpha = 1 already fails (4 < 6)
        assert_eq!(
            find_failing_alpha(&spectrum_of(&[1.0, 1.0, 1.0, -1.0]), 4).unwrap(),
            FailingAlpha::Found(1.0)
        );
        // n = 1: n-1 = 0 <= |det|
        assert_eq!(
            find_failing_alpha(&spectrum_of(&[0.0]), 1).unwrap(),
            FailingAlpha::GateHolds
        );
        // zero eigenvalue with n >= 2: product is 0, search succeeds
        assert!(matches!(
            find_failing_alpha(&spectrum_of(&[2.0, 0.0]), 2).unwrap(),
            FailingAlpha::Found(_)
        ));
        assert_eq!(
            find_failing_alpha(&spectrum_of(&[1.0]), 4),
            Err(EnergyError::DimensionMismatch { expected: 4, got: 1 })
        );
    }

    #[test]
    fn limit_check_approaches_geometric_mean() {
        let err = limit_check(&k4_spectrum(), 1e-4).unwrap();
        assert!(err <= 1e-3, "relative error {err}");
        let err = limit_check(&spectrum_of(&[2.0, -1.0, -1.0]), 1e-4).unwrap();
        assert!(err <= 1e-3, "relative error {err}");
        // constant spectra are exact at every alpha
        let err = limit_check(&spectrum_of(&[2.5, 2.5, 2.5]), 0.01).unwrap();
        assert!(err < 1e-12);
    }

    #[test]
    fn limit_check_rejects_bad_input() {
        assert_eq!(
            limit_check(&spectrum_of(&[1.0, 0.0]), 1e-4),
            Err(EnergyError::ZeroEigenvalue)
        );
        assert_eq!(
            limit_check(&k4_spectrum(), 0.5),
            Err(EnergyError::BadSmallAlpha)
        );
        assert_eq!(
            limit_check(&k4_spectrum(), 0.0),
            Err(EnergyError::BadSmallAlpha)
        );
    }

    #[test]
    fn haemers_bound_holds_exhaustively_for_small_n() {
        for n in 1..=5usize {
            for g in LabeledGraphs::new(n).unwrap() {
                let sigma: f64 = seidel_energy(&g).unwrap();
                assert!(
                    sigma >= 2.0 * (n as f64 - 1.0) - 1e-9,
                    "sigma {sigma} below bound at n={n}"
                );
            }
        }
    }

    proptest! {
        // alpha-energy is permutation-invariant and monotone in |theta|
        #[test]
        fn alpha_energy_permutation_invariant(
            mut values in prop::collection::vec(-10.0f64..10.0, 1..12),
            alpha in 0.05f64..1.95,
        ) {
            let a = alpha_energy(&spectrum_of(&values), alpha).unwrap();
            values.reverse();
            let b = alpha_energy(&spectrum_of(&values), alpha).unwrap();
            prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
        }

        #[test]
        fn alpha_energy_monotone_in_magnitude(
            values in prop::collection::vec(0.1f64..10.0, 1..10),
            bump_idx in 0usize..10,
            alpha in 0.05f64..1.95,
        ) {
            let idx = bump_idx % values.len();
            let mut bigger = values.clone();
            bigger[idx] += 1.0;
            let a = alpha_energy(&spectrum_of(&values), alpha).unwrap();
            let b = alpha_energy(&spectrum_of(&bigger), alpha).unwrap();
            prop_assert!(b >= a);
        }
    }

    use crate::graph::Graph;
}
