//! Constrained power-sum minimization and its first-order certificates.
//!
//! The problem: minimize `f(x) = sum x_i^p` with `0 < p < 1` over positive
//! vectors subject to
//!
//! ```text
//! g(x) = sum x_i - n(n-1)                 = 0
//! h(x) = sum x_i^2 - (n-1)^4 - (n-1)     <= 0
//! d(x) = (n-1)^2 - prod x_i              <= 0
//! k_i(x) = x_i - (n-1)^2                 <= 0
//! l_i(x) = xi - x_i                      <= 0
//! ```
//!
//! Squared Seidel eigenvalues of a graph whose determinant clears the
//! `|det S| >= n-1` gate are feasible with `p = alpha/2`, and the global
//! minimum value `(n-1)^(2p) + n-1` is exactly the energy lower bound. The
//! submodules provide the multi-start solver, KKT-residual and MFCQ
//! certificates, stationarity-equation root counting, and the four-point
//! power-mean inequality with its fuzz sampler.

mod bennett;
mod certify;
mod roots;
mod solver;

pub use bennett::{bennett_check, sample_bennett_premises, BennettError, BennettPremises};
pub use certify::{kkt_residual, mfcq_witness, KktReport, MfcqWitness};
pub use roots::{count_positive_roots, positive_roots};
pub use solver::{minimize, MinimizeOutcome};

use thiserror::Error;

use crate::energy::float_gate_holds;
use crate::scalar::{real, real_usize, Real};
use crate::spectral::Spectrum;

#[derive(Debug, Error, PartialEq)]
pub enum KktError {
    #[error("exponent p must lie strictly inside (0, 1)")]
    BadExponent,
    #[error("problem dimension must be at least 3, got {0}")]
    BadDimension(usize),
    #[error("point has {got} coordinates, problem has {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("alpha must lie strictly inside (0, 2)")]
    BadAlpha,
    #[error("determinant gate fails: |eigenvalue product| {product} < n-1 = {bound}")]
    GateFails { product: f64, bound: f64 },
    #[error("point is infeasible (scaled violation {violation:.3e} exceeds {allowed:.3e})")]
    Infeasible { violation: f64, allowed: f64 },
    #[error("multi-start minimization needs at least one start")]
    ZeroStarts,
    #[error("no feasible start available")]
    NoFeasibleStart,
    #[error("MFCQ witness verification failed on active constraint {constraint}: directional derivative {value}")]
    WitnessFailed { constraint: String, value: f64 },
    #[error("invalid root-count parameters: {0}")]
    BadRootParams(&'static str),
}

/// Instance `(n, p, xi)` of the power-sum minimization problem.
///
/// `xi` is fixed at half the largest admissible value `(n-1)^(4-2n)`, which
/// keeps every lower-bound constraint strictly inactive on the feasible set:
/// a coordinate at `xi` would force the product below `(n-1)^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSumProblem<T> {
    n: usize,
    p: T,
    xi: T,
}

/// Values of all constraints at a point, in the sign convention where
/// feasibility means `g = 0` and everything else `<= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstraintSlacks<T> {
    pub g: T,
    pub h: T,
    pub d: T,
    pub k: Vec<T>,
    pub l: Vec<T>,
}

impl<T: Real> PowerSumProblem<T> {
    pub fn new(n: usize, p: T) -> Result<Self, KktError> {
        if n < 3 {
            return Err(KktError::BadDimension(n));
        }
        if !(p > T::zero() && p < T::one()) {
            return Err(KktError::BadExponent);
        }
        let xi = real::<T>(0.5) * real_usize::<T>(n - 1).powi(4 - 2 * n as i32);
        Ok(PowerSumProblem { n, p, xi })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> T {
        self.p
    }

    pub fn xi(&self) -> T {
        self.xi
    }

    /// Required coordinate sum `n(n-1)`.
    pub fn sum_target(&self) -> T {
        real_usize::<T>(self.n) * real_usize::<T>(self.n - 1)
    }

    /// Upper box bound `(n-1)^2`, shared by the `k` constraints.
    pub fn box_upper(&self) -> T {
        let m = real_usize::<T>(self.n - 1);
        m * m
    }

    /// Bound `(n-1)^4 + (n-1)` of the quadratic constraint.
    pub fn quad_bound(&self) -> T {
        let m = real_usize::<T>(self.n - 1);
        m * m * m * m + m
    }

    /// `f(x) = sum x_i^p`.
    pub fn objective(&self, x: &[T]) -> T {
        x.iter().map(|&v| v.powf(self.p)).sum()
    }

    /// `grad f = p x_i^(p-1)` componentwise.
    pub fn objective_gradient(&self, x: &[T]) -> Vec<T> {
        x.iter().map(|&v| self.p * v.powf(self.p - T::one())).collect()
    }

    /// The global minimum value `(n-1)^(2p) + n-1` attained at a permutation
    /// of `((n-1)^2, 1, ..., 1)`.
    pub fn expected_minimum(&self) -> T {
        let m = real_usize::<T>(self.n - 1);
        m.powf(real::<T>(2.0) * self.p) + m
    }

    pub fn evaluate_constraints(&self, x: &[T]) -> Result<ConstraintSlacks<T>, KktError> {
        if x.len() != self.n {
            return Err(KktError::DimensionMismatch { expected: self.n, got: x.len() });
        }
        let sum: T = x.iter().copied().sum();
        let sum_sq: T = x.iter().map(|&v| v * v).sum();
        let prod: T = x.iter().fold(T::one(), |acc, &v| acc * v);
        let upper = self.box_upper();
        Ok(ConstraintSlacks {
            g: sum - self.sum_target(),
            h: sum_sq - self.quad_bound(),
            d: upper - prod,
            k: x.iter().map(|&v| v - upper).collect(),
            l: x.iter().map(|&v| self.xi - v).collect(),
        })
    }

    /// Per-constraint feasibility scales: tolerances are `1e-9` times these.
    pub(crate) fn scales(&self) -> ConstraintScales<T> {
        ConstraintScales {
            g: self.sum_target(),
            h: self.quad_bound(),
            d: self.box_upper(),
            k: self.box_upper(),
            l: T::one(),
        }
    }

    /// Largest constraint violation relative to the per-constraint scale.
    pub fn scaled_violation(&self, slacks: &ConstraintSlacks<T>) -> T {
        let s = self.scales();
        let mut v = (slacks.g / s.g).abs();
        v = v.max(slacks.h.max(T::zero()) / s.h);
        v = v.max(slacks.d.max(T::zero()) / s.d);
        for &k in &slacks.k {
            v = v.max(k.max(T::zero()) / s.k);
        }
        for &l in &slacks.l {
            v = v.max(l.max(T::zero()) / s.l);
        }
        v
    }

    /// Feasible within `factor` times the 1e-9 scaled tolerance.
    pub fn is_feasible(&self, slacks: &ConstraintSlacks<T>, factor: T) -> bool {
        self.scaled_violation(slacks) <= factor * real(1e-9)
    }

    pub(crate) fn check_feasible(&self, x: &[T], factor: f64) -> Result<ConstraintSlacks<T>, KktError> {
        let slacks = self.evaluate_constraints(x)?;
        let factor_t: T = real(factor);
        if !self.is_feasible(&slacks, factor_t) {
            return Err(KktError::Infeasible {
                violation: self.scaled_violation(&slacks).to_f64().unwrap_or(f64::NAN),
                allowed: factor * 1e-9,
            });
        }
        Ok(slacks)
    }
}

pub(crate) struct ConstraintScales<T> {
    pub g: T,
    pub h: T,
    pub d: T,
    pub k: T,
    pub l: T,
}

/// Bridges a gated Seidel spectrum into the minimization problem:
/// `x_i = theta_i^2` (sorted descending) with `p = alpha/2`, so that
/// `f(x) = sum |theta_i|^alpha`.
pub fn embed_spectrum<T: Real>(
    spectrum: &Spectrum<T>,
    alpha: T,
) -> Result<(PowerSumProblem<T>, Vec<T>), KktError> {
    let n = spectrum.n();
    if n < 3 {
        return Err(KktError::BadDimension(n));
    }
    if !(alpha > T::zero() && alpha < real(2.0)) {
        return Err(KktError::BadAlpha);
    }
    let product = spectrum.product();
    if !float_gate_holds(product, n) {
        return Err(KktError::GateFails {
            product: product.abs().to_f64().unwrap_or(f64::NAN),
            bound: (n - 1) as f64,
        });
    }
    let problem = PowerSumProblem::new(n, alpha / real(2.0))?;
    let mut point: Vec<T> = spectrum.values().iter().map(|&v| v * v).collect();
    point.sort_unstable_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
    Ok((problem, point))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xi_matches_the_frozen_values() {
        let p4 = PowerSumProblem::<f64>::new(4, 0.5).unwrap();
        assert!((p4.xi() - 1.0 / 162.0).abs() < 1e-18);
        let p3 = PowerSumProblem::<f64>::new(3, 0.25).unwrap();
        assert_eq!(p3.xi(), 0.125);
        // invariant: xi strictly below (n-1)^(4-2n)
        for n in 3..=10usize {
            let prob = PowerSumProblem::<f64>::new(n, 0.5).unwrap();
            let max_xi = ((n - 1) as f64).powi(4 - 2 * n as i32);
            assert!(prob.xi() > 0.0 && prob.xi() < max_xi);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(
            PowerSumProblem::<f64>::new(4, 1.5).unwrap_err(),
            KktError::BadExponent
        );
        assert_eq!(
            PowerSumProblem::<f64>::new(4, 0.0).unwrap_err(),
            KktError::BadExponent
        );
        assert_eq!(
            PowerSumProblem::<f64>::new(2, 0.5).unwrap_err(),
            KktError::BadDimension(2)
        );
    }

    #[test]
    fn constraints_at_the_minimizer_are_active() {
        let prob = PowerSumProblem::<f64>::new(4, 0.5).unwrap();
        let s = prob.evaluate_constraints(&[9.0, 1.0, 1.0, 1.0]).unwrap();
        assert_eq!(s.g, 0.0);
        assert_eq!(s.h, 0.0);
        assert_eq!(s.d, 0.0);
        assert_eq!(s.k[0], 0.0);
        assert!(s.k[1..].iter().all(|&v| v < 0.0));
        assert!(s.l.iter().all(|&v| v < 0.0));
        assert!(prob.is_feasible(&s, 1.0));
    }

    #[test]
    fn constraints_at_the_uniform_point_are_interior() {
        let prob = PowerSumProblem::<f64>::new(4, 0.5).unwrap();
        let s = prob.evaluate_constraints(&[3.0; 4]).unwrap();
        assert_eq!(s.g, 0.0);
        assert_eq!(s.h, -48.0);
        assert_eq!(s.d, -72.0);
        assert!(prob.is_feasible(&s, 1.0));
    }

    #[test]
    fn constraint_sum_violation_is_infeasible() {
        let prob = PowerSumProblem::<f64>::new(4, 0.5).unwrap();
        let s = prob.evaluate_constraints(&[12.0, 0.1, 0.1, 0.1]).unwrap();
        assert!((s.g - 0.3).abs() < 1e-12);
        assert!(!prob.is_feasible(&s, 1.0));
    }

    #[test]
    fn embed_k4_spectrum() {
        let s = Spectrum::new(vec![1.0, 1.0, 1.0, -3.0], 0.0);
        let (prob, x) = embed_spectrum(&s, 1.0).unwrap();
        assert_eq!(prob.p(), 0.5);
        assert_eq!(x, vec![9.0, 1.0, 1.0, 1.0]);
        assert_eq!(prob.objective(&x), 6.0);
        let slacks = prob.evaluate_constraints(&x).unwrap();
        assert!(prob.is_feasible(&slacks, 1.0));
    }

    #[test]
    fn embed_p3_spectrum() {
        let s = Spectrum::new(vec![2.0, -1.0, -1.0], 0.0);
        let (prob, x) = embed_spectrum(&s, 1.0).unwrap();
        assert_eq!(x, vec![4.0, 1.0, 1.0]);
        assert_eq!(prob.objective(&x), 4.0);
    }

    #[test]
    fn embed_refuses_failing_gate() {
        let s = Spectrum::new(vec![1.0, 1.0, 1.0, -1.0], 0.0);
        assert!(matches!(
            embed_spectrum(&s, 1.0),
            Err(KktError::GateFails { .. })
        ));
    }

    #[test]
    fn embed_rejects_alpha_outside_open_interval() {
        let s = Spectrum::new(vec![1.0, 1.0, 1.0, -3.0], 0.0);
        assert_eq!(embed_spectrum(&s, 2.0).unwrap_err(), KktError::BadAlpha);
        assert_eq!(embed_spectrum(&s, 0.0).unwrap_err(), KktError::BadAlpha);
    }
}
