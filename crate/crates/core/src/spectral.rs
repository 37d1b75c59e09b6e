//! Dense symmetric eigensolver and exact integer determinant.
//!
//! The eigensolver is cyclic Jacobi: unconditionally stable on symmetric
//! input and accurate enough for every matrix this crate touches (n <= 2048).
//! The determinant uses fraction-free Bareiss elimination over `BigInt`
//! because the `|det| >= n-1` gate is an exact integer comparison and ties
//! occur (|det S(P3)| = 2 = n-1).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::scalar::{real, Real};

pub const MAX_DIMENSION: usize = 2048;
const SYMMETRY_TOLERANCE: f64 = 1e-12;
const SWEEP_BUDGET: usize = 100;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpectralError {
    #[error("matrix entries ({i},{j}) and ({j},{i}) differ by more than {SYMMETRY_TOLERANCE}")]
    NotSymmetric { i: usize, j: usize },
    #[error("matrix buffer of length {len} is not n*n for n = {n}")]
    BadShape { n: usize, len: usize },
    #[error("dimension {0} exceeds the supported maximum {MAX_DIMENSION}")]
    TooLarge(usize),
    #[error("convergence tolerance must be positive")]
    BadTolerance,
    #[error("Jacobi sweeps did not converge within the budget of {SWEEP_BUDGET}")]
    NoConvergence,
    #[error("power sum exponent {0} unsupported (only 2 and 4)")]
    UnsupportedExponent(u32),
}

/// Eigenvalues of a symmetric matrix, sorted descending, together with the
/// off-diagonal Frobenius mass left by the final sweep as a residual bound.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    values: Vec<T>,
    residual: T,
}

impl<T: Real> Spectrum<T> {
    pub fn new(mut values: Vec<T>, residual: T) -> Self {
        values.sort_unstable_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
        Spectrum { values, residual }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// Eigenvalues in descending order.
    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn residual(&self) -> T {
        self.residual
    }

    /// Product of all eigenvalues (floating-point determinant estimate).
    pub fn product(&self) -> T {
        self.values.iter().fold(T::one(), |acc, &v| acc * v)
    }
}

/// Default Jacobi tolerance for the scalar type: the pinned 1e-12 where the
/// type can resolve it, a few epsilon otherwise.
pub fn default_tolerance<T: Real>() -> T {
    let pinned: T = real(1e-12);
    let floor = T::epsilon() * real(16.0);
    if pinned > floor {
        pinned
    } else {
        floor
    }
}

/// Eigenvalues of a symmetric matrix (`matrix` is row-major, length n*n) by
/// cyclic Jacobi rotations. Converged when the off-diagonal squares of the
/// rotated matrix fall to `tol^2` times the squared Frobenius norm of the
/// input.
pub fn eigenvalues_symmetric<T: Real>(
    matrix: &[T],
    n: usize,
    tol: T,
) -> Result<Spectrum<T>, SpectralError> {
    if matrix.len() != n * n {
        return Err(SpectralError::BadShape { n, len: matrix.len() });
    }
    if n > MAX_DIMENSION {
        return Err(SpectralError::TooLarge(n));
    }
    if !(tol > T::zero()) {
        return Err(SpectralError::BadTolerance);
    }
    let sym_tol: T = real(SYMMETRY_TOLERANCE);
    for i in 0..n {
        for j in (i + 1)..n {
            if (matrix[i * n + j] - matrix[j * n + i]).abs() > sym_tol {
                return Err(SpectralError::NotSymmetric { i, j });
            }
        }
    }
    if n == 0 {
        return Ok(Spectrum::new(vec![], T::zero()));
    }

    let mut a = matrix.to_vec();
    let frob_sq: T = a.iter().map(|&x| x * x).sum();
    let target = tol * tol * frob_sq;

    let off_sq = |a: &[T]| -> T {
        let mut s = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                s = s + a[p * n + q] * a[p * n + q];
            }
        }
        s + s
    };

    let mut converged = off_sq(&a) <= target;
    for _ in 0..SWEEP_BUDGET {
        if converged {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == T::zero() {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (real::<T>(2.0) * apq);
                // stable tan(rotation) with overflow guard for huge theta
                let t = if theta.abs() > T::one() / T::epsilon().sqrt() {
                    (real::<T>(2.0) * theta).recip()
                } else {
                    let s = theta.abs() + (theta * theta + T::one()).sqrt();
                    if theta < T::zero() {
                        -s.recip()
                    } else {
                        s.recip()
                    }
                };
                let c = (t * t + T::one()).sqrt().recip();
                let s = t * c;
                let tau = s / (T::one() + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = T::zero();
                a[q * n + p] = T::zero();
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    a[r * n + p] = arp - s * (arq + tau * arp);
                    a[r * n + q] = arq + s * (arp - tau * arq);
                    a[p * n + r] = a[r * n + p];
                    a[q * n + r] = a[r * n + q];
                }
            }
        }
        converged = off_sq(&a) <= target;
    }
    if !converged {
        return Err(SpectralError::NoConvergence);
    }

    let values: Vec<T> = (0..n).map(|i| a[i * n + i]).collect();
    Ok(Spectrum::new(values, off_sq(&a).sqrt()))
}

/// Exact determinant of an integer matrix (row-major, length n*n) by
/// fraction-free Bareiss elimination in arbitrary precision.
pub fn determinant_exact(matrix: &[i64], n: usize) -> Result<BigInt, SpectralError> {
    if matrix.len() != n * n {
        return Err(SpectralError::BadShape { n, len: matrix.len() });
    }
    if n > MAX_DIMENSION {
        return Err(SpectralError::TooLarge(n));
    }
    if n == 0 {
        return Ok(BigInt::one());
    }

    let mut a: Vec<BigInt> = matrix.iter().map(|&x| BigInt::from(x)).collect();
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            match (k + 1..n).find(|&r| !a[r * n + k].is_zero()) {
                Some(r) => {
                    for c in 0..n {
                        a.swap(k * n + c, r * n + c);
                    }
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &a[k * n + k] * &a[i * n + j] - &a[i * n + k] * &a[k * n + j];
                a[i * n + j] = num / &prev; // division is exact in Bareiss
            }
        }
        prev = a[k * n + k].clone();
    }
    Ok(a[n * n - 1].clone() * sign)
}

/// `sum of eigenvalue^k` for k in {2, 4}, summed in descending eigenvalue
/// order (the order contract shared with the alpha-energy).
pub fn power_sums<T: Real>(spectrum: &Spectrum<T>, k: u32) -> Result<T, SpectralError> {
    match k {
        2 => Ok(spectrum.values().iter().map(|&v| v * v).sum()),
        4 => Ok(spectrum.values().iter().map(|&v| (v * v) * (v * v)).sum()),
        other => Err(SpectralError::UnsupportedExponent(other)),
    }
}
