//! Dyadic sampling of the unit circle and the discrete Fourier analysis and
//! quadrature built on it.
//!
//! The uniform average over the `n` points `t_j = exp(2πi j/n)` integrates
//! every trigonometric polynomial of degree `< n` exactly against the
//! normalized arc-length measure `m`, which is what makes the grid the
//! common substrate for every other module.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::triples::CircleMeasure;

/// Default number of grid points.
pub const DEFAULT_GRID: usize = 2048;

/// Angular tolerance (radians) for snapping a point of the circle to a grid point.
pub const SNAP_TOL: f64 = 1e-12;

/// `n` equispaced points on the unit circle, `n` a power of two.
#[derive(Clone, Debug)]
pub struct UnitGrid {
    points: Arc<[Complex64]>,
}

impl PartialEq for UnitGrid {
    fn eq(&self, other: &Self) -> bool {
        self.n() == other.n()
    }
}

impl UnitGrid {
    pub fn new(n: usize) -> Result<Self> {
        if n < 8 || !n.is_power_of_two() {
            return Err(Error::InvalidGrid(n));
        }
        let points = (0..n)
            .map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / n as f64))
            .collect();
        Ok(Self { points })
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn point(&self, j: usize) -> Complex64 {
        self.points[j]
    }

    pub fn angle(&self, j: usize) -> f64 {
        2.0 * PI * j as f64 / self.n() as f64
    }

    /// Index of the grid point at `angle`, if it lies within `tol` radians of one.
    pub fn snap_angle(&self, angle: f64, tol: f64) -> Result<usize> {
        let n = self.n() as f64;
        let pos = angle.rem_euclid(2.0 * PI) * n / (2.0 * PI);
        let idx = pos.round();
        if ((pos - idx) * 2.0 * PI / n).abs() > tol {
            return Err(Error::OffGridAtom {
                angle,
                n: self.n(),
            });
        }
        Ok((idx as usize) % self.n())
    }

    /// Index of the grid point nearest to the unit-modulus `z`, within `tol` radians.
    pub fn snap_point(&self, z: Complex64, tol: f64) -> Result<usize> {
        self.snap_angle(z.arg(), tol)
    }
}

/// Complex samples of a function on a [`UnitGrid`].
#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction {
    grid: UnitGrid,
    values: Vec<Complex64>,
}

impl GridFunction {
    pub fn new(grid: UnitGrid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.n() {
            return Err(Error::GridMismatch {
                expected: grid.n(),
                got: values.len(),
            });
        }
        if let Some(j) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(j));
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: &UnitGrid, f: impl Fn(Complex64) -> Complex64) -> Result<Self> {
        let values = grid.points().iter().map(|&t| f(t)).collect();
        Self::new(grid.clone(), values)
    }

    pub fn constant(grid: &UnitGrid, c: Complex64) -> Self {
        Self {
            grid: grid.clone(),
            values: vec![c; grid.n()],
        }
    }

    pub fn grid(&self) -> &UnitGrid {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn conj(&self) -> Self {
        Self {
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| v.conj()).collect(),
        }
    }

    /// Pointwise product; both factors must live on the same grid.
    pub fn mul(&self, other: &GridFunction) -> Result<Self> {
        self.check_same_grid(other)?;
        Ok(Self {
            grid: self.grid.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    pub fn map(&self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        Self {
            grid: self.grid.clone(),
            values: self
                .grid
                .points()
                .iter()
                .zip(&self.values)
                .map(|(&t, &v)| f(t, v))
                .collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &GridFunction) -> Result<f64> {
        self.check_same_grid(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    fn check_same_grid(&self, other: &GridFunction) -> Result<()> {
        if self.grid.n() != other.grid.n() {
            return Err(Error::GridMismatch {
                expected: self.grid.n(),
                got: other.grid.n(),
            });
        }
        Ok(())
    }
}

/// Fourier coefficients `c_k`, `|k| <= kmax`, of a grid function.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierCoeffs {
    kmax: usize,
    // index k + kmax
    values: Vec<Complex64>,
}

impl FourierCoeffs {
    pub fn kmax(&self) -> usize {
        self.kmax
    }

    /// `c_k`; zero outside the stored range.
    pub fn get(&self, k: i64) -> Complex64 {
        if k.unsigned_abs() as usize > self.kmax {
            return Complex64::new(0.0, 0.0);
        }
        self.values[(k + self.kmax as i64) as usize]
    }

    /// Coefficients `c_0, c_1, ..., c_kmax`.
    pub fn nonnegative(&self) -> &[Complex64] {
        &self.values[self.kmax..]
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let kmax = self.kmax as i64;
        self.values
            .iter()
            .enumerate()
            .map(move |(i, &c)| (i as i64 - kmax, c))
    }
}

/// Unnormalized forward DFT, `X_k = Σ_j x_j exp(-2πi jk/n)`.
pub(crate) fn dft_forward(mut data: Vec<Complex64>) -> Vec<Complex64> {
    let fft = FftPlanner::new().plan_fft_forward(data.len());
    fft.process(&mut data);
    data
}

/// Unnormalized inverse DFT, `x_j = Σ_k X_k exp(2πi jk/n)`.
pub(crate) fn dft_inverse(mut data: Vec<Complex64>) -> Vec<Complex64> {
    let fft = FftPlanner::new().plan_fft_inverse(data.len());
    fft.process(&mut data);
    data
}

/// `c_k ≈ ∫ t^{-k} f(t) m(dt)` for `|k| <= kmax`.
pub fn fourier_coeffs(f: &GridFunction, kmax: usize) -> Result<FourierCoeffs> {
    let n = f.grid().n();
    if kmax >= n / 2 {
        return Err(Error::Aliasing { kmax, n });
    }
    let spectrum = dft_forward(f.values().to_vec());
    let scale = 1.0 / n as f64;
    let values = (-(kmax as i64)..=kmax as i64)
        .map(|k| spectrum[k.rem_euclid(n as i64) as usize] * scale)
        .collect();
    Ok(FourierCoeffs { kmax, values })
}

/// Samples of `Σ_k c_k t^k` on `grid`; inverse of [`fourier_coeffs`] on band-limited data.
pub fn synthesize(grid: &UnitGrid, coeffs: &FourierCoeffs) -> Result<GridFunction> {
    let n = grid.n();
    if coeffs.kmax() >= n / 2 {
        return Err(Error::Aliasing {
            kmax: coeffs.kmax(),
            n,
        });
    }
    let mut spectrum = vec![Complex64::new(0.0, 0.0); n];
    for (k, c) in coeffs.iter() {
        spectrum[k.rem_euclid(n as i64) as usize] += c;
    }
    GridFunction::new(grid.clone(), dft_inverse(spectrum))
}

/// Samples of the power series `Σ_k a_k t^k` on `grid` (`a.len() <= n`).
pub fn eval_power_series(grid: &UnitGrid, a: &[Complex64]) -> Result<GridFunction> {
    let n = grid.n();
    if a.len() > n {
        return Err(Error::Aliasing { kmax: a.len(), n });
    }
    let mut spectrum = vec![Complex64::new(0.0, 0.0); n];
    spectrum[..a.len()].copy_from_slice(a);
    GridFunction::new(grid.clone(), dft_inverse(spectrum))
}

/// Samples of `Σ_k a_k t^{-k}` on `grid` (`a.len() <= n`).
pub fn eval_conj_power_series(grid: &UnitGrid, a: &[Complex64]) -> Result<GridFunction> {
    let n = grid.n();
    if a.len() > n {
        return Err(Error::Aliasing { kmax: a.len(), n });
    }
    let mut data = vec![Complex64::new(0.0, 0.0); n];
    data[..a.len()].copy_from_slice(a);
    GridFunction::new(grid.clone(), dft_forward(data))
}

/// Uniform average of the samples, i.e. the grid quadrature of `∫ f dm`.
pub fn mean(f: &GridFunction) -> Complex64 {
    let sum: Complex64 = f.values().iter().sum();
    sum / f.grid().n() as f64
}

/// `∫ f dμ = mean(f·w) + Σ_k mass_k f(t_k)`, atoms read off the grid samples.
pub fn integrate_measure(f: &GridFunction, mu: &CircleMeasure) -> Result<Complex64> {
    if f.grid().n() != mu.grid().n() {
        return Err(Error::GridMismatch {
            expected: mu.grid().n(),
            got: f.grid().n(),
        });
    }
    let ac: Complex64 = f
        .values()
        .iter()
        .zip(mu.density())
        .map(|(v, &w)| v * w)
        .sum::<Complex64>()
        / f.grid().n() as f64;
    let singular: Complex64 = mu
        .atoms()
        .iter()
        .map(|a| f.values()[a.index] * a.mass)
        .sum();
    Ok(ac + singular)
}
