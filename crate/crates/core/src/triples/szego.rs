use std::f64::consts::PI;

use num_complex::Complex64;

use super::measure::CircleMeasure;
use crate::error::{Error, Result};
use crate::grid_fourier::{eval_power_series, fourier_coeffs, FourierCoeffs, GridFunction, UnitGrid};
use crate::rational_hardy::{poly, RationalFn, Root};

/// Floor applied to the density before taking logarithms.
pub const LOG_FLOOR: f64 = 1e-300;

/// `mean(ln w)` below `-SZEGO_THRESHOLD` counts as divergent.
pub const SZEGO_THRESHOLD: f64 = 50.0;

/// Relative agreement required between the `n`, `2n`, `4n` refinements.
pub const REFINEMENT_TOL: f64 = 0.01;

/// Default Taylor truncation of the Szegő function.
pub const DEFAULT_TAYLOR: usize = 256;

/// Outcome of the Szegő test `∫ ln w dm > −∞`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SzegoCondition {
    pub holds: bool,
    /// `mean(ln max(w, LOG_FLOOR))` on the measure's grid.
    pub integral: f64,
    /// Midpoint-rule values of the integral on `n`, `2n`, `4n` points, when
    /// the density has a rational source.
    pub refinement: Option<[f64; 3]>,
}

pub fn szego_condition(mu: &CircleMeasure) -> SzegoCondition {
    szego_condition_with(mu, SZEGO_THRESHOLD)
}

pub fn szego_condition_with(mu: &CircleMeasure, threshold: f64) -> SzegoCondition {
    let integral = mu
        .density()
        .iter()
        .map(|&w| w.max(LOG_FLOOR).ln())
        .sum::<f64>()
        / mu.grid().n() as f64;
    // A zero of w on a grid point hits the floor; the midpoint rule never
    // samples the grid points themselves.
    let refinement = mu.density_source().map(|r| {
        let n = mu.grid().n();
        let mut out = [0.0; 3];
        for (slot, m) in out.iter_mut().zip([n, 2 * n, 4 * n]) {
            let sum: f64 = (0..m)
                .map(|j| {
                    let t = Complex64::from_polar(1.0, 2.0 * PI * (j as f64 + 0.5) / m as f64);
                    let w = r.eval(t).map(|v| v.re).unwrap_or(0.0);
                    w.max(LOG_FLOOR).ln()
                })
                .sum();
            *slot = sum / m as f64;
        }
        out
    });
    let converged = refinement.is_none_or(|v| {
        let scale = v[2].abs().max(1.0);
        (v[0] - v[2]).abs() <= REFINEMENT_TOL * scale && (v[1] - v[2]).abs() <= REFINEMENT_TOL * scale
    });
    let probe = refinement.map_or(integral, |v| v[2]);
    SzegoCondition {
        holds: integral > -threshold && probe > -threshold && converged,
        integral,
        refinement,
    }
}

/// The normalized outer function `D` with `|D̲|² = w`, `D(0) > 0`.
#[derive(Clone, Debug)]
pub struct SzegoFn {
    taylor: Vec<Complex64>,
    boundary: GridFunction,
    log_coeffs: FourierCoeffs,
    rational: Option<RationalFn>,
}

impl SzegoFn {
    /// Taylor coefficients `d_0..d_M`.
    pub fn taylor(&self) -> &[Complex64] {
        &self.taylor
    }

    pub fn d0(&self) -> f64 {
        self.taylor[0].re
    }

    /// Boundary samples `D̲(t_j)`.
    pub fn boundary(&self) -> &GridFunction {
        &self.boundary
    }

    /// Fourier coefficients of `ln w`.
    pub fn log_coeffs(&self) -> &FourierCoeffs {
        &self.log_coeffs
    }

    /// Closed form, available when the density has a rational source that
    /// stays positive on the circle.
    pub fn rational(&self) -> Option<&RationalFn> {
        self.rational.as_ref()
    }

    /// `D(ζ)` from the truncated Taylor series, `|ζ| < 1`.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if z.norm() >= 1.0 {
            return Err(Error::Domain(z));
        }
        Ok(poly::eval(&self.taylor, z))
    }
}

/// Szegő function with the default truncation.
pub fn szego_function_default(mu: &CircleMeasure) -> Result<SzegoFn> {
    szego_function(mu, DEFAULT_TAYLOR)
}

/// `D = exp(c_0/2 + Σ_{k≥1} c_k ζ^k)` with `c_k` the Fourier coefficients of
/// `ln w`, exponentiated as a power series to `M + 1` terms.
pub fn szego_function(mu: &CircleMeasure, m: usize) -> Result<SzegoFn> {
    let cond = mu.szego();
    if !cond.holds {
        return Err(Error::SzegoFails(cond.integral));
    }
    let grid = mu.grid();
    let n = grid.n();
    if m >= n {
        return Err(Error::Aliasing { kmax: m, n });
    }
    let log_w = GridFunction::new(
        grid.clone(),
        mu.density()
            .iter()
            .map(|&w| Complex64::new(w.max(LOG_FLOOR).ln(), 0.0))
            .collect(),
    )?;
    let kmax = m.min(n / 2 - 1);
    let log_coeffs = fourier_coeffs(&log_w, kmax)?;
    let mut g = vec![Complex64::new(0.0, 0.0); m + 1];
    g[0] = log_coeffs.get(0) / 2.0;
    for (k, gk) in g.iter_mut().enumerate().skip(1).take(kmax) {
        *gk = log_coeffs.get(k as i64);
    }
    let taylor = series_exp(&g);
    let boundary = eval_power_series(grid, &taylor)?;
    let rational = match mu.density_source() {
        Some(r) => rational_szego(r)?,
        None => None,
    };
    Ok(SzegoFn {
        taylor,
        boundary,
        log_coeffs,
        rational,
    })
}

/// Power-series exponential: `e_0 = exp(g_0)`, `n e_n = Σ_{k=1}^n k g_k e_{n−k}`.
fn series_exp(g: &[Complex64]) -> Vec<Complex64> {
    let mut e = vec![Complex64::new(0.0, 0.0); g.len()];
    e[0] = g[0].exp();
    for n in 1..g.len() {
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 1..=n {
            acc += g[k] * e[n - k] * k as f64;
        }
        e[n] = acc / n as f64;
    }
    e
}

/// Closed-form Szegő function of the density `w = Re R` on the circle.
///
/// `S = (R + R^)/2` is rational and equals `w` on the circle; its zeros and
/// poles come in pairs `a, 1/ā`, and `D` collects those outside the closed
/// disk. Returns `None` when `w` vanishes (numerically) somewhere on the circle.
pub fn rational_szego(r: &RationalFn) -> Result<Option<RationalFn>> {
    let s = r.add(&r.hat()?)?.scale(Complex64::new(0.5, 0.0));
    if s.is_zero() {
        return Ok(None);
    }
    let near_circle = |roots: &[Root]| roots.iter().any(|x| (x.value.norm() - 1.0).abs() < 1e-6);
    if near_circle(s.zeros()) || near_circle(s.poles()) {
        return Ok(None);
    }
    let outside = |roots: &[Root]| -> Vec<Root> {
        roots.iter().filter(|x| x.value.norm() > 1.0).copied().collect()
    };
    let num = poly::from_roots(&outside(s.zeros()));
    let den = poly::from_roots(&outside(s.poles()));
    let probe = UnitGrid::new(64)?;
    let mut ratio = 0.0;
    for &t in probe.points() {
        let d = poly::eval(&num, t) / poly::eval(&den, t);
        ratio += s.eval(t)?.re / d.norm_sqr();
    }
    ratio /= probe.n() as f64;
    if ratio <= 0.0 {
        return Ok(None);
    }
    let at_zero = num[0] / den[0];
    let scale = ratio.sqrt() * at_zero.conj() / at_zero.norm();
    Ok(Some(RationalFn::new(poly::scale(&num, scale), den)?))
}
