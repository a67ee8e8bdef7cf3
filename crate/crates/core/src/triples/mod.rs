//! Schur functions `Θ`, normalized Carathéodory functions `Φ` and probability
//! measures `μ` on the circle, linked by
//!
//! ```text
//! Φ(ζ) = (1 + ζΘ(ζ))/(1 − ζΘ(ζ)) = ∫ (t + ζ)/(t − ζ) μ(dt),
//! ```
//!
//! together with the Szegő condition and the Szegő function of `μ`.

mod measure;
mod szego;

pub use measure::{cross_gram, gram, identity_deviation, inner, norm, Atom, CircleMeasure, L2Fn, DENSITY_FLOOR, MASS_TOL};
pub use szego::{
    rational_szego, szego_condition, szego_condition_with, szego_function,
    szego_function_default, SzegoCondition, SzegoFn, DEFAULT_TAYLOR, LOG_FLOOR, SZEGO_THRESHOLD,
};

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid_fourier::{eval_power_series, fourier_coeffs, integrate_measure, GridFunction, UnitGrid, SNAP_TOL};
use crate::rational_hardy::{poly, RationalFn};

/// Slack on `|Θ| ≤ 1`.
pub const SCHUR_TOL: f64 = 1e-9;

/// Tolerance on `Φ(0) = 1`.
pub const NORMALIZATION_TOL: f64 = 1e-10;

/// Poles of `Φ` this close to the circle are read as atoms.
pub const ATOM_POLE_EPS: f64 = 1e-9;

/// `|1 − tΘ̲(t)|` below this marks an atom of a Taylor-represented `Θ`.
pub const ATOM_DETECT: f64 = 1e-8;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Radii `{0.3, 0.6, 0.9}` times 64 equispaced angles.
pub fn test_lattice() -> Vec<Complex64> {
    [0.3, 0.6, 0.9]
        .iter()
        .flat_map(|&r| (0..64).map(move |j| Complex64::from_polar(r, 2.0 * PI * j as f64 / 64.0)))
        .collect()
}

/// A function in the Schur class.
#[derive(Clone, Debug, PartialEq)]
pub enum SchurFn {
    Rational(RationalFn),
    Constant(Complex64),
    /// Taylor coefficients at the origin, assumed to converge on the closed disk.
    Taylor(Vec<Complex64>),
}

impl SchurFn {
    pub fn rational(r: RationalFn) -> Result<Self> {
        let f = SchurFn::Rational(r);
        f.validate()?;
        Ok(f)
    }

    pub fn constant(c: Complex64) -> Result<Self> {
        let f = SchurFn::Constant(c);
        f.validate()?;
        Ok(f)
    }

    pub fn taylor(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        let f = SchurFn::Taylor(coeffs);
        f.validate()?;
        Ok(f)
    }

    /// Checks `|Θ| ≤ 1 + SCHUR_TOL` on the test lattice and, for rational
    /// data, analyticity on the closed disk and the bound on the circle.
    pub fn validate(&self) -> Result<()> {
        if let SchurFn::Rational(r) = self {
            if let Some(p) = r.poles().iter().find(|p| p.value.norm() <= 1.0 + ATOM_POLE_EPS) {
                return Err(Error::PoleInClosedDisk(p.value));
            }
            let grid = UnitGrid::new(1024)?;
            for (&t, v) in grid.points().iter().zip(r.eval_grid(&grid)?.values()) {
                if v.norm() > 1.0 + SCHUR_TOL {
                    return Err(Error::NotSchur {
                        modulus: v.norm(),
                        at: t,
                    });
                }
            }
        }
        for z in test_lattice() {
            let v = self.eval(z)?;
            if v.norm() > 1.0 + SCHUR_TOL {
                return Err(Error::NotSchur {
                    modulus: v.norm(),
                    at: z,
                });
            }
        }
        Ok(())
    }

    /// `Θ(z)` for `|z| ≤ 1`.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if z.norm() > 1.0 + 1e-12 {
            return Err(Error::Domain(z));
        }
        match self {
            SchurFn::Rational(r) => r.eval(z),
            SchurFn::Constant(c) => Ok(*c),
            SchurFn::Taylor(a) => Ok(poly::eval(a, z)),
        }
    }

    /// Boundary samples `Θ̲(t_j)`.
    pub fn boundary(&self, grid: &UnitGrid) -> Result<GridFunction> {
        match self {
            SchurFn::Rational(r) => r.eval_grid(grid),
            SchurFn::Constant(c) => Ok(GridFunction::constant(grid, *c)),
            SchurFn::Taylor(a) => eval_power_series(grid, a),
        }
    }

    /// Rational form, for the rational and constant representations.
    pub fn as_rational(&self) -> Option<RationalFn> {
        match self {
            SchurFn::Rational(r) => Some(r.clone()),
            SchurFn::Constant(c) => Some(RationalFn::constant(*c)),
            SchurFn::Taylor(_) => None,
        }
    }

    /// First `len` Taylor coefficients.
    pub fn taylor_coeffs(&self, len: usize) -> Result<Vec<Complex64>> {
        match self {
            SchurFn::Rational(r) => r.taylor(len),
            SchurFn::Constant(c) => {
                let mut v = vec![ZERO; len];
                if len > 0 {
                    v[0] = *c;
                }
                Ok(v)
            }
            SchurFn::Taylor(a) => {
                let mut v = a.clone();
                v.resize(len, ZERO);
                Ok(v)
            }
        }
    }

    /// Inner (unimodular boundary values) up to `1 − 1e−6` everywhere on the grid.
    pub fn is_inner(&self, grid: &UnitGrid) -> Result<bool> {
        let b = self.boundary(grid)?;
        let min = b.values().iter().map(|v| v.norm()).fold(f64::INFINITY, f64::min);
        Ok(min >= 1.0 - 1e-6)
    }
}

/// A normalized Carathéodory function.
#[derive(Clone, Debug)]
pub enum CaratheodoryFn {
    Rational(RationalFn),
    Constant(Complex64),
    Taylor(Vec<Complex64>),
    /// Riesz-Herglotz integral of a measure, evaluated by quadrature.
    Herglotz(CircleMeasure),
}

impl CaratheodoryFn {
    pub fn rational(r: RationalFn) -> Result<Self> {
        let f = CaratheodoryFn::Rational(r);
        f.validate()?;
        Ok(f)
    }

    /// Checks `Φ(0) = 1` and `Re Φ ≥ −1e−9` on the test lattice.
    pub fn validate(&self) -> Result<()> {
        let at_zero = self.eval(ZERO)?;
        if (at_zero - ONE).norm() > NORMALIZATION_TOL {
            return Err(Error::Normalization(at_zero));
        }
        for z in test_lattice() {
            let v = self.eval(z)?;
            if v.re < -SCHUR_TOL {
                return Err(Error::NotCaratheodory(format!("Re Φ({z}) = {}", v.re)));
            }
        }
        Ok(())
    }

    /// `Φ(z)` for `|z| < 1` (rational and Taylor forms also accept the circle).
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        match self {
            CaratheodoryFn::Rational(r) => r.eval(z),
            CaratheodoryFn::Constant(c) => Ok(*c),
            CaratheodoryFn::Taylor(a) => {
                if z.norm() > 1.0 + 1e-12 {
                    return Err(Error::Domain(z));
                }
                Ok(poly::eval(a, z))
            }
            CaratheodoryFn::Herglotz(mu) => {
                if z.norm() >= 1.0 {
                    return Err(Error::Domain(z));
                }
                let kernel = GridFunction::from_fn(mu.grid(), |t| (t + z) / (t - z))?;
                integrate_measure(&kernel, mu)
            }
        }
    }

    /// First `len` Taylor coefficients. For the Herglotz form these are
    /// `1, 2c_1, 2c_2, …` with `c_k` the moments, so `len ≤ n/2`.
    pub fn taylor_coeffs(&self, len: usize) -> Result<Vec<Complex64>> {
        match self {
            CaratheodoryFn::Rational(r) => r.taylor(len),
            CaratheodoryFn::Constant(c) => {
                let mut v = vec![ZERO; len];
                if len > 0 {
                    v[0] = *c;
                }
                Ok(v)
            }
            CaratheodoryFn::Taylor(a) => {
                let mut v = a.clone();
                v.resize(len, ZERO);
                Ok(v)
            }
            CaratheodoryFn::Herglotz(mu) => {
                if len == 0 {
                    return Ok(Vec::new());
                }
                let c = measure_moments(mu, len - 1)?;
                Ok(c.iter()
                    .enumerate()
                    .map(|(k, &ck)| if k == 0 { ck } else { ck * 2.0 })
                    .collect())
            }
        }
    }
}

/// `c_k = ∫ t^{−k} μ(dt)` for `k = 0..=kmax`.
pub fn measure_moments(mu: &CircleMeasure, kmax: usize) -> Result<Vec<Complex64>> {
    let fc = fourier_coeffs(&mu.density_function(), kmax)?;
    let t = mu.grid().points();
    Ok((0..=kmax)
        .map(|k| {
            let atoms: Complex64 = mu
                .atoms()
                .iter()
                .map(|a| t[a.index].conj().powu(k as u32) * a.mass)
                .sum();
            fc.get(k as i64) + atoms
        })
        .collect())
}

/// `Φ = (1 + ζΘ)/(1 − ζΘ)`.
pub fn schur_to_caratheodory(theta: &SchurFn) -> Result<CaratheodoryFn> {
    match theta {
        SchurFn::Taylor(a) => {
            let mut z_theta = vec![ZERO];
            z_theta.extend_from_slice(a);
            let num = poly::add(&[ONE], &z_theta);
            let den = poly::sub(&[ONE], &z_theta);
            Ok(CaratheodoryFn::Taylor(poly::series_div(&num, &den, z_theta.len())?))
        }
        _ => {
            let r = theta.as_rational().expect("rational or constant");
            let p = r.num();
            let q = r.den();
            let zp = poly::shift_up(p, 1);
            let phi = RationalFn::new(poly::add(q, &zp), poly::sub(q, &zp))?;
            if let Some(pole) = phi.poles().iter().find(|x| x.value.norm() < 1.0 - SCHUR_TOL) {
                return Err(Error::NotSchur {
                    modulus: 1.0,
                    at: pole.value,
                });
            }
            Ok(CaratheodoryFn::Rational(phi))
        }
    }
}

/// `Θ = (Φ − 1)/(ζ(Φ + 1))`, the removable singularity at 0 divided out.
pub fn caratheodory_to_schur(phi: &CaratheodoryFn) -> Result<SchurFn> {
    let at_zero = phi.eval(ZERO)?;
    if (at_zero - ONE).norm() > NORMALIZATION_TOL {
        return Err(Error::Normalization(at_zero));
    }
    match phi {
        CaratheodoryFn::Constant(_) => Ok(SchurFn::Constant(ZERO)),
        CaratheodoryFn::Rational(r) => {
            let p = r.num();
            let q = r.den();
            let diff = poly::sub(p, q);
            // (P − Q)(0) = 0 up to rounding; divide by ζ exactly
            let num = if diff.len() > 1 { diff[1..].to_vec() } else { Vec::new() };
            let theta = RationalFn::new(num, poly::add(p, q))?;
            Ok(match theta.as_constant() {
                Some(c) => SchurFn::Constant(c),
                None => SchurFn::Rational(theta),
            })
        }
        CaratheodoryFn::Taylor(a) => Ok(SchurFn::Taylor(taylor_schur_from_phi(a)?)),
        CaratheodoryFn::Herglotz(mu) => {
            let a = phi.taylor_coeffs(mu.grid().n() / 2)?;
            Ok(SchurFn::Taylor(taylor_schur_from_phi(&a)?))
        }
    }
}

fn taylor_schur_from_phi(phi: &[Complex64]) -> Result<Vec<Complex64>> {
    let num = poly::sub(phi, &[ONE]);
    let den = poly::add(phi, &[ONE]);
    let z_theta = poly::series_div(&num, &den, phi.len())?;
    Ok(z_theta.into_iter().skip(1).collect())
}

/// The Riesz-Herglotz transform `Φ(ζ) = ∫ (t + ζ)/(t − ζ) μ(dt)`.
pub fn measure_to_caratheodory(mu: &CircleMeasure) -> CaratheodoryFn {
    CaratheodoryFn::Herglotz(mu.clone())
}

/// The measure of a Carathéodory function: `w = Re Φ̲`, atoms at the simple
/// poles of a rational `Φ` on the circle.
pub fn caratheodory_to_measure(phi: &CaratheodoryFn, grid: &UnitGrid) -> Result<CircleMeasure> {
    match phi {
        CaratheodoryFn::Constant(c) => {
            if (c - ONE).norm() > NORMALIZATION_TOL {
                return Err(Error::Normalization(*c));
            }
            Ok(CircleMeasure::lebesgue(grid))
        }
        CaratheodoryFn::Rational(r) => rational_caratheodory_to_measure(r, grid),
        CaratheodoryFn::Taylor(_) => schur_to_measure(&caratheodory_to_schur(phi)?, grid),
        CaratheodoryFn::Herglotz(mu) => {
            if mu.grid().n() == grid.n() {
                Ok(mu.clone())
            } else {
                mu.resample(grid)
            }
        }
    }
}

fn rational_caratheodory_to_measure(r: &RationalFn, grid: &UnitGrid) -> Result<CircleMeasure> {
    if let Some(p) = r
        .poles()
        .iter()
        .find(|p| p.value.norm() < 1.0 - ATOM_POLE_EPS)
    {
        return Err(Error::NotCaratheodory(format!("pole {} inside the disk", p.value)));
    }
    let mut regular = r.clone();
    let mut atoms = Vec::new();
    for pole in r.poles() {
        if (pole.value.norm() - 1.0).abs() > ATOM_POLE_EPS {
            continue;
        }
        let t0 = pole.value / pole.value.norm();
        if pole.multiplicity > 1 {
            return Err(Error::NonSimplePole {
                at: t0,
                order: pole.multiplicity,
            });
        }
        // Q = (ζ − t0)·Q1; mass = lim (t0 − ζ)Φ(ζ)/(2 t0) = −P(t0)/(2 t0 Q1(t0))
        let q1: Vec<Complex64> = r
            .poles()
            .iter()
            .filter(|x| x.value != pole.value)
            .fold(vec![ONE], |acc, x| {
                let mut p = acc;
                for _ in 0..x.multiplicity {
                    p = poly::mul(&p, &[-x.value, ONE]);
                }
                p
            });
        let mass = -poly::eval(r.num(), pole.value) / (poly::eval(&q1, pole.value) * pole.value * 2.0);
        if mass.re <= 0.0 || mass.im.abs() > 1e-8 * mass.norm().max(1.0) {
            return Err(Error::NotCaratheodory(format!("residue mass {mass} at {t0}")));
        }
        let index = grid.snap_point(t0, SNAP_TOL)?;
        atoms.push(Atom {
            index,
            mass: mass.re,
        });
        // subtract mass·(t0 + ζ)/(t0 − ζ)
        let kernel = RationalFn::new(vec![t0 * mass.re, Complex64::new(mass.re, 0.0)], vec![t0, -ONE])?;
        regular = regular.sub(&kernel)?;
    }
    if let Some(p) = regular
        .poles()
        .iter()
        .find(|p| p.value.norm() <= 1.0 + ATOM_POLE_EPS)
    {
        return Err(Error::NotCaratheodory(format!(
            "pole {} on the circle survives regularization",
            p.value
        )));
    }
    let w = regular.eval_grid(grid)?;
    if let Some(v) = w.values().iter().find(|v| v.re < -SCHUR_TOL) {
        return Err(Error::NotCaratheodory(format!("Re Φ = {} on the circle", v.re)));
    }
    CircleMeasure::from_re_rational(grid, regular, atoms)
}

/// The measure of a Schur function, via `Φ` for rational data and via
/// `w = (1 − |Θ̲|²)/|1 − tΘ̲|²` for Taylor data, with atoms where
/// `tΘ̲(t) = 1` carrying mass `1/(t (ζΘ)'(t))`.
pub fn schur_to_measure(theta: &SchurFn, grid: &UnitGrid) -> Result<CircleMeasure> {
    let a = match theta {
        SchurFn::Taylor(a) => a,
        _ => return caratheodory_to_measure(&schur_to_caratheodory(theta)?, grid),
    };
    let boundary = theta.boundary(grid)?;
    let t = grid.points();
    let n = grid.n();
    let mut density = vec![0.0; n];
    let mut atom_idx = Vec::new();
    for j in 0..n {
        let th = boundary.values()[j];
        let u = ONE - t[j] * th;
        if u.norm() < ATOM_DETECT {
            atom_idx.push(j);
            continue;
        }
        density[j] = (1.0 - th.norm_sqr()) / u.norm_sqr();
        if density[j] < -SCHUR_TOL {
            return Err(Error::NotSchur {
                modulus: th.norm(),
                at: t[j],
            });
        }
    }
    // (ζΘ)' = Θ + ζΘ'
    let mut z_theta = vec![ZERO];
    z_theta.extend_from_slice(a);
    let deriv = poly::derivative(&z_theta);
    let mut atoms = Vec::new();
    for &j in &atom_idx {
        let mass = (t[j] * poly::eval(&deriv, t[j])).inv();
        if mass.re <= 0.0 {
            return Err(Error::NotSchur {
                modulus: 1.0,
                at: t[j],
            });
        }
        atoms.push(Atom { index: j, mass: mass.re });
    }
    // w is smooth through a simple atom; fill the removable point by
    // fourth-order interpolation from two neighbours on each side
    for &j in &atom_idx {
        let at = |k: isize| density[(j as isize + k).rem_euclid(n as isize) as usize];
        density[j] = (4.0 * (at(-1) + at(1)) - at(-2) - at(2)) / 6.0;
    }
    CircleMeasure::new(grid, density, atoms)
}

/// `max |(1 − |Θ̲|²) − 4 Re Φ̲/|Φ̲ + 1|²|` over grid points where `Φ` is finite.
pub fn boundary_identity_check(theta: &SchurFn, phi: &CaratheodoryFn, grid: &UnitGrid) -> Result<f64> {
    let th = theta.boundary(grid)?;
    let mut worst: f64 = 0.0;
    for (j, &t) in grid.points().iter().enumerate() {
        let ph = match phi {
            CaratheodoryFn::Herglotz(_) => {
                return Err(Error::Unsupported(
                    "boundary values of a sampled Herglotz integral".into(),
                ))
            }
            _ => match phi.eval(t) {
                Ok(v) => v,
                Err(Error::PoleProximity { .. }) => continue,
                Err(e) => return Err(e),
            },
        };
        let lhs = 1.0 - th.values()[j].norm_sqr();
        let rhs = 4.0 * ph.re / (ph + ONE).norm_sqr();
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn rat(num: &[f64], den: &[f64]) -> RationalFn {
        RationalFn::new(
            num.iter().map(|&x| r(x)).collect(),
            den.iter().map(|&x| r(x)).collect(),
        )
        .unwrap()
    }

    fn close(a: &RationalFn, b: &RationalFn, tol: f64) -> bool {
        test_lattice()
            .into_iter()
            .all(|z| (a.eval(z).unwrap() - b.eval(z).unwrap()).norm() < tol)
    }

    #[test]
    fn schur_to_caratheodory_examples() {
        let phi = schur_to_caratheodory(&SchurFn::Constant(ZERO)).unwrap();
        assert!((phi.eval(r(0.4)).unwrap() - 1.0).norm() < 1e-15);
        let phi = schur_to_caratheodory(&SchurFn::Constant(r(0.5))).unwrap();
        assert!((phi.eval(r(0.5)).unwrap() - 5.0 / 3.0).norm() < 1e-14);
        let theta = SchurFn::rational(rat(&[0.0, 0.5], &[1.0])).unwrap();
        let CaratheodoryFn::Rational(phi) = schur_to_caratheodory(&theta).unwrap() else {
            panic!()
        };
        assert!(close(&phi, &rat(&[1.0, 0.0, 0.5], &[1.0, 0.0, -0.5]), 1e-14));
    }

    #[test]
    fn caratheodory_to_schur_examples() {
        let th = caratheodory_to_schur(&CaratheodoryFn::Constant(ONE)).unwrap();
        assert_eq!(th, SchurFn::Constant(ZERO));
        let th = caratheodory_to_schur(&CaratheodoryFn::Rational(rat(&[1.0, 1.0], &[1.0, -1.0]))).unwrap();
        assert!((th.eval(r(0.3)).unwrap() - 1.0).norm() < 1e-14);
        let th = caratheodory_to_schur(&CaratheodoryFn::Rational(rat(&[1.0, 0.5], &[1.0, -0.5]))).unwrap();
        assert!((th.eval(r(-0.7)).unwrap() - 0.5).norm() < 1e-14);
        assert!(matches!(
            caratheodory_to_schur(&CaratheodoryFn::Constant(r(2.0))),
            Err(Error::Normalization(_))
        ));
    }

    #[test]
    fn herglotz_examples() {
        let g = UnitGrid::new(512).unwrap();
        let m = measure_to_caratheodory(&CircleMeasure::lebesgue(&g));
        assert!((m.eval(Complex64::new(0.3, 0.4)).unwrap() - 1.0).norm() < 1e-13);
        let d = measure_to_caratheodory(&CircleMeasure::dirac(&g, 0).unwrap());
        let z = Complex64::new(0.2, -0.5);
        assert!((d.eval(z).unwrap() - (1.0 + z) / (1.0 - z)).norm() < 1e-13);
        let mix = CircleMeasure::new(&g, vec![0.5; 512], vec![Atom { index: 256, mass: 0.5 }]).unwrap();
        let h = measure_to_caratheodory(&mix);
        assert!((h.eval(z).unwrap() - (0.5 + 0.5 * (1.0 - z) / (1.0 + z))).norm() < 1e-13);
        assert!(matches!(h.eval(r(1.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn caratheodory_to_measure_examples() {
        let g = UnitGrid::new(256).unwrap();
        let mu = caratheodory_to_measure(&CaratheodoryFn::Constant(ONE), &g).unwrap();
        assert!(mu.atoms().is_empty() && mu.density().iter().all(|&w| (w - 1.0).abs() < 1e-15));

        let mu = caratheodory_to_measure(&CaratheodoryFn::Rational(rat(&[1.0, 1.0], &[1.0, -1.0])), &g).unwrap();
        assert_eq!(mu.atoms().len(), 1);
        assert_eq!(mu.atoms()[0].index, 0);
        assert!((mu.atoms()[0].mass - 1.0).abs() < 1e-14);
        assert!(mu.density().iter().all(|w| w.abs() < 1e-14));

        let mu = caratheodory_to_measure(&CaratheodoryFn::Rational(rat(&[1.0, 0.5], &[1.0, -0.5])), &g).unwrap();
        assert!(mu.atoms().is_empty());
        for (&t, &w) in g.points().iter().zip(mu.density()) {
            assert!((w - 0.75 / (1.0 - t / 2.0).norm_sqr()).abs() < 1e-14);
        }
    }

    #[test]
    fn double_pole_is_rejected() {
        let g = UnitGrid::new(64).unwrap();
        let phi = CaratheodoryFn::Rational(rat(&[1.0], &[1.0, -2.0, 1.0]));
        assert!(matches!(
            caratheodory_to_measure(&phi, &g),
            Err(Error::NonSimplePole { order: 2, .. })
        ));
    }

    #[test]
    fn boundary_identity_examples() {
        let g = UnitGrid::new(256).unwrap();
        let z = SchurFn::Constant(ZERO);
        let dev = boundary_identity_check(&z, &schur_to_caratheodory(&z).unwrap(), &g).unwrap();
        assert!(dev < 1e-15);
        let h = SchurFn::Constant(r(0.5));
        let dev = boundary_identity_check(&h, &schur_to_caratheodory(&h).unwrap(), &g).unwrap();
        assert!(dev < 1e-10);
        let one = SchurFn::Constant(ONE);
        let dev = boundary_identity_check(&one, &schur_to_caratheodory(&one).unwrap(), &g).unwrap();
        assert!(dev < 1e-10);
    }

    #[test]
    fn exponential_taylor_measure() {
        // Θ = exp(ζ − 1): atom at t = 1 of mass 1/2
        let g = UnitGrid::new(1024).unwrap();
        let mut a = vec![ZERO; 64];
        let mut fact = 1.0;
        for (k, c) in a.iter_mut().enumerate() {
            if k > 0 {
                fact *= k as f64;
            }
            *c = r((-1.0f64).exp() / fact);
        }
        let theta = SchurFn::taylor(a).unwrap();
        let mu = schur_to_measure(&theta, &g).unwrap();
        assert_eq!(mu.atoms().len(), 1);
        assert_eq!(mu.atoms()[0].index, 0);
        assert!((mu.atoms()[0].mass - 0.5).abs() < 1e-12);
        assert!((mu.density()[0] - 0.25).abs() < 1e-4);
    }

    #[test]
    fn rejects_non_schur() {
        assert!(matches!(
            SchurFn::rational(rat(&[0.0, 1.5], &[1.0])),
            Err(Error::NotSchur { .. })
        ));
        assert!(matches!(
            SchurFn::rational(rat(&[0.1], &[1.0, -2.0])),
            Err(Error::PoleInClosedDisk(_))
        ));
    }
}
