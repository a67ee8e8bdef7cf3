//! Rational functions on the Riemann sphere: evaluation, roots, the hat
//! involution `f^(z) = conj(f(1/conj z))`, finite Blaschke products and
//! inner-outer factorization of rational data.

mod blaschke;
pub mod poly;

pub use blaschke::{
    blaschke_quotient_of_unimodular, inner_outer_factor, BlaschkeProduct, FactorizationResult,
};
pub use poly::Root;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid_fourier::{GridFunction, UnitGrid};

/// Minimum distance from a pole at which evaluation is allowed.
pub const POLE_EPS: f64 = 1e-12;

/// Zeros and poles closer than this cancel.
pub const GCD_TOL: f64 = 1e-7;

/// Roots within this distance of the unit circle count as lying on it.
pub const CIRCLE_EPS: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `num/den` in lowest terms with a monic denominator.
#[derive(Clone, Debug)]
pub struct RationalFn {
    num: Vec<Complex64>,
    den: Vec<Complex64>,
    zeros: Vec<Root>,
    poles: Vec<Root>,
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl RationalFn {
    /// Builds `num/den`, cancelling common roots and making `den` monic.
    pub fn new(num: Vec<Complex64>, den: Vec<Complex64>) -> Result<Self> {
        if let Some(j) = num.iter().chain(&den).position(|c| !c.is_finite()) {
            return Err(Error::NonFinite(j));
        }
        let den = poly::trim(den);
        if den.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        let num = poly::trim(num);
        if num.is_empty() {
            return Ok(Self::zero());
        }
        let mut zeros = poly::roots(&num)?;
        let mut poles = poly::roots(&den)?;
        let mut cancelled = false;
        for z in zeros.iter_mut() {
            for p in poles.iter_mut() {
                if z.multiplicity == 0 {
                    break;
                }
                if p.multiplicity > 0 && (z.value - p.value).norm() <= GCD_TOL {
                    let k = z.multiplicity.min(p.multiplicity);
                    z.multiplicity -= k;
                    p.multiplicity -= k;
                    cancelled = true;
                }
            }
        }
        let (num, den) = if cancelled {
            zeros.retain(|r| r.multiplicity > 0);
            poles.retain(|r| r.multiplicity > 0);
            (
                poly::scale(&poly::from_roots(&zeros), *num.last().unwrap()),
                poly::scale(&poly::from_roots(&poles), *den.last().unwrap()),
            )
        } else {
            (num, den)
        };
        let lead = *den.last().unwrap();
        let num = poly::scale(&num, lead.inv());
        let mut den = poly::scale(&den, lead.inv());
        *den.last_mut().unwrap() = ONE;
        Ok(Self {
            num,
            den,
            zeros,
            poles,
        })
    }

    pub fn polynomial(p: Vec<Complex64>) -> Result<Self> {
        Self::new(p, vec![ONE])
    }

    pub fn constant(c: Complex64) -> Self {
        if c == ZERO {
            return Self::zero();
        }
        Self {
            num: vec![c],
            den: vec![ONE],
            zeros: Vec::new(),
            poles: Vec::new(),
        }
    }

    pub fn zero() -> Self {
        Self {
            num: Vec::new(),
            den: vec![ONE],
            zeros: Vec::new(),
            poles: Vec::new(),
        }
    }

    /// The identity function `z`.
    pub fn identity() -> Self {
        Self {
            num: vec![ZERO, ONE],
            den: vec![ONE],
            zeros: vec![Root {
                value: ZERO,
                multiplicity: 1,
            }],
            poles: Vec::new(),
        }
    }

    pub fn num(&self) -> &[Complex64] {
        &self.num
    }

    pub fn den(&self) -> &[Complex64] {
        &self.den
    }

    pub fn zeros(&self) -> &[Root] {
        &self.zeros
    }

    pub fn poles(&self) -> &[Root] {
        &self.poles
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Constant value if the function is constant.
    pub fn as_constant(&self) -> Option<Complex64> {
        match (self.num.len(), self.den.len()) {
            (0, _) => Some(ZERO),
            (1, 1) => Some(self.num[0]),
            _ => None,
        }
    }

    pub fn num_degree(&self) -> usize {
        self.num.len().saturating_sub(1)
    }

    pub fn den_degree(&self) -> usize {
        self.den.len() - 1
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        for p in &self.poles {
            let distance = (z - p.value).norm();
            if distance <= POLE_EPS {
                return Err(Error::PoleProximity {
                    pole: p.value,
                    distance,
                });
            }
        }
        Ok(poly::eval(&self.num, z) / poly::eval(&self.den, z))
    }

    /// Samples on the grid points.
    pub fn eval_grid(&self, grid: &UnitGrid) -> Result<GridFunction> {
        let values = grid
            .points()
            .iter()
            .map(|&t| self.eval(t))
            .collect::<Result<Vec<_>>>()?;
        GridFunction::new(grid.clone(), values)
    }

    /// Taylor coefficients at the origin, `len` of them.
    pub fn taylor(&self, len: usize) -> Result<Vec<Complex64>> {
        poly::series_div(&self.num, &self.den, len)
    }

    /// `f^(z) = conj(f(1/conj z))`.
    pub fn hat(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let a = self.num_degree();
        let b = self.den_degree();
        let p = poly::reversed_conj(&self.num);
        let q = poly::reversed_conj(&self.den);
        if b >= a {
            Self::new(poly::shift_up(&p, b - a), q)
        } else {
            Self::new(p, poly::shift_up(&q, a - b))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Self::new(
            poly::add(
                &poly::mul(&self.num, &other.den),
                &poly::mul(&other.num, &self.den),
            ),
            poly::mul(&self.den, &other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-ONE))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Self::new(
            poly::mul(&self.num, &other.num),
            poly::mul(&self.den, &other.den),
        )
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Self::new(
            poly::mul(&self.num, &other.den),
            poly::mul(&self.den, &other.num),
        )
    }

    pub fn scale(&self, s: Complex64) -> Self {
        if s == ZERO || self.is_zero() {
            return Self::zero();
        }
        Self {
            num: poly::scale(&self.num, s),
            ..self.clone()
        }
    }

    /// `z·f(z)`.
    pub fn mul_z(&self) -> Result<Self> {
        self.mul(&Self::identity())
    }

    /// Zero of smallest modulus, if any.
    pub fn min_zero_modulus(&self) -> Option<f64> {
        self.zeros
            .iter()
            .map(|r| r.value.norm())
            .min_by(f64::total_cmp)
    }

    /// Pole of smallest modulus, if any.
    pub fn min_pole_modulus(&self) -> Option<f64> {
        self.poles
            .iter()
            .map(|r| r.value.norm())
            .min_by(f64::total_cmp)
    }
}

/// A rational function viewed on the exterior `𝔼 = {|z| > 1} ∪ {∞}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExteriorRestriction {
    f: RationalFn,
}

impl ExteriorRestriction {
    pub fn function(&self) -> &RationalFn {
        &self.f
    }

    /// Value at `z` with `|z| > 1`; `None` stands for the point at infinity.
    pub fn eval(&self, z: Option<Complex64>) -> Result<Complex64> {
        match z {
            Some(z) if z.norm() <= 1.0 => Err(Error::Domain(z)),
            Some(z) => self.f.eval(z),
            None => {
                let a = self.f.num_degree();
                let b = self.f.den_degree();
                if self.f.is_zero() || a < b {
                    Ok(ZERO)
                } else if a == b {
                    Ok(*self.f.num.last().unwrap())
                } else {
                    Err(Error::PoleProximity {
                        pole: Complex64::new(f64::INFINITY, 0.0),
                        distance: 0.0,
                    })
                }
            }
        }
    }

    /// Largest gap between the radial limits at `r = 1 − eps` and `r = 1 + eps`.
    pub fn boundary_mismatch(&self, grid: &UnitGrid, eps: f64) -> Result<f64> {
        let mut worst: f64 = 0.0;
        for &t in grid.points() {
            let inside = self.f.eval(t * (1.0 - eps))?;
            let outside = self.eval(Some(t * (1.0 + eps)))?;
            worst = worst.max((inside - outside).norm());
        }
        Ok(worst)
    }
}

/// The pseudocontinuation of a rational function: the same expression on 𝔼.
pub fn pseudocontinuation_rational(f: &RationalFn) -> Result<ExteriorRestriction> {
    if let Some(p) = f
        .poles
        .iter()
        .find(|p| (p.value.norm() - 1.0).abs() <= CIRCLE_EPS)
    {
        return Err(Error::PoleOnCircle(p.value));
    }
    Ok(ExteriorRestriction { f: f.clone() })
}
