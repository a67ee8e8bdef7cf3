use num_complex::Complex64;

use super::poly::{self, Root};
use super::RationalFn;
use crate::error::{Error, Result};
use crate::grid_fourier::UnitGrid;

/// Zeros this close to the circle make the factorization degenerate.
pub const BOUNDARY_ZERO_EPS: f64 = 1e-9;

/// Tolerance on `|R| = 1` for [`blaschke_quotient_of_unimodular`].
pub const UNIMODULAR_TOL: f64 = 1e-8;

const CHECK_GRID: usize = 256;
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `c · Π ((z − a)/(1 − ā z))^m` with `|c| = 1` and zeros in the open disk.
#[derive(Clone, Debug, PartialEq)]
pub struct BlaschkeProduct {
    constant: Complex64,
    zeros: Vec<Root>,
}

impl BlaschkeProduct {
    pub fn new(constant: Complex64, zeros: Vec<Root>) -> Result<Self> {
        if (constant.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::NotUnimodular((constant.norm() - 1.0).abs()));
        }
        if let Some(r) = zeros.iter().find(|r| r.value.norm() >= 1.0 - 1e-12) {
            return Err(Error::Domain(r.value));
        }
        let zeros = zeros.into_iter().filter(|r| r.multiplicity > 0).collect();
        Ok(Self { constant, zeros })
    }

    pub fn one() -> Self {
        Self {
            constant: ONE,
            zeros: Vec::new(),
        }
    }

    /// `z^k`.
    pub fn monomial(k: usize) -> Self {
        let zeros = if k == 0 {
            Vec::new()
        } else {
            vec![Root {
                value: Complex64::new(0.0, 0.0),
                multiplicity: k,
            }]
        };
        Self {
            constant: ONE,
            zeros,
        }
    }

    pub fn constant(&self) -> Complex64 {
        self.constant
    }

    pub fn zeros(&self) -> &[Root] {
        &self.zeros
    }

    pub fn degree(&self) -> usize {
        self.zeros.iter().map(|r| r.multiplicity).sum()
    }

    /// Multiplicity of the zero at the origin.
    pub fn order_at_origin(&self) -> usize {
        self.zeros
            .iter()
            .filter(|r| r.value.norm() == 0.0)
            .map(|r| r.multiplicity)
            .sum()
    }

    pub fn with_constant(&self, constant: Complex64) -> Result<Self> {
        Self::new(constant, self.zeros.clone())
    }

    /// Product with `z^k`.
    pub fn times_monomial(&self, k: usize) -> Self {
        let mut zeros = self.zeros.clone();
        if k > 0 {
            match zeros.iter_mut().find(|r| r.value.norm() == 0.0) {
                Some(r) => r.multiplicity += k,
                None => zeros.push(Root {
                    value: Complex64::new(0.0, 0.0),
                    multiplicity: k,
                }),
            }
        }
        Self {
            constant: self.constant,
            zeros,
        }
    }

    /// Removes `z^k` from the product; `None` if the origin is not a zero of order `k`.
    pub fn divide_monomial(&self, k: usize) -> Option<Self> {
        if self.order_at_origin() < k {
            return None;
        }
        let mut zeros = self.zeros.clone();
        if let Some(r) = zeros.iter_mut().find(|r| r.value.norm() == 0.0) {
            r.multiplicity -= k;
        }
        zeros.retain(|r| r.multiplicity > 0);
        Some(Self {
            constant: self.constant,
            zeros,
        })
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.zeros.iter().fold(self.constant, |acc, r| {
            let a = r.value;
            acc * ((z - a) / (ONE - a.conj() * z)).powi(r.multiplicity as i32)
        })
    }

    pub fn to_rational(&self) -> Result<RationalFn> {
        let mut den = vec![ONE];
        for r in &self.zeros {
            for _ in 0..r.multiplicity {
                den = poly::mul(&den, &[ONE, -r.value.conj()]);
            }
        }
        RationalFn::new(
            poly::scale(&poly::from_roots(&self.zeros), self.constant),
            den,
        )
    }
}

/// Inner-outer split `h = inner · outer` of a rational function.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorizationResult {
    pub inner: BlaschkeProduct,
    pub outer: RationalFn,
}

/// Smirnov factorization of rational `h`: Blaschke product over the zeros in
/// the disk and a zero-free outer factor, normalized so `outer(0) > 0`.
pub fn inner_outer_factor(h: &RationalFn) -> Result<FactorizationResult> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if let Some(p) = h.poles().iter().find(|p| p.value.norm() <= 1.0 + 1e-12) {
        return Err(Error::PoleInClosedDisk(p.value));
    }
    if let Some(z) = h
        .zeros()
        .iter()
        .find(|z| (z.value.norm() - 1.0).abs() <= BOUNDARY_ZERO_EPS)
    {
        return Err(Error::ZeroOnCircle(z.value));
    }
    let (inside, outside): (Vec<Root>, Vec<Root>) =
        h.zeros().iter().partition(|z| z.value.norm() < 1.0);
    let lead = *h.num().last().unwrap();
    // h = lead · Π_out (z − r) · Π_in (z − a) / den, and
    // Π_in (z − a) = Π_in (1 − ā z) · blaschke
    let mut num = poly::scale(&poly::from_roots(&outside), lead);
    for a in &inside {
        for _ in 0..a.multiplicity {
            num = poly::mul(&num, &[ONE, -a.value.conj()]);
        }
    }
    let at_zero = num[0] / h.den()[0];
    let phase = at_zero / at_zero.norm();
    let outer = RationalFn::new(poly::scale(&num, phase.inv()), h.den().to_vec())?;
    let inner = BlaschkeProduct::new(phase, inside)?;
    Ok(FactorizationResult { inner, outer })
}

/// Splits a unimodular rational `R` as `I₂/I₁` with finite Blaschke products:
/// zeros of `R` in the disk go to `I₂`, poles in the disk to `I₁`, and the
/// unimodular constant is carried by `I₂`.
pub fn blaschke_quotient_of_unimodular(
    r: &RationalFn,
) -> Result<(BlaschkeProduct, BlaschkeProduct)> {
    if let Some(z) = r
        .zeros()
        .iter()
        .find(|z| (z.value.norm() - 1.0).abs() <= BOUNDARY_ZERO_EPS)
    {
        return Err(Error::ZeroOnCircle(z.value));
    }
    if let Some(p) = r
        .poles()
        .iter()
        .find(|p| (p.value.norm() - 1.0).abs() <= BOUNDARY_ZERO_EPS)
    {
        return Err(Error::PoleOnCircle(p.value));
    }
    let grid = UnitGrid::new(CHECK_GRID)?;
    let samples = r.eval_grid(&grid)?;
    let deviation = samples
        .values()
        .iter()
        .map(|v| (v.norm() - 1.0).abs())
        .fold(0.0, f64::max);
    if deviation > UNIMODULAR_TOL {
        return Err(Error::NotUnimodular(deviation));
    }
    let i2_zeros: Vec<Root> = r
        .zeros()
        .iter()
        .filter(|z| z.value.norm() < 1.0)
        .copied()
        .collect();
    let i1_zeros: Vec<Root> = r
        .poles()
        .iter()
        .filter(|p| p.value.norm() < 1.0)
        .copied()
        .collect();
    let i1 = BlaschkeProduct::new(ONE, i1_zeros)?;
    let i2 = BlaschkeProduct::new(ONE, i2_zeros)?;
    let sum: Complex64 = grid
        .points()
        .iter()
        .zip(samples.values())
        .map(|(&t, &v)| v * i1.eval(t) / i2.eval(t))
        .sum();
    let c = sum / sum.norm();
    let i2 = i2.with_constant(c)?;
    let mismatch = grid
        .points()
        .iter()
        .zip(samples.values())
        .map(|(&t, &v)| (i2.eval(t) / i1.eval(t) - v).norm())
        .fold(0.0, f64::max);
    if mismatch > UNIMODULAR_TOL {
        return Err(Error::NotUnimodular(mismatch));
    }
    Ok((i1, i2))
}
