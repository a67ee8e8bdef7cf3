use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use super::szego::{szego_condition, SzegoCondition};
use crate::error::{Error, Result};
use crate::grid_fourier::{GridFunction, UnitGrid, SNAP_TOL};
use crate::rational_hardy::{RationalFn, CIRCLE_EPS};

/// Tolerance on the total mass of a probability measure.
pub const MASS_TOL: f64 = 1e-8;

/// Most negative density sample accepted as rounding noise.
pub const DENSITY_FLOOR: f64 = -1e-12;

/// A point mass sitting on grid point `index`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Atom {
    pub index: usize,
    pub mass: f64,
}

/// `μ = w·m + Σ mass_k δ_{t_k}` sampled on a grid.
///
/// When the density comes from a rational function (`w = Re R` on the
/// circle) the source is kept, so the measure can be resampled on finer grids.
#[derive(Clone, Debug)]
pub struct CircleMeasure {
    grid: UnitGrid,
    density: Vec<f64>,
    atoms: Vec<Atom>,
    source: Option<RationalFn>,
    probability: bool,
    szego: SzegoCondition,
}

impl CircleMeasure {
    pub fn new(grid: &UnitGrid, density: Vec<f64>, atoms: Vec<Atom>) -> Result<Self> {
        Self::build(grid, density, atoms, None, true)
    }

    /// A finite positive weight `w·m` of any total mass. Only the Szegő
    /// machinery accepts these; everything else expects probability measures.
    pub fn weight(grid: &UnitGrid, density: Vec<f64>) -> Result<Self> {
        Self::build(grid, density, Vec::new(), None, false)
    }

    /// Unnormalized weight `w = Re R(t)`.
    pub fn weight_from_re_rational(grid: &UnitGrid, r: RationalFn) -> Result<Self> {
        let density = re_samples(grid, &r)?;
        Self::build(grid, density, Vec::new(), Some(r), false)
    }

    /// Atoms given by angle; each must sit on a grid point.
    pub fn with_atom_angles(
        grid: &UnitGrid,
        density: Vec<f64>,
        atoms: &[(f64, f64)],
    ) -> Result<Self> {
        let atoms = atoms
            .iter()
            .map(|&(angle, mass)| {
                Ok(Atom {
                    index: grid.snap_angle(angle, SNAP_TOL)?,
                    mass,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(grid, density, atoms)
    }

    /// Density `w = Re R(t)` for a rational `R` without poles on the circle.
    pub fn from_re_rational(grid: &UnitGrid, r: RationalFn, atoms: Vec<Atom>) -> Result<Self> {
        let density = re_samples(grid, &r)?;
        Self::build(grid, density, atoms, Some(r), true)
    }

    /// Normalized arc length `m`.
    pub fn lebesgue(grid: &UnitGrid) -> Self {
        Self::from_re_rational(grid, RationalFn::constant(Complex64::new(1.0, 0.0)), Vec::new())
            .expect("constant density is valid")
    }

    /// Unit point mass at grid point `index`.
    pub fn dirac(grid: &UnitGrid, index: usize) -> Result<Self> {
        Self::new(grid, vec![0.0; grid.n()], vec![Atom { index, mass: 1.0 }])
    }

    /// `(1 − |γ|²)/|1 − γ t|² m`, the measure of the constant Schur function `γ`.
    pub fn bernstein_szego(grid: &UnitGrid, gamma: Complex64) -> Result<Self> {
        if gamma.norm() >= 1.0 {
            return Err(Error::NotSchur {
                modulus: gamma.norm(),
                at: Complex64::new(0.0, 0.0),
            });
        }
        let one = Complex64::new(1.0, 0.0);
        let r = RationalFn::new(vec![one, gamma], vec![one, -gamma])?;
        Self::from_re_rational(grid, r, Vec::new())
    }

    fn build(
        grid: &UnitGrid,
        density: Vec<f64>,
        atoms: Vec<Atom>,
        source: Option<RationalFn>,
        probability: bool,
    ) -> Result<Self> {
        if density.len() != grid.n() {
            return Err(Error::GridMismatch {
                expected: grid.n(),
                got: density.len(),
            });
        }
        if let Some(j) = density.iter().position(|w| !w.is_finite()) {
            return Err(Error::NonFinite(j));
        }
        if let Some(w) = density.iter().find(|&&w| w < DENSITY_FLOOR) {
            return Err(Error::InvalidMeasure(format!("negative density {w:e}")));
        }
        let mut merged: Vec<Atom> = Vec::new();
        for a in atoms {
            if a.index >= grid.n() {
                return Err(Error::InvalidMeasure(format!(
                    "atom index {} outside grid of {}",
                    a.index,
                    grid.n()
                )));
            }
            if !(a.mass > 0.0 && a.mass.is_finite()) {
                return Err(Error::InvalidMeasure(format!("atom mass {} not positive", a.mass)));
            }
            match merged.iter_mut().find(|b| b.index == a.index) {
                Some(b) => b.mass += a.mass,
                None => merged.push(a),
            }
        }
        merged.sort_by_key(|a| a.index);
        let total = density.iter().sum::<f64>() / grid.n() as f64
            + merged.iter().map(|a| a.mass).sum::<f64>();
        if probability && (total - 1.0).abs() > MASS_TOL {
            return Err(Error::InvalidMeasure(format!("total mass {total} is not 1")));
        }
        let mut mu = Self {
            grid: grid.clone(),
            density,
            atoms: merged,
            source,
            probability,
            szego: SzegoCondition::default(),
        };
        mu.szego = szego_condition(&mu);
        Ok(mu)
    }

    pub fn grid(&self) -> &UnitGrid {
        &self.grid
    }

    /// False for weights built with [`CircleMeasure::weight`].
    pub fn is_probability(&self) -> bool {
        self.probability
    }

    pub fn density(&self) -> &[f64] {
        &self.density
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Grid indices of the atoms, the numerical exceptional set.
    pub fn atom_indices(&self) -> Vec<usize> {
        self.atoms.iter().map(|a| a.index).collect()
    }

    /// Rational `R` with `w = Re R` on the circle, when known.
    pub fn density_source(&self) -> Option<&RationalFn> {
        self.source.as_ref()
    }

    pub fn szego(&self) -> &SzegoCondition {
        &self.szego
    }

    pub fn total_mass(&self) -> f64 {
        self.density.iter().sum::<f64>() / self.grid.n() as f64
            + self.atoms.iter().map(|a| a.mass).sum::<f64>()
    }

    /// The same measure on another grid. Needs a rational density source, and
    /// every atom must land on a grid point of the new grid.
    pub fn resample(&self, grid: &UnitGrid) -> Result<Self> {
        let source = self.source.clone().ok_or_else(|| {
            Error::Unsupported("resampling needs a rational density source".into())
        })?;
        let atoms = self
            .atoms
            .iter()
            .map(|a| {
                Ok(Atom {
                    index: grid.snap_angle(self.grid.angle(a.index), SNAP_TOL)?,
                    mass: a.mass,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let density = re_samples(grid, &source)?;
        Self::build(grid, density, atoms, Some(source), self.probability)
    }

    pub fn density_function(&self) -> GridFunction {
        GridFunction::new(
            self.grid.clone(),
            self.density.iter().map(|&w| Complex64::new(w, 0.0)).collect(),
        )
        .expect("density is finite")
    }
}

fn re_samples(grid: &UnitGrid, r: &RationalFn) -> Result<Vec<f64>> {
    if let Some(p) = r
        .poles()
        .iter()
        .find(|p| (p.value.norm() - 1.0).abs() <= CIRCLE_EPS)
    {
        return Err(Error::PoleOnCircle(p.value));
    }
    Ok(r.eval_grid(grid)?.values().iter().map(|v| v.re).collect())
}

/// An element of `L²_μ`: grid samples for the absolutely continuous part and
/// separate values on the atoms.
///
/// Keeping the atom values apart means that a function vanishing on the atoms
/// still carries its full weight in the density quadrature.
#[derive(Clone, Debug, PartialEq)]
pub struct L2Fn {
    ac: Vec<Complex64>,
    at_atoms: Vec<Complex64>,
}

impl L2Fn {
    pub fn new(ac: Vec<Complex64>, at_atoms: Vec<Complex64>, mu: &CircleMeasure) -> Result<Self> {
        if ac.len() != mu.grid().n() {
            return Err(Error::GridMismatch {
                expected: mu.grid().n(),
                got: ac.len(),
            });
        }
        if at_atoms.len() != mu.atoms().len() {
            return Err(Error::InvalidMeasure(format!(
                "{} atom values for {} atoms",
                at_atoms.len(),
                mu.atoms().len()
            )));
        }
        Ok(Self { ac, at_atoms })
    }

    /// A function continuous at the atoms: atom values read off the samples.
    pub fn continuous(f: &GridFunction, mu: &CircleMeasure) -> Result<Self> {
        let at_atoms = mu.atoms().iter().map(|a| f.values()[a.index]).collect();
        Self::new(f.values().to_vec(), at_atoms, mu)
    }

    /// A function equal to the samples off the atoms and to zero on them.
    pub fn vanishing_on_atoms(f: &GridFunction, mu: &CircleMeasure) -> Result<Self> {
        Self::new(
            f.values().to_vec(),
            vec![Complex64::new(0.0, 0.0); mu.atoms().len()],
            mu,
        )
    }

    pub fn ac(&self) -> &[Complex64] {
        &self.ac
    }

    pub fn at_atoms(&self) -> &[Complex64] {
        &self.at_atoms
    }

    /// Point values on the grid, atom values substituted at atom indices.
    pub fn samples(&self, mu: &CircleMeasure) -> GridFunction {
        let mut v = self.ac.clone();
        for (a, &x) in mu.atoms().iter().zip(&self.at_atoms) {
            v[a.index] = x;
        }
        GridFunction::new(mu.grid().clone(), v).expect("finite samples")
    }

    pub fn conj(&self) -> Self {
        Self {
            ac: self.ac.iter().map(|v| v.conj()).collect(),
            at_atoms: self.at_atoms.iter().map(|v| v.conj()).collect(),
        }
    }

    /// `(U^× f)(t) = f(t)/t`.
    pub fn shift_back(&self, mu: &CircleMeasure) -> Self {
        let t = mu.grid().points();
        Self {
            ac: self.ac.iter().zip(t).map(|(v, t)| v * t.conj()).collect(),
            at_atoms: self
                .at_atoms
                .iter()
                .zip(mu.atoms())
                .map(|(v, a)| v * t[a.index].conj())
                .collect(),
        }
    }

    /// `t·f(t)`.
    pub fn shift_forward(&self, mu: &CircleMeasure) -> Self {
        let t = mu.grid().points();
        Self {
            ac: self.ac.iter().zip(t).map(|(v, t)| v * t).collect(),
            at_atoms: self
                .at_atoms
                .iter()
                .zip(mu.atoms())
                .map(|(v, a)| v * t[a.index])
                .collect(),
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            ac: self.ac.iter().map(|v| v * s).collect(),
            at_atoms: self.at_atoms.iter().map(|v| v * s).collect(),
        }
    }

    /// `self + s·other`.
    pub fn axpy(&self, s: Complex64, other: &L2Fn) -> Self {
        Self {
            ac: self.ac.iter().zip(&other.ac).map(|(a, b)| a + s * b).collect(),
            at_atoms: self
                .at_atoms
                .iter()
                .zip(&other.at_atoms)
                .map(|(a, b)| a + s * b)
                .collect(),
        }
    }
}

/// `⟨f, g⟩_μ = ∫ f ḡ dμ`.
pub fn inner(f: &L2Fn, g: &L2Fn, mu: &CircleMeasure) -> Complex64 {
    let n = mu.grid().n() as f64;
    let ac: Complex64 = f
        .ac
        .iter()
        .zip(&g.ac)
        .zip(mu.density())
        .map(|((a, b), &w)| a * b.conj() * w)
        .sum::<Complex64>()
        / n;
    let singular: Complex64 = f
        .at_atoms
        .iter()
        .zip(&g.at_atoms)
        .zip(mu.atoms())
        .map(|((a, b), atom)| a * b.conj() * atom.mass)
        .sum();
    ac + singular
}

pub fn norm(f: &L2Fn, mu: &CircleMeasure) -> f64 {
    inner(f, f, mu).re.max(0.0).sqrt()
}

const BLOCK: usize = 32;

/// Matrix of inner products, entry `(i, j)` equal to `⟨f_i, g_j⟩_μ`.
pub fn cross_gram(f: &[L2Fn], g: &[L2Fn], mu: &CircleMeasure) -> DMatrix<Complex64> {
    let n = mu.grid().n();
    let rows = n + mu.atoms().len();
    let weights: Vec<f64> = mu
        .density()
        .iter()
        .map(|&w| (w.max(0.0) / n as f64).sqrt())
        .chain(mu.atoms().iter().map(|a| a.mass.sqrt()))
        .collect();
    let weighted = |fs: &[L2Fn]| {
        DMatrix::from_fn(rows, fs.len(), |p, i| {
            let v = if p < n { fs[i].ac[p] } else { fs[i].at_atoms[p - n] };
            v * weights[p]
        })
    };
    let a = weighted(f);
    let b = weighted(g);
    // (BᴴA)_{ji} = Σ_p conj(g_j) f_i ω_p, computed in column blocks of B
    let blocks: Vec<DMatrix<Complex64>> = (0..g.len())
        .step_by(BLOCK)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|start| {
            let width = BLOCK.min(g.len() - start);
            b.columns(start, width).ad_mul(&a)
        })
        .collect();
    let mut out = DMatrix::zeros(f.len(), g.len());
    for (k, block) in blocks.iter().enumerate() {
        out.columns_mut(k * BLOCK, block.nrows())
            .copy_from(&block.transpose());
    }
    out
}

/// Gram matrix `⟨f_i, f_j⟩_μ`.
pub fn gram(f: &[L2Fn], mu: &CircleMeasure) -> DMatrix<Complex64> {
    cross_gram(f, f, mu)
}

/// Largest entrywise deviation of a square matrix from the identity.
pub fn identity_deviation(m: &DMatrix<Complex64>) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let e = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((m[(i, j)] - e).norm());
        }
    }
    worst
}
