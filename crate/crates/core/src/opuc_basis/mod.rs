//! Orthonormal polynomials `φ_n(t) = Σ_j α_{n,j} t^{−j}` of a measure,
//! their recursion parameters, the Schur algorithm, and the completion
//! `ψ_k = t^k/conj(D̲)` to an orthonormal basis of `L²_μ`.

mod canonical;

pub use canonical::{
    conjugate_basis, lift_h2_isometry, psi_completion, CanonicalBasis, ConjugateBasis,
};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::triples::{measure_moments, CircleMeasure, SchurFn};
use crate::rational_hardy::{poly, RationalFn};

/// Smallest admissible eigenvalue of the moment matrix.
pub const MIN_EIGENVALUE: f64 = 1e-12;

/// Largest admissible condition number of the moment matrix.
pub const MAX_CONDITION: f64 = 1e12;

/// `|γ|` within this of 1 ends the Schur algorithm.
pub const UNIMODULAR_EPS: f64 = 1e-9;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `φ_0..φ_N` as coefficient vectors in `t^{−1}`, with the recursion parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct OpucBasis {
    phi: Vec<Vec<Complex64>>,
    verblunsky: Vec<Complex64>,
}

impl OpucBasis {
    /// `phi()[n][j] = α_{n,j}`, `j = 0..=n`.
    pub fn phi(&self) -> &[Vec<Complex64>] {
        &self.phi
    }

    /// `γ_0..γ_{N−1}`.
    pub fn verblunsky(&self) -> &[Complex64] {
        &self.verblunsky
    }

    /// Highest degree `N`.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// Largest coefficient difference to another basis of the same degree.
    pub fn max_coeff_diff(&self, other: &OpucBasis) -> f64 {
        self.phi
            .iter()
            .zip(&other.phi)
            .flat_map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x - y).norm()))
            .fold(0.0, f64::max)
    }
}

/// `c_0..c_N`, `c_k = ∫ t^{−k} μ(dt)`.
pub fn moments(mu: &CircleMeasure, n: usize) -> Result<Vec<Complex64>> {
    measure_moments(mu, n)
}

fn moment(c: &[Complex64], k: i64) -> Complex64 {
    if k >= 0 {
        c[k as usize]
    } else {
        c[(-k) as usize].conj()
    }
}

/// Toeplitz Gram matrix of `1, t^{−1}, …, t^{−N}`: entry `(j, l)` is `c_{j−l}`.
pub fn moment_matrix(c: &[Complex64]) -> DMatrix<Complex64> {
    let m = c.len();
    DMatrix::from_fn(m, m, |j, l| moment(c, j as i64 - l as i64))
}

/// Extreme eigenvalues of the moment matrix.
pub fn moment_spectrum(c: &[Complex64]) -> (f64, f64) {
    let eig = moment_matrix(c).symmetric_eigen();
    let min = eig.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
    let max = eig.eigenvalues.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (min, max)
}

/// Gram-Schmidt on `1, t^{−1}, …, t^{−N}` in `L²_μ`, carried out on
/// coefficient vectors against the moment matrix: modified Gram-Schmidt with
/// one reorthogonalization pass.
pub fn gram_schmidt_basis(mu: &CircleMeasure, n: usize) -> Result<OpucBasis> {
    gram_schmidt_from_moments(&moments(mu, n)?)
}

pub fn gram_schmidt_from_moments(c: &[Complex64]) -> Result<OpucBasis> {
    let size = c.len();
    let gram = moment_matrix(c);
    let (min_eig, max_eig) = moment_spectrum(c);
    let condition = max_eig / min_eig;
    if min_eig <= MIN_EIGENVALUE || condition.is_nan() || condition > MAX_CONDITION {
        return Err(Error::DegenerateMoments {
            order: size - 1,
            min_eig,
            condition,
        });
    }
    // ⟨u, v⟩ = uᵀ M v̄ for coefficient vectors u, v
    let mut phis: Vec<DVector<Complex64>> = Vec::with_capacity(size);
    let mut duals: Vec<DVector<Complex64>> = Vec::with_capacity(size);
    for k in 0..size {
        let mut v = DVector::<Complex64>::zeros(size);
        v[k] = ONE;
        for _pass in 0..2 {
            for (phi, dual) in phis.iter().zip(&duals) {
                let coef = v.transpose() * dual;
                v -= phi * coef[(0, 0)];
            }
        }
        let norm2 = (v.transpose() * (&gram * v.map(|x| x.conj())))[(0, 0)].re;
        if norm2 <= 0.0 {
            return Err(Error::DegenerateMoments {
                order: k,
                min_eig,
                condition,
            });
        }
        let phi = v / Complex64::new(norm2.sqrt(), 0.0);
        duals.push(&gram * phi.map(|x| x.conj()));
        phis.push(phi);
    }
    let phi: Vec<Vec<Complex64>> = phis
        .iter()
        .enumerate()
        .map(|(k, v)| v.iter().take(k + 1).copied().collect())
        .collect();
    // Φ̃_{n+1}(0) = −γ_n for the monic polynomials
    let verblunsky = (1..size).map(|k| -phi[k][0] / phi[k][k]).collect();
    Ok(OpucBasis { phi, verblunsky })
}

/// The Szegő recursion `Φ̃_{n+1} = zΦ̃_n − γ_n Φ̃_n^*` on monic polynomials in
/// `z = t^{−1}`, with `γ_n = Σ_j a_{n,j} c_{j+1}/E_n` and
/// `E_{n+1} = E_n(1 − |γ_n|²)`.
pub fn szego_recursion(c: &[Complex64]) -> Result<OpucBasis> {
    if c.is_empty() {
        return Err(Error::InvalidMeasure("no moments".into()));
    }
    if (c[0] - ONE).norm() > 1e-8 {
        return Err(Error::InvalidMeasure(format!("c_0 = {} is not 1", c[0])));
    }
    let size = c.len();
    let mut a = vec![ONE];
    let mut e = c[0].re;
    let mut phi = vec![vec![Complex64::new(1.0 / e.sqrt(), 0.0)]];
    let mut verblunsky = Vec::with_capacity(size - 1);
    for n in 0..size - 1 {
        let gamma = a.iter().enumerate().map(|(j, &x)| x * c[j + 1]).sum::<Complex64>() / e;
        if gamma.norm() >= 1.0 {
            return Err(Error::NotSchurParameter {
                index: n,
                modulus: gamma.norm(),
            });
        }
        let star = poly::reversed_conj(&a);
        let mut next = poly::shift_up(&a, 1);
        for (x, s) in next.iter_mut().zip(&star) {
            *x -= gamma * s;
        }
        e *= 1.0 - gamma.norm_sqr();
        if e <= 0.0 {
            return Err(Error::NotSchurParameter {
                index: n,
                modulus: gamma.norm(),
            });
        }
        let scale = 1.0 / e.sqrt();
        phi.push(next.iter().map(|x| x * scale).collect());
        verblunsky.push(gamma);
        a = next;
    }
    Ok(OpucBasis { phi, verblunsky })
}

/// Output of [`schur_algorithm`].
#[derive(Clone, Debug, PartialEq)]
pub struct SchurParameters {
    pub gammas: Vec<Complex64>,
    /// Set when some `Θ_n` turned out to be a unimodular constant.
    pub terminated: bool,
}

/// Schur's recursion `Θ_{n+1} = (Θ_n − γ_n)/(ζ(1 − γ̄_n Θ_n))`, `γ_n = Θ_n(0)`,
/// returning `γ_0..γ_N` for rational or constant `Θ`.
pub fn schur_algorithm(theta: &SchurFn, n: usize) -> Result<SchurParameters> {
    let mut cur: RationalFn = theta
        .as_rational()
        .ok_or_else(|| Error::Unsupported("Schur algorithm on Taylor data".into()))?;
    let mut gammas = Vec::with_capacity(n + 1);
    for index in 0..=n {
        let gamma = cur.eval(ZERO)?;
        if gamma.norm() > 1.0 + UNIMODULAR_EPS {
            return Err(Error::NotSchurParameter {
                index,
                modulus: gamma.norm(),
            });
        }
        gammas.push(gamma);
        if gamma.norm() >= 1.0 - UNIMODULAR_EPS {
            return Ok(SchurParameters {
                gammas,
                terminated: true,
            });
        }
        if cur.is_zero() {
            gammas.resize(n + 1, ZERO);
            break;
        }
        let p = cur.num();
        let q = cur.den();
        let top = poly::sub(p, &poly::scale(q, gamma));
        let bottom = poly::sub(q, &poly::scale(p, gamma.conj()));
        // top(0) = 0 up to rounding; divide by ζ
        let top = if top.len() > 1 { top[1..].to_vec() } else { Vec::new() };
        cur = RationalFn::new(top, bottom)?;
    }
    Ok(SchurParameters {
        gammas,
        terminated: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid_fourier::UnitGrid;
    use crate::triples::Atom;

    fn r(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn lebesgue_moments_and_basis() {
        let g = UnitGrid::new(256).unwrap();
        let mu = CircleMeasure::lebesgue(&g);
        let c = moments(&mu, 6).unwrap();
        assert!((c[0] - 1.0).norm() < 1e-15);
        assert!(c[1..].iter().all(|x| x.norm() < 1e-15));
        let b = gram_schmidt_basis(&mu, 6).unwrap();
        for (n, phi) in b.phi().iter().enumerate() {
            for (j, a) in phi.iter().enumerate() {
                let e = if j == n { 1.0 } else { 0.0 };
                assert!((a - e).norm() < 1e-14);
            }
        }
        assert!(szego_recursion(&c).unwrap().verblunsky().iter().all(|g| g.norm() < 1e-15));
    }

    #[test]
    fn dirac_moments() {
        let g = UnitGrid::new(64).unwrap();
        let c = moments(&CircleMeasure::dirac(&g, 0).unwrap(), 5).unwrap();
        assert!(c.iter().all(|x| (x - 1.0).norm() < 1e-15));
    }

    #[test]
    fn bernstein_szego_first_polynomial() {
        let g = UnitGrid::new(1024).unwrap();
        let mu = CircleMeasure::bernstein_szego(&g, r(0.5)).unwrap();
        let c = moments(&mu, 4).unwrap();
        assert!((c[1] - 0.5).norm() < 1e-14);
        assert!((c[2] - 0.25).norm() < 1e-14);
        let b = gram_schmidt_basis(&mu, 4).unwrap();
        let s = 0.75f64.sqrt();
        assert!((b.phi()[1][0] + 0.5 / s).norm() < 1e-13);
        assert!((b.phi()[1][1] - 1.0 / s).norm() < 1e-13);
        let rec = szego_recursion(&c).unwrap();
        assert!((rec.verblunsky()[0] - 0.5).norm() < 1e-14);
        assert!(rec.verblunsky()[1..].iter().all(|x| x.norm() < 1e-13));
        assert!(rec.max_coeff_diff(&b) < 1e-12);
    }

    #[test]
    fn mixture_first_polynomial() {
        // μ = m/2 + δ_1/2: c_k = 1/2 for k ≥ 1, φ_1 ∝ t^{-1} − 1/2
        let g = UnitGrid::new(256).unwrap();
        let mu = CircleMeasure::new(&g, vec![0.5; 256], vec![Atom { index: 0, mass: 0.5 }]).unwrap();
        let b = gram_schmidt_basis(&mu, 3).unwrap();
        let ratio = b.phi()[1][0] / b.phi()[1][1];
        assert!((ratio + 0.5).norm() < 1e-14);
    }

    #[test]
    fn pure_atoms_are_degenerate() {
        let g = UnitGrid::new(64).unwrap();
        let mu = CircleMeasure::dirac(&g, 0).unwrap();
        assert!(matches!(
            gram_schmidt_basis(&mu, 3),
            Err(Error::DegenerateMoments { .. })
        ));
        let c = moments(&mu, 3).unwrap();
        assert!(matches!(
            szego_recursion(&c),
            Err(Error::NotSchurParameter { .. })
        ));
    }

    #[test]
    fn schur_algorithm_examples() {
        let z = schur_algorithm(&SchurFn::Constant(ZERO), 4).unwrap();
        assert_eq!(z.gammas, vec![ZERO; 5]);
        let h = schur_algorithm(&SchurFn::Constant(r(0.5)), 4).unwrap();
        assert_eq!(h.gammas[0], r(0.5));
        assert!(h.gammas[1..].iter().all(|x| x.norm() < 1e-15));
        let zeta = SchurFn::rational(RationalFn::polynomial(vec![ZERO, r(0.5)]).unwrap()).unwrap();
        let s = schur_algorithm(&zeta, 4).unwrap();
        assert!(s.gammas[0].norm() < 1e-15);
        assert!((s.gammas[1] - 0.5).norm() < 1e-15);
        assert!(s.gammas[2..].iter().all(|x| x.norm() < 1e-15));
        let one = schur_algorithm(&SchurFn::Constant(ONE), 4).unwrap();
        assert!(one.terminated && one.gammas.len() == 1);
    }
}
