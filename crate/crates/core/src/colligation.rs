//! The operator `(U^× f)(t) = f(t)/t` on `L²_μ` written in the canonical
//! basis, its block split with respect to `L²_μ = H_μ ⊕ ℂ` (constants), and
//! the characteristic function `Θ(ζ) = S + ζG(I − ζT)^{−1}F`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::opuc_basis::{conjugate_basis, CanonicalBasis};
use crate::triples::{cross_gram, gram, identity_deviation, L2Fn};

/// Largest basis Gram deviation accepted before building the matrix.
pub const MAX_GRAM_DEVIATION: f64 = 1e-5;

/// Condition number above which `I − ζT` is rejected.
pub const MAX_SOLVE_CONDITION: f64 = 1e12;

/// Largest `|ζ|` accepted by [`characteristic_function`].
pub const MAX_PROBE_RADIUS: f64 = 0.9;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A basis element in the truncated order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisLabel {
    Phi(usize),
    Psi(usize),
}

impl std::fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BasisLabel::Phi(k) => write!(f, "phi{k}"),
            BasisLabel::Psi(k) => write!(f, "psi{k}"),
        }
    }
}

/// Order `[φ_1..φ_N, ψ_1..ψ_K, φ_0]`.
pub fn basis_order(n_phi: usize, k_psi: usize) -> Vec<BasisLabel> {
    (1..=n_phi)
        .map(BasisLabel::Phi)
        .chain((1..=k_psi).map(BasisLabel::Psi))
        .chain(std::iter::once(BasisLabel::Phi(0)))
        .collect()
}

/// Matrix of `U^×` in the truncated canonical basis, entry `(i, j)` equal to
/// `⟨U^× b_j, b_i⟩_μ`.
#[derive(Clone, Debug)]
pub struct UmuMatrix {
    pub matrix: DMatrix<Complex64>,
    pub order: Vec<BasisLabel>,
    /// Basis Gram deviation from the identity.
    pub gram_deviation: f64,
}

impl UmuMatrix {
    /// `Σ_i |entry(i, j)|²` for each column: the part of `‖U^× b_j‖² = 1`
    /// the truncation captures.
    pub fn captured_mass(&self) -> Vec<f64> {
        self.matrix
            .column_iter()
            .map(|c| c.iter().map(|v| v.norm_sqr()).sum())
            .collect()
    }

    /// Largest entrywise deviation of `EᴴE` from the identity.
    pub fn orthogonality_defect(&self) -> f64 {
        identity_deviation(&self.matrix.ad_mul(&self.matrix))
    }

    /// Cauchy-Schwarz bound `max sqrt((1 − c_i)(1 − c_j))` for the column
    /// inner products, `c` the captured masses.
    pub fn truncation_tolerance(&self) -> f64 {
        let tails: Vec<f64> = self
            .captured_mass()
            .iter()
            .map(|c| (1.0 - c).max(0.0))
            .collect();
        let mut worst: f64 = 0.0;
        for (i, a) in tails.iter().enumerate() {
            for b in &tails[i + 1..] {
                worst = worst.max((a * b).sqrt());
            }
        }
        worst
    }
}

fn ordered_elements(basis: &CanonicalBasis) -> Vec<L2Fn> {
    basis.phi()[1..]
        .iter()
        .chain(basis.psi())
        .chain(std::iter::once(&basis.phi()[0]))
        .cloned()
        .collect()
}

pub fn build_umu_matrix(basis: &CanonicalBasis) -> Result<UmuMatrix> {
    let mu = basis.measure();
    let elems = ordered_elements(basis);
    let gram_deviation = identity_deviation(&gram(&elems, mu));
    if gram_deviation.is_nan() || gram_deviation > MAX_GRAM_DEVIATION {
        return Err(Error::GramDeviation(gram_deviation));
    }
    let shifted: Vec<L2Fn> = elems.iter().map(|b| b.shift_back(mu)).collect();
    // cross_gram(shifted, elems)_{ji} = ⟨U^× b_j, b_i⟩
    let matrix = cross_gram(&shifted, &elems, mu).transpose();
    Ok(UmuMatrix {
        matrix,
        order: basis_order(basis.phi().len() - 1, basis.psi().len()),
        gram_deviation,
    })
}

/// The blocks of `U^×` with respect to `H_μ ⊕ ℂ`.
#[derive(Clone, Debug)]
pub struct Colligation {
    pub t: DMatrix<Complex64>,
    pub f: DVector<Complex64>,
    /// The row `G`, stored as a vector.
    pub g: DVector<Complex64>,
    pub s: Complex64,
    pub n_phi: usize,
    pub k_psi: usize,
}

/// Splits off the last row and column (the constants).
pub fn split_blocks(u: &UmuMatrix) -> Colligation {
    let m = u.matrix.nrows() - 1;
    let n_phi = u
        .order
        .iter()
        .filter(|l| matches!(l, BasisLabel::Phi(k) if *k > 0))
        .count();
    Colligation {
        t: u.matrix.view((0, 0), (m, m)).into_owned(),
        f: u.matrix.view((0, m), (m, 1)).column(0).into_owned(),
        g: u.matrix.view((m, 0), (1, m)).row(0).transpose(),
        s: u.matrix[(m, m)],
        n_phi,
        k_psi: m - n_phi,
    }
}

impl Colligation {
    pub fn build(basis: &CanonicalBasis) -> Result<Self> {
        Ok(split_blocks(&build_umu_matrix(basis)?))
    }

    /// `[[T, F], [G, S]]`.
    pub fn assemble(&self) -> DMatrix<Complex64> {
        let m = self.t.nrows();
        let mut out = DMatrix::zeros(m + 1, m + 1);
        out.view_mut((0, 0), (m, m)).copy_from(&self.t);
        out.view_mut((0, m), (m, 1)).copy_from(&self.f);
        out.view_mut((m, 0), (1, m)).copy_from(&self.g.transpose());
        out[(m, m)] = self.s;
        out
    }

    /// The adjoint colligation `(T*, G*, F*, S̄)`.
    pub fn adjoint(&self) -> Colligation {
        Colligation {
            t: self.t.adjoint(),
            f: self.g.map(|x| x.conj()),
            g: self.f.map(|x| x.conj()),
            s: self.s.conj(),
            n_phi: self.n_phi,
            k_psi: self.k_psi,
        }
    }

    pub fn size(&self) -> usize {
        self.t.nrows()
    }
}

/// `S + ζ G (I − ζT)^{−1} F` for `|ζ| ≤ 0.9`.
pub fn characteristic_function(c: &Colligation, z: Complex64) -> Result<Complex64> {
    if z.norm() > MAX_PROBE_RADIUS {
        return Err(Error::Domain(z));
    }
    let m = c.size();
    let a = DMatrix::<Complex64>::identity(m, m) - &c.t * z;
    let sv = a.clone().singular_values();
    let smax = sv.iter().copied().fold(0.0, f64::max);
    let smin = sv.iter().copied().fold(f64::INFINITY, f64::min);
    let condition = smax / smin;
    if condition.is_nan() || condition > MAX_SOLVE_CONDITION {
        return Err(Error::IllConditioned(condition));
    }
    let x = a
        .lu()
        .solve(&c.f)
        .ok_or(Error::IllConditioned(f64::INFINITY))?;
    Ok(c.s + z * (c.g.transpose() * x)[(0, 0)])
}

/// Numerical checks of `H_μ = H_F ∨ H_G` and of the shift inside the ψ block.
#[derive(Clone, Debug, PartialEq)]
pub struct SimplicityReport {
    /// Relative residual of `T^n F` off `span{φ_1..φ_{n+1}}`.
    pub hf_residuals: Vec<f64>,
    /// Relative residual of `(T*)^n G*` off `span{φ_1*..φ_{n+1}*}`.
    pub hg_residuals: Vec<f64>,
    /// Largest deviation of the ψ columns of `T*` from the forward shift.
    pub psi_shift_defect: f64,
}

impl SimplicityReport {
    pub fn max_hf(&self) -> f64 {
        self.hf_residuals.iter().copied().fold(0.0, f64::max)
    }

    pub fn max_hg(&self) -> f64 {
        self.hg_residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// Span and shift checks for `n < N/2`; needs the basis for the coordinates
/// of the conjugate polynomials `φ_k*`.
pub fn verify_simplicity_spans(c: &Colligation, basis: &CanonicalBasis) -> SimplicityReport {
    let n_phi = c.n_phi;
    let m = c.size();
    let levels = n_phi / 2;
    let mu = basis.measure();

    let mut hf_residuals = Vec::with_capacity(levels);
    let mut v = c.f.clone();
    for n in 0..levels {
        let total = v.norm();
        let outside: f64 = v.rows(n + 1, m - n - 1).norm();
        hf_residuals.push(if total > 0.0 { outside / total } else { 0.0 });
        v = &c.t * v;
    }

    // coordinates of φ_k* in the H_μ part of the basis
    let elems: Vec<L2Fn> = ordered_elements(basis)[..m].to_vec();
    let conj = conjugate_basis(basis);
    let coords = cross_gram(&conj.phi_star[1..], &elems, mu).transpose();
    let t_star = c.t.adjoint();
    let mut hg_residuals = Vec::with_capacity(levels);
    let mut v = c.g.map(|x| x.conj());
    for n in 0..levels {
        let span = coords.columns(0, n + 1).into_owned();
        let qr = span.qr();
        let q = qr.q();
        let proj = &q * (q.ad_mul(&v));
        let total = v.norm();
        hg_residuals.push(if total > 0.0 { (&v - proj).norm() / total } else { 0.0 });
        v = &t_star * v;
    }

    let mut psi_shift_defect: f64 = 0.0;
    for k in 0..c.k_psi {
        let col = n_phi + k;
        for i in 0..m {
            let expected = if i == col + 1 { ONE } else { Complex64::new(0.0, 0.0) };
            psi_shift_defect = psi_shift_defect.max((t_star[(i, col)] - expected).norm());
        }
    }

    SimplicityReport {
        hf_residuals,
        hg_residuals,
        psi_shift_defect,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid_fourier::UnitGrid;
    use crate::triples::CircleMeasure;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn lebesgue_shift() {
        let g = UnitGrid::new(256).unwrap();
        let basis = CanonicalBasis::build(&CircleMeasure::lebesgue(&g), 6, 6).unwrap();
        let u = build_umu_matrix(&basis).unwrap();
        let m = u.matrix.nrows() - 1;
        // U^× φ_0 = φ_1
        assert!((u.matrix[(0, m)] - 1.0).norm() < 1e-14);
        // U^× ψ_1 = φ_0
        assert!((u.matrix[(m, 6)] - 1.0).norm() < 1e-14);
        let col = split_blocks(&u);
        assert!(col.s.norm() < 1e-14);
        assert!((col.f[0] - 1.0).norm() < 1e-14);
        assert!(col.f.rows(1, m - 1).norm() < 1e-14);
        assert_eq!(col.assemble(), u.matrix);
        for z in [c(0.3, 0.0), c(0.0, 0.5), c(-0.4, 0.0)] {
            assert!(characteristic_function(&col, z).unwrap().norm() < 1e-14);
        }
        assert!(matches!(
            characteristic_function(&col, c(0.95, 0.0)),
            Err(Error::Domain(_))
        ));
        let rep = verify_simplicity_spans(&col, &basis);
        assert!(rep.max_hf() < 1e-14);
        assert!(rep.psi_shift_defect < 1e-14);
    }

    #[test]
    fn bernstein_szego_s_block() {
        let g = UnitGrid::new(1024).unwrap();
        let mu = CircleMeasure::bernstein_szego(&g, c(0.5, 0.0)).unwrap();
        let basis = CanonicalBasis::build(&mu, 16, 16).unwrap();
        let col = Colligation::build(&basis).unwrap();
        assert!((col.s - 0.5).norm() < 1e-13);
        let z = c(0.2, -0.3);
        let th = characteristic_function(&col, z).unwrap();
        assert!((th - 0.5).norm() < 1e-8);
        let adj = characteristic_function(&col.adjoint(), z.conj()).unwrap();
        assert!((adj - th.conj()).norm() < 1e-12);
    }
}
