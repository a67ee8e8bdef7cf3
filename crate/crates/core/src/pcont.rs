//! Pseudocontinuability of a non-inner Schur function `Θ` through its
//! measure `μ`, tested three ways:
//!
//! - the Szegő condition together with `D ∈ Π(𝔻)`, decided for rational `D`
//!   by factoring `D/D^ = I₂/I₁` with finite Blaschke products;
//! - whether `span{φ_n*}` and `span{ψ_n}` intersect, read off principal angles;
//! - the explicit witness `h₀ = t·Î₁/conj(D̲)`, which lies in both spans.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid_fourier::UnitGrid;
use crate::opuc_basis::{conjugate_basis, CanonicalBasis, ConjugateBasis};
use crate::rational_hardy::{blaschke_quotient_of_unimodular, BlaschkeProduct, RationalFn};
use crate::triples::{
    cross_gram, inner, norm, rational_szego, schur_to_measure, szego_function, CircleMeasure,
    L2Fn, SchurFn, DEFAULT_TAYLOR,
};

/// Slack allowed when checking that angles do not grow with the level.
const MONOTONE_SLACK: f64 = 1e-9;

/// Thresholds and truncation levels for the criteria.
#[derive(Clone, Debug, PartialEq)]
pub struct PcontConfig {
    /// Angles below this at the largest level count as an intersection.
    pub angle_tol: f64,
    /// Largest admissible witness residual.
    pub residual_tol: f64,
    /// Truncation levels for the principal angles, increasing.
    pub levels: Vec<usize>,
    /// Truncation used for the witness residuals.
    pub witness_level: usize,
    /// Tolerance for the boundary identity `D̲/conj(D̲) = I₂/I₁`.
    pub identity_tol: f64,
}

impl Default for PcontConfig {
    fn default() -> Self {
        Self {
            angle_tol: 1e-4,
            residual_tol: 1e-6,
            levels: vec![16, 32, 48],
            witness_level: 48,
            identity_tol: 1e-7,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Intersects,
    Separated,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Intersects => "intersects",
            Verdict::Separated => "separated",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// Principal angles between `span{ψ_1..ψ_N}` and `span{φ_1*..φ_N*}` per level.
#[derive(Clone, Debug, PartialEq)]
pub struct IntersectionReport {
    pub sizes: Vec<usize>,
    /// Smallest principal angle per level, in radians.
    pub min_principal_angle: Vec<f64>,
    /// Witness residuals onto `span{φ*}` and `span{ψ}`, when a witness exists.
    pub h0_residuals: Option<(f64, f64)>,
    pub verdict: Verdict,
}

/// Outcome of the Szegő-condition-plus-`D ∈ Π` criterion.
#[derive(Clone, Debug, PartialEq)]
pub struct SzegoDCriterion {
    pub szego_holds: bool,
    pub szego_integral: f64,
    /// `None` when `D` has no closed form and the question stays open.
    pub d_in_pi: Option<bool>,
    pub i1: Option<BlaschkeProduct>,
    pub i2: Option<BlaschkeProduct>,
    /// `max |D̲/conj(D̲) − I₂/I₁|` over the grid points off the atoms.
    pub identity_residual: Option<f64>,
}

/// The witness `h₀` and its checks.
#[derive(Clone, Debug)]
pub struct H0Witness {
    pub h0: L2Fn,
    pub norm: f64,
    /// Residual of `h₀` minus its projection onto `span{φ_1*..φ_N*}`.
    pub residual_phi_star: f64,
    /// Residual of `h₀` minus its projection onto `span{ψ_1..ψ_N}`.
    pub residual_psi: f64,
    /// `max(|⟨h₀, φ_0*⟩|, max_n |⟨h₀, ψ_n*⟩|)`.
    pub orthogonality: f64,
    pub level: usize,
}

/// All three signals and whether they agree.
#[derive(Clone, Debug)]
pub struct PcontVerdict {
    pub szego: SzegoDCriterion,
    pub basis_criterion: IntersectionReport,
    pub witness: Option<H0Witness>,
    pub agreement: bool,
}

impl PcontVerdict {
    pub fn szego_holds(&self) -> bool {
        self.szego.szego_holds
    }

    pub fn d_in_pi(&self) -> Option<bool> {
        self.szego.d_in_pi
    }
}

fn check_non_inner(theta: &SchurFn, grid: &UnitGrid) -> Result<()> {
    if theta.is_inner(grid)? {
        return Err(Error::InnerFunction);
    }
    Ok(())
}

/// Szegő condition of `μ` and, for rational `D`, the factorization
/// `D/D^ = I₂/I₁` together with the boundary identity check.
pub fn criterion_szego_d(theta: &SchurFn, mu: &CircleMeasure) -> Result<SzegoDCriterion> {
    check_non_inner(theta, mu.grid())?;
    let cond = mu.szego();
    let mut out = SzegoDCriterion {
        szego_holds: cond.holds,
        szego_integral: cond.integral,
        d_in_pi: None,
        i1: None,
        i2: None,
        identity_residual: None,
    };
    if !cond.holds {
        out.d_in_pi = Some(false);
        return Ok(out);
    }
    let d = match (theta, mu.density_source()) {
        (SchurFn::Taylor(_), _) | (_, None) => return Ok(out),
        (_, Some(src)) => match rational_szego(src)? {
            Some(d) => d,
            None => return Ok(out),
        },
    };
    let r = d.div(&d.hat()?)?;
    let (i1, i2) = match blaschke_quotient_of_unimodular(&r) {
        Ok(pair) => pair,
        Err(Error::NotUnimodular(_) | Error::ZeroOnCircle(_) | Error::PoleOnCircle(_)) => {
            out.d_in_pi = Some(false);
            return Ok(out);
        }
        Err(e) => return Err(e),
    };
    let numeric = szego_function(mu, DEFAULT_TAYLOR.min(mu.grid().n() - 1))?;
    let atoms = mu.atom_indices();
    let mut residual: f64 = 0.0;
    for (j, (&t, dv)) in mu
        .grid()
        .points()
        .iter()
        .zip(numeric.boundary().values())
        .enumerate()
    {
        if atoms.contains(&j) {
            continue;
        }
        residual = residual.max((dv / dv.conj() - i2.eval(t) / i1.eval(t)).norm());
    }
    out.d_in_pi = Some(true);
    out.i1 = Some(i1);
    out.i2 = Some(i2);
    out.identity_residual = Some(residual);
    Ok(out)
}

/// `(i, j)` entry `⟨ψ_i, φ_j*⟩` for `i, j = 1..=n`.
fn cross_block(basis: &CanonicalBasis, conj: &ConjugateBasis, n: usize) -> DMatrix<Complex64> {
    cross_gram(&basis.psi()[..n], &conj.phi_star[1..=n], basis.measure())
}

fn combine(coeffs: impl Iterator<Item = Complex64>, fs: &[L2Fn]) -> L2Fn {
    let mut acc = fs[0].scale(Complex64::new(0.0, 0.0));
    for (c, f) in coeffs.zip(fs) {
        acc = acc.axpy(c, f);
    }
    acc
}

/// Smallest principal angle between `span{ψ_1..ψ_n}` and `span{φ_1*..φ_n*}`.
///
/// The angle is taken as `2 asin(‖u − v‖/2)` for the leading pair of
/// principal vectors, which keeps its accuracy where `arccos σ_max` loses it.
pub fn min_principal_angle(basis: &CanonicalBasis, conj: &ConjugateBasis, n: usize) -> f64 {
    let mu = basis.measure();
    let c = cross_block(basis, conj, n);
    // Leading right singular vector from the Hermitian eigenproblem of CᴴC;
    // the intersection makes σ_max highly degenerate, where a direct complex
    // SVD loses accuracy.
    let eig = (c.adjoint() * &c).symmetric_eigen();
    let k = eig.eigenvalues.imax();
    let y = eig.eigenvectors.column(k).into_owned();
    let cy = &c * &y;
    let s = cy.norm();
    if s == 0.0 {
        return std::f64::consts::FRAC_PI_2;
    }
    let x = cy / Complex64::new(s, 0.0);
    // ⟨Σ conj(x_i) ψ_i, Σ conj(y_j) φ_j*⟩ = xᴴ C y = σ_max
    let u = combine(x.iter().map(|v| v.conj()), &basis.psi()[..n]);
    let v = combine(y.iter().map(|v| v.conj()), &conj.phi_star[1..=n]);
    let d = norm(&u.axpy(Complex64::new(-1.0, 0.0), &v), mu);
    2.0 * (d / 2.0).min(1.0).asin()
}

fn classify(angles: &[f64], angle_tol: f64) -> Verdict {
    let Some(&last) = angles.last() else {
        return Verdict::Inconclusive;
    };
    let non_increasing = angles.windows(2).all(|w| w[1] <= w[0] + MONOTONE_SLACK);
    if last < angle_tol && non_increasing {
        return Verdict::Intersects;
    }
    let last_drop = if angles.len() >= 2 {
        angles[angles.len() - 2] - last
    } else {
        0.0
    };
    if last >= angle_tol && last_drop <= 0.5 * last {
        Verdict::Separated
    } else {
        Verdict::Inconclusive
    }
}

/// Principal-angle report over the given levels.
pub fn subspace_intersection_indicator(
    basis: &CanonicalBasis,
    conj: &ConjugateBasis,
    levels: &[usize],
    angle_tol: f64,
) -> Result<IntersectionReport> {
    if basis.psi().is_empty() {
        // polynomials are complete: nothing to intersect with
        return Ok(IntersectionReport {
            sizes: levels.to_vec(),
            min_principal_angle: vec![std::f64::consts::FRAC_PI_2; levels.len()],
            h0_residuals: None,
            verdict: Verdict::Separated,
        });
    }
    let available = basis.psi().len().min(conj.phi_star.len() - 1);
    if let Some(&n) = levels.iter().find(|&&n| n == 0 || n > available) {
        return Err(Error::Unsupported(format!(
            "level {n} outside the basis (1..={available})"
        )));
    }
    let angles: Vec<f64> = levels
        .iter()
        .map(|&n| min_principal_angle(basis, conj, n))
        .collect();
    Ok(IntersectionReport {
        sizes: levels.to_vec(),
        verdict: classify(&angles, angle_tol),
        min_principal_angle: angles,
        h0_residuals: None,
    })
}

/// Normalizes the witnesses so that `I₁(0) = 0`: when `I₁` lacks the factor
/// `ζ`, both products are multiplied by `ζ`, which leaves `I₂/I₁` unchanged.
pub fn normalize_witnesses(
    i1: &BlaschkeProduct,
    i2: &BlaschkeProduct,
) -> (BlaschkeProduct, BlaschkeProduct) {
    if i1.order_at_origin() > 0 {
        (i1.clone(), i2.clone())
    } else {
        (i1.times_monomial(1), i2.times_monomial(1))
    }
}

fn projection_residual(h: &L2Fn, family: &[L2Fn], mu: &CircleMeasure) -> f64 {
    let mut r = h.clone();
    for e in family {
        r = r.axpy(-inner(h, e, mu), e);
    }
    norm(&r, mu)
}

/// `h₀ = I₁(t)/conj(D̲(t)) = t·Î₁(t)/conj(D̲(t))` off the atoms, zero on them,
/// with its residuals at truncation `n`.
pub fn h0_witness(
    i1: &BlaschkeProduct,
    basis: &CanonicalBasis,
    conj: &ConjugateBasis,
    n: usize,
) -> Result<H0Witness> {
    if i1.order_at_origin() == 0 {
        return Err(Error::Unsupported(
            "I₁ has no zero at the origin; normalize the witnesses first".into(),
        ));
    }
    let mu = basis.measure();
    let szego = basis
        .szego()
        .ok_or(Error::SzegoFails(mu.szego().integral))?;
    if n > basis.psi().len() || n + 1 > conj.phi_star.len() {
        return Err(Error::Unsupported(format!("witness level {n} outside the basis")));
    }
    let values: Vec<Complex64> = mu
        .grid()
        .points()
        .iter()
        .zip(szego.boundary().values())
        .map(|(&t, d)| i1.eval(t) / d.conj())
        .collect();
    let h0 = L2Fn::vanishing_on_atoms(
        &crate::grid_fourier::GridFunction::new(mu.grid().clone(), values)?,
        mu,
    )?;
    let residual_phi_star = projection_residual(&h0, &conj.phi_star[1..=n], mu);
    let residual_psi = projection_residual(&h0, &basis.psi()[..n], mu);
    let mut orthogonality = inner(&h0, &conj.phi_star[0], mu).norm();
    for p in &conj.psi_star[..n] {
        orthogonality = orthogonality.max(inner(&h0, p, mu).norm());
    }
    Ok(H0Witness {
        norm: norm(&h0, mu),
        h0,
        residual_phi_star,
        residual_psi,
        orthogonality,
        level: n,
    })
}

/// Runs both criteria and the witness for a non-inner `Θ` with measure `μ`.
///
/// With a rational `D` all three signals must agree. Without one, the
/// factorization signal is absent and agreement means only that the basis
/// criterion does not report an intersection when the Szegő condition fails.
pub fn full_verdict(theta: &SchurFn, mu: &CircleMeasure, cfg: &PcontConfig) -> Result<PcontVerdict> {
    let crit = criterion_szego_d(theta, mu)?;
    let top = cfg
        .levels
        .iter()
        .copied()
        .chain(std::iter::once(cfg.witness_level))
        .max()
        .unwrap_or(1);
    let basis = CanonicalBasis::build(mu, top, top)?;
    let conj = conjugate_basis(&basis);
    let mut report = subspace_intersection_indicator(&basis, &conj, &cfg.levels, cfg.angle_tol)?;
    let witness = match (crit.d_in_pi, &crit.i1, &crit.i2) {
        (Some(true), Some(i1), Some(i2)) => {
            let (i1, _) = normalize_witnesses(i1, i2);
            let w = h0_witness(&i1, &basis, &conj, cfg.witness_level)?;
            report.h0_residuals = Some((w.residual_phi_star, w.residual_psi));
            Some(w)
        }
        _ => None,
    };
    let agreement = match crit.d_in_pi {
        Some(d) => {
            let positive = crit.szego_holds && d;
            let identity_ok = crit
                .identity_residual
                .is_none_or(|r| r <= cfg.identity_tol);
            let witness_ok = witness.as_ref().is_none_or(|w| {
                w.residual_phi_star <= cfg.residual_tol
                    && w.residual_psi <= cfg.residual_tol
                    && (w.norm - 1.0).abs() <= 1e-7
            });
            let basis_positive = report.verdict == Verdict::Intersects;
            report.verdict != Verdict::Inconclusive
                && positive == basis_positive
                && (!positive || (identity_ok && witness_ok))
        }
        None => crit.szego_holds || report.verdict != Verdict::Intersects,
    };
    Ok(PcontVerdict {
        szego: crit,
        basis_criterion: report,
        witness,
        agreement,
    })
}

/// Builds `μ` from `Θ` on `grid` and runs [`full_verdict`].
pub fn full_verdict_for_schur(theta: &SchurFn, grid: &UnitGrid, cfg: &PcontConfig) -> Result<PcontVerdict> {
    check_non_inner(theta, grid)?;
    let mu = schur_to_measure(theta, grid)?;
    full_verdict(theta, &mu, cfg)
}

/// `D/D^` for a rational `D`.
pub fn unimodular_ratio(d: &RationalFn) -> Result<RationalFn> {
    d.div(&d.hat()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn classification() {
        assert_eq!(classify(&[1e-3, 1e-5, 1e-7], 1e-4), Verdict::Intersects);
        assert_eq!(classify(&[0.2, 0.19, 0.19], 1e-4), Verdict::Separated);
        assert_eq!(classify(&[0.2, 0.1, 0.01], 1e-4), Verdict::Inconclusive);
        assert_eq!(classify(&[], 1e-4), Verdict::Inconclusive);
    }

    #[test]
    fn half_constant_criterion() {
        let g = UnitGrid::new(1024).unwrap();
        let theta = SchurFn::Constant(r(0.5));
        let mu = schur_to_measure(&theta, &g).unwrap();
        let crit = criterion_szego_d(&theta, &mu).unwrap();
        assert!(crit.szego_holds);
        assert_eq!(crit.d_in_pi, Some(true));
        let i1 = crit.i1.unwrap();
        let i2 = crit.i2.unwrap();
        assert_eq!((i1.degree(), i1.order_at_origin()), (1, 1));
        assert_eq!(i2.degree(), 1);
        assert!((i2.zeros()[0].value - 0.5).norm() < 1e-12);
        assert!(crit.identity_residual.unwrap() < 1e-10);
    }

    #[test]
    fn inner_input_rejected() {
        let g = UnitGrid::new(256).unwrap();
        let theta = SchurFn::Constant(r(1.0));
        assert_eq!(
            full_verdict_for_schur(&theta, &g, &PcontConfig::default()).unwrap_err(),
            Error::InnerFunction
        );
    }
}
