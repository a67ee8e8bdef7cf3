use num_complex::Complex64;

use super::{gram_schmidt_basis, OpucBasis};
use crate::error::{Error, Result};
use crate::grid_fourier::{eval_conj_power_series, eval_power_series, GridFunction};
use crate::triples::{inner, szego_function, CircleMeasure, L2Fn, SzegoFn, DEFAULT_TAYLOR};

/// `φ_0..φ_N` together with `ψ_1..ψ_K`, `ψ_k = t^k/conj(D̲)` off the atoms
/// and zero on them.
#[derive(Clone, Debug)]
pub struct CanonicalBasis {
    mu: CircleMeasure,
    opuc: OpucBasis,
    phi: Vec<L2Fn>,
    psi: Vec<L2Fn>,
    szego: Option<SzegoFn>,
}

impl CanonicalBasis {
    /// Gram-Schmidt polynomials up to degree `n_phi` and, when the Szegő
    /// condition holds, `k_psi` completion functions. Without the Szegő
    /// condition the polynomials are complete and no `ψ` is built.
    pub fn build(mu: &CircleMeasure, n_phi: usize, k_psi: usize) -> Result<Self> {
        let opuc = gram_schmidt_basis(mu, n_phi)?;
        if !mu.szego().holds {
            return Ok(Self {
                mu: mu.clone(),
                phi: phi_functions(mu, &opuc)?,
                opuc,
                psi: Vec::new(),
                szego: None,
            });
        }
        let m = DEFAULT_TAYLOR.min(mu.grid().n() - 1);
        let szego = szego_function(mu, m)?;
        psi_completion(mu, opuc, &szego, k_psi)
    }

    pub fn measure(&self) -> &CircleMeasure {
        &self.mu
    }

    pub fn opuc(&self) -> &OpucBasis {
        &self.opuc
    }

    /// `φ_0..φ_N` as elements of `L²_μ`.
    pub fn phi(&self) -> &[L2Fn] {
        &self.phi
    }

    /// `ψ_1..ψ_K`.
    pub fn psi(&self) -> &[L2Fn] {
        &self.psi
    }

    pub fn szego(&self) -> Option<&SzegoFn> {
        self.szego.as_ref()
    }

    /// Grid indices of the atoms, where every `ψ_k` vanishes.
    pub fn atom_set(&self) -> Vec<usize> {
        self.mu.atom_indices()
    }

    /// `⟨t, ψ_1⟩_μ`, the quantity whose positivity fixes the phase of `ψ_1`.
    pub fn psi_positivity(&self) -> Option<Complex64> {
        let psi1 = self.psi.first()?;
        let t = GridFunction::from_fn(self.mu.grid(), |t| t).ok()?;
        let t = L2Fn::continuous(&t, &self.mu).ok()?;
        Some(inner(&t, psi1, &self.mu))
    }

    /// `φ_0..φ_N, ψ_1..ψ_K` in that order.
    pub fn all(&self) -> Vec<L2Fn> {
        self.phi.iter().chain(&self.psi).cloned().collect()
    }
}

fn phi_functions(mu: &CircleMeasure, opuc: &OpucBasis) -> Result<Vec<L2Fn>> {
    opuc.phi()
        .iter()
        .map(|alpha| L2Fn::continuous(&eval_conj_power_series(mu.grid(), alpha)?, mu))
        .collect()
}

/// Completes the polynomial basis with `ψ_1 = t/conj(D̲)`, `ψ_{k+1} = t·ψ_k`.
pub fn psi_completion(
    mu: &CircleMeasure,
    opuc: OpucBasis,
    szego: &SzegoFn,
    k: usize,
) -> Result<CanonicalBasis> {
    if !mu.szego().holds {
        return Err(Error::SzegoFails(mu.szego().integral));
    }
    if szego.boundary().grid().n() != mu.grid().n() {
        return Err(Error::GridMismatch {
            expected: mu.grid().n(),
            got: szego.boundary().grid().n(),
        });
    }
    let d = szego.boundary().values();
    let first = GridFunction::new(
        mu.grid().clone(),
        mu.grid()
            .points()
            .iter()
            .zip(d)
            .map(|(&t, dv)| t / dv.conj())
            .collect(),
    )?;
    let mut psi = Vec::with_capacity(k);
    if k > 0 {
        psi.push(L2Fn::vanishing_on_atoms(&first, mu)?);
        for _ in 1..k {
            let next = psi.last().unwrap().shift_forward(mu);
            psi.push(next);
        }
    }
    Ok(CanonicalBasis {
        mu: mu.clone(),
        phi: phi_functions(mu, &opuc)?,
        opuc,
        psi,
        szego: Some(szego.clone()),
    })
}

/// Pointwise conjugates `φ_n*`, `ψ_k*` of the canonical basis.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugateBasis {
    pub phi_star: Vec<L2Fn>,
    pub psi_star: Vec<L2Fn>,
}

impl ConjugateBasis {
    /// Conjugating again gives back the original functions.
    pub fn conjugate(&self) -> ConjugateBasis {
        ConjugateBasis {
            phi_star: self.phi_star.iter().map(L2Fn::conj).collect(),
            psi_star: self.psi_star.iter().map(L2Fn::conj).collect(),
        }
    }
}

pub fn conjugate_basis(b: &CanonicalBasis) -> ConjugateBasis {
    ConjugateBasis {
        phi_star: b.phi.iter().map(L2Fn::conj).collect(),
        psi_star: b.psi.iter().map(L2Fn::conj).collect(),
    }
}

/// `f(t) = F(t)/conj(D̲(t))` off the atoms, zero on them, for a polynomial `F`
/// given by ascending coefficients. An isometry from `H²` into `L²_μ`.
pub fn lift_h2_isometry(f: &[Complex64], b: &CanonicalBasis) -> Result<L2Fn> {
    let szego = b
        .szego
        .as_ref()
        .ok_or(Error::SzegoFails(b.mu.szego().integral))?;
    let grid = b.mu.grid();
    let fv = eval_power_series(grid, f)?;
    let values = fv
        .values()
        .iter()
        .zip(szego.boundary().values())
        .map(|(v, d)| v / d.conj())
        .collect();
    L2Fn::vanishing_on_atoms(&GridFunction::new(grid.clone(), values)?, &b.mu)
}
