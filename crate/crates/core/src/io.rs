//! JSON records for inputs and reports.
//!
//! Every document carries `"format": "schur-opuc/1"` and unknown fields are
//! rejected. Complex numbers are `[re, im]` pairs.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::colligation::BasisLabel;
use crate::error::{Error, Result};
use crate::grid_fourier::UnitGrid;
use crate::opuc_basis::CanonicalBasis;
use crate::pcont::PcontVerdict;
use crate::rational_hardy::{BlaschkeProduct, RationalFn, Root};
use crate::triples::{Atom, CaratheodoryFn, CircleMeasure, SchurFn};

pub const FORMAT: &str = "schur-opuc/1";

pub type Pair = [f64; 2];

pub fn pair(z: Complex64) -> Pair {
    [z.re, z.im]
}

pub fn complex(p: Pair) -> Complex64 {
    Complex64::new(p[0], p[1])
}

fn pairs(v: &[Complex64]) -> Vec<Pair> {
    v.iter().copied().map(pair).collect()
}

fn complexes(v: &[Pair]) -> Vec<Complex64> {
    v.iter().copied().map(complex).collect()
}

/// Ascending coefficient arrays; canonical form has a monic denominator and
/// no trailing zeros.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalRecord {
    pub num: Vec<Pair>,
    pub den: Vec<Pair>,
}

impl RationalRecord {
    pub fn from_rational(r: &RationalFn) -> Self {
        Self {
            num: pairs(r.num()),
            den: pairs(r.den()),
        }
    }

    pub fn to_rational(&self) -> Result<RationalFn> {
        RationalFn::new(complexes(&self.num), complexes(&self.den))
    }
}

/// A Schur or Carathéodory function.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FunctionRecord {
    Constant { value: Pair },
    Rational { num: Vec<Pair>, den: Vec<Pair> },
    Taylor { coeffs: Vec<Pair> },
}

impl FunctionRecord {
    pub fn from_rational(r: &RationalFn) -> Self {
        FunctionRecord::Rational {
            num: pairs(r.num()),
            den: pairs(r.den()),
        }
    }

    pub fn from_schur(f: &SchurFn) -> Self {
        match f {
            SchurFn::Constant(c) => FunctionRecord::Constant { value: pair(*c) },
            SchurFn::Rational(r) => Self::from_rational(r),
            SchurFn::Taylor(a) => FunctionRecord::Taylor { coeffs: pairs(a) },
        }
    }

    pub fn to_schur(&self) -> Result<SchurFn> {
        match self {
            FunctionRecord::Constant { value } => SchurFn::constant(complex(*value)),
            FunctionRecord::Rational { num, den } => {
                SchurFn::rational(RationalFn::new(complexes(num), complexes(den))?)
            }
            FunctionRecord::Taylor { coeffs } => SchurFn::taylor(complexes(coeffs)),
        }
    }

    pub fn to_caratheodory(&self) -> Result<CaratheodoryFn> {
        match self {
            FunctionRecord::Constant { value } => {
                let f = CaratheodoryFn::Constant(complex(*value));
                f.validate()?;
                Ok(f)
            }
            FunctionRecord::Rational { num, den } => {
                CaratheodoryFn::rational(RationalFn::new(complexes(num), complexes(den))?)
            }
            FunctionRecord::Taylor { coeffs } => {
                let f = CaratheodoryFn::Taylor(complexes(coeffs));
                f.validate()?;
                Ok(f)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomRecord {
    pub index: usize,
    pub mass: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DensityRecord {
    Lebesgue,
    /// Density samples on the grid; fixes the grid size.
    Samples { values: Vec<f64> },
    /// `w = Re R` on the circle.
    ReRational { num: Vec<Pair>, den: Vec<Pair> },
    BernsteinSzego { gamma: Pair },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasureRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<usize>,
    pub density: DensityRecord,
    #[serde(default)]
    pub atoms: Vec<AtomRecord>,
}

impl MeasureRecord {
    /// Builds the measure. `grid` overrides the record's grid size except for
    /// sampled densities, where the two must agree.
    pub fn to_measure(&self, grid: Option<usize>) -> Result<CircleMeasure> {
        let n = match (&self.density, grid.or(self.grid)) {
            (DensityRecord::Samples { values }, g) => {
                if let Some(g) = g.filter(|&g| g != values.len()) {
                    return Err(Error::GridMismatch {
                        expected: g,
                        got: values.len(),
                    });
                }
                values.len()
            }
            (_, Some(g)) => g,
            (_, None) => crate::grid_fourier::DEFAULT_GRID,
        };
        let g = UnitGrid::new(n)?;
        let atoms: Vec<Atom> = self
            .atoms
            .iter()
            .map(|a| Atom {
                index: a.index,
                mass: a.mass,
            })
            .collect();
        match &self.density {
            DensityRecord::Lebesgue if atoms.is_empty() => Ok(CircleMeasure::lebesgue(&g)),
            DensityRecord::Lebesgue => {
                let ac = 1.0 - atoms.iter().map(|a| a.mass).sum::<f64>();
                CircleMeasure::new(&g, vec![ac; n], atoms)
            }
            DensityRecord::Samples { values } => CircleMeasure::new(&g, values.clone(), atoms),
            DensityRecord::ReRational { num, den } => CircleMeasure::from_re_rational(
                &g,
                RationalFn::new(complexes(num), complexes(den))?,
                atoms,
            ),
            DensityRecord::BernsteinSzego { gamma } if atoms.is_empty() => {
                CircleMeasure::bernstein_szego(&g, complex(*gamma))
            }
            DensityRecord::BernsteinSzego { .. } => Err(Error::InvalidMeasure(
                "a Bernstein-Szego measure carries no atoms".into(),
            )),
        }
    }
}

/// Input document: exactly one of `schur`, `caratheodory`, `measure`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDoc {
    pub format: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schur: Option<FunctionRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caratheodory: Option<FunctionRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub measure: Option<MeasureRecord>,
}

/// The one object an input document describes.
#[derive(Clone, Debug, PartialEq)]
pub enum Input {
    Schur(FunctionRecord),
    Caratheodory(FunctionRecord),
    Measure(MeasureRecord),
}

impl InputDoc {
    pub fn schur(f: FunctionRecord) -> Self {
        Self {
            format: FORMAT.into(),
            schur: Some(f),
            caratheodory: None,
            measure: None,
        }
    }

    pub fn caratheodory(f: FunctionRecord) -> Self {
        Self {
            format: FORMAT.into(),
            schur: None,
            caratheodory: Some(f),
            measure: None,
        }
    }

    pub fn measure(m: MeasureRecord) -> Self {
        Self {
            format: FORMAT.into(),
            schur: None,
            caratheodory: None,
            measure: Some(m),
        }
    }

    pub fn into_input(self) -> Result<Input> {
        if self.format != FORMAT {
            return Err(Error::Parse(format!(
                "unsupported format {:?}, expected {FORMAT:?}",
                self.format
            )));
        }
        match (self.schur, self.caratheodory, self.measure) {
            (Some(f), None, None) => Ok(Input::Schur(f)),
            (None, Some(f), None) => Ok(Input::Caratheodory(f)),
            (None, None, Some(m)) => Ok(Input::Measure(m)),
            _ => Err(Error::Parse(
                "exactly one of schur, caratheodory, measure is required".into(),
            )),
        }
    }
}

pub fn parse_input(text: &str) -> Result<Input> {
    let doc: InputDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.into_input()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootRecord {
    pub value: Pair,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlaschkeRecord {
    pub constant: Pair,
    pub zeros: Vec<RootRecord>,
}

impl BlaschkeRecord {
    pub fn from_blaschke(b: &BlaschkeProduct) -> Self {
        Self {
            constant: pair(b.constant()),
            zeros: b
                .zeros()
                .iter()
                .map(|r| RootRecord {
                    value: pair(r.value),
                    multiplicity: r.multiplicity,
                })
                .collect(),
        }
    }

    pub fn to_blaschke(&self) -> Result<BlaschkeProduct> {
        BlaschkeProduct::new(
            complex(self.constant),
            self.zeros
                .iter()
                .map(|r| Root {
                    value: complex(r.value),
                    multiplicity: r.multiplicity,
                })
                .collect(),
        )
    }
}

/// Dense complex matrix, row-major.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixRecord {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Pair>>,
}

impl MatrixRecord {
    pub fn from_matrix(m: &DMatrix<Complex64>) -> Self {
        Self {
            rows: m.nrows(),
            cols: m.ncols(),
            data: (0..m.nrows())
                .map(|i| (0..m.ncols()).map(|j| pair(m[(i, j)])).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<DMatrix<Complex64>> {
        if self.data.len() != self.rows || self.data.iter().any(|r| r.len() != self.cols) {
            return Err(Error::Parse("matrix shape does not match its data".into()));
        }
        Ok(DMatrix::from_fn(self.rows, self.cols, |i, j| {
            complex(self.data[i][j])
        }))
    }
}

pub fn label(l: &BasisLabel) -> String {
    match l {
        BasisLabel::Phi(k) => format!("phi{k}"),
        BasisLabel::Psi(k) => format!("psi{k}"),
    }
}

/// `φ` coefficients (row `n` holds `α_{n,0..n}`), `γ`, `ψ` samples on the
/// grid and the atom indices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisRecord {
    pub format: String,
    pub grid: usize,
    pub phi: Vec<Vec<Pair>>,
    pub gamma: Vec<Pair>,
    pub psi: Vec<Vec<Pair>>,
    pub atoms: Vec<usize>,
}

impl BasisRecord {
    pub fn from_basis(b: &CanonicalBasis) -> Self {
        let mu = b.measure();
        Self {
            format: FORMAT.into(),
            grid: mu.grid().n(),
            phi: b.opuc().phi().iter().map(|row| pairs(row)).collect(),
            gamma: pairs(b.opuc().verblunsky()),
            psi: b
                .psi()
                .iter()
                .map(|f| pairs(f.samples(mu).values()))
                .collect(),
            atoms: b.atom_set(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbeRecord {
    pub zeta: Pair,
    pub value: Pair,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PcontRecord {
    pub format: String,
    pub szego_holds: bool,
    pub szego_integral: f64,
    /// `null` when the factorization path is inconclusive.
    pub d_in_pi: Option<bool>,
    pub i1: Option<BlaschkeRecord>,
    pub i2: Option<BlaschkeRecord>,
    pub identity_residual: Option<f64>,
    pub levels: Vec<usize>,
    pub angles: Vec<f64>,
    pub residuals: Option<Pair>,
    pub h0_norm: Option<f64>,
    pub verdict: String,
    pub agreement: bool,
}

impl PcontRecord {
    pub fn from_verdict(v: &PcontVerdict) -> Self {
        let b = &v.basis_criterion;
        Self {
            format: FORMAT.into(),
            szego_holds: v.szego.szego_holds,
            szego_integral: v.szego.szego_integral,
            d_in_pi: v.szego.d_in_pi,
            i1: v.szego.i1.as_ref().map(BlaschkeRecord::from_blaschke),
            i2: v.szego.i2.as_ref().map(BlaschkeRecord::from_blaschke),
            identity_residual: v.szego.identity_residual,
            levels: b.sizes.clone(),
            angles: b.min_principal_angle.clone(),
            residuals: b.h0_residuals.map(|(a, c)| [a, c]),
            h0_norm: v.witness.as_ref().map(|w| w.norm),
            verdict: b.verdict.as_str().into(),
            agreement: v.agreement,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorRecord {
    pub format: String,
    pub code: i32,
    pub kind: String,
    pub message: String,
}

impl ErrorRecord {
    pub fn from_error(e: &Error) -> Self {
        Self {
            format: FORMAT.into(),
            code: e.code(),
            kind: e.kind().into(),
            message: e.to_string(),
        }
    }
}
