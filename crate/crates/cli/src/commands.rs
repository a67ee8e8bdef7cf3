use clap::ValueEnum;
use num_complex::Complex64;
use schur_opuc::colligation::{
    build_umu_matrix, characteristic_function, split_blocks, verify_simplicity_spans,
};
use schur_opuc::grid_fourier::{UnitGrid, DEFAULT_GRID};
use schur_opuc::io::{
    pair, AtomRecord, BasisRecord, FunctionRecord, Input, MatrixRecord, PcontRecord,
    ProbeRecord, RationalRecord, FORMAT,
};
use schur_opuc::opuc_basis::{
    gram_schmidt_basis, moment_spectrum, moments, schur_algorithm, CanonicalBasis,
};
use schur_opuc::pcont::{full_verdict, PcontConfig};
use schur_opuc::triples::{
    boundary_identity_check, caratheodory_to_measure, caratheodory_to_schur, gram,
    identity_deviation, measure_to_caratheodory, schur_to_caratheodory, schur_to_measure,
    szego_function, CaratheodoryFn, CircleMeasure, SchurFn, DEFAULT_TAYLOR,
};
use schur_opuc::Result;

use crate::report::{
    BasisReport, ColligationReport, OpucReport, Report, SimplicitySummary, SzegoReport,
    TripleReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Triple,
    Szego,
    Opuc,
    Basis,
    Colligation,
    Pcont,
}

#[derive(Clone, Debug)]
pub struct Job {
    pub command: Command,
    pub input: Input,
    /// `None` keeps the grid of the input, or the default.
    pub grid: Option<usize>,
    pub trunc: usize,
    pub psi: usize,
    pub tol: f64,
}

const PROBES: [Complex64; 3] = [
    Complex64::new(0.3, 0.0),
    Complex64::new(0.0, 0.5),
    Complex64::new(-0.4, 0.0),
];

/// The triple behind the input: `μ` always, `Θ` and `Φ` in their exact form
/// when the input provides one.
struct Resolved {
    mu: CircleMeasure,
    theta: SchurFn,
    phi: CaratheodoryFn,
}

fn resolve(job: &Job) -> Result<Resolved> {
    let grid = || UnitGrid::new(job.grid.unwrap_or(DEFAULT_GRID));
    match &job.input {
        Input::Schur(f) => {
            let theta = f.to_schur()?;
            let phi = schur_to_caratheodory(&theta)?;
            let mu = schur_to_measure(&theta, &grid()?)?;
            Ok(Resolved { mu, theta, phi })
        }
        Input::Caratheodory(f) => {
            let phi = f.to_caratheodory()?;
            let mu = caratheodory_to_measure(&phi, &grid()?)?;
            let theta = caratheodory_to_schur(&phi)?;
            Ok(Resolved { mu, theta, phi })
        }
        Input::Measure(m) => {
            let mu = m.to_measure(job.grid)?;
            let phi = measure_to_caratheodory(&mu);
            let theta = caratheodory_to_schur(&phi)?;
            Ok(Resolved { mu, theta, phi })
        }
    }
}

fn schur_record(theta: &SchurFn, len: usize) -> Result<FunctionRecord> {
    Ok(match theta {
        SchurFn::Taylor(_) => FunctionRecord::Taylor {
            coeffs: theta.taylor_coeffs(len)?.into_iter().map(pair).collect(),
        },
        _ => FunctionRecord::from_schur(theta),
    })
}

fn caratheodory_record(phi: &CaratheodoryFn, len: usize) -> Result<FunctionRecord> {
    Ok(match phi {
        CaratheodoryFn::Rational(r) => FunctionRecord::from_rational(r),
        CaratheodoryFn::Constant(c) => FunctionRecord::Constant { value: pair(*c) },
        _ => FunctionRecord::Taylor {
            coeffs: phi.taylor_coeffs(len)?.into_iter().map(pair).collect(),
        },
    })
}

fn atoms(mu: &CircleMeasure) -> Vec<AtomRecord> {
    mu.atoms()
        .iter()
        .map(|a| AtomRecord {
            index: a.index,
            mass: a.mass,
        })
        .collect()
}

fn triple(job: &Job) -> Result<Report> {
    let r = resolve(job)?;
    let len = job.trunc + 1;
    let identity = match (&r.theta, &r.phi) {
        (SchurFn::Taylor(_), _) | (_, CaratheodoryFn::Herglotz(_)) => None,
        (theta, phi) => Some(boundary_identity_check(theta, phi, r.mu.grid())?),
    };
    Ok(Report::Triple(TripleReport {
        format: FORMAT.into(),
        command: "triple".into(),
        grid: r.mu.grid().n(),
        schur: schur_record(&r.theta, len)?,
        caratheodory: caratheodory_record(&r.phi, len.min(r.mu.grid().n() / 2))?,
        atoms: atoms(&r.mu),
        total_mass: r.mu.total_mass(),
        szego_integral: r.mu.szego().integral,
        boundary_identity: identity,
    }))
}

fn szego(job: &Job) -> Result<Report> {
    let r = resolve(job)?;
    let cond = r.mu.szego().clone();
    let (taylor, rational) = if cond.holds {
        let d = szego_function(&r.mu, DEFAULT_TAYLOR.min(r.mu.grid().n() - 1))?;
        (
            Some(d.taylor().iter().take(job.trunc + 1).copied().map(pair).collect()),
            d.rational().map(RationalRecord::from_rational),
        )
    } else {
        (None, None)
    };
    Ok(Report::Szego(SzegoReport {
        format: FORMAT.into(),
        command: "szego".into(),
        grid: r.mu.grid().n(),
        holds: cond.holds,
        integral: cond.integral,
        refinement: cond.refinement,
        taylor,
        rational,
    }))
}

fn opuc(job: &Job) -> Result<Report> {
    let r = resolve(job)?;
    let b = gram_schmidt_basis(&r.mu, job.trunc)?;
    let (min_eigenvalue, condition) = moment_spectrum(&moments(&r.mu, job.trunc)?);
    let schur_parameters = match &r.theta {
        SchurFn::Taylor(_) => None,
        theta => Some(
            schur_algorithm(theta, job.trunc - 1)?
                .gammas
                .into_iter()
                .map(pair)
                .collect(),
        ),
    };
    Ok(Report::Opuc(OpucReport {
        format: FORMAT.into(),
        command: "opuc".into(),
        grid: r.mu.grid().n(),
        phi: b
            .phi()
            .iter()
            .map(|row| row.iter().copied().map(pair).collect())
            .collect(),
        verblunsky: b.verblunsky().iter().copied().map(pair).collect(),
        schur_parameters,
        min_eigenvalue,
        condition,
    }))
}

fn basis(job: &Job) -> Result<Report> {
    let r = resolve(job)?;
    let b = CanonicalBasis::build(&r.mu, job.trunc, job.psi)?;
    Ok(Report::Basis(BasisReport {
        command: "basis".into(),
        gram_deviation: identity_deviation(&gram(&b.all(), &r.mu)),
        basis: BasisRecord::from_basis(&b),
    }))
}

fn colligation(job: &Job) -> Result<Report> {
    let r = resolve(job)?;
    let b = CanonicalBasis::build(&r.mu, job.trunc, job.psi)?;
    let u = build_umu_matrix(&b)?;
    let col = split_blocks(&u);
    let mut probes = Vec::new();
    let mut probe_error: f64 = 0.0;
    for z in PROBES {
        let value = characteristic_function(&col, z)?;
        probe_error = probe_error.max((value - r.theta.eval(z)?).norm());
        probes.push(ProbeRecord {
            zeta: pair(z),
            value: pair(value),
        });
    }
    let simplicity = verify_simplicity_spans(&col, &b);
    Ok(Report::Colligation(ColligationReport {
        format: FORMAT.into(),
        command: "colligation".into(),
        grid: r.mu.grid().n(),
        order: u.order.iter().map(schur_opuc::io::label).collect(),
        gram_deviation: u.gram_deviation,
        matrix: MatrixRecord::from_matrix(&u.matrix),
        probes,
        probe_error,
        simplicity: SimplicitySummary {
            max_hf: simplicity.max_hf(),
            max_hg: simplicity.max_hg(),
            psi_shift_defect: simplicity.psi_shift_defect,
        },
    }))
}

/// Levels `N/3, 2N/3, N`, without repeats.
fn levels(n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = [n / 3, 2 * n / 3, n].into_iter().filter(|&k| k > 0).collect();
    v.dedup();
    v
}

fn pcont(job: &Job) -> Result<Report> {
    let r = resolve(job)?;
    let cfg = PcontConfig {
        angle_tol: job.tol,
        levels: levels(job.trunc),
        witness_level: job.trunc,
        ..PcontConfig::default()
    };
    let v = full_verdict(&r.theta, &r.mu, &cfg)?;
    Ok(Report::Pcont(PcontRecord::from_verdict(&v)))
}

pub fn run(job: &Job) -> Result<Report> {
    match job.command {
        Command::Triple => triple(job),
        Command::Szego => szego(job),
        Command::Opuc => opuc(job),
        Command::Basis => basis(job),
        Command::Colligation => colligation(job),
        Command::Pcont => pcont(job),
    }
}
