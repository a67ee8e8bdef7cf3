use std::fmt::Write;

use schur_opuc::io::{
    AtomRecord, BasisRecord, FunctionRecord, MatrixRecord, Pair, PcontRecord, ProbeRecord,
    RationalRecord,
};
use serde::Serialize;

use crate::Format;

#[derive(Debug, Serialize)]
pub struct TripleReport {
    pub format: String,
    pub command: String,
    pub grid: usize,
    pub schur: FunctionRecord,
    pub caratheodory: FunctionRecord,
    pub atoms: Vec<AtomRecord>,
    pub total_mass: f64,
    pub szego_integral: f64,
    pub boundary_identity: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct SzegoReport {
    pub format: String,
    pub command: String,
    pub grid: usize,
    pub holds: bool,
    pub integral: f64,
    pub refinement: Option<[f64; 3]>,
    pub taylor: Option<Vec<Pair>>,
    pub rational: Option<RationalRecord>,
}

#[derive(Debug, Serialize)]
pub struct OpucReport {
    pub format: String,
    pub command: String,
    pub grid: usize,
    pub phi: Vec<Vec<Pair>>,
    pub verblunsky: Vec<Pair>,
    pub schur_parameters: Option<Vec<Pair>>,
    pub min_eigenvalue: f64,
    pub condition: f64,
}

#[derive(Debug, Serialize)]
pub struct BasisReport {
    pub command: String,
    pub gram_deviation: f64,
    pub basis: BasisRecord,
}

#[derive(Debug, Serialize)]
pub struct SimplicitySummary {
    pub max_hf: f64,
    pub max_hg: f64,
    pub psi_shift_defect: f64,
}

#[derive(Debug, Serialize)]
pub struct ColligationReport {
    pub format: String,
    pub command: String,
    pub grid: usize,
    pub order: Vec<String>,
    pub gram_deviation: f64,
    pub matrix: MatrixRecord,
    pub probes: Vec<ProbeRecord>,
    /// Largest gap between the probes and `Θ`.
    pub probe_error: f64,
    pub simplicity: SimplicitySummary,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Report {
    Triple(TripleReport),
    Szego(SzegoReport),
    Opuc(OpucReport),
    Basis(BasisReport),
    Colligation(ColligationReport),
    Pcont(PcontRecord),
}

fn cx(p: &Pair) -> String {
    if p[1].is_sign_negative() {
        format!("{:.12e} - {:.12e}i", p[0], -p[1])
    } else {
        format!("{:.12e} + {:.12e}i", p[0], p[1])
    }
}

fn function(out: &mut String, name: &str, f: &FunctionRecord) {
    match f {
        FunctionRecord::Constant { value } => {
            let _ = writeln!(out, "{name}: constant {}", cx(value));
        }
        FunctionRecord::Rational { num, den } => {
            let _ = writeln!(out, "{name}: rational");
            for (k, a) in num.iter().enumerate() {
                let _ = writeln!(out, "  num[{k}] {}", cx(a));
            }
            for (k, a) in den.iter().enumerate() {
                let _ = writeln!(out, "  den[{k}] {}", cx(a));
            }
        }
        FunctionRecord::Taylor { coeffs } => {
            let _ = writeln!(out, "{name}: taylor, {} coefficients", coeffs.len());
            for (k, a) in coeffs.iter().enumerate().take(8) {
                let _ = writeln!(out, "  [{k}] {}", cx(a));
            }
        }
    }
}

fn opt(v: Option<f64>) -> String {
    v.map_or("-".into(), |x| format!("{x:.3e}"))
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Text => self.text(),
        }
    }

    fn text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Triple(r) => {
                let _ = writeln!(out, "triple on n = {}", r.grid);
                function(&mut out, "schur", &r.schur);
                function(&mut out, "caratheodory", &r.caratheodory);
                let _ = writeln!(out, "total mass: {:.15}", r.total_mass);
                for a in &r.atoms {
                    let _ = writeln!(out, "atom: index {} mass {:.15}", a.index, a.mass);
                }
                let _ = writeln!(out, "mean log density: {:.6}", r.szego_integral);
                let _ = writeln!(out, "boundary identity: {}", opt(r.boundary_identity));
            }
            Report::Szego(r) => {
                let _ = writeln!(out, "szego on n = {}", r.grid);
                let _ = writeln!(out, "condition holds: {}", r.holds);
                let _ = writeln!(out, "integral: {:.15}", r.integral);
                if let Some(t) = &r.taylor {
                    for (k, a) in t.iter().enumerate().take(8) {
                        let _ = writeln!(out, "  d[{k}] {}", cx(a));
                    }
                }
                let _ = writeln!(out, "closed form: {}", if r.rational.is_some() { "yes" } else { "no" });
            }
            Report::Opuc(r) => {
                let _ = writeln!(out, "opuc on n = {}, degree {}", r.grid, r.phi.len() - 1);
                let _ = writeln!(out, "{:>4}  {:>44}", "n", "gamma_n");
                for (k, g) in r.verblunsky.iter().enumerate() {
                    let _ = writeln!(out, "{k:>4}  {:>44}", cx(g));
                }
                let _ = writeln!(
                    out,
                    "moment matrix: min eigenvalue {:.3e}, condition {:.3e}",
                    r.min_eigenvalue, r.condition
                );
            }
            Report::Basis(r) => {
                let _ = writeln!(
                    out,
                    "basis on n = {}: {} phi, {} psi, {} atoms",
                    r.basis.grid,
                    r.basis.phi.len(),
                    r.basis.psi.len(),
                    r.basis.atoms.len()
                );
                let _ = writeln!(out, "gram deviation: {:.3e}", r.gram_deviation);
            }
            Report::Colligation(r) => {
                let _ = writeln!(out, "colligation on n = {}, size {}", r.grid, r.matrix.rows);
                let _ = writeln!(out, "gram deviation: {:.3e}", r.gram_deviation);
                let _ = writeln!(out, "{:>44}  {:>44}", "zeta", "theta(zeta)");
                for p in &r.probes {
                    let _ = writeln!(out, "{:>44}  {:>44}", cx(&p.zeta), cx(&p.value));
                }
                let _ = writeln!(out, "probe error: {:.3e}", r.probe_error);
                let _ = writeln!(
                    out,
                    "simplicity: hf {:.3e}, hg {:.3e}, psi shift {:.3e}",
                    r.simplicity.max_hf, r.simplicity.max_hg, r.simplicity.psi_shift_defect
                );
            }
            Report::Pcont(r) => {
                let _ = writeln!(out, "szego condition: {} (integral {:.6})", r.szego_holds, r.szego_integral);
                let d = match r.d_in_pi {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "inconclusive",
                };
                let _ = writeln!(out, "D in Pi: {d}");
                let _ = writeln!(out, "identity residual: {}", opt(r.identity_residual));
                let _ = writeln!(out, "{:>6}  {:>12}", "N", "min angle");
                for (n, a) in r.levels.iter().zip(&r.angles) {
                    let _ = writeln!(out, "{n:>6}  {a:>12.3e}");
                }
                if let Some([p, s]) = r.residuals {
                    let _ = writeln!(out, "h0 residuals: phi* {p:.3e}, psi {s:.3e}");
                }
                let _ = writeln!(
                    out,
                    "verdict: {}/{}",
                    r.verdict,
                    if r.agreement { "agree" } else { "disagree" }
                );
            }
        }
        out
    }
}
