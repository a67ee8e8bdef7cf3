//! Acceptance criteria, one line per criterion.
//!
//! Runs without the libtest harness so the report is always printed. Exits
//! nonzero when a gating criterion fails; criterion 9 is an empirical
//! control and only warns.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::*;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schur_opuc::colligation::{characteristic_function, Colligation};
use schur_opuc::grid_fourier::UnitGrid;
use schur_opuc::opuc_basis::{
    conjugate_basis, gram_schmidt_basis, lift_h2_isometry, moments, schur_algorithm,
    szego_recursion, CanonicalBasis,
};
use schur_opuc::pcont::{
    full_verdict_for_schur, h0_witness, normalize_witnesses, criterion_szego_d,
    subspace_intersection_indicator, PcontConfig, Verdict,
};
use schur_opuc::rational_hardy::RationalFn;
use schur_opuc::triples::{
    boundary_identity_check, caratheodory_to_measure, caratheodory_to_schur, gram,
    identity_deviation, inner, measure_to_caratheodory, norm, schur_to_caratheodory,
    schur_to_measure, szego_function, test_lattice, CircleMeasure, SchurFn,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn half_zeta() -> SchurFn {
    SchurFn::rational(RationalFn::new(vec![r(0.0), r(0.5)], vec![r(1.0)]).unwrap()).unwrap()
}

fn lebesgue_baseline() -> Outcome {
    let grid = UnitGrid::new(2048).unwrap();
    let mu = CircleMeasure::lebesgue(&grid);
    let start = Instant::now();
    let b = CanonicalBasis::build(&mu, 32, 32).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    let mut err: f64 = 0.0;
    for (k, phi) in b.opuc().phi().iter().enumerate() {
        for (j, a) in phi.iter().enumerate() {
            let e = if j == k { 1.0 } else { 0.0 };
            err = err.max((a - e).norm());
        }
    }
    for (k, psi) in b.psi().iter().enumerate() {
        for (&t, v) in grid.points().iter().zip(psi.ac()) {
            err = err.max((v - t.powu(k as u32 + 1)).norm());
        }
    }
    outcome(
        err < 1e-12 && elapsed < 1.0,
        format!("max error {err:.2e}, build {elapsed:.3}s"),
    )
}

fn triple_round_trips() -> Outcome {
    let grid = UnitGrid::new(2048).unwrap();
    let suite = [
        SchurFn::Constant(r(0.0)),
        SchurFn::Constant(r(0.5)),
        half_zeta(),
        SchurFn::rational(blaschke_factor(r(0.5)).scale(r(0.3))).unwrap(),
    ];
    let (mut lattice, mut identity): (f64, f64) = (0.0, 0.0);
    for theta in &suite {
        let phi = schur_to_caratheodory(theta).unwrap();
        let mu = caratheodory_to_measure(&phi, &grid).unwrap();
        let back = caratheodory_to_schur(&measure_to_caratheodory(&mu)).unwrap();
        for z in test_lattice() {
            lattice = lattice.max((back.eval(z).unwrap() - theta.eval(z).unwrap()).norm());
        }
        identity = identity.max(boundary_identity_check(theta, &phi, &grid).unwrap());
    }
    outcome(
        lattice < 1e-8 && identity < 1e-10,
        format!("lattice error {lattice:.2e}, boundary identity {identity:.2e}"),
    )
}

fn szego_closed_forms() -> Outcome {
    let grid = UnitGrid::new(2048).unwrap();
    let s = 0.75f64.sqrt();
    let poly_weight =
        CircleMeasure::weight_from_re_rational(&grid, RationalFn::polynomial(vec![r(1.25), r(-1.0)]).unwrap())
            .unwrap();
    let poly_d: Vec<Complex64> = (0..32)
        .map(|k| match k {
            0 => r(1.0),
            1 => r(-0.5),
            _ => r(0.0),
        })
        .collect();
    let bs = CircleMeasure::bernstein_szego(&grid, r(0.5)).unwrap();
    let bs_d: Vec<Complex64> = (0..32).map(|k| r(s * 0.5f64.powi(k))).collect();
    let (mut coeff, mut modulus): (f64, f64) = (0.0, 0.0);
    for (mu, expected) in [(poly_weight, poly_d), (bs, bs_d)] {
        let d = szego_function(&mu, 256).unwrap();
        for (a, e) in d.taylor().iter().zip(&expected) {
            coeff = coeff.max((a - e).norm());
        }
        for (v, w) in d.boundary().values().iter().zip(mu.density()) {
            modulus = modulus.max((v.norm_sqr() - w).abs());
        }
    }
    outcome(
        coeff < 1e-8 && modulus < 1e-6,
        format!("coefficient error {coeff:.2e}, |D|^2 - w {modulus:.2e}"),
    )
}

fn basis_orthonormality() -> Outcome {
    let grid = UnitGrid::new(4096).unwrap();
    let measures = [
        CircleMeasure::bernstein_szego(&grid, r(0.5)).unwrap(),
        mixture(&grid),
        CircleMeasure::lebesgue(&grid),
    ];
    let mut worst: f64 = 0.0;
    for mu in &measures {
        let b = CanonicalBasis::build(mu, 10, 10).unwrap();
        let g = gram(&b.all(), mu);
        assert_eq!(g.nrows(), 21);
        worst = worst.max(identity_deviation(&g));
    }
    outcome(worst < 1e-7, format!("max Gram deviation {worst:.2e}"))
}

fn oracle_equivalence() -> Outcome {
    let grid = UnitGrid::new(4096).unwrap();
    let n = 16;
    let mut coeff: f64 = 0.0;
    for (_, mu) in suite_measures(&grid) {
        let gs = gram_schmidt_basis(&mu, n).unwrap();
        let rec = szego_recursion(&moments(&mu, n).unwrap()).unwrap();
        coeff = coeff.max(rec.max_coeff_diff(&gs));
    }
    let mut params: f64 = 0.0;
    let mut thetas: Vec<SchurFn> = BS_GAMMAS
        .iter()
        .map(|&(re, im)| SchurFn::Constant(c(re, im)))
        .collect();
    thetas.push(half_zeta());
    for theta in &thetas {
        let mu = schur_to_measure(theta, &grid).unwrap();
        let rec = szego_recursion(&moments(&mu, n).unwrap()).unwrap();
        let schur = schur_algorithm(theta, n - 1).unwrap();
        for (a, b) in schur.gammas.iter().zip(rec.verblunsky()) {
            params = params.max((a - b).norm());
        }
    }
    outcome(
        coeff < 1e-9 && params < 1e-9,
        format!("recursion vs Gram-Schmidt {coeff:.2e}, Schur vs Verblunsky {params:.2e}"),
    )
}

/// Rounding level below which a change in error is not a trend.
const NOISE_FLOOR: f64 = 1e-13;

fn characteristic_consistency() -> Outcome {
    let grid = UnitGrid::new(4096).unwrap();
    let points = [c(0.3, 0.0), c(0.0, 0.5), c(-0.4, 0.0)];
    let mut worst64: f64 = 0.0;
    let mut trend = true;
    let mut errs = Vec::new();
    for theta in [SchurFn::Constant(r(0.0)), SchurFn::Constant(r(0.5)), half_zeta()] {
        let mu = schur_to_measure(&theta, &grid).unwrap();
        let mut per_level = Vec::new();
        for n in [64, 128] {
            let col = Colligation::build(&CanonicalBasis::build(&mu, n, n).unwrap()).unwrap();
            let mut e: f64 = 0.0;
            for z in points {
                e = e.max((characteristic_function(&col, z).unwrap() - theta.eval(z).unwrap()).norm());
            }
            per_level.push(e);
        }
        worst64 = worst64.max(per_level[0]);
        trend &= per_level[1] <= per_level[0].max(NOISE_FLOOR);
        errs.push(format!("{:.1e}->{:.1e}", per_level[0], per_level[1]));
    }
    outcome(
        worst64 < 1e-5 && trend,
        format!("error N=64 -> N=128: {}", errs.join(", ")),
    )
}

fn positive_suite() -> Outcome {
    let grid = UnitGrid::new(4096).unwrap();
    let cfg = PcontConfig::default();
    let mut failures = Vec::new();
    let (mut res, mut nrm, mut id): (f64, f64, f64) = (0.0, 0.0, 0.0);
    let suite = common::positive_suite();
    for (name, theta) in &suite {
        let v = full_verdict_for_schur(theta, &grid, &cfg).unwrap();
        let w = v.witness.as_ref();
        let (rp, rs) = v.basis_criterion.h0_residuals.unwrap_or((f64::INFINITY, f64::INFINITY));
        res = res.max(rp).max(rs);
        nrm = nrm.max(w.map_or(f64::INFINITY, |w| (w.norm - 1.0).abs()));
        id = id.max(v.szego.identity_residual.unwrap_or(f64::INFINITY));
        if !(v.agreement && v.basis_criterion.verdict == Verdict::Intersects) {
            failures.push(name.to_string());
        }
    }
    outcome(
        failures.is_empty() && res < 1e-6 && nrm < 1e-7 && id < 1e-7,
        format!(
            "{}/{} agree, max residual {res:.2e}, max |norm-1| {nrm:.2e}, identity {id:.2e}{}",
            suite.len() - failures.len(),
            suite.len(),
            if failures.is_empty() {
                String::new()
            } else {
                format!(", disagreeing: {}", failures.join(", "))
            }
        ),
    )
}

fn exact_witness() -> Outcome {
    let grid = UnitGrid::new(4096).unwrap();
    let theta = SchurFn::Constant(r(0.5));
    let mu = CircleMeasure::bernstein_szego(&grid, r(0.5)).unwrap();
    let crit = criterion_szego_d(&theta, &mu).unwrap();
    let (i1, _) = normalize_witnesses(crit.i1.as_ref().unwrap(), crit.i2.as_ref().unwrap());
    let b = CanonicalBasis::build(&mu, 1, 1).unwrap();
    let cj = conjugate_basis(&b);
    let w = h0_witness(&i1, &b, &cj, 1).unwrap();
    let psi1 = &b.psi()[0];
    let phi1 = &cj.phi_star[1];
    let collide = norm(&w.h0.axpy(r(-1.0), psi1), &mu).max(norm(&w.h0.axpy(r(-1.0), phi1), &mu));
    let report = subspace_intersection_indicator(&b, &cj, &[1], 1e-4).unwrap();
    let overlap = (inner(psi1, phi1, &mu) - 1.0).norm();
    outcome(
        w.residual_phi_star < 1e-12 && w.residual_psi < 1e-12 && collide < 1e-12,
        format!(
            "residuals {:.2e}/{:.2e}, |h0 - psi1|, |h0 - phi1*| <= {collide:.2e}, <psi1,phi1*> - 1 = {overlap:.2e}, verdict {}",
            w.residual_phi_star,
            w.residual_psi,
            report.verdict.as_str()
        ),
    )
}

fn negative_control() -> Outcome {
    let grid = UnitGrid::new(4096).unwrap();
    let cfg = PcontConfig {
        levels: vec![8, 16, 32],
        witness_level: 32,
        ..PcontConfig::default()
    };
    let v = full_verdict_for_schur(&exp_control(64), &grid, &cfg).unwrap();
    let a = &v.basis_criterion.min_principal_angle;
    let non_decreasing = a.windows(2).all(|w| w[1] >= w[0]);
    outcome(
        a.iter().all(|&x| x > 0.05) && non_decreasing && v.basis_criterion.verdict == Verdict::Separated,
        format!(
            "angles {:?}, verdict {}",
            a.iter().map(|x| format!("{x:.2e}")).collect::<Vec<_>>(),
            v.basis_criterion.verdict.as_str()
        ),
    )
}

fn isometry() -> Outcome {
    let grid = UnitGrid::new(4096).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let polys: Vec<Vec<Complex64>> = (0..20)
        .map(|_| {
            let deg = rng.random_range(0..=10);
            (0..=deg)
                .map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                .collect()
        })
        .collect();
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for (_, mu) in suite_measures(&grid) {
        if !mu.szego().holds {
            continue;
        }
        count += 1;
        let b = CanonicalBasis::build(&mu, 1, 1).unwrap();
        for f in &polys {
            let h2 = f.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
            worst = worst.max((norm(&lift_h2_isometry(f, &b).unwrap(), &mu) - h2).abs());
        }
    }
    outcome(worst < 1e-8, format!("{count} measures, max |norm difference| {worst:.2e}"))
}

/// Number, name, check, and whether a failure fails the build.
type Criterion = (u32, &'static str, fn() -> Outcome, bool);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "Lebesgue baseline", lebesgue_baseline, true),
        (2, "triple round trips", triple_round_trips, true),
        (3, "Szego function closed forms", szego_closed_forms, true),
        (4, "canonical basis orthonormality", basis_orthonormality, true),
        (5, "oracle equivalence", oracle_equivalence, true),
        (6, "characteristic function", characteristic_consistency, true),
        (7, "pseudocontinuability positive suite", positive_suite, true),
        (8, "exact witness", exact_witness, true),
        (9, "negative control exp(z-1)", negative_control, false),
        (10, "H2 isometry", isometry, true),
    ];
    let mut failed = 0;
    for (id, name, run, gating) in criteria {
        let o = run();
        let status = match (o.pass, gating) {
            (true, _) => "PASS",
            (false, true) => {
                failed += 1;
                "FAIL"
            }
            (false, false) => "WARN",
        };
        println!("criterion {id:>2} {status} {name}: {}", o.detail);
    }
    if failed == 0 {
        println!("acceptance: all gating criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} gating criteria failed");
        ExitCode::FAILURE
    }
}
