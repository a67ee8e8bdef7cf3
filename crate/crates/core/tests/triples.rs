mod common;

use common::*;
use num_complex::Complex64;
use schur_opuc::grid_fourier::UnitGrid;
use schur_opuc::rational_hardy::RationalFn;
use schur_opuc::triples::{
    boundary_identity_check, caratheodory_to_measure, caratheodory_to_schur, measure_moments,
    measure_to_caratheodory, schur_to_caratheodory, schur_to_measure, szego_function,
    test_lattice, CaratheodoryFn, CircleMeasure, SchurFn,
};
use schur_opuc::Error;

/// `c_k` by direct summation over grid and atoms.
fn naive_moment(mu: &CircleMeasure, k: i32) -> Complex64 {
    let n = mu.grid().n() as f64;
    let t = mu.grid().points();
    let ac: Complex64 = t
        .iter()
        .zip(mu.density())
        .map(|(t, &w)| t.powi(-k) * w)
        .sum::<Complex64>()
        / n;
    ac + mu
        .atoms()
        .iter()
        .map(|a| t[a.index].powi(-k) * a.mass)
        .sum::<Complex64>()
}

#[test]
fn moments_match_direct_sum() {
    let g = UnitGrid::new(512).unwrap();
    for (name, mu) in suite_measures(&g) {
        let c = measure_moments(&mu, 12).unwrap();
        for (k, ck) in c.iter().enumerate() {
            assert!((ck - naive_moment(&mu, k as i32)).norm() < 1e-13, "{name} k={k}");
        }
    }
}

#[test]
fn bernstein_szego_caratheodory_closed_form() {
    let g = UnitGrid::new(1024).unwrap();
    for (re, im) in BS_GAMMAS {
        let gamma = c(re, im);
        let mu = CircleMeasure::bernstein_szego(&g, gamma).unwrap();
        let phi = measure_to_caratheodory(&mu);
        for z in test_lattice().into_iter().filter(|z| z.norm() < 0.7) {
            let closed = (1.0 + gamma * z) / (1.0 - gamma * z);
            assert!((phi.eval(z).unwrap() - closed).norm() < 1e-11, "{gamma} {z}");
        }
    }
}

#[test]
fn constant_schur_to_caratheodory() {
    let phi = schur_to_caratheodory(&SchurFn::Constant(r(0.5))).unwrap();
    for z in test_lattice() {
        let closed = (1.0 + z * 0.5) / (1.0 - z * 0.5);
        assert!((phi.eval(z).unwrap() - closed).norm() < 1e-13);
    }
    let back = caratheodory_to_schur(&phi).unwrap();
    for z in test_lattice() {
        assert!((back.eval(z).unwrap() - 0.5).norm() < 1e-13);
    }
}

#[test]
fn identity_caratheodory_has_atom() {
    // Φ = (1 + ζ)/(1 − ζ) ↔ Θ ≡ 1, μ = δ₁
    let g = UnitGrid::new(256).unwrap();
    let phi = CaratheodoryFn::rational(RationalFn::new(vec![r(1.0), r(1.0)], vec![r(1.0), r(-1.0)]).unwrap()).unwrap();
    let theta = caratheodory_to_schur(&phi).unwrap();
    assert!((theta.eval(c(0.2, 0.3)).unwrap() - 1.0).norm() < 1e-13);
    let mu = caratheodory_to_measure(&phi, &g).unwrap();
    assert_eq!(mu.atoms().len(), 1);
    assert_eq!(mu.atoms()[0].index, 0);
    assert!((mu.atoms()[0].mass - 1.0).abs() < 1e-12);
    assert!(mu.density().iter().all(|w| w.abs() < 1e-12));
}

#[test]
fn taylor_schur_measure_of_exp() {
    // exp(ζ − 1) touches 1 at ζ = 1: atom of mass 1/(1·(ζΘ)'(1)) = ½
    let g = UnitGrid::new(2048).unwrap();
    let mu = schur_to_measure(&exp_control(64), &g).unwrap();
    assert_eq!(mu.atoms().len(), 1);
    assert!((mu.atoms()[0].mass - 0.5).abs() < 1e-10);
    assert!((mu.total_mass() - 1.0).abs() < 1e-8);
    assert!(mu.szego().holds);
}

#[test]
fn measure_round_trip_for_rational_suite() {
    let g = UnitGrid::new(2048).unwrap();
    for (name, theta) in positive_suite() {
        let phi = schur_to_caratheodory(&theta).unwrap();
        assert!(boundary_identity_check(&theta, &phi, &g).unwrap() < 1e-10, "{name}");
        let mu = caratheodory_to_measure(&phi, &g).unwrap();
        assert!((mu.total_mass() - 1.0).abs() < 1e-10, "{name}");
        let back = caratheodory_to_schur(&measure_to_caratheodory(&mu)).unwrap();
        for z in test_lattice() {
            assert!((back.eval(z).unwrap() - theta.eval(z).unwrap()).norm() < 1e-8, "{name}");
        }
    }
}

#[test]
fn szego_function_of_suite() {
    let g = UnitGrid::new(2048).unwrap();
    for (name, mu) in suite_measures(&g) {
        let d = szego_function(&mu, 128).unwrap();
        assert!(d.d0() > 0.0 && d.taylor()[0].im.abs() < 1e-15, "{name}");
        for (v, w) in d.boundary().values().iter().zip(mu.density()) {
            assert!((v.norm_sqr() - w).abs() < 1e-6, "{name}");
        }
        if let Some(closed) = d.rational() {
            for z in test_lattice() {
                assert!((closed.eval(z).unwrap() - d.eval(z).unwrap()).norm() < 1e-8, "{name}");
            }
        }
    }
}

#[test]
fn invalid_inputs() {
    assert!(matches!(SchurFn::constant(r(1.5)), Err(Error::NotSchur { .. })));
    let pole = RationalFn::new(vec![r(0.1)], vec![r(-0.5), r(1.0)]).unwrap();
    assert!(matches!(SchurFn::rational(pole), Err(Error::PoleInClosedDisk(_))));
    let unnormalized = CaratheodoryFn::rational(RationalFn::constant(r(2.0)));
    assert!(matches!(unnormalized, Err(Error::Normalization(_))));
    let negative = CaratheodoryFn::rational(RationalFn::polynomial(vec![r(1.0), r(2.0)]).unwrap());
    assert!(matches!(negative, Err(Error::NotCaratheodory(_))));
    let g = UnitGrid::new(64).unwrap();
    assert!(matches!(
        CircleMeasure::new(&g, vec![0.5; 64], vec![]),
        Err(Error::InvalidMeasure(_))
    ));
}
