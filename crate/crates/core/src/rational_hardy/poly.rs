//! Dense complex polynomials, coefficients in ascending powers.

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative size below which a trailing coefficient is dropped.
pub const TRIM_REL: f64 = 1e-14;

/// Roots closer than this are reported as one root with multiplicity.
pub const CLUSTER_RADIUS: f64 = 1e-7;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A root together with its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub value: Complex64,
    pub multiplicity: usize,
}

pub fn max_abs(p: &[Complex64]) -> f64 {
    p.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Drops trailing coefficients that are negligible relative to the largest one.
/// The zero polynomial becomes the empty vector.
pub fn trim(mut p: Vec<Complex64>) -> Vec<Complex64> {
    let scale = max_abs(&p);
    if scale == 0.0 {
        return Vec::new();
    }
    while let Some(last) = p.last() {
        if last.norm() <= TRIM_REL * scale {
            p.pop();
        } else {
            break;
        }
    }
    p
}

pub fn eval(p: &[Complex64], z: Complex64) -> Complex64 {
    p.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
}

pub fn derivative(p: &[Complex64]) -> Vec<Complex64> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| c * k as f64)
        .collect()
}

pub fn add(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![ZERO; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] += c;
    }
    out
}

pub fn sub(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    add(a, &scale(b, -ONE))
}

pub fn scale(p: &[Complex64], s: Complex64) -> Vec<Complex64> {
    p.iter().map(|&c| c * s).collect()
}

pub fn mul(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `z^k · p`.
pub fn shift_up(p: &[Complex64], k: usize) -> Vec<Complex64> {
    if p.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ZERO; k];
    out.extend_from_slice(p);
    out
}

/// `Π (z − r)` over the roots, repeated by multiplicity.
pub fn from_roots(roots: &[Root]) -> Vec<Complex64> {
    let mut p = vec![ONE];
    for r in roots {
        for _ in 0..r.multiplicity {
            p = mul(&p, &[-r.value, ONE]);
        }
    }
    p
}

/// Coefficients of `conj(p(1/conj z))·z^deg`: conjugated and reversed.
pub fn reversed_conj(p: &[Complex64]) -> Vec<Complex64> {
    p.iter().rev().map(|c| c.conj()).collect()
}

/// Roots of `p` with multiplicities.
///
/// Companion-matrix eigenvalues, one Newton step per root, then clustering
/// within [`CLUSTER_RADIUS`]. Exact zeros at the origin are split off first.
/// A nonzero constant has no roots; the zero polynomial is an error.
pub fn roots(p: &[Complex64]) -> Result<Vec<Root>> {
    let p = trim(p.to_vec());
    if p.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let low = p.iter().position(|c| *c != ZERO).unwrap_or(0);
    let q = &p[low..];
    let deg = q.len() - 1;
    let mut found: Vec<Complex64> = vec![ZERO; low];
    if deg == 1 {
        found.push(-q[0] / q[1]);
    } else if deg > 1 {
        let lead = q[deg];
        let mut companion = DMatrix::<Complex64>::zeros(deg, deg);
        for i in 1..deg {
            companion[(i, i - 1)] = ONE;
        }
        for i in 0..deg {
            companion[(i, deg - 1)] = -q[i] / lead;
        }
        let eig = Schur::try_new(companion, f64::EPSILON, 10_000)
            .and_then(|s| s.eigenvalues())
            .ok_or_else(|| Error::Unsupported("companion eigensolve did not converge".into()))?;
        let dq = derivative(q);
        for &z in eig.iter() {
            found.push(newton_polish(q, &dq, z));
        }
    }
    Ok(cluster(found))
}

fn newton_polish(p: &[Complex64], dp: &[Complex64], z: Complex64) -> Complex64 {
    let v = eval(p, z);
    let d = eval(dp, z);
    if d == ZERO {
        return z;
    }
    let next = z - v / d;
    if next.is_finite() && eval(p, next).norm() < v.norm() {
        next
    } else {
        z
    }
}

fn cluster(mut zs: Vec<Complex64>) -> Vec<Root> {
    // deterministic order: by real part, then imaginary part
    zs.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let mut groups: Vec<Vec<Complex64>> = Vec::new();
    for z in zs {
        match groups
            .iter_mut()
            .find(|g| g.iter().any(|w| (w - z).norm() <= CLUSTER_RADIUS))
        {
            Some(g) => g.push(z),
            None => groups.push(vec![z]),
        }
    }
    groups
        .into_iter()
        .map(|g| Root {
            value: g.iter().sum::<Complex64>() / g.len() as f64,
            multiplicity: g.len(),
        })
        .collect()
}

/// Flattened root list, each root repeated by multiplicity.
pub fn flatten(roots: &[Root]) -> Vec<Complex64> {
    roots
        .iter()
        .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity))
        .collect()
}

/// Taylor coefficients `0..len` of `num/den` at the origin; `den(0) ≠ 0`.
pub fn series_div(num: &[Complex64], den: &[Complex64], len: usize) -> Result<Vec<Complex64>> {
    let d0 = *den.first().ok_or(Error::ZeroPolynomial)?;
    if d0 == ZERO {
        return Err(Error::PoleInClosedDisk(ZERO));
    }
    let mut out = vec![ZERO; len];
    for k in 0..len {
        let mut acc = num.get(k).copied().unwrap_or(ZERO);
        for j in 1..=k.min(den.len().saturating_sub(1)) {
            acc -= den[j] * out[k - j];
        }
        out[k] = acc / d0;
    }
    Ok(out)
}
