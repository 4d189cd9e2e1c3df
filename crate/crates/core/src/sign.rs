//! `H_*(B_n/Z(B_n); F_p(±1))` through fiberwise labelled configurations.
//!
//! The weight-`n` part of `H_*(C(ℂ; S^{2q+1}); F_p)` is shifted down by
//! `(2q+1)n` and tensored with `H_*(BS¹)`. With p = 2 and even spheres the
//! same recipe gives trivial coefficients.

use serde::Serialize;

use crate::algebra::{Generator, Prime};
use crate::catalog::sphere_labelled_generators;
use crate::enumeration::{monomial_basis, BigradedSeries, GradedDims};
use crate::error::{Error, Result};

/// Weight-`n` slice of a labelled configuration space after the degree shift.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShiftedWeightSlice {
    pub n: u64,
    pub q: u64,
    pub shift: u64,
    pub dims: GradedDims,
}

fn shifted_slice(gens: &[Generator], n: u64, per_point: u64) -> Result<GradedDims> {
    let shift = per_point * n;
    let mut dims = GradedDims::new();
    for m in monomial_basis(gens, n) {
        let d = m.degree().checked_sub(shift).ok_or_else(|| {
            Error::InvariantViolation(format!(
                "{m} has degree {} below the shift {shift}",
                m.degree()
            ))
        })?;
        dims.add(d, 1);
    }
    Ok(dims)
}

/// The shifted slice for an odd sphere `S^{2q+1}` (sign coefficients).
pub fn sign_slice(n: u64, p: Prime, q: u64) -> Result<ShiftedWeightSlice> {
    let m = 2 * q + 1;
    let gens = sphere_labelled_generators(p, m, n.max(1))?;
    Ok(ShiftedWeightSlice {
        n,
        q,
        shift: m * n,
        dims: shifted_slice(&gens, n, m)?,
    })
}

/// `H_*(B_n/Z(B_n); F_p(±1))` up to degree `dmax`.
pub fn sign_rep_homology(n: u64, p: Prime, q: u64, dmax: u64) -> Result<GradedDims> {
    Ok(sign_slice(n, p, q)?.dims.times_periodic(2, dmax))
}

/// `H_*(B_n/Z(B_n); F_2)` via the even sphere `S^{2q}`, up to degree `dmax`.
pub fn trivial_rep_homology_p2(n: u64, q: u64, dmax: u64) -> Result<GradedDims> {
    if q < 1 {
        return Err(Error::Domain("the even-sphere model needs q ≥ 1".into()));
    }
    let p = Prime::new(2)?;
    let m = 2 * q;
    let gens = sphere_labelled_generators(p, m, n.max(1))?;
    Ok(shifted_slice(&gens, n, m)?.times_periodic(2, dmax))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub n: u64,
    pub p: u32,
    pub qs: Vec<u64>,
    pub dims: Vec<GradedDims>,
    pub stable: bool,
}

pub fn verify_q_stability(n: u64, p: Prime, qs: &[u64], dmax: u64) -> Result<StabilityReport> {
    if qs.is_empty() {
        return Err(Error::Domain("q list must be nonempty".into()));
    }
    let dims = qs
        .iter()
        .map(|&q| sign_rep_homology(n, p, q, dmax))
        .collect::<Result<Vec<_>>>()?;
    let stable = dims.windows(2).all(|w| w[0] == w[1]);
    Ok(StabilityReport {
        n,
        p: p.get(),
        qs: qs.to_vec(),
        dims,
        stable,
    })
}

/// Compares two routes to `H_*(C(ℂ; S^m)) ⊗ H_*(BS¹)` truncated at weight
/// `n_max` and degree `dmax`: per-weight enumeration of basis monomials
/// against the product formula of the Hilbert series. Returns the first
/// mismatching `(weight, degree)`, if any.
pub fn splitting_mismatch(p: Prime, m: u64, n_max: u64, dmax: u64) -> Result<Option<(u64, u64)>> {
    let gens = sphere_labelled_generators(p, m, n_max.max(1))?;
    let series = BigradedSeries::free_algebra(&gens, n_max, dmax);
    for n in 0..=n_max {
        let by_enumeration =
            GradedDims::from_pairs(monomial_basis(&gens, n).iter().map(|x| (x.degree(), 1)))
                .times_periodic(2, dmax);
        // Series route: multiply the slice by 1/(1 − t²) coefficientwise.
        let mut by_series = vec![0u64; dmax as usize + 1];
        for d in 0..=dmax as usize {
            by_series[d] = series.get(n, d as u64) + if d >= 2 { by_series[d - 2] } else { 0 };
        }
        for d in 0..=dmax {
            if by_enumeration.get(d) != by_series[d as usize] {
                return Ok(Some((n, d)));
            }
        }
    }
    Ok(None)
}
