//! Generator sets and bases for the concrete spaces: `C(ℂ)`, sphere-labelled
//! configurations, the punctured plane and the ℤ/p fixed points.

use serde::Serialize;

use crate::algebra::{Generator, Monomial, Prime};
use crate::brackets::{cohen_generators, enumerate_basic_brackets, enumerate_basic_brackets_where};
use crate::brackets::{Bracket, LabelClass};
use crate::enumeration::monomial_basis;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SpaceSpec {
    PlaneConfig,
    SphereLabelled { m: u64 },
    PuncturedPlane,
    FixedPoints,
}

impl SpaceSpec {
    pub fn validate(self, p: Prime) -> Result<Self> {
        match self {
            SpaceSpec::SphereLabelled { m } if m % 2 == 0 && !p.is_two() => {
                Err(even_sphere_unsupported(m, p))
            }
            SpaceSpec::SphereLabelled { m: 0 } => {
                Err(Error::Domain("sphere dimension must be at least 1".into()))
            }
            other => Ok(other),
        }
    }
}

fn even_sphere_unsupported(m: u64, p: Prime) -> Error {
    Error::Unsupported(format!(
        "even sphere S^{m} at odd p = {p}: the inclusion into C(ℂ^∞; S^{m}) is not injective \
         in mod-p homology, so this labelled model is only used for odd spheres or p = 2"
    ))
}

/// Generators of `H_*(C(ℂ); F_p)` of weight at most `weight_bound`:
/// ι, u, α_i, β_i for odd p and ι, Q^iι for p = 2.
pub fn plane_config_generators(p: Prime, weight_bound: u64) -> Vec<Generator> {
    let brackets = enumerate_basic_brackets(&[LabelClass::new("a", 0)], weight_bound.max(1), p)
        .expect("single label with positive weight bound");
    cohen_generators(&brackets, p, weight_bound)
}

/// Generators of `H_*(C(ℂ; S^m); F_p)` of weight at most `weight_bound`.
pub fn sphere_labelled_generators(p: Prime, m: u64, weight_bound: u64) -> Result<Vec<Generator>> {
    SpaceSpec::SphereLabelled { m }.validate(p)?;
    let brackets = enumerate_basic_brackets(&[LabelClass::new("s", m)], weight_bound.max(1), p)?;
    Ok(cohen_generators(&brackets, p, weight_bound))
}

/// The one-white-particle brackets `b, [a,b], [a,[a,b]], …` up to weight
/// `max_weight`, indexed by the number of black particles.
pub fn white_particle_brackets(p: Prime, max_weight: u64) -> Result<Vec<Bracket>> {
    let labels = [LabelClass::new("a", 0), LabelClass::new("b", 0)];
    let all =
        enumerate_basic_brackets_where(&labels, max_weight.max(1), p, |x| x.count_label("b") <= 1)?;
    let white: Vec<Bracket> = all
        .into_iter()
        .filter(|x| x.count_label("b") == 1)
        .collect();
    for (j, w) in white.iter().enumerate() {
        if w.weight() != j as u64 + 1 || w.degree() != j as u64 {
            return Err(Error::InvariantViolation(format!(
                "expected exactly one white-particle bracket per weight, found {w} at position {j}"
            )));
        }
    }
    Ok(white)
}

/// Basis of `H_*(C_q(ℂ^*); F_p)`: the products `w_j · m` with `w_j` the
/// one-white-particle bracket of degree `j` and `m` a weight-`(q − j)`
/// monomial of `H_*(C(ℂ))`. Sorted by (degree, text).
pub fn punctured_plane_basis(q: u64, p: Prime) -> Result<Vec<Monomial>> {
    let white = white_particle_brackets(p, q + 1)?;
    let plane = plane_config_generators(p, q.max(1));
    let mut out = Vec::new();
    for (j, w) in white.into_iter().enumerate() {
        let wgen = Generator::bracket(w, p);
        for m in monomial_basis(&plane, q - j as u64) {
            let factors = std::iter::once((wgen.clone(), 1)).chain(m.factors().iter().cloned());
            out.push(Monomial::from_factors(factors).ok_or_else(|| {
                Error::InvariantViolation("bracket factor squared in one-white sector".into())
            })?);
        }
    }
    out.sort_by_cached_key(|m| (m.degree(), m.to_string()));
    Ok(out)
}

/// Total dimension of `H_*(C_n(ℂ)^{ℤ/p}; F_p)` for `n ≡ 0, 1 mod p`,
/// computed through the punctured plane `C_{⌊n/p⌋}(ℂ^*)`.
pub fn fixed_point_total_dim(n: u64, p: Prime) -> Result<u64> {
    let r = n % p.get() as u64;
    if r > 1 {
        return Err(Error::Domain(format!(
            "fixed points are only described for n ≡ 0, 1 mod p (n = {n}, p = {p})"
        )));
    }
    Ok(punctured_plane_basis(n / p.get() as u64, p)?.len() as u64)
}
