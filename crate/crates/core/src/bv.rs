//! The BV operator on `H_*(C_n(ℂ); F_p)`, its matrices, the Serre spectral
//! sequence of `C_n(ℂ) → C_n(ℂ)_{S¹} → BS¹`, and the equivariant homology.
//!
//! On a basis monomial `ι^k u^ε x`, with `x` a word in the α/β letters,
//! `Δ(ι^k x) = k(k−1) ι^{k−2} u x` and `Δ(ι^k u x) = 0`. At p = 2 the
//! operator vanishes. The integer coefficient is taken literally; only its
//! vanishing mod p (and hence every rank) is meaningful.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{Element, FpMatrix, Generator, Monomial, Prime};
use crate::catalog::plane_config_generators;
use crate::enumeration::{monomial_basis, poincare, GradedDims};
use crate::error::{Error, Result};

/// Default truncation for the infinite `BS¹` / `Bℤ/p` factors.
pub fn default_dmax(n: u64) -> u64 {
    2 * n + 16
}

/// True when `n ≡ 0, 1 mod p`, the regime where Δ vanishes on weight `n`.
pub fn is_tensor_regime(n: u64, p: Prime) -> bool {
    n % p.get() as u64 <= 1
}

pub fn delta(m: &Monomial, p: Prime) -> Element {
    if p.is_two() || m.contains_u() {
        return Element::zero(p);
    }
    let k = m.iota_exponent() as u64;
    if k < 2 {
        return Element::zero(p);
    }
    let coeff = p.reduce((k * (k - 1)) as i64);
    if coeff == 0 {
        return Element::zero(p);
    }
    let rest = m.without(&Generator::iota());
    let factors = [(Generator::iota(), (k - 2) as u32), (Generator::u(), 1)]
        .into_iter()
        .chain(rest.factors().iter().cloned());
    let image = Monomial::from_factors(factors).expect("u absent from the source monomial");
    Element::term(image, coeff, p)
}

pub fn delta_element(x: &Element) -> Element {
    let p = x.prime();
    x.map_linear(|m| delta(m, p))
}

/// Weight-`n` basis of `H_*(C_n(ℂ); F_p)` grouped by degree.
pub fn graded_basis(n: u64, p: Prime) -> BTreeMap<u64, Vec<Monomial>> {
    let mut out: BTreeMap<u64, Vec<Monomial>> = BTreeMap::new();
    for m in monomial_basis(&plane_config_generators(p, n.max(1)), n) {
        out.entry(m.degree()).or_default().push(m);
    }
    out
}

fn matrix_between(source: &[Monomial], target: &[Monomial], p: Prime) -> FpMatrix {
    let mut mat = FpMatrix::zeros(target.len(), source.len(), p);
    for (col, m) in source.iter().enumerate() {
        for (img, c) in delta(m, p).terms() {
            let row = target
                .iter()
                .position(|t| t == img)
                .expect("Δ preserves weight and raises degree by one");
            mat.set(row, col, c);
        }
    }
    mat
}

/// Matrix of Δ from the degree-`d` to the degree-`(d+1)` part of weight `n`.
pub fn delta_matrix(n: u64, p: Prime, d: u64) -> FpMatrix {
    let basis = graded_basis(n, p);
    let empty = Vec::new();
    let source = basis.get(&d).unwrap_or(&empty);
    let target = basis.get(&(d + 1)).unwrap_or(&empty);
    matrix_between(source, target, p)
}

/// Ranks of Δ in each source degree of weight `n`.
pub fn delta_ranks(n: u64, p: Prime) -> BTreeMap<u64, usize> {
    let basis = graded_basis(n, p);
    let empty = Vec::new();
    basis
        .iter()
        .map(|(&d, source)| {
            let target = basis.get(&(d + 1)).unwrap_or(&empty);
            (
                d,
                matrix_between(source, target, p).rank_kernel_image().rank,
            )
        })
        .collect()
}

/// Cokernel dimensions of Δ computed from matrix ranks.
pub fn coker_delta_dims(n: u64, p: Prime) -> GradedDims {
    let basis = graded_basis(n, p);
    let ranks = delta_ranks(n, p);
    GradedDims::from_pairs(basis.iter().map(|(&d, b)| {
        let incoming = d
            .checked_sub(1)
            .and_then(|e| ranks.get(&e))
            .copied()
            .unwrap_or(0);
        (d, (b.len() - incoming) as u64)
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    TensorBS1,
    CokerDelta,
}

/// A basis class of the equivariant homology: a monomial, optionally
/// tensored with the generator `y_{2i}` of `H_{2i}(BS¹)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivariantClass {
    pub monomial: Monomial,
    pub y: Option<u64>,
    pub degree: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivariantAnswer {
    pub regime: Regime,
    pub dims: GradedDims,
    pub basis: Vec<EquivariantClass>,
}

/// `H_*^{S¹}(C_n(ℂ); F_p)` up to degree `dmax`.
pub fn equivariant_s1(n: u64, p: Prime, dmax: u64) -> EquivariantAnswer {
    let basis = monomial_basis(&plane_config_generators(p, n.max(1)), n);
    if is_tensor_regime(n, p) {
        let mut classes = Vec::new();
        for m in &basis {
            let mut y = 0;
            while m.degree() + y <= dmax {
                classes.push(EquivariantClass {
                    monomial: m.clone(),
                    y: Some(y),
                    degree: m.degree() + y,
                });
                y += 2;
            }
        }
        classes.sort_by(|a, b| {
            (a.degree, a.monomial.to_string(), a.y).cmp(&(b.degree, b.monomial.to_string(), b.y))
        });
        EquivariantAnswer {
            regime: Regime::TensorBS1,
            dims: poincare(n, p).times_periodic(2, dmax),
            basis: classes,
        }
    } else {
        let classes: Vec<EquivariantClass> = basis
            .into_iter()
            .filter(|m| !m.contains_u() && m.degree() <= dmax)
            .map(|m| EquivariantClass {
                degree: m.degree(),
                monomial: m,
                y: None,
            })
            .collect();
        let dims = GradedDims::from_pairs(classes.iter().map(|c| (c.degree, 1)));
        EquivariantAnswer {
            regime: Regime::CokerDelta,
            dims,
            basis: classes,
        }
    }
}

/// `H_*^{ℤ/p}(C_n(ℂ); F_p)` for `n ≡ 0, 1 mod p`, up to degree `dmax`.
pub fn equivariant_zp(n: u64, p: Prime, dmax: u64) -> Result<GradedDims> {
    if !is_tensor_regime(n, p) {
        return Err(Error::Unsupported(format!(
            "ℤ/p-equivariant homology is only computed for n ≡ 0, 1 mod p (n = {n}, p = {p})"
        )));
    }
    Ok(poincare(n, p).times_periodic(1, dmax))
}

/// A page of the homological Serre spectral sequence over `BS¹`, indexed
/// by (fiber degree, base degree).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SerrePage {
    entries: BTreeMap<(u64, u64), u64>,
}

impl SerrePage {
    pub fn get(&self, fiber: u64, base: u64) -> u64 {
        self.entries.get(&(fiber, base)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u64, u64), u64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    /// Dimensions by total degree.
    pub fn total(&self) -> GradedDims {
        GradedDims::from_pairs(self.iter().map(|((i, j), n)| (i + j, n)))
    }

    /// Zero outside the base column 0.
    pub fn concentrated_in_base_zero(&self) -> bool {
        self.entries.keys().all(|&(_, j)| j == 0)
    }

    fn add(&mut self, fiber: u64, base: u64, dim: u64) {
        if dim > 0 {
            *self.entries.entry((fiber, base)).or_insert(0) += dim;
        }
    }
}

/// E² page truncated at total degree `bound`.
pub fn serre_e2(n: u64, p: Prime, bound: u64) -> SerrePage {
    let h = poincare(n, p);
    let mut page = SerrePage::default();
    for (i, dim) in h.iter() {
        let mut j = 0;
        while i + j <= bound {
            page.add(i, j, dim);
            j += 2;
        }
    }
    page
}

/// E³ page: homology of E² under `d²(x ⊗ y_{2j}) = Δx ⊗ y_{2j−2}`.
pub fn serre_e3(n: u64, p: Prime, bound: u64) -> SerrePage {
    let h = poincare(n, p);
    let ranks = delta_ranks(n, p);
    let rank = |d: Option<u64>| d.and_then(|d| ranks.get(&d)).copied().unwrap_or(0) as u64;
    let mut page = SerrePage::default();
    for (i, dim) in h.iter() {
        let incoming = rank(i.checked_sub(1));
        let mut j = 0;
        while i + j <= bound {
            let cycles = if j == 0 { dim } else { dim - rank(Some(i)) };
            page.add(i, j, cycles - incoming);
            j += 2;
        }
    }
    page
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    /// Even inputs, trivial coefficients.
    Even,
    /// Odd inputs, sign coefficients.
    Odd,
}

/// Degree of the output of an arity-`n` operation of degree `|Q|` applied
/// to a class of degree `input`: `input · n + |Q| + 1`.
pub fn gravity_op_degree(op_degree: u64, arity: u64, input: u64, parity: Parity) -> Result<u64> {
    let expected = if input.is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    };
    if parity != expected {
        return Err(Error::Domain(format!(
            "input degree {input} does not have {parity:?} parity"
        )));
    }
    if arity < 2 {
        return Err(Error::Domain("operations have arity at least 2".into()));
    }
    Ok(input * arity + op_degree + 1)
}
