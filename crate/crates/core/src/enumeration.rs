//! Monomial bases by weight, Poincaré polynomials, and the two-variable
//! Hilbert series of a free graded commutative algebra.

use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::algebra::{Generator, Monomial, Prime};
use crate::catalog::plane_config_generators;

/// Degree → dimension, finite support. Zero entries are not stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GradedDims(BTreeMap<u64, u64>);

impl GradedDims {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (u64, u64)>>(pairs: I) -> Self {
        let mut g = Self::new();
        for (d, n) in pairs {
            g.add(d, n);
        }
        g
    }

    pub fn add(&mut self, degree: u64, dim: u64) {
        if dim > 0 {
            *self.0.entry(degree).or_insert(0) += dim;
        }
    }

    pub fn get(&self, degree: u64) -> u64 {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_degree(&self) -> Option<u64> {
        self.0.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.0.iter().map(|(d, n)| (*d, *n))
    }

    /// Drops every degree above `dmax`.
    pub fn truncate(&self, dmax: u64) -> GradedDims {
        GradedDims(self.0.range(..=dmax).map(|(d, n)| (*d, *n)).collect())
    }

    /// Product with `1/(1 − t^step)`, truncated at `dmax`.
    pub fn times_periodic(&self, step: u64, dmax: u64) -> GradedDims {
        assert!(step > 0);
        let mut out = GradedDims::new();
        for (d, n) in self.iter() {
            let mut e = d;
            while e <= dmax {
                out.add(e, n);
                e += step;
            }
        }
        out
    }

    /// Dense vector indexed by degree `0..=dmax`.
    pub fn to_dense(&self, dmax: u64) -> Vec<u64> {
        (0..=dmax).map(|d| self.get(d)).collect()
    }
}

impl Serialize for GradedDims {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (d, n) in self.iter() {
            seq.serialize_element(&[d, n])?;
        }
        seq.end()
    }
}

/// (weight, degree) → dimension, truncated at the bounds it was built with.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BigradedSeries {
    entries: BTreeMap<(u64, u64), u64>,
    max_weight: u64,
    max_degree: u64,
}

impl BigradedSeries {
    pub fn new(max_weight: u64, max_degree: u64) -> Self {
        BigradedSeries {
            entries: BTreeMap::new(),
            max_weight,
            max_degree,
        }
    }

    /// Hilbert series of the free graded commutative algebra on `gens`:
    /// each polynomial generator contributes `1/(1 − t^deg s^wt)`, each
    /// exterior one `(1 + t^deg s^wt)`.
    pub fn free_algebra(gens: &[Generator], max_weight: u64, max_degree: u64) -> Self {
        let (nw, nd) = (max_weight as usize + 1, max_degree as usize + 1);
        let mut dp = vec![vec![0u64; nd]; nw];
        dp[0][0] = 1;
        for g in gens {
            let (gw, gd) = (g.weight() as usize, g.degree() as usize);
            if gw >= nw || gd >= nd {
                continue;
            }
            if g.is_exterior() {
                for w in (gw..nw).rev() {
                    for d in (gd..nd).rev() {
                        dp[w][d] += dp[w - gw][d - gd];
                    }
                }
            } else {
                for w in gw..nw {
                    for d in gd..nd {
                        dp[w][d] += dp[w - gw][d - gd];
                    }
                }
            }
        }
        let mut s = Self::new(max_weight, max_degree);
        for (w, row) in dp.iter().enumerate() {
            for (d, &n) in row.iter().enumerate() {
                s.add(w as u64, d as u64, n);
            }
        }
        s
    }

    pub fn add(&mut self, weight: u64, degree: u64, dim: u64) {
        if dim > 0 && weight <= self.max_weight && degree <= self.max_degree {
            *self.entries.entry((weight, degree)).or_insert(0) += dim;
        }
    }

    pub fn get(&self, weight: u64, degree: u64) -> u64 {
        self.entries.get(&(weight, degree)).copied().unwrap_or(0)
    }

    pub fn slice(&self, weight: u64) -> GradedDims {
        GradedDims::from_pairs(
            self.entries
                .range((weight, 0)..=(weight, u64::MAX))
                .map(|((_, d), n)| (*d, *n)),
        )
    }

    pub fn max_weight(&self) -> u64 {
        self.max_weight
    }

    pub fn max_degree(&self) -> u64 {
        self.max_degree
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u64, u64), u64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }
}

/// All canonical monomials of weight exactly `n` in the given generators,
/// sorted by (degree, canonical text).
pub fn monomial_basis(gens: &[Generator], n: u64) -> Vec<Monomial> {
    let mut gens: Vec<Generator> = gens.iter().filter(|g| g.weight() <= n).cloned().collect();
    gens.sort();
    gens.dedup();
    let mut out = Vec::new();
    let mut exps = vec![0u32; gens.len()];
    fill(&gens, 0, n, &mut exps, &mut out);
    let mut keyed: Vec<(u64, String, Monomial)> = out
        .into_iter()
        .map(|m| (m.degree(), m.to_string(), m))
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    keyed.into_iter().map(|(_, _, m)| m).collect()
}

fn fill(gens: &[Generator], idx: usize, remaining: u64, exps: &mut [u32], out: &mut Vec<Monomial>) {
    if remaining == 0 {
        let m = Monomial::from_factors(gens.iter().cloned().zip(exps.iter().copied()))
            .expect("exterior constraint enforced during enumeration");
        out.push(m);
        return;
    }
    if idx == gens.len() {
        return;
    }
    let g = &gens[idx];
    let max_e = remaining / g.weight();
    let max_e = if g.is_exterior() { max_e.min(1) } else { max_e };
    for e in 0..=max_e {
        exps[idx] = e as u32;
        fill(gens, idx + 1, remaining - e * g.weight(), exps, out);
    }
    exps[idx] = 0;
}

/// Degree-wise counts of [`monomial_basis`].
pub fn poincare_of(gens: &[Generator], n: u64) -> GradedDims {
    GradedDims::from_pairs(monomial_basis(gens, n).iter().map(|m| (m.degree(), 1)))
}

/// Poincaré polynomial of `H_*(C_n(ℂ); F_p)`.
pub fn poincare(n: u64, p: Prime) -> GradedDims {
    poincare_of(&plane_config_generators(p, n.max(1)), n)
}

/// `d(n)`: total dimension of `H_*(C_n(ℂ); F_p)`.
pub fn d(n: u64, p: Prime) -> u64 {
    poincare(n, p).total()
}

/// Weight-`n` slice of the truncated Hilbert series.
pub fn series_coefficient(gens: &[Generator], n: u64, dmax: u64) -> GradedDims {
    BigradedSeries::free_algebra(gens, n, dmax).slice(n)
}
