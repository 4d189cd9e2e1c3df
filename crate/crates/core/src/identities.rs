//! The dimension identity `d(pq) = d(q) + … + d(0)`, the substitution map
//! realizing it, and the classification of basis monomials by residue.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::algebra::{GenKind, Generator, Monomial, Prime};
use crate::catalog::plane_config_generators;
use crate::enumeration::{d, monomial_basis};
use crate::error::{Error, Result};

/// Which summand of the source of `f` a monomial comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Source {
    /// `H_*(C_{pq})`, mapped by multiplication with `ι^p`.
    WeightPQ,
    /// `H_*(C_{q+1})`, mapped by the substitution of variables.
    WeightQPlus1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MonomialForm {
    /// `ι^p · y`.
    DivisibleByIotaP,
    /// `ι^k · (α/β word)` with `k ≡ n mod p`, `k < p`.
    IotaPowerTimesAlphaBeta,
    /// `ι^k u · (α/β word)` with `k ≡ n − 2 mod p`, `k < p`.
    IotaPowerUTimesAlphaBeta,
}

fn plane_gens(p: Prime, weight: u64) -> Vec<Generator> {
    plane_config_generators(p, weight.max(1))
}

/// The substitution map onto `H_*(C_{p(q+1)}(ℂ))`.
///
/// Odd p: `α_i ↦ α_{i+1}`, `β_i ↦ β_{i+1}`, `u ↦ α_1`, `ι^{2l} ↦ β_1^l`,
/// `ι^{2l+1} ↦ β_1^l u ι^{p−2}`. At p = 2: `ι ↦ Qι`, `Q^iι ↦ Q^{i+1}ι`.
/// No Koszul signs are tracked.
pub fn bijection_f(m: &Monomial, source: Source, p: Prime, q: u64) -> Result<Monomial> {
    let pw = p.get() as u64;
    let expected = match source {
        Source::WeightPQ => pw * q,
        Source::WeightQPlus1 => q + 1,
    };
    if m.weight() != expected {
        return Err(Error::Domain(format!(
            "monomial {m} has weight {}, expected {expected} for {source:?}",
            m.weight()
        )));
    }
    let image = match source {
        Source::WeightPQ => Monomial::from_factors(
            std::iter::once((Generator::iota(), p.get())).chain(m.factors().iter().cloned()),
        ),
        Source::WeightQPlus1 if p.is_two() => {
            let mut out = Vec::new();
            for (g, e) in m.factors() {
                let h = match g.kind() {
                    GenKind::Iota => Generator::q_iota(1),
                    GenKind::QIota(i) => Generator::q_iota(i + 1),
                    _ => return Err(not_plane(g)),
                };
                out.push((h, *e));
            }
            Monomial::from_factors(out)
        }
        Source::WeightQPlus1 => {
            let mut out = Vec::new();
            for (g, e) in m.factors() {
                match g.kind() {
                    GenKind::Iota => {
                        let l = e / 2;
                        out.push((Generator::beta(1, p), l));
                        if e % 2 == 1 {
                            out.push((Generator::u(), 1));
                            out.push((Generator::iota(), p.get() - 2));
                        }
                    }
                    GenKind::U => out.push((Generator::alpha(1, p), *e)),
                    GenKind::Alpha(i) => out.push((Generator::alpha(i + 1, p), *e)),
                    GenKind::Beta(i) => out.push((Generator::beta(i + 1, p), *e)),
                    _ => return Err(not_plane(g)),
                }
            }
            Monomial::from_factors(out)
        }
    };
    let image = image.ok_or_else(|| {
        Error::InvariantViolation(format!("substitution squares an odd generator in {m}"))
    })?;
    if image.weight() != pw * (q + 1) {
        return Err(Error::InvariantViolation(format!(
            "image {image} of {m} has weight {}, expected {}",
            image.weight(),
            pw * (q + 1)
        )));
    }
    Ok(image)
}

fn not_plane(g: &Generator) -> Error {
    Error::Domain(format!("{g} is not a generator of H_*(C(ℂ))"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub p: u32,
    pub q: u64,
    pub source_pq: u64,
    pub source_q_plus_1: u64,
    pub images: u64,
    pub target: u64,
    pub weight_correct: bool,
    pub injective: bool,
    pub surjective: bool,
}

impl BijectionReport {
    pub fn ok(&self) -> bool {
        self.weight_correct && self.injective && self.surjective
    }
}

pub fn verify_bijection_f(p: Prime, q: u64) -> Result<BijectionReport> {
    let pw = p.get() as u64;
    let target_weight = pw * (q + 1);
    let gens = plane_gens(p, target_weight);
    let src_pq = monomial_basis(&gens, pw * q);
    let src_q1 = monomial_basis(&gens, q + 1);
    let target: HashSet<Monomial> = monomial_basis(&gens, target_weight).into_iter().collect();

    let mut images = Vec::with_capacity(src_pq.len() + src_q1.len());
    for m in &src_pq {
        images.push(bijection_f(m, Source::WeightPQ, p, q)?);
    }
    for m in &src_q1 {
        images.push(bijection_f(m, Source::WeightQPlus1, p, q)?);
    }
    let weight_correct = images.iter().all(|m| m.weight() == target_weight);
    let distinct: HashSet<&Monomial> = images.iter().collect();
    let injective = distinct.len() == images.len();
    let surjective = target.iter().all(|t| distinct.contains(t)) && distinct.len() == target.len();
    Ok(BijectionReport {
        p: p.get(),
        q,
        source_pq: src_pq.len() as u64,
        source_q_plus_1: src_q1.len() as u64,
        images: images.len() as u64,
        target: target.len() as u64,
        weight_correct,
        injective,
        surjective,
    })
}

/// Classifies a weight-`n` basis monomial, with priority (a) > (b) > (c).
pub fn classify_monomial(m: &Monomial, p: Prime, n: u64) -> Result<MonomialForm> {
    if m.weight() != n {
        return Err(Error::Domain(format!("{m} does not have weight {n}")));
    }
    let pw = p.get() as u64;
    let k = m.iota_exponent() as u64;
    if k >= pw {
        return Ok(MonomialForm::DivisibleByIotaP);
    }
    let violation = |what: &str| {
        Error::InvariantViolation(format!("{m} (n = {n}, p = {p}) fits no form: {what}"))
    };
    if !m.contains_u() {
        if k != n % pw {
            return Err(violation("ι-exponent differs from n mod p"));
        }
        return Ok(MonomialForm::IotaPowerTimesAlphaBeta);
    }
    if p.is_two() {
        return Err(violation("u does not exist at p = 2"));
    }
    if k != (n + pw - 2) % pw {
        return Err(violation("ι-exponent differs from n − 2 mod p"));
    }
    Ok(MonomialForm::IotaPowerUTimesAlphaBeta)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub p: u32,
    pub max_n: u64,
    pub monomials: u64,
    /// Counts per form, keyed by form name.
    pub counts: BTreeMap<String, u64>,
    pub failures: Vec<String>,
}

impl ClassifyReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_classification(p: Prime, max_n: u64) -> ClassifyReport {
    let gens = plane_gens(p, max_n);
    let mut counts = BTreeMap::new();
    let mut failures = Vec::new();
    let mut monomials = 0;
    for n in 0..=max_n {
        for m in monomial_basis(&gens, n) {
            monomials += 1;
            match classify_monomial(&m, p, n) {
                Ok(form) => *counts.entry(format!("{form:?}")).or_insert(0) += 1,
                Err(e) => failures.push(e.to_string()),
            }
        }
    }
    ClassifyReport {
        p: p.get(),
        max_n,
        monomials,
        counts,
        failures,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionRow {
    pub q: u64,
    pub d_pq: u64,
    pub partial_sum: u64,
    pub d_pq_plus_1: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub p: u32,
    pub rows: Vec<DimensionRow>,
}

impl DimensionReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }
}

/// Checks `d(pq) = Σ_{i ≤ q} d(i)` and `d(pq + 1) = d(pq)` for `q ≤ q_max`.
pub fn verify_dimension_identity(p: Prime, q_max: u64) -> DimensionReport {
    let pw = p.get() as u64;
    let mut partial = 0;
    let rows = (0..=q_max)
        .map(|q| {
            partial += d(q, p);
            let d_pq = d(pw * q, p);
            let d_next = d(pw * q + 1, p);
            DimensionRow {
                q,
                d_pq,
                partial_sum: partial,
                d_pq_plus_1: d_next,
                holds: d_pq == partial && d_next == d_pq,
            }
        })
        .collect();
    DimensionReport { p: p.get(), rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(n: u32) -> Prime {
        Prime::new(n).unwrap()
    }

    fn parse(text: &str, p: Prime) -> Monomial {
        let mut factors = Vec::new();
        for tok in text.split_whitespace() {
            let (name, e) = match tok.split_once('^') {
                Some((n, e)) => (n, e.parse().unwrap()),
                None => (tok, 1),
            };
            let g = match name {
                "i" => Generator::iota(),
                "u" => Generator::u(),
                _ if name.starts_with('a') => Generator::alpha(name[1..].parse().unwrap(), p),
                _ if name.starts_with('b') => Generator::beta(name[1..].parse().unwrap(), p),
                _ => panic!("unknown generator {name}"),
            };
            factors.push((g, e));
        }
        Monomial::from_factors(factors).unwrap()
    }

    #[test]
    fn substitution_examples() {
        let p = prime(3);
        let img = bijection_f(&parse("i^3", p), Source::WeightQPlus1, p, 2).unwrap();
        assert_eq!(img, parse("i u b1", p));
        assert_eq!(img.weight(), 9);

        let img = bijection_f(&parse("i^6", p), Source::WeightPQ, p, 2).unwrap();
        assert_eq!(img, parse("i^9", p));

        let img = bijection_f(&parse("i u", p), Source::WeightQPlus1, p, 2).unwrap();
        assert_eq!(img, parse("i u a1", p));
    }

    #[test]
    fn wrong_source_weight() {
        let p = prime(3);
        assert!(matches!(
            bijection_f(&parse("i^4", p), Source::WeightQPlus1, p, 2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn bijection_reports() {
        let r = verify_bijection_f(prime(3), 2).unwrap();
        assert!(r.ok());
        assert_eq!(
            (r.source_pq, r.source_q_plus_1, r.images, r.target),
            (4, 2, 6, 6)
        );
        for (p, q) in [(2, 1), (5, 1), (2, 0), (3, 0)] {
            assert!(verify_bijection_f(prime(p), q).unwrap().ok(), "p={p} q={q}");
        }
    }

    #[test]
    fn classification_examples() {
        let p = prime(3);
        assert_eq!(
            classify_monomial(&parse("i^7 u", p), p, 9).unwrap(),
            MonomialForm::DivisibleByIotaP
        );
        assert_eq!(
            classify_monomial(&parse("i u a1", p), p, 9).unwrap(),
            MonomialForm::IotaPowerUTimesAlphaBeta
        );
        assert_eq!(
            classify_monomial(&parse("b1", p), p, 6).unwrap(),
            MonomialForm::IotaPowerTimesAlphaBeta
        );
        assert!(classify_monomial(&parse("b1", p), p, 7).is_err());
    }

    #[test]
    fn dimension_identity_small() {
        let r = verify_dimension_identity(prime(3), 3);
        assert!(r.ok());
        let last = r.rows.last().unwrap();
        assert_eq!((last.d_pq, last.partial_sum), (6, 6));
        let r = verify_dimension_identity(prime(2), 1);
        assert_eq!(r.rows[1].d_pq, 2);
    }
}
