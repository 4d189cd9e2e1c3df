use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::field::Prime;
use crate::algebra::generator::Generator;

/// A canonical monomial in a free graded commutative algebra.
///
/// Factors are strictly increasing in the global generator order and odd
/// generators occur with exponent one at odd primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    factors: Vec<(Generator, u32)>,
    weight: u64,
    degree: u64,
}

/// Result of multiplying two canonical monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Product {
    Zero,
    Term { negative: bool, monomial: Monomial },
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            factors: Vec::new(),
            weight: 0,
            degree: 0,
        }
    }

    pub fn generator(g: Generator) -> Self {
        Self::power(g, 1).expect("exponent one is always valid")
    }

    /// `g^e`, or `None` when `g` is exterior and `e ≥ 2`.
    pub fn power(g: Generator, e: u32) -> Option<Self> {
        if e == 0 {
            return Some(Self::one());
        }
        if g.is_exterior() && e > 1 {
            return None;
        }
        Some(Monomial {
            weight: g.weight() * e as u64,
            degree: g.degree() * e as u64,
            factors: vec![(g, e)],
        })
    }

    /// Builds the canonical monomial from factors given in any order,
    /// discarding the Koszul sign. `None` if an exterior generator repeats.
    pub fn from_factors<I>(factors: I) -> Option<Self>
    where
        I: IntoIterator<Item = (Generator, u32)>,
    {
        let mut exps: BTreeMap<Generator, u32> = BTreeMap::new();
        for (g, e) in factors {
            if e > 0 {
                *exps.entry(g).or_insert(0) += e;
            }
        }
        Self::from_sorted_exponents(exps)
    }

    fn from_sorted_exponents(exps: BTreeMap<Generator, u32>) -> Option<Self> {
        let mut weight = 0;
        let mut degree = 0;
        let mut factors = Vec::with_capacity(exps.len());
        for (g, e) in exps {
            if g.is_exterior() && e > 1 {
                return None;
            }
            weight += g.weight() * e as u64;
            degree += g.degree() * e as u64;
            factors.push((g, e));
        }
        Some(Monomial {
            factors,
            weight,
            degree,
        })
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.factors
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent_of(&self, g: &Generator) -> u32 {
        self.factors
            .binary_search_by(|(h, _)| h.cmp(g))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    /// Exponent of ι.
    pub fn iota_exponent(&self) -> u32 {
        self.factors
            .iter()
            .find(|(g, _)| g.is_iota())
            .map_or(0, |(_, e)| *e)
    }

    pub fn contains_u(&self) -> bool {
        self.factors.iter().any(|(g, _)| g.is_u())
    }

    /// Re-sorts and re-merges the factors. The identity on canonical input.
    pub fn canonicalize(&self) -> Option<Self> {
        Self::from_factors(self.factors.iter().cloned())
    }

    /// Checks every structural invariant.
    pub fn is_canonical(&self) -> bool {
        let sorted = self.factors.windows(2).all(|w| w[0].0 < w[1].0);
        let exps_ok = self
            .factors
            .iter()
            .all(|(g, e)| *e >= 1 && (!g.is_exterior() || *e == 1));
        let w: u64 = self
            .factors
            .iter()
            .map(|(g, e)| g.weight() * *e as u64)
            .sum();
        let d: u64 = self
            .factors
            .iter()
            .map(|(g, e)| g.degree() * *e as u64)
            .sum();
        sorted && exps_ok && w == self.weight && d == self.degree
    }

    /// Removes a factor `g^e` entirely, returning the cofactor.
    pub fn without(&self, g: &Generator) -> Monomial {
        Self::from_factors(self.factors.iter().filter(|(h, _)| h != g).cloned())
            .expect("a sub-monomial of a canonical monomial is canonical")
    }
}

/// Graded-commutative product with the Koszul sign.
///
/// The sign is `(-1)^t` where `t` counts the transpositions of odd factors
/// needed to sort the concatenation `m1 · m2`.
pub fn monomial_mul(m1: &Monomial, m2: &Monomial) -> Product {
    let mut exps: BTreeMap<Generator, u32> = BTreeMap::new();
    for (g, e) in m1.factors.iter().chain(m2.factors.iter()) {
        let slot = exps.entry(g.clone()).or_insert(0);
        *slot += e;
        if g.is_exterior() && *slot > 1 {
            return Product::Zero;
        }
    }
    let mut transpositions = 0usize;
    for (g, _) in m1.factors.iter().filter(|(g, _)| g.is_odd()) {
        transpositions += m2
            .factors
            .iter()
            .filter(|(h, _)| h.is_odd() && h < g)
            .count();
    }
    let monomial = Monomial::from_sorted_exponents(exps).expect("odd squares already excluded");
    Product::Term {
        negative: transpositions % 2 == 1,
        monomial,
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (idx, (g, e)) in self.factors.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            if *e > 1 {
                write!(f, "{g}^{e}")?;
            } else {
                write!(f, "{g}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An F_p-linear combination of monomials. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    prime: Prime,
    terms: BTreeMap<Monomial, u32>,
}

impl Element {
    pub fn zero(prime: Prime) -> Self {
        Element {
            prime,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_monomial(m: Monomial, prime: Prime) -> Self {
        Self::term(m, 1, prime)
    }

    pub fn term(m: Monomial, coeff: u32, prime: Prime) -> Self {
        let mut e = Self::zero(prime);
        e.add_term(m, coeff);
        e
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn add_term(&mut self, m: Monomial, coeff: u32) {
        let p = self.prime;
        let coeff = coeff % p.get();
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert(0);
        *slot = p.add(*slot, coeff);
        if *slot == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), *c);
        }
        out
    }

    pub fn scale(&self, c: u32) -> Element {
        let mut out = Element::zero(self.prime);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), self.prime.mul(*a, c % self.prime.get()));
        }
        out
    }

    pub fn mul(&self, other: &Element) -> Element {
        let p = self.prime;
        let mut out = Element::zero(p);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Product::Term { negative, monomial } = monomial_mul(m1, m2) {
                    let c = p.mul(*c1, *c2);
                    out.add_term(monomial, if negative { p.neg(c) } else { c });
                }
            }
        }
        out
    }

    /// Applies a linear map defined on monomials.
    pub fn map_linear<F>(&self, f: F) -> Element
    where
        F: Fn(&Monomial) -> Element,
    {
        let mut out = Element::zero(self.prime);
        for (m, c) in &self.terms {
            out = out.add(&f(m).scale(*c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u32)> {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            if *c == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}
