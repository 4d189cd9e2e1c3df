//! Basic brackets and the generator sets of labelled configuration spaces.
//!
//! A basic bracket is a binary tree of Browder brackets on label classes.
//! Degrees add with a shift of one per internal node. Self-brackets `[a,a]`
//! exist only at odd primes and for even `a`, and are terminal: they never
//! occur as a component of a longer bracket (`[a,[a,a]]` vanishes by
//! Jacobi, or by definition at p = 3).

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::algebra::{GenKind, Generator, Prime};
use crate::error::{Error, Result};

/// A reduced homology class of the label space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelClass {
    pub name: String,
    pub degree: u64,
    pub weight: u64,
}

impl LabelClass {
    pub fn new(name: impl Into<String>, degree: u64) -> Self {
        LabelClass {
            name: name.into(),
            degree,
            weight: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Bracket {
    Leaf(LabelClass),
    Node(Box<Bracket>, Box<Bracket>),
}

impl Bracket {
    pub fn leaf(label: LabelClass) -> Self {
        Bracket::Leaf(label)
    }

    pub fn node(a: Bracket, b: Bracket) -> Self {
        Bracket::Node(Box::new(a), Box::new(b))
    }

    pub fn weight(&self) -> u64 {
        match self {
            Bracket::Leaf(l) => l.weight,
            Bracket::Node(a, b) => a.weight() + b.weight(),
        }
    }

    pub fn degree(&self) -> u64 {
        match self {
            Bracket::Leaf(l) => l.degree,
            Bracket::Node(a, b) => a.degree() + b.degree() + 1,
        }
    }

    pub fn is_self_bracket(&self) -> bool {
        matches!(self, Bracket::Node(a, b) if a == b)
    }

    /// Number of leaves carrying the given label.
    pub fn count_label(&self, name: &str) -> usize {
        match self {
            Bracket::Leaf(l) => usize::from(l.name == name),
            Bracket::Node(a, b) => a.count_label(name) + b.count_label(name),
        }
    }

    fn collect_labels<'a>(&'a self, out: &mut HashSet<&'a str>) {
        match self {
            Bracket::Leaf(l) => {
                out.insert(&l.name);
            }
            Bracket::Node(a, b) => {
                a.collect_labels(out);
                b.collect_labels(out);
            }
        }
    }

    /// The bracket total order: weight, then degree, then tree structure
    /// (leaves by name, leaves before internal nodes, nodes left-first).
    pub fn order_cmp(&self, other: &Bracket) -> Ordering {
        (self.weight(), self.degree())
            .cmp(&(other.weight(), other.degree()))
            .then_with(|| self.structural_cmp(other))
    }

    fn structural_cmp(&self, other: &Bracket) -> Ordering {
        match (self, other) {
            (Bracket::Leaf(a), Bracket::Leaf(b)) => a.cmp(b),
            (Bracket::Leaf(_), Bracket::Node(..)) => Ordering::Less,
            (Bracket::Node(..), Bracket::Leaf(_)) => Ordering::Greater,
            (Bracket::Node(a1, b1), Bracket::Node(a2, b2)) => {
                a1.order_cmp(a2).then_with(|| b1.order_cmp(b2))
            }
        }
    }

    /// Admissibility of a tree as a basic bracket.
    pub fn is_basic(&self, p: Prime) -> bool {
        match self {
            Bracket::Leaf(l) => l.weight == 1,
            Bracket::Node(a, b) if a == b => {
                !p.is_two() && a.degree() % 2 == 0 && !a.is_self_bracket() && a.is_basic(p)
            }
            Bracket::Node(a, b) => {
                if a.is_self_bracket() || b.is_self_bracket() {
                    return false;
                }
                if a.order_cmp(b) != Ordering::Less {
                    return false;
                }
                if let Bracket::Node(c, _) = b.as_ref() {
                    if c.order_cmp(a) == Ordering::Greater {
                        return false;
                    }
                }
                a.is_basic(p) && b.is_basic(p)
            }
        }
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracket::Leaf(l) => f.write_str(&l.name),
            Bracket::Node(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

fn validate_labels(labels: &[LabelClass], max_weight: u64) -> Result<()> {
    if max_weight < 1 {
        return Err(Error::Domain("max_weight must be at least 1".into()));
    }
    if labels.is_empty() {
        return Err(Error::Domain("at least one label class is required".into()));
    }
    let mut seen = HashSet::new();
    for l in labels {
        if l.weight != 1 {
            return Err(Error::Domain(format!(
                "label {} must have weight 1",
                l.name
            )));
        }
        if !seen.insert(l.name.as_str()) {
            return Err(Error::Domain(format!("duplicate label name {}", l.name)));
        }
    }
    Ok(())
}

/// All basic brackets of weight at most `max_weight`, in bracket order.
pub fn enumerate_basic_brackets(
    labels: &[LabelClass],
    max_weight: u64,
    p: Prime,
) -> Result<Vec<Bracket>> {
    enumerate_basic_brackets_where(labels, max_weight, p, |_| true)
}

/// Like [`enumerate_basic_brackets`], keeping only brackets accepted by
/// `keep`. The predicate must be inherited by sub-brackets (if it rejects `x`
/// it rejects every bracket containing `x`), since rejected brackets are not
/// used to build longer ones.
pub fn enumerate_basic_brackets_where<F>(
    labels: &[LabelClass],
    max_weight: u64,
    p: Prime,
    keep: F,
) -> Result<Vec<Bracket>>
where
    F: Fn(&Bracket) -> bool,
{
    validate_labels(labels, max_weight)?;
    // by_weight[w] holds the kept basic brackets of weight w.
    let mut by_weight: Vec<Vec<Bracket>> = vec![Vec::new(); max_weight as usize + 1];
    by_weight[1] = labels
        .iter()
        .cloned()
        .map(Bracket::leaf)
        .filter(|b| keep(b))
        .collect();

    for k in 2..=max_weight as usize {
        let mut found = Vec::new();
        for wa in 1..k {
            let wb = k - wa;
            if wa > wb {
                // a < b forces weight(a) ≤ weight(b)
                break;
            }
            for a in by_weight[wa].iter().filter(|x| !x.is_self_bracket()) {
                for b in by_weight[wb].iter().filter(|x| !x.is_self_bracket()) {
                    if a.order_cmp(b) != Ordering::Less {
                        continue;
                    }
                    if let Bracket::Node(c, _) = b {
                        if c.order_cmp(a) == Ordering::Greater {
                            continue;
                        }
                    }
                    let cand = Bracket::node(a.clone(), b.clone());
                    if keep(&cand) {
                        found.push(cand);
                    }
                }
            }
        }
        if !p.is_two() && k % 2 == 0 {
            for a in &by_weight[k / 2] {
                if a.degree() % 2 == 0 && !a.is_self_bracket() {
                    let cand = Bracket::node(a.clone(), a.clone());
                    if keep(&cand) {
                        found.push(cand);
                    }
                }
            }
        }
        by_weight[k] = found;
    }

    let mut all: Vec<Bracket> = by_weight.into_iter().flatten().collect();
    all.sort_by(|a, b| a.order_cmp(b));
    Ok(all)
}

fn q_degree(d: u64, p: Prime) -> u64 {
    let p = p.get() as u64;
    p * d + p - 1
}

/// Generators of the free graded commutative algebra built from basic
/// brackets, up to the given weight.
///
/// At p = 2 every bracket `x` contributes its tower `Q^i x`, `i ≥ 0`. At odd
/// p, even brackets are polynomial generators, and odd brackets contribute
/// `Q^i x` (`i ≥ 0`) and `β Q^i x` (`i ≥ 1`). When all brackets come from a
/// single label the named families (ι, u, α, β, Q^iι, sphere classes) are used.
pub fn cohen_generators(brackets: &[Bracket], p: Prime, weight_bound: u64) -> Vec<Generator> {
    let mut names = HashSet::new();
    for b in brackets {
        b.collect_labels(&mut names);
    }
    let single = names.len() == 1;

    let point_leaf = |x: &Bracket| matches!(x, Bracket::Leaf(l) if l.degree == 0);
    let sphere_leaf = |x: &Bracket| matches!(x, Bracket::Leaf(l) if l.degree > 0);
    let point_square = |x: &Bracket| matches!(x, Bracket::Node(a, b) if a == b && point_leaf(a));

    let named = |x: &Bracket, i: u32, bockstein: bool| -> GenKind {
        if single {
            match (i, bockstein) {
                (0, false) if point_leaf(x) => return GenKind::Iota,
                (0, false) if point_square(x) => return GenKind::U,
                (_, false) if sphere_leaf(x) => return GenKind::SphereQ(i),
                (_, true) if sphere_leaf(x) => return GenKind::SphereBQ(i),
                (_, false) if point_leaf(x) && p.is_two() => return GenKind::QIota(i),
                (_, false) if point_square(x) => return GenKind::Alpha(i),
                (_, true) if point_square(x) => return GenKind::Beta(i),
                _ => {}
            }
        }
        if i == 0 && !bockstein {
            GenKind::Bracket(x.clone())
        } else {
            GenKind::Dyer {
                base: x.clone(),
                power: i,
                bockstein,
            }
        }
    };

    let pw = p.get() as u64;
    let mut out = Vec::new();
    for x in brackets {
        let (w0, d0) = (x.weight(), x.degree());
        if w0 > weight_bound {
            continue;
        }
        if !p.is_two() && d0 % 2 == 0 {
            out.push(Generator::new(named(x, 0, false), w0, d0, p));
            continue;
        }
        let (mut w, mut d, mut i) = (w0, d0, 0u32);
        loop {
            out.push(Generator::new(named(x, i, false), w, d, p));
            if i >= 1 && !p.is_two() {
                out.push(Generator::new(named(x, i, true), w, d - 1, p));
            }
            if w * pw > weight_bound {
                break;
            }
            w *= pw;
            d = if p.is_two() {
                2 * d + 1
            } else {
                q_degree(d, p)
            };
            i += 1;
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(n: u32) -> Prime {
        Prime::new(n).unwrap()
    }

    fn texts(bs: &[Bracket]) -> Vec<String> {
        bs.iter().map(|b| b.to_string()).collect()
    }

    #[test]
    fn single_even_label() {
        let bs = enumerate_basic_brackets(&[LabelClass::new("a", 0)], 4, prime(3)).unwrap();
        assert_eq!(texts(&bs), ["a", "[a,a]"]);
        assert_eq!(bs[1].degree(), 1);
        // no self-bracket at p = 2
        let bs = enumerate_basic_brackets(&[LabelClass::new("a", 0)], 4, prime(2)).unwrap();
        assert_eq!(texts(&bs), ["a"]);
    }

    #[test]
    fn odd_label_has_no_square() {
        for q in 0..3 {
            let bs =
                enumerate_basic_brackets(&[LabelClass::new("i", 2 * q + 1)], 2, prime(5)).unwrap();
            assert_eq!(texts(&bs), ["i"]);
        }
    }

    #[test]
    fn one_white_particle_sector() {
        let labels = [LabelClass::new("a", 0), LabelClass::new("b", 0)];
        let bs = enumerate_basic_brackets(&labels, 4, prime(3)).unwrap();
        let white: Vec<String> = bs
            .iter()
            .filter(|b| b.count_label("b") == 1)
            .map(|b| b.to_string())
            .collect();
        assert_eq!(white, ["b", "[a,b]", "[a,[a,b]]", "[a,[a,[a,b]]]"]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(enumerate_basic_brackets(&[LabelClass::new("a", 0)], 0, prime(2)).is_err());
        assert!(enumerate_basic_brackets(&[], 3, prime(2)).is_err());
        let dup = [LabelClass::new("a", 0), LabelClass::new("a", 1)];
        assert!(enumerate_basic_brackets(&dup, 3, prime(2)).is_err());
    }

    #[test]
    fn cohen_table_p3() {
        let p = prime(3);
        let bs = enumerate_basic_brackets(&[LabelClass::new("a", 0)], 18, p).unwrap();
        let gens = cohen_generators(&bs, p, 18);
        let got: Vec<(String, u64, u64)> = gens
            .iter()
            .map(|g| (g.to_string(), g.weight(), g.degree()))
            .collect();
        let want = [
            ("i", 1, 0),
            ("u", 2, 1),
            ("b1", 6, 4),
            ("a1", 6, 5),
            ("b2", 18, 16),
            ("a2", 18, 17),
        ];
        let want: Vec<(String, u64, u64)> = want
            .iter()
            .map(|(s, w, d)| (s.to_string(), *w, *d))
            .collect();
        assert_eq!(got, want);
        for g in &gens {
            assert_eq!(
                g,
                &Generator::new(g.kind().clone(), g.weight(), g.degree(), p)
            );
        }
        assert_eq!(gens[2], Generator::beta(1, p));
        assert_eq!(gens[5], Generator::alpha(2, p));
    }

    #[test]
    fn cohen_table_p2() {
        let p = prime(2);
        let bs = enumerate_basic_brackets(&[LabelClass::new("a", 0)], 8, p).unwrap();
        let gens = cohen_generators(&bs, p, 8);
        let want = vec![
            Generator::iota(),
            Generator::q_iota(1),
            Generator::q_iota(2),
            Generator::q_iota(3),
        ];
        assert_eq!(gens, want);
    }

    #[test]
    fn sphere_towers() {
        let p = prime(3);
        for q in 0..3u64 {
            let m = 2 * q + 1;
            let bs = enumerate_basic_brackets(&[LabelClass::new("s", m)], 9, p).unwrap();
            let gens = cohen_generators(&bs, p, 9);
            let mut want = vec![Generator::sphere_q(0, p, m)];
            for i in 1..=2 {
                want.push(Generator::sphere_q(i, p, m));
                want.push(Generator::sphere_bq(i, p, m));
            }
            want.sort();
            assert_eq!(gens, want);
        }
    }

    #[test]
    fn generic_labels_use_dyer_kind() {
        let p = prime(3);
        let labels = [LabelClass::new("a", 0), LabelClass::new("b", 0)];
        let bs = enumerate_basic_brackets(&labels, 2, p).unwrap();
        let gens = cohen_generators(&bs, p, 6);
        let names: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        assert!(names.contains(&"[a,b]".to_string()));
        assert!(names.contains(&"Q1([a,b])".to_string()));
        assert!(names.contains(&"bQ1([a,b])".to_string()));
        for g in &gens {
            if let GenKind::Dyer { base, power, .. } = g.kind() {
                assert_eq!(g.weight(), base.weight() * 3u64.pow(*power));
            }
        }
    }
}
